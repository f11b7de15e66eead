//! The JSON triplet document: the on-disk interchange format. Rational
//! entries are `"p/q"` strings in lowest terms so round trips are
//! bit-exact; complex entries are `[re, im]` pairs of full-precision
//! doubles.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use yangbax::{Complex, Rational, RationalTriplet, Scalar, Triplet, VertexMatrix};

use crate::CliError;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Rational,
    Complex,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Rational(String),
    Complex([f64; 2]),
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Matrices {
    #[serde(rename = "A")]
    pub a: Vec<Vec<Entry>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Entry>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<Entry>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TripletDocument {
    pub format_version: String,
    pub scalar_mode: ScalarMode,
    pub matrices: Matrices,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

/// A parsed document: one concrete scalar realization.
#[allow(clippy::large_enum_variant)]
pub enum DocTriplet {
    Rational(RationalTriplet),
    Complex(Triplet<Complex>),
}

fn rational_rows(m: &VertexMatrix<Rational>) -> Vec<Vec<Entry>> {
    (0..4)
        .map(|r| (0..4).map(|c| Entry::Rational(m.at(r, c).to_string())).collect())
        .collect()
}

fn complex_rows(m: &VertexMatrix<Complex>) -> Vec<Vec<Entry>> {
    (0..4)
        .map(|r| {
            (0..4)
                .map(|c| Entry::Complex([m.at(r, c).re, m.at(r, c).im]))
                .collect()
        })
        .collect()
}

impl TripletDocument {
    pub fn from_rational(t: &RationalTriplet, provenance: Option<Provenance>) -> Self {
        TripletDocument {
            format_version: FORMAT_VERSION.to_string(),
            scalar_mode: ScalarMode::Rational,
            matrices: Matrices {
                a: rational_rows(&t.a),
                b: rational_rows(&t.b),
                c: rational_rows(&t.c),
            },
            provenance,
        }
    }

    pub fn from_complex(t: &Triplet<Complex>, provenance: Option<Provenance>) -> Self {
        TripletDocument {
            format_version: FORMAT_VERSION.to_string(),
            scalar_mode: ScalarMode::Complex,
            matrices: Matrices {
                a: complex_rows(&t.a),
                b: complex_rows(&t.b),
                c: complex_rows(&t.c),
            },
            provenance,
        }
    }

    pub fn from_triplet(t: &DocTriplet, provenance: Option<Provenance>) -> Self {
        match t {
            DocTriplet::Rational(t) => Self::from_rational(t, provenance),
            DocTriplet::Complex(t) => Self::from_complex(t, provenance),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        let doc: TripletDocument = serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("cannot parse {}: {e}", path.display())))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(CliError::usage(format!(
                "unsupported format_version {:?}",
                doc.format_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serialization");
        s.push('\n');
        s
    }

    fn matrix_of<T: Scalar>(
        rows: &[Vec<Entry>],
        parse: &impl Fn(&Entry) -> Result<T, CliError>,
    ) -> Result<VertexMatrix<T>, CliError> {
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
            return Err(CliError::usage("matrices must be 4x4".into()));
        }
        let mut m = VertexMatrix::zero();
        for (r, row) in rows.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                m.set(r, c, parse(entry)?);
            }
        }
        Ok(m)
    }

    pub fn parse_triplet(&self) -> Result<DocTriplet, CliError> {
        match self.scalar_mode {
            ScalarMode::Rational => {
                let parse = |e: &Entry| -> Result<Rational, CliError> {
                    match e {
                        Entry::Rational(s) => Rational::from_str(s)
                            .map_err(|err| CliError::usage(format!("bad rational {s:?}: {err}"))),
                        Entry::Complex(_) => Err(CliError::usage(
                            "complex entry in a rational-mode document".into(),
                        )),
                    }
                };
                Ok(DocTriplet::Rational(Triplet::new(
                    Self::matrix_of(&self.matrices.a, &parse)?,
                    Self::matrix_of(&self.matrices.b, &parse)?,
                    Self::matrix_of(&self.matrices.c, &parse)?,
                )))
            }
            ScalarMode::Complex => {
                let parse = |e: &Entry| -> Result<Complex, CliError> {
                    match e {
                        Entry::Complex([re, im]) => Ok(Complex::new(*re, *im)),
                        Entry::Rational(s) => Err(CliError::usage(format!(
                            "rational entry {s:?} in a complex-mode document"
                        ))),
                    }
                };
                Ok(DocTriplet::Complex(Triplet::new(
                    Self::matrix_of(&self.matrices.a, &parse)?,
                    Self::matrix_of(&self.matrices.b, &parse)?,
                    Self::matrix_of(&self.matrices.c, &parse)?,
                )))
            }
        }
    }
}
