//! Constructors for the solution families and their parameter maps.

pub mod baxter;
pub mod eight_vertex;
pub mod five_vertex;
pub mod six_vertex;
