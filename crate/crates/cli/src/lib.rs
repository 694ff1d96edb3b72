//! Command-line front end over `crystbraid-core`: output formats, the claim
//! registry and the suite runner.

pub mod claims;
pub mod emit;
pub mod suite;
