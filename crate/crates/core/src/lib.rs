//! Laurent polynomial matrices, free group automorphisms and word machinery
//! for braid-like groups and the crystallographic quotients they carry.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod autreps;
pub mod error;
pub mod free;
pub mod matrix;
pub mod presentations;
pub mod reps;
pub mod schreier;
pub mod tn;
pub mod vp3;
pub mod ring;
pub mod words;

pub use error::{Error, Result};
pub use matrix::{MonomialDecomposition, PolyMatrix};
pub use ring::{LaurentPoly, VarSet};
pub use words::{GenSym, GroupTag, GroupWord, PermHom, Permutation};
