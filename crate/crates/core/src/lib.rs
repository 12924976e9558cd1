//! Permutation-group engine for automorphism orbits of finite groups,
//! conjugacy in wreath products, and exact multinomial orbit bounds.

pub mod autgrp;
pub mod catalog;
pub mod classes;
pub mod error;
pub mod field;
pub mod group;
pub mod io;
pub mod linear;
pub mod multinomial;
pub mod par;
pub mod perm;
pub mod wreath;
pub mod rational;
pub mod report;
pub mod stypes;
pub mod suites;

pub use error::{Error, Result};
pub use group::{ElementId, FiniteGroup};
pub use perm::{CycleSet, Permutation};
pub use num_rational::BigRational;
