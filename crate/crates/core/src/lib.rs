//! Matrix models for the Duskin nerve of suspension 2-categories.
//!
//! The central object is [`matset::MatSet`], the simplicial set of
//! matrices valued in a finite category, together with the comparison map
//! into the Duskin nerve of a (multi-)suspension in [`duskin`].

pub mod duskin;
pub mod fincat;
pub mod freecell;
pub mod matset;
pub mod paths;
pub mod simplicial;
pub mod theta2;
pub mod verify;
