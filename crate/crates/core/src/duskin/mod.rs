//! Strict 2-categories, their Duskin nerves, and the comparison with
//! matrices.

mod nerve;
mod phi;
mod suspension;
mod twocat;

pub use nerve::{nerve_simplices, pasting_relation_holds, DuskinNerve, DuskinSimplex, NerveError, Triangle};
pub use phi::{phi, phi_commutes_with_faces, phi_inverse, phi_inverse_by_fill, PhiError};
pub use suspension::{multi_suspension, suspension, CellLabel, MultiSuspension};
pub use twocat::{TwoCategory, TwoCategoryData, TwoCategoryError};
