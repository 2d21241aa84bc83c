//! Exact computation of the equivariant K-theory Chevalley formula on flag
//! varieties of finite-type semisimple groups.
//!
//! The product of a line bundle class `[L_λ]` with a Schubert class `O_w` is
//! expanded as `Σ_v q^λ_{w,v} O_v` with coefficients in the representation
//! ring `ℤ[weight lattice]`. Coefficients come from a Bott–Samelson cell
//! recursion built on the split Demazure operators `T⁰`, `T¹`; every
//! intermediate expansion can be certified by restriction to torus fixed
//! points.
//!
//! ```
//! use kchevalley::{chevalley_expand, ExpandOptions, RootSystem, SchubertInput};
//!
//! let a2 = RootSystem::from_name("A2").unwrap();
//! let w = SchubertInput::Word("2,1,2".parse().unwrap());
//! let ex = chevalley_expand(&a2, &w, &a2.fundamental_weight(0), &ExpandOptions::default()).unwrap();
//! assert_eq!(ex.terms.len(), 3);
//! ```

pub mod bott_samelson;
pub mod chevalley;
pub mod error;
pub mod group_algebra;
pub mod render;
pub mod root_system;
pub mod weyl;

pub use bott_samelson::{BSExpansion, BottSamelson, CellIndex, LocalizationReport};
pub use chevalley::{
    check_positivity, chevalley_expand, chevalley_ordinary, table, verify_word_independence,
    ChevalleyExpansion, ExpandOptions, OrdinaryExpansion, SchubertInput,
};
pub use error::{Error, Result};
pub use group_algebra::GroupAlgebraElem;
pub use root_system::{CartanLetter, CartanSpec, RootSystem, Weight};
pub use weyl::{WeylElem, Word};
