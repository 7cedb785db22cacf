//! Crystal bases of irreducible G2 modules.
//!
//! Three realizations of `B(λ)` are built here: Nakajima monomials
//! (standard and negative highest monomials), the X-letter words that
//! factor them, and two-row tableaux of shape `λ = mΛ1 + nΛ2`. The
//! [`iso`] module relates them and [`verify`] checks them against each
//! other.

pub mod cartan;
pub mod error;
pub mod graph;
pub mod iso;
pub mod monomial;
pub mod tableaux;
pub mod verify;
pub mod xalgebra;

pub use cartan::{weyl_dim, Index, Weight};
pub use error::{Error, Result};
pub use graph::{generate, Crystal, CrystalGraph, GraphDoc, DEFAULT_VERTEX_CAP};
pub use iso::{check_isomorphic, psi, psi_inv, transport};
pub use monomial::{CrystalConfig, Monomial, MonomialCrystal, Variant};
pub use tableaux::{Kind, Tableau, TableauCrystal};
pub use verify::Realization;
pub use xalgebra::{normal_form, XLetter, XWord};
