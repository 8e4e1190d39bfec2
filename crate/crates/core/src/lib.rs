//! Vectorial hyper-bent functions of the PS_ap# class over GF(2^(2m)).
//!
//! The crate builds, checks and counts maps `F: GF(2^n) -> F_2^k`, `n = 2m`,
//! that are constant on the cosets `u F_(2^m)^*` and vanish at zero. Such a
//! map is hyper-bent exactly when its values on the order-`(2^m + 1)`
//! subgroup `U` have the right multiset, and every check here is paired with
//! the definitional extended Walsh–Hadamard oracle so the two can be compared.
//!
//! Modules:
//! - [`gf2n`]: field arithmetic, traces, subfields, dual bases
//! - [`walsh`]: truth tables, spectra, bent / hyper-bent oracles
//! - [`vectorial`]: components, group-ring multisets, the equivalent conditions
//! - [`psap`]: `U`, lifting, `T_u0`, balanced composition, Dickson, trace forms
//! - [`enumeration`]: exact counts, canonical generation, exhaustive oracle
//! - [`msequence`]: crosscorrelation spectra and the decimation catalogue

pub mod enumeration;
pub mod error;
pub mod gf2n;
pub mod limits;
pub mod msequence;
pub mod psap;
pub mod vectorial;
pub mod walsh;

pub use error::{Error, Result};
pub use gf2n::{dual_basis, make_field, ArithOp, DualBasisPair, FieldContext, FieldElement, Subfield};
pub use limits::Limits;
pub use psap::{lift_g_to_f, make_ugroup, restrict_f_to_g, GFunction, UGroup};
pub use vectorial::{GroupRingElement, VectorialFunction};
pub use walsh::{BooleanFunction, WalshSpectrum};
