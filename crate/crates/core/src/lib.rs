//! Cyclic codes over the chain ring `R = GF(q) + u GF(q)`, `u^2 = 0`.
//!
//! Codes are ideals of `R[x]/(x^n - 1)` held in the canonical form
//! `<g + u p, u a>` with `a | g | x^n - 1`, `deg p < deg a` and
//! `a | p (x^n - 1)/g`.

pub mod code;
pub mod codewords;
pub mod distance;
pub mod duality;
pub mod error;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod literal;
pub mod poly;
pub mod reversibility;
pub mod ring;
pub mod verify;

pub use code::{canonicalize_ideal, cyclic_shift, enumerate_codes, from_span, CyclicCode};
pub use codewords::{CodewordSet, DEFAULT_BUDGET, MAX_BUDGET};
pub use error::{Error, Result};
pub use factor::{factor_xn_minus_1, CyclotomicCoset, Divisor, Factorization};
pub use field::{mult_order, Field, FieldElement};
pub use poly::{word_reverse, Poly, Word};
pub use ring::{RElement, RPoly};
pub use distance::{min_distance, min_distance_oracle, residue_code, DistanceMethod, DistanceReport};
pub use duality::{annihilator, dual, dual_oracle, is_dual_reversible, DualMethod, DualReport};
pub use reversibility::{
    classify_all, is_reversible, is_reversible_oracle, ReversibilityBranch, ReversibilityVerdict,
};
pub use verify::{verify, Check, VerifyReport};
