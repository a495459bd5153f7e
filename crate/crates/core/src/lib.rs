//! Combinatorics behind the classification of Kostant-positive parabolic
//! Verma modules in the principal block of parabolic category O for `sl_n`.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! * [`perm`]: permutations of `{1..n}` in one-line notation, length,
//!   descents, Bruhat order, reduced words, parabolic subgroups and shortest
//!   coset representatives of `W_p \ W`.
//! * [`bigrass`]: bigrassmannian permutations, Bruhat intervals and the
//!   maximal-bigrassmannian socle descriptor.
//! * [`laurent`], [`kl`], [`cells`]: Kazhdan-Lusztig polynomials, graded
//!   (parabolic) Verma multiplicities, RSK and Kazhdan-Lusztig cells.
//! * [`minpar`]: the minimal parabolic `p_k` classifier.
//! * [`cupcalc`]: weight words and oriented cup diagrams for the maximal
//!   parabolic `q_k`, thinness and the maximal parabolic classifier.
//! * [`genpar`]: arbitrary compositions, the sufficient-positivity and
//!   necessary-negativity predicates, and a three-valued classifier.
//!
//! Permutations compose right to left: `p.compose(&q)` is `i -> p(q(i))`.

#![no_std]

extern crate alloc;

pub mod bigrass;
pub mod cells;
pub mod cupcalc;
mod error;
pub mod genpar;
pub mod kl;
pub mod laurent;
pub mod minpar;
pub mod perm;

pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use perm::{Permutation, SimpleReflectionSet};

/// Three-valued answer to Kostant's problem for a parabolic Verma module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Positive,
    Negative,
    /// Neither the sufficient-positivity nor the non-thin criterion applies.
    Unknown,
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Verdict::Positive => "Positive",
            Verdict::Negative => "Negative",
            Verdict::Unknown => "Unknown",
        })
    }
}
