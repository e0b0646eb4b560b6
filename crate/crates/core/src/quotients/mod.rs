//! Normal-form arithmetic in the abelian and class-2 quotients, and the
//! evaluation maps sending words to them.
//!
//! All coordinates are `i64` with checked arithmetic; overflow surfaces as
//! [`Error::Overflow`].

mod abel;
mod mixed;
mod punctured;

use std::fmt;

pub use abel::{eval_abel, AbelElt, AbelLayout};
pub use mixed::{
    eval_hsigma, eval_mixed_gamma3, is_central_mixed, project_hsigma, Gamma3MixedElt, HSigmaElt,
};
pub use punctured::{
    eval_gk_surface, eval_punctured_gamma3, mk_reduce, GkSurfaceElt, PuncturedGamma3Elt,
};

use crate::error::{Error, Result};
use crate::presentations::QuotientKind;
use crate::words::{parse_word_collapsed, GroupParams, Word};

/// Group operations shared by every quotient element type.
pub trait GroupElt: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn mul(&self, other: &Self) -> Result<Self>;
    fn inv(&self) -> Result<Self>;
    /// The identity of the group `self` lives in.
    fn identity_like(&self) -> Self;
    fn is_identity(&self) -> bool;

    /// `x y x⁻¹ y⁻¹`.
    fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.mul(&self.inv()?)?.mul(&other.inv()?)
    }

    fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.identity_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or(Error::Overflow("quotient arithmetic"))
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b)
        .ok_or(Error::Overflow("quotient arithmetic"))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or(Error::Overflow("quotient arithmetic"))
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg()
        .ok_or(Error::Overflow("quotient arithmetic"))
}

pub(crate) fn dot(u: &[i64], v: &[i64]) -> Result<i64> {
    u.iter()
        .zip(v)
        .try_fold(0i64, |acc, (&a, &b)| add(acc, mul(a, b)?))
}

pub(crate) fn vadd(u: &[i64], v: &[i64]) -> Result<Vec<i64>> {
    u.iter().zip(v).map(|(&a, &b)| add(a, b)).collect()
}

pub(crate) fn vneg(u: &[i64]) -> Result<Vec<i64>> {
    u.iter().map(|&a| neg(a)).collect()
}

pub(crate) fn same_shape(lens: &[(usize, usize)]) -> Result<()> {
    if lens.iter().all(|(a, b)| a == b) {
        Ok(())
    } else {
        Err(Error::Invalid(
            "elements from differently shaped groups".into(),
        ))
    }
}

/// Appends `name^e` to a normal-form rendering, skipping zero exponents and
/// writing `name` for exponent 1.
pub(crate) fn push_factor(out: &mut Vec<String>, name: &str, e: i64) {
    match e {
        0 => {}
        1 => out.push(name.to_string()),
        _ => out.push(format!("{name}^{e}")),
    }
}

pub(crate) fn join_factors(f: &mut fmt::Formatter<'_>, factors: &[String]) -> fmt::Result {
    if factors.is_empty() {
        write!(f, "1")
    } else {
        write!(f, "{}", factors.join(" "))
    }
}

/// An element of any of the supported quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientElt {
    Mixed(Gamma3MixedElt),
    Punctured(PuncturedGamma3Elt),
    Gk(GkSurfaceElt),
    HSigma(HSigmaElt),
    Abel(AbelElt),
}

impl fmt::Display for QuotientElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientElt::Mixed(x) => x.fmt(f),
            QuotientElt::Punctured(x) => x.fmt(f),
            QuotientElt::Gk(x) => x.fmt(f),
            QuotientElt::HSigma(x) => x.fmt(f),
            QuotientElt::Abel(x) => x.fmt(f),
        }
    }
}

impl QuotientElt {
    pub fn is_identity(&self) -> bool {
        match self {
            QuotientElt::Mixed(x) => x.is_identity(),
            QuotientElt::Punctured(x) => x.is_identity(),
            QuotientElt::Gk(x) => x.is_identity(),
            QuotientElt::HSigma(x) => x.is_identity(),
            QuotientElt::Abel(x) => x.is_identity(),
        }
    }
}

/// Evaluates `w` in the quotient named by `kind`. The braid-group kinds
/// (`*Full`, `BaseFull`) have no normal form and are rejected.
pub fn eval_in(w: &Word, params: &GroupParams, kind: QuotientKind) -> Result<QuotientElt> {
    use QuotientKind::*;
    Ok(match kind {
        MixedGamma3 => QuotientElt::Mixed(eval_mixed_gamma3(w, params)?),
        PuncturedGamma3 => QuotientElt::Punctured(eval_punctured_gamma3(w, params)?),
        GkSurface => QuotientElt::Gk(eval_gk_surface(w, params)?),
        HSigma => QuotientElt::HSigma(eval_hsigma(w, params)?),
        MixedAbel | PuncturedAbel => QuotientElt::Abel(eval_abel(w, params, kind)?),
        MixedFull | PuncturedFull | BaseFull => {
            return Err(Error::Invalid(format!(
                "{kind} has no normal-form arithmetic"
            )))
        }
    })
}

/// Parses a word or a printed normal form and evaluates it in `kind`.
pub fn parse_element(text: &str, params: &GroupParams, kind: QuotientKind) -> Result<QuotientElt> {
    let w = parse_word_collapsed(text, params)?;
    eval_in(&w, params, kind)
}
