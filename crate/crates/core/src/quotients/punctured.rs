use std::fmt;

use super::{add, dot, join_factors, mul, push_factor, same_shape, sub, vadd, vneg, GroupElt};
use crate::error::{Error, Result};
use crate::words::{Family, GroupParams, Letter, Word};

/// Element `σ^p ∏ ζ_i^{q_i} ∏ a_i^{m_i} ∏ b_i^{n_i}` of B_k(Σ_{g,n})/Γ₃.
/// The ζ_i stay distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuncturedGamma3Elt {
    pub p: i64,
    pub qz: Vec<i64>,
    pub m: Vec<i64>,
    pub nv: Vec<i64>,
}

/// Element `σ^p ζ^r ∏ a_i^{m_i} ∏ b_i^{n_i}` of G_k(Σ_g).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GkSurfaceElt {
    pub p: i64,
    pub r: i64,
    pub m: Vec<i64>,
    pub nv: Vec<i64>,
}

fn inner_letter(l: &Letter, context: &str) -> Result<()> {
    if l.gen.family.is_outer() {
        return Err(Error::Alphabet {
            letter: l.gen.to_string(),
            context: context.into(),
        });
    }
    Ok(())
}

impl PuncturedGamma3Elt {
    pub fn identity(n: usize, g: usize) -> Self {
        PuncturedGamma3Elt {
            p: 0,
            qz: vec![0; n],
            m: vec![0; g],
            nv: vec![0; g],
        }
    }
}

impl GroupElt for PuncturedGamma3Elt {
    fn mul(&self, y: &Self) -> Result<Self> {
        let x = self;
        same_shape(&[
            (x.qz.len(), y.qz.len()),
            (x.m.len(), y.m.len()),
            (x.nv.len(), y.nv.len()),
        ])?;
        Ok(PuncturedGamma3Elt {
            p: sub(add(x.p, y.p)?, mul(2, dot(&x.nv, &y.m)?)?)?,
            qz: vadd(&x.qz, &y.qz)?,
            m: vadd(&x.m, &y.m)?,
            nv: vadd(&x.nv, &y.nv)?,
        })
    }

    fn inv(&self) -> Result<Self> {
        Ok(PuncturedGamma3Elt {
            p: sub(super::neg(self.p)?, mul(2, dot(&self.nv, &self.m)?)?)?,
            qz: vneg(&self.qz)?,
            m: vneg(&self.m)?,
            nv: vneg(&self.nv)?,
        })
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.qz.len(), self.m.len())
    }

    fn is_identity(&self) -> bool {
        self.p == 0
            && [&self.qz, &self.m, &self.nv]
                .iter()
                .all(|v| v.iter().all(|&c| c == 0))
    }
}

impl fmt::Display for PuncturedGamma3Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        push_factor(&mut out, "s", self.p);
        for (i, &q) in self.qz.iter().enumerate() {
            push_factor(&mut out, &format!("z{}", i + 1), q);
        }
        for (i, &e) in self.m.iter().enumerate() {
            push_factor(&mut out, &format!("a{}", i + 1), e);
        }
        for (i, &e) in self.nv.iter().enumerate() {
            push_factor(&mut out, &format!("b{}", i + 1), e);
        }
        join_factors(f, &out)
    }
}

/// ρ_k: B_k(Σ_{g,n}) → B_k(Σ_{g,n})/Γ₃. Requires k ≥ 3; letters from
/// S ∪ AB ∪ Z only.
pub fn eval_punctured_gamma3(w: &Word, params: &GroupParams) -> Result<PuncturedGamma3Elt> {
    params.require(params.k >= 3, "k >= 3")?;
    w.validate(params)?;
    let (n, g) = (params.n, params.g);
    let mut acc = PuncturedGamma3Elt::identity(n, g);
    for l in w.letters() {
        inner_letter(l, "B_k(Σ_{g,n}) words (S ∪ AB ∪ Z)")?;
        let mut x = PuncturedGamma3Elt::identity(n, g);
        let slot = l.gen.index.saturating_sub(1);
        match l.gen.family {
            Family::Sigma => x.p = l.exp,
            Family::A => x.m[slot] = l.exp,
            Family::B => x.nv[slot] = l.exp,
            Family::Zeta if !l.gen.is_collapsed() => x.qz[slot] = l.exp,
            _ => {
                return Err(Error::Alphabet {
                    letter: l.gen.to_string(),
                    context: "B_k(Σ_{g,n})/Γ₃ (the ζ_i are not identified)".into(),
                })
            }
        }
        acc = acc.mul(&x)?;
    }
    Ok(acc)
}

impl GkSurfaceElt {
    pub fn identity(g: usize) -> Self {
        GkSurfaceElt {
            p: 0,
            r: 0,
            m: vec![0; g],
            nv: vec![0; g],
        }
    }

    pub fn central(g: usize, p: i64, r: i64) -> Self {
        GkSurfaceElt {
            p,
            r,
            ..Self::identity(g)
        }
    }

    pub fn is_central(&self) -> bool {
        self.m.iter().chain(&self.nv).all(|&c| c == 0)
    }
}

impl GroupElt for GkSurfaceElt {
    fn mul(&self, y: &Self) -> Result<Self> {
        let x = self;
        same_shape(&[(x.m.len(), y.m.len()), (x.nv.len(), y.nv.len())])?;
        Ok(GkSurfaceElt {
            p: sub(add(x.p, y.p)?, mul(2, dot(&x.nv, &y.m)?)?)?,
            r: add(x.r, y.r)?,
            m: vadd(&x.m, &y.m)?,
            nv: vadd(&x.nv, &y.nv)?,
        })
    }

    fn inv(&self) -> Result<Self> {
        Ok(GkSurfaceElt {
            p: sub(super::neg(self.p)?, mul(2, dot(&self.nv, &self.m)?)?)?,
            r: super::neg(self.r)?,
            m: vneg(&self.m)?,
            nv: vneg(&self.nv)?,
        })
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.m.len())
    }

    fn is_identity(&self) -> bool {
        self.p == 0 && self.r == 0 && self.is_central()
    }
}

impl fmt::Display for GkSurfaceElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = Vec::new();
        push_factor(&mut out, "s", self.p);
        push_factor(&mut out, "z", self.r);
        for (i, &e) in self.m.iter().enumerate() {
            push_factor(&mut out, &format!("a{}", i + 1), e);
        }
        for (i, &e) in self.nv.iter().enumerate() {
            push_factor(&mut out, &format!("b{}", i + 1), e);
        }
        join_factors(f, &out)
    }
}

/// Φ_k: B_k(Σ_{g,n}) → G_k(Σ_g), with σ_i ↦ σ and ζ_i ↦ ζ.
/// Requires k, n ≥ 3 and g ≥ 1.
pub fn eval_gk_surface(w: &Word, params: &GroupParams) -> Result<GkSurfaceElt> {
    params.require(
        params.k >= 3 && params.n >= 3 && params.g >= 1,
        "k, n >= 3 and g >= 1",
    )?;
    w.validate(params)?;
    let g = params.g;
    let mut acc = GkSurfaceElt::identity(g);
    for l in w.letters() {
        inner_letter(l, "B_k(Σ_{g,n}) words (S ∪ AB ∪ Z)")?;
        let mut x = GkSurfaceElt::identity(g);
        let slot = l.gen.index.saturating_sub(1);
        match l.gen.family {
            Family::Sigma => x.p = l.exp,
            Family::Zeta => x.r = l.exp,
            Family::A => x.m[slot] = l.exp,
            Family::B => x.nv[slot] = l.exp,
            _ => unreachable!("outer letters rejected above"),
        }
        acc = acc.mul(&x)?;
    }
    Ok(acc)
}

/// The map B_k(Σ_{g,n})/Γ₃ → M_k(Σ_g) ≅ G_k(Σ_g) identifying all ζ_i.
pub fn mk_reduce(x: &PuncturedGamma3Elt) -> Result<GkSurfaceElt> {
    let r = x.qz.iter().try_fold(0i64, |acc, &q| add(acc, q))?;
    Ok(GkSurfaceElt {
        p: x.p,
        r,
        m: x.m.clone(),
        nv: x.nv.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn params() -> GroupParams {
        GroupParams::new(3, 3, 1).unwrap()
    }

    fn punct(text: &str) -> PuncturedGamma3Elt {
        eval_punctured_gamma3(&parse_word(text, &params()).unwrap(), &params()).unwrap()
    }

    fn gk(text: &str, p: &GroupParams) -> GkSurfaceElt {
        eval_gk_surface(&parse_word(text, p).unwrap(), p).unwrap()
    }

    #[test]
    fn punctured_keeps_zetas_apart() {
        let x = punct("z1 z2^-1");
        assert_eq!(x.qz, vec![1, -1, 0]);
        assert!(!x.is_identity());
    }

    #[test]
    fn punctured_collects_b_past_a() {
        let x = punct("b1 a1");
        assert_eq!((x.p, x.m[0], x.nv[0]), (-2, 1, 1));
        assert!(punct("s1 s2^-1").is_identity());
    }

    #[test]
    fn punctured_rejects_outer_letters() {
        let w = parse_word("ta1", &params()).unwrap();
        assert!(matches!(
            eval_punctured_gamma3(&w, &params()),
            Err(Error::Alphabet { .. })
        ));
    }

    #[test]
    fn gk_examples() {
        assert!(gk("z1 z2^-1", &params()).is_identity());
        assert_eq!(
            gk("a1 b1 a1^-1 b1^-1", &params()),
            GkSurfaceElt::central(1, 2, 0)
        );
        let p2 = GroupParams::new(3, 3, 2).unwrap();
        assert!(gk("a1 b2 a1^-1 b2^-1", &p2).is_identity());
    }

    #[test]
    fn gk_requires_genus() {
        let p0 = GroupParams::new(3, 3, 0).unwrap();
        let w = parse_word("s1", &p0).unwrap();
        assert!(matches!(
            eval_gk_surface(&w, &p0),
            Err(Error::Regime { .. })
        ));
    }

    #[test]
    fn mk_reduce_sums_zetas() {
        let x = PuncturedGamma3Elt {
            qz: vec![1, -1, 0],
            ..PuncturedGamma3Elt::identity(3, 1)
        };
        assert_eq!(mk_reduce(&x).unwrap().r, 0);
        let x = PuncturedGamma3Elt {
            p: 1,
            qz: vec![2, 3, 0],
            ..PuncturedGamma3Elt::identity(3, 1)
        };
        let y = mk_reduce(&x).unwrap();
        assert_eq!((y.p, y.r), (1, 5));
    }

    #[test]
    fn mk_reduce_composes_to_gk() {
        let w = parse_word("b1 a1 z2", &params()).unwrap();
        let lhs = mk_reduce(&eval_punctured_gamma3(&w, &params()).unwrap()).unwrap();
        let rhs = eval_gk_surface(&w, &params()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.to_string(), "s^-2 z a1 b1");
    }
}
