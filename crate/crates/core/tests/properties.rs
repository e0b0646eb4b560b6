mod common;

use braidquot::homs::{alpha_kn, gamma_k, psi_bar, r_kn, GkElt};
use braidquot::presentations::{
    act_outer, mixed_generators, presentation_mixed, presentation_punctured, presentation_quotient,
    punctured_generators, QuotientKind,
};
use braidquot::quotients::{
    eval_abel, eval_gk_surface, eval_hsigma, eval_in, eval_mixed_gamma3, eval_punctured_gamma3,
    is_central_mixed, mk_reduce, parse_element, project_hsigma, Gamma3MixedElt, GroupElt,
    QuotientElt,
};
use braidquot::words::{commutator, parse_word, Generator, Word};
use common::*;
use proptest::prelude::*;

fn group_laws<T: GroupElt>(x: &T, y: &T, z: &T) -> Result<(), TestCaseError> {
    let e = x.identity_like();
    prop_assert_eq!(x.mul(y)?.mul(z)?, x.mul(&y.mul(z)?)?);
    prop_assert_eq!(&e.mul(x)?, x);
    prop_assert_eq!(&x.mul(&e)?, x);
    prop_assert!(x.mul(&x.inv()?)?.is_identity());
    prop_assert!(x.inv()?.mul(x)?.is_identity());
    Ok(())
}

proptest! {
    #[test]
    fn word_reduction_laws(w in word(mixed_generators(&params(3, 3, 1)), 16)) {
        let r = w.free_reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert_eq!(w.invert().invert(), w.clone());
        prop_assert!(w.concat(&w.invert()).free_reduce().is_empty());
        prop_assert_eq!(parse_word(&r.to_string(), &params(3, 3, 1)).unwrap(), r);
    }

    #[test]
    fn mixed_group_laws(x in mixed_elt(2, 5), y in mixed_elt(2, 5), z in mixed_elt(2, 5)) {
        group_laws(&x, &y, &z)?;
    }

    #[test]
    fn punctured_group_laws(x in punctured_elt(3, 2, 5), y in punctured_elt(3, 2, 5), z in punctured_elt(3, 2, 5)) {
        group_laws(&x, &y, &z)?;
    }

    #[test]
    fn gk_group_laws(x in gk_elt(2, 5), y in gk_elt(2, 5), z in gk_elt(2, 5)) {
        group_laws(&x, &y, &z)?;
    }

    #[test]
    fn hsigma_group_laws(x in hsigma_elt(2, 5), y in hsigma_elt(2, 5), z in hsigma_elt(2, 5)) {
        group_laws(&x, &y, &z)?;
    }

    #[test]
    fn abel_group_laws(
        u in word(mixed_generators(&params(3, 3, 1)), 10),
        v in word(mixed_generators(&params(3, 3, 1)), 10),
        w in word(mixed_generators(&params(3, 3, 1)), 10),
    ) {
        let p = params(3, 3, 1);
        let f = |w: &Word| eval_abel(w, &p, QuotientKind::MixedAbel).unwrap();
        group_laws(&f(&u), &f(&v), &f(&w))?;
    }

    #[test]
    fn evaluations_are_homomorphisms(
        u in word(mixed_generators(&params(3, 3, 2)), 12),
        v in word(mixed_generators(&params(3, 3, 2)), 12),
    ) {
        let p = params(3, 3, 2);
        let uv = u.concat(&v);
        prop_assert_eq!(
            eval_mixed_gamma3(&uv, &p)?,
            eval_mixed_gamma3(&u, &p)?.mul(&eval_mixed_gamma3(&v, &p)?)?
        );
        prop_assert_eq!(eval_hsigma(&uv, &p)?, eval_hsigma(&u, &p)?.mul(&eval_hsigma(&v, &p)?)?);
        let ab = |w: &Word| eval_abel(w, &p, QuotientKind::MixedAbel).unwrap();
        prop_assert_eq!(ab(&uv), ab(&u).mul(&ab(&v))?);
        prop_assert_eq!(project_hsigma(&eval_mixed_gamma3(&uv, &p)?), eval_hsigma(&uv, &p)?);
    }

    #[test]
    fn punctured_evaluations_are_homomorphisms(
        u in word(punctured_generators(&params(3, 4, 1)), 12),
        v in word(punctured_generators(&params(3, 4, 1)), 12),
    ) {
        let p = params(3, 4, 1);
        let uv = u.concat(&v);
        prop_assert_eq!(
            eval_punctured_gamma3(&uv, &p)?,
            eval_punctured_gamma3(&u, &p)?.mul(&eval_punctured_gamma3(&v, &p)?)?
        );
        prop_assert_eq!(eval_gk_surface(&uv, &p)?, eval_gk_surface(&u, &p)?.mul(&eval_gk_surface(&v, &p)?)?);
        let ab = |w: &Word| eval_abel(w, &p, QuotientKind::PuncturedAbel).unwrap();
        prop_assert_eq!(ab(&uv), ab(&u).mul(&ab(&v))?);
        prop_assert_eq!(mk_reduce(&eval_punctured_gamma3(&uv, &p)?)?, eval_gk_surface(&uv, &p)?);
    }

    #[test]
    fn normal_forms_parse_back(x in mixed_elt(2, 4)) {
        let p = params(3, 3, 2);
        let back = parse_element(&x.to_string(), &p, QuotientKind::MixedGamma3)?;
        prop_assert_eq!(back, QuotientElt::Mixed(x));
    }

    #[test]
    fn class_two_law(x in mixed_elt(2, 4), y in mixed_elt(2, 4), z in mixed_elt(2, 4)) {
        prop_assert!(x.commutator(&y.commutator(&z)?)?.is_identity());
        prop_assert!(is_central_mixed(&x.commutator(&y)?));
    }

    #[test]
    fn centre_is_the_commutant(x in mixed_elt(1, 2)) {
        let mut commutes = true;
        for y in Gamma3MixedElt::generator_images(1) {
            commutes &= x.commutator(&y)?.is_identity();
        }
        prop_assert_eq!(is_central_mixed(&x), commutes);
    }

    #[test]
    fn hsigma_kernel_is_sigma_tilde(x in mixed_elt(1, 1), q in -5i64..=5) {
        let only_q = Gamma3MixedElt { q, ..Gamma3MixedElt::identity(1) };
        prop_assert!(project_hsigma(&only_q).is_identity());
        let is_tilde_power = x == Gamma3MixedElt { q: x.q, ..Gamma3MixedElt::identity(1) };
        prop_assert_eq!(project_hsigma(&x).is_identity(), is_tilde_power);
    }

    /// b_j γ b_j⁻¹ = σ^{-2m_j} ζ^{-m̃_j} γ, equivalently [γ, b_j] = σ^{2m_j} ζ^{m̃_j}.
    #[test]
    fn conjugation_by_b(x in mixed_elt(2, 5), j in 0usize..2) {
        let b = Gamma3MixedElt::generator_images(2)[3 + 4 * j + 2].clone();
        prop_assert_eq!(b.nv[j], 1);
        let conj = b.mul(&x)?.mul(&b.inv()?)?;
        let c = conj.mul(&x.inv()?)?;
        prop_assert_eq!(&c, &Gamma3MixedElt::central(2, -2 * x.m[j], 0, -x.mt[j]));
        prop_assert_eq!(c.is_identity(), x.m[j] == 0 && x.mt[j] == 0);
        prop_assert_eq!(x.commutator(&b)?, Gamma3MixedElt::central(2, 2 * x.m[j], 0, x.mt[j]));
    }

    #[test]
    fn act_outer_is_multiplicative(
        u in word(punctured_generators(&params(3, 3, 1)), 8),
        v in word(punctured_generators(&params(3, 3, 1)), 8),
        t in 0usize..4,
    ) {
        let p = params(3, 3, 1);
        let gen = [Generator::sigma_tilde(1), Generator::sigma_tilde(2), Generator::a_tilde(1), Generator::b_tilde(1)][t];
        let lhs = act_outer(gen, &u.concat(&v))?;
        let rhs = act_outer(gen, &u)?.concat(&act_outer(gen, &v)?).free_reduce();
        prop_assert_eq!(lhs.free_reduce(), rhs);
        let rho_t = eval_mixed_gamma3(&gen.word(), &p)?;
        let direct = rho_t.mul(&eval_mixed_gamma3(&u, &p)?)?.mul(&rho_t.inv()?)?;
        prop_assert_eq!(eval_mixed_gamma3(&act_outer(gen, &u)?, &p)?, direct);
    }

    #[test]
    fn maps_are_homomorphisms(x in mixed_elt(1, 4), y in mixed_elt(1, 4), s in -4i64..=4, z in -4i64..=4) {
        let p = params(3, 3, 1);
        prop_assert_eq!(psi_bar(&x.mul(&y)?), psi_bar(&x).mul(&psi_bar(&y))?);
        prop_assert_eq!(project_hsigma(&x.mul(&y)?), project_hsigma(&x).mul(&project_hsigma(&y))?);
        let w = Word::from_pairs([(Generator::sigma(1), s), (Generator::zeta(2), z)]);
        let a = alpha_kn(&r_kn(&w, &p)?, &p)?;
        prop_assert_eq!(a.mul(&a)?, alpha_kn(&r_kn(&w.pow(2), &p)?, &p)?);
        let g1 = gamma_k(GkElt { s, z }, &p)?;
        let g2 = gamma_k(GkElt { s: 2 * s, z: 2 * z }, &p)?;
        prop_assert_eq!(g1.mul(&g1)?, g2);
    }

    #[test]
    fn genus_zero_gamma3_is_the_abelianisation(
        u in word(mixed_generators(&params(3, 4, 0)), 12),
        v in word(mixed_generators(&params(3, 4, 0)), 12),
    ) {
        let p = params(3, 4, 0);
        let (x, y) = (eval_mixed_gamma3(&u, &p)?, eval_mixed_gamma3(&v, &p)?);
        let ab = |w: &Word| eval_abel(w, &p, QuotientKind::MixedAbel).unwrap();
        prop_assert_eq!(ab(&u).free, vec![x.p, x.q, x.r]);
        prop_assert_eq!(x == y, ab(&u) == ab(&v));
    }
}

#[test]
fn relators_die_everywhere() {
    for k in [3, 4] {
        for n in [3, 4] {
            for g in [0, 1, 2] {
                let p = params(k, n, g);
                let mixed = presentation_mixed(&p).unwrap();
                for (r, label) in mixed.relators.iter().zip(&mixed.labels) {
                    assert!(
                        eval_mixed_gamma3(r, &p).unwrap().is_identity(),
                        "{p} {label}"
                    );
                    assert!(
                        eval_abel(r, &p, QuotientKind::MixedAbel)
                            .unwrap()
                            .is_identity(),
                        "{p} {label}"
                    );
                }
                let punct = presentation_punctured(&p);
                for (r, label) in punct.relators.iter().zip(&punct.labels) {
                    assert!(
                        eval_punctured_gamma3(r, &p).unwrap().is_identity(),
                        "{p} {label}"
                    );
                    assert!(
                        eval_abel(r, &p, QuotientKind::PuncturedAbel)
                            .unwrap()
                            .is_identity(),
                        "{p} {label}"
                    );
                }
                for kind in [
                    QuotientKind::MixedGamma3,
                    QuotientKind::HSigma,
                    QuotientKind::GkSurface,
                ] {
                    let Ok(q) = presentation_quotient(&p, kind) else {
                        continue;
                    };
                    for r in &q.relators {
                        assert!(
                            eval_in(r, &p, kind).unwrap().is_identity(),
                            "{p} {kind} {r}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn abelian_relators_die_in_small_cases() {
    for k in 1..=3 {
        for n in 0..=3 {
            for g in 0..=2 {
                let p = params(k, n, g);
                let punct = presentation_punctured(&p);
                for r in &punct.relators {
                    assert!(
                        eval_abel(r, &p, QuotientKind::PuncturedAbel)
                            .unwrap()
                            .is_identity(),
                        "{p} {r}"
                    );
                }
                if n == 0 {
                    continue;
                }
                let mixed = presentation_mixed(&p).unwrap();
                for r in &mixed.relators {
                    assert!(
                        eval_abel(r, &p, QuotientKind::MixedAbel)
                            .unwrap()
                            .is_identity(),
                        "{p} {r}"
                    );
                }
            }
        }
    }
}

#[test]
fn zetas_collapse_for_several_n() {
    for n in [3, 4, 5] {
        let p = params(3, n, 1);
        let first = eval_mixed_gamma3(&Generator::zeta(1).word(), &p).unwrap();
        for i in 2..=n {
            assert_eq!(
                eval_mixed_gamma3(&Generator::zeta(i).word(), &p).unwrap(),
                first
            );
        }
    }
}

#[test]
fn action_matches_conjugation_on_letters() {
    for p in [params(3, 3, 1), params(4, 3, 2), params(3, 5, 1)] {
        let mut outer: Vec<Generator> = (1..p.n).map(Generator::sigma_tilde).collect();
        for i in 1..=p.g {
            outer.push(Generator::a_tilde(i));
            outer.push(Generator::b_tilde(i));
        }
        for &t in &outer {
            let rho_t = eval_mixed_gamma3(&t.word(), &p).unwrap();
            for x in punctured_generators(&p) {
                let acted = act_outer(t, &x.word()).unwrap();
                let direct = rho_t
                    .mul(&eval_mixed_gamma3(&x.word(), &p).unwrap())
                    .unwrap()
                    .mul(&rho_t.inv().unwrap())
                    .unwrap();
                assert_eq!(
                    eval_mixed_gamma3(&acted, &p).unwrap(),
                    direct,
                    "{p} {t} {x}"
                );
            }
        }
    }
}

#[test]
fn witt_hall_on_words() {
    let p = params(3, 3, 1);
    let [x, y, z] = ["a1 tb1", "b1^2 s1", "ta1 z2"].map(|t| parse_word(t, &p).unwrap());
    let w = commutator(&x, &commutator(&y, &z));
    assert!(eval_mixed_gamma3(&w, &p).unwrap().is_identity());
}
