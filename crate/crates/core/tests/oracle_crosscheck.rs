mod common;

use braidquot::oracle::{
    collect_class2, lattice_quotient_invariants, smith_invariants, Class2Quotient, IntLattice,
    Invariants,
};
use braidquot::par::rng_for;
use braidquot::presentations::{
    mixed_generators, presentation_mixed, presentation_punctured, presentation_quotient,
    punctured_generators, QuotientKind,
};
use braidquot::quotients::{
    eval_abel, eval_gk_surface, eval_punctured_gamma3, Gamma3MixedElt, GroupElt,
};
use braidquot::words::{commutator, parse_word_collapsed, Generator, GroupParams, Word};
use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn grid_elt(g: usize, mut code: usize) -> Gamma3MixedElt {
    let c: Vec<i64> = (0..3 + 4 * g)
        .map(|_| {
            let v = (code % 3) as i64 - 1;
            code /= 3;
            v
        })
        .collect();
    Gamma3MixedElt {
        p: c[0],
        q: c[1],
        r: c[2],
        m: c[3..3 + g].to_vec(),
        mt: c[3 + g..3 + 2 * g].to_vec(),
        nv: c[3 + 2 * g..3 + 3 * g].to_vec(),
        nt: c[3 + 3 * g..].to_vec(),
    }
}

fn grid_pairs(g: usize, count: usize, seed: u64) -> Vec<(Gamma3MixedElt, Gamma3MixedElt)> {
    let total = 3usize.pow(3 + 4 * g as u32);
    let mut pairs: Vec<_> = (0..count)
        .map(|i| {
            let mut rng = rng_for(seed, i as u64);
            (
                grid_elt(g, rng.gen_range(0..total)),
                grid_elt(g, rng.gen_range(0..total)),
            )
        })
        .collect();
    let gens = Gamma3MixedElt::generator_images(g);
    for x in &gens {
        for y in &gens {
            pairs.push((x.clone(), y.clone()));
        }
    }
    pairs
}

/// The multiplication and inversion formulas agree with the oracle, and
/// distinct normal forms are distinct in the oracle.
fn check_formulas<T: GroupElt>(
    oracle: &Class2Quotient,
    pairs: &[(T, T)],
    to_word: impl Fn(&T) -> Word,
) {
    for (x, y) in pairs {
        let (u, v) = (to_word(x), to_word(y));
        let xy = x.mul(y).unwrap();
        assert!(
            oracle.equal(&u.concat(&v), &to_word(&xy)).unwrap(),
            "product {x} * {y} = {xy}"
        );
        let xi = x.inv().unwrap();
        assert!(
            oracle.equal(&u.invert(), &to_word(&xi)).unwrap(),
            "inverse of {x} = {xi}"
        );
        assert_eq!(oracle.equal(&u, &v).unwrap(), x == y, "{x} vs {y}");
    }
}

fn collapsed(x: &impl std::fmt::Display, p: &GroupParams) -> Word {
    parse_word_collapsed(&x.to_string(), p).unwrap()
}

#[test]
fn mixed_formulas_against_full_presentation() {
    for (p, count) in [(params(3, 3, 1), 3000), (params(3, 4, 2), 600)] {
        let oracle = Class2Quotient::new(&presentation_mixed(&p).unwrap()).unwrap();
        check_formulas(&oracle, &grid_pairs(p.g, count, 11), |x| {
            normal_form_word(x, &p)
        });
    }
}

#[test]
fn mixed_formulas_against_quotient_presentation() {
    let p = params(3, 3, 1);
    let oracle =
        Class2Quotient::new(&presentation_quotient(&p, QuotientKind::MixedGamma3).unwrap())
            .unwrap();
    check_formulas(&oracle, &grid_pairs(1, 3000, 12), |x| collapsed(x, &p));
}

#[test]
fn conjugation_sign_via_oracle() {
    let p = params(3, 3, 2);
    let oracle = Class2Quotient::new(&presentation_mixed(&p).unwrap()).unwrap();
    let s = Generator::sigma(1).word();
    let z = Generator::zeta(1).word();
    for j in 1..=2 {
        let b = Generator::b(j).word();
        for (m, mt) in [(1, 0), (0, 1), (2, -1), (-1, 3)] {
            let gamma = Word::from_pairs([(Generator::a(j), m), (Generator::a_tilde(j), mt)]);
            let expected = s.pow(2 * m).concat(&z.pow(mt));
            assert!(
                oracle.equal(&commutator(&gamma, &b), &expected).unwrap(),
                "j={j} m={m} mt={mt}"
            );
            let wrong = s.pow(-2 * m).concat(&z.pow(-mt));
            assert!(!oracle.equal(&commutator(&gamma, &b), &wrong).unwrap());
        }
    }
}

#[test]
fn punctured_normal_forms_against_oracle() {
    let p = params(3, 3, 1);
    let oracle = Class2Quotient::new(&presentation_punctured(&p)).unwrap();
    let quot =
        Class2Quotient::new(&presentation_quotient(&p, QuotientKind::PuncturedGamma3).unwrap())
            .unwrap();
    let omega = punctured_generators(&p);
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let pairs = (word(omega.clone(), 10), word(omega, 10));
    runner
        .run(&pairs, |(u, v)| {
            let (x, y) = (
                eval_punctured_gamma3(&u, &p)?,
                eval_punctured_gamma3(&v, &p)?,
            );
            prop_assert_eq!(oracle.equal(&u, &v)?, x == y);
            let xy = x.mul(&y)?;
            prop_assert!(quot.equal(
                &collapsed(&x, &p).concat(&collapsed(&y, &p)),
                &collapsed(&xy, &p)
            )?);
            prop_assert_eq!(quot.equal(&collapsed(&x, &p), &collapsed(&y, &p))?, x == y);
            Ok(())
        })
        .unwrap();
}

#[test]
fn gk_and_hsigma_normal_forms_against_oracle() {
    let p = params(3, 3, 1);
    let gk =
        Class2Quotient::new(&presentation_quotient(&p, QuotientKind::GkSurface).unwrap()).unwrap();
    let hs =
        Class2Quotient::new(&presentation_quotient(&p, QuotientKind::HSigma).unwrap()).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    runner
        .run(&(gk_elt(1, 2), gk_elt(1, 2)), |(x, y)| {
            let (u, v) = (collapsed(&x, &p), collapsed(&y, &p));
            prop_assert!(gk.equal(&u.concat(&v), &collapsed(&x.mul(&y)?, &p))?);
            prop_assert!(gk.equal(&u.invert(), &collapsed(&x.inv()?, &p))?);
            prop_assert_eq!(gk.equal(&u, &v)?, x == y);
            Ok(())
        })
        .unwrap();
    runner
        .run(&(hsigma_elt(1, 2), hsigma_elt(1, 2)), |(x, y)| {
            let (u, v) = (collapsed(&x, &p), collapsed(&y, &p));
            prop_assert!(hs.equal(&u.concat(&v), &collapsed(&x.mul(&y)?, &p))?);
            prop_assert_eq!(hs.equal(&u, &v)?, x == y);
            Ok(())
        })
        .unwrap();
    let punct = Class2Quotient::new(&presentation_punctured(&params(3, 3, 1))).unwrap();
    let sur =
        Class2Quotient::new(&presentation_quotient(&p, QuotientKind::GkSurface).unwrap()).unwrap();
    let omega = punctured_generators(&p);
    runner
        .run(&(word(omega.clone(), 8), word(omega, 8)), |(u, v)| {
            let (x, y) = (eval_gk_surface(&u, &p)?, eval_gk_surface(&v, &p)?);
            let same_punctured = punct.equal(&u, &v)?;
            prop_assert!(!same_punctured || x == y);
            prop_assert_eq!(sur.equal(&collapsed(&x, &p), &collapsed(&y, &p))?, x == y);
            Ok(())
        })
        .unwrap();
}

fn big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn det(m: &[Vec<i128>]) -> i128 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Invariant factors from gcds of k×k minors.
fn determinantal_invariants(rows: &[Vec<i64>], cols: usize) -> Invariants {
    let mut divisors = vec![1i128];
    for k in 1..=rows.len().min(cols) {
        let mut d = 0i128;
        for rs in subsets(rows.len(), k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| rows[r][c] as i128).collect())
                    .collect();
                d = d.gcd(&det(&minor));
            }
        }
        if d == 0 {
            break;
        }
        divisors.push(d);
    }
    let rank = divisors.len() - 1;
    let torsion: Vec<i64> = divisors
        .windows(2)
        .map(|w| (w[1] / w[0]) as i64)
        .filter(|&t| t != 1)
        .collect();
    Invariants::new(cols - rank, &torsion)
}

fn matrix() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        (
            prop::collection::vec(prop::collection::vec(-6i64..=6, c), r),
            Just(c),
        )
    })
}

proptest! {
    #[test]
    fn smith_matches_determinantal_divisors((rows, cols) in matrix()) {
        prop_assert_eq!(smith_invariants(&big_rows(&rows), cols), determinantal_invariants(&rows, cols));
    }

    #[test]
    fn hnf_is_invariant_under_shuffles_and_row_operations(
        (rows, cols) in matrix(),
        perm_seed in any::<u64>(),
        mult in -5i64..=5,
    ) {
        let base = IntLattice::from_rows(cols, big_rows(&rows));
        let mut shuffled = rows.clone();
        let mut rng = rng_for(perm_seed, 0);
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(&IntLattice::from_rows(cols, big_rows(&shuffled)), &base);
        if rows.len() >= 2 {
            let mut ops = rows.clone();
            let r1 = ops[1].clone();
            ops[0].iter_mut().zip(&r1).for_each(|(a, b)| *a += mult * b);
            ops[1].iter_mut().for_each(|x| *x = -*x);
            prop_assert_eq!(&IntLattice::from_rows(cols, big_rows(&ops)), &base);
        }
        for r in big_rows(&rows) {
            prop_assert!(base.contains(&r));
        }
        let combo: Vec<BigInt> = (0..cols)
            .map(|c| rows.iter().enumerate().map(|(i, r)| BigInt::from(r[c] * (i as i64 - 1))).sum())
            .collect();
        prop_assert!(base.contains(&combo));
        let inv = lattice_quotient_invariants(&base);
        prop_assert_eq!(inv.free_rank, cols - base.rank());
        let index: BigInt = inv.torsion.iter().product();
        let pivot_product: BigInt = base.basis().zip(base.pivots()).map(|(r, p)| r[p].abs()).product();
        if base.rank() == cols {
            prop_assert_eq!(index, pivot_product);
        }
    }

    #[test]
    fn hnf_rejects_non_members(v in prop::collection::vec(-9i64..=9, 3)) {
        let l = IntLattice::from_rows(3, big_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![1, 1, 1]]));
        let inside = {
            let c = v[2];
            let (a, b) = (v[0] - c, v[1] - c);
            a.is_multiple_of(&2) && b.is_multiple_of(&3)
        };
        prop_assert_eq!(l.contains(&big_rows(&[v])[0]), inside);
    }

    #[test]
    fn collection_is_a_homomorphism(
        u in word(mixed_generators(&params(3, 3, 1)), 12),
        v in word(mixed_generators(&params(3, 3, 1)), 12),
        w in word(mixed_generators(&params(3, 3, 1)), 6),
    ) {
        let gens = mixed_generators(&params(3, 3, 1));
        let c = |w: &Word| collect_class2(w, &gens).unwrap();
        prop_assert_eq!(c(&u.concat(&v)), c(&u).mul(&c(&v)));
        prop_assert_eq!(c(&u.invert()), c(&u).inv());
        prop_assert!(c(&u.concat(&u.invert())).is_identity());
        prop_assert!(c(&commutator(&u, &commutator(&v, &w))).is_identity());
        prop_assert_eq!(c(&u.pow(3)), c(&u).pow(&BigInt::from(3)));
    }

    #[test]
    fn abelianisation_matches_lattice_membership(
        u in word(mixed_generators(&params(3, 3, 1)), 12),
        v in word(mixed_generators(&params(3, 3, 1)), 12),
    ) {
        let p = params(3, 3, 1);
        let pres = presentation_mixed(&p).unwrap();
        let rows: Vec<Vec<BigInt>> =
            pres.relators.iter().map(|r| collect_class2(r, &pres.generators).unwrap().e).collect();
        let l = IntLattice::from_rows(pres.generators.len(), rows);
        let e = |w: &Word| collect_class2(w, &pres.generators).unwrap().e;
        let diff: Vec<BigInt> = e(&u).iter().zip(e(&v)).map(|(a, b)| a - b).collect();
        let ab = |w: &Word| eval_abel(w, &p, QuotientKind::MixedAbel).unwrap();
        prop_assert_eq!(l.contains(&diff), ab(&u) == ab(&v));
        let pp = presentation_punctured(&p);
        let prow: Vec<Vec<BigInt>> =
            pp.relators.iter().map(|r| collect_class2(r, &pp.generators).unwrap().e).collect();
        let pl = IntLattice::from_rows(pp.generators.len(), prow);
        let omega = punctured_generators(&p);
        let keep = |w: &Word| Word::from_pairs(w.letters().iter().filter(|l| omega.contains(&l.gen)).map(|l| (l.gen, l.exp)));
        let (pu, pv) = (keep(&u), keep(&v));
        let pe = |w: &Word| collect_class2(w, &pp.generators).unwrap().e;
        let pdiff: Vec<BigInt> = pe(&pu).iter().zip(pe(&pv)).map(|(a, b)| a - b).collect();
        let pab = |w: &Word| eval_abel(w, &p, QuotientKind::PuncturedAbel).unwrap();
        prop_assert_eq!(pl.contains(&pdiff), pab(&pu) == pab(&pv));
    }
}

#[test]
fn zero_is_not_a_torsion_coefficient() {
    let inv = smith_invariants(&big_rows(&[vec![0, 0]]), 2);
    assert_eq!(inv, Invariants::new(2, &[]));
    assert!(inv.torsion.iter().all(|t| !t.is_zero()));
}
