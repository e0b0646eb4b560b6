#![allow(dead_code)]

use braidquot::quotients::{Gamma3MixedElt, GkSurfaceElt, HSigmaElt, PuncturedGamma3Elt};
use braidquot::words::{parse_word_collapsed, Generator, GroupParams, Word};
use proptest::prelude::*;

pub fn params(k: usize, n: usize, g: usize) -> GroupParams {
    GroupParams::new(k, n, g).unwrap()
}

pub fn word(alphabet: Vec<Generator>, max_len: usize) -> impl Strategy<Value = Word> {
    let size = alphabet.len();
    prop::collection::vec(
        (0..size, prop_oneof![Just(1i64), Just(-1i64), -3i64..=3]),
        0..=max_len,
    )
    .prop_map(move |letters| Word::from_pairs(letters.into_iter().map(|(i, e)| (alphabet[i], e))))
}

fn vec_of(len: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, len)
}

pub fn mixed_elt(g: usize, bound: i64) -> impl Strategy<Value = Gamma3MixedElt> {
    (
        (-bound..=bound, -bound..=bound, -bound..=bound),
        (
            vec_of(g, bound),
            vec_of(g, bound),
            vec_of(g, bound),
            vec_of(g, bound),
        ),
    )
        .prop_map(|((p, q, r), (m, mt, nv, nt))| Gamma3MixedElt {
            p,
            q,
            r,
            m,
            mt,
            nv,
            nt,
        })
}

pub fn punctured_elt(n: usize, g: usize, bound: i64) -> impl Strategy<Value = PuncturedGamma3Elt> {
    (
        -bound..=bound,
        vec_of(n, bound),
        vec_of(g, bound),
        vec_of(g, bound),
    )
        .prop_map(|(p, qz, m, nv)| PuncturedGamma3Elt { p, qz, m, nv })
}

pub fn gk_elt(g: usize, bound: i64) -> impl Strategy<Value = GkSurfaceElt> {
    (
        -bound..=bound,
        -bound..=bound,
        vec_of(g, bound),
        vec_of(g, bound),
    )
        .prop_map(|(p, r, m, nv)| GkSurfaceElt { p, r, m, nv })
}

pub fn hsigma_elt(g: usize, bound: i64) -> impl Strategy<Value = HSigmaElt> {
    mixed_elt(g, bound).prop_map(|x| braidquot::quotients::project_hsigma(&x))
}

/// The printed normal form of an element as a word over the braid generators,
/// each collapsed letter replaced by its index-1 representative.
pub fn normal_form_word(x: &impl std::fmt::Display, params: &GroupParams) -> Word {
    let w = parse_word_collapsed(&x.to_string(), params).unwrap();
    Word::from_pairs(w.letters().iter().map(|l| {
        let gen = if l.gen.is_collapsed() {
            Generator::new(l.gen.family, 1)
        } else {
            l.gen
        };
        (gen, l.exp)
    }))
}
