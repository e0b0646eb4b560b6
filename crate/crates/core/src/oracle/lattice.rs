use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sublattice of Z^dim, stored as its Hermite normal form: rows in strictly
/// increasing pivot order, positive pivots, entries above each pivot reduced
/// into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

fn axpy(v: &mut [BigInt], q: &BigInt, row: &[BigInt], from: usize) {
    for (x, r) in v[from..].iter_mut().zip(&row[from..]) {
        if !r.is_zero() {
            *x -= q * r;
        }
    }
}

fn first_nonzero(v: &[BigInt], from: usize) -> Option<usize> {
    (from..v.len()).find(|&c| !v[c].is_zero())
}

impl IntLattice {
    pub fn zero(dim: usize) -> Self {
        IntLattice {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<BigInt>>>(dim: usize, rows: I) -> Self {
        let mut l = Self::zero(dim);
        for (i, r) in rows.into_iter().enumerate() {
            l.insert(r);
            if i % 32 == 31 {
                l.reduce();
            }
        }
        l.reduce();
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Adds `v` to the generating set. Call [`IntLattice::reduce`] afterwards
    /// to restore the canonical form.
    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim, "vector length does not match lattice");
        let mut from = 0;
        while let Some(c) = first_nonzero(&v, from) {
            match self.rows.binary_search_by_key(&c, |r| r.0) {
                Err(at) => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows.insert(at, (c, v));
                    return;
                }
                Ok(at) => {
                    let row = &mut self.rows[at].1;
                    let (a, b) = (row[c].clone(), v[c].clone());
                    if b.is_multiple_of(&a) {
                        axpy(&mut v, &(&b / &a), row, c);
                    } else {
                        let eg = a.extended_gcd(&b);
                        let (ag, bg) = (&a / &eg.gcd, &b / &eg.gcd);
                        let mut new_row = vec![BigInt::zero(); self.dim];
                        let mut new_v = vec![BigInt::zero(); self.dim];
                        for k in c..self.dim {
                            new_row[k] = &eg.x * &row[k] + &eg.y * &v[k];
                            new_v[k] = &ag * &v[k] - &bg * &row[k];
                        }
                        if new_row[c].is_negative() {
                            new_row.iter_mut().for_each(|x| *x = -&*x);
                        }
                        *row = new_row;
                        v = new_v;
                    }
                    from = c + 1;
                }
            }
        }
    }

    /// Reduces entries above pivots, giving the canonical HNF.
    pub fn reduce(&mut self) {
        for j in 0..self.rows.len() {
            let (p, pivot_row) = {
                let (p, r) = &self.rows[j];
                (*p, r.clone())
            };
            let pv = &pivot_row[p];
            for i in 0..j {
                let q = self.rows[i].1[p].div_floor(pv);
                if !q.is_zero() {
                    axpy(&mut self.rows[i].1, &q, &pivot_row, p);
                }
            }
        }
    }

    /// Coefficients of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coefficients(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim, "vector length does not match lattice");
        let mut v = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.rows.len()];
        let mut from = 0;
        while let Some(c) = first_nonzero(&v, from) {
            let at = self.rows.binary_search_by_key(&c, |r| r.0).ok()?;
            let row = &self.rows[at].1;
            if !v[c].is_multiple_of(&row[c]) {
                return None;
            }
            let q = &v[c] / &row[c];
            axpy(&mut v, &q, row, c);
            coeffs[at] = q;
            from = c + 1;
        }
        Some(coeffs)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coefficients(v).is_some()
    }

    /// The vectors of the lattice whose first `start` coordinates vanish,
    /// projected onto the remaining coordinates.
    pub fn tail_sublattice(&self, start: usize) -> IntLattice {
        IntLattice {
            dim: self.dim - start,
            rows: self
                .rows
                .iter()
                .filter(|(p, _)| *p >= start)
                .map(|(p, r)| (p - start, r[start..].to_vec()))
                .collect(),
        }
    }
}

/// Free rank and torsion coefficients (each > 1, in divisibility order) of a
/// finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Invariants {
    pub fn new(free_rank: usize, torsion: &[i64]) -> Self {
        Invariants {
            free_rank,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

fn power(base: &str, e: usize) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(power("Z", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == t).count();
            parts.push(power(&format!("Z{t}"), run));
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Diagonal of the Smith normal form of an integer matrix with `cols` columns.
fn smith_diagonal(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        a.iter_mut().for_each(|r| r.swap(t, bj));
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let pivot_row = a[t].clone();
                    axpy(&mut a[i], &q, &pivot_row, t);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match bad {
                    None => break,
                    Some(i) => {
                        let r = a[i].clone();
                        a[t].iter_mut().zip(r).for_each(|(x, y)| *x += y);
                    }
                }
            }
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            a.iter_mut().for_each(|r| r.swap(t, best.1));
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Invariant factors of Z^dim / span(rows).
pub fn smith_invariants(rows: &[Vec<BigInt>], dim: usize) -> Invariants {
    let hnf = IntLattice::from_rows(dim, rows.iter().cloned());
    lattice_quotient_invariants(&hnf)
}

/// Invariant factors of Z^dim / L.
pub fn lattice_quotient_invariants(l: &IntLattice) -> Invariants {
    let diag = smith_diagonal(l.basis().map(<[BigInt]>::to_vec).collect(), l.dim());
    Invariants {
        free_rank: l.dim() - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}
