//! Exact linear algebra over ℚ.
//!
//! Vectors are stored sparse with integer entries; a rational vector is first
//! scaled to a primitive integer vector, which spans the same line. [`RowSpace`]
//! keeps a fraction-free echelon basis: every stored row is primitive, has a
//! positive leading entry, and no two rows share a leading column. Insertion
//! and membership only ever eliminate leading entries, so entries stay small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Sparse integer vector, sorted by column, no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec(Vec<(usize, BigInt)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    /// Builds from unsorted entries; repeated columns are summed.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (c, v) in entries {
            *acc.entry(c).or_insert_with(BigInt::zero) += v;
        }
        SparseVec(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    /// Clears denominators of a rational vector (same span, integer entries).
    pub fn from_rationals(entries: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let entries: Vec<(usize, Q)> = entries.into_iter().collect();
        let lcm = entries
            .iter()
            .fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
        Self::from_entries(
            entries
                .into_iter()
                .map(|(c, v)| (c, (v * Q::from_integer(lcm.clone())).to_integer())),
        )
    }

    pub fn unit(col: usize) -> Self {
        SparseVec(vec![(col, BigInt::one())])
    }

    pub fn from_dense(v: &[Q]) -> Self {
        Self::from_rationals(v.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, ncols: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); ncols];
        for (c, v) in &self.0 {
            out[*c] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.0
    }

    pub fn leading(&self) -> Option<&(usize, BigInt)> {
        self.0.first()
    }

    pub fn get(&self, col: usize) -> BigInt {
        match self.0.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.0[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn max_col(&self) -> Option<usize> {
        self.0.last().map(|(c, _)| *c)
    }

    /// `a*self - b*other`.
    fn combine(&self, a: &BigInt, other: &SparseVec, b: &BigInt) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let ci = self.0.get(i).map(|e| e.0).unwrap_or(usize::MAX);
            let cj = other.0.get(j).map(|e| e.0).unwrap_or(usize::MAX);
            let (c, v) = if ci < cj {
                i += 1;
                (ci, a * &self.0[i - 1].1)
            } else if cj < ci {
                j += 1;
                (cj, -(b * &other.0[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (ci, a * &self.0[i - 1].1 - b * &other.0[j - 1].1)
            };
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        SparseVec(out)
    }

    /// Divides by the content and makes the leading entry positive.
    fn make_primitive(&mut self) {
        let Some((_, lead)) = self.0.first() else {
            return;
        };
        let negative = lead.is_negative();
        let g = self.0.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
        let g = if negative { -g } else { g };
        if !g.is_one() {
            for (_, v) in &mut self.0 {
                *v /= &g;
            }
        }
    }

    /// Shifts every column by `offset` (used to build block vectors).
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec(
            self.0
                .iter()
                .map(|(c, v)| (c + offset, v.clone()))
                .collect(),
        )
    }

    /// Keeps only columns in `[lo, hi)`, shifted down by `lo`.
    pub fn slice(&self, lo: usize, hi: usize) -> SparseVec {
        SparseVec(
            self.0
                .iter()
                .filter(|(c, _)| *c >= lo && *c < hi)
                .map(|(c, v)| (c - lo, v.clone()))
                .collect(),
        )
    }

    pub fn concat(&self, other: &SparseVec, offset: usize) -> SparseVec {
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|(c, x)| (c + offset, x.clone())));
        SparseVec(v)
    }
}

/// Subspace of ℚ^ncols held as a fraction-free echelon basis.
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn full(ncols: usize) -> Self {
        let mut s = RowSpace::new(ncols);
        for c in 0..ncols {
            s.insert(SparseVec::unit(c));
        }
        s
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = RowSpace::new(ncols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Eliminates leading entries against the stored pivots; the result is
    /// zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        v.make_primitive();
        loop {
            let Some((col, a)) = v.leading().cloned() else {
                return v;
            };
            let Some(&ri) = self.pivots.get(&col) else {
                return v;
            };
            let row = &self.rows[ri];
            let p = &row.0[0].1;
            let g = p.gcd(&a);
            v = v.combine(&(p / &g), row, &(&a / &g));
            v.make_primitive();
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.max_col().is_none_or(|c| c < self.ncols));
        let r = self.reduce(&v);
        match r.leading() {
            None => false,
            Some((col, _)) => {
                self.pivots.insert(*col, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    pub fn extend(&mut self, other: &RowSpace) {
        for r in &other.rows {
            self.insert(r.clone());
        }
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        let mut s = self.clone();
        s.extend(other);
        s
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_space(&self, other: &RowSpace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// Zassenhaus: echelonize `[u | u]` and `[v | 0]`; rows whose leading
    /// column falls in the right block span `U ∩ V`.
    pub fn intersection(&self, other: &RowSpace) -> RowSpace {
        let n = self.ncols;
        let mut big = RowSpace::new(2 * n);
        for u in &self.rows {
            big.insert(u.concat(u, n));
        }
        for v in &other.rows {
            big.insert(v.clone());
        }
        let mut out = RowSpace::new(n);
        for r in &big.rows {
            if r.leading().is_some_and(|(c, _)| *c >= n) {
                out.insert(r.slice(n, 2 * n));
            }
        }
        out
    }

    /// `dim(U ∩ V)` by the rank identity, without building the intersection.
    pub fn intersection_dim(&self, other: &RowSpace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank(vectors: &[SparseVec], ncols: usize) -> usize {
    RowSpace::from_rows(ncols, vectors.iter().cloned()).dim()
}

/// Basis of the right kernel `{x : M x = 0}` of a dense rational matrix.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); ncols];
            x[f] = Q::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                x[pc] = -m[i][f].clone();
            }
            x
        })
        .collect()
}
