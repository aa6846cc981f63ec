//! Saturated (upward-closed) subsets of ℕ^r and the weighted threshold sets
//! `{b : t·b ≥ x}`, all represented by their finite antichain of minimal
//! elements.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ceil_q, fmt_q, Q};

/// A point of ℕ^r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        Ok(ExponentVector(entries))
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&b| b as u64).sum()
    }

    /// Product order: `self ≥ other` in every coordinate.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn dot(&self, t: &WeightVector) -> Q {
        self.0
            .iter()
            .zip(&t.0)
            .filter(|(b, _)| **b > 0)
            .map(|(b, w)| w * Q::from_integer((*b).into()))
            .sum()
    }

    pub fn plus_unit(&self, i: usize) -> ExponentVector {
        let mut v = self.0.clone();
        v[i] += 1;
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A nonzero vector of nonnegative rational weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct WeightVector(Vec<Q>);

impl WeightVector {
    pub fn new(entries: Vec<Q>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(|t| t.is_negative()) {
            return Err(Error::InvalidWeights);
        }
        if entries.iter().all(|t| t.is_zero()) {
            return Err(Error::InvalidWeights);
        }
        Ok(WeightVector(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&t| Q::from_integer(t.into())).collect())
    }

    pub fn entries(&self) -> &[Q] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, u: &Q) -> Result<WeightVector> {
        if !u.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        Ok(WeightVector(self.0.iter().map(|t| t * u).collect()))
    }

    /// `λ·self + (1-λ)·other` for `λ ∈ [0, 1]`.
    pub fn convex(&self, other: &WeightVector, lambda: &Q) -> Result<WeightVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let mu = Q::from_integer(1.into()) - lambda;
        WeightVector::new(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * lambda + b * &mu)
                .collect(),
        )
    }
}

impl TryFrom<Vec<String>> for WeightVector {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        WeightVector::new(
            v.iter()
                .map(|s| crate::rational::parse_q(s))
                .collect::<Result<_>>()?,
        )
    }
}

impl From<WeightVector> for Vec<String> {
    fn from(w: WeightVector) -> Self {
        w.0.iter().map(fmt_q).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Upward closure of a finite antichain in ℕ^r. Generators are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<ExponentVector>", into = "Vec<ExponentVector>")]
pub struct SaturatedSet {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl SaturatedSet {
    /// Upward closure of `points`; the stored generators are its minimal elements.
    pub fn from_points(dim: usize, points: Vec<ExponentVector>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
        Ok(SaturatedSet {
            dim,
            generators: minimal_elements(points),
        })
    }

    /// All of ℕ^r.
    pub fn whole(dim: usize) -> Self {
        SaturatedSet {
            dim,
            generators: vec![ExponentVector::zero(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn contains(&self, b: &ExponentVector) -> bool {
        self.generators.iter().any(|g| b.dominates(g))
    }

    pub fn intersect(&self, other: &SaturatedSet) -> Result<SaturatedSet> {
        intersect_saturated(self, other)
    }

    /// Points of the box `[0, side]^r` inside the set, for brute-force checks.
    pub fn points_in_box(&self, side: u32) -> Vec<ExponentVector> {
        box_points(self.dim, side)
            .into_iter()
            .filter(|b| self.contains(b))
            .collect()
    }
}

impl TryFrom<Vec<ExponentVector>> for SaturatedSet {
    type Error = Error;
    fn try_from(v: Vec<ExponentVector>) -> Result<Self> {
        let dim = v.first().map(|g| g.len()).ok_or(Error::EmptyThreshold)?;
        SaturatedSet::from_points(dim, v)
    }
}

impl From<SaturatedSet> for Vec<ExponentVector> {
    fn from(s: SaturatedSet) -> Self {
        s.generators
    }
}

impl fmt::Display for SaturatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Minimal elements under the product order, sorted and deduplicated.
pub fn minimal_elements(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // Sorting by total degree first means a dominated point is always seen
    // after some point it dominates.
    points.sort_by(|a, b| match a.total().cmp(&b.total()) {
        Ordering::Equal => a.cmp(b),
        o => o,
    });
    points.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for p in points {
        if !kept.iter().any(|k| p.dominates(k)) {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

/// Every point of `[0, side]^dim`.
pub fn box_points(dim: usize, side: u32) -> Vec<ExponentVector> {
    let mut out = vec![Vec::with_capacity(dim)];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=side).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector).collect()
}

/// Minimal elements of `{b ∈ ℕ^r : t·b ≥ x}`.
///
/// Coordinates with zero weight never help reach the threshold, so every
/// minimal element is zero there. `x = 0` gives all of ℕ^r.
pub fn threshold_set(t: &WeightVector, x: &Q) -> Result<SaturatedSet> {
    if x.is_negative() {
        return Err(Error::NegativeThreshold(fmt_q(x)));
    }
    let r = t.len();
    if x.is_zero() {
        return Ok(SaturatedSet::whole(r));
    }
    let positive: Vec<usize> = (0..r).filter(|&i| t.0[i].is_positive()).collect();
    if positive.is_empty() {
        return Err(Error::EmptyThreshold);
    }
    let mut candidates = Vec::new();
    let mut current = vec![0u32; r];
    collect_threshold(t, &positive, 0, x.clone(), &mut current, &mut candidates);
    SaturatedSet::from_points(r, candidates)
}

fn collect_threshold(
    t: &WeightVector,
    positive: &[usize],
    k: usize,
    remaining: Q,
    current: &mut Vec<u32>,
    out: &mut Vec<ExponentVector>,
) {
    if !remaining.is_positive() {
        out.push(ExponentVector(current.clone()));
        return;
    }
    let i = positive[k];
    let need = ceil_q(&(&remaining / &t.0[i]))
        .to_u32()
        .expect("threshold too large");
    if k + 1 == positive.len() {
        current[i] = need;
        out.push(ExponentVector(current.clone()));
        current[i] = 0;
        return;
    }
    for b in 0..=need {
        current[i] = b;
        let rest = &remaining - &t.0[i] * Q::from_integer(b.into());
        collect_threshold(t, positive, k + 1, rest, current, out);
    }
    current[i] = 0;
}

/// Minimal elements of the intersection of two upward closures: the
/// componentwise maxima of generator pairs.
pub fn intersect_saturated(m: &SaturatedSet, n: &SaturatedSet) -> Result<SaturatedSet> {
    if m.dim != n.dim {
        return Err(Error::DimensionMismatch {
            expected: m.dim,
            got: n.dim,
        });
    }
    let joins = m
        .generators
        .iter()
        .flat_map(|a| n.generators.iter().map(move |b| a.join(b)))
        .collect();
    SaturatedSet::from_points(m.dim, joins)
}

/// Repeats `t_j` exactly `eps_j` times, in order.
pub fn expand_weights(t: &WeightVector, eps: &[u32]) -> Result<WeightVector> {
    if eps.len() != t.len() {
        return Err(Error::DimensionMismatch {
            expected: t.len(),
            got: eps.len(),
        });
    }
    if eps.contains(&0) {
        return Err(Error::ZeroMultiplicity);
    }
    let out =
        t.0.iter()
            .zip(eps)
            .flat_map(|(w, &e)| std::iter::repeat_n(w.clone(), e as usize))
            .collect();
    WeightVector::new(out)
}

/// All ways of splitting each `b_j` into `eps_j` ordered nonnegative parts,
/// concatenated into vectors of length `Σ eps_j`.
pub fn block_splits(b: &ExponentVector, eps: &[u32]) -> Vec<ExponentVector> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for (&bj, &e) in b.0.iter().zip(eps) {
        let parts = compositions(bj, e as usize);
        out = out
            .into_iter()
            .flat_map(|p| {
                parts.iter().map(move |c| {
                    let mut q = p.clone();
                    q.extend_from_slice(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector).collect()
}

/// Weak compositions of `total` into `parts` pieces.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}
