//! The filtration `F(t)_x = H⁰(O(N) ⊗ 𝓘(t, x))` of degree-`N` forms, its
//! integral `F(t)`, vanishing weights `μ_t(s)`, common adapted bases and the
//! concavity lower bound.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded_ring::{
    common_support_nonempty, dim_full, HomogeneousForm, IdealPieces, MonomialTable, Subscheme,
};
use crate::linalg::{RowSpace, SparseVec};
use crate::monomial_order::WeightVector;
use crate::rational::{serde_q, Q};

/// Start of a constant stretch of the step function: `dim F_y = dim` for
/// `y` in `(x, next x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jump {
    pub x: Q,
    pub dim: usize,
}

/// Step function `x ↦ dim F_x`. `F_0` is the whole ambient space; the last
/// jump has dimension 0.
#[derive(Clone, Debug)]
pub struct FiltrationProfile {
    ambient_dim: usize,
    jumps: Vec<Jump>,
    /// `levels[k]` is the subspace on the stretch starting at `jumps[k]`.
    levels: Option<Vec<RowSpace>>,
    /// `(nvars, degree)` when the ambient space is a space of forms.
    forms: Option<(usize, u32)>,
}

impl PartialEq for FiltrationProfile {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.jumps == other.jumps
    }
}

impl FiltrationProfile {
    /// Profile from explicit jumps, checking the shape invariants.
    pub fn from_jumps(ambient_dim: usize, jumps: Vec<Jump>) -> Result<Self> {
        validate(ambient_dim, &jumps)?;
        Ok(FiltrationProfile {
            ambient_dim,
            jumps,
            levels: None,
            forms: None,
        })
    }

    /// Profile of an explicit decreasing chain of subspaces of ℚ^ambient.
    /// `levels[k]` holds on `(xs[k], xs[k+1]]`; the last level must be zero.
    pub fn from_levels(ambient_dim: usize, xs: Vec<Q>, levels: Vec<RowSpace>) -> Result<Self> {
        if xs.len() != levels.len() {
            return Err(Error::InconsistentProfiles(
                "one abscissa per level is required".into(),
            ));
        }
        let mut prev = RowSpace::full(ambient_dim);
        for l in &levels {
            if l.ncols() != ambient_dim || !l.is_subspace_of(&prev) {
                return Err(Error::InconsistentProfiles("levels are not nested".into()));
            }
            prev = l.clone();
        }
        let jumps: Vec<Jump> = xs
            .into_iter()
            .zip(&levels)
            .map(|(x, l)| Jump { x, dim: l.dim() })
            .collect();
        validate(ambient_dim, &jumps)?;
        Ok(FiltrationProfile {
            ambient_dim,
            jumps,
            levels: Some(levels),
            forms: None,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    pub fn levels(&self) -> Option<&[RowSpace]> {
        self.levels.as_deref()
    }

    pub fn monomial_table(&self) -> Option<MonomialTable> {
        self.forms.map(|(n, d)| MonomialTable::new(n, d))
    }

    /// `dim F_x`.
    pub fn dim_at(&self, x: &Q) -> usize {
        if !x.is_positive() {
            return self.ambient_dim;
        }
        self.jumps
            .iter()
            .rev()
            .find(|j| j.x < *x)
            .map_or(self.ambient_dim, |j| j.dim)
    }

    /// `(1/ℓ) ∫₀^∞ dim F_x dx`.
    pub fn f_value(&self) -> Q {
        let mut total = Q::zero();
        for w in self.jumps.windows(2) {
            total += (&w[1].x - &w[0].x) * Q::from_integer(w[0].dim.into());
        }
        total / Q::from_integer(self.ambient_dim.into())
    }

    /// `μ(v) = max{x : v ∈ F_x}` for a nonzero coordinate vector.
    pub fn mu_of_vector(&self, v: &SparseVec) -> Result<Q> {
        if v.is_zero() {
            return Err(Error::ZeroForm);
        }
        let levels = self
            .levels
            .as_ref()
            .ok_or_else(|| Error::InconsistentProfiles("profile carries no subspaces".into()))?;
        let mut mu = Q::zero();
        for (k, level) in levels.iter().enumerate() {
            if !level.contains(v) {
                break;
            }
            mu = self.jumps[k + 1].x.clone();
        }
        Ok(mu)
    }

    pub fn mu_of_form(&self, s: &HomogeneousForm) -> Result<Q> {
        let table = self.form_table(s)?;
        self.mu_of_vector(&table.to_sparse(s))
    }

    fn form_table(&self, s: &HomogeneousForm) -> Result<MonomialTable> {
        let (n, d) = self
            .forms
            .ok_or_else(|| Error::InconsistentProfiles("profile is not a space of forms".into()))?;
        if s.nvars() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: s.nvars(),
            });
        }
        if s.degree() != d {
            return Err(Error::MixedDegrees(d, s.degree()));
        }
        Ok(MonomialTable::new(n, d))
    }

    /// `(1/ℓ) Σ μ(s_k)` over a basis; at most `F(t)`, with equality for
    /// adapted bases.
    pub fn mu_average(&self, basis: &[SparseVec]) -> Result<Q> {
        let mut total = Q::zero();
        for v in basis {
            total += self.mu_of_vector(v)?;
        }
        Ok(total / Q::from_integer(self.ambient_dim.into()))
    }

    /// Whether every level meets `basis` in a basis of that level.
    pub fn is_adapted(&self, basis: &[SparseVec]) -> bool {
        let Some(levels) = &self.levels else {
            return false;
        };
        if basis.len() != self.ambient_dim
            || RowSpace::from_rows(self.ambient_dim, basis.iter().cloned()).dim()
                != self.ambient_dim
        {
            return false;
        }
        levels
            .iter()
            .all(|l| basis.iter().filter(|v| l.contains(v)).count() == l.dim())
    }

    /// JSON form `{"ambient_dim": ℓ, "jumps": [[num, den, dim], ...]}`.
    pub fn to_json(&self) -> ProfileJson {
        ProfileJson {
            ambient_dim: self.ambient_dim,
            jumps: self
                .jumps
                .iter()
                .map(|j| {
                    (
                        j.x.numer().to_i64().expect("jump fits in i64"),
                        j.x.denom().to_i64().expect("jump fits in i64"),
                        j.dim,
                    )
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub ambient_dim: usize,
    pub jumps: Vec<(i64, i64, usize)>,
}

impl TryFrom<ProfileJson> for FiltrationProfile {
    type Error = Error;
    fn try_from(p: ProfileJson) -> Result<Self> {
        let jumps = p
            .jumps
            .into_iter()
            .map(|(n, d, dim)| {
                if d == 0 {
                    return Err(Error::ZeroValue);
                }
                Ok(Jump {
                    x: Q::new(BigInt::from(n), BigInt::from(d)),
                    dim,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        FiltrationProfile::from_jumps(p.ambient_dim, jumps)
    }
}

fn validate(ambient: usize, jumps: &[Jump]) -> Result<()> {
    let bad = |m: &str| Err(Error::InconsistentProfiles(m.into()));
    let Some(first) = jumps.first() else {
        return bad("no jumps");
    };
    if !first.x.is_zero() {
        return bad("first jump must start at 0");
    }
    if first.dim > ambient {
        return bad("dimension exceeds the ambient space");
    }
    if jumps.last().unwrap().dim != 0 {
        return bad("last jump must reach dimension 0");
    }
    for w in jumps.windows(2) {
        if w[1].x <= w[0].x || w[1].dim >= w[0].dim {
            return bad("jumps must increase in x and decrease in dimension");
        }
    }
    Ok(())
}

/// Profile of `F(t)_x` on degree-`N` forms, with the subspaces attached.
///
/// Every `𝓘(t, x)` equals `𝓘(t, c)` for the smallest attained weight
/// `c = t·b ≥ x`, and `b_i` above `N / (least generator degree of Y_i)`
/// contributes nothing in degree `N`. So only finitely many candidate
/// abscissae matter; monotonicity lets bisection skip constant runs.
pub fn build_profile(ys: &[Subscheme], t: &WeightVector, degree: u32) -> Result<FiltrationProfile> {
    if ys.len() != t.len() {
        return Err(Error::DimensionMismatch {
            expected: ys.len(),
            got: t.len(),
        });
    }
    let mut pieces = IdealPieces::new(ys)?;
    let nvars = pieces.nvars();
    let ambient = dim_full(degree, nvars - 1);
    let cands = candidates(ys, t, degree);

    let mut spaces: HashMap<usize, RowSpace> = HashMap::new();
    spaces.insert(0, RowSpace::full(ambient));
    let mut eval = |k: usize, spaces: &mut HashMap<usize, RowSpace>| -> Result<usize> {
        if let Some(s) = spaces.get(&k) {
            return Ok(s.dim());
        }
        let s = pieces.filtration_piece(t, &cands[k], degree)?;
        let d = s.dim();
        spaces.insert(k, s);
        Ok(d)
    };

    let last = cands.len() - 1;
    let mut dims = vec![None; cands.len()];
    dims[0] = Some(ambient);
    if last > 0 {
        dims[last] = Some(eval(last, &mut spaces)?);
        let mut stack = vec![(0, last)];
        while let Some((lo, hi)) = stack.pop() {
            if hi - lo <= 1 {
                continue;
            }
            if dims[lo] == dims[hi] {
                let v = dims[lo];
                for d in dims.iter_mut().take(hi).skip(lo + 1) {
                    *d = v;
                }
                continue;
            }
            let mid = (lo + hi) / 2;
            dims[mid] = Some(eval(mid, &mut spaces)?);
            stack.push((lo, mid));
            stack.push((mid, hi));
        }
    }
    let dims: Vec<usize> = dims.into_iter().map(|d| d.unwrap()).collect();

    // Stretch (c_{j-1}, c_j] has dimension dims[j]; beyond the last candidate
    // nothing survives.
    let mut jumps = Vec::new();
    let mut levels = Vec::new();
    for j in 1..=cands.len() {
        let dim = if j <= last { dims[j] } else { 0 };
        if j > 1 && dim == dims[j - 1] {
            continue;
        }
        let level = if j <= last {
            match spaces.get(&j) {
                Some(s) => s.clone(),
                None => {
                    eval(j, &mut spaces)?;
                    spaces[&j].clone()
                }
            }
        } else {
            RowSpace::new(ambient)
        };
        jumps.push(Jump {
            x: cands[j - 1].clone(),
            dim,
        });
        levels.push(level);
    }
    validate(ambient, &jumps)?;
    Ok(FiltrationProfile {
        ambient_dim: ambient,
        jumps,
        levels: Some(levels),
        forms: Some((nvars, degree)),
    })
}

/// Sorted distinct values `t·b` over the box of useful exponents.
fn candidates(ys: &[Subscheme], t: &WeightVector, degree: u32) -> Vec<Q> {
    let mut values = BTreeSet::new();
    values.insert(Q::zero());
    for (i, y) in ys.iter().enumerate() {
        let w = &t.entries()[i];
        if !w.is_positive() {
            continue;
        }
        let bound = degree / y.min_generator_degree();
        let current: Vec<Q> = values.iter().cloned().collect();
        for c in current {
            for b in 1..=bound {
                values.insert(&c + w * Q::from_integer(b.into()));
            }
        }
    }
    values.into_iter().collect()
}

/// `μ_t(s)`: the largest `x` with `s ∈ F(t)_x`.
pub fn mu_value(s: &HomogeneousForm, ys: &[Subscheme], t: &WeightVector) -> Result<Q> {
    if s.is_zero() {
        return Err(Error::ZeroForm);
    }
    build_profile(ys, t, s.degree())?.mu_of_form(s)
}

/// `F(t)` on degree-`N` forms.
pub fn f_value(ys: &[Subscheme], t: &WeightVector, degree: u32) -> Result<Q> {
    Ok(build_profile(ys, t, degree)?.f_value())
}

/// `(F(u·t), u·F(t))`, each side built from its own profile.
pub fn scale_check(ys: &[Subscheme], t: &WeightVector, u: &Q, degree: u32) -> Result<(Q, Q)> {
    let scaled = t.scaled(u)?;
    let lhs = f_value(ys, &scaled, degree)?;
    let rhs = u * f_value(ys, t, degree)?;
    Ok((lhs, rhs))
}

/// A basis with the `μ`-value of each element under one filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub elements: Vec<SparseVec>,
    pub mu_values: Vec<Q>,
}

impl AdaptedBasis {
    /// Elements as forms, given the monomial table of the ambient space.
    pub fn forms(&self, table: &MonomialTable) -> Vec<HomogeneousForm> {
        self.elements.iter().map(|v| table.to_form(v)).collect()
    }
}

fn chain(p: &FiltrationProfile) -> Result<Vec<RowSpace>> {
    let levels = p
        .levels()
        .ok_or_else(|| Error::InconsistentProfiles("profile carries no subspaces".into()))?;
    let mut c = vec![RowSpace::full(p.ambient_dim)];
    for l in levels {
        if !l.same_space(c.last().unwrap()) {
            c.push(l.clone());
        }
    }
    Ok(c)
}

/// A single basis adapted to both filtrations.
///
/// For each pair of levels `(i, j)`, picks vectors of `F^i ∩ G^j` completing
/// `F^{i+1} ∩ G^j + F^i ∩ G^{j+1}`; the picks together form a basis, and
/// the result is checked against both profiles before it is returned.
pub fn common_adapted_basis(
    p: &FiltrationProfile,
    q: &FiltrationProfile,
) -> Result<(AdaptedBasis, AdaptedBasis)> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::InconsistentProfiles(format!(
            "ambient dimensions {} and {}",
            p.ambient_dim, q.ambient_dim
        )));
    }
    let n = p.ambient_dim;
    let mut fs = chain(p)?;
    let mut gs = chain(q)?;
    fs.push(RowSpace::new(n));
    gs.push(RowSpace::new(n));
    let meet: Vec<Vec<RowSpace>> = fs
        .iter()
        .map(|f| gs.iter().map(|g| f.intersection(g)).collect())
        .collect();

    let mut elements = Vec::with_capacity(n);
    for i in 0..fs.len() - 1 {
        for j in 0..gs.len() - 1 {
            let mut span = meet[i + 1][j].sum(&meet[i][j + 1]);
            for v in meet[i][j].rows() {
                if span.insert(v.clone()) {
                    elements.push(v.clone());
                }
            }
        }
    }
    if !p.is_adapted(&elements) || !q.is_adapted(&elements) {
        return Err(Error::InconsistentProfiles(
            "no basis adapted to both filtrations was found".into(),
        ));
    }
    let mu = |prof: &FiltrationProfile| -> Result<AdaptedBasis> {
        Ok(AdaptedBasis {
            mu_values: elements
                .iter()
                .map(|v| prof.mu_of_vector(v))
                .collect::<Result<_>>()?,
            elements: elements.clone(),
        })
    };
    Ok((mu(p)?, mu(q)?))
}

/// Whether the support condition behind the concavity bound holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypotheses {
    Met,
    /// The supports have no common point.
    Unmet,
    /// Common support could not be decided for this catalog.
    Undecided(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcavityReport {
    /// `F(t)`.
    #[serde(with = "serde_q")]
    pub lhs: Q,
    /// `min_i (1/β_i) Σ_{m≥1} dim (𝓘_{Y_i}^m)_N / dim H⁰(O(N))`.
    #[serde(with = "serde_q")]
    pub rhs: Q,
    pub hypotheses: Hypotheses,
}

impl ConcavityReport {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// Both sides of `F(t) ≥ min_i (1/β_i) Σ_m h⁰(O(N) ⊗ 𝓘_{Y_i}^m) / h⁰(O(N))`
/// for weights normalized by `Σ β_i t_i = 1`. The values are computed even
/// when the hypotheses fail; the report says which case applies.
pub fn concavity_bound(
    ys: &[Subscheme],
    betas: &[Q],
    t: &WeightVector,
    degree: u32,
) -> Result<ConcavityReport> {
    if betas.len() != ys.len() || t.len() != ys.len() {
        return Err(Error::DimensionMismatch {
            expected: ys.len(),
            got: if betas.len() != ys.len() {
                betas.len()
            } else {
                t.len()
            },
        });
    }
    if betas.iter().any(|b| !b.is_positive()) {
        return Err(Error::WeightNormalization);
    }
    let norm: Q = betas.iter().zip(t.entries()).map(|(b, w)| b * w).sum();
    if norm != Q::from_integer(1.into()) {
        return Err(Error::WeightNormalization);
    }
    let lhs = f_value(ys, t, degree)?;
    let mut pieces = IdealPieces::new(ys)?;
    let ambient = Q::from_integer(dim_full(degree, pieces.nvars() - 1).into());
    let mut rhs: Option<Q> = None;
    for (i, beta) in betas.iter().enumerate() {
        let mut sum = 0usize;
        for m in 1.. {
            let d = pieces.power_piece(i, m, degree).dim();
            if d == 0 {
                break;
            }
            sum += d;
        }
        let v = Q::from_integer(sum.into()) / &ambient / beta;
        rhs = Some(match rhs {
            Some(r) if r <= v => r,
            _ => v,
        });
    }
    let hypotheses = match common_support_nonempty(ys) {
        Ok(true) => Hypotheses::Met,
        Ok(false) => Hypotheses::Unmet,
        Err(e) => Hypotheses::Undecided(e.to_string()),
    };
    Ok(ConcavityReport {
        lhs,
        rhs: rhs.expect("at least one subscheme"),
        hypotheses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn y(nvars: usize, gens: &[&str]) -> Subscheme {
        Subscheme::parse("Y", nvars, gens).unwrap()
    }

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::from_ints(v).unwrap()
    }

    fn jumps(p: &FiltrationProfile) -> Vec<(Q, usize)> {
        p.jumps().iter().map(|j| (j.x.clone(), j.dim)).collect()
    }

    #[test]
    fn single_point_on_the_line() {
        let p = build_profile(&[y(2, &["x0"])], &w(&[1]), 2).unwrap();
        assert_eq!(p.ambient_dim(), 3);
        assert_eq!(jumps(&p), vec![(qi(0), 2), (qi(1), 1), (qi(2), 0)]);
        assert_eq!(p.dim_at(&qi(0)), 3);
        assert_eq!(p.dim_at(&q(1, 2)), 2);
        assert_eq!(p.dim_at(&qi(1)), 2);
        assert_eq!(p.dim_at(&q(3, 2)), 1);
        assert_eq!(p.dim_at(&qi(3)), 0);
        assert_eq!(p.f_value(), qi(1));
    }

    #[test]
    fn two_points_on_the_line() {
        let ys = [y(2, &["x0"]), y(2, &["x1"])];
        let p = build_profile(&ys, &w(&[1, 1]), 2).unwrap();
        assert_eq!(jumps(&p), vec![(qi(0), 3), (qi(2), 0)]);
        assert_eq!(p.f_value(), qi(2));
    }

    #[test]
    fn constants_only() {
        let p = build_profile(&[y(3, &["x0"])], &w(&[1]), 0).unwrap();
        assert_eq!(jumps(&p), vec![(qi(0), 0)]);
        assert_eq!(p.f_value(), qi(0));
    }

    #[test]
    fn mu_examples() {
        let x0 = [y(3, &["x0"])];
        let s = HomogeneousForm::parse("x0^2*x1", 3).unwrap();
        assert_eq!(mu_value(&s, &x0, &w(&[1])).unwrap(), qi(2));
        let s = HomogeneousForm::parse("x0*x1*(x0 + x1)", 3).unwrap();
        assert_eq!(mu_value(&s, &x0, &w(&[1])).unwrap(), qi(1));
        let ys = [y(2, &["x0"]), y(2, &["x1"])];
        let s = HomogeneousForm::parse("x0*x1", 2).unwrap();
        assert_eq!(mu_value(&s, &ys, &w(&[1, 1])).unwrap(), qi(2));
        assert!(mu_value(&HomogeneousForm::zero(2, 2), &ys, &w(&[1, 1])).is_err());
    }

    #[test]
    fn scaling() {
        let one = [y(2, &["x0"])];
        assert_eq!(
            scale_check(&one, &w(&[1]), &qi(2), 2).unwrap(),
            (qi(2), qi(2))
        );
        let two = [y(2, &["x0"]), y(2, &["x1"])];
        assert_eq!(
            scale_check(&two, &w(&[1, 1]), &q(3, 2), 2).unwrap(),
            (qi(3), qi(3))
        );
        assert_eq!(
            scale_check(&one, &w(&[1]), &qi(0), 2),
            Err(Error::NonPositiveScale)
        );
    }

    #[test]
    fn adapted_basis_for_opposite_points() {
        let f = build_profile(&[y(2, &["x0"])], &w(&[1]), 1).unwrap();
        let g = build_profile(&[y(2, &["x1"])], &w(&[1]), 1).unwrap();
        let (a, b) = common_adapted_basis(&f, &g).unwrap();
        let table = f.monomial_table().unwrap();
        let mut forms: Vec<String> = a.forms(&table).iter().map(|s| s.to_string()).collect();
        forms.sort();
        assert_eq!(forms, vec!["x0", "x1"]);
        assert_eq!(a.mu_values.iter().sum::<Q>() / qi(2), f.f_value());
        assert_eq!(b.mu_values.iter().sum::<Q>() / qi(2), g.f_value());
    }

    #[test]
    fn adapted_basis_of_itself() {
        let f = build_profile(&[Subscheme::point("p", &[1, 2, 3]).unwrap()], &w(&[1]), 3).unwrap();
        let (a, _) = common_adapted_basis(&f, &f).unwrap();
        assert!(f.is_adapted(&a.elements));
        assert_eq!(f.mu_average(&a.elements).unwrap(), f.f_value());
    }

    #[test]
    fn concavity_examples() {
        let two = [y(2, &["x0"]), y(2, &["x1"])];
        let t = WeightVector::new(vec![q(1, 2), q(1, 2)]).unwrap();
        let r = concavity_bound(&two, &[qi(1), qi(1)], &t, 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (qi(1), qi(1)));
        assert_eq!(r.hypotheses, Hypotheses::Unmet);

        let one = [y(3, &["x0"])];
        let t = WeightVector::new(vec![q(1, 3)]).unwrap();
        let r = concavity_bound(&one, &[qi(3)], &t, 3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(1, 3), q(1, 3)));
        assert_eq!(r.hypotheses, Hypotheses::Met);
        assert!(r.holds());

        assert_eq!(
            concavity_bound(&one, &[qi(1)], &t, 3),
            Err(Error::WeightNormalization)
        );
    }

    #[test]
    fn json_round_trip() {
        let p = build_profile(&[y(2, &["x0"])], &w(&[1]), 2).unwrap();
        let js = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(js, r#"{"ambient_dim":3,"jumps":[[0,1,2],[1,1,1],[2,1,0]]}"#);
        let back: ProfileJson = serde_json::from_str(&js).unwrap();
        assert_eq!(FiltrationProfile::try_from(back).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_jumps() {
        let bad = vec![Jump { x: qi(1), dim: 0 }];
        assert!(FiltrationProfile::from_jumps(2, bad).is_err());
        let bad = vec![Jump { x: qi(0), dim: 1 }, Jump { x: qi(1), dim: 1 }];
        assert!(FiltrationProfile::from_jumps(2, bad).is_err());
    }
}
