use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::form::HomogeneousForm;
use super::subscheme::Subscheme;
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::rational::Q;

/// Supports the position checker can reason about exactly.
#[derive(Clone, Debug)]
enum Shape {
    /// Common zeros of linear forms.
    Linear(Vec<Vec<Q>>),
    /// Zero set of one form of positive degree.
    Hypersurface(HomogeneousForm),
}

/// A generator `c·x_i^p` has the same zero set as `x_i`.
fn reduced(g: &HomogeneousForm) -> HomogeneousForm {
    if g.num_terms() == 1 {
        let (m, _) = g.terms().next().unwrap();
        if m.iter().filter(|&&e| e > 0).count() == 1 {
            let i = m.iter().position(|&e| e > 0).unwrap();
            return HomogeneousForm::var(g.nvars(), i);
        }
    }
    g.clone()
}

fn linear_coeffs(g: &HomogeneousForm) -> Vec<Q> {
    let n = g.nvars();
    (0..n)
        .map(|i| {
            let mut m = vec![0; n];
            m[i] = 1;
            g.coefficient(&m)
        })
        .collect()
}

fn shape(y: &Subscheme) -> Result<Shape> {
    let gens: Vec<HomogeneousForm> = y.generators().iter().map(reduced).collect();
    if gens.iter().all(|g| g.degree() == 1) {
        return Ok(Shape::Linear(gens.iter().map(linear_coeffs).collect()));
    }
    if gens.len() == 1 {
        return Ok(Shape::Hypersurface(gens[0].clone()));
    }
    Err(Error::UnsupportedCatalog(y.label().to_string()))
}

/// Codimension of the support of a catalog member.
pub fn support_codim(y: &Subscheme) -> Result<usize> {
    match shape(y)? {
        Shape::Linear(rows) => Ok(y.nvars() - nullspace(&rows, y.nvars()).len()),
        Shape::Hypersurface(_) => Ok(1),
    }
}

/// Dimension of `∩ Supp Y_i` over the algebraic closure, `None` when empty.
/// An empty list is rejected.
pub fn support_dim(ys: &[Subscheme]) -> Result<Option<usize>> {
    let Some(first) = ys.first() else {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    };
    let nvars = first.nvars();
    let mut linear = Vec::new();
    let mut hyper = Vec::new();
    for y in ys {
        if y.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: y.nvars(),
            });
        }
        match shape(y)? {
            Shape::Linear(rows) => linear.extend(rows),
            Shape::Hypersurface(f) => hyper.push(f),
        }
    }
    let basis = nullspace(&linear, nvars);
    if basis.is_empty() {
        return Ok(None);
    }
    let d = basis.len() - 1;
    let images: Vec<Vec<Q>> = (0..nvars)
        .map(|i| basis.iter().map(|v| v[i].clone()).collect())
        .collect();
    let restricted: Vec<HomogeneousForm> = hyper
        .iter()
        .map(|f| f.substitute_linear(&images))
        .filter(|f| !f.is_zero())
        .collect();
    match (restricted.len(), d) {
        (0, _) => Ok(Some(d)),
        (_, 0) => Ok(None),
        (1, _) => Ok(Some(d - 1)),
        (_, 1) => Ok(if binary_common_root(&restricted) {
            Some(0)
        } else {
            None
        }),
        _ => Err(Error::UnsupportedCatalog(
            "several hypersurfaces meeting in dimension ≥ 2".into(),
        )),
    }
}

pub fn common_support_nonempty(ys: &[Subscheme]) -> Result<bool> {
    Ok(support_dim(ys)?.is_some())
}

/// Whether binary forms share a zero in P¹ over the algebraic closure.
fn binary_common_root(forms: &[HomogeneousForm]) -> bool {
    if forms
        .iter()
        .all(|f| f.coefficient(&[f.degree(), 0]).is_zero())
    {
        return true;
    }
    let mut g: Vec<Q> = Vec::new();
    for f in forms {
        let p: Vec<Q> = (0..=f.degree())
            .map(|e| f.coefficient(&[e, f.degree() - e]))
            .collect();
        g = poly_gcd(g, p);
    }
    g.len() > 1
}

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Monic gcd of univariate polynomials given by ascending coefficients.
fn poly_gcd(a: Vec<Q>, b: Vec<Q>) -> Vec<Q> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    let lead = b.last().unwrap();
    while r.len() >= b.len() {
        let f = r.last().unwrap() / lead;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionReport {
    pub general: bool,
    /// First violating index set, ordered by size then lexicographically.
    pub witness: Option<Vec<usize>>,
}

/// Checks `codim ∩_{i∈I} Y_i ≥ Σ_{i∈I} codim Y_i` for every nonempty `I`,
/// with empty intersections always allowed.
pub fn check_general_position(ys: &[Subscheme]) -> Result<PositionReport> {
    let n = ys.first().map_or(0, |y| y.ambient_dim());
    let codims = ys.iter().map(support_codim).collect::<Result<Vec<_>>>()?;
    for size in 2..=ys.len() {
        for subset in combinations(ys.len(), size) {
            let chosen: Vec<Subscheme> = subset.iter().map(|&i| ys[i].clone()).collect();
            if let Some(dim) = support_dim(&chosen)? {
                let need: usize = subset.iter().map(|&i| codims[i]).sum();
                if n - dim < need {
                    return Ok(PositionReport {
                        general: false,
                        witness: Some(subset),
                    });
                }
            }
        }
    }
    Ok(PositionReport {
        general: true,
        witness: None,
    })
}

/// k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Whether `P` lies on the support: every generator vanishes there.
pub fn on_support(y: &Subscheme, point: &[Q]) -> bool {
    y.generators().iter().all(|g| g.eval(point).is_zero())
}
