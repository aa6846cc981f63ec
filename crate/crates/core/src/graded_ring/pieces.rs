use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;

use super::form::{HomogeneousForm, Monomial};
use super::subscheme::Subscheme;
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseVec};
use crate::monomial_order::{threshold_set, ExponentVector, SaturatedSet, WeightVector};
use crate::rational::Q;

/// `h⁰(Pⁿ, O(D)) = C(D+n, n)`.
pub fn dim_full(degree: u32, n: usize) -> usize {
    binomial(degree as u64 + n as u64, n as u64) as usize
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-`D` monomials in a fixed order, with a reverse index.
#[derive(Debug)]
pub struct MonomialTable {
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialTable {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill(&mut cur, 0, degree, &mut monomials);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialTable {
            degree,
            monomials,
            index,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &[u32]) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_sparse(&self, f: &HomogeneousForm) -> SparseVec {
        debug_assert_eq!(f.degree(), self.degree);
        SparseVec::from_rationals(
            f.terms()
                .map(|(m, c)| (self.index_of(m).expect("monomial in table"), c.clone())),
        )
    }

    pub fn to_form(&self, v: &SparseVec) -> HomogeneousForm {
        let nvars = self.monomials.first().map_or(0, |m| m.len());
        HomogeneousForm::new(
            nvars,
            v.entries()
                .iter()
                .map(|(c, x)| (self.monomials[*c].clone(), Q::from_integer(x.clone()))),
        )
        .map(|f| {
            if f.is_zero() {
                HomogeneousForm::zero(nvars, self.degree)
            } else {
                f
            }
        })
        .expect("table monomials share a degree")
    }
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// Graded pieces of products `Π 𝓘_{Y_i}^{b_i}` and of their sums, cached
/// by `(b, D)`. One instance serves one computation over a fixed list of
/// subschemes; it is cheap to create.
pub struct IdealPieces<'a> {
    nvars: usize,
    ys: &'a [Subscheme],
    gens: Vec<Vec<(u32, Vec<(Monomial, BigInt)>)>>,
    tables: HashMap<u32, Rc<MonomialTable>>,
    cache: HashMap<(ExponentVector, u32), Rc<RowSpace>>,
}

impl<'a> IdealPieces<'a> {
    pub fn new(ys: &'a [Subscheme]) -> Result<Self> {
        let nvars = ys
            .first()
            .ok_or(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            })?
            .nvars();
        if let Some(y) = ys.iter().find(|y| y.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: y.nvars(),
            });
        }
        let gens = ys
            .iter()
            .map(|y| {
                y.generators()
                    .iter()
                    .map(|g| (g.degree(), g.primitive_integer_terms()))
                    .collect()
            })
            .collect();
        Ok(IdealPieces {
            nvars,
            ys,
            gens,
            tables: HashMap::new(),
            cache: HashMap::new(),
        })
    }

    pub fn subschemes(&self) -> &[Subscheme] {
        self.ys
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn table(&mut self, degree: u32) -> Rc<MonomialTable> {
        let nvars = self.nvars;
        self.tables
            .entry(degree)
            .or_insert_with(|| Rc::new(MonomialTable::new(nvars, degree)))
            .clone()
    }

    /// Degree-`D` piece of `Π_i 𝓘_{Y_i}^{b_i}`, built as
    /// `Σ_g g · (𝓘^{b - e_j})_{D - deg g}` over generators `g` of the first
    /// `Y_j` with `b_j > 0`.
    pub fn product_piece(&mut self, b: &ExponentVector, degree: u32) -> Rc<RowSpace> {
        let key = (b.clone(), degree);
        if let Some(s) = self.cache.get(&key) {
            return s.clone();
        }
        let table = self.table(degree);
        let space = match b.entries().iter().position(|&e| e > 0) {
            None => RowSpace::full(table.len()),
            Some(j) => {
                let mut rest = b.entries().to_vec();
                rest[j] -= 1;
                let rest = ExponentVector::new(rest).expect("nonempty");
                let mut space = RowSpace::new(table.len());
                for gi in 0..self.gens[j].len() {
                    let gdeg = self.gens[j][gi].0;
                    if gdeg > degree {
                        continue;
                    }
                    let lower = self.product_piece(&rest, degree - gdeg);
                    let low_table = self.table(degree - gdeg);
                    let g = &self.gens[j][gi].1;
                    for row in lower.rows() {
                        space.insert(multiply(row, &low_table, g, &table));
                    }
                }
                space
            }
        };
        let space = Rc::new(space);
        self.cache.insert(key, space.clone());
        space
    }

    /// Degree-`D` piece of `𝓘(M) = Σ_{b ∈ M} Π 𝓘_{Y_i}^{b_i}`; only the
    /// minimal generators of `M` are needed.
    pub fn saturated_piece(&mut self, m: &SaturatedSet, degree: u32) -> Result<RowSpace> {
        if m.dim() != self.ys.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ys.len(),
                got: m.dim(),
            });
        }
        let mut total = RowSpace::new(self.table(degree).len());
        for b in m.generators() {
            let p = self.product_piece(b, degree);
            total.extend(&p);
        }
        Ok(total)
    }

    /// Degree-`D` piece of `𝓘(t, x)`.
    pub fn filtration_piece(&mut self, t: &WeightVector, x: &Q, degree: u32) -> Result<RowSpace> {
        if t.len() != self.ys.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ys.len(),
                got: t.len(),
            });
        }
        let k = threshold_set(t, x)?;
        self.saturated_piece(&k, degree)
    }

    /// Degree-`D` piece of `𝓘_{Y_i}^m`.
    pub fn power_piece(&mut self, i: usize, m: u32, degree: u32) -> Rc<RowSpace> {
        let mut b = vec![0; self.ys.len()];
        b[i] = m;
        self.product_piece(&ExponentVector::new(b).expect("nonempty"), degree)
    }
}

fn multiply(
    row: &SparseVec,
    low: &MonomialTable,
    g: &[(Monomial, BigInt)],
    high: &MonomialTable,
) -> SparseVec {
    let mut entries = Vec::with_capacity(row.entries().len() * g.len());
    for (c, a) in row.entries() {
        let m = &low.monomials()[*c];
        for (gm, b) in g {
            let prod: Monomial = m.iter().zip(gm).map(|(x, y)| x + y).collect();
            entries.push((high.index_of(&prod).expect("degree matches"), a * b));
        }
    }
    SparseVec::from_entries(entries)
}

/// `dim_ℚ (𝓘_Y^m)_D`; `m = 0` gives the whole space.
pub fn graded_dim_ideal_power(y: &Subscheme, m: u32, degree: u32) -> usize {
    let ys = std::slice::from_ref(y);
    let mut pieces = IdealPieces::new(ys).expect("one subscheme");
    pieces.power_piece(0, m, degree).dim()
}

/// `dim_ℚ 𝓘(t, x)_D` where `𝓘(t, x) = Σ_{t·b ≥ x} Π 𝓘_{Y_i}^{b_i}`.
pub fn graded_dim_filtration_ideal(
    ys: &[Subscheme],
    t: &WeightVector,
    x: &Q,
    degree: u32,
) -> Result<usize> {
    IdealPieces::new(ys)?
        .filtration_piece(t, x, degree)
        .map(|s| s.dim())
}

/// Rank over ℚ of forms sharing a degree.
pub fn span_rank(forms: &[HomogeneousForm]) -> Result<usize> {
    let Some(first) = forms.first() else {
        return Ok(0);
    };
    if let Some(f) = forms.iter().find(|f| f.degree() != first.degree()) {
        return Err(Error::MixedDegrees(first.degree(), f.degree()));
    }
    let table = MonomialTable::new(first.nvars(), first.degree());
    let mut s = RowSpace::new(table.len());
    for f in forms {
        s.insert(table.to_sparse(f));
    }
    Ok(s.dim())
}
