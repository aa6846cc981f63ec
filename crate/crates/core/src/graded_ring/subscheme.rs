use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::form::HomogeneousForm;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Closed subscheme of Pⁿ given by homogeneous generators of its ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subscheme {
    label: String,
    nvars: usize,
    generators: Vec<HomogeneousForm>,
    codim_hint: Option<usize>,
}

impl Subscheme {
    pub fn new(label: impl Into<String>, generators: Vec<HomogeneousForm>) -> Result<Self> {
        let label = label.into();
        let first = generators.first().ok_or(Error::ZeroForm)?;
        let nvars = first.nvars();
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroForm);
            }
            if g.degree() == 0 {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(Subscheme {
            label,
            nvars,
            generators,
            codim_hint: None,
        })
    }

    pub fn parse(label: impl Into<String>, nvars: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| HomogeneousForm::parse(g, nvars))
            .collect::<Result<Vec<_>>>()?;
        Subscheme::new(label, gens)
    }

    /// Parses `"x0, x1"`: generators separated by commas.
    pub fn parse_list(label: impl Into<String>, nvars: usize, list: &str) -> Result<Self> {
        let parts: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        Subscheme::parse(label, nvars, &parts)
    }

    /// Reduced rational point of Pⁿ: generated by `p_k x_i - p_i x_k`,
    /// where `k` indexes the first nonzero coordinate.
    pub fn point(label: impl Into<String>, coords: &[i64]) -> Result<Self> {
        let nvars = coords.len();
        let k = coords
            .iter()
            .position(|&c| c != 0)
            .ok_or(Error::ZeroPoint)?;
        let gens = (0..nvars)
            .filter(|&i| i != k)
            .map(|i| {
                let mut c = vec![Q::zero(); nvars];
                c[i] = Q::from_integer(coords[k].into());
                c[k] = -Q::from_integer(coords[i].into());
                HomogeneousForm::linear(&c).primitive()
            })
            .collect();
        let mut y = Subscheme::new(label, gens)?;
        y.codim_hint = Some(nvars - 1);
        Ok(y)
    }

    /// Hyperplane `Σ c_i x_i = 0`.
    pub fn hyperplane(label: impl Into<String>, coeffs: &[i64]) -> Result<Self> {
        let c: Vec<Q> = coeffs.iter().map(|&v| Q::from_integer(v.into())).collect();
        Subscheme::new(label, vec![HomogeneousForm::linear(&c)])
    }

    /// `(x_{v_1}^{p_1}, ..., x_{v_k}^{p_k})`, a regular sequence of coordinate powers.
    pub fn coordinate(
        label: impl Into<String>,
        nvars: usize,
        vars: &[(usize, u32)],
    ) -> Result<Self> {
        let gens = vars
            .iter()
            .map(|&(v, p)| {
                let mut m = vec![0; nvars];
                m[v] = p;
                HomogeneousForm::monomial(m, Q::from_integer(BigInt::from(1)))
            })
            .collect();
        let mut y = Subscheme::new(label, gens)?;
        y.codim_hint = Some(vars.len());
        Ok(y)
    }

    pub fn with_codim_hint(mut self, codim: usize) -> Self {
        self.codim_hint = Some(codim);
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Dimension `n` of the ambient Pⁿ.
    pub fn ambient_dim(&self) -> usize {
        self.nvars - 1
    }

    pub fn generators(&self) -> &[HomogeneousForm] {
        &self.generators
    }

    pub fn codim_hint(&self) -> Option<usize> {
        self.codim_hint
    }

    pub fn min_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree()).min().unwrap()
    }

    /// Scheme-theoretic intersection: the sum of the two ideals.
    pub fn intersection(&self, other: &Subscheme) -> Result<Subscheme> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Subscheme::new(format!("{}∩{}", self.label, other.label), gens)
    }

    /// Sum of subschemes: the product of the two ideals.
    pub fn sum(&self, other: &Subscheme) -> Result<Subscheme> {
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.mul(b)))
            .collect();
        Subscheme::new(format!("{}+{}", self.label, other.label), gens)
    }

    /// `m·Y`: the ideal power generated by all m-fold products.
    pub fn power(&self, m: u32) -> Result<Subscheme> {
        assert!(m >= 1);
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.sum(self)?;
        }
        acc.label = format!("{}^{}", self.label, m);
        Ok(acc)
    }

    pub fn to_spec(&self) -> SubschemeSpec {
        SubschemeSpec {
            label: self.label.clone(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            codim_hint: self.codim_hint,
        }
    }
}

/// Catalog entry as stored in JSON: `{"label": ..., "generators": ["x0^2*x1 - x2^3"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubschemeSpec {
    pub label: String,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim_hint: Option<usize>,
}

impl SubschemeSpec {
    pub fn build(&self, nvars: usize) -> Result<Subscheme> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        let mut y = Subscheme::parse(self.label.clone(), nvars, &gens)?;
        y.codim_hint = self.codim_hint;
        Ok(y)
    }
}

/// Reads a catalog: either a single entry or a JSON array of entries.
pub fn load_catalog(json: &str, nvars: usize) -> Result<Vec<Subscheme>> {
    let specs: Vec<SubschemeSpec> =
        match serde_json::from_str::<Vec<SubschemeSpec>>(json) {
            Ok(v) => v,
            Err(_) => vec![serde_json::from_str::<SubschemeSpec>(json)
                .map_err(|e| Error::Parse(e.to_string()))?],
        };
    specs.iter().map(|s| s.build(nvars)).collect()
}
