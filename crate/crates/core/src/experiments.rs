//! Point sampling, scans of `Σ β_i m_{Y_i,S}(P) ≤ (1+ε) h(P)`, the
//! σ-selection diagnostic, the four-lines comparison table and random
//! coordinate instances for property checks.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded_ring::{
    common_support_nonempty, on_support, HomogeneousForm, Subscheme, SubschemeSpec,
};
use crate::heights::{height, proximity, weil, ExactLog, LogSum, Place, PlaceSet, ProjectivePoint};
use crate::linalg::nullspace;
use crate::rational::{parse_q, serde_opt_q, serde_q, Q};
use crate::surface::{
    beta_closed_form, beta_surface_truncated, closed_form_xi, four_lines_divisor,
    four_lines_polarization, seshadri,
};

/// Canonical points of Pⁿ(ℚ) with coprime coordinates of absolute value at
/// most `bound`, sorted by height and then coordinates.
pub fn sample_points(n: usize, bound: u32) -> Vec<ProjectivePoint> {
    if bound == 0 {
        return Vec::new();
    }
    let b = bound as i64;
    let mut out = Vec::new();
    let mut cur = vec![0i64; n + 1];
    fn go(
        i: usize,
        b: i64,
        cur: &mut Vec<i64>,
        lead: bool,
        g: i64,
        out: &mut Vec<ProjectivePoint>,
    ) {
        if i == cur.len() {
            if lead && g == 1 {
                out.push(ProjectivePoint::from_i64(cur).unwrap());
            }
            return;
        }
        // Before the first nonzero coordinate only zero or positive values occur.
        let lo = if lead { -b } else { 0 };
        for c in lo..=b {
            cur[i] = c;
            go(i + 1, b, cur, lead || c != 0, g.gcd(&c), out);
        }
        cur[i] = 0;
    }
    go(0, b, &mut cur, false, 0, &mut out);
    out.sort_by(|p, q| p.max_abs().cmp(&q.max_abs()).then_with(|| p.cmp(q)));
    out
}

/// Settings for one scan.
#[derive(Clone, Debug)]
pub struct InequalityConfig {
    pub subschemes: Vec<Subscheme>,
    pub betas: Vec<Q>,
    pub places: PlaceSet,
    pub epsilon: Q,
    /// Violations are reported only at heights at least this large.
    pub height_floor: f64,
    /// Points where one of these forms vanishes are excluded.
    pub exceptional: Vec<HomogeneousForm>,
}

pub fn default_height_floor() -> f64 {
    10f64.ln()
}

impl InequalityConfig {
    pub fn new(
        subschemes: Vec<Subscheme>,
        betas: Vec<Q>,
        places: PlaceSet,
        epsilon: Q,
    ) -> Result<Self> {
        let cfg = InequalityConfig {
            subschemes,
            betas,
            places,
            epsilon,
            height_floor: default_height_floor(),
            exceptional: Vec::new(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_exceptional(mut self, forms: Vec<HomogeneousForm>) -> Self {
        self.exceptional = forms;
        self
    }

    pub fn with_height_floor(mut self, floor: f64) -> Self {
        self.height_floor = floor;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.subschemes.is_empty() || self.betas.len() != self.subschemes.len() {
            return Err(Error::Config("one β per subscheme is required".into()));
        }
        if self.betas.iter().any(|b| !b.is_positive()) {
            return Err(Error::Config("β values must be positive".into()));
        }
        if !self.epsilon.is_positive() {
            return Err(Error::Config("ε must be positive".into()));
        }
        let nvars = self.subschemes[0].nvars();
        if self.subschemes.iter().any(|y| y.nvars() != nvars)
            || self.exceptional.iter().any(|f| f.nvars() != nvars)
        {
            return Err(Error::Config("all forms must live on the same Pⁿ".into()));
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.subschemes[0].nvars()
    }

    /// Reads the JSON form described by [`ConfigFile`].
    pub fn from_json(json: &str) -> Result<Self> {
        let f: ConfigFile = serde_json::from_str(json).map_err(|e| Error::Config(e.to_string()))?;
        f.build()
    }
}

/// On-disk scan configuration:
///
/// ```json
/// {"n": 2,
///  "subschemes": [{"label": "L0", "generators": ["x0"], "beta": "1/3"}],
///  "places": "inf,2,3", "epsilon": "1/2",
///  "height_floor": 2.302585092994046, "exceptional": ["x0 + x1"]}
/// ```
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigFile {
    pub n: usize,
    pub subschemes: Vec<ConfigSubscheme>,
    pub places: String,
    pub epsilon: String,
    #[serde(default)]
    pub height_floor: Option<f64>,
    #[serde(default)]
    pub exceptional: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigSubscheme {
    #[serde(flatten)]
    pub spec: SubschemeSpec,
    pub beta: String,
}

impl ConfigFile {
    pub fn build(&self) -> Result<InequalityConfig> {
        let nvars = self.n + 1;
        let subschemes = self
            .subschemes
            .iter()
            .map(|s| s.spec.build(nvars))
            .collect::<Result<Vec<_>>>()?;
        let betas = self
            .subschemes
            .iter()
            .map(|s| parse_q(&s.beta))
            .collect::<Result<Vec<_>>>()?;
        let exceptional = self
            .exceptional
            .iter()
            .map(|f| HomogeneousForm::parse(f, nvars))
            .collect::<Result<Vec<_>>>()?;
        let cfg = InequalityConfig::new(
            subschemes,
            betas,
            self.places.parse()?,
            parse_q(&self.epsilon)?,
        )?
        .with_exceptional(exceptional)
        .with_height_floor(self.height_floor.unwrap_or_else(default_height_floor));
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub point: ProjectivePoint,
    pub height: f64,
    /// `m_{Y_i,S}(P)` for each subscheme.
    pub proximity: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs / rhs`, absent at height 0.
    pub ratio: Option<f64>,
    /// `lhs > rhs`, decided exactly.
    pub exceeds: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ScanReport {
    pub sample_size: usize,
    /// Points on the support of some `Y_i`.
    pub skipped: usize,
    /// Points on the exceptional set.
    pub excluded: usize,
    pub evaluated: usize,
    /// Evaluated points of height 0, where the ratio is undefined.
    pub zero_height: usize,
    /// Exceedances below the height floor, counted but not listed.
    pub below_floor: usize,
    /// Exceedances at or above the floor.
    pub violations: Vec<ScanRow>,
    pub max_ratio: Option<ScanRow>,
    /// Every evaluated row, when requested.
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

enum Outcome {
    Skipped,
    Excluded,
    Evaluated(ScanRow),
}

fn evaluate(cfg: &InequalityConfig, p: &ProjectivePoint) -> Outcome {
    let coords = p.to_q();
    if cfg.subschemes.iter().any(|y| on_support(y, &coords)) {
        return Outcome::Skipped;
    }
    if cfg.exceptional.iter().any(|f| f.eval(&coords).is_zero()) {
        return Outcome::Excluded;
    }
    let prox: Vec<ExactLog> = cfg
        .subschemes
        .iter()
        .map(|y| proximity(y, &cfg.places, p).expect("off support"))
        .collect();
    let h = height(p);
    let mut lhs = LogSum::new();
    for (b, m) in cfg.betas.iter().zip(&prox) {
        lhs.push(b.clone(), m);
    }
    let rhs = LogSum::term(Q::from_integer(1.into()) + &cfg.epsilon, &h);
    let (l, r) = (lhs.value(), rhs.value());
    Outcome::Evaluated(ScanRow {
        point: p.clone(),
        height: h.value(),
        proximity: prox.iter().map(ExactLog::value).collect(),
        lhs: l,
        rhs: r,
        ratio: (!h.is_zero()).then(|| l / r),
        exceeds: lhs.cmp_exact(&rhs) == Ordering::Greater,
    })
}

/// Evaluates both sides at every point, in parallel; the report keeps the
/// input order, so it does not depend on scheduling.
pub fn scan_inequality(
    cfg: &InequalityConfig,
    points: &[ProjectivePoint],
    keep_rows: bool,
) -> Result<ScanReport> {
    cfg.validate()?;
    if let Some(p) = points.iter().find(|p| p.nvars() != cfg.nvars()) {
        return Err(Error::DimensionMismatch {
            expected: cfg.nvars(),
            got: p.nvars(),
        });
    }
    let outcomes: Vec<Outcome> = points.par_iter().map(|p| evaluate(cfg, p)).collect();
    let mut report = ScanReport {
        sample_size: points.len(),
        ..ScanReport::default()
    };
    for o in outcomes {
        match o {
            Outcome::Skipped => report.skipped += 1,
            Outcome::Excluded => report.excluded += 1,
            Outcome::Evaluated(row) => {
                report.evaluated += 1;
                if row.ratio.is_none() {
                    report.zero_height += 1;
                }
                if let Some(r) = row.ratio {
                    if report
                        .max_ratio
                        .as_ref()
                        .is_none_or(|m| r > m.ratio.unwrap())
                    {
                        report.max_ratio = Some(row.clone());
                    }
                }
                if row.exceeds {
                    if row.height >= cfg.height_floor - 1e-12 {
                        report.violations.push(row.clone());
                    } else {
                        report.below_floor += 1;
                    }
                }
                if keep_rows {
                    report.rows.push(row);
                }
            }
        }
    }
    Ok(report)
}

/// Lines through two of the pairwise intersection points of the given
/// lines, other than the given lines themselves. For four lines in general
/// position these are the three diagonals of the complete quadrilateral.
pub fn diagonal_lines(lines: &[Subscheme]) -> Result<Vec<HomogeneousForm>> {
    let coeffs = |y: &Subscheme| -> Result<Vec<Q>> {
        let g = &y.generators()[0];
        if y.generators().len() != 1 || g.degree() != 1 || y.nvars() != 3 {
            return Err(Error::UnsupportedCatalog(y.label().to_string()));
        }
        Ok((0..3)
            .map(|i| {
                let mut m = vec![0; 3];
                m[i] = 1;
                g.coefficient(&m)
            })
            .collect())
    };
    let rows = lines.iter().map(coeffs).collect::<Result<Vec<_>>>()?;
    let mut points: Vec<(usize, usize, ProjectivePoint)> = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let ker = nullspace(&[rows[i].clone(), rows[j].clone()], 3);
            if ker.len() == 1 {
                points.push((i, j, ProjectivePoint::from_rationals(&ker[0])?));
            }
        }
    }
    let on_given = |a: &ProjectivePoint, b: &ProjectivePoint| {
        rows.iter().any(|r| {
            let ev = |p: &ProjectivePoint| {
                r.iter()
                    .zip(p.to_q())
                    .map(|(c, x)| c * x)
                    .fold(Q::zero(), |s, t| s + t)
            };
            ev(a).is_zero() && ev(b).is_zero()
        })
    };
    let mut out: Vec<HomogeneousForm> = Vec::new();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            let (pa, pb) = (&points[a].2, &points[b].2);
            if pa == pb || on_given(pa, pb) {
                continue;
            }
            let ker = nullspace(&[pa.to_q(), pb.to_q()], 3);
            let line = HomogeneousForm::linear(&ker[0]).primitive();
            if !out.contains(&line) {
                out.push(line);
            }
        }
    }
    Ok(out)
}

/// The lines `x0, x1, x2, x0 + x1 + x2` in P².
pub fn four_general_lines() -> Vec<Subscheme> {
    [
        ("L0", [1, 0, 0]),
        ("L1", [0, 1, 0]),
        ("L2", [0, 0, 1]),
        ("L3", [1, 1, 1]),
    ]
    .iter()
    .map(|(l, c)| Subscheme::hyperplane(*l, c).unwrap())
    .collect()
}

/// Indices of the largest `λ`-values, in decreasing order (`None` counts
/// as +∞, ties by index), forming the longest prefix whose supports still
/// share a point. Only the order of the values matters.
pub fn sigma_select_values<T: Ord>(values: &[Option<T>], ys: &[Subscheme]) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| {
        let c = match (&values[i], &values[j]) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => b.cmp(a),
        };
        c.then(i.cmp(&j))
    });
    let mut chosen: Vec<usize> = Vec::new();
    for &i in &order {
        let mut trial: Vec<Subscheme> = chosen.iter().map(|&k| ys[k].clone()).collect();
        trial.push(ys[i].clone());
        if !common_support_nonempty(&trial)? {
            break;
        }
        chosen.push(i);
    }
    Ok(chosen)
}

/// σ-selection at `P` and `v`, using `λ_{Y_i,v}(P)`.
pub fn sigma_select(p: &ProjectivePoint, v: Place, ys: &[Subscheme]) -> Result<Vec<usize>> {
    let values = ys
        .iter()
        .map(|y| match weil(y, v, p) {
            Ok(l) => Ok(Some(l)),
            Err(Error::OnSupport(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    sigma_select_values(&values, ys)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example5Row {
    pub l: i64,
    pub a2: i64,
    pub ad: i64,
    #[serde(with = "serde_q")]
    pub xi: Q,
    #[serde(with = "serde_q")]
    pub beta_closed: Q,
    #[serde(with = "serde_q")]
    pub epsilon: Q,
    /// `(1/3)·ε`, the right side of `β ≥ (r/(n+1))·ε` with `r = 1, n = 2`.
    #[serde(with = "serde_q")]
    pub bound: Q,
    #[serde(with = "serde_q")]
    pub three_l_over_4: Q,
    /// Truncated β at the requested level, if any.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_opt_q")]
    pub beta_trunc: Option<Q>,
}

/// Rows `ℓ = 1..=l_max` for `A(ℓ) = (3ℓ+1)H − ℓ(E_1+E_2+E_3)` and
/// `D_1 = H − E_1` on the blow-up of P² in three points.
pub fn example5_table(l_max: i64, trunc_level: Option<u32>) -> Result<Vec<Example5Row>> {
    let d = four_lines_divisor(1);
    (1..=l_max)
        .map(|l| {
            let a = four_lines_polarization(l);
            let eps = seshadri(&a, &d)?
                .value
                .ok_or(Error::UnsupportedClosedForm)?;
            Ok(Example5Row {
                l,
                a2: a.self_intersection(),
                ad: a.dot(&d)?,
                xi: closed_form_xi(&a, &d)?,
                beta_closed: beta_closed_form(&a, &d)?,
                bound: &eps / Q::from_integer(3.into()),
                epsilon: eps,
                three_l_over_4: Q::new((3 * l).into(), 4.into()),
                beta_trunc: trunc_level
                    .map(|n| beta_surface_truncated(&a, &d, n).map(|b| b.value))
                    .transpose()?,
            })
        })
        .collect()
}

/// Coordinate subschemes `(x_v^{p_v} : v ∈ V_i)` on disjoint variable sets
/// `V_i` of Pⁿ, leaving at least one variable unused so that the supports
/// share a point. Each ideal is generated by a regular sequence.
pub fn random_coordinate_family<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_power: u32,
) -> Vec<Subscheme> {
    assert!(nvars >= 2);
    let mut vars: Vec<usize> = (0..nvars).collect();
    for i in (1..vars.len()).rev() {
        vars.swap(i, rng.gen_range(0..=i));
    }
    let used = rng.gen_range(1..nvars);
    let mut out = Vec::new();
    let mut i = 0;
    while i < used {
        let len = rng.gen_range(1..=used - i);
        let block: Vec<(usize, u32)> = vars[i..i + len]
            .iter()
            .map(|&v| (v, rng.gen_range(1..=max_power)))
            .collect();
        out.push(Subscheme::coordinate(format!("Y{}", out.len()), nvars, &block).unwrap());
        i += len;
    }
    out
}

/// Random weights `t` with entries in `{0, 1/den, ..., max/den}`, not all zero.
pub fn random_weights<R: Rng>(rng: &mut R, len: usize, max: i64, den: i64) -> crate::WeightVector {
    loop {
        let v: Vec<Q> = (0..len)
            .map(|_| Q::new(BigInt::from(rng.gen_range(0..=max)), BigInt::from(den)))
            .collect();
        if let Ok(w) = crate::WeightVector::new(v) {
            return w;
        }
    }
}
