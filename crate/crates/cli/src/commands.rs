use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use dioph_core::beta::{beta_convergence, beta_truncated};
use dioph_core::experiments::{
    diagonal_lines, example5_table, four_general_lines, random_coordinate_family, random_weights,
    sample_points, scan_inequality, InequalityConfig, ScanRow,
};
use dioph_core::filtration::{
    build_profile, common_adapted_basis, concavity_bound, mu_value, ProfileJson,
};
use dioph_core::graded_ring::{check_general_position, load_catalog, HomogeneousForm, Subscheme};
use dioph_core::heights::{height_over, proximity, ExactLog, Place, PlaceSet, ProjectivePoint};
use dioph_core::monomial_order::WeightVector;
use dioph_core::rational::{fmt_q, fmt_q_approx, serde_opt_q, serde_q, Q};
use dioph_core::surface::{
    beta_closed_form, beta_surface_truncated, closed_form_xi, compare_beta_seshadri, is_nef_at,
    BetaSeshadriComparison, NefCheck, PicardClass, Seshadri, SurfaceBeta,
};

use crate::render::{Report, Table};
use crate::{Ideals, Points};

fn subschemes(ideals: &Ideals) -> Result<Vec<Subscheme>> {
    let mut ys = Vec::new();
    if let Some(path) = &ideals.catalog {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        ys.extend(load_catalog(&text, ideals.space)?);
    }
    for list in &ideals.ideals {
        ys.push(Subscheme::parse_list(
            format!("Y{}", ys.len() + 1),
            ideals.space,
            list,
        )?);
    }
    if ys.is_empty() {
        bail!("give at least one --ideal or a --catalog");
    }
    Ok(ys)
}

fn weight_vector(t: &[Q], r: usize) -> Result<WeightVector> {
    if t.len() != r {
        bail!("{} weights given for {r} subschemes", t.len());
    }
    Ok(WeightVector::new(t.to_vec())?)
}

fn read_points(points: &Points) -> Result<Vec<ProjectivePoint>> {
    match (&points.point, &points.points_file) {
        (Some(p), _) => Ok(vec![p.clone()]),
        (None, Some(path)) => read_points_file(path),
        (None, None) => bail!("give --point or --points"),
    }
}

fn read_points_file(path: &Path) -> Result<Vec<ProjectivePoint>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().with_context(|| format!("bad point line {l:?}")))
        .collect()
}

fn log_cell(x: &ExactLog) -> String {
    format!("{x} ({:.12})", x.value())
}

// ------------------------------------------------------------------ beta

pub fn beta(nvars: usize, ideal: &str, degree: u32, level: u32, history: bool) -> Result<Report> {
    let y = Subscheme::parse_list("Y", nvars, ideal)?;
    if history {
        let rows = beta_convergence(&y, degree, level)?;
        let mut table = Table::new(&["N", "numerator", "denominator", "beta", "min_so_far"]);
        let mut text = String::new();
        for r in &rows {
            table.push(vec![
                r.n.to_string(),
                r.numerator.to_string(),
                r.denominator.to_string(),
                fmt_q(&r.value),
                fmt_q(&r.min_so_far),
            ]);
            writeln!(
                text,
                "N = {:>3}: {}  min {}",
                r.n,
                fmt_q_approx(&r.value),
                fmt_q_approx(&r.min_so_far)
            )?;
        }
        return Report::new(text, table, &rows);
    }
    let r = beta_truncated(&y, degree, level)?;
    let mut table = Table::new(&["N", "numerator", "denominator", "beta"]);
    table.push(vec![
        r.n.to_string(),
        r.numerator.to_string(),
        r.denominator.to_string(),
        fmt_q(&r.value),
    ]);
    let terms: Vec<String> = r.terms.iter().map(u64::to_string).collect();
    let text = format!(
        "beta_{} = {} / {} = {}\nterms: {}\n",
        r.n,
        r.numerator,
        r.denominator,
        fmt_q_approx(&r.value),
        terms.join(" ")
    );
    Report::new(text, table, &r)
}

#[derive(Serialize, Deserialize)]
pub struct SurfaceBetaOut {
    #[serde(with = "serde_opt_q")]
    pub closed_form: Option<Q>,
    #[serde(with = "serde_opt_q")]
    pub xi: Option<Q>,
    pub truncated: Option<SurfaceBeta>,
}

pub fn beta_surface(a: &PicardClass, d: &PicardClass, level: Option<u32>) -> Result<Report> {
    let (a, d) = same_surface(a, d);
    let closed_form = match beta_closed_form(&a, &d) {
        Ok(b) => Some(b),
        Err(dioph_core::Error::UnsupportedClosedForm) => None,
        Err(e) => return Err(e.into()),
    };
    let xi = closed_form
        .as_ref()
        .map(|_| closed_form_xi(&a, &d))
        .transpose()?;
    let truncated = level
        .map(|n| beta_surface_truncated(&a, &d, n))
        .transpose()?;
    let mut text = format!("A = {a}, D = {d}\n");
    match (&closed_form, &xi) {
        (Some(b), Some(x)) => writeln!(
            text,
            "beta (closed form) = {}\nxi = {}",
            fmt_q_approx(b),
            fmt_q_approx(x)
        )?,
        _ => writeln!(text, "no closed form: D² ≠ 0")?,
    }
    if let Some(t) = &truncated {
        writeln!(
            text,
            "beta_{} = {} / {} = {}",
            t.n,
            t.numerator,
            t.denominator,
            fmt_q_approx(&t.value)
        )?;
    }
    let opt = |x: &Option<Q>| x.as_ref().map(fmt_q).unwrap_or_default();
    let mut table = Table::new(&["A", "D", "beta_closed", "xi", "N", "beta_trunc"]);
    table.push(vec![
        a.to_string(),
        d.to_string(),
        opt(&closed_form),
        opt(&xi),
        truncated
            .as_ref()
            .map(|t| t.n.to_string())
            .unwrap_or_default(),
        opt(&truncated.as_ref().map(|t| t.value.clone())),
    ]);
    Report::new(
        text,
        table,
        &SurfaceBetaOut {
            closed_form,
            xi,
            truncated,
        },
    )
}

/// Pads both classes to the larger number of blown-up points.
fn same_surface(a: &PicardClass, d: &PicardClass) -> (PicardClass, PicardClass) {
    let k = a.k().max(d.k());
    let pad = |c: &PicardClass| {
        let mut e = c.e.clone();
        e.resize(k, 0);
        PicardClass::new(c.a, e)
    };
    (pad(a), pad(d))
}

#[derive(Serialize, Deserialize)]
pub struct SeshadriOut {
    pub seshadri: Seshadri,
    /// `A − εD` is nef.
    pub nef_at_value: Option<NefCheck>,
    #[serde(with = "serde_opt_q")]
    pub probe: Option<Q>,
    /// `A − γD` at the probe, expected to fail with a witness.
    pub at_probe: Option<NefCheck>,
    pub comparison: Option<BetaSeshadriComparison>,
}

pub fn seshadri(
    a: &PicardClass,
    d: &PicardClass,
    gamma: Option<&Q>,
    compare: Option<(u32, u32, u32)>,
) -> Result<Report> {
    let (a, d) = same_surface(a, d);
    let s = dioph_core::surface::seshadri(&a, &d)?;
    let nef_at_value = s.value.as_ref().map(|e| is_nef_at(&a, &d, e)).transpose()?;
    let probe = gamma
        .cloned()
        .or_else(|| s.value.as_ref().map(|e| e + Q::new(1.into(), 100.into())));
    let at_probe = probe.as_ref().map(|g| is_nef_at(&a, &d, g)).transpose()?;
    let comparison = compare
        .map(|(r, n, level)| compare_beta_seshadri(&a, &d, r, n, level))
        .transpose()?;

    let mut text = format!("A = {a}, D = {d}\n");
    match &s.value {
        Some(e) => writeln!(text, "seshadri = {}", fmt_q_approx(e))?,
        None => writeln!(text, "seshadri = inf")?,
    }
    if let Some(c) = &s.tight_curve {
        writeln!(text, "tight curve: {c}")?;
    }
    if let Some(n) = &nef_at_value {
        writeln!(text, "nef at seshadri value: {}", n.nef)?;
    }
    if let (Some(g), Some(n)) = (&probe, &at_probe) {
        let witness = n
            .witness
            .as_ref()
            .map(|w| format!(" (witness {w})"))
            .unwrap_or_default();
        writeln!(text, "nef at {}: {}{witness}", fmt_q(g), n.nef)?;
    }
    if let Some(c) = &comparison {
        let bound = c
            .bound
            .as_ref()
            .map(fmt_q_approx)
            .unwrap_or_else(|| "inf".into());
        writeln!(
            text,
            "beta = {}, bound = {bound}, holds: {}",
            fmt_q_approx(&c.beta),
            c.holds()
        )?;
    }
    let mut table = Table::new(&[
        "A",
        "D",
        "seshadri",
        "tight_curve",
        "nef_at_value",
        "probe",
        "nef_at_probe",
        "witness",
    ]);
    table.push(vec![
        a.to_string(),
        d.to_string(),
        s.value.as_ref().map(fmt_q).unwrap_or_else(|| "inf".into()),
        s.tight_curve
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default(),
        nef_at_value
            .as_ref()
            .map(|n| n.nef.to_string())
            .unwrap_or_default(),
        probe.as_ref().map(fmt_q).unwrap_or_default(),
        at_probe
            .as_ref()
            .map(|n| n.nef.to_string())
            .unwrap_or_default(),
        at_probe
            .as_ref()
            .and_then(|n| n.witness.as_ref())
            .map(ToString::to_string)
            .unwrap_or_default(),
    ]);
    Report::new(
        text,
        table,
        &SeshadriOut {
            seshadri: s,
            nef_at_value,
            probe,
            at_probe,
            comparison,
        },
    )
}

// ------------------------------------------------------------ filtration

#[derive(Serialize, Deserialize)]
pub struct FiltrationOut {
    pub profile: ProfileJson,
    #[serde(with = "serde_q")]
    pub f_value: Q,
    #[serde(with = "serde_opt_q")]
    pub mu: Option<Q>,
}

pub fn filtration(
    ideals: &Ideals,
    weights: &[Q],
    level: u32,
    form: Option<&str>,
) -> Result<Report> {
    let ys = subschemes(ideals)?;
    let t = weight_vector(weights, ys.len())?;
    let profile = build_profile(&ys, &t, level)?;
    let mu = form
        .map(|s| -> Result<Q> {
            Ok(mu_value(
                &HomogeneousForm::parse(s, ideals.space)?,
                &ys,
                &t,
            )?)
        })
        .transpose()?;
    let json = profile.to_json();
    let mut table = Table::new(&["x", "dim"]);
    let mut text = format!("dim H0 = {}\n", profile.ambient_dim());
    for j in profile.jumps() {
        table.push(vec![fmt_q(&j.x), j.dim.to_string()]);
        writeln!(text, "from x = {}: dim {}", fmt_q(&j.x), j.dim)?;
    }
    writeln!(text, "F = {}", fmt_q_approx(&profile.f_value()))?;
    if let Some(m) = &mu {
        writeln!(text, "mu = {}", fmt_q_approx(m))?;
    }
    Report::new(
        text,
        table,
        &FiltrationOut {
            profile: json,
            f_value: profile.f_value(),
            mu,
        },
    )
}

#[derive(Serialize, Deserialize)]
pub struct AdaptedBasisOut {
    pub forms: Vec<String>,
    #[serde(with = "dioph_core::rational::serde_q_vec")]
    pub mu_first: Vec<Q>,
    #[serde(with = "dioph_core::rational::serde_q_vec")]
    pub mu_second: Vec<Q>,
}

pub fn adapted_basis(ideals: &Ideals, t: &[Q], u: &[Q], level: u32) -> Result<Report> {
    let ys = subschemes(ideals)?;
    let p = build_profile(&ys, &weight_vector(t, ys.len())?, level)?;
    let q = build_profile(&ys, &weight_vector(u, ys.len())?, level)?;
    let (bp, bq) = common_adapted_basis(&p, &q)?;
    let table_m = p
        .monomial_table()
        .ok_or_else(|| anyhow!("profile is not a space of forms"))?;
    let forms: Vec<String> = bp.forms(&table_m).iter().map(ToString::to_string).collect();
    let mut table = Table::new(&["k", "form", "mu_first", "mu_second"]);
    let mut text = String::new();
    for (k, f) in forms.iter().enumerate() {
        table.push(vec![
            k.to_string(),
            f.clone(),
            fmt_q(&bp.mu_values[k]),
            fmt_q(&bq.mu_values[k]),
        ]);
        writeln!(
            text,
            "{k:>3}  {f}  mu = {}, {}",
            fmt_q(&bp.mu_values[k]),
            fmt_q(&bq.mu_values[k])
        )?;
    }
    writeln!(
        text,
        "F = {}, {}",
        fmt_q_approx(&p.f_value()),
        fmt_q_approx(&q.f_value())
    )?;
    Report::new(
        text,
        table,
        &AdaptedBasisOut {
            forms,
            mu_first: bp.mu_values,
            mu_second: bq.mu_values,
        },
    )
}

// --------------------------------------------------------------- heights

#[derive(Serialize, Deserialize)]
pub struct WeilRow {
    pub point: ProjectivePoint,
    /// A place, or the place set for proximities.
    pub places: String,
    pub value: ExactLog,
}

pub fn weil(
    ideal: &str,
    points: &Points,
    place: Place,
    places: Option<&PlaceSet>,
) -> Result<Report> {
    let pts = read_points(points)?;
    let nvars = pts[0].nvars();
    if pts.iter().any(|p| p.nvars() != nvars) {
        bail!("points live in different projective spaces");
    }
    let y = Subscheme::parse_list("Y", nvars, ideal)?;
    let mut rows = Vec::new();
    for p in &pts {
        let (label, value) = match places {
            Some(s) => (s.to_string(), proximity(&y, s, p)?),
            None => (place.to_string(), dioph_core::heights::weil(&y, place, p)?),
        };
        rows.push(WeilRow {
            point: p.clone(),
            places: label,
            value,
        });
    }
    let mut table = Table::new(&["point", "places", "value"]);
    let mut text = String::new();
    for r in &rows {
        table.push(vec![
            r.point.to_string(),
            r.places.clone(),
            r.value.to_string(),
        ]);
        writeln!(text, "{} at {}: {}", r.places, r.point, log_cell(&r.value))?;
    }
    Report::new(text, table, &rows)
}

#[derive(Serialize, Deserialize)]
pub struct HeightRow {
    pub point: ProjectivePoint,
    pub height: ExactLog,
    pub over_places: Option<ExactLog>,
}

pub fn height(points: &Points, places: Option<&PlaceSet>) -> Result<Report> {
    let rows: Vec<HeightRow> = read_points(points)?
        .into_iter()
        .map(|p| HeightRow {
            height: dioph_core::heights::height(&p),
            over_places: places.map(|s| height_over(&p, s.places())),
            point: p,
        })
        .collect();
    let mut table = Table::new(&["point", "height", "over_places"]);
    let mut text = String::new();
    for r in &rows {
        let over = r
            .over_places
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        table.push(vec![r.point.to_string(), r.height.to_string(), over]);
        write!(text, "h({}) = {}", r.point, log_cell(&r.height))?;
        if let (Some(o), Some(s)) = (&r.over_places, places) {
            write!(text, "; over {s}: {}", log_cell(o))?;
        }
        writeln!(text)?;
    }
    Report::new(text, table, &rows)
}

// ------------------------------------------------------------------ scan

fn default_scan_config() -> Result<InequalityConfig> {
    let lines = four_general_lines();
    let diagonals = diagonal_lines(&lines)?;
    let third = Q::new(1.into(), 3.into());
    Ok(InequalityConfig::new(
        lines,
        vec![third; 4],
        "inf,2,3,5".parse()?,
        Q::new(1.into(), 2.into()),
    )?
    .with_exceptional(diagonals))
}

pub fn scan(
    config: Option<&Path>,
    bound: u32,
    points: Option<&Path>,
    sample: Option<(usize, u64)>,
    keep_rows: bool,
) -> Result<Report> {
    let cfg = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            InequalityConfig::from_json(&text)?
        }
        None => default_scan_config()?,
    };
    let mut pts = match points {
        Some(path) => read_points_file(path)?,
        None => sample_points(cfg.nvars() - 1, bound),
    };
    if let Some((k, seed)) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut idx = rand::seq::index::sample(&mut rng, pts.len(), k.min(pts.len())).into_vec();
        idx.sort_unstable();
        pts = idx.into_iter().map(|i| pts[i].clone()).collect();
    }
    let report = scan_inequality(&cfg, &pts, keep_rows)?;

    let mut text = format!(
        "points: {}\non a subscheme: {}\nexceptional: {}\nevaluated: {}\nheight zero: {}\nexceedances below height floor {:.6}: {}\nviolations: {}\n",
        report.sample_size,
        report.skipped,
        report.excluded,
        report.evaluated,
        report.zero_height,
        cfg.height_floor,
        report.below_floor,
        report.violations.len(),
    );
    if let Some(m) = &report.max_ratio {
        writeln!(
            text,
            "max ratio: {:.12} at {}",
            m.ratio.unwrap_or(f64::NAN),
            m.point
        )?;
    }
    for v in &report.violations {
        writeln!(
            text,
            "violation at {}: lhs {:.12} > rhs {:.12}",
            v.point, v.lhs, v.rhs
        )?;
    }
    let listed: &[ScanRow] = if keep_rows {
        &report.rows
    } else {
        &report.violations
    };
    let mut table = Table::new(&["point", "height", "lhs", "rhs", "ratio", "exceeds"]);
    for r in listed {
        table.push(vec![
            r.point.to_string(),
            format!("{:.12}", r.height),
            format!("{:.12}", r.lhs),
            format!("{:.12}", r.rhs),
            r.ratio.map(|x| format!("{x:.12}")).unwrap_or_default(),
            r.exceeds.to_string(),
        ]);
    }
    let code = if report.is_clean() { 0 } else { 3 };
    Ok(Report::new(text, table, &report)?.with_exit_code(code))
}

// -------------------------------------------------------------- example5

pub const EXAMPLE5_HEADERS: [&str; 8] = [
    "l",
    "a2",
    "ad",
    "xi",
    "beta_closed",
    "beta_trunc_N",
    "epsilon",
    "bound_1_4",
];

pub fn example5(l_max: i64, level: Option<u32>) -> Result<Report> {
    let rows = example5_table(l_max, level)?;
    let mut table = Table::new(&EXAMPLE5_HEADERS);
    let mut text = String::new();
    for r in &rows {
        table.push(vec![
            r.l.to_string(),
            r.a2.to_string(),
            r.ad.to_string(),
            fmt_q(&r.xi),
            fmt_q(&r.beta_closed),
            r.beta_trunc.as_ref().map(fmt_q).unwrap_or_default(),
            fmt_q(&r.epsilon),
            fmt_q(&r.bound),
        ]);
        writeln!(
            text,
            "l = {}: A² = {}, A·D = {}, xi = {}, beta = {}, epsilon = {}, bound = {}",
            r.l,
            r.a2,
            r.ad,
            fmt_q(&r.xi),
            fmt_q_approx(&r.beta_closed),
            fmt_q(&r.epsilon),
            fmt_q_approx(&r.bound)
        )?;
    }
    Report::new(text, table, &rows)
}

// ---------------------------------------------------- position, concavity

pub fn check_position(ideals: &Ideals) -> Result<Report> {
    let ys = subschemes(ideals)?;
    let r = check_general_position(&ys)?;
    let witness: Vec<String> = r
        .witness
        .iter()
        .flatten()
        .map(|&i| ys[i].label().to_string())
        .collect();
    let mut text = format!("general position: {}\n", r.general);
    if !witness.is_empty() {
        writeln!(text, "supports meet too much: {}", witness.join(", "))?;
    }
    let mut table = Table::new(&["general", "witness"]);
    table.push(vec![r.general.to_string(), witness.join(" ")]);
    Report::new(text, table, &r)
}

#[derive(Serialize, Deserialize)]
pub struct ConcavityRow {
    pub instance: usize,
    pub subschemes: Vec<String>,
    #[serde(with = "dioph_core::rational::serde_q_vec")]
    pub betas: Vec<Q>,
    /// Weights after rescaling to `Σ β_i t_i = 1`.
    #[serde(with = "dioph_core::rational::serde_q_vec")]
    pub weights: Vec<Q>,
    pub report: dioph_core::filtration::ConcavityReport,
    /// `F(λt + (1−λ)u) ≥ λF(t) + (1−λ)F(u)` at λ = 1/4, 1/2, 3/4 against
    /// a second random weight vector; only for random instances.
    pub concave: Option<bool>,
}

fn normalized(betas: &[Q], t: &WeightVector) -> Result<WeightVector> {
    let s: Q = betas.iter().zip(t.entries()).map(|(b, w)| b * w).sum();
    if s == Q::from_integer(0.into()) {
        bail!("Σ β_i t_i is zero");
    }
    Ok(t.scaled(&s.recip())?)
}

fn describe(ys: &[Subscheme]) -> Vec<String> {
    ys.iter()
        .map(|y| {
            let g: Vec<String> = y.generators().iter().map(ToString::to_string).collect();
            format!("({})", g.join(", "))
        })
        .collect()
}

fn concavity_report(rows: Vec<ConcavityRow>) -> Result<Report> {
    let mut table = Table::new(&[
        "instance",
        "subschemes",
        "lhs",
        "rhs",
        "holds",
        "hypotheses",
        "concave",
    ]);
    let mut text = String::new();
    let mut failures = 0;
    for r in &rows {
        let hyp = serde_json::to_value(&r.report.hypotheses)?;
        let hyp = match hyp {
            serde_json::Value::String(s) => s,
            other => other.to_string(),
        };
        let ok = r.report.holds() && r.concave != Some(false);
        failures += usize::from(!ok);
        table.push(vec![
            r.instance.to_string(),
            r.subschemes.join(" "),
            fmt_q(&r.report.lhs),
            fmt_q(&r.report.rhs),
            r.report.holds().to_string(),
            hyp.clone(),
            r.concave.map(|c| c.to_string()).unwrap_or_default(),
        ]);
        writeln!(
            text,
            "{:>4} {}: F = {} vs {}  holds {}  hypotheses {hyp}{}",
            r.instance,
            r.subschemes.join(" "),
            fmt_q_approx(&r.report.lhs),
            fmt_q_approx(&r.report.rhs),
            r.report.holds(),
            r.concave
                .map(|c| format!("  concave {c}"))
                .unwrap_or_default(),
        )?;
    }
    writeln!(text, "{} instances, {failures} failures", rows.len())?;
    let code = if failures == 0 { 0 } else { 3 };
    Ok(Report::new(text, table, &rows)?.with_exit_code(code))
}

pub fn concavity_explicit(
    ideals: &Ideals,
    betas: &[Q],
    weights: &[Q],
    level: u32,
) -> Result<Report> {
    let ys = subschemes(ideals)?;
    if betas.len() != ys.len() {
        bail!("{} betas given for {} subschemes", betas.len(), ys.len());
    }
    let t = normalized(betas, &weight_vector(weights, ys.len())?)?;
    let report = concavity_bound(&ys, betas, &t, level)?;
    concavity_report(vec![ConcavityRow {
        instance: 0,
        subschemes: describe(&ys),
        betas: betas.to_vec(),
        weights: t.entries().to_vec(),
        report,
        concave: None,
    }])
}

pub fn concavity_random(count: usize, seed: u64, level: u32) -> Result<Report> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambdas = [(1, 4), (1, 2), (3, 4)];
    let mut rows = Vec::with_capacity(count);
    for instance in 0..count {
        let nvars = if instance % 2 == 0 { 3 } else { 4 };
        let ys = random_coordinate_family(&mut rng, nvars, 2);
        let r = ys.len();
        let betas: Vec<Q> = (0..r)
            .map(|_| Q::new(rng.gen_range(1..=6).into(), rng.gen_range(1..=6).into()))
            .collect();
        let t = normalized(&betas, &random_weights(&mut rng, r, 4, 2))?;
        let u = random_weights(&mut rng, r, 4, 3);
        let report = concavity_bound(&ys, &betas, &t, level)?;
        let ft = build_profile(&ys, &t, level)?.f_value();
        let fu = build_profile(&ys, &u, level)?.f_value();
        let mut concave = true;
        for (n, d) in lambdas {
            let lam = Q::new(n.into(), d.into());
            let w = t.convex(&u, &lam)?;
            let fw = build_profile(&ys, &w, level)?.f_value();
            concave &= fw >= &lam * &ft + (Q::from_integer(1.into()) - &lam) * &fu;
        }
        rows.push(ConcavityRow {
            instance,
            subschemes: describe(&ys),
            betas,
            weights: t.entries().to_vec(),
            report,
            concave: Some(concave),
        });
    }
    concavity_report(rows)
}
