//! Acceptance run: seven criteria, one PASS/FAIL line each. Oracles are
//! computed here independently of the library code they check.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dioph_core::beta::{beta_blowup_crosscheck, beta_truncated};
use dioph_core::experiments::{
    diagonal_lines, example5_table, four_general_lines, random_coordinate_family, random_weights,
    sample_points, scan_inequality, InequalityConfig,
};
use dioph_core::filtration::{build_profile, common_adapted_basis, concavity_bound, scale_check};
use dioph_core::graded_ring::{HomogeneousForm, IdealPieces, Subscheme};
use dioph_core::heights::{
    containment_constant, height, weil, weil_lower_bound, ExactLog, Place, PlaceSet,
    ProjectivePoint,
};
use dioph_core::linalg::SparseVec;
use dioph_core::monomial_order::{
    expand_weights, intersect_saturated, threshold_set, SaturatedSet,
};
use dioph_core::surface::{
    four_lines_divisor, four_lines_polarization, is_nef_at, seshadri, PicardClass,
};

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-`d` exponent vectors in `nvars` variables, by direct enumeration.
fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in monomials(nvars - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Rank by plain rational Gaussian elimination.
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for j in c..ncols {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

// ---------------------------------------------------------------- 1

fn four_lines_table() -> Outcome {
    let rows = example5_table(10, None).map_err(|e| e.to_string())?;
    for r in &rows {
        let l = r.l;
        let a2 = 6 * l * l + 6 * l + 1;
        ensure!(r.a2 == a2, "A² at ℓ={l}: {} vs {a2}", r.a2);
        ensure!(r.ad == 2 * l + 1, "A·D at ℓ={l}");
        ensure!(r.xi == q(a2, 2 * (2 * l + 1)), "ξ at ℓ={l}");
        ensure!(
            r.beta_closed == q(a2, 8 * l + 4),
            "β at ℓ={l}: {}",
            r.beta_closed
        );
        ensure!(r.epsilon == q(l, 1), "ε at ℓ={l}");
        ensure!(r.beta_closed >= q(3 * l, 4), "β < 3ℓ/4 at ℓ={l}");
        ensure!(
            r.bound == q(l, 3) && r.bound < r.beta_closed,
            "bound at ℓ={l}"
        );
    }
    for l in 1..=10 {
        let a = four_lines_polarization(l);
        for i in 1..=3 {
            ensure!(
                a.dot(&four_lines_divisor(i)).unwrap() == 2 * l + 1,
                "A·D_{i} at ℓ={l}"
            );
        }
    }
    Ok("ℓ = 1..10 exact".into())
}

// ---------------------------------------------------------------- 2

fn beta_on_projective_space() -> Outcome {
    for n in 1..=3usize {
        let y = Subscheme::parse("H", n + 1, &["x0"]).unwrap();
        for level in 1..=15u32 {
            // Oracle: count degree-N monomials divisible by x0^m.
            let mons = monomials(n + 1, level);
            let num: usize = (1..=level)
                .map(|m| mons.iter().filter(|a| a[0] >= m).count())
                .sum();
            let oracle = q(num as i64, (level as usize * mons.len()) as i64);
            let got = beta_truncated(&y, 1, level)
                .map_err(|e| e.to_string())?
                .value;
            ensure!(
                oracle == q(1, n as i64 + 1),
                "oracle for n={n} N={level} is {oracle}"
            );
            ensure!(got == oracle, "hyperplane n={n} N={level}: {got}");
        }
    }
    let coords = [1i64, 2, 3];
    let y = Subscheme::point("p", &coords).unwrap();
    for level in 1..=8u32 {
        let mons = monomials(3, level);
        let mut num = 0usize;
        for m in 1..=level {
            // Taylor coefficients of f(1, 2 + u, 3 + v) in u^i v^j, i + j < m.
            let mut rows = Vec::new();
            for i in 0..m {
                for j in 0..m - i {
                    rows.push(
                        mons.iter()
                            .map(|a| {
                                let c = binom(a[1] as i64, i as i64) * binom(a[2] as i64, j as i64);
                                let pw = BigInt::from(coords[1]).pow(a[1].saturating_sub(i))
                                    * BigInt::from(coords[2]).pow(a[2].saturating_sub(j));
                                Q::from_integer(pw * c)
                            })
                            .collect(),
                    );
                }
            }
            num += mons.len() - rank(rows);
        }
        let oracle = q(num as i64, (level as usize * mons.len()) as i64);
        let got = beta_truncated(&y, 1, level)
            .map_err(|e| e.to_string())?
            .value;
        ensure!(oracle == q(2, 3), "point oracle at N={level} is {oracle}");
        ensure!(got == oracle, "point N={level}: {got}");
    }
    Ok("hyperplanes n=1..3, N≤15; point [1:2:3], N≤8".into())
}

// ---------------------------------------------------------------- 3

fn blowup_crosscheck() -> Outcome {
    let mut checked = 0;
    for coords in [[0i64, 0, 1], [1, 2, 3]] {
        let y = Subscheme::point("y", &coords).unwrap();
        for level in 1..=8u32 {
            let c = beta_blowup_crosscheck(&y, 1, level).map_err(|e| e.to_string())?;
            for m in 1..=level {
                let t = c
                    .terms
                    .iter()
                    .find(|t| t.0 == m)
                    .ok_or(format!("missing m={m}"))?;
                ensure!(
                    t.1 == t.2,
                    "point {coords:?} N={level} m={m}: {} vs {}",
                    t.1,
                    t.2
                );
                checked += 1;
            }
            ensure!(c.direct == c.blowup, "β differs at N={level}");
        }
    }
    Ok(format!("{checked} (N, m) pairs equal"))
}

// ---------------------------------------------------------------- 4

/// Random coordinate families in P² and P³, degrees up to 6.
fn filtration_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let lambdas = [q(1, 4), q(1, 2), q(3, 4)];
    let mut instances = 0;
    let mut checks = 0usize;
    while instances < 120 {
        let nvars = if instances % 3 == 0 { 4 } else { 3 };
        let ys = random_coordinate_family(&mut rng, nvars, 2);
        let r = ys.len();
        let degree = rng.gen_range(1..=6);
        let t = random_weights(&mut rng, r, 4, 2);
        let u = random_weights(&mut rng, r, 4, 3);
        let x = q(rng.gen_range(0..=8), 2);
        let y = q(rng.gen_range(0..=8), 3);
        let mut pieces = IdealPieces::new(&ys).unwrap();

        // 𝓘(M) ∩ 𝓘(N) = 𝓘(M ∩ N) in degree D.
        let m = threshold_set(&t, &x).unwrap();
        let n = threshold_set(&u, &y).unwrap();
        let mn: SaturatedSet = intersect_saturated(&m, &n).unwrap();
        let pm = pieces.saturated_piece(&m, degree).unwrap();
        let pn = pieces.saturated_piece(&n, degree).unwrap();
        let pmn = pieces.saturated_piece(&mn, degree).unwrap();
        ensure!(
            pm.intersection(&pn).same_space(&pmn),
            "intersection identity, instance {instances}"
        );
        ensure!(
            pm.intersection_dim(&pn) == pmn.dim(),
            "rank identity, instance {instances}"
        );

        // Splitting each Y_i into its generators with repeated weights.
        let eps: Vec<u32> = ys.iter().map(|y| y.generators().len() as u32).collect();
        let singles: Vec<Subscheme> = ys
            .iter()
            .flat_map(|y| {
                y.generators()
                    .iter()
                    .map(|g| Subscheme::new("g", vec![g.clone()]).unwrap())
            })
            .collect();
        let te = expand_weights(&t, &eps).unwrap();
        let lhs = pieces.filtration_piece(&t, &x, degree).unwrap();
        let rhs = IdealPieces::new(&singles)
            .unwrap()
            .filtration_piece(&te, &x, degree)
            .unwrap();
        ensure!(
            lhs.same_space(&rhs),
            "weight expansion, instance {instances}"
        );

        // 𝓘(t,x) ∩ 𝓘(u,y) ⊆ 𝓘(λt + (1−λ)u, λx + (1−λ)y).
        let pu = pieces.filtration_piece(&u, &y, degree).unwrap();
        let meet = lhs.intersection(&pu);
        for lam in &lambdas {
            let w = t.convex(&u, lam).unwrap();
            let z = lam * &x + (Q::one() - lam) * &y;
            let big = pieces.filtration_piece(&w, &z, degree).unwrap();
            ensure!(
                meet.is_subspace_of(&big),
                "convex containment, instance {instances}"
            );
        }

        // F(s·t) = s·F(t).
        let s = q(rng.gen_range(1..=7), rng.gen_range(1..=4));
        let (a, b) = scale_check(&ys, &t, &s, degree).unwrap();
        ensure!(a == b, "scaling, instance {instances}: {a} vs {b}");

        // Adapted bases realize F(t); arbitrary bases do not exceed it.
        let pt = build_profile(&ys, &t, degree).unwrap();
        let pu_prof = build_profile(&ys, &u, degree).unwrap();
        let (bt, bu) = common_adapted_basis(&pt, &pu_prof).map_err(|e| e.to_string())?;
        ensure!(
            pt.mu_average(&bt.elements).unwrap() == pt.f_value(),
            "adapted average (t), instance {instances}"
        );
        ensure!(
            pu_prof.mu_average(&bu.elements).unwrap() == pu_prof.f_value(),
            "adapted average (u), instance {instances}"
        );
        let dim = pt.ambient_dim();
        let random_basis = loop {
            let rows: Vec<SparseVec> = (0..dim)
                .map(|_| {
                    SparseVec::from_entries(
                        (0..dim).map(|c| (c, BigInt::from(rng.gen_range(-2..=2)))),
                    )
                })
                .collect();
            if dioph_core::linalg::rank(&rows, dim) == dim {
                break rows;
            }
        };
        ensure!(
            pt.mu_average(&random_basis).unwrap() <= pt.f_value(),
            "basis average, instance {instances}"
        );

        // Concavity.
        let ft = pt.f_value();
        let fu = pu_prof.f_value();
        for lam in &lambdas {
            let w = t.convex(&u, lam).unwrap();
            let fw = build_profile(&ys, &w, degree).unwrap().f_value();
            ensure!(
                fw >= lam * &ft + (Q::one() - lam) * &fu,
                "concavity, instance {instances}"
            );
        }

        // Lower bound at weights normalized by Σ β_i t_i = 1.
        let betas: Vec<Q> = (0..r)
            .map(|_| q(rng.gen_range(1..=6), rng.gen_range(1..=6)))
            .collect();
        let norm: Q = betas.iter().zip(t.entries()).map(|(b, w)| b * w).sum();
        let tn = t.scaled(&norm.recip()).unwrap();
        let rep = concavity_bound(&ys, &betas, &tn, degree).map_err(|e| e.to_string())?;
        ensure!(
            rep.holds(),
            "bound, instance {instances}: {} < {}",
            rep.lhs,
            rep.rhs
        );

        checks += 7 + 2 * lambdas.len();
        instances += 1;
    }
    Ok(format!("{instances} instances, {checks} exact checks"))
}

// ---------------------------------------------------------------- 5

fn random_form<R: Rng>(rng: &mut R, nvars: usize) -> HomogeneousForm {
    loop {
        let d = rng.gen_range(1..=3);
        let mut terms: Vec<(Vec<u32>, Q)> = Vec::new();
        for m in monomials(nvars, d) {
            if rng.gen_bool(0.6) {
                terms.push((m, q(rng.gen_range(-9..=9), rng.gen_range(1..=4))));
            }
        }
        if let Ok(f) = HomogeneousForm::new(nvars, terms) {
            if !f.is_zero() && f.degree() == d {
                return f;
            }
        }
    }
}

fn primes_of(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p * p) <= n {
        if (&n % p).is_zero() {
            out.push(p);
            while (&n % p).is_zero() {
                n /= p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n.try_into().unwrap());
    }
    out
}

fn heights_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut pairs = 0;
    while pairs < 200 {
        let nvars = if pairs % 2 == 0 { 2 } else { 3 };
        let f = random_form(&mut rng, nvars);
        let coords: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-40..=40)).collect();
        let Ok(p) = ProjectivePoint::from_i64(&coords) else {
            continue;
        };
        let val = f.eval_int(p.coords());
        if val.is_zero() {
            continue;
        }
        let mut places = vec![Place::Infinite];
        let mut ps = primes_of(val.numer());
        ps.extend(primes_of(val.denom()));
        ps.sort();
        ps.dedup();
        places.extend(ps.into_iter().map(Place::Prime));
        let d = Subscheme::new("D", vec![f.clone()]).unwrap();
        let total: ExactLog = places.iter().map(|&v| weil(&d, v, &p).unwrap()).sum();
        let max = p.coords().iter().map(|c| c.abs()).max().unwrap();
        let expected = ExactLog::of(Q::from_integer(max.pow(f.degree()))).unwrap();
        ensure!(total == expected, "product formula fails for {f} at {p}");
        ensure!(
            height(&p).times(f.degree() as i32) == expected,
            "height mismatch at {p}"
        );
        pairs += 1;
    }
    let first = lemma_constants()?;
    let second = lemma_constants()?;
    ensure!(first == second, "constants changed between runs");
    Ok(format!("200 product-formula pairs; {first}"))
}

/// Worst deviations for the intersection, sum and containment properties
/// on a fixed corpus, rendered as text so two runs can be compared.
fn lemma_constants() -> Result<String, String> {
    let places: PlaceSet = "inf,2,3,5".parse().unwrap();
    let s = |gens: &[&str]| Subscheme::parse("S", 3, gens).unwrap();
    let pairs = [
        (s(&["x0"]), s(&["x1"])),
        (s(&["x0 - x1"]), s(&["x0 + 2*x1 - x2"])),
        (s(&["x0", "x1"]), s(&["x1 - 3*x2"])),
        (s(&["x0^2 + x1*x2"]), s(&["x2"])),
        (s(&["x0*x2 - x1^2"]), s(&["x0 - x1"])),
    ];
    let f = |t: &str| HomogeneousForm::parse(t, 3).unwrap();
    // 𝓘_Y ⊆ 𝓘_X with ψ_j = Σ_i a_ji φ_i.
    let containments = [
        (
            s(&["x0", "x1"]),
            s(&["x0^2 + 2*x0*x1", "x1*x2 - 5*x0*x2"]),
            vec![vec![f("x0 + 2*x1"), f("0*x0")], vec![f("-5*x2"), f("x2")]],
        ),
        (
            s(&["x0 - x1"]),
            s(&["x0^2 - x1^2", "3*x0*x2 - 3*x1*x2"]),
            vec![vec![f("x0 + x1")], vec![f("3*x2")]],
        ),
        (
            s(&["x2"]),
            s(&["x2^3", "x0*x2"]),
            vec![vec![f("x2^2")], vec![f("x0")]],
        ),
    ];
    let points = sample_points(2, 6);
    let mut inter_dev = 0.0f64;
    let mut sum_dev = 0.0f64;
    let mut power_dev = 0.0f64;
    let mut lower_ok = true;
    for (x, y) in &pairs {
        let xy = x.intersection(y).unwrap();
        let sum = x.sum(y).unwrap();
        let x3 = x.power(3).unwrap();
        for p in &points {
            for &v in places.places() {
                let (Ok(wx), Ok(wy)) = (weil(x, v, p), weil(y, v, p)) else {
                    continue;
                };
                let wxy = weil(&xy, v, p).unwrap();
                inter_dev = inter_dev.max((&wxy - (&wx).min(&wy)).value().abs());
                let ws = weil(&sum, v, p).unwrap();
                ensure!(ws == &wx + &wy, "sum not additive at {p}, {v}");
                sum_dev = sum_dev.max((&ws - &(&wx + &wy)).value().abs());
                let w3 = weil(&x3, v, p).unwrap();
                ensure!(w3 == wx.times(3), "power not multiplicative at {p}, {v}");
                power_dev = power_dev.max((&w3 - &wx.times(3)).value().abs());
                lower_ok &= wx >= -weil_lower_bound(x, v);
            }
        }
    }
    ensure!(lower_ok, "a Weil function fell below its lower bound");
    let mut cont = Vec::new();
    for (x, y, a) in &containments {
        let mut per_place = Vec::new();
        for &v in places.places() {
            let c = containment_constant(x, y, a, v).map_err(|e| e.to_string())?;
            let mut slack = f64::INFINITY;
            for p in &points {
                let (Ok(wx), Ok(wy)) = (weil(x, v, p), weil(y, v, p)) else {
                    continue;
                };
                ensure!(wx <= &wy + &c, "containment fails at {p}, {v}");
                slack = slack.min((&wy + &c).value() - wx.value());
            }
            per_place.push(format!("{v}:{c}"));
            ensure!(
                slack.is_finite() && slack >= 0.0,
                "no corpus point for containment"
            );
        }
        cont.push(per_place.join(" "));
    }
    Ok(format!(
        "C∩={inter_dev:.3e} C+={sum_dev:.3e} C^m={power_dev:.3e} C⊆=[{}]",
        cont.join("; ")
    ))
}

// ---------------------------------------------------------------- 6

fn main_inequality_scan() -> Outcome {
    let lines = four_general_lines();
    let diagonals = diagonal_lines(&lines).map_err(|e| e.to_string())?;
    ensure!(
        diagonals.len() == 3,
        "expected three diagonals, got {}",
        diagonals.len()
    );
    let cfg = InequalityConfig::new(
        lines,
        vec![q(1, 3); 4],
        "inf,2,3,5".parse().unwrap(),
        q(1, 2),
    )
    .map_err(|e| e.to_string())?
    .with_exceptional(diagonals);
    let points = sample_points(2, 50);
    let r = scan_inequality(&cfg, &points, false).map_err(|e| e.to_string())?;
    ensure!(
        r.skipped + r.excluded + r.evaluated == points.len(),
        "counters do not add up"
    );
    ensure!(
        r.violations.is_empty(),
        "{} violations above log 10, first at {}",
        r.violations.len(),
        r.violations[0].point
    );
    let max = r
        .max_ratio
        .as_ref()
        .map(|m| format!("{} at {}", m.ratio.unwrap(), m.point))
        .unwrap_or_default();
    Ok(format!(
        "{} points: {} on lines, {} on diagonals, {} evaluated, {} exceedances below the floor; max ratio {max}",
        points.len(),
        r.skipped,
        r.excluded,
        r.evaluated,
        r.below_floor
    ))
}

// ---------------------------------------------------------------- 7

fn seshadri_certificates() -> Outcome {
    let d = four_lines_divisor(1);
    let e1 = PicardClass::exceptional(3, 1);
    for l in 1..=10i64 {
        let a = four_lines_polarization(l);
        let s = seshadri(&a, &d).map_err(|e| e.to_string())?;
        ensure!(s.value == Some(q(l, 1)), "ε at ℓ={l} is {:?}", s.value);
        ensure!(s.tight_curve.as_ref() == Some(&e1), "tight curve at ℓ={l}");
        // (A − ℓD)·E₁ = 0 on the tight curve.
        ensure!(
            a.combine(1, &d, l).unwrap().dot(&e1).unwrap() == 0,
            "not tight at ℓ={l}"
        );
        let ok = is_nef_at(&a, &d, &q(l, 1)).unwrap();
        ensure!(ok.nef, "A − ℓD not nef at ℓ={l}");
        let past = q(100 * l + 1, 100);
        let bad = is_nef_at(&a, &d, &past).unwrap();
        ensure!(
            !bad.nef && bad.witness.as_ref() == Some(&e1),
            "no failure witness at ℓ={l}"
        );
        let scaled = a.combine(100, &d, 100 * l + 1).unwrap();
        ensure!(scaled.dot(&e1).unwrap() == -1, "witness degree at ℓ={l}");
    }
    Ok("ℓ = 1..10, tight curve E1".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 7] = [
        (
            "1 four-lines golden table",
            four_lines_table,
            Duration::from_secs(1),
        ),
        (
            "2 beta on projective space",
            beta_on_projective_space,
            Duration::from_secs(30),
        ),
        (
            "3 blow-up cross-check",
            blowup_crosscheck,
            Duration::from_secs(60),
        ),
        (
            "4 filtration property suite",
            filtration_suite,
            Duration::from_secs(300),
        ),
        (
            "5 heights and Weil functions",
            heights_suite,
            Duration::from_secs(60),
        ),
        (
            "6 inequality scan",
            main_inequality_scan,
            Duration::from_secs(300),
        ),
        (
            "7 Seshadri certificates",
            seshadri_certificates,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("too slow ({took:.1?} > {limit:?}); {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {name}: {status} [{took:.2?}] {detail}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 7 criteria passed");
}
