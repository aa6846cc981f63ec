//! Intersection theory on the blow-up of P² in at most three general points:
//! nef tests, Seshadri constants, h⁰ by negative-curve reduction, and the
//! closed-form β of a divisor with `D² = 0`.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_opt_q, serde_q, Q};

/// `a·H + Σ e_i·E_i` on `Bl_k P²`, where `H` pulls back a line and `E_i`
/// are the exceptional curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicardClass {
    pub a: i64,
    pub e: Vec<i64>,
}

pub const MAX_POINTS: usize = 3;

impl PicardClass {
    pub fn new(a: i64, e: Vec<i64>) -> Self {
        PicardClass { a, e }
    }

    pub fn zero(k: usize) -> Self {
        PicardClass::new(0, vec![0; k])
    }

    pub fn h(k: usize) -> Self {
        PicardClass::new(1, vec![0; k])
    }

    /// `E_i`, 1-based.
    pub fn exceptional(k: usize, i: usize) -> Self {
        let mut e = vec![0; k];
        e[i - 1] = 1;
        PicardClass::new(0, e)
    }

    /// `-3H + Σ E_i`.
    pub fn canonical(k: usize) -> Self {
        PicardClass::new(-3, vec![1; k])
    }

    pub fn k(&self) -> usize {
        self.e.len()
    }

    fn same_k(&self, other: &PicardClass) -> Result<()> {
        if self.k() != other.k() {
            return Err(Error::BlowupMismatch(self.k(), other.k()));
        }
        Ok(())
    }

    pub fn add(&self, other: &PicardClass) -> Result<PicardClass> {
        self.same_k(other)?;
        Ok(PicardClass::new(
            self.a + other.a,
            self.e.iter().zip(&other.e).map(|(x, y)| x + y).collect(),
        ))
    }

    pub fn sub(&self, other: &PicardClass) -> Result<PicardClass> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> PicardClass {
        PicardClass::new(c * self.a, self.e.iter().map(|x| c * x).collect())
    }

    /// `p·self - q·other`.
    pub fn combine(&self, p: i64, other: &PicardClass, q: i64) -> Result<PicardClass> {
        self.scale(p).sub(&other.scale(q))
    }

    pub fn dot(&self, other: &PicardClass) -> Result<i64> {
        self.same_k(other)?;
        Ok(self.a * other.a - self.e.iter().zip(&other.e).map(|(x, y)| x * y).sum::<i64>())
    }

    pub fn self_intersection(&self) -> i64 {
        self.dot(self).expect("same surface")
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, String)> = Vec::new();
        if self.a != 0 {
            parts.push((self.a, "H".into()));
        }
        for (i, &c) in self.e.iter().enumerate() {
            if c != 0 {
                parts.push((c, format!("E{}", i + 1)));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, name)) in parts.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{name}")?;
        }
        Ok(())
    }
}

impl PicardClass {
    /// Parses `"3H - E1 - 2E2"` on `Bl_k P²`; `k` is taken as the largest
    /// index mentioned unless given.
    pub fn parse(s: &str, k: Option<usize>) -> Result<PicardClass> {
        let err = || Error::Parse(format!("bad class literal {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms: Vec<(i64, Option<usize>)> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if terms.is_empty() => (1, rest),
                _ => return Err(err()),
            };
            let end = body[1..].find(['+', '-']).map_or(body.len(), |p| p + 1);
            let term = &body[..end];
            rest = &body[end..];
            let split = term
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(term.len());
            let (num, name) = term.split_at(split);
            let coeff: i64 = if num.is_empty() {
                1
            } else {
                num.parse().map_err(|_| err())?
            };
            let which = match name {
                "H" | "h" => None,
                "" => {
                    if coeff == 0 {
                        continue;
                    }
                    return Err(err());
                }
                _ if name.starts_with(['E', 'e']) => {
                    let i: usize = name[1..].parse().map_err(|_| err())?;
                    if i == 0 {
                        return Err(err());
                    }
                    Some(i)
                }
                _ => return Err(err()),
            };
            terms.push((sign * coeff, which));
        }
        let max_i = terms.iter().filter_map(|t| t.1).max().unwrap_or(0);
        let k = k.unwrap_or(max_i);
        if max_i > k {
            return Err(Error::BlowupMismatch(k, max_i));
        }
        if k > MAX_POINTS {
            return Err(Error::TooManyPoints(k));
        }
        let mut class = PicardClass::zero(k);
        for (c, which) in terms {
            match which {
                None => class.a += c,
                Some(i) => class.e[i - 1] += c,
            }
        }
        Ok(class)
    }
}

impl FromStr for PicardClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PicardClass::parse(s, None)
    }
}

/// Intersection number `C·D`.
pub fn intersect(c: &PicardClass, d: &PicardClass) -> Result<i64> {
    c.dot(d)
}

/// `Bl_k P²` for `k ≤ 3` points in general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    k: usize,
}

impl SurfaceModel {
    pub fn new(k: usize) -> Result<Self> {
        if k > MAX_POINTS {
            return Err(Error::TooManyPoints(k));
        }
        Ok(SurfaceModel { k })
    }

    pub fn for_class(c: &PicardClass) -> Result<Self> {
        SurfaceModel::new(c.k())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn canonical(&self) -> PicardClass {
        PicardClass::canonical(self.k)
    }

    /// The (−1)-curves `E_i` and `H − E_i − E_j`.
    pub fn neg_curves(&self) -> Vec<PicardClass> {
        let k = self.k;
        let mut out: Vec<PicardClass> = (1..=k).map(|i| PicardClass::exceptional(k, i)).collect();
        for i in 1..=k {
            for j in i + 1..=k {
                let c = PicardClass::h(k)
                    .sub(&PicardClass::exceptional(k, i))
                    .and_then(|c| c.sub(&PicardClass::exceptional(k, j)))
                    .expect("same surface");
                out.push(c);
            }
        }
        out
    }

    /// Curve classes whose duals cut out the nef cone: `H`, the (−1)-curves,
    /// and `H − E_1` when `k = 1`. With one point `E_1` alone is not enough:
    /// `H − 2E_1` meets `E_1` positively yet is not nef.
    pub fn test_curves(&self) -> Vec<PicardClass> {
        let k = self.k;
        let mut out = vec![PicardClass::h(k)];
        out.extend(self.neg_curves());
        if k == 1 {
            out.push(
                PicardClass::h(1)
                    .sub(&PicardClass::exceptional(1, 1))
                    .unwrap(),
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefCheck {
    pub nef: bool,
    /// First test curve meeting the class negatively.
    pub witness: Option<PicardClass>,
}

pub fn is_nef(d: &PicardClass) -> Result<NefCheck> {
    let model = SurfaceModel::for_class(d)?;
    for c in model.test_curves() {
        if d.dot(&c)? < 0 {
            return Ok(NefCheck {
                nef: false,
                witness: Some(c),
            });
        }
    }
    Ok(NefCheck {
        nef: true,
        witness: None,
    })
}

/// Nefness of `A − γD` for rational `γ = p/q`, tested on `qA − pD`.
pub fn is_nef_at(a: &PicardClass, d: &PicardClass, gamma: &Q) -> Result<NefCheck> {
    let p = i64::try_from(gamma.numer()).map_err(|_| Error::Config("γ too large".into()))?;
    let q = i64::try_from(gamma.denom()).map_err(|_| Error::Config("γ too large".into()))?;
    is_nef(&a.combine(q, d, p)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seshadri {
    /// `None` stands for +∞ (no test curve constrains γ).
    #[serde(with = "opt_q")]
    pub value: Option<Q>,
    /// A test curve on which `A − εD` has degree 0.
    pub tight_curve: Option<PicardClass>,
}

mod opt_q {
    use super::Q;
    use crate::rational::{fmt_q, parse_q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_str(&fmt_q(v)),
            None => s.serialize_str("inf"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Q>, D::Error> {
        match String::deserialize(d)?.as_str() {
            "inf" => Ok(None),
            t => parse_q(t).map(Some).map_err(serde::de::Error::custom),
        }
    }
}

/// `sup{γ ≥ 0 : A − γD nef}` = `min (A·C)/(D·C)` over test curves with `D·C > 0`.
pub fn seshadri(a: &PicardClass, d: &PicardClass) -> Result<Seshadri> {
    a.same_k(d)?;
    let check = is_nef(a)?;
    if !check.nef {
        return Err(Error::NotNef(a.to_string()));
    }
    let mut best: Option<(Q, PicardClass)> = None;
    for c in SurfaceModel::for_class(a)?.test_curves() {
        let dc = d.dot(&c)?;
        if dc <= 0 {
            continue;
        }
        let ratio = Q::new(a.dot(&c)?.into(), dc.into());
        if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
            best = Some((ratio, c));
        }
    }
    Ok(match best {
        Some((v, c)) => Seshadri {
            value: Some(v),
            tight_curve: Some(c),
        },
        None => Seshadri {
            value: None,
            tight_curve: None,
        },
    })
}

/// Iteration cap for the reduction in [`zariski_h0`].
const MAX_REDUCTION_STEPS: usize = 100_000;

/// `h⁰(D)`: strip fixed (−1)-curves until the class is nef, then apply
/// Riemann–Roch, which is exact for nef classes on these surfaces.
pub fn zariski_h0(d: &PicardClass) -> Result<u64> {
    let model = SurfaceModel::for_class(d)?;
    let neg = model.neg_curves();
    let tests = model.test_curves();
    let mut cur = d.clone();
    for _ in 0..MAX_REDUCTION_STEPS {
        if cur.a < 0 {
            return Ok(0);
        }
        let Some(c) = tests.iter().find(|c| cur.dot(c).unwrap() < 0) else {
            return Ok(riemann_roch(&cur, &model.canonical()));
        };
        if neg.contains(c) {
            cur = cur.sub(c)?;
        } else {
            // A class meeting a moving curve negatively has no sections.
            return Ok(0);
        }
    }
    Err(Error::NonConvergentReduction(d.to_string()))
}

/// `χ(D) = D·(D − K)/2 + 1`.
pub fn riemann_roch(d: &PicardClass, k: &PicardClass) -> u64 {
    let v = d.dot(&d.sub(k).unwrap()).unwrap() / 2 + 1;
    u64::try_from(v).expect("nef classes have nonnegative Euler characteristic")
}

/// `β = (⅔ ξ A² − ⅓ (A·D) ξ²) / A²` with `ξ = A² / (2 A·D)`, for `D² = 0`.
pub fn beta_closed_form(a: &PicardClass, d: &PicardClass) -> Result<Q> {
    let ad = a.dot(d)?;
    if d.self_intersection() != 0 || ad <= 0 {
        return Err(Error::UnsupportedClosedForm);
    }
    if !is_nef(a)?.nef {
        return Err(Error::NotNef(a.to_string()));
    }
    let a2 = a.self_intersection();
    if a2 <= 0 {
        return Err(Error::UnsupportedClosedForm);
    }
    let a2q = Q::from_integer(a2.into());
    let adq = Q::from_integer(ad.into());
    let xi = closed_form_xi(a, d)?;
    let two_thirds = Q::new(2.into(), 3.into());
    let third = Q::new(1.into(), 3.into());
    Ok((two_thirds * &xi * &a2q - third * adq * &xi * &xi) / a2q)
}

/// `ξ = A² / (2 A·D)`, the root of `(A − ξD)² = 0` when `D² = 0`.
pub fn closed_form_xi(a: &PicardClass, d: &PicardClass) -> Result<Q> {
    let ad = a.dot(d)?;
    if ad == 0 {
        return Err(Error::UnsupportedClosedForm);
    }
    Ok(Q::new(a.self_intersection().into(), (2 * ad).into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceBeta {
    pub n: u32,
    /// `Σ_{m≥1} h⁰(NA − mD)`.
    pub numerator: u64,
    /// `N · h⁰(NA)`.
    pub denominator: u64,
    #[serde(with = "serde_q")]
    pub value: Q,
    /// `h⁰(NA − mD)` for `m = 1, 2, ...` up to the first zero.
    pub terms: Vec<u64>,
}

/// `Σ_{m≥1} h⁰(NA − mD) / (N h⁰(NA))`, stopping at the first zero term.
pub fn beta_surface_truncated(a: &PicardClass, d: &PicardClass, n: u32) -> Result<SurfaceBeta> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    a.same_k(d)?;
    if !is_nef(a)?.nef {
        return Err(Error::NotNef(a.to_string()));
    }
    if a.self_intersection() <= 0 {
        return Err(Error::NotNef(format!("{a} is not big")));
    }
    let na = a.scale(n as i64);
    let base = zariski_h0(&na)?;
    let mut terms = Vec::new();
    for m in 1.. {
        let h = zariski_h0(&na.sub(&d.scale(m))?)?;
        if h == 0 {
            break;
        }
        terms.push(h);
    }
    let numerator: u64 = terms.iter().sum();
    let denominator = n as u64 * base;
    Ok(SurfaceBeta {
        n,
        numerator,
        denominator,
        value: Q::new(numerator.into(), denominator.into()),
        terms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaMethod {
    ClosedForm,
    Truncated(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaSeshadriComparison {
    #[serde(with = "serde_q")]
    pub beta: Q,
    pub method: BetaMethod,
    pub seshadri: Seshadri,
    /// `(r/(n+1))·ε`; `None` when ε is infinite.
    #[serde(with = "serde_opt_q")]
    pub bound: Option<Q>,
}

impl BetaSeshadriComparison {
    pub fn holds(&self) -> bool {
        self.bound.as_ref().is_some_and(|b| self.beta >= *b)
    }
}

/// β (closed form when `D² = 0`, otherwise truncated at level `fallback_n`)
/// against `(r/(n+1))·ε_D(A)`.
pub fn compare_beta_seshadri(
    a: &PicardClass,
    d: &PicardClass,
    codim: u32,
    dim: u32,
    fallback_n: u32,
) -> Result<BetaSeshadriComparison> {
    let (beta, method) = match beta_closed_form(a, d) {
        Ok(b) => (b, BetaMethod::ClosedForm),
        Err(Error::UnsupportedClosedForm) => (
            beta_surface_truncated(a, d, fallback_n)?.value,
            BetaMethod::Truncated(fallback_n),
        ),
        Err(e) => return Err(e),
    };
    let s = seshadri(a, d)?;
    let bound = s
        .value
        .as_ref()
        .map(|e| Q::new(codim.into(), (dim + 1).into()) * e);
    Ok(BetaSeshadriComparison {
        beta,
        method,
        seshadri: s,
        bound,
    })
}

/// `A(ℓ) = ℓ(D_1 + D_2 + D_3) + D_4 = (3ℓ+1)H − ℓ(E_1 + E_2 + E_3)`, where
/// `D_i = H − E_i` is the strict transform of a line through the i-th
/// blown-up point and `D_4 = H` is a line missing all three.
pub fn four_lines_polarization(l: i64) -> PicardClass {
    PicardClass::new(3 * l + 1, vec![-l; 3])
}

/// `D_i = H − E_i` for `i ≤ 3`, `D_4 = H`.
pub fn four_lines_divisor(i: usize) -> PicardClass {
    match i {
        1..=3 => PicardClass::h(3)
            .sub(&PicardClass::exceptional(3, i))
            .unwrap(),
        4 => PicardClass::h(3),
        _ => panic!("line index {i} out of range"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn c(s: &str) -> PicardClass {
        s.parse().unwrap()
    }

    fn c3(s: &str) -> PicardClass {
        PicardClass::parse(s, Some(3)).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let d = c("3H - E1 - 2E2");
        assert_eq!(d, PicardClass::new(3, vec![-1, -2]));
        assert_eq!(d.to_string(), "3H - E1 - 2E2");
        assert_eq!(c3("H").k(), 3);
        assert_eq!(c("-E3 + 2H"), PicardClass::new(2, vec![0, 0, -1]));
        assert_eq!(c("0").k(), 0);
        assert!(PicardClass::parse("H + E4", None).is_err());
        assert!(PicardClass::parse("H + 2", None).is_err());
        assert!(PicardClass::parse("", None).is_err());
        assert!(PicardClass::parse("H - E2", Some(1)).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(c("H").dot(&c("H")).unwrap(), 1);
        for l in 1..=10 {
            let a = four_lines_polarization(l);
            assert_eq!(a.self_intersection(), 6 * l * l + 6 * l + 1);
            for i in 1..=3 {
                assert_eq!(a.dot(&four_lines_divisor(i)).unwrap(), 2 * l + 1);
            }
        }
        assert_eq!(four_lines_polarization(2).self_intersection(), 37);
        assert!(c("H - E1").dot(&c("H")).is_err());
    }

    #[test]
    fn model_curves() {
        let m = SurfaceModel::new(3).unwrap();
        let k = m.canonical();
        for c in m.neg_curves() {
            assert_eq!(c.self_intersection(), -1);
            assert_eq!(c.dot(&k).unwrap(), -1);
        }
        assert_eq!(m.neg_curves().len(), 6);
        assert_eq!(SurfaceModel::new(4), Err(Error::TooManyPoints(4)));
    }

    #[test]
    fn nef_examples() {
        assert!(is_nef(&c("H")).unwrap().nef);
        assert!(is_nef(&c("2H - E1 - E2 - E3")).unwrap().nef);
        let r = is_nef(&c("-H")).unwrap();
        assert_eq!(r.witness, Some(c("H")));
        // On one blow-up, H − 2E_1 is positive on E_1 but not nef.
        let r = is_nef(&c("H - 2E1")).unwrap();
        assert!(!r.nef);
        assert_eq!(r.witness, Some(c("H - E1")));
    }

    #[test]
    fn seshadri_examples() {
        for l in 1..=10 {
            let s = seshadri(&four_lines_polarization(l), &four_lines_divisor(1)).unwrap();
            assert_eq!(s.value, Some(qi(l)));
        }
        let s = seshadri(&c("H"), &c("H")).unwrap();
        assert_eq!(s.value, Some(qi(1)));
        let s = seshadri(&c3("H"), &c3("-H")).unwrap();
        assert_eq!(s.value, None);
        assert!(matches!(seshadri(&c("-H"), &c("H")), Err(Error::NotNef(_))));
    }

    #[test]
    fn h0_examples() {
        assert_eq!(zariski_h0(&c("H")).unwrap(), 3);
        assert_eq!(zariski_h0(&c("2H - E1")).unwrap(), 5);
        assert_eq!(zariski_h0(&c("E1")).unwrap(), 1);
        assert_eq!(zariski_h0(&c("-H")).unwrap(), 0);
        assert_eq!(zariski_h0(&c("H - 2E1")).unwrap(), 0);
        assert_eq!(zariski_h0(&c("0")).unwrap(), 1);
        assert_eq!(zariski_h0(&c("3H - 2E1 - 2E2 - 2E3")).unwrap(), 1);
    }

    /// Degree-`a` monomials with `x`-order at least `m_i` at the three
    /// coordinate points; exceptional multiplicities below 0 are fixed parts.
    fn plane_curve_count(d: &PicardClass) -> u64 {
        if d.a < 0 {
            return 0;
        }
        let a = d.a as u32;
        let mult: Vec<i64> = (0..3)
            .map(|i| (-d.e.get(i).copied().unwrap_or(0)).max(0))
            .collect();
        let mut count = 0;
        for a0 in 0..=a {
            for a1 in 0..=a - a0 {
                let a2 = a - a0 - a1;
                let order = [a1 + a2, a0 + a2, a0 + a1];
                if (0..3).all(|i| order[i] as i64 >= mult[i]) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn h0_matches_plane_curve_counts() {
        let classes = [
            "H",
            "2H",
            "3H",
            "E1",
            "E2",
            "E3",
            "H - E1",
            "2H - E1",
            "H - E1 - E2",
            "2H - E1 - E2 - E3",
            "3H - 2E1 - E2",
            "4H - 2E1 - 2E2 - 2E3",
            "H - E1 - E2 - E3",
            "5H - 3E1 - 3E2",
            "2H - 3E1",
            "6H - 4E1 - 3E2 - 2E3",
        ];
        for s in classes {
            let d = c3(s);
            assert_eq!(zariski_h0(&d).unwrap(), plane_curve_count(&d), "{s}");
        }
        for a in 0..7 {
            for m1 in -1..6 {
                for m2 in -1..5 {
                    for m3 in -1..4 {
                        let d = PicardClass::new(a, vec![-m1, -m2, -m3]);
                        assert_eq!(zariski_h0(&d).unwrap(), plane_curve_count(&d), "{d}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let d1 = four_lines_divisor(1);
        assert_eq!(
            beta_closed_form(&four_lines_polarization(1), &d1).unwrap(),
            q(13, 12)
        );
        assert_eq!(
            beta_closed_form(&four_lines_polarization(2), &d1).unwrap(),
            q(37, 20)
        );
        for l in 1..=10 {
            let b = beta_closed_form(&four_lines_polarization(l), &d1).unwrap();
            assert_eq!(b, q(6 * l * l + 6 * l + 1, 8 * l + 4));
            assert!(b >= q(3 * l, 4));
        }
        assert_eq!(
            beta_closed_form(&c("H"), &c("H")),
            Err(Error::UnsupportedClosedForm)
        );
    }

    #[test]
    fn truncated_examples() {
        let a = four_lines_polarization(1);
        let d = four_lines_divisor(1);
        let b6 = beta_surface_truncated(&a, &d, 6).unwrap();
        assert_eq!(b6.value, q(149, 131));
        assert!((b6.value.clone() - q(13, 12)).abs() <= q(1, 6));
        assert_eq!(beta_surface_truncated(&a, &d, 1).unwrap().value, q(13, 12));
        assert_eq!(
            beta_surface_truncated(&c("H"), &c("H"), 5).unwrap().value,
            q(1, 3)
        );
        assert_eq!(beta_surface_truncated(&a, &d, 0), Err(Error::ZeroLevel));
    }

    #[test]
    fn comparison() {
        let r = compare_beta_seshadri(&four_lines_polarization(1), &four_lines_divisor(1), 1, 2, 8)
            .unwrap();
        assert_eq!(
            (r.beta.clone(), r.bound.clone()),
            (q(13, 12), Some(q(1, 3)))
        );
        assert!(r.holds());
        let r = compare_beta_seshadri(&c("H"), &c("H"), 1, 2, 5).unwrap();
        assert_eq!(r.method, BetaMethod::Truncated(5));
        assert_eq!((r.beta.clone(), r.bound.clone()), (q(1, 3), Some(q(1, 3))));
    }

    #[test]
    fn nef_certificates() {
        for l in 1..=10 {
            let a = four_lines_polarization(l);
            let d = four_lines_divisor(1);
            assert!(is_nef_at(&a, &d, &qi(l)).unwrap().nef);
            let r = is_nef_at(&a, &d, &(qi(l) + q(1, 100))).unwrap();
            assert_eq!(r.witness, Some(c3("E1")));
        }
    }
}
