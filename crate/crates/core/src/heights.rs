//! Places of ℚ, logarithmic heights, Weil functions of subschemes of Pⁿ and
//! proximity functions. Every value is the logarithm of an exact rational,
//! so identities such as the product formula are checked without rounding.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graded_ring::{HomogeneousForm, Subscheme};
use crate::rational::{ln_bigint, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinite,
    Prime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Place::Prime(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Place> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(Place::Infinite),
            t => {
                let p: u64 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad place {t:?}")))?;
                Place::prime(p)
            }
        }
    }
}

/// Serde through the `Display`/`FromStr` text forms.
macro_rules! serde_via_str {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?
                    .parse()
                    .map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_str!(Place);

/// Finite set of places containing the archimedean one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaceSet(Vec<Place>);

impl PlaceSet {
    pub fn new(places: impl IntoIterator<Item = Place>) -> Result<PlaceSet> {
        let set: BTreeSet<Place> = places.into_iter().collect();
        if !set.contains(&Place::Infinite) {
            return Err(Error::MissingArchimedean);
        }
        Ok(PlaceSet(set.into_iter().collect()))
    }

    pub fn archimedean() -> PlaceSet {
        PlaceSet(vec![Place::Infinite])
    }

    pub fn places(&self) -> &[Place] {
        &self.0
    }
}

impl FromStr for PlaceSet {
    type Err = Error;
    /// `"inf,2,3,5"`.
    fn from_str(s: &str) -> Result<PlaceSet> {
        let places = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Place>>>()?;
        PlaceSet::new(places)
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Exponent of `p` in a nonzero integer.
pub fn ord_p(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        k += 1;
    }
    k
}

/// `‖x‖_v`: `|x|` at infinity, `p^{-ord_p x}` at `p`.
pub fn norm(x: &Q, v: Place) -> Result<Q> {
    if x.is_zero() {
        return Err(Error::ZeroValue);
    }
    Ok(match v {
        Place::Infinite => x.abs(),
        Place::Prime(p) => {
            let up = ord_p(x.numer(), p);
            let down = ord_p(x.denom(), p);
            let pp = BigInt::from(p);
            Q::new(
                num_traits::pow(pp.clone(), down as usize),
                num_traits::pow(pp, up as usize),
            )
        }
    })
}

/// `log q` for a positive rational `q`, kept as `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactLog(Q);

impl ExactLog {
    pub fn of(arg: Q) -> Result<ExactLog> {
        if !arg.is_positive() {
            return Err(Error::ZeroValue);
        }
        Ok(ExactLog(arg))
    }

    pub fn zero() -> ExactLog {
        ExactLog(Q::one())
    }

    pub fn arg(&self) -> &Q {
        &self.0
    }

    pub fn value(&self) -> f64 {
        ln_bigint(self.0.numer()) - ln_bigint(self.0.denom())
    }

    /// `k·log q`.
    pub fn times(&self, k: i32) -> ExactLog {
        ExactLog(num_traits::Pow::pow(&self.0, k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_one()
    }
}

impl Add for &ExactLog {
    type Output = ExactLog;
    // log a + log b = log ab
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, o: &ExactLog) -> ExactLog {
        ExactLog(&self.0 * &o.0)
    }
}

impl Add for ExactLog {
    type Output = ExactLog;
    fn add(self, o: ExactLog) -> ExactLog {
        &self + &o
    }
}

impl Sub for &ExactLog {
    type Output = ExactLog;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, o: &ExactLog) -> ExactLog {
        ExactLog(&self.0 / &o.0)
    }
}

impl Sub for ExactLog {
    type Output = ExactLog;
    fn sub(self, o: ExactLog) -> ExactLog {
        &self - &o
    }
}

impl Neg for ExactLog {
    type Output = ExactLog;
    fn neg(self) -> ExactLog {
        ExactLog(self.0.recip())
    }
}

impl PartialOrd for ExactLog {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactLog {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for ExactLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "log({})", crate::rational::fmt_q(&self.0))
    }
}

impl FromStr for ExactLog {
    type Err = Error;
    /// `"log(p/q)"`.
    fn from_str(s: &str) -> Result<ExactLog> {
        let inner = s
            .trim()
            .strip_prefix("log(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad logarithm {s:?}")))?;
        ExactLog::of(crate::rational::parse_q(inner)?)
    }
}

serde_via_str!(ExactLog);

impl std::iter::Sum for ExactLog {
    fn sum<I: Iterator<Item = ExactLog>>(iter: I) -> ExactLog {
        iter.fold(ExactLog::zero(), |a, b| a + b)
    }
}

/// `Σ c_k log q_k` with rational coefficients, compared exactly by clearing
/// denominators and comparing products of powers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LogSum(Vec<(Q, Q)>);

impl LogSum {
    pub fn new() -> LogSum {
        LogSum(Vec::new())
    }

    pub fn term(coeff: Q, log: &ExactLog) -> LogSum {
        LogSum(vec![(coeff, log.0.clone())])
    }

    pub fn push(&mut self, coeff: Q, log: &ExactLog) {
        self.0.push((coeff, log.0.clone()));
    }

    pub fn value(&self) -> f64 {
        self.0
            .iter()
            .map(|(c, q)| crate::rational::to_f64(c) * ExactLog(q.clone()).value())
            .sum()
    }

    fn minus(&self, other: &LogSum) -> LogSum {
        let mut t = self.0.clone();
        t.extend(other.0.iter().map(|(c, q)| (-c, q.clone())));
        LogSum(t)
    }

    /// Sign of the sum, computed exactly.
    pub fn signum(&self) -> Ordering {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |l, (c, _)| l.lcm(c.denom()));
        let mut pos = Q::one();
        let mut neg = Q::one();
        for (c, q) in &self.0 {
            let k = (c * Q::from_integer(lcm.clone())).to_integer();
            let e = k.abs().to_u32().expect("exponent fits in u32");
            let pw = num_traits::Pow::pow(q, e);
            if k.is_positive() {
                pos *= pw;
            } else if k.is_negative() {
                neg *= pw;
            }
        }
        pos.cmp(&neg)
    }

    pub fn cmp_exact(&self, other: &LogSum) -> Ordering {
        self.minus(other).signum()
    }
}

/// Point of Pⁿ(ℚ) with coprime integer coordinates, first nonzero one positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(Vec<BigInt>);

impl ProjectivePoint {
    pub fn new(coords: Vec<BigInt>) -> Result<ProjectivePoint> {
        let g = coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let lead = coords.iter().find(|c| !c.is_zero()).unwrap();
        let g = if lead.is_negative() { -g } else { g };
        Ok(ProjectivePoint(coords.iter().map(|c| c / &g).collect()))
    }

    pub fn from_i64(coords: &[i64]) -> Result<ProjectivePoint> {
        ProjectivePoint::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Scales rational coordinates to the canonical integer representative.
    pub fn from_rationals(coords: &[Q]) -> Result<ProjectivePoint> {
        let lcm = coords.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        ProjectivePoint::new(
            coords
                .iter()
                .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn to_q(&self) -> Vec<Q> {
        self.0.iter().map(|c| Q::from_integer(c.clone())).collect()
    }

    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap()
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;
    /// `"2:3"` or `"1:-1:4"`.
    fn from_str(s: &str) -> Result<ProjectivePoint> {
        let coords = s
            .split(':')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() < 2 {
            return Err(Error::Parse(format!("bad point {s:?}")));
        }
        ProjectivePoint::new(coords)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(":"))
    }
}

serde_via_str!(ProjectivePoint);

/// `max_j ‖x_j‖_v` over the nonzero coordinates.
fn max_norm(p: &ProjectivePoint, v: Place) -> Q {
    p.0.iter()
        .filter(|c| !c.is_zero())
        .map(|c| norm(&Q::from_integer(c.clone()), v).unwrap())
        .max()
        .unwrap()
}

/// `h(P) = log max |x_i|` for the coprime representative.
pub fn height(p: &ProjectivePoint) -> ExactLog {
    ExactLog(Q::from_integer(p.max_abs()))
}

/// `Σ_v log max_i ‖x_i‖_v` over `v` in `places`.
pub fn height_over(p: &ProjectivePoint, places: &[Place]) -> ExactLog {
    places.iter().map(|&v| ExactLog(max_norm(p, v))).sum()
}

/// `log(max_j ‖x_j‖_v^d / ‖φ(x)‖_v)`, or `None` where `φ(x) = 0`.
pub fn generator_weil(phi: &HomogeneousForm, v: Place, p: &ProjectivePoint) -> Option<ExactLog> {
    let val = phi.eval_int(p.coords());
    if val.is_zero() {
        return None;
    }
    let top = num_traits::Pow::pow(&max_norm(p, v), phi.degree());
    Some(ExactLog(top / norm(&val, v).unwrap()))
}

/// `λ_{Y,v}(P) = min_i log(max_j ‖x_j‖_v^{d_i} / ‖φ_i(x)‖_v)` over the
/// generators `φ_i` of `Y`.
pub fn weil(y: &Subscheme, v: Place, p: &ProjectivePoint) -> Result<ExactLog> {
    if y.nvars() != p.nvars() {
        return Err(Error::DimensionMismatch {
            expected: y.nvars(),
            got: p.nvars(),
        });
    }
    y.generators()
        .iter()
        .filter_map(|g| generator_weil(g, v, p))
        .min()
        .ok_or_else(|| Error::OnSupport(y.label().to_string()))
}

/// `m_{Y,S}(P) = Σ_{v ∈ S} λ_{Y,v}(P)`.
pub fn proximity(y: &Subscheme, s: &PlaceSet, p: &ProjectivePoint) -> Result<ExactLog> {
    s.places().iter().map(|&v| weil(y, v, p)).sum()
}

fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in u64"));
    }
    out
}

/// Places where a hypersurface's Weil function can be nonzero at `P`:
/// infinity and the primes dividing `f(P)` or the coefficient denominators.
pub fn relevant_places(f: &HomogeneousForm, p: &ProjectivePoint) -> Result<Vec<Place>> {
    let val = f.eval_int(p.coords());
    if val.is_zero() {
        return Err(Error::OnSupport(f.to_string()));
    }
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    primes.extend(prime_factors(val.numer()));
    primes.extend(prime_factors(val.denom()));
    let mut out = vec![Place::Infinite];
    out.extend(primes.into_iter().map(Place::Prime));
    Ok(out)
}

/// `(Σ_v λ_{D,v}(P), deg D · h(P))` summed over every place of ℚ; equal by
/// the product formula.
pub fn product_formula_check(
    f: &HomogeneousForm,
    p: &ProjectivePoint,
) -> Result<(ExactLog, ExactLog)> {
    let d = Subscheme::new("D", vec![f.clone()])?;
    let total = relevant_places(f, p)?
        .into_iter()
        .map(|v| weil(&d, v, p))
        .sum::<Result<ExactLog>>()?;
    Ok((total, height(p).times(f.degree() as i32)))
}

/// Largest coefficient norm `max ‖c‖_v` of a form.
fn coefficient_bound(f: &HomogeneousForm, v: Place) -> Q {
    match v {
        Place::Infinite => f.length(),
        Place::Prime(_) => f
            .terms()
            .map(|(_, c)| norm(c, v).unwrap())
            .max()
            .unwrap_or_else(Q::zero),
    }
}

/// `C` with `λ_{Y,v} ≥ −C` everywhere off `Y`: `log max_i L_v(φ_i)`, where
/// `L_∞` sums absolute coefficients and `L_p` takes the largest `p`-adic one.
pub fn weil_lower_bound(y: &Subscheme, v: Place) -> ExactLog {
    let m = y
        .generators()
        .iter()
        .map(|g| coefficient_bound(g, v))
        .max()
        .unwrap();
    ExactLog(m)
}

/// Given `ψ_j = Σ_i a_ji φ_i` expressing the generators of `Y` through
/// those of `X` (so `𝓘_Y ⊆ 𝓘_X`), returns `C_v` with
/// `λ_{X,v} ≤ λ_{Y,v} + C_v`. The identities are verified first.
pub fn containment_constant(
    x: &Subscheme,
    y: &Subscheme,
    combos: &[Vec<HomogeneousForm>],
    v: Place,
) -> Result<ExactLog> {
    let phis = x.generators();
    if combos.len() != y.generators().len() || combos.iter().any(|row| row.len() != phis.len()) {
        return Err(Error::Config(
            "coefficient matrix has the wrong shape".into(),
        ));
    }
    let mut worst: Option<Q> = None;
    for (psi, row) in y.generators().iter().zip(combos) {
        let mut acc = HomogeneousForm::zero(psi.nvars(), psi.degree());
        let mut bound = Q::zero();
        for (a, phi) in row.iter().zip(phis) {
            if a.is_zero() {
                continue;
            }
            acc = acc.add(&a.mul(phi))?;
            let c = coefficient_bound(a, v);
            bound = match v {
                Place::Infinite => bound + c,
                Place::Prime(_) => bound.max(c),
            };
        }
        if acc != *psi {
            return Err(Error::Config(format!(
                "{psi} is not the stated combination"
            )));
        }
        worst = Some(match worst {
            Some(w) if w >= bound => w,
            _ => bound,
        });
    }
    let w = worst.filter(|w| w.is_positive()).ok_or(Error::ZeroValue)?;
    Ok(ExactLog(w))
}
