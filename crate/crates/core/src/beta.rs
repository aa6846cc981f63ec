//! Truncations `β_N = Σ_{m≥1} h⁰(O(dN) ⊗ 𝓘_Y^m) / (N·h⁰(O(dN)))` on Pⁿ.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded_ring::{dim_full, support_codim, IdealPieces, Subscheme};
use crate::rational::{serde_q, Q};
use crate::surface::{zariski_h0, PicardClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaReport {
    pub n: u32,
    /// `Σ_{m≥1} h⁰(O(dN) ⊗ 𝓘_Y^m)`.
    pub numerator: u64,
    /// `N · h⁰(O(dN))`.
    pub denominator: u64,
    #[serde(with = "serde_q")]
    pub value: Q,
    /// `h⁰(O(dN) ⊗ 𝓘_Y^m)` for `m = 1, 2, ...` up to the first zero.
    pub terms: Vec<u64>,
}

fn check_ambient(y: &Subscheme) -> Result<()> {
    let n = y.ambient_dim();
    if n == 0 || n > 3 {
        return Err(Error::UnsupportedAmbient(n));
    }
    Ok(())
}

fn report(pieces: &mut IdealPieces, d: u32, level: u32) -> BetaReport {
    let degree = d * level;
    let ambient = dim_full(degree, pieces.nvars() - 1) as u64;
    let mut terms = Vec::new();
    for m in 1.. {
        let dim = pieces.power_piece(0, m, degree).dim() as u64;
        if dim == 0 {
            break;
        }
        terms.push(dim);
    }
    let numerator = terms.iter().sum();
    let denominator = level as u64 * ambient;
    BetaReport {
        n: level,
        numerator,
        denominator,
        value: Q::new(numerator.into(), denominator.into()),
        terms,
    }
}

/// `β_N(O(d), Y)`.
pub fn beta_truncated(y: &Subscheme, d: u32, level: u32) -> Result<BetaReport> {
    if level == 0 || d == 0 {
        return Err(Error::ZeroLevel);
    }
    check_ambient(y)?;
    let ys = std::slice::from_ref(y);
    let mut pieces = IdealPieces::new(ys)?;
    Ok(report(&mut pieces, d, level))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: u32,
    pub numerator: u64,
    pub denominator: u64,
    #[serde(with = "serde_q")]
    pub value: Q,
    #[serde(with = "serde_q")]
    pub min_so_far: Q,
}

/// `β_N` for `N = 1..=n_max` with a running minimum. The last row's value
/// and minimum are the two finite stand-ins for the limit.
pub fn beta_convergence(y: &Subscheme, d: u32, n_max: u32) -> Result<Vec<ConvergenceRow>> {
    if n_max == 0 || d == 0 {
        return Err(Error::ZeroLevel);
    }
    check_ambient(y)?;
    let ys = std::slice::from_ref(y);
    let mut pieces = IdealPieces::new(ys)?;
    let mut rows: Vec<ConvergenceRow> = Vec::new();
    for level in 1..=n_max {
        let r = report(&mut pieces, d, level);
        let min_so_far = match rows.last() {
            Some(prev) if prev.min_so_far < r.value => prev.min_so_far.clone(),
            _ => r.value.clone(),
        };
        rows.push(ConvergenceRow {
            n: level,
            numerator: r.numerator,
            denominator: r.denominator,
            value: r.value,
            min_so_far,
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupCrosscheck {
    #[serde(with = "serde_q")]
    pub direct: Q,
    #[serde(with = "serde_q")]
    pub blowup: Q,
    /// `(m, h⁰(O(dN) ⊗ 𝓘_y^m), h⁰(dN·H − m·E))`.
    pub terms: Vec<(u32, u64, u64)>,
}

impl BlowupCrosscheck {
    pub fn termwise_equal(&self) -> bool {
        self.terms.iter().all(|(_, a, b)| a == b)
    }
}

/// Compares `h⁰(O(dN) ⊗ 𝓘_y^m)` on P² with `h⁰(dN·H − m·E)` on the blow-up
/// at `y`, for every `m` until both vanish, and the two resulting `β_N`.
pub fn beta_blowup_crosscheck(y: &Subscheme, d: u32, level: u32) -> Result<BlowupCrosscheck> {
    if level == 0 || d == 0 {
        return Err(Error::ZeroLevel);
    }
    let is_point =
        y.nvars() == 3 && y.generators().iter().all(|g| g.degree() == 1) && support_codim(y)? == 2;
    if !is_point {
        return Err(Error::NotAPoint);
    }
    let ys = std::slice::from_ref(y);
    let mut pieces = IdealPieces::new(ys)?;
    let degree = d * level;
    let h = PicardClass::h(1);
    let e = PicardClass::exceptional(1, 1);
    let mut terms = Vec::new();
    for m in 1u32.. {
        let direct = pieces.power_piece(0, m, degree).dim() as u64;
        let blowup = zariski_h0(&h.scale(degree as i64).sub(&e.scale(m as i64))?)?;
        if direct == 0 && blowup == 0 {
            break;
        }
        terms.push((m, direct, blowup));
    }
    let denominator = Q::from_integer((level as u64 * dim_full(degree, 2) as u64).into());
    let sum = |f: fn(&(u32, u64, u64)) -> u64| {
        terms
            .iter()
            .map(f)
            .fold(Q::zero(), |acc, v| acc + Q::from_integer(v.into()))
    };
    Ok(BlowupCrosscheck {
        direct: sum(|t| t.1) / &denominator,
        blowup: sum(|t| t.2) / &denominator,
        terms,
    })
}
