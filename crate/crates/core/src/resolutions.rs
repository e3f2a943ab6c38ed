//! Betti tables of length-one resolutions `0 → F₁ → F₀ → I → 0`.
//!
//! Only shift data is tracked: `f0` holds the twists `d` of the summands
//! `R(-d)` of `F₀` and `f1` those of `F₁`, as sorted multisets.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ginlab::GinStaircase;

pub type Shifts = BTreeMap<u32, u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "TableRecord", from = "TableRecord")]
pub struct BettiTable {
    f0: Shifts,
    f1: Shifts,
}

#[derive(Serialize, Deserialize)]
struct ShiftCount {
    shift: u32,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct TableRecord {
    f0: Vec<ShiftCount>,
    f1: Vec<ShiftCount>,
}

fn to_counts(s: &Shifts) -> Vec<ShiftCount> {
    s.iter().map(|(&shift, &mult)| ShiftCount { shift, mult }).collect()
}

fn from_counts(v: &[ShiftCount]) -> Shifts {
    let mut s = Shifts::new();
    for c in v.iter().filter(|c| c.mult > 0) {
        *s.entry(c.shift).or_default() += c.mult;
    }
    s
}

impl From<BettiTable> for TableRecord {
    fn from(t: BettiTable) -> Self {
        TableRecord { f0: to_counts(&t.f0), f1: to_counts(&t.f1) }
    }
}

impl From<TableRecord> for BettiTable {
    fn from(r: TableRecord) -> Self {
        BettiTable { f0: from_counts(&r.f0), f1: from_counts(&r.f1) }
    }
}

fn collect(shifts: impl IntoIterator<Item = u32>) -> Shifts {
    let mut s = Shifts::new();
    for v in shifts {
        *s.entry(v).or_default() += 1;
    }
    s
}

fn size(s: &Shifts) -> u32 {
    s.values().sum()
}

fn shifted(s: &Shifts, by: u32) -> Shifts {
    s.iter().map(|(&k, &v)| (k + by, v)).collect()
}

/// Binomial `C(n, 2)`, zero for `n < 2`.
fn choose2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

impl BettiTable {
    pub fn from_shifts(f0: &[u32], f1: &[u32]) -> Self {
        BettiTable { f0: collect(f0.iter().copied()), f1: collect(f1.iter().copied()) }
    }

    /// Resolution `0 → 0 → R → R → 0` of the unit ideal.
    pub fn unit() -> Self {
        BettiTable::from_shifts(&[0], &[])
    }

    pub fn f0(&self) -> &Shifts {
        &self.f0
    }

    pub fn f1(&self) -> &Shifts {
        &self.f1
    }

    /// Shifts of `F₀` in ascending order, with repetition.
    pub fn f0_list(&self) -> Vec<u32> {
        self.f0.iter().flat_map(|(&k, &v)| std::iter::repeat_n(k, v as usize)).collect()
    }

    pub fn f1_list(&self) -> Vec<u32> {
        self.f1.iter().flat_map(|(&k, &v)| std::iter::repeat_n(k, v as usize)).collect()
    }

    /// Ranks `(μ, ψ)` of `F₀` and `F₁`.
    pub fn ranks(&self) -> (u32, u32) {
        (size(&self.f0), size(&self.f1))
    }

    /// `μ = ψ + 1` and every syzygy shift above the initial degree.
    pub fn is_consistent(&self) -> bool {
        let (mu, psi) = self.ranks();
        let min0 = self.f0.keys().next();
        mu == psi + 1 && self.f1.keys().all(|u| min0.is_some_and(|d| u > d))
    }

    fn adjoin(mut self, f0: &[(u32, u32)], f1: &[(u32, u32)]) -> Self {
        for &(shift, mult) in f0 {
            *self.f0.entry(shift).or_default() += mult;
        }
        for &(shift, mult) in f1 {
            *self.f1.entry(shift).or_default() += mult;
        }
        self
    }

    fn shift_all(&self, by: u32) -> Self {
        BettiTable { f0: shifted(&self.f0, by), f1: shifted(&self.f1, by) }
    }
}

/// Table of `I^(t)` from that of `I^(t-1)` for `r ≥ 4` points on a conic.
pub fn catalisano_step(prev: &BettiTable, r: u32, t: u32) -> Result<BettiTable> {
    if r < 4 {
        return Err(Error::DomainError(format!("the recursion needs r >= 4, got r={r}")));
    }
    if t == 0 {
        return Err(Error::DomainError("the recursion starts at t = 1".into()));
    }
    let rt = r * t;
    let base = prev.shift_all(2);
    Ok(if rt.is_multiple_of(2) {
        base.adjoin(&[(rt / 2, 1)], &[(rt / 2 + 2, 1)])
    } else {
        let h = rt.div_ceil(2);
        base.adjoin(&[(h, 2)], &[(h + 1, 2)])
    })
}

/// `I^(t)` from `I^(t-2)`: one step through `t - 1`, then one through `t`.
pub fn catalisano_double_step(prev: &BettiTable, r: u32, t: u32) -> Result<BettiTable> {
    if t < 2 {
        return Err(Error::DomainError("double step needs t >= 2".into()));
    }
    catalisano_step(&catalisano_step(prev, r, t - 1)?, r, t)
}

/// Folds [`catalisano_step`] from the unit ideal for `t = 1..=m`.
pub fn catalisano_resolve(r: u32, m: u32) -> Result<BettiTable> {
    if r < 4 {
        return Err(Error::DomainError(format!("the recursion needs r >= 4, got r={r}")));
    }
    (1..=m).try_fold(BettiTable::unit(), |acc, t| catalisano_step(&acc, r, t))
}

/// Closed-form resolution of `I^(m)` for `r ≥ 3` points on an irreducible
/// conic: `r` even, or `r` odd with `m` even.
pub fn closed_form_resolution(r: u32, m: u32) -> Result<BettiTable> {
    let unsupported = Error::UnsupportedCase { r, m };
    if r < 3 || m == 0 {
        return Err(unsupported);
    }
    if r.is_multiple_of(2) {
        let half = r / 2;
        let g0 = (0..=m).map(|j| 2 * (m - j) + half * j);
        let g1 = (1..=m).map(|j| 2 * (m - j) + half * j + 2);
        return Ok(BettiTable::from_shifts(&g0.collect::<Vec<_>>(), &g1.collect::<Vec<_>>()));
    }
    if m % 2 == 1 {
        return Err(unsupported);
    }
    let k = m / 2;
    if r == 3 {
        let a = 3 * m / 2;
        let mut g0 = vec![a];
        let mut g1 = Vec::new();
        for j in 0..k {
            g0.extend([a + j + 1; 3]);
            g1.extend([a + j + 2; 3]);
        }
        return Ok(BettiTable::from_shifts(&g0, &g1));
    }
    let step = r - 4;
    let odd_half = (r - 1) / 2;
    let mut g0: Vec<u32> = (0..=k).map(|j| 2 * m + j * step).collect();
    let mut g1: Vec<u32> = (1..=k).map(|j| 2 * m + j * step + 2).collect();
    for j in 0..k {
        g0.extend([2 * m + j * step + odd_half - 1; 2]);
        g1.extend([2 * m + j * step + odd_half; 2]);
    }
    Ok(BettiTable::from_shifts(&g0, &g1))
}

/// `(D, U) = (min f0, max f1)`.
pub fn extremal_shifts(b: &BettiTable) -> Result<(u32, u32)> {
    match (b.f0.keys().next(), b.f1.keys().next_back()) {
        (Some(&d), Some(&u)) => Ok((d, u)),
        _ => Err(Error::EmptyTable),
    }
}

/// Predicted `(D(m), U(m))`: `(2m, rm/2 + 2)` for `r ≥ 4` (with `m` even
/// when `r` is odd) and `(3m/2, 2m + 1)` for `r = 3`, `m` even.
pub fn predicted_extremal_shifts(r: u32, m: u32) -> Result<(u32, u32)> {
    match r {
        _ if m == 0 || r < 3 => Err(Error::UnsupportedCase { r, m }),
        3 if m.is_multiple_of(2) => Ok((3 * m / 2, 2 * m + 1)),
        _ if r >= 4 && (r.is_multiple_of(2) || m.is_multiple_of(2)) => Ok((2 * m, r * m / 2 + 2)),
        _ => Err(Error::UnsupportedCase { r, m }),
    }
}

/// Whether `(r, m)` has a closed-form resolution.
pub fn closed_form_supported(r: u32, m: u32) -> bool {
    predicted_extremal_shifts(r, m).is_ok()
}

/// Resolution of the staircase ideal: generators `x^i y^{λ_i}` and `x^α`,
/// syzygies between neighbours in degrees `λ_i + i + 1`.
pub fn hilbert_burch_of_gin(s: &GinStaircase) -> BettiTable {
    let lambdas = s.lambdas();
    let mut f0: Vec<u32> = lambdas.iter().enumerate().map(|(i, &l)| l + i as u32).collect();
    f0.push(s.alpha());
    let f1: Vec<u32> = lambdas.iter().enumerate().map(|(i, &l)| l + i as u32 + 1).collect();
    BettiTable::from_shifts(&f0, &f1)
}

/// Shifts `v` to cancel, ascending, each removing one `R(-v)` from both `F₀`
/// and `F₁`, turning `from` into `to`. `None` if no such sequence exists.
pub fn consecutive_cancellation_reachable(from: &BettiTable, to: &BettiTable) -> Option<Vec<u32>> {
    fn difference(big: &Shifts, small: &Shifts) -> Option<Shifts> {
        if small.iter().any(|(k, &v)| big.get(k).copied().unwrap_or(0) < v) {
            return None;
        }
        Some(big.iter().map(|(&k, &v)| (k, v - small.get(&k).copied().unwrap_or(0))).filter(|&(_, v)| v > 0).collect())
    }
    let d0 = difference(&from.f0, &to.f0)?;
    let d1 = difference(&from.f1, &to.f1)?;
    if d0 != d1 {
        return None;
    }
    Some(d0.iter().flat_map(|(&k, &v)| std::iter::repeat_n(k, v as usize)).collect())
}

/// `dim I_d` from the Euler characteristic of the resolution.
pub fn hf_from_betti(b: &BettiTable, d: u32) -> i64 {
    let part = |s: &Shifts| -> i64 { s.iter().map(|(&k, &v)| v as i64 * choose2(d as i64 - k as i64 + 2)).sum() };
    part(&b.f0) - part(&b.f1)
}
