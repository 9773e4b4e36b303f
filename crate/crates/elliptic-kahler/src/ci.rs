//! Hodge numbers of smooth complete intersections and the ellipticity scan.
//!
//! The middle-row Hodge numbers are computed from Euler characteristics of
//! twisted sheaves of differentials: `χ(P^N, Ω^p(t))` comes from the Euler
//! sequence, restriction to the complete intersection is a Koszul
//! alternating sum over sub-multidegrees, and the conormal filtration of
//! `Ω^p_{P^N}|_X` is solved recursively for `χ(X, Ω^p_X(t))`. Below the
//! middle the cohomology is that of projective space (Lefschetz hyperplane
//! theorem), so `h^{p,n-p}` is read off the alternating sum. Everything runs
//! on big integers.
//!
//! An independent oracle for hypersurfaces counts monomials in the Jacobian
//! ring of the Fermat hypersurface through the Gröbner engine.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::groebner::buchberger;
use crate::poly::{PolyRing, Polynomial, Rational};
use crate::{Error, Result};

/// A complete intersection: complex dimension `n >= 3` and a multiset of
/// hypersurface degrees (empty for projective space itself). Degree-1
/// factors are normalized away.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CIConfig {
    pub n: u32,
    pub degrees: Vec<u32>,
}

impl CIConfig {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(
                "the scan starts at complex dimension 3".into(),
            ));
        }
        if degrees.contains(&0) {
            return Err(Error::Precondition("degree 0 is not a hypersurface".into()));
        }
        let mut degrees: Vec<u32> = degrees.into_iter().filter(|&d| d > 1).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CIConfig { n, degrees })
    }

    /// Ambient projective dimension `N = n + k`.
    pub fn ambient(&self) -> u32 {
        self.n + self.degrees.len() as u32
    }

    pub fn label(&self) -> String {
        if self.degrees.is_empty() {
            format!("P^{}", self.n)
        } else {
            let ds: Vec<String> = self.degrees.iter().rev().map(|d| d.to_string()).collect();
            format!("X({}) in P^{}", ds.join(","), self.ambient())
        }
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

struct HodgeComputer {
    dim: u32,
    ambient: u32,
    degrees: Vec<u32>,
    // subset sums of the multidegree, with (-1)^{|S|} multiplicities
    koszul: Vec<(i64, i64)>,
    // subset sums grouped by subset size
    by_size: BTreeMap<usize, Vec<i64>>,
    memo: RefCell<BTreeMap<(usize, i64), BigInt>>,
}

impl HodgeComputer {
    fn new(config: &CIConfig) -> Self {
        let k = config.degrees.len();
        let mut koszul: BTreeMap<i64, i64> = BTreeMap::new();
        let mut by_size: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        for mask in 0u32..(1 << k) {
            let size = mask.count_ones() as usize;
            let sum: i64 = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| config.degrees[i] as i64)
                .sum();
            *koszul.entry(sum).or_insert(0) += if size.is_multiple_of(2) { 1 } else { -1 };
            by_size.entry(size).or_default().push(sum);
        }
        HodgeComputer {
            dim: config.n,
            ambient: config.ambient(),
            degrees: config.degrees.clone(),
            koszul: koszul.into_iter().collect(),
            by_size,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    /// `χ(P^N, O(t)) = (t+1)(t+2)...(t+N) / N!`, exact for every integer `t`.
    fn chi_o(&self, t: i64) -> BigInt {
        let num: BigInt = (1..=self.ambient as i64)
            .map(|i| BigInt::from(t + i))
            .product();
        let den = factorial(self.ambient);
        let (q, r) = num_integer::div_rem(num, den);
        debug_assert!(r.is_zero());
        q
    }

    /// `χ(P^N, Ω^p(t))` from the wedge powers of the Euler sequence.
    fn chi_omega_ambient(&self, p: usize, t: i64) -> BigInt {
        if p > self.ambient as usize {
            return BigInt::zero();
        }
        let mut acc = self.chi_o(t); // p = 0
        for j in 1..=p {
            acc = binomial(self.ambient + 1, j as u32) * self.chi_o(t - j as i64) - acc;
        }
        acc
    }

    /// `χ(X, Ω^p_{P^N}(t)|_X)` by the Koszul resolution of `O_X`.
    fn chi_omega_restricted(&self, p: usize, t: i64) -> BigInt {
        self.koszul
            .iter()
            .map(|(shift, mult)| BigInt::from(*mult) * self.chi_omega_ambient(p, t - shift))
            .sum()
    }

    /// `χ(X, Ω^p_X(t))` by peeling the conormal filtration.
    fn chi_omega_x(&self, p: usize, t: i64) -> BigInt {
        if let Some(v) = self.memo.borrow().get(&(p, t)) {
            return v.clone();
        }
        let mut acc = self.chi_omega_restricted(p, t);
        for j in 0..p {
            if let Some(sums) = self.by_size.get(&(p - j)) {
                for d_s in sums {
                    acc -= self.chi_omega_x(j, t - d_s);
                }
            }
        }
        self.memo.borrow_mut().insert((p, t), acc.clone());
        acc
    }

    /// Full middle row `h^{p, n-p}` for `p = 0..=n` (with the ambient
    /// Lefschetz class included on the diagonal when `n` is even).
    fn middle_row(&self) -> Result<Vec<u64>> {
        let n = self.dim as usize;
        let mut row = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let chi = self.chi_omega_x(p, 0);
            // subtract the projective-space part away from the middle
            let off_middle = if 2 * p != n {
                if p % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            } else {
                BigInt::zero()
            };
            let mut h = chi - off_middle;
            if (n - p) % 2 == 1 {
                h = -h;
            }
            if h.is_negative() {
                return Err(Error::Internal(format!(
                    "negative Hodge number h^({p},{}) = {h} for X({:?})",
                    n - p,
                    self.degrees
                )));
            }
            row.push(h.to_u64().ok_or_else(|| {
                Error::Internal("Hodge number exceeds u64".into())
            })?);
        }
        Ok(row)
    }
}

/// Middle-cohomology Hodge numbers `h^{p, n-p}`, `p = 0..=n`. Cohomology
/// below the middle is that of projective space by the Lefschetz hyperplane
/// theorem; for even `n` the diagonal entry includes the ambient class.
pub fn middle_hodge_row(config: &CIConfig) -> Result<Vec<u64>> {
    HodgeComputer::new(config).middle_row()
}

/// Independent oracle for hypersurfaces: the primitive `h^{n-p,p}` of a
/// degree-`d` hypersurface in `P^{n+1}` is the Hilbert function of the
/// Jacobian ring of the Fermat hypersurface, `Q[x_0..x_{n+1}]/(x_i^{d-1})`,
/// in degree `(p+1)d - n - 2`.
pub fn jacobian_oracle(n: u32, d: u32, p: u32) -> Result<u64> {
    if d < 2 {
        return Err(Error::Precondition("hypersurfaces have degree >= 2".into()));
    }
    if p > n {
        return Err(Error::Precondition(format!("p = {p} exceeds n = {n}")));
    }
    let target = (p as i64 + 1) * d as i64 - n as i64 - 2;
    if target < 0 {
        return Ok(0);
    }
    let names: Vec<String> = (0..n + 2).map(|i| format!("x{i}")).collect();
    let vars: Vec<(&str, u32)> = names.iter().map(|s| (s.as_str(), 2)).collect();
    let ring = PolyRing::new(&vars)?;
    let gens: Vec<Polynomial> = (0..n as usize + 2)
        .map(|i| {
            let mut exps = vec![0u32; n as usize + 2];
            exps[i] = d - 1;
            Polynomial::from_terms(&ring, vec![(exps, Rational::one())])
        })
        .collect();
    let gb = buchberger(&gens)?;
    Ok(gb.hilbert_function(2 * target))
}

/// Euler characteristic from Chern classes: the coefficient of `h^n` in
/// `(1+h)^{N+1} / ∏(1 + d_i h)` times `∏ d_i`.
pub fn euler_characteristic(config: &CIConfig) -> BigInt {
    let n = config.n as usize;
    let nn = config.ambient();
    // series (1+h)^{N+1} mod h^{n+1}
    let mut series: Vec<BigInt> = (0..=n as u32).map(|j| binomial(nn + 1, j)).collect();
    // divide by each (1 + d h): q_k = p_k - d q_{k-1}
    for &d in &config.degrees {
        let mut q = vec![BigInt::zero(); n + 1];
        for k in 0..=n {
            let prev = if k == 0 {
                BigInt::zero()
            } else {
                BigInt::from(d) * &q[k - 1]
            };
            q[k] = &series[k] - prev;
        }
        series = q;
    }
    let deg: BigInt = config.degrees.iter().map(|&d| BigInt::from(d)).product();
    series[n].clone() * deg
}

/// Euler characteristic re-assembled from the Hodge rows: projective-space
/// cohomology off the middle plus the computed middle row.
pub fn euler_from_rows(config: &CIConfig, middle: &[u64]) -> i64 {
    let n = config.n as usize;
    let mut acc = 0i64;
    for k in (0..=2 * n).step_by(2) {
        if k != n {
            acc += 1;
        }
    }
    let middle_sum: i64 = middle.iter().map(|&h| h as i64).sum();
    if n.is_multiple_of(2) {
        acc + middle_sum
    } else {
        acc - middle_sum
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanEntry {
    pub config: CIConfig,
    pub middle_row: Vec<u64>,
    pub middle_betti: u64,
    /// Hodge level of the middle degree; `None` encodes `-∞`.
    pub level: Option<u32>,
    pub elliptic: bool,
    pub reason: String,
}

/// Middle Hodge level from a row `h^{p,n-p}`.
fn middle_level(row: &[u64]) -> Option<u32> {
    let n = row.len() - 1;
    row.iter()
        .enumerate()
        .filter(|(_, h)| **h != 0)
        .map(|(p, _)| (2 * p as i64 - n as i64).unsigned_abs() as u32)
        .max()
}

/// The executable ellipticity criterion: for even `n` the middle Betti
/// number is at most 2 with middle Hodge level `<= 0`; for odd `n` the
/// middle cohomology vanishes.
pub fn elliptic_candidate(config: &CIConfig) -> Result<ScanEntry> {
    let row = middle_hodge_row(config)?;
    let betti: u64 = row.iter().sum();
    let level = middle_level(&row);
    let (elliptic, reason) = if config.n.is_multiple_of(2) {
        if betti > 2 {
            (false, format!("middle Betti number {betti} exceeds 2"))
        } else if matches!(level, Some(l) if l > 0) {
            (
                false,
                format!("middle Hodge level {} is positive", level.unwrap()),
            )
        } else {
            (true, format!("middle Betti number {betti} with level <= 0"))
        }
    } else if betti != 0 {
        (false, format!("middle cohomology has dimension {betti}"))
    } else {
        (true, "middle cohomology vanishes".into())
    };
    Ok(ScanEntry {
        config: config.clone(),
        middle_row: row,
        middle_betti: betti,
        level,
        elliptic,
        reason,
    })
}

/// All degree multisets with entries `>= 2` and sum `<= max_total`.
fn degree_multisets(max_total: u32) -> Vec<Vec<u32>> {
    fn go(max_part: u32, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for d in (2..=max_part.min(remaining)).rev() {
            cur.push(d);
            go(d, remaining - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_total, max_total, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Scan every complete intersection with `3 <= n <= max_n` and total degree
/// at most `max_total_degree`, reporting each config's verdict.
pub fn scan(max_n: u32, max_total_degree: u32) -> Result<Vec<ScanEntry>> {
    if max_n < 3 {
        return Err(Error::Precondition("scan needs max_n >= 3".into()));
    }
    let mut configs = Vec::new();
    for n in 3..=max_n {
        for degrees in degree_multisets(max_total_degree) {
            configs.push(CIConfig::new(n, degrees)?);
        }
    }
    let mut entries = configs
        .par_iter()
        .map(elliptic_candidate)
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by(|a, b| a.config.cmp(&b.config));
    Ok(entries)
}

/// Only the configs passing the criterion.
pub fn scan_passing(max_n: u32, max_total_degree: u32) -> Result<Vec<CIConfig>> {
    Ok(scan(max_n, max_total_degree)?
        .into_iter()
        .filter(|e| e.elliptic)
        .map(|e| e.config)
        .collect())
}
