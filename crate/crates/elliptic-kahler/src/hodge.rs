//! Hodge diamonds of compact Kähler manifolds and the admissibility filters
//! used by the classification pipeline: symmetry validation, Hard Lefschetz
//! monotonicity, the Hirzebruch signature, Hodge levels, the geometric-genus
//! and Hodge–Riemann filters, and the bounded enumeration of positive-level
//! diamonds in complex dimension 4.

use serde::{Deserialize, Serialize};

use crate::{BettiVector, Error, Result};

/// The matrix `h^{p,q}` of a compact Kähler `n`-fold, `0 <= p, q <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamond {
    pub n: usize,
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    pub fn new(n: usize, h: Vec<Vec<u64>>) -> Result<Self> {
        if h.len() != n + 1 || h.iter().any(|row| row.len() != n + 1) {
            return Err(Error::Precondition(format!(
                "a dimension-{n} diamond needs an {0}x{0} matrix",
                n + 1
            )));
        }
        Ok(HodgeDiamond { n, h })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> u64) -> Self {
        let h = (0..=n).map(|p| (0..=n).map(|q| f(p, q)).collect()).collect();
        HodgeDiamond { n, h }
    }

    pub fn hodge_number(&self, p: usize, q: usize) -> u64 {
        self.h[p][q]
    }

    /// Entries `h^{p, k-p}` of total degree `k`, with `p` descending.
    pub fn row(&self, k: usize) -> Vec<u64> {
        let lo = k.saturating_sub(self.n);
        let hi = k.min(self.n);
        (lo..=hi).rev().map(|p| self.h[p][k - p]).collect()
    }

    pub fn betti(&self) -> BettiVector {
        BettiVector::new(
            (0..=2 * self.n)
                .map(|k| self.row(k).iter().sum())
                .collect(),
        )
    }

    /// Check the Kähler symmetries; the report lists each violation.
    pub fn validate(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if self.h[0][0] != 1 {
            issues.push(format!("h^(0,0) = {} (expected 1)", self.h[0][0]));
        }
        if self.h[self.n][self.n] != 1 {
            issues.push(format!("h^({0},{0}) = {1} (expected 1)", self.n, self.h[self.n][self.n]));
        }
        for p in 0..=self.n {
            for q in 0..=self.n {
                if self.h[p][q] != self.h[q][p] {
                    issues.push(format!(
                        "conjugation symmetry fails: h^({p},{q}) = {} but h^({q},{p}) = {}",
                        self.h[p][q], self.h[q][p]
                    ));
                }
                let (sp, sq) = (self.n - p, self.n - q);
                if self.h[p][q] != self.h[sp][sq] {
                    issues.push(format!(
                        "Serre duality fails: h^({p},{q}) = {} but h^({sp},{sq}) = {}",
                        self.h[p][q], self.h[sp][sq]
                    ));
                }
            }
        }
        issues
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Hirzebruch signature `Σ (−1)^q h^{p,q}`, defined for even `n`.
    pub fn signature(&self) -> Result<i64> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::Unsupported(
                "the signature is only computed in even complex dimension".into(),
            ));
        }
        let mut acc = 0i64;
        for p in 0..=self.n {
            for q in 0..=self.n {
                let sign = if q % 2 == 0 { 1 } else { -1 };
                acc += sign * self.h[p][q] as i64;
            }
        }
        Ok(acc)
    }

    /// Hodge level of total degree `k`: the largest `|p−q|` with
    /// `h^{p,q} != 0` and `p+q = k`, or `None` when the degree vanishes.
    pub fn hodge_level(&self, k: usize) -> Option<u32> {
        let lo = k.saturating_sub(self.n);
        let hi = k.min(self.n);
        (lo..=hi)
            .filter(|&p| self.h[p][k - p] != 0)
            .map(|p| (2 * p as i64 - k as i64).unsigned_abs() as u32)
            .max()
    }

    /// Vanishing geometric genus plus the duality `h^{0,p} = h^{0,m-p}`
    /// about the largest `m` with `h^{0,m} != 0`.
    pub fn geometric_genus_filter(&self) -> bool {
        if self.h[self.n][0] != 0 {
            return false;
        }
        let col: Vec<u64> = (0..=self.n).map(|p| self.h[0][p]).collect();
        let m = col.iter().rposition(|&v| v != 0).unwrap_or(0);
        (0..=m).all(|p| col[p] == col[m - p])
    }

    /// The positive-definiteness obstruction in dimension 4: a diamond with
    /// signature equal to `b_4` cannot carry a nonzero `h^{3,1}` class, since
    /// such a class spans a negative plane of the intersection form.
    pub fn hodge_riemann_filter(&self) -> Result<bool> {
        if self.n != 4 {
            return Err(Error::Unsupported(
                "the Hodge-Riemann filter is specific to dimension 4".into(),
            ));
        }
        let b4: u64 = self.row(4).iter().sum();
        let sig = self.signature()?;
        Ok(!(sig == b4 as i64 && self.h[3][1] > 0))
    }

    /// With positive Euler characteristic, either every Hodge level is
    /// `<= 0` or the first positive level appears in a degree
    /// `k <= (2n−1)/3`.
    pub fn level_bound_check(&self) -> bool {
        let first_positive = (0..=2 * self.n)
            .find(|&k| matches!(self.hodge_level(k), Some(l) if l > 0));
        match first_positive {
            None => true,
            Some(k) => 3 * k < 2 * self.n,
        }
    }

    /// Centered triangular rendering; diamonds with vanishing odd rows print
    /// only the even rows.
    pub fn render(&self) -> String {
        let even_only = (0..=2 * self.n)
            .filter(|k| k % 2 == 1)
            .all(|k| self.row(k).iter().all(|&v| v == 0));
        let rows: Vec<Vec<u64>> = (0..=2 * self.n)
            .filter(|k| !even_only || k % 2 == 0)
            .map(|k| self.row(k))
            .collect();
        let cell = rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let widest = rows.iter().map(|r| r.len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in &rows {
            let pad = (widest - row.len()) * (cell + 1) / 2;
            out.push_str(&" ".repeat(pad));
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>cell$}")).collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    /// The diamond of complex projective space of dimension `k`.
    pub fn projective_space(k: usize) -> HodgeDiamond {
        HodgeDiamond::from_fn(k, |p, q| u64::from(p == q))
    }

    /// Künneth product: Hodge numbers of a product convolve.
    pub fn product(&self, other: &HodgeDiamond) -> HodgeDiamond {
        let n = self.n + other.n;
        HodgeDiamond::from_fn(n, |p, q| {
            let mut acc = 0;
            for p1 in 0..=p.min(self.n) {
                for q1 in 0..=q.min(self.n) {
                    let (p2, q2) = (p - p1, q - q1);
                    if p2 <= other.n && q2 <= other.n {
                        acc += self.h[p1][q1] * other.h[p2][q2];
                    }
                }
            }
            acc
        })
    }
}

/// The level `<= 0` diamond of a palindromic even Betti vector: `h^{p,p} =
/// b_{2p}`, everything off-diagonal zero.
pub fn diamond_from_betti(betti: &BettiVector, n: usize) -> Result<HodgeDiamond> {
    if !betti.odd_entries_vanish() {
        return Err(Error::Unsupported(
            "only Betti vectors with vanishing odd part yield a level <= 0 diamond".into(),
        ));
    }
    if !betti.is_palindromic() || betti.top_degree() != Some(2 * n) {
        return Err(Error::Precondition(format!(
            "Betti vector {betti} is not palindromic of top degree {}",
            2 * n
        )));
    }
    Ok(HodgeDiamond::from_fn(n, |p, q| {
        if p == q {
            betti.b(2 * p)
        } else {
            0
        }
    }))
}

/// Hard Lefschetz monotonicity below the middle: cup product with the Kähler
/// class is injective, so the even Betti numbers increase to the middle.
pub fn hard_lefschetz_admissible(betti: &BettiVector) -> bool {
    let Some(top) = betti.top_degree() else {
        return true;
    };
    let evens = betti.even_entries();
    (0..evens.len().saturating_sub(1))
        .filter(|i| 2 * (i + 1) <= top / 2)
        .all(|i| evens[i] <= evens[i + 1])
}

/// All dimension-4 diamonds with vanishing odd rows, the given `b_2`, `b_4`
/// and `h^{2,0}`, subject to the Kähler-class requirement `h^{1,1} >= 1`,
/// the geometric-genus filter and the degree-2 generation bounds
/// (`h^{4,0} <= dim S^2 H^{2,0}`, `h^{3,1} <= h^{2,0} h^{1,1}`,
/// `h^{2,2} <= dim S^2 H^{1,1} + h^{2,0} h^{0,2}`).
pub fn enumerate_positive_level_diamonds(b2: u64, b4: u64, h20: u64) -> Vec<HodgeDiamond> {
    let mut out = Vec::new();
    if b2 < 2 * h20 + 1 {
        return out; // no room for the Kähler class
    }
    let h11 = b2 - 2 * h20;
    let h40 = 0u64; // geometric genus vanishes
    let s2_h11 = h11 * (h11 + 1) / 2;
    let max_h31 = h20 * h11;
    for h31 in 0..=(b4 / 2).min(max_h31) {
        let rest = b4 - 2 * h31 - 2 * h40;
        let h22 = rest;
        if h22 > s2_h11 + h20 * h20 {
            continue;
        }
        let d = HodgeDiamond::from_fn(4, |p, q| match (p.min(q), p.max(q)) {
            (0, 0) | (4, 4) => 1,
            (1, 1) => h11,
            (0, 2) => h20,
            (2, 2) => h22,
            (1, 3) => h31,
            (2, 4) => h20,
            (3, 3) => h11,
            (0, 4) => h40,
            _ => 0,
        });
        if d.is_valid() && d.geometric_genus_filter() {
            out.push(d);
        }
    }
    out
}
