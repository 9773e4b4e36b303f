//! Exponent calculus for elliptic minimal Sullivan algebras.
//!
//! An exponent tuple `(a_1..a_q; b_1..b_r)` records the half-degrees of the
//! even generators (degree `2a_i`) and odd generators (degree `2b_j - 1`).
//! This module implements the Friedlander–Halperin constraints, the formal
//! dimension formula, bounded exhaustive enumeration, complete-intersection
//! Hilbert series and the arithmetic vanishing/generation predicates used by
//! the fourfold pipeline.

use serde::{Deserialize, Serialize};

use crate::{BettiVector, Error, Result};

/// Exponents stored descending; displayed ascending, one tuple per line as
/// `a=[...] b=[...] m=... total=...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentTuple {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl ExponentTuple {
    /// Canonicalize (sort descending) and check elementary bounds:
    /// `a_i >= 1`, `b_j >= 2`.
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        if a.contains(&0) {
            return Err(Error::InvalidTuple("a-exponents must be positive".into()));
        }
        if b.iter().any(|&x| x < 2) {
            return Err(Error::InvalidTuple("b-exponents must be at least 2".into()));
        }
        let mut a = a;
        let mut b = b;
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable_by(|x, y| y.cmp(x));
        Ok(ExponentTuple { a, b })
    }

    /// Even-generator half-degrees, descending.
    pub fn a(&self) -> &[u32] {
        &self.a
    }

    /// Odd-generator half-degrees, descending.
    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn q(&self) -> usize {
        self.a.len()
    }

    pub fn r(&self) -> usize {
        self.b.len()
    }

    pub fn sum_a(&self) -> u32 {
        self.a.iter().sum()
    }

    pub fn sum_b(&self) -> u32 {
        self.b.iter().sum()
    }

    /// `m = 2(Σ b_j − Σ a_i) − (r − q)`; errors when the formula is not a
    /// positive integer.
    pub fn formal_dimension(&self) -> Result<u32> {
        let m = 2 * (self.sum_b() as i64 - self.sum_a() as i64)
            - (self.r() as i64 - self.q() as i64);
        if m <= 0 {
            return Err(Error::InvalidTuple(format!(
                "formal dimension {m} is not positive for {self}"
            )));
        }
        Ok(m as u32)
    }

    /// The Friedlander–Halperin constraints at formal dimension `m`:
    /// `q <= r`, `b_i >= 2 a_i`, `Σ 2a_i <= m`, `Σ (2b_j − 1) <= 2m − 1`,
    /// `r − q` even, and the dimension formula evaluating to `m`.
    pub fn satisfies_constraints(&self, m: u32) -> bool {
        if self.q() > self.r() || !(self.r() - self.q()).is_multiple_of(2) {
            return false;
        }
        if self.a.iter().zip(&self.b).any(|(ai, bi)| *bi < 2 * ai) {
            return false;
        }
        if 2 * self.sum_a() > m {
            return false;
        }
        if 2 * self.sum_b() as i64 - self.r() as i64 > 2 * m as i64 - 1 {
            return false;
        }
        matches!(self.formal_dimension(), Ok(fd) if fd == m)
    }

    /// Realizability of the pattern by a *minimal* algebra: for every
    /// subset `S` of the a-exponents, at least `|S|` of the b-exponents are
    /// expressible as a nonnegative combination `Σ c_i a_i` over `S` with
    /// `Σ c_i >= 2` (the degree of a decomposable form supported on `S`).
    /// This is the arithmetic condition characterizing exponent patterns of
    /// elliptic spaces; without it the bounded search admits patterns whose
    /// generic odd differentials are forced to be zero divisors.
    pub fn is_realizable(&self) -> bool {
        let q = self.q();
        for mask in 1u32..(1 << q) {
            let subset: Vec<u32> = (0..q)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.a[i])
                .collect();
            let need = subset.len();
            let hits = self
                .b
                .iter()
                .filter(|&&bj| decomposable_sum(bj, &subset))
                .count();
            if hits < need {
                return false;
            }
        }
        true
    }

    /// Sum of degree-2 generators is positive iff some `a_i = 1`; a Kähler
    /// class needs exactly that.
    pub fn has_degree_two_generator(&self) -> bool {
        self.a.contains(&1)
    }

    /// Coefficients of `∏(1 − t^{2b_j}) / ∏(1 − t^{2a_i})` for `r = q`;
    /// errors when the quotient is not a polynomial with nonnegative
    /// coefficients.
    pub fn hilbert_series(&self) -> Result<BettiVector> {
        if self.q() != self.r() {
            return Err(Error::Unsupported(
                "Hilbert series needs r = q (complete-intersection cohomology)".into(),
            ));
        }
        let m = self.formal_dimension()? as usize;
        let span = 2 * self.sum_b() as usize + 1;
        let mut coeffs = vec![0i64; span];
        coeffs[0] = 1;
        // numerator ∏ (1 - t^{2b})
        for &bj in &self.b {
            let d = 2 * bj as usize;
            for k in (0..span).rev() {
                if k >= d {
                    coeffs[k] -= coeffs[k - d];
                }
            }
        }
        // divide by each (1 - t^{2a}): q_k = p_k + q_{k-d}
        for &ai in &self.a {
            let d = 2 * ai as usize;
            for k in d..span {
                coeffs[k] += coeffs[k - d];
            }
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::InvalidTuple(format!(
                "{self} has a negative Hilbert coefficient"
            )));
        }
        if coeffs.iter().skip(m + 1).any(|&c| c != 0) {
            return Err(Error::InvalidTuple(format!(
                "{self} does not have polynomial Hilbert series"
            )));
        }
        Ok(BettiVector::new(
            coeffs[..=m].iter().map(|&c| c as u64).collect(),
        ))
    }

    /// `∏ b_j / ∏ a_i`, the total dimension of the cohomology for `r = q`;
    /// errors when the ratio is not an integer.
    pub fn total_dimension(&self) -> Result<u64> {
        if self.q() != self.r() {
            return Err(Error::Unsupported("total dimension needs r = q".into()));
        }
        let num: u64 = self.b.iter().map(|&x| x as u64).product();
        let den: u64 = self.a.iter().map(|&x| x as u64).product();
        if !num.is_multiple_of(den) {
            return Err(Error::InvalidTuple(format!(
                "{self}: total dimension {num}/{den} is not an integer"
            )));
        }
        Ok(num / den)
    }

    /// Arithmetic vanishing of the odd Betti numbers of a compact Kähler
    /// `n`-fold with these exponents: `Σ a_i >= n − 3` or `Σ b_j >= 2n − 2`.
    /// With `kahler_bound = false` the weaker general-elliptic bounds
    /// `Σ a_i >= n − 2` or `Σ b_j >= 2n − 1` are used instead.
    pub fn odd_betti_forced_zero(&self, n: u32, kahler_bound: bool) -> bool {
        let (a_cut, b_cut) = if kahler_bound {
            (n as i64 - 3, 2 * n as i64 - 2)
        } else {
            (n as i64 - 2, 2 * n as i64 - 1)
        };
        self.sum_a() as i64 >= a_cut || self.sum_b() as i64 >= b_cut
    }

    /// Cohomology generated in degree 2 forces every even generator into
    /// degree 2 (each closed generator is indecomposable).
    pub fn generated_in_degree_two(&self) -> bool {
        self.a.iter().all(|&x| x == 1)
    }

    /// Ascending copies for display.
    pub fn a_ascending(&self) -> Vec<u32> {
        let mut v = self.a.clone();
        v.sort_unstable();
        v
    }

    pub fn b_ascending(&self) -> Vec<u32> {
        let mut v = self.b.clone();
        v.sort_unstable();
        v
    }

    fn canonical_key(&self) -> (usize, Vec<u32>, Vec<u32>) {
        (self.q(), self.a_ascending(), self.b_ascending())
    }
}

impl std::fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt_list = |v: Vec<u32>| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "a=[{}] b=[{}]",
            fmt_list(self.a_ascending()),
            fmt_list(self.b_ascending())
        )
    }
}

/// Can `target` be written as `Σ c_i v_i` with `c_i >= 0` and `Σ c_i >= 2`?
fn decomposable_sum(target: u32, values: &[u32]) -> bool {
    // reachable[s] = maximal number of summands achieving sum s
    let t = target as usize;
    let mut best = vec![-1i32; t + 1];
    best[0] = 0;
    for s in 0..=t {
        if best[s] < 0 {
            continue;
        }
        for &v in values {
            let next = s + v as usize;
            if next <= t && best[next] < best[s] + 1 {
                best[next] = best[s] + 1;
            }
        }
    }
    best[t] >= 2
}

/// Descending lists of the given length with entries in `lo..=hi`.
fn descending_lists(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let cap = cur.last().copied().unwrap_or(hi);
        for v in (lo..=cap).rev() {
            cur.push(v);
            go(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Descending lists with a prescribed sum, entries in `lo..=hi`.
fn descending_lists_with_sum(len: usize, lo: u32, hi: u32, sum: u32) -> Vec<Vec<u32>> {
    fn go(
        left: usize,
        lo: u32,
        cap: u32,
        remaining: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if remaining < left as u32 * lo || remaining > left as u32 * cap {
            return;
        }
        for v in (lo..=cap.min(remaining)).rev() {
            cur.push(v);
            go(left - 1, lo, v, remaining - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if sum == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(len, lo, hi, sum, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive enumeration of exponent tuples at formal dimension `m`,
/// subject to the Friedlander–Halperin constraints, a degree-2 generator
/// (nonzero `H^2`, the Kähler class) and realizability; `equal_ranks`
/// restricts to `r = q` (vanishing odd Betti numbers). The search space is
/// finite: `a_i <= m/2` and `b_j <= m`.
pub fn enumerate(m: u32, equal_ranks: bool) -> Vec<ExponentTuple> {
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let max_q = (m / 2) as usize;
    for q in 1..=max_q {
        let ranks: Vec<usize> = if equal_ranks {
            vec![q]
        } else {
            // Σ(2b_j − 1) <= 2m − 1 with b_j >= 2 bounds r by (2m−1)/3
            (q..=((2 * m as usize - 1) / 3))
                .filter(|r| (r - q) % 2 == 0)
                .collect()
        };
        for a in descending_lists(q, 1, m / 2) {
            let sum_a: u32 = a.iter().sum();
            if 2 * sum_a > m {
                continue;
            }
            for &r in &ranks {
                // the dimension formula pins the b-sum:
                // m = 2(Σb − Σa) − (r − q)
                let double_sum_b = m as i64 + (r as i64 - q as i64) + 2 * sum_a as i64;
                if double_sum_b % 2 != 0 || double_sum_b < 0 {
                    continue;
                }
                for b in descending_lists_with_sum(r, 2, m, (double_sum_b / 2) as u32) {
                    let Ok(t) = ExponentTuple::new(a.clone(), b) else {
                        continue;
                    };
                    if t.satisfies_constraints(m)
                        && t.has_degree_two_generator()
                        && t.is_realizable()
                    {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort_by_key(|t| t.canonical_key());
    out.dedup();
    out
}

/// Solution record for the boundary case of the largest odd degree with
/// closed generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaSolution {
    pub n: u32,
    pub q: usize,
    pub r: usize,
    pub tuple: ExponentTuple,
}

/// Solve the boundary constraint system `q = 1`, `a_1 = 1`, `r = 3`,
/// `b_1 = b_2 = (n−1)/2`, `b_3 = n − 2` together with the formal dimension
/// equation `m = 2n`. The solution is unique; the scan asserts that.
pub fn solve_lambda_equality() -> LambdaSolution {
    let mut solutions = Vec::new();
    // b_j >= 2 needs (n-1)/2 >= 2, and (n-1)/2 must be an integer, so scan
    // the odd n from 5 up
    for n in (5u32..=99).step_by(2) {
        let half = (n - 1) / 2;
        let Ok(tuple) = ExponentTuple::new(vec![1], vec![half, half, n - 2]) else {
            continue;
        };
        if tuple.formal_dimension().map(|m| m == 2 * n).unwrap_or(false) {
            solutions.push(LambdaSolution {
                n,
                q: 1,
                r: 3,
                tuple,
            });
        }
    }
    assert_eq!(solutions.len(), 1, "the boundary system has a unique solution");
    solutions.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: &[u32], b: &[u32]) -> ExponentTuple {
        ExponentTuple::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn formal_dimension_formula() {
        assert_eq!(t(&[1, 2], &[3, 4]).formal_dimension().unwrap(), 8);
        assert_eq!(t(&[1], &[2, 2, 2]).formal_dimension().unwrap(), 8);
        assert_eq!(t(&[1], &[2]).formal_dimension().unwrap(), 2);
    }

    #[test]
    fn constraint_checks() {
        assert!(t(&[1, 3], &[2, 6]).satisfies_constraints(8));
        assert!(!t(&[1], &[2]).satisfies_constraints(8));
        assert!(t(&[1, 1, 1, 1], &[2, 2, 2, 2]).satisfies_constraints(8));
    }

    #[test]
    fn enumeration_at_dimension_eight_matches_the_table() {
        let tuples = enumerate(8, true);
        let printed: Vec<String> = tuples.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            printed,
            vec![
                "a=[1] b=[5]",
                "a=[1,1] b=[2,4]",
                "a=[1,1] b=[3,3]",
                "a=[1,2] b=[3,4]",
                "a=[1,3] b=[2,6]",
                "a=[1,1,1] b=[2,2,3]",
                "a=[1,1,2] b=[2,2,4]",
                "a=[1,1,1,1] b=[2,2,2,2]",
            ]
        );
    }

    #[test]
    fn enumeration_at_small_dimensions() {
        let m4: Vec<String> = enumerate(4, true).iter().map(|t| t.to_string()).collect();
        assert_eq!(m4, vec!["a=[1] b=[3]", "a=[1,1] b=[2,2]"]);
        let m2: Vec<String> = enumerate(2, true).iter().map(|t| t.to_string()).collect();
        assert_eq!(m2, vec!["a=[1] b=[2]"]);
    }

    #[test]
    fn realizability_rules_out_forced_zero_divisors() {
        // passes every Friedlander–Halperin inequality at m = 8, but the
        // weight-4 variable admits no decomposable form of degree 4 or 10
        // once paired with the b-exponent 2
        let bad = t(&[1, 2], &[2, 5]);
        assert!(bad.satisfies_constraints(8));
        assert!(!bad.is_realizable());
        assert!(t(&[1, 2], &[3, 4]).is_realizable());
    }

    #[test]
    fn hilbert_series_values() {
        assert_eq!(
            t(&[1, 1], &[2, 4]).hilbert_series().unwrap().even_entries(),
            vec![1, 2, 2, 2, 1]
        );
        assert_eq!(
            t(&[1, 1], &[3, 3]).hilbert_series().unwrap().even_entries(),
            vec![1, 2, 3, 2, 1]
        );
        assert_eq!(
            t(&[1, 3], &[2, 6]).hilbert_series().unwrap().even_entries(),
            vec![1, 1, 0, 1, 1]
        );
    }

    #[test]
    fn total_dimensions() {
        assert_eq!(t(&[1, 1, 1], &[2, 2, 3]).total_dimension().unwrap(), 12);
        assert_eq!(t(&[1], &[5]).total_dimension().unwrap(), 5);
        assert_eq!(t(&[1, 2], &[3, 4]).total_dimension().unwrap(), 6);
    }

    #[test]
    fn odd_betti_vanishing_bounds() {
        assert!(t(&[1], &[5]).odd_betti_forced_zero(4, true));
        assert!(t(&[1, 1], &[2, 4]).odd_betti_forced_zero(4, true));
        // boundary case through Σb = 2n − 2
        let boundary = t(&[1], &[2, 2, 2]);
        assert!(boundary.odd_betti_forced_zero(4, true));
        assert!(!boundary.odd_betti_forced_zero(4, false));
    }

    #[test]
    fn degree_two_generation() {
        assert!(t(&[1, 1, 1, 1], &[2, 2, 2, 2]).generated_in_degree_two());
        assert!(!t(&[1, 2], &[3, 4]).generated_in_degree_two());
        assert!(!t(&[1, 1, 2], &[2, 2, 4]).generated_in_degree_two());
    }

    #[test]
    fn degenerate_tuples_are_errors() {
        // negative formal dimension
        assert!(t(&[3], &[2]).formal_dimension().is_err());
        // Hilbert series needs r = q
        assert!(t(&[1], &[2, 2, 2]).hilbert_series().is_err());
        assert!(ExponentTuple::new(vec![0], vec![2]).is_err());
        assert!(ExponentTuple::new(vec![1], vec![1]).is_err());
    }

    #[test]
    fn lambda_equality_has_the_unique_solution() {
        let sol = solve_lambda_equality();
        assert_eq!(sol.n, 5);
        assert_eq!((sol.q, sol.r), (1, 3));
        assert_eq!(sol.tuple.to_string(), "a=[1] b=[2,2,3]");
        assert_eq!(sol.tuple.formal_dimension().unwrap(), 10);
        assert_eq!(sol.tuple.sum_b(), 2 * sol.n - 3);
    }
}
