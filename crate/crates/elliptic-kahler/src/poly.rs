//! Multivariate polynomials over `Q` with per-variable weighted degrees.
//!
//! Variables carry positive *even* weights (the topological degrees of the
//! even generators they stand for), so every graded piece lives in an even
//! degree. Coefficients are arbitrary-precision rationals; no floating point
//! enters anywhere in this module.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exact rational scalar. Kept in lowest terms with a positive denominator
/// by construction.
pub type Rational = num_rational::BigRational;

/// Shorthand for building small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Monomial order tag. All uses in this crate are order-independent facts
/// (ideal membership, finiteness, Hilbert functions), so a single graded
/// order suffices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded (by weighted degree) reverse lexicographic.
    GrevLex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

/// A polynomial ring `Q[x_1, ..., x_k]` with weighted variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<Variable>,
    order: MonomialOrder,
}

/// Rings are shared by reference; equality of rings is structural.
pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    /// Build a ring from `(name, weight)` pairs. Weights must be positive
    /// even integers and names unique; the weight-1 convention is rejected.
    pub fn new(vars: &[(&str, u32)]) -> Result<RingRef> {
        let mut seen = std::collections::BTreeSet::new();
        for (name, weight) in vars {
            if *weight == 0 || weight % 2 != 0 {
                return Err(Error::InvalidRing(format!(
                    "variable `{name}` has weight {weight}; weights must be positive even integers"
                )));
            }
            if !seen.insert(name.to_string()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(PolyRing {
            vars: vars
                .iter()
                .map(|(name, weight)| Variable {
                    name: name.to_string(),
                    weight: *weight,
                })
                .collect(),
            order: MonomialOrder::GrevLex,
        }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn weight(&self, index: usize) -> u32 {
        self.vars[index].weight
    }

    pub fn weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.vars)
            .map(|(e, v)| e * v.weight)
            .sum()
    }

    /// Term-order comparison: `Greater` means `a` is the larger monomial.
    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        let (da, db) = (self.weighted_degree(a), self.weighted_degree(b));
        match da.cmp(&db) {
            Ordering::Equal => {
                // reverse lexicographic tie-break: the monomial whose last
                // differing exponent is smaller is the larger one
                for i in (0..self.vars.len()).rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            other => other,
        }
    }

    /// All exponent vectors of the given weighted degree, lexicographically
    /// ordered.
    pub fn monomials_of_weighted_degree(&self, degree: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.vars.len()];
        self.enumerate_weighted(0, degree, &mut current, &mut out);
        out
    }

    fn enumerate_weighted(
        &self,
        index: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if index == self.vars.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let w = self.vars[index].weight;
        for e in 0..=remaining / w {
            current[index] = e;
            self.enumerate_weighted(index + 1, remaining - e * w, current, out);
        }
        current[index] = 0;
    }

    /// All exponent vectors of total degree `k` (exponent sum, ignoring
    /// weights), lexicographically ordered.
    pub fn monomials_of_total_degree(&self, k: u32) -> Vec<Vec<u32>> {
        fn go(nvars: usize, index: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if index + 1 == nvars {
                cur[index] = remaining;
                out.push(cur.clone());
                cur[index] = 0;
                return;
            }
            for e in 0..=remaining {
                cur[index] = e;
                go(nvars, index + 1, remaining - e, cur, out);
            }
            cur[index] = 0;
        }
        let mut out = Vec::new();
        if self.vars.is_empty() {
            if k == 0 {
                out.push(Vec::new());
            }
            return out;
        }
        let mut cur = vec![0u32; self.vars.len()];
        go(self.vars.len(), 0, k, &mut cur, &mut out);
        out
    }
}

/// A polynomial: terms sorted descending in the ring's monomial order, with
/// no zero coefficients stored.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Vec<u32>, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        Self::from_terms(ring, vec![(vec![0; ring.num_vars()], c)])
    }

    pub fn variable(ring: &RingRef, index: usize) -> Self {
        let mut exps = vec![0; ring.num_vars()];
        exps[index] = 1;
        Self::from_terms(ring, vec![(exps, Rational::one())])
    }

    /// Collect terms, dropping zeros and sorting descending in the ring order.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), ring.num_vars(), "exponent vector length mismatch");
            if coeff.is_zero() {
                continue;
            }
            let entry = map.entry(exps).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        let mut terms: Vec<(Vec<u32>, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| ring.cmp_monomials(b, a));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Vec<u32>, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in the ring's order.
    pub fn leading(&self) -> Option<(&[u32], &Rational)> {
        self.terms.first().map(|(e, c)| (e.as_slice(), c))
    }

    /// Maximal weighted degree among terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .map(|(e, _)| self.ring.weighted_degree(e))
            .max()
    }

    /// True for the zero polynomial and whenever all terms share one
    /// weighted degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(e, _)| self.ring.weighted_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_terms(
            &self.ring,
            self.terms.iter().chain(other.terms.iter()).cloned(),
        ))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = map.entry(exps).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        Ok(Self::from_terms(&self.ring, map))
    }

    /// Multiply by a single term `coeff * x^exps`.
    pub fn mul_term(&self, exps: &[u32], coeff: &Rational) -> Polynomial {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(e, c)| {
                (
                    e.iter().zip(exps).map(|(x, y)| x + y).collect(),
                    c * coeff,
                )
            }),
        )
    }

    pub fn scale(&self, coeff: &Rational) -> Polynomial {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(e, c)| (e.clone(), c * coeff)),
        )
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(&rhs.scale(&-Rational::one()))
            .expect("ring mismatch in -")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

pub(crate) fn format_coeff_prefix(c: &Rational, first: bool, out: &mut String) {
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
}

pub(crate) fn format_term(
    c: &Rational,
    factors: &[(String, u32)],
    first: bool,
    out: &mut String,
) {
    format_coeff_prefix(c, first, out);
    let abs = c.abs();
    if factors.is_empty() {
        out.push_str(&abs.to_string());
        return;
    }
    let mut need_star = false;
    if !abs.is_one() {
        out.push_str(&abs.to_string());
        need_star = true;
    }
    for (name, e) in factors {
        if need_star {
            out.push('*');
        }
        out.push_str(name);
        if *e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
        need_star = true;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            let factors: Vec<(String, u32)> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| (self.ring.vars[v].name.clone(), *e))
                .collect();
            format_term(coeff, &factors, i == 0, &mut s);
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vars() -> RingRef {
        PolyRing::new(&[("x", 2), ("y", 2)]).unwrap()
    }

    #[test]
    fn rejects_odd_and_zero_weights() {
        assert!(PolyRing::new(&[("x", 1)]).is_err());
        assert!(PolyRing::new(&[("x", 0)]).is_err());
        assert!(PolyRing::new(&[("x", 2), ("x", 4)]).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let ring = two_vars();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let prod = (&(&x + &y)) * (&(&x - &y));
        let expected = &x.pow(2) - &y.pow(2);
        assert_eq!(prod, expected);
    }

    #[test]
    fn one_is_neutral() {
        let ring = two_vars();
        let x = Polynomial::variable(&ring, 0);
        let p = &x.pow(3) - &Polynomial::constant(&ring, rat(3, 2));
        assert_eq!(Polynomial::one(&ring).checked_mul(&p).unwrap(), p);
    }

    #[test]
    fn weighted_degrees_add() {
        let ring = PolyRing::new(&[("w", 2), ("x", 2)]).unwrap();
        let w = Polynomial::variable(&ring, 0);
        let x = Polynomial::variable(&ring, 1);
        let p = w.pow(2).checked_mul(&x.pow(2)).unwrap();
        assert_eq!(p.degree(), Some(8));
        assert!(p.is_homogeneous());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = two_vars();
        let r2 = PolyRing::new(&[("x", 2), ("y", 4)]).unwrap();
        let p = Polynomial::variable(&r1, 0);
        let q = Polynomial::variable(&r2, 0);
        assert!(matches!(p.checked_mul(&q), Err(Error::RingMismatch)));
    }

    #[test]
    fn display_matches_cli_syntax() {
        let ring = PolyRing::new(&[("w", 2), ("x", 2)]).unwrap();
        let w = Polynomial::variable(&ring, 0);
        let x = Polynomial::variable(&ring, 1);
        let p = &w.pow(2).mul_term(&[0, 1], &rat(3, 2)) - &x.pow(3);
        assert_eq!(p.to_string(), "3/2*w^2*x - x^3");
    }

    #[test]
    fn grevlex_orders_by_degree_first() {
        let ring = two_vars();
        // x^2 vs y^3: degree decides
        assert_eq!(ring.cmp_monomials(&[2, 0], &[0, 3]), Ordering::Less);
        // equal degree: smaller last exponent wins
        assert_eq!(ring.cmp_monomials(&[2, 0], &[0, 2]), Ordering::Greater);
        assert_eq!(ring.cmp_monomials(&[1, 1], &[0, 2]), Ordering::Greater);
    }
}
