//! Minimal Sullivan algebras `(∧V, d)`: free graded-commutative algebras on
//! ordered generators of degree ≥ 2, with a differential sending each
//! generator into the subalgebra on strictly earlier generators.
//!
//! Elements are sparse sums of monomials in the generators; odd generators
//! square to zero and graded commutativity is enforced by the normalized
//! term representation. Everything is exact.

mod cohomology;
mod formality;
mod model;

pub use formality::FormalityWitness;
pub use model::minimal_model_from_ring;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::groebner::{buchberger_in, GroebnerBasis};
use crate::poly::{format_term, Polynomial, Rational, RingRef};
use crate::{BettiVector, Error, PolyRing, Result};

/// A generator of a Sullivan algebra. Parity is determined by the degree;
/// the optional bidegree `(i, j)` must satisfy `i + j = degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SullivanGenerator {
    pub name: String,
    pub degree: u32,
    pub bidegree: Option<(u32, u32)>,
}

impl SullivanGenerator {
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self> {
        let name = name.into();
        if degree < 2 {
            return Err(Error::Precondition(format!(
                "generator `{name}` has degree {degree}; simply connected algebras need degree >= 2"
            )));
        }
        Ok(SullivanGenerator {
            name,
            degree,
            bidegree: None,
        })
    }

    pub fn with_bidegree(mut self, i: u32, j: u32) -> Result<Self> {
        if i + j != self.degree {
            return Err(Error::Precondition(format!(
                "bidegree ({i},{j}) of `{}` does not sum to its degree {}",
                self.name, self.degree
            )));
        }
        self.bidegree = Some((i, j));
        Ok(self)
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// An element of `∧V`: a finite sum of monomials in the generators, keyed by
/// exponent vectors (odd exponents are 0 or 1).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgElement {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl AlgElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut map = BTreeMap::new();
        for (exps, coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            let entry = map.entry(exps).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        AlgElement { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        Self::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> AlgElement {
        Self::from_terms(self.terms.iter().map(|(e, k)| (e.clone(), k * c)))
    }
}

/// One violation found by [`SullivanAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `d(g)` uses a generator that is not strictly earlier than `g`.
    Ordering { generator: String, uses: String },
    /// Some monomial of `d(g)` does not have degree `|g| + 1`.
    DegreeMismatch {
        generator: String,
        expected: u32,
        found: u32,
    },
    /// `d(g)` has a linear term, contradicting `d(V) ⊂ ∧^{≥2}V`.
    Minimality { generator: String },
    /// `d(d(g)) ≠ 0`.
    DSquare { generator: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Ordering { generator, uses } => write!(
                f,
                "d({generator}) uses `{uses}`, which is not an earlier generator"
            ),
            Violation::DegreeMismatch {
                generator,
                expected,
                found,
            } => write!(
                f,
                "d({generator}) has a term of degree {found}, expected {expected}"
            ),
            Violation::Minimality { generator } => {
                write!(f, "d({generator}) has a linear term: the algebra is not minimal")
            }
            Violation::DSquare { generator } => write!(f, "d(d({generator})) is nonzero"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

const DEFAULT_BASIS_CAP: usize = 200_000;

/// A Sullivan algebra `(∧V, d)` on ordered generators, with each
/// differential stored as an element of the full algebra.
#[derive(Debug, Clone)]
pub struct SullivanAlgebra {
    generators: Vec<SullivanGenerator>,
    differentials: Vec<AlgElement>,
    truncation_bound: u32,
    basis_cap: usize,
}

impl SullivanAlgebra {
    pub fn new(generators: Vec<SullivanGenerator>) -> Result<Self> {
        let mut names = std::collections::BTreeSet::new();
        for g in &generators {
            if !names.insert(g.name.clone()) {
                return Err(Error::Precondition(format!("duplicate generator `{}`", g.name)));
            }
        }
        let n = generators.len();
        let mut alg = SullivanAlgebra {
            generators,
            differentials: vec![AlgElement::zero(); n],
            truncation_bound: 0,
            basis_cap: DEFAULT_BASIS_CAP,
        };
        alg.truncation_bound = alg.default_truncation();
        Ok(alg)
    }

    fn default_truncation(&self) -> u32 {
        2 * self.generators.iter().map(|g| g.degree).sum::<u32>() + 2
    }

    pub fn generators(&self) -> &[SullivanGenerator] {
        &self.generators
    }

    pub fn differential(&self, index: usize) -> &AlgElement {
        &self.differentials[index]
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn truncation_bound(&self) -> u32 {
        self.truncation_bound
    }

    pub fn set_truncation_bound(&mut self, bound: u32) {
        self.truncation_bound = bound;
    }

    pub fn set_basis_cap(&mut self, cap: usize) {
        self.basis_cap = cap;
    }

    /// Append a generator together with its differential.
    pub fn push_generator(&mut self, gen: SullivanGenerator, d: AlgElement) -> Result<usize> {
        if self.generator_index(&gen.name).is_some() {
            return Err(Error::Precondition(format!("duplicate generator `{}`", gen.name)));
        }
        self.generators.push(gen);
        // widen every exponent vector, including the incoming differential's
        // (by the ordering condition it cannot mention the new generator)
        let width = self.generators.len();
        let widen = |el: &AlgElement| {
            AlgElement::from_terms(el.terms().map(|(e, c)| {
                let mut e = e.clone();
                e.resize(width, 0);
                (e, c.clone())
            }))
        };
        self.differentials = self.differentials.iter().map(widen).collect();
        self.differentials.push(widen(&d));
        self.truncation_bound = self.truncation_bound.max(self.default_truncation());
        Ok(self.generators.len() - 1)
    }

    pub fn set_differential(&mut self, name: &str, d: AlgElement) -> Result<()> {
        let idx = self
            .generator_index(name)
            .ok_or_else(|| Error::Precondition(format!("unknown generator `{name}`")))?;
        self.differentials[idx] = d;
        Ok(())
    }

    /// The generator as an element.
    pub fn generator_element(&self, index: usize) -> AlgElement {
        let mut exps = vec![0; self.generators.len()];
        exps[index] = 1;
        AlgElement::from_terms(vec![(exps, Rational::one())])
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Degree of a homogeneous element; `None` for zero or inhomogeneous.
    pub fn element_degree(&self, el: &AlgElement) -> Option<u32> {
        let mut degs = el.terms().map(|(e, _)| self.monomial_degree(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Product of two monomials with the Koszul sign; `None` when an odd
    /// generator repeats.
    fn mul_monomials(&self, a: &[u32], b: &[u32]) -> Option<(Vec<u32>, i32)> {
        let n = self.generators.len();
        let mut out = vec![0u32; n];
        for i in 0..n {
            out[i] = a[i] + b[i];
            if self.generators[i].is_odd() && out[i] > 1 {
                return None;
            }
        }
        // sign: move each odd factor of `b` left past the odd factors of `a`
        // with larger index
        let mut inversions = 0u32;
        for (i, bi) in b.iter().enumerate() {
            if *bi == 0 || !self.generators[i].is_odd() {
                continue;
            }
            for (j, aj) in a.iter().enumerate().skip(i + 1) {
                if *aj > 0 && self.generators[j].is_odd() {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((out, sign))
    }

    pub fn mul_elements(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                if let Some((exps, sign)) = self.mul_monomials(ea, eb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    let entry = acc.entry(exps).or_insert_with(Rational::zero);
                    *entry += c;
                }
            }
        }
        AlgElement::from_terms(acc)
    }

    fn differential_of_monomial(&self, exps: &[u32]) -> AlgElement {
        let mut acc = AlgElement::zero();
        let mut prefix_degree = 0u32;
        for (k, &e) in exps.iter().enumerate() {
            if e == 0 {
                prefix_degree += e * self.generators[k].degree;
                continue;
            }
            let dgk = &self.differentials[k];
            if !dgk.is_zero() {
                // d(prefix * g^e * suffix) picks up the Leibniz sign of the
                // prefix and the factor e from d(g^e) = e g^{e-1} dg
                let sign = if prefix_degree.is_multiple_of(2) {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                let coeff = sign * Rational::from_integer(e.into());
                let mut head = exps.to_vec();
                for h in head.iter_mut().skip(k) {
                    *h = 0;
                }
                head[k] = e - 1;
                let mut tail = vec![0u32; exps.len()];
                for (i, t) in tail.iter_mut().enumerate().skip(k + 1) {
                    *t = exps[i];
                }
                let head_el = AlgElement::from_terms(vec![(head, coeff)]);
                let term = self.mul_elements(&self.mul_elements(&head_el, dgk), &AlgElement::from_terms(vec![(tail, Rational::one())]));
                acc = acc.add(&term);
            }
            prefix_degree += e * self.generators[k].degree;
        }
        acc
    }

    /// The differential extended to an arbitrary element.
    pub fn d(&self, el: &AlgElement) -> AlgElement {
        let mut acc = AlgElement::zero();
        for (exps, coeff) in el.terms() {
            acc = acc.add(&self.differential_of_monomial(exps).scale(coeff));
        }
        acc
    }

    /// Monomial basis of `∧V` in a fixed degree: exponent vectors sorted
    /// lexicographically, odd exponents in `{0, 1}`.
    pub fn monomial_basis(&self, degree: u32) -> Result<Vec<Vec<u32>>> {
        fn go(
            gens: &[SullivanGenerator],
            index: usize,
            remaining: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
            cap: usize,
            degree: u32,
        ) -> Result<()> {
            if index == gens.len() {
                if remaining == 0 {
                    if out.len() >= cap {
                        return Err(Error::BasisCap {
                            degree,
                            size: out.len() + 1,
                            cap,
                        });
                    }
                    out.push(cur.clone());
                }
                return Ok(());
            }
            let g = &gens[index];
            let max = if g.is_odd() { 1 } else { remaining / g.degree };
            for e in 0..=max.min(remaining / g.degree) {
                cur[index] = e;
                go(gens, index + 1, remaining - e * g.degree, cur, out, cap, degree)?;
            }
            cur[index] = 0;
            Ok(())
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.generators.len()];
        if degree == 0 {
            out.push(cur);
            return Ok(out);
        }
        go(
            &self.generators,
            0,
            degree,
            &mut cur,
            &mut out,
            self.basis_cap,
            degree,
        )?;
        Ok(out)
    }

    /// Check the Sullivan conditions: ordering, homogeneity of differentials,
    /// minimality and `d ∘ d = 0`. The report lists every violation found.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (i, g) in self.generators.iter().enumerate() {
            let d = &self.differentials[i];
            if d.is_zero() {
                continue;
            }
            for (exps, _) in d.terms() {
                if let Some(offender) = exps
                    .iter()
                    .enumerate()
                    .position(|(j, e)| *e > 0 && j >= i)
                {
                    report.violations.push(Violation::Ordering {
                        generator: g.name.clone(),
                        uses: self.generators[offender].name.clone(),
                    });
                    break;
                }
            }
            let expected = g.degree + 1;
            for (exps, _) in d.terms() {
                let found = self.monomial_degree(exps);
                if found != expected {
                    report.violations.push(Violation::DegreeMismatch {
                        generator: g.name.clone(),
                        expected,
                        found,
                    });
                    break;
                }
            }
            if d.terms().any(|(exps, _)| exps.iter().sum::<u32>() < 2) {
                report.violations.push(Violation::Minimality {
                    generator: g.name.clone(),
                });
            }
            if !self.d(d).is_zero() {
                report.violations.push(Violation::DSquare {
                    generator: g.name.clone(),
                });
            }
        }
        report
    }

    /// Error out unless [`validate`](Self::validate) is clean.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidAlgebra(report))
        }
    }

    pub fn is_pure(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            if g.is_odd() {
                self.differentials[i].terms().all(|(exps, _)| {
                    exps.iter()
                        .enumerate()
                        .all(|(j, e)| *e == 0 || !self.generators[j].is_odd())
                })
            } else {
                self.differentials[i].is_zero()
            }
        })
    }

    /// The associated pure algebra: differentials of even generators are
    /// zeroed and odd differentials are projected to the even subalgebra.
    pub fn associated_pure(&self) -> SullivanAlgebra {
        let mut out = self.clone();
        for (i, g) in self.generators.iter().enumerate() {
            if g.is_odd() {
                out.differentials[i] = AlgElement::from_terms(
                    self.differentials[i]
                        .terms()
                        .filter(|(exps, _)| {
                            exps.iter()
                                .enumerate()
                                .all(|(j, e)| *e == 0 || !self.generators[j].is_odd())
                        })
                        .map(|(e, c)| (e.clone(), c.clone())),
                );
            } else {
                out.differentials[i] = AlgElement::zero();
            }
        }
        out
    }

    /// Present the cohomology of a pure algebra with equally many even and
    /// odd generators as a quotient of the polynomial ring on the even part
    /// by the odd differentials.
    pub fn pure_elliptic_presentation(&self) -> Result<RingPresentation> {
        if !self.is_pure() {
            return Err(Error::NotPure(
                "pure_elliptic_presentation needs a pure algebra; take associated_pure first".into(),
            ));
        }
        let evens: Vec<usize> = (0..self.generators.len())
            .filter(|i| !self.generators[*i].is_odd())
            .collect();
        let odds: Vec<usize> = (0..self.generators.len())
            .filter(|i| self.generators[*i].is_odd())
            .collect();
        if evens.len() != odds.len() {
            return Err(Error::UnequalCounts {
                even: evens.len(),
                odd: odds.len(),
            });
        }
        let vars: Vec<(&str, u32)> = evens
            .iter()
            .map(|&i| (self.generators[i].name.as_str(), self.generators[i].degree))
            .collect();
        let ring = PolyRing::new(&vars)?;
        let relations: Vec<Polynomial> = odds
            .iter()
            .map(|&i| self.element_to_polynomial(&self.differentials[i], &ring, &evens))
            .collect::<Result<_>>()?;
        let distinguished = evens
            .iter()
            .find(|&&i| self.generators[i].degree == 2)
            .map(|&i| self.generators[i].name.clone());
        RingPresentation::new(ring, relations, distinguished)
    }

    /// Convert an element of the even subalgebra into a polynomial in the
    /// given ring, `evens[k]` being the generator index of ring variable `k`.
    pub(crate) fn element_to_polynomial(
        &self,
        el: &AlgElement,
        ring: &RingRef,
        evens: &[usize],
    ) -> Result<Polynomial> {
        let mut terms = Vec::new();
        for (exps, coeff) in el.terms() {
            let mut ring_exps = vec![0u32; evens.len()];
            for (j, e) in exps.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match evens.iter().position(|&idx| idx == j) {
                    Some(k) => ring_exps[k] = *e,
                    None => {
                        return Err(Error::NotPure(format!(
                            "element contains the odd generator `{}`",
                            self.generators[j].name
                        )))
                    }
                }
            }
            terms.push((ring_exps, coeff.clone()));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Build the pure algebra attached to a presentation: one even generator
    /// per ring variable, one odd generator per relation with differential
    /// that relation.
    pub fn pure_model(pres: &RingPresentation) -> Result<SullivanAlgebra> {
        let mut gens = Vec::new();
        for v in pres.ring.variables() {
            gens.push(SullivanGenerator::new(v.name.clone(), v.weight)?);
        }
        let n_even = gens.len();
        let mut diffs = Vec::new();
        for (j, rel) in pres.relations.iter().enumerate() {
            let deg = rel.degree().ok_or_else(|| {
                Error::Precondition("zero relation in a pure model".into())
            })?;
            if deg < 4 {
                return Err(Error::Precondition(format!(
                    "relation `{rel}` has degree {deg} < 4; its odd generator would break simple connectivity"
                )));
            }
            gens.push(SullivanGenerator::new(format!("y{}", j + 1), deg - 1)?);
            diffs.push((n_even + j, rel));
        }
        let total = gens.len();
        let mut alg = SullivanAlgebra::new(gens)?;
        for (idx, rel) in diffs {
            let el = AlgElement::from_terms(rel.terms().iter().map(|(exps, c)| {
                let mut full = vec![0u32; total];
                full[..exps.len()].copy_from_slice(exps);
                (full, c.clone())
            }));
            alg.differentials[idx] = el;
        }
        alg.validated()
    }

    /// Render an element with generator names, in the CLI expression syntax.
    pub fn format_element(&self, el: &AlgElement) -> String {
        if el.is_zero() {
            return "0".into();
        }
        // print higher-degree monomials last, ties by exponent vector
        let mut terms: Vec<(&Vec<u32>, &Rational)> = el.terms().collect();
        terms.sort_by_key(|(e, _)| (self.monomial_degree(e), (*e).clone()));
        let mut s = String::new();
        for (i, (exps, coeff)) in terms.iter().enumerate() {
            let factors: Vec<(String, u32)> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(j, e)| (self.generators[j].name.clone(), *e))
                .collect();
            format_term(coeff, &factors, i == 0, &mut s);
        }
        s
    }

    /// Print the algebra in the `gen`/`d` file format.
    pub fn to_cdga_string(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            match g.bidegree {
                Some((i, j)) => {
                    out.push_str(&format!("gen {} {} bidegree {} {}\n", g.name, g.degree, i, j))
                }
                None => out.push_str(&format!("gen {} {}\n", g.name, g.degree)),
            }
        }
        for (i, g) in self.generators.iter().enumerate() {
            let d = &self.differentials[i];
            if !d.is_zero() {
                out.push_str(&format!("d {} = {}\n", g.name, self.format_element(d)));
            }
        }
        out
    }
}

/// A graded ring presented as a quotient of a weighted polynomial ring by
/// homogeneous relations, with an optional distinguished degree-2 class.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    pub ring: RingRef,
    pub relations: Vec<Polynomial>,
    pub distinguished_class: Option<String>,
}

impl RingPresentation {
    pub fn new(
        ring: RingRef,
        relations: Vec<Polynomial>,
        distinguished_class: Option<String>,
    ) -> Result<Self> {
        for r in &relations {
            if *r.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !r.is_homogeneous() {
                return Err(Error::NotHomogeneous(r.to_string()));
            }
        }
        if let Some(name) = &distinguished_class {
            match ring.var_index(name) {
                Some(i) if ring.weight(i) == 2 => {}
                _ => {
                    return Err(Error::Precondition(format!(
                        "distinguished class `{name}` is not a degree-2 variable"
                    )))
                }
            }
        }
        Ok(RingPresentation {
            ring,
            relations,
            distinguished_class,
        })
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger_in(&self.ring, &self.relations)
    }

    /// A square presentation is elliptic iff the relations form a regular
    /// sequence, i.e. the quotient is finite dimensional.
    pub fn is_elliptic(&self) -> Result<bool> {
        crate::groebner::is_regular_sequence(&self.relations)
    }

    pub fn hilbert_function(&self, degree: i64) -> Result<u64> {
        Ok(self.groebner()?.hilbert_function(degree))
    }

    /// Hilbert function per degree, as a Betti vector up to `up_to`.
    pub fn hilbert_vector(&self, up_to: u32) -> Result<BettiVector> {
        let gb = self.groebner()?;
        Ok(BettiVector::new(
            (0..=up_to as i64).map(|d| gb.hilbert_function(d)).collect(),
        ))
    }

    /// Top nonzero degree of a finite-dimensional quotient.
    pub fn formal_dimension(&self) -> Result<u32> {
        self.groebner()?.socle_degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_cdga;

    fn projective_space_model() -> SullivanAlgebra {
        parse_cdga("gen w 2\ngen y 9\nd y = w^5\n").unwrap()
    }

    fn diamond_c_model() -> SullivanAlgebra {
        parse_cdga("gen w 2\ngen x 2\ngen y 3\ngen z 7\nd y = x^2 + w^2\nd z = w^3*x\n").unwrap()
    }

    #[test]
    fn projective_space_model_is_valid() {
        let alg = projective_space_model();
        assert!(alg.validate().is_valid());
    }

    #[test]
    fn linear_differential_breaks_minimality() {
        // x has degree 4 so that d(y) = x is homogeneous of the right degree
        let mut alg = SullivanAlgebra::new(vec![
            SullivanGenerator::new("x", 4).unwrap(),
            SullivanGenerator::new("y", 3).unwrap(),
        ])
        .unwrap();
        let x = alg.generator_element(0);
        alg.set_differential("y", x).unwrap();
        let report = alg.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Minimality { generator } if generator == "y")));
    }

    #[test]
    fn d_square_violation_is_reported() {
        // d(z) = x*y and d(y) = x^2 give d(d(z)) = x^3 != 0
        let mut alg = SullivanAlgebra::new(vec![
            SullivanGenerator::new("x", 2).unwrap(),
            SullivanGenerator::new("y", 3).unwrap(),
            SullivanGenerator::new("z", 4).unwrap(),
        ])
        .unwrap();
        let x = alg.generator_element(0);
        let y = alg.generator_element(1);
        alg.set_differential("y", alg.mul_elements(&x, &x)).unwrap();
        alg.set_differential("z", alg.mul_elements(&x, &y)).unwrap();
        let report = alg.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DSquare { generator } if generator == "z")));
    }

    #[test]
    fn graded_commutativity_signs() {
        let alg = SullivanAlgebra::new(vec![
            SullivanGenerator::new("y", 3).unwrap(),
            SullivanGenerator::new("z", 3).unwrap(),
        ])
        .unwrap();
        let y = alg.generator_element(0);
        let z = alg.generator_element(1);
        let yz = alg.mul_elements(&y, &z);
        let zy = alg.mul_elements(&z, &y);
        assert_eq!(zy, yz.scale(&-Rational::one()));
        assert!(alg.mul_elements(&y, &y).is_zero());
    }

    #[test]
    fn associated_pure_projects_odd_terms() {
        let text = "gen a 2\ngen x 3\ngen y 3\ngen z 4\nd z = a*x\n";
        let alg = parse_cdga(text).unwrap();
        let pure = alg.associated_pure();
        let zi = pure.generator_index("z").unwrap();
        assert!(pure.differential(zi).is_zero());
        // idempotent and degree-preserving
        let again = pure.associated_pure();
        assert_eq!(again.to_cdga_string(), pure.to_cdga_string());
        assert!(pure.is_pure());
    }

    #[test]
    fn pure_algebra_is_fixed_by_purification() {
        let alg = diamond_c_model();
        assert!(alg.is_pure());
        let pure = alg.associated_pure();
        assert_eq!(pure.to_cdga_string(), alg.to_cdga_string());
    }

    #[test]
    fn presentation_of_the_diamond_c_model() {
        let alg = diamond_c_model();
        let pres = alg.pure_elliptic_presentation().unwrap();
        assert_eq!(pres.ring.num_vars(), 2);
        assert_eq!(pres.relations.len(), 2);
        assert_eq!(pres.relations[0].to_string(), "w^2 + x^2");
        assert_eq!(pres.relations[1].to_string(), "w^3*x");
        assert_eq!(pres.distinguished_class.as_deref(), Some("w"));
        assert!(pres.is_elliptic().unwrap());
    }

    #[test]
    fn presentation_of_projective_space() {
        let alg = projective_space_model();
        let pres = alg.pure_elliptic_presentation().unwrap();
        assert_eq!(pres.relations.len(), 1);
        assert_eq!(pres.relations[0].to_string(), "w^5");
        assert!(pres.is_elliptic().unwrap());
    }

    #[test]
    fn zero_divisor_presentation_is_not_elliptic() {
        let text = "gen w 2\ngen x 2\ngen y 2\ngen z 2\n\
                    gen a 3\ngen b 3\ngen c 3\ngen e 3\n\
                    d a = y^2\nd b = z^2\nd c = x*y - w*y\nd e = x*z - w*z\n";
        let alg = parse_cdga(text).unwrap();
        let pres = alg.pure_elliptic_presentation().unwrap();
        assert!(!pres.is_elliptic().unwrap());
    }

    #[test]
    fn non_pure_input_is_rejected() {
        let text = "gen a 2\ngen x 3\ngen y 3\ngen z 4\nd z = a*x\n";
        let alg = parse_cdga(text).unwrap();
        assert!(matches!(
            alg.pure_elliptic_presentation(),
            Err(Error::NotPure(_))
        ));
    }
}
