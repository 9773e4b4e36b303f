//! Buchberger's algorithm and the ideal-theoretic tests built on it:
//! normal forms, finiteness of the quotient, Hilbert functions of graded
//! quotients, radical containment of powers of the irrelevant ideal, and the
//! regular-sequence criterion for square homogeneous systems.
//!
//! Coefficients are exact rationals throughout; coefficient growth is tame at
//! the scales this crate works at (at most a handful of variables, weighted
//! degree below ~50), so no modular shortcuts are used.

use num_traits::One;

use crate::poly::{Polynomial, Rational, RingRef};
use crate::{Error, Result};

/// A reduced Gröbner basis: generators are monic, pairwise S-polynomials
/// reduce to zero and no generator's leading term is reducible by another.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

fn divides(divisor: &[u32], dividend: &[u32]) -> bool {
    divisor.iter().zip(dividend).all(|(a, b)| a <= b)
}

fn exps_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exps_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Fully reduce `p` modulo `basis`: every term of the result is irreducible
/// by every basis leading term.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let mut work = p.clone();
    let mut reduced: Vec<(Vec<u32>, Rational)> = Vec::new();
    'outer: while let Some((lt, lc)) = work.leading().map(|(e, c)| (e.to_vec(), c.clone())) {
        for g in basis {
            if let Some((glt, glc)) = g.leading() {
                if divides(glt, &lt) {
                    let factor = &lc / glc;
                    work = &work - &g.mul_term(&exps_sub(&lt, glt), &factor);
                    continue 'outer;
                }
            }
        }
        // leading term irreducible: move it to the result and go on with the tail
        reduced.push((lt.clone(), lc.clone()));
        work = &work - &Polynomial::from_terms(&ring, vec![(lt, lc)]);
    }
    Polynomial::from_terms(&ring, reduced)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (flt, flc) = f.leading().expect("nonzero");
    let (glt, glc) = g.leading().expect("nonzero");
    let lcm = exps_lcm(flt, glt);
    let a = f.mul_term(&exps_sub(&lcm, flt), &(Rational::one() / flc));
    let b = g.mul_term(&exps_sub(&lcm, glt), &(Rational::one() / glc));
    &a - &b
}

/// Like [`buchberger`], but with the ring given explicitly so that the empty
/// (or all-zero) ideal is representable.
pub fn buchberger_in(ring: &RingRef, ideal: &[Polynomial]) -> Result<GroebnerBasis> {
    if ideal.iter().any(|p| *p.ring() != *ring) {
        return Err(Error::RingMismatch);
    }
    let nonzero: Vec<Polynomial> = ideal.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(GroebnerBasis {
            ring: ring.clone(),
            generators: Vec::new(),
        });
    }
    buchberger(&nonzero)
}

/// Buchberger's algorithm with the coprimality and chain criteria, followed
/// by reduction to the unique reduced basis. Zero polynomials in the input
/// are dropped; an all-zero input yields the empty basis.
pub fn buchberger(ideal: &[Polynomial]) -> Result<GroebnerBasis> {
    let ring = match ideal.first() {
        Some(p) => p.ring().clone(),
        None => return Err(Error::Precondition("buchberger needs a nonempty input".into())),
    };
    if ideal.iter().any(|p| *p.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let mut basis: Vec<Polynomial> = ideal.iter().filter(|p| !p.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            ring,
            generators: Vec::new(),
        });
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut done: std::collections::BTreeSet<(usize, usize)> = Default::default();
    for i in 0..basis.len() {
        for j in 0..i {
            pending.push((j, i));
        }
    }

    while !pending.is_empty() {
        // normal selection: smallest lcm degree first, ties by index
        let pick = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, (i, j))| {
                let lcm = exps_lcm(
                    basis[*i].leading().unwrap().0,
                    basis[*j].leading().unwrap().0,
                );
                (ring.weighted_degree(&lcm), *i, *j)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pending.swap_remove(pick);
        done.insert((i, j));

        let lt_i = basis[i].leading().unwrap().0;
        let lt_j = basis[j].leading().unwrap().0;
        let lcm = exps_lcm(lt_i, lt_j);

        // coprimality criterion
        if lt_i.iter().zip(lt_j).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion: both companion pairs already treated
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].leading().unwrap().0, &lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let rem = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !rem.is_zero() {
            let new = basis.len();
            basis.push(rem);
            for k in 0..new {
                pending.push((k, new));
            }
        }
    }

    // minimal basis: drop generators whose leading term another divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (li, lj) = (basis[i].leading().unwrap().0, basis[j].leading().unwrap().0);
            if divides(lj, li) && (li != lj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();

    // reduced basis: monic generators, tails irreducible by the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let mut g = normal_form(&minimal[i], &others);
        let lc = g.leading().unwrap().1.clone();
        g = g.scale(&(Rational::one() / lc));
        reduced.push(g);
    }
    reduced.sort_by(|a, b| ring.cmp_monomials(a.leading().unwrap().0, b.leading().unwrap().0));

    Ok(GroebnerBasis {
        ring,
        generators: reduced,
    })
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Normal form against this basis; the zero result characterises ideal
    /// membership.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.generators)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    fn leading_exponents(&self) -> Vec<&[u32]> {
        self.generators
            .iter()
            .map(|g| g.leading().unwrap().0)
            .collect()
    }

    /// For each variable, the least pure-power exponent appearing as a
    /// leading term, if any.
    fn pure_power_bounds(&self) -> Vec<Option<u32>> {
        let n = self.ring.num_vars();
        let mut bounds = vec![None; n];
        for lt in self.leading_exponents() {
            let mut support = lt.iter().enumerate().filter(|(_, e)| **e > 0);
            if let (Some((v, e)), None) = (support.next(), support.next()) {
                let entry = &mut bounds[v];
                *entry = Some(entry.map_or(*e, |cur: u32| cur.min(*e)));
            }
        }
        bounds
    }

    /// True iff every variable has some pure power among the leading terms,
    /// i.e. the quotient has finitely many standard monomials.
    pub fn is_finite_quotient(&self) -> bool {
        self.pure_power_bounds().iter().all(|b| b.is_some())
    }

    /// Standard monomials (monomials outside the leading-term ideal) of the
    /// given weighted degree.
    pub fn standard_monomials_of_degree(&self, degree: i64) -> Vec<Vec<u32>> {
        if degree < 0 {
            return Vec::new();
        }
        let degree = degree as u32;
        let leading = self.leading_exponents();
        self.ring
            .monomials_of_weighted_degree(degree)
            .into_iter()
            .filter(|m| !leading.iter().any(|lt| divides(lt, m)))
            .collect()
    }

    /// Dimension of the quotient's graded piece in the given weighted degree.
    pub fn hilbert_function(&self, degree: i64) -> u64 {
        if degree < 0 {
            return 0;
        }
        let degree = degree as u32;
        // pure-power leading-term ideals admit a box count
        let bounds = self.pure_power_bounds();
        let pure_only = self
            .leading_exponents()
            .iter()
            .all(|lt| lt.iter().filter(|e| **e > 0).count() <= 1);
        if pure_only {
            // coefficient of t^degree in the product of truncated geometric
            // series, one factor per variable
            let mut coeffs = vec![0u64; degree as usize + 1];
            coeffs[0] = 1;
            for (v, bound) in bounds.iter().enumerate() {
                let w = self.ring.weight(v) as usize;
                let mut next = vec![0u64; degree as usize + 1];
                for (d, c) in coeffs.iter().enumerate() {
                    if *c == 0 {
                        continue;
                    }
                    let mut e = 0u32;
                    loop {
                        if let Some(b) = bound {
                            if e >= *b {
                                break;
                            }
                        }
                        let target = d + e as usize * w;
                        if target > degree as usize {
                            break;
                        }
                        next[target] += *c;
                        e += 1;
                    }
                }
                coeffs = next;
            }
            return coeffs[degree as usize];
        }
        self.standard_monomials_of_degree(degree as i64).len() as u64
    }

    /// Top weighted degree with a nonzero Hilbert function, for finite
    /// quotients.
    pub fn socle_degree(&self) -> Result<u32> {
        let bounds = self.pure_power_bounds();
        if bounds.iter().any(|b| b.is_none()) {
            return Err(Error::NotFinite(
                "socle degree is only defined for finite quotients".into(),
            ));
        }
        // every standard monomial divides the product of the maximal pure
        // powers minus one, so this bounds the top degree
        let bound: u32 = bounds
            .iter()
            .enumerate()
            .map(|(v, b)| (b.unwrap() - 1) * self.ring.weight(v))
            .sum();
        let mut top = 0;
        for d in (0..=bound).rev() {
            if self.hilbert_function(d as i64) > 0 {
                top = d;
                break;
            }
        }
        Ok(top)
    }

    /// True iff every monomial of total degree `k` in the variables lies in
    /// the ideal, i.e. the k-th power of the irrelevant ideal is contained
    /// in it.
    pub fn contains_maximal_power(&self, k: u32) -> bool {
        self.ring
            .monomials_of_total_degree(k)
            .into_iter()
            .all(|m| {
                let p = Polynomial::from_terms(&self.ring, vec![(m, Rational::one())]);
                self.contains(&p)
            })
    }
}

/// Regular-sequence test for a square homogeneous system: `k` homogeneous
/// polynomials of positive degree in a `k`-variable ring form a regular
/// sequence iff the quotient is finite dimensional.
pub fn is_regular_sequence(polys: &[Polynomial]) -> Result<bool> {
    let ring = match polys.first() {
        Some(p) => p.ring().clone(),
        None => return Err(Error::Precondition("empty system".into())),
    };
    if polys.len() != ring.num_vars() {
        return Err(Error::NotSquare {
            vars: ring.num_vars(),
            polys: polys.len(),
        });
    }
    for p in polys {
        if p.is_zero() {
            return Ok(false);
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous(p.to_string()));
        }
    }
    Ok(buchberger(polys)?.is_finite_quotient())
}
