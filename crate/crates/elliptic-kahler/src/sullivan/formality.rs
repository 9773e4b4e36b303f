//! Formality witnesses: a split `V = C ⊕ N` with `d = 0` on `C` and `d`
//! injective on `N` certifies formality iff every closed element of the
//! ideal generated by `N` is exact. The check runs degree by degree with
//! exact linear algebra.

use num_traits::Zero;

use crate::linalg::RowSpace;
use crate::poly::Rational;
use crate::{Error, Result};

use super::{AlgElement, SullivanAlgebra};

/// A proposed split of the generators into closed ones (`C`) and the rest
/// (`N`).
#[derive(Debug, Clone)]
pub struct FormalityWitness {
    pub closed: Vec<String>,
    pub nonclosed: Vec<String>,
}

impl SullivanAlgebra {
    /// Check a formality witness up to the given degree.
    ///
    /// Errors when the split is inconsistent with the differential (a `C`
    /// generator is not closed, `d` fails to be injective on `N`, or the
    /// split does not cover the generators). Returns `false` as soon as a
    /// closed element of the ideal generated by `N` fails to be exact.
    pub fn check_formality_witness(&self, witness: &FormalityWitness, up_to: u32) -> Result<bool> {
        let n_gens = self.generators().len();
        let mut in_n = vec![false; n_gens];
        let mut covered = vec![false; n_gens];
        for name in &witness.closed {
            let i = self
                .generator_index(name)
                .ok_or_else(|| Error::Precondition(format!("unknown generator `{name}`")))?;
            if covered[i] {
                return Err(Error::Precondition(format!("generator `{name}` listed twice")));
            }
            covered[i] = true;
            if !self.differential(i).is_zero() {
                return Err(Error::Precondition(format!(
                    "`{name}` is in the closed part but d({name}) != 0"
                )));
            }
        }
        for name in &witness.nonclosed {
            let i = self
                .generator_index(name)
                .ok_or_else(|| Error::Precondition(format!("unknown generator `{name}`")))?;
            if covered[i] {
                return Err(Error::Precondition(format!("generator `{name}` listed twice")));
            }
            covered[i] = true;
            in_n[i] = true;
        }
        if let Some(missing) = covered.iter().position(|c| !c) {
            return Err(Error::Precondition(format!(
                "generator `{}` appears in neither part of the split",
                self.generators()[missing].name
            )));
        }

        // d must be injective on N, degree by degree
        let mut degrees: Vec<u32> = self
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| in_n[*i])
            .map(|(_, g)| g.degree)
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        for k in degrees {
            let indices: Vec<usize> = (0..n_gens)
                .filter(|&i| in_n[i] && self.generators()[i].degree == k)
                .collect();
            let target = self.monomial_basis(k + 1)?;
            let mut rs = RowSpace::new();
            for &i in &indices {
                let image = self.differential(i);
                let mut v = vec![Rational::zero(); target.len()];
                for (exps, coeff) in image.terms() {
                    let at = target.iter().position(|m| m == exps).expect("basis");
                    v[at] = coeff.clone();
                }
                if !rs.insert(&v) {
                    return Err(Error::Precondition(format!(
                        "d is not injective on the non-closed part in degree {k}"
                    )));
                }
            }
        }

        // closed elements of the ideal generated by N must be exact
        for m in 2..=up_to {
            let basis_m = self.monomial_basis(m)?;
            if basis_m.is_empty() {
                continue;
            }
            let ideal: Vec<&Vec<u32>> = basis_m
                .iter()
                .filter(|exps| exps.iter().enumerate().any(|(i, e)| *e > 0 && in_n[i]))
                .collect();
            if ideal.is_empty() {
                continue;
            }
            let basis_next = self.monomial_basis(m + 1)?;
            // kernel of d restricted to the ideal's span
            let mut dmat = crate::linalg::QMatrix::zeros(basis_next.len(), ideal.len());
            for (col, exps) in ideal.iter().enumerate() {
                let image = self.d(&AlgElement::from_terms(vec![(
                    (*exps).clone(),
                    Rational::from_integer(1.into()),
                )]));
                for (e, c) in image.terms() {
                    let row = basis_next.iter().position(|b| b == e).expect("basis");
                    dmat.set(row, col, c.clone());
                }
            }
            let kernel = dmat.kernel_basis();
            if kernel.is_empty() {
                continue;
            }
            // image of d in degree m
            let mut exact = RowSpace::new();
            if m >= 1 {
                let basis_prev = self.monomial_basis(m - 1)?;
                if !basis_prev.is_empty() {
                    let prev = self.differential_matrix(&basis_prev, &basis_m);
                    for col in 0..basis_prev.len() {
                        let v: Vec<Rational> =
                            (0..basis_m.len()).map(|r| prev.get(r, col).clone()).collect();
                        exact.insert(&v);
                    }
                }
            }
            for k in kernel {
                // expand the kernel vector from ideal coordinates to the
                // full degree-m basis
                let mut full = vec![Rational::zero(); basis_m.len()];
                for (c, exps) in k.iter().zip(&ideal) {
                    if !c.is_zero() {
                        let at = basis_m.iter().position(|b| &b == exps).expect("basis");
                        full[at] = c.clone();
                    }
                }
                if !exact.contains(&full) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
