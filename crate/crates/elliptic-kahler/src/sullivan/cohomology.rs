//! Degreewise cohomology of a Sullivan algebra by exact linear algebra on
//! the monomial bases of `∧V`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{QMatrix, RowSpace};
use crate::poly::Rational;
use crate::{BettiVector, Error, Result};

use super::{AlgElement, SullivanAlgebra};

impl SullivanAlgebra {
    /// Matrix of `d: (∧V)^n → (∧V)^{n+1}` with respect to the monomial bases.
    pub(crate) fn differential_matrix(
        &self,
        basis_n: &[Vec<u32>],
        basis_next: &[Vec<u32>],
    ) -> QMatrix {
        let index: BTreeMap<&Vec<u32>, usize> =
            basis_next.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = QMatrix::zeros(basis_next.len(), basis_n.len());
        for (col, m) in basis_n.iter().enumerate() {
            let image = self.d(&AlgElement::from_terms(vec![(
                m.clone(),
                Rational::from_integer(1.into()),
            )]));
            for (exps, coeff) in image.terms() {
                let row = *index
                    .get(exps)
                    .expect("differential leaves the monomial basis");
                mat.set(row, col, coeff.clone());
            }
        }
        mat
    }

    /// Betti numbers `dim H^0, ..., dim H^{up_to}`.
    ///
    /// Each degree needs kernel and image ranks of the neighbouring
    /// differentials; a basis whose size exceeds the configured cap aborts
    /// with a resource error rather than returning a truncated answer.
    pub fn cohomology(&self, up_to: u32) -> Result<BettiVector> {
        if up_to > self.truncation_bound() {
            return Err(Error::Precondition(format!(
                "cohomology requested up to degree {up_to}, beyond the truncation bound {}",
                self.truncation_bound()
            )));
        }
        let mut bases = Vec::with_capacity(up_to as usize + 2);
        for n in 0..=up_to + 1 {
            bases.push(self.monomial_basis(n)?);
        }
        // rank of d_n for n = 0..=up_to
        let mut ranks = Vec::with_capacity(up_to as usize + 1);
        for n in 0..=up_to as usize {
            if bases[n].is_empty() || bases[n + 1].is_empty() {
                ranks.push(0);
                continue;
            }
            ranks.push(self.differential_matrix(&bases[n], &bases[n + 1]).rank());
        }
        let mut betti = Vec::with_capacity(up_to as usize + 1);
        for n in 0..=up_to as usize {
            let dim = bases[n].len();
            let image_in = if n == 0 { 0 } else { ranks[n - 1] };
            betti.push((dim - ranks[n] - image_in) as u64);
        }
        Ok(BettiVector::new(betti))
    }

    /// Cocycle representatives of a basis of `H^n(∧V, d)`.
    pub(crate) fn cohomology_representatives(&self, n: u32) -> Result<Vec<AlgElement>> {
        let basis_n = self.monomial_basis(n)?;
        if basis_n.is_empty() {
            return Ok(Vec::new());
        }
        let basis_next = self.monomial_basis(n + 1)?;
        let kernel: Vec<Vec<Rational>> = if basis_next.is_empty() {
            // everything is closed
            (0..basis_n.len())
                .map(|i| {
                    let mut v = vec![Rational::zero(); basis_n.len()];
                    v[i] = Rational::from_integer(1.into());
                    v
                })
                .collect()
        } else {
            self.differential_matrix(&basis_n, &basis_next).kernel_basis()
        };
        let mut seen = RowSpace::new();
        if n > 0 {
            let basis_prev = self.monomial_basis(n - 1)?;
            if !basis_prev.is_empty() {
                let dmat = self.differential_matrix(&basis_prev, &basis_n);
                for col in 0..basis_prev.len() {
                    let v: Vec<Rational> =
                        (0..basis_n.len()).map(|r| dmat.get(r, col).clone()).collect();
                    seen.insert(&v);
                }
            }
        }
        let mut reps = Vec::new();
        for k in kernel {
            let reduced = seen.reduce(&k);
            if reduced.iter().any(|x| !x.is_zero()) {
                seen.insert(&reduced);
                reps.push(AlgElement::from_terms(
                    reduced
                        .iter()
                        .zip(&basis_n)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, m)| (m.clone(), c.clone())),
                ));
            }
        }
        Ok(reps)
    }
}
