//! Minimal Sullivan model of a finite-dimensional graded ring, built
//! degreewise: closed generators make the map to the ring surjective, and
//! further generators kill the excess kernel one degree up. For a ring
//! realized by a formal space this produces its minimal model, with the
//! generator degrees reporting the rational homotopy degrees.

use num_traits::Zero;

use crate::linalg::{QMatrix, RowSpace};
use crate::poly::{Polynomial, Rational};
use crate::{Error, Result};

use super::{AlgElement, RingPresentation, SullivanAlgebra, SullivanGenerator};

/// Construct the minimal model of the quotient ring, processing degrees
/// `2..=up_to`. The quotient must be finite dimensional.
pub fn minimal_model_from_ring(
    pres: &RingPresentation,
    up_to: u32,
) -> Result<SullivanAlgebra> {
    let gb = pres.groebner()?;
    if !gb.is_finite_quotient() {
        return Err(Error::NotFinite(
            "minimal models are built only for finite-dimensional quotients".into(),
        ));
    }

    let mut alg = SullivanAlgebra::new(Vec::new())?;
    alg.set_truncation_bound(up_to + 2);
    // image of each generator in the quotient ring, in normal form
    let mut phi: Vec<Polynomial> = Vec::new();

    let phi_of = |phi: &[Polynomial], el: &AlgElement| -> Polynomial {
        let ring = gb.ring();
        let mut acc = Polynomial::zero(ring);
        'terms: for (exps, coeff) in el.terms() {
            let mut prod = Polynomial::one(ring);
            for (i, e) in exps.iter().enumerate() {
                for _ in 0..*e {
                    prod = gb.reduce(&prod.checked_mul(&phi[i]).expect("one ring"));
                    if prod.is_zero() {
                        continue 'terms;
                    }
                }
            }
            acc = &acc + &prod.scale(coeff);
        }
        gb.reduce(&acc)
    };

    for n in 2..=up_to {
        // surjectivity in degree n: complete the image of H^n with closed
        // generators mapping to uncovered standard monomials
        let std_n = gb.standard_monomials_of_degree(n as i64);
        if !std_n.is_empty() {
            let coords = |p: &Polynomial| -> Vec<Rational> {
                let mut v = vec![Rational::zero(); std_n.len()];
                for (exps, coeff) in p.terms() {
                    let at = std_n
                        .iter()
                        .position(|m| m == exps)
                        .expect("normal form lives on standard monomials");
                    v[at] = coeff.clone();
                }
                v
            };
            let mut image = RowSpace::new();
            for rep in alg.cohomology_representatives(n)? {
                image.insert(&coords(&phi_of(&phi, &rep)));
            }
            for (k, monomial) in std_n.iter().enumerate() {
                let mut unit = vec![Rational::zero(); std_n.len()];
                unit[k] = Rational::from_integer(1.into());
                if image.insert(&unit) {
                    let name = closed_generator_name(&alg, gb.ring(), monomial, n);
                    alg.push_generator(SullivanGenerator::new(name, n)?, AlgElement::zero())?;
                    phi.push(Polynomial::from_terms(
                        gb.ring(),
                        vec![(monomial.clone(), Rational::from_integer(1.into()))],
                    ));
                }
            }
        }

        // injectivity one degree up: kill the kernel of H^{n+1} -> A^{n+1}
        let reps = alg.cohomology_representatives(n + 1)?;
        if !reps.is_empty() {
            let std_next = gb.standard_monomials_of_degree((n + 1) as i64);
            let mut mat = QMatrix::zeros(std_next.len(), reps.len());
            for (col, rep) in reps.iter().enumerate() {
                let image = phi_of(&phi, rep);
                for (exps, coeff) in image.terms() {
                    let row = std_next
                        .iter()
                        .position(|m| m == exps)
                        .expect("normal form lives on standard monomials");
                    mat.set(row, col, coeff.clone());
                }
            }
            let kernel = if std_next.is_empty() {
                // the ring vanishes here: the whole cohomology must die
                (0..reps.len())
                    .map(|i| {
                        let mut v = vec![Rational::zero(); reps.len()];
                        v[i] = Rational::from_integer(1.into());
                        v
                    })
                    .collect()
            } else {
                mat.kernel_basis()
            };
            for kv in kernel {
                let mut cocycle = AlgElement::zero();
                for (c, rep) in kv.iter().zip(&reps) {
                    if !c.is_zero() {
                        cocycle = cocycle.add(&rep.scale(c));
                    }
                }
                let name = fresh_name(&alg, &format!("y{n}"));
                alg.push_generator(SullivanGenerator::new(name, n)?, cocycle)?;
                phi.push(Polynomial::zero(gb.ring()));
            }
        }
    }

    alg.validated()
}

fn closed_generator_name(
    alg: &SullivanAlgebra,
    ring: &crate::poly::RingRef,
    monomial: &[u32],
    degree: u32,
) -> String {
    // a bare ring variable keeps its name; anything else gets a degree tag
    let mut support = monomial.iter().enumerate().filter(|(_, e)| **e > 0);
    if let (Some((v, 1)), None) = (support.next().map(|(v, e)| (v, *e)), support.next()) {
        let name = ring.variables()[v].name.clone();
        if alg.generator_index(&name).is_none() {
            return name;
        }
    }
    fresh_name(alg, &format!("c{degree}"))
}

fn fresh_name(alg: &SullivanAlgebra, base: &str) -> String {
    if alg.generator_index(base).is_none() {
        return base.to_string();
    }
    let mut k = 2;
    loop {
        let candidate = format!("{base}_{k}");
        if alg.generator_index(&candidate).is_none() {
            return candidate;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn degrees(alg: &SullivanAlgebra) -> Vec<u32> {
        let mut d: Vec<u32> = alg.generators().iter().map(|g| g.degree).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn truncated_polynomial_ring_gives_projective_space() {
        let ring = PolyRing::new(&[("w", 2)]).unwrap();
        let rel = crate::parse::parse_polynomial("w^5", &ring).unwrap();
        let pres = RingPresentation::new(ring, vec![rel], Some("w".into())).unwrap();
        let model = minimal_model_from_ring(&pres, 18).unwrap();
        assert_eq!(degrees(&model), vec![2, 9]);
        let betti = model.cohomology(18).unwrap();
        for d in 0..=18i64 {
            assert_eq!(
                betti.b(d as usize),
                pres.hilbert_function(d).unwrap(),
                "degree {d}"
            );
        }
    }

    #[test]
    fn quadric_cohomology_ring() {
        let ring = PolyRing::new(&[("w", 2), ("x", 4)]).unwrap();
        let r1 = crate::parse::parse_polynomial("w*x", &ring).unwrap();
        let r2 = crate::parse::parse_polynomial("x^2 - w^4", &ring).unwrap();
        let pres = RingPresentation::new(ring, vec![r1, r2], Some("w".into())).unwrap();
        let model = minimal_model_from_ring(&pres, 16).unwrap();
        assert_eq!(degrees(&model), vec![2, 4, 5, 7]);
        let betti = model.cohomology(16).unwrap();
        for d in 0..=16i64 {
            assert_eq!(betti.b(d as usize), pres.hilbert_function(d).unwrap());
        }
    }

    #[test]
    fn cubic_type_ring_has_two_fives() {
        // relations of weighted degree 6 in two degree-2 variables
        let ring = PolyRing::new(&[("w", 2), ("x", 2)]).unwrap();
        let r1 = crate::parse::parse_polynomial("x^3 - 2*w^3", &ring).unwrap();
        let r2 = crate::parse::parse_polynomial("w*x^2 + w^3 + 2*w^2*x", &ring).unwrap();
        let pres = RingPresentation::new(ring, vec![r1, r2], Some("w".into())).unwrap();
        let model = minimal_model_from_ring(&pres, 16).unwrap();
        assert_eq!(degrees(&model), vec![2, 2, 5, 5]);
    }

    #[test]
    fn redundant_ring_generators_are_not_duplicated() {
        // x is identified with w^2 by the first relation, so the model is
        // the one of the truncated ring Q[w]/(w^4)
        let ring = PolyRing::new(&[("w", 2), ("x", 4)]).unwrap();
        let r1 = crate::parse::parse_polynomial("x - w^2", &ring).unwrap();
        let r2 = crate::parse::parse_polynomial("x^2", &ring).unwrap();
        let pres = RingPresentation::new(ring, vec![r1, r2], None).unwrap();
        let model = minimal_model_from_ring(&pres, 12).unwrap();
        assert_eq!(degrees(&model), vec![2, 7]);
        let betti = model.cohomology(12).unwrap();
        assert_eq!(betti.even_entries(), vec![1, 1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn hyperbolic_rings_keep_acquiring_generators() {
        // the cohomology of a wedge of two 2-spheres: the model is far from
        // elliptic, but its cohomology must still match the ring in range
        let ring = PolyRing::new(&[("w", 2), ("x", 2)]).unwrap();
        let rels: Vec<_> = ["w^2", "w*x", "x^2"]
            .iter()
            .map(|s| crate::parse::parse_polynomial(s, &ring).unwrap())
            .collect();
        let pres = RingPresentation::new(ring, rels, None).unwrap();
        let model = minimal_model_from_ring(&pres, 8).unwrap();
        let betti = model.cohomology(8).unwrap();
        assert_eq!(betti.entries(), &[1, 0, 2, 0, 0, 0, 0, 0, 0]);
        // three relations force three degree-3 generators, and the Massey
        // products force more in degree 4
        let threes = model.generators().iter().filter(|g| g.degree == 3).count();
        let fours = model.generators().iter().filter(|g| g.degree == 4).count();
        assert_eq!(threes, 3);
        assert_eq!(fours, 2);
        assert!(model.validate().is_valid());
    }

    #[test]
    fn infinite_quotients_are_rejected() {
        let ring = PolyRing::new(&[("w", 2), ("x", 2)]).unwrap();
        let rel = crate::parse::parse_polynomial("w*x", &ring).unwrap();
        let pres = RingPresentation::new(ring, vec![rel], None).unwrap();
        assert!(matches!(
            minimal_model_from_ring(&pres, 10),
            Err(Error::NotFinite(_))
        ));
    }
}
