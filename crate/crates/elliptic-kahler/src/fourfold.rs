//! The complex-dimension-4 classification pipeline.
//!
//! Starting from the exponent tuples of formal dimension 8 with equal ranks,
//! the pipeline excludes candidates by Hard Lefschetz monotonicity and
//! degree-2 generation, maps the survivors to their level `<= 0` Hodge
//! diamonds, and then walks the positive-level branch: the level bound
//! forces `h^{2,0} >= 1` in degree 2, `b_2` is pinned to 3 or 4, the
//! `b_2 = 3` shape dies by the Hodge–Riemann signature obstruction and the
//! first `b_2 = 4` shape dies because its forced relations are never a
//! regular sequence. Every verdict carries a witness that can be re-checked
//! independently, and each admitted diamond is matched against an explicit
//! realization.

use serde::{Deserialize, Serialize};

use crate::exponents::{enumerate, ExponentTuple};
use crate::groebner::{buchberger, is_regular_sequence};
use crate::hodge::{
    diamond_from_betti, enumerate_positive_level_diamonds, hard_lefschetz_admissible, HodgeDiamond,
};
use crate::poly::{rat, PolyRing, Polynomial, Rational};
use crate::sullivan::{RingPresentation, SullivanAlgebra};
use crate::{BettiVector, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordSource {
    Tuple(ExponentTuple),
    Shape { b2: u64, b4: u64, h20: u64, h31: u64 },
}

impl std::fmt::Display for RecordSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecordSource::Tuple(t) => write!(f, "{t}"),
            RecordSource::Shape { b2, b4, h20, h31 } => {
                write!(f, "shape b2={b2} b4={b4} h20={h20} h31={h31}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Admitted,
    Excluded,
    AdmittedUnrealized,
}

/// One filter application: `verdict` records whether the candidate passed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FilterCheck {
    pub filter: String,
    pub verdict: bool,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub source: RecordSource,
    pub status: Status,
    /// Diamond label `a..g` for admitted records.
    pub label: Option<char>,
    pub diamond: Option<HodgeDiamond>,
    pub filters: Vec<FilterCheck>,
    pub realization: Option<String>,
}

/// Level `<= 0` survivors of the exponent filters, with their Betti vectors.
fn level_zero_survivors() -> Result<Vec<(ExponentTuple, BettiVector)>> {
    let mut out = Vec::new();
    for t in enumerate(8, true) {
        let betti = t.hilbert_series()?;
        if !hard_lefschetz_admissible(&betti) {
            continue;
        }
        if !t.generated_in_degree_two() && (betti.b(2), betti.b(4)) != (1, 2) {
            continue;
        }
        out.push((t, betti));
    }
    Ok(out)
}

/// The six product/quadric realizations of the level `<= 0` diamonds,
/// labelled in diamond order.
pub fn realize_products() -> Result<Vec<(char, String, HodgeDiamond)>> {
    let p = HodgeDiamond::projective_space;
    let quadric_ring = {
        let ring = PolyRing::new(&[("w", 2), ("x", 4)])?;
        let r1 = crate::parse::parse_polynomial("w*x", &ring)
            .map_err(|e| Error::Internal(e.to_string()))?;
        let r2 = crate::parse::parse_polynomial("x^2 - w^4", &ring)
            .map_err(|e| Error::Internal(e.to_string()))?;
        RingPresentation::new(ring, vec![r1, r2], Some("w".into()))?
    };
    let quadric_betti = quadric_ring.hilbert_vector(8)?;
    if quadric_betti.even_entries() != vec![1, 1, 2, 1, 1] {
        return Err(Error::Internal(format!(
            "the quadric cohomology ring has Hilbert function {quadric_betti}"
        )));
    }
    let mut realizations = vec![
        ("CP^4".to_string(), p(4)),
        (
            "quadric V(2) (cohomology ring Q[w,x]/(w*x, x^2 - w^4))".to_string(),
            diamond_from_betti(&quadric_betti, 4)?,
        ),
        ("CP^1 x CP^3".to_string(), p(1).product(&p(3))),
        ("CP^2 x CP^2".to_string(), p(2).product(&p(2))),
        ("CP^1 x CP^1 x CP^2".to_string(), p(1).product(&p(1)).product(&p(2))),
        ("(CP^1)^4".to_string(), p(1).product(&p(1)).product(&p(1)).product(&p(1))),
    ];
    realizations.sort_by_key(|(_, d)| (d.betti().b(2), d.betti().b(4)));

    // cross-check against the diamonds coming out of the exponent pipeline
    let mut survivors = level_zero_survivors()?;
    survivors.sort_by_key(|(_, betti)| (betti.b(2), betti.b(4)));
    if survivors.len() != realizations.len() {
        return Err(Error::Internal(format!(
            "{} realizations for {} level <= 0 diamonds",
            realizations.len(),
            survivors.len()
        )));
    }
    let mut out = Vec::new();
    for (label_idx, ((name, diamond), (tuple, betti))) in
        realizations.into_iter().zip(survivors).enumerate()
    {
        if diamond.betti() != betti {
            return Err(Error::Internal(format!(
                "realization `{name}` has Betti {} but the tuple {tuple} demands {betti}",
                diamond.betti()
            )));
        }
        out.push(((b'a' + label_idx as u8) as char, name, diamond));
    }
    Ok(out)
}

fn shape_i_ring() -> Result<crate::poly::RingRef> {
    PolyRing::new(&[("w", 2), ("x", 2), ("y", 2), ("z", 2)])
}

fn shape_i_relations(ring: &crate::poly::RingRef, k: &Rational, l: &Rational) -> Vec<Polynomial> {
    let var = |i| Polynomial::variable(ring, i);
    let (w, x, y, z) = (var(0), var(1), var(2), var(3));
    vec![
        &y * &y,
        &z * &z,
        &(&x * &y) - &(&w * &y).scale(k),
        &(&x * &z) - &(&w * &z).scale(l),
    ]
}

pub fn default_shape_i_samples() -> Vec<(Rational, Rational)> {
    vec![
        (rat(1, 1), rat(1, 1)),
        (rat(0, 1), rat(0, 1)),
        (rat(-1, 1), rat(1, 1)),
        (rat(3, 2), rat(-2, 1)),
        (rat(2, 1), rat(5, 1)),
    ]
}

/// Exclusion of the `b_2 = 4` positive-level shape with `h^{2,2} = 4`: for
/// every sampled `(k, l)` the forced relation set `(y^2, z^2, xy - k.w.y,
/// xz - l.w.z)` fails to be a regular sequence, so the candidate cohomology
/// ring is infinite dimensional. A sample that came out regular would
/// contradict the pipeline and aborts it.
pub fn exclusion_b2_4_shape_i(samples: &[(Rational, Rational)]) -> Result<ClassificationRecord> {
    if samples.is_empty() {
        return Err(Error::Precondition("need at least one (k, l) sample".into()));
    }
    let ring = shape_i_ring()?;
    let mut filters = Vec::new();
    for (k, l) in samples {
        let relations = shape_i_relations(&ring, k, l);
        if is_regular_sequence(&relations)? {
            return Err(Error::Internal(format!(
                "(k, l) = ({k}, {l}) produced a regular sequence; the shape (i) exclusion failed"
            )));
        }
        let gb = buchberger(&relations)?;
        let pure_power_free = gb.generators().iter().all(|g| {
            let lt = g.leading().unwrap().0;
            !(lt.iter().skip(2).all(|&e| e == 0) && lt[..2].iter().filter(|&&e| e > 0).count() == 1)
        });
        filters.push(FilterCheck {
            filter: "shape_i_regular_sequence".into(),
            verdict: false,
            witness: format!(
                "k={k}, l={l}: not a regular sequence (quotient infinite); leading terms contain no pure power of w or x{}",
                if pure_power_free { "" } else { " [unexpected pure power]" }
            ),
        });
        if !pure_power_free {
            return Err(Error::Internal(
                "a pure power of w or x appeared in the shape (i) leading terms".into(),
            ));
        }
    }
    filters.push(FilterCheck {
        filter: "shape_i_structural".into(),
        verdict: false,
        witness: "every relation lies in the ideal (y, z), so the quotient surjects onto Q[w, x] for all k, l".into(),
    });
    Ok(ClassificationRecord {
        source: RecordSource::Shape {
            b2: 4,
            b4: 6,
            h20: 1,
            h31: 1,
        },
        status: Status::Excluded,
        label: None,
        diamond: Some(
            enumerate_positive_level_diamonds(4, 6, 1)
                .into_iter()
                .next()
                .ok_or_else(|| Error::Internal("shape (i) not enumerated".into()))?,
        ),
        filters,
        realization: None,
    })
}

/// Outcome of checking one of the two-variable parameterized models.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelCheck {
    pub elliptic: bool,
    pub betti: BettiVector,
    pub generator_degrees: Vec<u32>,
    pub radical_power_contained: bool,
    /// Kähler positivity constraint for the second model; `None` for the
    /// first.
    pub hr_valid: Option<bool>,
}

fn pure_model_check(
    pres: &RingPresentation,
    expected_even: &[u64],
    expected_degrees: &[u32],
    hr_valid: Option<bool>,
) -> Result<ModelCheck> {
    if !pres.is_elliptic()? {
        return Err(Error::Internal(format!(
            "relations {:?} are not a regular sequence",
            pres.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>()
        )));
    }
    let m = pres.formal_dimension()?;
    let betti = pres.hilbert_vector(m)?;
    if betti.even_entries() != expected_even {
        return Err(Error::Internal(format!(
            "unexpected Hilbert function {betti}"
        )));
    }
    let model = SullivanAlgebra::pure_model(pres)?;
    let mut degrees: Vec<u32> = model.generators().iter().map(|g| g.degree).collect();
    degrees.sort_unstable();
    if degrees != expected_degrees {
        return Err(Error::Internal(format!(
            "unexpected generator degrees {degrees:?}"
        )));
    }
    // cohomology of the model must match the quotient ring degreewise
    let cohomology = model.cohomology(m)?;
    if cohomology != betti {
        return Err(Error::Internal(format!(
            "model cohomology {cohomology} disagrees with the Hilbert function {betti}"
        )));
    }
    let gb = pres.groebner()?;
    let radical_power_contained = gb.contains_maximal_power(5);
    if !radical_power_contained {
        return Err(Error::Internal(
            "(w, x)^5 escaped the relation ideal".into(),
        ));
    }
    Ok(ModelCheck {
        elliptic: true,
        betti,
        generator_degrees: degrees,
        radical_power_contained,
        hr_valid,
    })
}

pub fn default_model_c_samples() -> Vec<Rational> {
    vec![rat(0, 1), rat(1, 1), rat(-1, 1), rat(-5, 2), rat(3, 1)]
}

/// The diamond (c) model: relations `x^2 + w^2 - beta.w.x` and `w^3 x` in
/// two degree-2 variables. Elliptic for every `beta`, with Betti numbers
/// `1,2,2,2,1` and generator degrees `{2,2,3,7}`.
pub fn check_model_c(beta: &Rational) -> Result<ModelCheck> {
    let ring = PolyRing::new(&[("w", 2), ("x", 2)])?;
    let var = |i| Polynomial::variable(&ring, i);
    let (w, x) = (var(0), var(1));
    let p1 = &(&(&x * &x) + &(&w * &w)) - &(&w * &x).scale(beta);
    let p2 = &w.pow(3) * &x;
    let pres = RingPresentation::new(ring, vec![p1, p2], Some("w".into()))?;
    pure_model_check(&pres, &[1, 2, 2, 2, 1], &[2, 2, 3, 7], None)
}

pub fn default_model_d_samples() -> Vec<(Rational, Rational)> {
    vec![
        (rat(2, 1), rat(0, 1)),
        (rat(0, 1), rat(0, 1)),
        (rat(0, 1), rat(-2, 1)),
        (rat(1, 1), rat(-1, 1)),
        (rat(-3, 2), rat(1, 1)),
    ]
}

/// The diamond (d) model: relations `x^3 - alpha.w^3 - beta.w^2 x` and
/// `w x^2 + w^3 + alpha.w^2 x`. Requires `beta != alpha^2 - 1`; the Kähler
/// positivity constraint is `beta < alpha^2 - 1`.
pub fn check_model_d(alpha: &Rational, beta: &Rational) -> Result<ModelCheck> {
    let boundary = alpha * alpha - Rational::from_integer(1.into());
    if *beta == boundary {
        return Err(Error::Precondition(format!(
            "beta = alpha^2 - 1 = {boundary} is outside the model's parameter range"
        )));
    }
    let ring = PolyRing::new(&[("w", 2), ("x", 2)])?;
    let var = |i| Polynomial::variable(&ring, i);
    let (w, x) = (var(0), var(1));
    let p1 = &(&x.pow(3) - &w.pow(3).scale(alpha)) - &(&w.pow(2) * &x).scale(beta);
    let p2 = &(&(&w * &x.pow(2)) + &w.pow(3)) + &(&w.pow(2) * &x).scale(alpha);
    let pres = RingPresentation::new(ring, vec![p1, p2], Some("w".into()))?;
    let hr_valid = *beta < boundary;
    pure_model_check(&pres, &[1, 2, 3, 2, 1], &[2, 2, 5, 5], Some(hr_valid))
}

/// Run the whole pipeline. Deterministic, order-stable output: one record
/// per exponent tuple in canonical order, then the positive-level records.
pub fn classify() -> Result<Vec<ClassificationRecord>> {
    let tuples = enumerate(8, true);
    if tuples.len() != 8 {
        return Err(Error::Internal(format!(
            "expected 8 exponent tuples at formal dimension 8, found {}",
            tuples.len()
        )));
    }

    let realizations = realize_products()?;
    let mut records = Vec::new();

    for t in &tuples {
        let mut filters = Vec::new();
        let odd_ok = t.odd_betti_forced_zero(4, true);
        filters.push(FilterCheck {
            filter: "odd_betti_vanish".into(),
            verdict: odd_ok,
            witness: format!("sum a_i = {} >= n - 3 = 1", t.sum_a()),
        });
        if !odd_ok {
            return Err(Error::Internal(format!(
                "{t} escaped the odd-Betti vanishing bound"
            )));
        }
        let betti = t.hilbert_series()?;

        let hl = hard_lefschetz_admissible(&betti);
        if !hl {
            let evens = betti.even_entries();
            let bad = (0..evens.len() - 1)
                .find(|&i| evens[i] > evens[i + 1])
                .unwrap();
            filters.push(FilterCheck {
                filter: "hard_lefschetz".into(),
                verdict: false,
                witness: format!(
                    "b{} = {} < b{} = {}",
                    2 * (bad + 1),
                    evens[bad + 1],
                    2 * bad,
                    evens[bad]
                ),
            });
            records.push(ClassificationRecord {
                source: RecordSource::Tuple(t.clone()),
                status: Status::Excluded,
                label: None,
                diamond: None,
                filters,
                realization: None,
            });
            continue;
        }
        filters.push(FilterCheck {
            filter: "hard_lefschetz".into(),
            verdict: true,
            witness: format!("even Betti numbers {:?} increase to the middle", betti.even_entries()),
        });

        let generated = t.generated_in_degree_two();
        let pair = (betti.b(2), betti.b(4));
        if !generated && pair != (1, 2) {
            filters.push(FilterCheck {
                filter: "degree_two_generation".into(),
                verdict: false,
                witness: format!(
                    "a-exponent {} > 1 with (b2, b4) = ({}, {}) outside the exceptional pair (1, 2)",
                    t.a().first().copied().unwrap_or(0),
                    pair.0,
                    pair.1
                ),
            });
            records.push(ClassificationRecord {
                source: RecordSource::Tuple(t.clone()),
                status: Status::Excluded,
                label: None,
                diamond: None,
                filters,
                realization: None,
            });
            continue;
        }
        filters.push(FilterCheck {
            filter: "degree_two_generation".into(),
            verdict: true,
            witness: if generated {
                "all a-exponents equal 1".into()
            } else {
                format!("(b2, b4) = ({}, {}) is the exceptional pair", pair.0, pair.1)
            },
        });

        let diamond = diamond_from_betti(&betti, 4)?;
        let matched = realizations
            .iter()
            .find(|(_, _, d)| d.betti() == betti)
            .ok_or_else(|| Error::Internal(format!("no realization matches {t}")))?;
        records.push(ClassificationRecord {
            source: RecordSource::Tuple(t.clone()),
            status: Status::Admitted,
            label: Some(matched.0),
            diamond: Some(diamond),
            filters,
            realization: Some(matched.1.clone()),
        });
    }

    // positive-level branch: the first positive level must be in degree 2,
    // so h^{2,0} >= 1 and b_2 = h^{1,1} + 2 h^{2,0} is 3 or 4 by the
    // degree-sum bound on the a-exponents
    let b2_note = "first positive level forced into degree 2 (3k <= 2n - 1); \
                   h^{2,0} >= 1 and sum 2 a_i <= 8 with all a_i = 1 bound b2 to {3, 4}; \
                   h^{2,0} = 1 because h^{0,p} is palindromic with h^{0,0} = 1";

    // b2 = 3: the only equal-rank tuple with three a-exponents
    let b2_3_tuple = tuples
        .iter()
        .find(|t| t.q() == 3 && t.generated_in_degree_two())
        .ok_or_else(|| Error::Internal("no q = 3 tuple".into()))?;
    let b4_from_series = b2_3_tuple.hilbert_series()?.b(4);
    let b4_from_sym = 6 - 2; // dim S^2 H^2 - dim(V^3 / ker d) + dim ker(d|V^4)
    if b4_from_series != b4_from_sym {
        return Err(Error::Internal(format!(
            "b4 routes disagree for b2 = 3: {b4_from_series} vs {b4_from_sym}"
        )));
    }
    let shapes3 = enumerate_positive_level_diamonds(3, b4_from_series, 1);
    if shapes3.len() != 1 {
        return Err(Error::Internal(format!(
            "expected one b2 = 3 positive-level shape, found {}",
            shapes3.len()
        )));
    }
    let d3 = shapes3.into_iter().next().unwrap();
    let sig = d3.signature()?;
    let hr = d3.hodge_riemann_filter()?;
    if hr {
        return Err(Error::Internal(
            "the b2 = 3 candidate unexpectedly passed the Hodge-Riemann filter".into(),
        ));
    }
    records.push(ClassificationRecord {
        source: RecordSource::Shape {
            b2: 3,
            b4: b4_from_series,
            h20: 1,
            h31: d3.hodge_number(3, 1),
        },
        status: Status::Excluded,
        label: None,
        diamond: Some(d3.clone()),
        filters: vec![
            FilterCheck {
                filter: "level_bound".into(),
                verdict: true,
                witness: b2_note.into(),
            },
            FilterCheck {
                filter: "b4_routes".into(),
                verdict: true,
                witness: format!(
                    "b4 = {b4_from_series} from the Hilbert series of {b2_3_tuple}; \
                     symmetric-square route 6 - 2 + 0 agrees"
                ),
            },
            FilterCheck {
                filter: "hodge_riemann".into(),
                verdict: false,
                witness: format!(
                    "signature {sig} equals b4 = {b4_from_series} while h^(3,1) = {} > 0: \
                     the intersection form cannot be positive definite",
                    d3.hodge_number(3, 1)
                ),
            },
        ],
        realization: None,
    });

    // b2 = 4: two shapes; (i) dies on the regular-sequence obstruction,
    // (ii) is admitted as diamond (g), unrealized
    let b2_4_tuple = tuples
        .iter()
        .find(|t| t.q() == 4)
        .ok_or_else(|| Error::Internal("no q = 4 tuple".into()))?;
    let b4 = b2_4_tuple.hilbert_series()?.b(4);
    let shapes4 = enumerate_positive_level_diamonds(4, b4, 1);
    if shapes4.len() != 2 {
        return Err(Error::Internal(format!(
            "expected two b2 = 4 positive-level shapes, found {}",
            shapes4.len()
        )));
    }
    let mut shape_i_record = exclusion_b2_4_shape_i(&default_shape_i_samples())?;
    shape_i_record.filters.insert(
        0,
        FilterCheck {
            filter: "level_bound".into(),
            verdict: true,
            witness: b2_note.into(),
        },
    );
    records.push(shape_i_record);

    let g = shapes4.into_iter().nth(1).unwrap();
    let g_sig = g.signature()?;
    records.push(ClassificationRecord {
        source: RecordSource::Shape {
            b2: 4,
            b4,
            h20: 1,
            h31: g.hodge_number(3, 1),
        },
        status: Status::AdmittedUnrealized,
        label: Some('g'),
        diamond: Some(g.clone()),
        filters: vec![
            FilterCheck {
                filter: "level_bound".into(),
                verdict: true,
                witness: b2_note.into(),
            },
            FilterCheck {
                filter: "hodge_riemann".into(),
                verdict: g.hodge_riemann_filter()?,
                witness: format!("signature {g_sig} < b4 = {b4}: no obstruction"),
            },
            FilterCheck {
                filter: "geometric_genus".into(),
                verdict: g.geometric_genus_filter(),
                witness: "h^(4,0) = 0 and h^(0,p) palindromic".into(),
            },
        ],
        realization: None,
    });

    let admitted = records
        .iter()
        .filter(|r| matches!(r.status, Status::Admitted | Status::AdmittedUnrealized))
        .count();
    if admitted != 7 {
        return Err(Error::Internal(format!(
            "expected 7 admitted diamonds, found {admitted}"
        )));
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_finds_exactly_the_seven_diamonds() {
        let records = classify().unwrap();
        let labels: Vec<char> = records.iter().filter_map(|r| r.label).collect();
        assert_eq!(labels, vec!['a', 'c', 'd', 'b', 'e', 'f', 'g']);
        let unrealized: Vec<&ClassificationRecord> = records
            .iter()
            .filter(|r| r.status == Status::AdmittedUnrealized)
            .collect();
        assert_eq!(unrealized.len(), 1);
        assert_eq!(unrealized[0].label, Some('g'));
        let excluded: Vec<String> = records
            .iter()
            .filter(|r| r.status == Status::Excluded)
            .map(|r| r.source.to_string())
            .collect();
        assert_eq!(
            excluded,
            vec![
                "a=[1,3] b=[2,6]",
                "a=[1,1,2] b=[2,2,4]",
                "shape b2=3 b4=4 h20=1 h31=1",
                "shape b2=4 b4=6 h20=1 h31=1",
            ]
        );
    }

    #[test]
    fn hard_lefschetz_witness_matches_the_series() {
        let records = classify().unwrap();
        let r = records
            .iter()
            .find(|r| r.source.to_string() == "a=[1,3] b=[2,6]")
            .unwrap();
        let hl = r.filters.iter().find(|f| f.filter == "hard_lefschetz").unwrap();
        assert!(!hl.verdict);
        assert!(hl.witness.contains("b4 = 0 < b2 = 1"), "{}", hl.witness);
    }

    #[test]
    fn model_c_over_default_samples() {
        for beta in default_model_c_samples() {
            let check = check_model_c(&beta).unwrap();
            assert!(check.elliptic);
            assert_eq!(check.betti.even_entries(), vec![1, 2, 2, 2, 1]);
            assert_eq!(check.generator_degrees, vec![2, 2, 3, 7]);
            assert!(check.radical_power_contained);
            assert_eq!(check.betti.total(), 8);
        }
    }

    #[test]
    fn model_d_over_default_samples() {
        for (alpha, beta) in default_model_d_samples() {
            let check = check_model_d(&alpha, &beta).unwrap();
            assert!(check.elliptic);
            assert_eq!(check.betti.even_entries(), vec![1, 2, 3, 2, 1]);
            assert_eq!(check.generator_degrees, vec![2, 2, 5, 5]);
            assert_eq!(check.betti.total(), 9);
        }
        // positivity verdicts for specific parameters
        assert_eq!(check_model_d(&rat(2, 1), &rat(0, 1)).unwrap().hr_valid, Some(true));
        assert_eq!(check_model_d(&rat(0, 1), &rat(0, 1)).unwrap().hr_valid, Some(false));
        assert_eq!(check_model_d(&rat(0, 1), &rat(-2, 1)).unwrap().hr_valid, Some(true));
        // the boundary is rejected
        assert!(check_model_d(&rat(2, 1), &rat(3, 1)).is_err());
    }

    #[test]
    fn shape_i_exclusion_on_default_samples() {
        let record = exclusion_b2_4_shape_i(&default_shape_i_samples()).unwrap();
        assert_eq!(record.status, Status::Excluded);
        let sample_checks = record
            .filters
            .iter()
            .filter(|f| f.filter == "shape_i_regular_sequence")
            .count();
        assert_eq!(sample_checks, 5);
        assert!(record.filters.iter().all(|f| !f.verdict || f.filter != "shape_i_regular_sequence"));
    }

    #[test]
    fn realizations_cover_the_six_level_zero_diamonds() {
        let r = realize_products().unwrap();
        assert_eq!(r.len(), 6);
        let names: Vec<&str> = r.iter().map(|(_, n, _)| n.as_str()).collect();
        assert!(names[2].contains("CP^1 x CP^3"));
        assert!(names[3].contains("CP^2 x CP^2"));
        let betti_c: Vec<u64> = r[2].2.betti().even_entries();
        assert_eq!(betti_c, vec![1, 2, 2, 2, 1]);
    }
}
