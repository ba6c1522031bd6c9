//! Exhaustive verification harnesses. Each harness sweeps a canonically
//! ordered corpus, checks one correspondence, and returns a deterministic
//! report: identical parameters give byte-identical JSON regardless of the
//! worker count, so wall-clock time stays out of the serialized form.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fold::{eta, speciality, unfold};
use crate::grid::{
    build_grids, dominates_monomial, monomials_up_to, multiset_coefficient, n_tilde_cells,
    DominationMode, Monomial,
};
use crate::hilbert::{
    enumerate_anti_dominated_tableaux, enumerate_dominated_monomials,
    enumerate_dominated_tableaux,
};
use crate::insertion::{brsk, brsk_inverse, standard_monomial_from_pair};
use crate::json::{monomial_to_json, tableau_to_json};
use crate::order::IndexSet;
use crate::peel::peel;

/// A counterexample: the offending input with both sides of the failed
/// comparison, serialized verbatim.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub input: serde_json::Value,
    pub expected: serde_json::Value,
    pub actual: serde_json::Value,
}

/// Agreement statistics for the experimental cross-check between chain
/// domination and the leading peel word.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AgreementStats {
    pub checked: u64,
    pub disagreements: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub kind: String,
    pub v: Vec<u32>,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_m: Option<u32>,
    pub instances_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_instances: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domination_agreement: Option<AgreementStats>,
    pub mismatches: Vec<Mismatch>,
    pub pass: bool,
    /// Wall-clock time; reported on stderr by the CLI, never serialized.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn base(kind: &str, v: &IndexSet) -> Self {
        Self {
            kind: kind.to_string(),
            v: v.entries().to_vec(),
            d: v.len() as u32,
            w: None,
            max_size: None,
            max_degree: None,
            max_m: None,
            instances_checked: 0,
            predicted_instances: None,
            counts: None,
            domination_agreement: None,
            mismatches: Vec::new(),
            pass: false,
            elapsed: Duration::ZERO,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn sorted(mut xs: Vec<u32>) -> Vec<u32> {
    xs.sort_unstable();
    xs
}

/// Sweep every monomial of size at most `max_size` over the strictly lower
/// grid of `v` and compare the peeling trace against the insertion tableau
/// pair, row by row: the r-th distinguished subset must supply exactly the
/// columns of `P` row r+1 and the rows of `Q` row r+1 (as multisets), and
/// the replaced words must agree. Also accumulates the domination /
/// leading-word agreement statistic over every candidate `w`.
pub fn main_theorem(v: &IndexSet, max_size: usize) -> VerificationReport {
    let start = Instant::now();
    let cells = n_tilde_cells(v);
    let corpus = monomials_up_to(v, &cells, max_size);
    let all_w: Vec<IndexSet> = (1..=v.ambient())
        .combinations(v.len())
        .map(|c| IndexSet::new(c, v.ambient()).expect("combination in range"))
        .collect();

    struct Item {
        mismatches: Vec<Mismatch>,
        agreement_checked: u64,
        agreement_bad: u64,
    }

    let items: Vec<Item> = corpus
        .par_iter()
        .map(|u| {
            let mut mismatches = Vec::new();
            let trace = peel(u).expect("strictly lower monomials peel");
            let pair = brsk(u).expect("strictly lower monomials insert");
            if trace.len() != pair.rows() {
                mismatches.push(Mismatch {
                    input: monomial_to_json(u),
                    expected: serde_json::json!({ "rows": trace.len() }),
                    actual: serde_json::json!({ "rows": pair.rows() }),
                });
            } else {
                for (r, step) in trace.steps().iter().enumerate() {
                    let cols = sorted(step.distinguished.iter().map(|c| c.col).collect());
                    let rows = sorted(step.distinguished.iter().map(|c| c.row).collect());
                    let p_row = sorted(pair.p_rows()[r].clone());
                    let q_row = sorted(pair.q_rows()[r].clone());
                    if cols != p_row || rows != q_row {
                        mismatches.push(Mismatch {
                            input: monomial_to_json(u),
                            expected: serde_json::json!({
                                "step": r, "columns": cols, "rows": rows
                            }),
                            actual: serde_json::json!({
                                "step": r, "columns": p_row, "rows": q_row
                            }),
                        });
                    }
                }
                match standard_monomial_from_pair(&pair, v) {
                    Ok(sm) if &sm == trace.words() => {}
                    other => mismatches.push(Mismatch {
                        input: monomial_to_json(u),
                        expected: crate::json::standard_monomial_to_json(trace.words()),
                        actual: serde_json::json!(format!("{other:?}")),
                    }),
                }
            }
            let mut agreement_checked = 0;
            let mut agreement_bad = 0;
            for w in &all_w {
                agreement_checked += 1;
                let via_chains = dominates_monomial(w, u);
                let via_word = trace.leading_word().map_or(true, |w0| w0.leq(w));
                if via_chains != via_word {
                    agreement_bad += 1;
                }
            }
            Item {
                mismatches,
                agreement_checked,
                agreement_bad,
            }
        })
        .collect();

    let mut report = VerificationReport::base("main-theorem", v);
    report.max_size = Some(max_size);
    report.instances_checked = corpus.len() as u64;
    report.predicted_instances = Some(
        (0..=max_size)
            .map(|k| multiset_coefficient(cells.len(), k))
            .sum(),
    );
    let mut stats = AgreementStats {
        checked: 0,
        disagreements: 0,
    };
    for item in items {
        report.mismatches.extend(item.mismatches);
        stats.checked += item.agreement_checked;
        stats.disagreements += item.agreement_bad;
    }
    report.domination_agreement = Some(stats);
    report.pass = report.mismatches.is_empty()
        && Some(report.instances_checked) == report.predicted_instances;
    report.elapsed = start.elapsed();
    report
}

/// Round trip over the same corpus: inverting the insertion tableau must
/// recover the monomial.
pub fn round_trip(v: &IndexSet, max_size: usize) -> VerificationReport {
    let start = Instant::now();
    let cells = n_tilde_cells(v);
    let corpus = monomials_up_to(v, &cells, max_size);

    let mismatches: Vec<Mismatch> = corpus
        .par_iter()
        .map(|u| {
            let pair = brsk(u).expect("strictly lower monomials insert");
            match brsk_inverse(&pair, v) {
                Ok(back) if &back == u => None,
                Ok(back) => Some(Mismatch {
                    input: monomial_to_json(u),
                    expected: monomial_to_json(u),
                    actual: monomial_to_json(&back),
                }),
                Err(e) => Some(Mismatch {
                    input: monomial_to_json(u),
                    expected: monomial_to_json(u),
                    actual: serde_json::json!(e.to_string()),
                }),
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let mut report = VerificationReport::base("round-trip", v);
    report.max_size = Some(max_size);
    report.instances_checked = corpus.len() as u64;
    report.predicted_instances = Some(
        (0..=max_size)
            .map(|k| multiset_coefficient(cells.len(), k))
            .sum(),
    );
    report.mismatches = mismatches;
    report.pass = report.mismatches.is_empty()
        && Some(report.instances_checked) == report.predicted_instances;
    report.elapsed = start.elapsed();
    report
}

/// Check that the folding composition is an injective, degree-preserving
/// map from anti-dominated tableaux onto folded-grid monomials, degree by
/// degree up to `max_degree`, with every intermediate monomial special.
pub fn eta_bijection(v: &IndexSet, max_degree: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    if !v.is_symplectic() {
        return Err(Error::InvalidInput(format!(
            "v = {v} must pick one of each conjugate pair"
        )));
    }
    let tableaux = enumerate_anti_dominated_tableaux(v, max_degree)?;
    let folded = build_grids(v)?.n_folded;

    let results: Vec<std::result::Result<(u64, Monomial), Mismatch>> = tableaux
        .par_iter()
        .map(|t| {
            let degree = t.v_degree(v);
            let Some(degree) = degree.as_integer() else {
                return Err(Mismatch {
                    input: tableau_to_json(t),
                    expected: serde_json::json!("integer degree"),
                    actual: serde_json::json!(degree.to_string()),
                });
            };
            match eta(t, v) {
                Ok(image) => {
                    if image.size() as u64 != degree {
                        return Err(Mismatch {
                            input: tableau_to_json(t),
                            expected: serde_json::json!({ "degree": degree }),
                            actual: serde_json::json!({ "degree": image.size() }),
                        });
                    }
                    if !image.is_over_folded() {
                        return Err(Mismatch {
                            input: tableau_to_json(t),
                            expected: serde_json::json!("image over the folded grid"),
                            actual: monomial_to_json(&image),
                        });
                    }
                    Ok((degree, image))
                }
                Err(e) => Err(Mismatch {
                    input: tableau_to_json(t),
                    expected: serde_json::json!("special intermediate monomial"),
                    actual: serde_json::json!(e.to_string()),
                }),
            }
        })
        .collect();

    let mut mismatches = Vec::new();
    let mut images: Vec<Vec<Monomial>> = vec![Vec::new(); max_degree as usize + 1];
    for r in results {
        match r {
            Ok((degree, image)) => images[degree as usize].push(image),
            Err(m) => mismatches.push(m),
        }
    }

    // injectivity and per-degree surjectivity, by cardinality
    let mut counts = Vec::with_capacity(max_degree as usize + 1);
    for (m, bucket) in images.iter_mut().enumerate() {
        let total = bucket.len() as u64;
        bucket.sort();
        bucket.dedup();
        let distinct = bucket.len() as u64;
        let expected = multiset_coefficient(folded.len(), m);
        if distinct != total {
            mismatches.push(Mismatch {
                input: serde_json::json!({ "degree": m }),
                expected: serde_json::json!({ "distinct_images": total }),
                actual: serde_json::json!({ "distinct_images": distinct }),
            });
        }
        if distinct != expected {
            mismatches.push(Mismatch {
                input: serde_json::json!({ "degree": m }),
                expected: serde_json::json!({ "image_count": expected }),
                actual: serde_json::json!({ "image_count": distinct }),
            });
        }
        counts.push(distinct);
    }

    let mut report = VerificationReport::base("eta-bijection", v);
    report.max_degree = Some(max_degree);
    report.instances_checked = tableaux.len() as u64;
    report.predicted_instances = Some(
        (0..=max_degree as usize)
            .map(|m| multiset_coefficient(folded.len(), m))
            .sum(),
    );
    report.counts = Some(counts);
    report.mismatches = mismatches;
    report.pass = report.mismatches.is_empty()
        && Some(report.instances_checked) == report.predicted_instances;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Compare the two degree-`m` cardinalities, monomial side against tableau
/// side, for `m = 0..=max_m`.
pub fn counting(
    v: &IndexSet,
    w: &IndexSet,
    max_m: u32,
    mode: DominationMode,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let per_degree: Vec<std::result::Result<(u64, u64), Error>> = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let monomials = enumerate_dominated_monomials(v, w, m as usize, mode)?;
            let tableaux = enumerate_dominated_tableaux(v, w, m)?;
            Ok((monomials.len() as u64, tableaux.len() as u64))
        })
        .collect();

    let mut report = VerificationReport::base("counting", v);
    report.w = Some(w.entries().to_vec());
    report.max_m = Some(max_m);
    let mut counts = Vec::new();
    let mut total = 0u64;
    for (m, r) in per_degree.into_iter().enumerate() {
        let (s_count, sm_count) = r?;
        total += s_count + sm_count;
        if s_count != sm_count {
            report.mismatches.push(Mismatch {
                input: serde_json::json!({ "degree": m }),
                expected: serde_json::json!({ "monomials": s_count }),
                actual: serde_json::json!({ "tableaux": sm_count }),
            });
        }
        counts.push(s_count);
    }
    report.instances_checked = total;
    report.counts = Some(counts);
    report.pass = report.mismatches.is_empty();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Folded-grid sanity: unfolding every folded monomial up to `max_size`
/// gives a special monomial that folds back. Used by the acceptance suite.
pub fn fold_round_trip(v: &IndexSet, max_size: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let folded = build_grids(v)?.n_folded;
    let corpus = monomials_up_to(v, &folded, max_size);
    let mismatches: Vec<Mismatch> = corpus
        .par_iter()
        .map(|m| {
            let unfolded = unfold(m).expect("folded monomials unfold");
            if !speciality(&unfolded).special {
                return Some(Mismatch {
                    input: monomial_to_json(m),
                    expected: serde_json::json!("special unfolding"),
                    actual: monomial_to_json(&unfolded),
                });
            }
            match crate::fold::fold(&unfolded) {
                Ok(back) if &back == m => None,
                other => Some(Mismatch {
                    input: monomial_to_json(m),
                    expected: monomial_to_json(m),
                    actual: serde_json::json!(format!("{other:?}")),
                }),
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let mut report = VerificationReport::base("fold-round-trip", v);
    report.max_size = Some(max_size);
    report.instances_checked = corpus.len() as u64;
    report.predicted_instances = Some(
        (0..=max_size)
            .map(|k| multiset_coefficient(folded.len(), k))
            .sum(),
    );
    report.mismatches = mismatches;
    report.pass = report.mismatches.is_empty()
        && Some(report.instances_checked) == report.predicted_instances;
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(entries: &[u32], ambient: u32) -> IndexSet {
        IndexSet::new(entries.to_vec(), ambient).unwrap()
    }

    #[test]
    fn main_theorem_small() {
        let r = main_theorem(&iset(&[1, 3], 4), 4);
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.instances_checked, 35);
        let stats = r.domination_agreement.unwrap();
        assert_eq!(stats.disagreements, 0);
        assert_eq!(stats.checked, 35 * 6);
    }

    #[test]
    fn main_theorem_empty_grid() {
        let r = main_theorem(&iset(&[3, 4], 4), 4);
        assert!(r.pass);
        assert_eq!(r.instances_checked, 1);
    }

    #[test]
    fn round_trip_small() {
        let r = round_trip(&iset(&[1, 3], 4), 4);
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.instances_checked, 35);
    }

    #[test]
    fn eta_bijection_small() {
        let r = eta_bijection(&iset(&[1, 3], 4), 2).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.counts, Some(vec![1, 2, 3]));
        assert!(eta_bijection(&iset(&[1, 4], 4), 1).is_err());
    }

    #[test]
    fn eta_bijection_with_a_strict_fold() {
        // for v = {1,4,5} the folded grid (3 cells) is a proper subset of
        // the strictly lower grid (5 cells), so the fold actually merges
        let v = iset(&[1, 4, 5], 6);
        let g = crate::grid::build_grids(&v).unwrap();
        assert_eq!(g.n_folded.len(), 3);
        assert_eq!(g.n_tilde.len(), 5);
        let r = eta_bijection(&v, 3).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.counts, Some(vec![1, 3, 6, 10]));
    }

    #[test]
    fn counting_small() {
        let v = iset(&[1, 3], 4);
        let r = counting(&v, &iset(&[2, 4], 4), 3, DominationMode::default()).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.counts, Some(vec![1, 2, 3, 4]));

        let r = counting(&v, &v, 3, DominationMode::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.counts, Some(vec![1, 1, 1, 1]));

        let r = counting(&v, &v, 0, DominationMode::default()).unwrap();
        assert_eq!(r.counts, Some(vec![1]));
    }

    #[test]
    fn reports_are_deterministic_across_pools() {
        let v = iset(&[1, 3], 4);
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                serde_json::to_string(&main_theorem(&v, 3).to_json()).unwrap()
            })
        };
        assert_eq!(run(1), run(8));
    }
}
