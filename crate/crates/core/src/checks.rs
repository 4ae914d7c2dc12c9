//! Exhaustive claim verification with counterexamples as first-class output.
//!
//! Every claim here is a proven statement, so a counterexample always means
//! an implementation bug — which is exactly why the harness hunts for them:
//! the witness graph6 string is the debugging artifact. Checks either walk
//! the built-in enumeration (n bounded by the enumeration/oracle caps) or a
//! user-supplied graph6 corpus; corpus mode runs the per-graph predicates
//! only and notes which whole-range properties (sharpness, attainment) it
//! cannot see.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    diameter_upper_bound, lower_bound_spanning_tree, max_diameter, min_degree_lower_bound,
};
use crate::enumerate::{enumerate_connected, ingest_corpus, CorpusError, ENUMERATION_MAX};
use crate::extremal::{construct, eg_lower_bound, verify_erdos_gallai, Family};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::nordhaus::{has_spanning_double_star, ng_sum, verify_ng};
use crate::solver::{mvc_exact, mvc_oracle, DEFAULT_CAP, ORACLE_MAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// mvc(C_n) = n for n <= 5, else 3.
    Cycles,
    /// mvc = n iff diameter <= 2; mvc <= n - d + 2 when d >= 3.
    Prop23,
    /// Per-size lower bound + f_v thresholds, with sharpness.
    ErdosGallai,
    /// Complement-sum bounds and the diameter dichotomy.
    NordhausGaddum,
    /// Largest diameter at each (n, m) matches the closed formula.
    DiameterFormula,
    /// Production solver equals the all-partitions oracle.
    OracleAgreement,
    /// Spanning-tree lower bound <= mvc <= diameter upper bound.
    BoundsSandwich,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::Cycles,
        Claim::Prop23,
        Claim::ErdosGallai,
        Claim::NordhausGaddum,
        Claim::DiameterFormula,
        Claim::OracleAgreement,
        Claim::BoundsSandwich,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Cycles => "cycles",
            Claim::Prop23 => "prop23",
            Claim::ErdosGallai => "erdos-gallai",
            Claim::NordhausGaddum => "nordhaus-gaddum",
            Claim::DiameterFormula => "diameter-formula",
            Claim::OracleAgreement => "oracle-agreement",
            Claim::BoundsSandwich => "bounds-sandwich",
        }
    }

    /// Largest n_max the built-in data supports.
    pub fn cap(self) -> usize {
        match self {
            Claim::Cycles => DEFAULT_CAP,
            Claim::OracleAgreement => ORACLE_MAX,
            _ => ENUMERATION_MAX,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Claim, CheckError> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| CheckError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("unknown claim {0:?}; valid claims: cycles, prop23, erdos-gallai, nordhaus-gaddum, diameter-formula, oracle-agreement, bounds-sandwich")]
    UnknownClaim(String),
    #[error("claim {claim} supports --n-max up to {cap}, got {n_max}")]
    NMaxTooLarge {
        claim: &'static str,
        n_max: usize,
        cap: usize,
    },
    #[error("claim cycles checks constructed cycles; a corpus does not apply")]
    CyclesWithCorpus,
    #[error("corpus graph {graph6} has {n} vertices, over the {cap}-vertex cap for claim {claim}")]
    CorpusGraphTooLarge {
        graph6: String,
        n: usize,
        cap: usize,
        claim: &'static str,
    },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub claim: String,
    pub n_max: usize,
    pub scanned: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub wall_ms: u128,
    pub pass: bool,
}

/// Run one claim against the built-in enumeration, or against a graph6
/// corpus file when `corpus` is given.
pub fn run_check(claim: Claim, n_max: usize, corpus: Option<&Path>) -> Result<CheckReport, CheckError> {
    match corpus {
        None => run_check_builtin(claim, n_max),
        Some(path) => {
            let graphs: Vec<Graph> = ingest_corpus(path)
                .map_err(CorpusError::from)?
                .map(|item| item.map(|(_, g)| g))
                .collect::<Result<_, _>>()?;
            run_check_corpus(claim, n_max, &graphs)
        }
    }
}

fn report(
    claim: Claim,
    n_max: usize,
    scanned: u64,
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
    start: Instant,
) -> CheckReport {
    CheckReport {
        claim: claim.id().to_string(),
        n_max,
        scanned,
        pass: counterexamples.is_empty(),
        counterexamples,
        notes,
        wall_ms: start.elapsed().as_millis(),
    }
}

fn run_check_builtin(claim: Claim, n_max: usize) -> Result<CheckReport, CheckError> {
    if n_max > claim.cap() {
        return Err(CheckError::NMaxTooLarge {
            claim: claim.id(),
            n_max,
            cap: claim.cap(),
        });
    }
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();

    match claim {
        Claim::Cycles => {
            for n in 3..=n_max {
                let g = construct(&Family::Cycle { n }).expect("n >= 3");
                let want = crate::bounds::cycle_mvc(n).expect("n >= 3");
                let got = mvc_exact(&g).expect("within cap").value;
                scanned += 1;
                if got != want {
                    counterexamples.push(Counterexample {
                        graph6: write_graph6(&g),
                        detail: format!("mvc(C_{n}) = {got}, formula says {want}"),
                    });
                }
            }
        }
        Claim::Prop23 => {
            for n in 1..=n_max {
                let graphs = enumerate_connected(n, None).expect("within cap");
                scanned += graphs.len() as u64;
                collect_failures(&graphs, &mut counterexamples, check_prop23);
            }
        }
        Claim::ErdosGallai => {
            for n in 3..=n_max {
                let eg = verify_erdos_gallai(n).expect("within cap");
                scanned += enumerate_connected(n, None).expect("within cap").len() as u64;
                for row in &eg.bands {
                    if !row.pass {
                        counterexamples.push(Counterexample {
                            graph6: row.witness.clone(),
                            detail: format!(
                                "n={n} m={}: observed min mvc {} != claimed {}",
                                row.m, row.observed, row.claimed
                            ),
                        });
                    }
                }
                for row in &eg.thresholds {
                    if !row.pass {
                        counterexamples.push(Counterexample {
                            graph6: row.witness_below.clone().unwrap_or_default(),
                            detail: format!(
                                "n={n} k={}: observed threshold {} != claimed f_v {}",
                                row.k, row.observed, row.claimed
                            ),
                        });
                    }
                }
            }
            if n_max < 3 {
                notes.push("no applicable n (needs n >= 3)".into());
            }
        }
        Claim::NordhausGaddum => {
            for n in 4..=n_max {
                let ng = verify_ng(n).expect("within cap");
                scanned += ng.pairs as u64;
                counterexamples.extend(ng.failures.into_iter().map(|(graph6, detail)| {
                    Counterexample {
                        graph6,
                        detail: format!("n={n}: {detail}"),
                    }
                }));
                notes.push(format!(
                    "n={n}: {} pairs, sum range [{}, {}], min witness {}, max witness {}",
                    ng.pairs, ng.min_sum, ng.max_sum, ng.min_witness, ng.max_witness
                ));
            }
            if n_max < 4 {
                notes.push("no applicable n (needs n >= 4)".into());
            }
        }
        Claim::DiameterFormula => {
            for n in 1..=n_max {
                let graphs = enumerate_connected(n, None).expect("within cap");
                scanned += graphs.len() as u64;
                collect_failures(&graphs, &mut counterexamples, check_diameter_cap);
                // Attainment: at every size some graph reaches the formula.
                let per_graph: Vec<(usize, u32, String)> = graphs
                    .par_iter()
                    .map(|g| (g.m(), g.diameter().expect("connected"), write_graph6(g)))
                    .collect();
                let mut best: std::collections::BTreeMap<usize, (u32, String)> =
                    std::collections::BTreeMap::new();
                for (m, d, g6) in per_graph {
                    let slot = best.entry(m).or_insert_with(|| (d, g6.clone()));
                    if d > slot.0 || (d == slot.0 && g6 < slot.1) {
                        *slot = (d, g6);
                    }
                }
                for (m, (d, g6)) in best {
                    let want = max_diameter(n, m).expect("size in range");
                    if d != want {
                        counterexamples.push(Counterexample {
                            graph6: g6,
                            detail: format!(
                                "n={n} m={m}: best diameter {d} does not attain formula {want}"
                            ),
                        });
                    }
                }
            }
        }
        Claim::OracleAgreement => {
            for n in 1..=n_max {
                let graphs = enumerate_connected(n, None).expect("within cap");
                scanned += graphs.len() as u64;
                collect_failures(&graphs, &mut counterexamples, check_oracle_agreement);
            }
        }
        Claim::BoundsSandwich => {
            let mut degree_findings = Vec::new();
            for n in 1..=n_max {
                let graphs = enumerate_connected(n, None).expect("within cap");
                scanned += graphs.len() as u64;
                collect_failures(&graphs, &mut counterexamples, check_sandwich);
                degree_findings.extend(min_degree_findings(&graphs));
            }
            push_degree_notes(&mut notes, degree_findings);
        }
    }

    Ok(report(claim, n_max, scanned, counterexamples, notes, start))
}

fn run_check_corpus(claim: Claim, n_max: usize, corpus: &[Graph]) -> Result<CheckReport, CheckError> {
    if claim == Claim::Cycles {
        return Err(CheckError::CyclesWithCorpus);
    }
    let start = Instant::now();
    let mut notes = Vec::new();

    // Per-graph caps: the solver handles up to DEFAULT_CAP, the oracle less.
    let cap = match claim {
        Claim::OracleAgreement => ORACLE_MAX,
        Claim::DiameterFormula => crate::MAX_VERTICES,
        _ => DEFAULT_CAP,
    };
    let mut in_scope: Vec<&Graph> = Vec::new();
    let mut skipped_large = 0u64;
    let mut skipped_disconnected = 0u64;
    for g in corpus {
        if g.n() > n_max {
            skipped_large += 1;
            continue;
        }
        if g.n() > cap {
            return Err(CheckError::CorpusGraphTooLarge {
                graph6: write_graph6(g),
                n: g.n(),
                cap,
                claim: claim.id(),
            });
        }
        if !g.is_connected() {
            skipped_disconnected += 1;
            continue;
        }
        in_scope.push(g);
    }
    if skipped_large > 0 {
        notes.push(format!("skipped {skipped_large} corpus graphs with n > {n_max}"));
    }
    if skipped_disconnected > 0 {
        notes.push(format!(
            "skipped {skipped_disconnected} disconnected corpus graphs (mvc undefined)"
        ));
    }

    let per_graph: fn(&Graph) -> Vec<Counterexample> = match claim {
        Claim::Prop23 => check_prop23,
        Claim::ErdosGallai => {
            notes.push("corpus mode checks the per-size bound only; sharpness and f_v thresholds need the full enumeration".into());
            check_eg_bound_only
        }
        Claim::NordhausGaddum => {
            notes.push("corpus mode checks each graph's pair; attainment of the extremes needs the full enumeration".into());
            check_ng_per_graph
        }
        Claim::DiameterFormula => {
            notes.push("corpus mode checks diameter <= formula only; attainment needs the full enumeration".into());
            check_diameter_cap
        }
        Claim::OracleAgreement => check_oracle_agreement,
        Claim::BoundsSandwich => check_sandwich,
        Claim::Cycles => unreachable!("rejected above"),
    };
    let mut counterexamples = Vec::new();
    let nested: Vec<Vec<Counterexample>> = in_scope.par_iter().map(|g| per_graph(g)).collect();
    counterexamples.extend(nested.into_iter().flatten());
    if claim == Claim::BoundsSandwich {
        let owned: Vec<Graph> = in_scope.iter().map(|&g| g.clone()).collect();
        push_degree_notes(&mut notes, min_degree_findings(&owned));
    }

    Ok(report(claim, n_max, in_scope.len() as u64, counterexamples, notes, start))
}

fn collect_failures(
    graphs: &[Graph],
    out: &mut Vec<Counterexample>,
    f: fn(&Graph) -> Vec<Counterexample>,
) {
    let nested: Vec<Vec<Counterexample>> = graphs.par_iter().map(f).collect();
    out.extend(nested.into_iter().flatten());
}

fn check_prop23(g: &Graph) -> Vec<Counterexample> {
    let mut out = Vec::new();
    let n = g.n() as u32;
    let d = g.diameter().expect("connected");
    let value = mvc_exact(g).expect("within cap").value;
    if (value == n) != (d <= 2) {
        out.push(Counterexample {
            graph6: write_graph6(g),
            detail: format!("mvc = {value}, n = {n}, diameter = {d}: breaks mvc = n iff d <= 2"),
        });
    }
    if d >= 3 && value > n - d + 2 {
        out.push(Counterexample {
            graph6: write_graph6(g),
            detail: format!("mvc = {value} exceeds n - d + 2 = {}", n - d + 2),
        });
    }
    out
}

fn check_diameter_cap(g: &Graph) -> Vec<Counterexample> {
    let d = g.diameter().expect("connected");
    let cap = max_diameter(g.n(), g.m()).expect("connected size");
    if d > cap {
        vec![Counterexample {
            graph6: write_graph6(g),
            detail: format!("diameter {d} exceeds the (n, m) maximum {cap}"),
        }]
    } else {
        Vec::new()
    }
}

fn check_oracle_agreement(g: &Graph) -> Vec<Counterexample> {
    let fast = mvc_exact(g).expect("within cap").value;
    let slow = mvc_oracle(g).expect("within oracle cap");
    if fast != slow {
        vec![Counterexample {
            graph6: write_graph6(g),
            detail: format!("solver says {fast}, partition oracle says {slow}"),
        }]
    } else {
        Vec::new()
    }
}

fn check_sandwich(g: &Graph) -> Vec<Counterexample> {
    let mut out = Vec::new();
    let lo = lower_bound_spanning_tree(g).expect("connected");
    let hi = diameter_upper_bound(g).expect("connected");
    let value = mvc_exact(g).expect("within cap").value;
    if !(lo <= value && value <= hi) {
        out.push(Counterexample {
            graph6: write_graph6(g),
            detail: format!("bounds {lo} <= mvc <= {hi} broken by mvc = {value}"),
        });
    }
    out
}

fn check_eg_bound_only(g: &Graph) -> Vec<Counterexample> {
    let Some(bound) = eg_lower_bound(g.n(), g.m()) else {
        return Vec::new(); // n < 3 has no claim
    };
    let value = mvc_exact(g).expect("within cap").value;
    if value < bound {
        vec![Counterexample {
            graph6: write_graph6(g),
            detail: format!("mvc = {value} below the (n, m) lower bound {bound}"),
        }]
    } else {
        Vec::new()
    }
}

fn check_ng_per_graph(g: &Graph) -> Vec<Counterexample> {
    let n = g.n();
    if n < 4 {
        return Vec::new();
    }
    let gc = g.complement();
    if !gc.is_connected() {
        return Vec::new(); // out of scope
    }
    let mut out = Vec::new();
    let record = ng_sum(g).expect("both connected, within cap");
    let (lo, hi) = if n == 4 { (6, 6) } else { (n as u32 + 3, 2 * n as u32) };
    if record.sum < lo || record.sum > hi {
        out.push(Counterexample {
            graph6: record.graph6.clone(),
            detail: format!("sum {} outside [{lo}, {hi}]", record.sum),
        });
    }
    for (name, side, other) in [("graph", g, &gc), ("complement", &gc, g)] {
        let d = side.diameter().expect("connected");
        if d > 3 && other.diameter() != Some(2) {
            out.push(Counterexample {
                graph6: record.graph6.clone(),
                detail: format!(
                    "{name} has diameter {d} > 3 but its complement has diameter {:?}, want 2",
                    other.diameter()
                ),
            });
        } else if d == 3 && !has_spanning_double_star(other) {
            out.push(Counterexample {
                graph6: record.graph6.clone(),
                detail: format!(
                    "{name} has diameter 3 but its complement lacks a spanning double star"
                ),
            });
        }
    }
    out
}

/// Minimum-degree bound violations are recorded as findings, not failures:
/// the bound ladder is stated for general n and small orders may undercut it.
fn min_degree_findings(graphs: &[Graph]) -> Vec<String> {
    let nested: Vec<Option<String>> = graphs
        .par_iter()
        .map(|g| {
            let bound = min_degree_lower_bound(g.n(), g.min_degree())?;
            let value = mvc_exact(g).expect("within cap").value;
            if i64::from(value) < bound.ceil {
                Some(format!(
                    "{}: mvc = {value} under the min-degree bound {bound} (ceil {})",
                    write_graph6(g),
                    bound.ceil
                ))
            } else {
                None
            }
        })
        .collect();
    nested.into_iter().flatten().collect()
}

fn push_degree_notes(notes: &mut Vec<String>, findings: Vec<String>) {
    if findings.is_empty() {
        return;
    }
    notes.push(format!(
        "{} graphs fall below the min-degree bound ladder (recorded as findings, not failures)",
        findings.len()
    ));
    notes.extend(findings.into_iter().take(10));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for claim in Claim::ALL {
            assert_eq!(claim.id().parse::<Claim>().unwrap(), claim);
        }
        assert!(matches!(
            "wrong".parse::<Claim>(),
            Err(CheckError::UnknownClaim(_))
        ));
    }

    #[test]
    fn cycles_pass_quickly() {
        let r = run_check(Claim::Cycles, 12, None).unwrap();
        assert!(r.pass);
        assert_eq!(r.scanned, 10);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn small_builtin_checks_pass() {
        for claim in [
            Claim::Prop23,
            Claim::ErdosGallai,
            Claim::NordhausGaddum,
            Claim::DiameterFormula,
            Claim::OracleAgreement,
            Claim::BoundsSandwich,
        ] {
            let r = run_check(claim, 5, None).unwrap();
            assert!(r.pass, "{claim}: {:?}", r.counterexamples);
        }
    }

    #[test]
    fn scanned_counts_match_enumeration() {
        let r = run_check(Claim::Prop23, 6, None).unwrap();
        assert_eq!(r.scanned, 1 + 1 + 2 + 6 + 21 + 112);
        let r = run_check(Claim::NordhausGaddum, 5, None).unwrap();
        // One pair at n=4; n=5 both-connected pairs.
        assert!(r.scanned >= 1);
    }

    #[test]
    fn cap_violations_are_usage_errors() {
        assert!(matches!(
            run_check(Claim::OracleAgreement, 9, None),
            Err(CheckError::NMaxTooLarge { cap: 8, .. })
        ));
        assert!(matches!(
            run_check(Claim::Cycles, 13, None),
            Err(CheckError::NMaxTooLarge { cap: 12, .. })
        ));
    }

    #[test]
    fn corpus_mode_runs_per_graph_predicates() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.g6");
        std::fs::write(&path, ">>graph6<<\nDhc\nC~\nA_\n").unwrap();
        let r = run_check(Claim::Prop23, 8, Some(&path)).unwrap();
        assert!(r.pass);
        assert_eq!(r.scanned, 3);

        let r = run_check(Claim::ErdosGallai, 8, Some(&path)).unwrap();
        assert!(r.pass);
        assert!(r.notes.iter().any(|s| s.contains("sharpness")));

        assert!(matches!(
            run_check(Claim::Cycles, 8, Some(&path)),
            Err(CheckError::CyclesWithCorpus)
        ));
    }

    #[test]
    fn corpus_skips_out_of_range_graphs() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.g6");
        // K_2, a disconnected pair, and C_5.
        std::fs::write(&path, "A_\nA?\nDhc\n").unwrap();
        let r = run_check(Claim::BoundsSandwich, 4, Some(&path)).unwrap();
        assert_eq!(r.scanned, 1); // only K_2 is connected and within n_max
        assert_eq!(r.notes.len(), 2);
    }
}
