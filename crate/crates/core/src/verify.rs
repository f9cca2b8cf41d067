//! Formula-versus-counting sweeps, seeded random join suites, and the reports
//! they produce.
//!
//! Every sweep fans out per `n` (or per case) on the rayon pool and collects in
//! input order, so reports are identical regardless of scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{
    as_pq, as_pq2, pq2_expansion, szeged_cyclic_formula, szeged_cyclic_pq, szeged_cyclic_pq2,
    szeged_cyclic_prime_power, szeged_cyclic_statement_variant, szeged_dihedral_formula,
    szeged_dihedral_pq,
};
use crate::graph::SimpleGraph;
use crate::join::{build_generalized_join, szeged_join_corrected, szeged_join_formula, JoinSpec};
use crate::number_theory::factorize;
use crate::power_graph::{check_group_n, power_graph_cyclic, power_graph_dihedral};

/// Inclusive range of group parameters, `3 ≤ lo ≤ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupRange {
    pub lo: u64,
    pub hi: u64,
}

impl GroupRange {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        check_group_n(lo)?;
        check_group_n(hi)?;
        if lo > hi {
            return Err(Error::TooSmall {
                what: "range upper bound",
                value: hi,
                min: lo,
            });
        }
        Ok(GroupRange { lo, hi })
    }

    fn values(&self) -> Vec<u64> {
        (self.lo..=self.hi).collect()
    }
}

/// One formula-versus-counting comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub n: u64,
    pub brute: u64,
    pub formula: u64,
    /// A second closed form shown alongside (see each sweep for which).
    pub variant: Option<u64>,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerifyRecord {
    pub fn new(n: u64, brute: u64, formula: u64, variant: Option<u64>) -> Self {
        VerifyRecord {
            n,
            brute,
            formula,
            variant,
            matched: brute == formula,
            detail: None,
        }
    }

    /// True when a variant is present and differs from the brute value.
    pub fn variant_diverges(&self) -> bool {
        self.variant.is_some_and(|v| v != self.brute)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    /// Values of `n` whose variant column differs from the brute value.
    pub variant_divergences: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub variant_label: Option<String>,
    pub records: Vec<VerifyRecord>,
    pub summary: Summary,
    pub findings: Vec<String>,
}

impl VerifyReport {
    pub fn new(check: &str, variant_label: Option<&str>, records: Vec<VerifyRecord>) -> Self {
        let matched = records.iter().filter(|r| r.matched).count();
        let summary = Summary {
            total: records.len(),
            matched,
            mismatched: records.len() - matched,
            variant_divergences: records
                .iter()
                .filter(|r| r.variant_diverges())
                .map(|r| r.n)
                .collect(),
        };
        VerifyReport {
            check: check.to_string(),
            variant_label: variant_label.map(str::to_string),
            records,
            summary,
            findings: Vec::new(),
        }
    }

    pub fn all_match(&self) -> bool {
        self.summary.mismatched == 0
    }

    /// `n,brute,formula,variant,match`, one row per record; an absent variant
    /// is an empty cell.
    pub fn render_csv(&self) -> Result<String> {
        if self.records.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut out = String::from("n,brute,formula,variant,match\n");
        for r in &self.records {
            let variant = r.variant.map(|v| v.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{}",
                r.n, r.brute, r.formula, variant, r.matched
            )
            .unwrap();
        }
        Ok(out)
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible") + "\n"
    }
}

fn sweep<F>(values: Vec<u64>, f: F) -> Result<Vec<VerifyRecord>>
where
    F: Fn(u64) -> Result<VerifyRecord> + Sync + Send,
{
    values.into_par_iter().map(f).collect()
}

fn nonempty(values: Vec<u64>) -> Result<Vec<u64>> {
    if values.is_empty() {
        return Err(Error::EmptySelection);
    }
    Ok(values)
}

/// Cyclic closed form against counting on `P(Z_n)`; the variant column is the
/// statement form with the `n − ell − φ(d_i) + 1` factor.
pub fn verify_cyclic(range: GroupRange) -> Result<VerifyReport> {
    let records = sweep(range.values(), |n| {
        let brute = power_graph_cyclic(n)?.szeged_index()?;
        Ok(VerifyRecord::new(
            n,
            brute,
            szeged_cyclic_formula(n)?,
            Some(szeged_cyclic_statement_variant(n)?),
        ))
    })?;
    let mut report = VerifyReport::new("t3", Some("statement"), records);
    let divergent = &report.summary.variant_divergences;
    if let Some(first) = divergent.first() {
        report.findings.push(format!(
            "statement form differs from direct counting at {} of {} values; first at n = {first}",
            divergent.len(),
            report.summary.total
        ));
        if let Some(n) = divergent.iter().find(|&&n| {
            let f = factorize(n).expect("n >= 3");
            !f.is_squarefree() && !f.is_prime_power()
        }) {
            report.findings.push(format!(
                "first divergence at a non-squarefree, non-prime-power order: n = {n}"
            ));
        }
    } else {
        report
            .findings
            .push("statement form agrees with direct counting on the whole range".to_string());
    }
    Ok(report)
}

/// Dihedral closed form against counting on `P(D_n)`.
pub fn verify_dihedral(range: GroupRange) -> Result<VerifyReport> {
    let records = sweep(range.values(), |n| {
        let brute = power_graph_dihedral(n)?.szeged_index()?;
        Ok(VerifyRecord::new(
            n,
            brute,
            szeged_dihedral_formula(n)?,
            None,
        ))
    })?;
    Ok(VerifyReport::new("dg", None, records))
}

/// Prime-power orders in range: `C(n, 2)` against counting.
pub fn verify_prime_power(range: GroupRange) -> Result<VerifyReport> {
    let values = range
        .values()
        .into_iter()
        .filter(|&n| factorize(n).expect("n >= 3").is_prime_power())
        .collect();
    let records = sweep(nonempty(values)?, |n| {
        let (p, m) = factorize(n)?.factors[0];
        let brute = power_graph_cyclic(n)?.szeged_index()?;
        Ok(VerifyRecord::new(
            n,
            brute,
            szeged_cyclic_prime_power(p, m)?,
            None,
        ))
    })?;
    Ok(VerifyReport::new("prime-power", None, records))
}

/// `n = pq` in range: the pq form against counting; variant is the general
/// cyclic closed form.
pub fn verify_pq(range: GroupRange) -> Result<VerifyReport> {
    let values = range
        .values()
        .into_iter()
        .filter(|&n| as_pq(n).is_some())
        .collect();
    let records = sweep(nonempty(values)?, |n| {
        let (p, q) = as_pq(n).expect("filtered");
        let brute = power_graph_cyclic(n)?.szeged_index()?;
        Ok(VerifyRecord::new(
            n,
            brute,
            szeged_cyclic_pq(p, q)?,
            Some(szeged_cyclic_formula(n)?),
        ))
    })?;
    Ok(VerifyReport::new("pq", Some("general"), records))
}

/// `n = pq²` in range: the structured form against counting; variant is the
/// fully expanded polynomial. Polynomial mismatches are reported as findings.
pub fn verify_pq2(range: GroupRange) -> Result<VerifyReport> {
    let values: Vec<u64> = range
        .values()
        .into_iter()
        .filter(|&n| as_pq2(n).is_some())
        .collect();
    let values = nonempty(values)?;
    let expansions = values
        .iter()
        .map(|&n| {
            let (p, q) = as_pq2(n).expect("filtered");
            pq2_expansion(p, q).map(|e| (n, p, q, e))
        })
        .collect::<Result<Vec<_>>>()?;
    let records = sweep(values, |n| {
        let (p, q) = as_pq2(n).expect("filtered");
        let brute = power_graph_cyclic(n)?.szeged_index()?;
        let expanded = pq2_expansion(p, q)?.total_polynomial;
        Ok(VerifyRecord::new(
            n,
            brute,
            szeged_cyclic_pq2(p, q)?,
            u64::try_from(expanded).ok(),
        ))
    })?;
    let mut report = VerifyReport::new("pq2", Some("expanded"), records);
    let errata: Vec<_> = expansions
        .iter()
        .filter(|(.., e)| !e.consistent())
        .collect();
    if errata.is_empty() {
        report.findings.push(format!(
            "expanded polynomials agree with the structured form for all {} values",
            expansions.len()
        ));
    }
    for (n, p, q, e) in errata {
        report.findings.push(format!(
            "erratum at n = {n} (p = {p}, q = {q}): generator bracket {} vs {}, divisor edges {} vs {}",
            e.generator_bracket,
            e.generator_bracket_polynomial,
            e.divisor_edges,
            e.divisor_edges_polynomial
        ));
    }
    Ok(report)
}

/// `n = pq` in range: the dihedral pq form against counting; variant is the
/// general dihedral closed form.
pub fn verify_dihedral_pq(range: GroupRange) -> Result<VerifyReport> {
    let values = range
        .values()
        .into_iter()
        .filter(|&n| as_pq(n).is_some())
        .collect();
    let records = sweep(nonempty(values)?, |n| {
        let (p, q) = as_pq(n).expect("filtered");
        let brute = power_graph_dihedral(n)?.szeged_index()?;
        Ok(VerifyRecord::new(
            n,
            brute,
            szeged_dihedral_pq(p, q)?,
            Some(szeged_dihedral_formula(n)?),
        ))
    })?;
    Ok(VerifyReport::new("dpq", Some("general"), records))
}

/// Which component graphs a random join suite draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    /// Random connected graphs.
    Connected,
    Complete,
}

/// Random labelled tree: vertex `i` attaches to a uniform earlier vertex,
/// then labels are shuffled.
pub fn random_tree<R: Rng>(rng: &mut R, order: usize) -> Result<SimpleGraph> {
    let mut perm: Vec<usize> = (0..order).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = (1..order)
        .map(|v| (perm[v], perm[rng.gen_range(0..v)]))
        .collect();
    SimpleGraph::from_edge_list(order, edges)
}

/// Random spanning tree plus each remaining pair with probability 1/2.
pub fn random_connected_graph<R: Rng>(rng: &mut R, order: usize) -> Result<SimpleGraph> {
    let tree = random_tree(rng, order)?;
    let mut edges = tree.edges().to_vec();
    for u in 0..order {
        for v in u + 1..order {
            if !tree.has_edge(u, v) && rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edge_list(order, edges)
}

/// Random graph with a uniformly chosen vertex joined to all others.
pub fn random_universal_base<R: Rng>(rng: &mut R, order: usize) -> Result<SimpleGraph> {
    let hub = rng.gen_range(0..order);
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if u == hub || v == hub || rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edge_list(order, edges)
}

/// Base of order `1..=max_base` with a universal vertex, components of order
/// `1..=max_component`.
pub fn random_join_spec<R: Rng>(
    rng: &mut R,
    max_base: usize,
    max_component: usize,
    kind: ComponentKind,
) -> Result<JoinSpec> {
    let order = rng.gen_range(1..=max_base);
    let base = random_universal_base(rng, order)?;
    let components = (0..base.order())
        .map(|_| {
            let order = rng.gen_range(1..=max_component);
            match kind {
                ComponentKind::Connected => random_connected_graph(rng, order),
                ComponentKind::Complete => SimpleGraph::complete(order),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    JoinSpec::new(base, components)
}

/// Seeded join suite: `cases` random specs (bases of order ≤ 6 with a
/// universal vertex, components of order ≤ 6). `formula` is the classical
/// closed form, `variant` the corrected one. Mismatched records carry the
/// spec JSON in `detail`.
pub fn verify_join_random(cases: usize, seed: u64, kind: ComponentKind) -> Result<VerifyReport> {
    if cases == 0 {
        return Err(Error::EmptySelection);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let specs = (0..cases)
        .map(|_| random_join_spec(&mut rng, 6, 6, kind))
        .collect::<Result<Vec<_>>>()?;
    let records = specs
        .par_iter()
        .enumerate()
        .map(|(case, spec)| {
            let brute = build_generalized_join(spec)?.graph.szeged_index()?;
            let mut record = VerifyRecord::new(
                case as u64,
                brute,
                szeged_join_formula(spec)?,
                Some(szeged_join_corrected(spec)?),
            );
            if !record.matched || record.variant_diverges() {
                record.detail = Some(spec.to_json());
            }
            Ok(record)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport::new("t1", Some("corrected"), records);
    let non_complete = specs
        .iter()
        .filter(|s| s.components.iter().any(|g| !g.is_complete()))
        .count();
    report.findings.push(format!(
        "{non_complete} of {cases} cases have a non-complete component"
    ));
    if let Some(r) = report.records.iter().find(|r| !r.matched) {
        report.findings.push(format!(
            "closed form differs from direct counting in {} cases; first is case {} ({} vs {})",
            report.summary.mismatched, r.n, r.formula, r.brute
        ));
    }
    let corrected_bad = report.summary.variant_divergences.len();
    report.findings.push(format!(
        "corrected form differs from direct counting in {corrected_bad} cases"
    ));
    Ok(report)
}

/// Non-isomorphic connected graphs of order `1..=max_order`, by canonical
/// minimum edge mask over all relabelings. Practical up to order 5.
pub fn connected_graphs_up_to(max_order: usize) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        let pairs: Vec<(usize, usize)> = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        let index_of: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let perms = permutations(order);
        let mut seen = BTreeSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let canonical = perms
                .iter()
                .map(|perm| {
                    edges.iter().fold(0u64, |acc, &(u, v)| {
                        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                        acc | 1 << index_of[&(a, b)]
                    })
                })
                .min()
                .unwrap_or(0);
            if !seen.insert(canonical) {
                continue;
            }
            let g = SimpleGraph::from_edge_list(order, edges).expect("valid pairs");
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// Aggregate for one (base diameter, component completeness) class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorationClass {
    pub base_diameter: u32,
    pub base_has_universal_vertex: bool,
    pub components_complete: bool,
    pub cases: usize,
    pub closed_form_mismatches: usize,
    pub corrected_mismatches: usize,
    pub first_closed_form_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinExploration {
    pub max_base_order: usize,
    pub max_component_order: usize,
    pub classes: Vec<ExplorationClass>,
}

impl JoinExploration {
    pub fn render_csv(&self) -> String {
        let mut out = String::from(
            "base_diameter,universal_vertex,components_complete,cases,closed_form_mismatches,corrected_mismatches\n",
        );
        for c in &self.classes {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                c.base_diameter,
                c.base_has_universal_vertex,
                c.components_complete,
                c.cases,
                c.closed_form_mismatches,
                c.corrected_mismatches
            )
            .unwrap();
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("exploration serialization is infallible") + "\n"
    }
}

/// Exhaustive search over every connected base up to `max_base_order` and
/// every assignment of connected components up to `max_component_order`,
/// tallying where each closed form departs from direct counting. Reports
/// only; nothing is asserted.
pub fn explore_join_formula(
    max_base_order: usize,
    max_component_order: usize,
) -> Result<JoinExploration> {
    if max_base_order == 0 || max_component_order == 0 {
        return Err(Error::EmptySelection);
    }
    if max_base_order > 5 || max_component_order > 4 {
        return Err(Error::OrderTooLarge {
            order: max_base_order.max(max_component_order),
            max: 5,
        });
    }
    let bases = connected_graphs_up_to(max_base_order);
    let parts = connected_graphs_up_to(max_component_order);
    let mut specs = Vec::new();
    for base in &bases {
        let mut choice = vec![0usize; base.order()];
        loop {
            let components = choice.iter().map(|&c| parts[c].clone()).collect();
            specs.push(JoinSpec::new(base.clone(), components)?);
            let Some(slot) = choice.iter().position(|&c| c + 1 < parts.len()) else {
                break;
            };
            choice[slot] += 1;
            choice[..slot].iter_mut().for_each(|c| *c = 0);
        }
    }
    let outcomes = specs
        .par_iter()
        .map(|spec| {
            let brute = build_generalized_join(spec)?.graph.szeged_index()?;
            let key = (
                spec.base.diameter()?,
                spec.base.universal_vertex().is_some(),
                spec.components.iter().all(SimpleGraph::is_complete),
            );
            Ok((
                key,
                szeged_join_formula(spec)? != brute,
                szeged_join_corrected(spec)? != brute,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut classes: BTreeMap<(u32, bool, bool), ExplorationClass> = BTreeMap::new();
    for (spec, (key, closed_bad, corrected_bad)) in specs.iter().zip(outcomes) {
        let class = classes.entry(key).or_insert_with(|| ExplorationClass {
            base_diameter: key.0,
            base_has_universal_vertex: key.1,
            components_complete: key.2,
            cases: 0,
            closed_form_mismatches: 0,
            corrected_mismatches: 0,
            first_closed_form_counterexample: None,
        });
        class.cases += 1;
        class.closed_form_mismatches += usize::from(closed_bad);
        class.corrected_mismatches += usize::from(corrected_bad);
        if closed_bad && class.first_closed_form_counterexample.is_none() {
            class.first_closed_form_counterexample = Some(spec.to_json());
        }
    }
    Ok(JoinExploration {
        max_base_order,
        max_component_order,
        classes: classes.into_values().collect(),
    })
}

/// Per-`n` Wiener and Szeged values of both power graph families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexRow {
    pub n: u64,
    pub wiener_cyclic: u64,
    pub szeged_cyclic: u64,
    pub wiener_dihedral: u64,
    pub szeged_dihedral: u64,
}

pub fn index_table(range: GroupRange) -> Result<Vec<IndexRow>> {
    range
        .values()
        .into_par_iter()
        .map(|n| {
            let cyclic = power_graph_cyclic(n)?;
            let dihedral = power_graph_dihedral(n)?;
            Ok(IndexRow {
                n,
                wiener_cyclic: cyclic.wiener_index()?,
                szeged_cyclic: cyclic.szeged_index()?,
                wiener_dihedral: dihedral.wiener_index()?,
                szeged_dihedral: dihedral.szeged_index()?,
            })
        })
        .collect()
}

pub fn render_index_table(rows: &[IndexRow]) -> String {
    let mut out = String::from("n,wiener_zn,szeged_zn,wiener_dn,szeged_dn\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.n, r.wiener_cyclic, r.szeged_cyclic, r.wiener_dihedral, r.szeged_dihedral
        )
        .unwrap();
    }
    out
}
