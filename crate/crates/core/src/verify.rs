//! Exhaustive checking of the extremal bounds and the monotonicity of the
//! edge moves against every free tree of each order.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::degseq::DegreeSequence;
use crate::enumerate::Catalogue;
use crate::error::{Error, Result};
use crate::extremal::{
    balanced_counts, balanced_identities_hold, construct_extremal, printed_balanced_counts, Direction, FamilyKind,
    Population, Theorem,
};
use crate::indices::{approx_eq, sei_window_lower, tolerant_sign, Index, IndexKind, IndexRegime, SeiRegime};
use crate::transforms::{observed_delta, predicted_delta, TransformKind};

/// Cap on counterexamples listed per monotonicity row.
const MAX_LISTED_COUNTEREXAMPLES: usize = 5;

pub fn default_alpha_grid() -> Vec<f64> {
    vec![-1.0, -0.5, 0.5, 2.0, 3.0]
}

pub fn default_a_grid() -> Vec<f64> {
    vec![0.2, 0.3, sei_window_lower() + 0.01, 0.6, 0.9, 1.5, 2.0]
}

/// Builds the index list for a grid, rejecting invalid parameters.
pub fn index_grid(alphas: &[f64], bases: &[f64]) -> Result<Vec<Index>> {
    alphas
        .iter()
        .map(|&x| Index::r0(x))
        .chain(bases.iter().map(|&a| Index::sei(a)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Confirmed,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub degrees: DegreeSequence,
    pub code: CanonicalCode,
    pub edges: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    /// one realization per optimal degree sequence, ordered by sequence
    pub witnesses: Vec<Witness>,
}

/// Exact optimum of `index` over the trees of `population` found in the
/// catalogue, with the optimizing degree sequences.
pub fn oracle_extremum(
    catalogue: &Catalogue,
    population: &Population,
    index: &Index,
    direction: Direction,
) -> Result<OracleResult> {
    let values: Vec<(f64, usize)> = catalogue
        .degree_classes()
        .into_iter()
        .filter(|(d, _)| population.contains(d))
        .map(|(d, first)| (index.of_degrees(&d), first))
        .collect();
    let best = values
        .iter()
        .map(|&(v, _)| v)
        .reduce(|x, y| match direction {
            Direction::Min => x.min(y),
            Direction::Max => x.max(y),
        })
        .ok_or_else(|| Error::EmptyFamily(population.to_string()))?;
    let witnesses = values
        .iter()
        .filter(|&&(v, _)| approx_eq(v, best))
        .map(|&(_, i)| {
            let r = &catalogue.records[i];
            Witness {
                degrees: r.degrees.clone(),
                code: r.code.clone(),
                edges: r.tree.to_edge_list(),
            }
        })
        .collect();
    Ok(OracleResult { value: best, witnesses })
}

/// Standalone oracle that enumerates the population itself.
pub fn oracle_extremum_for(population: &Population, index: &Index, direction: Direction) -> Result<OracleResult> {
    let catalogue = Catalogue::build(population.n())?;
    oracle_extremum(&catalogue, population, index, direction)
}

/// Verdict for one `(theorem, n, param, index)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub n: usize,
    pub param: Option<usize>,
    pub index: IndexKind,
    pub index_param: f64,
    pub regime: String,
    pub direction: Direction,
    pub bound: f64,
    pub oracle: f64,
    pub bound_matches: bool,
    pub equality_set_matches: bool,
    pub verdict: Verdict,
    pub equality_degseq: DegreeSequence,
    /// constructed extremal tree evaluates to the bound
    pub construction_matches: bool,
    #[serde(skip)]
    pub witness_detail: Vec<Witness>,
    /// edge lists, one per optimal degree sequence
    pub witnesses: Vec<String>,
    pub witness_degseqs: Vec<DegreeSequence>,
    pub witness_codes: Vec<CanonicalCode>,
}

fn check_cell(
    catalogue: &Catalogue,
    theorem: Theorem,
    param: Option<usize>,
    index: &Index,
) -> Result<Option<TheoremReport>> {
    let n = catalogue.n;
    let bound = match theorem.bound(n, param, index) {
        Ok(b) => b,
        Err(Error::NoClaim { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let population = theorem.population(n, param)?;
    let oracle = oracle_extremum(catalogue, &population, index, bound.direction)?;
    let bound_matches = approx_eq(bound.value, oracle.value);
    let equality_set_matches = oracle.witnesses.len() == 1 && oracle.witnesses[0].degrees == bound.equality_degseq;
    let constructed = construct_extremal(theorem, n, param)?;
    let construction_matches =
        population.contains(&constructed.degree_sequence()) && approx_eq(index.of_tree(&constructed), bound.value);
    let verdict = if bound_matches && equality_set_matches {
        Verdict::Confirmed
    } else {
        Verdict::Refuted
    };
    Ok(Some(TheoremReport {
        theorem,
        n,
        param,
        index: index.kind(),
        index_param: index.param(),
        regime: index.regime().to_string(),
        direction: bound.direction,
        bound: bound.value,
        oracle: oracle.value,
        bound_matches,
        equality_set_matches,
        verdict,
        equality_degseq: bound.equality_degseq,
        construction_matches,
        witnesses: oracle.witnesses.iter().map(|w| w.edges.clone()).collect(),
        witness_degseqs: oracle.witnesses.iter().map(|w| w.degrees.clone()).collect(),
        witness_codes: oracle.witnesses.iter().map(|w| w.code.clone()).collect(),
        witness_detail: oracle.witnesses,
    }))
}

/// Every cell of `theorem` over the catalogues' orders and the index grid,
/// skipping parameter regimes the theorem makes no claim about.
pub fn check_theorem(theorem: Theorem, catalogues: &[Catalogue], grid: &[Index]) -> Result<Vec<TheoremReport>> {
    let mut specs = Vec::new();
    for (ci, cat) in catalogues.iter().enumerate() {
        for param in theorem.params(cat.n) {
            for index in grid {
                specs.push((ci, param, *index));
            }
        }
    }
    let results: Vec<Result<Option<TheoremReport>>> = specs
        .par_iter()
        .map(|(ci, param, index)| check_cell(&catalogues[*ci], theorem, *param, index))
        .collect();
    let mut reports = Vec::new();
    for r in results {
        if let Some(report) = r? {
            reports.push(report);
        }
    }
    Ok(reports)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub code: CanonicalCode,
    pub edges: String,
    pub delta: f64,
}

/// Sign conformance of one move under one index parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityRow {
    pub lemma: TransformKind,
    pub index: IndexKind,
    pub index_param: f64,
    pub regime: String,
    pub claimed_sign: i8,
    /// whether acceptance rests on this row; other rows are recorded only
    pub asserted: bool,
    pub applicable: usize,
    pub conforming: usize,
    pub conformance: f64,
    /// moves whose closed-form delta disagreed with direct evaluation
    pub delta_mismatches: usize,
    /// moves that changed the family parameter they should preserve
    pub parameter_changes: usize,
    pub counterexample_count: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Whether a lemma's sign claim is one the proof supports soundly: every
/// R0 claim, every SEI claim for `a > 1`, and the two-degree-4 move on the
/// window.
pub fn sign_claim_asserted(kind: TransformKind, index: &Index) -> bool {
    match index.regime() {
        IndexRegime::R0(_) => true,
        IndexRegime::Sei(SeiRegime::AboveOne) => true,
        IndexRegime::Sei(SeiRegime::Window) => kind == TransformKind::S1AA,
        IndexRegime::Sei(SeiRegime::Low) => false,
    }
}

fn param_of(kind: FamilyKind, d: &DegreeSequence) -> usize {
    kind.param_of(d)
}

pub fn check_monotonicity(kind: TransformKind, catalogues: &[Catalogue], grid: &[Index]) -> Vec<MonotonicityRow> {
    let moves: Vec<_> = catalogues
        .iter()
        .flat_map(|c| c.records.iter())
        .filter_map(|r| kind.apply(&r.tree).ok().map(|m| (r, m)))
        .collect();
    grid.iter()
        .filter_map(|index| {
            let claimed = kind.claimed_sign(index)?;
            let mut row = MonotonicityRow {
                lemma: kind,
                index: index.kind(),
                index_param: index.param(),
                regime: index.regime().to_string(),
                claimed_sign: claimed,
                asserted: sign_claim_asserted(kind, index),
                applicable: moves.len(),
                conforming: 0,
                conformance: 1.0,
                delta_mismatches: 0,
                parameter_changes: 0,
                counterexample_count: 0,
                counterexamples: Vec::new(),
            };
            for (record, m) in &moves {
                let observed = observed_delta(m, index);
                let predicted = predicted_delta(m, index);
                let scale = index.of_tree(&m.before).abs().max(index.of_tree(&m.after).abs());
                if tolerant_sign(observed - predicted, scale) != 0 {
                    row.delta_mismatches += 1;
                }
                let preserved = kind.preserves();
                if param_of(preserved, &m.before.degree_sequence()) != param_of(preserved, &m.after.degree_sequence()) {
                    row.parameter_changes += 1;
                }
                if tolerant_sign(observed, scale) == claimed {
                    row.conforming += 1;
                } else {
                    row.counterexample_count += 1;
                    if row.counterexamples.len() < MAX_LISTED_COUNTEREXAMPLES {
                        row.counterexamples.push(Counterexample {
                            code: record.code.clone(),
                            edges: record.tree.to_edge_list(),
                            delta: observed,
                        });
                    }
                }
            }
            if row.applicable > 0 {
                row.conformance = row.conforming as f64 / row.applicable as f64;
            }
            Some(row)
        })
        .collect()
}

/// Balanced internal-degree counts next to the printed count expressions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalancedAuditRow {
    pub n: usize,
    pub n1: usize,
    pub t: usize,
    pub count_t: usize,
    pub count_t1: usize,
    pub identities_hold: bool,
    pub printed_count_t: i64,
    pub printed_count_t1: i64,
    pub printed_identities_hold: bool,
}

pub fn balanced_counts_audit(n_lo: usize, n_hi: usize) -> Vec<BalancedAuditRow> {
    let mut rows = Vec::new();
    for n in n_lo.max(6)..=n_hi {
        for n1 in 3..=n - 2 {
            let c = balanced_counts(n, n1).expect("valid PT constraint");
            let (px, py) = printed_balanced_counts(n, n1);
            rows.push(BalancedAuditRow {
                n,
                n1,
                t: c.t,
                count_t: c.count_t,
                count_t1: c.count_t1,
                identities_hold: balanced_identities_hold(n, n1, c.t, c.count_t as i64, c.count_t1 as i64),
                printed_count_t: px,
                printed_count_t1: py,
                printed_identities_hold: balanced_identities_hold(n, n1, c.t, px, py),
            });
        }
    }
    rows
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub theorems: Vec<Theorem>,
    pub lemmas: Vec<TransformKind>,
    pub n_lo: usize,
    pub n_hi: usize,
    pub alpha_grid: Vec<f64>,
    pub a_grid: Vec<f64>,
    /// wall-clock timings make the document run-dependent
    pub include_timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            theorems: Theorem::ALL.to_vec(),
            lemmas: TransformKind::ALL.to_vec(),
            n_lo: 6,
            n_hi: 10,
            alpha_grid: default_alpha_grid(),
            a_grid: default_a_grid(),
            include_timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridEcho {
    pub theorems: Vec<Theorem>,
    pub lemmas: Vec<TransformKind>,
    pub n_lo: usize,
    pub n_hi: usize,
    pub alpha_grid: Vec<f64>,
    pub a_grid: Vec<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TallyRow {
    pub confirmed: usize,
    pub refuted: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub cells: usize,
    pub confirmed: usize,
    pub refuted: usize,
    /// keyed by `THEOREM/INDEX/regime`
    pub by_theorem_regime: BTreeMap<String, TallyRow>,
    pub asserted_monotonicity_rows: usize,
    pub asserted_monotonicity_failures: usize,
    pub balanced_printed_formula_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub enumeration_ms: u128,
    pub theorems_ms: u128,
    pub monotonicity_ms: u128,
}

/// The full verification document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub grid: GridEcho,
    pub summary: Summary,
    pub cells: Vec<TheoremReport>,
    pub monotonicity: Vec<MonotonicityRow>,
    pub balanced_counts_audit: Vec<BalancedAuditRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn build_catalogues(n_lo: usize, n_hi: usize) -> Result<Vec<Catalogue>> {
    (n_lo..=n_hi).into_par_iter().map(Catalogue::build).collect()
}

pub fn full_report(config: &VerifyConfig) -> Result<Report> {
    if config.n_lo > config.n_hi {
        return Err(Error::Constraint(format!(
            "empty range {}..{}",
            config.n_lo, config.n_hi
        )));
    }
    let grid = index_grid(&config.alpha_grid, &config.a_grid)?;

    let clock = Instant::now();
    let catalogues = build_catalogues(config.n_lo.max(2), config.n_hi)?;
    let enumeration_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let mut cells = Vec::new();
    for &theorem in &config.theorems {
        cells.extend(check_theorem(theorem, &catalogues, &grid)?);
    }
    let theorems_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let monotonicity: Vec<MonotonicityRow> = config
        .lemmas
        .par_iter()
        .map(|&kind| check_monotonicity(kind, &catalogues, &grid))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let monotonicity_ms = clock.elapsed().as_millis();

    let balanced_counts_audit = balanced_counts_audit(config.n_lo, config.n_hi);

    let mut by_theorem_regime: BTreeMap<String, TallyRow> = BTreeMap::new();
    for c in &cells {
        let tally = by_theorem_regime
            .entry(format!("{}/{}/{}", c.theorem, c.index, c.regime))
            .or_default();
        match c.verdict {
            Verdict::Confirmed => tally.confirmed += 1,
            Verdict::Refuted => tally.refuted += 1,
        }
    }
    let confirmed = cells.iter().filter(|c| c.verdict == Verdict::Confirmed).count();
    let asserted: Vec<_> = monotonicity.iter().filter(|r| r.asserted).collect();
    let summary = Summary {
        cells: cells.len(),
        confirmed,
        refuted: cells.len() - confirmed,
        by_theorem_regime,
        asserted_monotonicity_rows: asserted.len(),
        asserted_monotonicity_failures: asserted.iter().filter(|r| r.counterexample_count > 0).count(),
        balanced_printed_formula_failures: balanced_counts_audit
            .iter()
            .filter(|r| !r.printed_identities_hold)
            .count(),
    };

    Ok(Report {
        grid: GridEcho {
            theorems: config.theorems.clone(),
            lemmas: config.lemmas.clone(),
            n_lo: config.n_lo,
            n_hi: config.n_hi,
            alpha_grid: config.alpha_grid.clone(),
            a_grid: config.a_grid.clone(),
        },
        summary,
        cells,
        monotonicity,
        balanced_counts_audit,
        timings: config.include_timings.then_some(Timings {
            enumeration_ms,
            theorems_ms,
            monotonicity_ms,
        }),
    })
}

/// Flat CSV row mirroring the JSON cell fields.
#[derive(Debug, Serialize)]
struct CsvCell<'a> {
    theorem: Theorem,
    n: usize,
    param: Option<usize>,
    index: IndexKind,
    index_param: f64,
    regime: &'a str,
    direction: Direction,
    bound: f64,
    oracle: f64,
    bound_matches: bool,
    equality_set_matches: bool,
    verdict: Verdict,
    equality_degseq: String,
    construction_matches: bool,
    witnesses: String,
    witness_degseqs: String,
    witness_codes: String,
}

pub fn cells_to_csv(cells: &[TheoremReport]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for c in cells {
        let row = CsvCell {
            theorem: c.theorem,
            n: c.n,
            param: c.param,
            index: c.index,
            index_param: c.index_param,
            regime: &c.regime,
            direction: c.direction,
            bound: c.bound,
            oracle: c.oracle,
            bound_matches: c.bound_matches,
            equality_set_matches: c.equality_set_matches,
            verdict: c.verdict,
            equality_degseq: c.equality_degseq.to_string(),
            construction_matches: c.construction_matches,
            witnesses: c
                .witnesses
                .iter()
                .map(|w| w.replace('\n', ","))
                .collect::<Vec<_>>()
                .join(";"),
            witness_degseqs: c
                .witness_degseqs
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            witness_codes: c.witness_codes.iter().map(|d| d.to_hex()).collect::<Vec<_>>().join(";"),
        };
        writer
            .serialize(row)
            .map_err(|e| Error::Constraint(format!("csv: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Constraint(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Re-scan of every enumerated tree in the population: no tree beats the
/// oracle value and at least one attains it.
pub fn rescan_confirms(
    catalogue: &Catalogue,
    population: &Population,
    index: &Index,
    result: &OracleResult,
    direction: Direction,
) -> bool {
    let mut attained = false;
    for r in &catalogue.records {
        if !population.contains(&r.degrees) {
            continue;
        }
        let v = index.of_tree(&r.tree);
        if approx_eq(v, result.value) {
            attained = true;
            continue;
        }
        let beats = match direction {
            Direction::Min => v < result.value,
            Direction::Max => v > result.value,
        };
        if beats {
            return false;
        }
    }
    attained
        && result.witnesses.iter().all(|w| {
            let t = crate::tree::parse_tree(&w.edges).expect("witness edge list parses");
            canonical_code(&t) == w.code && approx_eq(index.of_tree(&t), result.value)
        })
}
