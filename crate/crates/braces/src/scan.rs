//! Corpus scanning: decode a graph6 stream, evaluate ordered predicate sets
//! per graph, and aggregate into a deterministic, serialisable report.
//!
//! Filters short-circuit left to right; checks are evaluated for every
//! graph that passes all filters. A predicate that runs out of budget marks
//! the graph inconclusive — recorded, never silently dropped. Reports are
//! byte-identical for identical inputs regardless of worker count.

use std::collections::BTreeMap;
use std::io::BufRead;

use serde::Serialize;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{factors, matching, pfaffian};

/// A named graph property usable in scan pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Cubic,
    Bipartite,
    Brace,
    GirthAtLeast(usize),
    TwoFactorHamiltonian,
    Pfaffian,
    NonPfaffian,
    /// |V| ≡ 2 (mod 4).
    OrderTwoModFour,
    CyclicallyFourConnected,
}

impl Predicate {
    pub fn name(&self) -> String {
        match self {
            Predicate::Cubic => "cubic".into(),
            Predicate::Bipartite => "bipartite".into(),
            Predicate::Brace => "brace".into(),
            Predicate::GirthAtLeast(k) => format!("girth>={k}"),
            Predicate::TwoFactorHamiltonian => "2fh".into(),
            Predicate::Pfaffian => "pfaffian".into(),
            Predicate::NonPfaffian => "non-pfaffian".into(),
            Predicate::OrderTwoModFour => "order=2mod4".into(),
            Predicate::CyclicallyFourConnected => "cyc4conn".into(),
        }
    }
}

impl std::str::FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Predicate> {
        match s {
            "cubic" => Ok(Predicate::Cubic),
            "bipartite" => Ok(Predicate::Bipartite),
            "brace" => Ok(Predicate::Brace),
            "2fh" => Ok(Predicate::TwoFactorHamiltonian),
            "pfaffian" => Ok(Predicate::Pfaffian),
            "non-pfaffian" => Ok(Predicate::NonPfaffian),
            "order=2mod4" => Ok(Predicate::OrderTwoModFour),
            "cyc4conn" => Ok(Predicate::CyclicallyFourConnected),
            _ => {
                if let Some(k) = s.strip_prefix("girth>=") {
                    let k: usize =
                        k.parse().map_err(|_| Error::UnknownPredicate(s.to_string()))?;
                    return Ok(Predicate::GirthAtLeast(k));
                }
                Err(Error::UnknownPredicate(s.to_string()))
            }
        }
    }
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

/// An ordered predicate list; evaluation short-circuits left to right.
#[derive(Debug, Clone, Default)]
pub struct PredicateSet(pub Vec<Predicate>);

impl PredicateSet {
    pub fn parse(names: &[&str]) -> Result<PredicateSet> {
        names.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>().map(PredicateSet)
    }

    pub fn names(&self) -> Vec<String> {
        self.0.iter().map(Predicate::name).collect()
    }
}

/// A property value recorded in a scan record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PropValue {
    Bool(bool),
    Int(i64),
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Evaluated predicate values plus auxiliary integers (e.g. girth).
    pub properties: BTreeMap<String, PropValue>,
    /// Edge-set witnesses, e.g. a disconnected 2-factor for a failed 2fh.
    pub witnesses: BTreeMap<String, Vec<(usize, usize)>>,
    /// Predicates whose evaluation exhausted a budget on this graph.
    pub budget_exceeded: Vec<String>,
    pub passed_filters: bool,
    pub survivor: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanAggregate {
    pub total: usize,
    pub passed_filters: usize,
    /// Indices of records passing all filters and all checks.
    pub survivors: Vec<usize>,
    pub inconclusive: usize,
    /// Per-predicate count of records where the predicate held.
    pub counts: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub schema: &'static str,
    pub filters: Vec<String>,
    pub checks: Vec<String>,
    pub records: Vec<ScanRecord>,
    pub aggregate: ScanAggregate,
}

pub const SCHEMA: &str = "braces-scan/1";

fn evaluate(g: &Graph, p: Predicate, budgets: &Budgets, rec: &mut ScanRecord) -> Result<bool> {
    let value = match p {
        Predicate::Cubic => g.is_cubic(),
        Predicate::Bipartite => g.bipartition().is_some(),
        Predicate::Brace => matching::is_brace(g),
        Predicate::GirthAtLeast(k) => {
            let girth = g.girth();
            rec.properties.insert(
                "girth".into(),
                PropValue::Int(girth.map_or(-1, |x| x as i64)),
            );
            girth.map_or(true, |x| x >= k)
        }
        Predicate::TwoFactorHamiltonian => {
            let verdict = factors::is_two_factor_hamiltonian(g, budgets.two_factors)?;
            if let Some(w) = verdict.witness {
                rec.witnesses.insert(p.name(), w.edges().to_vec());
            }
            verdict.holds
        }
        Predicate::Pfaffian => pfaffian::is_pfaffian(g, budgets)?,
        Predicate::NonPfaffian => !pfaffian::is_pfaffian(g, budgets)?,
        Predicate::OrderTwoModFour => g.n() % 4 == 2,
        Predicate::CyclicallyFourConnected => match g.is_cyclically_4_connected() {
            Ok(v) => v,
            // Not a connected cubic graph: the property simply does not hold.
            Err(Error::NotCubic) | Err(Error::NotConnected) => false,
            Err(e) => return Err(e),
        },
    };
    rec.properties.insert(p.name(), PropValue::Bool(value));
    Ok(value)
}

fn scan_one(
    index: usize,
    line: &str,
    g: &Graph,
    filters: &PredicateSet,
    checks: &PredicateSet,
    budgets: &Budgets,
) -> Result<ScanRecord> {
    let mut rec = ScanRecord {
        index,
        graph6: line.to_string(),
        n: g.n(),
        m: g.m(),
        properties: BTreeMap::new(),
        witnesses: BTreeMap::new(),
        budget_exceeded: Vec::new(),
        passed_filters: false,
        survivor: false,
    };
    let mut filtered_out = false;
    for &p in &filters.0 {
        match evaluate(g, p, budgets, &mut rec) {
            Ok(true) => {}
            Ok(false) => {
                filtered_out = true;
                break;
            }
            Err(e) if e.is_budget() => {
                rec.budget_exceeded.push(p.name());
                filtered_out = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    rec.passed_filters = !filtered_out;
    let mut all_checks = true;
    if rec.passed_filters {
        for &p in &checks.0 {
            match evaluate(g, p, budgets, &mut rec) {
                Ok(true) => {}
                Ok(false) => all_checks = false,
                Err(e) if e.is_budget() => {
                    rec.budget_exceeded.push(p.name());
                    all_checks = false;
                }
                Err(e) => return Err(e),
            }
        }
    }
    rec.survivor = rec.passed_filters && all_checks && rec.budget_exceeded.is_empty();
    Ok(rec)
}

/// Scans a graph6 stream. Stream and parse errors abort with the offending
/// line number; per-graph budget exhaustion is data in the report.
/// `workers` selects the evaluation thread count (0 = library default);
/// records are always in input order.
pub fn scan_corpus(
    input: impl BufRead,
    filters: &PredicateSet,
    checks: &PredicateSet,
    budgets: &Budgets,
    workers: usize,
) -> Result<ScanReport> {
    let mut decoded: Vec<(usize, String, Graph)> = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let mut line = line.map_err(|e| Error::ScanLine {
            line: line_no,
            source: Box::new(Error::Io(e.to_string())),
        })?;
        if idx == 0 {
            if let Some(rest) = line.strip_prefix(">>graph6<<") {
                line = rest.to_string();
            }
        }
        let line = line.trim().to_string();
        if line.is_empty() {
            continue;
        }
        let g = crate::graph6::decode(&line)
            .map_err(|e| Error::ScanLine { line: line_no, source: Box::new(e) })?;
        decoded.push((decoded.len(), line, g));
    }

    let run = || -> Result<Vec<ScanRecord>> {
        use rayon::prelude::*;
        decoded
            .par_iter()
            .map(|(i, line, g)| scan_one(*i, line, g, filters, checks, budgets))
            .collect()
    };
    let records = if workers == 0 {
        run()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        pool.install(run)?
    };

    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for name in filters.names().into_iter().chain(checks.names()) {
        counts.entry(name).or_insert(0);
    }
    let mut survivors = Vec::new();
    let mut inconclusive = 0;
    let mut passed = 0;
    for rec in &records {
        for (k, v) in &rec.properties {
            if *v == PropValue::Bool(true) {
                *counts.entry(k.clone()).or_insert(0) += 1;
            }
        }
        if !rec.budget_exceeded.is_empty() {
            inconclusive += 1;
        }
        if rec.passed_filters {
            passed += 1;
        }
        if rec.survivor {
            survivors.push(rec.index);
        }
    }
    Ok(ScanReport {
        schema: SCHEMA,
        filters: filters.names(),
        checks: checks.names(),
        aggregate: ScanAggregate {
            total: records.len(),
            passed_filters: passed,
            survivors,
            inconclusive,
            counts,
        },
        records,
    })
}

/// Deterministic JSON rendering of a report (trailing newline included).
pub fn to_json(report: &ScanReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialises");
    s.push('\n');
    s
}

/// Deterministic CSV rendering: one row per graph, columns for every
/// filter and check in pipeline order. Unevaluated cells are empty.
pub fn to_csv(report: &ScanReport) -> String {
    let mut cols: Vec<String> = vec!["index".into(), "graph6".into(), "n".into(), "m".into()];
    cols.extend(report.filters.iter().cloned());
    for c in &report.checks {
        if !cols.contains(c) {
            cols.push(c.clone());
        }
    }
    cols.push("budget_exceeded".into());
    cols.push("survivor".into());
    let mut out = cols.join(",");
    out.push('\n');
    for rec in &report.records {
        let mut row: Vec<String> = vec![
            rec.index.to_string(),
            rec.graph6.clone(),
            rec.n.to_string(),
            rec.m.to_string(),
        ];
        for name in cols.iter().skip(4).take(cols.len() - 6) {
            row.push(match rec.properties.get(name) {
                Some(PropValue::Bool(b)) => b.to_string(),
                Some(PropValue::Int(i)) => i.to_string(),
                None => String::new(),
            });
        }
        row.push(rec.budget_exceeded.join(";"));
        row.push(rec.survivor.to_string());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::UnknownPredicate(format!("report format {s:?}"))),
        }
    }
}

/// Serialises a report in the requested format.
pub fn emit_report(report: &ScanReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => to_json(report).into_bytes(),
        ReportFormat::Csv => to_csv(report).into_bytes(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, fixture_bundle, FixtureId};

    fn pset(names: &[&str]) -> PredicateSet {
        PredicateSet::parse(names).unwrap()
    }

    #[test]
    fn empty_stream_empty_report() {
        let report =
            scan_corpus("".as_bytes(), &pset(&["cubic"]), &pset(&[]), &Budgets::default(), 1)
                .unwrap();
        assert_eq!(report.aggregate.total, 0);
        assert!(report.records.is_empty());
        assert!(report.aggregate.survivors.is_empty());
        let json = to_json(&report);
        assert!(json.contains("\"records\": []"));
    }

    #[test]
    fn parse_errors_abort_with_line_number() {
        let input = "E?~o\nnot graph6 \x01\n";
        match scan_corpus(input.as_bytes(), &pset(&[]), &pset(&[]), &Budgets::default(), 1) {
            Err(Error::ScanLine { line: 2, .. }) => {}
            other => panic!("expected line-2 abort, got {other:?}"),
        }
    }

    #[test]
    fn fixtures_scan_records_in_input_order() {
        let (g6, _) = fixture_bundle();
        let report = scan_corpus(
            g6.as_bytes(),
            &pset(&["cubic", "bipartite"]),
            &pset(&["2fh"]),
            &Budgets::default(),
            2,
        )
        .unwrap();
        assert_eq!(report.aggregate.total, 17);
        for (i, rec) in report.records.iter().enumerate() {
            assert_eq!(rec.index, i);
        }
        // The cubic bipartite fixtures are K33 and Heawood (2fh) plus the
        // cube (not 2fh, with a two-quadrilateral witness).
        assert_eq!(report.aggregate.passed_filters, 3);
        let survivors: Vec<&str> = report
            .aggregate
            .survivors
            .iter()
            .map(|&i| report.records[i].graph6.as_str())
            .collect();
        let k33 = crate::graph6::encode(&fixture(FixtureId::K33)).unwrap();
        let heawood = crate::graph6::encode(&fixture(FixtureId::Heawood)).unwrap();
        assert_eq!(survivors, vec![k33.as_str(), heawood.as_str()]);
        let cube_rec = report
            .records
            .iter()
            .find(|r| r.graph6 == crate::graph6::encode(&fixture(FixtureId::Cube)).unwrap())
            .unwrap();
        assert_eq!(cube_rec.properties.get("2fh"), Some(&PropValue::Bool(false)));
        assert_eq!(cube_rec.witnesses.get("2fh").map(Vec::len), Some(8));
    }

    #[test]
    fn reports_are_byte_identical_across_worker_counts() {
        let (g6, _) = fixture_bundle();
        let filters = pset(&["cubic"]);
        let checks = pset(&["girth>=6", "cyc4conn"]);
        let a = scan_corpus(g6.as_bytes(), &filters, &checks, &Budgets::default(), 1).unwrap();
        let b = scan_corpus(g6.as_bytes(), &filters, &checks, &Budgets::default(), 4).unwrap();
        assert_eq!(to_json(&a), to_json(&b));
        assert_eq!(to_csv(&a), to_csv(&b));
    }

    #[test]
    fn budget_exhaustion_is_recorded_not_dropped() {
        let mut budgets = Budgets::default();
        budgets.two_factors = 1;
        let (g6, _) = fixture_bundle();
        let report = scan_corpus(g6.as_bytes(), &pset(&["cubic"]), &pset(&["2fh"]), &budgets, 1)
            .unwrap();
        assert!(report.aggregate.inconclusive > 0);
        let flagged: Vec<_> =
            report.records.iter().filter(|r| !r.budget_exceeded.is_empty()).collect();
        assert!(!flagged.is_empty());
        assert!(flagged.iter().all(|r| r.budget_exceeded == vec!["2fh".to_string()]));
        assert!(flagged.iter().all(|r| !r.survivor));
    }

    #[test]
    fn predicate_names_round_trip() {
        for name in
            ["cubic", "bipartite", "brace", "girth>=6", "2fh", "pfaffian", "non-pfaffian", "order=2mod4", "cyc4conn"]
        {
            let p: Predicate = name.parse().unwrap();
            assert_eq!(p.name(), name);
        }
        assert!("girth".parse::<Predicate>().is_err());
        assert!("girth>=x".parse::<Predicate>().is_err());
    }

    #[test]
    fn header_prefix_is_tolerated() {
        let line = format!(">>graph6<<{}\n", crate::graph6::encode(&fixture(FixtureId::C4)).unwrap());
        let report =
            scan_corpus(line.as_bytes(), &pset(&[]), &pset(&[]), &Budgets::default(), 1).unwrap();
        assert_eq!(report.aggregate.total, 1);
        assert_eq!(report.records[0].n, 4);
    }
}
