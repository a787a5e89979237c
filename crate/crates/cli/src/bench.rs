//! The `bench` subcommand: wall-clock medians and work counters per configuration.

use std::time::Duration;

use serde::Serialize;
use shoda_core::shoda::idempotent_set;
use shoda_core::{search, FiniteGroup, Result, SearchOptions, Strategy};

use crate::output::{verdict_name, GroupInfo};

pub struct Plan {
    pub no_lemma1: bool,
    pub no_lemma3: bool,
    pub direct_ssp: bool,
    pub repeat: usize,
}

#[derive(Serialize)]
pub struct Row {
    strategy: &'static str,
    lemma1: bool,
    lemma3: bool,
    median_ms: f64,
    normal_subgroups_visited: usize,
    pruned_by_lemma1: usize,
    pruned_by_lemma3: usize,
    subgroups_enumerated: usize,
    lattice_computed: bool,
    lattice_size: usize,
    subgroup_classes_visited: usize,
    pairs: usize,
    sum_dim: u64,
    verdict: &'static str,
    /// Whether the realized idempotents equal those of the first row.
    same_idempotents: bool,
}

/// Baseline ESSP-first run with all shortcuts, then the requested ablations and baseline.
pub fn run(g: &FiniteGroup, plan: &Plan, base: &SearchOptions) -> Result<Vec<Row>> {
    let mut configs = vec![(Strategy::EsspFirst, true, true)];
    if plan.no_lemma1 || plan.no_lemma3 {
        configs.push((Strategy::EsspFirst, !plan.no_lemma1, !plan.no_lemma3));
    }
    if plan.direct_ssp {
        configs.push((Strategy::Direct, !plan.no_lemma1, !plan.no_lemma3));
    }

    let mut rows = Vec::new();
    let mut reference = None;
    for (strategy, lemma1, lemma3) in configs {
        let opts = SearchOptions {
            lemma1,
            lemma3,
            collect_idempotents: false,
            ..base.clone()
        };
        let mut times = Vec::with_capacity(plan.repeat);
        let mut last = None;
        for _ in 0..plan.repeat {
            let r = search(g, strategy, &opts)?;
            times.push(r.stats.elapsed);
            last = Some(r);
        }
        times.sort();
        let report = last.expect("at least one repetition");
        let with_idempotents = SearchOptions {
            collect_idempotents: true,
            ..opts
        };
        let found = search(g, strategy, &with_idempotents)?;
        let set = idempotent_set(found.idempotents.as_deref().unwrap_or_default());
        let same = reference.get_or_insert_with(|| set.clone()) == &set;
        let s = &report.stats;
        rows.push(Row {
            strategy: match strategy {
                Strategy::EsspFirst => "essp-first",
                Strategy::Direct => "direct",
            },
            lemma1,
            lemma3,
            median_ms: millis(times[times.len() / 2]),
            normal_subgroups_visited: s.normal_subgroups_visited,
            pruned_by_lemma1: s.pruned_by_lemma1,
            pruned_by_lemma3: s.pruned_by_lemma3,
            subgroups_enumerated: s.subgroups_enumerated,
            lattice_computed: s.lattice_computed,
            lattice_size: s.lattice_size,
            subgroup_classes_visited: s.subgroup_classes_visited,
            pairs: report.pairs.len(),
            sum_dim: report.sum_dim,
            verdict: verdict_name(report.verdict),
            same_idempotents: same,
        });
    }
    Ok(rows)
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

const COLUMNS: [&str; 15] = [
    "strategy",
    "lemma1",
    "lemma3",
    "median_ms",
    "normal_subgroups_visited",
    "pruned_by_lemma1",
    "pruned_by_lemma3",
    "subgroups_enumerated",
    "lattice_computed",
    "lattice_size",
    "subgroup_classes_visited",
    "pairs",
    "sum_dim",
    "verdict",
    "same_idempotents",
];

fn cells(r: &Row) -> [String; 15] {
    [
        r.strategy.to_string(),
        r.lemma1.to_string(),
        r.lemma3.to_string(),
        format!("{:.3}", r.median_ms),
        r.normal_subgroups_visited.to_string(),
        r.pruned_by_lemma1.to_string(),
        r.pruned_by_lemma3.to_string(),
        r.subgroups_enumerated.to_string(),
        r.lattice_computed.to_string(),
        r.lattice_size.to_string(),
        r.subgroup_classes_visited.to_string(),
        r.pairs.to_string(),
        r.sum_dim.to_string(),
        r.verdict.to_string(),
        r.same_idempotents.to_string(),
    ]
}

pub fn csv(rows: &[Row]) -> String {
    let mut out = COLUMNS.join(",") + "\n";
    for r in rows {
        out += &(cells(r).join(",") + "\n");
    }
    out
}

pub fn text(spec: &str, g: &FiniteGroup, rows: &[Row]) -> String {
    let short = [
        "strategy", "l1", "l3", "ms", "visited", "pr1", "pr3", "enum", "lattice", "size",
        "classes", "pairs", "sum", "verdict", "same",
    ];
    let table: Vec<[String; 15]> = rows.iter().map(cells).collect();
    let widths: Vec<usize> = (0..15)
        .map(|c| table.iter().map(|r| r[c].len()).chain([short[c].len()]).max().unwrap())
        .collect();
    let line = |cols: &[String]| {
        cols.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
            + "\n"
    };
    let mut out = format!("group {spec}: order {}, degree {}\n", g.order(), g.degree());
    out += &line(&short.map(String::from));
    for r in &table {
        out += &line(r);
    }
    out
}

#[derive(Serialize)]
struct BenchJson<'a> {
    group: GroupInfo,
    rows: &'a [Row],
}

pub fn json(spec: &str, g: &FiniteGroup, rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(&BenchJson {
        group: GroupInfo::new(spec, g),
        rows,
    })
    .expect("serializable");
    s.push('\n');
    s
}
