//! Text and JSON renderings. JSON field order and contents are fixed; nothing
//! run-dependent (such as elapsed time) is emitted outside `bench`.

use serde::Serialize;
use shoda_core::{
    element_triples, FiniteGroup, GroupAlgebra, PairKind, SearchReport, SearchStats, ShodaPair,
    Subgroup, Verdict, VerifyReport, Violation,
};

#[derive(Serialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub degree: usize,
}

impl GroupInfo {
    pub fn new(spec: &str, g: &FiniteGroup) -> Self {
        GroupInfo {
            spec: spec.to_string(),
            order: g.order(),
            degree: g.degree(),
        }
    }
}

#[derive(Serialize)]
struct PairJson {
    h: Vec<String>,
    k: Vec<String>,
    h_order: usize,
    k_order: usize,
    kind: &'static str,
    dim: u64,
}

#[derive(Serialize)]
struct Counters {
    normal_subgroups: usize,
    normal_subgroups_visited: usize,
    pruned_by_lemma1: usize,
    pruned_by_lemma3: usize,
    lattice_computed: bool,
    lattice_size: usize,
    subgroup_classes_visited: usize,
    subgroups_enumerated: usize,
    candidate_pairs: usize,
}

impl From<&SearchStats> for Counters {
    fn from(s: &SearchStats) -> Self {
        Counters {
            normal_subgroups: s.normal_subgroups,
            normal_subgroups_visited: s.normal_subgroups_visited,
            pruned_by_lemma1: s.pruned_by_lemma1,
            pruned_by_lemma3: s.pruned_by_lemma3,
            lattice_computed: s.lattice_computed,
            lattice_size: s.lattice_size,
            subgroup_classes_visited: s.subgroup_classes_visited,
            subgroups_enumerated: s.subgroups_enumerated,
            candidate_pairs: s.candidate_pairs,
        }
    }
}

#[derive(Serialize)]
struct PairsJson {
    group: GroupInfo,
    algorithm: &'static str,
    pairs: Vec<PairJson>,
    sum_dim: u64,
    complete: bool,
    verdict: &'static str,
    counters: Counters,
}

#[derive(Serialize)]
struct IdempotentJson {
    h: Vec<String>,
    k: Vec<String>,
    dim: u64,
    /// `[element, numerator, denominator]`, integers as decimal strings.
    terms: Vec<[String; 3]>,
}

#[derive(Serialize)]
struct IdempotentsJson {
    group: GroupInfo,
    method: &'static str,
    complete: bool,
    sum_is_one: bool,
    idempotents: Vec<IdempotentJson>,
}

#[derive(Serialize)]
struct MonomialJson {
    group: GroupInfo,
    normally_monomial: bool,
    sum_dim: u64,
}

#[derive(Serialize)]
struct VerifyJson {
    group: GroupInfo,
    method: &'static str,
    passed: bool,
    count: usize,
    complete: bool,
    sum_is_one: bool,
    dim_sum: Option<usize>,
    violation: Option<String>,
    rational_classes: usize,
    count_consistent: Option<bool>,
}

pub fn kind_name(k: PairKind) -> &'static str {
    match k {
        PairKind::ExtremelyStrong => "extremely_strong",
        PairKind::Strong => "strong",
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::NormallyMonomial => "normally_monomial",
        Verdict::StronglyMonomialOnly => "strongly_monomial_only",
        Verdict::NeitherOrUnknown => "neither_or_unknown",
    }
}

fn generators(g: &FiniteGroup, s: &Subgroup) -> Vec<String> {
    s.generators().iter().map(|&x| g.element(x).to_string()).collect()
}

fn subgroup_text(g: &FiniteGroup, s: &Subgroup) -> String {
    let gens = generators(g, s);
    if gens.is_empty() {
        "1".into()
    } else {
        format!("<{}>", gens.join(", "))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn header(spec: &str, g: &FiniteGroup) -> String {
    format!("group {spec}: order {}, degree {}\n", g.order(), g.degree())
}

fn pair_json(g: &FiniteGroup, p: &ShodaPair) -> PairJson {
    PairJson {
        h: generators(g, &p.h),
        k: generators(g, &p.k),
        h_order: p.h.order(),
        k_order: p.k.order(),
        kind: kind_name(p.kind),
        dim: p.dim,
    }
}

pub fn pairs(spec: &str, g: &FiniteGroup, algorithm: &'static str, r: &SearchReport, json: bool) -> String {
    if json {
        return to_json(&PairsJson {
            group: GroupInfo::new(spec, g),
            algorithm,
            pairs: r.pairs.iter().map(|p| pair_json(g, p)).collect(),
            sum_dim: r.sum_dim,
            complete: r.complete,
            verdict: verdict_name(r.verdict),
            counters: (&r.stats).into(),
        });
    }
    let mut out = header(spec, g);
    for (i, p) in r.pairs.iter().enumerate() {
        out += &format!(
            "{:>3}  {:<16}  dim {:>4}  |H| {:<5} |K| {:<5} H = {}  K = {}\n",
            i + 1,
            kind_name(p.kind),
            p.dim,
            p.h.order(),
            p.k.order(),
            subgroup_text(g, &p.h),
            subgroup_text(g, &p.k),
        );
    }
    out += &format!(
        "sum_dim {} of {}: {}\n",
        r.sum_dim,
        g.order(),
        verdict_name(r.verdict)
    );
    out
}

pub fn idempotents(spec: &str, g: &FiniteGroup, method: &'static str, r: &SearchReport, json: bool) -> String {
    let es = r.idempotents.as_deref().unwrap_or_default();
    let qg = GroupAlgebra::new(g);
    let elements: Vec<_> = es.iter().map(|e| e.element.clone()).collect();
    let sum_is_one = qg.sum_is_one(&elements);
    let items: Vec<IdempotentJson> = r
        .pairs
        .iter()
        .zip(es)
        .map(|(p, e)| IdempotentJson {
            h: generators(g, &p.h),
            k: generators(g, &p.k),
            dim: p.dim,
            terms: element_triples(g, &e.element)
                .into_iter()
                .map(|(x, n, d)| [x, n.to_string(), d.to_string()])
                .collect(),
        })
        .collect();
    if json {
        return to_json(&IdempotentsJson {
            group: GroupInfo::new(spec, g),
            method,
            complete: r.complete,
            sum_is_one,
            idempotents: items,
        });
    }
    let mut out = header(spec, g);
    for (i, (p, e)) in r.pairs.iter().zip(&items).enumerate() {
        out += &format!(
            "e{} = e(G, {}, {})  dim {}  support {}\n",
            i + 1,
            subgroup_text(g, &p.h),
            subgroup_text(g, &p.k),
            e.dim,
            e.terms.len()
        );
        for [x, n, d] in &e.terms {
            let c = if d == "1" { n.clone() } else { format!("{n}/{d}") };
            out += &format!("    {c:>8}  {x}\n");
        }
    }
    out += &format!("{} idempotents, sum is one: {sum_is_one}\n", items.len());
    out
}

pub fn normally_monomial(spec: &str, g: &FiniteGroup, sum_dim: u64, json: bool) -> String {
    let nm = sum_dim == g.order() as u64;
    if json {
        return to_json(&MonomialJson {
            group: GroupInfo::new(spec, g),
            normally_monomial: nm,
            sum_dim,
        });
    }
    format!("{nm} (sum_dim {sum_dim} of {})\n", g.order())
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::NotIdempotent { index } => format!("idempotent {} does not square to itself", index + 1),
        Violation::NotCentral { index } => format!("idempotent {} is not central", index + 1),
        Violation::NotOrthogonal { first, second } => {
            format!("idempotents {} and {} are not orthogonal", first + 1, second + 1)
        }
        Violation::DimensionsExceedOrder { sum, order } => {
            format!("dimensions sum to {sum}, more than |G| = {order}")
        }
        Violation::SumNotOne => "claimed complete but the idempotents do not sum to 1".into(),
    }
}

pub fn verification(
    spec: &str,
    g: &FiniteGroup,
    method: &'static str,
    r: &SearchReport,
    v: &VerifyReport,
    count_consistent: Option<bool>,
    json: bool,
) -> String {
    let passed = v.passed() && count_consistent != Some(false);
    if json {
        return to_json(&VerifyJson {
            group: GroupInfo::new(spec, g),
            method,
            passed,
            count: v.count,
            complete: r.complete,
            sum_is_one: v.sum_is_one,
            dim_sum: v.dim_sum,
            violation: v.violation.as_ref().map(violation_text),
            rational_classes: g.rational_class_count(),
            count_consistent,
        });
    }
    let mut out = header(spec, g);
    out += &format!("{} idempotents from {method}, complete: {}\n", v.count, r.complete);
    out += &format!("sum is one: {}\n", v.sum_is_one);
    match v.dim_sum {
        Some(d) => out += &format!("direct dimension sum: {d}\n"),
        None => out += "direct dimension sum: skipped (order above oracle cap)\n",
    }
    out += &format!("rational classes: {}\n", g.rational_class_count());
    if let Some(c) = count_consistent {
        out += &format!("pair count matches rational classes: {c}\n");
    }
    if let Some(violation) = &v.violation {
        out += &format!("violation: {}\n", violation_text(violation));
    }
    out += if passed { "PASSED\n" } else { "FAILED\n" };
    out
}
