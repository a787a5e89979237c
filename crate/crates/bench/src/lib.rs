//! Workloads shared by the criterion benches.

use shoda_core::{FiniteGroup, GroupSpec, SearchOptions, Strategy};

/// Groups timed by the benches: normally monomial ones, where the extremely
/// strong phase suffices, and a few where the subgroup lattice is needed.
pub fn workloads() -> Vec<(String, FiniteGroup)> {
    [
        "dihedral:32",
        "dicyclic:32",
        "cyclic:4 x dihedral:8",
        "metacyclic:13,3",
        "heisenberg:3",
        "symmetric:4",
        "sl2:3",
        "cyclic:2 x symmetric:4",
        "heisenberg_c3:5",
    ]
    .iter()
    .map(|s| {
        let spec: GroupSpec = s.parse().expect("valid spec");
        (s.to_string(), spec.build().expect("within the order cap"))
    })
    .collect()
}

/// Named search configurations: the default, each pruning rule disabled, and
/// the direct scan without the extremely strong phase.
pub fn configurations() -> Vec<(&'static str, Strategy, SearchOptions)> {
    let with = |lemma1, lemma3| SearchOptions {
        lemma1,
        lemma3,
        ..SearchOptions::default()
    };
    vec![
        ("essp-first", Strategy::EsspFirst, with(true, true)),
        ("no-lemma1", Strategy::EsspFirst, with(false, true)),
        ("no-lemma3", Strategy::EsspFirst, with(true, false)),
        ("direct", Strategy::Direct, with(true, true)),
    ]
}
