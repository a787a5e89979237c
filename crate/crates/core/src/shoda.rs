//! Extremely strong and strong Shoda pairs, and the primitive central
//! idempotents of Q[G] they realize.
//!
//! A pair `(H, K)` of subgroups is a strong Shoda pair when
//!
//! 1. `K ⊴ H ⊴ N_G(K)`,
//! 2. `H/K` is cyclic and a maximal abelian subgroup of `N_G(K)/K`,
//! 3. the distinct G-conjugates of `epsilon(H, K)` are mutually orthogonal,
//!
//! and extremely strong when moreover `H ⊴ G`. Each such pair realizes the
//! primitive central idempotent `e(G, H, K)`, whose simple component has
//! dimension `phi([H:K]) [N_G(K):H] [G:N_G(K)]^2`.
//!
//! [`ext_strong_shoda_pairs`] walks the normal subgroups `N` of G in decreasing
//! order and collects, for each, the pairs `(A_N, D)` with `A_N/N` a largest
//! abelian normal subgroup of `G/N`, `core_G(D) = N` and `A_N/D` cyclic and
//! maximal abelian in `N_G(D)/D`, one `D` per conjugacy class. Three shortcuts
//! avoid most of that work:
//!
//! * if `G/N` is abelian the only candidate is `(G, N)`, valid iff `G/N` is cyclic;
//! * if `A_N/N` is cyclic the only candidate is `(A_N, N)`;
//! * if the centre of `G/N` is not cyclic there is nothing to find.
//!
//! The search stops as soon as the dimensions found add up to `|G|`.
//! [`strong_shoda_pairs`] starts from that result and, only when it falls short
//! of `|G|`, scans conjugacy classes of non-normal subgroups `K` for non-normal
//! `H`, keeping a pair only if its idempotent is new.

use std::time::{Duration, Instant};

use crate::algebra::{dim_formula, AlgebraElement, GroupAlgebra, Idempotent};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::lattice::{TieBreak, DEFAULT_LATTICE_CAP};
use crate::quotient::Quotient;
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    ExtremelyStrong,
    Strong,
}

/// A strong Shoda pair `(H, K)` with the dimension of the component it realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShodaPair {
    pub h: Subgroup,
    pub k: Subgroup,
    pub kind: PairKind,
    pub dim: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    NormallyMonomial,
    StronglyMonomialOnly,
    NeitherOrUnknown,
}

/// Work counters for one search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub normal_subgroups: usize,
    pub normal_subgroups_visited: usize,
    /// Normal subgroups settled by the abelian-quotient or cyclic-`A_N` shortcut.
    pub pruned_by_lemma1: usize,
    /// Normal subgroups (or subgroup classes) skipped because a centre is not cyclic.
    pub pruned_by_lemma3: usize,
    pub lattice_computed: bool,
    pub lattice_size: usize,
    pub subgroup_classes_visited: usize,
    /// Subgroups listed while searching for `D` below some `A_N`.
    pub subgroups_enumerated: usize,
    pub candidate_pairs: usize,
    pub idempotents_computed: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub order: usize,
    pub pairs: Vec<ShodaPair>,
    pub sum_dim: u64,
    pub complete: bool,
    pub verdict: Verdict,
    /// `e(G, H, K)` for each pair, in pair order, when requested.
    pub idempotents: Option<Vec<Idempotent>>,
    pub stats: SearchStats,
}

impl SearchReport {
    pub fn dims(&self) -> Vec<u64> {
        self.pairs.iter().map(|p| p.dim).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Use the abelian-quotient and cyclic-`A_N` shortcuts.
    pub lemma1: bool,
    /// Skip normal subgroups `N` (and classes with core `N`) when the centre of `G/N` is not cyclic.
    pub lemma3: bool,
    pub tie_break: TieBreak,
    pub collect_idempotents: bool,
    pub lattice_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            lemma1: true,
            lemma3: true,
            tie_break: TieBreak::First,
            collect_idempotents: false,
            lattice_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

/// Search strategy for strong Shoda pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Extremely strong pairs first; the subgroup lattice only if they fall short.
    EsspFirst,
    /// Scan every conjugacy class of subgroups, with no extremely strong phase.
    Direct,
}

/// Conditions (i)-(iii) of a strong Shoda pair.
pub fn is_strong_shoda_pair(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> bool {
    if !g.is_normal_in(k, h) {
        return false;
    }
    let nk = g.normalizer(k);
    if !g.is_normal_in(h, &nk) {
        return false;
    }
    let Ok(q) = Quotient::new(g, &nk, k) else {
        return false;
    };
    if !is_cyclic_over(g, h, k) || !q.is_maximal_abelian(h).unwrap_or(false) {
        return false;
    }
    let qg = GroupAlgebra::new(g);
    qg.epsilon_conjugates(h, k)
        .map(|c| qg.conjugates_orthogonal(&c))
        .unwrap_or(false)
}

/// Whether `h/k` is cyclic, for `k ⊴ h`.
fn is_cyclic_over(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> bool {
    let index = h.order() / k.order();
    h.elements().iter().any(|&x| {
        let mut y = x;
        let mut m = 1;
        while !k.contains(y) {
            y = g.mul(y, x);
            m += 1;
        }
        m == index
    })
}

/// One representative (the least in canonical order) per G-conjugacy class among `subgroups`.
fn conjugacy_representatives(g: &FiniteGroup, subgroups: &[Subgroup]) -> Vec<Subgroup> {
    let mut sorted: Vec<&Subgroup> = subgroups.iter().collect();
    sorted.sort();
    let mut covered: Vec<Subgroup> = Vec::new();
    let mut reps = Vec::new();
    for d in sorted {
        if covered.contains(d) {
            continue;
        }
        reps.push(d.clone());
        let mut orbit = vec![d.clone()];
        let mut i = 0;
        while i < orbit.len() {
            for &x in g.generator_ids() {
                let c = g.conjugate_subgroup(&orbit[i], x);
                if !orbit.contains(&c) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        covered.extend(orbit);
    }
    reps
}

struct Search<'g> {
    group: &'g FiniteGroup,
    opts: SearchOptions,
    order: u64,
    pairs: Vec<ShodaPair>,
    sum_dim: u64,
    stats: SearchStats,
    started: Instant,
}

impl<'g> Search<'g> {
    fn new(group: &'g FiniteGroup, opts: &SearchOptions) -> Self {
        Search {
            group,
            opts: opts.clone(),
            order: group.order() as u64,
            pairs: Vec::new(),
            sum_dim: 0,
            stats: SearchStats::default(),
            started: Instant::now(),
        }
    }

    fn done(&self) -> bool {
        self.sum_dim == self.order
    }

    fn add(&mut self, h: Subgroup, k: Subgroup, kind: PairKind) {
        let dim = dim_formula(self.group, &h, &k);
        self.sum_dim += dim;
        debug_assert!(self.sum_dim <= self.order, "dimensions exceed |G|");
        self.pairs.push(ShodaPair { h, k, kind, dim });
    }

    /// Extremely strong pairs, structured as: abelian quotients, centre filter,
    /// cyclic `A_N`, then the remaining `N` batched by their common `A`.
    fn extremely_strong(&mut self) -> Result<()> {
        let g = self.group;
        let normals = g.normal_subgroups_decreasing();
        self.stats.normal_subgroups = normals.len();
        let whole = g.whole();
        self.add(whole.clone(), whole.clone(), PairKind::ExtremelyStrong);
        if self.done() {
            return Ok(());
        }
        let derived = g.commutator_subgroup();

        let mut non_abelian_quotient = Vec::new();
        for n in normals.iter().skip(1) {
            self.stats.normal_subgroups_visited += 1;
            if self.opts.lemma1 && derived.is_subgroup_of(n) {
                self.stats.pruned_by_lemma1 += 1;
                if Quotient::new(g, &whole, n)?.is_cyclic() {
                    self.add(whole.clone(), n.clone(), PairKind::ExtremelyStrong);
                    if self.done() {
                        return Ok(());
                    }
                }
            } else {
                non_abelian_quotient.push(n);
            }
        }

        let mut cyclic_centre = Vec::new();
        for n in non_abelian_quotient {
            if !self.opts.lemma3 || Quotient::new(g, &whole, n)?.is_center_cyclic() {
                cyclic_centre.push(n);
            } else {
                self.stats.pruned_by_lemma3 += 1;
            }
        }

        let mut pending: Vec<(Subgroup, Subgroup)> = Vec::new();
        for n in cyclic_centre {
            let a = g.max_abelian_normal_among(&normals, n, self.opts.tie_break);
            if &a == n {
                continue;
            }
            if self.opts.lemma1 && Quotient::new(g, &a, n)?.is_cyclic() {
                self.stats.pruned_by_lemma1 += 1;
                if Quotient::new(g, &whole, n)?.is_maximal_abelian(&a)? {
                    self.add(a, n.clone(), PairKind::ExtremelyStrong);
                    if self.done() {
                        return Ok(());
                    }
                }
            } else {
                pending.push((a, n.clone()));
            }
        }

        while let Some((a, _)) = pending.first().cloned() {
            let (batch, rest): (Vec<_>, Vec<_>) = pending.into_iter().partition(|(b, _)| *b == a);
            pending = rest;
            let cyclic_quotients = g.cyclic_quotient_subgroups(&a, self.opts.lattice_cap)?;
            self.stats.subgroups_enumerated += cyclic_quotients.len();
            for (_, n) in batch {
                let with_core: Vec<Subgroup> = cyclic_quotients
                    .iter()
                    .filter(|d| n.is_subgroup_of(d) && g.core(d) == n)
                    .cloned()
                    .collect();
                for t in conjugacy_representatives(g, &with_core) {
                    let nt = g.normalizer(&t);
                    if Quotient::new(g, &nt, &t)?.is_maximal_abelian(&a)? {
                        self.add(a.clone(), t, PairKind::ExtremelyStrong);
                        if self.done() {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// For each class representative `K`, every `H` with `K <= H <= N_G(K)` from the
    /// lattice, smallest first, kept when it is a strong Shoda pair realizing a new idempotent.
    fn scan_classes(
        &mut self,
        lattice: &[Subgroup],
        representatives: &[Subgroup],
        pcis: &mut Vec<AlgebraElement>,
        non_normal_h_only: bool,
    ) -> Result<()> {
        let g = self.group;
        let qg = GroupAlgebra::new(g);
        let whole = g.whole();
        for k in representatives {
            self.stats.subgroup_classes_visited += 1;
            if self.opts.lemma3 {
                let core = g.core(k);
                if !Quotient::new(g, &whole, &core)?.is_center_cyclic() {
                    self.stats.pruned_by_lemma3 += 1;
                    continue;
                }
            }
            let nk = g.normalizer(k);
            let over_k = Quotient::new(g, &nk, k)?;
            for h in lattice
                .iter()
                .filter(|h| k.is_subgroup_of(h) && h.is_subgroup_of(&nk))
            {
                let h_normal = g.is_normal(h);
                if non_normal_h_only && h_normal {
                    continue;
                }
                self.stats.candidate_pairs += 1;
                if !g.is_normal_in(h, &nk)
                    || !is_cyclic_over(g, h, k)
                    || !over_k.is_maximal_abelian(h)?
                {
                    continue;
                }
                let conjugates = qg.epsilon_conjugates(h, k)?;
                if !qg.conjugates_orthogonal(&conjugates) {
                    continue;
                }
                let e = qg.sum_conjugates(h, k, &conjugates).element;
                self.stats.idempotents_computed += 1;
                if pcis.contains(&e) {
                    continue;
                }
                pcis.push(e);
                let kind = if h_normal {
                    PairKind::ExtremelyStrong
                } else {
                    PairKind::Strong
                };
                self.add(h.clone(), k.clone(), kind);
                if self.done() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn lattice_classes(&mut self, normal_only_excluded: bool) -> Result<(Vec<Subgroup>, Vec<Subgroup>)> {
        let g = self.group;
        let lattice = g.all_subgroups_with_cap(self.opts.lattice_cap)?;
        self.stats.lattice_computed = true;
        self.stats.lattice_size = lattice.len();
        let mut reps: Vec<Subgroup> = g
            .classify_subgroups(&lattice)
            .into_iter()
            .map(|c| c.representative)
            .filter(|k| !normal_only_excluded || !g.is_normal(k))
            .collect();
        reps.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
        Ok((lattice, reps))
    }

    fn finish(mut self, verdict: Verdict, idempotents: Option<Vec<Idempotent>>) -> SearchReport {
        self.stats.elapsed = self.started.elapsed();
        SearchReport {
            order: self.order as usize,
            complete: self.done(),
            sum_dim: self.sum_dim,
            pairs: self.pairs,
            verdict,
            idempotents,
            stats: self.stats,
        }
    }

    fn realized(&mut self) -> Result<Vec<Idempotent>> {
        let qg = GroupAlgebra::new(self.group);
        self.stats.idempotents_computed += self.pairs.len();
        self.pairs.iter().map(|p| qg.e_of(&p.h, &p.k)).collect()
    }
}

/// The pairs `(A_N, D)` contributed by one normal subgroup `N`, computed on its own.
pub fn compute_s_n(g: &FiniteGroup, n: &Subgroup, opts: &SearchOptions) -> Result<Vec<ShodaPair>> {
    let whole = g.whole();
    let pair = |h: Subgroup, k: Subgroup| {
        let dim = dim_formula(g, &h, &k);
        ShodaPair {
            h,
            k,
            kind: PairKind::ExtremelyStrong,
            dim,
        }
    };
    if *n == whole {
        return Ok(vec![pair(whole.clone(), whole)]);
    }
    let over_n = Quotient::new(g, &whole, n)?;
    if opts.lemma1 && over_n.is_abelian() {
        return Ok(if over_n.is_cyclic() {
            vec![pair(whole, n.clone())]
        } else {
            Vec::new()
        });
    }
    if opts.lemma3 && !over_n.is_center_cyclic() {
        return Ok(Vec::new());
    }
    let normals = g.normal_subgroups_decreasing();
    let a = g.max_abelian_normal_among(&normals, n, opts.tie_break);
    if opts.lemma1 && Quotient::new(g, &a, n)?.is_cyclic() {
        return Ok(if over_n.is_maximal_abelian(&a)? {
            vec![pair(a, n.clone())]
        } else {
            Vec::new()
        });
    }
    let mut candidates = Vec::new();
    for d in g.intermediate_subgroups(n, &a, opts.lattice_cap)? {
        if g.core(&d) != *n || !Quotient::new(g, &a, &d)?.is_cyclic() {
            continue;
        }
        if Quotient::new(g, &g.normalizer(&d), &d)?.is_maximal_abelian(&a)? {
            candidates.push(d);
        }
    }
    Ok(conjugacy_representatives(g, &candidates)
        .into_iter()
        .map(|d| pair(a.clone(), d))
        .collect())
}

/// A complete irredundant set of extremely strong Shoda pairs.
pub fn ext_strong_shoda_pairs(g: &FiniteGroup) -> Result<SearchReport> {
    ext_strong_shoda_pairs_with(g, &SearchOptions::default())
}

pub fn ext_strong_shoda_pairs_with(g: &FiniteGroup, opts: &SearchOptions) -> Result<SearchReport> {
    let mut search = Search::new(g, opts);
    search.extremely_strong()?;
    let idempotents = if opts.collect_idempotents {
        Some(search.realized()?)
    } else {
        None
    };
    let verdict = if search.done() {
        Verdict::NormallyMonomial
    } else {
        Verdict::NeitherOrUnknown
    };
    Ok(search.finish(verdict, idempotents))
}

/// A complete irredundant set of strong Shoda pairs, extremely strong ones first.
///
/// Makes one pass over the conjugacy classes of non-normal subgroups; if the
/// dimensions still fall short of `|G|`, the verdict is `NeitherOrUnknown`.
pub fn strong_shoda_pairs(g: &FiniteGroup) -> Result<SearchReport> {
    strong_shoda_pairs_with(g, &SearchOptions::default())
}

pub fn strong_shoda_pairs_with(g: &FiniteGroup, opts: &SearchOptions) -> Result<SearchReport> {
    let mut search = Search::new(g, opts);
    search.extremely_strong()?;
    if search.done() {
        let idempotents = if opts.collect_idempotents {
            Some(search.realized()?)
        } else {
            None
        };
        return Ok(search.finish(Verdict::NormallyMonomial, idempotents));
    }
    let mut pcis: Vec<AlgebraElement> = search.realized()?.into_iter().map(|e| e.element).collect();
    let essp_count = pcis.len();
    let (lattice, reps) = search.lattice_classes(true)?;
    search.scan_classes(&lattice, &reps, &mut pcis, true)?;
    let verdict = if search.done() {
        Verdict::StronglyMonomialOnly
    } else {
        Verdict::NeitherOrUnknown
    };
    debug_assert!(search.pairs.len() == pcis.len() && pcis.len() >= essp_count);
    let idempotents = opts.collect_idempotents.then(|| {
        search
            .pairs
            .iter()
            .zip(pcis)
            .map(|(p, element)| Idempotent {
                element,
                provenance: crate::algebra::Provenance::Realized(p.h.clone(), p.k.clone()),
            })
            .collect()
    });
    Ok(search.finish(verdict, idempotents))
}

/// Strong Shoda pairs found by scanning every conjugacy class of subgroups directly,
/// largest representatives first, with no extremely strong phase.
///
/// The verdict is `NormallyMonomial` only when the search completes using pairs with
/// `H ⊴ G` alone; a completed search that used a non-normal `H` reports
/// `StronglyMonomialOnly` without deciding normal monomiality.
pub fn direct_strong_shoda_pairs(g: &FiniteGroup, opts: &SearchOptions) -> Result<SearchReport> {
    let mut search = Search::new(g, opts);
    let mut pcis: Vec<AlgebraElement> = Vec::new();
    let (lattice, reps) = search.lattice_classes(false)?;
    search.scan_classes(&lattice, &reps, &mut pcis, false)?;
    let verdict = match (search.done(), search.pairs.iter().all(|p| p.kind == PairKind::ExtremelyStrong)) {
        (true, true) => Verdict::NormallyMonomial,
        (true, false) => Verdict::StronglyMonomialOnly,
        (false, _) => Verdict::NeitherOrUnknown,
    };
    let idempotents = opts.collect_idempotents.then(|| {
        search
            .pairs
            .iter()
            .zip(pcis)
            .map(|(p, element)| Idempotent {
                element,
                provenance: crate::algebra::Provenance::Realized(p.h.clone(), p.k.clone()),
            })
            .collect()
    });
    Ok(search.finish(verdict, idempotents))
}

/// Runs the strong Shoda pair search with the given strategy.
pub fn search(g: &FiniteGroup, strategy: Strategy, opts: &SearchOptions) -> Result<SearchReport> {
    match strategy {
        Strategy::EsspFirst => strong_shoda_pairs_with(g, opts),
        Strategy::Direct => direct_strong_shoda_pairs(g, opts),
    }
}

fn with_idempotents(opts: &SearchOptions) -> SearchOptions {
    SearchOptions {
        collect_idempotents: true,
        ..opts.clone()
    }
}

/// Primitive central idempotents realized by extremely strong Shoda pairs.
pub fn pcis_by_essp(g: &FiniteGroup) -> Result<Vec<Idempotent>> {
    let report = ext_strong_shoda_pairs_with(g, &with_idempotents(&SearchOptions::default()))?;
    Ok(report.idempotents.unwrap_or_default())
}

/// Primitive central idempotents realized by strong Shoda pairs.
pub fn pcis_by_ssp(g: &FiniteGroup) -> Result<Vec<Idempotent>> {
    let report = strong_shoda_pairs_with(g, &with_idempotents(&SearchOptions::default()))?;
    Ok(report.idempotents.unwrap_or_default())
}

/// Sum of the dimensions realized by extremely strong Shoda pairs; equals `|G|`
/// exactly when G is normally monomial.
pub fn essp_sum_dim(g: &FiniteGroup) -> Result<u64> {
    let mut search = Search::new(g, &SearchOptions::default());
    search.extremely_strong()?;
    Ok(search.sum_dim)
}

pub fn is_normally_monomial(g: &FiniteGroup) -> Result<bool> {
    Ok(essp_sum_dim(g)? == g.order() as u64)
}

pub fn is_strongly_monomial(g: &FiniteGroup) -> Result<bool> {
    Ok(strong_shoda_pairs(g)?.complete)
}

/// Idempotents as a set, for comparisons that ignore order and provenance.
pub fn idempotent_set(es: &[Idempotent]) -> std::collections::BTreeSet<AlgebraElement> {
    es.iter().map(|e| e.element.clone()).collect()
}
