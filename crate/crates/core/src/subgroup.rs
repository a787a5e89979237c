//! Subgroups of an enumerated group and the elementary constructions on them.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A subgroup stored as a membership bitset over the parent's element ordinals.
///
/// Subgroups compare equal iff they have the same members. The total order
/// (`Ord`) is the canonical subgroup order: by order, then by the sorted list of
/// member ordinals.
#[derive(Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    fn from_members(members: FixedBitSet, generators: Vec<usize>) -> Self {
        let elements = members.ones().collect();
        Subgroup {
            members,
            elements,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// Member ordinals in increasing order. This is also the canonical serialization.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.generators)
    }
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(self.identity());
        Subgroup::from_members(members, Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup::from_members(members, self.generator_ids().to_vec())
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Subgroup> {
        if let Some(&bad) = gens.iter().find(|&&x| x >= self.order()) {
            return Err(Error::NotAMember(bad));
        }
        Ok(self.closure_with(&self.trivial_subgroup(), gens))
    }

    /// `<base, extra>`, built coset by coset over `base` (Dimino).
    pub fn closure_with(&self, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut current = base.clone();
        for &x in extra {
            if current.contains(x) {
                continue;
            }
            let mut gens = current.generators.clone();
            gens.push(x);
            let block = current.elements.clone();
            let mut members = current.members.clone();
            let mut elements = block.clone();
            let mut reps = vec![self.identity()];
            let add_coset = |rep: usize, members: &mut FixedBitSet, elements: &mut Vec<usize>| {
                for &h in &block {
                    let y = self.mul(h, rep);
                    members.insert(y);
                    elements.push(y);
                }
            };
            add_coset(x, &mut members, &mut elements);
            reps.push(x);
            let mut i = 1;
            while i < reps.len() {
                for &s in &gens {
                    let y = self.mul(reps[i], s);
                    if !members.contains(y) {
                        add_coset(y, &mut members, &mut elements);
                        reps.push(y);
                    }
                }
                i += 1;
            }
            current = Subgroup::from_members(members, gens);
        }
        current
    }

    /// Subgroup with the given members, which must already form a subgroup.
    pub(crate) fn subgroup_from_elements(&self, elements: &[usize], gens: Vec<usize>) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.extend(elements.iter().copied());
        Subgroup::from_members(members, gens)
    }

    /// `g H g^-1`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.extend(h.elements.iter().map(|&x| self.conj(g, x)));
        let gens = h.generators.iter().map(|&x| self.conj(g, x)).collect();
        Subgroup::from_members(members, gens)
    }

    /// True iff every element of `by` normalizes `h`; checking generators suffices.
    fn normalized_by(&self, h: &Subgroup, by: &[usize]) -> bool {
        by.iter()
            .all(|&g| h.generators.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normalized_by(h, self.generator_ids())
    }

    /// True iff `k ⊴ h`.
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        k.is_subgroup_of(h) && self.normalized_by(k, &h.generators)
    }

    /// `{g in G : g H g^-1 = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.normalizer_in(&self.whole(), h)
    }

    /// `{g in within : g H g^-1 = H}`.
    pub fn normalizer_in(&self, within: &Subgroup, h: &Subgroup) -> Subgroup {
        let elements: Vec<usize> = within
            .elements
            .iter()
            .copied()
            .filter(|&g| h.generators.iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        let gens = self.small_generating_set(&elements);
        self.subgroup_from_elements(&elements, gens)
    }

    /// `{g in within : g x = x g for all x in h}`.
    pub fn centralizer_in(&self, within: &Subgroup, h: &Subgroup) -> Subgroup {
        let elements: Vec<usize> = within
            .elements
            .iter()
            .copied()
            .filter(|&g| {
                h.generators
                    .iter()
                    .all(|&x| self.mul(g, x) == self.mul(x, g))
            })
            .collect();
        let gens = self.small_generating_set(&elements);
        self.subgroup_from_elements(&elements, gens)
    }

    pub fn center(&self) -> Subgroup {
        let whole = self.whole();
        self.centralizer_in(&whole, &whole)
    }

    /// Largest normal subgroup of G contained in `k`: the intersection of its conjugates.
    pub fn core(&self, k: &Subgroup) -> Subgroup {
        if self.is_normal(k) {
            return k.clone();
        }
        let elements: Vec<usize> = k
            .elements
            .iter()
            .copied()
            .filter(|&x| (0..self.order()).all(|g| k.contains(self.conj(g, x))))
            .collect();
        let gens = self.small_generating_set(&elements);
        self.subgroup_from_elements(&elements, gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut members = a.members.clone();
        members.intersect_with(&b.members);
        let elements: Vec<usize> = members.ones().collect();
        let gens = self.small_generating_set(&elements);
        Subgroup::from_members(members, gens)
    }

    /// `<a, b>`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.closure_with(a, &b.generators)
    }

    /// Normal closure of `extra` in `within`, on top of `base ⊴ within`.
    pub fn normal_closure_in(&self, within: &Subgroup, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut current = self.closure_with(base, extra);
        loop {
            let missing: Vec<usize> = within
                .generators
                .iter()
                .flat_map(|&g| current.generators.iter().map(move |&x| (g, x)))
                .map(|(g, x)| self.conj(g, x))
                .filter(|&y| !current.contains(y))
                .collect();
            if missing.is_empty() {
                return current;
            }
            current = self.closure_with(&current, &missing);
        }
    }

    /// Derived subgroup `[H, H]`: the normal closure in `h` of the commutators of its generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = &h.generators;
        let commutators: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure_in(h, &self.trivial_subgroup(), &commutators)
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        self.derived_subgroup(&self.whole())
    }

    /// Product `N M` of two subgroups one of which normalizes the other.
    pub(crate) fn product_of_normal(&self, n: &Subgroup, m: &Subgroup) -> Subgroup {
        if m.is_subgroup_of(n) {
            return n.clone();
        }
        if n.is_subgroup_of(m) {
            return m.clone();
        }
        let mut members = FixedBitSet::with_capacity(self.order());
        for &a in &n.elements {
            for &b in &m.elements {
                members.insert(self.mul(a, b));
            }
        }
        let mut gens = n.generators.clone();
        gens.extend(m.generators.iter().copied().filter(|&x| !n.contains(x)));
        Subgroup::from_members(members, gens)
    }

    /// Representatives of the left cosets `x S` of `s` in `within`, least element first.
    pub fn left_transversal(&self, within: &Subgroup, s: &Subgroup) -> Vec<usize> {
        let mut covered = FixedBitSet::with_capacity(self.order());
        let mut reps = Vec::new();
        for &x in &within.elements {
            if covered.contains(x) {
                continue;
            }
            reps.push(x);
            for &y in &s.elements {
                covered.insert(self.mul(x, y));
            }
        }
        reps
    }

    /// Greedy generating set of the subgroup formed by `elements` (which must be closed).
    pub(crate) fn small_generating_set(&self, elements: &[usize]) -> Vec<usize> {
        let mut current = self.trivial_subgroup();
        let mut gens = Vec::new();
        // Elements of large order first keep the set short.
        let mut by_order: Vec<usize> = elements.to_vec();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        for x in by_order {
            if current.order() == elements.len() {
                break;
            }
            if !current.contains(x) {
                current = self.closure_with(&current, &[x]);
                gens.push(x);
            }
        }
        gens
    }

    /// Minimal normal subgroups `L` of `h` with `k < L`, in canonical order.
    pub fn minimal_normals_above(&self, h: &Subgroup, k: &Subgroup) -> Result<Vec<Subgroup>> {
        if !self.is_normal_in(k, h) {
            return Err(Error::NotNormal);
        }
        // A minimal L is the normal closure of any x in L \ K; some such x has prime order mod K.
        let mut candidates: Vec<Subgroup> = Vec::new();
        for &x in &h.elements {
            if k.contains(x) || !self.has_prime_order_modulo(x, k) {
                continue;
            }
            // A candidate of prime index over K is already the closure of any of its elements.
            if candidates
                .iter()
                .any(|c| c.contains(x) && is_prime(c.order() / k.order()))
            {
                continue;
            }
            let l = self.normal_closure_in(h, k, &[x]);
            if !candidates.contains(&l) {
                candidates.push(l);
            }
        }
        let mut minimal: Vec<Subgroup> = candidates
            .iter()
            .filter(|c| {
                !candidates
                    .iter()
                    .any(|d| d != *c && d.is_subgroup_of(c))
            })
            .cloned()
            .collect();
        minimal.sort();
        Ok(minimal)
    }

    fn has_prime_order_modulo(&self, x: usize, k: &Subgroup) -> bool {
        let mut y = x;
        let mut m = 1;
        while !k.contains(y) {
            y = self.mul(y, x);
            m += 1;
        }
        is_prime(m)
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
