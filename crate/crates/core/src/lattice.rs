//! Normal subgroups, the full subgroup lattice, and conjugacy classes of subgroups.
//!
//! The lattice is built by join closure: every subgroup is the join of the
//! cyclic subgroups it contains, so starting from the cyclic subgroups and
//! repeatedly joining with one more cyclic subgroup reaches every subgroup.
//! This also finds perfect subgroups, which the classical cyclic extension
//! method misses. Normal subgroups are found the same way from the normal
//! closures of single conjugacy classes, without touching the full lattice.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::quotient::Quotient;
use crate::subgroup::Subgroup;

/// Default cap on the number of subgroups in a lattice.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Least member in canonical subgroup order.
    pub representative: Subgroup,
    /// All members, in canonical order.
    pub members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Which candidate to keep when several normal subgroups tie for the largest
/// abelian quotient in [`FiniteGroup::max_abelian_normal_above`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// First in canonical subgroup order.
    #[default]
    First,
    /// Last in canonical subgroup order.
    Last,
}

impl FiniteGroup {
    /// All normal subgroups, by decreasing order; equal orders in canonical order.
    pub fn normal_subgroups_decreasing(&self) -> Vec<Subgroup> {
        let trivial = self.trivial_subgroup();
        let mut atoms: Vec<Subgroup> = Vec::new();
        for class in self.conjugacy_classes().iter().skip(1) {
            let n = self.closure_with(&trivial, class);
            if !atoms.contains(&n) {
                atoms.push(n);
            }
        }
        let mut seen: HashSet<Subgroup> = HashSet::new();
        seen.insert(trivial.clone());
        let mut found = vec![trivial];
        let mut frontier: Vec<Subgroup> = Vec::new();
        for a in &atoms {
            if seen.insert(a.clone()) {
                found.push(a.clone());
                frontier.push(a.clone());
            }
        }
        while let Some(n) = frontier.pop() {
            for a in &atoms {
                if a.is_subgroup_of(&n) {
                    continue;
                }
                let j = self.product_of_normal(&n, a);
                if seen.insert(j.clone()) {
                    found.push(j.clone());
                    frontier.push(j);
                }
            }
        }
        found.sort_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then_with(|| a.elements().cmp(b.elements()))
        });
        found
    }

    /// Every subgroup between `lower` and `upper` (inclusive), in canonical order.
    pub fn intermediate_subgroups(
        &self,
        lower: &Subgroup,
        upper: &Subgroup,
        cap: usize,
    ) -> Result<Vec<Subgroup>> {
        debug_assert!(lower.is_subgroup_of(upper));
        // Atoms <lower, x>, each recorded with one x that generates it over `lower`.
        let mut atoms: Vec<(usize, Subgroup)> = Vec::new();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        seen.insert(lower.clone());
        for &x in upper.elements() {
            if lower.contains(x)
                || atoms
                    .iter()
                    .any(|(_, a)| a.contains(x) && self.generates_over(a, lower, x))
            {
                continue;
            }
            let a = self.closure_with(lower, &[x]);
            if seen.insert(a.clone()) {
                atoms.push((x, a));
            }
        }
        let mut found: Vec<Subgroup> = vec![lower.clone()];
        found.extend(atoms.iter().map(|(_, a)| a.clone()));
        if found.len() > cap {
            return Err(Error::LatticeCapExceeded { cap });
        }
        let mut next = 1;
        while next < found.len() {
            let s = found[next].clone();
            next += 1;
            for (x, a) in &atoms {
                if a.is_subgroup_of(&s) {
                    continue;
                }
                let j = self.closure_with(&s, &[*x]);
                if seen.insert(j.clone()) {
                    found.push(j);
                    if found.len() > cap {
                        return Err(Error::LatticeCapExceeded { cap });
                    }
                }
            }
        }
        found.sort();
        Ok(found)
    }

    // Given x in a: <lower, x> == a. Decided only when x normalizes lower, where
    // |<lower, x>| = |lower| * (order of x modulo lower); otherwise reports false.
    fn generates_over(&self, a: &Subgroup, lower: &Subgroup, x: usize) -> bool {
        if !lower
            .generators()
            .iter()
            .all(|&l| lower.contains(self.conj(x, l)))
        {
            return false;
        }
        let mut y = x;
        let mut m = 1;
        while !lower.contains(y) {
            y = self.mul(y, x);
            m += 1;
        }
        m * lower.order() == a.order()
    }

    /// The full subgroup lattice, in canonical order.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_with_cap(DEFAULT_LATTICE_CAP)
    }

    pub fn all_subgroups_with_cap(&self, cap: usize) -> Result<Vec<Subgroup>> {
        self.intermediate_subgroups(&self.trivial_subgroup(), &self.whole(), cap)
    }

    /// Partition of `subgroups` (which must be closed under conjugation) into
    /// conjugacy classes, ordered by representative.
    pub fn classify_subgroups(&self, subgroups: &[Subgroup]) -> Vec<SubgroupClass> {
        let position: HashMap<&Subgroup, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut assigned = vec![false; subgroups.len()];
        let mut classes = Vec::new();
        let mut order: Vec<usize> = (0..subgroups.len()).collect();
        order.sort_by(|&a, &b| subgroups[a].cmp(&subgroups[b]));
        for i in order {
            if assigned[i] {
                continue;
            }
            assigned[i] = true;
            let mut members = vec![subgroups[i].clone()];
            let mut j = 0;
            while j < members.len() {
                for &g in self.generator_ids() {
                    let c = self.conjugate_subgroup(&members[j], g);
                    let p = *position
                        .get(&c)
                        .expect("subgroup list not closed under conjugation");
                    if !assigned[p] {
                        assigned[p] = true;
                        members.push(subgroups[p].clone());
                    }
                }
                j += 1;
            }
            members.sort();
            classes.push(SubgroupClass {
                representative: members[0].clone(),
                members,
            });
        }
        classes
    }

    pub fn conjugacy_classes_of_subgroups(&self) -> Result<Vec<SubgroupClass>> {
        Ok(self.classify_subgroups(&self.all_subgroups()?))
    }

    /// A normal subgroup `A ⊇ N` of G with `A/N` abelian and of maximal order.
    pub fn max_abelian_normal_above(&self, n: &Subgroup) -> Subgroup {
        self.max_abelian_normal_among(&self.normal_subgroups_decreasing(), n, TieBreak::First)
    }

    /// As [`FiniteGroup::max_abelian_normal_above`], choosing among the given normal subgroups.
    pub fn max_abelian_normal_among(
        &self,
        normals: &[Subgroup],
        n: &Subgroup,
        tie: TieBreak,
    ) -> Subgroup {
        let mut candidates = normals
            .iter()
            .filter(|m| n.is_subgroup_of(m) && self.is_abelian_over(m, n));
        let first = candidates
            .next()
            .expect("N itself always qualifies")
            .clone();
        let best = first.order();
        match tie {
            TieBreak::First => first,
            TieBreak::Last => candidates
                .take_while(|m| m.order() == best)
                .last()
                .cloned()
                .unwrap_or(first),
        }
    }

    /// Whether `m / n` is abelian, for `n ⊴ m`.
    pub fn is_abelian_over(&self, m: &Subgroup, n: &Subgroup) -> bool {
        let gens = m.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| n.contains(self.commutator(a, b))))
    }

    /// Normal subgroups `D` of `a` with `a/D` cyclic, in canonical order.
    pub fn cyclic_quotient_subgroups(&self, a: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        let derived = self.derived_subgroup(a);
        Ok(self
            .intermediate_subgroups(&derived, a, cap)?
            .into_iter()
            .filter(|d| Quotient::new(self, a, d).is_ok_and(|q| q.is_cyclic()))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn orders(v: &[Subgroup]) -> Vec<usize> {
        v.iter().map(Subgroup::order).collect()
    }

    #[test]
    fn lattices_of_small_groups() {
        assert_eq!(catalog::cyclic(1).unwrap().all_subgroups().unwrap().len(), 1);
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(orders(&s3.all_subgroups().unwrap()), vec![1, 2, 2, 2, 3, 6]);
        let q8 = catalog::dicyclic(8).unwrap();
        assert_eq!(orders(&q8.all_subgroups().unwrap()), vec![1, 2, 4, 4, 4, 8]);
        let d8 = catalog::dihedral(8).unwrap();
        assert_eq!(d8.all_subgroups().unwrap().len(), 10);
        let s4 = catalog::symmetric(4).unwrap();
        assert_eq!(s4.all_subgroups().unwrap().len(), 30);
        let a5 = catalog::alternating(5).unwrap();
        assert_eq!(a5.all_subgroups().unwrap().len(), 59);
    }

    #[test]
    fn lattice_cap_is_enforced() {
        let s4 = catalog::symmetric(4).unwrap();
        assert!(matches!(
            s4.all_subgroups_with_cap(10),
            Err(Error::LatticeCapExceeded { cap: 10 })
        ));
    }

    #[test]
    fn subgroup_classes() {
        let c6 = catalog::cyclic(6).unwrap();
        assert!(c6
            .conjugacy_classes_of_subgroups()
            .unwrap()
            .iter()
            .all(|c| c.len() == 1));
        let s3 = catalog::symmetric(3).unwrap();
        let sizes: Vec<usize> = s3
            .conjugacy_classes_of_subgroups()
            .unwrap()
            .iter()
            .map(SubgroupClass::len)
            .collect();
        assert_eq!(sizes, vec![1, 3, 1, 1]);
        let d8 = catalog::dihedral(8).unwrap();
        assert_eq!(d8.conjugacy_classes_of_subgroups().unwrap().len(), 8);
    }

    #[test]
    fn normal_subgroups() {
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(orders(&s3.normal_subgroups_decreasing()), vec![6, 3, 1]);
        let q8 = catalog::dicyclic(8).unwrap();
        assert_eq!(orders(&q8.normal_subgroups_decreasing()), vec![8, 4, 4, 4, 2, 1]);
        let a5 = catalog::alternating(5).unwrap();
        assert_eq!(orders(&a5.normal_subgroups_decreasing()), vec![60, 1]);
        let s4 = catalog::symmetric(4).unwrap();
        assert_eq!(orders(&s4.normal_subgroups_decreasing()), vec![24, 12, 4, 1]);
    }

    #[test]
    fn abelian_normal_above() {
        let c4 = catalog::cyclic(4).unwrap();
        assert_eq!(c4.max_abelian_normal_above(&c4.trivial_subgroup()), c4.whole());
        let s3 = catalog::symmetric(3).unwrap();
        assert_eq!(s3.max_abelian_normal_above(&s3.trivial_subgroup()).order(), 3);
        let q8 = catalog::dicyclic(8).unwrap();
        let normals = q8.normal_subgroups_decreasing();
        let one = q8.trivial_subgroup();
        let first = q8.max_abelian_normal_among(&normals, &one, TieBreak::First);
        let last = q8.max_abelian_normal_among(&normals, &one, TieBreak::Last);
        assert_eq!((first.order(), last.order()), (4, 4));
        assert_ne!(first, last);
    }

    #[test]
    fn cyclic_quotients() {
        let c6 = catalog::cyclic(6).unwrap();
        assert_eq!(
            orders(&c6.cyclic_quotient_subgroups(&c6.whole(), DEFAULT_LATTICE_CAP).unwrap()),
            vec![1, 2, 3, 6]
        );
        let v4 = catalog::elementary_abelian(2, 2).unwrap();
        assert_eq!(
            orders(&v4.cyclic_quotient_subgroups(&v4.whole(), DEFAULT_LATTICE_CAP).unwrap()),
            vec![2, 2, 2, 4]
        );
    }
}
