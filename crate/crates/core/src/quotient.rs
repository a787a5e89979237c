//! Quotients `H/K` materialized as coset tables.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// The quotient of `numerator` by a normal subgroup `modulus`.
///
/// Cosets are numbered by the order of their least element, so coset 0 is the
/// modulus itself and `representatives()[c]` is the least element of coset `c`.
pub struct Quotient<'g> {
    group: &'g FiniteGroup,
    numerator: Subgroup,
    modulus: Subgroup,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
    table: Vec<u32>,
}

const OUTSIDE: u32 = u32::MAX;

impl<'g> Quotient<'g> {
    /// Builds `h / k`; fails unless `k ⊴ h`.
    pub fn new(group: &'g FiniteGroup, h: &Subgroup, k: &Subgroup) -> Result<Self> {
        if !group.is_normal_in(k, h) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![OUTSIDE; group.order()];
        let mut reps = Vec::new();
        for &x in h.elements() {
            if coset_of[x] != OUTSIDE {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &y in k.elements() {
                coset_of[group.mul(x, y)] = c;
            }
        }
        let q = reps.len();
        let mut table = vec![0u32; q * q];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a * q + b] = coset_of[group.mul(ra, rb)];
            }
        }
        Ok(Quotient {
            group,
            numerator: h.clone(),
            modulus: k.clone(),
            coset_of,
            reps,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn numerator(&self) -> &Subgroup {
        &self.numerator
    }

    pub fn modulus(&self) -> &Subgroup {
        &self.modulus
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Coset index of a numerator element.
    pub fn coset(&self, x: usize) -> usize {
        let c = self.coset_of[x];
        debug_assert!(c != OUTSIDE, "element outside the numerator");
        c as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn coset_order(&self, c: usize) -> usize {
        let mut k = 1;
        let mut y = c;
        while y != 0 {
            y = self.mul(y, c);
            k += 1;
        }
        k
    }

    fn generator_cosets(&self) -> Vec<usize> {
        self.numerator
            .generators()
            .iter()
            .map(|&x| self.coset(x))
            .collect()
    }

    fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_cosets();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commute(a, b)))
    }

    /// Cyclic iff some coset has order equal to the quotient order.
    pub fn is_cyclic(&self) -> bool {
        let q = self.order();
        (0..q).any(|c| self.coset_order(c) == q)
    }

    /// Cosets central in the quotient, in increasing order.
    pub fn center(&self) -> Vec<usize> {
        let gens = self.generator_cosets();
        (0..self.order())
            .filter(|&c| gens.iter().all(|&g| self.commute(c, g)))
            .collect()
    }

    pub fn is_center_cyclic(&self) -> bool {
        let center = self.center();
        center.iter().any(|&c| self.coset_order(c) == center.len())
    }

    /// For `modulus <= a <= numerator` with `a / modulus` abelian: whether `a / modulus`
    /// is a maximal abelian subgroup of the quotient, i.e. equals its own centralizer.
    pub fn is_maximal_abelian(&self, a: &Subgroup) -> Result<bool> {
        debug_assert!(self.modulus.is_subgroup_of(a) && a.is_subgroup_of(&self.numerator));
        let gens: Vec<usize> = a.generators().iter().map(|&x| self.coset(x)).collect();
        if !gens.iter().all(|&x| gens.iter().all(|&y| self.commute(x, y))) {
            return Err(Error::NotAbelian);
        }
        let mut inside = FixedBitSet::with_capacity(self.order());
        for &x in a.elements() {
            inside.insert(self.coset(x));
        }
        Ok((0..self.order())
            .filter(|c| !inside.contains(*c))
            .all(|c| gens.iter().any(|&g| !self.commute(c, g))))
    }

    /// The subgroup of the parent group that is the preimage of the given cosets.
    pub fn preimage(&self, cosets: &[usize]) -> Subgroup {
        let mut elements: Vec<usize> = cosets
            .iter()
            .flat_map(|&c| {
                let r = self.reps[c];
                self.modulus.elements().iter().map(move |&k| (r, k))
            })
            .map(|(r, k)| self.group.mul(r, k))
            .collect();
        elements.sort_unstable();
        let gens = self.group.small_generating_set(&elements);
        self.group.subgroup_from_elements(&elements, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn trivial_quotient() {
        let s3 = catalog::symmetric(3).unwrap();
        let q = Quotient::new(&s3, &s3.whole(), &s3.whole()).unwrap();
        assert_eq!(q.order(), 1);
        assert!(q.is_cyclic());
    }

    #[test]
    fn s4_mod_v4_is_nonabelian_of_order_six() {
        let s4 = catalog::symmetric(4).unwrap();
        let v4 = s4
            .normal_subgroups_decreasing()
            .into_iter()
            .find(|n| n.order() == 4)
            .unwrap();
        let q = Quotient::new(&s4, &s4.whole(), &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert!(!q.is_cyclic());
        assert_eq!(q.center(), vec![0]);
    }

    #[test]
    fn q8_mod_center_is_klein_four() {
        let q8 = catalog::dicyclic(8).unwrap();
        let z = q8.center();
        let q = Quotient::new(&q8, &q8.whole(), &z).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!(!q.is_cyclic());
        assert_eq!(q.center().len(), 4);
        assert!(!q.is_center_cyclic());
    }

    #[test]
    fn coset_multiplication_is_representative_independent() {
        let s4 = catalog::symmetric(4).unwrap();
        for n in s4.normal_subgroups_decreasing() {
            let q = Quotient::new(&s4, &s4.whole(), &n).unwrap();
            assert_eq!(q.order() * n.order(), s4.order());
            for a in 0..s4.order() {
                for b in 0..s4.order() {
                    assert_eq!(q.coset(s4.mul(a, b)), q.mul(q.coset(a), q.coset(b)));
                }
            }
        }
    }

    #[test]
    fn non_normal_modulus_is_rejected() {
        let s3 = catalog::symmetric(3).unwrap();
        let t = s3
            .subgroup_generated(&[s3.generator_ids()[1]])
            .unwrap();
        assert!(matches!(
            Quotient::new(&s3, &s3.whole(), &t),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn maximal_abelian_subquotients() {
        let q8 = catalog::dicyclic(8).unwrap();
        let one = q8.trivial_subgroup();
        let q = Quotient::new(&q8, &q8.whole(), &one).unwrap();
        assert!(!q.is_maximal_abelian(&q8.center()).unwrap());
        let c4 = q8
            .subgroup_generated(&[(0..8).find(|&x| q8.element_order(x) == 4).unwrap()])
            .unwrap();
        assert!(q.is_maximal_abelian(&c4).unwrap());
        assert_eq!(q.is_maximal_abelian(&q8.whole()), Err(Error::NotAbelian));

        let c4 = catalog::cyclic(4).unwrap();
        let q = Quotient::new(&c4, &c4.whole(), &c4.trivial_subgroup()).unwrap();
        assert!(q.is_maximal_abelian(&c4.whole()).unwrap());
    }
}
