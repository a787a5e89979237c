//! Independent checks on sets of primitive central idempotents.

use crate::algebra::{GroupAlgebra, Idempotent, Provenance, DEFAULT_ORACLE_CAP};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::quotient::Quotient;
use crate::shoda::ext_strong_shoda_pairs;

/// The idempotents of the commutative components of Q[G]: `hat(G)` and
/// `epsilon(G, N)` for each `N ⊇ G'` with `G/N` nontrivial cyclic.
pub fn linear_pci_set(g: &FiniteGroup) -> Result<Vec<Idempotent>> {
    let qg = GroupAlgebra::new(g);
    let whole = g.whole();
    let derived = g.commutator_subgroup();
    let mut out = vec![Idempotent {
        element: qg.hat(&whole),
        provenance: Provenance::Hat(whole.clone()),
    }];
    for n in g.normal_subgroups_decreasing().into_iter().skip(1) {
        if derived.is_subgroup_of(&n) && Quotient::new(g, &whole, &n)?.is_cyclic() {
            let e = qg.epsilon(&whole, &n)?;
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotIdempotent { index: usize },
    NotCentral { index: usize },
    NotOrthogonal { first: usize, second: usize },
    DimensionsExceedOrder { sum: usize, order: usize },
    SumNotOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub count: usize,
    /// Sum of `dim_direct`, or `None` when |G| is above the oracle cap.
    pub dim_sum: Option<usize>,
    pub sum_is_one: bool,
    pub violation: Option<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks idempotency, centrality, pairwise orthogonality, `Σ dim <= |G|`, and,
/// when `claimed_complete`, that the idempotents sum to 1. Stops at the first violation.
pub fn verify_pci_set(g: &FiniteGroup, es: &[Idempotent], claimed_complete: bool) -> VerifyReport {
    let qg = GroupAlgebra::new(g);
    let elements: Vec<_> = es.iter().map(|e| e.element.clone()).collect();
    let sum_is_one = qg.sum_is_one(&elements);
    let mut report = VerifyReport {
        count: es.len(),
        dim_sum: None,
        sum_is_one,
        violation: None,
    };
    let fail = |mut r: VerifyReport, v| {
        r.violation = Some(v);
        r
    };
    for (index, e) in elements.iter().enumerate() {
        if !qg.is_idempotent(e) {
            return fail(report, Violation::NotIdempotent { index });
        }
        if !qg.is_central(e) {
            return fail(report, Violation::NotCentral { index });
        }
    }
    for first in 0..elements.len() {
        for second in first + 1..elements.len() {
            if !qg.are_orthogonal(&[elements[first].clone(), elements[second].clone()]) {
                return fail(report, Violation::NotOrthogonal { first, second });
            }
        }
    }
    if g.order() <= DEFAULT_ORACLE_CAP {
        let sum = elements
            .iter()
            .map(|e| qg.dim_direct(e))
            .sum::<Result<usize>>()
            .expect("order is within the oracle cap");
        report.dim_sum = Some(sum);
        if sum > g.order() {
            return fail(report, Violation::DimensionsExceedOrder { sum, order: g.order() });
        }
    }
    if claimed_complete && !sum_is_one {
        return fail(report, Violation::SumNotOne);
    }
    report
}

/// For a normally monomial group, whether the number of extremely strong Shoda
/// pairs equals the number of rational conjugacy classes.
pub fn count_consistency(g: &FiniteGroup) -> Result<bool> {
    Ok(ext_strong_shoda_pairs(g)?.pairs.len() == g.rational_class_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::shoda::pcis_by_essp;

    #[test]
    fn linear_idempotents() {
        assert_eq!(linear_pci_set(&catalog::cyclic(2).unwrap()).unwrap().len(), 2);
        assert_eq!(linear_pci_set(&catalog::symmetric(3).unwrap()).unwrap().len(), 2);
        assert_eq!(linear_pci_set(&catalog::alternating(5).unwrap()).unwrap().len(), 1);
        assert_eq!(linear_pci_set(&catalog::cyclic(6).unwrap()).unwrap().len(), 4);
    }

    #[test]
    fn c2_trivial_pair_passes() {
        let g = catalog::cyclic(2).unwrap();
        let es = linear_pci_set(&g).unwrap();
        let r = verify_pci_set(&g, &es, true);
        assert!(r.passed());
        assert!(r.sum_is_one);
        assert_eq!(r.dim_sum, Some(2));
    }

    #[test]
    fn duplicate_is_caught() {
        let g = catalog::cyclic(3).unwrap();
        let mut es = linear_pci_set(&g).unwrap();
        es.push(es[0].clone());
        let r = verify_pci_set(&g, &es, false);
        assert_eq!(r.violation, Some(Violation::NotOrthogonal { first: 0, second: 2 }));
    }

    #[test]
    fn q8_essp_output_verifies() {
        let g = catalog::dicyclic(8).unwrap();
        let es = pcis_by_essp(&g).unwrap();
        let r = verify_pci_set(&g, &es, true);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.dim_sum, Some(8));
    }

    #[test]
    fn berman_witt_counts() {
        for g in [catalog::cyclic(6), catalog::dicyclic(8), catalog::dihedral(8)] {
            assert!(count_consistency(&g.unwrap()).unwrap());
        }
    }
}
