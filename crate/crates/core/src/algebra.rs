//! Exact arithmetic in the rational group algebra Q[G] and the idempotents
//! attached to pairs of subgroups.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// Default cap on |G| for [`GroupAlgebra::dim_direct`].
pub const DEFAULT_ORACLE_CAP: usize = 200;

/// An element of Q[G]: a sparse map from element ordinals to nonzero rationals.
///
/// No zero coefficient is ever stored, so structural equality is equality in Q[G].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    group: u64,
    coeffs: BTreeMap<usize, BigRational>,
}

impl AlgebraElement {
    fn from_map(group: u64, mut coeffs: BTreeMap<usize, BigRational>) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        AlgebraElement { group, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, x: usize) -> BigRational {
        self.coeffs.get(&x).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing element order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&x, c)| (x, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Fingerprint of the group this element lives in.
    pub fn group_fingerprint(&self) -> u64 {
        self.group
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.terms().map(|(x, c)| format!("{c}*g{x}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// How an idempotent was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `hat(H)`.
    Hat(Subgroup),
    /// `epsilon(H, K)`.
    Epsilon(Subgroup, Subgroup),
    /// `e(G, H, K)`.
    Realized(Subgroup, Subgroup),
}

/// An idempotent of Q[G] together with the construction that produced it.
#[derive(Clone, Debug)]
pub struct Idempotent {
    pub element: AlgebraElement,
    pub provenance: Provenance,
}

impl PartialEq for Idempotent {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
    }
}

impl Eq for Idempotent {}

/// Q[G] for a fixed enumerated group.
#[derive(Clone, Copy)]
pub struct GroupAlgebra<'g> {
    group: &'g FiniteGroup,
}

impl<'g> GroupAlgebra<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        GroupAlgebra { group }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    fn check(&self, a: &AlgebraElement) -> Result<()> {
        if a.group == self.group.fingerprint() {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::from_map(self.group.fingerprint(), BTreeMap::new())
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.group.identity())
    }

    /// The group element `x` as an element of Q[G].
    pub fn basis(&self, x: usize) -> AlgebraElement {
        self.from_terms([(x, BigRational::one())])
    }

    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (usize, BigRational)>,
    ) -> AlgebraElement {
        let mut coeffs: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (x, c) in terms {
            *coeffs.entry(x).or_insert_with(BigRational::zero) += c;
        }
        AlgebraElement::from_map(self.group.fingerprint(), coeffs)
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    fn add_unchecked(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut coeffs = a.coeffs.clone();
        for (&x, c) in &b.coeffs {
            *coeffs.entry(x).or_insert_with(BigRational::zero) += c;
        }
        AlgebraElement::from_map(a.group, coeffs)
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_unchecked(a, b))
    }

    fn sub_unchecked(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut coeffs = a.coeffs.clone();
        for (&x, c) in &b.coeffs {
            *coeffs.entry(x).or_insert_with(BigRational::zero) -= c;
        }
        AlgebraElement::from_map(a.group, coeffs)
    }

    pub fn scalar_mul(&self, s: &BigRational, a: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        let coeffs = a.coeffs.iter().map(|(&x, c)| (x, c * s)).collect();
        Ok(AlgebraElement::from_map(a.group, coeffs))
    }

    /// Convolution product: `(sum a_x x)(sum b_y y) = sum a_x b_y (xy)`.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let g = self.group;
        let mut acc: Vec<Option<BigRational>> = vec![None; g.order()];
        for (&x, ca) in &a.coeffs {
            for (&y, cb) in &b.coeffs {
                let slot = &mut acc[g.mul(x, y)];
                let term = ca * cb;
                match slot {
                    Some(v) => *v += term,
                    None => *slot = Some(term),
                }
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter_map(|(z, c)| c.filter(|c| !c.is_zero()).map(|c| (z, c)))
            .collect();
        AlgebraElement::from_map(a.group, coeffs)
    }

    /// Whether `a * b == 0`, without building the product when it is not.
    fn product_is_zero(&self, a: &AlgebraElement, b: &AlgebraElement) -> bool {
        self.mul_unchecked(a, b).is_zero()
    }

    /// `hat(H) = (1/|H|) sum_{h in H} h`.
    pub fn hat(&self, h: &Subgroup) -> AlgebraElement {
        let c = BigRational::new(BigInt::one(), BigInt::from(h.order()));
        let coeffs = h.elements().iter().map(|&x| (x, c.clone())).collect();
        AlgebraElement::from_map(self.group.fingerprint(), coeffs)
    }

    /// `epsilon(H, K)`: `hat(H)` when `H = K`, otherwise the product of
    /// `hat(K) - hat(L)` over the minimal normal subgroups `L` of `H` properly containing `K`.
    pub fn epsilon(&self, h: &Subgroup, k: &Subgroup) -> Result<Idempotent> {
        let element = self.epsilon_element(h, k)?;
        Ok(Idempotent {
            element,
            provenance: Provenance::Epsilon(h.clone(), k.clone()),
        })
    }

    fn epsilon_element(&self, h: &Subgroup, k: &Subgroup) -> Result<AlgebraElement> {
        if !self.group.is_normal_in(k, h) {
            return Err(Error::NotNormal);
        }
        if h == k {
            return Ok(self.hat(h));
        }
        let k_hat = self.hat(k);
        let mut product = k_hat.clone();
        for l in self.group.minimal_normals_above(h, k)? {
            let factor = self.sub_unchecked(&k_hat, &self.hat(&l));
            product = self.mul_unchecked(&product, &factor);
        }
        Ok(product)
    }

    /// `g e g^-1`.
    pub fn conjugate(&self, e: &AlgebraElement, g: usize) -> AlgebraElement {
        let grp = self.group;
        let coeffs = e
            .coeffs
            .iter()
            .map(|(&x, c)| (grp.conj(g, x), c.clone()))
            .collect();
        AlgebraElement::from_map(e.group, coeffs)
    }

    /// The distinct G-conjugates of `epsilon(H, K)`, starting with `epsilon(H, K)` itself.
    ///
    /// Conjugation is constant on left cosets of `N_G(K) ∩ N_G(H)`, which fixes the
    /// idempotent, so only a transversal is visited.
    pub fn epsilon_conjugates(&self, h: &Subgroup, k: &Subgroup) -> Result<Vec<AlgebraElement>> {
        let eps = self.epsilon_element(h, k)?;
        let g = self.group;
        let stabilizer = g.intersection(&g.normalizer(k), &g.normalizer(h));
        let mut conjugates: Vec<AlgebraElement> = vec![eps.clone()];
        for x in g.left_transversal(&g.whole(), &stabilizer).into_iter().skip(1) {
            let c = self.conjugate(&eps, x);
            if !conjugates.contains(&c) {
                conjugates.push(c);
            }
        }
        Ok(conjugates)
    }

    /// Whether the distinct conjugates (as returned by [`Self::epsilon_conjugates`]) are
    /// mutually orthogonal. Since `e_i e_j` is a conjugate of `e_0 (y e_0 y^-1)`, checking
    /// products with the first conjugate suffices.
    pub fn conjugates_orthogonal(&self, conjugates: &[AlgebraElement]) -> bool {
        conjugates
            .split_first()
            .is_none_or(|(first, rest)| {
                rest.iter().all(|c| self.product_is_zero(first, c))
            })
    }

    /// `e(G, H, K)`: the sum of the distinct G-conjugates of `epsilon(H, K)`.
    pub fn e_of(&self, h: &Subgroup, k: &Subgroup) -> Result<Idempotent> {
        let conjugates = self.epsilon_conjugates(h, k)?;
        Ok(self.sum_conjugates(h, k, &conjugates))
    }

    pub(crate) fn sum_conjugates(
        &self,
        h: &Subgroup,
        k: &Subgroup,
        conjugates: &[AlgebraElement],
    ) -> Idempotent {
        let element = conjugates
            .iter()
            .fold(self.zero(), |acc, c| self.add_unchecked(&acc, c));
        Idempotent {
            element,
            provenance: Provenance::Realized(h.clone(), k.clone()),
        }
    }

    pub fn is_idempotent(&self, e: &AlgebraElement) -> bool {
        &self.mul_unchecked(e, e) == e
    }

    /// Central iff fixed by conjugation with every generator of G.
    pub fn is_central(&self, e: &AlgebraElement) -> bool {
        self.group
            .generator_ids()
            .iter()
            .all(|&g| &self.conjugate(e, g) == e)
    }

    /// Pairwise products vanish in both orders.
    pub fn are_orthogonal(&self, es: &[AlgebraElement]) -> bool {
        es.iter().enumerate().all(|(i, a)| {
            es[i + 1..]
                .iter()
                .all(|b| self.product_is_zero(a, b) && self.product_is_zero(b, a))
        })
    }

    pub fn sum_is_one(&self, es: &[AlgebraElement]) -> bool {
        let total = es
            .iter()
            .fold(self.zero(), |acc, e| self.add_unchecked(&acc, e));
        total == self.one()
    }

    /// `phi([H:K]) [N_G(K):H] [G:N_G(K)]^2`, the Q-dimension of `Q[G] e(G,H,K)` for a
    /// strong Shoda pair.
    pub fn dim_formula(&self, h: &Subgroup, k: &Subgroup) -> u64 {
        dim_formula(self.group, h, k)
    }

    /// Rank over Q of `{g e : g in G}`, by exact Gaussian elimination.
    pub fn dim_direct(&self, e: &AlgebraElement) -> Result<usize> {
        self.dim_direct_with_cap(e, DEFAULT_ORACLE_CAP)
    }

    pub fn dim_direct_with_cap(&self, e: &AlgebraElement, cap: usize) -> Result<usize> {
        self.check(e)?;
        let g = self.group;
        let n = g.order();
        if n > cap {
            return Err(Error::OracleCapExceeded { order: n, cap });
        }
        // Clear denominators: the rank is unchanged by scaling.
        let lcm = e
            .coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<(usize, BigInt)> = e
            .coeffs
            .iter()
            .map(|(&x, c)| (x, (c * BigRational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let mut rows: Vec<Vec<BigRational>> = (0..n)
            .map(|row| {
                let mut v = vec![BigRational::zero(); n];
                for (x, c) in &scaled {
                    v[g.mul(row, *x)] = BigRational::from_integer(c.clone());
                }
                v
            })
            .collect();
        Ok(rank(&mut rows))
    }
}

/// `phi([H:K]) [N_G(K):H] [G:N_G(K)]^2`.
pub fn dim_formula(group: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> u64 {
    let nk = group.normalizer(k).order() as u64;
    let outer = group.order() as u64 / nk;
    euler_phi((h.order() / k.order()) as u64) * (nk / h.order() as u64) * outer * outer
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Rank by forward elimination; only rows below each pivot are cleared.
fn rank(rows: &mut [Vec<BigRational>]) -> usize {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (done, below) = rows.split_at_mut(rank + 1);
        let pivot_row = &done[rank];
        let inv = pivot_row[col].recip();
        for row in below.iter_mut().filter(|row| !row[col].is_zero()) {
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    rank
}

/// Serialization helper: `(element in cycle notation, numerator, denominator)` in element order.
pub fn element_triples(group: &FiniteGroup, e: &AlgebraElement) -> Vec<(String, BigInt, BigInt)> {
    e.terms()
        .map(|(x, c)| {
            let (num, den) = if c.denom().is_negative() {
                (-c.numer().clone(), -c.denom().clone())
            } else {
                (c.numer().clone(), c.denom().clone())
            };
            (group.element(x).to_string(), num, den)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn c2_averaging_idempotent() {
        let c2 = catalog::cyclic(2).unwrap();
        let qg = GroupAlgebra::new(&c2);
        let e = qg.from_terms([(0, q(1, 2)), (1, q(1, 2))]);
        assert_eq!(qg.mul(&e, &e).unwrap(), e);
        assert_eq!(qg.hat(&c2.whole()), e);
        assert_eq!(qg.hat(&c2.trivial_subgroup()), qg.one());
        let eps = qg.epsilon(&c2.whole(), &c2.trivial_subgroup()).unwrap();
        assert_eq!(eps.element, qg.from_terms([(0, q(1, 2)), (1, q(-1, 2))]));
    }

    #[test]
    fn zero_coefficients_are_purged() {
        let c2 = catalog::cyclic(2).unwrap();
        let qg = GroupAlgebra::new(&c2);
        let a = qg.basis(1);
        assert!(qg.sub(&a, &a).unwrap().is_zero());
        assert_eq!(qg.sub(&a, &a).unwrap(), qg.zero());
    }

    #[test]
    fn group_mismatch_is_detected() {
        let c2 = catalog::cyclic(2).unwrap();
        let c3 = catalog::cyclic(3).unwrap();
        let a = GroupAlgebra::new(&c2).one();
        let qg3 = GroupAlgebra::new(&c3);
        assert_eq!(qg3.mul(&a, &qg3.one()), Err(Error::GroupMismatch));
        assert_eq!(qg3.add(&qg3.one(), &a), Err(Error::GroupMismatch));
    }

    #[test]
    fn hat_products_in_s3() {
        let s3 = catalog::symmetric(3).unwrap();
        let qg = GroupAlgebra::new(&s3);
        let subgroups = s3.all_subgroups().unwrap();
        let c2 = subgroups.iter().find(|h| h.order() == 2).unwrap();
        let c3 = subgroups.iter().find(|h| h.order() == 3).unwrap();
        let p = qg.mul(&qg.hat(c3), &qg.hat(c2)).unwrap();
        assert_eq!(p.support_len(), 6);
        assert!(p.terms().all(|(_, c)| *c == q(1, 6)));
        assert!(!qg.is_central(&qg.hat(c2)));
        assert!(qg.is_central(&qg.hat(c3)));
    }

    #[test]
    fn epsilon_of_c6() {
        let c6 = catalog::cyclic(6).unwrap();
        let qg = GroupAlgebra::new(&c6);
        let one = c6.trivial_subgroup();
        let eps = qg.epsilon(&c6.whole(), &one).unwrap().element;
        let subs = c6.all_subgroups().unwrap();
        let c2 = subs.iter().find(|h| h.order() == 2).unwrap();
        let c3 = subs.iter().find(|h| h.order() == 3).unwrap();
        let expected = qg
            .mul(
                &qg.sub(&qg.one(), &qg.hat(c2)).unwrap(),
                &qg.sub(&qg.one(), &qg.hat(c3)).unwrap(),
            )
            .unwrap();
        assert_eq!(eps, expected);
        assert!(qg.is_idempotent(&eps));
        assert_eq!(qg.epsilon(&c2.clone(), &c2.clone()).unwrap().element, qg.hat(c2));
    }

    #[test]
    fn realized_idempotents() {
        let s3 = catalog::symmetric(3).unwrap();
        let qg = GroupAlgebra::new(&s3);
        assert_eq!(qg.e_of(&s3.whole(), &s3.whole()).unwrap().element, qg.hat(&s3.whole()));
        let c3 = s3.normal_subgroups_decreasing()[1].clone();
        let e = qg.e_of(&c3, &s3.trivial_subgroup()).unwrap().element;
        assert_eq!(e, qg.sub(&qg.one(), &qg.hat(&c3)).unwrap());
        assert_eq!(qg.dim_direct(&e).unwrap(), 4);
        assert_eq!(qg.dim_formula(&c3, &s3.trivial_subgroup()), 4);
    }

    #[test]
    fn q8_epsilon_is_invariant() {
        let q8 = catalog::dicyclic(8).unwrap();
        let qg = GroupAlgebra::new(&q8);
        let c4 = q8.normal_subgroups_decreasing()[1].clone();
        let one = q8.trivial_subgroup();
        let eps = qg.epsilon(&c4, &one).unwrap().element;
        for x in 0..q8.order() {
            assert_eq!(qg.conjugate(&eps, x), eps);
        }
        let e = qg.e_of(&c4, &one).unwrap().element;
        assert_eq!(e, eps);
        assert!(qg.is_central(&e) && qg.is_idempotent(&e));
        assert_eq!(qg.dim_formula(&c4, &one), 4);
        assert_eq!(qg.dim_direct(&e).unwrap(), 4);
    }

    #[test]
    fn dimension_formula_s4() {
        let s4 = catalog::symmetric(4).unwrap();
        let qg = GroupAlgebra::new(&s4);
        let normals = s4.normal_subgroups_decreasing();
        assert_eq!(qg.dim_formula(&normals[0], &normals[0]), 1);
        assert_eq!(qg.dim_formula(&normals[1], &normals[2]), 4);
    }

    #[test]
    fn direct_dimension_extremes() {
        let s3 = catalog::symmetric(3).unwrap();
        let qg = GroupAlgebra::new(&s3);
        assert_eq!(qg.dim_direct(&qg.hat(&s3.whole())).unwrap(), 1);
        assert_eq!(qg.dim_direct(&qg.one()).unwrap(), 6);
        let big = catalog::cyclic(7).unwrap();
        let qb = GroupAlgebra::new(&big);
        assert!(matches!(
            qb.dim_direct_with_cap(&qb.one(), 5),
            Err(Error::OracleCapExceeded { .. })
        ));
    }

    #[test]
    fn phi() {
        let values: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(values, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
