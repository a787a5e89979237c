//! Finite permutation groups with a fully enumerated, canonically ordered element list.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Groups up to this order get a dense multiplication table.
const TABLE_LIMIT: usize = 2048;

/// A finite group given by permutation generators, with every element enumerated.
///
/// Elements are identified by their ordinal in the lexicographic order of image
/// arrays; the identity is always ordinal 0.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    fingerprint: u64,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `generators` on `degree` points.
    pub fn enumerate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::enumerate_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn enumerate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        // Right-multiplication orbit of the identity, remembering a spanning tree:
        // every non-identity element is `parent * generators[via]`.
        let identity = Permutation::identity(degree);
        let mut found: HashMap<Permutation, usize> = HashMap::new();
        found.insert(identity.clone(), 0);
        let mut discovered = vec![identity];
        let mut tree: Vec<(usize, usize)> = vec![(0, 0)];
        let mut next = 0;
        while next < discovered.len() {
            for (s, gen) in generators.iter().enumerate() {
                let y = discovered[next].compose(gen);
                if !found.contains_key(&y) {
                    if discovered.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    found.insert(y.clone(), discovered.len());
                    discovered.push(y);
                    tree.push((next, s));
                }
            }
            next += 1;
        }

        let n = discovered.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| discovered[a].cmp(&discovered[b]));
        let mut canonical = vec![0usize; n];
        for (c, &d) in order.iter().enumerate() {
            canonical[d] = c;
        }
        let bfs: Vec<usize> = canonical.clone();
        let tree: Vec<(usize, usize)> = tree
            .into_iter()
            .map(|(parent, s)| (canonical[parent], s))
            .collect();
        let mut elements = vec![Permutation::identity(degree); n];
        for (d, p) in discovered.into_iter().enumerate() {
            elements[canonical[d]] = p;
        }
        let index: HashMap<Permutation, usize> = found
            .into_iter()
            .map(|(p, d)| (p, canonical[d]))
            .collect();

        // Right multiplication by each generator.
        let right: Vec<Vec<u32>> = generators
            .iter()
            .map(|s| {
                elements
                    .iter()
                    .map(|x| index[&x.compose(s)] as u32)
                    .collect()
            })
            .collect();

        // Columns filled in discovery order: a * b = (a * parent(b)) * generator.
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                t[a * n] = a as u32;
            }
            for (d, &(parent, s)) in tree.iter().enumerate().skip(1) {
                let b = bfs[d];
                for a in 0..n {
                    let ap = t[a * n + parent] as usize;
                    t[a * n + b] = right[s][ap];
                }
            }
            t
        });

        let inverses = elements
            .iter()
            .map(|p| index[&p.inverse()] as u32)
            .collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();

        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        let fingerprint = hasher.finish();

        let mut group = FiniteGroup {
            degree,
            generators,
            generator_ids,
            elements,
            index,
            table,
            inverses,
            orders: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            fingerprint,
        };
        group.orders = (0..n).map(|x| group.compute_order(x)).collect();
        group.compute_classes();
        Ok(group)
    }

    /// The group with the given multiplication, realized by its right regular action
    /// on `order` points. `mul` must be a group law on `0..order` with identity 0.
    pub fn from_regular_action(
        order: usize,
        generators: &[usize],
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let perms = generators
            .iter()
            .map(|&g| Permutation::from_images((0..order).map(|x| mul(x, g) as u32).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::enumerate(order, perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Ordinals of the generators.
    pub fn generator_ids(&self) -> &[usize] {
        &self.generator_ids
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &Permutation {
        &self.elements[x]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Identifies the enumerated element set; equal groups share a fingerprint.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g * x * g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 * b^-1 * a * b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut result = self.identity();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut k = 1;
        let mut y = x;
        while y != self.identity() {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[x] = id;
            let mut class = vec![x];
            let mut i = 0;
            while i < class.len() {
                let y = class[i];
                for &g in &self.generator_ids {
                    let z = self.conj(g, y);
                    if class_of[z] == u32::MAX {
                        class_of[z] = id;
                        class.push(z);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    /// Conjugacy classes of elements, ordered by least member; each class is sorted.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_ids;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Number of rational classes: orbits of the conjugacy classes under `g -> g^k`
    /// with `k` coprime to the order of `g`.
    pub fn rational_class_count(&self) -> usize {
        let mut done = vec![false; self.classes.len()];
        let mut count = 0;
        for (c, class) in self.classes.iter().enumerate() {
            if done[c] {
                continue;
            }
            count += 1;
            let x = class[0];
            let m = self.element_order(x);
            for k in 1..=m {
                if k.gcd(&m) == 1 {
                    done[self.class_index(self.pow(x, k))] = true;
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::enumerate(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.rational_class_count(), 1);
    }

    #[test]
    fn dihedral_of_order_eight() {
        let g = FiniteGroup::enumerate(4, vec![perm(4, "(0 1 2 3)"), perm(4, "(0 2)")]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.element(0).is_identity());
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 5);
        assert_eq!(g.rational_class_count(), 5);
    }

    #[test]
    fn cyclic_of_order_five() {
        let g = FiniteGroup::enumerate(5, vec![perm(5, "(0 1 2 3 4)")]).unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.is_abelian());
        assert_eq!(g.rational_class_count(), 2);
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let g = FiniteGroup::enumerate(3, vec![perm(3, "(0 1 2)"), perm(3, "(0 1)")]).unwrap();
        assert!(g.elements().windows(2).all(|w| w[0].images() < w[1].images()));
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.index_of(g.element(x)), Some(x));
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            FiniteGroup::enumerate(3, vec![perm(4, "(0 1)")]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            FiniteGroup::enumerate_with_cap(5, vec![perm(5, "(0 1 2 3 4)"), perm(5, "(0 1)")], 100),
            Err(Error::OrderCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn rational_classes_of_small_groups() {
        let c3 = FiniteGroup::enumerate(3, vec![perm(3, "(0 1 2)")]).unwrap();
        assert_eq!(c3.rational_class_count(), 2);
        let s4 = FiniteGroup::enumerate(4, vec![perm(4, "(0 1 2 3)"), perm(4, "(0 1)")]).unwrap();
        assert_eq!(s4.conjugacy_classes().len(), 5);
        assert_eq!(s4.rational_class_count(), 5);
    }

    #[test]
    fn regular_action_of_cyclic_group() {
        let g = FiniteGroup::from_regular_action(6, &[1], |a, b| (a + b) % 6).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(), 6);
        assert_eq!(g.rational_class_count(), 4);
    }
}
