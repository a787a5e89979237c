use shoda_core::catalog::{self, standard_corpus};
use shoda_core::{FiniteGroup, Permutation, Quotient, Subgroup, TieBreak};

fn small_corpus() -> Vec<(String, FiniteGroup)> {
    standard_corpus()
        .into_iter()
        .filter_map(|s| {
            let g = s.build().unwrap();
            (g.order() <= 24).then(|| (s.to_string(), g))
        })
        .collect()
}

fn perm(degree: usize, text: &str) -> Permutation {
    Permutation::parse_cycles(degree, text).unwrap()
}

#[test]
fn enumeration_examples() {
    let c1 = FiniteGroup::enumerate(1, vec![]).unwrap();
    assert_eq!(c1.order(), 1);
    let d8 = FiniteGroup::enumerate(4, vec![perm(4, "(0 1 2 3)"), perm(4, "(0 2)")]).unwrap();
    assert_eq!(d8.order(), 8);
    let c5 = FiniteGroup::enumerate(5, vec![perm(5, "(0 1 2 3 4)")]).unwrap();
    assert_eq!(c5.order(), 5);
    assert!(c5.is_abelian());
}

#[test]
fn subgroup_orders_divide_group_order() {
    for (name, g) in small_corpus() {
        for h in g.all_subgroups().unwrap() {
            assert_eq!(g.order() % h.order(), 0, "{name}");
            let nh = g.normalizer(&h);
            assert!(h.is_subgroup_of(&nh), "{name}");
            let core = g.core(&h);
            assert!(g.is_normal(&core) && core.is_subgroup_of(&h), "{name}");
            assert_eq!(core == h, g.is_normal(&h), "{name}");
        }
    }
}

#[test]
fn subgroup_classes_partition_the_lattice() {
    for (name, g) in small_corpus() {
        let lattice = g.all_subgroups().unwrap();
        let classes = g.classify_subgroups(&lattice);
        assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), lattice.len(), "{name}");
        for c in &classes {
            let index = g.order() / g.normalizer(&c.representative).order();
            assert_eq!(c.len(), index, "{name}");
            assert_eq!(&c.representative, c.members.iter().min().unwrap(), "{name}");
        }
        if g.is_abelian() {
            assert!(classes.iter().all(|c| c.len() == 1), "{name}");
        }
    }
}

#[test]
fn quotients_have_the_right_order() {
    for (name, g) in small_corpus() {
        for n in g.normal_subgroups_decreasing() {
            let q = Quotient::new(&g, &g.whole(), &n).unwrap();
            assert_eq!(q.order() * n.order(), g.order(), "{name}");
        }
    }
}

/// The chosen `A_N` is normal, contains `N`, is abelian over `N`, and no normal
/// subgroup with those properties is larger.
#[test]
fn abelian_normal_above_is_largest() {
    for (name, g) in small_corpus() {
        let normals = g.normal_subgroups_decreasing();
        for n in &normals {
            for tie in [TieBreak::First, TieBreak::Last] {
                let a = g.max_abelian_normal_among(&normals, n, tie);
                assert!(g.is_normal(&a) && n.is_subgroup_of(&a), "{name}");
                assert!(g.is_abelian_over(&a, n), "{name}");
                let best = normals
                    .iter()
                    .filter(|m| n.is_subgroup_of(m) && g.is_abelian_over(m, n))
                    .map(Subgroup::order)
                    .max()
                    .unwrap();
                assert_eq!(a.order(), best, "{name}");
            }
        }
    }
}

#[test]
fn abelian_normal_above_examples() {
    let s3 = catalog::symmetric(3).unwrap();
    assert_eq!(s3.max_abelian_normal_above(&s3.trivial_subgroup()).order(), 3);
    let c6 = catalog::cyclic(6).unwrap();
    assert_eq!(c6.max_abelian_normal_above(&c6.trivial_subgroup()), c6.whole());
    let q8 = catalog::dicyclic(8).unwrap();
    let a = q8.max_abelian_normal_above(&q8.trivial_subgroup());
    assert_eq!(a.order(), 4);
    assert_eq!(a, q8.max_abelian_normal_above(&q8.trivial_subgroup()));
}

#[test]
fn rational_classes_never_exceed_classes() {
    for (name, g) in small_corpus() {
        assert!(g.rational_class_count() <= g.conjugacy_classes().len(), "{name}");
    }
    for n in 1..=5 {
        let s = catalog::symmetric(n).unwrap();
        assert_eq!(s.rational_class_count(), s.conjugacy_classes().len());
    }
    assert_eq!(catalog::cyclic(3).unwrap().rational_class_count(), 2);
    assert_eq!(catalog::dicyclic(8).unwrap().rational_class_count(), 5);
}

#[test]
fn sylow_two_subgroup_of_s4() {
    let s4 = catalog::symmetric(4).unwrap();
    let d8 = s4
        .all_subgroups()
        .unwrap()
        .into_iter()
        .find(|h| h.order() == 8)
        .unwrap();
    assert_eq!(s4.normalizer(&d8), d8);
    let core = s4.core(&d8);
    assert_eq!(core.order(), 4);
    assert!(s4.is_normal(&core));
}

#[test]
fn dihedral_eight_has_ten_subgroups() {
    let d8 = "dihedral:8".parse::<catalog::GroupSpec>().unwrap().build().unwrap();
    assert_eq!(d8.all_subgroups().unwrap().len(), 10);
    assert_eq!(d8.conjugacy_classes_of_subgroups().unwrap().len(), 8);
}
