//! Structural invariants of Hom-groups checked on every fixture, on every
//! enumerated structure of small order, and on random relabelings.

mod common;

use common::{fixtures, latin_oracle, naive_classes, scan_left, scan_right, subsets_oracle};
use homgroups::classify::{canonical_form, classify_order, enumerate_hom_groups, SearchConfig};
use homgroups::constructions::{automorphisms_of, cyclic, dihedral, direct_product, twist};
use homgroups::document::{load, save};
use homgroups::group::verify;
use homgroups::hopf::{build_group_hopf, verify_hom_hopf};
use homgroups::subgroups::{
    center, centralizer, closure_failure, coset, enumerate_hom_subgroups, is_hom_subgroup,
    lagrange_check, Subset,
};
use homgroups::{HomGroup, Permutation, Side};
use proptest::prelude::*;

fn small_structures() -> Vec<HomGroup> {
    let mut all: Vec<HomGroup> = fixtures().into_iter().map(|(_, g)| g).collect();
    for n in 1..=5 {
        all.extend(enumerate_hom_groups(&SearchConfig::new(n).include_groups(true)).unwrap());
    }
    all
}

#[test]
fn every_structure_is_a_latin_square_with_alpha_borders() {
    for g in small_structures() {
        let n = g.order();
        for i in 0..n {
            let mut row: Vec<usize> = g.table().row(i).to_vec();
            let mut col: Vec<usize> = g.table().column(i).collect();
            row.sort_unstable();
            col.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>());
            assert_eq!(col, (0..n).collect::<Vec<_>>());
            assert_eq!(g.product(g.unit(), i), g.alpha().apply(i));
            assert_eq!(g.product(i, g.unit()), g.alpha().apply(i));
        }
    }
}

#[test]
fn inverse_laws() {
    for g in small_structures() {
        let n = g.order();
        let inv = |x: usize| g.inverse_of(x).unwrap();
        for a in 0..n {
            let candidates: Vec<usize> = (0..n).filter(|&b| g.product(a, b) == g.unit()).collect();
            assert_eq!(candidates, vec![inv(a)]);
            assert_eq!(g.product(inv(a), a), g.unit());
            assert_eq!(inv(g.alpha().apply(a)), g.alpha().apply(inv(a)));
            for b in 0..n {
                assert_eq!(inv(g.product(a, b)), g.product(inv(b), inv(a)));
                assert_eq!(g.product(a, b) == g.unit(), g.product(b, a) == g.unit());
            }
        }
    }
}

#[test]
fn division_formulas_agree_with_scans() {
    for g in small_structures() {
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.left_divide(a, b).unwrap(), scan_left(&g, a, b));
                assert_eq!(g.right_divide(a, b).unwrap(), scan_right(&g, a, b));
            }
        }
    }
}

#[test]
fn only_the_unit_row_can_be_the_identity_permutation_when_alpha_is_not() {
    for g in small_structures().into_iter().filter(|g| !g.is_group()) {
        for i in 0..g.order() {
            let identity_row = (0..g.order()).all(|j| g.product(i, j) == j);
            assert!(!identity_row, "row {i} of a non-group is the identity");
        }
    }
}

#[test]
fn subgroup_enumeration_matches_subset_oracle() {
    for g in small_structures().into_iter().chain(order_six()) {
        let got: Vec<Vec<usize>> = enumerate_hom_subgroups(&g)
            .iter()
            .map(|s| s.iter().collect())
            .collect();
        assert_eq!(got, subsets_oracle(&g), "table {:?}", g.table().rows());
    }
}

fn order_six() -> Vec<HomGroup> {
    enumerate_hom_groups(&SearchConfig::new(6).include_groups(true)).unwrap()
}

#[test]
fn coset_lemmas() {
    for g in small_structures() {
        let n = g.order();
        for h in enumerate_hom_subgroups(&g) {
            for side in [Side::Left, Side::Right] {
                for x in 0..n {
                    let c = coset(&g, &h, x, side).unwrap();
                    assert_eq!(c.members.len(), h.len());
                    // gH = H exactly when g lies in H.
                    assert_eq!(c.members == h, h.contains(x));
                    for y in 0..n {
                        let d = coset(&g, &h, y, side).unwrap();
                        assert!(c.members == d.members || c.members.is_disjoint(&d.members));
                    }
                }
            }
        }
        assert!(lagrange_check(&g).holds());
    }
}

#[test]
fn center_and_centralizers() {
    for g in small_structures().into_iter().chain(order_six()) {
        assert_eq!(closure_failure(&g, &center(&g)), None);
        for x in 0..g.order() {
            let c = centralizer(&g, x).unwrap();
            let image: Vec<usize> = c.iter().map(|y| g.alpha().apply(y)).collect();
            let target: Vec<usize> = centralizer(&g, g.alpha().apply(x))
                .unwrap()
                .iter()
                .collect();
            let mut image_sorted = image.clone();
            image_sorted.sort_unstable();
            assert_eq!(image_sorted, target, "α(C(x)) = C(α(x))");
            if g.alpha().apply(x) == x {
                assert_eq!(closure_failure(&g, &c), None);
            }
        }
    }
    // Centralizers are not Hom-subgroups in general.
    let d3a = homgroups::constructions::d3a();
    let rs = d3a.element("rs").unwrap();
    assert!(!is_hom_subgroup(&d3a, &centralizer(&d3a, rs).unwrap()).unwrap());
}

#[test]
fn completeness_against_latin_oracle() {
    for n in 1..=5 {
        for include_groups in [false, true] {
            let ours =
                enumerate_hom_groups(&SearchConfig::new(n).include_groups(include_groups)).unwrap();
            let oracle = latin_oracle(n, include_groups);
            let flat = |v: &[HomGroup]| {
                v.iter()
                    .map(|g| g.table().flat().to_vec())
                    .collect::<Vec<_>>()
            };
            assert_eq!(
                flat(&ours),
                flat(&oracle),
                "order {n}, groups {include_groups}"
            );

            let report = classify_order(n, include_groups, 6).unwrap();
            let classes = naive_classes(&oracle);
            assert_eq!(report.raw_count, oracle.len());
            assert_eq!(report.class_count(), classes.len(), "order {n}");
            let mut ours_sizes: Vec<usize> =
                report.classes.iter().map(|c| c.labeled_count).collect();
            let mut oracle_sizes: Vec<usize> = classes.values().copied().collect();
            ours_sizes.sort_unstable();
            oracle_sizes.sort_unstable();
            assert_eq!(ours_sizes, oracle_sizes);
        }
    }
}

#[test]
fn order_six_counts_match_twisted_groups() {
    // Every Hom-group of order 6 comes from Z6 or S3 twisted by an
    // automorphism; each group contributes (n-1)!/|Aut| labeled tables per
    // automorphism.
    let groups = enumerate_hom_groups(&SearchConfig::new(6).include_groups(true)).unwrap();
    assert_eq!(groups.len(), 120 / 2 * 2 + 120 / 6 * 6);
    let report = classify_order(6, false, 6).unwrap();
    // Z6: one non-identity automorphism; S3: transpositions and 3-cycles.
    assert_eq!(report.class_count(), 3);
    assert_eq!(report.raw_count, 160);
}

#[test]
fn twisting_by_any_automorphism_gives_a_hom_group() {
    let groups = [cyclic(4), cyclic(5), cyclic(6), dihedral(3), dihedral(4)];
    for group in groups.into_iter().map(Result::unwrap) {
        let base = group.as_hom_group();
        for f in automorphisms_of(&group) {
            let g = twist(&group, &f).unwrap();
            assert!(verify(g.table(), g.alpha(), g.unit()).is_valid());
            assert_eq!(g.inverses(), base.inverses());
            assert_eq!(g.is_group(), f.is_identity());
        }
    }
}

#[test]
fn products_of_fixtures_are_hom_groups() {
    let fx = fixtures();
    for (_, a) in &fx {
        for (_, b) in &fx {
            if a.order() * b.order() > 18 {
                continue;
            }
            let p = direct_product(a, b);
            assert!(verify(p.table(), p.alpha(), p.unit()).is_valid());
            assert!(lagrange_check(&p).holds());
            assert!(verify_hom_hopf(&build_group_hopf(&p)).is_valid());
        }
    }
}

#[test]
fn fixture_documents_are_golden() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for (name, g) in fixtures() {
        let text = std::fs::read_to_string(format!("{dir}/{name}.json")).unwrap();
        assert_eq!(text, save(&g), "{name}.json drifted");
        assert_eq!(load(&text).unwrap(), g);
    }
}

fn arb_fixture_and_relabeling() -> impl Strategy<Value = (HomGroup, Permutation)> {
    (0..fixtures().len())
        .prop_flat_map(|k| {
            let g = fixtures().swap_remove(k).1;
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(g, images)| (g, Permutation::new(images).unwrap()))
}

proptest! {
    #[test]
    fn relabeling_preserves_every_invariant((g, p) in arb_fixture_and_relabeling()) {
        let h = g.relabel(&p);
        prop_assert!(verify(h.table(), h.alpha(), h.unit()).is_valid());
        let (ch, cg) = (canonical_form(&h), canonical_form(&g));
        prop_assert_eq!(ch.table(), cg.table());
        prop_assert_eq!(enumerate_hom_subgroups(&h).len(), enumerate_hom_subgroups(&g).len());
        prop_assert_eq!(lagrange_check(&h).orders(), lagrange_check(&g).orders());
        prop_assert_eq!(h.alpha().cycle_type(), g.alpha().cycle_type());
        for a in 0..g.order() {
            prop_assert_eq!(h.inverse_of(p.apply(a)).unwrap(), p.apply(g.inverse_of(a).unwrap()));
        }
        prop_assert_eq!(load(&save(&h)).unwrap(), h);
    }

    #[test]
    fn random_subsets_are_classified_like_the_oracle(mask in 1u64..64) {
        let g = homgroups::constructions::z6a();
        let s = Subset::from_indices(6, (0..6).filter(|&i| mask >> i & 1 == 1)).unwrap();
        let expected = subsets_oracle(&g).contains(&s.iter().collect());
        prop_assert_eq!(is_hom_subgroup(&g, &s).unwrap(), expected);
    }
}
