//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the search, canonicalization or subgroup code of
//! the library; each oracle is the most direct brute force available.

#![allow(dead_code)]

use std::collections::BTreeMap;

use homgroups::constructions::Fixture;
use homgroups::group::verify;
use homgroups::{CayleyTable, HomGroup, Permutation};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixtures() -> Vec<(&'static str, HomGroup)> {
    Fixture::ALL.iter().map(|f| (f.name(), f.build())).collect()
}

/// Every Latin square on `{0..n-1}` whose first row and first column equal
/// some bijection fixing 0, kept when the axiom checker accepts it with
/// that bijection as the twist and 0 as the unit. Sorted by flat table.
pub fn latin_oracle(n: usize, include_groups: bool) -> Vec<HomGroup> {
    let mut out = Vec::new();
    for tail in (1..n).permutations(n - 1) {
        let alpha: Vec<usize> = std::iter::once(0).chain(tail).collect();
        if !include_groups && alpha.iter().enumerate().all(|(i, &a)| i == a) {
            continue;
        }
        let mut cells = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            cells[0][i] = alpha[i];
            cells[i][0] = alpha[i];
        }
        let mut squares = Vec::new();
        fill_latin(&mut cells, n, 0, &mut squares);
        let alpha = Permutation::new(alpha).unwrap();
        for rows in squares {
            let table = CayleyTable::new(rows).unwrap();
            if verify(&table, &alpha, 0).is_valid() {
                out.push(HomGroup::new(table, alpha.clone(), 0).unwrap());
            }
        }
    }
    out.sort_by(|a, b| a.table().flat().cmp(b.table().flat()));
    out
}

/// Plain Latin-square completion of the interior, no other constraints.
fn fill_latin(cells: &mut [Vec<usize>], n: usize, pos: usize, out: &mut Vec<Vec<Vec<usize>>>) {
    let interior = (n - 1) * (n - 1);
    if pos == interior {
        out.push(cells.to_vec());
        return;
    }
    let (i, j) = (1 + pos / (n - 1), 1 + pos % (n - 1));
    for v in 0..n {
        let clash = (0..n).any(|k| cells[i][k] == v || cells[k][j] == v);
        if clash {
            continue;
        }
        cells[i][j] = v;
        fill_latin(cells, n, pos + 1, out);
        cells[i][j] = usize::MAX;
    }
}

/// The relabeled table/twist pair as one comparable key.
fn key_under(g: &HomGroup, p: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[p[i] * n + p[j]] = p[g.product(i, j)];
        }
    }
    let mut alpha = vec![0; n];
    for i in 0..n {
        alpha[p[i]] = p[g.alpha().apply(i)];
    }
    table.extend(alpha);
    table
}

/// Lexicographically least key over all `n!` relabelings that send the
/// unit to 0.
pub fn naive_canonical_key(g: &HomGroup) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .permutations(n)
        .filter(|p| p[g.unit()] == 0)
        .map(|p| key_under(g, &p))
        .min()
        .expect("at least one relabeling")
}

/// Labeled count per isomorphism class, keyed by the naive canonical key.
pub fn naive_classes(groups: &[HomGroup]) -> BTreeMap<Vec<usize>, usize> {
    let mut classes = BTreeMap::new();
    for g in groups {
        *classes.entry(naive_canonical_key(g)).or_insert(0) += 1;
    }
    classes
}

/// All Hom-subgroups by testing every subset containing the unit.
pub fn subsets_oracle(g: &HomGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut found = Vec::new();
    for mask in 0u64..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !s.contains(&g.unit()) {
            continue;
        }
        let closed = s.iter().all(|&a| {
            s.iter().all(|&b| s.contains(&g.product(a, b)))
                && s.contains(&g.inverses()[a])
                && s.contains(&g.alpha().apply(a))
                && s.contains(&g.alpha_inverse().apply(a))
        });
        if closed {
            found.push(s);
        }
    }
    found.sort_by_key(|s| (s.len(), mask_of(s)));
    found
}

fn mask_of(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &i| m | 1 << i)
}

/// The `x` with `a·x = b`, found by scanning row `a`.
pub fn scan_left(g: &HomGroup, a: usize, b: usize) -> usize {
    let hits: Vec<usize> = (0..g.order()).filter(|&x| g.product(a, x) == b).collect();
    assert_eq!(hits.len(), 1, "row {a} is not a permutation");
    hits[0]
}

/// The `y` with `y·a = b`, found by scanning column `a`.
pub fn scan_right(g: &HomGroup, a: usize, b: usize) -> usize {
    let hits: Vec<usize> = (0..g.order()).filter(|&y| g.product(y, a) == b).collect();
    assert_eq!(hits.len(), 1, "column {a} is not a permutation");
    hits[0]
}

/// A uniformly random relabeling that keeps the unit at its index.
pub fn random_unit_fixing(n: usize, unit: usize, rng: &mut impl Rng) -> Permutation {
    let mut rest: Vec<usize> = (0..n).filter(|&i| i != unit).collect();
    rest.shuffle(rng);
    let mut images = vec![0; n];
    let mut it = rest.into_iter();
    for (i, slot) in images.iter_mut().enumerate() {
        *slot = if i == unit { unit } else { it.next().unwrap() };
    }
    Permutation::new(images).unwrap()
}
