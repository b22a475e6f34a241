//! Exhaustive enumeration of small Hom-groups, isomorphism testing and
//! canonical forms.
//!
//! The search fixes the unit at `0`, picks the twist `α` as the first row
//! and column, and fills the remaining `(n-1)²` cells row by row. Each
//! assignment is checked against the Latin square constraint, the unit
//! symmetry rule `c[i][j] = 0 ⇔ c[j][i] = 0`, multiplicativity of `α`, and
//! every Hom-associativity triple whose four cells are all known. Complete
//! tables are run through [`verify`] before being emitted.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{verify, HomGroup};
use crate::morphism::{isomorphisms, Shape};
use crate::perm::Permutation;
use crate::table::CayleyTable;

pub const DEFAULT_ORDER_GUARD: usize = 6;

/// Largest order the guard may be raised to; higher guards are clamped.
pub const FORCED_ORDER_GUARD: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    /// Admit structures with `α = Id` (ordinary groups).
    pub include_groups: bool,
    /// Keep one canonical representative per isomorphism class.
    pub up_to_iso: bool,
    pub max_order_guard: usize,
}

impl SearchConfig {
    pub fn new(order: usize) -> Self {
        SearchConfig {
            order,
            include_groups: false,
            up_to_iso: false,
            max_order_guard: DEFAULT_ORDER_GUARD,
        }
    }

    pub fn include_groups(mut self, yes: bool) -> Self {
        self.include_groups = yes;
        self
    }

    pub fn up_to_iso(mut self, yes: bool) -> Self {
        self.up_to_iso = yes;
        self
    }

    pub fn guard(mut self, guard: usize) -> Self {
        self.max_order_guard = guard;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::EmptyCarrier);
        }
        let guard = self.max_order_guard.min(FORCED_ORDER_GUARD);
        if self.order > guard {
            return Err(Error::OrderGuard {
                order: self.order,
                guard,
            });
        }
        Ok(())
    }
}

const EMPTY: u8 = u8::MAX;

struct Filler {
    n: usize,
    alpha: Vec<u8>,
    alpha_inv: Vec<u8>,
    cells: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    /// Filled positions holding each value.
    positions: Vec<Vec<(u8, u8)>>,
    interior: Vec<(usize, usize)>,
    out: Vec<Vec<u8>>,
}

impl Filler {
    fn new(alpha: &[usize]) -> Self {
        let n = alpha.len();
        let mut alpha_inv = vec![0u8; n];
        for (i, &a) in alpha.iter().enumerate() {
            alpha_inv[a] = i as u8;
        }
        let mut f = Filler {
            n,
            alpha: alpha.iter().map(|&a| a as u8).collect(),
            alpha_inv,
            cells: vec![EMPTY; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            positions: vec![Vec::new(); n],
            interior: (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect(),
            out: Vec::new(),
        };
        for (j, &a) in alpha.iter().enumerate() {
            f.place(0, j, a as u8);
        }
        for (i, &a) in alpha.iter().enumerate().skip(1) {
            f.place(i, 0, a as u8);
        }
        f
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u8 {
        self.cells[i * self.n + j]
    }

    fn place(&mut self, i: usize, j: usize, v: u8) {
        self.cells[i * self.n + j] = v;
        self.row_used[i] |= 1 << v;
        self.col_used[j] |= 1 << v;
        self.positions[v as usize].push((i as u8, j as u8));
    }

    fn unplace(&mut self, i: usize, j: usize) {
        let v = self.cells[i * self.n + j];
        self.cells[i * self.n + j] = EMPTY;
        self.row_used[i] &= !(1 << v);
        self.col_used[j] &= !(1 << v);
        self.positions[v as usize].pop();
    }

    /// Checks every constraint in which the freshly placed cell `(i, j)`
    /// takes part and whose other cells are already filled.
    fn consistent(&self, i: usize, j: usize) -> bool {
        let v = self.at(i, j);
        let a = |x: u8| self.alpha[x as usize];
        let ai = |x: u8| self.alpha_inv[x as usize];
        let t = |x: u8, y: u8| {
            if x == EMPTY || y == EMPTY {
                EMPTY
            } else {
                self.at(x as usize, y as usize)
            }
        };
        let (iu, ju) = (i as u8, j as u8);

        if j < i && (self.at(j, i) == 0) != (v == 0) {
            return false;
        }

        // α(gk) = α(g)α(k), with (i, j) as (g, k) and as (α(g), α(k)).
        let image = t(a(iu), a(ju));
        if image != EMPTY && image != a(v) {
            return false;
        }
        let pre = t(ai(iu), ai(ju));
        if pre != EMPTY && a(pre) != v {
            return false;
        }

        // α(g)(hk) = (gh)α(k)
        let holds = |lhs: u8, rhs: u8| lhs == EMPTY || rhs == EMPTY || lhs == rhs;
        for x in 0..self.n as u8 {
            // (h, k) = (i, j), g = x
            if !holds(t(a(x), v), t(t(x, iu), a(ju))) {
                return false;
            }
            // (g, h) = (i, j), k = x
            if !holds(t(a(iu), t(ju, x)), t(v, a(x))) {
                return false;
            }
        }
        // (α(g), hk) = (i, j)
        let g = ai(iu);
        for &(h, k) in &self.positions[j] {
            if !holds(v, t(t(g, h), a(k))) {
                return false;
            }
        }
        // (gh, α(k)) = (i, j)
        let k = ai(ju);
        for &(g, h) in &self.positions[i] {
            if !holds(t(a(g), t(h, k)), v) {
                return false;
            }
        }
        true
    }

    fn fill(&mut self, idx: usize) {
        let Some(&(i, j)) = self.interior.get(idx) else {
            self.out.push(self.cells.clone());
            return;
        };
        let free = !(self.row_used[i] | self.col_used[j]) & ((1u64 << self.n) - 1);
        let mut candidates = free;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as u8;
            candidates &= candidates - 1;
            self.place(i, j, v);
            if self.consistent(i, j) {
                self.fill(idx + 1);
            }
            self.unplace(i, j);
        }
    }
}

fn complete_tables(alpha: &[usize]) -> Vec<HomGroup> {
    let n = alpha.len();
    let mut filler = Filler::new(alpha);
    filler.fill(0);
    let perm = Permutation::new(alpha.to_vec()).expect("alpha is a permutation");
    filler
        .out
        .into_iter()
        .filter_map(|cells| {
            let table =
                CayleyTable::from_flat_unchecked(n, cells.into_iter().map(usize::from).collect());
            verify(&table, &perm, 0)
                .is_valid()
                .then(|| HomGroup::from_verified(table, perm.clone(), 0))
        })
        .collect()
}

/// Every Hom-group on `{0..order-1}` with unit `0`, sorted by flattened
/// table. With `up_to_iso`, one canonical form per isomorphism class.
pub fn enumerate_hom_groups(cfg: &SearchConfig) -> Result<Vec<HomGroup>> {
    cfg.validate()?;
    let n = cfg.order;
    let twists: Vec<Vec<usize>> = (1..n)
        .permutations(n - 1)
        .map(|tail| std::iter::once(0).chain(tail).collect::<Vec<_>>())
        .filter(|alpha| cfg.include_groups || !alpha.iter().enumerate().all(|(i, &a)| i == a))
        .collect();
    let mut found: Vec<HomGroup> = twists
        .par_iter()
        .flat_map_iter(|alpha| complete_tables(alpha))
        .collect();
    if cfg.up_to_iso {
        found = found.iter().map(canonical_form).collect();
        found.sort_by(|a, b| a.table().flat().cmp(b.table().flat()));
        found.dedup_by(|a, b| a.table() == b.table());
    } else {
        found.sort_by(|a, b| a.table().flat().cmp(b.table().flat()));
    }
    Ok(found)
}

fn shape(g: &HomGroup) -> Shape<'_> {
    Shape {
        table: g.table(),
        alpha: g.alpha(),
        alpha_inv: g.alpha_inverse(),
        unit: g.unit(),
    }
}

/// A bijection `f` with `f(1) = 1'`, `f∘α = α'∘f` and `f(gk) = f(g)f(k)`,
/// if one exists.
pub fn are_isomorphic(g: &HomGroup, h: &HomGroup) -> Option<Permutation> {
    isomorphisms(shape(g), shape(h), true).into_iter().next()
}

/// All isomorphisms from `g` onto `h`, sorted by image sequence.
pub fn isomorphisms_between(g: &HomGroup, h: &HomGroup) -> Vec<Permutation> {
    isomorphisms(shape(g), shape(h), false)
}

/// The lexicographically smallest flattened table among all relabelings
/// that send the unit to `0`. Labels are dropped. Two Hom-groups are
/// isomorphic iff their canonical forms coincide.
///
/// Runs over all `(n-1)!` relabelings, pruning each as soon as its prefix
/// exceeds the best table found so far.
pub fn canonical_form(g: &HomGroup) -> HomGroup {
    let n = g.order();
    let unit = g.unit();
    let others: Vec<usize> = (0..n).filter(|&x| x != unit).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut candidate = vec![0usize; n * n];
    // `order[a]` is the old element receiving new label `a`.
    for tail in others.iter().copied().permutations(n - 1) {
        let order: Vec<usize> = std::iter::once(unit).chain(tail).collect();
        let mut new_label = vec![0usize; n];
        for (a, &old) in order.iter().enumerate() {
            new_label[old] = a;
        }
        let mut status = std::cmp::Ordering::Equal;
        'cells: for a in 0..n {
            for b in 0..n {
                let value = new_label[g.product(order[a], order[b])];
                candidate[a * n + b] = value;
                if status == std::cmp::Ordering::Equal {
                    if let Some(best) = &best {
                        status = value.cmp(&best[a * n + b]);
                        if status == std::cmp::Ordering::Greater {
                            break 'cells;
                        }
                    }
                }
            }
        }
        if best.is_none() || status == std::cmp::Ordering::Less {
            best = Some(candidate.clone());
        }
    }
    let flat = best.expect("at least one relabeling");
    let alpha = Permutation::new(flat[..n].to_vec()).expect("unit row is a permutation");
    HomGroup::from_verified(CayleyTable::from_flat_unchecked(n, flat), alpha, 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    /// Canonical form of the class.
    pub representative: HomGroup,
    /// Number of labeled structures (unit `0`) in the class.
    pub labeled_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub include_groups: bool,
    pub raw_count: usize,
    pub classes: Vec<IsoClass>,
}

impl ClassificationReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

pub fn classify_order(
    order: usize,
    include_groups: bool,
    guard: usize,
) -> Result<ClassificationReport> {
    let cfg = SearchConfig::new(order)
        .include_groups(include_groups)
        .guard(guard);
    let raw = enumerate_hom_groups(&cfg)?;
    let mut classes: BTreeMap<Vec<usize>, IsoClass> = BTreeMap::new();
    for g in &raw {
        let canon = canonical_form(g);
        classes
            .entry(canon.table().flat().to_vec())
            .or_insert_with(|| IsoClass {
                representative: canon,
                labeled_count: 0,
            })
            .labeled_count += 1;
    }
    Ok(ClassificationReport {
        order,
        include_groups,
        raw_count: raw.len(),
        classes: classes.into_values().collect(),
    })
}
