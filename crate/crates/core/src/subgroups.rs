//! Hom-subgroups, cosets, the Lagrange check, centers and centralizers.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{HomGroup, Side};

/// A subset of the carrier `{0..n-1}` with bitmask semantics.
///
/// Subsets order by size first and then by bitmask value, which is the
/// order in which subgroup lists are reported.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for i in indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, order: n });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Parses a comma-separated index list such as `0,2,4`.
    pub fn parse_csv(n: usize, text: &str) -> Result<Self> {
        let mut indices = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let i = part
                .parse::<usize>()
                .map_err(|_| Error::UnknownElement(part.to_string()))?;
            indices.push(i);
        }
        Self::from_indices(n, indices)
    }

    /// Size of the ambient carrier.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true if `i` was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.n, "index {i} outside carrier of size {}", self.n);
        let fresh = !self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.contains(i))
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The first closure property a subset fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureFailure {
    MissingUnit,
    /// `(a, b, a·b)` with `a·b` outside the subset.
    Product(usize, usize, usize),
    /// `(a, a⁻¹)`.
    Inverse(usize, usize),
    /// `(a, α(a))`.
    Twist(usize, usize),
    /// `(a, α⁻¹(a))`.
    TwistInverse(usize, usize),
}

impl fmt::Display for ClosureFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureFailure::MissingUnit => write!(f, "does not contain the unit"),
            ClosureFailure::Product(a, b, c) => {
                write!(f, "not closed under the product: {a}·{b} = {c}")
            }
            ClosureFailure::Inverse(a, b) => write!(f, "not closed under inversion: {a}⁻¹ = {b}"),
            ClosureFailure::Twist(a, b) => write!(f, "not closed under the twist: α({a}) = {b}"),
            ClosureFailure::TwistInverse(a, b) => {
                write!(f, "not closed under the inverse twist: α⁻¹({a}) = {b}")
            }
        }
    }
}

fn check_universe(g: &HomGroup, s: &Subset) -> Result<()> {
    if s.universe() != g.order() {
        return Err(Error::Shape(format!(
            "subset over {} elements used with a Hom-group of order {}",
            s.universe(),
            g.order()
        )));
    }
    Ok(())
}

/// The first closure property that `s` violates, if any.
///
/// A Hom-subgroup must contain a Hom-unit `u` with `h·u = α(h)`; quasigroup
/// uniqueness forces `u = 1`, and since `α` is injective on a finite set,
/// `α(H) ⊆ H` is the same as `α(H) = H`.
pub fn closure_failure(g: &HomGroup, s: &Subset) -> Option<ClosureFailure> {
    if !s.contains(g.unit()) {
        return Some(ClosureFailure::MissingUnit);
    }
    for a in s.iter() {
        for b in s.iter() {
            let c = g.product(a, b);
            if !s.contains(c) {
                return Some(ClosureFailure::Product(a, b, c));
            }
        }
    }
    for a in s.iter() {
        let inv = g.inverses()[a];
        if !s.contains(inv) {
            return Some(ClosureFailure::Inverse(a, inv));
        }
        let image = g.alpha().apply(a);
        if !s.contains(image) {
            return Some(ClosureFailure::Twist(a, image));
        }
        let pre = g.alpha_inverse().apply(a);
        if !s.contains(pre) {
            return Some(ClosureFailure::TwistInverse(a, pre));
        }
    }
    None
}

pub fn is_hom_subgroup(g: &HomGroup, s: &Subset) -> Result<bool> {
    check_universe(g, s)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(closure_failure(g, s).is_none())
}

/// Like [`is_hom_subgroup`], but reports the failed closure as an error.
pub fn require_hom_subgroup(g: &HomGroup, s: &Subset) -> Result<()> {
    if is_hom_subgroup(g, s)? {
        Ok(())
    } else {
        Err(Error::NotHomSubgroup(
            closure_failure(g, s).expect("failure exists"),
        ))
    }
}

/// Smallest superset of `seed` containing the unit and closed under the
/// product, inversion, `α` and `α⁻¹`.
pub fn closure(g: &HomGroup, seed: &Subset) -> Subset {
    let mut s = seed.clone();
    s.insert(g.unit());
    let mut members: Vec<usize> = s.iter().collect();
    let mut frontier = members.clone();
    while let Some(x) = frontier.pop() {
        let mut found = vec![
            g.inverses()[x],
            g.alpha().apply(x),
            g.alpha_inverse().apply(x),
        ];
        for &y in &members {
            found.push(g.product(x, y));
            found.push(g.product(y, x));
        }
        for z in found {
            if s.insert(z) {
                members.push(z);
                frontier.push(z);
            }
        }
    }
    s
}

/// Every Hom-subgroup of `g`, sorted by size and then bitmask value.
///
/// Each Hom-subgroup `K` is reached from `{1}` by repeatedly adjoining an
/// element of `K` and closing, so exploring single-element extensions of
/// every subgroup found so far is exhaustive.
pub fn enumerate_hom_subgroups(g: &HomGroup) -> Vec<Subset> {
    let n = g.order();
    let bottom = closure(g, &Subset::empty(n));
    let mut found: BTreeSet<Subset> = BTreeSet::new();
    found.insert(bottom.clone());
    let mut queue = vec![bottom];
    while let Some(h) = queue.pop() {
        for x in 0..n {
            if h.contains(x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            let k = closure(g, &seed);
            if found.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    found.into_iter().collect()
}

/// A left coset `gH` or right coset `Hg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub subgroup: Subset,
    pub representative: usize,
    pub side: Side,
    pub members: Subset,
}

fn coset_members(g: &HomGroup, h: &Subset, x: usize, side: Side) -> Subset {
    let mut members = Subset::empty(g.order());
    for y in h.iter() {
        members.insert(match side {
            Side::Left => g.product(x, y),
            Side::Right => g.product(y, x),
        });
    }
    members
}

pub fn coset(g: &HomGroup, h: &Subset, x: usize, side: Side) -> Result<Coset> {
    require_hom_subgroup(g, h)?;
    if x >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: x,
            order: g.order(),
        });
    }
    let members = coset_members(g, h, x, side);
    assert_eq!(
        members.len(),
        h.len(),
        "coset of {h} at {x} has the wrong size"
    );
    Ok(Coset {
        subgroup: h.clone(),
        representative: x,
        side,
        members,
    })
}

/// The distinct cosets of `h`, each represented by the smallest element
/// that generates it.
///
/// Unlike in a group, `x` need not lie in `xH` (it holds `x·1 = α(x)`), so
/// representatives are not members in general.
pub fn coset_partition(g: &HomGroup, h: &Subset, side: Side) -> Result<Vec<Coset>> {
    require_hom_subgroup(g, h)?;
    let mut covered = Subset::empty(g.order());
    let mut cosets: Vec<Coset> = Vec::new();
    for x in 0..g.order() {
        let c = coset(g, h, x, side)?;
        if cosets.iter().any(|d| d.members == c.members) {
            continue;
        }
        assert!(
            c.members.is_disjoint(&covered),
            "cosets of {h} overlap at {x}"
        );
        covered.union_with(&c.members);
        cosets.push(c);
    }
    assert_eq!(
        covered.len(),
        g.order(),
        "cosets of {h} do not cover the carrier"
    );
    Ok(cosets)
}

/// Whether the family `{xH : x ∈ G}` (or `{Hx}`) is an exact partition into
/// blocks of size `|H|`: every coset has size `|H|`, two cosets are equal
/// or disjoint, and together they cover the carrier.
pub fn cosets_partition_exactly(g: &HomGroup, h: &Subset, side: Side) -> bool {
    let n = g.order();
    let all: Vec<Subset> = (0..n).map(|x| coset_members(g, h, x, side)).collect();
    let sizes_ok = all.iter().all(|c| c.len() == h.len());
    let equal_or_disjoint = all
        .iter()
        .enumerate()
        .all(|(i, a)| all[i + 1..].iter().all(|b| a == b || a.is_disjoint(b)));
    let mut union = Subset::empty(n);
    for c in &all {
        union.union_with(c);
    }
    let distinct: BTreeSet<&Subset> = all.iter().collect();
    sizes_ok && equal_or_disjoint && union.len() == n && distinct.len() * h.len() == n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeEntry {
    pub subgroup: Subset,
    pub order: usize,
    /// `|G| / |H|`, the number of cosets.
    pub index: usize,
    pub divides: bool,
    pub left_partition: bool,
    pub right_partition: bool,
}

impl LagrangeEntry {
    pub fn holds(&self) -> bool {
        self.divides && self.left_partition && self.right_partition
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeReport {
    pub group_order: usize,
    pub entries: Vec<LagrangeEntry>,
}

impl LagrangeReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(LagrangeEntry::holds)
    }

    /// Distinct subgroup orders, ascending.
    pub fn orders(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.entries.iter().map(|e| e.order).collect();
        set.into_iter().collect()
    }
}

/// Checks divisibility and both coset partitions for every Hom-subgroup.
pub fn lagrange_check(g: &HomGroup) -> LagrangeReport {
    let n = g.order();
    let entries = enumerate_hom_subgroups(g)
        .into_iter()
        .map(|h| {
            let order = h.len();
            LagrangeEntry {
                divides: n.is_multiple_of(order),
                index: n / order,
                left_partition: cosets_partition_exactly(g, &h, Side::Left),
                right_partition: cosets_partition_exactly(g, &h, Side::Right),
                order,
                subgroup: h,
            }
        })
        .collect();
    LagrangeReport {
        group_order: n,
        entries,
    }
}

/// `{x : xy = yx for all y}`.
pub fn center(g: &HomGroup) -> Subset {
    let n = g.order();
    let z = Subset::from_indices(
        n,
        (0..n).filter(|&x| (0..n).all(|y| g.product(x, y) == g.product(y, x))),
    )
    .expect("indices in range");
    assert!(
        closure_failure(g, &z).is_none(),
        "center is not a Hom-subgroup"
    );
    z
}

/// `{y : yx = xy}`.
///
/// This is a Hom-subgroup whenever `α` fixes `x`, but not in general: the
/// twist carries `C(x)` onto `C(α(x))`, so a centralizer can fail to be
/// α-stable. In D₃^α, `C(rs) = {1, rs}` while `α(rs) = sr`. Use
/// [`closure_failure`] to tell the cases apart.
pub fn centralizer(g: &HomGroup, x: usize) -> Result<Subset> {
    let n = g.order();
    if x >= n {
        return Err(Error::IndexOutOfRange { index: x, order: n });
    }
    let c = Subset::from_indices(n, (0..n).filter(|&y| g.product(y, x) == g.product(x, y)))
        .expect("indices in range");
    Ok(c)
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyEntry {
    pub prime: usize,
    /// Smallest Hom-subgroup of order exactly `prime`, if one exists.
    pub witness: Option<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyReport {
    pub group_order: usize,
    pub entries: Vec<CauchyEntry>,
}

impl CauchyReport {
    pub fn all_witnessed(&self) -> bool {
        self.entries.iter().all(|e| e.witness.is_some())
    }
}

/// For each prime `p` dividing `|G|`, searches for a Hom-subgroup of order
/// `p`. Makes no claim beyond the exhaustive answer.
pub fn cauchy_search(g: &HomGroup) -> CauchyReport {
    let subgroups = enumerate_hom_subgroups(g);
    let entries = prime_factors(g.order())
        .into_iter()
        .map(|prime| CauchyEntry {
            prime,
            witness: subgroups.iter().find(|h| h.len() == prime).cloned(),
        })
        .collect();
    CauchyReport {
        group_order: g.order(),
        entries,
    }
}
