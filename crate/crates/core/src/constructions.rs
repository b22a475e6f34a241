//! Ways to build Hom-groups: twisting a group by an automorphism, direct
//! products, and the worked examples kept as fixtures.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, HomGroup};
use crate::morphism::{isomorphisms, Shape};
use crate::perm::Permutation;
use crate::table::CayleyTable;

/// How to obtain an ordinary group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Z_n` under addition mod `n`.
    Cyclic(usize),
    /// The dihedral group of order `2n`.
    Dihedral(usize),
    Explicit(CayleyTable, usize),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Explicit(table, unit) => FiniteGroup::new(table.clone(), *unit),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `zn:K` and `dn:K` (also written `zn(K)`, `dn(K)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("group:").unwrap_or(s);
        let parse = |rest: &str| -> Option<usize> {
            let rest = rest
                .strip_prefix(':')
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))?;
            rest.parse().ok()
        };
        if let Some(k) = s.strip_prefix("zn").and_then(parse) {
            return Ok(GroupSpec::Cyclic(k));
        }
        if let Some(k) = s.strip_prefix("dn").and_then(parse) {
            return Ok(GroupSpec::Dihedral(k));
        }
        Err(Error::UnknownFixture(s.to_string()))
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    let table = CayleyTable::from_fn(n, |i, j| (i + j) % n)?;
    FiniteGroup::new(table, 0)?.with_labels((0..n).map(|i| i.to_string()).collect())
}

/// Dihedral group of order `2n` with elements ordered
/// `1, r, r², …, rⁿ⁻¹, s, rs, r²s, …, rⁿ⁻¹s` (index `k` is `rᵏ`, index
/// `n + k` is `rᵏs`). Since `rⁿ⁻¹s = sr`, that last element is labeled `sr`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    // rᵃsᵇ · rᶜsᵈ = r^(a + (-1)ᵇc) s^(b+d)
    let decode = |x: usize| (x % n, x / n);
    let table = CayleyTable::from_fn(2 * n, |x, y| {
        let (a, b) = decode(x);
        let (c, d) = decode(y);
        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
        rot + n * ((b + d) % 2)
    })?;
    let rotation = |k: usize| match k {
        0 => "1".to_string(),
        1 => "r".to_string(),
        k => format!("r^{k}"),
    };
    let mut labels: Vec<String> = (0..n).map(rotation).collect();
    for k in 0..n {
        labels.push(match k {
            0 => "s".to_string(),
            k if n >= 3 && k == n - 1 => "sr".to_string(),
            1 => "rs".to_string(),
            k => format!("r^{k}s"),
        });
    }
    FiniteGroup::new(table, 0)?.with_labels(labels)
}

/// Checks that `f` is an automorphism of `group`, returning the smallest
/// pair `(g, k)` with `f(gk) != f(g)f(k)` otherwise.
pub fn check_automorphism(group: &FiniteGroup, f: &Permutation) -> Result<()> {
    let n = group.order();
    if f.len() != n {
        return Err(Error::Shape(format!(
            "map has degree {}, group has order {n}",
            f.len()
        )));
    }
    if f.apply(group.unit()) != group.unit() {
        return Err(Error::UnitNotFixed);
    }
    for g in 0..n {
        for k in 0..n {
            if f.apply(group.product(g, k)) != group.product(f.apply(g), f.apply(k)) {
                return Err(Error::NotAnAutomorphism { g, k });
            }
        }
    }
    Ok(())
}

pub fn is_automorphism(group: &FiniteGroup, f: &Permutation) -> bool {
    check_automorphism(group, f).is_ok()
}

/// Every automorphism of `group`, sorted by image sequence.
pub fn automorphisms_of(group: &FiniteGroup) -> Vec<Permutation> {
    let id = Permutation::identity(group.order());
    let shape = Shape {
        table: group.table(),
        alpha: &id,
        alpha_inv: &id,
        unit: group.unit(),
    };
    isomorphisms(shape, shape, false)
}

/// Conjugation `x ↦ (s·x)·s⁻¹`.
pub fn inner_automorphism(group: &FiniteGroup, s: usize) -> Result<Permutation> {
    if s >= group.order() {
        return Err(Error::IndexOutOfRange {
            index: s,
            order: group.order(),
        });
    }
    let s_inv = group.inverse_of(s);
    Permutation::new(
        (0..group.order())
            .map(|x| group.product(group.product(s, x), s_inv))
            .collect(),
    )
}

/// `(G, α∘μ, α)` for an automorphism `α` of the group `G`.
pub fn twist(group: &FiniteGroup, alpha: &Permutation) -> Result<HomGroup> {
    check_automorphism(group, alpha)?;
    let table = CayleyTable::from_fn(group.order(), |i, j| alpha.apply(group.product(i, j)))?;
    let twisted = HomGroup::new(table, alpha.clone(), group.unit())?;
    match group.labels() {
        Some(labels) => twisted.with_labels(labels.to_vec()),
        None => Ok(twisted),
    }
}

/// `(G × H, α × α')` with the pair `(i, j)` encoded as `i·|H| + j`.
pub fn direct_product(g: &HomGroup, h: &HomGroup) -> HomGroup {
    let m = h.order();
    let n = g.order() * m;
    let split = |x: usize| (x / m, x % m);
    let table = CayleyTable::from_fn(n, |x, y| {
        let (a, b) = split(x);
        let (c, d) = split(y);
        g.product(a, c) * m + h.product(b, d)
    })
    .expect("product of nonempty carriers");
    let alpha = Permutation::new(
        (0..n)
            .map(|x| {
                let (a, b) = split(x);
                g.alpha().apply(a) * m + h.alpha().apply(b)
            })
            .collect(),
    )
    .expect("product of bijections");
    let unit = g.unit() * m + h.unit();
    let product = HomGroup::new(table, alpha, unit).expect("product of Hom-groups verifies");
    if g.labels().is_none() && h.labels().is_none() {
        return product;
    }
    let labels = (0..n)
        .map(|x| {
            let (a, b) = split(x);
            format!("({},{})", g.label(a), h.label(b))
        })
        .collect();
    product.with_labels(labels).expect("label count matches")
}

// Tables as printed, in the printed row/column order.
const Z3A_LABELS: [&str; 3] = ["1", "a", "b"];
const Z3A_ROWS: [[&str; 3]; 3] = [["1", "b", "a"], ["b", "a", "1"], ["a", "1", "b"]];

const D3A_LABELS: [&str; 6] = ["1", "r", "r^2", "s", "rs", "sr"];
const D3A_ROWS: [[&str; 6]; 6] = [
    ["1", "r^2", "r", "s", "sr", "rs"],
    ["r^2", "r", "1", "sr", "rs", "s"],
    ["r", "1", "r^2", "rs", "s", "sr"],
    ["s", "rs", "sr", "1", "r", "r^2"],
    ["sr", "s", "rs", "r^2", "1", "r"],
    ["rs", "sr", "s", "r", "r^2", "1"],
];

const Z6A_ROWS: [[usize; 6]; 6] = [
    [0, 5, 4, 3, 2, 1],
    [5, 4, 3, 2, 1, 0],
    [4, 3, 2, 1, 0, 5],
    [3, 2, 1, 0, 5, 4],
    [2, 1, 0, 5, 4, 3],
    [1, 0, 5, 4, 3, 2],
];

const Z5A_ROWS: [[usize; 5]; 5] = [
    [0, 2, 4, 1, 3],
    [2, 4, 1, 3, 0],
    [4, 1, 3, 0, 2],
    [1, 3, 0, 2, 4],
    [3, 0, 2, 4, 1],
];

fn from_labeled_rows<const N: usize>(labels: [&str; N], rows: [[&str; N]; N]) -> HomGroup {
    let index = |l: &str| labels.iter().position(|&x| x == l).expect("known label");
    let rows = rows
        .iter()
        .map(|row| row.iter().map(|&l| index(l)).collect())
        .collect();
    let table = CayleyTable::new(rows).expect("fixture table is well formed");
    HomGroup::from_table(table, 0)
        .expect("fixture verifies")
        .with_labels(labels.iter().map(|l| l.to_string()).collect())
        .expect("label count matches")
}

fn from_index_rows<const N: usize>(rows: [[usize; N]; N]) -> HomGroup {
    let table = CayleyTable::new(rows.iter().map(|r| r.to_vec()).collect())
        .expect("fixture table is well formed");
    HomGroup::from_table(table, 0)
        .expect("fixture verifies")
        .with_labels((0..N).map(|i| i.to_string()).collect())
        .expect("label count matches")
}

/// The unique non-group Hom-group of order 3, labeled `1, a, b`.
pub fn z3a() -> HomGroup {
    from_labeled_rows(Z3A_LABELS, Z3A_ROWS)
}

/// `D₃` twisted by conjugation with `s`, labeled `1, r, r², s, rs, sr`.
pub fn d3a() -> HomGroup {
    from_labeled_rows(D3A_LABELS, D3A_ROWS)
}

/// `Z₆` twisted by negation.
pub fn z6a() -> HomGroup {
    from_index_rows(Z6A_ROWS)
}

/// `Z₅` twisted by doubling.
pub fn z5a() -> HomGroup {
    from_index_rows(Z5A_ROWS)
}

pub fn trivial() -> HomGroup {
    from_index_rows([[0]])
}

/// A named structure: either a Hom-group or an ordinary group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Hom(HomGroup),
    Group(FiniteGroup),
}

impl Structure {
    /// The structure as a Hom-group (groups get the identity twist).
    pub fn into_hom_group(self) -> HomGroup {
        match self {
            Structure::Hom(g) => g,
            Structure::Group(g) => g.as_hom_group(),
        }
    }
}

/// Named fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    Z3a,
    Z6a,
    D3a,
    Z5a,
    Trivial,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Z3a,
        Fixture::Z6a,
        Fixture::D3a,
        Fixture::Z5a,
        Fixture::Trivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Z3a => "z3a",
            Fixture::Z6a => "z6a",
            Fixture::D3a => "d3a",
            Fixture::Z5a => "z5a",
            Fixture::Trivial => "trivial",
        }
    }

    pub fn build(self) -> HomGroup {
        match self {
            Fixture::Z3a => z3a(),
            Fixture::Z6a => z6a(),
            Fixture::D3a => d3a(),
            Fixture::Z5a => z5a(),
            Fixture::Trivial => trivial(),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

/// Looks up `z3a`, `z6a`, `d3a`, `z5a`, `trivial`, `group:zn(k)` or
/// `group:dn(k)` (the `zn:k` / `dn:k` spellings are also accepted).
pub fn fixture(name: &str) -> Result<Structure> {
    if let Ok(f) = name.parse::<Fixture>() {
        return Ok(Structure::Hom(f.build()));
    }
    let spec: GroupSpec = name.parse()?;
    Ok(Structure::Group(spec.build()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_tables_match_closed_forms() {
        let z3 = z3a();
        assert_eq!(
            z3.table().rows(),
            vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]
        );
        assert_eq!(z3.alpha().images(), &[0, 2, 1]);
        let z6 = z6a();
        let z5 = z5a();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(z6.product(i, j), (12 - i - j) % 6);
            }
        }
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(z5.product(i, j), 2 * (i + j) % 5);
            }
        }
        assert_eq!(z5.table().row(1), &[2, 4, 1, 3, 0]);
        let d3 = d3a();
        let first_row: Vec<String> = d3.table().row(0).iter().map(|&x| d3.label(x)).collect();
        assert_eq!(first_row, ["1", "r^2", "r", "s", "sr", "rs"]);
    }

    #[test]
    fn twists_reproduce_fixtures() {
        let z6 = cyclic(6).unwrap();
        let neg = Permutation::new(vec![0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(twist(&z6, &neg).unwrap(), z6a());

        let z5 = cyclic(5).unwrap();
        let double = Permutation::new((0..5).map(|k| 2 * k % 5).collect()).unwrap();
        let t = twist(&z5, &double).unwrap();
        assert_eq!(t.product(1, 1), 4);
        assert_eq!(t, z5a());

        let d3 = dihedral(3).unwrap();
        let s = d3.element("s").unwrap();
        let conj = inner_automorphism(&d3, s).unwrap();
        assert_eq!(conj.images(), &[0, 2, 1, 3, 5, 4]);
        assert_eq!(twist(&d3, &conj).unwrap(), d3a());

        let z3 = cyclic(3).unwrap();
        let neg3 = Permutation::new(vec![0, 2, 1]).unwrap();
        assert_eq!(twist(&z3, &neg3).unwrap().table(), z3a().table());
    }

    #[test]
    fn identity_twist_is_the_group() {
        let z6 = cyclic(6).unwrap();
        let t = twist(&z6, &Permutation::identity(6)).unwrap();
        assert_eq!(t, z6.as_hom_group());
    }

    #[test]
    fn automorphism_checks() {
        let z6 = cyclic(6).unwrap();
        assert!(is_automorphism(
            &z6,
            &Permutation::new(vec![0, 5, 4, 3, 2, 1]).unwrap()
        ));
        assert!(is_automorphism(&z6, &Permutation::identity(6)));
        let swap = Permutation::new(vec![0, 2, 1, 3, 4, 5]).unwrap();
        assert!(!is_automorphism(&z6, &swap));
        assert!(matches!(
            twist(&z6, &swap),
            Err(Error::NotAnAutomorphism { g: 1, k: 1 })
        ));
        let shift = Permutation::new(vec![1, 2, 3, 4, 5, 0]).unwrap();
        assert!(matches!(
            check_automorphism(&z6, &shift),
            Err(Error::UnitNotFixed)
        ));
    }

    #[test]
    fn automorphism_counts() {
        let z6 = automorphisms_of(&cyclic(6).unwrap());
        assert_eq!(
            z6,
            vec![
                Permutation::identity(6),
                Permutation::new(vec![0, 5, 4, 3, 2, 1]).unwrap()
            ]
        );
        assert_eq!(automorphisms_of(&cyclic(5).unwrap()).len(), 4);
        assert_eq!(automorphisms_of(&cyclic(1).unwrap()).len(), 1);
        // Aut(D3) ≅ S3; Aut(V4) = S3; Aut(Z8) has 4 elements.
        assert_eq!(automorphisms_of(&dihedral(3).unwrap()).len(), 6);
        assert_eq!(automorphisms_of(&dihedral(2).unwrap()).len(), 6);
        assert_eq!(automorphisms_of(&cyclic(8).unwrap()).len(), 4);
    }

    #[test]
    fn inner_automorphisms() {
        let d3 = dihedral(3).unwrap();
        assert!(inner_automorphism(&d3, 0).unwrap().is_identity());
        let r = inner_automorphism(&d3, 1).unwrap();
        assert!(is_automorphism(&d3, &r));
        assert!(!r.is_identity());
    }

    #[test]
    fn products() {
        let p = direct_product(&z3a(), &z3a());
        assert_eq!(p.order(), 9);
        assert!(p.is_abelian());
        let q = direct_product(&z3a(), &z6a());
        assert!(q.is_abelian());
        assert_eq!(q.order(), 18);
        let r = direct_product(&d3a(), &trivial());
        assert_eq!(r.table(), d3a().table());
        assert_eq!(r.label(4), "(rs,0)");
    }

    #[test]
    fn names() {
        assert!(matches!(fixture("z6a"), Ok(Structure::Hom(_))));
        assert!(matches!(fixture("group:zn(4)"), Ok(Structure::Group(_))));
        assert!(matches!(fixture("dn:3"), Ok(Structure::Group(_))));
        assert!(matches!(fixture("q8"), Err(Error::UnknownFixture(_))));
        assert_eq!(dihedral(4).unwrap().labels().unwrap()[6], "r^2s");
    }
}
