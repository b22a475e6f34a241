//! Hom-groups, ordinary finite groups, and the full axiom checker.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::table::CayleyTable;

/// The individual axioms checked by [`verify`], in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Witness `(row, col1, col2)`: two equal entries in one row.
    LatinRow,
    /// Witness `(col, row1, row2)`: two equal entries in one column.
    LatinColumn,
    /// Witness `(unit, α(unit))`.
    UnitFixed,
    /// Witness `(g)` with `1·g != α(g)`.
    UnitRow,
    /// Witness `(g)` with `g·1 != α(g)`.
    UnitColumn,
    /// Witness `(g, k)` with `α(gk) != α(g)α(k)`.
    Multiplicative,
    /// Witness `(g, h, k)` with `α(g)(hk) != (gh)α(k)`.
    HomAssociative,
    /// Witness `(g)` with no `b` such that `g·b = 1`.
    InverseExists,
    /// Witness `(g, b)` with `g·b = 1` but `b·g != 1`.
    InverseSymmetric,
}

impl Axiom {
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::LatinRow => "latin-row",
            Axiom::LatinColumn => "latin-column",
            Axiom::UnitFixed => "unit-fixed",
            Axiom::UnitRow => "unit-row",
            Axiom::UnitColumn => "unit-column",
            Axiom::Multiplicative => "multiplicative",
            Axiom::HomAssociative => "hom-associative",
            Axiom::InverseExists => "inverse-exists",
            Axiom::InverseSymmetric => "inverse-symmetric",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One failed instance of an axiom together with the carrier indices that
/// exhibit it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation<A = Axiom> {
    pub axiom: A,
    pub witness: Vec<usize>,
}

impl<A: fmt::Display> fmt::Display for Violation<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of an axiom check. Valid iff no violations were recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport<A = Axiom> {
    violations: Vec<Violation<A>>,
}

impl<A: Copy + PartialEq> AxiomReport<A> {
    pub fn new(violations: Vec<Violation<A>>) -> Self {
        AxiomReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation<A>] {
        &self.violations
    }

    pub fn of(&self, axiom: A) -> impl Iterator<Item = &Violation<A>> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    pub fn has(&self, axiom: A) -> bool {
        self.of(axiom).next().is_some()
    }
}

/// Which side an element acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

fn first_duplicate(values: impl Iterator<Item = usize>, n: usize) -> Option<(usize, usize)> {
    let mut seen = vec![usize::MAX; n];
    for (pos, v) in values.enumerate() {
        if seen[v] != usize::MAX {
            return Some((seen[v], pos));
        }
        seen[v] = pos;
    }
    None
}

/// Checks every Hom-group axiom on `(table, alpha, unit)` and reports all
/// violations.
///
/// Checks run in this order: Latin square, `α(1) = 1`, unit row and column
/// equal to `α`, multiplicativity of `α`, Hom-associativity over all `n³`
/// triples, existence and two-sidedness of inverses.
///
/// # Panics
///
/// If `alpha` has the wrong degree or `unit` is out of range.
pub fn verify(table: &CayleyTable, alpha: &Permutation, unit: usize) -> AxiomReport {
    let n = table.order();
    assert_eq!(alpha.len(), n, "twist degree does not match the table");
    assert!(unit < n, "unit {unit} out of range");
    let mut violations = Vec::new();
    let mut push = |axiom, witness: Vec<usize>| violations.push(Violation { axiom, witness });

    for i in 0..n {
        if let Some((a, b)) = first_duplicate(table.row(i).iter().copied(), n) {
            push(Axiom::LatinRow, vec![i, a, b]);
        }
    }
    for j in 0..n {
        if let Some((a, b)) = first_duplicate(table.column(j), n) {
            push(Axiom::LatinColumn, vec![j, a, b]);
        }
    }

    let a = |x: usize| alpha.apply(x);
    let m = |x: usize, y: usize| table.get(x, y);

    if a(unit) != unit {
        push(Axiom::UnitFixed, vec![unit, a(unit)]);
    }
    for g in 0..n {
        if m(unit, g) != a(g) {
            push(Axiom::UnitRow, vec![g]);
        }
    }
    for g in 0..n {
        if m(g, unit) != a(g) {
            push(Axiom::UnitColumn, vec![g]);
        }
    }
    for g in 0..n {
        for k in 0..n {
            if a(m(g, k)) != m(a(g), a(k)) {
                push(Axiom::Multiplicative, vec![g, k]);
            }
        }
    }
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                if m(a(g), m(h, k)) != m(m(g, h), a(k)) {
                    push(Axiom::HomAssociative, vec![g, h, k]);
                }
            }
        }
    }
    for g in 0..n {
        match (0..n).find(|&b| m(g, b) == unit) {
            None => push(Axiom::InverseExists, vec![g]),
            Some(b) if m(b, g) != unit => push(Axiom::InverseSymmetric, vec![g, b]),
            Some(_) => {}
        }
    }
    AxiomReport::new(violations)
}

/// Two-sided inverses, assuming the table already passed [`verify`].
fn inverses_of(table: &CayleyTable, unit: usize) -> Vec<usize> {
    let n = table.order();
    (0..n)
        .map(|g| {
            (0..n)
                .find(|&b| table.get(g, b) == unit)
                .expect("verified table has inverses")
        })
        .collect()
}

/// The eventually periodic sequence of left or right powers of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerOrbit {
    /// Number of powers before the cycle is entered.
    pub preperiod: usize,
    pub period: usize,
    /// Distinct powers `x¹, x², ...` in order of first appearance.
    pub orbit: Vec<usize>,
}

/// A finite Hom-group on the carrier `{0..n-1}`.
///
/// Construction runs the full axiom check, so every value of this type
/// satisfies all Hom-group axioms and has its inverse map precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroup {
    table: CayleyTable,
    alpha: Permutation,
    alpha_inv: Permutation,
    unit: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl HomGroup {
    pub fn new(table: CayleyTable, alpha: Permutation, unit: usize) -> Result<Self> {
        let n = table.order();
        if alpha.len() != n {
            return Err(Error::Shape(format!(
                "twist has degree {}, table has order {n}",
                alpha.len()
            )));
        }
        if unit >= n {
            return Err(Error::IndexOutOfRange {
                index: unit,
                order: n,
            });
        }
        let report = verify(&table, &alpha, unit);
        if !report.is_valid() {
            return Err(Error::Rejected(report));
        }
        Ok(Self::from_verified(table, alpha, unit))
    }

    /// Reads the twist off the unit row. Fails if the unit row is not a
    /// permutation or the structure does not verify.
    pub fn from_table(table: CayleyTable, unit: usize) -> Result<Self> {
        if unit >= table.order() {
            return Err(Error::IndexOutOfRange {
                index: unit,
                order: table.order(),
            });
        }
        let alpha = Permutation::new(table.row(unit).to_vec())?;
        Self::new(table, alpha, unit)
    }

    pub(crate) fn from_verified(table: CayleyTable, alpha: Permutation, unit: usize) -> Self {
        let inverses = inverses_of(&table, unit);
        HomGroup {
            alpha_inv: alpha.inverse(),
            table,
            alpha,
            unit,
            inverses,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::Shape(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn alpha_inverse(&self) -> &Permutation {
        &self.alpha_inv
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `i`: its label, or the index itself.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => i.to_string(),
        }
    }

    /// Resolves a label (or, failing that, a decimal index) to an element.
    pub fn element(&self, name: &str) -> Result<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Ok(i);
            }
        }
        match name.trim().parse::<usize>() {
            Ok(i) if i < self.order() => Ok(i),
            _ => Err(Error::UnknownElement(name.to_string())),
        }
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                order: self.order(),
            })
        }
    }

    /// Product without range checks; panics on bad indices.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.table.get(a, b))
    }

    /// `α^k(a)`; negative `k` iterates `α⁻¹`.
    pub fn alpha_apply(&self, a: usize, k: i64) -> Result<usize> {
        self.check(a)?;
        Ok(self.alpha.apply_pow(a, k))
    }

    pub fn inverse_of(&self, a: usize) -> Result<usize> {
        self.check(a)?;
        Ok(self.inverses[a])
    }

    /// The unique `x` with `a·x = b`, from the closed form
    /// `x = α⁻¹(a⁻¹) · α⁻²(b)`.
    pub fn left_divide(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        let left = self.alpha_inv.apply(self.inverses[a]);
        let right = self.alpha.apply_pow(b, -2);
        Ok(self.product(left, right))
    }

    /// The unique `y` with `y·a = b`, from the closed form
    /// `y = α⁻²(b) · α⁻¹(a⁻¹)`.
    pub fn right_divide(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        let left = self.alpha.apply_pow(b, -2);
        let right = self.alpha_inv.apply(self.inverses[a]);
        Ok(self.product(left, right))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_symmetric()
    }

    /// True when the twist is the identity, i.e. the structure is a group.
    pub fn is_group(&self) -> bool {
        self.alpha.is_identity()
    }

    /// `x¹ = x`, `xᵐ = xᵐ⁻¹ · x`.
    pub fn right_power(&self, x: usize, m: u64) -> Result<usize> {
        self.power(x, m, Side::Right)
    }

    /// `x¹ = x`, `xᵐ = x · xᵐ⁻¹`.
    pub fn left_power(&self, x: usize, m: u64) -> Result<usize> {
        self.power(x, m, Side::Left)
    }

    fn power_step(&self, acc: usize, x: usize, side: Side) -> usize {
        match side {
            Side::Right => self.product(acc, x),
            Side::Left => self.product(x, acc),
        }
    }

    fn power(&self, x: usize, m: u64, side: Side) -> Result<usize> {
        self.check(x)?;
        if m == 0 {
            return Err(Error::ZeroPower);
        }
        let orbit = self.power_orbit(x, side)?;
        // Powers are eventually periodic, so large exponents reduce.
        let idx = (m - 1) as usize;
        if idx < orbit.orbit.len() {
            return Ok(orbit.orbit[idx]);
        }
        let offset = (idx - orbit.preperiod) % orbit.period;
        Ok(orbit.orbit[orbit.preperiod + offset])
    }

    pub fn power_orbit(&self, x: usize, side: Side) -> Result<PowerOrbit> {
        self.check(x)?;
        let mut first_seen = vec![usize::MAX; self.order()];
        let mut orbit = Vec::new();
        let mut current = x;
        while first_seen[current] == usize::MAX {
            first_seen[current] = orbit.len();
            orbit.push(current);
            current = self.power_step(current, x, side);
        }
        let preperiod = first_seen[current];
        Ok(PowerOrbit {
            preperiod,
            period: orbit.len() - preperiod,
            orbit,
        })
    }

    /// The isomorphic copy obtained by renaming every element `i` to `p(i)`.
    pub fn relabel(&self, p: &Permutation) -> HomGroup {
        let table = self.table.relabel(p);
        let alpha = p.compose(&self.alpha).compose(&p.inverse());
        let unit = p.apply(self.unit);
        let mut inverses = vec![0; self.order()];
        for (i, &inv) in self.inverses.iter().enumerate() {
            inverses[p.apply(i)] = p.apply(inv);
        }
        let labels = self.labels.as_ref().map(|old| {
            let mut labels = vec![String::new(); old.len()];
            for (i, l) in old.iter().enumerate() {
                labels[p.apply(i)] = l.clone();
            }
            labels
        });
        HomGroup {
            alpha_inv: alpha.inverse(),
            table,
            alpha,
            unit,
            inverses,
            labels,
        }
    }
}

/// An ordinary finite group given by its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: CayleyTable,
    unit: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn new(table: CayleyTable, unit: usize) -> Result<Self> {
        let n = table.order();
        if unit >= n {
            return Err(Error::IndexOutOfRange {
                index: unit,
                order: n,
            });
        }
        for g in 0..n {
            if table.get(unit, g) != g || table.get(g, unit) != g {
                return Err(Error::NotAGroup(format!(
                    "{unit} is not a unit: fails at {g}"
                )));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let gh = table.get(g, h);
                    let hk = table.get(h, k);
                    if table.get(gh, k) != table.get(g, hk) {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({g}, {h}, {k})"
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&b| table.get(g, b) == unit && table.get(b, g) == unit) {
                Some(b) => inverses.push(b),
                None => return Err(Error::NotAGroup(format!("{g} has no inverse"))),
            }
        }
        Ok(FiniteGroup {
            table,
            unit,
            inverses,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::Shape(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        if let Some(i) = self.labels.iter().flatten().position(|l| l == name) {
            return Ok(i);
        }
        match name.trim().parse::<usize>() {
            Ok(i) if i < self.order() => Ok(i),
            _ => Err(Error::UnknownElement(name.to_string())),
        }
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// The group viewed as a Hom-group with trivial twist.
    pub fn as_hom_group(&self) -> HomGroup {
        let hg = HomGroup::from_verified(
            self.table.clone(),
            Permutation::identity(self.order()),
            self.unit,
        );
        match &self.labels {
            Some(labels) => hg.with_labels(labels.clone()).expect("label count matches"),
            None => hg,
        }
    }
}
