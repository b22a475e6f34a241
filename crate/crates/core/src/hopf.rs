//! The Hom-group Hopf algebra `KG`.
//!
//! `KG` is the free vector space on a Hom-group `G` with product extended
//! bilinearly from the table, coproduct `Δ(g) = g⊗g`, counit `ε(g) = 1`,
//! antipode `S(g) = g⁻¹`, algebra twist `α` and coalgebra twist `β = Id`.
//!
//! Every structure map sends basis elements to basis elements (or basis
//! tensors), and every identity checked here is multilinear, so checking
//! it on basis elements checks it on all of `KG`. Coefficients are exact
//! integers; the ground field never needs to be made concrete.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{AxiomReport, HomGroup, Violation};
use crate::perm::Permutation;
use crate::subgroups::{center, enumerate_hom_subgroups, Subset};

/// A finite linear combination of basis elements with nonzero integer
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalElement {
    coefficients: BTreeMap<usize, i64>,
}

impl FormalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::zero().plus(i, 1)
    }

    pub fn scalar(c: i64, i: usize) -> Self {
        Self::zero().plus(i, c)
    }

    /// Adds `c·e_i`, dropping the entry if it cancels.
    pub fn plus(mut self, i: usize, c: i64) -> Self {
        add_term(&mut self.coefficients, i, c);
        self
    }

    pub fn coefficient(&self, i: usize) -> i64 {
        self.coefficients.get(&i).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coefficients.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, c: i64) {
    if c == 0 {
        return;
    }
    let entry = map.entry(key).or_insert(0);
    *entry += c;
    if *entry == 0 {
        map.retain(|_, v| *v != 0);
    }
}

/// An element of `KG ⊗ KG`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalTensor {
    coefficients: BTreeMap<(usize, usize), i64>,
}

impl FormalTensor {
    pub fn plus(mut self, i: usize, j: usize, c: i64) -> Self {
        add_term(&mut self.coefficients, (i, j), c);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.coefficients.iter().map(|(&k, &c)| (k, c))
    }
}

/// An element of `KG ⊗ KG ⊗ KG`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalTensor3 {
    coefficients: BTreeMap<(usize, usize, usize), i64>,
}

impl FormalTensor3 {
    pub fn plus(mut self, i: usize, j: usize, k: usize, c: i64) -> Self {
        add_term(&mut self.coefficients, (i, j, k), c);
        self
    }
}

/// Structure maps of `KG` given by their action on basis indices.
///
/// Fields are public so that a presentation can be altered and re-checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHopfAlgebra {
    pub dim: usize,
    pub unit: usize,
    /// `product[i * dim + j]` is the basis index of `e_i e_j`.
    pub product: Vec<usize>,
    /// `Δ(e_i) = e_a ⊗ e_b` with `(a, b) = coproduct[i]`.
    pub coproduct: Vec<(usize, usize)>,
    pub counit: Vec<i64>,
    pub antipode: Vec<usize>,
    pub alpha: Permutation,
    pub beta: Permutation,
}

pub fn build_group_hopf(g: &HomGroup) -> GroupHopfAlgebra {
    let n = g.order();
    GroupHopfAlgebra {
        dim: n,
        unit: g.unit(),
        product: g.table().flat().to_vec(),
        coproduct: (0..n).map(|i| (i, i)).collect(),
        counit: vec![1; n],
        antipode: g.inverses().to_vec(),
        alpha: g.alpha().clone(),
        beta: Permutation::identity(n),
    }
}

impl GroupHopfAlgebra {
    pub fn mul(&self, x: &FormalElement, y: &FormalElement) -> FormalElement {
        let mut out = FormalElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                out = out.plus(self.product[i * self.dim + j], a * b);
            }
        }
        out
    }

    /// Product in `KG ⊗ KG`, componentwise.
    pub fn mul_tensor(&self, x: &FormalTensor, y: &FormalTensor) -> FormalTensor {
        let mut out = FormalTensor::default();
        for ((i, j), a) in x.terms() {
            for ((k, l), b) in y.terms() {
                out = out.plus(
                    self.product[i * self.dim + k],
                    self.product[j * self.dim + l],
                    a * b,
                );
            }
        }
        out
    }

    pub fn twist_alpha(&self, x: &FormalElement) -> FormalElement {
        x.terms().fold(FormalElement::zero(), |acc, (i, c)| {
            acc.plus(self.alpha.apply(i), c)
        })
    }

    pub fn twist_beta(&self, x: &FormalElement) -> FormalElement {
        x.terms().fold(FormalElement::zero(), |acc, (i, c)| {
            acc.plus(self.beta.apply(i), c)
        })
    }

    pub fn delta(&self, x: &FormalElement) -> FormalTensor {
        x.terms().fold(FormalTensor::default(), |acc, (i, c)| {
            let (a, b) = self.coproduct[i];
            acc.plus(a, b, c)
        })
    }

    pub fn epsilon(&self, x: &FormalElement) -> i64 {
        x.terms().map(|(i, c)| c * self.counit[i]).sum()
    }

    pub fn antipode_of(&self, x: &FormalElement) -> FormalElement {
        x.terms().fold(FormalElement::zero(), |acc, (i, c)| {
            acc.plus(self.antipode[i], c)
        })
    }

    /// Whether the span of `basis` is closed under every structure map,
    /// i.e. is a Hom-sub-Hopf algebra.
    pub fn spans_sub_hopf(&self, basis: &Subset) -> bool {
        let has_unit = basis.contains(self.unit);
        let closed = basis.iter().all(|i| {
            let (a, b) = self.coproduct[i];
            basis.contains(self.alpha.apply(i))
                && basis.contains(self.beta.apply(i))
                && basis.contains(self.antipode[i])
                && basis.contains(a)
                && basis.contains(b)
                && basis
                    .iter()
                    .all(|j| basis.contains(self.product[i * self.dim + j]))
        });
        has_unit && closed
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| self.product[i * self.dim + j] == self.product[j * self.dim + i])
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coproduct.iter().all(|&(a, b)| a == b)
    }

    pub fn is_group_like(&self, i: usize) -> bool {
        self.coproduct[i] == (i, i) && self.counit[i] == 1
    }
}

/// The Hom-Hopf identities checked by [`verify_hom_hopf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HopfAxiom {
    /// `μ(α(a), μ(b, c)) = μ(μ(a, b), α(c))`, witness `(a, b, c)`.
    HomAssociative,
    /// `α(1) = 1` and `a1 = 1a = α(a)`, witness `(a)`.
    HomUnital,
    /// `β(c₁) ⊗ c₂₁ ⊗ c₂₂ = c₁₁ ⊗ c₁₂ ⊗ β(c₂)`, witness `(c)`.
    HomCoassociative,
    /// `c₁ε(c₂) = ε(c₁)c₂ = β(c)` and `ε(β(c)) = ε(c)`, witness `(c)`.
    Counit,
    /// `Δ(hk) = Δ(h)Δ(k)`, witness `(h, k)`.
    CoproductMultiplicative,
    /// `Δ(1) = 1 ⊗ 1`.
    CoproductUnit,
    /// `ε(xy) = ε(x)ε(y)`, witness `(x, y)`.
    CounitMultiplicative,
    /// `ε(1) = 1`.
    CounitUnit,
    /// `ε(α(x)) = ε(x)`, witness `(x)`.
    CounitTwist,
    /// `S(x₁)x₂ = x₁S(x₂) = ε(x)1`, witness `(x)`.
    Antipode,
    /// `S(1) = 1`.
    AntipodeUnit,
    /// `ε(S(x)) = ε(x)`, witness `(x)`.
    AntipodeCounit,
}

impl HopfAxiom {
    pub fn tag(self) -> &'static str {
        match self {
            HopfAxiom::HomAssociative => "hom-associative",
            HopfAxiom::HomUnital => "hom-unital",
            HopfAxiom::HomCoassociative => "hom-coassociative",
            HopfAxiom::Counit => "counit",
            HopfAxiom::CoproductMultiplicative => "coproduct-multiplicative",
            HopfAxiom::CoproductUnit => "coproduct-unit",
            HopfAxiom::CounitMultiplicative => "counit-multiplicative",
            HopfAxiom::CounitUnit => "counit-unit",
            HopfAxiom::CounitTwist => "counit-twist",
            HopfAxiom::Antipode => "antipode",
            HopfAxiom::AntipodeUnit => "antipode-unit",
            HopfAxiom::AntipodeCounit => "antipode-counit",
        }
    }

    pub const ALL: [HopfAxiom; 12] = [
        HopfAxiom::HomAssociative,
        HopfAxiom::HomUnital,
        HopfAxiom::HomCoassociative,
        HopfAxiom::Counit,
        HopfAxiom::CoproductMultiplicative,
        HopfAxiom::CoproductUnit,
        HopfAxiom::CounitMultiplicative,
        HopfAxiom::CounitUnit,
        HopfAxiom::CounitTwist,
        HopfAxiom::Antipode,
        HopfAxiom::AntipodeUnit,
        HopfAxiom::AntipodeCounit,
    ];
}

impl fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Checks the `(α, β)`-Hom-Hopf algebra axioms on basis elements.
pub fn verify_hom_hopf(a: &GroupHopfAlgebra) -> AxiomReport<HopfAxiom> {
    let n = a.dim;
    let e = FormalElement::basis;
    let one = e(a.unit);
    let mut violations = Vec::new();
    let mut push = |axiom, witness: Vec<usize>| violations.push(Violation { axiom, witness });

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = a.mul(&a.twist_alpha(&e(x)), &a.mul(&e(y), &e(z)));
                let rhs = a.mul(&a.mul(&e(x), &e(y)), &a.twist_alpha(&e(z)));
                if lhs != rhs {
                    push(HopfAxiom::HomAssociative, vec![x, y, z]);
                }
            }
        }
    }
    if a.twist_alpha(&one) != one {
        push(HopfAxiom::HomUnital, vec![a.unit]);
    }
    for x in 0..n {
        let twisted = a.twist_alpha(&e(x));
        if a.mul(&e(x), &one) != twisted || a.mul(&one, &e(x)) != twisted {
            push(HopfAxiom::HomUnital, vec![x]);
        }
    }

    for c in 0..n {
        let outer = a.delta(&e(c));
        let mut lhs = FormalTensor3::default();
        let mut rhs = FormalTensor3::default();
        for ((c1, c2), k) in outer.terms() {
            for ((c21, c22), m) in a.delta(&e(c2)).terms() {
                for (b, s) in a.twist_beta(&e(c1)).terms() {
                    lhs = lhs.plus(b, c21, c22, k * m * s);
                }
            }
            for ((c11, c12), m) in a.delta(&e(c1)).terms() {
                for (b, s) in a.twist_beta(&e(c2)).terms() {
                    rhs = rhs.plus(c11, c12, b, k * m * s);
                }
            }
        }
        if lhs != rhs {
            push(HopfAxiom::HomCoassociative, vec![c]);
        }

        let beta_c = a.twist_beta(&e(c));
        let mut right = FormalElement::zero();
        let mut left = FormalElement::zero();
        for ((c1, c2), k) in outer.terms() {
            right = right.plus(c1, k * a.epsilon(&e(c2)));
            left = left.plus(c2, k * a.epsilon(&e(c1)));
        }
        if right != beta_c || left != beta_c || a.epsilon(&beta_c) != a.epsilon(&e(c)) {
            push(HopfAxiom::Counit, vec![c]);
        }
    }

    for h in 0..n {
        for k in 0..n {
            let lhs = a.delta(&a.mul(&e(h), &e(k)));
            let rhs = a.mul_tensor(&a.delta(&e(h)), &a.delta(&e(k)));
            if lhs != rhs {
                push(HopfAxiom::CoproductMultiplicative, vec![h, k]);
            }
        }
    }
    if a.delta(&one) != FormalTensor::default().plus(a.unit, a.unit, 1) {
        push(HopfAxiom::CoproductUnit, vec![a.unit]);
    }
    for x in 0..n {
        for y in 0..n {
            if a.epsilon(&a.mul(&e(x), &e(y))) != a.epsilon(&e(x)) * a.epsilon(&e(y)) {
                push(HopfAxiom::CounitMultiplicative, vec![x, y]);
            }
        }
    }
    if a.epsilon(&one) != 1 {
        push(HopfAxiom::CounitUnit, vec![a.unit]);
    }
    for x in 0..n {
        if a.epsilon(&a.twist_alpha(&e(x))) != a.epsilon(&e(x)) {
            push(HopfAxiom::CounitTwist, vec![x]);
        }
    }

    for x in 0..n {
        let target = FormalElement::scalar(a.epsilon(&e(x)), a.unit);
        let mut left = FormalElement::zero();
        let mut right = FormalElement::zero();
        for ((x1, x2), k) in a.delta(&e(x)).terms() {
            for (i, c) in a.mul(&a.antipode_of(&e(x1)), &e(x2)).terms() {
                left = left.plus(i, k * c);
            }
            for (i, c) in a.mul(&e(x1), &a.antipode_of(&e(x2))).terms() {
                right = right.plus(i, k * c);
            }
        }
        if left != target || right != target {
            push(HopfAxiom::Antipode, vec![x]);
        }
    }
    if a.antipode_of(&one) != one {
        push(HopfAxiom::AntipodeUnit, vec![a.unit]);
    }
    for x in 0..n {
        if a.epsilon(&a.antipode_of(&e(x))) != a.epsilon(&e(x)) {
            push(HopfAxiom::AntipodeCounit, vec![x]);
        }
    }
    AxiomReport::new(violations)
}

/// Dimensions of the basis-aligned Hom-sub-Hopf algebras `KH`, one per
/// Hom-subgroup `H`, deduplicated and ascending.
///
/// # Panics
///
/// If some dimension does not divide `|G|`.
pub fn sub_hopf_dims(g: &HomGroup) -> Vec<usize> {
    let n = g.order();
    let mut dims: Vec<usize> = enumerate_hom_subgroups(g).iter().map(Subset::len).collect();
    dims.sort_unstable();
    dims.dedup();
    for &d in &dims {
        assert_eq!(n % d, 0, "sub-Hopf dimension {d} does not divide {n}");
    }
    dims
}

/// Dimension of `KZ(G)`, the span of the central group-like basis
/// elements.
///
/// # Panics
///
/// If it does not divide `|G|`.
pub fn center_hopf_dim(g: &HomGroup) -> usize {
    let d = center(g).len();
    assert_eq!(
        g.order() % d,
        0,
        "center dimension {d} does not divide {}",
        g.order()
    );
    d
}
