//! Exact arithmetic in extended affine Weyl groups `S_m ⋉ Z^m`.
//!
//! An element is stored as a pair `(w, λ)` and always means the monomial
//! matrix `A_w · u^λ`, where `A_w = (δ_{i,w(j)})_{ij}` and
//! `u^λ = diag(u^{λ(1)}, …, u^{λ(m)})`. Under this convention
//!
//! ```text
//! (A_w u^λ) · e_j = u^{λ(j)} e_{w(j)}
//! (A_w u^λ)(A_{w'} u^{λ'}) = A_{w w'} u^{(w'^{-1}·λ) + λ'}
//! ```
//!
//! with `(σ·v)(σ(j)) = v(j)`. Some formulas downstream consume the other
//! reading `u^λ w`; the converters [`ExtAffineElement::to_left_translation`]
//! and [`ExtAffineElement::from_left_translation`] move between the two via
//! `A_w u^μ = u^{w·μ} A_w`.

use crate::error::{Error, Result};
use std::fmt;

/// Element of `S_m` in one-line notation; `w(i) = images[i-1]`, indices 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation (1-based images).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::InvalidInput(format!(
                    "not a bijection of 1..={m}: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    /// The transposition `(a b)` inside `S_m`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`; matches `A_w A_{w'} = A_{w∘w'}`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let images = other.images.iter().map(|&v| self.images[v - 1]).collect();
        Permutation { images }
    }

    /// Natural action on vectors: `(w·v)(w(j)) = v(j)`.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (j, &img) in self.images.iter().enumerate() {
            out[img - 1] = v[j];
        }
        out
    }

    /// Inverse action: `(w^{-1}·v)(j) = v(w(j))`.
    pub fn inverse_act(&self, v: &[i64]) -> Vec<i64> {
        self.images.iter().map(|&img| v[img - 1]).collect()
    }

    /// Indices fixed by `w`, 1-based.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let m = self.rank();
        let mut seen = vec![false; m];
        let mut ord = 1u64;
        for start in 1..=m {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                cur = self.apply(cur);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// The order-reversing involution `i ↦ m+1-i` (anti-diagonal matrix `Ĩ_m`).
    pub fn reversal(m: usize) -> Self {
        Permutation {
            images: (1..=m).rev().collect(),
        }
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// Group flavor, fixing the ambient rank `m` and the subgroups `W ⊂ S_m`, `X ⊂ Z^m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupFlavor {
    /// `GL_n`: `W = S_n`, `X = Z^n`, ambient rank `n`.
    GeneralLinear { n: usize },
    /// `GSp_{2n}`: `w(i) + w(2n+1-i) = 2n+1` and all pair sums `a_i + a_{2n+1-i}` equal.
    SymplecticSimilitude { n: usize },
    /// Ramified `GU_n`: `w(i) + w(n+1-i) = n+1` and `x_i + x_{n+1-i} = 2r` for some `r`.
    UnitarySimilitudeRamified { n: usize },
}

impl GroupFlavor {
    pub fn ambient_rank(&self) -> usize {
        match *self {
            GroupFlavor::GeneralLinear { n } => n,
            GroupFlavor::SymplecticSimilitude { n } => 2 * n,
            GroupFlavor::UnitarySimilitudeRamified { n } => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupFlavor::GeneralLinear { .. } => "GL",
            GroupFlavor::SymplecticSimilitude { .. } => "GSp",
            GroupFlavor::UnitarySimilitudeRamified { .. } => "GU",
        }
    }
}

/// Pair `(w, λ)` representing the monomial matrix `A_w · u^λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    w: Permutation,
    lambda: Vec<i64>,
}

impl ExtAffineElement {
    pub fn new(w: Permutation, lambda: Vec<i64>) -> Result<Self> {
        if w.rank() != lambda.len() {
            return Err(Error::RankMismatch {
                expected: w.rank(),
                got: lambda.len(),
            });
        }
        Ok(ExtAffineElement { w, lambda })
    }

    pub fn identity(m: usize) -> Self {
        ExtAffineElement {
            w: Permutation::identity(m),
            lambda: vec![0; m],
        }
    }

    /// Pure translation `u^λ`.
    pub fn translation(lambda: Vec<i64>) -> Self {
        ExtAffineElement {
            w: Permutation::identity(lambda.len()),
            lambda,
        }
    }

    /// Central translation `u^{(c,…,c)}`.
    pub fn central(m: usize, c: i64) -> Self {
        Self::translation(vec![c; m])
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.lambda.iter().all(|&a| a == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.w.is_identity()
    }

    /// `A_w u^λ · A_{w'} u^{λ'} = A_{ww'} u^{(w'^{-1}·λ) + λ'}`.
    pub fn multiply(&self, other: &ExtAffineElement) -> Result<ExtAffineElement> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let w = self.w.compose(&other.w);
        let mut lambda = other.w.inverse_act(&self.lambda);
        for (a, b) in lambda.iter_mut().zip(&other.lambda) {
            *a += b;
        }
        Ok(ExtAffineElement { w, lambda })
    }

    /// `(w, λ)^{-1} = (w^{-1}, -(w·λ))`.
    pub fn inverse(&self) -> ExtAffineElement {
        let lambda = self.w.act(&self.lambda).iter().map(|a| -a).collect();
        ExtAffineElement {
            w: self.w.inverse(),
            lambda,
        }
    }

    /// Power by a (possibly negative) integer exponent.
    pub fn pow(&self, k: i64) -> ExtAffineElement {
        let mut acc = ExtAffineElement::identity(self.rank());
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        for _ in 0..k.unsigned_abs() {
            acc = acc.multiply(&base).expect("equal ranks");
        }
        acc
    }

    /// Rewrites `A_w u^μ` as `u^λ w` with `λ = w·μ`; returns `(λ, w)`.
    pub fn to_left_translation(&self) -> (Vec<i64>, Permutation) {
        (self.w.act(&self.lambda), self.w.clone())
    }

    /// Builds the element `u^λ A_w` from the left-translation reading.
    pub fn from_left_translation(lambda: &[i64], w: &Permutation) -> Result<ExtAffineElement> {
        ExtAffineElement::new(w.clone(), w.inverse_act(lambda))
    }

    /// Adjoint with respect to the anti-diagonal form: `x^τ = Ĩ_m x^t Ĩ_m`.
    ///
    /// On pairs this is `(w, λ) ↦ (w_0 w^{-1} w_0, (w_0 w)·λ)` with `w_0` the
    /// order reversal. It is an involution and an anti-automorphism.
    pub fn adjoint_tau(&self) -> ExtAffineElement {
        let m = self.rank();
        let w0 = Permutation::reversal(m);
        let w = w0.compose(&self.w.inverse()).compose(&w0);
        let lambda = w0.compose(&self.w).act(&self.lambda);
        ExtAffineElement { w, lambda }
    }

    /// Membership test for the flavor subgroup `W ⋉ X ⊂ S_m ⋉ Z^m`.
    pub fn in_flavor(&self, flavor: GroupFlavor) -> Result<bool> {
        let m = flavor.ambient_rank();
        if self.rank() != m {
            return Err(Error::RankMismatch {
                expected: m,
                got: self.rank(),
            });
        }
        match flavor {
            GroupFlavor::GeneralLinear { .. } => Ok(true),
            GroupFlavor::SymplecticSimilitude { .. } => {
                Ok(self.finite_part_paired(m) && self.pair_sums_constant(m).is_some())
            }
            GroupFlavor::UnitarySimilitudeRamified { .. } => Ok(self.finite_part_paired(m)
                && matches!(self.pair_sums_constant(m), Some(c) if c % 2 == 0)),
        }
    }

    fn finite_part_paired(&self, m: usize) -> bool {
        (1..=m).all(|i| self.w.apply(i) + self.w.apply(m + 1 - i) == m + 1)
    }

    fn pair_sums_constant(&self, m: usize) -> Option<i64> {
        let c = self.lambda[0] + self.lambda[m - 1];
        (1..=m)
            .all(|i| self.lambda[i - 1] + self.lambda[m - i] == c)
            .then_some(c)
    }

    /// The degree homomorphism cutting out the affine Coxeter subgroup:
    /// `Σλ` for `GL`, the common pair sum for `GSp`/`GU`.
    pub fn degree(&self, flavor: GroupFlavor) -> Result<i64> {
        if !self.in_flavor(flavor)? {
            return Err(Error::FlavorMismatch(flavor.name().to_string()));
        }
        Ok(match flavor {
            GroupFlavor::GeneralLinear { .. } => self.lambda.iter().sum(),
            _ => self.lambda[0] + self.lambda[self.rank() - 1],
        })
    }
}

impl fmt::Display for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.w.one_line().iter().map(|v| v.to_string()).collect();
        let ls: Vec<String> = self.lambda.iter().map(|v| v.to_string()).collect();
        write!(f, "w=[{}];l=[{}]", ws.join(","), ls.join(","))
    }
}

impl fmt::Debug for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Tuple of elements indexed by a cyclic Frobenius orbit of order `f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobeniusTuple {
    components: Vec<ExtAffineElement>,
}

impl FrobeniusTuple {
    pub fn new(components: Vec<ExtAffineElement>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("empty tuple".into()));
        }
        let m = components[0].rank();
        for c in &components[1..] {
            if c.rank() != m {
                return Err(Error::RankMismatch {
                    expected: m,
                    got: c.rank(),
                });
            }
        }
        Ok(FrobeniusTuple { components })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.components[0].rank()
    }

    pub fn components(&self) -> &[ExtAffineElement] {
        &self.components
    }

    /// Cyclic shift `(x_ξ)_ξ ↦ (x_{σ^{-1}ξ})_ξ`; component `ξ` receives `x_{ξ-1}`.
    pub fn shift(&self) -> FrobeniusTuple {
        let f = self.components.len();
        let components = (0..f)
            .map(|xi| self.components[(xi + f - 1) % f].clone())
            .collect();
        FrobeniusTuple { components }
    }

    /// Applies `op` to every component.
    pub fn map(&self, op: impl Fn(&ExtAffineElement) -> ExtAffineElement) -> FrobeniusTuple {
        FrobeniusTuple {
            components: self.components.iter().map(op).collect(),
        }
    }
}

impl fmt::Debug for FrobeniusTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" | "))
    }
}

impl fmt::Display for FrobeniusTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}
