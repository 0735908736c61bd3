//! Length functions, Bruhat order, admissible sets and closures for the
//! `GL` and `GSp` flavors.
//!
//! Lengths come in two independent routes. `length_im` is the closed
//! root-sum formula on the reading `u^λ w`:
//!
//! ```text
//! ℓ(u^λ w) = Σ_{β>0, w⁻¹β>0} |⟨β,λ⟩|  +  Σ_{β>0, w⁻¹β<0} |⟨β,λ⟩ + 1|
//! ```
//!
//! `length_word` walks the element down to the length-zero subgroup by
//! left-multiplying simple affine reflections; a generator is a descent
//! exactly when it carries the base alcove across its own wall, which is a
//! sign test on one affine root functional, not a length comparison.
//!
//! The `+1` terms place the base alcove on the side where every finite
//! positive root is negative, i.e. the wall data of the generators is
//! `(-β_simple, 0)` for the finite walls and `(θ, 1)` for the affine one.
//!
//! Positive roots are carried as linear-flavor representatives `e_p - e_q`
//! (`p < q`). For `GSp_{2n}` the type-C functionals restrict along the
//! identification `e_i - e_j ~ e_{2n+1-j} - e_{2n+1-i}`; both members of a
//! pair evaluate identically on the similitude lattice, so one
//! representative per functional suffices.

use crate::error::{Error, Result};
use crate::weyl::{ExtAffineElement, GroupFlavor, Permutation};
use std::collections::BTreeSet;

/// Linear functional `λ ↦ λ(p) - λ(q)` with `p < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub p: usize,
    pub q: usize,
}

impl Root {
    pub fn eval(&self, v: &[i64]) -> i64 {
        v[self.p - 1] - v[self.q - 1]
    }

    /// Sign of `w⁻¹·(e_p - e_q)` read off position comparison.
    fn positive_under(&self, w_inv: &Permutation) -> bool {
        w_inv.apply(self.p) < w_inv.apply(self.q)
    }
}

/// Positive roots of the flavor as linear representatives.
#[derive(Clone, Debug)]
pub struct PositiveRootSystem {
    pub flavor: GroupFlavor,
    pub roots: Vec<Root>,
}

impl PositiveRootSystem {
    pub fn new(flavor: GroupFlavor) -> Result<Self> {
        let roots = match flavor {
            GroupFlavor::GeneralLinear { n } => {
                let mut roots = Vec::new();
                for p in 1..=n {
                    for q in (p + 1)..=n {
                        roots.push(Root { p, q });
                    }
                }
                roots
            }
            GroupFlavor::SymplecticSimilitude { n } => {
                let m = 2 * n;
                let mut roots = Vec::new();
                for p in 1..=n {
                    for q in (p + 1)..=n {
                        roots.push(Root { p, q });
                        roots.push(Root { p, q: m + 1 - q });
                    }
                    roots.push(Root { p, q: m + 1 - p });
                }
                roots
            }
            GroupFlavor::UnitarySimilitudeRamified { .. } => {
                return Err(Error::Unsupported("GU root system"));
            }
        };
        Ok(PositiveRootSystem { flavor, roots })
    }
}

/// One simple affine reflection together with its wall functional
/// `sign·(e_p - e_q) + k`.
#[derive(Clone, Debug)]
struct Wall {
    root: Root,
    negated: bool,
    k: i64,
}

/// Simple reflections `s_0, …, s_k` and the length-zero generator `τ`.
#[derive(Clone, Debug)]
pub struct SimpleReflectionSet {
    pub flavor: GroupFlavor,
    pub generators: Vec<ExtAffineElement>,
    pub omega_generator: ExtAffineElement,
    walls: Vec<Wall>,
}

impl SimpleReflectionSet {
    pub fn new(flavor: GroupFlavor) -> Result<Self> {
        match flavor {
            GroupFlavor::GeneralLinear { n } => Ok(Self::general_linear(n)),
            GroupFlavor::SymplecticSimilitude { n } => Ok(Self::symplectic(n)),
            GroupFlavor::UnitarySimilitudeRamified { .. } => {
                Err(Error::Unsupported("GU simple reflections"))
            }
        }
    }

    fn general_linear(n: usize) -> Self {
        let mut generators = Vec::new();
        let mut walls = Vec::new();
        if n >= 2 {
            let mut s0_lambda = vec![0i64; n];
            s0_lambda[0] = 1;
            s0_lambda[n - 1] = -1;
            generators.push(
                ExtAffineElement::new(Permutation::transposition(n, 1, n), s0_lambda).unwrap(),
            );
            walls.push(Wall {
                root: Root { p: 1, q: n },
                negated: false,
                k: 1,
            });
            for i in 1..n {
                generators.push(
                    ExtAffineElement::new(Permutation::transposition(n, i, i + 1), vec![0; n])
                        .unwrap(),
                );
                walls.push(Wall {
                    root: Root { p: i, q: i + 1 },
                    negated: true,
                    k: 0,
                });
            }
        }
        // τ sends the standard chain lattice at index i to the one at i+1
        let mut images: Vec<usize> = (2..=n).collect();
        images.push(1);
        let mut tau_lambda = vec![0i64; n];
        tau_lambda[n - 1] = -1;
        let omega_generator =
            ExtAffineElement::new(Permutation::new(images).unwrap(), tau_lambda).unwrap();
        SimpleReflectionSet {
            flavor: GroupFlavor::GeneralLinear { n },
            generators,
            omega_generator,
            walls,
        }
    }

    fn symplectic(n: usize) -> Self {
        let m = 2 * n;
        let mut generators = Vec::new();
        let mut walls = Vec::new();
        let mut s0_lambda = vec![0i64; m];
        s0_lambda[0] = 1;
        s0_lambda[m - 1] = -1;
        generators
            .push(ExtAffineElement::new(Permutation::transposition(m, 1, m), s0_lambda).unwrap());
        walls.push(Wall {
            root: Root { p: 1, q: m },
            negated: false,
            k: 1,
        });
        for i in 1..n {
            let w = Permutation::transposition(m, i, i + 1).compose(&Permutation::transposition(
                m,
                m - i,
                m + 1 - i,
            ));
            generators.push(ExtAffineElement::new(w, vec![0; m]).unwrap());
            walls.push(Wall {
                root: Root { p: i, q: i + 1 },
                negated: true,
                k: 0,
            });
        }
        generators.push(
            ExtAffineElement::new(Permutation::transposition(m, n, n + 1), vec![0; m]).unwrap(),
        );
        walls.push(Wall {
            root: Root { p: n, q: n + 1 },
            negated: true,
            k: 0,
        });
        // τ shifts the standard chain by n; a shift by 1 would violate
        // self-duality of the chain, so n is the minimal positive step
        let images: Vec<usize> = (1..=m)
            .map(|j| if j <= n { j + n } else { j - n })
            .collect();
        let mut tau_lambda = vec![0i64; m];
        for entry in tau_lambda.iter_mut().skip(n) {
            *entry = -1;
        }
        let omega_generator =
            ExtAffineElement::new(Permutation::new(images).unwrap(), tau_lambda).unwrap();
        SimpleReflectionSet {
            flavor: GroupFlavor::SymplecticSimilitude { n },
            generators,
            omega_generator,
            walls,
        }
    }

    /// True when left-multiplying generator `idx` shortens `x`: the affine
    /// root of the wall pulls back under `x` to a negative affine root.
    pub fn is_left_descent(&self, idx: usize, x: &ExtAffineElement) -> bool {
        let (apartment_lambda, w) = x.to_left_translation();
        let wall = &self.walls[idx];
        let sign = if wall.negated { -1 } else { 1 };
        let k_pull = wall.k + sign * wall.root.eval(&apartment_lambda);
        let w_inv = w.inverse();
        let finite_positive = wall.root.positive_under(&w_inv) != wall.negated;
        if finite_positive {
            k_pull <= 0
        } else {
            k_pull <= -1
        }
    }

    fn first_descent(&self, x: &ExtAffineElement) -> Option<usize> {
        (0..self.generators.len()).find(|&i| self.is_left_descent(i, x))
    }
}

fn gate(x: &ExtAffineElement, flavor: GroupFlavor) -> Result<()> {
    if !x.in_flavor(flavor)? {
        return Err(Error::FlavorMismatch(flavor.name().to_string()));
    }
    Ok(())
}

/// Closed-form length on the reading `u^λ w`; stored elements `A_w u^μ`
/// are converted via `λ = w·μ`.
pub fn length_im(x: &ExtAffineElement, flavor: GroupFlavor) -> Result<u64> {
    gate(x, flavor)?;
    let system = PositiveRootSystem::new(flavor)?;
    let (lambda, w) = x.to_left_translation();
    let w_inv = w.inverse();
    let mut total = 0u64;
    for root in &system.roots {
        let v = root.eval(&lambda);
        total += if root.positive_under(&w_inv) {
            v.unsigned_abs()
        } else {
            (v + 1).unsigned_abs()
        };
    }
    Ok(total)
}

/// Word length by greedy descent. Must agree with [`length_im`]; a run that
/// exceeds `length_im(x) + 1` steps reports an inconsistent generator set.
pub fn length_word(x: &ExtAffineElement, flavor: GroupFlavor) -> Result<u64> {
    gate(x, flavor)?;
    let refl = SimpleReflectionSet::new(flavor)?;
    let bound = length_im(x, flavor)? + 1;
    let mut current = x.clone();
    let mut steps = 0u64;
    while let Some(idx) = refl.first_descent(&current) {
        current = refl.generators[idx].multiply(&current)?;
        steps += 1;
        if steps > bound {
            return Err(Error::Invariant(
                "descent walk exceeded the length bound".into(),
            ));
        }
    }
    if length_im(&current, flavor)? != 0 {
        return Err(Error::Invariant(
            "descent walk did not end in the length-zero subgroup".into(),
        ));
    }
    Ok(steps)
}

/// Decomposes `x = x_a · τ^j` with `x_a` in the affine Coxeter subgroup.
///
/// The degree homomorphism (`Σλ` for `GL`, the pair sum for `GSp`) kills
/// exactly the affine subgroup and sends `τ` to `-1`, so `j = -degree(x)`.
fn omega_decompose(
    x: &ExtAffineElement,
    refl: &SimpleReflectionSet,
) -> Result<(ExtAffineElement, i64)> {
    let j = -x.degree(refl.flavor)?;
    let affine_part = x.multiply(&refl.omega_generator.pow(-j))?;
    Ok((affine_part, j))
}

fn leq_affine(
    refl: &SimpleReflectionSet,
    x: &ExtAffineElement,
    y: &ExtAffineElement,
) -> Result<bool> {
    if y.is_identity() {
        return Ok(x.is_identity());
    }
    let idx = refl
        .first_descent(y)
        .ok_or_else(|| Error::Invariant("non-trivial affine element without descent".into()))?;
    let s = &refl.generators[idx];
    let sy = s.multiply(y)?;
    if refl.is_left_descent(idx, x) {
        leq_affine(refl, &s.multiply(x)?, &sy)
    } else {
        leq_affine(refl, x, &sy)
    }
}

/// Bruhat order on the extended group: `x ≤ y` iff the two elements share
/// the same `τ`-power and the affine parts compare in the Coxeter order.
pub fn bruhat_leq(x: &ExtAffineElement, y: &ExtAffineElement, flavor: GroupFlavor) -> Result<bool> {
    gate(x, flavor)?;
    gate(y, flavor)?;
    let refl = SimpleReflectionSet::new(flavor)?;
    let (xa, jx) = omega_decompose(x, &refl)?;
    let (ya, jy) = omega_decompose(y, &refl)?;
    if jx != jy {
        return Ok(false);
    }
    leq_affine(&refl, &xa, &ya)
}

/// Full lower interval `{y ∈ W̃ : y ≤ v}`, via the recursion
/// `D(v) = D(sv) ∪ s·D(sv)` for any descent `s` of `v`.
fn down_interval(
    refl: &SimpleReflectionSet,
    v: &ExtAffineElement,
    cap: u64,
) -> Result<BTreeSet<ExtAffineElement>> {
    let (va, j) = omega_decompose(v, refl)?;
    let mut set: BTreeSet<ExtAffineElement> = BTreeSet::new();
    set.insert(ExtAffineElement::identity(v.rank()));
    let mut stack = Vec::new();
    let mut cur = va;
    while let Some(idx) = refl.first_descent(&cur) {
        stack.push(idx);
        cur = refl.generators[idx].multiply(&cur)?;
    }
    if !cur.is_identity() {
        return Err(Error::Invariant("affine part did not reduce to 1".into()));
    }
    for idx in stack.into_iter().rev() {
        let s = &refl.generators[idx];
        let mut next = set.clone();
        for z in &set {
            next.insert(s.multiply(z)?);
        }
        if next.len() as u64 > cap {
            return Err(Error::WindowExceeded(format!(
                "lower interval grew past {cap} elements"
            )));
        }
        set = next;
    }
    let tau_j = refl.omega_generator.pow(j);
    set.into_iter().map(|z| z.multiply(&tau_j)).collect()
}

/// The set `{x : x ≤ u^{w(μ)} for some w ∈ W}`, computed as the downward
/// closure of the finite translation orbit; deterministic order.
pub fn admissible_set(
    mu: &[i64],
    flavor: GroupFlavor,
    window: &crate::alcove::Window,
) -> Result<Vec<ExtAffineElement>> {
    let m = flavor.ambient_rank();
    if m == 0 || m > window.max_rank {
        return Err(Error::WindowExceeded(format!(
            "ambient rank {m} outside 1..={}",
            window.max_rank
        )));
    }
    let mu_elt = ExtAffineElement::translation(mu.to_vec());
    gate(&mu_elt, flavor)?;
    let refl = SimpleReflectionSet::new(flavor)?;
    let mut orbit: BTreeSet<ExtAffineElement> = BTreeSet::new();
    for w in crate::alcove::flavor_weyl_elements(flavor) {
        orbit.insert(ExtAffineElement::translation(w.act(mu)));
    }
    let mut out: BTreeSet<ExtAffineElement> = BTreeSet::new();
    for v in &orbit {
        out.extend(down_interval(&refl, v, window.max_candidates)?);
    }
    Ok(out.into_iter().collect())
}

/// `{y ∈ index_set : y ≤ x}`; `x` itself must belong to the index set.
pub fn closure(
    x: &ExtAffineElement,
    index_set: &[ExtAffineElement],
    flavor: GroupFlavor,
) -> Result<Vec<ExtAffineElement>> {
    if !index_set.contains(x) {
        return Err(Error::NotInIndexSet);
    }
    let mut out = Vec::new();
    for y in index_set {
        if bruhat_leq(y, x, flavor)? {
            out.push(y.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// Elements of the index set with nothing strictly above them inside it.
pub fn maximal_elements(
    index_set: &[ExtAffineElement],
    flavor: GroupFlavor,
) -> Result<Vec<ExtAffineElement>> {
    let mut out = Vec::new();
    for x in index_set {
        let mut maximal = true;
        for y in index_set {
            if x != y && bruhat_leq(x, y, flavor)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(x.clone());
        }
    }
    out.sort();
    Ok(out)
}
