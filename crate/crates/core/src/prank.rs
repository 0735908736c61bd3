//! p-rank values on strata and the slope-zero multiplicity of Frobenius
//! tuples.
//!
//! All four count formulas consume the stored pair `(w, λ)` of each
//! component directly; that reading is pinned by the rank-two symplectic
//! golden values.

use crate::alcove::{is_permissible, PermDatum};
use crate::error::{Error, Result};
use crate::weyl::{ExtAffineElement, FrobeniusTuple, Permutation};
use num_rational::Rational64;

/// Arithmetic data of a stratification, one variant per splitting behavior.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrataConfig {
    /// Totally real datum: `g = e·f`.
    Symplectic { e: u32, f: u32, n: usize },
    /// Ramified quadratic on top: `e = 2e_0`, `g = e·f`.
    UnitaryRamified { e0: u32, f: u32, n: usize },
    /// Inert quadratic on top: `g = 2·e·f_0`.
    UnitaryInert { e: u32, f0: u32, n: usize },
    /// Split quadratic on top: `g_0 = e·f_0`, signature parameter `r`.
    UnitarySplit { e: u32, f0: u32, n: usize, r: u32 },
}

impl StrataConfig {
    /// Tuple length expected over the Frobenius orbit.
    pub fn orbit_length(&self) -> usize {
        match *self {
            StrataConfig::Symplectic { f, .. } => f as usize,
            StrataConfig::UnitaryRamified { f, .. } => f as usize,
            StrataConfig::UnitaryInert { f0, .. } => f0 as usize,
            StrataConfig::UnitarySplit { f0, .. } => f0 as usize,
        }
    }

    /// Multiplier in front of the fixed-index count.
    pub fn multiplier(&self) -> u64 {
        match *self {
            StrataConfig::Symplectic { e, f, .. } => e as u64 * f as u64,
            StrataConfig::UnitaryRamified { e0, f, .. } => 2 * e0 as u64 * f as u64,
            StrataConfig::UnitaryInert { e, f0, .. } => 2 * e as u64 * f0 as u64,
            StrataConfig::UnitarySplit { e, f0, .. } => e as u64 * f0 as u64,
        }
    }
}

fn check_components(t: &FrobeniusTuple, d: &PermDatum, expected_len: usize) -> Result<()> {
    if t.len() != expected_len {
        return Err(Error::InvalidInput(format!(
            "tuple length {} does not match orbit length {expected_len}",
            t.len()
        )));
    }
    for (k, x) in t.components().iter().enumerate() {
        if !is_permissible(x, d)? {
            return Err(Error::NotPermissible { component: k });
        }
    }
    Ok(())
}

/// Indices `1..=m` fixed by every component with the stated λ-value.
fn common_fixed_indices(t: &FrobeniusTuple, value: i64) -> u64 {
    let m = t.rank();
    (1..=m)
        .filter(|&i| {
            t.components()
                .iter()
                .all(|x| x.w().apply(i) == i && x.lambda()[i - 1] == value)
        })
        .count() as u64
}

/// p-rank on a symplectic stratum: `g · #{i : ∀σ (w_σ(i)=i ∧ λ_σ(i)=0)}`.
pub fn prank_sym(t: &FrobeniusTuple, cfg: &StrataConfig) -> Result<u64> {
    let StrataConfig::Symplectic { e, f, n } = *cfg else {
        return Err(Error::InvalidInput(
            "symplectic configuration required".into(),
        ));
    };
    check_components(t, &PermDatum::symplectic(n, e), f as usize)?;
    Ok(cfg.multiplier() * common_fixed_indices(t, 0))
}

/// p-rank on a ramified unitary stratum; same count over `1..=n`.
pub fn prank_uni_ramified(t: &FrobeniusTuple, cfg: &StrataConfig) -> Result<u64> {
    let StrataConfig::UnitaryRamified { e0, f, n } = *cfg else {
        return Err(Error::InvalidInput(
            "ramified configuration required".into(),
        ));
    };
    check_components(t, &PermDatum::unitary_ramified(n, e0), f as usize)?;
    Ok(cfg.multiplier() * common_fixed_indices(t, 0))
}

/// The dual element `x' = u^e (x^τ)^{-1}`, computed coordinatewise:
/// `w'(i) = n+1-w(n+1-i)` and `λ'(i) = e - λ(n+1-i)`.
pub fn xprime(x: &ExtAffineElement, e: u32) -> ExtAffineElement {
    let n = x.rank();
    let images = (1..=n)
        .map(|i| n + 1 - x.w().apply(n + 1 - i))
        .collect::<Vec<_>>();
    let lambda = (1..=n)
        .map(|i| e as i64 - x.lambda()[n - i])
        .collect::<Vec<_>>();
    ExtAffineElement::new(Permutation::new(images).expect("bijection"), lambda)
        .expect("equal ranks")
}

/// Shared signature parameter of a tuple of `GL`-permissible components,
/// read off the row sums: `r = ne - Σλ`.
fn shared_r(t: &FrobeniusTuple, n: usize, e: u32) -> Result<u32> {
    let expect = n as i64 * e as i64;
    let mut r = None;
    for (k, x) in t.components().iter().enumerate() {
        let sum: i64 = x.lambda().iter().sum();
        let rc = expect - sum;
        if rc < 0 || rc > expect {
            return Err(Error::NotPermissible { component: k });
        }
        match r {
            None => r = Some(rc as u32),
            Some(prev) if prev != rc as u32 => {
                return Err(Error::InvalidInput(
                    "components do not share a signature parameter".into(),
                ))
            }
            _ => {}
        }
    }
    Ok(r.expect("non-empty tuple"))
}

/// p-rank on an inert unitary stratum:
/// `g · #{i : ∀σ (w_σ(i)=w'_σ(i)=i ∧ λ_σ(i)=λ'_σ(i)=0)}`.
pub fn prank_uni_inert(t: &FrobeniusTuple, cfg: &StrataConfig) -> Result<u64> {
    let StrataConfig::UnitaryInert { e, f0, n } = *cfg else {
        return Err(Error::InvalidInput("inert configuration required".into()));
    };
    let r = shared_r(t, n, e)?;
    check_components(t, &PermDatum::general_linear(n, e, r), f0 as usize)?;
    let primes = t.map(|x| xprime(x, e));
    let m = t.rank();
    let count = (1..=m)
        .filter(|&i| {
            t.components()
                .iter()
                .zip(primes.components())
                .all(|(x, xp)| {
                    x.w().apply(i) == i
                        && xp.w().apply(i) == i
                        && x.lambda()[i - 1] == 0
                        && xp.lambda()[i - 1] == 0
                })
        })
        .count() as u64;
    Ok(cfg.multiplier() * count)
}

/// p-rank on a split unitary stratum:
/// `g_0 · (#{i fixed with λ ≡ 0} + #{i fixed with λ ≡ e})`.
pub fn prank_uni_split(t: &FrobeniusTuple, cfg: &StrataConfig) -> Result<u64> {
    let StrataConfig::UnitarySplit { e, f0, n, r } = *cfg else {
        return Err(Error::InvalidInput("split configuration required".into()));
    };
    check_components(t, &PermDatum::general_linear(n, e, r), f0 as usize)?;
    Ok(cfg.multiplier() * (common_fixed_indices(t, 0) + common_fixed_indices(t, e as i64)))
}

/// Slope data of a Frobenius tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonVector {
    /// One rational vector per orbit component.
    pub nu: Vec<Vec<Rational64>>,
    /// Number of zero entries of any (equivalently every) component.
    pub zero_multiplicity: usize,
    /// The power used to reach a pure translation tuple.
    pub n_used: u64,
}

/// Averaged translation part of the twisted power of the tuple.
///
/// Requires `λ_ξ(i) ≥ 0` and `λ_ξ(i) = 0 ⇒ w_ξ(i) ≤ i` for every component
/// and index; violations are hard errors since the slope-zero count is
/// meaningless outside that region. `N` is the order of the permutation
/// part of the twisted product, not a searched quantity.
pub fn newton_vector(t: &FrobeniusTuple) -> Result<NewtonVector> {
    let m = t.rank();
    for (xi, x) in t.components().iter().enumerate() {
        for i in 1..=m {
            let l = x.lambda()[i - 1];
            if l < 0 || (l == 0 && x.w().apply(i) > i) {
                return Err(Error::HypothesisViolation {
                    component: xi,
                    index: i,
                });
            }
        }
    }
    let f = t.len();
    // twisted product starting at component j: x_j x_{j-1} … x_{j-f+1}
    let mut cycles = Vec::with_capacity(f);
    for j in 0..f {
        let mut acc = t.components()[j].clone();
        for step in 1..f {
            acc = acc.multiply(&t.components()[(j + f - step) % f])?;
        }
        cycles.push(acc);
    }
    let n_used = cycles[0].w().order();
    let denom = n_used as i64 * f as i64;
    let mut nu = Vec::with_capacity(f);
    for c in &cycles {
        let power = c.pow(n_used as i64);
        if !power.is_translation() {
            return Err(Error::Invariant(
                "twisted power is not a pure translation".into(),
            ));
        }
        nu.push(
            power
                .lambda()
                .iter()
                .map(|&a| Rational64::new(a, denom))
                .collect::<Vec<_>>(),
        );
    }
    let zero_multiplicity = nu[0].iter().filter(|v| **v == Rational64::from(0)).count();
    for comp in &nu[1..] {
        let z = comp.iter().filter(|v| **v == Rational64::from(0)).count();
        if z != zero_multiplicity {
            return Err(Error::Invariant(
                "zero multiplicity differs across orbit components".into(),
            ));
        }
    }
    Ok(NewtonVector {
        nu,
        zero_multiplicity,
        n_used,
    })
}
