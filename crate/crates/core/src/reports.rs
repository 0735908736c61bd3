//! High-level stratification reports: density of the ordinary locus, the
//! totally-real rank-two tower, and the dimension of the p-rank 0 locus
//! through the statistics `N_σ` on fixed-point-free permutations.
//!
//! Dimensions are reported as index combinatorics (maxima of total lengths);
//! non-emptiness of the strata behind them is taken as given.

use crate::alcove::{enumerate_perm, PermDatum, Window};
use crate::bruhat::{closure, length_im, maximal_elements};
use crate::error::{Error, Result};
use crate::prank::{prank_sym, prank_uni_split, StrataConfig};
use crate::weyl::{ExtAffineElement, FrobeniusTuple, GroupFlavor, Permutation};
use itertools::Itertools;
use serde::Serialize;

/// One stratum of a product index set.
#[derive(Clone, Debug, Serialize)]
pub struct StratumRecord {
    pub index: Vec<String>,
    pub prank: u64,
    pub length: Option<u64>,
    pub is_maximal: bool,
}

/// Cartesian power of an index set, lexicographic order.
pub fn tuple_power(set: &[ExtAffineElement], f: usize) -> Vec<FrobeniusTuple> {
    (0..f)
        .map(|_| set.iter().cloned())
        .multi_cartesian_product()
        .map(|components| FrobeniusTuple::new(components).expect("uniform rank"))
        .collect()
}

/// Density verdict for the ordinary locus.
#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub e: u32,
    pub f: u32,
    pub n: usize,
    pub dense: bool,
    /// Maximal elements of one permissible factor.
    pub maximal_count: usize,
    /// Orbit `{u^{w(μ)}}` of the dominant translation, `μ = (e^{(n)}, 0^{(n)})`.
    pub orbit_count: usize,
    pub maximal_equals_orbit: bool,
}

/// Whether the ordinary locus is dense: the maximal strata of the product
/// index set must all be diagonal translation tuples, which happens exactly
/// for `f = 1`.
pub fn ordinary_density(e: u32, f: u32, n: usize) -> Result<DensityReport> {
    if e < 1 || f < 1 || n < 1 {
        return Err(Error::InvalidInput("parameters must be at least 1".into()));
    }
    let window = Window::default();
    let flavor = GroupFlavor::SymplecticSimilitude { n };
    let perm = enumerate_perm(&PermDatum::symplectic(n, e), &window)?;
    let maxes = maximal_elements(&perm, flavor)?;
    let mut mu = vec![0i64; 2 * n];
    for entry in mu.iter_mut().take(n) {
        *entry = e as i64;
    }
    let orbit: std::collections::BTreeSet<_> = crate::alcove::flavor_weyl_elements(flavor)
        .iter()
        .map(|w| ExtAffineElement::translation(w.act(&mu)))
        .collect();
    let maximal_equals_orbit = maxes
        .iter()
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        == orbit;
    // maximal tuples are products of maximal factors, so they sit inside the
    // diagonal of the orbit iff there is no room to mix components
    let dense = maxes.iter().all(|x| orbit.contains(x)) && (f == 1 || maxes.len() <= 1);
    Ok(DensityReport {
        e,
        f,
        n,
        dense,
        maximal_count: maxes.len(),
        orbit_count: orbit.len(),
        maximal_equals_orbit,
    })
}

/// Structure report for the rank-two totally real tower (`e = 1`, `n = 1`,
/// inertia degree `g`).
#[derive(Clone, Debug, Serialize)]
pub struct HbReport {
    pub g: u32,
    pub stratum_count: usize,
    pub strata: Vec<StratumRecord>,
    /// p-ranks that actually occur.
    pub prank_values: Vec<u64>,
    pub ordinary: Vec<String>,
    pub ordinary_count: usize,
    pub prank0_count: usize,
    pub maximal_count: usize,
    pub maximal_lengths: Vec<u64>,
    /// Intersection of the closures of the two ordinary strata.
    pub closure_intersection: Vec<String>,
    pub intersection_inside_prank0: bool,
    /// Maximal non-ordinary tuples, whose closures cover the p-rank 0 set.
    pub prank0_cover_count: usize,
}

pub fn hb_report(g: u32) -> Result<HbReport> {
    if g < 2 {
        return Err(Error::InvalidInput("g must be at least 2".into()));
    }
    if g > 10 {
        return Err(Error::WindowExceeded(format!("g = {g} beyond window 10")));
    }
    let window = Window::default();
    let flavor = GroupFlavor::SymplecticSimilitude { n: 1 };
    let cfg = StrataConfig::Symplectic { e: 1, f: g, n: 1 };
    let perm = enumerate_perm(&PermDatum::symplectic(1, 1), &window)?;
    let maxes = maximal_elements(&perm, flavor)?;
    let f = g as usize;

    let tuples = tuple_power(&perm, f);
    let mut strata = Vec::with_capacity(tuples.len());
    let mut prank_values = std::collections::BTreeSet::new();
    let mut ordinary = Vec::new();
    let mut prank0_count = 0usize;
    for t in &tuples {
        let prank = prank_sym(t, &cfg)?;
        let mut length = 0u64;
        for x in t.components() {
            length += length_im(x, flavor)?;
        }
        let is_maximal = t.components().iter().all(|x| maxes.contains(x));
        prank_values.insert(prank);
        if prank == g as u64 {
            ordinary.push(t.clone());
        }
        if prank == 0 {
            prank0_count += 1;
        }
        let record = StratumRecord {
            index: t.components().iter().map(|x| x.to_string()).collect(),
            prank,
            length: Some(length),
            is_maximal,
        };
        strata.push(record);
    }

    // closures of the two ordinary strata intersect componentwise
    let ordinary_sorted = {
        let mut o = ordinary.clone();
        o.sort();
        o
    };
    let (closure_intersection, intersection_inside_prank0) = if ordinary_sorted.len() == 2 {
        let per_component: Vec<Vec<ExtAffineElement>> = (0..f)
            .map(|k| {
                let c1 = closure(&ordinary_sorted[0].components()[k], &perm, flavor)?;
                let c2 = closure(&ordinary_sorted[1].components()[k], &perm, flavor)?;
                Ok(c1.into_iter().filter(|x| c2.contains(x)).collect())
            })
            .collect::<Result<_>>()?;
        let members: Vec<FrobeniusTuple> = per_component
            .iter()
            .map(|s| s.iter().cloned())
            .multi_cartesian_product()
            .map(|c| FrobeniusTuple::new(c).expect("uniform rank"))
            .collect();
        let all_zero = members
            .iter()
            .map(|t| prank_sym(t, &cfg))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|&p| p == 0);
        (members.iter().map(|t| t.to_string()).collect(), all_zero)
    } else {
        (Vec::new(), false)
    };

    let maximal_lengths: Vec<u64> = strata
        .iter()
        .filter(|s| s.is_maximal)
        .map(|s| s.length.unwrap_or(0))
        .collect();
    let maximal_count = maximal_lengths.len();
    let prank0_cover_count = strata
        .iter()
        .filter(|s| s.is_maximal && s.prank == 0)
        .count();

    Ok(HbReport {
        g,
        stratum_count: strata.len(),
        prank_values: prank_values.into_iter().collect(),
        ordinary: ordinary_sorted.iter().map(|t| t.to_string()).collect(),
        ordinary_count: ordinary_sorted.len(),
        prank0_count,
        maximal_count,
        maximal_lengths,
        closure_intersection,
        intersection_inside_prank0,
        prank0_cover_count,
        strata,
    })
}

/// Fixed-point-free permutations with exactly `r` indices mapped down,
/// lexicographic order.
pub fn enumerate_wnr(n: usize, r: usize) -> Result<Vec<Permutation>> {
    if !(1..=9).contains(&n) {
        return Err(Error::WindowExceeded(format!("n = {n} outside 1..=9")));
    }
    let mut out = Vec::new();
    for perm in (1..=n).permutations(n) {
        let w = Permutation::new(perm)?;
        if w.fixed_points().is_empty() && descents_below(&w) == r {
            out.push(w);
        }
    }
    Ok(out)
}

fn descents_below(w: &Permutation) -> usize {
    (1..=w.rank()).filter(|&i| w.apply(i) < i).count()
}

/// The four chain statistics of a permutation and their sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationStats {
    pub sigma: Vec<usize>,
    pub a: usize,
    pub a_tilde: usize,
    pub b: usize,
    pub b_tilde: usize,
    pub n: usize,
}

/// Direct quadratic scan for the pattern counts
/// `a: i<j<σ(j)<σ(i)`, `ã: σ(j)<σ(i)<i<j`, `b: σ(i)<i<j<σ(j)`,
/// `b̃: i<σ(i)<σ(j)<j`.
pub fn n_sigma_stats(sigma: &Permutation) -> PermutationStats {
    let m = sigma.rank();
    let (mut a, mut a_tilde, mut b, mut b_tilde) = (0, 0, 0, 0);
    for i in 1..=m {
        for j in 1..=m {
            let (si, sj) = (sigma.apply(i), sigma.apply(j));
            if i < j && j < sj && sj < si {
                a += 1;
            }
            if sj < si && si < i && i < j {
                a_tilde += 1;
            }
            if si < i && i < j && j < sj {
                b += 1;
            }
            if i < si && si < sj && sj < j {
                b_tilde += 1;
            }
        }
    }
    PermutationStats {
        sigma: sigma.one_line().to_vec(),
        a,
        a_tilde,
        b,
        b_tilde,
        n: a + a_tilde + b + b_tilde,
    }
}

/// Dimension of the p-rank 0 locus for signature `(r, n-r)`.
#[derive(Clone, Debug, Serialize)]
pub struct Prank0Report {
    pub n: usize,
    pub r: usize,
    pub dimension: usize,
    pub witness: Vec<usize>,
    pub closed_form: usize,
    pub matches_closed_form: bool,
}

/// `max_{σ ∈ W_{n,r}} N_σ` with a lexicographically least attaining witness.
/// The value must agree with `min((r-1)(n-r), r(n-r-1))`.
pub fn prank0_dimension(n: usize, r: usize) -> Result<Prank0Report> {
    if n < 2 || r < 1 || r > n - 1 {
        return Err(Error::InvalidInput(format!(
            "need 2 ≤ n and 1 ≤ r ≤ n-1, got n = {n}, r = {r}"
        )));
    }
    let mut best: Option<(usize, Permutation)> = None;
    for w in enumerate_wnr(n, r)? {
        let stats = n_sigma_stats(&w);
        match &best {
            Some((value, _)) if *value >= stats.n => {}
            _ => best = Some((stats.n, w)),
        }
    }
    let (dimension, witness) =
        best.ok_or_else(|| Error::Invariant("empty permutation class".into()))?;
    let closed_form = ((r - 1) * (n - r)).min(r * (n - r - 1));
    Ok(Prank0Report {
        n,
        r,
        dimension,
        witness: witness.one_line().to_vec(),
        closed_form,
        matches_closed_form: dimension == closed_form,
    })
}

/// The explicit witness `(1,2)(3,4)…(2r-3,2r-2)(2r-1,2r,…,n)`, defined for
/// `1 ≤ r ≤ n/2`; it is fixed-point-free with exactly `r` descents below.
pub fn explicit_witness(n: usize, r: usize) -> Result<Permutation> {
    if r < 1 || 2 * r > n {
        return Err(Error::InvalidInput(format!(
            "witness needs 1 ≤ r ≤ n/2, got n = {n}, r = {r}"
        )));
    }
    let mut images: Vec<usize> = (1..=n).collect();
    for k in 1..r {
        images[2 * k - 2] = 2 * k;
        images[2 * k - 1] = 2 * k - 1;
    }
    for j in (2 * r - 1)..n {
        images[j - 1] = j + 1;
    }
    images[n - 1] = 2 * r - 1;
    Permutation::new(images)
}

/// Verification data for the projection of the p-rank 0 part of the
/// permissible set onto fixed-point-free permutations (`e = 1`, split
/// rational case).
#[derive(Clone, Debug, Serialize)]
pub struct Perm0Report {
    pub n: usize,
    pub r: usize,
    pub prank0_size: usize,
    pub class_size: usize,
    pub bijective: bool,
    pub inverse_formula_holds: bool,
    pub lengths_match_statistic: bool,
    pub max_length: u64,
    pub holds: bool,
}

/// Checks that `x ↦ w` is a bijection from the p-rank 0 permissible
/// elements onto `W_{n,r}`, that `w ↦ u^{λ(w)} w` with
/// `λ(w)(i) = [w^{-1}(i) < i]` inverts it, and that `ℓ(u^{λ(w)} w) = N_w`.
pub fn perm0_bijection_check(n: usize, r: usize) -> Result<Perm0Report> {
    let window = Window::default();
    let flavor = GroupFlavor::GeneralLinear { n };
    let datum = PermDatum::general_linear(n, 1, r as u32);
    let cfg = StrataConfig::UnitarySplit {
        e: 1,
        f0: 1,
        n,
        r: r as u32,
    };
    let perm = enumerate_perm(&datum, &window)?;
    let mut prank0 = Vec::new();
    for x in &perm {
        if prank_uni_split(&FrobeniusTuple::new(vec![x.clone()])?, &cfg)? == 0 {
            prank0.push(x.clone());
        }
    }
    let class = enumerate_wnr(n, r)?;

    let mut projected: Vec<Permutation> = prank0.iter().map(|x| x.w().clone()).collect();
    projected.sort_by(|a, b| a.one_line().cmp(b.one_line()));
    projected.dedup();
    let bijective = projected.len() == prank0.len() && projected == class;

    let mut inverse_formula_holds = true;
    let mut lengths_match_statistic = true;
    let mut max_length = 0u64;
    for w in &class {
        let w_inv = w.inverse();
        let lam: Vec<i64> = (1..=n).map(|i| i64::from(w_inv.apply(i) < i)).collect();
        let lifted = ExtAffineElement::from_left_translation(&lam, w)?;
        if !prank0.contains(&lifted) {
            inverse_formula_holds = false;
        }
        let len = length_im(&lifted, flavor)?;
        if len != n_sigma_stats(w).n as u64 {
            lengths_match_statistic = false;
        }
        max_length = max_length.max(len);
    }
    let holds = bijective && inverse_formula_holds && lengths_match_statistic;
    Ok(Perm0Report {
        n,
        r,
        prank0_size: prank0.len(),
        class_size: class.len(),
        bijective,
        inverse_formula_holds,
        lengths_match_statistic,
        max_length,
        holds,
    })
}
