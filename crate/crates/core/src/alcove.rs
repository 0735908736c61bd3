//! Extended alcoves, permissibility and the monomial-lattice oracle.
//!
//! The standard chain lattice `Λ̃_i` is spanned by
//! `u^{-1}e_1, …, u^{-1}e_i, e_{i+1}, …, e_m`, so its exponent vector is
//! `ω_i = ((-1)^{(i)}, 0^{(m-i)})`. We identify group elements with extended
//! alcoves through the base point: the alcove of `x` is the chain of exponent
//! vectors of `x·Λ̃_0, …, x·Λ̃_{m-1}`, concretely `x_i(w(j)) = λ(j) + ω_i(j)`.
//!
//! With exponent vectors the periodic extension is `x_{m+i} = x_i - (1^{(m)})`
//! (one `u` factor shrinks a lattice, so exponents grow as indices drop);
//! this sign matters only for the `GU` duality constraint below.
//!
//! Permissibility checks only the base indices `i ∈ {0, …, m-1}`: the bound
//! and the row sum for index `m+i` are those for `i` shifted by the constant
//! vector, so periodicity makes every other index redundant.

use crate::error::{Error, Result};
use crate::weyl::{ExtAffineElement, GroupFlavor, Permutation};

/// Monomial lattice spanned by `u^{v(j)} e_j`.
///
/// Containment law: `L(v) ⊆ L(v')` iff `v(j) ≥ v'(j)` for all `j`
/// (larger exponent, smaller lattice).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialLattice {
    exponents: Vec<i64>,
}

impl MonomialLattice {
    pub fn new(exponents: Vec<i64>) -> Self {
        MonomialLattice { exponents }
    }

    /// The standard chain member `Λ̃_i`, `0 ≤ i < m`.
    pub fn standard(m: usize, i: usize) -> Self {
        let mut exponents = vec![0; m];
        for e in exponents.iter_mut().take(i) {
            *e = -1;
        }
        MonomialLattice { exponents }
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_subset_of(&self, other: &MonomialLattice) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a >= b)
    }

    /// `u^k · L(v) = L(v + k)`.
    pub fn scale(&self, k: i64) -> MonomialLattice {
        MonomialLattice {
            exponents: self.exponents.iter().map(|v| v + k).collect(),
        }
    }
}

/// `A_w u^λ · (u^{v(j)} e_j) = u^{λ(j)+v(j)} e_{w(j)}`.
pub fn lattice_image(x: &ExtAffineElement, lat: &MonomialLattice) -> Result<MonomialLattice> {
    if x.rank() != lat.rank() {
        return Err(Error::RankMismatch {
            expected: x.rank(),
            got: lat.rank(),
        });
    }
    let mut out = vec![0; lat.rank()];
    for j in 1..=lat.rank() {
        out[x.w().apply(j) - 1] = x.lambda()[j - 1] + lat.exponents()[j - 1];
    }
    Ok(MonomialLattice::new(out))
}

/// Tuple `(x_0, …, x_{m-1})` of integer vectors; an extended alcove.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlcoveChain {
    vectors: Vec<Vec<i64>>,
}

impl AlcoveChain {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    /// Base vector `x_i`, `0 ≤ i < m`.
    pub fn vector(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }
}

/// `ω_i = ((-1)^{(i)}, 0^{(m-i)})`, the alcove of the identity.
pub fn standard_alcove(m: usize) -> AlcoveChain {
    AlcoveChain {
        vectors: (0..m)
            .map(|i| MonomialLattice::standard(m, i).exponents().to_vec())
            .collect(),
    }
}

/// Alcove of `x`: the exponent vectors of `x·Λ̃_i`, via `x_i(w(j)) = λ(j) + ω_i(j)`.
pub fn alcove_of(x: &ExtAffineElement) -> AlcoveChain {
    let m = x.rank();
    let omega = standard_alcove(m);
    let mut vectors = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = vec![0; m];
        for j in 1..=m {
            v[x.w().apply(j) - 1] = x.lambda()[j - 1] + omega.vector(i)[j - 1];
        }
        vectors.push(v);
    }
    AlcoveChain { vectors }
}

/// Parameters of a permissibility test.
///
/// `e` is the ramification index: for `GU` it is `e_0` (the alcove bound then
/// uses `2e_0`). `r` is only meaningful for the `GL` flavor, where
/// `0 ≤ r ≤ ne` and the row-sum target is `s = ne - r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermDatum {
    pub flavor: GroupFlavor,
    pub e: u32,
    pub r: Option<u32>,
}

impl PermDatum {
    pub fn symplectic(n: usize, e: u32) -> Self {
        PermDatum {
            flavor: GroupFlavor::SymplecticSimilitude { n },
            e,
            r: None,
        }
    }

    pub fn unitary_ramified(n: usize, e0: u32) -> Self {
        PermDatum {
            flavor: GroupFlavor::UnitarySimilitudeRamified { n },
            e: e0,
            r: None,
        }
    }

    pub fn general_linear(n: usize, e: u32, r: u32) -> Self {
        PermDatum {
            flavor: GroupFlavor::GeneralLinear { n },
            e,
            r: Some(r),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.e < 1 {
            return Err(Error::InvalidInput("e must be at least 1".into()));
        }
        match self.flavor {
            GroupFlavor::GeneralLinear { n } => {
                let r = self
                    .r
                    .ok_or_else(|| Error::InvalidInput("GL datum needs r".into()))?;
                if r as usize > n * self.e as usize {
                    return Err(Error::InvalidInput(format!(
                        "r = {r} out of range 0..={}",
                        n * self.e as usize
                    )));
                }
            }
            _ => {
                if self.r.is_some() {
                    return Err(Error::InvalidInput(
                        "r applies only to the GL flavor".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Componentwise alcove bound: `ω_i ≤ x_i ≤ ω_i + bound_e`.
    pub fn bound_e(&self) -> i64 {
        match self.flavor {
            GroupFlavor::UnitarySimilitudeRamified { .. } => 2 * self.e as i64,
            _ => self.e as i64,
        }
    }

    /// Target for `Σ_j x_0(j)`, equivalently `Σλ`; row `i` must sum to `target - i`.
    pub fn row_sum_target(&self) -> i64 {
        match self.flavor {
            GroupFlavor::SymplecticSimilitude { n } => (n as i64) * self.e as i64,
            GroupFlavor::UnitarySimilitudeRamified { n } => (n as i64) * self.e as i64,
            GroupFlavor::GeneralLinear { n } => {
                (n as i64) * self.e as i64 - self.r.unwrap_or(0) as i64
            }
        }
    }
}

/// `GU` duality constraint on an alcove: there is an `r` with
/// `x_i(j) + x_{n-i}(n+1-j) = 2r - 1` for all `0 ≤ i ≤ n`, `1 ≤ j ≤ n`,
/// where `x_n := x_0 - (1^{(n)})` in the exponent-vector convention.
///
/// `r` is read off at `(i, j) = (0, 1)` and then verified globally.
pub fn gu_alcove_duality(chain: &AlcoveChain) -> bool {
    let n = chain.rank();
    let ext = |i: usize, j: usize| -> i64 {
        if i == n {
            chain.vector(0)[j - 1] - 1
        } else {
            chain.vector(i)[j - 1]
        }
    };
    let base = ext(0, 1) + ext(n, n);
    if base.rem_euclid(2) != 1 {
        return false;
    }
    for i in 0..=n {
        for j in 1..=n {
            if ext(i, j) + ext(n - i, n + 1 - j) != base {
                return false;
            }
        }
    }
    true
}

fn gate(x: &ExtAffineElement, d: &PermDatum) -> Result<()> {
    d.validate()?;
    if !x.in_flavor(d.flavor)? {
        return Err(Error::FlavorMismatch(d.flavor.name().to_string()));
    }
    Ok(())
}

/// Permissibility by the alcove-inequality definition:
/// `ω_i ≤ x_i ≤ ω_i + e` componentwise and `Σ_j x_i(j) = target - i` for all
/// base indices, plus the `GU` duality constraint.
pub fn is_permissible(x: &ExtAffineElement, d: &PermDatum) -> Result<bool> {
    gate(x, d)?;
    let m = x.rank();
    let chain = alcove_of(x);
    if matches!(d.flavor, GroupFlavor::UnitarySimilitudeRamified { .. })
        && !gu_alcove_duality(&chain)
    {
        return Ok(false);
    }
    let omega = standard_alcove(m);
    let e = d.bound_e();
    let target = d.row_sum_target();
    for i in 0..m {
        let xi = chain.vector(i);
        let oi = omega.vector(i);
        if xi.iter().sum::<i64>() != target - i as i64 {
            return Ok(false);
        }
        if xi.iter().zip(oi).any(|(a, o)| *a < *o || *a > *o + e) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permissibility by the lattice-chain oracle:
/// `u^e Λ̃_i ⊆ x·Λ̃_i ⊆ Λ̃_i` for every base index together with the rank
/// condition `Σλ = target`. Coincides with [`is_permissible`] on its whole
/// domain; this route goes through the group action on lattices.
pub fn is_permissible_oracle(x: &ExtAffineElement, d: &PermDatum) -> Result<bool> {
    gate(x, d)?;
    let m = x.rank();
    if matches!(d.flavor, GroupFlavor::UnitarySimilitudeRamified { .. })
        && !gu_alcove_duality(&alcove_of(x))
    {
        return Ok(false);
    }
    if x.lambda().iter().sum::<i64>() != d.row_sum_target() {
        return Ok(false);
    }
    let e = d.bound_e();
    for i in 0..m {
        let std_i = MonomialLattice::standard(m, i);
        let image = lattice_image(x, &std_i)?;
        if !image.is_subset_of(&std_i) || !std_i.scale(e).is_subset_of(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x ↦ u^{(e,…,e)} x^{-1}`, switching the two indexing normalizations
/// of the stratification. Applying it twice gives back `x`.
pub fn verschiebung_to_frobenius(x: &ExtAffineElement, e: u32) -> ExtAffineElement {
    ExtAffineElement::central(x.rank(), e as i64)
        .multiply(&x.inverse())
        .expect("equal ranks")
}

/// Enumeration limits. `max_rank` caps the ambient rank, `max_candidates`
/// caps `|W| · |Λ|` before filtering.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub max_rank: usize,
    pub max_candidates: u64,
}

impl Default for Window {
    fn default() -> Self {
        Window {
            max_rank: 12,
            max_candidates: 1 << 26,
        }
    }
}

impl Window {
    /// Reads `KRSTRATA_MAX_RANK` if set, keeping the defaults otherwise.
    pub fn from_env() -> Self {
        let mut w = Window::default();
        if let Ok(v) = std::env::var("KRSTRATA_MAX_RANK") {
            if let Ok(r) = v.trim().parse::<usize>() {
                w.max_rank = r;
            }
        }
        w
    }
}

/// Finite Weyl components of the flavor, in lexicographic one-line order.
pub fn flavor_weyl_elements(flavor: GroupFlavor) -> Vec<Permutation> {
    let m = flavor.ambient_rank();
    match flavor {
        GroupFlavor::GeneralLinear { .. } => {
            let mut out = Vec::new();
            let mut current = Vec::with_capacity(m);
            let mut used = vec![false; m];
            all_permutations(m, &mut current, &mut used, &mut out);
            out
        }
        _ => {
            let mut out = Vec::new();
            let mut images = vec![0usize; m];
            let mut used = vec![false; m];
            paired_permutations(m, 1, &mut images, &mut used, &mut out);
            out.sort_by(|a, b| a.one_line().cmp(b.one_line()));
            out
        }
    }
}

fn all_permutations(
    m: usize,
    current: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if current.len() == m {
        out.push(Permutation::new(current.clone()).unwrap());
        return;
    }
    for v in 1..=m {
        if !used[v - 1] {
            used[v - 1] = true;
            current.push(v);
            all_permutations(m, current, used, out);
            current.pop();
            used[v - 1] = false;
        }
    }
}

// Builds w with w(i) + w(m+1-i) = m+1 by choosing images of the first half.
fn paired_permutations(
    m: usize,
    i: usize,
    images: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if i > m / 2 {
        if m % 2 == 1 {
            images[m / 2] = m / 2 + 1;
        }
        out.push(Permutation::new(images.to_vec()).unwrap());
        return;
    }
    for v in 1..=m {
        let partner = m + 1 - v;
        // the self-paired middle value only belongs at the middle position
        if v == partner || used[v - 1] || used[partner - 1] {
            continue;
        }
        used[v - 1] = true;
        used[partner - 1] = true;
        images[i - 1] = v;
        images[m - i] = partner;
        paired_permutations(m, i + 1, images, used, out);
        used[v - 1] = false;
        used[partner - 1] = false;
    }
}

/// Translation parts compatible with the datum's box, lattice and row-sum
/// constraints, in lexicographic order.
fn candidate_lambdas(d: &PermDatum) -> Vec<Vec<i64>> {
    let m = d.flavor.ambient_rank();
    let target = d.row_sum_target();
    let mut out = Vec::new();
    match d.flavor {
        GroupFlavor::GeneralLinear { .. } => {
            // compositions of `target` into m parts within 0..=e
            let mut cur = vec![0i64; m];
            compositions(m, 0, target, d.bound_e(), &mut cur, &mut out);
        }
        _ => {
            // pair sums are forced to e (GSp) resp. 2e_0 (GU) by the row sum,
            // so the first half determines λ
            let e = d.bound_e();
            let half = m / 2;
            let mut cur = vec![0i64; m];
            if m % 2 == 1 {
                if e % 2 != 0 {
                    return out;
                }
                cur[half] = e / 2;
            }
            fill_pairs(m, half, 0, e, &mut cur, &mut out);
            debug_assert!(out.iter().all(|l| l.iter().sum::<i64>() == target));
        }
    }
    out
}

fn compositions(
    m: usize,
    idx: usize,
    remaining: i64,
    e: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if idx == m {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let slots_left = (m - idx - 1) as i64;
    for v in 0..=e {
        let rest = remaining - v;
        if rest < 0 || rest > slots_left * e {
            continue;
        }
        cur[idx] = v;
        compositions(m, idx + 1, rest, e, cur, out);
    }
    cur[idx] = 0;
}

fn fill_pairs(
    m: usize,
    half: usize,
    idx: usize,
    e: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if idx == half {
        out.push(cur.clone());
        return;
    }
    for v in 0..=e {
        cur[idx] = v;
        cur[m - 1 - idx] = e - v;
        fill_pairs(m, half, idx + 1, e, cur, out);
    }
}

/// Brute-force enumeration of the permissible set for the datum, sorted
/// lexicographically on `(w, λ)`.
pub fn enumerate_perm(d: &PermDatum, window: &Window) -> Result<Vec<ExtAffineElement>> {
    d.validate()?;
    let m = d.flavor.ambient_rank();
    if m == 0 || m > window.max_rank {
        return Err(Error::WindowExceeded(format!(
            "ambient rank {m} outside 1..={}",
            window.max_rank
        )));
    }
    let weyl = flavor_weyl_elements(d.flavor);
    let lambdas = candidate_lambdas(d);
    let candidates = (weyl.len() as u64).saturating_mul(lambdas.len() as u64);
    if candidates > window.max_candidates {
        return Err(Error::WindowExceeded(format!(
            "{candidates} candidates exceed cap {}",
            window.max_candidates
        )));
    }
    let mut out = Vec::new();
    for w in &weyl {
        for l in &lambdas {
            let x = ExtAffineElement::new(w.clone(), l.clone())?;
            if is_permissible(&x, d)? {
                out.push(x);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Every `(w, λ)` candidate the enumeration window would consider, whether
/// permissible or not. Used to cross-check the two permissibility routes.
pub fn enumeration_candidates(d: &PermDatum, window: &Window) -> Result<Vec<ExtAffineElement>> {
    d.validate()?;
    let m = d.flavor.ambient_rank();
    if m == 0 || m > window.max_rank {
        return Err(Error::WindowExceeded(format!(
            "ambient rank {m} outside 1..={}",
            window.max_rank
        )));
    }
    let mut out = Vec::new();
    for w in flavor_weyl_elements(d.flavor) {
        for l in candidate_lambdas(d) {
            out.push(ExtAffineElement::new(w.clone(), l)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eae(w: Vec<usize>, l: Vec<i64>) -> ExtAffineElement {
        ExtAffineElement::new(Permutation::new(w).unwrap(), l).unwrap()
    }

    #[test]
    fn standard_alcove_exponents() {
        let a = standard_alcove(2);
        assert_eq!(a.vector(0), &[0, 0]);
        assert_eq!(a.vector(1), &[-1, 0]);
        assert_eq!(standard_alcove(1).vector(0), &[0]);
        for m in 1..=6 {
            let a = standard_alcove(m);
            for i in 0..m {
                assert_eq!(a.vector(i).iter().sum::<i64>(), -(i as i64));
            }
        }
    }

    #[test]
    fn alcove_of_examples() {
        assert_eq!(
            alcove_of(&ExtAffineElement::identity(3)),
            standard_alcove(3)
        );
        let x = ExtAffineElement::translation(vec![1, 0]);
        let chain = alcove_of(&x);
        assert_eq!(chain.vector(0), &[1, 0]);
        assert_eq!(chain.vector(1), &[0, 0]);
        let y = eae(vec![2, 1], vec![1, 0]);
        assert_eq!(alcove_of(&y).vector(0), &[0, 1]);
    }

    #[test]
    fn lattice_image_examples() {
        let l = MonomialLattice::new(vec![0, 0]);
        let id = ExtAffineElement::identity(2);
        assert_eq!(lattice_image(&id, &l).unwrap(), l);
        let shift = ExtAffineElement::translation(vec![1, 1]);
        assert_eq!(lattice_image(&shift, &l).unwrap().exponents(), &[1, 1]);
        let x = eae(vec![2, 1], vec![1, 0]);
        let lm = MonomialLattice::new(vec![-1, 0]);
        assert_eq!(lattice_image(&x, &lm).unwrap().exponents(), &[0, 0]);
    }

    #[test]
    fn alcove_row_sums() {
        let x = eae(vec![3, 1, 2], vec![1, 0, 2]);
        let total: i64 = x.lambda().iter().sum();
        let chain = alcove_of(&x);
        for i in 0..3 {
            assert_eq!(chain.vector(i).iter().sum::<i64>(), total - i as i64);
        }
    }

    #[test]
    fn alcove_matches_lattice_action() {
        let x = eae(vec![3, 1, 2], vec![1, 0, 2]);
        let chain = alcove_of(&x);
        for i in 0..3 {
            let img = lattice_image(&x, &MonomialLattice::standard(3, i)).unwrap();
            assert_eq!(img.exponents(), chain.vector(i));
        }
    }

    #[test]
    fn hilbert_blumenthal_permissibles() {
        let d = PermDatum::symplectic(1, 1);
        assert!(is_permissible(&eae(vec![2, 1], vec![1, 0]), &d).unwrap());
        assert!(is_permissible(&ExtAffineElement::translation(vec![1, 0]), &d).unwrap());
        assert!(is_permissible(&ExtAffineElement::translation(vec![0, 1]), &d).unwrap());
        assert!(!is_permissible(&ExtAffineElement::translation(vec![1, 1]), &d).unwrap());
        assert!(!is_permissible(&ExtAffineElement::identity(2), &d).unwrap());
    }

    #[test]
    fn gl_rank_two_example() {
        let d = PermDatum::general_linear(2, 1, 1);
        assert!(is_permissible(&ExtAffineElement::translation(vec![1, 0]), &d).unwrap());
        assert!(is_permissible_oracle(&ExtAffineElement::translation(vec![1, 0]), &d).unwrap());
    }

    #[test]
    fn oracle_rejects_negative_lambda() {
        let d = PermDatum::general_linear(2, 1, 0);
        let x = ExtAffineElement::translation(vec![-1, 3]);
        assert!(!is_permissible_oracle(&x, &d).unwrap());
    }

    #[test]
    fn enumerate_hilbert_blumenthal() {
        let set = enumerate_perm(&PermDatum::symplectic(1, 1), &Window::default()).unwrap();
        let expected = vec![
            ExtAffineElement::translation(vec![0, 1]),
            ExtAffineElement::translation(vec![1, 0]),
            eae(vec![2, 1], vec![1, 0]),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(set, expected);
    }

    #[test]
    fn enumerate_ramified_unitary_goldens() {
        // bound 2e_0, row target n e_0, pair sums forced even
        let set2 = enumerate_perm(&PermDatum::unitary_ramified(2, 1), &Window::default()).unwrap();
        let mut expected2 = vec![
            ExtAffineElement::translation(vec![0, 2]),
            ExtAffineElement::translation(vec![1, 1]),
            ExtAffineElement::translation(vec![2, 0]),
            eae(vec![2, 1], vec![1, 1]),
            eae(vec![2, 1], vec![2, 0]),
        ];
        expected2.sort();
        assert_eq!(set2, expected2);

        let set3 = enumerate_perm(&PermDatum::unitary_ramified(3, 1), &Window::default()).unwrap();
        let mut expected3 = vec![
            ExtAffineElement::translation(vec![0, 1, 2]),
            ExtAffineElement::translation(vec![1, 1, 1]),
            ExtAffineElement::translation(vec![2, 1, 0]),
            eae(vec![3, 2, 1], vec![1, 1, 1]),
            eae(vec![3, 2, 1], vec![2, 1, 0]),
        ];
        expected3.sort();
        assert_eq!(set3, expected3);
    }

    #[test]
    fn enumerate_gl_rank_one() {
        let set = enumerate_perm(&PermDatum::general_linear(1, 1, 0), &Window::default()).unwrap();
        assert_eq!(set, vec![ExtAffineElement::translation(vec![1])]);
    }

    // Known orbit count for the rank-4 symplectic flavor at e = 1.
    #[test]
    fn enumerate_gsp4_has_thirteen_strata() {
        let set = enumerate_perm(&PermDatum::symplectic(2, 1), &Window::default()).unwrap();
        assert_eq!(set.len(), 13);
    }

    #[test]
    fn verschiebung_frobenius_switch() {
        let x = ExtAffineElement::translation(vec![1, 0]);
        assert_eq!(
            verschiebung_to_frobenius(&x, 1),
            ExtAffineElement::translation(vec![0, 1])
        );
        let y = eae(vec![2, 1], vec![1, -1]);
        assert_eq!(
            verschiebung_to_frobenius(&verschiebung_to_frobenius(&y, 2), 2),
            y
        );
        assert_eq!(verschiebung_to_frobenius(&y, 0), y.inverse());
    }

    #[test]
    fn perm_set_closed_under_normalization_switch() {
        for (n, e) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
            let d = PermDatum::symplectic(n as usize, e);
            let set = enumerate_perm(&d, &Window::default()).unwrap();
            for x in &set {
                let y = verschiebung_to_frobenius(x, e);
                assert!(set.binary_search(&y).is_ok(), "image of {x} left the set");
            }
        }
    }

    #[test]
    fn gu_duality_consistent_with_flavor_membership() {
        // over the candidate grid the alcove constraint is exactly membership
        let flavor = GroupFlavor::UnitarySimilitudeRamified { n: 3 };
        for w in flavor_weyl_elements(GroupFlavor::GeneralLinear { n: 3 }) {
            for a in -1..=2i64 {
                for b in -1..=2i64 {
                    for c in -1..=2i64 {
                        let x = ExtAffineElement::new(w.clone(), vec![a, b, c]).unwrap();
                        let member = x.in_flavor(flavor).unwrap();
                        assert_eq!(
                            gu_alcove_duality(&alcove_of(&x)),
                            member,
                            "duality vs membership disagree at {x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn window_rejects_oversized_rank() {
        let d = PermDatum::general_linear(13, 1, 1);
        assert!(matches!(
            enumerate_perm(&d, &Window::default()),
            Err(Error::WindowExceeded(_))
        ));
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(
            flavor_weyl_elements(GroupFlavor::GeneralLinear { n: 4 }).len(),
            24
        );
        assert_eq!(
            flavor_weyl_elements(GroupFlavor::SymplecticSimilitude { n: 2 }).len(),
            8
        );
        assert_eq!(
            flavor_weyl_elements(GroupFlavor::UnitarySimilitudeRamified { n: 3 }).len(),
            2
        );
    }
}
