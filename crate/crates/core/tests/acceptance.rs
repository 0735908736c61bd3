//! Acceptance suite. Each test checks one shipped criterion exactly (no
//! tolerances; everything is integer or rational arithmetic) and prints one
//! pass line with its runtime, which must stay under the stated budget.

use krstrata::alcove::{
    enumerate_perm, enumeration_candidates, flavor_weyl_elements, is_permissible,
    is_permissible_oracle, verschiebung_to_frobenius, PermDatum, Window,
};
use krstrata::bruhat::{admissible_set, bruhat_leq, length_im, length_word};
use krstrata::prank::{
    newton_vector, prank_sym, prank_uni_inert, prank_uni_ramified, prank_uni_split, xprime,
    StrataConfig,
};
use krstrata::reports::{
    enumerate_wnr, explicit_witness, hb_report, n_sigma_stats, ordinary_density, prank0_dimension,
};
use krstrata::weyl::{ExtAffineElement, FrobeniusTuple, GroupFlavor, Permutation};
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::time::{Duration, Instant};

fn finish(criterion: u32, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "criterion {criterion:2} ({name}): PASS ({:.3} s)",
        elapsed.as_secs_f64()
    );
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn eae(w: Vec<usize>, l: Vec<i64>) -> ExtAffineElement {
    ExtAffineElement::new(Permutation::new(w).unwrap(), l).unwrap()
}

#[test]
fn criterion_01_rank_two_golden_set() {
    let start = Instant::now();
    let window = Window::default();
    let flavor = GroupFlavor::SymplecticSimilitude { n: 1 };
    let set = enumerate_perm(&PermDatum::symplectic(1, 1), &window).unwrap();

    let s1_tau = ExtAffineElement::translation(vec![1, 0]);
    let s0_tau = ExtAffineElement::translation(vec![0, 1]);
    let tau = eae(vec![2, 1], vec![1, 0]);
    let mut expected = vec![s1_tau.clone(), s0_tau.clone(), tau.clone()];
    expected.sort();
    assert_eq!(set, expected, "permissible set differs from the golden one");

    assert_eq!(length_im(&s1_tau, flavor).unwrap(), 1);
    assert_eq!(length_im(&s0_tau, flavor).unwrap(), 1);
    assert_eq!(length_im(&tau, flavor).unwrap(), 0);

    // exactly two non-trivial relations
    for (x, y, rel) in [
        (&tau, &s0_tau, true),
        (&tau, &s1_tau, true),
        (&s0_tau, &s1_tau, false),
        (&s1_tau, &s0_tau, false),
        (&s0_tau, &tau, false),
        (&s1_tau, &tau, false),
    ] {
        assert_eq!(bruhat_leq(x, y, flavor).unwrap(), rel, "{x} vs {y}");
    }
    for x in &set {
        assert!(bruhat_leq(x, x, flavor).unwrap());
    }
    finish(1, "rank-two golden set", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_prank_dichotomy() {
    let start = Instant::now();
    for g in [2u32, 3] {
        let rep = hb_report(g).unwrap();
        assert_eq!(rep.stratum_count, 3usize.pow(g));
        assert_eq!(rep.prank_values, vec![0, g as u64], "g = {g}");
        assert_eq!(rep.ordinary_count, 2, "g = {g}");
        assert!(rep.intersection_inside_prank0, "g = {g}");
        assert!(!rep.closure_intersection.is_empty(), "g = {g}");
        assert_eq!(rep.prank0_count, 3usize.pow(g) - 2, "g = {g}");
    }
    finish(2, "p-rank dichotomy", start, Duration::from_secs(5));
}

#[test]
fn criterion_03_permissible_equals_admissible() {
    let start = Instant::now();
    let window = Window::default();
    for n in 1..=2usize {
        for e in 1..=2u32 {
            let flavor = GroupFlavor::SymplecticSimilitude { n };
            let perm = enumerate_perm(&PermDatum::symplectic(n, e), &window).unwrap();
            let mut mu = vec![0i64; 2 * n];
            for entry in mu.iter_mut().take(n) {
                *entry = e as i64;
            }
            let adm = admissible_set(&mu, flavor, &window).unwrap();
            assert_eq!(perm, adm, "GSp n = {n}, e = {e}");
        }
    }
    for n in 1..=4usize {
        for r in 0..=n as u32 {
            let flavor = GroupFlavor::GeneralLinear { n };
            let perm = enumerate_perm(&PermDatum::general_linear(n, 1, r), &window).unwrap();
            let s = n - r as usize;
            let mut mu = vec![0i64; n];
            for entry in mu.iter_mut().take(s) {
                *entry = 1;
            }
            let adm = admissible_set(&mu, flavor, &window).unwrap();
            assert_eq!(perm, adm, "GL n = {n}, r = {r}");
        }
    }
    finish(
        3,
        "permissible = admissible",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_04_prank0_dimension() {
    let start = Instant::now();
    for n in 2..=8usize {
        for r in 1..=n - 1 {
            let rep = prank0_dimension(n, r).unwrap();
            let closed = ((r - 1) * (n - r)).min(r * (n - r - 1));
            assert_eq!(rep.dimension, closed, "n = {n}, r = {r}");
            assert!(rep.matches_closed_form);
            if 2 * r <= n {
                let w = explicit_witness(n, r).unwrap();
                assert!(w.fixed_points().is_empty());
                assert!(enumerate_wnr(n, r).unwrap().contains(&w));
                assert_eq!(
                    n_sigma_stats(&w).n,
                    (r - 1) * (n - r),
                    "witness misses the bound at n = {n}, r = {r}"
                );
            }
        }
    }
    finish(4, "p-rank 0 dimension", start, Duration::from_secs(30));
}

#[test]
fn criterion_05_length_consistency() {
    let start = Instant::now();
    let window = Window::default();
    for e in 1..=2u32 {
        for n in 1..=3usize {
            let flavor = GroupFlavor::SymplecticSimilitude { n };
            for x in enumerate_perm(&PermDatum::symplectic(n, e), &window).unwrap() {
                assert_eq!(
                    length_im(&x, flavor).unwrap(),
                    length_word(&x, flavor).unwrap(),
                    "GSp n = {n}, e = {e}, x = {x}"
                );
            }
        }
        for n in 1..=4usize {
            let flavor = GroupFlavor::GeneralLinear { n };
            for r in 0..=(n as u32 * e) {
                for x in enumerate_perm(&PermDatum::general_linear(n, e, r), &window).unwrap() {
                    assert_eq!(
                        length_im(&x, flavor).unwrap(),
                        length_word(&x, flavor).unwrap(),
                        "GL n = {n}, e = {e}, r = {r}, x = {x}"
                    );
                }
            }
        }
    }
    // ℓ(u^{λ(w)} w) = N_w on every fixed-point-free class
    for n in 2..=6usize {
        let flavor = GroupFlavor::GeneralLinear { n };
        for r in 1..=n - 1 {
            for w in enumerate_wnr(n, r).unwrap() {
                let w_inv = w.inverse();
                let lam: Vec<i64> = (1..=n).map(|i| i64::from(w_inv.apply(i) < i)).collect();
                let x = ExtAffineElement::from_left_translation(&lam, &w).unwrap();
                assert_eq!(
                    length_im(&x, flavor).unwrap(),
                    n_sigma_stats(&w).n as u64,
                    "n = {n}, r = {r}, w = {w:?}"
                );
            }
        }
    }
    finish(5, "length consistency", start, Duration::from_secs(60));
}

fn slope_conditions_agree(t: &FrobeniusTuple) {
    let nv = newton_vector(t).unwrap();
    let m = t.rank();
    let f = t.len();
    for i in 1..=m {
        let exists_zero = (0..f).any(|xi| nv.nu[xi][i - 1] == Rational64::from(0));
        let all_zero = (0..f).all(|xi| nv.nu[xi][i - 1] == Rational64::from(0));
        let fixed_zero = t
            .components()
            .iter()
            .all(|x| x.w().apply(i) == i && x.lambda()[i - 1] == 0);
        assert_eq!(exists_zero, all_zero, "index {i} of {t}");
        assert_eq!(all_zero, fixed_zero, "index {i} of {t}");
    }
}

#[test]
fn criterion_06_slope_zero_equivalences() {
    let start = Instant::now();
    // exhaustive: n ≤ 3, f ≤ 2, λ entries in 0..=2 under the hypothesis
    for n in 1..=3usize {
        let mut singles = Vec::new();
        for w in flavor_weyl_elements(GroupFlavor::GeneralLinear { n }) {
            let mut lambdas = vec![vec![]];
            for i in 1..=n {
                let lo = if w.apply(i) > i { 1 } else { 0 };
                lambdas = lambdas
                    .into_iter()
                    .flat_map(|prefix: Vec<i64>| {
                        (lo..=2i64).map(move |v| {
                            let mut next = prefix.clone();
                            next.push(v);
                            next
                        })
                    })
                    .collect();
            }
            for l in lambdas {
                singles.push(ExtAffineElement::new(w.clone(), l).unwrap());
            }
        }
        for x in &singles {
            slope_conditions_agree(&FrobeniusTuple::new(vec![x.clone()]).unwrap());
        }
        for x in &singles {
            for y in &singles {
                slope_conditions_agree(&FrobeniusTuple::new(vec![x.clone(), y.clone()]).unwrap());
            }
        }
    }
    // randomized: 1000 tuples with n ≤ 5, f ≤ 3
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for trial in 0..1000 {
        let n = 1 + trial % 5;
        let f = 1 + trial % 3;
        let mut components = Vec::with_capacity(f);
        for _ in 0..f {
            let mut images: Vec<usize> = (1..=n).collect();
            images.shuffle(&mut rng);
            let w = Permutation::new(images).unwrap();
            let lambda: Vec<i64> = (1..=n)
                .map(|i| {
                    let lo = if w.apply(i) > i { 1 } else { 0 };
                    rng.gen_range(lo..=3)
                })
                .collect();
            components.push(ExtAffineElement::new(w, lambda).unwrap());
        }
        slope_conditions_agree(&FrobeniusTuple::new(components).unwrap());
    }
    finish(6, "slope zero equivalences", start, Duration::from_secs(60));
}

#[test]
fn criterion_07_xprime_identity() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for trial in 0..10_000 {
        let n = 1 + trial % 8;
        let e = (trial % 4) as u32;
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(&mut rng);
        let lambda: Vec<i64> = (0..n).map(|_| rng.gen_range(-4i64..=4)).collect();
        let x = ExtAffineElement::new(Permutation::new(images).unwrap(), lambda).unwrap();
        let direct = xprime(&x, e);
        let via_adjoint = ExtAffineElement::central(n, e as i64)
            .multiply(&x.adjoint_tau().inverse())
            .unwrap();
        assert_eq!(direct, via_adjoint, "x = {x}, e = {e}");
    }
    finish(7, "x' identity", start, Duration::from_secs(10));
}

#[test]
fn criterion_08_oracle_equivalence() {
    let start = Instant::now();
    let window = Window::default();
    let mut data = Vec::new();
    for e in 1..=2u32 {
        for n in 1..=3usize {
            data.push(PermDatum::symplectic(n, e));
        }
        for n in 1..=6usize {
            data.push(PermDatum::unitary_ramified(n, e));
        }
        for n in 1..=6usize {
            for r in 0..=(n as u32 * e) {
                data.push(PermDatum::general_linear(n, e, r));
            }
        }
    }
    for d in &data {
        for x in enumeration_candidates(d, &window).unwrap() {
            assert_eq!(
                is_permissible(&x, d).unwrap(),
                is_permissible_oracle(&x, d).unwrap(),
                "routes disagree on {x} for {d:?}"
            );
        }
    }
    finish(8, "oracle equivalence", start, Duration::from_secs(60));
}

#[test]
fn criterion_09_density_criterion() {
    let start = Instant::now();
    for e in 1..=2u32 {
        for f in 1..=3u32 {
            for n in 1..=2usize {
                let rep = ordinary_density(e, f, n).unwrap();
                assert_eq!(rep.dense, f == 1, "e = {e}, f = {f}, n = {n}");
                assert!(rep.maximal_equals_orbit, "e = {e}, f = {f}, n = {n}");
            }
        }
    }
    finish(9, "density criterion", start, Duration::from_secs(60));
}

#[test]
fn criterion_10_normalization_invariance() {
    let start = Instant::now();
    let window = Window::default();

    // symplectic
    for e in 1..=2u32 {
        for n in 1..=2usize {
            let set = enumerate_perm(&PermDatum::symplectic(n, e), &window).unwrap();
            for f in 1..=2u32 {
                let cfg = StrataConfig::Symplectic { e, f, n };
                for t in krstrata::reports::tuple_power(&set, f as usize) {
                    let switched = t.map(|x| verschiebung_to_frobenius(x, e));
                    assert_eq!(
                        prank_sym(&t, &cfg).unwrap(),
                        prank_sym(&switched, &cfg).unwrap(),
                        "sym e = {e}, n = {n}, t = {t}"
                    );
                }
            }
        }
    }

    // ramified unitary: the switch multiplies by the full uniformizer power 2e_0
    for e0 in 1..=2u32 {
        for n in 1..=3usize {
            let set = enumerate_perm(&PermDatum::unitary_ramified(n, e0), &window).unwrap();
            for f in 1..=2u32 {
                let cfg = StrataConfig::UnitaryRamified { e0, f, n };
                for t in krstrata::reports::tuple_power(&set, f as usize) {
                    let switched = t.map(|x| verschiebung_to_frobenius(x, 2 * e0));
                    assert_eq!(
                        prank_uni_ramified(&t, &cfg).unwrap(),
                        prank_uni_ramified(&switched, &cfg).unwrap(),
                        "gu e0 = {e0}, n = {n}, t = {t}"
                    );
                }
            }
        }
    }

    // inert and split: the switch swaps the signature r ↔ ne - r
    for e in 1..=2u32 {
        for n in 1..=3usize {
            for r in 0..=(n as u32 * e) {
                let set = enumerate_perm(&PermDatum::general_linear(n, e, r), &window).unwrap();
                let r_prime = n as u32 * e - r;
                for f0 in 1..=2u32 {
                    let inert = StrataConfig::UnitaryInert { e, f0, n };
                    let split = StrataConfig::UnitarySplit { e, f0, n, r };
                    let split_prime = StrataConfig::UnitarySplit {
                        e,
                        f0,
                        n,
                        r: r_prime,
                    };
                    for t in krstrata::reports::tuple_power(&set, f0 as usize) {
                        let switched = t.map(|x| verschiebung_to_frobenius(x, e));
                        assert_eq!(
                            prank_uni_inert(&t, &inert).unwrap(),
                            prank_uni_inert(&switched, &inert).unwrap(),
                            "inert e = {e}, n = {n}, r = {r}, t = {t}"
                        );
                        assert_eq!(
                            prank_uni_split(&t, &split).unwrap(),
                            prank_uni_split(&switched, &split_prime).unwrap(),
                            "split e = {e}, n = {n}, r = {r}, t = {t}"
                        );
                    }
                }
            }
        }
    }
    finish(
        10,
        "normalization invariance",
        start,
        Duration::from_secs(30),
    );
}
