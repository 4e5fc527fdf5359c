//! Property tests for the monomial-ideal engine, driven by seeded random
//! instances so every run checks the same family.

mod common;

use num::bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wald_core::exact::Rat;
use wald_core::monomial::{
    alpha, delta_set, hf_quotient, hp_via_delta, ideal_power, monomials_of_degree,
    symbolic_power, MonomialIdeal, Monomial,
};

use common::lagrange;

/// Random ideal in `x₀..x_{n−1}` (never the last variable) accepted only
/// when the Δ-set machinery applies to it.
fn random_delta_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=4usize);
        let vars = n + 1;
        let gen_count = rng.gen_range(1..=6usize);
        let mut gens = Vec::new();
        for _ in 0..gen_count {
            let mut exps = vec![0u32; vars];
            for _ in 0..rng.gen_range(1..=4u32) {
                exps[rng.gen_range(0..n)] += 1;
            }
            gens.push(Monomial::new(exps));
        }
        let ideal = MonomialIdeal::new(vars, gens).expect("consistent arity");
        if !ideal.is_zero() && delta_set(&ideal).is_ok() {
            return ideal;
        }
    }
}

/// Random pairwise-incomparable prime sets over `x₀..x_n`.
fn random_primes(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<usize>> {
    let wanted = rng.gen_range(1..=3usize);
    let mut primes: Vec<Vec<usize>> = Vec::new();
    let mut attempts = 0;
    while primes.len() < wanted && attempts < 50 {
        attempts += 1;
        let size = rng.gen_range(1..=n);
        let mut vars: Vec<usize> = (0..=n).collect();
        for i in (1..vars.len()).rev() {
            vars.swap(i, rng.gen_range(0..=i));
        }
        let mut candidate: Vec<usize> = vars[..size].to_vec();
        candidate.sort_unstable();
        let comparable = primes.iter().any(|p| {
            let a: std::collections::BTreeSet<_> = p.iter().collect();
            let b: std::collections::BTreeSet<_> = candidate.iter().collect();
            a.is_subset(&b) || b.is_subset(&a)
        });
        if !comparable {
            primes.push(candidate);
        }
    }
    primes
}

/// Membership soundness: a monomial lies in the symbolic power exactly
/// when it lies in every prime power.
#[test]
fn symbolic_power_membership_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let n = rng.gen_range(2..=4usize);
        let primes = random_primes(&mut rng, n);
        let m = rng.gen_range(1..=3u32);
        let power = symbolic_power(n, &primes, m).expect("valid primes");
        let prime_powers: Vec<MonomialIdeal> = primes
            .iter()
            .map(|p| {
                let gens = p.iter().map(|&i| Monomial::var(n + 1, i)).collect();
                ideal_power(&MonomialIdeal::new(n + 1, gens).unwrap(), m)
            })
            .collect();
        for d in 0..=6u32 {
            for mono in monomials_of_degree(n + 1, d) {
                let expected = prime_powers.iter().all(|p| p.contains(&mono));
                assert_eq!(
                    power.contains(&mono),
                    expected,
                    "membership mismatch for {mono} (n={n}, m={m}, primes={primes:?})"
                );
            }
        }
    }
}

/// `α(I^(a+b)) ≤ α(I^(a)) + α(I^(b))`: products of symbolic powers land
/// in the symbolic power of the summed order.
#[test]
fn alpha_subadditive_on_symbolic_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut families: Vec<(usize, Vec<Vec<usize>>)> = vec![
        (3, vec![vec![2, 3], vec![1, 3]]),
        (2, vec![vec![1, 2], vec![0, 2]]),
    ];
    for _ in 0..6 {
        let n = rng.gen_range(2..=4usize);
        families.push((n, random_primes(&mut rng, n)));
    }
    for (n, primes) in families {
        for a in 1..=3u32 {
            for b in a..=3u32 {
                let alpha_a = alpha(&symbolic_power(n, &primes, a).unwrap()).unwrap();
                let alpha_b = alpha(&symbolic_power(n, &primes, b).unwrap()).unwrap();
                let alpha_ab = alpha(&symbolic_power(n, &primes, a + b).unwrap()).unwrap();
                assert!(
                    alpha_ab <= alpha_a + alpha_b,
                    "subadditivity failed for primes {primes:?}: a={a}, b={b}"
                );
            }
        }
    }
}

/// The Δ-set count is exactly the stable Hilbert-function difference: past
/// the largest member degree, `HF_K − HF_J` stays constant at `#Δ` over
/// `n + 2` consecutive degrees.
#[test]
fn delta_count_is_stable_hf_difference() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let ideal = random_delta_ideal(&mut rng);
        let ds = delta_set(&ideal).expect("precondition checked");
        let principal =
            MonomialIdeal::new(ideal.vars(), vec![ds.gcd.clone()]).expect("same arity");
        let start = ds.max_member_degree();
        for t in start..start + ideal.n() as u32 + 2 {
            assert_eq!(
                hf_quotient(&ideal, t) - hf_quotient(&principal, t),
                ds.members.len() as u128
            );
        }
    }
}

/// `hp_via_delta` agrees with the polynomial interpolated through the
/// Hilbert function at `n + 1` points past stabilization, for 100 random
/// ideals. This catches any false stabilization of the Δ enumeration.
#[test]
fn hp_matches_interpolated_hilbert_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..100 {
        let ideal = random_delta_ideal(&mut rng);
        let ds = delta_set(&ideal).expect("precondition checked");
        let hp = hp_via_delta(&ideal).expect("precondition checked");
        let start = ds.max_member_degree().max(ds.gcd.degree()) + 1;
        let points: Vec<(Rat, Rat)> = (0..=ideal.n() as u32)
            .map(|k| {
                let t = start + k;
                (
                    Rat::from_integer(t.into()),
                    Rat::from_integer(BigInt::from(hf_quotient(&ideal, t))),
                )
            })
            .collect();
        assert_eq!(
            lagrange(&points),
            hp,
            "interpolation mismatch for {:?}",
            ideal.generators()
        );
    }
}
