//! Properties of the bound pipeline.

mod common;

use proptest::prelude::*;
use wald_core::bound::{lambda_poly, waldschmidt_bound};
use wald_core::exact::Rat;
use wald_core::shape::{Configuration, SimplexShape};

use common::{rat, rat_int};

fn intercept() -> impl Strategy<Value = Rat> {
    (1i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn crosses(s: u64, order: usize) -> Configuration {
    let cross = SimplexShape::new(3, 2, vec![rat_int(1), rat_int(2)]).unwrap();
    Configuration::new(3, vec![(cross, s)], order).unwrap()
}

fn points_p2(s: u64) -> Configuration {
    let point = SimplexShape::new(2, 2, vec![rat_int(1), rat_int(1)]).unwrap();
    Configuration::new(2, vec![(point, s)], 0).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `Λ` is monic up to the `1/n!` factor, so `Λ^{(c)}` tends to `+∞`;
    /// an odd degree `n − c` therefore forces a real root, and the bound
    /// must deliver one.
    #[test]
    fn odd_degree_derivative_always_has_root(
        n in 2usize..=5,
        component_raw in prop::collection::vec((1usize..=5, prop::collection::vec(intercept(), 5), 1u64..=5), 1..=3),
        parity in 0usize..=2,
    ) {
        let components: Vec<(SimplexShape, u64)> = component_raw
            .iter()
            .map(|(c_raw, a, count)| {
                let c = 1 + (c_raw - 1) % n;
                (SimplexShape::new(n, c, a[..c].to_vec()).unwrap(), *count)
            })
            .collect();
        // Choose a derivative order below n leaving odd degree n − c.
        let candidates: Vec<usize> = (0..n).filter(|c| (n - c) % 2 == 1).collect();
        let order = candidates[parity % candidates.len()];
        let config = Configuration::new(n, components, order).unwrap();
        let report = waldschmidt_bound(&config, &rat(1, 1_000_000)).expect("valid config");
        prop_assert!(report.root.is_some(), "odd-degree derivative lost its root");
    }
}

/// Disjoint flats in the regime `n ≥ 2r + 1` keep a real root of `Λ`
/// itself at or above 1; checked on the crosses and coordinate-point
/// instances.
#[test]
fn lambda_root_at_least_one_on_flat_instances() {
    let eps = rat(1, 100_000_000);
    for s in 2..=5 {
        let report = waldschmidt_bound(&crosses(s, 0), &eps).unwrap();
        let iv = report.root.expect("crosses have a root");
        assert!(iv.lo >= rat_int(1), "cross root below 1 at s={s}");
    }
    for s in 1..=9 {
        let report = waldschmidt_bound(&points_p2(s), &eps).unwrap();
        let iv = report.root.expect("points have a root");
        assert!(iv.lo >= rat_int(1), "point root below 1 at s={s}");
    }
}

/// The crosses' largest roots grow with s and match the quoted values to
/// five decimals.
#[test]
fn cross_gamma_values_and_monotonicity() {
    let eps = rat(1, 100_000_000);
    let quoted = [
        (2u64, rat(276873, 100_000)),
        (3, rat(360687, 100_000)),
        (4, rat(429021, 100_000)),
        (5, rat(488447, 100_000)),
    ];
    let tol = rat(1, 100_000);
    let mut previous_hi: Option<Rat> = None;
    for (s, expected) in quoted {
        let report = waldschmidt_bound(&crosses(s, 0), &eps).unwrap();
        let iv = report.root.expect("root exists");
        assert!(&iv.lo >= &(&expected - &tol), "gamma_{s} too small");
        assert!(&iv.hi <= &(&expected + &tol), "gamma_{s} too large");
        if let Some(prev) = previous_hi {
            assert!(prev < iv.lo, "gamma_{s} failed strict monotonicity");
        }
        previous_hi = Some(iv.hi);
    }
}

/// Λ of the five-crosses configuration printed for human eyes.
#[test]
fn lambda_renders_like_the_handwritten_form() {
    assert_eq!(lambda_poly(&crosses(5, 0)).to_string(), "t^3/6 - 5t + 5");
}
