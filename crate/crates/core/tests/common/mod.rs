#![allow(dead_code)]

//! Helpers shared by the integration tests.

use num::bigint::BigInt;
use num::Zero;
use wald_core::exact::{Poly, Rat};

/// Exact Lagrange interpolation through distinct rational nodes.
pub fn lagrange(points: &[(Rat, Rat)]) -> Poly {
    let mut total = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            let linear = Poly::from_coeffs(vec![-xj / &denom, denom.recip()]);
            basis = &basis * &linear;
        }
        total = &total + &basis;
    }
    total
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}
