//! Sparse multivariate polynomials used as integrands during the exact
//! volume computation. Variables are indexed 0..arity; the shape integrator
//! uses indices `0..c` for the simplex coordinates and `c` for `t`.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::exact::{Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut exps = vec![0; arity];
        exps[i] = 1;
        let mut p = MultiPoly::zero(arity);
        p.add_term(exps, Rat::one());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.arity, "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, other.arity);
        let mut out = MultiPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.arity, Rat::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Definite integral over `x_i` from 0 to `upper`: antidifferentiates in
    /// `x_i` and substitutes the bound. The lower limit contributes nothing
    /// because every antiderivative term carries a positive power of `x_i`.
    pub fn integrate(&self, i: usize, upper: &MultiPoly) -> MultiPoly {
        assert!(i < self.arity);
        assert_eq!(upper.arity, self.arity);
        let max_pow = self
            .terms
            .keys()
            .map(|e| e[i] + 1)
            .max()
            .unwrap_or(0);
        // upper^0 .. upper^max_pow, computed once.
        let mut powers = Vec::with_capacity(max_pow as usize + 1);
        powers.push(MultiPoly::constant(self.arity, Rat::one()));
        for _ in 0..max_pow {
            powers.push(powers.last().expect("nonempty").mul(upper));
        }
        let mut out = MultiPoly::zero(self.arity);
        for (e, c) in &self.terms {
            let k = e[i] + 1;
            let coeff = c / Rat::from_integer(BigInt::from(k));
            let mut rest = e.clone();
            rest[i] = 0;
            let mut base = MultiPoly::zero(self.arity);
            base.add_term(rest, coeff);
            out = out.add(&base.mul(&powers[k as usize]));
        }
        out
    }

    /// Converts to a univariate polynomial in variable `i`; panics if any
    /// other variable still occurs.
    pub fn into_univariate(self, i: usize) -> Poly {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (e, c) in self.terms {
            assert!(
                e.iter().enumerate().all(|(j, &x)| j == i || x == 0),
                "polynomial is not univariate in variable {i}"
            );
            let d = e[i] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rat::zero());
            }
            coeffs[d] = c;
        }
        Poly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn arithmetic_drops_zero_terms() {
        let x = MultiPoly::var(2, 0);
        let diff = x.sub(&x);
        assert_eq!(diff, MultiPoly::zero(2));
    }

    #[test]
    fn integrate_monomial() {
        // ∫_0^b x^2 dx = b^3/3 with b a constant polynomial.
        let x = MultiPoly::var(2, 0);
        let sq = x.pow(2);
        let b = MultiPoly::constant(2, rat_int(2));
        let val = sq.integrate(0, &b);
        assert_eq!(val, MultiPoly::constant(2, rat(8, 3)));
    }

    #[test]
    fn integrate_with_affine_bound() {
        // ∫_0^{1-y} 1 dx = 1 - y.
        let one = MultiPoly::constant(2, Rat::one());
        let bound = one.sub(&MultiPoly::var(2, 1));
        let val = one.integrate(0, &bound);
        assert_eq!(val, bound);
        // Then ∫_0^1 (1-y) dy = 1/2.
        let total = val.integrate(1, &MultiPoly::constant(2, Rat::one()));
        assert_eq!(total, MultiPoly::constant(2, rat(1, 2)));
    }

    #[test]
    fn univariate_extraction() {
        let t = MultiPoly::var(3, 2);
        let p = t.pow(2).scale(&rat(1, 2));
        assert_eq!(
            p.into_univariate(2),
            Poly::monomial(rat(1, 2), 2)
        );
    }
}
