//! Certified real-root location: Sturm sequences on the square-free part,
//! Cauchy starting intervals, and bisection refinement.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{decimal_string, format_rat, parse_rat, Poly, Rat};
use crate::error::{Error, Result};

/// Certified isolating interval: the target polynomial has exactly one
/// distinct real root in `[lo, hi]`, and it is the largest real root when
/// produced by [`largest_real_root`]. `lo == hi` means the root is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub width_bound: Rat,
}

impl RootInterval {
    /// The width bound is stored tight (`hi − lo`), so serialized intervals
    /// round-trip without loss.
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted root interval");
        let width_bound = &hi - &lo;
        RootInterval { lo, hi, width_bound }
    }

    pub fn exact(r: Rat) -> Self {
        RootInterval::new(r.clone(), r)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Midpoint rendered to `places` decimal digits (ties to even).
    pub fn decimal(&self, places: usize) -> String {
        decimal_string(&self.midpoint(), places)
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RootInterval", 2)?;
        s.serialize_field("lo", &format_rat(&self.lo))?;
        s.serialize_field("hi", &format_rat(&self.hi))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for RootInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            lo: String,
            hi: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let lo = parse_rat(&raw.lo).map_err(D::Error::custom)?;
        let hi = parse_rat(&raw.hi).map_err(D::Error::custom)?;
        if lo > hi {
            return Err(D::Error::custom("inverted root interval"));
        }
        Ok(RootInterval::new(lo, hi))
    }
}

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    seq: Vec<Poly>,
}

impl SturmChain {
    fn new(square_free: &Poly) -> Self {
        let mut seq = vec![square_free.primitive_scaled()];
        let deriv = square_free.derivative().primitive_scaled();
        if !deriv.is_zero() {
            seq.push(deriv);
        }
        loop {
            let n = seq.len();
            if n < 2 {
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_scaled());
        }
        SturmChain { seq }
    }

    /// Sign variations at `x`, zeros skipped. With this convention
    /// `variations(a) − variations(b)` counts the distinct roots in the
    /// half-open interval `(a, b]`: a root at `a` is excluded and a root
    /// at `b` included, because the skipped zero makes the count at a root
    /// agree with the count just to its right.
    fn variations(&self, x: &Rat) -> usize {
        let mut last = 0i8;
        let mut flips = 0;
        for p in &self.seq {
            let v = p.eval(x);
            let sign = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && sign != last {
                flips += 1;
            }
            last = sign;
        }
        flips
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        let va = self.variations(lo);
        let vb = self.variations(hi);
        va.checked_sub(vb)
            .expect("sign variations must not increase left to right")
    }
}

/// Counts the distinct real roots of `p` in the half-open interval
/// `(lo, hi]`, using the square-free part of `p`.
pub fn sturm_count(p: &Poly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    if p.is_constant() {
        return Ok(0);
    }
    Ok(SturmChain::new(&p.square_free_part()).count(lo, hi))
}

/// Cauchy bound `1 + max |aᵢ / a_lead|`: every real root of `p` lies
/// strictly inside `(−B, B)`.
pub fn cauchy_bound(p: &Poly) -> Result<Rat> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let lead = p.leading().expect("nonzero polynomial");
    let max = p.coeffs()[..deg]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(Rat::zero);
    Ok(max + Rat::one())
}

/// Returns a certified interval of width at most `eps` around the largest
/// real root of `p`, or `None` when `p` has no real root. Isolation runs on
/// the square-free part; rational roots are detected and returned exactly
/// as zero-width intervals.
pub fn largest_real_root(p: &Poly, eps: &Rat) -> Result<Option<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !eps.is_positive() {
        return Err(Error::NonPositiveEps);
    }
    let q = p.square_free_part();
    if q.degree() == Some(1) {
        let root = -(&q.coeff(0) / &q.coeff(1));
        return Ok(Some(RootInterval::exact(root)));
    }
    let bound = cauchy_bound(&q)?;
    let chain = SturmChain::new(&q);
    let mut lo = -&bound;
    let mut hi = bound;
    let mut count = chain.count(&lo, &hi);
    if count == 0 {
        return Ok(None);
    }
    let rational_roots = rational_roots(&q);
    let two = Rat::from_integer(BigInt::from(2));
    loop {
        if count == 1 && &hi - &lo <= *eps && !q.eval(&lo).is_zero() {
            // Exactly one root in [lo, hi]; snap to it if it is rational.
            if let Some(roots) = &rational_roots {
                if let Some(r) = roots.iter().find(|r| **r > lo && **r <= hi) {
                    return Ok(Some(RootInterval::exact(r.clone())));
                }
            }
            return Ok(Some(RootInterval::new(lo, hi)));
        }
        let mid = (&lo + &hi) / &two;
        let above = chain.count(&mid, &hi);
        if above == 0 {
            if q.eval(&mid).is_zero() {
                // The midpoint itself is the largest root.
                return Ok(Some(RootInterval::exact(mid)));
            }
            hi = mid;
        } else {
            lo = mid;
            count = above;
        }
    }
}

/// All rational roots of `q`, via the rational root theorem on the
/// integer-primitive form. Returns `None` when the constant or leading
/// coefficient is too large to factor cheaply.
fn rational_roots(q: &Poly) -> Option<Vec<Rat>> {
    let prim = q.primitive_scaled();
    let mut roots = Vec::new();
    // Factor out t^k first so the constant term is nonzero.
    let k = prim.coeffs().iter().position(|c| !c.is_zero())?;
    let mut reduced = Poly::from_coeffs(prim.coeffs()[k..].to_vec());
    if k > 0 {
        roots.push(Rat::zero());
    }
    if reduced.is_constant() {
        return Some(roots);
    }
    let limit = BigInt::from(100_000_000u64);
    let a0 = reduced.coeff(0).numer().abs();
    let lead = reduced.leading().expect("nonconstant").numer().abs();
    if a0 > limit || lead > limit {
        return None;
    }
    for p in divisors(&a0) {
        for q_div in divisors(&lead) {
            for cand in [
                Rat::new(p.clone(), q_div.clone()),
                Rat::new(-p.clone(), q_div.clone()),
            ] {
                if roots.contains(&cand) {
                    continue;
                }
                if reduced.eval(&cand).is_zero() {
                    if let Some(d) = reduced.deflate(&cand) {
                        reduced = d;
                    }
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(n / &d);
        }
        d += 1;
    }
    divs.sort();
    divs.dedup();
    divs
}
