//! Exact monomial-ideal engine: symbolic powers of coordinate-subspace
//! arrangements, initial degrees, Hilbert functions and polynomials, and
//! the Δ-set machinery. This is the independent oracle for the shape-side
//! bounds: everything here is computed by counting and divisibility alone.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, Poly, Rat};

/// A monomial in `x₀..x_n`, stored as its exponent vector of length `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(vars: usize) -> Self {
        Monomial {
            exponents: vec![0; vars],
        }
    }

    /// `x_i` in `vars` variables.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let mut exponents = vec![0; vars];
        exponents[i] = 1;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.arity(), other.arity());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.arity(), other.arity());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Degree-reverse-lexicographic comparison, used for deterministic
    /// generator ordering in outputs.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exponents.iter().zip(&other.exponents).rev() {
            match a.cmp(b) {
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal given by its unique minimal generating set, sorted in
/// degree-reverse-lexicographic order. The empty generating set is the
/// zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    vars: usize,
    generators: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;
    fn try_from(raw: IdealJson) -> Result<Self> {
        MonomialIdeal::new(
            raw.n + 1,
            raw.generators.into_iter().map(Monomial::new).collect(),
        )
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> IdealJson {
        IdealJson {
            n: ideal.n(),
            generators: ideal
                .generators
                .iter()
                .map(|g| g.exponents.clone())
                .collect(),
        }
    }
}

impl MonomialIdeal {
    /// Builds an ideal in `vars` variables, minimalizing the generators.
    pub fn new(vars: usize, generators: Vec<Monomial>) -> Result<Self> {
        for g in &generators {
            if g.arity() != vars {
                return Err(Error::ArityMismatch {
                    expected: vars,
                    found: g.arity(),
                });
            }
        }
        let mut sorted = generators;
        sorted.sort_by(Monomial::cmp_degrevlex);
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            vars,
            generators: minimal,
        })
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            generators: Vec::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Projective ambient dimension: the variables are `x₀..x_n`.
    pub fn n(&self) -> usize {
        self.vars - 1
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Removes every monomial divisible by another in the set. The arity is
/// taken from the first monomial; mixing arities is an error.
pub fn minimalize(gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    let vars = gens
        .first()
        .map(Monomial::arity)
        .ok_or_else(|| Error::InvalidConfiguration("empty generator set".into()))?;
    MonomialIdeal::new(vars, gens)
}

/// Intersection of monomial ideals: minimalized pairwise lcms.
pub fn ideal_intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    if a.vars() != b.vars() {
        return Err(Error::ArityMismatch {
            expected: a.vars(),
            found: b.vars(),
        });
    }
    let mut lcms = Vec::with_capacity(a.generators.len() * b.generators.len());
    for g in &a.generators {
        for h in &b.generators {
            lcms.push(g.lcm(h));
        }
    }
    MonomialIdeal::new(a.vars(), lcms)
}

/// `m`-th ordinary power: minimalized degree-`m` products of generators.
pub fn ideal_power(ideal: &MonomialIdeal, m: u32) -> MonomialIdeal {
    assert!(m >= 1, "ideal power requires m >= 1");
    if ideal.is_zero() {
        return MonomialIdeal::zero(ideal.vars());
    }
    let mut products = vec![Monomial::one(ideal.vars())];
    let mut starts = vec![0usize];
    for _ in 0..m {
        let mut next = Vec::new();
        let mut next_starts = Vec::new();
        for (prod, &start) in products.iter().zip(&starts) {
            for (i, g) in ideal.generators.iter().enumerate().skip(start) {
                next.push(prod.mul(g));
                next_starts.push(i);
            }
        }
        products = next;
        starts = next_starts;
    }
    MonomialIdeal::new(ideal.vars(), products).expect("consistent arity")
}

/// Symbolic power of a coordinate-subspace arrangement in `P^n`: the primes
/// are subsets of the variable indices `0..=n`, and the result is the
/// intersection of their `m`-th ordinary powers.
pub fn symbolic_power(n: usize, primes: &[Vec<usize>], m: u32) -> Result<MonomialIdeal> {
    if primes.is_empty() {
        return Err(Error::EmptyPrimes);
    }
    if m == 0 {
        return Err(Error::InvalidPrimes("symbolic power requires m >= 1".into()));
    }
    let vars = n + 1;
    let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(primes.len());
    for prime in primes {
        if prime.is_empty() {
            return Err(Error::InvalidPrimes("a prime must use at least one variable".into()));
        }
        if let Some(&bad) = prime.iter().find(|&&i| i >= vars) {
            return Err(Error::InvalidPrimes(format!(
                "variable index {bad} out of range for P^{n}"
            )));
        }
        sets.push(prime.iter().copied().collect());
    }
    for (i, a) in sets.iter().enumerate() {
        for b in sets.iter().skip(i + 1) {
            if a.is_subset(b) || b.is_subset(a) {
                return Err(Error::InvalidPrimes(
                    "primes must be pairwise incomparable".into(),
                ));
            }
        }
    }
    let mut result: Option<MonomialIdeal> = None;
    for set in &sets {
        let prime_ideal = MonomialIdeal::new(
            vars,
            set.iter().map(|&i| Monomial::var(vars, i)).collect(),
        )?;
        let power = ideal_power(&prime_ideal, m);
        result = Some(match result {
            None => power,
            Some(acc) => ideal_intersect(&acc, &power)?,
        });
    }
    Ok(result.expect("nonempty prime list"))
}

/// Initial degree: the least degree of a nonzero element, i.e. the minimum
/// generator degree.
pub fn alpha(ideal: &MonomialIdeal) -> Result<u32> {
    ideal
        .generators
        .iter()
        .map(Monomial::degree)
        .min()
        .ok_or(Error::AlphaUndefined)
}

/// `binom(top, k)` in `u128`, exact at every step.
fn binom_u128(top: i64, k: u32) -> u128 {
    if top < k as i64 {
        return 0;
    }
    let mut res: u128 = 1;
    let top = top as u128;
    for i in 1..=k as u128 {
        res = res * (top - k as u128 + i) / i;
    }
    res
}

/// All monomials of total degree `deg` in `vars` variables, in a fixed
/// deterministic order.
pub fn monomials_of_degree(vars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    fn rec(current: &mut Vec<u32>, idx: usize, remaining: u32, out: &mut Vec<Monomial>) {
        if idx + 1 == current.len() {
            current[idx] = remaining;
            out.push(Monomial::new(current.clone()));
            return;
        }
        for e in 0..=remaining {
            current[idx] = e;
            rec(current, idx + 1, remaining - e, out);
        }
        current[idx] = 0;
    }
    if vars == 0 {
        if deg == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(&mut current, 0, deg, &mut out);
    out
}

/// Hilbert function of the quotient: the number of degree-`t` monomials in
/// `x₀..x_n` lying outside the ideal. Uses inclusion–exclusion over the
/// lcm lattice for up to 20 generators, direct enumeration beyond.
pub fn hf_quotient(ideal: &MonomialIdeal, t: u32) -> u128 {
    let n = ideal.n() as u32;
    let total = binom_u128((n + t) as i64, n);
    if ideal.is_zero() {
        return total;
    }
    if ideal.generators.len() <= 20 {
        let mut in_ideal: i128 = 0;
        subset_count(
            &ideal.generators,
            0,
            &Monomial::one(ideal.vars()),
            1,
            t,
            n,
            &mut in_ideal,
        );
        (total as i128 - in_ideal) as u128
    } else {
        monomials_of_degree(ideal.vars(), t)
            .iter()
            .filter(|m| !ideal.contains(m))
            .count() as u128
    }
}

/// Adds `(−1)^{|S|+1} · #multiples(lcm S)` over nonempty generator subsets
/// `S` extending the current selection. Subtrees whose running lcm already
/// exceeds degree `t` contribute nothing and are pruned.
fn subset_count(
    gens: &[Monomial],
    start: usize,
    lcm: &Monomial,
    sign: i128,
    t: u32,
    n: u32,
    acc: &mut i128,
) {
    for (i, g) in gens.iter().enumerate().skip(start) {
        let next = lcm.lcm(g);
        let d = next.degree();
        if d > t {
            continue;
        }
        *acc += sign * binom_u128((n + t - d) as i64, n) as i128;
        subset_count(gens, i + 1, &next, -sign, t, n, acc);
    }
}

/// The Δ-set of an ideal satisfying the proof-side precondition: `μ̂` is
/// the gcd of the generators and Δ collects the monomials in `x₀..x_{n−1}`
/// lying in `(μ̂)` but outside the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSet {
    pub gcd: Monomial,
    pub members: Vec<Monomial>,
    /// How finiteness was certified: the enumeration stops only after the
    /// stabilization rule below holds, and the Hilbert-function difference
    /// is re-checked against the member count at every degree.
    pub note: String,
}

impl DeltaSet {
    pub fn max_member_degree(&self) -> u32 {
        self.members.iter().map(Monomial::degree).max().unwrap_or(0)
    }
}

fn check_delta_precondition(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.vars() < 2 {
        return Err(Error::DeltaMaybeInfinite(
            "need at least two variables".into(),
        ));
    }
    if ideal.is_zero() {
        return Err(Error::DeltaMaybeInfinite(
            "the zero ideal has no generator gcd".into(),
        ));
    }
    let last = ideal.vars() - 1;
    if let Some(bad) = ideal
        .generators
        .iter()
        .find(|g| g.exponents()[last] > 0)
    {
        return Err(Error::DeltaMaybeInfinite(format!(
            "generator {bad} involves the last variable x{last}"
        )));
    }
    // A principal ideal has J = K and an empty Δ no matter which variables
    // it touches; the coverage requirement matters only for the enumeration.
    if ideal.generators.len() > 1 {
        for j in 0..last {
            if !ideal.generators.iter().any(|g| g.exponents()[j] > 0) {
                return Err(Error::DeltaMaybeInfinite(format!(
                    "variable x{j} divides no generator"
                )));
            }
        }
    }
    Ok(())
}

/// Computes `μ̂ = gcd(generators)` and the finite set
/// `Δ = {μ ∈ M(n−1) : μ ∈ (μ̂) \ K}` by bounded enumeration.
///
/// Enumeration proceeds by increasing degree and stops once no member has
/// appeared for `n + 2` consecutive degrees and the difference
/// `HF_K − HF_J` has been constant over the same degrees; that difference
/// equals the running member count at every degree, which is asserted.
pub fn delta_set(ideal: &MonomialIdeal) -> Result<DeltaSet> {
    check_delta_precondition(ideal)?;
    let vars = ideal.vars();
    let n = ideal.n();
    let gcd = ideal
        .generators
        .iter()
        .skip(1)
        .fold(ideal.generators[0].clone(), |acc, g| acc.gcd(g));
    if ideal.generators.len() == 1 {
        return Ok(DeltaSet {
            gcd,
            members: Vec::new(),
            note: "principal ideal: J = K, so Delta is empty".into(),
        });
    }
    let principal = MonomialIdeal::new(vars, vec![gcd.clone()])?;

    let quiet_needed = n + 2;
    let mut members: Vec<Monomial> = Vec::new();
    let mut quiet = 0usize;
    // Degrees of candidate multiplier monomials ν (μ = μ̂·ν). The cap is
    // defensive; the stabilization rule fires long before it for any input
    // passing the precondition.
    let cap: u32 = ideal
        .generators
        .iter()
        .map(Monomial::degree)
        .sum::<u32>()
        + quiet_needed as u32
        + 2;
    let mut extra = 0u32;
    loop {
        let mut found_here = 0usize;
        // ν ranges over monomials in x₀..x_{n−1} only.
        for nu in monomials_of_degree(n, extra) {
            let mut exps = nu.exponents().to_vec();
            exps.push(0);
            let mu = gcd.mul(&Monomial::new(exps));
            if !ideal.contains(&mu) {
                members.push(mu);
                found_here += 1;
            }
        }
        let t = gcd.degree() + extra;
        let diff = hf_quotient(ideal, t) as i128 - hf_quotient(&principal, t) as i128;
        assert_eq!(
            diff,
            members.len() as i128,
            "Hilbert-function difference disagrees with Δ enumeration at degree {t}"
        );
        quiet = if found_here == 0 { quiet + 1 } else { 0 };
        if quiet >= quiet_needed {
            break;
        }
        extra += 1;
        if extra > cap {
            return Err(Error::DeltaMaybeInfinite(format!(
                "enumeration exceeded the stabilization cap at degree {extra}"
            )));
        }
    }
    members.sort_by(Monomial::cmp_degrevlex);
    let note = format!(
        "finite by stabilization: no new member for {quiet_needed} consecutive degrees; \
         HF difference matched the member count at every checked degree"
    );
    Ok(DeltaSet {
        gcd,
        members,
        note,
    })
}

/// `binom(n + t − d, n)` as an exact polynomial in `t`.
fn binom_poly(n: usize, d: u32) -> Poly {
    let mut poly = Poly::constant(Rat::from_integer(factorial(n)).recip());
    for i in 1..=n as i64 {
        let linear = Poly::from_coeffs(vec![
            Rat::from_integer((i - d as i64).into()),
            Rat::one(),
        ]);
        poly = &poly * &linear;
    }
    poly
}

/// Hilbert polynomial via the Δ-set decomposition:
/// `HP_K(t) = binom(n+t, n) − binom(n+t−deg μ̂, n) + #Δ`.
pub fn hp_via_delta(ideal: &MonomialIdeal) -> Result<Poly> {
    let ds = delta_set(ideal)?;
    let n = ideal.n();
    let diff = &binom_poly(n, 0) - &binom_poly(n, ds.gcd.degree());
    Ok(&diff + &Poly::constant(Rat::from_integer((ds.members.len() as u64).into())))
}

/// Outcome of checking `HF ≤ HP` and the Δ-set equality over a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HfHpVerdict {
    /// `HF_K(t) ≤ HP_K(t)` for every integer `t` in `[α(K)−1, t_max]`.
    pub holds: bool,
    pub first_violation: Option<u32>,
    /// Smallest `t₀` with `HF_K(t) = HP_K(t)` for all `t ∈ [t₀, t_max]`.
    pub equality_from: Option<u32>,
    /// `HF_K(t) = HF_J(t) + #Δ` for all checked `t` past the largest Δ
    /// member degree.
    pub delta_equality_holds: bool,
    pub checked_up_to: u32,
}

/// Checks `HF_K(t) ≤ hp_via_delta(K)(t)` for `t ∈ [α(K)−1, t_max]`, and the
/// exact equality `HF_K(t) = HF_J(t) + #Δ` past the largest Δ degree.
pub fn verify_hf_leq_hp(ideal: &MonomialIdeal, t_max: u32) -> Result<HfHpVerdict> {
    let ds = delta_set(ideal)?;
    let hp = hp_via_delta(ideal)?;
    let a = alpha(ideal)?;
    let principal = MonomialIdeal::new(ideal.vars(), vec![ds.gcd.clone()])?;

    let mut first_violation = None;
    let start = a.saturating_sub(1);
    for t in start..=t_max {
        let hf = hf_quotient(ideal, t);
        let hp_t = hp.eval(&Rat::from_integer(t.into()));
        if Rat::from_integer(hf.into()) > hp_t && first_violation.is_none() {
            first_violation = Some(t);
        }
    }

    let mut equality_from = None;
    for t in (start..=t_max).rev() {
        let hf = hf_quotient(ideal, t);
        let hp_t = hp.eval(&Rat::from_integer(t.into()));
        if Rat::from_integer(hf.into()) == hp_t {
            equality_from = Some(t);
        } else {
            break;
        }
    }

    let delta_count = ds.members.len() as u128;
    let mut delta_equality_holds = true;
    for t in ds.max_member_degree()..=t_max {
        if hf_quotient(ideal, t) != hf_quotient(&principal, t) + delta_count {
            delta_equality_holds = false;
            break;
        }
    }

    Ok(HfHpVerdict {
        holds: first_violation.is_none(),
        first_violation,
        equality_from,
        delta_equality_holds,
        checked_up_to: t_max,
    })
}

/// One row of the Waldschmidt sample table: `α(I^{(m)})` and the exact
/// ratio `α(I^{(m)})/m`, itself an upper bound for the constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRow {
    pub m: u32,
    pub alpha: u32,
    #[serde(with = "crate::exact::rat_serde")]
    pub ratio: Rat,
}

/// `α(I^{(m)})/m` for `m = 1..m_max`, in increasing `m`.
pub fn waldschmidt_samples(
    n: usize,
    primes: &[Vec<usize>],
    m_max: u32,
) -> Result<Vec<SampleRow>> {
    if m_max == 0 {
        return Err(Error::InvalidPrimes("m_max must be >= 1".into()));
    }
    (1..=m_max)
        .map(|m| {
            let power = symbolic_power(n, primes, m)?;
            let a = alpha(&power)?;
            Ok(SampleRow {
                m,
                alpha: a,
                ratio: Rat::new(a.into(), m.into()),
            })
        })
        .collect()
}
