//! Limiting shapes `Δ(a₁,…,a_c) × R^{n−c}_{≥0}` and their asymptotic
//! Hilbert polynomials, computed by exact symbolic integration.

mod multipoly;

pub use multipoly::MultiPoly;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, format_rat, parse_rat, Poly, Rat};

/// A limiting shape: the scaled coordinate simplex with axis intercepts
/// `a₁,…,a_c` in the first `c` coordinates, times the nonnegative orthant
/// in the remaining `n − c` coordinates of `R^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ShapeJson", into = "ShapeJson")]
pub struct SimplexShape {
    n: usize,
    c: usize,
    intercepts: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct ShapeJson {
    n: usize,
    c: usize,
    intercepts: Vec<String>,
}

impl TryFrom<ShapeJson> for SimplexShape {
    type Error = Error;
    fn try_from(raw: ShapeJson) -> Result<Self> {
        let intercepts = raw
            .intercepts
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        SimplexShape::new(raw.n, raw.c, intercepts)
    }
}

impl From<SimplexShape> for ShapeJson {
    fn from(shape: SimplexShape) -> ShapeJson {
        ShapeJson {
            n: shape.n,
            c: shape.c,
            intercepts: shape.intercepts.iter().map(format_rat).collect(),
        }
    }
}

impl SimplexShape {
    pub fn new(n: usize, c: usize, intercepts: Vec<Rat>) -> Result<Self> {
        if c == 0 || c > n {
            return Err(Error::InvalidShape(format!("require 1 <= c <= n, got c={c}, n={n}")));
        }
        if intercepts.len() != c {
            return Err(Error::InvalidShape(format!(
                "expected {c} intercepts, got {}",
                intercepts.len()
            )));
        }
        if let Some(bad) = intercepts.iter().find(|a| !a.is_positive()) {
            return Err(Error::InvalidShape(format!(
                "intercepts must be positive, got {}",
                format_rat(bad)
            )));
        }
        Ok(SimplexShape { n, c, intercepts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn intercepts(&self) -> &[Rat] {
        &self.intercepts
    }

    pub fn max_intercept(&self) -> Rat {
        self.intercepts
            .iter()
            .max()
            .cloned()
            .expect("c >= 1 intercepts")
    }
}

/// The star configuration shape `I_{c,s,n}`: intersections of every `c`
/// out of `s` generic hyperplanes in `P^n`; the simplex intercepts are
/// `s/c, (s−1)/(c−1), …, s−(c−1)`.
pub fn star_shape(n: usize, c: usize, s: usize) -> Result<SimplexShape> {
    if c == 0 || c > n {
        return Err(Error::InvalidShape(format!("require 1 <= c <= n, got c={c}, n={n}")));
    }
    if s < c {
        return Err(Error::DegenerateStar);
    }
    let intercepts = (1..=c)
        .map(|i| Rat::new(((s - i + 1) as u64).into(), ((c - i + 1) as u64).into()))
        .collect();
    SimplexShape::new(n, c, intercepts)
}

/// Asymptotic Hilbert polynomial of a shape: the polynomial in `t` equal to
/// `vol(Γ ∩ T_t)` for all `t ≥ max aᵢ`, where `T_t` is the corner simplex
/// `x₁ + … + x_n ≤ t`.
///
/// The `n − c` orthant coordinates integrate in closed form to
/// `(t − x₁ − … − x_c)^{n−c}/(n−c)!`; the simplex coordinates then
/// integrate symbolically from `x_c` down to `x₁`, each with the linear
/// upper bound `aᵢ(1 − Σ_{j<i} x_j/a_j)`.
pub fn ahp_simplex(shape: &SimplexShape) -> Poly {
    let (n, c) = (shape.n, shape.c);
    let arity = c + 1; // x_1..x_c plus t
    let t_var = c;
    let free = (n - c) as u32;

    let mut integrand = if free == 0 {
        MultiPoly::constant(arity, Rat::one())
    } else {
        let mut linear = MultiPoly::var(arity, t_var);
        for i in 0..c {
            linear = linear.sub(&MultiPoly::var(arity, i));
        }
        linear
            .pow(free)
            .scale(&Rat::from_integer(factorial(free as usize)).recip())
    };

    for i in (0..c).rev() {
        let a_i = &shape.intercepts[i];
        let mut upper = MultiPoly::constant(arity, a_i.clone());
        for j in 0..i {
            let slope = a_i / &shape.intercepts[j];
            upper = upper.sub(&MultiPoly::var(arity, j).scale(&slope));
        }
        integrand = integrand.integrate(i, &upper);
    }

    let poly = integrand.into_univariate(t_var);
    debug_assert_eq!(poly.degree(), Some(n - c));
    debug_assert!(poly.leading().is_some_and(Signed::is_positive));
    poly
}

/// Evaluates the conjectured closed expression for the star configuration
/// shape: `a₁⋯a_c · (n−c)!/n! · Σ_j binom(n,j) (−1)^{n−c−j} h_{n−c−j}(a) tʲ`
/// with `h_k` the complete homogeneous symmetric polynomial. The expression
/// is unproven; `verify_star_formula` compares it against the integrator.
pub fn star_closed_formula(n: usize, c: usize, s: usize) -> Result<Poly> {
    let shape = star_shape(n, c, s)?;
    let a = shape.intercepts();
    let deg = n - c;
    let h = complete_homogeneous(a, deg);
    let prod_a: Rat = a.iter().product();
    let prefactor = prod_a * Rat::new(factorial(deg), factorial(n));
    let coeffs = (0..=deg)
        .map(|j| {
            let sign = if (deg - j) % 2 == 0 { 1 } else { -1 };
            &prefactor
                * Rat::from_integer(crate::exact::binomial(n, j) * sign)
                * &h[deg - j]
        })
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// `h_0..h_k` of the given values, by the recurrence
/// `h_k(a₁..a_i) = h_k(a₁..a_{i−1}) + a_i·h_{k−1}(a₁..a_i)`.
fn complete_homogeneous(values: &[Rat], k_max: usize) -> Vec<Rat> {
    let mut h = vec![Rat::zero(); k_max + 1];
    h[0] = Rat::one();
    for a in values {
        for k in 1..=k_max {
            let add = a * &h[k - 1];
            h[k] += add;
        }
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarFormulaRow {
    pub n: usize,
    pub c: usize,
    pub s: usize,
    pub equal: bool,
    pub closed: Poly,
    pub integrated: Poly,
}

/// Grid comparison of the conjectured closed formula against the
/// integrator, which is authoritative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarFormulaReport {
    pub n_max: usize,
    pub s_max: usize,
    pub rows: Vec<StarFormulaRow>,
}

impl StarFormulaReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &StarFormulaRow> {
        self.rows.iter().filter(|r| !r.equal)
    }

    /// True when every triple with `n − c ≤ 1` (including `n = c`) agrees.
    pub fn agrees_on_checked_cases(&self) -> bool {
        self.rows.iter().filter(|r| r.n - r.c <= 1).all(|r| r.equal)
    }
}

/// Compares `star_closed_formula` with `ahp_simplex(star_shape(..))` for
/// every `2 ≤ n ≤ n_max`, `1 ≤ c ≤ n`, `c ≤ s ≤ s_max`, in lexicographic
/// `(n, c, s)` order. Disagreements are recorded, never asserted away: the
/// closed formula is conjectural and only its `n − c ≤ 1` instances have
/// ever been checked by hand.
pub fn verify_star_formula(n_max: usize, s_max: usize) -> Result<StarFormulaReport> {
    if n_max < 2 {
        return Err(Error::InvalidShape("require n_max >= 2".into()));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for c in 1..=n {
            for s in c..=s_max {
                let closed = star_closed_formula(n, c, s)?;
                let integrated = ahp_simplex(&star_shape(n, c, s)?);
                rows.push(StarFormulaRow {
                    n,
                    c,
                    s,
                    equal: closed == integrated,
                    closed,
                    integrated,
                });
            }
        }
    }
    Ok(StarFormulaReport { n_max, s_max, rows })
}

/// A formal disjoint union of shapes with multiplicities, plus the
/// derivative order to apply on the bound side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationJson", into = "ConfigurationJson")]
pub struct Configuration {
    n: usize,
    components: Vec<(SimplexShape, u64)>,
    derivative_order: usize,
}

#[derive(Serialize, Deserialize)]
struct ConfigurationJson {
    n: usize,
    #[serde(default)]
    derivative_order: usize,
    components: Vec<ComponentJson>,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<SimplexShape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    star: Option<StarParams>,
    count: u64,
}

/// Shorthand for star configuration components: `{"star":{"n":4,"c":3,"s":5}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StarParams {
    pub n: usize,
    pub c: usize,
    pub s: usize,
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = Error;
    fn try_from(raw: ConfigurationJson) -> Result<Self> {
        let mut components = Vec::with_capacity(raw.components.len());
        for comp in raw.components {
            let shape = match (comp.shape, comp.star) {
                (Some(shape), None) => shape,
                (None, Some(star)) => star_shape(star.n, star.c, star.s)?,
                _ => {
                    return Err(Error::InvalidConfiguration(
                        "each component needs exactly one of `shape` or `star`".into(),
                    ))
                }
            };
            components.push((shape, comp.count));
        }
        Configuration::new(raw.n, components, raw.derivative_order)
    }
}

impl From<Configuration> for ConfigurationJson {
    fn from(config: Configuration) -> ConfigurationJson {
        ConfigurationJson {
            n: config.n,
            derivative_order: config.derivative_order,
            components: config
                .components
                .into_iter()
                .map(|(shape, count)| ComponentJson {
                    shape: Some(shape),
                    star: None,
                    count,
                })
                .collect(),
        }
    }
}

impl Configuration {
    pub fn new(
        n: usize,
        components: Vec<(SimplexShape, u64)>,
        derivative_order: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfiguration("ambient dimension must be >= 1".into()));
        }
        if derivative_order >= n {
            return Err(Error::InvalidConfiguration(format!(
                "derivative order {derivative_order} must be below the ambient dimension {n}"
            )));
        }
        for (shape, count) in &components {
            if shape.n() != n {
                return Err(Error::InvalidConfiguration(format!(
                    "component has ambient dimension {}, configuration has {n}",
                    shape.n()
                )));
            }
            if *count == 0 {
                return Err(Error::InvalidConfiguration("component count must be positive".into()));
            }
        }
        Ok(Configuration {
            n,
            components,
            derivative_order,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[(SimplexShape, u64)] {
        &self.components
    }

    pub fn derivative_order(&self) -> usize {
        self.derivative_order
    }

    pub fn with_derivative_order(&self, c: usize) -> Result<Self> {
        Configuration::new(self.n, self.components.clone(), c)
    }

    /// Largest intercept over all components: the asymptotic polynomial
    /// form of each component volume is valid from here on.
    pub fn max_intercept(&self) -> Rat {
        self.components
            .iter()
            .map(|(shape, _)| shape.max_intercept())
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

/// Asymptotic Hilbert polynomial of a disjoint union: the count-weighted
/// sum of the component polynomials.
pub fn ahp_configuration(config: &Configuration) -> Poly {
    let mut total = Poly::zero();
    for (shape, count) in config.components() {
        let term = ahp_simplex(shape).scale(&Rat::from_integer((*count).into()));
        total = &total + &term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn p(strs: &[&str]) -> Poly {
        Poly::from_coeff_strs(strs).unwrap()
    }

    fn cross() -> SimplexShape {
        SimplexShape::new(3, 2, vec![rat_int(1), rat_int(2)]).unwrap()
    }

    #[test]
    fn ahp_of_cross_is_t_minus_one() {
        assert_eq!(ahp_simplex(&cross()), p(&["-1", "1"]));
    }

    #[test]
    fn ahp_point_is_unit_simplex_area() {
        let point = SimplexShape::new(2, 2, vec![rat_int(1), rat_int(1)]).unwrap();
        assert_eq!(ahp_simplex(&point), p(&["1/2"]));
    }

    #[test]
    fn ahp_star_lines_in_p4() {
        let shape = star_shape(4, 3, 4).unwrap();
        assert_eq!(shape.intercepts(), &[rat(4, 3), rat(3, 2), rat_int(2)]);
        assert_eq!(ahp_simplex(&shape), p(&["-29/36", "2/3"]));
    }

    #[test]
    fn star_shape_examples() {
        assert_eq!(star_shape(5, 1, 7).unwrap().intercepts(), &[rat_int(7)]);
        assert_eq!(
            star_shape(3, 2, 5).unwrap().intercepts(),
            &[rat(5, 2), rat_int(4)]
        );
        assert_eq!(star_shape(3, 2, 1), Err(Error::DegenerateStar));
        assert!(matches!(star_shape(2, 3, 5), Err(Error::InvalidShape(_))));
    }

    #[test]
    fn closed_formula_examples() {
        assert_eq!(star_closed_formula(4, 3, 4).unwrap(), p(&["-29/36", "2/3"]));
        // n = c: only the constant term survives, ∏aᵢ/n!.
        let shape = star_shape(3, 3, 5).unwrap();
        let prod: Rat = shape.intercepts().iter().product();
        assert_eq!(
            star_closed_formula(3, 3, 5).unwrap(),
            Poly::constant(prod * rat(1, 6))
        );
        // Checked against the integrator, which is the oracle.
        assert_eq!(star_closed_formula(3, 2, 2).unwrap(), p(&["-1/3", "1/2"]));
        assert_eq!(
            star_closed_formula(3, 2, 2).unwrap(),
            ahp_simplex(&star_shape(3, 2, 2).unwrap())
        );
    }

    #[test]
    fn verify_grid_agrees_where_checked() {
        let report = verify_star_formula(4, 5).unwrap();
        assert!(report.agrees_on_checked_cases());
        // Lexicographic (n, c, s) order.
        let keys: Vec<_> = report.rows.iter().map(|r| (r.n, r.c, r.s)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn configuration_sums_components() {
        let five = Configuration::new(3, vec![(cross(), 5)], 0).unwrap();
        assert_eq!(ahp_configuration(&five), p(&["-5", "5"]));

        let empty = Configuration::new(3, vec![], 0).unwrap();
        assert_eq!(ahp_configuration(&empty), Poly::zero());

        let point = SimplexShape::new(2, 2, vec![rat_int(1), rat_int(1)]).unwrap();
        let many = Configuration::new(2, vec![(point, 7)], 0).unwrap();
        assert_eq!(ahp_configuration(&many), p(&["7/2"]));
    }

    #[test]
    fn configuration_validation() {
        assert!(Configuration::new(3, vec![(cross(), 0)], 0).is_err());
        assert!(Configuration::new(4, vec![(cross(), 1)], 0).is_err());
        assert!(Configuration::new(3, vec![(cross(), 1)], 3).is_err());
    }

    #[test]
    fn shape_json_schema() {
        let json = r#"{"n":3,"c":2,"intercepts":["1","2"]}"#;
        let shape: SimplexShape = serde_json::from_str(json).unwrap();
        assert_eq!(shape, cross());
        assert_eq!(serde_json::to_string(&shape).unwrap(), json);
    }

    #[test]
    fn configuration_json_star_shorthand() {
        let json = r#"{"n":4,"derivative_order":1,"components":[{"star":{"n":4,"c":3,"s":5},"count":1}]}"#;
        let config: Configuration = serde_json::from_str(json).unwrap();
        assert_eq!(config.components()[0].0, star_shape(4, 3, 5).unwrap());
        // Round-trips through the canonical (full-shape) form.
        let emitted = serde_json::to_string(&config).unwrap();
        let back: Configuration = serde_json::from_str(&emitted).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn validity_threshold_is_max_intercept() {
        let five = Configuration::new(3, vec![(cross(), 5)], 0).unwrap();
        assert_eq!(five.max_intercept(), rat_int(2));
        let empty = Configuration::new(3, vec![], 0).unwrap();
        assert_eq!(empty.max_intercept(), Rat::zero());
    }
}
