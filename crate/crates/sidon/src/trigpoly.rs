//! Trigonometric polynomials with integer frequencies and the rigorous
//! computation of their supremum norm over the circle.
//!
//! A polynomial is stored as a map from frequency to complex coefficient.
//! The supremum norm is obtained from the critical points of the squared
//! modulus: `|f|^2` is expanded exactly at the coefficient level into a
//! real trigonometric polynomial, its derivative is bracketed on an
//! oversampled grid, and every sign change is refined to a root.  The
//! reported value therefore comes with its maximizers and a derivative
//! residual instead of being a bare grid maximum.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerances used by the sup-norm solver and the critical-point checkers.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Absolute tolerance on the reported supremum norm.
    pub norm_tol: f64,
    /// Target width of derivative root brackets, in radians.
    pub root_tol: f64,
    /// Gradient-norm threshold for joint critical-point solves.
    pub grad_tol: f64,
    /// Tolerance for the mod-pi congruence checks at critical points.
    pub cong_tol: f64,
    /// Modulus below which the polynomial counts as vanishing.
    pub zero_tol: f64,
    /// Permitted ascent when checking that an envelope decreases.
    pub mono_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            norm_tol: 1e-10,
            root_tol: 1e-13,
            grad_tol: 1e-10,
            cong_tol: 1e-7,
            zero_tol: 1e-8,
            mono_tol: 1e-9,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("norm_tol", self.norm_tol),
            ("root_tol", self.root_tol),
            ("grad_tol", self.grad_tol),
            ("cong_tol", self.cong_tol),
            ("zero_tol", self.zero_tol),
            ("mono_tol", self.mono_tol),
        ];
        for (name, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Reduce an angle to `[0, 2*pi)`.
pub fn wrap_angle(t: f64) -> f64 {
    let w = t.rem_euclid(TAU);
    // rem_euclid can return TAU itself for tiny negative inputs.
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Distance from `x` to the nearest integer multiple of `pi`.
pub fn dist_to_pi_multiple(x: f64) -> f64 {
    let q = x / std::f64::consts::PI;
    (q - q.round()).abs() * std::f64::consts::PI
}

#[derive(Clone, Copy, Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, v: f64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// A finite sum `f(t) = sum c_lambda e^{i lambda t}` over integer
/// frequencies, with zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrigPolynomial {
    terms: BTreeMap<i64, Complex64>,
}

impl TrigPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from `(frequency, coefficient)` pairs.  Zero coefficients are
    /// dropped; a repeated frequency is an error.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Complex64)>,
    {
        let mut map = BTreeMap::new();
        for (freq, coeff) in terms {
            if map.insert(freq, coeff).is_some() {
                return Err(Error::DuplicateFrequency(freq));
            }
        }
        map.retain(|_, c| c.re != 0.0 || c.im != 0.0);
        Ok(Self { terms: map })
    }

    /// Insert or overwrite one term; a zero coefficient removes it.
    pub fn set(&mut self, freq: i64, coeff: Complex64) {
        if coeff.re == 0.0 && coeff.im == 0.0 {
            self.terms.remove(&freq);
        } else {
            self.terms.insert(freq, coeff);
        }
    }

    pub fn coefficient(&self, freq: i64) -> Complex64 {
        self.terms.get(&freq).copied().unwrap_or(Complex64::ZERO)
    }

    /// Terms in ascending frequency order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.terms.iter().map(|(&f, &c)| (f, c))
    }

    pub fn frequencies(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluate at `t` by compensated summation in ascending frequency order.
    pub fn evaluate(&self, t: f64) -> Complex64 {
        let mut re = KahanSum::default();
        let mut im = KahanSum::default();
        for (&freq, &c) in &self.terms {
            let (sin, cos) = (freq as f64 * t).sin_cos();
            re.add(c.re * cos - c.im * sin);
            im.add(c.re * sin + c.im * cos);
        }
        Complex64::new(re.sum, im.sum)
    }

    /// Sum of coefficient moduli; zero for the empty polynomial.
    pub fn l1_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    /// Square root of the coefficient power, `sqrt(sum |c|^2)`.
    pub fn l2_norm(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Expand `|f(t)|^2` exactly into a real trigonometric polynomial by
    /// coefficient-level convolution.
    pub fn modulus_squared(&self) -> Result<RealTrigPolynomial> {
        if self.terms.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        let terms: Vec<(i64, Complex64)> = self.terms().collect();
        let min = terms.first().expect("nonempty").0;
        let max = terms.last().expect("nonempty").0;
        let span = (max - min) as usize;
        // g[m] = sum over pairs with frequency difference m >= 0 of c * conj(c').
        let mut g = vec![Complex64::ZERO; span + 1];
        for (i, &(fi, ci)) in terms.iter().enumerate() {
            for &(fj, cj) in &terms[..=i] {
                g[(fi - fj) as usize] += ci * cj.conj();
            }
        }
        let cos_coeffs: Vec<f64> = g[1..].iter().map(|z| 2.0 * z.re).collect();
        let sin_coeffs: Vec<f64> = g[1..].iter().map(|z| -2.0 * z.im).collect();
        Ok(RealTrigPolynomial::new(g[0].re, cos_coeffs, sin_coeffs))
    }

    /// Maximum of `|f(t)|` over the circle, certified through the critical
    /// points of `|f|^2`.
    ///
    /// The squared modulus is differentiated coefficient-wise, every sign
    /// change of the derivative on a grid of `max(1024, 32 * degree)` points
    /// is refined to a root, and the value is the maximum over refined roots
    /// and grid points.  If too few roots are found while the grid dominates
    /// them by more than `norm_tol`, the grid is refined fourfold, at most
    /// three times, before giving up.
    pub fn sup_norm(&self, cfg: &SolverConfig) -> Result<SupNormResult> {
        cfg.validate()?;
        let p = self.modulus_squared()?;
        let degree = p.degree();
        if degree == 0 {
            return Ok(SupNormResult {
                value: p.constant().max(0.0).sqrt(),
                maximizers: vec![0.0],
                critical_points: vec![0.0],
                residual: 0.0,
            });
        }
        let dp = p.derivative();
        let ddp = dp.derivative();
        let deriv_scale = dp.coefficient_l1().max(1.0);

        let base = 1024.max(32 * degree);
        let mut last = (0.0_f64, 0.0_f64);
        for pass in 0..4 {
            let n = base << (2 * pass);
            let located = locate_critical_points(&p, &dp, &ddp, n, cfg)?;
            last = (located.grid_max, located.root_max);
            let grid_value = located.grid_max.max(0.0).sqrt();
            let root_value = located.root_max.max(0.0).sqrt();
            if located.roots.len() >= 2 * degree || grid_value <= root_value + cfg.norm_tol {
                let value = grid_value.max(root_value);
                let threshold = (value - cfg.norm_tol).max(0.0).powi(2);
                let maximizers = located
                    .roots
                    .iter()
                    .copied()
                    .filter(|&t| p.evaluate(t) >= threshold)
                    .collect();
                let residual = located
                    .roots
                    .iter()
                    .map(|&t| dp.evaluate(t).abs())
                    .fold(0.0, f64::max)
                    / deriv_scale;
                return Ok(SupNormResult {
                    value,
                    maximizers,
                    critical_points: located.roots,
                    residual,
                });
            }
        }
        Err(Error::SupNormStalled {
            grid_max: last.0.max(0.0).sqrt(),
            root_max: last.1.max(0.0).sqrt(),
            passes: 4,
        })
    }
}

struct LocatedRoots {
    roots: Vec<f64>,
    root_max: f64,
    grid_max: f64,
}

fn locate_critical_points(
    p: &RealTrigPolynomial,
    dp: &RealTrigPolynomial,
    ddp: &RealTrigPolynomial,
    n: usize,
    cfg: &SolverConfig,
) -> Result<LocatedRoots> {
    let step = TAU / n as f64;
    let mut grid_max = f64::NEG_INFINITY;
    let mut deriv = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let t = j as f64 * step;
        deriv.push(dp.evaluate(t));
        grid_max = grid_max.max(p.evaluate(t));
    }

    let mut roots: Vec<f64> = Vec::new();
    for j in 0..n {
        let (ga, gb) = (deriv[j], deriv[j + 1]);
        let a = j as f64 * step;
        let b = (j + 1) as f64 * step;
        if ga == 0.0 {
            roots.push(a);
        } else if ga * gb < 0.0 {
            roots.push(refine_bracket(dp, ddp, a, b, ga, gb, cfg)?);
        }
    }

    for r in &mut roots {
        *r = wrap_angle(*r);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    if roots.len() > 1 {
        // First and last may be the same root across the wrap seam.
        if (roots[roots.len() - 1] - TAU - roots[0]).abs() < 1e-9 {
            roots.pop();
        }
    }

    let root_max = roots
        .iter()
        .map(|&t| p.evaluate(t))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(LocatedRoots {
        roots,
        root_max,
        grid_max,
    })
}

/// Bisection/secant hybrid on a sign-change bracket of `dp`, followed by a
/// short Newton polish to push the derivative residual to rounding level.
fn refine_bracket(
    dp: &RealTrigPolynomial,
    ddp: &RealTrigPolynomial,
    mut a: f64,
    mut b: f64,
    mut ga: f64,
    mut gb: f64,
    cfg: &SolverConfig,
) -> Result<f64> {
    let width0 = b - a;
    let mut best = if ga.abs() <= gb.abs() { a } else { b };
    for iter in 0..200 {
        if b - a <= cfg.root_tol {
            break;
        }
        if iter == 199 {
            return Err(Error::BracketStalled {
                lo: a,
                hi: b,
                width: b - a,
            });
        }
        let mid = 0.5 * (a + b);
        // Secant proposal once the bracket is small enough for it to be
        // reliable; plain bisection otherwise.
        let mut x = if b - a < 1e-4 && gb != ga {
            (a * gb - b * ga) / (gb - ga)
        } else {
            mid
        };
        if !x.is_finite() || x <= a || x >= b {
            x = mid;
        }
        let gx = dp.evaluate(x);
        if gx == 0.0 {
            best = x;
            a = x;
            b = x;
            break;
        }
        if ga * gx < 0.0 {
            b = x;
            gb = gx;
        } else {
            a = x;
            ga = gx;
        }
        best = if ga.abs() <= gb.abs() { a } else { b };
    }

    // Newton polish: accept steps only while the residual decreases.
    let mut x = best;
    let mut gx = dp.evaluate(x);
    for _ in 0..4 {
        if gx == 0.0 {
            break;
        }
        let h = ddp.evaluate(x);
        if h == 0.0 {
            break;
        }
        let x_next = x - gx / h;
        if !x_next.is_finite() || (x_next - x).abs() > width0 {
            break;
        }
        let g_next = dp.evaluate(x_next);
        if g_next.abs() < gx.abs() {
            x = x_next;
            gx = g_next;
        } else {
            break;
        }
    }
    Ok(x)
}

impl fmt::Display for TrigPolynomial {
    /// Text format `freq:re,im;...`, e.g. `0:1,0;1:0,2;2:1,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (freq, c) in self.terms() {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "{}:{},{}", freq, c.re, c.im)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for TrigPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        for segment in compact.split(';').filter(|seg| !seg.is_empty()) {
            let (freq_str, coeff_str) = segment
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("term `{segment}` lacks `freq:re,im`")))?;
            let freq: i64 = freq_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad frequency `{freq_str}`")))?;
            let (re_str, im_str) = coeff_str
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("coefficient `{coeff_str}` lacks `re,im`")))?;
            let re: f64 = re_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad real part `{re_str}`")))?;
            let im: f64 = im_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad imaginary part `{im_str}`")))?;
            terms.push((freq, Complex64::new(re, im)));
        }
        let mut seen = BTreeMap::new();
        for &(freq, _) in &terms {
            if *seen.entry(freq).and_modify(|n| *n += 1).or_insert(1u32) > 1 {
                return Err(Error::DuplicateFrequency(freq));
            }
        }
        Self::from_terms(terms)
    }
}

/// A real-valued trigonometric polynomial
/// `c + sum_m a_m cos(m t) + b_m sin(m t)`, stored with trailing zero
/// harmonics trimmed so that `degree` is the largest live `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealTrigPolynomial {
    constant: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
}

impl RealTrigPolynomial {
    /// `cos_coeffs[m-1]` is the coefficient of `cos(m t)`, likewise for sine.
    pub fn new(constant: f64, mut cos_coeffs: Vec<f64>, mut sin_coeffs: Vec<f64>) -> Self {
        let len = cos_coeffs.len().max(sin_coeffs.len());
        cos_coeffs.resize(len, 0.0);
        sin_coeffs.resize(len, 0.0);
        while let (Some(&a), Some(&b)) = (cos_coeffs.last(), sin_coeffs.last()) {
            if a == 0.0 && b == 0.0 {
                cos_coeffs.pop();
                sin_coeffs.pop();
            } else {
                break;
            }
        }
        Self {
            constant,
            cos_coeffs,
            sin_coeffs,
        }
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    /// Coefficient of `cos(m t)` for `m >= 1`.
    pub fn cos_coefficient(&self, m: usize) -> f64 {
        if m >= 1 {
            self.cos_coeffs.get(m - 1).copied().unwrap_or(0.0)
        } else {
            0.0
        }
    }

    /// Coefficient of `sin(m t)` for `m >= 1`.
    pub fn sin_coefficient(&self, m: usize) -> f64 {
        if m >= 1 {
            self.sin_coeffs.get(m - 1).copied().unwrap_or(0.0)
        } else {
            0.0
        }
    }

    pub fn degree(&self) -> usize {
        self.cos_coeffs.len()
    }

    /// Evaluate via the angle-addition recurrence; one `sin_cos` per call.
    pub fn evaluate(&self, t: f64) -> f64 {
        let (s1, c1) = t.sin_cos();
        let mut ck = c1;
        let mut sk = s1;
        let mut acc = self.constant;
        for m in 0..self.cos_coeffs.len() {
            acc += self.cos_coeffs[m] * ck + self.sin_coeffs[m] * sk;
            let c_next = ck * c1 - sk * s1;
            let s_next = sk * c1 + ck * s1;
            ck = c_next;
            sk = s_next;
        }
        acc
    }

    /// Coefficient-wise derivative.
    pub fn derivative(&self) -> Self {
        let cos_coeffs: Vec<f64> = self
            .sin_coeffs
            .iter()
            .enumerate()
            .map(|(i, &b)| (i + 1) as f64 * b)
            .collect();
        let sin_coeffs: Vec<f64> = self
            .cos_coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| -((i + 1) as f64) * a)
            .collect();
        Self::new(0.0, cos_coeffs, sin_coeffs)
    }

    /// `|constant| + sum |a_m| + |b_m|`; an upper bound for `|P|` on the circle.
    pub fn coefficient_l1(&self) -> f64 {
        self.constant.abs()
            + self
                .cos_coeffs
                .iter()
                .chain(self.sin_coeffs.iter())
                .map(|v| v.abs())
                .sum::<f64>()
    }
}

/// Certified supremum norm: the value together with the critical points of
/// `|f|^2` that witness it.
#[derive(Debug, Clone)]
pub struct SupNormResult {
    /// `max_t |f(t)|`.
    pub value: f64,
    /// Critical points within `norm_tol` of the maximum, ascending.
    pub maximizers: Vec<f64>,
    /// All located critical points of `|f|^2` in `[0, 2*pi)`, ascending.
    pub critical_points: Vec<f64>,
    /// Largest `|d/dt |f|^2|` over the critical points, normalized by the
    /// derivative's coefficient scale.
    pub residual: f64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, (f64, f64))]) -> TrigPolynomial {
        TrigPolynomial::from_terms(
            terms
                .iter()
                .map(|&(f, (re, im))| (f, Complex64::new(re, im))),
        )
        .unwrap()
    }

    fn newman() -> TrigPolynomial {
        poly(&[(0, (1.0, 0.0)), (1, (0.0, 2.0)), (2, (1.0, 0.0))])
    }

    #[test]
    fn evaluate_constant() {
        let p = poly(&[(0, (1.0, 0.0))]);
        let v = p.evaluate(1.0);
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn evaluate_alignment_at_zero() {
        let p = poly(&[(0, (1.0, 0.0)), (1, (1.0, 0.0))]);
        assert_eq!(p.evaluate(0.0), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn evaluate_newman_at_zero() {
        let v = newman().evaluate(0.0);
        assert!((v - Complex64::new(2.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn modulus_squared_two_terms() {
        let p = poly(&[(0, (1.0, 0.0)), (1, (1.0, 0.0))]).modulus_squared().unwrap();
        assert_eq!(p.constant(), 2.0);
        assert_eq!(p.cos_coefficient(1), 2.0);
        assert_eq!(p.sin_coefficient(1), 0.0);
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn modulus_squared_newman_cross_terms_cancel() {
        let p = newman().modulus_squared().unwrap();
        assert_eq!(p.constant(), 6.0);
        assert_eq!(p.cos_coefficient(1), 0.0);
        assert_eq!(p.sin_coefficient(1), 0.0);
        assert_eq!(p.cos_coefficient(2), 2.0);
        assert_eq!(p.sin_coefficient(2), 0.0);
    }

    #[test]
    fn modulus_squared_single_term() {
        let p = poly(&[(0, (1.5, 0.0))]).modulus_squared().unwrap();
        assert_eq!(p.constant(), 2.25);
        assert_eq!(p.degree(), 0);
    }

    #[test]
    fn modulus_squared_empty_is_error() {
        let p = TrigPolynomial::new();
        assert_eq!(p.modulus_squared(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn sup_norm_newman_is_two_sqrt_two() {
        let cfg = SolverConfig::default();
        let r = newman().sup_norm(&cfg).unwrap();
        assert!((r.value - 2.0 * 2.0_f64.sqrt()).abs() < 1e-10);
        assert!(r.residual <= cfg.root_tol);
        for &t in &r.maximizers {
            assert!(r.critical_points.contains(&t));
        }
    }

    #[test]
    fn sup_norm_single_term_is_modulus() {
        let cfg = SolverConfig::default();
        let r = poly(&[(0, (3.0, -4.0))]).sup_norm(&cfg).unwrap();
        assert_eq!(r.value, 5.0);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn sup_norm_theorem_triple_zero_one_three() {
        // Extremal polynomial for {0,1,3}; value 6 cos(pi/6) = 3 sqrt(3).
        let cfg = SolverConfig::default();
        let p = poly(&[(0, (2.0, 0.0)), (1, (3.0, 0.0)), (3, (-1.0, 0.0))]);
        let r = p.sup_norm(&cfg).unwrap();
        assert!((r.value - 3.0 * 3.0_f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn sup_norm_empty_is_error() {
        let cfg = SolverConfig::default();
        assert_eq!(TrigPolynomial::new().sup_norm(&cfg), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn sup_norm_value_matches_critical_point_maximum() {
        let cfg = SolverConfig::default();
        let p = poly(&[(-2, (0.3, 0.1)), (0, (1.0, 0.0)), (1, (0.0, 1.0)), (3, (0.5, -0.2))]);
        let r = p.sup_norm(&cfg).unwrap();
        let best = r
            .critical_points
            .iter()
            .map(|&t| p.evaluate(t).norm())
            .fold(0.0, f64::max);
        assert!((r.value - best).abs() <= 2.0 * cfg.norm_tol * (1.0 + r.value));
    }

    #[test]
    fn l1_norm_examples() {
        assert_eq!(newman().l1_norm(), 4.0);
        assert_eq!(TrigPolynomial::new().l1_norm(), 0.0);
        assert_eq!(poly(&[(5, (3.0, -4.0))]).l1_norm(), 5.0);
    }

    #[test]
    fn maximizers_report_ties_sorted() {
        // |1 + e^{2it}| has equal maxima at t = 0 and t = pi.
        let cfg = SolverConfig::default();
        let p = poly(&[(0, (1.0, 0.0)), (2, (1.0, 0.0))]);
        let r = p.sup_norm(&cfg).unwrap();
        assert_eq!(r.maximizers.len(), 2);
        assert!(r.maximizers[0] < r.maximizers[1]);
        assert!(r.maximizers[0].abs() < 1e-9);
        assert!((r.maximizers[1] - std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn parse_round_trip() {
        let p: TrigPolynomial = "0:1,0; 1:0,2 ;2:1,0".parse().unwrap();
        assert_eq!(p, newman());
        let q: TrigPolynomial = p.to_string().parse().unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn parse_rejects_duplicate_frequency() {
        let r = "0:1,0;0:2,0".parse::<TrigPolynomial>();
        assert_eq!(r, Err(Error::DuplicateFrequency(0)));
    }

    #[test]
    fn parse_rejects_malformed_terms() {
        assert!(matches!("0:1".parse::<TrigPolynomial>(), Err(Error::Parse(_))));
        assert!(matches!("x:1,0".parse::<TrigPolynomial>(), Err(Error::Parse(_))));
        assert!(matches!("0:a,b".parse::<TrigPolynomial>(), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_negative_frequencies_and_whitespace() {
        let p: TrigPolynomial = " -3 : 0.5 , -1 ; 2 : 1 , 0 ".parse().unwrap();
        assert_eq!(p.coefficient(-3), Complex64::new(0.5, -1.0));
        assert_eq!(p.coefficient(2), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn real_poly_derivative_and_eval() {
        // P = 1 + 2 cos t + 3 sin 2t, P' = -2 sin t + 6 cos 2t.
        let p = RealTrigPolynomial::new(1.0, vec![2.0, 0.0], vec![0.0, 3.0]);
        let dp = p.derivative();
        let t = 0.7;
        let expect = -2.0 * t.sin() + 6.0 * (2.0 * t).cos();
        assert!((dp.evaluate(t) - expect).abs() < 1e-14);
        let expect_p = 1.0 + 2.0 * t.cos() + 3.0 * (2.0 * t).sin();
        assert!((p.evaluate(t) - expect_p).abs() < 1e-14);
    }

    #[test]
    fn wrap_angle_reduces_to_unit_interval() {
        assert!((wrap_angle(-std::f64::consts::PI / 3.0) - (TAU - std::f64::consts::PI / 3.0)).abs() < 1e-15);
        assert_eq!(wrap_angle(0.0), 0.0);
        assert!(wrap_angle(TAU) < TAU);
    }
}
