//! Special functions used throughout the crate: real and complex log-Gamma,
//! digamma, and associated Laguerre polynomials.
//!
//! Everything is evaluated in the log domain where overflow is a concern.
//! Log-Gamma shifts the argument upward with the recurrence
//! `ln Γ(z) = ln Γ(z + k) - Σ ln(z + j)` and then applies the Stirling
//! series, which is accurate to better than 1e-19 once `Re z >= 15`.

use num_complex::Complex64;

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Below this real part the argument is shifted before applying Stirling.
const STIRLING_MIN: f64 = 15.0;

/// `B_{2k} / (2k (2k - 1))` for k = 1..=8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `B_{2k} / (2k)` for k = 1..=7, used by the digamma asymptotic series.
const DIGAMMA_COEFFS: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ζ(k) for k = 2..=30.
#[allow(clippy::excessive_precision)]
const ZETA: [f64; 29] = [
    1.644_934_066_848_226_4,
    1.202_056_903_159_594_3,
    1.082_323_233_711_138_2,
    1.036_927_755_143_370_0,
    1.017_343_061_984_449_1,
    1.008_349_277_381_922_8,
    1.004_077_356_197_944_3,
    1.002_008_392_826_082_2,
    1.000_994_575_127_818_1,
    1.000_494_188_604_119_5,
    1.000_246_086_553_308_0,
    1.000_122_713_347_578_5,
    1.000_061_248_135_058_7,
    1.000_030_588_236_307_0,
    1.000_015_282_259_408_7,
    1.000_007_637_197_637_9,
    1.000_003_817_293_265_0,
    1.000_001_908_212_716_6,
    1.000_000_953_962_033_9,
    1.000_000_476_932_986_8,
    1.000_000_238_450_502_7,
    1.000_000_119_219_926_0,
    1.000_000_059_608_189_1,
    1.000_000_029_803_503_5,
    1.000_000_014_901_554_8,
    1.000_000_007_450_711_8,
    1.000_000_003_725_334_0,
    1.000_000_001_862_659_7,
    1.000_000_000_931_327_4,
];

/// `ln Γ(1 + eps)` by its Taylor series about 1, for `|eps| <= 0.25`.
///
/// Used near the zeros of ln Γ at 1 and 2 where the shifted Stirling form
/// would lose relative accuracy to cancellation.
fn ln_gamma_1p(eps: f64) -> f64 {
    let mut sum = 0.0;
    // highest order first so small terms accumulate before large ones
    for (i, zeta) in ZETA.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        let sign = if (i + 2) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * zeta * eps.powi(i as i32 + 2) / k;
    }
    sum - EULER_GAMMA * eps
}

fn stirling_tail(inv: f64) -> f64 {
    let w = inv * inv;
    let mut acc = 0.0;
    for c in STIRLING_COEFFS.iter().rev() {
        acc = acc * w + c;
    }
    acc * inv
}

/// Natural logarithm of the Gamma function for real `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if (x - 1.0).abs() <= 0.25 {
        return Ok(ln_gamma_1p(x - 1.0));
    }
    if (x - 2.0).abs() <= 0.25 {
        let eps = x - 2.0;
        return Ok(eps.ln_1p() + ln_gamma_1p(eps));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }

    let mut z = x;
    let mut product = 1.0;
    while z < STIRLING_MIN {
        product *= z;
        z += 1.0;
    }
    let stirling = (z - 0.5) * z.ln() - z + LN_SQRT_2PI + stirling_tail(1.0 / z);
    Ok(stirling - product.ln())
}

/// Digamma function ψ(x) = d/dx ln Γ(x) for real `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("digamma requires x > 0, got {x}")));
    }
    let mut z = x;
    let mut shift = 0.0;
    while z < 10.0 {
        shift += 1.0 / z;
        z += 1.0;
    }
    let w = 1.0 / (z * z);
    let mut acc = 0.0;
    for c in DIGAMMA_COEFFS.iter().rev() {
        acc = acc * w + c;
    }
    Ok(z.ln() - 0.5 / z - acc * w - shift)
}

/// Log-Gamma for complex `z` with `Re z > 0`.
///
/// The result is the analytic continuation of the real log-Gamma into the
/// right half-plane, so its imaginary part varies continuously along
/// vertical lines `z = a + ip` instead of wrapping at ±π. The phase is
/// accumulated as a sum of principal logarithms of the recurrence factors,
/// each of which has positive real part.
///
/// The evaluation only uses operations that commute with conjugation, so
/// `ln_gamma_complex(z.conj()) == ln_gamma_complex(z).conj()` holds exactly.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.re.is_nan() || z.im.is_nan() || z.re <= 0.0 {
        return Err(Error::Domain(format!(
            "ln_gamma_complex requires Re z > 0, got {z}"
        )));
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < STIRLING_MIN {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut acc = Complex64::new(0.0, 0.0);
    for c in STIRLING_COEFFS.iter().rev() {
        acc = acc * inv2 + c;
    }
    let stirling = (w - 0.5) * w.ln() - w + LN_SQRT_2PI + acc * inv;
    Ok(stirling - shift)
}

/// Associated Laguerre polynomial `L_n^s(xi)` by the three-term recurrence.
///
/// Preconditions (checked in debug builds): `s > 0`, `xi >= 0`.
pub fn laguerre_eval(n: usize, s: f64, xi: f64) -> f64 {
    debug_assert!(s > 0.0, "laguerre_eval: s must be positive");
    debug_assert!(xi >= 0.0, "laguerre_eval: xi must be non-negative");
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut curr = 1.0 + s - xi;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0 + s - xi) * curr - (kf - 1.0 + s) * prev) / kf;
        prev = curr;
        curr = next;
    }
    curr
}

/// Monomial coefficients of an associated Laguerre polynomial,
/// `L_n^s(xi) = Σ coeffs[k] xi^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreCoeffs {
    n: usize,
    s: f64,
    coeffs: Vec<f64>,
}

impl LaguerreCoeffs {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation, highest power first.
    pub fn eval(&self, xi: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * xi + c)
    }

    /// `Σ |c_k| xi^k`, an upper bound on `|L_n^s(xi)|` for `xi >= 0` that is
    /// increasing in `xi`.
    pub fn abs_bound(&self, xi: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * xi + c.abs())
    }
}

/// Monomial coefficients of `L_n^s`:
/// `c_k = (-1)^k Γ(n+s+1) / (Γ(s+k+1) (n-k)! k!)`, with every factorial
/// routed through [`ln_gamma`].
pub fn laguerre_coeffs(n: usize, s: f64) -> Result<LaguerreCoeffs> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!(
            "laguerre_coeffs requires s > 0, got {s}"
        )));
    }
    let top = ln_gamma(n as f64 + s + 1.0)?;
    let coeffs = (0..=n)
        .map(|k| {
            let log_mag = top
                - ln_gamma(s + k as f64 + 1.0)?
                - ln_gamma((n - k) as f64 + 1.0)?
                - ln_gamma(k as f64 + 1.0)?;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            Ok(sign * log_mag.exp())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LaguerreCoeffs { n, s, coeffs })
}
