//! Momentum-space amplitudes `φ(p) = (2πħ)^{-1/2} ∫ ψ(x) e^{-ipx/ħ} dx`.
//!
//! Substituting `ξ = 2λe^{-αx}` turns the transform of each monomial
//! `ξ^a e^{-ξ/2}` of the Laguerre expansion into a Gamma function:
//!
//! ```text
//! ∫ e^{-iqx} ξ^a e^{-ξ/2} dx = (2λ)^{-iq/α} 2^{a+iq/α} Γ(a + iq/α) / α,   q = p/ħ
//! ```
//!
//! so `φ` is a finite sum of complex Gamma values. [`phi_quadrature`]
//! evaluates the same transform by brute-force oscillatory quadrature and
//! serves as an independent check.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::morse::{Eigenstate, MorseParams};
use crate::quad::{capped_breaks, integrate_panels, QuadConfig};
use crate::specfun::{laguerre_coeffs, ln_gamma_complex};

/// Position support threshold for the brute-force transform, relative to the
/// density peak. `|ψ|` is then below ~1e-15 of its maximum at the cut.
const TRANSFORM_SUPPORT_EPS: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumAmplitude {
    pub p: f64,
    pub value: Complex64,
}

impl MomentumAmplitude {
    pub fn density(&self) -> f64 {
        self.value.norm_sqr()
    }
}

#[derive(Debug, Clone)]
struct Term {
    log_abs_coeff: f64,
    sign: f64,
    exponent: f64,
}

/// Closed-form momentum wavefunction of one eigenstate, with the Laguerre
/// coefficients and constant prefactors precomputed.
#[derive(Debug, Clone)]
pub struct MomentumWavefunction {
    alpha: f64,
    hbar: f64,
    log_prefactor: f64,
    log_two_lambda: f64,
    terms: Vec<Term>,
}

impl MomentumWavefunction {
    pub fn new(params: &MorseParams, state: &Eigenstate) -> Result<Self> {
        let coeffs = laguerre_coeffs(state.n(), state.s())?;
        let terms = coeffs
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| Term {
                log_abs_coeff: c.abs().ln(),
                sign: c.signum(),
                exponent: 0.5 * state.s() + k as f64,
            })
            .collect();
        let alpha = params.alpha();
        let hbar = params.hbar();
        Ok(MomentumWavefunction {
            alpha,
            hbar,
            log_prefactor: state.log_norm() - alpha.ln() - 0.5 * (2.0 * PI * hbar).ln(),
            log_two_lambda: (2.0 * params.lambda()).ln(),
            terms,
        })
    }

    /// `φ(p)`. Conjugation-symmetric by construction: `phi(-p) == phi(p).conj()`.
    pub fn phi(&self, p: f64) -> Complex64 {
        let t = p / (self.hbar * self.alpha);
        let logs: Vec<Complex64> = self
            .terms
            .iter()
            .map(|term| {
                let z = Complex64::new(term.exponent, t);
                let lg = ln_gamma_complex(z).expect("exponent is positive for a bound state");
                z * std::f64::consts::LN_2 + lg + term.log_abs_coeff
            })
            .collect();
        // factor out the largest modulus before exponentiating
        let pivot = logs.iter().map(|l| l.re).fold(f64::NEG_INFINITY, f64::max);
        let sum: Complex64 = logs
            .iter()
            .zip(&self.terms)
            .map(|(l, term)| (l - pivot).exp() * term.sign)
            .sum();
        let phase = Complex64::new(pivot + self.log_prefactor, -t * self.log_two_lambda);
        phase.exp() * sum
    }

    pub fn rho(&self, p: f64) -> f64 {
        self.phi(p).norm_sqr()
    }

    pub fn amplitude(&self, p: f64) -> MomentumAmplitude {
        MomentumAmplitude {
            p,
            value: self.phi(p),
        }
    }
}

/// Closed-form `φ(p)` for one point. Prefer [`MomentumWavefunction`] when
/// evaluating many momenta of the same state.
pub fn phi_analytic(params: &MorseParams, state: &Eigenstate, p: f64) -> Result<Complex64> {
    Ok(MomentumWavefunction::new(params, state)?.phi(p))
}

/// Momentum density `|φ(p)|²`.
pub fn rho_p(params: &MorseParams, state: &Eigenstate, p: f64) -> Result<f64> {
    Ok(phi_analytic(params, state, p)?.norm_sqr())
}

/// `φ(p)` by direct quadrature of `ψ(x) e^{-ipx/ħ}` over the position
/// support. Panels start no wider than `πħ / (2|p| + 1)`.
pub fn phi_quadrature(
    params: &MorseParams,
    state: &Eigenstate,
    p: f64,
    cfg: &QuadConfig,
) -> Result<Complex64> {
    let (lo, hi) = params.support(state, TRANSFORM_SUPPORT_EPS)?;
    let hbar = params.hbar();
    let q = p / hbar;
    let breaks = capped_breaks(lo, hi, PI * hbar / (2.0 * p.abs() + 1.0));
    let re = integrate_panels(|x| params.psi(state, x) * (q * x).cos(), &breaks, cfg)?;
    let im = integrate_panels(|x| -params.psi(state, x) * (q * x).sin(), &breaks, cfg)?;
    let scale = 1.0 / (2.0 * PI * hbar).sqrt();
    Ok(Complex64::new(re.value, im.value) * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(lambda: f64, n: usize) -> (MorseParams, Eigenstate) {
        let m = MorseParams::new(lambda).unwrap();
        let st = m.eigenstate(n).unwrap();
        (m, st)
    }

    #[test]
    fn ground_state_of_shallowest_well() {
        // φ(p) = Γ(1/2 + ip) / √π up to a phase
        let (m, st) = state(1.0, 0);
        let phi0 = phi_analytic(&m, &st, 0.0).unwrap();
        assert!((phi0 - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let r1 = rho_p(&m, &st, 1.0).unwrap();
        assert!((r1 - 1.0 / PI.cosh()).abs() < 1e-14);
        assert!((r1 - 0.0862).abs() < 1e-4);
        for p in [-3.0, -0.4, 0.7, 2.2] {
            let r = rho_p(&m, &st, p).unwrap();
            assert!((r - 1.0 / (PI * p).cosh()).abs() < 1e-14);
        }
    }

    #[test]
    fn first_excited_of_lambda_two_has_sech_shape() {
        // |φ|² = (1/4 + p²) sech(πp) / (1/4) · ρ(0)
        let (m, st) = state(2.0, 1);
        let wf = MomentumWavefunction::new(&m, &st).unwrap();
        let r0 = wf.rho(0.0);
        for p in [0.3, 1.0, 2.5, -1.7] {
            let want = r0 * (0.25 + p * p) / 0.25 / (PI * p).cosh();
            assert!((wf.rho(p) - want).abs() < 1e-13 * r0, "p={p}");
        }
        // and the ground state of the same well has the identical density
        let (_, g) = state(2.0, 0);
        let wg = MomentumWavefunction::new(&m, &g).unwrap();
        for p in [0.0, 0.8, 3.0] {
            assert!((wg.rho(p) - wf.rho(p)).abs() < 1e-13);
        }
    }

    #[test]
    fn exact_parity() {
        for (lambda, n) in [(1.0, 0), (4.0, 3), (7.0, 3), (6.5, 5)] {
            let (m, st) = state(lambda, n);
            let wf = MomentumWavefunction::new(&m, &st).unwrap();
            for i in 0..200 {
                let p = 0.07 * i as f64;
                let a = wf.phi(p);
                let b = wf.phi(-p);
                assert!((a - b.conj()).norm() <= 1e-13 * a.norm().max(1e-300));
                assert!((wf.rho(p) - wf.rho(-p)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn quadrature_agrees_with_closed_form() {
        let cfg = QuadConfig::default();
        let (m, st) = state(1.0, 0);
        let q = phi_quadrature(&m, &st, 0.0, &cfg).unwrap();
        assert!((q - Complex64::new(1.0, 0.0)).norm() < 1e-8);

        let (m, st) = state(3.0, 2);
        let q = phi_quadrature(&m, &st, 0.7, &cfg).unwrap();
        let a = phi_analytic(&m, &st, 0.7).unwrap();
        assert!((q - a).norm() < 1e-8, "{q} vs {a}");

        let qm = phi_quadrature(&m, &st, -0.7, &cfg).unwrap();
        assert!((qm - q.conj()).norm() < 1e-12);
    }

    #[test]
    fn quadrature_respects_nondefault_units() {
        let cfg = QuadConfig::default();
        let m = MorseParams::with_units(2.5, 1.7, 0.6, 2.0).unwrap();
        let st = m.eigenstate(1).unwrap();
        for p in [0.0, 0.4, -1.3] {
            let q = phi_quadrature(&m, &st, p, &cfg).unwrap();
            let a = phi_analytic(&m, &st, p).unwrap();
            assert!((q - a).norm() < 1e-8, "p={p}: {q} vs {a}");
        }
    }

    #[test]
    fn gamma_modulus_tail() {
        // ρ(p) ~ C |p|^{2λ-2} e^{-π|p|} in units ħ = α = 1
        for (lambda, n) in [(1.0, 0), (3.0, 1), (7.0, 3)] {
            let (m, st) = state(lambda, n);
            let wf = MomentumWavefunction::new(&m, &st).unwrap();
            let scaled = |p: f64| wf.rho(p).ln() + PI * p - (2.0 * lambda - 2.0) * p.ln();
            let drift = (scaled(60.0) - scaled(120.0)).abs();
            assert!(drift < 0.05, "λ={lambda} n={n}: {drift}");
            // beyond the polynomial prefactor the decay rate is at least 0.9π
            for p in [40.0, 60.0, 80.0] {
                assert!(wf.rho(p + 10.0).ln() - wf.rho(p).ln() < -0.9 * PI * 10.0);
            }
        }
    }
}
