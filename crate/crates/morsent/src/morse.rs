//! The one-dimensional Morse well `V(x) = D e^{-αx}(e^{-αx} - 2)` and its
//! bound eigenstates.
//!
//! With `ξ = 2λ e^{-αx}` the n-th bound state is
//! `ψ_n(x) = N e^{-ξ/2} ξ^{s/2} L_n^s(ξ)` where `s = 2λ - 2n - 1 > 0` and
//! `N² = α s n! / Γ(2λ - n)`. The default unit system is `ħ = α = 1`,
//! `μ = 1/2`, in which `D = λ²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::find_support;
use crate::specfun::{laguerre_coeffs, laguerre_eval, ln_gamma};

/// Envelope logs below this underflow `exp`.
const LOG_UNDERFLOW: f64 = -745.0;

/// Physical parameters of a Morse well.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MorseParams {
    lambda: f64,
    alpha: f64,
    hbar: f64,
    mu: f64,
}

impl MorseParams {
    /// Well of depth parameter `lambda` in the default units.
    pub fn new(lambda: f64) -> Result<Self> {
        Self::with_units(lambda, 1.0, 1.0, 0.5)
    }

    pub fn with_units(lambda: f64, alpha: f64, hbar: f64, mu: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !(ok(lambda) && ok(alpha) && ok(hbar) && ok(mu)) {
            return Err(Error::InvalidParams(format!(
                "lambda, alpha, hbar and mu must be finite and positive \
                 (got {lambda}, {alpha}, {hbar}, {mu})"
            )));
        }
        Ok(MorseParams {
            lambda,
            alpha,
            hbar,
            mu,
        })
    }

    /// Well built from its dissociation energy: `λ = √(2μD) / (αħ)`.
    pub fn from_physical(dissociation_energy: f64, alpha: f64, hbar: f64, mu: f64) -> Result<Self> {
        if !(dissociation_energy.is_finite() && dissociation_energy > 0.0) {
            return Err(Error::InvalidParams(format!(
                "dissociation energy must be positive, got {dissociation_energy}"
            )));
        }
        let lambda = (2.0 * mu * dissociation_energy).sqrt() / (alpha * hbar);
        Self::with_units(lambda, alpha, hbar, mu)
    }

    /// Same well with a different range parameter.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::with_units(self.lambda, alpha, self.hbar, self.mu)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `D = λ²α²ħ² / 2μ`.
    pub fn dissociation_energy(&self) -> f64 {
        (self.lambda * self.alpha * self.hbar).powi(2) / (2.0 * self.mu)
    }

    /// `ω = ħα² / 2μ`. Informational only; energies come from `s`.
    pub fn omega(&self) -> f64 {
        self.hbar * self.alpha * self.alpha / (2.0 * self.mu)
    }

    pub fn potential(&self, x: f64) -> f64 {
        let ax = self.alpha * x;
        if ax < -700.0 {
            return f64::INFINITY;
        }
        let e = (-ax).exp();
        self.dissociation_energy() * e * (e - 2.0)
    }

    /// Number of `n >= 0` with `2λ - 2n - 1 > 0`.
    pub fn bound_state_count(&self) -> usize {
        if !(self.lambda > 0.5) {
            return 0;
        }
        let mut count = (self.lambda - 0.5).ceil() as usize;
        while count > 0 && !(self.exponent(count - 1) > 0.0) {
            count -= 1;
        }
        while self.exponent(count) > 0.0 {
            count += 1;
        }
        count
    }

    fn exponent(&self, n: usize) -> f64 {
        2.0 * self.lambda - 2.0 * n as f64 - 1.0
    }

    pub fn eigenstate(&self, n: usize) -> Result<Eigenstate> {
        let count = self.bound_state_count();
        if n >= count {
            return Err(Error::NoSuchState { n, count });
        }
        let s = self.exponent(n);
        let log_norm = 0.5
            * (self.alpha.ln() + s.ln() + ln_gamma(n as f64 + 1.0)?
                - ln_gamma(2.0 * self.lambda - n as f64)?);
        let energy = -(self.alpha * self.hbar).powi(2) / (8.0 * self.mu) * s * s;
        Ok(Eigenstate {
            n,
            s,
            log_norm,
            energy,
        })
    }

    /// All bound states, lowest first.
    pub fn eigenstates(&self) -> Result<Vec<Eigenstate>> {
        (0..self.bound_state_count())
            .map(|n| self.eigenstate(n))
            .collect()
    }

    /// `ξ = 2λ e^{-αx}`.
    pub fn xi(&self, x: f64) -> f64 {
        2.0 * self.lambda * (-self.alpha * x).exp()
    }

    /// Inverse of [`MorseParams::xi`].
    pub fn x_of_xi(&self, xi: f64) -> f64 {
        (2.0 * self.lambda / xi).ln() / self.alpha
    }

    /// `ln(N e^{-ξ/2} ξ^{s/2})`, or `None` where the envelope vanishes.
    pub(crate) fn log_envelope(&self, state: &Eigenstate, xi: f64) -> Option<f64> {
        if !(xi > 0.0) || !xi.is_finite() {
            return None;
        }
        let log = state.log_norm - 0.5 * xi + 0.5 * state.s * xi.ln();
        (log >= LOG_UNDERFLOW).then_some(log)
    }

    /// Real position-space amplitude `ψ_n(x)`.
    pub fn psi(&self, state: &Eigenstate, x: f64) -> f64 {
        let xi = self.xi(x);
        match self.log_envelope(state, xi) {
            Some(log) => log.exp() * laguerre_eval(state.n, state.s, xi),
            None => 0.0,
        }
    }

    /// Position density `ψ_n(x)²`.
    pub fn rho_x(&self, state: &Eigenstate, x: f64) -> f64 {
        let p = self.psi(state, x);
        p * p
    }

    /// Interval outside which `ψ_n²` is below `eps` times the peak of its
    /// node-free majorant `N² e^{-ξ} ξ^s (Σ|c_k| ξ^k)²`.
    ///
    /// Truncating on the majorant keeps the search away from the interior
    /// nodes of `ψ_n`, where the density itself dips to zero.
    pub fn support(&self, state: &Eigenstate, eps: f64) -> Result<(f64, f64)> {
        let coeffs = laguerre_coeffs(state.n, state.s)?;
        let majorant = |x: f64| {
            let xi = self.xi(x);
            match self.log_envelope(state, xi) {
                Some(log) => (2.0 * (log + coeffs.abs_bound(xi).ln())).exp(),
                None => 0.0,
            }
        };
        find_support(majorant, self.x_of_xi(state.s), eps)
    }
}

/// One bound level of a [`MorseParams`] well.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenstate {
    n: usize,
    s: f64,
    log_norm: f64,
    energy: f64,
}

impl Eigenstate {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Decay exponent `s = 2λ - 2n - 1`.
    pub fn s(&self) -> f64 {
        self.s
    }

    /// `ln N`.
    pub fn log_norm(&self) -> f64 {
        self.log_norm
    }

    pub fn norm(&self) -> f64 {
        self.log_norm.exp()
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }
}
