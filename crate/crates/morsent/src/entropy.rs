//! Position and momentum information entropies, entropy densities, and the
//! uncertainty checks built on them.
//!
//! Entropies are in nats. Both integrals run over a finite support outside
//! which the density is below `1e-18` of its peak; the reported error adds a
//! bound on the discarded tail to the quadrature estimate.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::momentum::MomentumWavefunction;
use crate::morse::{Eigenstate, MorseParams};
use crate::quad::{find_support, integrate_panels, uniform_breaks, xlogx, QuadConfig, QuadResult};

/// Support truncation for entropy, normalization and moment integrals.
pub const SUPPORT_EPS: f64 = 1e-18;
/// Support truncation for automatically sized plotting grids.
pub const CURVE_EPS: f64 = 1e-12;
pub const CURVE_POINTS: usize = 800;

const INITIAL_PANELS: usize = 32;

/// A numerically integrated quantity and its error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Entropies of one eigenstate and their comparison with the BBM bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyResult {
    pub n: usize,
    pub lambda: f64,
    #[serde(rename = "S_x")]
    pub s_x: f64,
    #[serde(rename = "S_x_err")]
    pub s_x_err: f64,
    #[serde(rename = "S_p")]
    pub s_p: f64,
    #[serde(rename = "S_p_err")]
    pub s_p_err: f64,
    pub sum: f64,
    pub bound: f64,
    pub margin: f64,
}

impl EntropyResult {
    /// BBM holds up to the numerical error of the two entropies.
    pub fn satisfies_bound(&self) -> bool {
        self.margin >= -(self.s_x_err + self.s_p_err)
    }
}

/// Standard deviations of position and momentum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyResult {
    pub delta_x: f64,
    pub delta_p: f64,
    pub product: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Position,
    Momentum,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    pub coordinate: f64,
    pub density: f64,
    pub entropy_density: f64,
}

/// Sampled `ρ` and signed `ρ ln ρ` of one eigenstate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityCurve {
    pub space: Space,
    pub n: usize,
    pub lambda: f64,
    pub points: Vec<DensityPoint>,
}

impl DensityCurve {
    /// Trapezoid integral of the density over the sampled grid.
    pub fn trapezoid_norm(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| 0.5 * (w[1].coordinate - w[0].coordinate) * (w[0].density + w[1].density))
            .sum()
    }

    /// Number of strict interior local minima of the entropy density.
    pub fn interior_minima(&self) -> usize {
        let f: Vec<f64> = self.points.iter().map(|p| p.entropy_density).collect();
        // collapse plateaus so a flat bottom counts once
        let mut dedup: Vec<f64> = Vec::with_capacity(f.len());
        for v in f {
            if dedup.last() != Some(&v) {
                dedup.push(v);
            }
        }
        dedup
            .windows(3)
            .filter(|w| w[1] < w[0] && w[1] < w[2])
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GridSpec {
    /// Support found at [`CURVE_EPS`], [`CURVE_POINTS`] samples.
    Auto,
    Explicit {
        lo: f64,
        hi: f64,
        count: usize,
    },
}

/// `N (1 + ln π)`.
pub fn bbm_bound(dimensions: usize) -> f64 {
    dimensions as f64 * (1.0 + PI.ln())
}

/// Generous bound on `∫ |ρ ln ρ|` beyond the cut, from the density at the
/// two edges and the width of the support.
fn tail_bound(edge_values: [f64; 2], width: f64) -> f64 {
    edge_values
        .iter()
        .map(|&t| {
            if t < 1e-300 {
                0.0
            } else {
                t * (t.ln().abs() + 1.0) * width
            }
        })
        .sum()
}

fn integrate_over<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    integrate_panels(f, &uniform_breaks(lo, hi, INITIAL_PANELS), cfg)
}

fn momentum_support(wf: &MomentumWavefunction, eps: f64) -> Result<(f64, f64)> {
    let (lo, hi) = find_support(|p| wf.rho(p), 0.0, eps)?;
    let edge = hi.max(-lo);
    Ok((-edge, edge))
}

/// `S_x = -∫ ρ_x ln ρ_x dx`.
pub fn entropy_x(params: &MorseParams, state: &Eigenstate, cfg: &QuadConfig) -> Result<Estimate> {
    let (lo, hi) = params.support(state, SUPPORT_EPS)?;
    let r = integrate_over(|x| -xlogx(params.rho_x(state, x)), lo, hi, cfg)?;
    let tail = tail_bound([params.rho_x(state, lo), params.rho_x(state, hi)], hi - lo);
    Ok(Estimate {
        value: r.value,
        error: r.error_estimate + tail,
    })
}

/// `S_p = -∫ ρ_p ln ρ_p dp`.
pub fn entropy_p(params: &MorseParams, state: &Eigenstate, cfg: &QuadConfig) -> Result<Estimate> {
    let wf = MomentumWavefunction::new(params, state)?;
    let (lo, hi) = momentum_support(&wf, SUPPORT_EPS)?;
    let r = integrate_over(|p| -xlogx(wf.rho(p)), lo, hi, cfg)?;
    let tail = tail_bound([wf.rho(lo), wf.rho(hi)], hi - lo);
    Ok(Estimate {
        value: r.value,
        error: r.error_estimate + tail,
    })
}

/// `∫ ρ_x dx` over the truncated support.
pub fn norm_x(params: &MorseParams, state: &Eigenstate, cfg: &QuadConfig) -> Result<QuadResult> {
    let (lo, hi) = params.support(state, SUPPORT_EPS)?;
    integrate_over(|x| params.rho_x(state, x), lo, hi, cfg)
}

/// `∫ ρ_p dp` over the truncated support.
pub fn norm_p(params: &MorseParams, state: &Eigenstate, cfg: &QuadConfig) -> Result<QuadResult> {
    let wf = MomentumWavefunction::new(params, state)?;
    let (lo, hi) = momentum_support(&wf, SUPPORT_EPS)?;
    integrate_over(|p| wf.rho(p), lo, hi, cfg)
}

pub fn bbm_check(
    params: &MorseParams,
    state: &Eigenstate,
    cfg: &QuadConfig,
) -> Result<EntropyResult> {
    let sx = entropy_x(params, state, cfg)?;
    let sp = entropy_p(params, state, cfg)?;
    let sum = sx.value + sp.value;
    let bound = bbm_bound(1);
    Ok(EntropyResult {
        n: state.n(),
        lambda: params.lambda(),
        s_x: sx.value,
        s_x_err: sx.error,
        s_p: sp.value,
        s_p_err: sp.error,
        sum,
        bound,
        margin: sum - bound,
    })
}

/// Robertson check: `Δx` and `Δp` from the first two moments of each density.
pub fn variance_uncertainty(
    params: &MorseParams,
    state: &Eigenstate,
    cfg: &QuadConfig,
) -> Result<UncertaintyResult> {
    let (lo, hi) = params.support(state, SUPPORT_EPS)?;
    let mean_x = integrate_over(|x| x * params.rho_x(state, x), lo, hi, cfg)?.value;
    let second_x = integrate_over(|x| x * x * params.rho_x(state, x), lo, hi, cfg)?.value;

    let wf = MomentumWavefunction::new(params, state)?;
    let (plo, phi) = momentum_support(&wf, SUPPORT_EPS)?;
    let mean_p = integrate_over(|p| p * wf.rho(p), plo, phi, cfg)?.value;
    let second_p = integrate_over(|p| p * p * wf.rho(p), plo, phi, cfg)?.value;

    let var_x = second_x - mean_x * mean_x;
    let var_p = second_p - mean_p * mean_p;
    if !(var_x > 0.0 && var_p > 0.0) {
        return Err(Error::Domain(format!(
            "non-positive variance (var_x = {var_x:e}, var_p = {var_p:e})"
        )));
    }
    let delta_x = var_x.sqrt();
    let delta_p = var_p.sqrt();
    Ok(UncertaintyResult {
        delta_x,
        delta_p,
        product: delta_x * delta_p,
    })
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count - 1) as f64;
    let mut out: Vec<f64> = (0..count).map(|i| lo + step * i as f64).collect();
    out[count - 1] = hi;
    out
}

/// `count` points on `[-edge, edge]`, exactly mirror-symmetric.
fn symmetric_grid(edge: f64, count: usize) -> Vec<f64> {
    let mut out = linspace(-edge, edge, count);
    for i in 0..count / 2 {
        out[count - 1 - i] = -out[i];
    }
    if count % 2 == 1 {
        out[count / 2] = 0.0;
    }
    out
}

/// Sample `ρ` and `ρ ln ρ` on a grid for plotting.
pub fn entropy_density_curve(
    params: &MorseParams,
    state: &Eigenstate,
    space: Space,
    grid: GridSpec,
) -> Result<DensityCurve> {
    let wf = match space {
        Space::Momentum => Some(MomentumWavefunction::new(params, state)?),
        Space::Position => None,
    };
    let coords = match grid {
        GridSpec::Explicit { lo, hi, count } => {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) || count < 2 {
                return Err(Error::InvalidParams(format!(
                    "grid needs lo < hi and at least 2 points (got {lo}:{hi}:{count})"
                )));
            }
            linspace(lo, hi, count)
        }
        GridSpec::Auto => match &wf {
            None => {
                let (lo, hi) = params.support(state, CURVE_EPS)?;
                linspace(lo, hi, CURVE_POINTS)
            }
            Some(wf) => {
                let (_, edge) = momentum_support(wf, CURVE_EPS)?;
                symmetric_grid(edge, CURVE_POINTS)
            }
        },
    };
    let points = coords
        .into_iter()
        .map(|c| {
            let density = match &wf {
                Some(wf) => wf.rho(c),
                None => params.rho_x(state, c),
            };
            DensityPoint {
                coordinate: c,
                density,
                entropy_density: xlogx(density),
            }
        })
        .collect();
    Ok(DensityCurve {
        space,
        n: state.n(),
        lambda: params.lambda(),
        points,
    })
}

/// Why a table cell produced no result.
#[derive(Debug, Clone, PartialEq)]
pub enum CellIssue {
    /// `(n, λ)` does not describe a bound state.
    Invalid(Error),
    /// The state exists but the integration failed.
    Failed(Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellDiagnostic {
    pub n: usize,
    pub lambda: f64,
    pub issue: CellIssue,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScanReport {
    pub results: Vec<EntropyResult>,
    pub diagnostics: Vec<CellDiagnostic>,
}

impl ScanReport {
    pub fn has_failures(&self) -> bool {
        self.diagnostics
            .iter()
            .any(|d| matches!(d.issue, CellIssue::Failed(_)))
    }
}

/// The `(n, λ)` cells of the reference BBM table, in its row order.
pub fn reference_cells() -> Vec<(usize, f64)> {
    (0..4usize)
        .flat_map(|n| (0..4).map(move |k| (n, (n + 1 + k) as f64)))
        .collect()
}

/// Evaluate every `(n, λ)` cell in parallel, reporting results in input order.
/// `base` supplies α, ħ and μ.
pub fn scan_cells(base: &MorseParams, cells: &[(usize, f64)], cfg: &QuadConfig) -> ScanReport {
    let outcomes: Vec<std::result::Result<EntropyResult, CellDiagnostic>> = cells
        .par_iter()
        .map(|&(n, lambda)| {
            let diag = |issue| CellDiagnostic { n, lambda, issue };
            let params = MorseParams::with_units(lambda, base.alpha(), base.hbar(), base.mu())
                .map_err(|e| diag(CellIssue::Invalid(e)))?;
            let state = params
                .eigenstate(n)
                .map_err(|e| diag(CellIssue::Invalid(e)))?;
            bbm_check(&params, &state, cfg).map_err(|e| diag(CellIssue::Failed(e)))
        })
        .collect();
    let mut report = ScanReport::default();
    for o in outcomes {
        match o {
            Ok(r) => report.results.push(r),
            Err(d) => report.diagnostics.push(d),
        }
    }
    report
}

/// Cross product of `n_list` and `lambda_list`, n-major.
pub fn scan_table(
    base: &MorseParams,
    n_list: &[usize],
    lambda_list: &[f64],
    cfg: &QuadConfig,
) -> ScanReport {
    let cells: Vec<(usize, f64)> = n_list
        .iter()
        .flat_map(|&n| lambda_list.iter().map(move |&l| (n, l)))
        .collect();
    scan_cells(base, &cells, cfg)
}
