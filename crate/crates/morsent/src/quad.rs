//! Adaptive Gauss–Kronrod quadrature and support truncation.
//!
//! Each panel is integrated with the 15-point Kronrod rule; the embedded
//! 7-point Gauss rule gives the error estimate (rescaled the QUADPACK way).
//! The panel with the largest error is bisected until the global estimate
//! meets `max(abs_tol, rel_tol * |value|)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for nodes XGK[1], XGK[3], XGK[5] and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Values of `t` below this are treated as exactly zero in `t ln t`.
pub const LOG_CLAMP: f64 = 1e-300;

/// `t ln t` with the convention `0 ln 0 = 0`.
pub fn xlogx(t: f64) -> f64 {
    if t < LOG_CLAMP {
        0.0
    } else {
        t * t.ln()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

impl QuadConfig {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1 {
            return Err(Error::InvalidParams(format!(
                "quadrature needs rel_tol > 0, abs_tol > 0, max_subdivisions >= 1 \
                 (got {rel_tol}, {abs_tol}, {max_subdivisions})"
            )));
        }
        Ok(QuadConfig {
            rel_tol,
            abs_tol,
            max_subdivisions,
        })
    }

    fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    // worst error first; ties broken by position so the order is total
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn eval_checked<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { x })
    }
}

/// One application of the 15-point Kronrod rule on `[a, b]`.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = eval_checked(f, center)?;

    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    #[allow(clippy::needless_range_loop)]
    for j in 0..3 {
        let idx = 2 * j + 1;
        let dx = half * XGK[idx];
        let f1 = eval_checked(f, center - dx)?;
        let f2 = eval_checked(f, center + dx)?;
        fv1[idx] = f1;
        fv2[idx] = f2;
        res_g += WG[j] * (f1 + f2);
        res_k += WGK[idx] * (f1 + f2);
        res_abs += WGK[idx] * (f1.abs() + f2.abs());
    }
    for j in 0..4 {
        let idx = 2 * j;
        let dx = half * XGK[idx];
        let f1 = eval_checked(f, center - dx)?;
        let f2 = eval_checked(f, center + dx)?;
        fv1[idx] = f1;
        fv2[idx] = f2;
        res_k += WGK[idx] * (f1 + f2);
        res_abs += WGK[idx] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let width = half.abs();
    let err = (res_k - res_g) * half;
    Ok(Panel {
        a,
        b,
        value: res_k * half,
        error: rescale_error(err, res_abs * width, res_asc * width),
    })
}

/// Integrate `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<QuadResult> {
    integrate_panels(f, &[a, b], cfg)
}

/// Integrate `f` over `[breaks[0], breaks[last]]`, starting from the panels
/// delimited by `breaks` (strictly increasing, at least two entries).
pub fn integrate_panels<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    if breaks.len() < 2 {
        return Err(Error::Domain("need at least two breakpoints".into()));
    }
    if breaks.iter().any(|x| !x.is_finite()) || breaks.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Domain(format!(
            "breakpoints must be finite and strictly increasing: [{}, ..., {}]",
            breaks[0],
            breaks[breaks.len() - 1]
        )));
    }

    let mut heap = BinaryHeap::with_capacity(breaks.len() + cfg.max_subdivisions);
    let mut evaluations = 0;
    let mut value = 0.0;
    let mut error = 0.0;
    for w in breaks.windows(2) {
        let p = kronrod15(&f, w[0], w[1])?;
        evaluations += 15;
        value += p.value;
        error += p.error;
        heap.push(p);
    }

    let mut subdivisions = 0;
    loop {
        if error <= cfg.tolerance(value) {
            // re-sum in a fixed order so accumulated drift cannot fake convergence
            let (v, e) = totals(&heap);
            value = v;
            error = e;
            if error <= cfg.tolerance(value) {
                break;
            }
        }
        if subdivisions >= cfg.max_subdivisions {
            let (v, e) = totals(&heap);
            return Err(Error::NonConvergence {
                value: v,
                error: e,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            heap.push(worst);
            let (v, e) = totals(&heap);
            return Err(Error::NonConvergence {
                value: v,
                error: e,
                subdivisions,
            });
        }
        let left = kronrod15(&f, worst.a, mid)?;
        let right = kronrod15(&f, mid, worst.b)?;
        evaluations += 30;
        subdivisions += 1;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    Ok(QuadResult {
        value,
        error_estimate: error,
        evaluations,
    })
}

fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    let mut panels: Vec<&Panel> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    panels
        .iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error))
}

/// `count + 1` equally spaced breakpoints from `lo` to `hi`.
pub fn uniform_breaks(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let count = count.max(1);
    let width = hi - lo;
    let mut out: Vec<f64> = (0..=count)
        .map(|i| lo + width * i as f64 / count as f64)
        .collect();
    out[count] = hi;
    out
}

/// Breakpoints on `[lo, hi]` with no panel wider than `max_width`.
pub fn capped_breaks(lo: f64, hi: f64, max_width: f64) -> Vec<f64> {
    let count = ((hi - lo) / max_width).ceil().max(1.0) as usize;
    uniform_breaks(lo, hi, count)
}

const SUPPORT_STEP: f64 = 0.125;
const SUPPORT_MAX_DOUBLINGS: u32 = 40;
const SUPPORT_SCAN_HALF_WIDTH: f64 = 1.0;
const SUPPORT_SCAN_POINTS: usize = 64;

/// Find a finite interval outside which the non-negative function `g` has
/// fallen below `eps` times its peak.
///
/// Steps outward from `x_peak` with doubling strides until `g <= eps * g_max`,
/// then bisects back to the crossing. `g_max` starts from a coarse scan of
/// `x_peak ± 1` and is raised by every later evaluation, so the returned
/// endpoints satisfy `g(lo), g(hi) <= eps * g_max` for the final estimate.
pub fn find_support<G: Fn(f64) -> f64>(g: G, x_peak: f64, eps: f64) -> Result<(f64, f64)> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain(format!(
            "support eps must lie in (0, 1), got {eps}"
        )));
    }
    let eval = |x: f64| -> Result<f64> {
        let v = g(x);
        if v.is_nan() || v < 0.0 || v == f64::INFINITY {
            Err(Error::SupportNotFound(format!(
                "g({x}) = {v} is not a finite non-negative value"
            )))
        } else {
            Ok(v)
        }
    };

    let mut g_max = eval(x_peak)?;
    for i in 0..=SUPPORT_SCAN_POINTS {
        let x = x_peak - SUPPORT_SCAN_HALF_WIDTH
            + 2.0 * SUPPORT_SCAN_HALF_WIDTH * i as f64 / SUPPORT_SCAN_POINTS as f64;
        g_max = g_max.max(eval(x)?);
    }
    if !(g_max > 0.0) {
        return Err(Error::SupportNotFound(format!(
            "g vanishes around the peak estimate {x_peak}"
        )));
    }

    let mut edges = [0.0; 2];
    for (slot, dir) in [-1.0, 1.0].into_iter().enumerate() {
        let mut inside = x_peak;
        let mut step = SUPPORT_STEP;
        let mut doublings = 0;
        let mut outside = loop {
            let x = x_peak + dir * step;
            let v = eval(x)?;
            g_max = g_max.max(v);
            if v <= eps * g_max {
                break x;
            }
            inside = x;
            step *= 2.0;
            doublings += 1;
            if doublings > SUPPORT_MAX_DOUBLINGS {
                return Err(Error::SupportNotFound(format!(
                    "g still above {eps:e} of its peak at x = {x}"
                )));
            }
        };
        for _ in 0..200 {
            let mid = 0.5 * (inside + outside);
            if mid == inside || mid == outside {
                break;
            }
            if (outside - inside).abs() <= 1e-12 * (1.0 + mid.abs()) {
                break;
            }
            let v = eval(mid)?;
            g_max = g_max.max(v);
            if v <= eps * g_max {
                outside = mid;
            } else {
                inside = mid;
            }
        }
        edges[slot] = outside;
    }
    Ok((edges[0], edges[1]))
}
