//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use morsent::entropy::{
    bbm_bound, entropy_density_curve, entropy_p, entropy_x, norm_p, norm_x, reference_cells,
    scan_cells, variance_uncertainty, GridSpec, Space,
};
use morsent::golden::{self, ENTROPY_TOLERANCE, SUM_TOLERANCE};
use morsent::momentum::{phi_analytic, phi_quadrature};
use morsent::morse::{Eigenstate, MorseParams};
use morsent::quad::QuadConfig;
use morsent::specfun::{digamma, ln_gamma, EULER_GAMMA};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

fn state(lambda: f64, n: usize) -> (MorseParams, Eigenstate) {
    let m = MorseParams::new(lambda).expect("valid depth");
    let st = m.eigenstate(n).expect("bound state");
    (m, st)
}

fn table_states() -> Vec<(MorseParams, Eigenstate)> {
    reference_cells()
        .into_iter()
        .map(|(n, l)| state(l, n))
        .collect()
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn golden_table() -> Outcome {
    let start = Instant::now();
    let base = MorseParams::new(1.0).unwrap();
    let report = scan_cells(&base, &reference_cells(), &cfg());
    if !report.diagnostics.is_empty() {
        return Err(format!(
            "{} cells failed: {:?}",
            report.diagnostics.len(),
            report.diagnostics
        ));
    }
    let cmp = golden::compare(&report.results);
    let elapsed = start.elapsed().as_secs_f64();
    let off: Vec<String> = cmp
        .deltas
        .iter()
        .filter(|d| !d.within_tolerance())
        .map(|d| {
            format!(
                "(n={}, λ={}) ΔS_x={:+.2e} ΔS_p={:+.2e} Δsum={:+.2e}",
                d.n, d.lambda, d.d_s_x, d.d_s_p, d.d_sum
            )
        })
        .collect();
    let summary = format!(
        "{} rows, max |ΔS_x|={:.2e} |ΔS_p|={:.2e} |Δsum|={:.2e} (tol {ENTROPY_TOLERANCE:.1e}/{SUM_TOLERANCE:.1e}), {elapsed:.1}s",
        cmp.deltas.len(),
        cmp.max_abs_d_s_x,
        cmp.max_abs_d_s_p,
        cmp.max_abs_d_sum
    );
    check(
        cmp.deltas.len() == 16 && cmp.unmatched == 0 && off.is_empty() && elapsed < 60.0,
        summary.clone(),
        format!("{summary}; out of tolerance: {}", off.join("; ")),
    )
}

fn analytic_constants() -> Outcome {
    let c = cfg();
    let (m, st) = state(1.0, 0);
    let sx = entropy_x(&m, &st, &c).map_err(|e| e.to_string())?.value;
    let sp = entropy_p(&m, &st, &c).map_err(|e| e.to_string())?.value;
    let (m2, g) = state(2.0, 0);
    let (_, e1) = state(2.0, 1);
    let sp0 = entropy_p(&m2, &g, &c).map_err(|e| e.to_string())?.value;
    let sp1 = entropy_p(&m2, &e1, &c).map_err(|e| e.to_string())?.value;
    let d1 = (sx - (1.0 + EULER_GAMMA)).abs();
    let d2 = (sp - 2f64.ln()).abs();
    let d3 = (sp0 - sp1).abs();
    let msg = format!("|S_x-(1+γ)|={d1:.1e} |S_p-ln2|={d2:.1e} |S_p(0,2)-S_p(1,2)|={d3:.1e}");
    check(d1 <= 1e-8 && d2 <= 1e-6 && d3 <= 1e-8, msg.clone(), msg)
}

fn closed_form_ground_entropy() -> Outcome {
    let mut worst: f64 = 0.0;
    for lambda in [1.0, 2.0, 3.0, 4.0, 6.0, 10.0] {
        let (m, st) = state(lambda, 0);
        let s = 2.0 * lambda - 1.0;
        // N² = α s / Γ(2λ) with α = 1
        let ln_n2 = s.ln() - ln_gamma(2.0 * lambda).map_err(|e| e.to_string())?;
        let oracle = -ln_n2 + s - s * digamma(s).map_err(|e| e.to_string())?;
        let quad = entropy_x(&m, &st, &cfg()).map_err(|e| e.to_string())?.value;
        worst = worst.max((quad - oracle).abs());
    }
    let msg = format!("max |quadrature - closed form| = {worst:.1e} over 6 depths");
    check(worst <= 1e-8, msg.clone(), msg)
}

fn bbm_bound_holds() -> Outcome {
    let bound = bbm_bound(1);
    if (bound - 2.144_729_885_8).abs() >= 5e-11 {
        return Err(format!("bound constant {bound:.12}"));
    }
    let mut cells = Vec::new();
    for k in 0..=47 {
        let lambda = (6 + 2 * k) as f64 / 10.0;
        let count = MorseParams::new(lambda).unwrap().bound_state_count();
        cells.extend((0..count).map(|n| (n, lambda)));
    }
    let report = scan_cells(&MorseParams::new(1.0).unwrap(), &cells, &cfg());
    if !report.diagnostics.is_empty() {
        return Err(format!(
            "{} states failed: {:?}",
            report.diagnostics.len(),
            report.diagnostics
        ));
    }
    let violations: Vec<String> = report
        .results
        .iter()
        .filter(|r| !r.satisfies_bound())
        .map(|r| format!("(n={}, λ={}) margin {:.3e}", r.n, r.lambda, r.margin))
        .collect();
    let min_margin = report
        .results
        .iter()
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min);
    let msg = format!(
        "{} states, bound {bound:.10}, min margin {min_margin:.4e}",
        report.results.len()
    );
    check(
        violations.is_empty(),
        msg.clone(),
        format!("{msg}; {}", violations.join("; ")),
    )
}

fn saturation_trend() -> Outcome {
    let base = MorseParams::new(1.0).unwrap();
    let cells: Vec<(usize, f64)> = [1.0, 2.0, 3.0, 4.0, 8.0].iter().map(|&l| (0, l)).collect();
    let report = scan_cells(&base, &cells, &cfg());
    if report.results.len() != cells.len() {
        return Err(format!("failed cells: {:?}", report.diagnostics));
    }
    let sums: Vec<f64> = report.results.iter().map(|r| r.sum).collect();
    let bound = 1.0 + PI.ln();
    let decreasing = sums[..4].windows(2).all(|w| w[1] < w[0]);
    let above = sums[..4].iter().all(|&s| s > bound);
    let msg = format!(
        "n=0 sums λ=1..4: {:.5} {:.5} {:.5} {:.5}, λ=8: {:.5}",
        sums[0], sums[1], sums[2], sums[3], sums[4]
    );
    check(decreasing && above && sums[4] < sums[3], msg.clone(), msg)
}

fn normalization() -> Outcome {
    let mut worst: f64 = 0.0;
    for (m, st) in table_states() {
        let nx = norm_x(&m, &st, &cfg()).map_err(|e| e.to_string())?.value;
        let np = norm_p(&m, &st, &cfg()).map_err(|e| e.to_string())?.value;
        worst = worst.max((nx - 1.0).abs()).max((np - 1.0).abs());
    }
    let msg = format!("max |norm - 1| = {worst:.1e} over 16 states, both spaces");
    check(worst <= 1e-8, msg.clone(), msg)
}

fn fourier_agreement() -> Outcome {
    let mut worst: f64 = 0.0;
    for (m, st) in table_states() {
        for p in [0.0, 0.3, -0.3, 1.0, -1.0, 2.5, -2.5] {
            let a = phi_analytic(&m, &st, p).map_err(|e| e.to_string())?;
            let q = phi_quadrature(&m, &st, p, &cfg()).map_err(|e| e.to_string())?;
            worst = worst.max((a - q).norm());
        }
    }
    let msg = format!("max |φ_closed - φ_quadrature| = {worst:.1e} over 16 states x 7 momenta");
    check(worst <= 1e-8, msg.clone(), msg)
}

fn scale_covariance() -> Outcome {
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for (m, st) in table_states() {
        let r0 = morsent::entropy::bbm_check(&m, &st, &cfg()).map_err(|e| e.to_string())?;
        for c in [0.5, 2.0] {
            let mc = m.with_alpha(c).map_err(|e| e.to_string())?;
            let sc = mc.eigenstate(st.n()).map_err(|e| e.to_string())?;
            let r = morsent::entropy::bbm_check(&mc, &sc, &cfg()).map_err(|e| e.to_string())?;
            worst.0 = worst.0.max((r.s_x - r0.s_x + c.ln()).abs());
            worst.1 = worst.1.max((r.s_p - r0.s_p - c.ln()).abs());
            worst.2 = worst.2.max((r.sum - r0.sum).abs());
        }
    }
    let msg = format!(
        "α ∈ {{0.5, 2}}: max shift error S_x {:.1e}, S_p {:.1e}, sum {:.1e}",
        worst.0, worst.1, worst.2
    );
    check(
        worst.0 <= 1e-8 && worst.1 <= 1e-8 && worst.2 <= 2e-8,
        msg.clone(),
        msg,
    )
}

fn robertson() -> Outcome {
    let mut min_product = f64::INFINITY;
    for (m, st) in table_states() {
        let u = variance_uncertainty(&m, &st, &cfg()).map_err(|e| e.to_string())?;
        min_product = min_product.min(u.product);
    }
    let (m, st) = state(1.0, 0);
    let u = variance_uncertainty(&m, &st, &cfg()).map_err(|e| e.to_string())?;
    let dx = (u.delta_x - PI / 6f64.sqrt()).abs();
    let dp = (u.delta_p - 0.5).abs();
    let msg = format!("min Δx·Δp = {min_product:.7}, (0,1): |Δx-π/√6|={dx:.1e} |Δp-1/2|={dp:.1e}");
    check(
        min_product >= 0.4999999 && dx <= 1e-8 && dp <= 1e-8,
        msg.clone(),
        msg,
    )
}

fn sign_changes(m: &MorseParams, st: &Eigenstate) -> usize {
    let (lo, hi) = m.support(st, 1e-12).expect("support");
    let samples = 20_000;
    let mut count = 0;
    let mut prev = 0.0f64;
    for i in 0..=samples {
        let x = lo + (hi - lo) * i as f64 / samples as f64;
        let v = m.psi(st, x);
        if v != 0.0 {
            if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
                count += 1;
            }
            prev = v;
        }
    }
    count
}

fn figure_structure() -> Outcome {
    let mut problems = Vec::new();
    let mut worst_asym: f64 = 0.0;
    for (m, st) in table_states() {
        let curve = entropy_density_curve(&m, &st, Space::Momentum, GridSpec::Auto)
            .map_err(|e| e.to_string())?;
        let pts = &curve.points;
        for (a, b) in pts.iter().zip(pts.iter().rev()) {
            if a.coordinate != -b.coordinate {
                problems.push(format!(
                    "momentum grid not mirrored for (n={}, λ={})",
                    st.n(),
                    m.lambda()
                ));
                break;
            }
            worst_asym = worst_asym.max((a.entropy_density - b.entropy_density).abs());
        }
        let nodes = sign_changes(&m, &st);
        if nodes != st.n() {
            problems.push(format!(
                "(n={}, λ={}) has {nodes} nodes",
                st.n(),
                m.lambda()
            ));
        }
    }
    if worst_asym > 1e-10 {
        problems.push(format!("momentum asymmetry {worst_asym:.1e}"));
    }
    let mut minima = Vec::new();
    for lambda in [1.0, 2.0, 3.0] {
        let (m, st) = state(lambda, 0);
        let curve = entropy_density_curve(&m, &st, Space::Position, GridSpec::Auto)
            .map_err(|e| e.to_string())?;
        let k = curve.interior_minima();
        minima.push(format!("λ={lambda}:{k}"));
        if k != 1 {
            problems.push(format!(
                "n=0 λ={lambda} position entropy density has {k} interior minima"
            ));
        }
    }
    let msg = format!(
        "momentum asymmetry {worst_asym:.1e}, n=0 position minima [{}], node counts checked on 16 states",
        minima.join(" ")
    );
    check(
        problems.is_empty(),
        msg.clone(),
        format!("{msg}; {}", problems.join("; ")),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden entropy table", golden_table),
        ("analytic constants", analytic_constants),
        (
            "closed-form ground-state entropy",
            closed_form_ground_entropy,
        ),
        ("entropic uncertainty bound", bbm_bound_holds),
        ("saturation trend", saturation_trend),
        ("normalization and Parseval", normalization),
        (
            "closed-form vs quadrature Fourier transform",
            fourier_agreement,
        ),
        ("scale covariance", scale_covariance),
        ("Robertson relation", robertson),
        ("entropy-density figure structure", figure_structure),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
