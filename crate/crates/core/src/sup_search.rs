//! Numeric suprema of the constant functionals: coarse grid search over a
//! reduced domain plus derivative-free local refinement.
//!
//! Domain reduction. Every searched functional is invariant (or positively
//! homogeneous) under joint scaling of `(x, y)`, so the supremum over its full
//! domain is attained where the larger of the two norms equals 1. The search
//! therefore walks `x = unit_vector(θ₁)`, `y = t·unit_vector(θ₂)` with
//! `t ∈ [0, 1]` in two branches (scale on y, then scale on x) for the
//! ratio-type constants and the two-parameter James constant, and
//! sphere × sphere (`t = 1`) for the constants defined on `S_X × S_X`.
//!
//! Determinism. Grid evaluation is partitioned across worker threads; each
//! partition reports its best `(value, lattice key)` pair and a total-order
//! reduction picks the global maximum, breaking value ties toward the
//! lexicographically smallest `(θ₁, θ₂, t)` (then the earlier branch).
//! Results are bit-identical regardless of the worker count.
//!
//! Refinement is a coordinate-wise pattern search: it moves to a strictly
//! improving neighbor while one exists, otherwise multiplies the step by
//! `refine_shrink`, stopping after `refine_iters` shrinks. Maximizers of the
//! max-type norms sit at corner points where gradients do not exist, which is
//! why no derivative-based method is used.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::closed_forms;
use crate::error::{Error, Result};
use crate::functionals::{
    cnj_raw, cnjp_raw, james_lm_raw, james_raw, james_type_raw, lyj_prime_raw, lyj_raw,
    ConstantKind, ConstantQuery,
};
use crate::norm_spaces::{SpaceSpec, Vec2};

pub const DEFAULT_ANGLE_GRID: usize = 720;
pub const DEFAULT_SCALE_GRID: usize = 65;
pub const DEFAULT_REFINE_ITERS: u32 = 60;
pub const DEFAULT_REFINE_SHRINK: f64 = 0.5;
/// Default acceptance tolerance for [`verify_against_closed_form`].
pub const DEFAULT_VERIFY_TOL: f64 = 1e-3;

/// Grid resolutions and refinement schedule for [`compute_constant`].
///
/// The tie-break rule is fixed (lexicographically smallest `(θ₁, θ₂, t)`)
/// and not configurable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Number of angles on the full circle, per sphere parameter.
    pub angle_grid_n: usize,
    /// Number of scale values covering `t ∈ [0, 1]` inclusive.
    pub scale_grid_n: usize,
    /// Number of step shrinks before refinement stops.
    pub refine_iters: u32,
    /// Step multiplier applied when no improving neighbor exists; in (0, 1).
    pub refine_shrink: f64,
    /// Initial refinement step. `None` means one grid cell per coordinate.
    pub initial_step: Option<f64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            angle_grid_n: DEFAULT_ANGLE_GRID,
            scale_grid_n: DEFAULT_SCALE_GRID,
            refine_iters: DEFAULT_REFINE_ITERS,
            refine_shrink: DEFAULT_REFINE_SHRINK,
            initial_step: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.angle_grid_n < 1 || self.scale_grid_n < 1 {
            return Err(Error::ParameterDomain(format!(
                "grid sizes must be at least 1, got angle={}, scale={}",
                self.angle_grid_n, self.scale_grid_n
            )));
        }
        if !(self.refine_shrink.is_finite() && self.refine_shrink > 0.0 && self.refine_shrink < 1.0)
        {
            return Err(Error::ParameterDomain(format!(
                "refine_shrink must lie in (0, 1), got {}",
                self.refine_shrink
            )));
        }
        if let Some(s) = self.initial_step {
            if !(s.is_finite() && s > 0.0) {
                return Err(Error::ParameterDomain(format!(
                    "initial_step must be finite and > 0, got {s}"
                )));
            }
        }
        Ok(())
    }
}

/// Which side of the evaluated pair carries the scale `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Evaluated pair is `(x, t·y)`.
    ScaleY,
    /// Evaluated pair is `(t·x, y)`.
    ScaleX,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::ScaleY => "scale_y",
            Branch::ScaleX => "scale_x",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point of the reduced search domain. `x` and `y` are unit vectors; the
/// functional is evaluated at `(x, t·y)` or `(t·x, y)` depending on `branch`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub x: Vec2,
    pub y: Vec2,
    pub t: f64,
    pub theta_x: f64,
    pub theta_y: f64,
    pub branch: Branch,
}

impl Witness {
    /// The pair the functional is actually evaluated at.
    pub fn evaluated_pair(&self) -> (Vec2, Vec2) {
        match self.branch {
            Branch::ScaleY => (self.x, self.y.scale(self.t)),
            Branch::ScaleX => (self.x.scale(self.t), self.y),
        }
    }
}

/// Result of a supremum computation.
#[derive(Debug, Clone, PartialEq)]
pub struct ComputationResult {
    pub query: ConstantQuery,
    pub space: SpaceSpec,
    /// Refined supremum estimate; never below any lattice value encountered.
    pub value: f64,
    pub witness: Witness,
    /// Best lattice value before refinement. `value - grid_value` is a
    /// heuristic indicator of grid adequacy, not a rigorous error bound.
    pub grid_value: f64,
    pub closed_form: Option<f64>,
    pub abs_diff: Option<f64>,
    pub evaluations: u64,
}

/// Outcome of [`refine_local`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refined {
    pub witness: Witness,
    pub value: f64,
    pub evaluations: u64,
}

/// A [`ComputationResult`] compared against its closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub result: ComputationResult,
    pub tolerance: f64,
    pub pass: bool,
}

fn uses_scale_branches(kind: ConstantKind) -> bool {
    matches!(
        kind,
        ConstantKind::Lyj | ConstantKind::Cnj | ConstantKind::Cnjp | ConstantKind::JamesLambdaMu
    )
}

/// Single evaluation of the queried functional at an evaluated pair with
/// precomputed norms. Every path through the search funnels through here.
#[inline]
fn eval_pair(space: &SpaceSpec, query: &ConstantQuery, x: Vec2, nx: f64, y: Vec2, ny: f64) -> f64 {
    match *query {
        ConstantQuery::Lyj { xi, eta } => lyj_raw(space, xi, eta, x, nx, y, ny),
        ConstantQuery::LyjPrime { xi, eta } => lyj_prime_raw(space, xi, eta, x, nx, y, ny),
        ConstantQuery::Cnj => cnj_raw(space, x, nx, y, ny),
        ConstantQuery::Cnjp { p_exp } => cnjp_raw(space, p_exp, x, nx, y, ny),
        ConstantQuery::James => james_raw(space, x, y),
        ConstantQuery::JamesLambdaMu { lam, mu } => james_lm_raw(space, lam, mu, x, y),
        ConstantQuery::JamesType { t_mean, tau } => james_type_raw(space, t_mean, tau, x, y),
    }
}

/// Best grid candidate: value plus lattice key `(i₁, i₂, iₜ, branch)`.
/// Ordering is by value, then lexicographically smallest key.
#[derive(Debug, Clone, Copy)]
struct Cand {
    value: f64,
    key: [u32; 4],
}

impl Cand {
    const WORST: Cand = Cand {
        value: f64::NEG_INFINITY,
        key: [u32::MAX; 4],
    };

    #[inline]
    fn merge(a: Cand, b: Cand) -> Cand {
        if b.value > a.value || (b.value == a.value && b.key < a.key) {
            b
        } else {
            a
        }
    }
}

struct GridTables {
    thetas: Vec<f64>,
    ts: Vec<f64>,
    /// Unit vectors at each angle, and their norms.
    u: Vec<Vec2>,
    nu: Vec<f64>,
    /// `u[i].scale(ts[k])` at index `i * ts.len() + k`, and their norms.
    s: Vec<Vec2>,
    ns: Vec<f64>,
}

fn t_grid(n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![1.0];
    }
    (0..n)
        .map(|k| {
            if k == n - 1 {
                1.0
            } else {
                k as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn build_tables(space: &SpaceSpec, cfg: &SearchConfig, scaled: bool) -> GridTables {
    let n = cfg.angle_grid_n;
    let step = TAU / n as f64;
    let thetas: Vec<f64> = (0..n).map(|i| i as f64 * step).collect();
    let u: Vec<Vec2> = thetas.iter().map(|&th| space.unit_vector_raw(th)).collect();
    let nu: Vec<f64> = u.iter().map(|&v| space.norm_raw(v)).collect();
    let ts = if scaled {
        t_grid(cfg.scale_grid_n)
    } else {
        vec![1.0]
    };
    let nt = ts.len();
    let mut s = Vec::with_capacity(n * nt);
    let mut ns = Vec::with_capacity(n * nt);
    for &uv in &u {
        for &t in &ts {
            let sv = uv.scale(t);
            s.push(sv);
            ns.push(space.norm_raw(sv));
        }
    }
    GridTables {
        thetas,
        ts,
        u,
        nu,
        s,
        ns,
    }
}

fn numeric_failure(tb: &GridTables, value: f64, key: [u32; 4], branch: Branch) -> Error {
    Error::NumericFailure(format!(
        "functional value {value} at theta_x={}, theta_y={}, t={}, branch={}",
        tb.thetas[key[0] as usize], tb.thetas[key[1] as usize], tb.ts[key[2] as usize], branch
    ))
}

fn scan_row(
    space: &SpaceSpec,
    query: &ConstantQuery,
    tb: &GridTables,
    branch: Branch,
    branch_idx: u32,
    i1: usize,
) -> Result<Cand> {
    let nt = tb.ts.len();
    let na = tb.thetas.len();
    let mut best = Cand::WORST;
    let consider = |best: &mut Cand, v: f64, key: [u32; 4]| -> Result<()> {
        if !v.is_finite() {
            return Err(numeric_failure(tb, v, key, branch));
        }
        if v > best.value || (v == best.value && key < best.key) {
            *best = Cand { value: v, key };
        }
        Ok(())
    };
    match branch {
        Branch::ScaleY => {
            let x = tb.u[i1];
            let nx = tb.nu[i1];
            for i2 in 0..na {
                let base = i2 * nt;
                for it in 0..nt {
                    let v = eval_pair(space, query, x, nx, tb.s[base + it], tb.ns[base + it]);
                    consider(&mut best, v, [i1 as u32, i2 as u32, it as u32, branch_idx])?;
                }
            }
        }
        Branch::ScaleX => {
            let base = i1 * nt;
            for it in 0..nt {
                let x = tb.s[base + it];
                let nx = tb.ns[base + it];
                for i2 in 0..na {
                    let v = eval_pair(space, query, x, nx, tb.u[i2], tb.nu[i2]);
                    consider(&mut best, v, [i1 as u32, i2 as u32, it as u32, branch_idx])?;
                }
            }
        }
    }
    Ok(best)
}

fn grid_scan(
    space: &SpaceSpec,
    query: &ConstantQuery,
    tb: &GridTables,
    branches: &[Branch],
) -> Result<(Cand, u64)> {
    let na = tb.thetas.len();
    let nt = tb.ts.len();
    let mut best = Cand::WORST;
    let mut evaluations = 0u64;
    for (bi, &branch) in branches.iter().enumerate() {
        let branch_best = (0..na)
            .into_par_iter()
            .map(|i1| scan_row(space, query, tb, branch, bi as u32, i1))
            .try_reduce(|| Cand::WORST, |a, b| Ok(Cand::merge(a, b)))?;
        best = Cand::merge(best, branch_best);
        evaluations += (na * na * nt) as u64;
    }
    Ok((best, evaluations))
}

fn witness_from(tb: &GridTables, branches: &[Branch], cand: &Cand) -> Witness {
    let [i1, i2, it, bi] = cand.key;
    Witness {
        x: tb.u[i1 as usize],
        y: tb.u[i2 as usize],
        t: tb.ts[it as usize],
        theta_x: tb.thetas[i1 as usize],
        theta_y: tb.thetas[i2 as usize],
        branch: branches[bi as usize],
    }
}

fn wrap_angle(th: f64) -> f64 {
    th.rem_euclid(TAU)
}

/// Coordinate-wise pattern search over `(θ₁, θ₂, t)` starting from `start`.
/// The scale coordinate moves only for the constants searched with scaling
/// branches; it is clamped to `[0, 1]` and angles wrap modulo 2π. The
/// returned value is never below the value at `start`.
pub fn refine_local(
    space: &SpaceSpec,
    query: &ConstantQuery,
    start: &Witness,
    cfg: &SearchConfig,
) -> Result<Refined> {
    space.validate()?;
    query.validate()?;
    cfg.validate()?;
    for (name, v) in [("x", start.x), ("y", start.y)] {
        if !v.is_finite() {
            return Err(Error::Precondition(format!(
                "witness {name} must be finite, got {v}"
            )));
        }
        let n = space.norm_raw(v);
        if (n - 1.0).abs() > 1e-9 {
            return Err(Error::Precondition(format!(
                "witness {name} must be a unit vector, got norm {n}"
            )));
        }
    }
    if !(start.t.is_finite() && (0.0..=1.0).contains(&start.t)) {
        return Err(Error::Precondition(format!(
            "witness t must lie in [0, 1], got {}",
            start.t
        )));
    }
    if !start.theta_x.is_finite() || !start.theta_y.is_finite() {
        return Err(Error::Precondition(
            "witness angles must be finite".to_string(),
        ));
    }

    let scaled = uses_scale_branches(query.kind());
    let branch = start.branch;
    let eval = |th1: f64, th2: f64, t: f64| -> Result<f64> {
        let x = space.unit_vector_raw(th1);
        let y = space.unit_vector_raw(th2);
        let (ex, ey) = match branch {
            Branch::ScaleY => (x, y.scale(t)),
            Branch::ScaleX => (x.scale(t), y),
        };
        let v = eval_pair(space, query, ex, space.norm_raw(ex), ey, space.norm_raw(ey));
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NumericFailure(format!(
                "functional value {v} at theta_x={th1}, theta_y={th2}, t={t}, branch={branch}"
            )))
        }
    };

    let angle_cell = TAU / cfg.angle_grid_n as f64;
    let scale_cell = if cfg.scale_grid_n > 1 {
        1.0 / (cfg.scale_grid_n - 1) as f64
    } else {
        1.0
    };
    let mut step_th = cfg.initial_step.unwrap_or(angle_cell);
    let mut step_t = cfg.initial_step.unwrap_or(scale_cell);

    let (mut th1, mut th2, mut t) = (start.theta_x, start.theta_y, start.t);
    let mut cur = eval(th1, th2, t)?;
    let mut evaluations = 1u64;
    let mut shrinks = 0u32;

    while shrinks < cfg.refine_iters {
        let mut moves: [(f64, f64, f64); 6] = [(th1, th2, t); 6];
        moves[0] = (wrap_angle(th1 - step_th), th2, t);
        moves[1] = (wrap_angle(th1 + step_th), th2, t);
        moves[2] = (th1, wrap_angle(th2 - step_th), t);
        moves[3] = (th1, wrap_angle(th2 + step_th), t);
        let n_moves = if scaled {
            moves[4] = (th1, th2, (t - step_t).max(0.0));
            moves[5] = (th1, th2, (t + step_t).min(1.0));
            6
        } else {
            4
        };

        let mut best_move: Option<(f64, (f64, f64, f64))> = None;
        for &coords in &moves[..n_moves] {
            if coords == (th1, th2, t) {
                continue; // clamped onto the current point
            }
            let v = eval(coords.0, coords.1, coords.2)?;
            evaluations += 1;
            if v > cur && best_move.map_or(true, |(bv, _)| v > bv) {
                best_move = Some((v, coords));
            }
        }
        match best_move {
            Some((v, coords)) => {
                cur = v;
                (th1, th2, t) = coords;
            }
            None => {
                step_th *= cfg.refine_shrink;
                step_t *= cfg.refine_shrink;
                shrinks += 1;
            }
        }
    }

    let witness = Witness {
        x: space.unit_vector_raw(th1),
        y: space.unit_vector_raw(th2),
        t,
        theta_x: th1,
        theta_y: th2,
        branch,
    };
    Ok(Refined {
        witness,
        value: cur,
        evaluations,
    })
}

/// Grid search plus local refinement for the queried constant on `space`.
///
/// The returned value is the refined maximum over the search lattice; it is
/// deterministic for identical inputs regardless of evaluation parallelism.
pub fn compute_constant(
    space: &SpaceSpec,
    query: &ConstantQuery,
    cfg: &SearchConfig,
) -> Result<ComputationResult> {
    space.validate()?;
    query.validate()?;
    cfg.validate()?;

    // τ = 0 makes the James-type expression μ_t(‖x‖, ‖x‖) = 1 on the sphere.
    if let ConstantQuery::JamesType { tau, .. } = query {
        if *tau == 0.0 {
            let x = space.unit_vector_raw(0.0);
            return Ok(ComputationResult {
                query: *query,
                space: *space,
                value: 1.0,
                witness: Witness {
                    x,
                    y: x,
                    t: 1.0,
                    theta_x: 0.0,
                    theta_y: 0.0,
                    branch: Branch::ScaleY,
                },
                grid_value: 1.0,
                closed_form: None,
                abs_diff: None,
                evaluations: 0,
            });
        }
    }

    let scaled = uses_scale_branches(query.kind());
    let branches: &[Branch] = if scaled {
        &[Branch::ScaleY, Branch::ScaleX]
    } else {
        &[Branch::ScaleY]
    };
    let tables = build_tables(space, cfg, scaled);
    let (best, grid_evaluations) = grid_scan(space, query, &tables, branches)?;
    let start = witness_from(&tables, branches, &best);
    let refined = refine_local(space, query, &start, cfg)?;

    Ok(ComputationResult {
        query: *query,
        space: *space,
        value: refined.value,
        witness: refined.witness,
        grid_value: best.value,
        closed_form: None,
        abs_diff: None,
        evaluations: grid_evaluations + refined.evaluations,
    })
}

/// Runs [`compute_constant`] and compares against the known closed form,
/// flagging disagreement beyond `tol`. Errors when no closed form exists for
/// the combination.
pub fn verify_against_closed_form(
    space: &SpaceSpec,
    query: &ConstantQuery,
    cfg: &SearchConfig,
    tol: f64,
) -> Result<Verification> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::ParameterDomain(format!(
            "tolerance must be finite and > 0, got {tol}"
        )));
    }
    let closed = closed_forms::closed_form_for(space, query)?;
    let mut result = compute_constant(space, query, cfg)?;
    let abs_diff = (result.value - closed).abs();
    result.closed_form = Some(closed);
    result.abs_diff = Some(abs_diff);
    Ok(Verification {
        pass: abs_diff <= tol,
        tolerance: tol,
        result,
    })
}
