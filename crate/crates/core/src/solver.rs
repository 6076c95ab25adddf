//! Total-degree homotopy continuation for the conformal-vector systems.
//!
//! The start system is `x_i^2 = r_i` with random complex `r_i`, rotated by a
//! random gamma; all `2^n` paths are tracked with an Euler predictor and
//! Newton corrector under adaptive steps, with a target-time endgame
//! followed by Newton refinement on the target system. Endpoints are
//! deduplicated, classified by Jacobian condition, and matched against the
//! published exact solutions, which upgrades them to exact-verified records.
//!
//! Exactness is recovered through that matching step: the tracker itself
//! certifies counts and histograms, the exact lists certify values.

use crate::cyc::Cyc;
use crate::poly::{Poly, PolySystem};
use crate::rat::{rat_int, rat_sqrt_exact, rat_to_f64, rationalize, Rat};
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("{failed} of {total} paths failed after {retries} gamma retries")]
    TooManyPathFailures { failed: usize, total: usize, retries: usize },
    #[error("isolated endpoints closer than the safety floor {floor:e} (min {min:e})")]
    SeparationViolation { min: f64, floor: f64 },
}

/// Tracking parameters; the defaults implement the documented policy.
#[derive(Debug, Clone)]
pub struct TrackOptions {
    /// Worker threads for path tracking; `None` uses the process default.
    pub threads: Option<usize>,
    /// Max-norm tolerance for endpoint deduplication.
    pub dedup_tol: f64,
    /// Scaled-residual target of Newton refinement.
    pub newton_tol: f64,
    /// Endgame offset: paths are tracked to `t = 1 - endgame`.
    pub endgame: f64,
    pub min_step: f64,
    pub max_step: f64,
    /// Re-run failed paths with a fresh gamma up to this many times.
    pub max_retries: usize,
    /// Norm beyond which a path is classified as diverging to infinity.
    pub infinity: f64,
    /// Jacobian condition number beyond which an endpoint is flagged as
    /// lying on a positive-dimensional component. Isolated roots of these
    /// systems sit below 1e3; refined points on the 4A conic come out above
    /// 1e6, so the default keeps three orders of margin on each side.
    pub singular_condition: f64,
    /// Exact-match tolerance against the builtin solution list.
    pub match_tol: f64,
    /// Isolated endpoints closer than this trip a hard error; the dedup
    /// tolerance is only safe while true root separations stay far above it.
    pub separation_floor: f64,
}

impl Default for TrackOptions {
    fn default() -> Self {
        TrackOptions {
            threads: None,
            dedup_tol: 1e-8,
            newton_tol: 1e-12,
            endgame: 1e-6,
            min_step: 1e-7,
            max_step: 1e-1,
            max_retries: 3,
            infinity: 1e8,
            singular_condition: 1e5,
            match_tol: 1e-8,
            separation_floor: 1e-4,
        }
    }
}

/// A published exact solution a numerical endpoint can be matched against.
#[derive(Debug, Clone)]
pub struct ExactCandidate {
    pub name: String,
    pub coords: Vec<Cyc>,
    pub central_charge: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionStatus {
    ExactVerified,
    NumericalIsolated,
    OnPositiveDimensionalComponent,
}

/// One deduplicated endpoint of the homotopy.
#[derive(Debug, Clone)]
pub struct SolutionRecord {
    pub values: Vec<Complex64>,
    /// Exact coordinates when the endpoint matched the builtin list.
    pub exact: Option<Vec<Cyc>>,
    pub matched_name: Option<String>,
    pub status: SolutionStatus,
    /// Scaled max-norm residual after Newton refinement.
    pub residual: f64,
    /// Estimated infinity-norm condition of the Jacobian.
    pub condition: f64,
    /// Number of paths landing on this endpoint.
    pub multiplicity: usize,
    pub central_charge: Complex64,
    pub central_charge_exact: Option<Rat>,
}

impl SolutionRecord {
    pub fn is_zero_solution(&self, tol: f64) -> bool {
        self.values.iter().all(|v| v.norm() <= tol)
    }

    pub fn is_isolated(&self) -> bool {
        self.status != SolutionStatus::OnPositiveDimensionalComponent
    }
}

/// The outcome of a full enumeration run.
#[derive(Debug)]
pub struct SolutionSet {
    pub seed: u64,
    pub n: usize,
    pub bezout: u64,
    pub records: Vec<SolutionRecord>,
    /// Final outcome of every path, indexed by path id.
    pub path_status: Vec<PathStatus>,
    pub diverged_paths: usize,
    pub failed_paths: usize,
    pub retries_used: usize,
}

impl SolutionSet {
    pub fn nontrivial(&self) -> impl Iterator<Item = &SolutionRecord> {
        self.records.iter().filter(|r| !r.is_zero_solution(1e-8))
    }

    pub fn nontrivial_isolated_count(&self) -> usize {
        self.nontrivial().filter(|r| r.is_isolated()).count()
    }

    pub fn family_members(&self) -> Vec<usize> {
        self.records
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_isolated())
            .map(|(i, _)| i)
            .collect()
    }
}

/// True iff every polynomial vanishes exactly at the cyclotomic point.
pub fn verify_exact(sys: &PolySystem, candidate: &[Cyc]) -> bool {
    assert_eq!(candidate.len(), sys.n());
    sys.eval::<Cyc>(candidate).iter().all(Cyc::is_zero)
}

// --- compiled floating-point form -----------------------------------------

struct CompiledPoly {
    terms: Vec<(Option<usize>, Option<usize>, Complex64)>,
}

impl CompiledPoly {
    fn compile(p: &Poly) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| {
                let c = Complex64::new(rat_to_f64(c), 0.0);
                match m.as_slice() {
                    [] => (None, None, c),
                    [a] => (Some(*a), None, c),
                    [a, b] => (Some(*a), Some(*b), c),
                    _ => unreachable!("degree > 2"),
                }
            })
            .collect();
        CompiledPoly { terms }
    }

    fn eval(&self, x: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::zero();
        for (a, b, c) in &self.terms {
            let mut t = *c;
            if let Some(a) = a {
                t *= x[*a];
            }
            if let Some(b) = b {
                t *= x[*b];
            }
            acc += t;
        }
        acc
    }
}

struct Compiled {
    f: Vec<CompiledPoly>,
    jac: Vec<Vec<CompiledPoly>>,
    n: usize,
}

impl Compiled {
    fn new(sys: &PolySystem) -> Self {
        let f = sys.equations.iter().map(CompiledPoly::compile).collect();
        let jac = sys
            .jacobian()
            .iter()
            .map(|row| row.iter().map(CompiledPoly::compile).collect())
            .collect();
        Compiled { f, jac, n: sys.n() }
    }

    fn eval_f(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.f.iter().map(|p| p.eval(x)).collect()
    }

    fn eval_jac(&self, x: &[Complex64]) -> Vec<Vec<Complex64>> {
        self.jac.iter().map(|row| row.iter().map(|p| p.eval(x)).collect()).collect()
    }
}

// --- dense complex linear algebra ------------------------------------------

/// Solve `A x = b` in place by LU with partial pivoting; `None` on a
/// numerically singular pivot.
fn lu_solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let (piv, mag) = (col..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = Complex64::one() / a[col][col];
        for r in (col + 1)..n {
            let f = a[r][col] * inv;
            if f != Complex64::zero() {
                for c in (col + 1)..n {
                    let t = f * a[col][c];
                    a[r][c] -= t;
                }
                let t = f * b[col];
                b[r] -= t;
            }
        }
    }
    for col in (0..n).rev() {
        let mut acc = b[col];
        for c in (col + 1)..n {
            acc -= a[col][c] * b[c];
        }
        b[col] = acc / a[col][col];
    }
    Some(b)
}

fn inf_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn mat_inf_norm(m: &[Vec<Complex64>]) -> f64 {
    m.iter().map(|row| row.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Infinity-norm condition estimate via explicit inverse columns.
fn condition_estimate(jac: &[Vec<Complex64>]) -> f64 {
    let n = jac.len();
    let norm_a = mat_inf_norm(jac);
    let mut inv_cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = vec![Complex64::zero(); n];
        e[k] = Complex64::one();
        match lu_solve(jac.to_vec(), e) {
            Some(col) => inv_cols.push(col),
            None => return f64::INFINITY,
        }
    }
    let norm_inv = (0..n)
        .map(|r| (0..n).map(|c| inv_cols[c][r].norm()).sum::<f64>())
        .fold(0.0, f64::max);
    norm_a * norm_inv
}

// --- path tracking ----------------------------------------------------------

enum PathOutcome {
    Converged(Vec<Complex64>),
    Diverged,
    Failed,
}

/// Per-path outcome, indexed by path id in the solution set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathStatus {
    Converged,
    Diverged,
    Failed,
}

/// Track one path of `H(x, t) = (1 - t) gamma (x_i^2 - r_i) + t F(x)` from
/// `t = 0` to `t = 1 - endgame`, then hand over to Newton on `F`.
fn track_path(
    sys: &Compiled,
    start_r: &[Complex64],
    gamma: Complex64,
    x0: Vec<Complex64>,
    opts: &TrackOptions,
) -> PathOutcome {
    let n = sys.n;
    let t_end = 1.0 - opts.endgame;
    let h_val = |x: &[Complex64], t: f64| -> Vec<Complex64> {
        let f = sys.eval_f(x);
        (0..n)
            .map(|i| gamma * (1.0 - t) * (x[i] * x[i] - start_r[i]) + t * f[i])
            .collect()
    };
    let h_jac = |x: &[Complex64], t: f64| -> Vec<Vec<Complex64>> {
        let mut j = sys.eval_jac(x);
        for (i, row) in j.iter_mut().enumerate() {
            for v in row.iter_mut() {
                *v *= t;
            }
            row[i] += gamma * (1.0 - t) * 2.0 * x[i];
        }
        j
    };
    let h_dt = |x: &[Complex64]| -> Vec<Complex64> {
        let f = sys.eval_f(x);
        (0..n).map(|i| f[i] - gamma * (x[i] * x[i] - start_r[i])).collect()
    };

    let mut x = x0;
    let mut t = 0.0f64;
    let mut dt = opts.max_step.min(1e-2);
    let mut streak = 0u32;
    while t < t_end {
        if inf_norm(&x) > opts.infinity {
            return PathOutcome::Diverged;
        }
        let step = dt.min(t_end - t);
        // Euler predictor along the Davidenko flow
        let rhs: Vec<Complex64> = h_dt(&x).iter().map(|v| -v).collect();
        let Some(vel) = lu_solve(h_jac(&x, t), rhs) else {
            dt *= 0.5;
            if dt < opts.min_step {
                return PathOutcome::Failed;
            }
            continue;
        };
        let mut xn: Vec<Complex64> =
            x.iter().zip(&vel).map(|(xi, vi)| xi + vi * step).collect();
        // Newton corrector at t + step
        let tn = t + step;
        let mut ok = false;
        for _ in 0..3 {
            let hv = h_val(&xn, tn);
            if inf_norm(&hv) < 1e-10 * (1.0 + inf_norm(&xn)) {
                ok = true;
                break;
            }
            let rhs: Vec<Complex64> = hv.iter().map(|v| -v).collect();
            match lu_solve(h_jac(&xn, tn), rhs) {
                Some(dx) => {
                    for (xi, di) in xn.iter_mut().zip(&dx) {
                        *xi += di;
                    }
                }
                None => break,
            }
        }
        if ok {
            let hv = h_val(&xn, tn);
            ok = inf_norm(&hv) < 1e-8 * (1.0 + inf_norm(&xn));
        }
        if ok {
            x = xn;
            t = tn;
            streak += 1;
            if streak >= 3 {
                dt = (dt * 1.5).min(opts.max_step);
                streak = 0;
            }
        } else {
            streak = 0;
            dt *= 0.5;
            if dt < opts.min_step {
                return PathOutcome::Failed;
            }
        }
    }
    // endgame: plain Newton on the target system
    match newton_refine(sys, &mut x, opts) {
        NewtonOutcome::Converged | NewtonOutcome::Stagnated => {
            if inf_norm(&x) > opts.infinity {
                PathOutcome::Diverged
            } else {
                PathOutcome::Converged(x)
            }
        }
        NewtonOutcome::Diverged => PathOutcome::Diverged,
    }
}

enum NewtonOutcome {
    Converged,
    Stagnated,
    Diverged,
}

fn scaled_residual(sys: &Compiled, x: &[Complex64]) -> f64 {
    inf_norm(&sys.eval_f(x)) / (1.0 + inf_norm(x)).powi(2)
}

/// Damped Newton iteration on the target system. On singular Jacobians a
/// small Levenberg shift keeps the iteration pointed at the variety.
fn newton_refine(sys: &Compiled, x: &mut Vec<Complex64>, opts: &TrackOptions) -> NewtonOutcome {
    let mut res = scaled_residual(sys, x);
    for _ in 0..60 {
        if res <= opts.newton_tol * 1e-2 {
            return NewtonOutcome::Converged;
        }
        if inf_norm(x) > opts.infinity {
            return NewtonOutcome::Diverged;
        }
        let f = sys.eval_f(x);
        let mut jac = sys.eval_jac(x);
        let rhs: Vec<Complex64> = f.iter().map(|v| -v).collect();
        let dx = match lu_solve(jac.clone(), rhs.clone()) {
            Some(dx) => dx,
            None => {
                for (i, row) in jac.iter_mut().enumerate() {
                    row[i] += Complex64::new(1e-10, 0.0);
                }
                match lu_solve(jac, rhs) {
                    Some(dx) => dx,
                    None => return NewtonOutcome::Stagnated,
                }
            }
        };
        // damping
        let mut lam = 1.0f64;
        let mut improved = false;
        for _ in 0..6 {
            let xn: Vec<Complex64> = x.iter().zip(&dx).map(|(a, d)| a + d * lam).collect();
            let rn = scaled_residual(sys, &xn);
            if rn < res {
                *x = xn;
                res = rn;
                improved = true;
                break;
            }
            lam *= 0.5;
        }
        if !improved {
            return if res <= 1e-6 { NewtonOutcome::Stagnated } else { NewtonOutcome::Diverged };
        }
    }
    if res <= 1e-6 {
        NewtonOutcome::Stagnated
    } else {
        NewtonOutcome::Diverged
    }
}

// --- enumeration ------------------------------------------------------------

/// Track all `2^n` total-degree paths and return the deduplicated,
/// classified, exact-matched endpoint set.
pub fn enumerate(
    sys: &PolySystem,
    seed: u64,
    candidates: &[ExactCandidate],
    opts: &TrackOptions,
) -> Result<SolutionSet, SolveError> {
    let n = sys.n();
    assert!(n <= 8, "total-degree enumeration limited to 8 variables");
    let compiled = Compiled::new(sys);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw_gamma = |rng: &mut ChaCha8Rng| -> Complex64 {
        Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
    };
    let gamma = draw_gamma(&mut rng);
    let start_r: Vec<Complex64> = (0..n)
        .map(|_| {
            let m = rng.gen_range(0.5..1.5);
            let a = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(m, a)
        })
        .collect();
    let sqrt_r: Vec<Complex64> = start_r.iter().map(|r| r.sqrt()).collect();
    let total = 1usize << n;
    let start_points: Vec<Vec<Complex64>> = (0..total)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { -sqrt_r[i] } else { sqrt_r[i] })
                .collect()
        })
        .collect();

    let run = |gamma: Complex64, points: &[(usize, Vec<Complex64>)]| -> Vec<(usize, PathOutcome)> {
        let work = |(id, x0): &(usize, Vec<Complex64>)| {
            (*id, track_path(&compiled, &start_r, gamma, x0.clone(), opts))
        };
        match opts.threads {
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .expect("thread pool");
                pool.install(|| points.par_iter().map(work).collect())
            }
            None => points.par_iter().map(work).collect(),
        }
    };

    let mut outcomes: BTreeMap<usize, PathOutcome> = BTreeMap::new();
    let mut pending: Vec<(usize, Vec<Complex64>)> =
        start_points.into_iter().enumerate().collect();
    let mut retries_used = 0usize;
    let mut current_gamma = gamma;
    loop {
        for (id, out) in run(current_gamma, &pending) {
            outcomes.insert(id, out);
        }
        let failed: Vec<usize> = outcomes
            .iter()
            .filter(|(_, o)| matches!(o, PathOutcome::Failed))
            .map(|(id, _)| *id)
            .collect();
        if failed.is_empty() || retries_used >= opts.max_retries {
            break;
        }
        retries_used += 1;
        current_gamma = draw_gamma(&mut rng);
        pending = failed
            .into_iter()
            .map(|id| {
                let x0: Vec<Complex64> = (0..n)
                    .map(|i| if id >> i & 1 == 1 { -sqrt_r[i] } else { sqrt_r[i] })
                    .collect();
                (id, x0)
            })
            .collect();
    }

    let mut endpoints: Vec<Vec<Complex64>> = Vec::new();
    let mut path_status = vec![PathStatus::Failed; total];
    let mut diverged = 0usize;
    let mut failed = 0usize;
    for (id, o) in outcomes {
        match o {
            PathOutcome::Converged(x) => {
                path_status[id] = PathStatus::Converged;
                endpoints.push(x);
            }
            PathOutcome::Diverged => {
                path_status[id] = PathStatus::Diverged;
                diverged += 1;
            }
            PathOutcome::Failed => {
                path_status[id] = PathStatus::Failed;
                failed += 1;
            }
        }
    }
    if (failed as f64) > 0.005 * (total as f64) {
        return Err(SolveError::TooManyPathFailures { failed, total, retries: retries_used });
    }

    // deterministic order before dedup
    endpoints.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b) {
            match x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    });
    // union-find clustering at the dedup tolerance
    let k = endpoints.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let d = endpoints[i]
                .iter()
                .zip(&endpoints[j])
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if d <= opts.dedup_tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[rj.max(ri)] = rj.min(ri);
                }
            }
        }
    }
    let mut clusters: BTreeMap<usize, (Vec<Complex64>, usize)> = BTreeMap::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        clusters
            .entry(r)
            .and_modify(|(_, m)| *m += 1)
            .or_insert_with(|| (endpoints[i].clone(), 1));
    }

    let cc_compiled = CompiledPoly::compile(&sys.central_charge);
    let mut records: Vec<SolutionRecord> = Vec::new();
    for (_, (values, multiplicity)) in clusters {
        let residual = scaled_residual(&compiled, &values);
        let condition = condition_estimate(&compiled.eval_jac(&values));
        let status = if condition > opts.singular_condition {
            SolutionStatus::OnPositiveDimensionalComponent
        } else {
            SolutionStatus::NumericalIsolated
        };
        let central_charge = cc_compiled.eval(&values);
        let mut rec = SolutionRecord {
            values,
            exact: None,
            matched_name: None,
            status,
            residual,
            condition,
            multiplicity,
            central_charge,
            central_charge_exact: None,
        };
        // match against the exact list
        for cand in candidates {
            let dist = rec
                .values
                .iter()
                .zip(&cand.coords)
                .map(|(v, c)| (v - c.to_complex()).norm())
                .fold(0.0, f64::max);
            if dist <= opts.match_tol {
                debug_assert!(verify_exact(sys, &cand.coords), "candidate {} not exact", cand.name);
                rec.exact = Some(cand.coords.clone());
                rec.matched_name = Some(cand.name.clone());
                rec.central_charge_exact = Some(cand.central_charge.clone());
                if rec.status == SolutionStatus::NumericalIsolated {
                    rec.status = SolutionStatus::ExactVerified;
                }
                break;
            }
        }
        records.push(rec);
    }

    // runtime guard behind the dedup tolerance: isolated roots of these
    // systems are separated by far more than 1e-4
    let iso: Vec<&SolutionRecord> = records.iter().filter(|r| r.is_isolated()).collect();
    let mut min_sep = f64::INFINITY;
    for i in 0..iso.len() {
        for j in (i + 1)..iso.len() {
            let d = iso[i]
                .values
                .iter()
                .zip(&iso[j].values)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            min_sep = min_sep.min(d);
        }
    }
    let floor = opts.separation_floor;
    if min_sep < floor {
        return Err(SolveError::SeparationViolation { min: min_sep, floor });
    }

    Ok(SolutionSet {
        seed,
        n,
        bezout: sys.bezout(),
        records,
        path_status,
        diverged_paths: diverged,
        failed_paths: failed,
        retries_used,
    })
}

// --- histogram ---------------------------------------------------------------

/// Central-charge histogram over the nontrivial isolated endpoints.
///
/// Classes come from continued-fraction reconstruction (denominator bound
/// and tolerance as given), so an irrational charge with a freakishly good
/// small-denominator convergent can land in a rational class; the checks
/// built on this histogram only consume classes whose exactness is
/// confirmed elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    pub classes: Vec<(Rat, usize)>,
    /// Endpoints whose central charge admits no rational reconstruction.
    pub irrational: usize,
}

pub fn histogram(set: &SolutionSet) -> Histogram {
    histogram_with(set, 10_000, 1e-9)
}

pub fn histogram_with(set: &SolutionSet, max_den: u64, tol: f64) -> Histogram {
    let mut classes: BTreeMap<Rat, usize> = BTreeMap::new();
    let mut irrational = 0usize;
    for r in set.nontrivial().filter(|r| r.is_isolated()) {
        if let Some(cc) = &r.central_charge_exact {
            *classes.entry(cc.clone()).or_insert(0) += 1;
            continue;
        }
        let z = r.central_charge;
        let rec = if z.im.abs() <= tol { rationalize(z.re, max_den, tol) } else { None };
        match rec {
            Some(q) => *classes.entry(q).or_insert(0) += 1,
            None => irrational += 1,
        }
    }
    Histogram { classes: classes.into_iter().collect(), irrational }
}

// --- families ----------------------------------------------------------------

/// A reported positive-dimensional component: the endpoints flagged by the
/// condition threshold (the systems at hand have at most one such
/// component, the 4A conic, so no sub-clustering is attempted).
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub members: Vec<usize>,
}

pub fn detect_families(set: &SolutionSet) -> Vec<FamilyReport> {
    let members = set.family_members();
    if members.is_empty() {
        Vec::new()
    } else {
        vec![FamilyReport { members }]
    }
}

/// `a + b sqrt(root)` with exact rational parts: the quadratic extension the
/// 4A family lives in when `1 - 240 d^2` is not a rational square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
}

impl QuadExt {
    fn rational(a: Rat) -> Self {
        QuadExt { a, b: Rat::zero() }
    }

    fn add(&self, o: &Self) -> Self {
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    fn mul(&self, o: &Self, root: &Rat) -> Self {
        QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * root,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

fn eval_poly_quadext(p: &Poly, point: &[QuadExt], root: &Rat) -> QuadExt {
    let mut acc = QuadExt::rational(Rat::zero());
    for (m, c) in p.terms() {
        let mut t = QuadExt::rational(c.clone());
        for &v in m {
            t = t.mul(&point[v], root);
        }
        acc = acc.add(&t);
    }
    acc
}

/// Outcome of one exact substitution of the 4A parametric family
/// `((1 +- sqrt(1 - 240 d^2))/2, (1 -+ sqrt(1 - 240 d^2))/2, 0, d, 0)`.
#[derive(Debug, Clone)]
pub struct ParametricSample {
    pub d: Rat,
    /// Whether `1 - 240 d^2` was a rational square (then the substitution is
    /// fully rational), else the check ran in `Q[s]/(s^2 - (1 - 240 d^2))`.
    pub rational_square: bool,
    pub solves_system: bool,
    pub central_charge_is_one: bool,
}

/// Verify the 4A family formula by exact substitution at sampled rational
/// `d`, both square-root branches at once.
pub fn verify_parametric_family_4a(sys: &PolySystem, samples: &[Rat]) -> Vec<ParametricSample> {
    assert_eq!(sys.n(), 5, "the parametric family lives in the 4A system");
    let half = crate::rat::rat(1, 2);
    samples
        .iter()
        .map(|d| {
            let root = rat_int(1) - rat_int(240) * d * d;
            match rat_sqrt_exact(&root) {
                Some(s) => {
                    let mut ok = true;
                    let mut cc_ok = true;
                    for sign in [Rat::one(), -Rat::one()] {
                        let a = (&Rat::one() + &(&sign * &s)) * &half;
                        let b = (&Rat::one() - &(sign * &s)) * &half;
                        let point =
                            vec![a, b, Rat::zero(), d.clone(), Rat::zero()];
                        ok &= sys.equations.iter().all(|p| p.eval::<Rat>(&point).is_zero());
                        cc_ok &= sys.central_charge.eval::<Rat>(&point) == Rat::one();
                    }
                    ParametricSample {
                        d: d.clone(),
                        rational_square: true,
                        solves_system: ok,
                        central_charge_is_one: cc_ok,
                    }
                }
                None => {
                    // formal branch: a = (1 + s)/2, b = (1 - s)/2, s^2 = root;
                    // vanishing in Q[s]/(s^2 - root) covers both branches
                    let a = QuadExt { a: half.clone(), b: half.clone() };
                    let b = QuadExt { a: half.clone(), b: -half.clone() };
                    let point = vec![
                        a,
                        b,
                        QuadExt::rational(Rat::zero()),
                        QuadExt::rational(d.clone()),
                        QuadExt::rational(Rat::zero()),
                    ];
                    let ok = sys
                        .equations
                        .iter()
                        .all(|p| eval_poly_quadext(p, &point, &root).is_zero());
                    let cc = eval_poly_quadext(&sys.central_charge, &point, &root);
                    ParametricSample {
                        d: d.clone(),
                        rational_square: false,
                        solves_system: ok,
                        central_charge_is_one: cc == QuadExt::rational(Rat::one()),
                    }
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial_system;
    use crate::cases::CaseLabel;
    use crate::refdata::{builtin_griess_table, builtin_solutions, expected_polynomial_system};
    use crate::rat::rat;

    fn candidates(label: CaseLabel) -> Vec<ExactCandidate> {
        builtin_solutions(label)
            .into_iter()
            .map(|s| ExactCandidate {
                name: s.name,
                coords: s.coords,
                central_charge: s.central_charge,
            })
            .collect()
    }

    #[test]
    fn verify_exact_on_published_tuples() {
        // 4B tuple with central charge 7/10
        let sys = expected_polynomial_system(CaseLabel::FourB);
        let p: Vec<Cyc> = [rat(7, 8), rat(3, 16), rat(1, 32), rat(3, 160), rat(1, 32)]
            .into_iter()
            .map(Cyc::from_rat)
            .collect();
        assert!(verify_exact(&sys, &p));
        // 4A tuple with zeta_8 entries
        let sys = expected_polynomial_system(CaseLabel::FourA);
        let p = vec![
            Cyc::from_rat(rat(1, 7)),
            Cyc::from_rat(rat(5, 7)),
            Cyc::root_of_unity(8, 1).scale(&rat(1, 28)),
            Cyc::zero(),
            Cyc::root_of_unity(8, -1).scale(&rat(1, 28)),
        ];
        assert!(verify_exact(&sys, &p));
        // zero solves everything
        let z = vec![Cyc::zero(); 5];
        assert!(verify_exact(&sys, &z));
        // and a perturbed tuple does not
        let mut bad = p;
        bad[0] = Cyc::from_rat(rat(2, 7));
        assert!(!verify_exact(&sys, &bad));
    }

    #[test]
    fn two_b_endpoints() {
        let sys = polynomial_system(&builtin_griess_table(CaseLabel::TwoB));
        let set = enumerate(&sys, 0, &candidates(CaseLabel::TwoB), &TrackOptions::default())
            .expect("run");
        assert_eq!(set.records.len(), 4); // 0, (1,0), (1/2, +-1/32)
        assert_eq!(set.nontrivial_isolated_count(), 3);
        let matched: Vec<&str> = set
            .records
            .iter()
            .filter_map(|r| r.matched_name.as_deref())
            .collect();
        assert_eq!(matched.len(), 3);
        for r in &set.records {
            assert!(r.residual <= 1e-12, "residual {}", r.residual);
        }
    }

    #[test]
    fn one_a_endpoints() {
        let sys = expected_polynomial_system(CaseLabel::OneA);
        let set = enumerate(&sys, 5, &candidates(CaseLabel::OneA), &TrackOptions::default())
            .expect("run");
        assert_eq!(set.records.len(), 2);
        assert_eq!(set.nontrivial_isolated_count(), 1);
    }

    #[test]
    fn determinism_under_fixed_seed() {
        let sys = polynomial_system(&builtin_griess_table(CaseLabel::ThreeC));
        let a = enumerate(&sys, 42, &candidates(CaseLabel::ThreeC), &TrackOptions::default())
            .expect("run a");
        let b = enumerate(&sys, 42, &candidates(CaseLabel::ThreeC), &TrackOptions::default())
            .expect("run b");
        assert_eq!(a.records.len(), b.records.len());
        for (x, y) in a.records.iter().zip(&b.records) {
            assert_eq!(x.values, y.values);
            assert_eq!(x.matched_name, y.matched_name);
        }
        // and a different thread count gives the same endpoint set
        let opts = TrackOptions { threads: Some(2), ..TrackOptions::default() };
        let c = enumerate(&sys, 42, &candidates(CaseLabel::ThreeC), &opts).expect("run c");
        for (x, y) in a.records.iter().zip(&c.records) {
            assert_eq!(x.values, y.values);
        }
    }

    #[test]
    fn three_a_histogram_counts_the_reference_tuples() {
        let sys = polynomial_system(&builtin_griess_table(CaseLabel::ThreeA));
        let set = enumerate(&sys, 3, &candidates(CaseLabel::ThreeA), &TrackOptions::default())
            .expect("run");
        let h = histogram(&set);
        let want: Vec<(Rat, usize)> = [
            (rat(1, 2), 3usize),
            (rat(4, 5), 4),
            (rat(6, 7), 4),
            (rat(81, 70), 3),
            (rat(58, 35), 1),
        ]
        .into_iter()
        .collect();
        let mut want = want;
        want.sort();
        assert_eq!(h.classes, want);
        assert_eq!(h.irrational, 0);
        assert!(detect_families(&set).is_empty());
    }

    #[test]
    fn histogram_of_empty_set_is_empty() {
        let sys = expected_polynomial_system(CaseLabel::OneA);
        let set = SolutionSet {
            seed: 0,
            n: sys.n(),
            bezout: sys.bezout(),
            records: Vec::new(),
            path_status: Vec::new(),
            diverged_paths: 0,
            failed_paths: 0,
            retries_used: 0,
        };
        let h = histogram(&set);
        assert!(h.classes.is_empty());
        assert_eq!(h.irrational, 0);
    }

    #[test]
    fn parametric_family_samples() {
        let sys = expected_polynomial_system(CaseLabel::FourA);
        let samples = [rat(1, 100), rat(1, 30), rat(1, 16)];
        let out = verify_parametric_family_4a(&sys, &samples);
        assert_eq!(out.len(), 3);
        for s in &out {
            assert!(s.solves_system, "d = {}", s.d);
            assert!(s.central_charge_is_one, "d = {}", s.d);
        }
        // 1 - 240/256 = 1/16 is a rational square
        assert!(out[2].rational_square);
        assert!(!out[0].rational_square);
        assert!(!out[1].rational_square);
    }
}
