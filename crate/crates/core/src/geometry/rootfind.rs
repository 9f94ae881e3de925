//! Bracketing and bisection on wrapped angular residuals.
//!
//! The transcendental departure-time solves (disc-to-point, disc-to-disc)
//! have no closed form: the departure angle of the tangent moves as both
//! radii change while the robot's spiral angle advances. The residual is
//! the wrapped difference of the two angles; it is scanned over the search
//! window and each sign-changing bracket is bisected. Brackets whose
//! endpoint residuals differ by more than pi are wrap artifacts, not roots,
//! and are skipped.

use super::TIME_TOL;

/// Residual evaluation: `None` where the configuration is undefined (no
/// tangent exists at that departure time).
pub(crate) type Residual<'a> = dyn Fn(f64) -> Option<f64> + 'a;

/// Scans `[lo, hi]` at `step`, bisecting every valid bracket, and returns
/// the roots in ascending order. A sample with |residual| below `snap_tol`
/// is accepted as a root directly, which catches departures that are
/// feasible immediately at the window start.
pub(crate) fn scan_roots(f: &Residual, lo: f64, hi: f64, step: f64, snap_tol: f64) -> Vec<f64> {
    let mut roots: Vec<f64> = Vec::new();
    if !(hi > lo) || !(step > 0.0) {
        return roots;
    }
    let mut push = |t: f64, roots: &mut Vec<f64>| {
        if roots.last().map_or(true, |&r| t - r > 10.0 * TIME_TOL) {
            roots.push(t);
        }
    };

    let n = ((hi - lo) / step).ceil() as usize;
    let mut prev: Option<(f64, f64)> = None;
    for k in 0..=n {
        let t = if k == n { hi } else { lo + step * k as f64 };
        let val = f(t);
        match val {
            None => {
                prev = None;
            }
            Some(v) => {
                if v.abs() < snap_tol {
                    push(t, &mut roots);
                    prev = Some((t, v));
                    continue;
                }
                if let Some((t0, v0)) = prev {
                    if v0 * v < 0.0 && (v0 - v).abs() < std::f64::consts::PI {
                        if let Some(r) = bisect(f, t0, t, v0) {
                            push(r, &mut roots);
                        }
                    }
                }
                prev = Some((t, v));
            }
        }
    }
    roots
}

/// Bisects a sign-changing bracket down to [`TIME_TOL`].
fn bisect(f: &Residual, mut lo: f64, mut hi: f64, f_lo: f64) -> Option<f64> {
    let mut sign_lo = f_lo.signum();
    for _ in 0..200 {
        if hi - lo <= TIME_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let v = f(mid)?;
        if v == 0.0 {
            return Some(mid);
        }
        if v.signum() == sign_lo {
            lo = mid;
            sign_lo = v.signum();
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Monotone bisection: largest `x` in `[lo, hi]` with `pred(x)` true,
/// assuming `pred` is true on a prefix. Returns `None` when `pred(lo)` is
/// false. Used for feasibility searches over arrival values.
pub(crate) fn bisect_predicate<F: FnMut(f64) -> bool>(
    mut pred: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Option<f64> {
    if !pred(lo) {
        return None;
    }
    if pred(hi) {
        return Some(hi);
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}
