use crate::error::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// Absolute tolerance used when callers do not pick one.
pub const DEFAULT_QUAD_TOL: f64 = 1e-7;
/// Tightest tolerance accepted; below this roundoff in the integrand dominates.
pub const MIN_QUAD_TOL: f64 = 1e-10;
/// Bisection depth cap.
pub const MAX_QUAD_DEPTH: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

struct Simpson<F> {
    f: F,
    evaluations: usize,
    error: f64,
}

impl<F: FnMut(f64) -> Result<f64>> Simpson<F> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        self.evaluations += 1;
        (self.f)(x)
    }

    fn refine(&mut self, p: Panel, tol: f64, depth: u32) -> Result<f64> {
        let m = 0.5 * (p.a + p.b);
        let (lm, rm) = (0.5 * (p.a + m), 0.5 * (m + p.b));
        let (flm, frm) = (self.eval(lm)?, self.eval(rm)?);
        let h = p.b - p.a;
        let left = h * (p.fa + 4.0 * flm + p.fm) / 12.0;
        let right = h * (p.fm + 4.0 * frm + p.fb) / 12.0;
        let delta = left + right - p.whole;
        if delta.abs() <= 15.0 * tol || depth >= MAX_QUAD_DEPTH {
            self.error += delta.abs() / 15.0;
            return Ok(left + right + delta / 15.0);
        }
        let l = Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
        };
        let r = Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
        };
        Ok(self.refine(l, 0.5 * tol, depth + 1)? + self.refine(r, 0.5 * tol, depth + 1)?)
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Panels are bisected until the Simpson/half-step difference meets the
/// locally halved tolerance; accepted panels get the Richardson correction.
/// Fails when the summed error estimate of all accepted panels exceeds `tol`,
/// which only happens when panels hit the depth cap.
pub fn adaptive_simpson(
    f: impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !tol.is_finite() || tol < MIN_QUAD_TOL {
        return Err(Error::OutOfRange {
            name: "quadrature tolerance",
            value: tol,
        });
    }
    let mut s = Simpson {
        f,
        evaluations: 0,
        error: 0.0,
    };
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (s.eval(a)?, s.eval(m)?, s.eval(b)?);
    let whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    let value = s.refine(
        Panel {
            a,
            b,
            fa,
            fm,
            fb,
            whole,
        },
        tol,
        0,
    )?;
    if s.error > tol {
        return Err(Error::QuadratureNoConvergence {
            error_estimate: s.error,
            tolerance: tol,
        });
    }
    Ok(QuadratureResult {
        value,
        abs_error_estimate: s.error,
        evaluations: s.evaluations,
    })
}
