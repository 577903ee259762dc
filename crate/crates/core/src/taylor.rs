//! Second-order forward-mode derivative arithmetic in two variables.
//!
//! [`Jet`] carries a value together with its gradient and Hessian with
//! respect to two independent variables. Arithmetic and the elementary
//! functions propagate all five derivatives through the chain rule, so any
//! closed-form expression built from jets evaluates to the exact analytic
//! 2-jet of the composite (up to rounding). This is what makes user-defined
//! graph surfaces work without symbolic differentiation.
//!
//! The Hessian is stored as the three independent entries `dxx, dxy, dyy`;
//! symmetry of second derivatives is built into the representation.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Value, gradient and Hessian of a scalar function of two variables.
///
/// For a graph surface `t = f(x, y)` this is exactly the scalar 2-jet
/// `(f, f_x, f_y, f_xx, f_xy, f_yy)` at a parameter point.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Jet {
    pub val: f64,
    pub dx: f64,
    pub dy: f64,
    pub dxx: f64,
    pub dxy: f64,
    pub dyy: f64,
}

impl Jet {
    pub const ZERO: Jet = Jet::constant(0.0);

    /// Constant jet: all derivatives vanish.
    #[inline]
    pub const fn constant(val: f64) -> Self {
        Jet { val, dx: 0.0, dy: 0.0, dxx: 0.0, dxy: 0.0, dyy: 0.0 }
    }

    /// Seed for the first independent variable (`dx = 1`).
    #[inline]
    pub const fn var_x(val: f64) -> Self {
        Jet { val, dx: 1.0, dy: 0.0, dxx: 0.0, dxy: 0.0, dyy: 0.0 }
    }

    /// Seed for the second independent variable (`dy = 1`).
    #[inline]
    pub const fn var_y(val: f64) -> Self {
        Jet { val, dx: 0.0, dy: 1.0, dxx: 0.0, dxy: 0.0, dyy: 0.0 }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.val.is_finite()
            && self.dx.is_finite()
            && self.dy.is_finite()
            && self.dxx.is_finite()
            && self.dxy.is_finite()
            && self.dyy.is_finite()
    }

    /// Compose with a scalar function given its value and first two
    /// derivatives at `self.val`.
    ///
    /// For `g(f)`: the gradient picks up `g'`, the Hessian the usual
    /// `g''·∇f∇fᵀ + g'·Hess f`.
    #[inline]
    pub fn chain(self, g: f64, dg: f64, ddg: f64) -> Self {
        Jet {
            val: g,
            dx: dg * self.dx,
            dy: dg * self.dy,
            dxx: ddg * self.dx * self.dx + dg * self.dxx,
            dxy: ddg * self.dx * self.dy + dg * self.dxy,
            dyy: ddg * self.dy * self.dy + dg * self.dyy,
        }
    }

    #[inline]
    pub fn sin(self) -> Self {
        let (s, c) = self.val.sin_cos();
        self.chain(s, c, -s)
    }

    #[inline]
    pub fn cos(self) -> Self {
        let (s, c) = self.val.sin_cos();
        self.chain(c, -s, -c)
    }

    #[inline]
    pub fn tan(self) -> Self {
        let t = self.val.tan();
        let d = 1.0 + t * t;
        self.chain(t, d, 2.0 * t * d)
    }

    #[inline]
    pub fn sinh(self) -> Self {
        self.chain(self.val.sinh(), self.val.cosh(), self.val.sinh())
    }

    #[inline]
    pub fn cosh(self) -> Self {
        self.chain(self.val.cosh(), self.val.sinh(), self.val.cosh())
    }

    #[inline]
    pub fn tanh(self) -> Self {
        let t = self.val.tanh();
        let sech2 = 1.0 - t * t;
        self.chain(t, sech2, -2.0 * t * sech2)
    }

    /// `1 / cosh`, convenient for the helicoid family.
    #[inline]
    pub fn sech(self) -> Self {
        self.cosh().recip()
    }

    #[inline]
    pub fn exp(self) -> Self {
        let e = self.val.exp();
        self.chain(e, e, e)
    }

    /// Natural logarithm; the caller is responsible for a positive argument
    /// (non-positive arguments propagate NaN, which surface evaluation
    /// reports as a domain error).
    #[inline]
    pub fn ln(self) -> Self {
        let inv = 1.0 / self.val;
        self.chain(self.val.ln(), inv, -inv * inv)
    }

    #[inline]
    pub fn atan(self) -> Self {
        let d = 1.0 / (1.0 + self.val * self.val);
        self.chain(self.val.atan(), d, -2.0 * self.val * d * d)
    }

    #[inline]
    pub fn sqrt(self) -> Self {
        let r = self.val.sqrt();
        self.chain(r, 0.5 / r, -0.25 / (r * self.val))
    }

    #[inline]
    pub fn recip(self) -> Self {
        let inv = 1.0 / self.val;
        self.chain(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    /// Integer power by the chain rule (exact for negative bases too).
    pub fn powi(self, n: i32) -> Self {
        match n {
            0 => Jet::constant(1.0),
            1 => self,
            _ => {
                let v = self.val;
                let g = v.powi(n);
                let dg = f64::from(n) * v.powi(n - 1);
                let ddg = f64::from(n) * f64::from(n - 1) * v.powi(n - 2);
                self.chain(g, dg, ddg)
            }
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    #[inline]
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            val: self.val + rhs.val,
            dx: self.dx + rhs.dx,
            dy: self.dy + rhs.dy,
            dxx: self.dxx + rhs.dxx,
            dxy: self.dxy + rhs.dxy,
            dyy: self.dyy + rhs.dyy,
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    #[inline]
    fn sub(self, rhs: Jet) -> Jet {
        Jet {
            val: self.val - rhs.val,
            dx: self.dx - rhs.dx,
            dy: self.dy - rhs.dy,
            dxx: self.dxx - rhs.dxx,
            dxy: self.dxy - rhs.dxy,
            dyy: self.dyy - rhs.dyy,
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    #[inline]
    fn mul(self, rhs: Jet) -> Jet {
        // (fg)'' = f''g + 2f'g' + fg''
        Jet {
            val: self.val * rhs.val,
            dx: self.dx * rhs.val + self.val * rhs.dx,
            dy: self.dy * rhs.val + self.val * rhs.dy,
            dxx: self.dxx * rhs.val + 2.0 * self.dx * rhs.dx + self.val * rhs.dxx,
            dxy: self.dxy * rhs.val
                + self.dx * rhs.dy
                + self.dy * rhs.dx
                + self.val * rhs.dxy,
            dyy: self.dyy * rhs.val + 2.0 * self.dy * rhs.dy + self.val * rhs.dyy,
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn div(self, rhs: Jet) -> Jet {
        self * rhs.recip()
    }
}

impl Neg for Jet {
    type Output = Jet;
    #[inline]
    fn neg(self) -> Jet {
        Jet {
            val: -self.val,
            dx: -self.dx,
            dy: -self.dy,
            dxx: -self.dxx,
            dxy: -self.dxy,
            dyy: -self.dyy,
        }
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    #[inline]
    fn add(self, rhs: f64) -> Jet {
        Jet { val: self.val + rhs, ..self }
    }
}

impl Add<Jet> for f64 {
    type Output = Jet;
    #[inline]
    fn add(self, rhs: Jet) -> Jet {
        rhs + self
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    #[inline]
    fn sub(self, rhs: f64) -> Jet {
        Jet { val: self.val - rhs, ..self }
    }
}

impl Sub<Jet> for f64 {
    type Output = Jet;
    #[inline]
    fn sub(self, rhs: Jet) -> Jet {
        -rhs + self
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    #[inline]
    fn mul(self, rhs: f64) -> Jet {
        Jet {
            val: self.val * rhs,
            dx: self.dx * rhs,
            dy: self.dy * rhs,
            dxx: self.dxx * rhs,
            dxy: self.dxy * rhs,
            dyy: self.dyy * rhs,
        }
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    #[inline]
    fn mul(self, rhs: Jet) -> Jet {
        rhs * self
    }
}

impl Div<f64> for Jet {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn div(self, rhs: f64) -> Jet {
        self * (1.0 / rhs)
    }
}

impl Div<Jet> for f64 {
    type Output = Jet;
    #[allow(clippy::suspicious_arithmetic_impl)]
    #[inline]
    fn div(self, rhs: Jet) -> Jet {
        rhs.recip() * self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: f64 = 1e-4;

    /// Central-difference 2-jet of a closed-form scalar function, used as an
    /// independent oracle for the propagated derivatives. Second differences
    /// carry a rounding floor around `ε/H² ≈ 1e−8`, which sets the
    /// comparison tolerance.
    fn fd_reference(f: impl Fn(f64, f64) -> f64, x: f64, y: f64) -> Jet {
        let fpp = f(x + H, y + H);
        let fpm = f(x + H, y - H);
        let fmp = f(x - H, y + H);
        let fmm = f(x - H, y - H);
        let fp0 = f(x + H, y);
        let fm0 = f(x - H, y);
        let f0p = f(x, y + H);
        let f0m = f(x, y - H);
        let f00 = f(x, y);
        Jet {
            val: f00,
            dx: (fp0 - fm0) / (2.0 * H),
            dy: (f0p - f0m) / (2.0 * H),
            dxx: (fp0 - 2.0 * f00 + fm0) / (H * H),
            dyy: (f0p - 2.0 * f00 + f0m) / (H * H),
            dxy: (fpp - fpm - fmp + fmm) / (4.0 * H * H),
        }
    }

    fn assert_jet_close(a: Jet, b: Jet, tol: f64) {
        for (u, v) in [
            (a.val, b.val),
            (a.dx, b.dx),
            (a.dy, b.dy),
            (a.dxx, b.dxx),
            (a.dxy, b.dxy),
            (a.dyy, b.dyy),
        ] {
            assert!(
                (u - v).abs() <= tol * (1.0 + v.abs()),
                "jet mismatch: {u} vs {v} (tol {tol})\n{a:?}\n{b:?}"
            );
        }
    }

    #[test]
    fn product_and_quotient_match_finite_differences() {
        let expr = |x: f64, y: f64| (x * x * y + 3.0 * y) / (1.0 + x * x + y * y);
        let (x0, y0) = (0.7, -1.3);
        let x = Jet::var_x(x0);
        let y = Jet::var_y(y0);
        let j = (x * x * y + 3.0 * y) / (1.0 + x * x + y * y);
        assert_jet_close(j, fd_reference(expr, x0, y0), 1e-6);
    }

    #[test]
    fn transcendental_chain_matches_finite_differences() {
        let expr = |x: f64, y: f64| (x * y.tanh()).sin() * (x.cosh().ln()) + (y / 3.0).atan();
        let (x0, y0) = (1.2, 0.4);
        let x = Jet::var_x(x0);
        let y = Jet::var_y(y0);
        let j = (x * y.tanh()).sin() * x.cosh().ln() + (y / 3.0).atan();
        assert_jet_close(j, fd_reference(expr, x0, y0), 1e-6);
    }

    #[test]
    fn sqrt_powi_recip_consistency() {
        let x = Jet::var_x(2.25);
        let y = Jet::var_y(0.5);
        let f = x * x + y * y + 1.0;
        assert_jet_close(f.sqrt() * f.sqrt(), f, 1e-14);
        assert_jet_close(f.powi(3), f * f * f, 1e-14);
        assert_jet_close(f.recip() * f, Jet::constant(1.0), 1e-14);
        assert_jet_close(f.powi(-2), (f * f).recip(), 1e-13);
    }

    #[test]
    fn seeds_expose_single_mixed_partial() {
        // x·y has dxy = 1 and symmetric storage by construction.
        let j = Jet::var_x(3.0) * Jet::var_y(5.0);
        assert_eq!(j.dxy, 1.0);
        assert_eq!(j.dxx, 0.0);
        assert_eq!(j.dyy, 0.0);
    }
}
