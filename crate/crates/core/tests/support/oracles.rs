//! Independent reference evaluations used only by tests. Nothing here calls
//! into the library's integration or series code.
#![allow(dead_code)]

use std::f64::consts::PI;

/// `Σ_{k≥0} (-1)^k a_k` by the Cohen–Rodriguez Villegas–Zagier acceleration.
/// Exact to ~5.8^-n for totally monotone `a_k`.
pub fn alternating_sum(a: impl Fn(usize) -> f64, n: usize) -> f64 {
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        let (kf, nf) = (k as f64, n as f64);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// `f_ν(z) = Σ (-1)^(k+1) z^k / k^ν` for `0 < z ≤ 1`.
pub fn fd_series(nu: f64, z: f64) -> f64 {
    alternating_sum(|k| z.powi(k as i32 + 1) / ((k + 1) as f64).powf(nu), 48)
}

/// `g_ν(z) = Σ z^k / k^ν` for `0 < z ≤ 0.95`, summed term by term.
pub fn be_series(nu: f64, z: f64) -> f64 {
    assert!(z <= 0.95, "term-by-term Bose series is too slow at z = {z}");
    let mut sum = 0.0;
    let mut k = 1u32;
    loop {
        let term = z.powi(k as i32) / f64::from(k).powf(nu);
        sum += term;
        if term < 1e-18 * sum {
            return sum;
        }
        k += 1;
    }
}

/// ζ(s) for s > -5, s ≠ 1: direct sum to N-1, Euler–Maclaurin tail from N
/// (which continues analytically below s = 1).
pub fn zeta(s: f64) -> f64 {
    let n = 1000.0f64;
    let mut head = 0.0;
    for k in (1..1000).rev() {
        head += (k as f64).powf(-s);
    }
    let tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s * n.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * n.powf(-s - 3.0) / 720.0
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * n.powf(-s - 5.0) / 30240.0;
    head + tail
}

/// Γ at a half-integer (positive or negative), by recursion from Γ(1/2).
pub fn gamma_half_integer(x: f64) -> f64 {
    assert!(
        (x - x.floor() - 0.5).abs() < 1e-12,
        "not a half-integer: {}",
        x
    );
    let mut g = PI.sqrt();
    let mut at = 0.5;
    while at < x - 0.25 {
        g *= at;
        at += 1.0;
    }
    while at > x + 0.25 {
        at -= 1.0;
        g /= at;
    }
    g
}

/// Fermi–Dirac integral by the trapezoidal rule on the whole real line:
/// `f_ν(e^ξ) = 1/Γ(ν) ∫ |x|^(2ν-1) dx / (e^(x²-ξ) + 1)`, which is analytic in
/// a strip set by the nearest pole `x² = ξ + iπ`.
pub fn fd_trapezoid(nu: f64, ln_z: f64) -> f64 {
    let (re, im) = (ln_z, PI);
    let modulus = (re * re + im * im).sqrt();
    let strip = ((modulus - re) / 2.0).sqrt();
    let h = strip / 8.0;
    let x_max = (ln_z.max(0.0) + 45.0).sqrt();
    let steps = (x_max / h).ceil() as i64;
    let power = (2.0 * nu - 1.0).round() as i32;
    let f = |x: f64| {
        let e = x * x - ln_z;
        let occ = if e > 0.0 {
            (-e).exp() / (1.0 + (-e).exp())
        } else {
            1.0 / (1.0 + e.exp())
        };
        x.abs().powi(power) * occ
    };
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in -steps..=steps {
        let term = f(i as f64 * h) - comp;
        let t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    sum * h / gamma_half_integer(nu)
}

/// Sommerfeld expansion of `f_ν(e^ξ)`; for half-integer ν the exponentially
/// small remainder vanishes identically.
pub fn fd_sommerfeld(nu: f64, xi: f64, terms: usize) -> f64 {
    let zeta_even = [
        1.0,
        PI.powi(2) / 6.0,
        PI.powi(4) / 90.0,
        PI.powi(6) / 945.0,
        PI.powi(8) / 9450.0,
    ];
    let mut sum = 0.0;
    for (k, zeta) in zeta_even.iter().enumerate().take(terms) {
        let t = if k == 0 {
            0.5
        } else {
            (1.0 - 2f64.powi(1 - 2 * k as i32)) * zeta
        };
        sum +=
            2.0 * t * xi.powf(nu - 2.0 * k as f64) / gamma_half_integer(nu + 1.0 - 2.0 * k as f64);
    }
    sum
}

/// `Θ(a) = Σ_{n∈Z} e^{-a n²}`, summed directly.
pub fn theta_direct(a: f64) -> f64 {
    let mut sum = 1.0;
    let mut n = 1.0f64;
    loop {
        let term = 2.0 * (-a * n * n).exp();
        sum += term;
        if term < 1e-20 * sum {
            return sum;
        }
        n += 1.0;
    }
}

/// Truncated theta sum `Σ_{|n|≤c} e^{-a n²}`.
pub fn theta_truncated(a: f64, c: u32) -> f64 {
    (1..=c)
        .rev()
        .map(|n| 2.0 * (-a * f64::from(n * n)).exp())
        .sum::<f64>()
        + 1.0
}

/// `f_{1/2}(e^ξ) = Σ_k η(1/2 - k) ξ^k / k!`, convergent for `|ξ| < π`.
///
/// The coefficients come from the functional equation
/// `ζ(1-s) = 2 (2π)^(-s) cos(πs/2) Γ(s) ζ(s)` at `s = k + 1/2`, so that
/// `η(1/2 - k) ξ^k/k! = 2 cos(πs/2) ζ(s) [Γ(s)/k!] ((2π)^(-s) - π^(-s)) ξ^k`.
pub fn fd_half_taylor(xi: f64) -> f64 {
    assert!(xi.abs() < 3.0, "outside the disc of fast convergence: {xi}");
    let mut sum = fd_series(0.5, 1.0);
    let mut gamma_ratio = PI.sqrt();
    for k in 1..400i32 {
        let kf = f64::from(k);
        gamma_ratio *= (kf - 0.5) / kf;
        let sign = if k % 4 == 1 || k % 4 == 2 { -1.0 } else { 1.0 };
        let powers = (xi / (2.0 * PI)).powi(k) / (2.0 * PI).sqrt() - (xi / PI).powi(k) / PI.sqrt();
        let term =
            2.0 * sign * std::f64::consts::FRAC_1_SQRT_2 * zeta(kf + 0.5) * gamma_ratio * powers;
        sum += term;
        if k > 10 && term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// ζ at a half-integer, through the functional equation
/// `ζ(s) = 2 (2π)^(s-1) sin(πs/2) Γ(1-s) ζ(1-s)` for `s < 0`.
pub fn zeta_half_integer(s: f64) -> f64 {
    if s > 0.0 {
        return zeta(s);
    }
    2.0 * (2.0 * PI).powf(s - 1.0)
        * (PI * s / 2.0).sin()
        * gamma_half_integer(1.0 - s)
        * zeta(1.0 - s)
}

/// Robinson's expansion `g_ν(e^{-α}) = Γ(1-ν) α^(ν-1) + Σ_k ζ(ν-k) (-α)^k / k!`
/// for half-integer ν and `0 < α < 2π`.
pub fn be_robinson(nu: f64, alpha: f64) -> f64 {
    assert!(alpha > 0.0 && alpha < 2.0, "alpha out of range: {alpha}");
    let mut sum = gamma_half_integer(1.0 - nu) * alpha.powf(nu - 1.0);
    let mut power = 1.0;
    for k in 0..200 {
        if k > 0 {
            power *= -alpha / f64::from(k);
        }
        let term = zeta_half_integer(nu - f64::from(k)) * power;
        sum += term;
        if k > 5 && term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// `g_ν(e^{ln_z})` for `ln_z < 0`: direct series for small z, Robinson's
/// expansion near 1. Taking `ln z` keeps `α = -ln z` exact as z → 1.
pub fn be_oracle(nu: f64, ln_z: f64) -> f64 {
    if ln_z <= -std::f64::consts::LN_2 {
        be_series(nu, ln_z.exp())
    } else {
        be_robinson(nu, -ln_z)
    }
}
