//! Brute-force reference computations that share no code path with the
//! main modules. Used by `selftest` and by the integration tests.

use crate::arith;

/// Number of ideals of norm `m` in the ring of integers of `Q(√δ)`,
/// `δ ≡ 1 (mod 4)`, by enumerating HNF sublattices `aZ + (b + dθ)Z` of
/// `Z[θ]`, `θ = (1+√δ)/2`, and keeping those closed under `θ`.
pub fn ideals_of_norm(delta: i64, m: u64) -> u64 {
    assert!(delta.rem_euclid(4) == 1, "delta must be 1 mod 4");
    // θ² = θ − c
    let c = (1 - delta) / 4;
    let m = m as i64;
    let mut count = 0;
    for a in 1..=m {
        if m % a != 0 {
            continue;
        }
        let d = m / a;
        for b in 0..a {
            let contains = |x: i64, y: i64| y % d == 0 && (x - (y / d) * b) % a == 0;
            // θ·a = aθ, θ·(b + dθ) = −dc + (b + d)θ
            if contains(0, a) && contains(-d * c, b + d) {
                count += 1;
            }
        }
    }
    count
}

/// Class number of the imaginary quadratic field of fundamental
/// discriminant `d < −4` from the analytic class number formula
/// `h = −(1/|d|)·Σ_{a=1}^{|d|} χ_d(a)·a`.
pub fn class_number_analytic(d: i64) -> u64 {
    assert!(d < -4);
    let n = d.unsigned_abs() as i64;
    let s: i64 = (1..n).map(|a| arith::kronecker(d as i128, a as u64) as i64 * a).sum();
    assert!(s < 0 && s % n == 0);
    (-s / n) as u64
}

/// `∫₁^∞ e^{−tu} du/u` by adaptive Gauss–Legendre quadrature after the shift
/// `u = 1 + s`, truncated where `e^{−ts}` drops below `1e−20`.
pub fn beta1_quadrature(t: f64) -> f64 {
    assert!(t > 0.0);
    let rule = GaussLegendre::new(20);
    let f = |s: f64| (-t * s).exp() / (1.0 + s);
    let upper = 46.0 / t;
    // geometric panels resolve both the 1/(1+s) scale and the e^{−ts} scale
    let mut edges = vec![0.0];
    let mut x = (0.25f64).min(upper);
    while x < upper {
        edges.push(x);
        x *= 2.0;
    }
    edges.push(upper);
    let total: f64 = edges.windows(2).map(|w| adaptive(&rule, &f, w[0], w[1], 1e-15, 12)).sum();
    total * (-t).exp()
}

fn adaptive(rule: &GaussLegendre, f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let whole = rule.integrate(f, a, b);
    let mid = 0.5 * (a + b);
    let halves = rule.integrate(f, a, mid) + rule.integrate(f, mid, b);
    if depth == 0 || (whole - halves).abs() <= tol * halves.abs().max(1e-300) {
        halves
    } else {
        adaptive(rule, f, a, mid, tol, depth - 1) + adaptive(rule, f, mid, b, tol, depth - 1)
    }
}

struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    fn new(n: usize) -> Self {
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 1..=n {
            let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        GaussLegendre { nodes, weights }
    }

    fn integrate(&self, f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        let (h, c) = (0.5 * (b - a), 0.5 * (b + a));
        h * self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(c + h * x)).sum::<f64>()
    }
}

/// `ord_{ψ^r}` of a Hom-module generator by the recurrence
/// `ord_{r+1} = ord_r + [r = i] − [r = j]`, `j = i + d/2 mod d`, from `ord_i = 0`.
pub fn order_profile_recurrence(d: usize, i: usize) -> Vec<u8> {
    let j = (i + d / 2) % d;
    let mut out = vec![0i32; d];
    let mut r = i;
    for _ in 0..d - 1 {
        let next = (r + 1) % d;
        out[next] = out[r] + i32::from(r == i) - i32::from(r == j);
        r = next;
    }
    out.into_iter().map(|v| v as u8).collect()
}
