#![allow(dead_code)]

use cmdeg::tower::{build_tower, FieldConfig, FieldTower};
use cmdeg::{ElementF, PrimeOfF};

pub const IQ_DELTAS: [i64; 3] = [-7, -11, -23];
pub const YS: [f64; 3] = [0.5, 1.0, 5.0];

pub fn iq(delta: i64) -> FieldTower {
    build_tower(&FieldConfig::imaginary_quadratic(delta)).unwrap()
}

/// `F = Q(√5)`, `K = F(√−7)` with class data supplied.
pub fn quartic() -> FieldTower {
    build_tower(&FieldConfig { base_disc: 5, delta: [-7, 0], h: Some(1), ck: Some(1) }).unwrap()
}

/// `±1, …, ±n` as elements of the base field of `t`.
pub fn int_grid(t: &FieldTower, n: i128) -> Vec<ElementF> {
    (1..=n).flat_map(|a| [a, -a]).map(|a| t.element(a, 0).unwrap()).collect()
}

/// `a + b·ω`, `|a|, |b| ≤ n`, nonzero.
pub fn box_grid(t: &FieldTower, n: i128) -> Vec<ElementF> {
    let mut v = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            if (a, b) != (0, 0) {
                v.push(t.element(a, b).unwrap());
            }
        }
    }
    v
}

/// Every finite place at which `χ_v(α)` can be nontrivial.
pub fn finite_places(t: &FieldTower, alpha: &ElementF) -> Vec<PrimeOfF> {
    let mut v: Vec<PrimeOfF> = cmdeg::ideal::principal_ideal(alpha).support().copied().collect();
    v.extend_from_slice(t.finite_ramified());
    v.sort();
    v.dedup();
    v
}

/// `∏_v χ_v(α)` over all places.
pub fn global_character_product(t: &FieldTower, alpha: &ElementF) -> i32 {
    let finite: i32 = finite_places(t, alpha).iter().map(|p| t.local_character(alpha, p)).product();
    let arch: i32 = (0..t.field().places()).map(|v| t.arch_character(alpha, v)).product();
    finite * arch
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= 1e-12 || (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Class number of `Q(√δ)`, `δ ≡ 1 (mod 4)`, by enumerating primitive ideals
/// `[a, b + θ]` below the Minkowski bound and testing equivalence: `I ~ J`
/// iff `J·Ī` contains an element of norm `N(I)·N(J)`.
pub fn class_number_by_ideals(delta: i64) -> usize {
    let c = (1 - delta) / 4;
    let bound = (2.0 / std::f64::consts::PI * (delta.abs() as f64).sqrt()).floor() as i64;
    let mut ideals = Vec::new();
    for a in 1..=bound.max(1) {
        for b in 0..a {
            if (b * b + b + c) % a == 0 {
                ideals.push((a, b));
            }
        }
    }
    let mut reps: Vec<(i64, i64)> = Vec::new();
    for &i in &ideals {
        if !reps.iter().any(|&r| equivalent(i, r, c, delta)) {
            reps.push(i);
        }
    }
    reps.len()
}

// elements are (x, y) = x + yθ with θ² = θ − c
fn mul(u: (i64, i64), v: (i64, i64), c: i64) -> (i64, i64) {
    (u.0 * v.0 - c * u.1 * v.1, u.0 * v.1 + u.1 * v.0 + u.1 * v.1)
}

fn equivalent(i: (i64, i64), j: (i64, i64), c: i64, delta: i64) -> bool {
    let gens_i = [(i.0, 0), (i.1, 1)];
    // conjugate of [a, b + θ] is [a, θ − b − 1]
    let gens_j = [(j.0, 0), (-j.1 - 1, 1)];
    let products: Vec<(i64, i64)> = gens_i.iter().flat_map(|u| gens_j.iter().map(move |v| mul(*u, *v, c))).collect();
    let (a, b, d) = hnf(&products);
    let n = i.0 * j.0;
    let ymax = (2.0 * (n as f64 / delta.abs() as f64).sqrt()).floor() as i64 + 1;
    for y in -ymax..=ymax {
        if y % d != 0 {
            continue;
        }
        // x² + xy + cy² = n
        let disc = y * y - 4 * (c * y * y - n);
        if disc < 0 {
            continue;
        }
        let s = (disc as f64).sqrt().round() as i64;
        if s * s != disc {
            continue;
        }
        for x2 in [-y + s, -y - s] {
            if x2 % 2 == 0 && (x2 / 2 - (y / d) * b).rem_euclid(a) == 0 {
                return true;
            }
        }
    }
    false
}

/// HNF `(A, B, D)` of a full-rank lattice in `Z²`: basis `(A, 0)`, `(B, D)`.
fn hnf(vs: &[(i64, i64)]) -> (i64, i64, i64) {
    let mut pivot = vs[0];
    let mut a = 0i64;
    for &v in &vs[1..] {
        let (g, s, t) = ext_gcd(pivot.1, v.1);
        if g == 0 {
            a = gcd(gcd(a, pivot.0), v.0);
            continue;
        }
        let residual = (v.1 / g) * pivot.0 - (pivot.1 / g) * v.0;
        pivot = (s * pivot.0 + t * v.0, g);
        a = gcd(a, residual);
    }
    let (mut b, mut d) = pivot;
    if d < 0 {
        b = -b;
        d = -d;
    }
    (a, b.rem_euclid(a), d)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return if a < 0 { (-a, -1, 0) } else { (a, 1, 0) };
    }
    let (g, s, t) = ext_gcd(b, a % b);
    (g, t, s - (a / b) * t)
}
