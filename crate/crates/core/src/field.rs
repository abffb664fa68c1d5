//! The totally real base field `F` (either `Q` or a real quadratic field),
//! its elements, and its prime ideals.
//!
//! `F = Q(√D)` is presented with the integral basis `{1, ω}` where `ω` is a
//! root of `x² − t·x + n`: `ω = (1+√D)/2` when `D ≡ 1 (mod 4)` and
//! `ω = √(D/4)` otherwise. For `F = Q` the second coordinate is always zero.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseField {
    disc: i64,
    trace: i64,
    norm: i64,
}

impl BaseField {
    pub fn rational() -> Self {
        BaseField { disc: 1, trace: 0, norm: 0 }
    }

    /// `Q(√D)` for a fundamental discriminant `D > 1`; `D = 1` gives `Q`.
    pub fn new(disc: i64) -> Result<Self> {
        if disc == 1 {
            return Ok(Self::rational());
        }
        if !arith::is_fundamental_discriminant(disc) {
            return Err(Error::InvalidField(format!(
                "base_disc = {disc} is neither 1 nor a real fundamental discriminant"
            )));
        }
        let (trace, norm) = if disc % 4 == 1 { (1, (1 - disc) / 4) } else { (0, -disc / 4) };
        Ok(BaseField { disc, trace, norm })
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn degree(&self) -> u32 {
        if self.disc == 1 {
            1
        } else {
            2
        }
    }

    /// Trace and norm of `ω`.
    pub fn omega_trace_norm(&self) -> (i64, i64) {
        (self.trace, self.norm)
    }

    fn mul_coords(&self, x: [i128; 2], y: [i128; 2]) -> [i128; 2] {
        let (t, n) = (self.trace as i128, self.norm as i128);
        let bd = x[1] * y[1];
        [x[0] * y[0] - n * bd, x[0] * y[1] + x[1] * y[0] + t * bd]
    }

    fn conj_coords(&self, x: [i128; 2]) -> [i128; 2] {
        if self.degree() == 1 {
            x
        } else {
            [x[0] + x[1] * self.trace as i128, -x[1]]
        }
    }

    fn norm_coords(&self, x: [i128; 2]) -> i128 {
        if self.degree() == 1 {
            x[0]
        } else {
            let (t, n) = (self.trace as i128, self.norm as i128);
            x[0] * x[0] + t * x[0] * x[1] + n * x[1] * x[1]
        }
    }

    /// Exact sign (−1, 0, 1) of the coordinates `x` under the real embedding `place`.
    pub(crate) fn sign_coords(&self, x: [i128; 2], place: usize) -> i32 {
        if self.degree() == 1 {
            return x[0].signum() as i32;
        }
        // (a + b·ω)·2 = (2a + b·t) ± b·√D
        let u = 2 * x[0] + x[1] * self.trace as i128;
        let v = if place == 0 { x[1] } else { -x[1] };
        sign_of_surd(u, v, self.disc as i128)
    }

    pub(crate) fn mul(&self, x: [i128; 2], y: [i128; 2]) -> [i128; 2] {
        self.mul_coords(x, y)
    }

    /// The real places of `F`, in the fixed order used for `y` vectors.
    pub fn places(&self) -> usize {
        self.degree() as usize
    }

    /// Fundamental unit of `F` for real quadratic `F`, found by search.
    pub fn fundamental_unit(&self) -> Option<ElementF> {
        if self.degree() == 1 {
            return None;
        }
        // smallest unit > 1 has both coordinates positive in the {1, ω} basis
        for b in 1i128..10_000 {
            for a in 0i128..=(b * (self.disc as i128)) {
                let nrm = self.norm_coords([a, b]);
                if nrm == 1 || nrm == -1 {
                    return ElementF::new(*self, a, b, 1).ok();
                }
            }
        }
        None
    }

    /// The primes of `O_F` lying over the rational prime `p`.
    pub fn factor_rational_prime(&self, p: u64) -> Vec<PrimeOfF> {
        debug_assert!(arith::is_prime(p));
        if self.degree() == 1 {
            return vec![PrimeOfF { p, e: 1, f: 1, tag: PrimeTag::Rational }];
        }
        let pm = p as i128;
        let (t, n) = (self.trace as i128, self.norm as i128);
        let roots: Vec<u64> = (0..pm).filter(|&r| (r * r - t * r + n).rem_euclid(pm) == 0).map(|r| r as u64).collect();
        match roots.as_slice() {
            [] => vec![PrimeOfF { p, e: 1, f: 2, tag: PrimeTag::Inert }],
            [r] => vec![PrimeOfF { p, e: 2, f: 1, tag: PrimeTag::Ramified { root: *r } }],
            [r1, r2] => vec![
                PrimeOfF { p, e: 1, f: 1, tag: PrimeTag::Split { root: *r1 } },
                PrimeOfF { p, e: 1, f: 1, tag: PrimeTag::Split { root: *r2 } },
            ],
            _ => unreachable!("quadratic has at most two roots mod a prime"),
        }
    }

    /// Valuation at `prime` of the integral element with coordinates `x`.
    fn ord_integral(&self, prime: &PrimeOfF, x: [i128; 2]) -> i64 {
        let p = prime.p;
        let v = |c: i128| if c == 0 { u32::MAX } else { arith::valuation(c, p) };
        match prime.tag {
            PrimeTag::Rational => arith::valuation(x[0], p) as i64,
            PrimeTag::Inert => v(x[0]).min(v(x[1])) as i64,
            PrimeTag::Ramified { .. } => arith::valuation(self.norm_coords(x), p) as i64,
            PrimeTag::Split { root } => {
                let g = v(x[0]).min(v(x[1]));
                let pg = (p as i128).pow(g);
                let y = [x[0] / pg, x[1] / pg];
                if (y[0] + y[1] * root as i128).rem_euclid(p as i128) == 0 {
                    g as i64 + arith::valuation(self.norm_coords(y), p) as i64
                } else {
                    g as i64
                }
            }
        }
    }

    /// Quadratic character of the residue class of an integral `P`-unit.
    /// `P` must lie over an odd prime.
    fn residue_character(&self, prime: &PrimeOfF, x: [i128; 2]) -> i32 {
        let p = prime.p;
        match prime.tag {
            PrimeTag::Rational => arith::legendre(x[0], p),
            PrimeTag::Split { root } | PrimeTag::Ramified { root } => arith::legendre(x[0] + x[1] * root as i128, p),
            PrimeTag::Inert => arith::legendre(self.norm_coords(x), p),
        }
    }

    /// Quadratic residue character at the odd prime `P` of the `P`-unit `x / y`,
    /// where `x, y` are integral with equal valuation at `P`.
    fn quotient_character(&self, prime: &PrimeOfF, x: [i128; 2], y: [i128; 2]) -> i32 {
        let p = prime.p as i128;
        // x/y = x·ȳ / N(y); N(y) = p^s·m with p ∤ m
        let (c, ny) =
            if self.degree() == 1 { (x, y[0]) } else { (self.mul_coords(x, self.conj_coords(y)), self.norm_coords(y)) };
        let s = arith::valuation(ny, prime.p);
        let m = ny / p.pow(s);
        let chi_m = match prime.tag {
            PrimeTag::Inert => 1,
            _ => arith::legendre(m, prime.p),
        };
        if s == 0 {
            return self.residue_character(prime, c) * chi_m;
        }
        // In the split case multiply by z = ω − r̄, a unit at P lying in the
        // conjugate prime, so that p^s divides the numerator in O_F.
        let (z, chi_z) = match prime.tag {
            PrimeTag::Split { root } => {
                let rbar = (self.trace as i128 - root as i128).rem_euclid(p);
                let z = [-rbar, 1];
                (Some(z), self.residue_character(prime, z))
            }
            _ => (None, 1),
        };
        let modulus = p.pow(s + 1);
        let reduce = |v: [i128; 2]| [v[0].rem_euclid(modulus), v[1].rem_euclid(modulus)];
        let mut acc = reduce(c);
        if let Some(z) = z {
            for _ in 0..s {
                acc = reduce(self.mul_coords(acc, z));
            }
        }
        let ps = p.pow(s);
        debug_assert!(acc[0] % ps == 0 && acc[1] % ps == 0);
        let w = [acc[0] / ps, acc[1] / ps];
        let chi_zs = if s.is_multiple_of(2) { 1 } else { chi_z };
        self.residue_character(prime, w) * chi_m * chi_zs
    }

    /// Whether the integral `x`, a unit at the prime `P | 2`, is a square in
    /// the completion `F_P`, tested as solvability of `y² ≡ x` modulo `2^6`.
    fn is_square_above_two(&self, prime: &PrimeOfF, x: [i128; 2]) -> bool {
        const M: i128 = 1 << TWO_ADIC_PRECISION;
        match prime.tag {
            PrimeTag::Rational => (0..M).any(|y| (y * y - x[0]).rem_euclid(M) == 0),
            PrimeTag::Split { root } => {
                let (t, n) = (self.trace as i128, self.norm as i128);
                let lifted = (0..M)
                    .find(|&r| r % 2 == root as i128 % 2 && (r * r - t * r + n).rem_euclid(M) == 0)
                    .expect("simple root lifts 2-adically");
                let image = (x[0] + x[1] * lifted).rem_euclid(M);
                (0..M).any(|y| (y * y - image).rem_euclid(M) == 0)
            }
            PrimeTag::Inert | PrimeTag::Ramified { .. } => (0..M).any(|u| {
                (0..M).any(|v| {
                    let sq = self.mul_coords([u, v], [u, v]);
                    (sq[0] - x[0]).rem_euclid(M) == 0 && (sq[1] - x[1]).rem_euclid(M) == 0
                })
            }),
        }
    }

    /// Whether the integral `x` is congruent to a square modulo `4·O_F`.
    pub(crate) fn is_square_mod_four(&self, x: [i128; 2]) -> bool {
        let range = if self.degree() == 1 { 0..1 } else { 0..4 };
        (0..4).any(|u| {
            range.clone().any(|v| {
                let sq = self.mul_coords([u, v], [u, v]);
                (sq[0] - x[0]).rem_euclid(4) == 0 && (sq[1] - x[1]).rem_euclid(4) == 0
            })
        })
    }
}

/// Bit precision of the 2-adic square test used for splitting above 2.
pub const TWO_ADIC_PRECISION: u32 = 6;

/// Which of the three shapes a prime of `F` has over `Q`, plus the residue
/// data needed to reduce elements modulo it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeTag {
    /// `F = Q`.
    Rational,
    /// `p` splits in `F`; `ω ≡ root (mod P)`.
    Split { root: u64 },
    /// `p` is inert in `F`; `P = pO_F`.
    Inert,
    /// `p` ramifies in `F`; `ω ≡ root (mod P)`.
    Ramified { root: u64 },
}

/// A prime ideal of `O_F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeOfF {
    p: u64,
    e: u32,
    f: u32,
    tag: PrimeTag,
}

impl PrimeOfF {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Ramification index over `Q`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Residue degree over `Q`.
    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn tag(&self) -> PrimeTag {
        self.tag
    }

    /// `N(P) = p^f`.
    pub fn norm(&self) -> u64 {
        self.p.pow(self.f)
    }

    pub fn log_norm(&self) -> f64 {
        (self.norm() as f64).ln()
    }
}

impl Ord for PrimeOfF {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.tag).cmp(&(other.p, other.tag))
    }
}

impl PartialOrd for PrimeOfF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeOfF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            PrimeTag::Rational | PrimeTag::Inert => write!(f, "({})", self.p),
            PrimeTag::Split { root } | PrimeTag::Ramified { root } => {
                write!(f, "({}, w-{})", self.p, root)
            }
        }
    }
}

/// A nonzero element `(a + b·ω)/den` of `F`.
#[derive(Clone, Copy, Debug)]
pub struct ElementF {
    field: BaseField,
    num: [i128; 2],
    den: i128,
    embeddings: [f64; 2],
}

impl PartialEq for ElementF {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.num == other.num && self.den == other.den
    }
}

impl Eq for ElementF {}

impl ElementF {
    pub fn new(field: BaseField, a: i128, b: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidElement("zero denominator".into()));
        }
        if field.degree() == 1 && b != 0 {
            return Err(Error::InvalidElement("second coordinate must be 0 over Q".into()));
        }
        if a == 0 && b == 0 {
            return Err(Error::InvalidElement("element must be nonzero".into()));
        }
        Ok(Self::normalized(field, [a, b], den))
    }

    pub fn from_int(field: BaseField, a: i128) -> Result<Self> {
        Self::new(field, a, 0, 1)
    }

    fn normalized(field: BaseField, num: [i128; 2], den: i128) -> Self {
        let g = num[0].gcd(&num[1]).gcd(&den);
        let s = if den < 0 { -g } else { g };
        let num = [num[0] / s, num[1] / s];
        let den = den / s;
        let embeddings = compute_embeddings(&field, num, den);
        ElementF { field, num, den, embeddings }
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    /// Numerator coordinates over `{1, ω}`.
    pub fn numerator(&self) -> [i128; 2] {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    /// Value under the real embedding `place` (0 or 1).
    pub fn embedding(&self, place: usize) -> f64 {
        self.embeddings[place]
    }

    /// Exact sign (±1) under the real embedding `place`.
    pub fn sign_at(&self, place: usize) -> i32 {
        self.field.sign_coords(self.num, place)
    }

    pub fn signs(&self) -> Vec<i32> {
        (0..self.field.places()).map(|v| self.sign_at(v)).collect()
    }

    pub fn is_totally_positive(&self) -> bool {
        (0..self.field.places()).all(|v| self.sign_at(v) > 0)
    }

    pub fn is_totally_negative(&self) -> bool {
        (0..self.field.places()).all(|v| self.sign_at(v) < 0)
    }

    /// `N_{F/Q}` as a reduced fraction `(num, den)`.
    pub fn norm(&self) -> (i128, i128) {
        let n = self.field.norm_coords(self.num);
        let d = self.den.pow(self.field.degree());
        let g = n.gcd(&d);
        (n / g, d / g)
    }

    /// Galois conjugate over `Q` (identity over `Q`).
    pub fn conjugate(&self) -> Self {
        Self::normalized(self.field, self.field.conj_coords(self.num), self.den)
    }

    pub fn inverse(&self) -> Self {
        if self.field.degree() == 1 {
            return Self::normalized(self.field, [self.den, 0], self.num[0]);
        }
        // 1/x = den·x̄ / N(num)
        let c = self.field.conj_coords(self.num);
        let n = self.field.norm_coords(self.num);
        Self::normalized(self.field, [c[0] * self.den, c[1] * self.den], n)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::normalized(self.field, [1, 0], 1), |acc, _| acc * *self)
    }

    pub fn neg(&self) -> Self {
        Self::normalized(self.field, [-self.num[0], -self.num[1]], self.den)
    }

    /// `P`-adic valuation.
    pub fn ord(&self, prime: &PrimeOfF) -> i64 {
        let num = self.field.ord_integral(prime, self.num);
        let den = arith::valuation(self.den, prime.p) as i64 * prime.e as i64;
        num - den
    }

    /// Quadratic character of the residue of `self / π^{ord}` at an odd prime,
    /// where `π` is the supplied element of valuation 1 at `prime`.
    pub(crate) fn unit_part_character(&self, prime: &PrimeOfF, uniformizer: &ElementF) -> i32 {
        let k = self.ord(prime);
        debug_assert_eq!(uniformizer.ord(prime), 1);
        let q = *self * uniformizer.pow(k.unsigned_abs() as u32).inverse_if(k > 0);
        // q is a P-unit: q = A / d with A integral, d ∈ Z
        let d = [q.den, 0];
        self.field.quotient_character(prime, q.num, d)
    }

    /// Quadratic character of the residue of a `P`-unit at an odd prime.
    pub(crate) fn unit_character(&self, prime: &PrimeOfF) -> i32 {
        debug_assert_eq!(self.ord(prime), 0);
        self.field.quotient_character(prime, self.num, [self.den, 0])
    }

    fn inverse_if(self, flag: bool) -> Self {
        if flag {
            self.inverse()
        } else {
            self
        }
    }

    /// Whether this element is a square in `F`.
    pub fn is_square(&self) -> bool {
        let f = &self.field;
        if f.degree() == 1 {
            return self.num[0] > 0 && arith::is_rational_square(self.num[0], self.den);
        }
        // x·(2·den)² = (u + v√D)·2·den with u = 2a + bt, v = b
        let two_d = 2 * self.den;
        let uu = (2 * self.num[0] + self.num[1] * f.trace as i128) * two_d;
        let vv = self.num[1] * two_d;
        is_square_surd(uu, vv, f.disc as i128)
    }

    /// Whether this element is a unit of `O_F` at the prime above 2 and a
    /// square in the completion there.
    pub(crate) fn is_square_above_two(&self, prime: &PrimeOfF) -> bool {
        debug_assert_eq!(prime.p, 2);
        debug_assert_eq!(self.den % 2, 1);
        // odd denominators are squares-up-to-units; fold den into numerator
        let scaled = self.field.mul_coords(self.num, [self.den, 0]);
        self.field.is_square_above_two(prime, scaled)
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }
}

impl std::ops::Mul for ElementF {
    type Output = ElementF;

    fn mul(self, rhs: ElementF) -> ElementF {
        assert_eq!(self.field, rhs.field, "elements of different fields");
        let num = self.field.mul_coords(self.num, rhs.num);
        ElementF::normalized(self.field, num, self.den * rhs.den)
    }
}

impl fmt::Display for ElementF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            write!(f, "{}", self.num[0])?;
        } else {
            write!(f, "{}{:+}w", self.num[0], self.num[1])?;
        }
        if self.den != 1 {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

fn compute_embeddings(field: &BaseField, num: [i128; 2], den: i128) -> [f64; 2] {
    if field.degree() == 1 {
        let v = num[0] as f64 / den as f64;
        return [v, v];
    }
    let sq = (field.disc as f64).sqrt();
    let t = field.trace as f64;
    let w = [(t + sq) / 2.0, (t - sq) / 2.0];
    w.map(|wi| (num[0] as f64 + num[1] as f64 * wi) / den as f64)
}

/// Sign of `u + v·√d` for a non-square `d > 0`.
fn sign_of_surd(u: i128, v: i128, d: i128) -> i32 {
    match (u.signum(), v.signum()) {
        (0, s) | (s, 0) => s as i32,
        (su, sv) if su == sv => su as i32,
        (su, _) => {
            // opposite signs: compare u² with v²·d
            match (u * u).cmp(&(v * v * d)) {
                Ordering::Greater => su as i32,
                Ordering::Less => -su as i32,
                Ordering::Equal => 0,
            }
        }
    }
}

/// Whether `u + v√d` is a square in `Q(√d)`.
fn is_square_surd(u: i128, v: i128, d: i128) -> bool {
    if v == 0 {
        return u >= 0 && (arith::is_rational_square(u, 1) || arith::is_rational_square(u, d));
    }
    // (x + y√d)² = u + v√d  ⇒  x² = (u ± n)/2,  y² = (u ∓ n)/(2d),  n² = u² − d·v²
    let Some(n) = arith::exact_sqrt(u * u - d * v * v) else {
        return false;
    };
    [(u + n, u - n), (u - n, u + n)]
        .iter()
        .any(|&(a, b)| a >= 0 && b >= 0 && arith::is_rational_square(a, 2) && arith::is_rational_square(b, 2 * d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5() -> BaseField {
        BaseField::new(5).unwrap()
    }

    #[test]
    fn factor_over_q_sqrt5() {
        let f = q5();
        let p11 = f.factor_rational_prime(11);
        assert_eq!(p11.len(), 2);
        assert!(p11.iter().all(|p| p.f() == 1 && p.e() == 1));
        let p5 = f.factor_rational_prime(5);
        assert_eq!(p5.len(), 1);
        assert_eq!(p5[0].e(), 2);
        let p7 = f.factor_rational_prime(7);
        assert_eq!((p7[0].e(), p7[0].f()), (1, 2));
        assert_eq!(p7[0].norm(), 49);
        let p3 = BaseField::rational().factor_rational_prime(3);
        assert_eq!((p3[0].e(), p3[0].f()), (1, 1));
    }

    #[test]
    fn omega_is_unit_at_split_prime_above_11() {
        let f = q5();
        let omega = ElementF::new(f, 0, 1, 1).unwrap();
        for prime in f.factor_rational_prime(11) {
            assert_eq!(omega.ord(&prime), 0);
        }
        // ω − 4 lies in exactly one of them
        let x = ElementF::new(f, -4, 1, 1).unwrap();
        let ords: Vec<i64> = f.factor_rational_prime(11).iter().map(|p| x.ord(p)).collect();
        let mut sorted = ords.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1]);
    }

    #[test]
    fn rational_valuations() {
        let q = BaseField::rational();
        let p3 = q.factor_rational_prime(3)[0];
        let p7 = q.factor_rational_prime(7)[0];
        assert_eq!(ElementF::from_int(q, 3).unwrap().ord(&p3), 1);
        assert_eq!(ElementF::new(q, 1, 0, 7).unwrap().ord(&p7), -1);
    }

    #[test]
    fn signs_and_norms() {
        let f = q5();
        // ω = 1.618.., ω' = −0.618..
        let omega = ElementF::new(f, 0, 1, 1).unwrap();
        assert_eq!(omega.signs(), vec![1, -1]);
        assert_eq!(omega.norm(), (-1, 1));
        let minus7 = ElementF::from_int(f, -7).unwrap();
        assert!(minus7.is_totally_negative());
        let sq5 = ElementF::new(f, -1, 2, 1).unwrap(); // 2ω − 1 = √5
        assert_eq!(sq5.norm(), (-5, 1));
        assert!((sq5.embedding(0) - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn exact_squares() {
        let f = q5();
        let omega = ElementF::new(f, 0, 1, 1).unwrap();
        assert!((omega * omega).is_square());
        assert!(!omega.is_square());
        assert!(ElementF::from_int(f, 5).unwrap().is_square());
        assert!(ElementF::from_int(f, 20).unwrap().is_square());
        assert!(!ElementF::from_int(f, 3).unwrap().is_square());
        let q = BaseField::rational();
        assert!(ElementF::new(q, 9, 0, 4).unwrap().is_square());
        assert!(!ElementF::from_int(q, -4).unwrap().is_square());
    }

    #[test]
    fn inverse_and_conjugate() {
        let f = q5();
        let x = ElementF::new(f, 3, -2, 5).unwrap();
        let one = ElementF::from_int(f, 1).unwrap();
        assert_eq!(x * x.inverse(), one);
        let n = x * x.conjugate();
        assert_eq!(n.numerator()[1], 0);
    }

    #[test]
    fn fundamental_units() {
        let u = q5().fundamental_unit().unwrap();
        assert_eq!(u.numerator(), [0, 1]);
        let u2 = BaseField::new(8).unwrap().fundamental_unit().unwrap();
        assert_eq!(u2.norm().0.abs(), 1);
    }

    #[test]
    fn unit_part_character_over_q() {
        let q = BaseField::rational();
        let p7 = q.factor_rational_prime(7)[0];
        let pi = ElementF::from_int(q, 7).unwrap();
        // 3 is a non-residue mod 7, 2 a residue
        assert_eq!(ElementF::from_int(q, 3).unwrap().unit_part_character(&p7, &pi), -1);
        assert_eq!(ElementF::from_int(q, 2).unwrap().unit_part_character(&p7, &pi), 1);
        // 14/7 = 2
        assert_eq!(ElementF::from_int(q, 14).unwrap().unit_part_character(&p7, &pi), 1);
        assert_eq!(ElementF::new(q, 3, 0, 49).unwrap().unit_part_character(&p7, &pi), -1);
    }

    #[test]
    fn quotient_character_split_prime() {
        // 11 splits in Q(√5); compare against reduction of an integral unit
        let f = q5();
        for prime in f.factor_rational_prime(11) {
            let pi = f
                .factor_rational_prime(11)
                .iter()
                .find(|q| **q == prime)
                .map(|_| ElementF::new(f, -(prime_root(&prime) as i128), 1, 1).unwrap())
                .unwrap();
            assert_eq!(pi.ord(&prime), 1);
            for a in 1..30i128 {
                let x = ElementF::new(f, a, 1, 1).unwrap();
                if x.ord(&prime) != 0 {
                    continue;
                }
                let direct = f.residue_character(&prime, x.numerator());
                assert_eq!(x.unit_part_character(&prime, &pi), direct);
                // multiplying by π² leaves the character unchanged
                let y = x * pi * pi;
                assert_eq!(y.unit_part_character(&prime, &pi), direct);
            }
        }
    }

    fn prime_root(p: &PrimeOfF) -> u64 {
        match p.tag() {
            PrimeTag::Split { root } | PrimeTag::Ramified { root } => root,
            _ => 0,
        }
    }

    #[test]
    fn two_adic_squares_over_q() {
        let q = BaseField::rational();
        let p2 = q.factor_rational_prime(2)[0];
        assert!(ElementF::from_int(q, -7).unwrap().is_square_above_two(&p2));
        assert!(!ElementF::from_int(q, -3).unwrap().is_square_above_two(&p2));
        assert!(q.is_square_mod_four([-3, 0]));
        assert!(!q.is_square_mod_four([-1, 0]));
    }
}
