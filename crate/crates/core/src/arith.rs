//! Small exact integer helpers: primality, factorization, residue symbols.
//!
//! Everything here works on `i128`/`u64` and is meant for the small
//! discriminants and norms this crate deals with.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Trial-division factorization, primes in increasing order.
pub fn factor(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

pub fn is_squarefree(n: u128) -> bool {
    factor(n).iter().all(|&(_, e)| e == 1)
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: i128, p: u64) -> u32 {
    debug_assert!(n != 0);
    let p = p as i128;
    let mut n = n;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn mod_pow(base: u128, mut exp: u128, m: u128) -> u128 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}

/// Legendre symbol (a | p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: i128, p: u64) -> i32 {
    debug_assert!(p > 2);
    let a = a.rem_euclid(p as i128) as u128;
    if a == 0 {
        return 0;
    }
    let r = mod_pow(a, (p as u128 - 1) / 2, p as u128);
    if r == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (d | n) for a discriminant d and n > 0.
pub fn kronecker(d: i128, n: u64) -> i32 {
    let mut result = 1;
    for (p, e) in factor(n as u128) {
        let s = if p == 2 {
            if d % 2 == 0 {
                0
            } else {
                match d.rem_euclid(8) {
                    1 | 7 => 1,
                    _ => -1,
                }
            }
        } else {
            legendre(d, p)
        };
        if s == 0 {
            return 0;
        }
        if s == -1 && e % 2 == 1 {
            result = -result;
        }
    }
    result
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).find(|&c| c >= 0 && c * c == n)
}

/// Whether the rational `num/den` is the square of a rational.
pub fn is_rational_square(num: i128, den: i128) -> bool {
    if num == 0 {
        return true;
    }
    let g = num.gcd(&den);
    let (n, d) = (num / g, den / g);
    let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
    exact_sqrt(n).is_some() && exact_sqrt(d).is_some()
}

/// Whether `d` is the discriminant of a real quadratic field.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d <= 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d as u128),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m as u128)
        }
        _ => false,
    }
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small() {
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(97), vec![(97, 1)]);
    }

    #[test]
    fn legendre_matches_squares() {
        for p in [3u64, 5, 7, 11, 13] {
            let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 1..p {
                let expect = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(legendre(a as i128, p), expect, "a={a} p={p}");
            }
        }
        assert_eq!(legendre(-7, 3), -1);
        assert_eq!(legendre(21, 7), 0);
    }

    #[test]
    fn kronecker_at_two() {
        assert_eq!(kronecker(-7, 2), 1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-7, 7), 0);
    }

    #[test]
    fn fundamental_discriminants() {
        let found: Vec<i64> = (2..30).filter(|&d| is_fundamental_discriminant(d)).collect();
        assert_eq!(found, vec![5, 8, 12, 13, 17, 21, 24, 28, 29]);
    }

    #[test]
    fn rational_squares() {
        assert!(is_rational_square(9, 4));
        assert!(is_rational_square(18, 8));
        assert!(!is_rational_square(2, 1));
        assert!(!is_rational_square(-1, 1));
    }
}
