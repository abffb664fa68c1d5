//! The CM tower `F ⊂ K = F(√δ)`: construction, prime splitting, and the
//! global invariants (relative discriminant, `r`, `w(K)`, class data).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{BaseField, ElementF, PrimeOfF};
use crate::ideal::IdealF;

/// User-facing description of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    /// 1 for `F = Q`, otherwise the discriminant of the real quadratic `F`.
    pub base_disc: i64,
    /// Coordinates of `δ` over `{1, ω}`.
    pub delta: [i64; 2],
    pub h: Option<u64>,
    pub ck: Option<u64>,
}

impl FieldConfig {
    pub fn imaginary_quadratic(delta: i64) -> Self {
        FieldConfig { base_disc: 1, delta: [delta, 0], h: None, ck: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassSource {
    Computed,
    Supplied,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub h: u64,
    /// `|C_K|`.
    pub ck: u64,
    pub source: ClassSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SplittingType {
    Split,
    Inert,
    RamifiedInK,
}

impl SplittingType {
    pub fn is_split(self) -> bool {
        self == SplittingType::Split
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SplittingType::Split => "split",
            SplittingType::Inert => "inert",
            SplittingType::RamifiedInK => "ramified",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct FieldTower {
    field: BaseField,
    delta: ElementF,
    rel_disc: IdealF,
    finite_ramified: Vec<PrimeOfF>,
    r: u32,
    w: u32,
    class_data: ClassData,
    closure_degree: u32,
}

/// Build and validate a tower from its configuration.
pub fn build_tower(config: &FieldConfig) -> Result<FieldTower> {
    let tower = FieldTower::assemble(config)?;
    if tower.finite_ramified.is_empty() {
        return Err(Error::InvalidTower("K/F is unramified at all finite primes (condition 1)".into()));
    }
    Ok(tower)
}

impl FieldTower {
    /// Everything `build_tower` does except insisting on a finite ramified prime.
    pub(crate) fn assemble(config: &FieldConfig) -> Result<Self> {
        let field = BaseField::new(config.base_disc)?;
        let [d0, d1] = config.delta;
        let delta = ElementF::new(field, d0 as i128, d1 as i128, 1)?;
        if !delta.is_totally_negative() {
            return Err(Error::InvalidTower(format!("delta = {delta} is not totally negative")));
        }
        let (norm, _) = delta.norm();
        if norm % 2 == 0 {
            return Err(Error::InvalidTower(format!(
                "delta = {delta} is divisible by a prime above 2; towers ramified above 2 are not supported"
            )));
        }
        if !field.is_square_mod_four(delta.numerator()) {
            return Err(Error::InvalidTower(format!("delta = {delta} is not a square modulo 4; K/F ramifies above 2")));
        }

        let mut finite_ramified = Vec::new();
        for (p, _) in arith::factor(norm.unsigned_abs()) {
            for prime in field.factor_rational_prime(p) {
                match delta.ord(&prime) {
                    0 => {}
                    1 => finite_ramified.push(prime),
                    k => {
                        return Err(Error::InvalidTower(format!(
                            "delta = {delta} is not squarefree: ord at {prime} is {k}"
                        )))
                    }
                }
            }
        }
        finite_ramified.sort();
        let rel_disc = IdealF::from_primes(finite_ramified.iter().map(|p| (*p, 1)));
        let r = field.degree() + finite_ramified.len() as u32;

        let closure_degree = if field.degree() == 1 {
            2
        } else if (delta * delta.conjugate()).is_square() {
            4
        } else {
            8
        };

        let mut tower = FieldTower {
            field,
            delta,
            rel_disc,
            finite_ramified,
            r,
            w: 2,
            class_data: ClassData { h: 1, ck: 1, source: ClassSource::Computed },
            closure_degree,
        };
        tower.w = roots_of_unity(&tower);
        tower.class_data = resolve_class_data(&tower, config)?;
        Ok(tower)
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    /// `[F:Q]`.
    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    /// `[K:Q]`.
    pub fn k_degree(&self) -> u32 {
        2 * self.field.degree()
    }

    pub fn delta(&self) -> &ElementF {
        &self.delta
    }

    pub fn rel_disc(&self) -> &IdealF {
        &self.rel_disc
    }

    /// `N_{F/Q}(d_{K/F})`.
    pub fn rel_disc_norm(&self) -> u64 {
        self.finite_ramified.iter().map(|p| p.norm()).product()
    }

    pub fn finite_ramified(&self) -> &[PrimeOfF] {
        &self.finite_ramified
    }

    /// Number of places of `F`, archimedean included, ramified in `K`.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn class_data(&self) -> ClassData {
        self.class_data
    }

    /// Degree over `Q` of the normal closure of `K`.
    pub fn normal_closure_degree(&self) -> u32 {
        self.closure_degree
    }

    pub fn element(&self, a: i128, b: i128) -> Result<ElementF> {
        ElementF::new(self.field, a, b, 1)
    }

    pub fn factor_rational_prime(&self, p: u64) -> Vec<PrimeOfF> {
        self.field.factor_rational_prime(p)
    }

    pub fn is_finite_ramified(&self, prime: &PrimeOfF) -> bool {
        self.finite_ramified.binary_search(prime).is_ok()
    }

    /// How `P` decomposes in `K`.
    pub fn splitting(&self, prime: &PrimeOfF) -> SplittingType {
        if prime.p() == 2 {
            // unramified above 2 by construction
            return if self.delta.is_square_above_two(prime) { SplittingType::Split } else { SplittingType::Inert };
        }
        if self.delta.ord(prime) % 2 != 0 {
            return SplittingType::RamifiedInK;
        }
        // δ is a unit at odd P once squarefree
        if self.delta.unit_character(prime) == 1 {
            SplittingType::Split
        } else {
            SplittingType::Inert
        }
    }

    /// `χ_{K/F}` on a uniformizer at `P`: 1 split, −1 inert, 0 ramified.
    pub fn chi_at_prime(&self, prime: &PrimeOfF) -> i32 {
        match self.splitting(prime) {
            SplittingType::Split => 1,
            SplittingType::Inert => -1,
            SplittingType::RamifiedInK => 0,
        }
    }

    /// The local character `χ_P(α)` of `K_P/F_P` at a finite prime.
    ///
    /// At ramified `P` the uniformizer `−δ` is a local norm, so `χ_P(α)` is the
    /// residue symbol of `α·(−δ)^{−ord_P α}`.
    pub fn local_character(&self, alpha: &ElementF, prime: &PrimeOfF) -> i32 {
        match self.splitting(prime) {
            SplittingType::Split => 1,
            SplittingType::Inert => {
                if alpha.ord(prime) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            SplittingType::RamifiedInK => {
                let uniformizer = self.delta.neg();
                alpha.unit_part_character(prime, &uniformizer)
            }
        }
    }

    /// `χ_v(α)` at the real place `v`: the sign of `α` there.
    pub fn arch_character(&self, alpha: &ElementF, place: usize) -> i32 {
        alpha.sign_at(place)
    }

    /// Ramification index in `K̃/F` of the primes above `P`.
    pub fn closure_ramification(&self, prime: &PrimeOfF) -> u32 {
        if prime.p() == 2 {
            return 1;
        }
        let in_k = self.delta.ord(prime) % 2 != 0;
        let in_conjugate = self.degree() == 2 && self.delta.conjugate().ord(prime) % 2 != 0;
        if in_k || in_conjugate {
            2
        } else {
            1
        }
    }
}

fn resolve_class_data(tower: &FieldTower, config: &FieldConfig) -> Result<ClassData> {
    if tower.degree() == 1 {
        let h = class_number_bruteforce(tower)?;
        if let Some(hs) = config.h {
            if hs != h {
                return Err(Error::InvalidTower(format!(
                    "supplied h = {hs} disagrees with the computed class number {h}"
                )));
            }
        }
        if let Some(ck) = config.ck {
            if ck != h {
                return Err(Error::InvalidTower(format!(
                    "for imaginary quadratic K, |C_K| equals h = {h}; got ck = {ck}"
                )));
            }
        }
        let source = if config.h.is_some() { ClassSource::Supplied } else { ClassSource::Computed };
        return Ok(ClassData { h, ck: h, source });
    }
    match (config.h, config.ck) {
        (Some(h), Some(ck)) => {
            if h == 0 || ck == 0 || ck % h != 0 {
                return Err(Error::InvalidTower(format!(
                    "class data must satisfy h | ck with both positive; got h = {h}, ck = {ck}"
                )));
            }
            Ok(ClassData { h, ck, source: ClassSource::Supplied })
        }
        _ => Err(Error::InvalidTower("quartic K needs supplied class data (keys h and ck)".into())),
    }
}

/// Order of the torsion subgroup of `O_K^×`.
///
/// A root of unity `ζ ∈ K` satisfies `ζ² − tζ + 1 = 0` with `t = ζ + ζ̄ ∈ O_F`
/// and `|σ(t)| ≤ 2` at every real place; conversely such a `t` yields a root
/// of unity in `K` exactly when `t² − 4 ∈ δ·F²`. The multiplicative order of
/// each root is found from the Chebyshev recurrence `T_{k+1} = t·T_k − T_{k−1}`
/// (`T_k = ζ^k + ζ^{−k}`), and `w` is the largest order present, i.e. the
/// largest `m` for which the `m`-th cyclotomic polynomial has a root in `K`.
pub fn roots_of_unity(tower: &FieldTower) -> u32 {
    let orders = root_of_unity_orders(tower);
    orders.iter().copied().max().unwrap_or(2)
}

/// Orders of all roots of unity in `K`, with multiplicity.
pub fn root_of_unity_orders(tower: &FieldTower) -> Vec<u32> {
    let field = tower.field;
    let bound_b: i128 = if field.degree() == 1 { 0 } else { 2 };
    let bound_a: i128 = 4 + 2 * ((field.disc() as f64).sqrt().ceil() as i128);
    let mut orders = Vec::new();
    for b in -bound_b..=bound_b {
        for a in -bound_a..=bound_a {
            let t = [a, b];
            let in_box = (0..field.places())
                .all(|v| field.sign_coords([a - 2, b], v) <= 0 && field.sign_coords([a + 2, b], v) >= 0);
            if !in_box {
                continue;
            }
            let t2 = field.mul(t, t);
            let disc = [t2[0] - 4, t2[1]];
            let roots = if disc == [0, 0] {
                1
            } else {
                let d = ElementF::new(field, disc[0], disc[1], 1).expect("nonzero");
                if (d * tower.delta.inverse()).is_square() {
                    2
                } else {
                    0
                }
            };
            if roots > 0 {
                let m = chebyshev_order(&field, t);
                orders.extend(std::iter::repeat_n(m, roots));
            }
        }
    }
    orders
}

fn chebyshev_order(field: &BaseField, t: [i128; 2]) -> u32 {
    let two = [2, 0];
    let (mut prev, mut cur) = (two, t);
    for k in 1..=60u32 {
        if cur == two {
            return k;
        }
        let tc = field.mul(t, cur);
        let next = [tc[0] - prev[0], tc[1] - prev[1]];
        prev = cur;
        cur = next;
    }
    unreachable!("t is twice the real part of a root of unity")
}

/// Class number of an imaginary quadratic `K` from reduced binary quadratic
/// forms of discriminant `disc(K) = δ`.
pub fn class_number_bruteforce(tower: &FieldTower) -> Result<u64> {
    if tower.degree() != 1 {
        return Err(Error::Unsupported(
            "class number enumeration is implemented for imaginary quadratic K only".into(),
        ));
    }
    let d = tower.delta.numerator()[0] as i64;
    Ok(reduced_forms(d).len() as u64)
}

/// Primitive reduced forms `(a, b, c)` of negative discriminant `d`.
pub fn reduced_forms(d: i64) -> Vec<(i64, i64, i64)> {
    use num_integer::Integer;
    assert!(d < 0 && d.rem_euclid(4) <= 1, "not a negative discriminant");
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in (1 - a)..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (b < 0 && a == c) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                forms.push((a, b, c));
            }
        }
        a += 1;
    }
    forms
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: u8,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub violations: Vec<Violation>,
}

impl Diagnostics {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("ramification conditions 1 and 2 hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "condition {} violated: {}", v.condition, v.detail)?;
        }
        Ok(())
    }
}

/// Check the two ramification hypotheses of the main identity:
/// (1) `K/F` ramifies at some finite prime; (2) for every rational prime
/// `l ≤ [K̃:Q]/[K:Q] + 1`, the ramification index of `K̃/Q` above `l` is `< l`.
pub fn validate_conditions(tower: &FieldTower) -> Diagnostics {
    let mut violations = Vec::new();
    if tower.finite_ramified.is_empty() {
        violations.push(Violation { condition: 1, detail: "K/F is unramified at all finite primes".into() });
    }
    let bound = tower.closure_degree / tower.k_degree() + 1;
    for l in arith::primes_up_to(bound as u64) {
        let primes: BTreeSet<PrimeOfF> = tower.factor_rational_prime(l).into_iter().collect();
        for prime in primes {
            let e = prime.e() * tower.closure_ramification(&prime);
            if e as u64 >= l {
                violations.push(Violation {
                    condition: 2,
                    detail: format!("ramification index {e} above l = {l} is not < {l}"),
                });
            }
        }
    }
    Diagnostics { violations }
}
