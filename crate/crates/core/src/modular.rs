//! Congruence subgroups of `Π = PGL₂(Z)` and `Γ = PSL₂(Z)`.
//!
//! Elements are [`ModularElement`]s: integer 2×2 matrices of determinant `±1`, normalized
//! modulo `±1` so the first nonzero entry is positive. Entries are big integers because
//! the prime-power generator table produces entries far beyond `i64`.
//!
//! Subgroups ([`SubgroupSpec`]) are membership predicates:
//!
//! - `Π(n)`: `α ≡ ±I mod n`; `Γ(n) = Π(n) ∩ Γ`,
//! - `G_n`: `α ≡ λI mod n` for some `λ`,
//! - `B_{k,l}^×`: `a ≡ d`, `c ≡ 0 mod k` and `b ≡ 0 mod l`,
//! - `Γ₀(k)`: `c ≡ 0 mod k` with determinant 1,
//! - `Γ₀⁺(l)`: scaled elements `√l′·[[a₀, b₀/l′], [c₀·l/l′, d₀]]` of reduced norm 1.
//!
//! Scans over boxes of entries are exhaustive and return results sorted by entries.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{factorize, int, isqrt, radical, Int, Rat};
use crate::json::JsonInt;
use crate::matrix::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("determinant {0} is not ±1")]
    BadDeterminant(Int),
    #[error("invalid subgroup parameter: {0}")]
    BadParameter(String),
    #[error("malformed scaled element: {0}")]
    MalformedScaled(String),
    #[error("index {0} is not divisible by 12")]
    IndivisibleIndex(u64),
    #[error("D = {0} must be positive and not a square")]
    BadPellDiscriminant(i64),
}

/// `[[a,b],[c,d]]` modulo `±1`, determinant `±1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModularElement {
    m: [Int; 4],
}

impl ModularElement {
    pub fn new(a: Int, b: Int, c: Int, d: Int) -> Result<Self, ModularError> {
        let det = &a * &d - &b * &c;
        if !det.abs().is_one() {
            return Err(ModularError::BadDeterminant(det));
        }
        let mut m = [a, b, c, d];
        if m.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
            m = m.map(|x| -x);
        }
        Ok(ModularElement { m })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ModularError> {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        ModularElement { m: [int(1), int(0), int(0), int(1)] }
    }

    pub fn a(&self) -> &Int {
        &self.m[0]
    }

    pub fn b(&self) -> &Int {
        &self.m[1]
    }

    pub fn c(&self) -> &Int {
        &self.m[2]
    }

    pub fn d(&self) -> &Int {
        &self.m[3]
    }

    pub fn entries(&self) -> &[Int; 4] {
        &self.m
    }

    pub fn entries_i64(&self) -> Option<[i64; 4]> {
        let v: Option<Vec<i64>> = self.m.iter().map(ToPrimitive::to_i64).collect();
        v.map(|v| [v[0], v[1], v[2], v[3]])
    }

    pub fn det(&self) -> i64 {
        (self.a() * self.d() - self.b() * self.c()).to_i64().expect("determinant is ±1")
    }

    /// Trace of the normalized representative; only `|tr|` is a class invariant.
    pub fn trace(&self) -> Int {
        self.a() + self.d()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &o.m;
        Self::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h).expect("det is multiplicative")
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = &self.m;
        Self::new(d.clone(), -b, -c, a.clone()).expect("adjugate of a unimodular matrix")
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&[vec![self.m[0].clone(), self.m[1].clone()], vec![self.m[2].clone(), self.m[3].clone()]])
    }
}

impl fmt::Debug for ModularElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m[0], self.m[1], self.m[2], self.m[3])
    }
}

impl fmt::Display for ModularElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for ModularElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = [
            [JsonInt(self.m[0].clone()), JsonInt(self.m[1].clone())],
            [JsonInt(self.m[2].clone()), JsonInt(self.m[3].clone())],
        ];
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModularElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [[a, b], [c, e]] = <[[JsonInt; 2]; 2]>::deserialize(d)?;
        ModularElement::new(a.0, b.0, c.0, e.0).map_err(serde::de::Error::custom)
    }
}

/// An element `√l′·[[a₀, b₀/l′], [c₀·l/l′, d₀]]` of `Γ₀⁺(l)`; `√l′` is never formed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScaledElement {
    pub l_prime: i64,
    pub q: [Int; 4],
}

impl ScaledElement {
    pub fn new(l_prime: i64, a0: i64, b0: i64, c0: i64, d0: i64) -> Self {
        ScaledElement { l_prime, q: [int(a0), int(b0), int(c0), int(d0)] }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.q.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
            self.q = self.q.map(|x| -x);
        }
        self
    }

    fn validate(&self, l: i64) -> Result<(), ModularError> {
        if self.l_prime <= 0 {
            return Err(ModularError::MalformedScaled(format!("l' = {} must be positive", self.l_prime)));
        }
        if l <= 0 || l % self.l_prime != 0 {
            return Err(ModularError::MalformedScaled(format!("l' = {} does not divide l = {l}", self.l_prime)));
        }
        Ok(())
    }

    /// `a₀d₀l′ − b₀c₀(l/l′)`.
    pub fn reduced_norm(&self, l: i64) -> Int {
        let [a, b, c, d] = &self.q;
        a * d * int(self.l_prime) - b * c * int(l / self.l_prime)
    }

    /// Product in `Γ₀⁺(l)`: `√l₁·√l₂ = g·√l₃` with `g = gcd(l₁,l₂)` and `l₃ = l₁l₂/g²`.
    pub fn mul(&self, o: &Self, l: i64) -> Result<Self, ModularError> {
        self.validate(l)?;
        o.validate(l)?;
        let (l1, l2) = (self.l_prime, o.l_prime);
        let g = l1.gcd(&l2);
        let l3 = l1 / g * (l2 / g);
        let m1 = self.rational(l);
        let m2 = o.rational(l);
        let gq = Rat::from_integer(int(g));
        let prod = [
            &m1[0] * &m2[0] + &m1[1] * &m2[2],
            &m1[0] * &m2[1] + &m1[1] * &m2[3],
            &m1[2] * &m2[0] + &m1[3] * &m2[2],
            &m1[2] * &m2[1] + &m1[3] * &m2[3],
        ]
        .map(|x| x * &gq);
        let raw = [
            prod[0].clone(),
            &prod[1] * Rat::from_integer(int(l3)),
            &prod[2] * Rat::from_integer(int(l3)) / Rat::from_integer(int(l)),
            prod[3].clone(),
        ];
        if !raw.iter().all(Rat::is_integer) {
            return Err(ModularError::MalformedScaled("product left the scaled form".into()));
        }
        Ok(ScaledElement { l_prime: l3, q: raw.map(|x| x.to_integer()) }.normalized())
    }

    /// Inverse via the adjugate: `(l′, d₀, −b₀, −c₀, a₀)`.
    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = &self.q;
        ScaledElement { l_prime: self.l_prime, q: [d.clone(), -b, -c, a.clone()] }.normalized()
    }

    /// `rad(l′)`, the image in `Γ₀⁺(l)/Γ₀(l) ≅ (Z/2)^ν` read as a set of primes.
    pub fn atkin_lehner_class(&self) -> u64 {
        radical(self.l_prime.unsigned_abs())
    }

    fn rational(&self, l: i64) -> [Rat; 4] {
        let lp = Rat::from_integer(int(self.l_prime));
        let [a, b, c, d] = self.q.clone().map(Rat::from_integer);
        [a, b / &lp, c * Rat::from_integer(int(l)) / lp, d]
    }
}

/// Subgroups of `Π` by congruence conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SubgroupSpec {
    #[serde(rename = "Pi_n")]
    PiN { n: i64 },
    #[serde(rename = "Gamma_n")]
    GammaN { n: i64 },
    #[serde(rename = "B_kl_units")]
    BklUnits { k: i64, l: i64 },
    #[serde(rename = "G_n")]
    GN { n: i64 },
    #[serde(rename = "Gamma0_k")]
    Gamma0 { k: i64 },
    #[serde(rename = "Gamma0_plus_l")]
    Gamma0Plus { l: i64 },
}

impl SubgroupSpec {
    pub fn validate(&self) -> Result<(), ModularError> {
        let ok = match *self {
            SubgroupSpec::PiN { n } | SubgroupSpec::GammaN { n } | SubgroupSpec::GN { n } => n >= 1,
            SubgroupSpec::BklUnits { k, l } => k != 0 && l != 0,
            SubgroupSpec::Gamma0 { k } => k != 0,
            SubgroupSpec::Gamma0Plus { l } => l >= 1,
        };
        ok.then_some(()).ok_or_else(|| ModularError::BadParameter(format!("{self:?}")))
    }

    pub fn name(&self) -> String {
        match *self {
            SubgroupSpec::PiN { n } => format!("Π({n})"),
            SubgroupSpec::GammaN { n } => format!("Γ({n})"),
            SubgroupSpec::BklUnits { k, l } => format!("B_{{{k},{l}}}^×"),
            SubgroupSpec::GN { n } => format!("G_{n}"),
            SubgroupSpec::Gamma0 { k } => format!("Γ₀({k})"),
            SubgroupSpec::Gamma0Plus { l } => format!("Γ₀⁺({l})"),
        }
    }
}

fn divides(n: i64, x: &Int) -> bool {
    (x % Int::from(n)).is_zero()
}

/// Congruence membership; `Γ₀⁺(l)` reads a plain element as the scaled element with `l′ = 1`.
pub fn member(x: &ModularElement, s: &SubgroupSpec) -> Result<bool, ModularError> {
    s.validate()?;
    let (a, b, c, d) = (x.a(), x.b(), x.c(), x.d());
    Ok(match *s {
        SubgroupSpec::PiN { n } => {
            divides(n, b)
                && divides(n, c)
                && (divides(n, &(a - 1)) && divides(n, &(d - 1)) || divides(n, &(a + 1)) && divides(n, &(d + 1)))
        }
        SubgroupSpec::GammaN { n } => x.det() == 1 && member(x, &SubgroupSpec::PiN { n })?,
        SubgroupSpec::GN { n } => divides(n, b) && divides(n, c) && divides(n, &(a - d)),
        SubgroupSpec::BklUnits { k, l } => divides(k, &(a - d)) && divides(k, c) && divides(l, b),
        SubgroupSpec::Gamma0 { k } => x.det() == 1 && divides(k, c),
        SubgroupSpec::Gamma0Plus { l } => x.det() == 1 && divides(l, c),
    })
}

/// Membership of a scaled element in `Γ₀⁺(l)`: `l′ | l` and reduced norm 1.
pub fn member_scaled(x: &ScaledElement, l: i64) -> Result<bool, ModularError> {
    x.validate(l)?;
    Ok(x.reduced_norm(l).is_one())
}

/// `[Γ : Γ(n)] = (n³/2)·Π_{p|n}(1 − 1/p²)` for `n ≥ 3`; 1 and 6 for `n = 1, 2`.
pub fn index_gamma_n(n: u64) -> u64 {
    match n {
        0 => panic!("n must be positive"),
        1 => 1,
        2 => 6,
        _ => sl2_order_formula(n) / 2,
    }
}

/// `|SL₂(Z/n)| = n³·Π_{p|n}(1 − 1/p²)`.
fn sl2_order_formula(n: u64) -> u64 {
    factorize(n).iter().fold(n * n * n, |acc, &(p, _)| acc / (p * p) * (p * p - 1))
}

/// `|PSL₂(Z/n)|` by exhaustive count of `SL₂(Z/n)` divided by `|{±I}|`.
pub fn order_psl2_zn(n: u64) -> u64 {
    let count = count_matrices_mod(n, |det| det == 1 % n);
    if n <= 2 {
        count
    } else {
        count / 2
    }
}

fn count_matrices_mod(n: u64, accept: impl Fn(u64) -> bool) -> u64 {
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if accept((a * d + n * n - b * c % n) % n) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// `|{a ∈ (Z/n)^× : a² ≡ ±1}/{±1}|` by scan.
pub fn delta_n(n: u64) -> u64 {
    let classes: BTreeSet<u64> = scalar_classes(n).into_iter().collect();
    classes.len() as u64
}

/// Representatives `min(λ, n−λ)` of the classes `λ mod n` with `λ² ≡ ±1`.
pub fn scalar_classes(n: u64) -> Vec<u64> {
    assert!(n >= 1, "n must be positive");
    let mut out: Vec<u64> = (0..n)
        .filter(|&a| a.gcd(&n) == 1 % n.max(2) || n == 1)
        .filter(|&a| {
            let sq = a * a % n;
            sq == 1 % n || sq == (n - 1) % n
        })
        .map(|a| a.min((n - a) % n))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `[Π : G_n] = n³·Π(1 − 1/p²)/δ_n` for `n ≥ 3`; 1 and 6 for `n = 1, 2`.
pub fn index_pi_g_n(n: u64) -> u64 {
    match n {
        0 => panic!("n must be positive"),
        1 => 1,
        2 => 6,
        _ => sl2_order_formula(n) / delta_n(n),
    }
}

/// `[Π : G_n]` from counts mod `n`: matrices with `det ≡ ±1` over scalars with `λ² ≡ ±1`.
pub fn index_pi_g_n_by_count(n: u64) -> u64 {
    let pm1 = |x: u64| x == 1 % n || x == (n - 1) % n;
    let mats = count_matrices_mod(n, pm1);
    let scalars = (0..n).filter(|&l| pm1(l * l % n)).count() as u64;
    mats / scalars
}

/// Order of `x` in `Π`: `Some(1)` for the identity, `Some(2 | 3)` for torsion, `None` if infinite.
pub fn torsion_order(x: &ModularElement) -> Option<u32> {
    if x.is_identity() {
        return Some(1);
    }
    let tr = x.trace().abs();
    match (x.det(), tr.to_u64()) {
        (1, Some(0)) | (-1, Some(0)) => Some(2),
        (1, Some(1)) => Some(3),
        _ => None,
    }
}

/// True for nontrivial elements of finite order.
pub fn is_torsion(x: &ModularElement) -> bool {
    torsion_order(x).is_some_and(|o| o > 1)
}

/// Nontrivial torsion elements of `s` with all entries in `[−bound, bound]`.
///
/// Torsion forces `|tr| ≤ 1`, so only `d ∈ {−a−1, −a, −a+1}` is scanned.
pub fn torsion_search(s: &SubgroupSpec, bound: i64) -> Result<Vec<ModularElement>, ModularError> {
    s.validate()?;
    let mut found = BTreeSet::new();
    for a in -bound..=bound {
        for d in [-a - 1, -a, -a + 1].into_iter().filter(|d| d.abs() <= bound) {
            for c in -bound..=bound {
                for det in [1i64, -1] {
                    let bs: Vec<i64> = if c == 0 {
                        if a * d == det {
                            (-bound..=bound).collect()
                        } else {
                            vec![]
                        }
                    } else if (a * d - det) % c == 0 && ((a * d - det) / c).abs() <= bound {
                        vec![(a * d - det) / c]
                    } else {
                        vec![]
                    };
                    for b in bs {
                        let x = ModularElement::from_i64(a, b, c, d).expect("determinant solved for");
                        if is_torsion(&x) && member(&x, s)? {
                            found.insert(x);
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// All elements of `s` with entries in `[−bound, bound]`, each class once.
pub fn member_search(s: &SubgroupSpec, bound: i64) -> Result<Vec<ModularElement>, ModularError> {
    s.validate()?;
    let mut found = BTreeSet::new();
    found.insert(ModularElement::identity());
    for a in -bound..=bound {
        for d in -bound..=bound {
            for c in -bound..=bound {
                for det in [1i64, -1] {
                    let bs: Vec<i64> = if c == 0 {
                        if a * d == det {
                            (-bound..=bound).collect()
                        } else {
                            vec![]
                        }
                    } else if (a * d - det) % c == 0 && ((a * d - det) / c).abs() <= bound {
                        vec![(a * d - det) / c]
                    } else {
                        vec![]
                    };
                    for b in bs {
                        let x = ModularElement::from_i64(a, b, c, d).expect("determinant solved for");
                        if member(&x, s)? {
                            found.insert(x);
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// `[Π : P]/12 + 1`, the rank of a torsion-free `P` of finite index in `Π`.
pub fn free_rank(index_in_pi: u64) -> Result<u64, ModularError> {
    if index_in_pi == 0 || !index_in_pi.is_multiple_of(12) {
        return Err(ModularError::IndivisibleIndex(index_in_pi));
    }
    Ok(index_in_pi / 12 + 1)
}

/// Whether `x² ≡ −1 mod n` has a solution, by scan.
pub fn qr_minus_one(n: u64) -> bool {
    assert!(n >= 1, "n must be positive");
    (0..n).any(|x| (x * x + 1) % n == 0)
}

/// An element of `G_n` congruent to `λI`, built for any `λ` with `λ² ≡ ±1 mod n`.
///
/// With `a = λ`, `b = n`, `d = λ + n·m` and `c = n·c′`, the determinant condition
/// `λ² + λnm − n²c′ = ε` reduces to `λm ≡ −(λ² − ε)/n mod n`, solvable because `λ` is a unit.
pub fn scalar_witness(n: i64, lambda: i64) -> Option<ModularElement> {
    [1, -1].into_iter().find_map(|eps| scalar_witness_det(n, lambda, eps))
}

/// [`scalar_witness`] with prescribed determinant `ε`, when `λ² ≡ ε mod n`.
pub fn scalar_witness_det(n: i64, lambda: i64, eps: i64) -> Option<ModularElement> {
    assert!(n >= 1, "n must be positive");
    if eps.abs() != 1 || (lambda * lambda - eps).rem_euclid(n) != 0 {
        return None;
    }
    if n == 1 {
        return ModularElement::from_i64(1, 0, 0, eps).ok();
    }
    let r = (lambda * lambda - eps) / n;
    let inv = mod_inverse(lambda.rem_euclid(n), n)?;
    let m = (-r * inv).rem_euclid(n);
    let d = lambda + n * m;
    let c_prime = (lambda * m + r) / n;
    debug_assert_eq!((lambda * m + r) % n, 0);
    let x = ModularElement::from_i64(lambda, n, n * c_prime, d).ok()?;
    debug_assert_eq!(x.det(), eps);
    Some(x)
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let g = a.extended_gcd(&n);
    (g.gcd == 1).then(|| g.x.rem_euclid(n))
}

/// `[Π : Π(n)]`: 1 and 6 for `n = 1, 2`; for `n ≥ 3`, `Π(n) = Γ(n)` has index `2·[Γ : Γ(n)]`.
pub fn index_pi_pi_n(n: u64) -> u64 {
    match n {
        0 => panic!("n must be positive"),
        1 => 1,
        2 => 6,
        _ => 2 * index_gamma_n(n),
    }
}

/// `[Π : Π(n)]` from counts mod `n`: matrices with `det ≡ ±1` over `|{±I mod n}|`.
pub fn index_pi_pi_n_by_count(n: u64) -> u64 {
    let pm1 = |x: u64| x == 1 % n || x == (n - 1) % n;
    let signs = if n <= 2 { 1 } else { 2 };
    count_matrices_mod(n, pm1) / signs
}

/// Smallest positive solution `(x, y)` of `x² − D·y² = −4`, or `None` when unsolvable.
///
/// For `D > 16` every solution with `gcd(x,y) ∈ {1,2}` comes from a convergent `p/q` of
/// `√D` with `p² − Dq² ∈ {−4, −1}`; two periods of the expansion cover every residue.
/// For `D ≤ 16` the solution, if any, has `y` below the fundamental solution of
/// `x² − Dy² = 1`, which bounds a direct scan.
pub fn negative_pell(d: i64) -> Result<Option<(Int, Int)>, ModularError> {
    if d <= 0 || (isqrt(d as u64).pow(2) == d as u64) {
        return Err(ModularError::BadPellDiscriminant(d));
    }
    let dd = int(d);
    let target = int(-4);
    if d <= 16 {
        let (_, y1) = pell_fundamental(d);
        let mut y = Int::one();
        while y <= y1 {
            let x2 = &dd * &y * &y - Int::from(4);
            if !x2.is_negative() {
                let x = x2.sqrt();
                if &x * &x == x2 {
                    return Ok(Some((x, y)));
                }
            }
            y += 1;
        }
        return Ok(None);
    }
    let mut best: Option<(Int, Int)> = None;
    for (p, q) in convergents(d, 2 * cf_period(d).len()) {
        let v = &p * &p - &dd * &q * &q;
        let cand = if v == target {
            Some((p, q))
        } else if v == int(-1) {
            Some((Int::from(2) * p, Int::from(2) * q))
        } else {
            None
        };
        if let Some(c) = cand {
            if best.as_ref().is_none_or(|b| c.1 < b.1) {
                best = Some(c);
            }
        }
    }
    Ok(best)
}

/// The periodic part `[a₁, …, a_r]` of the continued fraction `√D = [a₀; a₁, …, a_r]`.
pub fn cf_period(d: i64) -> Vec<i64> {
    let a0 = isqrt(d as u64) as i64;
    let (mut m, mut q, mut a) = (0i64, 1i64, a0);
    let mut out = Vec::new();
    loop {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        out.push(a);
        if a == 2 * a0 {
            return out;
        }
    }
}

fn convergents(d: i64, count: usize) -> Vec<(Int, Int)> {
    let a0 = isqrt(d as u64) as i64;
    let period = cf_period(d);
    let terms = std::iter::once(a0).chain(period.iter().copied().cycle()).take(count + 1);
    let (mut p_prev, mut p) = (Int::one(), Int::zero());
    let (mut q_prev, mut q) = (Int::zero(), Int::one());
    let mut out = Vec::new();
    for a in terms {
        let a = int(a);
        let p_next = &a * &p_prev + &p;
        let q_next = &a * &q_prev + &q;
        p = std::mem::replace(&mut p_prev, p_next);
        q = std::mem::replace(&mut q_prev, q_next);
        out.push((p_prev.clone(), q_prev.clone()));
    }
    out
}

/// Fundamental solution of `x² − Dy² = 1`.
pub fn pell_fundamental(d: i64) -> (Int, Int) {
    let r = cf_period(d).len();
    let k = if r.is_multiple_of(2) { r } else { 2 * r };
    convergents(d, k).swap_remove(k - 1)
}

/// The generating set of `G_n` for prime powers and the extra generator beyond `Γ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub text: String,
    pub extra: Option<ModularElement>,
}

/// `G_n` as `Γ(n)` plus at most one generator, for `n` a prime power.
pub fn prime_power_presentation(n: u64) -> Option<Presentation> {
    let f = factorize(n);
    let &[(p, e)] = f.as_slice() else { return None };
    let pe = int(n as i64);
    if p == 2 {
        return Some(match e {
            1 => Presentation {
                text: "Π(2) = ⟨Γ(2), [[1,0],[0,-1]]⟩ ≅ C2 * C2 * C2".into(),
                extra: Some(ModularElement::from_i64(1, 0, 0, -1).expect("det -1")),
            },
            2 => Presentation { text: "Γ(4)".into(), extra: None },
            _ => {
                let h = Int::one() << (e - 1);
                let x = ModularElement::new(
                    Int::one() + &h,
                    pe.clone(),
                    Int::one() << (2 * e - 3),
                    Int::one() - &h + (Int::one() << (2 * (e - 1))),
                )
                .expect("det 1 by the sum-of-cubes identity");
                Presentation { text: format!("⟨Γ({n}), {x}⟩"), extra: Some(x) }
            }
        });
    }
    if p % 4 == 3 {
        return Some(Presentation { text: format!("Γ({n})"), extra: None });
    }
    let a = (1..n).find(|a| (a * a + 1) % n == 0).expect("−1 is a square mod p^e for p ≡ 1 mod 4");
    let a = int(a as i64);
    let top = a.pow(2 * n as u32);
    let x = ModularElement::new(a.clone(), pe.clone(), (top + 1) / &pe, a.pow(2 * n as u32 - 1)).expect("det −1");
    Some(Presentation {
        text: format!("⟨Γ({n}), [[{a},{n}],[(a^{}+1)/{n}, a^{}]] with a = {a}⟩", 2 * n, 2 * n - 1),
        extra: Some(x),
    })
}
