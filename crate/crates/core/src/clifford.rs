//! The Clifford algebra of a rank-3 even lattice.
//!
//! `Cl(L)` has basis `E_S` for `S ⊆ {1,2,3}`, stored as a bitmask (bit `i−1` for `Eᵢ`).
//! Products are computed by rewriting words with
//!
//! - `EᵢEᵢ = ⟨Eᵢ,Eᵢ⟩/2`,
//! - `EᵢEⱼ = ⟨Eᵢ,Eⱼ⟩ − EⱼEᵢ` for `i > j`,
//!
//! and every sign in this module (reversal, the even basis, `E`) comes out of that
//! rewriting. [`CliffordAlgebra`] caches the 64 basis products.
//!
//! The even part `B = Cl⁺(L)` uses the basis `(1, E₂E₃, E₃E₁, E₁E₂)` and the odd part
//! uses `(E₁E₂E₃, E₁, E₂, E₃)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{fmt_rat, rat, rat_int, Int, Rat};
use crate::json::JsonRat;
use crate::lattice::Lattice;
use crate::matrix::{IntMatrix, RatMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("Gram parameters give a degenerate lattice")]
    Degenerate,
    #[error("lattice has rank {0}; the Clifford module needs rank 3")]
    NotRank3(usize),
    #[error("element mixes even and odd grades")]
    MixedGrade,
    #[error("element is not even")]
    NotEven,
    #[error("element is not odd")]
    NotOdd,
    #[error("element has zero norm")]
    ZeroNorm,
    #[error("bad Clifford element key {0:?}")]
    BadKey(String),
}

/// `Q_L = [[2a,u,t],[u,2b,s],[t,s,2c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GramParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub s: i64,
    pub t: i64,
    pub u: i64,
}

impl GramParams {
    pub fn new(a: i64, b: i64, c: i64, s: i64, t: i64, u: i64) -> Result<Self, CliffordError> {
        let p = GramParams { a, b, c, s, t, u };
        if p.disc().is_zero() {
            return Err(CliffordError::Degenerate);
        }
        Ok(p)
    }

    /// Parameters of `U(k) ⊕ ⟨2l⟩`: `a = c = s = u = 0`, `b = l`, `t = k`.
    pub fn family(k: i64, l: i64) -> Result<Self, CliffordError> {
        Self::new(0, l, 0, 0, k, 0)
    }

    pub fn from_lattice(lat: &Lattice) -> Result<Self, CliffordError> {
        if lat.rank() != 3 {
            return Err(CliffordError::NotRank3(lat.rank()));
        }
        let q = lat.gram();
        let e = |i, j| i64::try_from(&q[(i, j)]).expect("Gram entries fit in i64");
        Self::new(e(0, 0) / 2, e(1, 1) / 2, e(2, 2) / 2, e(1, 2), e(0, 2), e(0, 1))
    }

    pub fn gram(&self) -> IntMatrix {
        let GramParams { a, b, c, s, t, u } = *self;
        IntMatrix::from_i64(&[&[2 * a, u, t], &[u, 2 * b, s], &[t, s, 2 * c]])
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.gram()).expect("validated parameters")
    }

    /// `D = det Q_L = 2(4abc + stu − as² − bt² − cu²)`.
    pub fn disc(&self) -> Int {
        let [a, b, c, s, t, u] = [self.a, self.b, self.c, self.s, self.t, self.u].map(Int::from);
        Int::from(2) * (Int::from(4) * &a * &b * &c + &s * &t * &u - &a * &s * &s - &b * &t * &t - &c * &u * &u)
    }

    /// `D₀ = D/8 = det(Q_L/2)`.
    pub fn d0(&self) -> Rat {
        Rat::new(self.disc(), Int::from(8))
    }

    /// `⟨Eᵢ,Eⱼ⟩` with 0-based indices.
    pub fn inner(&self, i: usize, j: usize) -> Int {
        self.gram()[(i, j)].clone()
    }

    /// `Q_{L₀} = Q_L/2`.
    pub fn gram0(&self) -> RatMatrix {
        self.gram().to_rat().scale(&rat(1, 2))
    }
}

impl fmt::Display for GramParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let GramParams { a, b, c, s, t, u } = self;
        write!(f, "(a,b,c,s,t,u) = ({a},{b},{c},{s},{t},{u})")
    }
}

const SUBSET_KEYS: [&str; 8] = ["", "1", "2", "12", "3", "13", "23", "123"];

/// An element of `Cl(L) ⊗ Q` by its 8 coefficients on `E_S`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    pub coeffs: [Rat; 8],
}

impl CliffordElement {
    pub fn zero() -> Self {
        CliffordElement { coeffs: std::array::from_fn(|_| Rat::zero()) }
    }

    pub fn scalar(q: Rat) -> Self {
        let mut x = Self::zero();
        x.coeffs[0] = q;
        x
    }

    pub fn one() -> Self {
        Self::scalar(Rat::one())
    }

    /// `E_S` for the subset bitmask `mask`.
    pub fn basis(mask: usize) -> Self {
        let mut x = Self::zero();
        x.coeffs[mask] = Rat::one();
        x
    }

    /// The generator `Eᵢ`, `i ∈ {1,2,3}`.
    pub fn gen(i: usize) -> Self {
        assert!((1..=3).contains(&i), "generator index out of range");
        Self::basis(1 << (i - 1))
    }

    /// `Σ vᵢEᵢ`.
    pub fn vector(v: &[Rat]) -> Self {
        let mut x = Self::zero();
        for (i, q) in v.iter().enumerate() {
            x.coeffs[1 << i] = q.clone();
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_even(&self) -> bool {
        (0..8).filter(|m: &usize| m.count_ones() % 2 == 1).all(|m| self.coeffs[m].is_zero())
    }

    pub fn is_odd(&self) -> bool {
        (0..8).filter(|m: &usize| m.count_ones().is_multiple_of(2)).all(|m| self.coeffs[m].is_zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The degree-1 part `(v₁,v₂,v₃)` when the element lies in `L ⊗ Q`.
    pub fn as_vector(&self) -> Option<[Rat; 3]> {
        let pure = [0, 3, 5, 6, 7].iter().all(|&m| self.coeffs[m].is_zero());
        pure.then(|| [self.coeffs[1].clone(), self.coeffs[2].clone(), self.coeffs[4].clone()])
    }

    pub fn scale(&self, q: &Rat) -> Self {
        CliffordElement { coeffs: std::array::from_fn(|i| &self.coeffs[i] * q) }
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, o: &CliffordElement) -> CliffordElement {
        CliffordElement { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &o.coeffs[i]) }
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, o: &CliffordElement) -> CliffordElement {
        CliffordElement { coeffs: std::array::from_fn(|i| &self.coeffs[i] - &o.coeffs[i]) }
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        CliffordElement { coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..8)
            .filter(|&m| !self.coeffs[m].is_zero())
            .map(|m| match m {
                0 => fmt_rat(&self.coeffs[0]),
                _ => format!("{}·E{}", fmt_rat(&self.coeffs[m]), SUBSET_KEYS[m]),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for CliffordElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: BTreeMap<&'static str, JsonRat>,
        }
        let coeffs = (0..8)
            .filter(|&m| !self.coeffs[m].is_zero())
            .map(|m| (SUBSET_KEYS[m], JsonRat(self.coeffs[m].clone())))
            .collect();
        Repr { coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CliffordElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: BTreeMap<String, JsonRat>,
        }
        let repr = Repr::deserialize(d)?;
        let mut x = CliffordElement::zero();
        for (k, v) in repr.coeffs {
            let m = subset_mask(&k).ok_or_else(|| serde::de::Error::custom(CliffordError::BadKey(k.clone())))?;
            x.coeffs[m] = v.0;
        }
        Ok(x)
    }
}

/// Bitmask of a subset key like `"13"`; digits must be strictly ascending.
pub fn subset_mask(key: &str) -> Option<usize> {
    let mut mask = 0usize;
    let mut last = 0u32;
    for ch in key.chars() {
        let d = ch.to_digit(10)?;
        if !(1..=3).contains(&d) || d <= last {
            return None;
        }
        mask |= 1 << (d - 1);
        last = d;
    }
    Some(mask)
}

/// `Cl(L)` for fixed Gram parameters, with cached basis products and reversals.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    params: GramParams,
    gram: [[Rat; 3]; 3],
    table: Vec<CliffordElement>,
    rev: Vec<CliffordElement>,
}

impl CliffordAlgebra {
    pub fn new(params: GramParams) -> Self {
        let q = params.gram();
        let gram = std::array::from_fn(|i| std::array::from_fn(|j| rat_int(&q[(i, j)])));
        let mut alg = CliffordAlgebra { params, gram, table: Vec::new(), rev: Vec::new() };
        alg.table = (0..64).map(|k| alg.reduce_word(&[word(k / 8), word(k % 8)].concat())).collect();
        alg.rev = (0..8)
            .map(|m| {
                let mut w = word(m);
                w.reverse();
                alg.reduce_word(&w)
            })
            .collect();
        alg
    }

    pub fn params(&self) -> &GramParams {
        &self.params
    }

    /// Normal form of a word in `E₁,E₂,E₃` (0-based letters).
    fn reduce_word(&self, w: &[usize]) -> CliffordElement {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] >= w[i + 1]) else {
            return CliffordElement::basis(w.iter().fold(0, |m, &l| m | (1 << l)));
        };
        let (x, y) = (w[i], w[i + 1]);
        let rest: Vec<usize> = w[..i].iter().chain(&w[i + 2..]).copied().collect();
        if x == y {
            return self.reduce_word(&rest).scale(&(&self.gram[x][x] / Rat::from_integer(Int::from(2))));
        }
        let mut swapped = w.to_vec();
        swapped.swap(i, i + 1);
        &self.reduce_word(&rest).scale(&self.gram[x][y]) - &self.reduce_word(&swapped)
    }

    pub fn mul(&self, x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (i, xi) in x.coeffs.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
            for (j, yj) in y.coeffs.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                let c = xi * yj;
                for (k, tk) in self.table[i * 8 + j].coeffs.iter().enumerate() {
                    if !tk.is_zero() {
                        out.coeffs[k] += &c * tk;
                    }
                }
            }
        }
        out
    }

    pub fn mul3(&self, x: &CliffordElement, y: &CliffordElement, z: &CliffordElement) -> CliffordElement {
        self.mul(&self.mul(x, y), z)
    }

    /// The involution `x ↦ x*` reversing the order of factors.
    pub fn reversal(&self, x: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, q) in x.coeffs.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
            out = &out + &self.rev[m].scale(q);
        }
        out
    }

    /// `Tr(x) = x + x*` for even `x`.
    pub fn trace(&self, x: &CliffordElement) -> Result<Rat, CliffordError> {
        if !x.is_even() {
            return Err(CliffordError::NotEven);
        }
        let t = x + &self.reversal(x);
        debug_assert!(t.is_scalar());
        Ok(t.coeffs[0].clone())
    }

    /// `N x = x·x*` for `x` of pure grade.
    pub fn norm(&self, x: &CliffordElement) -> Result<Rat, CliffordError> {
        if !x.is_even() && !x.is_odd() {
            return Err(CliffordError::MixedGrade);
        }
        let n = self.mul(x, &self.reversal(x));
        debug_assert!(n.is_scalar(), "x·x* is scalar for pure grade in rank 3");
        Ok(n.coeffs[0].clone())
    }

    /// `x⁻¹ = x*/N x` for pure-grade `x` with `N x ≠ 0`.
    pub fn inverse(&self, x: &CliffordElement) -> Result<CliffordElement, CliffordError> {
        let n = self.norm(x)?;
        if n.is_zero() {
            return Err(CliffordError::ZeroNorm);
        }
        Ok(self.reversal(x).scale(&n.recip()))
    }

    /// The even basis `e₀ = 1, e₁ = E₂E₃, e₂ = E₃E₁, e₃ = E₁E₂`.
    pub fn even_basis(&self) -> [CliffordElement; 4] {
        let g = CliffordElement::gen;
        [CliffordElement::one(), self.mul(&g(2), &g(3)), self.mul(&g(3), &g(1)), self.mul(&g(1), &g(2))]
    }

    /// The odd basis `(E₁E₂E₃, E₁, E₂, E₃)`.
    pub fn odd_basis(&self) -> [CliffordElement; 4] {
        [CliffordElement::basis(7), CliffordElement::gen(1), CliffordElement::gen(2), CliffordElement::gen(3)]
    }

    pub fn even(&self, x: &EvenCliffordElement) -> CliffordElement {
        let b = self.even_basis();
        (0..4).fold(CliffordElement::zero(), |acc, i| &acc + &b[i].scale(&x.x[i]))
    }

    pub fn to_even(&self, x: &CliffordElement) -> Result<EvenCliffordElement, CliffordError> {
        if !x.is_even() {
            return Err(CliffordError::NotEven);
        }
        let e2 = &self.even_basis()[2];
        let x2 = &x.coeffs[5] / &e2.coeffs[5];
        let x0 = &x.coeffs[0] - &x2 * &e2.coeffs[0];
        Ok(EvenCliffordElement { x: [x0, x.coeffs[6].clone(), x2, x.coeffs[3].clone()] })
    }

    pub fn odd(&self, x: &OddCliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        out.coeffs[7] = x.x[0].clone();
        out.coeffs[1] = x.x[1].clone();
        out.coeffs[2] = x.x[2].clone();
        out.coeffs[4] = x.x[3].clone();
        out
    }

    pub fn to_odd(&self, x: &CliffordElement) -> Result<OddCliffordElement, CliffordError> {
        if !x.is_odd() {
            return Err(CliffordError::NotOdd);
        }
        Ok(OddCliffordElement {
            x: [x.coeffs[7].clone(), x.coeffs[1].clone(), x.coeffs[2].clone(), x.coeffs[4].clone()],
        })
    }

    /// `⟨x,y⟩_B = Tr(x·y*)/2` on even elements.
    pub fn form_b(&self, x: &CliffordElement, y: &CliffordElement) -> Result<Rat, CliffordError> {
        Ok(self.trace(&self.mul(x, &self.reversal(y)))? / Rat::from_integer(Int::from(2)))
    }

    /// Central element `E = E₁E₂E₃ + ½(−sE₁ + tE₂ − uE₃)`.
    pub fn element_e(&self) -> CliffordElement {
        let p = &self.params;
        let mut e = CliffordElement::basis(7);
        e.coeffs[1] = rat(-p.s, 2);
        e.coeffs[2] = rat(p.t, 2);
        e.coeffs[4] = rat(-p.u, 2);
        e
    }

    /// `(1/6)·Σ sgn(σ)·v_{σ1}v_{σ2}v_{σ3}` for any three elements.
    pub fn alternating_product(&self, v: [&CliffordElement; 3]) -> CliffordElement {
        const PERMS: [([usize; 3], i64); 6] =
            [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];
        let sum = PERMS.iter().fold(CliffordElement::zero(), |acc, (p, sg)| {
            &acc + &self.mul3(v[p[0]], v[p[1]], v[p[2]]).scale(&rat(*sg, 1))
        });
        sum.scale(&rat(1, 6))
    }

    /// `E` as the alternating sum over the generators, with the complementary products
    /// `Êⱼ = (−1)^{j+1}/2 · Σ_{σ(j)=j} sgn(σ)·Π_{i≠j} E_{σ(i)}`.
    pub fn alternating_e(&self) -> (CliffordElement, [CliffordElement; 3]) {
        let g: [CliffordElement; 3] = std::array::from_fn(|i| CliffordElement::gen(i + 1));
        let e = self.alternating_product([&g[0], &g[1], &g[2]]);
        let hat = std::array::from_fn(|j| {
            let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
            let (p, q) = (&g[others[0]], &g[others[1]]);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            (&self.mul(p, q) - &self.mul(q, p)).scale(&rat(sign, 2))
        });
        (e, hat)
    }

    /// `ẽᵢ = eᵢ − Tr(eᵢ)/2`; `i = 0` gives `e₀`.
    pub fn tilde_e(&self, i: usize) -> CliffordElement {
        let e = self.even_basis()[i].clone();
        if i == 0 {
            return e;
        }
        let tr = self.trace(&e).expect("even basis element");
        &e - &CliffordElement::scalar(tr / Rat::from_integer(Int::from(2)))
    }

    /// `v·E` for `v ∈ L ⊗ Q`.
    pub fn v_dot_e(&self, v: &[Rat]) -> CliffordElement {
        self.mul(&CliffordElement::vector(v), &self.element_e())
    }

    /// `(x,y)_E`: the coefficient of `E₁E₂E₃` in `x·y*`, for `x` even and `y` odd.
    pub fn pairing_e(&self, x: &CliffordElement, y: &CliffordElement) -> Result<Rat, CliffordError> {
        if !x.is_even() {
            return Err(CliffordError::NotEven);
        }
        if !y.is_odd() {
            return Err(CliffordError::NotOdd);
        }
        Ok(self.mul(x, &self.reversal(y)).coeffs[7].clone())
    }

    /// Matrix on `(E₁,E₂,E₃)` of `v ↦ x·v·y`, when that map preserves `L ⊗ Q`.
    pub fn sandwich_matrix(&self, x: &CliffordElement, y: &CliffordElement) -> Option<RatMatrix> {
        let cols: Option<Vec<Vec<Rat>>> =
            (1..=3).map(|i| self.mul3(x, &CliffordElement::gen(i), y).as_vector().map(|v| v.to_vec())).collect();
        Some(RatMatrix::from_cols(&cols?))
    }

    /// `Φ(x)` computed from the product: column `j` holds the coordinates of `x·eⱼ`.
    pub fn left_regular(&self, x: &CliffordElement) -> Result<RatMatrix, CliffordError> {
        let b = self.even_basis();
        let cols: Vec<Vec<Rat>> =
            b.iter().map(|bj| self.to_even(&self.mul(x, bj)).map(|e| e.x.to_vec())).collect::<Result<_, _>>()?;
        Ok(RatMatrix::from_cols(&cols))
    }
}

fn word(mask: usize) -> Vec<usize> {
    (0..3).filter(|i| mask & (1 << i) != 0).collect()
}

/// `x₀e₀ + x₁e₁ + x₂e₂ + x₃e₃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenCliffordElement {
    pub x: [Rat; 4],
}

impl EvenCliffordElement {
    pub fn new(x: [Rat; 4]) -> Self {
        EvenCliffordElement { x }
    }

    pub fn from_i64(x: [i64; 4]) -> Self {
        EvenCliffordElement { x: x.map(|v| rat(v, 1)) }
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    pub fn is_integral(&self) -> bool {
        self.x.iter().all(|q| q.is_integer())
    }
}

/// `x₄E₁E₂E₃ + x₁E₁ + x₂E₂ + x₃E₃`, stored in the order `(x₄, x₁, x₂, x₃)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddCliffordElement {
    pub x: [Rat; 4],
}

impl OddCliffordElement {
    pub fn new(x: [Rat; 4]) -> Self {
        OddCliffordElement { x }
    }

    /// Coordinates `(x₁,x₂,x₃,x₄)` in the family convention.
    pub fn from_family(x1: i64, x2: i64, x3: i64, x4: i64) -> Self {
        OddCliffordElement { x: [x4, x1, x2, x3].map(|v| rat(v, 1)) }
    }

    pub fn is_integral(&self) -> bool {
        self.x.iter().all(|q| q.is_integer())
    }
}

/// Product in `Cl(L)` for the given parameters.
pub fn clifford_mul(x: &CliffordElement, y: &CliffordElement, p: &GramParams) -> CliffordElement {
    CliffordAlgebra::new(*p).mul(x, y)
}

/// `Φ(x) = x₀I + x₁M₁ + x₂M₂ + x₃M₃`, the left-regular representation on `(e₀,…,e₃)`.
pub fn phi_rep(x: &EvenCliffordElement, p: &GramParams) -> RatMatrix {
    let [m0, m1, m2, m3] = phi_basis(p);
    let terms = [m0, m1, m2, m3].map(|m| m.to_rat());
    (0..4).fold(RatMatrix::zeros(4, 4), |acc, i| &acc + &terms[i].scale(&x.x[i]))
}

/// `(M₀, M₁, M₂, M₃) = (Φ(e₀), …, Φ(e₃))` in closed form.
pub fn phi_basis(p: &GramParams) -> [IntMatrix; 4] {
    let GramParams { a, b, c, s, t, u } = *p;
    [
        IntMatrix::identity(4),
        IntMatrix::from_i64(&[&[0, -b * c, c * u, -s * u], &[1, s, 0, u], &[0, 0, 0, b], &[0, 0, -c, s]]),
        IntMatrix::from_i64(&[&[0, -s * t, -a * c, a * s], &[0, t, 0, -a], &[1, s, t, 0], &[0, c, 0, 0]]),
        IntMatrix::from_i64(&[&[0, b * t, -t * u, -a * b], &[0, 0, a, 0], &[0, -b, u, 0], &[1, 0, t, u]]),
    ]
}

/// `Q_B = (⟨eᵢ,eⱼ⟩_B)` in closed form.
pub fn gram_b(p: &GramParams) -> RatMatrix {
    let GramParams { a, b, c, s, t, u } = *p;
    IntMatrix::from_i64(&[
        &[2, s, t, u],
        &[s, 2 * b * c, s * t - c * u, s * u - b * t],
        &[t, s * t - c * u, 2 * a * c, t * u - a * s],
        &[u, s * u - b * t, t * u - a * s, 2 * a * b],
    ])
    .to_rat()
    .scale(&rat(1, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddBasis {
    /// `(E₁E₂E₃, E₁, E₂, E₃)`.
    Standard,
    /// `(−E₁E₂E₃ − tE₂, E₁, E₂, E₃)`, dual to `(e₀,…,e₃)` under `(·,·)_E`.
    Dual,
}

/// Gram matrix of `N` on `Cl⁻(L)` in closed form.
pub fn odd_gram(p: &GramParams, basis: OddBasis) -> RatMatrix {
    let GramParams { a, b, c, s, t, u } = *p;
    let m = match basis {
        OddBasis::Standard => IntMatrix::from_i64(&[
            &[2 * a * b * c, a * s, s * u - b * t, c * u],
            &[a * s, 2 * a, u, t],
            &[s * u - b * t, u, 2 * b, s],
            &[c * u, t, s, 2 * c],
        ]),
        OddBasis::Dual => IntMatrix::from_i64(&[
            &[2 * (s * t * u + a * b * c), -(t * u + a * s), -(s * u + b * t), -(c * u + s * t)],
            &[-(t * u + a * s), 2 * a, u, t],
            &[-(s * u + b * t), u, 2 * b, s],
            &[-(c * u + s * t), t, s, 2 * c],
        ]),
    };
    m.to_rat().scale(&rat(1, 2))
}

/// `Nβ = k·x₁x₃ + l·x₂(x₂ − k·x₄)` on `Cl⁻(U(k) ⊕ ⟨2l⟩)`.
pub fn odd_norm_family(x1: i64, x2: i64, x3: i64, x4: i64, k: i64, l: i64) -> i64 {
    k * x1 * x3 + l * x2 * (x2 - k * x4)
}

pub fn element_e(p: &GramParams) -> CliffordElement {
    CliffordAlgebra::new(*p).element_e()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wehler() -> GramParams {
        GramParams::new(0, 0, 0, 2, 2, 2).unwrap()
    }

    fn sample_params() -> Vec<GramParams> {
        vec![
            wehler(),
            GramParams::new(1, -2, 3, 1, -1, 2).unwrap(),
            GramParams::new(3, -5, -9, 0, 0, 0).unwrap(),
            GramParams::family(2, -2).unwrap(),
            GramParams::new(-1, 2, 1, 3, 0, -2).unwrap(),
        ]
    }

    #[test]
    fn rewriting_rules() {
        let alg = CliffordAlgebra::new(wehler());
        let g = CliffordElement::gen;
        assert!(alg.mul(&g(1), &g(1)).is_zero());
        let anti = &alg.mul(&g(2), &g(3)) + &alg.mul(&g(3), &g(2));
        assert_eq!(anti, CliffordElement::scalar(rat(2, 1)));
        let x = CliffordElement::basis(5).scale(&rat(3, 2));
        assert_eq!(alg.mul(&CliffordElement::one(), &x), x);
    }

    #[test]
    fn associativity_on_basis() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            for i in 0..8 {
                for j in 0..8 {
                    for k in 0..8 {
                        let (x, y, z) =
                            (CliffordElement::basis(i), CliffordElement::basis(j), CliffordElement::basis(k));
                        assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_is_an_anti_involution() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            for i in 0..8 {
                let x = CliffordElement::basis(i);
                assert_eq!(alg.reversal(&alg.reversal(&x)), x);
                for j in 0..8 {
                    let y = CliffordElement::basis(j);
                    assert_eq!(alg.reversal(&alg.mul(&x, &y)), alg.mul(&alg.reversal(&y), &alg.reversal(&x)));
                }
            }
        }
    }

    #[test]
    fn even_coordinates_round_trip() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            let x = EvenCliffordElement::from_i64([3, -1, 4, 7]);
            assert_eq!(alg.to_even(&alg.even(&x)).unwrap(), x);
            let y = OddCliffordElement::from_family(1, 2, -3, 5);
            assert_eq!(alg.to_odd(&alg.odd(&y)).unwrap(), y);
            assert!(alg.to_even(&CliffordElement::gen(1)).is_err());
        }
    }

    #[test]
    fn phi_matches_the_left_regular_representation() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            let b = alg.even_basis();
            let m = phi_basis(&p);
            for i in 0..4 {
                assert_eq!(alg.left_regular(&b[i]).unwrap(), m[i].to_rat(), "M{i} for {p}");
            }
        }
    }

    #[test]
    fn gram_b_matches_trace_form() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            let b = alg.even_basis();
            let q = gram_b(&p);
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(alg.form_b(&b[i], &b[j]).unwrap(), q[(i, j)]);
                }
            }
            assert_eq!(q.det(), p.d0() * p.d0());
        }
        assert_eq!(gram_b(&wehler())[(0, 0)], rat(1, 1));
        assert_eq!(wehler().d0(), rat(2, 1));
    }

    #[test]
    fn central_element() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            let e = alg.element_e();
            for m in 0..8 {
                let x = CliffordElement::basis(m);
                assert_eq!(alg.mul(&e, &x), alg.mul(&x, &e));
            }
            assert_eq!(alg.reversal(&e), -&e);
            assert_eq!(alg.mul(&e, &e), CliffordElement::scalar(-p.d0()));
            assert_eq!(alg.alternating_e().0, e);
        }
        let fam = CliffordAlgebra::new(GramParams::family(3, -5).unwrap());
        let mut expect = CliffordElement::basis(7);
        expect.coeffs[2] = rat(3, 2);
        assert_eq!(fam.element_e(), expect);
        assert_eq!(fam.mul(&expect, &expect), CliffordElement::scalar(rat(9 * -5, 4)));
        assert_eq!(element_e(&GramParams::new(1, 1, 1, 0, 0, 0).unwrap()), CliffordElement::basis(7));
    }

    #[test]
    fn odd_grams_match_polarized_norm() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            let std = alg.odd_basis();
            let mut dual = std.clone();
            dual[0] = &(-&std[0]) - &std[2].scale(&rat(p.t, 1));
            for (basis, vecs) in [(OddBasis::Standard, std), (OddBasis::Dual, dual)] {
                let g = odd_gram(&p, basis);
                for i in 0..4 {
                    for j in 0..4 {
                        let n = |x: &CliffordElement| alg.norm(x).unwrap();
                        let polar = (n(&(&vecs[i] + &vecs[j])) - n(&vecs[i]) - n(&vecs[j])) / rat(2, 1);
                        assert_eq!(polar, g[(i, j)], "{basis:?} ({i},{j}) for {p}");
                    }
                }
            }
            let qb_inv = gram_b(&p).inverse().unwrap();
            assert_eq!(odd_gram(&p, OddBasis::Dual), qb_inv.scale(&p.d0()));
        }
    }

    #[test]
    fn pairing_table() {
        for p in sample_params() {
            let alg = CliffordAlgebra::new(p);
            let ev = alg.even_basis();
            let od = alg.odd_basis();
            let expect = [[-1, 0, 0, 0], [0, 1, 0, 0], [-p.t, 0, 1, 0], [0, 0, 0, 1]];
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(alg.pairing_e(&ev[i], &od[j]).unwrap(), rat(expect[i][j], 1));
                }
            }
        }
    }

    #[test]
    fn odd_unit_over_diagonal_form_has_norm_one() {
        let p = GramParams::new(3, -5, -9, 0, 0, 0).unwrap();
        let alg = CliffordAlgebra::new(p);
        let alpha = alg.odd(&OddCliffordElement::from_family(0, 5, 1, 1));
        assert_eq!(alg.norm(&alpha).unwrap(), rat(1, 1));
    }

    #[test]
    fn odd_norm_closed_form() {
        assert_eq!(odd_norm_family(1, 0, 1, 0, 1, -1), 1);
        assert_eq!(odd_norm_family(0, 1, 0, 0, 4, -3), -3);
        for (k, l) in [(1, -1), (2, 3), (5, -7)] {
            let alg = CliffordAlgebra::new(GramParams::family(k, l).unwrap());
            for x in [(1, 2, 3, 4), (-2, 1, 0, 3), (0, -1, 5, 2)] {
                let odd = alg.odd(&OddCliffordElement::from_family(x.0, x.1, x.2, x.3));
                assert_eq!(alg.norm(&odd).unwrap(), rat(odd_norm_family(x.0, x.1, x.2, x.3, k, l), 1));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let x = CliffordElement::basis(7).scale(&rat(-3, 2));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"coeffs":{"123":"-3/2"}}"#);
        let y: CliffordElement = serde_json::from_str(r#"{"coeffs": {"": "1", "13": "5/2"}}"#).unwrap();
        assert_eq!(y.coeffs[0], rat(1, 1));
        assert_eq!(y.coeffs[5], rat(5, 2));
        assert!(serde_json::from_str::<CliffordElement>(r#"{"coeffs": {"31": "1"}}"#).is_err());
    }
}
