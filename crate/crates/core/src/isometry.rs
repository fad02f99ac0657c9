//! Isometries of a rank-3 lattice from Clifford units, and units from isometries.
//!
//! A unit `α ∈ Cl±(L)` with `N α = ±1` and grade sign `ε_α` (`+1` even, `−1` odd) acts on
//! `L` by
//!
//! - `g_α(v) = α·v·α⁻¹`,
//! - `h_α = ε_α·g_α`, an element of the discriminant kernel with `det h_α = ε_α`,
//! - `φ_α(v) = α·v·α* = (N α)·g_α`, with `det φ_α = N α`.
//!
//! [`clifford_lift`] inverts `h`: it solves `α·Eᵢ = det(g)·g(Eᵢ)·α` for `α` in the even part
//! when `det g = 1` and in the odd part when `det g = −1`.
//!
//! For `U(k) ⊕ ⟨2l⟩` the even part is the matrix order `B_{k,l}`: `[[a,b],[c,d]]`
//! corresponds to `d + (b/l)·e₁ + ((a−d)/k)·e₂ + (c/k)·e₃`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{rat_content, squarefree_rat, Int, Rat};
use crate::clifford::{
    odd_norm_family, CliffordAlgebra, CliffordElement, CliffordError, EvenCliffordElement, GramParams,
    OddCliffordElement,
};
use crate::json::matrix_to_json;
use crate::lattice::{Lattice, LatticeError};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::modular::{member, member_search, ModularElement, ModularError, SubgroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsometryError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Modular(#[from] ModularError),
    #[error("element has norm {0}, not ±1")]
    NotUnit(Rat),
    #[error("element coordinates are not integral")]
    NotIntegral,
    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,
    #[error("conjugation does not preserve L ⊗ Q")]
    NotVectorPreserving,
    #[error("lift solution space has dimension {0}, expected 1")]
    LiftDimension(usize),
    #[error("{0} is not in B_{{{1},{2}}}")]
    NotInOrder(Box<ModularElement>, i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grade {
    Even,
    Odd,
}

impl Grade {
    /// `ε = +1` for even, `−1` for odd.
    pub fn sign(self) -> i64 {
        match self {
            Grade::Even => 1,
            Grade::Odd => -1,
        }
    }

    fn product(self, o: Grade) -> Grade {
        if self == o {
            Grade::Even
        } else {
            Grade::Odd
        }
    }
}

/// An integral element of `Cl⁺(L)` or `Cl⁻(L)` with `N α = ±1`.
///
/// `coords` are on `(1, e₁, e₂, e₃)` for even units and `(E₁E₂E₃, E₁, E₂, E₃)` for odd units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordUnit {
    grade: Grade,
    coords: [Int; 4],
    norm: i64,
    element: CliffordElement,
}

impl CliffordUnit {
    pub fn new(alg: &CliffordAlgebra, grade: Grade, coords: [Int; 4]) -> Result<Self, IsometryError> {
        let q = coords.clone().map(Rat::from_integer);
        let element = match grade {
            Grade::Even => alg.even(&EvenCliffordElement::new(q)),
            Grade::Odd => alg.odd(&OddCliffordElement::new(q)),
        };
        Self::from_element(alg, grade, coords, element)
    }

    pub fn even(alg: &CliffordAlgebra, x: [i64; 4]) -> Result<Self, IsometryError> {
        Self::new(alg, Grade::Even, x.map(Int::from))
    }

    /// Odd unit from coordinates in storage order `(x₄, x₁, x₂, x₃)`.
    pub fn odd(alg: &CliffordAlgebra, x: [i64; 4]) -> Result<Self, IsometryError> {
        Self::new(alg, Grade::Odd, x.map(Int::from))
    }

    fn from_element(
        alg: &CliffordAlgebra,
        grade: Grade,
        coords: [Int; 4],
        element: CliffordElement,
    ) -> Result<Self, IsometryError> {
        let n = alg.norm(&element)?;
        let norm = if n.is_one() {
            1
        } else if (-&n).is_one() {
            -1
        } else {
            return Err(IsometryError::NotUnit(n));
        };
        Ok(CliffordUnit { grade, coords, norm, element })
    }

    /// Reads an element of pure grade with integral coordinates.
    pub fn from_clifford(alg: &CliffordAlgebra, x: &CliffordElement) -> Result<Self, IsometryError> {
        let (grade, q) = if x.is_even() {
            (Grade::Even, alg.to_even(x)?.x)
        } else if x.is_odd() {
            (Grade::Odd, alg.to_odd(x)?.x)
        } else {
            return Err(CliffordError::MixedGrade.into());
        };
        if !q.iter().all(Rat::is_integer) {
            return Err(IsometryError::NotIntegral);
        }
        Self::from_element(alg, grade, q.map(|v| v.to_integer()), x.clone())
    }

    pub fn grade(&self) -> Grade {
        self.grade
    }

    pub fn coords(&self) -> &[Int; 4] {
        &self.coords
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn element(&self) -> &CliffordElement {
        &self.element
    }

    pub fn epsilon(&self) -> i64 {
        self.grade.sign()
    }

    pub fn mul(&self, alg: &CliffordAlgebra, o: &Self) -> Self {
        let grade = self.grade.product(o.grade);
        let x = alg.mul(&self.element, &o.element);
        let unit = Self::from_clifford(alg, &x).expect("products of units are units");
        debug_assert_eq!(unit.grade, grade);
        unit
    }

    /// Equality modulo `±1`.
    pub fn same_class(&self, o: &Self) -> bool {
        self.grade == o.grade && (self.coords == o.coords || self.coords.iter().zip(&o.coords).all(|(a, b)| a == &-b))
    }
}

impl Serialize for CliffordUnit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            grade: Grade,
            norm: i64,
            #[serde(flatten)]
            element: &'a CliffordElement,
        }
        Repr { grade: self.grade, norm: self.norm, element: &self.element }.serialize(s)
    }
}

/// An integral isometry `g` with `gᵀ·Q·g = Q`, with its determinant, discriminant-kernel
/// flag and cone flag (`None` when the signature is neither `(1,n)` nor `(n,1)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry3 {
    matrix: IntMatrix,
    lattice: Lattice,
    det: i64,
    in_kernel: bool,
    cone: Option<bool>,
}

impl Isometry3 {
    pub fn new(lattice: &Lattice, matrix: IntMatrix) -> Result<Self, IsometryError> {
        if !lattice.is_isometry(&matrix) {
            return Err(IsometryError::NotIsometry);
        }
        let det = if matrix.det().is_one() { 1 } else { -1 };
        let in_kernel = lattice.in_discriminant_kernel(&matrix)?;
        let cone = lattice.preserves_positive_cone(&matrix).ok();
        Ok(Isometry3 { matrix, lattice: lattice.clone(), det, in_kernel, cone })
    }

    fn from_rat(lattice: &Lattice, m: &RatMatrix) -> Result<Self, IsometryError> {
        Self::new(lattice, m.to_int().ok_or(IsometryError::NotIntegral)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn in_kernel(&self) -> bool {
        self.in_kernel
    }

    pub fn cone(&self) -> Option<bool> {
        self.cone
    }

    pub fn compose(&self, o: &Self) -> Result<Self, IsometryError> {
        Self::new(&self.lattice, &self.matrix * &o.matrix)
    }
}

impl Serialize for Isometry3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            g: Vec<Vec<crate::json::JsonInt>>,
        }
        Repr { g: matrix_to_json(&self.matrix) }.serialize(s)
    }
}

fn sandwich(alg: &CliffordAlgebra, x: &CliffordElement, y: &CliffordElement) -> Result<RatMatrix, IsometryError> {
    alg.sandwich_matrix(x, y).ok_or(IsometryError::NotVectorPreserving)
}

/// `g_α(v) = α·v·α⁻¹` on `(E₁,E₂,E₃)`.
pub fn g_alpha(alg: &CliffordAlgebra, u: &CliffordUnit) -> Result<RatMatrix, IsometryError> {
    sandwich(alg, &u.element, &alg.inverse(&u.element)?)
}

/// `h_α = ε_α·g_α`.
pub fn h_alpha(alg: &CliffordAlgebra, u: &CliffordUnit) -> Result<Isometry3, IsometryError> {
    let g = g_alpha(alg, u)?.scale(&Rat::from_integer(Int::from(u.epsilon())));
    Isometry3::from_rat(&alg.params().lattice(), &g)
}

/// `φ_α(v) = α·v·α*`.
pub fn phi_alpha(alg: &CliffordAlgebra, u: &CliffordUnit) -> Result<Isometry3, IsometryError> {
    let g = sandwich(alg, &u.element, &alg.reversal(&u.element))?;
    Isometry3::from_rat(&alg.params().lattice(), &g)
}

/// The primitive integral solution of the lift equations, up to sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub grade: Grade,
    pub coords: [Int; 4],
    pub norm: Rat,
    pub element: CliffordElement,
}

impl Lift {
    pub fn is_unit(&self) -> bool {
        self.norm.abs().is_one()
    }

    pub fn into_unit(self, alg: &CliffordAlgebra) -> Result<CliffordUnit, IsometryError> {
        CliffordUnit::from_element(alg, self.grade, self.coords, self.element)
    }
}

/// Lift of a rational isometry `g` of `L ⊗ Q` with `det g = ±1`.
///
/// Representative: denominators cleared, content removed, first nonzero coordinate positive.
pub fn clifford_lift_rational(alg: &CliffordAlgebra, g: &RatMatrix) -> Result<Lift, IsometryError> {
    let q = alg.params().gram().to_rat();
    if g.rows() != 3 || g.cols() != 3 || g.congruence(&q) != q {
        return Err(IsometryError::NotIsometry);
    }
    let det = g.det();
    let grade = if det.is_one() { Grade::Even } else { Grade::Odd };
    let eps = Rat::from_integer(Int::from(grade.sign()));
    let basis = match grade {
        Grade::Even => alg.even_basis(),
        Grade::Odd => alg.odd_basis(),
    };
    let gens: Vec<CliffordElement> = (1..=3).map(CliffordElement::gen).collect();
    let images: Vec<CliffordElement> = (0..3).map(|i| CliffordElement::vector(&g.col(i)).scale(&eps)).collect();
    let cols: Vec<Vec<Rat>> = basis
        .iter()
        .map(|b| (0..3).flat_map(|i| (&alg.mul(b, &gens[i]) - &alg.mul(&images[i], b)).coeffs.to_vec()).collect())
        .collect();
    let kernel = RatMatrix::from_cols(&cols).kernel();
    if kernel.len() != 1 {
        return Err(IsometryError::LiftDimension(kernel.len()));
    }
    let content = rat_content(&kernel[0]);
    let mut y: Vec<Rat> = kernel[0].iter().map(|v| v / &content).collect();
    if y.iter().find(|v| !v.is_zero()).is_some_and(Signed::is_negative) {
        y = y.into_iter().map(|v| -v).collect();
    }
    let coords: [Int; 4] = std::array::from_fn(|i| y[i].to_integer());
    let element = (0..4).fold(CliffordElement::zero(), |acc, i| &acc + &basis[i].scale(&y[i]));
    let norm = alg.norm(&element)?;
    Ok(Lift { grade, coords, norm, element })
}

pub fn clifford_lift(g: &Isometry3) -> Result<Lift, IsometryError> {
    let alg = CliffordAlgebra::new(GramParams::from_lattice(g.lattice())?);
    clifford_lift_rational(&alg, &g.matrix.to_rat())
}

/// `θ(g)`: the squarefree representative of `N(lift)` modulo squares.
pub fn spinor_norm_rational(alg: &CliffordAlgebra, g: &RatMatrix) -> Result<Int, IsometryError> {
    Ok(squarefree_rat(&clifford_lift_rational(alg, g)?.norm))
}

pub fn spinor_norm(g: &Isometry3) -> Result<Int, IsometryError> {
    Ok(squarefree_rat(&clifford_lift(g)?.norm))
}

/// Reflection `v ↦ v − 2⟨v,r⟩/⟨r,r⟩·r` on `(E₁,E₂,E₃)`, for `⟨r,r⟩ ≠ 0`.
pub fn reflection(q: &IntMatrix, r: &[i64; 3]) -> Option<RatMatrix> {
    let q = q.to_rat();
    let r: Vec<Rat> = r.iter().map(|&v| Rat::from_integer(Int::from(v))).collect();
    let qr = q.mul_vec(&r);
    let rr: Rat = r.iter().zip(&qr).map(|(a, b)| a * b).sum();
    if rr.is_zero() {
        return None;
    }
    let two = Rat::from_integer(Int::from(2));
    let mut m = RatMatrix::identity(3);
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] -= &two * &r[i] * &qr[j] / &rr;
        }
    }
    Some(m)
}

fn div_exact(x: Int, d: i64) -> Option<Int> {
    let d = Int::from(d);
    (&x % &d).is_zero().then(|| x / d)
}

fn check_order(alpha: &ModularElement, k: i64, l: i64) -> Result<(), IsometryError> {
    if member(alpha, &SubgroupSpec::BklUnits { k, l })? {
        Ok(())
    } else {
        Err(IsometryError::NotInOrder(Box::new(alpha.clone()), k, l))
    }
}

/// `P_α` for `α = [[a,b],[c,d]] ∈ B_{k,l}^×` acting on `U(k) ⊕ ⟨2l⟩`:
///
/// ```text
/// [[a²,         2ab,          −(k/l)b² ],
///  [ac,         ad + bc,      −(k/l)bd ],
///  [−(l/k)c²,  −(l/k)·2cd,    d²       ]]
/// ```
pub fn p_alpha_matrix(alpha: &ModularElement, k: i64, l: i64) -> Result<Isometry3, IsometryError> {
    check_order(alpha, k, l)?;
    let (a, b, c, d) = (alpha.a(), alpha.b(), alpha.c(), alpha.d());
    let exact = |x: Int, den: i64| div_exact(x, den).ok_or(IsometryError::NotIntegral);
    let rows = vec![
        vec![a * a, Int::from(2) * a * b, exact(-Int::from(k) * b * b, l)?],
        vec![a * c, a * d + b * c, exact(-Int::from(k) * b * d, l)?],
        vec![exact(-Int::from(l) * c * c, k)?, exact(-Int::from(2 * l) * c * d, k)?, d * d],
    ];
    Isometry3::new(&Lattice::family(k, l)?, IntMatrix::from_rows(&rows))
}

/// The basis change `(E₃, −E₂, E₁)` relating `φ_α` on `(E₁,E₂,E₃)` to `P_α`; an involution.
pub fn p_alpha_basis() -> RatMatrix {
    IntMatrix::from_i64(&[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]).to_rat()
}

/// `C⁻¹·φ_α·C` computed in the Clifford algebra.
pub fn p_alpha_via_clifford(alpha: &ModularElement, k: i64, l: i64) -> Result<RatMatrix, IsometryError> {
    let alg = CliffordAlgebra::new(GramParams::family(k, l)?);
    let u = CliffordUnit::new(&alg, Grade::Even, even_from_b_kl(alpha, k, l)?)?;
    let phi = phi_alpha(&alg, &u)?.matrix.to_rat();
    let c = p_alpha_basis();
    Ok(&(&c * &phi) * &c)
}

/// `[[a,b],[c,d]] ↦ (d, b/l, (a−d)/k, c/k)` on `(1, e₁, e₂, e₃)`.
pub fn even_from_b_kl(alpha: &ModularElement, k: i64, l: i64) -> Result<[Int; 4], IsometryError> {
    check_order(alpha, k, l)?;
    let (a, b, c, d) = (alpha.a(), alpha.b(), alpha.c(), alpha.d());
    let exact = |x: Int, den: i64| div_exact(x, den).ok_or(IsometryError::NotIntegral);
    Ok([d.clone(), exact(b.clone(), l)?, exact(a - d, k)?, exact(c.clone(), k)?])
}

/// Inverse of [`even_from_b_kl`], normalized modulo `±1`.
pub fn b_kl_from_even(x: &[Int; 4], k: i64, l: i64) -> Result<ModularElement, IsometryError> {
    let d = x[0].clone();
    let a = &d + Int::from(k) * &x[2];
    Ok(ModularElement::new(a, Int::from(l) * &x[1], Int::from(k) * &x[3], d)?)
}

/// All `α ∈ B_{k,l}^×` with entries in `[−bound, bound]`, modulo `±1`, sorted by entries.
/// The identity is always included.
pub fn unit_search_even(k: i64, l: i64, bound: i64) -> Result<Vec<ModularElement>, IsometryError> {
    Ok(member_search(&SubgroupSpec::BklUnits { k, l }, bound)?)
}

/// [`unit_search_even`] read as even Clifford units of `U(k) ⊕ ⟨2l⟩`.
pub fn even_units(alg: &CliffordAlgebra, k: i64, l: i64, bound: i64) -> Result<Vec<CliffordUnit>, IsometryError> {
    unit_search_even(k, l, bound)?
        .iter()
        .map(|a| CliffordUnit::new(alg, Grade::Even, even_from_b_kl(a, k, l)?))
        .collect()
}

/// All `(x₁,x₂,x₃,x₄)` in `[−bound, bound]⁴` with `k·x₁x₃ + l·x₂(x₂ − k·x₄) = ±1`,
/// sorted lexicographically.
///
/// For each `(x₂, x₄)` the equation fixes `x₁x₃`, so `x₁` runs over divisors only.
pub fn v_set_search(k: i64, l: i64, bound: i64) -> Vec<[i64; 4]> {
    let (k, l, bound) = (i128::from(k), i128::from(l), i128::from(bound.max(0)));
    let mut found = BTreeSet::new();
    for x2 in -bound..=bound {
        for x4 in -bound..=bound {
            let r = l * x2 * (x2 - k * x4);
            for eps in [1i128, -1] {
                let t = eps - r;
                if k == 0 || t % k != 0 {
                    continue;
                }
                let m = t / k;
                for x1 in -bound..=bound {
                    let x3s: Vec<i128> = if m == 0 {
                        if x1 == 0 {
                            (-bound..=bound).collect()
                        } else {
                            vec![0]
                        }
                    } else if x1 != 0 && m % x1 == 0 && (m / x1).abs() <= bound {
                        vec![m / x1]
                    } else {
                        vec![]
                    };
                    for x3 in x3s {
                        let narrow = |v: i128| i64::try_from(v).expect("bounded by an i64 input");
                        found.insert([narrow(x1), narrow(x2), narrow(x3), narrow(x4)]);
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}

/// [`v_set_search`] solutions as odd Clifford elements, in the same order.
pub fn v_set_elements(k: i64, l: i64, bound: i64) -> Vec<OddCliffordElement> {
    v_set_search(k, l, bound)
        .into_iter()
        .map(|[x1, x2, x3, x4]| OddCliffordElement::from_family(x1, x2, x3, x4))
        .collect()
}

/// [`v_set_search`] solutions as odd units of `U(k) ⊕ ⟨2l⟩`.
pub fn odd_units(alg: &CliffordAlgebra, k: i64, l: i64, bound: i64) -> Result<Vec<CliffordUnit>, IsometryError> {
    v_set_search(k, l, bound)
        .into_iter()
        .map(|[x1, x2, x3, x4]| {
            debug_assert_eq!(odd_norm_family(x1, x2, x3, x4, k, l).abs(), 1);
            CliffordUnit::odd(alg, [x4, x1, x2, x3])
        })
        .collect()
}

/// All integral isometries of `lattice` with entries in `[−bound, bound]`, sorted by rows.
///
/// Column `j` ranges over vectors of norm `Q_jj` and is pruned by the inner products with
/// the columns already chosen.
pub fn isometry_scan(lattice: &Lattice, bound: i64) -> Vec<IntMatrix> {
    let n = lattice.rank();
    let q = lattice.gram();
    let box_vectors = box_points(n, bound);
    let candidates: Vec<Vec<Vec<Int>>> = (0..n)
        .map(|j| box_vectors.iter().filter(|v| lattice.inner_int(v, v) == q[(j, j)]).cloned().collect())
        .collect();
    let mut out = Vec::new();
    let mut cols: Vec<Vec<Int>> = Vec::with_capacity(n);
    scan_columns(lattice, &candidates, &mut cols, &mut out);
    out.sort_by_key(IntMatrix::to_rows);
    out
}

fn box_points(n: usize, bound: i64) -> Vec<Vec<Int>> {
    let side: Vec<i64> = (-bound..=bound).collect();
    let mut pts: Vec<Vec<Int>> = vec![vec![]];
    for _ in 0..n {
        pts =
            pts.into_iter().flat_map(|p| side.iter().map(move |&v| [p.clone(), vec![Int::from(v)]].concat())).collect();
    }
    pts
}

fn scan_columns(lattice: &Lattice, candidates: &[Vec<Vec<Int>>], cols: &mut Vec<Vec<Int>>, out: &mut Vec<IntMatrix>) {
    let j = cols.len();
    if j == candidates.len() {
        out.push(IntMatrix::from_cols(cols));
        return;
    }
    let q = lattice.gram();
    for v in &candidates[j] {
        if (0..j).all(|i| lattice.inner_int(&cols[i], v) == q[(i, j)]) {
            cols.push(v.clone());
            scan_columns(lattice, candidates, cols, out);
            cols.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn fam(k: i64, l: i64) -> CliffordAlgebra {
        CliffordAlgebra::new(GramParams::family(k, l).unwrap())
    }

    #[test]
    fn identity_maps() {
        let alg = fam(2, -2);
        let one = CliffordUnit::even(&alg, [1, 0, 0, 0]).unwrap();
        assert_eq!(h_alpha(&alg, &one).unwrap().matrix(), &IntMatrix::identity(3));
        assert_eq!(phi_alpha(&alg, &one).unwrap().matrix(), &IntMatrix::identity(3));
        let lift = clifford_lift(&Isometry3::new(&alg.params().lattice(), IntMatrix::identity(3)).unwrap()).unwrap();
        assert_eq!(lift.grade, Grade::Even);
        assert_eq!(lift.coords, [int(1), int(0), int(0), int(0)]);
        assert!(lift.norm.is_one());
    }

    #[test]
    fn odd_generator_gives_reflection() {
        // b = 1, so N(E₂) = E₂² = 1.
        let alg = CliffordAlgebra::new(GramParams::family(1, 1).unwrap());
        let u = CliffordUnit::odd(&alg, [0, 0, 1, 0]).unwrap();
        assert_eq!(u.norm(), 1);
        let h = h_alpha(&alg, &u).unwrap();
        assert_eq!(h.det(), -1);
        let q = alg.params().gram();
        assert_eq!(h.matrix().congruence(&q), q);
        assert_eq!(h.matrix().to_rat(), reflection(&q, &[0, 1, 0]).unwrap());
        assert!(h.in_kernel());
    }

    #[test]
    fn dets_follow_grade_and_norm() {
        for (k, l) in [(1, -1), (2, -2), (5, 1)] {
            let alg = fam(k, l);
            let mut units = even_units(&alg, k, l, 4).unwrap();
            units.extend(odd_units(&alg, k, l, 2).unwrap());
            assert!(units.iter().any(|u| u.grade() == Grade::Odd) || k == 2);
            for u in &units {
                let h = h_alpha(&alg, u).unwrap();
                assert_eq!(h.det(), u.epsilon());
                assert!(h.in_kernel());
                assert_eq!(phi_alpha(&alg, u).unwrap().det(), u.norm());
            }
        }
    }

    #[test]
    fn lift_outside_kernel_has_non_unit_norm() {
        let lat = Lattice::family(2, -2).unwrap();
        let swap = IntMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let g = Isometry3::new(&lat, swap).unwrap();
        assert!(!g.in_kernel());
        let lift = clifford_lift(&g).unwrap();
        assert!(!lift.is_unit());
        assert!(!lift.norm.is_zero());
    }

    #[test]
    fn swap_on_unimodular_hyperbolic_part_is_in_kernel() {
        let lat = Lattice::family(1, 1).unwrap();
        let g = Isometry3::new(&lat, IntMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap();
        assert!(g.in_kernel());
        assert!(clifford_lift(&g).unwrap().is_unit());
    }

    #[test]
    fn spinor_norm_examples() {
        let alg = fam(1, -1);
        let id = RatMatrix::identity(3);
        assert_eq!(spinor_norm_rational(&alg, &id).unwrap(), int(1));
        let u = even_units(&alg, 1, -1, 3).unwrap().into_iter().find(|u| u.norm() == -1).unwrap();
        let g = g_alpha(&alg, &u).unwrap();
        assert_eq!(spinor_norm_rational(&alg, &g).unwrap(), int(-1));
        // E₂ has E₂² = ⟨E₂,E₂⟩/2 = −1; the reflection is −g_{E₂}.
        let q = alg.params().gram();
        let s = reflection(&q, &[0, 1, 0]).unwrap();
        assert_eq!(spinor_norm_rational(&alg, &s).unwrap(), int(-1));
        let s2 = reflection(&q, &[1, 0, 1]).unwrap();
        assert_eq!(spinor_norm_rational(&alg, &s2).unwrap(), int(1));
    }

    #[test]
    fn p_alpha_examples() {
        for (k, l) in [(2, -2), (3, 5)] {
            let id = p_alpha_matrix(&ModularElement::identity(), k, l).unwrap();
            assert_eq!(id.matrix(), &IntMatrix::identity(3));
            let alpha = ModularElement::from_i64(1, 0, k, 1).unwrap();
            let p = p_alpha_matrix(&alpha, k, l).unwrap();
            assert_eq!(p.matrix(), &IntMatrix::from_i64(&[&[1, 0, 0], &[k, 1, 0], &[-l * k, -2 * l, 1]]));
            assert_eq!(p_alpha_via_clifford(&alpha, k, l).unwrap(), p.matrix().to_rat());
        }
        let outside = ModularElement::from_i64(1, 1, 0, 1).unwrap();
        assert!(matches!(p_alpha_matrix(&outside, 2, -2), Err(IsometryError::NotInOrder(..))));
    }

    #[test]
    fn even_identification_round_trips_and_norm_is_det() {
        let (k, l) = (3, -2);
        let alg = fam(k, l);
        for a in unit_search_even(k, l, 6).unwrap() {
            let x = even_from_b_kl(&a, k, l).unwrap();
            assert_eq!(b_kl_from_even(&x, k, l).unwrap(), a);
            let u = CliffordUnit::new(&alg, Grade::Even, x).unwrap();
            assert_eq!(u.norm(), a.det());
        }
    }

    fn brute_units(k: i64, l: i64, bound: i64) -> BTreeSet<ModularElement> {
        let mut out = BTreeSet::from([ModularElement::identity()]);
        let r = -bound..=bound;
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        let det = a * d - b * c;
                        if det.abs() == 1 && (a - d) % k == 0 && c % k == 0 && b % l == 0 {
                            out.insert(ModularElement::from_i64(a, b, c, d).unwrap());
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn unit_search_matches_exhaustive_scan() {
        for (k, l, bound) in [(2, 2, 3), (1, 1, 1), (3, -2, 4)] {
            let found: BTreeSet<_> = unit_search_even(k, l, bound).unwrap().into_iter().collect();
            assert_eq!(found, brute_units(k, l, bound));
        }
        let s = unit_search_even(2, 2, 3).unwrap();
        assert!(s.contains(&ModularElement::from_i64(1, 0, 2, 1).unwrap()));
        assert!(s.contains(&ModularElement::from_i64(1, 2, 0, 1).unwrap()));
        assert_eq!(unit_search_even(2, 2, 0).unwrap(), vec![ModularElement::identity()]);
    }

    #[test]
    fn v_set_examples() {
        for n in 2..=6 {
            assert!(v_set_search(n, -n, 8).is_empty());
        }
        let s = v_set_search(1, -1, 1);
        assert!(s.contains(&[1, 0, 1, 0]));
        assert_eq!(odd_norm_family(1, 0, 1, 0, 1, -1), 1);
        assert!(!v_set_search(5, 1, 3).is_empty());
        for x in v_set_search(5, 1, 3) {
            assert_eq!(odd_norm_family(x[0], x[1], x[2], x[3], 5, 1).abs(), 1);
        }
    }

    #[test]
    fn isometry_scan_finds_only_isometries() {
        let lat = Lattice::family(2, -2).unwrap();
        let all = isometry_scan(&lat, 2);
        assert!(all.contains(&IntMatrix::identity(3)));
        assert!(all.contains(&-&IntMatrix::identity(3)));
        assert!(all.iter().all(|g| lat.is_isometry(g)));
    }

    #[test]
    fn unit_json() {
        let alg = fam(1, -1);
        let u = CliffordUnit::odd(&alg, [0, 1, 0, 1]).unwrap();
        let v = serde_json::to_value(&u).unwrap();
        assert_eq!(v["grade"], "odd");
        assert!(v["coeffs"].is_object());
        let g = Isometry3::new(&alg.params().lattice(), IntMatrix::identity(3)).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"g":[[1,0,0],[0,1,0],[0,0,1]]}"#);
    }
}
