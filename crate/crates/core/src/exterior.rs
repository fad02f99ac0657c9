//! `W = ∧²Cl⁺(L)` and the actions that identify isometries with units.
//!
//! `W` has basis `(e₀₁, e₀₂, e₀₃, e₂₃, e₃₁, e₁₂)` with `eᵢⱼ = eᵢ ∧ eⱼ` and the form
//! `⟨w,w⟩ = 2(p₀₁p₂₃ + p₀₂p₃₁ + p₀₃p₁₂)`, so index `I` pairs with `I + 3`.
//! Inside `W` sit two primitive sublattices `P⁺ ≅ L` and `P⁻ ≅ L(−1)`, orthogonal to
//! each other.
//!
//! - `μ(x,y)`: `h₁ ∧ h₂ ↦ xh₁y ∧ xh₂y` for even `x`, `y`.
//! - `μ̃(x)`: `h₁ ∧ h₂ ↦ ι⁻¹(h₁x ∧ h₂x)` for odd `x`, where `ι: ∧²Cl⁺ → ∧²Cl⁻` is the
//!   duality induced by the pairing `(·,·)_E`.
//!
//! Matrices act on columns: column `j` is the image of the `j`-th basis vector.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{rat, Int, Rat};
use crate::clifford::{
    CliffordAlgebra, CliffordElement, CliffordError, EvenCliffordElement, GramParams, OddCliffordElement,
};
use crate::matrix::{IntMatrix, RatMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("{0} is not primitive in W")]
    NotPrimitive(&'static str),
    #[error("P± basis fails the Gram identities")]
    BadGram,
    #[error("odd element has zero norm")]
    ZeroNorm,
}

/// Index pairs `(i,j)` of the basis `eᵢ ∧ eⱼ` in storage order.
pub const W_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WElement {
    pub p: [Rat; 6],
}

impl WElement {
    pub fn zero() -> Self {
        WElement { p: std::array::from_fn(|_| Rat::zero()) }
    }

    pub fn basis(i: usize) -> Self {
        let mut w = Self::zero();
        w.p[i] = Rat::one();
        w
    }

    pub fn from_i64(p: [i64; 6]) -> Self {
        WElement { p: p.map(|v| rat(v, 1)) }
    }

    /// `x ∧ y` for coordinate vectors on a 4-dimensional basis.
    pub fn wedge(x: &[Rat; 4], y: &[Rat; 4]) -> Self {
        WElement { p: W_PAIRS.map(|(i, j)| &x[i] * &y[j] - &x[j] * &y[i]) }
    }

    pub fn is_integral(&self) -> bool {
        self.p.iter().all(|q| q.is_integer())
    }
}

/// `⟨w₁,w₂⟩_W`, the polarization of `2(p₀₁p₂₃ + p₀₂p₃₁ + p₀₃p₁₂)`.
pub fn w_form(w1: &WElement, w2: &WElement) -> Rat {
    (0..3).map(|i| &w1.p[i] * &w2.p[i + 3] + &w1.p[i + 3] * &w2.p[i]).sum()
}

/// The Gram matrix of `W` on its basis, `U ⊕ U ⊕ U` after pairing `I` with `I + 3`.
pub fn w_gram() -> IntMatrix {
    let mut g = IntMatrix::zeros(6, 6);
    for i in 0..3 {
        g[(i, i + 3)] = Int::one();
        g[(i + 3, i)] = Int::one();
    }
    g
}

/// `w₁±, w₂±, w₃±`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBasis {
    pub plus: [WElement; 3],
    pub minus: [WElement; 3],
}

impl PBasis {
    /// 6×3 matrix whose columns are `w₁⁺, w₂⁺, w₃⁺`.
    pub fn plus_matrix(&self) -> RatMatrix {
        RatMatrix::from_cols(&self.plus.iter().map(|w| w.p.to_vec()).collect::<Vec<_>>())
    }

    pub fn minus_matrix(&self) -> RatMatrix {
        RatMatrix::from_cols(&self.minus.iter().map(|w| w.p.to_vec()).collect::<Vec<_>>())
    }
}

/// Unchecked closed-form construction of `P±`.
pub fn p_bases_raw(p: &GramParams) -> PBasis {
    let GramParams { a, b, c, s, t, u } = *p;
    PBasis {
        plus: [
            WElement::from_i64([a, u, 0, 1, 0, 0]),
            WElement::from_i64([0, b, s, 0, 1, 0]),
            WElement::from_i64([t, 0, c, 0, 0, 1]),
        ],
        minus: [
            WElement::from_i64([a, 0, t, -1, 0, 0]),
            WElement::from_i64([u, b, 0, 0, -1, 0]),
            WElement::from_i64([0, s, c, 0, 0, -1]),
        ],
    }
}

/// `P±` with the Gram identities `Gram(w⁺) = Q_L`, `Gram(w⁻) = −Q_L`, the zero cross block,
/// and primitivity of both sublattices certified.
pub fn p_bases(p: &GramParams) -> Result<PBasis, ExteriorError> {
    if p.disc().is_zero() {
        return Err(CliffordError::Degenerate.into());
    }
    let pb = p_bases_raw(p);
    let q = p.gram().to_rat();
    for i in 0..3 {
        for j in 0..3 {
            let ok = w_form(&pb.plus[i], &pb.plus[j]) == q[(i, j)]
                && w_form(&pb.minus[i], &pb.minus[j]) == -q[(i, j)].clone()
                && w_form(&pb.plus[i], &pb.minus[j]).is_zero();
            if !ok {
                return Err(ExteriorError::BadGram);
            }
        }
    }
    if !is_primitive(&pb.plus) {
        return Err(ExteriorError::NotPrimitive("P+"));
    }
    if !is_primitive(&pb.minus) {
        return Err(ExteriorError::NotPrimitive("P-"));
    }
    Ok(pb)
}

/// A set of integral vectors spans a primitive sublattice iff the Smith invariant factors
/// of their coordinate stack are all 1.
pub fn is_primitive(ws: &[WElement]) -> bool {
    if !ws.iter().all(WElement::is_integral) {
        return false;
    }
    let rows: Vec<Vec<Int>> = ws.iter().map(|w| w.p.iter().map(|q| q.to_integer()).collect()).collect();
    IntMatrix::from_rows(&rows).invariant_factors().iter().all(One::is_one)
}

/// Matrix of `μ(x,y)` on the `eᵢⱼ` basis.
pub fn mu_matrix(x: &EvenCliffordElement, y: &EvenCliffordElement, p: &GramParams) -> RatMatrix {
    let alg = CliffordAlgebra::new(*p);
    mu_matrix_in(&alg, &alg.even(x), &alg.even(y))
}

pub fn mu_matrix_in(alg: &CliffordAlgebra, x: &CliffordElement, y: &CliffordElement) -> RatMatrix {
    let images: Vec<[Rat; 4]> =
        alg.even_basis().iter().map(|e| alg.to_even(&alg.mul3(x, e, y)).expect("even times even is even").x).collect();
    let cols: Vec<Vec<Rat>> =
        W_PAIRS.iter().map(|&(i, j)| WElement::wedge(&images[i], &images[j]).p.to_vec()).collect();
    RatMatrix::from_cols(&cols)
}

/// Matrix of `μ̃(x)` on the `eᵢⱼ` basis. `ι⁻¹(y₁ ∧ y₂)` is the `w ∈ W ⊗ Q` with
/// `⟨a₁ ∧ a₂, w⟩_W = (a₁,y₁)_E(a₂,y₂)_E − (a₁,y₂)_E(a₂,y₁)_E` for all basis pairs.
pub fn iota_and_mu_tilde(x: &OddCliffordElement, p: &GramParams) -> Result<RatMatrix, ExteriorError> {
    let alg = CliffordAlgebra::new(*p);
    mu_tilde_in(&alg, &alg.odd(x))
}

pub fn mu_tilde_in(alg: &CliffordAlgebra, x: &CliffordElement) -> Result<RatMatrix, ExteriorError> {
    if !x.is_odd() {
        return Err(CliffordError::NotOdd.into());
    }
    if alg.norm(x)?.is_zero() {
        return Err(ExteriorError::ZeroNorm);
    }
    let basis = alg.even_basis();
    let products: Vec<CliffordElement> = basis.iter().map(|e| alg.mul(e, x)).collect();
    let pair = |a: usize, y: &CliffordElement| alg.pairing_e(&basis[a], y).expect("even/odd grades");
    let gw_inv = w_gram().to_rat();
    let cols: Vec<Vec<Rat>> = W_PAIRS
        .iter()
        .map(|&(i, j)| {
            let (y1, y2) = (&products[i], &products[j]);
            let ell: Vec<Rat> =
                W_PAIRS.iter().map(|&(a1, a2)| pair(a1, y1) * pair(a2, y2) - pair(a1, y2) * pair(a2, y1)).collect();
            gw_inv.mul_vec(&ell)
        })
        .collect();
    Ok(RatMatrix::from_cols(&cols))
}

/// `M` with `m·B = B·M` when the column span of `B` (full column rank) is `m`-invariant.
pub fn restrict(m: &RatMatrix, b: &RatMatrix) -> Option<RatMatrix> {
    let bt = b.transpose();
    let normal = (&bt * b).inverse()?;
    let image = m * b;
    let sol = &(&normal * &bt) * &image;
    ((b * &sol) == image).then_some(sol)
}

/// `η_x(v) = −x⁻¹·v·x` on `L ⊗ Q`, for odd `x` with `N x ≠ 0`.
pub fn eta_matrix(alg: &CliffordAlgebra, x: &CliffordElement) -> Result<RatMatrix, ExteriorError> {
    let inv = alg.inverse(x)?;
    let m = alg.sandwich_matrix(&inv, x).expect("odd conjugation preserves L ⊗ Q");
    Ok(-&m)
}
