//! Even integral lattices and their discriminant data.
//!
//! A [`Lattice`] is its Gram matrix `Q`. Vectors are integer column vectors in the
//! chosen basis, the dual `L^∨` is `Q⁻¹·Zⁿ`, and an isometry is an integer matrix `g`
//! with `gᵀ·Q·g = Q` acting on columns.
//!
//! - [`Lattice::signature`] diagonalizes `Q` by rational congruence, no floating point.
//! - [`Lattice::discriminant_group`] reads `L^∨/L` off the Smith normal form of `Q`.
//! - [`form_orthogonal_group`] enumerates `O(q)` by backtracking over generator images.
//! - [`Lattice::in_discriminant_kernel`] and [`Lattice::preserves_positive_cone`] classify isometries.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{gcd_i64, is_square_mod, Int, Rat};
use crate::json::{matrix_from_json, matrix_to_json, JsonInt};
use crate::matrix::{IntMatrix, RatMatrix};

pub const DEFAULT_FORM_CAP: u64 = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix is empty or not square")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("lattice is odd: diagonal entry {0} is not even")]
    Odd(Int),
    #[error("lattice is degenerate (det = 0)")]
    Degenerate,
    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,
    #[error("cone test needs signature (1,n) or (n,1), got ({0},{1})")]
    UnsupportedSignature(usize, usize),
    #[error("discriminant group has order {size}, above the enumeration cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({:?})", self.gram)
    }
}

impl Lattice {
    /// Validates symmetry, evenness and non-degeneracy.
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if gram.rows() == 0 || !gram.is_square() {
            return Err(LatticeError::NotSquare);
        }
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        if let Some(d) = (0..gram.rows()).map(|i| &gram[(i, i)]).find(|d| d.is_odd()) {
            return Err(LatticeError::Odd(d.clone()));
        }
        if gram.det().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(Lattice { gram })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Self::new(IntMatrix::from_i64(rows))
    }

    /// `U(k) ⊕ ⟨2l⟩` with Gram `[[0,0,k],[0,2l,0],[k,0,0]]`.
    pub fn family(k: i64, l: i64) -> Result<Self, LatticeError> {
        if k == 0 || l == 0 {
            return Err(LatticeError::BadFamily(format!("k = {k}, l = {l}; both must be nonzero")));
        }
        Self::from_i64(&[&[0, 0, k], &[0, 2 * l, 0], &[k, 0, 0]])
    }

    /// `M_n = U(n) ⊕ ⟨−2n⟩`.
    pub fn m_n(n: i64) -> Result<Self, LatticeError> {
        if n < 1 {
            return Err(LatticeError::BadFamily(format!("n = {n}; must be positive")));
        }
        Self::family(n, -n)
    }

    /// `L(s)`: the same module with Gram `s·Q`.
    pub fn scaled(&self, s: i64) -> Result<Self, LatticeError> {
        Self::new(self.gram.scale(&Int::from(s)))
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn disc(&self) -> Int {
        self.gram.det()
    }

    pub fn gram_inverse(&self) -> RatMatrix {
        self.gram.to_rat().inverse().expect("non-degenerate by construction")
    }

    pub fn inner(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let q = self.gram.to_rat();
        x.iter().zip(q.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    pub fn inner_int(&self, x: &[Int], y: &[Int]) -> Int {
        x.iter().zip(self.gram.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// `(s₊, s₋)` from an exact diagonalization.
    pub fn signature(&self) -> (usize, usize) {
        let d = self.diagonalize().0;
        let pos = d.iter().filter(|x| x.is_positive()).count();
        (pos, d.len() - pos)
    }

    /// `(D, T)` with `Tᵀ·Q·T = diag(D)`, `T` rational and invertible.
    pub fn diagonalize(&self) -> (Vec<Rat>, RatMatrix) {
        let n = self.rank();
        let mut a = self.gram.to_rat();
        let mut t = RatMatrix::identity(n);
        for k in 0..n {
            if a[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                    a.swap_rows(k, j);
                    a.swap_cols(k, j);
                    t.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                    congruence_add(&mut a, &mut t, k, j, &Rat::one());
                }
            }
            // Non-degenerate input keeps every pivot nonzero after the repair above.
            assert!(!a[(k, k)].is_zero(), "degenerate pivot in a non-degenerate lattice");
            for i in k + 1..n {
                if !a[(i, k)].is_zero() {
                    let f = -(&a[(i, k)] / &a[(k, k)]);
                    congruence_add(&mut a, &mut t, i, k, &f);
                }
            }
        }
        ((0..n).map(|i| a[(i, i)].clone()).collect(), t)
    }

    /// A primitive integer vector `v` with `⟨v,v⟩ > 0`, if one exists.
    pub fn positive_vector(&self) -> Option<Vec<Int>> {
        let (d, t) = self.diagonalize();
        let k = d.iter().position(|x| x.is_positive())?;
        let col = t.col(k);
        let den = col.iter().fold(Int::one(), |acc, q| acc.lcm(q.denom()));
        let v: Vec<Int> = col.iter().map(|q| (q * Rat::from_integer(den.clone())).to_integer()).collect();
        let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
        Some(v.into_iter().map(|x| x / &g).collect())
    }

    pub fn is_isometry(&self, g: &IntMatrix) -> bool {
        g.rows() == self.rank() && g.cols() == self.rank() && g.congruence(&self.gram) == self.gram
    }

    /// True iff `g` acts trivially on `L^∨/L`, i.e. `(g − I)·Q⁻¹` is integral.
    pub fn in_discriminant_kernel(&self, g: &IntMatrix) -> Result<bool, LatticeError> {
        if !self.is_isometry(g) {
            return Err(LatticeError::NotIsometry);
        }
        let diff = (g - &IntMatrix::identity(self.rank())).to_rat();
        Ok((&diff * &self.gram_inverse()).is_integral())
    }

    /// For signature `(1,n)`: `⟨gv,v⟩ > 0` for a positive `v`. Signature `(n,1)` uses `−Q`.
    pub fn preserves_positive_cone(&self, g: &IntMatrix) -> Result<bool, LatticeError> {
        if !self.is_isometry(g) {
            return Err(LatticeError::NotIsometry);
        }
        let (p, m) = self.signature();
        let lat = match (p, m) {
            (1, _) => self.clone(),
            (_, 1) => Lattice { gram: -&self.gram },
            _ => return Err(LatticeError::UnsupportedSignature(p, m)),
        };
        let v = lat.positive_vector().expect("signature (1,n) has a positive vector");
        Ok(lat.inner_int(&g.mul_vec(&v), &v).is_positive())
    }

    pub fn discriminant_group(&self) -> DiscriminantGroup {
        let sm = self.gram.smith();
        let n = self.rank();
        let v_inv = sm.v.to_rat().inverse().expect("unimodular");
        let mut invariant_factors = Vec::new();
        let mut generator_lifts = Vec::new();
        let mut coord_rows = Vec::new();
        for i in 0..n {
            let d = sm.s[(i, i)].clone();
            if d.is_one() {
                continue;
            }
            let dq = Rat::from_integer(d.clone());
            generator_lifts.push(sm.v.col(i).iter().map(|x| Rat::from_integer(x.clone()) / &dq).collect());
            coord_rows.push(v_inv.row(i).to_vec());
            invariant_factors.push(d);
        }
        DiscriminantGroup { invariant_factors, generator_lifts, coord_rows }
    }

    pub fn discriminant_form(&self) -> FiniteQuadraticForm {
        let group = self.discriminant_group();
        let m = group.invariant_factors.len();
        let mut q_values = RatMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                let v = self.inner(&group.generator_lifts[i], &group.generator_lifts[j]);
                q_values[(i, j)] = if i == j { reduce_mod(&v, 2) } else { reduce_mod(&v, 1) };
            }
        }
        FiniteQuadraticForm { group, q_values }
    }

    /// The automorphism of `A(L)` induced by `g`, as a matrix on generators (column `j` is
    /// the image of generator `j`).
    pub fn discriminant_action(&self, g: &IntMatrix) -> Result<IntMatrix, LatticeError> {
        if !self.is_isometry(g) {
            return Err(LatticeError::NotIsometry);
        }
        let grp = self.discriminant_group();
        let gq = g.to_rat();
        let cols: Vec<Vec<Int>> = grp.generator_lifts.iter().map(|x| grp.coordinates(&gq.mul_vec(x))).collect();
        Ok(if cols.is_empty() { IntMatrix::zeros(0, 0) } else { IntMatrix::from_cols(&cols) })
    }
}

/// `a ← Eᵀ·a·E`, `t ← t·E` where `E` adds `c·(column src)` to column `dst`.
fn congruence_add(a: &mut RatMatrix, t: &mut RatMatrix, dst: usize, src: usize, c: &Rat) {
    let n = a.rows();
    for i in 0..n {
        let v = &a[(i, src)] * c;
        a[(i, dst)] += v;
    }
    for j in 0..n {
        let v = &a[(src, j)] * c;
        a[(dst, j)] += v;
    }
    for i in 0..n {
        let v = &t[(i, src)] * c;
        t[(i, dst)] += v;
    }
}

/// Representative of `x mod m·Z` in `[0, m)`.
pub fn reduce_mod(x: &Rat, m: i64) -> Rat {
    let m = Rat::from_integer(Int::from(m));
    let q = (x / &m).floor();
    x - q * m
}

/// `L^∨/L ≅ ⊕ Z/dᵢ` with `d₁ | d₂ | …`, each `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub invariant_factors: Vec<Int>,
    pub generator_lifts: Vec<Vec<Rat>>,
    coord_rows: Vec<Vec<Rat>>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_two_elementary(&self) -> bool {
        self.invariant_factors.iter().all(|d| d == &Int::from(2))
    }

    /// Coordinates of `y ∈ L^∨` on the generators, each reduced into `[0, dᵢ)`.
    pub fn coordinates(&self, y: &[Rat]) -> Vec<Int> {
        self.coord_rows
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, d)| {
                let c: Rat = row.iter().zip(y).map(|(a, b)| a * b).sum::<Rat>() * Rat::from_integer(d.clone());
                assert!(c.is_integer(), "vector is not in the dual lattice");
                c.to_integer().mod_floor(d)
            })
            .collect()
    }
}

/// `q` on `A(L)`: `q_values[i][i] = q(xᵢ) mod 2`, `q_values[i][j] = b(xᵢ,xⱼ) mod 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    pub group: DiscriminantGroup,
    pub q_values: RatMatrix,
}

impl FiniteQuadraticForm {
    pub fn rank(&self) -> usize {
        self.group.invariant_factors.len()
    }

    /// `q(Σ cᵢxᵢ) mod 2`.
    pub fn q(&self, c: &[Int]) -> Rat {
        let m = self.rank();
        let mut acc = Rat::zero();
        for i in 0..m {
            let ci = Rat::from_integer(c[i].clone());
            acc += &ci * &ci * &self.q_values[(i, i)];
            for j in i + 1..m {
                acc += Rat::from_integer(Int::from(2) * &c[i] * &c[j]) * &self.q_values[(i, j)];
            }
        }
        reduce_mod(&acc, 2)
    }

    /// `b(Σ cᵢxᵢ, Σ c'ⱼxⱼ) mod 1`.
    pub fn b(&self, c: &[Int], c2: &[Int]) -> Rat {
        let mut acc = Rat::zero();
        for (i, ci) in c.iter().enumerate().take(self.rank()) {
            for (j, cj) in c2.iter().enumerate().take(self.rank()) {
                acc += Rat::from_integer(ci * cj) * &self.q_values[(i, j)];
            }
        }
        reduce_mod(&acc, 1)
    }

    pub fn elements(&self) -> Vec<Vec<Int>> {
        let mut out = vec![vec![]];
        for d in &self.group.invariant_factors {
            let d = d.to_i64().expect("small discriminant group");
            out = out.into_iter().flat_map(|p| (0..d).map(move |x| [p.clone(), vec![Int::from(x)]].concat())).collect();
        }
        out
    }

    fn reduce(&self, c: &[Int]) -> Vec<Int> {
        c.iter().zip(&self.group.invariant_factors).map(|(x, d)| x.mod_floor(d)).collect()
    }

    /// Checks that `phi` (columns = generator images) preserves `q` and `b` on generators.
    pub fn preserves(&self, phi: &IntMatrix) -> bool {
        let m = self.rank();
        let img: Vec<Vec<Int>> = (0..m).map(|j| phi.col(j)).collect();
        (0..m).all(|i| {
            self.q(&img[i]) == self.q_values[(i, i)]
                && (0..m).all(|j| i == j || self.b(&img[i], &img[j]) == self.q_values[(i, j)])
        })
    }
}

/// All automorphisms of `A(L)` preserving `q`, as generator-image matrices, in
/// lexicographic order of the image coordinates.
pub fn form_orthogonal_group(q: &FiniteQuadraticForm, cap: u64) -> Result<Vec<IntMatrix>, LatticeError> {
    let m = q.rank();
    if m == 0 {
        return Ok(vec![IntMatrix::zeros(0, 0)]);
    }
    let size = q.group.order().to_u64().unwrap_or(u64::MAX);
    if size > cap {
        return Err(LatticeError::CapExceeded { size, cap });
    }
    let elements = q.elements();
    let factors = &q.group.invariant_factors;
    let candidates: Vec<Vec<&Vec<Int>>> = (0..m)
        .map(|i| {
            elements
                .iter()
                .filter(|y| y.iter().zip(factors).all(|(yj, dj)| (&factors[i] * yj).is_multiple_of(dj)))
                .filter(|y| q.q(y) == q.q_values[(i, i)])
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<&Vec<Int>> = Vec::with_capacity(m);
    extend(q, &candidates, &mut chosen, &elements, &mut out);
    Ok(out)
}

fn extend<'a>(
    q: &FiniteQuadraticForm,
    candidates: &'a [Vec<&'a Vec<Int>>],
    chosen: &mut Vec<&'a Vec<Int>>,
    elements: &[Vec<Int>],
    out: &mut Vec<IntMatrix>,
) {
    let i = chosen.len();
    if i == candidates.len() {
        let cols: Vec<Vec<Int>> = chosen.iter().map(|c| (*c).clone()).collect();
        let phi = IntMatrix::from_cols(&cols);
        if is_injective(q, &phi, elements) {
            out.push(phi);
        }
        return;
    }
    for y in &candidates[i] {
        if (0..i).all(|j| q.b(y, chosen[j]) == q.q_values[(i, j)]) {
            chosen.push(y);
            extend(q, candidates, chosen, elements, out);
            chosen.pop();
        }
    }
}

fn is_injective(q: &FiniteQuadraticForm, phi: &IntMatrix, elements: &[Vec<Int>]) -> bool {
    let mut seen = std::collections::HashSet::new();
    elements.iter().all(|c| seen.insert(q.reduce(&phi.mul_vec(c))))
}

/// Whether `k·x·z + l·y² = ε` has an integer solution: `gcd(k,l) = 1` and `ε·l` is a
/// square modulo `|k|`.
pub fn represents(k: i64, l: i64, eps: i64) -> bool {
    assert!(k != 0 && l != 0, "family parameters must be nonzero");
    gcd_i64(k, l) == 1 && is_square_mod(eps * l, k)
}

/// JSON shape accepted wherever a lattice is expected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeSpec {
    Gram { gram: Vec<Vec<JsonInt>> },
    Family { family: String, k: Option<i64>, l: Option<i64>, n: Option<i64> },
}

impl LatticeSpec {
    pub fn build(&self) -> Result<Lattice, LatticeError> {
        match self {
            LatticeSpec::Gram { gram } => Lattice::new(matrix_from_json(gram).ok_or(LatticeError::NotSquare)?),
            LatticeSpec::Family { family, k, l, n } => match (family.as_str(), k, l, n) {
                ("U(k)+<2l>", Some(k), Some(l), None) => Lattice::family(*k, *l),
                ("M_n", None, None, Some(n)) => Lattice::m_n(*n),
                _ => Err(LatticeError::BadFamily(format!("unrecognized family shorthand {family:?}"))),
            },
        }
    }
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LatticeSpec::Gram { gram: matrix_to_json(&self.gram) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        LatticeSpec::deserialize(d)?.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn wehler() -> Lattice {
        Lattice::from_i64(&[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_grams() {
        assert_eq!(Lattice::from_i64(&[&[1]]), Err(LatticeError::Odd(int(1))));
        assert_eq!(Lattice::from_i64(&[&[2, 1], &[0, 2]]), Err(LatticeError::NotSymmetric));
        assert_eq!(Lattice::from_i64(&[&[2, 2], &[2, 2]]), Err(LatticeError::Degenerate));
        assert!(Lattice::family(0, 1).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(Lattice::from_i64(&[&[6]]).unwrap().disc(), int(6));
        assert_eq!(wehler().disc(), int(16));
        for (k, l) in [(1, -1), (2, -2), (3, 5), (4, -7)] {
            assert_eq!(Lattice::family(k, l).unwrap().disc(), int(-2 * k * k * l));
        }
    }

    #[test]
    fn signatures() {
        assert_eq!(Lattice::from_i64(&[&[2, 0], &[0, -2]]).unwrap().signature(), (1, 1));
        assert_eq!(Lattice::family(2, -2).unwrap().signature(), (1, 2));
        assert_eq!(Lattice::from_i64(&[&[6, 0, 0], &[0, -10, 0], &[0, 0, -18]]).unwrap().signature(), (1, 2));
        assert_eq!(wehler().signature(), (1, 2));
        assert_eq!(Lattice::from_i64(&[&[0, 1], &[1, 0]]).unwrap().signature(), (1, 1));
        let a3 = Lattice::from_i64(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]).unwrap();
        assert_eq!(a3.signature(), (3, 0));
    }

    #[test]
    fn positive_vector_is_positive() {
        for lat in [wehler(), Lattice::family(3, -5).unwrap()] {
            let v = lat.positive_vector().unwrap();
            assert!(lat.inner_int(&v, &v).is_positive());
        }
    }

    #[test]
    fn discriminant_groups() {
        assert!(Lattice::from_i64(&[&[0, 1], &[1, 0]]).unwrap().discriminant_group().is_trivial());
        assert_eq!(wehler().discriminant_group().invariant_factors, vec![int(2), int(2), int(4)]);
        for n in 2..7 {
            let g = Lattice::m_n(n).unwrap().discriminant_group();
            assert_eq!(g.invariant_factors, vec![int(n), int(n), int(2 * n)]);
        }
    }

    #[test]
    fn discriminant_forms_of_rank_one() {
        let q = Lattice::from_i64(&[&[2]]).unwrap().discriminant_form();
        assert_eq!(q.group.invariant_factors, vec![int(2)]);
        assert_eq!(q.q_values[(0, 0)], rat(1, 2));
        for n in 1..6 {
            let q = Lattice::from_i64(&[&[-2 * n]]).unwrap().discriminant_form();
            assert_eq!(q.group.invariant_factors, vec![int(2 * n)]);
            assert_eq!(q.q_values[(0, 0)], reduce_mod(&rat(-1, 2 * n), 2));
        }
    }

    #[test]
    fn kernel_test_examples() {
        let lat = Lattice::family(2, -2).unwrap();
        assert!(lat.in_discriminant_kernel(&IntMatrix::identity(3)).unwrap());
        // A(L) = (Z/2)² ⊕ Z/4 is not 2-elementary, so −I moves the order-4 generator.
        let minus = -&IntMatrix::identity(3);
        assert!(!lat.in_discriminant_kernel(&minus).unwrap());
        let two_elem = Lattice::from_i64(&[&[0, 0, 2], &[0, -2, 0], &[2, 0, 0]]).unwrap();
        assert!(two_elem.in_discriminant_kernel(&minus).unwrap());
        assert!(lat.in_discriminant_kernel(&IntMatrix::from_i64(&[&[1, 1], &[0, 1]])).is_err());
        let m3 = Lattice::m_n(3).unwrap();
        assert!(!m3.in_discriminant_kernel(&minus).unwrap());
    }

    #[test]
    fn cone_examples() {
        let lat = Lattice::family(2, -2).unwrap();
        assert!(lat.preserves_positive_cone(&IntMatrix::identity(3)).unwrap());
        assert!(!lat.preserves_positive_cone(&-&IntMatrix::identity(3)).unwrap());
        let neg = Lattice::from_i64(&[&[-2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        assert!(!neg.preserves_positive_cone(&-&IntMatrix::identity(3)).unwrap());
        let definite = Lattice::from_i64(&[&[2, 0], &[0, 2]]).unwrap();
        assert!(definite.preserves_positive_cone(&IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn represents_examples() {
        assert!(represents(1, 7, -1));
        assert!(!represents(4, -4, 1));
        assert!(represents(5, 1, -1));
        assert!(!represents(5, -7, 1));
    }

    #[test]
    fn json_shapes() {
        let a: Lattice = serde_json::from_str(r#"{"gram": [[0,2,2],[2,0,2],[2,2,0]]}"#).unwrap();
        assert_eq!(a, wehler());
        let b: Lattice = serde_json::from_str(r#"{"family":"U(k)+<2l>","k":2,"l":-2}"#).unwrap();
        let c: Lattice = serde_json::from_str(r#"{"family":"M_n","n":2}"#).unwrap();
        assert_eq!(b, c);
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"gram":[[0,0,2],[0,-4,0],[2,0,0]]}"#);
        assert!(serde_json::from_str::<Lattice>(r#"{"gram": [[1]]}"#).is_err());
        assert!(serde_json::from_str::<Lattice>(r#"{"family":"M_n","k":2}"#).is_err());
    }
}
