//! Dense exact matrices.
//!
//! [`Matrix`] is generic over the scalar; the library uses it at two types:
//!
//! - [`IntMatrix`] over `BigInt`, with fraction-free determinant and Smith normal form,
//! - [`RatMatrix`] over `BigRational`, with inverse, rank and kernel by row reduction.
//!
//! Storage is row-major. No floating point is involved anywhere.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.iter().flatten().cloned().collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self[(i, j)].clone())
            .collect();
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn from_cols(cols: &[Vec<T>]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let data = (r0..r1).flat_map(|i| (c0..c1).map(move |j| (i, j))).map(|(i, j)| self[(i, j)].clone()).collect();
        Matrix { rows: r1 - r0, cols: c1 - c0, data }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T> Mul<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone + Zero + for<'b> Mul<&'b T, Output = T>,
{
    type Output = Matrix<T>;
    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * &rhs[(k, j)];
                }
                data.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: rhs.cols, data }
    }
}

impl<'a, T> Add<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone + for<'b> Add<&'b T, Output = T>,
{
    type Output = Matrix<T>;
    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<'a, T> Sub<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone + for<'b> Sub<&'b T, Output = T>,
{
    type Output = Matrix<T>;
    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<T: Clone + Neg<Output = T>> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Clone + for<'b> Mul<&'b T, Output = T>> Matrix<T> {
    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c)
    }
}

impl<T: Clone + Zero + One + for<'b> Mul<&'b T, Output = T>> Matrix<T> {
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `Mᵀ·A·M`, the Gram matrix transported along `M`.
    pub fn congruence(&self, a: &Self) -> Self {
        &(&self.transpose() * a) * self
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows).map(|i| (0..self.cols).fold(T::zero(), |acc, k| acc + self[(i, k)].clone() * &v[k])).collect()
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_rows(&v)
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|x| Rat::from_integer(x.clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Determinant by Bareiss elimination; every intermediate quotient is exact.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    /// Smith normal form `U·A·V = S` with `U`, `V` unimodular and `S` diagonal,
    /// `S[i,i] ≥ 0` and `S[i,i] | S[i+1,i+1]`.
    pub fn smith(&self) -> Smith {
        let (m, n) = (self.rows, self.cols);
        let mut s = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        for t in 0..m.min(n) {
            loop {
                let pivot = (t..m)
                    .flat_map(|i| (t..n).map(move |j| (i, j)))
                    .filter(|&ij| !s[ij].is_zero())
                    .min_by(|&a, &b| s[a].abs().cmp(&s[b].abs()));
                let Some((pi, pj)) = pivot else { return Smith { u, s, v } };
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);

                let mut clean = true;
                for i in t + 1..m {
                    let q = s[(i, t)].div_floor(&s[(t, t)]);
                    if !q.is_zero() {
                        add_row(&mut s, i, t, &-q.clone());
                        add_row(&mut u, i, t, &-q);
                    }
                    clean &= s[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    let q = s[(t, j)].div_floor(&s[(t, t)]);
                    if !q.is_zero() {
                        add_col(&mut s, j, t, &-q.clone());
                        add_col(&mut v, j, t, &-q);
                    }
                    clean &= s[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&ij| !s[ij].is_multiple_of(&s[(t, t)]));
                match bad {
                    Some((i, _)) => {
                        add_row(&mut s, t, i, &Int::one());
                        add_row(&mut u, t, i, &Int::one());
                    }
                    None => break,
                }
            }
            if s[(t, t)].is_negative() {
                for j in 0..n {
                    s[(t, j)] = -s[(t, j)].clone();
                }
                for j in 0..m {
                    u[(t, j)] = -u[(t, j)].clone();
                }
            }
        }
        Smith { u, s, v }
    }

    pub fn invariant_factors(&self) -> Vec<Int> {
        let sm = self.smith();
        (0..self.rows.min(self.cols)).map(|i| sm.s[(i, i)].clone()).collect()
    }
}

fn add_row(m: &mut IntMatrix, dst: usize, src: usize, c: &Int) {
    for j in 0..m.cols {
        let v = &m[(src, j)] * c;
        m[(dst, j)] += v;
    }
}

fn add_col(m: &mut IntMatrix, dst: usize, src: usize, c: &Int) {
    for i in 0..m.rows {
        let v = &m[(i, src)] * c;
        m[(i, dst)] += v;
    }
}

/// `u·a·v = s`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl RatMatrix {
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|q| q.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        self.is_integral().then(|| self.map(|q| q.to_integer()))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in 0..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![Rat::zero(); self.cols];
                v[free] = Rat::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, free)].clone();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut d = Rat::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else { return Rat::zero() };
            if p != c {
                m.swap_rows(p, c);
                d = -d;
            }
            d *= &m[(c, c)];
            for i in c + 1..m.rows {
                let f = &m[(i, c)] / &m[(c, c)];
                if !f.is_zero() {
                    for j in c..m.cols {
                        let v = &m[(c, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
        }
        d
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = RatMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, 2 * n))
    }

    /// Characteristic polynomial `det(tI − M)`, coefficients from the constant term up,
    /// by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<Rat> {
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = RatMatrix::zeros(n, n);
        let id = RatMatrix::identity(n);
        for k in 1..=n {
            let shifted = &m + &id.scale(&coeffs[n - k + 1]);
            m = self * &shifted;
            let tr: Rat = (0..n).map(|i| m[(i, i)].clone()).sum();
            coeffs[n - k] = -tr / Rat::from_integer(Int::from(k as i64));
        }
        coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn det_by_cofactors(m: &IntMatrix) -> Int {
        let n = m.rows();
        if n == 1 {
            return m[(0, 0)].clone();
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<Int>> =
                    (1..n).map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect()).collect();
                let t = &m[(0, j)] * det_by_cofactors(&IntMatrix::from_rows(&minor));
                if j % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases: [&[&[i64]]; 4] = [
            &[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]],
            &[&[0, 0, 3], &[0, -6, 0], &[3, 0, 0]],
            &[&[1, 2, 3, 4], &[0, 0, 1, 5], &[2, 1, 0, 0], &[7, 1, 1, 2]],
            &[&[0, 1], &[1, 0]],
        ];
        for c in cases {
            let m = IntMatrix::from_i64(c);
            assert_eq!(m.det(), det_by_cofactors(&m));
            assert_eq!(m.to_rat().det(), Rat::from_integer(m.det()));
        }
        assert_eq!(IntMatrix::from_i64(&[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]]).det(), int(16));
    }

    #[test]
    fn smith_form_of_wehler_gram() {
        let a = IntMatrix::from_i64(&[&[0, 2, 2], &[2, 0, 2], &[2, 2, 0]]);
        let sm = a.smith();
        assert_eq!(&(&sm.u * &a) * &sm.v, sm.s);
        assert_eq!(a.invariant_factors(), vec![int(2), int(2), int(4)]);
        assert_eq!(sm.u.det().abs(), int(1));
        assert_eq!(sm.v.det().abs(), int(1));
    }

    #[test]
    fn smith_form_of_rectangular_matrix() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4, 0, 1, 0], &[-6, 6, 12, 1, 0, 0], &[10, -4, -16, 0, 0, 0]]);
        let sm = a.smith();
        assert_eq!(&(&sm.u * &a) * &sm.v, sm.s);
        assert_eq!(a.invariant_factors(), vec![int(1), int(1), int(2)]);
    }

    #[test]
    fn inverse_and_kernel() {
        let a = IntMatrix::from_i64(&[&[0, 0, 2], &[0, -4, 0], &[2, 0, 0]]).to_rat();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RatMatrix::identity(3));
        assert_eq!(inv[(0, 2)], rat(1, 2));
        let sing = IntMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]).to_rat();
        let k = sing.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(sing.mul_vec(&v).iter().all(Zero::is_zero));
        }
        assert!(IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).to_rat().inverse().is_none());
    }

    #[test]
    fn characteristic_polynomial() {
        let m = IntMatrix::from_i64(&[&[2, 1], &[1, 3]]).to_rat();
        assert_eq!(m.char_poly(), vec![rat(5, 1), rat(-5, 1), rat(1, 1)]);
        let id = RatMatrix::identity(3);
        assert_eq!(id.char_poly(), vec![rat(-1, 1), rat(3, 1), rat(-3, 1), rat(1, 1)]);
    }
}
