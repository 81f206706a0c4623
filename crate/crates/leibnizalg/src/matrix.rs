//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream (subspaces, linear maps, the algebra operations)
//! reduces to the primitives here: reduced row echelon form with
//! deterministic pivoting, canonical kernel bases, linear solving with free
//! variables pinned to zero, and minimal polynomials with rational root
//! extraction. Determinism matters as much as correctness: two runs on the
//! same input must produce identical matrices, so pivot choice is always
//! "first nonzero row", never a magnitude heuristic.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coordinate vector relative to an (implicit) ordered basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn zero(n: usize) -> Self {
        Vector { coords: vec![Scalar::zero(); n] }
    }

    /// Standard basis vector e_i in dimension n.
    pub fn basis(n: usize, i: usize) -> Self {
        assert!(i < n, "basis index out of range");
        let mut v = Vector::zero(n);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.coords[i] = value;
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn add_assign_scaled(&mut self, other: &Vector, c: &Scalar) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b * c;
        }
    }

    /// Row vector times matrix.
    pub fn mul_matrix(&self, m: &Matrix) -> Vector {
        assert_eq!(self.dim(), m.rows(), "vector/matrix dimension mismatch");
        let mut out = Vector::zero(m.cols());
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..m.cols() {
                out.coords[j] += c * m.get(i, j);
            }
        }
        out
    }

    /// Index of the first nonzero coordinate, if any.
    pub fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let nrows = rows.len();
        let cols = rows.first().map_or(0, Vector::dim);
        for r in &rows {
            assert_eq!(r.dim(), cols, "ragged rows");
        }
        let data = rows.into_iter().flat_map(Vector::into_coords).collect();
        Matrix { rows: nrows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        let cur = out.get(i, j) + prod;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    /// Flatten to a single row-major vector (used to span spaces of maps).
    pub fn flatten(&self) -> Vector {
        Vector::new(self.data.clone())
    }

    /// Row-major entries, exposed for deterministic ordering keys.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Reduced row echelon form with the pivot column of each nonzero row.
    ///
    /// Pivoting is deterministic: columns are scanned left to right and the
    /// first row with a nonzero entry is promoted. Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = Scalar::one() / m.get(pivot_row, col).clone();
            m.scale_row(pivot_row, &inv);
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.get(r2, col).is_zero() {
                    let factor = m.get(r2, col).clone();
                    m.sub_scaled_row(r2, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        let kept: Vec<Vector> = (0..pivot_row).map(|i| m.row(i)).collect();
        let reduced = if kept.is_empty() {
            Matrix::zero(0, m.cols)
        } else {
            Matrix::from_rows(kept)
        };
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of { x : M x = 0 } (x of length `cols`).
    ///
    /// One basis vector per free column, with that free coordinate set to 1
    /// and the pivot coordinates filled in from the reduced form.
    pub fn null_space(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = Vector::zero(self.cols);
            x.set(free, Scalar::one());
            for (row, &col) in pivots.iter().enumerate() {
                x.set(col, -r.get(row, free).clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Particular solution of M x = b with all free variables zero, or None
    /// when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.dim(), "right-hand side has wrong length");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b.get(i).clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = Vector::zero(self.cols);
        for (row, &col) in pivots.iter().enumerate() {
            x.set(col, r.get(row, self.cols).clone());
        }
        Some(x)
    }

    /// Inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Monic minimal polynomial, ascending coefficients (constant first).
    ///
    /// Found as the first linear dependence among the flattened powers
    /// I, M, M^2, ...; degree is at most the matrix dimension.
    pub fn min_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols, "minimal polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return vec![Scalar::zero(), Scalar::one()];
        }
        let mut powers = vec![Matrix::identity(n)];
        loop {
            let next = powers.last().unwrap().mul(self);
            let m = powers.len();
            // Columns are the flattened known powers; solve for -next.
            let mut sys = Matrix::zero(n * n, m);
            for (k, p) in powers.iter().enumerate() {
                for (idx, entry) in p.data.iter().enumerate() {
                    sys.set(idx, k, entry.clone());
                }
            }
            let target = Vector::new(next.data.iter().map(|c| -c.clone()).collect());
            if let Some(c) = sys.solve(&target) {
                let mut coeffs = c.into_coords();
                coeffs.push(Scalar::one());
                return coeffs;
            }
            powers.push(next);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * c;
            }
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, c: &Scalar) {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if !s.is_zero() {
                let idx = target * self.cols + j;
                self.data[idx] = &self.data[idx] - &(s * c);
            }
        }
    }
}

/// Evaluate a polynomial (ascending coefficients) at a square matrix.
pub fn eval_poly(coeffs: &[Scalar], m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut out = Matrix::zero(n, n);
    for c in coeffs.iter().rev() {
        out = out.mul(m);
        for i in 0..n {
            let cur = out.get(i, i) + c;
            out.set(i, i, cur);
        }
    }
    out
}

/// Synthetic division by (t - r): returns the quotient and the remainder.
pub fn divide_linear(coeffs: &[Scalar], r: &Scalar) -> (Vec<Scalar>, Scalar) {
    let mut quotient = vec![Scalar::zero(); coeffs.len().saturating_sub(1)];
    let mut carry = Scalar::zero();
    for (k, c) in coeffs.iter().enumerate().rev() {
        let value = c + &carry * r;
        if k == 0 {
            return (quotient, value);
        }
        quotient[k - 1] = value.clone();
        carry = value;
    }
    (quotient, carry)
}

/// Rational roots of a polynomial with rational coefficients, with
/// multiplicities, sorted ascending.
///
/// Candidates come from the rational root theorem after clearing
/// denominators. Factoring of the edge coefficients is by bounded trial
/// division, so for astronomically large coefficients a root can be missed
/// (the result is always sound: every reported pair is verified by exact
/// division). Missed roots only make a later splitting step report failure,
/// never a wrong answer.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<(Scalar, usize)> {
    let mut poly: Vec<Scalar> = coeffs.to_vec();
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    if poly.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();

    // Roots at zero: strip factors of t.
    let mut zero_mult = 0;
    while poly.first().is_some_and(Zero::is_zero) {
        poly.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Scalar::zero(), zero_mult));
    }
    if poly.len() <= 1 {
        return roots;
    }

    // Clear denominators to get integer edge coefficients.
    let mut denom_lcm = BigInt::one();
    for c in &poly {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let int_coeffs: Vec<BigInt> = poly
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let a0 = int_coeffs.first().unwrap().abs();
    let lead = int_coeffs.last().unwrap().abs();

    let ps = positive_divisors(&a0);
    let qs = positive_divisors(&lead);
    let mut candidates: Vec<Scalar> = Vec::new();
    for p in &ps {
        for q in &qs {
            let c = Scalar::new(p.clone(), q.clone());
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();

    for cand in candidates {
        let mut mult = 0;
        loop {
            let (q, rem) = divide_linear(&poly, &cand);
            if rem.is_zero() {
                mult += 1;
                poly = q;
            } else {
                break;
            }
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
        if poly.len() <= 1 {
            break;
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    roots
}

/// Positive divisors of |n| by bounded trial division. A cofactor surviving
/// the trial bound is treated as a single prime, which can under-report
/// divisors of enormous inputs but never fabricates one.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            factors.push((p, e));
        }
    };
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(100_000u32);
    while &d * &d <= n && d <= bound {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 1u32;
    }
    if !n.is_one() {
        push(n, 1);
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in factors {
        let mut extended = Vec::new();
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                extended.push(d * &pk);
                pk *= &p;
                if extended.len() > 1 << 16 {
                    extended.truncate(1 << 16);
                    break;
                }
            }
        }
        divisors = extended;
    }
    divisors.sort();
    divisors.dedup();
    divisors
}
