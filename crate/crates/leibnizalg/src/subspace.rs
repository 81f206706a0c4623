//! Subspaces of a fixed coordinate space, held in a canonical form.
//!
//! A subspace stores the reduced row echelon basis of its row span, so
//! equality of subspaces is plain matrix equality and every derived object
//! (complements, intersections, coordinates) is deterministic.

use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given rows inside the ambient space.
    pub fn from_rows(ambient: usize, rows: Vec<Vector>) -> Self {
        for r in &rows {
            assert_eq!(r.dim(), ambient, "spanning vector has wrong length");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (basis, pivots) = Matrix::from_rows(rows).rref();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical (reduced echelon) basis matrix; one row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of v after eliminating every pivot coordinate; zero exactly
    /// when v lies in the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.ambient, "vector has wrong length");
        let mut out = v.clone();
        for (row, &col) in self.pivots.iter().enumerate() {
            let c = out.get(col).clone();
            if !c.is_zero() {
                out.add_assign_scaled(&self.basis.row(row), &(-c));
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of v in the canonical basis, or None when v is outside.
    ///
    /// Because the basis is reduced, the coordinate on basis row i can be
    /// read off at that row's pivot column; the candidate is then verified
    /// by reconstructing v.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        assert_eq!(v.dim(), self.ambient, "vector has wrong length");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&c| v.get(c).clone()).collect();
        let mut rebuilt = Vector::zero(self.ambient);
        for (row, c) in coords.iter().enumerate() {
            rebuilt.add_assign_scaled(&self.basis.row(row), c);
        }
        if &rebuilt == v {
            Some(Vector::new(coords))
        } else {
            None
        }
    }

    /// Express a coordinate vector back in ambient coordinates.
    pub fn embed(&self, coords: &Vector) -> Vector {
        assert_eq!(coords.dim(), self.dim(), "coordinate vector has wrong length");
        let mut out = Vector::zero(self.ambient);
        for (row, c) in coords.coords().iter().enumerate() {
            out.add_assign_scaled(&self.basis.row(row), c);
        }
        out
    }

    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.basis_rows().iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection, computed from the relations x·A = y·B between row
    /// combinations of the two bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        // Columns of the system: a coefficients for self, b for other.
        let mut sys = Matrix::zero(self.ambient, a + b);
        for i in 0..a {
            let row = self.basis.row(i);
            for j in 0..self.ambient {
                sys.set(j, i, row.get(j).clone());
            }
        }
        for i in 0..b {
            let row = other.basis.row(i);
            for j in 0..self.ambient {
                sys.set(j, a + i, -row.get(j).clone());
            }
        }
        let rows: Vec<Vector> = sys
            .null_space()
            .into_iter()
            .map(|xy| {
                let mut v = Vector::zero(self.ambient);
                for i in 0..a {
                    v.add_assign_scaled(&self.basis.row(i), xy.get(i));
                }
                v
            })
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }

    /// Standard basis vectors at the non-pivot coordinates; together with
    /// this subspace they span the ambient space.
    pub fn standard_complement(&self) -> Vec<Vector> {
        (0..self.ambient)
            .filter(|i| !self.pivots.contains(i))
            .map(|i| Vector::basis(self.ambient, i))
            .collect()
    }

    /// Basis rows of `self` that complement the contained subspace `inner`.
    ///
    /// Both bases being reduced, the pivots of `inner` are a subset of the
    /// pivots of `self`; the rows of `self` at the leftover pivots span a
    /// complement of `inner` inside `self`.
    pub fn relative_complement_rows(&self, inner: &Subspace) -> Vec<Vector> {
        assert!(inner.is_contained_in(self), "inner subspace is not contained");
        (0..self.dim())
            .filter(|&i| !inner.pivots.contains(&self.pivots[i]))
            .map(|i| self.basis.row(i))
            .collect()
    }

    /// Total order used to list components deterministically: by dimension,
    /// then lexicographically on the canonical basis entries.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

/// Span of the standard basis vectors at the given indices.
pub fn coordinate_subspace(ambient: usize, indices: &[usize]) -> Subspace {
    Subspace::from_rows(
        ambient,
        indices.iter().map(|&i| Vector::basis(ambient, i)).collect(),
    )
}

/// Scalar helpers for building test vectors.
pub fn vector_of(coords: Vec<i64>) -> Vector {
    Vector::new(coords.into_iter().map(|x| Scalar::from_integer(x.into())).collect())
}
