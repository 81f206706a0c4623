//! Linear maps between coordinate spaces, in the row convention.
//!
//! Row i of the matrix is the image of the i-th source basis vector written
//! in target coordinates, so applying a map is `v * M` and composing
//! "f then g" is the matrix product `f.matrix * g.matrix`.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use num_traits::One;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    source: usize,
    target: usize,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: usize, target: usize, matrix: Matrix) -> Self {
        assert_eq!(matrix.rows(), source, "matrix rows must equal source dimension");
        assert_eq!(matrix.cols(), target, "matrix cols must equal target dimension");
        LinearMap { source, target, matrix }
    }

    pub fn from_images(source: usize, target: usize, images: Vec<Vector>) -> Self {
        assert_eq!(images.len(), source, "one image per source basis vector");
        for v in &images {
            assert_eq!(v.dim(), target, "image has wrong length");
        }
        let matrix = if source == 0 {
            Matrix::zero(0, target)
        } else {
            Matrix::from_rows(images)
        };
        LinearMap { source, target, matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(n, n, Matrix::identity(n))
    }

    pub fn zero(source: usize, target: usize) -> Self {
        LinearMap::new(source, target, Matrix::zero(source, target))
    }

    /// Rebuild a map from its flattened matrix (row-major).
    pub fn from_flat(source: usize, target: usize, flat: &Vector) -> Self {
        assert_eq!(flat.dim(), source * target, "flattened matrix has wrong length");
        let mut m = Matrix::zero(source, target);
        for i in 0..source {
            for j in 0..target {
                m.set(i, j, flat.get(i * target + j).clone());
            }
        }
        LinearMap { source, target, matrix: m }
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.source, "vector has wrong length");
        v.mul_matrix(&self.matrix)
    }

    /// Composition "self, then g".
    pub fn then(&self, g: &LinearMap) -> LinearMap {
        assert_eq!(self.target, g.source, "composition dimension mismatch");
        LinearMap::new(self.source, g.target, self.matrix.mul(&g.matrix))
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.source, self.target), (other.source, other.target));
        LinearMap::new(self.source, self.target, self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.source, self.target), (other.source, other.target));
        LinearMap::new(self.source, self.target, self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap::new(self.source, self.target, self.matrix.scale(c))
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&(-Scalar::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn flatten(&self) -> Vector {
        self.matrix.flatten()
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.target, (0..self.source).map(|i| self.matrix.row(i)).collect())
    }

    pub fn kernel(&self) -> Subspace {
        // v * M = 0 is M^T v^T = 0.
        Subspace::from_rows(self.source, self.matrix.transpose().null_space())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Image of a subspace of the source.
    pub fn map_subspace(&self, u: &Subspace) -> Subspace {
        assert_eq!(u.ambient(), self.source, "subspace lives in the wrong space");
        Subspace::from_rows(
            self.target,
            u.basis_rows().iter().map(|r| self.apply(r)).collect(),
        )
    }

    /// Restriction to a subspace of the source, expressed in that subspace's
    /// canonical basis coordinates.
    pub fn restrict(&self, u: &Subspace) -> LinearMap {
        assert_eq!(u.ambient(), self.source, "subspace lives in the wrong space");
        LinearMap::from_images(
            u.dim(),
            self.target,
            u.basis_rows().iter().map(|r| self.apply(r)).collect(),
        )
    }

    /// Rewrite the target coordinates relative to a subspace containing the
    /// image. Fails when some image vector falls outside.
    pub fn corestrict(&self, w: &Subspace) -> Result<LinearMap> {
        assert_eq!(w.ambient(), self.target, "subspace lives in the wrong space");
        let mut rows = Vec::with_capacity(self.source);
        for i in 0..self.source {
            let img = self.matrix.row(i);
            let coords = w.coordinates(&img).ok_or_else(|| {
                Error::PreconditionFailed("map image is not contained in the given subspace".into())
            })?;
            rows.push(coords);
        }
        Ok(LinearMap::from_images(self.source, w.dim(), rows))
    }

    /// Restriction of an endomorphism to an invariant subspace, in that
    /// subspace's coordinates. Fails when the subspace is not invariant.
    pub fn restrict_endo(&self, u: &Subspace) -> Result<LinearMap> {
        assert_eq!(self.source, self.target, "not an endomorphism");
        self.restrict(u).corestrict(u)
    }

    pub fn pow(&self, k: usize) -> LinearMap {
        assert_eq!(self.source, self.target, "power of a non-endomorphism");
        LinearMap::new(self.source, self.target, self.matrix.pow(k))
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.source, self.target, "trace of a non-endomorphism");
        self.matrix.trace()
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.source, self.target, "nilpotency of a non-endomorphism");
        self.matrix.pow(self.source).is_zero()
    }

    /// Exact exponential of a nilpotent endomorphism: sum of M^k / k!
    /// until the powers vanish.
    pub fn exp_nilpotent(&self) -> Result<LinearMap> {
        assert_eq!(self.source, self.target, "exponential of a non-endomorphism");
        let n = self.source;
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent { power: n });
        }
        let mut sum = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        let mut k = Scalar::one();
        let mut step = 1u64;
        loop {
            term = term.mul(&self.matrix);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term.scale(&(Scalar::one() / k.clone())));
            step += 1;
            k *= Scalar::from_integer(step.into());
        }
        Ok(LinearMap::new(n, n, sum))
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        assert_eq!(self.source, self.target, "inverse of a non-endomorphism");
        self.matrix.inverse().map(|m| LinearMap::new(self.source, self.target, m))
    }

    pub fn is_invertible(&self) -> bool {
        assert_eq!(self.source, self.target, "invertibility of a non-endomorphism");
        self.matrix.rank() == self.source
    }
}

/// Commutator f.g - g.f of two endomorphisms (composition read left to
/// right, so `f.then(g)` first applies f).
pub fn commutator(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.then(g).sub(&g.then(f))
}
