//! Multiplication tables of finite-dimensional algebras and the product
//! identities they are expected to satisfy.
//!
//! The product convention throughout is "right" style: the defining
//! identity is [x,[y,z]] = [[x,y],z] - [[x,z],y], so right multiplications
//! are the structure-preserving operators.

use crate::error::{Error, Result};
use crate::linmap::LinearMap;
use crate::matrix::{Matrix, Vector};
use crate::scalar::{render_scalar, Scalar};
use crate::subspace::Subspace;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::OnceLock;

/// A bilinear product on a based vector space, stored as the full table of
/// basis products [e_i, e_j].
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    name: String,
    dim: usize,
    basis_names: Vec<String>,
    /// products[i * dim + j] = [e_i, e_j] in ambient coordinates.
    products: Vec<Vector>,
    identity_ok: OnceLock<bool>,
}

impl PartialEq for AlgebraTable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.dim == other.dim
            && self.basis_names == other.basis_names
            && self.products == other.products
    }
}

impl Eq for AlgebraTable {}

/// One failing instance of the defining identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "identity fails at basis triple ({}, {}, {})",
            self.i + 1,
            self.j + 1,
            self.k + 1
        )
    }
}

/// Quotient algebra together with the maps linking it to the original.
pub struct Quotient {
    pub table: AlgebraTable,
    /// Full space onto quotient coordinates.
    pub projection: LinearMap,
    /// Quotient coordinates back into the full space (a linear section of
    /// the projection, not an algebra map in general).
    pub section: LinearMap,
}

impl AlgebraTable {
    /// Build from the complete table of basis products.
    pub fn new(name: impl Into<String>, basis_names: Vec<String>, products: Vec<Vector>) -> Self {
        let dim = basis_names.len();
        assert_eq!(products.len(), dim * dim, "product table has wrong size");
        for p in &products {
            assert_eq!(p.dim(), dim, "product vector has wrong length");
        }
        AlgebraTable {
            name: name.into(),
            dim,
            basis_names,
            products,
            identity_ok: OnceLock::new(),
        }
    }

    /// Build from a sparse list of nonzero products; every omitted pair
    /// multiplies to zero. Duplicate pairs and bad indices are rejected.
    pub fn from_entries(
        name: impl Into<String>,
        basis_names: Vec<String>,
        entries: &[(usize, usize, Vector)],
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut products = vec![Vector::zero(dim); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in entries {
            if *i >= dim || *j >= dim {
                return Err(Error::Parse(format!(
                    "product index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
            }
            let idx = i * dim + j;
            if seen[idx] {
                return Err(Error::Parse(format!(
                    "duplicate product entry for pair ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            seen[idx] = true;
            products[idx] = v.clone();
        }
        Ok(AlgebraTable::new(name, basis_names, products))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// Product of two basis vectors.
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.dim + j]
    }

    /// Bilinear product of arbitrary vectors.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        if y.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: y.dim() });
        }
        let mut out = Vector::zero(self.dim);
        for (i, a) in x.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                out.add_assign_scaled(self.product(i, j), &c);
            }
        }
        Ok(out)
    }

    /// Right multiplication v -> [v, x] as a linear map.
    pub fn right_mult(&self, x: &Vector) -> LinearMap {
        let rows = (0..self.dim)
            .map(|i| {
                self.bracket(&Vector::basis(self.dim, i), x)
                    .expect("dimension checked above")
            })
            .collect();
        LinearMap::from_images(self.dim, self.dim, rows)
    }

    /// Left multiplication v -> [x, v] as a linear map.
    pub fn left_mult(&self, x: &Vector) -> LinearMap {
        let rows = (0..self.dim)
            .map(|i| {
                self.bracket(x, &Vector::basis(self.dim, i))
                    .expect("dimension checked above")
            })
            .collect();
        LinearMap::from_images(self.dim, self.dim, rows)
    }

    /// All violations of the defining identity over basis triples.
    pub fn identity_violations(&self) -> Vec<IdentityViolation> {
        let mut out = Vec::new();
        self.scan_identity(|v| {
            out.push(v);
            true
        });
        out
    }

    /// Cached check of the defining identity (early exit on first failure).
    pub fn satisfies_identity(&self) -> bool {
        *self.identity_ok.get_or_init(|| {
            let mut ok = true;
            self.scan_identity(|_| {
                ok = false;
                false
            });
            ok
        })
    }

    pub fn ensure_identity(&self) -> Result<()> {
        if self.satisfies_identity() {
            Ok(())
        } else {
            let first = self.identity_violations().into_iter().next().expect("violation exists");
            Err(Error::PreconditionFailed(format!(
                "algebra '{}': {}",
                self.name,
                self.describe_violation(&first)
            )))
        }
    }

    fn scan_identity(&self, mut on_violation: impl FnMut(IdentityViolation) -> bool) {
        let n = self.dim;
        for i in 0..n {
            let ei = Vector::basis(n, i);
            for j in 0..n {
                for k in 0..n {
                    let lhs = self
                        .bracket(&ei, self.product(j, k))
                        .expect("table vectors have the right length");
                    let rhs = self
                        .bracket(self.product(i, j), &Vector::basis(n, k))
                        .expect("table vectors have the right length")
                        .sub(
                            &self
                                .bracket(self.product(i, k), &Vector::basis(n, j))
                                .expect("table vectors have the right length"),
                        );
                    if lhs != rhs {
                        if !on_violation(IdentityViolation { i, j, k, lhs, rhs }) {
                            return;
                        }
                    }
                }
            }
        }
    }

    /// Human-readable account of a violation using basis names.
    pub fn describe_violation(&self, v: &IdentityViolation) -> String {
        let (a, b, c) = (
            &self.basis_names[v.i],
            &self.basis_names[v.j],
            &self.basis_names[v.k],
        );
        format!(
            "identity fails at ({a}, {b}, {c}): [{a},[{b},{c}]] = {} but [[{a},{b}],{c}] - [[{a},{c}],{b}] = {}",
            self.render(&v.lhs),
            self.render(&v.rhs)
        )
    }

    /// Render a vector as a combination of named basis elements.
    pub fn render(&self, v: &Vector) -> String {
        render_combination(v, &self.basis_names)
    }

    /// True when the product is antisymmetric on basis pairs.
    pub fn is_antisymmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..=i {
                if !self.product(i, j).add(self.product(j, i)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.products.iter().all(Vector::is_zero)
    }

    /// Span of all products [u, v] with u in U, v in V.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for a in u.basis_rows() {
            for b in v.basis_rows() {
                rows.push(self.bracket(&a, &b).expect("subspace rows have the right length"));
            }
        }
        Subspace::from_rows(self.dim, rows)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        self.subspace_product(u, u).is_contained_in(u)
    }

    /// Two-sided ideal test.
    pub fn is_ideal(&self, u: &Subspace) -> bool {
        let full = self.full_space();
        self.subspace_product(u, &full).is_contained_in(u)
            && self.subspace_product(&full, u).is_contained_in(u)
    }

    /// Smallest two-sided ideal containing U.
    pub fn ideal_closure(&self, u: &Subspace) -> Subspace {
        let full = self.full_space();
        let mut cur = u.clone();
        loop {
            let grown = cur
                .sum(&self.subspace_product(&cur, &full))
                .sum(&self.subspace_product(&full, &cur));
            if grown.dim() == cur.dim() {
                return cur;
            }
            cur = grown;
        }
    }

    /// Structure constants of a product-closed subspace, in the subspace's
    /// canonical basis coordinates.
    pub fn structure_on(&self, u: &Subspace, name: impl Into<String>) -> Result<AlgebraTable> {
        let rows = u.basis_rows();
        let m = rows.len();
        let mut products = Vec::with_capacity(m * m);
        for a in &rows {
            for b in &rows {
                let p = self.bracket(a, b)?;
                let coords = u.coordinates(&p).ok_or_else(|| {
                    Error::PreconditionFailed(
                        "subspace is not closed under the product".into(),
                    )
                })?;
                products.push(coords);
            }
        }
        let names = u
            .pivots()
            .iter()
            .map(|&p| self.basis_names[p].clone())
            .collect();
        Ok(AlgebraTable::new(name, names, products))
    }

    /// Gram matrix of the trace form (x, y) -> tr(R_x R_y) on a
    /// product-closed subspace, in that subspace's coordinates.
    pub fn killing_gram(&self, u: &Subspace) -> Result<Matrix> {
        let table = self.structure_on(u, "killing_scratch")?;
        let m = table.dim();
        let ad: Vec<Matrix> = (0..m)
            .map(|a| table.right_mult(&Vector::basis(m, a)).matrix().clone())
            .collect();
        let mut gram = Matrix::zero(m, m);
        for a in 0..m {
            for b in 0..=a {
                let t = ad[a].mul(&ad[b]).trace();
                gram.set(a, b, t.clone());
                gram.set(b, a, t);
            }
        }
        Ok(gram)
    }

    /// Quotient by a two-sided ideal. The quotient basis consists of the
    /// standard basis vectors away from the ideal's pivot coordinates.
    pub fn quotient(&self, u: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(u) {
            return Err(Error::NotAnIdeal);
        }
        let comp: Vec<usize> = (0..self.dim).filter(|i| !u.pivots().contains(i)).collect();
        let m = comp.len();
        // Projection: reduce modulo the ideal, read off complement coords.
        let proj_rows: Vec<Vector> = (0..self.dim)
            .map(|i| {
                let reduced = u.reduce(&Vector::basis(self.dim, i));
                Vector::new(comp.iter().map(|&c| reduced.get(c).clone()).collect())
            })
            .collect();
        let projection = LinearMap::from_images(self.dim, m, proj_rows);
        let section_rows: Vec<Vector> = comp.iter().map(|&c| Vector::basis(self.dim, c)).collect();
        let section = LinearMap::from_images(m, self.dim, section_rows);

        let names: Vec<String> = comp.iter().map(|&c| self.basis_names[c].clone()).collect();
        let mut products = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let p = self
                    .bracket(&Vector::basis(self.dim, comp[a]), &Vector::basis(self.dim, comp[b]))
                    .expect("dimensions match");
                products.push(projection.apply(&p));
            }
        }
        let table = AlgebraTable::new(format!("{}_quo", self.name), names, products);
        Ok(Quotient { table, projection, section })
    }

    /// Structure constants relative to a new basis, given as the rows of an
    /// invertible matrix in current coordinates.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<AlgebraTable> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.rows() });
        }
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::PreconditionFailed("basis change matrix is singular".into()))?;
        let mut products = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.bracket(&p.row(i), &p.row(j)).expect("dimensions match");
                products.push(prod.mul_matrix(&pinv));
            }
        }
        Ok(AlgebraTable::new(
            format!("{}_rebased", self.name),
            (0..self.dim).map(|i| format!("b{}", i + 1)).collect(),
            products,
        ))
    }

    /// Whether the invertible map preserves every basis product.
    pub fn is_automorphism(&self, phi: &LinearMap) -> bool {
        if phi.source_dim() != self.dim || phi.target_dim() != self.dim || !phi.is_invertible() {
            return false;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = phi.apply(self.product(i, j));
                let rhs = self
                    .bracket(
                        &phi.apply(&Vector::basis(self.dim, i)),
                        &phi.apply(&Vector::basis(self.dim, j)),
                    )
                    .expect("dimensions match");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Render a coordinate vector as a signed combination of named elements.
pub fn render_combination(v: &Vector, names: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in v.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (sign, abs) = if c < &Scalar::zero() {
            ("-", -c.clone())
        } else {
            ("+", c.clone())
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        if abs != Scalar::one() {
            out.push_str(&render_scalar(&abs));
            out.push('*');
        }
        out.push_str(&names[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
