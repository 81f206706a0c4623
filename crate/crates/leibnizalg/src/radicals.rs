//! Distinguished ideals: the squares ideal, the solvable radical, and the
//! nilradical, together with the descending series used to certify them.

use crate::algebra::{AlgebraTable, Quotient};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::subspace::Subspace;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// U, [U,U], [[U,U],[U,U]], ...
    Derived,
    /// U, [U,U], [[U,U],U], ...
    LowerCentral,
}

/// A descending series. `terms` are strictly decreasing; `stable` records
/// that one more step was computed and reproduced the last stored term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stable: bool,
}

impl SeriesReport {
    /// The stable tail of the series.
    pub fn limit(&self) -> &Subspace {
        self.terms.last().expect("series has at least the starting term")
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn reaches_zero(&self) -> bool {
        self.limit().is_zero()
    }
}

/// Compute the derived or lower central series of a subalgebra.
pub fn series(table: &AlgebraTable, start: &Subspace, kind: SeriesKind) -> Result<SeriesReport> {
    if !table.is_subalgebra(start) {
        return Err(Error::PreconditionFailed(
            "series requires a subalgebra as the starting term".into(),
        ));
    }
    let mut terms = vec![start.clone()];
    let stable = loop {
        let cur = terms.last().unwrap();
        let next = match kind {
            SeriesKind::Derived => table.subspace_product(cur, cur),
            SeriesKind::LowerCentral => table.subspace_product(cur, start),
        };
        if &next == cur {
            break true;
        }
        if next.dim() >= cur.dim() {
            // Cannot happen for a subalgebra; guard against silent loops.
            return Err(Error::PostconditionFailed(
                "series term failed to decrease".into(),
            ));
        }
        terms.push(next);
    };
    Ok(SeriesReport { kind, terms, stable })
}

pub fn is_solvable(table: &AlgebraTable, u: &Subspace) -> Result<bool> {
    Ok(series(table, u, SeriesKind::Derived)?.reaches_zero())
}

pub fn is_nilpotent(table: &AlgebraTable, u: &Subspace) -> Result<bool> {
    Ok(series(table, u, SeriesKind::LowerCentral)?.reaches_zero())
}

/// The ideal spanned by all squares [x, x], equivalently by the
/// symmetrized basis products [e_i, e_j] + [e_j, e_i]. Left products into
/// it vanish identically; those facts are re-checked on every call.
pub fn squares_ideal(table: &AlgebraTable) -> Result<Subspace> {
    table.ensure_identity()?;
    let n = table.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..=i {
            rows.push(table.product(i, j).add(table.product(j, i)));
        }
    }
    let ideal = Subspace::from_rows(n, rows);
    let full = table.full_space();
    if !table.is_ideal(&ideal) {
        return Err(Error::PostconditionFailed("squares span is not an ideal".into()));
    }
    if !table.subspace_product(&full, &ideal).is_zero() {
        return Err(Error::PostconditionFailed(
            "left products into the squares ideal do not vanish".into(),
        ));
    }
    Ok(ideal)
}

/// Quotient by the squares ideal: the largest antisymmetric (Lie) quotient.
pub fn liezation(table: &AlgebraTable) -> Result<Quotient> {
    let i = squares_ideal(table)?;
    let q = table.quotient(&i)?;
    let q = Quotient {
        table: q.table.with_name(format!("{}_lie", table.name())),
        projection: q.projection,
        section: q.section,
    };
    if !q.table.is_antisymmetric() {
        return Err(Error::PostconditionFailed(
            "quotient by the squares ideal is not antisymmetric".into(),
        ));
    }
    q.table.ensure_identity().map_err(|_| {
        Error::PostconditionFailed("quotient by the squares ideal fails the identity".into())
    })?;
    Ok(q)
}

/// Largest solvable ideal.
///
/// Computed on the Lie quotient via the trace-form criterion: a class is in
/// the radical exactly when it is trace-orthogonal to the derived algebra.
/// The preimage in the original algebra is returned.
pub fn solvable_radical(table: &AlgebraTable) -> Result<Subspace> {
    let q = liezation(table)?;
    let lie = &q.table;
    let m = lie.dim();
    let derived = lie.subspace_product(&lie.full_space(), &lie.full_space());
    let ad: Vec<Matrix> = (0..m)
        .map(|a| lie.right_mult(&Vector::basis(m, a)).matrix().clone())
        .collect();
    let derived_ad: Vec<Matrix> = derived
        .basis_rows()
        .iter()
        .map(|d| lie.right_mult(d).matrix().clone())
        .collect();
    // One equation per derived-basis element: tr(ad x . ad d) = 0.
    let mut sys = Matrix::zero(derived_ad.len(), m);
    for (t, dm) in derived_ad.iter().enumerate() {
        for a in 0..m {
            sys.set(t, a, ad[a].mul(dm).trace());
        }
    }
    let rad_lie = Subspace::from_rows(m, sys.null_space());

    // Pull back and add the squares ideal.
    let i = squares_ideal(table)?;
    let mut rows: Vec<Vector> = rad_lie
        .basis_rows()
        .iter()
        .map(|v| q.section.apply(v))
        .collect();
    rows.extend(i.basis_rows());
    let r = Subspace::from_rows(table.dim(), rows);

    if !table.is_ideal(&r) {
        return Err(Error::PostconditionFailed("solvable radical is not an ideal".into()));
    }
    if !is_solvable(table, &r)? {
        return Err(Error::PostconditionFailed("solvable radical is not solvable".into()));
    }
    // The quotient by the radical must carry a nondegenerate trace form.
    let lie_quot = lie.quotient(&rad_lie)?;
    let gram = lie_quot.table.killing_gram(&lie_quot.table.full_space())?;
    if gram.rank() != lie_quot.table.dim() {
        return Err(Error::PostconditionFailed(
            "quotient by the solvable radical is not semisimple".into(),
        ));
    }
    Ok(r)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NilradicalPath {
    /// Trace-form radical of the associative operator algebra.
    TraceRadical,
    /// Bounded fallback: intersection with a lower central series term.
    LowerCentralFallback(usize),
}

#[derive(Clone, Debug)]
pub struct NilradicalReport {
    pub space: Subspace,
    pub path: NilradicalPath,
}

/// Smallest spanning set of the associative algebra generated by the given
/// operators, as a canonical basis of matrices.
pub fn associative_closure(generators: &[Matrix]) -> Vec<Matrix> {
    if generators.is_empty() {
        return Vec::new();
    }
    let m = generators[0].rows();
    for g in generators {
        assert!(g.rows() == m && g.cols() == m, "generators must be square and equal-sized");
    }
    let mut span = Subspace::from_rows(m * m, generators.iter().map(Matrix::flatten).collect());
    loop {
        let current: Vec<Matrix> = span
            .basis_rows()
            .iter()
            .map(|v| flat_to_matrix(v, m))
            .collect();
        let mut rows: Vec<Vector> = span.basis_rows();
        for g in generators {
            for b in &current {
                rows.push(g.mul(b).flatten());
            }
        }
        let grown = Subspace::from_rows(m * m, rows);
        if grown.dim() == span.dim() {
            return current;
        }
        span = grown;
    }
}

fn flat_to_matrix(v: &Vector, m: usize) -> Matrix {
    let mut out = Matrix::zero(m, m);
    for i in 0..m {
        for j in 0..m {
            out.set(i, j, v.get(i * m + j).clone());
        }
    }
    out
}

/// Largest nilpotent ideal, with the computation path that produced it.
///
/// Restrict every right multiplication to the solvable radical R, close
/// them into an associative operator algebra A, and take the elements of R
/// whose operator lies in the trace-form radical of A (characteristic zero
/// makes that radical the nilpotent part). Postconditions are verified; if
/// they fail, terms of the lower central series of R are intersected in as
/// a bounded fallback, and the report says so.
pub fn nilradical_report(table: &AlgebraTable) -> Result<NilradicalReport> {
    let r = solvable_radical(table)?;
    let m = r.dim();
    let n = table.dim();

    // Right multiplications by R-basis elements, restricted to R.
    let t_ops: Vec<Matrix> = r
        .basis_rows()
        .iter()
        .map(|y| {
            table
                .right_mult(y)
                .restrict_endo(&r)
                .map(|f| f.matrix().clone())
        })
        .collect::<Result<_>>()?;

    let algebra_basis = associative_closure(&t_ops);
    let k = algebra_basis.len();

    // Trace-form radical of A: combinations orthogonal to every basis
    // element and to the identity.
    let rad_flat: Subspace = if k == 0 {
        Subspace::zero(m * m)
    } else {
        let mut sys = Matrix::zero(k + 1, k);
        for (row, b) in algebra_basis.iter().enumerate() {
            for (col, a) in algebra_basis.iter().enumerate() {
                sys.set(row, col, a.mul(b).trace());
            }
        }
        for (col, a) in algebra_basis.iter().enumerate() {
            sys.set(k, col, a.trace());
        }
        let coeff_vectors = sys.null_space();
        let rows = coeff_vectors
            .into_iter()
            .map(|c| {
                let mut acc = Matrix::zero(m, m);
                for (t, b) in algebra_basis.iter().enumerate() {
                    acc = acc.add(&b.scale(c.get(t)));
                }
                acc.flatten()
            })
            .collect();
        Subspace::from_rows(m * m, rows)
    };

    // x in N exactly when the operator of x (linear in the R-coordinates)
    // falls inside the radical span: the reduction residues are linear, so
    // this is one null-space computation.
    let residues: Vec<Vector> = t_ops.iter().map(|t| rad_flat.reduce(&t.flatten())).collect();
    let mut sys = Matrix::zero(m * m, m);
    for (a, res) in residues.iter().enumerate() {
        for c in 0..m * m {
            sys.set(c, a, res.get(c).clone());
        }
    }
    let coord_solutions = sys.null_space();
    let candidate = Subspace::from_rows(
        n,
        coord_solutions.iter().map(|c| r.embed(c)).collect(),
    );

    if nilradical_postconditions(table, &candidate, &r)? {
        return Ok(NilradicalReport { space: candidate, path: NilradicalPath::TraceRadical });
    }

    // Bounded fallback: cut down by lower central series terms of R.
    let lcs = series(table, &r, SeriesKind::LowerCentral)?;
    for (step, term) in lcs.terms.iter().enumerate() {
        let cut = candidate.intersect(term);
        if nilradical_postconditions(table, &cut, &r)? {
            return Ok(NilradicalReport {
                space: cut,
                path: NilradicalPath::LowerCentralFallback(step),
            });
        }
    }
    Err(Error::PostconditionFailed(
        "no nilradical candidate satisfied the postconditions".into(),
    ))
}

fn nilradical_postconditions(
    table: &AlgebraTable,
    candidate: &Subspace,
    r: &Subspace,
) -> Result<bool> {
    if !candidate.is_contained_in(r) {
        return Ok(false);
    }
    if !squares_ideal(table)?.is_contained_in(candidate) {
        return Ok(false);
    }
    if !table.is_ideal(candidate) {
        return Ok(false);
    }
    is_nilpotent(table, candidate)
}

pub fn nilradical(table: &AlgebraTable) -> Result<Subspace> {
    Ok(nilradical_report(table)?.space)
}
