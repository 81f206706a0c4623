//! Levi decompositions: a semisimple Lie subalgebra S complementing the
//! solvable radical, computed exactly and re-verified before being
//! returned.
//!
//! The computation runs in two stages. In the Lie quotient by the squares
//! ideal, a complement of the radical is corrected layer by layer down the
//! radical's derived series until it closes under the product (each layer
//! is a linear solve; solvability is the classical vanishing of the
//! relevant second cohomology for semisimple algebras in characteristic
//! zero). The resulting subalgebra is then lifted back through the squares
//! ideal with one more linear solve, using that left products into that
//! ideal vanish.

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::radicals::{liezation, nilradical, solvable_radical, squares_ideal, SeriesKind};
use crate::subspace::Subspace;
use num_traits::Zero;

/// A full decomposition: the Levi subalgebra and the distinguished ideals
/// it complements.
#[derive(Clone, Debug)]
pub struct LeviReport {
    pub s: Subspace,
    pub r: Subspace,
    pub n: Subspace,
    pub i: Subspace,
    pub killing_rank_on_s: usize,
}

/// Per-invariant diagnostics for a claimed Levi subalgebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeviCheck {
    /// Closed under the product.
    pub closed: bool,
    /// Antisymmetric internally (a Lie subalgebra); meaningful when closed.
    pub lie: bool,
    /// Rank of the trace form on S, when S is closed.
    pub killing_rank: Option<usize>,
    /// Nondegenerate trace form (semisimplicity); requires closed and lie.
    pub semisimple: bool,
    /// S intersects the solvable radical trivially and spans with it.
    pub complementary: bool,
}

impl LeviCheck {
    pub fn passed(&self) -> bool {
        self.closed && self.lie && self.semisimple && self.complementary
    }
}

/// Compute a Levi subalgebra and the accompanying ideals.
pub fn levi_subalgebra(table: &AlgebraTable) -> Result<LeviReport> {
    table.ensure_identity()?;
    let r = solvable_radical(table)?;
    let i = squares_ideal(table)?;
    let n = nilradical(table)?;

    let quot = liezation(table)?;
    let lie = &quot.table;
    let rad_lie = quot.projection.map_subspace(&r);
    let s_lie = lie_levi(lie, &rad_lie)?;
    let s = lift_through_squares(table, lie, &quot.section, &i, &s_lie)?;

    // Invariants, each checked on the returned subspace.
    if !table.is_subalgebra(&s) {
        return Err(Error::PostconditionFailed("Levi candidate is not closed".into()));
    }
    let on_s = table.structure_on(&s, "levi_scratch")?;
    if !on_s.is_antisymmetric() {
        return Err(Error::PostconditionFailed("Levi candidate is not a Lie subalgebra".into()));
    }
    let killing_rank_on_s = table.killing_gram(&s)?.rank();
    if killing_rank_on_s != s.dim() {
        return Err(Error::PostconditionFailed(
            "Levi candidate has a degenerate trace form".into(),
        ));
    }
    if !s.intersect(&r).is_zero() || s.sum(&r) != table.full_space() {
        return Err(Error::PostconditionFailed(
            "Levi candidate does not complement the radical".into(),
        ));
    }
    if table.subspace_product(&s, &s) != s {
        return Err(Error::PostconditionFailed("Levi candidate is not perfect".into()));
    }
    Ok(LeviReport { s, r, n, i, killing_rank_on_s })
}

/// Diagnostic re-check of a claimed Levi subalgebra.
pub fn verify_levi(table: &AlgebraTable, s: &Subspace) -> Result<LeviCheck> {
    table.ensure_identity()?;
    let closed = table.is_subalgebra(s);
    let (lie, killing_rank) = if closed {
        let on_s = table.structure_on(s, "check_scratch")?;
        let rank = table.killing_gram(s)?.rank();
        (on_s.is_antisymmetric(), Some(rank))
    } else {
        (false, None)
    };
    let semisimple = closed && lie && killing_rank == Some(s.dim());
    let r = solvable_radical(table)?;
    let complementary = s.intersect(&r).is_zero() && s.sum(&r) == table.full_space();
    Ok(LeviCheck { closed, lie, killing_rank, semisimple, complementary })
}

/// Levi subalgebra of a Lie algebra with the given radical: start from the
/// standard complement and correct it down the derived series.
fn lie_levi(lie: &AlgebraTable, rad: &Subspace) -> Result<Subspace> {
    let m = lie.dim();
    if rad.is_zero() {
        return Ok(lie.full_space());
    }
    // Complement positions and basis.
    let positions: Vec<usize> = (0..m).filter(|p| !rad.pivots().contains(p)).collect();
    let s = positions.len();
    if s == 0 {
        return Ok(Subspace::zero(m));
    }
    let c_basis: Vec<Vector> = positions.iter().map(|&p| Vector::basis(m, p)).collect();

    // Induced product on the complement: reduce the bracket modulo the
    // radical; the residue is supported on the complement positions.
    let product_c = |a: usize, b: usize| -> Vector {
        rad.reduce(
            &lie.bracket(&c_basis[a], &c_basis[b])
                .expect("dimensions match"),
        )
    };
    let coeffs_on_c = |v: &Vector| -> Vec<crate::scalar::Scalar> {
        positions.iter().map(|&p| v.get(p).clone()).collect()
    };

    // Current section images; corrected layer by layer.
    let mut sigma: Vec<Vector> = c_basis.clone();
    let derived = crate::radicals::series(lie, rad, SeriesKind::Derived)?;
    for layer in 0..derived.terms.len().saturating_sub(1) {
        let dj = &derived.terms[layer];
        let dnext = &derived.terms[layer + 1];
        let d_rows = dj.basis_rows();
        let unknowns = s * d_rows.len();
        let pairs: Vec<(usize, usize)> =
            (0..s).flat_map(|a| ((a + 1)..s).map(move |b| (a, b))).collect();
        let mut sys = Matrix::zero(pairs.len() * m, unknowns);
        let mut rhs = Vector::zero(pairs.len() * m);
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            let cab = product_c(a, b);
            let cab_coeffs = coeffs_on_c(&cab);
            // Defect of the current section on this pair.
            let sigma_cab = {
                let mut out = Vector::zero(m);
                for (k, c) in cab_coeffs.iter().enumerate() {
                    out.add_assign_scaled(&sigma[k], c);
                }
                out
            };
            let defect = lie
                .bracket(&sigma[a], &sigma[b])
                .expect("dimensions match")
                .sub(&sigma_cab);
            let reduced_defect = dnext.reduce(&defect);
            for c in 0..m {
                rhs.set(pi * m + c, -reduced_defect.get(c).clone());
            }
            for (col_a, col_t) in (0..s).flat_map(|x| (0..d_rows.len()).map(move |t| (x, t))) {
                let col = col_a * d_rows.len() + col_t;
                let mut contrib = Vector::zero(m);
                if col_a == a {
                    contrib = contrib.add(
                        &lie.bracket(&d_rows[col_t], &sigma[b]).expect("dimensions match"),
                    );
                }
                if col_a == b {
                    contrib = contrib.add(
                        &lie.bracket(&sigma[a], &d_rows[col_t]).expect("dimensions match"),
                    );
                }
                if !cab_coeffs[col_a].is_zero() {
                    contrib =
                        contrib.sub(&d_rows[col_t].scale(&cab_coeffs[col_a]));
                }
                let reduced = dnext.reduce(&contrib);
                for c in 0..m {
                    sys.set(pi * m + c, col, reduced.get(c).clone());
                }
            }
        }
        let phi = sys.solve(&rhs).ok_or_else(|| {
            Error::PostconditionFailed("Levi correction system is inconsistent".into())
        })?;
        for a in 0..s {
            for (t, d) in d_rows.iter().enumerate() {
                let c = phi.get(a * d_rows.len() + t);
                if !c.is_zero() {
                    sigma[a].add_assign_scaled(d, c);
                }
            }
        }
    }
    Ok(Subspace::from_rows(m, sigma))
}

/// Lift a Levi subalgebra of the Lie quotient back into the original
/// algebra by correcting a linear section with values in the squares
/// ideal.
fn lift_through_squares(
    table: &AlgebraTable,
    lie: &AlgebraTable,
    section: &crate::linmap::LinearMap,
    i: &Subspace,
    s_lie: &Subspace,
) -> Result<Subspace> {
    let s = s_lie.dim();
    if s == 0 {
        return Ok(Subspace::zero(table.dim()));
    }
    let n = table.dim();
    let sbar = s_lie.basis_rows();
    let tau: Vec<Vector> = sbar.iter().map(|v| section.apply(v)).collect();
    let i_rows = i.basis_rows();
    let unknowns = s * i_rows.len();

    // Products inside the quotient subalgebra, in its basis coordinates.
    let mut prod_coords = Vec::with_capacity(s * s);
    for a in 0..s {
        for b in 0..s {
            let p = lie.bracket(&sbar[a], &sbar[b]).expect("dimensions match");
            let coords = s_lie.coordinates(&p).ok_or_else(|| {
                Error::PostconditionFailed("quotient Levi candidate is not closed".into())
            })?;
            prod_coords.push(coords);
        }
    }

    // One block of equations per ordered pair (a, b):
    //   [mu(a), tau(b)] - mu([a,b]) = tau([a,b]) - [tau(a), tau(b)].
    let mut sys = Matrix::zero(s * s * n, unknowns);
    let mut rhs = Vector::zero(s * s * n);
    for a in 0..s {
        for b in 0..s {
            let block = (a * s + b) * n;
            let coords = &prod_coords[a * s + b];
            let mut tau_of_prod = Vector::zero(n);
            for (k, c) in coords.coords().iter().enumerate() {
                tau_of_prod.add_assign_scaled(&tau[k], c);
            }
            let defect = tau_of_prod.sub(&table.bracket(&tau[a], &tau[b]).expect("dimensions match"));
            debug_assert!(i.contains(&defect), "lift defect must lie in the squares ideal");
            for c in 0..n {
                rhs.set(block + c, defect.get(c).clone());
            }
            for col_a in 0..s {
                for (t, it) in i_rows.iter().enumerate() {
                    let col = col_a * i_rows.len() + t;
                    let mut contrib = Vector::zero(n);
                    if col_a == a {
                        contrib = contrib
                            .add(&table.bracket(it, &tau[b]).expect("dimensions match"));
                    }
                    let coeff = coords.get(col_a);
                    if !coeff.is_zero() {
                        contrib = contrib.sub(&it.scale(coeff));
                    }
                    for c in 0..n {
                        if !contrib.get(c).is_zero() {
                            sys.set(block + c, col, contrib.get(c).clone());
                        }
                    }
                }
            }
        }
    }
    let mu = sys.solve(&rhs).ok_or_else(|| {
        Error::PostconditionFailed("Levi lift system is inconsistent".into())
    })?;
    let rows: Vec<Vector> = (0..s)
        .map(|a| {
            let mut v = tau[a].clone();
            for (t, it) in i_rows.iter().enumerate() {
                let c = mu.get(a * i_rows.len() + t);
                if !c.is_zero() {
                    v.add_assign_scaled(it, c);
                }
            }
            v
        })
        .collect();
    Ok(Subspace::from_rows(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::subspace::coordinate_subspace;

    #[test]
    fn nine_dim_levi_is_the_leading_block() {
        let t = fixtures::nine_dim_nonconjugate();
        let rep = levi_subalgebra(&t).unwrap();
        assert_eq!(rep.s, coordinate_subspace(9, &[0, 1, 2]));
        assert_eq!(rep.r, coordinate_subspace(9, &[3, 4, 5, 6, 7, 8]));
        assert_eq!(rep.n, coordinate_subspace(9, &[3, 4, 6, 7, 8]));
        assert_eq!(rep.i, coordinate_subspace(9, &[6, 7, 8]));
        assert_eq!(rep.killing_rank_on_s, 3);
        assert!(verify_levi(&t, &rep.s).unwrap().passed());
    }

    #[test]
    fn eight_dim_levi_is_the_leading_block() {
        let t = fixtures::l201();
        let rep = levi_subalgebra(&t).unwrap();
        assert_eq!(rep.s, coordinate_subspace(8, &[0, 1, 2]));
        assert_eq!(rep.n, coordinate_subspace(8, &[3, 4, 5, 6]));
        assert!(verify_levi(&t, &rep.s).unwrap().passed());
    }

    #[test]
    fn degenerate_cases() {
        // Semisimple input: S is everything.
        let s = fixtures::sl2();
        let rep = levi_subalgebra(&s).unwrap();
        assert_eq!(rep.s, s.full_space());
        assert!(rep.r.is_zero());
        // Solvable input: S is zero.
        let solv = fixtures::solvable2();
        let rep = levi_subalgebra(&solv).unwrap();
        assert!(rep.s.is_zero());
        assert_eq!(rep.r.dim(), 2);
        // Two simple summands.
        let ss = fixtures::direct_sum(&fixtures::sl2(), &fixtures::sl2(), "sl2_plus_sl2");
        let rep = levi_subalgebra(&ss).unwrap();
        assert_eq!(rep.s.dim(), 6);
    }

    #[test]
    fn verify_levi_diagnoses_failures() {
        let t = fixtures::nine_dim_nonconjugate();
        // <y4, y5, y6> is closed and Lie but solvable.
        let solv = coordinate_subspace(9, &[3, 4, 5]);
        let check = verify_levi(&t, &solv).unwrap();
        assert!(check.closed && check.lie);
        assert!(!check.semisimple);
        assert!(!check.passed());
        // The zero subspace fails complementarity when R is proper.
        let zero = Subspace::zero(9);
        let check = verify_levi(&t, &zero).unwrap();
        assert!(!check.complementary);
        // A non-closed subspace: [e2, e3] = e1 escapes the span.
        let skew = coordinate_subspace(9, &[1, 2]);
        let check = verify_levi(&t, &skew).unwrap();
        assert!(!check.closed);
        assert_eq!(check.killing_rank, None);
    }

    #[test]
    fn levi_survives_a_basis_change() {
        // Mix the Levi block with radical directions so the standard
        // complement is no longer a subalgebra; the correction solves must
        // then do real work.
        let t = fixtures::l201();
        let mut p = Matrix::identity(8);
        // e' = e + x0 + y1, f' = f + x2, h' = h + 2 x1 + y2.
        p.set(0, 3, crate::scalar::int(1));
        p.set(0, 6, crate::scalar::int(1));
        p.set(1, 5, crate::scalar::int(1));
        p.set(2, 4, crate::scalar::int(2));
        p.set(2, 7, crate::scalar::int(1));
        let moved = t.change_of_basis(&p).unwrap();
        assert!(moved.satisfies_identity());
        let rep = levi_subalgebra(&moved).unwrap();
        assert!(verify_levi(&moved, &rep.s).unwrap().passed());
        assert_eq!(rep.s.dim(), 3);
        assert_eq!(rep.r.dim(), 5);
    }

    #[test]
    fn levi_of_hemisemidirect_fixtures() {
        for t in [fixtures::hemi_sl2_adjoint(), fixtures::hemi_sl2_double()] {
            let rep = levi_subalgebra(&t).unwrap();
            assert_eq!(rep.s, coordinate_subspace(t.dim(), &[0, 1, 2]));
            assert_eq!(rep.i.dim(), t.dim() - 3);
            assert!(verify_levi(&t, &rep.s).unwrap().passed());
        }
    }
}
