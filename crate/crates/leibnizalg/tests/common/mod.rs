//! Shared helpers for the integration suites: precomputed fixture data,
//! random-input property checks, and generators for hemisemidirect tables.
//! Each check returns Err with a description instead of panicking so both
//! the property harness and the acceptance gate can drive it.

#![allow(dead_code)]

pub mod oracle;

use std::sync::OnceLock;

use leibnizalg::algebra::AlgebraTable;
use leibnizalg::conjugacy::{e_subspace, s_theta, Automorphism};
use leibnizalg::fixtures;
use leibnizalg::levi::{levi_subalgebra, verify_levi, LeviReport};
use leibnizalg::linmap::LinearMap;
use leibnizalg::matrix::{Matrix, Vector};
use leibnizalg::radicals::{nilradical, solvable_radical, squares_ideal};
use leibnizalg::scalar::{frac, Scalar};
use leibnizalg::smodules::{hom_space, HomBasis};
use leibnizalg::subspace::Subspace;

pub struct CaseData {
    pub table: AlgebraTable,
    pub rep: LeviReport,
    pub e: Subspace,
    pub homs: HomBasis,
}

pub fn corpus() -> &'static Vec<CaseData> {
    static DATA: OnceLock<Vec<CaseData>> = OnceLock::new();
    DATA.get_or_init(|| {
        fixtures::embedded_corpus()
            .into_iter()
            .map(|(_, table)| {
                let rep = levi_subalgebra(&table).expect("fixture has a Levi decomposition");
                let e = e_subspace(&table, &rep.s).expect("E computes");
                let homs = hom_space(&table, &rep.s, &rep.i).expect("Hom space computes");
                CaseData { table, rep, e, homs }
            })
            .collect()
    })
}

/// A combination of the rows of `basis` using the given coefficients,
/// padded with zeros.
pub fn combine(basis: &Subspace, coeffs: &[Scalar]) -> Vector {
    let mut out = Vector::zero(basis.ambient());
    for (k, row) in basis.basis_rows().iter().enumerate() {
        if let Some(c) = coeffs.get(k) {
            out.add_assign_scaled(row, c);
        }
    }
    out
}

pub fn inner_automorphism(case: &CaseData, coeff_blocks: &[Vec<Scalar>]) -> Automorphism {
    let mut auto = Automorphism::right_exp(&case.table, &case.rep, &Vector::zero(case.table.dim()))
        .expect("zero generates the identity");
    for block in coeff_blocks {
        let a = combine(&case.rep.n, block);
        let step = Automorphism::right_exp(&case.table, &case.rep, &a)
            .expect("nilradical elements exponentiate");
        auto = auto.compose(&case.table, &step).expect("composition stays an automorphism");
    }
    auto
}

/// I, N, and R must be carried onto themselves by the automorphism.
pub fn ideals_invariant_under(
    case: &CaseData,
    auto: &Automorphism,
) -> Result<(), String> {
    for (label, u) in [("I", &case.rep.i), ("N", &case.rep.n), ("R", &case.rep.r)] {
        if auto.apply_subspace(u) != *u {
            return Err(format!("{label} moves under an inner automorphism on '{}'", case.table.name()));
        }
    }
    Ok(())
}

/// Every power of right multiplication by b in E restricts on S to a map
/// inside the Hom space.
pub fn e_powers_stay_in_hom(case: &CaseData, b: &Vector) -> Result<(), String> {
    let ambient = case.table.right_mult(b);
    let mut power = ambient.matrix().clone();
    let mut n = 1usize;
    while !power.is_zero() {
        if n > case.table.dim() {
            return Err(format!("R_b is not nilpotent on '{}'", case.table.name()));
        }
        let mut rows = Vec::with_capacity(case.rep.s.dim());
        for s in case.rep.s.basis_rows() {
            let image = s.mul_matrix(&power);
            match case.rep.i.coordinates(&image) {
                Some(c) => rows.push(c),
                None => {
                    return Err(format!(
                        "R_b^{n} maps S outside I on '{}'",
                        case.table.name()
                    ))
                }
            }
        }
        let restricted = LinearMap::new(case.rep.s.dim(), case.rep.i.dim(), Matrix::from_rows(rows));
        if !case.homs.contains(&restricted) {
            return Err(format!(
                "R_b^{n} restricted to S leaves the Hom space on '{}'",
                case.table.name()
            ));
        }
        power = power.mul(ambient.matrix());
        n += 1;
    }
    Ok(())
}

/// Pad or truncate coefficients to the Hom-space dimension and build the
/// corresponding map.
pub fn hom_combination(case: &CaseData, coeffs: &[Scalar]) -> LinearMap {
    let mut c = coeffs.to_vec();
    c.resize(case.homs.dim(), frac(0, 1));
    case.homs.linear_combination(&Vector::new(c))
}

/// For theta in the Hom span the twisted complement multiplies like S:
/// [x + theta(x), y + theta(y)] = [x,y] + theta([x,y]).
pub fn twisted_bracket_identity(case: &CaseData, theta: &LinearMap) -> Result<(), String> {
    let twisted = s_theta(&case.table, &case.rep.s, theta)
        .map_err(|e| format!("twist fails to verify on '{}': {e}", case.table.name()))?;
    if twisted.dim() != case.rep.s.dim() {
        return Err(format!("twisted complement drops rank on '{}'", case.table.name()));
    }
    let twist_row = |p: usize| -> Vector {
        let mut out = case.rep.s.basis().row(p);
        out.add_assign_scaled(&case.rep.i.embed(&theta.matrix().row(p)), &frac(1, 1));
        out
    };
    for p in 0..case.rep.s.dim() {
        for q in 0..case.rep.s.dim() {
            let lhs = case
                .table
                .bracket(&twist_row(p), &twist_row(q))
                .expect("dimensions match");
            let plain = case
                .table
                .bracket(&case.rep.s.basis().row(p), &case.rep.s.basis().row(q))
                .expect("dimensions match");
            let plain_coords = case.rep.s.coordinates(&plain).expect("S is closed");
            let mut rhs = plain.clone();
            rhs.add_assign_scaled(&case.rep.i.embed(&theta.apply(&plain_coords)), &frac(1, 1));
            if lhs != rhs {
                return Err(format!(
                    "bracket identity fails at ({p},{q}) on '{}'",
                    case.table.name()
                ));
            }
        }
    }
    Ok(())
}

/// Images of twisted complements under inner automorphisms pass the full
/// Levi verification.
pub fn inner_image_of_twist_is_levi(
    case: &CaseData,
    tau: &LinearMap,
    auto: &Automorphism,
) -> Result<(), String> {
    let twisted = s_theta(&case.table, &case.rep.s, tau)
        .map_err(|e| format!("twist fails to verify on '{}': {e}", case.table.name()))?;
    let image = auto.apply_subspace(&twisted);
    let check = verify_levi(&case.table, &image)
        .map_err(|e| format!("verification errors on '{}': {e}", case.table.name()))?;
    if check.passed() {
        Ok(())
    } else {
        Err(format!(
            "inner image of a twist fails Levi verification on '{}'",
            case.table.name()
        ))
    }
}

/// Block-diagonal action of sl2 on a direct sum of irreducible modules,
/// conjugated by a unimodular change of basis built from row operations.
pub fn random_hemisemidirect(irreps: &[usize], ops: &[(usize, usize, i64)]) -> AlgebraTable {
    let blocks: Vec<Vec<Matrix>> = irreps.iter().map(|&n| fixtures::sl2_irrep_action(n)).collect();
    let m: usize = irreps.iter().map(|&n| n + 1).sum();
    let mut action = vec![Matrix::zero(m, m); 3];
    let mut offset = 0;
    for b in &blocks {
        let size = b[0].rows();
        for (a, block) in b.iter().enumerate() {
            for r in 0..size {
                for c in 0..size {
                    action[a].set(offset + r, offset + c, block.get(r, c).clone());
                }
            }
        }
        offset += size;
    }

    let mut p = Matrix::identity(m);
    for &(i, j, c) in ops {
        let (i, j) = (i % m, j % m);
        if i == j || c == 0 {
            continue;
        }
        // Row operation keeps the determinant, so p stays unimodular.
        let row_j = p.row(j);
        let mut row_i = p.row(i);
        row_i.add_assign_scaled(&row_j, &frac(c, 1));
        for k in 0..m {
            p.set(i, k, row_i.get(k).clone());
        }
    }
    let p_inv = p.inverse().expect("unimodular matrix inverts");
    let action: Vec<Matrix> = action.iter().map(|a| p.mul(a).mul(&p_inv)).collect();

    let names: Vec<String> = (0..m).map(|k| format!("m{k}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    fixtures::hemisemidirect(&fixtures::sl2(), &action, &name_refs, "random_hemi")
        .expect("conjugated action is still a module")
}

/// The chain I inside N inside R plus left annihilation of I.
pub fn chain_holds(table: &AlgebraTable) -> Result<(), String> {
    let i = squares_ideal(table).map_err(|e| e.to_string())?;
    let n = nilradical(table).map_err(|e| e.to_string())?;
    let r = solvable_radical(table).map_err(|e| e.to_string())?;
    if !i.is_contained_in(&n) {
        return Err(format!("I escapes N on '{}'", table.name()));
    }
    if !n.is_contained_in(&r) {
        return Err(format!("N escapes R on '{}'", table.name()));
    }
    if !table.subspace_product(&table.full_space(), &i).is_zero() {
        return Err(format!("[L, I] is nonzero on '{}'", table.name()));
    }
    Ok(())
}
