//! Built-in multiplication tables: the worked examples every higher-level
//! routine is validated against, plus generators for derived families.

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::int;

/// Build a table from named sparse entries; each product is a signed
/// integer combination of basis names. Panics on unknown names, so this is
/// for statically known tables only.
pub fn table(name: &str, names: &[&str], entries: &[(&str, &str, &[(i64, &str)])]) -> AlgebraTable {
    let dim = names.len();
    let index = |n: &str| -> usize {
        names
            .iter()
            .position(|&m| m == n)
            .unwrap_or_else(|| panic!("unknown basis name '{n}' in table '{name}'"))
    };
    let mut sparse = Vec::with_capacity(entries.len());
    for (l, r, combo) in entries {
        let mut v = Vector::zero(dim);
        for (c, n) in *combo {
            let i = index(n);
            v.set(i, v.get(i) + int(*c));
        }
        sparse.push((index(l), index(r), v));
    }
    AlgebraTable::from_entries(name, names.iter().map(|s| s.to_string()).collect(), &sparse)
        .expect("static table entries are well-formed")
}

/// The split simple three-dimensional Lie algebra: [e,f] = h, [h,e] = 2e,
/// [h,f] = -2f.
pub fn sl2() -> AlgebraTable {
    table(
        "sl2",
        &["e", "f", "h"],
        &[
            ("e", "f", &[(1, "h")]),
            ("f", "e", &[(-1, "h")]),
            ("h", "e", &[(2, "e")]),
            ("e", "h", &[(-2, "e")]),
            ("h", "f", &[(-2, "f")]),
            ("f", "h", &[(2, "f")]),
        ],
    )
}

/// Nine-dimensional algebra carrying two Levi subalgebras that no
/// automorphism can identify: a Lie part (simple + solvable) extended by a
/// three-dimensional square ideal on which only one side of the product
/// evaluates.
pub fn nine_dim_nonconjugate() -> AlgebraTable {
    table(
        "example_3_9",
        &["e1", "e2", "e3", "y4", "y5", "y6", "x7", "x8", "x9"],
        &[
            ("e1", "e2", &[(2, "e2")]),
            ("e2", "e1", &[(-2, "e2")]),
            ("e1", "e3", &[(-2, "e3")]),
            ("e3", "e1", &[(2, "e3")]),
            ("e2", "e3", &[(1, "e1")]),
            ("e3", "e2", &[(-1, "e1")]),
            ("e1", "y4", &[(1, "y4")]),
            ("y4", "e1", &[(-1, "y4")]),
            ("e1", "y5", &[(-1, "y5")]),
            ("y5", "e1", &[(1, "y5")]),
            ("e2", "y5", &[(1, "y4")]),
            ("y5", "e2", &[(-1, "y4")]),
            ("e3", "y4", &[(1, "y5")]),
            ("y4", "e3", &[(-1, "y5")]),
            ("y4", "y6", &[(1, "y4")]),
            ("y6", "y4", &[(-1, "y4")]),
            ("y5", "y6", &[(1, "y5")]),
            ("y6", "y5", &[(-1, "y5")]),
            ("x7", "e1", &[(-2, "x7")]),
            ("x7", "e3", &[(1, "x8")]),
            ("x8", "e2", &[(2, "x7")]),
            ("x8", "e3", &[(-2, "x9")]),
            ("x9", "e1", &[(2, "x9")]),
            ("x9", "e2", &[(-1, "x8")]),
            ("x7", "y6", &[(1, "x7")]),
            ("x8", "y6", &[(1, "x8")]),
            ("x9", "y6", &[(1, "x9")]),
        ],
    )
}

/// Eight-dimensional algebra whose Levi subalgebras are all conjugate by an
/// inner automorphism: sl2 acting on a three-dimensional square ideal, with
/// an extra solvable direction that reaches the ideal.
pub fn l201() -> AlgebraTable {
    table(
        "L201",
        &["e", "f", "h", "x0", "x1", "x2", "y1", "y2"],
        &[
            ("e", "h", &[(2, "e")]),
            ("h", "e", &[(-2, "e")]),
            ("h", "f", &[(2, "f")]),
            ("f", "h", &[(-2, "f")]),
            ("e", "f", &[(1, "h")]),
            ("f", "e", &[(-1, "h")]),
            ("x1", "e", &[(-2, "x0")]),
            ("x2", "e", &[(-2, "x1")]),
            ("x0", "f", &[(1, "x1")]),
            ("x1", "f", &[(1, "x2")]),
            ("x0", "h", &[(2, "x0")]),
            ("x2", "h", &[(-2, "x2")]),
            ("e", "y1", &[(2, "x0")]),
            ("f", "y1", &[(1, "x2")]),
            ("h", "y1", &[(2, "x1")]),
            ("y1", "y2", &[(1, "y1")]),
            ("y2", "y1", &[(-1, "y1")]),
            ("x0", "y2", &[(1, "x0")]),
            ("x1", "y2", &[(1, "x1")]),
            ("x2", "y2", &[(1, "x2")]),
        ],
    )
}

/// Extend a Lie algebra by a right module with zero left action:
/// on S + V the product is [s+v, s'+v'] = [s,s'] + v.s'.
///
/// `action[a]` is the matrix (row convention) of v -> v.s_a on V. The
/// required compatibility is M([a,b]) = M(a)M(b) - M(b)M(a); the built
/// table always satisfies the defining identity when it holds.
pub fn hemisemidirect(
    s: &AlgebraTable,
    action: &[Matrix],
    module_names: &[&str],
    name: &str,
) -> Result<AlgebraTable> {
    s.ensure_identity()?;
    if !s.is_antisymmetric() {
        return Err(Error::PreconditionFailed(format!(
            "hemisemidirect base '{}' must be a Lie algebra",
            s.name()
        )));
    }
    let sd = s.dim();
    let vd = module_names.len();
    if action.len() != sd {
        return Err(Error::DimensionMismatch { expected: sd, found: action.len() });
    }
    for m in action {
        if m.rows() != vd || m.cols() != vd {
            return Err(Error::DimensionMismatch { expected: vd, found: m.rows() });
        }
    }
    // Compatibility of the action with the bracket.
    let act_of = |v: &Vector| -> Matrix {
        let mut out = Matrix::zero(vd, vd);
        for (k, c) in v.coords().iter().enumerate() {
            out = out.add(&action[k].scale(c));
        }
        out
    };
    for a in 0..sd {
        for b in 0..sd {
            let lhs = act_of(s.product(a, b));
            let rhs = action[a].mul(&action[b]).sub(&action[b].mul(&action[a]));
            if lhs != rhs {
                return Err(Error::NotAModule);
            }
        }
    }

    let dim = sd + vd;
    let mut names: Vec<String> = s.basis_names().to_vec();
    names.extend(module_names.iter().map(|n| n.to_string()));
    let embed_s = |v: &Vector| {
        let mut out = Vector::zero(dim);
        for (i, c) in v.coords().iter().enumerate() {
            out.set(i, c.clone());
        }
        out
    };
    let mut products = vec![Vector::zero(dim); dim * dim];
    for a in 0..sd {
        for b in 0..sd {
            products[a * dim + b] = embed_s(s.product(a, b));
        }
    }
    for i in 0..vd {
        for a in 0..sd {
            let mut out = Vector::zero(dim);
            for j in 0..vd {
                out.set(sd + j, action[a].get(i, j).clone());
            }
            products[(sd + i) * dim + a] = out;
        }
    }
    let built = AlgebraTable::new(name, names, products);
    built
        .ensure_identity()
        .map_err(|_| Error::PostconditionFailed("hemisemidirect table fails the identity".into()))?;
    Ok(built)
}

/// Right-action matrices on the irreducible sl2 module with highest weight
/// n (dimension n+1), ordered to match the basis (e, f, h) of `sl2()`.
pub fn sl2_irrep_action(n: usize) -> Vec<Matrix> {
    let d = n + 1;
    let mut left_e = Matrix::zero(d, d);
    let mut left_f = Matrix::zero(d, d);
    let mut left_h = Matrix::zero(d, d);
    for i in 0..d {
        // e.v_i = i(n+1-i) v_{i-1}, f.v_i = v_{i+1}, h.v_i = (n-2i) v_i.
        if i > 0 {
            left_e.set(i, i - 1, int((i as i64) * ((n as i64) + 1 - i as i64)));
        }
        if i + 1 < d {
            left_f.set(i, i + 1, int(1));
        }
        left_h.set(i, i, int(n as i64 - 2 * i as i64));
    }
    let minus_one = int(-1);
    vec![
        left_e.scale(&minus_one),
        left_f.scale(&minus_one),
        left_h.scale(&minus_one),
    ]
}

/// Direct sum of two right-module actions (block diagonal).
pub fn action_direct_sum(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    assert_eq!(a.len(), b.len(), "actions of the same algebra expected");
    a.iter()
        .zip(b)
        .map(|(ma, mb)| {
            let (ra, rb) = (ma.rows(), mb.rows());
            let mut out = Matrix::zero(ra + rb, ra + rb);
            for i in 0..ra {
                for j in 0..ra {
                    out.set(i, j, ma.get(i, j).clone());
                }
            }
            for i in 0..rb {
                for j in 0..rb {
                    out.set(ra + i, ra + j, mb.get(i, j).clone());
                }
            }
            out
        })
        .collect()
}

/// sl2 extended by one adjoint copy of itself (six-dimensional).
pub fn hemi_sl2_adjoint() -> AlgebraTable {
    let s = sl2();
    let action: Vec<Matrix> = (0..3)
        .map(|a| s.right_mult(&Vector::basis(3, a)).matrix().clone())
        .collect();
    hemisemidirect(&s, &action, &["u1", "u2", "u3"], "hemi_sl2_adjoint")
        .expect("adjoint action satisfies the module law")
}

/// sl2 extended by two adjoint copies (nine-dimensional); its module
/// endomorphism algebra is two-dimensional per isotypic block.
pub fn hemi_sl2_double() -> AlgebraTable {
    let s = sl2();
    let action: Vec<Matrix> = (0..3)
        .map(|a| s.right_mult(&Vector::basis(3, a)).matrix().clone())
        .collect();
    let doubled = action_direct_sum(&action, &action);
    hemisemidirect(&s, &doubled, &["u1", "u2", "u3", "w1", "w2", "w3"], "hemi_sl2_double")
        .expect("doubled adjoint action satisfies the module law")
}

/// Direct sum of two algebras, all cross products zero. Basis names gain a
/// suffix when the two tables share any name.
pub fn direct_sum(a: &AlgebraTable, b: &AlgebraTable, name: &str) -> AlgebraTable {
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let collide = a.basis_names().iter().any(|n| b.basis_names().contains(n));
    let mut names: Vec<String> = Vec::with_capacity(dim);
    for n in a.basis_names() {
        names.push(if collide { format!("{n}_L") } else { n.clone() });
    }
    for n in b.basis_names() {
        names.push(if collide { format!("{n}_R") } else { n.clone() });
    }
    let embed = |v: &Vector, offset: usize| {
        let mut out = Vector::zero(dim);
        for (i, c) in v.coords().iter().enumerate() {
            out.set(offset + i, c.clone());
        }
        out
    };
    let mut products = vec![Vector::zero(dim); dim * dim];
    for i in 0..da {
        for j in 0..da {
            products[i * dim + j] = embed(a.product(i, j), 0);
        }
    }
    for i in 0..db {
        for j in 0..db {
            products[(da + i) * dim + (da + j)] = embed(b.product(i, j), da);
        }
    }
    AlgebraTable::new(name, names, products)
}

/// Restriction of scalars from the quadratic field with r^2 = d: each basis
/// element x splits into x (the 1-component) and x_r (the r-component), with
/// [a r^u, b r^v] = [a,b] r^(u+v) and r^2 replaced by d.
///
/// Applied to a simple Lie algebra with a non-square d this produces an
/// algebra that is simple over the rationals but not absolutely simple; its
/// module splittings are honestly non-rational.
pub fn quadratic_extension_scalars(a: &AlgebraTable, d: i64, name: &str) -> AlgebraTable {
    let n = a.dim();
    let dim = 2 * n;
    let mut names: Vec<String> = Vec::with_capacity(dim);
    for base in a.basis_names() {
        names.push(base.clone());
    }
    for base in a.basis_names() {
        names.push(format!("{base}_r"));
    }
    // Component (i, u) lives at index u*n + i; the product of the r-parts
    // folds back into the 1-part scaled by d.
    let spread = |v: &Vector, u: usize, scale: i64| {
        let mut out = Vector::zero(dim);
        for (i, c) in v.coords().iter().enumerate() {
            out.set(u * n + i, c * int(scale));
        }
        out
    };
    let mut products = vec![Vector::zero(dim); dim * dim];
    for i in 0..n {
        for j in 0..n {
            let base = a.product(i, j);
            products[i * dim + j] = spread(base, 0, 1);
            products[i * dim + (n + j)] = spread(base, 1, 1);
            products[(n + i) * dim + j] = spread(base, 1, 1);
            products[(n + i) * dim + (n + j)] = spread(base, 0, d);
        }
    }
    AlgebraTable::new(name, names, products)
}

/// Two-dimensional solvable example with a one-sided product: [y, x] = y.
pub fn solvable2() -> AlgebraTable {
    table("solv2", &["x", "y"], &[("y", "x", &[(1, "y")])])
}

/// Two-dimensional nilpotent non-Lie example: [y, y] = x.
pub fn squares2() -> AlgebraTable {
    table("sq2", &["x", "y"], &[("y", "y", &[(1, "x")])])
}

/// Abelian algebra of dimension three.
pub fn abelian3() -> AlgebraTable {
    table("abelian3", &["a", "b", "c"], &[])
}

/// The embedded corpus exported by the command-line `fixtures` command,
/// keyed by file stem.
pub fn embedded_corpus() -> Vec<(&'static str, AlgebraTable)> {
    vec![
        ("example_3_9", nine_dim_nonconjugate()),
        ("L201", l201()),
        ("hemi_sl2_adjoint", hemi_sl2_adjoint()),
        ("hemi_sl2_double", hemi_sl2_double()),
    ]
}

/// Wider table list used by the test suites.
pub fn test_corpus() -> Vec<AlgebraTable> {
    let mut out: Vec<AlgebraTable> = embedded_corpus().into_iter().map(|(_, t)| t).collect();
    out.push(sl2());
    out.push(direct_sum(&sl2(), &sl2(), "sl2_plus_sl2"));
    out.push(solvable2());
    out.push(squares2());
    out.push(abelian3());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_tables_satisfy_the_identity() {
        for t in test_corpus() {
            assert!(t.satisfies_identity(), "table '{}' fails the identity", t.name());
        }
    }

    #[test]
    fn scalar_extension_stays_lie_and_perfect() {
        let ext = quadratic_extension_scalars(&sl2(), 2, "sl2_rt2");
        assert_eq!(ext.dim(), 6);
        assert!(ext.satisfies_identity());
        assert!(ext.is_antisymmetric());
        // [e_r, f_r] = 2h lands in the 1-part.
        let p = ext.product(3, 4);
        assert_eq!(p.get(2), &int(2));
        assert_eq!(p.get(5), &int(0));
        // Killing form stays nondegenerate: still semisimple over Q.
        let full = ext.full_space();
        assert_eq!(ext.killing_gram(&full).unwrap().rank(), 6);
    }

    #[test]
    fn nine_dim_table_shape() {
        let t = nine_dim_nonconjugate();
        assert_eq!(t.dim(), 9);
        let mut nonzero = 0;
        for i in 0..9 {
            for j in 0..9 {
                if !t.product(i, j).is_zero() {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 27);
        assert!(!t.is_antisymmetric());
    }

    #[test]
    fn eight_dim_table_shape() {
        let t = l201();
        assert_eq!(t.dim(), 8);
        // [y1, y2] = y1 and [y2, y1] = -y1.
        let y1 = Vector::basis(8, 6);
        let y2 = Vector::basis(8, 7);
        assert_eq!(t.bracket(&y1, &y2).unwrap(), y1);
        assert_eq!(t.bracket(&y2, &y1).unwrap(), y1.scale(&int(-1)));
    }

    #[test]
    fn sl2_is_simple_lie() {
        let s = sl2();
        assert!(s.is_antisymmetric());
        assert!(s.satisfies_identity());
        let gram = s.killing_gram(&s.full_space()).unwrap();
        assert_eq!(gram.rank(), 3);
    }

    #[test]
    fn hemisemidirect_rejects_non_module() {
        let s = sl2();
        let bad = vec![Matrix::identity(2), Matrix::identity(2), Matrix::identity(2)];
        assert!(matches!(
            hemisemidirect(&s, &bad, &["u", "v"], "bad"),
            Err(Error::NotAModule)
        ));
    }

    #[test]
    fn irrep_actions_build_valid_tables() {
        let s = sl2();
        for n in 0..=4 {
            let act = sl2_irrep_action(n);
            let names: Vec<String> = (0..=n).map(|i| format!("v{i}")).collect();
            let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let t = hemisemidirect(&s, &act, &name_refs, &format!("hemi_v{n}"))
                .expect("irrep satisfies the module law");
            assert_eq!(t.dim(), 4 + n);
            assert!(t.satisfies_identity());
        }
    }

    #[test]
    fn direct_sum_splits_products() {
        let t = direct_sum(&sl2(), &solvable2(), "mix");
        assert_eq!(t.dim(), 5);
        assert!(t.satisfies_identity());
        // Cross products vanish.
        let e = Vector::basis(5, 0);
        let y = Vector::basis(5, 4);
        assert!(t.bracket(&e, &y).unwrap().is_zero());
        assert!(t.bracket(&y, &e).unwrap().is_zero());
    }

    #[test]
    fn direct_sum_disambiguates_name_collisions() {
        let t = direct_sum(&sl2(), &sl2(), "sl2_plus_sl2");
        assert_eq!(t.basis_names()[0], "e_L");
        assert_eq!(t.basis_names()[3], "e_R");
    }
}
