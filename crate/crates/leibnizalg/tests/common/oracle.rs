//! Independent brute-force implementations of the squares ideal, the
//! descending series, and the equivariant map space, written directly
//! against the structure constants with a self-contained Gaussian
//! elimination. Used to cross-check the library on small algebras.

use leibnizalg::algebra::AlgebraTable;
use leibnizalg::fixtures;
use leibnizalg::radicals::SeriesKind;
use leibnizalg::scalar::Scalar;
use leibnizalg::subspace::Subspace;
use num_traits::Zero;

pub type Row = Vec<Scalar>;

/// Reduced row echelon form over the rationals, nonzero rows only:
/// forward elimination with leading-entry normalization, then full back
/// substitution.
pub fn rref(mut rows: Vec<Row>) -> Vec<Row> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let lead = rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x / &lead;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let delta = &rows[pivot_row][c] * &factor;
                    rows[r][c] = &rows[r][c] - delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Null space of the homogeneous system with the given equation rows, one
/// basis vector per free column, free coordinate set to one.
pub fn null_space(equations: Vec<Row>, unknowns: usize) -> Vec<Row> {
    let reduced = rref(equations);
    let mut pivot_cols = Vec::new();
    for row in &reduced {
        if let Some(col) = row.iter().position(|x| !x.is_zero()) {
            pivot_cols.push(col);
        }
    }
    let mut basis = Vec::new();
    for free in 0..unknowns {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); unknowns];
        v[free] = Scalar::from_integer(1.into());
        for (row, &col) in reduced.iter().zip(&pivot_cols) {
            v[col] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn subspace_rows(u: &Subspace) -> Vec<Row> {
    u.basis_rows().iter().map(|r| r.coords().to_vec()).collect()
}

/// [x, y] expanded through the structure constants by hand.
pub fn bracket_raw(table: &AlgebraTable, x: &Row, y: &Row) -> Row {
    let n = table.dim();
    let mut out = vec![Scalar::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let factor = &x[i] * &y[j];
            for (k, c) in table.product(i, j).coords().iter().enumerate() {
                if !c.is_zero() {
                    out[k] = &out[k] + c * &factor;
                }
            }
        }
    }
    out
}

fn add(a: &Row, b: &Row) -> Row {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn standard_rows(n: usize) -> Vec<Row> {
    (0..n)
        .map(|i| {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::from_integer(1.into());
            e
        })
        .collect()
}

pub fn span_of_products(table: &AlgebraTable, u: &[Row], v: &[Row]) -> Vec<Row> {
    let mut rows = Vec::new();
    for x in u {
        for y in v {
            rows.push(bracket_raw(table, x, y));
        }
    }
    rref(rows)
}

/// Span of all squares [x,x]: basis squares plus pairwise sums cover the
/// symmetrized products by bilinearity.
pub fn oracle_squares(table: &AlgebraTable) -> Vec<Row> {
    let n = table.dim();
    let basis = standard_rows(n);
    let mut rows = Vec::new();
    for i in 0..n {
        rows.push(bracket_raw(table, &basis[i], &basis[i]));
    }
    for i in 0..n {
        for j in i + 1..n {
            let x = add(&basis[i], &basis[j]);
            rows.push(bracket_raw(table, &x, &x));
        }
    }
    rref(rows)
}

pub fn oracle_series(table: &AlgebraTable, kind: SeriesKind) -> Vec<Vec<Row>> {
    let full = standard_rows(table.dim());
    let mut terms = vec![rref(full.clone())];
    loop {
        let last = terms.last().expect("nonempty").clone();
        let next = match kind {
            SeriesKind::Derived => span_of_products(table, &last, &last),
            SeriesKind::LowerCentral => span_of_products(table, &last, &full),
        };
        if next == last {
            break;
        }
        assert!(next.len() < last.len(), "descending series must shrink");
        terms.push(next.clone());
        if next.is_empty() {
            break;
        }
    }
    terms
}

/// Flattened solutions of theta([x,y]) = [theta(x), y] over all pairs of
/// S-basis vectors, theta an (s_dim x i_dim) coordinate matrix.
pub fn oracle_hom_flat(table: &AlgebraTable, s: &Subspace, i: &Subspace) -> Vec<Row> {
    let s_rows = subspace_rows(s);
    let i_rows = subspace_rows(i);
    let sd = s_rows.len();
    let id = i_rows.len();
    let unknowns = sd * id;
    let mut equations = Vec::new();
    for a in 0..sd {
        for b in 0..sd {
            // Ambient equation: sum_p c_p sum_q t[p][q] i_q - sum_q t[a][q] [i_q, s_b] = 0.
            let product = bracket_raw(table, &s_rows[a], &s_rows[b]);
            let c = s
                .coordinates(&leibnizalg::Vector::new(product))
                .expect("S is closed");
            let mut coeff = vec![vec![Scalar::zero(); unknowns]; table.dim()];
            for p in 0..sd {
                if c.get(p).is_zero() {
                    continue;
                }
                for q in 0..id {
                    for (k, x) in i_rows[q].iter().enumerate() {
                        coeff[k][p * id + q] = &coeff[k][p * id + q] + c.get(p) * x;
                    }
                }
            }
            for q in 0..id {
                let action = bracket_raw(table, &i_rows[q], &s_rows[b]);
                for (k, x) in action.iter().enumerate() {
                    coeff[k][a * id + q] = &coeff[k][a * id + q] - x;
                }
            }
            equations.extend(coeff);
        }
    }
    rref(null_space(equations, unknowns))
}

/// Every corpus algebra of dimension at most six, plus generated
/// hemisemidirect products at the same scale.
pub fn small_corpus() -> Vec<AlgebraTable> {
    let mut out: Vec<AlgebraTable> = fixtures::test_corpus()
        .into_iter()
        .filter(|t| t.dim() <= 6)
        .collect();
    for n in 0..=2usize {
        let names: Vec<String> = (0..=n).map(|k| format!("v{k}")).collect();
        let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
        out.push(
            fixtures::hemisemidirect(
                &fixtures::sl2(),
                &fixtures::sl2_irrep_action(n),
                &name_refs,
                &format!("sl2_on_v{n}"),
            )
            .expect("action is a module"),
        );
    }
    assert!(out.len() >= 8, "corpus stays meaningful");
    out
}
