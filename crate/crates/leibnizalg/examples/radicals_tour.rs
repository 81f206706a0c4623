//! The ideal chain I ⊆ N ⊆ R on one table: squares ideal, nilradical,
//! solvable radical, the liezation quotient, and the two descending series.

use leibnizalg::algebra::render_combination;
use leibnizalg::fixtures;
use leibnizalg::radicals::{
    liezation, nilradical, series, solvable_radical, squares_ideal, SeriesKind,
};
use leibnizalg::Subspace;

fn show(label: &str, table: &leibnizalg::algebra::AlgebraTable, u: &Subspace) {
    let rows: Vec<String> = u
        .basis_rows()
        .iter()
        .map(|r| render_combination(r, table.basis_names()))
        .collect();
    println!("{label} (dim {}): {}", u.dim(), rows.join(", "));
}

fn main() -> leibnizalg::Result<()> {
    let table = fixtures::nine_dim_nonconjugate();
    println!("algebra '{}', dim {}", table.name(), table.dim());

    let i = squares_ideal(&table)?;
    let n = nilradical(&table)?;
    let r = solvable_radical(&table)?;
    show("I", &table, &i);
    show("N", &table, &n);
    show("R", &table, &r);
    assert!(i.is_contained_in(&n) && n.is_contained_in(&r));

    let lie = liezation(&table)?;
    println!(
        "liezation: dim {} Lie algebra, antisymmetric = {}",
        lie.table.dim(),
        lie.table.is_antisymmetric()
    );

    for kind in [SeriesKind::Derived, SeriesKind::LowerCentral] {
        let s = series(&table, &table.full_space(), kind)?;
        let dims: Vec<usize> = s.terms.iter().map(Subspace::dim).collect();
        println!("{kind:?} series dims: {dims:?} (stable: {})", s.stable);
    }

    // The radical is solvable but not nilpotent here: its derived series
    // dies while its lower central series stabilizes above zero.
    let derived = series(&table, &r, SeriesKind::Derived)?;
    let central = series(&table, &r, SeriesKind::LowerCentral)?;
    println!(
        "radical: derived reaches zero = {}, lower central reaches zero = {}",
        derived.reaches_zero(),
        central.reaches_zero()
    );
    Ok(())
}
