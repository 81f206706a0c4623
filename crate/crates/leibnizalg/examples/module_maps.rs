//! The space Hom_S(S, I) of equivariant maps from a Levi subalgebra into
//! the squares ideal: its dimension decides how many genuinely different
//! twisted Levi complements exist.

use leibnizalg::algebra::render_combination;
use leibnizalg::fixtures;
use leibnizalg::levi::levi_subalgebra;
use leibnizalg::smodules::{end_dimension, hom_space};

fn main() -> leibnizalg::Result<()> {
    for table in [
        fixtures::nine_dim_nonconjugate(),
        fixtures::l201(),
        fixtures::hemi_sl2_adjoint(),
        fixtures::hemi_sl2_double(),
        fixtures::sl2(),
    ] {
        let rep = levi_subalgebra(&table)?;
        let homs = hom_space(&table, &rep.s, &rep.i)?;
        println!(
            "'{}': dim Hom_S(S, I) = {}, dim End_S(I) = {}",
            table.name(),
            homs.dim(),
            if rep.i.is_zero() { 0 } else { end_dimension(&table, &rep.s, &rep.i)? }
        );
        let names = table.basis_names();
        for k in 0..homs.dim() {
            println!("  theta_{k}:");
            for p in 0..rep.s.dim() {
                let source = render_combination(&rep.s.basis().row(p), names);
                let image = rep.i.embed(&homs.map(k).matrix().row(p));
                println!("    {source} -> {}", render_combination(&image, names));
            }
        }
    }
    Ok(())
}
