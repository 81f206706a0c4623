//! Compute a Levi decomposition L = S + R, verify it, and inspect the
//! structure constants S induces on its own basis.

use leibnizalg::algebra::render_combination;
use leibnizalg::fixtures;
use leibnizalg::levi::{levi_subalgebra, verify_levi};

fn main() -> leibnizalg::Result<()> {
    for table in [fixtures::l201(), fixtures::nine_dim_nonconjugate()] {
        let rep = levi_subalgebra(&table)?;
        println!("algebra '{}':", table.name());
        let names = table.basis_names();
        let rows: Vec<String> = rep
            .s
            .basis_rows()
            .iter()
            .map(|r| render_combination(r, names))
            .collect();
        println!("  S (dim {}): {}", rep.s.dim(), rows.join(", "));
        println!("  R (dim {}), N (dim {}), I (dim {})", rep.r.dim(), rep.n.dim(), rep.i.dim());
        println!("  Killing rank on S: {}", rep.killing_rank_on_s);

        let check = verify_levi(&table, &rep.s)?;
        println!(
            "  verified: closed={} lie={} semisimple={} complementary={}",
            check.closed, check.lie, check.semisimple, check.complementary
        );

        // S with its induced product is a standalone semisimple Lie algebra.
        let s_table = table.structure_on(&rep.s, format!("{}_levi", table.name()))?;
        println!(
            "  induced table on S: dim {}, antisymmetric = {}\n",
            s_table.dim(),
            s_table.is_antisymmetric()
        );
    }
    Ok(())
}
