//! Twisted Levi complements beyond the inner orbit: when [S,E] = 0 but
//! J is nonzero, no inner automorphism reaches S_theta, yet exp of the
//! twist derivation delta_theta(x) = theta(x_S) still conjugates S onto it.

use leibnizalg::conjugacy::{criterion, delta_theta, exp_d, s_theta};
use leibnizalg::fixtures;
use leibnizalg::levi::levi_subalgebra;
use leibnizalg::smodules::hom_space;

fn main() -> leibnizalg::Result<()> {
    let table = fixtures::hemi_sl2_adjoint();
    let rep = levi_subalgebra(&table)?;

    let crit = criterion(&table, &rep.s)?;
    println!(
        "criterion [S,E] = J: {} ([S,E] dim {}, J dim {})",
        crit.holds,
        crit.se.dim(),
        crit.j.dim()
    );

    let homs = hom_space(&table, &rep.s, &rep.i)?;
    let theta = homs.map(0).clone();
    let twisted = s_theta(&table, &rep.s, &theta)?;
    println!("S_theta is again a Levi subalgebra (dim {})", twisted.dim());

    // The twist derivation is defined because [J,R] = 0; its exponential
    // is id + delta since delta squares to zero.
    let delta = delta_theta(&table, &rep.s, &theta)?;
    println!("delta_theta squares to zero: {}", delta.then(&delta).is_zero());
    let zero = leibnizalg::Vector::zero(table.dim());
    let auto = exp_d(&table, &rep, &zero, &theta)?;
    println!(
        "exp(delta_theta) is an automorphism: {}",
        table.is_automorphism(auto.map())
    );
    assert_eq!(auto.apply_subspace(&rep.s), twisted);
    println!("exp(delta_theta)(S) = S_theta: verified");

    let names = table.basis_names();
    for s in rep.s.basis_rows() {
        println!(
            "  {} -> {}",
            leibnizalg::algebra::render_combination(&s, names),
            leibnizalg::algebra::render_combination(&auto.apply(&s), names)
        );
    }
    Ok(())
}
