//! Solve the inner-conjugacy problem explicitly: given a twist map tau,
//! find b in the nilradical with exp(R_b)|_S = id + tau, so exp(R_b)
//! carries the Levi subalgebra S onto the twisted complement S_tau.

use leibnizalg::conjugacy::{e_subspace, find_inner_conjugator, s_theta, Automorphism};
use leibnizalg::fixtures;
use leibnizalg::levi::levi_subalgebra;
use leibnizalg::linmap::LinearMap;
use leibnizalg::matrix::Matrix;

fn main() -> leibnizalg::Result<()> {
    let table = fixtures::l201();
    let rep = levi_subalgebra(&table)?;
    let names = table.basis_names();

    // tau: restriction of right multiplication by the solvable direction
    // y1 to S, written in (S basis) x (I basis) coordinates.
    let y1 = leibnizalg::subspace::vector_of(vec![0, 0, 0, 0, 0, 0, 1, 0]);
    let rows: Vec<_> = rep
        .s
        .basis_rows()
        .iter()
        .map(|s| {
            let image = table.bracket(s, &y1).expect("dimensions match");
            rep.i.coordinates(&image).expect("image lies in I")
        })
        .collect();
    let tau = LinearMap::new(rep.s.dim(), rep.i.dim(), Matrix::from_rows(rows));

    let e = e_subspace(&table, &rep.s)?;
    println!("E = {{b in N : [S,b] in I}} has dim {}", e.dim());

    let b = find_inner_conjugator(&table, &rep.s, &tau)?;
    println!("conjugator: b = {}", table.render(&b));

    let auto = Automorphism::right_exp(&table, &rep, &b)?;
    let twisted = s_theta(&table, &rep.s, &tau)?;
    assert_eq!(auto.apply_subspace(&rep.s), twisted);
    println!("exp(R_b)(S) equals the twisted complement S_tau: verified");

    for s in rep.s.basis_rows() {
        let image = auto.apply(&s);
        println!(
            "  {} -> {}",
            leibnizalg::algebra::render_combination(&s, names),
            leibnizalg::algebra::render_combination(&image, names)
        );
    }
    Ok(())
}
