//! Exponentials of nilpotent right multiplications: exp(R_a) is an
//! automorphism whenever a lies in the nilradical, and the exponential of
//! a non-nilpotent operator is rejected rather than approximated.

use leibnizalg::algebra::render_combination;
use leibnizalg::fixtures;
use leibnizalg::radicals::nilradical;
use leibnizalg::{Error, Vector};

fn main() -> leibnizalg::Result<()> {
    let table = fixtures::l201();
    let n = nilradical(&table)?;
    println!("'{}': nilradical has dimension {}", table.name(), n.dim());

    for a in n.basis_rows() {
        let exp = table.right_mult(&a).exp_nilpotent()?;
        println!(
            "exp(R_a) for a = {:<4} automorphism: {}",
            format!("{}:", render_combination(&a, table.basis_names())),
            table.is_automorphism(&exp)
        );
    }

    // Right multiplication by a semisimple element is not nilpotent.
    let h = Vector::basis(table.dim(), 2);
    match table.right_mult(&h).exp_nilpotent() {
        Err(Error::NotNilpotent { power }) => {
            println!("exp(R_h) rejected: power {power} of R_h is still nonzero")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
