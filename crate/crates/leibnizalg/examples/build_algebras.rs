//! Construct algebras programmatically: hemisemidirect products of a Lie
//! algebra with one of its modules, and the one-dimensional extension that
//! forces a non-conjugate pair of Levi subalgebras; render the results to
//! the text format.

use leibnizalg::conjugacy::{classify, nonconjugate_extension};
use leibnizalg::fixtures::{hemisemidirect, sl2, sl2_irrep_action};
use leibnizalg::format::{parse_algebra, render_algebra};
use leibnizalg::subspace::{coordinate_subspace, vector_of};

fn main() -> leibnizalg::Result<()> {
    // sl2 acting on its 5-dimensional irreducible module with zero left
    // action: the module becomes the squares ideal.
    let action = sl2_irrep_action(4);
    let table = hemisemidirect(&sl2(), &action, &["v0", "v1", "v2", "v3", "v4"], "sl2_on_v4")?;
    println!(
        "'{}': dim {}, identity holds = {}",
        table.name(),
        table.dim(),
        table.satisfies_identity()
    );
    let rendered = render_algebra(&table);
    assert_eq!(parse_algebra(&rendered)?, table);
    println!("render/parse round trip: exact ({} bytes)\n", rendered.len());

    // Start from a Lie algebra G = S + M with a distinguished direction p
    // in M and adjoin one generator per S-basis vector; the result is a
    // Leibniz algebra whose Levi subalgebras split into two conjugacy
    // classes. Here G is sl2 plus a trivial one-dimensional module.
    let trivial_action = vec![leibnizalg::Matrix::zero(1, 1); 3];
    let g = hemisemidirect(&sl2(), &trivial_action, &["p"], "sl2_plus_p")?;
    let s = coordinate_subspace(4, &[0, 1, 2]);
    let m = coordinate_subspace(4, &[3]);
    let p = vector_of(vec![0, 0, 0, 1]);
    let extended = nonconjugate_extension(&g, &s, &m, &p)?;
    println!(
        "extension of '{}': dim {} algebra '{}'",
        g.name(),
        extended.dim(),
        extended.name()
    );
    let c = classify(&extended)?;
    println!("classification: {}", c.verdict);
    print!("{}", render_algebra(&extended));
    Ok(())
}
