//! Canonical decomposition of the squares ideal as a module over the Levi
//! subalgebra: I = J ⊕ K with J the sum of all Hom images, plus the split
//! S = G ⊕ Q into the ideals that do and do not support Hom maps.

use leibnizalg::fixtures;
use leibnizalg::levi::levi_subalgebra;
use leibnizalg::smodules::canonical_decomposition;
use leibnizalg::{Error, Subspace, Vector};

fn main() -> leibnizalg::Result<()> {
    for table in [
        fixtures::nine_dim_nonconjugate(),
        fixtures::hemi_sl2_double(),
        fixtures::direct_sum(&fixtures::sl2(), &fixtures::hemi_sl2_adjoint(), "sl2_plus_hemi"),
    ] {
        let rep = levi_subalgebra(&table)?;
        let cd = canonical_decomposition(&table, &rep.s)?;
        println!("'{}':", table.name());
        println!(
            "  J dim {}, K dim {}, G dim {}, Q dim {}",
            cd.j.dim(),
            cd.k.dim(),
            cd.g.dim(),
            cd.q.dim()
        );
        for (idx, comps) in cd.j_components.iter().enumerate() {
            let dims: Vec<usize> = comps.iter().map(Subspace::dim).collect();
            println!(
                "  simple ideal {idx} (dim {}): J components of dims {dims:?}",
                cd.simple_ideals[idx].dim()
            );
        }
    }

    // Splitting is certified over the rationals or refused, never guessed:
    // extending the scalars of sl2 by a square root produces endomorphism
    // algebras that are honest quadratic fields.
    let base = fixtures::quadratic_extension_scalars(&fixtures::sl2(), 2, "sl2_rt2");
    let action: Vec<_> = (0..base.dim())
        .map(|a| base.right_mult(&Vector::basis(base.dim(), a)).matrix().clone())
        .collect();
    let twisted = fixtures::hemisemidirect(
        &base,
        &action,
        &["u1", "u2", "u3", "u4", "u5", "u6"],
        "hemi_sl2_rt2",
    )?;
    let rep = levi_subalgebra(&twisted)?;
    match canonical_decomposition(&twisted, &rep.s) {
        Err(Error::NonSplit(msg)) => println!("'{}': refused to split: {msg}", twisted.name()),
        other => println!("unexpected: {:?}", other.map(|cd| cd.j.dim())),
    }
    Ok(())
}
