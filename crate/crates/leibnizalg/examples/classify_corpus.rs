//! Conjugacy classification across the embedded corpus: for each algebra,
//! decide how far conjugacy of Levi subalgebras goes and print the verdict
//! with its witness summary.

use leibnizalg::conjugacy::{classify, Witness};
use leibnizalg::fixtures;

fn main() -> leibnizalg::Result<()> {
    for (name, table) in fixtures::embedded_corpus() {
        let c = classify(&table)?;
        println!("{name}: {}", c.verdict);
        println!(
            "  J=0:{} [S,E]=J:{} [J,R]=0:{} [S,R]=0:{} (Hom dim {}, certified {})",
            c.predicates.j_zero,
            c.predicates.se_equals_j,
            c.predicates.jr_zero,
            c.predicates.sr_zero,
            c.hom_dimension,
            c.certified
        );
        match &c.witness {
            Some(Witness::InnerConjugator { b, .. }) => {
                println!("  witness: inner conjugator b with exp(R_b)|_S = id + tau");
                println!("           b = {}", table.render(b));
            }
            Some(Witness::TwistAutomorphism { auto, .. }) => {
                println!(
                    "  witness: verified automorphism ({} exponential factor(s)) mapping S onto S_theta",
                    auto.generator_log().len()
                );
            }
            Some(Witness::NonConjugateTwist { theta_index, .. }) => {
                println!("  witness: theta_{theta_index} twists S to a non-conjugate Levi subalgebra");
            }
            Some(Witness::TwistPair { theta_index, .. }) => {
                println!("  witness: theta_{theta_index} twists S outside the inner orbit");
            }
            None => {}
        }
        for note in &c.notes {
            println!("  note: {note}");
        }
        println!();
    }
    Ok(())
}
