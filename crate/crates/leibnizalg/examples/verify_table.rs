//! Parse an algebra from its text form and check the defining identity
//! [x,[y,z]] = [[x,y],z] - [[x,z],y] on every basis triple, then show the
//! diagnostic a broken table produces.

use leibnizalg::format::parse_algebra;

fn main() -> leibnizalg::Result<()> {
    let good = r#"{
        "name": "two_dim_solvable",
        "dim": 2,
        "basis": ["a", "b"],
        "products": [
            {"left": "a", "right": "b", "result": [["1", "a"]]},
            {"left": "b", "right": "a", "result": [["-1", "a"]]}
        ]
    }"#;
    let table = parse_algebra(good)?;
    let triples = table.dim().pow(3);
    println!("'{}': identity holds = {} ({} triples)", table.name(), table.satisfies_identity(), triples);

    // Flipping one sign breaks the identity; the violation names the triple.
    let bad = good.replace("\"-1\"", "\"1\"");
    let broken = parse_algebra(&bad)?;
    let violations = broken.identity_violations();
    println!("broken copy: {} violating triple(s)", violations.len());
    if let Some(first) = violations.first() {
        println!("  first: {}", broken.describe_violation(first));
    }
    Ok(())
}
