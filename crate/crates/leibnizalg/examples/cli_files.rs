//! Drive the command-line surface programmatically: write the fixture
//! corpus to a temporary directory, then run verify / analyze / classify
//! on the emitted files exactly as the binary would.

use leibnizalg::cli::{execute, Cli};
use clap::Parser;

fn run(args: &[&str]) -> leibnizalg::Result<String> {
    let cli = Cli::try_parse_from(args).expect("static arguments parse");
    let mut buf = Vec::new();
    execute(&cli, &mut buf)?;
    Ok(String::from_utf8(buf).expect("output is utf8"))
}

fn main() -> leibnizalg::Result<()> {
    let dir = std::env::temp_dir().join(format!("leibnizalg-demo-{}", std::process::id()));
    let dir_str = dir.to_str().expect("temp path is utf8");

    println!("{}", run(&["leibnizalg", "fixtures", dir_str])?);

    let l201 = dir.join("L201.json");
    let l201 = l201.to_str().expect("utf8");
    println!("{}", run(&["leibnizalg", "verify", l201])?);
    println!("{}", run(&["leibnizalg", "classify", l201])?);

    // JSON rendering is a stable schema: the analyze document parses back
    // into the same report type the library produces.
    let json = run(&["leibnizalg", "analyze", "--json", l201])?;
    let report: leibnizalg::report::Report = serde_json::from_str(&json).expect("schema matches");
    println!("JSON report round trip: algebra '{}', verdict {}", report.algebra, report.classification.verdict);

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
