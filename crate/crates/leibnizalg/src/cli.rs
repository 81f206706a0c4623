//! Command-line front end: argument parsing, routing into the library,
//! text and JSON rendering, and the exit-code convention.
//!
//! Exit codes: 0 for success (including negative verdicts that classify
//! successfully), 1 for mathematical errors (failed identities, missing
//! conjugators, non-nilpotent exponents), 2 for input errors (unreadable
//! files, parse failures, bad arguments).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{render_combination, AlgebraTable};
use crate::conjugacy::find_inner_conjugator;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::format::{parse_algebra, parse_coeff_list, parse_map_file, render_algebra, MapFile};
use crate::levi::{levi_subalgebra, verify_levi};
use crate::linmap::LinearMap;
use crate::matrix::{Matrix, Vector};
use crate::report::{build_report, render_text, Report};
use crate::scalar::render_scalar;
use crate::smodules::{canonical_decomposition, hom_space};
use crate::subspace::Subspace;

#[derive(Parser, Debug)]
#[command(
    name = "leibnizalg",
    about = "Exact-arithmetic analysis of Leibniz algebras given by rational structure constants",
    version
)]
pub struct Cli {
    /// Render machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the defining identity on every basis triple.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Full pipeline: radicals, Levi decomposition, module data, and the
    /// conjugacy classification, as one report per file.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Compute a Levi decomposition and verify it.
    Levi { file: PathBuf },
    /// Basis of the equivariant maps from the Levi subalgebra into the
    /// squares ideal.
    Hom { file: PathBuf },
    /// Canonical module decomposition: J, K, supporting ideals, components.
    Decompose { file: PathBuf },
    /// Conjugacy classification with verdict and verified witness.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Find an inner conjugator realizing a given twist map.
    Conjugate {
        file: PathBuf,
        /// Map document: `hom_coefficients` or `images`.
        #[arg(long)]
        theta: PathBuf,
    },
    /// Exponential of right multiplication by an ambient element.
    Exp {
        file: PathBuf,
        /// Comma-separated rational coordinates, one per basis vector.
        #[arg(long)]
        element: String,
    },
    /// Write the embedded fixture corpus to a directory.
    Fixtures {
        #[arg(default_value = ".")]
        dir: PathBuf,
    },
}

/// Entry point wrapper: parse, execute, map errors to exit codes.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout().lock();
    match execute(&cli, &mut stdout) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn load(path: &Path) -> Result<AlgebraTable> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn fmt_vector(v: &Vector) -> String {
    let parts: Vec<String> = v.coords().iter().map(render_scalar).collect();
    format!("[{}]", parts.join(", "))
}

fn vector_json(v: &Vector) -> serde_json::Value {
    json!(v.coords().iter().map(render_scalar).collect::<Vec<_>>())
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    json!((0..m.rows()).map(|i| vector_json(&m.row(i))).collect::<Vec<_>>())
}

fn named_rows(table: &AlgebraTable, u: &Subspace) -> Vec<String> {
    u.basis_rows()
        .iter()
        .map(|r| render_combination(r, table.basis_names()))
        .collect()
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON value renders");
    writeln!(out, "{text}")?;
    Ok(())
}

/// Collect per-file JSON values into one document: the value itself for a
/// single file, an array for several.
fn print_json_batch(out: &mut dyn Write, mut values: Vec<serde_json::Value>) -> Result<()> {
    let doc = if values.len() == 1 { values.pop().expect("one value") } else { json!(values) };
    print_json(out, &doc)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Verify { files } => verify_cmd(files, cli.json, out),
        Command::Analyze { files } => analyze_cmd(files, cli.json, out),
        Command::Levi { file } => levi_cmd(file, cli.json, out),
        Command::Hom { file } => hom_cmd(file, cli.json, out),
        Command::Decompose { file } => decompose_cmd(file, cli.json, out),
        Command::Classify { files } => classify_cmd(files, cli.json, out),
        Command::Conjugate { file, theta } => conjugate_cmd(file, theta, cli.json, out),
        Command::Exp { file, element } => exp_cmd(file, element, cli.json, out),
        Command::Fixtures { dir } => fixtures_cmd(dir, cli.json, out),
    }
}

fn verify_cmd(files: &[PathBuf], as_json: bool, out: &mut dyn Write) -> Result<()> {
    let mut failure: Option<Error> = None;
    let mut values = Vec::new();
    for path in files {
        let table = load(path)?;
        let triples = table.dim().pow(3);
        let violations = table.identity_violations();
        if as_json {
            let mut value = json!({
                "file": path.display().to_string(),
                "algebra": table.name(),
                "pass": violations.is_empty(),
                "triples": triples,
            });
            if let Some(first) = violations.first() {
                value["violation"] = json!(table.describe_violation(first));
            }
            values.push(value);
        } else {
            if files.len() > 1 {
                writeln!(out, "== {} ==", path.display())?;
            }
            match violations.first() {
                None => writeln!(out, "Leibniz identity: PASS ({triples} triples)")?,
                Some(first) => writeln!(
                    out,
                    "Leibniz identity: FAIL ({triples} triples): {}",
                    table.describe_violation(first)
                )?,
            }
        }
        if let Some(first) = violations.first() {
            failure.get_or_insert(Error::PreconditionFailed(format!(
                "algebra '{}': {}",
                table.name(),
                table.describe_violation(first)
            )));
        }
    }
    if as_json {
        print_json_batch(out, values)?;
    }
    match failure {
        None => Ok(()),
        Some(err) => Err(err),
    }
}

fn analyze_cmd(files: &[PathBuf], as_json: bool, out: &mut dyn Write) -> Result<()> {
    let mut reports: Vec<Report> = Vec::new();
    for path in files {
        reports.push(build_report(&load(path)?)?);
    }
    if as_json {
        let values = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes"));
        print_json_batch(out, values.collect())?;
    } else {
        for (k, report) in reports.iter().enumerate() {
            if k > 0 {
                writeln!(out)?;
            }
            write!(out, "{}", render_text(report))?;
        }
    }
    Ok(())
}

fn levi_cmd(file: &Path, as_json: bool, out: &mut dyn Write) -> Result<()> {
    let table = load(file)?;
    table.ensure_identity()?;
    let rep = levi_subalgebra(&table)?;
    let check = verify_levi(&table, &rep.s)?;
    if as_json {
        print_json(
            out,
            &json!({
                "algebra": table.name(),
                "s": matrix_json(rep.s.basis()),
                "r": matrix_json(rep.r.basis()),
                "n": matrix_json(rep.n.basis()),
                "i": matrix_json(rep.i.basis()),
                "killing_rank_on_s": rep.killing_rank_on_s,
                "check": {
                    "closed": check.closed,
                    "lie": check.lie,
                    "semisimple": check.semisimple,
                    "complementary": check.complementary,
                    "passed": check.passed(),
                },
            }),
        )?;
    } else {
        writeln!(out, "algebra: {}", table.name())?;
        for (label, u) in [("S", &rep.s), ("R", &rep.r), ("N", &rep.n), ("I", &rep.i)] {
            writeln!(out, "{label} (dim {}): {}", u.dim(), named_rows(&table, u).join("; "))?;
        }
        writeln!(out, "Killing rank on S: {}", rep.killing_rank_on_s)?;
        writeln!(out, "verified: {}", if check.passed() { "PASS" } else { "FAIL" })?;
    }
    if check.passed() {
        Ok(())
    } else {
        Err(Error::PostconditionFailed(
            "computed Levi subalgebra failed verification".into(),
        ))
    }
}

fn hom_cmd(file: &Path, as_json: bool, out: &mut dyn Write) -> Result<()> {
    let table = load(file)?;
    table.ensure_identity()?;
    let rep = levi_subalgebra(&table)?;
    let homs = hom_space(&table, &rep.s, &rep.i)?;
    if as_json {
        let maps: Vec<serde_json::Value> = (0..homs.dim())
            .map(|k| {
                let rows: Vec<serde_json::Value> = (0..rep.s.dim())
                    .map(|p| vector_json(&rep.i.embed(&homs.map(k).matrix().row(p))))
                    .collect();
                json!(rows)
            })
            .collect();
        print_json(
            out,
            &json!({
                "algebra": table.name(),
                "dimension": homs.dim(),
                "s": matrix_json(rep.s.basis()),
                "maps": maps,
            }),
        )?;
    } else {
        writeln!(out, "algebra: {}", table.name())?;
        writeln!(out, "Hom dimension: {}", homs.dim())?;
        let names = table.basis_names();
        for k in 0..homs.dim() {
            writeln!(out, "theta_{k}:")?;
            for p in 0..rep.s.dim() {
                let source = render_combination(&rep.s.basis().row(p), names);
                let image = rep.i.embed(&homs.map(k).matrix().row(p));
                writeln!(out, "  {source} -> {}", render_combination(&image, names))?;
            }
        }
    }
    Ok(())
}

fn decompose_cmd(file: &Path, as_json: bool, out: &mut dyn Write) -> Result<()> {
    let table = load(file)?;
    table.ensure_identity()?;
    let rep = levi_subalgebra(&table)?;
    let cd = canonical_decomposition(&table, &rep.s)?;
    if as_json {
        print_json(
            out,
            &json!({
                "algebra": table.name(),
                "j": matrix_json(cd.j.basis()),
                "k": matrix_json(cd.k.basis()),
                "g": matrix_json(cd.g.basis()),
                "q": matrix_json(cd.q.basis()),
                "simple_ideals": cd.simple_ideals.iter()
                    .map(|u| matrix_json(u.basis())).collect::<Vec<_>>(),
                "j_component_dims": cd.j_components.iter()
                    .map(|c| c.iter().map(Subspace::dim).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
        )?;
    } else {
        writeln!(out, "algebra: {}", table.name())?;
        for (label, u) in [("J", &cd.j), ("K", &cd.k), ("G", &cd.g), ("Q", &cd.q)] {
            let rows = named_rows(&table, u);
            let desc = if rows.is_empty() { "0".to_string() } else { rows.join("; ") };
            writeln!(out, "{label} (dim {}): {desc}", u.dim())?;
        }
        writeln!(out, "simple ideals of S: {}", cd.simple_ideals.len())?;
        for (idx, (ideal, comps)) in cd.simple_ideals.iter().zip(&cd.j_components).enumerate() {
            let dims: Vec<usize> = comps.iter().map(Subspace::dim).collect();
            writeln!(
                out,
                "  ideal {idx} (dim {}): {}; J components: {dims:?}",
                ideal.dim(),
                named_rows(&table, ideal).join("; ")
            )?;
        }
    }
    Ok(())
}

fn classify_cmd(files: &[PathBuf], as_json: bool, out: &mut dyn Write) -> Result<()> {
    let mut reports: Vec<Report> = Vec::new();
    for path in files {
        reports.push(build_report(&load(path)?)?);
    }
    if as_json {
        let values = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes"));
        print_json_batch(out, values.collect())?;
    } else {
        for (k, report) in reports.iter().enumerate() {
            if k > 0 {
                writeln!(out)?;
            }
            let c = &report.classification;
            writeln!(out, "algebra: {}", report.algebra)?;
            writeln!(out, "classification: {}", c.verdict)?;
            writeln!(
                out,
                "predicates: J=0:{} [S,E]=J:{} [J,R]=0:{} [S,R]=0:{}",
                c.predicates.j_zero,
                c.predicates.se_equals_j,
                c.predicates.jr_zero,
                c.predicates.sr_zero
            )?;
            writeln!(out, "Hom dimension: {}", c.hom_dimension)?;
            writeln!(out, "certified: {}", c.certified)?;
            if let Some(witness) = &c.witness {
                let line = match witness {
                    crate::report::WitnessReport::InnerConjugator { b, .. } => {
                        format!(
                            "inner conjugator b = {}",
                            crate::report::named_combination(b, &report.basis)
                        )
                    }
                    crate::report::WitnessReport::TwistAutomorphism { generators, .. } => {
                        format!(
                            "conjugating automorphism from {} exponential factor(s)",
                            generators.len()
                        )
                    }
                    crate::report::WitnessReport::NonConjugateTwist { .. } => {
                        "twisted Levi pair with a verified obstruction".to_string()
                    }
                    crate::report::WitnessReport::TwistPair { .. } => {
                        "twisted Levi pair outside the inner orbit".to_string()
                    }
                };
                writeln!(out, "witness: {line}")?;
            }
            for note in &c.notes {
                writeln!(out, "note: {note}")?;
            }
        }
    }
    Ok(())
}

/// Resolve the twist-map document against the computed Hom space: either a
/// coefficient vector in the canonical Hom basis, or explicit ambient
/// images of the Levi basis rows.
fn resolve_theta(
    map: &MapFile,
    homs: &crate::smodules::HomBasis,
    s: &Subspace,
    i: &Subspace,
) -> Result<LinearMap> {
    if let Some(coeffs) = &map.hom_coefficients {
        if coeffs.len() != homs.dim() {
            return Err(Error::Parse(format!(
                "field `hom_coefficients` has {} entries but the Hom space has dimension {}",
                coeffs.len(),
                homs.dim()
            )));
        }
        let parsed: Result<Vec<_>> = coeffs.iter().map(|c| crate::scalar::parse_scalar(c)).collect();
        return Ok(homs.linear_combination(&Vector::new(parsed?)));
    }
    let images = map.images.as_ref().expect("map file validated");
    if images.len() != s.dim() {
        return Err(Error::Parse(format!(
            "field `images` has {} rows but the Levi subalgebra has dimension {}",
            images.len(),
            s.dim()
        )));
    }
    let mut rows = Vec::with_capacity(images.len());
    for (r, row) in images.iter().enumerate() {
        if row.len() != i.ambient() {
            return Err(Error::Parse(format!(
                "field `images` row {r} has {} coordinates but the ambient dimension is {}",
                row.len(),
                i.ambient()
            )));
        }
        let parsed: Result<Vec<_>> = row.iter().map(|c| crate::scalar::parse_scalar(c)).collect();
        let ambient = Vector::new(parsed?);
        let coords = i
            .coordinates(&ambient)
            .ok_or(Error::NotAHomomorphism)?;
        rows.push(coords);
    }
    Ok(LinearMap::new(s.dim(), i.dim(), Matrix::from_rows(rows)))
}

fn conjugate_cmd(file: &Path, theta: &Path, as_json: bool, out: &mut dyn Write) -> Result<()> {
    let table = load(file)?;
    table.ensure_identity()?;
    let map_text = fs::read_to_string(theta)
        .map_err(|e| Error::Parse(format!("{}: {e}", theta.display())))?;
    let map_file = parse_map_file(&map_text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", theta.display())),
        other => other,
    })?;
    let rep = levi_subalgebra(&table)?;
    let homs = hom_space(&table, &rep.s, &rep.i)?;
    let tau = resolve_theta(&map_file, &homs, &rep.s, &rep.i)?;
    let b = find_inner_conjugator(&table, &rep.s, &tau)?;
    if as_json {
        print_json(
            out,
            &json!({
                "algebra": table.name(),
                "b": vector_json(&b),
                "tau": matrix_json(tau.matrix()),
                "verified": true,
            }),
        )?;
    } else {
        writeln!(out, "algebra: {}", table.name())?;
        writeln!(
            out,
            "inner conjugator: b = {}",
            render_combination(&b, table.basis_names())
        )?;
        writeln!(out, "exp(R_b) restricted to S equals id + tau: verified")?;
    }
    Ok(())
}

fn exp_cmd(file: &Path, element: &str, as_json: bool, out: &mut dyn Write) -> Result<()> {
    let table = load(file)?;
    table.ensure_identity()?;
    let coords = parse_coeff_list(element)?;
    if coords.len() != table.dim() {
        return Err(Error::Parse(format!(
            "argument `--element` has {} coordinates but the algebra has dimension {}",
            coords.len(),
            table.dim()
        )));
    }
    let a = Vector::new(coords);
    let e = table.right_mult(&a).exp_nilpotent()?;
    let automorphism = table.is_automorphism(&e);
    if as_json {
        print_json(
            out,
            &json!({
                "algebra": table.name(),
                "element": vector_json(&a),
                "matrix": matrix_json(e.matrix()),
                "automorphism": automorphism,
            }),
        )?;
    } else {
        writeln!(out, "algebra: {}", table.name())?;
        writeln!(
            out,
            "exp(R_a) for a = {}:",
            render_combination(&a, table.basis_names())
        )?;
        for r in 0..e.matrix().rows() {
            writeln!(out, "  {}", fmt_vector(&e.matrix().row(r)))?;
        }
        writeln!(out, "automorphism: {automorphism}")?;
    }
    Ok(())
}

fn fixtures_cmd(dir: &Path, as_json: bool, out: &mut dyn Write) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, table) in fixtures::embedded_corpus() {
        table.ensure_identity()?;
        let path = dir.join(format!("{name}.json"));
        fs::write(&path, render_algebra(&table))?;
        written.push(path.display().to_string());
    }
    if as_json {
        print_json(out, &json!({ "written": written }))?;
    } else {
        for path in &written {
            writeln!(out, "wrote {path}")?;
        }
    }
    Ok(())
}
