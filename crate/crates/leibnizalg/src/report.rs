//! Machine-readable analysis report: one document per algebra collecting
//! the computed dimensions, series lengths, Hom-space dimension, and the
//! conjugacy classification with its witness. All coefficients appear as
//! exact rational strings, so a report survives a serialize/parse round
//! trip unchanged.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{render_combination, AlgebraTable};
use crate::conjugacy::{
    classify, e_subspace, Classification, Generator, Obstruction, Predicates, Witness,
};
use crate::error::{Error, Result};
use crate::levi::levi_subalgebra;
use crate::matrix::{Matrix, Vector};
use crate::radicals::{series, SeriesKind};
use crate::scalar::{parse_scalar, render_scalar};
use crate::smodules::{canonical_decomposition, hom_image_sum, hom_space};
use crate::subspace::Subspace;

/// Ranks of the canonical subspaces. `k`, `g`, `q` are absent when the
/// module splitting could not be certified over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimensions {
    pub l: usize,
    pub i: usize,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub e: usize,
    pub j: usize,
    pub k: Option<usize>,
    pub g: Option<usize>,
    pub q: Option<usize>,
}

/// Number of strictly decreasing terms each series produces before
/// stabilizing, starting from the whole algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesLengths {
    pub derived: usize,
    pub lower_central: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateReport {
    pub j_zero: bool,
    pub se_equals_j: bool,
    pub jr_zero: bool,
    pub sr_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GeneratorReport {
    RightExp { a: Vec<String> },
    TwistExp { a: Vec<String>, theta: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ObstructionReport {
    ImageHitsRadical {
        image_element: Vec<String>,
        radical_element: Vec<String>,
        product: Vec<String>,
    },
    RigidCentralizer {
        p: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum WitnessReport {
    InnerConjugator {
        theta_index: usize,
        tau: Vec<Vec<String>>,
        b: Vec<String>,
    },
    TwistAutomorphism {
        theta_index: usize,
        s_twisted: Vec<Vec<String>>,
        generators: Vec<GeneratorReport>,
        matrix: Vec<Vec<String>>,
    },
    NonConjugateTwist {
        theta_index: usize,
        s_twisted: Vec<Vec<String>>,
        obstruction: ObstructionReport,
    },
    TwistPair {
        theta_index: usize,
        s_twisted: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: String,
    pub predicates: PredicateReport,
    pub hom_dimension: usize,
    pub certified: bool,
    pub witness: Option<WitnessReport>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: String,
    pub basis: Vec<String>,
    pub dimensions: Dimensions,
    pub series: SeriesLengths,
    pub hom_dimension: usize,
    pub classification: ClassificationReport,
    pub timing_micros: u64,
}

fn vector_strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(render_scalar).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| vector_strings(&m.row(i))).collect()
}

fn subspace_strings(u: &Subspace) -> Vec<Vec<String>> {
    matrix_strings(u.basis())
}

impl From<&Predicates> for PredicateReport {
    fn from(p: &Predicates) -> Self {
        PredicateReport {
            j_zero: p.j_zero,
            se_equals_j: p.se_equals_j,
            jr_zero: p.jr_zero,
            sr_zero: p.sr_zero,
        }
    }
}

impl From<&Generator> for GeneratorReport {
    fn from(g: &Generator) -> Self {
        match g {
            Generator::RightExp { a } => GeneratorReport::RightExp { a: vector_strings(a) },
            Generator::TwistExp { a, theta } => GeneratorReport::TwistExp {
                a: vector_strings(a),
                theta: matrix_strings(theta.matrix()),
            },
        }
    }
}

impl From<&Obstruction> for ObstructionReport {
    fn from(o: &Obstruction) -> Self {
        match o {
            Obstruction::ImageHitsRadical { image_element, radical_element, product } => {
                ObstructionReport::ImageHitsRadical {
                    image_element: vector_strings(image_element),
                    radical_element: vector_strings(radical_element),
                    product: vector_strings(product),
                }
            }
            Obstruction::RigidCentralizer { p } => {
                ObstructionReport::RigidCentralizer { p: vector_strings(p) }
            }
        }
    }
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::InnerConjugator { theta_index, tau, b } => WitnessReport::InnerConjugator {
                theta_index: *theta_index,
                tau: matrix_strings(tau.matrix()),
                b: vector_strings(b),
            },
            Witness::TwistAutomorphism { theta_index, s_twisted, auto } => {
                WitnessReport::TwistAutomorphism {
                    theta_index: *theta_index,
                    s_twisted: subspace_strings(s_twisted),
                    generators: auto.generator_log().iter().map(Into::into).collect(),
                    matrix: matrix_strings(auto.map().matrix()),
                }
            }
            Witness::NonConjugateTwist { theta_index, s_twisted, obstruction } => {
                WitnessReport::NonConjugateTwist {
                    theta_index: *theta_index,
                    s_twisted: subspace_strings(s_twisted),
                    obstruction: obstruction.into(),
                }
            }
            Witness::TwistPair { theta_index, s_twisted } => WitnessReport::TwistPair {
                theta_index: *theta_index,
                s_twisted: subspace_strings(s_twisted),
            },
        }
    }
}

impl From<&Classification> for ClassificationReport {
    fn from(c: &Classification) -> Self {
        ClassificationReport {
            verdict: c.verdict.to_string(),
            predicates: (&c.predicates).into(),
            hom_dimension: c.hom_dimension,
            certified: c.certified,
            witness: c.witness.as_ref().map(Into::into),
            notes: c.notes.clone(),
        }
    }
}

/// Run the full analysis pipeline on a verified table and collect the
/// result into one report.
pub fn build_report(table: &AlgebraTable) -> Result<Report> {
    let start = Instant::now();
    table.ensure_identity()?;
    let rep = levi_subalgebra(table)?;
    let full = table.full_space();
    let derived = series(table, &full, SeriesKind::Derived)?;
    let lower_central = series(table, &full, SeriesKind::LowerCentral)?;
    let homs = hom_space(table, &rep.s, &rep.i)?;
    let j = hom_image_sum(table, &rep.s, &rep.i)?;
    let e = e_subspace(table, &rep.s)?;
    let (k, g, q) = match canonical_decomposition(table, &rep.s) {
        Ok(cd) => (Some(cd.k.dim()), Some(cd.g.dim()), Some(cd.q.dim())),
        Err(Error::NonSplit(_)) => (None, None, None),
        Err(other) => return Err(other),
    };
    let classification = classify(table)?;
    Ok(Report {
        algebra: table.name().to_string(),
        basis: table.basis_names().to_vec(),
        dimensions: Dimensions {
            l: table.dim(),
            i: rep.i.dim(),
            n: rep.n.dim(),
            r: rep.r.dim(),
            s: rep.s.dim(),
            e: e.dim(),
            j: j.dim(),
            k,
            g,
            q,
        },
        series: SeriesLengths {
            derived: derived.len(),
            lower_central: lower_central.len(),
        },
        hom_dimension: homs.dim(),
        classification: (&classification).into(),
        timing_micros: start.elapsed().as_micros() as u64,
    })
}

/// Render a coefficient-string vector against basis names, falling back to
/// the raw bracketed list when the strings do not parse or the lengths
/// disagree (possible only for hand-edited documents).
pub fn named_combination(coeffs: &[String], names: &[String]) -> String {
    let parsed: Option<Vec<_>> = coeffs.iter().map(|c| parse_scalar(c).ok()).collect();
    match parsed {
        Some(v) if v.len() == names.len() => render_combination(&Vector::new(v), names),
        _ => format!("[{}]", coeffs.join(", ")),
    }
}

/// Human-readable rendering of a report, one labeled line per field group.
pub fn render_text(report: &Report) -> String {
    let d = &report.dimensions;
    let opt = |x: Option<usize>| match x {
        Some(v) => v.to_string(),
        None => "-".to_string(),
    };
    let mut out = String::new();
    out.push_str(&format!("algebra: {}\n", report.algebra));
    out.push_str(&format!(
        "dimensions: L={} I={} N={} R={} S={} E={} J={} K={} G={} Q={}\n",
        d.l,
        d.i,
        d.n,
        d.r,
        d.s,
        d.e,
        d.j,
        opt(d.k),
        opt(d.g),
        opt(d.q)
    ));
    out.push_str(&format!(
        "series lengths: derived={} lower_central={}\n",
        report.series.derived, report.series.lower_central
    ));
    out.push_str(&format!("Hom dimension: {}\n", report.hom_dimension));
    let c = &report.classification;
    out.push_str(&format!("classification: {}\n", c.verdict));
    out.push_str(&format!(
        "predicates: J=0:{} [S,E]=J:{} [J,R]=0:{} [S,R]=0:{}\n",
        c.predicates.j_zero, c.predicates.se_equals_j, c.predicates.jr_zero, c.predicates.sr_zero
    ));
    out.push_str(&format!("certified: {}\n", c.certified));
    match &c.witness {
        Some(WitnessReport::InnerConjugator { b, .. }) => {
            out.push_str(&format!(
                "witness: inner conjugator b = {}\n",
                named_combination(b, &report.basis)
            ));
        }
        Some(WitnessReport::TwistAutomorphism { generators, .. }) => {
            out.push_str(&format!(
                "witness: conjugating automorphism from {} exponential factor(s)\n",
                generators.len()
            ));
        }
        Some(WitnessReport::NonConjugateTwist { obstruction, .. }) => {
            let kind = match obstruction {
                ObstructionReport::ImageHitsRadical { .. } => "twist image acts on the radical",
                ObstructionReport::RigidCentralizer { .. } => "rigid centralizer direction",
            };
            out.push_str(&format!("witness: non-conjugate twisted pair ({kind})\n"));
        }
        Some(WitnessReport::TwistPair { theta_index, .. }) => {
            out.push_str(&format!(
                "witness: non-inner twisted pair from Hom basis map {theta_index}\n"
            ));
        }
        None => {}
    }
    for note in &c.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!("time: {} us\n", report.timing_micros));
    out
}
