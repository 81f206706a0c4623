//! On-disk text format for algebra tables and twist-map inputs.
//!
//! An algebra document is JSON with four fields: `name` (string), `dim`
//! (integer), `basis` (array of distinct identifiers, length `dim`), and
//! `products` (sparse array of `{left, right, result}` entries, where
//! `result` pairs a rational coefficient string `"p"` or `"p/q"` with a
//! basis name). Every pair not listed multiplies to zero. Rendering is
//! canonical: entries ordered by (left, right) basis position, result
//! terms ordered by basis position, zero products omitted; parsing the
//! rendered form reproduces the table coefficient-exactly.

use std::collections::HashSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::matrix::Vector;
use crate::scalar::{parse_scalar, render_scalar, Scalar};

/// Dimension cap applied while parsing, overridable via the MAX_DIM
/// environment variable. Guards against accidentally feeding the exact
/// solvers an input far beyond desk scale.
pub const DEFAULT_MAX_DIM: usize = 64;

pub fn max_dim() -> usize {
    match std::env::var("MAX_DIM") {
        Ok(text) => text.trim().parse().unwrap_or(DEFAULT_MAX_DIM),
        Err(_) => DEFAULT_MAX_DIM,
    }
}

/// Serialized form of one nonzero product `[left, right] = Σ coef · name`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<(String, String)>,
}

/// Top-level algebra document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Vec<ProductEntry>,
}

/// Twist-map document for conjugacy runs: exactly one of the two fields.
///
/// `hom_coefficients` gives coordinates in the canonical basis of the
/// computed Hom space; `images` gives one ambient row per basis vector of
/// the computed Levi subalgebra, in subspace basis order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom_coefficients: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Vec<String>>>,
}

pub fn parse_algebra(text: &str) -> Result<AlgebraTable> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid algebra document: {e}")))?;
    algebra_from_file(&file)
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<AlgebraTable> {
    if file.dim != file.basis.len() {
        return Err(Error::Parse(format!(
            "field `dim` is {} but `basis` lists {} names",
            file.dim,
            file.basis.len()
        )));
    }
    let limit = max_dim();
    if file.dim > limit {
        return Err(Error::Parse(format!(
            "field `dim` is {} which exceeds the MAX_DIM limit of {limit}",
            file.dim
        )));
    }
    let mut seen_names = HashSet::new();
    for name in &file.basis {
        if name.is_empty() {
            return Err(Error::Parse(
                "field `basis` contains an empty name".into(),
            ));
        }
        if !seen_names.insert(name.as_str()) {
            return Err(Error::Parse(format!(
                "field `basis` repeats the name {name:?}"
            )));
        }
    }
    let index_of = |name: &str| -> Result<usize> {
        file.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "field `products` references unknown basis name {name:?}"
                ))
            })
    };
    let mut seen_pairs = HashSet::new();
    let mut entries = Vec::with_capacity(file.products.len());
    for entry in &file.products {
        let i = index_of(&entry.left)?;
        let j = index_of(&entry.right)?;
        if !seen_pairs.insert((i, j)) {
            return Err(Error::Parse(format!(
                "field `products` lists the pair ({}, {}) twice",
                entry.left, entry.right
            )));
        }
        let mut value = Vector::zero(file.dim);
        for (coef, name) in &entry.result {
            let k = index_of(name)?;
            let c = parse_scalar(coef)?;
            value.set(k, value.get(k) + c);
        }
        entries.push((i, j, value));
    }
    AlgebraTable::from_entries(file.name.clone(), file.basis.clone(), &entries)
}

pub fn algebra_to_file(a: &AlgebraTable) -> AlgebraFile {
    let names = a.basis_names();
    let mut products = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let value = a.product(i, j);
            if value.is_zero() {
                continue;
            }
            let result = value
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (render_scalar(c), names[k].clone()))
                .collect();
            products.push(ProductEntry {
                left: names[i].clone(),
                right: names[j].clone(),
                result,
            });
        }
    }
    AlgebraFile {
        name: a.name().to_string(),
        dim: a.dim(),
        basis: names.to_vec(),
        products,
    }
}

pub fn render_algebra(a: &AlgebraTable) -> String {
    let mut text = serde_json::to_string_pretty(&algebra_to_file(a))
        .expect("algebra document always serializes");
    text.push('\n');
    text
}

pub fn parse_map_file(text: &str) -> Result<MapFile> {
    let file: MapFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid map document: {e}")))?;
    match (&file.hom_coefficients, &file.images) {
        (Some(_), None) | (None, Some(_)) => Ok(file),
        _ => Err(Error::Parse(
            "map document must set exactly one of `hom_coefficients` or `images`".into(),
        )),
    }
}

/// Parse a comma-separated list of rational coordinates, as accepted on the
/// command line for ambient elements.
pub fn parse_coeff_list(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(parse_scalar).collect()
}
