//! Browser bindings: every exported function takes and returns JSON strings
//! so the page needs no generated type glue.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use tolattice::blocks::factor_lattice;
use tolattice::fca::{concepts, tolerance_context, verify_factor_isomorphism};
use tolattice::io::{lattice_from_json, LatticeFile};
use tolattice::named;
use tolattice::tolerance::{enumerate_tolerances, tolerance_generated_by};
use tolattice::{FiniteLattice, Relation};

/// A lattice ready to draw: covers by index, and each element's height.
#[derive(Debug, Serialize)]
pub struct Diagram {
    pub name: String,
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub heights: Vec<usize>,
}

impl Diagram {
    fn new(lat: &FiniteLattice, labels: Vec<String>) -> Self {
        Diagram {
            name: lat.name().to_string(),
            labels,
            covers: lat.covers().to_vec(),
            heights: (0..lat.n()).map(|x| lat.height(x)).collect(),
        }
    }

    fn of(lat: &FiniteLattice) -> Self {
        Self::new(lat, lat.names().to_vec())
    }
}

#[derive(Debug, Serialize)]
pub struct ToleranceSummary {
    /// Pairs `x < y` (by index) that are related, besides the diagonal.
    pub pairs: Vec<(usize, usize)>,
    pub blocks: usize,
}

#[derive(Debug, Serialize)]
pub struct FactorView {
    pub pairs: Vec<(usize, usize)>,
    pub blocks: Vec<Vec<String>>,
    pub factor: Diagram,
    pub concepts: Diagram,
    pub isomorphic: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn lattice_by_name(name: &str) -> Result<FiniteLattice, String> {
    named::all()
        .into_iter()
        .find(|l| l.name() == name)
        .ok_or_else(|| format!("unknown lattice {name:?}"))
}

fn lattice_from_input(input: &str) -> Result<FiniteLattice, String> {
    if input.trim_start().starts_with('{') {
        lattice_from_json(input).map_err(|e| e.to_string())
    } else {
        lattice_by_name(input.trim())
    }
}

fn parse_pairs(lat: &FiniteLattice, pairs_json: &str) -> Result<Vec<(usize, usize)>, String> {
    let pairs: Vec<(usize, usize)> = serde_json::from_str(pairs_json).map_err(|e| e.to_string())?;
    match pairs.iter().find(|&&(x, y)| x >= lat.n() || y >= lat.n()) {
        Some(p) => Err(format!("pair {p:?} out of range for {} elements", lat.n())),
        None => Ok(pairs),
    }
}

fn upper_pairs(t: &Relation) -> Vec<(usize, usize)> {
    t.upper_pairs().collect()
}

/// Named lattices as `[{name, elements, covers}]` plus drawing data.
pub fn named_lattices_json() -> String {
    let all: Vec<(LatticeFile, Diagram)> =
        named::all().iter().map(|l| (LatticeFile::from_lattice(l), Diagram::of(l))).collect();
    to_json(&all)
}

/// Every tolerance of a lattice given by name or as lattice JSON.
pub fn tolerances_json(lattice: &str) -> Result<String, String> {
    let lat = lattice_from_input(lattice)?;
    let tols = enumerate_tolerances(&lat).map_err(|e| e.to_string())?;
    let out: Result<Vec<ToleranceSummary>, String> = tols
        .iter()
        .map(|t| {
            let f = factor_lattice(&lat, t).map_err(|e| e.to_string())?;
            Ok(ToleranceSummary { pairs: upper_pairs(t), blocks: f.len() })
        })
        .collect();
    Ok(to_json(&out?))
}

/// The smallest tolerance containing the given index pairs.
pub fn generate_tolerance_json(lattice: &str, pairs_json: &str) -> Result<String, String> {
    let lat = lattice_from_input(lattice)?;
    let t = tolerance_generated_by(&lat, &parse_pairs(&lat, pairs_json)?);
    Ok(to_json(&upper_pairs(&t)))
}

/// Blocks, factor lattice and concept lattice for the tolerance generated
/// by the given pairs.
pub fn factor_view_json(lattice: &str, pairs_json: &str) -> Result<String, String> {
    let lat = lattice_from_input(lattice)?;
    let t = tolerance_generated_by(&lat, &parse_pairs(&lat, pairs_json)?);
    let f = factor_lattice(&lat, &t).map_err(|e| e.to_string())?;
    let cl = tolerance_context(&lat, &t).and_then(|k| concepts(&k)).map_err(|e| e.to_string())?;
    let iso = verify_factor_isomorphism(&lat, &t).map_err(|e| e.to_string())?;
    let view = FactorView {
        pairs: upper_pairs(&t),
        blocks: f.blocks.iter().map(|b| b.members.ones().map(|x| lat.names()[x].clone()).collect()).collect(),
        factor: Diagram::of(&f.lattice),
        concepts: Diagram::new(&cl.lattice, (0..cl.len()).map(|i| cl.label(i)).collect()),
        isomorphic: iso.holds(),
    };
    Ok(to_json(&view))
}

#[wasm_bindgen(js_name = namedLattices)]
pub fn named_lattices() -> String {
    named_lattices_json()
}

#[wasm_bindgen]
pub fn tolerances(lattice: &str) -> Result<String, JsError> {
    tolerances_json(lattice).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = generateTolerance)]
pub fn generate_tolerance(lattice: &str, pairs_json: &str) -> Result<String, JsError> {
    generate_tolerance_json(lattice, pairs_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = factorView)]
pub fn factor_view(lattice: &str, pairs_json: &str) -> Result<String, JsError> {
    factor_view_json(lattice, pairs_json).map_err(|e| JsError::new(&e))
}
