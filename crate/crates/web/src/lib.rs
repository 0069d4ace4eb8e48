//! Browser bindings. Each operation returns a JSON string; the plain
//! functions are usable natively and the `#[wasm_bindgen]` wrappers turn
//! errors into JS exceptions.

use alexsum_core::braid::{
    component_count, exponent_sum, parse_braid_word, BraidWord, CrossingSign,
};
use alexsum_core::hecke::{alexander_via_trace, generator_matrix};
use alexsum_core::hook::HookShape;
use alexsum_core::laurent::{to_alexander_t, to_conway, LaurentPoly};
use alexsum_core::oracle::cross_validate;
use alexsum_core::state_sum::{evaluate_dp, list_states, state_sum, EnumBounds, StateRowJson};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Debug, Serialize)]
pub struct MethodValues {
    /// Absent when the word is too long for exhaustive enumeration.
    pub statesum: Option<String>,
    pub trace: String,
    pub dp: String,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct ComputeView {
    pub word: String,
    pub strands: usize,
    pub exponent_sum: i64,
    pub components: usize,
    pub v: String,
    pub z: String,
    pub t: String,
    pub half_integer_t: bool,
    pub methods: MethodValues,
    /// `None` on a single strand, where there is no reduced Burau matrix.
    pub burau_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct MatrixView {
    pub n: usize,
    pub leg: usize,
    pub r: usize,
    pub inverse: bool,
    pub basis: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn word(text: &str, strands: u32) -> Result<BraidWord, String> {
    let strands = (strands > 0).then_some(strands as usize);
    parse_braid_word(text, strands).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn compute_view(text: &str, strands: u32) -> Result<ComputeView, String> {
    let w = word(text, strands)?;
    let err = |e: alexsum_core::Error| e.to_string();
    let dp = evaluate_dp(&w).map_err(err)?;
    let trace = alexander_via_trace(&w).map_err(err)?;
    let exhaustive: Option<LaurentPoly> = match state_sum(&w, &EnumBounds::default()) {
        Ok(p) => Some(p),
        Err(alexsum_core::Error::BoundExceeded { .. }) => None,
        Err(e) => return Err(e.to_string()),
    };
    let components = component_count(&w);
    let conway = to_conway(&dp).map_err(err)?;
    let alexander = to_alexander_t(&conway, components);
    let burau_agrees = if w.strands() >= 2 {
        Some(cross_validate(&w).map_err(err)?)
    } else {
        None
    };
    Ok(ComputeView {
        word: w.to_string(),
        strands: w.strands(),
        exponent_sum: exponent_sum(&w),
        components,
        v: dp.to_string(),
        z: conway.to_string(),
        t: alexander.to_string(),
        half_integer_t: alexander.has_half_integer_exponents(),
        methods: MethodValues {
            agree: trace == dp && exhaustive.as_ref().is_none_or(|p| *p == dp),
            statesum: exhaustive.map(|p| p.to_string()),
            trace: trace.to_string(),
            dp: dp.to_string(),
        },
        burau_agrees,
    })
}

pub fn compute_json(text: &str, strands: u32) -> Result<String, String> {
    to_json(&compute_view(text, strands)?)
}

pub fn states_json(text: &str, strands: u32) -> Result<String, String> {
    let w = word(text, strands)?;
    let rows = list_states(&w, &EnumBounds::default()).map_err(|e| e.to_string())?;
    to_json(&rows.iter().map(StateRowJson::from).collect::<Vec<_>>())
}

pub fn matrix_view(n: usize, leg: usize, r: usize, inverse: bool) -> Result<MatrixView, String> {
    let shape = HookShape::new(n, leg).map_err(|e| e.to_string())?;
    let sign = if inverse {
        CrossingSign::Negative
    } else {
        CrossingSign::Positive
    };
    let m = generator_matrix(shape, r, sign).map_err(|e| e.to_string())?;
    let dim = m.dimension();
    Ok(MatrixView {
        n,
        leg,
        r,
        inverse,
        basis: m.basis().iter().map(ToString::to_string).collect(),
        rows: (0..dim)
            .map(|i| (0..dim).map(|j| m.get(i, j).to_string()).collect())
            .collect(),
    })
}

pub fn hecke_matrix_json(n: usize, leg: usize, r: usize, inverse: bool) -> Result<String, String> {
    to_json(&matrix_view(n, leg, r, inverse)?)
}

/// Polynomial in v, z and t plus per-method values. `strands = 0` infers
/// the strand count from the word.
#[wasm_bindgen]
pub fn compute(word: &str, strands: u32) -> Result<String, JsError> {
    compute_json(word, strands).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn states(word: &str, strands: u32) -> Result<String, JsError> {
    states_json(word, strands).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hecke_matrix(n: u32, leg: u32, r: u32, inverse: bool) -> Result<String, JsError> {
    hecke_matrix_json(n as usize, leg as usize, r as usize, inverse).map_err(|e| JsError::new(&e))
}
