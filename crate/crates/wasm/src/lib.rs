//! Browser bindings for the weighted-complex toolkit. Each function
//! takes the weight vector as text, returns a JSON string, and never
//! throws: parse and precondition problems come back as the same
//! machine-readable error object the CLI prints.
//!
//! The complex payload carries a demo-only `geometry` section (float
//! coordinates for drawing); the embedded `report` object itself stays
//! exact, like the CLI output.

use wasm_bindgen::prelude::*;

use serde_json::{json, Value};

use wcx_core::complex::WeightedComplex;
use wcx_core::cube::face_to_chain;
use wcx_core::weight::WeightVector;
use wcx_core::EnumerationCaps;
use wcx_io::parse::parse_lambda;
use wcx_io::report::{complex_report, compute_report, shell_report, OrderSource};
use wcx_io::IoResult;

/// Ground sets larger than this are refused in the demo; the CLI
/// handles the bigger desk-scale runs.
const DEMO_MAX_N: usize = 7;

fn demo_caps() -> EnumerationCaps {
    EnumerationCaps {
        max_partition_n: DEMO_MAX_N,
        ..EnumerationCaps::default()
    }
}

fn parse_demo_lambda(text: &str) -> IoResult<WeightVector> {
    let lambda = parse_lambda(text)?;
    if lambda.n() > DEMO_MAX_N {
        return Err(wcx_io::IoError::Core(wcx_core::Error::CapExceeded {
            what: "demo ground set",
            n: lambda.n(),
            cap: DEMO_MAX_N,
        }));
    }
    Ok(lambda)
}

fn or_error(result: IoResult<Value>) -> String {
    match result {
        Ok(value) => serde_json::to_string(&value).expect("demo payloads serialize"),
        Err(err) => err.to_json(),
    }
}

/// Builds the complex and returns `{report, geometry}`. The geometry
/// (vertex coordinates in the sum-zero hyperplane, edges and triangles
/// as vertex index lists) is present for `2 <= n <= 4`, where the
/// complex embeds in at most three dimensions.
#[wasm_bindgen]
pub fn complex_json(lambda_text: &str) -> String {
    or_error((|| {
        let lambda = parse_demo_lambda(lambda_text)?;
        let report = complex_report(&lambda, false, &demo_caps())?;
        let complex = WeightedComplex::build(&lambda, &demo_caps())?;
        Ok(json!({
            "report": serde_json::to_value(&report)?,
            "geometry": geometry_payload(&complex),
        }))
    })())
}

/// Evaluates every applicable route and returns the compute report.
#[wasm_bindgen]
pub fn identity_json(lambda_text: &str) -> String {
    or_error((|| {
        let lambda = parse_demo_lambda(lambda_text)?;
        let report = compute_report(&lambda, &[], true, &demo_caps())?;
        Ok(serde_json::to_value(&report)?)
    })())
}

/// Derives a facet order (`"linear-extension-sample"` or `"lex-el"`,
/// perturbing repeated weights for the latter), verifies the shelling,
/// and returns `{report, animation}`: per-step facet and restriction
/// vertex indices for the drawing.
#[wasm_bindgen]
pub fn shelling_json(lambda_text: &str, source: &str, seed: u64) -> String {
    or_error((|| {
        let lambda = parse_demo_lambda(lambda_text)?;
        let source = match source {
            "lex-el" => OrderSource::LexEl,
            _ => OrderSource::LinearExtensionSample,
        };
        let perturb = matches!(source, OrderSource::LexEl) && lambda.has_repeated_entries();
        let report = shell_report(&lambda, &source, seed, perturb, &demo_caps())?;
        let complex = WeightedComplex::build(&lambda, &demo_caps())?;
        let animation = animation_payload(&lambda, &complex, &report)?;
        Ok(json!({
            "report": serde_json::to_value(&report)?,
            "animation": animation,
        }))
    })())
}

/// Vertices of the complex are the proper prefix subsets; a subset `S`
/// sits at the centered indicator `chi_S/|S| - 1/n`, expressed in an
/// orthonormal basis of the sum-zero hyperplane (n - 1 coordinates).
fn geometry_payload(complex: &WeightedComplex) -> Value {
    let n = complex.n();
    if !(2..=4).contains(&n) || complex.is_empty() {
        return Value::Null;
    }
    let lambda = complex.lambda();
    let mut vertex_masks: Vec<u32> = Vec::new();
    let mut vertex_labels: Vec<String> = Vec::new();
    let mut edges: Vec<[usize; 2]> = Vec::new();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for sigma in complex.faces() {
        if sigma.num_blocks() == 2 {
            let mask = sigma.block(0);
            vertex_masks.push(mask);
            vertex_labels.push(subset_label(mask));
        }
    }
    let index_of = |mask: u32| vertex_masks.iter().position(|&m| m == mask).unwrap();
    for sigma in complex.faces() {
        let chain = face_to_chain(sigma, lambda).expect("faces have chains");
        match chain.len() {
            2 => edges.push([index_of(chain[0]), index_of(chain[1])]),
            3 => triangles.push([
                index_of(chain[0]),
                index_of(chain[1]),
                index_of(chain[2]),
            ]),
            _ => {}
        }
    }
    let coordinates: Vec<Vec<f64>> = vertex_masks
        .iter()
        .map(|&mask| hyperplane_coordinates(n, mask))
        .collect();
    json!({
        "dimension": n - 1,
        "vertex_labels": vertex_labels,
        "coordinates": coordinates,
        "edges": edges,
        "triangles": triangles,
    })
}

fn subset_label(mask: u32) -> String {
    let mut label = String::new();
    let mut m = mask;
    while m != 0 {
        label.push_str(&(m.trailing_zeros() + 1).to_string());
        m &= m - 1;
    }
    label
}

fn hyperplane_coordinates(n: usize, mask: u32) -> Vec<f64> {
    let size = mask.count_ones() as f64;
    let point: Vec<f64> = (0..n)
        .map(|e| {
            let inside = mask >> e & 1 == 1;
            (if inside { 1.0 / size } else { 0.0 }) - 1.0 / n as f64
        })
        .collect();
    // Helmert basis of the sum-zero hyperplane.
    (1..n)
        .map(|k| {
            let scale = 1.0 / ((k * (k + 1)) as f64).sqrt();
            let prefix: f64 = point.iter().take(k).sum();
            (prefix - point[k] * k as f64) * scale
        })
        .collect()
}

/// Per shelling step: the facet's vertex chain and its restriction
/// face's vertex chain (empty for the initial empty-face restriction).
fn animation_payload(
    lambda: &WeightVector,
    complex: &WeightedComplex,
    report: &wcx_io::report::JsonReport,
) -> IoResult<Value> {
    let n = complex.n();
    if !(2..=4).contains(&n) {
        return Ok(Value::Null);
    }
    let mut vertex_masks: Vec<u32> = Vec::new();
    for sigma in complex.faces() {
        if sigma.num_blocks() == 2 {
            vertex_masks.push(sigma.block(0));
        }
    }
    let index_of = |mask: u32| vertex_masks.iter().position(|&m| m == mask);

    let order = report.results["facet_order"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let restrictions = report.results["restrictions"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let mut steps = Vec::new();
    for (facet, restriction) in order.iter().zip(restrictions.iter()) {
        let entries: Vec<u8> = facet
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as u8)
            .collect();
        let perm = wcx_core::Permutation::new(entries).expect("report facets are permutations");
        let sigma = wcx_core::OrderedPartition::from_permutation(&perm);
        let chain = face_to_chain(&sigma, lambda)?;
        let facet_vertices: Vec<usize> = chain.iter().filter_map(|&m| index_of(m)).collect();
        let restriction_blocks = restriction["blocks"].as_array().cloned().unwrap_or_default();
        let mut acc = 0u32;
        let mut restriction_vertices = Vec::new();
        for block in restriction_blocks.iter().take(restriction_blocks.len().saturating_sub(1)) {
            for e in block.as_array().unwrap() {
                acc |= 1 << (e.as_u64().unwrap() - 1);
            }
            if let Some(idx) = index_of(acc) {
                restriction_vertices.push(idx);
            }
        }
        steps.push(json!({
            "facet": facet,
            "facet_vertices": facet_vertices,
            "restriction_vertices": restriction_vertices,
        }));
    }
    Ok(json!({ "steps": steps }))
}
