//! Deterministic JSON reports. Identical command, configuration, and
//! seed produce byte-identical output: struct fields serialize in
//! declaration order and every collection is built in a fixed order.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use wcx_core::complex::{euler_direct, WeightedComplex};
use wcx_core::cube::el_labeling_verify;
use wcx_core::homology::{reduced_betti_gf2, HOMOLOGY_MAX_N};
use wcx_core::identity::{s_decreasing_formula, s_direct, s_recursive, t_direct};
use wcx_core::ordered_partition::OrderedPartition;
use wcx_core::perm::Permutation;
use wcx_core::pfaffian::t_via_pfaffian;
use wcx_core::sample::{grid_lambdas, random_lambda, seeded_rng, LambdaShape};
use wcx_core::shelling::{
    decomposition_holds, lex_el_order, random_linear_extension, restrict_extension_to_facets,
    verify_shelling, ShellingReport,
};
use wcx_core::weight::{Rat, WeightVector};
use wcx_core::EnumerationCaps;

use crate::{IoError, IoResult};

pub const SCHEMA_VERSION: &str = "1.0";

/// One verified expectation inside a report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, expected: Value, actual: Value) -> Self {
        let pass = expected == actual;
        Check {
            name: name.to_string(),
            expected,
            actual,
            pass,
        }
    }
}

/// The envelope every command emits.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl JsonReport {
    fn new(command: &str, inputs: Value, results: Value, checks: Vec<Check>) -> Self {
        JsonReport {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Compact fixed-layout text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("inputs: {}\n", self.inputs));
        out.push_str(&format!("results: {}\n", self.results));
        for c in &self.checks {
            out.push_str(&format!(
                "check {}: {} (expected {}, actual {})\n",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.expected,
                c.actual
            ));
        }
        out
    }
}

/// Exact rational to JSON: integer when the denominator is one,
/// otherwise the string `"p/q"`.
pub fn rat_value(r: Rat) -> Value {
    if *r.denom() == 1 {
        json!(*r.numer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn rat_from_value(v: &Value) -> IoResult<Rat> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Rat::from_integer)
            .ok_or_else(|| IoError::Parse(format!("'{n}' is not an exact integer"))),
        Value::String(s) => crate::parse::parse_rat(s),
        other => Err(IoError::Parse(format!("'{other}' is not a rational"))),
    }
}

pub fn lambda_values(lambda: &WeightVector) -> Value {
    Value::Array(lambda.entries().iter().map(|&r| rat_value(r)).collect())
}

fn lambda_from_values(v: &Value) -> IoResult<WeightVector> {
    let entries = v
        .as_array()
        .ok_or_else(|| IoError::Parse("lambda is not an array".into()))?
        .iter()
        .map(rat_from_value)
        .collect::<IoResult<Vec<Rat>>>()?;
    WeightVector::new(entries).map_err(IoError::from)
}

fn perm_value(p: &Permutation) -> Value {
    Value::Array(p.entries().iter().map(|&v| json!(v)).collect())
}

fn partition_blocks(sigma: &OrderedPartition) -> Value {
    Value::Array(
        sigma
            .blocks()
            .iter()
            .map(|&b| {
                let mut elements = Vec::new();
                let mut m = b;
                while m != 0 {
                    elements.push(json!(m.trailing_zeros() + 1));
                    m &= m - 1;
                }
                Value::Array(elements)
            })
            .collect(),
    )
}

fn partition_from_blocks(n: usize, v: &Value) -> IoResult<OrderedPartition> {
    let blocks = v
        .as_array()
        .ok_or_else(|| IoError::Parse("face is not an array of blocks".into()))?
        .iter()
        .map(|block| {
            block
                .as_array()
                .ok_or_else(|| IoError::Parse("block is not an array".into()))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .filter(|&e| e >= 1 && e <= n as u64)
                        .map(|e| 1u32 << (e - 1))
                        .ok_or_else(|| IoError::Parse(format!("'{e}' is not an element")))
                })
                .try_fold(0u32, |acc, bit| bit.map(|b| acc | b))
        })
        .collect::<IoResult<Vec<u32>>>()?;
    OrderedPartition::new(n, blocks).map_err(IoError::from)
}

fn caps_value(caps: &EnumerationCaps) -> Value {
    json!({
        "max_partition_n": caps.max_partition_n,
        "max_matching_n": caps.max_matching_n,
    })
}

// ---------------------------------------------------------------- compute

/// Value selector for the `compute` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    S,
    T,
    TPfaffian,
    SRecursive,
    SDecreasing,
}

impl Which {
    pub const ALL: [Which; 5] = [
        Which::S,
        Which::T,
        Which::TPfaffian,
        Which::SRecursive,
        Which::SDecreasing,
    ];

    pub fn parse(token: &str) -> IoResult<Which> {
        match token {
            "S" => Ok(Which::S),
            "T" => Ok(Which::T),
            "Tpf" => Ok(Which::TPfaffian),
            "Srec" => Ok(Which::SRecursive),
            "Sdec" => Ok(Which::SDecreasing),
            other => Err(IoError::Parse(format!(
                "unknown value '{other}' (expected S, T, Tpf, Srec, or Sdec)"
            ))),
        }
    }

    fn key(self) -> &'static str {
        match self {
            Which::S => "S",
            Which::T => "T",
            Which::TPfaffian => "T_pfaffian",
            Which::SRecursive => "S_recursive",
            Which::SDecreasing => "S_decreasing",
        }
    }
}

/// Computes the requested values and cross-route agreement checks.
/// `S_decreasing` demands weakly decreasing weights unless it was
/// implied by `--all`, in which case it is skipped quietly.
pub fn compute_report(
    lambda: &WeightVector,
    which: &[Which],
    all: bool,
    caps: &EnumerationCaps,
) -> IoResult<JsonReport> {
    let n = lambda.n();
    let selected: Vec<Which> = if all {
        Which::ALL
            .into_iter()
            .filter(|w| *w != Which::SDecreasing || lambda.is_weakly_decreasing())
            .collect()
    } else {
        which.to_vec()
    };
    let mut values = serde_json::Map::new();
    let get = |w: Which| -> IoResult<i64> {
        Ok(match w {
            Which::S => s_direct(lambda, caps)?,
            Which::T => t_direct(lambda, caps)?,
            Which::TPfaffian => t_via_pfaffian(lambda)?,
            Which::SRecursive => s_recursive(lambda)?,
            Which::SDecreasing => s_decreasing_formula(lambda, caps)?,
        })
    };
    let mut computed: Vec<(Which, i64)> = Vec::new();
    for &w in &selected {
        let v = get(w)?;
        computed.push((w, v));
        values.insert(w.key().to_string(), json!(v));
    }
    let lookup = |w: Which| computed.iter().find(|(x, _)| *x == w).map(|&(_, v)| v);

    let mut checks = Vec::new();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    if let (Some(s), Some(t)) = (lookup(Which::S), lookup(Which::T)) {
        checks.push(Check::new(
            "main_identity_s_equals_sign_t",
            json!(sign * t),
            json!(s),
        ));
    }
    if let (Some(t), Some(tp)) = (lookup(Which::T), lookup(Which::TPfaffian)) {
        checks.push(Check::new("pfaffian_route", json!(t), json!(tp)));
    }
    if let (Some(s), Some(sr)) = (lookup(Which::S), lookup(Which::SRecursive)) {
        checks.push(Check::new("recursive_route", json!(s), json!(sr)));
    }
    if let (Some(s), Some(sd)) = (lookup(Which::S), lookup(Which::SDecreasing)) {
        checks.push(Check::new("ascent_run_route", json!(s), json!(sd)));
    }

    Ok(JsonReport::new(
        "compute",
        json!({ "lambda": lambda_values(lambda), "n": n, "caps": caps_value(caps) }),
        json!({ "n": n, "values": Value::Object(values) }),
        checks,
    ))
}

// ---------------------------------------------------------------- complex

/// Builds the complex and reports its combinatorics; with `export` the
/// full face list is included and can be parsed back.
pub fn complex_report(
    lambda: &WeightVector,
    export: bool,
    caps: &EnumerationCaps,
) -> IoResult<JsonReport> {
    let n = lambda.n();
    let complex = WeightedComplex::build(lambda, caps)?;
    let class = complex.classify();
    let euler = complex.euler_sum();
    let f_vector = complex.f_vector();

    let el = if !lambda.has_repeated_entries()
        && lambda.total() > Rat::from_integer(0)
        && n <= wcx_core::cube::EL_VERIFY_MAX_N
    {
        let report = el_labeling_verify(lambda)?;
        json!({
            "status": "verified",
            "ok": report.ok,
            "intervals_checked": report.intervals_checked,
        })
    } else if lambda.has_repeated_entries() {
        json!({ "status": "skipped", "reason": "repeated entries" })
    } else if lambda.total() <= Rat::from_integer(0) {
        json!({ "status": "skipped", "reason": "nonpositive total" })
    } else {
        json!({ "status": "skipped", "reason": "above size cap" })
    };

    let mut results = serde_json::Map::new();
    results.insert("n".into(), json!(n));
    results.insert("classification".into(), json!(class.to_string()));
    results.insert("f_vector".into(), json!(f_vector));
    results.insert("euler_sum".into(), json!(euler));
    results.insert("face_count".into(), json!(complex.faces().len()));
    results.insert(
        "facets".into(),
        Value::Array(complex.facets().iter().map(perm_value).collect()),
    );
    if export {
        results.insert(
            "faces".into(),
            Value::Array(
                complex
                    .faces()
                    .iter()
                    .map(|sigma| {
                        json!({
                            "blocks": partition_blocks(sigma),
                            "label": sigma.to_string(),
                        })
                    })
                    .collect(),
            ),
        );
    }
    results.insert("el_labeling".into(), el);

    let expected_euler = if lambda.all_positive() {
        if n.is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    };
    let mut checks = vec![Check::new(
        "euler_closed_form",
        json!(expected_euler),
        json!(euler),
    )];
    if n <= HOMOLOGY_MAX_N {
        let betti = reduced_betti_gf2(&complex)?;
        checks.push(Check::new(
            "classification_matches_homology",
            json!(true),
            json!(betti.matches_classification(&class)),
        ));
        results.insert("reduced_betti_gf2".into(), json!(betti.reduced));
    }

    Ok(JsonReport::new(
        "complex",
        json!({ "lambda": lambda_values(lambda), "n": n, "caps": caps_value(caps) }),
        Value::Object(results),
        checks,
    ))
}

/// Reconstructs the complex from an exported report.
pub fn parse_complex_report(text: &str) -> IoResult<WeightedComplex> {
    let report: JsonReport = serde_json::from_str(text)?;
    let lambda = lambda_from_values(&report.inputs["lambda"])?;
    let faces = report.results["faces"]
        .as_array()
        .ok_or_else(|| IoError::Parse("report has no exported face list".into()))?
        .iter()
        .map(|f| partition_from_blocks(lambda.n(), &f["blocks"]))
        .collect::<IoResult<Vec<OrderedPartition>>>()?;
    WeightedComplex::from_parts(lambda, faces).map_err(IoError::from)
}

// ------------------------------------------------------------------ shell

/// Where the facet order comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSource {
    /// A seeded random linear extension of the weak Bruhat order,
    /// applied through the decreasing relabeling.
    LinearExtensionSample,
    /// Lexicographic order of the chain label words; requires distinct
    /// weights (or perturbation).
    LexEl,
    /// An explicit order, e.g. read from a file.
    Explicit(Vec<Permutation>),
}

/// Builds the complex, derives or accepts a facet order, verifies the
/// shelling, and reports restrictions and homology facets.
pub fn shell_report(
    lambda: &WeightVector,
    source: &OrderSource,
    seed: u64,
    perturb: bool,
    caps: &EnumerationCaps,
) -> IoResult<JsonReport> {
    if lambda.total() <= Rat::from_integer(0) {
        return Err(IoError::Core(wcx_core::Error::NonpositiveTotal));
    }
    let complex = WeightedComplex::build(lambda, caps)?;

    let mut sorting: Option<Permutation> = None;
    let mut perturbed = false;
    let (source_name, order): (&str, Vec<Permutation>) = match source {
        OrderSource::LinearExtensionSample => {
            // Shell through the decreasing relabeling, then pull the
            // order back to the original labels.
            let tau = if lambda.is_weakly_decreasing() {
                Permutation::identity(lambda.n())
            } else {
                lambda.sorting_permutation_decreasing()
            };
            let relabeled = complex.relabeled(&tau);
            let mut rng = seeded_rng(seed);
            let extension = random_linear_extension(lambda.n(), &mut rng);
            let relabeled_order = restrict_extension_to_facets(&extension, &relabeled);
            let tau_inverse = tau.inverse();
            let order = relabeled_order
                .iter()
                .map(|p| tau_inverse.compose(p))
                .collect();
            if tau != Permutation::identity(lambda.n()) {
                sorting = Some(tau);
            }
            ("linear-extension-sample", order)
        }
        OrderSource::LexEl => {
            let label_weights = if lambda.has_repeated_entries() {
                if !perturb {
                    return Err(IoError::Core(wcx_core::Error::RepeatedWeights));
                }
                perturbed = true;
                lambda.perturbed_distinct()?
            } else {
                lambda.clone()
            };
            let order = lex_el_order(&label_weights, complex.facets())?;
            ("lex-el", order)
        }
        OrderSource::Explicit(order) => ("file", order.clone()),
    };

    let report = verify_shelling(&complex, &order)?;
    let results = shelling_results(source_name, &sorting, perturbed, &order, &report);
    let checks = vec![Check::new(
        "is_shelling",
        json!(true),
        json!(report.is_shelling),
    )];
    Ok(JsonReport::new(
        "shell",
        json!({
            "lambda": lambda_values(lambda),
            "n": lambda.n(),
            "order_source": source_name,
            "seed": seed,
            "caps": caps_value(caps),
        }),
        results,
        checks,
    ))
}

fn shelling_results(
    source_name: &str,
    sorting: &Option<Permutation>,
    perturbed: bool,
    order: &[Permutation],
    report: &ShellingReport,
) -> Value {
    json!({
        "order_source": source_name,
        "sorting_permutation": sorting.as_ref().map(perm_value),
        "perturbed": perturbed,
        "facet_order": Value::Array(order.iter().map(perm_value).collect()),
        "is_shelling": report.is_shelling,
        "first_violation": report.first_violation.as_ref().map(|(index, face)| {
            json!({ "prefix_index": index, "face": partition_blocks(face), "label": face.to_string() })
        }),
        "restrictions": Value::Array(
            report
                .restrictions
                .iter()
                .map(|r| json!({ "blocks": partition_blocks(r), "label": r.to_string() }))
                .collect(),
        ),
        "homology_facets": Value::Array(report.homology_facets.iter().map(perm_value).collect()),
    })
}

// ------------------------------------------------------------------ sweep

/// Population selector for sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Population {
    /// Every vector over the given value grid.
    Grid(Vec<Rat>),
    /// Seeded random vectors.
    Random(usize),
}

/// Runs the invariant suites over a population of weight vectors:
/// the main identity with all routes, the pair-swap identities at
/// every position, the Euler closed form, and decomposition validity.
/// Each failing vector is reported verbatim.
pub fn sweep_report(
    n: usize,
    population: &Population,
    seed: u64,
    caps: &EnumerationCaps,
) -> IoResult<JsonReport> {
    let lambdas: Vec<WeightVector> = match population {
        Population::Grid(values) => {
            if values.is_empty() {
                return Err(IoError::Parse("empty grid".into()));
            }
            grid_lambdas(n, values)
        }
        Population::Random(count) => {
            let mut rng = seeded_rng(seed);
            (0..*count)
                .map(|_| random_lambda(&mut rng, n, LambdaShape::Any))
                .collect()
        }
    };

    let mut failures: Vec<Value> = Vec::new();
    let mut suite_failures = [0u64; 4];
    let suite_names = ["main_identity", "recursion", "euler_closed_form", "decomposition"];
    for lambda in &lambdas {
        let mut failed = [false; 4];

        let s = s_direct(lambda, caps)?;
        let t = t_direct(lambda, caps)?;
        let tp = t_via_pfaffian(lambda)?;
        let sr = s_recursive(lambda)?;
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        failed[0] = !(s == sign * t && tp == t && sr == s);

        // Pair-swap identities at every position, reusing the sums of
        // the unswapped vector.
        for i in 1..n {
            let swapped = lambda.swapped(i)?;
            let mu = lambda.without_pair(i)?;
            let indicator = (lambda.get(i) + lambda.get(i + 1) > Rat::from_integer(0)) as i64;
            let s_ok = s + s_direct(&swapped, caps)? == 2 * indicator * s_direct(&mu, caps)?;
            let t_ok = t + t_direct(&swapped, caps)? == 2 * indicator * t_direct(&mu, caps)?;
            if !(s_ok && t_ok) {
                failed[1] = true;
            }
        }

        let expected_euler = if lambda.all_positive() { sign } else { 0 };
        failed[2] = euler_direct(lambda, caps)? != expected_euler;

        failed[3] = !decomposition_holds(lambda, caps)?;

        for (k, &f) in failed.iter().enumerate() {
            if f {
                suite_failures[k] += 1;
            }
        }
        if failed.iter().any(|&f| f) {
            let which: Vec<&str> = suite_names
                .iter()
                .zip(failed.iter())
                .filter(|(_, &f)| f)
                .map(|(name, _)| *name)
                .collect();
            failures.push(json!({ "lambda": lambda_values(lambda), "suites": which }));
        }
    }

    let population_desc = match population {
        Population::Grid(values) => json!({
            "kind": "grid",
            "values": Value::Array(values.iter().map(|&v| rat_value(v)).collect()),
        }),
        Population::Random(count) => json!({ "kind": "random", "count": count, "seed": seed }),
    };
    let checks = suite_names
        .iter()
        .zip(suite_failures.iter())
        .map(|(name, &f)| Check::new(&format!("{name}_failures"), json!(0), json!(f)))
        .collect();
    Ok(JsonReport::new(
        "sweep",
        json!({
            "n": n,
            "population": population_desc,
            "seed": seed,
            "caps": caps_value(caps),
        }),
        json!({
            "cases": lambdas.len(),
            "failures": failures,
            "suites": suite_names
                .iter()
                .zip(suite_failures.iter())
                .map(|(name, &f)| json!({ "suite": name, "failures": f }))
                .collect::<Vec<Value>>(),
        }),
        checks,
    ))
}

// ------------------------------------------------------------------ tests
