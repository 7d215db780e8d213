//! Command implementations behind the `duskin` binary.
//!
//! Every command returns a [`CommandResult`]; enumerations additionally
//! stream one JSON value per line into the writer they are given.

use std::io::{self, Write};

use duskin_core::fincat::{enumerate_functors, ordinal, product, validate_functor, FinCategory, Functor};
use duskin_core::freecell::{free_cell, sigma, verify_face_relations, SigmaIndex};
use duskin_core::matset::{grid_domain, MatSet, MatSimplex};
use duskin_core::paths::{
    appendix_example, enumerate_shuffles, enumerate_triangulations, filter_constrained, reconstruct_matrix,
    triangulation_to_shuffle, LabeledPath, Shuffle,
};
use duskin_core::theta2::{monotone_type_vectors, parse_theta2, TupleSet, TupleSimplex};
use duskin_core::verify::{self, Report};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    pub fn ok(payload: Value) -> Self {
        CommandResult { status: Status::Ok, payload, diagnostics: vec![] }
    }

    pub fn error(message: impl Into<String>) -> Self {
        CommandResult { status: Status::Error, payload: Value::Null, diagnostics: vec![message.into()] }
    }

    /// `ok` if the report has no failures, otherwise a violation naming the
    /// suite and its first counterexample.
    pub fn from_report(report: Report) -> Self {
        let diagnostics: Vec<String> = report.failures.iter().map(|f| format!("{}: {f}", report.suite)).collect();
        let status = if diagnostics.is_empty() { Status::Ok } else { Status::Violation };
        CommandResult { status, payload: serde_json::to_value(&report).expect("reports serialize"), diagnostics }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

/// Dimension caps. Matrix enumerations default to `n <= 10`; the
/// brute-force nerve never goes past 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub mat: usize,
    pub oracle: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { mat: 10, oracle: 4 }
    }
}

impl Budget {
    /// `--budget n` caps matrix dimensions at `n` and the nerve at
    /// `min(n, 4)`.
    pub fn with_max_dim(n: usize) -> Self {
        Budget { mat: n, oracle: n.min(4) }
    }

    fn check_mat(&self, dim: usize) -> Result<(), String> {
        if dim > self.mat {
            return Err(format!("dimension {dim} exceeds the budget of {}; raise it with --budget", self.mat));
        }
        Ok(())
    }

    fn check_oracle(&self, dim: usize) -> Result<(), String> {
        if dim > self.oracle {
            return Err(format!("nerve dimension {dim} exceeds the oracle budget of {}", self.oracle));
        }
        Ok(())
    }
}

/// A category named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategorySpec {
    /// `ordinal:m`, the ordinal `[m]` (`m >= -1`).
    Ordinal(isize),
    /// `square`, `[1] × [1]`.
    Square,
    /// `theta:[r|n1,...,nr]`, the factors `[n_1], ..., [n_r]`.
    Theta(Vec<usize>),
    /// `file:path.json`, a category in the JSON encoding.
    File(String),
}

impl CategorySpec {
    pub fn parse(text: &str) -> Result<Self, String> {
        let text = text.trim();
        if text == "square" {
            return Ok(CategorySpec::Square);
        }
        if let Some(m) = text.strip_prefix("ordinal:") {
            let m: isize = m.trim().parse().map_err(|_| format!("bad ordinal in {text:?}"))?;
            if m < -1 {
                return Err(format!("ordinal {m} is below -1"));
            }
            return Ok(CategorySpec::Ordinal(m));
        }
        if let Some(obj) = text.strip_prefix("theta:") {
            let (_, widths) = parse_theta2(obj).map_err(|e| e.to_string())?;
            return Ok(CategorySpec::Theta(widths));
        }
        if let Some(path) = text.strip_prefix("file:") {
            return Ok(CategorySpec::File(path.to_string()));
        }
        Err(format!("unknown category spec {text:?}; expected ordinal:m, square, theta:[r|n1,...] or file:path"))
    }

    /// The factor categories: one for a plain category, `r` for `theta`.
    pub fn factors(&self) -> Result<Vec<FinCategory>, String> {
        Ok(match self {
            CategorySpec::Ordinal(m) => vec![ordinal(*m).map_err(|e| e.to_string())?],
            CategorySpec::Square => {
                let one = ordinal(1).expect("ordinal");
                vec![product(&one, &one)]
            }
            CategorySpec::Theta(widths) => widths.iter().map(|&w| ordinal(w as isize).expect("ordinal")).collect(),
            CategorySpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
                vec![serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?]
            }
        })
    }

    fn single(&self) -> Result<FinCategory, String> {
        match self {
            CategorySpec::Theta(_) => Err("this command takes a single category, not a theta object".into()),
            _ => Ok(self.factors()?.remove(0)),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateFlags {
    pub nondegenerate: bool,
    pub count_only: bool,
}

/// Streams the `dim`-simplices of `Mat(D)` (or the tuple simplices of a
/// theta object) as JSON lines, one type block at a time, or writes just
/// the count.
pub fn cmd_enumerate(
    spec: &str,
    dim: usize,
    flags: EnumerateFlags,
    budget: Budget,
    out: &mut dyn Write,
) -> CommandResult {
    let spec = match CategorySpec::parse(spec) {
        Ok(s) => s,
        Err(e) => return CommandResult::error(e),
    };
    if let Err(e) = budget.check_mat(dim) {
        return CommandResult::error(e);
    }
    let factors = match spec.factors() {
        Ok(f) => f,
        Err(e) => return CommandResult::error(e),
    };
    let result = match spec {
        CategorySpec::Theta(_) => enumerate_tuples(factors, dim, flags, out),
        _ => enumerate_mat(factors.into_iter().next().expect("one factor"), dim, flags, out),
    };
    match result {
        Ok(count) => CommandResult::ok(json!({ "dim": dim, "count": count })),
        Err(e) => CommandResult::error(e.to_string()),
    }
}

fn enumerate_mat(d: FinCategory, n: usize, flags: EnumerateFlags, out: &mut dyn Write) -> io::Result<usize> {
    let mat = MatSet::new(d);
    let mut count = 0;
    for k in -1..=n as isize {
        for s in mat.simplices_of_type(n, k) {
            if flags.nondegenerate && !mat.is_nondegenerate(&s) {
                continue;
            }
            count += 1;
            if !flags.count_only {
                writeln!(out, "{}", serde_json::to_string(&s)?)?;
            }
        }
    }
    if flags.count_only {
        writeln!(out, "{count}")?;
    }
    Ok(count)
}

fn enumerate_tuples(ds: Vec<FinCategory>, n: usize, flags: EnumerateFlags, out: &mut dyn Write) -> io::Result<usize> {
    let set = TupleSet::new(ds);
    let mut count = 0;
    for ks in monotone_type_vectors(set.r(), n) {
        let blocks: Vec<Vec<MatSimplex>> =
            set.factors().iter().zip(&ks).map(|(m, &k)| m.simplices_of_type(n, k)).collect();
        if blocks.iter().any(Vec::is_empty) {
            continue;
        }
        // odometer over the product of the blocks
        let mut idx = vec![0; blocks.len()];
        loop {
            let parts = blocks.iter().zip(&idx).map(|(b, &i)| b[i].clone()).collect();
            let t = TupleSimplex::new(parts).expect("monotone types");
            if !flags.nondegenerate || set.is_nondegenerate(&t) {
                count += 1;
                if !flags.count_only {
                    writeln!(out, "{}", serde_json::to_string(&t)?)?;
                }
            }
            let mut pos = blocks.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < blocks[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    if flags.count_only {
        writeln!(out, "{count}")?;
    }
    Ok(count)
}

/// `theta2 --widths 2,0,1`: enumeration over `[r | n_1, ..., n_r]`.
pub fn cmd_theta2(
    widths: &[usize],
    dim: usize,
    flags: EnumerateFlags,
    budget: Budget,
    out: &mut dyn Write,
) -> CommandResult {
    if widths.is_empty() {
        return CommandResult::error("--widths needs at least one entry");
    }
    let list: Vec<String> = widths.iter().map(usize::to_string).collect();
    cmd_enumerate(&format!("theta:[{}|{}]", widths.len(), list.join(",")), dim, flags, budget, out)
}

pub const SUITES: &[&str] = &[
    "simplicial-identities",
    "coskeletal",
    "phi-oracle",
    "pullback",
    "freecell-relations",
    "freecell-uniqueness",
    "bijection",
    "degeneracy-retraction",
    "functor-mutations",
];

/// Parameters for `verify`; unset fields take per-suite defaults.
#[derive(Clone, Debug, Default)]
pub struct VerifyArgs {
    pub cat: Option<String>,
    pub dim: Option<usize>,
    pub max_m: Option<usize>,
    pub n: Option<usize>,
    pub trials: Option<usize>,
    pub seed: u64,
}

pub fn cmd_verify(suite: &str, args: &VerifyArgs, budget: Budget) -> CommandResult {
    match run_suite(suite, args, budget) {
        Ok(report) => CommandResult::from_report(report),
        Err(e) => CommandResult::error(e),
    }
}

fn run_suite(suite: &str, args: &VerifyArgs, budget: Budget) -> Result<Report, String> {
    let cat = |default: &str| CategorySpec::parse(args.cat.as_deref().unwrap_or(default));
    match suite {
        "simplicial-identities" => {
            let dim = args.dim.unwrap_or(5);
            budget.check_mat(dim)?;
            Ok(verify::simplicial_identities(&cat("ordinal:1")?.single()?, dim))
        }
        "coskeletal" => {
            let dim = args.dim.unwrap_or(4);
            budget.check_mat(dim)?;
            if dim < 4 {
                return Err("coskeletality is checked in dimension 4 and above".into());
            }
            Ok(verify::coskeletal(&cat("ordinal:1")?.single()?, dim))
        }
        "phi-oracle" => {
            let dim = args.dim.unwrap_or(3);
            budget.check_oracle(dim)?;
            Ok(verify::phi_oracle(&cat("ordinal:1")?.factors()?, dim))
        }
        "pullback" => {
            let dim = args.dim.unwrap_or(3);
            budget.check_mat(dim)?;
            Ok(verify::pullback(&cat("theta:[2|1,1]")?.factors()?, dim))
        }
        "freecell-relations" => Ok(verify::freecell_relations(args.max_m.unwrap_or(4))),
        "freecell-uniqueness" => {
            let dim = args.dim.unwrap_or(8);
            budget.check_mat(dim)?;
            Ok(verify::freecell_uniqueness(dim))
        }
        "bijection" => {
            let n = args.n.unwrap_or(6);
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            Ok(verify::bijection(n))
        }
        "degeneracy-retraction" => {
            let dim = args.dim.unwrap_or(4);
            budget.check_mat(dim)?;
            Ok(verify::degeneracy_retraction(&cat("ordinal:1")?.single()?, dim))
        }
        "functor-mutations" => Ok(functor_mutations(args.seed, args.trials.unwrap_or(500))),
        other => Err(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))),
    }
}

/// Every enumerated functor `[k] × [l]^op -> D` validates, and changing a
/// single entry of its object or morphism map never does. The targets are
/// thin, so any such change breaks an endpoint.
pub fn functor_mutations(seed: u64, trials: usize) -> Report {
    let mut report = Report { suite: "functor-mutations".into(), ..Default::default() };
    let one = ordinal(1).expect("ordinal");
    let targets = [one.clone(), ordinal(2).expect("ordinal"), product(&one, &one)];
    let shapes = [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut constructed = 0;
    let mut mutated = 0;
    for d in &targets {
        for &(k, l) in &shapes {
            let domain = grid_domain(k, l);
            let functors = enumerate_functors(&domain, d);
            for f in &functors {
                constructed += 1;
                if let Err(e) = validate_functor(&domain, d, f) {
                    report.failures.push(format!("constructed functor {f:?} into {d:?} fails: {e}"));
                }
            }
            let Some(_) = functors.first() else { continue };
            for _ in 0..trials {
                let f = functors.choose(&mut rng).expect("non-empty");
                let Some(g) = mutate(f, d, &mut rng) else { continue };
                mutated += 1;
                if validate_functor(&domain, d, &g).is_ok() {
                    report.failures.push(format!("mutation {g:?} of {f:?} still validates"));
                }
            }
        }
    }
    report.checked = constructed + mutated;
    report.counts.insert("constructed".into(), constructed);
    report.counts.insert("mutated".into(), mutated);
    report
}

fn mutate(f: &Functor, d: &FinCategory, rng: &mut ChaCha8Rng) -> Option<Functor> {
    let mut g = f.clone();
    if rng.gen_bool(0.5) {
        if d.num_objects() < 2 {
            return None;
        }
        let i = rng.gen_range(0..g.obj_map.len());
        let shift = rng.gen_range(1..d.num_objects());
        g.obj_map[i] = (g.obj_map[i] + shift) % d.num_objects();
    } else {
        if d.num_morphisms() < 2 || g.mor_map.is_empty() {
            return None;
        }
        let i = rng.gen_range(0..g.mor_map.len());
        let shift = rng.gen_range(1..d.num_morphisms());
        g.mor_map[i] = (g.mor_map[i] + shift) % d.num_morphisms();
    }
    Some(g)
}

/// Constrained triangulations of the `(n+1)`-gon against shuffles. With
/// `k`, lists the pairs for that cut; with `verify`, also runs the
/// round-trip check over every cut.
pub fn cmd_bijection(n: usize, k: Option<usize>, check: bool) -> CommandResult {
    if n == 0 {
        return CommandResult::error("--n must be at least 1");
    }
    let mut payload = serde_json::Map::new();
    payload.insert("n".into(), json!(n));
    let mut diagnostics = Vec::new();
    match k {
        Some(k) if k >= n => return CommandResult::error(format!("--k must be below n = {n}")),
        Some(k) => {
            let constrained = filter_constrained(&enumerate_triangulations(n), k);
            let mut pairs = Vec::new();
            for t in &constrained {
                match triangulation_to_shuffle(t, k) {
                    Ok(s) => pairs.push(json!({ "triangles": t.triangles(), "shuffle": s })),
                    Err(e) => diagnostics.push(format!("bijection: k = {k}: {e}")),
                }
            }
            payload.insert("k".into(), json!(k));
            payload.insert("count".into(), json!(constrained.len()));
            payload.insert("shuffles".into(), json!(enumerate_shuffles(k, n - 1 - k).len()));
            payload.insert("pairs".into(), Value::Array(pairs));
        }
        None => {
            let all = enumerate_triangulations(n);
            let counts: Vec<usize> = (0..n).map(|k| filter_constrained(&all, k).len()).collect();
            payload.insert("triangulations".into(), json!(all.len()));
            payload.insert("per_k".into(), json!(counts));
        }
    }
    if check {
        let report = verify::bijection(n);
        diagnostics.extend(report.failures.iter().map(|f| format!("bijection: {f}")));
        payload.insert("verified".into(), json!(report.checked));
    }
    let status = if diagnostics.is_empty() { Status::Ok } else { Status::Violation };
    CommandResult { status, payload: Value::Object(payload), diagnostics }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CategoryInput {
    Spec(String),
    Table(FinCategory),
}

#[derive(Clone, Debug, Deserialize)]
pub struct PathInput {
    pub steps: String,
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

/// Input of `reconstruct`: a category, the matrix shape and its labeled
/// monotone paths.
#[derive(Clone, Debug, Deserialize)]
pub struct ReconstructInput {
    pub category: CategoryInput,
    pub n: usize,
    pub k: usize,
    pub paths: Vec<PathInput>,
}

pub fn cmd_reconstruct(input: &str) -> CommandResult {
    let input: ReconstructInput = match serde_json::from_str(input) {
        Ok(i) => i,
        Err(e) => return CommandResult::error(format!("bad input: {e}")),
    };
    let d = match input.category {
        CategoryInput::Table(d) => d,
        CategoryInput::Spec(s) => match CategorySpec::parse(&s).and_then(|s| s.single()) {
            Ok(d) => d,
            Err(e) => return CommandResult::error(e),
        },
    };
    let mut labeled = Vec::new();
    for p in input.paths {
        let s = match Shuffle::from_steps(&p.steps) {
            Ok(s) => s,
            Err(e) => return CommandResult::error(e.to_string()),
        };
        labeled.push((s, LabeledPath { objects: p.objects, arrows: p.arrows }));
    }
    match reconstruct_matrix(&d, input.n, input.k, &labeled) {
        Ok(m) => CommandResult::ok(json!({ "matrix": m, "display": m.to_string() })),
        Err(e) => CommandResult {
            status: Status::Violation,
            payload: Value::Null,
            diagnostics: vec![format!("reconstruction: {e}")],
        },
    }
}

pub fn cmd_appendix_example() -> CommandResult {
    match appendix_example() {
        Ok(ex) => {
            let diagnostics = if ex.matches() {
                vec![]
            } else {
                vec![format!("appendix-example: reconstructed {:?}, expected {:?}", ex.matrix, ex.expected)]
            };
            let status = if diagnostics.is_empty() { Status::Ok } else { Status::Violation };
            CommandResult { status, payload: serde_json::to_value(&ex).expect("serializes"), diagnostics }
        }
        Err(e) => CommandResult::error(e.to_string()),
    }
}

/// `freecell --check-relations`: the face tables for `m <= max_m`.
pub fn cmd_freecell_relations(max_m: usize) -> CommandResult {
    let mut payload = serde_json::Map::new();
    let mut diagnostics = Vec::new();
    for m in 1..=max_m {
        let rep = verify_face_relations(m);
        payload.insert(format!("m={m}"), json!(rep.checked));
        diagnostics.extend(rep.failures.iter().map(|f| format!("face relation, m = {m}: {f:?}")));
    }
    let status = if diagnostics.is_empty() { Status::Ok } else { Status::Violation };
    CommandResult { status, payload: Value::Object(payload), diagnostics }
}

/// `freecell --list-nondegenerate`: the non-degenerate simplices of
/// `Mat([1])` in one dimension, named where they are `σ_n` or `σ'_n`.
pub fn cmd_freecell_list(dim: usize, budget: Budget) -> CommandResult {
    if let Err(e) = budget.check_mat(dim) {
        return CommandResult::error(e);
    }
    let mat = free_cell();
    let names = [SigmaIndex::new(dim, false), SigmaIndex::new(dim, true)];
    let mut listed = Vec::new();
    let mut diagnostics = Vec::new();
    for s in mat.simplices(dim).into_iter().filter(|s| mat.is_nondegenerate(s)) {
        let name = names.iter().find(|&&i| sigma(i) == s).map(ToString::to_string);
        if name.is_none() {
            diagnostics.push(format!("free cell: unexpected non-degenerate simplex {s}"));
        }
        listed.push(json!({ "name": name, "display": s.to_string(), "simplex": s }));
    }
    if listed.len() != 2 {
        diagnostics.push(format!("free cell: {} non-degenerate {dim}-simplices, expected 2", listed.len()));
    }
    let status = if diagnostics.is_empty() { Status::Ok } else { Status::Violation };
    CommandResult { status, payload: json!({ "dim": dim, "simplices": listed }), diagnostics }
}
