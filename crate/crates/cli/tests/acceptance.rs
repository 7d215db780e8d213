//! Exit gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use duskin_cli::{cmd_appendix_example, cmd_enumerate, cmd_verify, Budget, EnumerateFlags, Status, VerifyArgs};
use duskin_core::fincat::ordinal;
use duskin_core::freecell::{sigma, SigmaIndex};
use duskin_core::matset::{MatSet, MatSimplex};
use duskin_core::simplicial::{Interval, SimplicialSet};
use duskin_core::verify;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn enumerate(spec: &str, dim: usize, flags: EnumerateFlags) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let r = cmd_enumerate(spec, dim, flags, Budget::default(), &mut out);
    if r.status != Status::Ok {
        return Err(format!("enumerate {spec} --dim {dim}: {:?}", r.diagnostics));
    }
    Ok(String::from_utf8(out).expect("utf-8").lines().map(str::to_string).collect())
}

fn count(spec: &str, dim: usize) -> Result<usize, String> {
    let lines = enumerate(spec, dim, EnumerateFlags { nondegenerate: false, count_only: true })?;
    lines[0].parse().map_err(|e| format!("{e}"))
}

fn suite(name: &str, args: VerifyArgs) -> Result<serde_json::Value, String> {
    let r = cmd_verify(name, &args, Budget::default());
    if r.status != Status::Ok {
        return Err(format!("{name} {args:?}: {:?}", r.diagnostics.first()));
    }
    Ok(r.payload)
}

fn cat(spec: &str, dim: usize) -> VerifyArgs {
    VerifyArgs { cat: Some(spec.into()), dim: Some(dim), ..Default::default() }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("took {took:?}, limit {limit:?}"));
    }
    Ok(())
}

fn free_two_cell() -> Outcome {
    let start = Instant::now();
    for n in 1..=8 {
        let lines = enumerate("ordinal:1", n, EnumerateFlags { nondegenerate: true, count_only: false })?;
        let mut found: Vec<MatSimplex> =
            lines.iter().map(|l| serde_json::from_str(l)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let mut expected = vec![sigma(SigmaIndex::new(n, false)), sigma(SigmaIndex::new(n, true))];
        found.sort();
        expected.sort();
        if found != expected {
            return Err(format!("dimension {n}: {} simplices, not σ_n and σ'_n", found.len()));
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("n = 1..8, two each, {:?}", start.elapsed()))
}

fn face_tables() -> Outcome {
    let payload = suite("freecell-relations", VerifyArgs { max_m: Some(4), ..Default::default() })?;
    Ok(format!("m = 1..4, {} checks", payload["checked"]))
}

fn point_is_interval() -> Outcome {
    let mat = MatSet::new(ordinal(0).expect("ordinal"));
    let mut checks = 0;
    for n in 0..=10 {
        let c = count("ordinal:0", n)?;
        if c != n + 2 {
            return Err(format!("dimension {n}: {c} simplices"));
        }
        let simplices = mat.simplices(n);
        let mut chis: Vec<_> = simplices.iter().map(|s| s.type_of().chi(n)).collect();
        chis.sort();
        if chis != Interval.simplices(n).expect("enumerates") {
            return Err(format!("dimension {n}: types are not the χ_k"));
        }
        for s in &simplices {
            let chi = s.type_of().chi(n);
            for i in 0..=n {
                if n > 0 && mat.face(s, i).expect("face").type_of().chi(n - 1) != Interval.face(&chi, i).expect("face")
                {
                    return Err(format!("d_{i} does not commute with the type at {s:?}"));
                }
                if mat.degeneracy(s, i).expect("degeneracy").type_of().chi(n + 1)
                    != Interval.degeneracy(&chi, i).expect("degeneracy")
                {
                    return Err(format!("s_{i} does not commute with the type at {s:?}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("n + 2 simplices for n <= 10, {checks} face/degeneracy checks"))
}

fn simplicial_identities() -> Outcome {
    let mut total = 0;
    for spec in ["ordinal:0", "ordinal:1", "ordinal:2", "square"] {
        total += suite("simplicial-identities", cat(spec, 5))?["checked"].as_u64().unwrap_or(0);
    }
    Ok(format!("[0], [1], [2], [1]x[1] up to n = 5, {total} checks"))
}

fn coskeletal() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for spec in ["ordinal:1", "ordinal:2"] {
        let p = suite("coskeletal", cat(spec, 4))?;
        if p["counts"]["spheres"] != p["counts"]["simplices"] {
            return Err(format!("{spec}: spheres and 4-simplices differ"));
        }
        seen.push(format!("{spec}: {} spheres", p["counts"]["spheres"]));
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{}, {:?}", seen.join(", "), start.elapsed()))
}

fn oracle() -> Outcome {
    let mut seen = Vec::new();
    for spec in ["ordinal:0", "ordinal:1", "ordinal:2"] {
        let mut counts = Vec::new();
        for n in 0..=4 {
            let p = suite("phi-oracle", cat(spec, n))?;
            counts.push(p["counts"]["nerve"].to_string());
        }
        seen.push(format!("{spec}: {}", counts.join(" ")));
    }
    Ok(seen.join("; "))
}

fn pullback() -> Outcome {
    let mut seen = Vec::new();
    for spec in ["theta:[2|1,1]", "theta:[2|2,0]"] {
        let mut counts = Vec::new();
        for n in 0..=3 {
            let p = suite("phi-oracle", cat(spec, n))?;
            suite("pullback", cat(spec, n))?;
            counts.push(p["counts"]["tuples"].to_string());
        }
        seen.push(format!("{spec}: {}", counts.join(" ")));
    }
    Ok(seen.join("; "))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn bijection() -> Outcome {
    let mut instances = 0;
    for n in 1..=7 {
        let p = suite("bijection", VerifyArgs { n: Some(n), ..Default::default() })?;
        for k in 0..n {
            let got = p["counts"][format!("k={k}")].as_u64().unwrap_or(u64::MAX) as usize;
            if got != binomial(n - 1, k) {
                return Err(format!("n = {n}, k = {k}: {got} constrained triangulations"));
            }
        }
        instances += p["checked"].as_u64().unwrap_or(0);
    }
    Ok(format!("n = 1..7, {instances} round trips"))
}

fn appendix() -> Outcome {
    let r = cmd_appendix_example();
    if r.status != Status::Ok {
        return Err(format!("{:?}", r.diagnostics));
    }
    let display = serde_json::json!([["p02", "p01", "p00"], ["p12", "p11", "p10"]]);
    if r.payload["matrix"] != display {
        return Err(format!("reconstructed {}", r.payload["matrix"]));
    }
    if r.payload["shuffles"] != serde_json::json!(["VHH", "HVH", "HHV"]) {
        return Err(format!("paths {}", r.payload["shuffles"]));
    }
    Ok("p02 p01 p00 / p12 p11 p10".into())
}

fn two_skeleton() -> Outcome {
    let r = verify::two_skeleton(4);
    if !r.ok() {
        return Err(r.failures[0].clone());
    }
    Ok(format!("m = 1..4, {} vertex triples", r.checked))
}

fn retraction() -> Outcome {
    let mut total = 0;
    for spec in ["ordinal:0", "ordinal:1", "ordinal:2", "square"] {
        total += suite("degeneracy-retraction", cat(spec, 4))?["checked"].as_u64().unwrap_or(0);
    }
    Ok(format!("{total} simplices"))
}

fn mutations() -> Outcome {
    let mut mutated = 0;
    for seed in [0, 1, 2] {
        let args = VerifyArgs { seed, trials: Some(300), ..Default::default() };
        mutated += suite("functor-mutations", args)?["counts"]["mutated"].as_u64().unwrap_or(0);
    }
    Ok(format!("{mutated} mutations rejected"))
}

fn binary() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_duskin");
    let run = |args: &[&str]| Command::new(exe).args(args).output().map_err(|e| e.to_string());
    let args = ["enumerate", "theta:[2|1,1]", "--dim", "2", "--json"];
    let (a, b) = (run(&args)?, run(&args)?);
    if a.stdout != b.stdout || !a.status.success() {
        return Err("enumeration output is not reproducible".into());
    }
    let count = run(&["enumerate", "ordinal:1", "--dim", "5", "--nondegenerate", "--count-only"])?;
    if String::from_utf8_lossy(&count.stdout).trim() != "2" {
        return Err("free cell count is not 2".into());
    }
    let over = run(&["enumerate", "ordinal:1", "--dim", "11"])?;
    if over.status.code() != Some(2) {
        return Err(format!("over-budget run exited with {:?}", over.status.code()));
    }
    Ok("byte-identical reruns, exit codes follow status".into())
}

fn main() {
    let criteria: [Check; 13] = [
        ("criterion 1 (free 2-cell)", free_two_cell),
        ("criterion 2 (face tables)", face_tables),
        ("criterion 3 (Mat([0]) = Δ[1])", point_is_interval),
        ("criterion 4 (simplicial identities)", simplicial_identities),
        ("criterion 5 (3-coskeletal)", coskeletal),
        ("criterion 6 (nerve oracle)", oracle),
        ("criterion 7 (tuples and pullback)", pullback),
        ("criterion 8 (triangulations and shuffles)", bijection),
        ("criterion 9 (worked example)", appendix),
        ("criterion 10 (2-skeleton)", two_skeleton),
        ("property (degeneracy retraction)", retraction),
        ("property (functor mutations)", mutations),
        ("cli (determinism and exit codes)", binary),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance check(s) failed");
        std::process::exit(1);
    }
    println!("all acceptance checks passed");
}
