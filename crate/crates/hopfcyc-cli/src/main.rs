mod golden;
mod problem;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfcyc::cohomology::{cohomology, periodic, periodic_cyclic_lie, sayd_precondition, LieKind};
use hopfcyc::complexes::lie::LieComplex;
use hopfcyc::complexes::ComplexHandle;
use hopfcyc::exact::Mat;
use hopfcyc::hopf::{builtin_hopf, HopfError};
use hopfcyc::lie::{builtin_lie, BuiltinLie, LieAlgebra, MatchedPair};
use hopfcyc::sayd::{builtin_sayd, solve_ayd_coactions, SaydData};
use serde_json::{json, Value};

use problem::{parse_problem, InputError, Problem};

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Exact Hopf-cyclic and Lie algebra cohomology computations")]
struct Cli {
    /// Hopf degree cap for all truncated computations.
    #[arg(long, global = true, env = "HOPFCYC_MAX_DEGREE", default_value_t = 6)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every validator that applies to the problem file.
    Validate { path: PathBuf },
    /// Solve for all AYD coactions compatible with the given module.
    SolveCoactions { path: PathBuf },
    /// Compute cohomology of the problem's Lie algebra with its coefficients.
    Cohomology {
        path: PathBuf,
        #[arg(long, value_enum)]
        complex: ComplexKind,
        #[arg(long, value_enum, default_value = "both")]
        parity: ParityArg,
    },
    /// Verify a named identity exactly.
    Golden {
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Print a built-in Lie algebra, matched pair, Hopf algebra or coefficient module.
    Describe { name: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    Ce,
    Koszul,
    CyclicLie,
    Relative,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Both,
}

enum Failure {
    Input(String),
    Math(Value),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Validate { path } => load(path).and_then(|p| validate(&p, cli.max_degree)),
        Command::SolveCoactions { path } => load(path).and_then(|p| solve(&p)),
        Command::Cohomology { path, complex, parity } => load(path).and_then(|p| cohom(&p, *complex, *parity)),
        Command::Golden { list: true, .. } => Ok(list_goldens()),
        Command::Golden { name, .. } => run_golden(name.as_deref().unwrap_or_default(), cli.max_degree),
        Command::Describe { name } => describe(name, cli.max_degree),
    };
    match out {
        Ok(v) => {
            emit(v);
            ExitCode::SUCCESS
        }
        Err(Failure::Math(v)) => {
            emit(v);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(mut v: Value) {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(1));
    }
    let mut out = std::io::stdout().lock();
    // a closed pipe downstream is not an error worth reporting
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
}

fn load(path: &PathBuf) -> Result<Problem, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_problem(&text)?)
}

fn need_lie(p: &Problem) -> Result<&LieAlgebra, Failure> {
    p.lie.as_ref().ok_or_else(|| Failure::Input("the problem has no Lie algebra".into()))
}

fn check(name: &str, r: Result<(), String>) -> Value {
    match r {
        Ok(()) => json!({ "name": name, "ok": true }),
        Err(e) => json!({ "name": name, "ok": false, "detail": e }),
    }
}

fn validate(p: &Problem, max_degree: usize) -> Outcome {
    let mut checks = Vec::new();
    if let Some(g) = &p.lie {
        checks.push(check("lie", g.validate().map_err(|e| e.to_string())));
    }
    if let Some(mp) = &p.pair {
        checks.push(check("matched-pair", mp.validate().map_err(|e| e.to_string())));
    }
    if let Some(h) = &p.hopf {
        match builtin_hopf(&h.name, None, h.max_degree.unwrap_or(max_degree)) {
            Ok(b) => {
                checks.push(check("g-hopf", Ok(())));
                let r = b.canonical_mpi();
                checks.push(check("mpi", if r.ok() { Ok(()) } else { Err(r.to_string()) }));
            }
            Err(HopfError::Unknown(n)) => return Err(Failure::Input(format!("unknown built-in Hopf algebra `{n}`"))),
            Err(e) => checks.push(check("g-hopf", Err(e.to_string()))),
        }
    }
    if let (Some(g), Some(v)) = (&p.lie, &p.module) {
        for (name, r) in v.check_all(g) {
            checks.push(check(name, r.map_err(|e| e.to_string())));
        }
        let conil = v.conilpotency_index();
        checks.push(check("conilpotency", conil.map(|_| ()).ok_or_else(|| "the coaction is not locally conilpotent".to_string())));
    }
    if checks.is_empty() {
        return Err(Failure::Input("nothing to validate".into()));
    }
    let failures: Vec<Value> = checks.iter().filter(|c| c["ok"] != json!(true)).cloned().collect();
    let out = json!({ "command": "validate", "ok": failures.is_empty(), "checks": checks, "failures": failures });
    if failures.is_empty() {
        Ok(out)
    } else {
        for f in &failures {
            eprintln!("{}: {}", f["name"].as_str().unwrap_or(""), f["detail"].as_str().unwrap_or(""));
        }
        Err(Failure::Math(out))
    }
}

fn mat_json(m: &Mat) -> Value {
    json!(m.a.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn matrices_json(g: &LieAlgebra, ms: &[Mat]) -> Value {
    Value::Object(g.basis.iter().zip(ms).map(|(b, m)| (b.clone(), mat_json(m))).collect())
}

fn solve(p: &Problem) -> Outcome {
    let g = need_lie(p)?;
    let v = p.module.as_ref().ok_or_else(|| Failure::Input("solve-coactions needs a [module] section".into()))?;
    let sol = solve_ayd_coactions(g, &v.action);
    let basis: Vec<Value> = sol.basis_matrices().iter().map(|ms| matrices_json(g, ms)).collect();
    Ok(json!({
        "command": "solve-coactions",
        "lie": g.name,
        "module": v.basis,
        "parameters": sol.parameters(),
        "basis": basis,
        "commutation_residuals": sol.commutation_residuals,
        "given_coaction_in_family": sol.contains(&v.coaction),
    }))
}

fn module_or_trivial(p: &Problem, g: &LieAlgebra) -> SaydData {
    p.module.clone().unwrap_or_else(|| SaydData::trivial("C", vec!["1".into()], g.dim()))
}

fn labelled_json(l: &[(String, String)]) -> Value {
    json!(l.iter().map(|(k, c)| json!([k, c])).collect::<Vec<_>>())
}

fn graded_json(h: &ComplexHandle, parity: ParityArg, kind: &str) -> Result<Value, Failure> {
    let r = cohomology(h).map_err(|e| Failure::Math(json!({ "command": "cohomology", "error": e.to_string() })))?;
    let wanted = |q: usize| match parity {
        ParityArg::Both => true,
        ParityArg::Even => q % 2 == 0,
        ParityArg::Odd => q % 2 == 1,
    };
    let betti: serde_json::Map<String, Value> = r.betti.iter().enumerate().map(|(q, b)| (q.to_string(), json!(b))).collect();
    let reps: Vec<Value> = r
        .representatives
        .iter()
        .enumerate()
        .filter(|(q, _)| wanted(*q))
        .flat_map(|(q, rs)| rs.iter().map(move |l| json!({ "degree": q, "terms": labelled_json(l) })))
        .collect();
    let cocycles = r.raw.iter().enumerate().all(|(q, rs)| rs.iter().all(|v| h.out_map(q).map_or(true, |m| m.mul_vec(v).is_empty())));
    let even: usize = r.betti.iter().step_by(2).sum();
    let odd: usize = r.betti.iter().skip(1).step_by(2).sum();
    Ok(json!({
        "command": "cohomology",
        "complex": kind,
        "name": r.name,
        "betti": betti,
        "even": even,
        "odd": odd,
        "representatives": reps,
        "checks": [
            { "name": "d^2 = 0", "ok": true },
            { "name": "representatives are cocycles", "ok": cocycles },
        ],
    }))
}

fn periodic_json(h: &hopfcyc::complexes::PeriodicHandle, r: &hopfcyc::cohomology::PeriodicResult, parity: ParityArg, kind: &str) -> Value {
    use hopfcyc::cohomology::Parity;
    let mut reps = Vec::new();
    if parity != ParityArg::Odd {
        reps.extend(r.even_representatives.iter().map(|l| json!({ "parity": "even", "terms": labelled_json(l) })));
    }
    if parity != ParityArg::Even {
        reps.extend(r.odd_representatives.iter().map(|l| json!({ "parity": "odd", "terms": labelled_json(l) })));
    }
    let cocycles = r.even_raw.iter().all(|v| h.is_cocycle(Parity::Even, v)) && r.odd_raw.iter().all(|v| h.is_cocycle(Parity::Odd, v));
    let nontrivial = r.even_raw.iter().all(|v| !h.is_coboundary(Parity::Even, v)) && r.odd_raw.iter().all(|v| !h.is_coboundary(Parity::Odd, v));
    json!({
        "command": "cohomology",
        "complex": kind,
        "name": r.name,
        "even": r.even,
        "odd": r.odd,
        "representatives": reps,
        "checks": [
            { "name": "d^2 = 0", "ok": h.square_is_zero() },
            { "name": "representatives are cocycles", "ok": cocycles },
            { "name": "representatives are not coboundaries", "ok": nontrivial },
        ],
    })
}

fn cohom(p: &Problem, kind: ComplexKind, parity: ParityArg) -> Outcome {
    let g = need_lie(p)?;
    let v = module_or_trivial(p, g);
    let math = |e: String| Failure::Math(json!({ "command": "cohomology", "error": e }));
    if let Err(e) = g.validate() {
        return Err(math(e.to_string()));
    }
    if let Err(e) = v.check_module(g) {
        return Err(math(e.to_string()));
    }
    let c = LieComplex::new(g, &v);
    match kind {
        ComplexKind::Ce => {
            let h = c.ce_complex().map_err(|e| math(e.to_string()))?;
            graded_json(&h, parity, "ce")
        }
        ComplexKind::Koszul | ComplexKind::CyclicLie => {
            let lk = if kind == ComplexKind::Koszul { LieKind::Koszul } else { LieKind::Cyclic };
            let (h, r) = periodic_cyclic_lie(g, &v, lk).map_err(|e| math(e.to_string()))?;
            Ok(periodic_json(&h, &r, parity, if lk == LieKind::Koszul { "koszul" } else { "cyclic-lie" }))
        }
        ComplexKind::Relative => {
            let names = p.task.get("h").ok_or_else(|| Failure::Input("--complex relative needs `h` in [task]".into()))?;
            let mut idx = Vec::new();
            for n in problem::parse_list(names) {
                idx.push(g.index_of(&n).ok_or_else(|| Failure::Input(format!("`{n}` is not a basis element of {}", g.name)))?);
            }
            let h = c.relative_complex(&idx).map_err(|e| math(e.to_string()))?;
            let mut out = graded_json(&h, parity, "relative")?;
            if sayd_precondition(g, &v).is_ok() {
                let ph = c.relative_periodic(&idx).map_err(|e| math(e.to_string()))?;
                let pr = periodic(&ph).map_err(|e| math(e.to_string()))?;
                out["periodic"] = json!({ "even": pr.even, "odd": pr.odd });
            }
            Ok(out)
        }
    }
}

fn list_goldens() -> Value {
    let items: Vec<Value> = golden::GOLDENS.iter().map(|g| json!({ "name": g.name, "min_degree": g.min_degree, "identity": g.about })).collect();
    json!({ "command": "golden", "goldens": items })
}

fn run_golden(name: &str, max_degree: usize) -> Outcome {
    let g = golden::find(name).ok_or_else(|| Failure::Input(format!("unknown golden `{name}`; try --list")))?;
    if max_degree < g.min_degree {
        return Err(Failure::Input(format!("golden `{name}` needs --max-degree at least {}", g.min_degree)));
    }
    let started = std::time::Instant::now();
    let checks = golden::run(name, max_degree).map_err(Failure::Input)?;
    let ok = checks.iter().all(|c| c.ok);
    for c in checks.iter().filter(|c| !c.ok) {
        eprintln!("{}: {}", c.name, c.detail);
    }
    let out = json!({
        "command": "golden",
        "name": name,
        "ok": ok,
        "max_degree": max_degree,
        "seconds": started.elapsed().as_secs_f64(),
        "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    });
    if ok {
        Ok(out)
    } else {
        Err(Failure::Math(out))
    }
}

fn lie_json(g: &LieAlgebra) -> Value {
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let b = g.bracket_basis(i, j);
            if !b.is_empty() {
                brackets.push(format!("[{}, {}] = {}", g.basis[i], g.basis[j], g.format_vec(b)));
            }
        }
    }
    json!({ "name": g.name, "basis": g.basis, "brackets": brackets })
}

fn pair_json(mp: &MatchedPair) -> Value {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (xi, xn) in mp.g2.basis.iter().enumerate() {
        for (x, yn) in mp.g1.basis.iter().enumerate() {
            let l = mp.left_basis(xi, x);
            if !l.is_empty() {
                left.push(format!("{xn} ▷ {yn} = {}", mp.g1.format_vec(l)));
            }
            let r = mp.right_basis(xi, x);
            if !r.is_empty() {
                right.push(format!("{xn} ◁ {yn} = {}", mp.g2.format_vec(r)));
            }
        }
    }
    json!({ "g1": lie_json(&mp.g1), "g2": lie_json(&mp.g2), "left": left, "right": right, "sum": lie_json(&mp.double_crossed_sum()) })
}

fn describe(name: &str, max_degree: usize) -> Outcome {
    if let Ok(b) = builtin_lie(name, None) {
        return Ok(match b {
            BuiltinLie::Algebra(g) => json!({ "command": "describe", "kind": "lie-algebra", "lie": lie_json(&g) }),
            BuiltinLie::Pair(mp) => json!({ "command": "describe", "kind": "matched-pair", "pair": pair_json(&mp) }),
        });
    }
    match builtin_hopf(name, None, max_degree) {
        Ok(h) => {
            let gens: Vec<String> = h.generators().into_iter().map(|(n, _)| n).collect();
            let mpi = h.canonical_mpi();
            return Ok(json!({
                "command": "describe",
                "kind": "hopf-algebra",
                "name": h.name,
                "generators": gens,
                "lie": lie_json(h.lie()),
                "max_degree": max_degree,
                "monomials_up_to_cap": h.monomials(max_degree as u32).len(),
                "mpi": { "sigma": mpi.sigma, "delta": mpi.delta.iter().map(|(n, v)| json!([n, v.to_string()])).collect::<Vec<_>>(), "ok": mpi.ok() },
            }));
        }
        Err(HopfError::Unknown(_)) => {}
        Err(e) => return Err(Failure::Math(json!({ "command": "describe", "error": e.to_string() }))),
    }
    if let Ok((v, g)) = builtin_sayd(name, None) {
        let checks: Vec<Value> = v.check_all(&g).into_iter().map(|(n, r)| check(n, r.map_err(|e| e.to_string()))).collect();
        return Ok(json!({
            "command": "describe",
            "kind": "sayd-module",
            "name": v.name,
            "basis": v.basis,
            "lie": lie_json(&g),
            "action": matrices_json(&g, &v.action),
            "coaction": matrices_json(&g, &v.coaction),
            "conilpotency_index": v.conilpotency_index(),
            "checks": checks,
        }));
    }
    Err(Failure::Input(format!("unknown built-in `{name}`")))
}
