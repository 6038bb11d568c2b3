//! Subcommands. Each produces a JSON report and an exit code.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hmodpi::engine::{default_budget, Assignment};
use hmodpi::grassmann::{
    codim_comparison_check, envelope, tagged_sample, tilde_check_with_envelope, verify_h2,
    H2ModuleAlgebra,
};
use hmodpi::poly::{multilinearize, Family};
use hmodpi::rational::format_q;
use hmodpi::structure::trace_identity_check;
use hmodpi::{
    capelli_check, codimension, exp_estimate, exponent_formula, format_polynomial, is_identity_multilinear,
    kemer_witness_search, parse_polynomial, verify_hopf, verify_module_algebra, wedderburn_certify, Error,
    HPolynomial, KemerShape, Result, Var, WedderburnData, Q,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::format::{vector_strings, AlgebraFile, Loaded};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Hopf,
    Algebra,
}

#[derive(Debug, Parser)]
#[command(name = "hmodpi", version, about = "Polynomial identities of H-module algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    /// Work budget; defaults to HMODPI_BUDGET or the built-in value.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hopf axioms or the module-algebra axioms of a file.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Decide whether a polynomial is an identity.
    Identity {
        #[arg(long)]
        algebra: PathBuf,
        /// Polynomial text, or a file holding it.
        #[arg(long)]
        poly: String,
    },
    /// The codimension c_n.
    Codim {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Capelli-type check: alternating in t variables vanishes up to degree n.
    Capelli {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Bounded search for a non-identity of the given alternating shape.
    KemerSearch {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        s: usize,
        /// Number of small sets; defaults to the nilpotency index.
        #[arg(long)]
        mu: Option<usize>,
        /// Largest degree searched.
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// The exponent formula, with codimension brackets up to --n.
    Exponent {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build the Grassmann envelope, verify it, and compare codimensions up to --n.
    EnvelopeCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check f ∈ id(W) ⇔ tilde(f) ∈ id(E(W)) for one polynomial or a seeded sample.
    TildeCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the trace identity on seeded random assignments; x variables are the alternating set.
    TraceCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn load(path: &Path) -> Result<Loaded> {
    AlgebraFile::read(path)?.load()
}

fn polynomial_text(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
    } else {
        Ok(arg.to_string())
    }
}

fn wedderburn(l: &Loaded) -> Result<&WedderburnData> {
    l.wedderburn
        .as_ref()
        .ok_or_else(|| Error::InvalidInput(format!("{}: no wedderburn section", l.name)))
}

fn graded(l: &Loaded) -> Result<&H2ModuleAlgebra> {
    l.graded
        .as_ref()
        .ok_or_else(|| Error::InvalidInput(format!("{}: Hopf algebra is not of kind h2", l.name)))
}

fn status(ok: bool) -> (i32, &'static str) {
    if ok {
        (EXIT_OK, "pass")
    } else {
        (EXIT_FAIL, "fail")
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let budget = cli.budget.unwrap_or_else(default_budget);
    let name = command_name(&cli.command);
    match execute(&cli.command, budget) {
        Ok((code, mut report)) => {
            report["command"] = json!(name);
            Outcome { code, report }
        }
        Err(e) => Outcome {
            code: exit_code(&e),
            report: json!({ "command": name, "status": "error", "error": e.to_string() }),
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify {
            target: VerifyTarget::Hopf,
            ..
        } => "verify hopf",
        Command::Verify { .. } => "verify algebra",
        Command::Identity { .. } => "identity",
        Command::Codim { .. } => "codim",
        Command::Capelli { .. } => "capelli",
        Command::KemerSearch { .. } => "kemer-search",
        Command::Exponent { .. } => "exponent",
        Command::EnvelopeCheck { .. } => "envelope-check",
        Command::TildeCheck { .. } => "tilde-check",
        Command::TraceCheck { .. } => "trace-check",
    }
}

fn execute(c: &Command, budget: u128) -> Result<(i32, Value)> {
    match c {
        Command::Verify { target, algebra } => {
            let l = load(algebra)?;
            match target {
                VerifyTarget::Hopf => {
                    let r = verify_hopf(l.module.hopf());
                    let (code, st) = status(r.passed());
                    Ok((
                        code,
                        json!({
                            "status": st,
                            "dim": l.module.hopf_dim(),
                            "first_failure": r.first_failure().map(|c| c.axiom.to_string()),
                            "report": to_value(&r),
                        }),
                    ))
                }
                VerifyTarget::Algebra => {
                    let module = verify_module_algebra(&l.module);
                    let mut ok = module.passed();
                    let mut first = module.first_failure().map(|c| c.axiom.to_string());
                    let mut out = json!({ "dim": l.module.dim(), "module": to_value(&module) });
                    if let Some(g) = &l.graded {
                        let r = verify_h2(g);
                        if first.is_none() {
                            first = r.grading.first_failure().map(|c| to_value(&c.axiom).as_str().unwrap().to_string());
                        }
                        ok &= r.passed();
                        out["grading"] = to_value(&r.grading);
                    }
                    if let Some(w) = &l.wedderburn {
                        let r = wedderburn_certify(&l.module, w)?;
                        if first.is_none() {
                            first = r.first_failure().map(|c| to_value(&c.axiom).as_str().unwrap().to_string());
                        }
                        ok &= r.passed();
                        out["wedderburn"] = to_value(&r);
                    }
                    let (code, st) = status(ok);
                    out["status"] = json!(st);
                    out["first_failure"] = json!(first);
                    Ok((code, out))
                }
            }
        }
        Command::Identity { algebra, poly } => {
            let l = load(algebra)?;
            let f = parse_polynomial(l.module.hopf(), &polynomial_text(poly)?)?;
            let mut reports = Vec::new();
            let mut ok = true;
            for g in multilinearize(&f) {
                let r = is_identity_multilinear(&g, &l.module)?;
                ok &= r.identity;
                reports.push(json!({
                    "component": format_polynomial(l.module.hopf(), &g),
                    "report": to_value(&r),
                }));
                if !ok {
                    break;
                }
            }
            let (code, st) = status(ok);
            Ok((code, json!({ "status": st, "identity": ok, "components": reports })))
        }
        Command::Codim { algebra, n } => {
            let l = load(algebra)?;
            let r = codimension(&l.module, *n, budget)?;
            Ok((EXIT_OK, json!({ "status": "pass", "codim": r.codim, "report": to_value(&r) })))
        }
        Command::Capelli { algebra, t, n } => {
            let l = load(algebra)?;
            let r = capelli_check(&l.module, *t, *n, budget)?;
            let (code, st) = status(r.passed);
            let witness = r.witness.as_ref().map(|w| format_polynomial(l.module.hopf(), w));
            Ok((code, json!({ "status": st, "witness": witness, "report": to_value(&r) })))
        }
        Command::KemerSearch {
            algebra,
            alpha,
            s,
            mu,
            n,
        } => {
            let l = load(algebra)?;
            let w = wedderburn(&l)?;
            let shape = KemerShape {
                alpha: *alpha,
                s: *s,
                mu: mu.unwrap_or(w.nilpotency_index),
            };
            let r = kemer_witness_search(&l.module, w, shape, *n, budget)?;
            let polynomial = r.witness().map(|w| format_polynomial(l.module.hopf(), &w.polynomial));
            let found = r.witness().is_some();
            Ok((
                EXIT_OK,
                json!({
                    "status": "pass",
                    "found": found,
                    "polynomial": polynomial,
                    "report": to_value(&r),
                }),
            ))
        }
        Command::Exponent { algebra, n } => {
            let l = load(algebra)?;
            let w = wedderburn(&l)?;
            let mut r = exponent_formula(&l.module, w)?;
            if let Some(n) = n {
                r.codim_roots = Some(exp_estimate(&l.module, *n, budget)?);
            }
            Ok((
                EXIT_OK,
                json!({ "status": "pass", "formula_value": r.formula_value, "report": to_value(&r) }),
            ))
        }
        Command::EnvelopeCheck { algebra, k, n } => {
            let l = load(algebra)?;
            let g = graded(&l)?;
            let env = envelope(g, *k)?;
            let r = verify_h2(&env);
            let mut ok = r.passed();
            let mut comparisons = Vec::new();
            if let Some(n) = n {
                for m in 1..=*n {
                    let c = codim_comparison_check(g, m, (*k).max(m), budget)?;
                    ok &= c.inequality_holds && c.equality_holds;
                    comparisons.push(to_value(&c));
                }
            }
            let (code, st) = status(ok);
            Ok((
                code,
                json!({
                    "status": st,
                    "envelope_dim": env.dim(),
                    "verification": to_value(&r),
                    "comparisons": comparisons,
                }),
            ))
        }
        Command::TildeCheck {
            algebra,
            poly,
            k,
            samples,
            seed,
        } => {
            let l = load(algebra)?;
            let g = graded(&l)?;
            let base = g.base_hopf();
            let polys: Vec<HPolynomial> = match poly {
                Some(p) => vec![parse_polynomial(base, &polynomial_text(p)?)?],
                None => tagged_sample(g, *samples, 3, *seed)?,
            };
            let env = envelope(g, *k)?;
            let mut rows = Vec::new();
            let mut agree = 0usize;
            for f in &polys {
                let r = tilde_check_with_envelope(f, g, &env, *k)?;
                agree += r.agree as usize;
                rows.push(json!({ "poly": format_polynomial(base, f), "report": to_value(&r) }));
            }
            let (code, st) = status(agree == polys.len());
            Ok((
                code,
                json!({ "status": st, "checked": polys.len(), "agreeing": agree, "results": rows }),
            ))
        }
        Command::TraceCheck {
            algebra,
            poly,
            samples,
            seed,
        } => {
            let l = load(algebra)?;
            let w = wedderburn(&l)?;
            let a = &l.module;
            let f = parse_polynomial(a.hopf(), &polynomial_text(poly)?)?;
            let vars: Vec<Var> = f.variables().into_iter().collect();
            let designated: Vec<Var> = vars.iter().copied().filter(|v| v.family == Family::X).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut equal = 0usize;
            let mut failure = Value::Null;
            for _ in 0..*samples {
                let a0 = random_vector(&mut rng, a.dim());
                let asg: Assignment = vars.iter().map(|v| (*v, random_vector(&mut rng, a.dim()))).collect();
                let r = trace_identity_check(&f, a, w, &designated, &a0, &asg)?;
                if r.equal {
                    equal += 1;
                } else if failure.is_null() {
                    failure = json!({
                        "a0": vector_strings(&a0),
                        "assignment": asg.iter().map(|(v, x)| (v.to_string(), vector_strings(x))).collect::<Vec<_>>(),
                        "trace": format_q(&r.trace),
                        "lhs": vector_strings(&r.lhs),
                        "rhs": vector_strings(&r.rhs),
                    });
                }
            }
            let (code, st) = status(equal == *samples);
            Ok((
                code,
                json!({ "status": st, "samples": samples, "equal": equal, "first_failure": failure }),
            ))
        }
    }
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n)
        .map(|_| Q::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into()))
        .collect()
}

/// Text rendering: one `key: value` line per top-level field, in key order.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = report {
        for (k, v) in map {
            let shown = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {shown}\n"));
        }
    }
    out
}

pub fn render(report: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("json");
            s.push('\n');
            s
        }
        OutputFormat::Text => render_text(report),
    }
}
