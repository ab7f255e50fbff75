use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use supercasimir::identities::{
    verify_characteristic_identity, verify_invariance, verify_normal_ordering, verify_oracle_agreement,
    verify_quadratic_consistency, verify_stabilization, verify_tensor_invariance, Claim,
};
use supercasimir::invariants::CharacteristicPowers;
use supercasimir::modules::{
    cyclic_submodule, highest_weight_vectors, realize_highest_weight, set_dimension_cap, tensor_power, vector_module,
};
use supercasimir::scalar::serialize_rational;
use supercasimir::spectra::chi_glminf;
use supercasimir::weights::{dominant_weights, sample_dominant};
use supercasimir::{AlgebraSignature, Error, ExactScalar, VerificationReport, Weight};

#[derive(Parser)]
#[command(name = "supercasimir", version, about = "Casimir eigenvalues of gl(m/n) and gl(m/inf)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue of I_q on the module of highest weight Λ
    Eigenvalue {
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Eigenvalues over a range of q and a set of weights
    Table {
        #[arg(long)]
        m: usize,
        /// Weights to tabulate; repeatable
        #[arg(long = "weight")]
        weights: Vec<String>,
        /// Tabulate every dominant weight up to this degree
        #[arg(long, conflicts_with = "weights")]
        max_degree: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Highest-weight vectors and cyclic submodules of a tensor power
    Decompose {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        power: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run one of the identity checks
    Verify {
        #[arg(long, value_parser = parse_claim)]
        claim: Claim,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        weight: Option<String>,
        /// Truncation for invariance checks on tensor powers
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, value_parser = parse_q_range)]
        q: Option<QRange>,
        #[arg(long)]
        truncation: Option<usize>,
        #[arg(long, default_value_t = 20)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    m: Option<usize>,
    /// Highest weight as "a_{-m+1},...,a_0;b_1,...,b_k"
    #[arg(long)]
    weight: String,
}

#[derive(Args)]
struct Common {
    /// Single order or inclusive range such as 1..4
    #[arg(long, value_parser = parse_q_range, default_value = "2")]
    q: QRange,
    /// Defaults to both when the module fits under the dimension cap
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Truncation used by the oracle; at least the number of positive entries
    #[arg(long)]
    truncation: Option<usize>,
}

#[derive(Clone, Copy, Debug)]
struct QRange {
    first: usize,
    last: usize,
}

impl QRange {
    fn orders(self) -> impl Iterator<Item = usize> {
        self.first..=self.last
    }
}

fn parse_q_range(text: &str) -> Result<QRange, String> {
    let (a, b) = text.split_once("..").unwrap_or((text, text));
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("bad order {s:?}: {e}"));
    let (first, last) = (parse(a)?, parse(b)?);
    if first == 0 || first > last {
        return Err(format!("need 1 <= first <= last, got {text}"));
    }
    Ok(QRange { first, last })
}

fn parse_claim(text: &str) -> Result<Claim, String> {
    Claim::from_name(text).ok_or_else(|| {
        let names: Vec<&str> = Claim::ALL.iter().map(|c| c.name()).collect();
        format!("unknown claim; expected one of {}", names.join(", "))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WeightSyntax { .. }
            | Error::RationalSyntax(_)
            | Error::MixedSignature { .. }
            | Error::TruncationTooSmall { .. }
            | Error::ZeroOrder => 2,
            Error::NotDominant { .. } | Error::NegativeEntry { .. } => 3,
            Error::DegenerateRoots { .. } | Error::NotRealizable { .. } | Error::DimensionCap { .. } => 4,
            _ => 5,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

#[derive(Serialize)]
struct Row {
    m: usize,
    weight: String,
    q: usize,
    eigenvalue: String,
    method: &'static str,
    regularized: bool,
}

fn parse_weight(text: &str, m: Option<usize>) -> Outcome<Weight> {
    let w = match m {
        Some(m) => Weight::parse_with_m(text, m)?,
        None => Weight::parse(text)?,
    };
    if let Some((index, value)) = w.iter().find(|&(_, v)| v < 0) {
        return Err(Error::NegativeEntry { index, value }.into());
    }
    if let Some(index) = w.dominance_violation() {
        return Err(Error::NotDominant { weight: w.to_string(), index }.into());
    }
    Ok(w)
}

fn default_truncation(w: &Weight, requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| w.k().max(1))
}

/// Renormalized eigenvalues for orders `1..=qmax` on the realized module,
/// cross-checked at the next truncation.
fn oracle_values(w: &Weight, qmax: usize, truncation: Option<usize>) -> Result<Vec<ExactScalar>, Error> {
    let r = default_truncation(w, truncation);
    if r < w.k() {
        return Err(Error::TruncationTooSmall { r, required: w.k() });
    }
    let sig = AlgebraSignature::new(w.m(), r);
    let here = CharacteristicPowers::new(&realize_highest_weight(sig, w)?).renormalized_scalars(qmax)?;
    let next = realize_highest_weight(sig.with_truncation(r + 1), w)?;
    let there = CharacteristicPowers::new(&next).renormalized_scalars(qmax)?;
    if let Some(q) = (0..qmax).find(|&i| here[i] != there[i]) {
        return Err(Error::Unstable {
            q: q + 1,
            r,
            r_next: r + 1,
            left: here[q].to_string(),
            right: there[q].to_string(),
        });
    }
    Ok(here)
}

fn eigenvalue_rows(w: &Weight, common: &Common) -> Outcome<Vec<Row>> {
    let oracle = match common.method {
        Some(Method::Formula) => None,
        Some(_) => Some(oracle_values(w, common.q.last, common.truncation)?),
        None => match oracle_values(w, common.q.last, common.truncation) {
            Ok(values) => Some(values),
            Err(Error::DimensionCap { .. } | Error::NotRealizable { .. }) => None,
            Err(e) => return Err(e.into()),
        },
    };
    let mut rows = Vec::new();
    for q in common.q.orders() {
        let from_module = oracle.as_ref().map(|v| v[q - 1].clone());
        let (value, method, regularized) = if common.method == Some(Method::Oracle) {
            (from_module.unwrap(), "oracle", false)
        } else {
            let formula = chi_glminf(w.m(), w, q)?;
            match from_module {
                Some(x) if x != formula.value => {
                    return Err(Failure::new(
                        5,
                        format!("q={q}, weight {w}: formula gives {}, module gives {x}", formula.value),
                    ))
                }
                Some(_) => (formula.value, "both", formula.regularized),
                None => (formula.value, "formula", formula.regularized),
            }
        };
        rows.push(Row {
            m: w.m(),
            weight: w.to_string(),
            q,
            eigenvalue: serialize_rational(&value),
            method,
            regularized,
        });
    }
    Ok(rows)
}

fn render_rows(rows: &[Row], format: Format, single: bool) -> Outcome<String> {
    let internal = |e: &dyn std::fmt::Display| Failure::new(5, e.to_string());
    Ok(match format {
        Format::Json if single => serde_json::to_string_pretty(&rows[0]).map_err(|e| internal(&e))?,
        Format::Json => serde_json::to_string_pretty(rows).map_err(|e| internal(&e))?,
        Format::Csv => {
            let mut out = csv::Writer::from_writer(Vec::new());
            for row in rows {
                out.serialize(row).map_err(|e| internal(&e))?;
            }
            String::from_utf8(out.into_inner().map_err(|e| internal(&e))?).map_err(|e| internal(&e))?
        }
        Format::Text => rows
            .iter()
            .map(|r| {
                let tag = if r.regularized { " (regularized)" } else { "" };
                format!("m={} Λ=({}) q={}: {} [{}]{tag}", r.m, r.weight, r.q, r.eigenvalue, r.method)
            })
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn decompose(m: usize, n: usize, power: usize, format: Format) -> Outcome<String> {
    let sig = AlgebraSignature::new(m, n);
    let rep = tensor_power(&vector_module(sig), power)?;
    let mut entries = Vec::new();
    let mut total = 0;
    for hw in highest_weight_vectors(&rep) {
        let dim = cyclic_submodule(&rep, &hw.vector)?.dim();
        total += dim;
        entries.push((hw, dim));
    }
    if format == Format::Text {
        let mut lines = vec![format!("{sig}, V^{power}: dim {}, cyclic total {total}", rep.dim())];
        for (hw, dim) in &entries {
            let tag = if hw.is_dominant { "" } else { " (not dominant)" };
            lines.push(format!("  Λ=({}) cyclic dim {dim}{tag}", hw.weight));
        }
        return Ok(lines.join("\n"));
    }
    if format == Format::Csv {
        return Err(Failure::new(2, "decompose supports json and text output"));
    }
    let modules: Vec<Value> = entries
        .iter()
        .map(|(hw, dim)| {
            json!({
                "weight": hw.weight.to_string(),
                "dominant": hw.is_dominant,
                "cyclic_dim": dim,
                "vector": hw.vector.iter().map(serialize_rational).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({"m": m, "n": n, "power": power, "dim": rep.dim(), "cyclic_dim_total": total, "modules": modules});
    Ok(serde_json::to_string_pretty(&doc).unwrap())
}

struct VerifyJob {
    claim: Claim,
    m: Option<usize>,
    weight: Option<String>,
    n: Option<usize>,
    power: usize,
    q: Option<QRange>,
    truncation: Option<usize>,
    seed: u64,
    samples: usize,
}

fn run_verifier(job: &VerifyJob) -> Outcome<VerificationReport> {
    let weight = || -> Outcome<Weight> {
        let text = job.weight.as_deref().ok_or_else(|| Failure::new(2, format!("{} needs --weight", job.claim)))?;
        parse_weight(text, job.m)
    };
    let q = job.q.map(|r| r.last);
    let report = match job.claim {
        Claim::CharacteristicIdentity | Claim::TensorInvariance => {
            let w = weight()?;
            let r = job.truncation.unwrap_or(w.k() + 1);
            let module = realize_highest_weight(AlgebraSignature::new(w.m(), r), &w)?;
            if job.claim == Claim::TensorInvariance {
                verify_tensor_invariance(&module)?
            } else {
                verify_characteristic_identity(&module, &w)?
            }
        }
        Claim::Invariance => {
            let rep = match (&job.weight, job.m, job.n) {
                (Some(_), _, _) => {
                    let w = weight()?;
                    let sig = AlgebraSignature::new(w.m(), default_truncation(&w, job.truncation));
                    realize_highest_weight(sig, &w)?
                }
                (None, Some(m), Some(n)) => tensor_power(&vector_module(AlgebraSignature::new(m, n)), job.power)?,
                _ => return Err(Failure::new(2, "invariance needs --weight, or --m and --n")),
            };
            verify_invariance(&rep, q.unwrap_or(2))?
        }
        Claim::Stabilization => {
            let w = weight()?;
            verify_stabilization(&w, q.unwrap_or(2), default_truncation(&w, job.truncation))?
        }
        Claim::OracleAgreement | Claim::NormalOrdering => {
            let w = weight()?;
            let sig = AlgebraSignature::new(w.m(), default_truncation(&w, job.truncation));
            let module = realize_highest_weight(sig, &w)?;
            if job.claim == Claim::OracleAgreement {
                verify_oracle_agreement(&module, q.unwrap_or(4))?
            } else {
                verify_normal_ordering(&module)?
            }
        }
        Claim::QuadraticConsistency => {
            let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
            let max_m = job.m.unwrap_or(3);
            let weights: Vec<Weight> = (0..job.samples).map(|_| sample_dominant(&mut rng, max_m, 4, 5)).collect();
            let mut report = verify_quadratic_consistency(&weights)?;
            report.parameters.insert("seed".into(), job.seed.to_string());
            report
        }
    };
    Ok(report)
}

fn render_report(report: &VerificationReport, format: Format) -> Outcome<String> {
    match format {
        Format::Text => Ok(report.to_string()),
        Format::Csv => Err(Failure::new(2, "verify supports json and text output")),
        Format::Json => {
            let doc = json!({
                "claim": report.claim.name(),
                "passed": report.passed(),
                "parameters": report.parameters,
                "witness": report.witness,
            });
            Ok(serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

fn run(cli: Cli) -> Outcome<(String, u8)> {
    if let Ok(text) = std::env::var("CASIMIR_DIM_CAP") {
        let cap = text.parse().map_err(|_| Failure::new(2, format!("CASIMIR_DIM_CAP: not a number: {text}")))?;
        set_dimension_cap(cap);
    }
    match cli.command {
        Command::Eigenvalue { weight, common } => {
            let w = parse_weight(&weight.weight, weight.m)?;
            let rows = eigenvalue_rows(&w, &common)?;
            Ok((render_rows(&rows, common.format, common.q.first == common.q.last)?, 0))
        }
        Command::Table { m, weights, max_degree, common } => {
            let mut list = match max_degree {
                Some(d) => dominant_weights(m, d),
                None if weights.is_empty() => return Err(Failure::new(2, "table needs --weight or --max-degree")),
                None => weights.iter().map(|t| parse_weight(t, Some(m))).collect::<Outcome<_>>()?,
            };
            list.sort();
            list.dedup();
            let mut rows = Vec::new();
            for w in &list {
                rows.extend(eigenvalue_rows(w, &common)?);
            }
            // stable sort keeps graded-lex order within each q
            rows.sort_by_key(|r| r.q);
            Ok((render_rows(&rows, common.format, false)?, 0))
        }
        Command::Decompose { m, n, power, format } => Ok((decompose(m, n, power, format)?, 0)),
        Command::Verify { claim, m, weight, n, power, q, truncation, seed, samples, format } => {
            let job = VerifyJob { claim, m, weight, n, power, q, truncation, seed, samples };
            let report = run_verifier(&job)?;
            let code = if report.passed() { 0 } else { 1 };
            Ok((render_report(&report, format)?, code))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", text.trim_end());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
