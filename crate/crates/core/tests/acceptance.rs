//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use supercasimir::identities::{
    generalized_spectrum, tensor_casimir_operator, verify_characteristic_identity, verify_invariance,
    verify_quadratic_consistency, verify_stabilization,
};
use supercasimir::invariants::{explicit_i2, renormalized_casimir, CharacteristicPowers};
use supercasimir::modules::{
    cyclic_submodule, highest_weight_vectors, realize_highest_weight, tensor_power, trivial_module, vector_module,
};
use supercasimir::scalar::int;
use supercasimir::spectra::{chi_glminf, p_poly, p_poly_closed_form};
use supercasimir::weights::sample_dominant;
use supercasimir::{AlgebraSignature, Representation, Weight};

type Check<'a> = Box<dyn Fn() -> Result<String, String> + 'a>;

const SIGNATURES: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from(result: Result<String, String>) -> Self {
        match result {
            Ok(detail) => Outcome { passed: true, detail },
            Err(detail) => Outcome { passed: false, detail },
        }
    }
}

fn within(elapsed: Duration, limit: u64) -> Result<(), String> {
    if elapsed > Duration::from_secs(limit) {
        return Err(format!("took {:.1}s, limit {limit}s", elapsed.as_secs_f64()));
    }
    Ok(())
}

/// Every cyclic highest-weight submodule of `V^{⊗p}`, `p <= 3`, for the four
/// small signatures, including the trivial module.
fn oracle_modules() -> Vec<Representation> {
    let mut out = Vec::new();
    for (m, n) in SIGNATURES {
        let sig = AlgebraSignature::new(m, n);
        out.push(trivial_module(sig));
        let vector = vector_module(sig);
        for p in 1..=3 {
            let power = tensor_power(&vector, p).expect("tensor power");
            for hw in highest_weight_vectors(&power) {
                out.push(cyclic_submodule(&power, &hw.vector).expect("cyclic submodule"));
            }
        }
    }
    out
}

fn label(rep: &Representation) -> String {
    format!("{} Λ=({})", rep.signature(), rep.top_weight())
}

fn oracle_agreement(modules: &[Representation]) -> Result<String, String> {
    let start = Instant::now();
    let mut cases = BTreeSet::new();
    for rep in modules {
        let m = rep.signature().m;
        for q in 1..=4 {
            let oracle = renormalized_casimir(rep, q).map_err(|e| format!("{}: {e}", label(rep)))?;
            let formula = chi_glminf(m, rep.top_weight(), q).map_err(|e| e.to_string())?;
            if oracle != formula.value {
                return Err(format!("{} q={q}: module {oracle}, formula {}", label(rep), formula.value));
            }
            cases.insert((rep.top_weight().clone(), q));
        }
    }
    within(start.elapsed(), 60)?;
    if cases.len() < 12 {
        return Err(format!("only {} distinct cases", cases.len()));
    }
    Ok(format!("{} modules, {} distinct (Λ, q) cases", modules.len(), cases.len()))
}

fn pinned_values() -> Result<String, String> {
    let vector = vector_module(AlgebraSignature::new(1, 1));
    let one = Weight::parse("1;").unwrap();
    let hook = Weight::parse("1;1").unwrap();
    let checks = [
        (renormalized_casimir(&vector, 2), chi_glminf(1, &one, 2), int(0), "χ(I_2), Λ=(1;)"),
        (renormalized_casimir(&vector, 3), chi_glminf(1, &one, 3), int(1), "χ(I_3), Λ=(1;)"),
    ];
    for (oracle, formula, want, name) in checks {
        let oracle = oracle.map_err(|e| e.to_string())?;
        let formula = formula.map_err(|e| e.to_string())?.value;
        if oracle != want || formula != want {
            return Err(format!("{name}: module {oracle}, formula {formula}, expected {want}"));
        }
    }
    let square = tensor_power(&vector, 2).map_err(|e| e.to_string())?;
    let hook_vector =
        highest_weight_vectors(&square).into_iter().find(|h| h.weight == hook).ok_or("no (1;1) vector in V⊗V")?;
    let hook_module = cyclic_submodule(&square, &hook_vector.vector).map_err(|e| e.to_string())?;
    let oracle = renormalized_casimir(&hook_module, 2).map_err(|e| e.to_string())?;
    let formula = chi_glminf(1, &hook, 2).map_err(|e| e.to_string())?.value;
    if oracle != int(-2) || formula != int(-2) {
        return Err(format!("χ(I_2), Λ=(1;1): module {oracle}, formula {formula}, expected -2"));
    }
    let t = tensor_casimir_operator(&vector).map_err(|e| e.to_string())?;
    let spectrum = generalized_spectrum(&t, &[int(1), int(-1)]).map_err(|e| e.to_string())?;
    if spectrum != vec![(int(1), 2), (int(-1), 2)] {
        return Err(format!("spectrum of T: {spectrum:?}"));
    }
    Ok("χ(I_2)=0, χ(I_3)=1, χ(I_2)=-2, T has eigenvalues {1,1,-1,-1}".into())
}

fn quadratic_consistency(seed: u64) -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<Weight> = (0..200).map(|_| sample_dominant(&mut rng, 3, 4, 5)).collect();
    let report = verify_quadratic_consistency(&weights).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(report.to_string());
    }
    within(start.elapsed(), 5)?;
    Ok(format!("200 weights, seed {seed}, {} through the regularized limit", report.parameters["regularized"]))
}

fn p_identity() -> Result<String, String> {
    for q in 1..=20 {
        for shift in -5..=5 {
            if p_poly(q, shift) != p_poly_closed_form(q, shift) {
                return Err(format!("q={q}, shift={shift}"));
            }
        }
    }
    Ok("q=1..20, shift=-5..5".into())
}

fn stabilization(modules: &[Representation]) -> Result<String, String> {
    let weights: BTreeSet<Weight> = modules.iter().map(|r| r.top_weight().clone()).collect();
    let mut runs = 0;
    let mut point_checks = 0;
    for w in &weights {
        let base = modules.iter().find(|r| r.top_weight() == w).unwrap().signature().n;
        for r in [base, base + 1] {
            for q in 1..=4 {
                let report = verify_stabilization(w, q, r).map_err(|e| format!("({w}) q={q} r={r}: {e}"))?;
                if !report.passed() {
                    return Err(report.to_string());
                }
                runs += 1;
                point_checks += report.parameters["out_of_support_checks"].parse::<usize>().unwrap();
            }
        }
    }
    Ok(format!("{} weights, {runs} runs, {point_checks} out-of-support checks", weights.len()))
}

fn invariance() -> Result<String, String> {
    let start = Instant::now();
    let mut quadruples = 0;
    for (m, n) in [(1, 1), (1, 2)] {
        let vector = vector_module(AlgebraSignature::new(m, n));
        let square = tensor_power(&vector, 2).map_err(|e| e.to_string())?;
        for rep in [&vector, &square] {
            for q in 1..=3 {
                let report = verify_invariance(rep, q).map_err(|e| e.to_string())?;
                if !report.passed() {
                    return Err(report.to_string());
                }
                quadruples += report.parameters["checked"].parse::<usize>().unwrap();
            }
        }
    }
    within(start.elapsed(), 30)?;
    Ok(format!("{quadruples} quadruples"))
}

fn characteristic_identity() -> Result<String, String> {
    let mut weights = BTreeSet::new();
    for (m, n) in SIGNATURES {
        let sig = AlgebraSignature::new(m, n);
        weights.insert(Weight::zero(m));
        weights.insert(Weight::epsilon(m, sig.first()));
        let square = tensor_power(&vector_module(sig), 2).map_err(|e| e.to_string())?;
        for hw in highest_weight_vectors(&square) {
            if hw.is_dominant {
                weights.insert(hw.weight);
            }
        }
    }
    let mut doubled = Vec::new();
    for w in &weights {
        let sig = AlgebraSignature::new(w.m(), (w.k() + 1).max(1));
        let module = realize_highest_weight(sig, w).map_err(|e| format!("({w}): {e}"))?;
        let report = verify_characteristic_identity(&module, w).map_err(|e| format!("({w}): {e}"))?;
        if !report.passed() {
            if report.parameters.get("multiplicity").map(String::as_str) == Some("2") {
                eprintln!("  logged: {report}");
                doubled.push(w.to_string());
                continue;
            }
            return Err(report.to_string());
        }
    }
    Ok(format!("{} weights, squared factors needed for {}", weights.len(), doubled.len()))
}

fn normal_ordering(modules: &[Representation]) -> Result<String, String> {
    for rep in modules {
        let chi = CharacteristicPowers::new(rep).renormalized_scalars(2).map_err(|e| e.to_string())?;
        let op = explicit_i2(rep).map_err(|e| e.to_string())?;
        match op.scalar_witness() {
            Ok(c) if c == chi[1] => {}
            Ok(c) => return Err(format!("{}: normal-ordered {c}, renormalized {}", label(rep), chi[1])),
            Err((r, c)) => return Err(format!("{}: not scalar at ({r},{c})", label(rep))),
        }
    }
    Ok(format!("{} modules", modules.len()))
}

fn main() -> ExitCode {
    let seed = std::env::var("CASIMIR_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20);
    let modules = oracle_modules();
    let criteria: Vec<(&str, Check)> = vec![
        ("oracle/formula agreement", Box::new(|| oracle_agreement(&modules))),
        ("pinned values", Box::new(pinned_values)),
        ("quadratic consistency", Box::new(|| quadratic_consistency(seed))),
        ("P_q recursion = closed form", Box::new(p_identity)),
        ("stabilization", Box::new(|| stabilization(&modules))),
        ("invariance", Box::new(invariance)),
        ("characteristic identity", Box::new(characteristic_identity)),
        ("normal ordering", Box::new(|| normal_ordering(&modules))),
    ];
    let mut failed = 0;
    for (number, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = Outcome::from(check());
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {}. {name}: {} ({:.2}s)", number + 1, outcome.detail, start.elapsed().as_secs_f64());
        failed += usize::from(!outcome.passed);
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
