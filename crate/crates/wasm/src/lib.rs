//! Browser bindings. Every export takes plain strings and numbers and returns
//! a JSON document; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use supercasimir::identities::verify_characteristic_identity;
use supercasimir::invariants::CharacteristicPowers;
use supercasimir::modules::{
    cyclic_submodule, highest_weight_vectors, realize_highest_weight, set_dimension_cap, tensor_power, vector_module,
};
use supercasimir::scalar::serialize_rational;
use supercasimir::spectra::{alpha_roots, chi_glminf, RootRange};
use supercasimir::{AlgebraSignature, Error, Weight};

/// Modules above this size are skipped so the page stays responsive.
const PAGE_DIM_CAP: usize = 1024;

fn respond(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn dominant(text: &str) -> Result<Weight, Error> {
    let w = Weight::parse(text.trim())?;
    if let Some((index, value)) = w.iter().find(|&(_, v)| v < 0) {
        return Err(Error::NegativeEntry { index, value });
    }
    if let Some(index) = w.dominance_violation() {
        return Err(Error::NotDominant { weight: w.to_string(), index });
    }
    Ok(w)
}

/// Closed-form eigenvalues of `I_1 ..= I_qmax`, next to the values read off an
/// explicit module when one is small enough to build.
#[wasm_bindgen]
pub fn eigenvalue_table(weight: &str, qmax: u32) -> String {
    set_dimension_cap(PAGE_DIM_CAP);
    respond((|| {
        let w = dominant(weight)?;
        let qmax = (qmax as usize).max(1);
        let sig = AlgebraSignature::new(w.m(), w.k().max(1));
        let oracle = match realize_highest_weight(sig, &w) {
            Ok(module) => Some(CharacteristicPowers::new(&module).renormalized_scalars(qmax)?),
            Err(Error::DimensionCap { .. } | Error::NotRealizable { .. }) => None,
            Err(e) => return Err(e),
        };
        let mut rows = Vec::new();
        for q in 1..=qmax {
            let formula = chi_glminf(w.m(), &w, q)?;
            rows.push(json!({
                "q": q,
                "formula": serialize_rational(&formula.value),
                "module": oracle.as_ref().map(|v| serialize_rational(&v[q - 1])),
                "regularized": formula.regularized,
            }));
        }
        Ok(json!({ "weight": w.to_string(), "m": w.m(), "rows": rows }))
    })())
}

/// Roots `α_i` of the characteristic identity and, when the module fits, the
/// outcome of checking `Π(A - α_i) = 0`.
#[wasm_bindgen]
pub fn characteristic_roots(weight: &str) -> String {
    set_dimension_cap(PAGE_DIM_CAP);
    respond((|| {
        let w = dominant(weight)?;
        let roots: Vec<Value> = alpha_roots(&w, RootRange::UpToKPlusOne)
            .roots
            .iter()
            .map(|(i, a)| json!({ "index": i, "alpha": serialize_rational(a) }))
            .collect();
        let sig = AlgebraSignature::new(w.m(), w.k() + 1);
        let identity = match realize_highest_weight(sig, &w) {
            Ok(module) => {
                let report = verify_characteristic_identity(&module, &w)?;
                json!({
                    "passed": report.passed(),
                    "dim": report.parameters.get("dim"),
                    "multiplicity": report.parameters.get("multiplicity"),
                    "witness": report.witness,
                })
            }
            Err(Error::DimensionCap { .. } | Error::NotRealizable { .. }) => Value::Null,
            Err(e) => return Err(e),
        };
        Ok(json!({ "weight": w.to_string(), "roots": roots, "identity": identity }))
    })())
}

/// Highest-weight vectors of `V^{⊗power}` for gl(m/n) with the dimensions of
/// the cyclic submodules they generate.
#[wasm_bindgen]
pub fn decompose(m: u32, n: u32, power: u32) -> String {
    set_dimension_cap(PAGE_DIM_CAP);
    respond((|| {
        let sig = AlgebraSignature::new(m as usize, n as usize);
        let rep = tensor_power(&vector_module(sig), power as usize)?;
        let mut modules = Vec::new();
        for hw in highest_weight_vectors(&rep) {
            let dim = cyclic_submodule(&rep, &hw.vector)?.dim();
            modules.push(json!({ "weight": hw.weight.to_string(), "dominant": hw.is_dominant, "dim": dim }));
        }
        Ok(json!({ "algebra": sig.to_string(), "dim": rep.dim(), "modules": modules }))
    })())
}
