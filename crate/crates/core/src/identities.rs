//! Verifiers for the structural identities: invariance of the characteristic
//! matrix powers, stabilization under growing truncation, agreement of the
//! explicit and closed-form eigenvalues, and the characteristic polynomial
//! identity of `A` realized on `V(ε_{-m+1}) ⊗ V(Λ)`.
//!
//! The characteristic identity is checked in the flat tensor realization.
//! Entries beyond the truncation annihilate the module, so the truncated
//! product is faithful as long as index `k + 1` is present.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{grading, AlgebraSignature};
use crate::error::{Error, Result};
use crate::invariants::{char_matrix, explicit_i2, power_columns, CharacteristicPowers};
use crate::linalg::{self, SpanBuilder, Vector};
use crate::modules::{
    cyclic_submodule, highest_weight_vectors_of_weight, tensor_power, tensor_product, trivial_module, vector_module,
    Representation,
};
use crate::poly::ExactPolynomial;
use crate::scalar::{int, serialize_rational, sign, ExactScalar};
use crate::spectra::{alpha_roots, chi_glminf, half_difference, RootRange};
use crate::superspace::{tensor_lift, GradedSpace, Slot, SparseOperator};
use crate::weights::{pairing_with_2rho, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    CharacteristicIdentity,
    Invariance,
    Stabilization,
    TensorInvariance,
    OracleAgreement,
    NormalOrdering,
    QuadraticConsistency,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::CharacteristicIdentity,
        Claim::Invariance,
        Claim::Stabilization,
        Claim::TensorInvariance,
        Claim::OracleAgreement,
        Claim::NormalOrdering,
        Claim::QuadraticConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::CharacteristicIdentity => "characteristic-identity",
            Claim::Invariance => "invariance",
            Claim::Stabilization => "stabilization",
            Claim::TensorInvariance => "tensor-invariance",
            Claim::OracleAgreement => "oracle-agreement",
            Claim::NormalOrdering => "normal-ordering",
            Claim::QuadraticConsistency => "quadratic-consistency",
        }
    }

    pub fn from_name(name: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a verifier. A report passes exactly when it carries no witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: Claim,
    pub parameters: BTreeMap<String, String>,
    pub witness: Option<String>,
}

impl VerificationReport {
    fn new(claim: Claim) -> Self {
        VerificationReport { claim, parameters: BTreeMap::new(), witness: None }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    fn fail(&mut self, witness: impl Into<String>) {
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.claim, if self.passed() { "pass" } else { "FAIL" })?;
        for (k, v) in &self.parameters {
            write!(f, " {k}={v}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

fn join(values: impl Iterator<Item = ExactScalar>) -> String {
    values.map(|x| serialize_rational(&x)).collect::<Vec<_>>().join(",")
}

/// `T = Σ_{i,j} (-1)^⟨j⟩ π_ε(E_ij) ⊗ π_Λ(E_ji)` on `V(ε_{-m+1}) ⊗ V(Λ)`,
/// i.e. `½[Δ(I_2) - I_2 ⊗ 1 - 1 ⊗ I_2]` realized.
pub fn tensor_casimir_operator(hw_module: &Representation) -> Result<SparseOperator> {
    let sig = hw_module.signature();
    let required = hw_module.top_weight().k() + 1;
    if sig.n < required {
        return Err(Error::TruncationTooSmall { r: sig.n, required });
    }
    let vector = vector_module(sig);
    let space = Arc::new(GradedSpace::tensor(vector.space(), hw_module.space()));
    let mut t = SparseOperator::zero(space.clone(), space.clone());
    for i in sig.indices() {
        for j in sig.indices() {
            let right = hw_module.action(j, i);
            if right.is_zero() {
                continue;
            }
            let left = tensor_lift(vector.action(i, j), Slot::First, &space)?;
            let term = left.compose(&tensor_lift(right, Slot::Second, &space)?)?;
            t = t.add(&term.scale(&sign(grading(j).is_odd())))?;
        }
    }
    Ok(t)
}

fn minus_scalar(op: &SparseOperator, c: &ExactScalar) -> Result<SparseOperator> {
    op.sub(&SparseOperator::scalar(op.domain().clone(), c.clone()))
}

fn distinct(values: impl Iterator<Item = ExactScalar>) -> Vec<ExactScalar> {
    let mut out: Vec<ExactScalar> = Vec::new();
    for v in values {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// `Π_α (T - α)` over the distinct roots, each raised to `power`.
fn root_product(t: &SparseOperator, roots: &[ExactScalar], power: usize) -> Result<SparseOperator> {
    let mut acc = SparseOperator::identity(t.domain().clone());
    for a in roots {
        let factor = minus_scalar(t, a)?;
        for _ in 0..power {
            acc = factor.compose(&acc)?;
        }
    }
    Ok(acc)
}

/// Dimension of each generalized eigenspace of `op` for the given candidate
/// eigenvalues (duplicates ignored). When the multiplicities add up to the
/// dimension, the spectrum lies inside the candidate set.
pub fn generalized_spectrum(op: &SparseOperator, candidates: &[ExactScalar]) -> Result<Vec<(ExactScalar, usize)>> {
    let dim = op.domain().dim();
    let mut out = Vec::new();
    for a in distinct(candidates.iter().cloned()) {
        let shifted = minus_scalar(op, &a)?;
        let mut power = shifted.clone();
        let mut kernel = 0;
        loop {
            let k = dim - linalg::rank(&power.to_dense()?, dim);
            if k == kernel || k == dim {
                kernel = k;
                break;
            }
            kernel = k;
            power = shifted.compose(&power)?;
        }
        out.push((a, kernel));
    }
    Ok(out)
}

/// Minimal polynomial of a square operator, found from the first linear
/// dependency among `1, T, T^2, ...`.
pub fn minimal_polynomial(op: &SparseOperator) -> Result<ExactPolynomial> {
    let dim = op.domain().dim();
    let flatten = |x: &SparseOperator| -> Vector {
        let mut v = vec![ExactScalar::zero(); dim * dim];
        for ((r, c), e) in x.entries() {
            v[r * dim + c] = e.clone();
        }
        v
    };
    let mut span = SpanBuilder::new(dim * dim);
    let mut power = SparseOperator::identity(op.domain().clone());
    loop {
        let flat = flatten(&power);
        if let Some(coords) = span.coordinates(&flat) {
            let mut coeffs: Vec<ExactScalar> = coords.into_iter().map(|c| -c).collect();
            coeffs.push(ExactScalar::from_integer(1.into()));
            return Ok(ExactPolynomial::new(coeffs));
        }
        span.insert(flat);
        power = op.compose(&power)?;
    }
}

/// Splits `poly` into linear factors over `roots`; `None` if something is
/// left over.
pub fn factor_over_roots(poly: &ExactPolynomial, roots: &[ExactScalar]) -> Option<Vec<(ExactScalar, usize)>> {
    let mut rest = poly.clone();
    let mut out = Vec::new();
    for a in distinct(roots.iter().cloned()) {
        let lin = ExactPolynomial::linear(-a.clone(), int(1));
        let mut mult = 0;
        loop {
            let (q, r) = rest.div_rem(&lin);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((a, mult));
        }
    }
    (rest.degree() == Some(0)).then_some(out)
}

/// Checks `Π_{i=-m+1}^{k+1} (A - α_i) = 0` on `V(ε_{-m+1}) ⊗ V(Λ)`.
///
/// Also confirms that the blocks of `T` are the characteristic matrix entries
/// `(-1)^{⟨i⟩⟨l⟩} π_Λ(E_li)` and that every root equals the half-difference of
/// quadratic eigenvalues. If the product fails with multiplicity one, the
/// squared product is tried and the sufficient multiplicity is recorded; the
/// report still fails in that case.
pub fn verify_characteristic_identity(hw_module: &Representation, weight: &Weight) -> Result<VerificationReport> {
    let sig = hw_module.signature();
    let roots = alpha_roots(weight, RootRange::UpToKPlusOne);
    let mut report = VerificationReport::new(Claim::CharacteristicIdentity)
        .param("m", sig.m)
        .param("n", sig.n)
        .param("weight", weight)
        .param("roots", join(roots.values().cloned()));
    if hw_module.top_weight() != weight {
        report.fail(format!("module is generated by weight {}, not {weight}", hw_module.top_weight()));
        return Ok(report);
    }
    for (i, a) in &roots.roots {
        let h = half_difference(weight, *i);
        if &h != a {
            report.fail(format!("root {i}: α = {a} but half-difference = {h}"));
        }
    }

    let t = tensor_casimir_operator(hw_module)?;
    report = report.param("dim", t.domain().dim());

    // blockwise agreement with the characteristic matrix
    let a = char_matrix(hw_module);
    let db = hw_module.dim();
    let mut blocks: BTreeMap<(usize, usize, usize, usize), ExactScalar> = BTreeMap::new();
    for ((row, col), x) in t.entries() {
        blocks.insert((row / db, col / db, row % db, col % db), x.clone());
    }
    'outer: for i in sig.indices() {
        for l in sig.indices() {
            let (pi, pl) = (sig.pos(i), sig.pos(l));
            let expected = a.get(i, l);
            let found: BTreeMap<(usize, usize), ExactScalar> = blocks
                .range((pi, pl, 0, 0)..=(pi, pl, usize::MAX, usize::MAX))
                .map(|(&(_, _, r, c), x)| ((r, c), x.clone()))
                .collect();
            let want: BTreeMap<(usize, usize), ExactScalar> = expected.entries().map(|(k, x)| (k, x.clone())).collect();
            if found != want {
                report.fail(format!("block ({i},{l}) of T differs from A_{i}^{l}"));
                break 'outer;
            }
        }
    }

    let distinct_roots = distinct(roots.values().cloned());
    let once = root_product(&t, &distinct_roots, 1)?;
    if once.is_zero() {
        report = report.param("multiplicity", 1);
    } else {
        let ((r, c), x) = once.entries().next().map(|(k, x)| (k, x.clone())).unwrap();
        if root_product(&t, &distinct_roots, 2)?.is_zero() {
            report = report.param("multiplicity", 2);
            report.fail(format!("product is non-zero at ({r},{c}) = {x}; the squared product vanishes"));
        } else {
            report = report.param("multiplicity", "none");
            report.fail(format!("product is non-zero at ({r},{c}) = {x}, also when squared"));
        }
    }
    Ok(report)
}

/// `T` commutes with the coproduct action of every generator.
pub fn verify_tensor_invariance(hw_module: &Representation) -> Result<VerificationReport> {
    let sig = hw_module.signature();
    let t = tensor_casimir_operator(hw_module)?;
    let product = tensor_product(&vector_module(sig), hw_module)?;
    let mut report = VerificationReport::new(Claim::TensorInvariance)
        .param("m", sig.m)
        .param("n", sig.n)
        .param("weight", hw_module.top_weight());
    for k in sig.indices() {
        for l in sig.indices() {
            if !product.action(k, l).supercommutator(&t)?.is_zero() {
                report.fail(format!("[E({k},{l}), T] != 0"));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// `⟦E_kl, (A^q)_i^j⟧ = (-1)^{(⟨k⟩+⟨l⟩)⟨i⟩} (δ_lj (A^q)_i^k - δ_ik (A^q)_l^j)`
/// for every index quadruple of the truncation.
pub fn verify_invariance(rep: &Representation, q: usize) -> Result<VerificationReport> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    let sig = rep.signature();
    let mut powers = CharacteristicPowers::new(rep);
    let p = powers.power(q)?.clone();
    let zero = SparseOperator::zero(rep.space().clone(), rep.space().clone());
    let mut report = VerificationReport::new(Claim::Invariance)
        .param("m", sig.m)
        .param("n", sig.n)
        .param("q", q)
        .param("dim", rep.dim());
    let mut checked = 0usize;
    for k in sig.indices() {
        for l in sig.indices() {
            for i in sig.indices() {
                for j in sig.indices() {
                    let lhs = rep.action(k, l).supercommutator(p.get(i, j))?;
                    let first = if l == j { p.get(i, k).clone() } else { zero.clone() };
                    let second = if i == k { p.get(l, j).clone() } else { zero.clone() };
                    let s = sign((sig.generator_parity(k, l) * grading(i)).is_odd());
                    let rhs = first.sub(&second)?.scale(&s);
                    checked += 1;
                    if lhs != rhs {
                        report.fail(format!("(k,l,i,j) = ({k},{l},{i},{j})"));
                        return Ok(report.param("checked", checked));
                    }
                }
            }
        }
    }
    Ok(report.param("checked", checked))
}

/// Highest-weight vector of weight `weight` in the smallest tensor power of
/// the vector module that can hold it, together with that tensor power.
pub fn ambient_highest_weight(sig: AlgebraSignature, weight: &Weight) -> Result<(Representation, Vector)> {
    if weight.is_zero() {
        return Ok((trivial_module(sig), vec![int(1)]));
    }
    let not_realizable = || Error::NotRealizable { weight: weight.to_string(), m: sig.m, n: sig.n };
    if weight.iter().any(|(_, v)| v < 0) || weight.support_bound().is_some_and(|b| b > sig.last()) {
        return Err(not_realizable());
    }
    let power = tensor_power(&vector_module(sig), weight.degree() as usize)?;
    let v = highest_weight_vectors_of_weight(&power, weight).into_iter().next().ok_or_else(not_realizable)?;
    Ok((power, v))
}

/// Maps a vector of `V^{⊗p}` over gl(m/n) into `V^{⊗p}` over gl(m/n') for
/// `n' >= n`; index positions agree in both.
pub fn embed_tensor_vector(v: &[ExactScalar], from: AlgebraSignature, to: AlgebraSignature, p: usize) -> Vector {
    assert!(to.m == from.m && to.n >= from.n);
    let (df, dt) = (from.size(), to.size());
    let mut out = vec![ExactScalar::zero(); dt.pow(p as u32)];
    for (x, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut rest = x;
        let mut digits = vec![0; p];
        for d in digits.iter_mut().rev() {
            *d = rest % df;
            rest /= df;
        }
        let y = digits.iter().fold(0, |acc, d| acc * dt + d);
        out[y] = c.clone();
    }
    out
}

/// Compares truncations `r` and `r + 1` for the module of highest weight `Λ`:
/// (a) `((A^q)_i^i - I_{q-1}) v = 0` for every basis weight vector `v` of the
/// larger module and every index `i` beyond the support of its weight
/// (`A_i^i v = 0` when `q = 1`); (b) `(A^q)_i^j v_Λ` agrees between the two
/// truncations for `i, j <= r`; (c) the renormalized eigenvalues of orders
/// `1..=q` agree.
pub fn verify_stabilization(weight: &Weight, q: usize, r: usize) -> Result<VerificationReport> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    if r < weight.k() {
        return Err(Error::TruncationTooSmall { r, required: weight.k() });
    }
    let m = weight.m();
    let (small, large) = (AlgebraSignature::new(m, r), AlgebraSignature::new(m, r + 1));
    let mut report = VerificationReport::new(Claim::Stabilization).param("weight", weight).param("q", q).param("r", r);

    let (amb_small, v_small) = ambient_highest_weight(small, weight)?;
    let (amb_large, v_large) = if weight.is_zero() {
        (trivial_module(large), v_small.clone())
    } else {
        let p = weight.degree() as usize;
        let amb = tensor_power(&vector_module(large), p)?;
        let v = embed_tensor_vector(&v_small, small, large, p);
        (amb, v)
    };
    for i in large.first()..large.last() {
        if !linalg::is_zero_vector(&amb_large.action(i, i + 1).apply(&v_large)) {
            report.fail(format!("embedded vector is not annihilated by E({i},{})", i + 1));
            return Ok(report);
        }
    }

    // (b) entries of A^q on the highest-weight vector
    let cols_small = power_columns(&amb_small, q, &v_small);
    let cols_large = power_columns(&amb_large, q, &v_large);
    let p = weight.degree() as usize;
    'b: for i in small.indices() {
        for j in small.indices() {
            let here = &cols_small[small.pos(i)][small.pos(j)];
            let lifted = if weight.is_zero() { here.clone() } else { embed_tensor_vector(here, small, large, p) };
            if lifted != cols_large[large.pos(i)][large.pos(j)] {
                report.fail(format!("(A^{q})_{i}^{j} v differs between r = {r} and r = {}", r + 1));
                break 'b;
            }
        }
    }

    // (c) renormalized eigenvalues
    let module_small = cyclic_submodule(&amb_small, &v_small)?;
    let module_large = cyclic_submodule(&amb_large, &v_large)?;
    let mut powers_large = CharacteristicPowers::new(&module_large);
    let chi_small = CharacteristicPowers::new(&module_small).renormalized_scalars(q)?;
    let chi_large = powers_large.renormalized_scalars(q)?;
    if chi_small != chi_large {
        report.fail(format!(
            "eigenvalues [{}] at r = {r} vs [{}] at r = {}",
            join(chi_small.iter().cloned()),
            join(chi_large.iter().cloned()),
            r + 1
        ));
    }
    report = report.param("eigenvalue", serialize_rational(&chi_large[q - 1]));

    // (a) out-of-support diagonal entries
    let previous = if q == 1 { ExactScalar::zero() } else { chi_large[q - 2].clone() };
    let power = powers_large.power(q)?.clone();
    let mut checked = 0usize;
    for (t, label) in module_large.space().basis().iter().enumerate() {
        let bound = label.weight.support_bound().unwrap_or(large.first() - 1);
        let u = module_large.space().unit(t);
        let expected: Vector = u.iter().map(|x| x * &previous).collect();
        for i in large.indices().filter(|&i| i > bound) {
            checked += 1;
            if power.get(i, i).apply(&u) != expected {
                report.fail(format!("((A^{q})_{i}^{i} - I_{}) is non-zero on basis vector {t}", q - 1));
            }
        }
    }
    Ok(report.param("out_of_support_checks", checked))
}

/// Renormalized eigenvalues on the module equal the closed form for every
/// order up to `qmax`.
pub fn verify_oracle_agreement(hw_module: &Representation, qmax: usize) -> Result<VerificationReport> {
    let weight = hw_module.top_weight().clone();
    let sig = hw_module.signature();
    let mut report = VerificationReport::new(Claim::OracleAgreement)
        .param("m", sig.m)
        .param("n", sig.n)
        .param("weight", &weight)
        .param("qmax", qmax);
    let oracle = CharacteristicPowers::new(hw_module).renormalized_scalars(qmax)?;
    for (q, value) in (1..=qmax).zip(&oracle) {
        let formula = chi_glminf(sig.m, &weight, q)?;
        if formula.value != *value {
            report.fail(format!("q = {q}: module gives {value}, formula gives {}", formula.value));
        }
    }
    Ok(report.param("eigenvalues", join(oracle.into_iter())))
}

/// The normal-ordered quadratic invariant acts by the renormalized `χ(I_2)`.
pub fn verify_normal_ordering(hw_module: &Representation) -> Result<VerificationReport> {
    let sig = hw_module.signature();
    let mut report = VerificationReport::new(Claim::NormalOrdering)
        .param("m", sig.m)
        .param("n", sig.n)
        .param("weight", hw_module.top_weight());
    let chi = CharacteristicPowers::new(hw_module).renormalized_scalars(2)?;
    let op = explicit_i2(hw_module)?;
    match op.scalar_witness() {
        Ok(c) if c == chi[1] => {}
        Ok(c) => report.fail(format!("normal-ordered form acts by {c}, renormalized I_2 by {}", chi[1])),
        Err((r, c)) => report.fail(format!("normal-ordered form is not scalar at ({r},{c})")),
    }
    Ok(report)
}

/// The closed-form `χ(I_2)` equals `(Λ, Λ + 2ρ)` on every given weight.
pub fn verify_quadratic_consistency(weights: &[Weight]) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(Claim::QuadraticConsistency).param("weights", weights.len());
    let mut regularized = 0;
    for w in weights {
        let chi = chi_glminf(w.m(), w, 2)?;
        let pairing = pairing_with_2rho(w);
        if chi.value != pairing {
            report.fail(format!("({w}): formula {}, pairing {pairing}", chi.value));
        }
        regularized += usize::from(chi.regularized);
    }
    Ok(report.param("regularized", regularized))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::realize_highest_weight;

    fn w(t: &str) -> Weight {
        Weight::parse(t).unwrap()
    }

    #[test]
    fn tensor_casimir_on_gl11_vector() {
        let v = vector_module(AlgebraSignature::new(1, 1));
        let t = tensor_casimir_operator(&v).unwrap();
        let space = t.domain().clone();
        assert_eq!(t.apply(&space.unit(0)), space.unit(0));
        let minus: Vector = space.unit(3).iter().map(|x| -x).collect();
        assert_eq!(t.apply(&space.unit(3)), minus);
        let spectrum = generalized_spectrum(&t, &[int(1), int(-1)]).unwrap();
        assert_eq!(spectrum, vec![(int(1), 2), (int(-1), 2)]);
    }

    #[test]
    fn characteristic_identity_examples() {
        let v = vector_module(AlgebraSignature::new(1, 1));
        let report = verify_characteristic_identity(&v, &w("1;")).unwrap();
        assert!(report.passed(), "{report}");
        let trivial = trivial_module(AlgebraSignature::new(1, 1));
        assert!(tensor_casimir_operator(&trivial).unwrap().is_zero());
        assert!(verify_characteristic_identity(&trivial, &Weight::zero(1)).unwrap().passed());
        let alt = realize_highest_weight(AlgebraSignature::new(1, 2), &w("1;1")).unwrap();
        let report = verify_characteristic_identity(&alt, &w("1;1")).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.parameters["roots"], "1,-2,0");
    }

    #[test]
    fn truncation_must_reach_k_plus_one() {
        let t = tensor_power(&vector_module(AlgebraSignature::new(1, 1)), 2).unwrap();
        let alt = cyclic_submodule(&t, &[int(0), int(1), int(-1), int(0)]).unwrap();
        assert!(matches!(tensor_casimir_operator(&alt), Err(Error::TruncationTooSmall { r: 1, required: 2 })));
    }

    #[test]
    fn minimal_polynomial_of_t() {
        let v = vector_module(AlgebraSignature::new(1, 1));
        let t = tensor_casimir_operator(&v).unwrap();
        let mp = minimal_polynomial(&t).unwrap();
        assert_eq!(mp, ExactPolynomial::from_ints(&[-1, 0, 1]));
        let f = factor_over_roots(&mp, &[int(1), int(-1)]).unwrap();
        assert_eq!(f, vec![(int(1), 1), (int(-1), 1)]);
        assert!(factor_over_roots(&mp, &[int(1)]).is_none());
    }

    #[test]
    fn invariance_examples() {
        let v = vector_module(AlgebraSignature::new(1, 1));
        let r = verify_invariance(&v, 1).unwrap();
        assert!(r.passed(), "{r}");
        let v12 = vector_module(AlgebraSignature::new(1, 2));
        let r = verify_invariance(&v12, 2).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.parameters["checked"], "81");
    }

    #[test]
    fn stabilization_examples() {
        let r = verify_stabilization(&w("1;"), 2, 1).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_stabilization(&w("1;"), 1, 1).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.parameters["eigenvalue"], "1");
        for rr in 1..=2 {
            let r = verify_stabilization(&w("1;1"), 3, rr).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(matches!(verify_stabilization(&w("1;1"), 2, 0), Err(Error::TruncationTooSmall { .. })));
    }

    #[test]
    fn out_of_support_square_acts_like_i1() {
        // (E_01 E_10 + E_11^2) v_0 = v_0 at truncation 1 for Λ = (1;)
        let v = vector_module(AlgebraSignature::new(1, 1));
        let mut p = CharacteristicPowers::new(&v);
        let a2 = p.power(2).unwrap().get(1, 1).clone();
        assert_eq!(a2.apply(&v.space().unit(0)), v.space().unit(0));
    }

    #[test]
    fn tensor_invariance_and_agreement() {
        let m = realize_highest_weight(AlgebraSignature::new(2, 2), &w("1,1;")).unwrap();
        assert!(verify_tensor_invariance(&m).unwrap().passed());
        assert!(verify_oracle_agreement(&m, 4).unwrap().passed());
        assert!(verify_normal_ordering(&m).unwrap().passed());
    }

    #[test]
    fn embedding_preserves_tuples() {
        let (s, l) = (AlgebraSignature::new(1, 1), AlgebraSignature::new(1, 2));
        // v1 ⊗ v0 is position 2 in base 2 and position 3 in base 3
        let mut v = vec![int(0); 4];
        v[2] = int(5);
        let e = embed_tensor_vector(&v, s, l, 2);
        assert_eq!(e[3], int(5));
        assert_eq!(e.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn quadratic_consistency_on_small_weights() {
        let ws = crate::weights::dominant_weights(2, 4);
        let r = verify_quadratic_consistency(&ws).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(Claim::from_name(c.name()), Some(c));
        }
    }
}
