//! The characteristic matrix `A_i^j = (-1)^{⟨i⟩⟨j⟩} E_ji` of a module, its
//! powers and supertraces, the truncated invariants `I_q^(m,n)` and the
//! convergent gl(m/∞) invariants obtained from them by
//! `χ(I_q) = χ(I_q^(m,r)) - (m - r) χ(I_{q-1})`.

use std::sync::Arc;

use crate::algebra::{grading, AlgebraSignature, Index};
use crate::error::{Error, Result};
use crate::modules::{realize_highest_weight, Representation};
use crate::scalar::{int, sign, ExactScalar};
use crate::superspace::{GradedSpace, SparseOperator};
use crate::weights::Weight;

/// Square array of operators indexed by the algebra indices.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    signature: AlgebraSignature,
    space: Arc<GradedSpace>,
    entries: Vec<SparseOperator>,
}

impl OperatorMatrix {
    pub fn signature(&self) -> AlgebraSignature {
        self.signature
    }

    /// Entry `(i, j)`, i.e. `M_i^j`.
    pub fn get(&self, i: Index, j: Index) -> &SparseOperator {
        let d = self.signature.size();
        &self.entries[self.signature.pos(i) * d + self.signature.pos(j)]
    }

    pub fn identity(signature: AlgebraSignature, space: Arc<GradedSpace>) -> Self {
        let entries = signature
            .indices()
            .flat_map(|i| signature.indices().map(move |j| (i, j)))
            .map(|(i, j)| {
                if i == j {
                    SparseOperator::identity(space.clone())
                } else {
                    SparseOperator::zero(space.clone(), space.clone())
                }
            })
            .collect();
        OperatorMatrix { signature, space, entries }
    }

    /// `(self · rhs)_i^j = Σ_k self_i^k ∘ rhs_k^j`.
    pub fn mul(&self, rhs: &OperatorMatrix) -> Result<OperatorMatrix> {
        let sig = self.signature;
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in sig.indices() {
            for j in sig.indices() {
                let mut acc = SparseOperator::zero(self.space.clone(), self.space.clone());
                for k in sig.indices() {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.compose(b)?)?;
                }
                entries.push(acc);
            }
        }
        Ok(OperatorMatrix { signature: sig, space: self.space.clone(), entries })
    }

    /// `(M)_i^j` applied to a vector, for every `i` and `j` at once:
    /// `out[i][j] = M_i^j v`.
    pub fn apply_all(&self, v: &[ExactScalar]) -> Vec<Vec<Vec<ExactScalar>>> {
        let sig = self.signature;
        sig.indices().map(|i| sig.indices().map(|j| self.get(i, j).apply(v)).collect()).collect()
    }
}

/// `A_i^j = (-1)^{⟨i⟩⟨j⟩} π(E_ji)`.
pub fn char_matrix(rep: &Representation) -> OperatorMatrix {
    let sig = rep.signature();
    let entries = sig
        .indices()
        .flat_map(|i| sig.indices().map(move |j| (i, j)))
        .map(|(i, j)| {
            let op = rep.action(j, i);
            if (grading(i) * grading(j)).is_odd() {
                op.scale(&int(-1))
            } else {
                op.clone()
            }
        })
        .collect();
    OperatorMatrix { signature: sig, space: rep.space().clone(), entries }
}

/// `A^q` with `A^0 = δ_ij`.
pub fn matrix_power(a: &OperatorMatrix, q: usize) -> Result<OperatorMatrix> {
    let mut acc = OperatorMatrix::identity(a.signature, a.space.clone());
    for _ in 0..q {
        acc = a.mul(&acc)?;
    }
    Ok(acc)
}

/// `Σ_i (-1)^⟨i⟩ M_i^i`.
pub fn supertrace(a: &OperatorMatrix) -> Result<SparseOperator> {
    let mut acc = SparseOperator::zero(a.space.clone(), a.space.clone());
    for i in a.signature.indices() {
        let d = a.get(i, i);
        acc = if grading(i).is_odd() { acc.sub(d)? } else { acc.add(d)? };
    }
    Ok(acc)
}

/// Characteristic matrix of a module together with its powers, computed
/// once and reused.
#[derive(Clone, Debug)]
pub struct CharacteristicPowers {
    rep: Representation,
    // powers[q] = A^q
    powers: Vec<OperatorMatrix>,
}

impl CharacteristicPowers {
    pub fn new(rep: &Representation) -> Self {
        let a = char_matrix(rep);
        let id = OperatorMatrix::identity(a.signature, a.space.clone());
        CharacteristicPowers { rep: rep.clone(), powers: vec![id, a] }
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn power(&mut self, q: usize) -> Result<&OperatorMatrix> {
        while self.powers.len() <= q {
            let next = self.powers[1].mul(self.powers.last().unwrap())?;
            self.powers.push(next);
        }
        Ok(&self.powers[q])
    }

    /// `I_q^(m,n) = str(A^q)`.
    pub fn truncated_casimir(&mut self, q: usize) -> Result<SparseOperator> {
        supertrace(self.power(q)?)
    }

    /// Scalars `χ(I_1), ..., χ(I_qmax)` of the renormalized invariants,
    /// evaluated at the module's own truncation. Every `I_q^(m,n)` is checked
    /// to be a multiple of the identity.
    pub fn renormalized_scalars(&mut self, qmax: usize) -> Result<Vec<ExactScalar>> {
        let sig = self.rep.signature();
        let k = self.rep.top_weight().k();
        if sig.n < k {
            return Err(Error::TruncationTooSmall { r: sig.n, required: k });
        }
        let shift = int(sig.m as i64 - sig.n as i64);
        let mut out: Vec<ExactScalar> = Vec::with_capacity(qmax);
        for q in 1..=qmax {
            let op = self.truncated_casimir(q)?;
            let s = op.scalar_witness().map_err(|(row, col)| Error::NotScalar { q, row, col })?;
            let value = match out.last() {
                Some(prev) => s - &shift * prev,
                None => s,
            };
            out.push(value);
        }
        Ok(out)
    }
}

/// `(A^q)_i^j v` for all `i, j`, computed column by column without forming
/// operator products: `out[pos(i)][pos(j)]`.
pub fn power_columns(rep: &Representation, q: usize, v: &[ExactScalar]) -> Vec<Vec<Vec<ExactScalar>>> {
    let a = char_matrix(rep);
    let sig = rep.signature();
    let d = sig.size();
    let zero = vec![ExactScalar::from_integer(0.into()); v.len()];
    // cur[k][j] = (A^s)_k^j v
    let mut cur: Vec<Vec<Vec<ExactScalar>>> =
        (0..d).map(|k| (0..d).map(|j| if j == k { v.to_vec() } else { zero.clone() }).collect()).collect();
    for _ in 0..q {
        let mut next = vec![vec![zero.clone(); d]; d];
        for i in sig.indices() {
            for k in sig.indices() {
                let op = a.get(i, k);
                if op.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let w = op.apply(&cur[sig.pos(k)][j]);
                    for (x, y) in next[sig.pos(i)][j].iter_mut().zip(w) {
                        *x += y;
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

/// `I_q^(m,n)` realized on the module.
pub fn truncated_casimir(rep: &Representation, q: usize) -> Result<SparseOperator> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    CharacteristicPowers::new(rep).truncated_casimir(q)
}

/// Smallest truncation used when a module is built for a highest weight:
/// index `k + 1` must exist.
pub fn minimum_truncation(weight: &Weight) -> usize {
    weight.k() + 1
}

/// Eigenvalue of the gl(m/∞) invariant `I_q` on a cyclic highest-weight
/// module, re-derived at the next truncation to confirm stabilization.
pub fn renormalized_casimir(hw_module: &Representation, q: usize) -> Result<ExactScalar> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    let here = CharacteristicPowers::new(hw_module).renormalized_scalars(q)?;
    let sig = hw_module.signature();
    let next_sig = sig.with_truncation(sig.n + 1);
    let next = realize_highest_weight(next_sig, hw_module.top_weight())?;
    let there = CharacteristicPowers::new(&next).renormalized_scalars(q)?;
    let (a, b) = (&here[q - 1], &there[q - 1]);
    if a != b {
        return Err(Error::Unstable { q, r: sig.n, r_next: sig.n + 1, left: a.to_string(), right: b.to_string() });
    }
    Ok(a.clone())
}

/// The normal-ordered quadratic invariant
/// `2 Σ_{j<i} (-1)^⟨j⟩ E_ij E_ji + Σ_i (-1)^⟨i⟩ E_ii (E_ii + 1 - 2i) - 2m I_1`
/// with all sums cut at the truncation.
pub fn explicit_i2(rep: &Representation) -> Result<SparseOperator> {
    let sig = rep.signature();
    let space = rep.space().clone();
    let id = SparseOperator::identity(space.clone());
    let mut acc = SparseOperator::zero(space.clone(), space.clone());
    for i in sig.indices() {
        for j in sig.indices().filter(|&j| j < i) {
            let term = rep.action(i, j).compose(rep.action(j, i))?.scale(&(sign(grading(j).is_odd()) * int(2)));
            acc = acc.add(&term)?;
        }
    }
    let mut first = SparseOperator::zero(space.clone(), space);
    for i in sig.indices() {
        let eii = rep.action(i, i);
        let shifted = eii.add(&id.scale(&int(1 - 2 * i)))?;
        acc = acc.add(&eii.compose(&shifted)?.scale(&sign(grading(i).is_odd())))?;
        first = first.add(eii)?;
    }
    acc.sub(&first.scale(&int(2 * sig.m as i64)))
}

/// `Σ_i (-1)^⟨i⟩ Λ_i (Λ_i + 1 - 2i) - (m + n) Σ Λ_i`: the scalar of
/// `str(A^2)` on a highest-weight vector of gl(m/n).
pub fn truncated_quadratic_eigenvalue(sig: AlgebraSignature, weight: &Weight) -> ExactScalar {
    let total: i64 = weight.iter().map(|(_, v)| v).sum();
    let body: i64 = weight
        .iter()
        .map(|(i, v)| {
            let t = v * (v + 1 - 2 * i);
            if grading(i).is_odd() {
                -t
            } else {
                t
            }
        })
        .sum();
    int(body - (sig.m + sig.n) as i64 * total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{cyclic_submodule, tensor_power, trivial_module, vector_module};

    fn gl11() -> AlgebraSignature {
        AlgebraSignature::new(1, 1)
    }

    fn alt_square() -> Representation {
        let t = tensor_power(&vector_module(gl11()), 2).unwrap();
        let v = vec![int(0), int(1), int(-1), int(0)];
        cyclic_submodule(&t, &v).unwrap()
    }

    #[test]
    fn char_matrix_signs() {
        let v = vector_module(gl11());
        let a = char_matrix(&v);
        assert_eq!(a.get(1, 1), &v.action(1, 1).scale(&int(-1)));
        assert_eq!(a.get(0, 1), v.action(1, 0));
        let i1 = supertrace(&a).unwrap();
        assert_eq!(i1.apply(&v.space().unit(0)), v.space().unit(0));
    }

    #[test]
    fn powers() {
        let v = vector_module(gl11());
        let a = char_matrix(&v);
        let p0 = matrix_power(&a, 0).unwrap();
        assert_eq!(p0.get(0, 0).as_scalar(), Some(int(1)));
        assert!(p0.get(0, 1).is_zero());
        let p1 = matrix_power(&a, 1).unwrap();
        assert_eq!(p1.get(1, 0), a.get(1, 0));
        let p2 = matrix_power(&a, 2).unwrap();
        let e00 = v.action(0, 0);
        let expected = e00.compose(e00).unwrap().add(&v.action(1, 0).compose(v.action(0, 1)).unwrap()).unwrap();
        assert_eq!(p2.get(0, 0), &expected);
    }

    #[test]
    fn supertraces_on_the_gl11_vector_module() {
        let v = vector_module(gl11());
        let a = char_matrix(&v);
        assert!(supertrace(&matrix_power(&a, 0).unwrap()).unwrap().is_zero());
        assert_eq!(supertrace(&a).unwrap().as_scalar(), Some(int(1)));
        assert!(supertrace(&matrix_power(&a, 2).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn truncated_casimir_examples() {
        assert!(truncated_casimir(&vector_module(gl11()), 2).unwrap().is_zero());
        assert_eq!(truncated_casimir(&alt_square(), 2).unwrap().as_scalar(), Some(int(-2)));
        let t = tensor_power(&vector_module(AlgebraSignature::new(2, 1)), 2).unwrap();
        let mut first = SparseOperator::zero(t.space().clone(), t.space().clone());
        for i in t.signature().indices() {
            first = first.add(t.action(i, i)).unwrap();
        }
        assert_eq!(truncated_casimir(&t, 1).unwrap(), first);
        assert!(matches!(truncated_casimir(&t, 0), Err(Error::ZeroOrder)));
    }

    #[test]
    fn renormalized_examples() {
        let v = vector_module(gl11());
        assert_eq!(renormalized_casimir(&v, 2).unwrap(), int(0));
        assert_eq!(renormalized_casimir(&v, 3).unwrap(), int(1));
        assert_eq!(renormalized_casimir(&alt_square(), 2).unwrap(), int(-2));
    }

    #[test]
    fn not_scalar_on_a_non_cyclic_module() {
        let t = tensor_power(&vector_module(gl11()), 2).unwrap();
        let err = CharacteristicPowers::new(&t).renormalized_scalars(2).unwrap_err();
        assert!(matches!(err, Error::NotScalar { q: 2, .. }));
    }

    #[test]
    fn explicit_quadratic_examples() {
        assert!(explicit_i2(&vector_module(gl11())).unwrap().is_zero());
        assert_eq!(explicit_i2(&alt_square()).unwrap().as_scalar(), Some(int(-2)));
        assert!(explicit_i2(&trivial_module(AlgebraSignature::new(2, 2))).unwrap().is_zero());
    }

    #[test]
    fn central_on_small_modules() {
        for (m, n, p) in [(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 1, 3)] {
            let t = tensor_power(&vector_module(AlgebraSignature::new(m, n)), p).unwrap();
            let mut powers = CharacteristicPowers::new(&t);
            for q in 1..=4 {
                let c = powers.truncated_casimir(q).unwrap();
                for k in t.signature().indices() {
                    for l in t.signature().indices() {
                        assert!(t.action(k, l).supercommutator(&c).unwrap().is_zero(), "q={q} ({k},{l})");
                    }
                }
            }
        }
    }
}
