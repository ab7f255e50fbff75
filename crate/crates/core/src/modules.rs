//! Explicit representations: the vector module, Koszul-signed tensor powers,
//! highest-weight vectors and the cyclic submodules they generate.
//!
//! These modules are the brute-force route for every eigenvalue claim. A
//! cyclic module generated by a highest-weight vector need not be irreducible
//! when the weight is atypical; central elements still act on it by the
//! scalar fixed by the highest weight, which is all the eigenvalue checks use.

use std::collections::{BTreeMap, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{grading, AlgebraSignature, Combination, Index};
use crate::error::{Error, Result};
use crate::linalg::{self, SpanBuilder, Vector};
use crate::scalar::{int, ExactScalar};
use crate::superspace::{tensor_lift, BasisLabel, GradedSpace, Parity, Slot, SparseOperator};
use crate::weights::Weight;

pub const DEFAULT_DIM_CAP: usize = 4096;

static DIM_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DIM_CAP);

/// Largest module dimension that will be constructed.
pub fn dimension_cap() -> usize {
    DIM_CAP.load(Ordering::Relaxed)
}

pub fn set_dimension_cap(cap: usize) {
    DIM_CAP.store(cap, Ordering::Relaxed);
}

/// A finite-dimensional module of a truncation gl(m/n): a graded space and
/// one operator per generator `E_ij`.
#[derive(Clone, Debug)]
pub struct Representation {
    signature: AlgebraSignature,
    space: Arc<GradedSpace>,
    // row-major over index positions
    action: Vec<SparseOperator>,
    // basis vectors in the coordinates of the module this one was cut out of
    ambient_basis: Option<Vec<Vector>>,
}

impl Representation {
    pub fn signature(&self) -> AlgebraSignature {
        self.signature
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The operator realizing `E_ij`.
    pub fn action(&self, i: Index, j: Index) -> &SparseOperator {
        let d = self.signature.size();
        &self.action[self.signature.pos(i) * d + self.signature.pos(j)]
    }

    pub fn ambient_basis(&self) -> Option<&[Vector]> {
        self.ambient_basis.as_deref()
    }

    /// Weight of the first basis vector; for cyclic modules this is the
    /// generating vector.
    pub fn top_weight(&self) -> &Weight {
        &self.space.label(0).weight
    }

    /// Realizes a formal combination of generators.
    pub fn realize(&self, comb: &Combination) -> Result<SparseOperator> {
        let mut acc = SparseOperator::zero(self.space.clone(), self.space.clone());
        for ((i, j), c) in comb.terms() {
            self.signature.check(i)?;
            self.signature.check(j)?;
            acc = acc.add(&self.action(i, j).scale(&int(c)))?;
        }
        Ok(acc)
    }

    /// First quadruple `(i, j, k, l)` whose realized supercommutator differs
    /// from the structure constants. Restricted to simple generators when
    /// `simple_only` is set.
    pub fn relation_violation(&self, simple_only: bool) -> Result<Option<(Index, Index, Index, Index)>> {
        let sig = self.signature;
        let gens: Vec<(Index, Index)> = if simple_only {
            let mut g = Vec::new();
            for i in sig.first()..sig.last() {
                g.push((i, i + 1));
                g.push((i + 1, i));
            }
            g.extend(sig.indices().map(|i| (i, i)));
            g
        } else {
            sig.indices().flat_map(|i| sig.indices().map(move |j| (i, j))).collect()
        };
        for &(i, j) in &gens {
            for &(k, l) in &gens {
                let lhs = self.action(i, j).supercommutator(self.action(k, l))?;
                let rhs = self.realize(&sig.structure_supercommutator(i, j, k, l)?)?;
                if lhs != rhs {
                    return Ok(Some((i, j, k, l)));
                }
            }
        }
        Ok(None)
    }
}

fn elementary(space: &Arc<GradedSpace>, sig: AlgebraSignature, i: Index, j: Index) -> SparseOperator {
    let m = sig.m;
    SparseOperator::new(
        space.clone(),
        space.clone(),
        sig.generator_parity(i, j),
        &Weight::epsilon(m, i) - &Weight::epsilon(m, j),
        [((sig.pos(i), sig.pos(j)), int(1))],
    )
    .expect("elementary matrices are homogeneous")
}

/// The defining module: basis `b_i` of parity `⟨i⟩` and weight `ε_i`, with
/// `E_ij` acting as the elementary matrix `e_ij`.
pub fn vector_module(sig: AlgebraSignature) -> Representation {
    let basis = sig
        .indices()
        .map(|i| BasisLabel { key: vec![i], parity: grading(i), weight: Weight::epsilon(sig.m, i) })
        .collect();
    let space = Arc::new(GradedSpace::new(sig.m, basis));
    let action = sig
        .indices()
        .flat_map(|i| sig.indices().map(move |j| (i, j)))
        .map(|(i, j)| elementary(&space, sig, i, j))
        .collect();
    Representation { signature: sig, space, action, ambient_basis: None }
}

/// The one-dimensional module on which every generator acts as zero.
pub fn trivial_module(sig: AlgebraSignature) -> Representation {
    let space = Arc::new(GradedSpace::new(
        sig.m,
        vec![BasisLabel { key: Vec::new(), parity: Parity::Even, weight: Weight::zero(sig.m) }],
    ));
    let zero = SparseOperator::zero(space.clone(), space.clone());
    Representation { signature: sig, space, action: vec![zero; sig.size() * sig.size()], ambient_basis: None }
}

/// `a ⊗ b` with `E_ij` acting as `E_ij ⊗ 1 + 1 ⊗ E_ij` (Koszul signs).
pub fn tensor_product(a: &Representation, b: &Representation) -> Result<Representation> {
    if a.signature != b.signature {
        return Err(Error::ShapeMismatch(format!("{} vs {}", a.signature, b.signature)));
    }
    let dim = a.dim() * b.dim();
    if dim > dimension_cap() {
        return Err(Error::DimensionCap { dim, cap: dimension_cap() });
    }
    let space = Arc::new(GradedSpace::tensor(&a.space, &b.space));
    let action = a
        .action
        .iter()
        .zip(&b.action)
        .map(|(x, y)| tensor_lift(x, Slot::First, &space)?.add(&tensor_lift(y, Slot::Second, &space)?))
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation { signature: a.signature, space, action, ambient_basis: None };
    debug_assert_eq!(rep.relation_violation(true).ok().flatten(), None);
    Ok(rep)
}

/// `rep^{⊗p}`, built left to right so the Koszul sign of each slot collects
/// the parities of all factors before it.
pub fn tensor_power(rep: &Representation, p: usize) -> Result<Representation> {
    assert!(p >= 1, "tensor power needs p >= 1");
    let dim = (rep.dim() as u128).checked_pow(p as u32).unwrap_or(u128::MAX);
    if dim > dimension_cap() as u128 {
        return Err(Error::DimensionCap { dim: dim.min(usize::MAX as u128) as usize, cap: dimension_cap() });
    }
    let mut acc = rep.clone();
    for _ in 1..p {
        acc = tensor_product(&acc, rep)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightReport {
    pub weight: Weight,
    pub vector: Vector,
    pub is_dominant: bool,
}

fn weight_spaces(rep: &Representation) -> BTreeMap<Weight, Vec<usize>> {
    let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (k, b) in rep.space.basis().iter().enumerate() {
        out.entry(b.weight.clone()).or_default().push(k);
    }
    out
}

fn joint_kernel(rep: &Representation, cols: &[usize]) -> Vec<Vector> {
    let sig = rep.signature;
    let rows: Vec<Vector> = (sig.first()..sig.last()).flat_map(|i| rep.action(i, i + 1).column_block(cols)).collect();
    linalg::nullspace(&rows, cols.len())
        .into_iter()
        .map(|local| {
            let mut v = vec![ExactScalar::zero(); rep.dim()];
            for (c, x) in cols.iter().zip(local) {
                v[*c] = x;
            }
            v
        })
        .collect()
}

/// Joint kernel of the simple raising generators, weight space by weight
/// space, highest weights first.
pub fn highest_weight_vectors(rep: &Representation) -> Vec<HighestWeightReport> {
    weight_spaces(rep)
        .into_iter()
        .rev()
        .flat_map(|(w, cols)| {
            let dominant = w.is_in_dn_plus();
            joint_kernel(rep, &cols).into_iter().map(move |vector| HighestWeightReport {
                weight: w.clone(),
                vector,
                is_dominant: dominant,
            })
        })
        .collect()
}

/// Highest-weight vectors of one weight only.
pub fn highest_weight_vectors_of_weight(rep: &Representation, weight: &Weight) -> Vec<Vector> {
    let cols: Vec<usize> = (0..rep.dim()).filter(|&k| &rep.space.label(k).weight == weight).collect();
    if cols.is_empty() {
        return Vec::new();
    }
    joint_kernel(rep, &cols)
}

/// Smallest invariant subspace containing `v`, with the action restricted to
/// it. The basis starts with `v` and grows by applying generators (lowering
/// ones first) until closure; each basis vector is a weight vector.
pub fn cyclic_submodule(rep: &Representation, v: &[ExactScalar]) -> Result<Representation> {
    if linalg::is_zero_vector(v) {
        return Err(Error::ZeroVector);
    }
    let (_, top) = rep.space.homogeneous_degree(v).ok_or(Error::NotHomogeneous)?;
    let sig = rep.signature;
    let mut generators: Vec<(Index, Index)> = Vec::new();
    for i in sig.indices() {
        for j in sig.indices().filter(|&j| j < i) {
            generators.push((i, j));
        }
    }
    for i in sig.indices() {
        for j in sig.indices().filter(|&j| j > i) {
            generators.push((i, j));
        }
    }

    let mut spans: BTreeMap<Weight, SpanBuilder> = BTreeMap::new();
    let mut order: Vec<(Weight, usize)> = Vec::new();
    let mut queue: VecDeque<Vector> = VecDeque::new();
    spans.entry(top.clone()).or_insert_with(|| SpanBuilder::new(rep.dim())).insert(v.to_vec());
    order.push((top, 0));
    queue.push_back(v.to_vec());
    while let Some(u) = queue.pop_front() {
        for &(i, j) in &generators {
            let op = rep.action(i, j);
            let w = op.apply(&u);
            if linalg::is_zero_vector(&w) {
                continue;
            }
            let weight = rep.space.label(w.iter().position(|x| !x.is_zero()).unwrap()).weight.clone();
            let span = spans.entry(weight.clone()).or_insert_with(|| SpanBuilder::new(rep.dim()));
            let local = span.len();
            if span.insert(w.clone()) {
                order.push((weight, local));
                queue.push_back(w);
            }
        }
    }

    let basis_vectors: Vec<Vector> = order.iter().map(|(w, t)| spans[w].basis()[*t].clone()).collect();
    let global: BTreeMap<(Weight, usize), usize> = order.iter().cloned().enumerate().map(|(g, key)| (key, g)).collect();
    let labels = order
        .iter()
        .enumerate()
        .map(|(g, (w, _))| {
            let first = basis_vectors[g].iter().position(|x| !x.is_zero()).unwrap();
            BasisLabel { key: vec![g as Index], parity: rep.space.label(first).parity, weight: w.clone() }
        })
        .collect();
    let space = Arc::new(GradedSpace::new(sig.m, labels));

    let mut action = Vec::with_capacity(sig.size() * sig.size());
    for i in sig.indices() {
        for j in sig.indices() {
            let op = rep.action(i, j);
            let mut entries = Vec::new();
            for (s, b) in basis_vectors.iter().enumerate() {
                let y = op.apply(b);
                if linalg::is_zero_vector(&y) {
                    continue;
                }
                let weight = &order[s].0 + op.weight_shift();
                let coords =
                    spans.get(&weight).and_then(|span| span.coordinates(&y)).expect("cyclic span is invariant");
                for (t, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push(((global[&(weight.clone(), t)], s), c));
                    }
                }
            }
            action.push(SparseOperator::new(
                space.clone(),
                space.clone(),
                op.parity(),
                op.weight_shift().clone(),
                entries,
            )?);
        }
    }
    let out = Representation { signature: sig, space, action, ambient_basis: Some(basis_vectors) };
    debug_assert_eq!(out.relation_violation(true).ok().flatten(), None);
    Ok(out)
}

/// A cyclic module with highest weight `weight` over `sig`, cut out of the
/// `|weight|`-th tensor power of the vector module (the trivial module for
/// the zero weight).
pub fn realize_highest_weight(sig: AlgebraSignature, weight: &Weight) -> Result<Representation> {
    let not_realizable = || Error::NotRealizable { weight: weight.to_string(), m: sig.m, n: sig.n };
    if weight.m() != sig.m {
        return Err(Error::MixedSignature { left: sig.m, right: weight.m() });
    }
    if weight.is_zero() {
        return Ok(trivial_module(sig));
    }
    if weight.iter().any(|(_, v)| v < 0) || weight.support_bound().is_some_and(|b| b > sig.last()) {
        return Err(not_realizable());
    }
    let p = weight.degree() as usize;
    let power = tensor_power(&vector_module(sig), p)?;
    let v = highest_weight_vectors_of_weight(&power, weight).into_iter().next().ok_or_else(not_realizable)?;
    cyclic_submodule(&power, &v)
}
