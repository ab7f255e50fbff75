//! Graded bases and exact sparse operators between them.
//!
//! Sign convention for tensor products, used everywhere in the crate:
//!
//! ```text
//! (x ⊗ y)(v ⊗ w) = (-1)^{|y||v|} xv ⊗ yw
//! ```
//!
//! so an operator lifted into the second slot picks up `(-1)^{|X||v|}` from
//! the first-factor basis vector `v` it moves past. This is the Koszul rule;
//! with it the coproduct `Δ(E_ij) = E_ij ⊗ 1 + 1 ⊗ E_ij` is a superalgebra
//! morphism and the tensor realization of the characteristic matrix
//! reproduces `A_i^j = (-1)^{⟨i⟩⟨j⟩} E_ji` blockwise.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::Index;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalar::ExactScalar;
use crate::weights::Weight;

/// Largest dimension for which dense matrices are ever materialized.
pub const DENSE_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        if self.is_odd() && rhs.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    /// Distinguishing tag: the index tuple for tensor bases, an ordinal for
    /// derived bases.
    pub key: Vec<Index>,
    pub parity: Parity,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    m: usize,
    basis: Vec<BasisLabel>,
    factors: Option<(Arc<GradedSpace>, Arc<GradedSpace>)>,
}

impl GradedSpace {
    pub fn new(m: usize, basis: Vec<BasisLabel>) -> Self {
        let mut seen = HashSet::new();
        for b in &basis {
            assert_eq!(b.weight.m(), m, "basis weight of the wrong signature");
            assert!(seen.insert(b.key.clone()), "duplicate basis label {:?}", b.key);
        }
        GradedSpace { m, basis, factors: None }
    }

    /// Ordered tensor product; basis vector `(a, b)` sits at `a * dim(b) + b`.
    pub fn tensor(left: &Arc<GradedSpace>, right: &Arc<GradedSpace>) -> Self {
        assert_eq!(left.m, right.m);
        let mut basis = Vec::with_capacity(left.dim() * right.dim());
        for a in &left.basis {
            for b in &right.basis {
                let mut key = a.key.clone();
                key.extend_from_slice(&b.key);
                basis.push(BasisLabel { key, parity: a.parity + b.parity, weight: &a.weight + &b.weight });
            }
        }
        GradedSpace { m: left.m, basis, factors: Some((left.clone(), right.clone())) }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.basis[i]
    }

    pub fn factors(&self) -> Option<&(Arc<GradedSpace>, Arc<GradedSpace>)> {
        self.factors.as_ref()
    }

    /// Unit vector.
    pub fn unit(&self, i: usize) -> Vector {
        let mut v = vec![ExactScalar::zero(); self.dim()];
        v[i] = ExactScalar::one();
        v
    }

    /// Weight and parity shared by all non-zero coordinates, or `None` if the
    /// vector is zero or mixes weights or parities.
    pub fn homogeneous_degree(&self, v: &[ExactScalar]) -> Option<(Parity, Weight)> {
        let mut out: Option<(Parity, &Weight)> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let b = &self.basis[i];
            match out {
                None => out = Some((b.parity, &b.weight)),
                Some((p, w)) if p == b.parity && w == &b.weight => {}
                Some(_) => return None,
            }
        }
        out.map(|(p, w)| (p, w.clone()))
    }
}

pub fn same_space(a: &Arc<GradedSpace>, b: &Arc<GradedSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exact matrix between two graded spaces, homogeneous of a fixed parity and
/// weight shift. Entries are keyed by `(row, column)` with no stored zeros.
#[derive(Clone, Debug)]
pub struct SparseOperator {
    domain: Arc<GradedSpace>,
    codomain: Arc<GradedSpace>,
    entries: BTreeMap<(usize, usize), ExactScalar>,
    parity: Parity,
    weight_shift: Weight,
}

impl PartialEq for SparseOperator {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.domain, &other.domain)
            && same_space(&self.codomain, &other.codomain)
            && self.entries == other.entries
            && (self.entries.is_empty() || (self.parity == other.parity && self.weight_shift == other.weight_shift))
    }
}

impl SparseOperator {
    /// Checked constructor: rejects out-of-range keys and entries that break
    /// homogeneity.
    pub fn new(
        domain: Arc<GradedSpace>,
        codomain: Arc<GradedSpace>,
        parity: Parity,
        weight_shift: Weight,
        entries: impl IntoIterator<Item = ((usize, usize), ExactScalar)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((r, c), x) in entries {
            if r >= codomain.dim() || c >= domain.dim() {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({r},{c}) outside {}x{}",
                    codomain.dim(),
                    domain.dim()
                )));
            }
            if x.is_zero() {
                continue;
            }
            let (to, from) = (codomain.label(r), domain.label(c));
            if to.parity != from.parity + parity || to.weight != &from.weight + &weight_shift {
                return Err(Error::Inhomogeneous(format!("entry ({r},{c})")));
            }
            map.insert((r, c), x);
        }
        Ok(SparseOperator { domain, codomain, entries: map, parity, weight_shift })
    }

    fn raw(
        domain: Arc<GradedSpace>,
        codomain: Arc<GradedSpace>,
        parity: Parity,
        weight_shift: Weight,
        entries: BTreeMap<(usize, usize), ExactScalar>,
    ) -> Self {
        let op = SparseOperator { domain, codomain, entries, parity, weight_shift };
        debug_assert!(op.homogeneity_violation().is_none(), "inhomogeneous operator");
        op
    }

    pub fn zero(domain: Arc<GradedSpace>, codomain: Arc<GradedSpace>) -> Self {
        let m = domain.m();
        SparseOperator {
            domain,
            codomain,
            entries: BTreeMap::new(),
            parity: Parity::Even,
            weight_shift: Weight::zero(m),
        }
    }

    pub fn scalar(space: Arc<GradedSpace>, c: ExactScalar) -> Self {
        let entries =
            if c.is_zero() { BTreeMap::new() } else { (0..space.dim()).map(|i| ((i, i), c.clone())).collect() };
        let m = space.m();
        SparseOperator {
            domain: space.clone(),
            codomain: space,
            entries,
            parity: Parity::Even,
            weight_shift: Weight::zero(m),
        }
    }

    pub fn identity(space: Arc<GradedSpace>) -> Self {
        Self::scalar(space, ExactScalar::one())
    }

    pub fn domain(&self) -> &Arc<GradedSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<GradedSpace> {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn weight_shift(&self) -> &Weight {
        &self.weight_shift
    }

    pub fn is_square(&self) -> bool {
        same_space(&self.domain, &self.codomain)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> ExactScalar {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &ExactScalar)> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    fn homogeneity_violation(&self) -> Option<(usize, usize)> {
        self.entries.keys().copied().find(|&(r, c)| {
            let (to, from) = (self.codomain.label(r), self.domain.label(c));
            to.parity != from.parity + self.parity || to.weight != &from.weight + &self.weight_shift
        })
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        if !same_space(&rhs.codomain, &self.domain) {
            return Err(Error::ShapeMismatch("codomain of the right factor differs from domain of the left".into()));
        }
        let mut out: BTreeMap<(usize, usize), ExactScalar> = BTreeMap::new();
        for (&(r, k), x) in &self.entries {
            for (&(_, c), y) in rhs.entries.range((k, 0)..=(k, usize::MAX)) {
                *out.entry((r, c)).or_insert_with(ExactScalar::zero) += x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SparseOperator::raw(
            rhs.domain.clone(),
            self.codomain.clone(),
            self.parity + rhs.parity,
            &self.weight_shift + &rhs.weight_shift,
            out,
        ))
    }

    fn combine(&self, rhs: &SparseOperator, sign: &ExactScalar) -> Result<SparseOperator> {
        if !same_space(&self.domain, &rhs.domain) || !same_space(&self.codomain, &rhs.codomain) {
            return Err(Error::ShapeMismatch("operands act between different spaces".into()));
        }
        let (parity, shift) = match (self.is_zero(), rhs.is_zero()) {
            (true, _) => (rhs.parity, rhs.weight_shift.clone()),
            (false, true) => (self.parity, self.weight_shift.clone()),
            (false, false) => {
                if self.parity != rhs.parity || self.weight_shift != rhs.weight_shift {
                    return Err(Error::Inhomogeneous(format!(
                        "sum of degrees ({:?}, {}) and ({:?}, {})",
                        self.parity, self.weight_shift, rhs.parity, rhs.weight_shift
                    )));
                }
                (self.parity, self.weight_shift.clone())
            }
        };
        let mut out = self.entries.clone();
        for (k, y) in &rhs.entries {
            *out.entry(*k).or_insert_with(ExactScalar::zero) += sign * y;
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SparseOperator {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: out,
            parity,
            weight_shift: shift,
        })
    }

    pub fn add(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        self.combine(rhs, &ExactScalar::one())
    }

    pub fn sub(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        self.combine(rhs, &-ExactScalar::one())
    }

    pub fn scale(&self, c: &ExactScalar) -> SparseOperator {
        let mut out = self.clone();
        if c.is_zero() {
            out.entries.clear();
        } else {
            for v in out.entries.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// `XY - (-1)^{|X||Y|} YX`.
    pub fn supercommutator(&self, rhs: &SparseOperator) -> Result<SparseOperator> {
        if !self.is_square() || !rhs.is_square() || !same_space(&self.domain, &rhs.domain) {
            return Err(Error::ShapeMismatch("supercommutator needs square operators on one space".into()));
        }
        let xy = self.compose(rhs)?;
        let yx = rhs.compose(self)?;
        if (self.parity * rhs.parity).is_odd() {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        }
    }

    pub fn apply(&self, v: &[ExactScalar]) -> Vector {
        assert_eq!(v.len(), self.domain.dim());
        let mut out = vec![ExactScalar::zero(); self.codomain.dim()];
        for (&(r, c), x) in &self.entries {
            if !v[c].is_zero() {
                out[r] += x * &v[c];
            }
        }
        out
    }

    /// `Some(c)` when the operator equals `c` times the identity.
    pub fn as_scalar(&self) -> Option<ExactScalar> {
        self.scalar_witness().ok()
    }

    /// The scalar, or the first entry that prevents the operator from being one.
    pub fn scalar_witness(&self) -> std::result::Result<ExactScalar, (usize, usize)> {
        if !self.is_square() {
            return Err((0, 0));
        }
        let c = self.get(0, 0);
        for (&(r, col), x) in &self.entries {
            if r != col || *x != c {
                return Err((r, col));
            }
        }
        if !c.is_zero() && self.entries.len() != self.domain.dim() {
            let missing = (0..self.domain.dim()).find(|&i| !self.entries.contains_key(&(i, i))).unwrap_or(0);
            return Err((missing, missing));
        }
        Ok(c)
    }

    pub fn to_dense(&self) -> Result<Vec<Vector>> {
        let (rows, cols) = (self.codomain.dim(), self.domain.dim());
        if rows.max(cols) > DENSE_CAP {
            return Err(Error::DimensionCap { dim: rows.max(cols), cap: DENSE_CAP });
        }
        let mut out = vec![vec![ExactScalar::zero(); cols]; rows];
        for (&(r, c), x) in &self.entries {
            out[r][c] = x.clone();
        }
        Ok(out)
    }

    /// Rows of the matrix restricted to the given columns (rows with no entry
    /// there are dropped).
    pub fn column_block(&self, cols: &[usize]) -> Vec<Vector> {
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
        for (&(r, c), x) in &self.entries {
            if let Some(&k) = pos.get(&c) {
                rows.entry(r).or_insert_with(|| vec![ExactScalar::zero(); cols.len()])[k] = x.clone();
            }
        }
        rows.into_values().collect()
    }
}

impl fmt::Display for SparseOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}", self.codomain.dim(), self.domain.dim())?;
        for (&(r, c), x) in &self.entries {
            write!(f, " ({r},{c})={x}")?;
        }
        write!(f, "]")
    }
}

/// Tensor slot for [`tensor_lift`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    First,
    Second,
}

/// Lifts a square operator on one factor of `target` to the whole product:
/// `X ⊗ 1` for the first slot, `1 ⊗ X` with Koszul signs for the second.
pub fn tensor_lift(x: &SparseOperator, slot: Slot, target: &Arc<GradedSpace>) -> Result<SparseOperator> {
    let slot_no = match slot {
        Slot::First => 1,
        Slot::Second => 2,
    };
    let (left, right) = target.factors().ok_or(Error::SlotMismatch { slot: slot_no })?;
    if !x.is_square() {
        return Err(Error::ShapeMismatch("only square operators can be lifted".into()));
    }
    let factor = if slot == Slot::First { left } else { right };
    if !same_space(factor, x.domain()) {
        return Err(Error::SlotMismatch { slot: slot_no });
    }
    let db = right.dim();
    let mut out = BTreeMap::new();
    match slot {
        Slot::First => {
            for (&(r, c), v) in &x.entries {
                for b in 0..db {
                    out.insert((r * db + b, c * db + b), v.clone());
                }
            }
        }
        Slot::Second => {
            for a in 0..left.dim() {
                let flip = (x.parity * left.label(a).parity).is_odd();
                for (&(r, c), v) in &x.entries {
                    out.insert((a * db + r, a * db + c), if flip { -v } else { v.clone() });
                }
            }
        }
    }
    Ok(SparseOperator::raw(target.clone(), target.clone(), x.parity, x.weight_shift.clone(), out))
}
