//! Exact linear algebra over the rationals.
//!
//! Kernels and ranks go through a fraction-free Gauss–Jordan pass: every row
//! is scaled to a primitive integer vector, pivots are chosen by smallest bit
//! size, and rows are re-made primitive after each elimination step so that
//! coefficients stay small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;

pub type Vector = Vec<ExactScalar>;

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

fn to_integer_row(row: &[ExactScalar]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&mut out);
    out
}

/// Reduced row-echelon data: integer rows with one pivot column each, and
/// every pivot column zero outside its own row.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right kernel. Each vector is primitive integral with a
    /// positive leading entry.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![ExactScalar::zero(); self.ncols];
                v[f] = ExactScalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = -ExactScalar::new(row[f].clone(), row[p].clone());
                    }
                }
                normalize_direction(&v)
            })
            .collect()
    }
}

pub fn echelon(rows: &[Vector], ncols: usize) -> Echelon {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            to_integer_row(r)
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == work.len() {
            break;
        }
        let best = (top..work.len()).filter(|&i| !work[i][col].is_zero()).min_by_key(|&i| work[i][col].abs().bits());
        let Some(best) = best else { continue };
        work.swap(top, best);
        let pivot_row = work[top].clone();
        let p = &pivot_row[col];
        for (i, row) in work.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * p - &a * y;
            }
            primitive(row);
        }
        pivots.push(col);
        top += 1;
    }
    work.truncate(top);
    Echelon { rows: work, pivots, ncols }
}

pub fn nullspace(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    echelon(rows, ncols).kernel()
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    echelon(rows, ncols).rank()
}

/// Rescales to a primitive integral vector whose first non-zero entry is
/// positive. The zero vector is returned unchanged.
pub fn normalize_direction(v: &[ExactScalar]) -> Vector {
    let mut ints = to_integer_row(v);
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints.into_iter().map(ExactScalar::from_integer).collect()
}

pub fn is_zero_vector(v: &[ExactScalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Incrementally grown span that keeps the vectors it was fed as its basis
/// and can express any member in that basis.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    dim: usize,
    basis: Vec<Vector>,
    // (pivot column, reduced row with 1 at the pivot, row as a combination of `basis`)
    reduced: Vec<(usize, Vector, Vector)>,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder { dim, basis: Vec::new(), reduced: Vec::new() }
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    fn reduce(&self, v: &[ExactScalar]) -> (Vector, Vector) {
        let mut rem = v.to_vec();
        let mut combo = vec![ExactScalar::zero(); self.basis.len()];
        for (p, row, row_combo) in &self.reduced {
            if rem[*p].is_zero() {
                continue;
            }
            let c = rem[*p].clone();
            for (x, y) in rem.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            for (x, y) in combo.iter_mut().zip(row_combo) {
                if !y.is_zero() {
                    *x += &c * y;
                }
            }
        }
        (rem, combo)
    }

    /// Coordinates of `v` in the basis, or `None` when `v` lies outside the span.
    pub fn coordinates(&self, v: &[ExactScalar]) -> Option<Vector> {
        let (rem, combo) = self.reduce(v);
        is_zero_vector(&rem).then_some(combo)
    }

    /// Adds `v` to the basis if it is independent. Returns whether it was added.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.dim);
        let (rem, combo) = self.reduce(&v);
        let Some(p) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rem[p].recip();
        let n = self.basis.len();
        let mut new_combo: Vector = combo.iter().map(|c| -c * &inv).collect();
        new_combo.push(inv.clone());
        for (_, _, c) in self.reduced.iter_mut() {
            c.push(ExactScalar::zero());
        }
        let row: Vector = rem.iter().map(|x| x * &inv).collect();
        debug_assert_eq!(new_combo.len(), n + 1);
        self.reduced.push((p, row, new_combo));
        self.basis.push(v);
        true
    }
}

/// Dense matrix–vector product.
pub fn mat_vec(rows: &[Vector], v: &[ExactScalar]) -> Vector {
    rows.iter().map(|r| r.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()).collect()
}
