//! Closed-form eigenvalues of the Casimir invariants.
//!
//! With characteristic roots `α_i = (-1)^⟨i⟩ (Λ_i - i + 1) - m`, the gl(m/k)
//! invariant acts on the irreducible module of highest weight `Λ` by
//!
//! ```text
//! Σ_i (-1)^⟨i⟩ α_i^q Π_{j≠i} (α_i - α_j + (-1)^⟨j⟩) / (α_i - α_j)
//! ```
//!
//! and the gl(m/∞) invariant by the same sum with `α_i^q` replaced by
//! `P_q(α_i)`, where `P_q(x) = x^q - (m - k) P_{q-1}(x)`, `P_1(x) = x`.
//!
//! When two roots coincide the sum has removable poles. The roots are then
//! moved apart along `α_i + c_i t` with distinct integer slopes, the sum is
//! formed as a rational function of `t`, and its value at `t = 0` is taken.
//! A pole that survives is reported as [`Error::DegenerateRoots`].

use crate::algebra::{grading, Index};
use crate::error::{Error, Result};
use crate::poly::{ExactPolynomial, LimitAtZero, RationalFunction};
use crate::scalar::{int, sign, ExactScalar};
use crate::weights::Weight;

use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootList {
    pub roots: Vec<(Index, ExactScalar)>,
}

impl RootList {
    pub fn values(&self) -> impl Iterator<Item = &ExactScalar> {
        self.roots.iter().map(|(_, a)| a)
    }

    /// First pair of indices with equal roots.
    pub fn collision(&self) -> Option<(Index, Index)> {
        for (a, (i, x)) in self.roots.iter().enumerate() {
            for (j, y) in &self.roots[a + 1..] {
                if x == y {
                    return Some((*i, *j));
                }
            }
        }
        None
    }
}

/// Range of indices for [`alpha_roots`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootRange {
    /// `-m+1..=k`
    UpToK,
    /// `-m+1..=k+1`
    UpToKPlusOne,
}

/// A computed eigenvalue; `regularized` records that coinciding roots had to
/// be separated to evaluate the formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub value: ExactScalar,
    pub regularized: bool,
}

pub fn alpha(m: usize, weight: &Weight, i: Index) -> ExactScalar {
    let base = int(weight.get(i) - i + 1);
    let signed = if grading(i).is_odd() { -base } else { base };
    signed - int(m as i64)
}

pub fn alpha_roots(weight: &Weight, range: RootRange) -> RootList {
    let k = weight.k() as Index;
    let last = match range {
        RootRange::UpToK => k,
        RootRange::UpToKPlusOne => k + 1,
    };
    RootList { roots: (weight.first()..=last).map(|i| (i, alpha(weight.m(), weight, i))).collect() }
}

/// `P_q` from its recursion.
pub fn p_poly(q: usize, shift: i64) -> ExactPolynomial {
    assert!(q >= 1);
    let x = ExactPolynomial::x();
    let s = ExactPolynomial::constant(int(shift));
    let mut p = x.clone();
    for d in 2..=q {
        p = &x.pow(d as u32) - &(&s * &p);
    }
    p
}

/// `x (x^q - (-1)^q s^q) / (x + s)` by exact polynomial division. Panics if
/// the division leaves a remainder.
pub fn p_poly_closed_form(q: usize, shift: i64) -> ExactPolynomial {
    assert!(q >= 1);
    let x = ExactPolynomial::x();
    let c = int(-shift).pow(q as i32);
    let numer = &x.pow(q as u32) - &ExactPolynomial::constant(c);
    let (quot, rem) = numer.div_rem(&ExactPolynomial::linear(int(shift), int(1)));
    assert!(rem.is_zero(), "x + s does not divide x^q - (-s)^q");
    &x * &quot
}

/// `α (α^q - (-1)^q s^q) / (α + s)`.
pub fn p_closed_value(alpha: &ExactScalar, q: usize, shift: i64, index: Index) -> Result<ExactScalar> {
    let den = alpha + int(shift);
    if den.is_zero() {
        return Err(Error::SingularDenominator { index });
    }
    Ok(alpha * (alpha.pow(q as i32) - int(-shift).pow(q as i32)) / den)
}

#[derive(Clone, Copy)]
enum Numerator {
    Power(usize),
    ClosedP(usize, i64),
}

fn check(m: usize, weight: &Weight, q: usize) -> Result<()> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    if weight.m() != m {
        return Err(Error::MixedSignature { left: m, right: weight.m() });
    }
    if let Some(index) = weight.dominance_violation() {
        return Err(Error::NotDominant { weight: weight.to_string(), index });
    }
    Ok(())
}

fn sum_exact(roots: &RootList, numerator: Numerator) -> ExactScalar {
    let mut total = ExactScalar::zero();
    for (a, (i, ai)) in roots.roots.iter().enumerate() {
        let head = match numerator {
            Numerator::Power(q) => ai.pow(q as i32),
            Numerator::ClosedP(q, s) => p_closed_value(ai, q, s, *i).unwrap_or_else(|_| p_poly(q, s).eval(ai)),
        };
        let mut term = sign(grading(*i).is_odd()) * head;
        for (b, (j, aj)) in roots.roots.iter().enumerate() {
            if a != b {
                let diff = ai - aj;
                term *= (&diff + sign(grading(*j).is_odd())) / diff;
            }
        }
        total += term;
    }
    total
}

fn sum_regularized(roots: &RootList, numerator: Numerator) -> Result<ExactScalar> {
    let lines: Vec<ExactPolynomial> = roots
        .roots
        .iter()
        .enumerate()
        .map(|(a, (_, x))| ExactPolynomial::linear(x.clone(), int(a as i64 + 1)))
        .collect();
    let mut total = RationalFunction::constant(ExactScalar::zero());
    for (a, (i, _)) in roots.roots.iter().enumerate() {
        let at = &lines[a];
        let head = match numerator {
            Numerator::Power(q) => RationalFunction::from_poly(at.pow(q as u32)),
            Numerator::ClosedP(q, s) => {
                let c = ExactPolynomial::constant(int(-s).pow(q as i32));
                let num = at * &(&at.pow(q as u32) - &c);
                let den = at + &ExactPolynomial::constant(int(s));
                RationalFunction::quotient(num, den)
            }
        };
        let mut term = head.mul(&RationalFunction::constant(sign(grading(*i).is_odd())));
        for (b, (j, _)) in roots.roots.iter().enumerate() {
            if a != b {
                let diff = at - &lines[b];
                let num = &diff + &ExactPolynomial::constant(sign(grading(*j).is_odd()));
                term = term.mul(&RationalFunction::quotient(num, diff));
            }
        }
        total = total.add(&term);
    }
    match total.limit_at_zero() {
        LimitAtZero::Finite(v) => Ok(v),
        LimitAtZero::Pole => {
            let (i, j) = roots.collision().unwrap_or((roots.roots[0].0, roots.roots[0].0));
            Err(Error::DegenerateRoots { i, j })
        }
    }
}

fn product_formula(roots: &RootList, numerator: Numerator) -> Result<Eigenvalue> {
    if roots.collision().is_none() {
        Ok(Eigenvalue { value: sum_exact(roots, numerator), regularized: false })
    } else {
        Ok(Eigenvalue { value: sum_regularized(roots, numerator)?, regularized: true })
    }
}

/// Eigenvalue of the gl(m/k) invariant `I_q^(m,k)` on the module of highest
/// weight `Λ`, with `k` the last non-zero positive index of `Λ`.
pub fn chi_glmk(m: usize, weight: &Weight, q: usize) -> Result<Eigenvalue> {
    check(m, weight, q)?;
    product_formula(&alpha_roots(weight, RootRange::UpToK), Numerator::Power(q))
}

/// Eigenvalue of the gl(m/∞) invariant `I_q` from the closed form with
/// `P_q(α) = α (α^q - (-1)^q (m-k)^q) / (α + m - k)`.
pub fn chi_glminf(m: usize, weight: &Weight, q: usize) -> Result<Eigenvalue> {
    check(m, weight, q)?;
    let shift = m as i64 - weight.k() as i64;
    product_formula(&alpha_roots(weight, RootRange::UpToK), Numerator::ClosedP(q, shift))
}

/// The same eigenvalue from `χ(I_q) = χ(I_q^(m,k)) - (m - k) χ(I_{q-1})`,
/// `χ(I_1) = Σ Λ_i`.
pub fn chi_glminf_recursive(m: usize, weight: &Weight, q: usize) -> Result<Eigenvalue> {
    check(m, weight, q)?;
    let shift = int(m as i64 - weight.k() as i64);
    let mut value = int(weight.degree());
    let mut regularized = false;
    for order in 2..=q {
        let glmk = chi_glmk(m, weight, order)?;
        regularized |= glmk.regularized;
        value = glmk.value - &shift * value;
    }
    Ok(Eigenvalue { value, regularized })
}

/// `½ [(Λ+ε_i, Λ+ε_i+2ρ) - (ε_{-m+1}, ε_{-m+1}+2ρ) - (Λ, Λ+2ρ)]`.
pub fn half_difference(weight: &Weight, i: Index) -> ExactScalar {
    use crate::weights::pairing_with_2rho;
    let m = weight.m();
    let raised = weight + &Weight::epsilon(m, i);
    let vector = Weight::epsilon(m, weight.first());
    (pairing_with_2rho(&raised) - pairing_with_2rho(&vector) - pairing_with_2rho(weight)) / int(2)
}
