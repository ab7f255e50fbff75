//! Weights of gl(m/∞): finitely supported integer sequences indexed from
//! `-m+1`, with the invariant bilinear form and the pairing against `2ρ`.
//!
//! `ρ` has infinite support and is never stored; it only enters through
//! closed-form pairings.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use rand::Rng;

use crate::algebra::{grading, Index};
use crate::error::{Error, Result};
use crate::scalar::{int, ratio, ExactScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    m: usize,
    // no explicit zeros
    entries: BTreeMap<Index, i64>,
}

impl Weight {
    pub fn zero(m: usize) -> Self {
        assert!(m >= 1);
        Weight { m, entries: BTreeMap::new() }
    }

    /// `ε_i`.
    pub fn epsilon(m: usize, i: Index) -> Self {
        let mut w = Weight::zero(m);
        w.set(i, 1);
        w
    }

    /// Builds a weight from its two blocks without any checks beyond the
    /// index range.
    pub fn from_blocks(m: usize, nonpos: &[i64], pos: &[i64]) -> Self {
        assert_eq!(nonpos.len(), m, "non-positive block must have m entries");
        let mut w = Weight::zero(m);
        for (o, &v) in nonpos.iter().enumerate() {
            w.set(1 - m as Index + o as Index, v);
        }
        for (o, &v) in pos.iter().enumerate() {
            w.set(o as Index + 1, v);
        }
        w
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn first(&self) -> Index {
        1 - self.m as Index
    }

    pub fn get(&self, i: Index) -> i64 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: Index, v: i64) {
        assert!(i >= self.first(), "index {i} below -m+1");
        if v == 0 {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, v);
        }
    }

    /// Non-zero entries in index order.
    pub fn iter(&self) -> impl Iterator<Item = (Index, i64)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    /// Largest positive index carrying a non-zero entry, 0 if none.
    pub fn k(&self) -> usize {
        self.entries.keys().next_back().map_or(0, |&i| i.max(0) as usize)
    }

    /// Largest index with a non-zero entry.
    pub fn support_bound(&self) -> Option<Index> {
        self.entries.keys().next_back().copied()
    }

    /// Sum of all entries.
    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries `-m+1..=0`.
    pub fn nonpositive_block(&self) -> Vec<i64> {
        (self.first()..=0).map(|i| self.get(i)).collect()
    }

    /// Entries `1..=k`.
    pub fn positive_block(&self) -> Vec<i64> {
        (1..=self.k() as Index).map(|i| self.get(i)).collect()
    }

    /// First index `i != 0` (below the support bound) with `Λ_i < Λ_{i+1}`.
    pub fn dominance_violation(&self) -> Option<Index> {
        let last = self.support_bound().unwrap_or(0).max(0);
        (self.first()..=last).filter(|&i| i != 0).find(|&i| self.get(i) < self.get(i + 1))
    }

    pub fn is_dominant(&self) -> bool {
        self.dominance_violation().is_none()
    }

    /// Membership in `D_n^+` for some `n`: non-negative entries and dominance.
    /// The zero weight is accepted.
    pub fn is_in_dn_plus(&self) -> bool {
        self.entries.values().all(|&v| v >= 0) && self.is_dominant()
    }

    /// Parses `"a_{-m+1},...,a_0;b_1,...,b_k"`; `m` is the length of the
    /// first block.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::WeightSyntax { text: text.to_string(), reason: reason.into() };
        let (left, right) = text.split_once(';').ok_or_else(|| err("missing ';'"))?;
        if right.contains(';') {
            return Err(err("more than one ';'"));
        }
        let block = |s: &str| -> Result<Vec<i64>> {
            let s = s.trim();
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| err(&format!("bad entry {:?}", x.trim()))))
                .collect()
        };
        let nonpos = block(left)?;
        let pos = block(right)?;
        if nonpos.is_empty() {
            return Err(err("the non-positive block needs at least one entry"));
        }
        Ok(Weight::from_blocks(nonpos.len(), &nonpos, &pos))
    }

    /// Like [`Weight::parse`] but insists on the given `m`.
    pub fn parse_with_m(text: &str, m: usize) -> Result<Self> {
        let w = Weight::parse(text)?;
        if w.m != m {
            return Err(Error::WeightSyntax {
                text: text.to_string(),
                reason: format!("expected {m} entries before ';', found {}", w.m),
            });
        }
        Ok(w)
    }

    fn same_m(&self, other: &Weight) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MixedSignature { left: self.m, right: other.m });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.same_m(other)?;
        let mut out = self.clone();
        for (i, v) in other.iter() {
            out.set(i, out.get(i) + v);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.same_m(other)?;
        let mut out = self.clone();
        for (i, v) in other.iter() {
            out.set(i, out.get(i) - v);
        }
        Ok(out)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weights of different signatures")
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("weights of different signatures")
    }
}

/// Graded-lexicographic: total degree first, then entries from `-m+1` upward.
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m.cmp(&other.m).then_with(|| self.degree().cmp(&other.degree())).then_with(|| {
            let last = self.support_bound().max(other.support_bound()).unwrap_or(0);
            (self.first()..=last).map(|i| self.get(i).cmp(&other.get(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<i64>| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(self.nonpositive_block()), join(self.positive_block()))
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse(s)
    }
}

/// Checked constructor for module and highest weights. Entries must be
/// non-negative; unless `relaxed`, the weight must also be dominant.
pub fn make_weight(m: usize, nonpos: &[i64], pos: &[i64], relaxed: bool) -> Result<Weight> {
    if nonpos.len() != m {
        return Err(Error::WeightSyntax {
            text: format!("{nonpos:?};{pos:?}"),
            reason: format!("expected {m} non-positive entries"),
        });
    }
    let w = Weight::from_blocks(m, nonpos, pos);
    if let Some((index, value)) = w.iter().find(|&(_, v)| v < 0) {
        return Err(Error::NegativeEntry { index, value });
    }
    if !relaxed {
        if let Some(index) = w.dominance_violation() {
            return Err(Error::NotDominant { weight: w.to_string(), index });
        }
    }
    Ok(w)
}

/// The invariant form: `+δ_ij` on the even block, `-δ_ij` on the odd block.
pub fn bilinear(a: &Weight, b: &Weight) -> Result<ExactScalar> {
    a.same_m(b)?;
    let s: i64 = a
        .iter()
        .map(|(i, v)| {
            let p = v * b.get(i);
            if grading(i).is_odd() {
                -p
            } else {
                p
            }
        })
        .sum();
    Ok(int(s))
}

/// `ρ_i`: `(1 - 2i - 2m)/2` on the even block and `(1 - 2i + 2m)/2` on the odd one.
pub fn rho_component(m: usize, i: Index) -> ExactScalar {
    let m = m as i64;
    if grading(i).is_odd() {
        ratio(1 - 2 * i + 2 * m, 2)
    } else {
        ratio(1 - 2 * i - 2 * m, 2)
    }
}

/// `(λ, λ + 2ρ) = Σ_i [(-1)^⟨i⟩ λ_i (λ_i + 1 - 2i) - 2m λ_i]`.
pub fn pairing_with_2rho(w: &Weight) -> ExactScalar {
    let m = w.m as i64;
    let s: i64 = w
        .iter()
        .map(|(i, v)| {
            let q = v * (v + 1 - 2 * i);
            (if grading(i).is_odd() { -q } else { q }) - 2 * m * v
        })
        .sum();
    int(s)
}

/// Random dominant weight with `1 <= m <= max_m`, at most `max_k` positive
/// entries and all entries in `0..=max_entry`. Rejection sampled.
pub fn sample_dominant<R: Rng + ?Sized>(rng: &mut R, max_m: usize, max_k: usize, max_entry: i64) -> Weight {
    assert!(max_m >= 1 && max_entry >= 1);
    loop {
        let m = rng.gen_range(1..=max_m);
        let k = rng.gen_range(0..=max_k);
        let mut nonpos: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=max_entry)).collect();
        let mut pos: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=max_entry)).collect();
        nonpos.sort_unstable_by(|a, b| b.cmp(a));
        pos.sort_unstable_by(|a, b| b.cmp(a));
        if let Ok(w) = make_weight(m, &nonpos, &pos, false) {
            return w;
        }
    }
}

/// All dominant weights for `m` with degree at most `max_degree`, in
/// graded-lex order.
pub fn dominant_weights(m: usize, max_degree: i64) -> Vec<Weight> {
    // non-increasing sequences with entries bounded by `cap` and sum <= budget
    fn partitions(len: Option<usize>, cap: i64, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        match len {
            Some(0) => out.push(prefix.clone()),
            Some(l) => {
                for v in 0..=cap.min(budget) {
                    prefix.push(v);
                    partitions(Some(l - 1), v, budget - v, prefix, out);
                    prefix.pop();
                }
            }
            None => {
                out.push(prefix.clone());
                for v in 1..=cap.min(budget) {
                    prefix.push(v);
                    partitions(None, v, budget - v, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut heads = Vec::new();
    partitions(Some(m), max_degree, max_degree, &mut Vec::new(), &mut heads);
    let mut out = Vec::new();
    for head in heads {
        let budget = max_degree - head.iter().sum::<i64>();
        let mut tails = Vec::new();
        partitions(None, budget, budget, &mut Vec::new(), &mut tails);
        out.extend(tails.iter().filter_map(|tail| make_weight(m, &head, tail, false).ok()));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str) -> Weight {
        Weight::parse(text).unwrap()
    }

    #[test]
    fn dominant_weight_enumeration() {
        let all = dominant_weights(1, 2);
        let text: Vec<String> = all.iter().map(|x| x.to_string()).collect();
        assert_eq!(text, ["0;", "0;1", "1;", "0;1,1", "0;2", "1;1", "2;"]);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        for x in dominant_weights(2, 4) {
            assert!(x.is_in_dn_plus() && x.degree() <= 4);
        }
    }

    #[test]
    fn sampled_weights_are_dominant() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = sample_dominant(&mut rng, 3, 4, 5);
            assert!(x.is_in_dn_plus() && x.m() <= 3 && x.k() <= 4);
        }
    }

    #[test]
    fn make_weight_examples() {
        let a = make_weight(1, &[1], &[], false).unwrap();
        assert_eq!(a.get(0), 1);
        assert_eq!(a.k(), 0);
        let b = make_weight(2, &[2, 1], &[3, 1], false).unwrap();
        assert_eq!(b.k(), 2);
        assert!(matches!(make_weight(2, &[1, 2], &[], false), Err(Error::NotDominant { index: -1, .. })));
        assert!(make_weight(2, &[1, 2], &[], true).is_ok());
        assert!(matches!(make_weight(1, &[1], &[-1], true), Err(Error::NegativeEntry { index: 1, .. })));
    }

    #[test]
    fn trailing_zeros_are_canonicalized() {
        assert_eq!(w("1;2,0,0"), w("1;2"));
        assert_eq!(w("1;2,0,0").k(), 1);
        assert_eq!(w("0,0;").to_string(), "0,0;");
        assert_eq!(w(" 2, 1 ; 3,1").to_string(), "2,1;3,1");
    }

    #[test]
    fn parse_errors() {
        assert!(Weight::parse("1,2").is_err());
        assert!(Weight::parse(";1").is_err());
        assert!(Weight::parse("1;a").is_err());
        assert!(Weight::parse("1;2;3").is_err());
        assert!(Weight::parse_with_m("1;", 2).is_err());
    }

    #[test]
    fn bilinear_examples() {
        let e0 = Weight::epsilon(1, 0);
        let e1 = Weight::epsilon(1, 1);
        assert_eq!(bilinear(&e0, &e0).unwrap(), int(1));
        assert_eq!(bilinear(&e1, &e1).unwrap(), int(-1));
        assert_eq!(bilinear(&w("1;2"), &e0).unwrap(), int(1));
        assert!(matches!(bilinear(&e0, &Weight::epsilon(2, 0)), Err(Error::MixedSignature { .. })));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing_with_2rho(&w("1;")), int(0));
        assert_eq!(pairing_with_2rho(&w("1;1")), int(-2));
        assert_eq!(pairing_with_2rho(&Weight::zero(3)), int(0));
    }

    #[test]
    fn dn_plus_membership() {
        assert!(w("1;1").is_in_dn_plus());
        assert!(w("0;1").is_in_dn_plus());
        assert!(!w("1;0,1").is_in_dn_plus());
        assert!(Weight::zero(2).is_in_dn_plus());
    }

    #[test]
    fn graded_lex_order() {
        assert!(w("1;") < w("2;"));
        assert!(w("0;2") < w("1;1"));
        assert!(w("1,1;") < w("2,0;"));
    }

    #[test]
    fn positive_roots_raise_in_order() {
        // ε_i - ε_j with i < j is positive: it increases the graded-lex rank
        // at the first index where it differs.
        let m = 2;
        for i in -1..3 {
            for j in (i + 1)..4 {
                let root = &Weight::epsilon(m, i) - &Weight::epsilon(m, j);
                assert_eq!(root.degree(), 0);
                assert_eq!(root.iter().next(), Some((i, 1)));
            }
        }
    }

    fn arb_weight() -> impl Strategy<Value = Weight> {
        (1usize..4).prop_flat_map(|m| {
            (prop::collection::vec(0i64..6, m), prop::collection::vec(0i64..6, 0..5))
                .prop_map(move |(a, b)| Weight::from_blocks(m, &a, &b))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

        #[test]
        fn pairing_routes_agree(l in arb_weight()) {
            // (λ,λ) + 2(λ,ρ) with ρ evaluated pointwise over the support of λ
            let mut route = bilinear(&l, &l).unwrap();
            for (i, v) in l.iter() {
                let term = rho_component(l.m(), i) * int(2 * v);
                if grading(i).is_odd() { route -= term } else { route += term }
            }
            prop_assert_eq!(route, pairing_with_2rho(&l));
        }

        #[test]
        fn bilinear_is_symmetric(a in arb_weight(), b in prop::collection::vec(0i64..6, 0..8)) {
            let mut other = Weight::zero(a.m());
            for (o, v) in b.iter().enumerate() {
                other.set(a.first() + o as Index, *v);
            }
            prop_assert_eq!(bilinear(&a, &other).unwrap(), bilinear(&other, &a).unwrap());
        }

        #[test]
        fn text_round_trip(l in arb_weight()) {
            prop_assert_eq!(Weight::parse(&l.to_string()).unwrap(), l);
        }
    }
}
