//! Index conventions and structure constants of the truncations gl(m/n).
//!
//! Indices run over `-m+1, ..., 0, 1, ..., n`. Non-positive indices are even,
//! positive ones odd. Internally a position `i + m - 1` is used for array
//! access; every public surface speaks in indices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::superspace::Parity;

pub type Index = i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSignature {
    pub m: usize,
    pub n: usize,
}

impl AlgebraSignature {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m >= 1, "gl(m/n) needs m >= 1");
        AlgebraSignature { m, n }
    }

    pub fn first(&self) -> Index {
        1 - self.m as Index
    }

    pub fn last(&self) -> Index {
        self.n as Index
    }

    /// Number of indices, `m + n`.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn indices(&self) -> impl DoubleEndedIterator<Item = Index> + Clone {
        self.first()..=self.last()
    }

    pub fn contains(&self, i: Index) -> bool {
        (self.first()..=self.last()).contains(&i)
    }

    pub fn check(&self, i: Index) -> Result<()> {
        if i < self.first() {
            Err(Error::IndexBelowRange { index: i, first: self.first() })
        } else if i > self.last() {
            Err(Error::IndexAboveTruncation { index: i, last: self.last() })
        } else {
            Ok(())
        }
    }

    pub fn pos(&self, i: Index) -> usize {
        debug_assert!(self.contains(i), "index {i} outside gl({}/{})", self.m, self.n);
        (i + self.m as Index - 1) as usize
    }

    pub fn index(&self, pos: usize) -> Index {
        pos as Index + self.first()
    }

    /// The same even block with a different truncation.
    pub fn with_truncation(&self, n: usize) -> Self {
        AlgebraSignature { m: self.m, n }
    }

    /// `⟨i⟩` for an index of this algebra (the truncation does not matter).
    pub fn grading(&self, i: Index) -> Result<Parity> {
        if i < self.first() {
            return Err(Error::IndexBelowRange { index: i, first: self.first() });
        }
        Ok(grading(i))
    }

    /// Parity of `E_ij`.
    pub fn generator_parity(&self, i: Index, j: Index) -> Parity {
        grading(i) + grading(j)
    }

    /// `⟦E_ij, E_kl⟧` as a formal combination of generators.
    pub fn structure_supercommutator(&self, i: Index, j: Index, k: Index, l: Index) -> Result<Combination> {
        for x in [i, j, k, l] {
            self.check(x)?;
        }
        let mut out = Combination::default();
        if j == k {
            out.add(i, l, 1);
        }
        if i == l {
            let odd = (self.generator_parity(i, j) * self.generator_parity(k, l)).is_odd();
            out.add(k, j, if odd { 1 } else { -1 });
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}/{})", self.m, self.n)
    }
}

/// `⟨i⟩`: even for `i <= 0`, odd for `i >= 1`.
pub fn grading(i: Index) -> Parity {
    if i <= 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Integer combination of generators `E_ij`, with zero terms dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<(Index, Index), i64>,
}

impl Combination {
    pub fn generator(i: Index, j: Index) -> Self {
        let mut c = Combination::default();
        c.add(i, j, 1);
        c
    }

    pub fn add(&mut self, i: Index, j: Index, coeff: i64) {
        let e = self.terms.entry((i, j)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((Index, Index), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in self.terms().enumerate() {
            let sep = match (n, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sep}E({i},{j})")?;
            } else {
                write!(f, "{sep}{mag}E({i},{j})")?;
            }
        }
        Ok(())
    }
}
