//! Monomials over `x1..xn` and subsets of the variable indices.
//!
//! Variables are 1-indexed everywhere in the public API: `IndexSet` members
//! are in `1..=n` and a monomial prints as `x1^3·x2^2`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_VARS;

/// A subset of `{1, ..., n}` with `n <= 64`, stored as a bitmask.
///
/// Bit `i - 1` is set when index `i` is a member. The ordering compares the
/// increasing member sequences lexicographically, so `{1,2} < {1,3,4} < {2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > MAX_VARS {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    n: MAX_VARS,
                });
            }
            bits |= 1 << (i - 1);
        }
        Ok(IndexSet(bits))
    }

    pub fn from_mask(mask: u64) -> Self {
        IndexSet(mask)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || lo == 0 {
            return IndexSet::EMPTY;
        }
        IndexSet(Self::full(hi).0 & !Self::full(lo - 1).0)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_VARS).contains(&i));
        IndexSet(1 << (i - 1))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_VARS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: IndexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: IndexSet) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn difference(self, other: IndexSet) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Self {
        self.union(Self::singleton(i))
    }

    pub fn without(self, i: usize) -> Self {
        self.difference(Self::singleton(i))
    }

    /// `[n] \ self`.
    pub fn complement(self, n: usize) -> Self {
        IndexSet(Self::full(n).0 & !self.0)
    }

    pub fn min_index(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Checks that every member lies in `1..=n`.
    pub fn check_within(self, n: usize) -> Result<()> {
        match self.max_index() {
            Some(m) if m > n => Err(Error::IndexOutOfRange { index: m, n }),
            _ => Ok(()),
        }
    }

    /// Renders the set as the prime ideal `(x1, x3)`.
    pub fn prime_string(self) -> String {
        let vars: Vec<String> = self.iter().map(|i| format!("x{i}")).collect();
        format!("({})", vars.join(", "))
    }

    /// Renders the set as the squarefree monomial `x1·x3`; the empty set is `1`.
    pub fn monomial_string(self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let vars: Vec<String> = self.iter().map(|i| format!("x{i}")).collect();
        vars.join("·")
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        IndexSet::from_indices(v).map_err(serde::de::Error::custom)
    }
}

/// A monomial `x1^e1 ... xn^en`, stored as its exponent vector.
///
/// The derived ordering is lexicographic on exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exps: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(exps: Vec<u32>) -> Result<Self> {
        Monomial::new(exps)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        Ok(Monomial { exps })
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_A`, the squarefree monomial of an index set.
    pub fn from_index_set(set: IndexSet, n: usize) -> Result<Self> {
        set.check_within(n)?;
        let mut exps = vec![0; n];
        for i in set.iter() {
            exps[i - 1] = 1;
        }
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-indexed.
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    /// Total degree `|u|`.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn support(&self) -> IndexSet {
        let mut bits = 0u64;
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                bits |= 1 << k;
            }
        }
        IndexSet::from_mask(bits)
    }

    /// Largest index of a variable dividing the monomial.
    pub fn max_index(&self) -> Option<usize> {
        self.support().max_index()
    }

    /// Smallest index of a variable dividing the monomial.
    pub fn min_index(&self) -> Option<usize> {
        self.support().min_index()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    fn check_same(&self, other: &Monomial) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        })
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| match e {
                1 => format!("x{}", k + 1),
                _ => format!("x{}^{}", k + 1, e),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}
