//! Base sets of discrete polymatroids.
//!
//! A base set is validated through the exchange property; down-closure of the
//! underlying polymatroid is never materialized. Base sets of Veronese type
//! are built by [`veronese_bases`].

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{IndexSet, Monomial};
use crate::{MAX_SUBSET_VARS, MAX_VALUE, MAX_VARS};

/// The data `(d; a_1, ..., a_n)` of the ideal `I_{d;a_1,...,a_n}`, generated
/// by all monomials of degree `d` whose `x_i`-exponent is at most `a_i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct VeroneseParams {
    d: u32,
    a: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    d: u32,
    a: Vec<u32>,
}

impl TryFrom<RawParams> for VeroneseParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        VeroneseParams::new(raw.d, raw.a)
    }
}

impl From<VeroneseParams> for RawParams {
    fn from(p: VeroneseParams) -> Self {
        RawParams { d: p.d, a: p.a }
    }
}

impl VeroneseParams {
    /// Rejects more than [`MAX_VARS`] caps and any value above [`MAX_VALUE`].
    /// Feasibility (`sum a_i >= d`) is not required here.
    pub fn new(d: u32, a: Vec<u32>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidBaseSet("no variables".into()));
        }
        if a.len() > MAX_VARS {
            return Err(Error::TooManyVariables(a.len()));
        }
        for &v in std::iter::once(&d).chain(&a) {
            if u64::from(v) > MAX_VALUE {
                return Err(Error::ValueTooLarge(u64::from(v)));
            }
        }
        Ok(VeroneseParams { d, a })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn caps(&self) -> &[u32] {
        &self.a
    }

    /// Cap of variable `i`, 1-indexed.
    pub fn cap(&self, i: usize) -> u32 {
        self.a[i - 1]
    }

    pub fn nvars(&self) -> usize {
        self.a.len()
    }

    pub fn cap_sum(&self) -> u64 {
        self.a.iter().map(|&x| u64::from(x)).sum()
    }

    /// `sum_{i in A} a_i`.
    pub fn cap_sum_over(&self, set: IndexSet) -> u64 {
        set.iter().map(|i| u64::from(self.cap(i))).sum()
    }

    /// The ideal is nonzero.
    pub fn is_feasible(&self) -> bool {
        self.cap_sum() >= u64::from(self.d)
    }

    pub fn ensure_feasible(&self) -> Result<()> {
        if self.is_feasible() {
            Ok(())
        } else {
            Err(Error::EmptyPolymatroid {
                d: u64::from(self.d),
                sum: self.cap_sum(),
            })
        }
    }

    /// Exact membership test: `z` lies in the ideal iff `sum min(z_i, a_i) >= d`.
    pub fn ideal_contains(&self, z: &Monomial) -> Result<bool> {
        if z.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: z.nvars(),
            });
        }
        let reach: u64 = z
            .exps()
            .iter()
            .zip(&self.a)
            .map(|(&e, &cap)| u64::from(e.min(cap)))
            .sum();
        Ok(reach >= u64::from(self.d))
    }

    /// `G(I_{d;a})`, by enumerating the bases.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        polymatroidal_ideal(&veronese_bases(self)?)
    }
}

impl fmt::Debug for VeroneseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VeroneseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let caps: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "{};{}", self.d, caps.join(","))
    }
}

/// A nonempty set of nonnegative integer vectors of one length and one
/// modulus, the candidate set of bases `B(P)` of a discrete polymatroid.
///
/// Vectors are deduplicated and kept in lexicographic order, largest first.
#[derive(Clone)]
pub struct BaseSet {
    nvars: usize,
    rank: u64,
    vectors: Vec<Vec<u32>>,
    // set by `veronese_bases`, whose output satisfies strong exchange
    veronese: bool,
}

impl PartialEq for BaseSet {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.vectors == other.vectors
    }
}

impl Eq for BaseSet {}

impl fmt::Debug for BaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.vectors).finish()
    }
}

impl BaseSet {
    pub fn new(mut vectors: Vec<Vec<u32>>) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::InvalidBaseSet("empty base set".into()))?;
        let nvars = first.len();
        if nvars == 0 {
            return Err(Error::InvalidBaseSet("vectors of length zero".into()));
        }
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let modulus = |v: &[u32]| v.iter().map(|&x| u64::from(x)).sum::<u64>();
        let rank = modulus(first);
        for v in &vectors {
            if v.len() != nvars {
                return Err(Error::InvalidBaseSet(format!(
                    "vector {v:?} has length {}, expected {nvars}",
                    v.len()
                )));
            }
            if let Some(&big) = v.iter().find(|&&x| u64::from(x) > MAX_VALUE) {
                return Err(Error::ValueTooLarge(u64::from(big)));
            }
            if modulus(v) != rank {
                return Err(Error::InvalidBaseSet(format!(
                    "vector {v:?} has modulus {}, expected {rank}",
                    modulus(v)
                )));
            }
        }
        vectors.sort_by(|a, b| b.cmp(a));
        vectors.dedup();
        Ok(BaseSet {
            nvars,
            rank,
            vectors,
            veronese: false,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Common modulus of the vectors.
    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    fn lookup(&self) -> HashSet<&[u32]> {
        self.vectors.iter().map(Vec::as_slice).collect()
    }

    /// For all `u, v` and every `i` with `u_i > v_i` there is `j` with
    /// `u_j < v_j` and `u - e_i + e_j` in the set.
    pub fn check_exchange(&self) -> bool {
        if self.veronese {
            return true;
        }
        let members = self.lookup();
        let mut w = vec![0u32; self.nvars];
        for u in &self.vectors {
            for v in &self.vectors {
                for i in 0..self.nvars {
                    if u[i] <= v[i] {
                        continue;
                    }
                    let found = (0..self.nvars).any(|j| {
                        if u[j] >= v[j] {
                            return false;
                        }
                        w.copy_from_slice(u);
                        w[i] -= 1;
                        w[j] += 1;
                        members.contains(w.as_slice())
                    });
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// For all `u, v` and all `i, j` with `u_i > v_i` and `u_j < v_j`,
    /// `u - e_i + e_j` is in the set.
    pub fn check_strong_exchange(&self) -> bool {
        if self.veronese {
            return true;
        }
        let members = self.lookup();
        let mut w = vec![0u32; self.nvars];
        for u in &self.vectors {
            for v in &self.vectors {
                for i in (0..self.nvars).filter(|&i| u[i] > v[i]) {
                    for j in (0..self.nvars).filter(|&j| u[j] < v[j]) {
                        w.copy_from_slice(u);
                        w[i] -= 1;
                        w[j] += 1;
                        if !members.contains(w.as_slice()) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn ensure_polymatroid(&self) -> Result<()> {
        if self.check_exchange() {
            Ok(())
        } else {
            Err(Error::NotPolymatroid)
        }
    }

    /// Ground set rank `rho(A) = max_{v in B} sum_{i in A} v_i`.
    pub fn rank_of(&self, set: IndexSet) -> Result<u64> {
        set.check_within(self.nvars)?;
        Ok(self
            .vectors
            .iter()
            .map(|v| set.iter().map(|i| u64::from(v[i - 1])).sum::<u64>())
            .max()
            .unwrap_or(0))
    }

    /// `rho` for every subset, indexed by bitmask.
    pub fn rank_table(&self) -> Result<Vec<u64>> {
        if self.nvars > MAX_SUBSET_VARS {
            return Err(Error::BudgetExceeded {
                what: "rank table over all subsets",
                needed: 1u128 << self.nvars,
                budget: 1 << MAX_SUBSET_VARS,
            });
        }
        let size = 1usize << self.nvars;
        let mut table = vec![0u64; size];
        let mut sums = vec![0u64; size];
        for v in &self.vectors {
            for mask in 1..size {
                let low = mask.trailing_zeros() as usize;
                sums[mask] = sums[mask & (mask - 1)] + u64::from(v[low]);
                table[mask] = table[mask].max(sums[mask]);
            }
        }
        Ok(table)
    }
}

/// `B(P_{d;a}) = { u : |u| = d, 0 <= u_i <= a_i }`, in lexicographic order,
/// largest first.
pub fn veronese_bases(p: &VeroneseParams) -> Result<BaseSet> {
    p.ensure_feasible()?;
    let caps = p.caps();
    let n = caps.len();
    let mut suffix = vec![0u64; n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1] + u64::from(caps[k]);
    }

    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn fill(
        k: usize,
        left: u64,
        caps: &[u32],
        suffix: &[u64],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = left.min(u64::from(caps[k]));
        let lo = left.saturating_sub(suffix[k + 1]);
        for e in (lo..=hi).rev() {
            cur[k] = e as u32;
            fill(k + 1, left - e, caps, suffix, cur, out);
        }
        cur[k] = 0;
    }
    fill(0, u64::from(p.d()), caps, &suffix, &mut cur, &mut out);

    Ok(BaseSet {
        nvars: n,
        rank: u64::from(p.d()),
        vectors: out,
        veronese: true,
    })
}

/// `rho(A) = min(sum_{i in A} a_i, d)`.
pub fn rank_veronese(p: &VeroneseParams, set: IndexSet) -> Result<u64> {
    set.check_within(p.nvars())?;
    Ok(p.cap_sum_over(set).min(u64::from(p.d())))
}

/// Result of translating a strong-exchange base set onto one of Veronese type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    /// `u0_i = rho([n]) - rho([n] \ {i})`.
    pub offset: Vec<u32>,
    /// `{ v - u0 : v in B }`.
    pub bases: BaseSet,
    /// Veronese data of the translated set; caps are coordinate maxima.
    pub params: VeroneseParams,
}

impl Translation {
    pub fn is_identity(&self) -> bool {
        self.offset.iter().all(|&x| x == 0)
    }
}

pub fn translation_normalize(b: &BaseSet) -> Result<Translation> {
    if !b.check_strong_exchange() {
        return Err(Error::NotStrongExchange);
    }
    let n = b.nvars();
    let full = IndexSet::full(n);
    let total = b.rank_of(full)?;
    let offset = (1..=n)
        .map(|i| Ok((total - b.rank_of(full.without(i))?) as u32))
        .collect::<Result<Vec<u32>>>()?;

    let mut shifted = Vec::with_capacity(b.len());
    for v in b.vectors() {
        let w = v
            .iter()
            .zip(&offset)
            .map(|(&x, &o)| x.checked_sub(o))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| {
                Error::Internal(format!("translation by {offset:?} leaves {v:?} negative"))
            })?;
        shifted.push(w);
    }
    let caps: Vec<u32> = (0..n)
        .map(|k| shifted.iter().map(|w| w[k]).max().unwrap_or(0))
        .collect();
    let shift: u64 = offset.iter().map(|&x| u64::from(x)).sum();
    let params = VeroneseParams::new((b.rank() - shift) as u32, caps)?;
    let bases = BaseSet::new(shifted)?;
    if bases != veronese_bases(&params)? {
        return Err(Error::Internal(format!(
            "translated base set is not of Veronese type {params}"
        )));
    }
    Ok(Translation {
        offset,
        bases,
        params,
    })
}

/// `I(P)`, generated by `x^v` for `v` in `B`.
pub fn polymatroidal_ideal(b: &BaseSet) -> Result<MonomialIdeal> {
    b.ensure_polymatroid()?;
    let gens = b
        .vectors()
        .iter()
        .map(|v| Monomial::new(v.clone()))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_equigenerated(b.nvars(), gens)
}

/// The radical of `I(P)` read off the rank function: generated by `x_A` for
/// the inclusion-minimal `A` with `rho(A) = rank(P)`.
pub fn radical_via_rank(b: &BaseSet) -> Result<MonomialIdeal> {
    b.ensure_polymatroid()?;
    let table = b.rank_table()?;
    let rank = b.rank();
    let sets = (0..table.len() as u64)
        .filter(|&mask| table[mask as usize] == rank)
        .filter(|&mask| {
            // rho is nondecreasing, so single deletions decide minimality
            IndexSet::from_mask(mask)
                .iter()
                .all(|i| table[(mask & !(1u64 << (i - 1))) as usize] < rank)
        })
        .map(IndexSet::from_mask);
    MonomialIdeal::from_index_sets(b.nvars(), sets)
}
