//! Squarefree monomial ideals, with the Borel machinery for the strongly
//! stable ones.
//!
//! A squarefree ideal `J = I_Gamma` is stored by the supports of its minimal
//! generators (the minimal non-faces of `Gamma`). Simplicial complexes are
//! never listed face by face; facets are found by a pruned search.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::IndexSet;
use crate::MAX_VARS;

/// A squarefree monomial ideal in `n` variables given by `G(J)` as index sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    nvars: usize,
    gens: Vec<IndexSet>,
}

/// `m(J)`, the largest variable index in a generator, and `b(J)`, the largest
/// generator degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MbInvariants {
    pub m: usize,
    pub b: usize,
}

fn minimal_sets(mut sets: Vec<IndexSet>) -> Vec<IndexSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<IndexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl SquarefreeIdeal {
    /// Keeps the inclusion-minimal sets of `gens`.
    pub fn new<I: IntoIterator<Item = IndexSet>>(nvars: usize, gens: I) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let gens: Vec<IndexSet> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.check_within(nvars).is_err()) {
            return Err(Error::GeneratorOutOfRange(*bad));
        }
        Ok(SquarefreeIdeal {
            nvars,
            gens: minimal_sets(gens),
        })
    }

    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::Internal(format!("{ideal} is not squarefree")));
        }
        Self::new(ideal.nvars(), ideal.supports())
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_index_sets(self.nvars, self.gens.iter().copied())
            .expect("generators lie inside the ground set")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Generator supports, in increasing lexicographic order.
    pub fn gens(&self) -> &[IndexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_empty())
    }

    /// `x_A` lies in `J`, i.e. `A` is a non-face.
    pub fn contains_set(&self, set: IndexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(set))
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// For every generator `A`, `j` in `A` and `l < j` outside `A`, the set
    /// `(A \ {j}) u {l}` is again in `J`.
    pub fn is_squarefree_strongly_stable(&self) -> bool {
        self.gens.iter().all(|&a| {
            a.iter().all(|j| {
                (1..j)
                    .filter(|&l| !a.contains(l))
                    .all(|l| self.contains_set(a.without(j).with(l)))
            })
        })
    }

    fn ensure_stable(&self) -> Result<()> {
        if self.is_squarefree_strongly_stable() {
            Ok(())
        } else {
            Err(Error::NotStronglyStable)
        }
    }

    /// Smallest squarefree strongly stable ideal containing `x_A` for each
    /// `A` in `seeds`: close under the moves `x_j -> x_l`, `l < j`, `l`
    /// outside the support.
    pub fn strongly_stable_closure<I>(nvars: usize, seeds: I) -> Result<Self>
    where
        I: IntoIterator<Item = IndexSet>,
    {
        let mut seen: HashSet<IndexSet> = HashSet::new();
        let mut stack: Vec<IndexSet> = seeds.into_iter().collect();
        while let Some(a) = stack.pop() {
            if !seen.insert(a) {
                continue;
            }
            for j in a.iter() {
                for l in (1..j).filter(|&l| !a.contains(l)) {
                    let moved = a.without(j).with(l);
                    if !seen.contains(&moved) {
                        stack.push(moved);
                    }
                }
            }
        }
        Self::new(nvars, seen)
    }

    /// `Bor(J)`: the generators that no single inverse move `x_l -> x_j`
    /// (`l < j`) reaches from another generator.
    pub fn borel_generators(&self) -> Result<Vec<IndexSet>> {
        self.ensure_stable()?;
        let gens: HashSet<IndexSet> = self.gens.iter().copied().collect();
        let borel: Vec<IndexSet> = self
            .gens
            .iter()
            .copied()
            .filter(|&a| {
                !a.iter().any(|l| {
                    (l + 1..=self.nvars)
                        .filter(|&j| !a.contains(j))
                        .any(|j| gens.contains(&a.without(l).with(j)))
                })
            })
            .collect();
        let regenerated = Self::strongly_stable_closure(self.nvars, borel.iter().copied())?;
        if regenerated != *self {
            return Err(Error::Internal(format!(
                "Borel generators {borel:?} do not regenerate {self}"
            )));
        }
        Ok(borel)
    }

    pub fn mb(&self) -> Result<MbInvariants> {
        if self.is_zero() {
            return Err(Error::ZeroIdealInput("m and b invariants"));
        }
        if self.is_unit() {
            return Err(Error::UnitIdealInput("m and b invariants"));
        }
        Ok(mb_of(&self.gens))
    }

    /// Maximal `F` in `[n]` containing no generator, in increasing order.
    pub fn facets(&self) -> Result<Vec<IndexSet>> {
        if self.is_unit() {
            return Err(Error::UnitIdealInput("facets"));
        }
        let mut out = Vec::new();
        self.facet_search(1, IndexSet::EMPTY, IndexSet::EMPTY, &mut out);
        out.sort();
        Ok(out)
    }

    fn facet_search(&self, v: usize, face: IndexSet, excluded: IndexSet, out: &mut Vec<IndexSet>) {
        if v > self.nvars {
            let maximal = excluded.iter().all(|u| self.contains_set(face.with(u)));
            if maximal {
                out.push(face);
            }
            return;
        }
        let grown = face.with(v);
        if !self.contains_set(grown) {
            self.facet_search(v + 1, grown, excluded, out);
        }
        // leaving v out only pays off if some generator through v can still
        // be completed by the vertices not yet excluded
        let blockable = self
            .gens
            .iter()
            .any(|g| g.contains(v) && !g.without(v).intersects(excluded));
        if blockable {
            self.facet_search(v + 1, face, excluded.with(v), out);
        }
    }

    /// `J^vee`, generated by `x_{[n] \ F}` over the facets `F` of `Gamma`.
    pub fn alexander_dual(&self) -> Result<SquarefreeIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdealInput("Alexander dual"));
        }
        if self.is_unit() {
            return Err(Error::UnitIdealInput("Alexander dual"));
        }
        let facets = self.facets()?;
        Self::new(
            self.nvars,
            facets.into_iter().map(|f| f.complement(self.nvars)),
        )
    }

    /// `codim S/J = max { min(u) : u in G(J) }`.
    pub fn codim(&self) -> Result<usize> {
        self.ensure_nontrivial_stable()?;
        Ok(self
            .gens
            .iter()
            .filter_map(|g| g.min_index())
            .max()
            .unwrap_or(0))
    }

    /// `codepth S/J = max { max(u) - deg(u) : u in G(J) } + 1`.
    pub fn codepth(&self) -> Result<usize> {
        self.ensure_nontrivial_stable()?;
        Ok(self
            .gens
            .iter()
            .filter_map(|g| g.max_index().map(|m| m - g.len()))
            .max()
            .unwrap_or(0)
            + 1)
    }

    /// `codim = codepth`, the Cohen-Macaulay criterion for this class.
    pub fn is_cohen_macaulay(&self) -> Result<bool> {
        Ok(self.codim()? == self.codepth()?)
    }

    fn ensure_nontrivial_stable(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdealInput("codimension"));
        }
        if self.is_unit() {
            return Err(Error::UnitIdealInput("codimension"));
        }
        self.ensure_stable()
    }
}

pub(crate) fn mb_of(gens: &[IndexSet]) -> MbInvariants {
    MbInvariants {
        m: gens.iter().filter_map(|g| g.max_index()).max().unwrap_or(0),
        b: gens.iter().map(|g| g.len()).max().unwrap_or(0),
    }
}

/// Distinct facet cardinalities, for equidimensionality checks.
pub fn facet_sizes(facets: &[IndexSet]) -> BTreeSet<usize> {
    facets.iter().map(|f| f.len()).collect()
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.monomial_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
