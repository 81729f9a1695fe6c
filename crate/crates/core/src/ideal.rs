//! Monomial ideals represented by their minimal generating sets.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{IndexSet, Monomial};

/// A monomial ideal in `K[x1..xn]`, stored as `G(I)`.
///
/// Generators are pairwise incomparable under divisibility and kept in
/// lexicographic order, largest first (`x1^3·x2^2` before `x1^3·x2·x3`).
/// No generators means the zero ideal; the single generator `1` is the unit
/// ideal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// Keeps the divisibility-minimal elements of `monomials`.
    pub fn minimalize<I>(nvars: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = Vec::new();
        for u in monomials {
            if u.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: u.nvars(),
                });
            }
            all.push(u);
        }
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        all.dedup();

        let mut kept: Vec<Monomial> = Vec::new();
        for u in all {
            if !kept.iter().any(|g| g.divides_unchecked(&u)) {
                kept.push(u);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal { nvars, gens: kept })
    }

    /// Builds an ideal from monomials that all share one degree.
    ///
    /// Distinct monomials of equal degree never divide each other, so this
    /// skips the quadratic minimality pass.
    pub fn from_equigenerated<I>(nvars: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut gens: Vec<Monomial> = Vec::new();
        for u in monomials {
            if u.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: u.nvars(),
                });
            }
            if let Some(first) = gens.first() {
                if first.degree() != u.degree() {
                    return Err(Error::Internal(format!(
                        "generators {first} and {u} have different degrees"
                    )));
                }
            }
            gens.push(u);
        }
        gens.sort_by(|a, b| b.cmp(a));
        gens.dedup();
        Ok(MonomialIdeal { nvars, gens })
    }

    /// The squarefree ideal generated by `x_A` for each `A` in `sets`.
    pub fn from_index_sets<I>(nvars: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = IndexSet>,
    {
        let gens = sets
            .into_iter()
            .map(|a| Monomial::from_index_set(a, nvars))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(nvars, gens)
    }

    /// `P_A = (x_i : i in A)`.
    pub fn prime(nvars: usize, set: IndexSet) -> Result<Self> {
        Self::from_index_sets(nvars, set.iter().map(IndexSet::singleton))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_dim(&self, z: &Monomial) -> Result<()> {
        if z.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: z.nvars(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, z: &Monomial) -> Result<bool> {
        self.check_dim(z)?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(z)))
    }

    /// `I : z`, generated by `u / gcd(u, z)` over `u` in `G(I)`.
    pub fn colon(&self, z: &Monomial) -> Result<MonomialIdeal> {
        self.check_dim(z)?;
        let quotients = self
            .gens
            .iter()
            .map(|u| u.quotient_by_gcd(z))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(self.nvars, quotients)
    }

    pub fn radical(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdealInput("radical"));
        }
        Self::minimalize(self.nvars, self.gens.iter().map(Monomial::squarefree_part))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_equigenerated(&self) -> bool {
        match self.gens.first() {
            None => true,
            Some(first) => {
                let d = first.degree();
                self.gens.iter().all(|g| g.degree() == d)
            }
        }
    }

    /// Supports of the generators, in generator order.
    pub fn supports(&self) -> Vec<IndexSet> {
        self.gens.iter().map(Monomial::support).collect()
    }

    /// Componentwise maximum of the generators' exponent vectors.
    pub fn generator_lcm(&self) -> Monomial {
        let mut exps = vec![0u32; self.nvars];
        for g in &self.gens {
            for (e, &x) in exps.iter_mut().zip(g.exps()) {
                *e = (*e).max(x);
            }
        }
        Monomial::new(exps).expect("nvars already validated")
    }

    /// When the ideal is `P_A` for a nonempty `A`, returns `A`.
    pub fn as_prime(&self) -> Option<IndexSet> {
        if self.gens.is_empty() || self.gens.iter().any(|g| g.degree() != 1) {
            return None;
        }
        Some(
            self.supports()
                .into_iter()
                .fold(IndexSet::EMPTY, IndexSet::union),
        )
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
