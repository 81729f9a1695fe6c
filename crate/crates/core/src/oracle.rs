//! Brute-force ground truth, independent of the closed forms in
//! [`crate::veronese`]: minimal vertex covers by subset enumeration and
//! associated primes by colon enumeration. Exceeding a budget is an error,
//! never a silently truncated answer.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{IndexSet, Monomial};
use crate::veronese::WitnessedPrime;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap on `2^n` for vertex-cover enumeration.
    pub max_subsets: u64,
    /// Cap on the number of colon candidates `prod (1 + max exponent of x_i)`.
    pub max_divisors: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_subsets: 1 << 20,
            max_divisors: 1_000_000,
        }
    }
}

impl OracleBudget {
    pub fn check_subsets(&self, nvars: usize) -> Result<()> {
        let needed = 1u128 << nvars;
        if needed > u128::from(self.max_subsets) {
            return Err(Error::BudgetExceeded {
                what: "vertex cover enumeration",
                needed,
                budget: self.max_subsets,
            });
        }
        Ok(())
    }

    pub fn check_divisors(&self, ideal: &MonomialIdeal) -> Result<()> {
        let needed = divisor_count(ideal);
        if needed > u128::from(self.max_divisors) {
            return Err(Error::BudgetExceeded {
                what: "colon enumeration",
                needed,
                budget: self.max_divisors,
            });
        }
        Ok(())
    }
}

fn divisor_count(ideal: &MonomialIdeal) -> u128 {
    ideal
        .generator_lcm()
        .exps()
        .iter()
        .fold(1u128, |acc, &e| acc.saturating_mul(u128::from(e) + 1))
}

fn ensure_proper(ideal: &MonomialIdeal, what: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdealInput(what));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdealInput(what));
    }
    Ok(())
}

/// Inclusion-minimal `W` meeting the support of every generator, found by
/// walking subsets in increasing size and skipping supersets of covers
/// already found.
pub fn minimal_vertex_covers(
    ideal: &MonomialIdeal,
    budget: &OracleBudget,
) -> Result<Vec<IndexSet>> {
    ensure_proper(ideal, "minimal vertex covers")?;
    let n = ideal.nvars();
    budget.check_subsets(n)?;
    let mut supports: Vec<u64> = ideal.supports().iter().map(|s| s.mask()).collect();
    supports.sort_unstable();
    supports.dedup();
    let mut covers: Vec<u64> = Vec::new();
    for k in 0..=n {
        for w in subsets_of_size(n, k) {
            if covers.iter().any(|&c| c & !w == 0) {
                continue;
            }
            if supports.iter().all(|&s| s & w != 0) {
                covers.push(w);
            }
        }
    }
    let mut out: Vec<IndexSet> = covers.into_iter().map(IndexSet::from_mask).collect();
    out.sort();
    Ok(out)
}

/// All `k`-element masks over `n` bits, in increasing numeric order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(((1u128 << k) - 1) as u64)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur as u128 + c as u128;
            let following = ((((r as u64) ^ cur) >> 2) / c) as u128 | r;
            (following < limit).then_some(following as u64)
        };
        Some(cur)
    })
}

/// All minimal vertex covers have the same cardinality.
pub fn is_equidimensional_bruteforce(ideal: &MonomialIdeal, budget: &OracleBudget) -> Result<bool> {
    let covers = minimal_vertex_covers(ideal, budget)?;
    Ok(covers.windows(2).all(|w| w[0].len() == w[1].len()))
}

/// Every monomial `z` dividing the lcm of `G(I)` with `z` outside `I` and
/// `I : z` generated by variables, keeping the lexicographically least `z`
/// per prime. Exponents beyond the lcm never change `I : z`, so this search
/// is complete.
pub fn associated_primes_bruteforce(
    ideal: &MonomialIdeal,
    budget: &OracleBudget,
) -> Result<Vec<WitnessedPrime>> {
    ensure_proper(ideal, "associated primes")?;
    budget.check_divisors(ideal)?;
    let n = ideal.nvars();
    let bound: Vec<u32> = ideal.generator_lcm().exps().to_vec();
    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exps()).collect();

    let mut found: BTreeMap<IndexSet, Monomial> = BTreeMap::new();
    let mut z = vec![0u32; n];
    loop {
        if let Some(a) = colon_prime_candidate(&gens, &z) {
            if let Entry::Vacant(slot) = found.entry(a) {
                let witness = Monomial::new(z.clone())?;
                // confirm the fast filter with the full colon computation
                if ideal.colon(&witness)?.as_prime() != Some(a) {
                    return Err(Error::Internal(format!(
                        "colon filter disagrees with colon at {witness}"
                    )));
                }
                slot.insert(witness);
            }
        }
        // odometer, last coordinate fastest: ascending lexicographic order
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(found
                    .into_iter()
                    .map(|(indices, witness)| WitnessedPrime { indices, witness })
                    .collect());
            }
            k -= 1;
            if z[k] < bound[k] {
                z[k] += 1;
                break;
            }
            z[k] = 0;
        }
    }
}

/// `Some(A)` when `I : z = P_A`: no quotient `u / gcd(u, z)` is `1`, and the
/// degree-one quotients `x_i` (`i` in `A`) divide every other quotient.
fn colon_prime_candidate(gens: &[&[u32]], z: &[u32]) -> Option<IndexSet> {
    let mut vars = 0u64;
    let mut others: Vec<u64> = Vec::new();
    for g in gens {
        let mut degree = 0u64;
        let mut support = 0u64;
        for (k, (&e, &ze)) in g.iter().zip(z).enumerate() {
            let q = e.saturating_sub(ze);
            if q > 0 {
                degree += u64::from(q);
                support |= 1 << k;
            }
        }
        match degree {
            0 => return None,
            1 => vars |= support,
            _ => others.push(support),
        }
    }
    if vars == 0 || others.iter().any(|&s| s & vars == 0) {
        return None;
    }
    Some(IndexSet::from_mask(vars))
}

/// The associated primes are exactly the minimal primes.
pub fn is_unmixed_bruteforce(ideal: &MonomialIdeal, budget: &OracleBudget) -> Result<bool> {
    let covers = minimal_vertex_covers(ideal, budget)?;
    let primes: Vec<IndexSet> = associated_primes_bruteforce(ideal, budget)?
        .into_iter()
        .map(|w| w.indices)
        .collect();
    Ok(primes == covers)
}
