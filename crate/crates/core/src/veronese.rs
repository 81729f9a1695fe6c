//! Closed-form criteria for ideals of Veronese type.
//!
//! Two reductions are in play. The equidimensionality pipeline sorts the caps
//! non-increasingly, drops zero caps and peels off every variable with
//! `a_i >= d` (each such `x_i` generates the radical on its own and lies in
//! every minimal vertex cover), leaving a core with `d > a_1 >= ... >= a_k >= 1`.
//! The associated-prime pipeline only drops zero caps and clamps caps to `d`;
//! variables with `a_i = d` stay, since they make the maximal ideal associated.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{IndexSet, Monomial};
use crate::polymatroid::{polymatroidal_ideal, translation_normalize, BaseSet, VeroneseParams};
use crate::stable::{MbInvariants, SquarefreeIdeal};

/// Sorted, trimmed and peeled form of a set of Veronese parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub original: VeroneseParams,
    /// `order[k]` is the original index of core variable `k + 1`.
    pub order: Vec<usize>,
    /// Original indices with `a_i = 0`.
    pub trimmed: IndexSet,
    /// Original indices with `a_i >= d`.
    pub peeled: IndexSet,
    /// Remaining problem with `d > a_1 >= ... >= a_k >= 1`; absent when the
    /// peeled variables alone generate the radical.
    pub core: Option<VeroneseParams>,
    /// Every nonzero cap is at least `d`: a Veronese ideal in the
    /// surviving variables.
    pub pure_veronese: bool,
}

impl NormalForm {
    /// Maps a set of core indices to original indices.
    pub fn lift(&self, set: IndexSet) -> IndexSet {
        set.iter()
            .map(|k| IndexSet::singleton(self.order[k - 1]))
            .fold(IndexSet::EMPTY, IndexSet::union)
    }

    /// Caps of the original parameters after clamping to `d`, rebuilt from
    /// the core, the peeled and the trimmed records.
    pub fn reassembled_caps(&self) -> Vec<u32> {
        let d = self.original.d();
        let mut caps = vec![0u32; self.original.nvars()];
        for i in self.peeled.iter() {
            caps[i - 1] = d;
        }
        let core_caps = self.core_caps();
        for (k, &i) in self.order.iter().enumerate() {
            caps[i - 1] = core_caps[k];
        }
        caps
    }

    fn core_caps(&self) -> Vec<u32> {
        let d = self.original.d();
        self.order
            .iter()
            .map(|&i| self.original.cap(i).min(d))
            .collect()
    }

    /// `G(sqrt I)` in original indices.
    pub fn radical(&self) -> Result<SquarefreeIdeal> {
        let mut sets: Vec<IndexSet> = self.peeled.iter().map(IndexSet::singleton).collect();
        if let Some(core) = &self.core {
            sets.extend(radical_generators(core)?.into_iter().map(|s| self.lift(s)));
        }
        SquarefreeIdeal::new(self.original.nvars(), sets)
    }
}

pub fn normalize(p: &VeroneseParams) -> Result<NormalForm> {
    if p.d() == 0 {
        return Err(Error::UnitIdealInput("normalize"));
    }
    p.ensure_feasible()?;
    let d = p.d();
    let mut trimmed = IndexSet::EMPTY;
    let mut peeled = IndexSet::EMPTY;
    let mut rest: Vec<usize> = Vec::new();
    for i in 1..=p.nvars() {
        match p.cap(i) {
            0 => trimmed = trimmed.with(i),
            a if a >= d => peeled = peeled.with(i),
            _ => rest.push(i),
        }
    }
    // stable sort: equal caps keep their original relative order
    rest.sort_by_key(|&i| std::cmp::Reverse(p.cap(i)));
    let caps: Vec<u32> = rest.iter().map(|&i| p.cap(i)).collect();
    let feasible_core = caps.iter().map(|&a| u64::from(a)).sum::<u64>() >= u64::from(d);
    let core = if feasible_core {
        Some(VeroneseParams::new(d, caps)?)
    } else {
        None
    };
    Ok(NormalForm {
        original: p.clone(),
        pure_veronese: rest.is_empty(),
        order: rest,
        trimmed,
        peeled,
        core,
    })
}

fn is_core_form(p: &VeroneseParams) -> bool {
    let caps = p.caps();
    caps.first().is_some_and(|&a1| a1 < p.d())
        && caps.windows(2).all(|w| w[0] >= w[1])
        && caps.iter().all(|&a| a >= 1)
        && p.is_feasible()
}

/// All `i_1 < ... < i_k` with `a_{i_1} + ... + a_{i_k} >= d` and
/// `a_{i_1} + ... + a_{i_{k-1}} < d`: the supports of `G(sqrt I)`.
pub fn radical_generators(p: &VeroneseParams) -> Result<Vec<IndexSet>> {
    if !is_core_form(p) {
        return Err(Error::NotNormalized);
    }
    let d = u64::from(p.d());
    let caps = p.caps();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, IndexSet, u64)> = vec![(0, IndexSet::EMPTY, 0)];
    while let Some((next, set, sum)) = stack.pop() {
        for (k, &cap) in caps.iter().enumerate().skip(next) {
            let grown = set.with(k + 1);
            let total = sum + u64::from(cap);
            if total >= d {
                out.push(grown);
            } else {
                stack.push((k + 1, grown, total));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Why the equidimensionality verdict came out the way it did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EquidimEvidence {
    /// Every nonzero cap is at least `d`.
    PureVeronese,
    /// The peeled variables generate the radical, so it is prime.
    PrimeRadical,
    /// The unique top-degree Borel generator is `x_{m-b+1}...x_m` and every
    /// generator has `max(u) - deg(u) <= m - b`.
    Holds { top_borel: IndexSet },
    /// The Borel generators of degree `b` are not exactly `x_{m-b+1}...x_m`.
    TopBorelMismatch {
        expected: IndexSet,
        found: Vec<IndexSet>,
    },
    /// A generator with `max(u) - deg(u) > m - b`.
    GapExceeded {
        generator: IndexSet,
        gap: usize,
        bound: usize,
    },
}

/// Equidimensionality verdict with its certificate. Index sets are in core
/// indices (see [`NormalForm::order`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidimReport {
    pub verdict: bool,
    pub normal_form: NormalForm,
    pub mb: Option<MbInvariants>,
    pub borel: Vec<IndexSet>,
    pub unique_top_borel: Option<IndexSet>,
    pub failing_generator: Option<IndexSet>,
    /// Size of every minimal vertex cover of the full ideal when the verdict
    /// holds: the peeled variables plus `m - b + 1`.
    pub cover_cardinality: Option<usize>,
    pub evidence: EquidimEvidence,
}

pub fn is_equidimensional(p: &VeroneseParams) -> Result<EquidimReport> {
    let nf = normalize(p)?;
    let peeled = nf.peeled.len();
    let Some(core) = nf.core.clone() else {
        let evidence = if nf.pure_veronese {
            EquidimEvidence::PureVeronese
        } else {
            EquidimEvidence::PrimeRadical
        };
        return Ok(EquidimReport {
            verdict: true,
            normal_form: nf,
            mb: None,
            borel: Vec::new(),
            unique_top_borel: None,
            failing_generator: None,
            cover_cardinality: Some(peeled),
            evidence,
        });
    };

    let radical = SquarefreeIdeal::new(core.nvars(), radical_generators(&core)?)?;
    let borel = radical.borel_generators()?;
    let mb = radical.mb()?;
    let MbInvariants { m, b } = mb;
    let expected = IndexSet::interval(m - b + 1, m);
    let top: Vec<IndexSet> = borel.iter().copied().filter(|s| s.len() == b).collect();
    let unique_top_borel = (top.len() == 1).then(|| top[0]);

    let evidence = if top != [expected] {
        EquidimEvidence::TopBorelMismatch {
            expected,
            found: top.clone(),
        }
    } else if let Some(&g) = radical.gens().iter().find(|g| gap(**g) > m - b) {
        EquidimEvidence::GapExceeded {
            generator: g,
            gap: gap(g),
            bound: m - b,
        }
    } else {
        EquidimEvidence::Holds {
            top_borel: expected,
        }
    };

    let verdict = matches!(evidence, EquidimEvidence::Holds { .. });
    let failing_generator = match &evidence {
        EquidimEvidence::TopBorelMismatch { found, .. } => {
            found.iter().copied().find(|&s| s != expected)
        }
        EquidimEvidence::GapExceeded { generator, .. } => Some(*generator),
        _ => None,
    };
    Ok(EquidimReport {
        verdict,
        normal_form: nf,
        mb: Some(mb),
        borel,
        unique_top_borel,
        failing_generator,
        cover_cardinality: verdict.then_some(peeled + m - b + 1),
        evidence,
    })
}

/// `max(u) - deg(u)` for a nonempty squarefree support.
fn gap(set: IndexSet) -> usize {
    set.max_index().unwrap_or(0) - set.len()
}

/// The maximal pair `(p, l)` of a window `a_{p-l+1} + ... + a_p >= d` with
/// `a_{p-l+1} + ... + a_{p-1} < d`, and the radical generators breaking
/// `i_k - k <= p - l`. Indices are core indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub pair: Option<(usize, usize)>,
    pub violations: Vec<IndexSet>,
    pub verdict: bool,
}

pub fn maximal_pair(p: &VeroneseParams) -> Result<PairReport> {
    let nf = normalize(p)?;
    let Some(core) = nf.core else {
        return Ok(PairReport {
            pair: None,
            violations: Vec::new(),
            verdict: true,
        });
    };
    let d = u64::from(core.d());
    let n = core.nvars();

    // each window start reaches d at most once
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for start in 1..=n {
        let mut sum = 0u64;
        for end in start..=n {
            sum += u64::from(core.cap(end));
            if sum >= d {
                pairs.push((end, end - start + 1));
                break;
            }
        }
    }
    let top = pairs.iter().copied().max();
    if let Some((tp, tl)) = top {
        if let Some(&(p1, l1)) = pairs.iter().find(|&&(p1, l1)| p1 > tp || l1 > tl) {
            return Err(Error::Internal(format!(
                "window pairs ({p1},{l1}) and ({tp},{tl}) are incomparable"
            )));
        }
    }

    let violations = match top {
        Some((tp, tl)) => radical_generators(&core)?
            .into_iter()
            .filter(|&g| gap(g) > tp - tl)
            .collect(),
        None => Vec::new(),
    };
    Ok(PairReport {
        pair: top,
        verdict: top.is_some() && violations.is_empty(),
        violations,
    })
}

/// An associated prime `P_A` with a monomial `z` such that `I : z = P_A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessedPrime {
    pub indices: IndexSet,
    #[serde(rename = "witness_exponents")]
    pub witness: Monomial,
}

impl WitnessedPrime {
    /// Checks `z` is outside `ideal` and `ideal : z = P_A`, by colon.
    pub fn verify_by_colon(&self, ideal: &MonomialIdeal) -> Result<bool> {
        Ok(!ideal.contains(&self.witness)?
            && ideal.colon(&self.witness)? == MonomialIdeal::prime(ideal.nvars(), self.indices)?)
    }
}

/// Parameters of the associated-prime pipeline: zero caps set aside and caps
/// clamped to `d`.
struct ActiveCaps {
    d: u32,
    caps: Vec<u32>,
    active: IndexSet,
}

fn active_caps(p: &VeroneseParams) -> Result<ActiveCaps> {
    if p.d() == 0 {
        return Err(Error::UnitIdealInput("associated primes"));
    }
    p.ensure_feasible()?;
    let caps: Vec<u32> = p.caps().iter().map(|&a| a.min(p.d())).collect();
    let active = (1..=p.nvars())
        .filter(|&i| caps[i - 1] > 0)
        .map(IndexSet::singleton)
        .fold(IndexSet::EMPTY, IndexSet::union);
    Ok(ActiveCaps {
        d: p.d(),
        caps,
        active,
    })
}

/// `Ass(S/I)`: `P_A` is associated iff `sum a_i >= d - 1 + |A|` and
/// `sum_{i not in A} a_i <= d - 1`. Variables with `a_i = 0` never occur in
/// an associated prime. Each prime carries the witness
/// `z = prod_{i in A} x_i^{b_i} prod_{i not in A} x_i^{a_i}` with the `b_i`
/// filled greedily in increasing index order.
pub fn associated_primes(p: &VeroneseParams) -> Result<Vec<WitnessedPrime>> {
    let ac = active_caps(p)?;
    let n = p.nvars();
    if ac.d == 1 {
        return Ok(vec![WitnessedPrime {
            indices: ac.active,
            witness: Monomial::one(n),
        }]);
    }
    let d1 = u64::from(ac.d - 1);
    let total: u64 = ac.caps.iter().map(|&a| u64::from(a)).sum();
    let active: Vec<usize> = ac.active.iter().collect();

    // complements C = active \ A with sum_{C} a_i <= d - 1
    let mut complements = Vec::new();
    let mut stack: Vec<(usize, IndexSet, u64)> = vec![(0, IndexSet::EMPTY, 0)];
    while let Some((next, set, sum)) = stack.pop() {
        complements.push(set);
        for (k, &i) in active.iter().enumerate().skip(next) {
            let s = sum + u64::from(ac.caps[i - 1]);
            if s <= d1 {
                stack.push((k + 1, set.with(i), s));
            }
        }
    }

    let mut primes = Vec::new();
    for c in complements {
        let a = ac.active.difference(c);
        if a.is_empty() || total < d1 + a.len() as u64 {
            continue;
        }
        let witness = greedy_witness(&ac, a, d1 - sum_over(&ac.caps, c))?;
        let prime = WitnessedPrime {
            indices: a,
            witness,
        };
        if !witness_holds(p, &ac, &prime)? {
            return Err(Error::Internal(format!(
                "witness {} does not realize {}",
                prime.witness,
                a.prime_string()
            )));
        }
        primes.push(prime);
    }
    primes.sort_by_key(|wp| wp.indices);
    Ok(primes)
}

fn sum_over(caps: &[u32], set: IndexSet) -> u64 {
    set.iter().map(|i| u64::from(caps[i - 1])).sum()
}

fn greedy_witness(ac: &ActiveCaps, a: IndexSet, mut deficit: u64) -> Result<Monomial> {
    let mut exps = vec![0u32; ac.caps.len()];
    for i in ac.active.iter() {
        let cap = ac.caps[i - 1];
        exps[i - 1] = if a.contains(i) {
            let b = u64::from(cap - 1).min(deficit);
            deficit -= b;
            b as u32
        } else {
            cap
        };
    }
    if deficit != 0 {
        return Err(Error::Internal(format!(
            "no exponents b_i < a_i fill degree d - 1 for {}",
            a.prime_string()
        )));
    }
    Monomial::new(exps)
}

/// `z` outside `I`, `x_i z` inside for `i` in `A`, and no monomial in the
/// remaining variables pushes `z` into `I`.
fn witness_holds(p: &VeroneseParams, ac: &ActiveCaps, wp: &WitnessedPrime) -> Result<bool> {
    let z = &wp.witness;
    if p.ideal_contains(z)? {
        return Ok(false);
    }
    for i in wp.indices.iter() {
        let mut e = z.exps().to_vec();
        e[i - 1] += 1;
        if !p.ideal_contains(&Monomial::new(e)?)? {
            return Ok(false);
        }
    }
    let saturated: u64 = (1..=p.nvars())
        .map(|i| {
            let cap = u64::from(ac.caps[i - 1]);
            if wp.indices.contains(i) {
                u64::from(z.exp(i)).min(cap)
            } else {
                cap
            }
        })
        .sum();
    Ok(saturated < u64::from(ac.d))
}

/// Unmixedness verdict; when it fails, a pair of associated primes
/// `P_A ⊊ P_B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnmixedReport {
    pub verdict: bool,
    pub embedded: Option<(IndexSet, IndexSet)>,
}

pub fn unmixed_report(p: &VeroneseParams) -> Result<UnmixedReport> {
    let primes: Vec<IndexSet> = associated_primes(p)?
        .into_iter()
        .map(|w| w.indices)
        .collect();
    let embedded = primes.iter().find_map(|&small| {
        primes
            .iter()
            .find(|&&big| big != small && small.is_subset(big))
            .map(|&big| (small, big))
    });
    Ok(UnmixedReport {
        verdict: embedded.is_none(),
        embedded,
    })
}

pub fn is_unmixed(p: &VeroneseParams) -> Result<bool> {
    Ok(unmixed_report(p)?.verdict)
}

/// Cohen-Macaulay classes of Veronese-type ideals. Overlaps resolve in the
/// order listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CmClass {
    Principal,
    Veronese,
    SquarefreeVeronese,
    NotCohenMacaulay,
}

impl CmClass {
    pub fn is_cohen_macaulay(self) -> bool {
        self != CmClass::NotCohenMacaulay
    }
}

pub fn classify(p: &VeroneseParams) -> Result<CmClass> {
    let ac = active_caps(p)?;
    let caps: Vec<u32> = ac.active.iter().map(|i| ac.caps[i - 1]).collect();
    let sum: u64 = caps.iter().map(|&a| u64::from(a)).sum();
    Ok(if sum == u64::from(ac.d) {
        CmClass::Principal
    } else if caps.iter().all(|&a| a == ac.d) {
        CmClass::Veronese
    } else if caps.iter().all(|&a| a == 1) && (ac.d as usize) < caps.len() {
        CmClass::SquarefreeVeronese
    } else {
        CmClass::NotCohenMacaulay
    })
}

/// Equidimensionality of a strong polymatroidal ideal: through the Veronese
/// criterion when the base set is already of Veronese type, otherwise by
/// whether the radical is principal.
pub fn strong_polymatroidal_equidimensional(b: &BaseSet) -> Result<bool> {
    let t = translation_normalize(b)?;
    if t.is_identity() {
        if t.params.d() == 0 {
            return Err(Error::UnitIdealInput("equidimensionality"));
        }
        return Ok(is_equidimensional(&t.params)?.verdict);
    }
    Ok(polymatroidal_ideal(b)?.radical()?.is_principal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatroid::veronese_bases;

    fn set(ix: &[usize]) -> IndexSet {
        IndexSet::from_indices(ix.iter().copied()).unwrap()
    }

    fn sets(list: &[&[usize]]) -> Vec<IndexSet> {
        list.iter().map(|s| set(s)).collect()
    }

    fn params(d: u32, a: &[u32]) -> VeroneseParams {
        VeroneseParams::new(d, a.to_vec()).unwrap()
    }

    #[test]
    fn normalize_sorts_caps() {
        let nf = normalize(&params(5, &[1, 2, 3])).unwrap();
        assert_eq!(nf.core, Some(params(5, &[3, 2, 1])));
        assert_eq!(nf.order, vec![3, 2, 1]);
        assert_eq!(nf.reassembled_caps(), vec![1, 2, 3]);
    }

    #[test]
    fn normalize_peels_full_caps() {
        let nf = normalize(&params(7, &[7, 4, 3, 2, 1, 1])).unwrap();
        assert_eq!(nf.peeled, set(&[1]));
        assert_eq!(nf.core, Some(params(7, &[4, 3, 2, 1, 1])));
        assert_eq!(nf.lift(set(&[1, 2])), set(&[2, 3]));
        assert_eq!(nf.reassembled_caps(), vec![7, 4, 3, 2, 1, 1]);
    }

    #[test]
    fn normalize_flags_pure_veronese() {
        let nf = normalize(&params(3, &[3, 3, 3])).unwrap();
        assert!(nf.pure_veronese);
        assert_eq!(nf.core, None);
    }

    #[test]
    fn normalize_trims_zero_caps_and_clamps() {
        let nf = normalize(&params(4, &[0, 9, 2, 2, 0])).unwrap();
        assert_eq!(nf.trimmed, set(&[1, 5]));
        assert_eq!(nf.peeled, set(&[2]));
        assert_eq!(nf.core, Some(params(4, &[2, 2])));
        assert_eq!(nf.reassembled_caps(), vec![0, 4, 2, 2, 0]);
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(
            normalize(&params(3, &[1, 1])).unwrap_err(),
            Error::EmptyPolymatroid { d: 3, sum: 2 }
        );
        assert_eq!(
            normalize(&params(0, &[1, 1])).unwrap_err(),
            Error::UnitIdealInput("normalize")
        );
    }

    #[test]
    fn radical_generators_of_worked_examples() {
        assert_eq!(
            radical_generators(&params(7, &[4, 3, 2, 1, 1])).unwrap(),
            sets(&[&[1, 2], &[1, 3, 4], &[1, 3, 5], &[2, 3, 4, 5]])
        );
        assert_eq!(
            radical_generators(&params(8, &[5, 5, 4, 3, 1, 1])).unwrap(),
            sets(&[
                &[1, 2],
                &[1, 3],
                &[1, 4],
                &[2, 3],
                &[2, 4],
                &[3, 4, 5],
                &[3, 4, 6]
            ])
        );
        assert_eq!(
            radical_generators(&params(5, &[3, 2, 1])).unwrap(),
            sets(&[&[1, 2]])
        );
    }

    #[test]
    fn radical_generators_need_core_form() {
        for p in [
            params(5, &[1, 2, 3]),
            params(3, &[3, 1]),
            params(3, &[2, 0]),
        ] {
            assert_eq!(radical_generators(&p).unwrap_err(), Error::NotNormalized);
        }
    }

    #[test]
    fn equidimensionality_fails_on_the_gap_condition() {
        let r = is_equidimensional(&params(9, &[7, 3, 3, 2, 1])).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failing_generator, Some(set(&[1, 4])));
        assert_eq!(r.mb, Some(MbInvariants { m: 5, b: 4 }));
        assert_eq!(r.borel, sets(&[&[1, 4], &[2, 3, 4, 5]]));
        assert_eq!(
            r.evidence,
            EquidimEvidence::GapExceeded {
                generator: set(&[1, 4]),
                gap: 2,
                bound: 1
            }
        );
    }

    #[test]
    fn equidimensionality_fails_on_the_top_borel_generator() {
        let r = is_equidimensional(&params(8, &[5, 5, 4, 3, 1, 1])).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.unique_top_borel, Some(set(&[3, 4, 6])));
        assert_eq!(r.failing_generator, Some(set(&[3, 4, 6])));
        assert_eq!(
            r.evidence,
            EquidimEvidence::TopBorelMismatch {
                expected: set(&[4, 5, 6]),
                found: sets(&[&[3, 4, 6]])
            }
        );
    }

    #[test]
    fn equidimensionality_holds_for_the_three_variable_example() {
        let r = is_equidimensional(&params(5, &[3, 2, 1])).unwrap();
        assert!(r.verdict);
        assert_eq!(r.cover_cardinality, Some(1));
        assert_eq!(r.unique_top_borel, Some(set(&[1, 2])));
        assert_eq!(r.failing_generator, None);
    }

    #[test]
    fn equidimensionality_shortcuts() {
        let r = is_equidimensional(&params(3, &[3, 3, 3])).unwrap();
        assert!(r.verdict);
        assert_eq!(r.evidence, EquidimEvidence::PureVeronese);
        assert_eq!(r.cover_cardinality, Some(3));
        let r = is_equidimensional(&params(7, &[7, 1])).unwrap();
        assert_eq!(r.evidence, EquidimEvidence::PrimeRadical);
        assert_eq!(r.cover_cardinality, Some(1));
    }

    #[test]
    fn maximal_pair_examples() {
        let r = maximal_pair(&params(15, &[9, 6, 4, 3, 2, 2, 1, 1])).unwrap();
        assert_eq!(r.pair, Some((5, 4)));
        assert!(r.violations.contains(&set(&[1, 3, 6])));
        assert!(!r.verdict);

        let r = maximal_pair(&params(5, &[3, 2, 1])).unwrap();
        assert_eq!(r.pair, Some((2, 2)));
        assert!(r.violations.is_empty());
        assert!(r.verdict);
    }

    #[test]
    fn associated_primes_of_the_three_variable_example() {
        let p = params(5, &[3, 2, 1]);
        let primes = associated_primes(&p).unwrap();
        let got: Vec<IndexSet> = primes.iter().map(|w| w.indices).collect();
        assert_eq!(got, sets(&[&[1], &[1, 2], &[1, 3], &[2], &[2, 3]]));
        let ideal = p.ideal().unwrap();
        for w in &primes {
            assert!(w.verify_by_colon(&ideal).unwrap(), "{w:?}");
            assert_eq!(w.witness.degree(), 4);
        }
    }

    #[test]
    fn associated_primes_small_cases() {
        let got: Vec<IndexSet> = associated_primes(&params(2, &[2, 2]))
            .unwrap()
            .into_iter()
            .map(|w| w.indices)
            .collect();
        assert_eq!(got, sets(&[&[1, 2]]));

        let got: Vec<IndexSet> = associated_primes(&params(2, &[1, 1, 1]))
            .unwrap()
            .into_iter()
            .map(|w| w.indices)
            .collect();
        assert_eq!(got, sets(&[&[1, 2], &[1, 3], &[2, 3]]));
    }

    #[test]
    fn associated_primes_of_a_prime_ideal() {
        let primes = associated_primes(&params(1, &[2, 0, 1])).unwrap();
        assert_eq!(primes.len(), 1);
        assert_eq!(primes[0].indices, set(&[1, 3]));
        assert!(primes[0]
            .verify_by_colon(&params(1, &[2, 0, 1]).ideal().unwrap())
            .unwrap());
    }

    #[test]
    fn associated_primes_skip_zero_caps() {
        let p = params(5, &[3, 0, 2, 1]);
        let got: Vec<IndexSet> = associated_primes(&p)
            .unwrap()
            .into_iter()
            .map(|w| w.indices)
            .collect();
        assert_eq!(got, sets(&[&[1], &[1, 3], &[1, 4], &[3], &[3, 4]]));
        let ideal = p.ideal().unwrap();
        for w in associated_primes(&p).unwrap() {
            assert!(w.verify_by_colon(&ideal).unwrap());
        }
    }

    #[test]
    fn unmixedness() {
        let r = unmixed_report(&params(5, &[3, 2, 1])).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.embedded, Some((set(&[1]), set(&[1, 2]))));
        assert!(is_unmixed(&params(2, &[1, 1, 1])).unwrap());
        assert!(!is_unmixed(&params(4, &[2, 2, 2])).unwrap());
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify(&params(6, &[3, 2, 1])).unwrap(),
            CmClass::Principal
        );
        assert_eq!(
            classify(&params(2, &[1, 1, 1, 1])).unwrap(),
            CmClass::SquarefreeVeronese
        );
        assert_eq!(
            classify(&params(5, &[3, 2, 1])).unwrap(),
            CmClass::NotCohenMacaulay
        );
        assert_eq!(classify(&params(3, &[3, 5, 3])).unwrap(), CmClass::Veronese);
        assert_eq!(classify(&params(4, &[4])).unwrap(), CmClass::Principal);
        assert_eq!(classify(&params(1, &[1, 1])).unwrap(), CmClass::Veronese);
        assert_eq!(
            classify(&params(3, &[1, 1, 1])).unwrap(),
            CmClass::Principal
        );
        assert_eq!(
            classify(&params(3, &[1, 1])).unwrap_err(),
            Error::EmptyPolymatroid { d: 3, sum: 2 }
        );
    }

    #[test]
    fn strong_polymatroidal_examples() {
        let b = BaseSet::new(vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]).unwrap();
        assert!(strong_polymatroidal_equidimensional(&b).unwrap());
        let b = BaseSet::new(vec![vec![3, 1], vec![2, 2]]).unwrap();
        assert!(strong_polymatroidal_equidimensional(&b).unwrap());
        let b = veronese_bases(&params(9, &[7, 3, 3, 2, 1])).unwrap();
        assert!(!strong_polymatroidal_equidimensional(&b).unwrap());
        let square = BaseSet::new(vec![
            vec![1, 0, 1, 0],
            vec![0, 1, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(
            strong_polymatroidal_equidimensional(&square).unwrap_err(),
            Error::NotStrongExchange
        );
    }
}
