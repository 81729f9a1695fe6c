use std::collections::BTreeSet;

use proptest::prelude::*;

use veronese_core::cli::{run, Actions, Input, OutputFormat, Request};
use veronese_core::oracle::{self, OracleBudget};
use veronese_core::report::Report;
use veronese_core::veronese::{
    associated_primes, classify, is_equidimensional, is_unmixed, normalize,
};
use veronese_core::{IndexSet, MonomialIdeal, SquarefreeIdeal, VeroneseParams};

/// Small parameters with zero caps and caps at or above `d` allowed.
fn small_params() -> impl Strategy<Value = VeroneseParams> {
    (1u32..=7)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(0..=d + 1, 1..=5)))
        .prop_filter_map("infeasible", |(d, a)| {
            let p = VeroneseParams::new(d, a).ok()?;
            p.is_feasible().then_some(p)
        })
}

fn with_permutation() -> impl Strategy<Value = (VeroneseParams, Vec<usize>)> {
    small_params().prop_flat_map(|p| {
        let n = p.nvars();
        (
            Just(p),
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
        )
    })
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

/// Caps of `p` with variable `i` moved to position `perm[i - 1]`.
fn permuted(p: &VeroneseParams, perm: &[usize]) -> VeroneseParams {
    let mut caps = vec![0; p.nvars()];
    for i in 1..=p.nvars() {
        caps[perm[i - 1] - 1] = p.cap(i);
    }
    VeroneseParams::new(p.d(), caps).unwrap()
}

fn relabel(set: IndexSet, perm: &[usize]) -> IndexSet {
    IndexSet::from_indices(set.iter().map(|i| perm[i - 1])).unwrap()
}

fn prime_sets(primes: &[veronese_core::veronese::WitnessedPrime]) -> Vec<IndexSet> {
    primes.iter().map(|w| w.indices).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn associated_primes_match_colon_enumeration(p in small_params()) {
        let ideal = p.ideal().unwrap();
        let closed = associated_primes(&p).unwrap();
        let brute = oracle::associated_primes_bruteforce(&ideal, &budget()).unwrap();
        prop_assert_eq!(prime_sets(&closed), prime_sets(&brute));
        for w in closed.iter().chain(&brute) {
            prop_assert!(!ideal.contains(&w.witness).unwrap());
            prop_assert_eq!(ideal.colon(&w.witness).unwrap(), MonomialIdeal::prime(p.nvars(), w.indices).unwrap());
        }
    }

    #[test]
    fn oracle_witness_is_lexicographically_least(p in small_params()) {
        let ideal = p.ideal().unwrap();
        let brute = oracle::associated_primes_bruteforce(&ideal, &budget()).unwrap();
        for w in &brute {
            // no smaller candidate below the lcm gives the same prime
            let lcm = ideal.generator_lcm();
            let mut z = vec![0u32; p.nvars()];
            loop {
                let m = veronese_core::Monomial::new(z.clone()).unwrap();
                if m == w.witness {
                    break;
                }
                if !ideal.contains(&m).unwrap() {
                    prop_assert_ne!(ideal.colon(&m).unwrap().as_prime(), Some(w.indices));
                }
                let mut k = z.len();
                loop {
                    k -= 1;
                    if z[k] < lcm.exp(k + 1) { z[k] += 1; break; }
                    z[k] = 0;
                }
            }
        }
    }

    #[test]
    fn equidimensionality_matches_vertex_covers(p in small_params()) {
        let report = is_equidimensional(&p).unwrap();
        let covers = oracle::minimal_vertex_covers(&p.ideal().unwrap(), &budget()).unwrap();
        let sizes: BTreeSet<usize> = covers.iter().map(|c| c.len()).collect();
        prop_assert_eq!(report.verdict, sizes.len() == 1);
        if report.verdict {
            prop_assert_eq!(report.cover_cardinality, sizes.first().copied());
        }
    }

    #[test]
    fn radical_matches_brute_force(p in small_params()) {
        let closed = normalize(&p).unwrap().radical().unwrap();
        let brute = SquarefreeIdeal::from_ideal(&p.ideal().unwrap().radical().unwrap()).unwrap();
        prop_assert_eq!(closed, brute);
    }

    #[test]
    fn unmixed_exactly_for_cohen_macaulay_classes(p in small_params()) {
        let ideal = p.ideal().unwrap();
        let unmixed = is_unmixed(&p).unwrap();
        prop_assert_eq!(unmixed, classify(&p).unwrap().is_cohen_macaulay());
        prop_assert_eq!(unmixed, oracle::is_unmixed_bruteforce(&ideal, &budget()).unwrap());
        if unmixed {
            prop_assert!(oracle::is_equidimensional_bruteforce(&ideal, &budget()).unwrap());
        }
    }

    #[test]
    fn results_follow_variable_permutations((p, perm) in with_permutation()) {
        let q = permuted(&p, &perm);
        let (ip, iq) = (p.ideal().unwrap(), q.ideal().unwrap());

        let mut moved: Vec<IndexSet> = oracle::minimal_vertex_covers(&ip, &budget()).unwrap()
            .into_iter().map(|s| relabel(s, &perm)).collect();
        moved.sort();
        prop_assert_eq!(moved, oracle::minimal_vertex_covers(&iq, &budget()).unwrap());

        let mut moved: Vec<IndexSet> = oracle::associated_primes_bruteforce(&ip, &budget()).unwrap()
            .iter().map(|w| relabel(w.indices, &perm)).collect();
        moved.sort();
        prop_assert_eq!(&moved, &prime_sets(&oracle::associated_primes_bruteforce(&iq, &budget()).unwrap()));
        prop_assert_eq!(&moved, &prime_sets(&associated_primes(&q).unwrap()));

        prop_assert_eq!(is_equidimensional(&p).unwrap().verdict, is_equidimensional(&q).unwrap().verdict);
        prop_assert_eq!(classify(&p).unwrap(), classify(&q).unwrap());
    }

    #[test]
    fn reports_round_trip_and_agree_with_the_oracle(p in small_params()) {
        let req = Request {
            input: Input::Veronese(p),
            actions: Actions::all(),
            oracle_check: true,
            format: OutputFormat::Json,
            budget: budget(),
            inject_fault: false,
        };
        let report = run(&req).unwrap();
        prop_assert!(report.agreed(), "{:?}", report.oracle);
        prop_assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
    }
}
