use std::time::Instant;

use pentforge::catalog::Catalog;
use pentforge::search::{cycle_types, SearchBudget};
use pentforge::{
    build_deficiency, complete_from_deficiency, count_olps, partition_p, pent2_count, pent2_enumerate,
    verify_pentagonal, Completion, CycleType, Error, Graph,
};

/// Partitions of `n` with every part in `min..=max`, by direct recursion.
fn brute_partitions(n: usize, min: usize, max: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    (min..=max.min(n)).map(|part| brute_partitions(n - part, min, part)).sum()
}

#[test]
fn partition_function_matches_enumeration() {
    for n in 0..=40 {
        assert_eq!(partition_p(n as i64), brute_partitions(n, 1, n), "p({n})");
    }
}

#[test]
fn pent2_formula_matches_enumeration() {
    for r in 2..=20 {
        let all = pent2_enumerate(r);
        assert_eq!(pent2_count(r), all.len() as u128, "r = {r}");
        assert_eq!(pent2_count(r), brute_partitions(r + 3, 4, r + 3));
        for (ct, d) in &all {
            assert!(verify_pentagonal(d).pentagonal, "{ct}");
            assert_eq!(CycleType::of_design(d).unwrap(), *ct);
        }
        let mut types: Vec<_> = all.iter().map(|(ct, _)| ct.clone()).collect();
        types.dedup();
        assert_eq!(types.len(), all.len());
    }
}

#[test]
fn named_cycle_types() {
    let names: Vec<String> = cycle_types(5).iter().map(|c| c.to_string()).collect();
    assert_eq!(names, ["8", "4+4"]);
}

#[test]
fn completes_the_one_olp_pent3_9() {
    let original = Catalog::bundled().load("pent3_9_olp1").unwrap();
    let g = build_deficiency(&original);
    let start = Instant::now();
    let outcome = complete_from_deficiency(&g, 3, 9, &SearchBudget::default()).unwrap();
    let Completion::Found(d) = outcome else { panic!("a completion exists") };
    assert!(start.elapsed().as_secs() < 60);
    assert_eq!(build_deficiency(&d), g);
    assert!(verify_pentagonal(&d).pentagonal);
    assert_eq!(count_olps(&d).q(), 1);
}

#[test]
fn completion_is_deterministic_per_seed() {
    let g = build_deficiency(&Catalog::bundled().load("pent3_9_olp1").unwrap());
    for seed in [0, 3] {
        let budget = SearchBudget { seed, ..SearchBudget::default() };
        let a = complete_from_deficiency(&g, 3, 9, &budget).unwrap();
        let b = complete_from_deficiency(&g, 3, 9, &budget).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn tiny_budget_is_not_a_proof_of_nonexistence() {
    let g = build_deficiency(&Catalog::bundled().load("pent3_9_olp1").unwrap());
    let budget = SearchBudget { max_nodes: 3, ..SearchBudget::default() };
    assert!(matches!(complete_from_deficiency(&g, 3, 9, &budget), Err(Error::BudgetExhausted { .. })));
}

#[test]
fn mixed_cycles_complete_for_k2() {
    let g = Graph::disjoint_union(&[Graph::cycle(4), Graph::cycle(4), Graph::cycle(5)]);
    let Completion::Found(d) = complete_from_deficiency(&g, 2, 10, &SearchBudget::default()).unwrap() else {
        panic!("every 2-regular graph without short cycles completes")
    };
    assert_eq!(count_olps(&d).q(), 2);
}

#[test]
fn two_k33_cannot_be_completed() {
    // there is no PENT(3,4)
    let g = Graph::disjoint_union(&[Graph::complete_bipartite(3, 3), Graph::complete_bipartite(3, 3)]);
    assert_eq!(complete_from_deficiency(&g, 3, 4, &SearchBudget::default()).unwrap(), Completion::Unsatisfiable);
}
