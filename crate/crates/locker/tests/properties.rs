//! Property tests for the structural invariants: budget accounting can
//! never be driven past its limit, permutation algebra behaves, and the
//! Grover iterate is unitary for arbitrary phases.

use proptest::prelude::*;

use locker_puzzle::oracle::QuerySession;
use locker_puzzle::oracle::sample_placement;
use locker_puzzle::perm::{Colour, Colouring, Permutation};
use locker_puzzle::quantum::StateVector;
use locker_puzzle::Error;

#[derive(Debug, Clone)]
enum Op {
    Weak(usize),
    Strong(usize),
    Colour(usize),
}

fn op_strategy(max_locker: usize) -> impl Strategy<Value = Op> {
    // Deliberately includes out-of-range locker indices.
    let locker = 0..=(max_locker + 2);
    prop_oneof![
        locker.clone().prop_map(Op::Weak),
        locker.clone().prop_map(Op::Strong),
        locker.prop_map(Op::Colour),
    ]
}

proptest! {
    #[test]
    fn budget_is_never_exceeded(
        seed in any::<u64>(),
        n in 1usize..8,
        extra in 0usize..4,
        budget in 0usize..12,
        ops in prop::collection::vec(op_strategy(10), 0..40),
    ) {
        let b = n + extra;
        let placement = sample_placement(n, b, seed).unwrap();
        let colouring = Colouring::uniform(n, Colour::Red);
        let mut session = QuerySession::new(&placement, Some(&colouring), 1, budget).unwrap();
        for op in ops {
            let used_before = session.used();
            let result = match op {
                Op::Weak(x) => session.weak_query(x).map(|_| ()),
                Op::Strong(x) => session.strong_query(x).map(|_| ()),
                Op::Colour(x) => session.colour_query(x).map(|_| ()),
            };
            prop_assert!(session.used() <= budget);
            prop_assert_eq!(session.used(), session.transcript().len());
            if result.is_err() {
                // Failed queries must not consume budget.
                prop_assert_eq!(session.used(), used_before);
            }
            if used_before == budget {
                let rejected = matches!(
                    result,
                    Err(Error::BudgetExceeded { .. }) | Err(Error::IndexOutOfRange { .. })
                );
                prop_assert!(rejected);
            }
        }
    }

    #[test]
    fn invert_is_an_involution(seed in any::<u64>(), n in 1usize..40) {
        let p = locker_puzzle::oracle::sample_permutation(n, seed);
        prop_assert_eq!(p.invert().invert(), p.clone());
        let q = p.invert();
        for i in 1..=n {
            prop_assert_eq!(q.apply(p.apply(i)), i);
        }
        prop_assert_eq!(p.compose(&q).unwrap(), Permutation::identity(n));
    }

    #[test]
    fn cycles_partition_the_domain(seed in any::<u64>(), n in 1usize..40) {
        let p = locker_puzzle::oracle::sample_permutation(n, seed);
        let cycles = p.cycles();
        let total: usize = cycles.iter().map(Vec::len).sum();
        prop_assert_eq!(total, n);
        let mut seen = vec![false; n];
        for cycle in &cycles {
            // Each cycle starts at its minimum and follows the permutation.
            prop_assert_eq!(cycle[0], *cycle.iter().min().unwrap());
            for w in 0..cycle.len() {
                let next = cycle[(w + 1) % cycle.len()];
                prop_assert_eq!(p.apply(cycle[w]), next);
                prop_assert!(!seen[cycle[w] - 1]);
                seen[cycle[w] - 1] = true;
            }
        }
    }

    #[test]
    fn grover_iterate_preserves_norm(
        b in 1usize..60,
        steps in prop::collection::vec((any::<bool>(), 0.0..std::f64::consts::TAU, 0.0..std::f64::consts::TAU), 0..50),
    ) {
        let mut state = StateVector::uniform(b).unwrap();
        for (mark_first, phi, psi) in steps {
            let marked = mark_first.then_some(1);
            state.grover_iterate(marked, phi, psi).unwrap();
            prop_assert!((state.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn sampled_placements_are_valid(seed in any::<u64>(), n in 1usize..10, extra in 0usize..10) {
        let b = n + extra;
        let placement = sample_placement(n, b, seed).unwrap();
        let occupied: Vec<usize> = (1..=b).filter(|&x| placement.occupant(x).is_some()).collect();
        prop_assert_eq!(occupied.len(), n);
        for i in 1..=n {
            prop_assert_eq!(placement.occupant(placement.slot(i)), Some(i));
        }
    }
}
