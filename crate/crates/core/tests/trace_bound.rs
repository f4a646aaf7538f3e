use ndlu_core::dbst::max_trace_len;
use ndlu_core::{navigate, Counter, FrontSet, Solution, TreeVariant};
use proptest::prelude::*;

fn chain(k: usize) -> FrontSet {
    FrontSet::from_fronts(
        (1..=k)
            .map(|i| vec![Solution::new(format!("c{i}"), vec![i as f64, i as f64]).unwrap()])
            .collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn trace_never_exceeds_tree_height(k in 2usize..=65_536, probe in 0.0f64..65_538.0, skew in -3.0f64..3.0, left in any::<bool>()) {
        let fs = chain(k);
        let variant = if left { TreeVariant::LeftBalanced } else { TreeVariant::RightBalanced };
        let new = Solution::new("n", vec![probe, probe + skew]).unwrap();
        let mut c = Counter::new();
        let trace = navigate(&fs, &new, variant, &mut c).unwrap();
        prop_assert!(trace.len() <= max_trace_len(k));
        prop_assert_eq!(c.get(), trace.len() as u64);
    }
}

#[test]
fn exhaustive_small_chains() {
    for k in 2..=300 {
        let fs = chain(k);
        for p in 0..=2 * (k + 1) {
            let x = p as f64 / 2.0;
            for new in [
                Solution::new("n", vec![x, x]).unwrap(),
                Solution::new("n", vec![x, x - 0.75]).unwrap(),
            ] {
                for v in [TreeVariant::LeftBalanced, TreeVariant::RightBalanced] {
                    let trace = navigate(&fs, &new, v, &mut Counter::new()).unwrap();
                    assert!(trace.len() <= max_trace_len(k), "k={k} x={x} {v:?}");
                }
            }
        }
    }
}
