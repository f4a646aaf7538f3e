use ndlu_core::{check_dom, dom_nature, Counter, DomRelation, Nature, Solution};
use proptest::prelude::*;

fn pair(m: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    // a small grid so equal coordinates and identical vectors are common
    let coord = (0i32..4).prop_map(f64::from);
    (
        prop::collection::vec(coord.clone(), m),
        prop::collection::vec(coord, m),
    )
}

fn sols(a: Vec<f64>, b: Vec<f64>) -> (Solution, Solution) {
    (
        Solution::new("a", a).unwrap(),
        Solution::new("b", b).unwrap(),
    )
}

proptest! {
    #[test]
    fn antisymmetry((a, b) in (2usize..6).prop_flat_map(pair)) {
        let (a, b) = sols(a, b);
        let mut c = Counter::new();
        let ab = dom_nature(&a, &b, &mut c).unwrap();
        let ba = dom_nature(&b, &a, &mut c).unwrap();
        prop_assert_eq!(ab.as_i8(), -ba.as_i8());
        prop_assert_eq!(ab, ba.flip());
    }

    #[test]
    fn check_dom_agrees_with_dom_nature((a, b) in (2usize..6).prop_flat_map(pair)) {
        let (sa, sb) = sols(a.clone(), b.clone());
        let mut c = Counter::new();
        let n = dom_nature(&sa, &sb, &mut c).unwrap();
        let r = check_dom(&sa, &sb, &mut c).unwrap();
        prop_assert_eq!(r == DomRelation::Dominates, n == Nature::Dominates);
        prop_assert_eq!(r == DomRelation::DominatedBy, n == Nature::Dominated);
        prop_assert_eq!(r == DomRelation::Identical, a == b);
        let rev = check_dom(&sb, &sa, &mut c).unwrap();
        prop_assert_eq!(r == DomRelation::Dominates, rev == DomRelation::DominatedBy);
        prop_assert_eq!(c.get(), 3);
    }

    #[test]
    fn counter_ticks_once_per_pair(t in 0usize..200, (a, b) in (2usize..6).prop_flat_map(pair)) {
        let (a, b) = sols(a, b);
        let mut c = Counter::new();
        for _ in 0..t {
            dom_nature(&a, &b, &mut c).unwrap();
        }
        prop_assert_eq!(c.get(), t as u64);
    }
}

#[test]
fn self_relation_is_identical() {
    let a = Solution::new("a", vec![0.25, -3.0, 7.0]).unwrap();
    let mut c = Counter::new();
    assert_eq!(check_dom(&a, &a, &mut c).unwrap(), DomRelation::Identical);
    assert_eq!(dom_nature(&a, &a, &mut c).unwrap(), Nature::NonDominated);
}
