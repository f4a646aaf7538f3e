use ndlu_core::analysis::{
    antichain_dominated_probe, antichain_free_probe, chain_dominated_probe, gen_antichain,
    gen_chain, gen_equal_fronts, gen_worst_two_front, linear_maximizers, max_comp_left_tree,
    max_comp_linear, max_comp_right_tree, two_front_optimum, FrontProfile,
};
use ndlu_core::dbst::deepest_fronts;
use ndlu_core::{
    delete, full_sort, insert_linear, insert_tree, locate_sequential, lookup_tree, validate,
    Approach, Counter, LookupStrategy, Position, TreeVariant,
};

#[test]
fn worst_two_front_counts_equal_formulas() {
    for n in 4..=120 {
        let (fs, probe) = gen_worst_two_front(n, 2).unwrap();
        let p = FrontProfile::of(&fs).unwrap();
        let cases = [
            (Approach::Linear, max_comp_linear(&p)),
            (
                Approach::Tree(TreeVariant::LeftBalanced),
                max_comp_left_tree(&p),
            ),
            (
                Approach::Tree(TreeVariant::RightBalanced),
                max_comp_right_tree(&p),
            ),
        ];
        for (a, formula) in cases {
            let mut work = fs.clone();
            let mut c = Counter::new();
            assert_eq!(a.insert(&mut work, probe.clone(), &mut c).unwrap(), 1);
            assert_eq!(c.get(), formula, "n={n} {a}");
            assert!(validate(&work).is_empty());
        }
    }
}

#[test]
fn worst_two_front_even_closed_forms() {
    for n in (4..=200).step_by(2) {
        let (n1, n2) = two_front_optimum(n);
        let p = FrontProfile::new(vec![n1, n2]).unwrap();
        let n = n as u64;
        assert_eq!(max_comp_linear(&p), n * n / 4 + 1);
        assert_eq!(max_comp_right_tree(&p), n * n / 4 + 1);
        assert_eq!(max_comp_left_tree(&p), n * n / 4 + n / 2);
    }
}

#[test]
fn two_front_split_is_the_maximizer() {
    for n in 4..=16 {
        let (max, arg) = linear_maximizers(n);
        let (n1, n2) = two_front_optimum(n);
        assert_eq!(
            max,
            max_comp_linear(&FrontProfile::new(vec![n1, n2]).unwrap())
        );
        assert!(arg.contains(&vec![n1, n2]));
        assert!(arg.iter().all(|p| p.len() == 2));
    }
}

#[test]
fn antichain_probes() {
    let mut fs = full_sort(&gen_antichain(50, 3).unwrap()).unwrap();
    let mut c = Counter::new();
    insert_linear(&mut fs.clone(), antichain_free_probe(50, 3), &mut c).unwrap();
    assert_eq!(c.take(), 50);
    insert_linear(&mut fs, antichain_dominated_probe(50, 3), &mut c).unwrap();
    assert_eq!(c.take(), 1);
}

#[test]
fn chain_linear_dominated_probe() {
    let mut fs = full_sort(&gen_chain(100, 2).unwrap()).unwrap();
    let mut c = Counter::new();
    assert_eq!(
        insert_linear(&mut fs, chain_dominated_probe(100, 2), &mut c).unwrap(),
        101
    );
    assert_eq!(c.get(), 100);
}

#[test]
fn chain_sequential_locate_bounds() {
    let fs = full_sort(&gen_chain(40, 2).unwrap()).unwrap();
    let mut c = Counter::new();
    let last = fs.front(40).unwrap()[0].clone();
    assert_eq!(
        locate_sequential(&fs, &last, &mut c),
        Some(Position {
            front: 40,
            index: 1
        })
    );
    assert_eq!(c.take(), 40);
    let first = fs.front(1).unwrap()[0].clone();
    assert_eq!(
        locate_sequential(&fs, &first, &mut c),
        Some(Position { front: 1, index: 1 })
    );
    assert_eq!(c.take(), 1);
}

#[test]
fn equal_fronts_lookup_counts() {
    let fs = full_sort(&gen_equal_fronts(100, 10, 2).unwrap()).unwrap();
    let last = fs.front(10).unwrap().last().unwrap().clone();
    let mut c = Counter::new();
    locate_sequential(&fs, &last, &mut c).unwrap();
    assert_eq!(c.take(), 10 + 10 - 1);
    for v in [TreeVariant::LeftBalanced, TreeVariant::RightBalanced] {
        for f in deepest_fronts(10, v) {
            let target = fs.front(f).unwrap().last().unwrap().clone();
            assert!(lookup_tree(&fs, &target, v, &mut c).is_some());
            assert_eq!(c.take(), 3 + 10, "{v:?} front {f}");
        }
    }
}

#[test]
fn single_front_delete_has_no_cascade() {
    let mut fs = full_sort(&gen_antichain(30, 2).unwrap()).unwrap();
    let last = fs.front(1).unwrap().last().unwrap().clone();
    delete(
        &mut fs,
        &last,
        LookupStrategy::Sequential,
        &mut Counter::new(),
    )
    .unwrap();
    assert_eq!(fs.sizes(), vec![29]);
}

#[test]
fn tree_insert_into_single_front_compares_all() {
    let mut fs = full_sort(&gen_antichain(64, 2).unwrap()).unwrap();
    let mut c = Counter::new();
    insert_tree(
        &mut fs,
        antichain_free_probe(64, 2),
        TreeVariant::RightBalanced,
        &mut c,
    )
    .unwrap();
    assert_eq!(c.get(), 64);
}
