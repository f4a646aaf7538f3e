//! Reference non-dominated sort, independent of the incremental code paths.

use std::collections::{HashMap, HashSet};

use crate::dominance::{Solution, SolutionId};
use crate::error::{Error, Result};
use crate::front_set::FrontSet;

// Deliberately separate from `dominance::dominates` so that a bug there
// cannot hide in both the algorithms and their ground truth.
fn better(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strict = true;
        }
    }
    strict
}

/// Level partition of `population`: `F_1` is its non-dominated set, `F_{k+1}`
/// the non-dominated set of what remains. Input order is kept within fronts.
pub fn full_sort(population: &[Solution]) -> Result<FrontSet> {
    full_sort_counted(population).map(|(fs, _)| fs)
}

/// As [`full_sort`], also returning the number of pair comparisons made
/// (every unordered pair exactly once).
pub fn full_sort_counted(population: &[Solution]) -> Result<(FrontSet, u64)> {
    let n = population.len();
    let mut seen = HashSet::new();
    for sol in population {
        if !seen.insert(sol.id()) {
            return Err(Error::DuplicateId(sol.id().clone()));
        }
        if sol.m() != population[0].m() {
            return Err(Error::DimensionMismatch {
                expected: population[0].m(),
                found: sol.m(),
            });
        }
    }

    let mut dominated_by = vec![0usize; n];
    let mut dominates: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pairs = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            pairs += 1;
            let (a, b) = (population[i].objectives(), population[j].objectives());
            if better(a, b) {
                dominates[i].push(j);
                dominated_by[j] += 1;
            } else if better(b, a) {
                dominates[j].push(i);
                dominated_by[i] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates[i] {
                dominated_by[j] -= 1;
                if dominated_by[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current.iter().map(|&i| population[i].clone()).collect());
        current = next;
    }
    Ok((FrontSet::from_fronts(fronts)?, pairs))
}

/// True iff both sets have the same number of fronts and the same ids on
/// every level.
pub fn same_partition(a: &FrontSet, b: &FrontSet) -> bool {
    a.num_fronts() == b.num_fronts()
        && a.fronts().iter().zip(b.fronts()).all(|(fa, fb)| {
            fa.len() == fb.len() && {
                let ids: HashSet<&SolutionId> = fa.iter().map(Solution::id).collect();
                fb.iter().all(|s| ids.contains(s.id()))
            }
        })
}

/// Level of every id, for diagnostics.
pub fn levels(fs: &FrontSet) -> HashMap<SolutionId, usize> {
    let mut out = HashMap::new();
    for (k, front) in fs.fronts().iter().enumerate() {
        for sol in front {
            out.insert(sol.id().clone(), k + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front_set::validate;

    fn s(id: &str, v: &[f64]) -> Solution {
        Solution::new(id, v.to_vec()).unwrap()
    }

    #[test]
    fn twelve_solutions_in_five_levels() {
        let pop = vec![
            s("p12", &[12., 12.]),
            s("p5", &[5., 6.]),
            s("p1", &[0., 0.]),
            s("p9", &[9., 10.]),
            s("p2", &[2., 3.]),
            s("p4", &[4., 7.]),
            s("p10", &[10., 9.]),
            s("p3", &[3., 2.]),
            s("p6", &[6., 5.]),
            s("p11", &[11., 8.]),
            s("p7", &[7., 4.]),
            s("p8", &[8., 11.]),
        ];
        let (fs, pairs) = full_sort_counted(&pop).unwrap();
        assert_eq!(pairs, 66);
        let ids: Vec<Vec<&str>> = fs
            .fronts()
            .iter()
            .map(|f| f.iter().map(|x| x.id().as_str()).collect())
            .collect();
        assert_eq!(
            ids,
            vec![
                vec!["p1"],
                vec!["p2", "p3"],
                vec!["p5", "p4", "p6", "p7"],
                vec!["p9", "p10", "p11", "p8"],
                vec!["p12"]
            ]
        );
        assert!(validate(&fs).is_empty());
    }

    #[test]
    fn empty_and_antichain() {
        assert!(full_sort(&[]).unwrap().is_empty());
        let pop: Vec<_> = (0..20)
            .map(|i| s(&i.to_string(), &[i as f64, 20. - i as f64]))
            .collect();
        assert_eq!(full_sort(&pop).unwrap().sizes(), vec![20]);
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            full_sort(&[s("a", &[1., 1.]), s("a", &[2., 2.])]).unwrap_err(),
            Error::DuplicateId("a".into())
        );
    }

    #[test]
    fn partition_comparison() {
        let pop = vec![s("a", &[1., 1.]), s("b", &[2., 2.]), s("c", &[0., 3.])];
        let fs = full_sort(&pop).unwrap();
        assert!(same_partition(&fs, &fs));
        let swapped =
            FrontSet::from_fronts(vec![fs.fronts()[1].clone(), fs.fronts()[0].clone()]).unwrap();
        assert!(!same_partition(&fs, &swapped));
        let sorted_again = full_sort(&fs.clone().into_solutions()).unwrap();
        assert!(same_partition(&fs, &sorted_again));
        assert_eq!(levels(&fs)[&SolutionId::from("b")], 2);
    }
}
