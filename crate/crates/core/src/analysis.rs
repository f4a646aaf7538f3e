//! Closed-form worst-case comparison counts and deterministic instance
//! generators.

use crate::dominance::Solution;
use crate::error::{Error, Result};
use crate::front_set::FrontSet;

/// Front sizes `(n_1, ..., n_K)`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrontProfile {
    sizes: Vec<usize>,
}

impl FrontProfile {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidProfile(
                "a profile needs at least one front".into(),
            ));
        }
        if let Some(k) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::InvalidProfile(format!("front {} is empty", k + 1)));
        }
        Ok(FrontProfile { sizes })
    }

    pub fn of(fs: &FrontSet) -> Result<Self> {
        FrontProfile::new(fs.sizes())
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `n_k`, 1-based.
    pub fn at(&self, k: usize) -> usize {
        self.sizes[k - 1]
    }

    fn cascade(&self) -> u64 {
        self.sizes
            .windows(2)
            .map(|w| (w[0] as u64 - 1) * w[1] as u64)
            .sum()
    }

    // n_{f(mid / 2^j)} for j = 0..=floor(log2 K), skipping index 0
    fn chain_sum(&self, mid: usize, div: impl Fn(usize, usize) -> usize) -> u64 {
        let h = self.k().ilog2();
        (0..=h)
            .map(|j| div(mid, 1usize << j))
            .filter(|&i| i >= 1)
            .map(|i| self.at(i) as u64)
            .sum()
    }
}

/// Worst-case insertion cost of the linear approach:
/// `n_1 + sum_{k>=2} (n_{k-1} - 1) n_k`.
pub fn max_comp_linear(p: &FrontProfile) -> u64 {
    p.at(1) as u64 + p.cascade()
}

/// Worst-case insertion cost of the left-balanced tree: the sizes along the
/// ceiling-midpoint chain plus the cascade term. Exact at the two-front
/// optimum; an upper-envelope estimate for general profiles.
pub fn max_comp_left_tree(p: &FrontProfile) -> u64 {
    let mid = (1 + p.k()).div_ceil(2);
    p.chain_sum(mid, |a, b| a.div_ceil(b)) + p.cascade()
}

/// As [`max_comp_left_tree`] with floor midpoints.
pub fn max_comp_right_tree(p: &FrontProfile) -> u64 {
    let mid = p.k().div_ceil(2);
    p.chain_sum(mid, |a, b| a / b) + p.cascade()
}

/// The two-front split `(n_1, n_2)` that maximizes the linear cost.
pub fn two_front_optimum(n: usize) -> (usize, usize) {
    let n1 = n.div_ceil(2) + usize::from(n.is_multiple_of(2));
    (n1, n - n1)
}

/// Maximum of [`max_comp_linear`] over every profile summing to `n`, and all
/// profiles attaining it (in lexicographic order).
pub fn linear_maximizers(n: usize) -> (u64, Vec<Vec<usize>>) {
    fn walk(
        rest: usize,
        prev: Option<usize>,
        acc: u64,
        path: &mut Vec<usize>,
        best: &mut (u64, Vec<Vec<usize>>),
    ) {
        if rest == 0 {
            if acc > best.0 {
                *best = (acc, vec![path.clone()]);
            } else if acc == best.0 {
                best.1.push(path.clone());
            }
            return;
        }
        for nk in 1..=rest {
            let add = match prev {
                None => nk as u64,
                Some(p) => (p as u64 - 1) * nk as u64,
            };
            path.push(nk);
            walk(rest - nk, Some(nk), acc + add, path, best);
            path.pop();
        }
    }
    let mut best = (0, Vec::new());
    if n > 0 {
        walk(n, None, 0, &mut Vec::new(), &mut best);
    }
    best
}

fn pad(mut v: Vec<f64>, m: usize) -> Vec<f64> {
    v.resize(m.max(2), 0.0);
    v
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::TooFewObjectives(m));
    }
    Ok(())
}

fn sol(id: String, v: Vec<f64>) -> Solution {
    Solution::new(id, v).expect("generated vectors are finite")
}

/// `n` solutions in a total order: solution `i` has every coordinate equal
/// to `i`, so each one is alone on its level.
pub fn gen_chain(n: usize, m: usize) -> Result<Vec<Solution>> {
    check_m(m)?;
    Ok((1..=n)
        .map(|i| sol(format!("s{i}"), vec![i as f64; m]))
        .collect())
}

/// A solution dominated by every member of `gen_chain(n, m)`.
pub fn chain_dominated_probe(n: usize, m: usize) -> Solution {
    sol("probe".into(), vec![(n + 1) as f64; m.max(2)])
}

/// `n` mutually non-dominated solutions `(i, n - i, 0, ...)`.
pub fn gen_antichain(n: usize, m: usize) -> Result<Vec<Solution>> {
    check_m(m)?;
    Ok((1..=n)
        .map(|i| sol(format!("s{i}"), pad(vec![i as f64, (n - i) as f64], m)))
        .collect())
}

/// Non-dominated with every member of `gen_antichain(n, m)`.
pub fn antichain_free_probe(n: usize, m: usize) -> Solution {
    sol("probe".into(), pad(vec![0.5, n as f64], m))
}

/// Dominated by the first member of `gen_antichain(n, m)`.
pub fn antichain_dominated_probe(n: usize, m: usize) -> Solution {
    sol("probe".into(), pad(vec![1.0, n as f64], m))
}

/// `k` levels of `n / k` solutions each; every solution is dominated by
/// every solution on the level above.
pub fn gen_equal_fronts(n: usize, k: usize, m: usize) -> Result<Vec<Solution>> {
    check_m(m)?;
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::InvalidParameters(format!(
            "{k} fronts do not divide {n} solutions"
        )));
    }
    let q = n / k;
    let mut out = Vec::with_capacity(n);
    for f in 0..k {
        for j in 0..q {
            let base = (f * q) as f64;
            out.push(sol(
                format!("s{}", f * q + j + 1),
                pad(vec![base + j as f64, base + (q - 1 - j) as f64], m),
            ));
        }
    }
    Ok(out)
}

/// Two-level adversarial instance at the optimal split, with a probe that
/// dominates every member of `F_1` except the last, and whose displaced set
/// is non-dominated with all of `F_2`. Returned as the exact two fronts.
pub fn gen_worst_two_front(n: usize, m: usize) -> Result<(FrontSet, Solution)> {
    check_m(m)?;
    if n < 4 {
        return Err(Error::InvalidParameters(format!(
            "worst two-front instance needs N >= 4, got {n}"
        )));
    }
    let (n1, n2) = two_front_optimum(n);
    let a = n1 - 1;
    let big = (a + n2 + 2) as f64;
    let left = -((n2 + 1) as f64);

    let mut f1: Vec<Solution> = (1..=a)
        .map(|i| sol(format!("g{i}"), pad(vec![i as f64, (a + 1 - i) as f64], m)))
        .collect();
    f1.push(sol("u".into(), pad(vec![left, big], m)));
    let f2: Vec<Solution> = (1..=n2)
        .map(|j| {
            sol(
                format!("h{j}"),
                pad(vec![left + j as f64, big + (n2 + 1 - j) as f64], m),
            )
        })
        .collect();
    let probe = sol("probe".into(), pad(vec![0.0, 0.0], m));
    Ok((FrontSet::from_fronts(vec![f1, f2])?, probe))
}
