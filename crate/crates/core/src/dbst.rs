//! Dominance binary search over the ordered list of fronts.
//!
//! Fronts are nodes of an implicit binary tree: the front at the midpoint of
//! a rank range is the root of that range, better-ranked fronts form its left
//! subtree and worse-ranked fronts its right subtree. Nothing is allocated;
//! navigation is index bisection over `FrontSet::fronts`.

use std::fmt;

use crate::dominance::{nature, relation, Counter, DomRelation, Nature, Solution};
use crate::error::{Error, Result};
use crate::front_set::{FrontSet, Position};
use crate::linear::{absorb_dominated, insert_linear};

/// Midpoint rule used to bisect a front range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeVariant {
    /// `mid = ceil((lo + hi) / 2)`: left subtrees are filled first.
    LeftBalanced,
    /// `mid = floor((lo + hi) / 2)`: right subtrees are filled first.
    RightBalanced,
}

impl TreeVariant {
    pub fn mid(self, lo: usize, hi: usize) -> usize {
        match self {
            TreeVariant::LeftBalanced => (lo + hi).div_ceil(2),
            TreeVariant::RightBalanced => (lo + hi) / 2,
        }
    }
}

/// One probe of the navigation trace. `front` and `solution` are 1-based;
/// `solution == 0` means `new` was non-dominated with the whole front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CmpRecord {
    pub dom: Nature,
    pub front: usize,
    pub solution: usize,
}

impl fmt::Display for CmpRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{},{}>", self.dom.as_i8(), self.front, self.solution)
    }
}

/// Largest possible trace length for `k` fronts: `floor(log2 k) + 1`.
pub fn max_trace_len(k: usize) -> usize {
    if k == 0 {
        0
    } else {
        k.ilog2() as usize + 1
    }
}

/// Binary search for the level of `new`, recording one [`CmpRecord`] per
/// probed front.
pub fn navigate(
    fs: &FrontSet,
    new: &Solution,
    variant: TreeVariant,
    c: &mut Counter,
) -> Result<Vec<CmpRecord>> {
    let k = fs.num_fronts();
    if k < 2 {
        return Err(Error::TooFewFronts(k));
    }
    if let Some(m) = fs.m() {
        if m != new.m() {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: new.m(),
            });
        }
    }

    let mut trace = Vec::with_capacity(max_trace_len(k));
    let (mut lo, mut hi) = (1, k);
    loop {
        let mid = variant.mid(lo, hi);
        let mut record = CmpRecord {
            dom: Nature::NonDominated,
            front: mid,
            solution: 0,
        };
        for (i, sol) in fs.fronts[mid - 1].iter().enumerate() {
            match nature(new, sol, c) {
                Nature::NonDominated => {}
                dom => {
                    record = CmpRecord {
                        dom,
                        front: mid,
                        solution: i + 1,
                    };
                    break;
                }
            }
        }
        trace.push(record);

        if record.dom == Nature::Dominated {
            if mid == hi {
                break;
            }
            lo = mid + 1;
        } else {
            if mid == lo {
                break;
            }
            hi = mid - 1;
        }
    }
    Ok(trace)
}

/// Inserts `new` using tree navigation. Returns the 1-based level `new`
/// ends up on. With fewer than two fronts this is [`insert_linear`].
pub fn insert_tree(
    fs: &mut FrontSet,
    new: Solution,
    variant: TreeVariant,
    c: &mut Counter,
) -> Result<usize> {
    if fs.num_fronts() < 2 {
        return insert_linear(fs, new, c);
    }
    fs.check_insertable(&new)?;
    let trace = navigate(fs, &new, variant, c)?;
    fs.admit(&new)?;

    let last = *trace.last().expect("navigation probes at least one front");
    let target = if last.dom != Nature::Dominated {
        Some(last)
    } else {
        // the trace ends in a run of dominated probes; the record just before
        // that run is the best front that does not dominate new
        trace
            .windows(2)
            .rev()
            .find(|w| w[0].dom != w[1].dom)
            .map(|w| w[0])
    };

    let level = match target {
        None => {
            debug_assert!(trace.iter().all(|r| r.dom == Nature::Dominated));
            fs.fronts.push(vec![new]);
            fs.fronts.len()
        }
        Some(rec) if rec.dom == Nature::NonDominated => {
            fs.fronts[rec.front - 1].push(new);
            rec.front
        }
        Some(rec) => {
            absorb_dominated(fs, rec.front - 1, rec.solution - 1, new, c);
            rec.front
        }
    };
    fs.debug_check_count();
    Ok(level)
}

/// Finds `sol` (same id, identical objectives) by binary search over fronts.
pub fn lookup_tree(
    fs: &FrontSet,
    sol: &Solution,
    variant: TreeVariant,
    c: &mut Counter,
) -> Option<Position> {
    let k = fs.num_fronts();
    if k == 0 || fs.m() != Some(sol.m()) {
        return None;
    }
    let (mut lo, mut hi) = (1, k);
    loop {
        let mid = variant.mid(lo, hi);
        let mut go_right = false;
        let mut twin = false;
        let mut decided = false;
        for (i, member) in fs.fronts[mid - 1].iter().enumerate() {
            match relation(sol, member, c) {
                DomRelation::Identical if member.id() == sol.id() => {
                    return Some(Position {
                        front: mid,
                        index: i + 1,
                    });
                }
                DomRelation::Identical => twin = true,
                DomRelation::Dominates => {
                    decided = true;
                    break;
                }
                DomRelation::DominatedBy => {
                    go_right = true;
                    decided = true;
                    break;
                }
                DomRelation::NonDominated => {}
            }
        }
        if twin && !decided {
            // sol's level is this front, and it is not stored here
            return None;
        }
        if go_right {
            if mid == hi {
                return None;
            }
            lo = mid + 1;
        } else {
            if mid == lo {
                return None;
            }
            hi = mid - 1;
        }
    }
}

/// Number of fronts probed by a successful search that ends at `front`
/// among `k` fronts.
pub fn probe_depth(k: usize, front: usize, variant: TreeVariant) -> Option<usize> {
    if front == 0 || front > k {
        return None;
    }
    let (mut lo, mut hi) = (1, k);
    let mut depth = 1;
    loop {
        let mid = variant.mid(lo, hi);
        if mid == front {
            return Some(depth);
        }
        if front < mid {
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
        depth += 1;
    }
}

/// Fronts at the maximal probe depth, ascending.
pub fn deepest_fronts(k: usize, variant: TreeVariant) -> Vec<usize> {
    let depths: Vec<usize> = (1..=k)
        .map(|f| probe_depth(k, f, variant).unwrap())
        .collect();
    let max = depths.iter().copied().max().unwrap_or(0);
    (1..=k).filter(|&f| depths[f - 1] == max).collect()
}
