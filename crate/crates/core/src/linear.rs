//! Linear-scan level update with O(1) auxiliary storage.
//!
//! A solution moved between fronts is always removed from its source before
//! it is stored elsewhere, so no solution is held in two places at once.
//! Internally fronts are addressed 0-based; every public index and
//! [`Position`] is 1-based.

use crate::dbst::{lookup_tree, TreeVariant};
use crate::dominance::{nature, relation, Counter, DomRelation, Nature, Solution};
use crate::error::{Error, Result};
use crate::front_set::{Front, FrontSet, Position};

/// How a solution to delete is located.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LookupStrategy {
    Sequential,
    Tree(TreeVariant),
}

/// Inserts `new`, scanning fronts from `F_1` downwards. Returns the 1-based
/// level `new` ends up on.
pub fn insert_linear(fs: &mut FrontSet, new: Solution, c: &mut Counter) -> Result<usize> {
    fs.check_insertable(&new)?;
    fs.admit(&new)?;

    for i in 0..fs.fronts.len() {
        let mut witness = None;
        let mut dominated = false;
        for (j, sol) in fs.fronts[i].iter().enumerate() {
            match nature(&new, sol, c) {
                Nature::Dominates => {
                    witness = Some(j);
                    break;
                }
                Nature::Dominated => {
                    dominated = true;
                    break;
                }
                Nature::NonDominated => {}
            }
        }
        if let Some(j) = witness {
            absorb_dominated(fs, i, j, new, c);
            fs.debug_check_count();
            return Ok(i + 1);
        }
        if !dominated {
            fs.fronts[i].push(new);
            fs.debug_check_count();
            return Ok(i + 1);
        }
    }
    fs.fronts.push(vec![new]);
    fs.debug_check_count();
    Ok(fs.fronts.len())
}

/// `new` dominates the member at `witness` of front `front` (both 0-based),
/// and every earlier member of that front is non-dominated with `new`.
/// Collects everything `new` dominates from that front, stores `new` there
/// and places the displaced solutions one level down.
pub(crate) fn absorb_dominated(
    fs: &mut FrontSet,
    front: usize,
    witness: usize,
    new: Solution,
    c: &mut Counter,
) {
    let mut displaced = vec![fs.fronts[front].remove(witness)];
    dom_set(&mut fs.fronts[front], &new, witness, &mut displaced, c);
    fs.fronts[front].push(new);

    if front + 1 == fs.fronts.len() {
        fs.fronts.push(displaced);
    } else if fs.fronts[front].len() == 1 {
        // new dominated the whole front: every lower front moves down a level
        fs.fronts.insert(front + 1, displaced);
    } else {
        cascade_insert(fs, displaced, front + 1, c);
    }
}

/// Moves every member of `front[start..]` (0-based offset) that `new`
/// dominates into `acc`, keeping the survivors in their original order.
pub fn dom_set(
    front: &mut Front,
    new: &Solution,
    start: usize,
    acc: &mut Vec<Solution>,
    c: &mut Counter,
) {
    if start >= front.len() {
        return;
    }
    let tail = front.split_off(start);
    for sol in tail {
        if nature(new, &sol, c) == Nature::Dominates {
            acc.push(sol);
        } else {
            front.push(sol);
        }
    }
}

/// Places a displaced set `s` at level `index` (1-based, `index >= 2`) and
/// cascades whatever it pushes out further down.
///
/// `s` must be non-empty, mutually non-dominated, and every member must be
/// dominated by some solution of `F_{index-1}`; these preconditions are
/// checked without touching the counter.
pub fn update_insert(
    fs: &mut FrontSet,
    s: Vec<Solution>,
    index: usize,
    c: &mut Counter,
) -> Result<()> {
    let k = fs.fronts.len();
    if index < 2 || index > k + 1 {
        return Err(Error::IndexOutOfRange { index, fronts: k });
    }
    if s.is_empty() {
        return Err(Error::Contract("displaced set is empty".into()));
    }
    for (i, a) in s.iter().enumerate() {
        fs.check_insertable(a)?;
        for b in &s[i + 1..] {
            if a.m() != b.m() {
                return Err(Error::DimensionMismatch {
                    expected: a.m(),
                    found: b.m(),
                });
            }
            if crate::dominance::dominates(a.objectives(), b.objectives())
                || crate::dominance::dominates(b.objectives(), a.objectives())
            {
                return Err(Error::Contract(format!(
                    "displaced set is internally dominated (`{}` vs `{}`)",
                    a.id(),
                    b.id()
                )));
            }
        }
        let prev = &fs.fronts[index - 2];
        if !prev
            .iter()
            .any(|p| crate::dominance::dominates(p.objectives(), a.objectives()))
        {
            return Err(Error::Contract(format!(
                "`{}` is not dominated by any solution of F_{}",
                a.id(),
                index - 1
            )));
        }
    }
    for sol in &s {
        fs.admit(sol)?;
    }
    cascade_insert(fs, s, index - 1, c);
    fs.debug_check_count();
    Ok(())
}

/// Iterative form of the insert cascade; `index` is 0-based.
fn cascade_insert(fs: &mut FrontSet, mut s: Vec<Solution>, mut index: usize, c: &mut Counter) {
    loop {
        if index == fs.fronts.len() {
            fs.fronts.push(s);
            return;
        }
        // only the displaced members are compared against, never the absorbed ones
        let l = s.len();
        let current = std::mem::take(&mut fs.fronts[index]);
        let mut pushed_out = Vec::new();
        for x in current {
            let mut count = 0;
            for member in &s[..l] {
                if nature(member, &x, c) == Nature::NonDominated {
                    count += 1;
                }
            }
            if count == l {
                s.push(x);
            } else {
                pushed_out.push(x);
            }
        }

        if s.len() == l {
            // nothing absorbed: s becomes a new level, the old one shifts down
            fs.fronts[index] = s;
            fs.fronts.insert(index + 1, pushed_out);
            return;
        }
        fs.fronts[index] = s;
        if pushed_out.is_empty() {
            return;
        }
        s = pushed_out;
        index += 1;
    }
}

/// Finds `sol` (same id, identical objectives) by scanning fronts in order.
///
/// A member that dominates `sol` ends the scan of that front. If `sol`
/// dominates a member, or is non-dominated with a whole front, it cannot be
/// stored at or below that front and the search stops.
pub fn locate_sequential(fs: &FrontSet, sol: &Solution, c: &mut Counter) -> Option<Position> {
    if fs.m() != Some(sol.m()) {
        return None;
    }
    for (i, front) in fs.fronts.iter().enumerate() {
        let mut below = false;
        let mut twin = false;
        for (j, member) in front.iter().enumerate() {
            match relation(sol, member, c) {
                DomRelation::Identical if member.id() == sol.id() => {
                    return Some(Position {
                        front: i + 1,
                        index: j + 1,
                    });
                }
                DomRelation::Identical => twin = true,
                DomRelation::DominatedBy => {
                    below = true;
                    break;
                }
                DomRelation::Dominates => return None,
                DomRelation::NonDominated => {}
            }
        }
        if !below || twin {
            return None;
        }
    }
    None
}

/// Removes `sol` and restores the level partition. Returns the removed
/// solution.
pub fn delete(
    fs: &mut FrontSet,
    sol: &Solution,
    strategy: LookupStrategy,
    c: &mut Counter,
) -> Result<Solution> {
    let pos = match strategy {
        LookupStrategy::Sequential => locate_sequential(fs, sol, c),
        LookupStrategy::Tree(variant) => lookup_tree(fs, sol, variant, c),
    }
    .ok_or_else(|| Error::NotFound(sol.id().clone()))?;

    let (i, j) = (pos.front - 1, pos.index - 1);
    let removed = fs.fronts[i].remove(j);
    fs.ids.remove(removed.id());

    if fs.fronts[i].is_empty() {
        // everything below was dominated by the removed solution at this
        // level, so each lower front moves up exactly one level
        fs.fronts.remove(i);
    } else if i + 1 < fs.fronts.len() {
        cascade_delete(fs, i, c);
    }
    fs.debug_check_count();
    Ok(removed)
}

/// Promotes solutions of `F_{index+1}` that are no longer dominated by
/// anything left in `F_index`, cascading downwards. `index` is 1-based and
/// must satisfy `1 <= index < K`.
pub fn update_delete(fs: &mut FrontSet, index: usize, c: &mut Counter) -> Result<()> {
    let k = fs.fronts.len();
    if index == 0 || index >= k {
        return Err(Error::IndexOutOfRange { index, fronts: k });
    }
    cascade_delete(fs, index - 1, c);
    Ok(())
}

fn cascade_delete(fs: &mut FrontSet, mut index: usize, c: &mut Counter) {
    while index + 1 < fs.fronts.len() {
        let l = fs.fronts[index].len();
        let next = std::mem::take(&mut fs.fronts[index + 1]);
        let mut stay = Vec::new();
        for x in next {
            let mut count = 0;
            for member in &fs.fronts[index][..l] {
                if nature(&x, member, c) == Nature::NonDominated {
                    count += 1;
                }
            }
            if count == l {
                fs.fronts[index].push(x);
            } else {
                stay.push(x);
            }
        }

        if stay.is_empty() {
            fs.fronts.remove(index + 1);
            return;
        }
        let promoted = fs.fronts[index].len() - l;
        fs.fronts[index + 1] = stay;
        if promoted == 0 {
            return;
        }
        index += 1;
    }
}
