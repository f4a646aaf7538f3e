//! The ordered partition of a population into non-domination levels.

use std::collections::HashSet;
use std::fmt;

use crate::dominance::{dominates, Solution, SolutionId};
use crate::error::{Error, Result};

pub type Front = Vec<Solution>;

/// 1-based location of a stored solution: `front`-th front, `index`-th member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Position {
    pub front: usize,
    pub index: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.front, self.index)
    }
}

/// Fronts `F_1..F_K` in decreasing order of dominance.
///
/// Structural invariants (consistent dimension, unique ids) are enforced by
/// every constructor and mutator. Level invariants are established by the
/// update algorithms and can be checked with [`validate`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FrontSet {
    pub(crate) fronts: Vec<Front>,
    m: Option<usize>,
    pub(crate) ids: HashSet<SolutionId>,
}

impl FrontSet {
    pub fn new() -> Self {
        FrontSet::default()
    }

    /// An empty set that only accepts `m`-objective solutions.
    pub fn with_objectives(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::TooFewObjectives(m));
        }
        Ok(FrontSet {
            m: Some(m),
            ..FrontSet::default()
        })
    }

    /// Builds a set from explicit fronts without checking level invariants.
    /// Empty fronts are kept as given so that [`validate`] can report them.
    pub fn from_fronts(fronts: Vec<Front>) -> Result<Self> {
        let mut fs = FrontSet::new();
        for front in &fronts {
            for sol in front {
                fs.admit(sol)?;
            }
        }
        fs.fronts = fronts;
        Ok(fs)
    }

    /// Objective count, once known.
    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn fronts(&self) -> &[Front] {
        &self.fronts
    }

    /// Front `k` (1-based).
    pub fn front(&self, k: usize) -> Option<&Front> {
        k.checked_sub(1).and_then(|i| self.fronts.get(i))
    }

    pub fn num_fronts(&self) -> usize {
        self.fronts.len()
    }

    /// Total number of stored solutions.
    pub fn len(&self) -> usize {
        self.fronts.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.iter().all(Vec::is_empty)
    }

    pub fn contains(&self, id: &SolutionId) -> bool {
        self.ids.contains(id)
    }

    pub fn get(&self, pos: Position) -> Option<&Solution> {
        self.front(pos.front)?.get(pos.index.checked_sub(1)?)
    }

    /// Front sizes `(n_1, ..., n_K)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.fronts.iter().map(Vec::len).collect()
    }

    /// All solutions in rank order, front by front.
    pub fn iter(&self) -> impl Iterator<Item = &Solution> {
        self.fronts.iter().flatten()
    }

    /// Consumes the set, returning the solutions in rank order.
    pub fn into_solutions(self) -> Vec<Solution> {
        self.fronts.into_iter().flatten().collect()
    }

    /// Level (1-based) of the solution with the given id. Uncounted; for
    /// reporting and tests, not for the measured lookup paths.
    pub fn level_of(&self, id: &SolutionId) -> Option<usize> {
        self.fronts
            .iter()
            .position(|f| f.iter().any(|s| s.id() == id))
            .map(|i| i + 1)
    }

    /// Checks dimension and id uniqueness for a solution about to be stored,
    /// and records its id.
    pub(crate) fn admit(&mut self, sol: &Solution) -> Result<()> {
        match self.m {
            Some(m) if m != sol.m() => {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: sol.m(),
                })
            }
            _ => {}
        }
        if self.ids.contains(sol.id()) {
            return Err(Error::DuplicateId(sol.id().clone()));
        }
        self.m = Some(sol.m());
        self.ids.insert(sol.id().clone());
        Ok(())
    }

    pub(crate) fn check_insertable(&self, sol: &Solution) -> Result<()> {
        if let Some(m) = self.m {
            if m != sol.m() {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: sol.m(),
                });
            }
        }
        if self.ids.contains(sol.id()) {
            return Err(Error::DuplicateId(sol.id().clone()));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn debug_check_count(&self) {
        debug_assert_eq!(
            self.len(),
            self.ids.len(),
            "a solution is stored in two places or lost"
        );
    }
}

/// One broken [`FrontSet`] invariant.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    EmptyFront {
        front: usize,
    },
    IntraFrontDominance {
        front: usize,
        dominating: SolutionId,
        dominated: SolutionId,
    },
    NotDominatedByPrevious {
        front: usize,
        id: SolutionId,
    },
    DuplicateId {
        id: SolutionId,
    },
    DimensionMismatch {
        id: SolutionId,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyFront { front } => write!(f, "F_{front} is empty"),
            Violation::IntraFrontDominance {
                front,
                dominating,
                dominated,
            } => {
                write!(
                    f,
                    "intra-front dominance in F_{front}: `{dominating}` dominates `{dominated}`"
                )
            }
            Violation::NotDominatedByPrevious { front, id } => {
                write!(
                    f,
                    "`{id}` in F_{front} is not dominated by any solution of F_{}",
                    front - 1
                )
            }
            Violation::DuplicateId { id } => write!(f, "id `{id}` stored more than once"),
            Violation::DimensionMismatch {
                id,
                expected,
                found,
            } => {
                write!(f, "`{id}` has {found} objectives, expected {expected}")
            }
        }
    }
}

/// Lists every violated level invariant; empty iff `fs` is a valid
/// non-domination level partition. Does not touch any counter.
pub fn validate(fs: &FrontSet) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let m = fs.iter().next().map(Solution::m);

    for (k, front) in fs.fronts.iter().enumerate() {
        let level = k + 1;
        if front.is_empty() {
            out.push(Violation::EmptyFront { front: level });
        }
        for sol in front {
            if !seen.insert(sol.id()) {
                out.push(Violation::DuplicateId {
                    id: sol.id().clone(),
                });
            }
            if let Some(m) = m {
                if sol.m() != m {
                    out.push(Violation::DimensionMismatch {
                        id: sol.id().clone(),
                        expected: m,
                        found: sol.m(),
                    });
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    for (k, front) in fs.fronts.iter().enumerate() {
        let level = k + 1;
        for (i, a) in front.iter().enumerate() {
            for b in &front[i + 1..] {
                if dominates(a.objectives(), b.objectives()) {
                    out.push(Violation::IntraFrontDominance {
                        front: level,
                        dominating: a.id().clone(),
                        dominated: b.id().clone(),
                    });
                } else if dominates(b.objectives(), a.objectives()) {
                    out.push(Violation::IntraFrontDominance {
                        front: level,
                        dominating: b.id().clone(),
                        dominated: a.id().clone(),
                    });
                }
            }
        }
        if k > 0 {
            let prev = &fs.fronts[k - 1];
            for sol in front {
                if !prev
                    .iter()
                    .any(|p| dominates(p.objectives(), sol.objectives()))
                {
                    out.push(Violation::NotDominatedByPrevious {
                        front: level,
                        id: sol.id().clone(),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(id: &str, v: &[f64]) -> Solution {
        Solution::new(id, v.to_vec()).unwrap()
    }

    /// 12 solutions in fronts of sizes 1, 2, 4, 4, 1.
    pub(crate) fn twelve_in_five_fronts() -> Vec<Vec<Solution>> {
        vec![
            vec![s("p1", &[0., 0.])],
            vec![s("p2", &[2., 3.]), s("p3", &[3., 2.])],
            vec![
                s("p4", &[4., 7.]),
                s("p5", &[5., 6.]),
                s("p6", &[6., 5.]),
                s("p7", &[7., 4.]),
            ],
            vec![
                s("p8", &[8., 11.]),
                s("p9", &[9., 10.]),
                s("p10", &[10., 9.]),
                s("p11", &[11., 8.]),
            ],
            vec![s("p12", &[12., 12.])],
        ]
    }

    #[test]
    fn twelve_in_five_fronts_is_valid() {
        let fs = FrontSet::from_fronts(twelve_in_five_fronts()).unwrap();
        assert!(validate(&fs).is_empty());
        assert_eq!(fs.sizes(), vec![1, 2, 4, 4, 1]);
        assert_eq!(fs.len(), 12);
    }

    #[test]
    fn intra_front_dominance_reported() {
        let fs = FrontSet::from_fronts(vec![vec![s("a", &[1., 1.]), s("b", &[2., 2.])]]).unwrap();
        let v = validate(&fs);
        assert_eq!(v.len(), 1);
        assert!(matches!(
            &v[0],
            Violation::IntraFrontDominance { front: 1, .. }
        ));
    }

    #[test]
    fn misordered_fronts_reported() {
        let fs =
            FrontSet::from_fronts(vec![vec![s("a", &[5., 5.])], vec![s("b", &[1., 1.])]]).unwrap();
        let v = validate(&fs);
        assert_eq!(
            v,
            vec![Violation::NotDominatedByPrevious {
                front: 2,
                id: "b".into()
            }]
        );
    }

    #[test]
    fn empty_front_reported() {
        let fs = FrontSet::from_fronts(vec![vec![s("a", &[1., 1.])], vec![]]).unwrap();
        assert_eq!(validate(&fs), vec![Violation::EmptyFront { front: 2 }]);
    }

    #[test]
    fn from_fronts_rejects_structural_errors() {
        let dup = FrontSet::from_fronts(vec![vec![s("a", &[1., 2.])], vec![s("a", &[2., 3.])]]);
        assert_eq!(dup.unwrap_err(), Error::DuplicateId("a".into()));
        let dims = FrontSet::from_fronts(vec![vec![s("a", &[1., 2.]), s("b", &[2., 1., 0.])]]);
        assert!(matches!(dims, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn positions_are_one_based() {
        let fs = FrontSet::from_fronts(twelve_in_five_fronts()).unwrap();
        assert_eq!(
            fs.get(Position { front: 3, index: 2 })
                .unwrap()
                .id()
                .as_str(),
            "p5"
        );
        assert!(fs.get(Position { front: 0, index: 1 }).is_none());
        assert_eq!(fs.level_of(&"p12".into()), Some(5));
    }
}
