//! Solutions, the Pareto-dominance relation (minimization) and the
//! comparison counter every update algorithm reports through.

use std::fmt;

use crate::error::{Error, Result};

/// Opaque, stable identifier of a solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionId(String);

impl SolutionId {
    pub fn new(id: impl Into<String>) -> Self {
        SolutionId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SolutionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for SolutionId {
    fn from(s: &str) -> Self {
        SolutionId(s.to_owned())
    }
}

impl From<String> for SolutionId {
    fn from(s: String) -> Self {
        SolutionId(s)
    }
}

/// One point in objective space. All objectives are minimized.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    id: SolutionId,
    objectives: Vec<f64>,
}

impl Solution {
    /// Builds a solution, rejecting fewer than two objectives and non-finite
    /// values. Negative zero is stored as positive zero so that exact
    /// equality of stored values is the same as numeric equality.
    pub fn new(id: impl Into<SolutionId>, objectives: Vec<f64>) -> Result<Self> {
        let id = id.into();
        if objectives.len() < 2 {
            return Err(Error::TooFewObjectives(objectives.len()));
        }
        let mut objectives = objectives;
        for (index, v) in objectives.iter_mut().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { id, index });
            }
            if *v == 0.0 {
                *v = 0.0;
            }
        }
        Ok(Solution { id, objectives })
    }

    pub fn id(&self) -> &SolutionId {
        &self.id
    }

    pub fn objectives(&self) -> &[f64] {
        &self.objectives
    }

    /// Number of objectives.
    pub fn m(&self) -> usize {
        self.objectives.len()
    }
}

/// Three-valued dominance nature used by the insertion and deletion paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nature {
    /// The first solution dominates the second (`1`).
    Dominates,
    /// The first solution is dominated by the second (`-1`).
    Dominated,
    /// Neither dominates the other, identical vectors included (`0`).
    NonDominated,
}

impl Nature {
    pub fn as_i8(self) -> i8 {
        match self {
            Nature::Dominates => 1,
            Nature::Dominated => -1,
            Nature::NonDominated => 0,
        }
    }

    pub fn flip(self) -> Nature {
        match self {
            Nature::Dominates => Nature::Dominated,
            Nature::Dominated => Nature::Dominates,
            Nature::NonDominated => Nature::NonDominated,
        }
    }
}

/// Four-valued relation used by lookup, distinguishing identical vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomRelation {
    Dominates,
    DominatedBy,
    NonDominated,
    Identical,
}

impl DomRelation {
    /// Wire code: `1`, `-1`, `0`, `2`.
    pub fn code(self) -> i8 {
        match self {
            DomRelation::Dominates => 1,
            DomRelation::DominatedBy => -1,
            DomRelation::NonDominated => 0,
            DomRelation::Identical => 2,
        }
    }
}

/// Tally of solution-pair dominance comparisons.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counter {
    pair_compares: u64,
}

impl Counter {
    pub fn new() -> Self {
        Counter::default()
    }

    pub fn get(&self) -> u64 {
        self.pair_compares
    }

    pub fn reset(&mut self) {
        self.pair_compares = 0;
    }

    /// Returns the current value and resets to zero.
    pub fn take(&mut self) -> u64 {
        std::mem::take(&mut self.pair_compares)
    }

    #[inline]
    pub(crate) fn tick(&mut self) {
        self.pair_compares += 1;
    }
}

fn check_dims(a: &Solution, b: &Solution) -> Result<()> {
    if a.m() != b.m() {
        return Err(Error::DimensionMismatch {
            expected: a.m(),
            found: b.m(),
        });
    }
    Ok(())
}

/// Comparison flags over the objective vectors: (some a_i < b_i, some a_i > b_i).
#[inline]
fn flags(a: &[f64], b: &[f64]) -> (bool, bool) {
    let mut better = false;
    let mut worse = false;
    for (x, y) in a.iter().zip(b) {
        if x < y {
            better = true;
        } else if x > y {
            worse = true;
        }
    }
    (better, worse)
}

/// Uncounted dominance test on raw vectors: `a` dominates `b`.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    matches!(flags(a, b), (true, false))
}

#[inline]
pub(crate) fn nature(a: &Solution, b: &Solution, c: &mut Counter) -> Nature {
    debug_assert_eq!(a.m(), b.m());
    c.tick();
    match flags(&a.objectives, &b.objectives) {
        (true, false) => Nature::Dominates,
        (false, true) => Nature::Dominated,
        _ => Nature::NonDominated,
    }
}

#[inline]
pub(crate) fn relation(a: &Solution, b: &Solution, c: &mut Counter) -> DomRelation {
    debug_assert_eq!(a.m(), b.m());
    c.tick();
    let mut better = false;
    let mut worse = false;
    let mut equal = 0;
    for (x, y) in a.objectives.iter().zip(&b.objectives) {
        if x < y {
            better = true;
        } else if x > y {
            worse = true;
        } else {
            equal += 1;
        }
    }
    match (better, worse) {
        (true, false) => DomRelation::Dominates,
        (false, true) => DomRelation::DominatedBy,
        _ if equal == a.m() => DomRelation::Identical,
        _ => DomRelation::NonDominated,
    }
}

/// Three-valued nature of `a` with respect to `b`. Counts one comparison.
pub fn dom_nature(a: &Solution, b: &Solution, c: &mut Counter) -> Result<Nature> {
    check_dims(a, b)?;
    Ok(nature(a, b, c))
}

/// Four-valued relation of `a` with respect to `b`. Counts one comparison.
pub fn check_dom(a: &Solution, b: &Solution, c: &mut Counter) -> Result<DomRelation> {
    check_dims(a, b)?;
    Ok(relation(a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(id: &str, v: &[f64]) -> Solution {
        Solution::new(id, v.to_vec()).unwrap()
    }

    #[test]
    fn nature_examples() {
        let mut c = Counter::new();
        assert_eq!(
            dom_nature(&s("a", &[1., 1.]), &s("b", &[2., 2.]), &mut c).unwrap(),
            Nature::Dominates
        );
        assert_eq!(
            dom_nature(&s("a", &[1., 3.]), &s("b", &[2., 1.]), &mut c).unwrap(),
            Nature::NonDominated
        );
        assert_eq!(
            dom_nature(&s("a", &[5., 5.]), &s("b", &[5., 5.]), &mut c).unwrap(),
            Nature::NonDominated
        );
        assert_eq!(c.get(), 3);
    }

    #[test]
    fn relation_examples() {
        let mut c = Counter::new();
        assert_eq!(
            check_dom(&s("a", &[1., 2.]), &s("b", &[1., 2.]), &mut c).unwrap(),
            DomRelation::Identical
        );
        assert_eq!(
            check_dom(&s("a", &[1., 2.]), &s("b", &[3., 2.]), &mut c).unwrap(),
            DomRelation::Dominates
        );
        assert_eq!(
            check_dom(&s("a", &[2., 1.]), &s("b", &[1., 2.]), &mut c).unwrap(),
            DomRelation::NonDominated
        );
        assert_eq!(
            check_dom(&s("a", &[3., 2.]), &s("b", &[1., 2.]), &mut c).unwrap(),
            DomRelation::DominatedBy
        );
        assert_eq!(c.get(), 4);
    }

    #[test]
    fn dimension_mismatch() {
        let mut c = Counter::new();
        let err = dom_nature(&s("a", &[1., 2.]), &s("b", &[1., 2., 3.]), &mut c).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
        assert!(check_dom(&s("a", &[1., 2., 3.]), &s("b", &[1., 2.]), &mut c).is_err());
        assert_eq!(c.get(), 0);
    }

    #[test]
    fn construction_rejects_bad_vectors() {
        assert_eq!(
            Solution::new("x", vec![1.0]).unwrap_err(),
            Error::TooFewObjectives(1)
        );
        assert!(matches!(
            Solution::new("x", vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1, .. })
        ));
        assert!(Solution::new("x", vec![f64::INFINITY, 0.0]).is_err());
    }

    #[test]
    fn negative_zero_is_identical_to_zero() {
        let mut c = Counter::new();
        let a = s("a", &[-0.0, 1.0]);
        assert!(a.objectives()[0].is_sign_positive());
        assert_eq!(
            check_dom(&a, &s("b", &[0.0, 1.0]), &mut c).unwrap(),
            DomRelation::Identical
        );
    }

    #[test]
    fn counter_take_resets() {
        let mut c = Counter::new();
        c.tick();
        c.tick();
        assert_eq!(c.take(), 2);
        assert_eq!(c.get(), 0);
    }
}
