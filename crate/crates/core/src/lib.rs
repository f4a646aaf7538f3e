//! Incremental maintenance of non-domination levels (Pareto fronts) under
//! insertion and deletion, with exact counting of dominance comparisons.
//!
//! Three insertion strategies share one [`FrontSet`] representation: a linear
//! scan over the fronts and two binary searches over front ranks that differ
//! only in how the midpoint is rounded. Deletion locates the solution either
//! sequentially or by the same binary search, then promotes solutions from
//! lower levels. Every dominance test goes through a [`Counter`].
//!
//! ```
//! use ndlu_core::{Approach, Counter, FrontSet, Solution, TreeVariant};
//!
//! let mut fs = FrontSet::new();
//! let mut c = Counter::new();
//! let approach = Approach::Tree(TreeVariant::LeftBalanced);
//! for (id, v) in [("a", [1.0, 4.0]), ("b", [2.0, 2.0]), ("c", [3.0, 3.0])] {
//!     approach.insert(&mut fs, Solution::new(id, v.to_vec()).unwrap(), &mut c).unwrap();
//! }
//! assert_eq!(fs.sizes(), vec![2, 1]);
//! ```

pub mod analysis;
pub mod dbst;
pub mod dominance;
pub mod error;
pub mod front_set;
pub mod linear;
pub mod oracle;

use std::fmt;

pub use dbst::{insert_tree, lookup_tree, navigate, CmpRecord, TreeVariant};
pub use dominance::{
    check_dom, dom_nature, dominates, Counter, DomRelation, Nature, Solution, SolutionId,
};
pub use error::{Error, Result};
pub use front_set::{validate, Front, FrontSet, Position, Violation};
pub use linear::{
    delete, dom_set, insert_linear, locate_sequential, update_delete, update_insert, LookupStrategy,
};
pub use oracle::{full_sort, full_sort_counted, same_partition};

/// Insertion strategy, also selecting the matching lookup for deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Approach {
    Linear,
    Tree(TreeVariant),
}

impl Approach {
    pub const ALL: [Approach; 3] = [
        Approach::Linear,
        Approach::Tree(TreeVariant::LeftBalanced),
        Approach::Tree(TreeVariant::RightBalanced),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Approach::Linear => "linear",
            Approach::Tree(TreeVariant::LeftBalanced) => "ltree",
            Approach::Tree(TreeVariant::RightBalanced) => "rtree",
        }
    }

    pub fn strategy(self) -> LookupStrategy {
        match self {
            Approach::Linear => LookupStrategy::Sequential,
            Approach::Tree(v) => LookupStrategy::Tree(v),
        }
    }

    /// Inserts `sol`, returning its 1-based level.
    pub fn insert(self, fs: &mut FrontSet, sol: Solution, c: &mut Counter) -> Result<usize> {
        match self {
            Approach::Linear => insert_linear(fs, sol, c),
            Approach::Tree(v) => insert_tree(fs, sol, v, c),
        }
    }

    pub fn lookup(self, fs: &FrontSet, sol: &Solution, c: &mut Counter) -> Option<Position> {
        match self {
            Approach::Linear => locate_sequential(fs, sol, c),
            Approach::Tree(v) => lookup_tree(fs, sol, v, c),
        }
    }

    pub fn delete(self, fs: &mut FrontSet, sol: &Solution, c: &mut Counter) -> Result<Solution> {
        delete(fs, sol, self.strategy(), c)
    }
}

impl fmt::Display for Approach {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
