//! Library side of the `ndlu` command-line tool.

pub mod io;
pub mod ops;
pub mod workload;

pub use ops::{
    bench, render_bench, run_workload, sort_online, verify, BenchRow, RunReport, Scenario,
    SortReport, VerifyReport,
};
pub use workload::{Step, Workload};
