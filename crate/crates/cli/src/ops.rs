//! The operations behind each subcommand. Reports are plain data so that the
//! binary can render them as text or JSON; they never contain timings.

use std::collections::HashMap;
use std::fmt;

use anyhow::{anyhow, bail, Result};
use ndlu_core::analysis::{
    antichain_dominated_probe, antichain_free_probe, chain_dominated_probe, gen_antichain,
    gen_chain, gen_equal_fronts, gen_worst_two_front, max_comp_left_tree, max_comp_linear,
    max_comp_right_tree, FrontProfile,
};
use ndlu_core::dbst::deepest_fronts;
use ndlu_core::{
    full_sort, full_sort_counted, same_partition, validate, Approach, Counter, FrontSet, Position,
    Solution, SolutionId, TreeVariant,
};
use serde::Serialize;

use crate::workload::{Step, Workload};

fn fmt_sizes(sizes: &[usize]) -> String {
    let parts: Vec<String> = sizes.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn check_against_oracle(fs: &FrontSet) -> Result<(), String> {
    let violations = validate(fs);
    if let Some(v) = violations.first() {
        return Err(v.to_string());
    }
    let pop: Vec<Solution> = fs.iter().cloned().collect();
    let expected = full_sort(&pop).map_err(|e| e.to_string())?;
    if !same_partition(fs, &expected) {
        return Err("partition differs from a full re-sort".into());
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct SortReport {
    pub approach: String,
    pub n: usize,
    pub fronts: usize,
    pub sizes: Vec<usize>,
    pub comparisons: u64,
    pub oracle_comparisons: u64,
    /// `None` unless checking was requested.
    pub check: Option<bool>,
    pub failure: Option<String>,
}

impl SortReport {
    pub fn passed(&self) -> bool {
        self.check != Some(false)
    }
}

impl fmt::Display for SortReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "approach: {}", self.approach)?;
        writeln!(f, "solutions: {}", self.n)?;
        writeln!(f, "fronts: {} {}", self.fronts, fmt_sizes(&self.sizes))?;
        writeln!(f, "comparisons: {}", self.comparisons)?;
        writeln!(f, "full-sort comparisons: {}", self.oracle_comparisons)?;
        match (self.check, &self.failure) {
            (Some(true), _) => writeln!(f, "check: PASS"),
            (Some(false), Some(why)) => writeln!(f, "check: FAIL ({why})"),
            (Some(false), None) => writeln!(f, "check: FAIL"),
            (None, _) => Ok(()),
        }
    }
}

/// Inserts the stream one solution at a time, in arrival order.
pub fn sort_online(
    stream: &[Solution],
    approach: Approach,
    check: bool,
) -> Result<(FrontSet, SortReport)> {
    let mut fs = FrontSet::new();
    let mut c = Counter::new();
    let mut failure = None;
    for sol in stream {
        approach.insert(&mut fs, sol.clone(), &mut c)?;
        if check && failure.is_none() {
            if let Some(v) = validate(&fs).first() {
                failure = Some(format!("after inserting `{}`: {v}", sol.id()));
            }
        }
    }
    let (expected, oracle_comparisons) = full_sort_counted(stream)?;
    if check && failure.is_none() && !same_partition(&fs, &expected) {
        failure = Some("final partition differs from a full re-sort".into());
    }
    let report = SortReport {
        approach: approach.name().into(),
        n: fs.len(),
        fronts: fs.num_fronts(),
        sizes: fs.sizes(),
        comparisons: c.get(),
        oracle_comparisons,
        check: check.then_some(failure.is_none()),
        failure,
    };
    Ok((fs, report))
}

// uncounted; only for the report
fn position_of(fs: &FrontSet, id: &SolutionId) -> Option<Position> {
    fs.fronts().iter().enumerate().find_map(|(k, f)| {
        f.iter().position(|s| s.id() == id).map(|j| Position {
            front: k + 1,
            index: j + 1,
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub step: usize,
    pub op: String,
    pub id: String,
    pub comparisons: u64,
    /// Level for inserts, `(front,index)` for lookups and deletes.
    pub result: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub approach: String,
    pub steps: Vec<StepReport>,
    pub total_comparisons: u64,
    pub fronts: usize,
    pub sizes: Vec<usize>,
    pub check: Option<bool>,
    pub failure: Option<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.check != Some(false)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "approach: {}", self.approach)?;
        for s in &self.steps {
            writeln!(
                f,
                "{:>6} {:<6} {:<12} {:>8}  {}",
                s.step, s.op, s.id, s.comparisons, s.result
            )?;
        }
        writeln!(f, "steps: {}", self.steps.len())?;
        writeln!(f, "total comparisons: {}", self.total_comparisons)?;
        writeln!(f, "fronts: {} {}", self.fronts, fmt_sizes(&self.sizes))?;
        match (self.check, &self.failure) {
            (Some(true), _) => writeln!(f, "check: PASS"),
            (Some(false), Some(why)) => writeln!(f, "check: FAIL ({why})"),
            (Some(false), None) => writeln!(f, "check: FAIL"),
            (None, _) => Ok(()),
        }
    }
}

/// Executes the workload on `fs`. With `check`, the set is validated and
/// compared with a full re-sort after every mutation.
pub fn run_workload(
    mut fs: FrontSet,
    workload: &Workload,
    approach: Approach,
    check: bool,
) -> Result<(FrontSet, RunReport)> {
    workload.check(&fs)?;
    let mut by_id: HashMap<SolutionId, Solution> =
        fs.iter().map(|s| (s.id().clone(), s.clone())).collect();
    let mut c = Counter::new();
    let mut steps = Vec::with_capacity(workload.steps.len());
    let mut total = 0;
    let mut failure: Option<String> = None;

    for (i, step) in workload.steps.iter().enumerate() {
        let result = match step {
            Step::Insert(sol) => {
                by_id.insert(sol.id().clone(), sol.clone());
                format!("level {}", approach.insert(&mut fs, sol.clone(), &mut c)?)
            }
            Step::Delete(id) => {
                let sol = by_id
                    .remove(id)
                    .ok_or_else(|| anyhow!("`{id}` is not present"))?;
                let pos = position_of(&fs, id);
                approach.delete(&mut fs, &sol, &mut c)?;
                pos.map_or("removed".into(), |p| format!("removed {p}"))
            }
            Step::Lookup(id) => {
                let sol = &by_id[id];
                match approach.lookup(&fs, sol, &mut c) {
                    Some(p) => p.to_string(),
                    None => {
                        if check && failure.is_none() {
                            failure =
                                Some(format!("step {}: lookup of `{id}` found nothing", i + 1));
                        }
                        "not-found".into()
                    }
                }
            }
        };
        let comparisons = c.take();
        total += comparisons;
        if check && failure.is_none() && !matches!(step, Step::Lookup(_)) {
            if let Err(why) = check_against_oracle(&fs) {
                failure = Some(format!("step {}: {why}", i + 1));
            }
        }
        steps.push(StepReport {
            step: i + 1,
            op: step.op().into(),
            id: step.id().to_string(),
            comparisons,
            result,
        });
    }

    let report = RunReport {
        approach: approach.name().into(),
        steps,
        total_comparisons: total,
        fronts: fs.num_fronts(),
        sizes: fs.sizes(),
        check: check.then_some(failure.is_none()),
        failure,
    };
    Ok((fs, report))
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub solutions: usize,
    pub fronts: usize,
    pub violations: Vec<String>,
    pub matches_full_sort: bool,
    pub pass: bool,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "solutions: {}", self.solutions)?;
        writeln!(f, "fronts: {}", self.fronts)?;
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        writeln!(
            f,
            "matches full sort: {}",
            if self.matches_full_sort { "yes" } else { "no" }
        )?;
        writeln!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

pub fn verify(fs: &FrontSet) -> Result<VerifyReport> {
    let violations: Vec<String> = validate(fs).iter().map(ToString::to_string).collect();
    let pop: Vec<Solution> = fs.iter().cloned().collect();
    let matches_full_sort = same_partition(fs, &full_sort(&pop)?);
    Ok(VerifyReport {
        solutions: fs.len(),
        fronts: fs.num_fronts(),
        pass: violations.is_empty() && matches_full_sort,
        violations,
        matches_full_sort,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    Chain,
    Antichain,
    EqualFronts,
    WorstTwoFront,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Chain => "chain",
            Scenario::Antichain => "antichain",
            Scenario::EqualFronts => "equal-fronts",
            Scenario::WorstTwoFront => "worst-two-front",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub scenario: String,
    pub approach: String,
    pub operation: String,
    pub n: usize,
    pub k: usize,
    pub measured: u64,
    pub formula: u64,
    pub pass: bool,
}

pub fn render_bench(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<16} {:<8} {:<24} {:>6} {:>6} {:>9} {:>9}  {}\n",
        "scenario", "approach", "operation", "N", "K", "measured", "formula", "result"
    );
    for r in rows {
        out.push_str(&format!(
            "{:<16} {:<8} {:<24} {:>6} {:>6} {:>9} {:>9}  {}\n",
            r.scenario,
            r.approach,
            r.operation,
            r.n,
            r.k,
            r.measured,
            r.formula,
            if r.pass { "PASS" } else { "FAIL" }
        ));
    }
    out
}

fn floor_log2(x: usize) -> u64 {
    x.ilog2() as u64
}

/// Measured comparison counts of a scenario next to their closed forms.
pub fn bench(
    scenario: Scenario,
    n: usize,
    k: Option<usize>,
    m: usize,
    approaches: &[Approach],
) -> Result<Vec<BenchRow>> {
    if n == 0 {
        bail!("N must be positive");
    }
    let mut rows = Vec::new();
    let mut row = |approach: Approach, operation: &str, k: usize, measured: u64, formula: u64| {
        rows.push(BenchRow {
            scenario: scenario.name().into(),
            approach: approach.name().into(),
            operation: operation.into(),
            n,
            k,
            measured,
            formula,
            pass: measured == formula,
        });
    };

    match scenario {
        Scenario::Chain => {
            let fs = full_sort(&gen_chain(n, m)?)?;
            let probe = chain_dominated_probe(n, m);
            for &a in approaches {
                let mut c = Counter::new();
                a.insert(&mut fs.clone(), probe.clone(), &mut c)?;
                let formula = match a {
                    Approach::Linear => n as u64,
                    Approach::Tree(_) => floor_log2(n) + 1,
                };
                row(a, "insert dominated probe", n, c.get(), formula);
            }
        }
        Scenario::Antichain => {
            let fs = full_sort(&gen_antichain(n, m)?)?;
            for &a in approaches {
                let mut c = Counter::new();
                a.insert(&mut fs.clone(), antichain_free_probe(n, m), &mut c)?;
                row(a, "insert free probe", 1, c.take(), n as u64);
                a.insert(&mut fs.clone(), antichain_dominated_probe(n, m), &mut c)?;
                row(a, "insert dominated probe", 1, c.take(), 1);
            }
        }
        Scenario::EqualFronts => {
            let k = k.ok_or_else(|| anyhow!("equal-fronts needs --k"))?;
            let fs = full_sort(&gen_equal_fronts(n, k, m)?)?;
            let per = (n / k) as u64;
            for &a in approaches {
                let (front, formula) = match a {
                    Approach::Linear => (k, k as u64 + per - 1),
                    Approach::Tree(v) => (deepest_fronts(k, v)[0], floor_log2(k) + per),
                };
                let target = fs
                    .front(front)
                    .and_then(|f| f.last())
                    .expect("front exists")
                    .clone();
                let mut c = Counter::new();
                if a.lookup(&fs, &target, &mut c).is_none() {
                    bail!("lookup of `{}` failed", target.id());
                }
                row(a, &format!("lookup last of F_{front}"), k, c.get(), formula);
            }
        }
        Scenario::WorstTwoFront => {
            let (fs, probe) = gen_worst_two_front(n, m)?;
            let p = FrontProfile::of(&fs)?;
            for &a in approaches {
                let formula = match a {
                    Approach::Linear => max_comp_linear(&p),
                    Approach::Tree(TreeVariant::LeftBalanced) => max_comp_left_tree(&p),
                    Approach::Tree(TreeVariant::RightBalanced) => max_comp_right_tree(&p),
                };
                let mut c = Counter::new();
                a.insert(&mut fs.clone(), probe.clone(), &mut c)?;
                row(a, "insert worst-case probe", 2, c.get(), formula);
            }
        }
    }
    Ok(rows)
}
