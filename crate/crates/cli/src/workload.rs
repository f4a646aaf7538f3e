//! Workload files: one step per line, `insert,<id>,<obj...>`,
//! `delete,<id>` or `lookup,<id>`. Blank lines and `#` comments are ignored.

use std::collections::HashSet;
use std::path::Path;

use anyhow::{bail, Context, Result};
use ndlu_core::{FrontSet, Solution, SolutionId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    Insert(Solution),
    Delete(SolutionId),
    Lookup(SolutionId),
}

impl Step {
    pub fn op(&self) -> &'static str {
        match self {
            Step::Insert(_) => "insert",
            Step::Delete(_) => "delete",
            Step::Lookup(_) => "lookup",
        }
    }

    pub fn id(&self) -> &SolutionId {
        match self {
            Step::Insert(s) => s.id(),
            Step::Delete(id) | Step::Lookup(id) => id,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Workload {
    pub steps: Vec<Step>,
}

impl Workload {
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let step = match (fields[0], fields.len()) {
                ("insert", k) if k >= 2 => {
                    let obj = fields[2..]
                        .iter()
                        .map(|f| {
                            f.parse::<f64>()
                                .with_context(|| format!("line {}: bad number `{f}`", n + 1))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Step::Insert(
                        Solution::new(fields[1], obj).with_context(|| format!("line {}", n + 1))?,
                    )
                }
                ("delete", 2) => Step::Delete(fields[1].into()),
                ("lookup", 2) => Step::Lookup(fields[1].into()),
                _ => bail!(
                    "line {}: expected `insert,id,obj...`, `delete,id` or `lookup,id`",
                    n + 1
                ),
            };
            steps.push(step);
        }
        Ok(Workload { steps })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Workload::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            match step {
                Step::Insert(s) => {
                    out.push_str(&format!("insert,{}", s.id()));
                    for v in s.objectives() {
                        out.push_str(&format!(",{v}"));
                    }
                }
                Step::Delete(id) => out.push_str(&format!("delete,{id}")),
                Step::Lookup(id) => out.push_str(&format!("lookup,{id}")),
            }
            out.push('\n');
        }
        out
    }

    /// Checks that every referenced id is live at that point, inserts never
    /// reuse a live id, and all inserts have the dimension of `initial`.
    pub fn check(&self, initial: &FrontSet) -> Result<()> {
        let mut live: HashSet<SolutionId> = initial.iter().map(|s| s.id().clone()).collect();
        let mut m = initial.m();
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                Step::Insert(s) => {
                    if *m.get_or_insert(s.m()) != s.m() {
                        bail!(
                            "step {}: `{}` has {} objectives, expected {}",
                            i + 1,
                            s.id(),
                            s.m(),
                            m.unwrap()
                        );
                    }
                    if !live.insert(s.id().clone()) {
                        bail!("step {}: id `{}` is already present", i + 1, s.id());
                    }
                }
                Step::Delete(id) => {
                    if !live.remove(id) {
                        bail!("step {}: delete of `{id}`, which is not present", i + 1);
                    }
                }
                Step::Lookup(id) => {
                    if !live.contains(id) {
                        bail!("step {}: lookup of `{id}`, which is not present", i + 1);
                    }
                }
            }
        }
        Ok(())
    }

    /// A seeded random mix of inserts, deletes and lookups against the
    /// solutions of `initial` plus those it inserts.
    pub fn fuzz(seed: u64, steps: usize, m: usize, initial: &FrontSet) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = initial.m().unwrap_or(m);
        let mut live: Vec<SolutionId> = initial.iter().map(|s| s.id().clone()).collect();
        let mut next = 0usize;
        let mut out = Vec::with_capacity(steps);
        // half the seeds use a coarse grid so ties and duplicate vectors occur
        let grid = seed.is_multiple_of(2);
        for _ in 0..steps {
            let roll: f64 = rng.gen();
            if live.is_empty() || roll < 0.55 {
                let id = loop {
                    next += 1;
                    let id = SolutionId::new(format!("w{next}"));
                    if !initial.contains(&id) {
                        break id;
                    }
                };
                let obj = (0..m)
                    .map(|_| {
                        if grid {
                            rng.gen_range(0..6) as f64
                        } else {
                            rng.gen_range(0.0..100.0)
                        }
                    })
                    .collect();
                live.push(id.clone());
                out.push(Step::Insert(Solution::new(id, obj).expect("finite")));
            } else if roll < 0.85 {
                let id = live.swap_remove(rng.gen_range(0..live.len()));
                out.push(Step::Delete(id));
            } else {
                out.push(Step::Lookup(live[rng.gen_range(0..live.len())].clone()));
            }
        }
        Workload { steps: out }
    }
}
