//! Exact brute-force solvers used as ground truth in tests and via the CLI.
//!
//! Both oracles run a depth-first search over per-job choices with
//! branch-and-bound pruning and an explicit node budget, so a run either
//! returns a provably optimal solution or fails loudly with
//! `BudgetExceeded`. They are meant for small instances only.

use std::collections::BTreeMap;
use std::fmt;

use crate::model::{verify_fbap, verify_fsap, BandwidthAllocation, Block, ContiguousColoring, Instance};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Search aborted after visiting the given number of nodes.
    BudgetExceeded(u64),
    /// No allocation serves every mandatory minimum.
    Infeasible,
    /// The contiguous search tracks colors in a fixed-width mask.
    CapacityTooLarge(u64),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded(n) => write!(f, "search exceeded node budget of {n}"),
            OracleError::Infeasible => write!(f, "no allocation can serve every mandatory minimum"),
            OracleError::CapacityTooLarge(w) => {
                write!(f, "capacity {w} too large for the exhaustive search (max 128)")
            }
        }
    }
}

impl std::error::Error for OracleError {}

#[derive(Debug, Clone)]
pub struct OracleFbapResult {
    pub allocation: BandwidthAllocation,
    pub profit: u64,
    pub nodes: u64,
}

#[derive(Debug, Clone)]
pub struct OracleFsapResult {
    pub coloring: ContiguousColoring,
    pub profit: u64,
    pub nodes: u64,
}

struct SearchJob {
    id: u64,
    rmin: u64,
    rmax: u64,
    profit: u64,
    /// indices into the instance's event point list covered by this job
    points: Vec<usize>,
}

fn search_jobs(inst: &Instance) -> (Vec<SearchJob>, usize) {
    let points = inst.event_points();
    let mut jobs: Vec<SearchJob> = inst
        .jobs
        .iter()
        .map(|j| SearchJob {
            id: j.id,
            rmin: j.rmin,
            rmax: j.rmax,
            profit: j.profit,
            points: points
                .iter()
                .enumerate()
                .filter(|(_, t)| j.contains(**t))
                .map(|(i, _)| i)
                .collect(),
        })
        .collect();
    // branch high-value jobs first so good incumbents appear early
    jobs.sort_by(|a, b| (b.profit * b.rmax, a.id).cmp(&(a.profit * a.rmax, b.id)));
    (jobs, points.len())
}

/// Upper bound on the profit still reachable from `depth`: each remaining job
/// capped by its range and by the smallest residual capacity on its span.
fn remaining_bound(jobs: &[SearchJob], depth: usize, caps: &[u64]) -> u64 {
    jobs[depth..]
        .iter()
        .map(|j| {
            let cap = j.points.iter().map(|&p| caps[p]).min().unwrap_or(0);
            j.profit * j.rmax.min(cap)
        })
        .sum()
}

struct FbapSearch<'a> {
    jobs: &'a [SearchJob],
    caps: Vec<u64>,
    chosen: Vec<u64>,
    best: Option<(u64, Vec<u64>)>,
    nodes: u64,
    budget: u64,
}

impl FbapSearch<'_> {
    fn run(&mut self, depth: usize, profit: u64) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded(self.budget));
        }
        if depth == self.jobs.len() {
            if self.best.as_ref().map_or(true, |(b, _)| profit > *b) {
                self.best = Some((profit, self.chosen.clone()));
            }
            return Ok(());
        }
        if let Some((b, _)) = &self.best {
            if profit + remaining_bound(self.jobs, depth, &self.caps) <= *b {
                return Ok(());
            }
        }
        let j = &self.jobs[depth];
        let cap = j.points.iter().map(|&p| self.caps[p]).min().unwrap_or(u64::MAX);
        let hi = j.rmax.min(cap);
        let lo = j.rmin.max(1);
        // amounts stay in [rmin, rmax]; zero is allowed only for optional
        // jobs (rmin == 0), matching what verify_fbap accepts. High amounts
        // first so good incumbents appear early. A mandatory job that no
        // longer fits makes the whole branch dead.
        let mut a = hi;
        while a >= lo {
            for &p in &j.points {
                self.caps[p] -= a;
            }
            self.chosen[depth] = a;
            self.run(depth + 1, profit + j.profit * a)?;
            for &p in &j.points {
                self.caps[p] += a;
            }
            a -= 1;
        }
        if j.rmin == 0 {
            self.chosen[depth] = 0;
            self.run(depth + 1, profit)?;
        }
        Ok(())
    }
}

/// Exact maximum-profit bandwidth allocation, found by exhaustive search.
/// Jobs with `rmin > 0` must be served; returns `Infeasible` when that is
/// impossible.
pub fn oracle_fbap(inst: &Instance, budget: u64) -> Result<OracleFbapResult, OracleError> {
    let (jobs, npoints) = search_jobs(inst);
    let mut search = FbapSearch {
        jobs: &jobs,
        caps: vec![inst.capacity; npoints],
        chosen: vec![0; jobs.len()],
        best: None,
        nodes: 0,
        budget,
    };
    search.run(0, 0)?;
    let (profit, chosen) = search.best.ok_or(OracleError::Infeasible)?;
    let amounts: BTreeMap<u64, u64> = jobs
        .iter()
        .zip(chosen)
        .filter(|(_, a)| *a > 0)
        .map(|(j, a)| (j.id, a))
        .collect();
    let allocation = BandwidthAllocation { amounts };
    debug_assert_eq!(verify_fbap(inst, &allocation).map(|r| r.total), Ok(profit));
    Ok(OracleFbapResult { allocation, profit, nodes: search.nodes })
}

struct FsapSearch<'a> {
    jobs: &'a [SearchJob],
    w: u64,
    /// occupied colors per event point, bit c-1 set when color c is taken
    masks: Vec<u128>,
    caps: Vec<u64>,
    chosen: Vec<Option<Block>>,
    best: Option<(u64, Vec<Option<Block>>)>,
    upper: u64,
    nodes: u64,
    budget: u64,
}

impl FsapSearch<'_> {
    fn run(&mut self, depth: usize, profit: u64) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded(self.budget));
        }
        if depth == self.jobs.len() {
            if self.best.as_ref().map_or(true, |(b, _)| profit > *b) {
                self.best = Some((profit, self.chosen.clone()));
            }
            return Ok(());
        }
        if let Some((b, _)) = &self.best {
            if *b >= self.upper || profit + remaining_bound(self.jobs, depth, &self.caps) <= *b {
                return Ok(());
            }
        }
        let j = &self.jobs[depth];
        let occupied: u128 = j.points.iter().map(|&p| self.masks[p]).fold(0, |a, m| a | m);
        // longer blocks first: better incumbents sooner under unit profits
        let mut len = j.rmax;
        while len >= 1 {
            let block_bits: u128 = if len == 128 { !0 } else { (1u128 << len) - 1 };
            for first in 1..=(self.w - len + 1) {
                let mask = block_bits << (first - 1);
                if occupied & mask != 0 {
                    continue;
                }
                for &p in &j.points {
                    self.masks[p] |= mask;
                    self.caps[p] -= len;
                }
                self.chosen[depth] = Some(Block { first, len });
                self.run(depth + 1, profit + j.profit * len)?;
                for &p in &j.points {
                    self.masks[p] &= !mask;
                    self.caps[p] += len;
                }
            }
            len -= 1;
        }
        self.chosen[depth] = None;
        self.run(depth + 1, profit)
    }
}

/// Exact maximum-profit contiguous coloring, found by exhaustive search over
/// block placements. Capacities above 128 are rejected. The non-contiguous
/// optimum caps the search: once an incumbent reaches it the search stops
/// descending.
pub fn oracle_fsap(inst: &Instance, budget: u64) -> Result<OracleFsapResult, OracleError> {
    if inst.capacity > 128 {
        return Err(OracleError::CapacityTooLarge(inst.capacity));
    }
    // The contiguous problem ignores minimum demands; relax them so the
    // bandwidth relaxation below is a true upper bound.
    let relaxed = Instance {
        capacity: inst.capacity,
        jobs: inst.jobs.iter().map(|j| crate::model::Job { rmin: 0, ..j.clone() }).collect(),
    };
    let upper = oracle_fbap(&relaxed, budget)?.profit;
    let (jobs, npoints) = search_jobs(&relaxed);
    let mut search = FsapSearch {
        jobs: &jobs,
        w: inst.capacity,
        masks: vec![0; npoints],
        caps: vec![inst.capacity; npoints],
        chosen: vec![None; jobs.len()],
        best: None,
        upper,
        nodes: 0,
        budget,
    };
    search.run(0, 0)?;
    let (profit, chosen) = search.best.expect("empty assignment is always feasible");
    let blocks: BTreeMap<u64, Block> = jobs
        .iter()
        .zip(chosen)
        .filter_map(|(j, b)| b.map(|b| (j.id, b)))
        .collect();
    let coloring = ContiguousColoring { blocks };
    debug_assert_eq!(verify_fsap(inst, &coloring).map(|r| r.total), Ok(profit));
    Ok(OracleFsapResult { coloring, profit, nodes: search.nodes })
}
