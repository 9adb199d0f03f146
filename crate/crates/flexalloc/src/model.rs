//! Core problem types: interval jobs, instances, allocations, colorings.
//!
//! Conventions used throughout the crate:
//! - time intervals are half-open `[start, end)` on the integer line, so two
//!   jobs that merely meet at a point do not conflict;
//! - colors are numbered `1..=W`;
//! - a bandwidth allocation maps job ids to integer amounts, a contiguous
//!   coloring maps job ids to blocks `(first_color, len)`;
//! - jobs absent from an allocation or coloring receive nothing.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub type JobId = u64;

/// One interval job with its demand range and per-color profit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub id: JobId,
    pub start: u64,
    pub end: u64,
    pub rmin: u64,
    pub rmax: u64,
    pub profit: u64,
}

impl Job {
    /// True when `t` lies inside the half-open span `[start, end)`.
    pub fn contains(&self, t: u64) -> bool {
        self.start <= t && t < self.end
    }

    /// True when the two spans share at least one time unit.
    pub fn intersects(&self, other: &Job) -> bool {
        self.start < other.end && other.start < self.end
    }
}

/// A problem instance: a capacity (number of colors) and a set of jobs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub capacity: u64,
    pub jobs: Vec<Job>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    /// Instance-level validation failure (bad span, bad range, duplicate id).
    InvalidInstance(String),
    /// An allocation or coloring references a job id the instance lacks.
    UnknownJob(JobId),
    /// An amount or block violates the job's demand range or the color range.
    RangeViolation(JobId, String),
    /// Total allocated amount exceeds capacity at time `t`.
    CapacityViolation { time: u64, load: u64, capacity: u64 },
    /// Two intersecting jobs hold overlapping color blocks at time `t`.
    BlockOverlap { a: JobId, b: JobId, time: u64, color: u64 },
    /// A crossing (wrapped) block is malformed for the given modulus.
    BadCircularBlock(JobId),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::InvalidInstance(msg) => write!(f, "invalid instance: {msg}"),
            ModelError::UnknownJob(id) => write!(f, "job {id} is not part of the instance"),
            ModelError::RangeViolation(id, msg) => write!(f, "job {id}: {msg}"),
            ModelError::CapacityViolation { time, load, capacity } => {
                write!(f, "load {load} exceeds capacity {capacity} at t={time}")
            }
            ModelError::BlockOverlap { a, b, time, color } => {
                write!(f, "jobs {a} and {b} overlap at color {color}, t={time}")
            }
            ModelError::BadCircularBlock(id) => write!(f, "job {id}: block does not fit the modulus"),
        }
    }
}

impl std::error::Error for ModelError {}

impl Instance {
    /// Validates ids, spans, ranges and profits; returns the instance on success.
    pub fn new(capacity: u64, jobs: Vec<Job>) -> Result<Instance, ModelError> {
        if capacity == 0 {
            return Err(ModelError::InvalidInstance("capacity must be at least 1".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for j in &jobs {
            if !seen.insert(j.id) {
                return Err(ModelError::InvalidInstance(format!("duplicate job id {}", j.id)));
            }
            if j.start >= j.end {
                return Err(ModelError::InvalidInstance(format!(
                    "job {}: empty span [{}, {})",
                    j.id, j.start, j.end
                )));
            }
            if j.rmax == 0 {
                return Err(ModelError::InvalidInstance(format!("job {}: rmax must be positive", j.id)));
            }
            if j.rmin > j.rmax {
                return Err(ModelError::InvalidInstance(format!(
                    "job {}: rmin {} exceeds rmax {}",
                    j.id, j.rmin, j.rmax
                )));
            }
            if j.rmax > capacity {
                return Err(ModelError::InvalidInstance(format!(
                    "job {}: rmax {} exceeds capacity {}",
                    j.id, j.rmax, capacity
                )));
            }
            if j.profit == 0 {
                return Err(ModelError::InvalidInstance(format!("job {}: profit must be positive", j.id)));
            }
        }
        Ok(Instance { capacity, jobs })
    }

    pub fn job(&self, id: JobId) -> Option<&Job> {
        self.jobs.iter().find(|j| j.id == id)
    }

    /// Sorted distinct start coordinates. Because spans are half-open, the
    /// load function attains its maximum at some start, so capacity checks
    /// may restrict themselves to these points.
    pub fn event_points(&self) -> Vec<u64> {
        let mut pts: Vec<u64> = self.jobs.iter().map(|j| j.start).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// True when no job's span strictly contains another's.
    pub fn is_proper(&self) -> bool {
        let spans: Vec<(u64, u64)> = self.jobs.iter().map(|j| (j.start, j.end)).collect();
        spans_are_proper(&spans)
    }
}

/// True when no span strictly contains another. Sorting by `(start, end)`
/// and comparing neighbours suffices: equal starts must share an end, and
/// strictly later starts must have strictly later ends.
pub fn spans_are_proper(spans: &[(u64, u64)]) -> bool {
    let mut spans = spans.to_vec();
    spans.sort_unstable();
    spans.windows(2).all(|w| {
        let (s0, e0) = w[0];
        let (s1, e1) = w[1];
        if s0 == s1 {
            e0 == e1
        } else {
            e0 < e1
        }
    })
}

/// Amounts per job id for the non-contiguous problem. Absent ids get 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BandwidthAllocation {
    pub amounts: BTreeMap<JobId, u64>,
}

impl BandwidthAllocation {
    pub fn amount(&self, id: JobId) -> u64 {
        self.amounts.get(&id).copied().unwrap_or(0)
    }

    pub fn total_amount(&self) -> u64 {
        self.amounts.values().sum()
    }
}

/// A contiguous block of colors `first..first + len` (1-based, inclusive of
/// `first`, `len >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub first: u64,
    pub len: u64,
}

impl Block {
    pub fn last(&self) -> u64 {
        self.first + self.len - 1
    }

    pub fn overlaps(&self, other: &Block) -> bool {
        self.first <= other.last() && other.first <= self.last()
    }
}

/// Block per job id for the contiguous problem. Absent ids get no colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ContiguousColoring {
    pub blocks: BTreeMap<JobId, Block>,
}

impl ContiguousColoring {
    /// The induced bandwidth allocation (block lengths as amounts).
    pub fn amounts(&self) -> BandwidthAllocation {
        BandwidthAllocation {
            amounts: self.blocks.iter().map(|(id, b)| (*id, b.len)).collect(),
        }
    }
}

/// Blocks on a color circle `1..=modulus`; a block may wrap past the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularColoring {
    pub modulus: u64,
    pub blocks: BTreeMap<JobId, Block>,
}

impl CircularColoring {
    /// The linear segments covered by a wrapped block: one segment when it
    /// fits, two when it crosses the modulus boundary.
    pub fn segments(&self, b: &Block) -> Vec<Block> {
        if b.last() <= self.modulus {
            vec![*b]
        } else {
            let tail = b.last() - self.modulus;
            vec![
                Block { first: b.first, len: b.len - tail },
                Block { first: 1, len: tail },
            ]
        }
    }
}

/// Total and per-job profit of a verified solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfitReport {
    pub total: u64,
    pub per_job: BTreeMap<JobId, u64>,
}

fn check_known_ids<'a, I: Iterator<Item = &'a JobId>>(inst: &Instance, ids: I) -> Result<(), ModelError> {
    for id in ids {
        if inst.job(*id).is_none() {
            return Err(ModelError::UnknownJob(*id));
        }
    }
    Ok(())
}

/// Checks a bandwidth allocation: every amount inside the job's demand range
/// (zero only allowed when `rmin == 0`; jobs with positive `rmin` must be
/// served), and total load within capacity at every event point.
pub fn verify_fbap(inst: &Instance, alloc: &BandwidthAllocation) -> Result<ProfitReport, ModelError> {
    check_known_ids(inst, alloc.amounts.keys())?;
    for j in &inst.jobs {
        let a = alloc.amount(j.id);
        if a == 0 {
            if j.rmin > 0 {
                return Err(ModelError::RangeViolation(
                    j.id,
                    format!("amount 0 below mandatory minimum {}", j.rmin),
                ));
            }
            continue;
        }
        if a < j.rmin || a > j.rmax {
            return Err(ModelError::RangeViolation(
                j.id,
                format!("amount {} outside [{}, {}]", a, j.rmin, j.rmax),
            ));
        }
    }
    // Sweep the load profile instead of re-summing at every point.
    let mut deltas: Vec<(u64, i64)> = Vec::with_capacity(inst.jobs.len() * 2);
    for j in &inst.jobs {
        let a = alloc.amount(j.id);
        if a > 0 {
            deltas.push((j.start, a as i64));
            deltas.push((j.end, -(a as i64)));
        }
    }
    deltas.sort_unstable();
    let mut load: i64 = 0;
    let mut i = 0;
    while i < deltas.len() {
        let t = deltas[i].0;
        while i < deltas.len() && deltas[i].0 == t {
            load += deltas[i].1;
            i += 1;
        }
        if load > inst.capacity as i64 {
            return Err(ModelError::CapacityViolation {
                time: t,
                load: load as u64,
                capacity: inst.capacity,
            });
        }
    }
    let per_job: BTreeMap<JobId, u64> = inst
        .jobs
        .iter()
        .filter_map(|j| {
            let a = alloc.amount(j.id);
            (a > 0).then_some((j.id, j.profit * a))
        })
        .collect();
    Ok(ProfitReport { total: per_job.values().sum(), per_job })
}

/// Checks a contiguous coloring: blocks inside `[1, W]` and within `rmax`,
/// and disjoint blocks for every pair of intersecting jobs. Minimum demands
/// play no role in the contiguous problem.
pub fn verify_fsap(inst: &Instance, col: &ContiguousColoring) -> Result<ProfitReport, ModelError> {
    check_known_ids(inst, col.blocks.keys())?;
    for (id, b) in &col.blocks {
        let j = inst.job(*id).expect("checked above");
        if b.len == 0 || b.first == 0 {
            return Err(ModelError::RangeViolation(*id, "block must cover at least one color".into()));
        }
        if b.len > j.rmax {
            return Err(ModelError::RangeViolation(
                *id,
                format!("block length {} exceeds rmax {}", b.len, j.rmax),
            ));
        }
        if b.last() > inst.capacity {
            return Err(ModelError::RangeViolation(
                *id,
                format!("block [{}, {}] leaves the color range", b.first, b.last()),
            ));
        }
    }
    check_block_disjointness(inst, col.blocks.iter().map(|(id, b)| (*id, *b)))?;
    let per_job: BTreeMap<JobId, u64> = col
        .blocks
        .iter()
        .map(|(id, b)| (*id, inst.job(*id).unwrap().profit * b.len))
        .collect();
    Ok(ProfitReport { total: per_job.values().sum(), per_job })
}

/// Checks a circular coloring the same way `verify_fsap` does, except that
/// blocks live on the color circle `1..=modulus` and may wrap.
pub fn verify_circular(inst: &Instance, col: &CircularColoring) -> Result<ProfitReport, ModelError> {
    check_known_ids(inst, col.blocks.keys())?;
    let mut segments: Vec<(JobId, Block)> = Vec::new();
    for (id, b) in &col.blocks {
        let j = inst.job(*id).expect("checked above");
        if b.len == 0 || b.first == 0 || b.first > col.modulus || b.len > col.modulus {
            return Err(ModelError::BadCircularBlock(*id));
        }
        if b.len > j.rmax {
            return Err(ModelError::RangeViolation(
                *id,
                format!("block length {} exceeds rmax {}", b.len, j.rmax),
            ));
        }
        for seg in col.segments(b) {
            segments.push((*id, seg));
        }
    }
    check_block_disjointness(inst, segments.into_iter())?;
    let per_job: BTreeMap<JobId, u64> = col
        .blocks
        .iter()
        .map(|(id, b)| (*id, inst.job(*id).unwrap().profit * b.len))
        .collect();
    Ok(ProfitReport { total: per_job.values().sum(), per_job })
}

/// Sweep over starts, keeping active blocks ordered by first color; a new
/// block may only collide with its neighbours in that order.
fn check_block_disjointness<I: Iterator<Item = (JobId, Block)>>(
    inst: &Instance,
    blocks: I,
) -> Result<(), ModelError> {
    // (start, end, first color, id, block) per active segment
    let mut segs: Vec<(u64, u64, JobId, Block)> = Vec::new();
    for (id, b) in blocks {
        let j = inst.job(id).expect("caller verified ids");
        segs.push((j.start, j.end, id, b));
    }
    segs.sort_unstable_by_key(|(s, _, id, b)| (*s, *id, b.first));
    // active: first color -> (end, id, block); expired entries dropped lazily
    let mut active: BTreeMap<u64, (u64, JobId, Block)> = BTreeMap::new();
    for (start, end, id, b) in segs {
        active.retain(|_, (e, _, _)| *e > start);
        // neighbour below: greatest first <= b.first
        if let Some((_, (_, oid, ob))) = active.range(..=b.first).next_back() {
            if ob.overlaps(&b) {
                let color = b.first.max(ob.first);
                return Err(ModelError::BlockOverlap { a: *oid, b: id, time: start, color });
            }
        }
        if let Some((_, (_, oid, ob))) = active.range(b.first + 1..).next() {
            if ob.overlaps(&b) {
                let color = ob.first.max(b.first);
                return Err(ModelError::BlockOverlap { a: *oid, b: id, time: start, color });
            }
        }
        active.insert(b.first, (end, id, b));
    }
    Ok(())
}

// --- file formats ---------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionKind {
    Fbap,
    Fsap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AllocEntry {
    pub id: JobId,
    pub amount: u64,
    pub first_color: Option<u64>,
}

/// On-disk solution: allocation entries sorted by id plus the claimed total,
/// re-checked against the instance on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub kind: SolutionKind,
    pub alloc: Vec<AllocEntry>,
    pub total_profit: u64,
}

impl SolutionFile {
    pub fn from_fbap(inst: &Instance, alloc: &BandwidthAllocation) -> Result<SolutionFile, ModelError> {
        let report = verify_fbap(inst, alloc)?;
        let entries = alloc
            .amounts
            .iter()
            .filter(|(_, a)| **a > 0)
            .map(|(id, a)| AllocEntry { id: *id, amount: *a, first_color: None })
            .collect();
        Ok(SolutionFile { kind: SolutionKind::Fbap, alloc: entries, total_profit: report.total })
    }

    pub fn from_fsap(inst: &Instance, col: &ContiguousColoring) -> Result<SolutionFile, ModelError> {
        let report = verify_fsap(inst, col)?;
        let entries = col
            .blocks
            .iter()
            .map(|(id, b)| AllocEntry { id: *id, amount: b.len, first_color: Some(b.first) })
            .collect();
        Ok(SolutionFile { kind: SolutionKind::Fsap, alloc: entries, total_profit: report.total })
    }

    pub fn to_fbap(&self) -> BandwidthAllocation {
        BandwidthAllocation {
            amounts: self.alloc.iter().map(|e| (e.id, e.amount)).collect(),
        }
    }

    pub fn to_fsap(&self) -> Result<ContiguousColoring, ModelError> {
        let mut blocks = BTreeMap::new();
        for e in &self.alloc {
            if e.amount == 0 {
                continue;
            }
            let first = e
                .first_color
                .ok_or_else(|| ModelError::RangeViolation(e.id, "missing first_color in fsap entry".into()))?;
            blocks.insert(e.id, Block { first, len: e.amount });
        }
        Ok(ContiguousColoring { blocks })
    }

    /// Verifies against the instance, including the recorded total.
    pub fn verify(&self, inst: &Instance) -> Result<ProfitReport, ModelError> {
        let report = match self.kind {
            SolutionKind::Fbap => verify_fbap(inst, &self.to_fbap())?,
            SolutionKind::Fsap => verify_fsap(inst, &self.to_fsap()?)?,
        };
        if report.total != self.total_profit {
            return Err(ModelError::InvalidInstance(format!(
                "recorded total {} does not match recomputed {}",
                self.total_profit, report.total
            )));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn job(id: JobId, start: u64, end: u64, rmin: u64, rmax: u64, profit: u64) -> Job {
        Job { id, start, end, rmin, rmax, profit }
    }

    fn alloc(pairs: &[(JobId, u64)]) -> BandwidthAllocation {
        BandwidthAllocation { amounts: pairs.iter().copied().collect() }
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(Instance::new(0, vec![]).is_err());
        assert!(Instance::new(2, vec![job(1, 3, 3, 0, 1, 1)]).is_err());
        assert!(Instance::new(2, vec![job(1, 0, 1, 2, 1, 1)]).is_err());
        assert!(Instance::new(2, vec![job(1, 0, 1, 0, 3, 1)]).is_err());
        assert!(Instance::new(2, vec![job(1, 0, 1, 0, 1, 0)]).is_err());
        assert!(Instance::new(2, vec![job(1, 0, 1, 0, 1, 1), job(1, 1, 2, 0, 1, 1)]).is_err());
    }

    #[test]
    fn verify_fbap_accepts_and_prices() {
        let inst = Instance::new(2, vec![job(1, 0, 2, 0, 2, 3), job(2, 1, 3, 0, 2, 1)]).unwrap();
        let report = verify_fbap(&inst, &alloc(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(report.total, 4);
        assert_eq!(report.per_job[&1], 3);
    }

    #[test]
    fn verify_fbap_catches_capacity() {
        let inst = Instance::new(2, vec![job(1, 0, 2, 0, 2, 1), job(2, 1, 3, 0, 2, 1)]).unwrap();
        let err = verify_fbap(&inst, &alloc(&[(1, 2), (2, 1)])).unwrap_err();
        assert_eq!(err, ModelError::CapacityViolation { time: 1, load: 3, capacity: 2 });
    }

    #[test]
    fn verify_fbap_meeting_jobs_do_not_conflict() {
        let inst = Instance::new(2, vec![job(1, 0, 2, 0, 2, 1), job(2, 2, 4, 0, 2, 1)]).unwrap();
        assert_eq!(verify_fbap(&inst, &alloc(&[(1, 2), (2, 2)])).unwrap().total, 4);
    }

    #[test]
    fn verify_fbap_mandatory_minimum() {
        let inst = Instance::new(2, vec![job(1, 0, 2, 1, 2, 1)]).unwrap();
        assert!(matches!(
            verify_fbap(&inst, &alloc(&[])),
            Err(ModelError::RangeViolation(1, _))
        ));
        // zero amount is fine when rmin is zero
        let inst0 = Instance::new(2, vec![job(1, 0, 2, 0, 2, 1)]).unwrap();
        assert_eq!(verify_fbap(&inst0, &alloc(&[])).unwrap().total, 0);
    }

    #[test]
    fn verify_fbap_unknown_id() {
        let inst = Instance::new(2, vec![job(1, 0, 2, 0, 2, 1)]).unwrap();
        assert_eq!(verify_fbap(&inst, &alloc(&[(9, 1)])).unwrap_err(), ModelError::UnknownJob(9));
    }

    #[test]
    fn verify_fsap_reports_overlap_witness() {
        let inst = Instance::new(3, vec![job(1, 0, 2, 0, 2, 1), job(2, 1, 3, 0, 2, 1)]).unwrap();
        let col = ContiguousColoring {
            blocks: [(1, Block { first: 1, len: 2 }), (2, Block { first: 2, len: 2 })].into(),
        };
        let err = verify_fsap(&inst, &col).unwrap_err();
        assert_eq!(err, ModelError::BlockOverlap { a: 1, b: 2, time: 1, color: 2 });
    }

    #[test]
    fn verify_fsap_disjoint_blocks_pass() {
        let inst = Instance::new(4, vec![job(1, 0, 2, 0, 2, 2), job(2, 1, 3, 0, 2, 1)]).unwrap();
        let col = ContiguousColoring {
            blocks: [(1, Block { first: 1, len: 2 }), (2, Block { first: 3, len: 2 })].into(),
        };
        assert_eq!(verify_fsap(&inst, &col).unwrap().total, 6);
    }

    #[test]
    fn verify_fsap_same_first_color() {
        let inst = Instance::new(4, vec![job(1, 0, 2, 0, 2, 1), job(2, 1, 3, 0, 2, 1)]).unwrap();
        let col = ContiguousColoring {
            blocks: [(1, Block { first: 2, len: 1 }), (2, Block { first: 2, len: 2 })].into(),
        };
        let err = verify_fsap(&inst, &col).unwrap_err();
        assert!(matches!(err, ModelError::BlockOverlap { .. }));
    }

    #[test]
    fn verify_fsap_ignores_rmin() {
        // contiguous problem has no mandatory minima
        let inst = Instance::new(4, vec![job(1, 0, 2, 2, 3, 1), job(2, 5, 6, 2, 3, 1)]).unwrap();
        let col = ContiguousColoring { blocks: [(1, Block { first: 1, len: 1 })].into() };
        assert_eq!(verify_fsap(&inst, &col).unwrap().total, 1);
    }

    #[test]
    fn proper_detection() {
        let mk = |spans: &[(u64, u64)]| {
            Instance::new(
                10,
                spans
                    .iter()
                    .enumerate()
                    .map(|(i, (s, e))| job(i as u64, *s, *e, 0, 1, 1))
                    .collect(),
            )
            .unwrap()
        };
        assert!(mk(&[(0, 2), (1, 3)]).is_proper());
        assert!(!mk(&[(0, 4), (1, 2)]).is_proper());
        assert!(!mk(&[(0, 4), (0, 2)]).is_proper());
        assert!(!mk(&[(0, 3), (1, 3)]).is_proper());
        assert!(mk(&[(0, 3), (0, 3)]).is_proper());
        assert!(mk(&[]).is_proper());
    }

    #[test]
    fn event_points_sorted_dedup() {
        let inst =
            Instance::new(2, vec![job(1, 4, 6, 0, 1, 1), job(2, 0, 2, 0, 1, 1), job(3, 4, 5, 0, 1, 1)])
                .unwrap();
        assert_eq!(inst.event_points(), vec![0, 4]);
    }

    #[test]
    fn circular_segments_wrap() {
        let col = CircularColoring { modulus: 8, blocks: BTreeMap::new() };
        let segs = col.segments(&Block { first: 7, len: 4 });
        assert_eq!(segs, vec![Block { first: 7, len: 2 }, Block { first: 1, len: 2 }]);
    }

    #[test]
    fn solution_file_round_trip() {
        let inst = Instance::new(3, vec![job(1, 0, 2, 0, 2, 2), job(2, 1, 3, 0, 2, 1)]).unwrap();
        let col = ContiguousColoring {
            blocks: [(1, Block { first: 1, len: 2 }), (2, Block { first: 3, len: 1 })].into(),
        };
        let file = SolutionFile::from_fsap(&inst, &col).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: SolutionFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.verify(&inst).unwrap().total, 5);
        assert_eq!(back.to_fsap().unwrap(), col);
    }

    #[test]
    fn formats_reject_unknown_fields() {
        let bad_inst = r#"{"capacity": 2, "jobs": [], "extra": 1}"#;
        assert!(serde_json::from_str::<Instance>(bad_inst).is_err());
        let bad_sol = r#"{"kind": "fbap", "alloc": [], "total_profit": 0, "note": "x"}"#;
        assert!(serde_json::from_str::<SolutionFile>(bad_sol).is_err());
    }
}
