//! Instance generators: seeded random families and a deterministic
//! reduction from exact cover by three-sets.
//!
//! The reduction maps an exact-cover question over `3n` elements and `m`
//! three-sets (`m >= n`) to a coloring instance on capacity `9m + 7` in
//! which every job wants at most three colors. Each set becomes a gadget of
//! sixteen core intervals occupying a 15-unit window; heavy border
//! intervals pin the color budget on both flanks, and per-element interval
//! pairs can only be served when their set's gadget is switched the right
//! way. A full-profit coloring exists exactly when a cover does, and
//! `GadgetBuild::witness` writes one down from a known cover.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::model::{Block, ContiguousColoring, Instance, Job, JobId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    BadProfile(String),
    InvalidThreeXc(String),
    MissingCover,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::BadProfile(why) => write!(f, "bad generator profile: {why}"),
            GenError::InvalidThreeXc(why) => write!(f, "invalid three-set cover input: {why}"),
            GenError::MissingCover => write!(f, "no cover present to build a witness from"),
        }
    }
}

impl std::error::Error for GenError {}

/// Shape of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Arbitrary demands and profits; minima are zero half the time.
    General,
    /// No span contains another; no minima; profits `1..=9`.
    Proper,
    /// Every job wants at most `max`, no minima, unit profit.
    Uniform { max: u64 },
}

/// Deterministic seeded instance with `n` jobs on the given capacity.
/// General instances may have infeasible minima; callers that need
/// feasibility should check and move to another seed.
pub fn gen_random(profile: Profile, n: usize, capacity: u64, seed: u64) -> Result<Instance, GenError> {
    if capacity == 0 {
        return Err(GenError::BadProfile("capacity must be positive".into()));
    }
    if let Profile::Uniform { max } = profile {
        if max == 0 || max > capacity {
            return Err(GenError::BadProfile(format!(
                "uniform demand {max} must be in 1..={capacity}"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut jobs = Vec::with_capacity(n);
    if n == 0 {
        return Ok(Instance::new(capacity, jobs).expect("empty instance is valid"));
    }
    let horizon = 2 * n as u64;

    let spans: Vec<(u64, u64)> = match profile {
        Profile::Proper => {
            let mut coords = BTreeSet::new();
            while coords.len() < 2 * n {
                coords.insert(rng.random_range(0..4 * n as u64));
            }
            let coords: Vec<u64> = coords.into_iter().collect();
            (0..n).map(|i| (coords[i], coords[n + i])).collect()
        }
        _ => (0..n)
            .map(|_| {
                let start = rng.random_range(0..horizon);
                let end = start + rng.random_range(1..=horizon - start);
                (start, end)
            })
            .collect(),
    };

    for (i, (start, end)) in spans.into_iter().enumerate() {
        let (rmin, rmax, profit) = match profile {
            Profile::General => {
                let rmax = rng.random_range(1..=capacity);
                let rmin = if rng.random_bool(0.5) {
                    0
                } else {
                    rng.random_range(1..=rmax)
                };
                (rmin, rmax, rng.random_range(1..=9))
            }
            Profile::Proper => (0, rng.random_range(1..=capacity), rng.random_range(1..=9)),
            Profile::Uniform { max } => (0, max, 1),
        };
        jobs.push(Job {
            id: i as u64 + 1,
            start,
            end,
            rmin,
            rmax,
            profit,
        });
    }
    Ok(Instance::new(capacity, jobs).expect("generated jobs respect the invariants"))
}

/// An exact-cover-by-three-sets question: elements are `1..=3n`, each set
/// lists three of them, and `cover` (when present) indexes `n` sets that
/// partition the elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeXcInstance {
    pub n: u64,
    pub sets: Vec<[u64; 3]>,
    #[serde(default)]
    pub cover: Option<Vec<usize>>,
}

impl ThreeXcInstance {
    pub fn validate(&self) -> Result<(), GenError> {
        let n = self.n;
        if n == 0 {
            return Err(GenError::InvalidThreeXc("n must be at least 1".into()));
        }
        let m = self.sets.len() as u64;
        if m < n {
            return Err(GenError::InvalidThreeXc(format!(
                "{m} sets cannot cover {} elements",
                3 * n
            )));
        }
        if m > 1000 || n > 1000 {
            return Err(GenError::InvalidThreeXc("instance too large".into()));
        }
        for (i, s) in self.sets.iter().enumerate() {
            for &e in s {
                if e == 0 || e > 3 * n {
                    return Err(GenError::InvalidThreeXc(format!(
                        "set {i} mentions element {e}, outside 1..={}",
                        3 * n
                    )));
                }
            }
            if s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
                return Err(GenError::InvalidThreeXc(format!(
                    "set {i} repeats an element"
                )));
            }
        }
        if let Some(cover) = &self.cover {
            if cover.len() as u64 != n {
                return Err(GenError::InvalidThreeXc(format!(
                    "cover has {} sets, needs {n}",
                    cover.len()
                )));
            }
            let mut seen = BTreeSet::new();
            for &i in cover {
                let Some(s) = self.sets.get(i) else {
                    return Err(GenError::InvalidThreeXc(format!(
                        "cover references set {i}, out of range"
                    )));
                };
                for &e in s {
                    if !seen.insert(e) {
                        return Err(GenError::InvalidThreeXc(format!(
                            "cover repeats element {e}"
                        )));
                    }
                }
            }
            if seen.len() as u64 != 3 * n {
                return Err(GenError::InvalidThreeXc(
                    "cover does not reach every element".into(),
                ));
            }
        }
        Ok(())
    }
}

// Core interval spans relative to a gadget's window start, and the profits
// of the eight cheap ones; the other eight carry the border weight.
const CORE_SPANS: [(u64, u64); 16] = [
    (0, 3),
    (3, 6),
    (7, 10),
    (11, 14),
    (1, 4),
    (5, 8),
    (9, 12),
    (13, 15),
    (0, 2),
    (3, 6),
    (7, 10),
    (11, 15),
    (0, 4),
    (5, 8),
    (9, 12),
    (13, 15),
];
const CORE_CHEAP_PROFITS: [u64; 8] = [1, 2, 2, 2, 2, 2, 2, 1];

struct GadgetIds {
    left: Vec<JobId>,
    right: Vec<JobId>,
    core: Vec<[JobId; 16]>,
    elem_left: Vec<[JobId; 3]>,
    elem_right: Vec<[JobId; 3]>,
    fill_left: Vec<[JobId; 3]>,
    fill_right: Vec<[JobId; 3]>,
}

/// The reduction output: the instance, the source question, the border
/// weight base `P`, and the profit a cover-derived coloring collects.
pub struct GadgetBuild {
    pub instance: Instance,
    pub xc: ThreeXcInstance,
    /// Border profit base: borders weigh `P^2` per color.
    pub profit_base: u64,
    /// Total profit of the coloring [`GadgetBuild::witness`] constructs.
    pub witness_profit: u128,
    ids: GadgetIds,
}

/// Builds the coloring instance for an exact-cover question.
pub fn gen_gadget(xc: &ThreeXcInstance) -> Result<GadgetBuild, GenError> {
    xc.validate()?;
    let n = xc.n;
    let m = xc.sets.len() as u64;
    let p = 8 * n + 45 * m;
    let psq = p * p;
    let w = 9 * m + 7;
    let horizon = 8 * n + 45 * m + 1;
    let window = |i: u64| 4 * n + 15 * m + 15 * (i - 1);

    let mut jobs: Vec<Job> = Vec::new();
    let add = |jobs: &mut Vec<Job>, start: u64, end: u64, profit: u64| -> JobId {
        let id = jobs.len() as u64 + 1;
        jobs.push(Job {
            id,
            start,
            end,
            rmin: 0,
            rmax: 3,
            profit,
        });
        id
    };

    let mut left = Vec::new();
    for i in 1..=3 * m + 3 {
        let end = if i <= 3 * n {
            i
        } else if i <= 3 * m {
            4 * n
        } else {
            4 * n + 15 * m
        };
        left.push(add(&mut jobs, 0, end, psq));
    }
    let mut right = Vec::new();
    for i in 1..=3 * m + 3 {
        let start = if i <= 3 * n {
            5 * n + 45 * m + i
        } else if i <= 3 * m {
            4 * n + 45 * m
        } else {
            4 * n + 30 * m
        };
        right.push(add(&mut jobs, start, horizon, psq));
    }

    let mut core = Vec::new();
    let mut elem_left = Vec::new();
    let mut elem_right = Vec::new();
    let mut fill_left = Vec::new();
    let mut fill_right = Vec::new();
    for (si, set) in xc.sets.iter().enumerate() {
        let g = window(si as u64 + 1);
        let mut ids = [0; 16];
        for (t, (s, e)) in CORE_SPANS.iter().enumerate() {
            let profit = if t < 8 { CORE_CHEAP_PROFITS[t] } else { psq };
            ids[t] = add(&mut jobs, g + s, g + e, profit);
        }
        core.push(ids);

        let mut elems = *set;
        elems.sort_unstable();
        let mut el = [0; 3];
        let mut er = [0; 3];
        for (slot, &e) in elems.iter().enumerate() {
            let slot_off = 4 * slot as u64;
            let (ls, le) = (e, g + 3 + slot_off);
            el[slot] = add(&mut jobs, ls, le, le - ls);
            let (rs, re) = (g + 2 + slot_off, 5 * n + 45 * m + e);
            er[slot] = add(&mut jobs, rs, re, re - rs);
        }
        elem_left.push(el);
        elem_right.push(er);

        let mut fl = [0; 3];
        let mut fr = [0; 3];
        for slot in 0..3u64 {
            let slot_off = 4 * slot;
            let (ls, le) = (4 * n, g + 5 + slot_off);
            fl[slot as usize] = add(&mut jobs, ls, le, le - ls);
            let (rs, re) = (g + 4 + slot_off, 4 * n + 45 * m);
            fr[slot as usize] = add(&mut jobs, rs, re, re - rs);
        }
        fill_left.push(fl);
        fill_right.push(fr);
    }

    let instance = Instance::new(w, jobs).expect("gadget construction is valid");
    let witness_profit = (42 * m as u128 + 14) * psq as u128
        + 405 * (m as u128) * (m as u128)
        + 45 * (n as u128) * (n as u128)
        + 16 * m as u128;
    Ok(GadgetBuild {
        instance,
        xc: xc.clone(),
        profit_base: p,
        witness_profit,
        ids: GadgetIds {
            left,
            right,
            core,
            elem_left,
            elem_right,
            fill_left,
            fill_right,
        },
    })
}

impl GadgetBuild {
    /// Writes down the full-profit coloring that a known cover induces.
    /// Fails only when the question carries no cover.
    pub fn witness(&self) -> Result<ContiguousColoring, GenError> {
        let cover = self.xc.cover.as_ref().ok_or(GenError::MissingCover)?;
        let n = self.xc.n;
        let m = self.xc.sets.len() as u64;
        let mut in_cover = vec![false; self.xc.sets.len()];
        for &i in cover {
            in_cover[i] = true;
        }

        let mut blocks: BTreeMap<JobId, Block> = BTreeMap::new();
        let put = |blocks: &mut BTreeMap<JobId, Block>, id: JobId, first: u64, len: u64| {
            let clash = blocks.insert(id, Block { first, len });
            debug_assert!(clash.is_none(), "job {id} colored twice");
        };

        // Special borders around the top of the color range.
        let li = |i: u64| self.ids.left[i as usize - 1];
        let ri = |i: u64| self.ids.right[i as usize - 1];
        put(&mut blocks, li(3 * m + 2), 1, 1);
        put(&mut blocks, ri(3 * m + 2), 1, 1);
        put(&mut blocks, li(3 * m + 3), 2, 3);
        put(&mut blocks, ri(3 * m + 3), 2, 3);
        put(&mut blocks, li(3 * m + 1), 5, 3);
        put(&mut blocks, ri(3 * m + 1), 9 * m + 5, 3);

        let mut extra = n;
        for si in 0..self.xc.sets.len() {
            let i = si as u64 + 1;
            // The four color bands this gadget hands across its window.
            let band = [9 * i - 4, 9 * i - 1, 9 * i + 2, 9 * i + 5];
            let core = &self.ids.core[si];
            if in_cover[si] {
                for t in 4..8 {
                    put(&mut blocks, core[t], 1, 1);
                }
                for t in 12..16 {
                    put(&mut blocks, core[t], 2, 3);
                }
                for t in 8..12 {
                    put(&mut blocks, core[t], band[t - 8], 3);
                }
                let mut elems = self.xc.sets[si];
                elems.sort_unstable();
                for (slot, &e) in elems.iter().enumerate() {
                    put(&mut blocks, self.ids.elem_right[si][slot], band[slot], 3);
                    put(&mut blocks, self.ids.elem_left[si][slot], band[slot + 1], 3);
                    put(&mut blocks, ri(e), band[slot], 3);
                    put(&mut blocks, li(e), band[slot + 1], 3);
                }
            } else {
                extra += 1;
                let q = extra;
                for t in 0..4 {
                    put(&mut blocks, core[t], 1, 1);
                }
                for t in 8..12 {
                    put(&mut blocks, core[t], 2, 3);
                }
                for t in 12..16 {
                    put(&mut blocks, core[t], band[t - 12], 3);
                }
                for slot in 0..3 {
                    put(&mut blocks, self.ids.fill_right[si][slot], band[slot], 3);
                    put(&mut blocks, self.ids.fill_left[si][slot], band[slot + 1], 3);
                    let b = 3 * q - 2 + slot as u64;
                    put(&mut blocks, ri(b), band[slot], 3);
                    put(&mut blocks, li(b), band[slot + 1], 3);
                }
            }
        }
        Ok(ContiguousColoring { blocks })
    }
}
