//! Seeded randomized cross-checks between the generators, the solvers, the
//! verifiers, and the oracles on small instances.

use flexalloc::frac::parse_frac;
use flexalloc::gen::{gen_random, Profile};
use flexalloc::model::{verify_fbap, verify_fsap, Instance, Job, SolutionFile};
use flexalloc::oracle::{oracle_fbap, oracle_fsap, DEFAULT_NODE_BUDGET};
use flexalloc::paging::paging_fba_run;
use flexalloc::proper::proper_fsap;
use flexalloc::uniform::{a_max_small, uniform_ptas};

fn zero_minima(inst: &Instance) -> Instance {
    let jobs = inst.jobs.iter().map(|j| Job { rmin: 0, ..j.clone() }).collect();
    Instance::new(inst.capacity, jobs).unwrap()
}

#[test]
fn paging_output_always_verifies() {
    let mut checked = 0u32;
    for seed in 0..200u64 {
        let n = 1 + (seed % 8) as usize;
        let w = 2 + seed % 7;
        let inst = gen_random(Profile::General, n, w, 10_000 + seed).unwrap();
        // Minima can be jointly unservable; those seeds prove nothing here.
        let Ok(run) = paging_fba_run(&inst) else { continue };
        let report = verify_fbap(&inst, &run.allocation)
            .unwrap_or_else(|e| panic!("seed {seed}: sweep output rejected: {e}"));
        let by_hand: u64 = inst
            .jobs
            .iter()
            .map(|j| j.profit * run.allocation.amount(j.id))
            .sum();
        assert_eq!(report.total, by_hand, "seed {seed}");
        checked += 1;
    }
    assert!(checked >= 150, "too many infeasible seeds: {checked}");
}

#[test]
fn instance_json_round_trip() {
    for (which, profile) in [
        Profile::General,
        Profile::Proper,
        Profile::Uniform { max: 3 },
    ]
    .into_iter()
    .enumerate()
    {
        for seed in 0..40u64 {
            let inst = gen_random(profile, 6, 5, 20_000 + seed).unwrap();
            let text = serde_json::to_string(&inst).unwrap();
            let back: Instance = serde_json::from_str(&text).unwrap();
            assert_eq!(back, inst, "profile {which} seed {seed}");
            assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }
}

#[test]
fn solution_files_serialize_deterministically() {
    for seed in 0..40u64 {
        let inst = zero_minima(&gen_random(Profile::General, 6, 5, 30_000 + seed).unwrap());
        let run = paging_fba_run(&inst).unwrap();
        let file = SolutionFile::from_fbap(&inst, &run.allocation).unwrap();
        let once = serde_json::to_string(&file).unwrap();
        let twice = serde_json::to_string(&file).unwrap();
        assert_eq!(once, twice);
        let back: SolutionFile = serde_json::from_str(&once).unwrap();
        assert_eq!(back.verify(&inst).unwrap().total, file.total_profit);

        let opt = oracle_fsap(&inst, DEFAULT_NODE_BUDGET).unwrap();
        let file = SolutionFile::from_fsap(&inst, &opt.coloring).unwrap();
        let reread: SolutionFile =
            serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(reread, file, "seed {seed}");
        assert_eq!(reread.verify(&inst).unwrap().total, opt.profit);
    }
}

#[test]
fn shifting_time_changes_no_profit() {
    for seed in 0..40u64 {
        let inst = zero_minima(&gen_random(Profile::General, 5, 5, 40_000 + seed).unwrap());
        let shifted = Instance::new(
            inst.capacity,
            inst.jobs
                .iter()
                .map(|j| Job { start: j.start + 1000, end: j.end + 1000, ..j.clone() })
                .collect(),
        )
        .unwrap();
        let before = paging_fba_run(&inst).unwrap();
        let after = paging_fba_run(&shifted).unwrap();
        assert_eq!(
            verify_fbap(&inst, &before.allocation).unwrap().total,
            verify_fbap(&shifted, &after.allocation).unwrap().total,
            "seed {seed}"
        );
        assert_eq!(
            oracle_fsap(&inst, DEFAULT_NODE_BUDGET).unwrap().profit,
            oracle_fsap(&shifted, DEFAULT_NODE_BUDGET).unwrap().profit,
            "seed {seed}"
        );
    }
}

#[test]
fn contiguous_optimum_never_beats_flexible() {
    for seed in 0..60u64 {
        let inst = zero_minima(&gen_random(Profile::General, 6, 6, 50_000 + seed).unwrap());
        let fsap = oracle_fsap(&inst, DEFAULT_NODE_BUDGET).unwrap().profit;
        let fbap = oracle_fbap(&inst, DEFAULT_NODE_BUDGET).unwrap().profit;
        assert!(fsap <= fbap, "seed {seed}: contiguous {fsap} beat flexible {fbap}");
    }
}

#[test]
fn every_coloring_solver_verifies_and_reports_its_own_profit() {
    let eps = parse_frac("1/2").unwrap();
    for seed in 0..40u64 {
        let uniform = gen_random(Profile::Uniform { max: 3 }, 6, 5, 60_000 + seed).unwrap();
        let run = a_max_small(&uniform).unwrap();
        assert_eq!(verify_fsap(&uniform, &run.coloring).unwrap().total, run.profit);
        let run = uniform_ptas(&uniform, eps).unwrap();
        assert_eq!(verify_fsap(&uniform, &run.coloring).unwrap().total, run.profit);

        let proper = gen_random(Profile::Proper, 4, 16, 70_000 + seed).unwrap();
        let run = proper_fsap(&proper, parse_frac("1/4").unwrap()).unwrap();
        assert_eq!(verify_fsap(&proper, &run.coloring).unwrap().total, run.profit);
    }
}
