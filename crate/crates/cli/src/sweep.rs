//! Multi-instance runs on a bounded rayon pool. Results come back sorted by
//! instance key whatever the scheduling.

use anyhow::{anyhow, ensure, Context, Result};
use rayon::prelude::*;
use spinor_lfunc_core::characters::{NormalizationExponent, SimilitudeFamily};
use spinor_lfunc_core::identity::{
    verify_case_b_factorization, verify_symalg, verify_unramified_identity, VerificationReport,
};
use spinor_lfunc_core::lfactors::{CaseKind, IdentityCase};
use spinor_lfunc_core::satake::satake_gl;

use crate::config::Instance;
use crate::params::{case_parameters, symalg_instance};
use crate::report::InstanceJson;

/// Every shape exercised by the acceptance suite.
pub const DEFAULT_GRID: &str = "a-odd:1:1,a-odd:1:2,a-odd:2:2,a-odd:2:3,\
a-even-split:1:2,a-even-split:2:3,\
a-even-quasi-split:1:2,a-even-quasi-split:2:3,\
b-odd:1:2,b-odd:2:3,b-even-split:1:1,b-even-split:2:2";

/// Parses `case:n:m,case:n:m,…`.
pub fn parse_grid(grid: &str) -> Result<Vec<IdentityCase>> {
    let mut out = Vec::new();
    for entry in grid.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let fields: Vec<&str> = entry.split(':').collect();
        ensure!(fields.len() == 3, "grid entry {entry:?} is not case:n:m");
        let kind = CaseKind::from_label(fields[0]).ok_or_else(|| anyhow!("unknown case {:?}", fields[0]))?;
        let n = fields[1].parse().with_context(|| format!("bad n in {entry:?}"))?;
        let m = fields[2].parse().with_context(|| format!("bad m in {entry:?}"))?;
        out.push(IdentityCase::new(kind, n, m).with_context(|| format!("grid entry {entry:?}"))?);
    }
    ensure!(!out.is_empty(), "empty grid");
    Ok(out)
}

pub fn grid_instances(grid: &[IdentityCase], seed_base: u64, seeds: u64) -> Result<Vec<Instance>> {
    let end = seed_base.checked_add(seeds).context("seed range overflows")?;
    Ok(grid
        .iter()
        .flat_map(|case| {
            (seed_base..end).map(move |seed| {
                let (data, tau) = case_parameters(case, seed);
                Instance { case: *case, seed: Some(seed), data, tau }
            })
        })
        .collect())
}

fn sort_key(case: &IdentityCase, seed: Option<u64>) -> (usize, usize, usize, Option<u64>) {
    let kind = CaseKind::ALL.iter().position(|&k| k == case.kind()).expect("listed");
    (kind, case.n(), case.m(), seed)
}

pub fn instance_key(case: &IdentityCase, seed: Option<u64>) -> String {
    match seed {
        Some(s) => format!("{case} seed={s}"),
        None => format!("{case} explicit"),
    }
}

/// One instance: the case A identity or the case B factorization.
pub fn verify_instance(
    instance: &Instance,
    order: usize,
    exponent: NormalizationExponent,
) -> spinor_lfunc_core::Result<VerificationReport> {
    if instance.case.kind().is_case_a() {
        verify_unramified_identity(&instance.case, &instance.data, &instance.tau, order, exponent)
    } else {
        verify_case_b_factorization(&instance.case, &instance.data, &satake_gl(&instance.tau)?, order)
    }
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build().context("building the worker pool")
}

/// Runs every instance; failures are recorded, never propagated.
pub fn run_instances(
    instances: &[Instance],
    order: usize,
    exponent: NormalizationExponent,
    jobs: Option<usize>,
) -> Result<Vec<InstanceJson>> {
    let mut results: Vec<_> = pool(jobs)?.install(|| {
        instances
            .par_iter()
            .map(|i| {
                let result = verify_instance(i, order, exponent).map_err(|e| e.to_string());
                (sort_key(&i.case, i.seed), InstanceJson::new(instance_key(&i.case, i.seed), i.seed, result))
            })
            .collect()
    });
    results.sort_by_key(|r| r.0);
    Ok(results.into_iter().map(|(_, r)| r).collect())
}

pub fn symalg_key(family: SimilitudeFamily, m: usize, n: usize, r: usize, seed: u64) -> String {
    let f = match family {
        SimilitudeFamily::GSp => "gsp",
        SimilitudeFamily::GSO => "gso",
    };
    format!("{f} m={m} n={n} r={r} seed={seed}")
}

pub fn run_symalg(
    cases: &[(SimilitudeFamily, usize, usize, usize, u64)],
    exponent: NormalizationExponent,
    jobs: Option<usize>,
) -> Result<Vec<InstanceJson>> {
    let mut results: Vec<_> = pool(jobs)?.install(|| {
        cases
            .par_iter()
            .map(|&(family, m, n, r, seed)| {
                let result = symalg_instance(family, m, n, r, seed)
                    .and_then(|inst| verify_symalg(&inst, exponent))
                    .map_err(|e| e.to_string());
                ((family, m, n, r, seed), InstanceJson::new(symalg_key(family, m, n, r, seed), Some(seed), result))
            })
            .collect()
    });
    results.sort_by_key(|r| r.0);
    Ok(results.into_iter().map(|(_, r)| r).collect())
}
