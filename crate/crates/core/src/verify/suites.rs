use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::properties::verify_properties;
use super::report::{CheckRecord, Report};
use crate::asymptotics::{verify_q_asymptotics, Regime};
use crate::diagrams::{
    delta_sigma3_cofactor, eq8_span_in, even_closed_form, family_slice_expanded, family_slice_in,
    hilbert_coefficients, odd_target_dim, psi4_image_in, tet_slice, tsq_odd_dim, Family, Parity,
};
use crate::error::Result;
use crate::lemma::{
    lemma_legs, lemma_rank, lemma_triples, summand_in_lemma_subring, symmetrizer_matches,
};

/// Largest odd degree at which the alternative spanning families are compared.
pub const SPAN_CHECK_MAX_LEGS: u32 = 15;
/// Largest odd degree at which the ψ₄ span is recomputed by full expansion.
pub const EXPANSION_CHECK_MAX_LEGS: u32 = 11;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_odd_legs: u32,
    pub max_even_legs: u32,
    pub max_lemma_d: u32,
    pub max_asym_d: u32,
    pub regimes: Vec<Regime>,
    pub threads: usize,
    pub seed: u64,
    /// Test hook: shifts every even closed-form value by one.
    pub corrupt_closed_form: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_odd_legs: 29,
            max_even_legs: 30,
            max_lemma_d: 8,
            max_asym_d: 6,
            regimes: vec![Regime::one(), Regime::two()],
            threads: 1,
            seed: 0x6a64_3301,
            corrupt_closed_form: false,
        }
    }
}

/// Runs `f` on a dedicated pool of `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    pool.install(f)
}

fn legs_param(l: u32) -> [(&'static str, Value); 1] {
    [("L", json!(l))]
}

/// Fans out over independent degrees and keeps their order.
fn collect_par(
    degrees: Vec<u32>,
    f: impl Fn(u32) -> Result<Vec<CheckRecord>> + Sync + Send,
) -> Result<Vec<CheckRecord>> {
    let per: Vec<Vec<CheckRecord>> = degrees.into_par_iter().map(f).collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

fn odd_checks(l: u32) -> Result<Vec<CheckRecord>> {
    let p = legs_param(l);
    let mut out = Vec::new();

    let t = Instant::now();
    let ambient = tet_slice(l, Parity::Odd)?;
    let target = odd_target_dim(l)?;
    out.push(CheckRecord::new(
        format!("odd.ambient_dim.L={l}"),
        &p,
        target,
        ambient.dim,
        t.elapsed(),
    ));
    let series = hilbert_coefficients(l, 9)[l as usize];
    out.push(CheckRecord::new(
        format!("odd.series.L={l}"),
        &p,
        target,
        series,
        t.elapsed(),
    ));

    let t = Instant::now();
    let divisible = ambient
        .basis_polys()
        .iter()
        .filter(|b| delta_sigma3_cofactor(b).is_ok())
        .count();
    out.push(CheckRecord::new(
        format!("odd.delta_sigma3.L={l}"),
        &p,
        ambient.dim,
        divisible,
        t.elapsed(),
    ));

    let t = Instant::now();
    let psi4 = psi4_image_in(&ambient)?;
    out.push(CheckRecord::new(
        format!("odd.psi4_dim.L={l}"),
        &p,
        ambient.dim,
        psi4.dim,
        t.elapsed(),
    ));
    let quotient = tsq_odd_dim(l)? + ambient.dim - psi4.dim;
    out.push(CheckRecord::new(
        format!("odd.quotient_dim.L={l}"),
        &p,
        0,
        quotient,
        t.elapsed(),
    ));

    if l <= SPAN_CHECK_MAX_LEGS {
        let t = Instant::now();
        let eq8 = eq8_span_in(&ambient)?;
        out.push(CheckRecord::new(
            format!("odd.span_eq8_psi4.L={l}"),
            &p,
            true,
            eq8.span_equal(&psi4)?,
            t.elapsed(),
        ));
        let t = Instant::now();
        let alt = family_slice_in(Family::Alt, &ambient)?;
        out.push(CheckRecord::new(
            format!("odd.span_alt_psi4.L={l}"),
            &p,
            true,
            alt.span_equal(&psi4)?,
            t.elapsed(),
        ));
    }
    if l <= EXPANSION_CHECK_MAX_LEGS {
        let t = Instant::now();
        let expanded = family_slice_expanded(Family::Psi4, l)?;
        out.push(CheckRecord::new(
            format!("odd.psi4_expanded.L={l}"),
            &p,
            true,
            expanded.span_equal(&psi4)?,
            t.elapsed(),
        ));
    }
    Ok(out)
}

/// Odd-degree vanishing for every odd `L ≤ max_legs`.
pub fn verify_odd_vanishing(max_legs: u32) -> Result<Report> {
    let degrees = (1..=max_legs).step_by(2).collect();
    Ok(Report::new("odd", collect_par(degrees, odd_checks)?))
}

pub(crate) fn even_report(max_legs: u32, corrupt: bool) -> Result<Report> {
    let series = hilbert_coefficients(max_legs, 0);
    let degrees = (0..=max_legs).step_by(2).collect();
    let checks = collect_par(degrees, |n| {
        let t = Instant::now();
        let rank = tet_slice(n, Parity::Even)?.dim as u64;
        let closed = even_closed_form(n)? + u64::from(corrupt);
        let s = series[n as usize];
        let actual = if rank == s {
            rank.to_string()
        } else {
            format!("rank={rank},series={s}")
        };
        Ok(vec![CheckRecord::new(
            format!("even.threeway.n={n}"),
            &[("n", json!(n))],
            closed,
            actual,
            t.elapsed(),
        )])
    })?;
    Ok(Report::new("even", checks))
}

/// Three-way agreement of even dimensions for every even `n ≤ max_legs`.
pub fn verify_even_dims(max_legs: u32) -> Result<Report> {
    even_report(max_legs, false)
}

fn lemma_checks(d: u32) -> Result<Vec<CheckRecord>> {
    let l = lemma_legs(d);
    let p = [("d", json!(d)), ("L", json!(l))];
    let mut out = Vec::new();

    let t = Instant::now();
    let ambient = tet_slice(l, Parity::Odd)?;
    let lr = lemma_rank(d, &ambient)?;
    let count = lr.triples.len();
    let elapsed = t.elapsed();
    out.push(CheckRecord::new(
        format!("lemma.in_slice.d={d}"),
        &p,
        count,
        lr.in_slice,
        elapsed,
    ));
    out.push(CheckRecord::new(
        format!("lemma.rank.d={d}"),
        &p,
        count,
        lr.rank,
        elapsed,
    ));
    out.push(CheckRecord::new(
        format!("lemma.span.d={d}"),
        &p,
        odd_target_dim(l)?,
        lr.rank,
        elapsed,
    ));

    let t = Instant::now();
    let mut members = 0;
    for &(n, m, k) in &lr.triples {
        members += usize::from(summand_in_lemma_subring(n, m, k)?);
    }
    out.push(CheckRecord::new(
        format!("lemma.membership.d={d}"),
        &p,
        count,
        members,
        t.elapsed(),
    ));

    let t = Instant::now();
    let mut matches = 0;
    for &(n, m, k) in &lr.triples {
        matches += usize::from(symmetrizer_matches(n, m, k)?);
    }
    out.push(CheckRecord::new(
        format!("lemma.symmetrizer.d={d}"),
        &p,
        count,
        matches,
        t.elapsed(),
    ));
    Ok(out)
}

/// Independence and spanning of the Q-family for every `d ≤ max_d`.
pub fn verify_lemma(max_d: u32) -> Result<Report> {
    Ok(Report::new(
        "lemma",
        collect_par((0..=max_d).collect(), lemma_checks)?,
    ))
}

/// Leading terms of Q^{n,m,k} for every `n + 2k + 3m ≤ max_d` under each regime.
pub fn verify_asymptotics(max_d: u32, regimes: &[Regime]) -> Result<Report> {
    let cases: Vec<((u32, u32, u32), &Regime)> = (0..=max_d)
        .flat_map(lemma_triples)
        .flat_map(|t| regimes.iter().map(move |r| (t, r)))
        .collect();
    let checks = cases
        .into_par_iter()
        .map(|((n, m, k), r)| {
            let t = Instant::now();
            let c = verify_q_asymptotics(n, m, k, r);
            let params = [
                ("n", json!(n)),
                ("m", json!(m)),
                ("k", json!(k)),
                ("a", json!(r.a.to_string())),
                ("b", json!(r.b.to_string())),
                ("c", json!(r.c.to_string())),
            ];
            CheckRecord::new(
                format!("asym.{}.n={n}.m={m}.k={k}", r.id.label()),
                &params,
                c.expected_string(),
                c.actual_string(),
                t.elapsed(),
            )
        })
        .collect();
    Ok(Report::new("asymptotics", checks))
}

/// Every suite plus the property suite, merged into one report.
pub fn run_all(cfg: &RunConfig) -> Result<Report> {
    with_threads(cfg.threads, || {
        let reports = vec![
            verify_odd_vanishing(cfg.max_odd_legs)?,
            even_report(cfg.max_even_legs, cfg.corrupt_closed_form)?,
            verify_lemma(cfg.max_lemma_d)?,
            verify_asymptotics(cfg.max_asym_d, &cfg.regimes)?,
            verify_properties(cfg.seed, cfg.max_asym_d)?,
        ];
        Ok(Report::merge("all", reports))
    })
}
