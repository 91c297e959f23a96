//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use jd3_core::asymptotics::Regime;
use jd3_core::verify::{
    verify_asymptotics, verify_even_dims, verify_lemma, verify_odd_vanishing, verify_properties,
    Report, RunConfig,
};

/// Solutions of `2a + s·b + t·c = n` in nonnegative integers, by enumeration.
fn count_solutions(n: u32, s: u32, t: u32) -> usize {
    let mut count = 0;
    for b in 0..=n / s {
        for c in 0..=(n - s * b) / t {
            count += usize::from((n - s * b - t * c).is_multiple_of(2));
        }
    }
    count
}

fn odd_oracle(l: u32) -> usize {
    if l < 9 {
        0
    } else {
        count_solutions(l - 9, 6, 4)
    }
}

fn actual_of<'a>(r: &'a Report, id: &str) -> Option<&'a str> {
    r.checks
        .iter()
        .find(|c| c.id == id)
        .map(|c| c.actual.as_str())
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn from_report(r: &Report, extra: Result<(), String>) -> Outcome {
    if !r.all_passed() {
        let bad: Vec<&str> = r
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect();
        return fail(format!("failing checks: {}", bad.join(", ")));
    }
    match extra {
        Ok(()) => Outcome {
            ok: true,
            detail: format!("{} checks", r.summary.total),
        },
        Err(e) => fail(e),
    }
}

fn odd_vanishing() -> Outcome {
    let r = match verify_odd_vanishing(29) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let extra = (1..=29).step_by(2).try_for_each(|l| {
        let q = actual_of(&r, &format!("odd.quotient_dim.L={l}"));
        let dim = actual_of(&r, &format!("odd.ambient_dim.L={l}"));
        let oracle = odd_oracle(l).to_string();
        if q != Some("0") {
            return Err(format!("quotient at L={l} is {q:?}"));
        }
        if dim != Some(oracle.as_str()) {
            return Err(format!(
                "ambient at L={l} is {dim:?}, enumeration gives {oracle}"
            ));
        }
        Ok(())
    });
    from_report(&r, extra)
}

fn even_dims() -> Outcome {
    let r = match verify_even_dims(30) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let extra = (0..=30).step_by(2).try_for_each(|n| {
        let got = actual_of(&r, &format!("even.threeway.n={n}"));
        let oracle = count_solutions(n, 4, 6);
        if got != Some(oracle.to_string().as_str()) {
            return Err(format!("n={n}: {got:?} vs enumeration {oracle}"));
        }
        Ok(())
    });
    let spots: Vec<&str> = (0..=12)
        .step_by(2)
        .filter_map(|n| actual_of(&r, &format!("even.threeway.n={n}")))
        .collect();
    let extra = extra.and_then(|()| {
        if spots == ["1", "1", "2", "3", "4", "5", "7"] {
            Ok(())
        } else {
            Err(format!("spot values {spots:?}"))
        }
    });
    from_report(&r, extra)
}

fn lemma() -> Outcome {
    let r = match verify_lemma(8) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let extra = (0..=8).try_for_each(|d| {
        let oracle = odd_oracle(2 * d + 9).to_string();
        for kind in ["rank", "span"] {
            let got = actual_of(&r, &format!("lemma.{kind}.d={d}"));
            if got != Some(oracle.as_str()) {
                return Err(format!(
                    "{kind} at d={d} is {got:?}, enumeration gives {oracle}"
                ));
            }
        }
        Ok(())
    });
    from_report(&r, extra)
}

fn asymptotics() -> Outcome {
    let r = match verify_asymptotics(6, &[Regime::one(), Regime::two()]) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let triples_oracle: usize = (0..=6u32)
        .map(|d| {
            (0..=d / 3)
                .map(|m| ((d - 3 * m) / 2 + 1) as usize)
                .sum::<usize>()
        })
        .sum();
    let extra = if r.summary.total == 2 * triples_oracle {
        Ok(())
    } else {
        Err(format!(
            "{} checks, expected {}",
            r.summary.total,
            2 * triples_oracle
        ))
    };
    from_report(&r, extra)
}

fn properties() -> Outcome {
    let r = match verify_properties(RunConfig::default().seed, 6) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let required = [
        ("prop.projector_idempotent", "100"),
        ("prop.delta_divides_skew", "50"),
        ("prop.xy_roundtrip", "true"),
        ("prop.x1_plus_x5_is_x3_is_x2_minus_x4", "true"),
        ("prop.regime_homomorphism", "50"),
    ];
    let extra = required
        .iter()
        .try_for_each(|&(id, want)| match actual_of(&r, id) {
            Some(got) if got == want => Ok(()),
            got => Err(format!("{id}: {got:?}")),
        });
    from_report(&r, extra)
}

fn strip_elapsed(json: &str) -> Result<serde_json::Value, String> {
    let mut v: serde_json::Value = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let checks = v["checks"].as_array_mut().ok_or("no checks array")?;
    for c in checks {
        c.as_object_mut()
            .ok_or("check is not an object")?
            .remove("elapsed_ms");
    }
    Ok(v)
}

fn determinism() -> Outcome {
    let run = || -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_jd3"))
            .args(["all", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("jd3 all exited with {}", out.status));
        }
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let compare = || -> Result<usize, String> {
        let (a, b) = (run()?, run()?);
        let (sa, sb) = (strip_elapsed(&a)?, strip_elapsed(&b)?);
        if sa != sb {
            return Err("reports differ".into());
        }
        let without_elapsed = |s: &str| -> String {
            s.lines()
                .filter(|l| !l.contains("\"elapsed_ms\""))
                .collect()
        };
        if without_elapsed(&a) != without_elapsed(&b) {
            return Err("reports differ outside elapsed_ms".into());
        }
        Ok(sa["checks"].as_array().map_or(0, Vec::len))
    };
    match compare() {
        Ok(n) => Outcome {
            ok: true,
            detail: format!("{n} checks, identical"),
        },
        Err(e) => fail(e),
    }
}

/// Name, time budget in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 odd vanishing, L <= 29", 30, odd_vanishing),
        ("2 even dimensions, n <= 30", 10, even_dims),
        ("3 Q-family independence and span, d <= 8", 20, lemma),
        (
            "4 leading terms, n+2k+3m <= 6, both regimes",
            10,
            asymptotics,
        ),
        ("5 property suite", 10, properties),
        ("6 determinism of `jd3 all --json`", 120, determinism),
    ];
    let mut all_ok = true;
    for (name, limit, f) in criteria {
        let t = Instant::now();
        let mut o = f();
        let elapsed = t.elapsed();
        if elapsed > Duration::from_secs(limit) {
            o.ok = false;
            o.detail = format!("{}; over the {limit} s budget", o.detail);
        }
        all_ok &= o.ok;
        println!(
            "{} criterion {name}: {} ({:.2} s)",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
