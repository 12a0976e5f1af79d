//! Acceptance run: one line per criterion, then a single assertion over all
//! of them so every line is printed even when an early one fails.
//!
//! Run with `cargo test -p aqtab-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use aqtab_core::oracle::{
    sweep_dirac_equivalence, sweep_nice_grid, sweep_overlap, sweep_positional_lemma,
    sweep_range_ladder,
};
use aqtab_core::{
    build_quasitableau, build_signed_tableau, is_antitableau, overlap_by_definition,
    overlap_by_formula, singularity, validate_input, LambdaParam, NiceGridReport, SweepReport,
};

/// Wall-clock limit for one golden build, taken as the median of repeated runs.
const GOLDEN_BUDGET: Duration = Duration::from_millis(1);
const GOLDEN_REPEATS: usize = 201;
const OVERLAP_BUDGET: Duration = Duration::from_secs(60);
const DIRAC_BUDGET: Duration = Duration::from_secs(300);

const SWEEP_N_MAX: usize = 8;
const GRID_N_MAX: usize = 7;
const GRID_SPAN: usize = 9;
/// The full ladder grid has `(2 span + 1)^(r-1)` points per datum, so it runs
/// on a smaller span than the nice grid.
const LADDER_N_MAX: usize = 7;
const LADDER_SPAN: usize = 3;

struct Outcome {
    id: u8,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn median_time<T>(mut f: impl FnMut() -> T) -> Duration {
    let mut times: Vec<Duration> = (0..GOLDEN_REPEATS)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .collect();
    times.sort();
    times[GOLDEN_REPEATS / 2]
}

fn sweep_line(report: &SweepReport, elapsed: Duration) -> String {
    format!(
        "{} datums, {} points, {} agreements, {} disagreements in {:.2?}{}",
        report.datums_tested,
        report.lambda_points,
        report.agreements,
        report.disagreements,
        elapsed,
        report
            .first_counterexample
            .as_ref()
            .map(|c| format!("; first counterexample {c:?}"))
            .unwrap_or_default()
    )
}

fn golden_signed() -> Outcome {
    let (d, _) = validate_input(&[(2, 1), (3, 1), (0, 2)], &[0, 2, 4]).unwrap();
    let t = build_signed_tableau(&d);
    let shape_ok = t.shape() == [3, 2, 2, 1, 1];
    let rows = t.sign_strings().unwrap();
    let rows_ok = rows == ["-+-", "+-", "+-", "+", "+"];
    let time = median_time(|| build_signed_tableau(&d));
    Outcome {
        id: 1,
        name: "golden signed tableau",
        pass: shape_ok && rows_ok && time < GOLDEN_BUDGET,
        detail: format!("shape {:?}, rows {rows:?}, median {time:.2?}", t.shape()),
    }
}

fn golden_quasitableau() -> Outcome {
    let (d, l) = validate_input(&[(2, 1), (3, 1), (0, 2)], &[0, 2, 4]).unwrap();
    let t = build_quasitableau(&d, &l);
    let rows: Vec<Vec<i64>> = (1..=t.num_rows())
        .map(|r| {
            t.row_entries(r)
                .unwrap()
                .iter()
                .map(|e| e.to_int().unwrap())
                .collect()
        })
        .collect();
    let expect: Vec<Vec<i64>> = vec![vec![4, 3, 1], vec![3, 2], vec![2, 0], vec![1], vec![0]];
    let anti = is_antitableau(&t) == Ok(true);
    let primed = build_quasitableau(&d, &LambdaParam::new(vec![0, 3, 4]));
    let primed_not_anti = is_antitableau(&primed) == Ok(false);
    let time = median_time(|| build_quasitableau(&d, &l));
    Outcome {
        id: 2,
        name: "golden quasitableau",
        pass: rows == expect && anti && primed_not_anti && time < GOLDEN_BUDGET,
        detail: format!(
            "rows {rows:?}, antitableau {anti}, shifted lambda rejected {primed_not_anti}, median {time:.2?}"
        ),
    }
}

fn golden_overlaps() -> Outcome {
    let (d, l) = validate_input(&[(2, 1), (3, 1), (0, 2)], &[0, 2, 4]).unwrap();
    let t = build_quasitableau(&d, &l);
    let values: Vec<(usize, usize, usize)> = (1..=2)
        .map(|i| {
            (
                overlap_by_definition(&t, i).unwrap(),
                overlap_by_formula(&d, i).unwrap(),
                singularity(&t, i).unwrap(),
            )
        })
        .collect();
    Outcome {
        id: 3,
        name: "golden overlaps and singularities",
        pass: values.iter().all(|&v| v == (2, 2, 2)),
        detail: format!("(definition, formula, sing) per pair: {values:?}"),
    }
}

fn overlap_sweep() -> Outcome {
    let start = Instant::now();
    let report = sweep_overlap(SWEEP_N_MAX);
    let elapsed = start.elapsed();
    Outcome {
        id: 4,
        name: "overlap formula, exhaustive n <= 8",
        pass: report.passed() && report.agreements > 1000 && elapsed < OVERLAP_BUDGET,
        detail: sweep_line(&report, elapsed),
    }
}

fn dirac_sweep() -> Outcome {
    let start = Instant::now();
    let report = sweep_dirac_equivalence(GRID_N_MAX, GRID_SPAN);
    let elapsed = start.elapsed();
    Outcome {
        id: 5,
        name: "Dirac index equivalence, n <= 7, span 9",
        pass: report.passed() && report.lambda_points > 0 && elapsed < DIRAC_BUDGET,
        detail: sweep_line(&report, elapsed),
    }
}

fn positional_sweep() -> Outcome {
    let start = Instant::now();
    let report = sweep_positional_lemma(SWEEP_N_MAX);
    let elapsed = start.elapsed();
    Outcome {
        id: 6,
        name: "positional lemma, exhaustive n <= 8",
        pass: report.passed() && report.agreements > 1000,
        detail: sweep_line(&report, elapsed),
    }
}

fn grid_line(r: &NiceGridReport, elapsed: Duration) -> String {
    format!(
        "{} nice points, {} nonzero, {} replay mismatches in {:.2?}{}",
        r.nice_points,
        r.nonzero_points,
        r.replay_mismatches,
        elapsed,
        r.first_counterexample
            .as_ref()
            .map(|c| format!("; first counterexample {c:?}"))
            .unwrap_or_default()
    )
}

fn nice_grid_outcomes() -> [Outcome; 3] {
    let start = Instant::now();
    let r = sweep_nice_grid(GRID_N_MAX, GRID_SPAN);
    let elapsed = start.elapsed();
    let common = grid_line(&r, elapsed);
    let replay_ok = r.replay_mismatches == 0 && r.nonzero_points > 0;
    [
        Outcome {
            id: 7,
            name: "nonzero implies antitableau; sing test matches gap test",
            pass: replay_ok && r.antitableau_failures == 0 && r.mediocre_disagreements == 0,
            detail: format!(
                "{} antitableau failures, {} sing/gap disagreements, {} vanishing points still antitableaux (observed only); {common}",
                r.antitableau_failures, r.mediocre_disagreements, r.vanishing_antitableaux
            ),
        },
        Outcome {
            id: 8,
            name: "shape of R under hp1",
            pass: replay_ok && r.r_structure_failures == 0,
            detail: format!("{} failures; {common}", r.r_structure_failures),
        },
        Outcome {
            id: 9,
            name: "nonzero implies dominant K-type weight",
            pass: replay_ok && r.ktype_failures == 0,
            detail: format!("{} failures; {common}", r.ktype_failures),
        },
    ]
}

fn ladder_sweep() -> Outcome {
    let start = Instant::now();
    let report = sweep_range_ladder(LADDER_N_MAX, LADDER_SPAN);
    let elapsed = start.elapsed();
    Outcome {
        id: 10,
        name: "range ladder and translation invariance, n <= 7, span 3",
        pass: report.passed() && report.lambda_points > 0,
        detail: sweep_line(&report, elapsed),
    }
}

#[test]
fn acceptance() {
    let mut outcomes = vec![
        golden_signed(),
        golden_quasitableau(),
        golden_overlaps(),
        overlap_sweep(),
        dirac_sweep(),
        positional_sweep(),
    ];
    outcomes.extend(nice_grid_outcomes());
    outcomes.push(ladder_sweep());

    for o in &outcomes {
        println!(
            "criterion {:>2} {} : {} ({})",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
