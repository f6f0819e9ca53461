//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;

use qdate_core::dense::dense_grover;
use qdate_core::experiment::{amplitude_trace, expected_surface, sign_boundary, SweepSpec};
use qdate_core::rng::match_stream;
use qdate_core::strategies::{classic_sweep_propose, QuantumPlayer, SweepState};
use qdate_core::{
    closed_form_probability, expected_dt, optimal_iterations, run_grover, run_match, GameConfig,
    GameVariant, OracleSpec, WomanProfile,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn mc_tolerance(trials: u64) -> f64 {
    4.0 * (0.5 / trials as f64).sqrt()
}

fn within_time(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed > limit {
        return Err(format!("{label} took {elapsed:?}, limit {limit:?}"));
    }
    Ok(())
}

fn ac1_closed_form() -> Outcome {
    let start = Instant::now();
    let mut rng = match_stream(1, 0);
    let mut worst: f64 = 0.0;
    for n in 1..=10usize {
        let dim = 1usize << n;
        let targets: Vec<usize> = if dim <= 16 {
            (0..dim).collect()
        } else {
            (0..3).map(|_| rng.gen_range(0..dim)).collect()
        };
        for t in targets {
            let oracle = OracleSpec::new(n, t).map_err(|e| e.to_string())?;
            for k in 0..=40 {
                let p = run_grover(n, &oracle, k)
                    .and_then(|s| s.probability(t))
                    .map_err(|e| e.to_string())?;
                let want = ((2 * k + 1) as f64 * (1.0 / (dim as f64).sqrt()).asin())
                    .sin()
                    .powi(2);
                let err = (p - want).abs();
                worst = worst.max(err);
                if err > 1e-10 {
                    return Err(format!("N={dim} t={t} k={k}: {p} vs {want}"));
                }
            }
        }
    }
    within_time("closed-form sweep", start.elapsed(), Duration::from_secs(5))?;
    Ok(format!(
        "max |sim - closed form| = {worst:.2e} in {:?}",
        start.elapsed()
    ))
}

fn ac2_eight_one_iterate() -> Outcome {
    let oracle = OracleSpec::new(3, 6).map_err(|e| e.to_string())?;
    let state = run_grover(3, &oracle, 1).map_err(|e| e.to_string())?;
    let sim = state.probability(6).map_err(|e| e.to_string())?;
    let closed = closed_form_probability(8, 1);
    let trace = amplitude_trace(3, 6, 1).map_err(|e| e.to_string())?[1].p_target;
    for (name, v) in [
        ("simulated", sim),
        ("closed form", closed),
        ("trace", trace),
    ] {
        if (v - 0.78125).abs() > 1e-12 {
            return Err(format!("{name} probability {v} != 0.78125"));
        }
    }
    let samples = 100_000;
    let player = QuantumPlayer::new(&oracle, 1).map_err(|e| e.to_string())?;
    let mut rng = match_stream(2, 0);
    let mut hits = 0usize;
    for _ in 0..samples {
        hits += usize::from(player.propose(&mut rng).map_err(|e| e.to_string())? == 6);
    }
    let freq = hits as f64 / samples as f64;
    if (freq - 0.78125).abs() > 0.005 {
        return Err(format!("sampled frequency {freq} outside 0.78125 ± 0.005"));
    }
    Ok(format!("exact 0.78125, sampled {freq:.5} over {samples}"))
}

fn ac3_1024() -> Outcome {
    let start = Instant::now();
    let k = optimal_iterations(1024);
    if k != 25 {
        return Err(format!("optimal_iterations(1024) = {k}"));
    }
    let trace = amplitude_trace(10, 513, 25).map_err(|e| e.to_string())?;
    let p = trace[25].p_target;
    if p < 0.999 {
        return Err(format!("p(25) = {p}"));
    }
    within_time("N=1024 trace", start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "optimal k = 25, p(25) = {p:.6}, {:?}",
        start.elapsed()
    ))
}

fn ac4_dense() -> Outcome {
    let mut rng = match_stream(4, 0);
    let mut worst: f64 = 0.0;
    for n in 1..=4usize {
        for _ in 0..3 {
            let t = rng.gen_range(0..1usize << n);
            let oracle = OracleSpec::new(n, t).map_err(|e| e.to_string())?;
            for k in 0..=6 {
                let fast = run_grover(n, &oracle, k).map_err(|e| e.to_string())?;
                let dense = dense_grover(n, t, k).map_err(|e| e.to_string())?;
                let err = fast
                    .amplitudes()
                    .iter()
                    .zip(&dense)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                worst = worst.max(err);
                if err > 1e-12 {
                    return Err(format!("n={n} t={t} k={k}: max entry diff {err:e}"));
                }
            }
        }
    }
    Ok(format!("max entry-wise diff {worst:.2e}"))
}

fn ac5_one_woman() -> Outcome {
    let start = Instant::now();
    let trials = 200_000;
    let tol = mc_tolerance(trials);
    let mut cfg = GameConfig::new(GameVariant::Game1, 0).map_err(|e| e.to_string())?;
    cfg.trials = trials;
    let grid = [0.1, 0.5, 0.9];
    let mut worst: f64 = 0.0;
    let mut ordinal = 0;
    for &p_c in &grid {
        for &p_q in &grid {
            let woman = WomanProfile::new(0, p_c, p_q).map_err(|e| e.to_string())?;
            let stats = run_match(&cfg, &woman, &mut match_stream(5, ordinal))
                .map_err(|e| e.to_string())?;
            ordinal += 1;
            let err = (stats.d_over_t() - (p_q - p_c)).abs();
            worst = worst.max(err);
            if err > tol {
                return Err(format!(
                    "P_c={p_c} P_q={p_q}: D/T {} vs {}",
                    stats.d_over_t(),
                    p_q - p_c
                ));
            }
        }
    }
    within_time("N=1 games", start.elapsed(), Duration::from_secs(30))?;
    Ok(format!(
        "9 points, max |D/T - (P_q - P_c)| = {worst:.4} (tol {tol:.4})"
    ))
}

fn spot_check(cfg: &GameConfig, cells: &[(f64, f64)], seed: u64) -> Result<f64, String> {
    let tol = mc_tolerance(cfg.trials);
    let mut worst: f64 = 0.0;
    for (i, &(p_c, p_q)) in cells.iter().enumerate() {
        let woman = WomanProfile::new(0, p_c, p_q).map_err(|e| e.to_string())?;
        let stats =
            run_match(cfg, &woman, &mut match_stream(seed, i as u64)).map_err(|e| e.to_string())?;
        let want = expected_dt(cfg, &woman);
        let err = (stats.d_over_t() - want).abs();
        worst = worst.max(err);
        if err > tol {
            return Err(format!(
                "P_c={p_c} P_q={p_q}: measured {} vs expected {want}",
                stats.d_over_t()
            ));
        }
    }
    Ok(worst)
}

fn ac6_game1_sign() -> Outcome {
    let spec = SweepSpec::new(GameVariant::Game1, 3);
    let rows = expected_surface(&spec).map_err(|e| e.to_string())?;
    let negative: Vec<_> = rows
        .iter()
        .filter(|r| r.p_c <= 0.9 + 1e-12 && r.d_over_t_expected < 0.0)
        .collect();

    let mut cfg = GameConfig::new(GameVariant::Game1, 3).map_err(|e| e.to_string())?;
    let corner = expected_dt(
        &cfg,
        &WomanProfile::new(0, 1.0, 0.0).map_err(|e| e.to_string())?,
    );
    cfg.trials = 100_000;
    let cells = [
        (0.0, 0.0),
        (0.1, 0.9),
        (0.3, 0.3),
        (0.5, 0.1),
        (0.5, 0.5),
        (0.7, 0.2),
        (0.9, 0.05),
        (0.9, 0.9),
        (1.0, 0.0),
        (1.0, 1.0),
    ];
    let worst = spot_check(&cfg, &cells, 6)?;

    if corner >= 0.0 {
        return Err(format!(
            "expected D/T at (P_c=1, P_q=0) is {corner}, not negative"
        ));
    }
    if let Some(first) = negative.first() {
        return Err(format!(
            "{} of {} cells with P_c <= 0.9 have expected D/T < 0 (first: P_c={}, P_q={}, D/T={:.5}); \
             expected D/T = 0.78125*P_q - P_c/8 is negative wherever P_q < 0.16*P_c. \
             Corner (1,0) = {corner} < 0 and 10 Monte Carlo spot checks agree (max err {worst:.4})",
            negative.len(),
            rows.iter().filter(|r| r.p_c <= 0.9 + 1e-12).count(),
            first.p_c,
            first.p_q,
            first.d_over_t_expected
        ));
    }
    Ok(format!("corner = {corner}, spot checks max err {worst:.4}"))
}

fn ac7_game2_boundary() -> Outcome {
    let cfg = GameConfig::new(GameVariant::Game2, 3).map_err(|e| e.to_string())?;
    let f = |p_c: f64, p_q: f64| expected_dt(&cfg, &WomanProfile::new(0, p_c, p_q).unwrap());
    let root = |p_q: f64| {
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if f(mid, p_q) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let (mut lo_ratio, mut hi_ratio) = (f64::MAX, f64::MIN);
    for i in 0..=40 {
        let p_q = 0.1 + 0.01 * i as f64;
        if f(1.0, p_q) > 0.0 {
            return Err(format!("no sign change along P_c at P_q={p_q}"));
        }
        let ratio = root(p_q) / p_q;
        lo_ratio = lo_ratio.min(ratio);
        hi_ratio = hi_ratio.max(ratio);
    }
    let rows =
        expected_surface(&SweepSpec::new(GameVariant::Game2, 3)).map_err(|e| e.to_string())?;
    for (p_q, p_c) in sign_boundary(&rows).map_err(|e| e.to_string())? {
        if (0.1 - 1e-12..=0.5 + 1e-12).contains(&p_q) {
            let ratio = p_c / p_q;
            lo_ratio = lo_ratio.min(ratio);
            hi_ratio = hi_ratio.max(ratio);
        }
    }
    if lo_ratio < 1.5 || hi_ratio > 2.6 {
        return Err(format!(
            "contour ratio P_c/P_q spans [{lo_ratio:.3}, {hi_ratio:.3}]"
        ));
    }

    let mut mc = cfg.clone();
    mc.trials = 100_000;
    let mut cells = Vec::new();
    for p_q in [0.1, 0.2, 0.3, 0.4, 0.5] {
        let c = root(p_q);
        cells.push(((c - 0.05).max(0.0), p_q));
        cells.push(((c + 0.05).min(1.0), p_q));
    }
    let worst = spot_check(&mc, &cells, 7)?;
    Ok(format!(
        "P_c/P_q on the contour spans [{lo_ratio:.3}, {hi_ratio:.3}], 10 straddling cells max err {worst:.4}"
    ))
}

fn ac8_brute_force() -> Outcome {
    let turns = 100_000;
    let mut rng = match_stream(8, 0);
    let mut sweep = SweepState::new(8);
    let mut hits = 0usize;
    for _ in 0..turns {
        sweep.reset();
        let mut found = false;
        for _ in 0..4 {
            found |= classic_sweep_propose(&mut sweep, &mut rng).map_err(|e| e.to_string())? == 3;
        }
        hits += usize::from(found);
    }
    let freq = hits as f64 / turns as f64;
    if (freq - 0.5).abs() > 0.005 {
        return Err(format!("frequency {freq} outside 0.5 ± 0.005"));
    }
    Ok(format!("target found in {freq:.5} of {turns} turns"))
}

fn run_cli(args: &[&str]) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qdate"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "qdate {args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(())
}

fn p(path: &Path) -> String {
    path.display().to_string()
}

fn ac9_reproduction_pipeline() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let (fig3, fig4, fig5, b5, game) = (
        d.join("fig3.csv"),
        d.join("fig4.csv"),
        d.join("fig5.csv"),
        d.join("fig5_boundary.csv"),
        d.join("game.csv"),
    );

    run_cli(&[
        "trace",
        "--qubits",
        "10",
        "--target",
        "7",
        "--iterations",
        "30",
        "--out",
        &p(&fig3),
    ])?;
    run_cli(&[
        "sweep",
        "--variant",
        "1",
        "--qubits",
        "3",
        "--grid",
        "21",
        "--trials",
        "1000",
        "--seed",
        "1",
        "--out",
        &p(&fig4),
    ])?;
    run_cli(&[
        "sweep",
        "--variant",
        "2",
        "--qubits",
        "3",
        "--grid",
        "21",
        "--trials",
        "1000",
        "--seed",
        "1",
        "--out",
        &p(&fig5),
        "--boundary-out",
        &p(&b5),
    ])?;
    run_cli(&[
        "game",
        "--variant",
        "2",
        "--qubits",
        "3",
        "--pc",
        "0.6",
        "--pq",
        "0.3",
        "--trials",
        "1000",
        "--seed",
        "5",
        "--out",
        &p(&game),
    ])?;

    let replay = d.join("replay");
    fs::create_dir(&replay).map_err(|e| e.to_string())?;
    let mut compared = 0;
    for out in [&fig3, &fig4, &fig5, &game] {
        let name = out.file_name().unwrap();
        let again = replay.join(name);
        let manifest = format!("{}.manifest", p(out));
        let mut args = vec![
            "rerun".to_string(),
            "--manifest".into(),
            manifest,
            "--out".into(),
            p(&again),
        ];
        if out == &fig5 {
            args.push("--boundary-out".into());
            args.push(p(&replay.join("fig5_boundary.csv")));
        }
        run_cli(&args.iter().map(String::as_str).collect::<Vec<_>>())?;
        let (a, b) = (
            fs::read(out).map_err(|e| e.to_string())?,
            fs::read(&again).map_err(|e| e.to_string())?,
        );
        if a != b {
            return Err(format!("{} differs after rerun", p(out)));
        }
        compared += 1;
    }
    let (a, b) = (
        fs::read(&b5).map_err(|e| e.to_string())?,
        fs::read(replay.join("fig5_boundary.csv")).map_err(|e| e.to_string())?,
    );
    if a != b {
        return Err("boundary CSV differs after rerun".into());
    }
    compared += 1;
    within_time(
        "reproduction pipeline",
        start.elapsed(),
        Duration::from_secs(120),
    )?;
    Ok(format!(
        "{compared} outputs byte-identical after rerun, pipeline {:?}",
        start.elapsed()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1 Grover closed-form equivalence", ac1_closed_form),
        ("AC2 N=8 one iterate = 0.78125", ac2_eight_one_iterate),
        ("AC3 N=1024 optimum at 25 iterations", ac3_1024),
        ("AC4 dense-matrix oracle", ac4_dense),
        ("AC5 N=1 game threshold", ac5_one_woman),
        ("AC6 Game 1 sign structure", ac6_game1_sign),
        ("AC7 Game 2 zero contour", ac7_game2_boundary),
        ("AC8 brute-force classic reaches 1/2", ac8_brute_force),
        (
            "AC9 manifest determinism and runtime",
            ac9_reproduction_pipeline,
        ),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
