use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use qdate_core::experiment::{amplitude_trace, run_sweep, sign_boundary, SweepSpec};
use qdate_core::report::{self, write_boundary_csv, write_sweep_csv, write_trace_csv, GAME_HEADER};
use qdate_core::rng::match_stream;
use qdate_core::{
    closed_form_probability, expected_dt, optimal_iterations, run_match, GameConfig, KvMap,
    WomanProfile,
};

use crate::args::{AnalyticArgs, Cli, Command, GameArgs, RerunArgs, SweepArgs, TraceArgs};
use crate::manifest::RunManifest;

pub fn dispatch(command: Command, allow_rerun: bool) -> Result<()> {
    match command {
        Command::Trace(a) => cmd_trace(a),
        Command::Game(a) => cmd_game(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Analytic(a) => cmd_analytic(a),
        Command::Rerun(a) if allow_rerun => cmd_rerun(a),
        Command::Rerun(_) => bail!("a manifest cannot point at another rerun"),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(rand::random)
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        bail!("--{name} must lie in [0, 1], got {p}");
    }
    Ok(())
}

fn cmd_trace(args: TraceArgs) -> Result<()> {
    let n_qubits = args.qubits as usize;
    let points = amplitude_trace(n_qubits, args.target, args.iterations)?;
    let mut buf = Vec::new();
    write_trace_csv(&mut buf, &points)?;
    match &args.out {
        Some(out) => {
            write_file(out, &buf)?;
            let mut m = RunManifest::new("trace", out, None);
            m.param("qubits", n_qubits)
                .param("target", args.target)
                .param("iterations", args.iterations)
                .param("out", out.display());
            m.write_next_to(out)?;
        }
        None => io::stdout().write_all(&buf)?,
    }
    Ok(())
}

fn cmd_game(args: GameArgs) -> Result<()> {
    check_probability("pc", args.pc)?;
    check_probability("pq", args.pq)?;

    let mut kv = match &args.config {
        Some(path) => fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?
            .parse::<KvMap>()?,
        None => KvMap::new(),
    };
    if let Some(v) = args.variant {
        kv.insert("variant", v);
    }
    if let Some(q) = args.qubits {
        kv.insert("qubits", q);
    }
    if let Some(t) = args.trials {
        kv.insert("trials", t);
    }
    if let Some(s) = args.classic_strategy {
        kv.insert("classic_strategy", s);
    }
    if let Some(k) = args.grover_iterations {
        kv.insert("grover_iterations", k);
    }
    if let Some(a) = args.classic_attempts {
        kv.insert("classic_attempts", a);
    }
    let seed = match args.seed {
        Some(s) => s,
        None => match kv.get_parsed::<u64>("seed")? {
            Some(s) => s,
            None => resolve_seed(None),
        },
    };
    kv.insert("seed", seed);
    let cfg = GameConfig::from_kv_map(&kv)?;
    let woman = WomanProfile::new(args.target, args.pc, args.pq)?;

    let stats = run_match(&cfg, &woman, &mut match_stream(cfg.seed, 0))?;
    let row = report::game_row(&cfg, &woman, &stats);
    println!("{row}");

    if let Some(out) = &args.out {
        write_file(out, format!("{GAME_HEADER}\n{row}\n").as_bytes())?;
        let mut m = RunManifest::new("game", out, Some(cfg.seed));
        m.param("variant", cfg.variant)
            .param("qubits", cfg.n_qubits)
            .param("pc", woman.p_accept_classic)
            .param("pq", woman.p_accept_quantum)
            .param("trials", cfg.trials)
            .param("seed", cfg.seed)
            .param("classic-strategy", cfg.classic_strategy)
            .param("grover-iterations", cfg.quantum_iterations)
            .param("classic-attempts", cfg.classic_attempts_per_turn)
            .param("target", woman.target)
            .param("out", out.display());
        m.write_next_to(out)?;
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let seed = resolve_seed(args.seed);
    let spec = SweepSpec {
        n_qubits: args.qubits as usize,
        variant: args.variant,
        classic_strategy: args.classic_strategy,
        grid_points: args.grid as usize,
        trials_per_cell: args.trials,
        seed,
        target: args.target,
        quantum_iterations: args.grover_iterations,
    };
    let rows = run_sweep(&spec)?;

    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &rows)?;
    write_file(&args.out, &buf)?;

    let mut m = RunManifest::new("sweep", &args.out, Some(seed));
    m.param("variant", spec.variant)
        .param("qubits", spec.n_qubits)
        .param("grid", spec.grid_points)
        .param("trials", spec.trials_per_cell)
        .param("seed", seed)
        .param("classic-strategy", spec.classic_strategy)
        .param("grover-iterations", spec.quantum_iterations)
        .param("target", spec.target)
        .param("out", args.out.display());

    if let Some(path) = &args.boundary_out {
        let boundary = sign_boundary(&rows)?;
        let mut bbuf = Vec::new();
        write_boundary_csv(&mut bbuf, &boundary)?;
        write_file(path, &bbuf)?;
        m.param("boundary-out", path.display());
        m.write_next_to(path)?;
    }
    m.write_next_to(&args.out)?;
    Ok(())
}

fn cmd_analytic(args: AnalyticArgs) -> Result<()> {
    let dim = usize::try_from(args.n).map_err(|_| anyhow!("--n {} is too large", args.n))?;
    if !dim.is_power_of_two() {
        bail!("--n must be a power of two, got {}", args.n);
    }
    if let Some(variant) = args.variant {
        let (pc, pq) = (args.pc.unwrap_or_default(), args.pq.unwrap_or_default());
        check_probability("pc", pc)?;
        check_probability("pq", pq)?;
        let mut cfg = GameConfig::new(variant, dim.trailing_zeros() as usize)?;
        cfg.classic_strategy = args.classic_strategy;
        cfg.quantum_iterations = args.grover_iterations;
        cfg.validate()?;
        let value = expected_dt(&cfg, &WomanProfile::new(0, pc, pq)?);
        println!("expected_dt,{}", report::fmt_float(value));
    } else if let Some(k) = args.iterations {
        println!(
            "probability,{}",
            report::fmt_float(closed_form_probability(dim, k))
        );
    } else {
        println!("optimal_iterations,{}", optimal_iterations(dim));
    }
    Ok(())
}

fn cmd_rerun(args: RerunArgs) -> Result<()> {
    let mut manifest = RunManifest::load(&args.manifest)?;
    if let Some(out) = &args.out {
        set_param(&mut manifest, "out", out.display().to_string());
    }
    if let Some(b) = &args.boundary_out {
        set_param(&mut manifest, "boundary-out", b.display().to_string());
    }
    if manifest.get("out").is_none() {
        bail!(
            "manifest {} records no output path",
            args.manifest.display()
        );
    }
    let cli = Cli::try_parse_from(manifest.to_args()).map_err(|e| {
        anyhow!(
            "manifest {} does not describe a valid run:\n{e}",
            args.manifest.display()
        )
    })?;
    dispatch(cli.command, false)
}

fn set_param(manifest: &mut RunManifest, name: &str, value: String) {
    match manifest.params.iter_mut().find(|(k, _)| k == name) {
        Some(slot) => slot.1 = value,
        None => manifest.params.push((name.to_string(), value)),
    }
}
