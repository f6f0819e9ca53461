//! CSV emitters. Floats use 12 significant digits in `%g` style, a period
//! decimal separator and `\n` line endings, so identical runs produce
//! identical bytes.

use std::io::{self, Write};

use crate::experiment::{SweepRow, TracePoint};
use crate::game::{GameConfig, GameStats, WomanProfile};

pub const TRACE_HEADER: &str = "iteration,p_target,p_other_each,amp_target";
pub const SWEEP_HEADER: &str = "p_c,p_q,d_over_t,d_over_t_expected,trials";
pub const BOUNDARY_HEADER: &str = "p_q,p_c_zero";
pub const GAME_HEADER: &str = "variant,N,Pc,Pq,T,c_success,q_success,d_over_t,seed";

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Formats like C's `%.12g`.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (11 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

pub fn write_trace_csv<W: Write>(mut out: W, points: &[TracePoint]) -> io::Result<()> {
    writeln!(out, "{TRACE_HEADER}")?;
    for p in points {
        writeln!(
            out,
            "{},{},{},{}",
            p.iteration,
            fmt_float(p.p_target),
            fmt_float(p.p_other_each),
            fmt_float(p.amp_target)
        )?;
    }
    Ok(())
}

pub fn write_sweep_csv<W: Write>(mut out: W, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt_float(r.p_c),
            fmt_float(r.p_q),
            fmt_float(r.d_over_t_measured),
            fmt_float(r.d_over_t_expected),
            r.trials
        )?;
    }
    Ok(())
}

pub fn write_boundary_csv<W: Write>(mut out: W, boundary: &[(f64, f64)]) -> io::Result<()> {
    writeln!(out, "{BOUNDARY_HEADER}")?;
    for (p_q, p_c) in boundary {
        writeln!(out, "{},{}", fmt_float(*p_q), fmt_float(*p_c))?;
    }
    Ok(())
}

/// One match result as a single CSV row (no header, no newline).
pub fn game_row(cfg: &GameConfig, woman: &WomanProfile, stats: &GameStats) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        cfg.variant,
        cfg.dim(),
        fmt_float(woman.p_accept_classic),
        fmt_float(woman.p_accept_quantum),
        stats.trials,
        stats.c_successes,
        stats.q_successes,
        fmt_float(stats.d_over_t()),
        cfg.seed
    )
}
