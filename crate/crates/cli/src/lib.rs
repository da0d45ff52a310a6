//! Command-line front end for `trinorm-core`.
//!
//! The binary is a thin wrapper around [`run`]; the pieces it is built from
//! (report rows, the JSON shapes, the SVG renderer) are public so tests and
//! other tools can use them without spawning a process.

pub mod args;
pub mod json;
pub mod render;
pub mod report;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use num_bigint::BigInt;
use rayon::prelude::*;
use trinorm_core::primes::{is_prime, primes_up_to};
use trinorm_core::{enumerate_triangles, NormWitness, Ring, VerificationReport};
use trinorm_core::{orbit_decomposition, represent_eisenstein, represent_gaussian, verify_prime};

use crate::args::{Cli, Command, RingArg};

/// Success, or the subcommand's claim holds.
pub const EXIT_OK: u8 = 0;
/// Usage, I/O or internal error.
pub const EXIT_ERROR: u8 = 1;
/// The prime provably has no representation in the requested ring.
pub const EXIT_ABSENT: u8 = 2;

/// Parses `argv` and runs the command, writing results to `out`.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli, out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> anyhow::Result<u8> {
    match cli.command {
        Command::Represent { p, ring, json } => represent(&p, ring.into(), json, out),
        Command::Triangles { p, orbits, json } => triangles(&p, orbits, json, out),
        Command::Verify { max, out: dir } => verify(max, dir.as_deref(), out),
        Command::Render { p, out: path, window, den_limit } => {
            let svg = render::render(&p, &render::Options::new(window, den_limit)?)?;
            std::fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?;
            Ok(EXIT_OK)
        }
    }
}

fn ensure_prime(p: &BigInt) -> anyhow::Result<()> {
    if !is_prime(p) {
        bail!("p must be a prime, but {p} is not");
    }
    Ok(())
}

fn represent(p: &BigInt, ring: Ring, as_json: bool, out: &mut dyn Write) -> anyhow::Result<u8> {
    ensure_prime(p)?;
    let witness = match ring {
        Ring::Eisenstein => represent_eisenstein(p)?,
        Ring::Gaussian => represent_gaussian(p)?,
    };
    if as_json {
        writeln!(out, "{}", json::witness(p, ring, witness.as_ref()))?;
    } else {
        writeln!(out, "{}", describe(p, ring, witness.as_ref()))?;
    }
    Ok(if witness.is_some() { EXIT_OK } else { EXIT_ABSENT })
}

/// `3 = N(1 + 2ω) = 1² − 1·2 + 2²`, or the congruence that rules `p` out.
pub fn describe(p: &BigInt, ring: Ring, witness: Option<&NormWitness>) -> String {
    let Some(w) = witness else {
        let m = match ring {
            Ring::Eisenstein => 3u32,
            Ring::Gaussian => 4,
        };
        return format!("no representation ({p} ≡ {} mod {m})", p % m);
    };
    let (a, b) = w.value.pair();
    let sq =
        |x: &BigInt| if x.sign() == num_bigint::Sign::Minus { format!("({x})²") } else { format!("{x}²") };
    let factor =
        |x: &BigInt| if x.sign() == num_bigint::Sign::Minus { format!("({x})") } else { x.to_string() };
    match ring {
        Ring::Eisenstein => {
            format!("{p} = N({}) = {} − {}·{} + {}", w.value, sq(&a), factor(&a), factor(&b), sq(&b))
        }
        Ring::Gaussian => format!("{p} = N({}) = {} + {}", w.value, sq(&a), sq(&b)),
    }
}

fn triangles(p: &BigInt, orbits: bool, as_json: bool, out: &mut dyn Write) -> anyhow::Result<u8> {
    let triangles = enumerate_triangles(p)?;
    let decomposition = if orbits { Some(orbit_decomposition(p)?) } else { None };
    if as_json {
        writeln!(out, "{}", json::triangles(p, &triangles, decomposition.as_ref())?)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "p = {p}: {} triangles", triangles.len())?;
    for t in &triangles {
        let [x, y, z] = t.vertices();
        let [l1, l2, l3] = t.edge_lambda_lengths();
        let [c1, c2, c3] = t.cusp_classes();
        write!(out, "k = {:<4} ({x}, {y}, {z})  λ = ({l1}, {l2}, {l3})  cusps = ({c1}, {c2}, {c3})", t.k())?;
        if let Some(d) = &decomposition {
            if d.fixed().contains(t) {
                write!(out, "  FIXED  barycenter = {}", t.barycenter()?)?;
            } else if let Some(cycle) = d.three_cycles().iter().find(|c| c.contains(t)) {
                let ks: Vec<String> = cycle.iter().map(|c| c.k().to_string()).collect();
                write!(out, "  cycle {}", ks.join(" → "))?;
            }
        }
        writeln!(out)?;
    }
    if let Some(d) = &decomposition {
        writeln!(out, "{} fixed, {} three-cycles", d.fixed().len(), d.three_cycles().len())?;
    }
    Ok(EXIT_OK)
}

/// Runs every per-prime check up to `max`, fanned out over the rayon pool and
/// reassembled in ascending order.
pub fn sweep(max: u64) -> VerificationReport {
    let rows = primes_up_to(max).into_par_iter().map(verify_prime).collect();
    VerificationReport { p_max: max, rows }
}

fn verify(max: u64, dir: Option<&Path>, out: &mut dyn Write) -> anyhow::Result<u8> {
    if max < 3 {
        bail!("--max must be at least 3, got {max}");
    }
    let report = sweep(max);
    let rows = report::rows(&report);
    let summary = json::summary(&report);
    match dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let csv = dir.join("report.csv");
            report::write_csv(&csv, &rows)?;
            let path = dir.join("summary.json");
            std::fs::write(&path, format!("{summary:#}\n"))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => report::write_csv_to(&mut *out, &rows)?,
    }
    let failed: Vec<String> = report.failures().map(|r| r.p.to_string()).collect();
    if failed.is_empty() {
        eprintln!("{} primes up to {max}: all checks passed", report.rows.len());
        Ok(EXIT_OK)
    } else {
        eprintln!("{} of {} primes failed: {}", failed.len(), report.rows.len(), failed.join(", "));
        Ok(EXIT_ERROR)
    }
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Eisenstein => Ring::Eisenstein,
            RingArg::Gaussian => Ring::Gaussian,
        }
    }
}
