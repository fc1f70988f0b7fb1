use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gate_geometry::circuits::{verify_all_constructions, verifying_pauli_layers};
use gate_geometry::families::{cnot, swap, swap_alpha, Edge};
use gate_geometry::weyl::{canonical_gate, perfect_entangler_fraction};
use gate_geometry::{Gate4, WeylPoint};

use gate_geometry_cli::analyze::analyze;
use gate_geometry_cli::gatefile::GateFile;
use gate_geometry_cli::settings::{load_tolerances, TOLERANCES_ENV};
use gate_geometry_cli::sweep::{compute_sweep, write_csv};
use gate_geometry_cli::tables::{compute_table, render_table, TableKind};
use gate_geometry_cli::fmt_pi;

/// Local invariants, Weyl-chamber coordinates and entangling power of
/// two-qubit gates.
///
/// Tolerance defaults: unitary 1e-10, g2_imag 1e-9, equivalence 1e-9,
/// coordinate_match 1e-8, perfect_entangler 1e-9, mirror 1e-9,
/// normalization 1e-9, param_range 1e-12. Override any of them with a TOML
/// file named by --tolerances or the GATEGEO_TOLERANCES environment variable.
#[derive(Parser, Debug)]
#[command(name = "gategeo", version)]
struct Cli {
    /// TOML file overriding tolerance defaults.
    #[arg(long, global = true, env = TOLERANCES_ENV)]
    tolerances: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants, chamber coordinates, perfect-entangler verdicts and e_p of a gate file.
    Analyze {
        file: PathBuf,
        /// Add a Monte-Carlo estimate of e_p with this many samples (requires --seed).
        #[arg(long, requires = "seed")]
        mc: Option<usize>,
        #[arg(long, requires = "mc")]
        seed: Option<u64>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Tabulated edge formulas next to values recomputed from gates.
    Tables {
        which: TableArg,
        #[arg(long, default_value_t = 5)]
        grid: usize,
    },
    /// Sweep one family over its parameter range and write CSV.
    Sweep {
        /// Family label: OA1 OA2 A2A1 A2A3 OA3 A1A3 LQ LM A2M A2Q QP MN PN LN A2P SPE OL.
        family: String,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check every two-gate CNOT construction across its parameter grid.
    Verify {
        #[arg(long, default_value_t = 21)]
        grid: usize,
        /// Also list which of the 16 Pauli layers work for each edge gate.
        #[arg(long)]
        probe_layers: bool,
    },
    /// Fraction of the chamber volume occupied by perfect entanglers.
    PeVolume {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Write a built-in gate as a gate file.
    Gates {
        /// cnot, swap, identity, swap-alpha, swap-inv-alpha, canonical, or a family label.
        name: String,
        /// Gate parameter: α for the SWAP powers, c1,c2,c3 for canonical,
        /// the edge parameter for a family.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        param: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableArg {
    Weyl,
    Polyhedron,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let tol = load_tolerances(cli.tolerances.as_deref())?;
    match cli.command {
        Command::Analyze { file, mc, seed, json } => {
            let gf = GateFile::read(&file)?;
            let gate = gf.to_gate(tol.unitary).with_context(|| format!("in {}", file.display()))?;
            let report = analyze(gf.name.clone(), &gate, mc.zip(seed), &tol)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render());
            }
        }
        Command::Tables { which, grid } => {
            let kind = match which {
                TableArg::Weyl => TableKind::Weyl,
                TableArg::Polyhedron => TableKind::Polyhedron,
            };
            let rows = compute_table(kind, grid, &tol)?;
            print!("{}", render_table(kind, &rows));
        }
        Command::Sweep { family, grid, out } => {
            let edge: Edge = family.parse()?;
            let records = compute_sweep(edge, grid, &tol)?;
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            write_csv(&records, BufWriter::new(file))?;
            eprintln!("wrote {} rows to {}", records.len(), out.display());
        }
        Command::Verify { grid, probe_layers } => return verify(grid, probe_layers),
        Command::PeVolume { n, seed } => {
            if n < 10_000 {
                bail!("--n must be at least 10000");
            }
            let est = perfect_entangler_fraction(n, seed)?;
            println!(
                "perfect-entangler fraction: {:.6} ± {:.6} (n={}, seed={seed})",
                est.fraction, est.std_error, est.n_samples
            );
        }
        Command::Gates { name, param, out } => {
            let (label, gate) = builtin_gate(&name, &param)?;
            GateFile::from_gate(Some(label), &gate).write(&out)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(grid: usize, probe_layers: bool) -> Result<ExitCode> {
    let report = verify_all_constructions(grid)?;
    let mut passed = 0;
    for r in &report.results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        passed += usize::from(r.passed());
        println!(
            "{status}  {:<28} points={:<3} max|G1|={:.2e} max|G2-1|={:.2e}",
            r.construction.name(),
            r.points.len(),
            r.max_abs_g1(),
            r.max_g2_deviation()
        );
    }
    println!("{passed}/{} constructions verify as CNOT class", report.results.len());
    for (c, t) in report.failures() {
        println!("failure: {} at parameter {t}", c.name());
    }
    if probe_layers {
        for edge in [Edge::QP, Edge::MN, Edge::PN] {
            for t in edge.grid(grid.min(5)) {
                let layers = verifying_pauli_layers(&edge.gate(t)?)?;
                let names: Vec<String> = layers.iter().map(|(a, b)| format!("{}⊗{}", a.symbol(), b.symbol())).collect();
                println!("layers {} at {}: {}", edge.label(), fmt_pi(t), names.join(" "));
            }
        }
    }
    Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn builtin_gate(name: &str, param: &[f64]) -> Result<(String, Gate4)> {
    let one = |what: &str| -> Result<f64> {
        match param {
            [t] => Ok(*t),
            _ => bail!("{what} needs exactly one --param value"),
        }
    };
    let key = name.to_ascii_lowercase();
    Ok(match key.as_str() {
        "cnot" => ("CNOT".into(), cnot()),
        "swap" => ("SWAP".into(), swap()),
        "identity" => ("identity".into(), Gate4::identity()),
        "swap-alpha" => {
            let a = one("swap-alpha")?;
            (format!("SWAP^{a}"), swap_alpha(a, false)?)
        }
        "swap-inv-alpha" => {
            let a = one("swap-inv-alpha")?;
            (format!("SWAP^-{a}"), swap_alpha(a, true)?)
        }
        "canonical" => match param {
            [c1, c2, c3] => {
                let p = WeylPoint::new(*c1, *c2, *c3);
                (format!("canonical {p}"), canonical_gate(&p))
            }
            _ => bail!("canonical needs --param c1,c2,c3"),
        },
        _ => {
            let edge: Edge = name.parse()?;
            let t = one(edge.label())?;
            (format!("{} at {}={t}", edge.label(), edge.family().param_symbol.as_str()), edge.gate(t)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn builtin_gates() {
        assert_eq!(builtin_gate("CNOT", &[]).unwrap().1, cnot());
        assert!(builtin_gate("swap-alpha", &[]).is_err());
        assert!(builtin_gate("canonical", &[0.1, 0.2]).is_err());
        assert!(builtin_gate("QP", &[0.3]).is_ok());
        assert!(builtin_gate("QP", &[3.0]).is_err());
        assert!(builtin_gate("nope", &[0.0]).is_err());
    }
}
