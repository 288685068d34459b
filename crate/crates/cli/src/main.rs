//! Command-line front end for the segre-core library.
//!
//! Every subcommand writes a JSON document to stdout; human diagnostics go to
//! stderr. Exit codes follow one convention across all subcommands: 0 for
//! success or a positive verdict, 1 for a negative verdict, 2 for bad input,
//! 3 for internal errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use segre_core::coxeter::{
    inject_error, recover, state_chamber, Chamber, ErrorRecord, Permutation,
};
use segre_core::error::Error;
use segre_core::hypercube::{generate_hypercube, to_dot, to_json};
use segre_core::segre::{
    concurrence, embedding_residual, is_maximally_entangled, is_product_state, segre_map,
    SeparabilityReport, DEFAULT_TOL,
};
use segre_core::state::{ProjectivePoint, PureState};

/// Geometry of multiqubit pure states: separability checks, Segre embeddings,
/// embedding hypercubes, and chamber-based error recovery.
#[derive(Parser)]
#[command(name = "segre", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a state for separability across every bipartite cut
    Check {
        /// State file: {"qubits": n, "amplitudes": [[re, im], ...]}
        state: PathBuf,
        /// Residual threshold for the separability verdict
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Map two states to their Segre-embedded product point
    Embed {
        /// Left factor state file
        state_a: PathBuf,
        /// Right factor state file
        state_b: PathBuf,
    },
    /// Print the hypercube of generalized Segre embeddings for n qubits
    Hypercube {
        /// Number of qubits (2 to 24)
        qubits: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Report which sorting chamber a state's probability vector occupies
    Chamber {
        /// State file to classify
        state: PathBuf,
    },
    /// Inject a basis-permutation error and verify chamber recovery
    SimulateError {
        /// State file to corrupt
        state: PathBuf,
        #[arg(
            long,
            help = "Permutation to inject, as a 1-based image list like \"[3,1,2]\"",
            value_parser = parse_permutation,
            conflicts_with = "seed",
            required_unless_present = "seed"
        )]
        perm: Option<Permutation>,
        /// Draw the permutation from a seeded ChaCha8 stream instead
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn parse_permutation(text: &str) -> Result<Permutation, String> {
    text.parse().map_err(|err: Error| err.to_string())
}

/// A subcommand failure with its exit code. Everything the library rejects at
/// this level traces back to user input, so core errors map to Input.
enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(msg) | Failure::Internal(msg) => msg,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Input(err.to_string())
    }
}

fn internal(err: Error) -> Failure {
    Failure::Internal(err.to_string())
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    };
    let _ = io::stdout().flush();
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Check { state, tol } => cmd_check(&state, tol),
        Command::Embed { state_a, state_b } => cmd_embed(&state_a, &state_b),
        Command::Hypercube { qubits, format } => cmd_hypercube(qubits, format),
        Command::Chamber { state } => cmd_chamber(&state),
        Command::SimulateError { state, perm, seed } => cmd_simulate_error(&state, perm, seed),
    }
}

fn read_state(path: &Path) -> Result<PureState, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|err| Failure::Input(format!("cannot read {}: {err}", path.display())))?;
    PureState::from_json(&text).map_err(|err| Failure::Input(format!("{}: {err}", path.display())))
}

fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("output serialization cannot fail");
    println!("{text}");
}

#[derive(Serialize)]
struct CheckOutput {
    qubits: usize,
    #[serde(flatten)]
    report: SeparabilityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    concurrence: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    maximally_entangled: Option<bool>,
}

fn cmd_check(path: &Path, tol: f64) -> Result<i32, Failure> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Failure::Input(format!(
            "--tol must be a positive finite number, got {tol}"
        )));
    }
    let state = read_state(path)?;
    let qubits = state.num_qubits();
    let report = is_product_state(&state, tol);
    // Arity preconditions are checked here, so these calls cannot fail.
    let concurrence = if qubits == 2 {
        Some(concurrence(&state).map_err(internal)?)
    } else {
        None
    };
    let maximally_entangled = if qubits.is_multiple_of(2) {
        Some(is_maximally_entangled(&state, tol).map_err(internal)?)
    } else {
        None
    };
    let verdict = report.product_state;
    print_json(&CheckOutput {
        qubits,
        report,
        concurrence,
        maximally_entangled,
    });
    eprintln!(
        "{}: {} qubits, {}",
        path.display(),
        qubits,
        if verdict {
            "separable at every cut"
        } else {
            "entangled across at least one cut"
        }
    );
    Ok(if verdict { 0 } else { 1 })
}

#[derive(Serialize)]
struct EmbedOutput {
    left_dim: usize,
    right_dim: usize,
    ambient_dim: usize,
    coords: Vec<[f64; 2]>,
    display: String,
    residual: f64,
}

fn cmd_embed(path_a: &Path, path_b: &Path) -> Result<i32, Failure> {
    let a = ProjectivePoint::from_state(&read_state(path_a)?);
    let b = ProjectivePoint::from_state(&read_state(path_b)?);
    let image = segre_map(&a, &b);
    let residual = embedding_residual(&image, a.dim(), b.dim()).map_err(internal)?;
    if residual >= 1e-12 {
        return Err(Failure::Internal(format!(
            "Segre image drifted off its own variety (residual {residual:.3e})"
        )));
    }
    let display = format!(
        "[{}]",
        image
            .coords()
            .iter()
            .map(|z| fmt_complex(*z))
            .collect::<Vec<_>>()
            .join(":")
    );
    print_json(&EmbedOutput {
        left_dim: a.dim(),
        right_dim: b.dim(),
        ambient_dim: image.dim(),
        coords: image.coords().iter().map(|z| [z.re, z.im]).collect(),
        display,
        residual,
    });
    eprintln!("embedded P{} x P{} into P{}", a.dim(), b.dim(), image.dim());
    Ok(0)
}

fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_real(z.re)
    } else if z.re == 0.0 {
        format!("{}i", fmt_real(z.im))
    } else if z.im < 0.0 {
        format!("{}-{}i", fmt_real(z.re), fmt_real(-z.im))
    } else {
        format!("{}+{}i", fmt_real(z.re), fmt_real(z.im))
    }
}

fn cmd_hypercube(qubits: usize, format: Format) -> Result<i32, Failure> {
    let graph = generate_hypercube(qubits)?;
    match format {
        Format::Dot => print!("{}", to_dot(&graph)),
        Format::Json => println!("{}", to_json(&graph)),
    }
    eprintln!(
        "{} qubits: {} vertices, {} edges",
        qubits,
        graph.vertices().len(),
        graph.edges().len()
    );
    Ok(0)
}

#[derive(Serialize)]
#[serde(untagged)]
enum ChamberOutput {
    Interior { chamber: Permutation },
    OnWall { on_wall: Vec<(usize, usize)> },
}

fn cmd_chamber(path: &Path) -> Result<i32, Failure> {
    let state = read_state(path)?;
    let output = match state_chamber(&state) {
        Chamber::Interior(id) => ChamberOutput::Interior {
            chamber: id.order().clone(),
        },
        Chamber::OnWall(pairs) => {
            eprintln!(
                "{}: probabilities tie at {} pair(s); the state sits on a chamber wall",
                path.display(),
                pairs.len()
            );
            ChamberOutput::OnWall { on_wall: pairs }
        }
    };
    print_json(&output);
    Ok(0)
}

#[derive(Serialize)]
struct SimulationOutput {
    #[serde(flatten)]
    record: ErrorRecord,
    injected: Permutation,
    recovered: bool,
}

fn cmd_simulate_error(
    path: &Path,
    perm: Option<Permutation>,
    seed: Option<u64>,
) -> Result<i32, Failure> {
    let state = read_state(path)?;
    let original = match state_chamber(&state) {
        Chamber::Interior(id) => id,
        Chamber::OnWall(pairs) => {
            let ties = pairs
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Failure::Input(format!(
                "{}: probabilities tie at {ties}; the chamber is ambiguous, recovery cannot be verified",
                path.display()
            )));
        }
    };
    let injected = match (perm, seed) {
        (Some(g), None) => g,
        (None, Some(s)) => seeded_permutation(s, state.amplitudes().len()),
        _ => unreachable!("flag parsing enforces exactly one of --perm/--seed"),
    };
    let corrupted = inject_error(&state, &injected)?;
    let corrupted_chamber = match state_chamber(&corrupted) {
        Chamber::Interior(id) => id,
        Chamber::OnWall(_) => {
            return Err(Failure::Internal(
                "permuting distinct probabilities produced a tie".to_string(),
            ))
        }
    };
    let recovery = recover(&original, &corrupted)?;
    let corrected_chamber = match state_chamber(&recovery.corrected) {
        Chamber::Interior(id) => id,
        Chamber::OnWall(_) => {
            return Err(Failure::Internal(
                "corrected state landed on a chamber wall".to_string(),
            ))
        }
    };
    let recovered = corrected_chamber == original;
    if recovery.transporter.is_identity() {
        eprintln!("same chamber: the injected permutation preserved the probability order");
    }
    eprintln!(
        "recovery {}",
        if recovered {
            "verified: corrected state restored to the original chamber"
        } else {
            "failed: corrected state landed in a different chamber"
        }
    );
    print_json(&SimulationOutput {
        record: ErrorRecord {
            original_chamber: original,
            corrupted_chamber,
            transporter: recovery.transporter,
        },
        injected,
        recovered,
    });
    Ok(if recovered { 0 } else { 1 })
}

/// Fisher-Yates shuffle of the identity, driven by raw `next_u64` draws from
/// ChaCha8 seeded with `seed_from_u64`. The index at step i is
/// `next_u64() % (i + 1)`, iterating i from size−1 down to 1. Fixing the
/// exact draw sequence keeps seeds reproducible across platforms and library
/// versions.
fn seeded_permutation(seed: u64, size: usize) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut images: Vec<usize> = (0..size).collect();
    for i in (1..size).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("a shuffle of the identity is a bijection")
}
