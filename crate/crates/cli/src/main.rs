use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use scarf_core::{
    build_scarf, check_complex, check_generic_exactness, check_minimal, colength, differentials,
    format_monomial, outer_corners, render_svg, run_suite, scarf_to_complex, FullReport,
    LabeledComplex, Resolution, Staircase,
};
use serde_json::json;

mod input;

use input::{sigmas, Input};

#[derive(Parser)]
#[command(
    name = "scarf",
    version,
    about = "Scarf complexes, staircase partitions and d_sigma phi of Artinian monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Permutation such as 3,1,2 (repeatable), or `all` [default: all]
    #[arg(long, global = true)]
    sigma: Vec<String>,

    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write output to this file instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, genericity, outer corners and colength
    Info { input: String },
    /// The Scarf complex
    Scarf { input: String },
    /// Cellular resolution: complex, differentials and resolution checks
    Resolve { input: String },
    /// Partition of the staircase for each sigma
    Partition { input: String },
    /// d_sigma phi, comparison with signed volumes, pairing and factorization
    Dphi { input: String },
    /// SVG of a two-variable staircase with its partitions
    Render { input: String },
    /// Full invariant suite; exits 1 on any failure
    Verify { input: String },
}

/// A command's result: the text to print and whether verification passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    if cli.format == Format::Svg && !matches!(cli.command, Command::Render { .. }) {
        bail!("--format svg is only available for `render`");
    }
    let json_out = cli.format == Format::Json;
    match &cli.command {
        Command::Info { input } => info(Input::load(input)?, json_out),
        Command::Scarf { input } => scarf(Input::load(input)?.require_ideal("scarf")?, json_out),
        Command::Resolve { input } => resolve(Input::load(input)?, cli.seed, json_out),
        Command::Partition { input } => {
            let m = Input::load(input)?.ideal()?;
            partition(&m, &sigmas(&cli.sigma, m.dim())?, json_out)
        }
        Command::Dphi { input } => dphi(Input::load(input)?, &cli.sigma, json_out),
        Command::Render { input } => {
            let m = Input::load(input)?.ideal()?;
            if m.dim() != 2 {
                bail!(
                    "render supports two variables only; this ideal has {}",
                    m.dim()
                );
            }
            if cli.format == Format::Text && cli.output.is_none() {
                eprintln!("note: writing SVG to stdout");
            }
            let sigmas = sigmas(&cli.sigma, 2)?;
            Ok(Outcome::ok(render_svg(&m, &sigmas)?))
        }
        Command::Verify { input } => verify(Input::load(input)?, cli.seed, json_out),
    }
}

fn pretty(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn info(input: Input, json_out: bool) -> Result<Outcome> {
    let m = input.ideal()?;
    let artinian = m.is_artinian();
    let witness = m.genericity_witness();
    let (corners, col) = if artinian {
        (Some(outer_corners(&m)?), Some(colength(&m)?))
    } else {
        (None, None)
    };
    if json_out {
        return Ok(Outcome::ok(pretty(&json!({
            "n": m.dim(),
            "generators": m.generators(),
            "artinian": artinian,
            "generic": witness.is_none(),
            "genericity_witness": witness.as_ref().map(|w| json!({
                "pair": [w.pair.0, w.pair.1],
                "generators": [w.generators.0, w.generators.1],
                "variable": w.variable + 1,
            })),
            "outer_corners": corners,
            "colength": col,
        }))?));
    }
    let mut s = format!(
        "ideal: {m}\nn: {}\ngenerators: {}\n",
        m.dim(),
        m.num_generators()
    );
    s += &format!("artinian: {artinian}\n");
    match &witness {
        None => s += "generic: true\n",
        Some(w) => s += &format!("generic: false ({w})\n"),
    }
    if let (Some(corners), Some(col)) = (corners, col) {
        s += &format!("outer corners ({}):", corners.len());
        for c in &corners {
            s += &format!(" {c}");
        }
        s += &format!("\ncolength: {col}\n");
    }
    Ok(Outcome::ok(s))
}

fn scarf(m: scarf_core::MonomialIdeal, json_out: bool) -> Result<Outcome> {
    let d = build_scarf(&m)?;
    if json_out {
        return Ok(Outcome::ok(pretty(&d)?));
    }
    let mut s = format!("Scarf complex of {m}\n");
    for (k, level) in d.levels().iter().enumerate() {
        s += &format!("faces with {} vertices: {}\n", k + 1, level.len());
        for f in level {
            s += &format!("  {:?}  label {}\n", f.vertices(), f.label());
        }
    }
    Ok(Outcome::ok(s))
}

fn resolution_complex(input: Input) -> Result<LabeledComplex> {
    Ok(match input {
        Input::Complex(x) => x,
        Input::Ideal(m) => {
            m.require_generic()
                .context("the Scarf complex resolves generic ideals only; pass a complex file")?;
            scarf_to_complex(&build_scarf(&m)?)
        }
    })
}

fn resolve(input: Input, seed: u64, json_out: bool) -> Result<Outcome> {
    let x = resolution_complex(input)?;
    let mats = differentials(&x)?;
    let is_complex = check_complex(&mats);
    let minimal = check_minimal(&mats);
    let exact = check_generic_exactness(&mats, x.n, seed);
    let ok = is_complex && exact.exact;
    if json_out {
        return Ok(Outcome {
            text: pretty(&json!({
                "complex": x,
                "ranks": x.ranks(),
                "differentials": mats,
                "checks": {"complex": is_complex, "minimal": minimal, "exactness": exact},
            }))?,
            ok,
        });
    }
    let mut s = format!("ranks E_0..E_{}: {:?}\n", x.cells.len(), x.ranks());
    for (k, m) in mats.iter().enumerate() {
        s += &format!("phi_{} ({} x {}):\n", k + 1, m.rows, m.cols);
        for e in &m.entries {
            let sign = if e.sign < 0 { "-" } else { "+" };
            s += &format!(
                "  [{}, {}] {sign}{}\n",
                e.row,
                e.col,
                format_monomial(&e.exponent)
            );
        }
    }
    s += &format!("phi phi = 0: {is_complex}\nminimal: {minimal}\n");
    s += &format!(
        "exact off the origin: {} (ranks {:?})\n",
        exact.exact, exact.ranks
    );
    Ok(Outcome { text: s, ok })
}

fn partition(
    m: &scarf_core::MonomialIdeal,
    sigmas: &[scarf_core::Permutation],
    json_out: bool,
) -> Result<Outcome> {
    let st = Staircase::new(m)?;
    let parts = sigmas
        .iter()
        .map(|s| st.partition(s))
        .collect::<scarf_core::Result<Vec<_>>>()?;
    if json_out {
        return Ok(Outcome::ok(pretty(&parts)?));
    }
    let mut s = format!("colength: {}\n", st.colength()?);
    for p in &parts {
        s += &format!("sigma {}\n", p.sigma);
        for part in &p.parts {
            let shape = part
                .cells
                .as_cuboid()
                .map_or_else(|| "not a cuboid".to_string(), |c| c.to_string());
            s += &format!(
                "  corner {}  volume {}  {}\n",
                part.corner,
                part.volume(),
                shape
            );
        }
    }
    Ok(Outcome::ok(s))
}

fn dphi(input: Input, sigma_args: &[String], json_out: bool) -> Result<Outcome> {
    let res = match input {
        Input::Complex(x) => Resolution::from_complex(x)?,
        Input::Ideal(m) => {
            m.require_artinian()?;
            m.require_generic().context(
                "d_sigma phi needs the Scarf resolution of a generic ideal; pass a complex file",
            )?;
            Resolution::scarf(&m)?
        }
    };
    let sigmas = sigmas(sigma_args, res.n())?;
    let reports = sigmas
        .iter()
        .map(|s| res.verify(s))
        .collect::<scarf_core::Result<Vec<_>>>()?;
    let full = FullReport::from_sigmas(reports, res.scarf_complex().is_some());
    let all_sigmas = full.sigmas.len() == (1..=res.n()).product::<usize>();
    let scarf = full.scarf;
    let ok = full.pairings_match()
        && (!scarf || full.theorem_holds())
        && (!all_sigmas || full.factorization.holds);
    if json_out {
        return Ok(Outcome {
            text: pretty(&full)?,
            ok,
        });
    }
    let mut s = format!(
        "ideal: {}\nresolution: {} ({} top cells)\n",
        res.ideal(),
        if scarf { "Scarf" } else { "from complex file" },
        res.complex().top_cells().len()
    );
    for r in &full.sigmas {
        s += &format!(
            "sigma {}  orientation {:+}  (coefficients relative to dz = dz_n ^ ... ^ dz_1)\n",
            r.sigma, r.orientation_sign
        );
        for f in &r.faces {
            let verdict = if f.matches { "match" } else { "MISMATCH" };
            s += &format!(
                "  cell {} alpha {} sign {:+}: {}  coefficient {}  signed {}  volume {}  {verdict}\n",
                f.cell, f.label, f.sign, f.computed, f.coefficient, f.contribution, f.volume
            );
            if !f.residual.is_empty() {
                s += &format!("    residual terms: {:?}\n", f.residual);
            }
        }
        s += &format!(
            "  pairing {} {} colength {}\n",
            r.pairing,
            if r.pairing_matches { "=" } else { "!=" },
            r.colength
        );
    }
    if all_sigmas {
        s += &format!(
            "factorization: sum of pairings {} {} n! * colength = {}\n",
            full.factorization.pairing_sum,
            if full.factorization.holds { "=" } else { "!=" },
            full.factorization.expected
        );
    }
    Ok(Outcome { text: s, ok })
}

fn verify(input: Input, seed: u64, json_out: bool) -> Result<Outcome> {
    match input {
        Input::Ideal(m) => {
            let report = run_suite(&m, seed)?;
            let ok = report.passed();
            if json_out {
                return Ok(Outcome {
                    text: pretty(&report)?,
                    ok,
                });
            }
            let mut s = format!("ideal: {}\ngeneric: {}\n", report.ideal, report.generic);
            for c in &report.checks {
                let status = match c.passed {
                    Some(true) => "PASS",
                    Some(false) => "FAIL",
                    None => "SKIP",
                };
                s += &format!("{status} {}", c.name);
                if !c.detail.is_empty() {
                    s += &format!("  ({})", c.detail);
                }
                s += "\n";
            }
            Ok(Outcome { text: s, ok })
        }
        Input::Complex(x) => {
            let res = Resolution::from_complex(x)?;
            let mats = res.differentials();
            let is_complex = check_complex(mats);
            let exact = check_generic_exactness(mats, res.n(), seed);
            let orientation = res.complex().orientation_signs().ok();
            let coherent = orientation.as_deref() == Some(res.signs());
            let full = res.verify_all()?;
            let checks = [
                ("phi_phi_zero", is_complex),
                ("generic_exactness", exact.exact),
                ("orientation_coherent", coherent),
                ("pairing_equals_colength", full.pairings_match()),
                ("factorization", full.factorization.holds),
            ];
            let ok = checks.iter().all(|(_, p)| *p);
            if json_out {
                let map: serde_json::Map<String, serde_json::Value> = checks
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                return Ok(Outcome {
                    text: pretty(&json!({
                        "checks": map,
                        "minimal": check_minimal(mats),
                        "theorem_main": full.theorem_holds(),
                    }))?,
                    ok,
                });
            }
            let mut s = String::new();
            for (name, passed) in checks {
                s += &format!("{} {name}\n", if passed { "PASS" } else { "FAIL" });
            }
            s += &format!("info minimal: {}\n", check_minimal(mats));
            s += &format!("info theorem_main (all sigma): {}\n", full.theorem_holds());
            Ok(Outcome { text: s, ok })
        }
    }
}
