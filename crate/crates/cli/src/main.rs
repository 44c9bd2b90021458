use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use recspin::clifford::{build_rep, witt_frame, CliffordRep, Signature, WittKind};
use recspin::exact::GaussianRational as GR;
use recspin::holonomy::{
    parse_algebra, standard_complex_structure, Normalization, ALGEBRA_GRAMMAR,
};
use recspin::invariant::{invariant_lines, line_count};
use recspin::par::Exec;
use recspin::spin_geometry::{dirac_current, hermitian_form, kahler_spectrum};
use recspin::verify::{run_suite, SuiteName, SuiteSpec, DEFAULT_MAX_N};

#[derive(Parser)]
#[command(
    name = "recspin",
    version,
    about = "Spinor lines preserved by holonomy algebras, computed exactly over Q(i)"
)]
struct Cli {
    /// Scaling of the spin lift of so(r,s).
    #[arg(long, global = true, default_value = "half")]
    normalization: Normalization,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print or export the Clifford representation of signature r,s.
    Rep {
        #[arg(long)]
        signature: Signature,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant spinor lines of an algebra.
    Lines {
        #[arg(long)]
        algebra: String,
    },
    /// Dirac current of a spinor read from a JSON array of scalars.
    Dirac {
        #[arg(long)]
        signature: Signature,
        #[arg(long)]
        spinor: PathBuf,
    },
    /// Spectrum of the Kähler form of the standard complex structure.
    Kahler {
        #[arg(long)]
        signature: Signature,
    },
    /// Run a claim suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Export algebra generators as JSON.
    Export {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            ok: true,
        }
    }
}

fn strings(v: &[GR]) -> Vec<String> {
    v.iter().map(GR::to_string).collect()
}

fn rep_json(rep: &CliffordRep) -> Value {
    let sg = rep.signature();
    json!({
        "signature": [sg.r, sg.s],
        "dim": rep.dim(),
        "generators": rep.generators().iter().map(|g| g.to_strings()).collect::<Vec<_>>(),
    })
}

fn cmd_rep(sg: Signature, out: Option<&PathBuf>) -> Result<Output> {
    let rep = build_rep(sg)?;
    let j = rep_json(&rep);
    let mut text = format!("Clifford representation {sg}, dim Δ = {}\n", rep.dim());
    if let Some(path) = out {
        fs::write(path, serde_json::to_string_pretty(&j)?)
            .with_context(|| format!("writing {}", path.display()))?;
        text.push_str(&format!("written to {}\n", path.display()));
    } else {
        for (i, g) in rep.generators().iter().enumerate() {
            text.push_str(&format!("e{}:\n", i + 1));
            for row in g.to_strings() {
                text.push_str(&format!("  {}\n", row.join("  ")));
            }
        }
    }
    Ok(Output::ok(j, text))
}

fn cmd_lines(spec: &str, norm: Normalization, exec: Exec) -> Result<Output> {
    let g = parse_algebra(spec)?;
    let rep = build_rep(g.signature)?;
    let imgs = g.spin_images(&rep, norm, exec)?;
    let report = invariant_lines(&imgs, rep.dim(), exec)?;
    let lc = line_count(&report);
    let j = json!({
        "algebra": spec,
        "name": g.name,
        "signature": [g.signature.r, g.signature.s],
        "algebra_dim": g.dim(),
        "spinor_dim": rep.dim(),
        "normalization": norm,
        "isolated": lc.isolated,
        "families": lc.families,
        "annihilated_isolated": lc.annihilated_isolated,
        "components": report.components,
        "residual_factors": report.residual_factors,
    });
    let mut text = format!(
        "{} in so{} (dim {}), Δ of dim {}, normalization {norm}\n{} isolated line(s), {} famil{}\n",
        g.name,
        g.signature,
        g.dim(),
        rep.dim(),
        lc.isolated,
        lc.families,
        if lc.families == 1 { "y" } else { "ies" },
    );
    for (k, c) in report.components.iter().enumerate() {
        let kind = match (c.isolated, c.annihilated) {
            (true, true) => "line, annihilated",
            (true, false) => "line",
            (false, true) => "family, annihilated",
            (false, false) => "family",
        };
        text.push_str(&format!(
            "[{k}] dim {} {kind}\n  character: ({})\n",
            c.dim(),
            strings(&c.character).join(", ")
        ));
        for b in c.subspace.to_strings() {
            text.push_str(&format!("  basis: ({})\n", b.join(", ")));
        }
    }
    if !report.residual_factors.is_empty() {
        text.push_str(&format!(
            "{} factor(s) without roots in Q(i)\n",
            report.residual_factors.len()
        ));
    }
    Ok(Output::ok(j, text))
}

fn cmd_dirac(sg: Signature, path: &PathBuf) -> Result<Output> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let items: Vec<String> =
        serde_json::from_str(&raw).context("spinor file must be a JSON array of scalars")?;
    let s: Vec<GR> = items
        .iter()
        .map(|x| x.parse())
        .collect::<recspin::Result<_>>()?;
    let rep = build_rep(sg)?;
    let form = hermitian_form(&rep)?;
    let p = dirac_current(&rep, &form, &s)?;
    let norm = p.norm(sg);
    let kind = if p.is_zero() {
        "zero"
    } else if norm.is_zero() {
        "isotropic"
    } else {
        "timelike"
    };
    let along_p = if sg.r == 1 && sg.s >= 1 {
        let (pt, _) = witt_frame(sg, WittKind::Lorentz)?
            .lorentz_pq()
            .map(|(a, b)| (a.clone(), b.clone()))
            .expect("lorentz");
        Some(p.is_multiple_of(&pt))
    } else {
        None
    };
    let j = json!({
        "signature": [sg.r, sg.s],
        "current": strings(&p.components),
        "g_pp": norm.to_string(),
        "kind": kind,
        "proportional_to_p": along_p,
    });
    let text = format!(
        "p = ({})\ng(p,p) = {norm}\n{kind}\n",
        strings(&p.components).join(", ")
    );
    Ok(Output::ok(j, text))
}

fn cmd_kahler(sg: Signature) -> Result<Output> {
    let rep = build_rep(sg)?;
    let k = kahler_spectrum(&rep, &standard_complex_structure(sg)?)?;
    let j = json!({
        "signature": [sg.r, sg.s],
        "spectrum": k.spectrum.iter().map(|(l, m)| json!({ "eigenvalue": l.to_string(), "multiplicity": m })).collect::<Vec<_>>(),
    });
    let mut text = format!("Kähler form on Δ{sg}\n");
    for (l, m) in &k.spectrum {
        text.push_str(&format!("  {l}  x{m}\n"));
    }
    Ok(Output::ok(j, text))
}

fn cmd_verify(cli: &Cli, suite: &str, max_n: usize, exec: Exec) -> Result<Output> {
    let name: SuiteName = suite.parse()?;
    let spec = SuiteSpec {
        name,
        normalization: cli.normalization,
        max_n,
        seed: cli.seed,
        exec,
    };
    let report = run_suite(spec)?;
    Ok(Output {
        json: serde_json::to_value(&report)?,
        text: report.to_text(),
        ok: report.overall,
    })
}

fn cmd_export(spec: &str, out: Option<&PathBuf>) -> Result<Output> {
    let g = parse_algebra(spec)?;
    let j = g.to_json_value();
    let mut text = serde_json::to_string_pretty(&j)? + "\n";
    if let Some(path) = out {
        fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
        text = format!("{} generators written to {}\n", g.dim(), path.display());
    }
    Ok(Output::ok(j, text))
}

fn run(cli: &Cli) -> Result<Output> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    match &cli.command {
        Command::Rep { signature, out } => cmd_rep(*signature, out.as_ref()),
        Command::Lines { algebra } => cmd_lines(algebra, cli.normalization, exec),
        Command::Dirac { signature, spinor } => cmd_dirac(*signature, spinor),
        Command::Kahler { signature } => cmd_kahler(*signature),
        Command::Verify { suite, max_n } => cmd_verify(cli, suite, *max_n, exec),
        Command::Export { algebra, out } => cmd_export(algebra, out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("json"))
                }
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(recspin::Error::AlgebraSpec { .. }) = e.downcast_ref::<recspin::Error>() {
                eprintln!("grammar:\n{ALGEBRA_GRAMMAR}");
            }
            ExitCode::FAILURE
        }
    }
}
