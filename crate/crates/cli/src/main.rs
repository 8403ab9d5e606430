use std::process::ExitCode;

use abcross::{AbCrossedModule, FinAbGroup, GroupHom};
use abcross_cli::corpus::corpus_model;
use abcross_cli::{
    emit_report, parse_model, parse_model_value, run_model, CliError, Format, RunOptions,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "abcross",
    version,
    about = "Abelian crossed modules, symmetric cohomology and extensions"
)]
struct Cli {
    /// Model file to run (JSON).
    #[arg(long, global = true)]
    file: Option<String>,
    #[arg(long, value_enum, default_value_t = OutFormat::Human, global = true)]
    format: OutFormat,
    /// Print the built-in corpus model and exit.
    #[arg(long)]
    seed_corpus: bool,
    /// Largest group order any task may enumerate (can only be lowered).
    #[arg(long, global = true)]
    max_order: Option<u64>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Human,
    Machine,
}

/// Groups are comma-separated invariant factors ("" for the trivial group),
/// matrices are rows separated by ';' with comma-separated entries.
#[derive(Subcommand)]
enum Command {
    /// Symmetric cohomology of degree 2 or 3.
    Cohomology {
        #[arg(long)]
        degree: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        representatives: bool,
    },
    /// Reduce the Picard category of d: B -> D.
    Reduce {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Obstruction class for realizing psi: Q -> pi0.
    Obstruction {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        ext: ExtArgs,
    },
    /// Equivalence classes of extensions realizing psi.
    Classify {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        ext: ExtArgs,
    },
    /// Run a verification suite ("all" for every suite).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Describe the extension B x Q with cocycle f and map F.
    ShowExtension {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        q: String,
        /// Nonzero cocycle entries "x/y/v" separated by ';', coordinates comma-separated.
        #[arg(long, default_value = "")]
        cocycle: String,
        /// F on each element of Q in enumeration order, elements separated by ';'.
        #[arg(long)]
        fmap: String,
    },
    /// Functors between the reduced Picard categories of two crossed modules.
    FunctorClasses {
        #[arg(long)]
        source_b: String,
        #[arg(long)]
        source_d: String,
        #[arg(long, default_value = "")]
        source_map: String,
        #[arg(long)]
        target_b: String,
        #[arg(long)]
        target_d: String,
        #[arg(long, default_value = "")]
        target_map: String,
        /// Matrix of pi0(source) -> pi0(target).
        #[arg(long, default_value = "")]
        phi0: String,
        /// Matrix of pi1(source) -> pi1(target).
        #[arg(long, default_value = "")]
        f: String,
    },
}

#[derive(clap::Args)]
struct ModuleArgs {
    #[arg(long)]
    b: String,
    #[arg(long)]
    d_group: String,
    /// Matrix of d: B -> D.
    #[arg(long, default_value = "")]
    map: String,
}

#[derive(clap::Args)]
struct ExtArgs {
    #[arg(long)]
    q: String,
    /// Matrix of psi: Q -> pi0, in the pi0 coordinates `reduce` reports.
    #[arg(long, default_value = "")]
    psi: String,
}

fn usage(message: impl ToString) -> CliError {
    CliError::Validation {
        object: "arguments".into(),
        message: message.to_string(),
    }
}

fn ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| usage(format!("'{t}' is not an integer")))
        })
        .collect()
}

fn matrix(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(ints).collect()
}

fn core(e: abcross::Error) -> CliError {
    match e {
        abcross::Error::SizeExceeded { .. } => CliError::Size(e.to_string()),
        other => usage(other),
    }
}

fn group(s: &str) -> Result<FinAbGroup, CliError> {
    FinAbGroup::new(&ints(s)?).map_err(core)
}

/// Declares a crossed module under `prefix` and returns it for π0/π1 lookups.
fn declare_module(
    model: &mut Value,
    prefix: &str,
    b: &str,
    d: &str,
    map: &str,
) -> Result<AbCrossedModule, CliError> {
    let (bg, dg) = (group(b)?, group(d)?);
    let m = matrix(map)?;
    let hom = GroupHom::new(
        &bg,
        &dg,
        if m.is_empty() {
            vec![Vec::new(); dg.rank()]
        } else {
            m
        },
    )
    .map_err(core)?;
    model["groups"][format!("{prefix}_B")] = json!(bg.factors());
    model["groups"][format!("{prefix}_D")] = json!(dg.factors());
    model["homs"][format!("{prefix}_d")] = json!({ "dom": format!("{prefix}_B"), "cod": format!("{prefix}_D"), "matrix": hom.matrix() });
    model["crossed_modules"][prefix] = json!({ "B": format!("{prefix}_B"), "D": format!("{prefix}_D"), "d": format!("{prefix}_d") });
    let cm = AbCrossedModule::new(hom);
    model["groups"][format!("{prefix}_pi0")] = json!(cm.pi0().factors());
    model["groups"][format!("{prefix}_pi1")] = json!(cm.pi1().factors());
    Ok(cm)
}

fn entries(s: &str) -> Result<Vec<Vec<Vec<i64>>>, CliError> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|e| e.split('/').map(ints).collect())
        .collect()
}

fn empty_model() -> Value {
    json!({ "groups": {}, "homs": {}, "crossed_modules": {}, "cochains": {}, "tasks": [] })
}

fn extension_task(
    model: &mut Value,
    kind: &str,
    module: &ModuleArgs,
    ext: &ExtArgs,
) -> Result<Value, CliError> {
    declare_module(model, "M", &module.b, &module.d_group, &module.map)?;
    model["groups"]["Q"] = json!(group(&ext.q)?.factors());
    model["homs"]["psi"] = json!({ "dom": "Q", "cod": "M_pi0", "matrix": matrix(&ext.psi)? });
    Ok(json!({ "kind": kind, "module": "M", "Q": "Q", "psi": "psi" }))
}

fn command_model(cmd: Command) -> Result<Value, CliError> {
    let mut model = empty_model();
    let task = match cmd {
        Command::Cohomology {
            degree,
            m,
            n,
            representatives,
        } => {
            model["groups"]["M"] = json!(group(&m)?.factors());
            model["groups"]["N"] = json!(group(&n)?.factors());
            json!({ "kind": "cohomology", "degree": degree, "M": "M", "N": "N", "representatives": representatives })
        }
        Command::Reduce { module } => {
            declare_module(&mut model, "M", &module.b, &module.d_group, &module.map)?;
            json!({ "kind": "reduce", "module": "M" })
        }
        Command::Obstruction { module, ext } => {
            extension_task(&mut model, "obstruction", &module, &ext)?
        }
        Command::Classify { module, ext } => extension_task(&mut model, "classify", &module, &ext)?,
        Command::Verify { suite } => json!({ "kind": "verify", "suite": suite }),
        Command::ShowExtension {
            module,
            q,
            cocycle,
            fmap,
        } => {
            declare_module(&mut model, "M", &module.b, &module.d_group, &module.map)?;
            model["groups"]["Q"] = json!(group(&q)?.factors());
            model["cochains"]["f"] =
                json!({ "degree": 2, "M": "Q", "N": "M_B", "entries": entries(&cocycle)? });
            let fmap: Vec<Vec<i64>> = fmap.split(';').map(ints).collect::<Result<_, _>>()?;
            json!({ "kind": "show-extension", "module": "M", "cocycle": "f", "fmap": fmap })
        }
        Command::FunctorClasses {
            source_b,
            source_d,
            source_map,
            target_b,
            target_d,
            target_map,
            phi0,
            f,
        } => {
            declare_module(&mut model, "S", &source_b, &source_d, &source_map)?;
            declare_module(&mut model, "T", &target_b, &target_d, &target_map)?;
            model["homs"]["phi0"] =
                json!({ "dom": "S_pi0", "cod": "T_pi0", "matrix": matrix(&phi0)? });
            model["homs"]["f"] = json!({ "dom": "S_pi1", "cod": "T_pi1", "matrix": matrix(&f)? });
            json!({ "kind": "functor-classes", "source": "S", "target": "T", "phi0": "phi0", "f": "f" })
        }
    };
    model["tasks"] = json!([task]);
    Ok(model)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    if cli.seed_corpus {
        let mut s = serde_json::to_string_pretty(&corpus_model()).expect("values serialize");
        s.push('\n');
        print!("{s}");
        return Ok(0);
    }
    let model = match (cli.file, cli.command) {
        (Some(path), None) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
            parse_model(&text)?
        }
        (None, Some(cmd)) => parse_model_value(command_model(cmd)?)?,
        (Some(_), Some(_)) => return Err(usage("--file cannot be combined with a subcommand")),
        (None, None) => return Err(usage("give --file, --seed-corpus or a subcommand")),
    };
    let opts = cli
        .max_order
        .map(RunOptions::with_max_order)
        .unwrap_or_default();
    let format = match cli.format {
        OutFormat::Human => Format::Human,
        OutFormat::Machine => Format::Machine,
    };
    let report = run_model(&model, opts);
    print!("{}", emit_report(&report, format));
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("abcross: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
