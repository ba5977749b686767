use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use contact_cli::commands::{self, Fix};
use contact_cli::session::{self, parse_session};
use contact_cli::CliError;
use contact_core::elliptic::DEFAULT_TORSION_BOUND;
use contact_core::forms::TernaryForm;
use contact_core::registry;
use contact_core::report::Report;
use contact_core::reproduce::{reproduce, SECTIONS};

/// Contact curves for n-torsion points on smooth plane cubics.
#[derive(Parser)]
#[command(name = "ncontact", version)]
struct Cli {
    /// Print `key = value` lines instead of formatted reports.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a curve with a single n-fold contact point at T.
    Contact {
        /// `y^2 = x^3 + ...`, inline or a file holding it.
        #[arg(long)]
        curve: String,
        /// The starting function b_d in x and y.
        #[arg(long)]
        b: String,
        #[arg(long = "T")]
        t: String,
        #[arg(long)]
        n: u64,
        /// `auto`, or a multiplier q added as q * (curve equation).
        #[arg(long)]
        smooth_fix: Option<String>,
        #[arg(long, default_value = "miller")]
        xi: String,
        #[arg(long, default_value = "modular")]
        engine: String,
    },
    /// Order and multiples of a point.
    Torsion {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = DEFAULT_TORSION_BOUND)]
        bound: u64,
    },
    /// The function with divisor n T - n O.
    Xi {
        #[arg(long)]
        curve: String,
        #[arg(long = "T")]
        t: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "miller")]
        using: String,
    },
    /// Smoothness of a projective plane curve F(X, Y, Z) = 0.
    Smooth {
        #[arg(long)]
        form: String,
        #[arg(long, default_value = "modular")]
        engine: String,
    },
    /// Splitting numbers of the contact curves C_d against a cubic.
    Zariski {
        #[arg(long)]
        n: u64,
        /// Comma separated orders, e.g. 1,2,4.
        #[arg(long)]
        orders: String,
    },
    /// Recompute one of the worked examples.
    Reproduce {
        #[arg(long)]
        section: String,
    },
    /// List the available xi strategies, smoothness engines and examples.
    List,
    /// Run a session file.
    Run { file: String },
}

fn core(source: contact_core::Error) -> CliError {
    CliError::Command {
        context: "computation failed".into(),
        source,
    }
}

fn usage(source: contact_core::Error) -> CliError {
    CliError::Usage(source.to_string())
}

/// Reads `arg` as a file if one exists at that path.
fn inline_or_file(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: arg.to_string(),
            source,
        })
    } else {
        Ok(arg.to_string())
    }
}

fn list() -> Report {
    let mut r = Report::new("strategies");
    for b in registry::XI_BUILDERS {
        r.value(format!("xi.{}", b.name()), b.describe());
    }
    for e in registry::SMOOTHNESS_ENGINES {
        r.value(format!("engine.{}", e.name()), e.describe());
    }
    r.value("reproduce", SECTIONS.join(", "));
    r
}

fn dispatch(cmd: Cmd) -> Result<Vec<Report>, CliError> {
    let one = |r: contact_core::Result<Report>| r.map(|r| vec![r]).map_err(core);
    match cmd {
        Cmd::Contact {
            curve,
            b,
            t,
            n,
            smooth_fix,
            xi,
            engine,
        } => {
            let curve = commands::parse_curve(&inline_or_file(&curve)?).map_err(usage)?;
            let b = commands::parse_poly(&b).map_err(usage)?;
            let t = commands::parse_point(&t)
                .and_then(|p| commands::point_on(&curve, p))
                .map_err(usage)?;
            let fix = match smooth_fix.as_deref() {
                None => Fix::None,
                Some("auto") => Fix::Auto,
                Some(q) => Fix::Multiplier(commands::parse_poly(q).map_err(usage)?),
            };
            let builder = registry::xi_builder(&xi).map_err(usage)?;
            let engine = registry::smoothness_engine(&engine).map_err(usage)?;
            one(commands::contact_report(&curve, &b, &t, n, &fix, builder, engine))
        }
        Cmd::Torsion { curve, point, bound } => {
            let curve = commands::parse_curve(&inline_or_file(&curve)?).map_err(usage)?;
            let p = commands::parse_point(&point)
                .and_then(|p| commands::point_on(&curve, p))
                .map_err(usage)?;
            one(commands::torsion_report(&curve, &p, bound))
        }
        Cmd::Xi { curve, t, n, using } => {
            let curve = commands::parse_curve(&inline_or_file(&curve)?).map_err(usage)?;
            let t = commands::parse_point(&t)
                .and_then(|p| commands::point_on(&curve, p))
                .map_err(usage)?;
            let builder = registry::xi_builder(&using).map_err(usage)?;
            one(commands::xi_report(&curve, &t, n, builder))
        }
        Cmd::Smooth { form, engine } => {
            let form = TernaryForm::parse(&inline_or_file(&form)?).map_err(usage)?;
            let engine = registry::smoothness_engine(&engine).map_err(usage)?;
            one(commands::smooth_report(&form, engine))
        }
        Cmd::Zariski { n, orders } => {
            let orders = commands::parse_orders(&orders).map_err(usage)?;
            let z = commands::zariski_report(n, &orders).map_err(core)?;
            Ok(vec![z.to_report()])
        }
        Cmd::Reproduce { section } => match reproduce(&section) {
            Err(e @ contact_core::Error::UnknownSection(_)) => Err(usage(e)),
            r => one(r),
        },
        Cmd::List => Ok(vec![list()]),
        Cmd::Run { file } => {
            let text = std::fs::read_to_string(&file).map_err(|source| CliError::Io {
                path: file.clone(),
                source,
            })?;
            session::execute(&parse_session(&text)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(reports) => {
            for r in &reports {
                if cli.machine {
                    print!("{}", r.render_machine());
                } else {
                    print!("{r}");
                }
            }
            ExitCode::from(session::exit_code(&reports) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
