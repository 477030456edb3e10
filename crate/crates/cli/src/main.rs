use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use orientalis::cells::{parse_in, print, print_unicode, CellExpr};
use orientalis::cylinders::expansion_cone;
use orientalis::oriental::{cosimplicial_map, oriental, oriental_context, oriental_expansion, MonotoneMap};
use orientalis::polygraph::{Chain, Polygraph};
use orientalis::report::VerifyReport;
use orientalis::steiner::{simplex_adc, CellTable};
use orientalis::verify::{verify_oriental, verify_polygraph};

/// Largest `n` accepted by `verify` without `--force`.
const VERIFY_LIMIT: usize = 8;
const CACHE_ENV: &str = "ORIENTALIS_CACHE_DIR";

#[derive(Parser)]
#[command(name = "orientalis", version, about = "Orientals as free algebras of the expansion monad")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the oriental O_N, or an imported polygraph.
    Gen {
        n: Option<usize>,
        #[command(flatten)]
        format: Format,
        /// Read a polygraph in JSON form from FILE, or stdin for "-".
        #[arg(long, value_name = "FILE", conflicts_with = "n")]
        import: Option<String>,
    },
    /// Run the verification pipeline on O_N or on an imported polygraph.
    Verify {
        n: Option<usize>,
        /// Comma-separated subset of checks to run.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Allow N above the default limit.
        #[arg(long)]
        force: bool,
        #[arg(long, value_name = "FILE", conflicts_with = "n")]
        import: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply O(φ) for an order-preserving map φ to a cell.
    Map {
        /// Values of φ, e.g. 0,0,1.
        #[arg(long)]
        phi: String,
        /// Domain [N]; defaults to one less than the number of values.
        #[arg(long)]
        from: Option<usize>,
        /// Codomain [M]; defaults to the largest value.
        #[arg(long)]
        to: Option<usize>,
        #[arg(long)]
        cell: String,
        #[command(flatten)]
        format: Format,
    },
    /// Evaluate a cell of O_N to its table.
    Eval {
        n: usize,
        #[arg(long)]
        cell: String,
        #[command(flatten)]
        format: Format,
    },
    /// Print the expansion cone of a cell of O_N.
    Cone {
        n: usize,
        #[arg(long)]
        cell: String,
        #[command(flatten)]
        format: Format,
    },
    /// Print an augmented directed complex.
    Adc {
        #[command(subcommand)]
        which: AdcCommand,
    },
}

#[derive(Subcommand)]
enum AdcCommand {
    /// The complex of the N-simplex.
    Simplex {
        n: usize,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    /// ASCII notation.
    #[arg(long)]
    text: bool,
    /// Unicode notation.
    #[arg(long)]
    unicode: bool,
}

impl Format {
    /// Unicode when asked for, or when the input used it and ASCII was not
    /// requested.
    fn unicode(self, input: &str) -> bool {
        self.unicode || (!self.text && input.contains('⟨'))
    }
}

fn show(e: &CellExpr, unicode: bool) -> String {
    if unicode {
        print_unicode(e)
    } else {
        print(e)
    }
}

fn show_chain(c: &Chain, unicode: bool) -> String {
    if unicode {
        c.to_string_unicode()
    } else {
        c.to_string()
    }
}

fn chain_json(c: &Chain) -> Value {
    Value::Object(c.iter().map(|(k, v)| (k.to_json_key(), json!(v))).collect())
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

fn import(path: &str) -> Result<Polygraph> {
    Ok(Polygraph::from_json(&read_input(path)?)?)
}

/// `O_n`, through the on-disk cache when one is configured.
fn cached_oriental(n: usize) -> Result<Polygraph> {
    let Some(dir) = std::env::var_os(CACHE_ENV) else {
        return Ok((*oriental(n as isize)).clone());
    };
    let path = PathBuf::from(dir).join(format!("oriental-{n}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(s) = Polygraph::from_json(&text) {
            return Ok(s);
        }
    }
    let s = (*oriental(n as isize)).clone();
    std::fs::create_dir_all(path.parent().expect("file in a directory"))
        .and_then(|_| std::fs::write(&path, s.to_json()))
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(s)
}

fn gen_text(s: &Polygraph, unicode: bool) -> String {
    let mut out = String::new();
    for k in s.keys() {
        let key = show(&CellExpr::gen(k.clone()), unicode);
        match s.boundary_of(k) {
            Some((src, tgt)) => out.push_str(&format!("{key} : {} -> {}\n", show(src, unicode), show(tgt, unicode))),
            None => out.push_str(&format!("{key}\n")),
        }
    }
    out
}

fn table_text(t: &CellTable, unicode: bool) -> String {
    if unicode {
        t.to_string_unicode()
    } else {
        t.to_string()
    }
}

fn report_json(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r
        .entries
        .iter()
        .map(|(c, t)| {
            json!({
                "name": c.name,
                "passed": c.failures.is_empty(),
                "checked": c.checked,
                "failures": c.failures,
                "skipped": c.skipped,
                "seconds": t.as_secs_f64(),
            })
        })
        .collect();
    json!({ "passed": r.passed(), "checks": checks })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { n, format, import: path } => {
            let s = match (n, path) {
                (_, Some(p)) => import(&p)?,
                (Some(n), None) => cached_oriental(n)?,
                (None, None) => bail!("gen needs N or --import"),
            };
            if format.json {
                println!("{}", s.to_json());
            } else {
                print!("{}", gen_text(&s, format.unicode));
            }
        }
        Command::Verify {
            n,
            only,
            force,
            import: path,
            json,
        } => {
            let report = match (n, path) {
                (_, Some(p)) => verify_polygraph(&import(&p)?, only.as_deref())?,
                (Some(n), None) => {
                    if n > VERIFY_LIMIT && !force {
                        bail!("verify {n} is above {VERIFY_LIMIT}; pass --force to run it anyway");
                    }
                    verify_oriental(n, only.as_deref())?
                }
                (None, None) => bail!("verify needs N or --import"),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report_json(&report))?);
            } else {
                print!("{report}");
            }
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Map {
            phi,
            from,
            to,
            cell,
            format,
        } => {
            let phi = MonotoneMap::parse(&phi, to)?;
            if let Some(from) = from {
                if from != phi.dom() {
                    bail!("--phi has {} values, so its domain is [{}], not [{from}]", phi.dom() + 1, phi.dom());
                }
            }
            let f = cosimplicial_map(&phi)?;
            let x = parse_in(&cell, f.source())?;
            let y = f.apply(&x)?;
            if format.json {
                let v = json!({
                    "phi": phi.values(),
                    "from": phi.dom(),
                    "to": phi.cod(),
                    "cell": print(&x),
                    "image": print(&y),
                });
                println!("{v}");
            } else {
                println!("{}", show(&y, format.unicode(&cell)));
            }
        }
        Command::Eval { n, cell, format } => {
            let s = oriental(n as isize);
            let x = parse_in(&cell, &s)?;
            let t = oriental_context(n).eval(&x)?;
            if format.json {
                let rows: Vec<Value> = t
                    .rows()
                    .iter()
                    .map(|(neg, pos)| json!({"neg": chain_json(neg), "pos": chain_json(pos)}))
                    .collect();
                println!("{}", json!({ "cell": print(&x), "rows": rows }));
            } else {
                println!("{}", table_text(&t, format.unicode(&cell)));
            }
        }
        Command::Cone { n, cell, format } => {
            let ex = oriental_expansion(n);
            let x = parse_in(&cell, ex.result())?;
            let cone = expansion_cone(&x, &ex)?;
            if format.json {
                println!("{}", cone.to_json_value());
            } else {
                let u = format.unicode(&cell);
                println!("{}", if u { cone.to_string_unicode() } else { cone.to_string() });
                println!("# s a_i and t a_i are principal cells of the boundary cones");
                for i in 0..cone.dim() {
                    println!("s a{i} = {}", show(cone.aux(orientalis::cells::Sign::Neg, i), u));
                    println!("t a{i} = {}", show(cone.aux(orientalis::cells::Sign::Pos, i), u));
                }
                println!("principal a{} = {}", cone.dim(), show(cone.principal(), u));
                println!("base = {}", show(cone.base(), u));
            }
        }
        Command::Adc {
            which: AdcCommand::Simplex { n, format },
        } => {
            let k = simplex_adc(n as isize);
            if format.json {
                println!("{}", k.to_json());
            } else {
                let u = format.unicode;
                for (d, basis) in k.bases().iter().enumerate() {
                    for b in basis {
                        let key = show(&CellExpr::gen(b.clone()), u);
                        if d == 0 {
                            println!("e {key} = 1");
                        } else {
                            let diff = k.diff_of(b).map_err(|e| anyhow!(e))?;
                            println!("d {key} = {}", show_chain(&diff, u));
                        }
                    }
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
