use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use flamingo::combinat::OrderedSetPartition;
use flamingo::diagrams::build_tensor_diagram;
use flamingo::grassmann::{compare_up_to_sign, gc_jellyfish, phi_star, SignMatch};
use flamingo::invariants::{jellyfish_invariant, signed_minor_products};
use flamingo::relations::{
    orbit_rank, recurrence_terms, rotation_orbit, signed_sum, verify_conjecture,
};
use flamingo::specht::{
    dimension, distinct_leading_monomials, exact_rank, hook_family, verify_hook_basis,
    SpechtModule, SpechtShape,
};
use flamingo::tableaux::enumerate_tableaux;
use flamingo::verify::{run_suite, Limits};
use flamingo::Error;

#[derive(Parser)]
#[command(
    name = "flamingo",
    version,
    about = "Jellyfish invariants of flamingo Specht modules"
)]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 20240601)]
    seed: u64,
    /// Worker threads for sweeps
    #[arg(long, global = true, env = "FLAMINGO_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand [π]_r in the matrix entries
    Invariant {
        #[arg(long)]
        partition: OrderedSetPartition,
        #[arg(long)]
        r: usize,
        /// Show the signed minor products instead of the expansion
        #[arg(long, conflicts_with = "json")]
        pretty: bool,
    },
    /// List the r-jellyfish tableaux with their signs
    Tableaux {
        #[arg(long)]
        partition: OrderedSetPartition,
        #[arg(long)]
        r: usize,
    },
    /// Check the recurrence for (prefix | A∪B | C)
    Recurrence {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "C")]
        c: String,
        #[arg(long)]
        r: usize,
        /// Leading blocks, `|`-separated
        #[arg(long)]
        prefix: Option<String>,
    },
    /// Rank of a family of invariants
    Independence {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Seed partition for the orbit family
        #[arg(long)]
        partition: Option<OrderedSetPartition>,
    },
    /// Membership of [π]_r in its flamingo Specht module
    SpechtCheck {
        #[arg(long)]
        partition: OrderedSetPartition,
        #[arg(long)]
        r: usize,
    },
    /// Compare the Grassmann–Cayley expansion with [π]_r
    GcCompare {
        #[arg(long)]
        partition: OrderedSetPartition,
        #[arg(long)]
        r: usize,
    },
    /// Build the tensor diagram
    Diagram {
        #[arg(long)]
        partition: OrderedSetPartition,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interval partitions as a basis of the hook module
    HookBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Independence of partitions a few transpositions from noncrossing
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Size and rank of a rotation orbit
    OrbitRank {
        #[arg(long)]
        partition: OrderedSetPartition,
        #[arg(long)]
        r: usize,
    },
    /// Run every check up to the given size
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Nc,
    Hook,
    Orbit,
    Conjecture,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Text to print and whether the requested check held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn parse_set(s: &str) -> Result<Vec<usize>, Error> {
    let parse_err = |detail: String| Error::Parse {
        what: "set",
        detail,
    };
    let mut v = s
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| parse_err(format!("{t:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    v.sort_unstable();
    Ok(v)
}

fn parse_prefix(s: &str) -> Result<Vec<Vec<usize>>, Error> {
    s.split('|').map(parse_set).collect()
}

fn require(value: Option<usize>, name: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required for this family")))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let as_json = cli.json;
    match &cli.command {
        Command::Invariant {
            partition,
            r,
            pretty,
        } => {
            let p = jellyfish_invariant(partition, *r)?;
            if as_json {
                return Ok(Outcome::ok(p.to_json()));
            }
            if *pretty {
                let mut text = String::new();
                for (sign, factors) in signed_minor_products(partition, *r)? {
                    let minors: Vec<String> = factors
                        .iter()
                        .map(|f| format!("M[{}; {}]", join(&f.rows), join(&f.cols)))
                        .collect();
                    let _ = writeln!(
                        text,
                        "{} {}",
                        if sign > 0 { '+' } else { '-' },
                        minors.join(" * ")
                    );
                }
                return Ok(Outcome::ok(text.trim_end().to_string()));
            }
            Ok(Outcome::ok(p.to_string()))
        }
        Command::Tableaux { partition, r } => {
            let ts = enumerate_tableaux(partition, *r)?;
            if as_json {
                let list: Vec<_> = ts
                    .iter()
                    .map(|t| {
                        json!({
                            "tentacles": t.tentacles(),
                            "reading_word": t.reading_word(),
                            "inversions": t.inversion_number(),
                            "sign": t.sign(),
                        })
                    })
                    .collect();
                return Ok(Outcome::ok(
                    json!({"count": ts.len(), "tableaux": list}).to_string(),
                ));
            }
            let mut text = format!("{} tableaux\n", ts.len());
            for t in &ts {
                let _ = write!(
                    text,
                    "\ninv={} sign={:+}\n{t}",
                    t.inversion_number(),
                    t.sign()
                );
            }
            Ok(Outcome::ok(text.trim_end().to_string()))
        }
        Command::Recurrence { a, b, c, r, prefix } => {
            let prefix = prefix
                .as_deref()
                .map(parse_prefix)
                .transpose()?
                .unwrap_or_default();
            let rec =
                recurrence_terms(&prefix, &parse_set(a)?, &parse_set(b)?, &parse_set(c)?, *r)?;
            let n = rec.lhs.n();
            let lhs = jellyfish_invariant(&rec.lhs, *r)?;
            let rhs = signed_sum(rec.rhs.iter().map(|(s, q)| ((*s).into(), q)), n, *r)?;
            let holds = lhs == rhs;
            let text = if as_json {
                let terms: Vec<_> = rec
                    .rhs
                    .iter()
                    .map(|(s, q)| json!({"sign": s, "partition": q.to_string()}))
                    .collect();
                json!({"lhs": rec.lhs.to_string(), "rhs": terms, "holds": holds}).to_string()
            } else {
                let mut text = format!("[{}]_{r} =", rec.lhs);
                for (s, q) in &rec.rhs {
                    let _ = write!(text, "\n  {} [{q}]_{r}", if *s > 0 { '+' } else { '-' });
                }
                let _ = write!(text, "\n{}", if holds { "holds" } else { "FAILS" });
                text
            };
            Ok(Outcome { text, ok: holds })
        }
        Command::Independence {
            family,
            n,
            d,
            r,
            partition,
        } => {
            let (members, r) = match family {
                Family::Nc => {
                    let r = require(*r, "r")?;
                    (
                        flamingo::combinat::enumerate_noncrossing(
                            require(*n, "n")?,
                            require(*d, "d")?,
                            r,
                        )?,
                        r,
                    )
                }
                Family::Hook => (hook_family(require(*n, "n")?, require(*d, "d")?)?, 1),
                Family::Orbit => {
                    let pi = partition.clone().ok_or_else(|| {
                        Error::InvalidParameters(
                            "--partition is required for the orbit family".into(),
                        )
                    })?;
                    (rotation_orbit(&pi), require(*r, "r")?)
                }
                Family::Conjecture => {
                    let r = require(*r, "r")?;
                    (
                        flamingo::relations::conjecture_family(
                            require(*n, "n")?,
                            require(*d, "d")?,
                            r,
                        )?,
                        r,
                    )
                }
            };
            let invs = members
                .iter()
                .map(|pi| jellyfish_invariant(pi, r))
                .collect::<Result<Vec<_>, _>>()?;
            let rank = exact_rank(&invs).rank;
            let leading = distinct_leading_monomials(&invs)?;
            // an orbit may be dependent; other families are claimed independent
            let ok = matches!(family, Family::Orbit) || rank == members.len();
            let text = if as_json {
                json!({"size": members.len(), "rank": rank, "distinct_leading_monomials": leading})
                    .to_string()
            } else {
                format!(
                    "size={} rank={rank} distinct_leading_monomials={leading}",
                    members.len()
                )
            };
            Ok(Outcome { text, ok })
        }
        Command::SpechtCheck { partition, r } => {
            let shape = SpechtShape::flamingo(partition.n(), partition.num_blocks(), *r)?;
            let module = SpechtModule::new(shape)?;
            let member = module.contains(&jellyfish_invariant(partition, *r)?);
            let dim = dimension(&module.shape);
            let text = if as_json {
                json!({
                    "shape": module.shape.lambda,
                    "dimension": dim.to_string(),
                    "spanning_rank": module.rank(),
                    "member": member,
                })
                .to_string()
            } else {
                format!(
                    "shape={} dimension={dim} spanning_rank={} member={member}",
                    module.shape,
                    module.rank()
                )
            };
            Ok(Outcome {
                text,
                ok: member && dim == module.rank().into(),
            })
        }
        Command::GcCompare { partition, r } => {
            let gc = phi_star(&gc_jellyfish(partition, *r)?)?;
            let m = compare_up_to_sign(&gc, &jellyfish_invariant(partition, *r)?);
            let text = match (as_json, m.as_sign()) {
                (true, sign) => json!({"sign": sign, "proportional": sign.is_some()}).to_string(),
                (false, Some(s)) => format!("{s:+}"),
                (false, None) => "NOT PROPORTIONAL".to_string(),
            };
            Ok(Outcome {
                text,
                ok: m != SignMatch::NotProportional,
            })
        }
        Command::Diagram {
            partition,
            r,
            format,
            out,
        } => {
            let diagram = build_tensor_diagram(partition, *r)?;
            let text = match format {
                Format::Dot => diagram.to_dot(),
                Format::Json => diagram.to_json(),
            };
            match out {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| {
                        Error::InvalidParameters(format!("{}: {e}", path.display()))
                    })?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text.trim_end().to_string())),
            }
        }
        Command::HookBasis { n, d } => {
            let report = verify_hook_basis(*n, *d)?;
            let text = if as_json {
                serde_json::to_string(&report).expect("plain data")
            } else {
                format!(
                    "family={} rank={} dimension={} all_in_module={}",
                    report.family_size, report.rank, report.dimension, report.all_in_module
                )
            };
            Ok(Outcome {
                text,
                ok: report.holds(),
            })
        }
        Command::Conjecture { n, d, r } => {
            let report = verify_conjecture(*n, *d, *r)?;
            let text = if as_json {
                serde_json::to_string(&report).expect("plain data")
            } else {
                format!(
                    "|S|={} rank={} noncrossing={}",
                    report.family_size, report.rank, report.noncrossing
                )
            };
            Ok(Outcome {
                text,
                ok: report.independent(),
            })
        }
        Command::OrbitRank { partition, r } => {
            let report = orbit_rank(partition, *r)?;
            let text = if as_json {
                serde_json::to_string(&report).expect("plain data")
            } else {
                format!("orbit={} rank={}", report.orbit, report.rank)
            };
            Ok(Outcome::ok(text))
        }
        Command::VerifyAll { n_max } => {
            let reports = run_suite(Limits::capped(*n_max), cli.seed, |rep| {
                eprintln!(
                    "[{:>2}] {} {} ({} cases, {:.1}s)",
                    rep.id,
                    if rep.passed() { "ok  " } else { "FAIL" },
                    rep.title,
                    rep.cases,
                    rep.seconds
                );
            });
            let ok = reports.iter().all(|r| r.passed());
            let text = if as_json {
                serde_json::to_string_pretty(&reports).expect("plain data")
            } else {
                let mut text = String::new();
                for rep in &reports {
                    let _ = writeln!(
                        text,
                        "{:>2} {} {} cases={} failed={}",
                        rep.id,
                        if rep.passed() { "PASS" } else { "FAIL" },
                        rep.title,
                        rep.cases,
                        rep.failed
                    );
                    for line in rep.notes.iter().chain(&rep.failures) {
                        let _ = writeln!(text, "     {line}");
                    }
                }
                text.trim_end().to_string()
            };
            Ok(Outcome { text, ok })
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("flamingo: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            if !outcome.text.is_empty() {
                let mut out = io::stdout().lock();
                if let Err(e) = writeln!(out, "{}", outcome.text) {
                    if e.kind() != io::ErrorKind::BrokenPipe {
                        eprintln!("flamingo: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("flamingo: {e}");
            ExitCode::from(2)
        }
    }
}
