//! Command-line front end for the avoidgray generators and checkers.

use std::fmt::Display;
use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use avoidgray::catalan231::{build_pattern3_list, Pattern3};
use avoidgray::count::{sequence_term, CountFamily};
use avoidgray::regular::{self, gen_avoid, gen_gray, lookup, SuccessionRule};
use avoidgray::schroder::{build_phi_list, build_s_paths, phi, SchroderPath};
use avoidgray::verify::{check_complete, check_list, check_path_list, GrayReport, Oracle};
use avoidgray::{Pattern, Permutation};

#[derive(Parser)]
#[command(
    name = "avoidgray",
    version,
    about = "Gray codes for pattern-avoiding permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a list, one object per line.
    Gen(GenArgs),
    /// Check a list for distance, duplicates and completeness.
    Verify(VerifyArgs),
    /// Print the size of a list without building it.
    Count(CountArgs),
    /// Map Schröder path words to permutations.
    Phi(PhiArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    S231,
    S132,
    S213,
    S312,
    SchroderPath,
    SchroderPerm,
    Regular,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Order {
    /// Natural order of the recursive generator.
    Tree,
    /// Gray order.
    #[default]
    Gray,
}

#[derive(Args)]
struct Selection {
    #[arg(long, value_enum)]
    family: Family,
    /// Class name for the regular family.
    #[arg(long)]
    class: Option<String>,
    /// Length parameter of avoid_a, avoid_b and avoid_c.
    #[arg(long)]
    p: Option<usize>,
    /// Listing order for the regular family.
    #[arg(long, value_enum, default_value_t)]
    order: Order,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    sel: Selection,
    #[arg(long)]
    n: usize,
    /// Append a tab and the up/down mark of each node (regular, gray order).
    #[arg(long)]
    directions: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    sel: Selection,
    /// Required unless --stdin is given.
    #[arg(long)]
    n: Option<usize>,
    /// Distance bound; defaults to 4 for the 231 family and 5 otherwise.
    #[arg(long)]
    max_dist: Option<usize>,
    /// Also require the first/last pair to meet the bound.
    #[arg(long)]
    circular: bool,
    /// Read the list from standard input instead of generating it.
    #[arg(long)]
    stdin: bool,
    /// Raise the oracle size limit.
    #[arg(long, default_value_t = Oracle::DEFAULT_CAP)]
    oracle_cap: usize,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    sel: Selection,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct PhiArgs {
    /// Path word over u, d, e; read one per line from stdin if absent.
    #[arg(long)]
    path: Option<String>,
}

/// Failures that end the run.
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<avoidgray::Error> for Failure {
    fn from(e: avoidgray::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

type Run<T> = Result<T, Failure>;

fn io_err(e: io::Error) -> Failure {
    Failure::Io(e)
}

impl Selection {
    fn pattern3(&self) -> Option<Pattern3> {
        match self.family {
            Family::S231 => Some(Pattern3::P231),
            Family::S132 => Some(Pattern3::P132),
            Family::S213 => Some(Pattern3::P213),
            Family::S312 => Some(Pattern3::P312),
            _ => None,
        }
    }

    fn rule(&self) -> Run<SuccessionRule> {
        let class = self
            .class
            .as_deref()
            .ok_or_else(|| usage("--family regular needs --class"))?;
        Ok(lookup(class, self.p)?)
    }

    fn check_flags(&self) -> Run<()> {
        if self.family != Family::Regular {
            if self.class.is_some() || self.p.is_some() {
                return Err(usage("--class and --p apply only to --family regular"));
            }
            if self.order == Order::Tree {
                return Err(usage("--order tree applies only to --family regular"));
            }
        }
        Ok(())
    }
}

fn schroder_patterns() -> Vec<Pattern> {
    ["1243", "2143"]
        .iter()
        .map(|s| s.parse().expect("valid pattern"))
        .collect()
}

fn min_n(sel: &Selection) -> usize {
    match sel.family {
        Family::SchroderPerm | Family::Regular => 1,
        _ => 0,
    }
}

fn check_n(sel: &Selection, n: usize) -> Run<()> {
    let min = min_n(sel);
    if n < min {
        return Err(usage(format!(
            "n={n} is below the minimum of {min} for this family"
        )));
    }
    Ok(())
}

fn emit(out: &mut impl Write, line: impl Display) -> Run<()> {
    writeln!(out, "{line}").map_err(io_err)
}

fn gen(args: &GenArgs, out: &mut impl Write) -> Run<()> {
    let sel = &args.sel;
    sel.check_flags()?;
    check_n(sel, args.n)?;
    if args.directions && (sel.family != Family::Regular || sel.order != Order::Gray) {
        return Err(usage(
            "--directions applies only to --family regular --order gray",
        ));
    }
    let n = args.n;
    if let Some(pattern) = sel.pattern3() {
        for p in build_pattern3_list(n, pattern).entries() {
            emit(out, p)?;
        }
        return Ok(());
    }
    match sel.family {
        Family::SchroderPath => {
            for p in build_s_paths(n) {
                emit(out, p)?;
            }
        }
        Family::SchroderPerm => {
            for p in build_phi_list(n - 1) {
                emit(out, p)?;
            }
        }
        Family::Regular => {
            let rule = sel.rule()?;
            let mut result = Ok(());
            let mut line = String::new();
            let mut write = |entries: &[u32], mark: Option<regular::Direction>| {
                if result.is_err() {
                    return;
                }
                line.clear();
                line.push_str(
                    &Permutation::new(entries.to_vec())
                        .expect("generated")
                        .to_string(),
                );
                if let Some(d) = mark {
                    line.push('\t');
                    line.push_str(d.as_str());
                }
                result = writeln!(out, "{line}");
            };
            match sel.order {
                Order::Tree => {
                    gen_avoid(&rule, n, |p| write(p, None))?;
                }
                Order::Gray => {
                    gen_gray(&rule, n, |p, d| write(p, args.directions.then_some(d)))?;
                }
            }
            result.map_err(io_err)?;
        }
        _ => unreachable!("single-pattern families handled above"),
    }
    Ok(())
}

fn read_lines() -> Run<Vec<String>> {
    io::stdin()
        .lock()
        .lines()
        .collect::<io::Result<_>>()
        .map_err(io_err)
}

fn parse_perm_line(line: &str) -> Run<Permutation> {
    line.parse::<Permutation>()
        .map_err(|e| usage(e.to_string()))
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Run<bool> {
    let sel = &args.sel;
    sel.check_flags()?;
    let n = match (args.n, args.stdin) {
        (Some(n), _) => Some(n),
        (None, true) => None,
        (None, false) => return Err(usage("verify needs --n or --stdin")),
    };
    if let Some(n) = n {
        check_n(sel, n)?;
    }
    let oracle = Oracle::with_raised_cap(args.oracle_cap);
    let default_dist = if sel.pattern3().is_some() { 4 } else { 5 };
    let max_dist = args.max_dist.unwrap_or(default_dist);
    let input = if args.stdin {
        Some(read_lines()?)
    } else {
        None
    };

    let checked: avoidgray::Result<GrayReport> = if sel.family == Family::SchroderPath {
        let list: Vec<SchroderPath> = match &input {
            Some(lines) => lines
                .iter()
                .map(|l| l.trim().parse())
                .collect::<Result<_, _>>()?,
            None => build_s_paths(n.expect("checked")),
        };
        check_path_list(&list, max_dist, args.circular, &oracle)
    } else {
        let (list, patterns) = match sel.family {
            Family::SchroderPerm => {
                let list = match &input {
                    Some(lines) => lines
                        .iter()
                        .map(|l| parse_perm_line(l))
                        .collect::<Run<_>>()?,
                    None => build_phi_list(n.expect("checked") - 1),
                };
                (list, schroder_patterns())
            }
            Family::Regular => {
                let rule = sel.rule()?;
                let list = match &input {
                    Some(lines) => lines
                        .iter()
                        .map(|l| parse_perm_line(l.split('\t').next().unwrap_or("")))
                        .collect::<Run<_>>()?,
                    None => match sel.order {
                        Order::Gray => {
                            regular::build_c_list(&rule, n.expect("checked"))?.to_permutations()
                        }
                        Order::Tree => regular::gen_avoid_list(&rule, n.expect("checked"))?,
                    },
                };
                (list, rule.patterns().to_vec())
            }
            _ => {
                let pattern = sel.pattern3().expect("single-pattern family");
                let list = match &input {
                    Some(lines) => lines
                        .iter()
                        .map(|l| parse_perm_line(l))
                        .collect::<Run<_>>()?,
                    None => build_pattern3_list(n.expect("checked"), pattern).into_entries(),
                };
                (list, vec![pattern.pattern()])
            }
        };
        let natural =
            sel.family == Family::Regular && sel.order == Order::Tree && args.max_dist.is_none();
        if natural {
            check_complete(&list, &patterns, &oracle)
        } else {
            check_list(&list, max_dist, args.circular, &patterns, &oracle)
        }
    };
    let report = match checked {
        Ok(r) => r,
        Err(e @ (avoidgray::Error::EmptyList | avoidgray::Error::RaggedList { .. })) => {
            emit(out, format!("error: {e}"))?;
            emit(out, "result: fail")?;
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    emit(out, &report)?;
    let length_ok = n.is_none_or(|n| n == report.n);
    if !length_ok {
        emit(
            out,
            format!(
                "length_mismatch: expected n={}, read n={}",
                n.unwrap_or(0),
                report.n
            ),
        )?;
    }
    Ok(report.passed() && length_ok)
}

fn count(args: &CountArgs) -> Run<String> {
    let sel = &args.sel;
    sel.check_flags()?;
    check_n(sel, args.n)?;
    let n = args.n;
    let size = match sel.family {
        Family::SchroderPath => sequence_term(CountFamily::Schroder, n),
        Family::SchroderPerm => sequence_term(CountFamily::Schroder, n - 1),
        Family::Regular => {
            let rule = sel.rule()?;
            match rule.count_family() {
                Some(family) => family.class_size(n),
                None => regular::class_size(&rule, n),
            }
        }
        _ => sequence_term(CountFamily::Catalan, n),
    };
    Ok(size.to_string())
}

fn run_phi(args: &PhiArgs, out: &mut impl Write) -> Run<()> {
    let words = match &args.path {
        Some(w) => vec![w.clone()],
        None => read_lines()?,
    };
    for w in words {
        let path: SchroderPath = w.trim().parse()?;
        emit(out, phi(&path))?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Run<bool> {
    match cli.command {
        Command::Gen(a) => gen(&a, out).map(|_| true),
        Command::Verify(a) => verify(&a, out),
        Command::Count(a) => {
            let c = count(&a)?;
            emit(out, c).map(|_| true)
        }
        Command::Phi(a) => run_phi(&a, out).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = run(cli, &mut out).and_then(|ok| out.flush().map(|_| ok).map_err(io_err));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
