//! `isonat`: convert, generate and analyze values through named encoders.

use clap::{Parser, Subcommand, ValueEnum};
use isonat::bdd::{robdd_size, to_min_bdd};
use isonat::codes::{info_density, MAX_DENSITY_BITS, sparse_numbers, sparseness_csv, Family, Metric};
use isonat::goodstein::goodstein;
use isonat::graphs::dot;
use isonat::pairing::pairing_identities;
use isonat::registry::{convert_any, lookup, names};
use isonat::toolkit::{
    length_as, nth, random_gen, rantest_bits, size_as, stream_of, sum_as, take_hyper_primes,
    Unpairing, RANTEST_BITS,
};
use isonat::value::{parse_value, print_value, ValueKind};
use isonat::{Error, Nat};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "isonat", version, about = "Bijective encodings between natural numbers and data types")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Re-express VALUE, written for --from, through --to.
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        value: String,
    },
    /// The N-th value of an encoder's type.
    Nth { enc: String, n: String },
    /// Values 0, 1, 2, ... of an encoder's type, one per line.
    Stream {
        enc: String,
        #[arg(long)]
        count: u64,
    },
    /// Values at pseudorandom indices in [0, max].
    Random {
        enc: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Experiments over encoders and numbers.
    Analyze {
        #[command(subcommand)]
        kind: Analysis,
    },
    /// Goodstein sequence starting at N.
    Goodstein {
        n: String,
        #[arg(long, default_value_t = 16)]
        count: usize,
    },
    /// Smallest reduced BDD over all variable orders for a truth table.
    Minbdd { nvars: usize, tt: String },
    /// Graphviz rendering of an unpairing or transformer graph.
    Dot {
        #[arg(long)]
        kind: String,
        args: Vec<String>,
    },
    /// Random roundtrip test of every registered encoder.
    Selftest {
        #[arg(long, default_value_t = RANTEST_BITS)]
        bits: u64,
    },
}

#[derive(Subcommand)]
enum Analysis {
    /// length_as, sum_as and size_as of N where the encoder supports them.
    Sizes {
        #[arg(long)]
        enc: String,
        #[arg(long)]
        n: String,
    },
    /// CSV of sparseness against the plain binary length.
    Sparseness {
        #[arg(long, value_enum, default_value_t = MetricArg::Linear)]
        metric: MetricArg,
        #[arg(long)]
        enc: String,
        #[arg(long)]
        max: u64,
    },
    /// CSV of exact information density for n in [0, N].
    Density {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
    },
    /// Numbers below --max whose parenthesis code beats their Elias code.
    SparseNumbers {
        #[arg(long)]
        max: u64,
    },
    /// Primes all of whose recursive unpairing parts are prime.
    HyperPrimes {
        #[arg(long = "fn", value_enum)]
        unpairing: UnpairingArg,
        #[arg(long)]
        count: usize,
    },
    /// Report on the pairing identities.
    Identities {
        #[arg(long, default_value_t = 128)]
        single: u64,
        #[arg(long, default_value_t = 32)]
        pair: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Linear,
    Hereditary,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hff,
    Hfs,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum UnpairingArg {
    Bitunpair,
    PepisUnpair,
    MsetUnpair,
}

/// Why a command stopped early.
enum Failure {
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn nat_arg(s: &str) -> isonat::Result<Nat> {
    match parse_value(ValueKind::Nat, s)? {
        isonat::value::Value::Nat(n) => Ok(n),
        _ => unreachable!("parsed as a natural number"),
    }
}

/// Runs a command, writing results to `out`; `Ok(false)` signals a failed
/// self-test.
fn run(cmd: Cmd, out: &mut impl Write) -> Result<bool, Failure> {
    let w = |out: &mut dyn Write, s: &str| writeln!(out, "{s}");
    match cmd {
        Cmd::Convert { from, to, value } => {
            let src = lookup(&from)?;
            let dst = lookup(&to)?;
            let v = parse_value(src.kind(), &value)?;
            w(out, &print_value(&convert_any(&dst, &src, &v)?))?;
        }
        Cmd::Nth { enc, n } => {
            let e = lookup(&enc)?;
            w(out, &print_value(&nth(&e, &nat_arg(&n)?)?))?;
        }
        Cmd::Stream { enc, count } => {
            let e = lookup(&enc)?;
            for v in stream_of(&e).take(count as usize) {
                w(out, &print_value(&v?))?;
            }
        }
        Cmd::Random { enc, seed, max, count } => {
            let e = lookup(&enc)?;
            for v in random_gen(&e, seed, &nat_arg(&max)?, count)? {
                w(out, &print_value(&v))?;
            }
        }
        Cmd::Analyze { kind } => analyze(kind, out)?,
        Cmd::Goodstein { n, count } => {
            let xs: Vec<String> = goodstein(&nat_arg(&n)?, count)?
                .iter()
                .map(|x| x.to_string())
                .collect();
            w(out, &xs.join(" "))?;
        }
        Cmd::Minbdd { nvars, tt } => {
            let b = to_min_bdd(nvars, &nat_arg(&tt)?)?;
            w(out, &b.to_string())?;
            w(out, &format!("robdd size: {}", robdd_size(&b)))?;
        }
        Cmd::Dot { kind, args } => {
            let ns = args.iter().map(|a| nat_arg(a)).collect::<isonat::Result<Vec<_>>>()?;
            write!(out, "{}", dot(&kind, &ns)?)?;
        }
        Cmd::Selftest { bits } => {
            let mut ok = 0;
            for name in names() {
                let r = rantest_bits(&lookup(name)?, bits);
                if r.passed() {
                    ok += 1;
                    w(out, &format!("{name}: ok"))?;
                } else {
                    let (n, why) = &r.failures[0];
                    w(out, &format!("{name}: FAIL {}/{} (n = {n}: {why})", r.failures.len(), r.cases))?;
                }
            }
            let total = names().len();
            let tag = if ok == total { "OK" } else { "FAIL" };
            w(out, &format!("{tag}: {ok}/{total} encoders"))?;
            return Ok(ok == total);
        }
    }
    Ok(true)
}

fn analyze(kind: Analysis, out: &mut impl Write) -> Result<(), Failure> {
    match kind {
        Analysis::Sizes { enc, n } => {
            let e = lookup(&enc)?;
            let n = nat_arg(&n)?;
            let mut any = false;
            for (label, f) in [
                ("length_as", length_as as fn(_, _) -> _),
                ("sum_as", sum_as),
                ("size_as", size_as),
            ] {
                match f(&e, &n) {
                    Ok(v) => {
                        any = true;
                        writeln!(out, "{label},{v}")?;
                    }
                    Err(Error::ShapeMismatch { .. }) => {}
                    Err(err) => return Err(err.into()),
                }
            }
            if !any {
                return Err(Error::ShapeMismatch {
                    expected: format!("a sequence or tree encoder, not `{enc}`"),
                }
                .into());
            }
        }
        Analysis::Sparseness { metric, enc, max } => {
            let m = match metric {
                MetricArg::Linear => Metric::Linear,
                MetricArg::Hereditary => Metric::Hereditary,
            };
            write!(out, "{}", sparseness_csv(m, &enc, max)?)?;
        }
        Analysis::Density { family, n } => {
            let f = match family {
                FamilyArg::Hff => Family::Hff,
                FamilyArg::Hfs => Family::Hfs,
            };
            if n > MAX_DENSITY_BITS {
                return Err(Error::TooLarge(format!("density over 2^{n} values (limit 2^{MAX_DENSITY_BITS})")).into());
            }
            writeln!(out, "n,value")?;
            for k in 0..=n {
                let r = info_density(f, k)?;
                writeln!(out, "{k},{}/{}", r.numer(), r.denom())?;
            }
        }
        Analysis::SparseNumbers { max } => {
            for x in sparse_numbers(max)? {
                writeln!(out, "{x}")?;
            }
        }
        Analysis::HyperPrimes { unpairing, count } => {
            let u = match unpairing {
                UnpairingArg::Bitunpair => Unpairing::Bit,
                UnpairingArg::PepisUnpair => Unpairing::Pepis,
                UnpairingArg::MsetUnpair => Unpairing::Mset,
            };
            for p in take_hyper_primes(u, count)? {
                writeln!(out, "{p}")?;
            }
        }
        Analysis::Identities { single, pair } => {
            let report = pairing_identities(single, pair);
            let failing = report.iter().filter(|c| !c.holds()).count();
            for c in &report {
                match &c.counterexample {
                    None => writeln!(out, "holds: {} ({} cases)", c.name, c.cases),
                    Some(x) => writeln!(out, "FAILS: {} at {x}", c.name),
                }
                ?;
            }
            if failing == 0 {
                writeln!(out, "all identities hold")?;
            } else {
                writeln!(out, "{failing} of {} identities fail", report.len())?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli.cmd, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure::Core(e)) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(if e.is_syntax() { 1 } else { 2 })
        }
        // a closed pipe is not worth a message
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
