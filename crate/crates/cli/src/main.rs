mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use acyclo::codec;
use acyclo::counting;
use acyclo::enumerate;
use acyclo::{Code, Error, Orientation, PartitionSpec};

/// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
/// 3 domain error (cyclic input).
#[derive(Parser)]
#[command(name = "acyclo", version, about = "Acyclic orientations of complete multipartite graphs: count, enumerate, encode, decode, sample, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an exact count for a partition
    Count {
        /// Part sizes, comma-separated (e.g. 2,2,1); for `smirnov` these are
        /// the letter multiplicities
        #[arg(long)]
        spec: String,
        /// Which quantity to compute
        #[arg(value_enum, ignore_case = true)]
        quantity: Quantity,
        /// Emit a JSON object instead of a bare number
        #[arg(long)]
        json: bool,
    },
    /// Stream a family of codes in lexicographic order
    Enumerate {
        #[arg(long)]
        spec: String,
        /// Which codes to emit
        #[arg(value_enum, ignore_case = true)]
        family: Family,
        #[arg(long, value_enum, default_value_t = StreamFormat::Lines)]
        format: StreamFormat,
        /// Stop after this many codes
        #[arg(long)]
        limit: Option<usize>,
        /// Start strictly after this code (which must be valid for the spec)
        #[arg(long)]
        resume_from: Option<String>,
    },
    /// Read an edge list (file or stdin) and print its code
    Encode {
        /// Edge-list file; stdin when omitted
        file: Option<PathBuf>,
    },
    /// Print the orientation a code stands for
    Decode {
        #[arg(long)]
        spec: String,
        /// Dotted (0.1.0.1.1) or compact (01011) code
        #[arg(long)]
        code: String,
        #[arg(long, value_enum, default_value_t = DecodeFormat::Edges)]
        format: DecodeFormat,
    },
    /// Draw uniform random codes (one per seed, starting at --seed)
    Sample {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        seed: u64,
        /// How many codes to draw
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Replay every closed formula against its brute-force oracle
    Verify {
        /// Largest graph order to test
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest number of parts to test
        #[arg(long, default_value_t = 3)]
        max_p: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    /// Acyclic orientations with fixed parts (codes)
    #[value(name = "A")]
    A,
    /// Non-isomorphic acyclic orientations
    #[value(name = "B")]
    B,
    /// Non-isomorphic acyclic orientations with a directed spanning tree
    #[value(name = "C")]
    C,
    /// Acyclic orientations with labelled vertices
    Labelled,
    /// Poly-Bernoulli number (exactly two sizes)
    PolyBernoulli,
    /// Words with these letter multiplicities and no equal adjacent letters
    Smirnov,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    All,
    Canonical,
    UniqueSource,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    /// One code per line
    Lines,
    /// One JSON object per line
    Json,
    /// One DOT digraph per code
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecodeFormat {
    Edges,
    Dot,
}

struct CliError {
    message: String,
    exit: u8,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        exit: 2,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let exit = match e {
            Error::CyclicOrientation => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            exit,
        }
    }
}

#[derive(Serialize)]
struct CountRecord<'a> {
    spec: &'a [usize],
    count: String,
}

#[derive(Serialize)]
struct CodeRecord<'a> {
    spec: &'a [usize],
    code: String,
}

fn code_text(code: &Code) -> String {
    code.to_compact().unwrap_or_else(|| code.to_string())
}

fn run() -> Result<u8, CliError> {
    match Cli::parse().command {
        Command::Count { spec, quantity, json } => {
            let spec = PartitionSpec::parse(&spec)?;
            let count = match quantity {
                Quantity::A => counting::count_a(&spec),
                Quantity::B => counting::count_b(&spec),
                Quantity::C => {
                    let (reduced, _) = spec.drop_empty_parts();
                    if reduced.order() < 2 {
                        return Err(usage("quantity C needs at least two vertices"));
                    }
                    counting::count_c(&spec)
                }
                Quantity::Labelled => counting::count_labelled(&spec),
                Quantity::PolyBernoulli => {
                    let sizes = spec.sizes();
                    if sizes.len() != 2 {
                        return Err(usage("poly-bernoulli takes exactly two sizes"));
                    }
                    counting::poly_bernoulli(sizes[0], sizes[1])
                }
                Quantity::Smirnov => counting::smirnov_x(spec.sizes()),
            };
            if json {
                let record = CountRecord {
                    spec: spec.sizes(),
                    count: count.to_string(),
                };
                println!("{}", serde_json::to_string(&record).expect("serializable"));
            } else {
                println!("{count}");
            }
            Ok(0)
        }

        Command::Enumerate {
            spec,
            family,
            format,
            limit,
            resume_from,
        } => {
            let spec = PartitionSpec::parse(&spec)?;
            if format == StreamFormat::Dot && !spec.is_normalized() {
                return Err(usage("dot output needs a spec without empty parts"));
            }
            let base = match resume_from {
                Some(text) => enumerate::iter_codes_after(&spec, &Code::parse(&text)?)?,
                None => enumerate::iter_codes(&spec),
            };
            let keep = {
                let spec = spec.clone();
                move |c: &Code| match family {
                    Family::All => true,
                    Family::Canonical => codec::is_canonical(&spec, c),
                    Family::UniqueSource => codec::has_unique_source(c),
                }
            };
            let stream = base.filter(keep).take(limit.unwrap_or(usize::MAX));
            for code in stream {
                match format {
                    StreamFormat::Lines => println!("{}", code_text(&code)),
                    StreamFormat::Json => {
                        let record = CodeRecord {
                            spec: spec.sizes(),
                            code: code_text(&code),
                        };
                        println!("{}", serde_json::to_string(&record).expect("serializable"));
                    }
                    StreamFormat::Dot => {
                        print!("{}", codec::decode(&spec, &code)?.to_dot()?);
                    }
                }
            }
            Ok(0)
        }

        Command::Encode { file } => {
            let text = match file {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
                None => {
                    let mut buffer = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buffer)
                        .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
                    buffer
                }
            };
            let orientation = Orientation::parse_edge_list(&text)?;
            let code = codec::encode(&orientation)?;
            println!("{}", code_text(&code));
            Ok(0)
        }

        Command::Decode { spec, code, format } => {
            let spec = PartitionSpec::parse(&spec)?;
            let code = Code::parse(&code)?;
            let orientation = codec::decode(&spec, &code)?;
            match format {
                DecodeFormat::Edges => print!("{}", orientation.to_edge_list()?),
                DecodeFormat::Dot => print!("{}", orientation.to_dot()?),
            }
            Ok(0)
        }

        Command::Sample { spec, seed, count } => {
            let spec = PartitionSpec::parse(&spec)?;
            for i in 0..count {
                let code = enumerate::random_code(&spec, seed.wrapping_add(i));
                println!("{}", code_text(&code));
            }
            Ok(0)
        }

        Command::Verify { max_n, max_p, json } => {
            if max_n == 0 || max_p == 0 {
                return Err(usage("verification bounds must be at least 1"));
            }
            let report = verify::run(max_n, max_p);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                for check in &report.checks {
                    if check.passed {
                        println!("PASS {} ({} cases)", check.name, check.cases);
                    } else {
                        println!(
                            "FAIL {}: {}",
                            check.name,
                            check.counterexample.as_deref().unwrap_or("no detail")
                        );
                    }
                }
                let verdict = if report.passed { "PASS" } else { "FAIL" };
                println!(
                    "{verdict}: {}/{} checks (max N {max_n}, max parts {max_p})",
                    report.checks.iter().filter(|c| c.passed).count(),
                    report.checks.len()
                );
            }
            Ok(if report.passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.exit)
        }
    }
}
