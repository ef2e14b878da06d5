use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use stabclass::dense::{unitary_of_gate, DenseUnitary};
use stabclass::enumeration::{brute_count, count};
use stabclass::lattice::lattice;
use stabclass::suites::{self, Suite, BRUTE_CAP};
use stabclass::synthesis::synthesize;
use stabclass::{Circuit, Error, Gate, Tableau};

#[derive(Parser)]
#[command(name = "stabclass", version, about = "Classify, synthesize and count stabilizer gates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class generated by the given gates.
    Classify {
        #[arg(long = "gate", value_name = "NAME")]
        gates: Vec<String>,
        /// Tableau text file, or - for standard input.
        #[arg(long = "tableau", value_name = "PATH")]
        tableaux: Vec<String>,
        /// Circuit text file, or - for standard input.
        #[arg(long = "circuit", value_name = "PATH")]
        circuits: Vec<String>,
    },
    /// Write a circuit over the generators of the tableau's class.
    Synth {
        #[arg(long, value_name = "PATH")]
        tableau: String,
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
    },
    /// Number of n-qubit gates in a class.
    Count {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// Count by closing the generators instead of by formula.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = BRUTE_CAP)]
        cap: u64,
    },
    /// Export the class lattice.
    Lattice {
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
    },
    /// List catalog gates, or show one.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

fn format_matrix(u: &DenseUnitary) -> String {
    let mut out = String::new();
    for r in 0..u.dim() {
        let row: Vec<String> = (0..u.dim())
            .map(|c| {
                let z = u.get(r, c);
                let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
                format!("{:+.4}{:+.4}i", clean(z.re), clean(z.im))
            })
            .collect();
        out.push_str(&row.join("  "));
        out.push('\n');
    }
    out
}

fn run(cmd: Command) -> Result<String, Error> {
    let l = lattice();
    match cmd {
        Command::Classify { gates, tableaux, circuits } => {
            let mut ts = Vec::new();
            for g in &gates {
                ts.push(g.parse::<Gate>()?.tableau()?);
            }
            for p in &tableaux {
                ts.push(read_input(p)?.parse::<Tableau>()?);
            }
            for p in &circuits {
                ts.push(read_input(p)?.parse::<Circuit>()?.tableau()?);
            }
            Ok(format!("{}\n", l.classify_set(&ts)?.name))
        }
        Command::Synth { tableau, out } => {
            let t: Tableau = read_input(&tableau)?.parse()?;
            let r = synthesize(&t)?;
            let text = format!("# class {}, ancillas {}\n{}", r.class.name, r.ancillas, r.circuit);
            match out {
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Count { class, n, brute, cap } => {
            let c = l.by_name(&class)?;
            let v = if brute { brute_count(c, n, cap)? } else { count(c, n) };
            Ok(format!("{v}\n"))
        }
        Command::Lattice { format: Format::Dot } => Ok(l.to_dot()),
        Command::Verify { suite } => {
            let checks = suites::run(suite)?;
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            text.push_str(&format!("{suite}: {} passed, {failed} failed\n", checks.len() - failed));
            if failed > 0 {
                print!("{text}");
                return Err(Error::Internal(format!("{failed} check(s) failed in {suite}")));
            }
            Ok(text)
        }
        Command::Catalog { name: None } => {
            Ok(Gate::catalog().iter().map(|g| format!("{g}\n")).collect())
        }
        Command::Catalog { name: Some(name) } => {
            let g: Gate = name.parse()?;
            let mut text = format!("{g}\n{}", g.tableau()?);
            if g.arity() <= 2 {
                text.push_str(&format_matrix(&unitary_of_gate(g)?));
            }
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
