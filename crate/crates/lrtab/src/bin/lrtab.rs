//! Command-line front end: Poincare polynomials, LR tableau listings with
//! charges, poset exports, and the verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 bound
//! exceeded.

use clap::{Parser, Subcommand, ValueEnum};

use lrtab::cyclage::build_full_poset;
use lrtab::lr::{enumerate_lrt, RectSequence};
use lrtab::poincare::{k_poly_of_rects, QPolynomial, DEFAULT_N_CAP};
use lrtab::verify::{
    verify_action, verify_charge, verify_chi, verify_main, verify_morris, verify_poset, Bounds,
    SuiteResult,
};
use lrtab::{Error, Partition};

#[derive(Parser)]
#[command(name = "lrtab", version, about = "Littlewood-Richardson tableaux: charges, posets, and Poincare polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Action,
    Chi,
    Poset,
    Charge,
    Main,
    Morris,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Poincare polynomial K_{lambda;R}(q).
    Kpoly {
        /// Rectangle sequence, comma-separated MUxETA pairs, e.g. 3x2,2x2,1x3.
        #[arg(long)]
        rects: String,
        /// Partition, comma-separated parts, e.g. 6,4,2,1.
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// List the LR tableaux of a shape with their charges.
    Lrt {
        #[arg(long)]
        rects: String,
        #[arg(long)]
        shape: String,
        /// Also print the charge generating polynomial and cross-check it
        /// against the algebraic computation (dominant R only).
        #[arg(long)]
        sum: bool,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Export the full R-cocyclage poset.
    Poset {
        #[arg(long)]
        rects: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run a verification suite; exits 2 on the first failed invariant.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest alphabet size n.
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest total cell count N.
        #[arg(long)]
        max_cells: Option<u64>,
        /// Number of rectangles t (exact for the action suite, maximum otherwise).
        #[arg(long)]
        t: Option<usize>,
        /// Seed for the sampled suites.
        #[arg(long, default_value_t = 20_2406)]
        seed: u64,
        /// Samples per rectangle sequence in the sampled suites.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(cli));
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded(_) => 3,
        Error::InvariantViolation(_) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_inputs(rects: &str, shape: &str) -> Result<(RectSequence, Partition), Error> {
    let r: RectSequence = rects.parse()?;
    let lam: Partition = shape.parse()?;
    if r.n() > DEFAULT_N_CAP {
        return Err(Error::BoundExceeded(format!(
            "alphabet size n = {} exceeds cap {DEFAULT_N_CAP}",
            r.n()
        )));
    }
    Ok((r, lam))
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Kpoly {
            rects,
            shape,
            format,
        } => {
            let (r, lam) = parse_inputs(&rects, &shape)?;
            let poly = k_poly_of_rects(&lam, &r)?;
            print_poly(&poly, format);
            Ok(0)
        }
        Command::Lrt {
            rects,
            shape,
            sum,
            format,
        } => {
            let (r, lam) = parse_inputs(&rects, &shape)?;
            let n = r.n() as u8;
            let mut listed: Vec<(u64, String, Vec<u32>)> = Vec::new();
            for t in enumerate_lrt(&lam, &r) {
                let charge = lrtab::cyclage::charge_of_tableau(&t, &r)?.value;
                listed.push((
                    charge,
                    t.row_reading_word(n).to_string(),
                    t.outer_shape().parts().to_vec(),
                ));
            }
            listed.sort();
            let mut by_charge = QPolynomial::zero();
            for (c, _, _) in &listed {
                by_charge.add_scaled(&QPolynomial::monomial(*c as usize), 0, 1);
            }
            match format {
                TextFormat::Text => {
                    for (c, word, shape) in &listed {
                        let parts: Vec<String> = shape.iter().map(|p| p.to_string()).collect();
                        println!("charge={c} shape={} word={word}", parts.join(","));
                    }
                    if sum {
                        println!("sum = {by_charge}");
                    }
                }
                TextFormat::Json => {
                    let tabs: Vec<serde_json::Value> = listed
                        .iter()
                        .map(|(c, word, shape)| {
                            serde_json::json!({"charge": c, "word": word, "shape": shape})
                        })
                        .collect();
                    let mut doc = serde_json::json!({ "tableaux": tabs });
                    if sum {
                        doc["sum"] = serde_json::to_value(&by_charge).expect("serializable");
                    }
                    println!("{doc}");
                }
            }
            if sum && r.is_dominant() {
                let kp = k_poly_of_rects(&lam, &r)?;
                if kp != by_charge {
                    return Err(Error::InvariantViolation(format!(
                        "charge sum {by_charge} differs from K(q) = {kp}"
                    )));
                }
            }
            Ok(0)
        }
        Command::Poset { rects, format } => {
            let r: RectSequence = rects.parse()?;
            if r.n() > DEFAULT_N_CAP {
                return Err(Error::BoundExceeded(format!(
                    "alphabet size n = {} exceeds cap {DEFAULT_N_CAP}",
                    r.n()
                )));
            }
            let poset = build_full_poset(&r)?;
            match format {
                GraphFormat::Dot => print!("{}", poset.to_dot()),
                GraphFormat::Json => println!("{}", poset.to_json()),
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            max_n,
            max_cells,
            t,
            seed,
            samples,
            jobs,
        } => {
            let mut bounds = Bounds::default();
            if let Some(n) = max_n {
                bounds.max_n = n;
            }
            if let Some(c) = max_cells {
                bounds.max_cells = c;
            }
            if let Some(t) = t {
                bounds.max_t = t;
            }
            let result: SuiteResult = match suite {
                Suite::Action => {
                    let t = t.unwrap_or(3);
                    let cells = max_cells.unwrap_or(9);
                    verify_action(t, cells, jobs)
                }
                Suite::Chi => verify_chi(&bounds, seed, samples, jobs),
                Suite::Poset => verify_poset(&bounds, jobs),
                Suite::Charge => verify_charge(&bounds, jobs),
                Suite::Main => verify_main(&bounds, jobs),
                Suite::Morris => verify_morris(&bounds, jobs),
            };
            println!("{result}");
            Ok(if result.passed() { 0 } else { 2 })
        }
    }
}

fn print_poly(poly: &QPolynomial, format: TextFormat) {
    match format {
        TextFormat::Text => println!("{poly}"),
        TextFormat::Json => {
            println!(
                "{}",
                serde_json::to_string(poly).expect("polynomial serializes")
            );
        }
    }
}
