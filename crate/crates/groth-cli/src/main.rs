//! `groth` — exact calculator for stable (`G`) and dual stable (`g`)
//! Grothendieck polynomials.
//!
//! Subcommands: `expand` (Schur or other-basis expansions of `g`, `G` and
//! their ideal/filter sums), `pieri` (one-row product coefficients),
//! `mobius` (the same coefficients read off a strip-poset Möbius table),
//! `product` (multiplicity-free sum-basis products), and `verify` (the
//! deterministic identity sweeps).  All output is byte-deterministic.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use groth_core::{
    dual_grothendieck_schur, dual_grothendieck_sum, grothendieck_schur, grothendieck_sum,
    mobius_pieri_coefficient, pieri_dual, pieri_dual_alternating, pieri_grothendieck,
    pieri_grothendieck_alternating, run_all, Basis, CoefficientMap, Partition, StripBound,
    StripMode, SymFunc,
};

#[derive(Parser)]
#[command(
    name = "groth",
    version,
    about = "Exact stable and dual stable Grothendieck polynomial calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand g, G, or their ideal/filter sums in a chosen basis.
    Expand {
        /// Which family to expand.
        #[arg(long, value_enum)]
        what: What,
        /// Base partition, e.g. "3,1"; "" or "0" for the empty partition.
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Degree cutoff; required for the stable family.
        #[arg(long)]
        degree: Option<u32>,
        /// Output basis (defaults to schur for g/G, to the matching sum
        /// basis for gsum/Gsum).
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// One-row Pieri coefficients as a partition -> integer map.
    Pieri {
        /// g for the dual rule (strips of size <= a), G for the stable
        /// rule (strips of size >= a).
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Number of boxes in the one-row factor.
        #[arg(long)]
        a: u32,
        /// Compute by inclusion-exclusion over exact strips instead of the
        /// closed binomial form (same result).
        #[arg(long)]
        alternating: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Pieri coefficients read off the strip-poset Moebius table; lists
    /// every strip in the class, including zero coefficients.
    Mobius {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        a: u32,
        /// le: strips of size <= a against the adjoined top;
        /// ge: strips of size >= a against the adjoined bottom.
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Multiplicity-free sum-basis products: the g family multiplies two
    /// ideal sums; the G family multiplies G_(a) into a filter sum.
    Product {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        a: u32,
        /// Degree cutoff; required for the G family.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every identity suite and print a JSON summary; exits 1 on any
    /// failed identity.
    Verify {
        /// Largest partition size swept.
        #[arg(long, default_value_t = 4)]
        max_size: u32,
        /// Largest one-row factor swept.
        #[arg(long, default_value_t = 3)]
        max_a: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    /// Dual stable polynomial g_lambda.
    #[value(name = "g")]
    Dual,
    /// Stable polynomial G_lambda, truncated at --degree.
    #[value(name = "G")]
    Stable,
    /// Ideal sum over all subpartitions of lambda.
    #[value(name = "gsum")]
    DualSum,
    /// Filter sum over all partitions containing lambda, up to --degree.
    #[value(name = "Gsum")]
    StableSum,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "g")]
    Dual,
    #[value(name = "G")]
    Stable,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Le,
    Ge,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "monomial", alias = "m")]
    Monomial,
    #[value(name = "schur", alias = "s")]
    Schur,
    #[value(name = "homogeneous", alias = "h")]
    Homogeneous,
    #[value(name = "elementary", alias = "e")]
    Elementary,
    #[value(name = "g")]
    DualGrothendieck,
    #[value(name = "G")]
    Grothendieck,
}

impl From<BasisArg> for Basis {
    fn from(arg: BasisArg) -> Basis {
        match arg {
            BasisArg::Monomial => Basis::Monomial,
            BasisArg::Schur => Basis::Schur,
            BasisArg::Homogeneous => Basis::Homogeneous,
            BasisArg::Elementary => Basis::Elementary,
            BasisArg::DualGrothendieck => Basis::DualGrothendieck,
            BasisArg::Grothendieck => Basis::Grothendieck,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome { stdout, failed }) => {
            print!("{stdout}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

struct Outcome {
    stdout: String,
    failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            failed: false,
        }
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Expand {
            what,
            lambda,
            degree,
            basis,
            format,
        } => {
            let f = match what {
                What::Dual => dual_grothendieck_schur(&lambda),
                What::DualSum => dual_grothendieck_sum(&lambda),
                What::Stable => {
                    grothendieck_schur(&lambda, required_degree(degree)?).map_err(stringify)?
                }
                What::StableSum => {
                    grothendieck_sum(&lambda, required_degree(degree)?).map_err(stringify)?
                }
            };
            let target = basis.map(Basis::from).unwrap_or(match what {
                What::Dual | What::Stable => Basis::Schur,
                What::DualSum => Basis::DualGrothendieck,
                What::StableSum => Basis::Grothendieck,
            });
            let f = f.convert(target).map_err(stringify)?;
            Ok(Outcome::ok(render_symfunc(&f, format)))
        }
        Command::Pieri {
            family,
            lambda,
            a,
            alternating,
            format,
        } => {
            let map = match (family, alternating) {
                (Family::Dual, false) => pieri_dual(&lambda, a),
                (Family::Dual, true) => pieri_dual_alternating(&lambda, a),
                (Family::Stable, false) => pieri_grothendieck(&lambda, a),
                (Family::Stable, true) => pieri_grothendieck_alternating(&lambda, a),
            };
            Ok(Outcome::ok(render_map(&map, format)))
        }
        Command::Mobius {
            lambda,
            a,
            side,
            format,
        } => {
            let (bound, mode) = match side {
                Side::Le => (StripBound::AtMost, StripMode::AtMost),
                Side::Ge => (StripBound::AtLeast, StripMode::AtLeast),
            };
            let mut pairs = Vec::new();
            for mu in lambda.horizontal_strips(mode, a) {
                let coeff = mobius_pieri_coefficient(&lambda, a, &mu, bound).map_err(stringify)?;
                pairs.push((mu, coeff));
            }
            Ok(Outcome::ok(render_pairs(&pairs, format)))
        }
        Command::Product {
            family,
            lambda,
            a,
            degree,
            format,
        } => {
            let one_row = Partition::new(vec![a]).map_err(stringify)?;
            let product = match family {
                Family::Dual => {
                    let product =
                        dual_grothendieck_sum(&one_row).multiply(&dual_grothendieck_sum(&lambda));
                    product
                        .convert(Basis::DualGrothendieck)
                        .map_err(stringify)?
                }
                Family::Stable => {
                    let d = required_degree(degree)?;
                    let row = grothendieck_schur(&one_row, d).map_err(stringify)?;
                    let filter_sum = grothendieck_sum(&lambda, d)
                        .map_err(stringify)?
                        .convert(Basis::Schur)
                        .map_err(stringify)?;
                    row.multiply(&filter_sum)
                        .convert(Basis::Grothendieck)
                        .map_err(stringify)?
                }
            };
            Ok(Outcome::ok(render_symfunc(&product, format)))
        }
        Command::Verify { max_size, max_a } => {
            let results = run_all(max_size, max_a);
            let failed_suites = results.iter().filter(|s| !s.passed()).count();
            let total_cases: u64 = results.iter().map(|s| s.cases).sum();
            let stdout = serde_json::to_string(&results).expect("serializable") + "\n";
            eprintln!(
                "{}/{} suites passed, {} cases checked",
                results.len() - failed_suites,
                results.len(),
                total_cases
            );
            Ok(Outcome {
                stdout,
                failed: failed_suites > 0,
            })
        }
    }
}

fn stringify(e: groth_core::Error) -> String {
    e.to_string()
}

/// Degree flag for the stable family, guarded by the global cap.
fn required_degree(degree: Option<u32>) -> Result<u32, String> {
    let degree = degree.ok_or("--degree is required for the stable (G) family")?;
    match std::env::var("GROTH_MAX_DEGREE") {
        Err(std::env::VarError::NotPresent) => Ok(degree),
        Err(e) => Err(format!("GROTH_MAX_DEGREE: {e}")),
        Ok(raw) => {
            let cap: u32 = raw
                .trim()
                .parse()
                .map_err(|_| format!("GROTH_MAX_DEGREE is not a number: {raw:?}"))?;
            if degree > cap {
                Err(format!("degree {degree} exceeds GROTH_MAX_DEGREE={cap}"))
            } else {
                Ok(degree)
            }
        }
    }
}

fn render_symfunc(f: &SymFunc, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(f).expect("serializable") + "\n",
        Format::Tsv => f.terms().map(|(p, c)| format!("{p}\t{c}\n")).collect(),
    }
}

fn render_map(map: &CoefficientMap, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(map).expect("serializable") + "\n",
        Format::Tsv => map.iter().map(|(p, c)| format!("{p}\t{c}\n")).collect(),
    }
}

fn render_pairs(pairs: &[(Partition, i64)], format: Format) -> String {
    #[derive(serde::Serialize)]
    struct Term<'a> {
        part: &'a Partition,
        coeff: i64,
    }
    match format {
        Format::Json => {
            let items: Vec<Term> = pairs
                .iter()
                .map(|(p, c)| Term { part: p, coeff: *c })
                .collect();
            serde_json::to_string(&items).expect("serializable") + "\n"
        }
        Format::Tsv => pairs.iter().map(|(p, c)| format!("{p}\t{c}\n")).collect(),
    }
}
