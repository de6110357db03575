//! Command-line front end for generating and verifying equation sets.
//!
//! Exit codes: 0 success, 1 verification found a nonzero equation or a
//! non-member point, 2 validation or parse failure, 3 budget exhausted
//! (partial output was still written).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use hilbeq::equations::{self, BayerSelector, Family};
use hilbeq::hilbpoly::HilbertPolynomialContext;
use hilbeq::plucker::{DeltaPolynomial, PlueckerContext};
use hilbeq::verify;
use hilbeq_cli::{
    parse_p_polynomial, parse_point_file, parse_row_spec, parse_tuple_spec, EquationFile,
};

#[derive(Parser)]
#[command(name = "hilbeq", about = "Hilbert scheme equations in Plücker coordinates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Gotzmann decomposition and the derived counting data.
    Gotzmann(GotzmannArgs),
    /// Generate an equation family and write it to a file.
    Equations(EquationsArgs),
    /// Evaluate an equation file at a point of the Grassmannian.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GotzmannArgs {
    /// Hilbert polynomial, e.g. "2" or "3t+1"
    #[arg(long)]
    p: String,
    /// ambient projective dimension
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct EquationsArgs {
    /// equation family: ik | bayer | blmr-t1 | blmr-t2 | blmr-full
    #[arg(long)]
    family: String,
    /// Hilbert polynomial, e.g. "2" or "3t+1"
    #[arg(long)]
    p: String,
    /// ambient projective dimension
    #[arg(long)]
    n: u32,
    /// row selection for ik: "x2:1,2,6;x2:1,5,6;..."
    #[arg(long)]
    rows: Option<String>,
    /// column selection for ik (repeatable): "1,2,3,4,5,6,7,8,9"
    #[arg(long)]
    cols: Vec<String>,
    /// wedge tuple for bayer (repeatable): "x2:4:1,2,3,4,5,6;x1:2:1,3,4,6;x0:3:2,3,4,5,6"
    #[arg(long)]
    tuple: Vec<String>,
    /// polynomial for blmr-full, e.g. "D[3,5]*D[4,6]-D[2,5]*D[5,6]"
    #[arg(long)]
    poly: Option<String>,
    /// cap on enumerated selections for ik / bayer full enumeration
    #[arg(long)]
    budget: Option<usize>,
    /// output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// output format
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// point file: CSV of rationals or a list of degree-r monomials
    #[arg(long)]
    point: PathBuf,
    /// equations file produced by `hilbeq equations`
    #[arg(long)]
    equations: PathBuf,
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Gotzmann(args) => cmd_gotzmann(&args),
        Command::Equations(args) => cmd_equations(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match code {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// HILBEQ_THREADS caps the worker parallelism of equation emission.
fn configure_threads() {
    if let Ok(v) = std::env::var("HILBEQ_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
}

fn cmd_gotzmann(args: &GotzmannArgs) -> hilbeq::Result<ExitCode> {
    let coeffs = parse_p_polynomial(&args.p)?;
    let ctx = HilbertPolynomialContext::gotzmann_decompose(&coeffs, args.n)?;
    println!("p(t) = {}", args.p.trim());
    println!("n = {}", ctx.n());
    println!("gotzmann coefficients: {:?}", ctx.gotzmann_coeffs());
    println!("r = {}", ctx.r());
    println!("d = {}", ctx.d());
    println!("q(r) = {}", ctx.q_of(ctx.r()));
    println!("q(r+1) = {}", ctx.q_of(ctx.r() + 1));
    match ctx.qprime_of(ctx.r() + 1) {
        Ok(v) => println!("q'(r+1) = {v}"),
        Err(_) => println!("q'(r+1) = undefined (d >= n)"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_equations(args: &EquationsArgs) -> hilbeq::Result<ExitCode> {
    let family = Family::from_tag(&args.family)?;
    let coeffs = parse_p_polynomial(&args.p)?;
    let ctx = HilbertPolynomialContext::gotzmann_decompose(&coeffs, args.n)?;
    let pc = PlueckerContext::new(&ctx)?;
    let mut complete = true;
    let set = match family {
        Family::Ik => {
            if let Some(rows_spec) = &args.rows {
                if args.cols.is_empty() {
                    return Err(hilbeq::Error::Parse(
                        "--rows needs at least one --cols selection".into(),
                    ));
                }
                let matrix = equations::ik_matrix(&pc)?;
                let mut row_ids = Vec::new();
                for spec in rows_spec.split(';') {
                    let (var, j) = parse_row_spec(spec.trim())?;
                    let label = equations::RowLabel { var, j };
                    let id = matrix.find_row(&label).ok_or_else(|| {
                        hilbeq::Error::Parse(format!("row {label} not in the matrix"))
                    })?;
                    row_ids.push(id);
                }
                let mut polys = Vec::new();
                for cols in &args.cols {
                    let cols: Vec<usize> = cols
                        .split(',')
                        .map(|t| {
                            t.trim().parse::<usize>().map_err(|_| {
                                hilbeq::Error::Parse(format!("bad column `{t}`"))
                            })
                        })
                        .collect::<hilbeq::Result<_>>()?;
                    let minor = matrix.minor(&row_ids, &cols)?;
                    if !minor.is_zero() {
                        polys.push(minor.normalized());
                    }
                }
                equations::EquationSet {
                    family: Family::Ik,
                    delta_degree: ctx.q_r1()? + 1,
                    polynomials: polys,
                }
            } else {
                let budget = args.budget.ok_or_else(|| {
                    hilbeq::Error::Parse("ik needs --rows/--cols or --budget".into())
                })?;
                let (set, c) = equations::ik_equations(&pc, budget)?;
                complete = c;
                set
            }
        }
        Family::Bayer => {
            let selector = if args.tuple.is_empty() {
                let budget = args.budget.ok_or_else(|| {
                    hilbeq::Error::Parse("bayer needs --tuple or --budget".into())
                })?;
                BayerSelector::Full { budget }
            } else {
                let tuples = args
                    .tuple
                    .iter()
                    .map(|t| parse_tuple_spec(t, ctx.n()))
                    .collect::<hilbeq::Result<Vec<_>>>()?;
                BayerSelector::Tuples(tuples)
            };
            let (set, c) = equations::bayer_equations(&pc, &selector)?;
            complete = c;
            set
        }
        Family::BlmrT1 => equations::blmr_t1(&pc)?,
        Family::BlmrT2 => equations::blmr_t2(&pc)?,
        Family::BlmrFull => {
            let poly_text = args.poly.as_ref().ok_or_else(|| {
                hilbeq::Error::Parse("blmr-full needs --poly".into())
            })?;
            let p = DeltaPolynomial::parse_text(poly_text)?;
            equations::blmr_full(&pc, &p)?
        }
    };
    let file = EquationFile::new(&ctx, coeffs, set);
    let content = match args.format.as_str() {
        "text" => file.to_text(),
        "json" => file.to_json(),
        other => return Err(hilbeq::Error::Parse(format!("unknown format `{other}`"))),
    };
    match &args.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| hilbeq::Error::Parse(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{content}"),
    }
    if !complete {
        eprintln!("budget exhausted: output is partial");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> hilbeq::Result<ExitCode> {
    let eq_text = std::fs::read_to_string(&args.equations)
        .map_err(|e| hilbeq::Error::Parse(format!("cannot read {}: {e}", args.equations.display())))?;
    let file = EquationFile::parse(&eq_text)?;
    let ctx = file.context()?;
    let point_text = std::fs::read_to_string(&args.point)
        .map_err(|e| hilbeq::Error::Parse(format!("cannot read {}: {e}", args.point.display())))?;
    let point = parse_point_file(&point_text, &ctx)?;

    let report = point.membership_report()?;
    println!("persistence rank = {}", report.persistence_rank);
    println!("q(r+1) = {}", report.expected_rank);
    println!("d1 rank = {}", report.d1_rank);
    if let Some(qp) = report.qprime_r1 {
        println!("q'(r+1) = {qp}");
    }
    println!("hilbert point: {}", if report.is_hilb { "yes" } else { "no" });
    match report.in_u {
        Some(true) => println!("in open chart U: yes"),
        Some(false) => println!("in open chart U: no"),
        None => println!("in open chart U: undefined (d >= n)"),
    }

    let delta = point.delta_coords();
    let mut zero = 0usize;
    let mut nonzero = 0usize;
    let mut witness: Option<(usize, String)> = None;
    for (i, poly) in file.polynomials.iter().enumerate() {
        let value = verify::evaluate(poly, &delta);
        if value.is_zero() {
            zero += 1;
        } else {
            nonzero += 1;
            if witness.is_none() {
                witness = Some((i, format!("{} = {}", poly.to_text(), value)));
            }
        }
    }
    println!("equations: {} total, {zero} vanish, {nonzero} nonzero", file.polynomials.len());
    if let Some((i, w)) = &witness {
        println!("first nonzero witness (#{i}): {w}");
    }
    let pass = nonzero == 0 && (file.polynomials.is_empty() || report.is_hilb);
    println!("verdict: {}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
