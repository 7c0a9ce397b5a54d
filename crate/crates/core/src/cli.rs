//! Command-line front end. [`run`] parses arguments, dispatches one verb and
//! returns the process exit code: 0 on success, 1 when a search or
//! verification verdict fails, 2 on usage or input errors.

use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::catalog::named_constants;
use crate::error::{Error, Result};
use crate::factor::{factorize, is_irreducible, is_odd_poly, Factorization};
use crate::mersenne::{enumerate_mersenne, is_mersenne_prime};
use crate::poly::{format_poly, parse_poly_with, Poly, Style};
use crate::report::{self, Payload};
use crate::search::{
    blind_search_with, is_ibup, search_omega3, search_omega4_mersenne, search_omega4_nonmersenne,
    verify_theorems_with, BlindConfig, BupRecord, SearchReport, VerifyOptions,
};
use crate::sigma::{
    is_bup, is_perfect, is_unitary_perfect, sigma, sigma_bistar, sigma_star, DEFAULT_DIVISOR_CAP,
};

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "GF2BUP_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gf2bup", version, about = "Divisor sums and bi-unitary perfect polynomials over F2[x]")]
#[command(
    after_help = "Polynomials: sum form (1+x+x^3), products ((x+1)^2*x), hex masks (0xb), or @NAME from the catalog."
)]
pub struct Cli {
    /// Output format for the whole payload.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// How polynomials are written in text output.
    #[arg(long, global = true, value_enum)]
    pub style: Option<StyleArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StyleArg {
    Sum,
    Hex,
    Factored,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Style {
        match s {
            StyleArg::Sum => Style::Sum,
            StyleArg::Hex => Style::Hex,
            StyleArg::Factored => Style::Factored,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor a polynomial into irreducibles.
    Factor { poly: String },
    /// Evaluate a divisor sum.
    Sigma {
        #[arg(long, value_enum, default_value_t = SigmaKind::Bistar)]
        kind: SigmaKind,
        poly: String,
    },
    /// Test one predicate; prints true or false.
    Check(CheckArgs),
    /// List Mersenne primes 1 + x^a (x+1)^b up to a degree.
    Mersenne {
        #[arg(long, default_value_t = 16)]
        max_degree: u32,
    },
    /// List the named polynomials, or show one.
    Catalog { name: Option<String> },
    /// Run one search case.
    Search(SearchArgs),
    /// Check the catalog and run the bounded searches.
    Verify {
        /// Also run the blind search.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_CAP)]
        divisor_cap: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SigmaKind {
    Sigma,
    Star,
    Bistar,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("predicate").required(true).multiple(false).args(["bup", "perfect", "unitary_perfect", "ibup", "irreducible", "mersenne", "odd"])))]
pub struct CheckArgs {
    #[arg(long)]
    bup: bool,
    #[arg(long)]
    perfect: bool,
    #[arg(long)]
    unitary_perfect: bool,
    #[arg(long)]
    ibup: bool,
    #[arg(long)]
    irreducible: bool,
    #[arg(long)]
    mersenne: bool,
    #[arg(long)]
    odd: bool,
    poly: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    Omega3,
    Omega4Mersenne,
    Omega4Nonmersenne,
    Blind,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("case_choice").required(true).multiple(false).args(["case", "blind"])))]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    case: Option<Case>,
    /// Same as `--case blind`.
    #[arg(long)]
    blind: bool,
    /// Blind search only.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Blind search only.
    #[arg(long)]
    max_omega: Option<usize>,
    /// Hits with more bi-unitary divisors than this skip the oracle cross-check.
    #[arg(long, default_value_t = DEFAULT_DIVISOR_CAP)]
    divisor_cap: u64,
}

/// Sizes the global rayon pool from [`THREADS_ENV`], if set.
pub fn init_thread_pool() {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    if let Some(n) = threads.filter(|&n| n > 0) {
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses the polynomial grammar with `@NAME` atoms resolved from the catalog.
pub fn resolve_poly(text: &str) -> Result<Poly> {
    parse_poly_with(text, &|name| named_constants().get(name).map(|e| e.poly.clone()))
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(text: &str, e: Error) -> Failure {
        let message = match e {
            Error::Parse { pos, .. } | Error::ExponentOverflow { pos } => {
                format!("error: {e}\n  {text}\n  {:>width$}", "^", width = pos + 1)
            }
            _ => format!("error: {e}"),
        };
        Failure { code: EXIT_USAGE, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure { code: EXIT_USAGE, message: format!("error: {e}") }
    }
}

fn poly_arg(text: &str) -> std::result::Result<Poly, Failure> {
    resolve_poly(text).map_err(|e| Failure::input(text, e))
}

/// Runs one invocation, writing the payload to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok((payload, text)) => {
            let body = match cli.format {
                Format::Json => payload.to_json(),
                Format::Text => text,
            };
            let _ = writeln!(out, "{}", body.trim_end());
            if payload.passed() {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> std::result::Result<(Payload, String), Failure> {
    let style = |default: Style| cli.style.map(Style::from).unwrap_or(default);
    match &cli.command {
        Command::Factor { poly } => {
            let p = poly_arg(poly)?;
            let f = factorize(&p)?;
            let text = render_factorization(&f, style(Style::Factored));
            Ok((report::factor_payload(&f), text))
        }
        Command::Sigma { kind, poly } => {
            let p = poly_arg(poly)?;
            let (name, value) = match kind {
                SigmaKind::Sigma => ("sigma", sigma(&p)?),
                SigmaKind::Star => ("star", sigma_star(&p)?),
                SigmaKind::Bistar => ("bistar", sigma_bistar(&p)?),
            };
            let f = factorize(&value)?;
            let text = render(&value, &f, style(Style::Factored));
            Ok((report::sigma_payload(name, &p, &value, &f), text))
        }
        Command::Check(args) => {
            let p = poly_arg(&args.poly)?;
            let (name, result) = check(args, &p)?;
            Ok((report::check_payload(name, &p, result), result.to_string()))
        }
        Command::Mersenne { max_degree } => {
            let primes = enumerate_mersenne(*max_degree);
            let catalog = named_constants();
            let s = style(Style::Sum);
            let mut text = format!("{} Mersenne primes of degree <= {max_degree}\n", primes.len());
            for m in &primes {
                let label = catalog.label_of(&m.poly).unwrap_or("");
                text += &format!(
                    "{:>3}  a={:<2} b={:<2} {:<3} {}\n",
                    m.poly.degree().unwrap_or(0),
                    m.a,
                    m.b,
                    label,
                    format_poly(&m.poly, s)
                );
            }
            Ok((report::mersenne_payload(*max_degree, &primes), text))
        }
        Command::Catalog { name } => {
            let catalog = named_constants();
            let entries = match name {
                Some(n) => vec![catalog
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Failure::from(Error::UnknownConstant(n.clone())))?],
                None => catalog.entries().to_vec(),
            };
            let s = style(Style::Factored);
            let mut text = String::new();
            for e in &entries {
                text += &format!(
                    "{:<4} deg {:>2}  {:<24} {}\n",
                    e.name,
                    e.poly.degree().unwrap_or(0),
                    e.symbolic,
                    render(&e.poly, &e.factorization, s)
                );
            }
            Ok((report::catalog_payload(&entries), text))
        }
        Command::Search(args) => {
            let report = search(args)?;
            let text = render_search(&report, style(Style::Factored), 0);
            Ok((report::search_payload(&report, args.divisor_cap), text))
        }
        Command::Verify { all, divisor_cap } => {
            let opts = VerifyOptions { blind: all.then(BlindConfig::default) };
            let v = verify_theorems_with(&opts);
            let payload = report::verify_payload(&v, *divisor_cap);
            let mut text = String::new();
            let bad: Vec<&str> = v.catalog.entries.iter().filter(|e| !(e.1 && e.2)).map(|e| e.0).collect();
            text += &format!(
                "catalog: {} entries and their translates, {}\n",
                v.catalog.entries.len(),
                if bad.is_empty() {
                    "all bi-unitary perfect".to_string()
                } else {
                    format!("failing {}", bad.join(", "))
                }
            );
            for r in &v.reports {
                text += &summary_line(r, 0);
                for sub in &r.subcases {
                    text += &summary_line(sub, 1);
                }
            }
            if let Payload::Verify(j) = &payload {
                text += &format!("verdict: {} ({:.2?})\n", j.verdict, v.elapsed);
            }
            Ok((payload, text))
        }
    }
}

fn check(args: &CheckArgs, p: &Poly) -> Result<(&'static str, bool)> {
    Ok(if args.bup {
        ("bup", is_bup(p))
    } else if args.perfect {
        ("perfect", is_perfect(p))
    } else if args.unitary_perfect {
        ("unitary_perfect", is_unitary_perfect(p))
    } else if args.ibup {
        ("ibup", BupRecord::from_poly(p).is_some_and(|r| is_ibup(&r)))
    } else if args.irreducible {
        ("irreducible", is_irreducible(p)?)
    } else if args.mersenne {
        ("mersenne", is_mersenne_prime(p).is_some())
    } else {
        ("odd", is_odd_poly(p))
    })
}

fn search(args: &SearchArgs) -> Result<SearchReport, Failure> {
    let case =
        if args.blind { Case::Blind } else { args.case.expect("clap enforces one of --case, --blind") };
    if case != Case::Blind && (args.max_degree.is_some() || args.max_omega.is_some()) {
        return Err(Failure {
            code: EXIT_USAGE,
            message: "error: --max-degree and --max-omega apply only to the blind search".into(),
        });
    }
    Ok(match case {
        Case::Omega3 => search_omega3(),
        Case::Omega4Mersenne => search_omega4_mersenne(),
        Case::Omega4Nonmersenne => search_omega4_nonmersenne(),
        Case::Blind => {
            let d = BlindConfig::default();
            blind_search_with(&BlindConfig {
                max_degree: args.max_degree.unwrap_or(d.max_degree),
                max_omega: args.max_omega.unwrap_or(d.max_omega),
                ..d
            })?
        }
    })
}

fn render(p: &Poly, f: &Factorization, style: Style) -> String {
    match style {
        Style::Factored => f.to_string(),
        other => format_poly(p, other),
    }
}

/// Product form; with the hex style each prime is written as a mask.
fn render_factorization(f: &Factorization, style: Style) -> String {
    if style != Style::Hex || f.factors().is_empty() {
        return f.to_string();
    }
    f.factors()
        .iter()
        .map(|pp| match pp.exp {
            1 => pp.prime.to_hex(),
            e => format!("{}^{e}", pp.prime.to_hex()),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn summary_line(r: &SearchReport, depth: usize) -> String {
    format!(
        "{:indent$}{:<24} {:>10} candidates {:>3} hits (expected {:>2})  {}  {:.2?}\n",
        "",
        r.case_id.as_str(),
        r.candidate_count,
        r.hits.len(),
        r.expected.len(),
        if r.passed() { "pass" } else { "FAIL" },
        r.elapsed,
        indent = depth * 2
    )
}

fn render_search(r: &SearchReport, style: Style, depth: usize) -> String {
    let pad = " ".repeat(depth * 2);
    let mut text = summary_line(r, depth);
    for h in &r.hits {
        text += &format!(
            "{pad}  {:<5} deg {:>2}  omega {}  {}\n",
            h.label
                .map(str::to_string)
                .or_else(|| h.conjugate_label.map(|c| format!("~{c}")))
                .unwrap_or_default(),
            h.degree,
            h.omega,
            render(&h.poly, &h.factorization, style)
        );
    }
    for m in &r.verdict.missing {
        text += &format!("{pad}  missing    {}\n", format_poly(m, Style::Sum));
    }
    for u in &r.verdict.unexpected {
        text += &format!("{pad}  unexpected {}\n", format_poly(u, Style::Sum));
    }
    for sub in &r.subcases {
        text += &render_search(sub, style, depth + 1);
    }
    text
}
