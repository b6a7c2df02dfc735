//! Command-line front end for `skewsym`.
//!
//! Every subcommand writes one JSON document to stdout. Exit status is 0 on
//! success, 1 on bad input and 2 when a mathematical check fails.

pub mod json;

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skewsym::chromatic::{
    gamma_beta, h_expansion, harada_precup, verify_e_recurrence, verify_p_recurrence,
    RecurrenceReport,
};
use skewsym::congruence::{commutation_failure_by_degree, in_ideal, in_perp, WordCongruence};
use skewsym::foundation::words_of_content;
use skewsym::freealg::{nc_schur, DualElem, NCElem};
use skewsym::lr::{lr_classical, lr_plactic, lr_skew_expansion};
use skewsym::poset::{DegVariant, Nuio};
use skewsym::symfun::{skew, Basis, SymElem};
use skewsym::tableaux::enumerate_ssyt;
use skewsym::{IntVector, Partition, QPoly};

use json::{poly_to_json, render, sym_to_json, CoefJson, TermJson};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_FAILED: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(String);

impl CliError {
    pub fn new(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<skewsym::Error> for CliError {
    fn from(e: skewsym::Error) -> Self {
        CliError(e.to_string())
    }
}

/// Rendered output plus the exit status it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: u8,
}

#[derive(Debug, Parser)]
#[command(
    name = "skewsym",
    version,
    about = "Exact skewing operators on symmetric functions"
)]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite a symmetric function in another basis.
    Convert(ConvertArgs),
    /// Apply `f^⊥` to a symmetric function.
    Skew(SkewArgs),
    /// Littlewood–Richardson coefficients.
    Lr(LrArgs),
    /// h-expansion of the chromatic quasisymmetric function `ωX_P(β)`.
    Chromatic(ChromaticArgs),
    /// Check one instance of a recurrence for chromatic coefficients.
    Verify(VerifyArgs),
    /// Exhaustive checks in the quotients of the free algebra.
    Nc(NcArgs),
}

/// A comma-separated list of nonnegative integers; the empty string is the empty list.
fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("{t:?} is not a nonnegative integer"))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::new(parse_list(s)?).map_err(|e| e.to_string())
}

fn parse_nuio(s: &str) -> Result<Nuio, String> {
    s.parse::<Nuio>().map_err(|e| e.to_string())
}

fn parse_content(s: &str) -> Result<IntVector, String> {
    Ok(IntVector::from_usizes(&parse_list(s)?))
}

/// `basis:partition`, e.g. `e:2`, `p:3`, `s:2,1`.
fn parse_operator(s: &str) -> Result<SymElem, String> {
    let (basis, parts) = s
        .split_once(':')
        .ok_or_else(|| format!("{s:?} is not of the form basis:partition"))?;
    let basis: Basis = basis.trim().parse()?;
    Ok(SymElem::basis_element(basis, parse_partition(parts)?))
}

fn parse_deg_variant(s: &str) -> Result<DegVariant, String> {
    s.parse::<DegVariant>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Input file; stdin when absent or `-`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Target basis: m, e, h, p or s.
    #[arg(long, value_parser = str::parse::<Basis>)]
    pub to: Basis,
}

#[derive(Debug, Args)]
pub struct SkewArgs {
    /// The skewing function as `basis:partition`.
    #[arg(long = "f", value_parser = parse_operator, allow_hyphen_values = true)]
    pub f: SymElem,
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LrMethod {
    Classical,
    Skew,
    Plactic,
    All,
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub nu: Partition,
    #[arg(long, value_enum, default_value_t = LrMethod::All)]
    pub method: LrMethod,
}

#[derive(Debug, Args)]
pub struct ChromaticArgs {
    /// Hessenberg vector of the unit interval order.
    #[arg(long, value_parser = parse_nuio)]
    pub hess: Nuio,
    #[arg(long, value_parser = parse_content)]
    pub beta: IntVector,
    /// Print only the coefficient of `h_λ`.
    #[arg(long, value_parser = parse_partition)]
    pub coeff: Option<Partition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RecurrenceArg {
    E,
    P,
    Hp,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub recurrence: RecurrenceArg,
    #[arg(long, value_parser = parse_nuio)]
    pub hess: Nuio,
    #[arg(long, value_parser = parse_content)]
    pub beta: IntVector,
    /// Degree of the skewing operator; required for `e` and `p`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Target partition for `e` and `p`.
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Option<Partition>,
    /// Partition of length equal to the height, for `hp`.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,
    #[arg(long, value_parser = parse_deg_variant, default_value = "b")]
    pub deg_variant: DegVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NcCheck {
    Commutation,
    Perp,
    SchurExpansion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealArg {
    Content,
    Plactic,
    UnitInterval,
}

#[derive(Debug, Args)]
pub struct NcArgs {
    #[arg(long, value_enum)]
    pub check: NcCheck,
    #[arg(long, value_enum)]
    pub ideal: IdealArg,
    /// Hessenberg vector; required for the unit interval ideal and fixes the alphabet.
    #[arg(long, value_parser = parse_nuio)]
    pub hess: Option<Nuio>,
    /// Largest degree examined.
    #[arg(long)]
    pub max_deg: usize,
    /// Alphabet size for the content and plactic ideals.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::new(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::new(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let pretty = cli.pretty;
    let ok = |text: String| Output {
        text,
        status: EXIT_OK,
    };
    match &cli.command {
        Command::Convert(a) => {
            let f = json::parse_sym(&read_input(&a.input, stdin)?)?;
            Ok(ok(render(&sym_to_json(&f.convert(a.to)), pretty)))
        }
        Command::Skew(a) => {
            let g = json::parse_sym(&read_input(&a.input, stdin)?)?;
            let out = skew(&a.f, &g).convert(g.basis());
            Ok(ok(render(&sym_to_json(&out), pretty)))
        }
        Command::Lr(a) => cmd_lr(a, pretty),
        Command::Chromatic(a) => cmd_chromatic(a, pretty),
        Command::Verify(a) => cmd_verify(a, pretty),
        Command::Nc(a) => cmd_nc(a, pretty),
    }
}

/// Reads a constant integer coefficient.
fn integer(c: &QPoly) -> Result<i64, CliError> {
    c.as_constant()
        .filter(|r| r.is_integer())
        .and_then(|r| r.to_integer().to_string().parse().ok())
        .ok_or_else(|| CliError::new(format!("coefficient {c} is not an integer")))
}

#[derive(Serialize)]
struct LrReport {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    nu: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classical: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skew: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    plactic: Option<i64>,
    agree: bool,
}

fn cmd_lr(a: &LrArgs, pretty: bool) -> Result<Output, CliError> {
    if a.mu.weight() + a.nu.weight() != a.lambda.weight() {
        return Err(CliError::new(format!(
            "|mu| + |nu| = {} differs from |lambda| = {}",
            a.mu.weight() + a.nu.weight(),
            a.lambda.weight()
        )));
    }
    let wants = |m: LrMethod| a.method == m || a.method == LrMethod::All;
    let classical = if wants(LrMethod::Classical) {
        Some(integer(&lr_classical(&a.lambda, &a.mu, &a.nu)?)?)
    } else {
        None
    };
    let skew = if wants(LrMethod::Skew) {
        Some(integer(&lr_skew_expansion(&a.lambda, &a.mu).coeff(&a.nu))?)
    } else {
        None
    };
    let plactic = if wants(LrMethod::Plactic) {
        Some(lr_plactic(&a.lambda, &a.mu, &a.nu, None)? as i64)
    } else {
        None
    };
    let values: Vec<i64> = [classical, skew, plactic].into_iter().flatten().collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let report = LrReport {
        lambda: a.lambda.parts().to_vec(),
        mu: a.mu.parts().to_vec(),
        nu: a.nu.parts().to_vec(),
        classical,
        skew,
        plactic,
        agree,
    };
    Ok(Output {
        text: render(&report, pretty),
        status: if agree { EXIT_OK } else { EXIT_FAILED },
    })
}

fn cmd_chromatic(a: &ChromaticArgs, pretty: bool) -> Result<Output, CliError> {
    let x = h_expansion(&a.hess, &a.beta)?;
    let text = match &a.coeff {
        Some(lambda) => render(
            &TermJson {
                part: lambda.parts().to_vec(),
                coef: poly_to_json(&x.coeff(lambda)),
            },
            pretty,
        ),
        None => render(&sym_to_json(&x.to_sym()), pretty),
    };
    Ok(Output {
        text,
        status: EXIT_OK,
    })
}

#[derive(Serialize)]
struct LhsTermJson {
    mu: Vec<usize>,
    positions: Vec<usize>,
    coef: CoefJson,
}

#[derive(Serialize)]
struct RhsTermJson {
    removed: Vec<i64>,
    letters: Vec<u8>,
    deg: i64,
    one_row: Option<CoefJson>,
    coef: CoefJson,
    contribution: CoefJson,
}

#[derive(Serialize)]
struct VerifyReport {
    recurrence: &'static str,
    hess: Vec<usize>,
    beta: Vec<i64>,
    k: usize,
    lambda: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<Vec<usize>>,
    deg_variant: String,
    lhs: CoefJson,
    rhs: CoefJson,
    holds: bool,
    lhs_terms: Vec<LhsTermJson>,
    rhs_terms: Vec<RhsTermJson>,
}

fn verify_report(r: &RecurrenceReport, tag: &'static str, mu: Option<&Partition>) -> VerifyReport {
    VerifyReport {
        recurrence: tag,
        hess: r.poset.hessenberg().to_vec(),
        beta: r.beta.entries().to_vec(),
        k: r.k,
        lambda: r.lambda.parts().to_vec(),
        mu: mu.map(|m| m.parts().to_vec()),
        deg_variant: r.variant.to_string(),
        lhs: poly_to_json(&r.lhs),
        rhs: poly_to_json(&r.rhs),
        holds: r.holds,
        lhs_terms: r
            .lhs_terms
            .iter()
            .map(|t| LhsTermJson {
                mu: t.mu.parts().to_vec(),
                positions: t.positions.clone(),
                coef: poly_to_json(&t.coeff),
            })
            .collect(),
        rhs_terms: r
            .rhs_terms
            .iter()
            .map(|t| RhsTermJson {
                removed: t.removed.entries().to_vec(),
                letters: t.letters.clone(),
                deg: t.deg,
                one_row: t.one_row.as_ref().map(poly_to_json),
                coef: poly_to_json(&t.coeff),
                contribution: poly_to_json(&t.contribution),
            })
            .collect(),
    }
}

fn cmd_verify(a: &VerifyArgs, pretty: bool) -> Result<Output, CliError> {
    let report = match a.recurrence {
        RecurrenceArg::E | RecurrenceArg::P => {
            let k = a.k.ok_or_else(|| CliError::new("--k is required"))?;
            let lambda = a
                .lambda
                .as_ref()
                .ok_or_else(|| CliError::new("--lambda is required"))?;
            if a.recurrence == RecurrenceArg::E {
                verify_report(
                    &verify_e_recurrence(&a.hess, &a.beta, k, lambda, a.deg_variant)?,
                    "e",
                    None,
                )
            } else {
                verify_report(
                    &verify_p_recurrence(&a.hess, &a.beta, k, lambda, a.deg_variant)?,
                    "p",
                    None,
                )
            }
        }
        RecurrenceArg::Hp => {
            let mu =
                a.mu.as_ref()
                    .ok_or_else(|| CliError::new("--mu is required"))?;
            verify_report(&harada_precup(&a.hess, &a.beta, mu)?, "hp", Some(mu))
        }
    };
    Ok(Output {
        status: if report.holds { EXIT_OK } else { EXIT_FAILED },
        text: render(&report, pretty),
    })
}

#[derive(Serialize)]
struct NcReport {
    check: &'static str,
    ideal: &'static str,
    n: usize,
    max_deg: usize,
    checked: usize,
    pass: bool,
    failure: Option<String>,
}

fn tableau_sum(lambda: &Partition, n: usize) -> Result<NCElem, CliError> {
    let mut sum = NCElem::zero(n);
    for t in enumerate_ssyt(lambda, n) {
        sum.add_term(t.column_word(), &QPoly::one())?;
    }
    Ok(sum)
}

fn cmd_nc(a: &NcArgs, pretty: bool) -> Result<Output, CliError> {
    let (congruence, ideal) = match (a.ideal, &a.hess) {
        (IdealArg::UnitInterval, Some(p)) => {
            (WordCongruence::unit_interval(p.clone()), "unit-interval")
        }
        (IdealArg::UnitInterval, None) => {
            return Err(CliError::new("the unit-interval ideal requires --hess"))
        }
        (_, Some(_)) => {
            return Err(CliError::new(
                "--hess only applies to the unit-interval ideal",
            ))
        }
        (IdealArg::Content, None) => (WordCongruence::content(a.n), "content"),
        (IdealArg::Plactic, None) => (WordCongruence::plactic(a.n), "plactic"),
    };
    let n = congruence.alphabet();
    if n > u8::MAX as usize {
        return Err(CliError::new("alphabets are limited to 255 letters"));
    }
    let mut checked = 0usize;
    let mut failure = None;
    let check = match a.check {
        NcCheck::Commutation => {
            checked = (3..=a.max_deg).map(|d| (d - 1) / 2).sum();
            failure = commutation_failure_by_degree(&congruence, a.max_deg)
                .map(|(k, l)| format!("ee_{k} ee_{l} - ee_{l} ee_{k} is not in the ideal"));
            "commutation"
        }
        NcCheck::Perp => {
            let family: Vec<(String, DualElem)> = match a.ideal {
                IdealArg::Content => IntVector::all_nonnegative(n, a.max_deg)
                    .into_iter()
                    .map(|beta| {
                        let counts = beta.as_counts().expect("nonnegative");
                        let gamma = DualElem::sum_of_words(n, words_of_content(&counts))?;
                        Ok((format!("content class {counts:?}"), gamma))
                    })
                    .collect::<Result<_, CliError>>()?,
                IdealArg::Plactic => Partition::all_up_to(a.max_deg)
                    .into_iter()
                    .filter(|l| l.len() <= n)
                    .flat_map(|l| enumerate_ssyt(&l, n))
                    .map(|t| {
                        let class = congruence.class_of(&t.column_word());
                        Ok((
                            format!("class of tableau {t}"),
                            DualElem::sum_of_words(n, class)?,
                        ))
                    })
                    .collect::<Result<_, CliError>>()?,
                IdealArg::UnitInterval => {
                    let p = a.hess.as_ref().expect("checked above");
                    IntVector::all_nonnegative(n, a.max_deg)
                        .into_iter()
                        .map(|beta| {
                            Ok((
                                format!("gamma_beta for beta = {beta:?}"),
                                gamma_beta(p, &beta)?,
                            ))
                        })
                        .collect::<Result<_, CliError>>()?
                }
            };
            for (label, gamma) in family {
                checked += 1;
                if !in_perp(&gamma, &congruence) {
                    failure = Some(format!("{label} is not orthogonal to the ideal"));
                    break;
                }
            }
            "perp"
        }
        NcCheck::SchurExpansion => {
            if a.ideal == IdealArg::UnitInterval {
                return Err(CliError::new(
                    "schur-expansion applies to the content and plactic ideals",
                ));
            }
            'outer: for big_n in 1..=n {
                let c = match a.ideal {
                    IdealArg::Content => WordCongruence::content(big_n),
                    _ => WordCongruence::plactic(big_n),
                };
                for lambda in Partition::all_up_to(a.max_deg) {
                    checked += 1;
                    let diff = &nc_schur(&lambda, big_n) - &tableau_sum(&lambda, big_n)?;
                    if !in_ideal(&diff, &c) {
                        failure = Some(format!(
                            "s_{lambda} over {big_n} letters differs from its tableau sum"
                        ));
                        break 'outer;
                    }
                }
            }
            "schur-expansion"
        }
    };
    let report = NcReport {
        check,
        ideal,
        n,
        max_deg: a.max_deg,
        checked,
        pass: failure.is_none(),
        failure,
    };
    Ok(Output {
        status: if report.pass { EXIT_OK } else { EXIT_FAILED },
        text: render(&report, pretty),
    })
}

/// Parses `args` and runs the command, mapping every outcome to an exit status.
/// Returns the text for stdout, the text for stderr and the status.
pub fn main_with(args: &[String], stdin: &mut dyn Read) -> (String, String, u8) {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (String::new(), text, status)
            } else {
                (text, String::new(), status)
            };
        }
    };
    match run(&cli, stdin) {
        Ok(out) => (out.text + "\n", String::new(), out.status),
        Err(e) => (String::new(), format!("error: {e}\n"), EXIT_INPUT),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (String, String, u8) {
        let args: Vec<String> = std::iter::once("skewsym")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        main_with(&args, &mut input.as_bytes())
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_list("12, 3").unwrap(), vec![12, 3]);
        assert!(parse_list("1,-2").is_err());
        assert!(parse_partition("1,2").is_err());
        assert!(parse_operator("e2").is_err());
        assert_eq!(
            parse_operator("s:2,1").unwrap(),
            SymElem::basis_element(Basis::S, Partition::new(vec![2, 1]).unwrap())
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["lr", "--lambda", "2,1", "--mu", "1", "--nu", "1"], "").2,
            1
        );
        assert_eq!(call(&["bogus"], "").2, 1);
        assert_eq!(call(&["--help"], "").2, 0);
        assert_eq!(call(&["convert", "--to", "e"], "{").2, 1);
        let (out, _, status) = call(&["convert", "--to", "e"], r#"{"basis":"h","terms":[]}"#);
        assert_eq!(status, 0);
        assert_eq!(out, "{\"basis\":\"e\",\"terms\":[]}\n");
    }
}
