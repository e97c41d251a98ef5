//! Command-line front-end: `dmax`, `factor`, `reduced`, `table`, and
//! `verify` subcommands with text and JSON output.
//!
//! Exit codes: 0 success, 1 method disagreement found by `verify`,
//! 2 input validation, 3 method/arity mismatch, 4 non-membership.

use std::fmt::Write as _;
use std::io::Read as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::embdim3::{self, GmnForm, ReducedStructure, TableRow};
use crate::semigroup::{
    gcd, DmaxResult, Factorization, Method, NumericalSemigroup, ReducedElementReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_METHOD_ARITY: i32 = 3;
pub const EXIT_NOT_MEMBER: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "maxdenum",
    version,
    about = "Maximal denumerants and factorization invariants of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit one JSON object per report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include elapsed milliseconds in reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the maximal denumerant of a semigroup.
    Dmax {
        /// Comma-separated generators, or @FILE / @- for one list per line.
        generators: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// List the factorizations of an element, with denumerant data.
    Factor {
        /// Comma-separated generators, or @FILE / @- for one list per line.
        generators: String,
        element: i64,
        /// Only show factorizations of maximal length.
        #[arg(long)]
        maximal: bool,
    },
    /// List the maximally reduced elements and their maximal factorizations.
    Reduced {
        /// Comma-separated generators, or @FILE / @- for one list per line.
        generators: String,
    },
    /// Tabulate the maximal denumerant over all triples with a fixed multiplicity.
    Table {
        #[arg(long)]
        multiplicity: i64,
        #[arg(long)]
        max_gen: i64,
        /// Restrict to basic triples (differences to the multiplicity coprime).
        #[arg(long)]
        basic_only: bool,
    },
    /// Cross-check all four computation methods over a sweep of triples.
    Verify {
        #[arg(long)]
        a1_max: i64,
        #[arg(long)]
        gen_max: i64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Auto,
    General,
    MinH,
    Ceiling,
    Bezout,
}

/// Report for the dmax, factor, and reduced subcommands. Coefficient
/// arrays are always indexed against `minimal_generators`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub generators: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub embedding_dimension: usize,
    pub multiplicity: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dmax: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorizations: Option<Vec<Factorization>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_factorizations: Option<Vec<Factorization>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub denumerant: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dmax_element: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_maximally_reduced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_elements: Option<Vec<ReducedElementReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<ReducedStructure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl SemigroupReport {
    fn new(raw: &[i64], sg: &NumericalSemigroup) -> Self {
        Self {
            generators: raw.to_vec(),
            minimal_generators: sg.minimal_generators().to_vec(),
            embedding_dimension: sg.embedding_dimension(),
            multiplicity: sg.multiplicity(),
            dmax: None,
            method: None,
            element: None,
            factorizations: None,
            maximal_factorizations: None,
            denumerant: None,
            dmax_element: None,
            is_maximally_reduced: None,
            scan_bound: None,
            reduced_elements: None,
            structure: None,
            elapsed_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub multiplicity: i64,
    pub max_gen: i64,
    pub basic_only: bool,
    pub table: Vec<TableRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyCounterexample {
    pub triple: [i64; 3],
    pub general: i64,
    pub min_h: i64,
    pub ceiling: i64,
    pub bezout: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub a1_max: i64,
    pub gen_max: i64,
    pub checked: u64,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<VerifyCounterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let (json, timing) = (cli.json, cli.timing);
    match cli.command {
        Command::Dmax { generators, method } => cmd_dmax(&generators, method, json, timing),
        Command::Factor {
            generators,
            element,
            maximal,
        } => cmd_factor(&generators, element, maximal, json, timing),
        Command::Reduced { generators } => cmd_reduced(&generators, json, timing),
        Command::Table {
            multiplicity,
            max_gen,
            basic_only,
        } => cmd_table(multiplicity, max_gen, basic_only, json, timing),
        Command::Verify { a1_max, gen_max } => cmd_verify(a1_max, gen_max, json, timing),
    }
}

fn fail_validation(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_VALIDATION
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn fac_list(facs: &[Factorization]) -> String {
    facs.iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Parses a generator argument: either a single comma-separated list, or
/// `@FILE` / `@-` holding one list per line. Blank lines and `#` comments
/// are skipped.
fn generator_lists(arg: &str) -> Result<Vec<Vec<i64>>, String> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok(vec![parse_list(arg)?]);
    };
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    let mut lists = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        lists.push(parse_list(line)?);
    }
    if lists.is_empty() {
        return Err("batch input contains no generator lists".into());
    }
    Ok(lists)
}

fn parse_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<i64>()
                .map_err(|_| format!("invalid generator {part:?}"))
        })
        .collect()
}

fn emit<T: Serialize>(report: &T, json: bool, text: String) {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).expect("report serializes")
        );
    } else {
        print!("{text}");
    }
}

fn cmd_dmax(generators: &str, method: MethodArg, json: bool, timing: bool) -> i32 {
    let lists = match generator_lists(generators) {
        Ok(lists) => lists,
        Err(msg) => return fail_validation(&msg),
    };
    for list in &lists {
        let start = Instant::now();
        let sg = match NumericalSemigroup::new(list) {
            Ok(sg) => sg,
            Err(e) => return fail_validation(&e.to_string()),
        };
        let mut distinct = list.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let result = match resolve_dmax(&sg, &distinct, method) {
            Ok(result) => result,
            Err((code, msg)) => {
                eprintln!("error: {msg}");
                return code;
            }
        };
        let mut report = SemigroupReport::new(list, &sg);
        report.dmax = Some(result.value);
        report.method = Some(result.method);
        if timing {
            report.elapsed_ms = Some(ms(start));
        }
        let text = format!(
            "d_max(<{}>) = {} (method: {})\n",
            join(sg.minimal_generators()),
            result.value,
            result.method
        );
        emit(&report, json, text);
    }
    EXIT_OK
}

fn resolve_dmax(
    sg: &NumericalSemigroup,
    distinct: &[i64],
    method: MethodArg,
) -> Result<DmaxResult, (i32, String)> {
    let general = |sg: &NumericalSemigroup| {
        sg.dmax_general()
            .map_err(|e| (EXIT_VALIDATION, e.to_string()))
    };
    match method {
        MethodArg::General => general(sg),
        MethodArg::Auto => {
            if distinct.len() == 3 {
                Ok(auto_triple(distinct[0], distinct[1], distinct[2]))
            } else {
                general(sg)
            }
        }
        formula => {
            if distinct.len() != 3 {
                return Err((
                    EXIT_METHOD_ARITY,
                    format!(
                        "method requires exactly three distinct generators, got {}",
                        distinct.len()
                    ),
                ));
            }
            let form = GmnForm::decompose(distinct[0], distinct[1], distinct[2])
                .map_err(|e| (EXIT_VALIDATION, e.to_string()))?;
            Ok(match formula {
                MethodArg::MinH => embdim3::dmax_min_h(&form),
                MethodArg::Ceiling => embdim3::dmax_ceiling(&form),
                MethodArg::Bezout => embdim3::dmax_bezout(&form),
                MethodArg::Auto | MethodArg::General => unreachable!(),
            })
        }
    }
}

/// Auto method for a sorted distinct triple: the basic-triple
/// classification when it settles the value, the Bézout formula otherwise.
fn auto_triple(a1: i64, a2: i64, a3: i64) -> DmaxResult {
    let form = GmnForm::decompose(a1, a2, a3).expect("triple validated by semigroup construction");
    if form.g == 1 {
        if let Ok(classification) = embdim3::classify_basic(a1, a2, a3) {
            if let Some(value) = classification.dmax_if_determined {
                debug_assert_eq!(value, embdim3::dmax_bezout(&form).value);
                return DmaxResult {
                    value,
                    method: Method::Classification,
                };
            }
        }
    }
    embdim3::dmax_bezout(&form)
}

fn cmd_factor(generators: &str, element: i64, maximal_only: bool, json: bool, timing: bool) -> i32 {
    let lists = match generator_lists(generators) {
        Ok(lists) => lists,
        Err(msg) => return fail_validation(&msg),
    };
    for list in &lists {
        let start = Instant::now();
        let sg = match NumericalSemigroup::new(list) {
            Ok(sg) => sg,
            Err(e) => return fail_validation(&e.to_string()),
        };
        if !sg.contains(element) {
            let mut msg = format!(
                "{element} is not an element of <{}>",
                join(sg.minimal_generators())
            );
            if let Ok(f) = sg.frobenius_number() {
                let _ = write!(msg, " (Frobenius number {f})");
            }
            eprintln!("error: {msg}");
            return EXIT_NOT_MEMBER;
        }
        let factorizations = sg.factorizations(element);
        let maximal = sg
            .maximal_factorizations(element)
            .expect("membership checked");
        let reduced = sg.is_maximally_reduced(element).expect("membership checked");

        let mut report = SemigroupReport::new(list, &sg);
        report.element = Some(element);
        if !maximal_only {
            report.factorizations = Some(factorizations.clone());
        }
        report.denumerant = Some(factorizations.len());
        report.dmax_element = Some(maximal.len() as i64);
        report.is_maximally_reduced = Some(reduced);
        report.maximal_factorizations = Some(maximal.clone());
        if timing {
            report.elapsed_ms = Some(ms(start));
        }

        let mut text = String::new();
        let shown = if maximal_only { &maximal } else { &factorizations };
        let kind = if maximal_only {
            "Maximal factorizations"
        } else {
            "Factorizations"
        };
        let _ = writeln!(
            text,
            "{kind} of {element} in <{}>:",
            join(sg.minimal_generators())
        );
        for f in shown {
            let _ = writeln!(text, "  {f}  length {}", f.length());
        }
        let _ = writeln!(text, "denumerant = {}", factorizations.len());
        let _ = writeln!(text, "d_max({element}; S) = {}", maximal.len());
        let _ = writeln!(text, "maximally reduced: {reduced}");
        emit(&report, json, text);
    }
    EXIT_OK
}

fn cmd_reduced(generators: &str, json: bool, timing: bool) -> i32 {
    let lists = match generator_lists(generators) {
        Ok(lists) => lists,
        Err(msg) => return fail_validation(&msg),
    };
    for list in &lists {
        let start = Instant::now();
        let sg = match NumericalSemigroup::new(list) {
            Ok(sg) => sg,
            Err(e) => return fail_validation(&e.to_string()),
        };
        let bound = match sg.scan_bound() {
            Ok(bound) => bound,
            Err(e) => return fail_validation(&e.to_string()),
        };
        let reports = match sg.maximally_reduced_elements() {
            Ok(reports) => reports,
            Err(e) => return fail_validation(&e.to_string()),
        };
        let dmax = reports.iter().map(|r| r.dmax_element).max().unwrap_or(1);
        let structure = if sg.embedding_dimension() == 3 {
            embdim3::reduced_structure(&sg).ok()
        } else {
            None
        };

        let mut report = SemigroupReport::new(list, &sg);
        report.scan_bound = Some(bound);
        report.reduced_elements = Some(reports.clone());
        report.dmax = Some(dmax);
        report.method = Some(Method::General);
        report.structure = structure.clone();
        if timing {
            report.elapsed_ms = Some(ms(start));
        }

        let mut text = String::new();
        let _ = writeln!(
            text,
            "Maximally reduced elements of <{}> (checked up to N = {bound}):",
            join(sg.minimal_generators())
        );
        for r in &reports {
            let _ = writeln!(
                text,
                "  {}; {}",
                r.element,
                fac_list(&r.maximal_factorizations)
            );
        }
        if let Some(st) = &structure {
            let _ = writeln!(text, "k = {}, U = {}, V = {}", st.k, st.u, st.v);
        }
        let _ = writeln!(text, "d_max(S) = {dmax}");
        emit(&report, json, text);
    }
    EXIT_OK
}

fn cmd_table(multiplicity: i64, max_gen: i64, basic_only: bool, json: bool, timing: bool) -> i32 {
    if multiplicity < 2 {
        return fail_validation("--multiplicity must be at least 2");
    }
    if max_gen <= multiplicity {
        return fail_validation("--max-gen must exceed the multiplicity");
    }
    let start = Instant::now();
    let table = embdim3::multiplicity_table(multiplicity, max_gen, basic_only);
    let report = TableReport {
        multiplicity,
        max_gen,
        basic_only,
        table: table.clone(),
        elapsed_ms: timing.then(|| ms(start)),
    };

    let mut text = String::new();
    let kind = if basic_only { "basic triples" } else { "triples" };
    let _ = writeln!(
        text,
        "d_max over {kind} with multiplicity {multiplicity}, generators up to {max_gen}:"
    );
    let mut values: Vec<i64> = table.iter().map(|r| r.dmax.value).collect();
    values.sort_unstable();
    values.dedup();
    for value in values.into_iter().rev() {
        let _ = writeln!(text, "d_max = {value}:");
        for row in table.iter().filter(|r| r.dmax.value == value) {
            let _ = writeln!(text, "  <{multiplicity},{},{}>", row.a2, row.a3);
        }
    }
    emit(&report, json, text);
    EXIT_OK
}

fn cmd_verify(a1_max: i64, gen_max: i64, json: bool, timing: bool) -> i32 {
    if a1_max < 1 || gen_max < 1 {
        return fail_validation("bounds must be positive");
    }
    let start = Instant::now();
    let mut checked: u64 = 0;
    let mut counterexample = None;
    'sweep: for a1 in 2..=a1_max {
        for a2 in a1 + 1..=gen_max {
            for a3 in a2 + 1..=gen_max {
                if gcd(a1, gcd(a2, a3)) != 1 {
                    continue;
                }
                checked += 1;
                let form = GmnForm::decompose(a1, a2, a3).expect("sorted coprime triple");
                let general = NumericalSemigroup::new(&[a1, a2, a3])
                    .expect("gcd checked")
                    .dmax_general()
                    .expect("bound fits in i64")
                    .value;
                let min_h = embdim3::dmax_min_h(&form).value;
                let ceiling = embdim3::dmax_ceiling(&form).value;
                let bezout = embdim3::dmax_bezout(&form).value;
                if !(general == min_h && min_h == ceiling && ceiling == bezout) {
                    counterexample = Some(VerifyCounterexample {
                        triple: [a1, a2, a3],
                        general,
                        min_h,
                        ceiling,
                        bezout,
                    });
                    break 'sweep;
                }
            }
        }
    }
    let agree = counterexample.is_none();
    let report = VerifyReport {
        a1_max,
        gen_max,
        checked,
        agree,
        counterexample: counterexample.clone(),
        elapsed_ms: timing.then(|| ms(start)),
    };
    let text = match &counterexample {
        None => format!("verified {checked} triples: all four methods agree\n"),
        Some(c) => format!(
            "disagreement at <{},{},{}>: general={} min-h={} ceiling={} bezout={}\n",
            c.triple[0], c.triple[1], c.triple[2], c.general, c.min_h, c.ceiling, c.bezout
        ),
    };
    emit(&report, json, text);
    if agree {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    }
}
