//! The `mexlab` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource ceiling. `MEXLAB_MAX_N` overrides the ceiling.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::census::{self, Statistic};
use crate::enumerate::{count_colored, count_two_colored_distinct, partitions, ColoredSpec};
use crate::error::Error;
use crate::partition::{BelowOne, Partition};
use crate::qseries::{self, BivariateSeries, TruncatedSeries};
use crate::verify::{self, IdentityReport, Limits, Status, VerifyParams};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CEILING: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mexlab", version, about = "Partition statistics, q-series and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every statistic of one partition.
    Stats(StatsArgs),
    /// A sequence a(0), ..., a(max_n).
    Seq(SeqArgs),
    /// Census tables in the layout of the illustrations.
    Table(TableArgs),
    /// Run registered identity checks.
    Verify(VerifyArgs),
    /// Coefficients of a generating-function builder.
    Gf(GfArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
    /// "n value" lines starting at n = 0.
    Bfile,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    /// Comma-separated parts, e.g. 7,4,4,4,3,1,1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub parts: Vec<i64>,
    /// Chain length / repetition threshold (default: 1 through largest part + 1).
    #[arg(long)]
    pub r: Option<u32>,
    /// Chain length for the chain maex (default: 1 through 3).
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    /// p(n).
    P,
    /// Sum of r-chain mex over all partitions of n.
    SigmaRcMex,
    /// Two-colored partitions into distinct parts.
    D2,
    /// m-regular partitions with parts = j (mod m) in two colors.
    PColored,
    /// Partitions with largest r-repeating part j.
    QCount,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    pub name: SeqName,
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub j: u32,
    #[arg(long)]
    pub max_n: u32,
    /// Compute by enumeration instead of series expansion.
    #[arg(long)]
    pub oracle: bool,
    /// Output format; bfile lines are indexed from n = 0.
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    ThreeWay,
    Refine,
    Franklin,
    ChainMaex,
    Alpha,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    pub kind: TableKind,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub r: Option<u32>,
    /// Show only this j.
    #[arg(long)]
    pub j: Option<u32>,
    /// List the partitions in each cell.
    #[arg(long)]
    pub list_partitions: bool,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Identity id; see --list.
    pub id: Option<String>,
    #[arg(long, value_enum, conflicts_with = "id")]
    pub suite: Option<Suite>,
    /// Print the registered identities.
    #[arg(long)]
    pub list: bool,
    #[arg(long, default_value_t = 40)]
    pub max_n: u32,
    #[arg(long, value_delimiter = ',')]
    pub r: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    pub j: Option<Vec<u32>>,
    #[arg(long, default_value_t = 120)]
    pub order: usize,
    /// Record durations in the report.
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfName {
    Partition,
    EulerProduct,
    DistinctParts,
    SigmaMex,
    SigmaMexOdd,
    SigmaRcMex,
    CorollaryTerm,
    Alpha,
    Multiples,
    LargestRepeating,
    BoundedFrequency,
    Interm1,
    Interm1Derivative,
    Pochhammer,
    PochhammerInv,
    QbinomA0,
}

#[derive(Args, Debug)]
pub struct GfArgs {
    pub name: GfName,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub j: usize,
    /// Pochhammer base exponent c in (q^c; q^d).
    #[arg(long, default_value_t = 1)]
    pub c: usize,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Number of Pochhammer factors (default: infinite).
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
}

/// A failed command: message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceCeiling { .. } => EXIT_CEILING,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Standard output and exit code of a successful parse.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Result<Output, Failure> {
        Ok(Output { text, code: 0 })
    }
}

/// Parses the process arguments, runs, prints, and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match execute(&cli.command, &Limits::from_env()) {
        Ok(out) => {
            print!("{}", out.text);
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(command: &Command, limits: &Limits) -> Result<Output, Failure> {
    match command {
        Command::Stats(a) => stats(a),
        Command::Seq(a) => seq(a, limits),
        Command::Table(a) => table(a, limits),
        Command::Verify(a) => run_verify(a, limits),
        Command::Gf(a) => gf(a, limits),
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn opt(x: Option<u32>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn stats(a: &StatsArgs) -> Result<Output, Failure> {
    let p = Partition::from_parts(&a.parts)?;
    if a.r == Some(0) || a.t == Some(0) {
        return Err(usage("--r and --t must be at least 1"));
    }
    let rs: Vec<u32> = match a.r {
        Some(r) => vec![r],
        None => (1..=p.largest_part() + 1).collect(),
    };
    let ts: Vec<u32> = match a.t {
        Some(t) => vec![t],
        None => (1..=3).collect(),
    };
    let mut rows: Vec<(String, String)> = vec![
        ("partition".into(), p.to_string()),
        ("weight".into(), p.weight().to_string()),
        ("largest part".into(), p.largest_part().to_string()),
        ("smallest part".into(), p.smallest_part().to_string()),
        ("number of parts".into(), p.num_parts().to_string()),
        ("distinct values".into(), p.num_distinct_parts().to_string()),
        ("mex".into(), p.mex().to_string()),
    ];
    for &r in &rs {
        rows.push((format!("{r}-chain mex"), p.chain_mex(r).to_string()));
    }
    rows.push(("maex".into(), opt(p.maex())));
    for &t in &ts {
        rows.push((format!("{t}-chain maex"), opt(p.chain_maex(t))));
        rows.push((
            format!("{t}-chain maex (zero occupied)"),
            opt(p.chain_maex_with(t, BelowOne::Occupied)),
        ));
    }
    rows.push(("conjugate".into(), p.conjugate().to_string()));
    for &r in &rs {
        let x = p.repeating_part_extrema(r);
        rows.push((format!("largest {r}-repeating part"), x.largest_r_repeating.to_string()));
        rows.push((format!("smallest {r}-repeating part"), x.smallest_r_repeating.to_string()));
        rows.push((format!("multiples of {r}"), p.multiples_of(r).to_string()));
        rows.push((format!("parts > {r}-chain mex"), p.parts_greater_than(p.chain_mex(r)).to_string()));
    }
    rows.push(("gap-free".into(), if p.is_gap_free() { "yes" } else { "no" }.into()));
    let text = match a.format {
        Format::Human => {
            let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            let mut s = String::new();
            for (k, v) in &rows {
                let _ = writeln!(s, "{k:<width$}  {v}");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("statistic,value\n");
            for (k, v) in &rows {
                let _ = writeln!(s, "{k},{v}");
            }
            s
        }
        Format::Json => {
            let obj: serde_json::Map<String, Value> = rows.into_iter().map(|(k, v)| (k, Value::String(v))).collect();
            format!("{}\n", Value::Object(obj))
        }
        Format::Bfile => return Err(usage("bfile output applies to sequences only")),
    };
    Output::ok(text)
}

fn render_sequence(values: &[BigInt], format: Format) -> String {
    match format {
        Format::Human => format!("{}\n", join(values, ",")),
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{n},{v}");
            }
            s
        }
        Format::Bfile => {
            let mut s = String::new();
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{n} {v}");
            }
            s
        }
        Format::Json => format!("{}\n", json!(values.iter().map(|v| v.to_string()).collect::<Vec<_>>())),
    }
}

fn seq(a: &SeqArgs, limits: &Limits) -> Result<Output, Failure> {
    let order = a.max_n as usize;
    if a.oracle {
        limits.check_n(a.max_n)?;
    } else {
        limits.check_order(order)?;
    }
    let by_scan = |f: &dyn Fn(u32) -> Result<u64, Error>| -> Result<Vec<BigInt>, Error> {
        (0..=a.max_n).map(|n| f(n).map(BigInt::from)).collect()
    };
    let values: Vec<BigInt> = match (a.name, a.oracle) {
        (SeqName::P, false) => qseries::partition_gf(order).coeffs().to_vec(),
        (SeqName::P, true) => by_scan(&|n| Ok(partitions(n).count() as u64))?,
        (SeqName::SigmaRcMex, false) => qseries::gf_sigma_rc_mex_rhs(a.r as usize, order)?.coeffs().to_vec(),
        (SeqName::SigmaRcMex, true) => by_scan(&|n| census::sigma_chain_mex(n, a.r))?,
        (SeqName::D2, false) => qseries::gf_sigma_mex(order).coeffs().to_vec(),
        (SeqName::D2, true) => by_scan(&|n| Ok(count_two_colored_distinct(n)))?,
        (SeqName::PColored, false) => {
            if a.m < 2 {
                return Err(usage("--m must be at least 2"));
            }
            qseries::gf_corollary_term(a.m as usize - 1, a.j as usize, order)?.coeffs().to_vec()
        }
        (SeqName::PColored, true) => {
            let spec = ColoredSpec::regular_two_colored(a.m, a.j);
            by_scan(&|n| count_colored(n, &spec))?
        }
        (SeqName::QCount, false) => qseries::gf_largest_repeating(a.r as usize, a.j as usize, order)?.coeffs().to_vec(),
        (SeqName::QCount, true) => {
            let stat = Statistic::LargestRepeating(a.r);
            if a.r == 0 {
                return Err(usage("--r must be at least 1"));
            }
            by_scan(&|n| Ok(census::tabulate(n, &[stat])[0].get(&[a.j])))?
        }
    };
    Output::ok(render_sequence(&values, a.format))
}

/// One labeled column of a census table.
struct Column {
    label: String,
    stat: Option<Statistic>,
    counts: Vec<u64>,
}

struct Grid {
    title: String,
    key_names: Vec<&'static str>,
    keys: Vec<Vec<u32>>,
    columns: Vec<Column>,
}

impl Grid {
    fn render(&self, n: u32, listing: bool, format: Format) -> Result<String, Failure> {
        let lists: Vec<Vec<Vec<String>>> = if listing {
            self.columns
                .iter()
                .map(|c| {
                    self.keys
                        .iter()
                        .map(|k| match &c.stat {
                            Some(s) => census::members(n, s, k, usize::MAX).iter().map(|p| p.to_string()).collect(),
                            None => Vec::new(),
                        })
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(match format {
            Format::Human => {
                let mut s = format!("{}\n", self.title);
                let mut header: Vec<String> = self.key_names.iter().map(|k| k.to_string()).collect();
                header.extend(self.columns.iter().map(|c| c.label.clone()));
                let mut body: Vec<Vec<String>> = Vec::new();
                for (i, k) in self.keys.iter().enumerate() {
                    let mut row: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                    row.extend(self.columns.iter().map(|c| c.counts[i].to_string()));
                    body.push(row);
                }
                s.push_str(&aligned(&header, &body));
                if listing {
                    for (i, k) in self.keys.iter().enumerate() {
                        let keys = join(self.key_names.iter().zip(k).map(|(a, b)| format!("{a} = {b}")), ", ");
                        let _ = writeln!(s, "\n{keys}");
                        let labels: Vec<String> = self.columns.iter().map(|c| c.label.clone()).collect();
                        let depth = lists.iter().map(|l| l[i].len()).max().unwrap_or(0);
                        let rows: Vec<Vec<String>> = (0..depth)
                            .map(|d| lists.iter().map(|l| l[i].get(d).cloned().unwrap_or_default()).collect())
                            .collect();
                        s.push_str(&aligned(&labels, &rows));
                    }
                }
                s
            }
            Format::Csv => {
                let mut s = String::from("n");
                for k in &self.key_names {
                    let _ = write!(s, ",{k}");
                }
                for c in &self.columns {
                    let _ = write!(s, ",{}", csv_field(&c.label));
                }
                s.push('\n');
                for (i, k) in self.keys.iter().enumerate() {
                    let _ = write!(s, "{n}");
                    for x in k {
                        let _ = write!(s, ",{x}");
                    }
                    for c in &self.columns {
                        let _ = write!(s, ",{}", c.counts[i]);
                    }
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .keys
                    .iter()
                    .enumerate()
                    .map(|(i, k)| {
                        let mut obj = serde_json::Map::new();
                        for (name, x) in self.key_names.iter().zip(k) {
                            obj.insert(name.to_string(), json!(x));
                        }
                        obj.insert("counts".into(), json!(self.columns.iter().map(|c| c.counts[i]).collect::<Vec<_>>()));
                        if listing {
                            obj.insert("partitions".into(), json!(lists.iter().map(|l| &l[i]).collect::<Vec<_>>()));
                        }
                        Value::Object(obj)
                    })
                    .collect();
                let labels: Vec<&str> = self.columns.iter().map(|c| c.label.as_str()).collect();
                format!("{}\n", json!({"title": self.title, "n": n, "columns": labels, "rows": rows}))
            }
            Format::Bfile => return Err(usage("bfile output applies to sequences only")),
        })
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    let mut s = line(header);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    s.push_str(&format!("{}\n", rule.join("-+-")));
    for row in rows {
        s.push_str(&line(row));
    }
    s
}

fn selected_js(n: u32, only: Option<u32>, columns: &[&census::CountTable]) -> Vec<Vec<u32>> {
    match only {
        Some(j) => vec![vec![j]],
        None => (0..=n)
            .filter(|&j| columns.iter().any(|t| t.get(&[j]) > 0))
            .map(|j| vec![j])
            .collect(),
    }
}

fn column(label: String, t: &census::CountTable, keys: &[Vec<u32>]) -> Column {
    Column {
        label,
        stat: Some(t.statistic),
        counts: keys.iter().map(|k| t.get(k)).collect(),
    }
}

fn table(a: &TableArgs, limits: &Limits) -> Result<Output, Failure> {
    limits.check_n(a.n)?;
    let n = a.n;
    let grid = match a.kind {
        TableKind::ThreeWay => {
            let r = a.r.unwrap_or(2);
            let c = census::three_way_census(n, r)?;
            let keys = selected_js(n, a.j, &[&c.parts_above_chain_mex, &c.multiples, &c.largest_repeating]);
            Grid {
                title: format!("n = {n}, r = {r}"),
                key_names: vec!["j"],
                columns: vec![
                    column(format!("j parts > {}-chain mex", r - 1), &c.parts_above_chain_mex, &keys),
                    column(format!("j multiples of {r}"), &c.multiples, &keys),
                    column(format!("largest {r}-repeating part j"), &c.largest_repeating, &keys),
                ],
                keys,
            }
        }
        TableKind::Refine => {
            let r = a.r.unwrap_or(1);
            let c = census::refine_census(n, r)?;
            let mut keys: Vec<Vec<u32>> = c
                .by_chain_mex
                .cells()
                .chain(c.by_largest_repeating.cells())
                .map(|(k, _)| k.to_vec())
                .filter(|k| a.j.is_none_or(|j| k[0] == j))
                .collect();
            keys.sort();
            keys.dedup();
            Grid {
                title: format!("n = {n}, r = {r}"),
                key_names: vec!["j", "k"],
                columns: vec![
                    column(format!("j parts > {r}-chain mex k"), &c.by_chain_mex, &keys),
                    column(
                        format!("largest {}-repeating part j, k-1 parts > j", r + 1),
                        &c.by_largest_repeating,
                        &keys,
                    ),
                ],
                keys,
            }
        }
        TableKind::Franklin => {
            let r = a.r.unwrap_or(2);
            let c = census::franklin_glaisher_census(n, r)?;
            let keys = selected_js(n, a.j, &[&c.distinct_multiples, &c.distinct_repeating]);
            Grid {
                title: format!(
                    "n = {n}, r = {r}; {r}-regular: {}, all frequencies < {r}: {}",
                    c.regular, c.bounded_frequency
                ),
                key_names: vec!["j"],
                columns: vec![
                    column(format!("j different multiples of {r}"), &c.distinct_multiples, &keys),
                    column(format!("j different parts occurring >= {r} times"), &c.distinct_repeating, &keys),
                ],
                keys,
            }
        }
        TableKind::ChainMaex => {
            let r = a.r.unwrap_or(2);
            let readings: Vec<census::ChainMaexCensus> = verify::CHAIN_MAEX_READINGS
                .iter()
                .map(|&(d, b)| census::chain_maex_census(n, r, d, b))
                .collect::<crate::Result<_>>()?;
            let keys: Vec<Vec<u32>> = match a.j {
                Some(j) => vec![vec![j]],
                None => (1..=n).map(|j| vec![j]).collect(),
            };
            let mut columns = vec![column(
                format!("smallest {r}-repeating part j"),
                &readings[0].smallest_repeating,
                &keys,
            )];
            for c in &readings {
                columns.push(column(
                    format!(
                        "j parts > {}-chain maex [{}]",
                        r - 1,
                        verify::chain_maex_reading_name(c.domain, c.below)
                    ),
                    &c.parts_above_chain_maex,
                    &keys,
                ));
            }
            Grid {
                title: format!("n = {n}, r = {r}"),
                key_names: vec!["j"],
                columns,
                keys,
            }
        }
        TableKind::Alpha => {
            let (alpha, even) = census::alpha_census(n);
            let keys = selected_js(n, a.j, &[&alpha, &even]);
            let series = qseries::gf_alpha_bivariate(n as usize);
            let coeffs = keys
                .iter()
                .map(|k| u64::try_from(series.coeff(n as usize, k[0] as usize)).unwrap_or(u64::MAX))
                .collect();
            Grid {
                title: format!("n = {n}"),
                key_names: vec!["j"],
                columns: vec![
                    column("j parts > mex".into(), &alpha, &keys),
                    column("j even parts".into(), &even, &keys),
                    Column {
                        label: "coefficient of w^j q^n".into(),
                        stat: None,
                        counts: coeffs,
                    },
                ],
                keys,
            }
        }
    };
    Output::ok(grid.render(n, a.list_partitions, a.format)?)
}

fn witness_lines(s: &mut String, w: &verify::Witness, indent: &str) {
    let mut at = format!("n={}", w.n);
    for (name, v) in [("r", w.r), ("j", w.j), ("m", w.m)] {
        if let Some(v) = v {
            let _ = write!(at, " {name}={v}");
        }
    }
    if let Some(step) = w.step {
        let _ = write!(at, " step={step}");
    }
    let _ = writeln!(s, "{indent}first mismatch at {at}: lhs {} != rhs {}", w.lhs, w.rhs);
    for (side, parts) in [("lhs", &w.partitions_lhs), ("rhs", &w.partitions_rhs)] {
        if !parts.is_empty() {
            let shown: Vec<String> = parts.iter().map(|p| if p.is_empty() { "∅".into() } else { join(p, "+") }).collect();
            let _ = writeln!(s, "{indent}  {side}: {}", shown.join(", "));
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn render_reports(reports: &[IdentityReport], single: bool, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => {
            if single {
                format!("{}\n", reports[0].to_json())
            } else {
                format!("{}\n", serde_json::to_string(reports).expect("reports serialize"))
            }
        }
        Format::Human => {
            let mut s = String::new();
            for r in reports {
                let mut line = format!(
                    "{} {} checks={} max_n={} order={}",
                    status_word(r.status),
                    r.identity_id,
                    r.checks,
                    r.params.max_n,
                    r.params.order
                );
                if !r.params.r.is_empty() {
                    let _ = write!(line, " r={}", join(&r.params.r, ","));
                }
                if let Some(ms) = r.duration_ms {
                    let _ = write!(line, " {ms}ms");
                }
                let _ = writeln!(s, "{line}");
                if let Some(w) = &r.witness {
                    witness_lines(&mut s, w, "  ");
                }
                for v in &r.variants {
                    let _ = writeln!(s, "  {} {} checks={}", status_word(v.status), v.name, v.checks);
                    if let Some(w) = &v.witness {
                        witness_lines(&mut s, w, "    ");
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if !single {
                let _ = writeln!(s, "{} identities, {failed} failed", reports.len());
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("identity_id,status,checks,n,r,j,m,lhs,rhs\n");
            for r in reports {
                let w = r.witness.as_ref();
                let o = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    r.identity_id,
                    status_word(r.status).to_lowercase(),
                    r.checks,
                    w.map(|w| w.n.to_string()).unwrap_or_default(),
                    o(w.and_then(|w| w.r)),
                    o(w.and_then(|w| w.j)),
                    o(w.and_then(|w| w.m)),
                    w.map(|w| w.lhs.clone()).unwrap_or_default(),
                    w.map(|w| w.rhs.clone()).unwrap_or_default(),
                );
            }
            s
        }
        Format::Bfile => return Err(usage("bfile output applies to sequences only")),
    })
}

fn run_verify(a: &VerifyArgs, limits: &Limits) -> Result<Output, Failure> {
    if a.list {
        let mut s = String::new();
        let width = verify::registry().iter().map(|e| e.id.len()).max().unwrap_or(0);
        for e in verify::registry() {
            let _ = writeln!(s, "{:<width$}  {}", e.id, e.summary);
        }
        return Output::ok(s);
    }
    let params = VerifyParams {
        max_n: a.max_n,
        r: a.r.clone(),
        j: a.j.clone(),
        order: a.order,
        timings: a.timings,
    };
    let (reports, single) = match (&a.id, a.suite) {
        (Some(id), _) => (vec![verify::verify_with(id, &params, &verify::Standard, limits)?], true),
        (None, Some(Suite::All)) => (verify::run_suite_with(&params, &verify::Standard, limits)?, false),
        (None, None) => return Err(usage("give an identity id, --suite all, or --list")),
    };
    let text = render_reports(&reports, single, a.format)?;
    let code = if reports.iter().all(IdentityReport::passed) { 0 } else { EXIT_FAILURE };
    Ok(Output { text, code })
}

fn render_bivariate(b: &BivariateSeries, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Human => {
            let mut s = String::new();
            for n in 0..=b.order() {
                let terms: Vec<String> = b
                    .row(n)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
                    .map(|(j, c)| match j {
                        0 => c.to_string(),
                        1 => format!("{c}w"),
                        _ => format!("{c}w^{j}"),
                    })
                    .collect();
                let poly = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                let _ = writeln!(s, "q^{n}: {poly}");
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,j,value\n");
            for n in 0..=b.order() {
                for (j, c) in b.row(n).iter().enumerate() {
                    let _ = writeln!(s, "{n},{j},{c}");
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = (0..=b.order())
                .map(|n| b.row(n).iter().map(|c| c.to_string()).collect())
                .collect();
            format!("{}\n", json!(rows))
        }
        Format::Bfile => return Err(usage("bfile output needs a univariate series")),
    })
}

fn gf(a: &GfArgs, limits: &Limits) -> Result<Output, Failure> {
    limits.check_order(a.order)?;
    let order = a.order;
    let positive = |name: &'static str, v: usize| {
        if v == 0 {
            Err(usage(format!("--{name} must be at least 1")))
        } else {
            Ok(())
        }
    };
    let uni: TruncatedSeries = match a.name {
        GfName::Partition => qseries::partition_gf(order),
        GfName::EulerProduct => qseries::euler_product(order),
        GfName::DistinctParts => qseries::distinct_parts_gf(order),
        GfName::SigmaMex => qseries::gf_sigma_mex(order),
        GfName::SigmaMexOdd => qseries::gf_sigma_mex_odd_form(order),
        GfName::SigmaRcMex => qseries::gf_sigma_rc_mex_rhs(a.r, order)?,
        GfName::CorollaryTerm => qseries::gf_corollary_term(a.r, a.m, order)?,
        GfName::LargestRepeating => qseries::gf_largest_repeating(a.r, a.j, order)?,
        GfName::BoundedFrequency => qseries::bounded_frequency_product(a.j, a.r, order)?,
        GfName::Interm1Derivative => qseries::gf_interm1_derivative(a.j, a.r, order)?.1,
        GfName::Pochhammer | GfName::PochhammerInv => {
            positive("c", a.c)?;
            positive("d", a.d)?;
            match (a.name, a.terms) {
                (GfName::Pochhammer, None) => qseries::pochhammer_inf(a.c, a.d, order),
                (GfName::Pochhammer, Some(t)) => qseries::pochhammer_fin(a.c, a.d, t, order),
                (_, None) => qseries::pochhammer_inv_inf(a.c, a.d, order),
                (_, Some(t)) => qseries::pochhammer_fin_inv(a.c, a.d, t, order),
            }
        }
        GfName::QbinomA0 => {
            positive("r", a.r)?;
            qseries::q_binomial_a0_sum(a.r, order)
        }
        GfName::Alpha => return Output::ok(render_bivariate(&qseries::gf_alpha_bivariate(order), a.format)?),
        GfName::Multiples => {
            return Output::ok(render_bivariate(&qseries::gf_multiples_bivariate(a.r, order)?, a.format)?)
        }
        GfName::Interm1 => return Output::ok(render_bivariate(&qseries::gf_interm1(a.j, a.r, order)?, a.format)?),
    };
    Output::ok(render_sequence(uni.coeffs(), a.format))
}
