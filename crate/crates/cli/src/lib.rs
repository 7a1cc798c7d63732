//! Command-line front end for the `chaincode` library.

pub mod golden;

use std::fmt::Write as _;

use chaincode::codewords::MAX_BUDGET;
use chaincode::distance::{field_code_min_distance, torsion_generator};
use chaincode::duality::DualReversibilityReason;
use chaincode::reversibility::is_reversible_by_basis;
use chaincode::{
    classify_all, dual, dual_oracle, enumerate_codes, factor_xn_minus_1, is_reversible,
    is_reversible_oracle, min_distance, min_distance_oracle, verify, CyclicCode, Error, Field,
    Poly, RPoly, DEFAULT_BUDGET,
};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "chaincode",
    version,
    about = "Cyclic codes over GF(q) + u GF(q): factor, enumerate, classify, dual, distance"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// CSV output.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Exit with status 4 on any disagreement.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Largest number of words any enumeration may visit.
    #[arg(long, global = true, env = "CHAINCODE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n - 1 into irreducibles.
    Factor(LengthArgs),
    /// List every cyclic code of length n.
    Enumerate(LengthArgs),
    /// Reversibility, distance and MDS status of every code of length n.
    Classify {
        #[command(flatten)]
        length: LengthArgs,
        /// Cross-check each verdict against codeword enumeration.
        #[arg(long)]
        oracle: bool,
        /// Only list reversible codes.
        #[arg(long)]
        reversible_only: bool,
    },
    /// Annihilator and dual of one code.
    Dual(CodeArgs),
    /// Minimum Hamming distance of one code.
    Distance(CodeArgs),
    /// Recompute a published example table and compare row by row.
    Table {
        /// Example id, 6.1 through 6.7.
        #[arg(long)]
        example: String,
    },
    /// Run every cross-check over all codes of length n.
    Verify(LengthArgs),
}

#[derive(Args, Debug)]
pub struct LengthArgs {
    #[arg(long)]
    pub n: usize,
    /// Field description, e.g. "GF(3)" or "GF(4; x^2+x+1)".
    #[arg(long)]
    pub field: String,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[command(flatten)]
    pub length: LengthArgs,
    /// Generators, e.g. "(x+1)(x^2+1), u(x+1)".
    #[arg(long)]
    pub code: String,
    /// Also run the enumeration oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Ctx {
    format: Format,
    strict: bool,
    budget: u64,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_VALIDATION,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    if cli.budget > MAX_BUDGET {
        return Outcome {
            stdout: String::new(),
            stderr: format!("error: budget {} exceeds the cap {MAX_BUDGET}\n", cli.budget),
            code: EXIT_VALIDATION,
        };
    }
    let ctx = Ctx {
        format,
        strict: cli.strict,
        budget: cli.budget,
    };
    let result = match &cli.command {
        Command::Factor(a) => cmd_factor(&ctx, a),
        Command::Enumerate(a) => cmd_enumerate(&ctx, a),
        Command::Classify {
            length,
            oracle,
            reversible_only,
        } => cmd_classify(&ctx, length, *oracle, *reversible_only),
        Command::Dual(a) => cmd_dual(&ctx, a),
        Command::Distance(a) => cmd_distance(&ctx, a),
        Command::Table { example } => cmd_table(&ctx, example),
        Command::Verify(a) => cmd_verify(&ctx, a),
    };
    match result {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

type CmdResult = chaincode::Result<(String, i32)>;

fn parse_field(text: &str) -> chaincode::Result<Field> {
    text.parse()
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn show_d(d: Option<usize>) -> String {
    d.map_or("inf".into(), |d| d.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cardinality_json(c: &CyclicCode) -> Value {
    let big = c.cardinality();
    match u64::try_from(&big) {
        Ok(v) => json!(v),
        Err(_) => json!(big.to_string()),
    }
}

fn code_json(c: &CyclicCode) -> Value {
    json!({
        "n": c.n(),
        "field": c.field().to_string(),
        "g": c.g().to_string(),
        "p": c.p().to_string(),
        "a": c.a().to_string(),
        "literal": c.literal(),
        "cardinality": cardinality_json(c),
    })
}

fn join_rpolys(gens: &[RPoly]) -> String {
    if gens.is_empty() {
        "0".into()
    } else {
        gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
    }
}

fn factor_text(f: &Poly, e: u32) -> String {
    format!("({f})^{e}")
}

fn cmd_factor(ctx: &Ctx, a: &LengthArgs) -> CmdResult {
    let field = parse_field(&a.field)?;
    let fact = factor_xn_minus_1(a.n, &field)?;
    let out = match ctx.format {
        Format::Text => fact
            .factors()
            .iter()
            .map(|(f, e)| factor_text(f, *e) + "\n")
            .collect(),
        Format::Csv => {
            let mut s = csv_line(&["poly".into(), "mult".into()]);
            for (f, e) in fact.factors() {
                s += &csv_line(&[f.to_string(), e.to_string()]);
            }
            s
        }
        Format::Json => json_text(&json!({
            "n": a.n,
            "field": field.to_string(),
            "factors": fact
                .factors()
                .iter()
                .map(|(f, e)| json!({"poly": f.to_string(), "mult": e}))
                .collect::<Vec<_>>(),
        })),
    };
    Ok((out, EXIT_OK))
}

fn cmd_enumerate(ctx: &Ctx, a: &LengthArgs) -> CmdResult {
    let field = parse_field(&a.field)?;
    let codes = enumerate_codes(a.n, &field)?;
    let out = match ctx.format {
        Format::Text => {
            let mut s = format!("n={} field={} codes={}\n", a.n, field, codes.len());
            for (i, c) in codes.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{i:>4}  k={:<3} log_q|C|={:<3} {}",
                    c.dimension(),
                    c.log_size(),
                    c
                );
            }
            s
        }
        Format::Csv => {
            let mut s = csv_line(&["index", "g", "p", "a", "k", "cardinality"].map(String::from));
            for (i, c) in codes.iter().enumerate() {
                s += &csv_line(&[
                    i.to_string(),
                    c.g().to_string(),
                    c.p().to_string(),
                    c.a().to_string(),
                    c.dimension().to_string(),
                    c.cardinality().to_string(),
                ]);
            }
            s
        }
        Format::Json => json_text(&json!({
            "n": a.n,
            "field": field.to_string(),
            "count": codes.len(),
            "codes": codes.iter().map(code_json).collect::<Vec<_>>(),
        })),
    };
    Ok((out, EXIT_OK))
}

struct ClassifyRow {
    code: CyclicCode,
    reversible: bool,
    branch: &'static str,
    d: Result<Option<usize>, String>,
    mds: bool,
    oracle: Option<Result<bool, String>>,
}

fn cmd_classify(ctx: &Ctx, a: &LengthArgs, oracle: bool, reversible_only: bool) -> CmdResult {
    let field = parse_field(&a.field)?;
    let classified = classify_all(a.n, &field)?;
    let total = classified.len();
    let rows: Vec<ClassifyRow> = classified
        .into_par_iter()
        .filter(|(_, v)| !reversible_only || v.reversible)
        .map(|(code, v)| {
            let dist = min_distance(&code, ctx.budget);
            let (d, mds) = match &dist {
                Ok(r) => (Ok(r.d), r.mds),
                Err(e) => (Err(e.to_string()), false),
            };
            let oracle = oracle.then(|| match is_reversible_oracle(&code, ctx.budget) {
                Ok(b) => Ok(b),
                Err(Error::BudgetExceeded { .. }) => Ok(is_reversible_by_basis(&code)),
                Err(e) => Err(e.to_string()),
            });
            ClassifyRow {
                reversible: v.reversible,
                branch: v.branch.name(),
                d,
                mds,
                oracle,
                code,
            }
        })
        .collect();
    let reversible = rows.iter().filter(|r| r.reversible).count();
    let disagreements: Vec<&ClassifyRow> = rows
        .iter()
        .filter(|r| matches!(r.oracle, Some(Ok(o)) if o != r.reversible))
        .collect();
    let d_text = |r: &ClassifyRow| match &r.d {
        Ok(d) => show_d(*d),
        Err(_) => "?".into(),
    };
    let out = match ctx.format {
        Format::Text => {
            let mut s = format!("n={} field={} codes={}\n", a.n, field, total);
            let _ = writeln!(
                s,
                "{:<48} {:>3} {:>4} {:>4} {:>10}  branch",
                "generators", "k", "d", "MDS", "reversible"
            );
            for r in &rows {
                let _ = write!(
                    s,
                    "{:<48} {:>3} {:>4} {:>4} {:>10}  {}",
                    r.code.to_string(),
                    r.code.dimension(),
                    d_text(r),
                    if r.mds { "*" } else { "" },
                    yes_no(r.reversible),
                    r.branch
                );
                if let Some(o) = &r.oracle {
                    let _ = write!(
                        s,
                        "  oracle={}",
                        match o {
                            Ok(b) => yes_no(*b).to_string(),
                            Err(e) => format!("error({e})"),
                        }
                    );
                }
                s.push('\n');
            }
            let _ = writeln!(s, "reversible: {reversible} of {}", rows.len());
            if oracle {
                let _ = writeln!(s, "oracle disagreements: {}", disagreements.len());
                for r in &disagreements {
                    let _ = writeln!(s, "  DISAGREE {}", r.code);
                }
            }
            s
        }
        Format::Csv => {
            let mut s = csv_line(
                &["generators", "k", "d", "MDS", "reversible", "branch", "oracle"].map(String::from),
            );
            for r in &rows {
                s += &csv_line(&[
                    r.code.to_string(),
                    r.code.dimension().to_string(),
                    d_text(r),
                    yes_no(r.mds).into(),
                    yes_no(r.reversible).into(),
                    r.branch.into(),
                    match &r.oracle {
                        None => String::new(),
                        Some(Ok(b)) => yes_no(*b).into(),
                        Some(Err(e)) => format!("error({e})"),
                    },
                ]);
            }
            s
        }
        Format::Json => json_text(&json!({
            "n": a.n,
            "field": field.to_string(),
            "codes": total,
            "reversible": reversible,
            "rows": rows.iter().map(|r| {
                let mut v = json!({
                    "code": code_json(&r.code),
                    "k": r.code.dimension(),
                    "d": match &r.d { Ok(d) => json!(d), Err(e) => json!({"error": e}) },
                    "mds": r.mds,
                    "reversible": r.reversible,
                    "branch": r.branch,
                });
                if let Some(o) = &r.oracle {
                    v["oracle"] = match o { Ok(b) => json!(b), Err(e) => json!({"error": e}) };
                }
                v
            }).collect::<Vec<_>>(),
            "oracle_disagreements": disagreements.iter().map(|r| r.code.to_string()).collect::<Vec<_>>(),
        })),
    };
    let code = if ctx.strict && !disagreements.is_empty() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok((out, code))
}

fn parse_code(a: &CodeArgs) -> chaincode::Result<CyclicCode> {
    let field = parse_field(&a.length.field)?;
    CyclicCode::parse(a.length.n, &field, &a.code)
}

fn reason_text(r: DualReversibilityReason) -> String {
    match r {
        DualReversibilityReason::CoprimeReversible => "coprime-reversible".into(),
        DualReversibilityReason::TorsionCondition { i, j } => {
            format!("torsion-condition(i={i}, j={j})")
        }
        DualReversibilityReason::Oracle => "oracle".into(),
    }
}

fn cmd_dual(ctx: &Ctx, a: &CodeArgs) -> CmdResult {
    let code = parse_code(a)?;
    let n = code.n();
    let report = dual(&code)?;
    let d = &report.dual;
    let orthogonal = code.codewords().is_orthogonal_to(&d.codewords());
    let product = code.log_size() + d.log_size() == 2 * n;
    let oracle = if a.oracle {
        Some(match dual_oracle(&code, ctx.budget) {
            Ok(set) => Ok(set == d.codewords()),
            Err(e @ Error::BudgetExceeded { .. }) => Err(e.to_string()),
            Err(e) => return Err(e),
        })
    } else {
        None
    };
    let failed = !orthogonal || !product || matches!(oracle, Some(Ok(false)));
    let oracle_text = match &oracle {
        None => None,
        Some(Ok(b)) => Some(if *b { "pass" } else { "FAIL" }.to_string()),
        Some(Err(e)) => Some(format!("skipped ({e})")),
    };
    let out = match ctx.format {
        Format::Text | Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "code: {code}");
            let _ = writeln!(s, "method: {}", report.method.name());
            let _ = writeln!(s, "annihilator: {}", join_rpolys(&report.annihilator));
            let _ = writeln!(s, "dual generators: {}", join_rpolys(&report.dual_generators));
            let _ = writeln!(s, "dual: {d}");
            let _ = writeln!(
                s,
                "dual reversible: {} ({})",
                yes_no(report.dual_reversible.reversible),
                reason_text(report.dual_reversible.reason)
            );
            let _ = writeln!(s, "orthogonality: {}", if orthogonal { "pass" } else { "FAIL" });
            let _ = writeln!(
                s,
                "cardinality: |C| * |C^perp| = q^{} ({})",
                code.log_size() + d.log_size(),
                if product { "pass" } else { "FAIL" }
            );
            if let Some(t) = &oracle_text {
                let _ = writeln!(s, "oracle: {t}");
            }
            s
        }
        Format::Json => json_text(&json!({
            "code": code_json(&code),
            "method": report.method.name(),
            "annihilator": report.annihilator.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "dual_generators": report.dual_generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "dual": code_json(d),
            "dual_reversible": report.dual_reversible.reversible,
            "dual_reversible_reason": reason_text(report.dual_reversible.reason),
            "orthogonal": orthogonal,
            "cardinality_product": product,
            "oracle": oracle_text,
        })),
    };
    Ok((out, if ctx.strict && failed { EXIT_MISMATCH } else { EXIT_OK }))
}

fn cmd_distance(ctx: &Ctx, a: &CodeArgs) -> CmdResult {
    let code = parse_code(a)?;
    let report = min_distance(&code, ctx.budget)?;
    let oracle = if a.oracle {
        let torsion = torsion_generator(&code);
        let torsion_d = field_code_min_distance(&torsion, code.n(), ctx.budget)?;
        Some((min_distance_oracle(&code, ctx.budget)?, torsion, torsion_d))
    } else {
        None
    };
    let failed = matches!(&oracle, Some((brute, _, td)) if *brute != report.d || *td != report.d);
    let out = match ctx.format {
        Format::Text | Format::Csv => {
            let mut s = String::new();
            let _ = writeln!(s, "code: {code}");
            let _ = writeln!(s, "k: {}", report.k);
            let _ = writeln!(s, "d: {}", show_d(report.d));
            let _ = writeln!(s, "mds: {}", yes_no(report.mds));
            let _ = writeln!(s, "method: {}", report.method.name());
            let _ = writeln!(s, "cu generator: {}", report.cu_generator);
            if let Some((brute, torsion, td)) = &oracle {
                let _ = writeln!(s, "brute force d: {}", show_d(*brute));
                let _ = writeln!(s, "torsion generator: {torsion} (d = {})", show_d(*td));
                let _ = writeln!(s, "oracle: {}", if failed { "FAIL" } else { "pass" });
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "code": code_json(&code),
                "d": report.d,
                "k": report.k,
                "mds": report.mds,
                "method": report.method.name(),
                "cu_generator": report.cu_generator.to_string(),
            });
            if let Some((brute, torsion, td)) = &oracle {
                v["oracle"] = json!({
                    "d": brute,
                    "torsion_generator": torsion.to_string(),
                    "torsion_d": td,
                    "agree": !failed,
                });
            }
            json_text(&v)
        }
    };
    Ok((out, if ctx.strict && failed { EXIT_MISMATCH } else { EXIT_OK }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    Mismatch,
    Flagged,
}

impl RowStatus {
    pub fn name(self) -> &'static str {
        match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::Flagged => "FLAGGED",
        }
    }
}

/// One recomputed table row.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub generators: String,
    pub published: (usize, usize, bool, bool),
    /// `(k, d, mds, reversible, canonical literal)`, or the reason it
    /// could not be computed.
    pub computed: Result<(usize, Option<usize>, bool, bool, String), String>,
    pub status: RowStatus,
    pub flags: Vec<String>,
}

pub struct TableReport {
    pub table: &'static golden::GoldenTable,
    pub field: Field,
    pub computed_factorization: String,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// Recomputes one example table.
pub fn compute_table(id: &str, budget: u64) -> chaincode::Result<TableReport> {
    let table = golden::table(id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown example {id:?}; expected 6.1 to 6.7")))?;
    let field = parse_field(table.field)?;
    let fact = factor_xn_minus_1(table.n, &field)?;
    let computed_factorization = fact
        .factors()
        .iter()
        .map(|(f, e)| if *e == 1 { format!("({f})") } else { factor_text(f, *e) })
        .collect::<String>();
    let rows = table
        .rows
        .iter()
        .map(|g| {
            let published = (g.k, g.d, g.mds, true);
            let known = table
                .known_discrepancies
                .iter()
                .find(|(gen, _)| *gen == g.generators)
                .map(|(_, why)| *why);
            let computed = CyclicCode::parse(table.n, &field, g.literal)
                .and_then(|c| {
                    let r = min_distance(&c, budget)?;
                    Ok((r.k, r.d, r.mds, is_reversible(&c).reversible, c.literal()))
                })
                .map_err(|e| e.to_string());
            let mut flags = Vec::new();
            let status = match &computed {
                Err(e) => {
                    flags.push(e.clone());
                    RowStatus::Mismatch
                }
                Ok((k, d, mds, rev, _)) => {
                    if *k != g.k {
                        flags.push(format!("k: table {} computed {k}", g.k));
                    }
                    if *d != Some(g.d) {
                        flags.push(format!("d: table {} computed {}", g.d, show_d(*d)));
                    }
                    if *mds != g.mds {
                        flags.push(format!("MDS: table {} computed {}", yes_no(g.mds), yes_no(*mds)));
                    }
                    if !*rev {
                        flags.push("reversible: table yes computed no".into());
                    }
                    match (flags.is_empty(), known) {
                        (true, _) => RowStatus::Match,
                        (false, Some(why)) => {
                            flags.push(format!("known discrepancy: {why}"));
                            RowStatus::Flagged
                        }
                        (false, None) => RowStatus::Mismatch,
                    }
                }
            };
            TableRow {
                generators: g.generators.to_string(),
                published,
                computed,
                status,
                flags,
            }
        })
        .collect();
    Ok(TableReport {
        table,
        field,
        computed_factorization,
        rows,
    })
}

fn mds_mark(b: bool) -> &'static str {
    if b {
        "*"
    } else {
        "-"
    }
}

fn cmd_table(ctx: &Ctx, id: &str) -> CmdResult {
    let report = compute_table(id, ctx.budget)?;
    let t = report.table;
    let summary = format!(
        "rows={} match={} mismatch={} flagged={}",
        report.rows.len(),
        report.count(RowStatus::Match),
        report.count(RowStatus::Mismatch),
        report.count(RowStatus::Flagged)
    );
    let out = match ctx.format {
        Format::Text => {
            let mut s = format!("example {}: n={} field={}\n", t.id, t.n, report.field);
            let _ = writeln!(s, "x^{}-1 table:    {}", t.n, t.factorization);
            let _ = writeln!(s, "x^{}-1 computed: {}", t.n, report.computed_factorization);
            let _ = writeln!(
                s,
                "{:<9} {:<32} {:<10} {:<10} canonical",
                "status", "generators", "table", "computed"
            );
            for r in &report.rows {
                let (k, d, m, _) = r.published;
                let published = format!("{k} {d} {}", mds_mark(m));
                let (computed, canonical) = match &r.computed {
                    Ok((k, d, m, rev, lit)) => (
                        format!("{k} {} {}{}", show_d(*d), mds_mark(*m), if *rev { "" } else { " R" }),
                        lit.clone(),
                    ),
                    Err(_) => ("error".into(), String::new()),
                };
                let _ = writeln!(
                    s,
                    "{:<9} {:<32} {:<10} {:<10} {}",
                    r.status.name(),
                    r.generators,
                    published,
                    computed,
                    canonical
                );
                for f in &r.flags {
                    let _ = writeln!(s, "          {f}");
                }
            }
            let _ = writeln!(s, "{summary}");
            s
        }
        Format::Csv => {
            let mut s = csv_line(
                &["generators", "k", "d", "MDS", "reversible", "status", "flags"].map(String::from),
            );
            for r in &report.rows {
                let (k, d, m, rev) = match &r.computed {
                    Ok((k, d, m, rev, _)) => (k.to_string(), show_d(*d), yes_no(*m), yes_no(*rev)),
                    Err(_) => (String::new(), String::new(), "", ""),
                };
                s += &csv_line(&[
                    r.generators.clone(),
                    k,
                    d,
                    m.into(),
                    rev.into(),
                    r.status.name().into(),
                    r.flags.join("; "),
                ]);
            }
            s
        }
        Format::Json => json_text(&json!({
            "example": t.id,
            "n": t.n,
            "field": report.field.to_string(),
            "factorization": {"table": t.factorization, "computed": report.computed_factorization},
            "rows": report.rows.iter().map(|r| {
                let (k, d, m, rev) = r.published;
                json!({
                    "generators": r.generators,
                    "table": {"k": k, "d": d, "mds": m, "reversible": rev},
                    "computed": match &r.computed {
                        Ok((k, d, m, rev, lit)) => json!({
                            "k": k, "d": d, "mds": m, "reversible": rev, "canonical": lit,
                        }),
                        Err(e) => json!({"error": e}),
                    },
                    "status": r.status.name(),
                    "flags": r.flags,
                })
            }).collect::<Vec<_>>(),
            "summary": {
                "rows": report.rows.len(),
                "match": report.count(RowStatus::Match),
                "mismatch": report.count(RowStatus::Mismatch),
                "flagged": report.count(RowStatus::Flagged),
            },
        })),
    };
    let code = if ctx.strict && report.count(RowStatus::Mismatch) > 0 {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok((out, code))
}

fn cmd_verify(ctx: &Ctx, a: &LengthArgs) -> CmdResult {
    let field = parse_field(&a.field)?;
    let report = verify(a.n, &field, ctx.budget)?;
    let out = match ctx.format {
        Format::Text => format!("{report}\n"),
        Format::Csv => {
            let mut s = csv_line(&["check", "passed", "total", "skipped"].map(String::from));
            for c in &report.checks {
                s += &csv_line(&[
                    c.name.into(),
                    c.passed.to_string(),
                    c.total.to_string(),
                    c.skipped.to_string(),
                ]);
            }
            s
        }
        Format::Json => json_text(&json!({
            "n": report.n,
            "field": report.field.to_string(),
            "codes": report.codes,
            "budget": report.budget,
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "total": c.total,
                "skipped": c.skipped,
                "failures": c.failures,
            })).collect::<Vec<_>>(),
            "ok": report.ok(),
        })),
    };
    Ok((out, if report.ok() { EXIT_OK } else { EXIT_MISMATCH }))
}
