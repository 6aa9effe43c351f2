use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use agideal::lab::{
    adjudicate, audit_all, duo_audit, search_counterexample, verify_claim_directed, verify_semilattice, ClaimId,
    ClaimInputs, ClaimReport, Direction, SearchBudget,
};
use agideal::text::{format_magma, magma_to_json, parse_ifs, parse_magma, subset_to_json};
use agideal::{
    enumerate_ag_groupoids_par, is_crisp_ideal, is_if_ideal, CrispSubset, FiniteMagma, Grade, GradeChain, IdealKind,
    Ifs, LawKind, Strictness,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Checks laws, fuzzy ideals and structural claims on finite AG-groupoids.
#[derive(Debug, Parser)]
#[command(name = "agideal", version)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Options {
    /// Index base for elements in input and output.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
    base: u8,
    /// Reject fuzzy sets with mu + gamma > 1 (default).
    #[arg(long, global = true, conflicts_with = "lenient")]
    strict: bool,
    /// Accept fuzzy sets with mu + gamma > 1 and report them.
    #[arg(long, global = true)]
    lenient: bool,
    /// Grade chain {0, 1/K, ..., 1} for quantified claims.
    #[arg(long = "chain", global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    chain_k: u64,
    /// Largest magma order searched or enumerated.
    #[arg(long, global = true, default_value_t = 4)]
    max_order: usize,
    /// Largest number of fuzzy sets or law instances examined per table.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    /// Tuples sampled per law when exhaustive checking exceeds the budget.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: u64,
    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Checks every law on a Cayley table.
    Laws { table: PathBuf },
    /// Lists an intra-regularity witness for each element.
    Intra { table: PathBuf },
    /// Evaluates ideal predicates for a fuzzy set or a crisp subset.
    Ideal {
        table: PathBuf,
        /// Ideal kind; every kind when omitted.
        #[arg(long, value_parser = parse_kind)]
        kind: Option<IdealKind>,
        #[arg(long, conflicts_with = "subset", required_unless_present = "subset")]
        ifs: Option<PathBuf>,
        /// Comma-separated elements.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Verifies one claim on a table.
    Claim {
        #[arg(value_parser = parse_claim)]
        claim: ClaimId,
        table: PathBuf,
        /// Fuzzy set inputs; the grade chain is enumerated when none are given.
        #[arg(long)]
        ifs: Vec<PathBuf>,
        /// Comma-separated crisp subsets.
        #[arg(long)]
        subset: Vec<String>,
        #[arg(long, value_parser = parse_grade)]
        alpha: Option<Grade>,
        #[arg(long)]
        converse: bool,
    },
    /// Verifies every claim on a table.
    Audit { table: PathBuf },
    /// Searches the AG-groupoid census for a counterexample to a claim.
    Search {
        #[arg(value_parser = parse_claim)]
        claim: ClaimId,
        #[arg(long)]
        converse: bool,
        /// Restrict the census to tables with a left identity.
        #[arg(long)]
        left_identity: bool,
    },
    /// Lists every AG-groupoid of the given order.
    Enumerate {
        order: usize,
        #[arg(long)]
        left_identity: bool,
        #[arg(long, conflicts_with = "not_intra_regular")]
        intra_regular: bool,
        #[arg(long)]
        not_intra_regular: bool,
    },
    /// Checks that the fuzzy two-sided ideals form a semilattice.
    Semilattice { table: PathBuf },
    /// Compares the crisp and fuzzy duo properties.
    Duo { table: PathBuf },
    /// Rechecks the facts asserted about the built-in example tables.
    Adjudicate,
}

fn parse_claim(s: &str) -> Result<ClaimId, String> {
    s.parse().map_err(|e: agideal::Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<IdealKind, String> {
    s.replace('-', "_").parse().map_err(|e: agideal::Error| e.to_string())
}

fn parse_grade(s: &str) -> Result<Grade, String> {
    s.parse().map_err(|e: agideal::Error| e.to_string())
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    text: String,
    result: Value,
    refuted: bool,
}

impl Output {
    fn fact(text: String, result: Value) -> Self {
        Output {
            text,
            result,
            refuted: false,
        }
    }
}

struct Context<'a> {
    opts: &'a Options,
    base: usize,
    strictness: Strictness,
}

impl Context<'_> {
    fn budget(&self, require_left_identity: bool) -> SearchBudget {
        SearchBudget {
            max_order: self.opts.max_order,
            chain_k: self.opts.chain_k,
            max_instances: self.opts.budget,
            samples: self.opts.samples,
            seed: self.opts.seed,
            require_left_identity,
        }
    }

    fn chain(&self) -> Result<GradeChain, Failure> {
        Ok(GradeChain::new(self.opts.chain_k)?)
    }

    fn magma(&self, path: &Path) -> Result<FiniteMagma, Failure> {
        let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        parse_magma(&text, self.base).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }

    fn ifs(&self, path: &Path) -> Result<Ifs, Failure> {
        let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        parse_ifs(&text, self.base, self.strictness).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }

    fn subset(&self, n: usize, list: &str) -> Result<CrispSubset, Failure> {
        let mut elements = Vec::new();
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok
                .parse()
                .map_err(|_| Failure(format!("invalid element {tok:?} in subset")))?;
            let x = v
                .checked_sub(self.base)
                .filter(|&x| x < n)
                .ok_or_else(|| Failure(format!("element {v} outside the carrier")))?;
            elements.push(x);
        }
        Ok(CrispSubset::from_elements(n, elements)?)
    }

    fn el(&self, x: usize) -> usize {
        x + self.base
    }

    fn tuple(&self, xs: &[usize]) -> String {
        xs.iter()
            .map(|&x| self.el(x).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Laws { .. } => "laws",
            Command::Intra { .. } => "intra",
            Command::Ideal { .. } => "ideal",
            Command::Claim { .. } => "claim",
            Command::Audit { .. } => "audit",
            Command::Search { .. } => "search",
            Command::Enumerate { .. } => "enumerate",
            Command::Semilattice { .. } => "semilattice",
            Command::Duo { .. } => "duo",
            Command::Adjudicate => "adjudicate",
        }
    }

    fn paths(&self) -> Vec<&Path> {
        match self {
            Command::Laws { table }
            | Command::Intra { table }
            | Command::Audit { table }
            | Command::Semilattice { table }
            | Command::Duo { table } => vec![table],
            Command::Ideal { table, ifs, .. } => std::iter::once(table.as_path()).chain(ifs.as_deref()).collect(),
            Command::Claim { table, ifs, .. } => std::iter::once(table.as_path())
                .chain(ifs.iter().map(PathBuf::as_path))
                .collect(),
            Command::Search { .. } | Command::Enumerate { .. } | Command::Adjudicate => Vec::new(),
        }
    }
}

fn laws(ctx: &Context, table: &Path) -> Result<Output, Failure> {
    let m = ctx.magma(table)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for law in LawKind::ALL {
        let r = m.check_law(law);
        let status = match (&r.witness, r.holds) {
            (Some(w), true) => format!("holds, witness {}", ctx.tuple(w)),
            (None, true) => "holds".into(),
            (Some(w), false) => format!("fails at ({})", ctx.tuple(w)),
            (None, false) => "fails".into(),
        };
        let _ = writeln!(text, "{:<18} {:<28} {status}", law.name(), law.equation());
        rows.push(json!({
            "law": law.name(),
            "equation": law.equation(),
            "holds": r.holds,
            "witness": r.witness.map(|w| w.iter().map(|&x| ctx.el(x)).collect::<Vec<_>>()),
        }));
    }
    Ok(Output::fact(
        text,
        json!({ "magma": magma_to_json(&m, ctx.base), "laws": rows }),
    ))
}

fn intra(ctx: &Context, table: &Path) -> Result<Output, Failure> {
    let m = ctx.magma(table)?;
    let ir = m.intra_regularity();
    let mut text = String::new();
    let mut rows = Vec::new();
    for (a, w) in ir.witnesses.iter().enumerate() {
        match w {
            Some((x, y)) => {
                let _ = writeln!(text, "element {}: (x, y) = ({}, {})", ctx.el(a), ctx.el(*x), ctx.el(*y));
            }
            None => {
                let _ = writeln!(
                    text,
                    "element {}: no witness among {} pairs",
                    ctx.el(a),
                    m.order() * m.order()
                );
            }
        }
        rows.push(json!({
            "element": ctx.el(a),
            "witness": w.map(|(x, y)| json!({ "x": ctx.el(x), "y": ctx.el(y) })),
        }));
    }
    let _ = writeln!(text, "intra-regular: {}", ir.holds());
    Ok(Output::fact(
        text,
        json!({ "magma": magma_to_json(&m, ctx.base), "intra_regular": ir.holds(), "elements": rows }),
    ))
}

fn ideal(
    ctx: &Context,
    table: &Path,
    kind: Option<IdealKind>,
    ifs: Option<&Path>,
    subset: Option<&str>,
) -> Result<Output, Failure> {
    let m = ctx.magma(table)?;
    let kinds: Vec<IdealKind> = kind.map_or(IdealKind::ALL.to_vec(), |k| vec![k]);
    let mut text = String::new();
    let mut rows = Vec::new();
    if let Some(path) = ifs {
        let a = ctx.ifs(path)?;
        for k in kinds {
            let v = is_if_ideal(&m, &a, k)?;
            let status = match &v.witness {
                None => "holds".to_string(),
                Some(w) => format!(
                    "fails: {} at ({}) on {}",
                    w.condition.describe(),
                    ctx.tuple(&w.elements),
                    w.component
                ),
            };
            let _ = writeln!(text, "{:<15} {status}", k.name());
            rows.push(json!({
                "kind": k.name(),
                "holds": v.holds,
                "witness": v.witness.map(|w| json!({
                    "condition": w.condition.describe(),
                    "elements": w.elements.iter().map(|&x| ctx.el(x)).collect::<Vec<_>>(),
                    "component": w.component,
                })),
            }));
        }
        let bad: Vec<usize> = a.violations().into_iter().map(|x| ctx.el(x)).collect();
        if !bad.is_empty() {
            let _ = writeln!(text, "note: mu + gamma > 1 at {bad:?}");
        }
        Ok(Output::fact(
            text,
            json!({
                "magma": magma_to_json(&m, ctx.base),
                "ifs": agideal::text::ifs_to_json(&a, ctx.base),
                "constraint_violations": bad,
                "verdicts": rows,
            }),
        ))
    } else {
        let x = ctx.subset(m.order(), subset.unwrap_or_default())?;
        for k in kinds {
            let v = is_crisp_ideal(&m, &x, k)?;
            let status = match (v.condition, v.witness) {
                (Some(c), Some(w)) => format!("fails: {c}, {} lies outside", ctx.el(w)),
                _ => "holds".into(),
            };
            let _ = writeln!(text, "{:<15} {status}", k.name());
            rows.push(json!({
                "kind": k.name(),
                "holds": v.holds,
                "condition": v.condition,
                "witness": v.witness.map(|w| ctx.el(w)),
            }));
        }
        Ok(Output::fact(
            text,
            json!({
                "magma": magma_to_json(&m, ctx.base),
                "subset": subset_to_json(&x, ctx.base),
                "verdicts": rows,
            }),
        ))
    }
}

fn report_output(ctx: &Context, r: ClaimReport) -> Output {
    Output {
        text: r.render_text(ctx.base),
        result: r.to_json(ctx.base),
        refuted: r.is_refuted(),
    }
}

fn run(ctx: &Context, command: &Command) -> Result<Output, Failure> {
    let base = ctx.base;
    match command {
        Command::Laws { table } => laws(ctx, table),
        Command::Intra { table } => intra(ctx, table),
        Command::Ideal {
            table,
            kind,
            ifs,
            subset,
        } => ideal(ctx, table, *kind, ifs.as_deref(), subset.as_deref()),
        Command::Claim {
            claim,
            table,
            ifs,
            subset,
            alpha,
            converse,
        } => {
            let m = ctx.magma(table)?;
            let inputs = ClaimInputs {
                sets: ifs.iter().map(|p| ctx.ifs(p)).collect::<Result<_, _>>()?,
                subsets: subset
                    .iter()
                    .map(|s| ctx.subset(m.order(), s))
                    .collect::<Result<_, _>>()?,
                alpha: *alpha,
            };
            let chain = if inputs.sets.is_empty() {
                Some(ctx.chain()?)
            } else {
                None
            };
            let direction = if *converse {
                Direction::Converse
            } else {
                Direction::Forward
            };
            let r = verify_claim_directed(*claim, direction, &m, &inputs, chain, &ctx.budget(false))?;
            Ok(report_output(ctx, r))
        }
        Command::Audit { table } => {
            let m = ctx.magma(table)?;
            let out = audit_all(&m, ctx.chain()?, &ctx.budget(false))?;
            let mut text = String::new();
            for r in &out.reports {
                text.push_str(&r.render_text(base));
                text.push('\n');
            }
            let refuted: Vec<&str> = out
                .reports
                .iter()
                .filter(|r| r.is_refuted())
                .map(|r| r.claim.code())
                .collect();
            let _ = writeln!(
                text,
                "{} claims checked, refuted: {}",
                out.reports.len(),
                list_or_none(&refuted)
            );
            if let Some(t) = &out.truncated {
                let skipped: Vec<&str> = t.skipped.iter().map(|c| c.code()).collect();
                let _ = writeln!(text, "skipped {}: {}", skipped.join(", "), t.reason);
            }
            Ok(Output {
                text,
                result: out.to_json(base),
                refuted: out.any_refuted(),
            })
        }
        Command::Search {
            claim,
            converse,
            left_identity,
        } => {
            let direction = if *converse {
                Direction::Converse
            } else {
                Direction::Forward
            };
            let s = search_counterexample(*claim, direction, &ctx.budget(*left_identity))?;
            let mut text = format!(
                "{} ({}): {} tables examined, orders completed {:?}\n",
                claim.code(),
                if *converse { "converse" } else { "forward" },
                s.magmas_examined,
                s.orders_completed
            );
            match &s.found {
                Some(r) => {
                    text.push_str("counterexample found\n");
                    text.push_str(&r.render_text(base));
                }
                None => text.push_str("no counterexample within the budget\n"),
            }
            if let Some(t) = &s.truncated {
                let _ = writeln!(text, "stopped early: {t}");
            }
            Ok(Output {
                text,
                result: s.to_json(base),
                refuted: s.found.is_some(),
            })
        }
        Command::Enumerate {
            order,
            left_identity,
            intra_regular,
            not_intra_regular,
        } => {
            let all = enumerate_ag_groupoids_par(*order, *left_identity, ctx.opts.max_order)?;
            let tables: Vec<FiniteMagma> = all
                .into_iter()
                .filter(|m| (!intra_regular && !not_intra_regular) || m.is_intra_regular() == *intra_regular)
                .collect();
            let mut text = format!("order {order}: {} AG-groupoids\n", tables.len());
            for m in &tables {
                text.push('\n');
                text.push_str(&format_magma(m, base));
            }
            Ok(Output::fact(
                text,
                json!({
                    "order": order,
                    "count": tables.len(),
                    "tables": tables.iter().map(|m| magma_to_json(m, base)).collect::<Vec<_>>(),
                }),
            ))
        }
        Command::Semilattice { table } => {
            let m = ctx.magma(table)?;
            Ok(report_output(
                ctx,
                verify_semilattice(&m, ctx.chain()?, &ctx.budget(false))?,
            ))
        }
        Command::Duo { table } => {
            let m = ctx.magma(table)?;
            Ok(report_output(ctx, duo_audit(&m, ctx.chain()?, &ctx.budget(false))?))
        }
        Command::Adjudicate => {
            let adj = adjudicate(base, &ctx.budget(false))?;
            Ok(Output {
                text: adj.render_text(),
                result: adj.to_json(),
                refuted: adj.any_refuted(),
            })
        }
    }
}

fn list_or_none(xs: &[&str]) -> String {
    if xs.is_empty() {
        "none".into()
    } else {
        xs.join(", ")
    }
}

fn config_echo(ctx: &Context, command: &Command) -> Value {
    let o = ctx.opts;
    json!({
        "subcommand": command.name(),
        "inputs": command.paths().iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
        "index_base": ctx.base,
        "strictness": match ctx.strictness {
            Strictness::Strict => "strict",
            Strictness::Lenient => "lenient",
        },
        "chain_k": o.chain_k,
        "max_order": o.max_order,
        "budget": o.budget,
        "samples": o.samples,
        "seed": o.seed,
    })
}

fn emit(path: Option<&Path>, body: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context {
        opts: &cli.opts,
        base: cli.opts.base as usize,
        strictness: if cli.opts.lenient {
            Strictness::Lenient
        } else {
            Strictness::Strict
        },
    };
    if let Some(missing) = cli.command.paths().into_iter().find(|p| !p.exists()) {
        eprintln!("error: {} does not exist", missing.display());
        return ExitCode::from(2);
    }
    let out = match run(&ctx, &cli.command) {
        Ok(out) => out,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.opts.format {
        Format::Text => out.text,
        Format::Structured => {
            let doc = json!({
                "tool": "agideal",
                "version": env!("CARGO_PKG_VERSION"),
                "index_base": ctx.base,
                "config": config_echo(&ctx, &cli.command),
                "any_refuted": out.refuted,
                "result": out.result,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    };
    if let Err(Failure(msg)) = emit(cli.opts.out.as_deref(), &body) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(u8::from(out.refuted))
}
