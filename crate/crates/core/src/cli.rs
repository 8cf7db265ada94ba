//! Command-line front end.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abacus::{from_pair, to_pair, WedgeMonomial};
use crate::avalue::{calibrated_table, minimal_row};
use crate::canonical::{decomposition_matrix, verify_unitriangular, CanonicalEngine};
use crate::combinatorics::{is_split_semisimple, multipartitions, Charge, MultiPartition};
use crate::crystal::{crystal_graph, flotw_predicate, uglov_set};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::wedge::{BarEngine, Straightener, DEFAULT_FUEL};

#[derive(Parser, Debug)]
#[command(name = "fockbasis", version, about = "Canonical bases of higher-level Fock spaces")]
struct Cli {
    /// Wrap the output in a JSON envelope.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse monomials of larger degree.
    #[arg(long, global = true, default_value_t = 40)]
    max_degree: u64,

    /// Straightening rewrite budget.
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    fuel: u64,

    /// Disable memoisation (results are unchanged, only slower).
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Space {
    #[arg(long)]
    e: u32,
    #[arg(long, default_value_t = 1)]
    l: usize,
}

#[derive(Args, Debug, Clone)]
struct Block {
    #[command(flatten)]
    space: Space,
    #[arg(long, allow_hyphen_values = true)]
    charge: Charge,
    #[arg(long, default_value_t = 0)]
    rank: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Latex,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Crystal graph on ranks up to --rank.
    Crystal {
        #[command(flatten)]
        block: Block,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Uglov multipartitions of a rank.
    UglovSet {
        #[command(flatten)]
        block: Block,
    },
    /// FLOTW test of one multipartition, or of a whole rank against the crystal.
    FlotwCheck {
        #[command(flatten)]
        block: Block,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<MultiPartition>,
    },
    /// Calibrated a-values of all multipartitions of a rank.
    Avalue {
        #[command(flatten)]
        block: Block,
        /// Row that gets a-value 0 (default: the least one).
        #[arg(long, allow_hyphen_values = true)]
        calibrate: Option<MultiPartition>,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Straighten a finite wedge u_{k1} ∧ … ∧ u_{kr}.
    Straighten {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        indices: Vec<i64>,
    },
    /// Bar involution of one monomial.
    Bar {
        #[command(flatten)]
        space: Space,
        /// Monomial as `s=<int>; k=<k1,...>`.
        #[arg(long, allow_hyphen_values = true)]
        monomial: Option<WedgeMonomial>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<MultiPartition>,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<Charge>,
    },
    /// Canonical basis element G(λ, s).
    Canonical {
        #[command(flatten)]
        space: Space,
        #[arg(long, allow_hyphen_values = true)]
        lambda: MultiPartition,
        #[arg(long, allow_hyphen_values = true)]
        charge: Charge,
    },
    /// Decomposition matrix at q = 1.
    Decomp {
        #[command(flatten)]
        block: Block,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also report the q-polynomials (JSON only).
        #[arg(long)]
        keep_q: bool,
    },
    /// Split semisimplicity at the root of unity.
    Semisimple {
        #[arg(long)]
        e: u32,
        #[arg(long, allow_hyphen_values = true)]
        charge: Charge,
        #[arg(long, default_value_t = 0)]
        rank: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Crystal { .. } => "crystal",
            Command::UglovSet { .. } => "uglov-set",
            Command::FlotwCheck { .. } => "flotw-check",
            Command::Avalue { .. } => "avalue",
            Command::Straighten { .. } => "straighten",
            Command::Bar { .. } => "bar",
            Command::Canonical { .. } => "canonical",
            Command::Decomp { .. } => "decomp",
            Command::Semisimple { .. } => "semisimple",
        }
    }
}

/// Text plus a JSON value for the envelope.
struct Output {
    text: String,
    value: Value,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn check_space(s: &Space) -> Result<()> {
    if s.e < 2 {
        return Err(Error::InvalidInput(format!("e must be at least 2, got {}", s.e)));
    }
    if s.l < 1 {
        return Err(Error::InvalidInput("l must be at least 1".into()));
    }
    Ok(())
}

fn check_block(b: &Block) -> Result<()> {
    check_space(&b.space)?;
    if b.charge.level() != b.space.l {
        return Err(Error::InvalidInput(format!(
            "charge {} has {} entries but l = {}",
            b.charge,
            b.charge.level(),
            b.space.l
        )));
    }
    Ok(())
}

fn check_lambda(lambda: &MultiPartition, l: usize) -> Result<()> {
    if lambda.level() != l {
        return Err(Error::InvalidInput(format!("{lambda} does not have {l} components")));
    }
    Ok(())
}

fn guard(u: &WedgeMonomial, cap: u64) -> Result<()> {
    if u.degree() > cap {
        return Err(Error::TooLarge(format!(
            "monomial {u} has degree {} above the cap {cap} (raise --max-degree)",
            u.degree()
        )));
    }
    Ok(())
}

fn bar_engine(cli: &Cli, e: u32, l: usize) -> BarEngine {
    let eng = if cli.no_cache { BarEngine::uncached(e, l) } else { BarEngine::new(e, l) };
    eng.with_fuel(cli.fuel)
}

fn wedge_lines(v: &crate::wedge::WedgeVector, e: u32, l: usize) -> String {
    let mut s = String::new();
    for (u, c) in v.iter() {
        let (lam, ch) = to_pair(u, e, l);
        s.push_str(&format!("{c}\t{u}\t{lam}\t{ch}\n"));
    }
    s
}

fn fock_lines(v: &FockVector) -> String {
    let mut s = String::new();
    for (lam, ch, c) in v.iter() {
        s.push_str(&format!("{c}\t{lam}\t{ch}\n"));
    }
    s
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Crystal { block, format } => {
            check_block(block)?;
            let g = crystal_graph(block.space.e, block.space.l, &block.charge, block.rank)?;
            let value = to_value(&g);
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap_or_default()),
                Format::Dot => g.to_dot(),
                other => return Err(Error::InvalidInput(format!("crystal supports dot or json, not {other:?}"))),
            };
            Ok(Output { text, value })
        }
        Command::UglovSet { block } => {
            check_block(block)?;
            let set = uglov_set(block.space.e, block.space.l, &block.charge, block.rank)?;
            let text = set.iter().map(|m| format!("{m}\n")).collect();
            Ok(Output { text, value: to_value(&set) })
        }
        Command::FlotwCheck { block, lambda } => {
            check_block(block)?;
            let (e, l) = (block.space.e, block.space.l);
            if let Some(lam) = lambda {
                check_lambda(lam, l)?;
                let ok = flotw_predicate(lam, e, &block.charge)?;
                return Ok(Output { text: format!("{ok}\n"), value: json!(ok) });
            }
            let crystal = uglov_set(e, l, &block.charge, block.rank)?;
            let mut flotw = BTreeSet::new();
            for lam in multipartitions(l, block.rank) {
                if flotw_predicate(&lam, e, &block.charge)? {
                    flotw.insert(lam);
                }
            }
            let only_crystal: Vec<_> = crystal.difference(&flotw).map(|m| m.to_string()).collect();
            let only_flotw: Vec<_> = flotw.difference(&crystal).map(|m| m.to_string()).collect();
            let agree = only_crystal.is_empty() && only_flotw.is_empty();
            let mut text = format!("agree\t{agree}\ncount\t{}\n", crystal.len());
            for m in &only_crystal {
                text.push_str(&format!("crystal-only\t{m}\n"));
            }
            for m in &only_flotw {
                text.push_str(&format!("flotw-only\t{m}\n"));
            }
            let value = json!({"agree": agree, "count": crystal.len(), "crystal_only": only_crystal, "flotw_only": only_flotw});
            Ok(Output { text, value })
        }
        Command::Avalue { block, calibrate, alpha, format } => {
            check_block(block)?;
            let (e, l) = (block.space.e, block.space.l);
            let rows = multipartitions(l, block.rank);
            let reference = match calibrate {
                Some(r) => {
                    check_lambda(r, l)?;
                    if r.rank() != block.rank {
                        return Err(Error::InvalidInput(format!("{r} does not have rank {}", block.rank)));
                    }
                    r.clone()
                }
                None => minimal_row(&rows, e, &block.charge)?,
            };
            let mut table = calibrated_table(&rows, &reference, e, &block.charge, *alpha)?;
            table.rows.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.label.to_string().cmp(&b.label.to_string())));
            let value = to_value(&table);
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap_or_default()),
                Format::Csv | Format::Text => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let _ = w.write_record(["multipartition", "a"]);
                    for r in &table.rows {
                        let _ = w.write_record([r.label.to_string(), r.value.to_string()]);
                    }
                    String::from_utf8(w.into_inner().unwrap_or_default()).unwrap_or_default()
                }
                other => return Err(Error::InvalidInput(format!("avalue supports csv or json, not {other:?}"))),
            };
            Ok(Output { text, value })
        }
        Command::Straighten { space, indices } => {
            check_space(space)?;
            let mut st = if cli.no_cache { Straightener::uncached(space.e, space.l) } else { Straightener::new(space.e, space.l) };
            st = st.with_fuel(cli.fuel);
            let comb = st.straighten(indices)?;
            let mut text = String::new();
            let mut records = Vec::new();
            for (ks, c) in &comb {
                let k: Vec<String> = ks.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("{c}\t{}\n", k.join(",")));
                records.push(json!({"indices": ks, "coefficient": c}));
            }
            Ok(Output { text, value: Value::Array(records) })
        }
        Command::Bar { space, monomial, lambda, charge } => {
            check_space(space)?;
            let u = match (monomial, lambda, charge) {
                (Some(u), None, None) => u.clone(),
                (None, Some(lam), Some(ch)) => {
                    check_lambda(lam, space.l)?;
                    if ch.level() != space.l {
                        return Err(Error::InvalidInput(format!("charge {ch} does not have {} entries", space.l)));
                    }
                    from_pair(lam, ch, space.e, space.l)?
                }
                _ => return Err(Error::InvalidInput("give either --monomial or both --lambda and --charge".into())),
            };
            guard(&u, cli.max_degree)?;
            let v = bar_engine(cli, space.e, space.l).bar(&u)?;
            Ok(Output { text: wedge_lines(&v, space.e, space.l), value: to_value(&*v) })
        }
        Command::Canonical { space, lambda, charge } => {
            check_space(space)?;
            check_lambda(lambda, space.l)?;
            if charge.level() != space.l {
                return Err(Error::InvalidInput(format!("charge {charge} does not have {} entries", space.l)));
            }
            guard(&from_pair(lambda, charge, space.e, space.l)?, cli.max_degree)?;
            let mut eng = CanonicalEngine::from_bar_engine(bar_engine(cli, space.e, space.l));
            let g = eng.canonical_element(lambda, charge)?;
            Ok(Output { text: fock_lines(&g.expansion), value: to_value(&g) })
        }
        Command::Decomp { block, format, keep_q } => {
            check_block(block)?;
            let (e, l) = (block.space.e, block.space.l);
            for mu in uglov_set(e, l, &block.charge, block.rank)? {
                guard(&from_pair(&mu, &block.charge, e, l)?, cli.max_degree)?;
            }
            let mut eng = CanonicalEngine::from_bar_engine(bar_engine(cli, e, l));
            let m = decomposition_matrix(&mut eng, &block.charge, block.rank, *keep_q)?;
            if let Some(c) = m.cross_charge.first() {
                return Err(Error::Invariant(format!(
                    "G({}) has coefficient {} on {} at charge {}",
                    c.column, c.coefficient, c.label, c.charge
                )));
            }
            let report = verify_unitriangular(&m);
            if !report.ok {
                let v = &report.violations[0];
                return Err(Error::Invariant(format!(
                    "column {} is not unitriangular: {}{}",
                    v.column,
                    v.reason,
                    v.row.as_ref().map(|r| format!(" (row {r})")).unwrap_or_default()
                )));
            }
            let value = to_value(&m);
            let text = match format {
                Format::Csv => m.to_csv(),
                Format::Latex => m.to_latex(),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap_or_default()),
                Format::Text => {
                    let mut s = String::new();
                    for (i, r) in m.rows.iter().enumerate() {
                        let cells: Vec<String> = m.entries[i].iter().map(|&x| if x == 0 { ".".into() } else { x.to_string() }).collect();
                        s.push_str(&format!("{r}\t{}\t{}\n", m.row_a[i], cells.join(" ")));
                    }
                    s
                }
                Format::Dot => return Err(Error::InvalidInput("decomp does not support dot".into())),
            };
            Ok(Output { text, value })
        }
        Command::Semisimple { e, charge, rank } => {
            if *e < 2 {
                return Err(Error::InvalidInput(format!("e must be at least 2, got {e}")));
            }
            let ok = is_split_semisimple(*e, charge, *rank);
            Ok(Output { text: format!("{ok}\n"), value: json!(ok) })
        }
    }
}

/// Runs one invocation and returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let name = cli.command.name();
    if let Command::Decomp { block, .. } = &cli.command {
        if is_split_semisimple(block.space.e, &block.charge, block.rank) {
            let _ = writeln!(err, "warning: the algebra is split semisimple; the matrix is the identity");
        }
    }
    match execute(&cli) {
        Ok(o) => {
            if cli.json {
                let env = json!({"command": name, "ok": true, "result": o.value});
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&env).unwrap_or_default());
            } else {
                let _ = write!(out, "{}", o.text);
            }
            0
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let env = json!({"command": name, "ok": false, "code": code, "error": e.to_string()});
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&env).unwrap_or_default());
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

