//! The `macq` command line: argument parsing, job configuration, dispatch and
//! output formatting. Exit codes: 0 success, 1 verification failure or
//! computation error, 2 usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::json::{matrix_from_json, matrix_to_json};
use crate::algebra::rational::parse_rational;
use crate::algebra::{CycloScalar, RatMatrix, Subst};
use crate::combinat::{total_order, EPartition, MShape, Order, Sign, SymbolType, TieBreak};
use crate::error::Error;
use crate::macdonald::{
    assemble_basis, build_pq, check_conjecture_a, matrix_b, matrix_h, verify_adjoint, verify_commutation,
    verify_f3_closed_form, verify_family_action, verify_order_independence, verify_shift_stability, verify_theorem36,
    MacdonaldBasis,
};
use crate::report::Report;
use crate::symfun::{verify_duality, verify_kernel, Basis, SymFunc};

/// Directory for cached P/Q transition matrices.
pub const CACHE_ENV: &str = "MACQ_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "macq", version, about = "Exact Macdonald functions and operators for S_n x (Z/eZ)^n")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Order of the cyclic group.
    #[arg(long, global = true, default_value_t = 2)]
    pub e: usize,
    /// Degree.
    #[arg(long, global = true, default_value_t = 2)]
    pub n: u32,
    /// Row lengths m_0,...,m_{e-1}, e.g. 3,2.
    #[arg(long, global = true)]
    pub shape: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// For e = 2 without --shape, cap the default shape (n+1, n) at (3, 2).
    #[arg(long = "paper-shapes", global = true)]
    pub capped_shapes: bool,
    /// Order inside a family: lex-desc or lex-asc.
    #[arg(long, global = true, default_value = "lex-desc")]
    pub tie_break: String,
    /// Substitute q in printed values: keep, t, or a rational number.
    #[arg(long, global = true, default_value = "keep")]
    pub q: String,
    /// Substitute t in printed values: keep or a rational number.
    #[arg(long, global = true, default_value = "keep")]
    pub t: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
    Both,
}

impl SignArg {
    fn signs(self) -> Vec<Sign> {
        match self {
            SignArg::Plus => vec![Sign::Plus],
            SignArg::Minus => vec![Sign::Minus],
            SignArg::Both => vec![Sign::Plus, Sign::Minus],
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Duality,
    Kernel,
    Adjoint,
    FamilyAction,
    #[value(name = "conjectureA")]
    ConjectureA,
    Theorem36,
    Shift,
    Commutation,
    OrderIndependence,
    All,
}

impl Suite {
    const ALL: [Suite; 9] = [
        Suite::Duality,
        Suite::Kernel,
        Suite::Adjoint,
        Suite::FamilyAction,
        Suite::ConjectureA,
        Suite::Theorem36,
        Suite::Shift,
        Suite::Commutation,
        Suite::OrderIndependence,
    ];

    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List families, special symbols, a-values and the total order.
    Families {
        /// Symbol type (r, s).
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Print P± (and Q± with --dual) of one label in the s- and m-bases.
    Pfun {
        #[arg(long)]
        label: String,
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Print the matrix of D^r± (or H) on the m-basis.
    Opmat {
        /// Operator degree, 1 ≤ r ≤ min m_k.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// F<k> (k-th family of the order), a member label, or all member labels in the wanted row order.
        #[arg(long)]
        family: Option<String>,
        #[arg(long = "H")]
        h: bool,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest degree checked (default: --n).
        #[arg(long)]
        nmax: Option<u32>,
        /// Largest operator degree checked.
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
}

/// A validated job: everything a command needs besides its own arguments.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub e: usize,
    pub n: u32,
    pub shape: Option<MShape>,
    pub capped_shapes: bool,
    pub stype: SymbolType,
    pub tie: TieBreak,
    pub format: Format,
    pub jobs: Option<usize>,
    pub q: Subst,
    pub t: Subst,
    pub q_text: String,
    pub t_text: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Shape(_) | Error::Range(_) | Error::Unsupported(_) | Error::Pole(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Compute(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

fn parse_subst(s: &str, var: &str) -> CliResult<Subst> {
    match s.trim() {
        "keep" => Ok(Subst::Keep),
        x if x == var => Ok(Subst::Keep),
        "t" if var == "q" => Ok(Subst::ToT),
        x => match parse_rational(x) {
            Ok(r) => Ok(Subst::Value(CycloScalar::from_rational(r))),
            Err(_) => usage(format!("--{var} takes keep, t (for q only) or a rational number, got {x:?}")),
        },
    }
}

impl JobConfig {
    pub fn new(g: &GlobalArgs, r: u32, s: u32) -> CliResult<Self> {
        if g.e == 0 {
            return usage("--e must be at least 1");
        }
        let shape = match &g.shape {
            Some(text) => {
                let m = MShape::parse(text)?;
                if m.e() != g.e {
                    return usage(format!("--shape {text} has {} rows but --e is {}", m.e(), g.e));
                }
                Some(m)
            }
            None => None,
        };
        if g.jobs == Some(0) {
            return usage("--jobs must be positive");
        }
        Ok(JobConfig {
            e: g.e,
            n: g.n,
            shape,
            capped_shapes: g.capped_shapes,
            stype: SymbolType::new(r, s)?,
            tie: TieBreak::parse(&g.tie_break)?,
            format: g.format,
            jobs: g.jobs,
            q: parse_subst(&g.q, "q")?,
            t: parse_subst(&g.t, "t")?,
            q_text: g.q.clone(),
            t_text: g.t.clone(),
        })
    }

    /// The shape used for degree n: --shape, else the default, capped at (3,2) under --paper-shapes.
    pub fn shape_for(&self, n: u32) -> MShape {
        if let Some(s) = &self.shape {
            return s.clone();
        }
        let d = MShape::default_for(n, self.e);
        if self.capped_shapes && self.e == 2 {
            let m = d.m();
            return MShape::new(vec![m[0].min(3), m[1].min(2)]).expect("rows stay positive");
        }
        d
    }

    pub fn order_for(&self, n: u32) -> CliResult<Order> {
        Ok(total_order(n, &self.shape_for(n), self.stype, self.tie)?)
    }

    fn substitutes(&self) -> bool {
        self.q != Subst::Keep || self.t != Subst::Keep
    }

    fn subst_matrix(&self, m: &RatMatrix) -> CliResult<RatMatrix> {
        if !self.substitutes() {
            return Ok(m.clone());
        }
        Ok(m.substitute(&self.q, &self.t)?)
    }

    fn subst_fn(&self, f: &SymFunc) -> CliResult<SymFunc> {
        if !self.substitutes() {
            return Ok(f.clone());
        }
        Ok(f.map_coeffs(|c| c.substitute(&self.q, &self.t))?)
    }

    fn header(&self, n: u32) -> Value {
        json!({
            "e": self.e,
            "n": n,
            "shape": self.shape_for(n).m(),
            "stype": [self.stype.r, self.stype.s],
            "tie_break": self.tie.name(),
        })
    }
}

/// Printed output and whether the command succeeded.
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.output.as_bytes());
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "macq: {msg}");
            2
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(err, "macq: {e}");
            1
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let (r, s) = match &cli.command {
        Command::Families { r, s } | Command::Pfun { r, s, .. } => (*r, *s),
        _ => (1, 0),
    };
    let cfg = JobConfig::new(&cli.global, r, s)?;
    let body = || -> CliResult<Outcome> {
        match &cli.command {
            Command::Families { .. } => cmd_families(&cfg),
            Command::Pfun { label, sign, dual, .. } => cmd_pfun(&cfg, label, *sign, *dual),
            Command::Opmat { r, family, h, sign } => cmd_opmat(&cfg, *r, family.as_deref(), *h, *sign),
            Command::Verify { suite, nmax, r } => cmd_verify(&cfg, *suite, nmax.unwrap_or(cfg.n), *r),
        }
    };
    match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?
            .install(body),
        None => body(),
    }
}

fn json_out(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn csv_out(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 records")
}

fn family_label(f: usize) -> String {
    format!("F{}", f + 1)
}

pub fn cmd_families(cfg: &JobConfig) -> CliResult<Outcome> {
    let order = cfg.order_for(cfg.n)?;
    let fams = order.families();
    let output = match cfg.format {
        Format::Json => {
            let list: Vec<Value> = fams
                .iter()
                .enumerate()
                .map(|(f, fam)| {
                    json!({
                        "name": family_label(f),
                        "a_value": fam.a_value(),
                        "special": fam.special().map(|s| s.to_epartition().to_text()),
                        "members": fam.members().iter().map(|m| json!({
                            "label": m.to_epartition().to_text(),
                            "symbol": m.to_text(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut v = cfg.header(cfg.n);
            v["families"] = json!(list);
            json_out(&v)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (f, fam) in fams.iter().enumerate() {
                for m in fam.members() {
                    rows.push(vec![
                        family_label(f),
                        fam.a_value().to_string(),
                        m.to_epartition().to_text(),
                        m.to_text(),
                        m.is_special().to_string(),
                    ]);
                }
            }
            csv_out(&["family", "a_value", "label", "symbol", "special"], &rows)
        }
        Format::Text => {
            let mut s = format!(
                "e={} n={} shape={} type=({},{}) tie-break={}: {} families, {} symbols\n",
                cfg.e,
                cfg.n,
                order.shape,
                cfg.stype.r,
                cfg.stype.s,
                cfg.tie.name(),
                fams.len(),
                order.len()
            );
            for (f, fam) in fams.iter().enumerate() {
                s += &format!("{} a={} size={}\n", family_label(f), fam.a_value(), fam.len());
                let width = fam.members().iter().map(|m| m.to_epartition().to_text().len()).max().unwrap_or(0);
                for m in fam.members() {
                    let mark = if m.is_special() { "  special" } else { "" };
                    s += &format!("  {:<width$}  {}{mark}\n", m.to_epartition().to_text(), m.to_text());
                }
            }
            s
        }
    };
    Ok(Outcome { output, pass: true })
}

fn cache_path(order: &Order, tie: TieBreak) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let shape: Vec<String> = order.shape.m().iter().map(|m| m.to_string()).collect();
    Some(PathBuf::from(dir).join(format!(
        "pq-e{}-n{}-m{}-r{}s{}-{}.json",
        order.shape.e(),
        order.n,
        shape.join("_"),
        order.stype.r,
        order.stype.s,
        tie.name()
    )))
}

fn load_cached(path: &PathBuf, order: &Order) -> Option<MacdonaldBasis> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).ok()?).ok()?;
    let labels: Vec<String> = order.labels().iter().map(|a| a.to_text()).collect();
    if v["labels"] != json!(labels) {
        return None;
    }
    let xplus = matrix_from_json(&v["xplus"]).ok()?;
    let xminus = matrix_from_json(&v["xminus"]).ok()?;
    assemble_basis(order, xplus, xminus).ok()
}

/// build_pq, read from and written to $MACQ_CACHE_DIR when it is set. A cached
/// file is used only if its labels match the order row for row.
pub fn basis_cached(order: &Order, tie: TieBreak) -> crate::Result<MacdonaldBasis> {
    let Some(path) = cache_path(order, tie) else {
        return build_pq(order);
    };
    if let Some(b) = load_cached(&path, order) {
        return Ok(b);
    }
    let b = build_pq(order)?;
    let labels: Vec<String> = order.labels().iter().map(|a| a.to_text()).collect();
    let v = json!({ "labels": labels, "xplus": matrix_to_json(&b.xplus), "xminus": matrix_to_json(&b.xminus) });
    let tmp = path.with_extension("tmp");
    let written = path
        .parent()
        .map_or(Ok(()), std::fs::create_dir_all)
        .and_then(|_| std::fs::write(&tmp, v.to_string()))
        .and_then(|_| std::fs::rename(&tmp, &path));
    if let Err(e) = written {
        eprintln!("macq: cannot write cache {}: {e}", path.display());
    }
    Ok(b)
}

fn parse_label(order: &Order, text: &str) -> CliResult<usize> {
    let a = EPartition::parse(text)?;
    match order.index_of(&a) {
        Some(i) => Ok(i),
        None => usage(format!("{text} is not a label of degree {} for shape {}", order.n, order.shape)),
    }
}

pub fn cmd_pfun(cfg: &JobConfig, label: &str, sign: SignArg, dual: bool) -> CliResult<Outcome> {
    let order = cfg.order_for(cfg.n)?;
    let i = parse_label(&order, label)?;
    let basis = basis_cached(&order, cfg.tie)?;
    let mut funcs: Vec<(String, &RatMatrix)> = Vec::new();
    for sg in sign.signs() {
        let (p, q) = match sg {
            Sign::Plus => (&basis.xplus, &basis.qplus),
            Sign::Minus => (&basis.xminus, &basis.qminus),
        };
        funcs.push((format!("P{}", sg.symbol()), p));
        if dual {
            funcs.push((format!("Q{}", sg.symbol()), q));
        }
    }
    let name = order.labels()[i].to_text();
    let mut rendered = Vec::new();
    for (fname, x) in &funcs {
        let s = cfg.subst_fn(&basis.function(x, i))?;
        let mrow = basis.in_monomial_basis(x);
        let m = SymFunc::from_vector(Basis::Monomial, order.shape.e(), order.n, order.labels(), mrow.row(i));
        let m = cfg.subst_fn(&m)?;
        rendered.push((fname.clone(), s, m));
    }
    let output = match cfg.format {
        Format::Json => {
            let mut v = cfg.header(cfg.n);
            v["label"] = json!(name);
            v["q"] = json!(cfg.q_text);
            v["t"] = json!(cfg.t_text);
            v["functions"] = json!(rendered
                .iter()
                .map(|(f, s, m)| json!({ "name": f, "schur": s.to_json(), "monomial": m.to_json() }))
                .collect::<Vec<_>>());
            json_out(&v)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (f, s, m) in &rendered {
                for (basis_name, g) in [("s", s), ("m", m)] {
                    for (a, c) in g.terms() {
                        rows.push(vec![f.clone(), basis_name.into(), a.to_text(), c.to_text()]);
                    }
                }
            }
            csv_out(&["function", "basis", "label", "coefficient"], &rows)
        }
        Format::Text => {
            let mut out = String::new();
            for (f, s, m) in &rendered {
                let lhs = format!("{f}[{name}]");
                out += &format!("{lhs} = {}\n", s.to_text());
                out += &format!("{:w$} = {}\n", "", m.to_text(), w = lhs.chars().count());
            }
            out
        }
    };
    Ok(Outcome { output, pass: true })
}

/// Splits "(1;1),(11;-),(-;2)" into its parenthesized labels.
fn split_labels(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => start = Some(i),
            ')' => {
                if let Some(s) = start.take() {
                    out.push(&text[s..=i]);
                }
            }
            _ => {}
        }
    }
    out
}

/// Resolves --family to a family index, reordering its rows if all members were listed.
fn select_family(order: &Order, spec: &str) -> CliResult<(Order, usize)> {
    let nf = order.blocks().len();
    if let Some(k) = spec.strip_prefix('F').or_else(|| spec.strip_prefix('f')) {
        return match k.parse::<usize>() {
            Ok(k) if (1..=nf).contains(&k) => Ok((order.clone(), k - 1)),
            _ => usage(format!("--family {spec}: there are {nf} families (F1..F{nf})")),
        };
    }
    let labels = split_labels(spec);
    if labels.is_empty() {
        return usage(format!("--family {spec}: expected F<k> or labels like (1;1)"));
    }
    let idx = labels.iter().map(|l| parse_label(order, l)).collect::<CliResult<Vec<_>>>()?;
    let f = order.family_of(idx[0]);
    if idx.iter().any(|&i| order.family_of(i) != f) {
        return usage(format!("--family {spec}: labels from different families"));
    }
    if idx.len() == 1 {
        return Ok((order.clone(), f));
    }
    let range = order.blocks()[f].clone();
    if idx.len() != range.len() {
        return usage(format!("--family {spec}: list all {} members or just one", range.len()));
    }
    let perm: Vec<usize> = idx.iter().map(|i| i - range.start).collect();
    Ok((order.with_block_order(f, &perm)?, f))
}

/// Matrix with row labels; block boundaries at `cuts` drawn as | and a dashed rule.
fn matrix_text(m: &RatMatrix, labels: &[String], cuts: &[usize]) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_text()).collect()).collect();
    let mut widths = vec![1; m.cols()];
    for row in &cells {
        for (j, c) in row.iter().enumerate() {
            widths[j] = widths[j].max(c.chars().count());
        }
    }
    let lw = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let line = |i: usize| -> String {
        let mut s = format!("{:<lw$} |", labels[i]);
        for (j, c) in cells[i].iter().enumerate() {
            if j > 0 && cuts.contains(&j) {
                s += " |";
            }
            s += &format!(" {c:>w$}", w = widths[j]);
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = String::new();
    for i in 0..m.rows() {
        if i > 0 && cuts.contains(&i) {
            let total = lw + 2 + widths.iter().map(|w| w + 1).sum::<usize>() + 2 * (cuts.len().saturating_sub(1));
            out += &"-".repeat(total);
            out.push('\n');
        }
        out += &line(i);
    }
    out
}

pub fn cmd_opmat(cfg: &JobConfig, r: usize, family: Option<&str>, h: bool, sign: SignArg) -> CliResult<Outcome> {
    if cfg.stype != SymbolType::UNIPOTENT {
        return usage("operators exist only for symbol type (1,0)");
    }
    let order = cfg.order_for(cfg.n)?;
    let m1 = order.shape.m1();
    if r == 0 || r > m1 {
        return usage(format!("--r must satisfy 1 <= r <= {m1} for shape {}", order.shape));
    }
    if h && r != 1 {
        return usage("--H is built from D^1; drop --r");
    }
    let (order, fsel) = match family {
        Some(spec) => {
            let (o, f) = select_family(&order, spec)?;
            (o, Some(f))
        }
        None => (order, None),
    };
    let mut mats = Vec::new();
    for sg in sign.signs() {
        let (name, full) = if h {
            (format!("H{}", sg.symbol()), matrix_h(sg, &order)?.entries)
        } else {
            (format!("B^{r}{}", sg.symbol()), matrix_b(r, sg, &order)?.entries)
        };
        let (m, range) = match fsel {
            Some(f) => {
                let b = order.blocks()[f].clone();
                (full.block(b.start, b.end, b.start, b.end), b)
            }
            None => (full, 0..order.len()),
        };
        mats.push((name, cfg.subst_matrix(&m)?, range));
    }
    let labels_in = |range: &std::ops::Range<usize>| -> Vec<String> {
        order.labels()[range.clone()].iter().map(|a| a.to_text()).collect()
    };
    let cuts: Vec<usize> = match fsel {
        Some(_) => vec![],
        None => order.blocks().iter().map(|b| b.start).collect(),
    };
    let output = match cfg.format {
        Format::Json => {
            let mut v = cfg.header(cfg.n);
            v["r"] = json!(r);
            v["basis"] = json!("m");
            v["q"] = json!(cfg.q_text);
            v["t"] = json!(cfg.t_text);
            v["family"] = json!(fsel.map(family_label));
            v["blocks"] = json!(order
                .blocks()
                .iter()
                .enumerate()
                .map(|(f, b)| json!({ "name": family_label(f), "start": b.start, "end": b.end }))
                .collect::<Vec<_>>());
            v["matrices"] = json!(mats
                .iter()
                .map(|(name, m, range)| json!({ "name": name, "labels": labels_in(range), "matrix": matrix_to_json(m) }))
                .collect::<Vec<_>>());
            json_out(&v)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (name, m, range) in &mats {
                let labels = labels_in(range);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        if !m.get(i, j).is_zero() {
                            rows.push(vec![name.clone(), labels[i].clone(), labels[j].clone(), m.get(i, j).to_text()]);
                        }
                    }
                }
            }
            csv_out(&["operator", "row", "column", "value"], &rows)
        }
        Format::Text => {
            let mut out = String::new();
            for (name, m, range) in &mats {
                let which = match fsel {
                    Some(f) => format!(" on {} = {{{}}}", family_label(f), labels_in(range).join(", ")),
                    None => String::new(),
                };
                out += &format!("{name}{which}, m-basis, shape {}, n={}\n", order.shape, order.n);
                out += &matrix_text(m, &labels_in(range), &cuts);
            }
            out
        }
    };
    Ok(Outcome { output, pass: true })
}

type Job<'a> = Box<dyn Fn() -> crate::Result<Report> + Send + Sync + 'a>;

fn error_report(check: &str, e: &Error) -> Report {
    let mut r = Report::new(check, json!({}));
    r.fail(json!({ "error": e.to_string() }));
    r
}

fn suite_jobs<'a>(cfg: &'a JobConfig, suite: Suite, nmax: u32, rmax: usize) -> Vec<(String, Job<'a>)> {
    let mut jobs: Vec<(String, Job<'a>)> = Vec::new();
    let name = suite.name();
    let ns = 1..=nmax;
    match suite {
        Suite::Duality => {
            for n in ns {
                jobs.push((name.clone(), Box::new(move || verify_duality(n, &cfg.shape_for(n)))));
            }
        }
        Suite::Kernel => {
            jobs.push((name, Box::new(move || verify_kernel(nmax, &cfg.shape_for(nmax)))));
        }
        Suite::Adjoint => {
            for n in ns {
                for r in 1..=rmax {
                    jobs.push((
                        name.clone(),
                        Box::new(move || {
                            let o = order_or_err(cfg, n)?;
                            if r > o.shape.m1() {
                                return Ok(skipped("adjoint", n, r, &o));
                            }
                            verify_adjoint(r, &o)
                        }),
                    ));
                }
            }
        }
        Suite::FamilyAction => {
            for n in ns {
                jobs.push((
                    name.clone(),
                    Box::new(move || {
                        let o = order_or_err(cfg, n)?;
                        let basis = basis_cached(&o, cfg.tie)?;
                        let mut rep = Report::new("family-action", json!({ "n": n, "e": o.shape.e(), "shape": o.shape.m(), "rmax": rmax }));
                        for r in 1..=rmax.min(o.shape.m1()) {
                            rep.absorb(verify_family_action(r, &basis)?);
                        }
                        Ok(rep)
                    }),
                ));
            }
        }
        Suite::ConjectureA => {
            for n in ns {
                for sg in [Sign::Plus, Sign::Minus] {
                    jobs.push((name.clone(), Box::new(move || check_conjecture_a(&order_or_err(cfg, n)?, sg))));
                }
            }
        }
        Suite::Theorem36 => {
            for n in ns {
                jobs.push((name.clone(), Box::new(move || verify_theorem36(&order_or_err(cfg, n)?))));
            }
        }
        Suite::Shift => {
            for n in ns {
                for sg in [Sign::Plus, Sign::Minus] {
                    jobs.push((
                        name.clone(),
                        Box::new(move || {
                            let s = cfg.shape_for(n);
                            verify_shift_stability(n, &s, &s.shift(), sg)
                        }),
                    ));
                }
            }
        }
        Suite::Commutation => {
            for n in ns {
                jobs.push((name.clone(), Box::new(move || verify_commutation(&order_or_err(cfg, n)?, rmax))));
            }
            if cfg.e == 2 {
                jobs.push((name, Box::new(|| verify_f3_closed_form(2))));
            }
        }
        Suite::OrderIndependence => {
            for n in ns {
                jobs.push((name.clone(), Box::new(move || verify_order_independence(n, &cfg.shape_for(n)))));
            }
        }
        Suite::All => {
            for s in Suite::ALL {
                jobs.extend(suite_jobs(cfg, s, nmax, rmax));
            }
        }
    }
    jobs
}

fn order_or_err(cfg: &JobConfig, n: u32) -> crate::Result<Order> {
    total_order(n, &cfg.shape_for(n), cfg.stype, cfg.tie)
}

fn skipped(check: &str, n: u32, r: usize, o: &Order) -> Report {
    let mut rep = Report::new(check, json!({ "n": n, "e": o.shape.e(), "r": r, "shape": o.shape.m() }));
    rep.note(json!(format!("skipped: r exceeds min m_k = {}", o.shape.m1())));
    rep
}

pub fn cmd_verify(cfg: &JobConfig, suite: Suite, nmax: u32, rmax: usize) -> CliResult<Outcome> {
    if cfg.stype != SymbolType::UNIPOTENT {
        return usage("verification suites use symbol type (1,0)");
    }
    if nmax == 0 {
        return usage("--nmax must be positive");
    }
    let jobs = suite_jobs(cfg, suite, nmax, rmax);
    let reports: Vec<Report> = jobs
        .par_iter()
        .map(|(name, job)| job().unwrap_or_else(|e| error_report(name, &e)))
        .collect();
    let pass = reports.iter().all(|r| r.pass);
    let output = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let status = if r.pass { "pass" } else { "FAIL" };
                let inst = r.instance.as_object().map(|o| {
                    o.iter().filter(|(k, _)| *k != "notes").map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
                });
                s += &format!("{status} {} {}", r.check, inst.unwrap_or_default());
                if !r.pass {
                    s += &format!(" ({} witnesses)", r.witnesses.len());
                }
                s.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            s += &format!("{}: {} checks, {failed} failed\n", suite.name(), reports.len());
            s
        }
        Format::Json => json_out(&json!({
            "suite": suite.name(),
            "e": cfg.e,
            "nmax": nmax,
            "pass": pass,
            "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| vec![r.check.clone(), r.instance.to_string(), r.pass.to_string(), r.witnesses.len().to_string()])
                .collect();
            csv_out(&["check", "instance", "pass", "witnesses"], &rows)
        }
    };
    Ok(Outcome { output, pass })
}
