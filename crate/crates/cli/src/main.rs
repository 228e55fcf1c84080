mod checks;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrlab_core::boxmove::{dom_to_box_chain_with, find_box_move, hasse, relation_matrix, BoxMove, Relation};
use lrlab_core::nilmod::oracle::{enumerate_submodules_oracle, OracleOptions, DEFAULT_GUARD};
use lrlab_core::nilmod::{hom_dim, picket_hom_profile, realize_tableau, witness_sequence, Embedding};
use lrlab_core::poles::pole_decomposition;
use lrlab_core::{enumerate, Error, FiniteField, LrTableau, Shape, F2, F3, F5, F7};

use input::{embedding_prime, load, load_value, parse_word};

#[derive(Debug)]
pub enum CliError {
    Verify(String),
    Input(String),
    Guard(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Verify(m) | CliError::Input(m) | CliError::Guard(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => CliError::Guard(format!("{e}; pass --slow or raise LRLAB_GUARD")),
            Error::InvariantViolation(_) => CliError::Verify(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "lrlab", version, about = "LR tableaux, box moves, poles and invariant subspaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Prime field for linear algebra (2, 3, 5 or 7).
    #[arg(short = 'p', long = "prime", global = true)]
    prime: Option<u32>,
    /// Lift the tuple-count guard of the oracle.
    #[arg(long, global = true)]
    slow: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All LR tableaux of a shape.
    Enumerate { shape: String },
    /// Relation matrix on the tableaux of a shape.
    Orders {
        shape: String,
        #[arg(long, default_value = "dom")]
        relation: Relation,
    },
    /// Hasse diagram of the dominance or box order.
    Hasse {
        shape: String,
        #[arg(long, default_value = "dom")]
        relation: Relation,
    },
    /// Chain of box moves between two dominance-comparable tableaux.
    Dom2box {
        shape: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// 1-based position used for the first descent step.
        #[arg(long = "pick-l")]
        pick_l: Option<usize>,
    },
    /// Pole decomposition of a tableau.
    Decompose { tableau: String },
    /// Invariant subspace realizing a tableau.
    Realize { tableau: String },
    /// Tableau of an invariant subspace.
    Tableau { embedding: String },
    /// Short exact sequence for a single box move.
    Witness {
        shape: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Expected move as u,v,r,s.
        #[arg(long = "move")]
        mv: Option<String>,
    },
    /// Dimension of the space of homomorphisms between two embeddings.
    Hom { source: String, target: String },
    /// Homomorphism dimensions into all pickets.
    Profile { embedding: String },
    /// Brute-force census of invariant subspaces of a shape.
    Oracle { shape: String },
    /// Runs the worked examples and reports pass/fail for each.
    #[command(name = "paper-examples")]
    Examples,
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
    pub ok: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report { json, text, dot: None, ok: true }
    }
}

macro_rules! with_field {
    ($p:expr, $f:ident => $body:expr) => {
        match $p {
            2 => {
                type $f = F2;
                $body
            }
            3 => {
                type $f = F3;
                $body
            }
            5 => {
                type $f = F5;
                $body
            }
            7 => {
                type $f = F7;
                $body
            }
            p => Err(CliError::Input(format!("unsupported prime {p}; use 2, 3, 5 or 7"))),
        }
    };
}

fn words(ts: &[LrTableau]) -> Vec<Vec<u32>> {
    ts.iter().map(|t| t.reading_word()).collect()
}

fn fmt_word(w: &[u32]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn tableau_text(t: &LrTableau) -> String {
    let chain: Vec<String> = t.chain().iter().map(|p| p.to_string()).collect();
    format!("{}  chain {}", fmt_word(&t.reading_word()), chain.join(" < "))
}

fn cmd_enumerate(shape: &Shape) -> Report {
    let all = enumerate(shape);
    let text = all.iter().map(|t| format!("{}\n", tableau_text(t))).collect();
    Report::new(json!({ "shape": shape, "count": all.len(), "tableaux": all }), text)
}

fn cmd_orders(shape: &Shape, relation: Relation) -> Result<Report, CliError> {
    let all = enumerate(shape);
    let m = relation_matrix(&all, relation)?;
    let text = m
        .iter()
        .zip(&all)
        .map(|(row, t)| {
            let r: String = row.iter().map(|&b| if b { '1' } else { '0' }).collect();
            format!("{r}  {}\n", fmt_word(&t.reading_word()))
        })
        .collect();
    Ok(Report::new(json!({ "relation": relation, "nodes": words(&all), "matrix": m }), text))
}

fn cmd_hasse(shape: &Shape, relation: Relation) -> Result<Report, CliError> {
    let h = hasse(&enumerate(shape), relation)?;
    let text = h
        .edges
        .iter()
        .map(|&(a, b)| format!("{} < {}\n", fmt_word(&h.nodes[a].reading_word()), fmt_word(&h.nodes[b].reading_word())))
        .collect();
    let dot = h.to_dot();
    let mut r = Report::new(json!({ "relation": h.relation, "nodes": words(&h.nodes), "edges": h.edges }), text);
    r.dot = Some(dot);
    Ok(r)
}

fn cmd_dom2box(shape: &Shape, from: &str, to: &str, pick: Option<usize>) -> Result<Report, CliError> {
    let g = LrTableau::from_word(shape.clone(), &parse_word(from)?)?;
    let gt = LrTableau::from_word(shape.clone(), &parse_word(to)?)?;
    if !g.dominance_leq(&gt)? {
        return Err(CliError::Input(format!("{g} is not dominated by {gt}")));
    }
    let chain = dom_to_box_chain_with(&g, &gt, pick)?;
    let mut steps = Vec::new();
    let mut ok = chain.first() == Some(&g) && chain.last() == Some(&gt);
    for w in chain.windows(2) {
        let mv = find_box_move(&w[0], &w[1]);
        ok &= mv.is_some();
        steps.push(
            json!({ "from": w[0].reading_word(), "to": w[1].reading_word(), "move": mv, "verified": mv.is_some() }),
        );
    }
    let descent: Vec<Vec<u32>> = words(&chain).into_iter().rev().collect();
    let text = format!(
        "ascending: {}\ndescent:   {}\nverified:  {ok}\n",
        words(&chain).iter().map(|w| fmt_word(w)).collect::<Vec<_>>().join(" -> "),
        descent.iter().map(|w| fmt_word(w)).collect::<Vec<_>>().join(" -> "),
    );
    let mut r =
        Report::new(json!({ "ascending": words(&chain), "descent": descent, "steps": steps, "verified": ok }), text);
    r.ok = ok;
    Ok(r)
}

fn cmd_decompose(t: &LrTableau) -> Result<Report, CliError> {
    let parts = pole_decomposition(t)?;
    let mut out = Vec::new();
    let mut text = String::new();
    for part in &parts {
        let pt = part.tableau()?;
        text += &match &part.pole {
            Some(p) => format!("pole layers {:?} in {}", p.layers(), p.ambient()),
            None => "empty".to_string(),
        };
        if !part.empty_pickets.is_empty() {
            text += &format!(" + empty pickets {:?}", part.empty_pickets);
        }
        text += &format!("  [{}]\n", fmt_word(&pt.reading_word()));
        out.push(json!({ "pole": part.pole, "empty_pickets": part.empty_pickets, "tableau": pt }));
    }
    Ok(Report::new(json!({ "tableau": t, "parts": out }), text))
}

fn cmd_realize<F: FiniteField>(t: &LrTableau) -> Result<Report, CliError> {
    let e: Embedding<F> = realize_tableau(t)?;
    let text = format!("{} in {} with subspace of type {}\n", t, e.ambient_type(), e.sub_type());
    Ok(Report::new(serde_json::to_value(&e).expect("embedding serializes"), text))
}

fn parse_embedding<F: FiniteField>(v: Value) -> Result<Embedding<F>, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Input(e.to_string()))
}

fn field_of(v: &Value, flag: Option<u32>) -> Result<u32, CliError> {
    let p = embedding_prime(v)?;
    match flag {
        Some(q) if q != p => Err(CliError::Input(format!("-p {q} disagrees with the embedding's p = {p}"))),
        _ => Ok(p),
    }
}

fn cmd_tableau<F: FiniteField>(v: Value) -> Result<Report, CliError> {
    let e = parse_embedding::<F>(v)?;
    let t = e.tableau();
    Ok(Report::new(serde_json::to_value(&t).expect("tableau serializes"), tableau_text(&t) + "\n"))
}

fn cmd_hom<F: FiniteField>(a: Value, b: Value) -> Result<Report, CliError> {
    let (a, b) = (parse_embedding::<F>(a)?, parse_embedding::<F>(b)?);
    let d = hom_dim(&a, &b);
    Ok(Report::new(json!({ "hom_dim": d }), format!("{d}\n")))
}

fn cmd_profile<F: FiniteField>(v: Value) -> Result<Report, CliError> {
    let e = parse_embedding::<F>(v)?;
    let h = e.ambient_type().largest();
    let table = picket_hom_profile(&e, h, h);
    let text = table
        .iter()
        .enumerate()
        .map(|(i, row)| format!("i={i}: {}\n", row.iter().map(|x| format!("{x:>3}")).collect::<String>()))
        .collect();
    Ok(Report::new(json!({ "rows": "i = 0..=max", "columns": "l = 1..=max", "profile": table }), text))
}

fn parse_move(s: &str) -> Result<[u32; 4], CliError> {
    let v = parse_word(s)?;
    v.try_into().map_err(|_| CliError::Input(format!("--move expects u,v,r,s, got {s:?}")))
}

fn cmd_witness<F: FiniteField>(shape: &Shape, from: &str, to: &str, mv: Option<&str>) -> Result<Report, CliError> {
    let g = LrTableau::from_word(shape.clone(), &parse_word(from)?)?;
    let gt = LrTableau::from_word(shape.clone(), &parse_word(to)?)?;
    let found: BoxMove =
        find_box_move(&g, &gt).ok_or_else(|| CliError::Input(format!("{gt} is not one box move above {g}")))?;
    if let Some(m) = mv {
        let [u, v, r, s] = parse_move(m)?;
        if (found.u, found.v, found.r, found.s) != (u, v, r, s) {
            return Err(CliError::Input(format!("the move from {g} to {gt} is {found}, not {m}")));
        }
    }
    let w = witness_sequence::<F>(&g, &gt, &found)?;
    let text = w
        .report
        .checks
        .iter()
        .map(|c| format!("{:<28} {}\n", c.name, if c.passed { "ok" } else { "FAILED" }))
        .collect();
    let mut r = Report::new(
        json!({ "move": found, "partition": w.partition, "sequence": serde_json::to_value(&w).expect("witness serializes") }),
        text,
    );
    r.ok = w.report.ok();
    Ok(r)
}

fn guard(slow: bool) -> Result<u128, CliError> {
    if slow {
        return Ok(u128::MAX);
    }
    match std::env::var("LRLAB_GUARD") {
        Ok(s) => s.trim().parse().map_err(|e| CliError::Input(format!("LRLAB_GUARD={s:?}: {e}"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn cmd_oracle<F: FiniteField>(shape: &Shape, slow: bool) -> Result<Report, CliError> {
    let opts = OracleOptions { guard: guard(slow)?, ..Default::default() };
    let c = enumerate_submodules_oracle::<F>(shape, &opts)?;
    let mut text = format!("{} submodules from {} tuples over F{}\n", c.submodules, c.tuples, c.p);
    for t in &c.tableaux {
        text += &format!(
            "{}: {} submodules, {} classes\n",
            fmt_word(&t.tableau.reading_word()),
            t.submodules,
            t.classes.len()
        );
    }
    for w in &c.warnings {
        text += &format!("warning: {w}\n");
    }
    Ok(Report::new(serde_json::to_value(&c).expect("census serializes"), text))
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let prime = cli.prime.unwrap_or(2);
    match &cli.command {
        Command::Enumerate { shape } => Ok(cmd_enumerate(&load(shape)?)),
        Command::Orders { shape, relation } => cmd_orders(&load(shape)?, *relation),
        Command::Hasse { shape, relation } => cmd_hasse(&load(shape)?, *relation),
        Command::Dom2box { shape, from, to, pick_l } => cmd_dom2box(&load(shape)?, from, to, *pick_l),
        Command::Decompose { tableau } => cmd_decompose(&load(tableau)?),
        Command::Realize { tableau } => {
            let t: LrTableau = load(tableau)?;
            with_field!(prime, F => cmd_realize::<F>(&t))
        }
        Command::Tableau { embedding } => {
            let v = load_value(embedding)?;
            with_field!(field_of(&v, cli.prime)?, F => cmd_tableau::<F>(v))
        }
        Command::Hom { source, target } => {
            let (a, b) = (load_value(source)?, load_value(target)?);
            let p = field_of(&a, cli.prime)?;
            field_of(&b, Some(p))?;
            with_field!(p, F => cmd_hom::<F>(a, b))
        }
        Command::Profile { embedding } => {
            let v = load_value(embedding)?;
            with_field!(field_of(&v, cli.prime)?, F => cmd_profile::<F>(v))
        }
        Command::Witness { shape, from, to, mv } => {
            let s: Shape = load(shape)?;
            with_field!(prime, F => cmd_witness::<F>(&s, from, to, mv.as_deref()))
        }
        Command::Oracle { shape } => {
            let s: Shape = load(shape)?;
            with_field!(prime, F => cmd_oracle::<F>(&s, cli.slow))
        }
        Command::Examples => Ok(checks::run_all(cli.slow)),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|r| {
        let out = match cli.format {
            Format::Json => serde_json::to_string_pretty(&r.json).expect("json output") + "\n",
            Format::Text => r.text.clone(),
            Format::Dot => {
                r.dot.clone().ok_or_else(|| CliError::Input("dot output is only available for hasse".into()))?
            }
        };
        print!("{out}");
        if r.ok {
            Ok(())
        } else {
            Err(CliError::Verify("verification failed".into()))
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lrlab: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
