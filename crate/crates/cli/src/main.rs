use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pabr_core::format::{KbDocument, Snapshot};
use pabr_core::logic::parse_formula;
use pabr_core::oracle::{OracleError, DEFAULT_ENUMERATION_LIMIT};
use pabr_core::probability::ProbabilityError;
use pabr_core::{Alphabet, KnowledgeBase, Method, QueryMethod, Session, SessionError, Term};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "pabr",
    version,
    about = "Degrees of support from probabilistic assumption-based knowledge bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile the knowledge clauses into a snapshot.
    Compile {
        kb: PathBuf,
        /// Output path (default: `<kb>.snap`).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also store the prime implicates.
        #[arg(long)]
        pi: bool,
    },
    /// Print supports and the degree of support of a hypothesis as JSON.
    Query {
        kb: PathBuf,
        #[arg(short, long = "query")]
        query: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Depth of the truncated inclusion-exclusion bounds.
        #[arg(long = "l", default_value_t = 1)]
        l: usize,
        /// Snapshot written by `compile`.
        #[arg(long)]
        snapshot: Option<PathBuf>,
        /// Maximum number of symbols the oracle will enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        enumeration_limit: usize,
    },
    /// Report the minimal contradictions of the knowledge base.
    Check { kb: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Incexc,
    Sdp,
    Bounds,
    Oracle,
}

/// Exit status plus a diagnostic for stderr.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

const PARSE: u8 = 2;
const INCONSISTENT: u8 = 3;
const BOUNDS: u8 = 4;
const TOO_LARGE: u8 = 5;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<KbDocument, Failure> {
    KbDocument::parse(&read(path)?).map_err(|e| {
        fail(
            PARSE,
            format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message),
        )
    })
}

fn term_literals(term: &Term, alphabet: &Alphabet) -> Vec<String> {
    term.iter().map(|l| alphabet.literal_name(l)).collect()
}

fn terms_json(terms: &[Term], alphabet: &Alphabet) -> Vec<Vec<String>> {
    terms.iter().map(|t| term_literals(t, alphabet)).collect()
}

/// Twelve significant digits.
fn round(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Serialize)]
struct QueryOutput {
    hypothesis: String,
    mqs: Vec<Vec<String>>,
    mc: Vec<Vec<String>>,
    qs_prob: f64,
    contradiction_prob: f64,
    support: f64,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<[f64; 2]>,
}

fn compile(kb_path: &Path, output: Option<PathBuf>, with_pi: bool) -> Result<(), Failure> {
    let doc = load(kb_path)?;
    let kb = doc.knowledge_base();
    let state = kb.compile_knowledge(with_pi);
    if state.is_inconsistent() {
        return Err(fail(
            INCONSISTENT,
            "knowledge clauses are inconsistent without any assumption",
        ));
    }
    let output = output.unwrap_or_else(|| {
        let mut name = kb_path.as_os_str().to_owned();
        name.push(".snap");
        PathBuf::from(name)
    });
    let text = Snapshot::from_state(&state).to_text(kb.alphabet());
    fs::write(&output, text).map_err(|e| fail(PARSE, format!("{}: {e}", output.display())))?;
    println!(
        "compiled {} knowledge clauses: {} characteristic clauses",
        kb.knowledge().len(),
        state.carc().len()
    );
    if let Some(pi) = state.pi() {
        println!("{} prime implicates", pi.len());
    }
    for clause in state.carc() {
        if !clause.is_tautology() {
            println!("  {}", clause.display(kb.alphabet()));
        }
    }
    println!("written to {}", output.display());
    Ok(())
}

fn session(
    kb: KnowledgeBase,
    doc: &KbDocument,
    snapshot: Option<&Path>,
) -> Result<Session, Failure> {
    let table = doc.assumption_table(kb.alphabet());
    match snapshot {
        None => Ok(Session::new(kb, table)),
        Some(path) => {
            let text = read(path)?;
            let snap = Snapshot::parse(&text, kb.alphabet()).map_err(|e| {
                fail(
                    PARSE,
                    format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message),
                )
            })?;
            let state = snap.into_state(kb.alphabet());
            Session::from_compiled(kb, table, state)
                .map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))
        }
    }
}

fn query(
    kb_path: &Path,
    text: &str,
    method: MethodArg,
    l: usize,
    snapshot: Option<&Path>,
    enumeration_limit: usize,
) -> Result<(), Failure> {
    let doc = load(kb_path)?;
    let kb = doc.knowledge_base();
    let alphabet = kb.alphabet().clone();
    let h = parse_formula(text, &alphabet).map_err(|e| fail(PARSE, format!("query: {e}")))?;
    let mut session = session(kb, &doc, snapshot)?;
    session.enumeration_limit = enumeration_limit;
    let method = match method {
        MethodArg::Auto => QueryMethod::Engine(Method::Auto),
        MethodArg::Incexc => QueryMethod::Engine(Method::InclusionExclusion),
        MethodArg::Sdp => QueryMethod::Engine(Method::DisjointProducts),
        MethodArg::Bounds => QueryMethod::Engine(Method::Bounds { l }),
        MethodArg::Oracle => QueryMethod::Oracle,
    };
    let report = session.query(&h, method).map_err(|e| match e {
        SessionError::TotalInconsistency => fail(INCONSISTENT, e),
        SessionError::Probability(ProbabilityError::BoundsPrecondition { .. }) => fail(BOUNDS, e),
        SessionError::Oracle(OracleError::TooLarge { .. }) => fail(TOO_LARGE, e),
        other => fail(PARSE, other),
    })?;
    let out = QueryOutput {
        hypothesis: h.display(&alphabet).to_string(),
        mqs: terms_json(&report.mqs, &alphabet),
        mc: terms_json(&report.mc, &alphabet),
        qs_prob: round(report.qs_prob),
        contradiction_prob: round(report.contra_prob),
        support: round(report.support),
        method: report.method.name(),
        bounds: report.bounds.map(|(lo, hi)| [round(lo), round(hi)]),
    };
    println!(
        "{}",
        serde_json::to_string(&out).expect("plain data serializes")
    );
    Ok(())
}

/// Exit 1 when there are minimal contradictions.
fn check(kb_path: &Path) -> Result<bool, Failure> {
    let doc = load(kb_path)?;
    let kb = doc.knowledge_base();
    let state = kb.compile(false);
    if state.is_inconsistent() {
        return Err(fail(
            INCONSISTENT,
            "knowledge base is inconsistent without any assumption",
        ));
    }
    let mc = pabr_core::support::contradictions_of(&state);
    if mc.is_empty() {
        println!("consistent");
        return Ok(true);
    }
    let json =
        serde_json::to_string(&terms_json(&mc, kb.alphabet())).expect("plain data serializes");
    println!("mc = {json}");
    Ok(false)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compile { kb, output, pi } => compile(&kb, output, pi).map(|()| true),
        Command::Query {
            kb,
            query: q,
            method,
            l,
            snapshot,
            enumeration_limit,
        } => query(&kb, &q, method, l, snapshot.as_deref(), enumeration_limit).map(|()| true),
        Command::Check { kb } => check(&kb),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("pabr: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
