//! Batch front end: `run` maps an argument vector to an exit status and the
//! text to print.
//!
//! Exit status 0 means success, 1 a domain failure (an invalid code, an
//! ordinal overflow, a rejected axiom, a proof error) and 2 a usage problem
//! (unknown verb or flag, unparsable argument, malformed proof file).

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use ordtruth::ordinal::{gamma, Class, Ordinal, OrdinalCode, ParseOrdinalError};
use ordtruth::proofs::{check, template_jump_base, template_prog_numeral, Proof};
use ordtruth::syntax::{
    godel_decode, godel_encode, in_language, parse_formula, parse_index, subst_numeral, Formula, LanguageId,
};
use ordtruth::theories::{
    axiom_check, axiom_enumerate, mk_b, mk_c, mk_jump, mk_prog, mk_prog_upto, mk_shift, statement_of, Statement,
    StatementOutput, TheoryError, TheorySpec,
};
use serde_json::json;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

type Out = Result<String, Failure>;

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

fn domain(msg: impl std::fmt::Display) -> Failure {
    Failure::Domain(msg.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "ordtruth", about = "Ordinals up to Gamma_0, coded syntax, truth theories and proofs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Ordinal notations and arithmetic
    Ord {
        #[command(subcommand)]
        op: OrdCmd,
    },
    /// Formulas and their codes
    Formula {
        #[command(subcommand)]
        op: FormulaCmd,
    },
    /// Theories, languages and axioms
    Theory {
        #[command(subcommand)]
        op: TheoryCmd,
    },
    /// Derived predicates and statements
    Predicate {
        #[command(subcommand)]
        op: PredicateCmd,
    },
    /// Proof checking and generated proofs
    Proof {
        #[command(subcommand)]
        op: ProofCmd,
    },
    /// Demonstrations
    Demo {
        #[command(subcommand)]
        op: DemoCmd,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Lines,
    Json,
}

#[derive(Subcommand, Debug)]
enum OrdCmd {
    /// Print the normal form of an ordinal expression
    Eval { x: String },
    /// Compare two ordinals: LT, EQ or GT
    Cmp { x: String, y: String },
    Add { x: String, y: String },
    Mul { x: String, y: String },
    Exp { x: String, y: String },
    /// phi_a(b)
    Veblen { a: String, b: String },
    /// n-th element of the fundamental sequence
    Fs { x: String, n: u64 },
    Gamma { n: u64 },
    Encode { x: String },
    Decode { code: String },
    Classify { x: String },
    /// d with a1 + d = a
    Subl { a1: String, a: String },
    /// w^a * c
    Index { a: String, c: String },
}

#[derive(Subcommand, Debug)]
enum FormulaCmd {
    /// Show a formula's canonical text, code and free variables
    Parse {
        text: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a formula in canonical form
    Print { text: String },
    Encode { text: String },
    Decode { code: String },
    /// Substitute the numeral n for the free variable of a predicate
    Subst { text: String, n: String },
    Closure { text: String },
    Free { text: String },
    /// Whether a formula lies in a language, e.g. PA/simple
    Inlang { text: String, lang: String },
}

#[derive(Subcommand, Debug)]
enum TheoryCmd {
    Lang { theory: String },
    Axioms {
        theory: String,
        #[arg(long, default_value_t = 20)]
        limit: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    CheckAxiom { theory: String, formula: String },
}

#[derive(Subcommand, Debug)]
enum PredicateCmd {
    Prog { a: String },
    ProgUpto { a: String, c: String },
    #[command(name = "B")]
    B {
        a: String,
        c: String,
        #[arg(long, default_value = "PA/full")]
        lang: String,
    },
    #[command(name = "C")]
    C {
        c0: String,
        #[arg(long, default_value = "PA/full")]
        lang: String,
    },
    Jump { a: String },
    Shift { a: String, by: String },
    Statement {
        #[command(subcommand)]
        kind: StatementCmd,
        #[arg(long, value_enum, default_value_t, global = true)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum StatementCmd {
    /// S_a proves every theorem of S_b true
    Soundness {
        #[arg(long, default_value = "PA")]
        theory: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// C is progressive up to Gamma_0 under Acc
    CProgressive {
        #[arg(long, default_value = "PA")]
        theory: String,
    },
    /// Transfinite induction up to gamma_(n+1)
    GammaStep {
        #[arg(long, default_value = "PA")]
        theory: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        pred: String,
    },
    /// Prog(A) -> A(a) in the iterated theory
    Iterated {
        #[arg(long)]
        a: String,
        #[arg(long)]
        pred: String,
    },
    /// Prog_a(A) -> (forall b < a) A(b)
    Ti {
        #[arg(long, default_value = "PA")]
        theory: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        pred: String,
    },
}

#[derive(Subcommand, Debug)]
enum ProofCmd {
    Check {
        file: PathBuf,
        #[arg(long, default_value = "PA")]
        theory: String,
    },
    TemplateProg {
        a: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "PA")]
        theory: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    TemplateJump {
        a: String,
        #[arg(long, default_value = "PA")]
        theory: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum DemoCmd {
    GammaTable {
        #[arg(long, default_value_t = 6)]
        max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Runs one command. `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S]) -> (i32, String) {
    let argv = std::iter::once("ordtruth").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.cmd) {
        Ok(mut s) => {
            if !s.ends_with('\n') {
                s.push('\n');
            }
            (0, s)
        }
        Err(Failure::Domain(m)) => (1, format!("error: {m}\n")),
        Err(Failure::Usage(m)) => (2, format!("usage error: {m}\n")),
    }
}

fn dispatch(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Ord { op } => ord(op),
        Cmd::Formula { op } => formula(op),
        Cmd::Theory { op } => theory(op),
        Cmd::Predicate { op } => predicate(op),
        Cmd::Proof { op } => proof(op),
        Cmd::Demo { op: DemoCmd::GammaTable { max, format } } => Ok(gamma_table(max, format)),
    }
}

fn ordinal(s: &str) -> Result<Ordinal, Failure> {
    s.parse().map_err(|e: ParseOrdinalError| match e {
        ParseOrdinalError::Arithmetic(a) => domain(a),
        other => usage(format!("ordinal `{s}`: {other}")),
    })
}

fn natural(s: &str) -> Result<BigUint, Failure> {
    s.parse().map_err(|_| usage(format!("`{s}` is not a natural number")))
}

fn formula_arg(s: &str) -> Result<Formula, Failure> {
    parse_formula(s).map_err(|e| usage(format!("formula `{s}`: {e}")))
}

fn theory_arg(s: &str) -> Result<TheorySpec, Failure> {
    s.parse().map_err(|e: TheoryError| usage(format!("theory `{s}`: {e}")))
}

fn index_arg(s: &str) -> Result<OrdinalCode, Failure> {
    parse_index(s).map_err(|e| usage(format!("index `{s}`: {e}")))
}

fn lang_arg(s: &str) -> Result<LanguageId, Failure> {
    s.parse().map_err(|e| usage(format!("language `{s}`: {e}")))
}

fn theory_err(e: TheoryError) -> Failure {
    domain(e)
}

fn ord(op: OrdCmd) -> Out {
    let bin = |x: &str, y: &str, f: fn(&Ordinal, &Ordinal) -> ordtruth::ordinal::Result<Ordinal>| -> Out {
        Ok(f(&ordinal(x)?, &ordinal(y)?).map_err(domain)?.to_string())
    };
    match op {
        OrdCmd::Eval { x } => Ok(ordinal(&x)?.to_string()),
        OrdCmd::Cmp { x, y } => Ok(match ordinal(&x)?.cmp(&ordinal(&y)?) {
            Ordering::Less => "LT",
            Ordering::Equal => "EQ",
            Ordering::Greater => "GT",
        }
        .into()),
        OrdCmd::Add { x, y } => bin(&x, &y, Ordinal::add),
        OrdCmd::Mul { x, y } => bin(&x, &y, Ordinal::mul),
        OrdCmd::Exp { x, y } => bin(&x, &y, Ordinal::exp),
        OrdCmd::Veblen { a, b } => bin(&a, &b, Ordinal::veblen),
        OrdCmd::Subl { a1, a } => bin(&a1, &a, Ordinal::subtract_left),
        OrdCmd::Index { a, c } => bin(&a, &c, Ordinal::index_of),
        OrdCmd::Fs { x, n } => Ok(ordinal(&x)?.fs(n).map_err(domain)?.to_string()),
        OrdCmd::Gamma { n } => Ok(gamma(n).to_string()),
        OrdCmd::Encode { x } => Ok(OrdinalCode::encode(&ordinal(&x)?).to_string()),
        OrdCmd::Decode { code } => OrdinalCode(natural(&code)?)
            .decode()
            .map(|x| x.to_string())
            .ok_or_else(|| domain(format!("{code} is not a valid ordinal code"))),
        OrdCmd::Classify { x } => Ok(match ordinal(&x)?.classify() {
            Class::Zero => "Zero".into(),
            Class::Successor(p) => format!("Successor {p}"),
            Class::Limit => "Limit".into(),
        }),
    }
}

fn free_list(f: &Formula) -> Vec<String> {
    f.free_vars().into_iter().map(|v| format!("x{v}")).collect()
}

fn formula(op: FormulaCmd) -> Out {
    match op {
        FormulaCmd::Parse { text, format } => {
            let f = formula_arg(&text)?;
            let free = free_list(&f);
            Ok(match format {
                Format::Lines => format!(
                    "text: {f}\ncode: {}\nfree:{}\nsentence: {}\nmax_level: {}",
                    godel_encode(&f),
                    free.iter().map(|v| format!(" {v}")).collect::<String>(),
                    f.is_sentence(),
                    f.max_level()
                ),
                Format::Json => json!({
                    "text": f.to_string(),
                    "code": godel_encode(&f).to_string(),
                    "free": free,
                    "sentence": f.is_sentence(),
                    "max_level": f.max_level(),
                })
                .to_string(),
            })
        }
        FormulaCmd::Print { text } => Ok(formula_arg(&text)?.to_string()),
        FormulaCmd::Encode { text } => Ok(godel_encode(&formula_arg(&text)?).to_string()),
        FormulaCmd::Decode { code } => godel_decode(&natural(&code)?)
            .map(|f| f.to_string())
            .ok_or_else(|| domain(format!("{code} is not a formula code"))),
        FormulaCmd::Subst { text, n } => {
            let f = formula_arg(&text)?;
            let out = subst_numeral(&godel_encode(&f), &natural(&n)?).map_err(domain)?;
            Ok(godel_decode(&out).expect("substitution yields a formula code").to_string())
        }
        FormulaCmd::Closure { text } => Ok(formula_arg(&text)?.universal_closure().to_string()),
        FormulaCmd::Free { text } => Ok(free_list(&formula_arg(&text)?).join(" ")),
        FormulaCmd::Inlang { text, lang } => Ok(in_language(&formula_arg(&text)?, &lang_arg(&lang)?).to_string()),
    }
}

fn theory(op: TheoryCmd) -> Out {
    match op {
        TheoryCmd::Lang { theory } => Ok(theory_arg(&theory)?.language().to_string()),
        TheoryCmd::Axioms { theory, limit, format } => {
            let t = theory_arg(&theory)?;
            let mut out = String::new();
            for (f, g) in axiom_enumerate(&t, limit) {
                match format {
                    Format::Lines => writeln!(out, "{g}\t{f}").unwrap(),
                    Format::Json => writeln!(out, "{}", json!({"group": g.name(), "formula": f.to_string()})).unwrap(),
                }
            }
            Ok(out)
        }
        TheoryCmd::CheckAxiom { theory, formula } => {
            let t = theory_arg(&theory)?;
            let f = formula_arg(&formula)?;
            axiom_check(&t, &f)
                .map(|g| format!("accept {g}"))
                .map_err(|r| domain(format!("reject: {r}")))
        }
    }
}

fn statement_text(out: StatementOutput, format: Format) -> String {
    match format {
        Format::Lines => format!("formula: {}\ntheory: {}\nlanguage: {}", out.formula, out.theory, out.language),
        Format::Json => json!({
            "formula": out.formula.to_string(),
            "theory": out.theory.to_string(),
            "language": out.language.to_string(),
        })
        .to_string(),
    }
}

fn predicate(op: PredicateCmd) -> Out {
    let show = |r: Result<Formula, TheoryError>| -> Out { Ok(r.map_err(theory_err)?.to_string()) };
    match op {
        PredicateCmd::Prog { a } => show(mk_prog(&formula_arg(&a)?)),
        PredicateCmd::ProgUpto { a, c } => show(mk_prog_upto(&formula_arg(&a)?, &index_arg(&c)?)),
        PredicateCmd::B { a, c, lang } => show(mk_b(&lang_arg(&lang)?, &index_arg(&a)?, &index_arg(&c)?)),
        PredicateCmd::C { c0, lang } => show(mk_c(&lang_arg(&lang)?, &index_arg(&c0)?)),
        PredicateCmd::Jump { a } => show(mk_jump(&formula_arg(&a)?)),
        PredicateCmd::Shift { a, by } => show(mk_shift(&formula_arg(&a)?, &index_arg(&by)?)),
        PredicateCmd::Statement { kind, format } => {
            let s = match kind {
                StatementCmd::Soundness { theory, a, b } => Statement::SubsystemSoundness {
                    theory: theory_arg(&theory)?,
                    a: index_arg(&a)?,
                    b: index_arg(&b)?,
                },
                StatementCmd::CProgressive { theory } => Statement::CProgressive { theory: theory_arg(&theory)? },
                StatementCmd::GammaStep { theory, n, pred } => Statement::GammaStep {
                    theory: theory_arg(&theory)?,
                    n,
                    predicate: formula_arg(&pred)?,
                },
                StatementCmd::Iterated { a, pred } => Statement::IteratedInduction {
                    a: index_arg(&a)?,
                    predicate: formula_arg(&pred)?,
                },
                StatementCmd::Ti { theory, a, pred } => Statement::TransfiniteInduction {
                    theory: theory_arg(&theory)?,
                    a: index_arg(&a)?,
                    predicate: formula_arg(&pred)?,
                },
            };
            Ok(statement_text(statement_of(&s).map_err(theory_err)?, format))
        }
    }
}

fn emit_proof(p: Proof, out: Option<PathBuf>) -> Out {
    let text = p.to_string();
    match out {
        None => Ok(text),
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(format!("wrote {} lines to {}", p.len(), path.display()))
        }
    }
}

fn proof(op: ProofCmd) -> Out {
    match op {
        ProofCmd::Check { file, theory } => {
            let t = theory_arg(&theory)?;
            let text = std::fs::read_to_string(&file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let p: Proof = text.parse().map_err(usage)?;
            check(&t, &p).map_err(domain)?;
            Ok(format!("valid ({} lines)", p.len()))
        }
        ProofCmd::TemplateProg { a, n, theory, out } => {
            let p = template_prog_numeral(&formula_arg(&a)?, n, &theory_arg(&theory)?).map_err(domain)?;
            emit_proof(p, out)
        }
        ProofCmd::TemplateJump { a, theory, out } => {
            let p = template_jump_base(&formula_arg(&a)?, &theory_arg(&theory)?).map_err(domain)?;
            emit_proof(p, out)
        }
    }
}

/// Rows `n`, `γ_n` and the code of `γ_n` for `n = 0..=max_n`.
pub fn demo_gamma_table(max_n: u64) -> String {
    gamma_table(max_n, Format::Lines)
}

fn gamma_table(max_n: u64, format: Format) -> String {
    let mut out = String::new();
    for n in 0..=max_n {
        let g = gamma(n);
        let c = OrdinalCode::encode(&g);
        match format {
            Format::Lines => writeln!(out, "{n}\t{g}\t{c}").unwrap(),
            Format::Json => writeln!(out, "{}", json!({"n": n, "gamma": g.to_string(), "code": c.to_string()})).unwrap(),
        }
    }
    out
}
