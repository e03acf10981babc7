//! Acceptance gate: eight criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the verdict lines always reach the
//! console; the process exits non-zero if any criterion fails.

mod common;

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use ordtruth::ordinal::{gamma, preceq, Ordinal, OrdinalCode};
use ordtruth::proofs::{check, template_jump_base, template_prog_numeral, Justification, LogicScheme, Proof};
use ordtruth::syntax::{godel_decode, godel_encode, in_language, parse_formula, subst_numeral, Formula, Term};
use ordtruth::theories::{
    axiom_check, axiom_enumerate, statement_of, AxiomGroup, Statement, TheoryError, TheorySpec,
};
use rand::Rng;

use common::{code, Atoms, R};

const ORACLE_PAIRS: usize = 10_000;
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const TEMPLATE_LIMIT: Duration = Duration::from_secs(120);
const PREFIX: usize = 500;
const AXIOM_MUTATIONS: usize = 100;
const MIN_AXIOM_MUTANT_REJECTION: f64 = 0.5;
const PROOF_MUTATIONS: usize = 1000;
const MIN_PROOF_MUTANT_REJECTION: f64 = 0.9;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Independent Cantor normal form below ω^ω: (exponent, coefficient) pairs with
// strictly decreasing exponents and positive coefficients.
type Cnf = Vec<(u64, u64)>;

fn cnf_random(r: &mut R) -> Cnf {
    let mut exps: Vec<u64> = (0..7).filter(|_| r.gen_bool(0.35)).collect();
    exps.reverse();
    exps.into_iter().map(|e| (e, r.gen_range(1..10))).collect()
}

fn cnf_add(x: &Cnf, y: &Cnf) -> Cnf {
    let Some(&(lead, c)) = y.first() else {
        return x.clone();
    };
    let mut out: Cnf = x.iter().copied().filter(|&(e, _)| e > lead).collect();
    match x.iter().find(|&&(e, _)| e == lead) {
        Some(&(_, d)) => out.push((lead, c + d)),
        None => out.push((lead, c)),
    }
    out.extend_from_slice(&y[1..]);
    out
}

fn cnf_mul(x: &Cnf, y: &Cnf) -> Cnf {
    let Some(&(lead, lc)) = x.first() else {
        return Vec::new();
    };
    let mut acc = Vec::new();
    for &(f, d) in y {
        let part = if f > 0 {
            vec![(lead + f, d)]
        } else {
            let mut p = x.clone();
            p[0] = (lead, lc * d);
            p
        };
        acc = cnf_add(&acc, &part);
    }
    acc
}

fn cnf_cmp(x: &Cnf, y: &Cnf) -> Ordering {
    for (a, b) in x.iter().zip(y) {
        let o = a.cmp(b);
        if o != Ordering::Equal {
            return o;
        }
    }
    x.len().cmp(&y.len())
}

fn cnf_to_ordinal(x: &Cnf) -> Ordinal {
    if x.is_empty() {
        return Ordinal::Zero;
    }
    let text: Vec<String> = x.iter().map(|(e, c)| format!("w^{e}*{c}")).collect();
    text.join("+").parse().unwrap()
}

fn ordinal_to_cnf(x: &Ordinal) -> Option<Cnf> {
    if x.is_gamma0() {
        return None;
    }
    x.terms()
        .iter()
        .map(|t| {
            if !t.subscript().is_zero() {
                return None;
            }
            Some((t.argument().as_finite()?, t.multiplicity()))
        })
        .collect()
}

fn c1_oracle() -> Verdict {
    let start = Instant::now();
    let mut r = common::rng(1);
    let mut mismatches = 0usize;
    for _ in 0..ORACLE_PAIRS {
        let (x, y) = (cnf_random(&mut r), cnf_random(&mut r));
        let (a, b) = (cnf_to_ordinal(&x), cnf_to_ordinal(&y));
        if ordinal_to_cnf(&a.add(&b).unwrap()) != Some(cnf_add(&x, &y)) {
            mismatches += 1;
        }
        if ordinal_to_cnf(&a.mul(&b).unwrap()) != Some(cnf_mul(&x, &y)) {
            mismatches += 1;
        }
        if a.cmp(&b) != cnf_cmp(&x, &y) {
            mismatches += 1;
        }
        let (lo, hi, hx) = if cnf_cmp(&x, &y) == Ordering::Greater { (&b, &a, &x) } else { (&a, &b, &y) };
        match lo.subtract_left(hi).ok().and_then(|d| ordinal_to_cnf(&d)) {
            Some(d) if cnf_add(&ordinal_to_cnf(lo).unwrap(), &d) == *hx => {}
            _ => mismatches += 1,
        }
    }
    let elapsed = start.elapsed();
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    ensure(elapsed < ORACLE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{ORACLE_PAIRS} pairs x 4 operations, 0 mismatches in {:.2?}", elapsed))
}

fn c2_fixed_points() -> Verdict {
    let mut r = common::rng(2);
    let o = |s: &str| s.parse::<Ordinal>().unwrap();
    let finite_below = |k: u64| (0..k).map(Ordinal::nat).collect::<Vec<_>>();
    let mut below_omega = finite_below(9);
    let cases: Vec<(Ordinal, Vec<Ordinal>)> = vec![
        (o("1"), finite_below(1)),
        (o("2"), finite_below(2)),
        (o("w"), below_omega.clone()),
        (o("w+1"), {
            below_omega.push(o("w"));
            below_omega
        }),
    ];
    let mut checks = 0;
    for _ in 0..100 {
        let b = cnf_to_ordinal(&cnf_random(&mut r));
        for (a, lower) in &cases {
            let v = Ordinal::veblen(a, &b).unwrap();
            for a2 in lower {
                ensure(Ordinal::veblen(a2, &v).unwrap() == v, || format!("phi({a2}, phi({a},{b})) moved"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} fixed-point equations hold"))
}

fn c3_identities() -> Verdict {
    let mut r = common::rng(3);
    let o = |s: &str| s.parse::<Ordinal>().unwrap();
    let w = Ordinal::omega();
    ensure(gamma(0) == Ordinal::Zero, || "gamma_0".into())?;
    ensure(gamma(1) == Ordinal::one(), || "gamma_1".into())?;
    ensure(gamma(2) == o("phi(1,0)"), || "gamma_2".into())?;
    ensure(w.exp(&Ordinal::Zero).unwrap() == Ordinal::one(), || "w^0".into())?;
    ensure(Ordinal::veblen(&Ordinal::Zero, &Ordinal::Zero).unwrap() == Ordinal::one(), || "phi(0,0)".into())?;
    for _ in 0..20 {
        let b = common::ordinal(&mut r, 3);
        let lhs = w.exp(&b).unwrap().mul(&w).unwrap();
        ensure(lhs == w.exp(&b.succ().unwrap()).unwrap(), || format!("w^b*w at b = {b}"))?;
    }
    for _ in 0..50 {
        let (a, c) = (common::ordinal(&mut r, 3), common::ordinal(&mut r, 2));
        let lhs = w.exp(&a.succ().unwrap()).unwrap().mul(&c).unwrap();
        let rhs = w.exp(&a).unwrap().mul(&w.mul(&c).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("w^(a+1)*c at a = {a}, c = {c}"))?;
        let idx = Ordinal::index_of(&a.succ().unwrap(), &c).unwrap();
        ensure(idx == Ordinal::index_of(&a, &w.mul(&c).unwrap()).unwrap(), || "index_of".into())?;
    }
    for n in 0..=6 {
        ensure(Ordinal::Gamma0.fs(n).unwrap() == gamma(n), || format!("fs(G0, {n})"))?;
    }
    for _ in 0..100 {
        let (a, b) = (common::ordinal_near_gammas(&mut r), common::ordinal_near_gammas(&mut r));
        let e = a.exp(&b).map_err(|e| format!("{a}^{b}: {e}"))?;
        ensure(e < Ordinal::Gamma0, || format!("{a}^{b} reached G0"))?;
    }
    Ok("gamma_0..2, w^0, 20 + 50 multiplication identities, fs(G0, 0..6), 100 exponentials below G0".into())
}

fn c4_coding() -> Verdict {
    let mut r = common::rng(4);
    for _ in 0..1000 {
        let x = common::ordinal(&mut r, 3);
        ensure(code(&x).decode() == Some(x.clone()), || format!("ordinal {x}"))?;
        let f = common::formula(&mut r, 5, 4, Atoms::Any);
        ensure(godel_decode(&godel_encode(&f)) == Some(f.clone()), || format!("formula {f}"))?;
    }
    let raw = |r: &mut R| {
        if r.gen_bool(0.2) {
            OrdinalCode(BigUint::from(r.gen::<u64>()))
        } else {
            common::raw_code(r)
        }
    };
    for _ in 0..1000 {
        let (m, n, k) = (raw(&mut r), raw(&mut r), raw(&mut r));
        let exactly_one = [m.precedes(&n), m == n, n.precedes(&m)].iter().filter(|&&b| b).count() == 1;
        ensure(exactly_one, || format!("trichotomy at {m}, {n}"))?;
        if preceq(&m, &n) && preceq(&n, &k) {
            ensure(preceq(&m, &k), || format!("transitivity at {m}, {n}, {k}"))?;
        }
        ensure(preceq(&m, &m), || format!("reflexivity at {m}"))?;
    }
    Ok("1000 ordinal and 1000 formula round trips, 1000 order triples".into())
}

fn oracle_term(t: &Term, v: u32, n: &BigUint) -> Term {
    match t {
        Term::Var(x) if *x == v => Term::Num(n.clone()),
        Term::Var(_) | Term::Num(_) => t.clone(),
        Term::Succ(s) => Term::succ(oracle_term(s, v, n)),
        Term::Add(a, b) => Term::add(oracle_term(a, v, n), oracle_term(b, v, n)),
        Term::Mul(a, b) => Term::mul(oracle_term(a, v, n), oracle_term(b, v, n)),
        Term::Fun(f, args) => Term::fun(*f, args.iter().map(|a| oracle_term(a, v, n)).collect()),
    }
}

fn oracle_formula(f: &Formula, v: u32, n: &BigUint) -> Formula {
    use Formula::*;
    let t = |x: &Term| oracle_term(x, v, n);
    let g = |x: &Formula| oracle_formula(x, v, n);
    match f {
        Eq(a, b) => Formula::eq(t(a), t(b)),
        Truth { level, index, arg } => Formula::truth(*level, index.clone(), t(arg)),
        SimpleTruth { level, arg } => Formula::simple_truth(*level, t(arg)),
        Acc { level, arg } => Formula::acc(*level, t(arg)),
        Rel(r, args) => Formula::rel(*r, args.iter().map(t).collect()),
        Not(a) => Formula::not(g(a)),
        And(a, b) => Formula::and(g(a), g(b)),
        Or(a, b) => Formula::or(g(a), g(b)),
        Implies(a, b) => Formula::implies(g(a), g(b)),
        Iff(a, b) => Formula::iff(g(a), g(b)),
        ForAll(y, _) | Exists(y, _) if *y == v => f.clone(),
        ForAll(y, a) => Formula::forall(*y, g(a)),
        Exists(y, a) => Formula::exists(*y, g(a)),
    }
}

fn c5_substitution() -> Verdict {
    let mut r = common::rng(5);
    for _ in 0..1000 {
        let a = common::predicate(&mut r, 4, Atoms::Any);
        let v = a.predicate_var().unwrap();
        let n = BigUint::from(if r.gen_bool(0.5) { r.gen_range(0u64..20) } else { r.gen() });
        let got = subst_numeral(&godel_encode(&a), &n).map_err(|e| format!("{a}: {e}"))?;
        let want = godel_encode(&oracle_formula(&a, v, &n));
        ensure(got == want, || format!("mismatch on {a} at {n}"))?;
    }
    Ok("1000 (predicate, numeral) cases agree".into())
}

fn c6_recognizers() -> Verdict {
    let mut r = common::rng(6);
    let theories = [
        TheorySpec::PA,
        TheorySpec::tarski(TheorySpec::PA),
        TheorySpec::subsystem(TheorySpec::PA, code(&Ordinal::omega())).unwrap(),
        TheorySpec::tarski_ord(TheorySpec::PA),
        TheorySpec::tarski_iter(TheorySpec::PA, 2).unwrap(),
    ];
    let mut summary = Vec::new();
    for t in &theories {
        let stream = axiom_enumerate(t, PREFIX);
        ensure(stream.len() == PREFIX, || format!("{t}: stream ended early"))?;
        for (f, g) in &stream {
            let got = axiom_check(t, f);
            ensure(got == Ok(*g), || format!("{t}: {f} tagged {g}, check gave {got:?}"))?;
        }
        let (mut rejected, mut other) = (0, 0);
        for _ in 0..AXIOM_MUTATIONS {
            let (f, _) = &stream[r.gen_range(0..stream.len())];
            let m = loop {
                let m = common::mutate(&mut r, f);
                if !m.alpha_eq(f) {
                    break m;
                }
            };
            match axiom_check(t, &m) {
                Err(_) => rejected += 1,
                Ok(g) => {
                    ensure(axiom_check(t, &m) == Ok(g), || format!("{t}: unstable verdict on {m}"))?;
                    other += 1;
                }
            }
        }
        let rate = rejected as f64 / AXIOM_MUTATIONS as f64;
        ensure(rate >= MIN_AXIOM_MUTANT_REJECTION, || format!("{t}: only {rejected} mutants rejected"))?;
        summary.push(format!("{t} {rejected}/{other}"));
    }
    let prog_acc = axiom_enumerate(&theories[3], PREFIX)
        .iter()
        .position(|(_, g)| *g == AxiomGroup::ProgAcc);
    let tscheme = axiom_enumerate(&theories[1], PREFIX)
        .iter()
        .position(|(_, g)| *g == AxiomGroup::TScheme);
    ensure(prog_acc.is_some(), || "ProgAcc not in tord(PA) prefix".into())?;
    ensure(tscheme.is_some(), || "no TScheme instance in tarski(PA) prefix".into())?;
    Ok(format!(
        "5 x {PREFIX} enumerated axioms recognized; mutants rejected/re-recognized: {}; ProgAcc at {}, TScheme at {}",
        summary.join(", "),
        prog_acc.unwrap(),
        tscheme.unwrap()
    ))
}

const PREDICATES: [&str; 10] = [
    "x0 = x0",
    "prec(x0, 105) | x0 = 2",
    "~prec(x0, x0)",
    "exists x1. x1 = oadd(x0, x1)",
    "forall x1. (prec(x1, x0) -> prec(x1, oadd(x0, 105)))",
    "T[1](x0)",
    "T[1](oadd(x0, x0)) -> T[1](x0)",
    "forall x2. T[1](g(x2, x0)) | ~T[1](x0)",
    "x3 + 0 = x3 & T[1](S(x3))",
    "exists x1. (T[1](x1) & prec(x0, x1))",
];

fn mutate_line(r: &mut R, p: &Proof) -> Proof {
    let mut q = p.clone();
    let i = r.gen_range(0..q.lines.len());
    let refs = |r: &mut R| r.gen_range(0..=i as u32);
    let line = &mut q.lines[i];
    match r.gen_range(0..3) {
        0 => line.formula = common::mutate(r, &line.formula),
        1 => {
            line.justification = match r.gen_range(0..5) {
                0 => Justification::NonlogicalAxiom,
                1 => Justification::Computation,
                2 => Justification::LogicAxiom(LogicScheme::ALL[r.gen_range(0..LogicScheme::ALL.len())]),
                3 => Justification::ModusPonens(refs(r), refs(r)),
                _ => Justification::Generalization(refs(r), r.gen_range(0..6)),
            }
        }
        _ => {
            line.justification = match line.justification {
                Justification::ModusPonens(a, b) if r.gen_bool(0.5) => Justification::ModusPonens(b, a),
                Justification::ModusPonens(a, _) => Justification::ModusPonens(a, refs(r)),
                Justification::Generalization(_, x) => Justification::Generalization(refs(r), x),
                _ => Justification::ModusPonens(refs(r), refs(r)),
            }
        }
    }
    q
}

fn c7_templates() -> Verdict {
    let start = Instant::now();
    let theory = TheorySpec::tarski(TheorySpec::PA);
    let mut proofs = Vec::new();
    for src in PREDICATES {
        let a = parse_formula(src).unwrap();
        for n in [0, 1, 5, 20] {
            let p = template_prog_numeral(&a, n, &theory).map_err(|e| format!("{src}: {e}"))?;
            check(&theory, &p).map_err(|e| format!("prog {src} n={n}: {e}"))?;
            proofs.push(p);
        }
        let p = template_jump_base(&a, &theory).map_err(|e| format!("{src}: {e}"))?;
        check(&theory, &p).map_err(|e| format!("jump {src}: {e}"))?;
        proofs.push(p);
    }
    let mut r = common::rng(7);
    let (mut rejected, mut revalid) = (0, 0);
    for _ in 0..PROOF_MUTATIONS {
        let p = &proofs[r.gen_range(0..proofs.len())];
        let q = loop {
            let q = mutate_line(&mut r, p);
            if q != *p {
                break q;
            }
        };
        match check(&theory, &q) {
            Ok(()) => revalid += 1,
            Err(_) => rejected += 1,
        }
    }
    let elapsed = start.elapsed();
    let rate = rejected as f64 / PROOF_MUTATIONS as f64;
    ensure(rate >= MIN_PROOF_MUTANT_REJECTION, || format!("only {rejected} of {PROOF_MUTATIONS} mutants rejected"))?;
    ensure(elapsed < TEMPLATE_LIMIT, || format!("took {elapsed:?}"))?;
    let longest = proofs.iter().map(Proof::len).max().unwrap();
    Ok(format!(
        "{} template proofs valid (longest {longest} lines); mutants rejected {rejected}, still valid {revalid}; {:.2?}",
        proofs.len(),
        elapsed
    ))
}

fn closed_in_language(label: &str, s: &Statement) -> Result<(), String> {
    let out = statement_of(s).map_err(|e| format!("{label}: {e}"))?;
    ensure(out.formula.is_sentence(), || format!("{label}: not closed: {}", out.formula))?;
    ensure(in_language(&out.formula, &out.language), || format!("{label}: outside {}", out.language))
}

fn c8_statements() -> Verdict {
    let mut r = common::rng(8);
    let mut n_checked = 0;
    let mut pairs = 0;
    while pairs < 10 {
        let (x, y) = (common::ordinal(&mut r, 2), common::ordinal(&mut r, 2));
        if x == y {
            continue;
        }
        let (b, a) = if x < y { (x, y) } else { (y, x) };
        closed_in_language(
            "subsystem soundness",
            &Statement::SubsystemSoundness { theory: TheorySpec::PA, a: code(&a), b: code(&b) },
        )?;
        pairs += 1;
    }
    n_checked += pairs;
    closed_in_language("C progressive", &Statement::CProgressive { theory: TheorySpec::PA })?;
    n_checked += 1;
    for n in [2, 3, 4] {
        let predicate = common::predicate(&mut r, 3, Atoms::Arithmetic);
        closed_in_language("gamma step", &Statement::GammaStep { theory: TheorySpec::PA, n, predicate })?;
        n_checked += 1;
    }
    let low = Statement::GammaStep { theory: TheorySpec::PA, n: 1, predicate: parse_formula("x0 = x0").unwrap() };
    ensure(matches!(statement_of(&low), Err(TheoryError::OutOfRange(_))), || "n = 1 accepted".into())?;
    for _ in 0..5 {
        let a = common::ordinal_near_gammas(&mut r);
        let predicate = common::predicate(&mut r, 3, Atoms::IndexedTruth);
        closed_in_language("iterated induction", &Statement::IteratedInduction { a: code(&a), predicate })?;
        n_checked += 1;
    }
    let tarski = TheorySpec::tarski(TheorySpec::PA);
    for n in 0..5 {
        let predicate = common::predicate(&mut r, 3, Atoms::SimpleTruth);
        let s = Statement::TransfiniteInduction { theory: tarski.clone(), a: code(&gamma(n)), predicate };
        closed_in_language("transfinite induction", &s)?;
        n_checked += 1;
    }
    Ok(format!("{n_checked} statements closed and in their languages; n = 1 rejected"))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 8] = [
        ("ordinal oracle", c1_oracle),
        ("Veblen fixed points", c2_fixed_points),
        ("exact identities", c3_identities),
        ("coding round trips and order", c4_coding),
        ("numeral substitution oracle", c5_substitution),
        ("axiom recognizers", c6_recognizers),
        ("proof templates", c7_templates),
        ("statement well-formedness", c8_statements),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match verdict {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
