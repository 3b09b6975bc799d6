use std::process::ExitCode;
use std::time::Duration;

use rayon::prelude::*;
use regionum::bounds::{find_case, verify_bound_with};
use regionum::cases::{apply_schedule, diagram_word, explicit_schedule, target_word};
use regionum::invariants::certify_unlink_with;
use regionum::templates::{beta3_word, eight_bracket_word, mu, nu, unknot_word, unknot_word_mirror};
use regionum::{
    bound, brute_force_ur, close_braid, is_proper_closed_form, is_proper_oracle, is_proper_power_form, jones,
    toric_braid, BraidWord, Case, CaseKind, Error, MarkovOptions, SearchOptions, TorusLinkSpec, Verdict,
};
use serde_json::{json, Value};

use crate::output::{csv_row, ids, ints, poly_json, poly_text};
use crate::{Cli, Command, Format, RunConfig, WordFamily};

/// Why a command did not succeed, and the exit code that goes with it.
#[derive(Debug)]
pub enum Failure {
    /// Not proper, not covered, refuted, or bad input.
    Refused(String),
    /// An invariant of the library was breached.
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Refused(_) => 1,
            Failure::Internal(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Pipeline { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Refused(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: &Cli) -> ExitCode {
    let cfg = &cli.config;
    let result = match &cli.command {
        Command::Proper { p, q } => proper(cfg, *p, *q),
        Command::Bound { p, q } => bound_cmd(cfg, *p, *q),
        Command::Schedule { p, q, case } => schedule(cfg, *p, *q, case.as_deref()),
        Command::Verify { p, q, case } => verify(cfg, *p, *q, case.as_deref()),
        Command::Brute { p, q, max_k, timeout } => brute(cfg, *p, *q, *max_k, *timeout),
        Command::Jones { word, strands, unlink } => jones_cmd(cfg, &word.join(" "), *strands, *unlink),
        Command::Word { family } => word(cfg, family),
        Command::Table { p, q, verify } => table(cfg, p.clone(), q.clone(), *verify),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Refused(m) => eprintln!("error: {m}"),
                Failure::Internal(m) => eprintln!("internal error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn markov(cfg: &RunConfig) -> MarkovOptions {
    MarkovOptions { budget: cfg.budget, ..MarkovOptions::default() }
}

fn spec(p: u64, q: u64) -> Result<TorusLinkSpec, Failure> {
    Ok(TorusLinkSpec::new(p, q)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn select_case(s: &TorusLinkSpec, id: Option<&str>) -> Result<Case, Failure> {
    match id {
        Some(id) => {
            let kind = CaseKind::from_id(id).ok_or_else(|| Failure::Refused(format!("unknown case `{id}`")))?;
            find_case(s, kind)
                .ok_or_else(|| Failure::from(Error::CaseMismatch { case: id.to_string(), p: s.p, q: s.q }))
        }
        None => Ok(bound(s)?.best().case),
    }
}

fn proper(cfg: &RunConfig, p: u64, q: u64) -> Outcome {
    let s = spec(p, q)?;
    let closed = is_proper_closed_form(&s);
    let power = is_proper_power_form(&s);
    let diagram = close_braid(&toric_braid(p as usize, q as usize)?)?;
    let oracle = is_proper_oracle(&diagram);
    let verdict = match (closed, s.is_knot()) {
        (false, _) => "not proper",
        (true, true) => "proper (knot)",
        (true, false) => "proper",
    };
    match cfg.format {
        Format::Json => print_json(&json!({
            "p": p, "q": q, "d": s.d, "closed_form": closed, "power_form": power,
            "diagram": oracle, "proper": closed, "verdict": verdict,
        })),
        Format::Csv => {
            println!("p,q,d,closed_form,power_form,diagram,verdict");
            println!(
                "{}",
                csv_row(
                    [p, q, s.d]
                        .map(|x| x.to_string())
                        .into_iter()
                        .chain([closed, power, oracle].map(|b| b.to_string()))
                        .chain([verdict.to_string()])
                )
            );
        }
        Format::Text => {
            println!("closed form: {closed}");
            println!("power form: {power}");
            println!("diagram linking: {oracle}");
            println!("{verdict}");
        }
    }
    if closed == power && power == oracle {
        Ok(())
    } else {
        Err(Failure::Internal(format!("{s}: properness tests disagree")))
    }
}

fn bound_cmd(cfg: &RunConfig, p: u64, q: u64) -> Outcome {
    let s = spec(p, q)?;
    let report = bound(&s)?;
    let exact = p == 2;
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            v["minimum"] = json!(report.value());
            v["exact"] = json!(exact);
            print_json(&v);
        }
        Format::Csv => {
            println!("p,q,case,n,a,bound,formula,diagram");
            for e in &report.entries {
                println!(
                    "{}",
                    csv_row([
                        p.to_string(),
                        q.to_string(),
                        e.case.kind.id().to_string(),
                        e.case.n.to_string(),
                        e.case.a.to_string(),
                        e.bound.to_string(),
                        e.formula.clone(),
                        format!("{:?}", e.diagram).to_lowercase(),
                    ])
                );
            }
        }
        Format::Text => {
            for e in &report.entries {
                println!(
                    "{:<32} n = {:<3} a = {:<3} {:>6}   {}",
                    e.case.kind.id(),
                    e.case.n,
                    e.case.a,
                    e.bound,
                    e.formula
                );
            }
            let tag = if exact { " (exact)" } else { "" };
            println!("minimum: {}{tag}", report.value());
        }
    }
    Ok(())
}

fn schedule(cfg: &RunConfig, p: u64, q: u64, case: Option<&str>) -> Outcome {
    let s = spec(p, q)?;
    let case = select_case(&s, case)?;
    let regions = explicit_schedule(&s, &case);
    let start = diagram_word(&s, &case)?;
    let result = apply_schedule(&start, &regions)?;
    let target = target_word(&s, &case)?;
    let reproduces = result == target;
    let b = regionum::cases::case_bound(&s, &case);
    match cfg.format {
        Format::Json => print_json(&json!({
            "p": p, "q": q, "case": case.kind.id(), "n": case.n, "a": case.a, "bound": b,
            "diagram": case.kind.diagram(), "regions": regions, "reproduces_target": reproduces,
            "result_word": result.to_ints(),
        })),
        Format::Csv => {
            println!("p,q,case,bound,size,reproduces_target,regions");
            println!(
                "{}",
                csv_row([
                    p.to_string(),
                    q.to_string(),
                    case.kind.id().to_string(),
                    b.to_string(),
                    regions.len().to_string(),
                    reproduces.to_string(),
                    ids(&regions),
                ])
            );
        }
        Format::Text => {
            println!("case: {case}");
            println!("bound: {b}");
            println!("regions ({}): {}", regions.len(), ids(&regions));
            println!("reproduces target: {reproduces}");
        }
    }
    Ok(())
}

fn verify(cfg: &RunConfig, p: u64, q: u64, case: Option<&str>) -> Outcome {
    let s = spec(p, q)?;
    let cert = match case {
        Some(_) => regionum::verify_case(&s, &select_case(&s, case)?, markov(cfg))?,
        None => verify_bound_with(&s, markov(cfg))?,
    };
    match cfg.format {
        Format::Json => print_json(&cert.to_json()),
        Format::Csv => {
            println!("p,q,d,case,bound,regions,verdict,jones_unlink_check,explicit_schedule");
            println!(
                "{}",
                csv_row([
                    p.to_string(),
                    q.to_string(),
                    cert.d.to_string(),
                    cert.case.clone(),
                    cert.bound.to_string(),
                    ids(&cert.regions),
                    cert.verdict.to_string(),
                    cert.jones_unlink_check.to_string(),
                    cert.explicit_schedule.to_string(),
                ])
            );
        }
        Format::Text => {
            println!("K({p},{q}), {} component(s)", cert.d);
            println!("case: {}", cert.case);
            println!("bound: {}", cert.bound);
            println!("regions ({}): {}", cert.regions.len(), ids(&cert.regions));
            println!("target word: {}", ints(&cert.target_word));
            println!("jones matches unlink: {}", cert.jones_unlink_check);
            println!("verdict: {}", cert.verdict);
            for w in &cert.warnings {
                println!("warning: {w}");
            }
        }
    }
    if cert.verdict == Verdict::Refuted {
        Err(Failure::Refused(format!("K({p},{q}): the resulting closure is not a trivial link")))
    } else {
        Ok(())
    }
}

fn brute(cfg: &RunConfig, p: u64, q: u64, max_k: Option<usize>, timeout: Option<u64>) -> Outcome {
    let s = spec(p, q)?;
    let b = bound(&s).ok().map(|r| r.value());
    let max_size = match (max_k, b) {
        (Some(k), _) => k,
        (None, Some(b)) => b as usize,
        (None, None) => 4,
    };
    let opts = SearchOptions { max_size, markov: markov(cfg), timeout: timeout.map(Duration::from_secs) };
    let report = brute_force_ur(&s, &opts)?;
    match cfg.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("report serializes");
            v["p"] = json!(p);
            v["q"] = json!(q);
            v["value"] = json!(report.value());
            v["bound"] = json!(b);
            print_json(&v);
        }
        Format::Csv => {
            println!("p,q,value,lower,witness,explored,distinct,bound");
            println!(
                "{}",
                csv_row([
                    p.to_string(),
                    q.to_string(),
                    report.value().map_or(String::new(), |v| v.to_string()),
                    report.lower.to_string(),
                    report.witness.as_deref().map_or(String::new(), ids),
                    report.explored.to_string(),
                    report.distinct.to_string(),
                    b.map_or(String::new(), |b| b.to_string()),
                ])
            );
        }
        Format::Text => {
            println!("regions: {}", report.regions);
            println!("subsets tried: {} ({} distinct flip vectors)", report.explored, report.distinct);
            match (&report.witness, report.value()) {
                (Some(w), Some(v)) => println!("value: {v}, witness {}", ids(w)),
                (Some(w), None) => println!("found {}, but smaller sizes were inconclusive", ids(w)),
                (None, _) => println!("no witness up to size {max_size}; value at least {}", report.lower),
            }
            if report.timed_out {
                println!("timed out");
            }
            if let Some(b) = b {
                println!("bound: {b}");
            }
        }
    }
    Ok(())
}

fn jones_cmd(cfg: &RunConfig, word: &str, strands: Option<usize>, unlink: bool) -> Outcome {
    let w = BraidWord::parse(word, strands)?;
    let poly = jones(&w)?;
    let check = unlink.then(|| certify_unlink_with(&w, markov(cfg)));
    match cfg.format {
        Format::Json => {
            let mut v = json!({
                "word": w.to_ints(), "strands": w.strands(), "components": w.closure_components(),
                "jones_t_half": poly_json(&poly),
            });
            if let Some(c) = &check {
                v["verdict"] = json!(c.verdict);
            }
            print_json(&v);
        }
        Format::Csv => {
            println!("strands,components,jones,verdict");
            println!(
                "{}",
                csv_row([
                    w.strands().to_string(),
                    w.closure_components().to_string(),
                    poly_text(&poly),
                    check.as_ref().map_or(String::new(), |c| c.verdict.to_string()),
                ])
            );
        }
        Format::Text => {
            println!("components: {}", w.closure_components());
            println!("jones: {}", poly_text(&poly));
            if let Some(c) = &check {
                println!("unlink: {}", c.verdict);
            }
        }
    }
    Ok(())
}

fn word(cfg: &RunConfig, family: &WordFamily) -> Outcome {
    let w = match family {
        WordFamily::Toric { p, q } => toric_braid(*p, *q)?,
        WordFamily::Mu { p, i } => mu(*p, *i)?,
        WordFamily::Nu { p, i } => nu(*p, *i)?,
        WordFamily::Unknot { p, mirror: false } => unknot_word(*p)?,
        WordFamily::Unknot { p, mirror: true } => unknot_word_mirror(*p)?,
        WordFamily::ThreeBlocks { p } => beta3_word(*p)?,
        WordFamily::EightBrackets { i, strands } => eight_bracket_word(*i, *strands)?,
        WordFamily::Target { p, q, case } => {
            let s = spec(*p, *q)?;
            target_word(&s, &select_case(&s, case.as_deref())?)?
        }
    };
    match cfg.format {
        Format::Json => print_json(&json!({ "strands": w.strands(), "word": w.to_ints() })),
        Format::Csv => println!("{}", csv_row(w.to_ints().iter().map(i32::to_string))),
        Format::Text => println!("{}", ints(&w.to_ints())),
    }
    Ok(())
}

struct Row {
    spec: TorusLinkSpec,
    status: &'static str,
    bound: Option<u64>,
    case: Option<Case>,
    formula: String,
    verdict: Option<Result<Verdict, String>>,
}

fn table_row(s: TorusLinkSpec, verify: bool, opts: MarkovOptions) -> Row {
    let mut row = Row { spec: s, status: "", bound: None, case: None, formula: String::new(), verdict: None };
    match bound(&s) {
        Ok(r) => {
            row.status = "covered";
            row.bound = Some(r.value());
            row.case = Some(r.best().case);
            row.formula = r.best().formula.clone();
            if verify {
                row.verdict = Some(verify_bound_with(&s, opts).map(|c| c.verdict).map_err(|e| e.to_string()));
            }
        }
        Err(Error::NotProper { .. }) => row.status = "not_proper",
        Err(Error::CaseNotCovered { .. }) => row.status = "not_covered",
        Err(e) => row.verdict = Some(Err(e.to_string())),
    }
    row
}

fn table(
    cfg: &RunConfig,
    ps: std::ops::RangeInclusive<u64>,
    qs: std::ops::RangeInclusive<u64>,
    verify: bool,
) -> Outcome {
    let mut specs = Vec::new();
    for p in ps {
        for q in qs.clone() {
            specs.push(spec(p, q)?);
        }
    }
    let opts = markov(cfg);
    let rows: Vec<Row> = specs.par_iter().map(|&s| table_row(s, verify, opts)).collect();
    let verdict_text = |r: &Row| match &r.verdict {
        Some(Ok(v)) => v.to_string(),
        Some(Err(_)) => "error".to_string(),
        None => String::new(),
    };
    match cfg.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut o = json!({
                        "p": r.spec.p, "q": r.spec.q, "d": r.spec.d, "status": r.status, "bound": r.bound,
                        "case": r.case.map(|c| c.kind.id()), "formula": r.formula,
                    });
                    if r.verdict.is_some() {
                        o["verdict"] = json!(verdict_text(r));
                    }
                    o
                })
                .collect();
            print_json(&Value::Array(v));
        }
        Format::Csv | Format::Text => {
            let mut header = vec!["p", "q", "d", "status", "bound", "case", "formula"];
            if verify {
                header.push("verdict");
            }
            println!("{}", header.join(","));
            for r in &rows {
                let mut fields = vec![
                    r.spec.p.to_string(),
                    r.spec.q.to_string(),
                    r.spec.d.to_string(),
                    r.status.to_string(),
                    r.bound.map_or(String::new(), |b| b.to_string()),
                    r.case.map_or(String::new(), |c| c.kind.id().to_string()),
                    r.formula.clone(),
                ];
                if verify {
                    fields.push(verdict_text(r));
                }
                println!("{}", csv_row(fields));
            }
        }
    }
    let errors: Vec<String> = rows
        .iter()
        .filter_map(|r| match &r.verdict {
            Some(Err(e)) => Some(format!("{}: {e}", r.spec)),
            _ => None,
        })
        .collect();
    if !errors.is_empty() {
        return Err(Failure::Internal(errors.join("; ")));
    }
    if rows.iter().any(|r| matches!(r.verdict, Some(Ok(Verdict::Refuted)))) {
        return Err(Failure::Refused("some bounds were refuted".into()));
    }
    Ok(())
}
