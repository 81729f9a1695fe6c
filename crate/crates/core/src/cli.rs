//! Command-line front end: `veronese 'd;a1,...,an' [actions] [--oracle] [--json]`.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors (including an
//! exceeded oracle budget), 2 when the oracle disagrees with a closed form.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::IndexSet;
use crate::oracle::{self, OracleBudget};
use crate::polymatroid::{radical_via_rank, translation_normalize, BaseSet, VeroneseParams};
use crate::report::{
    EquidimSection, InputRecord, OracleSection, PolymatroidSection, Report, UnmixedSection,
};
use crate::stable::SquarefreeIdeal;
use crate::veronese::{
    associated_primes, classify, is_equidimensional, maximal_pair, normalize, unmixed_report,
    WitnessedPrime,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISCREPANCY: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "veronese",
    version,
    about = "Radicals, associated primes and Cohen-Macaulay tests for ideals of Veronese type"
)]
struct Args {
    /// Parameters `d;a1,...,an`; whitespace anywhere is ignored.
    #[arg(value_name = "PARAMS")]
    params: Vec<String>,

    /// Read a base set instead: one exponent vector per line.
    #[arg(long, value_name = "FILE", conflicts_with = "params")]
    bases: Option<PathBuf>,

    /// Every action below.
    #[arg(long)]
    all: bool,
    /// Minimal generators of the radical.
    #[arg(long)]
    radical: bool,
    /// Borel generators of the core radical.
    #[arg(long)]
    borel: bool,
    /// The invariants m (largest variable) and b (largest degree).
    #[arg(long)]
    mb: bool,
    /// Equidimensionality verdict with evidence.
    #[arg(long)]
    equidim: bool,
    /// Maximal window pair (p, l) and the generators violating it.
    #[arg(long)]
    pair: bool,
    /// Associated primes with witnesses.
    #[arg(long)]
    assoc: bool,
    /// Unmixedness verdict.
    #[arg(long)]
    unmixed: bool,
    /// Cohen-Macaulay class.
    #[arg(long)]
    classify: bool,
    /// Alexander dual of the radical.
    #[arg(long)]
    dual: bool,

    /// Cross-check every result against brute-force enumeration.
    #[arg(long)]
    oracle: bool,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,

    /// Corrupt the closed-form results before the oracle sees them.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Veronese(VeroneseParams),
    Bases(BaseSet),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Actions {
    pub radical: bool,
    pub borel: bool,
    pub mb: bool,
    pub equidim: bool,
    pub pair: bool,
    pub assoc: bool,
    pub unmixed: bool,
    pub classify: bool,
    pub dual: bool,
}

impl Actions {
    pub fn all() -> Self {
        Actions {
            radical: true,
            borel: true,
            mb: true,
            equidim: true,
            pair: true,
            assoc: true,
            unmixed: true,
            classify: true,
            dual: true,
        }
    }

    pub fn any(&self) -> bool {
        *self != Actions::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Request {
    pub input: Input,
    pub actions: Actions,
    pub oracle_check: bool,
    pub format: OutputFormat,
    pub budget: OracleBudget,
    pub inject_fault: bool,
}

/// Parses a full argument vector, program name first.
pub fn parse_request<I, T>(argv: I) -> Result<Request>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string()))?;
    request_from_args(args)
}

fn request_from_args(args: Args) -> Result<Request> {
    let input = match (&args.bases, args.params.is_empty()) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
            Input::Bases(parse_bases(&text)?)
        }
        (None, false) => Input::Veronese(parse_params(&args.params.join(" "))?),
        (None, true) => {
            return Err(Error::Usage(
                "expected parameters `d;a1,...,an` or --bases FILE".into(),
            ))
        }
    };
    let actions = if args.all {
        Actions::all()
    } else {
        Actions {
            radical: args.radical,
            borel: args.borel,
            mb: args.mb,
            equidim: args.equidim,
            pair: args.pair,
            assoc: args.assoc,
            unmixed: args.unmixed,
            classify: args.classify,
            dual: args.dual,
        }
    };
    if !actions.any() {
        return Err(Error::Usage("no action requested (try --all)".into()));
    }
    Ok(Request {
        input,
        actions,
        oracle_check: args.oracle,
        format: if args.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        budget: OracleBudget::default(),
        inject_fault: args.inject_fault,
    })
}

/// Parses `d;a1,...,an`, ignoring whitespace. Columns in errors are 1-based
/// positions in `text`. Infeasible parameters are rejected here.
pub fn parse_params(text: &str) -> Result<VeroneseParams> {
    let mut tokens = Lexer::new(text);
    let d = tokens.number("degree")?;
    tokens.expect(';')?;
    let mut caps = vec![tokens.number("cap")?];
    while tokens.peek().is_some() {
        tokens.expect(',')?;
        caps.push(tokens.number("cap")?);
    }
    if d == 0 {
        return Err(Error::Parse {
            column: 1,
            message: "the degree must be positive".into(),
        });
    }
    let params = VeroneseParams::new(d, caps)?;
    params.ensure_feasible()?;
    Ok(params)
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::iter::Enumerate<std::str::Chars<'a>>>,
    len: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().enumerate().peekable(),
            len: text.chars().count(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn column(&mut self) -> usize {
        self.peek().map_or(self.len, |(i, _)| i) + 1
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.chars.next();
                Ok(())
            }
            Some((i, c)) => Err(Error::Parse {
                column: i + 1,
                message: format!("expected `{want}`, found `{c}`"),
            }),
            None => Err(Error::Parse {
                column: self.len + 1,
                message: format!("expected `{want}`, found end of input"),
            }),
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        let column = self.column();
        let mut digits = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        if digits.is_empty() {
            let found = self
                .chars
                .peek()
                .map_or("end of input".to_string(), |(_, c)| format!("`{c}`"));
            return Err(Error::Parse {
                column,
                message: format!("expected a nonnegative integer {what}, found {found}"),
            });
        }
        match digits.parse::<u64>() {
            Ok(v) if v <= crate::MAX_VALUE => Ok(v as u32),
            _ => Err(Error::Parse {
                column,
                message: format!("{what} {digits} exceeds {}", crate::MAX_VALUE),
            }),
        }
    }
}

/// One exponent vector per line, entries separated by commas or whitespace.
/// Blank lines and `#` comments are skipped.
pub fn parse_bases(text: &str) -> Result<BaseSet> {
    let mut vectors = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row: std::result::Result<Vec<u32>, _> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::parse::<u32>)
            .collect();
        let row = row.map_err(|e| Error::InvalidBaseSet(format!("line {}: {e}", lineno + 1)))?;
        vectors.push(row);
    }
    BaseSet::new(vectors)
}

/// Runs the requested analyses. A disagreement with the oracle is reported
/// inside the returned report (`oracle.agreed == false`), not as an error.
pub fn run(req: &Request) -> Result<Report> {
    match &req.input {
        Input::Veronese(p) => {
            let mut report = Report::new(InputRecord::Veronese(p.clone()));
            analyse(p, req, &mut report)?;
            Ok(report)
        }
        Input::Bases(bases) => {
            let mut report = Report::new(InputRecord::Bases {
                bases: bases.vectors().to_vec(),
            });
            let strong = bases.check_strong_exchange();
            let translation = if strong {
                Some(translation_normalize(bases)?)
            } else {
                None
            };
            let radical = SquarefreeIdeal::from_ideal(&radical_via_rank(bases)?)?;
            report.polymatroid = Some(PolymatroidSection {
                size: bases.len(),
                rank: bases.rank(),
                exchange: bases.check_exchange(),
                strong_exchange: strong,
                offset: translation.as_ref().map(|t| t.offset.clone()),
                translated: translation.as_ref().map(|t| t.params.clone()),
                radical_via_rank: radical.gens().to_vec(),
            });
            // the remaining sections describe the translated Veronese ideal
            if let Some(t) = translation {
                if t.params.d() > 0 {
                    analyse(&t.params, req, &mut report)?;
                }
            }
            Ok(report)
        }
    }
}

fn analyse(p: &VeroneseParams, req: &Request, report: &mut Report) -> Result<()> {
    let acts = req.actions;
    let nf = normalize(p)?;
    if acts.radical {
        report.radical = Some(nf.radical()?.gens().to_vec());
    }
    if acts.borel || acts.mb || acts.equidim {
        let eq = is_equidimensional(p)?;
        if acts.borel {
            report.borel = Some(eq.borel.clone());
        }
        if acts.mb {
            report.m = eq.mb.map(|mb| mb.m);
            report.b = eq.mb.map(|mb| mb.b);
        }
        if acts.equidim {
            report.equidimensional = Some(EquidimSection {
                verdict: eq.verdict,
                cover_cardinality: eq.cover_cardinality,
                evidence: eq.evidence,
            });
        }
    }
    if acts.pair {
        report.maximal_pair = Some(maximal_pair(p)?);
    }
    if acts.assoc {
        report.associated_primes = Some(associated_primes(p)?);
    }
    if acts.unmixed {
        let u = unmixed_report(p)?;
        report.unmixed = Some(UnmixedSection {
            verdict: u.verdict,
            embedded: u.embedded,
        });
    }
    if acts.classify {
        report.class = Some(classify(p)?);
    }
    if acts.dual {
        report.dual = Some(nf.radical()?.alexander_dual()?.gens().to_vec());
    }
    report.normal_form = Some(nf);
    if req.inject_fault {
        inject_fault(report);
    }
    if req.oracle_check {
        report.oracle = Some(cross_check(p, report, &req.budget)?);
    }
    Ok(())
}

/// Mutation hook: damages every closed-form answer present.
fn inject_fault(report: &mut Report) {
    if let Some(r) = report.radical.as_mut() {
        r.pop();
    }
    if let Some(e) = report.equidimensional.as_mut() {
        e.verdict = !e.verdict;
    }
    if let Some(a) = report.associated_primes.as_mut() {
        a.pop();
    }
    if let Some(u) = report.unmixed.as_mut() {
        u.verdict = !u.verdict;
    }
    if let Some(d) = report.dual.as_mut() {
        d.pop();
    }
}

fn check_params_budget(p: &VeroneseParams, budget: &OracleBudget) -> Result<()> {
    // |G(I)| and the colon search are both bounded by this product
    let needed = p.caps().iter().fold(1u128, |acc, &a| {
        acc.saturating_mul(u128::from(a.min(p.d())) + 1)
    });
    if needed > u128::from(budget.max_divisors) {
        return Err(Error::BudgetExceeded {
            what: "generator enumeration",
            needed,
            budget: budget.max_divisors,
        });
    }
    budget.check_subsets(p.nvars())
}

/// Recomputes every closed-form section present in `report` by brute force.
pub fn cross_check(
    p: &VeroneseParams,
    report: &Report,
    budget: &OracleBudget,
) -> Result<OracleSection> {
    check_params_budget(p, budget)?;
    let ideal = p.ideal()?;
    let radical = SquarefreeIdeal::from_ideal(&ideal.radical()?)?;
    let mut checked: Vec<String> = Vec::new();
    let mut bad: Vec<String> = Vec::new();
    let mut covers: Option<Vec<IndexSet>> = None;
    let mut primes: Option<Vec<WitnessedPrime>> = None;
    let mut covers_of = |ideal: &MonomialIdeal| -> Result<Vec<IndexSet>> {
        if covers.is_none() {
            covers = Some(oracle::minimal_vertex_covers(ideal, budget)?);
        }
        Ok(covers.clone().unwrap_or_default())
    };

    if let Some(r) = &report.radical {
        checked.push("radical".into());
        if r.as_slice() != radical.gens() {
            bad.push(format!(
                "radical: closed form {} generators, oracle {}",
                r.len(),
                radical.gens().len()
            ));
        }
    }

    let nf = normalize(p)?;
    let core_radical = match &nf.core {
        Some(core) => Some(SquarefreeIdeal::from_ideal(&core.ideal()?.radical()?)?),
        None => None,
    };
    if let Some(borel) = &report.borel {
        checked.push("borel".into());
        match &core_radical {
            Some(cr) => {
                let closure =
                    SquarefreeIdeal::strongly_stable_closure(cr.nvars(), borel.iter().copied())?;
                if &closure != cr {
                    bad.push(
                        "borel: closure of the Borel generators is not the core radical".into(),
                    );
                }
            }
            None if !borel.is_empty() => {
                bad.push("borel: generators reported for an empty core".into())
            }
            None => {}
        }
    }
    if report.m.is_some() || report.b.is_some() {
        checked.push("mb".into());
        let expect = core_radical.as_ref().map(|cr| {
            let m = cr
                .gens()
                .iter()
                .filter_map(|g| g.max_index())
                .max()
                .unwrap_or(0);
            let b = cr.gens().iter().map(|g| g.len()).max().unwrap_or(0);
            (m, b)
        });
        let got = report.m.zip(report.b);
        if got != expect {
            bad.push(format!("mb: closed form {got:?}, oracle {expect:?}"));
        }
    }

    if let Some(eq) = &report.equidimensional {
        checked.push("equidimensional".into());
        let cs = covers_of(&ideal)?;
        let sizes: std::collections::BTreeSet<usize> = cs.iter().map(|c| c.len()).collect();
        let verdict = sizes.len() == 1;
        if verdict != eq.verdict {
            bad.push(format!(
                "equidimensional: closed form {}, oracle {verdict} (cover sizes {sizes:?})",
                eq.verdict
            ));
        } else if verdict && eq.cover_cardinality != sizes.first().copied() {
            bad.push(format!(
                "equidimensional: cover cardinality {:?}, oracle {:?}",
                eq.cover_cardinality,
                sizes.first()
            ));
        }
    }

    if let Some(dual) = &report.dual {
        checked.push("dual".into());
        let cs = covers_of(&ideal)?;
        if *dual != cs {
            bad.push(format!(
                "dual: {} generators, oracle finds {} minimal vertex covers",
                dual.len(),
                cs.len()
            ));
        }
    }

    let mut primes_of = |ideal: &MonomialIdeal| -> Result<Vec<IndexSet>> {
        if primes.is_none() {
            primes = Some(oracle::associated_primes_bruteforce(ideal, budget)?);
        }
        Ok(primes.iter().flatten().map(|w| w.indices).collect())
    };
    if let Some(ass) = &report.associated_primes {
        checked.push("associated_primes".into());
        let oracle_sets = primes_of(&ideal)?;
        let closed: Vec<IndexSet> = ass.iter().map(|w| w.indices).collect();
        if closed != oracle_sets {
            bad.push(format!(
                "associated primes: closed form {} primes, oracle {}",
                closed.len(),
                oracle_sets.len()
            ));
        }
        for w in ass {
            if !w.verify_by_colon(&ideal)? {
                bad.push(format!(
                    "associated primes: witness {} fails for {}",
                    w.witness,
                    w.indices.prime_string()
                ));
            }
        }
    }

    let needs_unmixed = report.unmixed.is_some() || report.class.is_some();
    let oracle_unmixed = if needs_unmixed {
        Some(primes_of(&ideal)? == covers_of(&ideal)?)
    } else {
        None
    };
    if let (Some(u), Some(truth)) = (&report.unmixed, oracle_unmixed) {
        checked.push("unmixed".into());
        if u.verdict != truth {
            bad.push(format!(
                "unmixed: closed form {}, oracle {truth}",
                u.verdict
            ));
        }
    }
    if let (Some(class), Some(truth)) = (report.class, oracle_unmixed) {
        checked.push("class".into());
        if class.is_cohen_macaulay() != truth {
            bad.push(format!(
                "class: {class:?} but the oracle finds unmixed = {truth}"
            ));
        }
    }

    Ok(OracleSection {
        checked,
        agreed: bad.is_empty(),
        discrepancies: bad,
    })
}

/// Whole program: parse, run, print. Returns the process exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_ERROR
                }
            };
        }
    };
    let result = request_from_args(args).and_then(|req| Ok((run(&req)?, req.format)));
    let (report, format) = match result {
        Ok(pair) => pair,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let _ = match format {
        OutputFormat::Json => writeln!(out, "{}", report.to_json()),
        OutputFormat::Text => write!(out, "{}", report.to_text()),
    };
    if report.agreed() {
        EXIT_OK
    } else {
        if let Some(o) = &report.oracle {
            for d in &o.discrepancies {
                let _ = writeln!(err, "oracle discrepancy: {d}");
            }
        }
        EXIT_DISCREPANCY
    }
}
