//! Command-line front end. `run` parses arguments, dispatches one
//! subcommand and returns the exit status with both output streams, so it is
//! testable without spawning a process.
//!
//! Exit status: 0 success, 1 a checked property is false, 2 invalid input,
//! 3 undecided.

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::assoc::{self, AssocCertificate, AssocKind, WitnessReport};
use crate::carriers::{check_axioms, is_doubly_distributive, Element, Hyperfield, ProbeSpec};
use crate::divide::{self, mult_at, mult_set, quotients};
use crate::error::{Error, Result};
use crate::polyalg::{boxprod, boxsum, expr_equal, expr_member, parse_expr, parse_poly, EqualityVerdict, Polynomial, ProductExpr, Verdict};
use crate::repro;
use crate::tropical::{self, Reducibility};

pub const MAX_DEGREE_VAR: &str = "HYPERPOLY_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "hyperpoly", version, about = "Polynomials over hyperfields: products, roots, multiplicities and associativity")]
pub struct Cli {
    /// K, S, W, T, V, P, GF(p), W(Zn,k) or W(G,e):<table-file>
    #[arg(long, global = true)]
    pub hf: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluation set p(a)
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Coefficient box of p ⊡ q
    Prod {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Coefficient box of p ⊞ q
    Sum {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Whether a polynomial lies in the value set of an expression
    Member {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Whether two expressions have the same value set
    Equal {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// All q with p ∈ (T - a) ⊡ q
    Quotients {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Multiplicity of a as a root of p
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Multiplicity of roots drawn from a region
    MultSet {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// `{a,b,...}` or an interval such as `[1,inf)`
        #[arg(long, allow_hyphen_values = true)]
        region: String,
    },
    /// Compares p ⊡ (q ⊡ r) with (p ⊡ q) ⊡ r
    AssocCheck {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        /// Compare p(qr), q(rp) and r(pq) pairwise
        #[arg(long)]
        all: bool,
    },
    /// Exhaustive associativity scan over a finite carrier
    AssocScan {
        #[arg(long)]
        max_deg: usize,
        /// Include non-monic polynomials
        #[arg(long)]
        non_monic: bool,
    },
    /// The 1 ⊞ 1 criterion with its witness
    OneOne,
    /// Bracketed products of evaluation sets, point by point
    Pointwise {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        /// Points; defaults to the whole carrier when finite
        #[arg(long, allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Hyperfield axioms
    Axioms {
        /// Probe elements; defaults to the whole carrier or a built-in grid
        #[arg(long, allow_hyphen_values = true)]
        probe: Vec<String>,
    },
    /// Double distributivity
    Ddist {
        #[arg(long, allow_hyphen_values = true)]
        probe: Vec<String>,
    },
    /// Root multiset of a monic tropical polynomial
    TropRoots {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Box of the product of 0T + a over the given roots
    TropBox {
        /// Comma-separated roots
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        /// Also certify that the iterated product equals the box
        #[arg(long)]
        check: bool,
    },
    /// Whether {p} is the product of two positive-degree polynomials
    Reducible {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = tropical::DEFAULT_REDUCIBILITY_BOUND)]
        bound: usize,
    },
    /// Worked reproduction checks
    Repro {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub hyperfield: String,
    pub polynomial: String,
    pub at: String,
    pub value: String,
    pub is_root: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxReport {
    pub hyperfield: String,
    pub operation: String,
    pub left: String,
    pub right: String,
    pub coefficients: Vec<String>,
    /// Exact member list over finite carriers.
    pub members: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub hyperfield: String,
    pub polynomial: String,
    pub expression: String,
    pub verdict: Verdict,
    pub assignment: Vec<String>,
    pub reasons: Vec<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualReport {
    pub hyperfield: String,
    pub left: String,
    pub right: String,
    pub verdict: EqualityVerdict,
    pub witness: Option<WitnessReport>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub hyperfield: String,
    pub polynomial: String,
    pub at: String,
    pub is_root: bool,
    /// Admissible values of each quotient coefficient, lowest degree first.
    pub domains: Vec<String>,
    pub quotients: Vec<String>,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultReport {
    pub hyperfield: String,
    pub polynomial: String,
    pub at: String,
    pub multiplicity: usize,
    pub exact: bool,
    pub levels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproReport {
    pub criteria: Vec<repro::CriterionResult>,
    pub all_passed: bool,
}

/// Exit status and output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Rendered result: the structured value, its human text and the exit status.
struct Rendered {
    json: serde_json::Value,
    human: String,
    code: i32,
}

fn render<T: Serialize>(value: &T, human: String, code: i32) -> Result<Rendered> {
    let json = serde_json::to_value(value).map_err(|e| Error::Unsupported(format!("serialization failed: {e}")))?;
    Ok(Rendered { json, human, code })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => 1,
        _ => 2,
    }
}

pub fn max_degree() -> Result<usize> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{MAX_DEGREE_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Human => r.human,
                Format::Structured => serde_json::to_string_pretty(&r.json).expect("json values serialize"),
            };
            Outcome { code: r.code, stdout: stdout + "\n", stderr: String::new() }
        }
        Err(e) => Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Ctx {
    hf: Hyperfield,
    max_degree: usize,
}

impl Ctx {
    fn poly(&self, text: &str) -> Result<Polynomial> {
        let p = parse_poly(text, &self.hf)?;
        if p.degree() > self.max_degree {
            return Err(Error::DegreeLimit { degree: p.degree(), limit: self.max_degree });
        }
        Ok(p)
    }

    /// Rejects operands whose product would exceed the degree cap.
    fn product_of(&self, factors: &[&Polynomial]) -> Result<()> {
        let degree = factors.iter().map(|p| p.degree()).sum();
        if degree > self.max_degree {
            return Err(Error::DegreeLimit { degree, limit: self.max_degree });
        }
        Ok(())
    }

    fn expr(&self, text: &str) -> Result<ProductExpr> {
        let e = parse_expr(text, &self.hf)?;
        e.validate(self.max_degree)?;
        Ok(e)
    }

    fn elem(&self, text: &str) -> Result<Element> {
        self.hf.parse_element(text)
    }

    fn elems(&self, texts: &[String]) -> Result<Vec<Element>> {
        texts.iter().flat_map(|t| t.split(',')).filter(|t| !t.trim().is_empty()).map(|t| self.elem(t.trim())).collect()
    }
}

fn hyperfield(cli: &Cli, default: Option<&str>) -> Result<Hyperfield> {
    match (&cli.hf, default) {
        (Some(name), _) => Hyperfield::by_name(name),
        (None, Some(name)) => Hyperfield::by_name(name),
        (None, None) => Err(Error::Parse("missing --hf".into())),
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => 1,
        Verdict::Undecided => 3,
    }
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    if let Command::Repro { all, criterion } = &cli.command {
        return repro_cmd(*all, *criterion);
    }
    let tropical_cmd = matches!(cli.command, Command::TropRoots { .. } | Command::TropBox { .. });
    let hf = hyperfield(cli, tropical_cmd.then_some("T"))?;
    if tropical_cmd && !hf.is_tropical() {
        return Err(Error::HyperfieldMismatch(hf.name(), "T".into()));
    }
    let ctx = Ctx { hf, max_degree: max_degree()? };
    let hf = &ctx.hf;
    match &cli.command {
        Command::Eval { poly, at } => {
            let p = ctx.poly(poly)?;
            let a = ctx.elem(at)?;
            let value = p.eval(&a)?;
            let rep = EvalReport {
                hyperfield: hf.name(),
                polynomial: p.to_string(),
                at: hf.format_element(&a),
                value: hf.format_set(&value),
                is_root: value.contains(&hf.zero()),
            };
            let human = rep.value.clone();
            render(&rep, human, 0)
        }
        Command::Prod { p, q } | Command::Sum { p, q } => {
            let (p, q) = (ctx.poly(p)?, ctx.poly(q)?);
            let is_prod = matches!(cli.command, Command::Prod { .. });
            if is_prod {
                ctx.product_of(&[&p, &q])?;
            }
            let b = if is_prod { boxprod(&p, &q)? } else { boxsum(&p, &q)? };
            let members = if hf.is_finite() { Some(b.enumerate()?.iter().map(Polynomial::to_string).collect::<Vec<_>>()) } else { None };
            let rep = BoxReport {
                hyperfield: hf.name(),
                operation: if is_prod { "product" } else { "sum" }.into(),
                left: p.to_string(),
                right: q.to_string(),
                coefficients: b.coeffs().iter().map(|s| hf.format_set(s)).collect(),
                members,
            };
            let mut human = format!("coefficients (T^0 first): {}", b.label());
            if let Some(m) = &rep.members {
                human.push_str(&format!("\n{} members: {}", m.len(), m.join(", ")));
            }
            render(&rep, human, 0)
        }
        Command::Member { poly, expr } => {
            let (p, e) = (ctx.poly(poly)?, ctx.expr(expr)?);
            let cert = expr_member(&p, &e)?;
            let rep = MemberReport {
                hyperfield: hf.name(),
                polynomial: p.to_string(),
                expression: e.to_string(),
                verdict: cert.verdict,
                assignment: cert.assignment.iter().map(|(l, q)| format!("{l} = {q}")).collect(),
                reasons: cert.reasons.iter().flat_map(|r| r.describe(hf)).collect(),
                note: cert.note.clone(),
            };
            let mut lines = vec![verdict_word(cert.verdict).to_string()];
            lines.extend(rep.assignment.iter().map(|l| format!("  {l}")));
            lines.extend(rep.reasons.iter().map(|l| format!("  {l}")));
            lines.extend(rep.note.iter().map(|l| format!("  note: {l}")));
            render(&rep, lines.join("\n"), verdict_code(cert.verdict))
        }
        Command::Equal { left, right } => {
            let (l, r) = (ctx.expr(left)?, ctx.expr(right)?);
            let cert = expr_equal(&l, &r)?;
            let witness = cert.witness.as_ref().map(|w| WitnessReport::from_certs(hf, &w.membership, &w.refutation));
            let rep = EqualReport { hyperfield: hf.name(), left: l.to_string(), right: r.to_string(), verdict: cert.verdict, witness, note: cert.note.clone() };
            let code = match cert.verdict {
                EqualityVerdict::Equal => 0,
                EqualityVerdict::Unequal => 1,
                EqualityVerdict::Undecided => 3,
            };
            let mut lines = vec![format!("{:?}", cert.verdict).to_uppercase()];
            if let Some(w) = &rep.witness {
                lines.extend(witness_lines(w));
            }
            lines.extend(rep.note.iter().map(|n| format!("  note: {n}")));
            render(&rep, lines.join("\n"), code)
        }
        Command::Quotients { poly, at } => {
            let (p, a) = (ctx.poly(poly)?, ctx.elem(at)?);
            let qs = quotients(&p, &a)?;
            let rep = QuotientReport {
                hyperfield: hf.name(),
                polynomial: p.to_string(),
                at: hf.format_element(&a),
                is_root: !qs.is_empty(),
                domains: qs.domains.iter().map(|d| hf.format_set(d)).collect(),
                quotients: qs.representatives.iter().map(Polynomial::to_string).collect(),
                exhaustive: qs.exhaustive,
            };
            let human = if qs.is_empty() {
                format!("{} is not a root of {p}", rep.at)
            } else {
                let kind = if qs.exhaustive { "all quotients" } else { "representative quotients" };
                format!("coefficient domains (T^0 first): [ {} ]\n{kind}: {}", rep.domains.join(", "), rep.quotients.join(", "))
            };
            render(&rep, human, 0)
        }
        Command::Mult { poly, at } => {
            let (p, a) = (ctx.poly(poly)?, ctx.elem(at)?);
            let m = mult_at(&p, &a)?;
            let rep = MultReport { hyperfield: hf.name(), polynomial: p.to_string(), at: hf.format_element(&a), multiplicity: m, exact: true, levels: Vec::new() };
            render(&rep, m.to_string(), 0)
        }
        Command::MultSet { poly, region } => {
            let p = ctx.poly(poly)?;
            let s = hf.parse_set(region)?;
            let r: divide::MultSetResult = mult_set(&p, &s)?;
            let rep = MultReport { hyperfield: hf.name(), polynomial: p.to_string(), at: hf.format_set(&s), multiplicity: r.multiplicity, exact: r.exact, levels: r.levels };
            let mut lines = vec![if rep.exact { rep.multiplicity.to_string() } else { format!("at least {} (undecided beyond)", rep.multiplicity) }];
            lines.extend(rep.levels.iter().map(|l| format!("  {l}")));
            render(&rep, lines.join("\n"), if rep.exact { 0 } else { 3 })
        }
        Command::AssocCheck { p, q, r, all } => {
            let (p, q, r) = (ctx.poly(p)?, ctx.poly(q)?, ctx.poly(r)?);
            ctx.product_of(&[&p, &q, &r])?;
            let certs = if *all { assoc::assoc_check_all(&p, &q, &r)? } else { vec![assoc::assoc_check(&p, &q, &r)?] };
            let code = assoc_code(&certs);
            let human = certs.iter().map(assoc_lines).collect::<Vec<_>>().join("\n");
            if *all {
                render(&certs, human, code)
            } else {
                render(&certs[0], human, code)
            }
        }
        Command::AssocScan { max_deg, non_monic } => {
            let rep = assoc::assoc_scan(hf, *max_deg, !non_monic)?;
            let mut lines = vec![format!(
                "{} polynomials, {} triples, {} counterexamples",
                rep.polynomials,
                rep.triples_checked,
                rep.counterexamples.len()
            )];
            lines.extend(rep.counterexamples.iter().map(assoc_lines));
            render(&rep, lines.join("\n"), 0)
        }
        Command::OneOne => {
            let c = assoc::one_plus_one_criterion(hf)?;
            let mut lines = vec![format!("1 ⊞ 1 = {} ({})", c.one_plus_one, if c.singleton { "singleton; criterion inapplicable" } else { "not a singleton" })];
            if let Some(w) = &c.witness {
                lines.push(format!("  d1 = {}, d2 = {}", c.d1.clone().unwrap_or_default(), c.d2.clone().unwrap_or_default()));
                lines.extend(witness_lines(w));
            }
            render(&c, lines.join("\n"), 0)
        }
        Command::Pointwise { p, q, r, at } => {
            let (p, q, r) = (ctx.poly(p)?, ctx.poly(q)?, ctx.poly(r)?);
            ctx.product_of(&[&p, &q, &r])?;
            let pts = ctx.elems(at)?;
            let rep = assoc::pointwise_products_equal(&p, &q, &r, if pts.is_empty() { None } else { Some(&pts) })?;
            let lines: Vec<String> = rep
                .rows
                .iter()
                .map(|row| format!("a = {}: {} | {} | {} -> {}", row.at, row.products[0], row.products[1], row.products[2], if row.equal { "equal" } else { "differ" }))
                .collect();
            render(&rep, lines.join("\n"), if rep.all_equal { 0 } else { 1 })
        }
        Command::Axioms { probe } => {
            let rep = check_axioms(hf, &probe_spec(&ctx, probe)?);
            let mut lines = vec![format!("{} ({}, {} probe elements)", rep.hyperfield, if rep.exhaustive { "exhaustive" } else { "probe" }, rep.probe_size)];
            for r in &rep.results {
                let extra = r.counterexample.as_ref().map(|c| format!(" at {c}")).unwrap_or_default();
                lines.push(format!("  {} {}{extra}", if r.holds { "ok  " } else { "FAIL" }, r.axiom));
            }
            render(&rep, lines.join("\n"), if rep.all_hold() { 0 } else { 1 })
        }
        Command::Ddist { probe } => {
            let rep = is_doubly_distributive(hf, &probe_spec(&ctx, probe)?);
            let mut human = format!("{}: {} ({} quadruples)", rep.hyperfield, if rep.holds { "doubly distributive" } else { "not doubly distributive" }, rep.quadruples_checked);
            if let Some(c) = &rep.counterexample {
                human.push_str(&format!(
                    "\n  at ({}): product of sums {} vs sum of products {}",
                    c.quadruple.join(", "),
                    c.product_of_sums,
                    c.sum_of_products
                ));
            }
            render(&rep, human, if rep.holds { 0 } else { 1 })
        }
        Command::TropRoots { poly } => {
            let rep = tropical::root_multiset(&ctx.poly(poly)?)?;
            let human = format!("{{{}}}", rep.roots.join(", "));
            render(&rep, human, 0)
        }
        Command::TropBox { roots, check } => {
            let roots = ctx.elems(std::slice::from_ref(roots))?;
            if roots.len() > ctx.max_degree {
                return Err(Error::DegreeLimit { degree: roots.len(), limit: ctx.max_degree });
            }
            let b = tropical::linear_product_box(&roots)?;
            if *check {
                let cert = tropical::box_equivalence(&roots, ctx.max_degree)?;
                let mut lines = vec![format!("{} {}", if cert.equal { "EQUAL" } else { "DIFFERENT" }, cert.linear_product_box)];
                lines.extend(cert.forward_steps.iter().map(|l| format!("  {l}")));
                lines.push(format!("  {} box members peeled back to the first factor", cert.reverse_checked));
                lines.extend(cert.failures.iter().map(|l| format!("  failure: {l}")));
                let code = if cert.equal { 0 } else { 1 };
                return render(&cert, lines.join("\n"), code);
            }
            let coeffs: Vec<String> = b.coeffs().iter().map(|s| hf.format_set(s)).collect();
            render(&coeffs, b.label(), 0)
        }
        Command::Reducible { poly, bound } => {
            let c = tropical::is_reducible(&ctx.poly(poly)?, *bound)?;
            let mut lines = vec![format!("{:?}", c.verdict).to_uppercase()];
            if let Some((q, r)) = &c.factors {
                lines.push(format!("  {{{}}} = ({q})*({r})", c.polynomial));
            }
            lines.extend(c.trace.iter().map(|l| format!("  {l}")));
            if !c.note.is_empty() {
                lines.push(format!("  note: {}", c.note));
            }
            let code = if c.verdict == Reducibility::Undecided { 3 } else { 0 };
            render(&c, lines.join("\n"), code)
        }
        Command::Repro { .. } => unreachable!("handled above"),
    }
}

fn probe_spec(ctx: &Ctx, probe: &[String]) -> Result<ProbeSpec> {
    let g = ctx.elems(probe)?;
    Ok(if g.is_empty() { ProbeSpec::Default } else { ProbeSpec::Grid(g) })
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "YES",
        Verdict::No => "NO",
        Verdict::Undecided => "UNDECIDED",
    }
}

fn witness_lines(w: &WitnessReport) -> Vec<String> {
    let mut lines = vec![format!("  witness {} is in {} but not in {}", w.polynomial, w.member_of, w.excluded_from)];
    lines.extend(w.membership.iter().map(|l| format!("    {l}")));
    lines.extend(w.refutation.iter().map(|l| format!("    {l}")));
    lines
}

fn assoc_lines(c: &AssocCertificate) -> String {
    let kind = match c.kind {
        AssocKind::AssocHolds => "ASSOCIATIVE",
        AssocKind::Counterexample => "COUNTEREXAMPLE",
        AssocKind::Undecided => "UNDECIDED",
    };
    let mut lines = vec![format!("{kind}: {} vs {}", c.left, c.right)];
    if let Some(w) = &c.witness {
        lines.extend(witness_lines(w));
    }
    lines.extend(c.note.iter().map(|n| format!("  note: {n}")));
    lines.join("\n")
}

fn assoc_code(certs: &[AssocCertificate]) -> i32 {
    if certs.iter().any(|c| c.kind == AssocKind::Counterexample) {
        1
    } else if certs.iter().any(|c| c.kind == AssocKind::Undecided) {
        3
    } else {
        0
    }
}

fn repro_cmd(all: bool, criterion: Option<usize>) -> Result<Rendered> {
    let results = match (all, criterion) {
        (_, Some(id)) if (1..=repro::CRITERIA.len()).contains(&id) => vec![repro::run_one(id)],
        (_, Some(id)) => return Err(Error::Parse(format!("criterion must be between 1 and {}, got {id}", repro::CRITERIA.len()))),
        (true, None) => repro::run_all(),
        (false, None) => return Err(Error::Parse("repro needs --all or --criterion N".into())),
    };
    let all_passed = results.iter().all(|r| r.passed);
    let human = results
        .iter()
        .map(|r| format!("{:>2} {} {} ({} ms): {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title, r.millis, r.detail))
        .collect::<Vec<_>>()
        .join("\n");
    let rep = ReproReport { criteria: results, all_passed };
    render(&rep, human, if all_passed { 0 } else { 1 })
}
