//! Subcommands and their reports.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use tclab::closure::{
    cohomology, germ_piece, limit_member, limit_piece, main_theorem_check, schenzel_piece, tc0_piece, thm1_piece, tight_member, tight_piece, unmixed_piece, vanishing_bound_check,
    zero_maps_check, kodaira_check, Bounds, ClosureError, Method, TestElement,
};
use tclab::ideal::{ideal_piece, seq_ideal, sop_check, sop_suggest, SopData, SopError};
use tclab::poly::ParseError;
use tclab::ring::{dim_estimate, jacobian_and_isolated_check, section, RingError, DIM_TRIALS};
use tclab::sequence::{is_d_sequence, is_standard, is_usd, usd_power_search};
use tclab::verdict::{bound, combine};
use tclab::{GradedRing, Polynomial, Status, Verdict};

use crate::report::{Report, RingInfo, Table, WindowInfo};
use crate::ringfile::{resolve, LoadError};

#[derive(Debug, Parser)]
#[command(name = "tclab", version, about = "Graded rings over F_p: closures, local cohomology pieces and bounded checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function over the window.
    Hilbert(Common),
    /// Dimension estimate from generic forms.
    Dim(Common),
    /// Maximal minors of the Jacobian matrix.
    Jacobian(Common),
    /// Is the Jacobian ideal m-primary?
    IsolatedCheck(Common),
    /// Random homogeneous system of parameters.
    SopSuggest(Common),
    /// d-sequence check of --ideal (or the sop).
    DseqCheck(Common),
    /// USD check of --ideal (or the sop).
    UsdCheck(Common),
    /// Standard-sop check.
    StandardCheck(Common),
    /// Closure pieces, or membership of --elem.
    Closure {
        #[arg(value_enum)]
        kind: ClosureKind,
        #[command(flatten)]
        common: Common,
    },
    /// Graded pieces of local cohomology.
    Cohomology(Common),
    /// Tight closure of zero in top local cohomology.
    Tc0(Common),
    /// The ring modulo --elem.
    Section(Common),
    /// Bounded checks of the structural statements.
    Verify {
        #[arg(value_enum)]
        what: VerifyKind,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClosureKind {
    Limit,
    Tight,
    Germ,
    Unmixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Thm1,
    SchenzelAgree,
    Kodaira,
    ZeroMaps,
    VanishingBound,
    Main,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Schenzel,
    Thm1,
}

fn positive(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(format!("'{s}' is not a positive integer")),
    }
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    /// Ring file, or @poly2 / @fermat3 / @nodalline / @curve4.
    #[arg(long)]
    pub ring: String,
    /// Characteristic for built-in rings.
    #[arg(long = "char", default_value_t = 7)]
    pub characteristic: u64,
    /// Degree window LO..HI.
    #[arg(long, allow_hyphen_values = true, default_value = "-6..8")]
    pub window: String,
    #[arg(long, default_value = "6", value_parser = positive)]
    pub smax: u32,
    #[arg(long, default_value = "2", value_parser = positive)]
    pub emax: u32,
    #[arg(long, default_value = "3", value_parser = positive)]
    pub kmax: u32,
    #[arg(long, default_value = "2", value_parser = positive)]
    pub mmax: u32,
    #[arg(long, default_value = "2", value_parser = positive)]
    pub lmax: u32,
    /// Largest power tried by the USD power search.
    #[arg(long, default_value = "4", value_parser = positive)]
    pub nmax: u32,
    /// Sop powers N1,N2,...
    #[arg(long, value_delimiter = ',', default_value = "1,2,4", value_parser = positive)]
    pub powers: Vec<u32>,
    #[arg(long, default_value_t = 1200)]
    pub degree_cap: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sequence "f1; f2; ...".
    #[arg(long)]
    pub ideal: Option<String>,
    /// System of parameters "x1; x2; ..."; suggested from the seed if absent.
    #[arg(long)]
    pub sop: Option<String>,
    /// Degrees for sop-suggest, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = positive)]
    pub degrees: Option<Vec<u32>>,
    #[arg(long)]
    pub elem: Option<String>,
    /// Next parameter for the unmixed closure.
    #[arg(long)]
    pub next: Option<String>,
    /// "jacobian" or an element of the ring.
    #[arg(long = "test-elem", default_value = "jacobian")]
    pub test_elem: String,
    #[arg(long)]
    pub assert_test_element: bool,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    /// t for the vanishing bound (default: least sop degree).
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<i64>,
    /// N_i for the Kodaira-style check.
    #[arg(long = "ni", allow_hyphen_values = true, default_value_t = 1)]
    pub n_i: i64,
    #[arg(long, value_enum, default_value = "schenzel")]
    pub method: MethodArg,
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse '{text}': {source}")]
    Parse { text: String, source: ParseError },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Sop(#[from] SopError),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Load(e) => e.kind(),
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "polynomial",
            CliError::Ring(_) => "ring",
            CliError::Closure(ClosureError::Precondition(_)) => "precondition",
            CliError::Closure(_) => "closure",
            CliError::Sop(_) => "sop",
        }
    }

    pub fn details(&self) -> Value {
        match self {
            CliError::Load(e) => e.line().map_or(json!({}), |l| json!({"line": l})),
            CliError::Parse { source, text } => json!({"text": text, "position": source.position()}),
            _ => json!({}),
        }
    }
}

pub fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("window '{s}' is not of the form LO..HI with LO <= HI"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

struct Ctx {
    r: GradedRing,
    lo: i64,
    hi: i64,
    bounds: Bounds,
    args: Common,
}

impl Ctx {
    fn new(args: Common) -> Result<Self, CliError> {
        let (lo, hi) = parse_window(&args.window)?;
        let pres = resolve(&args.ring, args.characteristic)?;
        let r = GradedRing::with_seed(pres, 0)?;
        let bounds = Bounds {
            s_max: args.smax,
            e_max: args.emax,
            k_max: args.kmax,
            m_max: args.mmax,
            l_max: args.lmax,
            ladder: args.powers.clone(),
            degree_cap: args.degree_cap,
        };
        Ok(Self { r, lo, hi, bounds, args })
    }

    fn poly(&self, text: &str) -> Result<Polynomial, CliError> {
        let f = self.r.parse(text).map_err(|source| CliError::Parse { text: text.to_string(), source })?;
        if !f.is_homogeneous() {
            return Err(RingError::NotHomogeneous(f.to_string()).into());
        }
        Ok(f)
    }

    fn list(&self, text: &str) -> Result<Vec<Polynomial>, CliError> {
        text.split(';').map(str::trim).filter(|s| !s.is_empty()).map(|s| self.poly(s)).collect()
    }

    fn elem(&self) -> Result<Polynomial, CliError> {
        let text = self.args.elem.as_deref().ok_or_else(|| CliError::Usage("--elem is required".into()))?;
        self.poly(text)
    }

    /// The sop from --sop, or a suggested one; the verdict goes in the report.
    fn sop(&self) -> Result<(SopData, Verdict), CliError> {
        match &self.args.sop {
            Some(text) => {
                let xs = self.list(text)?;
                let v = sop_check(&self.r, &xs, 0, 0, self.args.seed)?;
                let mut sop = SopData::new(xs)?;
                sop.sop = Some(v.clone());
                Ok((sop, v))
            }
            None => {
                let w = self.r.weight_lcm();
                let sop = sop_suggest(&self.r, &vec![w; self.r.dim()], self.args.seed, 8)?;
                let v = sop.sop.clone().expect("suggested sops carry their check");
                Ok((sop, v))
            }
        }
    }

    /// The sequence from --ideal, else the sop.
    fn sequence(&self) -> Result<(Vec<Polynomial>, Vec<Verdict>), CliError> {
        match &self.args.ideal {
            Some(text) => Ok((self.list(text)?, vec![])),
            None => {
                let (sop, v) = self.sop()?;
                Ok((sop.elements, vec![v]))
            }
        }
    }

    fn ideal_seq(&self) -> Result<Vec<Polynomial>, CliError> {
        let text = self.args.ideal.as_deref().ok_or_else(|| CliError::Usage("--ideal is required".into()))?;
        self.list(text)
    }

    fn test_element(&self) -> Result<TestElement, CliError> {
        let mut te = if self.args.test_elem == "jacobian" {
            TestElement::jacobian(&self.r, self.args.seed)?
        } else {
            let c = self.poly(&self.args.test_elem)?;
            TestElement::user(&self.r, c, false)?
        };
        if self.args.assert_test_element {
            te.certified = true;
        }
        Ok(te)
    }

    fn report(&self, command: String, verdicts: Vec<Verdict>, tables: Vec<Table>) -> Report {
        Report {
            command,
            ring: RingInfo::of(&self.r),
            window: WindowInfo::new(self.lo, self.hi, &self.bounds),
            verdicts,
            tables,
            seed: self.args.seed,
        }
    }

    fn power(&self) -> u32 {
        self.bounds.ladder.first().copied().unwrap_or(1)
    }
}

fn names(xs: &[Polynomial]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn sop_table(sop: &SopData) -> Table {
    let mut t = Table::new("sop");
    for (x, d) in sop.elements.iter().zip(&sop.degrees) {
        t.rows.push(json!({"element": x.to_string(), "degree": d}));
    }
    t
}

fn te_table(te: &TestElement) -> Table {
    let mut t = Table::new("test_element");
    t.rows.push(json!({"c": te.c.to_string(), "source": te.source, "certified": te.certified, "evidence": te.evidence.status.to_string()}));
    t
}

/// Parse argv and run; returns the exit code, the text for standard output
/// and whether JSON was requested.
pub fn execute(cli: Cli) -> Result<(Report, bool), CliError> {
    let (name, common) = match &cli.command {
        Command::Hilbert(c) => ("hilbert".to_string(), c),
        Command::Dim(c) => ("dim".into(), c),
        Command::Jacobian(c) => ("jacobian".into(), c),
        Command::IsolatedCheck(c) => ("isolated-check".into(), c),
        Command::SopSuggest(c) => ("sop-suggest".into(), c),
        Command::DseqCheck(c) => ("dseq-check".into(), c),
        Command::UsdCheck(c) => ("usd-check".into(), c),
        Command::StandardCheck(c) => ("standard-check".into(), c),
        Command::Closure { kind, common } => (format!("closure {}", kind.to_possible_value().expect("named").get_name()), common),
        Command::Cohomology(c) => ("cohomology".into(), c),
        Command::Tc0(c) => ("tc0".into(), c),
        Command::Section(c) => ("section".into(), c),
        Command::Verify { what, common } => (format!("verify {}", what.to_possible_value().expect("named").get_name()), common),
    };
    let text = common.text;
    let ctx = Ctx::new(common.clone())?;
    let (verdicts, tables) = match &cli.command {
        Command::Hilbert(_) => hilbert(&ctx),
        Command::Dim(_) => dim(&ctx),
        Command::Jacobian(_) => jacobian(&ctx, false),
        Command::IsolatedCheck(_) => jacobian(&ctx, true),
        Command::SopSuggest(_) => sop_suggest_cmd(&ctx)?,
        Command::DseqCheck(_) => dseq(&ctx)?,
        Command::UsdCheck(_) => usd(&ctx)?,
        Command::StandardCheck(_) => standard(&ctx)?,
        Command::Closure { kind, .. } => closure(&ctx, *kind)?,
        Command::Cohomology(_) => cohomology_cmd(&ctx)?,
        Command::Tc0(_) => tc0(&ctx)?,
        Command::Section(_) => section_cmd(&ctx)?,
        Command::Verify { what, .. } => verify(&ctx, *what)?,
    };
    Ok((ctx.report(name, verdicts, tables), !text))
}

type Out = (Vec<Verdict>, Vec<Table>);

fn hilbert(ctx: &Ctx) -> Out {
    let mut t = Table::new("hilbert");
    for (n, d) in ctx.r.hilbert(ctx.lo, ctx.hi) {
        t.rows.push(json!({"n": n, "dim": d}));
    }
    (vec![], vec![t])
}

fn dim(ctx: &Ctx) -> Out {
    let est = dim_estimate(&ctx.r, DIM_TRIALS, ctx.args.seed);
    let mut verdicts = vec![est.verdict.clone()];
    if let (Some(declared), Some(d)) = (ctx.r.presentation().declared_dim(), est.dim) {
        let agree = declared == d;
        verdicts.push(
            Verdict::new(
                format!("declared dimension {declared} matches the estimate"),
                if agree { Status::EvidenceTrue } else { Status::EvidenceFalse },
                bound(&[("trials", DIM_TRIALS as i64)]),
            )
            .with_witness("estimate", d as u64),
        );
    }
    let mut t = Table::new("dimension");
    t.rows.push(json!({"dim": ctx.r.dim(), "provenance": ctx.r.dim_provenance().to_string(), "estimate": est.dim}));
    (verdicts, vec![t])
}

fn jacobian(ctx: &Ctx, verdict: bool) -> Out {
    let rep = jacobian_and_isolated_check(&ctx.r);
    let mut t = Table::new("jacobian_minors");
    for g in rep.ideal.gens() {
        t.rows.push(json!({"minor": g.to_string(), "degree": g.degree()}));
    }
    let verdicts = if verdict { vec![rep.verdict] } else { vec![] };
    (verdicts, vec![t])
}

fn sop_suggest_cmd(ctx: &Ctx) -> Result<Out, CliError> {
    let w = ctx.r.weight_lcm();
    let degrees = ctx.args.degrees.clone().unwrap_or_else(|| vec![w; ctx.r.dim()]);
    let sop = sop_suggest(&ctx.r, &degrees, ctx.args.seed, 8)?;
    let v = sop.sop.clone().expect("checked");
    Ok((vec![v], vec![sop_table(&sop)]))
}

fn dseq(ctx: &Ctx) -> Result<Out, CliError> {
    let (xs, mut verdicts) = ctx.sequence()?;
    verdicts.push(is_d_sequence(&ctx.r, &xs, ctx.lo, ctx.hi));
    Ok((verdicts, vec![]))
}

fn usd(ctx: &Ctx) -> Result<Out, CliError> {
    let (xs, mut verdicts) = ctx.sequence()?;
    verdicts.push(is_usd(&ctx.r, &xs, ctx.bounds.m_max, ctx.lo, ctx.hi));
    let (n, v) = usd_power_search(&ctx.r, &xs, ctx.args.nmax, ctx.bounds.m_max, ctx.lo, ctx.hi);
    let mut t = Table::new("usd_power_search");
    t.rows.push(json!({"power": n, "status": v.status.to_string()}));
    Ok((verdicts, vec![t]))
}

fn standard(ctx: &Ctx) -> Result<Out, CliError> {
    let (xs, mut verdicts) = ctx.sequence()?;
    let sop = SopData::new(xs)?;
    verdicts.push(is_standard(&ctx.r, &sop, ctx.lo, ctx.hi));
    Ok((verdicts, vec![sop_table(&sop)]))
}

fn closure(ctx: &Ctx, kind: ClosureKind) -> Result<Out, CliError> {
    let r = &ctx.r;
    let xs = ctx.ideal_seq()?;
    let ideal = seq_ideal(r, &xs);
    let b = &ctx.bounds;
    let needs_te = matches!(kind, ClosureKind::Tight | ClosureKind::Germ);
    let te = if needs_te { Some(ctx.test_element()?) } else { None };
    let next = match kind {
        ClosureKind::Unmixed => {
            let text = ctx.args.next.as_deref().ok_or_else(|| CliError::Usage("--next is required for the unmixed closure".into()))?;
            Some(ctx.poly(text)?)
        }
        _ => None,
    };
    let mut tables = vec![];
    if let Some(te) = &te {
        tables.push(te_table(te));
    }
    if ctx.args.elem.is_some() {
        let z = ctx.elem()?;
        let v = match kind {
            ClosureKind::Limit => limit_member(r, &z, &xs, b.s_max),
            ClosureKind::Tight => tight_member(r, &z, &ideal, te.as_ref().expect("built"), b),
            ClosureKind::Germ => {
                let z = r.nf(&z);
                let n = z.degree().unwrap_or(0) as i64;
                let (space, v) = germ_piece(r, &xs, n, te.as_ref().expect("built"), b);
                let holds = z.is_zero() || space.contains(&r.coords(&z, n)).expect("same degree");
                let status = match (holds, v.status) {
                    (_, Status::Inconclusive) => Status::Inconclusive,
                    (true, _) => Status::EvidenceTrue,
                    (false, _) => Status::EvidenceFalse,
                };
                Verdict::new(format!("{z} in ({})^germ", names(&xs).join(", ")), status, v.bound.clone()).with_assumptions(&v.assumptions)
            }
            ClosureKind::Unmixed => {
                let z = r.nf(&z);
                let n = z.degree().unwrap_or(0) as i64;
                let space = unmixed_piece(r, &xs, next.as_ref().expect("parsed"), n)?;
                let holds = z.is_zero() || space.contains(&r.coords(&z, n)).expect("same degree");
                Verdict::certified(format!("{z} in ({}) : {}", names(&xs).join(", "), next.as_ref().expect("parsed")), holds)
            }
        };
        return Ok((vec![v], tables));
    }
    let mut t = Table::new(format!("{}_pieces", kind.to_possible_value().expect("named").get_name()));
    let mut parts = Vec::new();
    for n in ctx.lo..=ctx.hi {
        let base = ideal_piece(r, &ideal, n).dim();
        let (dim, extra) = match kind {
            ClosureKind::Limit => {
                let l = limit_piece(r, &xs, n, b.s_max);
                (l.space.dim(), json!({"stable_from": l.stable_from}))
            }
            ClosureKind::Tight => {
                let tp = tight_piece(r, &ideal, n, te.as_ref().expect("built"), b);
                let st = tp.verdict.status.to_string();
                parts.push(tp.verdict);
                (tp.space.dim(), json!({"status": st}))
            }
            ClosureKind::Germ => {
                let (space, v) = germ_piece(r, &xs, n, te.as_ref().expect("built"), b);
                let st = v.status.to_string();
                parts.push(v);
                (space.dim(), json!({"status": st}))
            }
            ClosureKind::Unmixed => (unmixed_piece(r, &xs, next.as_ref().expect("parsed"), n)?.dim(), json!({})),
        };
        let mut row = json!({"n": n, "ambient": r.piece_dim(n), "ideal": base, "closure": dim});
        if let (Some(m), Value::Object(e)) = (row.as_object_mut(), extra) {
            m.extend(e);
        }
        t.rows.push(row);
    }
    tables.push(t);
    let verdicts = if parts.is_empty() {
        vec![]
    } else {
        let mut bd = bound(&[("window_lo", ctx.lo), ("window_hi", ctx.hi)]);
        bd.insert("e_max".into(), b.e_max as i64);
        vec![combine("closure pieces over the window", &parts, bd)]
    };
    Ok((verdicts, tables))
}

fn cohomology_cmd(ctx: &Ctx) -> Result<Out, CliError> {
    let r = &ctx.r;
    let d = r.dim();
    let (sop, sv) = ctx.sop()?;
    let mut verdicts = vec![sv];
    let indices: Vec<usize> = match ctx.args.i {
        Some(i) if i > d => return Err(CliError::Usage(format!("--i {i} exceeds the dimension {d}"))),
        Some(i) => vec![i],
        None => (0..=d).collect(),
    };
    let te = match ctx.args.method {
        MethodArg::Thm1 => Some(ctx.test_element()?),
        MethodArg::Schenzel => None,
    };
    let mut t = Table::new("cohomology");
    for i in indices {
        let method = if i == d {
            Method::TopLimit
        } else if te.is_some() {
            Method::Thm1
        } else {
            Method::Schenzel
        };
        let rep = cohomology(r, i, ctx.lo, ctx.hi, &sop, ctx.power(), method, te.as_ref(), &ctx.bounds)?;
        let mut parts = Vec::new();
        for e in &rep.entries {
            t.rows.push(json!({
                "i": e.i, "n": e.n, "dim": e.dim, "method": e.method, "sop": rep.sop, "power": e.power,
                "raw_degree": e.raw_degree, "status": e.verdict.status.to_string(),
            }));
            parts.push(e.verdict.clone());
        }
        let mut bd = bound(&[("window_lo", ctx.lo), ("window_hi", ctx.hi)]);
        if method == Method::TopLimit {
            bd.insert("k_max".into(), ctx.bounds.k_max as i64);
        }
        verdicts.push(combine(format!("[H^{i}]_n computed over the window ({method})"), &parts, bd));
    }
    Ok((verdicts, vec![sop_table(&sop), t]))
}

fn tc0(ctx: &Ctx) -> Result<Out, CliError> {
    let (sop, sv) = ctx.sop()?;
    let te = ctx.test_element()?;
    let mut t = Table::new("tc0");
    let mut verdicts = vec![sv];
    for n in ctx.lo..=ctx.hi {
        let p = tc0_piece(&ctx.r, n, &sop, &te, &ctx.bounds)?;
        t.rows.push(json!({
            "n": n, "dim": p.dim,
            "stages": p.stages.iter().map(|(k, m, d)| json!({"k": k, "raw_degree": m, "dim": d})).collect::<Vec<_>>(),
            "status": p.verdict.status.to_string(),
        }));
        verdicts.push(p.verdict);
    }
    Ok((verdicts, vec![sop_table(&sop), te_table(&te), t]))
}

fn section_cmd(ctx: &Ctx) -> Result<Out, CliError> {
    let x = ctx.elem()?;
    let s = section(&ctx.r, &x)?;
    let mut info = Table::new("section");
    info.rows.push(json!({
        "element": x.to_string(), "dim": s.dim(), "provenance": s.dim_provenance().to_string(),
        "relations": names(s.presentation().relations()),
    }));
    let mut h = Table::new("section_hilbert");
    for (n, d) in s.hilbert(ctx.lo, ctx.hi) {
        h.rows.push(json!({"n": n, "dim": d}));
    }
    Ok((vec![], vec![info, h]))
}

fn verify(ctx: &Ctx, what: VerifyKind) -> Result<Out, CliError> {
    let r = &ctx.r;
    let d = r.dim();
    let b = &ctx.bounds;
    let (sop, sv) = ctx.sop()?;
    let mut verdicts = vec![sv];
    let mut tables = vec![sop_table(&sop)];
    match what {
        VerifyKind::Thm1 | VerifyKind::SchenzelAgree => {
            let te = ctx.test_element()?;
            tables.push(te_table(&te));
            let mut t = Table::new(if what == VerifyKind::Thm1 { "thm1_power_stability" } else { "schenzel_agreement" });
            let mut parts = Vec::new();
            let mut first_bad: Option<Value> = None;
            for i in 0..d {
                for n in ctx.lo..=ctx.hi {
                    let mut dims = Vec::new();
                    for &power in &b.ladder {
                        let th = thm1_piece(r, i, n, &sop, power, &te, b)?;
                        parts.push(th.verdict.clone());
                        if what == VerifyKind::SchenzelAgree {
                            let sc = schenzel_piece(r, i, n, &sop, power)?;
                            let agree = sc.dim == th.dim;
                            let row = json!({"i": i, "n": n, "power": power, "schenzel": sc.dim, "thm1": th.dim, "agree": agree});
                            if !agree && first_bad.is_none() {
                                first_bad = Some(row.clone());
                            }
                            t.rows.push(row);
                        }
                        dims.push(th.dim);
                    }
                    if what == VerifyKind::Thm1 {
                        let stable = dims.windows(2).all(|w| w[0] == w[1]);
                        let row = json!({"i": i, "n": n, "dims": dims, "stable": stable});
                        if !stable && first_bad.is_none() {
                            first_bad = Some(row.clone());
                        }
                        t.rows.push(row);
                    }
                }
            }
            let claim = if what == VerifyKind::Thm1 { "tight/limit dims independent of the sop power" } else { "colon and tight/limit routes agree" };
            let mut bd = bound(&[("window_lo", ctx.lo), ("window_hi", ctx.hi), ("e_max", b.e_max as i64), ("s_max", b.s_max as i64)]);
            bd.insert("max_power".into(), b.ladder.iter().copied().max().unwrap_or(1) as i64);
            let mut v = combine(claim, &parts, bd);
            if let Some(row) = first_bad {
                v.status = Status::EvidenceFalse;
                v = v.with_witness("first_disagreement", row);
            }
            verdicts.push(v);
            tables.push(t);
        }
        VerifyKind::Kodaira => {
            let te = ctx.test_element()?;
            let i = ctx.args.i.unwrap_or(d.saturating_sub(1));
            verdicts.push(kodaira_check(r, i, ctx.args.n_i, &sop, ctx.power(), ctx.lo, ctx.hi, &te, b)?);
            tables.push(te_table(&te));
        }
        VerifyKind::ZeroMaps => {
            let te = ctx.test_element()?;
            verdicts.push(zero_maps_check(r, &sop, ctx.power(), ctx.lo, ctx.hi, &te, b)?);
            tables.push(te_table(&te));
        }
        VerifyKind::VanishingBound => {
            let t = ctx.args.t.unwrap_or_else(|| sop.degrees.iter().copied().min().unwrap_or(1) as i64);
            verdicts.push(vanishing_bound_check(r, &sop, t, ctx.lo, ctx.hi)?);
        }
        VerifyKind::Main => {
            let te = ctx.test_element()?;
            let n = ctx.args.n.unwrap_or(0);
            let rep = main_theorem_check(r, n, &sop, &te, b)?;
            let mut t = Table::new("main_theorem");
            verdicts.push(rep.tc0.verdict.clone());
            // injectivity and condition (ii) are facts about the ring, reported in the table rather than as claims
            for row in rep.rows {
                t.rows.push(json!({
                    "l": row.l, "a": row.a,
                    "injective": row.injectivity.status.is_true(),
                    "inclusion_degree": row.inclusion_degree,
                    "inclusion_left": row.inclusion_left, "inclusion_right": row.inclusion_right,
                    "condition_ii": row.condition_ii.status.is_true(),
                    "predicted_nonvanishing": row.predicted_nonvanishing,
                    "computed_dim": row.computed_dim,
                    "injectivity_verdict": row.injectivity,
                    "condition_ii_verdict": row.condition_ii,
                }));
                verdicts.push(row.inclusion);
                verdicts.push(row.consistency);
            }
            verdicts.push(rep.injective_case);
            tables.push(te_table(&te));
            tables.push(t);
        }
    }
    Ok((verdicts, tables))
}
