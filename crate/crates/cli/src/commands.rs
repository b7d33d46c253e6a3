use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use codesign::acceptance::{criteria, find, optional_criteria};
use codesign::bridge::{self, AmCheck, AmWeight};
use codesign::code::DualityRelation;
use codesign::constructions::{self as cons, GolayVariant};
use codesign::design::{self, bruck_ryser_excludes, is_admissible, lambda_s, Admissibility};
use codesign::enumerators::{self as en, WeightDistribution};
use codesign::io::{parse_code, parse_design, write_code, write_design};
use codesign::schemes::{hamming_scheme, johnson_scheme, verify_scheme};
use codesign::{Design, DesignParams, Error, LinearCode};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::Value;

use crate::{Construct, Ctx, Format, Scheme};

/// Exit 1 for a failed claim, 2 for bad input or exceeded limits.
pub enum Failure {
    Claim(String),
    Input(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Claim(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Claim(m) | Failure::Input(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrity(_)
            | Error::HypothesisFails { .. }
            | Error::NotAScheme(_)
            | Error::DimensionMismatch { .. }
            | Error::ConstructionFailed(_) => Failure::Claim(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// The rendered result, and the reason for exit 1 when a claim did not hold.
pub struct Reply {
    pub body: String,
    pub failed: Option<String>,
}

type Out = Result<Reply, Failure>;

fn ok(body: String) -> Out {
    Ok(Reply { body, failed: None })
}

fn render<T: Serialize>(ctx: &Ctx, report: &T, text: impl FnOnce() -> String) -> String {
    match ctx.format {
        Format::Text => text(),
        Format::Report => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<LinearCode, Failure> {
    Ok(parse_code(&read(path)?)?)
}

fn load_design(path: &Path) -> Result<Design, Failure> {
    Ok(parse_design(&read(path)?)?)
}

fn dist_map(wd: &WeightDistribution) -> BTreeMap<usize, u128> {
    wd.pairs().into_iter().collect()
}

fn witt24(budget: u128) -> Result<Design, Failure> {
    Ok(bridge::design_from_code(&cons::golay(GolayVariant::B24Hexacode)?, 8, budget)?)
}

pub fn construct(what: Construct, ctx: &Ctx) -> Out {
    let code = match what {
        Construct::Hamming { q, m } => cons::hamming(q, m)?,
        Construct::ExtHamming8 => cons::extended_hamming8(),
        Construct::ReedMuller { r, m } => cons::reed_muller(r, m)?,
        Construct::Qr { n, q } => cons::qr_code(n, q)?,
        Construct::Pless { q } => cons::pless_symmetry(q)?,
        Construct::Golay { variant } => cons::golay(variant)?,
        Construct::Hexacode => cons::hexacode(),
        Construct::Lexicode { n, d } => cons::lexicode(n, d)?,
        Construct::Design { name } => {
            let d = if name == "witt24" { witt24(ctx.budget)? } else { cons::catalog_design(&name)? };
            return ok(write_design(&d));
        }
        Construct::Pg { d, q, i } => return ok(write_design(&cons::pg_design(d, q, i)?)),
        Construct::Ag { d, q, i } => return ok(write_design(&cons::ag_design(d, q, i)?)),
    };
    ok(write_code(&code))
}

#[derive(Serialize)]
struct Analysis {
    q: usize,
    n: usize,
    k: usize,
    d: usize,
    self_dual: bool,
    self_orthogonal: bool,
    cyclic: bool,
    perfect: bool,
    weight_distribution: BTreeMap<usize, u128>,
    am: AmSummary,
}

#[derive(Serialize)]
struct AmSummary {
    t: Option<usize>,
    weights: Vec<usize>,
}

pub fn analyze(path: &Path, ctx: &Ctx) -> Out {
    let c = load_code(path)?;
    let (q, n, k) = (c.q(), c.n(), c.k());
    let wd = en::weight_distribution(&c, ctx.budget)?;
    let d = wd.min_weight().ok_or(Error::ZeroCode)?;
    let relation = c.duality_relation();
    let am = if k == n {
        AmSummary { t: None, weights: Vec::new() }
    } else {
        let dual = en::macwilliams(&wd, n, k, q)?;
        let t = bridge::largest_am_strength(&wd, &dual);
        let weights = match t {
            Some(_) => (d..=bridge::weight_cap(n, q, d).min(n - 1)).filter(|&w| wd.get(w) > 0).collect(),
            None => Vec::new(),
        };
        AmSummary { t, weights }
    };
    let report = Analysis {
        q,
        n,
        k,
        d,
        self_dual: relation == DualityRelation::SelfDual,
        self_orthogonal: relation != DualityRelation::Neither,
        cyclic: c.is_cyclic(),
        perfect: en::perfectness_from(n, k, q, d).perfect,
        weight_distribution: dist_map(&wd),
        am,
    };
    ok(render(ctx, &report, || {
        let r = &report;
        let t = r.am.t.map_or("none".to_string(), |t| t.to_string());
        let weights: Vec<String> = r.am.weights.iter().map(usize::to_string).collect();
        format!(
            "q {}\nn {}\nk {}\nd {}\nself_dual {}\nself_orthogonal {}\ncyclic {}\nperfect {}\nweight_distribution {}\nam_t {}\nam_weights {}\n",
            r.q, r.n, r.k, r.d, r.self_dual, r.self_orthogonal, r.cyclic, r.perfect, wd, t, weights.join(" ")
        )
    }))
}

pub fn dual(path: &Path) -> Out {
    ok(write_code(&load_code(path)?.dual()?))
}

pub fn extend(path: &Path) -> Out {
    ok(write_code(&load_code(path)?.extend()))
}

pub fn puncture(path: &Path, pos: usize) -> Out {
    ok(write_code(&load_code(path)?.puncture(pos)?))
}

#[derive(Serialize)]
struct Weights {
    n: usize,
    k: usize,
    weight_distribution: BTreeMap<usize, u128>,
}

pub fn weights(path: &Path, ctx: &Ctx) -> Out {
    let c = load_code(path)?;
    let wd = en::weight_distribution(&c, ctx.budget)?;
    let report = Weights { n: c.n(), k: c.k(), weight_distribution: dist_map(&wd) };
    ok(render(ctx, &report, || format!("{wd}\n")))
}

pub fn macwilliams(
    code: Option<&Path>,
    dist: Option<String>,
    n: Option<usize>,
    k: Option<usize>,
    q: Option<usize>,
    ctx: &Ctx,
) -> Out {
    let (wd, n, k, q) = match (code, dist) {
        (Some(path), _) => {
            let c = load_code(path)?;
            (en::weight_distribution(&c, ctx.budget)?, c.n(), c.k(), c.q())
        }
        (None, Some(s)) => {
            let (n, k, q) = (n.unwrap_or(0), k.unwrap_or(0), q.unwrap_or(0));
            (WeightDistribution::parse(&s, n)?, n, k, q)
        }
        (None, None) => return Err(Failure::Input("give a code file or --dist with --n, --k and --q".into())),
    };
    let dual = en::macwilliams(&wd, n, k, q)?;
    let report = Weights { n, k: n - k, weight_distribution: dist_map(&dual) };
    ok(render(ctx, &report, || format!("{dual}\n")))
}

#[derive(Serialize)]
struct DesignClaim {
    expected: String,
    found: Option<String>,
    holds: bool,
}

#[derive(Serialize)]
struct Perfect {
    n: usize,
    k: usize,
    q: usize,
    d: usize,
    e: usize,
    sphere_size: String,
    perfect: bool,
    design: Option<DesignClaim>,
    extended_design: Option<DesignClaim>,
}

fn claim(expected: &DesignParams, lambda: Option<u64>) -> DesignClaim {
    DesignClaim {
        expected: expected.to_string(),
        found: lambda.map(|l| DesignParams { lambda: l, ..*expected }.to_string()),
        holds: lambda == Some(expected.lambda),
    }
}

pub fn perfect(path: &Path, ctx: &Ctx) -> Out {
    let c = load_code(path)?;
    let p = en::perfectness(&c, ctx.budget)?;
    let (mut design, mut extended_design, mut consistent) = (None, None, true);
    if p.d % 2 == 1 {
        let r = bridge::perfect_design_check(&c, ctx.budget)?;
        consistent = r.consistent();
        design = Some(claim(&r.expected, r.found.lambda));
        extended_design = r.extension.as_ref().map(|(params, v)| claim(params, v.lambda));
    }
    let report = Perfect {
        n: c.n(),
        k: c.k(),
        q: c.q(),
        d: p.d,
        e: p.e,
        sphere_size: p.sphere_size.to_string(),
        perfect: p.perfect,
        design,
        extended_design,
    };
    let body = render(ctx, &report, || {
        let r = &report;
        let mut s = format!(
            "n {}\nk {}\nq {}\nd {}\ne {}\nsphere_size {}\nperfect {}\n",
            r.n, r.k, r.q, r.d, r.e, r.sphere_size, r.perfect
        );
        for (label, dc) in [("design", &r.design), ("extended_design", &r.extended_design)] {
            if let Some(dc) = dc {
                let found = dc.found.as_deref().unwrap_or("none");
                s += &format!("{label} expected {} found {} holds {}\n", dc.expected, found, dc.holds);
            }
        }
        s
    });
    let failed = if !consistent {
        Some("minimum-weight supports disagree with the sphere-packing verdict".to_string())
    } else if !p.perfect {
        Some("code is not perfect".to_string())
    } else {
        None
    };
    Ok(Reply { body, failed })
}

pub fn extract_design(path: &Path, w: usize, ctx: &Ctx) -> Out {
    let c = load_code(path)?;
    ok(write_design(&bridge::design_from_code(&c, w, ctx.budget)?))
}

#[derive(Serialize)]
struct Witness {
    subset: Vec<u32>,
    count: u64,
}

#[derive(Serialize)]
struct Verification {
    t: usize,
    v: usize,
    k: usize,
    b: usize,
    is_design: bool,
    lambda: Option<u64>,
    witness: Option<Witness>,
}

pub fn verify_design(path: &Path, t: usize, ctx: &Ctx) -> Out {
    let d = load_design(path)?;
    let r = design::verify_t_design(&d, t, ctx.budget)?;
    let report = Verification {
        t,
        v: d.v(),
        k: d.k(),
        b: d.b(),
        is_design: r.is_design,
        lambda: r.lambda,
        witness: r.witness.map(|(subset, count)| Witness { subset, count }),
    };
    let body = render(ctx, &report, || match (report.lambda, &report.witness) {
        (Some(lambda), _) => format!("{}\n", DesignParams { t, v: d.v(), k: d.k(), lambda }),
        (None, Some(w)) => {
            let pts: Vec<String> = w.subset.iter().map(u32::to_string).collect();
            format!("not a {t}-design: points {} lie in {} blocks\n", pts.join(" "), w.count)
        }
        (None, None) => format!("not a {t}-design: some {t}-subset lies in no block\n"),
    });
    let failed = (!r.is_design).then(|| format!("not a {t}-design"));
    Ok(Reply { body, failed })
}

fn ratio_value(r: &Ratio<u128>) -> Value {
    if r.is_integer() {
        if let Ok(x) = u64::try_from(r.to_integer()) {
            return Value::from(x);
        }
    }
    Value::from(r.to_string())
}

#[derive(Serialize)]
struct Params {
    params: String,
    b: Value,
    r: Value,
    admissible: bool,
    non_integral: Option<(usize, String)>,
    bruck_ryser_excluded: bool,
}

pub fn design_params(t: usize, v: usize, k: usize, lambda: u64, ctx: &Ctx) -> Out {
    let p = DesignParams::new(t, v, k, lambda)?;
    let (b, r) = (lambda_s(&p, 0), lambda_s(&p, 1.min(t)));
    let non_integral = match is_admissible(&p) {
        Admissibility::Admissible => None,
        Admissibility::Inadmissible { s, lambda_s } => Some((s, lambda_s.to_string())),
    };
    // a symmetric 2-(n^2+n+1, n+1, 1) design is a projective plane of order n
    let plane = t == 2 && lambda == 1 && k >= 3 && v == k * k - k + 1;
    let excluded = plane && bruck_ryser_excludes((k - 1) as u64);
    let report = Params {
        params: p.to_string(),
        b: ratio_value(&b),
        r: ratio_value(&r),
        admissible: non_integral.is_none(),
        non_integral: non_integral.clone(),
        bruck_ryser_excluded: excluded,
    };
    let body = render(ctx, &report, || {
        let mut s = format!("params {p}\nb {b}\nr {r}\nadmissible {}\n", report.admissible);
        if let Some((i, l)) = &non_integral {
            s += &format!("lambda_{i} {l}\n");
        }
        if excluded {
            s += &format!("bruck_ryser no projective plane of order {}\n", k - 1);
        }
        s
    });
    let failed = match (&non_integral, excluded) {
        (Some((i, l)), _) => Some(format!("lambda_{i} = {l} is not an integer")),
        (None, true) => Some(format!("no projective plane of order {} exists", k - 1)),
        _ => None,
    };
    Ok(Reply { body, failed })
}

pub fn derive(path: &Path, point: usize) -> Out {
    ok(write_design(&design::derived(&load_design(path)?, point)?))
}

pub fn complement(path: &Path) -> Out {
    ok(write_design(&design::complement(&load_design(path)?)?))
}

#[derive(Serialize)]
struct AmEntry {
    weight: usize,
    status: &'static str,
    blocks: Option<usize>,
    design: Option<String>,
}

#[derive(Serialize)]
struct AmOut {
    t: usize,
    d: usize,
    dual_d: usize,
    n0: usize,
    m0: usize,
    dual_weight_count: usize,
    code_weights: Vec<AmEntry>,
    dual_weights: Vec<AmEntry>,
    all_confirmed: bool,
}

fn am_entry(w: &AmWeight, t: usize, n: usize) -> AmEntry {
    let (status, blocks, design) = match &w.check {
        AmCheck::Verified { blocks, lambda } => {
            ("verified", Some(*blocks), Some(DesignParams { t, v: n, k: w.weight, lambda: *lambda }.to_string()))
        }
        AmCheck::Failed { blocks, .. } => ("failed", Some(*blocks), None),
        AmCheck::TheoremOnly => ("theorem-only", None, None),
    };
    AmEntry { weight: w.weight, status, blocks, design }
}

pub fn assmus_mattson(path: &Path, t: Option<usize>, ctx: &Ctx) -> Out {
    let c = load_code(path)?;
    let (n, k, q) = (c.n(), c.k(), c.q());
    let t = match t {
        Some(t) => t,
        None => {
            if k == n {
                return Err(Error::ZeroDual.into());
            }
            let wd = en::weight_distribution(&c, ctx.budget)?;
            let dual = en::macwilliams(&wd, n, k, q)?;
            bridge::largest_am_strength(&wd, &dual)
                .ok_or_else(|| Failure::Claim("no strength meets the Assmus-Mattson hypothesis".into()))?
        }
    };
    let r = bridge::assmus_mattson(&c, t, ctx.budget)?;
    let report = AmOut {
        t,
        d: r.d,
        dual_d: r.e,
        n0: r.n0,
        m0: r.m0,
        dual_weight_count: r.dual_weight_count,
        code_weights: r.code_weights.iter().map(|w| am_entry(w, t, n)).collect(),
        dual_weights: r.dual_weights.iter().map(|w| am_entry(w, t, n)).collect(),
        all_confirmed: r.all_confirmed(),
    };
    let body = render(ctx, &report, || {
        let a = &report;
        let mut s = format!(
            "t {}\nd {}\ndual_d {}\nn0 {}\nm0 {}\ndual_weight_count {}\n",
            a.t, a.d, a.dual_d, a.n0, a.m0, a.dual_weight_count
        );
        for (side, list) in [("code", &a.code_weights), ("dual", &a.dual_weights)] {
            for e in list {
                s += &format!("{side} {} {}", e.weight, e.status);
                if let Some(d) = &e.design {
                    s += &format!(" {d}");
                }
                if let Some(b) = e.blocks {
                    s += &format!(" blocks {b}");
                }
                s += "\n";
            }
        }
        s
    });
    let failed = (!report.all_confirmed).then(|| "a certified weight class failed to form a design".to_string());
    Ok(Reply { body, failed })
}

#[derive(Serialize)]
struct Plane {
    order: usize,
    dim: usize,
    expected_dim: Option<usize>,
    min_wt: usize,
    lines_as_min_words: bool,
    hyperoval_count: Option<u64>,
    weight_np2_count: u128,
    extended_self_dual: bool,
    odd_fallback: bool,
    consistent: bool,
}

pub fn plane_analysis(path: &Path, ctx: &Ctx) -> Out {
    let d = load_design(path)?;
    let n = d.k().saturating_sub(1);
    let r = bridge::plane_code_analysis(n, &d, ctx.budget)?;
    let report = Plane {
        order: r.n,
        dim: r.dim,
        expected_dim: r.expected_dim,
        min_wt: r.min_wt,
        lines_as_min_words: r.lines_as_min_words,
        hyperoval_count: r.hyperoval_count,
        weight_np2_count: r.weight_np2_count,
        extended_self_dual: r.extended_self_dual,
        odd_fallback: r.odd_fallback,
        consistent: r.consistent(),
    };
    let body = render(ctx, &report, || {
        let p = &report;
        let opt = |x: Option<String>| x.unwrap_or_else(|| "none".into());
        format!(
            "order {}\ndim {}\nexpected_dim {}\nmin_wt {}\nlines_as_min_words {}\nhyperoval_count {}\nweight_np2_count {}\nextended_self_dual {}\nodd_fallback {}\nconsistent {}\n",
            p.order,
            p.dim,
            opt(p.expected_dim.map(|x| x.to_string())),
            p.min_wt,
            p.lines_as_min_words,
            opt(p.hyperoval_count.map(|x| x.to_string())),
            p.weight_np2_count,
            p.extended_self_dual,
            p.odd_fallback,
            p.consistent
        )
    });
    let failed = (!report.consistent).then(|| "plane code claims do not hold".to_string());
    Ok(Reply { body, failed })
}

#[derive(Serialize)]
struct SchemeOut {
    size: usize,
    classes: usize,
    /// `[i, j, k, p_ij^k]`
    p: Vec<[u64; 4]>,
}

pub fn scheme(kind: Scheme, ctx: &Ctx) -> Out {
    let s = match kind {
        Scheme::Hamming { n, q } => hamming_scheme(n, q)?,
        Scheme::Johnson { v, k } => johnson_scheme(v, k)?,
    };
    let p = verify_scheme(&s)?;
    let d = p.classes();
    let mut entries = Vec::new();
    for i in 0..=d {
        for j in 0..=d {
            for k in 0..=d {
                entries.push([i as u64, j as u64, k as u64, p.get(i, j, k)]);
            }
        }
    }
    let report = SchemeOut { size: s.size(), classes: d, p: entries };
    ok(render(ctx, &report, || p.to_string()))
}

#[derive(Serialize)]
struct SelftestEntry {
    id: &'static str,
    title: &'static str,
    passed: bool,
    seconds: f64,
    limit_seconds: u64,
    detail: String,
}

pub fn selftest(only: Option<&str>, ctx: &Ctx) -> Out {
    let list = match only {
        Some(id) => vec![find(id).ok_or_else(|| Failure::Input(format!("no criterion {id:?}")))?],
        None => criteria().into_iter().chain(optional_criteria()).collect(),
    };
    let outcomes: Vec<_> = list.iter().map(|c| c.run()).collect();
    let report: Vec<SelftestEntry> = outcomes
        .iter()
        .map(|o| SelftestEntry {
            id: o.id,
            title: o.title,
            passed: o.passed,
            seconds: o.elapsed.as_secs_f64(),
            limit_seconds: o.limit.as_secs(),
            detail: o.detail.clone(),
        })
        .collect();
    let failures = outcomes.iter().filter(|o| !o.passed).count();
    let body = render(ctx, &report, || outcomes.iter().map(|o| format!("{o}\n")).collect());
    let failed = (failures > 0).then(|| format!("{failures} of {} criteria failed", outcomes.len()));
    Ok(Reply { body, failed })
}
