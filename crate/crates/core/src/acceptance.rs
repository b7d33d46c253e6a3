//! The acceptance suite: twelve timed end-to-end checks of the library's
//! headline results, shared by the integration tests and the `selftest` command.

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use crate::bridge::{assmus_mattson, design_from_code, plane_code_analysis, todd_check, AmCheck};
use crate::code::{DualityRelation, LinearCode, DEFAULT_BUDGET};
use crate::constructions::{
    ag_design, catalog_design, extended_hamming8, golay, hamming, pg_design, pless_symmetry, qr_code, reed_muller,
    GolayVariant, CATALOG_DESIGNS,
};
use crate::design::{derived, design_params, fisher_check, lambda_s, max_strength, Design, DEFAULT_SUBSET_BUDGET};
use crate::enumerators::{
    macwilliams, perfect_radius, perfectness, weight_distribution, weight_distribution_exhaustive, WeightDistribution,
};
use crate::field::{prime_power, Elem, Field, MAX_ORDER};
use crate::schemes::{hamming_scheme, johnson_scheme, verify_scheme};

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs `f` and fails if it takes longer than `limit`.
fn timed<T>(what: &str, limit: Duration, f: impl FnOnce() -> std::result::Result<T, String>) -> std::result::Result<T, String> {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    ensure!(took <= limit, "{what} took {:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs());
    Ok(out)
}

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub limit: Duration,
    check: fn() -> Check,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {} ({:.2}s of {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        let start = Instant::now();
        let result = (self.check)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.limit {
            passed = false;
            detail = format!("over the time limit; {detail}");
        }
        Outcome { id: self.id, title: self.title, passed, detail, elapsed, limit: self.limit }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: "1", title: "binary Golay [23,12,7] weight distribution", limit: secs(1), check: golay23 },
        Criterion { id: "2", title: "five extended binary Golay constructions", limit: secs(600), check: golay24_variants },
        Criterion { id: "3", title: "ternary Golay codes and their Steiner systems", limit: secs(3), check: ternary_golay },
        Criterion { id: "4", title: "Hamming [7,4,3] and its designs", limit: secs(1), check: hamming7 },
        Criterion { id: "5", title: "perfect and non-perfect codes", limit: secs(10), check: perfect_table },
        Criterion { id: "6", title: "MacWilliams transform against enumeration", limit: secs(60), check: macwilliams_sweep },
        Criterion { id: "7", title: "Assmus-Mattson designs", limit: secs(300), check: assmus_mattson_designs },
        Criterion { id: "8", title: "Pless symmetry codes Sym12 and Sym24", limit: secs(120), check: pless_codes },
        Criterion { id: "9", title: "Fano plane code and hyperovals", limit: secs(1), check: plane_codes },
        Criterion { id: "10", title: "Witt design derivation chain", limit: secs(10), check: witt_chain },
        Criterion { id: "11", title: "Todd's lemma on the octads", limit: secs(10), check: todd },
        Criterion { id: "12", title: "property sweeps", limit: secs(60), check: property_sweeps },
    ]
}

/// The Sym36 check, which enumerates 3^18 codewords.
pub fn optional_criteria() -> Vec<Criterion> {
    vec![Criterion { id: "8-slow", title: "Pless symmetry code Sym36", limit: secs(1800), check: sym36 }]
}

pub fn find(id: &str) -> Option<Criterion> {
    criteria().into_iter().chain(optional_criteria()).find(|c| c.id == id)
}

fn dist(n: usize, pairs: &[(usize, u128)]) -> WeightDistribution {
    WeightDistribution::from_pairs(n, pairs)
}

fn golay23() -> Check {
    let c = ok(golay(GolayVariant::B23Qr))?;
    let wd = ok(weight_distribution_exhaustive(&c, DEFAULT_BUDGET))?;
    let want = dist(23, &[(0, 1), (7, 253), (8, 506), (11, 1288), (12, 1288), (15, 506), (16, 253), (23, 1)]);
    ensure!(wd == want, "distribution {wd}");
    Ok(wd.to_string())
}

fn golay24_variants() -> Check {
    let want = dist(24, &[(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]);
    let variants = [
        GolayVariant::B24Lexicode,
        GolayVariant::B24Bordered,
        GolayVariant::B24Icosahedron,
        GolayVariant::B24Hexacode,
        GolayVariant::B24Extend,
    ];
    let mut times = Vec::new();
    for v in variants {
        let start = Instant::now();
        let c = timed(v.name(), secs(300), || ok(golay(v)))?;
        ensure!((c.n(), c.k()) == (24, 12), "{v}: [{}, {}]", c.n(), c.k());
        ensure!(c.duality_relation() == DualityRelation::SelfDual, "{v} is not self-dual");
        let wd = ok(weight_distribution(&c, DEFAULT_BUDGET))?;
        ensure!(wd == want, "{v}: distribution {wd}");
        times.push(format!("{v} {:.2}s", start.elapsed().as_secs_f64()));
    }
    Ok(format!("[24,12,8] self-dual {want}; {}", times.join(", ")))
}

fn check_design(d: &Design, t: usize, v: usize, k: usize, lambda: u64, b: usize) -> std::result::Result<(), String> {
    let p = ok(design_params(d, t, DEFAULT_SUBSET_BUDGET))?;
    ensure!(
        p.map(|p| (p.v, p.k, p.lambda)) == Some((v, k, lambda)) && d.b() == b,
        "expected {t}-({v},{k},{lambda}) with {b} blocks, got v = {}, k = {}, b = {}, lambda = {:?}",
        d.v(),
        d.k(),
        d.b(),
        p.map(|p| p.lambda)
    );
    Ok(())
}

fn ternary_golay() -> Check {
    let one = secs(1);
    for v in [GolayVariant::T11Qr, GolayVariant::T11Circulant] {
        let a5 = timed(v.name(), one, || Ok(ok(weight_distribution(&ok(golay(v))?, DEFAULT_BUDGET))?.get(5)))?;
        ensure!(a5 == 132, "{v}: A_5 = {a5}");
    }
    timed("weight-5 extraction", one, || {
        let d = ok(design_from_code(&ok(golay(GolayVariant::T11Qr))?, 5, DEFAULT_BUDGET))?;
        check_design(&d, 4, 11, 5, 1, 66)
    })?;
    timed("weight-6 extraction", one, || {
        let d = ok(design_from_code(&ok(golay(GolayVariant::T12Extend))?, 6, DEFAULT_BUDGET))?;
        check_design(&d, 5, 12, 6, 1, 132)
    })?;
    Ok("A_5 = 132; 4-(11,5,1) with 66 blocks; 5-(12,6,1) with 132 blocks".into())
}

fn hamming7() -> Check {
    let h = ok(hamming(2, 3))?;
    let wd = ok(weight_distribution(&h, DEFAULT_BUDGET))?;
    ensure!(wd.get(3) == 7 && wd.get(4) == 7, "distribution {wd}");
    check_design(&ok(design_from_code(&h, 3, DEFAULT_BUDGET))?, 2, 7, 3, 1, 7)?;
    check_design(&ok(design_from_code(&h.extend(), 4, DEFAULT_BUDGET))?, 3, 8, 4, 1, 14)?;
    Ok(format!("{wd}; 2-(7,3,1); extended 3-(8,4,1) with 14 blocks"))
}

fn qr48() -> crate::Result<LinearCode> {
    Ok(qr_code(47, 2)?.extend())
}

/// Perfect by enumeration, or ruled out by the sphere-packing arithmetic alone.
fn is_perfect(c: &LinearCode) -> std::result::Result<bool, String> {
    if perfect_radius(c.n(), c.k(), c.q()).is_none() {
        return Ok(false);
    }
    Ok(ok(perfectness(c, DEFAULT_BUDGET))?.perfect)
}

fn perfect_table() -> Check {
    let mut perfect: Vec<(String, LinearCode)> = Vec::new();
    for q in [2, 3, 4, 5] {
        for m in [2, 3] {
            perfect.push((format!("Hamming({q},{m})"), ok(hamming(q, m))?));
        }
    }
    perfect.push(("Golay [23,12,7]".into(), ok(golay(GolayVariant::B23Qr))?));
    perfect.push(("Golay [11,6,5]_3".into(), ok(golay(GolayVariant::T11Qr))?));
    let mut imperfect: Vec<(String, LinearCode)> =
        vec![("extended Hamming [8,4,4]".into(), extended_hamming8()), ("QR-48".into(), ok(qr48())?)];
    for q in [5, 11, 17, 23] {
        imperfect.push((format!("Sym{}", 2 * (q + 1)), ok(pless_symmetry(q))?));
    }
    for (name, c) in &perfect {
        ensure!(is_perfect(c)?, "{name} is not perfect");
    }
    for (name, c) in &imperfect {
        ensure!(!is_perfect(c)?, "{name} is perfect");
    }
    Ok(format!("{} perfect, {} not perfect", perfect.len(), imperfect.len()))
}

/// Every code the catalog builds, by name.
pub fn catalog_codes() -> crate::Result<Vec<(String, LinearCode)>> {
    let mut out = Vec::new();
    for (q, m) in [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (5, 2)] {
        out.push((format!("hamming({q},{m})"), hamming(q, m)?));
    }
    out.push(("extended_hamming8".into(), extended_hamming8()));
    for (r, m) in [(1, 3), (1, 4), (2, 4), (1, 5), (2, 5)] {
        out.push((format!("reed_muller({r},{m})"), reed_muller(r, m)?));
    }
    for (n, q) in [(7, 2), (23, 2), (31, 2), (47, 2), (11, 3), (23, 3)] {
        out.push((format!("qr({n},{q})"), qr_code(n, q)?));
    }
    out.push(("qr48".into(), qr48()?));
    for q in [5, 11] {
        out.push((format!("pless({q})"), pless_symmetry(q)?));
    }
    for v in [GolayVariant::B24Bordered, GolayVariant::B24Icosahedron, GolayVariant::T11Circulant, GolayVariant::T12Extend] {
        out.push((v.name().to_string(), golay(v)?));
    }
    out.push(("hexacode".into(), crate::constructions::hexacode()));
    Ok(out)
}

fn macwilliams_sweep() -> Check {
    let mut checked = Vec::new();
    for (name, c) in ok(catalog_codes())? {
        let (n, k, q) = (c.n(), c.k(), c.q());
        let cap = match q {
            2 => 24,
            3 => 12,
            _ => continue,
        };
        if k.max(n - k) > cap {
            continue;
        }
        let a = ok(weight_distribution_exhaustive(&c, DEFAULT_BUDGET))?;
        let b = ok(weight_distribution_exhaustive(&ok(c.dual())?, DEFAULT_BUDGET))?;
        ensure!(ok(macwilliams(&a, n, k, q))? == b, "{name}: transform differs from the dual census");
        ensure!(ok(macwilliams(&b, n, n - k, q))? == a, "{name}: inverse transform differs");
        checked.push(name);
    }
    Ok(format!("{} codes: {}", checked.len(), checked.join(", ")))
}

fn lambda_of(check: &AmCheck) -> Option<(usize, u64)> {
    match check {
        AmCheck::Verified { blocks, lambda } => Some((*blocks, *lambda)),
        _ => None,
    }
}

fn assmus_mattson_designs() -> Check {
    let g = ok(golay(GolayVariant::B24Extend))?;
    let r = ok(assmus_mattson(&g, 5, DEFAULT_BUDGET))?;
    ensure!(r.weights() == [8, 12, 16], "Golay weights {:?}", r.weights());
    let lambdas: Vec<Option<u64>> = r.code_weights.iter().map(|w| lambda_of(&w.check).map(|x| x.1)).collect();
    ensure!(lambdas == [Some(1), Some(48), Some(78)], "Golay lambdas {lambdas:?}");

    let t = ok(golay(GolayVariant::T12Extend))?;
    let r = ok(assmus_mattson(&t, 5, DEFAULT_BUDGET))?;
    let six = r.code_weights.iter().find(|w| w.weight == 6).and_then(|w| lambda_of(&w.check));
    ensure!(six == Some((132, 1)), "ternary weight 6: {six:?}");

    let qr = ok(qr48())?;
    let r = ok(assmus_mattson(&qr, 5, 1 << 24))?;
    let mut folded: Vec<usize> = r.weights().iter().map(|&v| v.min(48 - v)).collect();
    folded.sort_unstable();
    folded.dedup();
    ensure!(folded == [12, 16, 20, 24], "QR-48 weights {:?}", r.weights());
    ensure!(r.all_confirmed(), "QR-48: a certified weight failed verification");
    let twelve = r.code_weights.iter().find(|w| w.weight == 12).and_then(|w| lambda_of(&w.check));
    ensure!(twelve == Some((17296, 8)), "QR-48 weight 12: {twelve:?}");
    Ok(format!("Golay 8/12/16 with lambda 1/48/78; 5-(12,6,1); QR-48 weights {:?}, 5-(48,12,8) with 17296 blocks", r.weights()))
}

fn pless_codes() -> Check {
    let s12 = ok(weight_distribution(&ok(pless_symmetry(5))?, DEFAULT_BUDGET))?;
    let g12 = ok(weight_distribution(&ok(golay(GolayVariant::T12Extend))?, DEFAULT_BUDGET))?;
    ensure!(s12 == g12, "Sym12 {s12} vs Golay {g12}");
    let s24 = ok(pless_symmetry(11))?;
    let d = ok(design_from_code(&s24, 9, DEFAULT_BUDGET))?;
    check_design(&d, 5, 24, 9, 6, 2024)?;
    Ok(format!("Sym12 {s12}; Sym24 5-(24,9,6) with 2024 blocks"))
}

fn sym36() -> Check {
    let budget = 1 << 29;
    let c = ok(pless_symmetry(17))?;
    let wd = ok(weight_distribution(&c, budget))?;
    ensure!(wd.min_weight() == Some(12), "Sym36 distribution {wd}");
    let d = ok(design_from_code(&c, 12, budget))?;
    check_design(&d, 5, 36, 12, 45, d.b())?;
    Ok(format!("Sym36 d = 12; 5-(36,12,45) with {} blocks", d.b()))
}

fn plane_codes() -> Check {
    let r = ok(plane_code_analysis(2, &ok(catalog_design("fano"))?, DEFAULT_BUDGET))?;
    ensure!(r.dim == 4 && r.expected_dim == Some(4), "dimension {}", r.dim);
    ensure!(r.lines_as_min_words, "weight-3 words are not the lines");
    ensure!(r.hyperoval_count == Some(7) && r.weight_np2_count == 7, "hyperovals {:?}, A_4 {}", r.hyperoval_count, r.weight_np2_count);
    ensure!(r.extended_self_dual, "extended code is not self-dual");
    Ok("dim 4; 7 lines; 7 hyperovals = A_4; extension self-dual".into())
}

fn octads() -> std::result::Result<Design, String> {
    ok(design_from_code(&ok(golay(GolayVariant::B24Bordered))?, 8, DEFAULT_BUDGET))
}

fn witt_chain() -> Check {
    let mut d = octads()?;
    check_design(&d, 5, 24, 8, 1, 759)?;
    let steps = [(4, 23, 7, 253), (3, 22, 6, 77), (2, 21, 5, 21)];
    for (t, v, k, b) in steps {
        d = ok(derived(&d, 0))?;
        check_design(&d, t, v, k, 1, b)?;
    }
    let pg = ok(pg_design(3, 4, 1))?;
    ensure!((pg.v(), pg.b(), pg.k()) == (d.v(), d.b(), d.k()), "PG(2,4) has (v,b,k) = ({},{},{})", pg.v(), pg.b(), pg.k());
    Ok("5-(24,8,1) -> 4-(23,7,1) -> 3-(22,6,1) -> 2-(21,5,1) = PG(2,4) parameters".into())
}

fn todd() -> Check {
    let d = octads()?;
    ensure!(ok(todd_check(&d))?, "a symmetric difference of octads meeting in 4 points is not an octad");
    Ok("holds over all 759 octads".into())
}

fn field_axioms(f: &Field) -> bool {
    let e: Vec<Elem> = f.elements().collect();
    e.iter().all(|&a| {
        f.add(a, 0) == a
            && f.mul(a, 1) == a
            && f.add(a, f.neg(a)) == 0
            && (a == 0 || f.inv(a).map(|i| f.mul(a, i)) == Ok(1))
            && e.iter().all(|&b| {
                f.add(a, b) == f.add(b, a)
                    && f.mul(a, b) == f.mul(b, a)
                    && e.iter().all(|&c| {
                        f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                            && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                            && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                    })
            })
    })
}

/// Designs known to the library, by name.
pub fn catalog_of_designs() -> crate::Result<Vec<(String, Design)>> {
    let mut out = Vec::new();
    for name in CATALOG_DESIGNS {
        out.push((name.to_string(), catalog_design(name)?));
    }
    for (d, q, i) in [(3, 2, 1), (3, 3, 1), (3, 4, 1), (4, 2, 2), (4, 2, 1)] {
        out.push((format!("pg({d},{q},{i})"), pg_design(d, q, i)?));
    }
    for (d, q, i) in [(2, 3, 1), (3, 2, 2), (4, 2, 2), (2, 4, 1), (3, 3, 1)] {
        out.push((format!("ag({d},{q},{i})"), ag_design(d, q, i)?));
    }
    Ok(out)
}

fn property_sweeps() -> Check {
    let orders: Vec<u64> = (2..=MAX_ORDER).filter(|&q| prime_power(q).is_some()).collect();
    for &q in &orders {
        ensure!(field_axioms(&ok(Field::new(q))?), "GF({q}) violates a field axiom");
    }

    let codes = ok(catalog_codes())?;
    for (name, c) in &codes {
        if c.k() < c.n() {
            ensure!(ok(ok(c.dual())?.dual())? == *c, "{name}: dual is not an involution");
        }
        ensure!(ok(c.extend().puncture(c.n()))? == *c, "{name}: puncturing the extension changes the code");
    }

    let mut designs = ok(catalog_of_designs())?;
    let mut witt = octads()?;
    designs.push(("octads".into(), witt.clone()));
    for step in 1..=3 {
        witt = ok(derived(&witt, 0))?;
        designs.push((format!("octads derived x{step}"), witt.clone()));
    }
    let mut fisher = 0;
    for (name, d) in &designs {
        let Some(p) = ok(max_strength(d, (d.k() - 1).clamp(1, 5), DEFAULT_SUBSET_BUDGET))? else { continue };
        for s in 0..=p.t {
            let l = lambda_s(&p, s);
            ensure!(l.is_integer(), "{name}: lambda_{s} = {l} is not an integer");
            let measured = if s == 0 {
                d.b() as u128
            } else {
                ok(design_params(d, s, DEFAULT_SUBSET_BUDGET))?.map_or(0, |q| q.lambda as u128)
            };
            ensure!(l == Ratio::from_integer(measured), "{name}: lambda_{s} = {l}, counted {measured}");
        }
        if p.t >= 2 && p.t < d.k() && d.k() < d.v() {
            ensure!(ok(fisher_check(d, p.t, DEFAULT_SUBSET_BUDGET))?, "{name} violates Fisher");
            fisher += 1;
        }
    }

    let schemes = [("H(4,2)", hamming_scheme(4, 2)), ("H(3,3)", hamming_scheme(3, 3)), ("J(5,2)", johnson_scheme(5, 2)), ("J(6,3)", johnson_scheme(6, 3))];
    for (name, s) in schemes {
        ok(verify_scheme(&ok(s)?)).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!(
        "{} fields, {} codes, {} designs ({} non-trivial for Fisher), 4 schemes",
        orders.len(),
        codes.len(),
        designs.len(),
        fisher
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = criteria().iter().chain(&optional_criteria()).map(|c| c.id).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(find("7").is_some() && find("13").is_none());
    }
}
