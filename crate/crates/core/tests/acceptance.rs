//! Acceptance suite: one line per criterion, each with a runtime limit.
//!
//! Values that come from independent reasoning are checked with oracles
//! written here (subset enumeration, standard monomial counting, toric
//! lattice point counts, S-polynomials built by hand).

use std::path::PathBuf;
use std::time::{Duration, Instant};

use lyco::cli::{parse_session, run_session, RunOptions, Session};
use lyco::connectivity::{component_ideals, endo_structure_report, hh_graph, lyubeznik_top};
use lyco::field::FieldSpec;
use lyco::groebner::buchberger;
use lyco::homological::{canonical_module, endo_stabilization, ext_module, s2_fication, top_dimensional_part};
use lyco::homological::{HilbertSeries, PresentedModule};
use lyco::ideal::Ideal;
use lyco::monomial::{Monomial, MonomialOrder};
use lyco::poly::Polynomial;
use lyco::ring::{Ring, RingCtx};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ring_from(header: &str) -> Ring {
    parse_session(header).unwrap().ring().unwrap()
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../sessions")
}

fn load(name: &str) -> Session {
    parse_session(&std::fs::read_to_string(corpus_dir().join(name)).unwrap()).unwrap()
}

fn task<'a>(report: &'a lyco::cli::AnalysisReport, name: &str) -> &'a serde_json::Value {
    &report.task(name).unwrap_or_else(|| panic!("missing task {name}")).result
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (1..=k).fold(1, |acc, j| acc * (n - k + j) / j)
}

/// All exponent vectors of degree `k` in `n` variables.
fn monomials_of_degree(n: usize, k: u16) -> Vec<Vec<u16>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=k {
        for mut rest in monomials_of_degree(n - 1, k - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Number of degree `k` monomials divisible by none of `leads`.
fn standard_monomials(n: usize, k: u16, leads: &[Monomial]) -> i64 {
    monomials_of_degree(n, k)
        .into_iter()
        .filter(|e| !leads.iter().any(|l| l.exps().iter().zip(e).all(|(a, b)| a <= b)))
        .count() as i64
}

/// Criterion 1: two conjugate planes meeting in a point.
fn criterion_1() -> Outcome {
    let over_q = ok(run_session(&load("quadric_pair.lyco"), &RunOptions::default()))?;
    ensure!(task(&over_q, "minprimes")["count"] == 1, "over Q the ideal should be prime");
    ensure!(task(&over_q, "endo")["b_is_local"] == true, "over Q the endomorphism ring should be local");

    let session = ok(load("quadric_pair.lyco").extend("i", "i^2+1"))?;
    let opts = RunOptions { certify_field: true, ..RunOptions::default() };
    let over_qi = ok(run_session(&session, &opts))?;
    ensure!(task(&over_qi, "minprimes")["count"] == 2, "expected 2 primes over Q(i)");
    let g = task(&over_qi, "hhgraph");
    ensure!(g["edges"].as_array().unwrap().is_empty(), "expected no edge, got {}", g["edges"]);
    ensure!(g["t"] == 2, "t = {}", g["t"]);
    ensure!(task(&over_qi, "lyubeznik")["lambda_top"] == 2, "lambda_top should be 2");
    let e = task(&over_qi, "endo");
    ensure!(e["b_num_max_ideals"] == 2 && e["b_free_rank"] == 2, "endo report {e}");

    let r = ring_from("ring R = Q(i)/i^2+1[w,x,y,z] order=grevlex\n");
    let i = ok(Ideal::parse(&r, "w^2+x^2, y^2+z^2, w*y+x*z, w*z-x*y"))?;
    let expected = [ok(Ideal::parse(&r, "w - i*x, y - i*z"))?, ok(Ideal::parse(&r, "w + i*x, y + i*z"))?];
    let primes = ok(i.minimal_primes())?;
    for q in &expected {
        let hits = primes.primes().iter().filter(|p| p.same_as(q).unwrap()).count();
        ensure!(hits == 1, "expected prime {:?} found {hits} times", q.canonical_strings());
    }
    Ok("Q: prime, local; Q(i): 2 primes, no edge, t = lambda_top = #max = rank = 2".into())
}

/// Criterion 2: the rational surface given by a parametrization.
fn criterion_2() -> Outcome {
    let r = RingCtx::rational(&["s", "t", "u", "a", "b", "c", "d", "e"]);
    let graph = ok(Ideal::parse(&r, "a - s*u^2, b - s*t*u, c - t*u*(t - u), d - t^2*(t - u), e - u^3"))?;
    let target = RingCtx::rational(&["a", "b", "c", "d", "e"]);
    let elim = ok(ok(graph.eliminate_named(&["s", "t", "u"]))?.restrict_to(&target))?;
    let four = ok(Ideal::parse(&target, "a*d - b*c, a^2*c + a*b*e - b^2*e, c^3 + c*d*e - d^2*e, a*d*e - b*d*e + a*c^2"))?;
    for g in four.generators() {
        ensure!(ok(elim.groebner())?.normal_form(g).unwrap().is_zero(), "{g} not in the elimination ideal");
    }
    for g in elim.generators() {
        ensure!(ok(four.groebner())?.normal_form(g).unwrap().is_zero(), "{g} not in the 4-generator ideal");
    }
    ensure!(ok(four.is_prime())?, "the 4-generator ideal should be prime");
    let l = ok(lyubeznik_top(&four, true))?;
    ensure!(l.lambda == 1, "lambda_top = {}", l.lambda);
    let e = ok(endo_structure_report(&four, true))?;
    ensure!(e.b_iso_to_r == Some(true), "b_iso_to_R = {:?}", e.b_iso_to_r);
    Ok("elimination equals the 4 generators; prime; lambda_top = 1; B = R".into())
}

/// Criterion 3: maximal minors of a generic 2x3 matrix.
fn criterion_3() -> Outcome {
    let r = RingCtx::rational(&["x1", "x2", "x3", "x4", "x5", "x6"]);
    let i = ok(Ideal::parse(&r, "x1*x5 - x2*x4, x1*x6 - x3*x4, x2*x6 - x3*x5"))?;
    ensure!(ok(i.dimension())? == 4, "dimension");
    ensure!(ok(i.height())?.height == 2, "height");
    let a = ok(PresentedModule::quotient_ring(&i))?;
    let h = ok(a.hilbert_series())?;
    ensure!(h == HilbertSeries::new(0, vec![1, 2], 4), "Hilbert series {h}");
    let leads = ok(i.groebner())?.leading_monomials();
    for k in 0..=6u16 {
        let counted = standard_monomials(6, k, &leads);
        let closed = binomial(k as i64 + 3, 3) + 2 * binomial(k as i64 + 2, 3);
        ensure!(counted == closed && h.coefficient(k as i32) == counted, "degree {k}: {counted} vs {closed}");
    }
    ensure!(ok(ext_module(&a, 1))?.is_zero(), "Ext^1 should vanish");
    ensure!(!ok(ext_module(&a, 2))?.is_zero(), "Ext^2 should not vanish");
    let s2 = ok(s2_fication(&i))?;
    ensure!(ok(s2.module.hilbert_series())? == h, "S2-fication series differs");
    Ok(format!("dim 4, height 2, series {h} (counted to degree 6), Ext^1 = 0 != Ext^2, S2 series agrees"))
}

/// Toric count for `R = k[u,v,x,y]/(xv - yu)`: degree `k` monomials
/// `s^i t^(k-i) a^j b^(k-j)` of the Segre ring, with `(x, y)` the
/// monomials divisible by `b`. The symbolic power `(x,y)^(alpha)` is the
/// span of those with `b`-exponent at least `alpha`.
fn toric_quotient(alpha: i64, k: i64) -> i64 {
    (k + 1) * alpha.min(k + 1)
}

/// Criterion 4: stabilization over a singular quadric.
fn criterion_4() -> Outcome {
    let p = RingCtx::rational(&["u", "v", "x", "y"]);
    let r = ok(p.quotient(&p.parse("x*v - y*u").unwrap()))?;
    let i = ok(Ideal::parse(&r, "x, y"))?;
    ensure!(ok(i.height())?.height == 1, "height");
    let stages = ok(endo_stabilization(&i, 3))?;
    let dims: Vec<Option<u64>> = stages.iter().map(|s| s.coker_dim).collect();
    let mut literal_holds = true;
    for s in &stages {
        let alpha = s.alpha as i64;
        // B_alpha is free of rank alpha over k[u,v], generated in degree 0.
        for k in 0..12 {
            ensure!(s.b_hilbert.coefficient(k as i32) == alpha * (k + 1), "B_{alpha} in degree {k}");
            ensure!(s.quotient_hilbert.coefficient(k as i32) == toric_quotient(alpha, k), "R/I^({alpha}) in degree {k}");
        }
        let oracle: i64 = (0..alpha).map(|k| alpha * (k + 1) - toric_quotient(alpha, k)).sum();
        ensure!(s.coker_dim == Some(oracle as u64), "coker dim at alpha = {alpha}: {:?} vs {oracle}", s.coker_dim);
        let literal = HilbertSeries::new(0, vec![1; s.alpha as usize], 2);
        literal_holds &= literal == s.b_hilbert;
    }
    ensure!(dims == vec![Some(0), Some(1), Some(4)], "coker dims {dims:?}");
    let literal_2 = HilbertSeries::new(0, vec![1, 1], 2);
    let negative = (0..6).any(|k| literal_2.coefficient(k) < toric_quotient(2, k as i64));
    ensure!(negative, "expected the literal series to fall below R/I^(2)");
    if literal_holds {
        return Ok("height 1; B series match; coker dims [0, 1, 4]".into());
    }
    Err(LITERAL_SERIES.into())
}

const LITERAL_SERIES: &str = "height 1 and coker dims [0, 1, 4] verified; B_alpha series is \
    alpha/(1-t)^2, not (1 + ... + t^(alpha-1))/(1-t)^2: the latter is below hilb R/I^(2) in \
    degree 1, which no extension of R/I^(2) allows";

/// Minimal vertex covers of the hypergraph whose edges are `supports`.
fn minimal_covers(n: usize, supports: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|&s| supports.iter().all(|e| e.iter().any(|&v| s >> v & 1 == 1)))
        .collect();
    covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect()
}

/// Criterion 5: monomial decompositions against vertex covers.
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let names = ["a", "b", "c", "d", "e"];
    let cases = 60;
    for case in 0..cases {
        let n = rng.gen_range(2..=5);
        let r = RingCtx::rational(&names[..n]);
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            let mut s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.45)).collect();
            if s.is_empty() {
                s.push(rng.gen_range(0..n));
            }
            supports.push(s);
        }
        let gens = supports
            .iter()
            .map(|s| {
                let mut e = vec![0u16; n];
                s.iter().for_each(|&v| e[v] = 1);
                Polynomial::monomial(&r, Monomial::from_u16(e), r.field().one())
            })
            .collect();
        let ideal = ok(Ideal::new(&r, gens))?;
        let mut got: Vec<Vec<String>> = ok(ideal.minimal_primes())?
            .primes()
            .iter()
            .map(|p| {
                let mut s = p.canonical_strings().unwrap();
                s.sort();
                s
            })
            .collect();
        got.sort();
        let mut want: Vec<Vec<String>> = minimal_covers(n, &supports)
            .into_iter()
            .map(|c| {
                let mut s: Vec<String> = c.iter().map(|&v| names[v].to_string()).collect();
                s.sort();
                s
            })
            .collect();
        want.sort();
        ensure!(got == want, "case {case} {supports:?}: {got:?} vs {want:?}");
    }
    Ok(format!("{cases}/{cases} random square-free monomial ideals agree"))
}

fn random_poly<R: Rng>(rng: &mut R, r: &Ring, max_deg: u16, terms: usize) -> Polynomial {
    let n = r.nvars();
    let t = (0..terms)
        .map(|_| {
            let mut e = vec![0u16; n];
            let d = rng.gen_range(0..=max_deg);
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_u16(e), r.field().from_i64(rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 }))
        })
        .collect();
    Polynomial::from_terms(r, t)
}

/// `(lcm / lt(f)) f - (lcm / lt(g)) g` from first principles.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf), &field.inv(cf).unwrap()).unwrap();
    let b = g.mul_term(&l.div(mg), &field.inv(cg).unwrap()).unwrap();
    a.sub(&b).unwrap()
}

/// Criterion 6: Gröbner engine properties on a random corpus.
fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fields = [FieldSpec::Rationals, FieldSpec::prime(32003).unwrap(), FieldSpec::prime(7).unwrap()];
    let mut cases = 0usize;
    for round in 0..120 {
        let field = fields[round % fields.len()].clone();
        let grevlex = ok(RingCtx::new(&["x", "y", "z"], field, MonomialOrder::GrevLex))?;
        let lex = grevlex.with_order(MonomialOrder::Lex);
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let terms = rng.gen_range(1..=3);
            gens.push(random_poly(&mut rng, &grevlex, 3, terms));
        }
        if gens.iter().all(|g| g.is_zero()) {
            continue;
        }
        let lex_gens: Vec<Polynomial> = gens.iter().map(|g| g.change_ring(&lex).unwrap()).collect();
        let gb = ok(buchberger(&grevlex, &gens))?;
        let gb_lex = ok(buchberger(&lex, &lex_gens))?;
        for (basis, label) in [(&gb, "grevlex"), (&gb_lex, "lex")] {
            ensure!(ok(basis.certify())?, "round {round}: {label} basis fails certification");
            let g = basis.generators();
            for a in 0..g.len() {
                for b in a + 1..g.len() {
                    let s = s_polynomial(&g[a], &g[b]);
                    ensure!(ok(basis.normal_form(&s))?.is_zero(), "round {round}: {label} S-polynomial survives");
                    cases += 1;
                }
            }
            cases += 1;
        }
        for g in &gens {
            ensure!(ok(gb.contains(g))?, "round {round}: generator not in its own ideal");
        }
        let f = random_poly(&mut rng, &grevlex, 4, 4);
        let h = random_poly(&mut rng, &grevlex, 4, 4);
        let nf_f = ok(gb.normal_form(&f))?;
        let nf_h = ok(gb.normal_form(&h))?;
        ensure!(ok(gb.normal_form(&nf_f))? == nf_f, "round {round}: normal form not idempotent");
        let (a, b) = (grevlex.field().from_i64(rng.gen_range(1..5)), grevlex.field().from_i64(-rng.gen_range(1..5)));
        let combo = f.scale(&a).add(&h.scale(&b)).unwrap();
        let lin = nf_f.scale(&a).add(&nf_h.scale(&b)).unwrap();
        ensure!(ok(gb.normal_form(&combo))? == lin, "round {round}: normal form not linear");
        let mut member = Polynomial::zero(&grevlex);
        for g in &gens {
            member = member.add(&g.mul(&random_poly(&mut rng, &grevlex, 2, 2)).unwrap()).unwrap();
        }
        ensure!(ok(gb.contains(&member))?, "round {round}: combination of generators not a member");
        ensure!(ok(gb_lex.contains(&member.change_ring(&lex).unwrap()))?, "round {round}: lex membership differs");
        for probe in [&f, &h] {
            let a = ok(gb.contains(probe))?;
            let b = ok(gb_lex.contains(&probe.change_ring(&lex).unwrap()))?;
            ensure!(a == b, "round {round}: membership of {probe} depends on the order");
        }
        cases += 6;
    }
    ensure!(cases >= 1000, "only {cases} cases");
    Ok(format!("{cases} cases, zero violations"))
}

struct TestIdeal {
    name: &'static str,
    ideal: Ideal,
    unmixed: bool,
}

fn test_ideals() -> Vec<TestIdeal> {
    let q3 = RingCtx::rational(&["x", "y", "z"]);
    let q4 = RingCtx::rational(&["w", "x", "y", "z"]);
    let q6 = RingCtx::rational(&["x1", "x2", "x3", "x4", "x5", "x6"]);
    let f7 = ring_from("ring R = F7[x,y,z] order=grevlex\n");
    let mk = |name, r: &Ring, g: &str, unmixed| TestIdeal { name, ideal: Ideal::parse(r, g).unwrap(), unmixed };
    vec![
        mk("line", &q3, "x, y", true),
        mk("crossing planes", &q3, "x*y", true),
        mk("coordinate planes", &q3, "x*y*z", true),
        mk("coordinate axes", &q3, "x*y, x*z, y*z", true),
        mk("plane and line", &q3, "x*y, x*z", false),
        mk("embedded point", &q3, "x^2, x*y", false),
        mk("twisted cubic", &q4, "x^2 - w*y, x*y - w*z, y^2 - x*z", true),
        mk("two planes", &q4, "w*y, w*z, x*y, x*z", true),
        mk("quadric pair", &q4, "w^2+x^2, y^2+z^2, w*y+x*z, w*z-x*y", true),
        mk("complete intersection", &q4, "w^2 + x*y, y^3 - z^2*w", true),
        mk("generic minors", &q6, "x1*x5 - x2*x4, x1*x6 - x3*x4, x2*x6 - x3*x5", true),
        mk("cusp over F7", &f7, "y^2*z - x^3", true),
    ]
}

/// Criterion 7: homological properties.
fn criterion_7() -> Outcome {
    let mut checks = 0;
    for t in test_ideals() {
        let h = ok(t.ideal.height())?.height;
        let a = ok(PresentedModule::quotient_ring(&t.ideal))?;
        for i in 0..h {
            ensure!(ok(ext_module(&a, i))?.is_zero(), "{}: Ext^{i} nonzero below the height {h}", t.name);
            checks += 1;
        }
        ensure!(!ok(ext_module(&a, h))?.is_zero(), "{}: Ext^{h} vanishes", t.name);
        let top = ok(top_dimensional_part(&t.ideal))?;
        ensure!(ok(t.ideal.is_subset_of(&top))?, "{}: I not inside Ann K(R/I)", t.name);
        if t.unmixed {
            ensure!(ok(top.same_as(&t.ideal))?, "{}: Ann K(R/I) differs from I", t.name);
        }
        let d = ok(t.ideal.dimension())?;
        for p in ok(t.ideal.minimal_primes())?.primes() {
            if ok(p.dimension())? == d {
                ensure!(ok(top.is_subset_of(p))?, "{}: Ann K(R/I) not inside a top prime", t.name);
            }
        }
        checks += 3;
    }

    let q4 = RingCtx::rational(&["w", "x", "y", "z"]);
    let qi = ring_from("ring R = Q(i)/i^2+1[w,x,y,z] order=grevlex\n");
    let q5 = RingCtx::rational(&["x", "y", "z", "u", "v"]);
    let q6 = RingCtx::rational(&["a", "b", "c", "d", "e", "f"]);
    let splits: Vec<(&str, Vec<Ideal>)> = vec![
        ("(w,x) and (y,z)", vec![Ideal::parse(&q4, "w, x").unwrap(), Ideal::parse(&q4, "y, z").unwrap()]),
        (
            "conjugate planes over Q(i)",
            vec![Ideal::parse(&qi, "w - i*x, y - i*z").unwrap(), Ideal::parse(&qi, "w + i*x, y + i*z").unwrap()],
        ),
        (
            "three planes in 6-space",
            vec![
                Ideal::parse(&q6, "a, b").unwrap(),
                Ideal::parse(&q6, "c, d").unwrap(),
                Ideal::parse(&q6, "e, f").unwrap(),
            ],
        ),
        (
            "a connected pair and a plane",
            vec![Ideal::parse(&q5, "x, y*z").unwrap(), Ideal::parse(&q5, "u, v").unwrap()],
        ),
    ];
    for (name, parts) in splits {
        let whole = parts[1..].iter().fold(parts[0].clone(), |acc, p| acc.intersect(p).unwrap());
        let k_whole = ok(ok(canonical_module(&whole))?.hilbert_series())?;
        let k_sum: HilbertSeries =
            parts.iter().map(|p| canonical_module(p).unwrap().hilbert_series().unwrap()).sum();
        ensure!(k_whole == k_sum, "{name}: {k_whole} vs {k_sum}");
        let c = ok(component_ideals(&whole, true))?;
        ensure!(c.ideals.len() == parts.len(), "{name}: {} component ideals", c.ideals.len());
        for p in &parts {
            ensure!(c.ideals.iter().any(|q| q.same_as(p).unwrap()), "{name}: component missing");
        }
        checks += 2;
    }
    Ok(format!("{checks} checks, zero violations"))
}

fn graph_t(i: &Ideal) -> usize {
    hh_graph(i).unwrap().components().unwrap().t
}

/// Criterion 8: connectivity properties.
fn criterion_8() -> Outcome {
    let q3 = RingCtx::rational(&["x", "y", "z"]);
    let q4 = RingCtx::rational(&["w", "x", "y", "z"]);
    let qi3 = ring_from("ring R = Q(i)/i^2+1[x,y,z] order=grevlex\n");
    let qi4 = ring_from("ring R = Q(i)/i^2+1[w,x,y,z] order=grevlex\n");
    let family = [
        (Ideal::parse(&q3, "x^2 + y^2").unwrap(), &qi3, (1, 1)),
        (Ideal::parse(&q3, "(x^2 + y^2)*z").unwrap(), &qi3, (1, 1)),
        (Ideal::parse(&q4, "w^2+x^2, y^2+z^2, w*y+x*z, w*z-x*y").unwrap(), &qi4, (1, 2)),
        (Ideal::parse(&q4, "w^2 + x^2, y^2 + z^2").unwrap(), &qi4, (1, 1)),
        (Ideal::parse(&q4, "w^2 + x^2, y, z").unwrap(), &qi4, (1, 1)),
    ];
    let mut checks = 0;
    for (i, big, (tq, ti)) in &family {
        let a = graph_t(i);
        let b = graph_t(&ok(i.extend_field(big))?);
        ensure!(a <= b, "t drops from {a} to {b} for {:?}", i.generators());
        ensure!((a, b) == (*tq, *ti), "t = ({a}, {b}) for {:?}, expected ({tq}, {ti})", i.generators());
        checks += 1;
    }
    let mut all: Vec<Ideal> = test_ideals().into_iter().map(|t| t.ideal).collect();
    all.extend(family.iter().map(|f| f.0.clone()));
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in &all {
        let r = i.ring();
        let t = graph_t(i);
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..r.nvars()).collect();
            for k in (1..perm.len()).rev() {
                perm.swap(k, rng.gen_range(0..=k));
            }
            let j = ok(Ideal::new(r, i.generators().iter().map(|g| g.rename_vars(r, &perm).unwrap()).collect()))?;
            ensure!(graph_t(&j) == t, "t changes under the permutation {perm:?}");
            checks += 1;
        }
        if ok(i.dimension())? > 0 {
            let top = ok(top_dimensional_part(i))?;
            let (a, b) = (ok(lyubeznik_top(i, false))?.lambda, ok(lyubeznik_top(&top, false))?.lambda);
            ensure!(a == b, "lambda_top(I) = {a} but lambda_top(I_d) = {b}");
            checks += 1;
        }
    }
    Ok(format!("{checks} checks, zero violations"))
}

/// Criterion 9: deterministic output and session round trips.
fn criterion_9() -> Outcome {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    ensure!(!files.is_empty(), "empty corpus");
    for f in &files {
        let text = std::fs::read_to_string(f).unwrap();
        let s = ok(parse_session(&text))?;
        let printed = s.to_string();
        let again = ok(parse_session(&printed))?;
        ensure!(again == s, "{}: round trip changes the session", f.display());
        ensure!(again.to_string() == printed, "{}: printing is not stable", f.display());
        let one = ok(run_session(&s, &RunOptions::default()))?.to_json_without_timing();
        let two = ok(run_session(&s, &RunOptions::default()))?.to_json_without_timing();
        let par = ok(run_session(&s, &RunOptions { jobs: 4, ..RunOptions::default() }))?.to_json_without_timing();
        ensure!(one == two && one == par, "{}: output differs between runs", f.display());
    }
    Ok(format!("{} sessions: identical JSON across runs, stable round trip", files.len()))
}

fn main() {
    type Criterion = fn() -> Outcome;
    let criteria: [(Criterion, u64); 9] = [
        (criterion_1, 60),
        (criterion_2, 120),
        (criterion_3, 120),
        (criterion_4, 180),
        (criterion_5, 120),
        (criterion_6, 300),
        (criterion_7, 300),
        (criterion_8, 300),
        (criterion_9, 120),
    ];
    let mut failed: Vec<(usize, String)> = Vec::new();
    for (k, (run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if outcome.is_ok() && took > Duration::from_secs(*limit) {
            outcome = Err(format!("took {took:.1?}, limit {limit} s"));
        }
        match &outcome {
            Ok(detail) => println!("criterion {}: PASS ({took:.1?}, limit {limit} s) {detail}", k + 1),
            Err(detail) => {
                println!("criterion {}: FAIL ({took:.1?}, limit {limit} s) {detail}", k + 1);
                failed.push((k + 1, detail.clone()));
            }
        }
    }
    // Criterion 4 states a B_alpha series that contradicts its own cokernel
    // dimensions. Only that mismatch is tolerated; everything else in it is
    // asserted.
    assert!(failed.iter().all(|(k, d)| *k == 4 && d == LITERAL_SERIES), "failed criteria: {failed:?}");
}
