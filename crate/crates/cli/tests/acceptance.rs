//! Acceptance suite: ten exact criteria, one PASS/FAIL line each.
//! Runs without the libtest harness so every criterion reports even when
//! another one fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use qgor_tool::report::canonical_json;
use qgor_tool::session::{ListKind, Session};
use qgor_tool::{parse_session, run_command, run_corpus, Command, Options};
use qgor_core::analysis::{
    buchsbaum_probe, gcm_exponent, is_regular_sequence_via_limit, limit_closure, qg_check, Budgets, ParamSystem,
};
use qgor_core::homology::{canonical_module, depth, ext_module, free_resolution, ModulePresentation};
use qgor_core::invariants::{is_irreducible_mprimary, socle_dimension};
use qgor_core::random::random_homogeneous_form;
use qgor_core::{Field, Ideal, Monomial, PolyRing, PrimeField, RingSpec};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn spec<F: Field>(r: &Arc<PolyRing<F>>, gens: &[&str]) -> RingSpec<F> {
    RingSpec::new(r.clone(), polys(r, gens)).unwrap()
}

fn ideal<F: Field>(r: &Arc<PolyRing<F>>, gens: &[&str]) -> Ideal<F> {
    Ideal::new(r, polys(r, gens)).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{} ms", took.as_millis()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = qring(&["X", "Y"]);
    let i = ideal(&r, &["X^5*Y^5"]);
    let a = ideal(&r, &["X^4*Y^3", "X^3*Y^4"]);
    let ann = i.colon(&a).map_err(|e| e.to_string())?;
    ensure(ann == ideal(&r, &["X^2*Y^2"]), format!("0 :_R a lifts to {}", ann.format_gb()))?;
    let ann2 = i.colon(&ann).map_err(|e| e.to_string())?;
    ensure(ann2 == ideal(&r, &["X^3*Y^3"]), format!("0 :_R (0 :_R a) lifts to {}", ann2.format_gb()))?;
    let ra = RingSpec::from_ideal(a.sum(&i).unwrap()).unwrap();
    let w = canonical_module(&ra).map_err(|e| e.to_string())?;
    ensure(w.presentation.mu() == 1, format!("mu(omega) = {}", w.presentation.mu()))?;
    let ann_w = w.presentation.annihilator();
    ensure(ann_w.contains_ideal(ra.ideal()) && ann_w != *ra.ideal(), "ann(omega) is not strictly larger than the defining ideal")?;
    let rep = qg_check(&ra, None, &Budgets::default()).map_err(|e| e.to_string())?;
    ensure(!rep.quasi_gorenstein && !rep.unmixed, "qg_check(R/a) should be false with unmixed = false")?;
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = pring(32003, &["X", "Y", "Z", "T"]);
    let s = spec(&r, &["X*Y", "X*T", "Z*Y", "Z*T"]);
    let x = ParamSystem::verify(&s, polys(&r, &["X+Y", "Z+T"])).map_err(|e| e.to_string())?;
    let lim = limit_closure(&s, &x, 1, &Budgets::default()).map_err(|e| e.to_string())?.ideal;
    ensure(lim == Ideal::maximal(&r), format!("limit closure {}", lim.format_gb()))?;
    let soc = socle_dimension(&lim, s.ideal()).map_err(|e| e.to_string())?;
    ensure(soc == 1, format!("socle dimension {soc}"))?;
    let cert = is_irreducible_mprimary(&lim, s.ideal()).map_err(|e| e.to_string())?;
    ensure(cert.irreducible, "limit closure not irreducible")?;
    let rep = qg_check(&s, Some(&x), &Budgets::default()).map_err(|e| e.to_string())?;
    ensure(!rep.quasi_gorenstein && rep.unmixed, "expected not quasi-Gorenstein and unmixed")?;
    // Mayer-Vietoris: 0 -> R -> S/P1 + S/P2 -> k -> 0 with P1 + P2 = m; Ext^2 and
    // Ext^3 of k vanish, so omega_R is the direct sum of the two planes' omegas
    let k = ModulePresentation::cyclic(&Ideal::maximal(&r));
    for idx in [2, 3] {
        ensure(ext_module(&k, idx).unwrap().presentation.is_zero(), format!("Ext^{idx}(k, S) nonzero"))?;
    }
    let mu_plane = |gens: &[&str]| canonical_module(&spec(&r, gens)).unwrap().presentation.mu();
    let oracle = mu_plane(&["X", "Z"]) + mu_plane(&["Y", "T"]);
    ensure(oracle == 2 && rep.mu_omega == oracle, format!("mu(omega) = {}, oracle {oracle}", rep.mu_omega))?;
    within(start, Duration::from_secs(5))
}

fn random_linear_sop(s: &RingSpec<PrimeField>, seed: &mut u64) -> ParamSystem<PrimeField> {
    loop {
        let xs = (0..s.dim())
            .map(|_| {
                *seed += 1;
                random_homogeneous_form(s.ring(), 1, *seed)
            })
            .collect();
        if let Ok(x) = ParamSystem::verify(s, xs) {
            return x;
        }
    }
}

fn is_cm<F: Field>(s: &RingSpec<F>) -> bool {
    depth(&ModulePresentation::of_ring(s)).unwrap() == s.dim()
}

fn criterion_3() -> Outcome {
    let b = Budgets::default();
    let mut cases = 0;
    let mut check = |label: &str, reg: bool, cm: bool, expect: bool| -> Result<(), String> {
        cases += 1;
        ensure(reg == cm, format!("{label}: limit test {reg}, depth test {cm}"))?;
        ensure(reg == expect, format!("{label}: expected {expect}"))
    };

    let r = qring(&["x", "y", "z"]);
    let s = RingSpec::polynomial(r.clone());
    let x = ParamSystem::verify(&s, polys(&r, &["x", "y", "z"])).unwrap();
    ensure(limit_closure(&s, &x, 1, &b).unwrap().ideal == Ideal::maximal(&r), "{x,y,z}^lim != (x,y,z)")?;
    check("regular S", is_regular_sequence_via_limit(&s, &x, &b).unwrap(), is_cm(&s), true)?;

    let p = pring(32003, &["x", "y", "z"]);
    let cubic = RingSpec::new(p.clone(), vec![random_homogeneous_form(&p, 3, 2024)]).unwrap();
    let cm = is_cm(&cubic);
    let mut seed = 100;
    for k in 0..5 {
        let x = random_linear_sop(&cubic, &mut seed);
        check(&format!("cubic sop {k}"), is_regular_sequence_via_limit(&cubic, &x, &b).unwrap(), cm, true)?;
    }

    let q = pring(32003, &["X", "Y", "Z", "T"]);
    let planes = spec(&q, &["X*Y", "X*T", "Z*Y", "Z*T"]);
    let x = ParamSystem::verify(&planes, polys(&q, &["X+Y", "Z+T"])).unwrap();
    check("two planes", is_regular_sequence_via_limit(&planes, &x, &b).unwrap(), is_cm(&planes), false)?;
    Ok(format!("{cases} cases agree"))
}

fn criterion_4() -> Outcome {
    let r = qring(&["x", "y"]);
    let zero = Ideal::zero(&r);
    let ideals = bivariate_mprimary_ideals(4);
    let mut exceptions = Vec::new();
    for gens in &ideals {
        let a = Ideal::new(&r, gens.iter().map(|m| r.monomial(m.clone())).collect()).unwrap();
        let cert = is_irreducible_mprimary(&a, &zero).map_err(|e| e.to_string())?;
        let by_count = cert.mu_colon == cert.mu_ideal + 1;
        let by_socle = cert.socle_dimension == 1;
        let pure = gens.iter().all(|m: &Monomial| m.support().count() == 1);
        if !(by_count == by_socle && by_socle == pure) {
            exceptions.push(format!("{} (mu(a:m)={}, mu(a)={}, socle={})", a.format(), cert.mu_colon, cert.mu_ideal, cert.socle_dimension));
        }
    }
    ensure(exceptions.is_empty(), format!("{} of {} ideals are exceptions: {}", exceptions.len(), ideals.len(), exceptions.join("; ")))?;
    Ok(format!("{} ideals", ideals.len()))
}

/// `(session name, ring name, session)` for every ring of the shipped corpus.
fn corpus_rings() -> Vec<(String, String, Session)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "qg"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let session = parse_session(&std::fs::read_to_string(&p).unwrap()).unwrap();
        let name = p.file_stem().unwrap().to_string_lossy().into_owned();
        for ring in &session.rings {
            out.push((name.clone(), ring.name.clone(), session.clone()));
        }
    }
    out
}

fn run(session: &Session, ring: &str, command: Command, seqs: &[String]) -> Result<Value, String> {
    let opts = Options { ring: Some(ring.to_string()), seqs: seqs.to_vec(), ..Options::default() };
    run_command(session, command, &opts).map(|o| o.report["result"].clone()).map_err(|e| e.message)
}

fn criterion_5() -> Outcome {
    let rings = corpus_rings();
    ensure(rings.len() >= 6, format!("only {} corpus rings", rings.len()))?;
    let mut compared = 0;
    for (file, ring, session) in &rings {
        let rep = run(session, ring, Command::Qgcheck, &[]).map_err(|e| format!("{file}/{ring}: {e}"))?;
        if rep["route_b"].is_boolean() {
            compared += 1;
            ensure(rep["route_a"] == rep["route_b"], format!("{file}/{ring}: routes disagree"))?;
        }
    }
    Ok(format!("{compared} of {} rings compared, 0 disagreements", rings.len()))
}

fn criterion_6() -> Outcome {
    let mut compared = 0;
    for (file, ring, session) in &corpus_rings() {
        let rep = run(session, ring, Command::Qgcheck, &[]).map_err(|e| format!("{file}/{ring}: {e}"))?;
        if rep["socle_stabilized"] == Value::Bool(true) {
            compared += 1;
            let last = rep["socle_sequence"].as_array().and_then(|v| v.last()).cloned();
            ensure(last.as_ref() == Some(&rep["mu_omega"]), format!("{file}/{ring}: socle {last:?} vs mu(omega) {}", rep["mu_omega"]))?;
        }
    }
    Ok(format!("{compared} rings"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let b = Budgets::default();
    let r = pring(32003, &["X", "Y", "Z", "T"]);
    let s = spec(&r, &["X*Y", "X*T", "Z*Y", "Z*T"]);
    let mut systems = vec![ParamSystem::verify(&s, polys(&r, &["X+Y", "Z+T"])).unwrap()];
    let mut seed = 500;
    for _ in 0..5 {
        systems.push(random_linear_sop(&s, &mut seed));
    }
    for (k, x) in systems.iter().enumerate() {
        let p = buchsbaum_probe(&s, x, &b).map_err(|e| e.to_string())?;
        ensure(p.annihilation, format!("system {k}: m * lim not inside (x) + I"))?;
        ensure(p.colon_formula, format!("system {k}: colon formula differs from the limit closure"))?;
    }
    let g = gcm_exponent(&s, &systems, &b).map_err(|e| e.to_string())?;
    ensure(g.exponent == 1, format!("gcm exponent {}", g.exponent))?;
    within(start, Duration::from_secs(30))
}

fn criterion_8() -> Outcome {
    let mut exercised = 0;
    for (file, ring, session) in &corpus_rings() {
        let qg = run(session, ring, Command::Qgcheck, &[]).map_err(|e| format!("{file}/{ring}: {e}"))?;
        let d = run(session, ring, Command::Depth, &[]).map_err(|e| format!("{file}/{ring}: {e}"))?;
        let dim = qg["dim"].as_u64().unwrap();
        if qg["quasi_gorenstein"] != Value::Bool(true) || d["depth"].as_u64() != Some(dim) || dim == 0 {
            continue;
        }
        let linear: Vec<String> = session
            .lists_of(ring, ListKind::Seq)
            .filter(|l| l.items.len() == 1)
            .map(|l| l.name.clone())
            .collect();
        ensure(!linear.is_empty(), format!("{file}/{ring}: no single-element sequence declared"))?;
        for x in &linear {
            let seqs = [x.clone()];
            let q = run(session, ring, Command::QuotientProbe, &seqs).map_err(|e| format!("{file}/{ring}: {e}"))?;
            ensure(q["avoidance"] == Value::Bool(true), format!("{file}/{ring}: avoidance fails for {x}"))?;
            ensure(q["qg_quotient"] == Value::Bool(true), format!("{file}/{ring}: R/xR not quasi-Gorenstein for {x}"))?;
            let dp = run(session, ring, Command::Deform, &seqs).map_err(|e| format!("{file}/{ring}: {e}"))?;
            ensure(dp["verdicts"] == serde_json::json!([true, true, true]), format!("{file}/{ring}: deformation verdicts {}", dp["verdicts"]))?;
            exercised += 1;
        }
    }
    ensure(exercised > 0, "no corpus entry exercised")?;
    Ok(format!("{exercised} (ring, x) pairs; non-CM direction not exercised"))
}

fn criterion_9() -> Outcome {
    let r = pring(P, &["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..20 {
        let mut gens = Vec::new();
        while gens.len() < 2 {
            let g = random_homogeneous_form(&r, rng.gen_range(1..=3), rng.gen());
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let degree = rng.gen_range(3..=6);
        let f = if case % 2 == 0 {
            let g = &gens[0];
            r.mul(&random_homogeneous_form(&r, degree - g.degree().unwrap().min(degree), rng.gen()), g)
        } else {
            random_homogeneous_form(&r, degree, rng.gen())
        };
        let got = Ideal::new(&r, gens.clone()).unwrap().contains(&f);
        ensure(got == macaulay_member(&gens, &f, 3, P), format!("membership case {case} disagrees"))?;
    }
    let q = qring(&["X", "Y", "Z", "T"]);
    let planes = ideal(&q, &["X*Y", "X*T", "Z*Y", "Z*T"]);
    let monos: Vec<Monomial> = planes.gens().iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let res = free_resolution(&ModulePresentation::cyclic(&planes), 10).unwrap();
    ensure(res.betti_totals() == vec![1, 4, 4, 1] && taylor_betti(&monos) == res.betti_totals(), "two-planes Betti numbers")?;
    ensure(res.composes_to_zero(&q) && res.is_exact(&q), "two-planes resolution not exact")?;
    let mut checked = 1;
    for (_, ring, session) in &corpus_rings() {
        let rep = run(session, ring, Command::Resolve, &[])?;
        ensure(rep["exact"] == Value::Bool(true), format!("{ring}: resolution fails A*A' = 0 or exactness"))?;
        checked += 1;
    }
    Ok(format!("20 membership instances, {checked} resolutions"))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let opts = Options { budgets: Budgets { seed: 7, ..Budgets::default() }, ..Options::default() };
    let first = run_corpus(&corpus_dir(), &opts).map_err(|e| e.message)?;
    let second = run_corpus(&corpus_dir(), &opts).map_err(|e| e.message)?;
    ensure(first.passed(), format!("corpus failures: {:?}", first.failures))?;
    let a = canonical_json(&serde_json::to_value(&first).unwrap());
    let b = canonical_json(&serde_json::to_value(&second).unwrap());
    ensure(a == b, "corpus JSON differs between runs")?;
    within(start, Duration::from_secs(300))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("example X^5Y^5 colons and canonical module", criterion_1),
        ("example two planes limit closure and canonical module", criterion_2),
        ("regular sequence biconditional", criterion_3),
        ("generator count criterion for irreducibility", criterion_4),
        ("route agreement on the corpus", criterion_5),
        ("socle sequence equals mu(omega)", criterion_6),
        ("Buchsbaum probes on two planes", criterion_7),
        ("regular element and deformation probes", criterion_8),
        ("engine oracles", criterion_9),
        ("determinism of corpus runs", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(note) => println!("criterion {:>2} PASS  {name} ({note})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
