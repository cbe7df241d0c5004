//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rand::Rng;

use frobrw::cospan::{cospan_iso, interfaced_iso, Cospan, InterfacedGraph};
use frobrw::error::Error;
use frobrw::dpoi::{complements_enumerate, find_matches, for_each_match, rewrite_step, Fibre, Match, Rule};
use frobrw::hypergraph::Homomorphism;
use frobrw::multifrob::{
    multifrob_rewrite, upsilon_normalize_with, BaseRule, PolySignature, UpsilonOrder,
};
use frobrw::random::{
    random_context, random_group_host, random_ib_host, random_profile, random_reduced_host, random_term,
    random_term_from, random_two_colour_graph, rng,
};
use frobrw::semantics::finite::{FiniteModel, SpiderKind};
use frobrw::semantics::gf2::{ib_subspace, readoff_reduced, readoff_span, Subspace2};
use frobrw::signature::{ColourId, Signature};
use frobrw::strategies::group::{group_reduce_with, group_signature, revlex_less, GroupPack, Phase};
use frobrw::strategies::ib::{
    existential_example, ib_is_reduced, ib_reduce, ib_reduce_swapped, ib_reduce_with, readoff_system, IB,
};
use frobrw::term::{interp, parse, Term};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, || format!("took {:.1?}, limit {:?}", start.elapsed(), limit))
}

fn cospan(sig: &Signature, t: &Term) -> Result<Cospan, String> {
    interp(sig, t).map_err(|e| e.to_string())
}

/// Law instances for one colour `c`, with `s`, `t`, `u` drawn at random.
fn laws(sig: &Signature, c: ColourId, r: &mut rand_chacha::ChaCha8Rng) -> Vec<(String, Term, Term)> {
    let p = |src: &str| parse(src, sig).expect("law parses");
    let cn = sig.colour_name(c).to_string();
    let f = |k: &str| format!("frob.{k}[{cn}]");
    let id1 = format!("id[{cn}]");
    let sym11 = format!("sym[{cn},{cn}]");
    let mut out: Vec<(String, Term, Term)> = Vec::new();

    let s = random_term(sig, 3, r);
    let (sd, sc) = s.type_of(sig).unwrap();
    let t = random_term_from(sig, &sc, 3, r);
    let (_, tc) = t.type_of(sig).unwrap();
    let u = random_term_from(sig, &tc, 3, r);
    let t2 = random_term(sig, 3, r);
    let u2 = random_term(sig, 3, r);
    let (t2d, t2c) = t2.type_of(sig).unwrap();
    let (u2d, _) = u2.type_of(sig).unwrap();
    let v = random_term_from(sig, &t2c, 3, r);
    let w = random_term_from(sig, &sc, 3, r);
    let seq = Term::seq;
    let par = Term::par;
    let id = |w: &[ColourId]| Term::Id(w.to_vec());
    let sym = |a: &[ColourId], b: &[ColourId]| Term::Sym(a.to_vec(), b.to_vec());
    let cat = |a: &[ColourId], b: &[ColourId]| -> Vec<ColourId> { a.iter().chain(b.iter()).copied().collect() };
    let m = random_word_of(sig, r);
    let n = random_word_of(sig, r);
    let o = random_word_of(sig, r);

    out.push(("smc seq-assoc".into(), seq(seq(s.clone(), t.clone()), u.clone()), seq(s.clone(), seq(t.clone(), u))));
    out.push(("smc left-id".into(), seq(id(&sd), s.clone()), s.clone()));
    out.push(("smc right-id".into(), seq(s.clone(), id(&sc)), s.clone()));
    out.push(("smc par-assoc".into(), par(par(s.clone(), t2.clone()), u2.clone()), par(s.clone(), par(t2.clone(), u2.clone()))));
    out.push(("smc par-unit".into(), par(id(&[]), s.clone()), par(s.clone(), id(&[]))));
    out.push((
        "smc interchange".into(),
        par(seq(s.clone(), w.clone()), seq(t2.clone(), v.clone())),
        seq(par(s.clone(), t2.clone()), par(w, v)),
    ));
    out.push(("smc id-tensor".into(), par(id(&m), id(&n)), id(&cat(&m, &n))));
    out.push((
        "smc sym-hexagon".into(),
        seq(par(sym(&m, &n), id(&o)), par(id(&n), sym(&m, &o))),
        sym(&m, &cat(&n, &o)),
    ));
    out.push(("smc sym-involutive".into(), seq(sym(&m, &n), sym(&n, &m)), id(&cat(&m, &n))));
    out.push(("smc sym-natural".into(), seq(par(s.clone(), id(&m)), sym(&sc, &m)), seq(sym(&sd, &m), par(id(&m), s))));
    let _ = (t2d, u2d);

    let l = |a: &str, b: &str| (p(a), p(b));
    let monoid = [
        ("assoc", format!("({} + {id1}) ; {}", f("mult"), f("mult")), format!("({id1} + {}) ; {}", f("mult"), f("mult"))),
        ("left-unit", format!("({} + {id1}) ; {}", f("unit"), f("mult")), id1.clone()),
        ("right-unit", format!("({id1} + {}) ; {}", f("unit"), f("mult")), id1.clone()),
        ("comm", format!("{sym11} ; {}", f("mult")), f("mult")),
        ("coassoc", format!("{} ; ({} + {id1})", f("comult"), f("comult")), format!("{} ; ({id1} + {})", f("comult"), f("comult"))),
        ("left-counit", format!("{} ; ({} + {id1})", f("comult"), f("counit")), id1.clone()),
        ("right-counit", format!("{} ; ({id1} + {})", f("comult"), f("counit")), id1.clone()),
        ("cocomm", format!("{} ; {sym11}", f("comult")), f("comult")),
        ("frobenius-left", format!("({} + {id1}) ; ({id1} + {})", f("comult"), f("mult")), format!("{} ; {}", f("mult"), f("comult"))),
        ("frobenius-right", format!("({id1} + {}) ; ({} + {id1})", f("comult"), f("mult")), format!("{} ; {}", f("mult"), f("comult"))),
        ("special", format!("{} ; {}", f("comult"), f("mult")), id1.clone()),
    ];
    for (name, a, b) in monoid {
        let (x, y) = l(&a, &b);
        out.push((format!("frob {name}"), x, y));
    }
    out
}

fn random_word_of(sig: &Signature, r: &mut rand_chacha::ChaCha8Rng) -> Vec<ColourId> {
    let n = r.gen_range(0..=2);
    (0..n).map(|_| r.gen_range(0..sig.colours.len())).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut mono = Signature::monochrome();
    mono.add_mono("f", 1, 1);
    mono.add_mono("g", 2, 1);
    mono.add_mono("h", 1, 2);
    mono.add_mono("k", 0, 1);
    let mut two = Signature::new(&["a", "b"]);
    two.add_generator("f", vec![0], vec![1]);
    two.add_generator("g", vec![1, 0], vec![1]);
    two.add_generator("k", vec![], vec![0]);
    let mut checked = 0;
    let mut names = BTreeSet::new();
    for (sig, colours) in [(&mono, vec![0]), (&two, vec![0, 1])] {
        for &c in &colours {
            let mut r = rng(1000 + c as u64 + 10 * sig.colours.len() as u64);
            let count = laws(sig, c, &mut r).len();
            for k in 0..count {
                for wrap in 0..100u64 {
                    let mut lr = rng(wrap * 131 + k as u64 * 7 + c as u64);
                    let (name, a, b) = laws(sig, c, &mut lr).swap_remove(k);
                    let (da, ca) = a.type_of(sig).map_err(|e| format!("{name}: {e}"))?;
                    let (db, cb) = b.type_of(sig).map_err(|e| format!("{name}: {e}"))?;
                    ensure(da == db && ca == cb, || format!("{name}: sides have different types"))?;
                    let ctx = random_context(sig, &da, &ca, 9, &mut lr);
                    let x = cospan(sig, &ctx.plug(&a))?;
                    let y = cospan(sig, &ctx.plug(&b))?;
                    ensure(cospan_iso(&x, &y), || format!("{name} (colour {c}) fails in context {wrap}"))?;
                    names.insert(format!("{}:{name}", sig.colours.len()));
                    checked += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{} law instances, {checked} wrapped checks", names.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let s = Signature::parse("f : 1 -> 1\ng : 1 -> 1\n").map_err(|e| e.to_string())?;
    let h = interp(&s, &parse("(f ; g) + (f ; g)", &s).unwrap()).unwrap().fold().0;
    let lr = Rule::parse("lr : f ; g => id[1]", &s).unwrap();
    let n = find_matches(&lr, &h).map_err(|e| e.to_string())?.len();
    ensure(n == 2, || format!("LR has {n} matches"))?;
    let rl = lr.reversed();
    let a1 = h.graph.edges[0].targets[0];
    let hom = Homomorphism { nodes: vec![a1], edges: vec![] };
    let en = complements_enumerate(&rl, &h, &hom).map_err(|e| e.to_string())?;
    let big: Vec<&Fibre> = en.fibres.iter().filter(|f| f.elements.len() > 1).collect();
    ensure(big.len() == 1 && big[0].elements.len() == 4, || "fibre over a1 should have 4 elements".into())?;
    let names: Vec<String> = big[0].elements.iter().map(|e| e.1.to_string()).collect();
    ensure(en.examined == 15, || format!("{} partitions", en.examined))?;
    ensure(en.complements.len() == 5, || format!("{} complements", en.complements.len()))?;
    let results: Vec<InterfacedGraph> = en
        .complements
        .iter()
        .map(|c| rewrite_step(&rl, &Match { hom: hom.clone(), complement: c.clone() }).unwrap())
        .collect();
    for i in 0..results.len() {
        for j in 0..i {
            ensure(!interfaced_iso(&results[i], &results[j]), || format!("results {i} and {j} are isomorphic"))?;
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("2 matches; fibre {{{}}}; 15 partitions; 5 complements; 5 distinct results", names.join(",")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let orders = [
        UpsilonOrder::First,
        UpsilonOrder::Last,
        UpsilonOrder::Middle,
        UpsilonOrder::Alternate,
        UpsilonOrder::Random(99),
    ];
    let mut steps = 0;
    for seed in 0..200u64 {
        let g = random_two_colour_graph(&mut rng(3000 + seed), 8);
        let (base, k) = upsilon_normalize_with(&g, orders[0]);
        steps += k;
        for o in &orders[1..] {
            let (n, _) = upsilon_normalize_with(&g, *o);
            ensure(interfaced_iso(&base, &n), || format!("graph {seed}: order {o:?} gives a different normal form"))?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("200 graphs x 5 orders agree ({steps} contractions under the first order)"))
}

fn criterion_4() -> Outcome {
    let base = Signature::parse("o : 0 -> 1\nfamily r : rmu reta rdelta reps\n").map_err(|e| e.to_string())?;
    let ps = PolySignature::new(&base).map_err(|e| e.to_string())?;
    let l = parse("o ; rdelta ; (reps + reps)", &ps.base).unwrap();
    let rules = vec![BaseRule { name: "alpha".into(), lhs: l.clone(), rhs: parse("id[0]", &ps.base).unwrap() }];
    let naive = multifrob_rewrite(&ps, &rules, &l, 10, false).map_err(|e| e.to_string())?;
    ensure(naive.log.is_empty() && naive.fixpoint && !naive.result.graph.is_empty(), || {
        "naive pipeline was expected to be stuck".into()
    })?;
    let run = multifrob_rewrite(&ps, &rules, &l, 10, true).map_err(|e| e.to_string())?;
    ensure(run.result.graph.is_empty() && run.result.interface.is_empty(), || {
        "transformed pipeline did not reach the empty graph".into()
    })?;
    Ok(format!(
        "naive: stuck at {} nodes/{} edges; transformed: empty after {} step(s)",
        naive.result.graph.node_count(),
        naive.result.graph.edge_count(),
        run.log.len()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let sig = group_signature();
    let pack = GroupPack::new(&sig).map_err(|e| e.to_string())?;
    let z3 = FiniteModel::cyclic_group(&sig, 3).map_err(|e| e.to_string())?;
    let mut total_steps = 0;
    let mut nat = 0;
    for seed in 0..100u64 {
        let (g, n) = random_group_host(&mut rng(5000 + seed), 10, 12);
        let budget = 10 * g.graph.edge_count();
        let run = group_reduce_with(&pack, &g, budget, &mut |st, _| {
            if st.phase == Phase::Naturality {
                assert!(revlex_less(&st.after, &st.before), "accepted naturality step did not decrease the profile");
                nat += 1;
            }
            Ok(())
        })
        .map_err(|e| format!("host {seed}: {e}"))?;
        ensure(run.fixpoint, || format!("host {seed}: no fixpoint within {budget} steps"))?;
        let before = z3.eval_cospan(&sig, &Cospan::unfold(&g, n)).map_err(|e| e.to_string())?;
        let after = z3.eval_cospan(&sig, &Cospan::unfold(&run.result, n)).map_err(|e| e.to_string())?;
        ensure(before == after, || format!("host {seed}: Z3 relation changed"))?;
        total_steps += run.steps.len();
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("100 hosts, {total_steps} steps ({nat} naturality), Z3 relations preserved"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut iterations = 0;
    for seed in 0..100u64 {
        let (g, n) = random_ib_host(&mut rng(6000 + seed), 8, 8, IB);
        let s = ib_subspace(&g, IB).map_err(|e| e.to_string())?;
        let mut checks = 0;
        let run = ib_reduce_with(&g, n, IB, &mut |ev, h| {
            checks += 1;
            let t = ib_subspace(h, IB)?;
            assert!(t == s, "host {seed}: subspace changed at step {} ({})", ev.step, ev.action);
            Ok(())
        })
        .map_err(|e| format!("host {seed}: {e}"))?;
        ensure(run.iterations == run.initial_interior, || {
            format!("host {seed}: {} iterations for {} interior nodes", run.iterations, run.initial_interior)
        })?;
        ib_is_reduced(&run.result, n, IB).map_err(|e| format!("host {seed}: {e}"))?;
        ensure(checks == run.log.len(), || "observer missed a step".into())?;
        iterations += run.iterations;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("100 hosts, {iterations} eliminations, GF(2) subspace preserved at every step"))
}

fn criterion_7() -> Outcome {
    let (g, n) = existential_example();
    let s = ib_subspace(&g, IB).map_err(|e| e.to_string())?;
    let run = ib_reduce(&g, n, IB).map_err(|e| e.to_string())?;
    let eqs: Vec<String> =
        readoff_system(&run.result, n, IB).map_err(|e| e.to_string())?.iter().map(|e| e.to_string()).collect();
    ensure(eqs == ["x0 + x1 = y0", "0 = y0", "x0 + x1 = 0"], || format!("read off {eqs:?}"))?;
    ensure(readoff_reduced(&run.result, IB).map_err(|e| e.to_string())? == s, || "cospan form disagrees".into())?;
    let swapped = ib_reduce_swapped(&g, n, IB).map_err(|e| e.to_string())?;
    let span = readoff_span(&swapped.result, IB).map_err(|e| e.to_string())?;
    let expected = Subspace2::span(3, &[vec![true, true, false]]);
    ensure(span == expected && span.basis() == expected.basis(), || format!("span form {span}"))?;
    ensure(span == s, || "span form disagrees with the host".into())?;
    Ok(format!("{{{}}}; span form {}", eqs.join(", "), span))
}

/// Random model on carrier 2 for the signature `f, g, h, k`.
fn random_model(sig: &Signature, r: &mut rand_chacha::ChaCha8Rng) -> FiniteModel {
    let mut m = FiniteModel::new(sig, vec![2], vec![SpiderKind::Equal]).unwrap();
    for g in 0..sig.generators.len() {
        let gen = sig.generator(g);
        let arity = gen.arity.len() + gen.coarity.len();
        let tuples: Vec<Vec<usize>> = (0..1usize << arity)
            .filter(|_| r.gen_bool(0.5))
            .map(|bits| (0..arity).map(|i| bits >> i & 1).collect())
            .collect();
        m.set_relation(sig, g, tuples).unwrap();
    }
    m
}

/// Hosts admitting more DPOI steps than this are replaced by fresh ones.
const HOST_STEP_BUDGET: usize = 2000;

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut sig = Signature::monochrome();
    sig.add_mono("f", 1, 1);
    sig.add_mono("g", 2, 1);
    sig.add_mono("h", 1, 2);
    sig.add_mono("k", 0, 1);
    let mut steps = 0;
    let mut rule_count = 0;
    let mut resampled = 0;
    let mut seed = 0u64;
    while rule_count < 50 {
        seed += 1;
        let mut r = rng(8000 + seed);
        let model = random_model(&sig, &mut r);
        let size = r.gen_range(1..=3);
        let l = random_term(&sig, size, &mut r);
        let (d, c) = l.type_of(&sig).unwrap();
        let rel = model.eval_term(&sig, &l).map_err(|e| e.to_string())?;
        let lc = cospan(&sig, &l)?;
        let mut found = None;
        // right-hand sides equal in the model but not as diagrams
        for _ in 0..400 {
            let cand = random_term_from(&sig, &d, r.gen_range(0..=3), &mut r);
            if cand.type_of(&sig).unwrap().1 == c
                && model.eval_term(&sig, &cand).unwrap() == rel
                && !cospan_iso(&lc, &cospan(&sig, &cand)?)
            {
                found = Some(cand);
                break;
            }
        }
        let Some(rt) = found else { continue };
        let rule = Rule::from_terms(&sig, &format!("r{rule_count}"), &l, &rt).map_err(|e| e.to_string())?;
        rule_count += 1;
        let mut hosts = 0;
        let mut hseed = 0u64;
        while hosts < 20 {
            hseed += 1;
            ensure(hseed < 400, || format!("rule {}: too few hosts within the step budget", rule.name))?;
            let mut hr = rng(hseed * 977 + seed);
            // contexts shrink while hosts keep being too large
            let size = 6usize.saturating_sub(hseed as usize / 25).max(1);
            let ctx = random_context(&sig, &d, &c, size, &mut hr);
            let host_c = cospan(&sig, &ctx.plug(&l))?;
            let want = model.eval_cospan(&sig, &host_c).map_err(|e| e.to_string())?;
            let (host, n) = host_c.fold();
            // hosts with too many candidate steps are resampled
            let mut matches = Vec::new();
            let found = for_each_match(&rule, &host, &mut |m| {
                matches.push(m);
                matches.len() <= HOST_STEP_BUDGET
            });
            match found {
                Ok(()) if matches.len() <= HOST_STEP_BUDGET => {}
                Ok(()) | Err(Error::FibreTooLarge { .. }) => {
                    resampled += 1;
                    continue;
                }
                Err(e) => return Err(e.to_string()),
            }
            let mut bad = None;
            // identical results need one evaluation
            let mut seen: HashMap<Cospan, bool> = HashMap::new();
            for m in &matches {
                let out = rewrite_step(&rule, m).map_err(|e| e.to_string())?;
                let cs = Cospan::unfold(&out, n);
                let ok = match seen.get(&cs) {
                    Some(ok) => *ok,
                    None => {
                        let ok = model.eval_cospan(&sig, &cs).map_err(|e| e.to_string())? == want;
                        seen.insert(cs, ok);
                        ok
                    }
                };
                steps += 1;
                if !ok {
                    bad = Some(format!("rule {} on host {hseed}", rule.name));
                    break;
                }
            }
            if let Some(b) = bad {
                return Err(format!("semantics changed: {b}"));
            }
            hosts += 1;
        }
    }
    ensure(steps > 0, || "no rewrite step was exercised".into())?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "50 rules with non-isomorphic sides, 1000 hosts, {steps} steps, all preserve the relation; \
         {resampled} oversized hosts resampled"
    ))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9000);
    for _ in 0..1000 {
        let a = random_profile(&mut r, 4, 3);
        let b = random_profile(&mut r, 4, 3);
        let c = random_profile(&mut r, 4, 3);
        ensure(!revlex_less(&a, &a), || format!("{a:?} < itself"))?;
        ensure(!(revlex_less(&a, &b) && revlex_less(&b, &a)), || format!("{a:?}, {b:?} both ways"))?;
        ensure(a == b || revlex_less(&a, &b) || revlex_less(&b, &a), || format!("{a:?}, {b:?} incomparable"))?;
        if revlex_less(&a, &b) && revlex_less(&b, &c) {
            ensure(revlex_less(&a, &c), || format!("{a:?} < {b:?} < {c:?} not transitive"))?;
        }
    }
    let mut sig = Signature::new(&["a", "b"]);
    sig.add_generator("f", vec![0], vec![1]);
    sig.add_generator("g", vec![1, 1], vec![0]);
    sig.add_generator("k", vec![], vec![1]);
    let mut model = FiniteModel::new(&sig, vec![2, 2], vec![SpiderKind::Equal, SpiderKind::Parity]).unwrap();
    for seed in 0..200u64 {
        let mut tr = rng(9100 + seed);
        if seed % 20 == 0 {
            model = FiniteModel::new(&sig, vec![2, 2], vec![SpiderKind::Equal, SpiderKind::Parity]).unwrap();
            for g in 0..sig.generators.len() {
                let gen = sig.generator(g);
                let arity = gen.arity.len() + gen.coarity.len();
                let tuples: Vec<Vec<usize>> = (0..1usize << arity)
                    .filter(|_| tr.gen_bool(0.5))
                    .map(|bits| (0..arity).map(|i| bits >> i & 1).collect())
                    .collect();
                model.set_relation(&sig, g, tuples).unwrap();
            }
        }
        let t = random_term(&sig, 6, &mut tr);
        let a = model.eval_term(&sig, &t).map_err(|e| e.to_string())?;
        let b = model.eval_cospan(&sig, &cospan(&sig, &t)?).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("term {seed}: compositional and graph evaluation differ"))?;
    }
    for seed in 0..100u64 {
        let (g, _) = random_reduced_host(&mut rng(9500 + seed), IB);
        let a = readoff_reduced(&g, IB).map_err(|e| e.to_string())?;
        let b = ib_subspace(&g, IB).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("reduced host {seed}: read-off disagrees with elimination"))?;
    }
    Ok("order laws on 1000 triples; 200 terms; 100 reduced hosts".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("axiom soundness", criterion_1),
        ("worked DPOI example counts", criterion_2),
        ("upsilon confluence", criterion_3),
        ("rule transform counterexample", criterion_4),
        ("group strategy", criterion_5),
        ("IB strategy", criterion_6),
        ("quantifier elimination example", criterion_7),
        ("DPOI soundness on finite models", criterion_8),
        ("orders and oracles", criterion_9),
    ];
    // ACCEPTANCE_ONLY=3,8 runs a subset
    let only: Option<Vec<usize>> =
        std::env::var("ACCEPTANCE_ONLY").ok().map(|v| v.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if only.as_ref().is_some_and(|o| !o.contains(&(i + 1))) {
            continue;
        }
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match res {
            Ok(detail) => println!("criterion {}: {name}: PASS ({detail}; {:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
