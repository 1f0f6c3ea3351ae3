//! Acceptance checks, one PASS/FAIL line each. Exits non-zero on failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use k4c_core::algebra::{
    algebra_validates, complex_algebra, dual_frame, eval_universal, subalgebra_generated,
    transfer_countermodel, Clause, Literal, UniversalSentence, DEFAULT_TUPLE_CAP,
};
use k4c_core::decision::{
    decide, enumerate_frames, m_closure, separate_logics, BoundMode, Budget, Extension, LogicSpec,
    VerdictKind,
};
use k4c_core::filtration::{filter, refine, FiltrationResult, LinearOrder, Variant};
use k4c_core::formula::{named_axiom, subformula_closure, Axiom};
use k4c_core::gen::{
    random_formula, random_frame, random_model, random_phi, vars, Finals, FrameParams,
};
use k4c_core::kripke::{
    brute_canonical, check_property, circumference, clusters, frame_valid, is_isomorphic,
    relations_up_to_iso, ClusterKind, Property, DEFAULT_VALUATION_CAP,
};
use k4c_core::topology::{
    alexandroff, is_hered_n_irresolvable, separation, valid_c, valid_d, Separation,
    DEFAULT_SEARCH_CAP,
};
use k4c_core::{Formula, FormulaSet, Frame, Model, WorldSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: u128 = DEFAULT_VALUATION_CAP;

type Check = Result<String, String>;

/// Collects discrepancies, keeping the first few for the report.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }

    fn finish(self, summary: String) -> Check {
        if self.failures == 0 {
            Ok(format!("{summary}, {} checks", self.cases))
        } else {
            Err(format!(
                "{summary}: {} of {} checks failed; e.g. {}",
                self.failures,
                self.cases,
                self.examples.join("; ")
            ))
        }
    }
}

fn transitive_frames(max: usize) -> Vec<Frame> {
    enumerate_frames(max, &LogicSpec::plain(max)).collect()
}

fn relations_upto(max: usize) -> Vec<Frame> {
    (1..=max).flat_map(relations_up_to_iso).collect()
}

fn criterion_1() -> Check {
    let frames = transitive_frames(5);
    let mut t = Tally::default();
    let canon: BTreeSet<Frame> = frames.iter().map(brute_canonical).collect();
    t.check(
        canon.len() == frames.len() && &canon == brute_transitive_classes(),
        || {
            format!(
                "enumerated {} frames, brute force found {}",
                frames.len(),
                brute_transitive_classes().len()
            )
        },
    );
    for f in &frames {
        let circ = longest_cycle(f);
        t.check(circumference(f).unwrap() == circ, || {
            format!("circumference of {:?}", f.edges())
        });
        for n in 0..=3 {
            let valid = frame_valid(f, &c_instance(n, false), CAP).unwrap();
            t.check(valid == (circ <= n), || {
                format!("n={n} frame {:?}", f.edges())
            });
        }
    }
    t.finish(format!("{} frames x n in 0..=3", frames.len()))
}

fn criterion_2() -> Check {
    let mut t = Tally::default();
    let c0 = c_instance(0, false);
    let lob = named_axiom(Axiom::Lob);
    let dual = named_axiom(Axiom::LobDual);
    let all = relations_upto(4);
    for f in &all {
        let a = frame_valid(f, &c0, CAP).unwrap();
        let b = frame_valid(f, &dual, CAP).unwrap();
        let c = frame_valid(f, &lob, CAP).unwrap();
        t.check(a == b && b == c, || {
            format!("C0/Lob on {:?}: {a} {b} {c}", f.edges())
        });
        // Lob holds exactly on the finite strict partial orders
        t.check(c == (f.is_transitive() && longest_cycle(f) == 0), || {
            format!("Lob shape on {:?}", f.edges())
        });
    }
    let c1 = c_instance(1, false);
    let grz = named_axiom(Axiom::GrzBox);
    let trans = transitive_frames(5);
    for f in &trans {
        let a = frame_valid(f, &c1, CAP).unwrap();
        let b = frame_valid(f, &grz, CAP).unwrap();
        t.check(a == b, || format!("C1/GrzBox on {:?}: {a} {b}", f.edges()));
    }
    t.finish(format!(
        "{} relations, {} transitive frames",
        all.len(),
        trans.len()
    ))
}

/// Filters `m` through `phi`, refines with `Base`, and checks every
/// property against the naive evaluator.
fn check_filtration(
    t: &mut Tally,
    m: &Model,
    phi: &FormulaSet,
    n: usize,
    tag: &str,
) -> Option<FiltrationResult> {
    let fr = match filter(m, phi) {
        Ok(fr) => fr,
        Err(e) => {
            t.fail(format!("{tag}: filter failed: {e}"));
            return None;
        }
    };
    let src = m.frame();
    let k = fr.class_count();
    t.check((k as u128) <= 1u128 << phi.len(), || {
        format!("{tag}: {k} classes for |Φ|={}", phi.len())
    });
    let preserves = (0..src.worlds()).all(|x| {
        src.succ(x)
            .iter()
            .all(|y| fr.r_phi().has_edge(fr.class_of(x), fr.class_of(y)))
    });
    t.check(preserves, || format!("{tag}: R not preserved"));
    let filtered = fr.model();
    for f in phi.iter() {
        let preserved = (0..src.worlds()).all(|x| {
            holds_at(src, m.valuation(), f, x)
                == holds_at(filtered.frame(), filtered.valuation(), f, fr.class_of(x))
        });
        t.check(preserved, || {
            format!("{tag}: truth on phi not preserved for {f}")
        });
    }
    match refine(&fr, n, Variant::Base) {
        Ok((rec, out)) => {
            t.check(rec.records.iter().all(|r| r.core.len() <= n), || {
                format!("{tag}: core over n")
            });
            let r = out.frame();
            let sub = (0..k).all(|a| r.succ(a).is_subset(fr.r_phi().succ(a)));
            t.check(sub, || format!("{tag}: R' not inside R_Φ"));
            t.check(r.is_transitive(), || format!("{tag}: R' not transitive"));
            t.check(longest_cycle(r) <= n, || {
                format!("{tag}: refined circumference over {n}")
            });
            for f in phi.iter() {
                let a = naive_truth_set(r, out.valuation(), f);
                let b = naive_truth_set(filtered.frame(), filtered.valuation(), f);
                t.check(a == b, || format!("{tag}: truth of {f} changed"));
            }
        }
        Err(e) => t.fail(format!("{tag}: refine failed: {e}")),
    }
    Some(fr)
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut t = Tally::default();
    let vs = vars(3);
    let cases = 1000;
    for i in 0..cases {
        let n = i % 4;
        let params = FrameParams {
            max_worlds: 8,
            max_cluster: n,
            edge_prob: rng.gen_range(0.1..0.9),
            ..FrameParams::default()
        };
        let frame = random_frame(&mut rng, &params).unwrap();
        t.check(longest_cycle(&frame) <= n, || {
            format!("case {i}: source outside class")
        });
        let m = random_model(&mut rng, frame, &vs);
        let phi = random_phi(&mut rng, &vs, 10);
        check_filtration(&mut t, &m, &phi, n, &format!("case {i}"));
    }
    t.finish(format!("{cases} random models"))
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut t = Tally::default();
    let vs = vars(2);
    let per = 200;
    let source = |rng: &mut ChaCha8Rng, n: usize, p: FrameParams| -> Model {
        let frame = random_frame(
            rng,
            &FrameParams {
                max_worlds: 7,
                max_cluster: n,
                ..p
            },
        )
        .unwrap();
        random_model(rng, frame, &vs)
    };
    for i in 0..per {
        // reflexive variant
        let n = 1 + i % 3;
        let m = source(
            &mut rng,
            n,
            FrameParams {
                all_reflexive: true,
                ..FrameParams::default()
            },
        );
        let phi = random_phi(&mut rng, &vs, 10);
        match filter(&m, &phi).and_then(|fr| refine(&fr, n, Variant::Reflexive)) {
            Ok((_, out)) => {
                let r = out.frame();
                t.check(check_property(r, Property::Reflexive), || {
                    format!("reflexive {i}: not reflexive")
                });
                if n == 1 {
                    t.check(check_property(r, Property::Antisymmetric), || {
                        format!("reflexive {i}: not antisymmetric")
                    });
                }
            }
            Err(e) => t.fail(format!("reflexive {i}: {e}")),
        }

        // linear variant
        let n = i % 4;
        let m = source(
            &mut rng,
            n,
            FrameParams {
                linear: true,
                ..FrameParams::default()
            },
        );
        let phi = random_phi(&mut rng, &vs, 10);
        let order = if i % 2 == 0 {
            LinearOrder::Ascending
        } else {
            LinearOrder::Shuffled(i as u64)
        };
        match filter(&m, &phi).and_then(|fr| refine(&fr, n, Variant::Linear(order))) {
            Ok((_, out)) => {
                let r = out.frame();
                t.check(check_property(r, Property::Connected), || {
                    format!("linear {i}: not connected")
                });
                t.check(clusters(r).unwrap().is_linear(), || {
                    format!("linear {i}: clusters not a chain")
                });
            }
            Err(e) => t.fail(format!("linear {i}: {e}")),
        }

        // seriality
        let n = 1 + i % 3;
        let m = source(
            &mut rng,
            n,
            FrameParams {
                finals: Finals::NonDegenerate,
                ..FrameParams::default()
            },
        );
        let phi = random_phi(&mut rng, &vs, 10);
        match filter(&m, &phi).and_then(|fr| refine(&fr, n, Variant::Base)) {
            Ok((_, out)) => t.check(check_property(out.frame(), Property::Serial), || {
                format!("serial {i}: dead end")
            }),
            Err(e) => t.fail(format!("serial {i}: {e}")),
        }

        // M: filter through the M-closure
        let n = 1 + i % 3;
        let m = source(
            &mut rng,
            n,
            FrameParams {
                finals: Finals::Simple,
                ..FrameParams::default()
            },
        );
        let sigma: FormulaSet = [random_formula(&mut rng, &vs, 2)].into_iter().collect();
        let phi = m_closure(&sigma);
        match filter(&m, &phi).and_then(|fr| refine(&fr, n, Variant::Base)) {
            Ok((_, out)) => {
                let dec = clusters(out.frame()).unwrap();
                t.check(dec.finals().all(|c| c.kind == ClusterKind::Simple), || {
                    format!("M {i}: non-simple final cluster")
                });
            }
            Err(e) => t.fail(format!("M {i}: {e}")),
        }

        // E: add dia box bot to Φ
        let n = i % 4;
        let m = source(
            &mut rng,
            n,
            FrameParams {
                finals: Finals::Degenerate,
                ..FrameParams::default()
            },
        );
        let mut sigma: FormulaSet = random_phi(&mut rng, &vs, 8);
        sigma.insert(Formula::dia(Formula::boxed(Formula::bot())));
        let phi = subformula_closure(&sigma);
        let e = named_axiom(Axiom::E);
        t.check(naive_frame_valid(m.frame(), &e), || {
            format!("E {i}: source fails E")
        });
        match filter(&m, &phi).and_then(|fr| refine(&fr, n, Variant::Base)) {
            Ok((_, out)) => t.check(naive_frame_valid(out.frame(), &e), || {
                format!("E {i}: output fails E")
            }),
            Err(e) => t.fail(format!("E {i}: {e}")),
        }
    }
    t.finish(format!("{per} cases per variant"))
}

/// Membership of a finite frame in a logic, from the axioms themselves.
fn in_logic(f: &Frame, spec: &LogicSpec) -> bool {
    f.is_transitive()
        && longest_cycle(f) <= spec.n()
        && spec.extensions().all(|e| naive_frame_valid(f, &e.axiom()))
}

fn criterion_5() -> Check {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut specs = Vec::new();
    for n in 0..=2 {
        for ext in [
            None,
            Some(Extension::D),
            Some(Extension::T),
            Some(Extension::Three),
            Some(Extension::M),
            Some(Extension::E),
        ] {
            if let Ok(s) = LogicSpec::new(n, ext) {
                specs.push(s);
            }
        }
    }
    let mut formulas: Vec<Formula> = Axiom::ALL.iter().map(|&a| named_axiom(a)).collect();
    formulas.extend((0..=1).map(|n| c_instance(n, false)));
    formulas.extend((0..12).map(|_| random_formula(&mut rng, &vars(2), 3)));
    let mut non_theorems = 0;
    let mut theorems = 0;
    let small = Budget {
        max_worlds: 3,
        ..Budget::default()
    };
    let reduced = Budget {
        max_worlds: 4,
        bound_mode: BoundMode::Reduced,
        ..Budget::default()
    };
    for spec in &specs {
        let frames3: Vec<Frame> = enumerate_frames(3, spec).collect();
        for phi in &formulas {
            for (budget, exhaustive) in [(&small, false), (&reduced, true)] {
                let v = match decide(spec, phi, budget, exhaustive) {
                    Ok(v) => v,
                    Err(e) => {
                        t.fail(format!("decide {spec} {phi}: {e}"));
                        continue;
                    }
                };
                match v.kind {
                    VerdictKind::NonTheorem => {
                        non_theorems += 1;
                        let m = v.countermodel.as_ref().unwrap();
                        let falsified =
                            naive_truth_set(m.frame(), m.valuation(), phi) != m.frame().universe();
                        t.check(falsified && in_logic(m.frame(), spec), || {
                            format!("unsound countermodel for {phi} in {spec}")
                        });
                    }
                    VerdictKind::Theorem => {
                        theorems += 1;
                        t.check(exhaustive, || {
                            format!("Theorem without exhaustive search: {phi}")
                        });
                        let refuted = frames3.iter().any(|f| !naive_frame_valid(f, phi));
                        t.check(!refuted, || format!("unsound Theorem {phi} in {spec}"));
                    }
                    VerdictKind::Unknown => {}
                }
            }
        }
    }
    for n in 0..=3 {
        match separate_logics(n, n + 1) {
            Ok((phi, m)) => {
                t.check(is_isomorphic(m.frame(), &Frame::cluster(n + 1)), || {
                    format!("separate {n}: wrong frame")
                });
                t.check(
                    naive_truth_set(m.frame(), m.valuation(), &phi) != m.frame().universe(),
                    || format!("separate {n}: formula not falsified"),
                );
                t.check(phi == c_instance(n, false), || {
                    format!("separate {n}: not the scheme instance")
                });
                t.check(
                    frame_valid(m.frame(), &c_instance(n + 1, false), CAP).unwrap(),
                    || format!("separate {n}: frame fails the larger logic"),
                );
            }
            Err(e) => t.fail(format!("separate {n}: {e}")),
        }
    }
    // T over reflexive frames of circumference 1
    let spec = LogicSpec::new(1, [Extension::T]).unwrap();
    let tax = named_axiom(Axiom::T);
    for (mode, cap, expect) in [
        (BoundMode::Reduced, 8, VerdictKind::Theorem),
        (BoundMode::Reduced, 3, VerdictKind::Unknown),
        (BoundMode::Primitive, 8, VerdictKind::Unknown),
    ] {
        let budget = Budget {
            max_worlds: cap,
            bound_mode: mode,
            ..Budget::default()
        };
        let v = decide(&spec, &tax, &budget, true).unwrap();
        t.check(v.kind == expect, || {
            format!("T over {spec} with {mode:?}, cap {cap}: {:?}", v.kind)
        });
        if v.kind == VerdictKind::Theorem {
            t.check(
                v.completeness_bound <= cap as u128
                    && v.searched_bound as u128 >= v.completeness_bound,
                || "Theorem before reaching the bound".into(),
            );
        }
    }
    t.finish(format!(
        "{non_theorems} NonTheorem, {theorems} Theorem verdicts re-checked"
    ))
}

fn preorders(max: usize) -> Vec<Frame> {
    enumerate_frames(max, &LogicSpec::new(max, [Extension::T]).unwrap()).collect()
}

fn criterion_6() -> Check {
    let mut t = Tally::default();
    let orders = preorders(5);
    let canon: BTreeSet<Frame> = orders.iter().map(brute_canonical).collect();
    let brute: BTreeSet<Frame> = brute_transitive_classes()
        .iter()
        .filter(|f| check_property(f, Property::Reflexive))
        .cloned()
        .collect();
    t.check(canon.len() == orders.len() && canon == brute, || {
        format!(
            "{} preorders enumerated, brute force found {}",
            orders.len(),
            brute.len()
        )
    });
    let lob = named_axiom(Axiom::Lob);
    for f in &orders {
        let s = alexandroff(f).unwrap();
        let tag = || format!("space {:?}", s.opens());
        for n in 1..=3 {
            let h = is_hered_n_irresolvable(&s, n + 1, DEFAULT_SEARCH_CAP).unwrap();
            let vc = valid_c(&s, &c_instance(n, false), CAP).unwrap();
            let vd = valid_d(&s, &c_instance(n, false), CAP).unwrap();
            let vds = valid_d(&s, &c_instance(n, true), CAP).unwrap();
            t.check(h == vc && vc == vd && vd == vds, || {
                format!("n={n} {}: {h} {vc} {vd} {vds}", tag())
            });
        }
        let t0 = separation(&s, Separation::T0);
        let td = separation(&s, Separation::TD);
        let sc = separation(&s, Separation::Scattered);
        let h2 = is_hered_n_irresolvable(&s, 2, DEFAULT_SEARCH_CAP).unwrap();
        t.check(t0 == td && td == sc && sc == h2, || {
            format!("{}: {t0} {td} {sc} {h2}", tag())
        });
        t.check(sc == valid_d(&s, &lob, CAP).unwrap(), || {
            format!("{}: scattered vs Lob", tag())
        });
        for bits in 0..1u64 << s.points() {
            let y = WorldSet::from_bits(bits);
            let d = s.derived_set(y);
            t.check(d == naive_derived(&s, y), || {
                format!("{}: derived set of {y:?}", tag())
            });
            t.check(s.derived_set(d).is_subset(y.union(d)), || {
                format!("{}: dd of {y:?}", tag())
            });
        }
    }
    t.finish(format!("{} spaces", orders.len()))
}

fn criterion_7() -> Check {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut sample: Vec<Formula> = Axiom::ALL.iter().map(|&a| named_axiom(a)).collect();
    while sample.len() < 20 {
        sample.push(random_formula(&mut rng, &vars(2), 3));
    }
    let orders = preorders(4);
    for f in &orders {
        let s = alexandroff(f).unwrap();
        for phi in &sample {
            let kripke = frame_valid(f, phi, CAP).unwrap();
            t.check(kripke == naive_valid_c(&s, phi), || {
                format!("{phi} on {:?}", f.edges())
            });
            t.check(kripke == valid_c(&s, phi, CAP).unwrap(), || {
                format!("valid_c {phi} on {:?}", f.edges())
            });
        }
    }
    t.finish(format!(
        "{} quasi-orders x {} formulas",
        orders.len(),
        sample.len()
    ))
}

fn random_sentence(rng: &mut ChaCha8Rng) -> UniversalSentence {
    let vs = vars(2);
    let clauses = (0..rng.gen_range(1..=2))
        .map(|_| Clause {
            literals: (0..rng.gen_range(1..=2))
                .map(|_| {
                    let l = random_formula(rng, &vs, 2);
                    let r = random_formula(rng, &vs, 2);
                    if rng.gen_bool(0.7) {
                        Literal::eq(l, r)
                    } else {
                        Literal::neq(l, r)
                    }
                })
                .collect(),
        })
        .collect();
    UniversalSentence::new(vs, clauses).unwrap()
}

fn criterion_8() -> Check {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut sample: Vec<Formula> = [
        Axiom::K,
        Axiom::Four,
        Axiom::T,
        Axiom::D,
        Axiom::Lob,
        Axiom::GrzBox,
        Axiom::M,
        Axiom::E,
    ]
    .iter()
    .map(|&a| named_axiom(a))
    .collect();
    sample.push(c_instance(1, false));
    sample.push(random_formula(&mut rng, &vars(2), 3));
    let all = relations_upto(4);
    for f in &all {
        let a = complex_algebra(f).unwrap();
        for phi in &sample {
            let alg = algebra_validates(&a, phi, DEFAULT_TUPLE_CAP).unwrap();
            t.check(alg == frame_valid(f, phi, CAP).unwrap(), || {
                format!("{phi} on {:?}", f.edges())
            });
        }
        let d = dual_frame(&a);
        t.check(is_isomorphic(&d, f), || format!("dual of {:?}", f.edges()));
    }

    let target = 50;
    let mut transferred = 0;
    let mut attempts = 0;
    while transferred < target && attempts < 20 * target {
        attempts += 1;
        let n = 1 + attempts % 3;
        let frame = random_frame(
            &mut rng,
            &FrameParams {
                max_worlds: 6,
                max_cluster: n,
                ..FrameParams::default()
            },
        )
        .unwrap();
        let gens: Vec<WorldSet> = (0..rng.gen_range(0..=2))
            .map(|_| k4c_core::gen::random_set(&mut rng, frame.worlds()))
            .collect();
        let a = subalgebra_generated(&frame, gens).unwrap();
        let s = random_sentence(&mut rng);
        let Some(w) = eval_universal(&a, &s, DEFAULT_TUPLE_CAP).unwrap().witness else {
            continue;
        };
        transferred += 1;
        match transfer_countermodel(&a, n, &s, &w) {
            Ok(tr) => {
                let out = eval_universal(&tr.algebra, &s, DEFAULT_TUPLE_CAP).unwrap();
                t.check(!out.holds, || {
                    format!("transfer {attempts}: sentence holds afterwards")
                });
                let b = tr.algebra.base();
                t.check(b.is_transitive() && longest_cycle(b) <= n, || {
                    format!("transfer {attempts}: outside class")
                });
                t.check(tr.algebra.len() == 1 << b.worlds(), || {
                    format!("transfer {attempts}: not a complex algebra")
                });
            }
            Err(e) => t.fail(format!("transfer {attempts}: {e}")),
        }
    }
    t.check(transferred >= target, || {
        format!("only {transferred} failing sentences found")
    });
    t.finish(format!(
        "{} frames x {} formulas, {transferred} transfers",
        all.len(),
        sample.len()
    ))
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 cycle axiom characterizes circumference", criterion_1),
        ("2 Lob/C0 and GrzBox/C1 equivalences", criterion_2),
        ("3 filtration and refinement invariants", criterion_3),
        ("4 extension-preserving refinements", criterion_4),
        ("5 decision verdict soundness", criterion_5),
        ("6 topological semantics on finite spaces", criterion_6),
        ("7 Kripke and Alexandroff validity agree", criterion_7),
        ("8 modal algebra agreement, duals, transfer", criterion_8),
    ];
    let only: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (name, run) in criteria {
        let id = name.split(' ').next().unwrap();
        if !only.is_empty() && !only.iter().any(|o| o == id) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {name} ({detail}; {secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} ({detail}; {secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
