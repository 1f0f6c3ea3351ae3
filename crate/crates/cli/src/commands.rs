use std::collections::BTreeMap;

use k4c_core::algebra::{
    algebra_counter_tuple, dual_frame, eval_universal, transfer_countermodel, UniversalSentence,
    Witness,
};
use k4c_core::decision::{
    decide, separate_logics, BoundMode, Budget, Extension, LogicSpec, VerdictKind,
};
use k4c_core::filtration::{filter, refine, LinearOrder, Variant};
use k4c_core::formula::subformula_closure;
use k4c_core::json::{
    set_from_json, set_to_json, AlgebraJson, ClustersJson, FiltrationJson, FrameJson, ModelJson,
    VerdictJson, WitnessJson,
};
use k4c_core::kripke::{circumference, clusters, frame_countermodel, validates_logic, Property};
use k4c_core::topology::{
    is_hered_n_irresolvable, is_n_resolvable, separation, space_countermodel, Semantics,
    Separation, SpaceModel,
};
use k4c_core::{parse, Formula, FormulaSet, WorldSet};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{
    read_algebra, read_frame, read_json, read_model, read_space, InputError, Result,
};
use crate::{AlgCommand, BoundArg, Command, FrameCommand, SemanticsArg, TopoCommand, VariantArg};

pub enum Body {
    Json(Value),
    Text(String),
}

/// What to print, and whether the answer was positive (exit 0) or negative
/// (exit 1).
pub struct Output {
    pub body: Body,
    pub positive: bool,
}

fn json_out(v: impl Serialize, positive: bool) -> Result<Output> {
    let v = serde_json::to_value(v).map_err(|e| InputError(e.to_string()))?;
    Ok(Output {
        body: Body::Json(v),
        positive,
    })
}

fn text_out(t: String, positive: bool) -> Result<Output> {
    Ok(Output {
        body: Body::Text(t),
        positive,
    })
}

fn logic(n: usize, ext: &[String]) -> Result<LogicSpec> {
    let exts = ext
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Extension>())
        .collect::<k4c_core::Result<Vec<_>>>()?;
    Ok(LogicSpec::new(n, exts)?)
}

fn space_model_json(m: &SpaceModel) -> Value {
    let val: BTreeMap<String, Vec<usize>> = m
        .valuation()
        .iter()
        .map(|(v, s)| (v.name().to_string(), set_to_json(*s)))
        .collect();
    json!({ "points": m.space().points(), "valuation": val })
}

fn sets_json(xs: &[WorldSet]) -> Vec<Vec<usize>> {
    xs.iter().map(|&s| set_to_json(s)).collect()
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Parse(fa) => {
            let f = fa.resolve(None)?;
            let sub = subformula_closure(&FormulaSet::from_iter([f.clone()]));
            let bound = k4c_core::decision::completeness_bound(&f);
            json_out(
                json!({
                    "formula": f.to_string(),
                    "primitive": f.to_primitive_string(),
                    "size": f.size(),
                    "depth": f.depth(),
                    "vars": f.vars().iter().map(|v| v.name().to_string()).collect::<Vec<_>>(),
                    "subformulas": sub.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "completenessBound": bound.to_string(),
                }),
                true,
            )
        }
        Command::Frame(fc) => frame(fc),
        Command::Filter(a) => {
            let m = read_model(&a.file)?;
            let phis = a
                .phi
                .iter()
                .map(|t| parse(t))
                .collect::<std::result::Result<Vec<Formula>, _>>()?;
            let phi = subformula_closure(&FormulaSet::from_iter(phis));
            let fr = filter(&m, &phi)?;
            let refinement = match a.n {
                None => {
                    if a.variant != VariantArg::Base || a.seed.is_some() {
                        return Err(InputError("--variant and --seed need --n".into()));
                    }
                    None
                }
                Some(n) => {
                    let variant = match (a.variant, a.seed) {
                        (VariantArg::Base, None) => Variant::Base,
                        (VariantArg::Reflexive, None) => Variant::Reflexive,
                        (VariantArg::Linear, None) => Variant::Linear(LinearOrder::Ascending),
                        (VariantArg::Linear, Some(s)) => Variant::Linear(LinearOrder::Shuffled(s)),
                        (_, Some(_)) => {
                            return Err(InputError(
                                "--seed applies to the linear variant only".into(),
                            ))
                        }
                    };
                    Some(refine(&fr, n, variant)?.0)
                }
            };
            json_out(FiltrationJson::new(&fr, refinement.as_ref()), true)
        }
        Command::Decide(a) => {
            let spec = logic(a.logic.n, &a.logic.ext)?;
            let phi = a.formula.resolve(Some(a.logic.n))?;
            let budget = Budget {
                max_worlds: a.max_worlds,
                max_frames: a.max_frames,
                valuation_cap: a.valuation_cap,
                bound_mode: match a.bound {
                    BoundArg::Primitive => BoundMode::Primitive,
                    BoundArg::Reduced => BoundMode::Reduced,
                },
            };
            let v = decide(&spec, &phi, &budget, a.exhaustive)?;
            let positive = v.kind != VerdictKind::NonTheorem;
            match (&v.countermodel, a.dot) {
                (Some(m), true) => text_out(m.frame().to_dot(), positive),
                _ => {
                    let mut j = serde_json::to_value(VerdictJson::from(&v))
                        .map_err(|e| InputError(e.to_string()))?;
                    j["logic"] = json!(spec.to_string());
                    j["formula"] = json!(phi.to_string());
                    json_out(j, positive)
                }
            }
        }
        Command::Separate(a) => {
            let m = a.m.unwrap_or(a.n + 1);
            let (phi, model) = separate_logics(a.n, m)?;
            if a.dot {
                return text_out(model.frame().to_dot(), true);
            }
            json_out(
                json!({
                    "formula": phi.to_string(),
                    "countermodel": ModelJson::from(&model),
                    "validIn": format!("K4C{}", a.n),
                    "failsIn": format!("K4C{m}"),
                }),
                true,
            )
        }
        Command::Topo(tc) => topo(tc),
        Command::Alg(ac) => alg(ac),
    }
}

fn frame(fc: &FrameCommand) -> Result<Output> {
    match fc {
        FrameCommand::Check { file, prop } => {
            let f = read_frame(file)?;
            let p: Property = prop.parse()?;
            let holds = f.check(p);
            json_out(json!({ "property": p.name(), "holds": holds }), holds)
        }
        FrameCommand::Validate {
            file,
            formula,
            n,
            ext,
            valuation_cap,
        } => {
            let f = read_frame(file)?;
            if formula.given() {
                let phi = formula.resolve(*n)?;
                let cm = frame_countermodel(&f, &phi, *valuation_cap)?;
                let valid = cm.is_none();
                return json_out(
                    json!({
                        "formula": phi.to_string(),
                        "valid": valid,
                        "countermodel": cm.as_ref().map(ModelJson::from),
                    }),
                    valid,
                );
            }
            let Some(n) = n else {
                return Err(InputError(
                    "give a formula, or --n for logic membership".into(),
                ));
            };
            let spec = logic(*n, ext)?;
            let ok = validates_logic(&f, &spec)?;
            json_out(json!({ "logic": spec.to_string(), "valid": ok }), ok)
        }
        FrameCommand::Clusters { file, dot } => {
            let f = read_frame(file)?;
            if *dot {
                return text_out(f.to_dot(), true);
            }
            let d = clusters(&f)?;
            debug_assert_eq!(ClustersJson::from(&d).circumference, circumference(&f)?);
            json_out(ClustersJson::from(&d), true)
        }
    }
}

fn topo(tc: &TopoCommand) -> Result<Output> {
    match tc {
        TopoCommand::Check {
            file,
            prop,
            hered_irresolvable,
            cap,
        } => {
            let s = read_space(file)?;
            match (prop, hered_irresolvable) {
                (Some(p), None) => {
                    let p: Separation = p.parse()?;
                    let holds = separation(&s, p);
                    json_out(json!({ "property": p.name(), "holds": holds }), holds)
                }
                (None, Some(k)) => {
                    let holds = is_hered_n_irresolvable(&s, *k, *cap)?;
                    json_out(
                        json!({ "property": format!("hereditarily {k}-irresolvable"), "holds": holds }),
                        holds,
                    )
                }
                _ => Err(InputError(
                    "give one of --prop, --hered-irresolvable".into(),
                )),
            }
        }
        TopoCommand::Validate {
            file,
            formula,
            semantics,
            valuation_cap,
        } => {
            let s = read_space(file)?;
            let phi = formula.resolve(None)?;
            let sem = match semantics {
                SemanticsArg::C => Semantics::Closure,
                SemanticsArg::D => Semantics::Derived,
            };
            let cm = space_countermodel(&s, &phi, sem, *valuation_cap)?;
            let valid = cm.is_none();
            json_out(
                json!({
                    "formula": phi.to_string(),
                    "semantics": if sem == Semantics::Closure { "c" } else { "d" },
                    "valid": valid,
                    "countermodel": cm.as_ref().map(space_model_json),
                }),
                valid,
            )
        }
        TopoCommand::Resolvable {
            file,
            n,
            subspace,
            cap,
        } => {
            let s = read_space(file)?;
            let sub = match subspace {
                Some(xs) => set_from_json(xs, s.points())?,
                None => s.universe(),
            };
            let holds = is_n_resolvable(&s, sub, *n, *cap)?;
            json_out(
                json!({ "subspace": set_to_json(sub), "n": n, "resolvable": holds }),
                holds,
            )
        }
    }
}

fn alg(ac: &AlgCommand) -> Result<Output> {
    match ac {
        AlgCommand::Validate {
            file,
            formula,
            sentence,
            cap,
        } => {
            let a = read_algebra(file)?;
            match (formula.given(), sentence.given()) {
                (true, false) => {
                    let phi = formula.resolve(None)?;
                    let t = algebra_counter_tuple(&a, &phi, *cap)?;
                    let valid = t.is_none();
                    let vars: Vec<String> =
                        phi.vars().iter().map(|v| v.name().to_string()).collect();
                    json_out(
                        json!({
                            "formula": phi.to_string(),
                            "valid": valid,
                            "vars": vars,
                            "counterTuple": t.as_deref().map(sets_json),
                        }),
                        valid,
                    )
                }
                (false, true) => {
                    let s = sentence.resolve()?;
                    let o = eval_universal(&a, &s, *cap)?;
                    json_out(
                        json!({
                            "sentence": s.to_string(),
                            "holds": o.holds,
                            "witness": o.witness.as_ref().map(WitnessJson::from),
                        }),
                        o.holds,
                    )
                }
                _ => Err(InputError("give either a formula or a sentence".into())),
            }
        }
        AlgCommand::Dual { file, dot } => {
            let a = read_algebra(file)?;
            let d = dual_frame(&a);
            if *dot {
                return text_out(d.to_dot(), true);
            }
            json_out(
                json!({
                    "atoms": sets_json(a.atoms()),
                    "frame": FrameJson::from(&d),
                }),
                true,
            )
        }
        AlgCommand::Transfer {
            file,
            n,
            sentence,
            witness,
            cap,
        } => {
            let a = read_algebra(file)?;
            let s: UniversalSentence = sentence.resolve()?;
            let w: Witness = match witness {
                Some(p) => {
                    let j: WitnessJson = read_json(p)?;
                    j.to_witness(a.base().worlds())?
                }
                None => match eval_universal(&a, &s, *cap)?.witness {
                    Some(w) => w,
                    None => {
                        return json_out(
                            json!({ "sentence": s.to_string(), "holds": true, "transferred": false }),
                            false,
                        )
                    }
                },
            };
            let t = transfer_countermodel(&a, *n, &s, &w)?;
            json_out(
                json!({
                    "sentence": s.to_string(),
                    "holds": false,
                    "transferred": true,
                    "sourceWitness": WitnessJson::from(&w),
                    "source": ModelJson::from(&t.source),
                    "filtration": FiltrationJson::new(&t.filtration, Some(&t.refinement)),
                    "algebra": AlgebraJson::from(&t.algebra),
                    "witness": WitnessJson::from(&t.witness),
                }),
                true,
            )
        }
    }
}
