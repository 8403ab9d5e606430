//! Task dispatch. Every task produces a JSON value; failures stay attached
//! to their task.

use abcross::extension::{classify_extensions, obstruction_class, ClassificationResult, Extension};
use abcross::group::MAX_ENUM_ORDER;
use abcross::picard::{functor_classes, obstruction_class as functor_obstruction};
use abcross::{
    picard_of, reduce, AbCrossedModule, Cochain2, Cochain3, Element, FinAbGroup, FunctorTypePair,
    ReducedPicard, SymCocycle, SymCohomology, H2, H3,
};
use serde_json::{json, Value};

use crate::model::{ModelFile, NamedCochain, Task};

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Largest group order any task may touch.
    pub max_order: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            max_order: MAX_ENUM_ORDER,
        }
    }
}

impl RunOptions {
    /// Guards only move down: larger requests are clamped to the default.
    pub fn with_max_order(n: u64) -> Self {
        Self {
            max_order: n.min(MAX_ENUM_ORDER),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// A size guard refused the computation.
    Size(String),
    /// Invalid input or a failed property.
    Invalid(String),
}

#[derive(Clone, Debug)]
pub struct Fragment {
    pub index: usize,
    pub kind: &'static str,
    pub outcome: Result<Value, Failure>,
    /// Set for verify tasks with a failing property.
    pub failed_checks: usize,
}

impl Fragment {
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Err(Failure::Size(_)) => 2,
            Err(Failure::Invalid(_)) => 1,
            Ok(_) if self.failed_checks > 0 => 1,
            Ok(_) => 0,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub fragments: Vec<Fragment>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.fragments
            .iter()
            .map(Fragment::exit_code)
            .max()
            .unwrap_or(0)
    }
}

fn fail(e: abcross::Error) -> Failure {
    match e {
        abcross::Error::SizeExceeded { .. } => Failure::Size(e.to_string()),
        other => Failure::Invalid(other.to_string()),
    }
}

type Out = Result<Value, Failure>;

pub fn run_model(model: &ModelFile, opts: RunOptions) -> Report {
    let fragments = model
        .tasks
        .iter()
        .enumerate()
        .map(|(index, task)| {
            let mut failed_checks = 0;
            let outcome = run_task(task, model, opts, &mut failed_checks);
            Fragment {
                index,
                kind: task.kind(),
                outcome,
                failed_checks,
            }
        })
        .collect();
    Report { fragments }
}

fn guard(opts: RunOptions, groups: &[&FinAbGroup]) -> Result<(), Failure> {
    for g in groups {
        let order = g.order_checked().unwrap_or(u64::MAX);
        if order > opts.max_order {
            return Err(Failure::Size(format!(
                "group {g} has order {order}, limit {}",
                opts.max_order
            )));
        }
    }
    Ok(())
}

pub fn elem(x: &Element) -> Value {
    json!(x.0)
}

pub fn elems(xs: &[Element]) -> Value {
    Value::Array(xs.iter().map(elem).collect())
}

pub fn factors(g: &FinAbGroup) -> Value {
    json!(g.factors())
}

/// Nonzero entries `[x, y, value]`, in table order.
pub fn entries2(c: &Cochain2) -> Value {
    Value::Array(
        c.nonzero_entries()
            .iter()
            .map(|(x, y, v)| json!([x.0, y.0, v.0]))
            .collect(),
    )
}

pub fn entries3(k: &Cochain3) -> Value {
    let el = k.source().elements().unwrap_or_default();
    let s = el.len();
    let mut xi = Vec::new();
    for (i, v) in k.xi_table().iter().enumerate() {
        if !v.is_zero() {
            xi.push(json!([
                el[i / (s * s)].0,
                el[(i / s) % s].0,
                el[i % s].0,
                v.0
            ]));
        }
    }
    let mut eta = Vec::new();
    for (i, v) in k.eta_table().iter().enumerate() {
        if !v.is_zero() {
            eta.push(json!([el[i / s].0, el[i % s].0, v.0]));
        }
    }
    json!({ "xi": xi, "eta": eta })
}

fn cohomology<C: SymCocycle>(
    m: &FinAbGroup,
    n: &FinAbGroup,
    cocycle: Option<&C>,
    representatives: bool,
    render: impl Fn(&C) -> Value,
) -> Out {
    let h = SymCohomology::<C>::new(m, n).map_err(fail)?;
    let mut out = json!({
        "degree": C::DEGREE,
        "M": factors(m),
        "N": factors(n),
        "group": factors(h.group()),
        "order": h.order(),
    });
    if let Some(k) = cocycle {
        out["class"] = elem(&h.class_of(k).map_err(fail)?);
    }
    if representatives {
        let reps = h.all_classes().map_err(fail)?;
        out["representatives"] = Value::Array(
            reps.iter()
                .map(|(c, k)| json!({ "class": elem(c), "cocycle": render(k) }))
                .collect(),
        );
    }
    Ok(out)
}

fn reduced_category(
    model: &ModelFile,
    name: &str,
    opts: RunOptions,
) -> Result<ReducedPicard, Failure> {
    if let Some(m) = model.crossed_modules.get(name) {
        guard(opts, &[m.b(), m.d_group()])?;
        return Ok(reduce(&picard_of(m)).map_err(fail)?.reduced);
    }
    match model.cochains.get(name) {
        Some(NamedCochain::Three(k)) => ReducedPicard::new(k.clone()).map_err(fail),
        _ => Err(Failure::Invalid(format!("'{name}' is not a category"))),
    }
}

fn module_groups(m: &AbCrossedModule) -> [&FinAbGroup; 2] {
    [m.b(), m.d_group()]
}

pub fn run_task(
    task: &Task,
    model: &ModelFile,
    opts: RunOptions,
    failed_checks: &mut usize,
) -> Out {
    match task {
        Task::Cohomology {
            degree,
            m,
            n,
            cocycle,
            representatives,
        } => {
            let (m, n) = (&model.groups[m], &model.groups[n]);
            guard(opts, &[m, n])?;
            let named = cocycle.as_ref().map(|c| &model.cochains[c]);
            match (degree, named) {
                (2, None) => cohomology::<Cochain2>(m, n, None, *representatives, entries2),
                (2, Some(NamedCochain::Two(k))) => {
                    cohomology(m, n, Some(k), *representatives, entries2)
                }
                (3, None) => cohomology::<Cochain3>(m, n, None, *representatives, entries3),
                (3, Some(NamedCochain::Three(k))) => {
                    cohomology(m, n, Some(k), *representatives, entries3)
                }
                _ => Err(Failure::Invalid(format!(
                    "cocycle '{}' does not have degree {degree}",
                    cocycle.as_deref().unwrap_or_default()
                ))),
            }
        }
        Task::Reduce { module } => {
            let m = &model.crossed_modules[module];
            guard(opts, &module_groups(m))?;
            let r = reduce(&picard_of(m)).map_err(fail)?;
            let k = r.reduced.k();
            let h = H3::new(m.pi0(), m.pi1()).map_err(fail)?;
            let class = h.class_of(k).map_err(fail)?;
            Ok(json!({
                "pi0": factors(m.pi0()),
                "pi1": factors(m.pi1()),
                "pi0_projection": m.pi0_proj().matrix(),
                "pi1_inclusion": m.pi1_incl().matrix(),
                "section": elems(&r.section),
                "b": entries2(&r.b),
                "k": entries3(k),
                "k_is_zero": k.is_zero(),
                "k_class": elem(&class),
                "h3": factors(h.group()),
            }))
        }
        Task::Obstruction { module, q, psi } => {
            let (m, q, psi) = (
                &model.crossed_modules[module],
                &model.groups[q],
                &model.homs[psi],
            );
            guard(opts, &[m.b(), m.d_group(), q])?;
            let (h, c) = obstruction_class(m, q, psi).map_err(fail)?;
            Ok(json!({
                "class": elem(&c),
                "h3": factors(h.group()),
                "vanishes": c.is_zero(),
            }))
        }
        Task::Classify { module, q, psi } => {
            let (m, q, psi) = (
                &model.crossed_modules[module],
                &model.groups[q],
                &model.homs[psi],
            );
            guard(opts, &[m.b(), m.d_group(), q])?;
            match classify_extensions(m, q, psi).map_err(fail)? {
                ClassificationResult::Obstructed { class, h3 } => Ok(json!({
                    "status": "obstructed",
                    "class": elem(&class),
                    "h3": factors(&h3),
                })),
                ClassificationResult::Classes {
                    h2,
                    labels,
                    representatives,
                } => Ok(json!({
                    "status": "classes",
                    "h2": factors(&h2),
                    "count": representatives.len(),
                    "classes": labels
                        .iter()
                        .zip(&representatives)
                        .map(|(l, e)| json!({
                            "label": elem(l),
                            "cocycle": entries2(e.cocycle()),
                            "fmap": elems(e.fmap()),
                            "total_group": factors(&e.total_group_type()),
                        }))
                        .collect::<Vec<_>>(),
                })),
            }
        }
        Task::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" {
                abcross::verify::SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut checks = Vec::new();
            for name in names {
                for c in abcross::verify::run_suite(name).map_err(fail)? {
                    checks.push((name, c));
                }
            }
            let failed = checks.iter().filter(|(_, c)| !c.pass).count();
            *failed_checks = failed;
            Ok(json!({
                "suite": suite,
                "passed": checks.len() - failed,
                "failed": failed,
                "checks": checks
                    .iter()
                    .map(|(s, c)| json!({
                        "suite": s,
                        "property": c.property,
                        "pass": c.pass,
                        "detail": c.detail,
                    }))
                    .collect::<Vec<_>>(),
            }))
        }
        Task::ShowExtension {
            module,
            cocycle,
            fmap,
        } => {
            let m = &model.crossed_modules[module];
            let NamedCochain::Two(f) = &model.cochains[cocycle] else {
                return Err(Failure::Invalid(format!(
                    "cocycle '{cocycle}' must have degree 2"
                )));
            };
            guard(opts, &[m.b(), m.d_group(), f.source()])?;
            let fmap = fmap
                .iter()
                .map(|c| m.d_group().element(c))
                .collect::<abcross::Result<Vec<_>>>()
                .map_err(fail)?;
            let e = Extension::new(m, f.clone(), fmap).map_err(fail)?;
            Ok(json!({
                "Q": factors(e.quotient()),
                "cocycle": entries2(e.cocycle()),
                "fmap": elems(e.fmap()),
                "total_group": factors(&e.total_group_type()),
                "psi": e.induced_psi().map_err(fail)?.matrix(),
            }))
        }
        Task::FunctorClasses {
            source,
            target,
            phi0,
            f,
        } => {
            let s = reduced_category(model, source, opts)?;
            let sp = reduced_category(model, target, opts)?;
            let t = FunctorTypePair {
                phi0: model.homs[phi0].clone(),
                f: model.homs[f].clone(),
            };
            guard(opts, &[s.m(), s.n(), sp.m(), sp.n()])?;
            let (h3, class) = functor_obstruction(&t, &s, &sp).map_err(fail)?;
            let classes = functor_classes(&t, &s, &sp).map_err(fail)?;
            let h2 = H2::new(s.m(), sp.n()).map_err(fail)?;
            Ok(json!({
                "obstruction_class": elem(&class),
                "h3": factors(h3.group()),
                "realizable": class.is_zero(),
                "h2": factors(h2.group()),
                "count": classes.len(),
                "classes": classes.iter().map(|c| json!({ "tilde": entries2(&c.tilde) })).collect::<Vec<_>>(),
            }))
        }
    }
}
