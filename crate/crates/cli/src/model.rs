//! Model files: named groups, homomorphisms, crossed modules and cochains,
//! plus an ordered task list. JSON throughout.

use std::collections::BTreeMap;

use abcross::{AbCrossedModule, Cochain1, Cochain2, Cochain3, Element, FinAbGroup, GroupHom};
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    #[serde(default)]
    groups: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    homs: BTreeMap<String, RawHom>,
    #[serde(default)]
    crossed_modules: BTreeMap<String, RawCrossed>,
    #[serde(default)]
    cochains: BTreeMap<String, RawCochain>,
    #[serde(default)]
    tasks: Vec<Task>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHom {
    dom: String,
    cod: String,
    matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCrossed {
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "D")]
    d_group: String,
    d: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochain {
    degree: u32,
    #[serde(rename = "M")]
    m: String,
    #[serde(rename = "N")]
    n: String,
    #[serde(default)]
    entries: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    xi: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    eta: Vec<Vec<Vec<i64>>>,
}

/// One task record; `kind` selects the variant.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Task {
    Cohomology {
        degree: u32,
        #[serde(rename = "M")]
        m: String,
        #[serde(rename = "N")]
        n: String,
        #[serde(default)]
        cocycle: Option<String>,
        #[serde(default)]
        representatives: bool,
    },
    Reduce {
        module: String,
    },
    Obstruction {
        module: String,
        #[serde(rename = "Q")]
        q: String,
        psi: String,
    },
    Classify {
        module: String,
        #[serde(rename = "Q")]
        q: String,
        psi: String,
    },
    Verify {
        suite: String,
    },
    ShowExtension {
        module: String,
        cocycle: String,
        fmap: Vec<Vec<i64>>,
    },
    FunctorClasses {
        source: String,
        target: String,
        phi0: String,
        f: String,
    },
}

impl Task {
    pub fn kind(&self) -> &'static str {
        match self {
            Task::Cohomology { .. } => "cohomology",
            Task::Reduce { .. } => "reduce",
            Task::Obstruction { .. } => "obstruction",
            Task::Classify { .. } => "classify",
            Task::Verify { .. } => "verify",
            Task::ShowExtension { .. } => "show-extension",
            Task::FunctorClasses { .. } => "functor-classes",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedCochain {
    One(Cochain1),
    Two(Cochain2),
    Three(Cochain3),
}

#[derive(Clone, Debug, Default)]
pub struct ModelFile {
    pub groups: BTreeMap<String, FinAbGroup>,
    pub homs: BTreeMap<String, GroupHom>,
    pub crossed_modules: BTreeMap<String, AbCrossedModule>,
    pub cochains: BTreeMap<String, NamedCochain>,
    pub tasks: Vec<Task>,
}

fn invalid(object: impl Into<String>, message: impl ToString) -> CliError {
    CliError::Validation {
        object: object.into(),
        message: message.to_string(),
    }
}

/// Core errors keep their size-guard identity; everything else becomes a
/// validation error against `object`.
fn core(object: &str, e: abcross::Error) -> CliError {
    match e {
        abcross::Error::SizeExceeded { .. } => CliError::Size(format!("{object}: {e}")),
        other => invalid(object, other),
    }
}

pub fn parse_model(text: &str) -> Result<ModelFile, CliError> {
    let raw: RawModel = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(raw)
}

pub fn parse_model_value(value: Value) -> Result<ModelFile, CliError> {
    let raw: RawModel = serde_json::from_value(value).map_err(|e| CliError::Parse {
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    build(raw)
}

fn group(model: &ModelFile, object: &str, name: &str) -> Result<FinAbGroup, CliError> {
    model
        .groups
        .get(name)
        .cloned()
        .ok_or_else(|| invalid(object, format!("unknown group '{name}'")))
}

fn element(g: &FinAbGroup, object: &str, coords: &[i64]) -> Result<Element, CliError> {
    g.element(coords).map_err(|e| invalid(object, e))
}

fn build(raw: RawModel) -> Result<ModelFile, CliError> {
    let mut model = ModelFile::default();
    for (name, factors) in raw.groups {
        let object = format!("group '{name}'");
        let g = FinAbGroup::new(&factors).map_err(|e| invalid(&object, e))?;
        if g.factors() != factors.as_slice() {
            return Err(invalid(
                object,
                format!(
                    "factors must be invariant factors n1 | n2 | ... > 1; write {:?}",
                    g.factors()
                ),
            ));
        }
        model.groups.insert(name, g);
    }
    for (name, h) in raw.homs {
        let object = format!("hom '{name}'");
        let dom = group(&model, &object, &h.dom)?;
        let cod = group(&model, &object, &h.cod)?;
        let matrix = if h.matrix.is_empty() {
            vec![Vec::new(); cod.rank()]
        } else {
            h.matrix
        };
        let hom = GroupHom::new(&dom, &cod, matrix).map_err(|e| core(&object, e))?;
        model.homs.insert(name, hom);
    }
    for (name, c) in raw.crossed_modules {
        let object = format!("crossed module '{name}'");
        let d = model
            .homs
            .get(&c.d)
            .ok_or_else(|| invalid(&object, format!("unknown hom '{}'", c.d)))?;
        if *d.dom() != group(&model, &object, &c.b)?
            || *d.cod() != group(&model, &object, &c.d_group)?
        {
            return Err(invalid(
                object,
                format!("'{}' is not a map {} -> {}", c.d, c.b, c.d_group),
            ));
        }
        model
            .crossed_modules
            .insert(name, AbCrossedModule::new(d.clone()));
    }
    for (name, c) in raw.cochains {
        let object = format!("cochain '{name}'");
        let m = group(&model, &object, &c.m)?;
        let n = group(&model, &object, &c.n)?;
        let parsed = cochain(&object, &m, &n, &c)?;
        model.cochains.insert(name, parsed);
    }
    for (i, t) in raw.tasks.iter().enumerate() {
        resolve(&model, &format!("task {i} ({})", t.kind()), t)?;
    }
    model.tasks = raw.tasks;
    Ok(model)
}

/// Table with every listed entry set and the rest zero; `arity` arguments
/// then one value per entry.
fn fill(
    object: &str,
    m: &FinAbGroup,
    n: &FinAbGroup,
    arity: u32,
    entries: &[Vec<Vec<i64>>],
) -> Result<Vec<Element>, CliError> {
    let size = m
        .order_checked()
        .filter(|&s| s <= abcross::cochain::MAX_COCHAIN_ORDER);
    let Some(size) = size else {
        return Err(CliError::Size(format!(
            "{object}: source {m} is too large for a cochain table"
        )));
    };
    let s = size as usize;
    let mut table = vec![n.zero(); s.pow(arity)];
    let mut seen = vec![false; table.len()];
    for entry in entries {
        if entry.len() != arity as usize + 1 {
            return Err(invalid(
                object,
                format!("entry {entry:?} needs {} arguments and a value", arity),
            ));
        }
        let mut idx = 0;
        for arg in &entry[..arity as usize] {
            idx = idx * s + m.index_of(&element(m, object, arg)?);
        }
        if std::mem::replace(&mut seen[idx], true) {
            return Err(invalid(object, format!("entry {entry:?} is listed twice")));
        }
        table[idx] = element(n, object, &entry[arity as usize])?;
    }
    Ok(table)
}

fn cochain(
    object: &str,
    m: &FinAbGroup,
    n: &FinAbGroup,
    c: &RawCochain,
) -> Result<NamedCochain, CliError> {
    let wrap = |e| core(object, e);
    match c.degree {
        1 | 2 if !c.xi.is_empty() || !c.eta.is_empty() => {
            Err(invalid(object, "xi/eta belong to degree 3; use entries"))
        }
        1 => Ok(NamedCochain::One(
            Cochain1::from_table(m, n, fill(object, m, n, 1, &c.entries)?).map_err(wrap)?,
        )),
        2 => Ok(NamedCochain::Two(
            Cochain2::from_table(m, n, fill(object, m, n, 2, &c.entries)?).map_err(wrap)?,
        )),
        3 if !c.entries.is_empty() => Err(invalid(object, "degree 3 uses xi and eta, not entries")),
        3 => Ok(NamedCochain::Three(
            Cochain3::from_tables(
                m,
                n,
                fill(object, m, n, 3, &c.xi)?,
                fill(object, m, n, 2, &c.eta)?,
            )
            .map_err(wrap)?,
        )),
        d => Err(invalid(object, format!("degree {d} is not one of 1, 2, 3"))),
    }
}

fn resolve(model: &ModelFile, object: &str, t: &Task) -> Result<(), CliError> {
    let need = |ok: bool, what: &str, name: &str| {
        if ok {
            Ok(())
        } else {
            Err(invalid(object, format!("unknown {what} '{name}'")))
        }
    };
    let module = |name: &str| {
        need(
            model.crossed_modules.contains_key(name),
            "crossed module",
            name,
        )
    };
    let grp = |name: &str| need(model.groups.contains_key(name), "group", name);
    let hom = |name: &str| need(model.homs.contains_key(name), "hom", name);
    let coch = |name: &str| need(model.cochains.contains_key(name), "cochain", name);
    let category = |name: &str| {
        let ok = model.crossed_modules.contains_key(name)
            || matches!(model.cochains.get(name), Some(NamedCochain::Three(_)));
        need(ok, "crossed module or degree-3 cochain", name)
    };
    match t {
        Task::Cohomology {
            degree,
            m,
            n,
            cocycle,
            ..
        } => {
            if !(2..=3).contains(degree) {
                return Err(invalid(object, format!("degree {degree} is not 2 or 3")));
            }
            grp(m)?;
            grp(n)?;
            if let Some(c) = cocycle {
                coch(c)?;
            }
            Ok(())
        }
        Task::Reduce { module: m } => module(m),
        Task::Obstruction { module: m, q, psi } | Task::Classify { module: m, q, psi } => {
            module(m)?;
            grp(q)?;
            hom(psi)
        }
        Task::Verify { suite } => {
            if suite == "all" || abcross::verify::SUITES.contains(&suite.as_str()) {
                Ok(())
            } else {
                Err(invalid(
                    object,
                    format!(
                        "unknown suite '{suite}'; expected all or one of {}",
                        abcross::verify::SUITES.join(", ")
                    ),
                ))
            }
        }
        Task::ShowExtension {
            module: m, cocycle, ..
        } => {
            module(m)?;
            coch(cocycle)
        }
        Task::FunctorClasses {
            source,
            target,
            phi0,
            f,
        } => {
            category(source)?;
            category(target)?;
            hom(phi0)?;
            hom(f)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declaration_example() {
        let m = parse_model(r#"{"groups": {"B": [4], "D": [2]}, "homs": {"d": {"dom":"B","cod":"D","matrix":[[1]]}}}"#)
            .unwrap();
        assert_eq!(m.homs["d"].matrix(), &[vec![1]]);
        assert!(m.tasks.is_empty());
    }

    #[test]
    fn ill_defined_hom_is_a_validation_error() {
        let err = parse_model(r#"{"groups": {"A": [2], "C": [4]}, "homs": {"h": {"dom":"A","cod":"C","matrix":[[1]]}}}"#)
            .unwrap_err();
        match err {
            CliError::Validation { object, message } => {
                assert_eq!(object, "hom 'h'");
                assert!(
                    message.contains("does not induce a homomorphism"),
                    "{message}"
                );
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_locations() {
        match parse_model("{\n  \"groups\": [}").unwrap_err() {
            CliError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn names_must_resolve() {
        let err = parse_model(r#"{"tasks": [{"kind": "reduce", "module": "M"}]}"#).unwrap_err();
        assert!(err.to_string().contains("unknown crossed module 'M'"));
        let err = parse_model(r#"{"groups": {"G": [2, 3]}}"#).unwrap_err();
        assert!(err.to_string().contains("invariant factors"));
    }

    #[test]
    fn cochain_tables() {
        let m = parse_model(
            r#"{"groups": {"Z2": [2]},
                "cochains": {
                  "f": {"degree": 2, "M": "Z2", "N": "Z2", "entries": [[[1],[1],[1]]]},
                  "k": {"degree": 3, "M": "Z2", "N": "Z2", "eta": [[[1],[1],[1]]]}}}"#,
        )
        .unwrap();
        let NamedCochain::Two(f) = &m.cochains["f"] else {
            panic!()
        };
        assert!(f.is_sym_2cocycle());
        let NamedCochain::Three(k) = &m.cochains["k"] else {
            panic!()
        };
        assert!(k.is_sym_3cocycle());
        let dup = r#"{"groups": {"Z2": [2]}, "cochains": {"f": {"degree": 2, "M": "Z2", "N": "Z2",
                     "entries": [[[1],[1],[1]], [[1],[1],[0]]]}}}"#;
        assert!(parse_model(dup).unwrap_err().to_string().contains("twice"));
    }
}
