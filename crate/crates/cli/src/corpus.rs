//! The built-in corpus as a model file.

use abcross::verify::{all_homs, cyclic_module, CORPUS_ORDERS};
use abcross::FinAbGroup;
use serde_json::{json, Map, Value};

fn group_name(g: &FinAbGroup) -> String {
    format!("Z{}", g.order())
}

/// Every corpus crossed module with reduce, obstruction and classify tasks
/// over `Q = Z/2`, cohomology tables, a few functor and extension tasks, and
/// the worked-example suite.
pub fn corpus_model() -> Value {
    let mut groups = Map::new();
    let mut homs = Map::new();
    let mut modules = Map::new();
    let mut tasks = Vec::new();
    for n in CORPUS_ORDERS {
        let g = FinAbGroup::cyclic(n);
        groups.insert(group_name(&g), json!(g.factors()));
    }
    groups.insert("Q".into(), json!([2]));
    groups.insert("N".into(), json!([2]));

    let hom = |dom: &str, cod: &str, m: &[Vec<i64>]| json!({ "dom": dom, "cod": cod, "matrix": m });
    homs.insert("psi1".into(), hom("Q", "Z2", &[vec![1]]));
    homs.insert("id_z2".into(), hom("Z2", "Z2", &[vec![1]]));
    homs.insert("zero_1_2".into(), hom("Z1", "Z2", &[vec![]]));
    modules.insert("M1".into(), json!({ "B": "Z2", "D": "Z2", "d": "d_2_2_0" }));
    modules.insert("M2".into(), json!({ "B": "Z2", "D": "Z4", "d": "d_2_4_2" }));
    tasks.push(json!({ "kind": "cohomology", "degree": 2, "M": "Q", "N": "N" }));
    tasks.push(json!({ "kind": "classify", "module": "M1", "Q": "Q", "psi": "psi1" }));
    tasks.push(json!({ "kind": "reduce", "module": "M2" }));

    for a in CORPUS_ORDERS {
        for b in CORPUS_ORDERS {
            tasks.push(json!({ "kind": "cohomology", "degree": 2, "M": format!("Z{a}"), "N": format!("Z{b}") }));
        }
    }
    for a in [1, 2, 3, 4] {
        for b in [1, 2, 3, 4] {
            tasks.push(json!({
                "kind": "cohomology", "degree": 3, "M": format!("Z{a}"), "N": format!("Z{b}"),
                "representatives": a == 2 && b == 2,
            }));
        }
    }

    let z2 = FinAbGroup::cyclic(2);
    let mut classify = Vec::new();
    for a in CORPUS_ORDERS {
        for b in CORPUS_ORDERS {
            let ks = if a == 1 { 1 } else { b };
            for k in (0..ks).filter(|k| (a * k) % b == 0) {
                let m = cyclic_module(a, b, k).expect("corpus entry");
                let (d, name) = (format!("d_{a}_{b}_{k}"), format!("M_{a}_{b}_{k}"));
                homs.insert(
                    d.clone(),
                    hom(&format!("Z{a}"), &format!("Z{b}"), m.d().matrix()),
                );
                modules.insert(
                    name.clone(),
                    json!({ "B": format!("Z{a}"), "D": format!("Z{b}"), "d": d }),
                );
                tasks.push(json!({ "kind": "reduce", "module": name }));
                let psis = all_homs(&z2, m.pi0()).expect("small groups");
                for (j, psi) in psis.iter().enumerate() {
                    let pname = format!("psi_{a}_{b}_{k}_{j}");
                    homs.insert(pname.clone(), hom("Z2", &group_name(m.pi0()), psi.matrix()));
                    classify.push(
                        json!({ "kind": "obstruction", "module": name, "Q": "Z2", "psi": pname }),
                    );
                    classify.push(
                        json!({ "kind": "classify", "module": name, "Q": "Z2", "psi": pname }),
                    );
                }
            }
        }
    }
    tasks.extend(classify);

    let cochains = json!({
        "twist_z2": { "degree": 2, "M": "Z2", "N": "Z2", "entries": [[[1], [1], [1]]] },
        "eta_z2": { "degree": 3, "M": "Z2", "N": "Z2", "eta": [[[1], [1], [1]]] },
        "split_z2": { "degree": 3, "M": "Z2", "N": "Z2" },
    });
    tasks.push(json!({ "kind": "show-extension", "module": "M1", "cocycle": "twist_z2", "fmap": [[0], [1]] }));
    tasks.push(json!({ "kind": "functor-classes", "source": "M_1_2_0", "target": "eta_z2", "phi0": "id_z2", "f": "zero_1_2" }));
    tasks.push(json!({ "kind": "functor-classes", "source": "M_1_2_0", "target": "split_z2", "phi0": "id_z2", "f": "zero_1_2" }));
    tasks.push(json!({ "kind": "functor-classes", "source": "split_z2", "target": "split_z2", "phi0": "id_z2", "f": "id_z2" }));
    tasks.push(json!({ "kind": "verify", "suite": "examples" }));

    json!({
        "groups": groups,
        "homs": homs,
        "crossed_modules": modules,
        "cochains": cochains,
        "tasks": tasks,
    })
}
