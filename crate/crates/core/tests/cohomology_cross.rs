use std::collections::HashMap;

use abcross::oracle::{oracle_h2, oracle_h3, OracleResult};
use abcross::{Element, FinAbGroup, SymCocycle, SymCohomology, H2, H3};
use num_integer::Integer;

fn z(n: i64) -> FinAbGroup {
    FinAbGroup::cyclic(n)
}

fn agree<C: SymCocycle>(h: &SymCohomology<C>, o: &OracleResult<C>) {
    assert_eq!(
        h.order(),
        o.class_count as u64,
        "order over ({}, {})",
        h.source(),
        h.target()
    );
    let mut label: HashMap<usize, Element> = HashMap::new();
    let mut seen: HashMap<Element, usize> = HashMap::new();
    for (k, &c) in o.cocycles.iter().zip(&o.class_of) {
        let cls = h.class_of(k).unwrap();
        if let Some(prev) = label.insert(c, cls.clone()) {
            assert_eq!(prev, cls, "one oracle class, two classifier values");
        }
        if let Some(prev) = seen.insert(cls, c) {
            assert_eq!(prev, c, "one classifier value, two oracle classes");
        }
    }
    assert_eq!(label.len(), o.class_count);
}

#[test]
fn degree_two_cyclic_up_to_six() {
    for a in 1..=6 {
        for b in 1..=6 {
            let h = H2::new(&z(a), &z(b)).unwrap();
            agree(&h, &oracle_h2(&z(a), &z(b)).unwrap());
            if a >= 2 && b >= 2 && a != 5 && b != 5 {
                assert_eq!(h.order() as i64, a.gcd(&b));
            }
        }
    }
}

#[test]
fn degree_three_small() {
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            pairs.push((a, b));
        }
    }
    pairs.extend([(2, 2), (2, 4), (4, 2)]);
    for (a, b) in pairs {
        let h = H3::new(&z(a), &z(b)).unwrap();
        agree(&h, &oracle_h3(&z(a), &z(b)).unwrap());
    }
}
