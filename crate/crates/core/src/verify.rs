//! Named property suites over a fixed corpus of small crossed modules.
//!
//! Each suite returns one [`Check`] per property. Properties quantify over
//! many instances; a failing property carries its first counterexample.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{cochain_space, Cochain1, Cochain2, Cochain3};
use crate::cohomology::{SymCocycle, SymCohomology, H2, H3};
use crate::crossed::{compose_morphism, AbCrossMorphism, AbCrossedModule, CrossedData};
use crate::error::{Error, Result};
use crate::extension::{
    are_equivalent, canonical_extension, classify_extensions, extension_of_functor,
    functor_of_extension, is_equivalence, obstruction_class, pullback_extension,
    ClassificationResult, Extension,
};
use crate::group::{Element, FinAbGroup};
use crate::hom::GroupHom;
use crate::matrix::Matrix;
use crate::oracle::{oracle_h2, oracle_h3, OracleResult};
use crate::picard::{
    are_homotopic, are_homotopic_reduced, base_of, compose_functors, functor_classes,
    functor_of_morphism, greatest_section, is_natural_equivalence, is_realizable,
    morphism_of_functor, picard_of, reduce, reduce_with, FunctorTypePair, ReducedPicard,
    StrictPicard, SymMonoidalFunctor,
};
use crate::snf::smith_normal_form;

/// Cyclic orders of `B` and `D` in the corpus.
pub const CORPUS_ORDERS: [i64; 6] = [1, 2, 3, 4, 6, 8];

/// Names accepted by [`run_suite`], in report order.
pub const SUITES: [&str; 8] = [
    "cohomology-cross",
    "differential-closure",
    "classification",
    "reduction",
    "schreier",
    "benchmark",
    "obstruction",
    "examples",
];

const SEED: u64 = 0x5eed_ab0c;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub property: String,
    pub pass: bool,
    /// Instance counts on success, the first counterexample on failure.
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.property, self.detail)
    }
}

struct Tally {
    property: String,
    count: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(property: impl Into<String>) -> Self {
        Self {
            property: property.into(),
            count: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, summary: impl FnOnce(usize) -> String) -> Check {
        match self.failure {
            Some(c) => Check {
                property: self.property,
                pass: false,
                detail: format!("counterexample: {c}"),
            },
            None => Check {
                pass: true,
                detail: summary(self.count),
                property: self.property,
            },
        }
    }
}

fn single(property: &str, pass: bool, detail: String) -> Check {
    Check {
        property: property.to_string(),
        pass,
        detail,
    }
}

pub fn run_suite(name: &str) -> Result<Vec<Check>> {
    match name {
        "cohomology-cross" => cohomology_cross(),
        "differential-closure" => differential_closure(),
        "classification" => classification(),
        "reduction" => reduction(),
        "schreier" => schreier(),
        "benchmark" => benchmark(),
        "obstruction" => obstruction(),
        "examples" => examples(),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn z(n: i64) -> FinAbGroup {
    FinAbGroup::cyclic(n)
}

fn e(v: i64) -> Element {
    Element(vec![v])
}

/// `Z/a -> Z/b`, `1 ↦ k`.
pub fn cyclic_module(a: i64, b: i64, k: i64) -> Result<AbCrossedModule> {
    let (ga, gb) = (z(a), z(b));
    let matrix = vec![vec![k; ga.rank()]; gb.rank()];
    AbCrossedModule::from_matrix(&ga, &gb, matrix)
}

/// Every `d: Z/a -> Z/b` with `a, b` in [`CORPUS_ORDERS`].
pub fn corpus() -> Vec<AbCrossedModule> {
    let mut out = Vec::new();
    for a in CORPUS_ORDERS {
        for b in CORPUS_ORDERS {
            let ks = if a == 1 { 1 } else { b };
            for k in 0..ks {
                if (a * k) % b == 0 {
                    out.push(cyclic_module(a, b, k).expect("a k = 0 mod b"));
                }
            }
        }
    }
    out
}

/// Groups used for cochain-level properties.
pub fn corpus_groups() -> Vec<FinAbGroup> {
    let mut gs: Vec<FinAbGroup> = CORPUS_ORDERS.iter().map(|&n| z(n)).collect();
    gs.push(FinAbGroup::new(&[2, 2]).expect("valid"));
    gs
}

/// All homomorphisms `dom -> cod`, by generator images.
pub fn all_homs(dom: &FinAbGroup, cod: &FinAbGroup) -> Result<Vec<GroupHom>> {
    let ce = cod.elements()?;
    let r = dom.rank();
    let total = ce.len().pow(r as u32);
    let mut out = Vec::new();
    for mut idx in 0..total {
        let images: Vec<Element> = (0..r)
            .map(|_| {
                let x = ce[idx % ce.len()].clone();
                idx /= ce.len();
                x
            })
            .collect();
        if let Ok(h) = GroupHom::from_images(dom, cod, &images) {
            out.push(h);
        }
    }
    Ok(out)
}

fn random_element(g: &FinAbGroup, rng: &mut ChaCha8Rng) -> Element {
    Element(g.factors().iter().map(|&n| rng.gen_range(0..n)).collect())
}

fn show(xs: &[Element]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn entries(c: &Cochain2) -> String {
    let items: Vec<String> = c
        .nonzero_entries()
        .iter()
        .map(|(x, y, v)| format!("{x},{y} ↦ {v}"))
        .collect();
    format!("{{{}}}", items.join("; "))
}

fn describe(m: &AbCrossedModule) -> String {
    format!("{} -> {} by {:?}", m.b(), m.d_group(), m.d().matrix())
}

// ---- cohomology against enumeration

fn agree<C: SymCocycle>(h: &SymCohomology<C>, o: &OracleResult<C>) -> Result<Option<String>> {
    if h.order() != o.class_count as u64 {
        return Ok(Some(format!(
            "order {} vs {} enumerated classes",
            h.order(),
            o.class_count
        )));
    }
    let mut label: HashMap<usize, Element> = HashMap::new();
    let mut seen: HashMap<Element, usize> = HashMap::new();
    for (k, &c) in o.cocycles.iter().zip(&o.class_of) {
        let cls = h.class_of(k)?;
        if let Some(prev) = label.insert(c, cls.clone()) {
            if prev != cls {
                return Ok(Some(format!(
                    "one enumerated class gets labels {prev} and {cls}"
                )));
            }
        }
        if let Some(prev) = seen.insert(cls.clone(), c) {
            if prev != c {
                return Ok(Some(format!("label {cls} covers two enumerated classes")));
            }
        }
    }
    Ok(None)
}

fn cohomology_cross() -> Result<Vec<Check>> {
    let mut two = Tally::new("degree-2 classes match enumeration for cyclic groups of order <= 6");
    let mut gcd = Tally::new("|H2(Z/m, Z/n)| = gcd(m, n)");
    for a in 1..=6 {
        for b in 1..=6 {
            let h = H2::new(&z(a), &z(b))?;
            let bad = agree(&h, &oracle_h2(&z(a), &z(b))?)?;
            two.record(bad.is_none(), || {
                format!("(Z/{a}, Z/{b}): {}", bad.unwrap_or_default())
            });
            gcd.record(h.order() as i64 == a.gcd(&b), || {
                format!("(Z/{a}, Z/{b}) has order {}", h.order())
            });
        }
    }
    let mut three = Tally::new("degree-3 classes match enumeration on small groups");
    let mut pairs: Vec<(i64, i64)> = (1..=3).flat_map(|a| (1..=3).map(move |b| (a, b))).collect();
    pairs.extend([(2, 4), (4, 2)]);
    let mut orders = Vec::new();
    for (a, b) in pairs {
        let h = H3::new(&z(a), &z(b))?;
        let bad = agree(&h, &oracle_h3(&z(a), &z(b))?)?;
        orders.push(format!("({a},{b}):{}", h.order()));
        three.record(bad.is_none(), || {
            format!("(Z/{a}, Z/{b}): {}", bad.unwrap_or_default())
        });
    }
    let orders = orders.join(" ");
    Ok(vec![
        two.finish(|n| format!("{n} instances")),
        gcd.finish(|n| format!("{n} instances")),
        three.finish(|n| format!("{n} instances, orders {orders}")),
    ])
}

// ---- differentials

fn differential_closure() -> Result<Vec<Check>> {
    let groups = corpus_groups();
    let mut one =
        Tally::new("δδ = 0 and δ lands in symmetric 2-cocycles, all 1-cochains with |M||N| <= 16");
    for m in &groups {
        for n in &groups {
            if m.order() * n.order() > 16 {
                continue;
            }
            for c in cochain_space(m, n, 1).elements()? {
                let g = Cochain1::from_coords(m, n, &c)?;
                let dg = g.coboundary();
                let ok = dg.is_sym_2cocycle() && dg.coboundary().is_zero();
                one.record(ok, || format!("g = {} over ({m}, {n})", show(g.table())));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let small: Vec<&FinAbGroup> = groups.iter().filter(|g| g.order() > 1).collect();
    let mut two = Tally::new("δ of random 2-cochains are symmetric 3-cocycles");
    for _ in 0..1000 {
        let m = small[rng.gen_range(0..small.len())];
        let n = small[rng.gen_range(0..small.len())];
        let c = random_element(&cochain_space(m, n, 2), &mut rng);
        let g = Cochain2::from_coords(m, n, &c)?;
        let k = g.coboundary();
        two.record(k.is_sym_3cocycle(), || {
            format!("g = {} over ({m}, {n})", show(g.table()))
        });
    }
    Ok(vec![
        one.finish(|n| format!("{n} cochains")),
        two.finish(|n| format!("{n} cochains")),
    ])
}

// ---- crossed modules and Picard categories

fn valid_pairs(m: &AbCrossedModule, mp: &AbCrossedModule) -> Result<Vec<(GroupHom, GroupHom)>> {
    let mut out = Vec::new();
    for f1 in all_homs(m.b(), mp.b())? {
        let rhs = mp.d().compose(&f1)?;
        for f0 in all_homs(m.d_group(), mp.d_group())? {
            if f0.compose(m.d())? == rhs {
                out.push((f1.clone(), f0));
            }
        }
    }
    Ok(out)
}

fn random_cocycle(m: &FinAbGroup, n: &FinAbGroup, rng: &mut ChaCha8Rng) -> Result<Cochain2> {
    let h = H2::new(m, n)?;
    let rep = h.representative(&random_element(h.group(), rng))?;
    let g = Cochain1::from_coords(m, n, &random_element(&cochain_space(m, n, 1), rng))?;
    rep.add(&g.coboundary())
}

fn random_morphism(
    m: &AbCrossedModule,
    mp: &AbCrossedModule,
    rng: &mut ChaCha8Rng,
) -> Result<AbCrossMorphism> {
    let pairs = valid_pairs(m, mp)?;
    let (f1, f0) = pairs[rng.gen_range(0..pairs.len())].clone();
    let phi = random_cocycle(m.pi0(), mp.pi1(), rng)?;
    AbCrossMorphism::new(m, mp, f1, f0, phi)
}

fn classification() -> Result<Vec<Check>> {
    let corpus = corpus();
    let mut base = Tally::new("base_of(picard_of(M)) = M on the corpus");
    for m in &corpus {
        let back = base_of(&picard_of(m))?;
        base.record(back == *m, || describe(m));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut inverse =
        Tally::new("functor_of_morphism and morphism_of_functor are mutually inverse");
    let mut nonzero = 0;
    for _ in 0..240 {
        let m = &corpus[rng.gen_range(0..corpus.len())];
        let mp = &corpus[rng.gen_range(0..corpus.len())];
        let mor = random_morphism(m, mp, &mut rng)?;
        if !mor.phi.is_zero() {
            nonzero += 1;
        }
        let f = functor_of_morphism(&mor)?;
        let back = morphism_of_functor(&f)?;
        let again = functor_of_morphism(&back)?;
        inverse.record(back == mor && again == f, || {
            format!(
                "{} to {} with f1 {:?}",
                describe(m),
                describe(mp),
                mor.f1.matrix()
            )
        });
    }

    let mut laws = Tally::new("composition is associative, unital and matches functor composition");
    for _ in 0..120 {
        let ms: Vec<&AbCrossedModule> = (0..4)
            .map(|_| &corpus[rng.gen_range(0..corpus.len())])
            .collect();
        let a = random_morphism(ms[0], ms[1], &mut rng)?;
        let b = random_morphism(ms[1], ms[2], &mut rng)?;
        let c = random_morphism(ms[2], ms[3], &mut rng)?;
        let ba = compose_morphism(&b, &a)?;
        let assoc = compose_morphism(&c, &ba)? == compose_morphism(&compose_morphism(&c, &b)?, &a)?;
        let unit = compose_morphism(&a, &AbCrossMorphism::identity(ms[0])?)? == a
            && compose_morphism(&AbCrossMorphism::identity(ms[1])?, &a)? == a;
        let functorial = functor_of_morphism(&ba)?
            == compose_functors(&functor_of_morphism(&b)?, &functor_of_morphism(&a)?)?;
        laws.record(assoc && unit && functorial, || {
            format!(
                "chain through {}",
                ms.iter()
                    .map(|m| describe(m))
                    .collect::<Vec<_>>()
                    .join(" ; ")
            )
        });
    }
    Ok(vec![
        base.finish(|n| format!("{n} crossed modules")),
        inverse.finish(|n| format!("{n} sampled morphisms, {nonzero} with nonzero φ")),
        laws.finish(|n| format!("{n} sampled composable triples")),
    ])
}

fn reduction() -> Result<Vec<Check>> {
    let mut cocycle = Tally::new("reduce gives a symmetric 3-cocycle with η(s,s) = 0");
    let mut sections = Tally::new("least and greatest sections give cohomologous invariants");
    let mut distinct = 0;
    for m in corpus() {
        let p = picard_of(&m);
        let r = reduce(&p)?;
        let k = r.reduced.k();
        let diag = m.pi0().elements()?.iter().all(|s| k.eta(s, s).is_zero());
        cocycle.record(k.is_sym_3cocycle() && diag, || describe(&m));

        let gs = greatest_section(&m)?;
        if gs == r.section {
            continue;
        }
        distinct += 1;
        let pi0 = m.pi0().clone();
        let r2 = reduce_with(&p, |s| gs[pi0.index_of(s)].clone())?;
        let h = H3::new(m.pi0(), m.pi1())?;
        let ok = h.is_cohomologous(k, r2.reduced.k())?.is_some();
        sections.record(ok, || describe(&m));
    }
    Ok(vec![
        cocycle.finish(|n| format!("{n} crossed modules")),
        sections.finish(|n| {
            format!("{n} crossed modules with more than one section ({distinct} compared)")
        }),
    ])
}

// ---- extensions

fn quotients() -> Vec<FinAbGroup> {
    let mut qs: Vec<FinAbGroup> = [1, 2, 3, 4].iter().map(|&n| z(n)).collect();
    qs.push(FinAbGroup::new(&[2, 2]).expect("valid"));
    qs
}

/// Every valid `(f, F)` over `(M, Q)` inducing `ψ`. `f` runs over all
/// symmetric 2-cocycles; given `f`, compatibility fixes `F` from its values
/// on generators, which run over all lifts of `ψ`.
fn enumerate_extensions(
    m: &AbCrossedModule,
    q: &FinAbGroup,
    psi: &GroupHom,
    cocycles: &[Cochain2],
) -> Result<Vec<Extension>> {
    let qe = q.elements()?;
    let dg = m.d_group();
    let lifts: Vec<Vec<Element>> = (0..q.rank())
        .map(|j| {
            let target = psi.apply(&q.generator(j));
            dg.elements().map(|es| {
                es.into_iter()
                    .filter(|x| m.pi0_proj().apply(x) == target)
                    .collect()
            })
        })
        .collect::<Result<_>>()?;
    let combos: usize = lifts.iter().map(Vec::len).product();
    let mut out = Vec::new();
    for f in cocycles {
        for mut idx in 0..combos {
            let gens: Vec<Element> = lifts
                .iter()
                .map(|l| {
                    let x = l[idx % l.len()].clone();
                    idx /= l.len();
                    x
                })
                .collect();
            let mut fmap: Vec<Option<Element>> = vec![None; qe.len()];
            fmap[0] = Some(dg.zero());
            for (i, u) in qe.iter().enumerate().skip(1) {
                // u = p + g_j with p earlier in the enumeration
                let j = u.0.iter().position(|&c| c != 0).expect("nonzero");
                let g = q.generator(j);
                let p = q.sub(u, &g);
                let fp = fmap[q.index_of(&p)].clone().expect("earlier element");
                let v = dg.sub(&dg.add(&fp, &gens[j]), &m.d().apply(f.get(&p, &g)));
                fmap[i] = Some(v);
            }
            let fmap: Vec<Element> = fmap.into_iter().map(|x| x.expect("filled")).collect();
            if let Ok(ext) = Extension::new(m, f.clone(), fmap) {
                if ext.induced_psi()? == *psi {
                    out.push(ext);
                }
            }
        }
    }
    Ok(out)
}

fn partition_extensions(exts: &[Extension]) -> Result<Vec<usize>> {
    let mut reps: Vec<&Extension> = Vec::new();
    let mut label = Vec::with_capacity(exts.len());
    for x in exts {
        let mut found = None;
        for (i, r) in reps.iter().enumerate() {
            if are_equivalent(r, x)?.is_some() {
                found = Some(i);
                break;
            }
        }
        label.push(found.unwrap_or_else(|| {
            reps.push(x);
            reps.len() - 1
        }));
    }
    Ok(label)
}

fn schreier() -> Result<Vec<Check>> {
    let mut count =
        Tally::new("equivalence classes number |H2(Q, Ker d)| when unobstructed, none otherwise");
    let mut reps = Tally::new("classified representatives meet each enumerated class exactly once");
    let mut round = Tally::new("extension -> functor -> extension stays in its class");
    let mut step =
        Tally::new("functors are homotopic exactly when their extensions are equivalent");
    let (mut obstructed, mut enumerated) = (0, 0);
    let mut cache: HashMap<(Vec<i64>, Vec<i64>), Vec<Cochain2>> = HashMap::new();
    for m in corpus() {
        for q in quotients() {
            let qo = q.order() as u32;
            let feasible = (m.b().order() as u128)
                .checked_pow(qo * qo)
                .is_some_and(|c| c <= 1 << 20);
            if !feasible {
                continue;
            }
            let key = (q.factors().to_vec(), m.b().factors().to_vec());
            if !cache.contains_key(&key) {
                cache.insert(key.clone(), oracle_h2(&q, m.b())?.cocycles);
            }
            for psi in all_homs(&q, m.pi0())? {
                let what = || format!("{} with Q = {q}, ψ = {:?}", describe(&m), psi.matrix());
                let (_, class) = obstruction_class(&m, &q, &psi)?;
                let exts = enumerate_extensions(&m, &q, &psi, &cache[&key])?;
                enumerated += exts.len();
                let labels = partition_extensions(&exts)?;
                let classes = labels.iter().max().map_or(0, |&l| l + 1);
                let h2 = H2::new(&q, m.pi1())?.order() as usize;
                let expect = if class.is_zero() { h2 } else { 0 };
                if !class.is_zero() {
                    obstructed += 1;
                }
                count.record(classes == expect, || {
                    format!("{}: {classes} classes, expected {expect}", what())
                });

                let result = classify_extensions(&m, &q, &psi)?;
                let found = match &result {
                    ClassificationResult::Obstructed { .. } => Vec::new(),
                    ClassificationResult::Classes {
                        representatives, ..
                    } => representatives.clone(),
                };
                let mut hit = vec![0usize; classes];
                for r in &found {
                    for (x, &l) in exts.iter().zip(&labels) {
                        if hit[l] == 0 && are_equivalent(r, x)?.is_some() {
                            hit[l] += 1;
                        }
                    }
                }
                let each_once = found.len() == classes && hit.iter().all(|&h| h == 1);
                reps.record(each_once, || {
                    format!("{}: {} representatives, hits {hit:?}", what(), found.len())
                });

                let mut ok = true;
                for r in &found {
                    let back = extension_of_functor(&functor_of_extension(r)?)?;
                    ok &= are_equivalent(r, &back)?.is_some();
                }
                round.record(ok, what);

                let functors: Vec<SymMonoidalFunctor> = found
                    .iter()
                    .map(functor_of_extension)
                    .collect::<Result<_>>()?;
                let mut agree = true;
                for (i, fi) in functors.iter().enumerate() {
                    for (j, fj) in functors.iter().enumerate() {
                        let homotopic = are_homotopic(fi, fj)?.is_some();
                        let equivalent = are_equivalent(&found[i], &found[j])?.is_some();
                        agree &= homotopic == equivalent && homotopic == (i == j);
                    }
                }
                step.record(agree, what);
            }
        }
    }
    Ok(vec![
        count.finish(|n| {
            format!("{n} instances, {obstructed} obstructed, {enumerated} extensions enumerated")
        }),
        reps.finish(|n| format!("{n} instances")),
        round.finish(|n| format!("{n} instances")),
        step.finish(|n| format!("{n} instances")),
    ])
}

fn totals(r: &ClassificationResult) -> Vec<Vec<i64>> {
    let mut t: Vec<Vec<i64>> = match r {
        ClassificationResult::Obstructed { .. } => Vec::new(),
        ClassificationResult::Classes {
            representatives, ..
        } => representatives
            .iter()
            .map(|e| e.total_group_type().factors().to_vec())
            .collect(),
    };
    t.sort();
    t
}

fn benchmark() -> Result<Vec<Check>> {
    let m = cyclic_module(2, 2, 0)?;
    let r = classify_extensions(&m, &z(2), &GroupHom::identity(&z(2)))?;
    let t = totals(&r);
    let first = single(
        "Z/2 -0-> Z/2, Q = Z/2, ψ = id: two classes with total groups [2,2] and [4]",
        r.class_count() == 2 && t == vec![vec![2, 2], vec![4]],
        format!("{} classes, total groups {t:?}", r.class_count()),
    );

    let m = cyclic_module(2, 4, 2)?;
    let psi = GroupHom::identity(m.pi0());
    let r = classify_extensions(&m, &z(2), &psi)?;
    let t = totals(&r);
    let pb = pullback_extension(&canonical_extension(&m)?, &psi)?;
    let same = match &r {
        ClassificationResult::Classes {
            representatives, ..
        } if representatives.len() == 1 => are_equivalent(&pb, &representatives[0])?.is_some(),
        _ => false,
    };
    let second = single(
        "Z/2 -×2-> Z/4, Q = Z/2, ψ = id: one class, total group [4], equal to the pullback",
        r.class_count() == 1 && t == vec![vec![4]] && same,
        format!(
            "{} classes, total groups {t:?}, pullback total {:?}, equivalent to pullback: {same}",
            r.class_count(),
            pb.total_group_type().factors()
        ),
    );
    Ok(vec![first, second])
}

/// `ξ = 0`, `η(1,1) = 1` over `(Z/2, Z/2)`.
pub fn eta_cocycle() -> Result<Cochain3> {
    Cochain3::from_fns(&z(2), &z(2), |_, _, _| e(0), |x, y| e(x.0[0] * y.0[0]))
}

fn obstruction() -> Result<Vec<Check>> {
    let (z2, t) = (z(2), FinAbGroup::trivial());
    let h3 = H3::new(&z2, &z2)?;
    let h2 = H2::new(&z2, &z2)?.order() as usize;
    let dis = ReducedPicard::split(&z2, &t)?;
    let split = ReducedPicard::split(&z2, &z2)?;
    let types = [
        (
            "(id, 0) from Dis Z/2",
            &dis,
            FunctorTypePair {
                phi0: GroupHom::identity(&z2),
                f: GroupHom::zero(&t, &z2),
            },
        ),
        (
            "(id, id) from the split category",
            &split,
            FunctorTypePair {
                phi0: GroupHom::identity(&z2),
                f: GroupHom::identity(&z2),
            },
        ),
        (
            "(0, 0) from the split category",
            &split,
            FunctorTypePair {
                phi0: GroupHom::zero(&z2, &z2),
                f: GroupHom::zero(&z2, &z2),
            },
        ),
    ];
    let mut empty = Tally::new("functor_classes is empty exactly for nonzero obstruction classes");
    let mut sizes =
        Tally::new("unobstructed types have |H2(Z/2, Z/2)| pairwise non-homotopic classes");
    let mut seen = Vec::new();
    for (class, rep) in h3.all_classes()? {
        let target = ReducedPicard::new(rep)?;
        for (name, src, ty) in &types {
            let (_, oc) = crate::picard::obstruction_class(ty, src, &target)?;
            let realizable = is_realizable(ty, src, &target)?;
            let fs = functor_classes(ty, src, &target)?;
            let what = || format!("target class {class}, type {name}");
            empty.record(
                fs.is_empty() == !oc.is_zero() && realizable == oc.is_zero(),
                what,
            );
            if oc.is_zero() {
                let mut distinct = fs.len() == h2;
                for (i, a) in fs.iter().enumerate() {
                    for b in &fs[i + 1..] {
                        distinct &= are_homotopic_reduced(a, b)?.is_none();
                    }
                }
                sizes.record(distinct, || format!("{}: {} classes", what(), fs.len()));
            }
            seen.push(format!("{class}/{}", if oc.is_zero() { 0 } else { 1 }));
        }
    }
    let classes = h3.order();
    let seen = seen.join(" ");
    Ok(vec![
        empty.finish(|n| {
            format!("{n} cases over {classes} target classes; class/obstructed: {seen}")
        }),
        sizes.finish(|n| format!("{n} unobstructed cases")),
    ])
}

// ---- worked examples

fn snf_example(rows: &[Vec<i64>], expect: &[i64]) -> Check {
    let a = Matrix::<BigInt>::from_i64_rows(rows[0].len(), rows);
    let s = smith_normal_form(&a);
    let diag: Vec<BigInt> = s.diagonal();
    let product = &(&s.u * &a) * &s.v;
    let want: Vec<BigInt> = expect.iter().map(|&v| BigInt::from(v)).collect();
    let shown: Vec<String> = diag.iter().map(ToString::to_string).collect();
    single(
        &format!("Smith form of {rows:?}"),
        diag == want && product == s.s,
        format!("diag({}), U·A·V = S: {}", shown.join(","), product == s.s),
    )
}

fn example_homs() -> Result<Vec<Check>> {
    let (z2, z4) = (z(2), z(4));
    let g = GroupHom::new(&z4, &z2, vec![vec![1]])?;
    let h = GroupHom::new(&z2, &z4, vec![vec![2]])?;
    let gh = g.compose(&h)?;
    let mut out = vec![single(
        "mod 2 after ×2 is zero on Z/2",
        gh.is_zero(),
        format!(
            "images {}",
            show(
                &z2.elements()?
                    .iter()
                    .map(|x| gh.apply(x))
                    .collect::<Vec<_>>()
            )
        ),
    )];
    let dg = g.exact_decomposition();
    let ker: Vec<String> = z4
        .elements()?
        .iter()
        .filter(|x| g.apply(x).is_zero())
        .map(ToString::to_string)
        .collect();
    out.push(single(
        "mod 2: Z/4 -> Z/2 has kernel Z/2 generated by 2, image Z/2, trivial cokernel",
        dg.ker.factors() == [2]
            && dg.img.factors() == [2]
            && dg.coker.is_trivial()
            && ker == ["(0)", "(2)"],
        format!(
            "ker {} = {{{}}}, img {}, coker {}",
            dg.ker,
            ker.join(","),
            dg.img,
            dg.coker
        ),
    ));
    let dh = h.exact_decomposition();
    out.push(single(
        "×2: Z/2 -> Z/4 has trivial kernel, image Z/2, cokernel Z/2",
        dh.ker.is_trivial() && dh.img.factors() == [2] && dh.coker.factors() == [2],
        format!("ker {}, img {}, coker {}", dh.ker, dh.img, dh.coker),
    ));
    let x = g.solve_preimage(&e(1));
    out.push(single(
        "least preimage of 1 under mod 2 is 1",
        x == Some(e(1)),
        x.map_or("none".into(), |v| v.to_string()),
    ));
    Ok(out)
}

fn example_cochains() -> Result<Vec<Check>> {
    let z2 = z(2);
    let f = Cochain2::from_entries(&z2, &z2, [(&e(1), &e(1), &e(1))])?;
    let mut out = vec![single(
        "f(1,1) = 1 on Z/2 is a symmetric 2-cocycle",
        f.is_sym_2cocycle(),
        format!("{}", f.is_sym_2cocycle()),
    )];
    let enumerated = oracle_h3(&z2, &z2)?;
    // carry(y,z) = 1 iff y = z = 1
    let carry = Cochain3::from_fns(&z2, &z2, |x, y, w| e(x.0[0] * y.0[0] * w.0[0]), |_, _| e(0))?;
    let checked = carry.check_sym_3cocycle();
    let listed = enumerated.cocycles.contains(&carry);
    out.push(single(
        "ξ(x,y,z) = x·carry(y,z), η = 0 on Z/2: checker agrees with enumeration",
        checked.is_ok() == listed,
        match &checked {
            Ok(()) => format!("cocycle; enumerated: {listed}"),
            Err(v) => format!("not a cocycle, fails {v}; enumerated: {listed}"),
        },
    ));
    let eta = eta_cocycle()?;
    let listed = enumerated.cocycles.contains(&eta);
    out.push(single(
        "ξ = 0, η(1,1) = 1 on Z/2: checker agrees with enumeration",
        eta.is_sym_3cocycle() == listed,
        format!("cocycle: {}; enumerated: {listed}", eta.is_sym_3cocycle()),
    ));
    let g = Cochain1::from_table(&z2, &z2, vec![e(0), e(1)])?;
    out.push(single(
        "δg = 0 for g(1) = 1 on Z/2",
        g.coboundary().is_zero(),
        show(g.coboundary().table()),
    ));

    let h = H2::new(&z2, &z2)?;
    let rep = h.representative(&e(1))?;
    out.push(single(
        "H2(Z/2, Z/2) = Z/2 with representative f(1,1) = 1",
        h.group().factors() == [2] && rep == f,
        format!(
            "group {}, representative of 1: {}",
            h.group(),
            entries(&rep)
        ),
    ));
    let h23 = H2::new(&z2, &z(3))?;
    out.push(single(
        "H2(Z/2, Z/3) is trivial",
        h23.order() == 1,
        format!("{}", h23.group()),
    ));
    let h42 = H2::new(&z(4), &z2)?;
    out.push(single(
        "H2(Z/4, Z/2) = Z/2",
        h42.group().factors() == [2],
        format!("{}", h42.group()),
    ));
    let c = h.class_of(&f)?;
    out.push(single(
        "class of f(1,1) = 1 is nonzero",
        !c.is_zero(),
        format!("{c}"),
    ));

    let o = oracle_h2(&z2, &z2)?;
    out.push(single(
        "enumeration over (Z/2, Z/2) in degree 2: 2 cocycles, 2 classes",
        (o.cocycles.len(), o.class_count) == (2, 2),
        format!("{} cocycles, {} classes", o.cocycles.len(), o.class_count),
    ));
    let o = oracle_h2(&z2, &z(3))?;
    out.push(single(
        "enumeration over (Z/2, Z/3) in degree 2: 3 cocycles, 1 class",
        (o.cocycles.len(), o.class_count) == (3, 1),
        format!("{} cocycles, {} classes", o.cocycles.len(), o.class_count),
    ));
    let h3 = H3::new(&z2, &z2)?;
    out.push(single(
        "enumeration over (Z/2, Z/2) in degree 3 matches |H3|",
        enumerated.class_count as u64 == h3.order(),
        format!(
            "{} cocycles, {} classes, H3 = {}",
            enumerated.cocycles.len(),
            enumerated.class_count,
            h3.group()
        ),
    ));
    Ok(out)
}

fn example_crossed() -> Result<Vec<Check>> {
    let z2 = z(2);
    let d0 = GroupHom::zero(&z2, &z2);
    let data = CrossedData {
        d: d0,
        g: vec![e(0), e(0), e(0), e(1)],
    };
    let mut out = vec![single(
        "d = 0 on Z/2 with g(1,1) = 1 is valid crossed data but not abelian",
        data.validate().is_ok() && !data.is_abelian(),
        format!(
            "valid: {}, abelian: {}",
            data.validate().is_ok(),
            data.is_abelian()
        ),
    )];
    let m = cyclic_module(4, 2, 1)?;
    out.push(single(
        "mod 2: Z/4 -> Z/2 has π₀ trivial, π₁ = Z/2",
        m.pi0().is_trivial() && m.pi1().factors() == [2],
        format!("π₀ {}, π₁ {}", m.pi0(), m.pi1()),
    ));
    let mp = cyclic_module(2, 4, 2)?;
    out.push(single(
        "×2: Z/2 -> Z/4 has π₀ = Z/2, π₁ trivial",
        mp.pi0().factors() == [2] && mp.pi1().is_trivial(),
        format!("π₀ {}, π₁ {}", mp.pi0(), mp.pi1()),
    ));
    let f1 = GroupHom::new(&z(4), &z2, vec![vec![1]])?;
    let f0 = GroupHom::new(&z2, &z(4), vec![vec![2]])?;
    let mor = AbCrossMorphism::strict(&m, &mp, f1, f0);
    out.push(single(
        "(mod 2, ×2) is a morphism from mod 2 to ×2, with φ forced to 0",
        mor.as_ref()
            .is_ok_and(|x| x.phi.is_zero() && x.phi.source().is_trivial()),
        format!("valid: {}", mor.is_ok()),
    ));
    let mor = mor?;
    let ty = functor_of_morphism(&mor)?.reduced_type()?;
    out.push(single(
        "that morphism has type (0 -> Z/2, Z/2 -> 0)",
        ty.phi0.dom().is_trivial()
            && ty.phi0.cod().factors() == [2]
            && ty.f.dom().factors() == [2]
            && ty.f.cod().is_trivial(),
        format!(
            "φ: {} -> {}, f: {} -> {}",
            ty.phi0.dom(),
            ty.phi0.cod(),
            ty.f.dom(),
            ty.f.cod()
        ),
    ));

    let md = cyclic_module(2, 2, 0)?;
    let phi = Cochain2::from_entries(&z2, &z2, [(&e(1), &e(1), &e(1))])?;
    let id2 = GroupHom::identity(&z2);
    let a = AbCrossMorphism::new(&md, &md, id2.clone(), id2.clone(), phi.clone())?;
    let ab = compose_morphism(&a, &a)?;
    let via = compose_functors(&functor_of_morphism(&a)?, &functor_of_morphism(&a)?)?;
    out.push(single(
        "(id, id, φ) ∘ (id, id, φ') = (id, id, φ + φ') on Z/2 -0-> Z/2, also via functors",
        ab.phi == phi.add(&phi)? && functor_of_morphism(&ab)? == via,
        format!("composite φ nonzero entries {}", entries(&ab.phi)),
    ));
    out.push(single(
        "morphism with nonzero φ survives the functor round trip",
        morphism_of_functor(&functor_of_morphism(&a)?)? == a,
        "exact equality of (f₁, f₀, φ)".into(),
    ));

    let p = picard_of(&m);
    let h00 = p.hom_set(&e(0), &e(0))?;
    let h11 = p.hom_set(&e(1), &e(1))?;
    out.push(single(
        "mod 2 category: 2 objects, Hom(0,0) = Hom(1,1) = {0, 2}",
        p.objects().order() == 2 && h00 == [e(0), e(2)] && h11 == h00,
        format!(
            "{} objects, Hom(0,0) {}, Hom(1,1) {}",
            p.objects().order(),
            show(&h00),
            show(&h11)
        ),
    ));
    let pp = picard_of(&mp);
    let h20 = pp.hom_set(&e(2), &e(0))?;
    let h10 = pp.hom_set(&e(1), &e(0))?;
    let h31 = pp.hom_set(&e(3), &e(1))?;
    out.push(single(
        "×2 category: Hom(2,0) = {1}, Hom(1,0) empty, Hom(3,1) = {1}",
        h20 == [e(1)] && h10.is_empty() && h31 == [e(1)],
        format!(
            "Hom(2,0) {}, Hom(1,0) {}, Hom(3,1) {}",
            show(&h20),
            show(&h10),
            show(&h31)
        ),
    ));

    let r = reduce(&picard_of(&md))?;
    out.push(single(
        "reduce of Z/2 -0-> Z/2 gives k = 0",
        r.reduced.k().is_zero() && r.section == [e(0), e(1)],
        format!(
            "section {}, k zero: {}",
            show(&r.section),
            r.reduced.k().is_zero()
        ),
    ));
    let m44 = cyclic_module(4, 4, 2)?;
    let r = reduce(&picard_of(&m44))?;
    out.push(single(
        "reduce of Z/4 -×2-> Z/4: π₀ = π₁ = Z/2, b(1,1) = 1, k = 0",
        m44.pi0().factors() == [2]
            && m44.pi1().factors() == [2]
            && *r.b.get(&e(1), &e(1)) == e(1)
            && r.reduced.k().is_zero(),
        format!(
            "π₀ {}, π₁ {}, b(1,1) = {}, k zero: {}",
            m44.pi0(),
            m44.pi1(),
            r.b.get(&e(1), &e(1)),
            r.reduced.k().is_zero()
        ),
    ));
    Ok(out)
}

fn example_functors() -> Result<Vec<Check>> {
    let (z2, t) = (z(2), FinAbGroup::trivial());
    let eta = ReducedPicard::new(eta_cocycle()?)?;
    let dis = ReducedPicard::split(&z2, &t)?;
    let ty = FunctorTypePair {
        phi0: GroupHom::identity(&z2),
        f: GroupHom::zero(&t, &z2),
    };
    let (h3, c) = crate::picard::obstruction_class(&ty, &dis, &eta)?;
    let none = functor_classes(&ty, &dis, &eta)?;
    let mut out = vec![single(
        "(id, 0) from Dis Z/2 into the η(1,1) = 1 target is obstructed, no functors",
        !c.is_zero() && none.is_empty(),
        format!(
            "class {c} in {}, {} functor classes",
            h3.group(),
            none.len()
        ),
    )];
    let split = ReducedPicard::split(&z2, &z2)?;
    let idt = FunctorTypePair {
        phi0: GroupHom::identity(&z2),
        f: GroupHom::identity(&z2),
    };
    let fs = functor_classes(&idt, &split, &split)?;
    out.push(single(
        "(id, id) on the split category over (Z/2, Z/2) is realizable with 2 classes",
        is_realizable(&idt, &split, &split)? && fs.len() == 2,
        format!("{} classes", fs.len()),
    ));

    let md = cyclic_module(2, 2, 0)?;
    let p = picard_of(&md);
    let dis_q = StrictPicard::discrete(&z2);
    let no_b = GroupHom::zero(&t, &z2);
    let g = Cochain1::from_table(&z2, &z2, vec![e(0), e(1)])?;
    let f = SymMonoidalFunctor::new(&dis_q, &p, vec![e(0), e(1)], no_b.clone(), vec![e(0); 4])?;
    let shifted = Cochain2::zero(&z2, &z2)?.add(&g.coboundary())?;
    let objs: Vec<Element> = (0..2)
        .map(|u| z2.add(&f.object_table()[u], &md.d().apply(g.at(u))))
        .collect();
    let f2 = SymMonoidalFunctor::new(&dis_q, &p, objs, no_b.clone(), shifted.table().to_vec())?;
    let w = are_homotopic(&f, &f2)?;
    out.push(single(
        "functors Dis Z/2 -> (Z/2 -0-> Z/2) differing by δg are homotopic, g a witness",
        w.is_some() && is_natural_equivalence(&f, &f2, g.table()),
        format!(
            "least witness {}, g satisfies the conditions: {}",
            w.as_deref().map_or("none".into(), show),
            is_natural_equivalence(&f, &f2, g.table())
        ),
    ));
    let twisted = SymMonoidalFunctor::new(
        &dis_q,
        &p,
        vec![e(0), e(1)],
        no_b,
        vec![e(0), e(0), e(0), e(1)],
    )?;
    let w = are_homotopic(&f, &twisted)?;
    let exhaustive = z2
        .elements()?
        .into_iter()
        .any(|v| is_natural_equivalence(&f, &twisted, &[e(0), v]));
    out.push(single(
        "functors whose F̃ differ by the nontrivial H2 class are not homotopic",
        w.is_none() && !exhaustive,
        format!(
            "solver witness: {}, exhaustive search finds one: {exhaustive}",
            w.as_deref().map_or("none".into(), show)
        ),
    ));
    Ok(out)
}

fn example_extensions() -> Result<Vec<Check>> {
    let z2 = z(2);
    let md = cyclic_module(2, 2, 0)?;
    let split = Extension::new(&md, Cochain2::zero(&z2, &z2)?, vec![e(0), e(1)])?;
    let twisted = Extension::new(
        &md,
        Cochain2::from_entries(&z2, &z2, [(&e(1), &e(1), &e(1))])?,
        vec![e(0), e(1)],
    )?;
    let mut out = vec![single(
        "split extension over Z/2 -0-> Z/2 has total group [2,2]",
        split.total_group_type().factors() == [2, 2] && split.cocycle().is_zero(),
        format!("{:?}", split.total_group_type().factors()),
    )];
    let g1 = (e(0), e(1));
    let twice = twisted.add(&g1, &g1);
    let four = twisted.add(&twice, &twice);
    out.push(single(
        "twisted extension: (0,1) + (0,1) = (1,0), total group [4]",
        twice == (e(1), e(0))
            && four == (e(0), e(0))
            && twisted.total_group_type().factors() == [4],
        format!(
            "(0,1)+(0,1) = ({}, {}), total {:?}",
            twice.0,
            twice.1,
            twisted.total_group_type().factors()
        ),
    ));
    let psi = split.induced_psi()?;
    out.push(single(
        "split extension induces ψ = id on Z/2",
        psi == GroupHom::identity(&z2),
        format!("{:?}", psi.matrix()),
    ));
    let ft = functor_of_extension(&twisted)?;
    out.push(single(
        "functor of the twisted extension has F̃(1,1) = 1",
        *ft.tilde(&e(1), &e(1)) == e(1),
        format!("F̃(1,1) = {}", ft.tilde(&e(1), &e(1))),
    ));
    let canon = canonical_extension(&cyclic_module(2, 4, 2)?)?;
    let mut round = true;
    for x in [&split, &twisted, &canon] {
        round &= are_equivalent(x, &extension_of_functor(&functor_of_extension(x)?)?)?.is_some();
    }
    out.push(single(
        "functor round trip has an equivalence witness",
        round,
        format!("{round}"),
    ));
    let w = are_equivalent(&split, &twisted)?;
    out.push(single(
        "split and twisted extensions are not equivalent",
        w.is_none() && split.total_group_type() != twisted.total_group_type(),
        format!(
            "witness: {}",
            w.as_ref().map_or("none".into(), |a| show(a.table()))
        ),
    ));

    let m = cyclic_module(2, 4, 2)?;
    let q = z(4);
    let base = Extension::new(&m, Cochain2::zero(&q, m.b())?, q.elements()?)?;
    let g = Cochain1::from_table(&q, m.b(), vec![e(0), e(1), e(0), e(0)])?;
    let f2 = base.cocycle().add(&g.coboundary())?;
    let fmap2: Vec<Element> = (0..4)
        .map(|u| m.d_group().add(&base.fmap()[u], &m.d().apply(g.at(u))))
        .collect();
    let shifted = Extension::new(&m, f2, fmap2)?;
    let w = are_equivalent(&base, &shifted)?;
    out.push(single(
        "adding δg to f and d∘g to F gives an equivalent extension, α = g",
        w.is_some() && is_equivalence(&base, &shifted, &g),
        format!(
            "least witness {}, g is a witness: {}",
            w.as_ref().map_or("none".into(), |a| show(a.table())),
            is_equivalence(&base, &shifted, &g)
        ),
    ));

    let (_, c) = obstruction_class(&cyclic_module(4, 4, 2)?, &z2, &GroupHom::identity(&z2))?;
    out.push(single(
        "obstruction for Z/4 -×2-> Z/4, Q = Z/2, ψ = id vanishes",
        c.is_zero(),
        format!("class {c}"),
    ));
    let r = classify_extensions(&md, &z2, &GroupHom::identity(&z2))?;
    out.push(single(
        "classify Z/2 -0-> Z/2, Q = Z/2, ψ = id: 2 classes, totals [2,2] and [4]",
        totals(&r) == vec![vec![2, 2], vec![4]],
        format!("{:?}", totals(&r)),
    ));
    let psi = GroupHom::identity(m.pi0());
    let r = classify_extensions(&m, &z2, &psi)?;
    let pb = pullback_extension(&canon, &psi)?;
    out.push(single(
        "classify Z/2 -×2-> Z/4, Q = Z/2, ψ = id: 1 class with total [4], the pullback",
        totals(&r) == vec![vec![4]] && pb.total_group_type().factors() == [4],
        format!(
            "classes {:?}, pullback total {:?}",
            totals(&r),
            pb.total_group_type().factors()
        ),
    ));
    let h = H2::new(&z2, &z2)?;
    out.push(single(
        "degree-2 cohomology over (Z/2, Z/2) is [2]",
        h.group().factors() == [2],
        format!("{:?}", h.group().factors()),
    ));
    let m2 = reduce(&picard_of(&m))?;
    out.push(single(
        "reduce Z/2 -×2-> Z/4: k = 0, π₀ = [2], π₁ = []",
        m2.reduced.k().is_zero() && m.pi0().factors() == [2] && m.pi1().factors().is_empty(),
        format!("π₀ {:?}, π₁ {:?}", m.pi0().factors(), m.pi1().factors()),
    ));
    Ok(out)
}

fn examples() -> Result<Vec<Check>> {
    let mut out = vec![
        snf_example(&[vec![2, 0], vec![0, 3]], &[1, 6]),
        snf_example(&[vec![4, 2], vec![2, 2]], &[2, 2]),
    ];
    out.extend(example_homs()?);
    out.extend(example_cochains()?);
    out.extend(example_crossed()?);
    out.extend(example_functors()?);
    out.extend(example_extensions()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = corpus();
        let expect: i64 = CORPUS_ORDERS
            .iter()
            .map(|&a| {
                CORPUS_ORDERS
                    .iter()
                    .map(|&b| if a == 1 { 1 } else { a.gcd(&b) })
                    .sum::<i64>()
            })
            .sum();
        assert_eq!(c.len() as i64, expect);
        assert!(c
            .iter()
            .all(|m| m.b().order() * m.pi0().order() == m.d_group().order() * m.pi1().order()));
    }

    #[test]
    fn hom_enumeration_counts() {
        assert_eq!(all_homs(&z(4), &z(6)).unwrap().len(), 2);
        assert_eq!(
            all_homs(&FinAbGroup::new(&[2, 2]).unwrap(), &z(4))
                .unwrap()
                .len(),
            4
        );
        assert_eq!(all_homs(&FinAbGroup::trivial(), &z(3)).unwrap().len(), 1);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope"), Err(Error::UnknownSuite(_))));
    }
}
