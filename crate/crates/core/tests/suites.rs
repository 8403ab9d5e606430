use abcross::verify::run_suite;

fn all_pass(name: &str) {
    let checks = run_suite(name).unwrap();
    assert!(!checks.is_empty());
    for c in &checks {
        println!("{c}");
    }
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn cohomology_cross() {
    all_pass("cohomology-cross");
}

#[test]
fn differential_closure() {
    all_pass("differential-closure");
}

#[test]
fn classification() {
    all_pass("classification");
}

#[test]
fn reduction() {
    all_pass("reduction");
}

#[test]
fn schreier() {
    all_pass("schreier");
}

#[test]
fn benchmark() {
    all_pass("benchmark");
}

#[test]
fn obstruction() {
    all_pass("obstruction");
}

#[test]
fn examples() {
    all_pass("examples");
}
