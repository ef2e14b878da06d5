use std::io::Write;
use std::process::{Command, Output, Stdio};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabclass::lattice::lattice;

fn stabclass(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stabclass"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let input = stdin.unwrap_or("").to_string();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_gate_set() {
    let o = stabclass(&["classify", "--gate", "CXZ", "--gate", "THETA_XpZ"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ALL\n");
}

#[test]
fn classify_identity_from_stdin() {
    let o = stabclass(&["classify", "--tableau", "-"], Some("n=2\n1 0 0 0 | 0\n0 1 0 0 | 0\n0 0 1 0 | 0\n0 0 0 1 | 0\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "BOT\n");
}

#[test]
fn count_by_formula_and_closure() {
    assert_eq!(stdout(&stabclass(&["count", "--class", "T4+P+Gamma", "--n", "3"], None)), "41472\n");
    assert_eq!(stdout(&stabclass(&["count", "--class", "ALL", "--n", "2", "--brute"], None)), "11520\n");
    let o = stabclass(&["count", "--class", "ALL", "--n", "3", "--brute", "--cap", "1000"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let o = stabclass(&["count", "--class", "nope", "--n", "2"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown class"));
    assert_eq!(stabclass(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(stabclass(&["count", "--class", "ALL"], None).status.code(), Some(2));
    let o = stabclass(&["classify", "--tableau", "-"], Some("n=1\n1 1 | 0\n1 1 | 0\n"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lattice_dot_shape() {
    let o = stabclass(&["lattice", "--format", "dot"], None);
    let text = stdout(&o);
    assert_eq!(text.matches("[label=").count(), 57);
    assert_eq!(text.matches(" -> ").count(), lattice().covers().len());
    assert_eq!(lattice().covers().len(), 125);
}

#[test]
fn catalog_listing_and_entry() {
    let list = stdout(&stabclass(&["catalog"], None));
    assert!(list.lines().any(|l| l == "CZZ"));
    let entry = stdout(&stabclass(&["catalog", "--name", "H"], None));
    assert!(entry.starts_with("THETA_XpZ\nn=1\n"));
    assert_eq!(entry.lines().count(), 1 + 3 + 2);
}

#[test]
fn verify_reports_counts() {
    let o = stabclass(&["verify", "--suite", "stabilizer9"], None);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("stabilizer9: 3 passed, 0 failed\n"));
    assert_eq!(stabclass(&["verify", "--suite", "nonsense"], None).status.code(), Some(2));
}

#[test]
fn synth_then_classify_stays_in_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let l = lattice();
    for name in ["ALL", "T4+P+Gamma", "C(Z,Z)+P+RZ", "T4+P+RY", "C(Y,X)+P", "theta_+++"] {
        let class = l.by_name(name).unwrap();
        let t = class.random_word(3, 10, &mut rng).tableau().unwrap();
        let synth = stabclass(&["synth", "--tableau", "-"], Some(&t.to_string()));
        assert!(synth.status.success(), "{name}");
        let back = stabclass(&["classify", "--circuit", "-"], Some(&stdout(&synth)));
        let got = l.by_name(stdout(&back).trim()).unwrap();
        assert!(l.le(got.id, class.id), "{name} came back as {}", got.name);
        assert_eq!(got.id, l.classify(&t).unwrap().id);
    }
}
