use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hocat::doc::parse;
use hocat::load::load_fincat;
use hocat_core::fincat::is_isomorphic;
use hocat_core::samples;
use hocat_core::{Budget, FinCat, WordBudget};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn hocat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hocat")).args(args).env_remove("HOCAT_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn category(text: &str) -> FinCat {
    load_fincat(&parse(text).unwrap(), WordBudget::default()).unwrap()
}

fn iso(a: &FinCat, b: &FinCat) -> bool {
    is_isomorphic(a, b, Budget::default()).unwrap().is_some()
}

fn path(name: &str) -> String {
    corpus(name).to_string_lossy().into_owned()
}

#[test]
fn hcat_of_delta2_is_two() {
    let o = hocat(&["hcat", &path("delta2.sset")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(iso(&category(&stdout(&o)), &samples::ordinal(2)));
}

#[test]
fn boundary_fails_spine_extension_with_witness() {
    let o = hocat(&["check-iep", &path("boundary2.sset"), "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("chain [01, 12] with 0 fillers"), "{}", stdout(&o));
    assert!(stderr(&o).contains("spine extension"));
    let o = hocat(&["check-iep", &path("delta2.sset")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=2: holds\n");
}

#[test]
fn localizing_the_arrow_gives_the_walking_iso() {
    let o = hocat(&["localize", &path("arrow.cat"), "--mark", "f"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(iso(&category(&stdout(&o)), &samples::walking_iso()));
    let o = hocat(&["localize", &path("arrow.mcat")]);
    assert!(iso(&category(&stdout(&o)), &samples::walking_iso()));
    let o = hocat(&["localize", &path("arrow.cat"), "--mark", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn colimits_limits_and_coequalizers() {
    let o = hocat(&["colim", &path("glue.diag")]);
    assert!(iso(&category(&stdout(&o)), &samples::ordinal(2)));
    let o = hocat(&["lim", &path("pair.diag")]);
    assert_eq!(category(&stdout(&o)).num_morphisms(), 9);
    let o = hocat(&["coeq", &path("merge.diag")]);
    assert!(iso(&category(&stdout(&o)), &samples::terminal()));
    let o = hocat(&["coeq", &path("glue.diag")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn possibly_infinite_needs_allow_partial() {
    let o = hocat(&["coeq", &path("endpoints.diag"), "--max-len", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("may be infinite"));
    let o = hocat(&["coeq", &path("endpoints.diag"), "--max-len", "5", "--allow-partial"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("f.f.f.f.f"));
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cat");
    std::fs::write(&bad, "category C\nobjects a b\narrow f : a -> z\n").unwrap();
    let o = hocat(&["export-dot", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.cat:3:16: unknown reference z"), "{}", stderr(&o));
}

#[test]
fn semantic_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cat");
    std::fs::write(&bad, "category C\nobjects a b\narrow f : a -> b\narrow g : b -> a\ncompose g f = 1_a\n").unwrap();
    let o = hocat(&["nerve", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no entry for f . g"), "{}", stderr(&o));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("n.sset");
    let o = hocat(&["nerve", &path("two.cat"), "--dim", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let x = hocat::load::load_sset(&parse(&text).unwrap()).unwrap();
    assert_eq!(x.level_sizes(), vec![3, 6, 10]);
    let o = hocat(&["hcat", out.to_str().unwrap()]);
    assert!(iso(&category(&stdout(&o)), &samples::ordinal(2)));
}

#[test]
fn budget_from_environment() {
    let run = |env: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_hocat"));
        c.args(["lim", &path("pair.diag")]);
        match env {
            Some(v) => c.env("HOCAT_BUDGET", v),
            None => c.env_remove("HOCAT_BUDGET"),
        };
        c.output().unwrap()
    };
    assert_eq!(run(None).status.code(), Some(0));
    let o = run(Some("2"));
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_hocat"))
        .args(["lim", &path("pair.diag"), "--budget", "100000"])
        .env("HOCAT_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["nerve", "CORPUS/square.cat", "--raw"],
        vec!["colim", "CORPUS/glue.diag", "--format", "dot"],
        vec!["elements", "CORPUS/delta2.sset", "--format", "text"],
        vec!["localize", "CORPUS/cospan.mcat", "--format", "text"],
    ] {
        let args: Vec<String> = args.iter().map(|a| a.replace("CORPUS/", &format!("{}/", path("")))).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (hocat(&args), hocat(&args));
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn dot_export() {
    let o = hocat(&["export-dot", &path("iso.cat")]);
    let s = stdout(&o);
    assert_eq!(s.matches("style=bold").count(), 2);
    let o = hocat(&["export-dot", &path("arrow.mcat")]);
    assert!(stdout(&o).contains("color=red"));
    let o = hocat(&["nerve", &path("arrow.cat"), "--format", "dot"]);
    assert_eq!(stdout(&o).matches(" -> ").count(), 1);
}

#[test]
fn verify_reports_four_adjunctions() {
    let o = hocat(&["verify", &path("iso.cat"), &path("square.cat")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).matches(": ok").count(), 4);
}

#[test]
fn usage_errors() {
    assert_eq!(hocat(&[]).status.code(), Some(2));
    assert_eq!(hocat(&["hcat"]).status.code(), Some(2));
    assert_eq!(hocat(&["nerve", &path("arrow.cat"), "--dim", "99"]).status.code(), Some(2));
    assert_eq!(hocat(&["hcat", &path("arrow.cat")]).status.code(), Some(1));
    assert_eq!(hocat(&["--help"]).status.code(), Some(0));
}
