use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclic-aut"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_klein_curve() {
    let o = run(&["classify", "--curve", "y^7 = x(x-1)^2(x+1)^4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("C.2"), "{text}");
    assert!(text.contains("168"));
    assert!(text.contains("PSL(2,7)"));

    let v = json(&["classify", "--n", "7", "--a", "1", "--b", "2", "--c", "4"]);
    assert_eq!(v["row"], "C.2");
    assert_eq!(v["order"], 168);
    assert_eq!(v["genus"], 3);
}

#[test]
fn fermat_json() {
    let v = json(&["fermat", "--n", "5", "--d", "4"]);
    assert_eq!(v["order"], 20);
    assert_eq!(v["structure"], "Z4+Z5");
}

#[test]
fn json_key_order_is_fixed() {
    let o = run(&["classify", "--n", "8", "--a", "1", "--b", "3", "--c", "4", "--json"]);
    let text = stdout(&o);
    let keys = ["\"input\"", "\"canonical_triple\"", "\"genus\"", "\"signature\"", "\"row\"", "\"order\"", "\"structure\"", "\"chain\"", "\"base_order\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap_or_else(|| panic!("{k} missing"))).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    // same input, same bytes
    assert_eq!(stdout(&run(&["classify", "--n", "8", "--a", "1", "--b", "3", "--c", "4", "--json"])), text);
}

#[test]
fn coset_enum_and_budget() {
    let o = run(&["coset-enum", "--pres", "<u,v | u^4, v^8, (u*v)^2, u^2*v*u^2*v^3>"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "32");

    let o = run(&["coset-enum", "--pres", "<a,b | a^2, b^3, (a*b)^7>", "--max-cosets", "100000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget exceeded"));
}

#[test]
fn abelianize_and_perm_order() {
    let v = json(&["abelianize", "--pres", "<a,b | a^4, b^6, (a*b)^6>"]);
    assert_eq!(v["invariants"], serde_json::json!([2, 6]));
    assert_eq!(v["free_rank"], 0);

    let gens = "(1,4)(2,7)(3,10)(5,8)(6,11)(9,12); (1,10,9,5)(2,4,11,3,7,12,6,8); (1,2,3)(4,5,6)(7,8,9)(10,11,12)";
    let v = json(&["perm-order", "--gens", gens, "--degree", "12"]);
    assert_eq!(v["order"], 96);
    assert_eq!(v["is_abelian"], false);
}

#[test]
fn genus_and_lefschetz() {
    let v = json(&["genus", "--curve", "y^8 = x(x-1)^3(x+1)^4"]);
    assert_eq!(v["genus"], 2);
    assert_eq!(v["monodromy_genus"], 2);

    let v = json(&["lefschetz", "--p", "13", "--a", "3"]);
    assert_eq!(v["genus"], 6);
    assert_eq!(v["order"], 39);
    let v = json(&["lefschetz", "--p", "7", "--a", "1", "--b", "2"]);
    assert_eq!(v["isomorphic"], false);
}

#[test]
fn gs_table_lists_rows() {
    let v = json(&["gs-table"]);
    assert_eq!(v.as_array().unwrap().len(), 16);
    let v = json(&["gs-table", "--signature", "(7,7,7)"]);
    assert_eq!(v["finitely_maximal"], false);
    assert!(!v["extensions"].as_array().unwrap().is_empty());
}

#[test]
fn verify_action_runs() {
    let v = json(&["verify-action", "--seed", "3"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["actions"].as_array().unwrap().len(), 6);
    let v = json(&["verify-action", "--family", "twistedz2", "--n", "15", "--k", "4"]);
    assert_eq!(v["pass"], true);
    let o = run(&["verify-action", "--family", "twistedz2", "--n", "16", "--k", "7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_piped_into_cross_check_matches() {
    let table = run(&["enumerate", "--n-max", "14", "--json"]);
    assert!(table.status.success());
    let mut child = bin()
        .args(["cross-check", "--from-enumeration", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&table.stdout).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert!(piped.status.success());
    let direct = run(&["cross-check", "--n-max", "14", "--json"]);
    assert!(direct.status.success());
    let a: Value = serde_json::from_slice(&piped.stdout).unwrap();
    let b: Value = serde_json::from_slice(&direct.stdout).unwrap();
    assert_eq!(a, b);
    assert_eq!(a["checks"].as_array().unwrap().len(), 7);

    let one = json(&["enumerate", "--n", "7"]);
    assert_eq!(one["ordered_triples"], 30);
    assert_eq!(one["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    // domain errors
    assert_eq!(run(&["classify", "--n", "3", "--a", "1", "--b", "1", "--c", "1"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "--curve", "y^7 = x(x-1"]).status.code(), Some(1));
    assert_eq!(run(&["cross-check", "--n-max", "3"]).status.code(), Some(1));
    assert_eq!(run(&["lefschetz", "--p", "9", "--a", "1"]).status.code(), Some(1));
    // usage errors
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["coset-enum"]).status.code(), Some(2));
    assert_eq!(run(&["coset-enum", "--pres", "<a|a^2>", "--max-cosets", "0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--curve", "y^2 = x", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
