use pbnf_cli::report::*;
use pbnf_cli::{run, Output};
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::process::Command;

fn pbnf(args: &[&str]) -> Output {
    run(std::iter::once("pbnf").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Parses the JSON into its report type and checks re-rendering gives the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(out: &Output) -> Envelope<T> {
    let parsed: Envelope<T> = serde_json::from_str(&out.stdout).expect("valid report JSON");
    assert_eq!(parsed.schema, SCHEMA);
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, out.stdout);
    parsed
}

#[test]
fn prove_excluded_middle() {
    let out = pbnf(&["prove", "p | !p"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "tautology\n"));
}

#[test]
fn prove_contingent_is_negative() {
    let out = pbnf(&["prove", "p -> q"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "not a tautology (contingent), falsified by p=1 q=0\n");
}

#[test]
fn equiv_de_morgan() {
    let out = pbnf(&["equiv", "p & q", "!(!p | !q)"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "equivalent\n"));
}

#[test]
fn equiv_converse_differs() {
    let out = pbnf(&["equiv", "p -> q", "q -> p"]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "not equivalent, witness p=1 q=0\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pbnf");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["prove", "p | !p"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "tautology\n");
    let neg = status(&["equiv", "p -> q", "q -> p"]);
    assert_eq!(neg.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&neg.stdout), "not equivalent, witness p=1 q=0\n");
    assert_eq!(status(&["prove", "p &"]).status.code(), Some(2));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn syntax_errors_point_at_the_position() {
    let out = pbnf(&["transform", "p & (q"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr, "error: unclosed parenthesis\n  p & (q\n      ^\n");
}

#[test]
fn usage_errors_name_the_flag() {
    let out = pbnf(&["basis", "--ops", "frob"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--ops"), "{}", out.stderr);
    let out = pbnf(&["transform", "p", "--family", "sideways"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--family"), "{}", out.stderr);
    let out = pbnf(&["prove", "p", "--style", "fancy"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--style"), "{}", out.stderr);
}

#[test]
fn transform_json_fields() {
    let out = pbnf(&["--json", "transform", "!(p -> !q)"]);
    assert_eq!(out.code, 0);
    let t: Envelope<Transform> = round_trip(&out);
    assert_eq!(t.command, "transform");
    assert_eq!(t.body.formula, "¬(p ⇒ ¬q)");
    assert_eq!(t.body.family, "normal");
    assert_eq!(t.body.polynomial, "pq");
    assert_eq!(t.body.vector, "1000");
    assert_eq!(t.body.class, "contingent");
    let w = t.body.witness.unwrap();
    assert_eq!((w["p"], w["q"]), (1, 0));
    assert!(t.body.trace.is_none());
}

#[test]
fn transform_in_each_family() {
    let expected =
        [("normal", "pq"), ("complement", "pq+1"), ("pullback", "pq+p+q+1"), ("pullback-complement", "pq+p+q")];
    for (fam, poly) in expected {
        let out = pbnf(&["--json", "transform", "p & q", "--family", fam]);
        let t: Envelope<Transform> = round_trip(&out);
        assert_eq!(t.body.polynomial, poly, "{fam}");
    }
}

#[test]
fn transform_trace_ends_at_the_result() {
    let out = pbnf(&["--json", "transform", "!(p -> !q)", "--trace"]);
    let t: Envelope<Transform> = round_trip(&out);
    let trace = t.body.trace.unwrap();
    assert_eq!(trace.last().unwrap().result, "pq");
    assert_eq!(trace.last().unwrap().substituted, "pq+1+1");
}

#[test]
fn style_flag_and_env() {
    let out = pbnf(&["--style", "ascii", "transform", "p <-> !q"]);
    assert!(out.stdout.starts_with("formula     p <-> !q\n"), "{}", out.stdout);
    let bin = env!("CARGO_BIN_EXE_pbnf");
    let via_env = Command::new(bin).env("PBNF_STYLE", "ascii").args(["transform", "p <-> !q"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&via_env.stdout), out.stdout);
    let overridden = Command::new(bin)
        .env("PBNF_STYLE", "ascii")
        .args(["--style", "unicode", "transform", "p <-> !q"])
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&overridden.stdout).starts_with("formula     p ⇔ ¬q\n"));
}

#[test]
fn solve_nand_equals_nor() {
    let out = pbnf(&["--json", "solve", "p nand q", "p nor q"]);
    assert_eq!(out.code, 0);
    let s: Envelope<Solve> = round_trip(&out);
    assert_eq!(s.body.description, "p = q");
    let rows: Vec<(u8, u8)> = s.body.solutions.iter().map(|r| (r["p"], r["q"])).collect();
    assert_eq!(rows, [(1, 1), (0, 0)]);
}

#[test]
fn solve_without_solutions_is_negative() {
    let out = pbnf(&["solve", "p", "!p"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("never"));
}

#[test]
fn fiber_names_connectives() {
    let f: Envelope<FiberReport> = round_trip(&pbnf(&["--json", "fiber", "pq+1", "--family", "complement"]));
    assert_eq!((f.body.operator.as_str(), f.body.degenerate), ("AND", false));
    let f: Envelope<FiberReport> = round_trip(&pbnf(&["--json", "fiber", "p+1"]));
    assert!(f.body.degenerate);
    assert_eq!(f.body.statement, "¬p");
    let out = pbnf(&["fiber", "p+q+r"]);
    assert_eq!(out.code, 2);
}

#[test]
fn family_table_golden() {
    let out = pbnf(&["table"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("families.txt"));
    assert!(out.stdout.contains("p ∨ q  OR        (p+1)(q+1)+1 [= pq+p+q]  1110\n"));
    let json = pbnf(&["--json", "table"]);
    assert_eq!(json.stdout, golden("families.json"));
    let t: Envelope<FamilyTable> = round_trip(&json);
    assert_eq!(t.body.families.len(), 4);
    assert!(t.body.families.iter().all(|f| f.rows.len() == 17));
}

#[test]
fn family_table_ascii_golden() {
    let out = pbnf(&["--style", "ascii", "table", "--family", "pullback-complement"]);
    assert_eq!(out.stdout, golden("pullback_complement_ascii.txt"));
}

#[test]
fn klein_table_golden() {
    let out = pbnf(&["table", "klein"]);
    assert_eq!(out.stdout, golden("klein.txt"));
    let k: Envelope<KleinTable> = round_trip(&pbnf(&["--json", "table", "klein"]));
    for (i, row) in k.body.composition.iter().enumerate() {
        assert_eq!(row[i], "=", "every element is its own inverse");
    }
}

#[test]
fn value_table_golden() {
    assert_eq!(pbnf(&["table", "values"]).stdout, golden("values.txt"));
    let v: Envelope<ValueTable> = round_trip(&pbnf(&["--json", "table", "values"]));
    for (i, row) in v.body.sums.iter().enumerate() {
        assert_eq!(row[i], "00");
    }
}

#[test]
fn singular_tables_golden() {
    let out = pbnf(&["singular", "tables"]);
    assert_eq!(out.stdout, golden("singular_tables.txt"));
    let json = pbnf(&["--json", "singular", "tables"]);
    assert_eq!(json.stdout, golden("singular_tables.json"));
    let t: Envelope<SingularTables> = round_trip(&json);
    assert_eq!(t.body.cells.len(), 64);
    let mismatched = t.body.cells.iter().filter(|c| matches!(c.status, CellStatus::Mismatch { .. })).count();
    assert_eq!(mismatched, t.body.mismatches);
    assert_eq!(mismatched, 13);
}

#[test]
fn output_is_deterministic() {
    for args in [&["table"][..], &["singular", "tables"], &["basis", "--ops", "nand"], &["--json", "singular", "demi"]]
    {
        assert_eq!(pbnf(args), pbnf(args));
    }
}

#[test]
fn basis_reports() {
    let out = pbnf(&["--json", "basis", "--ops", "nand"]);
    assert_eq!(out.code, 0);
    let b: Envelope<Basis> = round_trip(&out);
    assert!(b.body.complete);
    assert_eq!(b.body.reached.len(), 16);

    let out = pbnf(&["--json", "basis", "--ops", "iff,xor"]);
    assert_eq!(out.code, 1);
    let b: Envelope<Basis> = round_trip(&out);
    assert_eq!((b.body.reached.len(), b.body.missing.len()), (8, 8));

    let out = pbnf(&["--json", "basis", "--ops", "xor", "--constants"]);
    let b: Envelope<Basis> = round_trip(&out);
    assert_eq!(b.body.reached.len(), 8);
}

#[test]
fn basis_target() {
    let out = pbnf(&["--json", "basis", "--ops", "nand", "--target", "p & q"]);
    assert_eq!(out.code, 0);
    let b: Envelope<Basis> = round_trip(&out);
    assert_eq!(b.body.target.unwrap().formula.as_deref(), Some("(p ↑ q) ↑ (p ↑ q)"));
    let out = pbnf(&["basis", "--ops", "xor", "--target", "p & q"]);
    assert_eq!(out.code, 1);
    let out = pbnf(&["basis", "--ops", "nand", "--target", "p & r"]);
    assert_eq!(out.code, 2);
}

#[test]
fn synth_over_implication_and_negation() {
    let out = pbnf(&["synth", "p & q", "--ops", "imp,neg"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "¬(p ⇒ ¬q)\n"));
    let out = pbnf(&["--json", "synth", "p & q", "--ops", "->,!", "--depth", "2"]);
    assert_eq!(out.code, 1);
    let s: Envelope<Synth> = round_trip(&out);
    assert!(s.body.result.formula.is_none());
    assert!(s.body.result.error.unwrap().contains("depth 3"));
}

#[test]
fn singular_apply_lowers_disjunction() {
    let out = pbnf(&["--json", "singular", "apply", "-", "p | q"]);
    let a: Envelope<SingularApply> = round_trip(&out);
    assert_eq!(a.body.polynomial, "pq+q");
    assert_eq!(a.body.connective.as_deref(), Some("NCONVIMP"));
    let out = pbnf(&["--json", "singular", "apply", "!", "p & q & r"]);
    let a: Envelope<SingularApply> = round_trip(&out);
    assert_eq!(a.body.polynomial, "pqr+1");
    assert!(a.body.statement.is_none());
    assert_eq!(pbnf(&["singular", "apply", "&", "p"]).code, 2);
}

#[test]
fn singular_demi() {
    let d: Envelope<Demi> = round_trip(&pbnf(&["--json", "singular", "demi"]));
    assert!(d.body.singular.is_empty());
    assert_eq!(d.body.pair_maps.len(), 2);
    assert_eq!(d.body.z4, [1, 3]);
}

#[test]
fn matrix_verbs() {
    let out = pbnf(&["matrix", "mul", "p,p,q,1", "(q,p,p,1)"]);
    assert_eq!(out.stdout, "(pq+p,0,p+q,pq+1)\n");
    let m: Envelope<MatrixMul> = round_trip(&pbnf(&["--json", "matrix", "mul", "p,p,q,1", "q,p,p,1"]));
    assert_eq!(m.body.product[0], "pq+p");
    let m: Envelope<MatrixOp> = round_trip(&pbnf(&["--json", "matrix", "op", "projp"]));
    assert_eq!(m.body.transpose_operator, "PROJ_Q");
    assert_eq!(pbnf(&["matrix", "op", "neg"]).code, 2);
    assert_eq!(pbnf(&["matrix", "mul", "p,q", "1,1,1,1"]).code, 2);
}

#[test]
fn every_report_round_trips() {
    let formulas = ["p", "1", "!(p -> !q)", "p nand (q nor r)", "(p <-> q) ^ r", "p </- q", "s & !s"];
    for f in formulas {
        round_trip::<Transform>(&pbnf(&["--json", "transform", f, "--trace"]));
        round_trip::<Prove>(&pbnf(&["--json", "prove", f]));
        round_trip::<Equiv>(&pbnf(&["--json", "equiv", f, "p | q"]));
        round_trip::<Solve>(&pbnf(&["--json", "solve", f, "q"]));
    }
}
