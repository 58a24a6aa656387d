mod common;

use common::presentation_path;
use lie_gsb::cli::run_command;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("lie-gsb").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const COMMUTATOR: &str = "field Q\nxgens x1 x2\nsrels\n  [x2,x1]\n";

#[test]
fn complete_text_and_machine() {
    let f = presentation_path("cohn2");
    let (code, out, _) = run(&["complete", &f, "--max-x-deg", "2", "--max-y-deg", "4"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("field GF(2)\ncaps max-x-deg=2 max-y-deg=4\nstatus exact rounds=3 discarded=0\n"));
    assert!(out.contains("added (5):\n  y3*y2*y1*x1\n"));
    let (code, out, _) = run(&["complete", &f, "--max-x-deg", "2", "--max-y-deg", "4", "--format", "machine"], "");
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "added.count=5"));
    assert!(out.lines().any(|l| l == "exact=true"));
}

#[test]
fn caps_are_required() {
    let f = presentation_path("cohn2");
    for cmd in ["complete", "irr", "check"] {
        let (code, _, err) = run(&[cmd, &f], "");
        assert_eq!(code, 1, "{cmd}");
        assert!(err.contains("--max-x-deg"));
    }
}

#[test]
fn reads_stdin() {
    let (code, out, _) = run(&["irr", "-", "--max-x-deg", "3", "--max-y-deg", "0"], COMMUTATOR);
    assert_eq!(code, 0);
    assert!(out.contains("irr (2):\n  x1\n  x2\n"));
    let (code, out, _) = run(&["wp", "-", "--elem", "[x2,[x2,x1]]"], COMMUTATOR);
    assert_eq!((code, out.contains("in-ideal true")), (0, true));
    let (_, out, _) = run(&["wp", "-", "--elem", "x1 + x2"], COMMUTATOR);
    assert!(out.contains("in-ideal false"));
}

#[test]
fn parse_errors_exit_one() {
    let (code, out, err) = run(&["complete", "-", "--max-x-deg", "2", "--max-y-deg", "2"], "field GF(4)\n");
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("line 1"));
    let (code, _, err) = run(&["nf", "-", "--elem", "x9"], COMMUTATOR);
    assert_eq!(code, 1);
    assert!(err.contains("x9"));
    let (code, _, _) = run(&["complete", "/nonexistent.gsb", "--max-x-deg", "1", "--max-y-deg", "1"], "");
    assert_eq!(code, 1);
}

#[test]
fn normal_form_and_check() {
    let f = presentation_path("cohn2");
    let (code, out, _) = run(&["nf", &f, "--elem", "y3*x3", "--max-x-deg", "2", "--max-y-deg", "4"], "");
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "y2*x2 + y1*x1"));
    let (code, out, _) = run(&["check", &f, "--max-x-deg", "2", "--max-y-deg", "4"], "");
    assert_eq!(code, 0);
    assert!(out.contains("gsb false"));
    let (_, out, _) = run(&["check", "-", "--max-x-deg", "4", "--max-y-deg", "0"], COMMUTATOR);
    assert!(out.contains("gsb true"));
}

#[test]
fn speciality_verdicts() {
    let (code, out, _) =
        run(&["special", &presentation_path("onerel"), "--max-x-deg", "3", "--max-y-deg", "3"], "");
    assert_eq!(code, 0);
    assert!(out.contains("verdict special-certified"));
    let args = ["special", &presentation_path("cartier"), "--witness", "y2*y1*x12", "--max-x-deg", "2", "--max-y-deg", "4"];
    let (code, out, _) = run(&args, "");
    assert_eq!(code, 0);
    assert!(out.contains("verdict non-special-witnessed"));
    assert!(out.contains("nf-assoc 0"));
}

#[test]
fn envelope_and_embedding() {
    let f = presentation_path("onerel");
    let (code, out, _) = run(&["envelope", &f], "");
    assert_eq!(code, 0);
    assert!(out.contains("x2*x1 - x1*x2 - y1*x1"));
    let (code, out, _) = run(&["embed2", &f], "");
    assert_eq!(code, 0);
    assert!(out.contains("xgens x1 x2 b a\n"));
    // The output is itself a valid presentation.
    let (code, _, _) = run(&["check", "-", "--max-x-deg", "2", "--max-y-deg", "1"], &out);
    assert_eq!(code, 0);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("complete"));
}
