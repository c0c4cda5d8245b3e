use std::process::Command;

use hyperpoly::assoc::{AssocCertificate, AssocKind, OnePlusOneCertificate, PointwiseReport, ScanReport};
use hyperpoly::carriers::{AxiomReport, DistributivityReport};
use hyperpoly::cli::{run, BoxReport, EqualReport, EvalReport, MemberReport, MultReport, Outcome, QuotientReport, ReproReport};
use hyperpoly::polyalg::{EqualityVerdict, Verdict};
use hyperpoly::tropical::{BoxEquivalenceCertificate, Reducibility, ReducibilityCertificate, RootMultiset};
use serde::de::DeserializeOwned;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("hyperpoly").chain(args.iter().copied()))
}

/// Runs in structured mode and parses stdout back into `T`.
fn structured<T: DeserializeOwned>(args: &[&str]) -> (i32, T) {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let out = cli(&full);
    let value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}{}", out.stdout, out.stderr));
    (out.code, value)
}

#[test]
fn tropical_evaluation() {
    let out = cli(&["--hf", "T", "eval", "--poly", "1T^3+(-2)", "--at", "-1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("[-inf,-2]"), "{}", out.stdout);
    let (code, rep): (_, EvalReport) = structured(&["--hf", "T", "eval", "--poly", "1T^3+(-2)", "--at", "0"]);
    assert_eq!(code, 0);
    assert_eq!(rep.value, "{1}");
    assert!(!rep.is_root);
}

#[test]
fn products_and_sums() {
    let (code, rep): (_, BoxReport) = structured(&["--hf", "S", "prod", "--p", "T+1", "--q", "T-1"]);
    assert_eq!(code, 0);
    assert_eq!(rep.coefficients.len(), 3);
    assert!(rep.members.unwrap().contains(&"T^2-1".to_string()));
    let (code, rep): (_, BoxReport) = structured(&["--hf", "S", "sum", "--p", "T-1", "--q", "T+1"]);
    assert_eq!(code, 0);
    assert_eq!(rep.members.unwrap().len(), 3);
}

#[test]
fn membership_exit_codes() {
    let (code, rep): (_, MemberReport) =
        structured(&["--hf", "V", "member", "--poly", "T^3+2T^2+11T+6", "--expr", "(T+2)*((T+1)*(T+3))"]);
    assert_eq!((code, rep.verdict), (0, Verdict::Yes));
    let (code, rep): (_, MemberReport) =
        structured(&["--hf", "V", "member", "--poly", "T^3+2T^2+11T+6", "--expr", "(T+1)*((T+2)*(T+3))"]);
    assert_eq!((code, rep.verdict), (1, Verdict::No));
    assert!(rep.reasons.iter().any(|r| r.contains("[4,6]")), "{:?}", rep.reasons);
}

#[test]
fn bracketings_compare() {
    let (code, rep): (_, EqualReport) =
        structured(&["--hf", "K", "equal", "--left", "(T+1)*((T^2+1)*(T+1))", "--right", "(T^2+1)*((T+1)*(T+1))"]);
    assert_eq!((code, rep.verdict), (1, EqualityVerdict::Unequal));
    assert!(rep.witness.is_some());
    let (code, rep): (_, EqualReport) = structured(&["--hf", "GF(3)", "equal", "--left", "(T+1)*(T+2)", "--right", "(T+2)*(T+1)"]);
    assert_eq!((code, rep.verdict), (0, EqualityVerdict::Equal));
}

#[test]
fn quotients_and_multiplicities() {
    let (code, rep): (_, QuotientReport) = structured(&["--hf", "T", "quotients", "--poly", "0T^2+2", "--at", "1"]);
    assert_eq!(code, 0);
    assert!(rep.is_root);
    assert_eq!(rep.quotients, vec!["0T+1".to_string()]);
    let (code, rep): (_, QuotientReport) = structured(&[
        "--hf",
        "P",
        "quotients",
        "--poly",
        "T^3-e^{i pi/8}T^2+e^{i 5pi/24}T-e^{i pi/3}",
        "--at",
        "ph(1/6)",
    ]);
    assert_eq!(code, 0);
    assert!(rep.is_root);
    let (code, rep): (_, MultReport) = structured(&["--hf", "S", "mult", "--poly", "T^3-T", "--at", "0"]);
    assert_eq!((code, rep.multiplicity), (0, 1));
    let (code, rep): (_, MultReport) = structured(&["--hf", "V", "mult-set", "--poly", "T^2+3T+1", "--region", "[1,inf)"]);
    assert_eq!((code, rep.multiplicity, rep.exact), (0, 1, true));
}

#[test]
fn associativity_commands() {
    let (code, rep): (_, AssocCertificate) = structured(&["--hf", "S", "assoc-check", "--p", "T+1", "--q", "T-1", "--r", "T-1"]);
    assert_eq!((code, rep.kind), (1, AssocKind::Counterexample));
    let (code, rep): (_, Vec<AssocCertificate>) =
        structured(&["--hf", "GF(2)", "assoc-check", "--p", "T+1", "--q", "T", "--r", "T+1", "--all"]);
    assert_eq!(code, 0);
    assert!(rep.iter().all(|c| c.kind == AssocKind::AssocHolds));
    let (code, rep): (_, ScanReport) = structured(&["--hf", "K", "assoc-scan", "--max-deg", "2"]);
    assert_eq!(code, 0);
    assert!(!rep.counterexamples.is_empty());
    let (code, rep): (_, OnePlusOneCertificate) = structured(&["--hf", "T", "one-one"]);
    assert_eq!(code, 0);
    assert!(!rep.singleton);
    assert!(rep.replay(&hyperpoly::carriers::Hyperfield::tropical()).unwrap());
    let (code, rep): (_, PointwiseReport) = structured(&["--hf", "S", "pointwise", "--p", "T+1", "--q", "T-1", "--r", "T-1"]);
    assert_eq!(code, 0);
    assert!(rep.all_equal);
}

#[test]
fn axiom_commands() {
    let (code, rep): (_, AxiomReport) = structured(&["--hf", "W(Z3,0)", "axioms"]);
    assert_eq!(code, 0);
    assert!(rep.exhaustive && rep.all_hold());
    let (code, rep): (_, DistributivityReport) = structured(&["--hf", "W", "ddist"]);
    assert_eq!(code, 1);
    assert!(rep.counterexample.is_some());
    let (code, rep): (_, DistributivityReport) = structured(&["--hf", "S", "ddist"]);
    assert_eq!(code, 0);
    assert!(rep.holds);
}

#[test]
fn tropical_commands() {
    let (code, rep): (_, RootMultiset) = structured(&["trop-roots", "--poly", "0T^2+1T+(-5)"]);
    assert_eq!(code, 0);
    assert_eq!(rep.roots, vec!["1".to_string(), "-6".to_string()]);
    let (code, rep): (_, Vec<String>) = structured(&["trop-box", "--roots", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(rep, vec!["{0}", "[-inf,0]", "{0}"]);
    let (code, rep): (_, BoxEquivalenceCertificate) = structured(&["trop-box", "--roots", "3,0,0", "--check"]);
    assert_eq!(code, 0);
    assert!(rep.equal);
    let (code, rep): (_, ReducibilityCertificate) = structured(&["--hf", "T", "reducible", "--poly", "0T^2+2"]);
    assert_eq!((code, rep.verdict), (0, Reducibility::Irreducible));
    let (code, rep): (_, ReducibilityCertificate) = structured(&["--hf", "T", "reducible", "--poly", "0T^5+1", "--bound", "4"]);
    assert_eq!((code, rep.verdict), (3, Reducibility::Undecided));
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(cli(&["--hf", "Q", "eval", "--poly", "T", "--at", "1"]).code, 2);
    assert_eq!(cli(&["--hf", "S", "eval", "--poly", "T+2", "--at", "1"]).code, 2);
    assert_eq!(cli(&["--hf", "S", "member", "--poly", "T+1", "--expr", "(T+1"]).code, 2);
    assert_eq!(cli(&["no-such-command"]).code, 2);
    assert_eq!(cli(&["--hf", "T", "trop-roots", "--poly", "1T+1"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn single_criterion_repro() {
    let (code, rep): (_, ReproReport) = structured(&["repro", "--criterion", "3"]);
    assert_eq!(code, 0);
    assert!(rep.all_passed && rep.criteria.len() == 1);
}

fn binary() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hyperpoly"));
    c.env_remove("HYPERPOLY_MAX_DEGREE");
    c
}

#[test]
fn repro_all_passes_through_the_binary() {
    let out = binary().args(["repro", "--all"]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 14, "{text}");
}

#[test]
fn degree_cap_comes_from_the_environment() {
    let args = ["--hf", "S", "prod", "--p", "T^2+1", "--q", "T^2+1"];
    assert_eq!(binary().args(args).output().unwrap().status.code(), Some(0));
    assert_eq!(binary().env("HYPERPOLY_MAX_DEGREE", "3").args(args).output().unwrap().status.code(), Some(2));
    assert_eq!(binary().env("HYPERPOLY_MAX_DEGREE", "many").args(args).output().unwrap().status.code(), Some(2));
}
