//! End-to-end tests of the binary: golden text output, text/JSON agreement,
//! determinism, and the exit-code contract (0 pass, 1 mathematical failure,
//! 2 input error).

use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_invforms"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
        out.status.code().expect("no signal"),
    )
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("invforms-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writable");
    path
}

#[test]
fn harmonic_text_matches_golden_and_is_deterministic() {
    let (first, _, code) = run(&["harmonic", "--model", "hopf", "--family", "d+dc"]);
    assert_eq!(code, 0);
    assert_eq!(first, "model hopf (dim 4)\nh^k(d+dc) = [1, 0, 1, 2, 1]\n");
    let (second, _, _) = run(&["harmonic", "--model", "hopf", "--family", "d+dc"]);
    assert_eq!(first, second, "output must be byte-identical across runs");
}

#[test]
fn harmonic_accepts_unicode_family_labels() {
    let (ascii, _, code) = run(&["harmonic", "--model", "torus", "--family", "d+dL"]);
    assert_eq!(code, 0);
    let (unicode, _, code) = run(&["harmonic", "--model", "torus", "--family", "d+dΛ"]);
    assert_eq!(code, 0);
    // Same family, same table (modulo the label the user typed).
    assert_eq!(ascii, unicode);
    assert!(ascii.contains("[1, 4, 6, 4, 1]"), "{ascii}");
}

#[test]
fn harmonic_json_mirrors_the_text_numbers() {
    let (text, _, _) = run(&["harmonic", "--model", "kodaira", "--family", "all"]);
    let (json_out, _, code) =
        run(&["harmonic", "--model", "kodaira", "--family", "all", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json_out).expect("valid JSON");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["model"], "kodaira");
    let families = v["families"].as_array().expect("families array");
    assert_eq!(families.len(), 11);
    for f in families {
        let label = f["family"].as_str().unwrap();
        let dims: Vec<u64> = f["dims"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d.as_u64().unwrap())
            .collect();
        let rendered = format!(
            "h^k({label:width$}) = {dims:?}",
            width = 4 // widest label among the eleven is four characters
        );
        assert!(
            text.contains(&rendered),
            "text output must carry the same numbers as JSON; missing {rendered:?} in:\n{text}"
        );
    }
}

#[test]
fn harmonic_with_bases_prints_generators() {
    let (out, _, code) = run(&[
        "harmonic", "--model", "torus", "--family", "d+dc", "--degree", "1", "--bases",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("h^1(d+dc) = 4"), "{out}");
    for gen in ["1 e1", "1 e2", "1 e3", "1 e4"] {
        assert!(out.contains(gen), "degree-1 basis must list {gen}:\n{out}");
    }
}

#[test]
fn tables_pass_and_cover_every_catalog_entry() {
    let (first, _, code) = run(&["tables"]);
    assert_eq!(code, 0, "all recomputed cells must match their frozen rows");
    for name in [
        "torus",
        "hyperelliptic",
        "inoue-sm",
        "kodaira",
        "secondary-kodaira",
        "inoue-spm",
        "hopf",
        "kodaira-thurston",
    ] {
        assert!(first.contains(name), "missing {name} in tables output");
    }
    assert!(first.contains("legend:"));
    assert!(!first.contains("MISMATCH"));
    let (second, _, _) = run(&["tables"]);
    assert_eq!(first, second);

    let (json_out, _, code) = run(&["tables", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json_out).expect("valid JSON");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(v["families"][0]["family"], "d+dc");
    assert_eq!(
        v["families"][0]["rows"][0]["dims"],
        serde_json::json!([1, 4, 6, 4, 1])
    );
}

#[test]
fn theorems_kodaira_reports_the_degree_two_decomposition() {
    let (out, _, code) = run(&["theorems", "--model", "kodaira"]);
    assert_eq!(code, 0);
    let line = out
        .lines()
        .find(|l| l.contains("H^2(d+dc) = C(ω+γ₀) ⊕ antiselfdual ⊕ pure-type"))
        .expect("degree-two decomposition verdict present");
    assert!(line.starts_with("pass"), "{line}");
    assert!(line.contains("5 = 1 + 2 + 2"), "{line}");
    assert!(out.contains("n/a"), "inapplicable statements must still be listed");
    assert!(out.contains(" 0 fail"), "{out}");
}

#[test]
fn theorems_hopf_exercises_the_nonclosed_omega_branch() {
    let (out, _, code) = run(&["theorems", "--model", "hopf"]);
    assert_eq!(code, 0);
    let line = out
        .lines()
        .find(|l| l.contains("H^2(d+dL) = Cω ⊕ primitive part"))
        .expect("symplectic degree-two verdict present");
    assert!(line.starts_with("pass"), "{line}");
    assert!(line.contains("0 = 0 + 0"), "{line}");
}

#[test]
fn validate_prints_predicates_with_exit_zero() {
    let (out, _, code) = run(&["validate", "--model", "kt"]);
    assert_eq!(code, 0);
    assert!(out.contains("model kodaira-thurston"));
    assert!(out.contains("almost_kahler=true"));
    assert!(out.contains("invariant Betti [1, 3, 4, 3, 1]"));
    assert!(out.trim_end().ends_with("valid"));

    let (out, _, code) = run(&["validate", "--model", "hopf"]);
    assert_eq!(code, 0);
    assert!(out.contains("integrable=true"));
    assert!(out.contains("almost_kahler=false"));
}

#[test]
fn validate_flags_a_broken_differential_as_mathematical_failure() {
    let path = temp_file(
        "broken-d2.model",
        "[algebra]\ndim = 4\nd e1 = 1 e34\nd e4 = 1 e12\n\n[complex-coframe]\n",
    );
    let (out, _, code) = run(&["validate", "--model", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1, "well-formed file with d² ≠ 0 is a mathematical failure");
    assert!(out.contains("d^2 = 0: FAILED"), "{out}");
    assert!(out.contains("d(d e1)"), "witness must name the generator: {out}");
    assert!(out.trim_end().ends_with("invalid"));
}

#[test]
fn unparseable_files_are_input_errors_with_line_numbers() {
    let path = temp_file(
        "bad-j.model",
        "[algebra]\ndim = 4\n\n[J]\n0 1\n-1 0\n",
    );
    let (_, err, code) = run(&["validate", "--model", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 2);
    assert!(err.contains("line"), "parse errors carry line numbers: {err}");
}

#[test]
fn selector_errors_exit_two() {
    let (_, err, code) = run(&["harmonic", "--model", "torus", "--degree", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("out of range"));

    let (_, err, code) = run(&["harmonic", "--model", "torus", "--family", "dd"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown family"));

    let (_, err, code) = run(&["validate", "--model", "no-such-model"]);
    assert_eq!(code, 2);
    assert!(err.contains("neither a catalog model"));

    let (_, err, code) = run(&["validate", "--model", "hyperelliptic"]);
    assert_eq!(code, 2, "stub entries cannot be computed on");
    assert!(err.contains("reference data only"));
}

#[test]
fn export_emits_canonical_text_that_validates() {
    let path = std::env::temp_dir().join(format!(
        "invforms-cli-test-{}-export.model",
        std::process::id()
    ));
    let (_, _, code) = run(&["export", "--model", "kt", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let exported = std::fs::read_to_string(&path).expect("export written");
    assert!(exported.starts_with("[algebra]\ndim = 4\n"), "{exported}");

    let (out, _, code) = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(code, 0, "exported models must validate: {out}");
    assert!(out.contains("almost_kahler=true"));

    // Exporting the exported file reproduces it byte-for-byte (canonical).
    let (reexported, _, code) = run(&["export", "--model", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(reexported, exported);
}

#[test]
fn diamond_renders_the_three_tables_and_rejects_bad_parity() {
    let (out, _, code) = run(&["diamond", "--b1", "3", "--b-plus", "2", "--b-minus", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("betti: [1, 3, 4, 3, 1]"));
    assert!(out.contains("Hodge diamond (totals [1, 3, 4, 3, 1])"));
    assert!(out.contains("Bott-Chern diamond (totals [1, 2, 5, 4, 1])"));
    assert!(out.contains("Aeppli diamond (totals [1, 4, 5, 2, 1])"));

    let (_, err, code) = run(&["diamond", "--b1", "2", "--b-plus", "2", "--b-minus", "2"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}
