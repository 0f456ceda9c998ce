//! The checked-in fuzz corpus must stay in sync with the code: every model
//! seed parses, the catalog-derived seeds are byte-identical to the current
//! exporter output, and every form seed parses in some supported dimension.

use std::path::PathBuf;

use invforms::catalog;
use invforms::model::ModelFile;
use invforms::Form;

fn corpus_dir(which: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(which)
}

#[test]
fn model_seeds_parse_and_catalog_seeds_match_the_exporter() {
    let dir = corpus_dir("parse_model");
    let mut seen = 0usize;
    for entry in std::fs::read_dir(&dir).expect("parse_model corpus directory exists") {
        let path = entry.expect("readable dir entry").path();
        let text = std::fs::read_to_string(&path).expect("seed is UTF-8");
        ModelFile::parse(&text)
            .unwrap_or_else(|e| panic!("{}: seed must parse: {e}", path.display()));
        seen += 1;
    }
    assert!(seen >= 6, "expected the checked-in model seeds, found {seen}");

    for e in catalog::catalog() {
        let Some(model) = &e.model else { continue };
        let path = dir.join(format!("{}.model", e.name));
        let seed = std::fs::read_to_string(&path)
            .unwrap_or_else(|err| panic!("{}: catalog seed missing: {err}", path.display()));
        assert_eq!(
            seed,
            model.export(),
            "{}: corpus seed must equal the current exporter output",
            e.name
        );
    }
}

#[test]
fn form_seeds_parse_in_a_supported_dimension() {
    let dir = corpus_dir("parse_form");
    let mut seen = 0usize;
    for entry in std::fs::read_dir(&dir).expect("parse_form corpus directory exists") {
        let path = entry.expect("readable dir entry").path();
        let text = std::fs::read_to_string(&path).expect("seed is UTF-8");
        assert!(
            [2usize, 4, 9]
                .iter()
                .any(|&dim| Form::parse(&text, dim).is_ok()),
            "{}: seed must parse in one of the fuzzed dimensions",
            path.display()
        );
        seen += 1;
    }
    assert!(seen >= 6, "expected the checked-in form seeds, found {seen}");
}
