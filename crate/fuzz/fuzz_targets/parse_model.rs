//! Fuzzes the model-file parser: arbitrary bytes must either be rejected
//! with a structured error or produce a model whose canonical export
//! round-trips exactly.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(model) = invforms::model::ModelFile::parse(text) {
        let exported = model.export();
        let reparsed = invforms::model::ModelFile::parse(&exported)
            .expect("the canonical export of a parsed model must reparse");
        assert_eq!(reparsed, model, "export/parse must be the identity");
        assert_eq!(
            reparsed.export(),
            exported,
            "the canonical export must be a fixed point"
        );
    }
});
