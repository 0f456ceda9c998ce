//! Fuzzes the form-expression parser: arbitrary bytes must either be
//! rejected with a structured error or parse to a form whose printed
//! representation round-trips exactly.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for dim in [2usize, 4, 9] {
        if let Ok(form) = invforms::Form::parse(text, dim) {
            let printed = form.to_string();
            let reparsed = invforms::Form::parse(&printed, dim)
                .expect("a printed form must reparse");
            assert_eq!(reparsed, form, "display/parse must be the identity");
        }
    }
});
