//! Text model files: parsing, validation, and deterministic export.
//!
//! A model file is UTF-8 text made of sections. `#` starts a comment that
//! runs to the end of the line; blank lines are ignored.
//!
//! ```text
//! [algebra]
//! dim = 4
//! d e4 = 1 e12          # omitted generators are closed
//!
//! [J]
//! 0 -1 0 0              # row i = image of e^i, rational entries
//! 1 0 0 0
//! 0 0 0 -1
//! 0 0 1 0
//! ```
//!
//! The `[algebra]` section may instead present the differentials of a
//! `(1,0)`-coframe `f1..fm`, with `~` marking a conjugated factor:
//!
//! ```text
//! [algebra]
//! dim = 4
//! d f2 = 1 f1~1         # d f2 = f1 ∧ conj(f1)
//!
//! [complex-coframe]
//! ```
//!
//! Complex presentations are converted to the real coframe through the
//! pairing `f^j = e^{2j−1} + i e^{2j}` (so `d e^{2j−1}` and `d e^{2j}` are
//! the real and imaginary parts of `d f^j`).
//!
//! Exactly one of `[J]` (an explicit matrix whose row `i` is the image of
//! `e^i`) and `[complex-coframe]` (the standard pairing above) must appear.
//! An optional `[metric]` section is accepted only when it is the identity
//! matrix: the coframe is always orthonormal, and data that needs a different
//! Gram matrix must be pre-orthonormalized by the user (square roots leave
//! the Gaussian rationals).

use crate::algebra::CoframeAlgebra;
use crate::form::{Form, MultiIndex};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::triple::{standard_j, CompatibleTriple, TripleError};
use num_rational::BigRational;
use std::fmt;

/// Where the complex structure of a model comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JSource {
    /// `[J]`: explicit matrix, row `i` = image of `e^i`.
    Explicit(Matrix),
    /// `[complex-coframe]`: the standard pairing `J e^{2j−1} = −e^{2j}`.
    StandardComplexCoframe,
}

/// A parsed and structurally valid model file: the coframe algebra (already
/// converted to the real coframe) plus the declared complex structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    algebra: CoframeAlgebra,
    j_source: JSource,
}

/// A model-file rejection, with a 1-based line number when the problem is
/// localized to one line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelError {
    pub line: Option<usize>,
    pub message: String,
}

impl ModelError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ModelError { line: Some(line), message: message.into() }
    }

    fn global(message: impl Into<String>) -> Self {
        ModelError { line: None, message: message.into() }
    }
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ModelError {}

impl ModelFile {
    /// Wrap an already-built algebra and complex-structure choice (used by
    /// the catalog to export its entries).
    pub fn from_parts(algebra: CoframeAlgebra, j_source: JSource) -> Self {
        ModelFile { algebra, j_source }
    }

    pub fn algebra(&self) -> &CoframeAlgebra {
        &self.algebra
    }

    pub fn j_source(&self) -> &JSource {
        &self.j_source
    }

    /// The complex-structure matrix, resolving `[complex-coframe]` to the
    /// standard pairing.
    pub fn jmat(&self) -> Matrix {
        match &self.j_source {
            JSource::Explicit(m) => m.clone(),
            JSource::StandardComplexCoframe => standard_j(self.algebra.dim()),
        }
    }

    /// Build the compatible triple this model declares.
    pub fn build_triple(&self) -> Result<CompatibleTriple, TripleError> {
        CompatibleTriple::new(self.algebra.clone(), self.jmat())
    }

    /// Parse a model file. Errors carry 1-based line numbers where possible.
    pub fn parse(text: &str) -> Result<ModelFile, ModelError> {
        Parser::new(text).run()
    }

    /// Deterministic canonical export. The output parses back to an equal
    /// `ModelFile`; complex presentations are exported in the real coframe.
    pub fn export(&self) -> String {
        let dim = self.algebra.dim();
        let mut out = String::new();
        out.push_str("[algebra]\n");
        out.push_str(&format!("dim = {dim}\n"));
        for i in 1..=dim {
            let dg = self.algebra.d_generator(i);
            if !dg.is_zero() {
                out.push_str(&format!("d e{i} = {dg}\n"));
            }
        }
        out.push('\n');
        match &self.j_source {
            JSource::StandardComplexCoframe => out.push_str("[complex-coframe]\n"),
            JSource::Explicit(j) => {
                out.push_str("[J]\n");
                for r in 0..dim {
                    let row: Vec<String> =
                        (0..dim).map(|c| j.at(r, c).re().to_string()).collect();
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// The `[algebra]` presentation style, fixed by the first `d`-line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Presentation {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Algebra,
    J,
    ComplexCoframe,
    Metric,
}

struct Parser<'a> {
    text: &'a str,
    dim: Option<usize>,
    presentation: Option<Presentation>,
    // d-lines by generator index (1-based), with the line that declared them.
    real_dgen: Vec<Option<(Form, usize)>>,
    complex_dgen: Vec<Option<(Form, usize)>>,
    saw_algebra: bool,
    j_rows: Option<(Vec<Vec<BigRational>>, usize)>,
    complex_coframe_line: Option<usize>,
    metric_rows: Option<(Vec<Vec<BigRational>>, usize)>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            dim: None,
            presentation: None,
            real_dgen: Vec::new(),
            complex_dgen: Vec::new(),
            saw_algebra: false,
            j_rows: None,
            complex_coframe_line: None,
            metric_rows: None,
        }
    }

    fn run(mut self) -> Result<ModelFile, ModelError> {
        let mut section = Section::None;
        let mut section_line = 0usize;
        let lines: Vec<(usize, &str)> = self
            .text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                let no_comment = match raw.find('#') {
                    Some(p) => &raw[..p],
                    None => raw,
                };
                (i + 1, no_comment.trim())
            })
            .collect();

        for (lineno, line) in lines {
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| ModelError::at(lineno, "unterminated section header"))?
                    .trim();
                section = match name {
                    "algebra" => {
                        if self.saw_algebra {
                            return Err(ModelError::at(lineno, "duplicate [algebra] section"));
                        }
                        self.saw_algebra = true;
                        Section::Algebra
                    }
                    "J" => {
                        if self.j_rows.is_some() {
                            return Err(ModelError::at(lineno, "duplicate [J] section"));
                        }
                        self.j_rows = Some((Vec::new(), lineno));
                        Section::J
                    }
                    "complex-coframe" => {
                        if self.complex_coframe_line.is_some() {
                            return Err(ModelError::at(
                                lineno,
                                "duplicate [complex-coframe] section",
                            ));
                        }
                        self.complex_coframe_line = Some(lineno);
                        Section::ComplexCoframe
                    }
                    "metric" => {
                        if self.metric_rows.is_some() {
                            return Err(ModelError::at(lineno, "duplicate [metric] section"));
                        }
                        self.metric_rows = Some((Vec::new(), lineno));
                        Section::Metric
                    }
                    other => {
                        return Err(ModelError::at(lineno, format!("unknown section [{other}]")))
                    }
                };
                section_line = lineno;
                continue;
            }
            match section {
                Section::None => {
                    return Err(ModelError::at(
                        lineno,
                        "content before the first section header",
                    ))
                }
                Section::Algebra => self.algebra_line(lineno, line)?,
                Section::J => {
                    let row = parse_rational_row(lineno, line)?;
                    self.j_rows.as_mut().expect("section was opened").0.push(row);
                }
                Section::Metric => {
                    let row = parse_rational_row(lineno, line)?;
                    self.metric_rows.as_mut().expect("section was opened").0.push(row);
                }
                Section::ComplexCoframe => {
                    return Err(ModelError::at(
                        lineno,
                        "[complex-coframe] is a flag section and takes no content",
                    ))
                }
            }
        }
        let _ = section_line;
        self.finish()
    }

    fn algebra_line(&mut self, lineno: usize, line: &str) -> Result<(), ModelError> {
        if let Some(rest) = line.strip_prefix("dim") {
            let rest = rest.trim_start();
            let value = rest
                .strip_prefix('=')
                .ok_or_else(|| ModelError::at(lineno, "expected `dim = <even dimension>`"))?
                .trim();
            let dim: usize = value
                .parse()
                .map_err(|_| ModelError::at(lineno, format!("invalid dimension `{value}`")))?;
            if dim % 2 != 0 || !(2..=8).contains(&dim) {
                return Err(ModelError::at(
                    lineno,
                    format!("dimension must be an even number in 2..=8, got {dim}"),
                ));
            }
            if self.dim.is_some() {
                return Err(ModelError::at(lineno, "duplicate `dim =` line"));
            }
            self.dim = Some(dim);
            self.real_dgen = vec![None; dim];
            self.complex_dgen = vec![None; dim / 2];
            return Ok(());
        }
        if let Some(rest) = line.strip_prefix('d') {
            let dim = self.dim.ok_or_else(|| {
                ModelError::at(lineno, "`dim = …` must come before the first d-line")
            })?;
            let rest = rest.trim_start();
            let (lhs, rhs) = rest
                .split_once('=')
                .ok_or_else(|| ModelError::at(lineno, "expected `d e<i> = <2-form>`"))?;
            let lhs = lhs.trim();
            let rhs = rhs.trim();
            let (kind, idx_text) = match lhs.as_bytes().first() {
                Some(b'e') => (Presentation::Real, &lhs[1..]),
                Some(b'f') => (Presentation::Complex, &lhs[1..]),
                _ => {
                    return Err(ModelError::at(
                        lineno,
                        format!("the differential target must be e<i> or f<j>, got `{lhs}`"),
                    ))
                }
            };
            match (self.presentation, kind) {
                (Some(p), k) if p != k => {
                    return Err(ModelError::at(
                        lineno,
                        "cannot mix real (e) and complex (f) structure equations",
                    ))
                }
                _ => self.presentation = Some(kind),
            }
            let idx: usize = idx_text.parse().map_err(|_| {
                ModelError::at(lineno, format!("invalid generator index `{idx_text}`"))
            })?;
            match kind {
                Presentation::Real => {
                    if !(1..=dim).contains(&idx) {
                        return Err(ModelError::at(
                            lineno,
                            format!("generator e{idx} is out of range 1..={dim}"),
                        ));
                    }
                    let form = Form::parse(rhs, dim)
                        .map_err(|e| ModelError::at(lineno, e.to_string()))?;
                    if !form.is_real() {
                        return Err(ModelError::at(
                            lineno,
                            "differentials of the real coframe must have real coefficients",
                        ));
                    }
                    if self.real_dgen[idx - 1].is_some() {
                        return Err(ModelError::at(lineno, format!("duplicate d-line for e{idx}")));
                    }
                    self.real_dgen[idx - 1] = Some((form, lineno));
                }
                Presentation::Complex => {
                    let m = dim / 2;
                    if !(1..=m).contains(&idx) {
                        return Err(ModelError::at(
                            lineno,
                            format!("generator f{idx} is out of range 1..={m}"),
                        ));
                    }
                    let form = parse_complex_rhs(rhs, dim, lineno)?;
                    if self.complex_dgen[idx - 1].is_some() {
                        return Err(ModelError::at(lineno, format!("duplicate d-line for f{idx}")));
                    }
                    self.complex_dgen[idx - 1] = Some((form, lineno));
                }
            }
            return Ok(());
        }
        Err(ModelError::at(
            lineno,
            format!("unrecognized [algebra] line `{line}`"),
        ))
    }

    fn finish(self) -> Result<ModelFile, ModelError> {
        if !self.saw_algebra {
            return Err(ModelError::global("missing [algebra] section"));
        }
        let dim = self
            .dim
            .ok_or_else(|| ModelError::global("missing `dim = …` in [algebra]"))?;

        // Assemble the real differentials, converting a complex presentation
        // through f^j = e^{2j−1} + i e^{2j}.
        let mut dgen = vec![Form::zero(dim); dim];
        match self.presentation {
            None | Some(Presentation::Real) => {
                for (i, slot) in self.real_dgen.iter().enumerate() {
                    if let Some((form, _)) = slot {
                        dgen[i] = form.clone();
                    }
                }
            }
            Some(Presentation::Complex) => {
                for (j, slot) in self.complex_dgen.iter().enumerate() {
                    if let Some((form, line)) = slot {
                        let re = real_part(form);
                        let im = imaginary_part(form);
                        let _ = line;
                        dgen[2 * j] = re;
                        dgen[2 * j + 1] = im;
                    }
                }
            }
        }
        let algebra =
            CoframeAlgebra::new(dim, dgen).map_err(|e| ModelError::global(e.to_string()))?;

        // Resolve the complex structure: exactly one source.
        let j_source = match (&self.j_rows, self.complex_coframe_line) {
            (Some(_), Some(line)) => {
                return Err(ModelError::at(
                    line,
                    "both [J] and [complex-coframe] given; the model must declare exactly one",
                ))
            }
            (None, None) => {
                return Err(ModelError::global(
                    "the model declares no complex structure: add [J] or [complex-coframe]",
                ))
            }
            (None, Some(_)) => JSource::StandardComplexCoframe,
            (Some((rows, header_line)), None) => {
                JSource::Explicit(rows_to_matrix(rows, dim, *header_line, "[J]")?)
            }
        };

        // A [metric] section is legal only when it is the identity.
        if let Some((rows, header_line)) = &self.metric_rows {
            let g = rows_to_matrix(rows, dim, *header_line, "[metric]")?;
            if g != Matrix::identity(dim) {
                return Err(ModelError::at(
                    *header_line,
                    "the metric must be the identity on the coframe; \
                     pre-orthonormalize the coframe instead of supplying a Gram matrix",
                ));
            }
        }

        Ok(ModelFile { algebra, j_source })
    }
}

fn parse_rational_row(lineno: usize, line: &str) -> Result<Vec<BigRational>, ModelError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<BigRational>().map_err(|_| {
                ModelError::at(lineno, format!("invalid rational entry `{tok}`"))
            })
        })
        .collect()
}

fn rows_to_matrix(
    rows: &[Vec<BigRational>],
    dim: usize,
    header_line: usize,
    what: &str,
) -> Result<Matrix, ModelError> {
    if rows.len() != dim {
        return Err(ModelError::at(
            header_line,
            format!("{what} needs {dim} rows, got {}", rows.len()),
        ));
    }
    for row in rows {
        if row.len() != dim {
            return Err(ModelError::at(
                header_line,
                format!("{what} rows need {dim} entries, got {}", row.len()),
            ));
        }
    }
    Ok(Matrix::from_fn(dim, dim, |r, c| {
        Scalar::from_rational(rows[r][c].clone())
    }))
}

/// Coefficient-wise real part of a form (the monomial basis is real).
fn real_part(a: &Form) -> Form {
    let mut out = Form::zero(a.dim());
    for (idx, c) in a.terms() {
        out.add_term(idx, Scalar::from_rational(c.re().clone()));
    }
    out
}

/// Coefficient-wise imaginary part of a form.
fn imaginary_part(a: &Form) -> Form {
    let mut out = Form::zero(a.dim());
    for (idx, c) in a.terms() {
        out.add_term(idx, Scalar::from_rational(c.im().clone()));
    }
    out
}

/// The `(1,0)`-coframe element `f^j = e^{2j−1} + i e^{2j}` (1-based `j`).
fn f_generator(dim: usize, j: usize) -> Form {
    let mut out = Form::generator(dim, 2 * j - 1);
    out.add_term(
        MultiIndex::from_generators(&[2 * j]).expect("a single generator always merges"),
        Scalar::i(),
    );
    out
}

/// Parse the right-hand side of a complex structure equation: a sum of terms
/// `<coefficient> f<factors>`, each factor an index optionally preceded by
/// `~` for conjugation (`f1~1` is `f1 ∧ conj(f1)`). The coefficient grammar
/// matches the real form syntax; a bare monomial means coefficient 1.
fn parse_complex_rhs(rhs: &str, dim: usize, lineno: usize) -> Result<Form, ModelError> {
    let err = |msg: String| ModelError::at(lineno, msg);
    if rhs.trim() == "0" {
        return Ok(Form::zero(dim));
    }

    // Split into top-level terms on '+' / '-', respecting parentheses.
    let bytes = rhs.as_bytes();
    let mut terms: Vec<(bool, &str)> = Vec::new(); // (negated, chunk)
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut negated = false;
    let mut i = 0usize;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| err("unbalanced ')'".into()))?;
            }
            b'+' | b'-' if depth == 0 => {
                let chunk = rhs[start..i].trim();
                if !chunk.is_empty() {
                    terms.push((negated, chunk));
                    negated = bytes[i] == b'-';
                } else if terms.is_empty() && start == 0 {
                    // Leading sign of the first term.
                    negated = bytes[i] == b'-';
                } else {
                    return Err(err("empty term".into()));
                }
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(err("unbalanced '('".into()));
    }
    let last = rhs[start..].trim();
    if last.is_empty() {
        return Err(err("trailing sign without a term".into()));
    }
    terms.push((negated, last));

    let mut acc = Form::zero(dim);
    for (neg, chunk) in terms {
        // The monomial is the maximal suffix of the chunk shaped f(~?digit)+.
        let cb = chunk.as_bytes();
        let mut pos = cb.len();
        loop {
            // Walk backwards over (~?digit) groups to the introducing 'f'.
            if pos == 0 {
                break;
            }
            if cb[pos - 1] == b'f' {
                pos -= 1;
                break;
            }
            if cb[pos - 1].is_ascii_digit() {
                pos -= 1;
                if pos > 0 && cb[pos - 1] == b'~' {
                    pos -= 1;
                }
                continue;
            }
            return Err(err(format!("term `{chunk}` does not end in an f-monomial")));
        }
        if pos == cb.len() || cb[pos] != b'f' {
            return Err(err(format!("term `{chunk}` has no f-monomial")));
        }
        let monomial_text = &chunk[pos + 1..];
        let mut coeff_text = chunk[..pos].trim();
        if let Some(stripped) = coeff_text.strip_suffix('*') {
            coeff_text = stripped.trim();
        }
        let coeff = if coeff_text.is_empty() {
            Scalar::one()
        } else {
            // A pure coefficient is a degree-0 form in the real syntax.
            let parsed = Form::parse(coeff_text, dim)
                .map_err(|e| err(format!("bad coefficient `{coeff_text}`: {e}")))?;
            if parsed.homogeneous_degree() != Some(0) {
                return Err(err(format!(
                    "`{coeff_text}` is not a scalar coefficient"
                )));
            }
            parsed.coefficient(MultiIndex::EMPTY)
        };

        // Expand the factors into the real coframe.
        let mut monomial = Form::one(dim);
        let mb = monomial_text.as_bytes();
        if mb.is_empty() {
            return Err(err(format!("term `{chunk}` has an empty f-monomial")));
        }
        let m = dim / 2;
        let mut k = 0usize;
        while k < mb.len() {
            let conjugated = mb[k] == b'~';
            if conjugated {
                k += 1;
            }
            if k >= mb.len() || !mb[k].is_ascii_digit() {
                return Err(err(format!(
                    "bad factor in f-monomial `f{monomial_text}`: expected an index"
                )));
            }
            let j = (mb[k] - b'0') as usize;
            if !(1..=m).contains(&j) {
                return Err(err(format!("factor index {j} is out of range 1..={m}")));
            }
            let factor = if conjugated {
                f_generator(dim, j).conjugate()
            } else {
                f_generator(dim, j)
            };
            monomial = monomial.wedge(&factor);
            k += 1;
        }

        let mut term = monomial.scale(&coeff);
        if neg {
            term = -&term;
        }
        acc = &acc + &term;
    }
    if !acc.is_zero() && acc.homogeneous_degree() != Some(2) {
        return Err(err(
            "the right-hand side of a structure equation must be a 2-form".into(),
        ));
    }
    Ok(acc)
}
