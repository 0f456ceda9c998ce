//! The exterior algebra Λ•(ℂ^{2m}) on an orthonormal coframe `e¹, …, e^{2m}`.
//!
//! A [`MultiIndex`] is a bitmask naming a wedge monomial `e^{i₁} ∧ … ∧ e^{i_k}`
//! with strictly increasing indices; a [`Form`] is a finitely supported map
//! from multi-indices to exact [`Scalar`] coefficients. Inhomogeneous forms
//! are first-class: several operators in this crate mix degrees and bidegrees.
//!
//! Basis order everywhere is lexicographic on the bitmask value (ascending),
//! so every matrix and kernel in the crate is deterministic.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Largest coframe dimension the text syntax can name (single-digit
/// generators `e1`..`e9`).
pub const MAX_TEXT_DIM: usize = 9;

/// Binomial coefficient C(n, k); the dimension of Λ^k(ℂ^n).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// A wedge monomial `e^{i₁} ∧ … ∧ e^{i_k}`: generator `i` is present iff bit
/// `i − 1` is set. The empty mask is the degree-0 monomial `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(u64);

impl MultiIndex {
    /// The empty monomial (constant `1`).
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_bits(bits: u64) -> Self {
        MultiIndex(bits)
    }

    /// Build from 1-based generator indices, which must be strictly
    /// increasing.
    pub fn from_generators(gens: &[usize]) -> Option<Self> {
        let mut bits = 0u64;
        let mut prev = 0usize;
        for &g in gens {
            if g == 0 || g > 64 || g <= prev {
                return None;
            }
            bits |= 1 << (g - 1);
            prev = g;
        }
        Some(MultiIndex(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Degree of the monomial.
    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether generator `i` (1-based) appears.
    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 64 && self.0 & (1 << (i - 1)) != 0
    }

    /// Generators in increasing order (1-based).
    pub fn generators(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=64usize).filter(move |i| bits & (1 << (i - 1)) != 0)
    }

    /// Complementary monomial inside dimension `dim`.
    pub fn complement(self, dim: usize) -> MultiIndex {
        let full = if dim == 64 { u64::MAX } else { (1u64 << dim) - 1 };
        MultiIndex(full & !self.0)
    }

    /// Sign and result of `e^self ∧ e^other`, or `None` when the monomials
    /// share a generator. The sign counts the transpositions needed to merge
    /// the two increasing sequences.
    pub fn merge(self, other: MultiIndex) -> Option<(MultiIndex, i32)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let pos = rest.trailing_zeros();
            // Generators of `self` strictly greater than this one must hop
            // over it.
            inversions += (self.0 >> (pos + 1)).count_ones();
            rest &= rest - 1;
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((MultiIndex(self.0 | other.0), sign))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for g in self.generators() {
            debug_assert!(g <= MAX_TEXT_DIM, "text syntax needs single-digit generators");
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// All degree-`k` multi-indices in dimension `dim`, ascending by bitmask.
pub fn basis_of_degree(dim: usize, k: usize) -> Vec<MultiIndex> {
    assert!(dim <= 63, "dimension out of range");
    (0u64..(1u64 << dim))
        .filter(|b| b.count_ones() as usize == k)
        .map(MultiIndex)
        .collect()
}

/// Errors from [`Form`] operations with contractual range checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("degree {degree} out of range 0..={dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
}

/// A complex-valued invariant form: an exact linear combination of wedge
/// monomials in a fixed coframe dimension. Zero coefficients are never
/// stored, so structural equality is termwise equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl Form {
    /// The zero form.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1 && dim <= 63, "dimension out of range");
        Form {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The constant form `c`.
    pub fn constant(dim: usize, c: Scalar) -> Self {
        let mut f = Form::zero(dim);
        f.add_term(MultiIndex::EMPTY, c);
        f
    }

    /// The constant form `1`.
    pub fn one(dim: usize) -> Self {
        Form::constant(dim, Scalar::one())
    }

    /// The coframe generator `e^i` (1-based).
    ///
    /// # Panics
    /// Panics when `i` is out of `1..=dim`; generator indices are fixed by
    /// the model, so a bad one is a bug.
    pub fn generator(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= dim, "generator e{i} out of range 1..={dim}");
        let mut f = Form::zero(dim);
        f.add_term(MultiIndex::from_generators(&[i]).unwrap(), Scalar::one());
        f
    }

    /// The monomial `c · e^{gens}` with strictly increasing generators.
    pub fn monomial(dim: usize, gens: &[usize], c: Scalar) -> Self {
        let idx = MultiIndex::from_generators(gens).expect("strictly increasing generators");
        assert!(gens.iter().all(|&g| g <= dim), "generator out of range");
        let mut f = Form::zero(dim);
        f.add_term(idx, c);
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Accumulate `c` onto the monomial `idx`, dropping the entry if the sum
    /// vanishes.
    pub fn add_term(&mut self, idx: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(idx).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, idx: MultiIndex) -> Scalar {
        self.terms.get(&idx).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Iterate terms in ascending bitmask order.
    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &Scalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    /// Wedge product.
    ///
    /// # Panics
    /// Panics when the operand dimensions differ.
    pub fn wedge(&self, other: &Form) -> Form {
        assert_eq!(self.dim, other.dim, "dimension mismatch in wedge");
        let mut out = Form::zero(self.dim);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                if let Some((idx, sign)) = ia.merge(*ib) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(idx, c);
                }
            }
        }
        out
    }

    /// The degree-`k` graded piece. Errs when `k > dim`.
    pub fn grade_project(&self, k: usize) -> Result<Form, FormError> {
        if k > self.dim {
            return Err(FormError::DegreeOutOfRange {
                degree: k,
                dim: self.dim,
            });
        }
        let mut out = Form::zero(self.dim);
        for (idx, c) in &self.terms {
            if idx.degree() == k {
                out.add_term(*idx, c.clone());
            }
        }
        Ok(out)
    }

    /// Complex conjugation: conjugates coefficients, fixes the (real)
    /// generators. A conjugate-linear involution.
    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero(self.dim);
        for (idx, c) in &self.terms {
            out.add_term(*idx, c.conj());
        }
        out
    }

    /// True iff every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    /// `Some(k)` when the form is nonzero and concentrated in degree `k`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for idx in self.terms.keys() {
            match deg {
                None => deg = Some(idx.degree()),
                Some(d) if d != idx.degree() => return None,
                _ => {}
            }
        }
        deg
    }

    /// Degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|i| i.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Coordinates of the degree-`k` piece in the ascending-bitmask basis of
    /// Λ^k.
    pub fn coords(&self, k: usize) -> Vec<Scalar> {
        basis_of_degree(self.dim, k)
            .into_iter()
            .map(|idx| self.coefficient(idx))
            .collect()
    }

    /// Rebuild a degree-`k` form from coordinates in the ascending-bitmask
    /// basis.
    pub fn from_coords(dim: usize, k: usize, coords: &[Scalar]) -> Form {
        let basis = basis_of_degree(dim, k);
        assert_eq!(coords.len(), basis.len(), "coordinate length mismatch");
        let mut f = Form::zero(dim);
        for (idx, c) in basis.into_iter().zip(coords) {
            f.add_term(idx, c.clone());
        }
        f
    }

    /// Hermitian inner product `⟨a, b⟩ = Σ_I a_I · conj(b_I)` in which the
    /// wedge monomials are orthonormal.
    pub fn inner(&self, other: &Form) -> Scalar {
        assert_eq!(self.dim, other.dim, "dimension mismatch in inner product");
        let mut acc = Scalar::zero();
        for (idx, c) in &self.terms {
            let oc = other.coefficient(*idx);
            acc += &(c * &oc.conj());
        }
        acc
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Scalar) -> Form {
        let mut out = Form::zero(self.dim);
        for (idx, coeff) in &self.terms {
            out.add_term(*idx, coeff * c);
        }
        out
    }

    /// Parse the canonical text syntax (see the [`fmt::Display`] impl) in a
    /// given coframe dimension. The parser is permissive — coefficients of 1
    /// may be omitted, `-` may join terms, `*` may separate a coefficient
    /// from its monomial — but what [`fmt::Display`] emits always parses
    /// back bit-exactly.
    pub fn parse(input: &str, dim: usize) -> Result<Form, ParseFormError> {
        assert!(dim >= 1 && dim <= MAX_TEXT_DIM, "dimension out of range for text syntax");
        Parser {
            bytes: input.as_bytes(),
            pos: 0,
            dim,
        }
        .parse_form()
    }
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in sum");
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(*idx, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in difference");
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.add_term(*idx, -c);
        }
        out
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        let mut out = Form::zero(self.dim);
        for (idx, c) in &self.terms {
            out.add_term(*idx, -c);
        }
        out
    }
}

impl std::ops::Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl std::ops::Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

impl std::ops::Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

/// Canonical serialization: terms ascending by bitmask, joined by ` + `,
/// each as `{coefficient} {monomial}` with the coefficient always printed
/// (`1 e12 + -2 e34`), degree-0 terms as the bare coefficient, and the zero
/// form as `0`. Round-trips through [`Form::parse`] bit-exactly.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if idx.bits() == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} {idx}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error from [`Form::parse`], with a byte offset into the input.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseFormError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseFormError> {
        Err(ParseFormError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.bump();
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn parse_form(mut self) -> Result<Form, ParseFormError> {
        let mut acc = Form::zero(self.dim);
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            let _ = self.eat(b'+');
        }
        loop {
            self.skip_ws();
            let (idx, c) = self.parse_term()?;
            acc.add_term(idx, if negate { -c } else { c });
            self.skip_ws();
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return self.err("unexpected trailing input");
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<(MultiIndex, Scalar), ParseFormError> {
        let c = match self.peek() {
            Some(b'e') => Scalar::one(),
            Some(b'i') => {
                self.bump();
                Scalar::i()
            }
            Some(b'(') => self.parse_paren_scalar()?,
            Some(b) if b == b'+' || b == b'-' || b.is_ascii_digit() => {
                let r = self.parse_rational()?;
                self.skip_ws();
                if self.eat(b'i') {
                    Scalar::from_parts(BigRational::zero(), r)
                } else {
                    Scalar::from_rational(r)
                }
            }
            _ => return self.err("expected a coefficient or monomial"),
        };
        self.skip_ws();
        let _ = self.eat(b'*');
        self.skip_ws();
        let idx = if self.peek() == Some(b'e') {
            self.parse_monomial()?
        } else {
            MultiIndex::EMPTY
        };
        Ok((idx, c))
    }

    fn parse_paren_scalar(&mut self) -> Result<Scalar, ParseFormError> {
        if !self.eat(b'(') {
            return self.err("expected '('");
        }
        self.skip_ws();
        let re = self.parse_rational()?;
        self.skip_ws();
        let im_negate = if self.eat(b'+') {
            false
        } else if self.eat(b'-') {
            true
        } else {
            return self.err("expected '+' or '-' inside complex coefficient");
        };
        self.skip_ws();
        let mut im = self.parse_rational()?;
        if im_negate {
            im = -im;
        }
        self.skip_ws();
        if !self.eat(b'i') {
            return self.err("expected 'i' inside complex coefficient");
        }
        self.skip_ws();
        if !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(Scalar::from_parts(re, im))
    }

    fn parse_rational(&mut self) -> Result<BigRational, ParseFormError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            let _ = self.eat(b'+');
            false
        };
        self.skip_ws();
        let numer = self.parse_uint()?;
        let denom = if self.eat(b'/') {
            let start = self.pos;
            let d = self.parse_uint()?;
            if d.is_zero() {
                self.pos = start;
                return self.err("zero denominator");
            }
            d
        } else {
            BigInt::one()
        };
        let r = BigRational::new(numer, denom);
        Ok(if negate { -r } else { r })
    }

    fn parse_uint(&mut self) -> Result<BigInt, ParseFormError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn parse_monomial(&mut self) -> Result<MultiIndex, ParseFormError> {
        if !self.eat(b'e') {
            return self.err("expected 'e'");
        }
        let mut gens = Vec::new();
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            let g = (b - b'0') as usize;
            if g == 0 || g > self.dim {
                return self.err(format!("generator e{g} out of range 1..={}", self.dim));
            }
            if gens.last().is_some_and(|&last| g <= last) {
                return self.err("generators must be strictly increasing");
            }
            gens.push(g);
            self.bump();
        }
        if gens.is_empty() {
            return self.err("expected generator digits after 'e'");
        }
        Ok(MultiIndex::from_generators(&gens).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dim: usize, gens: &[usize]) -> Form {
        Form::monomial(dim, gens, Scalar::one())
    }

    #[test]
    fn wedge_antisymmetry_on_generators() {
        // e² ∧ e¹ = −e^{12}
        let lhs = Form::generator(4, 2).wedge(&Form::generator(4, 1));
        assert_eq!(lhs, Form::monomial(4, &[1, 2], -Scalar::one()));
        // and a generator squares to zero.
        assert!(Form::generator(4, 3).wedge(&Form::generator(4, 3)).is_zero());
    }

    #[test]
    fn wedge_of_conjugate_pair() {
        // (e¹ + i·e²) ∧ (e¹ − i·e²) = −2i·e^{12}
        let phi = &Form::generator(4, 1) + &Form::generator(4, 2).scale(&Scalar::i());
        let lhs = phi.wedge(&phi.conjugate());
        let expected = Form::monomial(4, &[1, 2], -(Scalar::from_int(2) * Scalar::i()));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn wedge_merge_signs_match_permutation_parity() {
        // e^{13} ∧ e^{24} = e¹∧e³∧e²∧e⁴ = −e^{1234}
        let lhs = e(4, &[1, 3]).wedge(&e(4, &[2, 4]));
        assert_eq!(lhs, Form::monomial(4, &[1, 2, 3, 4], -Scalar::one()));
        // e^{34} ∧ e^{12} = +e^{1234} (two generators hop over two).
        let lhs = e(4, &[3, 4]).wedge(&e(4, &[1, 2]));
        assert_eq!(lhs, Form::monomial(4, &[1, 2, 3, 4], Scalar::one()));
    }

    #[test]
    fn grade_projection_splits_and_bounds() {
        let a = &e(4, &[1, 2]) + &Form::generator(4, 3).scale(&Scalar::ratio(5, 3));
        let mut total = Form::zero(4);
        for k in 0..=4 {
            total = &total + &a.grade_project(k).unwrap();
        }
        assert_eq!(total, a);
        assert_eq!(
            a.grade_project(7),
            Err(FormError::DegreeOutOfRange { degree: 7, dim: 4 })
        );
    }

    #[test]
    fn conjugation_is_conjugate_linear_involution() {
        let a = Form::monomial(4, &[1, 2], &Scalar::one() + &Scalar::i());
        assert_eq!(
            a.conjugate(),
            Form::monomial(4, &[1, 2], &Scalar::one() - &Scalar::i())
        );
        assert_eq!(a.conjugate().conjugate(), a);
        let real = &e(4, &[1, 3]) - &e(4, &[2, 4]).scale(&Scalar::ratio(7, 2));
        assert_eq!(real.conjugate(), real);
        assert!(real.is_real());
    }

    #[test]
    fn basis_size_is_binomial() {
        for dim in [2usize, 4, 6] {
            for k in 0..=dim {
                assert_eq!(basis_of_degree(dim, k).len(), binomial(dim, k));
            }
        }
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(4, 5), 0);
    }

    #[test]
    fn canonical_display() {
        let f = &e(4, &[1, 2]) + &e(4, &[3, 4]).scale(&Scalar::from_int(-2));
        assert_eq!(f.to_string(), "1 e12 + -2 e34");
        assert_eq!(Form::zero(4).to_string(), "0");
        assert_eq!(Form::constant(4, Scalar::ratio(3, 4)).to_string(), "3/4");
        let g = Form::monomial(4, &[1], &Scalar::ratio(1, 2) * &Scalar::i());
        assert_eq!(g.to_string(), "1/2 i e1");
        let h = Form::monomial(4, &[2, 3], &Scalar::one() + &Scalar::i());
        assert_eq!(h.to_string(), "(1 + 1 i) e23");
    }

    #[test]
    fn parse_round_trips_are_bit_exact() {
        let samples = [
            "1 e12 + -2 e34",
            "0",
            "3/4",
            "1/2 i e1",
            "(1 + -3/4 i) e23 + 5 e1234",
            "-7/3 i",
            "1 e1 + 1 i e2",
        ];
        for s in samples {
            let f = Form::parse(s, 4).unwrap();
            assert_eq!(f.to_string(), s, "display(parse({s}))");
            assert_eq!(Form::parse(&f.to_string(), 4).unwrap(), f);
        }
    }

    #[test]
    fn parser_accepts_relaxed_input() {
        assert_eq!(Form::parse("e12", 4).unwrap(), e(4, &[1, 2]));
        assert_eq!(
            Form::parse("e12 - e34", 4).unwrap(),
            &e(4, &[1, 2]) - &e(4, &[3, 4])
        );
        assert_eq!(
            Form::parse("2 * e12", 4).unwrap(),
            e(4, &[1, 2]).scale(&Scalar::from_int(2))
        );
        assert_eq!(
            Form::parse("-e1", 4).unwrap(),
            Form::generator(4, 1).scale(&Scalar::from_int(-1))
        );
        assert_eq!(
            Form::parse("i e12", 4).unwrap(),
            e(4, &[1, 2]).scale(&Scalar::i())
        );
        // Coefficients that cancel leave the zero form.
        assert_eq!(Form::parse("1 e12 - 1 e12", 4).unwrap(), Form::zero(4));
    }

    #[test]
    fn parser_rejects_malformed_input() {
        for bad in [
            "",
            "e0",
            "e21",
            "e15", // generator 5 in dimension 4
            "e12 e34",
            "1/0 e1",
            "(1 + 1) e1",
            "blah",
            "1 +",
        ] {
            assert!(Form::parse(bad, 4).is_err(), "should reject {bad:?}");
        }
    }

    #[test]
    fn multiindex_helpers() {
        let idx = MultiIndex::from_generators(&[1, 3, 4]).unwrap();
        assert_eq!(idx.degree(), 3);
        assert!(idx.contains(3) && !idx.contains(2));
        assert_eq!(idx.complement(4), MultiIndex::from_generators(&[2]).unwrap());
        assert_eq!(idx.to_string(), "e134");
        assert!(MultiIndex::from_generators(&[2, 2]).is_none());
        assert!(MultiIndex::from_generators(&[3, 1]).is_none());
    }
}
