//! Lie algebras presented dually: a coframe `e¹, …, e^n` together with the
//! differentials `d e^i` (real invariant 2-forms). The differential extends
//! to all invariant forms as a degree-+1 derivation; `d ∘ d = 0` is exactly
//! the Jacobi identity for the underlying Lie algebra and is checked, with a
//! witness on failure, rather than assumed.

use crate::form::{basis_of_degree, binomial, Form};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::fmt;
use thiserror::Error;

/// A real Lie algebra in dual presentation: `dgen[i]` is `d e^{i+1}`, a real
/// 2-form. Generators whose differential is omitted by a caller are closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoframeAlgebra {
    dim: usize,
    dgen: Vec<Form>,
}

/// Construction-time validation failures for [`CoframeAlgebra`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("expected {dim} generator differentials, got {got}")]
    WrongGeneratorCount { dim: usize, got: usize },
    #[error("d e{generator} lives in coframe dimension {got}, expected {dim}")]
    DimensionMismatch { generator: usize, got: usize, dim: usize },
    #[error("d e{generator} is not homogeneous of degree 2")]
    NotDegreeTwo { generator: usize },
    #[error("d e{generator} has a non-real coefficient; structure constants must be real")]
    NotReal { generator: usize },
}

/// Proof that `d² ≠ 0`: the first offending generator (1-based) and the
/// nonzero 3-form `d(d e^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiWitness {
    pub generator: usize,
    pub d_squared: Form,
}

impl fmt::Display for JacobiWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d(d e{}) = {} ≠ 0", self.generator, self.d_squared)
    }
}

impl CoframeAlgebra {
    /// Validate and build. `dgen[i]` is `d e^{i+1}`; each must be a real
    /// 2-form (or zero) in the same coframe dimension. The Jacobi identity
    /// is *not* required here — [`Self::check_integrability_d`] decides it.
    pub fn new(dim: usize, dgen: Vec<Form>) -> Result<Self, AlgebraError> {
        assert!((1..=9).contains(&dim), "coframe dimension out of range");
        if dgen.len() != dim {
            return Err(AlgebraError::WrongGeneratorCount { dim, got: dgen.len() });
        }
        for (i, f) in dgen.iter().enumerate() {
            let generator = i + 1;
            if f.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    generator,
                    got: f.dim(),
                    dim,
                });
            }
            if !f.is_zero() && f.homogeneous_degree() != Some(2) {
                return Err(AlgebraError::NotDegreeTwo { generator });
            }
            if !f.is_real() {
                return Err(AlgebraError::NotReal { generator });
            }
        }
        Ok(CoframeAlgebra { dim, dgen })
    }

    /// The abelian algebra (torus model): every generator is closed.
    pub fn abelian(dim: usize) -> Self {
        CoframeAlgebra::new(dim, vec![Form::zero(dim); dim]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `d e^i` (1-based).
    pub fn d_generator(&self, i: usize) -> &Form {
        assert!(i >= 1 && i <= self.dim, "generator index out of range");
        &self.dgen[i - 1]
    }

    /// The Chevalley–Eilenberg differential, extended to arbitrary
    /// (inhomogeneous) forms as a degree-+1 derivation: on a monomial,
    /// `d(e^{i₁} ∧ … ∧ e^{i_k}) = Σ_j (−1)^{j−1} e^{i₁} ∧ … ∧ d e^{i_j} ∧ … ∧ e^{i_k}`.
    pub fn differential(&self, a: &Form) -> Form {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let mut out = Form::zero(self.dim);
        for (idx, c) in a.terms() {
            let gens: Vec<usize> = idx.generators().collect();
            for (j, &g) in gens.iter().enumerate() {
                let dg = &self.dgen[g - 1];
                if dg.is_zero() {
                    continue;
                }
                let left = Form::monomial(self.dim, &gens[..j], Scalar::one());
                let right = Form::monomial(self.dim, &gens[j + 1..], Scalar::one());
                let sign = if j % 2 == 0 { c.clone() } else { -c };
                out = &out + &left.wedge(dg).wedge(&right).scale(&sign);
            }
        }
        out
    }

    /// Decide `d² = 0` (the Jacobi identity). Since `d²` is a derivation, it
    /// vanishes identically iff it vanishes on every generator; on failure
    /// the first offending generator and its nonzero `d(d e^i)` are
    /// returned.
    pub fn check_integrability_d(&self) -> Result<(), JacobiWitness> {
        for i in 1..=self.dim {
            let dd = self.differential(&self.differential(&Form::generator(self.dim, i)));
            if !dd.is_zero() {
                return Err(JacobiWitness {
                    generator: i,
                    d_squared: dd,
                });
            }
        }
        Ok(())
    }

    /// The matrix of `d: A^k → A^{k+1}` in the ascending-bitmask bases.
    pub fn d_block(&self, k: usize) -> Matrix {
        if k >= self.dim {
            return Matrix::zeros(0, binomial(self.dim, k));
        }
        let source = basis_of_degree(self.dim, k);
        let columns: Vec<Vec<Scalar>> = source
            .iter()
            .map(|idx| {
                let image = self.differential(&Form::monomial(self.dim, &idx.generators().collect::<Vec<_>>(), Scalar::one()));
                image.coords(k + 1)
            })
            .collect();
        Matrix::from_columns(binomial(self.dim, k + 1), &columns)
    }

    /// Betti numbers of the invariant complex:
    /// `b_k = dim ker(d|_{A^k}) − rank(d|_{A^{k−1}})`.
    ///
    /// These are invariant-complex numbers; for the models in the catalog
    /// they coincide with the Betti numbers of the compact quotient.
    pub fn invariant_betti(&self) -> Result<Vec<usize>, JacobiWitness> {
        self.check_integrability_d()?;
        let mut betti = Vec::with_capacity(self.dim + 1);
        let mut prev_rank = 0usize;
        for k in 0..=self.dim {
            let block = self.d_block(k);
            let rank = block.rank();
            let kernel = binomial(self.dim, k) - rank;
            betti.push(kernel - prev_rank);
            prev_rank = rank;
        }
        Ok(betti)
    }
}
