//! Degree-graded linear operators on the form algebra, represented as one
//! exact matrix block per source degree.
//!
//! A [`GradedOperator`] sends each homogeneous degree `k` either to a single
//! target degree (one matrix block in the monomial basis) or to zero (no
//! block). This is general enough for every operator in play — `d`, `d^c`,
//! `d^Λ`, the stars (which flip `k ↦ 2m−k`, so no constant shift exists),
//! the Lefschetz pair, and the `J`-action — and keeps adjoints, compositions
//! and identity checks purely mechanical matrix work.
//!
//! Adjoints are conjugate-transposes in the orthonormal monomial basis; that
//! basis is orthonormal for the metric of the triple, so these are *the*
//! metric adjoints.

use crate::form::{basis_of_degree, binomial, Form};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::triple::CompatibleTriple;

/// A linear operator mapping each `A^k` into one target degree (or zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedOperator {
    dim: usize,
    /// `targets[k]` is the target degree for source degree `k`; `None` means
    /// the zero map out of `A^k`.
    targets: Vec<Option<usize>>,
    /// `blocks[k]` has `binomial(dim, targets[k])` rows (0 when `None`) and
    /// `binomial(dim, k)` columns.
    blocks: Vec<Matrix>,
}

/// A counterexample to a claimed operator identity: the first basis monomial
/// on which the two sides disagree.
#[derive(Clone, Debug)]
pub struct IdentityWitness {
    pub degree: usize,
    pub basis_form: Form,
    pub lhs: Form,
    pub rhs: Form,
}

impl std::fmt::Display for IdentityWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "on degree {} at {}: lhs = {}, rhs = {}",
            self.degree, self.basis_form, self.lhs, self.rhs
        )
    }
}

impl GradedOperator {
    /// Build an operator by evaluating `f` on every basis monomial. The
    /// image of each degree-`k` monomial must be homogeneous of degree
    /// `target(k)` (or zero); anything else panics, which catches wrong
    /// degree bookkeeping at construction time.
    pub fn from_fn(
        dim: usize,
        target: impl Fn(usize) -> Option<usize>,
        f: impl Fn(&Form) -> Form,
    ) -> Self {
        let mut targets = Vec::with_capacity(dim + 1);
        let mut blocks = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let t = target(k).filter(|&t| t <= dim);
            let cols: Vec<Vec<Scalar>> = basis_of_degree(dim, k)
                .iter()
                .map(|idx| {
                    let mono = Form::monomial(
                        dim,
                        &idx.generators().collect::<Vec<_>>(),
                        Scalar::one(),
                    );
                    let img = f(&mono);
                    match (t, img.is_zero()) {
                        (_, true) => vec![Scalar::zero(); t.map_or(0, |t| binomial(dim, t))],
                        (Some(t), false) => {
                            assert_eq!(
                                img.homogeneous_degree(),
                                Some(t),
                                "image of a degree-{k} monomial must live in degree {t}"
                            );
                            img.coords(t)
                        }
                        (None, false) => {
                            panic!("operator declared zero on degree {k} but image is {img}")
                        }
                    }
                })
                .collect();
            let rows = t.map_or(0, |t| binomial(dim, t));
            blocks.push(Matrix::from_columns(rows, &cols));
            targets.push(t);
        }
        GradedOperator { dim, targets, blocks }
    }

    /// The operator shifting every degree by `delta` (zero map where the
    /// shift leaves `0..=dim`).
    pub fn shifted(dim: usize, delta: i64, f: impl Fn(&Form) -> Form) -> Self {
        Self::from_fn(
            dim,
            |k| {
                let t = k as i64 + delta;
                (0..=dim as i64).contains(&t).then_some(t as usize)
            },
            f,
        )
    }

    /// The zero operator (every degree maps to zero).
    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_| None, |f| Form::zero(f.dim()))
    }

    /// The identity.
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, Some, Clone::clone)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Target degree for source degree `k` (`None` = zero map).
    pub fn target(&self, k: usize) -> Option<usize> {
        self.targets[k]
    }

    /// Matrix block out of `A^k`.
    pub fn block(&self, k: usize) -> &Matrix {
        &self.blocks[k]
    }

    /// Apply to a (possibly inhomogeneous) form.
    pub fn apply(&self, a: &Form) -> Form {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let mut out = Form::zero(self.dim);
        for k in a.degrees() {
            if let Some(t) = self.targets[k] {
                let img = self.blocks[k].apply(&a.coords(k));
                out = &out + &Form::from_coords(self.dim, t, &img);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedOperator) -> GradedOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let dim = self.dim;
        let mut targets = Vec::with_capacity(dim + 1);
        let mut blocks = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let t = other.targets[k].and_then(|mid| self.targets[mid]);
            let block = match (other.targets[k], t) {
                (Some(mid), Some(_)) => &self.blocks[mid] * &other.blocks[k],
                _ => Matrix::zeros(0, binomial(dim, k)),
            };
            targets.push(t);
            blocks.push(block);
        }
        GradedOperator { dim, targets, blocks }
    }

    /// Sum as linear maps. Blocks with distinct target degrees can only be
    /// summed when at least one of them is zero.
    pub fn add(&self, other: &GradedOperator) -> GradedOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let dim = self.dim;
        let mut targets = Vec::with_capacity(dim + 1);
        let mut blocks = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let (t, block) = match (self.targets[k], other.targets[k]) {
                (a, b) if a == b => {
                    let block = if a.is_some() {
                        &self.blocks[k] + &other.blocks[k]
                    } else {
                        Matrix::zeros(0, binomial(dim, k))
                    };
                    (a, block)
                }
                (a, _) if other.blocks[k].is_zero() => (a, self.blocks[k].clone()),
                (_, b) if self.blocks[k].is_zero() => (b, other.blocks[k].clone()),
                (a, b) => panic!(
                    "cannot add blocks on degree {k}: targets {a:?} and {b:?} with nonzero blocks"
                ),
            };
            targets.push(t);
            blocks.push(block);
        }
        GradedOperator { dim, targets, blocks }
    }

    pub fn scale(&self, c: &Scalar) -> GradedOperator {
        GradedOperator {
            dim: self.dim,
            targets: self.targets.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> GradedOperator {
        self.scale(&-Scalar::one())
    }

    /// `self ∘ other + other ∘ self`.
    pub fn anticommutator(&self, other: &GradedOperator) -> GradedOperator {
        self.compose(other).add(&other.compose(self))
    }

    /// The metric adjoint: each block `A^k → A^t` contributes its conjugate
    /// transpose as the block `A^t → A^k`. Requires the target map to be
    /// injective on degrees with nonzero blocks (true for every operator
    /// here — shifts and degree flips).
    pub fn adjoint(&self) -> GradedOperator {
        let dim = self.dim;
        let mut targets: Vec<Option<usize>> = vec![None; dim + 1];
        let mut blocks: Vec<Matrix> = (0..=dim)
            .map(|k| Matrix::zeros(0, binomial(dim, k)))
            .collect();
        for k in 0..=dim {
            if let Some(t) = self.targets[k] {
                if self.blocks[k].is_zero() && self.targets.iter().flatten().filter(|&&x| x == t).count() > 1 {
                    // A zero block may share its target with another source
                    // degree; skip it rather than fight over the slot.
                    continue;
                }
                assert!(
                    targets[t].is_none(),
                    "adjoint needs an injective target map (degree {t} hit twice)"
                );
                targets[t] = Some(k);
                blocks[t] = self.blocks[k].conj_transpose();
            }
        }
        GradedOperator { dim, targets, blocks }
    }

    /// Check `self = other` as linear maps, returning the first
    /// counterexample monomial on failure. Blocks with different target
    /// degrees agree only if both are zero.
    pub fn verify_identity(&self, other: &GradedOperator) -> Result<(), IdentityWitness> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let dim = self.dim;
        for k in 0..=dim {
            let same_target = self.targets[k] == other.targets[k];
            let basis = basis_of_degree(dim, k);
            for (col, idx) in basis.iter().enumerate() {
                let equal = if same_target {
                    self.blocks[k].col(col) == other.blocks[k].col(col)
                } else {
                    self.blocks[k].col(col).iter().all(Scalar::is_zero)
                        && other.blocks[k].col(col).iter().all(Scalar::is_zero)
                };
                if !equal {
                    let basis_form = Form::monomial(
                        dim,
                        &idx.generators().collect::<Vec<_>>(),
                        Scalar::one(),
                    );
                    return Err(IdentityWitness {
                        degree: k,
                        lhs: self.apply(&basis_form),
                        rhs: other.apply(&basis_form),
                        basis_form,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Every operator induced by a compatible triple, in one bundle.
pub struct Operators {
    pub dim: usize,
    pub m: usize,
    pub d: GradedOperator,
    pub dc: GradedOperator,
    pub d_lambda: GradedOperator,
    pub d_star: GradedOperator,
    pub dc_star: GradedOperator,
    pub d_lambda_star: GradedOperator,
    pub star: GradedOperator,
    pub star_s: GradedOperator,
    pub j: GradedOperator,
    pub j_inv: GradedOperator,
    pub lef_up: GradedOperator,
    pub lef_down: GradedOperator,
}

impl Operators {
    pub fn new(t: &CompatibleTriple) -> Self {
        let dim = t.dim();
        let d = GradedOperator::shifted(dim, 1, |a| t.alg().differential(a));
        let dc = GradedOperator::shifted(dim, 1, |a| t.dc(a));
        let d_lambda = GradedOperator::shifted(dim, -1, |a| t.d_lambda(a));
        let flip = |k: usize| Some(dim - k);
        let star = GradedOperator::from_fn(dim, flip, |a| t.hodge_star(a));
        let star_s = GradedOperator::from_fn(dim, flip, |a| t.symplectic_star(a));
        let j = GradedOperator::from_fn(dim, Some, |a| t.j_act(a));
        let j_inv = GradedOperator::from_fn(dim, Some, |a| t.j_act_inv(a));
        let lef_up = GradedOperator::shifted(dim, 2, |a| t.lefschetz_up(a));
        let lef_down = GradedOperator::shifted(dim, -2, |a| t.lefschetz_down(a));
        Operators {
            dim,
            m: t.m(),
            d_star: d.adjoint(),
            dc_star: dc.adjoint(),
            d_lambda_star: d_lambda.adjoint(),
            d,
            dc,
            d_lambda,
            star,
            star_s,
            j,
            j_inv,
            lef_up,
            lef_down,
        }
    }
}
