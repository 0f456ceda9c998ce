//! The compatible triple `(J, ω, g)` on a coframe algebra, and everything it
//! induces: the bigrading of forms, the `J`-action, the Hodge and symplectic
//! stars, the Lefschetz pair `L`/`Λ` with primitive decompositions, the Weil
//! identity, and the structure predicates (integrable, almost Kähler, …).
//!
//! # The J-action convention
//!
//! `jmat` row `i` is the image of the coframe generator: `J e^i = Σ_j
//! jmat[i][j] e^j`. The action extends to all forms multiplicatively,
//! `J(e^{i₁} ∧ … ∧ e^{i_k}) = J e^{i₁} ∧ … ∧ J e^{i_k}`, which multiplies an
//! `(p,q)`-form by `i^{p−q}` — **not** `i^{q−p}`. Every sign in `d^c`, the
//! symplectic star, and the Weil identity depends on this choice; the Weil
//! check below fails by construction if the inverse action is substituted.
//!
//! The metric `g` is the one making the coframe orthonormal, so `ω` is not
//! free data: compatibility `ω(X, Y) = g(JX, Y)` forces
//! `ω = Σ_{i<j} jmat[j][i] · e^{ij}`, and the constructor derives it.

use crate::algebra::{CoframeAlgebra, JacobiWitness};
use crate::form::{basis_of_degree, binomial, Form, MultiIndex};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;
use thiserror::Error;

/// A bidegree `(p, q)` with `p, q ≤ m`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

impl std::fmt::Display for Bidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Why a `(J, ω, g)` triple could not be built.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("coframe dimension {0} is odd; an almost complex structure needs an even dimension")]
    OddDimension(usize),
    #[error("J matrix must be {dim}x{dim}, got {rows}x{cols}")]
    WrongShape { dim: usize, rows: usize, cols: usize },
    #[error("J matrix has a non-real entry at row {row}, column {col}")]
    NonRealEntry { row: usize, col: usize },
    #[error("J² ≠ −Id (violated at row {row}, column {col})")]
    NotAntiInvolution { row: usize, col: usize },
    #[error("J is not orthogonal for the coframe metric (JᵀJ ≠ Id at row {row}, column {col})")]
    NotOrthogonal { row: usize, col: usize },
    #[error("derived ω is degenerate: ω^m = 0")]
    DegenerateOmega,
    #[error("the structure constants do not satisfy the Jacobi identity: {0}")]
    JacobiViolation(JacobiWitness),
}

/// Structure predicates of a triple, all decided exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StructurePredicates {
    /// `J` is integrable: `d` maps (1,0)-forms into `A^{2,0} ⊕ A^{1,1}`.
    pub integrable: bool,
    /// `dω = 0`.
    pub almost_kahler: bool,
    /// Integrable and `dω = 0`.
    pub kahler: bool,
    /// `d d^c ω^{m−1} = 0` and `d^c d ω^{m−1} = 0`.
    pub gauduchon: bool,
    /// `d ω^{m−1} = 0`.
    pub balanced: bool,
}

/// Outcome of the Weil-identity sweep
/// `* L^r ψ = (−1)^{k(k+1)/2} · (r!/(m−k−r)!) · L^{m−k−r} J ψ`
/// over every primitive basis form `ψ ∈ P^k` and every admissible `r`.
#[derive(Clone, Debug)]
pub struct WeilReport {
    /// `(k, r, passed)` per checked pair, in lexicographic order.
    pub cases: Vec<(usize, usize, bool)>,
}

impl WeilReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|&(_, _, ok)| ok)
    }
}

struct BigradeTable {
    /// Bidegree per column, groups ordered by descending `p`.
    col_labels: Vec<Bidegree>,
    /// The basis forms `ψ^I ∧ ψ̄^K`, aligned with the columns.
    col_forms: Vec<Form>,
    /// Inverse change of basis: monomial coordinates → `ψ^I ∧ ψ̄^K`
    /// coordinates.
    t_inv: Matrix,
}

/// A compatible triple `(J, ω, g)` over a validated coframe algebra, with
/// `g` the orthonormal coframe metric and `ω` derived from `J`.
pub struct CompatibleTriple {
    alg: CoframeAlgebra,
    jmat: Matrix,
    omega: Form,
    orientation: i32,
    m: usize,
    psi: Vec<Form>,
    tables: Vec<BigradeTable>,
}

impl CompatibleTriple {
    /// Build and validate a triple. Checks, in order: the Jacobi identity
    /// for the algebra, the shape and realness of `jmat`, `J² = −Id`,
    /// orthogonality, and non-degeneracy of the derived `ω`.
    pub fn new(alg: CoframeAlgebra, jmat: Matrix) -> Result<Self, TripleError> {
        let dim = alg.dim();
        if dim % 2 != 0 {
            return Err(TripleError::OddDimension(dim));
        }
        let m = dim / 2;
        if let Err(w) = alg.check_integrability_d() {
            return Err(TripleError::JacobiViolation(w));
        }
        if jmat.rows() != dim || jmat.cols() != dim {
            return Err(TripleError::WrongShape {
                dim,
                rows: jmat.rows(),
                cols: jmat.cols(),
            });
        }
        for r in 0..dim {
            for c in 0..dim {
                if !jmat.at(r, c).is_real() {
                    return Err(TripleError::NonRealEntry { row: r + 1, col: c + 1 });
                }
            }
        }
        let square = &jmat * &jmat;
        let neg_id = -&Matrix::identity(dim);
        for r in 0..dim {
            for c in 0..dim {
                if square.at(r, c) != neg_id.at(r, c) {
                    return Err(TripleError::NotAntiInvolution { row: r + 1, col: c + 1 });
                }
            }
        }
        let gram = &jmat.conj_transpose() * &jmat;
        let id = Matrix::identity(dim);
        for r in 0..dim {
            for c in 0..dim {
                if gram.at(r, c) != id.at(r, c) {
                    return Err(TripleError::NotOrthogonal { row: r + 1, col: c + 1 });
                }
            }
        }

        // Compatibility ω(X, Y) = g(JX, Y): the coefficient of e^{ij} is the
        // e^j-coefficient of J e^i read against the vector action, i.e.
        // jmat[j][i].
        let mut omega = Form::zero(dim);
        for i in 1..=dim {
            for j in (i + 1)..=dim {
                omega.add_term(
                    MultiIndex::from_generators(&[i, j]).unwrap(),
                    jmat.at(j - 1, i - 1).clone(),
                );
            }
        }

        // Orientation: the sign of ω^m/m! against e^{1…2m}. For an
        // orthogonal J this Pfaffian is exactly ±1.
        let mut omega_m = Form::one(dim);
        for _ in 0..m {
            omega_m = omega_m.wedge(&omega);
        }
        let top = MultiIndex::from_generators(&(1..=dim).collect::<Vec<_>>()).unwrap();
        let pf = omega_m
            .coefficient(top)
            .checked_div(&Scalar::from_rational(factorial(m)))
            .expect("m! is nonzero");
        if pf.is_zero() {
            return Err(TripleError::DegenerateOmega);
        }
        let orientation = if pf == Scalar::one() {
            1
        } else if pf == -Scalar::one() {
            -1
        } else {
            unreachable!("Pfaffian of an orthogonal J must be ±1, got {pf}");
        };

        // The (1,0)-coframe: kernel of (Jᵀ − i·Id) on coefficient vectors,
        // normalized so each ψ^j has leading coefficient 1. For the standard
        // pairing J this yields exactly ψ^j = e^{2j−1} + i·e^{2j}.
        let coeff_action = jmat.conj_transpose();
        let eigen = &coeff_action - &Matrix::identity(dim).scale(&Scalar::i());
        let kernel = eigen.kernel_basis();
        assert_eq!(kernel.len(), m, "the +i eigenspace of J must have dimension m");
        let psi: Vec<Form> = kernel
            .into_iter()
            .map(|coords| {
                let lead = coords
                    .iter()
                    .find(|c| !c.is_zero())
                    .expect("kernel vectors are nonzero")
                    .clone();
                let mut f = Form::zero(dim);
                for (k, c) in coords.iter().enumerate() {
                    f.add_term(
                        MultiIndex::from_generators(&[k + 1]).unwrap(),
                        c / &lead,
                    );
                }
                f
            })
            .collect();

        let mut triple = CompatibleTriple {
            alg,
            jmat,
            omega,
            orientation,
            m,
            psi,
            tables: Vec::new(),
        };
        triple.tables = (0..=dim).map(|k| triple.build_table(k)).collect();
        Ok(triple)
    }

    fn build_table(&self, k: usize) -> BigradeTable {
        let dim = self.dim();
        let m = self.m;
        let mut col_labels = Vec::new();
        let mut col_forms = Vec::new();
        let p_max = k.min(m);
        let p_min = k.saturating_sub(m);
        for p in (p_min..=p_max).rev() {
            let q = k - p;
            for i_mask in basis_of_degree(m, p) {
                for k_mask in basis_of_degree(m, q) {
                    let mut f = Form::one(dim);
                    for j in i_mask.generators() {
                        f = f.wedge(&self.psi[j - 1]);
                    }
                    for j in k_mask.generators() {
                        f = f.wedge(&self.psi[j - 1].conjugate());
                    }
                    col_labels.push(Bidegree { p, q });
                    col_forms.push(f);
                }
            }
        }
        let n = binomial(dim, k);
        assert_eq!(col_forms.len(), n, "bigraded basis must span Λ^k");
        let t = Matrix::from_columns(
            n,
            &col_forms.iter().map(|f| f.coords(k)).collect::<Vec<_>>(),
        );
        let t_inv = t.inverse().expect("the ψ^I ∧ ψ̄^K forms are a basis");
        BigradeTable {
            col_labels,
            col_forms,
            t_inv,
        }
    }

    pub fn alg(&self) -> &CoframeAlgebra {
        &self.alg
    }

    pub fn jmat(&self) -> &Matrix {
        &self.jmat
    }

    /// The derived fundamental form `ω`.
    pub fn omega(&self) -> &Form {
        &self.omega
    }

    /// Sign of `ω^m/m!` against `e^{1…2m}`.
    pub fn orientation(&self) -> i32 {
        self.orientation
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Half the coframe dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The `(1,0)`-coframe `ψ^1, …, ψ^m` (leading coefficient 1).
    pub fn psi(&self) -> &[Form] {
        &self.psi
    }

    /// The oriented volume form `orientation · e^{1…2m} = ω^m/m!`.
    pub fn volume_form(&self) -> Form {
        let dim = self.dim();
        let gens: Vec<usize> = (1..=dim).collect();
        let c = if self.orientation >= 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        Form::monomial(dim, &gens, c)
    }

    /// Decompose into bidegree components; the nonzero components sum back
    /// to the input, and conjugation swaps `(p,q) ↔ (q,p)`.
    pub fn bigrade(&self, a: &Form) -> BTreeMap<Bidegree, Form> {
        assert_eq!(a.dim(), self.dim(), "dimension mismatch");
        let mut out: BTreeMap<Bidegree, Form> = BTreeMap::new();
        for k in a.degrees() {
            let table = &self.tables[k];
            let coords = a.coords(k);
            let x = table.t_inv.apply(&coords);
            for (j, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let entry = out
                    .entry(table.col_labels[j])
                    .or_insert_with(|| Form::zero(self.dim()));
                *entry = &*entry + &table.col_forms[j].scale(c);
            }
        }
        out.retain(|_, f| !f.is_zero());
        out
    }

    /// The `(p,q)`-component of a form.
    pub fn bidegree_projection(&self, a: &Form, p: usize, q: usize) -> Form {
        self.bigrade(a)
            .remove(&Bidegree { p, q })
            .unwrap_or_else(|| Form::zero(self.dim()))
    }

    /// Image of `e^i` under `J`: row `i` of `jmat` read as a 1-form.
    fn j_generator_image(&self, i: usize, inverse: bool) -> Form {
        let mut f = Form::zero(self.dim());
        for j in 1..=self.dim() {
            let c = self.jmat.at(i - 1, j - 1).clone();
            f.add_term(
                MultiIndex::from_generators(&[j]).unwrap(),
                if inverse { -c } else { c },
            );
        }
        f
    }

    fn j_act_impl(&self, a: &Form, inverse: bool) -> Form {
        let mut out = Form::zero(self.dim());
        for (idx, c) in a.terms() {
            let mut img = Form::constant(self.dim(), c.clone());
            for g in idx.generators() {
                img = img.wedge(&self.j_generator_image(g, inverse));
            }
            out = &out + &img;
        }
        out
    }

    /// The multiplicative extension of `J` to forms; multiplies the
    /// `(p,q)`-component by `i^{p−q}`.
    pub fn j_act(&self, a: &Form) -> Form {
        self.j_act_impl(a, false)
    }

    /// Inverse action (`J⁻¹ = −J` on the coframe); multiplies the
    /// `(p,q)`-component by `i^{q−p}`.
    pub fn j_act_inv(&self, a: &Form) -> Form {
        self.j_act_impl(a, true)
    }

    /// `d^c := J⁻¹ ∘ d ∘ J`.
    pub fn dc(&self, a: &Form) -> Form {
        self.j_act_inv(&self.alg.differential(&self.j_act(a)))
    }

    /// The ℂ-linear Hodge star of the orthonormal coframe, oriented by
    /// `ω^m/m!`: on a monomial, `*e^I = orientation · σ(I) · e^{I^c}` with
    /// `e^I ∧ e^{I^c} = σ(I) e^{1…2m}`. Satisfies `*² = (−1)^k` on degree
    /// `k`.
    pub fn hodge_star(&self, a: &Form) -> Form {
        let dim = self.dim();
        let mut out = Form::zero(dim);
        for (idx, c) in a.terms() {
            let comp = idx.complement(dim);
            let (_, sign) = idx.merge(comp).expect("complement is disjoint");
            let mut coeff = c.clone();
            if sign * self.orientation < 0 {
                coeff = -coeff;
            }
            out.add_term(comp, coeff);
        }
        out
    }

    /// The symplectic star `*_s = J⁻¹ ∘ *`; an involution with
    /// `*_s 1 = ω^m/m!`.
    pub fn symplectic_star(&self, a: &Form) -> Form {
        self.j_act_inv(&self.hodge_star(a))
    }

    /// `d^Λ := (−1)^{k+1} *_s d *_s` on degree `k`, extended degree-wise.
    pub fn d_lambda(&self, a: &Form) -> Form {
        let mut out = Form::zero(self.dim());
        for k in a.degrees() {
            let part = a.grade_project(k).expect("degree in range");
            let img = self.symplectic_star(&self.alg.differential(&self.symplectic_star(&part)));
            out = &out + &if k % 2 == 0 { -img } else { img };
        }
        out
    }

    /// Lefschetz raising `L = ω ∧ ·`.
    pub fn lefschetz_up(&self, a: &Form) -> Form {
        self.omega.wedge(a)
    }

    /// Matrix of `L: A^k → A^{k+2}`.
    fn up_matrix(&self, k: usize) -> Matrix {
        let dim = self.dim();
        if k + 2 > dim {
            return Matrix::zeros(0, binomial(dim, k));
        }
        let cols: Vec<Vec<Scalar>> = basis_of_degree(dim, k)
            .iter()
            .map(|idx| {
                let mono = Form::from_coords(
                    dim,
                    k,
                    &basis_of_degree(dim, k)
                        .iter()
                        .map(|b| {
                            if b == idx {
                                Scalar::one()
                            } else {
                                Scalar::zero()
                            }
                        })
                        .collect::<Vec<_>>(),
                );
                self.lefschetz_up(&mono).coords(k + 2)
            })
            .collect();
        Matrix::from_columns(binomial(dim, k + 2), &cols)
    }

    /// Lefschetz lowering `Λ`, the adjoint of `L` for the orthonormal
    /// monomial inner product.
    pub fn lefschetz_down(&self, a: &Form) -> Form {
        let dim = self.dim();
        let mut out = Form::zero(dim);
        for k in a.degrees() {
            if k < 2 {
                continue;
            }
            let mat = self.up_matrix(k - 2).conj_transpose();
            let coords = mat.apply(&a.coords(k));
            out = &out + &Form::from_coords(dim, k - 2, &coords);
        }
        out
    }

    /// Basis of the primitive space `P^s = ker(Λ) ∩ A^s`, deterministic.
    pub fn primitive_basis(&self, s: usize) -> Vec<Form> {
        let dim = self.dim();
        let mat = if s < 2 {
            Matrix::zeros(0, binomial(dim, s))
        } else {
            self.up_matrix(s - 2).conj_transpose()
        };
        mat.kernel_basis()
            .into_iter()
            .map(|v| Form::from_coords(dim, s, &v))
            .collect()
    }

    /// Lefschetz decomposition of a homogeneous degree-`k` form:
    /// the unique list of primitive forms `p_j ∈ P^{k−2j}` with
    /// `a = Σ_j L^j p_j`, returned as `(j, p_j)` pairs (nonzero parts only).
    ///
    /// # Panics
    /// Panics when `a` is neither zero nor homogeneous.
    pub fn lefschetz_decompose(&self, a: &Form) -> Vec<(usize, Form)> {
        if a.is_zero() {
            return Vec::new();
        }
        let k = a
            .homogeneous_degree()
            .expect("lefschetz_decompose needs a homogeneous form");
        let dim = self.dim();
        // Assemble the basis {L^j ψ : ψ primitive of degree k−2j}.
        let mut columns: Vec<Vec<Scalar>> = Vec::new();
        let mut origin: Vec<(usize, Form)> = Vec::new();
        let mut j = 0usize;
        while 2 * j <= k {
            let s = k - 2 * j;
            if s <= self.m {
                for psi in self.primitive_basis(s) {
                    let mut lifted = psi.clone();
                    for _ in 0..j {
                        lifted = self.lefschetz_up(&lifted);
                    }
                    columns.push(lifted.coords(k));
                    origin.push((j, psi));
                }
            }
            j += 1;
        }
        let mat = Matrix::from_columns(binomial(dim, k), &columns);
        let x = mat
            .solve(&a.coords(k))
            .expect("Lefschetz decomposition always exists");
        let mut parts: BTreeMap<usize, Form> = BTreeMap::new();
        for (coeff, (j, psi)) in x.iter().zip(&origin) {
            if coeff.is_zero() {
                continue;
            }
            let entry = parts
                .entry(*j)
                .or_insert_with(|| Form::zero(dim));
            *entry = &*entry + &psi.scale(coeff);
        }
        let out: Vec<(usize, Form)> = parts.into_iter().filter(|(_, f)| !f.is_zero()).collect();
        // Reconstruction must be exact.
        let mut back = Form::zero(dim);
        for (j, p) in &out {
            let mut lifted = p.clone();
            for _ in 0..*j {
                lifted = self.lefschetz_up(&lifted);
            }
            back = &back + &lifted;
        }
        assert_eq!(&back, a, "Lefschetz reconstruction mismatch");
        out
    }

    /// Sweep the Weil identity
    /// `* L^r ψ = (−1)^{k(k+1)/2} (r!/(m−k−r)!) L^{m−k−r} J ψ`
    /// over all primitive basis forms and admissible `r`. With
    /// `use_inverse_j` the J-action is replaced by its inverse — a deliberate
    /// wrong-convention control that must fail somewhere.
    pub fn weil_check(&self, use_inverse_j: bool) -> WeilReport {
        let mut cases = Vec::new();
        for k in 0..=self.m {
            let prims = self.primitive_basis(k);
            for r in 0..=(self.m - k) {
                let mut ok = true;
                for psi in &prims {
                    let mut lhs = psi.clone();
                    for _ in 0..r {
                        lhs = self.lefschetz_up(&lhs);
                    }
                    lhs = self.hodge_star(&lhs);

                    let jpsi = if use_inverse_j {
                        self.j_act_inv(psi)
                    } else {
                        self.j_act(psi)
                    };
                    let mut rhs = jpsi;
                    for _ in 0..(self.m - k - r) {
                        rhs = self.lefschetz_up(&rhs);
                    }
                    let coeff = Scalar::from_rational(
                        factorial(r) / factorial(self.m - k - r),
                    );
                    rhs = rhs.scale(&coeff);
                    if (k * (k + 1) / 2) % 2 == 1 {
                        rhs = -rhs;
                    }
                    if lhs != rhs {
                        ok = false;
                    }
                }
                cases.push((k, r, ok));
            }
        }
        WeilReport { cases }
    }

    /// Decide the structure predicates.
    pub fn predicates(&self) -> StructurePredicates {
        let d = |f: &Form| self.alg.differential(f);
        // Integrability: d of every (1,0)-form has no (0,2)-component.
        let integrable = self.psi.iter().all(|psi| {
            self.bidegree_projection(&d(psi), 0, 2).is_zero()
        });
        let almost_kahler = d(&self.omega).is_zero();
        let mut omega_m1 = Form::one(self.dim());
        for _ in 0..(self.m - 1) {
            omega_m1 = omega_m1.wedge(&self.omega);
        }
        let balanced = d(&omega_m1).is_zero();
        let gauduchon =
            d(&self.dc(&omega_m1)).is_zero() && self.dc(&d(&omega_m1)).is_zero();
        StructurePredicates {
            integrable,
            almost_kahler,
            kahler: integrable && almost_kahler,
            gauduchon,
            balanced,
        }
    }
}

/// `n!` as an exact rational.
pub(crate) fn factorial(n: usize) -> BigRational {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    BigRational::from_integer(acc)
}

/// The standard pairing `J e^{2j−1} = −e^{2j}, J e^{2j} = e^{2j−1}`, i.e. the
/// complex structure for which `e^{2j−1} + i e^{2j}` is a `(1,0)`-coframe.
pub fn standard_j(dim: usize) -> Matrix {
    assert!(dim % 2 == 0, "a complex structure needs an even dimension");
    let mut j = Matrix::zeros(dim, dim);
    for b in 0..(dim / 2) {
        j.set(2 * b, 2 * b + 1, -Scalar::one());
        j.set(2 * b + 1, 2 * b, Scalar::one());
    }
    j
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn torus() -> CompatibleTriple {
        CompatibleTriple::new(CoframeAlgebra::abelian(4), standard_j(4)).unwrap()
    }

    pub fn hopf() -> CompatibleTriple {
        let alg = CoframeAlgebra::new(
            4,
            vec![
                Form::zero(4),
                Form::monomial(4, &[3, 4], -Scalar::one()),
                Form::monomial(4, &[2, 4], Scalar::one()),
                Form::monomial(4, &[2, 3], -Scalar::one()),
            ],
        )
        .unwrap();
        CompatibleTriple::new(alg, standard_j(4)).unwrap()
    }

    pub fn kodaira() -> CompatibleTriple {
        let alg = CoframeAlgebra::new(
            4,
            vec![
                Form::zero(4),
                Form::zero(4),
                Form::zero(4),
                Form::monomial(4, &[1, 2], Scalar::from_int(-2)),
            ],
        )
        .unwrap();
        CompatibleTriple::new(alg, standard_j(4)).unwrap()
    }

    /// Kodaira–Thurston nilmanifold with the almost Kähler (non-integrable)
    /// triple: `d e⁴ = e^{12}`, `J e¹ = −e⁴, J e² = −e³, J e³ = e², J e⁴ = e¹`,
    /// `ω = e^{14} + e^{23}`.
    pub fn kodaira_thurston() -> CompatibleTriple {
        let alg = CoframeAlgebra::new(
            4,
            vec![
                Form::zero(4),
                Form::zero(4),
                Form::zero(4),
                Form::monomial(4, &[1, 2], Scalar::one()),
            ],
        )
        .unwrap();
        let mut j = Matrix::zeros(4, 4);
        j.set(0, 3, -Scalar::one());
        j.set(1, 2, -Scalar::one());
        j.set(2, 1, Scalar::one());
        j.set(3, 0, Scalar::one());
        CompatibleTriple::new(alg, j).unwrap()
    }
}
