//! Finite-dimensional unital algebras given by structure constants,
//! verified homomorphisms, bimodules, ideals and quotients.

use serde::Serialize;

use crate::linalg::Mat;
use crate::rat::Rat;
use crate::Error;

/// One violated axiom instance, identified by rule name and the basis
/// indices that witness it.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub rule: String,
    pub indices: Vec<usize>,
}

/// Report-style validation: all violations are collected so the CLI can
/// surface every offending basis triple at once.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn push(&mut self, rule: &str, indices: &[usize]) {
        self.violations.push(Violation {
            rule: rule.to_string(),
            indices: indices.to_vec(),
        });
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Valid except possibly for the listed rules.
    pub fn is_valid_ignoring(&self, rules: &[&str]) -> bool {
        self.violations
            .iter()
            .all(|v| rules.contains(&v.rule.as_str()))
    }
}

/// A unital associative algebra over the rationals, presented by a
/// structure-constant tensor `c` with `e_i e_j = sum_k c[i][j][k] e_k`
/// and the coordinates of the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    labels: Vec<String>,
    structure: Vec<Rat>,
    unit: Vec<Rat>,
}

impl FiniteAlgebra {
    pub fn new(labels: Vec<String>, structure: Vec<Rat>, unit: Vec<Rat>) -> Result<Self, Error> {
        let dim = labels.len();
        if structure.len() != dim * dim * dim {
            return Err(Error::Shape(format!(
                "structure tensor has {} entries, expected {}",
                structure.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::Shape(format!(
                "unit vector has length {}, expected {}",
                unit.len(),
                dim
            )));
        }
        Ok(FiniteAlgebra {
            dim,
            labels,
            structure,
            unit,
        })
    }

    /// Builds the structure tensor from a basis-product table.
    pub fn from_products<F>(labels: Vec<String>, unit: Vec<Rat>, products: F) -> Result<Self, Error>
    where
        F: Fn(usize, usize) -> Vec<Rat>,
    {
        let dim = labels.len();
        let mut structure = vec![Rat::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let p = products(i, j);
                if p.len() != dim {
                    return Err(Error::Shape(format!(
                        "product e_{i} e_{j} has length {}, expected {dim}",
                        p.len()
                    )));
                }
                for (k, v) in p.into_iter().enumerate() {
                    structure[(i * dim + j) * dim + k] = v;
                }
            }
        }
        FiniteAlgebra::new(labels, structure, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn structure_const(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// Exact product of two coordinate vectors.
    pub fn mul_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_const(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    /// Checks associativity on all basis triples and the unit laws on all
    /// basis elements.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul_vec(&self.basis_vec(i), &self.basis_vec(j));
                for k in 0..self.dim {
                    let lhs = self.mul_vec(&ij, &self.basis_vec(k));
                    let jk = self.mul_vec(&self.basis_vec(j), &self.basis_vec(k));
                    let rhs = self.mul_vec(&self.basis_vec(i), &jk);
                    if lhs != rhs {
                        report.push("associativity", &[i, j, k]);
                    }
                }
            }
        }
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.unit, &e) != e {
                report.push("left-unit", &[i]);
            }
            if self.mul_vec(&e, &self.unit) != e {
                report.push("right-unit", &[i]);
            }
        }
        report
    }

    /// Structural equality ignoring labels.
    pub fn same_structure(&self, other: &FiniteAlgebra) -> bool {
        self.dim == other.dim && self.structure == other.structure && self.unit == other.unit
    }
}

/// Blockwise direct sum of two algebras; labels are prefixed to
/// disambiguate the blocks.
pub fn direct_sum(a: &FiniteAlgebra, b: &FiniteAlgebra) -> FiniteAlgebra {
    let da = a.dim;
    let db = b.dim;
    let labels: Vec<String> = a
        .labels
        .iter()
        .map(|l| format!("A.{l}"))
        .chain(b.labels.iter().map(|l| format!("B.{l}")))
        .collect();
    let mut unit = vec![Rat::zero(); da + db];
    unit[..da].clone_from_slice(&a.unit);
    unit[da..].clone_from_slice(&b.unit);
    FiniteAlgebra::from_products(labels, unit, |i, j| {
        let mut out = vec![Rat::zero(); da + db];
        if i < da && j < da {
            let p = a.mul_vec(&a.basis_vec(i), &a.basis_vec(j));
            out[..da].clone_from_slice(&p);
        } else if i >= da && j >= da {
            let p = b.mul_vec(&b.basis_vec(i - da), &b.basis_vec(j - da));
            out[da..].clone_from_slice(&p);
        }
        out
    })
    .expect("direct sum construction is shape-correct")
}

/// A linear map between algebras, stored as a target-dim x source-dim
/// matrix over the basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    pub source: FiniteAlgebra,
    pub target: FiniteAlgebra,
    pub matrix: Mat,
}

impl AlgebraHom {
    pub fn new(source: FiniteAlgebra, target: FiniteAlgebra, matrix: Mat) -> Result<Self, Error> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: &FiniteAlgebra) -> Self {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: Mat::identity(a.dim()),
        }
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        self.matrix
            .mul_vec(x)
            .expect("hom shape verified at construction")
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source.same_structure(&self.target)
    }

    /// Reports every basis pair where multiplicativity fails and whether
    /// the unit is preserved.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let s = &self.source;
        let t = &self.target;
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                let prod = s.mul_vec(&s.basis_vec(i), &s.basis_vec(j));
                let lhs = self.apply(&prod);
                let rhs = t.mul_vec(&self.apply(&s.basis_vec(i)), &self.apply(&s.basis_vec(j)));
                if lhs != rhs {
                    report.push("multiplicativity", &[i, j]);
                }
            }
        }
        if self.apply(s.unit()) != t.unit() {
            report.push("unital", &[]);
        }
        report
    }
}

/// Block-diagonal endomorphism of `direct_sum(a, b)`.
pub fn hom_direct_sum(ha: &AlgebraHom, hb: &AlgebraHom) -> Result<AlgebraHom, Error> {
    if !ha.is_endomorphism() || !hb.is_endomorphism() {
        return Err(Error::Shape(
            "hom_direct_sum expects endomorphisms of the two summands".into(),
        ));
    }
    let sum = direct_sum(&ha.source, &hb.source);
    let da = ha.source.dim();
    let db = hb.source.dim();
    let mut m = Mat::zeros(da + db, da + db);
    for r in 0..da {
        for c in 0..da {
            m.set(r, c, ha.matrix.at(r, c).clone());
        }
    }
    for r in 0..db {
        for c in 0..db {
            m.set(da + r, da + c, hb.matrix.at(r, c).clone());
        }
    }
    AlgebraHom::new(sum.clone(), sum, m)
}

/// A (sigma, tau) pair of endomorphisms of the same algebra.
#[derive(Debug, Clone)]
pub struct HomPair {
    pub sigma: AlgebraHom,
    pub tau: AlgebraHom,
}

impl HomPair {
    pub fn new(sigma: AlgebraHom, tau: AlgebraHom) -> Result<Self, Error> {
        if !sigma.is_endomorphism() || !tau.is_endomorphism() {
            return Err(Error::Shape("sigma and tau must be endomorphisms".into()));
        }
        if !sigma.source.same_structure(&tau.source) {
            return Err(Error::Shape(
                "sigma and tau must act on the same algebra".into(),
            ));
        }
        Ok(HomPair { sigma, tau })
    }

    pub fn identity(a: &FiniteAlgebra) -> Self {
        HomPair {
            sigma: AlgebraHom::identity(a),
            tau: AlgebraHom::identity(a),
        }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.sigma.source
    }
}

/// A two-sided module over a pair of algebras, given by left/right action
/// tensors: `e_i . f_p = sum_q L[i][p][q] f_q` and
/// `f_p . e_j = sum_q R[p][j][q] f_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    left: FiniteAlgebra,
    right: FiniteAlgebra,
    dim: usize,
    left_action: Vec<Rat>,
    right_action: Vec<Rat>,
}

impl Bimodule {
    pub fn new(
        left: FiniteAlgebra,
        right: FiniteAlgebra,
        dim: usize,
        left_action: Vec<Rat>,
        right_action: Vec<Rat>,
    ) -> Result<Self, Error> {
        if left_action.len() != left.dim() * dim * dim {
            return Err(Error::Shape(format!(
                "left action tensor has {} entries, expected {}",
                left_action.len(),
                left.dim() * dim * dim
            )));
        }
        if right_action.len() != dim * right.dim() * dim {
            return Err(Error::Shape(format!(
                "right action tensor has {} entries, expected {}",
                right_action.len(),
                dim * right.dim() * dim
            )));
        }
        Ok(Bimodule {
            left,
            right,
            dim,
            left_action,
            right_action,
        })
    }

    /// Builds the action tensors from basis-action tables.
    pub fn from_actions<L, R>(
        left: FiniteAlgebra,
        right: FiniteAlgebra,
        dim: usize,
        left_act: L,
        right_act: R,
    ) -> Result<Self, Error>
    where
        L: Fn(usize, usize) -> Vec<Rat>,
        R: Fn(usize, usize) -> Vec<Rat>,
    {
        let mut la = vec![Rat::zero(); left.dim() * dim * dim];
        for i in 0..left.dim() {
            for p in 0..dim {
                let v = left_act(i, p);
                if v.len() != dim {
                    return Err(Error::Shape("left action table has wrong length".into()));
                }
                for (q, x) in v.into_iter().enumerate() {
                    la[(i * dim + p) * dim + q] = x;
                }
            }
        }
        let mut ra = vec![Rat::zero(); dim * right.dim() * dim];
        for p in 0..dim {
            for j in 0..right.dim() {
                let v = right_act(p, j);
                if v.len() != dim {
                    return Err(Error::Shape("right action table has wrong length".into()));
                }
                for (q, x) in v.into_iter().enumerate() {
                    ra[(p * right.dim() + j) * dim + q] = x;
                }
            }
        }
        Bimodule::new(left, right, dim, la, ra)
    }

    /// The algebra as a bimodule over itself via multiplication.
    pub fn regular(a: &FiniteAlgebra) -> Self {
        let dim = a.dim();
        Bimodule::from_actions(
            a.clone(),
            a.clone(),
            dim,
            |i, p| a.mul_vec(&a.basis_vec(i), &a.basis_vec(p)),
            |p, j| a.mul_vec(&a.basis_vec(p), &a.basis_vec(j)),
        )
        .expect("regular bimodule is shape-correct")
    }

    pub fn left_algebra(&self) -> &FiniteAlgebra {
        &self.left
    }

    pub fn right_algebra(&self) -> &FiniteAlgebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_coeff(&self, i: usize, p: usize, q: usize) -> &Rat {
        &self.left_action[(i * self.dim + p) * self.dim + q]
    }

    pub fn right_coeff(&self, p: usize, j: usize, q: usize) -> &Rat {
        &self.right_action[(p * self.right.dim() + j) * self.dim + q]
    }

    pub fn basis_vec(&self, p: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[p] = Rat::one();
        v
    }

    pub fn act_left(&self, a: &[Rat], x: &[Rat]) -> Vec<Rat> {
        assert_eq!(a.len(), self.left.dim());
        assert_eq!(x.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (p, xp) in x.iter().enumerate() {
                if xp.is_zero() {
                    continue;
                }
                let coeff = ai * xp;
                for (q, o) in out.iter_mut().enumerate() {
                    let c = self.left_coeff(i, p, q);
                    if !c.is_zero() {
                        *o = &*o + &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    pub fn act_right(&self, x: &[Rat], b: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(b.len(), self.right.dim());
        let mut out = vec![Rat::zero(); self.dim];
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let coeff = xp * bj;
                for (q, o) in out.iter_mut().enumerate() {
                    let c = self.right_coeff(p, j, q);
                    if !c.is_zero() {
                        *o = &*o + &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x -> a . x` on module coordinates.
    pub fn left_op(&self, a: &[Rat]) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim)
            .map(|p| self.act_left(a, &self.basis_vec(p)))
            .collect();
        Mat::from_columns(self.dim, &cols).expect("square by construction")
    }

    /// Matrix of `x -> x . b` on module coordinates.
    pub fn right_op(&self, b: &[Rat]) -> Mat {
        let cols: Vec<Vec<Rat>> = (0..self.dim)
            .map(|p| self.act_right(&self.basis_vec(p), b))
            .collect();
        Mat::from_columns(self.dim, &cols).expect("square by construction")
    }

    /// Checks left/right associativity, compatibility of the two actions
    /// and unitality, reporting every offending basis triple.
    ///
    /// Rules: `left-assoc`, `right-assoc`, `compat`, `unital-left`,
    /// `unital-right`.
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let la = &self.left;
        let ra = &self.right;
        for i in 0..la.dim() {
            for j in 0..la.dim() {
                let prod = la.mul_vec(&la.basis_vec(i), &la.basis_vec(j));
                for p in 0..self.dim {
                    let x = self.basis_vec(p);
                    let lhs = self.act_left(&prod, &x);
                    let rhs = self.act_left(&la.basis_vec(i), &self.act_left(&la.basis_vec(j), &x));
                    if lhs != rhs {
                        report.push("left-assoc", &[i, j, p]);
                    }
                }
            }
        }
        for i in 0..ra.dim() {
            for j in 0..ra.dim() {
                let prod = ra.mul_vec(&ra.basis_vec(i), &ra.basis_vec(j));
                for p in 0..self.dim {
                    let x = self.basis_vec(p);
                    let lhs = self.act_right(&x, &prod);
                    let rhs =
                        self.act_right(&self.act_right(&x, &ra.basis_vec(i)), &ra.basis_vec(j));
                    if lhs != rhs {
                        report.push("right-assoc", &[p, i, j]);
                    }
                }
            }
        }
        for i in 0..la.dim() {
            for p in 0..self.dim {
                for j in 0..ra.dim() {
                    let x = self.basis_vec(p);
                    let lhs =
                        self.act_right(&self.act_left(&la.basis_vec(i), &x), &ra.basis_vec(j));
                    let rhs =
                        self.act_left(&la.basis_vec(i), &self.act_right(&x, &ra.basis_vec(j)));
                    if lhs != rhs {
                        report.push("compat", &[i, p, j]);
                    }
                }
            }
        }
        for p in 0..self.dim {
            let x = self.basis_vec(p);
            if self.act_left(la.unit(), &x) != x {
                report.push("unital-left", &[p]);
            }
            if self.act_right(&x, ra.unit()) != x {
                report.push("unital-right", &[p]);
            }
        }
        report
    }
}

/// A candidate two-sided ideal given by a spanning set of vectors in
/// ambient coordinates.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub basis: Vec<Vec<Rat>>,
}

impl Ideal {
    pub fn new(basis: Vec<Vec<Rat>>) -> Self {
        Ideal { basis }
    }

    pub fn zero() -> Self {
        Ideal { basis: Vec::new() }
    }

    /// Checks closure under two-sided multiplication by every ambient
    /// basis element. Rules: `left-closure` / `right-closure` with indices
    /// `[ambient basis, ideal basis]`.
    pub fn check(&self, ambient: &FiniteAlgebra) -> Result<ValidationReport, Error> {
        let n = ambient.dim();
        for (k, v) in self.basis.iter().enumerate() {
            if v.len() != n {
                return Err(Error::Shape(format!(
                    "ideal basis vector {k} has length {}, expected {n}",
                    v.len()
                )));
            }
        }
        let span = Mat::from_columns(n, &self.basis)?;
        let mut report = ValidationReport::default();
        for i in 0..n {
            let e = ambient.basis_vec(i);
            for (k, v) in self.basis.iter().enumerate() {
                if span.solve(&ambient.mul_vec(&e, v))?.is_none() {
                    report.push("left-closure", &[i, k]);
                }
                if span.solve(&ambient.mul_vec(v, &e))?.is_none() {
                    report.push("right-closure", &[i, k]);
                }
            }
        }
        Ok(report)
    }
}

/// A quotient algebra together with the projection realizing `a -> a + I`.
///
/// The complement basis extends the ideal's RREF pivot set with standard
/// basis vectors, so the construction is deterministic.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub algebra: FiniteAlgebra,
    /// quotient-dim x ambient-dim matrix of the canonical projection.
    pub projection: Mat,
    pub ambient: FiniteAlgebra,
    pub ideal: Ideal,
    /// Indices of the standard basis vectors representing the quotient basis.
    pub complement: Vec<usize>,
}

pub fn quotient_algebra(a: &FiniteAlgebra, ideal: &Ideal) -> Result<QuotientAlgebra, Error> {
    let report = ideal.check(a)?;
    if !report.is_valid() {
        return Err(Error::Inclusion(format!(
            "not a two-sided ideal: {} closure violations",
            report.violations.len()
        )));
    }
    let n = a.dim();
    // rows = ideal vectors; pivot columns select the ideal directions
    let rows: Vec<Vec<Rat>> = ideal.basis.clone();
    let ideal_mat = Mat::from_columns(n, &rows)?.transpose();
    let (ideal_rref, pivots) = ideal_mat.rref();
    let r = pivots.len();
    let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let q = n - r;
    // change of basis: complement standard vectors, then the ideal RREF rows
    let mut basis_cols: Vec<Vec<Rat>> = complement.iter().map(|&c| a.basis_vec(c)).collect();
    for row in 0..r {
        basis_cols.push((0..n).map(|c| ideal_rref.at(row, c).clone()).collect());
    }
    let change = Mat::from_columns(n, &basis_cols)?;
    let inv = change
        .invert()
        .expect("complement plus ideal rows form a basis");
    let mut projection = Mat::zeros(q, n);
    for row in 0..q {
        for c in 0..n {
            projection.set(row, c, inv.at(row, c).clone());
        }
    }
    if q > 0 && projection.mul_vec(a.unit())?.iter().all(Rat::is_zero) {
        return Err(Error::Inclusion(
            "the unit lies in the ideal but the quotient is nonzero".into(),
        ));
    }
    let labels: Vec<String> = complement
        .iter()
        .map(|&c| format!("{}+I", a.labels()[c]))
        .collect();
    let unit = projection.mul_vec(a.unit())?;
    let quotient = FiniteAlgebra::from_products(labels, unit, |u, v| {
        let p = a.mul_vec(&a.basis_vec(complement[u]), &a.basis_vec(complement[v]));
        projection.mul_vec(&p).expect("projection shape")
    })?;
    // projection must be a unital surjective homomorphism
    for i in 0..n {
        for j in 0..n {
            let lhs = projection.mul_vec(&a.mul_vec(&a.basis_vec(i), &a.basis_vec(j)))?;
            let rhs = quotient.mul_vec(
                &projection.mul_vec(&a.basis_vec(i))?,
                &projection.mul_vec(&a.basis_vec(j))?,
            );
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "quotient projection fails multiplicativity at ({i}, {j})"
                )));
            }
        }
    }
    Ok(QuotientAlgebra {
        algebra: quotient,
        projection,
        ambient: a.clone(),
        ideal: ideal.clone(),
        complement,
    })
}

impl QuotientAlgebra {
    /// Induces an endomorphism on the quotient from an endomorphism of the
    /// ambient algebra that preserves the ideal.
    pub fn induced_hom(&self, h: &AlgebraHom) -> Result<AlgebraHom, Error> {
        if !h.is_endomorphism() || !h.source.same_structure(&self.ambient) {
            return Err(Error::Shape(
                "induced_hom expects an endomorphism of the ambient algebra".into(),
            ));
        }
        let n = self.ambient.dim();
        let span = Mat::from_columns(n, &self.ideal.basis)?;
        for (k, v) in self.ideal.basis.iter().enumerate() {
            if span.solve(&h.apply(v))?.is_none() {
                return Err(Error::Invariance(format!(
                    "ideal basis vector {k} is not mapped into the ideal"
                )));
            }
        }
        let q = self.algebra.dim();
        let cols: Vec<Vec<Rat>> = (0..q)
            .map(|u| {
                self.projection
                    .mul_vec(&h.apply(&self.ambient.basis_vec(self.complement[u])))
                    .expect("projection shape")
            })
            .collect();
        let induced = AlgebraHom::new(
            self.algebra.clone(),
            self.algebra.clone(),
            Mat::from_columns(q, &cols)?,
        )?;
        // proj . h = induced . proj, exactly
        let lhs = self.projection.mul(&h.matrix)?;
        let rhs = induced.matrix.mul(&self.projection)?;
        if lhs != rhs {
            return Err(Error::Invalid(
                "induced endomorphism does not commute with the projection".into(),
            ));
        }
        Ok(induced)
    }

    /// Pulls a bimodule over the quotient back to a bimodule over the
    /// ambient algebra along the projection.
    pub fn pull_back(&self, x: &Bimodule) -> Result<Bimodule, Error> {
        if !x.left_algebra().same_structure(&self.algebra)
            || !x.right_algebra().same_structure(&self.algebra)
        {
            return Err(Error::Shape(
                "pull_back expects a bimodule over the quotient algebra".into(),
            ));
        }
        let proj = &self.projection;
        Bimodule::from_actions(
            self.ambient.clone(),
            self.ambient.clone(),
            x.dim(),
            |i, p| x.act_left(&proj.column(i), &x.basis_vec(p)),
            |p, j| x.act_right(&x.basis_vec(p), &proj.column(j)),
        )
    }
}
