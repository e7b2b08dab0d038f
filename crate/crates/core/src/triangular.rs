//! Triangular algebras `Tri(A, M, B)`, corner decomposition of their
//! bimodules via the idempotent `e = 1_A + 0`, and the block form of
//! corner-unit-preserving endomorphisms.
//!
//! The basis of `Tri(A, M, B)` is always ordered A-block, M-block,
//! B-block; every block index below is derived from that convention.

use crate::algebra::{AlgebraHom, Bimodule, FiniteAlgebra, HomPair};
use crate::linalg::Mat;
use crate::rat::Rat;
use crate::Error;

/// `Tri(A, M, B)` together with its components.
#[derive(Debug, Clone)]
pub struct TriangularAlgebra {
    algebra: FiniteAlgebra,
    a: FiniteAlgebra,
    m: Bimodule,
    b: FiniteAlgebra,
}

impl TriangularAlgebra {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn a(&self) -> &FiniteAlgebra {
        &self.a
    }

    pub fn m(&self) -> &Bimodule {
        &self.m
    }

    pub fn b(&self) -> &FiniteAlgebra {
        &self.b
    }

    pub fn a_dim(&self) -> usize {
        self.a.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.m.dim()
    }

    pub fn b_dim(&self) -> usize {
        self.b.dim()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Coordinates of the idempotent `e = 1_A + 0`.
    pub fn idempotent_e(&self) -> Vec<Rat> {
        self.embed_a(self.a.unit())
    }

    /// Coordinates of `1 - e = 0 + 1_B`.
    pub fn idempotent_f(&self) -> Vec<Rat> {
        self.embed_b(self.b.unit())
    }

    pub fn embed_a(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.a_dim());
        let mut v = vec![Rat::zero(); self.dim()];
        v[..self.a_dim()].clone_from_slice(x);
        v
    }

    pub fn embed_m(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.m_dim());
        let mut v = vec![Rat::zero(); self.dim()];
        v[self.a_dim()..self.a_dim() + self.m_dim()].clone_from_slice(x);
        v
    }

    pub fn embed_b(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.b_dim());
        let mut v = vec![Rat::zero(); self.dim()];
        v[self.a_dim() + self.m_dim()..].clone_from_slice(x);
        v
    }

    pub fn block_a(&self, x: &[Rat]) -> Vec<Rat> {
        x[..self.a_dim()].to_vec()
    }

    pub fn block_m(&self, x: &[Rat]) -> Vec<Rat> {
        x[self.a_dim()..self.a_dim() + self.m_dim()].to_vec()
    }

    pub fn block_b(&self, x: &[Rat]) -> Vec<Rat> {
        x[self.a_dim() + self.m_dim()..].to_vec()
    }
}

/// Assembles `Tri(A, M, B)` with the block multiplication
/// `[a m; 0 b][a' m'; 0 b'] = [aa', am' + mb'; 0, bb']`.
pub fn build_tri(
    a: &FiniteAlgebra,
    m: &Bimodule,
    b: &FiniteAlgebra,
) -> Result<TriangularAlgebra, Error> {
    if !m.left_algebra().same_structure(a) || !m.right_algebra().same_structure(b) {
        return Err(Error::Shape(
            "the bimodule must be an A-B-bimodule over the given algebras".into(),
        ));
    }
    if m.dim() == 0 {
        return Err(Error::Shape(
            "a triangular algebra needs a nonzero bimodule".into(),
        ));
    }
    for (name, report) in [("A", a.check()), ("B", b.check())] {
        if !report.is_valid() {
            return Err(Error::Invalid(format!(
                "component algebra {name} fails {} axiom instances",
                report.violations.len()
            )));
        }
    }
    let m_report = m.check();
    if !m_report.is_valid() {
        return Err(Error::Invalid(format!(
            "bimodule fails {} axiom instances",
            m_report.violations.len()
        )));
    }
    let da = a.dim();
    let dm = m.dim();
    let db = b.dim();
    let dim = da + dm + db;
    let labels: Vec<String> = a
        .labels()
        .iter()
        .map(|l| format!("A.{l}"))
        .chain((0..dm).map(|p| format!("M{p}")))
        .chain(b.labels().iter().map(|l| format!("B.{l}")))
        .collect();
    let mut unit = vec![Rat::zero(); dim];
    unit[..da].clone_from_slice(a.unit());
    unit[da + dm..].clone_from_slice(b.unit());
    let algebra = FiniteAlgebra::from_products(labels, unit, |i, j| {
        let mut out = vec![Rat::zero(); dim];
        if i < da && j < da {
            out[..da].clone_from_slice(&a.mul_vec(&a.basis_vec(i), &a.basis_vec(j)));
        } else if i < da && j >= da && j < da + dm {
            let p = m.act_left(&a.basis_vec(i), &m.basis_vec(j - da));
            out[da..da + dm].clone_from_slice(&p);
        } else if i >= da && i < da + dm && j >= da + dm {
            let p = m.act_right(&m.basis_vec(i - da), &b.basis_vec(j - da - dm));
            out[da..da + dm].clone_from_slice(&p);
        } else if i >= da + dm && j >= da + dm {
            let p = b.mul_vec(&b.basis_vec(i - da - dm), &b.basis_vec(j - da - dm));
            out[da + dm..].clone_from_slice(&p);
        }
        out
    })?;
    let report = algebra.check();
    if !report.is_valid() {
        return Err(Error::Invalid(format!(
            "assembled triangular algebra fails {} axiom instances",
            report.violations.len()
        )));
    }
    Ok(TriangularAlgebra {
        algebra,
        a: a.clone(),
        m: m.clone(),
        b: b.clone(),
    })
}

/// One corner of a bimodule: the corner as a first-class bimodule in its
/// own coordinates, with the inclusion into the ambient module and the
/// projection back.
#[derive(Debug, Clone)]
pub struct Corner {
    pub module: Bimodule,
    pub inclusion: Mat,
    pub projection: Mat,
}

impl Corner {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// `X = X_AA + X_AB + X_BA + X_BB` for a T-bimodule `X`, split by the
/// idempotents `1_A + 0` and `0 + 1_B`.
#[derive(Debug, Clone)]
pub struct CornerDecomposition {
    pub aa: Corner,
    pub ab: Corner,
    pub ba: Corner,
    pub bb: Corner,
}

impl CornerDecomposition {
    pub fn total_dim(&self) -> usize {
        self.aa.dim() + self.ab.dim() + self.ba.dim() + self.bb.dim()
    }
}

pub fn corner_decompose(t: &TriangularAlgebra, x: &Bimodule) -> Result<CornerDecomposition, Error> {
    if !x.left_algebra().same_structure(t.algebra())
        || !x.right_algebra().same_structure(t.algebra())
    {
        return Err(Error::Shape(
            "expected a bimodule over the triangular algebra".into(),
        ));
    }
    let report = x.check();
    if !report.is_valid() {
        return Err(Error::Invalid(format!(
            "bimodule fails {} axiom instances",
            report.violations.len()
        )));
    }
    let e = t.idempotent_e();
    let f = t.idempotent_f();
    let dx = x.dim();

    let corner_basis = |l: &[Rat], r: &[Rat]| -> Vec<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = (0..dx)
            .map(|p| x.act_right(&x.act_left(l, &x.basis_vec(p)), r))
            .collect();
        Mat::from_columns(dx, &cols)
            .expect("square operator")
            .image_basis()
    };

    let basis_aa = corner_basis(&e, &e);
    let basis_ab = corner_basis(&e, &f);
    let basis_ba = corner_basis(&f, &e);
    let basis_bb = corner_basis(&f, &f);

    let mut all = Vec::new();
    all.extend(basis_aa.iter().cloned());
    all.extend(basis_ab.iter().cloned());
    all.extend(basis_ba.iter().cloned());
    all.extend(basis_bb.iter().cloned());
    if all.len() != dx {
        return Err(Error::Invalid(format!(
            "corner dimensions sum to {} but dim X = {dx}",
            all.len()
        )));
    }
    let assembled = Mat::from_columns(dx, &all)?;
    let inverse = assembled
        .invert()
        .ok_or_else(|| Error::Invalid("corner subspaces do not span X".into()))?;

    let slice_projection = |offset: usize, k: usize| -> Mat {
        let mut p = Mat::zeros(k, dx);
        for r in 0..k {
            for c in 0..dx {
                p.set(r, c, inverse.at(offset + r, c).clone());
            }
        }
        p
    };

    let build_corner = |basis: &[Vec<Rat>],
                        offset: usize,
                        left_alg: &FiniteAlgebra,
                        embed_left: &dyn Fn(usize) -> Vec<Rat>,
                        right_alg: &FiniteAlgebra,
                        embed_right: &dyn Fn(usize) -> Vec<Rat>|
     -> Result<Corner, Error> {
        let k = basis.len();
        let inclusion = Mat::from_columns(dx, basis)?;
        let projection = slice_projection(offset, k);
        let module = Bimodule::from_actions(
            left_alg.clone(),
            right_alg.clone(),
            k,
            |i, p| {
                let acted = x.act_left(&embed_left(i), &inclusion.column(p));
                projection.mul_vec(&acted).expect("projection shape")
            },
            |p, j| {
                let acted = x.act_right(&inclusion.column(p), &embed_right(j));
                projection.mul_vec(&acted).expect("projection shape")
            },
        )?;
        let report = module.check();
        if !report.is_valid() {
            return Err(Error::Invalid(format!(
                "corner bimodule fails {} axiom instances",
                report.violations.len()
            )));
        }
        Ok(Corner {
            module,
            inclusion,
            projection,
        })
    };

    let a = t.a().clone();
    let b = t.b().clone();
    let emb_a = |i: usize| t.embed_a(&t.a().basis_vec(i));
    let emb_b = |j: usize| t.embed_b(&t.b().basis_vec(j));

    let mut offset = 0;
    let aa = build_corner(&basis_aa, offset, &a, &emb_a, &a, &emb_a)?;
    offset += basis_aa.len();
    let ab = build_corner(&basis_ab, offset, &a, &emb_a, &b, &emb_b)?;
    offset += basis_ab.len();
    let ba = build_corner(&basis_ba, offset, &b, &emb_b, &a, &emb_a)?;
    offset += basis_ba.len();
    let bb = build_corner(&basis_bb, offset, &b, &emb_b, &b, &emb_b)?;

    Ok(CornerDecomposition { aa, ab, ba, bb })
}

/// True iff `h` fixes both `1_A + 0` and `0 + 1_B` exactly.
pub fn hom_fixes_corner_units(t: &TriangularAlgebra, h: &AlgebraHom) -> bool {
    let e = t.idempotent_e();
    let f = t.idempotent_f();
    h.apply(&e) == e && h.apply(&f) == f
}

/// True iff both members of the pair fix the corner units.
pub fn check_corner_units(t: &TriangularAlgebra, p: &HomPair) -> bool {
    hom_fixes_corner_units(t, &p.sigma) && hom_fixes_corner_units(t, &p.tau)
}

/// The block components of a corner-unit-preserving endomorphism of `T`:
/// `h([a m; 0 b]) = [h_A(a), h_M(m); 0, h_B(b)]`.
#[derive(Debug, Clone)]
pub struct RestrictedHom {
    pub a: AlgebraHom,
    pub m: Mat,
    pub b: AlgebraHom,
}

pub fn restrict_hom(t: &TriangularAlgebra, h: &AlgebraHom) -> Result<RestrictedHom, Error> {
    if !h.is_endomorphism() || !h.source.same_structure(t.algebra()) {
        return Err(Error::Shape(
            "restrict_hom expects an endomorphism of the triangular algebra".into(),
        ));
    }
    if !hom_fixes_corner_units(t, h) {
        return Err(Error::Corner(
            "the endomorphism does not fix the corner units".into(),
        ));
    }
    if !h.check().is_valid() {
        return Err(Error::Invalid("not a unital homomorphism".into()));
    }
    let da = t.a_dim();
    let dm = t.m_dim();
    let block_of = |i: usize| -> usize {
        if i < da {
            0
        } else if i < da + dm {
            1
        } else {
            2
        }
    };
    for r in 0..t.dim() {
        for c in 0..t.dim() {
            if block_of(r) != block_of(c) && !h.matrix.at(r, c).is_zero() {
                return Err(Error::Corner(format!(
                    "nonzero off-block entry at ({r}, {c})"
                )));
            }
        }
    }
    let mut ma = Mat::zeros(da, da);
    for r in 0..da {
        for c in 0..da {
            ma.set(r, c, h.matrix.at(r, c).clone());
        }
    }
    let mut mm = Mat::zeros(dm, dm);
    for r in 0..dm {
        for c in 0..dm {
            mm.set(r, c, h.matrix.at(da + r, da + c).clone());
        }
    }
    let db = t.b_dim();
    let mut mb = Mat::zeros(db, db);
    for r in 0..db {
        for c in 0..db {
            mb.set(r, c, h.matrix.at(da + dm + r, da + dm + c).clone());
        }
    }
    let ha = AlgebraHom::new(t.a().clone(), t.a().clone(), ma)?;
    let hb = AlgebraHom::new(t.b().clone(), t.b().clone(), mb)?;
    if !ha.check().is_valid() || !hb.check().is_valid() {
        return Err(Error::Corner(
            "a diagonal block is not a unital homomorphism".into(),
        ));
    }
    check_semilinearity(t, &ha, &mm, &hb)?;
    Ok(RestrictedHom {
        a: ha,
        m: mm,
        b: hb,
    })
}

/// `h_M(a.m) = h_A(a).h_M(m)` and `h_M(m.b) = h_M(m).h_B(b)` on all basis
/// pairs.
fn check_semilinearity(
    t: &TriangularAlgebra,
    ha: &AlgebraHom,
    hm: &Mat,
    hb: &AlgebraHom,
) -> Result<(), Error> {
    let m = t.m();
    for i in 0..t.a_dim() {
        for p in 0..t.m_dim() {
            let lhs = hm.mul_vec(&m.act_left(&t.a().basis_vec(i), &m.basis_vec(p)))?;
            let rhs = m.act_left(
                &ha.apply(&t.a().basis_vec(i)),
                &hm.mul_vec(&m.basis_vec(p))?,
            );
            if lhs != rhs {
                return Err(Error::Semilinearity(format!(
                    "h_M(a.m) != h_A(a).h_M(m) at (a_{i}, m_{p})"
                )));
            }
        }
    }
    for p in 0..t.m_dim() {
        for j in 0..t.b_dim() {
            let lhs = hm.mul_vec(&m.act_right(&m.basis_vec(p), &t.b().basis_vec(j)))?;
            let rhs = m.act_right(
                &hm.mul_vec(&m.basis_vec(p))?,
                &hb.apply(&t.b().basis_vec(j)),
            );
            if lhs != rhs {
                return Err(Error::Semilinearity(format!(
                    "h_M(m.b) != h_M(m).h_B(b) at (m_{p}, b_{j})"
                )));
            }
        }
    }
    Ok(())
}

/// Assembles the block-diagonal endomorphism of `T` from compatible
/// components; inverse of [`restrict_hom`].
pub fn lift_hom(
    t: &TriangularAlgebra,
    ha: &AlgebraHom,
    hm: &Mat,
    hb: &AlgebraHom,
) -> Result<AlgebraHom, Error> {
    if !ha.is_endomorphism()
        || !ha.source.same_structure(t.a())
        || !hb.is_endomorphism()
        || !hb.source.same_structure(t.b())
    {
        return Err(Error::Shape("components act on the wrong algebras".into()));
    }
    if hm.rows() != t.m_dim() || hm.cols() != t.m_dim() {
        return Err(Error::Shape("h_M has the wrong shape".into()));
    }
    if !ha.check().is_valid() || !hb.check().is_valid() {
        return Err(Error::Invalid(
            "h_A and h_B must be unital homomorphisms".into(),
        ));
    }
    check_semilinearity(t, ha, hm, hb)?;
    let da = t.a_dim();
    let dm = t.m_dim();
    let db = t.b_dim();
    let mut matrix = Mat::zeros(t.dim(), t.dim());
    for r in 0..da {
        for c in 0..da {
            matrix.set(r, c, ha.matrix.at(r, c).clone());
        }
    }
    for r in 0..dm {
        for c in 0..dm {
            matrix.set(da + r, da + c, hm.at(r, c).clone());
        }
    }
    for r in 0..db {
        for c in 0..db {
            matrix.set(da + dm + r, da + dm + c, hb.matrix.at(r, c).clone());
        }
    }
    let h = AlgebraHom::new(t.algebra().clone(), t.algebra().clone(), matrix)?;
    if !h.check().is_valid() {
        return Err(Error::Semilinearity(
            "assembled block map is not a homomorphism".into(),
        ));
    }
    debug_assert!(hom_fixes_corner_units(t, &h));
    Ok(h)
}
