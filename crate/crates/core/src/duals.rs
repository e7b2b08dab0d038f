//! Dual bimodules and iterated duals, weak-amenability checks, and the
//! obstruction module/derivation showing that sigma-amenability of a
//! triangular algebra forces sigma to kill the off-diagonal bimodule.

use crate::algebra::{AlgebraHom, Bimodule, FiniteAlgebra, HomPair, Ideal, QuotientAlgebra};
use crate::cohomology::derivation_space;
use crate::linalg::Mat;
use crate::rat::Rat;
use crate::triangular::{check_corner_units, restrict_hom, TriangularAlgebra};
use crate::Error;

/// The dual space of a (P,Q)-bimodule as a (Q,P)-bimodule:
/// `(b.f)(x) = f(x.b)` and `(f.a)(x) = f(a.x)`, expressed on the dual
/// basis by transposing the action tensors.
pub fn dual_bimodule(x: &Bimodule) -> Bimodule {
    let d = x.dim();
    Bimodule::from_actions(
        x.right_algebra().clone(),
        x.left_algebra().clone(),
        d,
        |j, p| (0..d).map(|r| x.right_coeff(r, j, p).clone()).collect(),
        |p, i| (0..d).map(|r| x.left_coeff(i, r, p).clone()).collect(),
    )
    .expect("dual tensors are shape-correct")
}

/// An iterated dual `X^(n)` together with its base and level.
#[derive(Debug, Clone)]
pub struct DualTower {
    pub base: Bimodule,
    pub level: usize,
    pub module: Bimodule,
}

pub fn iterated_dual(x: &Bimodule, n: usize) -> DualTower {
    let mut module = x.clone();
    for _ in 0..n {
        module = dual_bimodule(&module);
    }
    DualTower {
        base: x.clone(),
        level: n,
        module,
    }
}

/// On dual-basis coordinates the double dual coincides with the original
/// module entrywise, so the canonical isomorphism is the identity matrix.
/// Returned explicitly so the identification stays checkable.
pub fn double_dual_isomorphism(x: &Bimodule) -> (Bimodule, Mat) {
    (dual_bimodule(&dual_bimodule(x)), Mat::identity(x.dim()))
}

/// H1 of `T` into the (2n-1)-th dual of `T`, against the two corner
/// computations done independently on `A` and `B`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct WeakAmenabilityReport {
    pub level: usize,
    pub h1_t: usize,
    pub h1_a: usize,
    pub h1_b: usize,
    pub identity_holds: bool,
    /// Both corner cohomologies vanish at this level.
    pub weakly_amenable: bool,
}

pub fn weak_amenability_check(
    t: &TriangularAlgebra,
    p: &HomPair,
    n: usize,
) -> Result<WeakAmenabilityReport, Error> {
    if n == 0 {
        return Err(Error::Shape(
            "the dual tower level must be at least 1".into(),
        ));
    }
    if !check_corner_units(t, p) {
        return Err(Error::Corner(
            "sigma and tau must fix the corner units".into(),
        ));
    }
    let odd = 2 * n - 1;
    let x = iterated_dual(&Bimodule::regular(t.algebra()), odd);
    let h1_t = derivation_space(t.algebra(), &x.module, p)?.h1_dim;

    let sigma = restrict_hom(t, &p.sigma)?;
    let tau = restrict_hom(t, &p.tau)?;
    let pair_a = HomPair::new(sigma.a.clone(), tau.a.clone())?;
    let pair_b = HomPair::new(sigma.b.clone(), tau.b.clone())?;
    let xa = iterated_dual(&Bimodule::regular(t.a()), odd);
    let xb = iterated_dual(&Bimodule::regular(t.b()), odd);
    let h1_a = derivation_space(t.a(), &xa.module, &pair_a)?.h1_dim;
    let h1_b = derivation_space(t.b(), &xb.module, &pair_b)?.h1_dim;

    Ok(WeakAmenabilityReport {
        level: n,
        h1_t,
        h1_a,
        h1_b,
        identity_holds: h1_t == h1_a + h1_b,
        weakly_amenable: h1_a == 0 && h1_b == 0,
    })
}

/// The T-bimodule on `A* + M* + B*` with the exotic actions
/// `[a m; 0 b].[f h; 0 g] = [0, b.h; 0, 0]` and
/// `[f h; 0 g].[a m; 0 b] = [0, h.a; 0, 0]`.
///
/// Both products annihilate the `f` and `g` components, so the module is
/// deliberately non-unital; validation ignores the unitality rules.
#[derive(Debug, Clone)]
pub struct ObstructionModule {
    pub module: Bimodule,
}

pub fn build_obstruction_module(t: &TriangularAlgebra) -> ObstructionModule {
    let alg = t.algebra().clone();
    let da = t.a_dim();
    let dm = t.m_dim();
    let dim = t.dim();
    let m = t.m().clone();
    let m2 = m.clone();
    let module = Bimodule::from_actions(
        alg.clone(),
        alg,
        dim,
        // only the B component of T hits the M* component of X
        move |i, p| {
            let mut out = vec![Rat::zero(); dim];
            if i >= da + dm && (da..da + dm).contains(&p) {
                let j = i - da - dm;
                let h = p - da;
                for r in 0..dm {
                    out[da + r] = m.right_coeff(r, j, h).clone();
                }
            }
            out
        },
        // only the A component of T hits the M* component of X
        move |p, i| {
            let mut out = vec![Rat::zero(); dim];
            if i < da && (da..da + dm).contains(&p) {
                let h = p - da;
                for r in 0..dm {
                    out[da + r] = m2.left_coeff(i, r, h).clone();
                }
            }
            out
        },
    )
    .expect("obstruction module tensors are shape-correct");
    debug_assert!(module
        .check()
        .is_valid_ignoring(&["unital-left", "unital-right"]));
    ObstructionModule { module }
}

/// The derivation `D([a m; 0 b]) = [0, sigma(m)-hat; 0, 0]` into the dual
/// of the obstruction module, with the double dual identified with
/// `A + M + B`.
#[derive(Debug, Clone)]
pub struct ObstructionDerivation {
    pub matrix: Mat,
    /// The dual of the obstruction module, target of the derivation.
    pub target: Bimodule,
    /// The M-block of sigma.
    pub sigma_m: Mat,
    /// The identification of the target coordinates with `A + M + B`
    /// (the double-dual basis equals the original basis).
    pub identification: Mat,
}

pub fn build_obstruction_derivation(
    t: &TriangularAlgebra,
    sigma: &AlgebraHom,
) -> Result<ObstructionDerivation, Error> {
    let parts = restrict_hom(t, sigma)?;
    let target = dual_bimodule(&build_obstruction_module(t).module);
    let da = t.a_dim();
    let dm = t.m_dim();
    let mut matrix = Mat::zeros(t.dim(), t.dim());
    for r in 0..dm {
        for c in 0..dm {
            matrix.set(da + r, da + c, parts.m.at(r, c).clone());
        }
    }
    let pair = HomPair::new(sigma.clone(), sigma.clone())?;
    let bad = crate::cohomology::leibniz_violations(t.algebra(), &target, &pair, &matrix);
    if !bad.is_empty() {
        return Err(Error::Invalid(format!(
            "obstruction map fails the (sigma,sigma) Leibniz rule at {} pairs",
            bad.len()
        )));
    }
    Ok(ObstructionDerivation {
        matrix,
        target,
        sigma_m: parts.m,
        identification: Mat::identity(t.dim()),
    })
}

/// Verdict of the innerness test for the obstruction derivation. The two
/// determinations (direct witness solve and the sigma(M) span check) are
/// reported separately so their agreement stays visible.
#[derive(Debug, Clone)]
pub struct ObstructionVerdict {
    pub inner: bool,
    pub witness: Option<Vec<Rat>>,
    pub sigma_m_is_zero: bool,
}

impl ObstructionVerdict {
    pub fn determinations_agree(&self) -> bool {
        self.inner == self.sigma_m_is_zero
    }
}

pub fn obstruction_inner_test(
    t: &TriangularAlgebra,
    sigma: &AlgebraHom,
    d: &ObstructionDerivation,
) -> Result<ObstructionVerdict, Error> {
    let dt = t.dim();
    let dx = d.target.dim();
    // solve D(e_i) = sigma(e_i).w - w.sigma(e_i) for a witness w
    let mut sys = Mat::zeros(dt * dx, dx);
    let mut rhs = Vec::with_capacity(dt * dx);
    for i in 0..dt {
        let s = sigma.apply(&t.algebra().basis_vec(i));
        let block = d.target.left_op(&s).sub(&d.target.right_op(&s))?;
        for q in 0..dx {
            for c in 0..dx {
                sys.set(i * dx + q, c, block.at(q, c).clone());
            }
            rhs.push(d.matrix.at(q, i).clone());
        }
    }
    let witness = sys.solve(&rhs)?;
    Ok(ObstructionVerdict {
        inner: witness.is_some(),
        witness,
        sigma_m_is_zero: d.sigma_m.is_zero(),
    })
}

/// Vanishing of H1 into the duals of a supplied finite family of
/// bimodules. This is a relativized surrogate: it quantifies over the
/// family only, never over all bimodules.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RelativeAmenabilityReport {
    pub h1_dims: Vec<usize>,
    pub amenable_relative_to_family: bool,
}

pub fn relative_amenability_check(
    a: &FiniteAlgebra,
    p: &HomPair,
    modules: &[Bimodule],
) -> Result<RelativeAmenabilityReport, Error> {
    let mut h1_dims = Vec::with_capacity(modules.len());
    for x in modules {
        let dual = dual_bimodule(x);
        h1_dims.push(derivation_space(a, &dual, p)?.h1_dim);
    }
    Ok(RelativeAmenabilityReport {
        amenable_relative_to_family: h1_dims.iter().all(|&d| d == 0),
        h1_dims,
    })
}

/// Per-module H1 dimensions on the quotient level and on the ambient
/// level after pulling back along the projection. `flagged` marks
/// instances where the quotient cohomology is nonzero while the
/// pulled-back one vanishes.
#[derive(Debug, Clone, serde::Serialize)]
pub struct QuotientTransferReport {
    pub quotient_dim: usize,
    pub quotient_h1: Vec<usize>,
    pub ambient_h1: Vec<usize>,
    pub flagged: Vec<bool>,
}

pub fn transfer_along_quotient(
    a: &FiniteAlgebra,
    ideal: &Ideal,
    p: &HomPair,
    modules: &[Bimodule],
) -> Result<QuotientTransferReport, Error> {
    let q = crate::algebra::quotient_algebra(a, ideal)?;
    let (quotient_h1, ambient_h1) = transfer_levels(&q, p, modules)?;
    let flagged = quotient_h1
        .iter()
        .zip(&ambient_h1)
        .map(|(&qh, &ah)| qh > 0 && ah == 0)
        .collect();
    Ok(QuotientTransferReport {
        quotient_dim: q.algebra.dim(),
        quotient_h1,
        ambient_h1,
        flagged,
    })
}

fn transfer_levels(
    q: &QuotientAlgebra,
    p: &HomPair,
    modules: &[Bimodule],
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let sigma_hat = q.induced_hom(&p.sigma)?;
    let tau_hat = q.induced_hom(&p.tau)?;
    let pair_hat = HomPair::new(sigma_hat, tau_hat)?;
    let mut quotient_h1 = Vec::new();
    let mut ambient_h1 = Vec::new();
    for x in modules {
        let dual_q = dual_bimodule(x);
        quotient_h1.push(derivation_space(&q.algebra, &dual_q, &pair_hat)?.h1_dim);
        let pulled = q.pull_back(x)?;
        let dual_a = dual_bimodule(&pulled);
        ambient_h1.push(derivation_space(&q.ambient, &dual_a, p)?.h1_dim);
    }
    Ok((quotient_h1, ambient_h1))
}
