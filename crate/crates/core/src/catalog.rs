//! Ready-made small algebras, bimodules and endomorphisms used by the
//! examples and the test catalog: scalars, upper-triangular matrix
//! algebras, corner modules and M-scaling automorphisms.

use crate::algebra::{AlgebraHom, Bimodule, FiniteAlgebra};
use crate::linalg::Mat;
use crate::rat::Rat;
use crate::triangular::{build_tri, lift_hom, TriangularAlgebra};
use crate::Error;

/// The one-dimensional algebra of scalars.
pub fn scalars() -> FiniteAlgebra {
    FiniteAlgebra::from_products(vec!["1".into()], vec![Rat::one()], |_, _| vec![Rat::one()])
        .expect("scalars are shape-correct")
}

/// `scalars + scalars`, the smallest algebra with orthogonal idempotents.
pub fn scalars_pair() -> FiniteAlgebra {
    crate::algebra::direct_sum(&scalars(), &scalars())
}

/// The truncated polynomial algebra `Q[x]/(x^k)`, basis `1, x, ..., x^(k-1)`.
pub fn truncated_polynomials(k: usize) -> FiniteAlgebra {
    assert!(k >= 1);
    let labels: Vec<String> = (0..k)
        .map(|i| if i == 0 { "1".into() } else { format!("x^{i}") })
        .collect();
    let mut unit = vec![Rat::zero(); k];
    unit[0] = Rat::one();
    FiniteAlgebra::from_products(labels, unit, |i, j| {
        let mut out = vec![Rat::zero(); k];
        if i + j < k {
            out[i + j] = Rat::one();
        }
        out
    })
    .expect("truncated polynomials are shape-correct")
}

/// A free rank-`k` bimodule between two copies of the scalars.
pub fn scalar_bimodule(k: usize) -> Bimodule {
    let s = scalars();
    Bimodule::from_actions(
        s.clone(),
        s,
        k,
        |_, p| {
            let mut v = vec![Rat::zero(); k];
            v[p] = Rat::one();
            v
        },
        |p, _| {
            let mut v = vec![Rat::zero(); k];
            v[p] = Rat::one();
            v
        },
    )
    .expect("scalar bimodule is shape-correct")
}

/// `T_2`, the 3-dimensional algebra of upper-triangular 2x2 matrices,
/// built as `Tri(scalars, scalars, scalars)`. Basis order: e11, e12, e22.
pub fn t2() -> TriangularAlgebra {
    build_tri(&scalars(), &scalar_bimodule(1), &scalars()).expect("T2 builds")
}

/// Column vectors of length 2 as a T2-scalars-bimodule; T2 acts on the
/// left by matrix multiplication.
pub fn column_module() -> Bimodule {
    let t2 = t2().algebra().clone();
    let s = scalars();
    // T2 basis order is e11, e12, e22; columns (x1, x2):
    // e11.(x1,x2) = (x1,0), e12.(x1,x2) = (x2,0), e22.(x1,x2) = (0,x2)
    Bimodule::from_actions(
        t2,
        s,
        2,
        |i, p| {
            let mut v = vec![Rat::zero(); 2];
            match (i, p) {
                (0, 0) => v[0] = Rat::one(),
                (1, 1) => v[0] = Rat::one(),
                (2, 1) => v[1] = Rat::one(),
                _ => {}
            }
            v
        },
        |p, _| {
            let mut v = vec![Rat::zero(); 2];
            v[p] = Rat::one();
            v
        },
    )
    .expect("column module is shape-correct")
}

/// `T_3 = Tri(T_2, M_{2,1}, scalars)`, a 6-dimensional algebra isomorphic
/// to upper-triangular 3x3 matrices.
pub fn t3() -> TriangularAlgebra {
    build_tri(t2().algebra(), &column_module(), &scalars()).expect("T3 builds")
}

/// `M` of a triangular algebra as a `T`-bimodule: `A` acts on the left
/// through the `A`-block, `B` on the right through the `B`-block, and the
/// `M`-block of `T` acts as zero.
pub fn m_corner_module(t: &TriangularAlgebra) -> Bimodule {
    let alg = t.algebra().clone();
    let m = t.m().clone();
    let da = t.a_dim();
    let dm = t.m_dim();
    Bimodule::from_actions(
        alg.clone(),
        alg,
        dm,
        move |i, p| {
            let mut e = vec![Rat::zero(); da];
            if i < da {
                e[i] = Rat::one();
                m.act_left(&e, &m.basis_vec(p))
            } else {
                vec![Rat::zero(); dm]
            }
        },
        {
            let m = t.m().clone();
            let db = t.b_dim();
            move |p, j| {
                if j >= da + dm {
                    let mut e = vec![Rat::zero(); db];
                    e[j - da - dm] = Rat::one();
                    m.act_right(&m.basis_vec(p), &e)
                } else {
                    vec![Rat::zero(); dm]
                }
            }
        },
    )
    .expect("M corner module is shape-correct")
}

/// `A` of a triangular algebra as a `T`-bimodule through the `A`-block.
pub fn a_corner_module(t: &TriangularAlgebra) -> Bimodule {
    let alg = t.algebra().clone();
    let a = t.a().clone();
    let da = t.a_dim();
    let a2 = a.clone();
    Bimodule::from_actions(
        alg.clone(),
        alg,
        da,
        move |i, p| {
            if i < da {
                a.mul_vec(&a.basis_vec(i), &a.basis_vec(p))
            } else {
                vec![Rat::zero(); da]
            }
        },
        move |p, j| {
            if j < da {
                a2.mul_vec(&a2.basis_vec(p), &a2.basis_vec(j))
            } else {
                vec![Rat::zero(); da]
            }
        },
    )
    .expect("A corner module is shape-correct")
}

/// `B` of a triangular algebra as a `T`-bimodule through the `B`-block.
pub fn b_corner_module(t: &TriangularAlgebra) -> Bimodule {
    let alg = t.algebra().clone();
    let b = t.b().clone();
    let offset = t.a_dim() + t.m_dim();
    let db = t.b_dim();
    let b2 = b.clone();
    Bimodule::from_actions(
        alg.clone(),
        alg,
        db,
        move |i, p| {
            if i >= offset {
                b.mul_vec(&b.basis_vec(i - offset), &b.basis_vec(p))
            } else {
                vec![Rat::zero(); db]
            }
        },
        move |p, j| {
            if j >= offset {
                b2.mul_vec(&b2.basis_vec(p), &b2.basis_vec(j - offset))
            } else {
                vec![Rat::zero(); db]
            }
        },
    )
    .expect("B corner module is shape-correct")
}

/// The automorphism of `T` scaling the M-block by `lambda` and fixing the
/// diagonal blocks.
pub fn m_scaling(t: &TriangularAlgebra, lambda: Rat) -> Result<AlgebraHom, Error> {
    let hm = Mat::identity(t.m_dim()).scale(&lambda);
    lift_hom(
        t,
        &AlgebraHom::identity(t.a()),
        &hm,
        &AlgebraHom::identity(t.b()),
    )
}
