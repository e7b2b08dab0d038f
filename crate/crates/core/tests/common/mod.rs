//! Shared test support: an independently coded brute-force oracle for the
//! derivation-space dimensions, and generators for randomized valid
//! instances (algebras, triangular constructions, corner-preserving hom
//! pairs, modules with a vanishing AB corner).
//!
//! The oracle deliberately shares no assembly code with the library: it
//! works with symbolic linear forms and its own Gaussian elimination over
//! `BigRational`.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use num::BigRational;
use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tricohom::algebra::{AlgebraHom, Bimodule, FiniteAlgebra, HomPair};
use tricohom::catalog;
use tricohom::linalg::Mat;
use tricohom::rat::Rat;
use tricohom::triangular::{build_tri, lift_hom, TriangularAlgebra};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------
// oracle

fn big(r: &Rat) -> BigRational {
    r.to_string().parse().expect("rational round-trips")
}

/// Row rank by plain Gaussian elimination, coded here from scratch.
fn oracle_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &p;
                for k in c..cols {
                    let s = &rows[rank][k] * &f;
                    rows[r][k] = &rows[r][k] - &s;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A vector of linear forms in the unknown entries of `d`.
type FormVec = Vec<Vec<BigRational>>;

fn zero_forms(dx: usize, unknowns: usize) -> FormVec {
    vec![vec![BigRational::zero(); unknowns]; dx]
}

/// `d` applied to a coordinate vector, as linear forms; unknown `(k, q)`
/// is the entry of `d(e_k)` at coordinate `q`.
fn apply_d(v: &[Rat], dx: usize, unknowns: usize) -> FormVec {
    let mut out = zero_forms(dx, unknowns);
    for (k, vk) in v.iter().enumerate() {
        if vk.is_zero() {
            continue;
        }
        let c = big(vk);
        for (q, form) in out.iter_mut().enumerate() {
            form[k * dx + q] = &form[k * dx + q] + &c;
        }
    }
    out
}

fn act_left_forms(x: &Bimodule, a: &[Rat], forms: &FormVec, unknowns: usize) -> FormVec {
    let dx = x.dim();
    let mut out = zero_forms(dx, unknowns);
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for p in 0..dx {
            for q in 0..dx {
                let c = ai * x.left_coeff(i, p, q);
                if c.is_zero() {
                    continue;
                }
                let cb = big(&c);
                for u in 0..unknowns {
                    if !forms[p][u].is_zero() {
                        let s = &forms[p][u] * &cb;
                        out[q][u] = &out[q][u] + &s;
                    }
                }
            }
        }
    }
    out
}

fn act_right_forms(x: &Bimodule, forms: &FormVec, b: &[Rat], unknowns: usize) -> FormVec {
    let dx = x.dim();
    let mut out = zero_forms(dx, unknowns);
    for (j, bj) in b.iter().enumerate() {
        if bj.is_zero() {
            continue;
        }
        for p in 0..dx {
            for q in 0..dx {
                let c = bj * x.right_coeff(p, j, q);
                if c.is_zero() {
                    continue;
                }
                let cb = big(&c);
                for u in 0..unknowns {
                    if !forms[p][u].is_zero() {
                        let s = &forms[p][u] * &cb;
                        out[q][u] = &out[q][u] + &s;
                    }
                }
            }
        }
    }
    out
}

/// Brute-force dims `(z1, b1, h1)` built from symbolic linear forms.
pub fn oracle_dims(a: &FiniteAlgebra, x: &Bimodule, p: &HomPair) -> (usize, usize, usize) {
    let da = a.dim();
    let dx = x.dim();
    if dx == 0 {
        return (0, 0, 0);
    }
    let unknowns = da * dx;
    let mut rows = Vec::new();
    for i in 0..da {
        for j in 0..da {
            let ei = a.basis_vec(i);
            let ej = a.basis_vec(j);
            let lhs = apply_d(&a.mul_vec(&ei, &ej), dx, unknowns);
            let di = apply_d(&ei, dx, unknowns);
            let dj = apply_d(&ej, dx, unknowns);
            let t1 = act_right_forms(x, &di, &p.sigma.apply(&ej), unknowns);
            let t2 = act_left_forms(x, &p.tau.apply(&ei), &dj, unknowns);
            for q in 0..dx {
                let row: Vec<BigRational> = (0..unknowns)
                    .map(|u| &(&lhs[q][u] - &t1[q][u]) - &t2[q][u])
                    .collect();
                rows.push(row);
            }
        }
    }
    let z1 = unknowns - oracle_rank(rows);

    // dim B1 = rank of the twisted-centralizer system tau(a) w = w sigma(a)
    let mut crows = Vec::new();
    for i in 0..da {
        let t = p.tau.apply(&a.basis_vec(i));
        let s = p.sigma.apply(&a.basis_vec(i));
        for q in 0..dx {
            let mut row = vec![BigRational::zero(); dx];
            for (w, slot) in row.iter_mut().enumerate() {
                let mut c = Rat::zero();
                for (l, tl) in t.iter().enumerate() {
                    c = &c + &(tl * x.left_coeff(l, w, q));
                }
                for (l, sl) in s.iter().enumerate() {
                    c = &c - &(sl * x.right_coeff(w, l, q));
                }
                *slot = big(&c);
            }
            crows.push(row);
        }
    }
    let b1 = oracle_rank(crows);
    (z1, b1, z1 - b1)
}

// ---------------------------------------------------------------------
// randomized instances

const SMALL: [(i64, i64); 7] = [(1, 1), (-1, 1), (2, 1), (1, 2), (-1, 2), (3, 1), (-2, 1)];

pub fn small_rat(r: &mut ChaCha8Rng) -> Rat {
    let (n, d) = SMALL[r.gen_range(0..SMALL.len())];
    Rat::new(n, d)
}

/// Invertible by construction: a product of random elementary operations
/// applied to the identity.
pub fn random_invertible(n: usize, r: &mut ChaCha8Rng) -> Mat {
    let mut m = Mat::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = r.gen_range(0..n);
        let mut j = r.gen_range(0..n);
        while j == i {
            j = r.gen_range(0..n);
        }
        let c = small_rat(r);
        // row_i += c * row_j
        for k in 0..n {
            let v = m.at(i, k) + &(&c * m.at(j, k));
            m.set(i, k, v);
        }
    }
    m
}

/// Transports the structure constants along the basis change `e'_i = P e_i`.
pub fn change_basis_algebra(a: &FiniteAlgebra, p: &Mat) -> FiniteAlgebra {
    let pinv = p.invert().expect("basis change is invertible");
    FiniteAlgebra::from_products(
        a.labels().to_vec(),
        pinv.mul_vec(a.unit()).expect("shape"),
        |i, j| {
            let ei = p.column(i);
            let ej = p.column(j);
            pinv.mul_vec(&a.mul_vec(&ei, &ej)).expect("shape")
        },
    )
    .expect("transported algebra is shape-correct")
}

/// Transports a bimodule along basis changes of both algebras and of the
/// module itself.
pub fn change_basis_bimodule(
    x: &Bimodule,
    left: &FiniteAlgebra,
    pa: &Mat,
    right: &FiniteAlgebra,
    pb: &Mat,
    q: &Mat,
) -> Bimodule {
    let qinv = q.invert().expect("basis change is invertible");
    Bimodule::from_actions(
        left.clone(),
        right.clone(),
        x.dim(),
        |i, p| {
            qinv.mul_vec(&x.act_left(&pa.column(i), &q.column(p)))
                .expect("shape")
        },
        |p, j| {
            qinv.mul_vec(&x.act_right(&q.column(p), &pb.column(j)))
                .expect("shape")
        },
    )
    .expect("transported bimodule is shape-correct")
}

/// A random valid `(A, M, B)` triple: a small catalog shape transported
/// along random basis changes.
pub fn random_triple(r: &mut ChaCha8Rng) -> (FiniteAlgebra, Bimodule, FiniteAlgebra) {
    let shape = r.gen_range(0..5);
    let (a, m, b): (FiniteAlgebra, Bimodule, FiniteAlgebra) = match shape {
        0 => {
            let k = r.gen_range(1..=2);
            (
                catalog::scalars(),
                catalog::scalar_bimodule(k),
                catalog::scalars(),
            )
        }
        1 => (
            catalog::t2().algebra().clone(),
            catalog::column_module(),
            catalog::scalars(),
        ),
        2 => (
            catalog::scalars(),
            row_module(),
            catalog::t2().algebra().clone(),
        ),
        3 => (catalog::scalars_pair(), diag_module(), catalog::scalars()),
        _ => (
            catalog::truncated_polynomials(2),
            dual_numbers_column(),
            catalog::scalars(),
        ),
    };
    let pa = random_invertible(a.dim(), r);
    let pb = random_invertible(b.dim(), r);
    let q = random_invertible(m.dim(), r);
    let a2 = change_basis_algebra(&a, &pa);
    let b2 = change_basis_algebra(&b, &pb);
    let m2 = change_basis_bimodule(&m, &a2, &pa, &b2, &pb, &q);
    (a2, m2, b2)
}

/// Rows of length 2 as a (scalars, T2)-bimodule.
pub fn row_module() -> Bimodule {
    let s = catalog::scalars();
    let t2 = catalog::t2().algebra().clone();
    Bimodule::from_actions(
        s,
        t2,
        2,
        |_, p| {
            let mut v = vec![Rat::zero(); 2];
            v[p] = Rat::one();
            v
        },
        |p, j| {
            // (x1, x2) e11 = (x1, 0); (x1, x2) e12 = (0, x1); (x1, x2) e22 = (0, x2)
            let mut v = vec![Rat::zero(); 2];
            match (p, j) {
                (0, 0) => v[0] = Rat::one(),
                (0, 1) => v[1] = Rat::one(),
                (1, 2) => v[1] = Rat::one(),
                _ => {}
            }
            v
        },
    )
    .expect("row module is shape-correct")
}

/// Q^2 as a (scalars + scalars, scalars)-bimodule with the coordinatewise
/// left action.
pub fn diag_module() -> Bimodule {
    let s2 = catalog::scalars_pair();
    let s = catalog::scalars();
    Bimodule::from_actions(
        s2,
        s,
        2,
        |i, p| {
            let mut v = vec![Rat::zero(); 2];
            if i == p {
                v[p] = Rat::one();
            }
            v
        },
        |p, _| {
            let mut v = vec![Rat::zero(); 2];
            v[p] = Rat::one();
            v
        },
    )
    .expect("diag module is shape-correct")
}

/// `Q[x]/(x^2)` acting on itself from the left, scalars on the right.
pub fn dual_numbers_column() -> Bimodule {
    let a = catalog::truncated_polynomials(2);
    let s = catalog::scalars();
    let a2 = a.clone();
    Bimodule::from_actions(
        a.clone(),
        s,
        2,
        move |i, p| a2.mul_vec(&a2.basis_vec(i), &a2.basis_vec(p)),
        |p, _| {
            let mut v = vec![Rat::zero(); 2];
            v[p] = Rat::one();
            v
        },
    )
    .expect("dual numbers module is shape-correct")
}

/// A random invertible element of the algebra (invertible as a left
/// multiplier, which in a unital algebra means invertible).
pub fn random_invertible_element(a: &FiniteAlgebra, r: &mut ChaCha8Rng) -> Vec<Rat> {
    loop {
        let mut u: Vec<Rat> = a.unit().to_vec();
        for slot in u.iter_mut() {
            if r.gen_bool(0.5) {
                *slot = &*slot + &small_rat(r);
            }
        }
        let cols: Vec<Vec<Rat>> = (0..a.dim())
            .map(|i| a.mul_vec(&u, &a.basis_vec(i)))
            .collect();
        let lm = Mat::from_columns(a.dim(), &cols).expect("shape");
        if lm.invert().is_some() {
            return u;
        }
    }
}

fn inverse_element(a: &FiniteAlgebra, u: &[Rat]) -> Vec<Rat> {
    let cols: Vec<Vec<Rat>> = (0..a.dim())
        .map(|i| a.mul_vec(u, &a.basis_vec(i)))
        .collect();
    let lm = Mat::from_columns(a.dim(), &cols).expect("shape");
    lm.invert()
        .expect("element is invertible")
        .mul_vec(a.unit())
        .expect("shape")
}

/// A random corner-preserving endomorphism of `T`: conjugation by
/// invertible `u` in `A` and `v` in `B` on the diagonal blocks, and
/// `m -> lambda u m v^(-1)` off the diagonal.
pub fn random_corner_hom(t: &TriangularAlgebra, r: &mut ChaCha8Rng) -> AlgebraHom {
    let a = t.a();
    let b = t.b();
    let m = t.m();
    let u = random_invertible_element(a, r);
    let v = random_invertible_element(b, r);
    let uinv = inverse_element(a, &u);
    let vinv = inverse_element(b, &v);
    let lambda = small_rat(r);
    let ha_cols: Vec<Vec<Rat>> = (0..a.dim())
        .map(|i| a.mul_vec(&a.mul_vec(&u, &a.basis_vec(i)), &uinv))
        .collect();
    let hb_cols: Vec<Vec<Rat>> = (0..b.dim())
        .map(|j| b.mul_vec(&b.mul_vec(&v, &b.basis_vec(j)), &vinv))
        .collect();
    let hm_cols: Vec<Vec<Rat>> = (0..m.dim())
        .map(|p| {
            m.act_left(&u, &m.act_right(&m.basis_vec(p), &vinv))
                .iter()
                .map(|c| &lambda * c)
                .collect()
        })
        .collect();
    let ha = AlgebraHom::new(
        a.clone(),
        a.clone(),
        Mat::from_columns(a.dim(), &ha_cols).expect("shape"),
    )
    .expect("conjugation is shape-correct");
    let hb = AlgebraHom::new(
        b.clone(),
        b.clone(),
        Mat::from_columns(b.dim(), &hb_cols).expect("shape"),
    )
    .expect("conjugation is shape-correct");
    let hm = Mat::from_columns(m.dim(), &hm_cols).expect("shape");
    lift_hom(t, &ha, &hm, &hb).expect("conjugation pair lifts")
}

/// Menu of corner modules for assembling a T-bimodule with X_AB = 0.
#[derive(Clone, Copy)]
pub enum CornerChoice {
    Zero,
    Regular,
    Dual,
}

/// A T-bimodule `X = X_AA + X_BA + X_BB` (so `X_AB = 0`) in which the
/// M-block of T acts as zero, optionally twisted by a random basis change.
pub fn assemble_ab_zero_module(
    t: &TriangularAlgebra,
    aa: CornerChoice,
    ba: bool,
    bb: CornerChoice,
    r: &mut ChaCha8Rng,
) -> Bimodule {
    let corner = |alg: &FiniteAlgebra, c: CornerChoice| -> Option<Bimodule> {
        match c {
            CornerChoice::Zero => None,
            CornerChoice::Regular => Some(Bimodule::regular(alg)),
            CornerChoice::Dual => Some(tricohom::dual_bimodule(&Bimodule::regular(alg))),
        }
    };
    let xaa = corner(t.a(), aa);
    let xbb = corner(t.b(), bb);
    let xba = if ba {
        Some(tricohom::dual_bimodule(t.m()))
    } else {
        None
    };
    let daa = xaa.as_ref().map_or(0, Bimodule::dim);
    let dba = xba.as_ref().map_or(0, Bimodule::dim);
    let dbb = xbb.as_ref().map_or(0, Bimodule::dim);
    let dim = daa + dba + dbb;
    let da = t.a_dim();
    let dm = t.m_dim();
    let alg = t.algebra().clone();
    let place = |offset: usize, v: Vec<Rat>, out: &mut Vec<Rat>| {
        out[offset..offset + v.len()].clone_from_slice(&v)
    };
    let left = {
        let xaa = xaa.clone();
        let xba = xba.clone();
        let xbb = xbb.clone();
        move |i: usize, p: usize| {
            let mut out = vec![Rat::zero(); dim];
            if i < da {
                // A acts on X_AA (left) and X_BA (right algebra is A, so
                // only the left T-action through A touches X_AA)
                if p < daa {
                    if let Some(x) = &xaa {
                        place(0, x.act_left(&basis(da, i), &basis(daa, p)), &mut out);
                    }
                }
            } else if i >= da + dm {
                let j = i - da - dm;
                if (daa..daa + dba).contains(&p) {
                    if let Some(x) = &xba {
                        place(
                            daa,
                            x.act_left(&basis(x.left_algebra().dim(), j), &basis(dba, p - daa)),
                            &mut out,
                        );
                    }
                } else if p >= daa + dba {
                    if let Some(x) = &xbb {
                        place(
                            daa + dba,
                            x.act_left(
                                &basis(x.left_algebra().dim(), j),
                                &basis(dbb, p - daa - dba),
                            ),
                            &mut out,
                        );
                    }
                }
            }
            out
        }
    };
    let right = {
        let xaa = xaa.clone();
        let xba = xba.clone();
        let xbb = xbb.clone();
        move |p: usize, i: usize| {
            let mut out = vec![Rat::zero(); dim];
            if i < da {
                if p < daa {
                    if let Some(x) = &xaa {
                        place(0, x.act_right(&basis(daa, p), &basis(da, i)), &mut out);
                    }
                } else if (daa..daa + dba).contains(&p) {
                    if let Some(x) = &xba {
                        place(
                            daa,
                            x.act_right(&basis(dba, p - daa), &basis(da, i)),
                            &mut out,
                        );
                    }
                }
            } else if i >= da + dm && p >= daa + dba {
                let j = i - da - dm;
                if let Some(x) = &xbb {
                    place(
                        daa + dba,
                        x.act_right(
                            &basis(dbb, p - daa - dba),
                            &basis(x.right_algebra().dim(), j),
                        ),
                        &mut out,
                    );
                }
            }
            out
        }
    };
    let plain = Bimodule::from_actions(alg.clone(), alg.clone(), dim, left, right)
        .expect("assembled module is shape-correct");
    assert!(plain.check().is_valid(), "assembled module breaks an axiom");
    if dim < 2 {
        return plain;
    }
    let q = random_invertible(dim, r);
    change_basis_bimodule(
        &plain,
        &alg,
        &Mat::identity(alg.dim()),
        &alg,
        &Mat::identity(alg.dim()),
        &q,
    )
}

fn basis(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// A full randomized instance for the decomposition theorem: triangular
/// algebra, a module with X_AB = 0, and a corner-preserving hom pair.
pub fn random_instance(r: &mut ChaCha8Rng) -> (TriangularAlgebra, Bimodule, HomPair) {
    let (a, m, b) = random_triple(r);
    let t = build_tri(&a, &m, &b).expect("random triple builds");
    let choices = [
        CornerChoice::Zero,
        CornerChoice::Regular,
        CornerChoice::Dual,
    ];
    let x = assemble_ab_zero_module(
        &t,
        choices[r.gen_range(0..3)],
        r.gen_bool(0.5),
        choices[r.gen_range(0..3)],
        r,
    );
    let sigma = random_corner_hom(&t, r);
    let tau = random_corner_hom(&t, r);
    let pair = HomPair::new(sigma, tau).expect("homs are over T");
    (t, x, pair)
}
