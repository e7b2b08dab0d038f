//! The off-diagonal obstruction: a corner-preserving endomorphism sigma
//! of a triangular algebra yields a canonical (sigma,sigma)-derivation
//! into the dual of a special coefficient module, and that derivation is
//! inner exactly when sigma kills the off-diagonal block. So any notion
//! of amenability strong enough to make all such derivations inner forces
//! sigma(M) = 0.

use tricohom::algebra::AlgebraHom;
use tricohom::catalog;
use tricohom::duals::{build_obstruction_derivation, obstruction_inner_test};
use tricohom::rat::Rat;

fn main() {
    let t = catalog::t2();
    let cases = [
        ("identity", AlgebraHom::identity(t.algebra())),
        (
            "M-scaling by 3",
            catalog::m_scaling(&t, Rat::from_int(3)).unwrap(),
        ),
        ("M killed", catalog::m_scaling(&t, Rat::zero()).unwrap()),
    ];
    for (name, sigma) in &cases {
        let d = build_obstruction_derivation(&t, sigma).unwrap();
        let verdict = obstruction_inner_test(&t, sigma, &d).unwrap();
        println!(
            "{name}: D {}, {}, rank of sigma on M = {}, determinations agree = {}",
            if d.matrix.is_zero() {
                "zero"
            } else {
                "nonzero"
            },
            if verdict.inner { "inner" } else { "not inner" },
            d.sigma_m.rank(),
            verdict.determinations_agree()
        );
        if let Some(w) = &verdict.witness {
            println!(
                "  witness: {:?}",
                w.iter().map(Rat::to_string).collect::<Vec<_>>()
            );
        }
    }
}
