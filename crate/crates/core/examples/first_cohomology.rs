//! Computes Z1, B1 and H1 for a few (algebra, module, hom pair) contexts
//! and prints the derivation bases.

use tricohom::algebra::{Bimodule, HomPair};
use tricohom::catalog;
use tricohom::cohomology::derivation_space;
use tricohom::rat::Rat;

fn main() {
    // upper-triangular 2x2 matrices acting on themselves
    let t2 = catalog::t2().algebra().clone();
    let x = Bimodule::regular(&t2);
    let id = HomPair::identity(&t2);
    let ds = derivation_space(&t2, &x, &id).unwrap();
    println!(
        "H1(T2, T2): Z1={} B1={} H1={}",
        ds.z1_basis.len(),
        ds.b1_basis.len(),
        ds.h1_dim
    );
    for (k, d) in ds.z1_basis.iter().enumerate() {
        println!("  derivation {k}: {d:?}");
    }

    // a twisted pair: sigma scales the off-diagonal block by 2
    let t = catalog::t2();
    let sigma = catalog::m_scaling(&t, Rat::from_int(2)).unwrap();
    let pair = HomPair::new(sigma, tricohom::AlgebraHom::identity(&t2)).unwrap();
    let ds = derivation_space(&t2, &x, &pair).unwrap();
    println!(
        "\ntwisted by the 2-scaling: Z1={} B1={} H1={}",
        ds.z1_basis.len(),
        ds.b1_basis.len(),
        ds.h1_dim
    );

    // a context with nonvanishing cohomology: T2 into its off-diagonal span
    let m = catalog::m_corner_module(&t);
    let ds = derivation_space(&t2, &m, &id).unwrap();
    println!(
        "\nH1(T2, span(e12)): Z1={} B1={} H1={}",
        ds.z1_basis.len(),
        ds.b1_basis.len(),
        ds.h1_dim
    );
    println!("  the class of e12 -> e12 is not inner inside the module");
}
