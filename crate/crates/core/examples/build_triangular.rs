//! Builds triangular algebras from components and inspects their block
//! structure and corner idempotents.

use tricohom::algebra::Bimodule;
use tricohom::catalog;
use tricohom::triangular::build_tri;

fn main() {
    let t2 = catalog::t2();
    println!(
        "T2 = Tri(Q, Q, Q): dim {} = {} + {} + {}",
        t2.dim(),
        t2.a_dim(),
        t2.m_dim(),
        t2.b_dim()
    );
    println!("  basis labels: {:?}", t2.algebra().labels());
    println!("  idempotent e = 1_A + 0: {:?}", rats(&t2.idempotent_e()));
    println!("  complement f = 0 + 1_B: {:?}", rats(&t2.idempotent_f()));

    let t3 = catalog::t3();
    println!(
        "\nT3 = Tri(T2, Q^2, Q): dim {} = {} + {} + {}",
        t3.dim(),
        t3.a_dim(),
        t3.m_dim(),
        t3.b_dim()
    );
    println!("  valid: {}", t3.algebra().check().is_valid());

    // a bigger custom one: Tri(A, A, A) with A = T2 acting on itself
    let a = catalog::t2().algebra().clone();
    let t = build_tri(&a, &Bimodule::regular(&a), &a).unwrap();
    println!("\nTri(T2, T2, T2): dim {}", t.dim());
    println!("  valid: {}", t.algebra().check().is_valid());
}

fn rats(v: &[tricohom::Rat]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}
