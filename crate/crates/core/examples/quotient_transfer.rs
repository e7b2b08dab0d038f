//! Quotients by two-sided ideals, induced endomorphisms, and the
//! consistency of H1 vanishing across a quotient map.

use tricohom::algebra::{quotient_algebra, Bimodule, HomPair, Ideal};
use tricohom::catalog;
use tricohom::duals::{relative_amenability_check, transfer_along_quotient};
use tricohom::rat::Rat;

fn main() {
    // T2 modulo its off-diagonal ideal is the diagonal pair of scalars
    let t2 = catalog::t2().algebra().clone();
    let ideal = Ideal::new(vec![t2.basis_vec(1)]);
    println!("ideal check: {:?}", ideal.check(&t2).unwrap().is_valid());
    let q = quotient_algebra(&t2, &ideal).unwrap();
    println!("T2 / span(e12): dim {}", q.algebra.dim());

    // the 2-scaling automorphism preserves the ideal and induces the
    // identity downstairs
    let sigma = catalog::m_scaling(&catalog::t2(), Rat::from_int(2)).unwrap();
    let induced = q.induced_hom(&sigma).unwrap();
    println!(
        "induced hom of the 2-scaling is the identity: {}",
        induced.matrix == tricohom::Mat::identity(q.algebra.dim())
    );

    // vanishing transfers: compare H1 into dual modules on both levels
    let pair = HomPair::identity(&t2);
    let family = vec![Bimodule::regular(&q.algebra)];
    let report = transfer_along_quotient(&t2, &ideal, &pair, &family).unwrap();
    println!(
        "h1 into duals: quotient {:?}, ambient (pulled back) {:?}",
        report.quotient_h1, report.ambient_h1
    );
    println!("consistent: {}", report.flagged.iter().all(|&f| !f));

    // the relativized amenability check on a finite family
    let rel = relative_amenability_check(&t2, &pair, &[Bimodule::regular(&t2)]).unwrap();
    println!(
        "T2 amenable relative to {{T2}}: {} (h1 dims {:?})",
        rel.amenable_relative_to_family, rel.h1_dims
    );
}
