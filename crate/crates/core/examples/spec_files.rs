//! Writes a complete set of input files for the command-line tool into a
//! directory and prints the invocations that consume them.

use std::path::PathBuf;

use tricohom::algebra::{AlgebraHom, Bimodule};
use tricohom::catalog;
use tricohom::rat::Rat;
use tricohom::specfile::{
    render, AlgebraSpec, BimoduleSpec, HomSpec, IdealSpec, SpecFile, TriSpec,
};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "specs".into()));
    std::fs::create_dir_all(&dir).unwrap();
    let t = catalog::t2();
    let write = |name: &str, spec: &SpecFile| {
        let path = dir.join(name);
        std::fs::write(&path, render(spec)).unwrap();
        println!("wrote {}", path.display());
    };
    write(
        "a.json",
        &SpecFile::Algebra(AlgebraSpec::from_algebra(t.a())),
    );
    write(
        "b.json",
        &SpecFile::Algebra(AlgebraSpec::from_algebra(t.b())),
    );
    write(
        "m.json",
        &SpecFile::Bimodule(BimoduleSpec::from_bimodule(t.m())),
    );
    write(
        "tri.json",
        &SpecFile::Tri(TriSpec {
            a: "a.json".into(),
            m: "m.json".into(),
            b: "b.json".into(),
        }),
    );
    write(
        "t2.json",
        &SpecFile::Algebra(AlgebraSpec::from_algebra(t.algebra())),
    );
    write(
        "regular.json",
        &SpecFile::Bimodule(BimoduleSpec::from_bimodule(&Bimodule::regular(t.algebra()))),
    );
    write(
        "dual.json",
        &SpecFile::Bimodule(BimoduleSpec::from_bimodule(&tricohom::dual_bimodule(
            &Bimodule::regular(t.algebra()),
        ))),
    );
    write(
        "identity.json",
        &SpecFile::Hom(HomSpec::from_hom(&AlgebraHom::identity(t.algebra()))),
    );
    write(
        "off_diagonal_ideal.json",
        &SpecFile::Ideal(IdealSpec {
            algebra: AlgebraSpec::from_algebra(t.algebra()),
            basis: vec![vec![Rat::zero(), Rat::one(), Rat::zero()]],
        }),
    );

    println!("\ntry:");
    let d = dir.display();
    println!("  tricohom check {d}/t2.json");
    println!("  tricohom h1 {d}/t2.json {d}/regular.json {d}/identity.json {d}/identity.json");
    println!("  tricohom tri-build {d}/tri.json --emit-spec");
    println!(
        "  tricohom verify-decomposition {d}/tri.json {d}/dual.json {d}/identity.json {d}/identity.json"
    );
    println!(
        "  tricohom weak-amenability {d}/tri.json {d}/identity.json {d}/identity.json --level 1"
    );
    println!("  tricohom obstruction {d}/tri.json {d}/identity.json");
    println!("  tricohom quotient {d}/off_diagonal_ideal.json {d}/identity.json {d}/identity.json");
}
