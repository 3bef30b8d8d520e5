// A one-W-type module of the graded Hecke algebra of B3 at unequal
// parameters: central character, star operation and Dirac cohomology.

use spinweyl::chartab::CoverTables;
use spinweyl::heckemod::{build_irrep, cohomology_character, dirac_operator, extend_to_hecke, weyl_row};
use spinweyl::rootsystem::{CartanType, ParameterFunction, RootSystem};
use spinweyl::scalars::{fmt_rational, int};

pub fn run_example() {
    let rs = RootSystem::build(CartanType::B(3)).unwrap();
    let k = ParameterFunction::new(int(1), int(2));
    let sigma = build_irrep(&rs, "2,1 x 0").unwrap();
    let x = extend_to_hecke(&sigma, &rs, &k).unwrap();
    let nu: Vec<String> = x.central_char.iter().map(fmt_rational).collect();
    println!("dim {}  central character ({})", x.dimension(), nu.join(", "));
    println!("star hermitian: {}", x.verify_star_hermitian());
    let tables = CoverTables::build(&rs).unwrap();
    let row = weyl_row(&x.sigma, &tables).unwrap();
    for (v, spin) in tables.cover.spin_modules().iter().enumerate() {
        let d = dirac_operator(&x, spin);
        let h = cohomology_character(&d, row, v, &tables).unwrap();
        println!("S{v}: D = 0: {}  cohomology {:?}", d.is_zero(), h.constituents);
        assert!(d.is_zero());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
