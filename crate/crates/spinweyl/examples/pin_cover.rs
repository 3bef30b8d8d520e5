// The pin double cover of W(F4), its genuine irreducibles and the spin
// module.

use spinweyl::catalog::cover_labels;
use spinweyl::chartab::CoverTables;
use spinweyl::rootsystem::{CartanType, RootSystem};

pub fn run_example() {
    let rs = RootSystem::build(CartanType::F4).unwrap();
    let tables = CoverTables::build(&rs).unwrap();
    println!("|W~(F4)| = {}, {} classes", tables.cover.order(), tables.table.num_classes());
    let names = cover_labels(&tables);
    for g in tables.genuine() {
        println!("  genuine {} of degree {}", names[g], tables.table.degree(g));
    }
    let s = tables.spin_row(0).unwrap();
    println!("the spin module is {} (dimension {})", names[s], tables.table.degree(s));
    assert_eq!(tables.cover.order(), 2304);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
