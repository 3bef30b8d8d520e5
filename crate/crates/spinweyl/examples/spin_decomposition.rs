// sigma (x) S for the W(F4)-representation (4,8), with the printed labels
// of the constituents.

use spinweyl::catalog::{cover_labels, LabelMap};
use spinweyl::chartab::{casimir_polynomial, db_labels, CoverTables};
use spinweyl::rootsystem::{CartanType, RootSystem};

pub fn run_example() {
    let rs = RootSystem::build(CartanType::F4).unwrap();
    let tables = CoverTables::build(&rs).unwrap();
    let row = db_labels(tables.cover.weyl(), &tables.weyl).iter().position(|l| l == "(4,8)").unwrap();
    let map = LabelMap::load(CartanType::F4).unwrap();
    let canonical = cover_labels(&tables);
    let dec = tables.decompose_spin_tensor(row, 0).unwrap();
    let mut printed = Vec::new();
    for (c, m) in dec.constituents {
        let label = map.cover.iter().find(|(_, v)| **v == canonical[c]).map(|(p, _)| p.clone()).unwrap();
        let cas = casimir_polynomial(&tables.cover, tables.table.character(c)).unwrap();
        println!("{m} x {label}   Casimir {cas}");
        printed.push(label);
    }
    printed.sort();
    assert_eq!(printed, ["8_s", "8_ss"]);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
