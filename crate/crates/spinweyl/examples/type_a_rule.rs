// sigma_{d x k} (x) S for symmetric groups: the predicted constituents on
// the hook partition, checked against the character table of the cover.

use spinweyl::chartab::CoverTables;
use spinweyl::combinat::{hook_partition, type_a_spin_tensor, Partition, SpinSign};
use spinweyl::heckemod::{build_irrep, weyl_row};
use spinweyl::rootsystem::{CartanType, RootSystem};

pub fn run_example() {
    let n = 6;
    let rs = RootSystem::build(CartanType::A(n - 1)).unwrap();
    let tables = CoverTables::build(&rs).unwrap();
    for d in [1, 2, 3, 6] {
        let k = n / d;
        let row = weyl_row(&build_irrep(&rs, &Partition::rectangle(d, k).to_string()).unwrap(), &tables).unwrap();
        let predicted = type_a_spin_tensor(d, k, SpinSign::Plus);
        let computed = tables.decompose_spin_tensor(row, 0).unwrap();
        let total: i64 = computed.constituents.iter().map(|&(c, m)| m * tables.table.degree(c)).sum();
        println!("{d}x{k}: hook {}  predicted {:?}  computed {} constituent(s) of total degree {total}", hook_partition(d, k), predicted, computed.constituents.len());
        assert_eq!(computed.constituents.len(), predicted.len());
        assert_eq!(computed.constituents[0].1 as u64, predicted[0].mult);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
