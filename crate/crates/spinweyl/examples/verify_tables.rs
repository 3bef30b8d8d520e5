// Checks the golden G2 table in full and the E8 table by dimensions.

use spinweyl::catalog::{verify_table, Mode};
use spinweyl::chartab::DEFAULT_GATE;
use spinweyl::rootsystem::CartanType;

pub fn run_example() {
    for (ct, mode) in [(CartanType::G2, Mode::Full), (CartanType::E8, Mode::DimsOnly)] {
        let report = verify_table(ct, mode, DEFAULT_GATE).unwrap();
        println!("{ct} {mode:?}: {}/{} rows", report.passed, report.total);
        assert!(report.all_passed());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
