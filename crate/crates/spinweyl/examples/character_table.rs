// The character table of W(B3) from scratch, with (d,b) labels.

use spinweyl::chartab::{db_labels, dixon_schneider};
use spinweyl::rootsystem::{CartanType, RootSystem};

pub fn run_example() {
    let rs = RootSystem::build(CartanType::B(3)).unwrap();
    let w = rs.weyl_group(10_000).unwrap();
    let table = dixon_schneider(w.group(), w.classes(), "W(B3)").unwrap();
    table.check().unwrap();
    let labels = db_labels(&w, &table);
    print!("{}", table.to_tsv(Some(&labels)));
    assert_eq!(table.len(), 10);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
