// Products of two rectangular Schur functions and the partitions chosen by
// the rectangular rules.

use spinweyl::combinat::{lr_expand, rectangular_lr_partitions, Partition};

pub fn run_example() {
    let (a, b) = (Partition::rectangle(2, 3), Partition::rectangle(3, 1));
    for (lambda, c) in lr_expand(&a, &b) {
        println!("c^{lambda} = {c}");
    }
    let chosen = rectangular_lr_partitions(2, 3, 3, 1);
    println!("rectangular rules: {chosen:?}");
    assert!(!chosen.is_empty());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
