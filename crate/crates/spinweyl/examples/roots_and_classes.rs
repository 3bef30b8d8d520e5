// Roots of G2 and the conjugacy classes of its Weyl group.

use spinweyl::rootsystem::{CartanType, RootSystem};
use spinweyl::scalars::fmt_rational;

pub fn run_example() {
    let rs = RootSystem::build(CartanType::G2).unwrap();
    println!("positive roots of {}:", rs.cartan_type());
    for i in 0..rs.num_positive() {
        let r: Vec<String> = rs.root(i).iter().map(fmt_rational).collect();
        println!("  ({})  height {}  {}", r.join(", "), rs.height(i), if rs.is_long(i) { "long" } else { "short" });
    }
    let w = rs.weyl_group(1000).unwrap();
    println!("|W| = {}", w.order());
    for c in 0..w.classes().sizes.len() {
        println!("  class {c}: size {} order {} word {:?}", w.classes().sizes[c], w.classes().orders[c], w.class_rep_word(c));
    }
    assert_eq!(w.order(), 12);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
