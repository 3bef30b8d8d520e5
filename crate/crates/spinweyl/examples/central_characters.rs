// Central characters from the tableau rule in type B and from middle
// elements of nilpotent orbits in type A.

use spinweyl::combinat::{central_character_tableau, hook_partition, Partition};
use spinweyl::orbits::{identcc, middle_element_type_a, OrbitLabel};
use spinweyl::rootsystem::ParameterFunction;
use spinweyl::scalars::{fmt_rational, int};

pub fn run_example() {
    let k = ParameterFunction::new(int(1), int(3));
    for lambda in Partition::all(3) {
        let cc = central_character_tableau(&lambda);
        let v: Vec<String> = cc.eval(&k).iter().map(fmt_rational).collect();
        println!("B3 {lambda}: {cc} = ({})", v.join(", "));
    }
    let hook = hook_partition(2, 2);
    let h: Vec<String> = middle_element_type_a(&hook).iter().map(fmt_rational).collect();
    let half: Vec<String> = identcc(&OrbitLabel::type_a(&hook)).unwrap().iter().map(fmt_rational).collect();
    println!("A3 orbit {hook}: h = ({}), h/2 = ({})", h.join(", "), half.join(", "));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
