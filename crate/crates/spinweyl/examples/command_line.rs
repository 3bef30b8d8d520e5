// The command-line interface driven in-process.

use spinweyl::cli::run;

pub fn run_example() {
    for args in [
        vec!["spinweyl", "decompose-spin", "G2", "--sigma", "(2,2)"],
        vec!["spinweyl", "central-character", "--type", "B", "--lambda", "2,1", "--format", "tsv"],
        vec!["spinweyl", "roots", "--type", "Z3"],
    ] {
        let (code, out, err) = run(&args);
        println!("$ {}\nexit {code}\n{out}{err}", args[1..].join(" "));
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
