// Evaluate every criterion on a few semigroups that separate the classes.

use arfkit::{Analysis, NumericalSemigroup};

const SAMPLES: [&str; 5] = ["3,7,11", "4,7,9,10", "5,16,17,18,19", "4,5,6", "6,7,8,9,10,11"];

pub fn run_example() -> arfkit::Result<usize> {
    let mut rows = 0;
    for gens in SAMPLES {
        let h: NumericalSemigroup = gens.parse()?;
        let a = Analysis::new(&h);
        println!(
            "{h}  arf={} sym={} almost_sym={} ggl={:?}",
            a.is_arf(),
            a.is_symmetric(),
            a.is_almost_symmetric(),
            a.ggl_min_mult()
        );
        for c in a.criteria() {
            let state = match (c.applicable, c.holds) {
                (false, _) => "n/a",
                (true, true) => "holds",
                (true, false) => "fails",
            };
            println!("    {:<40} {state:<6} {:?}", c.name, c.witnesses);
            rows += 1;
        }
        assert!(a.audit().is_empty());
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> arfkit::Result<()> {
    run_example().map(|_| ())
}
