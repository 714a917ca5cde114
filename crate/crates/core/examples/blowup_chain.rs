// Walk the Lipman sequence of blowups down to N, comparing the generator
// formula with the power-colon definition at every step.

use arfkit::{blowup_oracle, endomorphism_semigroup, lipman_sequence, NumericalSemigroup};

pub fn run_example(gens: &str) -> arfkit::Result<Vec<i64>> {
    let h: NumericalSemigroup = gens.parse()?;
    let seq = lipman_sequence(&h);
    for (i, step) in seq.steps().iter().enumerate() {
        let b = endomorphism_semigroup(step);
        println!(
            "{i:>2}  {:<20} m={:<2} med={:<5} M-M={}",
            step.to_string(),
            step.multiplicity(),
            step.has_max_embedding_dimension(),
            b
        );
        if let Some(next) = seq.steps().get(i + 1) {
            assert_eq!(next, &blowup_oracle(step));
        }
    }
    println!("multiplicity sequence {:?}", seq.multiplicities());
    Ok(seq.multiplicities())
}

#[allow(dead_code)]
fn main() -> arfkit::Result<()> {
    let gens = std::env::args().nth(1).unwrap_or_else(|| "4,7,9,10".to_string());
    run_example(&gens).map(|_| ())
}
