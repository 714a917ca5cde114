// Classify a semigroup given on the command line (default `<3,7,11>`).
//
// ```text
// cargo run --example classify_semigroup -- 4,7,9,10
// ```

use arfkit::{classify_report, ClassificationReport, NumericalSemigroup};

pub fn run_example(gens: &str) -> arfkit::Result<ClassificationReport> {
    let h: NumericalSemigroup = gens.parse()?;
    let report = classify_report(&h);
    print!("{}", report.render(false));
    Ok(report)
}

#[allow(dead_code)]
fn main() -> arfkit::Result<()> {
    let gens = std::env::args().nth(1).unwrap_or_else(|| "3,7,11".to_string());
    run_example(&gens).map(|_| ())
}
