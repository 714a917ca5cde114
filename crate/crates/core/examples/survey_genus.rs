// Classify and audit every semigroup up to a genus (default 8) in parallel.

use arfkit::oracle::SurveyOutcome;
use arfkit::{survey, SurveyOptions};

pub fn run_example(max_genus: usize) -> SurveyOutcome {
    let outcome = survey(&SurveyOptions::new(max_genus));
    print!("{}", outcome.summary_table());
    outcome
}

#[allow(dead_code)]
fn main() {
    let g = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let outcome = run_example(g);
    std::process::exit(if outcome.passed() { 0 } else { 1 });
}
