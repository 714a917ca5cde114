// Arf closure, checked against every Arf oversemigroup found by walking the
// semigroup tree.

use arfkit::{arf_closure, enumerate_by_genus, is_arf, NumericalSemigroup};

pub fn run_example(gens: &str) -> arfkit::Result<NumericalSemigroup> {
    let h: NumericalSemigroup = gens.parse()?;
    let c = arf_closure(&h);
    println!("{h} -> {c}  (genus {} -> {})", h.genus(), c.genus());
    let over: Vec<_> = enumerate_by_genus(h.genus())
        .into_iter()
        .filter(|t| h.is_subset_of(t) && is_arf(t))
        .collect();
    println!("{} Arf oversemigroups, all containing the closure", over.len());
    assert!(over.iter().all(|t| c.is_subset_of(t)));
    assert!(over.contains(&c));
    Ok(c)
}

#[allow(dead_code)]
fn main() -> arfkit::Result<()> {
    let gens = std::env::args().nth(1).unwrap_or_else(|| "3,7,11".to_string());
    run_example(&gens).map(|_| ())
}
