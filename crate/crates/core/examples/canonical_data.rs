// The canonical ideal `K`, the extension `S = ⋃ K^n`, its conductor in `H`
// and the colength `ell`.

use arfkit::{b_extension_length, CanonicalData, NumericalSemigroup};

pub fn run_example(gens: &str) -> arfkit::Result<CanonicalData> {
    let h: NumericalSemigroup = gens.parse()?;
    let data = CanonicalData::compute(&h);
    println!("H         {h}");
    println!("K         {}", data.k);
    println!("S         {}", data.s);
    println!("H : S     {}", data.conductor);
    println!("ell       {}", data.ell);
    match b_extension_length(&h) {
        Some(n) => println!("|B / (B : B[K B])| = {n}"),
        None => println!("B-extension length not defined here"),
    }
    Ok(data)
}

#[allow(dead_code)]
fn main() -> arfkit::Result<()> {
    let gens = std::env::args().nth(1).unwrap_or_else(|| "5,16,17,18,19".to_string());
    run_example(&gens).map(|_| ())
}
