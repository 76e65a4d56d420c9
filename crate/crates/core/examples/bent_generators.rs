//! Three ways to get a bent function, plus its dual.
//!
//! ```bash
//! cargo run -p bentspectra --example bent_generators
//! ```

use bentspectra::walsh::{dual_bent, fwht};
use bentspectra::{AnfPolynomial, ShuffleSearch, TruthTable};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bentspectra::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2019);

    let ip = TruthTable::inner_product_bent(6)?;
    println!("inner product n=6: {}", AnfPolynomial::from_table(&ip));

    let g = TruthTable::parse("0110", None)?;
    let mm = TruthTable::maiorana_mcfarland(2, &[2, 0, 3, 1], &g)?;
    println!("Maiorana-McFarland n=4: tt={mm} bent={}", mm.is_bent());

    for half in [3, 4, 6] {
        let f = TruthTable::random_maiorana_mcfarland(half, &mut rng)?;
        let dual = dual_bent(&fwht(&f))?;
        println!(
            "random MM n={:<2}: bent={} degree={} dual bent={}",
            2 * half,
            f.is_bent(),
            AnfPolynomial::from_table(&f).degree(),
            dual.is_bent()
        );
    }

    match TruthTable::shuffle_search_bent(4, &mut rng, 100_000)? {
        ShuffleSearch::Found { table, iterations } => {
            println!("shuffle search n=4: {table} after {iterations} shuffles");
            println!("  ANF: {}", AnfPolynomial::from_table(&table));
        }
        ShuffleSearch::NotFound { iterations } => println!("no luck in {iterations} shuffles"),
    }
    Ok(())
}
