//! Repeated measurements of the bent-oracle output and a chi-square check
//! of the histogram against the flat distribution.
//!
//! ```bash
//! cargo run -p bentspectra --example sampling
//! ```

use bentspectra::djsim::{amplitudes_from_walsh, sample_measurements};
use bentspectra::spectra::{render_bars, BarFormat};
use bentspectra::walsh::fwht;
use bentspectra::TruthTable;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> bentspectra::Result<()> {
    let amps = amplitudes_from_walsh(&fwht(&TruthTable::inner_product_bent(4)?));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for shots in [100, 10_000, 1_000_000] {
        let h = sample_measurements(&amps, shots, &mut rng);
        let counts: Vec<f64> = h.counts.iter().map(|&c| c as f64).collect();
        let title = format!(
            "{shots} runs, chi-square {:.2} (15 dof)",
            h.chi_square(&amps.probabilities())
        );
        print!("{}", render_bars(&counts, &title, BarFormat::Ascii)?);
        println!();
    }
    Ok(())
}
