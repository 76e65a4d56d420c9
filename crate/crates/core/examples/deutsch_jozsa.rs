//! The Deutsch-Jozsa output for a constant, a linear and a bent oracle,
//! computed by four independent routes that must agree.
//!
//! ```bash
//! cargo run -p bentspectra --example deutsch_jozsa
//! ```

use bentspectra::djsim::{
    amplitudes_direct, amplitudes_from_walsh, simulate_circuit, simulate_with_ancilla,
};
use bentspectra::spectra::{render_bars, BarFormat};
use bentspectra::walsh::fwht;
use bentspectra::{BitVector, TruthTable};

fn main() -> bentspectra::Result<()> {
    let cases = [
        (
            "constant 0: all weight on |0000>",
            TruthTable::constant(4, false)?,
        ),
        (
            "linear k=9: all weight on |1001>",
            TruthTable::affine(4, BitVector::new(4, 9)?, false)?,
        ),
        (
            "bent x0 x1 + x2 x3: flat",
            TruthTable::inner_product_bent(4)?,
        ),
    ];
    for (title, table) in &cases {
        let reference = amplitudes_from_walsh(&fwht(table));
        let deviation = [
            amplitudes_direct(table),
            simulate_circuit(table)?,
            simulate_with_ancilla(table)?,
        ]
        .iter()
        .map(|a| a.max_abs_diff(&reference))
        .fold(0.0, f64::max);
        println!("max route deviation {deviation:e}");
        print!(
            "{}",
            render_bars(&reference.probabilities(), title, BarFormat::Ascii)?
        );
        println!();
    }
    Ok(())
}
