//! Walsh spectrum of a few 4-bit functions, fast transform against the
//! literal double sum, and what the classifier reads off each one.
//!
//! ```bash
//! cargo run -p bentspectra --example walsh_spectrum
//! ```

use bentspectra::walsh::{fwht, walsh_naive};
use bentspectra::{BitVector, TruthTable};

fn main() -> bentspectra::Result<()> {
    let functions = [
        ("constant 1", TruthTable::constant(4, true)?),
        (
            "linear k=9",
            TruthTable::affine(4, BitVector::new(4, 9)?, false)?,
        ),
        ("x0 x1 + x2 x3", TruthTable::inner_product_bent(4)?),
        ("weight(x) >= 3", TruthTable::parse("0117", Some(4))?),
    ];
    for (name, table) in &functions {
        let spectrum = fwht(table);
        assert_eq!(spectrum, walsh_naive(table));
        let c = spectrum.classify();
        println!("{name:<14} tt={table}");
        println!("  W = {:?}", spectrum.coeffs());
        println!(
            "  constant={} balanced={} affine={} bent={} nonlinearity={}",
            c.is_constant, c.is_balanced, c.is_affine, c.is_bent, c.nonlinearity
        );
        if let (Some(k), Some(c)) = (c.affine_k, c.affine_c) {
            println!("  f = {k}.x + {}", u8::from(c));
        }
    }
    Ok(())
}
