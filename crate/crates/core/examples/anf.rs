//! Algebraic normal form through the binary Moebius transform.
//!
//! ```bash
//! cargo run -p bentspectra --example anf
//! ```

use bentspectra::{AnfPolynomial, BitVector, TruthTable};

fn main() -> bentspectra::Result<()> {
    let tables = [
        TruthTable::constant(4, true)?,
        TruthTable::affine(4, BitVector::new(4, 9)?, false)?,
        TruthTable::inner_product_bent(4)?,
        TruthTable::parse("0117", Some(4))?,
    ];
    for t in &tables {
        let anf = AnfPolynomial::from_table(t);
        assert_eq!(&anf.to_table(), t);
        println!("{t}  ->  {anf}   (degree {})", anf.degree());
    }

    let custom = AnfPolynomial::from_monomials(3, &[0b011, 0b101, 0b110])?;
    println!("{custom} has truth table {}", custom.to_table());
    Ok(())
}
