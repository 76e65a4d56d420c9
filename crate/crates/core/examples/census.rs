//! Classify all 65536 functions of four variables.
//!
//! ```bash
//! cargo run --release -p bentspectra --example census
//! ```

use std::collections::BTreeMap;

use bentspectra::walsh::fwht;
use bentspectra::TruthTable;

fn main() -> bentspectra::Result<()> {
    let (mut bent, mut affine, mut balanced) = (0, 0, 0);
    let mut nonlinearity: BTreeMap<u64, usize> = BTreeMap::new();
    let mut bent_weights: BTreeMap<u64, usize> = BTreeMap::new();
    for code in 0..=u16::MAX {
        let t = TruthTable::from_fn(4, |x| (code >> x) & 1 == 1)?;
        let c = fwht(&t).classify();
        bent += usize::from(c.is_bent);
        affine += usize::from(c.is_affine);
        balanced += usize::from(c.is_balanced);
        *nonlinearity.entry(c.nonlinearity).or_default() += 1;
        if c.is_bent {
            *bent_weights.entry(t.weight()).or_default() += 1;
        }
    }
    println!("bent {bent}, affine {affine}, balanced {balanced}");
    println!("bent functions by weight: {bent_weights:?}");
    println!("functions by nonlinearity: {nonlinearity:?}");
    Ok(())
}
