//! Build a spectrum report and export it as CSV, JSON and SVG.
//!
//! ```bash
//! cargo run -p bentspectra --example reports -- /tmp/bent-report
//! ```

use std::path::PathBuf;

use bentspectra::spectra::{render_bars, BarFormat, Column};
use bentspectra::{SpectrumReport, TruthTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    let table = TruthTable::inner_product_bent(4)?;
    let report = SpectrumReport::from_table(&table, "ip-bent n=4", None);
    let svg = render_bars(
        &report.column(Column::Probability),
        "flat output spectrum",
        BarFormat::Svg,
    )?;

    for (name, body) in [
        ("report.csv", report.export_csv()),
        ("report.json", report.export_json()),
        ("report.svg", svg),
    ] {
        let path = dir.join(name);
        std::fs::write(&path, body)?;
        println!("wrote {}", path.display());
    }
    print!("{}", report.export_csv());
    Ok(())
}
