//! Spectrum reports and their CSV, JSON, SVG and ASCII renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolfn::TruthTable;
use crate::djsim::amplitudes_from_walsh;
use crate::error::{Error, Result};
use crate::walsh::{fwht, Classification, WalshSpectrum};

pub const CSV_HEADER: &str = "p,walsh,amplitude,probability";

/// Most bars a single SVG chart will draw.
pub const SVG_MAX_BARS: usize = 1 << 20;
pub const ASCII_MAX_BARS: usize = 1 << 8;
/// Width in characters of the longest ASCII bar.
pub const ASCII_BAR_WIDTH: usize = 60;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub p: u32,
    pub walsh: i32,
    pub amplitude: f64,
    pub probability: f64,
}

/// Everything the Deutsch-Jozsa output of one function shows: the Walsh
/// coefficient, amplitude and probability for every outcome `p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u32,
    pub generator: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub classification: Classification,
    pub rows: Vec<SpectrumRow>,
}

impl SpectrumReport {
    pub fn from_table(table: &TruthTable, generator: impl Into<String>, seed: Option<u64>) -> Self {
        Self::from_spectrum(&fwht(table), generator, seed)
    }

    pub fn from_spectrum(
        spectrum: &WalshSpectrum,
        generator: impl Into<String>,
        seed: Option<u64>,
    ) -> Self {
        let amps = amplitudes_from_walsh(spectrum);
        let rows = spectrum
            .coeffs()
            .iter()
            .zip(amps.amps())
            .zip(0u32..)
            .map(|((&walsh, &amplitude), p)| SpectrumRow {
                p,
                walsh,
                amplitude,
                probability: amplitude * amplitude,
            })
            .collect();
        Self {
            n: spectrum.arity(),
            generator: generator.into(),
            seed,
            classification: spectrum.classify(),
            rows,
        }
    }

    pub fn column(&self, column: Column) -> Vec<f64> {
        self.rows.iter().map(|r| column.get(r)).collect()
    }

    /// `p,walsh,amplitude,probability`, one row per outcome, floats with 17
    /// significant digits.
    pub fn export_csv(&self) -> String {
        let mut out = String::with_capacity(32 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                r.p,
                r.walsh,
                format_g17(r.amplitude),
                format_g17(r.probability)
            );
        }
        out
    }

    pub fn export_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report json");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Parses the rows of a CSV export.
pub fn parse_csv_rows(text: &str) -> Result<Vec<SpectrumRow>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == CSV_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header {CSV_HEADER:?}, found {:?}",
                other.unwrap_or("")
            )))
        }
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let bad = |what: &str| Error::Parse(format!("row {i}: bad {what} in {line:?}"));
            let fields: Vec<&str> = line.trim().split(',').collect();
            if fields.len() != 4 {
                return Err(bad("field count"));
            }
            Ok(SpectrumRow {
                p: fields[0].parse().map_err(|_| bad("p"))?,
                walsh: fields[1].parse().map_err(|_| bad("walsh"))?,
                amplitude: fields[2].parse().map_err(|_| bad("amplitude"))?,
                probability: fields[3].parse().map_err(|_| bad("probability"))?,
            })
        })
        .collect()
}

/// Report column selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Column {
    Walsh,
    Amplitude,
    Probability,
}

impl Column {
    pub fn get(self, row: &SpectrumRow) -> f64 {
        match self {
            Column::Walsh => f64::from(row.walsh),
            Column::Amplitude => row.amplitude,
            Column::Probability => row.probability,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Column::Walsh => "walsh",
            Column::Amplitude => "amplitude",
            Column::Probability => "probability",
        }
    }
}

impl FromStr for Column {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "walsh" => Ok(Column::Walsh),
            "amplitude" => Ok(Column::Amplitude),
            "probability" => Ok(Column::Probability),
            other => Err(Error::Parse(format!("unknown column {other:?}"))),
        }
    }
}

/// Formats like C's `%.17g`: shortest of fixed or scientific notation with
/// 17 significant digits and trailing zeros removed. Lossless for `f64`.
pub fn format_g17(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 && v.is_sign_negative() {
            "-0".into()
        } else {
            format!("{v}")
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if !(-4..17).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let precision = (16 - exp) as usize;
        trim_fraction(&format!("{v:.precision$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarFormat {
    Svg,
    Ascii,
}

impl FromStr for BarFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(BarFormat::Svg),
            "ascii" => Ok(BarFormat::Ascii),
            other => Err(Error::Parse(format!("unknown bar format {other:?}"))),
        }
    }
}

/// Bar chart of `values`, one bar per entry, lengths proportional to
/// `|value| / max |value|`. Negative values are drawn below the axis in SVG.
pub fn render_bars(values: &[f64], title: &str, format: BarFormat) -> Result<String> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    match format {
        BarFormat::Svg => render_svg(values, title),
        BarFormat::Ascii => render_ascii(values, title),
    }
}

fn scale_of(values: &[f64]) -> f64 {
    values.iter().map(|v| v.abs()).fold(0.0, f64::max)
}

fn ratio(v: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        v.abs() / scale
    } else {
        0.0
    }
}

fn render_ascii(values: &[f64], title: &str) -> Result<String> {
    if values.len() > ASCII_MAX_BARS {
        return Err(Error::TooManyBars {
            len: values.len(),
            max: ASCII_MAX_BARS,
            format: "ascii",
        });
    }
    let scale = scale_of(values);
    let label_width = (values.len() - 1).to_string().len();
    let mut out = String::new();
    let _ = writeln!(out, "{title}");
    for (p, &v) in values.iter().enumerate() {
        let len = (ratio(v, scale) * ASCII_BAR_WIDTH as f64).round() as usize;
        let _ = writeln!(
            out,
            "{p:>label_width$} |{:<ASCII_BAR_WIDTH$} {v}",
            "#".repeat(len)
        );
    }
    Ok(out)
}

fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn render_svg(values: &[f64], title: &str) -> Result<String> {
    if values.len() > SVG_MAX_BARS {
        return Err(Error::TooManyBars {
            len: values.len(),
            max: SVG_MAX_BARS,
            format: "svg",
        });
    }
    const WIDTH: f64 = 640.0;
    const HEIGHT: f64 = 240.0;
    const MARGIN: f64 = 40.0;

    let scale = scale_of(values);
    let signed = values.iter().any(|&v| v < 0.0);
    // Bars grow up from the axis, or both ways from a centred axis.
    let reach = if signed { HEIGHT / 2.0 } else { HEIGHT };
    let axis_y = MARGIN + reach;
    let slot = WIDTH / values.len() as f64;
    let bar = slot * 0.8;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = WIDTH + 2.0 * MARGIN,
        h = HEIGHT + 2.0 * MARGIN + 20.0,
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        MARGIN + WIDTH / 2.0,
        MARGIN / 2.0 + 5.0,
        escape_xml(title)
    );
    for (p, &v) in values.iter().enumerate() {
        let h = ratio(v, scale) * reach;
        let x = MARGIN + p as f64 * slot + (slot - bar) / 2.0;
        let y = if v < 0.0 { axis_y } else { axis_y - h };
        let _ = writeln!(
            out,
            r##"<rect x="{x:.4}" y="{y:.4}" width="{bar:.4}" height="{h:.4}" fill="#3b6ea8"/>"##
        );
    }
    let _ = writeln!(
        out,
        r#"<line x1="{MARGIN}" y1="{axis_y}" x2="{}" y2="{axis_y}" stroke="black" stroke-width="1"/>"#,
        MARGIN + WIDTH
    );
    if values.len() <= 64 {
        let label_y = MARGIN + HEIGHT + 16.0;
        for p in 0..values.len() {
            let _ = writeln!(
                out,
                r#"<text x="{:.4}" y="{label_y}" font-family="sans-serif" font-size="10" text-anchor="middle">{p}</text>"#,
                MARGIN + (p as f64 + 0.5) * slot
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Stacks SVG charts from [`render_bars`] vertically into one document.
pub fn stack_charts(charts: &[String]) -> String {
    const PANEL_WIDTH: f64 = 720.0;
    const PANEL_HEIGHT: f64 = 340.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{PANEL_WIDTH}" height="{}">"#,
        PANEL_HEIGHT * charts.len() as f64
    );
    for (i, chart) in charts.iter().enumerate() {
        let offset = PANEL_HEIGHT * i as f64;
        out.push_str(&chart.replacen("<svg ", &format!(r#"<svg x="0" y="{offset}" "#), 1));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::BitVector;

    fn report(t: &TruthTable) -> SpectrumReport {
        SpectrumReport::from_table(t, "test", None)
    }

    #[test]
    fn csv_constant_zero() {
        let csv = report(&TruthTable::constant(2, false).unwrap()).export_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "0,4,1,1");
        assert_eq!(lines[2], "1,0,0,0");
    }

    #[test]
    fn csv_bent_and_linear() {
        let rows =
            parse_csv_rows(&report(&TruthTable::inner_product_bent(4).unwrap()).export_csv())
                .unwrap();
        assert_eq!(rows.len(), 16);
        assert!(rows.iter().all(|r| r.probability == 0.0625));

        let lin = TruthTable::affine(4, BitVector::new(4, 9).unwrap(), false).unwrap();
        let csv = report(&lin).export_csv();
        let rows = parse_csv_rows(&csv).unwrap();
        for r in rows {
            assert_eq!(r.probability != 0.0, r.p == 9);
        }
        assert!(csv.contains("\n9,16,1,1\n"));
    }

    #[test]
    fn json_round_trip_and_metadata() {
        let r = report(&TruthTable::inner_product_bent(4).unwrap());
        let json = r.export_json();
        assert_eq!(SpectrumReport::from_json(&json).unwrap(), r);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["classification"]["is_bent"], true);
        assert!(value.get("seed").is_none());
        for key in ["n", "generator", "classification", "rows"] {
            assert!(value.get(key).is_some(), "{key}");
        }

        let seeded =
            SpectrumReport::from_table(&TruthTable::constant(2, false).unwrap(), "random", Some(7));
        let value: serde_json::Value = serde_json::from_str(&seeded.export_json()).unwrap();
        assert_eq!(value["seed"], 7);
    }

    #[test]
    fn g17_formatting() {
        assert_eq!(format_g17(1.0), "1");
        assert_eq!(format_g17(0.0), "0");
        assert_eq!(format_g17(-0.25), "-0.25");
        assert_eq!(format_g17(0.0625), "0.0625");
        assert_eq!(format_g17(0.1), "0.10000000000000001");
        assert_eq!(format_g17(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(format_g17(2f64.powi(-20)), "9.5367431640625e-07");
        assert_eq!(format_g17(1e17), "1e+17");
        assert_eq!(format_g17(123456.5), "123456.5");
        for v in [0.1, 1.0 / 3.0, 2f64.powi(-40), 6.02214076e23, -1e-300] {
            assert_eq!(format_g17(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(parse_csv_rows("p,q\n").is_err());
        assert!(parse_csv_rows(&format!("{CSV_HEADER}\n0,1,2\n")).is_err());
        assert!(parse_csv_rows(&format!("{CSV_HEADER}\n0,x,1,1\n")).is_err());
    }

    fn rect_heights(svg: &str) -> Vec<f64> {
        let doc = roxmltree::Document::parse(svg).expect("well-formed svg");
        doc.descendants()
            .filter(|n| n.has_tag_name("rect"))
            .map(|n| n.attribute("height").unwrap().parse().unwrap())
            .collect()
    }

    #[test]
    fn svg_bars() {
        let flat = render_bars(&[0.0625; 16], "flat <&>", BarFormat::Svg).unwrap();
        let heights = rect_heights(&flat);
        assert_eq!(heights.len(), 16);
        assert!(heights.iter().all(|&h| h == heights[0] && h > 0.0));

        let mut d = [0.0; 16];
        d[9] = 1.0;
        let heights = rect_heights(&render_bars(&d, "delta", BarFormat::Svg).unwrap());
        assert_eq!(heights.iter().filter(|&&h| h == 0.0).count(), 15);
        assert_eq!(heights[9], 240.0);

        assert_eq!(
            rect_heights(&render_bars(&[1.0], "one", BarFormat::Svg).unwrap()),
            [240.0]
        );
        assert_eq!(
            rect_heights(&render_bars(&[0.0; 4], "zero", BarFormat::Svg).unwrap()),
            [0.0; 4]
        );

        // Signed values share a centred axis.
        let heights =
            rect_heights(&render_bars(&[2.0, -2.0, 1.0, 0.0], "s", BarFormat::Svg).unwrap());
        assert_eq!(heights, [120.0, 120.0, 60.0, 0.0]);
    }

    #[test]
    fn svg_uses_only_allowed_elements() {
        let svg = render_bars(&[0.5, 0.25, 0.25], "x", BarFormat::Svg).unwrap();
        let doc = roxmltree::Document::parse(&svg).unwrap();
        for node in doc.descendants().filter(|n| n.is_element()) {
            assert!(["svg", "rect", "text", "line"].contains(&node.tag_name().name()));
        }
    }

    #[test]
    fn stacked_panels_parse() {
        let a = render_bars(&[1.0, 0.0], "a", BarFormat::Svg).unwrap();
        let b = render_bars(&[0.5; 4], "b", BarFormat::Svg).unwrap();
        let svg = stack_charts(&[a, b]);
        assert_eq!(rect_heights(&svg).len(), 6);
    }

    #[test]
    fn ascii_bars() {
        let out = render_bars(&[0.0625; 16], "flat", BarFormat::Ascii).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 17);
        assert!(lines[1..]
            .iter()
            .all(|l| l.matches('#').count() == ASCII_BAR_WIDTH));

        let mut d = [0.0; 16];
        d[9] = 1.0;
        let out = render_bars(&d, "delta", BarFormat::Ascii).unwrap();
        let bars: Vec<usize> = out
            .lines()
            .skip(1)
            .map(|l| l.matches('#').count())
            .collect();
        assert_eq!(bars.iter().filter(|&&b| b == 0).count(), 15);
        assert_eq!(bars[9], ASCII_BAR_WIDTH);

        let half = render_bars(&[1.0, 0.5], "t", BarFormat::Ascii).unwrap();
        assert_eq!(half.lines().nth(2).unwrap().matches('#').count(), 30);
    }

    #[test]
    fn render_limits() {
        assert_eq!(
            render_bars(&[], "e", BarFormat::Svg),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            render_bars(&[], "e", BarFormat::Ascii),
            Err(Error::EmptyInput)
        );
        assert!(matches!(
            render_bars(&[1.0; 257], "big", BarFormat::Ascii),
            Err(Error::TooManyBars { .. })
        ));
        assert!(render_bars(&[1.0; 256], "ok", BarFormat::Ascii).is_ok());
    }
}
