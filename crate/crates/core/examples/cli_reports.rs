//! Machine-readable reports and point-set files, as produced by the
//! `packcert` binary.

use packcert::cli::{
    bounds_output, pointset_from_file, pointset_to_file, render_report, scan, Format, Report,
    ScanMode,
};
use packcert::constructions::e8_roots;
use packcert::etf::etf_report;

fn main() -> packcert::Result<()> {
    let report: Report = etf_report(7, 28)?.into();
    print!("{}", render_report(&report, Format::Json)?);
    print!("{}", render_report(&report, Format::Csv)?);

    let b = bounds_output(8, 3, 7)?;
    println!(
        "best known for (8, 3, 7): {:?}",
        b.best_known.value.map(|v| v.num)
    );

    let t = scan(ScanMode::Etf, 3, 12)?;
    println!("ETF survivors for 3 <= d <= 12:");
    for r in &t.rows {
        println!("    ({}, {})", r.d, r.n);
    }

    let file = pointset_to_file(&e8_roots());
    let text = serde_json::to_string(&file).expect("serializable");
    println!(
        "E8 file: {} bytes, scale_sq {:?}",
        text.len(),
        file.scale_sq
    );
    let back = pointset_from_file(&serde_json::from_str(&text).expect("parses"), None)?;
    println!("re-read: {} points, mode {:?}", back.len(), back.mode());
    Ok(())
}
