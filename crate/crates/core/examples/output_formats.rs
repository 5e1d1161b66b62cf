//! Enumeration rows written as JSON lines and CSV, then parsed back.
//!
//! cargo run --example output_formats

use quasihom::enumerate::{enumerate, EnumerateOptions};
use quasihom::output::{emit, parse, Format, OutputRow};

fn main() -> quasihom::Result<()> {
    let rows: Vec<OutputRow> = enumerate(2, 12, &EnumerateOptions::default())?.iter().map(OutputRow::from).collect();
    for format in [Format::Jsonl, Format::Csv] {
        let text = emit(&rows, format)?;
        print!("{text}");
        assert_eq!(parse(&text, format)?, rows);
    }
    Ok(())
}
