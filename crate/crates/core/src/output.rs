//! Machine-readable rows for enumeration output: JSON lines and flat CSV.

use serde::{Deserialize, Serialize};

use crate::enumerate::EnumerationRecord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub reduced: bool,
    pub all_below_half: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRow {
    pub n: usize,
    pub v: Vec<u64>,
    pub d: u64,
    pub mu: u64,
    pub kappa_types: Vec<String>,
    /// `[m, multiplicity]` ascending in `m`.
    pub charpoly: Vec<(u64, i64)>,
    pub flags: Flags,
}

impl From<&EnumerationRecord> for OutputRow {
    fn from(r: &EnumerationRecord) -> Self {
        let ws = &r.system;
        OutputRow {
            n: ws.n(),
            v: ws.weights().to_vec(),
            d: ws.degree(),
            mu: r.mu,
            kappa_types: r.kappa_types.clone(),
            charpoly: r.charpoly.iter().collect(),
            flags: Flags { reduced: ws.is_reduced(), all_below_half: ws.all_below_half() },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
}

const CSV_HEADER: [&str; 8] = ["n", "v", "d", "mu", "kappa_types", "charpoly", "reduced", "all_below_half"];

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

fn split(s: &str) -> impl Iterator<Item = &str> {
    s.split(';').filter(|p| !p.is_empty())
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn emit(rows: &[OutputRow], format: Format) -> Result<String> {
    match format {
        Format::Jsonl => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(row).map_err(parse_err)?);
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).map_err(parse_err)?;
            for row in rows {
                let charpoly: Vec<String> = row.charpoly.iter().map(|(m, k)| format!("{m}:{k}")).collect();
                w.write_record([
                    row.n.to_string(),
                    join(&row.v),
                    row.d.to_string(),
                    row.mu.to_string(),
                    join(&row.kappa_types),
                    charpoly.join(";"),
                    row.flags.reduced.to_string(),
                    row.flags.all_below_half.to_string(),
                ])
                .map_err(parse_err)?;
            }
            String::from_utf8(w.into_inner().map_err(parse_err)?).map_err(parse_err)
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Vec<OutputRow>> {
    match format {
        Format::Jsonl => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(parse_err))
            .collect(),
        Format::Csv => {
            let mut r = csv::Reader::from_reader(text.as_bytes());
            let header = r.headers().map_err(parse_err)?;
            if header.iter().ne(CSV_HEADER) {
                return Err(Error::Parse(format!("unexpected CSV header {header:?}")));
            }
            r.records()
                .map(|rec| {
                    let rec = rec.map_err(parse_err)?;
                    let num = |i: usize| rec[i].parse::<u64>().map_err(parse_err);
                    let flag = |i: usize| rec[i].parse::<bool>().map_err(parse_err);
                    let charpoly = split(&rec[5])
                        .map(|p| {
                            let (m, k) = p.split_once(':').ok_or_else(|| parse_err(format!("bad factor {p}")))?;
                            Ok((m.parse().map_err(parse_err)?, k.parse().map_err(parse_err)?))
                        })
                        .collect::<Result<_>>()?;
                    Ok(OutputRow {
                        n: rec[0].parse().map_err(parse_err)?,
                        v: split(&rec[1]).map(|x| x.parse().map_err(parse_err)).collect::<Result<_>>()?,
                        d: num(2)?,
                        mu: num(3)?,
                        kappa_types: split(&rec[4]).map(String::from).collect(),
                        charpoly,
                        flags: Flags { reduced: flag(6)?, all_below_half: flag(7)? },
                    })
                })
                .collect()
        }
    }
}
