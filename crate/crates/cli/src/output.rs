//! Output rendering: JSON (machine-first, default), CSV and aligned
//! human-readable tables.
//!
//! Every floating-point number in JSON and CSV is printed with 17
//! significant digits (`{:.16e}`), enough for a bit-exact f64 round trip,
//! so re-parsing a report reproduces the values exactly.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

/// JSON formatter that widens every f64 to 17 significant digits.
struct SciFormatter;

impl serde_json::ser::Formatter for SciFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize any value to JSON with full-precision floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value
        .serialize(&mut ser)
        .expect("output structs always serialize");
    String::from_utf8(out).expect("serialized JSON is UTF-8")
}

/// One typed output field; keeps CSV and human rendering in declaration
/// order without reflection.
pub enum Field {
    Int(u64),
    Float(f64),
    Floats(Vec<f64>),
    Text(String),
}

/// Anything the CLI can print as a flat record.
pub trait Record {
    fn fields(&self) -> Vec<(&'static str, Field)>;

    /// Derived values shown only in the human table (never in JSON/CSV,
    /// whose schemas are part of the contract).
    fn display_only_fields(&self) -> Vec<(&'static str, Field)> {
        Vec::new()
    }
}

pub fn render<T: Serialize + Record>(value: &T, format: Format) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Csv => to_csv(value),
        Format::Human => to_human(value),
    }
}

fn to_csv<T: Record>(value: &T) -> String {
    let fields = value.fields();
    let mut header = Vec::new();
    let mut row = Vec::new();
    for (name, field) in &fields {
        match field {
            Field::Int(v) => {
                header.push(name.to_string());
                row.push(v.to_string());
            }
            Field::Float(v) => {
                header.push(name.to_string());
                row.push(format!("{v:.16e}"));
            }
            Field::Floats(values) => {
                for (k, v) in values.iter().enumerate() {
                    header.push(format!("{name}_{k}"));
                    row.push(format!("{v:.16e}"));
                }
            }
            Field::Text(v) => {
                header.push(name.to_string());
                row.push(v.clone());
            }
        }
    }
    format!("{}\n{}", header.join(","), row.join(","))
}

fn to_human<T: Record>(value: &T) -> String {
    let mut fields = value.fields();
    fields.extend(value.display_only_fields());
    let width = fields.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    let mut lines = Vec::new();
    for (name, field) in &fields {
        let rendered = match field {
            Field::Int(v) => v.to_string(),
            Field::Float(v) => format!("{v}"),
            Field::Floats(values) => values
                .iter()
                .map(|v| format!("{v}"))
                .collect::<Vec<_>>()
                .join(" "),
            Field::Text(v) => v.clone(),
        };
        lines.push(format!("{name:<width$}  {rendered}"));
    }
    lines.join("\n")
}
