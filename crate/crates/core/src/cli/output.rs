//! Machine-readable output: JSON with floats printed to 17 significant
//! digits (enough to round-trip a double bit-for-bit) and the fixed-column
//! CSV schema.

use serde::Serialize;
use std::io::{self, Write};

use super::record::OutputRecord;

/// `serde_json` formatter that prints every float as `{:.16e}` — one digit
/// before the point plus sixteen after, so downstream tools can reproduce
/// comparisons exactly.
struct SigDigits17;

impl serde_json::ser::Formatter for SigDigits17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize to a single-line JSON string with 17-significant-digit floats.
pub fn to_json(value: &impl Serialize) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigits17);
    value
        .serialize(&mut ser)
        .expect("record serialization is infallible");
    String::from_utf8(buf).expect("serialized JSON is UTF-8")
}

/// The fixed CSV header; JSONL records use the same field names.
pub const CSV_HEADER: &str = "family,j,k,z_re,z_im,x,closed_re,closed_im,series_re,series_im,abs_err,rel_err,terms_used,t_closed_ns,t_series_ns";

pub fn write_csv<W: Write>(out: &mut W, records: &[OutputRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{},{}",
            r.family,
            r.j,
            r.k,
            r.z_re,
            r.z_im,
            r.x,
            r.closed_re,
            r.closed_im,
            r.series_re,
            r.series_im,
            r.abs_err,
            r.rel_err,
            r.terms_used,
            r.t_closed_ns,
            r.t_series_ns
        )?;
    }
    Ok(())
}

pub fn write_jsonl<W: Write>(out: &mut W, records: &[OutputRecord]) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", to_json(r))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_through_seventeen_digits() {
        #[derive(Serialize)]
        struct One {
            v: f64,
        }
        for &v in &[
            std::f64::consts::E,
            -1.0 / 3.0,
            1.543080634815244e0,
            6.02e23,
            -0.0,
            5e-324,
        ] {
            let json = to_json(&One { v });
            let parsed: serde_json::Value = json.parse().expect("valid JSON");
            let back = parsed["v"].as_f64().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{json}");
        }
    }

    #[test]
    fn header_matches_record_fields() {
        let columns = CSV_HEADER.split(',').count();
        assert_eq!(columns, 15);
    }
}
