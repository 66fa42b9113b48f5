//! JSON serialization with floats printed to 17 significant digits, which
//! round-trips every finite f64 exactly and keeps reports byte-stable.

use std::io;

use serde::Serialize;

pub struct Sig17Formatter;

impl serde_json::ser::Formatter for Sig17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        if value.is_finite() {
            // One leading digit plus 16 after the point.
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.write_f64(writer, value as f64)
    }
}

/// Serialize to a compact JSON string with 17-significant-digit floats.
pub fn to_string_17<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17Formatter);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_roundtrip_exactly() {
        let values = [std::f64::consts::PI, 1.0 / 3.0, 2.0, -1.5e-300];
        for v in values {
            let s = to_string_17(&v).unwrap();
            let back: f64 = serde_json::from_str(&s).unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "{s}");
        }
    }

    #[test]
    fn digit_count_is_seventeen() {
        let s = to_string_17(&2.0f64).unwrap();
        assert_eq!(s, "2.0000000000000000e0");
    }
}
