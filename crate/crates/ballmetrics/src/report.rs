//! Byte-stable serialization of results.
//!
//! All floating-point numbers are printed with 15 significant digits
//! (printf `%.15g` conventions), so a report is a pure function of its
//! inputs down to the byte level.

use std::io;

use serde::Serialize;

/// Formats a float with 15 significant digits, `%.15g` style: plain decimal
/// notation in the mid range, scientific with a signed two-digit exponent
/// outside it, trailing zeros trimmed.
pub fn fmt_g15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:.14e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..15).contains(&exp) {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{}{:02}", if exp < 0 { "-" } else { "+" }, exp.abs())
    } else {
        let digits_after_point = (14 - exp).max(0) as usize;
        let plain = format!("{:.*}", digits_after_point, x);
        if plain.contains('.') {
            plain
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            plain
        }
    }
}

/// `serde_json` formatter that routes every float through [`fmt_g15`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SigFigFormatter;

impl serde_json::ser::Formatter for SigFigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(fmt_g15(value).as_bytes())
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(fmt_g15(value as f64).as_bytes())
    }
}

/// Serializes a value as single-line JSON with stable float formatting.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory serialization cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}
