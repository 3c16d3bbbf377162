//! Output formatting. Values stay exact unless `--float` is given.

use clap::ValueEnum;
use num_traits::ToPrimitive;
use posetprob::ExactRational;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct Renderer {
    pub format: Format,
    pub float: bool,
}

/// `x` to `digits` significant digits, in positional notation.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

impl Renderer {
    /// `p/q` in lowest terms (`p` for integers), or a 15 digit decimal.
    pub fn rational(&self, x: &ExactRational) -> String {
        if self.float {
            significant(x.to_f64().unwrap_or(f64::NAN), 15)
        } else {
            x.to_string()
        }
    }

    pub fn json_rational(&self, x: &ExactRational) -> Value {
        if self.float {
            x.to_f64().map(Value::from).unwrap_or(Value::Null)
        } else {
            Value::String(x.to_string())
        }
    }
}

/// CSV with a header row; non-numeric fields such as `8/15` are quoted.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

pub fn json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}
