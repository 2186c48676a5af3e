//! CSV and JSON rendering of flat record lists.

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// How floating-point cells are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// Rounded to this many significant digits.
    Significant(usize),
    /// Shortest representation that parses back to the same double.
    RoundTrip,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Null,
    /// Nested object in JSON, `group.key` columns in CSV.
    Group(Vec<(&'static str, Cell)>),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Null, Cell::Num)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Cell)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, cell: impl Into<Cell>) -> Self {
        self.0.push((key, cell.into()));
        self
    }
}

/// Rounds `v` to `digits` significant digits.
pub fn round_significant(v: f64, digits: usize) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{:.*e}", digits.saturating_sub(1), v)
        .parse()
        .unwrap_or(v)
}

fn format_number(v: f64, precision: Precision) -> Option<String> {
    if !v.is_finite() {
        return None;
    }
    let v = match precision {
        Precision::Significant(d) => round_significant(v, d),
        Precision::RoundTrip => v,
    };
    Some(format!("{v}"))
}

fn flatten(prefix: Option<&str>, cells: &[(&'static str, Cell)], out: &mut Vec<(String, Cell)>) {
    for (key, cell) in cells {
        let name = match prefix {
            Some(p) => format!("{p}.{key}"),
            None => (*key).to_owned(),
        };
        match cell {
            Cell::Group(inner) => flatten(Some(&name), inner, out),
            other => out.push((name, other.clone())),
        }
    }
}

fn csv_field(cell: &Cell, precision: Precision) -> String {
    match cell {
        Cell::Num(v) => format_number(*v, precision).unwrap_or_default(),
        Cell::Int(v) => v.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Null | Cell::Group(_) => String::new(),
    }
}

fn json_value(cell: &Cell, precision: Precision) -> Value {
    match cell {
        Cell::Num(v) => format_number(*v, precision)
            .and_then(|s| s.parse::<f64>().ok())
            .and_then(Number::from_f64)
            .map_or(Value::Null, Value::Number),
        Cell::Int(v) => Value::from(*v),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Null => Value::Null,
        Cell::Group(inner) => Value::Object(
            inner
                .iter()
                .map(|(k, c)| ((*k).to_owned(), json_value(c, precision)))
                .collect(),
        ),
    }
}

/// Renders records as CSV (header row from the first record) or as a JSON
/// object `{"records": [...]}`.
pub fn render(records: &[Record], format: Format, precision: Precision) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    Value::Object(
                        r.0.iter()
                            .map(|(k, c)| ((*k).to_owned(), json_value(c, precision)))
                            .collect::<Map<_, _>>(),
                    )
                })
                .collect();
            let mut root = Map::new();
            root.insert("records".to_owned(), Value::Array(rows));
            let mut text = serde_json::to_string_pretty(&Value::Object(root))
                .expect("JSON values always serialize");
            text.push('\n');
            text
        }
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::CRLF)
                .from_writer(Vec::new());
            let mut header_written = false;
            for record in records {
                let mut flat = Vec::new();
                flatten(None, &record.0, &mut flat);
                if !header_written {
                    writer
                        .write_record(flat.iter().map(|(k, _)| k.as_str()))
                        .expect("in-memory write");
                    header_written = true;
                }
                writer
                    .write_record(flat.iter().map(|(_, c)| csv_field(c, precision)))
                    .expect("in-memory write");
            }
            let bytes = writer.into_inner().expect("in-memory flush");
            String::from_utf8(bytes).expect("CSV fields are UTF-8")
        }
    }
}
