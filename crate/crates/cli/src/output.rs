use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Str(String),
    Null,
}

impl Cell {
    pub fn str(s: impl Into<String>) -> Self {
        Cell::Str(s.into())
    }

    pub fn opt(s: Option<String>) -> Self {
        s.map_or(Cell::Null, Cell::Str)
    }

    fn text(&self, null: &str) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Str(s) => s.clone(),
            Cell::Null => null.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Str(s) => Value::from(s.as_str()),
            Cell::Null => Value::Null,
        }
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

/// Rows with named columns, rendered as an aligned table, CSV, or one JSON
/// object per line.
#[derive(Debug, Clone)]
pub struct Records {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Records {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Table => self.write_table(out),
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.text("-")).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([self.columns[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |fields: Vec<&str>| -> String {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        for row in &cells {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.text("")))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        for row in &self.rows {
            let obj: Map<String, Value> = self
                .columns
                .iter()
                .zip(row)
                .map(|(k, v)| ((*k).to_string(), v.json()))
                .collect();
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Ok(())
    }
}

/// Closing lines: plain text for tables, one JSON object for JSON, nothing
/// for CSV so that the CSV stream stays rectangular.
pub fn write_summary(
    format: Format,
    out: &mut dyn Write,
    lines: &[String],
    json: Value,
) -> io::Result<()> {
    match format {
        Format::Table => {
            writeln!(out)?;
            for l in lines {
                writeln!(out, "{l}")?;
            }
            Ok(())
        }
        Format::Json => writeln!(out, "{json}"),
        Format::Csv => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Records {
        let mut r = Records::new(&["n", "value", "note"]);
        r.push(vec![Cell::from(1u32), Cell::str("0.5"), Cell::Null]);
        r.push(vec![Cell::from(10u32), Cell::str("-2.25"), Cell::str("x")]);
        r
    }

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        sample().write(format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn table() {
        assert_eq!(
            render(Format::Table),
            "n   value  note\n1   0.5    -\n10  -2.25  x\n"
        );
    }

    #[test]
    fn csv() {
        assert_eq!(render(Format::Csv), "n,value,note\n1,0.5,\n10,-2.25,x\n");
    }

    #[test]
    fn json_lines() {
        let text = render(Format::Json);
        let lines: Vec<Value> = text
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines[0]["n"], 1);
        assert_eq!(lines[0]["note"], Value::Null);
        assert_eq!(lines[1]["value"], "-2.25");
    }
}
