// Copyright 2026 The qdense Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Deterministic report rendering: JSON, CSV, and aligned tables.
//!
//! All three emitters consume the same column/row model, so every format
//! carries identical values. Floating-point cells are rounded to 12
//! significant digits and then printed in the shortest form that round-trips
//! the rounded value — identical invocations therefore produce byte-identical
//! output on any platform.

use std::fmt::Write as _;

/// One report cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// A plain string (scheme names, statuses). Assumed to need no quoting:
    /// the report vocabulary is fixed lowercase ASCII words.
    Text(&'static str),
    /// A non-negative integer.
    Int(u64),
    /// A finite float, rounded on output.
    Float(f64),
    /// An absent optional value: `null` in JSON, empty in CSV, `-` in
    /// tables.
    Empty,
}

/// A rectangular report: fixed column names plus rows of cells.
#[derive(Debug, Clone)]
pub struct Report {
    columns: &'static [&'static str],
    rows: Vec<Vec<Cell>>,
}

impl Report {
    /// Creates an empty report with the given column schema.
    pub fn new(columns: &'static [&'static str]) -> Self {
        Report { columns, rows: Vec::new() }
    }

    /// Appends one row; its arity must match the schema.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row arity must match the schema");
        self.rows.push(row);
    }

    /// Renders as a JSON array of objects, one object per row, keys in
    /// column order. Single-row reports render as one object instead.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        if self.rows.len() == 1 {
            out.push_str(&self.row_to_json(&self.rows[0]));
        } else {
            out.push_str("[\n");
            for (i, row) in self.rows.iter().enumerate() {
                out.push_str("  ");
                out.push_str(&self.row_to_json(row));
                if i + 1 < self.rows.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push(']');
        }
        out.push('\n');
        out
    }

    fn row_to_json(&self, row: &[Cell]) -> String {
        let mut out = String::from("{");
        for (i, (name, cell)) in self.columns.iter().zip(row).enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{name}\":");
            out.push_str(&match cell {
                Cell::Text(s) => format!("\"{s}\""),
                Cell::Int(v) => v.to_string(),
                Cell::Float(v) => format_float(*v),
                Cell::Empty => "null".into(),
            });
        }
        out.push('}');
        out
    }

    /// Renders as CSV: a header row then one line per row, comma-separated,
    /// LF line endings. The fixed vocabulary never needs quoting.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Renders as a human-oriented aligned table (same values as the
    /// machine formats).
    pub fn to_table(&self) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(table_cell).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, name)| {
                rendered
                    .iter()
                    .map(|row| row[i].len())
                    .chain(std::iter::once(name.len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        let mut out = String::new();
        for (i, name) in self.columns.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{name:<width$}", width = widths[i]);
        }
        out.push('\n');
        for row in &rendered {
            let mut line = String::new();
            for (i, value) in row.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                let _ = write!(line, "{value:<width$}", width = widths[i]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Text(s) => (*s).to_string(),
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format_float(*v),
        Cell::Empty => String::new(),
    }
}

fn table_cell(cell: &Cell) -> String {
    match cell {
        Cell::Empty => "-".into(),
        other => csv_cell(other),
    }
}

/// Formats a float deterministically: round to 12 significant digits, then
/// print the shortest form that parses back to the rounded value. Integral
/// values in the exactly-representable range print without a fraction;
/// very small or very large magnitudes use exponent notation.
pub fn format_float(value: f64) -> String {
    debug_assert!(value.is_finite(), "reports only contain finite values");
    // `{:.11e}` keeps 12 significant digits; parsing back yields the
    // rounded double whose shortest representation we then print.
    let rounded: f64 = format!("{value:.11e}").parse().expect("rounded float parses");
    let magnitude = rounded.abs();
    const INTEGER_EXACT: f64 = 9_007_199_254_740_992.0; // 2^53
    if rounded == rounded.trunc() && magnitude < INTEGER_EXACT {
        format!("{}", rounded as i64)
    } else if magnitude < 1e-4 || magnitude >= 1e15 {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_canonical() {
        assert_eq!(format_float(6.0), "6");
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(51.2), "51.2");
        assert_eq!(format_float(0.25), "0.25");
        assert_eq!(format_float(-2.5), "-2.5");
        // 8/6 rounded to 12 significant digits.
        assert_eq!(format_float(8.0 / 6.0), "1.33333333333");
        // Tiny and huge magnitudes take exponent form.
        assert_eq!(format_float(2.220446049250313e-16), "2.22044604925e-16");
        assert_eq!(format_float(4.5e304), "4.5e304");
        // Rounding can carry into an integer.
        assert_eq!(format_float(2.9999999999999996), "3");
    }

    #[test]
    fn json_renders_single_object_and_arrays() {
        let mut single = Report::new(&["scheme", "bits"]);
        single.push(vec![Cell::Text("pairwise"), Cell::Float(6.0)]);
        assert_eq!(single.to_json(), "{\"scheme\":\"pairwise\",\"bits\":6}\n");

        let mut many = Report::new(&["n", "rate"]);
        many.push(vec![Cell::Int(1), Cell::Float(1.0)]);
        many.push(vec![Cell::Int(2), Cell::Empty]);
        assert_eq!(
            many.to_json(),
            "[\n  {\"n\":1,\"rate\":1},\n  {\"n\":2,\"rate\":null}\n]\n"
        );
    }

    #[test]
    fn csv_renders_header_and_empty_cells() {
        let mut report = Report::new(&["scheme", "N", "erroneous_rate"]);
        report.push(vec![Cell::Text("pairwise"), Cell::Int(1), Cell::Float(1.0)]);
        report.push(vec![Cell::Text("ghz"), Cell::Int(1), Cell::Empty]);
        assert_eq!(report.to_csv(), "scheme,N,erroneous_rate\npairwise,1,1\nghz,1,\n");
    }

    #[test]
    fn table_aligns_columns() {
        let mut report = Report::new(&["scheme", "n"]);
        report.push(vec![Cell::Text("pairwise"), Cell::Int(10)]);
        report.push(vec![Cell::Text("ghz"), Cell::Empty]);
        assert_eq!(report.to_table(), "scheme    n\npairwise  10\nghz       -\n");
    }
}
