use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::Allocation;
use crate::scalar::Scalar;
use crate::scenarios::CostTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderMode {
    Text,
    Csv,
    Json,
}

impl FromStr for RenderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(RenderMode::Text),
            "csv" => Ok(RenderMode::Csv),
            "json" => Ok(RenderMode::Json),
            _ => Err(Error::Config(format!("unknown output format `{s}` (text, csv or json)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowKey {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub values: Vec<f64>,
    pub total: f64,
    /// Exact values, when the column was computed with exact arithmetic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<String>>,
}

impl Column {
    /// Builds a column after checking that `shares` add up to `target`.
    /// Non-efficient values skip the check.
    pub fn checked<T: Scalar>(name: &str, shares: &Allocation<T>, target: &T, efficient: bool) -> Result<Self> {
        if efficient && !shares.is_efficient(target) {
            return Err(Error::Internal(format!(
                "column `{name}` sums to {} instead of {target}",
                shares.total()
            )));
        }
        Ok(Column {
            name: name.to_string(),
            values: shares.shares().iter().map(Scalar::to_f64_lossy).collect(),
            total: shares.total().to_f64_lossy(),
            exact: T::EXACT.then(|| shares.shares().iter().map(|x| x.to_string()).collect()),
        })
    }
}

/// Rows keyed by player or apartment, one column per value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_header: Option<String>,
    pub key_header: String,
    pub rows: Vec<RowKey>,
    pub columns: Vec<Column>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub footnotes: Vec<String>,
}

/// Four decimals, ties to even, no negative zero.
pub fn format4(x: f64) -> String {
    let s = format!("{x:.4}");
    if s.strip_prefix('-').is_some_and(|rest| rest.chars().all(|c| c == '0' || c == '.')) {
        s[1..].to_string()
    } else {
        s
    }
}

impl OutputTable {
    pub fn new(key_header: &str, rows: Vec<RowKey>) -> Self {
        OutputTable {
            title: None,
            group_header: None,
            key_header: key_header.to_string(),
            rows,
            columns: Vec::new(),
            footnotes: Vec::new(),
        }
    }

    pub fn push(&mut self, column: Column) -> Result<()> {
        if column.values.len() != self.rows.len() {
            return Err(Error::SizeMismatch(column.values.len(), self.rows.len()));
        }
        self.columns.push(column);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// The Dutch and Spanish columns of a cost table.
    pub fn from_cost_table<T: Scalar>(t: &CostTable<T>) -> Result<Self> {
        let rows = t
            .rows
            .iter()
            .map(|r| RowKey {
                group: Some(r.floor.clone()),
                label: r.apartment.clone(),
            })
            .collect();
        let mut out = OutputTable::new("apartment", rows);
        out.title = Some(format!("Table {}: {}", t.id, t.title));
        out.group_header = Some("floor".into());
        let dutch = Allocation::new(t.rows.iter().map(|r| r.dutch.clone()).collect());
        let spanish = Allocation::new(t.rows.iter().map(|r| r.spanish.clone()).collect());
        out.push(Column::checked("dutch", &dutch, &t.dutch_total, true)?)?;
        out.push(Column::checked("spanish", &spanish, &t.spanish_total, true)?)?;
        out.footnotes = t.footnotes.clone();
        Ok(out)
    }

    fn header(&self) -> Vec<String> {
        let mut h = Vec::new();
        if let Some(g) = &self.group_header {
            h.push(g.clone());
        }
        h.push(self.key_header.clone());
        h.extend(self.columns.iter().map(|c| c.name.clone()));
        h
    }

    fn body(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, key)| {
                let mut line = Vec::new();
                if self.group_header.is_some() {
                    line.push(key.group.clone().unwrap_or_default());
                }
                line.push(key.label.clone());
                line.extend(self.columns.iter().map(|c| format4(c.values[r])));
                line
            })
            .collect();
        let mut total = Vec::new();
        if self.group_header.is_some() {
            total.push(String::new());
        }
        total.push("total".into());
        total.extend(self.columns.iter().map(|c| format4(c.total)));
        out.push(total);
        out
    }

    pub fn render(&self, mode: RenderMode) -> String {
        match mode {
            RenderMode::Text => self.render_text(),
            RenderMode::Csv => self.render_csv(),
            RenderMode::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("tables serialize");
                s.push('\n');
                s
            }
        }
    }

    fn render_text(&self) -> String {
        let header = self.header();
        let body = self.body();
        let keys = if self.group_header.is_some() { 2 } else { 1 };
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                std::iter::once(&header)
                    .chain(&body)
                    .map(|line| line[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    s.push_str("  ");
                }
                if c < keys {
                    let _ = write!(s, "{cell:<w$}", w = widths[c]);
                } else {
                    let _ = write!(s, "{cell:>w$}", w = widths[c]);
                }
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        if let Some(t) = &self.title {
            out.push_str(t);
            out.push('\n');
        }
        out.push_str(&line(&header));
        out.push('\n');
        let rule: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
        out.push_str(&"-".repeat(rule));
        out.push('\n');
        let (rows, total) = body.split_at(body.len() - 1);
        for r in rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out.push_str(&"-".repeat(rule));
        out.push('\n');
        out.push_str(&line(&total[0]));
        out.push('\n');
        for f in &self.footnotes {
            let _ = writeln!(out, "note: {f}");
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.header()).expect("writing to memory");
        for r in self.body() {
            w.write_record(r).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenarios::reproduce;
    use num_rational::Rational64;

    #[test]
    fn rounding() {
        assert_eq!(format4(13.333333), "13.3333");
        assert_eq!(format4(16.66666), "16.6667");
        assert_eq!(format4(-0.00001), "0.0000");
        assert_eq!(format4(-66.66666), "-66.6667");
        assert_eq!(format4(0.00125), "0.0013");
        assert_eq!(format4(0.5), "0.5000");
    }

    #[test]
    fn efficiency_self_check() {
        let a = Allocation::new(vec![1.0, 2.0]);
        assert!(Column::checked("x", &a, &3.0, true).is_ok());
        assert!(matches!(Column::checked("x", &a, &4.0, true), Err(Error::Internal(_))));
        assert!(Column::checked("x", &a, &4.0, false).is_ok());
    }

    #[test]
    fn renders_cost_table() {
        let t = OutputTable::from_cost_table(&reproduce::<f64>(6).unwrap()).unwrap();
        let text = t.render(RenderMode::Text);
        assert!(text.contains("-66.6667"), "{text}");
        assert!(text.contains("-2060.0000"), "{text}");
        let csv = t.render(RenderMode::Csv);
        assert_eq!(csv.lines().next().unwrap(), "floor,apartment,dutch,spanish");
        assert_eq!(csv.lines().count(), 8);
    }

    #[test]
    fn json_round_trip() {
        for id in 1..=6 {
            let t = OutputTable::from_cost_table(&reproduce::<Rational64>(id).unwrap()).unwrap();
            let back = OutputTable::from_json(&t.render(RenderMode::Json)).unwrap();
            assert_eq!(back, t);
        }
    }
}
