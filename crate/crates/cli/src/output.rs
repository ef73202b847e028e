//! Output sinks and the little table model shared by the subcommands.

use std::io::Write;
use std::path::PathBuf;

use berger_eta::error::Error;

/// Either standard output or a file.
pub enum OutputSink {
    Stdout(std::io::Stdout),
    File(std::fs::File),
}

impl OutputSink {
    pub fn open(path: &Option<PathBuf>) -> Result<Self, Error> {
        match path {
            None => Ok(OutputSink::Stdout(std::io::stdout())),
            Some(p) => std::fs::File::create(p)
                .map(OutputSink::File)
                .map_err(|e| Error::Parse(format!("cannot create {}: {e}", p.display()))),
        }
    }

    pub fn write_str(&mut self, s: &str) -> Result<(), Error> {
        let res = match self {
            OutputSink::Stdout(out) => out.write_all(s.as_bytes()),
            OutputSink::File(f) => f.write_all(s.as_bytes()),
        };
        res.map_err(|e| Error::Parse(format!("write failed: {e}")))
    }

    pub fn writeln(&mut self, s: &str) -> Result<(), Error> {
        self.write_str(s)?;
        self.write_str("\n")
    }
}

/// Row-oriented table: a key column plus value columns, with an optional
/// non-authoritative decimal column.
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<(String, Vec<String>, Option<String>)>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table { headers, rows: Vec::new() }
    }

    pub fn push_row(&mut self, key: String, values: Vec<String>, approx: Option<String>) {
        self.rows.push((key, values, approx));
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|(key, values, approx)| {
                let mut obj = serde_json::Map::new();
                obj.insert(self.headers[0].to_string(), serde_json::json!(key.parse::<u64>().ok().map_or(serde_json::json!(key), |n| serde_json::json!(n))));
                for (h, v) in self.headers[1..].iter().zip(values.iter()) {
                    obj.insert(h.to_string(), serde_json::json!(v));
                }
                if let Some(a) = approx {
                    obj.insert("approx".to_string(), serde_json::json!(a));
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        if self.rows.iter().any(|r| r.2.is_some()) {
            out.push_str(",approx");
        }
        out.push('\n');
        for (key, values, approx) in &self.rows {
            out.push_str(key);
            for v in values {
                out.push(',');
                out.push_str(v);
            }
            if let Some(a) = approx {
                out.push(',');
                out.push_str(a);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for (key, values, _) in &self.rows {
            widths[0] = widths[0].max(key.len());
            for (i, v) in values.iter().enumerate() {
                widths[i + 1] = widths[i + 1].max(v.len());
            }
        }
        let mut out = String::new();
        let has_approx = self.rows.iter().any(|r| r.2.is_some());
        for (i, h) in self.headers.iter().enumerate() {
            out.push_str(&format!("{:<w$}  ", h, w = widths[i]));
        }
        if has_approx {
            out.push_str("approx (non-authoritative)");
        }
        out.push('\n');
        for (key, values, approx) in &self.rows {
            out.push_str(&format!("{:<w$}  ", key, w = widths[0]));
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{:<w$}  ", v, w = widths[i + 1]));
            }
            if let Some(a) = approx {
                out.push_str(a);
            }
            out.push('\n');
        }
        out
    }
}
