use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A verb's result in all three renderings, plus its exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Value,
    pub status: i32,
}

impl Output {
    pub fn new(text: String, header: &[&str], rows: Vec<Vec<String>>, json: Value) -> Output {
        Output { text, header: header.iter().map(|s| s.to_string()).collect(), rows, json, status: 0 }
    }

    pub fn with_status(mut self, status: i32) -> Output {
        self.status = status;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
            }
        }
    }
}

/// `(2,1)`; the empty partition is `()`.
pub fn parts(p: &[u32]) -> String {
    format!("({})", p.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

/// `[2,1]`, the bracket notation of the star table.
pub fn bracket(p: &[u32]) -> String {
    format!("[{}]", p.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}
