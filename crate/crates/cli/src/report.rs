use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use crate::Format;

/// A command's output in every supported format, plus whether its internal
/// cross-checks passed.
pub struct Report {
    pub command: &'static str,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str, json: Value, text: String) -> Self {
        Report { command, json, text, csv: None, ok: true }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn checked(mut self, ok: bool) -> Self {
        self.ok &= ok;
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut doc = json!({ "schema": 1, "command": self.command });
                if let (Value::Object(dst), Value::Object(src)) = (&mut doc, &self.json) {
                    dst.extend(src.clone());
                }
                doc["ok"] = json!(self.ok);
                serde_json::to_string_pretty(&doc)? + "\n"
            }
            Format::Csv => match &self.csv {
                Some(c) => c.clone(),
                None => bail!("'{}' has no CSV form", self.command),
            },
        })
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let body = self.render(format)?;
        match out {
            Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                Ok(())
            }
        }
    }
}
