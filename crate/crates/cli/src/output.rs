use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// A subcommand result: the JSON body plus an optional natural table for CSV.
pub struct Payload {
    schema: String,
    body: Value,
    table: Option<Table>,
}

impl Payload {
    pub fn new(schema: String, body: Value, table: Option<Table>) -> Self {
        Payload {
            schema,
            body,
            table,
        }
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("schema".into(), Value::String(self.schema.clone()));
                match &self.body {
                    Value::Object(m) => obj.extend(m.clone()),
                    other => {
                        obj.insert("result".into(), other.clone());
                    }
                }
                let mut out = serde_json::to_vec_pretty(&Value::Object(obj))?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => self.render_csv(),
        }
    }

    // CSV payloads open with a `# schema: ...` comment line
    fn render_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut out = format!("# schema: {}\n", self.schema).into_bytes();
        let mut w = csv::Writer::from_writer(&mut out);
        match &self.table {
            Some(t) => {
                w.write_record(&t.header)?;
                for r in &t.rows {
                    w.write_record(r)?;
                }
            }
            None => {
                w.write_record(["key", "value"])?;
                let mut flat = Vec::new();
                flatten("", &self.body, &mut flat);
                for (k, v) in flat {
                    w.write_record([k, v])?;
                }
            }
        }
        w.flush()?;
        drop(w);
        Ok(out)
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flatten_nested() {
        let mut out = Vec::new();
        flatten("", &json!({"a": {"b": [1, "x"]}, "c": null}), &mut out);
        assert_eq!(
            out,
            vec![
                ("a.b.0".into(), "1".into()),
                ("a.b.1".into(), "x".into()),
                ("c".into(), String::new())
            ]
        );
    }

    #[test]
    fn csv_has_schema_line() {
        let p = Payload::new("s/1".into(), json!({"k": 2}), None);
        assert_eq!(
            String::from_utf8(p.render(Format::Csv).unwrap()).unwrap(),
            "# schema: s/1\nkey,value\nk,2\n"
        );
    }
}
