use serde_json::{Map, Value};

/// Tabular result of a command. A report with a single `value` column and
/// a single row prints as the bare value in CSV mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn scalar(value: String) -> Self {
        let mut r = Report::new(&["value"]);
        r.push(vec![value]);
        r
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn is_scalar(&self) -> bool {
        self.columns.len() == 1 && self.columns[0] == "value" && self.rows.len() == 1
    }

    pub fn to_csv(&self) -> String {
        if self.is_scalar() {
            return format!("{}\n", self.rows[0][0]);
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&serde_json::json!({ "results": results }))
            .expect("json serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_prints_bare() {
        assert_eq!(Report::scalar("-1".into()).to_csv(), "-1\n");
    }

    #[test]
    fn table_quotes_commas() {
        let mut r = Report::new(&["mu", "coefficient"]);
        r.push(vec!["2,1".into(), "1/2".into()]);
        assert_eq!(r.to_csv(), "mu,coefficient\n\"2,1\",1/2\n");
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["results"][0]["mu"], "2,1");
    }
}
