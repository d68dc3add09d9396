use serde_json::{Map, Value};

/// A report: ordered key/value entries rendered as text or JSON, plus the
/// overall verdict.
#[derive(Clone, Debug)]
pub struct Output {
    pub command: String,
    pub ok: bool,
    entries: Map<String, Value>,
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| x.is_number() || x.is_boolean()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(xs) => xs.iter().map(inline).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn render_into(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if is_inline(v) {
        out.push_str(&format!("{pad}{key}: {}\n", inline(v)));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                render_into(out, k, x, indent + 1);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                if is_inline(x) {
                    out.push_str(&format!("{pad}  {}\n", inline(x)));
                } else {
                    render_into(out, &format!("[{i}]"), x, indent + 1);
                }
            }
        }
        _ => unreachable!("inline values handled above"),
    }
}

impl Output {
    pub fn new(command: &str) -> Output {
        Output {
            command: command.into(),
            ok: true,
            entries: Map::new(),
        }
    }

    pub fn put(&mut self, key: &str, v: impl Into<Value>) {
        self.entries.insert(key.into(), v.into());
    }

    /// Records a check; a failing one makes the whole report fail.
    pub fn check(&mut self, key: &str, passed: bool, detail: impl Into<Value>) {
        if !passed {
            self.ok = false;
        }
        let mut m = Map::new();
        m.insert("ok".into(), passed.into());
        let d: Value = detail.into();
        if !d.is_null() {
            m.insert("detail".into(), d);
        }
        self.entries.insert(key.into(), Value::Object(m));
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut m = Map::new();
            m.insert("command".into(), self.command.clone().into());
            m.insert("ok".into(), self.ok.into());
            m.insert("report".into(), Value::Object(self.entries.clone()));
            let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = format!("# {}\n", self.command);
        for (k, v) in &self.entries {
            render_into(&mut out, k, v, 0);
        }
        out.push_str(if self.ok { "status: ok\n" } else { "status: FAILED\n" });
        out
    }
}

pub fn matrix_value(m: &exactla::Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::String(m.row(i).iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")))
            .collect(),
    )
}

pub fn report_value(r: &cat_backends::Report) -> Value {
    Value::Array(
        r.violations
            .iter()
            .map(|v| {
                let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
                Value::String(format!("{} ({})", v.axiom, idx.join(",")))
            })
            .collect(),
    )
}
