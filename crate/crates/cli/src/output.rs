use serde_json::Value;

/// Decimal rendering with 17 significant digits, positional for moderate
/// exponents and scientific otherwise.
pub fn fmt17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci
        .split_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("exponent in scientific format");
    if (-5..16).contains(&exp) {
        format!("{x:.prec$}", prec = (16 - exp) as usize)
    } else {
        sci
    }
}

/// Pretty JSON with two-space indentation and [`fmt17`] floats.
pub fn json(v: &Value) -> String {
    let mut s = String::new();
    write_value(v, 0, &mut s);
    s.push('\n');
    s
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize, out: &mut String| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Null | Value::Bool(_) | Value::String(_) => out.push_str(&v.to_string()),
        Value::Number(n) => match (n.as_i64(), n.as_f64()) {
            (Some(i), _) if !n.is_f64() => out.push_str(&i.to_string()),
            (_, Some(x)) if x.is_finite() => out.push_str(&fmt17(x)),
            _ => out.push_str("null"),
        },
        Value::Array(items) => {
            if items.iter().all(|i| !i.is_array() && !i.is_object()) {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    write_value(item, depth, out);
                }
                out.push(']');
                return;
            }
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                pad(depth + 1, out);
                write_value(item, depth + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                pad(depth + 1, out);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(item, depth + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push('}');
        }
    }
}

/// A flat record rendered as `key: value` lines, JSON, or a one-row CSV.
#[derive(Debug, Default)]
pub struct Record {
    fields: Vec<(String, Cell)>,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => fmt17(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

impl Record {
    pub fn num(mut self, key: &str, x: f64) -> Self {
        self.fields.push((key.into(), Cell::Num(x)));
        self
    }

    pub fn int(mut self, key: &str, i: i64) -> Self {
        self.fields.push((key.into(), Cell::Int(i)));
        self
    }

    pub fn text(mut self, key: &str, s: impl Into<String>) -> Self {
        self.fields.push((key.into(), Cell::Text(s.into())));
        self
    }

    pub fn table(&self) -> String {
        self.fields.iter().map(|(k, v)| format!("{k}: {}\n", v.render())).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.fields.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }

    pub fn csv_header(&self) -> String {
        let keys: Vec<&str> = self.fields.iter().map(|(k, _)| k.as_str()).collect();
        keys.join(",") + "\n"
    }

    pub fn csv_row(&self) -> String {
        let cells: Vec<String> = self.fields.iter().map(|(_, v)| csv_escape(&v.render())).collect();
        cells.join(",") + "\n"
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
