use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub findings: Vec<Finding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), status: Status::Ok, findings: Vec::new(), timing: None }
    }

    pub fn push(&mut self, name: &str, value: impl Into<Value>) {
        self.findings.push(Finding { name: name.to_string(), value: value.into() });
    }

    pub fn fail(&mut self) {
        if self.status == Status::Ok {
            self.status = Status::Failed;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, serde_json::to_value(self.status).unwrap().as_str().unwrap_or(""));
        for f in &self.findings {
            match &f.value {
                Value::String(s) if !s.contains('\n') => out.push_str(&format!("  {}: {}\n", f.name, s)),
                Value::String(s) => {
                    out.push_str(&format!("  {}:\n", f.name));
                    for l in s.lines() {
                        out.push_str(&format!("    {l}\n"));
                    }
                }
                Value::Array(items) if items.iter().all(|v| v.is_string()) => {
                    out.push_str(&format!("  {}:\n", f.name));
                    for v in items {
                        out.push_str(&format!("    {}\n", v.as_str().unwrap_or_default()));
                    }
                }
                v => out.push_str(&format!("  {}: {}\n", f.name, v)),
            }
        }
        if let Some(t) = self.timing {
            out.push_str(&format!("  time: {t:.3}s\n"));
        }
        out
    }
}
