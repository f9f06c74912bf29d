//! Minimal Graphviz text emitter with deterministic output order.

use std::fmt::Write;

pub struct DotWriter {
    out: String,
    arrow: &'static str,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl DotWriter {
    pub fn directed(name: &str) -> Self {
        DotWriter { out: format!("digraph {} {{\n", quote(name)), arrow: "->" }
    }

    pub fn undirected(name: &str) -> Self {
        DotWriter { out: format!("graph {} {{\n", quote(name)), arrow: "--" }
    }

    pub fn node(&mut self, id: &str, label: &str, attrs: Option<&str>) {
        let extra = attrs.map(|a| format!(", {a}")).unwrap_or_default();
        writeln!(self.out, "  {id} [label={}{extra}];", quote(label)).unwrap();
    }

    pub fn edge(&mut self, from: &str, to: &str, label: Option<&str>, attrs: Option<&str>) {
        let mut parts = Vec::new();
        if let Some(l) = label {
            parts.push(format!("label={}", quote(l)));
        }
        if let Some(a) = attrs {
            parts.push(a.to_string());
        }
        let tail = if parts.is_empty() { String::new() } else { format!(" [{}]", parts.join(", ")) };
        writeln!(self.out, "  {from} {} {to}{tail};", self.arrow).unwrap();
    }

    pub fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}
