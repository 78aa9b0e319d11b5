use std::fmt::Write;

use super::lexer::is_name_char;
use super::CatDoc;

fn name(s: &str) -> String {
    if !s.is_empty() && s.chars().all(is_name_char) {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Canonical text for a document; `parse(render(d))` gives back `d`.
pub fn render(doc: &CatDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "category {} {{", name(&doc.name));
    if !doc.objects.is_empty() {
        let objects: Vec<String> = doc.objects.iter().map(|o| name(o)).collect();
        let _ = writeln!(out, "  objects: {};", objects.join(", "));
    }
    if !doc.morphisms.is_empty() {
        let _ = writeln!(out, "  morphisms:");
        for (k, m) in doc.morphisms.iter().enumerate() {
            let sep = if k + 1 == doc.morphisms.len() {
                ';'
            } else {
                ','
            };
            let _ = writeln!(
                out,
                "    {}: {} -> {}{sep}",
                name(&m.name),
                name(&m.dom),
                name(&m.cod)
            );
        }
    }
    for (o, id) in doc.objects.iter().zip(&doc.identities) {
        let _ = writeln!(out, "  id {} = {};", name(o), name(id));
    }
    for c in &doc.compositions {
        let _ = writeln!(out, "  {} . {} = {};", name(&c.g), name(&c.f), name(&c.h));
    }
    out.push_str("}\n");
    for block in &doc.cmon {
        let _ = writeln!(
            out,
            "\ncmon hom({}, {}) {{",
            name(&block.dom),
            name(&block.cod)
        );
        let _ = writeln!(out, "  zero = {};", name(&block.zero));
        for (f, g, h) in &block.sums {
            let _ = writeln!(out, "  {} + {} = {};", name(f), name(g), name(h));
        }
        out.push_str("}\n");
    }
    for w in &doc.witnesses {
        let _ = writeln!(out, "\nwitness {} {{", name(&w.name));
        let _ = writeln!(out, "  carrier: {};", name(&w.carrier));
        for (key, value) in [
            ("pA", &w.p_a),
            ("pB", &w.p_b),
            ("iA", &w.i_a),
            ("iB", &w.i_b),
        ] {
            let _ = writeln!(out, "  {key} = {};", name(value));
        }
        out.push_str("}\n");
    }
    out
}
