//! Text, JSON and LaTeX renderings of presentations, algebras and reports.

use operad_forge::config::Subset;
use operad_forge::rota_baxter::algebra::tuples;
use operad_forge::rota_baxter::{Algebra, Matrix};
use operad_forge::splitting::split_id;
use operad_forge::{json, rational, Configuration, Poly, Presentation, Rational, Report, Result, Status, Sym, Tree};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

pub type Glyphs = BTreeMap<Sym, String>;

/// Default glyphs for a split presentation: `≺ ≻ ·` for the parts of a lone
/// binary generator and `↖ ↑ ↗` for the singleton parts of a lone ternary one.
pub fn default_glyphs(base: &Presentation, c: &Configuration) -> Glyphs {
    let mut out = Glyphs::new();
    let of_arity = |n: usize| base.alphabet().generators().filter(|g| g.arity == n).collect::<Vec<_>>();
    if let [g] = of_arity(2)[..] {
        for (part, glyph) in [(vec![1], "≺"), (vec![2], "≻"), (vec![1, 2], "·")] {
            let part = Subset::new(part);
            if c.contains(2, &part) {
                out.insert(split_id(&g.id, &part), glyph.into());
            }
        }
    }
    if let [g] = of_arity(3)[..] {
        for (k, glyph) in [(1, "↖"), (2, "↑"), (3, "↗")] {
            let part = Subset::singleton(k);
            if c.contains(3, &part) {
                out.insert(split_id(&g.id, &part), glyph.into());
            }
        }
    }
    out
}

/// `id=glyph;id=glyph`. Semicolons separate entries since split ids contain
/// commas.
pub fn parse_glyphs(s: &str) -> Result<Glyphs> {
    let mut out = Glyphs::new();
    for entry in s.split(';').filter(|e| !e.trim().is_empty()) {
        let (id, glyph) = entry
            .split_once('=')
            .ok_or_else(|| operad_forge::Error::Parse(format!("glyph entry `{entry}` is not id=glyph")))?;
        out.insert(Sym::new(id.trim()), glyph.trim().to_string());
    }
    Ok(out)
}

fn latex_glyph(g: &str) -> String {
    match g {
        "≺" => r"\prec".into(),
        "≻" => r"\succ".into(),
        "·" => r"\cdot".into(),
        "↖" => r"\nwarrow".into(),
        "↑" => r"\uparrow".into(),
        "↗" => r"\nearrow".into(),
        "∗" => r"\ast".into(),
        _ if g.is_ascii() => format!(r"\mathbin{{\mathtt{{{}}}}}", escape_text(g)),
        _ => format!(r"\mathbin{{\text{{{}}}}}", escape_text(g)),
    }
}

fn latex_name(s: &str) -> String {
    format!(r"\mathrm{{{}}}", escape_text(s))
}

/// The `(ω, e_I)` fallback for split generators without a glyph.
fn generator_label(g: &Sym, glyphs: &Glyphs, style: Style) -> (String, bool) {
    if let Some(glyph) = glyphs.get(g) {
        let s = match style {
            Style::Text => glyph.clone(),
            Style::Latex => latex_glyph(glyph),
        };
        return (s, true);
    }
    let id = g.as_str();
    let split = id.strip_suffix(']').and_then(|s| s.rsplit_once('['));
    let s = match (split, style) {
        (Some((base, key)), Style::Text) => format!("({base},e_{{{key}}})"),
        (Some((base, key)), Style::Latex) => format!("({}, e_{{{key}}})", latex_name(base)),
        (None, Style::Text) => id.to_string(),
        (None, Style::Latex) => latex_name(id),
    };
    (s, false)
}

fn tree_str(t: &Tree, glyphs: &Glyphs, style: Style, top: bool) -> String {
    match t {
        Tree::Leaf(k) => match style {
            Style::Text => format!("x{k}"),
            Style::Latex => format!("x_{{{k}}}"),
        },
        Tree::Node(g, cs) => {
            let (label, glyph) = generator_label(g, glyphs, style);
            if glyph && cs.len() == 2 {
                let inner = format!(
                    "{} {label} {}",
                    tree_str(&cs[0], glyphs, style, false),
                    tree_str(&cs[1], glyphs, style, false)
                );
                if top {
                    inner
                } else {
                    match style {
                        Style::Text => format!("({inner})"),
                        Style::Latex => format!(r"\left({inner}\right)"),
                    }
                }
            } else {
                let kids: Vec<String> = cs.iter().map(|c| tree_str(c, glyphs, style, true)).collect();
                match style {
                    Style::Text => format!("{label}({})", kids.join(", ")),
                    Style::Latex => format!(r"{label}\left({}\right)", kids.join(", ")),
                }
            }
        }
    }
}

fn side(terms: &[(Rational, &Tree)], glyphs: &Glyphs, style: Style) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(c, t)| {
            let body = tree_str(t, glyphs, style, true);
            if *c == rational::one() {
                body
            } else {
                let coeff = match style {
                    Style::Text => rational::pretty(c),
                    Style::Latex if c.is_integer() => rational::pretty(c),
                    Style::Latex => format!(r"\tfrac{{{}}}{{{}}}", c.numer(), c.denom()),
                };
                format!("{coeff} {body}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `positive terms = negated negative terms`.
fn relation_sides(p: &Poly, glyphs: &Glyphs, style: Style) -> (String, String) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (t, c) in p.iter() {
        if rational::is_negative(c) {
            neg.push((-c.clone(), t));
        } else {
            pos.push((c.clone(), t));
        }
    }
    if pos.is_empty() {
        std::mem::swap(&mut pos, &mut neg);
    }
    (side(&pos, glyphs, style), side(&neg, glyphs, style))
}

pub fn relation_text(p: &Poly, glyphs: &Glyphs) -> String {
    let (l, r) = relation_sides(p, glyphs, Style::Text);
    format!("{l} = {r}")
}

fn generators_line(p: &Presentation) -> String {
    p.alphabet()
        .generators()
        .map(|g| {
            let mut s = format!("{}/{}", g.id, g.arity);
            if !g.action.is_empty() {
                let acts: Vec<String> = g
                    .action
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        let sign = if e.sign < 0 { "-" } else { "" };
                        format!("({} {}):{sign}{}", i + 1, i + 2, e.target)
                    })
                    .collect();
                s.push_str(&format!(" [{}]", acts.join(" ")));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(", ")
}

const LATEX_HEAD: &str = "\\documentclass{article}\n\\usepackage{amsmath,amssymb}\n\\begin{document}\n";
const LATEX_TAIL: &str = "\\end{document}\n";

/// Relations only (text) or the full schema (JSON) or a standalone document.
pub fn presentation(p: &Presentation, glyphs: &Glyphs, format: Format, header: bool) -> String {
    match format {
        Format::Json => json::to_pretty(&json::presentation_to_json(p)) + "\n",
        Format::Text => {
            let mut out = String::new();
            if header {
                let kind = if p.is_symmetric() { "symmetric" } else { "nonsymmetric" };
                out.push_str(&format!("{} ({kind})\ngenerators: {}\nrelations:\n", p.name, generators_line(p)));
            }
            for r in p.relations() {
                out.push_str(&relation_text(r, glyphs));
                out.push('\n');
            }
            out
        }
        Format::Latex => {
            let mut out = String::from(LATEX_HEAD);
            out.push_str(&format!("\\section*{{{}}}\n", escape_text(&p.name)));
            if p.relations().is_empty() {
                out.push_str("No relations.\n");
            } else {
                out.push_str("\\begin{align*}\n");
                let lines: Vec<String> = p
                    .relations()
                    .iter()
                    .map(|r| {
                        let (l, r) = relation_sides(r, glyphs, Style::Latex);
                        format!("{l} &= {r}")
                    })
                    .collect();
                out.push_str(&lines.join(" \\\\\n"));
                out.push_str("\n\\end{align*}\n");
            }
            out.push_str(LATEX_TAIL);
            out
        }
    }
}

pub fn config(c: &Configuration, leaf_max: usize, format: Format) -> Result<String> {
    let levels: Vec<(usize, Vec<Subset>)> =
        (1..=leaf_max.min(c.n_max())).map(|n| Ok((n, c.members(n)?))).collect::<Result<_>>()?;
    Ok(match format {
        Format::Json => {
            let mut v = json::config_to_json(c);
            v["members"] = Value::Object(
                levels
                    .iter()
                    .map(|(n, l)| (n.to_string(), json!(l.iter().map(|s| s.elems().to_vec()).collect::<Vec<_>>())))
                    .collect(),
            );
            json::to_pretty(&v) + "\n"
        }
        Format::Text => {
            let mut out = format!("{} (index {}, n_max {})\n", c.name(), c.index(), c.n_max());
            for (n, l) in &levels {
                let sets: Vec<String> = l.iter().map(|s| s.to_string()).collect();
                out.push_str(&format!("C_{n}: {}\n", sets.join(" ")));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from(LATEX_HEAD);
            out.push_str(&format!("\\section*{{Configuration {}}}\n\\begin{{align*}}\n", escape_text(&c.name())));
            let lines: Vec<String> = levels
                .iter()
                .map(|(n, l)| {
                    let sets: Vec<String> = l.iter().map(|s| format!(r"\{{{}\}}", s.key())).collect();
                    format!(r"C_{{{n}}} &= \{{{}\}}", sets.join(", "))
                })
                .collect();
            out.push_str(&lines.join(" \\\\\n"));
            out.push_str("\n\\end{align*}\n");
            out.push_str(LATEX_TAIL);
            out
        }
    })
}

fn vector_text(v: &[Rational], style: Style) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if *c == rational::zero() {
            continue;
        }
        let basis = match style {
            Style::Text => format!("e{}", i + 1),
            Style::Latex => format!("e_{{{}}}", i + 1),
        };
        let neg = rational::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        let term = if mag == rational::one() { basis } else { format!("{} {basis}", rational::pretty(&mag)) };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn algebra_lines(a: &Algebra, style: Style) -> Vec<String> {
    let mut lines = Vec::new();
    for (g, t) in a.ops() {
        let mut any = false;
        let name = match style {
            Style::Text => g.to_string(),
            Style::Latex => generator_label(g, &Glyphs::new(), Style::Latex).0,
        };
        for idx in tuples(t.in_dims()) {
            let out = t.output(&idx);
            if out.iter().all(|x| *x == rational::zero()) {
                continue;
            }
            any = true;
            let args: Vec<String> = idx
                .iter()
                .map(|i| match style {
                    Style::Text => format!("e{}", i + 1),
                    Style::Latex => format!("e_{{{}}}", i + 1),
                })
                .collect();
            lines.push(match style {
                Style::Text => format!("{name}({}) = {}", args.join(","), vector_text(out, style)),
                Style::Latex => format!(r"{name}({}) &= {}", args.join(","), vector_text(out, style)),
            });
        }
        if !any {
            lines.push(match style {
                Style::Text => format!("{name} = 0"),
                Style::Latex => format!("{name} &= 0"),
            });
        }
    }
    lines
}

pub fn algebra(a: &Algebra, format: Format) -> String {
    match format {
        Format::Json => json::to_pretty(&json::algebra_to_json(a)) + "\n",
        Format::Text => {
            let mut out = format!("dimension {}\n", a.dim);
            for l in algebra_lines(a, Style::Text) {
                out.push_str(&l);
                out.push('\n');
            }
            out
        }
        Format::Latex => {
            let mut out = String::from(LATEX_HEAD);
            out.push_str(&format!("\\section*{{Algebra of dimension {}}}\n\\begin{{align*}}\n", a.dim));
            out.push_str(&algebra_lines(a, Style::Latex).join(" \\\\\n"));
            out.push_str("\n\\end{align*}\n");
            out.push_str(LATEX_TAIL);
            out
        }
    }
}

fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> =
        m.data.iter().map(|r| r.iter().map(rational::pretty).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

fn matrix_latex(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .data
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| if c.is_integer() { rational::pretty(c) } else { format!(r"\tfrac{{{}}}{{{}}}", c.numer(), c.denom()) })
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!("\\begin{{pmatrix}}{}\\end{{pmatrix}}", rows.join(r" \\ "))
}

pub fn operators(ops: &[Matrix], format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "count": ops.len(),
                "operators": ops.iter().map(json::operator_to_json).collect::<Vec<_>>(),
            });
            json::to_pretty(&v) + "\n"
        }
        Format::Text => {
            let mut out = format!("{} operator(s)\n", ops.len());
            for m in ops {
                out.push_str(&matrix_text(m));
                out.push('\n');
            }
            out
        }
        Format::Latex => {
            let mut out = String::from(LATEX_HEAD);
            out.push_str(&format!("\\section*{{{} operator(s)}}\n", ops.len()));
            for m in ops {
                out.push_str(&format!("\\[ P = {} \\]\n", matrix_latex(m)));
            }
            out.push_str(LATEX_TAIL);
            out
        }
    }
}

pub fn report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => r.to_json() + "\n",
        Format::Text => {
            let mut out = r.to_string();
            out.push_str(&format!(
                "{} passed, {} failed, {} not applicable\n",
                r.count(Status::Pass),
                r.count(Status::Fail),
                r.count(Status::NotApplicable)
            ));
            out
        }
        Format::Latex => {
            let mut out = String::from(LATEX_HEAD);
            out.push_str("\\section*{Report}\n");
            if r.checks.is_empty() {
                out.push_str("No checks.\n");
            } else {
                out.push_str("\\begin{itemize}\n");
                for c in &r.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::NotApplicable => "N/A",
                    };
                    out.push_str(&format!(
                        "\\item \\textbf{{{tag}}} {}: {}",
                        escape_text(&c.name),
                        escape_text(&c.detail)
                    ));
                    if let Some(w) = &c.witness {
                        out.push_str(&format!(" (witness: \\texttt{{{}}})", escape_text(w)));
                    }
                    out.push('\n');
                }
                out.push_str("\\end{itemize}\n");
            }
            out.push_str(LATEX_TAIL);
            out
        }
    }
}

/// Escapes LaTeX specials for text mode; common symbols become math
/// macros and any other non-ASCII character its code point.
pub fn escape_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str(r"\textbackslash{}"),
            '{' | '}' | '_' | '#' | '$' | '%' | '&' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str(r"\^{}"),
            '~' => out.push_str(r"\~{}"),
            c if c.is_ascii() => out.push(c),
            c => {
                let m = match c {
                    '≺' => r"\prec",
                    '≻' => r"\succ",
                    '·' => r"\cdot",
                    '↖' => r"\nwarrow",
                    '↑' => r"\uparrow",
                    '↗' => r"\nearrow",
                    '∈' => r"\in",
                    '∉' => r"\notin",
                    '⊆' => r"\subseteq",
                    '⊊' => r"\subsetneq",
                    '⊓' => r"\sqcap",
                    '≠' => r"\neq",
                    '≤' => r"\leq",
                    '≥' => r"\geq",
                    '→' => r"\to",
                    '↦' => r"\mapsto",
                    '⇔' => r"\Leftrightarrow",
                    'λ' => r"\lambda",
                    'ω' => r"\omega",
                    'σ' => r"\sigma",
                    'α' => r"\alpha",
                    '⋆' => r"\star",
                    '∗' => r"\ast",
                    '−' => "-",
                    _ => {
                        out.push_str(&format!("U+{:04X}", c as u32));
                        continue;
                    }
                };
                out.push_str(&format!(r"\ensuremath{{{m}}}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use operad_forge::catalog;
    use operad_forge::splitting::split_presentation;

    #[test]
    fn dendriform_text_uses_default_glyphs() {
        let as_ = catalog::assoc().unwrap();
        let c = Configuration::arity();
        let sp = split_presentation(&as_, &c).unwrap();
        let text = presentation(&sp, &default_glyphs(&as_, &c), Format::Text, false);
        assert_eq!(text.lines().count(), 3);
        assert!(text.contains("(x1 ≺ x2) ≺ x3 = x1 ≺ (x2 ≺ x3) + x1 ≺ (x2 ≻ x3)"), "{text}");
    }

    #[test]
    fn missing_glyph_falls_back() {
        let t = Tree::parse("mu[1,2](1,2)").unwrap();
        assert_eq!(tree_str(&t, &Glyphs::new(), Style::Text, true), "(mu,e_{1,2})(x1, x2)");
    }

    #[test]
    fn empty_report_json() {
        assert_eq!(report(&Report::new(), Format::Json).trim(), "{\n  \"checks\": []\n}");
    }

    #[test]
    fn glyph_table_parses() {
        let g = parse_glyphs("mu[1,2]=*; mu[1]=<").unwrap();
        assert_eq!(g[&Sym::new("mu[1,2]")], "*");
        assert!(parse_glyphs("nope").is_err());
    }

    #[test]
    fn latex_escapes() {
        assert_eq!(escape_text("pre_op"), r"pre\_op");
        assert_eq!(escape_text("a ⊓ b"), r"a \ensuremath{\sqcap} b");
    }
}
