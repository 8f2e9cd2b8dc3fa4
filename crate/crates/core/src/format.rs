//! The line-oriented poset file format and Graphviz export.
//!
//! ```text
//! poset NAME          # optional, before `elements`
//! elements l1 l2 ...  # exactly once
//! cover a b           # a < b, b covers a
//! ```
//!
//! `#` starts a comment that runs to end of line; blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetFile {
    pub name: Option<String>,
    pub poset: Poset,
}

impl PosetFile {
    pub fn parse(text: &str) -> Result<PosetFile> {
        let mut name = None;
        let mut elements: Option<Vec<String>> = None;
        let mut covers = Vec::new();
        let mut meaningful_lines = 0usize;

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, args)) = tokens.split_first() else {
                continue;
            };
            meaningful_lines += 1;
            let err = |message: String| Error::Parse { line, message };
            match keyword {
                "poset" => {
                    if meaningful_lines != 1 {
                        return Err(err("`poset` must be the first line".into()));
                    }
                    if args.len() != 1 {
                        return Err(err("expected `poset NAME`".into()));
                    }
                    name = Some(args[0].to_string());
                }
                "elements" => {
                    if elements.is_some() {
                        return Err(err("duplicate `elements` line".into()));
                    }
                    if args.is_empty() {
                        return Err(err("`elements` needs at least one label".into()));
                    }
                    elements = Some(args.iter().map(|s| s.to_string()).collect());
                }
                "cover" => {
                    if elements.is_none() {
                        return Err(err("`cover` before `elements`".into()));
                    }
                    if args.len() != 2 {
                        return Err(err("expected `cover LOW HIGH`".into()));
                    }
                    covers.push((args[0].to_string(), args[1].to_string()));
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }

        let elements = elements.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `elements` line".into(),
        })?;
        let poset = Poset::from_covers(&elements, &covers)?;
        Ok(PosetFile { name, poset })
    }

    pub fn to_text(&self) -> String {
        format_poset(&self.poset, self.name.as_deref())
    }
}

/// Parses a poset file and returns the poset.
pub fn parse_poset_file(text: &str) -> Result<Poset> {
    PosetFile::parse(text).map(|f| f.poset)
}

/// Serializes a poset as its cover relation in the file format.
pub fn format_poset(p: &Poset, name: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "poset {name}");
    }
    let _ = writeln!(out, "elements {}", p.labels().join(" "));
    for (lo, hi) in p.cover_labels() {
        let _ = writeln!(out, "cover {lo} {hi}");
    }
    out
}

fn dot_id(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Hasse diagram as a DOT digraph drawn bottom to top. Nodes and edges are
/// emitted in sorted label order.
pub fn emit_dot(p: &Poset) -> String {
    let mut nodes: Vec<&str> = p.labels().iter().map(String::as_str).collect();
    nodes.sort_unstable();
    let mut edges = p.cover_labels();
    edges.sort();

    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for n in nodes {
        let _ = writeln!(out, "  {};", dot_id(n));
    }
    for (lo, hi) in edges {
        let _ = writeln!(out, "  {} -> {};", dot_id(&lo), dot_id(&hi));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cover_before_elements_is_rejected() {
        let err = parse_poset_file("cover a b\nelements a b\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                message: "`cover` before `elements`".into()
            }
        );
    }

    #[test]
    fn duplicate_elements_propagate() {
        assert_eq!(
            parse_poset_file("elements a a\n").unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# leading comment\n\nposet T # name\nelements a b  # two\n\ncover a b\n";
        let f = PosetFile::parse(text).unwrap();
        assert_eq!(f.name.as_deref(), Some("T"));
        assert_eq!(
            f.poset.cover_labels(),
            vec![("a".to_string(), "b".to_string())]
        );
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_poset_file(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poset_file("elements a\nposet late\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset_file("elements a b\ncover a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset_file("elements a\nedge a a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset_file("elements a\nelements b\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_poset_file("elements a b\ncover a c\n").unwrap_err(),
            Error::UnknownLabel("c".into())
        );
    }

    #[test]
    fn dot_output_shape() {
        let fig1 = emit_dot(&fixtures::fig1());
        assert_eq!(fig1.matches("->").count(), 11);
        assert_eq!(
            fig1.lines()
                .filter(|l| l.ends_with(';') && !l.contains("->"))
                .count(),
            8 + 2
        );
        assert!(fig1.starts_with("digraph poset {\n  rankdir=BT;"));

        let single = parse_poset_file("elements a\n").unwrap();
        assert_eq!(
            emit_dot(&single),
            "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n  \"a\";\n}\n"
        );

        let chain3 = emit_dot(&fixtures::chain3());
        let edges: Vec<&str> = chain3.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(edges, vec!["  \"0\" -> \"m\";", "  \"m\" -> \"1\";"]);
    }

    #[test]
    fn fixture_text_round_trips() {
        for (name, p) in fixtures::all() {
            let text = format_poset(&p, Some(name));
            let again = PosetFile::parse(&text).unwrap();
            assert_eq!(again.poset, p);
            assert_eq!(again.name.as_deref(), Some(name));
            assert_eq!(again.to_text(), text);
        }
    }
}
