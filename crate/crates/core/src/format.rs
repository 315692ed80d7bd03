//! Line-oriented text formats for problem instances.
//!
//! Both formats are SteinLib-style sectioned files. Vertices are numbered
//! 1..=n in files and 0..n in memory. Blank lines are ignored and `#` starts
//! a comment. Rendering emits single-space separated tokens with a trailing
//! newline, so output is byte-reproducible.
//!
//! Steiner instance (`.stp`):
//!
//! ```text
//! SECTION Graph
//! Nodes <n>
//! Edges <m>
//! E <u> <v> <cost>
//! END
//! SECTION Terminals
//! Terminals <t>
//! T <v>
//! END
//! EOF
//! ```
//!
//! Group Steiner instance (`.gstp`): the same Graph section, then
//!
//! ```text
//! SECTION Groups
//! Groups <k>
//! G <v1> <v2> ... <vj>
//! END
//! EOF
//! ```

use crate::error::{Error, Result};
use crate::graph::{Cost, Graph, VertexId};
use crate::instance::{GstpInstance, StpgInstance};
use std::collections::BTreeSet;
use std::fmt::Write as _;

struct LineReader<'a> {
    lines: std::vec::IntoIter<(usize, &'a str)>,
    last_line: usize,
}

impl<'a> LineReader<'a> {
    fn new(text: &'a str) -> Self {
        let mut content = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            if !line.trim().is_empty() {
                content.push((i + 1, line));
            }
        }
        LineReader {
            lines: content.into_iter(),
            last_line,
        }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        self.lines
            .next()
            .map(|(no, line)| (no, line.split_whitespace().collect()))
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.next().ok_or_else(|| Error::Syntax {
            line: self.last_line + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn expect_keywords(reader: &mut LineReader, keywords: &[&str]) -> Result<usize> {
    let what = keywords.join(" ");
    let (line, tokens) = reader.expect(&format!("'{what}'"))?;
    if tokens != keywords {
        return Err(syntax(
            line,
            format!("expected '{what}', found '{}'", tokens.join(" ")),
        ));
    }
    Ok(line)
}

fn parse_count(reader: &mut LineReader, keyword: &str, min: usize) -> Result<usize> {
    let (line, tokens) = reader.expect(&format!("'{keyword} <count>'"))?;
    if tokens.len() != 2 || tokens[0] != keyword {
        return Err(syntax(
            line,
            format!("expected '{keyword} <count>', found '{}'", tokens.join(" ")),
        ));
    }
    let count: usize = tokens[1]
        .parse()
        .map_err(|_| syntax(line, format!("invalid {keyword} count '{}'", tokens[1])))?;
    if count < min {
        return Err(syntax(
            line,
            format!("{keyword} count must be at least {min}"),
        ));
    }
    Ok(count)
}

/// Parses a 1-based vertex token into a 0-based id.
fn parse_vertex(token: &str, line: usize, vertex_count: usize) -> Result<VertexId> {
    let value: i64 = token
        .parse()
        .map_err(|_| syntax(line, format!("invalid vertex number '{token}'")))?;
    if value < 1 || value as u128 > vertex_count as u128 {
        return Err(Error::UnknownVertex {
            line,
            vertex: value,
        });
    }
    Ok((value - 1) as VertexId)
}

fn parse_cost(token: &str, line: usize) -> Result<Cost> {
    let value: i128 = token
        .parse()
        .map_err(|_| syntax(line, format!("invalid cost '{token}'")))?;
    if value <= 0 {
        return Err(Error::NonPositiveCost {
            line,
            value: value.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
        });
    }
    if value > u64::MAX as i128 {
        return Err(syntax(line, format!("cost '{token}' out of range")));
    }
    Ok(value as Cost)
}

fn parse_graph_section(reader: &mut LineReader) -> Result<Graph> {
    expect_keywords(reader, &["SECTION", "Graph"])?;
    let vertex_count = parse_count(reader, "Nodes", 1)?;
    let edge_count = parse_count(reader, "Edges", 0)?;
    let mut edges = Vec::with_capacity(edge_count);
    let mut seen = BTreeSet::new();
    for _ in 0..edge_count {
        let (line, tokens) = reader.expect("'E <u> <v> <cost>'")?;
        if tokens.len() != 4 || tokens[0] != "E" {
            return Err(syntax(
                line,
                format!("expected 'E <u> <v> <cost>', found '{}'", tokens.join(" ")),
            ));
        }
        let u = parse_vertex(tokens[1], line, vertex_count)?;
        let v = parse_vertex(tokens[2], line, vertex_count)?;
        let cost = parse_cost(tokens[3], line)?;
        if u == v {
            return Err(syntax(line, "self-loop edge"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(syntax(line, "duplicate edge"));
        }
        edges.push((u, v, cost));
    }
    expect_keywords(reader, &["END"])?;
    Graph::new(vertex_count, edges)
}

fn expect_eof(reader: &mut LineReader) -> Result<()> {
    expect_keywords(reader, &["EOF"])?;
    if let Some((line, tokens)) = reader.next() {
        return Err(syntax(
            line,
            format!("unexpected content after EOF: '{}'", tokens.join(" ")),
        ));
    }
    Ok(())
}

/// Parses `.stp` text into a Steiner instance.
pub fn parse_stpg(text: &str) -> Result<StpgInstance> {
    let mut reader = LineReader::new(text);
    let graph = parse_graph_section(&mut reader)?;
    expect_keywords(&mut reader, &["SECTION", "Terminals"])?;
    let terminal_count = parse_count(&mut reader, "Terminals", 1)?;
    let mut terminals = BTreeSet::new();
    for _ in 0..terminal_count {
        let (line, tokens) = reader.expect("'T <v>'")?;
        if tokens.len() != 2 || tokens[0] != "T" {
            return Err(syntax(
                line,
                format!("expected 'T <v>', found '{}'", tokens.join(" ")),
            ));
        }
        terminals.insert(parse_vertex(tokens[1], line, graph.vertex_count())?);
    }
    expect_keywords(&mut reader, &["END"])?;
    expect_eof(&mut reader)?;
    StpgInstance::new(graph, terminals)
}

/// Parses `.gstp` text into a group Steiner instance.
pub fn parse_gstp(text: &str) -> Result<GstpInstance> {
    let mut reader = LineReader::new(text);
    let graph = parse_graph_section(&mut reader)?;
    expect_keywords(&mut reader, &["SECTION", "Groups"])?;
    let group_count = parse_count(&mut reader, "Groups", 1)?;
    let mut groups = Vec::with_capacity(group_count);
    for _ in 0..group_count {
        let (line, tokens) = reader.expect("'G <v1> ... <vj>'")?;
        if tokens.is_empty() || tokens[0] != "G" {
            return Err(syntax(
                line,
                format!("expected 'G <v1> ... <vj>', found '{}'", tokens.join(" ")),
            ));
        }
        if tokens.len() < 2 {
            return Err(syntax(line, "empty group"));
        }
        let mut group = Vec::with_capacity(tokens.len() - 1);
        let mut seen = BTreeSet::new();
        for token in &tokens[1..] {
            let v = parse_vertex(token, line, graph.vertex_count())?;
            if !seen.insert(v) {
                return Err(syntax(line, format!("duplicate vertex '{token}' in group")));
            }
            group.push(v);
        }
        groups.push(group);
    }
    expect_keywords(&mut reader, &["END"])?;
    expect_eof(&mut reader)?;
    GstpInstance::new(graph, groups)
}

fn render_graph_section(out: &mut String, graph: &Graph) {
    writeln!(out, "SECTION Graph").unwrap();
    writeln!(out, "Nodes {}", graph.vertex_count()).unwrap();
    writeln!(out, "Edges {}", graph.edge_count()).unwrap();
    for e in graph.edges() {
        writeln!(out, "E {} {} {}", e.u + 1, e.v + 1, e.cost).unwrap();
    }
    writeln!(out, "END").unwrap();
}

/// Renders a Steiner instance as `.stp` text. `parse_stpg` inverts it.
pub fn render_stpg(instance: &StpgInstance) -> String {
    let mut out = String::new();
    render_graph_section(&mut out, instance.graph());
    writeln!(out, "SECTION Terminals").unwrap();
    writeln!(out, "Terminals {}", instance.terminals().len()).unwrap();
    for &t in instance.terminals() {
        writeln!(out, "T {}", t + 1).unwrap();
    }
    writeln!(out, "END").unwrap();
    writeln!(out, "EOF").unwrap();
    out
}

/// Renders a group Steiner instance as `.gstp` text. `parse_gstp` inverts it.
pub fn render_gstp(instance: &GstpInstance) -> String {
    let mut out = String::new();
    render_graph_section(&mut out, instance.graph());
    writeln!(out, "SECTION Groups").unwrap();
    writeln!(out, "Groups {}", instance.group_count()).unwrap();
    for group in instance.groups() {
        let members: Vec<String> = group.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "G {}", members.join(" ")).unwrap();
    }
    writeln!(out, "END").unwrap();
    writeln!(out, "EOF").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL_STP: &str = "\
SECTION Graph
Nodes 2
Edges 1
E 1 2 5
END
SECTION Terminals
Terminals 1
T 1
END
EOF
";

    #[test]
    fn parses_minimal_stp() {
        let inst = parse_stpg(MINIMAL_STP).unwrap();
        assert_eq!(inst.graph().vertex_count(), 2);
        assert_eq!(inst.graph().edge_count(), 1);
        assert_eq!(inst.terminals().len(), 1);
        assert!(inst.terminals().contains(&0));
    }

    #[test]
    fn render_is_byte_exact() {
        let inst = parse_stpg(MINIMAL_STP).unwrap();
        assert_eq!(render_stpg(&inst), MINIMAL_STP);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\
# instance header comment

SECTION Graph
Nodes 2
Edges 1   # one edge
E 1 2 5

END
SECTION Terminals
Terminals 1
T 2
END
EOF
";
        let inst = parse_stpg(text).unwrap();
        assert!(inst.terminals().contains(&1));
    }

    #[test]
    fn zero_cost_edge_is_rejected() {
        let text = MINIMAL_STP.replace("E 1 2 5", "E 1 2 0");
        assert_eq!(
            parse_stpg(&text),
            Err(Error::NonPositiveCost { line: 4, value: 0 })
        );
        let text = MINIMAL_STP.replace("E 1 2 5", "E 1 2 -3");
        assert_eq!(
            parse_stpg(&text),
            Err(Error::NonPositiveCost { line: 4, value: -3 })
        );
    }

    #[test]
    fn unknown_vertex_is_reported_with_line() {
        let text = MINIMAL_STP.replace("T 1", "T 9");
        assert_eq!(
            parse_stpg(&text),
            Err(Error::UnknownVertex { line: 8, vertex: 9 })
        );
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let text = "\
SECTION Graph
Nodes 3
Edges 1
E 1 2 5
END
SECTION Terminals
Terminals 1
T 1
END
EOF
";
        assert_eq!(parse_stpg(text), Err(Error::Disconnected));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let text = MINIMAL_STP.replace("E 1 2 5", "E 1 2");
        assert!(matches!(
            parse_stpg(&text),
            Err(Error::Syntax { line: 4, .. })
        ));

        let text = MINIMAL_STP.replace("SECTION Graph", "SECTION Grapf");
        assert!(matches!(
            parse_stpg(&text),
            Err(Error::Syntax { line: 1, .. })
        ));

        let truncated = "SECTION Graph\nNodes 2\n";
        assert!(matches!(
            parse_stpg(truncated),
            Err(Error::Syntax { line: 3, .. })
        ));

        let trailing = format!("{MINIMAL_STP}junk\n");
        assert!(matches!(
            parse_stpg(&trailing),
            Err(Error::Syntax { line: 11, .. })
        ));
    }

    #[test]
    fn duplicate_and_self_loop_edges_are_rejected() {
        let text = "\
SECTION Graph
Nodes 2
Edges 2
E 1 2 5
E 2 1 3
END
SECTION Terminals
Terminals 1
T 1
END
EOF
";
        assert!(matches!(
            parse_stpg(text),
            Err(Error::Syntax { line: 5, .. })
        ));
        let text = MINIMAL_STP.replace("E 1 2 5", "E 1 1 5");
        assert!(matches!(
            parse_stpg(&text),
            Err(Error::Syntax { line: 4, .. })
        ));
    }

    const MINIMAL_GSTP: &str = "\
SECTION Graph
Nodes 2
Edges 1
E 1 2 5
END
SECTION Groups
Groups 2
G 1
G 2
END
EOF
";

    #[test]
    fn parses_minimal_gstp() {
        let inst = parse_gstp(MINIMAL_GSTP).unwrap();
        assert_eq!(inst.group_count(), 2);
        assert_eq!(inst.groups()[0], vec![0]);
        assert_eq!(inst.groups()[1], vec![1]);
        assert_eq!(render_gstp(&inst), MINIMAL_GSTP);
    }

    #[test]
    fn group_line_maps_members_in_order() {
        let text = MINIMAL_GSTP.replace("G 1\nG 2", "G 1 2\nG 2 1");
        let inst = parse_gstp(&text).unwrap();
        assert_eq!(inst.groups()[0], vec![0, 1]);
        assert_eq!(inst.groups()[1], vec![1, 0]);
        // member order survives the round trip
        assert_eq!(parse_gstp(&render_gstp(&inst)).unwrap(), inst);
    }

    #[test]
    fn empty_group_is_rejected() {
        let text = MINIMAL_GSTP.replace("G 2", "G");
        assert!(matches!(
            parse_gstp(&text),
            Err(Error::Syntax { line: 9, .. })
        ));
    }

    #[test]
    fn duplicate_group_member_is_rejected() {
        let text = MINIMAL_GSTP.replace("G 2", "G 2 2");
        assert!(matches!(
            parse_gstp(&text),
            Err(Error::Syntax { line: 9, .. })
        ));
    }

    #[test]
    fn stp_round_trip_is_structural_identity() {
        let graph = Graph::new(4, [(0, 1, 3), (1, 2, 7), (2, 3, 1), (0, 3, 2)]).unwrap();
        let inst = StpgInstance::new(graph, BTreeSet::from([1, 3])).unwrap();
        assert_eq!(parse_stpg(&render_stpg(&inst)).unwrap(), inst);
    }
}
