//! Line-oriented text formats.
//!
//! Edge list:
//! ```text
//! # optional comments
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! Assignment (keys may be omitted and default to the empty set; a solver
//! result is the same block preceded by `value <w>`):
//! ```text
//! k 3 middle
//! v0 1
//! e1-2 1,2,3
//! v4 2,3
//! ```
//!
//! Family: a `family k <k> size <d>` header followed by `d` assignment blocks
//! separated by `---` lines.

use std::fmt::Write as _;

use crate::domatic::RainbowFamily;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::{check_k, ColorSet, Domain, RainbowAssignment};

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found '{tok}'")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 'n m' header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(hline, "header must be 'n m'"));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, "edge line must be 'u v'"));
        }
        let u = parse_usize(toks[0], line, "vertex index")?;
        let v = parse_usize(toks[1], line, "vertex index")?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex index out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(line, format!("loop at vertex {u}")));
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(Error::parse(line, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_colors(tok: &str, k: u8, line: usize) -> Result<ColorSet> {
    if tok == "-" {
        return Ok(ColorSet::EMPTY);
    }
    let mut set = ColorSet::EMPTY;
    for part in tok.split(',') {
        let c: u8 = part
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("bad color '{part}'")))?;
        if c == 0 || c > k {
            return Err(Error::parse(line, format!("color {c} outside 1..={k}")));
        }
        set |= ColorSet::singleton(c);
    }
    Ok(set)
}

/// Resolves a key token to its index: `v<i>` always, `e<u>-<v>` for middle
/// assignments over `g`.
fn parse_key(tok: &str, domain: Domain, g: &Graph, line: usize) -> Result<usize> {
    if let Some(rest) = tok.strip_prefix('v') {
        let v = parse_usize(rest, line, "vertex key")?;
        if v >= g.order() {
            return Err(Error::parse(line, format!("vertex key {tok} out of range")));
        }
        return Ok(v);
    }
    if let (Some(rest), Domain::Middle) = (tok.strip_prefix('e'), domain) {
        let (a, b) = rest
            .split_once('-')
            .ok_or_else(|| Error::parse(line, format!("edge key must be e<u>-<v>, got '{tok}'")))?;
        let u = parse_usize(a, line, "vertex index")?;
        let v = parse_usize(b, line, "vertex index")?;
        return g
            .edge_index(u, v)
            .map(|i| g.order() + i)
            .ok_or_else(|| Error::parse(line, format!("{tok} is not an edge of the graph")));
    }
    Err(Error::parse(line, format!("unknown key '{tok}'")))
}

/// Parses an assignment. For a middle assignment `g` is the source graph;
/// for a plain one it is the host graph.
pub fn parse_assignment(text: &str, g: &Graph) -> Result<RainbowAssignment> {
    parse_assignment_lines(&mut content_lines(text).peekable(), g)
}

fn parse_assignment_lines<'a, I>(lines: &mut std::iter::Peekable<I>, g: &Graph) -> Result<RainbowAssignment>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut declared_value = None;
    let (mut hline, mut header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 'k <k> <middle|plain>' header"))?;
    if let Some(rest) = header.strip_prefix("value ") {
        declared_value = Some((hline, parse_usize(rest.trim(), hline, "value")?));
        (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, "missing assignment header after value"))?;
    }
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "k" {
        return Err(Error::parse(hline, "header must be 'k <k> <middle|plain>'"));
    }
    let k: u8 = toks[1]
        .parse()
        .map_err(|_| Error::parse(hline, format!("bad k '{}'", toks[1])))?;
    check_k(k).map_err(|e| Error::parse(hline, e.to_string()))?;
    let domain = match toks[2] {
        "middle" => Domain::Middle,
        "plain" => Domain::Plain,
        other => return Err(Error::parse(hline, format!("unknown domain '{other}'"))),
    };
    let len = match domain {
        Domain::Middle => g.order() + g.size(),
        Domain::Plain => g.order(),
    };
    let mut values = vec![ColorSet::EMPTY; len];
    let mut seen = vec![false; len];
    while let Some(&(line, l)) = lines.peek() {
        if l == "---" {
            break;
        }
        lines.next();
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, "entry must be '<key> <colors>'"));
        }
        let key = parse_key(toks[0], domain, g, line)?;
        if std::mem::replace(&mut seen[key], true) {
            return Err(Error::parse(line, format!("duplicate key {}", toks[0])));
        }
        values[key] = parse_colors(toks[1], k, line)?;
    }
    let f = RainbowAssignment::new(k, domain, values)?;
    if let Some((line, w)) = declared_value {
        if w != f.weight() {
            return Err(Error::parse(
                line,
                format!("declared value {w} differs from weight {}", f.weight()),
            ));
        }
    }
    Ok(f)
}

/// Writes every key in order. `g` is the source graph of a middle assignment
/// (used for edge labels) or the host of a plain one.
pub fn serialize_assignment(f: &RainbowAssignment, g: &Graph) -> String {
    let mut out = format!("k {} {}\n", f.k(), f.domain());
    for (key, s) in f.values().iter().enumerate() {
        let _ = writeln!(out, "{} {}", f.key_label(Some(g), key), s);
    }
    out
}

/// Solver output: `value <w>` followed by the certificate.
pub fn serialize_solution(value: usize, f: &RainbowAssignment, g: &Graph) -> String {
    format!("value {value}\n{}", serialize_assignment(f, g))
}

pub fn serialize_family(fam: &RainbowFamily) -> String {
    let mut out = format!("family k {} size {}\n", fam.k, fam.members.len());
    for (i, f) in fam.members.iter().enumerate() {
        if i > 0 {
            out.push_str("---\n");
        }
        out.push_str(&serialize_assignment(f, &fam.host));
    }
    out
}

pub fn parse_family(text: &str, host: &Graph) -> Result<RainbowFamily> {
    let mut lines = content_lines(text).peekable();
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing 'family k <k> size <d>' header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "family" || toks[1] != "k" || toks[3] != "size" {
        return Err(Error::parse(hline, "header must be 'family k <k> size <d>'"));
    }
    let k: u8 = toks[2]
        .parse()
        .map_err(|_| Error::parse(hline, format!("bad k '{}'", toks[2])))?;
    let size = parse_usize(toks[4], hline, "family size")?;
    let mut members = Vec::with_capacity(size);
    while lines.peek().is_some() {
        if !members.is_empty() {
            match lines.next() {
                Some((_, "---")) => {}
                Some((line, _)) => return Err(Error::parse(line, "expected '---' separator")),
                None => unreachable!(),
            }
        }
        let member = parse_assignment_lines(&mut lines, host)?;
        if member.k() != k || member.domain() != Domain::Plain {
            return Err(Error::parse(
                hline,
                format!("member {} must be a plain assignment with k = {k}", members.len()),
            ));
        }
        members.push(member);
    }
    if members.len() != size {
        return Err(Error::parse(
            hline,
            format!("declared size {size}, found {} members", members.len()),
        ));
    }
    Ok(RainbowFamily {
        host: host.clone(),
        k,
        members,
    })
}
