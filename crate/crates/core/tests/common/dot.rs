//! A small recursive-descent parser for the DOT language grammar, written
//! against the published grammar and independent of the emitter.

use std::collections::BTreeMap;

pub type Attrs = BTreeMap<String, String>;

#[derive(Debug, Default, PartialEq)]
pub struct DotGraph {
    pub strict: bool,
    pub directed: bool,
    pub name: Option<String>,
    pub graph_attrs: Attrs,
    /// Node statements in order of appearance.
    pub nodes: Vec<(String, Attrs)>,
    pub edges: Vec<(String, String, Attrs)>,
    /// Kind of each node or edge statement, in source order.
    pub order: Vec<Stmt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stmt {
    Node,
    Edge,
}

impl DotGraph {
    pub fn node(&self, id: &str) -> Option<&Attrs> {
        self.nodes.iter().find(|(n, _)| n == id).map(|(_, a)| a)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Eq,
    Semi,
    Comma,
    Colon,
    EdgeOp(&'static str),
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let mut at_line_start = true;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            at_line_start = true;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if at_line_start && c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        at_line_start = false;
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            i += 2;
            while i + 1 < chars.len() && !(chars[i] == '*' && chars[i + 1] == '/') {
                i += 1;
            }
            if i + 1 >= chars.len() {
                return Err("unterminated comment".into());
            }
            i += 2;
            continue;
        }
        match c {
            '{' => out.push(Tok::LBrace),
            '}' => out.push(Tok::RBrace),
            '[' => out.push(Tok::LBracket),
            ']' => out.push(Tok::RBracket),
            '=' => out.push(Tok::Eq),
            ';' => out.push(Tok::Semi),
            ',' => out.push(Tok::Comma),
            ':' => out.push(Tok::Colon),
            '-' if chars.get(i + 1) == Some(&'-') => {
                out.push(Tok::EdgeOp("--"));
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Tok::EdgeOp("->"));
                i += 1;
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return Err("unterminated string".into()),
                        Some('"') => break,
                        Some('\\') if matches!(chars.get(i + 1), Some('"') | Some('\\')) => {
                            s.push(chars[i + 1]);
                            i += 2;
                        }
                        Some('\\') if chars.get(i + 1) == Some(&'\n') => i += 2,
                        Some(ch) => {
                            s.push(*ch);
                            i += 1;
                        }
                    }
                }
                out.push(Tok::Id(s));
            }
            c if c == '-' || c == '.' || c.is_ascii_digit() => {
                // numeral: [-]?(.[0-9]+ | [0-9]+(.[0-9]*)?)
                let start = i;
                if c == '-' {
                    i += 1;
                }
                let mut digits = 0;
                let mut dots = 0;
                while let Some(&d) = chars.get(i) {
                    if d.is_ascii_digit() {
                        digits += 1;
                    } else if d == '.' && dots == 0 {
                        dots += 1;
                    } else {
                        break;
                    }
                    i += 1;
                }
                if digits == 0 {
                    return Err(format!("bad numeral at {start}"));
                }
                if chars.get(i).is_some_and(|d| d.is_alphabetic() || *d == '_') {
                    return Err(format!("numeral followed by letter at {start}"));
                }
                out.push(Tok::Id(chars[start..i].iter().collect()));
                continue;
            }
            c if c.is_alphabetic() || c == '_' || (c as u32) >= 0x80 => {
                let start = i;
                while chars
                    .get(i)
                    .is_some_and(|d| d.is_alphanumeric() || *d == '_' || (*d as u32) >= 0x80)
                {
                    i += 1;
                }
                out.push(Tok::Id(chars[start..i].iter().collect()));
                continue;
            }
            other => return Err(format!("unexpected character {other:?} at {i}")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    graph: DotGraph,
}

fn is_keyword(s: &str, kw: &str) -> bool {
    s.eq_ignore_ascii_case(kw)
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), String> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(format!("expected {t:?}, got {got:?}")),
        }
    }

    fn id(&mut self) -> Result<String, String> {
        match self.next() {
            Some(Tok::Id(s)) => Ok(s),
            got => Err(format!("expected ID, got {got:?}")),
        }
    }

    fn graph(&mut self) -> Result<(), String> {
        let mut kw = self.id()?;
        if is_keyword(&kw, "strict") {
            self.graph.strict = true;
            kw = self.id()?;
        }
        if is_keyword(&kw, "graph") {
            self.graph.directed = false;
        } else if is_keyword(&kw, "digraph") {
            self.graph.directed = true;
        } else {
            return Err(format!("expected graph or digraph, got {kw}"));
        }
        if let Some(Tok::Id(_)) = self.peek() {
            self.graph.name = Some(self.id()?);
        }
        self.expect(Tok::LBrace)?;
        self.stmt_list()?;
        self.expect(Tok::RBrace)?;
        if self.pos != self.toks.len() {
            return Err("trailing tokens after graph".into());
        }
        Ok(())
    }

    fn stmt_list(&mut self) -> Result<(), String> {
        while !matches!(self.peek(), Some(Tok::RBrace) | None) {
            self.stmt()?;
            if self.peek() == Some(&Tok::Semi) {
                self.next();
            }
        }
        Ok(())
    }

    fn attr_list(&mut self) -> Result<Attrs, String> {
        let mut attrs = Attrs::new();
        while self.peek() == Some(&Tok::LBracket) {
            self.next();
            while self.peek() != Some(&Tok::RBracket) {
                let k = self.id()?;
                self.expect(Tok::Eq)?;
                let v = self.id()?;
                attrs.insert(k, v);
                if matches!(self.peek(), Some(Tok::Semi) | Some(Tok::Comma)) {
                    self.next();
                }
            }
            self.expect(Tok::RBracket)?;
        }
        Ok(attrs)
    }

    fn node_id(&mut self) -> Result<String, String> {
        let id = self.id()?;
        if self.peek() == Some(&Tok::Colon) {
            self.next();
            self.id()?;
            if self.peek() == Some(&Tok::Colon) {
                self.next();
                self.id()?;
            }
        }
        Ok(id)
    }

    fn stmt(&mut self) -> Result<(), String> {
        let Some(Tok::Id(first)) = self.peek().cloned() else {
            return Err(format!("unexpected {:?} at statement start", self.peek()));
        };
        if is_keyword(&first, "subgraph") {
            return Err("subgraphs are not expected in emitted files".into());
        }
        if ["graph", "node", "edge"].iter().any(|k| is_keyword(&first, k)) {
            self.next();
            let attrs = self.attr_list()?;
            if is_keyword(&first, "graph") {
                self.graph.graph_attrs.extend(attrs);
            }
            return Ok(());
        }
        let a = self.node_id()?;
        match self.peek().cloned() {
            Some(Tok::Eq) => {
                self.next();
                let v = self.id()?;
                self.graph.graph_attrs.insert(a, v);
            }
            Some(Tok::EdgeOp(op)) => {
                let mut chain = vec![a];
                while let Some(Tok::EdgeOp(op2)) = self.peek().cloned() {
                    let want = if self.graph.directed { "->" } else { "--" };
                    if op2 != want {
                        return Err(format!("edge operator {op} in wrong graph kind"));
                    }
                    self.next();
                    chain.push(self.node_id()?);
                }
                let attrs = self.attr_list()?;
                for w in chain.windows(2) {
                    self.graph.edges.push((w[0].clone(), w[1].clone(), attrs.clone()));
                    self.graph.order.push(Stmt::Edge);
                }
            }
            _ => {
                let attrs = self.attr_list()?;
                self.graph.nodes.push((a, attrs));
                self.graph.order.push(Stmt::Node);
            }
        }
        Ok(())
    }
}

pub fn parse(src: &str) -> Result<DotGraph, String> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        graph: DotGraph::default(),
    };
    p.graph()?;
    Ok(p.graph)
}

/// Parses and additionally checks that every edge endpoint is declared as a
/// node and that node statements precede edge statements.
pub fn parse_checked(src: &str) -> Result<DotGraph, String> {
    let g = parse(src)?;
    let mut declared = std::collections::HashSet::new();
    let mut node_iter = g.nodes.iter().map(|(n, _)| n.as_str());
    declared.extend(&mut node_iter);
    for (a, b, _) in &g.edges {
        if !declared.contains(a.as_str()) || !declared.contains(b.as_str()) {
            return Err(format!("edge {a} -- {b} references an undeclared node"));
        }
    }
    // Emitted files declare every node before the first edge.
    if let Some(first_edge) = g.order.iter().position(|k| *k == Stmt::Edge) {
        if g.order[first_edge..].contains(&Stmt::Node) {
            return Err("node statement after an edge statement".into());
        }
    }
    Ok(g)
}

/// Runs Graphviz `dot` on the text if the executable exists.
/// Returns `None` when Graphviz is not installed.
pub fn graphviz_accepts(src: &str) -> Option<bool> {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new("dot")
        .arg("-Tcanon")
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::null())
        .spawn()
        .ok()?;
    child.stdin.take()?.write_all(src.as_bytes()).ok()?;
    Some(child.wait().ok()?.success())
}
