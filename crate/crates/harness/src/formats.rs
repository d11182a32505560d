//! Text formats. Every index is 1-based on disk and 0-based in memory.
//!
//! * graph: DIMACS `p edge n m` with `e u v` lines;
//! * cnf: DIMACS `p cnf vars clauses` with zero-terminated clauses;
//! * matrix: `n`, then `n` rows of nonnegative integers (`-1` allowed on the
//!   diagonal as the "no self loop" sentinel);
//! * sets: `n m`, then `m` lines `k e1 .. ek`;
//! * csp: `n s e`, then `e` lines `u v k a1 b1 .. ak bk` with symbols in `1..=s`;
//! * roles: one line per gadget vertex, `index tag key=value ..`;
//! * assignments: whitespace-separated values, `c` comment lines allowed.
//!
//! Lines starting with `c` are comments in every format.

use std::fmt::Write as _;

use thiserror::Error;
use tradeoff_core::reductions::{GadgetGraph, Role};
use tradeoff_core::{BinaryCsp, BitSet, CnfFormula, Constraint, Graph, Literal, Metric, SetSystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('%'))
}

fn number<T: std::str::FromStr>(
    line: usize,
    token: Option<&str>,
    what: &str,
) -> Result<T, ParseError> {
    match token {
        None => err(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .or_else(|_| err(line, format!("bad {what} `{t}`"))),
    }
}

fn index(line: usize, token: Option<&str>, what: &str, bound: usize) -> Result<usize, ParseError> {
    let v: usize = number(line, token, what)?;
    if v == 0 || v > bound {
        return err(line, format!("{what} {v} outside 1..={bound}"));
    }
    Ok(v - 1)
}

fn no_trailing<'a>(
    line: usize,
    mut tokens: impl Iterator<Item = &'a str>,
) -> Result<(), ParseError> {
    match tokens.next() {
        Some(t) => err(line, format!("unexpected token `{t}`")),
        None => Ok(()),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().map_or(err(0, "missing `p edge` header"), Ok)?;
    let mut t = header.split_whitespace();
    if t.next() != Some("p") || !matches!(t.next(), Some("edge" | "col")) {
        return err(hl, "expected `p edge n m`");
    }
    let n: usize = number(hl, t.next(), "vertex count")?;
    let m: usize = number(hl, t.next(), "edge count")?;
    no_trailing(hl, t)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let mut t = l.split_whitespace();
        if t.next() != Some("e") {
            return err(ln, "expected `e u v`");
        }
        let u = index(ln, t.next(), "vertex", n)?;
        let v = index(ln, t.next(), "vertex", n)?;
        no_trailing(ln, t)?;
        if u == v {
            return err(ln, format!("self-loop at vertex {}", u + 1));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return err(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        );
    }
    Graph::from_edges(n, edges).or_else(|e| err(hl, e.to_string()))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().map_or(err(0, "missing `p cnf` header"), Ok)?;
    let mut t = header.split_whitespace();
    if t.next() != Some("p") || t.next() != Some("cnf") {
        return err(hl, "expected `p cnf vars clauses`");
    }
    let vars: usize = number(hl, t.next(), "variable count")?;
    let m: usize = number(hl, t.next(), "clause count")?;
    no_trailing(hl, t)?;
    let mut clauses = Vec::with_capacity(m);
    let mut current = Vec::new();
    let mut last_line = hl;
    for (ln, l) in lines {
        last_line = ln;
        for tok in l.split_whitespace() {
            let x: i64 = number(ln, Some(tok), "literal")?;
            match Literal::from_dimacs(x) {
                None => clauses.push(std::mem::take(&mut current)),
                Some(lit) if lit.var < vars => current.push(lit),
                Some(_) => return err(ln, format!("literal {x} exceeds {vars} variables")),
            }
        }
    }
    if !current.is_empty() {
        return err(last_line, "last clause is not terminated by 0");
    }
    if clauses.len() != m {
        return err(
            hl,
            format!("header announces {m} clauses, found {}", clauses.len()),
        );
    }
    CnfFormula::new(vars, clauses).or_else(|e| err(hl, e.to_string()))
}

pub fn emit_cnf(phi: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for c in phi.clauses() {
        for l in c {
            write!(s, "{} ", l.to_dimacs()).unwrap();
        }
        s.push_str("0\n");
    }
    s
}

pub fn parse_metric(text: &str) -> Result<Metric, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().map_or(err(0, "missing city count"), Ok)?;
    let mut t = header.split_whitespace();
    let n: usize = number(hl, t.next(), "city count")?;
    no_trailing(hl, t)?;
    let mut rows = Vec::with_capacity(n);
    for (ln, l) in lines {
        if rows.len() == n {
            return err(ln, "more rows than cities");
        }
        let i = rows.len();
        let mut row = Vec::with_capacity(n);
        for (j, tok) in l.split_whitespace().enumerate() {
            let x: i64 = number(ln, Some(tok), "distance")?;
            match x {
                -1 if i == j => row.push(0),
                x if x < 0 => return err(ln, format!("negative distance {x} at column {}", j + 1)),
                x => row.push(x as u64),
            }
        }
        if row.len() != n {
            return err(ln, format!("row has {} entries, expected {n}", row.len()));
        }
        if row[i] != 0 {
            return err(
                ln,
                format!("diagonal entry of city {} must be 0 or -1", i + 1),
            );
        }
        rows.push(row);
    }
    if rows.len() != n {
        return err(hl, format!("expected {n} rows, found {}", rows.len()));
    }
    Metric::new(rows).or_else(|e| err(hl, e.to_string()))
}

pub fn emit_metric(m: &Metric) -> String {
    let mut s = format!("{}\n", m.n());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_sets(text: &str) -> Result<SetSystem, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().map_or(err(0, "missing `n m` header"), Ok)?;
    let mut t = header.split_whitespace();
    let n: usize = number(hl, t.next(), "universe size")?;
    let m: usize = number(hl, t.next(), "set count")?;
    no_trailing(hl, t)?;
    let mut sets = Vec::with_capacity(m);
    for (ln, l) in lines {
        let mut t = l.split_whitespace();
        let k: usize = number(ln, t.next(), "set size")?;
        let mut set = BitSet::new(n);
        for _ in 0..k {
            set.insert(index(ln, t.next(), "element", n)?);
        }
        no_trailing(ln, t)?;
        sets.push(set);
    }
    if sets.len() != m {
        return err(
            hl,
            format!("header announces {m} sets, found {}", sets.len()),
        );
    }
    SetSystem::new(n, sets).or_else(|e| err(hl, e.to_string()))
}

pub fn emit_sets(sys: &SetSystem) -> String {
    let mut s = format!("{} {}\n", sys.universe_size(), sys.num_sets());
    for set in sys.sets() {
        write!(s, "{}", set.len()).unwrap();
        for e in set.iter() {
            write!(s, " {}", e + 1).unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn parse_csp(text: &str) -> Result<BinaryCsp, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().map_or(err(0, "missing `n s e` header"), Ok)?;
    let mut t = header.split_whitespace();
    let n: usize = number(hl, t.next(), "variable count")?;
    let s: usize = number(hl, t.next(), "alphabet size")?;
    let e: usize = number(hl, t.next(), "constraint count")?;
    no_trailing(hl, t)?;
    let mut constraints = Vec::with_capacity(e);
    for (ln, l) in lines {
        let mut t = l.split_whitespace();
        let u = index(ln, t.next(), "variable", n)?;
        let v = index(ln, t.next(), "variable", n)?;
        let k: usize = number(ln, t.next(), "pair count")?;
        let mut allowed = Vec::with_capacity(k);
        for _ in 0..k {
            let a = index(ln, t.next(), "symbol", s)?;
            let b = index(ln, t.next(), "symbol", s)?;
            allowed.push((a, b));
        }
        no_trailing(ln, t)?;
        constraints.push(Constraint { u, v, allowed });
    }
    if constraints.len() != e {
        return err(
            hl,
            format!(
                "header announces {e} constraints, found {}",
                constraints.len()
            ),
        );
    }
    BinaryCsp::new(n, s, constraints).or_else(|e| err(hl, e.to_string()))
}

pub fn emit_csp(csp: &BinaryCsp) -> String {
    let mut s = format!(
        "{} {} {}\n",
        csp.num_vars(),
        csp.alphabet_size(),
        csp.constraints().len()
    );
    for c in csp.constraints() {
        write!(s, "{} {} {}", c.u + 1, c.v + 1, c.allowed.len()).unwrap();
        for &(a, b) in &c.allowed {
            write!(s, " {} {}", a + 1, b + 1).unwrap();
        }
        s.push('\n');
    }
    s
}

fn role_line(v: usize, role: &Role) -> String {
    let params = match role {
        Role::Connector { copy, clause } => format!("copy={} clause={}", copy + 1, clause + 1),
        Role::ClauseAssignment {
            copy,
            clause,
            assignment,
        } => {
            let lits: Vec<String> = assignment
                .iter()
                .map(|l| l.to_dimacs().to_string())
                .collect();
            format!(
                "copy={} clause={} assignment={}",
                copy + 1,
                clause + 1,
                lits.join(",")
            )
        }
        Role::Symbol { var, symbol } => format!("var={} symbol={}", var + 1, symbol + 1),
        Role::Dummy { var } => format!("var={} symbol=0", var + 1),
        Role::PairSet {
            constraint,
            pair,
            member,
        } => format!(
            "constraint={} pair={},{} member={}",
            constraint + 1,
            pair.0 + 1,
            pair.1 + 1,
            member + 1
        ),
        Role::ConstraintSet { constraint, member } => {
            format!("constraint={} member={}", constraint + 1, member + 1)
        }
        Role::Original { vertex } => format!("vertex={}", vertex + 1),
        Role::Pendant { owner, index } => format!("owner={} index={}", owner + 1, index + 1),
        Role::Universal => String::new(),
    };
    format!("{} {} {}", v + 1, role.tag(), params)
        .trim_end()
        .to_string()
}

/// Role sidecar: a `c r=K` header and one line per vertex.
pub fn emit_roles(gadget: &GadgetGraph) -> String {
    let mut s = format!("c r={}\n", gadget.r);
    for (v, role) in gadget.roles.iter().enumerate() {
        s.push_str(&role_line(v, role));
        s.push('\n');
    }
    s
}

pub fn parse_roles(text: &str) -> Result<Vec<Role>, ParseError> {
    let mut roles = Vec::new();
    for (ln, l) in content_lines(text) {
        let mut t = l.split_whitespace();
        let v: usize = number(ln, t.next(), "vertex")?;
        if v != roles.len() + 1 {
            return err(
                ln,
                format!("expected vertex {}, found {v}", roles.len() + 1),
            );
        }
        let tag = t.next().map_or(err(ln, "missing role tag"), Ok)?;
        let mut kv = std::collections::BTreeMap::new();
        for tok in t {
            let (k, v) = tok
                .split_once('=')
                .map_or(err(ln, format!("bad parameter `{tok}`")), Ok)?;
            kv.insert(k, v);
        }
        let get = |k: &str| -> Result<usize, ParseError> {
            let v: usize = number(ln, kv.get(k).copied(), k)?;
            v.checked_sub(1)
                .map_or(err(ln, format!("{k} must be at least 1")), Ok)
        };
        let pair = |k: &str| -> Result<(usize, usize), ParseError> {
            let raw = kv
                .get(k)
                .copied()
                .map_or(err(ln, format!("missing {k}")), Ok)?;
            let (a, b) = raw
                .split_once(',')
                .map_or(err(ln, format!("bad {k} `{raw}`")), Ok)?;
            Ok((
                index(ln, Some(a), k, usize::MAX)?,
                index(ln, Some(b), k, usize::MAX)?,
            ))
        };
        let role = match tag {
            "connector" => Role::Connector {
                copy: get("copy")?,
                clause: get("clause")?,
            },
            "clause" => {
                let raw = kv.get("assignment").copied().unwrap_or("");
                let assignment = raw
                    .split(',')
                    .map(|x| {
                        let x: i64 = number(ln, Some(x), "literal")?;
                        Literal::from_dimacs(x).map_or(err(ln, "literal 0"), Ok)
                    })
                    .collect::<Result<_, _>>()?;
                Role::ClauseAssignment {
                    copy: get("copy")?,
                    clause: get("clause")?,
                    assignment,
                }
            }
            "symbol" => Role::Symbol {
                var: get("var")?,
                symbol: get("symbol")?,
            },
            "dummy" => Role::Dummy { var: get("var")? },
            "pair-set" => Role::PairSet {
                constraint: get("constraint")?,
                pair: pair("pair")?,
                member: get("member")?,
            },
            "constraint-set" => Role::ConstraintSet {
                constraint: get("constraint")?,
                member: get("member")?,
            },
            "original" => Role::Original {
                vertex: get("vertex")?,
            },
            "pendant" => Role::Pendant {
                owner: get("owner")?,
                index: get("index")?,
            },
            "universal" => Role::Universal,
            other => return err(ln, format!("unknown role `{other}`")),
        };
        roles.push(role);
    }
    Ok(roles)
}

/// Truth assignment: DIMACS literals (`v` prefix and `0` terminator
/// optional), one per variable in any order.
pub fn parse_bool_assignment(text: &str, num_vars: usize) -> Result<Vec<bool>, ParseError> {
    let mut values = vec![None; num_vars];
    for (ln, l) in content_lines(text) {
        for tok in l
            .split_whitespace()
            .filter(|t| *t != "v" && *t != "s" && *t != "SATISFIABLE")
        {
            let x: i64 = number(ln, Some(tok), "literal")?;
            let Some(lit) = Literal::from_dimacs(x) else {
                continue;
            };
            if lit.var >= num_vars {
                return err(ln, format!("literal {x} exceeds {num_vars} variables"));
            }
            if values[lit.var].replace(lit.positive).is_some() {
                return err(ln, format!("variable {} assigned twice", lit.var + 1));
            }
        }
    }
    match values.iter().position(Option::is_none) {
        Some(v) => err(0, format!("variable {} has no value", v + 1)),
        None => Ok(values.into_iter().map(Option::unwrap).collect()),
    }
}

/// CSP assignment: one symbol in `1..=s` per variable, in variable order.
pub fn parse_symbol_assignment(
    text: &str,
    num_vars: usize,
    s: usize,
) -> Result<Vec<usize>, ParseError> {
    let mut values = Vec::with_capacity(num_vars);
    for (ln, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            if values.len() == num_vars {
                return err(ln, format!("more than {num_vars} values"));
            }
            values.push(index(ln, Some(tok), "symbol", s)?);
        }
    }
    if values.len() != num_vars {
        return err(
            0,
            format!("expected {num_vars} values, found {}", values.len()),
        );
    }
    Ok(values)
}

/// Vertex set as 1-based indices, one line.
pub fn emit_vertex_set(set: &BitSet) -> String {
    let items: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", items.join(" "))
}
