//! Text formats and seeded instance generators.
//!
//! Graph files are line oriented, `#` starts a comment:
//!
//! ```text
//! n 3
//! e 0 1
//! e 1 2
//! c 0 2
//! c 1 1
//! c 2 0
//! ```
//!
//! Colors are optional, but when present every vertex needs one.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::reductions::{MinCoverInstance, ThreeSatInstance};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

/// Meaningful lines with their 1-based numbers, comments stripped.
fn lines(text: &str, comment: char) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let body = raw.split(comment).next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn number<T: std::str::FromStr>(line: usize, field: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| syntax(line, format!("expected a number, found `{field}`")))
}

pub fn parse_graph(text: &str) -> Result<(Graph, Option<Coloring>)> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut colors: Vec<Option<u32>> = Vec::new();
    let mut any_color = false;
    for (line, f) in lines(text, '#') {
        match (f[0], f.len()) {
            ("n", 2) => {
                if n.is_some() {
                    return Err(syntax(line, "vertex count given twice"));
                }
                let count = number(line, f[1])?;
                n = Some(count);
                colors = vec![None; count];
            }
            ("e", 3) => {
                let count = n.ok_or_else(|| syntax(line, "edge before `n`"))?;
                let (u, v): (usize, usize) = (number(line, f[1])?, number(line, f[2])?);
                if u >= count || v >= count {
                    return Err(syntax(line, format!("vertex out of range 0..{count}")));
                }
                edges.push((u, v));
            }
            ("c", 3) => {
                let count = n.ok_or_else(|| syntax(line, "color before `n`"))?;
                let v: usize = number(line, f[1])?;
                if v >= count {
                    return Err(syntax(line, format!("vertex out of range 0..{count}")));
                }
                if colors[v].replace(number(line, f[2])?).is_some() {
                    return Err(syntax(line, format!("vertex {v} colored twice")));
                }
                any_color = true;
            }
            (d @ ("n" | "e" | "c"), k) => {
                return Err(syntax(
                    line,
                    format!(
                        "`{d}` takes {} arguments, found {}",
                        if d == "n" { 1 } else { 2 },
                        k - 1
                    ),
                ))
            }
            (other, _) => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| syntax(0, "missing `n` line"))?;
    let graph = Graph::new(n, &edges).map_err(|e| syntax(0, e.to_string()))?;
    let coloring = if any_color {
        let missing = colors.iter().position(Option::is_none);
        if let Some(v) = missing {
            return Err(syntax(0, format!("vertex {v} has no color")));
        }
        Some(Coloring::new(
            colors.into_iter().map(|c| c.unwrap_or(0)).collect(),
        ))
    } else {
        None
    };
    Ok((graph, coloring))
}

pub fn write_graph(g: &Graph, c: Option<&Coloring>) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    if let Some(c) = c {
        for (v, color) in c.colors().iter().enumerate() {
            let _ = writeln!(out, "c {v} {color}");
        }
    }
    out
}

/// `u <m>` for the universe `0..m`, one `s e1 [e2] [e3]` line per subset
/// and an optional `t <bound>` (defaults to the number of subsets).
pub fn parse_min_cover(text: &str) -> Result<MinCoverInstance> {
    let mut universe = None;
    let mut subsets = Vec::new();
    let mut bound = None;
    for (line, f) in lines(text, '#') {
        match f[0] {
            "u" if f.len() == 2 => universe = Some(number(line, f[1])?),
            "t" if f.len() == 2 => bound = Some(number(line, f[1])?),
            "s" if (2..=4).contains(&f.len()) => {
                let s: Result<Vec<usize>> = f[1..].iter().map(|x| number(line, x)).collect();
                subsets.push(s?);
            }
            d @ ("u" | "t" | "s") => {
                return Err(syntax(line, format!("wrong number of arguments to `{d}`")))
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let universe = universe.ok_or_else(|| syntax(0, "missing `u` line"))?;
    let bound = bound.unwrap_or(subsets.len());
    MinCoverInstance::new(universe, subsets, bound)
}

pub fn write_min_cover(inst: &MinCoverInstance) -> String {
    let mut out = format!("u {}\n", inst.universe);
    for s in &inst.subsets {
        let items: Vec<String> = s.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "s {}", items.join(" "));
    }
    let _ = writeln!(out, "t {}", inst.bound);
    out
}

/// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header, then
/// zero-terminated clauses that may span lines.
pub fn parse_dimacs_cnf(text: &str) -> Result<(usize, Vec<Vec<i32>>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            let f: Vec<&str> = t.split_whitespace().collect();
            if f.len() != 4 || f[1] != "cnf" {
                return Err(syntax(line, "expected `p cnf <vars> <clauses>`"));
            }
            header = Some((number(line, f[2])?, number(line, f[3])?));
            continue;
        }
        let (vars, _) = header.ok_or_else(|| syntax(line, "clause before header"))?;
        for field in t.split_whitespace() {
            let lit: i32 = number(line, field)?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(syntax(
                    line,
                    format!("literal {lit} exceeds {vars} variables"),
                ));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, count) = header.ok_or_else(|| syntax(0, "missing `p cnf` header"))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(syntax(
            0,
            format!("header promises {count} clauses, found {}", clauses.len()),
        ));
    }
    Ok((vars, clauses))
}

pub fn write_dimacs_cnf(inst: &ThreeSatInstance) -> String {
    let mut out = format!("p cnf {} {}\n", inst.vars, inst.clauses.len());
    for c in &inst.clauses {
        for lit in c {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Graphviz rendering. With a coloring, edges point from the higher color
/// and vertices are labelled `v:c`; members of `highlight` get a dashed double ring.
pub fn emit_dot(g: &Graph, c: Option<&Coloring>, highlight: Option<&VertexSet>) -> String {
    let mut out = String::new();
    let directed = c.is_some();
    out.push_str(if directed {
        "digraph G {\n"
    } else {
        "graph G {\n"
    });
    for v in 0..g.n() {
        let label = match c {
            Some(c) => format!("{v}:{}", c.color(v)),
            None => v.to_string(),
        };
        let shape = if highlight.is_some_and(|d| d.contains(v)) {
            ", style=dashed, peripheries=2"
        } else {
            ""
        };
        let _ = writeln!(out, "  {v} [label=\"{label}\"{shape}];");
    }
    for &(u, v) in g.edges() {
        match c {
            Some(c) if c.color(u) < c.color(v) => {
                let _ = writeln!(out, "  {v} -> {u};");
            }
            Some(_) => {
                let _ = writeln!(out, "  {u} -> {v};");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Uniform labelled tree on `n` vertices from a random Prüfer sequence.
pub fn random_tree_graph(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]).expect("valid edge");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = leaves.pop_first().expect("a leaf exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Random proper coloring: vertices in order draw uniformly from the
/// colors `0..k` their earlier neighbours leave free. When none is free the
/// smallest free color above `k` is used, so the result is always proper.
pub fn random_coloring(g: &Graph, k: u32, rng: &mut impl Rng) -> Coloring {
    let n = g.n();
    let mut colors = vec![u32::MAX; n];
    // Breadth-first order keeps trees at one colored neighbour per step.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    for v in order {
        let taken: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
        let free: Vec<u32> = (0..k).filter(|c| !taken.contains(c)).collect();
        colors[v] = match free.choose(rng) {
            Some(&c) => c,
            None => (k..)
                .find(|c| !taken.contains(c))
                .expect("some color is free"),
        };
    }
    Coloring::new(colors)
}

/// Seeded random tree with a random proper coloring using colors below `k`.
pub fn random_tree(n: usize, k: u32, seed: u64) -> (Graph, Coloring) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_tree_graph(n, &mut rng);
    let c = random_coloring(&g, k, &mut rng);
    (g, c)
}

/// Seeded `G(n, p)` conditioned on connectivity by rejection.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) || (n > 1 && p == 0.0) {
        return Err(Error::BadParameters(format!(
            "edge probability {p} cannot give a connected graph"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}
