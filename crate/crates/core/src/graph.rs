//! Simple undirected graphs with integer edge weights and DIMACS edge-list I/O.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize, i64)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// Unit-weight graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    /// Add `{u, v}` with weight `w`. Loops and repeated edges are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize, w: i64) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Validation(format!(
                "edge ({u}, {v}) outside vertex range 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u}")));
        }
        let (a, b) = (u.min(v), u.max(v));
        if self.edges.iter().any(|&(x, y, _)| (x, y) == (a, b)) {
            return Err(Error::Validation(format!("repeated edge ({u}, {v})")));
        }
        self.edges.push((a, b, w));
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v, w)` with `u < v`, in insertion order.
    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }

    pub fn total_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.2).sum()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle is simple for n >= 3")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen graph is simple")
    }

    /// Parse DIMACS: `c` comments, `p edge N M`, then `e u v [w]` with 1-based vertices.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        let mut declared = 0;
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.first().copied() {
                None | Some("c") => {}
                Some("p") => {
                    if graph.is_some() {
                        return Err(Error::parse(lineno, 1, "second problem line"));
                    }
                    if fields.len() != 4 || (fields[1] != "edge" && fields[1] != "col") {
                        return Err(Error::parse(lineno, 1, "expected `p edge N M`"));
                    }
                    let n = parse_field(fields[2], lineno, line)?;
                    declared = parse_field(fields[3], lineno, line)?;
                    graph = Some(Graph::new(n));
                }
                Some("e") => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| Error::parse(lineno, 1, "edge before problem line"))?;
                    if fields.len() != 3 && fields.len() != 4 {
                        return Err(Error::parse(lineno, 1, "expected `e u v [w]`"));
                    }
                    let u: usize = parse_field(fields[1], lineno, line)?;
                    let v: usize = parse_field(fields[2], lineno, line)?;
                    let w: i64 = match fields.get(3) {
                        Some(f) => parse_field(f, lineno, line)?,
                        None => 1,
                    };
                    if u == 0 || v == 0 {
                        return Err(Error::parse(lineno, 1, "vertices are numbered from 1"));
                    }
                    g.add_edge(u - 1, v - 1, w)
                        .map_err(|e| Error::parse(lineno, 1, e.to_string()))?;
                }
                Some(other) => {
                    return Err(Error::parse(lineno, 1, format!("unknown line kind {other:?}")));
                }
            }
        }
        let g = graph.ok_or_else(|| Error::parse(1, 1, "missing problem line"))?;
        if g.edges.len() != declared {
            return Err(Error::Validation(format!(
                "problem line declares {declared} edges, found {}",
                g.edges.len()
            )));
        }
        Ok(g)
    }

    /// DIMACS text; weights are written only when some edge is not unit.
    pub fn to_dimacs(&self) -> String {
        let weighted = self.edges.iter().any(|e| e.2 != 1);
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(u, v, w) in &self.edges {
            if weighted {
                writeln!(out, "e {} {} {}", u + 1, v + 1, w).unwrap();
            } else {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        out
    }
}

fn parse_field<T: std::str::FromStr>(field: &str, lineno: usize, line: &str) -> Result<T> {
    field.parse().map_err(|_| {
        let column = line.find(field).map_or(1, |c| c + 1);
        Error::parse(lineno, column, format!("bad number {field:?}"))
    })
}

/// Backtracking k-coloring; returns a color per vertex when one exists.
pub fn color_by_backtracking(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..g.n).map(|v| g.neighbors(v)).collect();
    let mut colors = vec![usize::MAX; g.n];
    fn go(v: usize, k: usize, adj: &[Vec<usize>], colors: &mut Vec<usize>) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 0..k {
            if adj[v].iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                if go(v + 1, k, adj, colors) {
                    return true;
                }
            }
        }
        colors[v] = usize::MAX;
        false
    }
    go(0, k, &adj, &mut colors).then_some(colors)
}
