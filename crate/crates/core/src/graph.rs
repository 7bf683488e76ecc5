//! Finite simple connected graphs and the constructors used by the games:
//! paths, d-fold strong products of paths, and explicit edge lists.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of vertices a constructor will build.
pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

/// Cap on the number of directed adjacency entries built by `strong_path`.
const ADJACENCY_BUDGET: u128 = 50_000_000;

/// Which named family a graph was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Path { n: usize },
    StrongPath { n: usize, d: usize },
    Edges,
}

/// A finite, simple, connected, undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    family: Family,
    label: String,
}

impl Graph {
    /// Builds a graph from an edge list on `n` vertices.
    ///
    /// Self-loops are rejected; repeated edges collapse. The result must be connected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let label = format!(
            "edges:{}",
            edges.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
        );
        Graph::checked(adjacency, Family::Edges, label)
    }

    fn checked(adjacency: Vec<Vec<usize>>, family: Family, label: String) -> Result<Graph> {
        let g = Graph { adjacency, family, label };
        if !g.is_connected() {
            return Err(Error::InvalidGraph(format!("{} is disconnected", g.label)));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Canonical spec string, parseable by [`GraphSpec`].
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Unit-weight shortest-path distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.bfs_distances(v).into_iter().map(|d| d.unwrap()).max().unwrap_or(0)
    }

    /// Radius and diameter by BFS from every vertex.
    pub fn eccentricity_stats(&self) -> EccentricityStats {
        let ecc: Vec<u32> = (0..self.order()).map(|v| self.eccentricity(v)).collect();
        EccentricityStats {
            radius: *ecc.iter().min().unwrap(),
            diameter: *ecc.iter().max().unwrap(),
        }
    }

    /// Grid coordinates of `v` when this is a strong product of paths.
    pub fn coords(&self, v: usize) -> Option<GridCoord> {
        match self.family {
            Family::StrongPath { n, d } => Some(GridCoord::decode(v, n, d)),
            Family::Path { .. } => Some(GridCoord { coords: vec![v + 1] }),
            Family::Edges => None,
        }
    }

    /// Vertex permutations that are automorphisms of the graph, identity first.
    ///
    /// Only the obvious geometric symmetries of the named families are listed;
    /// an edge-list graph reports the identity alone.
    pub fn symmetries(&self) -> Vec<Vec<usize>> {
        let identity: Vec<usize> = (0..self.order()).collect();
        match self.family {
            Family::Path { n } if n > 1 => vec![identity, (0..n).rev().collect()],
            Family::StrongPath { n, d } if d <= 4 => hyperoctahedral_action(n, d),
            _ => vec![identity],
        }
    }
}

fn hyperoctahedral_action(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut perms_of_axes = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for p in &perms_of_axes {
            for axis in 0..d {
                if !p.contains(&axis) {
                    let mut q = p.clone();
                    q.push(axis);
                    next.push(q);
                }
            }
        }
        perms_of_axes = next;
    }
    let total = n.pow(d as u32);
    let mut out = Vec::new();
    for axes in &perms_of_axes {
        for flips in 0..(1usize << d) {
            let map: Vec<usize> = (0..total)
                .map(|v| {
                    let c = GridCoord::decode(v, n, d);
                    let image: Vec<usize> = (0..d)
                        .map(|i| {
                            let x = c.coords[axes[i]];
                            if flips >> i & 1 == 1 {
                                n + 1 - x
                            } else {
                                x
                            }
                        })
                        .collect();
                    GridCoord { coords: image }.encode(n)
                })
                .collect();
            out.push(map);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EccentricityStats {
    pub radius: u32,
    pub diameter: u32,
}

/// A point of `[1, n]^d`; vertex indices use mixed radix with the first
/// coordinate least significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridCoord {
    pub coords: Vec<usize>,
}

impl GridCoord {
    pub fn decode(mut v: usize, n: usize, d: usize) -> GridCoord {
        let mut coords = Vec::with_capacity(d);
        for _ in 0..d {
            coords.push(v % n + 1);
            v /= n;
        }
        GridCoord { coords }
    }

    pub fn encode(&self, n: usize) -> usize {
        self.coords.iter().rev().fold(0, |acc, &c| acc * n + (c - 1))
    }

    pub fn chebyshev(&self, other: &GridCoord) -> usize {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.abs_diff(*b))
            .max()
            .unwrap_or(0)
    }
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("path needs n >= 1".into()));
    }
    let adjacency = (0..n)
        .map(|i| {
            let mut v = Vec::with_capacity(2);
            if i > 0 {
                v.push(i - 1);
            }
            if i + 1 < n {
                v.push(i + 1);
            }
            v
        })
        .collect();
    Graph::checked(adjacency, Family::Path { n }, format!("path:n={n}"))
}

/// The d-fold strong product of the path on `n` vertices, with the default vertex budget.
pub fn strong_path(n: usize, d: usize) -> Result<Graph> {
    strong_path_with_budget(n, d, DEFAULT_VERTEX_BUDGET)
}

pub fn strong_path_with_budget(n: usize, d: usize, max_vertices: u64) -> Result<Graph> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidGraph("strong_path needs n, d >= 1".into()));
    }
    let total = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if total > max_vertices as u128 {
        return Err(Error::SizeLimit {
            what: "vertex count",
            actual: total,
            limit: max_vertices as u128,
        });
    }
    let per_vertex = 3u128.saturating_pow(d as u32) - 1;
    if total.saturating_mul(per_vertex) > ADJACENCY_BUDGET {
        return Err(Error::SizeLimit {
            what: "adjacency entries",
            actual: total.saturating_mul(per_vertex),
            limit: ADJACENCY_BUDGET,
        });
    }
    let total = total as usize;
    let mut adjacency = Vec::with_capacity(total);
    let offsets: Vec<Vec<i64>> = (0..3usize.pow(d as u32))
        .map(|mut code| {
            (0..d)
                .map(|_| {
                    let o = (code % 3) as i64 - 1;
                    code /= 3;
                    o
                })
                .collect()
        })
        .filter(|o: &Vec<i64>| o.iter().any(|&x| x != 0))
        .collect();
    for v in 0..total {
        let c = GridCoord::decode(v, n, d);
        let mut nbrs = Vec::with_capacity(offsets.len());
        'offsets: for off in &offsets {
            let mut coords = Vec::with_capacity(d);
            for (x, o) in c.coords.iter().zip(off) {
                let y = *x as i64 + o;
                if y < 1 || y > n as i64 {
                    continue 'offsets;
                }
                coords.push(y as usize);
            }
            nbrs.push(GridCoord { coords }.encode(n));
        }
        nbrs.sort_unstable();
        adjacency.push(nbrs);
    }
    Graph::checked(
        adjacency,
        Family::StrongPath { n, d },
        format!("strongpath:n={n},d={d}"),
    )
}

/// Parsed form of the graph mini-language: `path:n=9`, `strongpath:n=3,d=2`,
/// `edges:0-1,1-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path { n: usize },
    StrongPath { n: usize, d: usize },
    Edges(Vec<(usize, usize)>),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        self.build_with_budget(DEFAULT_VERTEX_BUDGET)
    }

    pub fn build_with_budget(&self, max_vertices: u64) -> Result<Graph> {
        match self {
            GraphSpec::Path { n } => {
                if *n as u64 > max_vertices {
                    return Err(Error::SizeLimit {
                        what: "vertex count",
                        actual: *n as u128,
                        limit: max_vertices as u128,
                    });
                }
                path(*n)
            }
            GraphSpec::StrongPath { n, d } => strong_path_with_budget(*n, *d, max_vertices),
            GraphSpec::Edges(edges) => {
                let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
                if n as u64 > max_vertices {
                    return Err(Error::SizeLimit {
                        what: "vertex count",
                        actual: n as u128,
                        limit: max_vertices as u128,
                    });
                }
                Graph::from_edges(n, edges)
            }
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphSpec> {
        let (kind, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected <kind>:<params>, got {s:?}")))?;
        match kind {
            "path" => {
                let params = parse_params(rest, &["n"])?;
                Ok(GraphSpec::Path { n: params[0] })
            }
            "strongpath" => {
                let params = parse_params(rest, &["n", "d"])?;
                Ok(GraphSpec::StrongPath { n: params[0], d: params[1] })
            }
            "edges" => {
                let mut edges = Vec::new();
                for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let (a, b) = pair
                        .split_once('-')
                        .ok_or_else(|| Error::Parse(format!("edge {pair:?} is not of the form a-b")))?;
                    edges.push((parse_usize(a)?, parse_usize(b)?));
                }
                if edges.is_empty() {
                    return Err(Error::Parse("edge list is empty".into()));
                }
                Ok(GraphSpec::Edges(edges))
            }
            other => Err(Error::Parse(format!("unknown graph kind {other:?}"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path { n } => write!(f, "path:n={n}"),
            GraphSpec::StrongPath { n, d } => write!(f, "strongpath:n={n},d={d}"),
            GraphSpec::Edges(edges) => {
                let body: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(f, "edges:{}", body.join(","))
            }
        }
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{s:?} is not a non-negative integer")))
}

fn parse_params(rest: &str, names: &[&str]) -> Result<Vec<usize>> {
    let mut values = vec![None; names.len()];
    for item in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("parameter {item:?} is not key=value")))?;
        let slot = names
            .iter()
            .position(|n| *n == key.trim())
            .ok_or_else(|| Error::Parse(format!("unknown parameter {key:?}")))?;
        if values[slot].is_some() {
            return Err(Error::Parse(format!("parameter {key:?} given twice")));
        }
        values[slot] = Some(parse_usize(value)?);
    }
    names
        .iter()
        .zip(values)
        .map(|(name, v)| v.ok_or_else(|| Error::Parse(format!("missing parameter {name:?}"))))
        .collect()
}
