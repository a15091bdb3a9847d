//! Simple undirected graphs on vertices 0..n, with the serialization formats
//! used for exchange: plain edge lists and graph6.

use crate::error::{Error, Result};

/// An undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops and duplicate edges are
    /// rejected; endpoints must be below `n`.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::Parse(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parse(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Self {
            adj,
            edge_count: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, sorted by the pair.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Common neighborhood of two distinct vertices, sorted.
    pub fn common_neighbors(&self, u: u32, v: u32) -> Result<Vec<u32>> {
        if u == v {
            return Err(Error::Domain(format!(
                "common neighbors of a vertex {u} with itself"
            )));
        }
        let (mut a, mut b) = (
            self.adj[u as usize].iter().peekable(),
            self.adj[v as usize].iter().peekable(),
        );
        let mut out = Vec::new();
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    out.push(x);
                    a.next();
                    b.next();
                }
            }
        }
        Ok(out)
    }

    /// BFS distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    // -- fixtures ----------------------------------------------------------

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        edges.push((0, n as u32 - 1));
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("valid complete graph")
    }

    /// Star with one center (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves as u32).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("valid petersen")
    }

    /// Petersen with the last vertex removed (9 vertices).
    pub fn petersen_minus_vertex() -> Self {
        let pet = Self::petersen();
        let edges: Vec<_> = pet.edges().into_iter().filter(|&(u, v)| u != 9 && v != 9).collect();
        Self::from_edges(9, &edges).expect("valid graph")
    }
}

// ---------------------------------------------------------------------------
// Edge-list format: ASCII lines "u v\n" with u < v, sorted by (u, v).
// ---------------------------------------------------------------------------

/// Serializes the graph as sorted "u v" lines (no trailing whitespace,
/// newline = 0x0A).
pub fn to_edge_list(g: &Graph) -> Vec<u8> {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.into_bytes()
}

/// Parses an edge list. The vertex count is `max endpoint + 1` unless a
/// larger `n` is forced via `min_vertices` (isolated tail vertices are
/// otherwise unrepresentable in this format).
pub fn from_edge_list(data: &[u8], min_vertices: Option<usize>) -> Result<Graph> {
    let text = std::str::from_utf8(data).map_err(|e| Error::Parse(e.to_string()))?;
    let mut edges = Vec::new();
    let mut max_v = 0u32;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u32> {
            tok.ok_or_else(|| Error::Parse(format!("line {}: expected two vertices", lineno + 1)))?
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse(format!(
                "line {}: trailing tokens after edge",
                lineno + 1
            )));
        }
        max_v = max_v.max(u).max(v);
        edges.push((u, v));
    }
    let n = if edges.is_empty() {
        min_vertices.unwrap_or(0)
    } else {
        (max_v as usize + 1).max(min_vertices.unwrap_or(0))
    };
    Graph::from_edges(n, &edges)
}

// ---------------------------------------------------------------------------
// graph6 format (undirected, no header), per the standard encoding:
// N(n) followed by the upper triangle of the adjacency matrix in column
// order (0,1), (0,2), (1,2), (0,3), ..., packed into 6-bit chunks + 63.
// ---------------------------------------------------------------------------

const GRAPH6_MAX_N: u64 = 68_719_476_735;

fn graph6_size_bytes(n: u64) -> Result<Vec<u8>> {
    if n <= 62 {
        Ok(vec![n as u8 + 63])
    } else if n <= 258_047 {
        let mut out = vec![126];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
        Ok(out)
    } else if n <= GRAPH6_MAX_N {
        let mut out = vec![126, 126];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
        Ok(out)
    } else {
        Err(Error::Size(format!(
            "graph6 is only defined for n <= {GRAPH6_MAX_N}, got {n}"
        )))
    }
}

/// Encodes the graph in graph6.
pub fn to_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    let mut out = graph6_size_bytes(n as u64)?;
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for v in 1..n as u32 {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(out)
}

/// Decodes a graph6 byte string (optionally newline-terminated).
pub fn from_graph6(data: &[u8]) -> Result<Graph> {
    let data: &[u8] = match data {
        [head @ .., b'\n'] => head,
        other => other,
    };
    let sextet = |b: u8| -> Result<u64> {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b}")));
        }
        Ok((b - 63) as u64)
    };
    let (n, rest) = match data {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            let mut n = 0u64;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)?;
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            let mut n = 0u64;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)?;
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (sextet(*first)?, rest),
        [] => return Err(Error::Parse("empty graph6 input".into())),
    };
    if n > u32::MAX as u64 {
        return Err(Error::Size(format!("graph6 input with {n} vertices")));
    }
    let n = n as usize;
    let bits_needed = n * n.saturating_sub(1) / 2;
    if rest.len() * 6 < bits_needed {
        return Err(Error::Parse("truncated graph6 adjacency data".into()));
    }
    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    'outer: for v in 1..n as u32 {
        for u in 0..v {
            if bit_idx >= bits_needed {
                break 'outer;
            }
            let byte = sextet(rest[bit_idx / 6])? as u8;
            if (byte >> (5 - (bit_idx % 6))) & 1 == 1 {
                edges.push((u, v));
            }
            bit_idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
