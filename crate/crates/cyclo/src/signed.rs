//! Signed graphs, the associated signed graph S(Δ) of a digraph, component
//! splitting, and canonical digraphs of bipartite signed graphs.
//!
//! The associated signed graph doubles every vertex x of a digraph into
//! x₁ and x₂. Writing H(Δ) = A + iB with A, B real, S(Δ) is the signed graph
//! with adjacency matrix \[\[A, B\], \[Bᵀ, A\]\]: a digon {x, y} contributes
//! positive edges {x₁, y₁} and {x₂, y₂}, while an arc (x, y) contributes a
//! positive edge {x₁, y₂} and a negative edge {x₂, y₁}. The characteristic
//! polynomial of S(Δ) is the square of that of Δ (spectrum doubling), which
//! transfers spectral statements between the two worlds.
//!
//! In the other direction, a connected *bipartite* signed graph S with parts
//! V₁, V₂ has a canonical digraph: conjugating A(S) by the diagonal matrix
//! with entries 1 on V₁ and i on V₂ turns every ±1 entry into ±i, i.e. into
//! a pure arc. Different bipartition choices give switching-equivalent
//! digraphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::digraph::{Digraph, Graph, MAX_JSON_VERTICES};
use crate::gaussint::{GaussInt, HermMatrix, IntPoly};
use crate::{Error, Result};

/// A signed graph: an undirected simple graph whose edges carry signs ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    /// Positive edges as sorted pairs (u, v), u < v.
    pos: BTreeSet<(usize, usize)>,
    /// Negative edges as sorted pairs (u, v), u < v.
    neg: BTreeSet<(usize, usize)>,
}

impl SignedGraph {
    /// The empty signed graph on n vertices.
    pub fn new(n: usize) -> Self {
        SignedGraph {
            n,
            pos: BTreeSet::new(),
            neg: BTreeSet::new(),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Positive edges, sorted pairs (u, v) with u < v.
    pub fn pos_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pos.iter().copied()
    }

    /// Negative edges, sorted pairs (u, v) with u < v.
    pub fn neg_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neg.iter().copied()
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(usize, usize)> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidVertexSet(format!(
                "vertex pair ({u}, {v}) out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidVertexSet(format!("loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if self.pos.contains(&key) || self.neg.contains(&key) {
            return Err(Error::InvalidVertexSet(format!(
                "edge ({}, {}) already signed",
                key.0, key.1
            )));
        }
        Ok(key)
    }

    /// Add a positive edge {u, v}.
    pub fn add_pos_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let key = self.check_pair(u, v)?;
        self.pos.insert(key);
        Ok(())
    }

    /// Add a negative edge {u, v}.
    pub fn add_neg_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let key = self.check_pair(u, v)?;
        self.neg.insert(key);
        Ok(())
    }

    /// Add an edge with an explicit sign (+1 or −1).
    pub fn add_edge(&mut self, u: usize, v: usize, sign: i8) -> Result<()> {
        match sign {
            1 => self.add_pos_edge(u, v),
            -1 => self.add_neg_edge(u, v),
            _ => Err(Error::InvalidFormat(format!("edge sign must be ±1, got {sign}"))),
        }
    }

    /// Sign of the edge {u, v}, or `None` when absent.
    pub fn sign_of(&self, u: usize, v: usize) -> Option<i8> {
        let key = (u.min(v), u.max(v));
        if self.pos.contains(&key) {
            Some(1)
        } else if self.neg.contains(&key) {
            Some(-1)
        } else {
            None
        }
    }

    /// The underlying unsigned graph.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(u, v) in self.pos.iter().chain(self.neg.iter()) {
            g.add_edge(u, v).expect("signed edges are simple by invariant");
        }
        g
    }

    /// True when the underlying graph is connected.
    pub fn is_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    /// The (real symmetric) adjacency matrix with entries in {0, ±1}.
    pub fn adjacency(&self) -> HermMatrix {
        let mut rows = vec![vec![GaussInt::zero(); self.n]; self.n];
        for &(u, v) in &self.pos {
            rows[u][v] = GaussInt::one();
            rows[v][u] = GaussInt::one();
        }
        for &(u, v) in &self.neg {
            rows[u][v] = GaussInt::one().neg();
            rows[v][u] = GaussInt::one().neg();
        }
        HermMatrix::from_rows(rows).expect("signed adjacency is symmetric")
    }

    /// Connected components, each with the list of original vertex labels it
    /// occupies (ambient order preserved).
    pub fn components(&self) -> Vec<(SignedGraph, Vec<usize>)> {
        self.underlying_graph()
            .components()
            .into_iter()
            .map(|verts| {
                let sub = self.subgraph(&verts).expect("component vertices are valid");
                (sub, verts)
            })
            .collect()
    }

    /// Induced signed subgraph on the given distinct vertices, relabeled
    /// 0..m in list order.
    pub fn subgraph(&self, verts: &[usize]) -> Result<SignedGraph> {
        let mut map = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            if old >= self.n {
                return Err(Error::InvalidVertexSet(format!(
                    "vertex {old} out of range for order {}",
                    self.n
                )));
            }
            if map[old] != usize::MAX {
                return Err(Error::InvalidVertexSet(format!("vertex {old} repeated")));
            }
            map[old] = new;
        }
        let mut s = SignedGraph::new(verts.len());
        for &(u, v) in &self.pos {
            if map[u] != usize::MAX && map[v] != usize::MAX {
                s.pos.insert((map[u].min(map[v]), map[u].max(map[v])));
            }
        }
        for &(u, v) in &self.neg {
            if map[u] != usize::MAX && map[v] != usize::MAX {
                s.neg.insert((map[u].min(map[v]), map[u].max(map[v])));
            }
        }
        Ok(s)
    }

    /// Parse from JSON `{"n": …, "pos": [[u,v],…], "neg": [[u,v],…]}`.
    pub fn from_json(text: &str) -> Result<SignedGraph> {
        let raw: RawSignedGraph = serde_json::from_str(text)?;
        raw.validate()
    }

    /// Serialize to the JSON signed-graph format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("signed graph serialization cannot fail")
    }

    /// Graphviz DOT rendering: positive edges solid, negative edges dashed.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        let _ = writeln!(out, "  node [shape=circle];");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.pos {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        for &(u, v) in &self.neg {
            let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RawSignedGraph {
    n: usize,
    #[serde(default)]
    pos: Vec<(usize, usize)>,
    #[serde(default)]
    neg: Vec<(usize, usize)>,
}

impl RawSignedGraph {
    fn validate(self) -> Result<SignedGraph> {
        if self.n > MAX_JSON_VERTICES {
            return Err(Error::CapExceeded {
                n: self.n,
                cap: MAX_JSON_VERTICES,
            });
        }
        let mut s = SignedGraph::new(self.n);
        for (u, v) in self.pos {
            s.add_pos_edge(u, v)?;
        }
        for (u, v) in self.neg {
            s.add_neg_edge(u, v)?;
        }
        Ok(s)
    }
}

impl serde::Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSignedGraph {
            n: self.n,
            pos: self.pos.iter().copied().collect(),
            neg: self.neg.iter().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for SignedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawSignedGraph::deserialize(d)?
            .validate()
            .map_err(serde::de::Error::custom)
    }
}

/// The associated signed graph S(Δ) on 2n vertices.
///
/// Vertex x of Δ becomes x₁ = x and x₂ = x + n. A digon {x, y} gives positive
/// edges {x₁, y₁} and {x₂, y₂}; an arc (x, y) gives a positive edge {x₁, y₂}
/// and a negative edge {x₂, y₁}. The adjacency matrix is \[\[A, B\], \[Bᵀ, A\]\]
/// for H(Δ) = A + iB.
pub fn associated_signed_graph(delta: &Digraph) -> SignedGraph {
    let n = delta.n();
    let mut s = SignedGraph::new(2 * n);
    for (x, y) in delta.digons() {
        s.add_pos_edge(x, y).expect("digon copy 1");
        s.add_pos_edge(x + n, y + n).expect("digon copy 2");
    }
    for (x, y) in delta.arcs() {
        s.add_pos_edge(x, y + n).expect("arc positive edge");
        s.add_neg_edge(x + n, y).expect("arc negative edge");
    }
    s
}

/// A canonical digraph of a connected bipartite signed graph.
///
/// Conjugates A(S) by D = diag(1 on V₁, i on V₂), where V₁ is the part
/// containing the lowest-indexed vertex; every signed edge becomes an arc.
/// Different bipartitions yield switching-equivalent digraphs, so only the
/// switching class of the result is canonical.
pub fn canonical_digraph(s: &SignedGraph) -> Result<Digraph> {
    let g = s.underlying_graph();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let side = bipartition(&g).ok_or(Error::NotBipartite)?;
    let n = s.n();
    let mut rows = vec![vec![GaussInt::zero(); n]; n];
    for (u, v, sign) in s
        .pos_edges()
        .map(|(u, v)| (u, v, 1i64))
        .chain(s.neg_edges().map(|(u, v)| (u, v, -1i64)))
    {
        // conj(d_u) · sign · d_v with d = 1 on V₁ and i on V₂; bipartiteness
        // means exactly one endpoint is in V₂.
        let (tail, head) = if side[u] { (v, u) } else { (u, v) };
        // entry (tail, head) = sign · i  →  arc tail→head when sign = +1.
        rows[tail][head] = GaussInt::from_i64(0, sign);
        rows[head][tail] = GaussInt::from_i64(0, -sign);
    }
    let h = HermMatrix::from_rows(rows).expect("conjugated adjacency is Hermitian");
    Digraph::from_hermitian(&h)
}

/// 2-coloring of a graph: `side[v]` is false on the part containing the
/// lowest vertex of each component. `None` when an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let adj = g.adjacency();
    let mut side = vec![Option::<bool>::None; g.n()];
    for start in 0..g.n() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.unwrap()).collect())
}

/// Characteristic polynomial of the adjacency matrix of a signed graph.
pub fn signed_char_poly(s: &SignedGraph) -> IntPoly {
    s.adjacency().char_poly()
}
