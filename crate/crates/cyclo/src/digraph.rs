//! Mixed digraphs, their Hermitian adjacency matrices, and the pair-state
//! encoding used by exhaustive enumeration.
//!
//! A *digraph* here may contain, for each unordered pair {x, y}, either
//! nothing, a *digon* (edges both ways), or a single *arc* in one direction.
//! Its Hermitian adjacency matrix H(Δ) has H\[x\]\[y\] = 1 for a digon,
//! H\[x\]\[y\] = i and H\[y\]\[x\] = −i for an arc x → y, and 0 otherwise;
//! the diagonal is zero. The entry −1 never occurs for a digraph — matrices
//! using the full alphabet {0, ±1, ±i} form the wider adjacency class and are
//! handled at the [`crate::gaussint::HermMatrix`] level.
//!
//! Unordered pairs are indexed in colexicographic order
//! (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), …, so that the pairs inside
//! {0, …, m−1} form a prefix. Enumeration exploits this: once the last pair
//! of a leading principal submatrix is decided, that submatrix is complete
//! and eigenvalue interlacing justifies pruning on it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::gaussint::{GaussInt, HermMatrix};
use crate::{Error, Result};

/// Maximum vertex count accepted from untrusted serialized input.
pub const MAX_JSON_VERTICES: usize = 1024;

/// Index of the unordered pair (u, v), u < v, in colexicographic order.
pub fn pair_index(u: usize, v: usize) -> usize {
    assert!(u < v, "pair_index requires u < v");
    v * (v - 1) / 2 + u
}

/// Inverse of [`pair_index`].
pub fn pair_of_index(k: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}

/// State of one unordered pair {u, v} with u < v.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairState {
    /// No edge between u and v.
    None,
    /// A digon (undirected edge) between u and v.
    Digon,
    /// An arc u → v.
    ArcLoHi,
    /// An arc v → u.
    ArcHiLo,
}

impl PairState {
    /// All four states, in the order used by enumeration.
    pub const ALL: [PairState; 4] = [
        PairState::None,
        PairState::Digon,
        PairState::ArcLoHi,
        PairState::ArcHiLo,
    ];
}

/// A mixed digraph on vertices 0..n: digons plus single arcs, at most one
/// connection per vertex pair, no loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    /// Digons as sorted pairs (u, v) with u < v.
    digons: BTreeSet<(usize, usize)>,
    /// Arcs as ordered pairs (x, y) meaning x → y.
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    /// The empty digraph on n vertices.
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            digons: BTreeSet::new(),
            arcs: BTreeSet::new(),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Digons, as sorted pairs (u, v) with u < v.
    pub fn digons(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.digons.iter().copied()
    }

    /// Arcs, as ordered pairs (x, y) meaning x → y.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    /// Number of digons plus number of arcs.
    pub fn connection_count(&self) -> usize {
        self.digons.len() + self.arcs.len()
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<(usize, usize)> {
        if x >= self.n || y >= self.n {
            return Err(Error::InvalidVertexSet(format!(
                "vertex pair ({x}, {y}) out of range for order {}",
                self.n
            )));
        }
        if x == y {
            return Err(Error::InvalidVertexSet(format!("loop at vertex {x}")));
        }
        let key = (x.min(y), x.max(y));
        if self.digons.contains(&key)
            || self.arcs.contains(&(key.0, key.1))
            || self.arcs.contains(&(key.1, key.0))
        {
            return Err(Error::InvalidVertexSet(format!(
                "pair ({}, {}) already connected",
                key.0, key.1
            )));
        }
        Ok(key)
    }

    /// Add a digon between u and v. Fails on loops, out-of-range vertices, or
    /// a pair that is already connected.
    pub fn add_digon(&mut self, u: usize, v: usize) -> Result<()> {
        let key = self.check_pair(u, v)?;
        self.digons.insert(key);
        Ok(())
    }

    /// Add an arc x → y under the same validity rules.
    pub fn add_arc(&mut self, x: usize, y: usize) -> Result<()> {
        self.check_pair(x, y)?;
        self.arcs.insert((x, y));
        Ok(())
    }

    /// State of the unordered pair {u, v}, u < v required.
    pub fn pair_state(&self, u: usize, v: usize) -> PairState {
        assert!(u < v && v < self.n);
        if self.digons.contains(&(u, v)) {
            PairState::Digon
        } else if self.arcs.contains(&(u, v)) {
            PairState::ArcLoHi
        } else if self.arcs.contains(&(v, u)) {
            PairState::ArcHiLo
        } else {
            PairState::None
        }
    }

    /// All pair states in colexicographic order (length n(n−1)/2).
    pub fn pair_states(&self) -> Vec<PairState> {
        let mut out = vec![PairState::None; self.n * (self.n - 1) / 2];
        for &(u, v) in &self.digons {
            out[pair_index(u, v)] = PairState::Digon;
        }
        for &(x, y) in &self.arcs {
            if x < y {
                out[pair_index(x, y)] = PairState::ArcLoHi;
            } else {
                out[pair_index(y, x)] = PairState::ArcHiLo;
            }
        }
        out
    }

    /// Rebuild a digraph from colexicographic pair states.
    pub fn from_pair_states(n: usize, states: &[PairState]) -> Self {
        assert_eq!(states.len(), n * (n.max(1) - 1) / 2, "wrong state count");
        let mut g = Digraph::new(n);
        for (k, &s) in states.iter().enumerate() {
            let (u, v) = pair_of_index(k);
            match s {
                PairState::None => {}
                PairState::Digon => {
                    g.digons.insert((u, v));
                }
                PairState::ArcLoHi => {
                    g.arcs.insert((u, v));
                }
                PairState::ArcHiLo => {
                    g.arcs.insert((v, u));
                }
            }
        }
        g
    }

    /// The Hermitian adjacency matrix H(Δ).
    pub fn hermitian_adjacency(&self) -> HermMatrix {
        let n = self.n;
        let mut rows = vec![vec![GaussInt::zero(); n]; n];
        for &(u, v) in &self.digons {
            rows[u][v] = GaussInt::one();
            rows[v][u] = GaussInt::one();
        }
        for &(x, y) in &self.arcs {
            rows[x][y] = GaussInt::i();
            rows[y][x] = GaussInt::i().neg();
        }
        HermMatrix::from_rows(rows).expect("adjacency construction is Hermitian")
    }

    /// The unique digraph with the given Hermitian adjacency matrix.
    ///
    /// Fails with [`Error::InvalidAdjacency`] unless every off-diagonal entry
    /// is 0, 1 or ±i and the diagonal is zero. In particular −1 entries are
    /// rejected: matrices over the full alphabet {0, ±1, ±i} belong to the
    /// adjacency class but not to a digraph.
    pub fn from_hermitian(h: &HermMatrix) -> Result<Self> {
        let n = h.n();
        let mut g = Digraph::new(n);
        let one = GaussInt::one();
        let eye = GaussInt::i();
        for r in 0..n {
            for c in 0..n {
                let e = h.entry(r, c);
                if r == c {
                    if !e.is_zero() {
                        return Err(Error::InvalidAdjacency {
                            row: r,
                            col: c,
                            entry: e.to_string(),
                        });
                    }
                    continue;
                }
                if r < c && *e == one {
                    g.digons.insert((r, c));
                } else if *e == eye {
                    g.arcs.insert((r, c));
                } else if !e.is_zero() && *e != one && *e != eye.neg() {
                    return Err(Error::InvalidAdjacency {
                        row: r,
                        col: c,
                        entry: e.to_string(),
                    });
                }
            }
        }
        Ok(g)
    }

    /// Induced subdigraph on the given vertices, relabeled 0..m in list
    /// order. Vertices must be distinct and in range.
    pub fn subdigraph(&self, verts: &[usize]) -> Result<Digraph> {
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
        let mut g = Digraph::new(verts.len());
        for &(u, v) in &self.digons {
            if map[u] != usize::MAX && map[v] != usize::MAX {
                let (a, b) = (map[u].min(map[v]), map[u].max(map[v]));
                g.digons.insert((a, b));
            }
        }
        for &(x, y) in &self.arcs {
            if map[x] != usize::MAX && map[y] != usize::MAX {
                g.arcs.insert((map[x], map[y]));
            }
        }
        Ok(g)
    }

    /// The converse digraph: every arc reversed, digons unchanged.
    pub fn converse(&self) -> Digraph {
        Digraph {
            n: self.n,
            digons: self.digons.clone(),
            arcs: self.arcs.iter().map(|&(x, y)| (y, x)).collect(),
        }
    }

    /// The underlying undirected graph (digons and arcs both become edges).
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(u, v) in &self.digons {
            g.edges.insert((u, v));
        }
        for &(x, y) in &self.arcs {
            g.edges.insert((x.min(y), x.max(y)));
        }
        g
    }

    /// Number of neighbors of v in the underlying graph.
    pub fn degree(&self, v: usize) -> usize {
        self.underlying_graph().degree(v)
    }

    /// True when the underlying graph is connected (vacuously for n ≤ 1).
    pub fn is_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    /// True when some cycle of the underlying graph traverses an odd number
    /// of arcs.
    ///
    /// Equivalently: the vertices cannot be 2-colored so that digons join
    /// equal colors and arcs join opposite colors. This parity governs
    /// whether the associated signed graph is connected.
    pub fn has_odd_arc_cycle(&self) -> bool {
        let adj = self.parity_adjacency();
        let mut color = vec![Option::<bool>::None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for &(w, is_arc) in &adj[v] {
                    let want = cv ^ is_arc;
                    match color[w] {
                        None => {
                            color[w] = Some(want);
                            stack.push(w);
                        }
                        Some(cw) if cw != want => return true,
                        Some(_) => {}
                    }
                }
            }
        }
        false
    }

    /// Adjacency lists annotated with "is an arc" parity flags.
    fn parity_adjacency(&self) -> Vec<Vec<(usize, bool)>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.digons {
            adj[u].push((v, false));
            adj[v].push((u, false));
        }
        for &(x, y) in &self.arcs {
            adj[x].push((y, true));
            adj[y].push((x, true));
        }
        adj
    }

    /// Parse from JSON `{"n": …, "digons": [[u,v],…], "arcs": [[x,y],…]}`.
    pub fn from_json(text: &str) -> Result<Digraph> {
        let raw: RawDigraph = serde_json::from_str(text)?;
        raw.validate()
    }

    /// Serialize to the JSON digraph format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("digraph serialization cannot fail")
    }

    /// Graphviz DOT rendering: digons as undirected-looking double arrows,
    /// arcs as single arrows.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        let _ = writeln!(out, "  node [shape=circle];");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.digons {
            let _ = writeln!(out, "  {u} -> {v} [dir=both];");
        }
        for &(x, y) in &self.arcs {
            let _ = writeln!(out, "  {x} -> {y};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RawDigraph {
    n: usize,
    #[serde(default)]
    digons: Vec<(usize, usize)>,
    #[serde(default)]
    arcs: Vec<(usize, usize)>,
}

impl RawDigraph {
    fn validate(self) -> Result<Digraph> {
        if self.n > MAX_JSON_VERTICES {
            return Err(Error::CapExceeded {
                n: self.n,
                cap: MAX_JSON_VERTICES,
            });
        }
        let mut g = Digraph::new(self.n);
        for (u, v) in self.digons {
            g.add_digon(u, v)?;
        }
        for (x, y) in self.arcs {
            g.add_arc(x, y)?;
        }
        Ok(g)
    }
}

impl serde::Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawDigraph {
            n: self.n,
            digons: self.digons.iter().copied().collect(),
            arcs: self.arcs.iter().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawDigraph::deserialize(d)?
            .validate()
            .map_err(serde::de::Error::custom)
    }
}

/// A simple undirected graph, used for connectivity questions and as the
/// substrate of signed graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// The empty graph on n vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted pairs (u, v), u < v.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Add edge {u, v}. Fails on loops, range errors, or duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
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
        if !self.edges.insert(key) {
            return Err(Error::InvalidVertexSet(format!(
                "edge ({}, {}) repeated",
                key.0, key.1
            )));
        }
        Ok(())
    }

    /// True when {u, v} is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Number of neighbors of v.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components as sorted vertex lists, in order of smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
