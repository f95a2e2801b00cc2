//! Equivalence testing for Hermitian adjacency matrices, with explicit
//! witnesses, canonical forms, and subdigraph containment up to switching.
//!
//! Two Hermitian matrices A, B are *strongly equivalent* when A = Q B Q* or
//! A = Q conj(B) Q* for a monomial matrix Q whose nonzero entries are units
//! of ℤ\[i\]; they are *equivalent* when A is strongly equivalent to B or −B.
//! For digraphs, strong equivalence of the Hermitian adjacency matrices is
//! exactly *switching equivalence* — the relation generated by relabeling,
//! local phase switches, reversing all arcs, and the digon/arc exchanges that
//! unit phases induce.
//!
//! Every positive answer comes with a [`SwitchingWitness`] that is re-applied
//! to the source and checked against the target before being returned; a
//! mismatch would be an internal error and panics.

use std::fmt;

use crate::digraph::Digraph;
use crate::gaussint::{GaussInt, HermMatrix};
use crate::{Error, Result};

/// Hard upper bound on the order accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 16;

/// A unit of ℤ\[i\], stored as the exponent e in i^e, e ∈ {0, 1, 2, 3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Phase(u8);

impl Phase {
    /// The unit 1.
    pub const ONE: Phase = Phase(0);
    /// The unit i.
    pub const I: Phase = Phase(1);
    /// The unit −1.
    pub const MINUS_ONE: Phase = Phase(2);
    /// The unit −i.
    pub const MINUS_I: Phase = Phase(3);

    /// All four units.
    pub const ALL: [Phase; 4] = [Phase::ONE, Phase::I, Phase::MINUS_ONE, Phase::MINUS_I];

    /// Build from an exponent of i (reduced mod 4).
    pub fn from_exponent(e: u8) -> Phase {
        Phase(e % 4)
    }

    /// Exponent of i.
    pub fn exponent(self) -> u8 {
        self.0
    }

    /// The unit as a Gaussian integer.
    pub fn gauss(self) -> GaussInt {
        match self.0 {
            0 => GaussInt::one(),
            1 => GaussInt::i(),
            2 => GaussInt::one().neg(),
            _ => GaussInt::i().neg(),
        }
    }

    /// The phase whose value is the given Gaussian unit, or `None` if the
    /// argument is not one of 1, i, −1, −i.
    pub fn from_gauss(z: &GaussInt) -> Option<Phase> {
        Phase::ALL.into_iter().find(|p| p.gauss() == *z)
    }

    /// Complex conjugate.
    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    fn as_str(self) -> &'static str {
        match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        }
    }

    fn parse(s: &str) -> Result<Phase> {
        match s {
            "1" => Ok(Phase::ONE),
            "i" => Ok(Phase::I),
            "-1" => Ok(Phase::MINUS_ONE),
            "-i" => Ok(Phase::MINUS_I),
            _ => Err(Error::InvalidFormat(format!("bad phase {s:?}"))),
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// An explicit equivalence witness.
///
/// Applying the witness to a source matrix S produces
/// ε · Q · op(S) · Q*, where Q is the monomial matrix with Q\[perm\[j\]\]\[j\] =
/// phases\[j\], op is entrywise conjugation when `conjugated` and the
/// identity otherwise, and ε = −1 exactly when `negated`. Strong-equivalence
/// witnesses always have `negated == false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingWitness {
    /// Vertex bijection: source vertex j maps to target vertex perm\[j\].
    pub perm: Vec<usize>,
    /// Unit phase attached to each source vertex.
    pub phases: Vec<Phase>,
    /// Whether the source is entrywise conjugated before conjugation by Q.
    pub conjugated: bool,
    /// Whether the result is negated (equivalence only).
    pub negated: bool,
}

impl SwitchingWitness {
    /// The identity witness on n vertices.
    pub fn identity(n: usize) -> Self {
        SwitchingWitness {
            perm: (0..n).collect(),
            phases: vec![Phase::ONE; n],
            conjugated: false,
            negated: false,
        }
    }

    /// Number of vertices the witness acts on.
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Apply the witness: ε · Q · op(source) · Q*.
    ///
    /// Panics unless `source` has matching order.
    pub fn apply(&self, source: &HermMatrix) -> HermMatrix {
        let n = source.n();
        assert_eq!(n, self.perm.len(), "witness order mismatch");
        let mut rows = vec![vec![GaussInt::zero(); n]; n];
        for j in 0..n {
            for l in 0..n {
                let mut e = source.entry(j, l).clone();
                if self.conjugated {
                    e = e.conj();
                }
                if self.negated {
                    e = e.neg();
                }
                let u = (self.phases[j] * self.phases[l].conj()).gauss();
                rows[self.perm[j]][self.perm[l]] = u.mul(&e);
            }
        }
        HermMatrix::from_rows(rows).expect("witness application preserves Hermitian symmetry")
    }

    /// True when applying the witness to `source` yields `target` exactly.
    pub fn verify(&self, source: &HermMatrix, target: &HermMatrix) -> bool {
        source.n() == target.n() && source.n() == self.perm.len() && self.apply(source) == *target
    }

    /// The inverse witness: if `self` maps S to T, the result maps T to S.
    pub fn invert(&self) -> SwitchingWitness {
        let n = self.perm.len();
        let mut perm = vec![0usize; n];
        let mut phases = vec![Phase::ONE; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
        }
        for (m, phase) in phases.iter_mut().enumerate() {
            let j = perm[m];
            *phase = if self.conjugated {
                self.phases[j]
            } else {
                self.phases[j].conj()
            };
        }
        SwitchingWitness {
            perm,
            phases,
            conjugated: self.conjugated,
            negated: self.negated,
        }
    }

    /// Composition: if `self` maps A to B and `then` maps B to C, the result
    /// maps A to C.
    pub fn compose(&self, then: &SwitchingWitness) -> SwitchingWitness {
        let n = self.perm.len();
        assert_eq!(n, then.perm.len(), "witness order mismatch");
        let mut perm = vec![0usize; n];
        let mut phases = vec![Phase::ONE; n];
        for j in 0..n {
            perm[j] = then.perm[self.perm[j]];
            let mut p1 = self.phases[j];
            if then.conjugated {
                p1 = p1.conj();
            }
            phases[j] = then.phases[self.perm[j]] * p1;
        }
        SwitchingWitness {
            perm,
            phases,
            conjugated: self.conjugated ^ then.conjugated,
            negated: self.negated ^ then.negated,
        }
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct RawWitness {
    perm: Vec<usize>,
    phases: Vec<String>,
    conj: bool,
    neg: bool,
}

impl serde::Serialize for SwitchingWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawWitness {
            perm: self.perm.clone(),
            phases: self.phases.iter().map(|p| p.as_str().to_owned()).collect(),
            conj: self.conjugated,
            neg: self.negated,
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for SwitchingWitness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawWitness::deserialize(d)?;
        let n = raw.perm.len();
        if raw.phases.len() != n {
            return Err(serde::de::Error::custom("phases and perm lengths differ"));
        }
        let mut seen = vec![false; n];
        for &p in &raw.perm {
            if p >= n || seen[p] {
                return Err(serde::de::Error::custom("perm is not a permutation"));
            }
            seen[p] = true;
        }
        let mut phases = Vec::with_capacity(n);
        for s in &raw.phases {
            phases.push(Phase::parse(s).map_err(serde::de::Error::custom)?);
        }
        Ok(SwitchingWitness {
            perm: raw.perm,
            phases,
            conjugated: raw.conj,
            negated: raw.neg,
        })
    }
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

/// Underlying adjacency lists (indices of nonzero off-diagonal entries).
fn support_adjacency(h: &HermMatrix) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut adj = vec![Vec::new(); n];
    for (r, row) in adj.iter_mut().enumerate() {
        for c in 0..n {
            if r != c && !h.entry(r, c).is_zero() {
                row.push(c);
            }
        }
    }
    adj
}

/// BFS vertex order over all components (components by smallest vertex),
/// with the tree parent of each non-root vertex.
fn bfs_order(adj: &[Vec<usize>]) -> Vec<(usize, Option<usize>)> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push((start, None));
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, Some(v)));
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct SearchCtx<'a> {
    src: &'a HermMatrix,
    tgt: &'a HermMatrix,
    order: &'a [(usize, Option<usize>)],
    tgt_adj: &'a [Vec<usize>],
    src_deg: &'a [usize],
    tgt_deg: &'a [usize],
    img: Vec<Option<usize>>,
    used: Vec<bool>,
    phase: Vec<Phase>,
    mapped: Vec<usize>,
}

impl SearchCtx<'_> {
    /// Check vertex v (tentatively mapped to w with phase φ) against every
    /// already-mapped vertex, including zero entries.
    fn consistent(&self, v: usize, w: usize, phi: Phase) -> bool {
        for &u in &self.mapped {
            let wu = self.img[u].unwrap();
            let expected = (phi * self.phase[u].conj()).gauss().mul(self.src.entry(v, u));
            if *self.tgt.entry(w, wu) != expected {
                return false;
            }
        }
        true
    }

    fn search(&mut self, t: usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        let (v, parent) = self.order[t];
        match parent {
            None => {
                for w in 0..self.used.len() {
                    if self.used[w] || self.tgt_deg[w] != self.src_deg[v] {
                        continue;
                    }
                    if self.try_assign(v, w, Phase::ONE, t) {
                        return true;
                    }
                }
            }
            Some(p) => {
                let wp = self.img[p].unwrap();
                let denom = self.phase[p].gauss().mul(self.src.entry(p, v));
                // Tree edge is nonzero, so images are neighbors of wp.
                for wi in 0..self.tgt_adj[wp].len() {
                    let w = self.tgt_adj[wp][wi];
                    if self.used[w] || self.tgt_deg[w] != self.src_deg[v] {
                        continue;
                    }
                    let t_entry = self.tgt.entry(wp, w);
                    // Solve target[wp][w] = φ_p · conj(φ_v) · src[p][v] for φ_v.
                    let Some(u) = Phase::ALL
                        .into_iter()
                        .find(|u| u.gauss().mul(&denom) == *t_entry)
                    else {
                        continue;
                    };
                    if self.try_assign(v, w, u.conj(), t) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn try_assign(&mut self, v: usize, w: usize, phi: Phase, t: usize) -> bool {
        if !self.consistent(v, w, phi) {
            return false;
        }
        self.img[v] = Some(w);
        self.used[w] = true;
        self.phase[v] = phi;
        self.mapped.push(v);
        if self.search(t + 1) {
            return true;
        }
        self.mapped.pop();
        self.img[v] = None;
        self.used[w] = false;
        false
    }
}

/// Core search: witness with the given flags mapping `source` to `target`.
fn search_with_flags(
    source: &HermMatrix,
    target: &HermMatrix,
    conjugated: bool,
    negated: bool,
) -> Option<SwitchingWitness> {
    let n = source.n();
    if n != target.n() {
        return None;
    }
    let mut work = source.clone();
    if conjugated {
        work = work.conjugated();
    }
    if negated {
        work = work.negated();
    }
    if work.char_poly() != target.char_poly() {
        return None;
    }
    let src_adj = support_adjacency(&work);
    let tgt_adj = support_adjacency(target);
    let src_deg: Vec<usize> = src_adj.iter().map(Vec::len).collect();
    let tgt_deg: Vec<usize> = tgt_adj.iter().map(Vec::len).collect();
    let mut sd = src_deg.clone();
    let mut td = tgt_deg.clone();
    sd.sort_unstable();
    td.sort_unstable();
    if sd != td {
        return None;
    }
    let order = bfs_order(&src_adj);
    let mut ctx = SearchCtx {
        src: &work,
        tgt: target,
        order: &order,
        tgt_adj: &tgt_adj,
        src_deg: &src_deg,
        tgt_deg: &tgt_deg,
        img: vec![None; n],
        used: vec![false; n],
        phase: vec![Phase::ONE; n],
        mapped: Vec::with_capacity(n),
    };
    if !ctx.search(0) {
        return None;
    }
    let witness = SwitchingWitness {
        perm: ctx.img.iter().map(|w| w.unwrap()).collect(),
        phases: ctx.phase.clone(),
        conjugated,
        negated,
    };
    assert!(
        witness.verify(source, target),
        "internal error: witness failed re-verification"
    );
    Some(witness)
}

/// Find a strong-equivalence witness: target = Q·op(source)·Q*.
///
/// Both the plain and the conjugated branch are searched; the returned
/// witness always has `negated == false`. `None` means no witness exists.
pub fn strong_equiv(h1: &HermMatrix, h2: &HermMatrix) -> Option<SwitchingWitness> {
    search_with_flags(h1, h2, false, false).or_else(|| search_with_flags(h1, h2, true, false))
}

/// Find an equivalence witness: like [`strong_equiv`] but −target is also
/// admitted (`negated == true` in that case).
pub fn equiv(h1: &HermMatrix, h2: &HermMatrix) -> Option<SwitchingWitness> {
    strong_equiv(h1, h2)
        .or_else(|| search_with_flags(h1, h2, false, true))
        .or_else(|| search_with_flags(h1, h2, true, true))
}

/// Switching equivalence of digraphs: exactly strong equivalence of their
/// Hermitian adjacency matrices.
pub fn switching_equiv(d1: &Digraph, d2: &Digraph) -> Option<SwitchingWitness> {
    strong_equiv(&d1.hermitian_adjacency(), &d2.hermitian_adjacency())
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// Which witness group a canonical form minimizes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivMode {
    /// Permutations, phases, and conjugation (negation excluded).
    Strong,
    /// The full group including negation.
    Equiv,
}

/// Entry codes 0 < 1 < i < −1 < −i used for canonical comparison.
const CODE_ZERO: u8 = 0;

fn code_of(e: &GaussInt) -> Option<u8> {
    if e.is_zero() {
        Some(0)
    } else if *e == GaussInt::one() {
        Some(1)
    } else if *e == GaussInt::i() {
        Some(2)
    } else if *e == GaussInt::one().neg() {
        Some(3)
    } else if *e == GaussInt::i().neg() {
        Some(4)
    } else {
        None
    }
}

fn gauss_of_code(c: u8) -> GaussInt {
    match c {
        0 => GaussInt::zero(),
        1 => GaussInt::one(),
        2 => GaussInt::i(),
        3 => GaussInt::one().neg(),
        _ => GaussInt::i().neg(),
    }
}

/// Rotate a nonzero code by i^e.
fn rotate_code(c: u8, e: u8) -> u8 {
    if c == CODE_ZERO {
        CODE_ZERO
    } else {
        1 + ((c - 1 + e) % 4)
    }
}

fn conj_code(c: u8) -> u8 {
    match c {
        2 => 4,
        4 => 2,
        other => other,
    }
}

fn neg_code(c: u8) -> u8 {
    rotate_code(c, 2)
}

struct CanonCtx {
    n: usize,
    /// Entry codes of the (op-adjusted) source, row-major.
    m: Vec<u8>,
    /// Component id per vertex, used to fix one phase per component.
    comp: Vec<usize>,
    /// Assignment: position → source vertex.
    vert_at: Vec<usize>,
    used: Vec<bool>,
    /// Phase exponent per source vertex.
    phase: Vec<u8>,
    comp_seen: Vec<bool>,
    /// Best key found so far (row-major upper triangle).
    best: Vec<u8>,
    /// Scratch: determined entries of the candidate block, keyed like `best`.
    cur: Vec<Option<u8>>,
}

impl CanonCtx {
    fn key_index(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < c);
        r * self.n - r * (r + 1) / 2 + (c - r - 1)
    }

    /// Lexicographic verdict of the optimistic completion of `cur` vs `best`:
    /// `Less` may improve, `Equal` ties so far, `Greater` prunes.
    fn optimistic_cmp(&self) -> std::cmp::Ordering {
        for (idx, &b) in self.best.iter().enumerate() {
            let c = self.cur[idx].unwrap_or(0);
            match c.cmp(&b) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }

    fn entry_between(&self, a_pos: usize, b_pos: usize) -> u8 {
        let va = self.vert_at[a_pos];
        let vb = self.vert_at[b_pos];
        let raw = self.m[va * self.n + vb];
        // φ_a · conj(φ_b) · entry = i^(φ_a − φ_b) · entry.
        rotate_code(raw, (4 + self.phase[va] - self.phase[vb]) % 4)
    }

    fn descend(&mut self, depth: usize) {
        if depth == self.n {
            let key: Vec<u8> = self.cur.iter().map(|e| e.unwrap()).collect();
            if key < self.best {
                self.best = key;
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let cid = self.comp[v];
            let was_seen = self.comp_seen[cid];
            // The first-placed vertex of each component absorbs that
            // component's free global phase, so only phase 1 is tried for it.
            let phases: &[u8] = if was_seen { &[0, 1, 2, 3] } else { &[0] };
            self.used[v] = true;
            self.comp_seen[cid] = true;
            self.vert_at[depth] = v;
            for &e in phases {
                self.phase[v] = e;
                // Fill in the new column (a, depth) for a < depth.
                for a in 0..depth {
                    let idx = self.key_index(a, depth);
                    self.cur[idx] = Some(self.entry_between(a, depth));
                }
                if self.optimistic_cmp() != std::cmp::Ordering::Greater {
                    self.descend(depth + 1);
                }
            }
            for a in 0..depth {
                let idx = self.key_index(a, depth);
                self.cur[idx] = None;
            }
            self.used[v] = false;
            self.comp_seen[cid] = was_seen;
        }
    }
}

fn components_of_support(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = next;
        next += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
    }
    comp
}

/// The canonical representative of the (strong-)equivalence class of an
/// adjacency-class matrix: the row-major lexicographically minimal matrix in
/// the orbit, under the fixed entry order 0 < 1 < i < −1 < −i.
///
/// Two matrices have equal canonical forms exactly when they are equivalent
/// in the chosen mode. Fails with [`Error::CapExceeded`] beyond order
/// [`CANONICAL_CAP`] and [`Error::NotAdjacencyClass`] for matrices outside
/// the adjacency class.
pub fn canonical_form(h: &HermMatrix, mode: EquivMode) -> Result<HermMatrix> {
    let n = h.n();
    if n > CANONICAL_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: CANONICAL_CAP,
        });
    }
    if let Some((row, col)) = h.adjacency_class_violation() {
        return Err(Error::NotAdjacencyClass {
            row,
            col,
            entry: h.entry(row, col).to_string(),
        });
    }
    let mut codes = vec![0u8; n * n];
    for r in 0..n {
        for c in 0..n {
            codes[r * n + c] = code_of(h.entry(r, c)).expect("adjacency class checked above");
        }
    }
    let adj = support_adjacency(h);
    let comp = components_of_support(&adj);
    let key_len = n * (n - 1) / 2;

    // Initial upper bound: the identity assignment of the plain matrix.
    let mut best = vec![0u8; key_len];
    {
        let mut idx = 0;
        for r in 0..n {
            for c in r + 1..n {
                best[idx] = codes[r * n + c];
                idx += 1;
            }
        }
    }

    let op_branches: &[(bool, bool)] = match mode {
        EquivMode::Strong => &[(false, false), (true, false)],
        EquivMode::Equiv => &[(false, false), (true, false), (false, true), (true, true)],
    };
    for &(cj, ng) in op_branches {
        let m: Vec<u8> = codes
            .iter()
            .map(|&c| {
                let mut c = c;
                if cj {
                    c = conj_code(c);
                }
                if ng {
                    c = neg_code(c);
                }
                c
            })
            .collect();
        let mut ctx = CanonCtx {
            n,
            m,
            comp: comp.clone(),
            vert_at: vec![0; n],
            used: vec![false; n],
            phase: vec![0; n],
            comp_seen: vec![false; comp.iter().map(|&c| c + 1).max().unwrap_or(0)],
            best,
            cur: vec![None; key_len],
        };
        ctx.descend(0);
        best = ctx.best;
    }

    // Reassemble the canonical matrix from the winning key.
    let mut rows = vec![vec![GaussInt::zero(); n]; n];
    let mut idx = 0;
    #[allow(clippy::needless_range_loop)] // mirrored (r,c)/(c,r) writes
    for r in 0..n {
        for c in r + 1..n {
            let g = gauss_of_code(best[idx]);
            rows[r][c] = g.clone();
            rows[c][r] = g.conj();
            idx += 1;
        }
    }
    Ok(HermMatrix::from_rows(rows).expect("canonical reassembly is Hermitian"))
}

// ---------------------------------------------------------------------------
// Containment up to switching
// ---------------------------------------------------------------------------

/// Search for an induced subdigraph of `container` switching-equivalent to
/// `delta`. Returns the vertex subset of `container` (sorted ascending)
/// together with the witness mapping `delta` onto that subdigraph, or
/// `None`.
///
/// The search places the vertices of `delta` one at a time (breadth-first
/// from the lowest vertex of each component) onto container vertices tried
/// in ascending order, so the answer is deterministic. A placement must
/// reproduce the zero pattern against everything already placed, a
/// container vertex is discarded when its degree cannot cover the input
/// degree, and the unit phase of a new vertex is forced by its first placed
/// neighbor — inconsistent candidates are abandoned without descending.
/// Both the plain and the conjugated branch are tried, in that order.
pub fn contains_up_to_switching(
    delta: &Digraph,
    container: &Digraph,
) -> Option<(Vec<usize>, SwitchingWitness)> {
    let k = delta.n();
    let n = container.n();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some((Vec::new(), SwitchingWitness::identity(0)));
    }
    let hd = delta.hermitian_adjacency();
    let hc = container.hermitian_adjacency();
    let order = embed_order(&hd);
    let deg_d: Vec<usize> = (0..k).map(|v| delta.degree(v)).collect();
    let deg_c: Vec<usize> = (0..n).map(|v| container.degree(v)).collect();

    for conjugated in [false, true] {
        let mut ctx = EmbedCtx {
            hd: &hd,
            hc: &hc,
            order: &order,
            deg_d: &deg_d,
            deg_c: &deg_c,
            conjugated,
            img: vec![None; k],
            used: vec![false; n],
            phase: vec![Phase::ONE; k],
        };
        if !ctx.search(0) {
            continue;
        }
        let image: Vec<usize> = ctx.img.iter().map(|o| o.expect("search filled img")).collect();
        let mut subset = image.clone();
        subset.sort_unstable();
        let perm: Vec<usize> = image
            .iter()
            .map(|g| subset.binary_search(g).expect("image vertices are in subset"))
            .collect();
        let witness = SwitchingWitness {
            perm,
            phases: ctx.phase,
            conjugated,
            negated: false,
        };
        let sub = container
            .subdigraph(&subset)
            .expect("image subsets are valid");
        assert!(
            witness.verify(&hd, &sub.hermitian_adjacency()),
            "internal error: containment witness failed re-verification"
        );
        return Some((subset, witness));
    }
    None
}

/// Placement order for the containment search: breadth-first from the
/// lowest vertex of each component, so every non-root vertex is preceded by
/// one of its neighbors.
fn embed_order(h: &HermMatrix) -> Vec<usize> {
    let n = h.n();
    let adj = support_adjacency(h);
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct EmbedCtx<'a> {
    hd: &'a HermMatrix,
    hc: &'a HermMatrix,
    order: &'a [usize],
    deg_d: &'a [usize],
    deg_c: &'a [usize],
    conjugated: bool,
    /// Placement: delta vertex → container vertex.
    img: Vec<Option<usize>>,
    used: Vec<bool>,
    phase: Vec<Phase>,
}

impl EmbedCtx<'_> {
    fn search(&mut self, t: usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        let v = self.order[t];
        'cands: for g in 0..self.used.len() {
            if self.used[g] || self.deg_c[g] < self.deg_d[v] {
                continue;
            }
            // Component roots keep phase 1: rescaling a whole component by a
            // unit never changes the conjugated entries.
            let mut forced: Option<Phase> = None;
            for &w in &self.order[..t] {
                let gw = self.img[w].expect("earlier vertices are placed");
                let mut e_d = self.hd.entry(v, w).clone();
                let e_c = self.hc.entry(g, gw);
                if e_d.is_zero() != e_c.is_zero() {
                    continue 'cands;
                }
                if e_d.is_zero() {
                    continue;
                }
                if self.conjugated {
                    e_d = e_d.conj();
                }
                // e_c = φ_v · e_d · conj(φ_w), all units, so
                // φ_v = e_c · conj(e_d · conj(φ_w)).
                let den = e_d.mul(&self.phase[w].conj().gauss());
                let phi = Phase::from_gauss(&e_c.mul(&den.conj()))
                    .expect("unit entries force unit phases");
                match forced {
                    None => forced = Some(phi),
                    Some(p) if p == phi => {}
                    Some(_) => continue 'cands,
                }
            }
            self.phase[v] = forced.unwrap_or(Phase::ONE);
            self.img[v] = Some(g);
            self.used[g] = true;
            if self.search(t + 1) {
                return true;
            }
            self.img[v] = None;
            self.used[g] = false;
        }
        false
    }
}

/// All vertices of the container already covered: convenience wrapper that
/// reports only whether containment holds.
pub fn contained_up_to_switching(delta: &Digraph, container: &Digraph) -> bool {
    contains_up_to_switching(delta, container).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussint::RadiusClass;

    fn directed_cycle(n: usize) -> Digraph {
        let mut g = Digraph::new(n);
        for v in 0..n {
            g.add_arc(v, (v + 1) % n).unwrap();
        }
        g
    }

    fn digon_cycle(n: usize) -> Digraph {
        let mut g = Digraph::new(n);
        for v in 0..n {
            g.add_digon(v, (v + 1) % n).unwrap();
        }
        g
    }

    fn digon_path(n: usize) -> Digraph {
        let mut g = Digraph::new(n);
        for v in 0..n - 1 {
            g.add_digon(v, v + 1).unwrap();
        }
        g
    }

    #[test]
    fn directed_and_plain_quadrangles_are_switching_equivalent() {
        let w = switching_equiv(&directed_cycle(4), &digon_cycle(4))
            .expect("gain-1 quadrangles must match");
        assert!(!w.negated);
        assert!(w.verify(
            &directed_cycle(4).hermitian_adjacency(),
            &digon_cycle(4).hermitian_adjacency()
        ));
    }

    #[test]
    fn triangle_vs_directed_triangle_is_not_equivalent() {
        let c3 = digon_cycle(3).hermitian_adjacency();
        let d3 = directed_cycle(3).hermitian_adjacency();
        assert!(strong_equiv(&c3, &d3).is_none());
        assert!(equiv(&c3, &d3).is_none());
    }

    #[test]
    fn converse_is_always_switching_equivalent() {
        let mut mixed = Digraph::new(6);
        mixed.add_digon(0, 1).unwrap();
        mixed.add_arc(1, 2).unwrap();
        mixed.add_arc(3, 2).unwrap();
        mixed.add_digon(3, 4).unwrap();
        mixed.add_arc(4, 5).unwrap();
        mixed.add_arc(5, 0).unwrap();
        mixed.add_arc(1, 4).unwrap();
        for d in [directed_cycle(5), mixed] {
            let w = switching_equiv(&d, &d.converse()).expect("converse must be reachable");
            assert!(w.verify(
                &d.hermitian_adjacency(),
                &d.converse().hermitian_adjacency()
            ));
        }
    }

    #[test]
    fn bipartite_negation_is_equivalent() {
        let h = digon_path(3).hermitian_adjacency();
        let neg = h.negated();
        assert!(strong_equiv(&h, &neg).is_some(), "±1 phases fix bipartite sign flips");
        let w = equiv(&h, &neg).unwrap();
        assert!(w.verify(&h, &neg));
    }

    #[test]
    fn radius_boundary_separates_quadrangles() {
        // One reversed arc changes the cycle gain and the spectral radius.
        let mut ctilde4 = Digraph::new(4);
        ctilde4.add_arc(0, 1).unwrap();
        ctilde4.add_arc(1, 2).unwrap();
        ctilde4.add_arc(2, 3).unwrap();
        ctilde4.add_arc(0, 3).unwrap();
        assert_eq!(
            ctilde4.hermitian_adjacency().radius_class(),
            RadiusClass::LessThan2
        );
        assert!(switching_equiv(&ctilde4, &digon_cycle(4)).is_none());
    }

    #[test]
    fn witness_round_trips_through_json() {
        let w = switching_equiv(&directed_cycle(4), &digon_cycle(4)).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.contains("\"perm\""));
        assert!(json.contains("\"conj\""));
        assert!(json.contains("\"neg\""));
        let back: SwitchingWitness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);

        let bad = r#"{"perm":[0,0],"phases":["1","1"],"conj":false,"neg":false}"#;
        assert!(serde_json::from_str::<SwitchingWitness>(bad).is_err());
        let bad_phase = r#"{"perm":[0,1],"phases":["1","j"],"conj":false,"neg":false}"#;
        assert!(serde_json::from_str::<SwitchingWitness>(bad_phase).is_err());
        let short = r#"{"perm":[0,1],"phases":["1"],"conj":false,"neg":false}"#;
        assert!(serde_json::from_str::<SwitchingWitness>(short).is_err());
    }

    #[test]
    fn witness_inversion_and_composition() {
        let a = directed_cycle(4).hermitian_adjacency();
        let b = digon_cycle(4).hermitian_adjacency();
        let w = strong_equiv(&a, &b).unwrap();
        assert!(w.invert().verify(&b, &a));

        let c = w.apply(&a);
        assert_eq!(c, b);
        // Compose a→b with b→a: identity action on a.
        let round = w.compose(&w.invert());
        assert_eq!(round.apply(&a), a);

        // Compose with a conjugating witness.
        let d = directed_cycle(5);
        let wc = switching_equiv(&d, &d.converse()).unwrap();
        let wc2 = wc.compose(&wc.invert());
        assert_eq!(wc2.apply(&d.hermitian_adjacency()), d.hermitian_adjacency());
    }

    #[test]
    fn canonical_form_identifies_classes() {
        let a = canonical_form(&directed_cycle(4).hermitian_adjacency(), EquivMode::Strong)
            .unwrap();
        let b = canonical_form(&digon_cycle(4).hermitian_adjacency(), EquivMode::Strong)
            .unwrap();
        assert_eq!(a, b);

        let c3 = canonical_form(&digon_cycle(3).hermitian_adjacency(), EquivMode::Strong)
            .unwrap();
        let d3 = canonical_form(&directed_cycle(3).hermitian_adjacency(), EquivMode::Strong)
            .unwrap();
        assert_ne!(c3, d3);
    }

    #[test]
    fn canonical_form_fixed_points_and_caps() {
        let z = HermMatrix::zero(3);
        assert_eq!(canonical_form(&z, EquivMode::Strong).unwrap(), z);

        let too_big = HermMatrix::zero(17);
        assert!(matches!(
            canonical_form(&too_big, EquivMode::Strong),
            Err(Error::CapExceeded { n: 17, cap: 16 })
        ));
        let wide = HermMatrix::from_i64_rows(&[vec![(0, 0), (2, 0)], vec![(2, 0), (0, 0)]])
            .unwrap();
        assert!(matches!(
            canonical_form(&wide, EquivMode::Strong),
            Err(Error::NotAdjacencyClass { .. })
        ));
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let h = directed_cycle(4).hermitian_adjacency();
        let base = canonical_form(&h, EquivMode::Strong).unwrap();
        // Scramble by a nontrivial witness and re-canonicalize.
        let w = SwitchingWitness {
            perm: vec![2, 0, 3, 1],
            phases: vec![Phase::I, Phase::MINUS_I, Phase::ONE, Phase::MINUS_ONE],
            conjugated: true,
            negated: false,
        };
        let scrambled = w.apply(&h);
        assert_eq!(canonical_form(&scrambled, EquivMode::Strong).unwrap(), base);
        // The canonical form itself is in the orbit and canonicalizes to itself.
        assert_eq!(canonical_form(&base, EquivMode::Strong).unwrap(), base);
    }

    #[test]
    fn equiv_mode_identifies_negations() {
        let h = digon_path(4).hermitian_adjacency();
        let a = canonical_form(&h, EquivMode::Equiv).unwrap();
        let b = canonical_form(&h.negated(), EquivMode::Equiv).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn containment_examples() {
        // P₃ inside the quadrangle.
        let found = contains_up_to_switching(&digon_path(3), &digon_cycle(4));
        let (subset, w) = found.expect("3 consecutive vertices work");
        assert_eq!(subset.len(), 3);
        let sub = digon_cycle(4).subdigraph(&subset).unwrap();
        assert!(w.verify(
            &digon_path(3).hermitian_adjacency(),
            &sub.hermitian_adjacency()
        ));
        // Size-based rejection.
        assert!(contains_up_to_switching(&digon_cycle(5), &digon_path(4)).is_none());
        // A digraph is contained in itself.
        assert!(contained_up_to_switching(&digon_cycle(4), &digon_cycle(4)));
        // Directed path inside a digon path (phase rotation).
        let mut dp = Digraph::new(3);
        dp.add_arc(0, 1).unwrap();
        dp.add_arc(2, 1).unwrap();
        assert!(contained_up_to_switching(&dp, &digon_cycle(4)));
    }

    #[test]
    fn zero_order_matrices_are_trivially_equivalent() {
        let a = HermMatrix::zero(0);
        assert!(strong_equiv(&a, &a).is_some());
        let b = HermMatrix::zero(1);
        assert!(strong_equiv(&a, &b).is_none());
    }
}
