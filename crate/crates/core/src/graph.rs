//! Crystal graphs: breadth-first generation of a highest-weight component
//! and the JSON / DOT export formats.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};

use crate::cartan::{Index, Weight};
use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

/// A realization of a `U_q(G2)` crystal: statistics plus partial operators.
pub trait Crystal {
    type Elem: Clone + Display;

    fn weight(&self, b: &Self::Elem) -> Weight;
    fn epsilon(&self, i: Index, b: &Self::Elem) -> u32;
    fn phi(&self, i: Index, b: &Self::Elem) -> u32;
    fn f(&self, i: Index, b: &Self::Elem) -> Result<Option<Self::Elem>>;
    fn e(&self, i: Index, b: &Self::Elem) -> Result<Option<Self::Elem>>;

    /// Canonical key; two elements are equal iff their keys are.
    fn key(&self, b: &Self::Elem) -> String {
        b.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex<P> {
    pub key: String,
    pub weight: Weight,
    pub payload: P,
    /// Length of any f-word from the highest vertex.
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub i: Index,
    pub to: usize,
}

/// A connected highest-weight crystal graph. Vertex 0 is the highest vertex;
/// vertices are ordered by depth, then by key.
#[derive(Debug, Clone)]
pub struct CrystalGraph<P> {
    vertices: Vec<Vertex<P>>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    out: Vec<[Option<usize>; 2]>,
    inc: Vec<[Option<usize>; 2]>,
    parent: Vec<Option<(usize, Index)>>,
}

fn slot(i: Index) -> usize {
    i.as_u8() as usize - 1
}

impl<P> CrystalGraph<P> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn highest(&self) -> usize {
        0
    }

    pub fn vertices(&self) -> &[Vertex<P>] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Vertex<P> {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn find(&self, key: &str) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn contains(&self, key: &str) -> bool {
        self.index.contains_key(key)
    }

    /// Target of the outgoing i-edge, if any.
    pub fn f_edge(&self, v: usize, i: Index) -> Option<usize> {
        self.out[v][slot(i)]
    }

    /// Source of the incoming i-edge, if any.
    pub fn e_edge(&self, v: usize, i: Index) -> Option<usize> {
        self.inc[v][slot(i)]
    }

    /// Number of steps along i-edges forward from `v`.
    pub fn forward_string(&self, v: usize, i: Index) -> usize {
        std::iter::successors(self.f_edge(v, i), |&u| self.f_edge(u, i)).count()
    }

    pub fn backward_string(&self, v: usize, i: Index) -> usize {
        std::iter::successors(self.e_edge(v, i), |&u| self.e_edge(u, i)).count()
    }

    /// The f-word (labels in application order) leading from the highest
    /// vertex to `v` along the BFS tree.
    pub fn word_to(&self, v: usize) -> Vec<Index> {
        let mut word = Vec::with_capacity(self.vertices[v].depth);
        let mut cur = v;
        while let Some((p, i)) = self.parent[cur] {
            word.push(i);
            cur = p;
        }
        word.reverse();
        word
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.vertices.iter().map(|v| v.weight)
    }

    pub fn map_payload<Q>(&self, f: impl Fn(&P) -> Q) -> CrystalGraph<Q> {
        CrystalGraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex {
                    key: v.key.clone(),
                    weight: v.weight,
                    payload: f(&v.payload),
                    depth: v.depth,
                })
                .collect(),
            index: self.index.clone(),
            edges: self.edges.clone(),
            out: self.out.clone(),
            inc: self.inc.clone(),
            parent: self.parent.clone(),
        }
    }

    /// Assembles a graph from vertices already in canonical order and
    /// edges given by index. Parent pointers follow the first incoming
    /// edge in `(from, i)` order.
    fn assemble(vertices: Vec<Vertex<P>>, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort();
        let n = vertices.len();
        let mut index = HashMap::with_capacity(n);
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.key.clone(), k).is_some() {
                return Err(Error::Parse(format!("duplicate vertex key {}", v.key)));
            }
        }
        let mut out = vec![[None; 2]; n];
        let mut inc = vec![[None; 2]; n];
        let mut parent = vec![None; n];
        for e in &edges {
            let s = slot(e.i);
            if out[e.from][s].replace(e.to).is_some() || inc[e.to][s].replace(e.from).is_some() {
                return Err(Error::Parse(format!(
                    "vertex has two {}-edges: {} -> {}",
                    e.i, vertices[e.from].key, vertices[e.to].key
                )));
            }
            if parent[e.to].is_none() && vertices[e.from].depth < vertices[e.to].depth {
                parent[e.to] = Some((e.from, e.i));
            }
        }
        Ok(CrystalGraph { vertices, index, edges, out, inc, parent })
    }
}

/// Closes `seed` under the f-operators breadth first.
///
/// The seed must be killed by both e-operators. Within each BFS level the
/// new vertices are sorted by key, so the result is independent of hash
/// order.
pub fn generate<C: Crystal>(crystal: &C, seed: C::Elem, cap: usize) -> Result<CrystalGraph<C::Elem>> {
    for i in Index::ALL {
        if crystal.e(i, &seed)?.is_some() {
            return Err(Error::NotHighestWeight(crystal.key(&seed)));
        }
    }
    let mut vertices = vec![Vertex {
        key: crystal.key(&seed),
        weight: crystal.weight(&seed),
        payload: seed,
        depth: 0,
    }];
    let mut index: HashMap<String, usize> = HashMap::new();
    index.insert(vertices[0].key.clone(), 0);
    let mut edges = Vec::new();
    let mut level = 0..1;
    let mut depth = 0;

    while !level.is_empty() {
        depth += 1;
        let mut next: BTreeMap<String, C::Elem> = BTreeMap::new();
        let mut pending: Vec<(usize, Index, String)> = Vec::new();
        for v in level.clone() {
            for i in Index::ALL {
                if let Some(child) = crystal.f(i, &vertices[v].payload)? {
                    let key = crystal.key(&child);
                    if !index.contains_key(&key) {
                        next.entry(key.clone()).or_insert(child);
                    }
                    pending.push((v, i, key));
                }
            }
        }
        let start = vertices.len();
        if start + next.len() > cap {
            return Err(Error::VertexCapExceeded { cap });
        }
        for (key, payload) in next {
            index.insert(key.clone(), vertices.len());
            vertices.push(Vertex { key, weight: crystal.weight(&payload), payload, depth });
        }
        for (from, i, key) in pending {
            edges.push(Edge { from, i, to: index[&key] });
        }
        level = start..vertices.len();
    }
    CrystalGraph::assemble(vertices, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub c12: i32,
    pub c21: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub key: String,
    pub weight: [i32; 2],
    pub payload: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: String,
    pub i: Index,
    pub to: String,
}

/// Serialized form of a crystal graph. Field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub lambda: [i32; 2],
    pub realization: String,
    pub config: ConfigDoc,
    pub highest: String,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

impl<P: Display> CrystalGraph<P> {
    pub fn to_doc(&self, realization: &str, config: ConfigDoc) -> GraphDoc {
        let hw = self.vertices[0].weight;
        GraphDoc {
            lambda: [hw.c1, hw.c2],
            realization: realization.to_string(),
            config,
            highest: self.vertices[0].key.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    key: v.key.clone(),
                    weight: [v.weight.c1, v.weight.c2],
                    payload: v.payload.to_string(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    from: self.vertices[e.from].key.clone(),
                    i: e.i,
                    to: self.vertices[e.to].key.clone(),
                })
                .collect(),
        }
    }
}

impl CrystalGraph<String> {
    /// Rebuilds a graph (payloads kept as text) from its serialized form.
    pub fn from_doc(doc: &GraphDoc) -> Result<Self> {
        let mut depth_of: HashMap<&str, usize> = HashMap::new();
        depth_of.insert(doc.highest.as_str(), 0);
        // Vertices are serialized in BFS order, so one pass over the edges
        // in source order fixes every depth.
        let pos: HashMap<&str, usize> =
            doc.vertices.iter().enumerate().map(|(k, v)| (v.key.as_str(), k)).collect();
        let mut by_source: Vec<&EdgeDoc> = doc.edges.iter().collect();
        by_source.sort_by_key(|e| pos.get(e.from.as_str()).copied().unwrap_or(usize::MAX));
        for e in by_source {
            let d = *depth_of
                .get(e.from.as_str())
                .ok_or_else(|| Error::Parse(format!("edge from unreachable vertex {}", e.from)))?;
            depth_of.entry(e.to.as_str()).or_insert(d + 1);
        }
        if doc.vertices.first().map(|v| &v.key) != Some(&doc.highest) {
            return Err(Error::Parse("first vertex must be the highest vertex".into()));
        }
        let vertices = doc
            .vertices
            .iter()
            .map(|v| {
                Ok(Vertex {
                    key: v.key.clone(),
                    weight: Weight::new(v.weight[0], v.weight[1]),
                    payload: v.payload.clone(),
                    depth: *depth_of
                        .get(v.key.as_str())
                        .ok_or_else(|| Error::Parse(format!("unreachable vertex {}", v.key)))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = doc
            .edges
            .iter()
            .map(|e| {
                let look = |k: &str| {
                    pos.get(k).copied().ok_or_else(|| Error::Parse(format!("unknown vertex {k}")))
                };
                Ok(Edge { from: look(&e.from)?, i: e.i, to: look(&e.to)? })
            })
            .collect::<Result<Vec<_>>>()?;
        CrystalGraph::assemble(vertices, edges)
    }
}

impl GraphDoc {
    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Graphviz rendering: 1-edges solid blue, 2-edges dashed red.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let q = |k: &str| format!("\"{}\"", k.replace('\\', "\\\\").replace('"', "\\\""));
        writeln!(s, "digraph crystal {{").unwrap();
        writeln!(s, "  label=\"lambda = {},{} ({})\";", self.lambda[0], self.lambda[1], self.realization).unwrap();
        writeln!(s, "  node [shape=box, fontname=\"monospace\"];").unwrap();
        for v in &self.vertices {
            writeln!(s, "  {} [label={}];", q(&v.key), q(&v.payload)).unwrap();
        }
        for e in &self.edges {
            let style = match e.i {
                Index::One => "color=blue, style=solid",
                Index::Two => "color=red, style=dashed",
            };
            writeln!(s, "  {} -> {} [label=\"{}\", {}];", q(&e.from), q(&e.to), e.i, style).unwrap();
        }
        writeln!(s, "}}").unwrap();
        s
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -{}-> {}", self.from, self.i, self.to)
    }
}
