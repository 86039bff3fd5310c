//! Edge-coloured pregraphs: graphs whose edges carry a colour in {0, 1, 2}
//! and which may have semi-edges (a single dangling incidence at a vertex).
//!
//! Every vertex has at most one incidence of each colour. Quotients of flag
//! graphs have exactly one per colour, so an edge of colour `c` is a
//! partial involution on the vertex set and a semi-edge is its fixed point.
//! That makes neighbourhoods colour-determined, which keeps isomorphism
//! testing and canonical coding polynomial.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Colour = u8;

pub const COLOURS: [Colour; 3] = [0, 1, 2];

/// DOT colour names, indexed by edge colour.
pub const DOT_COLOURS: [&str; 3] = ["red", "green", "blue"];

/// The incidence of one colour at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Absent,
    Semi,
    Edge(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pregraph {
    adj: Vec<[Slot; 3]>,
}

/// A connected component, re-indexed from 0, together with the labels its
/// vertices carry in the parent pregraph (`vertices[i]` is local vertex `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Pregraph,
}

/// Isomorphism-invariant code: equal iff colour-preserving isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PregraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, Colour)>,
    semi_edges: Vec<(usize, Colour)>,
}

fn check_colour(c: Colour) -> Result<()> {
    if c > 2 {
        Err(Error::BadColour(c))
    } else {
        Ok(())
    }
}

impl Pregraph {
    /// `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Pregraph { adj: vec![[Slot::Absent; 3]; n] }
    }

    pub fn from_parts(n: usize, edges: &[(usize, usize, Colour)], semi_edges: &[(usize, Colour)]) -> Result<Self> {
        let mut p = Pregraph::new(n);
        for &(u, v, c) in edges {
            p.add_edge(u, v, c)?;
        }
        for &(v, c) in semi_edges {
            p.add_semi_edge(v, c)?;
        }
        Ok(p)
    }

    fn check_free(&self, v: usize, c: Colour) -> Result<()> {
        check_colour(c)?;
        if v >= self.adj.len() {
            return Err(Error::Input(format!("vertex {v} out of range ({} vertices)", self.adj.len())));
        }
        if self.adj[v][c as usize] != Slot::Absent {
            return Err(Error::Input(format!("vertex {v} already has an incidence of colour {c}")));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize, c: Colour) -> Result<()> {
        if u == v {
            return Err(Error::Input(format!("edge {u}-{v} of colour {c} is a loop; use a semi-edge")));
        }
        self.check_free(u, c)?;
        self.check_free(v, c)?;
        self.adj[u][c as usize] = Slot::Edge(v);
        self.adj[v][c as usize] = Slot::Edge(u);
        Ok(())
    }

    pub fn add_semi_edge(&mut self, v: usize, c: Colour) -> Result<()> {
        self.check_free(v, c)?;
        self.adj[v][c as usize] = Slot::Semi;
        Ok(())
    }

    /// Pregraph whose colour-`c` incidences are given by the involution
    /// `inv[c]` on the vertices (fixed points become semi-edges). `None`
    /// leaves the colour absent.
    pub fn from_involutions(n: usize, inv: [Option<&[usize]>; 3]) -> Result<Self> {
        let mut p = Pregraph::new(n);
        for (c, maybe) in inv.iter().enumerate() {
            let Some(images) = maybe else { continue };
            if images.len() != n {
                return Err(Error::Input(format!("colour {c} involution has wrong length")));
            }
            for v in 0..n {
                let w = images[v];
                if w >= n || images[w] != v {
                    return Err(Error::Input(format!("colour {c} map is not an involution")));
                }
                p.adj[v][c] = if w == v { Slot::Semi } else { Slot::Edge(w) };
            }
        }
        Ok(p)
    }

    /// The colour-`c` incidences as an involution, if every vertex has one.
    pub fn involution(&self, c: Colour) -> Option<Vec<usize>> {
        (0..self.n_vertices())
            .map(|v| match self.adj[v][c as usize] {
                Slot::Absent => None,
                Slot::Semi => Some(v),
                Slot::Edge(w) => Some(w),
            })
            .collect()
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn slot(&self, v: usize, c: Colour) -> Slot {
        self.adj[v][c as usize]
    }

    /// Edges as `(u, v, colour)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, Colour)> {
        let mut out = Vec::new();
        for (u, slots) in self.adj.iter().enumerate() {
            for c in COLOURS {
                if let Slot::Edge(v) = slots[c as usize] {
                    if u < v {
                        out.push((u, v, c));
                    }
                }
            }
        }
        out.sort_unstable_by_key(|&(u, v, c)| (c, u, v));
        out
    }

    /// Semi-edges as `(v, colour)`, sorted by colour then vertex.
    pub fn semi_edges(&self) -> Vec<(usize, Colour)> {
        let mut out = Vec::new();
        for c in COLOURS {
            for (v, slots) in self.adj.iter().enumerate() {
                if slots[c as usize] == Slot::Semi {
                    out.push((v, c));
                }
            }
        }
        out
    }

    /// True when every vertex has exactly one incidence of each listed colour
    /// and none of the others.
    pub fn has_exactly_colours(&self, colours: &[Colour]) -> bool {
        self.adj
            .iter()
            .all(|slots| COLOURS.iter().all(|&c| (slots[c as usize] != Slot::Absent) == colours.contains(&c)))
    }

    pub fn delete_colour(&self, c: Colour) -> Result<Pregraph> {
        check_colour(c)?;
        let mut p = self.clone();
        for slots in &mut p.adj {
            slots[c as usize] = Slot::Absent;
        }
        Ok(p)
    }

    /// Exchanges the roles of colours `a` and `b`.
    pub fn swap_colours(&self, a: Colour, b: Colour) -> Result<Pregraph> {
        check_colour(a)?;
        check_colour(b)?;
        let mut p = self.clone();
        for slots in &mut p.adj {
            slots.swap(a as usize, b as usize);
        }
        Ok(p)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Pregraph {
        let mut adj = vec![[Slot::Absent; 3]; self.n_vertices()];
        for (v, slots) in self.adj.iter().enumerate() {
            adj[perm[v]] = slots.map(|s| match s {
                Slot::Edge(w) => Slot::Edge(perm[w]),
                other => other,
            });
        }
        Pregraph { adj }
    }

    /// Subgraph induced on `vertices`, re-indexed in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Pregraph {
        let mut local = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v].map(|s| match s {
                    Slot::Edge(w) if local[w] != usize::MAX => Slot::Edge(local[w]),
                    Slot::Edge(_) => Slot::Absent,
                    other => other,
                })
            })
            .collect();
        Pregraph { adj }
    }

    /// Connected components (semi-edges do not connect anything), ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut vertices = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for s in self.adj[v] {
                    if let Slot::Edge(w) = s {
                        if !seen[w] {
                            seen[w] = true;
                            vertices.push(w);
                            queue.push_back(w);
                        }
                    }
                }
            }
            vertices.sort_unstable();
            let graph = self.induced(&vertices);
            out.push(Component { vertices, graph });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first relabeling of the component of `root`; neighbours are
    /// visited in colour order so the result depends only on the root.
    fn rooted(&self, root: usize) -> (Vec<u32>, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n_vertices()];
        let mut order = vec![root];
        label[root] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for s in self.adj[v] {
                if let Slot::Edge(w) = s {
                    if label[w] == usize::MAX {
                        label[w] = order.len();
                        order.push(w);
                    }
                }
            }
        }
        let mut code = Vec::with_capacity(1 + 3 * order.len());
        code.push(order.len() as u32);
        for &v in &order {
            for s in self.adj[v] {
                code.push(match s {
                    Slot::Absent => 0,
                    Slot::Semi => 1,
                    Slot::Edge(w) => 2 + label[w] as u32,
                });
            }
        }
        (code, order)
    }

    /// Canonical code plus a canonical vertex order (`order[i]` is the
    /// vertex placed at position `i`).
    fn canonical(&self) -> (Vec<u32>, Vec<usize>) {
        let mut parts: Vec<(Vec<u32>, Vec<usize>)> = self
            .components()
            .into_iter()
            .map(|comp| {
                comp.vertices
                    .iter()
                    .map(|&root| self.rooted(root))
                    .min_by(|a, b| a.0.cmp(&b.0))
                    .expect("components are non-empty")
            })
            .collect();
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut code = vec![parts.len() as u32];
        let mut order = Vec::with_capacity(self.n_vertices());
        for (c, o) in parts {
            code.extend(c);
            order.extend(o);
        }
        (code, order)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode(self.canonical().0)
    }

    /// The isomorphic copy with vertices in canonical order.
    pub fn canonical_form(&self) -> Pregraph {
        let order = self.canonical().1;
        let mut perm = vec![0; order.len()];
        for (i, v) in order.into_iter().enumerate() {
            perm[v] = i;
        }
        self.relabel(&perm)
    }

    /// A colour-preserving vertex bijection `phi` (`phi[v]` is the image of
    /// `v` in `other`), or `None` if the pregraphs are not isomorphic.
    pub fn isomorphic(&self, other: &Pregraph) -> Option<Vec<usize>> {
        if self.n_vertices() != other.n_vertices() {
            return None;
        }
        let (code_a, order_a) = self.canonical();
        let (code_b, order_b) = other.canonical();
        if code_a != code_b {
            return None;
        }
        let mut phi = vec![0; self.n_vertices()];
        for (a, b) in order_a.into_iter().zip(order_b) {
            phi[a] = b;
        }
        Some(phi)
    }

    pub fn from_json(text: &str) -> Result<Pregraph> {
        let raw: PregraphJson = serde_json::from_str(text)?;
        Pregraph::from_parts(raw.vertices, &raw.edges, &raw.semi_edges)
    }

    fn json_repr(&self) -> PregraphJson {
        PregraphJson { vertices: self.n_vertices(), edges: self.edges(), semi_edges: self.semi_edges() }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.json_repr()).expect("plain integers always serialize")
    }

    /// Compact JSON with keys in the order `vertices`, `edges`, `semi_edges`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_repr()).expect("plain integers always serialize")
    }

    /// Graphviz rendering. Colours 0, 1, 2 are drawn red, green, blue; a
    /// semi-edge of colour `c` at `v` is an edge to a point node `se_<v>_<c>`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name.replace('"', "\\\""));
        for v in 0..self.n_vertices() {
            out.push_str(&format!("  {v} [shape=circle];\n"));
        }
        for (u, v, c) in self.edges() {
            out.push_str(&format!("  {u} -- {v} [color=\"{}\", label=\"{c}\"];\n", DOT_COLOURS[c as usize]));
        }
        for (v, c) in self.semi_edges() {
            out.push_str(&format!("  se_{v}_{c} [shape=point];\n"));
            out.push_str(&format!("  {v} -- se_{v}_{c} [color=\"{}\", label=\"{c}\"];\n", DOT_COLOURS[c as usize]));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Pregraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pregraph({})", self)
    }
}

impl fmt::Display for Pregraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices; edges", self.n_vertices())?;
        for (u, v, c) in self.edges() {
            write!(f, " {u}-{v}:{c}")?;
        }
        write!(f, "; semi-edges")?;
        for (v, c) in self.semi_edges() {
            write!(f, " {v}:{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular() -> Pregraph {
        Pregraph::from_parts(1, &[], &[(0, 0), (0, 1), (0, 2)]).unwrap()
    }

    fn chiral() -> Pregraph {
        Pregraph::from_parts(2, &[(0, 1, 0), (0, 1, 1), (0, 1, 2)], &[]).unwrap()
    }

    // two vertices, semi-1 at each, a 2-edge between
    fn two_a() -> Pregraph {
        Pregraph::from_parts(2, &[(0, 1, 2)], &[(0, 1), (1, 1)]).unwrap()
    }

    fn two_b() -> Pregraph {
        Pregraph::from_parts(2, &[(0, 1, 1)], &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn one_incidence_per_colour() {
        let mut p = Pregraph::new(3);
        p.add_edge(0, 1, 0).unwrap();
        assert!(p.add_edge(1, 2, 0).is_err());
        assert!(p.add_semi_edge(0, 0).is_err());
        assert!(p.add_edge(2, 2, 1).is_err());
        assert!(p.add_semi_edge(2, 3).is_err());
        // parallel edges of different colours are fine
        p.add_edge(0, 1, 1).unwrap();
    }

    #[test]
    fn delete_colour_examples() {
        let p = regular().delete_colour(0).unwrap();
        assert_eq!(p.semi_edges(), vec![(0, 1), (0, 2)]);
        let p = chiral().delete_colour(2).unwrap();
        assert_eq!(p.edges(), vec![(0, 1, 0), (0, 1, 1)]);
        assert!(chiral().delete_colour(3).is_err());
    }

    #[test]
    fn components_examples() {
        let p = Pregraph::from_parts(4, &[], &[(0, 1), (1, 1), (2, 2), (3, 0)]).unwrap();
        assert_eq!(p.components().len(), 4);
        let p = Pregraph::from_parts(4, &[(0, 1, 0), (1, 2, 1), (2, 3, 0)], &[]).unwrap();
        let comps = p.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices, vec![0, 1, 2, 3]);
        let p = Pregraph::from_parts(4, &[(0, 3, 0), (1, 2, 1)], &[(0, 1)]).unwrap();
        let comps = p.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 3]);
        assert_eq!(comps[0].graph.edges(), vec![(0, 1, 0)]);
        assert_eq!(comps[0].graph.semi_edges(), vec![(0, 1)]);
    }

    #[test]
    fn isomorphism_examples() {
        let a = two_a();
        let swapped = a.relabel(&[1, 0]);
        assert!(a.isomorphic(&swapped).is_some());
        assert_eq!(a.canonical_code(), swapped.canonical_code());
        assert!(two_a().isomorphic(&two_b()).is_none());
        assert_ne!(two_a().canonical_code(), two_b().canonical_code());
    }

    #[test]
    fn isomorphism_maps_incidences() {
        let p = Pregraph::from_parts(4, &[(0, 1, 0), (2, 3, 0), (1, 2, 1)], &[(0, 1), (3, 1)]).unwrap();
        let q = p.relabel(&[2, 0, 3, 1]);
        let phi = p.isomorphic(&q).unwrap();
        assert_eq!(p.relabel(&phi), q);
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let p = two_a();
        let text = p.to_json();
        assert_eq!(text, r#"{"vertices":2,"edges":[[0,1,2]],"semi_edges":[[0,1],[1,1]]}"#);
        assert_eq!(Pregraph::from_json(&text).unwrap(), p);
        assert!(Pregraph::from_json(r#"{"vertices":1,"edges":[],"semi_edges":[],"x":1}"#).is_err());
        assert!(Pregraph::from_json(r#"{"vertices":1,"edges":[[0,0,1]],"semi_edges":[]}"#).is_err());
    }

    #[test]
    fn dot_naming() {
        let dot = two_a().to_dot("v_2a");
        assert!(dot.starts_with("graph \"v_2a\" {"));
        assert!(dot.contains("0 -- 1 [color=\"blue\", label=\"2\"];"));
        assert!(dot.contains("se_0_1 [shape=point];"));
        assert!(dot.contains("1 -- se_1_1 [color=\"green\", label=\"1\"];"));
    }
}
