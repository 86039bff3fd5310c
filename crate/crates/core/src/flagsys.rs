//! Flag systems: the three adjacency involutions of a map and the orbit
//! machinery that recovers vertices, edges and faces from them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pregraph::Colour;

/// A finite map given by its flags `0..n` and the involutions `s0`, `s1`, `s2`.
///
/// Construction only checks that the three permutations are bijections of
/// the same non-empty set; the map axioms are checked by [`FlagSystem::validate`],
/// so that broken inputs can be reported instead of rejected.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagSystem {
    s: [Permutation; 3],
}

/// One broken axiom. Violations are data, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    FlagCountNotMultipleOfFour {
        flags: usize,
    },
    NotInvolution {
        generator: Colour,
        flag: usize,
    },
    FixedPoints {
        generator: Colour,
        count: usize,
        first: usize,
    },
    S0S2NotCommuting {
        flag: usize,
    },
    S0S2FixedPoint {
        flag: usize,
    },
    NotTransitive {
        orbits: usize,
    },
    /// Strict only: an edge whose two ends are the same vertex.
    EdgeLoop {
        edge: usize,
        vertex: usize,
    },
    /// Strict only: two distinct edges join the same pair of vertices.
    MultipleEdges {
        u: usize,
        v: usize,
    },
    /// Strict only: a vertex of degree below 3.
    LowDegree {
        vertex: usize,
        degree: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FlagCountNotMultipleOfFour { flags } => {
                write!(f, "flag count {flags} is not a multiple of 4")
            }
            Violation::NotInvolution { generator, flag } => {
                write!(f, "s{generator} is not an involution (fails at flag {flag})")
            }
            Violation::FixedPoints { generator, count, first } => {
                write!(f, "s{generator} has {count} fixed points (first: flag {first})")
            }
            Violation::S0S2NotCommuting { flag } => {
                write!(f, "s0 and s2 do not commute (fails at flag {flag})")
            }
            Violation::S0S2FixedPoint { flag } => write!(f, "s0 s2 fixes flag {flag}"),
            Violation::NotTransitive { orbits } => {
                write!(f, "monodromy group is not transitive ({orbits} orbits)")
            }
            Violation::EdgeLoop { edge, vertex } => {
                write!(f, "edge {edge} is a loop at vertex {vertex}")
            }
            Violation::MultipleEdges { u, v } => {
                write!(f, "vertices {u} and {v} are joined by more than one edge")
            }
            Violation::LowDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} < 3")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A partition of the flag set into orbits. Orbit ids are assigned in order
/// of each orbit's smallest flag, and member lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Normalizes an arbitrary labeling of `0..n` into an orbit partition.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut orbit_of = Vec::with_capacity(labels.len());
        for (flag, label) in labels.iter().enumerate() {
            let id = *remap.entry(label).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[id].push(flag);
            orbit_of.push(id);
        }
        OrbitPartition { orbit_of, members }
    }

    #[inline]
    pub fn orbit_of(&self, flag: usize) -> usize {
        self.orbit_of[flag]
    }

    pub fn orbit_count(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self, orbit: usize) -> &[usize] {
        &self.members[orbit]
    }

    pub fn orbits(&self) -> impl Iterator<Item = &[usize]> {
        self.members.iter().map(|m| m.as_slice())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn n_flags(&self) -> usize {
        self.orbit_of.len()
    }
}

/// Vertices, edges and faces of a map as orbits of `<s1,s2>`, `<s0,s2>` and
/// `<s0,s1>`.
#[derive(Clone, Debug)]
pub struct MapElements {
    pub vertices: OrbitPartition,
    pub edges: OrbitPartition,
    pub faces: OrbitPartition,
}

impl MapElements {
    pub fn degree(&self, vertex: usize) -> usize {
        self.vertices.members(vertex).len() / 2
    }

    pub fn face_size(&self, face: usize) -> usize {
        self.faces.members(face).len() / 2
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagSystemJson {
    flags: usize,
    s0: Vec<usize>,
    s1: Vec<usize>,
    s2: Vec<usize>,
}

impl FlagSystem {
    pub fn new(s0: Permutation, s1: Permutation, s2: Permutation) -> Result<Self> {
        let n = s0.len();
        if n == 0 {
            return Err(Error::Input("a flag system needs at least one flag".into()));
        }
        if s1.len() != n || s2.len() != n {
            return Err(Error::Input(format!(
                "permutation lengths differ: s0 {}, s1 {}, s2 {}",
                n,
                s1.len(),
                s2.len()
            )));
        }
        Ok(FlagSystem { s: [s0, s1, s2] })
    }

    pub fn from_images(s0: Vec<usize>, s1: Vec<usize>, s2: Vec<usize>) -> Result<Self> {
        Self::new(Permutation::new(s0)?, Permutation::new(s1)?, Permutation::new(s2)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: FlagSystemJson = serde_json::from_str(text)?;
        if raw.flags == 0 {
            return Err(Error::Input("\"flags\" must be positive".into()));
        }
        for (name, seq) in [("s0", &raw.s0), ("s1", &raw.s1), ("s2", &raw.s2)] {
            if seq.len() != raw.flags {
                return Err(Error::Input(format!("{name} has length {}, expected {}", seq.len(), raw.flags)));
            }
        }
        Self::from_images(raw.s0, raw.s1, raw.s2)
    }

    pub fn to_json(&self) -> String {
        let raw = FlagSystemJson {
            flags: self.n_flags(),
            s0: self.s[0].images().to_vec(),
            s1: self.s[1].images().to_vec(),
            s2: self.s[2].images().to_vec(),
        };
        serde_json::to_string(&raw).expect("plain integers always serialize")
    }

    #[inline]
    pub fn n_flags(&self) -> usize {
        self.s[0].len()
    }

    pub fn generator(&self, j: Colour) -> &Permutation {
        &self.s[j as usize]
    }

    /// The `j`-adjacent flag of `flag`.
    #[inline]
    pub fn adj(&self, j: Colour, flag: usize) -> usize {
        self.s[j as usize].apply(flag)
    }

    /// Applies a word of generators left to right: `flag^{j0, j1, ...}`.
    pub fn walk(&self, flag: usize, word: &[Colour]) -> usize {
        word.iter().fold(flag, |f, &j| self.adj(j, f))
    }

    /// Checks every map axiom; with `strict` also the simple-graph conditions.
    pub fn validate(&self, strict: bool) -> ValidationReport {
        let n = self.n_flags();
        let mut violations = Vec::new();
        if !n.is_multiple_of(4) {
            violations.push(Violation::FlagCountNotMultipleOfFour { flags: n });
        }
        for j in 0..3u8 {
            let s = self.generator(j);
            if let Some(flag) = (0..n).find(|&i| s.apply(s.apply(i)) != i) {
                violations.push(Violation::NotInvolution { generator: j, flag });
            }
            let fixed: Vec<usize> = s.fixed_points().collect();
            if let Some(&first) = fixed.first() {
                violations.push(Violation::FixedPoints { generator: j, count: fixed.len(), first });
            }
        }
        if let Some(flag) = (0..n).find(|&i| self.walk(i, &[0, 2]) != self.walk(i, &[2, 0])) {
            violations.push(Violation::S0S2NotCommuting { flag });
        }
        if let Some(flag) = (0..n).find(|&i| self.walk(i, &[0, 2]) == i) {
            violations.push(Violation::S0S2FixedPoint { flag });
        }
        let all = self.orbits_under(&[0, 1, 2]);
        if all.orbit_count() != 1 {
            violations.push(Violation::NotTransitive { orbits: all.orbit_count() });
        }
        if strict && violations.is_empty() {
            violations.extend(self.simplicity_violations());
        }
        ValidationReport { violations }
    }

    fn simplicity_violations(&self) -> Vec<Violation> {
        let el = self.elements_unchecked();
        let mut out = Vec::new();
        let mut pairs = BTreeSet::new();
        let mut reported = BTreeSet::new();
        for (edge, flags) in el.edges.orbits().enumerate() {
            let u = el.vertices.orbit_of(flags[0]);
            let v = el.vertices.orbit_of(self.adj(0, flags[0]));
            if u == v {
                out.push(Violation::EdgeLoop { edge, vertex: u });
                continue;
            }
            let key = (u.min(v), u.max(v));
            if !pairs.insert(key) && reported.insert(key) {
                out.push(Violation::MultipleEdges { u: key.0, v: key.1 });
            }
        }
        for vertex in 0..el.vertices.orbit_count() {
            let degree = el.degree(vertex);
            if degree < 3 {
                out.push(Violation::LowDegree { vertex, degree });
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate(false);
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidFlagSystem(v.to_string())),
        }
    }

    pub fn ensure_strict(&self) -> Result<()> {
        let report = self.validate(true);
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidFlagSystem(v.to_string())),
        }
    }

    /// Orbits of the subgroup generated by the listed involutions, by
    /// breadth-first closure. An empty generator list gives singletons.
    pub fn orbits_under(&self, generators: &[Colour]) -> OrbitPartition {
        let n = self.n_flags();
        let mut orbit_of = vec![usize::MAX; n];
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut orbit = vec![start];
            orbit_of[start] = id;
            queue.push_back(start);
            while let Some(f) = queue.pop_front() {
                for &j in generators {
                    let g = self.adj(j, f);
                    if orbit_of[g] == usize::MAX {
                        orbit_of[g] = id;
                        orbit.push(g);
                        queue.push_back(g);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        OrbitPartition { orbit_of, members }
    }

    pub fn elements(&self) -> Result<MapElements> {
        self.ensure_valid()?;
        Ok(self.elements_unchecked())
    }

    pub(crate) fn elements_unchecked(&self) -> MapElements {
        MapElements {
            vertices: self.orbits_under(&[1, 2]),
            edges: self.orbits_under(&[0, 2]),
            faces: self.orbits_under(&[0, 1]),
        }
    }

    /// The dual map: `s0` and `s2` exchanged.
    pub fn dual(&self) -> FlagSystem {
        FlagSystem { s: [self.s[2].clone(), self.s[1].clone(), self.s[0].clone()] }
    }

    /// The Petrie dual: `s0` replaced by `s0 s2`. Same vertices and edges,
    /// faces become the Petrie polygons.
    pub fn petrie_dual(&self) -> FlagSystem {
        FlagSystem { s: [self.s[0].then(&self.s[2]), self.s[1].clone(), self.s[2].clone()] }
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        let el = self.elements()?;
        Ok(el.vertices.orbit_count() as i64 - el.edges.orbit_count() as i64 + el.faces.orbit_count() as i64)
    }

    /// The same map with flag `i` renamed to `relabel(i)`.
    pub fn relabel(&self, relabel: &Permutation) -> FlagSystem {
        FlagSystem { s: [0, 1, 2].map(|j| self.s[j].relabel(relabel)) }
    }

    /// Two copies of `self` side by side (never transitive; handy for tests
    /// and for checking validation).
    pub fn disjoint_union(&self, other: &FlagSystem) -> FlagSystem {
        let n = self.n_flags();
        let s = [0, 1, 2].map(|j| {
            let images = self.s[j].images().iter().copied().chain(other.s[j].images().iter().map(|&i| i + n)).collect();
            Permutation::new(images).expect("union of bijections")
        });
        FlagSystem { s }
    }

    /// Breadth-first relabeling from `root`, visiting neighbours in colour
    /// order. Returns the image table in the new labels, or `None` as soon
    /// as it compares greater than `bound`.
    fn rooted_code(&self, root: usize, bound: Option<&[u32]>) -> Option<(Vec<u32>, Vec<usize>)> {
        let n = self.n_flags();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut code = Vec::with_capacity(3 * n);
        let mut head = 0;
        let mut tight = bound.is_some();
        while head < order.len() {
            let f = order[head];
            head += 1;
            for j in 0..3u8 {
                let g = self.adj(j, f);
                if label[g] == usize::MAX {
                    label[g] = order.len();
                    order.push(g);
                }
                let c = label[g] as u32;
                if tight {
                    let b = bound.unwrap()[code.len()];
                    if c > b {
                        return None;
                    }
                    if c < b {
                        tight = false;
                    }
                }
                code.push(c);
            }
        }
        if order.len() != n {
            return None;
        }
        Some((code, label))
    }

    /// A relabeling-invariant code: equal codes iff the systems are
    /// isomorphic. Needs a transitive system.
    pub fn canonical_code(&self) -> Result<Vec<u32>> {
        self.canonical_labeling().map(|(code, _)| code)
    }

    fn canonical_labeling(&self) -> Result<(Vec<u32>, Vec<usize>)> {
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        for root in 0..self.n_flags() {
            if let Some(found) = self.rooted_code(root, best.as_ref().map(|b| b.0.as_slice())) {
                if best.as_ref().is_none_or(|b| found.0 < b.0) {
                    best = Some(found);
                }
            }
        }
        best.ok_or_else(|| Error::InvalidFlagSystem("canonical form needs a transitive system".into()))
    }

    /// The representative of this system's isomorphism class.
    pub fn canonical_form(&self) -> Result<FlagSystem> {
        self.canonical_code_and_form().map(|(_, fs)| fs)
    }

    pub(crate) fn canonical_code_and_form(&self) -> Result<(Vec<u32>, FlagSystem)> {
        let (code, label) = self.canonical_labeling()?;
        Ok((code, self.relabel(&Permutation::new(label).expect("labels are a bijection"))))
    }

    /// A flag bijection `phi` with `phi(s_j(i)) = s_j'(phi(i))` for all `j`,
    /// if one exists.
    pub fn isomorphism_to(&self, other: &FlagSystem) -> Option<Permutation> {
        if self.n_flags() != other.n_flags() {
            return None;
        }
        let (code_a, label_a) = self.canonical_labeling().ok()?;
        let (code_b, label_b) = other.canonical_labeling().ok()?;
        if code_a != code_b {
            return None;
        }
        let to_b = Permutation::new(label_b).ok()?.inverse();
        Some(Permutation::new(label_a).ok()?.then(&to_b))
    }
}

impl fmt::Debug for FlagSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagSystem")
            .field("flags", &self.n_flags())
            .field("s0", &self.s[0].images())
            .field("s1", &self.s[1].images())
            .field("s2", &self.s[2].images())
            .finish()
    }
}
