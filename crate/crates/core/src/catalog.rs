//! The eight two-colour type graphs, the 22 symmetry type graphs of 4-orbit
//! maps, and the degree/size tables that go with them.
//!
//! The two-colour shapes are written over a generic colour pair `(x, y)`.
//! Vertex type graphs `v_*` use `(x, y) = (1, 2)`; face type graphs `f_*`
//! use `(x, y) = (1, 0)`, so that exchanging colours 0 and 2 (duality) sends
//! `v_*` to the `f_*` with the same suffix.
//!
//! The catalog is checked on first use: fingerprints are recomputed from the
//! embedded pregraphs and compared with the embedded table rows, and any
//! mismatch panics.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flagsys::FlagSystem;
use crate::pregraph::{CanonicalCode, Colour, Pregraph};
use crate::symmetry::Symmetry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoColourId {
    OneA,
    TwoA,
    TwoB,
    TwoC,
    ThreeA,
    FourA,
    FourB,
    FourC,
}

impl TwoColourId {
    pub const ALL: [TwoColourId; 8] = [
        TwoColourId::OneA,
        TwoColourId::TwoA,
        TwoColourId::TwoB,
        TwoColourId::TwoC,
        TwoColourId::ThreeA,
        TwoColourId::FourA,
        TwoColourId::FourB,
        TwoColourId::FourC,
    ];

    pub fn suffix(self) -> &'static str {
        match self {
            TwoColourId::OneA => "1a",
            TwoColourId::TwoA => "2a",
            TwoColourId::TwoB => "2b",
            TwoColourId::TwoC => "2c",
            TwoColourId::ThreeA => "3a",
            TwoColourId::FourA => "4a",
            TwoColourId::FourB => "4b",
            TwoColourId::FourC => "4c",
        }
    }

    pub fn parse(s: &str) -> Option<TwoColourId> {
        let s = s.trim_start_matches("v_").trim_start_matches("f_");
        TwoColourId::ALL.into_iter().find(|id| id.suffix() == s)
    }

    /// Number of pregraph vertices (flag orbits) in the shape.
    pub fn pattern_period(self) -> usize {
        match self {
            TwoColourId::OneA => 1,
            TwoColourId::TwoA | TwoColourId::TwoB | TwoColourId::TwoC => 2,
            TwoColourId::ThreeA => 3,
            TwoColourId::FourA | TwoColourId::FourB | TwoColourId::FourC => 4,
        }
    }

    /// Degree (or face size) `= multiplier · n` with `n ≥ min_n`.
    pub fn formula(self) -> SizeFormula {
        let (multiplier, min_n) = match self {
            TwoColourId::OneA => (1, 3),
            TwoColourId::TwoA => (2, 2),
            TwoColourId::TwoB => (2, 2),
            TwoColourId::TwoC => (1, 3),
            TwoColourId::ThreeA => (3, 1),
            TwoColourId::FourA => (2, 2),
            TwoColourId::FourB => (4, 1),
            TwoColourId::FourC => (4, 1),
        };
        SizeFormula { multiplier, min_n }
    }

    /// The shape over colours `(x, y)`.
    pub fn shape(self, x: Colour, y: Colour) -> Pregraph {
        let (n, edges, semi): (usize, Vec<Edge>, Vec<Semi>) = match self {
            TwoColourId::OneA => (1, vec![], vec![(0, x), (0, y)]),
            TwoColourId::TwoA => (2, vec![(0, 1, y)], vec![(0, x), (1, x)]),
            TwoColourId::TwoB => (2, vec![(0, 1, x)], vec![(0, y), (1, y)]),
            TwoColourId::TwoC => (2, vec![(0, 1, x), (0, 1, y)], vec![]),
            TwoColourId::ThreeA => (3, vec![(0, 1, y), (1, 2, x)], vec![(0, x), (2, y)]),
            TwoColourId::FourA => (4, vec![(0, 1, x), (1, 2, y), (2, 3, x), (3, 0, y)], vec![]),
            TwoColourId::FourB => (4, vec![(0, 1, x), (1, 2, y), (2, 3, x)], vec![(0, y), (3, y)]),
            TwoColourId::FourC => (4, vec![(0, 1, y), (1, 2, x), (2, 3, y)], vec![(0, x), (3, x)]),
        };
        Pregraph::from_parts(n, &edges, &semi).expect("catalog shapes are well formed")
    }
}

impl fmt::Display for TwoColourId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.suffix())
    }
}

impl Serialize for TwoColourId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.suffix())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Vertex,
    Face,
}

impl Family {
    /// The `(x, y)` colours the generic shapes are instantiated with.
    pub fn colours(self) -> (Colour, Colour) {
        match self {
            Family::Vertex => (1, 2),
            Family::Face => (1, 0),
        }
    }

    /// Colours of the characteristic system, in table order.
    pub fn table_colours(self) -> (Colour, Colour) {
        match self {
            Family::Vertex => (1, 2),
            Family::Face => (0, 1),
        }
    }

    pub fn prefix(self) -> &'static str {
        match self {
            Family::Vertex => "v",
            Family::Face => "f",
        }
    }

    pub fn label(self, id: TwoColourId) -> String {
        format!("{}_{}", self.prefix(), id.suffix())
    }

    pub fn shape(self, id: TwoColourId) -> Pregraph {
        let (x, y) = self.colours();
        id.shape(x, y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeFormula {
    pub multiplier: usize,
    pub min_n: usize,
}

impl SizeFormula {
    pub fn admits(&self, size: usize) -> bool {
        size.is_multiple_of(self.multiplier) && size / self.multiplier >= self.min_n
    }

    pub fn char_length(&self, n: usize) -> usize {
        2 * self.multiplier * n
    }
}

impl fmt::Display for SizeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier == 1 {
            write!(f, "n, n >= {}", self.min_n)
        } else {
            write!(f, "{}n, n >= {}", self.multiplier, self.min_n)
        }
    }
}

/// One row of the vertex or face table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableLookup {
    pub id: TwoColourId,
    pub formula: SizeFormula,
    /// Colours of the characteristic system `(2·s·n, first, second)`.
    pub colours: (Colour, Colour),
}

pub fn table_lookup(family: Family, id: TwoColourId) -> TableLookup {
    TableLookup { id, formula: id.formula(), colours: family.table_colours() }
}

pub fn table_lookup_vertex(id: TwoColourId) -> TableLookup {
    table_lookup(Family::Vertex, id)
}

pub fn table_lookup_face(id: TwoColourId) -> TableLookup {
    table_lookup(Family::Face, id)
}

fn shape_codes(family: Family) -> &'static [(CanonicalCode, TwoColourId); 8] {
    static VERTEX: OnceLock<[(CanonicalCode, TwoColourId); 8]> = OnceLock::new();
    static FACE: OnceLock<[(CanonicalCode, TwoColourId); 8]> = OnceLock::new();
    let cell = match family {
        Family::Vertex => &VERTEX,
        Family::Face => &FACE,
    };
    cell.get_or_init(|| TwoColourId::ALL.map(|id| (family.shape(id).canonical_code(), id)))
}

/// Which of the eight shapes `q` is, for the given family.
pub fn classify_shape(family: Family, q: &Pregraph) -> Result<TwoColourId> {
    let code = q.canonical_code();
    shape_codes(family)
        .iter()
        .find(|(c, _)| *c == code)
        .map(|&(_, id)| id)
        .ok_or(Error::NotATypeGraph { family: family.prefix() })
}

pub fn classify_vertex_shape(q: &Pregraph) -> Result<TwoColourId> {
    classify_shape(Family::Vertex, q)
}

pub fn classify_face_shape(q: &Pregraph) -> Result<TwoColourId> {
    classify_shape(Family::Face, q)
}

use TwoColourId::{FourA, FourB, FourC, OneA, ThreeA, TwoA, TwoB, TwoC};

type Edge = (usize, usize, Colour);
type Semi = (usize, Colour);

/// Symmetry type graphs of the 4-orbit maps: `(name, edges (u, v, colour),
/// semi-edges (v, colour))`.
#[rustfmt::skip]
const FIGURE: [(&str, &[Edge], &[Semi]); 22] = [
    ("4_A",  &[(0, 2, 1), (1, 3, 1), (2, 3, 2)], &[(0, 0), (1, 0), (2, 0), (3, 0), (0, 2), (1, 2)]),
    ("4_Ad", &[(2, 3, 0), (0, 2, 1), (1, 3, 1)], &[(0, 0), (1, 0), (0, 2), (1, 2), (2, 2), (3, 2)]),
    ("4_Ap", &[(2, 3, 0), (0, 2, 1), (1, 3, 1), (2, 3, 2)], &[(0, 0), (1, 0), (0, 2), (1, 2)]),
    ("4_B",  &[(1, 2, 1), (0, 1, 2), (2, 3, 2)], &[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (3, 1)]),
    ("4_Bd", &[(0, 1, 0), (2, 3, 0), (1, 2, 1)], &[(0, 1), (3, 1), (0, 2), (1, 2), (2, 2), (3, 2)]),
    ("4_Bp", &[(0, 1, 0), (2, 3, 0), (1, 2, 1), (0, 1, 2), (2, 3, 2)], &[(0, 1), (3, 1)]),
    ("4_C",  &[(0, 2, 1), (1, 3, 1), (0, 1, 2), (2, 3, 2)], &[(0, 0), (1, 0), (2, 0), (3, 0)]),
    ("4_Cd", &[(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1)], &[(0, 2), (1, 2), (2, 2), (3, 2)]),
    ("4_Cp", &[(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 1, 2), (2, 3, 2)], &[]),
    ("4_D",  &[(0, 1, 0), (2, 3, 0), (1, 2, 1), (2, 3, 2)], &[(0, 1), (3, 1), (0, 2), (1, 2)]),
    ("4_Dd", &[(2, 3, 0), (1, 2, 1), (0, 1, 2), (2, 3, 2)], &[(0, 0), (1, 0), (0, 1), (3, 1)]),
    ("4_Dp", &[(2, 3, 0), (1, 2, 1), (0, 1, 2)], &[(0, 0), (1, 0), (0, 1), (3, 1), (2, 2), (3, 2)]),
    ("4_E",  &[(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (2, 3, 2)], &[(0, 2), (1, 2)]),
    ("4_Ed", &[(2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 1, 2), (2, 3, 2)], &[(0, 0), (1, 0)]),
    ("4_Ep", &[(2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 1, 2)], &[(0, 0), (1, 0), (2, 2), (3, 2)]),
    ("4_F",  &[(0, 1, 0), (2, 3, 0), (0, 2, 2), (1, 3, 2)], &[(0, 1), (1, 1), (2, 1), (3, 1)]),
    ("4_G",  &[(0, 1, 0), (2, 3, 0), (0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2)], &[]),
    ("4_Gd", &[(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 2, 2), (1, 3, 2)], &[]),
    ("4_Gp", &[(0, 1, 0), (2, 3, 0), (0, 3, 1), (1, 2, 1), (0, 2, 2), (1, 3, 2)], &[]),
    ("4_H",  &[(0, 1, 0), (2, 3, 0), (2, 3, 1), (0, 2, 2), (1, 3, 2)], &[(0, 1), (1, 1)]),
    ("4_Hd", &[(0, 1, 0), (2, 3, 0), (1, 3, 1), (0, 2, 2), (1, 3, 2)], &[(0, 1), (2, 1)]),
    ("4_Hp", &[(0, 1, 0), (2, 3, 0), (1, 2, 1), (0, 2, 2), (1, 3, 2)], &[(0, 1), (3, 1)]),
];

/// A table cell: type graph id, degree/size multiplier, minimum `n`.
type Cell = (TwoColourId, usize, usize);

/// Rows of the `T0` (vertex) and `T2` (face) property tables for 4-orbit maps.
#[rustfmt::skip]
const TABLES: [(&str, &[Cell], &[Cell]); 22] = [
    ("4_A",  &[(FourB, 4, 1)],                               &[(TwoB, 2, 2), (TwoB, 2, 2)]),
    ("4_Ad", &[(TwoB, 2, 2), (TwoB, 2, 2)],                  &[(FourB, 4, 1)]),
    ("4_Ap", &[(FourB, 4, 1)],                               &[(FourB, 4, 1)]),
    ("4_B",  &[(FourC, 4, 1)],                               &[(TwoB, 2, 2), (OneA, 1, 3), (OneA, 1, 3)]),
    ("4_Bd", &[(TwoB, 2, 2), (OneA, 1, 3), (OneA, 1, 3)],    &[(FourC, 4, 1)]),
    ("4_Bp", &[(FourC, 4, 1)],                               &[(FourC, 4, 1)]),
    ("4_C",  &[(FourA, 2, 2)],                               &[(TwoB, 2, 2), (TwoB, 2, 2)]),
    ("4_Cd", &[(TwoB, 2, 2), (TwoB, 2, 2)],                  &[(FourA, 2, 2)]),
    ("4_Cp", &[(FourA, 2, 2)],                               &[(FourA, 2, 2)]),
    ("4_D",  &[(ThreeA, 3, 1), (OneA, 1, 3)],                &[(FourC, 4, 1)]),
    ("4_Dd", &[(FourC, 4, 1)],                               &[(ThreeA, 3, 1), (OneA, 1, 3)]),
    ("4_Dp", &[(ThreeA, 3, 1), (OneA, 1, 3)],                &[(ThreeA, 3, 1), (OneA, 1, 3)]),
    ("4_E",  &[(FourB, 4, 1)],                               &[(FourA, 2, 2)]),
    ("4_Ed", &[(FourA, 2, 2)],                               &[(FourB, 4, 1)]),
    ("4_Ep", &[(FourB, 4, 1)],                               &[(FourB, 4, 1)]),
    ("4_F",  &[(TwoA, 2, 2), (TwoA, 2, 2)],                  &[(TwoA, 2, 2), (TwoA, 2, 2)]),
    ("4_G",  &[(FourA, 2, 2)],                               &[(TwoC, 1, 3), (TwoC, 1, 3)]),
    ("4_Gd", &[(TwoC, 1, 3), (TwoC, 1, 3)],                  &[(FourA, 2, 2)]),
    ("4_Gp", &[(FourA, 2, 2)],                               &[(FourA, 2, 2)]),
    ("4_H",  &[(FourC, 4, 1)],                               &[(TwoC, 1, 3), (TwoA, 2, 2)]),
    ("4_Hd", &[(TwoC, 1, 3), (TwoA, 2, 2)],                  &[(FourC, 4, 1)]),
    ("4_Hp", &[(FourC, 4, 1)],                               &[(FourC, 4, 1)]),
];

/// One of the 22 symmetry type graphs of 4-orbit maps.
#[derive(Clone, Debug)]
pub struct TypeGraphEntry {
    pub name: &'static str,
    pub pregraph: Pregraph,
    /// Sorted multiset of the `T0` component types (vertex table row).
    pub t0_fingerprint: Vec<TwoColourId>,
    /// Sorted multiset of the `T2` component types (face table row).
    pub t2_fingerprint: Vec<TwoColourId>,
    pub code: CanonicalCode,
}

impl TypeGraphEntry {
    /// Name of the entry whose pregraph is this one with colours 0 and 2
    /// exchanged.
    pub fn dual_name(&self) -> String {
        dual_name(self.name)
    }
}

/// `4_X <-> 4_Xd`; `4_Xp` and `4_F` are self-dual.
pub fn dual_name(name: &str) -> String {
    if name == "4_F" || name.ends_with('p') {
        name.to_string()
    } else if let Some(base) = name.strip_suffix('d') {
        base.to_string()
    } else {
        format!("{name}d")
    }
}

/// `4_X <-> 4_Xp`; `4_Xd` and `4_F` are fixed.
pub fn petrie_name(name: &str) -> String {
    if name == "4_F" || name.ends_with('d') {
        name.to_string()
    } else if let Some(base) = name.strip_suffix('p') {
        base.to_string()
    } else {
        format!("{name}p")
    }
}

/// The Petrie operation on a type graph: colour 0 becomes `s0 s2`. Needs all
/// three colours present everywhere and commuting colours 0 and 2.
pub fn petrie(p: &Pregraph) -> Result<Pregraph> {
    let (Some(s0), Some(s1), Some(s2)) = (p.involution(0), p.involution(1), p.involution(2)) else {
        return Err(Error::Input("petrie needs every colour at every vertex".into()));
    };
    let s02: Vec<usize> = (0..p.n_vertices()).map(|v| s2[s0[v]]).collect();
    Pregraph::from_involutions(p.n_vertices(), [Some(&s02), Some(&s1), Some(&s2)])
}

fn fingerprint(family: Family, graph: &Pregraph) -> Result<Vec<TwoColourId>> {
    let removed = match family {
        Family::Vertex => 0,
        Family::Face => 2,
    };
    let mut ids = graph
        .delete_colour(removed)?
        .components()
        .iter()
        .map(|c| classify_shape(family, &c.graph))
        .collect::<Result<Vec<_>>>()?;
    ids.sort_unstable();
    Ok(ids)
}

pub struct Catalog {
    entries: Vec<TypeGraphEntry>,
}

impl Catalog {
    pub fn entries(&self) -> &[TypeGraphEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&TypeGraphEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn find(&self, pregraph: &Pregraph) -> Option<&TypeGraphEntry> {
        let code = pregraph.canonical_code();
        self.entries.iter().find(|e| e.code == code)
    }

    /// Other entries with the same `(T0, T2)` fingerprints; these are told
    /// apart by the pregraph itself, not by the tables.
    pub fn shares_fingerprint_with(&self, name: &str) -> Vec<&'static str> {
        let Some(entry) = self.get(name) else { return vec![] };
        self.entries
            .iter()
            .filter(|e| {
                e.name != name && e.t0_fingerprint == entry.t0_fingerprint && e.t2_fingerprint == entry.t2_fingerprint
            })
            .map(|e| e.name)
            .collect()
    }
}

fn build_catalog() -> std::result::Result<Catalog, Vec<String>> {
    let mut problems = Vec::new();
    let mut entries = Vec::new();
    for ((name, edges, semi), (table_name, t0_row, t2_row)) in FIGURE.iter().zip(TABLES.iter()) {
        if name != table_name {
            problems.push(format!("figure entry {name} lines up with table row {table_name}"));
            continue;
        }
        let pregraph = match Pregraph::from_parts(4, edges, semi) {
            Ok(p) => p,
            Err(e) => {
                problems.push(format!("{name}: {e}"));
                continue;
            }
        };
        if !pregraph.has_exactly_colours(&[0, 1, 2]) || !pregraph.is_connected() {
            problems.push(format!("{name}: not a connected cubic pregraph"));
        }
        for (family, row) in [(Family::Vertex, t0_row), (Family::Face, t2_row)] {
            for &(id, mult, min_n) in row.iter() {
                if id.formula() != (SizeFormula { multiplier: mult, min_n }) {
                    problems.push(format!(
                        "{name}: row cell {} ({mult}n, n >= {min_n}) disagrees with the {} table",
                        family.label(id),
                        family.prefix()
                    ));
                }
            }
        }
        let mut t0_fingerprint: Vec<TwoColourId> = t0_row.iter().map(|c| c.0).collect();
        let mut t2_fingerprint: Vec<TwoColourId> = t2_row.iter().map(|c| c.0).collect();
        t0_fingerprint.sort_unstable();
        t2_fingerprint.sort_unstable();
        match fingerprint(Family::Vertex, &pregraph) {
            Ok(fp) if fp == t0_fingerprint => {}
            Ok(fp) => problems.push(format!("{name}: T0 is {fp:?}, table says {t0_fingerprint:?}")),
            Err(e) => problems.push(format!("{name}: T0: {e}")),
        }
        match fingerprint(Family::Face, &pregraph) {
            Ok(fp) if fp == t2_fingerprint => {}
            Ok(fp) => problems.push(format!("{name}: T2 is {fp:?}, table says {t2_fingerprint:?}")),
            Err(e) => problems.push(format!("{name}: T2: {e}")),
        }
        let code = pregraph.canonical_code();
        entries.push(TypeGraphEntry { name, pregraph, t0_fingerprint, t2_fingerprint, code });
    }

    let mut by_code: BTreeMap<&CanonicalCode, &str> = BTreeMap::new();
    for e in &entries {
        if let Some(other) = by_code.insert(&e.code, e.name) {
            problems.push(format!("{} and {other} are isomorphic", e.name));
        }
    }
    let lookup = |p: &Pregraph| {
        let code = p.canonical_code();
        entries.iter().find(|e| e.code == code).map(|e| e.name)
    };
    for e in &entries {
        let dual = e.pregraph.swap_colours(0, 2).expect("valid colours");
        if lookup(&dual) != Some(&dual_name(e.name)) {
            problems.push(format!("dual of {} is {:?}, expected {}", e.name, lookup(&dual), dual_name(e.name)));
        }
        match petrie(&e.pregraph) {
            Ok(p) if lookup(&p) == Some(&petrie_name(e.name)) => {}
            Ok(p) => {
                problems.push(format!("petrial of {} is {:?}, expected {}", e.name, lookup(&p), petrie_name(e.name)))
            }
            Err(err) => problems.push(format!("petrial of {}: {err}", e.name)),
        }
    }
    if problems.is_empty() {
        Ok(Catalog { entries })
    } else {
        Err(problems)
    }
}

/// Re-runs every consistency check on the embedded data.
pub fn self_check() -> std::result::Result<(), Vec<String>> {
    build_catalog().map(|_| ())
}

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| match build_catalog() {
        Ok(c) => c,
        Err(problems) => panic!("embedded 4-orbit catalog is inconsistent:\n  {}", problems.join("\n  ")),
    })
}

/// The catalog entry isomorphic to the symmetry type graph of a 4-orbit map.
pub fn classify_4orbit(fs: &FlagSystem) -> Result<&'static TypeGraphEntry> {
    let sym = Symmetry::new(fs)?;
    classify_symmetry(&sym)
}

pub fn classify_symmetry(sym: &Symmetry<'_>) -> Result<&'static TypeGraphEntry> {
    if sym.k() != 4 {
        return Err(Error::WrongOrbitCount { k: sym.k() });
    }
    catalog()
        .find(&sym.type_graph)
        .ok_or_else(|| Error::Internal(format!("4-orbit type graph matches no catalog entry: {}", sym.type_graph)))
}

/// One vertex or face whose data breaks its table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableViolation {
    pub what: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementCheck {
    pub element: usize,
    pub type_id: String,
    pub size: usize,
    pub characteristic: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheckReport {
    pub type_name: &'static str,
    pub vertices: Vec<ElementCheck>,
    pub faces: Vec<ElementCheck>,
    pub t0_components: Vec<TwoColourId>,
    pub t2_components: Vec<TwoColourId>,
    pub violations: Vec<String>,
}

impl TableCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every vertex and face of a 4-orbit map against the vertex/face
/// tables and the map's `T0`/`T2` against its catalog row. Any violation
/// points at a bug, not at unusual data.
pub fn verify_against_tables(fs: &FlagSystem) -> Result<TableCheckReport> {
    let sym = Symmetry::new(fs)?;
    let entry = classify_symmetry(&sym)?;
    let assignment = sym.assignment()?;
    let mut violations = Vec::new();

    let mut component_types = |family: Family, comps: &[crate::pregraph::Component]| {
        let mut ids = Vec::new();
        for (i, c) in comps.iter().enumerate() {
            match classify_shape(family, &c.graph) {
                Ok(id) => ids.push(id),
                Err(_) => violations.push(format!("{} component {i} matches no shape", family.prefix())),
            }
        }
        ids.sort_unstable();
        ids
    };
    let t0_components = component_types(Family::Vertex, &sym.t0_components);
    let t2_components = component_types(Family::Face, &sym.t2_components);
    if t0_components != entry.t0_fingerprint {
        violations.push(format!("T0 components {t0_components:?} differ from row {:?}", entry.t0_fingerprint));
    }
    if t2_components != entry.t2_fingerprint {
        violations.push(format!("T2 components {t2_components:?} differ from row {:?}", entry.t2_fingerprint));
    }

    let mut check = |family: Family, records: &[crate::symmetry::ElementRecord]| {
        let mut out = Vec::new();
        let mut per_component: BTreeMap<usize, (usize, crate::symmetry::CharacteristicSystem)> = BTreeMap::new();
        let (c1, c2) = family.table_colours();
        for r in records {
            let mut ok = true;
            let label = match r.type_id {
                Some(id) => {
                    let row = table_lookup(family, id);
                    if !row.formula.admits(r.size) {
                        ok = false;
                        violations.push(format!(
                            "{} {} has size {} but {} requires {}",
                            family.prefix(),
                            r.element,
                            r.size,
                            family.label(id),
                            row.formula
                        ));
                    }
                    family.label(id)
                }
                None => {
                    ok = false;
                    violations.push(format!("{} {} has no type graph", family.prefix(), r.element));
                    "?".to_string()
                }
            };
            let cs = r.characteristic;
            if cs.cycle_length != 2 * r.size || (cs.first_colour, cs.second_colour) != (c1, c2) {
                ok = false;
                violations.push(format!("{} {}: characteristic {cs} inconsistent", family.prefix(), r.element));
            }
            match per_component.get(&r.component) {
                Some(&(size, prev)) if size != r.size || prev != cs => {
                    ok = false;
                    violations.push(format!(
                        "{} {}: size {} differs from {} in the same component",
                        family.prefix(),
                        r.element,
                        r.size,
                        size
                    ));
                }
                Some(_) => {}
                None => {
                    per_component.insert(r.component, (r.size, cs));
                }
            }
            out.push(ElementCheck {
                element: r.element,
                type_id: label,
                size: r.size,
                characteristic: cs.to_string(),
                ok,
            });
        }
        out
    };
    let vertices = check(Family::Vertex, &assignment.vertices);
    let faces = check(Family::Face, &assignment.faces);
    Ok(TableCheckReport { type_name: entry.name, vertices, faces, t0_components, t2_components, violations })
}

/// Every fixed-point-free-or-not involution on `0..k`.
fn involutions(k: usize) -> Vec<Vec<usize>> {
    fn rec(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        if p[i] != usize::MAX {
            return rec(p, i + 1, out);
        }
        p[i] = i;
        rec(p, i + 1, out);
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                rec(p, i + 1, out);
                p[j] = usize::MAX;
            }
        }
        p[i] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; k], 0, &mut out);
    out
}

pub const MAX_CANDIDATE_K: usize = 6;

/// All connected pregraphs on `k` vertices with one incidence of each colour
/// per vertex whose {0,2}-components are quotients of an alternating 4-cycle,
/// up to isomorphism, in canonical form and sorted by canonical code.
///
/// For two involutions on the vertex set, "every component of their union is
/// a quotient of the alternating 4-cycle" is the same as "they commute".
pub fn enumerate_candidates(k: usize) -> Result<Vec<Pregraph>> {
    if !(1..=MAX_CANDIDATE_K).contains(&k) {
        return Err(Error::Input(format!("k must be between 1 and {MAX_CANDIDATE_K}, got {k}")));
    }
    let invs = involutions(k);
    let mut found: BTreeMap<CanonicalCode, Pregraph> = BTreeMap::new();
    for s0 in &invs {
        for s2 in &invs {
            if (0..k).any(|v| s0[s2[v]] != s2[s0[v]]) {
                continue;
            }
            for s1 in &invs {
                let p = Pregraph::from_involutions(k, [Some(s0), Some(s1), Some(s2)])?;
                if !p.is_connected() {
                    continue;
                }
                let code = p.canonical_code();
                found.entry(code).or_insert(p);
            }
        }
    }
    Ok(found.into_values().map(|p| p.canonical_form()).collect())
}

/// Candidates matched against the catalog (meaningful for `k = 4`).
#[derive(Clone, Debug)]
pub struct CandidateMatch {
    pub matched: Vec<(&'static str, Pregraph)>,
    pub unmatched: Vec<Pregraph>,
}

pub fn match_candidates(k: usize) -> Result<CandidateMatch> {
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    for p in enumerate_candidates(k)? {
        match catalog().find(&p) {
            Some(e) if k == 4 => matched.push((e.name, p)),
            _ => unmatched.push(p),
        }
    }
    Ok(CandidateMatch { matched, unmatched })
}
