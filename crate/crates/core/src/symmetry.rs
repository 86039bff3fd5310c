//! Automorphism group, flag orbits, the symmetry type graph and the
//! vertex/face type graphs derived from it.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::catalog::{self, Family, TwoColourId};
use crate::error::{Error, Result};
use crate::flagsys::{FlagSystem, MapElements, OrbitPartition};
use crate::perm::Permutation;
use crate::pregraph::{Colour, Component, Pregraph, Slot};

/// The automorphisms of a map: flag permutations commuting with `s0`, `s1`
/// and `s2`. Elements are sorted by the image of flag 0; since the action is
/// free that image identifies the element.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// The element sending flag 0 to `target`, if any.
    pub fn by_image_of_base(&self, target: usize) -> Option<&Permutation> {
        self.elements.binary_search_by_key(&target, |g| g.apply(0)).ok().map(|i| &self.elements[i])
    }
}

/// Propagates `0 -> target` along the flag graph. An automorphism is fixed by
/// the image of one flag, so this either yields it or hits a contradiction.
fn extend_from_base(fs: &FlagSystem, target: usize) -> Option<Permutation> {
    let n = fs.n_flags();
    let mut image = vec![usize::MAX; n];
    image[0] = target;
    let mut stack = vec![0];
    while let Some(f) = stack.pop() {
        for j in 0..3u8 {
            let g = fs.adj(j, f);
            let want = fs.adj(j, image[f]);
            if image[g] == usize::MAX {
                image[g] = want;
                stack.push(g);
            } else if image[g] != want {
                return None;
            }
        }
    }
    // transitivity guarantees every flag was reached; a consistent map that
    // commutes with the generators is then onto, hence a bijection
    Permutation::new(image).ok()
}

pub fn automorphisms(fs: &FlagSystem) -> Result<AutomorphismGroup> {
    fs.ensure_valid()?;
    Ok(automorphisms_unchecked(fs))
}

pub(crate) fn automorphisms_unchecked(fs: &FlagSystem) -> AutomorphismGroup {
    let elements = (0..fs.n_flags()).filter_map(|t| extend_from_base(fs, t)).collect();
    AutomorphismGroup { elements }
}

fn orbits_of_group(n: usize, group: &AutomorphismGroup) -> OrbitPartition {
    let labels: Vec<usize> = (0..n).map(|f| group.elements.iter().map(|g| g.apply(f)).min().unwrap_or(f)).collect();
    OrbitPartition::from_labels(&labels)
}

/// Orbits of the automorphism group on flags.
pub fn flag_orbits(fs: &FlagSystem) -> Result<OrbitPartition> {
    let group = automorphisms(fs)?;
    Ok(orbits_of_group(fs.n_flags(), &group))
}

/// The `k` of a k-orbit map.
pub fn orbit_count(fs: &FlagSystem) -> Result<usize> {
    Ok(flag_orbits(fs)?.orbit_count())
}

/// Quotient of the flag graph by a partition that the generators permute
/// blockwise. A colour that maps a block to itself becomes a semi-edge.
pub fn quotient(fs: &FlagSystem, blocks: &OrbitPartition) -> Result<Pregraph> {
    let mut p = Pregraph::new(blocks.orbit_count());
    for (b, flags) in blocks.orbits().enumerate() {
        for j in 0..3u8 {
            let target = blocks.orbit_of(fs.adj(j, flags[0]));
            if flags.iter().any(|&f| blocks.orbit_of(fs.adj(j, f)) != target) {
                return Err(Error::Internal(format!(
                    "s{j} splits block {b}; partition is not compatible with the flag graph"
                )));
            }
            let wanted = if target == b { Slot::Semi } else { Slot::Edge(target) };
            match p.slot(b, j) {
                Slot::Absent if target == b => p.add_semi_edge(b, j)?,
                Slot::Absent => p.add_edge(b, target, j)?,
                existing if existing == wanted => {}
                _ => return Err(Error::Internal(format!("conflicting s{j} image for block {b}"))),
            }
        }
    }
    Ok(p)
}

pub fn symmetry_type_graph(fs: &FlagSystem) -> Result<Pregraph> {
    Ok(Symmetry::new(fs)?.type_graph)
}

/// `T(M)` with every incidence of `removed` deleted: `T0(M)` for 0, `T2(M)` for 2.
pub fn colour_deleted(fs: &FlagSystem, removed: Colour) -> Result<Pregraph> {
    if removed > 2 {
        return Err(Error::BadColour(removed));
    }
    symmetry_type_graph(fs)?.delete_colour(removed)
}

/// The triplet (cycle length, first colour, second colour) of the flag cycle
/// around a vertex (colours 1, 2) or a face (colours 0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CharacteristicSystem {
    pub cycle_length: usize,
    pub first_colour: Colour,
    pub second_colour: Colour,
}

impl fmt::Display for CharacteristicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},k{},k{})", self.cycle_length, self.first_colour, self.second_colour)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

/// The quotient of one element's flag cycle by the automorphism orbits, and
/// the component of `T0`/`T2` it lives in.
#[derive(Clone, Debug)]
pub struct ElementTypeGraph {
    /// Quotient of the cycle; local vertex `i` is the flag orbit `orbits[i]`.
    pub quotient: Pregraph,
    pub orbits: Vec<usize>,
    /// Index into the components of `T0` (vertices) or `T2` (faces).
    pub component_index: usize,
    pub component: Component,
    /// `None` when the component is none of the eight catalog shapes, which
    /// only happens for maps with more than four flag orbits.
    pub type_id: Option<TwoColourId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRecord {
    pub element: usize,
    pub component: usize,
    pub type_id: Option<TwoColourId>,
    /// Degree of a vertex or size of a face.
    pub size: usize,
    pub characteristic: CharacteristicSystem,
}

/// Type graph, degree/size and characteristic system of every vertex and face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementTypeAssignment {
    pub vertices: Vec<ElementRecord>,
    pub faces: Vec<ElementRecord>,
}

/// Everything symmetry-related about one map, computed once.
#[derive(Clone, Debug)]
pub struct Symmetry<'a> {
    pub fs: &'a FlagSystem,
    pub group: AutomorphismGroup,
    pub orbits: OrbitPartition,
    pub elements: MapElements,
    pub type_graph: Pregraph,
    pub t0_components: Vec<Component>,
    pub t2_components: Vec<Component>,
    t0_component_of: Vec<usize>,
    t2_component_of: Vec<usize>,
}

fn component_lookup(n: usize, comps: &[Component]) -> Vec<usize> {
    let mut of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in &c.vertices {
            of[v] = i;
        }
    }
    of
}

impl<'a> Symmetry<'a> {
    pub fn new(fs: &'a FlagSystem) -> Result<Self> {
        fs.ensure_valid()?;
        let group = automorphisms_unchecked(fs);
        let orbits = orbits_of_group(fs.n_flags(), &group);
        let type_graph = quotient(fs, &orbits)?;
        let t0_components = type_graph.delete_colour(0)?.components();
        let t2_components = type_graph.delete_colour(2)?.components();
        let k = orbits.orbit_count();
        Ok(Symmetry {
            fs,
            elements: fs.elements_unchecked(),
            t0_component_of: component_lookup(k, &t0_components),
            t2_component_of: component_lookup(k, &t2_components),
            group,
            orbits,
            type_graph,
            t0_components,
            t2_components,
        })
    }

    pub fn k(&self) -> usize {
        self.orbits.orbit_count()
    }

    pub fn t0(&self) -> Pregraph {
        self.type_graph.delete_colour(0).expect("colour 0 is valid")
    }

    pub fn t2(&self) -> Pregraph {
        self.type_graph.delete_colour(2).expect("colour 2 is valid")
    }

    fn cycle_type_graph(&self, cycle: &[usize], family: Family) -> Result<ElementTypeGraph> {
        let (x, y) = family.colours();
        let mut local: HashMap<usize, usize> = HashMap::new();
        let mut orbits = Vec::new();
        for &f in cycle {
            let o = self.orbits.orbit_of(f);
            local.entry(o).or_insert_with(|| {
                orbits.push(o);
                orbits.len() - 1
            });
        }
        let mut quotient = Pregraph::new(orbits.len());
        for &f in cycle {
            let a = local[&self.orbits.orbit_of(f)];
            for c in [x, y] {
                let b = local[&self.orbits.orbit_of(self.fs.adj(c, f))];
                let wanted = if a == b { Slot::Semi } else { Slot::Edge(b) };
                match quotient.slot(a, c) {
                    Slot::Absent if a == b => quotient.add_semi_edge(a, c)?,
                    Slot::Absent => quotient.add_edge(a, b, c)?,
                    s if s == wanted => {}
                    _ => return Err(Error::Internal("inconsistent cycle quotient".into())),
                }
            }
        }
        let (lookup, comps) = match family {
            Family::Vertex => (&self.t0_component_of, &self.t0_components),
            Family::Face => (&self.t2_component_of, &self.t2_components),
        };
        let component_index = lookup[orbits[0]];
        let component = comps[component_index].clone();
        let type_id = catalog::classify_shape(family, &component.graph).ok();
        Ok(ElementTypeGraph { quotient, orbits, component_index, component, type_id })
    }

    pub fn vertex_type_graph(&self, vertex: usize) -> Result<ElementTypeGraph> {
        if vertex >= self.elements.vertices.orbit_count() {
            return Err(Error::Input(format!("no vertex {vertex}")));
        }
        self.cycle_type_graph(self.elements.vertices.members(vertex), Family::Vertex)
    }

    pub fn face_type_graph(&self, face: usize) -> Result<ElementTypeGraph> {
        if face >= self.elements.faces.orbit_count() {
            return Err(Error::Input(format!("no face {face}")));
        }
        self.cycle_type_graph(self.elements.faces.members(face), Family::Face)
    }

    pub fn characteristic_system(&self, element: Element) -> Result<CharacteristicSystem> {
        let (len, family) = match element {
            Element::Vertex(v) if v < self.elements.vertices.orbit_count() => {
                (self.elements.vertices.members(v).len(), Family::Vertex)
            }
            Element::Face(f) if f < self.elements.faces.orbit_count() => {
                (self.elements.faces.members(f).len(), Family::Face)
            }
            other => return Err(Error::Input(format!("no such element: {other:?}"))),
        };
        let (first_colour, second_colour) = family.table_colours();
        Ok(CharacteristicSystem { cycle_length: len, first_colour, second_colour })
    }

    pub fn assignment(&self) -> Result<ElementTypeAssignment> {
        let vertices = (0..self.elements.vertices.orbit_count())
            .map(|v| {
                let tg = self.vertex_type_graph(v)?;
                Ok(ElementRecord {
                    element: v,
                    component: tg.component_index,
                    type_id: tg.type_id,
                    size: self.elements.degree(v),
                    characteristic: self.characteristic_system(Element::Vertex(v))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let faces = (0..self.elements.faces.orbit_count())
            .map(|f| {
                let tg = self.face_type_graph(f)?;
                Ok(ElementRecord {
                    element: f,
                    component: tg.component_index,
                    type_id: tg.type_id,
                    size: self.elements.face_size(f),
                    characteristic: self.characteristic_system(Element::Face(f))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ElementTypeAssignment { vertices, faces })
    }
}

pub fn vertex_type_graph(fs: &FlagSystem, vertex: usize) -> Result<ElementTypeGraph> {
    Symmetry::new(fs)?.vertex_type_graph(vertex)
}

pub fn face_type_graph(fs: &FlagSystem, face: usize) -> Result<ElementTypeGraph> {
    Symmetry::new(fs)?.face_type_graph(face)
}

pub fn characteristic_system(fs: &FlagSystem, element: Element) -> Result<CharacteristicSystem> {
    Symmetry::new(fs)?.characteristic_system(element)
}
