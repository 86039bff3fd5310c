#![allow(dead_code)]

use itertools::Itertools;
use mapsym_core::generators::{
    antiprism, medial, platonic, prism, pyramid, torus_grid, truncation, twisted_torus_grid, PLATONIC_NAMES,
};
use mapsym_core::{FlagSystem, Pregraph};

/// A semi-edge: vertex, and whether it carries colour `y` rather than `x`.
type Semi = (usize, bool);

pub struct NamedMap {
    pub name: String,
    pub fs: FlagSystem,
}

fn named(name: impl Into<String>, fs: FlagSystem) -> NamedMap {
    NamedMap { name: name.into(), fs }
}

/// Platonic solids, prisms and antiprisms 3..=8, torus grids up to 6x6.
pub fn base_maps() -> Vec<NamedMap> {
    let mut out = Vec::new();
    for name in PLATONIC_NAMES {
        out.push(named(name, platonic(name).unwrap()));
    }
    for n in 3..=8 {
        out.push(named(format!("prism({n})"), prism(n).unwrap()));
        out.push(named(format!("antiprism({n})"), antiprism(n).unwrap()));
    }
    for rows in 3..=6 {
        for cols in 3..=6 {
            out.push(named(format!("torus({rows}x{cols})"), torus_grid(rows, cols).unwrap()));
        }
    }
    out
}

/// The base maps together with their medials and truncations.
pub fn operated_maps() -> Vec<NamedMap> {
    let mut out = Vec::new();
    for m in base_maps() {
        out.push(named(format!("medial({})", m.name), medial(&m.fs).unwrap()));
        out.push(named(format!("truncation({})", m.name), truncation(&m.fs).unwrap()));
        out.push(m);
    }
    out
}

/// Maps built to land in several 4-orbit classes: pyramids, antiprisms and
/// twisted torus grids, each with its dual, Petrie dual and their mixes.
pub fn four_orbit_sources() -> Vec<NamedMap> {
    let mut seeds = Vec::new();
    for n in 4..=8 {
        seeds.push(named(format!("pyramid({n})"), pyramid(n).unwrap()));
        seeds.push(named(format!("antiprism({n})"), antiprism(n).unwrap()));
    }
    for (r, c, s) in [(3, 3, 1), (3, 4, 1), (4, 3, 2), (3, 5, 2), (4, 5, 3), (5, 4, 1)] {
        seeds.push(named(format!("twisted({r}x{c}+{s})"), twisted_torus_grid(r, c, s).unwrap()));
    }
    let mut out = Vec::new();
    for m in seeds {
        let d = m.fs.dual();
        let p = m.fs.petrie_dual();
        out.push(named(format!("dual({})", m.name), d.clone()));
        out.push(named(format!("petrie({})", m.name), p.clone()));
        out.push(named(format!("dual(petrie({}))", m.name), p.dual()));
        out.push(named(format!("petrie(dual({}))", m.name), d.petrie_dual()));
        out.push(m);
    }
    out
}

pub fn all_maps() -> Vec<NamedMap> {
    let mut out = operated_maps();
    out.extend(four_orbit_sources());
    out
}

/// Every automorphism, by filtering all `n!` flag permutations.
pub fn brute_automorphisms(fs: &FlagSystem) -> Vec<Vec<usize>> {
    let n = fs.n_flags();
    let s: Vec<&[usize]> = (0..3).map(|j| fs.generator(j).images()).collect();
    (0..n).permutations(n).filter(|p| s.iter().all(|sj| (0..n).all(|i| p[sj[i]] == sj[p[i]]))).collect()
}

/// Colour-preserving isomorphism by trying every vertex bijection.
pub fn brute_isomorphic(a: &Pregraph, b: &Pregraph) -> bool {
    let n = a.n_vertices();
    if n != b.n_vertices() {
        return false;
    }
    (0..n).permutations(n).any(|p| a.relabel(&p) == *b)
}

/// The eight two-colour shapes, rebuilt from their verbal description:
/// `(vertices, edges (u, v, is_x), semi-edges (v, is_x))`.
pub fn shape(id: &str, x: u8, y: u8) -> Pregraph {
    let col = |is_x: bool| if is_x { x } else { y };
    let (n, edges, semi): (usize, Vec<(usize, usize, bool)>, Vec<Semi>) = match id {
        "1a" => (1, vec![], vec![(0, true), (0, false)]),
        "2a" => (2, vec![(0, 1, false)], vec![(0, true), (1, true)]),
        "2b" => (2, vec![(0, 1, true)], vec![(0, false), (1, false)]),
        "2c" => (2, vec![(0, 1, true), (0, 1, false)], vec![]),
        "3a" => (3, vec![(0, 1, false), (1, 2, true)], vec![(0, true), (2, false)]),
        "4a" => (4, vec![(0, 1, true), (1, 2, false), (2, 3, true), (3, 0, false)], vec![]),
        "4b" => (4, vec![(0, 1, true), (1, 2, false), (2, 3, true)], vec![(0, false), (3, false)]),
        "4c" => (4, vec![(0, 1, false), (1, 2, true), (2, 3, false)], vec![(0, true), (3, true)]),
        other => panic!("no shape {other}"),
    };
    let edges: Vec<_> = edges.into_iter().map(|(u, v, b)| (u, v, col(b))).collect();
    let semi: Vec<_> = semi.into_iter().map(|(v, b)| (v, col(b))).collect();
    Pregraph::from_parts(n, &edges, &semi).unwrap()
}

pub const SHAPE_IDS: [&str; 8] = ["1a", "2a", "2b", "2c", "3a", "4a", "4b", "4c"];

/// Which shape `p` is, by brute-force isomorphism; vertex family uses
/// colours (1, 2), face family (1, 0).
pub fn brute_shape(p: &Pregraph, vertex_family: bool) -> Option<&'static str> {
    let (x, y) = if vertex_family { (1, 2) } else { (1, 0) };
    SHAPE_IDS.into_iter().find(|id| brute_isomorphic(p, &shape(id, x, y)))
}
