//! Concrete maps: solids, prisms, antiprisms, torus grids, the medial and
//! truncation operations, and a brute-force census of small flag systems.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flagsys::FlagSystem;
use crate::perm::Permutation;

/// A face, a position on its boundary, and whether the edge runs backwards.
type EdgeSide = (usize, usize, bool);

/// A map given by its vertex count and face boundary cycles.
///
/// Edges are the unordered vertex pairs of consecutive cycle entries; each
/// must be traversed exactly twice in total. The two traversals may run in
/// opposite directions (orientable gluing) or the same direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedronSpec {
    pub n_vertices: usize,
    pub faces: Vec<Vec<usize>>,
}

impl PolyhedronSpec {
    pub fn new(n_vertices: usize, faces: Vec<Vec<usize>>) -> Self {
        PolyhedronSpec { n_vertices, faces }
    }

    /// The distinct edges, as sorted vertex pairs in first-seen order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for face in &self.faces {
            for i in 0..face.len() {
                let e = ordered(face[i], face[(i + 1) % face.len()]);
                if seen.insert(e, ()).is_none() {
                    out.push(e);
                }
            }
        }
        out
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Builds the flag system of a map from its face cycles.
///
/// Face `f` with cycle `v_0 … v_{m-1}` contributes flags `(f, i, end)` for
/// the side `v_i v_{i+1}`, where `end = 0` sits at `v_i` and `end = 1` at
/// `v_{i+1}`. `s0` swaps the ends of a side, `s1` moves to the neighbouring
/// side of the same face at the same vertex, and `s2` moves to the other
/// traversal of the same edge at the same vertex.
pub fn from_face_cycles(spec: &PolyhedronSpec) -> Result<FlagSystem> {
    if spec.faces.is_empty() {
        return Err(Error::Input("a map needs at least one face".into()));
    }
    let mut base = Vec::with_capacity(spec.faces.len());
    let mut n = 0;
    for (f, face) in spec.faces.iter().enumerate() {
        if face.len() < 2 {
            return Err(Error::Input(format!("face {f} has fewer than two vertices")));
        }
        if let Some(&v) = face.iter().find(|&&v| v >= spec.n_vertices) {
            return Err(Error::Input(format!("face {f} uses vertex {v}, but there are only {}", spec.n_vertices)));
        }
        base.push(n);
        n += 2 * face.len();
    }
    let flag = |f: usize, i: usize, end: usize| base[f] + 2 * i + end;

    // sides of each edge: (face, position, forward?)
    let mut sides: BTreeMap<(usize, usize), Vec<EdgeSide>> = BTreeMap::new();
    for (f, face) in spec.faces.iter().enumerate() {
        let m = face.len();
        for i in 0..m {
            let (a, b) = (face[i], face[(i + 1) % m]);
            if a == b {
                return Err(Error::Construction { u: a, v: b, reason: "loop".into() });
            }
            sides.entry(ordered(a, b)).or_default().push((f, i, a < b));
        }
    }

    let mut s0 = vec![0; n];
    let mut s1 = vec![0; n];
    let mut s2 = vec![0; n];
    for (f, face) in spec.faces.iter().enumerate() {
        let m = face.len();
        for i in 0..m {
            s0[flag(f, i, 0)] = flag(f, i, 1);
            s0[flag(f, i, 1)] = flag(f, i, 0);
            let next = (i + 1) % m;
            s1[flag(f, i, 1)] = flag(f, next, 0);
            s1[flag(f, next, 0)] = flag(f, i, 1);
        }
    }
    for (&(u, v), uses) in &sides {
        let [(f, i, fwd_a), (g, j, fwd_b)] = uses[..] else {
            return Err(Error::Construction { u, v, reason: format!("lies on {} face sides, expected 2", uses.len()) });
        };
        // end 0 of a side is its smaller vertex when the side runs forward
        for end in 0..2 {
            let other = if fwd_a == fwd_b { end } else { 1 - end };
            s2[flag(f, i, end)] = flag(g, j, other);
            s2[flag(g, j, other)] = flag(f, i, end);
        }
    }

    let fs = FlagSystem::from_images(s0, s1, s2)?;
    let report = fs.validate(false);
    if !report.is_valid() {
        return Err(Error::InvalidFlagSystem(format!("face cycles do not close up into a map: {report}")));
    }
    // every vertex of the spec must be one vertex of the map
    let vertex_of_flag = |fl: usize| {
        let (f, rest) = base.iter().enumerate().rev().find(|&(_, &b)| b <= fl).map(|(f, &b)| (f, fl - b)).unwrap();
        let face = &spec.faces[f];
        let (i, end) = (rest / 2, rest % 2);
        face[(i + end) % face.len()]
    };
    let vertices = fs.orbits_under(&[1, 2]);
    let mut orbit_of_vertex = vec![usize::MAX; spec.n_vertices];
    for (o, members) in vertices.orbits().enumerate() {
        for &fl in members {
            let v = vertex_of_flag(fl);
            if orbit_of_vertex[v] == usize::MAX {
                orbit_of_vertex[v] = o;
            } else if orbit_of_vertex[v] != o {
                return Err(Error::Input(format!("the faces around vertex {v} do not form a single cycle")));
            }
        }
    }
    if let Some(v) = orbit_of_vertex.iter().position(|&o| o == usize::MAX) {
        return Err(Error::Input(format!("vertex {v} lies on no face")));
    }
    Ok(fs)
}

fn faces_map(n_vertices: usize, faces: Vec<Vec<usize>>) -> Result<FlagSystem> {
    from_face_cycles(&PolyhedronSpec::new(n_vertices, faces))
}

pub fn prism(n: usize) -> Result<FlagSystem> {
    if n < 3 {
        return Err(Error::Input(format!("prism needs n >= 3, got {n}")));
    }
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).rev().collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, n + i, n + j, j]);
    }
    faces_map(2 * n, faces)
}

pub fn antiprism(n: usize) -> Result<FlagSystem> {
    if n < 3 {
        return Err(Error::Input(format!("antiprism needs n >= 3, got {n}")));
    }
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).rev().collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, n + i, j]);
        faces.push(vec![j, n + i, n + j]);
    }
    faces_map(2 * n, faces)
}

/// The pyramid over an n-gon; apex is vertex 0.
pub fn pyramid(n: usize) -> Result<FlagSystem> {
    if n < 3 {
        return Err(Error::Input(format!("pyramid needs n >= 3, got {n}")));
    }
    let mut faces = vec![(1..=n).collect::<Vec<_>>()];
    for i in 0..n {
        faces.push(vec![0, 1 + (i + 1) % n, 1 + i]);
    }
    faces_map(n + 1, faces)
}

pub const PLATONIC_NAMES: [&str; 5] = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"];

fn icosahedron() -> Result<FlagSystem> {
    // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), low(i), up(i + 1)]);
        faces.push(vec![up(i + 1), low(i), low(i + 1)]);
        faces.push(vec![low(i), 11, low(i + 1)]);
    }
    faces_map(12, faces)
}

pub fn platonic(name: &str) -> Result<FlagSystem> {
    match name {
        "tetrahedron" => faces_map(4, vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]]),
        "cube" => faces_map(
            8,
            vec![
                vec![0, 1, 3, 2],
                vec![4, 6, 7, 5],
                vec![0, 4, 5, 1],
                vec![2, 3, 7, 6],
                vec![0, 2, 6, 4],
                vec![1, 5, 7, 3],
            ],
        ),
        "octahedron" => {
            // opposite pairs {0,1}, {2,3}, {4,5}; one face per choice of sides
            let mut faces = Vec::new();
            for a in 0..2 {
                for b in 2..4 {
                    for c in 4..6 {
                        faces.push(vec![a, b, c]);
                    }
                }
            }
            faces_map(6, faces)
        }
        "icosahedron" => icosahedron(),
        "dodecahedron" => Ok(icosahedron()?.dual()),
        other => Err(Error::Input(format!("unknown solid {other:?}, expected one of {}", PLATONIC_NAMES.join(", ")))),
    }
}

/// The `rows × cols` square grid on the torus. With `rows = cols` the map
/// is regular (one flag orbit); otherwise it has two.
pub fn torus_grid(rows: usize, cols: usize) -> Result<FlagSystem> {
    twisted_torus_grid(rows, cols, 0)
}

/// A `rows × cols` square grid on the torus whose top row is glued to the
/// bottom row after a shift of `shift` columns. `shift = 0` is `torus_grid`.
pub fn twisted_torus_grid(rows: usize, cols: usize, shift: usize) -> Result<FlagSystem> {
    if rows < 3 || cols < 3 {
        return Err(Error::Input(format!("torus grid needs rows, cols >= 3, got {rows}x{cols}")));
    }
    if shift >= cols {
        return Err(Error::Input(format!("shift must be below cols = {cols}, got {shift}")));
    }
    let at = |r: usize, c: usize| (r % rows) * cols + (c + (r / rows) * shift) % cols;
    let mut faces = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            faces.push(vec![at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)]);
        }
    }
    faces_map(rows * cols, faces)
}

/// Flags `start · w^i` for `i = 0, 1, …` until the walk returns to `start`.
fn cycle(fs: &FlagSystem, start: usize, word: [u8; 2]) -> Vec<usize> {
    let mut out = vec![start];
    let mut f = fs.walk(start, &word);
    while f != start {
        out.push(f);
        f = fs.walk(f, &word);
    }
    out
}

fn one_flag_per_orbit(p: &crate::flagsys::OrbitPartition) -> Vec<usize> {
    p.orbits().map(|o| o[0]).collect()
}

/// The medial map: one vertex per edge, one face per vertex and per face.
pub fn medial(fs: &FlagSystem) -> Result<FlagSystem> {
    fs.ensure_strict()?;
    let el = fs.elements_unchecked();
    let edge = |f: usize| el.edges.orbit_of(f);
    let mut faces = Vec::new();
    for start in one_flag_per_orbit(&el.vertices) {
        faces.push(cycle(fs, start, [1, 2]).into_iter().map(edge).collect());
    }
    for start in one_flag_per_orbit(&el.faces) {
        faces.push(cycle(fs, start, [0, 1]).into_iter().map(edge).collect());
    }
    faces_map(el.edges.orbit_count(), faces)
}

/// The truncated map: one vertex per (vertex, incident edge) pair, the
/// original faces with doubled boundaries, and one new face per vertex.
pub fn truncation(fs: &FlagSystem) -> Result<FlagSystem> {
    fs.ensure_strict()?;
    let el = fs.elements_unchecked();
    let mut darts: HashMap<(usize, usize), usize> = HashMap::new();
    let mut dart = |f: usize| {
        let key = (el.vertices.orbit_of(f), el.edges.orbit_of(f));
        let next = darts.len();
        *darts.entry(key).or_insert(next)
    };
    let mut faces = Vec::new();
    for start in one_flag_per_orbit(&el.faces) {
        let mut cyc = Vec::new();
        for f in cycle(fs, start, [0, 1]) {
            cyc.push(dart(f));
            cyc.push(dart(fs.adj(0, f)));
        }
        faces.push(cyc);
    }
    for start in one_flag_per_orbit(&el.vertices) {
        faces.push(cycle(fs, start, [1, 2]).into_iter().map(&mut dart).collect());
    }
    faces_map(darts.len(), faces)
}

pub const MAX_CENSUS_FLAGS: usize = 16;

/// The fixed `s0` and `s2` of the census: flags `4b..4b+4` form one edge,
/// with `s0 = (0 1)(2 3)` and `s2 = (0 2)(1 3)` on each block. Every flag
/// system is isomorphic to one with this layout.
fn standard_edge_involutions(n: usize) -> (Vec<usize>, Vec<usize>) {
    let s0 = (0..n).map(|i| i ^ 1).collect();
    let s2 = (0..n).map(|i| i ^ 2).collect();
    (s0, s2)
}

fn perfect_matchings(p: &mut Vec<usize>, out: &mut impl FnMut(&[usize])) {
    let Some(i) = p.iter().position(|&x| x == usize::MAX) else {
        out(p);
        return;
    };
    for j in i + 1..p.len() {
        if p[j] == usize::MAX {
            p[i] = j;
            p[j] = i;
            perfect_matchings(p, out);
            p[i] = usize::MAX;
            p[j] = usize::MAX;
        }
    }
}

/// Every valid flag system on `n_flags` flags up to isomorphism, in
/// canonical form and sorted by canonical code.
pub fn enumerate_flag_systems(n_flags: usize) -> Result<Vec<FlagSystem>> {
    if n_flags > MAX_CENSUS_FLAGS {
        return Err(Error::UnsupportedSize { size: n_flags, cap: MAX_CENSUS_FLAGS });
    }
    if n_flags == 0 || !n_flags.is_multiple_of(4) {
        return Err(Error::Input(format!("flag count must be a positive multiple of 4, got {n_flags}")));
    }
    let n = n_flags;
    let (s0, s2) = standard_edge_involutions(n);
    let s0p = Permutation::new(s0).expect("standard s0");
    let s2p = Permutation::new(s2).expect("standard s2");
    // split the search on the partner of flag 0 under s1
    let found: Vec<BTreeMap<Vec<u32>, FlagSystem>> = (1..n)
        .into_par_iter()
        .map(|partner| {
            let mut local = BTreeMap::new();
            let mut p = vec![usize::MAX; n];
            p[0] = partner;
            p[partner] = 0;
            perfect_matchings(&mut p, &mut |s1: &[usize]| {
                let s1p = Permutation::new(s1.to_vec()).expect("matching is a bijection");
                let fs = FlagSystem::new(s0p.clone(), s1p, s2p.clone()).expect("lengths agree");
                if fs.orbits_under(&[0, 1, 2]).orbit_count() != 1 {
                    return;
                }
                let (code, canon) = fs.canonical_code_and_form().expect("transitive");
                local.entry(code).or_insert(canon);
            });
            local
        })
        .collect();
    let mut all = BTreeMap::new();
    for part in found {
        for (code, fs) in part {
            all.entry(code).or_insert(fs);
        }
    }
    Ok(all.into_values().collect())
}
