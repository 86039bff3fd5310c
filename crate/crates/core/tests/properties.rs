mod common;

use std::collections::BTreeMap;

use common::{base_maps, brute_isomorphic};
use mapsym_core::catalog::{self, table_lookup, Family};
use mapsym_core::generators::{medial, truncation};
use mapsym_core::symmetry::{self, Symmetry};
use mapsym_core::{FlagSystem, Permutation, Pregraph};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// An involution on `0..n` with `pairs` two-cycles, the rest fixed.
fn involution(n: usize) -> impl Strategy<Value = Vec<usize>> {
    (permutation(n), 0..=n / 2).prop_map(move |(order, pairs)| {
        let mut inv: Vec<usize> = (0..n).collect();
        for p in 0..pairs {
            let (a, b) = (order[2 * p], order[2 * p + 1]);
            inv[a] = b;
            inv[b] = a;
        }
        inv
    })
}

/// A valid flag system on `4m` flags: the standard `s0`, `s2` and a random
/// fixed-point-free `s1`, kept only when transitive.
fn flag_system(max_blocks: usize) -> impl Strategy<Value = FlagSystem> {
    (1..=max_blocks).prop_flat_map(|m| permutation(4 * m)).prop_filter_map("not transitive", |order| {
        let n = order.len();
        let mut s1 = vec![0; n];
        for pair in order.chunks(2) {
            s1[pair[0]] = pair[1];
            s1[pair[1]] = pair[0];
        }
        let fs = FlagSystem::from_images((0..n).map(|i| i ^ 1).collect(), s1, (0..n).map(|i| i ^ 2).collect()).ok()?;
        (fs.orbits_under(&[0, 1, 2]).orbit_count() == 1).then_some(fs)
    })
}

/// A flag system together with a random relabeling of its flags.
fn relabeled_system() -> impl Strategy<Value = (FlagSystem, Vec<usize>)> {
    flag_system(6).prop_flat_map(|fs| {
        let n = fs.n_flags();
        (Just(fs), permutation(n))
    })
}

fn pregraph(max_n: usize) -> impl Strategy<Value = Pregraph> {
    (1..=max_n).prop_flat_map(|n| {
        (involution(n), involution(n), involution(n))
            .prop_map(move |(a, b, c)| Pregraph::from_involutions(n, [Some(&a), Some(&b), Some(&c)]).unwrap())
    })
}

fn pregraph_with_relabel() -> impl Strategy<Value = (Pregraph, Vec<usize>)> {
    pregraph(7).prop_flat_map(|p| {
        let n = p.n_vertices();
        (Just(p), permutation(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn permutation_algebra(a in permutation(9), b in permutation(9), c in permutation(9)) {
        let (a, b, c) = (Permutation::new(a).unwrap(), Permutation::new(b).unwrap(), Permutation::new(c).unwrap());
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        for i in 0..9 {
            prop_assert_eq!(a.then(&b).apply(i), b.apply(a.apply(i)));
        }
    }

    #[test]
    fn axioms_and_orbits(fs in flag_system(6)) {
        let n = fs.n_flags();
        prop_assert!(fs.validate(false).is_valid());
        for j in 0..3u8 {
            for i in 0..n {
                prop_assert_eq!(fs.adj(j, fs.adj(j, i)), i);
                prop_assert_ne!(fs.adj(j, i), i);
            }
        }
        prop_assert!(fs.orbits_under(&[0, 2]).sizes().iter().all(|&s| s == 4));
        for gens in [&[0u8, 1][..], &[1, 2][..], &[0, 2][..], &[0][..], &[][..]] {
            let p = fs.orbits_under(gens);
            prop_assert_eq!(p.sizes().iter().sum::<usize>(), n);
            for (o, members) in p.orbits().enumerate() {
                prop_assert!(members.iter().all(|&f| p.orbit_of(f) == o));
            }
        }
        prop_assert_eq!(fs.orbits_under(&[0, 1, 2]).orbit_count(), 1);
        let el = fs.elements().unwrap();
        prop_assert!(el.vertices.sizes().iter().all(|s| s % 2 == 0));
        prop_assert!(el.faces.sizes().iter().all(|s| s % 2 == 0));
    }

    #[test]
    fn duality_and_petrie(fs in flag_system(6)) {
        let d = fs.dual();
        prop_assert_eq!(&d.dual(), &fs);
        prop_assert_eq!(&d.elements().unwrap().vertices, &fs.elements().unwrap().faces);
        let p = fs.petrie_dual();
        prop_assert!(p.validate(false).is_valid());
        prop_assert_eq!(&p.petrie_dual(), &fs);
        prop_assert_eq!(&p.elements().unwrap().vertices, &fs.elements().unwrap().vertices);
        prop_assert_eq!(&p.elements().unwrap().edges, &fs.elements().unwrap().edges);
    }

    #[test]
    fn automorphism_group_is_free_and_closed(fs in flag_system(6)) {
        let sym = Symmetry::new(&fs).unwrap();
        let order = sym.group.order();
        prop_assert_eq!(order * sym.k(), fs.n_flags());
        prop_assert!(sym.orbits.sizes().iter().all(|&s| s == order));
        for g in sym.group.elements() {
            for j in 0..3u8 {
                prop_assert!(g.commutes_with(fs.generator(j)));
            }
            for h in sym.group.elements() {
                let gh = g.then(h);
                prop_assert_eq!(sym.group.by_image_of_base(gh.apply(0)), Some(&gh));
            }
        }
    }

    #[test]
    fn invariants_survive_relabeling((fs, p) in relabeled_system()) {
        let relabel = Permutation::new(p).unwrap();
        let other = fs.relabel(&relabel);
        prop_assert!(other.validate(false).is_valid());
        prop_assert_eq!(fs.canonical_code().unwrap(), other.canonical_code().unwrap());
        prop_assert_eq!(fs.canonical_form().unwrap(), other.canonical_form().unwrap());
        let phi = fs.isomorphism_to(&other).unwrap();
        for j in 0..3u8 {
            for i in 0..fs.n_flags() {
                prop_assert_eq!(phi.apply(fs.adj(j, i)), other.adj(j, phi.apply(i)));
            }
        }
        let (a, b) = (Symmetry::new(&fs).unwrap(), Symmetry::new(&other).unwrap());
        prop_assert_eq!(a.k(), b.k());
        prop_assert_eq!(a.group.order(), b.group.order());
        prop_assert!(a.type_graph.isomorphic(&b.type_graph).is_some());
    }

    #[test]
    fn type_graph_shape(fs in flag_system(6)) {
        let sym = Symmetry::new(&fs).unwrap();
        let t = &sym.type_graph;
        prop_assert_eq!(t.n_vertices(), sym.k());
        prop_assert!(t.has_exactly_colours(&[0, 1, 2]));
        prop_assert!(t.is_connected());
        let (s0, s2) = (t.involution(0).unwrap(), t.involution(2).unwrap());
        for v in 0..t.n_vertices() {
            prop_assert_eq!(s0[s2[v]], s2[s0[v]]);
        }
        let d = fs.dual();
        let dt = symmetry::symmetry_type_graph(&d).unwrap();
        prop_assert!(dt.isomorphic(&t.swap_colours(0, 2).unwrap()).is_some());
    }

    #[test]
    fn element_type_graphs(fs in flag_system(6)) {
        let sym = Symmetry::new(&fs).unwrap();
        let a = sym.assignment().unwrap();
        for v in 0..a.vertices.len() {
            let tg = sym.vertex_type_graph(v).unwrap();
            prop_assert!(tg.quotient.isomorphic(&tg.component.graph).is_some());
        }
        for f in 0..a.faces.len() {
            let tg = sym.face_type_graph(f).unwrap();
            prop_assert!(tg.quotient.isomorphic(&tg.component.graph).is_some());
        }
        for records in [&a.vertices, &a.faces] {
            let mut by_comp = BTreeMap::new();
            for r in records.iter() {
                prop_assert_eq!(r.characteristic.cycle_length, 2 * r.size);
                let first = *by_comp.entry(r.component).or_insert(r.size);
                prop_assert_eq!(first, r.size);
            }
        }
    }

    #[test]
    fn four_orbit_structure(fs in flag_system(6)) {
        let sym = Symmetry::new(&fs).unwrap();
        if sym.k() == 4 {
            let entry = catalog::classify_symmetry(&sym).unwrap();
            prop_assert!(sym.t0_components.len() <= 3);
            prop_assert!(sym.t2_components.len() <= 3);
            let a = sym.assignment().unwrap();
            for (family, records) in [(Family::Vertex, &a.vertices), (Family::Face, &a.faces)] {
                for r in records.iter() {
                    let row = table_lookup(family, r.type_id.unwrap());
                    // the minimum needs a genuine map; divisibility holds always
                    prop_assert_eq!(r.size % row.formula.multiplier, 0);
                }
            }
            let dual = fs.dual();
            let dual_entry = catalog::classify_4orbit(&dual).unwrap();
            prop_assert_eq!(dual_entry.name, catalog::dual_name(entry.name));
            let petrie = fs.petrie_dual();
            prop_assert_eq!(catalog::classify_4orbit(&petrie).unwrap().name, catalog::petrie_name(entry.name));
        } else {
            prop_assert!(catalog::classify_symmetry(&sym).is_err());
        }
    }

    #[test]
    fn pregraph_canonical_code((p, perm) in pregraph_with_relabel()) {
        let q = p.relabel(&perm);
        prop_assert_eq!(p.canonical_code(), q.canonical_code());
        prop_assert_eq!(p.canonical_form(), q.canonical_form());
        let phi = p.isomorphic(&q).unwrap();
        prop_assert_eq!(p.relabel(&phi), q.clone());
        prop_assert_eq!(Pregraph::from_json(&p.to_json()).unwrap(), p.clone());
        prop_assert_eq!(p.swap_colours(0, 2).unwrap().swap_colours(0, 2).unwrap(), p.clone());
        let sizes: usize = p.components().iter().map(|c| c.vertices.len()).sum();
        prop_assert_eq!(sizes, p.n_vertices());
    }

    #[test]
    fn pregraph_isomorphism_matches_brute_force(a in pregraph(5), b in pregraph(5)) {
        prop_assert_eq!(a.isomorphic(&b).is_some(), brute_isomorphic(&a, &b));
        prop_assert_eq!(a.canonical_code() == b.canonical_code(), brute_isomorphic(&a, &b));
    }
}

#[test]
fn operations_preserve_surface_and_symmetry() {
    for m in base_maps() {
        let fs = &m.fs;
        assert!(fs.validate(true).is_valid(), "{}", m.name);
        let el = fs.elements().unwrap();
        let chi = fs.euler_characteristic().unwrap();
        let order = symmetry::automorphisms(fs).unwrap().order();
        let med = medial(fs).unwrap();
        let tr = truncation(fs).unwrap();
        for (op, out, factor) in [("medial", &med, 8), ("truncation", &tr, 12)] {
            assert!(out.validate(true).is_valid(), "{op}({})", m.name);
            assert_eq!(out.n_flags(), factor * el.edges.orbit_count(), "{op}({})", m.name);
            assert_eq!(out.euler_characteristic().unwrap(), chi, "{op}({})", m.name);
            let op_order = symmetry::automorphisms(out).unwrap().order();
            assert_eq!(op_order % order, 0, "{op}({})", m.name);
        }
        assert_eq!(med.elements().unwrap().vertices.orbit_count(), el.edges.orbit_count());
    }
}
