//! Per-map summary: orbit count, automorphism group order, catalog class and
//! the vertex/face table data of every element class.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::catalog::{self, Family, TwoColourId};
use crate::error::Result;
use crate::flagsys::FlagSystem;
use crate::symmetry::{ElementRecord, Symmetry};

pub const SCHEMA: &str = "mapsym/1";

/// Vertices (or faces) that share a component of `T0` (or `T2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    pub component: usize,
    pub type_id: Option<String>,
    /// Degree for vertex classes, size for face classes.
    pub size: usize,
    pub characteristic: String,
    pub count: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub flags: usize,
    pub k: usize,
    pub aut_order: usize,
    pub type_name: Option<&'static str>,
    /// Other classes with the same `T0`/`T2` component multisets.
    pub same_fingerprint: Vec<&'static str>,
    pub orbit_sizes: Vec<usize>,
    pub vertex_classes: Vec<ElementClass>,
    pub face_classes: Vec<ElementClass>,
    pub t0_components: Vec<Option<String>>,
    pub t2_components: Vec<Option<String>>,
}

fn classes(family: Family, records: &[ElementRecord]) -> Vec<ElementClass> {
    let mut by_component: BTreeMap<usize, ElementClass> = BTreeMap::new();
    for r in records {
        let class = by_component.entry(r.component).or_insert_with(|| ElementClass {
            component: r.component,
            type_id: r.type_id.map(|id| family.label(id)),
            size: r.size,
            characteristic: r.characteristic.to_string(),
            count: 0,
            members: Vec::new(),
        });
        class.count += 1;
        class.members.push(r.element);
    }
    by_component.into_values().collect()
}

fn component_labels(family: Family, comps: &[crate::pregraph::Component]) -> Vec<Option<String>> {
    let mut ids: Vec<Option<TwoColourId>> =
        comps.iter().map(|c| catalog::classify_shape(family, &c.graph).ok()).collect();
    ids.sort_unstable();
    ids.into_iter().map(|id| id.map(|id| family.label(id))).collect()
}

impl AnalysisReport {
    pub fn new(fs: &FlagSystem) -> Result<Self> {
        let sym = Symmetry::new(fs)?;
        Self::from_symmetry(&sym)
    }

    pub fn from_symmetry(sym: &Symmetry<'_>) -> Result<Self> {
        let assignment = sym.assignment()?;
        let (type_name, same_fingerprint) = if sym.k() == 4 {
            let entry = catalog::classify_symmetry(sym)?;
            (Some(entry.name), catalog::catalog().shares_fingerprint_with(entry.name))
        } else {
            (None, Vec::new())
        };
        Ok(AnalysisReport {
            schema: SCHEMA,
            flags: sym.fs.n_flags(),
            k: sym.k(),
            aut_order: sym.group.order(),
            type_name,
            same_fingerprint,
            orbit_sizes: sym.orbits.sizes(),
            vertex_classes: classes(Family::Vertex, &assignment.vertices),
            face_classes: classes(Family::Face, &assignment.faces),
            t0_components: component_labels(Family::Vertex, &sym.t0_components),
            t2_components: component_labels(Family::Face, &sym.t2_components),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable table. `bold` wraps headings in ANSI bold.
    pub fn render(&self, bold: bool) -> String {
        let h = |s: &str| if bold { format!("\x1b[1m{s}\x1b[0m") } else { s.to_string() };
        let opt = |o: &Option<String>| o.clone().unwrap_or_else(|| "?".into());
        let mut out = String::new();
        let _ = writeln!(out, "{}", h("map"));
        let _ = writeln!(out, "  flags      {}", self.flags);
        let _ = writeln!(out, "  |Aut|      {}", self.aut_order);
        let _ = writeln!(out, "  k          {}", self.k);
        match self.type_name {
            Some(name) => {
                let _ = writeln!(out, "  class      {name}");
                if !self.same_fingerprint.is_empty() {
                    let _ = writeln!(out, "  note       same T0/T2 components as {}", self.same_fingerprint.join(", "));
                }
            }
            None => {
                let _ = writeln!(out, "  class      k={} (not 4-orbit)", self.k);
            }
        }
        let list = |v: &[Option<String>]| v.iter().map(opt).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "  T0         {{{}}}", list(&self.t0_components));
        let _ = writeln!(out, "  T2         {{{}}}", list(&self.t2_components));
        for (title, col, rows) in
            [("vertex classes", "degree", &self.vertex_classes), ("face classes", "size", &self.face_classes)]
        {
            let _ = writeln!(out, "{}", h(title));
            let _ = writeln!(out, "  {:<6} {:>6} {:<14} {:>5}", "type", col, "char", "count");
            for c in rows {
                let _ = writeln!(out, "  {:<6} {:>6} {:<14} {:>5}", opt(&c.type_id), c.size, c.characteristic, c.count);
            }
        }
        out
    }
}
