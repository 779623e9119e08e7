//! Named binary matroids.
//!
//! Entries marked [`Provenance::PaperMatrix`] are the displayed `[I_r | D]`
//! matrices with labels `1..n`. All other entries are built on first use
//! from those matrices: duals, graphic matroids, and the extensions and
//! coextensions named by their generating column or row.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{coextend, extend};
use crate::gf2::{BitMatrix, BitVector};
use crate::matroid::Matroid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperMatrix,
    DerivedConstruction,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub matroid: Matroid,
    pub provenance: Provenance,
    pub notes: &'static str,
}

/// `[I_r | D]` from the rows of `D`.
fn standard(d_rows: &[&str]) -> Matroid {
    let r = d_rows.len();
    let rows: Vec<String> = d_rows
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let id: String = (0..r).map(|j| if i == j { '1' } else { '0' }).collect();
            format!("{id}{d}")
        })
        .collect();
    Matroid::new(&BitMatrix::from_rows(&rows).expect("catalog matrix"), None)
        .expect("catalog matrix has full rank")
}

/// Cycle matroid of a graph: the vertex-edge incidence matrix over GF(2)
/// with the last vertex's row dropped. Edges are numbered in the order given.
fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Matroid {
    let mut m = BitMatrix::zeros(vertices - 1, edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        for w in [u, v] {
            if w + 1 < vertices {
                m.set(w, j, true);
            }
        }
    }
    Matroid::new(&m, None).expect("connected graph")
}

/// K5 on vertices 0..5, edges in lexicographic order.
fn k5() -> Matroid {
    let edges: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
        .collect();
    graphic(5, &edges)
}

/// K3,3 with parts {0,1,2} and {3,4,5}, edges in lexicographic order.
fn k33() -> Matroid {
    let edges: Vec<(usize, usize)> = (0..3)
        .flat_map(|u| (3..6).map(move |v| (u, v)))
        .collect();
    graphic(6, &edges)
}

fn v(s: &str) -> BitVector {
    s.parse().expect("catalog vector")
}

fn ext(m: &Matroid, col: &str) -> Matroid {
    extend(m, &v(col)).expect("catalog generator is a valid column")
}

fn coext(m: &Matroid, row: &str) -> Matroid {
    coextend(m, &v(row)).expect("catalog generator is a valid row")
}

fn build() -> BTreeMap<&'static str, CatalogEntry> {
    use Provenance::*;
    let f7 = standard(&["0111", "1011", "1101"]);
    let f7s = standard(&["011", "101", "110", "111"]);
    let ag = standard(&["0111", "1011", "1101", "1110"]);
    let s8 = standard(&["0111", "1011", "1101", "1111"]);
    let p9 = standard(&["01111", "10111", "11010", "11110"]);
    let s10 = standard(&["011111", "101110", "110100", "111101"]);
    let e4 = standard(&["01111", "10111", "11010", "11110", "01001"]);
    let e5 = standard(&["01111", "10111", "11010", "11110", "10100"]);
    let t12 = standard(&["110001", "100011", "000111", "001110", "011100", "111000"]);
    let pg = standard(&[
        "00001111111",
        "01110001111",
        "10110110011",
        "11011010101",
    ]);
    let mk5 = k5();
    let mk33 = k33();

    let entries = vec![
        ("F7", f7, PaperMatrix, "Fano plane PG(2,2)"),
        ("F7*", f7s, PaperMatrix, "dual of the Fano plane"),
        ("AG(3,2)", ag, PaperMatrix, "binary affine cube"),
        ("S8", s8.clone(), PaperMatrix, "self-dual"),
        ("P9", p9.clone(), PaperMatrix, ""),
        ("P9*", p9.dual(), DerivedConstruction, "dual of P9"),
        ("S10", s10.clone(), PaperMatrix, "single-element extension of P9"),
        ("S10*", s10.dual(), DerivedConstruction, "dual of S10"),
        ("E4", e4.clone(), PaperMatrix, "coextension of P9"),
        ("E5", e5, PaperMatrix, "coextension of P9"),
        ("T12", t12, PaperMatrix, "self-dual and 4-connected"),
        ("PG(3,2)", pg, PaperMatrix, "binary projective space"),
        ("M(K5)", mk5.clone(), DerivedConstruction, "cycle matroid of K5"),
        ("M*(K5)", mk5.dual(), DerivedConstruction, "bond matroid of K5"),
        ("M(K3,3)", mk33.clone(), DerivedConstruction, "cycle matroid of K3,3"),
        ("M*(K3,3)", mk33.dual(), DerivedConstruction, "bond matroid of K3,3"),
        ("Z4", ext(&s8, "[1110]"), DerivedConstruction, "S8 + [1110]"),
        ("Z4*", coext(&s8, "[1110]"), DerivedConstruction, "S8 with row [1110]"),
        ("D1", ext(&p9, "[1110]"), DerivedConstruction, "P9 + [1110]"),
        ("D3", ext(&p9, "[0011]"), DerivedConstruction, "P9 + [0011]"),
        ("E1", coext(&p9, "[11000]"), DerivedConstruction, "P9 with row [11000]"),
        ("E2", coext(&p9, "[11011]"), DerivedConstruction, "P9 with row [11011]"),
        ("E3", coext(&p9, "[11001]"), DerivedConstruction, "P9 with row [11001]"),
        ("E6", coext(&p9, "[00101]"), DerivedConstruction, "P9 with row [00101]"),
        ("E6*", coext(&p9, "[00111]"), DerivedConstruction, "P9 with row [00111]"),
        ("E7", coext(&p9, "[00011]"), DerivedConstruction, "P9 with row [00011]"),
        ("T12/e", ext(&e4, "[11011]"), DerivedConstruction, "E4 + [11011]"),
        ("T12\\e", coext(&e4, "[01010]"), DerivedConstruction, "E4 with row [01010]"),
    ];
    entries
        .into_iter()
        .map(|(name, matroid, provenance, notes)| {
            (name, CatalogEntry { name, matroid, provenance, notes })
        })
        .collect()
}

fn catalog() -> &'static BTreeMap<&'static str, CatalogEntry> {
    static CATALOG: OnceLock<BTreeMap<&'static str, CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    catalog()
        .get(name)
        .cloned()
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Shorthand for `get(name)?.matroid`.
pub fn matroid(name: &str) -> Result<Matroid> {
    get(name).map(|e| e.matroid)
}

/// All names, sorted.
pub fn list() -> Vec<&'static str> {
    catalog().keys().copied().collect()
}
