//! Isomorphism testing and canonical keys for binary matroids.
//!
//! A binary matroid is determined up to isomorphism by the multiset of its
//! column vectors up to a change of basis. Fixing an ordered basis
//! `b_1, ..., b_r` fixes coordinates, so the matroid is described by listing,
//! for each step `i`, the color of `b_i` and the coordinates of every element
//! that first enters `span(b_1..b_i)` at that step. The canonical key is the
//! lexicographically least such description over all ordered bases. The
//! search is pruned by comparing partial descriptions against the best one
//! found so far and by element colors from circuit/cocircuit statistics.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::gf2::{bits, BitVector};
use crate::matroid::{Label, Matroid};

/// Opaque canonical form; equal keys iff the matroids are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Short hexadecimal fingerprint for reports.
    pub fn fingerprint(&self) -> String {
        // FNV-1a, enough to tell classes apart in human-readable output
        let h = self.0.iter().fold(0xcbf29ce484222325u64, |h, &b| {
            (h ^ b as u64).wrapping_mul(0x100000001b3)
        });
        format!("{h:016x}")
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalKey({})", self.fingerprint())
    }
}

/// Per-element invariant: how many circuits and cocircuits of each size
/// contain the element.
fn base_invariants(m: &Matroid) -> Vec<Vec<u32>> {
    let n = m.size();
    let mut inv = vec![vec![0u32; 2 * (n + 1)]; n];
    for c in m.circuit_masks() {
        let k = c.count_ones() as usize;
        for x in bits(c) {
            inv[x][k] += 1;
        }
    }
    for c in m.cocircuit_masks() {
        let k = c.count_ones() as usize;
        for x in bits(c) {
            inv[x][n + 1 + k] += 1;
        }
    }
    inv
}

/// Ranks invariant values into dense color indices.
fn index_colors<T: Ord + Clone>(values: &[T]) -> Vec<u32> {
    let distinct: BTreeMap<T, u32> = values
        .iter()
        .cloned()
        .map(|v| (v, 0))
        .collect::<BTreeMap<_, _>>()
        .into_keys()
        .enumerate()
        .map(|(i, v)| (v, i as u32))
        .collect();
    values.iter().map(|v| distinct[v]).collect()
}

/// Element colors refined by the colors of circuit and cocircuit mates,
/// iterated until the partition stops splitting.
pub(crate) fn element_colors(m: &Matroid) -> Vec<u32> {
    let circuits = m.circuit_masks();
    let cocircuits = m.cocircuit_masks();
    let mut colors = index_colors(&base_invariants(m));
    let n = m.size();
    loop {
        let classes = colors.iter().collect::<HashSet<_>>().len();
        if classes == n {
            break;
        }
        let signature = |x: usize, family: &[u64], colors: &[u32]| {
            let mut sig: Vec<Vec<u32>> = family
                .iter()
                .filter(|&&c| c >> x & 1 == 1)
                .map(|&c| {
                    let mut v: Vec<u32> = bits(c & !(1 << x)).map(|y| colors[y]).collect();
                    v.sort_unstable();
                    v.insert(0, c.count_ones());
                    v
                })
                .collect();
            sig.sort_unstable();
            sig
        };
        let refined: Vec<_> = (0..n)
            .map(|x| {
                (
                    colors[x],
                    signature(x, &circuits, &colors),
                    signature(x, &cocircuits, &colors),
                )
            })
            .collect();
        let next = index_colors(&refined);
        let next_classes = next.iter().collect::<HashSet<_>>().len();
        colors = next;
        if next_classes == classes {
            break;
        }
    }
    colors
}

/// Branch-and-bound search for the least ordered-basis description.
struct KeySearch<'a> {
    cols: &'a [u64],
    colors: &'a [u32],
    rank: usize,
    /// Echelon rows indexed by pivot bit: (vector, coordinates).
    ech: [(u64, u64); 64],
    spanned: u64,
    code: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl KeySearch<'_> {
    fn coords(&self, mut v: u64) -> Option<u64> {
        let mut c = 0;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            let (bv, bc) = self.ech[h];
            if bv == 0 {
                return None;
            }
            v ^= bv;
            c ^= bc;
        }
        Some(c)
    }

    /// Compares the current partial code with the same-length prefix of
    /// the best code.
    fn worse_than_best(&self) -> bool {
        match &self.best {
            None => false,
            Some(b) => self.code.as_slice() > &b[..self.code.len()],
        }
    }

    fn dfs(&mut self, depth: usize, all: u64) {
        if depth == self.rank {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        let free = all & !self.spanned;
        let min_color = bits(free).map(|x| self.colors[x]).min().expect("rank exceeds free elements");
        let choices: Vec<usize> = bits(free).filter(|&x| self.colors[x] == min_color).collect();
        for x in choices {
            // insert x into the echelon form
            let mut v = self.cols[x];
            let mut c = 1u64 << depth;
            while v != 0 {
                let h = 63 - v.leading_zeros() as usize;
                if self.ech[h].0 == 0 {
                    break;
                }
                let (bv, bc) = self.ech[h];
                v ^= bv;
                c ^= bc;
            }
            debug_assert!(v != 0);
            let pivot = 63 - v.leading_zeros() as usize;
            self.ech[pivot] = (v, c);
            let saved_spanned = self.spanned;
            let mark = self.code.len();
            self.spanned |= 1 << x;
            let mut fresh: Vec<(u64, u32)> = Vec::new();
            for y in bits(all & !self.spanned) {
                if let Some(cy) = self.coords(self.cols[y]) {
                    fresh.push((cy, self.colors[y]));
                    self.spanned |= 1 << y;
                }
            }
            fresh.sort_unstable();
            self.code.push(min_color);
            self.code.push(fresh.len() as u32);
            for (cy, col) in fresh {
                self.code.push(cy as u32);
                self.code.push(col);
            }
            if !self.worse_than_best() {
                self.dfs(depth + 1, all);
            }
            self.code.truncate(mark);
            self.spanned = saved_spanned;
            self.ech[pivot] = (0, 0);
        }
    }
}

/// Canonical key of `m`: invariant under relabeling, row operations and
/// column permutations, and equal for two matroids iff they are isomorphic.
pub fn canonical_key(m: &Matroid) -> CanonicalKey {
    // The search is exponential in the rank, and M ≅ N iff M* ≅ N*, so work
    // on whichever of M and M* has the smaller rank.
    if m.rank() > m.corank() {
        let mut key = primal_key(&m.dual());
        key.0.insert(0, 1);
        return key;
    }
    let mut key = primal_key(m);
    key.0.insert(0, 0);
    key
}

fn primal_key(m: &Matroid) -> CanonicalKey {
    assert!(m.rank() <= 32, "canonical keys support rank at most 32");
    let colors = element_colors(m);
    let cols = m.columns_raw();
    let all = m.ground_mask();
    let loops: u64 = bits(all).filter(|&x| cols[x] == 0).fold(0, |a, x| a | 1 << x);
    let mut header = vec![m.size() as u32, m.rank() as u32, loops.count_ones()];
    let mut loop_colors: Vec<u32> = bits(loops).map(|x| colors[x]).collect();
    loop_colors.sort_unstable();
    header.extend(loop_colors);
    let mut search = KeySearch {
        cols,
        colors: &colors,
        rank: m.rank(),
        ech: [(0, 0); 64],
        spanned: loops,
        code: header,
        best: None,
    };
    search.dfs(0, all);
    let best = search.best.expect("every matroid has a basis");
    CanonicalKey(best.iter().flat_map(|t| t.to_le_bytes()).collect())
}

/// An explicit isomorphism `m -> n` as label pairs, found by mapping the
/// standard basis of `m` into `n` and checking that circuits go to circuits.
pub fn find_isomorphism(m: &Matroid, n: &Matroid) -> Option<Vec<(Label, Label)>> {
    if m.size() != n.size() || m.rank() != n.rank() {
        return None;
    }
    if m.rank() > m.corank() {
        // duality keeps labels, so an isomorphism of duals is one of m and n
        return find_isomorphism(&m.dual(), &n.dual());
    }
    let inv_m = base_invariants(m);
    let inv_n = base_invariants(n);
    let mut sm = inv_m.clone();
    let mut sn = inv_n.clone();
    sm.sort();
    sn.sort();
    if sm != sn {
        return None;
    }
    let r = m.rank();
    let size = m.size();
    let cols_m = m.columns_raw();
    let cols_n = n.columns_raw();
    let mut count_m: HashMap<u64, usize> = HashMap::new();
    for &c in cols_m {
        *count_m.entry(c).or_default() += 1;
    }
    let mut by_col_n: HashMap<u64, Vec<usize>> = HashMap::new();
    for (y, &c) in cols_n.iter().enumerate() {
        by_col_n.entry(c).or_default().push(y);
    }
    let circuits_n: HashSet<u64> = n.circuit_masks().into_iter().collect();
    let circuits_m = m.circuit_masks();

    struct Ctx<'a> {
        r: usize,
        size: usize,
        cols_m: &'a [u64],
        cols_n: &'a [u64],
        inv_m: &'a [Vec<u32>],
        inv_n: &'a [Vec<u32>],
        count_m: &'a HashMap<u64, usize>,
        by_col_n: &'a HashMap<u64, Vec<usize>>,
        circuits_m: &'a [u64],
        circuits_n: &'a HashSet<u64>,
    }

    fn image_of(ctx: &Ctx, images: &[usize], coords: u64) -> u64 {
        bits(coords).fold(0, |a, i| a ^ ctx.cols_n[images[i]])
    }

    fn consistent(ctx: &Ctx, images: &[usize]) -> bool {
        let k = images.len() - 1;
        (0..ctx.size)
            .filter(|&y| {
                let c = ctx.cols_m[y];
                c >> k & 1 == 1 && c >> (k + 1) == 0
            })
            .all(|y| {
                let t = image_of(ctx, images, ctx.cols_m[y]);
                match ctx.by_col_n.get(&t) {
                    Some(ys) => {
                        ys.len() == ctx.count_m[&ctx.cols_m[y]]
                            && ctx.inv_n[ys[0]] == ctx.inv_m[y]
                    }
                    None => false,
                }
            })
    }

    fn finish(ctx: &Ctx, images: &[usize]) -> Option<Vec<usize>> {
        let mut used: HashMap<u64, usize> = HashMap::new();
        let mut map = vec![0usize; ctx.size];
        for (y, slot) in map.iter_mut().enumerate() {
            let t = image_of(ctx, images, ctx.cols_m[y]);
            let ys = ctx.by_col_n.get(&t)?;
            let k = used.entry(t).or_default();
            *slot = *ys.get(*k)?;
            *k += 1;
        }
        let ok = ctx.circuits_m.len() == ctx.circuits_n.len()
            && ctx.circuits_m.iter().all(|&c| {
                let img = bits(c).fold(0u64, |a, y| a | 1 << map[y]);
                ctx.circuits_n.contains(&img)
            });
        ok.then_some(map)
    }

    fn search(ctx: &Ctx, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let k = images.len();
        if k == ctx.r {
            return finish(ctx, images);
        }
        let span_rank = crate::gf2::rank_of_masks(images.iter().map(|&z| ctx.cols_n[z]));
        for z in 0..ctx.size {
            if images.contains(&z) || ctx.inv_n[z] != ctx.inv_m[k] {
                continue;
            }
            let rank = crate::gf2::rank_of_masks(
                images.iter().map(|&w| ctx.cols_n[w]).chain([ctx.cols_n[z]]),
            );
            if rank != span_rank + 1 {
                continue;
            }
            images.push(z);
            if consistent(ctx, images) {
                if let Some(found) = search(ctx, images) {
                    return Some(found);
                }
            }
            images.pop();
        }
        None
    }

    let ctx = Ctx {
        r,
        size,
        cols_m,
        cols_n,
        inv_m: &inv_m,
        inv_n: &inv_n,
        count_m: &count_m,
        by_col_n: &by_col_n,
        circuits_m: &circuits_m,
        circuits_n: &circuits_n,
    };
    if r == 0 {
        // all loops
        let map: Vec<usize> = (0..size).collect();
        return Some(
            map.iter()
                .enumerate()
                .map(|(x, &y)| (m.label_at(x), n.label_at(y)))
                .collect(),
        );
    }
    let map = search(&ctx, &mut Vec::with_capacity(r))?;
    Some(
        map.iter()
            .enumerate()
            .map(|(x, &y)| (m.label_at(x), n.label_at(y)))
            .collect(),
    )
}

/// Whether some bijection of ground sets carries circuits onto circuits.
pub fn are_isomorphic(m: &Matroid, n: &Matroid) -> bool {
    find_isomorphism(m, n).is_some()
}

/// Matroids produced by a set of generators that share a canonical key.
#[derive(Debug, Clone, Serialize)]
pub struct IsoClass {
    #[serde(serialize_with = "ser_key")]
    pub canonical_key: CanonicalKey,
    #[serde(skip)]
    pub representative: Matroid,
    pub members: Vec<BitVector>,
}

fn ser_key<S: serde::Serializer>(k: &CanonicalKey, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&k.fingerprint())
}

impl IsoClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Groups generated matroids by canonical key. Classes are ordered by their
/// least generator and the representative is the matroid built from it.
pub fn partition_into_classes(mut candidates: Vec<(BitVector, Matroid)>) -> Vec<IsoClass> {
    candidates.sort_by(|a, b| a.0.cmp(&b.0));
    let keys: Vec<CanonicalKey> = candidates.par_iter().map(|(_, m)| canonical_key(m)).collect();
    let mut index: HashMap<CanonicalKey, usize> = HashMap::new();
    let mut classes: Vec<IsoClass> = Vec::new();
    for ((generator, m), key) in candidates.into_iter().zip(keys) {
        match index.get(&key) {
            Some(&i) => classes[i].members.push(generator),
            None => {
                index.insert(key.clone(), classes.len());
                classes.push(IsoClass {
                    canonical_key: key,
                    representative: m,
                    members: vec![generator],
                });
            }
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    fn m(rows: &[&str]) -> Matroid {
        Matroid::new(&BitMatrix::from_rows(rows).unwrap(), None).unwrap()
    }

    fn f7() -> Matroid {
        m(&["100 0111", "010 1011", "001 1101"])
    }

    fn s8() -> Matroid {
        m(&["1000 0111", "0100 1011", "0010 1101", "0001 1111"])
    }

    fn ag32() -> Matroid {
        m(&["1000 0111", "0100 1011", "0010 1101", "0001 1110"])
    }

    fn t12() -> Matroid {
        m(&[
            "100000 110001",
            "010000 100011",
            "001000 000111",
            "000100 001110",
            "000010 011100",
            "000001 111000",
        ])
    }

    fn f7star_plus(col: &str) -> Matroid {
        let mut rows: Vec<String> = ["1000 011", "0100 101", "0010 110", "0001 111"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        for (i, ch) in col.chars().enumerate() {
            rows[i].push(ch);
        }
        m(&rows.iter().map(String::as_str).collect::<Vec<_>>())
    }

    #[test]
    fn key_examples() {
        assert_eq!(canonical_key(&f7star_plus("0011")), canonical_key(&f7star_plus("0101")));
        assert_ne!(canonical_key(&f7()), canonical_key(&f7().dual()));
        let relabeled = f7().relabel(|l| 100 - l).unwrap();
        assert_eq!(canonical_key(&f7()), canonical_key(&relabeled));
    }

    #[test]
    fn iso_examples() {
        assert!(are_isomorphic(&s8().dual(), &s8()));
        assert!(!are_isomorphic(&ag32(), &s8()));
        assert!(are_isomorphic(&t12(), &t12()));
        assert!(are_isomorphic(&t12(), &t12().dual()));
        let map = find_isomorphism(&s8(), &s8().dual()).unwrap();
        assert_eq!(map.len(), 8);
    }

    #[test]
    fn key_agrees_with_explicit_isomorphism() {
        let all: Vec<Matroid> = ["0011", "0101", "0110", "1001", "1010", "1100", "1110", "1111"]
            .iter()
            .map(|c| f7star_plus(c))
            .chain([s8(), ag32(), s8().dual()])
            .collect();
        for a in &all {
            for b in &all {
                assert_eq!(canonical_key(a) == canonical_key(b), are_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn key_invariant_under_column_permutation() {
        let t = t12();
        let k = canonical_key(&t);
        let order: Vec<usize> = vec![11, 3, 7, 0, 5, 9, 1, 10, 2, 8, 4, 6];
        assert_eq!(canonical_key(&t.permute_columns(&order)), k);
        assert_eq!(canonical_key(&t.dual().dual()), k);
    }

    #[test]
    fn classes_of_f7star_extensions() {
        let cands: Vec<(BitVector, Matroid)> =
            ["0011", "0101", "0110", "1001", "1010", "1100", "1110", "1111"]
                .iter()
                .map(|c| (c.parse().unwrap(), f7star_plus(c)))
                .collect();
        let classes = partition_into_classes(cands);
        assert_eq!(classes.len(), 2);
        assert!(partition_into_classes(Vec::new()).is_empty());
        let ag = classes.iter().find(|c| are_isomorphic(&c.representative, &ag32())).unwrap();
        assert_eq!(ag.members, vec!["[1110]".parse::<BitVector>().unwrap()]);
    }
}
