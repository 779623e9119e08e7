//! Labeled binary matroids in standard form `[I_r | D]`.
//!
//! Internally each row of the representation is a `u64` mask over element
//! positions, so ground sets are limited to 64 elements. Every structural
//! query works on position masks; labels only appear at the API boundary.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::{bits, rank_of_masks, BitMatrix, BitVector};

/// Element label. The catalog uses `1..=n`.
pub type Label = u32;

/// Largest corank/rank for which circuit/cocircuit enumeration is attempted.
const MAX_SPAN_DIM: usize = 26;

/// A set of element labels.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(BTreeSet<Label>);

impl Subset {
    pub fn new() -> Self {
        Subset(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: Label) -> bool {
        self.0.contains(&l)
    }

    pub fn insert(&mut self, l: Label) -> bool {
        self.0.insert(l)
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    pub fn with(&self, l: Label) -> Subset {
        let mut s = self.clone();
        s.insert(l);
        s
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset(self.0.union(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Label> {
        self.0.iter().copied().collect()
    }

    /// Applies a label map element-wise.
    pub fn map(&self, f: impl Fn(Label) -> Label) -> Subset {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Label> for Subset {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Subset(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Label; N]> for Subset {
    fn from(a: [Label; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<&[Label]> for Subset {
    fn from(a: &[Label]) -> Self {
        a.iter().copied().collect()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Parses comma-separated labels such as `1,2,5,6` (braces optional).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('{').unwrap_or(t);
        let t = t.strip_suffix('}').unwrap_or(t);
        t.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<Label>()
                    .map_err(|_| Error::Parse(format!("bad element label `{p}`")))
            })
            .collect()
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A binary matroid with a labeled standard-form representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    rank: usize,
    labels: Vec<Label>,
    /// Row `i` as a mask over element positions; bit `i` is its pivot.
    rows: Vec<u64>,
    /// Column `j` as a mask over rows.
    cols: Vec<u64>,
}

impl Matroid {
    /// Builds a matroid from any full-row-rank representation. Labels
    /// default to `1..=n`. The result is re-standardized on the leftmost
    /// basis, with labels carried along with their columns.
    pub fn new(matrix: &BitMatrix, labels: Option<Vec<Label>>) -> Result<Self> {
        let n = matrix.cols();
        if n > 64 {
            return Err(Error::TooLarge(format!("{n} elements (limit 64)")));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::LabelCount { expected: n, got: l.len() });
                }
                l
            }
            None => (1..=n as Label).collect(),
        };
        check_distinct(&labels)?;
        let rows: Vec<u64> = (0..matrix.rows())
            .map(|i| matrix.row(i).to_mask())
            .collect();
        let m = Self::standardize(rows, labels);
        if m.rank < matrix.rows() {
            return Err(Error::RankDeficient {
                rank: m.rank,
                rows: matrix.rows(),
            });
        }
        Ok(m)
    }

    /// Row-reduces position-mask rows, drops zero rows and moves the
    /// leftmost basis to the front.
    pub(crate) fn standardize(mut rows: Vec<u64>, labels: Vec<Label>) -> Self {
        let n = labels.len();
        let mut pivots = Vec::new();
        let mut next = 0;
        for j in 0..n {
            if next == rows.len() {
                break;
            }
            let bit = 1u64 << j;
            let Some(p) = (next..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(p, next);
            let pr = rows[next];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != next && *row & bit != 0 {
                    *row ^= pr;
                }
            }
            pivots.push(j);
            next += 1;
        }
        rows.truncate(next);
        let mut order = pivots.clone();
        let pivot_mask: u64 = pivots.iter().fold(0, |a, &j| a | 1 << j);
        order.extend((0..n).filter(|j| pivot_mask >> j & 1 == 0));
        let rows: Vec<u64> = rows.iter().map(|&r| permute_bits(r, &order)).collect();
        let labels = order.iter().map(|&j| labels[j]).collect();
        Self::from_standard_rows(rows, labels)
    }

    /// Trusts that `rows` is already in standard form.
    pub(crate) fn from_standard_rows(rows: Vec<u64>, labels: Vec<Label>) -> Self {
        let n = labels.len();
        let cols = (0..n)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .fold(0u64, |a, (i, &r)| a | ((r >> j & 1) << i))
            })
            .collect();
        Matroid {
            rank: rows.len(),
            labels,
            rows,
            cols,
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.size() - self.rank
    }

    /// Labels in column order.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn ground_set(&self) -> Subset {
        self.labels.iter().copied().collect()
    }

    /// The full representation `[I_r | D]`, columns in label-list order.
    pub fn matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rank, self.size());
        for (i, &r) in self.rows.iter().enumerate() {
            for j in bits(r) {
                m.set(i, j, true);
            }
        }
        m
    }

    /// The `D` block.
    pub fn d_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rank, self.corank());
        for (i, &r) in self.rows.iter().enumerate() {
            for j in bits(r >> self.rank) {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Rows of `D`, each of length `n - r`.
    pub fn d_rows(&self) -> Vec<BitVector> {
        self.rows
            .iter()
            .map(|&r| BitVector::from_mask(self.corank(), r >> self.rank))
            .collect()
    }

    /// Columns of `D`, each of length `r`.
    pub fn d_columns(&self) -> Vec<BitVector> {
        self.cols[self.rank..]
            .iter()
            .map(|&c| BitVector::from_mask(self.rank, c))
            .collect()
    }

    pub fn column(&self, label: Label) -> Result<BitVector> {
        let p = self.position(label).ok_or(Error::UnknownLabel(label))?;
        Ok(BitVector::from_mask(self.rank, self.cols[p]))
    }

    pub(crate) fn columns_raw(&self) -> &[u64] {
        &self.cols
    }

    pub(crate) fn rows_raw(&self) -> &[u64] {
        &self.rows
    }

    pub fn position(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn label_at(&self, pos: usize) -> Label {
        self.labels[pos]
    }

    pub fn max_label(&self) -> Label {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn ground_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    /// Converts a label set to a position mask.
    pub fn mask_of(&self, s: &Subset) -> Result<u64> {
        s.iter().try_fold(0u64, |acc, l| {
            self.position(l)
                .map(|p| acc | 1 << p)
                .ok_or(Error::UnknownLabel(l))
        })
    }

    pub fn subset_of(&self, mask: u64) -> Subset {
        bits(mask).map(|p| self.labels[p]).collect()
    }

    pub(crate) fn rank_mask(&self, mask: u64) -> usize {
        rank_of_masks(bits(mask).map(|j| self.cols[j]))
    }

    /// Rank of a labeled subset.
    pub fn rank_of(&self, s: &Subset) -> Result<usize> {
        Ok(self.rank_mask(self.mask_of(s)?))
    }

    /// Dual matroid `[I_{n-r} | D^T]` on the same labels; the former `D`
    /// elements come first.
    pub fn dual(&self) -> Matroid {
        let r = self.rank;
        let k = self.corank();
        let rows: Vec<u64> = (0..k)
            .map(|j| (1u64 << j) | (self.cols[r + j] << k))
            .collect();
        let labels = self.labels[r..]
            .iter()
            .chain(&self.labels[..r])
            .copied()
            .collect();
        Matroid::from_standard_rows(rows, labels)
    }

    /// The minor `M \ deletions / contractions`, re-standardized. Surviving
    /// elements keep their labels and relative column order.
    pub fn remove(&self, deletions: &Subset, contractions: &Subset) -> Result<Matroid> {
        let d = self.mask_of(deletions)?;
        let c = self.mask_of(contractions)?;
        if d & c != 0 {
            let p = (d & c).trailing_zeros() as usize;
            return Err(Error::Overlap(self.labels[p]));
        }
        Ok(self.remove_masks(d, c))
    }

    pub(crate) fn remove_masks(&self, del: u64, con: u64) -> Matroid {
        let mut rows = self.rows.clone();
        let mut used = vec![false; rows.len()];
        for c in bits(con) {
            let bit = 1u64 << c;
            let Some(p) = (0..rows.len()).find(|&i| !used[i] && rows[i] & bit != 0) else {
                continue;
            };
            used[p] = true;
            let pr = rows[p];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != p && *row & bit != 0 {
                    *row ^= pr;
                }
            }
        }
        let keep = self.ground_mask() & !del & !con;
        let order: Vec<usize> = bits(keep).collect();
        let rows: Vec<u64> = rows
            .iter()
            .zip(&used)
            .filter(|(_, &u)| !u)
            .map(|(&r, _)| permute_bits(r, &order))
            .collect();
        let labels = order.iter().map(|&j| self.labels[j]).collect();
        Matroid::standardize(rows, labels)
    }

    pub fn delete(&self, label: Label) -> Result<Matroid> {
        self.remove(&Subset::from([label]), &Subset::new())
    }

    pub fn contract(&self, label: Label) -> Result<Matroid> {
        self.remove(&Subset::new(), &Subset::from([label]))
    }

    /// Renames elements; `f` must be injective on the ground set.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<Matroid> {
        let labels: Vec<Label> = self.labels.iter().map(|&l| f(l)).collect();
        check_distinct(&labels)?;
        Ok(Matroid {
            labels,
            ..self.clone()
        })
    }

    /// Reorders columns (a permutation of positions) and re-standardizes.
    pub fn permute_columns(&self, order: &[usize]) -> Matroid {
        let rows = self.rows.iter().map(|&r| permute_bits(r, order)).collect();
        let labels = order.iter().map(|&j| self.labels[j]).collect();
        Matroid::standardize(rows, labels)
    }

    /// Fundamental circuits, as position masks.
    fn fundamental_circuits(&self) -> Vec<u64> {
        (self.rank..self.size())
            .map(|j| (1u64 << j) | self.cols[j])
            .collect()
    }

    pub(crate) fn circuit_masks(&self) -> Vec<u64> {
        let gens = self.fundamental_circuits();
        span_filter(&gens, |v| self.rank_mask(v) + 1 == v.count_ones() as usize)
    }

    pub(crate) fn cocircuit_masks(&self) -> Vec<u64> {
        let all = self.ground_mask();
        span_filter(&self.rows, |v| self.rank_mask(all & !v) + 1 == self.rank)
    }

    /// All circuits, sorted.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .circuit_masks()
            .into_iter()
            .map(|m| self.subset_of(m))
            .collect();
        out.sort();
        out
    }

    /// All cocircuits, sorted.
    pub fn cocircuits(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .cocircuit_masks()
            .into_iter()
            .map(|m| self.subset_of(m))
            .collect();
        out.sort();
        out
    }

    /// Whether `a` is a union of circuits and whether it is a union of
    /// cocircuits.
    pub fn union_flags(&self, a: &Subset) -> Result<(bool, bool)> {
        let m = self.mask_of(a)?;
        Ok((self.is_union_of_circuits_mask(m), self.is_union_of_cocircuits_mask(m)))
    }

    /// No element of `a` is a coloop of the restriction to `a`.
    pub(crate) fn is_union_of_circuits_mask(&self, a: u64) -> bool {
        let ra = self.rank_mask(a);
        bits(a).all(|x| self.rank_mask(a & !(1 << x)) == ra)
    }

    /// Same test in the dual, using `r*(X) = |X| + r(E - X) - r(E)`.
    pub(crate) fn is_union_of_cocircuits_mask(&self, a: u64) -> bool {
        let all = self.ground_mask();
        let corank = |x: u64| x.count_ones() as usize + self.rank_mask(all & !x) - self.rank;
        let ra = corank(a);
        bits(a).all(|x| corank(a & !(1 << x)) == ra)
    }

    /// 3-element circuits and 3-element cocircuits.
    pub fn triangles_and_triads(&self) -> (Vec<Subset>, Vec<Subset>) {
        let pick = |v: Vec<Subset>| v.into_iter().filter(|s| s.len() == 3).collect();
        (pick(self.circuits()), pick(self.cocircuits()))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.cols.iter().all(|&c| c != 0 && seen.insert(c))
    }

    pub fn is_cosimple(&self) -> bool {
        self.dual().is_simple()
    }

    /// `(is_simple, is_cosimple)`.
    pub fn simplicity(&self) -> (bool, bool) {
        (self.is_simple(), self.is_cosimple())
    }

    /// Whether the 3-element mask `t` is a triangle or a triad.
    pub(crate) fn triangle_or_triad_mask(&self, t: u64) -> bool {
        debug_assert_eq!(t.count_ones(), 3);
        let is_circuit = self.rank_mask(t) == 2 && bits(t).all(|x| self.rank_mask(t & !(1 << x)) == 2);
        if is_circuit {
            return true;
        }
        // triad: t is a cocircuit iff E - t is a hyperplane and t is minimal
        let all = self.ground_mask();
        self.rank_mask(all & !t) + 1 == self.rank
            && bits(t).all(|x| self.rank_mask(all & !(t & !(1 << x))) == self.rank)
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matroid(n={}, r={}, labels={:?})",
            self.size(),
            self.rank,
            self.labels
        )?;
        fmt::Display::fmt(&self.matrix(), f)
    }
}

fn check_distinct(labels: &[Label]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l));
        }
    }
    Ok(())
}

/// New bit `k` takes old bit `order[k]`.
pub(crate) fn permute_bits(v: u64, order: &[usize]) -> u64 {
    order
        .iter()
        .enumerate()
        .fold(0, |a, (k, &j)| a | ((v >> j & 1) << k))
}

/// Enumerates the nonzero span of `gens` (assumed independent) in Gray-code
/// order and keeps the vectors accepted by `keep`.
fn span_filter(gens: &[u64], keep: impl Fn(u64) -> bool) -> Vec<u64> {
    assert!(
        gens.len() <= MAX_SPAN_DIM,
        "span of dimension {} is beyond desk scale",
        gens.len()
    );
    let mut out = Vec::new();
    let mut v = 0u64;
    for i in 1u64..(1u64 << gens.len()) {
        v ^= gens[i.trailing_zeros() as usize];
        if keep(v) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> Matroid {
        Matroid::new(&BitMatrix::from_rows(rows).unwrap(), None).unwrap()
    }

    fn f7() -> Matroid {
        m(&["100 0111", "010 1011", "001 1101"])
    }

    fn p9() -> Matroid {
        m(&["1000 01111", "0100 10111", "0010 11010", "0001 11110"])
    }

    fn e4() -> Matroid {
        m(&[
            "10000 01111",
            "01000 10111",
            "00100 11010",
            "00010 11110",
            "00001 01001",
        ])
    }

    fn ag32() -> Matroid {
        m(&["1000 0111", "0100 1011", "0010 1101", "0001 1110"])
    }

    /// All bases by brute force over r-subsets.
    fn bases(m: &Matroid) -> BTreeSet<Subset> {
        let n = m.size();
        (0u64..1 << n)
            .filter(|s| s.count_ones() as usize == m.rank() && m.rank_mask(*s) == m.rank())
            .map(|s| m.subset_of(s))
            .collect()
    }

    fn s(v: &[Label]) -> Subset {
        Subset::from(v)
    }

    #[test]
    fn make_matroid_examples() {
        let f = f7();
        assert_eq!((f.size(), f.rank()), (7, 3));
        assert_eq!(f.labels(), &[1, 2, 3, 4, 5, 6, 7]);
        let free = m(&["100", "010", "001"]);
        assert_eq!((free.size(), free.rank()), (3, 3));
        let bad = BitMatrix::from_rows(&["1011", "1011"]).unwrap();
        assert!(matches!(Matroid::new(&bad, None), Err(Error::RankDeficient { .. })));
        let dup = Matroid::new(&BitMatrix::identity(2), Some(vec![1, 1]));
        assert!(matches!(dup, Err(Error::DuplicateLabel(1))));
    }

    #[test]
    fn make_matroid_restandardizes() {
        // basis is columns 2 and 3
        let mm = m(&["0110", "0011"]);
        assert_eq!(mm.labels(), &[2, 3, 1, 4]);
        assert_eq!(mm.d_matrix().to_string(), "01\n01");
    }

    #[test]
    fn dual_is_involution() {
        for x in [f7(), p9(), e4(), ag32()] {
            let d = x.dual();
            assert_eq!(d.rank(), x.size() - x.rank());
            assert_eq!(d.ground_set(), x.ground_set());
            assert_eq!(d.dual(), x);
            let bx = bases(&x);
            let bd: BTreeSet<Subset> = bases(&d)
                .into_iter()
                .map(|b| x.ground_set().iter().filter(|l| !b.contains(*l)).collect())
                .collect();
            assert_eq!(bx, bd);
        }
    }

    #[test]
    fn remove_examples() {
        let p = p9();
        assert_eq!(p.remove(&Subset::new(), &Subset::new()).unwrap(), p);
        let c = ag32().remove(&Subset::new(), &s(&[8])).unwrap();
        assert_eq!((c.size(), c.rank()), (7, 3));
        // elimination oracle: rank of contraction = r(E) - r({8})
        assert_eq!(c.rank(), ag32().rank() - ag32().rank_of(&s(&[8])).unwrap());
        assert!(matches!(
            p.remove(&s(&[1]), &s(&[1])),
            Err(Error::Overlap(1))
        ));
        assert!(matches!(
            p.remove(&s(&[42]), &Subset::new()),
            Err(Error::UnknownLabel(42))
        ));
    }

    #[test]
    fn minor_rank_formula() {
        let x = e4();
        let all = x.ground_set();
        for dm in 0u64..16 {
            for cm in 0u64..16 {
                let d = x.subset_of(dm << 1);
                let c = x.subset_of(cm << 5);
                let minor = x.remove(&d, &c).unwrap();
                let rest: Subset = all.iter().filter(|l| !d.contains(*l)).collect();
                let expected = x.rank_of(&rest).unwrap() - x.rank_of(&c).unwrap();
                assert_eq!(minor.rank(), expected);
                assert_eq!(minor.size(), 10 - d.len() - c.len());
            }
        }
    }

    #[test]
    fn circuit_examples() {
        let p = p9();
        assert!(p.circuits().contains(&s(&[1, 2, 5, 6])));
        assert!(p.cocircuits().contains(&s(&[1, 2, 5, 6])));
        assert!(m(&["100", "010", "001"]).circuits().is_empty());
        let e = e4();
        let circ = e.circuits();
        assert!(circ.contains(&s(&[6, 7, 10])));
        assert!(circ.contains(&s(&[1, 2, 5, 10])));
        let coc = e.cocircuits();
        assert!(coc.contains(&s(&[5, 7, 10])));
        // {5,7,10} and {1,2,6,7} cover {1,2,5,6,7,10}; {1,2,6,10} is not a cocircuit
        assert!(coc.contains(&s(&[1, 2, 6, 7])));
        assert!(!coc.contains(&s(&[1, 2, 6, 10])));
        assert_eq!(e.cocircuits(), {
            let mut v = e.dual().circuits();
            v.sort();
            v
        });
    }

    #[test]
    fn circuits_are_antichain_in_cycle_space() {
        for x in [f7(), p9(), e4(), ag32()] {
            let circ = x.circuits();
            for a in &circ {
                for b in &circ {
                    assert!(a == b || !a.is_subset(b));
                }
                let mask = x.mask_of(a).unwrap();
                let sum = bits(mask).fold(0, |acc, j| acc ^ x.columns_raw()[j]);
                assert_eq!(sum, 0);
            }
        }
    }

    #[test]
    fn union_flag_examples() {
        let e = e4();
        assert_eq!(e.union_flags(&s(&[1, 2, 5, 6, 7, 10])).unwrap(), (true, true));
        assert!(!p9().union_flags(&s(&[3, 4, 7, 8])).unwrap().0);
        assert_eq!(e.union_flags(&Subset::new()).unwrap(), (true, true));
        assert!(e.union_flags(&s(&[99])).is_err());
    }

    #[test]
    fn union_flags_match_circuit_oracle() {
        for x in [p9(), e4(), ag32()] {
            let circ = x.circuits();
            let cocirc = x.cocircuits();
            for a in 0u64..1 << x.size() {
                let sub = x.subset_of(a);
                let covered = |list: &[Subset]| {
                    sub.iter()
                        .all(|l| list.iter().any(|c| c.contains(l) && c.is_subset(&sub)))
                };
                let (u, v) = x.union_flags(&sub).unwrap();
                assert_eq!(u, covered(&circ));
                assert_eq!(v, covered(&cocirc));
            }
        }
    }

    #[test]
    fn triangle_examples() {
        let (tri, triads) = e4().triangles_and_triads();
        assert!(tri.contains(&s(&[6, 7, 10])));
        assert!(triads.contains(&s(&[5, 7, 10])));
        let a = ag32();
        let brute = (0u64..1 << 8)
            .filter(|t| t.count_ones() == 3)
            .filter(|&t| bits(t).fold(0, |acc, j| acc ^ a.columns_raw()[j]) == 0)
            .count();
        assert_eq!(brute, 0);
        assert!(a.triangles_and_triads().0.is_empty());
    }

    #[test]
    fn simplicity_examples() {
        let s8 = m(&["1000 0111", "0100 1011", "0010 1101", "0001 1111"]);
        assert_eq!(s8.simplicity(), (true, true));
        let f = f7();
        let cols: Vec<u64> = f.columns_raw().to_vec();
        let distinct: BTreeSet<u64> = cols.iter().copied().collect();
        assert_eq!(distinct.len(), 7);
        assert_eq!(f.simplicity(), (true, true));
        let dup = m(&["10 1", "01 0"]);
        assert!(!dup.simplicity().0);
    }

    #[test]
    fn subset_parsing() {
        let a: Subset = "1,2,5,6".parse().unwrap();
        assert_eq!(a, s(&[1, 2, 5, 6]));
        assert_eq!(a.to_string(), "{1, 2, 5, 6}");
        assert!("1,x".parse::<Subset>().is_err());
        assert_eq!("{3, 4}".parse::<Subset>().unwrap(), s(&[3, 4]));
    }
}
