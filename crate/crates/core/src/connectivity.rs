//! Connectivity function, separations and the connectivity predicates built
//! on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::bits;
use crate::matroid::{Matroid, Subset};

/// Ground sets up to this size get a full rank table during enumeration.
const TABLE_LIMIT: usize = 22;

/// A partition `(A, B)` of the ground set together with its connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub side_a: Subset,
    pub side_b: Subset,
    pub order: usize,
    pub lambda_value: usize,
    pub exact: bool,
    pub minimal: bool,
}

impl Separation {
    /// Whether `lambda <= k - 1`, i.e. this really is a k-separation.
    pub fn is_separation(&self) -> bool {
        self.lambda_value + 1 <= self.order
    }
}

/// Memoized ranks of every subset of a small ground set.
pub(crate) struct RankTable<'a> {
    m: &'a Matroid,
    table: Option<Vec<u8>>,
}

impl<'a> RankTable<'a> {
    pub(crate) fn new(m: &'a Matroid) -> Self {
        let n = m.size();
        let table = (n <= TABLE_LIMIT).then(|| {
            let cols = m.columns_raw();
            (0u64..(1 << n))
                .map(|x| crate::gf2::rank_of_masks(bits(x).map(|j| cols[j])) as u8)
                .collect()
        });
        RankTable { m, table }
    }

    pub(crate) fn rank(&self, x: u64) -> usize {
        match &self.table {
            Some(t) => t[x as usize] as usize,
            None => self.m.rank_mask(x),
        }
    }

    pub(crate) fn lambda(&self, x: u64) -> usize {
        let all = self.m.ground_mask();
        self.rank(x) + self.rank(all & !x) - self.m.rank()
    }
}

pub(crate) fn lambda_mask(m: &Matroid, x: u64) -> usize {
    let all = m.ground_mask();
    m.rank_mask(x & all) + m.rank_mask(all & !x) - m.rank()
}

/// `r(X) + r(E - X) - r(M)`.
pub fn lambda(m: &Matroid, x: &Subset) -> Result<usize> {
    Ok(lambda_mask(m, m.mask_of(x)?))
}

/// Fills in a [`Separation`] for the partition `(a, E - a)` at order `k`.
pub fn classify_separation(m: &Matroid, a: &Subset, k: usize) -> Result<Separation> {
    let am = m.mask_of(a)?;
    let bm = m.ground_mask() & !am;
    let (na, nb) = (am.count_ones() as usize, bm.count_ones() as usize);
    if na < k || nb < k {
        return Err(Error::NotKSeparation { k, a: na, b: nb });
    }
    let lam = lambda_mask(m, am);
    let exact = lam + 1 == k;
    Ok(Separation {
        side_a: a.clone(),
        side_b: m.subset_of(bm),
        order: k,
        lambda_value: lam,
        exact,
        minimal: exact && (na == k || nb == k),
    })
}

/// No k-separation for any `k <= n - 1`. Equivalently every subset `X`
/// has `lambda(X) >= min(|X|, |E - X|, n - 1)`.
pub fn is_n_connected(m: &Matroid, n: usize) -> bool {
    assert!(n >= 2, "connectivity order must be at least 2");
    let size = m.size();
    let table = RankTable::new(m);
    let all = m.ground_mask();
    (0u64..=all).all(|x| {
        let sx = x.count_ones() as usize;
        let bound = sx.min(size - sx).min(n - 1);
        table.lambda(x) >= bound
    })
}

/// 3-connected, and `lambda(A) >= 3` whenever both sides have at least four
/// elements.
pub fn is_internally_4_connected(m: &Matroid) -> bool {
    if !is_n_connected(m, 3) {
        return false;
    }
    let size = m.size();
    let table = RankTable::new(m);
    (0u64..=m.ground_mask()).all(|x| {
        let sx = x.count_ones() as usize;
        sx < 4 || size - sx < 4 || table.lambda(x) >= 3
    })
}

/// `min { lambda(X) : a ⊆ X ⊆ E - b }`.
pub fn bridging_value(m: &Matroid, a: &Subset, b: &Subset) -> Result<usize> {
    let am = m.mask_of(a)?;
    let bm = m.mask_of(b)?;
    if am & bm != 0 {
        return Err(Error::Overlap(m.label_at((am & bm).trailing_zeros() as usize)));
    }
    Ok(bridging_mask(m, am, bm))
}

pub(crate) fn bridging_mask(m: &Matroid, am: u64, bm: u64) -> usize {
    let free: Vec<usize> = bits(m.ground_mask() & !am & !bm).collect();
    (0u64..1 << free.len())
        .map(|s| {
            let x = free
                .iter()
                .enumerate()
                .filter(|(k, _)| s >> k & 1 == 1)
                .fold(am, |acc, (_, &p)| acc | 1 << p);
            lambda_mask(m, x)
        })
        .min()
        .unwrap_or(0)
}

/// All exact 3-separations with both sides of size at least four, one per
/// complementary pair. The reported `side_a` is the lexicographically
/// smaller label list. With `require_unions`, only partitions whose reported
/// side is both a union of circuits and a union of cocircuits are kept.
pub fn nonminimal_exact_3seps(m: &Matroid, require_unions: bool) -> Vec<Separation> {
    let n = m.size();
    if n < 8 {
        return Vec::new();
    }
    let table = RankTable::new(m);
    let all = m.ground_mask();
    let last = 1u64 << (n - 1);
    let mut out = Vec::new();
    for x in 0..=all {
        if x & last != 0 {
            continue;
        }
        let sx = x.count_ones() as usize;
        if sx < 4 || n - sx < 4 || table.lambda(x) != 2 {
            continue;
        }
        let (sa, sb) = (m.subset_of(x), m.subset_of(all & !x));
        let (side_a, side_b, am) = if sa.to_vec() <= sb.to_vec() {
            (sa, sb, x)
        } else {
            (sb, sa, all & !x)
        };
        if require_unions
            && !(m.is_union_of_circuits_mask(am) && m.is_union_of_cocircuits_mask(am))
        {
            continue;
        }
        out.push(Separation {
            side_a,
            side_b,
            order: 3,
            lambda_value: 2,
            exact: true,
            minimal: false,
        });
    }
    out.sort_by(|p, q| p.side_a.to_vec().cmp(&q.side_a.to_vec()));
    out
}
