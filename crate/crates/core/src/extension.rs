//! Single-element extensions and coextensions in standard form.
//!
//! An extension `[I_r | D c]` appends a column `c`; the new element is
//! labeled one past the largest label. A coextension
//! `[I_{r+1} | D'']` appends a row to `D` and a new identity column in
//! position `r + 1`; the new element gets label `r + 1` and every label
//! above `r` moves up by one.
//!
//! Vectors use bracket notation: coordinate `i` of an extension column is
//! row `i`, coordinate `j` of a coextension row is the `j`-th column of `D`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{bits, BitVector};
use crate::isomorphism::{partition_into_classes, IsoClass};
use crate::matroid::{Label, Matroid};
use crate::structure::ExclusionFilter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthKind {
    Extension,
    Coextension,
}

impl GrowthKind {
    pub fn dual(self) -> GrowthKind {
        match self {
            GrowthKind::Extension => GrowthKind::Coextension,
            GrowthKind::Coextension => GrowthKind::Extension,
        }
    }
}

/// One extension or coextension step, kept with both ends.
#[derive(Debug, Clone)]
pub struct GrowthStep {
    pub kind: GrowthKind,
    pub vector: BitVector,
    pub parent: Matroid,
    pub child: Matroid,
    pub new_label: Label,
}

impl GrowthStep {
    pub fn new(parent: &Matroid, kind: GrowthKind, vector: &BitVector) -> Result<GrowthStep> {
        let child = match kind {
            GrowthKind::Extension => extend(parent, vector)?,
            GrowthKind::Coextension => coextend(parent, vector)?,
        };
        let new_label = new_label(parent, kind);
        Ok(GrowthStep {
            kind,
            vector: vector.clone(),
            parent: parent.clone(),
            child,
            new_label,
        })
    }

    /// Parent labels as they appear in the child.
    pub fn shift(&self, label: Label) -> Label {
        match self.kind {
            GrowthKind::Extension => label,
            GrowthKind::Coextension => coextension_shift(&self.parent, label),
        }
    }
}

/// The label the new element receives.
pub fn new_label(parent: &Matroid, kind: GrowthKind) -> Label {
    match kind {
        GrowthKind::Extension => parent.max_label() + 1,
        GrowthKind::Coextension => parent.rank() as Label + 1,
    }
}

/// Where a parent label ends up after a coextension.
pub fn coextension_shift(parent: &Matroid, label: Label) -> Label {
    if label > parent.rank() as Label {
        label + 1
    } else {
        label
    }
}

/// Nonzero vectors of length `len` with at least two ones and not in
/// `existing`, ascending in bracket order.
fn candidates(len: usize, existing: &[u64]) -> Vec<BitVector> {
    assert!(len < 32, "candidate enumeration beyond desk scale");
    (1u64..1 << len)
        .map(|v| BitVector::from_bracket_value(len, v))
        .filter(|v| v.weight() >= 2 && !existing.contains(&v.to_mask()))
        .collect()
}

/// Columns that give simple single-element extensions.
pub fn extension_candidates(m: &Matroid) -> Vec<BitVector> {
    candidates(m.rank(), m.columns_raw())
}

/// Rows that give cosimple single-element coextensions.
pub fn coextension_candidates(m: &Matroid) -> Vec<BitVector> {
    let rows: Vec<u64> = m.rows_raw().iter().map(|&r| r >> m.rank()).collect();
    candidates(m.corank(), &rows)
}

fn check_candidate(kind: &'static str, v: &BitVector, len: usize, valid: &[BitVector]) -> Result<()> {
    if v.len() != len {
        return Err(Error::VectorLength { expected: len, got: v.len() });
    }
    if !valid.contains(v) {
        return Err(Error::InvalidCandidate { kind, vector: v.to_string() });
    }
    Ok(())
}

/// Appends `col` as a new element.
pub fn extend(m: &Matroid, col: &BitVector) -> Result<Matroid> {
    check_candidate("extension", col, m.rank(), &extension_candidates(m))?;
    let n = m.size();
    let c = col.to_mask();
    let rows = m
        .rows_raw()
        .iter()
        .enumerate()
        .map(|(i, &r)| r | (c >> i & 1) << n)
        .collect();
    let mut labels = m.labels().to_vec();
    labels.push(new_label(m, GrowthKind::Extension));
    Ok(Matroid::from_standard_rows(rows, labels))
}

/// Appends `row` to `D` together with a new identity column.
pub fn coextend(m: &Matroid, row: &BitVector) -> Result<Matroid> {
    check_candidate("coextension", row, m.corank(), &coextension_candidates(m))?;
    let r = m.rank();
    let low = (1u64 << r) - 1;
    let mut rows: Vec<u64> = m
        .rows_raw()
        .iter()
        .map(|&x| (x & low) | (x & !low) << 1)
        .collect();
    rows.push(1 << r | row.to_mask() << (r + 1));
    let mut labels: Vec<Label> = m.labels()[..r]
        .iter()
        .map(|&l| coextension_shift(m, l))
        .collect();
    labels.push(new_label(m, GrowthKind::Coextension));
    labels.extend(m.labels()[r..].iter().map(|&l| coextension_shift(m, l)));
    let child = Matroid::from_standard_rows(rows, labels);
    // the new element and the support of its row form a cocircuit
    debug_assert!({
        let f = 1u64 << r;
        let star = bits(row.to_mask()).fold(f, |a, j| a | 1 << (r + 1 + j));
        child.cocircuit_masks().contains(&star)
    });
    Ok(child)
}

/// All growth steps of one kind, in candidate order, computed in parallel.
pub fn growth_steps(m: &Matroid, kind: GrowthKind) -> Vec<GrowthStep> {
    let cands = match kind {
        GrowthKind::Extension => extension_candidates(m),
        GrowthKind::Coextension => coextension_candidates(m),
    };
    cands
        .par_iter()
        .map(|v| GrowthStep::new(m, kind, v).expect("enumerated candidates are valid"))
        .collect()
}

/// Groups the simple extensions (or cosimple coextensions) of `m` into
/// isomorphism classes, dropping children that a filter rejects.
pub fn enumerate_growth_classes(
    m: &Matroid,
    kind: GrowthKind,
    filter: Option<&ExclusionFilter>,
) -> Vec<IsoClass> {
    let steps = growth_steps(m, kind);
    let kept: Vec<(BitVector, Matroid)> = steps
        .into_par_iter()
        .filter(|s| filter.is_none_or(|f| f.admits(&s.child)))
        .map(|s| (s.vector, s.child))
        .collect();
    partition_into_classes(kept)
}

/// Which of the three kinds of second-step rows a candidate row is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// The row without its last entry is itself a coextension row of the
    /// parent.
    AppendedParentRow,
    /// A unit vector followed by a 1.
    IdentityRow,
    /// A row of the parent's `D` with the new column's entry reversed.
    InSeriesRow,
    /// None of the above.
    Outside,
}

/// Tags a coextension row of `type_i = extend(parent, c)`, whose last
/// coordinate belongs to the new element `e_label`.
pub fn classify_second_step_row(
    type_i: &Matroid,
    parent: &Matroid,
    e_label: Label,
    row: &BitVector,
) -> Result<RowKind> {
    let well_formed = type_i.size() == parent.size() + 1
        && type_i.labels().last() == Some(&e_label)
        && type_i.delete(e_label).ok().as_ref() == Some(parent);
    if !well_formed {
        return Err(Error::Precondition(format!(
            "matroid is not an extension of the parent by element {e_label}"
        )));
    }
    check_candidate("coextension", row, type_i.corank(), &coextension_candidates(type_i))?;
    let (head, last) = row.split_last().expect("rows have positive length");
    let e_column = type_i.columns_raw()[type_i.size() - 1];
    let parent_rows = parent.d_rows();
    if let Some(i) = parent_rows.iter().position(|d| *d == head) {
        return Ok(if last != (e_column >> i & 1 == 1) {
            RowKind::InSeriesRow
        } else {
            RowKind::Outside
        });
    }
    if head.weight() == 1 && last {
        return Ok(RowKind::IdentityRow);
    }
    if coextension_candidates(parent).contains(&head) {
        return Ok(RowKind::AppendedParentRow);
    }
    Ok(RowKind::Outside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_n_connected;
    use crate::gf2::BitMatrix;
    use crate::isomorphism::are_isomorphic;
    use crate::matroid::Subset;

    fn m(rows: &[&str]) -> Matroid {
        Matroid::new(&BitMatrix::from_rows(rows).unwrap(), None).unwrap()
    }

    fn v(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn f7() -> Matroid {
        m(&["100 0111", "010 1011", "001 1101"])
    }

    fn p9() -> Matroid {
        m(&["1000 01111", "0100 10111", "0010 11010", "0001 11110"])
    }

    fn e4() -> Matroid {
        m(&["10000 01111", "01000 10111", "00100 11010", "00010 11110", "00001 01001"])
    }

    #[test]
    fn candidate_examples() {
        let f7s = f7().dual();
        let c = extension_candidates(&f7s);
        assert_eq!(c.len(), 8);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(c[0], v("[0011]"));
        assert!(extension_candidates(&f7()).is_empty());
        assert_eq!(extension_candidates(&p9()).len(), 6);
        assert_eq!(coextension_candidates(&p9()).len(), 22);
        assert_eq!(coextension_candidates(&f7()), extension_candidates(&f7s));
        assert!(coextension_candidates(&e4()).contains(&v("[11000]")));
    }

    #[test]
    fn extend_round_trip_and_labels() {
        let child = extend(&p9(), &v("[1110]")).unwrap();
        assert_eq!(child.labels().last(), Some(&10));
        assert_eq!(child.column(10).unwrap(), v("[1110]"));
        assert_eq!(child.delete(10).unwrap(), p9());
        assert!(matches!(extend(&p9(), &v("[0111]")), Err(Error::InvalidCandidate { .. })));
        assert!(matches!(extend(&p9(), &v("[011]")), Err(Error::VectorLength { .. })));
    }

    #[test]
    fn coextend_shifts_labels() {
        let child = coextend(&p9(), &v("[01011]")).unwrap();
        assert_eq!(child.labels(), &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(child.rank(), 5);
        // the old element 5 is now 6 and keeps its column
        assert_eq!(child.column(6).unwrap(), v("[01110]"));
        let back = child.contract(5).unwrap().relabel(|l| if l > 5 { l - 1 } else { l }).unwrap();
        assert_eq!(back, p9());
        assert!(child.cocircuits().contains(&Subset::from([5, 7, 9, 10])));
        let e5 = m(&["10000 01111", "01000 10111", "00100 11010", "00010 11110", "00001 10100"]);
        assert!(are_isomorphic(&child, &e5));
    }

    #[test]
    fn e4_growth_examples() {
        let t12 = m(&[
            "100000 110001",
            "010000 100011",
            "001000 000111",
            "000100 001110",
            "000010 011100",
            "000001 111000",
        ]);
        let t12_contract = extend(&e4(), &v("[11011]")).unwrap();
        let t12_delete = coextend(&e4(), &v("[01010]")).unwrap();
        let by_contraction = (1..=12).any(|l| are_isomorphic(&t12.contract(l).unwrap(), &t12_contract));
        let by_deletion = (1..=12).any(|l| are_isomorphic(&t12.delete(l).unwrap(), &t12_delete));
        assert!(by_contraction && by_deletion);
    }

    #[test]
    fn p9_extension_classes() {
        let classes = enumerate_growth_classes(&p9(), GrowthKind::Extension, None);
        let members: Vec<Vec<BitVector>> = classes.iter().map(|c| c.members.clone()).collect();
        assert_eq!(
            members,
            vec![
                vec![v("[0011]")],
                vec![v("[0101]"), v("[0110]"), v("[1001]"), v("[1010]")],
                vec![v("[1110]")],
            ]
        );
    }

    #[test]
    fn children_of_3_connected_are_3_connected() {
        for parent in [p9(), e4(), f7().dual()] {
            for kind in [GrowthKind::Extension, GrowthKind::Coextension] {
                for s in growth_steps(&parent, kind) {
                    assert!(is_n_connected(&s.child, 3), "{:?} {}", kind, s.vector);
                }
            }
        }
    }

    #[test]
    fn second_step_rows() {
        let a = extend(&e4(), &v("[10110]")).unwrap();
        let kind = |s: &str| classify_second_step_row(&a, &e4(), 11, &v(s)).unwrap();
        assert_eq!(kind("[001101]"), RowKind::AppendedParentRow);
        assert_eq!(kind("[110100]"), RowKind::InSeriesRow);
        assert_eq!(kind("[001001]"), RowKind::IdentityRow);
        for row in coextension_candidates(&a) {
            assert_ne!(classify_second_step_row(&a, &e4(), 11, &row).unwrap(), RowKind::Outside);
        }
        assert!(classify_second_step_row(&e4(), &p9(), 10, &v("[11000]")).is_err());
    }
}
