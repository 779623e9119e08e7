//! Acceptance criteria, one line each: `criterion N: pass|fail — detail`.
//!
//! Runs without the libtest harness so the lines are always printed; the
//! process exits non-zero if any criterion fails.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use binmat::catalog::{self, matroid};
use binmat::connectivity::{is_internally_4_connected, is_n_connected, lambda};
use binmat::extension::{
    coextend, coextension_candidates, enumerate_growth_classes, extend, extension_candidates, GrowthKind,
};
use binmat::isomorphism::IsoClass;
use binmat::structure::{has_minor, is_splitter, theorem21_check, ExclusionFilter, Overall};
use binmat::verify::{verify_paper, Status, VerificationReport};
use binmat::{are_isomorphic, canonical_key, BitVector, Label, Matroid, Subset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(verify_paper)
}

fn v(s: &str) -> BitVector {
    s.parse().unwrap()
}

fn gens(list: &[&str]) -> Vec<BitVector> {
    list.iter().map(|s| v(s)).collect()
}

fn members(classes: &[IsoClass], first: &str) -> Vec<BitVector> {
    classes
        .iter()
        .find(|c| c.members.contains(&v(first)))
        .map(|c| c.members.clone())
        .unwrap_or_default()
}

/// Prints the criterion line.
fn verdict(n: u32, ok: bool, elapsed: Duration, detail: &str) -> bool {
    let tag = if ok { "pass" } else { "fail" };
    println!("criterion {n}: {tag} — {detail} ({} ms)", elapsed.as_millis());
    ok
}

fn criterion_01_fano_dual_extensions() -> bool {
    let t = Instant::now();
    let f7s = matroid("F7*").unwrap();
    let classes = enumerate_growth_classes(&f7s, GrowthKind::Extension, None);
    let ag = classes.iter().find(|c| are_isomorphic(&c.representative, &matroid("AG(3,2)").unwrap()));
    let s8 = classes.iter().find(|c| are_isomorphic(&c.representative, &matroid("S8").unwrap()));
    let ag_ok = ag.map(|c| c.members == gens(&["[1110]"])).unwrap_or(false);
    let s8_count = s8.map_or(0, |c| c.size());
    let claim = report().claim("f7star.s8-generators").unwrap();
    let reported = claim.status == Status::Pass || (claim.status == Status::Discrepancy && s8_count != 5);
    let ok = classes.len() == 2 && ag_ok && s8_count == 7 && reported && t.elapsed() < Duration::from_secs(1);
    verdict(
        1,
        ok,
        t.elapsed(),
        &format!("{} classes, AG(3,2) from [1110] only, S8 from {s8_count} columns ({:?})", classes.len(), claim.status),
    )
}

fn criterion_02_claim1() -> bool {
    let t = Instant::now();
    let s8 = matroid("S8").unwrap();
    let filter = ExclusionFilter::new(vec![matroid("P9").unwrap(), matroid("P9*").unwrap()]);
    let ext: Vec<BitVector> = extension_candidates(&s8)
        .into_iter()
        .filter(|c| filter.admits(&extend(&s8, c).unwrap()))
        .collect();
    let co: Vec<BitVector> = coextension_candidates(&s8)
        .into_iter()
        .filter(|r| filter.admits(&coextend(&s8, r).unwrap()))
        .collect();
    let z4 = extend(&s8, &v("[1110]")).unwrap();
    let z4s = coextend(&s8, &v("[1110]")).unwrap();
    let a = Subset::from([1, 2, 5, 6]);
    let shifted = Subset::from([1, 2, 6, 7]);
    let rep = theorem21_check(&s8, &a, 3, &filter).unwrap();
    let ok = ext == gens(&["[1110]"])
        && co == gens(&["[1110]"])
        && are_isomorphic(&z4, &matroid("Z4").unwrap())
        && are_isomorphic(&z4s, &matroid("Z4*").unwrap())
        && lambda(&z4, &a).unwrap() == 2
        && lambda(&z4s, &shifted).unwrap() == 2
        && rep.overall == Overall::Induced;
    verdict(2, ok, t.elapsed(), "S8 in-class growth is Z4/Z4* via [1110]; λ{1,2,5,6} = λ{1,2,6,7} = 2; induced")
}

fn criterion_03_claim2() -> bool {
    let t = Instant::now();
    let p9 = matroid("P9").unwrap();
    let ext = enumerate_growth_classes(&p9, GrowthKind::Extension, None);
    let ext_ok = ext.len() == 3
        && members(&ext, "[1110]") == gens(&["[1110]"])
        && members(&ext, "[0101]") == gens(&["[0101]", "[0110]", "[1001]", "[1010]"])
        && members(&ext, "[0011]") == gens(&["[0011]"]);
    let co = enumerate_growth_classes(&p9, GrowthKind::Coextension, None);
    let bullets: [&[&str]; 8] = [
        &["[11000]", "[11111]"],
        &["[11011]", "[11100]"],
        &["[11001]", "[11101]"],
        &["[01001]", "[01010]", "[01101]", "[01110]", "[10001]", "[10010]", "[10101]", "[10110]"],
        &["[01011]", "[01100]", "[10011]", "[10100]"],
        &["[00101]", "[00110]"],
        &["[00111]"],
        &["[00011]"],
    ];
    let co_ok = co.len() == 8
        && co.iter().map(|c| c.size()).sum::<usize>() == 22
        && bullets.iter().all(|b| {
            let mut g = gens(b);
            g.sort();
            members(&co, b[0]) == g
        });
    let sizes: Vec<usize> = bullets.iter().map(|b| members(&co, b[0]).len()).collect();
    let shifted = Subset::from([1, 2, 6, 7]);
    let lambda_ok = [0, 1, 2, 5, 6, 7]
        .iter()
        .flat_map(|&i| gens(bullets[i]))
        .all(|row| lambda(&coextend(&p9, &row).unwrap(), &shifted).unwrap() == 2);
    let ok = ext_ok && co_ok && sizes == [2, 2, 2, 8, 4, 2, 1, 1] && lambda_ok && t.elapsed() < Duration::from_secs(5);
    verdict(3, ok, t.elapsed(), &format!("3 extension classes; 8 coextension classes of sizes {sizes:?}; λ{{1,2,6,7}} = 2"))
}

fn criterion_04_claim3() -> bool {
    let t = Instant::now();
    let e5 = matroid("E5").unwrap();
    let classes = enumerate_growth_classes(&e5, GrowthKind::Extension, None);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
    sizes.sort_unstable();
    let s10 = matroid("S10").unwrap();
    let s10s = matroid("S10*").unwrap();
    let all_s10 = classes.iter().all(|c| has_minor(&c.representative, &s10));
    let splitter = is_splitter(&e5, &[s10, s10s]).unwrap().splitter;
    // the listed generators, read in the representation they were computed in
    let listed = report().claims.iter().filter(|c| c.id.starts_with("claim3.ext")).all(|c| c.status == Status::Pass);
    let ok = classes.len() == 7
        && sizes == [1, 2, 2, 4, 4, 4, 4]
        && extension_candidates(&e5).len() == 21
        && all_s10
        && splitter
        && listed
        && is_internally_4_connected(&e5)
        && are_isomorphic(&e5, &e5.dual())
        && t.elapsed() < Duration::from_secs(30);
    verdict(4, ok, t.elapsed(), &format!("7 classes of sizes {sizes:?}; S10 in every extension; splitter {splitter}"))
}

fn criterion_05_e4_growth() -> bool {
    let t = Instant::now();
    let e4 = matroid("E4").unwrap();
    let filter = ExclusionFilter::new(vec![matroid("S10").unwrap(), matroid("S10*").unwrap()]);
    let check = |kind: GrowthKind, groups: &[(&[&str], Option<&str>)]| -> bool {
        let classes = enumerate_growth_classes(&e4, kind, Some(&filter));
        let total: usize = groups.iter().map(|(g, _)| g.len()).sum();
        classes.len() == groups.len()
            && classes.iter().map(|c| c.size()).sum::<usize>() == total
            && groups.iter().all(|(g, name)| {
                members(&classes, g[0]) == gens(g)
                    && name.map_or(true, |n| {
                        let c = classes.iter().find(|c| c.members.contains(&v(g[0]))).unwrap();
                        are_isomorphic(&c.representative, &matroid(n).unwrap())
                    })
            })
    };
    let ext = check(
        GrowthKind::Extension,
        &[(&["[00110]", "[10110]"], None), (&["[01111]", "[11100]"], None), (&["[11000]"], None), (&["[11011]"], Some("T12/e"))],
    );
    let co = check(
        GrowthKind::Coextension,
        &[(&["[00110]", "[10001]"], None), (&["[11001]", "[11100]"], None), (&["[11000]"], None), (&["[01010]"], Some("T12\\e"))],
    );
    let ok = ext && co && t.elapsed() < Duration::from_secs(30);
    verdict(5, ok, t.elapsed(), "E4 in-class growth {A:2, B:2, C:1, T12/e:1} and dually {A*:2, B*:2, C*:1, T12\\e:1}")
}

fn criterion_06_tables_1() -> bool {
    let t = Instant::now();
    let r = report();
    let cells: Vec<_> = r.claims.iter().filter(|c| c.id.starts_with("table1a.") || c.id.starts_with("table1b.")).collect();
    let lambda_cells = cells.iter().filter(|c| c.id.contains(".lambdaA")).count();
    let shifts = ["table1b.shifted-A1", "table1b.shifted-A2"]
        .iter()
        .all(|id| r.claim(id).map_or(false, |c| c.status == Status::Pass));
    let ok = lambda_cells == 20 && cells.iter().all(|c| c.status == Status::Pass) && shifts;
    verdict(6, ok, t.elapsed(), &format!("{lambda_cells} printed λ cells equal 2; shifted sides reproduced"))
}

fn criterion_07_tables_2() -> bool {
    let t = Instant::now();
    let r = report();
    let cells: Vec<_> = r
        .claims
        .iter()
        .filter(|c| c.id.starts_with("table2a.[") || c.id.starts_with("table2b.["))
        .collect();
    let pass = cells.iter().filter(|c| c.status == Status::Pass).count();
    let disc = cells.iter().filter(|c| c.status == Status::Discrepancy).count();
    let fails = cells.iter().filter(|c| c.status == Status::Fail).count();
    let both_values = cells
        .iter()
        .filter(|c| c.status == Status::Discrepancy)
        .all(|c| !c.expected.is_empty() && !c.computed.is_empty() && c.expected != c.computed);
    let core = ["claim4.c-bad-rows-disjoint", "claim4.bad-rows-disjoint", "table1.coupling", "table2.row-kinds", "claim4.corollary"]
        .iter()
        .all(|id| r.claim(id).map_or(false, |c| c.status == Status::Pass));
    let ok = cells.len() == 44 && fails == 0 && both_values && core && t.elapsed() < Duration::from_secs(60);
    verdict(
        7,
        ok,
        t.elapsed(),
        &format!("{} cells: {pass} match, {disc} discrepancies; C's bad rows disjoint; coupling holds", cells.len()),
    )
}

fn criterion_08_connectivity_flags() -> bool {
    let t = Instant::now();
    let flags: Vec<(&str, bool)> = ["S10", "E5", "T12", "S8", "P9", "E4"]
        .iter()
        .map(|n| (*n, is_internally_4_connected(&matroid(n).unwrap())))
        .collect();
    let expected = [true, true, true, false, false, false];
    let t12 = matroid("T12").unwrap();
    let ok = flags.iter().map(|f| f.1).eq(expected) && is_n_connected(&t12, 4);
    verdict(8, ok, t.elapsed(), &format!("internally 4-connected {flags:?}; T12 4-connected"))
}

fn criterion_09_splitter_escalation() -> bool {
    let t = Instant::now();
    let excluded = [matroid("S10").unwrap(), matroid("S10*").unwrap()];
    let t12 = is_splitter(&matroid("T12").unwrap(), &excluded).unwrap();
    let k33 = enumerate_growth_classes(&matroid("M*(K3,3)").unwrap(), GrowthKind::Extension, None);
    let single = k33.len() == 1 && are_isomorphic(&k33[0].representative, &matroid("S10").unwrap());
    let ok = t12.splitter && single && t.elapsed() < Duration::from_secs(30);
    verdict(9, ok, t.elapsed(), &format!("T12 splitter {} ({} children); M*(K3,3) has {} extension class ≅ S10", t12.splitter, t12.checked, k33.len()))
}

/// Rank by elimination over explicit column vectors, independent of the
/// library's bitmask code.
fn oracle_rank(columns: &[Vec<bool>]) -> usize {
    let mut rows: Vec<Vec<bool>> = columns.to_vec();
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len());
    for bit in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][bit]) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[bit] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

struct Oracle {
    labels: Vec<Label>,
    columns: Vec<Vec<bool>>,
}

impl Oracle {
    fn new(m: &Matroid) -> Self {
        let full = m.matrix();
        let columns = (0..m.size()).map(|j| (0..m.rank()).map(|i| full.get(i, j)).collect()).collect();
        Oracle { labels: m.labels().to_vec(), columns }
    }

    fn rank(&self, mask: u64) -> usize {
        let cols: Vec<Vec<bool>> = (0..self.labels.len()).filter(|j| mask >> j & 1 == 1).map(|j| self.columns[j].clone()).collect();
        oracle_rank(&cols)
    }

    fn lambda(&self, mask: u64) -> usize {
        let all = (1u64 << self.labels.len()) - 1;
        self.rank(mask) + self.rank(all & !mask) - self.rank(all)
    }

    fn subset(&self, mask: u64) -> Subset {
        (0..self.labels.len()).filter(|j| mask >> j & 1 == 1).map(|j| self.labels[j]).collect()
    }

    fn bases(&self, r: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0u64..1 << self.labels.len())
            .filter(|m| m.count_ones() as usize == r && self.rank(*m) == r)
            .map(|m| self.subset(m))
            .collect();
        out.sort();
        out
    }
}

fn criterion_10_properties() -> bool {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures: Vec<String> = Vec::new();
    for name in catalog::list() {
        let m = matroid(name).unwrap();
        let n = m.size();
        let oracle = Oracle::new(&m);
        let all = (1u64 << n) - 1;

        // λ against the oracle, symmetry and submodularity
        let sample: Vec<u64> = (0..300).map(|_| rng.gen::<u64>() & all).collect();
        for &x in &sample {
            let lx = lambda(&m, &oracle.subset(x)).unwrap();
            if lx != oracle.lambda(x) || lx != lambda(&m, &oracle.subset(all & !x)).unwrap() {
                failures.push(format!("{name}: λ{} mismatch", oracle.subset(x)));
            }
        }
        for pair in sample.chunks(2) {
            let (x, y) = (pair[0], pair[1]);
            if oracle.lambda(x) + oracle.lambda(y) < oracle.lambda(x | y) + oracle.lambda(x & y) {
                failures.push(format!("{name}: submodularity"));
            }
            let l = |s: u64| lambda(&m, &oracle.subset(s)).unwrap();
            if l(x) + l(y) < l(x | y) + l(x & y) {
                failures.push(format!("{name}: submodularity (library)"));
            }
        }

        // duality is an involution and complements bases
        let dual = m.dual();
        if dual.dual() != m {
            failures.push(format!("{name}: dual is not an involution"));
        }
        if n <= 15 {
            let ground = m.ground_set();
            let mut complements: Vec<Subset> = oracle
                .bases(m.rank())
                .iter()
                .map(|b| ground.iter().filter(|l| !b.contains(*l)).collect())
                .collect();
            complements.sort();
            if complements != Oracle::new(&dual).bases(dual.rank()) {
                failures.push(format!("{name}: dual bases are not complements"));
            }
        }

        // round trips through growth and removal
        if let Some(c) = extension_candidates(&m).first() {
            let child = extend(&m, c).unwrap();
            if child.delete(child.max_label()).unwrap().circuits() != m.circuits() {
                failures.push(format!("{name}: extend/delete"));
            }
        }
        if let Some(row) = coextension_candidates(&m).first() {
            let r = m.rank() as Label;
            let child = coextend(&m, row).unwrap();
            let back = child.contract(r + 1).unwrap().relabel(|l| if l > r + 1 { l - 1 } else { l }).unwrap();
            if back.circuits() != m.circuits() {
                failures.push(format!("{name}: coextend/contract"));
            }
        }

        // canonical keys ignore labels and column order
        let key = canonical_key(&m);
        for _ in 0..100 {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut names: Vec<Label> = (1..=n as Label + 5).collect();
            names.shuffle(&mut rng);
            let shuffled = m.permute_columns(&order);
            let renamed = shuffled.relabel(|l| names[l as usize - 1]).unwrap();
            if canonical_key(&renamed) != key {
                failures.push(format!("{name}: key changed under relabeling"));
                break;
            }
        }
    }
    let ok = failures.is_empty();
    verdict(10, ok, t.elapsed(), &format!("{} catalog matroids; failures: {failures:?}", catalog::list().len()))
}

fn main() {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_fano_dual_extensions,
        criterion_02_claim1,
        criterion_03_claim2,
        criterion_04_claim3,
        criterion_05_e4_growth,
        criterion_06_tables_1,
        criterion_07_tables_2,
        criterion_08_connectivity_flags,
        criterion_09_splitter_escalation,
        criterion_10_properties,
    ];
    let t = Instant::now();
    let r = report();
    println!("verification report: {} claims in {} ms", r.claims.len(), t.elapsed().as_millis());
    let failed = criteria.iter().filter(|c| !c()).count();
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
