//! Brute-force checks on finite windows.
//!
//! Nothing here reads the hammocks or the symbolic closure checks: Hom
//! spaces come straight from the crossing/rotation description, perpendicular
//! categories and extension closures are computed arc by arc, and the
//! partition enumerations are filtered out of all set partitions.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arcsets::{is_cot_aisle, is_t_aisle, FinArcSet, Side, SymArcSet};
use crate::gon::{crosses, enumerate_window, Arc, GonConfig, Model, Point};
use crate::hom::{hom_dim, middle_term, shift_arc};
use crate::ncp::{
    enumerate_alt, enumerate_hd, enumerate_ncp, kreweras, kreweras_inverse, nc_join, nc_leq, nc_meet, validate_alt,
    validate_hd, AltNcp, Decoration, NcPartition,
};
use crate::torsion::{alt_from_cot_aisle, cot_aisle, cot_coaisle, hd_from_aisle, t_aisle, t_coaisle, thick_classify};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub witness: String,
}

/// Outcome of a verification suite; it passes when `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), instances: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, instance: impl ToString, witness: impl ToString) {
        self.failures.push(Failure { instance: instance.to_string(), witness: witness.to_string() });
    }

    /// Appends `other`'s counts and failures; the suite name of `self` wins.
    pub fn merge(mut self, other: Report) -> Report {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "instances": self.instances,
            "pass": self.passed(),
            "failures": self.failures,
        })
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        s.push_str("suite        instances  failures  verdict\n");
        let _ = writeln!(s, "{:<12} {:>9} {:>9}  {}", self.suite, self.instances, self.failures.len(), verdict);
        for f in self.failures.iter().take(20) {
            let _ = writeln!(s, "  {}: {}", f.instance, f.witness);
        }
        if self.failures.len() > 20 {
            let _ = writeln!(s, "  ... {} more", self.failures.len() - 20);
        }
        s
    }
}

fn cyclic(a: Point, b: Point, c: Point) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

/// `Hom(x, Σy) ≠ 0`, clause by clause: the arcs cross; or they share exactly
/// one blob `z` and `y` is reached by turning `x` anticlockwise (increasing
/// positions) about `z`; or they share both endpoints and both are blobs.
fn hom_to_shift(x: &Arc, y: &Arc) -> bool {
    if crosses(x, y) {
        return true;
    }
    if x.model == Model::TwoM {
        return false;
    }
    if x == y {
        return x.x1.is_blob() && x.x2.is_blob();
    }
    for z in x.endpoints() {
        if !z.is_blob() || !y.endpoints().contains(&z) {
            continue;
        }
        let w = if x.x1 == z { x.x2 } else { x.x1 };
        let w2 = if y.x1 == z { y.x2 } else { y.x1 };
        return cyclic(z, w, w2);
    }
    false
}

/// `dim Hom(a, b)` as `Hom(a, Σ(Σ⁻¹b))`.
pub fn brute_hom(a: &Arc, b: &Arc) -> u8 {
    u8::from(hom_to_shift(a, &shift_arc(b, -1)))
}

#[derive(Clone, Debug)]
pub struct HomTable {
    pub arcs: Vec<Arc>,
    pub dims: Vec<Vec<u8>>,
    /// Pairs on which the hammock description disagrees with the table.
    pub discrepancies: Vec<(Arc, Arc)>,
}

pub fn brute_hom_table(cfg: &GonConfig, w: i64, model: Model) -> HomTable {
    let arcs = enumerate_window(cfg, w, model);
    let dims: Vec<Vec<u8>> = arcs.iter().map(|a| arcs.iter().map(|b| brute_hom(a, b)).collect()).collect();
    let mut discrepancies = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        for (j, b) in arcs.iter().enumerate() {
            if dims[i][j] != hom_dim(cfg, a, b) {
                discrepancies.push((*a, *b));
            }
        }
    }
    HomTable { arcs, dims, discrepancies }
}

pub fn brute_perp(cfg: &GonConfig, x: &FinArcSet, w: i64, side: Side) -> FinArcSet {
    let arcs = enumerate_window(cfg, w, x.arcs.iter().next().map_or(Model::Bar, |a| a.model));
    FinArcSet::new(
        w,
        arcs.into_iter().filter(|t| {
            x.arcs.iter().all(|a| match side {
                Side::Right => brute_hom(a, t) == 0,
                Side::Left => brute_hom(t, a) == 0,
            })
        }),
    )
}

/// Window arcs with their Hom matrix and the middle terms of every
/// extension between them, computed once and shared by all instances.
pub struct Window {
    pub cfg: GonConfig,
    pub w: i64,
    pub arcs: Vec<Arc>,
    index: HashMap<Arc, usize>,
    hom: Vec<Vec<bool>>,
    /// For each `a`: the `b` with `Hom(b, Σa) ≠ 0` and the window summands of
    /// the middle term of `a → e → b → Σa`.
    ext: Vec<Vec<(usize, Vec<usize>)>>,
    /// The same extensions listed by `b`: entries `(a, k)` point at `ext[a][k]`.
    ext_in: Vec<Vec<(usize, usize)>>,
}

impl Window {
    pub fn new(cfg: &GonConfig, w: i64, model: Model) -> Self {
        let arcs = enumerate_window(cfg, w, model);
        let index: HashMap<Arc, usize> = arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let hom = arcs.iter().map(|a| arcs.iter().map(|b| brute_hom(a, b) == 1).collect()).collect();
        let ext = arcs
            .par_iter()
            .map(|a| {
                let sa = shift_arc(a, 1);
                arcs.iter()
                    .enumerate()
                    .filter(|(_, b)| brute_hom(b, &sa) == 1)
                    .map(|(j, b)| {
                        let mids = middle_term(cfg, a, b).unwrap_or_default();
                        (j, mids.iter().filter_map(|e| index.get(e).copied()).collect())
                    })
                    .collect()
            })
            .collect::<Vec<Vec<(usize, Vec<usize>)>>>();
        let mut ext_in = vec![Vec::new(); arcs.len()];
        for (a, list) in ext.iter().enumerate() {
            for (k, (b, _)) in list.iter().enumerate() {
                ext_in[*b].push((a, k));
            }
        }
        Window { cfg: *cfg, w, arcs, index, hom, ext, ext_in }
    }

    pub fn index_of(&self, a: &Arc) -> Option<usize> {
        self.index.get(a).copied()
    }

    fn members(&self, x: &SymArcSet) -> Vec<bool> {
        self.arcs.iter().map(|a| x.member(a)).collect()
    }

    fn interior(&self, a: &Arc) -> bool {
        a.endpoints().iter().all(|p| p.pos().map_or(true, |n| n.abs() <= self.w - 2))
    }

    /// Least extension-closed superset of `f` inside the window.
    pub fn closure(&self, f: &FinArcSet) -> FinArcSet {
        let mut inside = vec![false; self.arcs.len()];
        let mut queue: Vec<usize> = f.arcs.iter().filter_map(|a| self.index_of(a)).collect();
        for &i in &queue {
            inside[i] = true;
        }
        let mut done = vec![false; self.arcs.len()];
        while let Some(i) = queue.pop() {
            done[i] = true;
            let mut found = Vec::new();
            for (b, mids) in &self.ext[i] {
                if done[*b] {
                    found.extend(mids.iter().copied());
                }
            }
            for &(a, k) in &self.ext_in[i] {
                if done[a] {
                    found.extend(self.ext[a][k].1.iter().copied());
                }
            }
            for e in found {
                if !inside[e] {
                    inside[e] = true;
                    queue.push(e);
                }
            }
        }
        FinArcSet::new(self.w, self.arcs.iter().zip(&inside).filter(|(_, &m)| m).map(|(a, _)| *a))
    }

    /// Hom-vanishing on every window pair, and every interior arc lying in
    /// `X ∗ Y`.
    ///
    /// Membership in `X ∗ Y` is grown from `X ∪ Y` by taking summands of
    /// middle terms in `X ∗ C` and `C ∗ Y`, where `C` is what has been
    /// reached so far. Both steps stay inside `X ∗ Y` because `X` and `Y` are
    /// extension-closed, and summands are allowed because `X ∗ Y` is closed
    /// under summands once `Hom(X, Y) = 0`. Iterating is needed when the
    /// truncation of an arc has a decomposable end.
    pub fn verify_torsion(&self, label: &str, x: &SymArcSet, y: &SymArcSet) -> Report {
        let mut report = Report::new("torsion");
        report.instances = 1;
        let (in_x, in_y) = (self.members(x), self.members(y));
        for i in (0..self.arcs.len()).filter(|&i| in_x[i]) {
            if let Some(j) = (0..self.arcs.len()).find(|&j| in_y[j] && self.hom[i][j]) {
                report.fail(label, format!("Hom({}, {}) ≠ 0", self.arcs[i], self.arcs[j]));
                return report;
            }
        }
        let mut covered: Vec<bool> = in_x.iter().zip(&in_y).map(|(a, b)| *a || *b).collect();
        loop {
            let mut fresh = Vec::new();
            for i in 0..self.arcs.len() {
                if in_x[i] {
                    fresh.extend(self.ext[i].iter().filter(|(c, _)| covered[*c]).flat_map(|(_, mids)| mids));
                }
                if in_y[i] {
                    let from_covered = self.ext_in[i].iter().filter(|(c, _)| covered[*c]);
                    fresh.extend(from_covered.flat_map(|&(c, k)| &self.ext[c][k].1));
                }
            }
            let before = covered.iter().filter(|&&c| c).count();
            for &e in fresh {
                covered[e] = true;
            }
            if covered.iter().filter(|&&c| c).count() == before {
                break;
            }
        }
        if let Some(t) = (0..self.arcs.len()).find(|&t| !covered[t] && self.interior(&self.arcs[t])) {
            report.fail(label, format!("{} has no decomposition", self.arcs[t]));
        }
        report
    }
}

pub fn ptolemy_closure(cfg: &GonConfig, f: &FinArcSet, w: i64) -> FinArcSet {
    let model = f.arcs.iter().next().map_or(Model::Bar, |a| a.model);
    Window::new(cfg, w, model).closure(f)
}

pub fn verify_torsion(cfg: &GonConfig, x: &SymArcSet, y: &SymArcSet, w: i64) -> Report {
    Window::new(cfg, w, x.model()).verify_torsion("(X, Y)", x, y)
}

/// Every (co-)t-structure with regular decorations in `[lo, hi]`, verified
/// on one shared window.
pub fn verify_torsion_suite(cfg: &GonConfig, lo: i64, hi: i64, w: i64) -> Report {
    let win = Window::new(cfg, w, Model::Bar);
    let hd = enumerate_hd(cfg, lo, hi);
    let alt = enumerate_alt(cfg, lo, hi);
    let t_reports = hd.par_iter().map(|d| {
        let label = d.to_json(cfg).to_string();
        win.verify_torsion(&label, &t_aisle(cfg, d).unwrap(), &t_coaisle(cfg, d).unwrap())
    });
    let cot_reports = alt.par_iter().map(|d| {
        let label = d.to_json(cfg).to_string();
        win.verify_torsion(&label, &cot_aisle(cfg, d).unwrap(), &cot_coaisle(cfg, d).unwrap())
    });
    t_reports.chain(cot_reports).collect::<Vec<_>>().into_iter().fold(Report::new("torsion"), Report::merge)
}

/// Round trips between decorated partitions and aisles, then the converse
/// direction on every constructed candidate set that passes the aisle test.
pub fn verify_roundtrip(cfg: &GonConfig, lo: i64, hi: i64) -> Report {
    let mut report = Report::new("roundtrip");
    let hds = enumerate_hd(cfg, lo, hi);
    let alts = enumerate_alt(cfg, lo, hi);
    let mut candidates = Vec::new();
    for d in &hds {
        report.instances += 1;
        let x = t_aisle(cfg, d).unwrap();
        match hd_from_aisle(cfg, &x) {
            Ok(back) if back == *d => {}
            other => report.fail(d.to_json(cfg), format!("decoded as {other:?}")),
        }
        candidates.push(t_coaisle(cfg, d).unwrap());
        candidates.push(x);
    }
    for d in &alts {
        report.instances += 1;
        let x = cot_aisle(cfg, d).unwrap();
        match alt_from_cot_aisle(cfg, &x) {
            Ok(back) if back == *d => {}
            other => report.fail(d.to_json(cfg), format!("decoded as {other:?}")),
        }
        candidates.push(cot_coaisle(cfg, d).unwrap());
        candidates.push(x);
    }
    let shifted: Vec<SymArcSet> = candidates.iter().flat_map(|x| [x.shift_set(1), x.shift_set(-1)]).collect();
    candidates.extend(shifted);
    for x in &candidates {
        if is_t_aisle(cfg, x).unwrap() {
            report.instances += 1;
            match hd_from_aisle(cfg, x).map(|d| t_aisle(cfg, &d)) {
                Ok(Ok(y)) if y == *x => {}
                other => report.fail(x.to_json(), format!("rebuilt as {other:?}")),
            }
        }
        if is_cot_aisle(cfg, x).unwrap() {
            report.instances += 1;
            match alt_from_cot_aisle(cfg, x).map(|d| cot_aisle(cfg, &d)) {
                Ok(Ok(y)) if y == *x => {}
                other => report.fail(x.to_json(), format!("rebuilt as {other:?}")),
            }
        }
    }
    report
}

/// Far enough out that every cut of a constructed set is passed.
const FAR_SHIFT: i64 = 1 << 20;

/// Boundedness and non-degeneracy read off the sets themselves.
///
/// Aisles and co-aisles are monotone under the shift, so `⋃ ΣⁿX` and
/// `⋂ ΣⁿX` are decided by pushing an arc far out in both directions; arcs
/// near the origin represent every shape up to shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LimitFlags {
    pub left_bounded: bool,
    pub right_bounded: bool,
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
}

pub fn limit_flags(cfg: &GonConfig, x: &SymArcSet, y: &SymArcSet) -> LimitFlags {
    let arcs = enumerate_window(cfg, 3, x.model());
    let far = |s: &SymArcSet, t: &Arc| (s.member(&shift_arc(t, FAR_SHIFT)), s.member(&shift_arc(t, -FAR_SHIFT)));
    let everything = |s: &SymArcSet| {
        arcs.iter().all(|t| {
            let (a, b) = far(s, t);
            a || b
        })
    };
    let nothing = |s: &SymArcSet| {
        !arcs.iter().any(|t| {
            let (a, b) = far(s, t);
            a && b
        })
    };
    LimitFlags {
        left_bounded: everything(x),
        right_bounded: everything(y),
        left_nondegenerate: nothing(x),
        right_nondegenerate: nothing(y),
    }
}

/// All set partitions of `{1..k}` via restricted growth strings.
pub fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(e: usize, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if e > k {
            out.push(cur.clone());
            return;
        }
        for b in 0..=cur.len() {
            if b == cur.len() {
                cur.push(vec![e]);
            } else {
                cur[b].push(e);
            }
            go(e + 1, k, cur, out);
            if cur[b].len() == 1 {
                cur.pop();
            } else {
                cur[b].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(1, k, &mut Vec::new(), &mut out);
    out
}

/// Whether some `a < b < c < d` has `a, c` in one block and `b, d` in another.
fn has_crossing(blocks: &[Vec<usize>]) -> bool {
    let k: usize = blocks.iter().map(Vec::len).sum();
    let mut owner = vec![0; k + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &e in b {
            owner[e] = i;
        }
    }
    (1..=k).any(|a| {
        (a + 1..=k).any(|b| {
            owner[b] != owner[a]
                && (b + 1..=k).any(|c| owner[c] == owner[a] && (c + 1..=k).any(|d| owner[d] == owner[b]))
        })
    })
}

pub fn nc_partitions_by_filter(k: usize) -> Vec<NcPartition> {
    let mut out: Vec<NcPartition> = set_partitions(k)
        .into_iter()
        .filter(|b| !has_crossing(b))
        .map(|b| NcPartition::from_blocks(k, b).expect("set partitions are partitions"))
        .collect();
    out.sort();
    out
}

/// Refinement read straight off the blocks.
fn refines(p: &NcPartition, q: &NcPartition) -> bool {
    p.blocks().iter().all(|b| b.iter().all(|&e| q.same_block(b[0], e)))
}

/// Lattice laws on `NC(k)` against the enumeration: meets and joins are the
/// greatest lower and least upper bounds, the usual identities hold, and the
/// Kreweras complement turns joins into meets.
pub fn verify_lattice(k: usize) -> Report {
    let mut report = Report::new("lattice");
    let all = enumerate_ncp(k);
    let n = all.len();
    let idx: HashMap<&NcPartition, usize> = all.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let leq: Vec<Vec<bool>> = all.iter().map(|p| all.iter().map(|q| refines(p, q)).collect()).collect();
    let table = |op: fn(&NcPartition, &NcPartition) -> Result<NcPartition, crate::ncp::NcpError>| -> Vec<Vec<usize>> {
        all.iter().map(|p| all.iter().map(|q| idx[&op(p, q).expect("same ground set")]).collect()).collect()
    };
    let (meet, join) = (table(nc_meet), table(nc_join));
    let kr: Vec<usize> = all.iter().map(|p| idx[&kreweras(p)]).collect();
    let name = |i: usize| all[i].to_string();
    for i in 0..n {
        report.instances += 1;
        if kreweras_inverse(&all[kr[i]]) != all[i] {
            report.fail(name(i), "kreweras_inverse does not undo kreweras");
        }
        if meet[i][i] != i || join[i][i] != i {
            report.fail(name(i), "not idempotent");
        }
        for j in 0..n {
            if nc_leq(&all[i], &all[j]) != leq[i][j] {
                report.fail(format!("{} ≤ {}", name(i), name(j)), "nc_leq disagrees with refinement");
            }
            let (m, jn) = (meet[i][j], join[i][j]);
            if m != meet[j][i] || jn != join[j][i] {
                report.fail(format!("{}, {}", name(i), name(j)), "not commutative");
            }
            if join[i][m] != i || meet[i][jn] != i {
                report.fail(format!("{}, {}", name(i), name(j)), "not absorptive");
            }
            for r in 0..n {
                let below = leq[r][i] && leq[r][j];
                let above = leq[i][r] && leq[j][r];
                if below != leq[r][m] || above != leq[jn][r] {
                    report.fail(format!("{}, {}", name(i), name(j)), format!("bound test fails at {}", name(r)));
                }
                if meet[meet[i][j]][r] != meet[i][meet[j][r]] || join[join[i][j]][r] != join[i][join[j][r]] {
                    report.fail(format!("{}, {}, {}", name(i), name(j), name(r)), "not associative");
                }
            }
            if kr[jn] != meet[kr[i]][kr[j]] {
                report
                    .fail(format!("{}, {}", name(i), name(j)), "complement of the join is not the meet of complements");
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub hd_instances: usize,
    pub alt_instances: usize,
    pub functorially_finite_thick: usize,
}

fn decoration_tuples(m: usize, choices: &[Decoration]) -> Vec<Vec<Decoration>> {
    (0..m).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                choices.iter().map(move |&d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect()
    })
}

/// Counts with `w` regular choices `0..w` per segment, enumerated from all
/// set partitions rather than the partition generator.
pub fn count_structures(cfg: &GonConfig, w: i64) -> Counts {
    let m = cfg.m();
    let choices: Vec<Decoration> =
        [Decoration::Marker, Decoration::AccEnd].into_iter().chain((0..w).map(Decoration::Reg)).collect();
    let tuples = decoration_tuples(m, &choices);
    let partitions = |k: usize| -> Vec<NcPartition> {
        set_partitions(k)
            .into_iter()
            .filter(|b| !has_crossing(b))
            .map(|b| NcPartition::from_blocks(k, b).expect("set partitions are partitions"))
            .collect()
    };
    let hd_instances =
        partitions(2 * m).iter().map(|p| tuples.iter().filter(|x| validate_hd(cfg, p, x).is_ok()).count()).sum();
    let mut alt_instances = 0;
    let mut ff = BTreeSet::new();
    for p in partitions(m) {
        for x in &tuples {
            if validate_alt(cfg, &p, x).is_err() {
                continue;
            }
            alt_instances += 1;
            let alt = AltNcp { p: p.clone(), x: x.clone() };
            if thick_classify(&alt).functorially_finite {
                ff.insert(cot_aisle(cfg, &alt).expect("validated").to_json().to_string());
            }
        }
    }
    Counts { hd_instances, alt_instances, functorially_finite_thick: ff.len() }
}

/// Cross-checks the enumerators against the counts above.
pub fn verify_counts(cfg: &GonConfig, w: i64) -> Report {
    let mut report = Report::new("counts");
    report.instances = 1;
    let c = count_structures(cfg, w);
    let (hd, alt) = (enumerate_hd(cfg, 0, w - 1).len(), enumerate_alt(cfg, 0, w - 1).len());
    if hd != c.hd_instances || alt != c.alt_instances {
        report.fail(format!("m={}, w={w}", cfg.m()), format!("enumerated {hd}/{alt}, counted {c:?}"));
    }
    report
}

pub fn verify_hom(cfg: &GonConfig, w: i64) -> Report {
    let mut report = Report::new("hom");
    for model in [Model::TwoM, Model::Bar] {
        let table = brute_hom_table(cfg, w, model);
        report.instances += table.arcs.len() * table.arcs.len();
        for (a, b) in table.discrepancies.iter().take(20) {
            report.fail(format!("{a} → {b}"), "hammocks and the crossing description disagree");
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gon::AccLabel;
    use crate::ncp::HalfDecNcp;

    fn cfg(m: usize) -> GonConfig {
        GonConfig::new(m).unwrap()
    }

    #[test]
    fn hom_table_matches_hammocks() {
        for m in [1, 2] {
            let t = brute_hom_table(&cfg(m), 4, Model::Bar);
            assert!(t.discrepancies.is_empty(), "{:?}", &t.discrepancies[..t.discrepancies.len().min(5)]);
        }
    }

    #[test]
    fn shared_blobs_and_shift() {
        let c = cfg(2);
        let (b1, b2) = (Point::blob(AccLabel::primed(1)), Point::blob(AccLabel::primed(2)));
        let bb = Arc::new(&c, Model::Bar, b1, b2).unwrap();
        assert_eq!(brute_hom(&bb, &shift_arc(&bb, 1)), 1);
        for a in enumerate_window(&c, 3, Model::Bar).iter().filter(|a| !a.x1.is_blob() && !a.x2.is_blob()) {
            assert_eq!(brute_hom(a, &shift_arc(a, 1)), 0, "{a}");
        }
    }

    #[test]
    fn closure_examples() {
        let c = cfg(1);
        let r = |n| Point::reg(AccLabel::unprimed(1), n);
        let arc = |a, b| Arc::new(&c, Model::TwoM, r(a), r(b)).unwrap();
        let win = Window::new(&c, 6, Model::TwoM);
        let f = FinArcSet::new(6, [arc(0, 3), arc(2, 5)]);
        // (2, 3) is an edge of the polygon, so each direction contributes
        // one new arc.
        let closed = FinArcSet::new(6, [arc(0, 3), arc(2, 5), arc(0, 5), arc(0, 2), arc(3, 5)]);
        assert_eq!(win.closure(&f), closed);
        assert_eq!(win.closure(&closed), closed);
        let none = FinArcSet::new(6, []);
        assert_eq!(win.closure(&none), none);
    }

    #[test]
    fn catalan_by_filter() {
        let counts: Vec<usize> = (1..=5).map(|k| nc_partitions_by_filter(k).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42]);
        for k in 1..=5 {
            let mut ours = enumerate_ncp(k);
            ours.sort();
            assert_eq!(ours, nc_partitions_by_filter(k));
        }
    }

    #[test]
    fn counts_small() {
        assert_eq!(count_structures(&cfg(1), 3).alt_instances, 5);
        assert_eq!(count_structures(&cfg(2), 3).alt_instances, 50);
        assert_eq!(count_structures(&cfg(1), 0).functorially_finite_thick, 2);
        assert!(verify_counts(&cfg(2), 2).passed());
    }

    #[test]
    fn lattice_small() {
        let r = verify_lattice(4);
        assert!(r.passed(), "{}", r.to_table());
    }

    #[test]
    fn torsion_small() {
        let r = verify_torsion_suite(&cfg(1), -1, 1, 5);
        assert!(r.passed(), "{}", r.to_table());
    }

    #[test]
    fn corrupted_coaisle_fails() {
        let c = cfg(1);
        let d = HalfDecNcp::new(&c, NcPartition::coarsest(2), vec![Decoration::Reg(0)]).unwrap();
        let x = t_aisle(&c, &d).unwrap();
        let y = t_coaisle(&c, &d).unwrap().shift_set(1);
        let r = verify_torsion(&c, &x, &y, 5);
        assert!(!r.passed());
        assert!(r.failures[0].witness.starts_with("Hom("));
    }
}
