//! Arc sets as finite unions of rectangles.
//!
//! A [`SymArcSet`] lives on a grid: a sorted list of cuts that contains every
//! slot boundary splits the circle into cells, and the set is a collection of
//! marked cell pairs `(i, j)` with `i ≤ j`. A marked pair stands for every
//! valid arc whose first endpoint lies in cell `i` and second in cell `j`.
//! Only pairs holding at least one valid arc (*effective* pairs) are ever
//! marked, and cuts are dropped while the set stays expressible, so equal
//! sets have identical representations.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::gon::{
    arcs_on, enumerate_window, is_primed_slot, window_points, Arc, Cut, GonConfig, GonError, Model, Point, PointSet,
};
use crate::hom::{connectors, hammock_cuts, hom_dim, shift_arc, CutBox, HammockKind, Rect};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcSetError {
    #[error("arc sets live in different models ({0} and {1})")]
    ModelMismatch(Model, Model),
    #[error("operation needs the {expected} model, got {got}")]
    WrongModel { expected: Model, got: Model },
    #[error("cut at position {pos} of slot {slot} splits a blob or lies past the end")]
    BadCut { slot: u32, pos: i64 },
    #[error("the set does not contain D, so it is not the preimage of anything")]
    MissingD,
    #[error("malformed arc set: {0}")]
    Malformed(String),
    #[error(transparent)]
    Gon(#[from] GonError),
}

/// A position or one of the two ends of a copy of `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Bound {
    NegInf,
    Fin(i64),
    PosInf,
}

/// Stand-in position for "unbounded" when testing for valid arcs.
const FAR: i64 = 1 << 40;

type Key = (u32, i64);

fn lowest(cfg: &GonConfig, model: Model, lo: Cut) -> Key {
    match lo.pos {
        Some(n) => (lo.slot, n),
        None if cfg.is_z_slot(model, lo.slot) => (lo.slot, -FAR),
        None => (lo.slot, 0),
    }
}

fn highest(cfg: &GonConfig, model: Model, hi: Cut) -> Key {
    match hi.pos {
        Some(n) => (hi.slot, n - 1),
        None if cfg.is_z_slot(model, hi.slot - 1) => (hi.slot - 1, FAR),
        None => (hi.slot - 1, 0),
    }
}

/// Whether some valid arc has its first endpoint in `[a.0, a.1)` and its
/// second in `[b.0, b.1)`. Validity only improves as the first endpoint
/// moves down and the second moves up, so the extreme points decide.
pub(crate) fn exists_arc(cfg: &GonConfig, model: Model, a: (Cut, Cut), b: (Cut, Cut)) -> bool {
    if a.0 >= a.1 || b.0 >= b.1 {
        return false;
    }
    let u = lowest(cfg, model, a.0);
    let v = highest(cfg, model, b.1);
    u < v && (u.0 != v.0 || v.1 >= u.1 + 2)
}

fn locate(cuts: &[Cut], c: Cut) -> usize {
    cuts.partition_point(|x| *x <= c) - 1
}

/// A symbolic additive subcategory: all arcs in a finite union of rectangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymArcSet {
    cfg: GonConfig,
    model: Model,
    cuts: Vec<Cut>,
    marks: Vec<Vec<bool>>,
}

impl SymArcSet {
    fn build(
        cfg: &GonConfig,
        model: Model,
        extra: impl IntoIterator<Item = Cut>,
        f: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let mut cuts: Vec<Cut> = (0..=cfg.slots()).map(Cut::bottom).chain(extra).collect();
        cuts.sort_unstable();
        cuts.dedup();
        let n = cuts.len() - 1;
        let mut marks = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i..n {
                marks[i][j] = exists_arc(cfg, model, (cuts[i], cuts[i + 1]), (cuts[j], cuts[j + 1])) && f(i, j);
            }
        }
        let mut s = SymArcSet { cfg: *cfg, model, cuts, marks };
        s.normalize();
        s
    }

    fn check_cut(cfg: &GonConfig, model: Model, c: Cut) -> Result<(), ArcSetError> {
        match c.pos {
            Some(pos) if c.slot >= cfg.slots() || !cfg.is_z_slot(model, c.slot) => {
                Err(ArcSetError::BadCut { slot: c.slot, pos })
            }
            _ => Ok(()),
        }
    }

    pub fn empty(cfg: &GonConfig, model: Model) -> Self {
        SymArcSet::build(cfg, model, [], |_, _| false)
    }

    /// Every valid arc of the model.
    pub fn all(cfg: &GonConfig, model: Model) -> Self {
        SymArcSet::build(cfg, model, [], |_, _| true)
    }

    pub fn from_rects(cfg: &GonConfig, model: Model, rects: &[Rect]) -> Result<Self, ArcSetError> {
        let cuts: Vec<Cut> = rects.iter().flat_map(|r| r.i.cuts().chain(r.j.cuts())).collect();
        for &c in &cuts {
            SymArcSet::check_cut(cfg, model, c)?;
        }
        let mut grid: Vec<Cut> = (0..=cfg.slots()).map(Cut::bottom).chain(cuts.iter().copied()).collect();
        grid.sort_unstable();
        grid.dedup();
        let cell = |k: usize| (grid[k], grid[k + 1]);
        Ok(SymArcSet::build(cfg, model, cuts.iter().copied(), |i, j| {
            let (ci, cj) = (cell(i), cell(j));
            rects.iter().any(|r| r.i.covers(ci.0, ci.1) && r.j.covers(cj.0, cj.1))
        }))
    }

    /// All arcs with both endpoints in `s`.
    pub fn square(cfg: &GonConfig, model: Model, s: &PointSet) -> Result<Self, ArcSetError> {
        SymArcSet::from_rects(cfg, model, &[Rect::square(s.clone())])
    }

    /// The additive closure of finitely many arcs.
    pub fn from_arcs(cfg: &GonConfig, model: Model, arcs: &[Arc]) -> Result<Self, ArcSetError> {
        let rects: Vec<Rect> = arcs
            .iter()
            .map(|a| {
                if a.model != model {
                    return Err(ArcSetError::ModelMismatch(a.model, model));
                }
                Ok(Rect::new(PointSet::single(a.x1), PointSet::single(a.x2)))
            })
            .collect::<Result<_, _>>()?;
        SymArcSet::from_rects(cfg, model, &rects)
    }

    pub fn cfg(&self) -> &GonConfig {
        &self.cfg
    }

    pub fn model(&self) -> Model {
        self.model
    }

    fn n(&self) -> usize {
        self.cuts.len() - 1
    }

    fn cell(&self, k: usize) -> (Cut, Cut) {
        (self.cuts[k], self.cuts[k + 1])
    }

    fn eff(&self, i: usize, j: usize) -> bool {
        i <= j && exists_arc(&self.cfg, self.model, self.cell(i), self.cell(j))
    }

    /// Mark of the pair of cells, in either order.
    fn mark(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.marks[a][b]
    }

    fn slot_of_cell(&self, k: usize) -> u32 {
        self.cuts[k].slot
    }

    fn bottom_cell(&self, s: u32) -> usize {
        locate(&self.cuts, Cut::bottom(s))
    }

    fn top_cell(&self, s: u32) -> usize {
        locate(&self.cuts, Cut::bottom(s + 1)) - 1
    }

    pub fn is_empty(&self) -> bool {
        self.marks.iter().all(|row| row.iter().all(|m| !m))
    }

    pub fn member(&self, a: &Arc) -> bool {
        if a.model != self.model {
            return false;
        }
        let i = locate(&self.cuts, Cut::before(a.x1));
        let j = locate(&self.cuts, Cut::before(a.x2));
        self.mark(i, j)
    }

    fn removable(&self, t: usize) -> bool {
        let (a, b) = (t - 1, t);
        let ord = |x: usize, y: usize| if x <= y { (x, y) } else { (y, x) };
        for l in (0..self.n()).filter(|&l| l != a && l != b) {
            let (pa, pb) = (ord(a, l), ord(b, l));
            if self.eff(pa.0, pa.1) && self.eff(pb.0, pb.1) && self.marks[pa.0][pa.1] != self.marks[pb.0][pb.1] {
                return false;
            }
        }
        let inner: Vec<bool> = [(a, a), (a, b), (b, b)]
            .into_iter()
            .filter(|&(x, y)| self.eff(x, y))
            .map(|(x, y)| self.marks[x][y])
            .collect();
        inner.windows(2).all(|w| w[0] == w[1])
    }

    fn remove_cut(&mut self, t: usize) {
        let n = self.n();
        let map = |k: usize| if k < t { k } else { k - 1 };
        let mut marks = vec![vec![false; n - 1]; n - 1];
        for i in 0..n {
            for j in i..n {
                if self.marks[i][j] {
                    marks[map(i)][map(j)] = true;
                }
            }
        }
        self.cuts.remove(t);
        self.marks = marks;
    }

    fn normalize(&mut self) {
        loop {
            let mut changed = false;
            let mut t = 1;
            while t + 1 < self.cuts.len() {
                if self.cuts[t].pos.is_some() && self.removable(t) {
                    self.remove_cut(t);
                    changed = true;
                } else {
                    t += 1;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Marks of `self` on a finer grid.
    fn refine(&self, grid: &[Cut]) -> Vec<Vec<bool>> {
        let n = grid.len() - 1;
        let coarse: Vec<usize> = (0..n).map(|k| locate(&self.cuts, grid[k])).collect();
        let mut marks = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i..n {
                marks[i][j] = self.marks[coarse[i]][coarse[j]]
                    && exists_arc(&self.cfg, self.model, (grid[i], grid[i + 1]), (grid[j], grid[j + 1]));
            }
        }
        marks
    }

    fn common_grid(&self, other: &SymArcSet) -> Vec<Cut> {
        let mut grid: Vec<Cut> = self.cuts.iter().chain(&other.cuts).copied().collect();
        grid.sort_unstable();
        grid.dedup();
        grid
    }

    fn combine(&self, other: &SymArcSet, f: impl Fn(bool, bool) -> bool) -> Result<SymArcSet, ArcSetError> {
        if self.model != other.model {
            return Err(ArcSetError::ModelMismatch(self.model, other.model));
        }
        let grid = self.common_grid(other);
        let (a, b) = (self.refine(&grid), other.refine(&grid));
        Ok(SymArcSet::build(&self.cfg, self.model, grid.iter().copied(), |i, j| f(a[i][j], b[i][j])))
    }

    pub fn union(&self, other: &SymArcSet) -> Result<SymArcSet, ArcSetError> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &SymArcSet) -> Result<SymArcSet, ArcSetError> {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &SymArcSet) -> Result<SymArcSet, ArcSetError> {
        self.combine(other, |a, b| a && !b)
    }

    /// All valid arcs not in the set.
    pub fn complement(&self) -> SymArcSet {
        SymArcSet::build(&self.cfg, self.model, self.cuts.iter().copied(), |i, j| !self.marks[i][j])
    }

    pub fn is_subset(&self, other: &SymArcSet) -> Result<bool, ArcSetError> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Denotational equality, decided on a common grid.
    pub fn set_equals(&self, other: &SymArcSet) -> Result<bool, ArcSetError> {
        if self.model != other.model {
            return Err(ArcSetError::ModelMismatch(self.model, other.model));
        }
        let grid = self.common_grid(other);
        Ok(self.refine(&grid) == other.refine(&grid))
    }

    /// `Σⁿ` applied to every member arc.
    pub fn shift_set(&self, n: i64) -> SymArcSet {
        SymArcSet {
            cfg: self.cfg,
            model: self.model,
            cuts: self.cuts.iter().map(|c| c.shifted(n)).collect(),
            marks: self.marks.clone(),
        }
    }

    pub fn truncate(&self, w: i64) -> FinArcSet {
        FinArcSet {
            w,
            arcs: enumerate_window(&self.cfg, w, self.model).into_iter().filter(|a| self.member(a)).collect(),
        }
    }

    /// A canonical list of rectangles whose union is the set.
    pub fn rects(&self) -> Vec<Rect> {
        let n = self.n();
        let ok = |i: usize, j: usize| (i <= j && self.marks[i][j]) || !self.eff(i, j);
        let mut covered = vec![vec![false; n]; n];
        let mut boxes: Vec<(usize, usize, usize, usize)> = Vec::new();
        for i in 0..n {
            for j in i..n {
                if !self.marks[i][j] || covered[i][j] {
                    continue;
                }
                let (mut r0, mut r1, mut c0, mut c1) = (i, i, j, j);
                loop {
                    if c1 + 1 < n && (r0..=r1).all(|r| ok(r, c1 + 1)) {
                        c1 += 1;
                    } else if r1 + 1 < n && (c0..=c1).all(|c| ok(r1 + 1, c)) && c1 > r1 {
                        r1 += 1;
                    } else if c0 > 0 && (r0..=r1).all(|r| ok(r, c0 - 1)) && r0 < c0 {
                        c0 -= 1;
                    } else if r0 > 0 && (c0..=c1).all(|c| ok(r0 - 1, c)) {
                        r0 -= 1;
                    } else {
                        break;
                    }
                }
                for row in covered.iter_mut().take(r1 + 1).skip(r0) {
                    for cell in row.iter_mut().take(c1 + 1).skip(c0) {
                        *cell = true;
                    }
                }
                boxes.push((r0, r1, c0, c1));
            }
        }
        let inside = |a: &(usize, usize, usize, usize), b: &(usize, usize, usize, usize)| {
            b.0 <= a.0 && a.1 <= b.1 && b.2 <= a.2 && a.3 <= b.3
        };
        let kept: Vec<_> = boxes
            .iter()
            .enumerate()
            .filter(|(k, a)| !boxes.iter().enumerate().any(|(l, b)| l != *k && inside(a, b) && (a != &b || l < *k)))
            .map(|(_, a)| *a)
            .collect();
        kept.into_iter()
            .map(|(r0, r1, c0, c1)| {
                Rect::new(
                    PointSet::range(self.cuts[r0], self.cuts[r1 + 1]),
                    PointSet::range(self.cuts[c0], self.cuts[c1 + 1]),
                )
            })
            .collect()
    }

    /// Slot pairs joined by some member arc.
    pub(crate) fn joined_slots(&self) -> Vec<(u32, u32)> {
        let mut out = BTreeSet::new();
        for i in 0..self.n() {
            for j in i..self.n() {
                let (s, t) = (self.slot_of_cell(i), self.slot_of_cell(j));
                if self.marks[i][j] && s != t {
                    out.insert((s, t));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Per slot, the lowest and highest positions used by member arcs
    /// (`None` when no member arc ends in the slot).
    pub(crate) fn endpoint_extent(&self) -> Vec<Option<(Bound, Bound)>> {
        let mut out: Vec<Option<(Bound, Bound)>> = vec![None; self.cfg.slots() as usize];
        let low = |k: usize| self.cuts[k].pos.map_or(Bound::NegInf, Bound::Fin);
        let high = |k: usize| match self.cuts[k + 1].pos {
            Some(n) => Bound::Fin(n - 1),
            None => Bound::PosInf,
        };
        let mut note = |s: u32, lo: Bound, hi: Bound| {
            let e = &mut out[s as usize];
            *e = Some(match *e {
                None => (lo, hi),
                Some((a, b)) => (a.min(lo), b.max(hi)),
            });
        };
        for i in 0..self.n() {
            for j in i..self.n() {
                if !self.marks[i][j] {
                    continue;
                }
                let (s, t) = (self.slot_of_cell(i), self.slot_of_cell(j));
                if s == t {
                    note(s, low(i), high(j));
                } else {
                    note(s, low(i), high(i));
                    note(t, low(j), high(j));
                }
            }
        }
        out
    }

    /// Finite positions of the grid, smallest and largest.
    fn position_span(&self) -> Option<(i64, i64)> {
        let pos = self.cuts.iter().filter_map(|c| c.pos);
        Some((pos.clone().min()?, pos.max()?))
    }

    /// The same cell structure with gaps between consecutive finite cuts of
    /// each slot capped at `cap`, and each slot translated so that its first
    /// finite cut sits at 0. Translating one segment alone preserves the
    /// cyclic order and commutes with the shift.
    fn compressed(&self, cap: i64) -> SymArcSet {
        let mut cuts = self.cuts.clone();
        let mut prev: Option<(u32, i64, i64)> = None;
        for c in cuts.iter_mut() {
            let Some(p) = c.pos else {
                prev = None;
                continue;
            };
            let new = match prev {
                Some((s, old, new)) if s == c.slot => new + (p - old).min(cap),
                _ => 0,
            };
            prev = Some((c.slot, p, new));
            c.pos = Some(new);
        }
        SymArcSet { cfg: self.cfg, model: self.model, cuts, marks: self.marks.clone() }
    }

    pub fn to_json(&self) -> Value {
        let rects: Vec<Value> = self
            .rects()
            .iter()
            .map(|r| json!({ "I": r.i.to_json(&self.cfg, self.model), "J": r.j.to_json(&self.cfg, self.model) }))
            .collect();
        json!({ "model": self.model, "m": self.cfg.m(), "rects": rects })
    }

    pub fn from_json(v: &Value) -> Result<SymArcSet, ArcSetError> {
        let model: Model = serde_json::from_value(v.get("model").cloned().unwrap_or(Value::Null))
            .map_err(|e| ArcSetError::Malformed(format!("model: {e}")))?;
        let m = v.get("m").and_then(Value::as_u64).ok_or_else(|| ArcSetError::Malformed("missing \"m\"".into()))?;
        let cfg = GonConfig::new(m as usize)?;
        let rects = v
            .get("rects")
            .and_then(Value::as_array)
            .ok_or_else(|| ArcSetError::Malformed("missing \"rects\"".into()))?
            .iter()
            .map(|r| {
                let (Some(i), Some(j)) = (r.get("I"), r.get("J")) else {
                    return Err(ArcSetError::Malformed(format!("rect {r} needs \"I\" and \"J\"")));
                };
                Ok(Rect::new(PointSet::from_json(&cfg, i)?, PointSet::from_json(&cfg, j)?))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SymArcSet::from_rects(&cfg, model, &rects)
    }
}

/// An explicit set of arcs inside the window `[-w, w]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinArcSet {
    pub w: i64,
    pub arcs: BTreeSet<Arc>,
}

impl FinArcSet {
    pub fn new(w: i64, arcs: impl IntoIterator<Item = Arc>) -> Self {
        let inside = |p: Point| p.pos().map_or(true, |n| n.abs() <= w);
        FinArcSet { w, arcs: arcs.into_iter().filter(|a| inside(a.x1) && inside(a.x2)).collect() }
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.contains(a)
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({ "W": self.w, "arcs": self.arcs.iter().map(Arc::to_json).collect::<Vec<_>>() })
    }

    pub fn from_json(cfg: &GonConfig, model: Model, v: &Value) -> Result<Self, ArcSetError> {
        let w = v.get("W").and_then(Value::as_i64).ok_or_else(|| ArcSetError::Malformed("missing \"W\"".into()))?;
        let arcs = v
            .get("arcs")
            .and_then(Value::as_array)
            .ok_or_else(|| ArcSetError::Malformed("missing \"arcs\"".into()))?
            .iter()
            .map(|a| Arc::from_json(cfg, model, a))
            .collect::<Result<BTreeSet<_>, _>>()?;
        Ok(FinArcSet { w, arcs })
    }
}

/// A violated closure condition. `PC` tags serve both the plain conditions of
/// `C_{2m}` and their completed versions; `PE` tags are the dual family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    #[serde(rename = "PC1")]
    Pc1,
    #[serde(rename = "PC2")]
    Pc2,
    #[serde(rename = "PC2'")]
    Pc2Prime,
    #[serde(rename = "PC3")]
    Pc3,
    #[serde(rename = "PC3'")]
    Pc3Prime,
    #[serde(rename = "PE1")]
    Pe1,
    #[serde(rename = "PE2")]
    Pe2,
    #[serde(rename = "PE2'")]
    Pe2Prime,
    #[serde(rename = "PE3")]
    Pe3,
    #[serde(rename = "PE3'")]
    Pe3Prime,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        f.write_str(&s)
    }
}

fn require(x: &SymArcSet, model: Model) -> Result<(), ArcSetError> {
    if x.model != model {
        return Err(ArcSetError::WrongModel { expected: model, got: x.model });
    }
    Ok(())
}

fn unprimed_slots(cfg: &GonConfig) -> Vec<u32> {
    (0..cfg.slots()).filter(|&s| !is_primed_slot(s)).collect()
}

/// Violated precovering conditions of a subcategory of `C_{2m}`.
///
/// A strictly increasing (decreasing) sequence in a segment exists inside a
/// marked cell pair exactly when that pair uses the segment's top (bottom)
/// cell, so every hypothesis and conclusion is a lookup of one cell pair.
pub fn check_pc_2m(cfg: &GonConfig, u: &SymArcSet) -> Result<Vec<Condition>, ArcSetError> {
    require(u, Model::TwoM)?;
    let mut out = BTreeSet::new();
    let n = u.n();
    let slots = cfg.slots();
    let succ = |s: u32| cfg.succ_slot(s);
    for s in 0..slots {
        let (bs, ts) = (u.bottom_cell(s), u.top_cell(s));
        for t in s..slots {
            let (bt, tt) = (u.bottom_cell(t), u.top_cell(t));
            if s < t && u.mark(ts, tt) && !u.mark(u.bottom_cell(succ(s)), u.bottom_cell(succ(t))) {
                out.insert(Condition::Pc1);
            }
            if s != succ(t) && u.mark(bs, tt) && !u.mark(bs, u.bottom_cell(succ(t))) {
                out.insert(Condition::Pc2);
            }
            if s < t && t != succ(s) && u.mark(ts, bt) && !u.mark(u.bottom_cell(succ(s)), bt) {
                out.insert(Condition::Pc2Prime);
            }
        }
        for i in 0..=ts {
            if u.mark(i, ts) && !u.mark(i, u.bottom_cell(succ(s))) {
                out.insert(Condition::Pc3);
            }
        }
        for j in ts + 1..n {
            if u.mark(ts, j) && !u.mark(u.bottom_cell(succ(s)), j) {
                out.insert(Condition::Pc3Prime);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Violated completed precovering conditions of a subcategory of the
/// completed category. Conclusions are arcs ending at blobs.
pub fn check_ovl_pc(cfg: &GonConfig, x: &SymArcSet) -> Result<Vec<Condition>, ArcSetError> {
    require(x, Model::Bar)?;
    let mut out = BTreeSet::new();
    let n = x.n();
    let blob = |s: u32| x.bottom_cell(s);
    let zs = unprimed_slots(cfg);
    for &p in &zs {
        let (bp, tp) = (x.bottom_cell(p), x.top_cell(p));
        let p_plus = cfg.succ_slot(p);
        for &q in zs.iter().filter(|&&q| q >= p) {
            let (bq, tq) = (x.bottom_cell(q), x.top_cell(q));
            let q_plus = cfg.succ_slot(q);
            if p < q && x.mark(tp, tq) && !x.mark(blob(p_plus), blob(q_plus)) {
                out.insert(Condition::Pc1);
            }
            if x.mark(bp, tq) && !x.mark(bp, blob(q_plus)) {
                out.insert(Condition::Pc2);
            }
            if p < q && x.mark(tp, bq) && !x.mark(blob(p_plus), bq) {
                out.insert(Condition::Pc2Prime);
            }
        }
        // The fixed endpoint may sit anywhere below the moving one.
        for i in 0..=tp {
            if i != blob(p_plus) && x.mark(i, tp) && !x.mark(i, blob(p_plus)) {
                out.insert(Condition::Pc3);
            }
        }
        for j in tp + 1..n {
            if x.slot_of_cell(j) != p_plus && x.mark(tp, j) && !x.mark(blob(p_plus), j) {
                out.insert(Condition::Pc3Prime);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Violated completed preenveloping conditions.
pub fn check_ovl_pe(cfg: &GonConfig, x: &SymArcSet) -> Result<Vec<Condition>, ArcSetError> {
    require(x, Model::Bar)?;
    let mut out = BTreeSet::new();
    let n = x.n();
    let blob = |s: u32| x.bottom_cell(s);
    let zs = unprimed_slots(cfg);
    for &p in &zs {
        let (bp, tp) = (x.bottom_cell(p), x.top_cell(p));
        let p_minus = cfg.pred_slot(p);
        for &q in zs.iter().filter(|&&q| q >= p) {
            let (bq, tq) = (x.bottom_cell(q), x.top_cell(q));
            let q_minus = cfg.pred_slot(q);
            if p < q && x.mark(bp, bq) && !x.mark(blob(p_minus), blob(q_minus)) {
                out.insert(Condition::Pe1);
            }
            if p < q && x.mark(tp, bq) && !x.mark(tp, blob(q_minus)) {
                out.insert(Condition::Pe2);
            }
            if x.mark(bp, tq) && !x.mark(blob(p_minus), tq) {
                out.insert(Condition::Pe2Prime);
            }
        }
        for i in 0..bp {
            if x.slot_of_cell(i) != p_minus && x.mark(i, bp) && !x.mark(i, blob(p_minus)) {
                out.insert(Condition::Pe3);
            }
        }
        for j in bp..n {
            if x.mark(bp, j) && !x.mark(blob(p_minus), j) {
                out.insert(Condition::Pe3Prime);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Largest offset between positions that the Hom and validity predicates
/// compare, plus one.
const COMPARE_CAP: i64 = 5;

/// Whether the set is closed under Ptolemy arcs of Ext-related members.
///
/// The answer only depends on the order of the four endpoints and the grid
/// cuts, with differences capped at [`COMPARE_CAP`]. Capping the gaps
/// between cuts at five times that and searching a window reaching four
/// caps past the outermost cuts therefore meets every configuration.
///
/// Verdicts are remembered per compressed shape, which many sets share.
pub fn check_ovl_pt(cfg: &GonConfig, x: &SymArcSet) -> Result<bool, ArcSetError> {
    static SEEN: OnceLock<Mutex<HashMap<SymArcSet, bool>>> = OnceLock::new();
    require(x, Model::Bar)?;
    let xc = x.compressed(5 * COMPARE_CAP);
    let seen = SEEN.get_or_init(Default::default);
    if let Some(&v) = seen.lock().unwrap_or_else(|e| e.into_inner()).get(&xc) {
        return Ok(v);
    }
    let v = ptolemy_closed(cfg, &xc);
    seen.lock().unwrap_or_else(|e| e.into_inner()).insert(xc, v);
    Ok(v)
}

fn ptolemy_closed(cfg: &GonConfig, xc: &SymArcSet) -> bool {
    let (lo, hi) = xc.position_span().unwrap_or((0, 0));
    let margin = 4 * COMPARE_CAP;
    let pts = window_points(cfg, Model::Bar, lo - margin, hi + margin);
    let members: Vec<Arc> = arcs_on(cfg, Model::Bar, &pts).into_iter().filter(|a| xc.member(a)).collect();
    for a in &members {
        let sa = shift_arc(a, 1);
        for b in &members {
            if hom_dim(cfg, b, &sa) == 1 && !connectors(cfg, a, b).iter().all(|c| xc.member(c)) {
                return false;
            }
        }
    }
    true
}

pub fn is_torsion_class(cfg: &GonConfig, x: &SymArcSet) -> Result<bool, ArcSetError> {
    Ok(check_ovl_pc(cfg, x)?.is_empty() && check_ovl_pt(cfg, x)?)
}

pub fn is_t_aisle(cfg: &GonConfig, x: &SymArcSet) -> Result<bool, ArcSetError> {
    Ok(x.shift_set(1).is_subset(x)? && is_torsion_class(cfg, x)?)
}

pub fn is_cot_aisle(cfg: &GonConfig, x: &SymArcSet) -> Result<bool, ArcSetError> {
    Ok(x.shift_set(-1).is_subset(x)? && is_torsion_class(cfg, x)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

fn crossing_boxes(cfg: &GonConfig, c: &Arc) -> [CutBox; 2] {
    let (c1, c2) = (c.x1, c.x2);
    [
        ((Cut::after(c1), Cut::before(c2)), (Cut::after(c2), Cut::end(cfg))),
        ((Cut::START, Cut::before(c1)), (Cut::after(c1), Cut::before(c2))),
    ]
}

/// Rectangles of arcs `a` with `Hom(a, t) ≠ 0` (right) or `Hom(t, a) ≠ 0`
/// (left).
fn hom_boxes(cfg: &GonConfig, side: Side, t: &Arc) -> Vec<CutBox> {
    use HammockKind::*;
    match (t.model, side) {
        (Model::Bar, Side::Right) => {
            vec![hammock_cuts(cfg, Iplus, &shift_arc(t, -2)), hammock_cuts(cfg, Iminus, t)]
        }
        (Model::Bar, Side::Left) => vec![hammock_cuts(cfg, Hplus, t), hammock_cuts(cfg, Hminus, &shift_arc(t, 2))],
        (Model::TwoM, Side::Right) => crossing_boxes(cfg, &shift_arc(t, -1)).to_vec(),
        (Model::TwoM, Side::Left) => crossing_boxes(cfg, &shift_arc(t, 1)).to_vec(),
    }
}

fn meets_box(x: &SymArcSet, bx: &CutBox) -> bool {
    let ((a0, a1), (b0, b1)) = *bx;
    for i in 0..x.n() {
        let (l0, l1) = x.cell(i);
        let ci = (l0.max(a0), l1.min(a1));
        if ci.0 >= ci.1 {
            continue;
        }
        for j in i..x.n() {
            if !x.marks[i][j] {
                continue;
            }
            let (m0, m1) = x.cell(j);
            if exists_arc(&x.cfg, x.model, ci, (m0.max(b0), m1.min(b1))) {
                return true;
            }
        }
    }
    false
}

/// Sample points of a cell, several when the cell is unbounded.
fn representatives(cfg: &GonConfig, model: Model, (lo, hi): (Cut, Cut)) -> Vec<Point> {
    let slot = lo.slot;
    if !cfg.is_z_slot(model, slot) {
        return vec![Point::Blob { slot }];
    }
    let pos: Vec<i64> = match (lo.pos, hi.pos) {
        (Some(a), Some(b)) if b - a <= 6 => (a..b).collect(),
        (Some(a), Some(b)) => vec![a, a + 1, a + 2, b - 3, b - 2, b - 1],
        (Some(a), None) => vec![a, a + 1, a + 2, a + 5, a + 9],
        (None, Some(b)) => vec![b - 1, b - 2, b - 3, b - 6, b - 10],
        (None, None) => vec![-9, -5, -1, 0, 1, 5, 9],
    };
    pos.into_iter().map(|pos| Point::Reg { slot, pos }).collect()
}

/// Right perpendicular `{t : Hom(X, t) = 0}` or left `{t : Hom(t, X) = 0}`.
///
/// Membership is evaluated on a grid that is dense around the cuts of `X`;
/// far from them it is constant on each cell, which is asserted in debug
/// builds by sampling several representatives.
pub fn perp(cfg: &GonConfig, x: &SymArcSet, side: Side) -> SymArcSet {
    let (lo, hi) = x.position_span().unwrap_or((0, 0));
    let (lo, hi) = (lo.min(0) - 6, hi.max(0) + 6);
    let model = x.model;
    let dense: Vec<Cut> = (0..cfg.slots())
        .filter(|&s| cfg.is_z_slot(model, s))
        .flat_map(|s| (lo..=hi + 1).map(move |k| Cut::at(s, k)))
        .chain(x.cuts.iter().copied())
        .collect();
    let mut grid: Vec<Cut> = (0..=cfg.slots()).map(Cut::bottom).chain(dense.iter().copied()).collect();
    grid.sort_unstable();
    grid.dedup();
    let reps: Vec<Vec<Point>> =
        (0..grid.len() - 1).map(|k| representatives(cfg, model, (grid[k], grid[k + 1]))).collect();
    let orthogonal = |t: &Arc| !hom_boxes(cfg, side, t).iter().any(|b| meets_box(x, b));
    SymArcSet::build(cfg, model, dense, |i, j| {
        let mut verdicts = reps[i]
            .iter()
            .flat_map(|&u| reps[j].iter().map(move |&v| (u, v)))
            .filter_map(|(u, v)| Arc::new(cfg, model, u, v).ok().map(|t| orthogonal(&t)));
        let first = verdicts.next().unwrap_or(false);
        debug_assert!(verdicts.all(|v| v == first), "perpendicular not constant on cells {i}, {j}");
        first
    })
}

/// `π⁻¹X`: blob endpoints spread over their primed segment, plus `D`.
pub fn preimage_bar(cfg: &GonConfig, x: &SymArcSet) -> Result<SymArcSet, ArcSetError> {
    require(x, Model::Bar)?;
    let lifted = SymArcSet::build(cfg, Model::TwoM, x.cuts.iter().copied(), |i, j| x.marks[i][j]);
    lifted.union(&category_d(cfg))
}

/// `πU` for a subcategory `U ⊇ D` of `C_{2m}`.
pub fn image_2m(cfg: &GonConfig, u: &SymArcSet) -> Result<SymArcSet, ArcSetError> {
    require(u, Model::TwoM)?;
    if !category_d(cfg).is_subset(u)? {
        return Err(ArcSetError::MissingD);
    }
    let grid: Vec<Cut> = u.cuts.iter().copied().filter(|c| c.pos.is_none() || !is_primed_slot(c.slot)).collect();
    let n = grid.len() - 1;
    let mut marks = vec![vec![false; n]; n];
    for i in 0..u.n() {
        for j in i..u.n() {
            if u.marks[i][j] {
                marks[locate(&grid, u.cuts[i])][locate(&grid, u.cuts[j])] = true;
            }
        }
    }
    Ok(SymArcSet::build(cfg, Model::Bar, grid.iter().copied(), |i, j| marks[i][j]))
}

/// `A`: arcs with both endpoints in `⋃_p (p, 0_{p⁺}]`.
pub fn category_a(cfg: &GonConfig) -> SymArcSet {
    let pieces = unprimed_slots(cfg).into_iter().flat_map(|s| {
        let next = cfg.succ_slot(s);
        [(Cut::bottom(s), Cut::bottom(s + 1)), (Cut::bottom(next), Cut::at(next, 1))]
    });
    SymArcSet::square(cfg, Model::TwoM, &PointSet::from_pieces(pieces.collect())).expect("cuts lie in copies of Z")
}

/// `B`: arcs with both endpoints in `⋃_{p′} [−1_{p′}, p⁺⁺)`.
pub fn category_b(cfg: &GonConfig) -> SymArcSet {
    let pieces =
        (0..cfg.slots()).filter(|&s| is_primed_slot(s)).map(|s| (Cut::at(s, -1), Cut::bottom(s + 2))).collect();
    SymArcSet::square(cfg, Model::TwoM, &PointSet::from_pieces(pieces)).expect("cuts lie in copies of Z")
}

/// `D`: arcs inside a single primed segment.
pub fn category_d(cfg: &GonConfig) -> SymArcSet {
    let rects: Vec<Rect> =
        (0..cfg.slots()).filter(|&s| is_primed_slot(s)).map(|s| Rect::square(PointSet::slot(s))).collect();
    SymArcSet::from_rects(cfg, Model::TwoM, &rects).expect("slot boundaries are valid cuts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gon::AccLabel;

    fn cfg(m: usize) -> GonConfig {
        GonConfig::new(m).unwrap()
    }

    fn r(p: u32, n: i64) -> Point {
        Point::reg(AccLabel::unprimed(p), n)
    }

    fn b(p: u32) -> Point {
        Point::blob(AccLabel::primed(p))
    }

    fn bar(c: &GonConfig, u: Point, v: Point) -> Arc {
        Arc::new(c, Model::Bar, u, v).unwrap()
    }

    fn upper_square(c: &GonConfig, slot: u32, from: i64) -> SymArcSet {
        SymArcSet::square(c, Model::Bar, &PointSet::range(Cut::at(slot, from), Cut::bottom(slot + 1))).unwrap()
    }

    #[test]
    fn membership_examples() {
        let c = cfg(1);
        let s = upper_square(&c, 1, 0);
        assert!(s.member(&bar(&c, r(1, 0), r(1, 2))));
        assert!(!s.member(&bar(&c, r(1, -1), r(1, 2))));
        assert!(!SymArcSet::empty(&c, Model::Bar).member(&bar(&c, r(1, 0), r(1, 2))));
    }

    #[test]
    fn algebra_examples() {
        let c = cfg(2);
        let s = upper_square(&c, 1, 0);
        let t = upper_square(&c, 3, -2);
        let e = SymArcSet::empty(&c, Model::Bar);
        assert_eq!(s.union(&e).unwrap(), s);
        assert_eq!(s.union(&t).unwrap(), t.union(&s).unwrap());
        assert!(s.union(&t).unwrap().set_equals(&t.union(&s).unwrap()).unwrap());
        assert_eq!(s.complement().complement(), s);
        assert!(s.shift_set(-1).is_subset(&s).unwrap());
        assert!(!s.shift_set(1).is_subset(&s).unwrap());
    }

    #[test]
    fn rects_rebuild_the_set() {
        let c = cfg(2);
        assert!(upper_square(&c, 1, 0).union(&category_a(&c)).is_err());
        let x = upper_square(&c, 1, 0).union(&upper_square(&c, 3, 2)).unwrap();
        assert_eq!(SymArcSet::from_rects(&c, Model::Bar, &x.rects()).unwrap(), x);
        assert_eq!(SymArcSet::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn pc_examples() {
        let c = cfg(1);
        assert_eq!(check_pc_2m(&c, &category_a(&c)).unwrap(), vec![]);
        let low = SymArcSet::square(&c, Model::TwoM, &PointSet::range(Cut::bottom(1), Cut::at(1, 1))).unwrap();
        assert_eq!(check_pc_2m(&c, &low).unwrap(), vec![]);
        let rect =
            Rect::new(PointSet::range(Cut::at(0, 0), Cut::bottom(1)), PointSet::range(Cut::at(1, 0), Cut::bottom(2)));
        let u = SymArcSet::from_rects(&c, Model::TwoM, &[rect]).unwrap();
        assert!(check_pc_2m(&c, &u).unwrap().contains(&Condition::Pc1));
    }

    #[test]
    fn ovl_pc_examples() {
        let c = cfg(1);
        assert_eq!(check_ovl_pc(&c, &SymArcSet::empty(&c, Model::Bar)).unwrap(), vec![]);
        assert_eq!(check_ovl_pc(&c, &upper_square(&c, 1, 0)).unwrap(), vec![Condition::Pc3]);
        let c2 = cfg(2);
        let rect =
            Rect::new(PointSet::range(Cut::at(1, 0), Cut::bottom(2)), PointSet::range(Cut::at(3, 0), Cut::bottom(4)));
        let x = SymArcSet::from_rects(&c2, Model::Bar, &[rect]).unwrap();
        assert!(check_ovl_pc(&c2, &x).unwrap().contains(&Condition::Pc1));
        let low = SymArcSet::square(&c, Model::Bar, &PointSet::range(Cut::bottom(1), Cut::at(1, 1))).unwrap();
        assert_eq!(check_ovl_pe(&c, &low).unwrap(), vec![Condition::Pe3Prime]);
    }

    #[test]
    fn pt_examples() {
        let c = cfg(1);
        let x = SymArcSet::from_arcs(&c, Model::Bar, &[bar(&c, r(1, 0), r(1, 3)), bar(&c, r(1, 2), r(1, 5))]).unwrap();
        assert!(!check_ovl_pt(&c, &x).unwrap());
        assert!(check_ovl_pt(&c, &SymArcSet::all(&c, Model::Bar)).unwrap());
        assert!(check_ovl_pt(&c, &SymArcSet::empty(&c, Model::Bar)).unwrap());
    }

    #[test]
    fn perp_extremes() {
        let c = cfg(1);
        let all = SymArcSet::all(&c, Model::Bar);
        let none = SymArcSet::empty(&c, Model::Bar);
        assert_eq!(perp(&c, &none, Side::Right), all);
        assert_eq!(perp(&c, &all, Side::Right), none);
        assert_eq!(perp(&c, &all, Side::Left), none);
    }

    #[test]
    fn categories() {
        let c = cfg(1);
        let a = category_a(&c);
        let low_primed = Point::reg(AccLabel::primed(1), 0);
        assert!(a.member(&Arc::new(&c, Model::TwoM, low_primed, r(1, 3)).unwrap()));
        assert!(!a.member(&Arc::new(&c, Model::TwoM, low_primed.shifted(1), r(1, 3)).unwrap()));
        assert!(a.shift_set(1).is_subset(&a).unwrap());
        assert!(category_b(&c).shift_set(-1).is_subset(&category_b(&c)).unwrap());
        let d = category_d(&c);
        assert_eq!(preimage_bar(&c, &SymArcSet::empty(&c, Model::Bar)).unwrap(), d);
        assert!(image_2m(&c, &d).unwrap().is_empty());
        let x = upper_square(&c, 1, 0)
            .union(&SymArcSet::from_arcs(&c, Model::Bar, &[bar(&c, b(1), r(1, 4))]).unwrap())
            .unwrap();
        assert_eq!(image_2m(&c, &preimage_bar(&c, &x).unwrap()).unwrap(), x);
        assert_eq!(image_2m(&c, &a), Err(ArcSetError::MissingD));
    }
}
