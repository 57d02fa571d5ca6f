//! t-structures and co-t-structures of the completed category, built from
//! and decoded back to decorated non-crossing partitions.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::arcsets::{is_cot_aisle, is_t_aisle, perp, preimage_bar, ArcSetError, Bound, Side, SymArcSet};
use crate::gon::{is_primed_slot, Arc, Cut, GonConfig, Model, Point, PointSet};
use crate::ncp::{
    alt_join, alt_meet, complement_alt, complement_hd, hd_join, hd_meet, kreweras, next_in_block, AltNcp, Decoration,
    HalfDecNcp, NcPartition, NcpError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error("the set is not the aisle of a t-structure")]
    NotTAisle,
    #[error("the set is not the aisle of a co-t-structure")]
    NotCotAisle,
    #[error("the co-t-structure does not come from a functorially finite thick subcategory")]
    NotFunctoriallyFinite,
    #[error(transparent)]
    Ncp(#[from] NcpError),
    #[error(transparent)]
    ArcSet(#[from] ArcSetError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bounded {
    Left,
    Right,
}

fn unprimed_slot(p: usize) -> u32 {
    2 * p as u32 - 1
}

fn primed_slot(i: usize) -> u32 {
    2 * i as u32 - 2
}

/// `(p, x_p]` inside segment `p`: everything up to and including `x_p`.
fn lower_part(s: u32, d: Decoration) -> Vec<(Cut, Cut)> {
    match d {
        Decoration::Marker => vec![],
        Decoration::Reg(n) => vec![(Cut::bottom(s), Cut::at(s, n + 1))],
        Decoration::AccEnd => vec![(Cut::bottom(s), Cut::bottom(s + 1))],
    }
}

/// `[x_p, p⁺)` inside segment `p`: everything from `x_p` upwards.
fn upper_part(s: u32, d: Decoration) -> Vec<(Cut, Cut)> {
    match d {
        Decoration::Marker => vec![(Cut::bottom(s), Cut::bottom(s + 1))],
        Decoration::Reg(n) => vec![(Cut::at(s, n), Cut::bottom(s + 1))],
        Decoration::AccEnd => vec![],
    }
}

fn blob_piece(s: u32) -> (Cut, Cut) {
    (Cut::bottom(s), Cut::bottom(s + 1))
}

fn union_of_squares(cfg: &GonConfig, sets: impl IntoIterator<Item = Vec<(Cut, Cut)>>) -> SymArcSet {
    let rects: Vec<_> = sets.into_iter().map(|p| crate::hom::Rect::square(PointSet::from_pieces(p))).collect();
    SymArcSet::from_rects(cfg, Model::Bar, &rects).expect("decorations give cuts in copies of Z")
}

/// Square over `⋃ (p, x_p]` and the blobs of a block, for every block of a
/// half-decorated partition on `{1..2m}` (element `e` is the label of slot
/// `e − 1`).
fn hd_squares(
    cfg: &GonConfig,
    p: &NcPartition,
    x: &[Decoration],
    part: fn(u32, Decoration) -> Vec<(Cut, Cut)>,
) -> SymArcSet {
    union_of_squares(
        cfg,
        p.blocks().iter().map(|b| {
            b.iter()
                .flat_map(|&e| {
                    let s = e as u32 - 1;
                    if is_primed_slot(s) {
                        vec![blob_piece(s)]
                    } else {
                        part(s, x[s as usize / 2])
                    }
                })
                .collect()
        }),
    )
}

pub fn t_aisle(cfg: &GonConfig, hd: &HalfDecNcp) -> Result<SymArcSet, TorsionError> {
    crate::ncp::validate_hd(cfg, &hd.p, &hd.x)?;
    Ok(hd_squares(cfg, &hd.p, &hd.x, lower_part))
}

pub fn t_coaisle(cfg: &GonConfig, hd: &HalfDecNcp) -> Result<SymArcSet, TorsionError> {
    crate::ncp::validate_hd(cfg, &hd.p, &hd.x)?;
    let c = complement_hd(hd);
    Ok(hd_squares(cfg, &c.p, &c.x, upper_part))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn join(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra.max(rb)] = ra.min(rb);
    }

    /// Classes as blocks on `{1..n}`.
    fn blocks(&mut self) -> Vec<Vec<usize>> {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for a in 0..self.0.len() {
            let r = self.find(a);
            groups.entry(r).or_default().push(a + 1);
        }
        groups.into_values().collect()
    }
}

/// Decodes a t-aisle: blocks are the classes of "joined by a member arc",
/// decorations are suprema of the member endpoints in each segment.
pub fn hd_from_aisle(cfg: &GonConfig, x: &SymArcSet) -> Result<HalfDecNcp, TorsionError> {
    if !is_t_aisle(cfg, x)? {
        return Err(TorsionError::NotTAisle);
    }
    let mut uf = UnionFind::new(cfg.slots() as usize);
    for (s, t) in preimage_bar(cfg, x)?.joined_slots() {
        uf.join(s as usize, t as usize);
    }
    let p = NcPartition::new(2 * cfg.m(), uf.blocks())?;
    let extent = x.endpoint_extent();
    let xs = (1..=cfg.m())
        .map(|q| match extent[unprimed_slot(q) as usize] {
            None => Decoration::Marker,
            Some((_, Bound::Fin(n))) => Decoration::Reg(n),
            Some(_) => Decoration::AccEnd,
        })
        .collect();
    Ok(HalfDecNcp::new(cfg, p, xs)?)
}

/// `add{(x_p − 2, x_p)}` over the regular decorations.
pub fn t_heart(cfg: &GonConfig, hd: &HalfDecNcp) -> Result<Vec<Arc>, TorsionError> {
    crate::ncp::validate_hd(cfg, &hd.p, &hd.x)?;
    let mut out: Vec<Arc> = hd
        .x
        .iter()
        .enumerate()
        .filter_map(|(i, d)| match d {
            Decoration::Reg(n) => {
                let slot = unprimed_slot(i + 1);
                Some(Arc { x1: Point::Reg { slot, pos: n - 2 }, x2: Point::Reg { slot, pos: *n }, model: Model::Bar })
            }
            _ => None,
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Square over `⋃_{i′∈B} (segment i−1 piece ∪ blob i′)` for every block of
/// an alternating partition; `part` cuts the piece of segment `i − 1` (the
/// segment before `i′`, with `1′` preceded by `m`) or of segment `i`.
fn alt_squares(cfg: &GonConfig, p: &NcPartition, x: &[Decoration], before: bool) -> SymArcSet {
    let m = cfg.m();
    union_of_squares(
        cfg,
        p.blocks().iter().map(|b| {
            b.iter()
                .flat_map(|&i| {
                    let mut pieces = vec![blob_piece(primed_slot(i))];
                    if before {
                        let q = if i == 1 { m } else { i - 1 };
                        pieces.extend(upper_part(unprimed_slot(q), x[q - 1]));
                    } else {
                        pieces.extend(lower_part(unprimed_slot(i), x[i - 1]));
                    }
                    pieces
                })
                .collect()
        }),
    )
}

pub fn cot_aisle(cfg: &GonConfig, alt: &AltNcp) -> Result<SymArcSet, TorsionError> {
    crate::ncp::validate_alt(cfg, &alt.p, &alt.x)?;
    Ok(alt_squares(cfg, &alt.p, &alt.x, true))
}

pub fn cot_coaisle(cfg: &GonConfig, alt: &AltNcp) -> Result<SymArcSet, TorsionError> {
    crate::ncp::validate_alt(cfg, &alt.p, &alt.x)?;
    let c = complement_alt(alt);
    Ok(alt_squares(cfg, &c.p, &c.x, false))
}

/// Decodes a co-t-aisle: a segment belongs to the primed label that follows
/// it, decorations are infima of the member endpoints in each segment.
pub fn alt_from_cot_aisle(cfg: &GonConfig, x: &SymArcSet) -> Result<AltNcp, TorsionError> {
    if !is_cot_aisle(cfg, x)? {
        return Err(TorsionError::NotCotAisle);
    }
    let label = |s: u32| {
        let primed = if is_primed_slot(s) { s } else { cfg.succ_slot(s) };
        primed as usize / 2
    };
    let mut uf = UnionFind::new(cfg.m());
    for (s, t) in x.joined_slots() {
        uf.join(label(s), label(t));
    }
    let p = NcPartition::new(cfg.m(), uf.blocks())?;
    let extent = x.endpoint_extent();
    let xs = (1..=cfg.m())
        .map(|q| match extent[unprimed_slot(q) as usize] {
            None => Decoration::AccEnd,
            Some((Bound::Fin(n), _)) => Decoration::Reg(n),
            Some(_) => Decoration::Marker,
        })
        .collect();
    Ok(AltNcp::new(cfg, p, xs)?)
}

/// `add{|p, x_{q⁻}|}` where `q` follows `p` in its block and `x_{q⁻}` is
/// regular.
pub fn cot_coheart(cfg: &GonConfig, alt: &AltNcp) -> Result<Vec<Arc>, TorsionError> {
    crate::ncp::validate_alt(cfg, &alt.p, &alt.x)?;
    let m = cfg.m();
    let mut out = Vec::new();
    for b in alt.p.blocks() {
        for &i in b {
            let q = next_in_block(b, i)?;
            let before = if q == 1 { m } else { q - 1 };
            if let Decoration::Reg(n) = alt.x[before - 1] {
                let u = Point::Blob { slot: primed_slot(i) };
                let v = Point::Reg { slot: unprimed_slot(before), pos: n };
                out.extend(Arc::unordered(cfg, Model::Bar, u, v));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn primed_elements(b: &[usize]) -> usize {
    b.iter().filter(|&&e| is_primed_slot(e as u32 - 1)).count()
}

pub fn t_bounded(hd: &HalfDecNcp, side: Bounded) -> bool {
    let k = hd.p.k();
    match side {
        Bounded::Left => hd.p == NcPartition::coarsest(k),
        Bounded::Right => hd.p == NcPartition::finest(k),
    }
}

pub fn t_nondeg(hd: &HalfDecNcp, side: Bounded) -> bool {
    match side {
        Bounded::Left => {
            hd.x.iter().all(|&d| d != Decoration::AccEnd) && hd.p.blocks().iter().all(|b| primed_elements(b) <= 1)
        }
        Bounded::Right => {
            let q = kreweras(&hd.p);
            hd.x.iter().all(|&d| d != Decoration::Marker) && q.blocks().iter().all(|b| primed_elements(b) <= 1)
        }
    }
}

pub fn cot_bounded(alt: &AltNcp, side: Bounded) -> bool {
    let k = alt.p.k();
    match side {
        Bounded::Left => alt.p == NcPartition::coarsest(k) && alt.x.iter().all(|&d| d != Decoration::AccEnd),
        Bounded::Right => alt.p == NcPartition::finest(k) && alt.x.iter().all(|&d| d != Decoration::Marker),
    }
}

/// Non-degeneracy on one side is boundedness on the other.
pub fn cot_nondeg(alt: &AltNcp, side: Bounded) -> bool {
    match side {
        Bounded::Left => cot_bounded(alt, Bounded::Right),
        Bounded::Right => cot_bounded(alt, Bounded::Left),
    }
}

/// Whether the co-t-structure has an adjacent t-structure on the given side.
/// Decoration `x_p` sits between the primed labels `p′` and `(p+1)′`.
pub fn cot_adjacent(alt: &AltNcp, side: Bounded) -> bool {
    let m = alt.p.k();
    (1..=m).all(|p| {
        let next = if p == m { 1 } else { p + 1 };
        match (side, alt.x[p - 1]) {
            (Bounded::Right, Decoration::AccEnd) => alt.p.is_singleton(next),
            (Bounded::Left, Decoration::Marker) => alt.p.same_block(p, next),
            _ => true,
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct ThickClass {
    pub precovering_thick: bool,
    pub preenveloping_coaisle: bool,
    pub functorially_finite: bool,
}

pub fn thick_classify(alt: &AltNcp) -> ThickClass {
    let thick = alt.x.iter().all(|&d| matches!(d, Decoration::Marker | Decoration::AccEnd));
    ThickClass {
        precovering_thick: thick,
        preenveloping_coaisle: thick,
        functorially_finite: thick && cot_adjacent(alt, Bounded::Left),
    }
}

/// The TTF triple `(⊥T, T, T⊥)` of a functorially finite thick
/// subcategory `T`, given as the aisle of its co-t-structure: both
/// `(⊥T, T)` and `(T, T⊥)` are t-structures.
pub fn ttf_triple(cfg: &GonConfig, alt: &AltNcp) -> Result<(SymArcSet, SymArcSet, SymArcSet), TorsionError> {
    if !thick_classify(alt).functorially_finite {
        return Err(TorsionError::NotFunctoriallyFinite);
    }
    let t = cot_aisle(cfg, alt)?;
    let (left, right) = (perp(cfg, &t, Side::Left), perp(cfg, &t, Side::Right));
    Ok((left, t, right))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Datum {
    Hd(HalfDecNcp),
    Alt(AltNcp),
}

/// A (co-)t-structure together with its classifying datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionDescriptor {
    pub cfg: GonConfig,
    pub datum: Datum,
    pub aisle: SymArcSet,
    pub coaisle: SymArcSet,
    pub flags: BTreeMap<&'static str, bool>,
}

impl TorsionDescriptor {
    pub fn t(cfg: &GonConfig, hd: &HalfDecNcp) -> Result<Self, TorsionError> {
        let flags = BTreeMap::from([
            ("left_bounded", t_bounded(hd, Bounded::Left)),
            ("right_bounded", t_bounded(hd, Bounded::Right)),
            ("left_nondegenerate", t_nondeg(hd, Bounded::Left)),
            ("right_nondegenerate", t_nondeg(hd, Bounded::Right)),
        ]);
        Ok(TorsionDescriptor {
            cfg: *cfg,
            datum: Datum::Hd(hd.clone()),
            aisle: t_aisle(cfg, hd)?,
            coaisle: t_coaisle(cfg, hd)?,
            flags,
        })
    }

    pub fn cot(cfg: &GonConfig, alt: &AltNcp) -> Result<Self, TorsionError> {
        let thick = thick_classify(alt);
        let flags = BTreeMap::from([
            ("left_bounded", cot_bounded(alt, Bounded::Left)),
            ("right_bounded", cot_bounded(alt, Bounded::Right)),
            ("left_nondegenerate", cot_nondeg(alt, Bounded::Left)),
            ("right_nondegenerate", cot_nondeg(alt, Bounded::Right)),
            ("left_adjacent", cot_adjacent(alt, Bounded::Left)),
            ("right_adjacent", cot_adjacent(alt, Bounded::Right)),
            ("thick", thick.precovering_thick),
            ("functorially_finite", thick.functorially_finite),
        ]);
        Ok(TorsionDescriptor {
            cfg: *cfg,
            datum: Datum::Alt(alt.clone()),
            aisle: cot_aisle(cfg, alt)?,
            coaisle: cot_coaisle(cfg, alt)?,
            flags,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self.datum {
            Datum::Hd(_) => "t",
            Datum::Alt(_) => "cot",
        }
    }

    pub fn to_json(&self) -> Value {
        let datum = match &self.datum {
            Datum::Hd(hd) => hd.to_json(&self.cfg),
            Datum::Alt(alt) => alt.to_json(&self.cfg),
        };
        json!({
            "kind": self.kind(),
            "datum": datum,
            "aisle": self.aisle.to_json(),
            "coaisle": self.coaisle.to_json(),
            "flags": self.flags,
        })
    }

    /// Rebuilds the descriptor from its datum; stored sets and flags are
    /// recomputed rather than trusted.
    pub fn from_json(cfg: &GonConfig, v: &Value) -> Result<Self, TorsionError> {
        let datum = v.get("datum").unwrap_or(v);
        match v.get("kind").and_then(Value::as_str).or_else(|| datum.get("kind").and_then(Value::as_str)) {
            Some("cot") | Some("alt") => TorsionDescriptor::cot(cfg, &AltNcp::from_json(cfg, datum)?),
            _ => TorsionDescriptor::t(cfg, &HalfDecNcp::from_json(cfg, datum)?),
        }
    }
}

pub fn tt_meet(cfg: &GonConfig, a: &HalfDecNcp, b: &HalfDecNcp) -> Result<TorsionDescriptor, TorsionError> {
    TorsionDescriptor::t(cfg, &hd_meet(a, b)?)
}

pub fn tt_join(cfg: &GonConfig, a: &HalfDecNcp, b: &HalfDecNcp) -> Result<TorsionDescriptor, TorsionError> {
    TorsionDescriptor::t(cfg, &hd_join(a, b)?)
}

pub fn cot_meet(cfg: &GonConfig, a: &AltNcp, b: &AltNcp) -> Result<TorsionDescriptor, TorsionError> {
    TorsionDescriptor::cot(cfg, &alt_meet(a, b)?)
}

pub fn cot_join(cfg: &GonConfig, a: &AltNcp, b: &AltNcp) -> Result<TorsionDescriptor, TorsionError> {
    TorsionDescriptor::cot(cfg, &alt_join(a, b)?)
}
