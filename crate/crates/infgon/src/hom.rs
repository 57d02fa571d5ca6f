//! Shift, Hom-hammocks and Hom dimensions, irreducible morphisms, Ptolemy
//! arcs and middle terms of extensions.
//!
//! Every Hom space between indecomposables is at most one-dimensional, so a
//! Hom space is described by whether the target lies in one of two
//! rectangles of arcs attached to the source.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gon::{
    crosses, is_primed_slot, is_valid_arc, lift_arc, project_arc, Arc, Cut, GonConfig, Model, Point, PointSet,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("{0} and {1} are not Ext-related")]
    NotExtRelated(Arc, Arc),
    #[error("no morphism {b} -> Σ{a}, so there is no extension to take")]
    NoConnectingMorphism { a: Arc, b: Arc },
    #[error("reverse hammocks are only defined for the completed model")]
    ReverseInTwoM,
    #[error("no lift of {0} carries a morphism avoiding D")]
    NoAdmissibleLift(Arc),
}

/// A rectangle of arcs: `{(x1, x2) valid : x1 ∈ i, x2 ∈ j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub i: PointSet,
    pub j: PointSet,
}

impl Rect {
    pub fn new(i: PointSet, j: PointSet) -> Self {
        Rect { i, j }
    }

    /// All arcs with both endpoints in `s`.
    pub fn square(s: PointSet) -> Self {
        Rect { i: s.clone(), j: s }
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.i.contains(a.x1) && self.j.contains(a.x2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HammockKind {
    Hplus,
    Hminus,
    Iplus,
    Iminus,
}

/// Σⁿ: both endpoints move down by `n`; blobs stay put.
pub fn shift_arc(a: &Arc, n: i64) -> Arc {
    Arc { x1: a.x1.shifted(-n), x2: a.x2.shifted(-n), model: a.model }
}

pub(crate) type CutBox = ((Cut, Cut), (Cut, Cut));

pub(crate) fn hammock_cuts(cfg: &GonConfig, kind: HammockKind, a: &Arc) -> CutBox {
    use Cut as C;
    let (a1, a2) = (a.x1, a.x2);
    let (start, end) = (C::START, C::end(cfg));
    let (pb, qb) = (a1.is_blob(), a2.is_blob());
    match kind {
        HammockKind::Hplus if !qb => ((C::before(a1), C::after(a2.shifted(-2))), (C::before(a2), end)),
        HammockKind::Hplus => ((C::before(a1), C::before(a2)), (C::before(a2), end)),
        HammockKind::Hminus => {
            let i_hi = if pb { C::before(a1) } else { C::after(a1) };
            let j_lo = if pb { C::before(a1) } else { C::before(a1.shifted(2)) };
            let j_hi = if qb { C::before(a2) } else { C::after(a2) };
            ((start, i_hi), (j_lo, j_hi))
        }
        HammockKind::Iplus => {
            let i_lo = if pb { C::after(a1) } else { C::before(a1) };
            let (i_hi, j_lo) =
                if qb { (C::after(a2), C::after(a2)) } else { (C::after(a2.shifted(-2)), C::before(a2)) };
            ((i_lo, i_hi), (j_lo, end))
        }
        HammockKind::Iminus => {
            let j_lo = if pb { C::after(a1) } else { C::before(a1.shifted(2)) };
            ((start, C::after(a1)), (j_lo, C::after(a2)))
        }
    }
}

fn in_box(bx: &CutBox, x: &Arc) -> bool {
    let (c1, c2) = (Cut::before(x.x1), Cut::before(x.x2));
    bx.0 .0 <= c1 && c1 < bx.0 .1 && bx.1 .0 <= c2 && c2 < bx.1 .1
}

/// Whether `x` lies in the hammock of the given kind attached to `a`.
pub fn in_hammock(cfg: &GonConfig, kind: HammockKind, a: &Arc, x: &Arc) -> bool {
    in_box(&hammock_cuts(cfg, kind, a), x)
}

/// The hammock as a rectangle. In `C_{2m}` the reverse hammocks coincide
/// with the ordinary ones.
pub fn hammock(cfg: &GonConfig, model: Model, kind: HammockKind, a: &Arc) -> Result<Rect, HomError> {
    if model == Model::TwoM && matches!(kind, HammockKind::Iplus | HammockKind::Iminus) {
        return Err(HomError::ReverseInTwoM);
    }
    let ((a0, a1), (b0, b1)) = hammock_cuts(cfg, kind, a);
    Ok(Rect::new(PointSet::range(a0, a1), PointSet::range(b0, b1)))
}

/// `dim Hom(a, b)`, read off the forward hammocks: `b ∈ H⁺(a) ∪ H⁻(Σ²a)`.
pub fn hom_dim(cfg: &GonConfig, a: &Arc, b: &Arc) -> u8 {
    let hit = in_hammock(cfg, HammockKind::Hplus, a, b) || in_hammock(cfg, HammockKind::Hminus, &shift_arc(a, 2), b);
    u8::from(hit)
}

/// `dim Hom(a, b)` read off the reverse hammocks: `a ∈ I⁺(Σ⁻²b) ∪ I⁻(b)`.
pub fn hom_dim_reverse(cfg: &GonConfig, a: &Arc, b: &Arc) -> u8 {
    let hit = in_hammock(cfg, HammockKind::Iplus, &shift_arc(b, -2), a) || in_hammock(cfg, HammockKind::Iminus, b, a);
    u8::from(hit)
}

/// Arcs receiving an irreducible morphism from `a`.
pub fn irreducible_targets(cfg: &GonConfig, a: &Arc) -> Vec<Arc> {
    let mut out = Vec::new();
    let (p_blob, q_blob) = (a.x1.is_blob(), a.x2.is_blob());
    if !q_blob {
        out.push((a.x1, a.x2.shifted(1)));
    }
    if !p_blob {
        out.push((a.x1.shifted(1), a.x2));
    }
    out.into_iter()
        .filter(|&(u, v)| is_valid_arc(cfg, u, v, a.model))
        .map(|(x1, x2)| Arc { x1, x2, model: a.model })
        .collect()
}

/// Whether the pair carries a non-split extension in some direction.
pub fn ext_related(cfg: &GonConfig, a: &Arc, b: &Arc) -> bool {
    match a.model {
        Model::TwoM => crosses(a, b),
        Model::Bar => hom_dim(cfg, b, &shift_arc(a, 1)) == 1 || hom_dim(cfg, a, &shift_arc(b, 1)) == 1,
    }
}

/// Valid arcs, other than `a` and `b`, joining an endpoint of `a` to an
/// endpoint of `b`.
pub fn ptolemy_arcs(cfg: &GonConfig, a: &Arc, b: &Arc) -> Result<Vec<Arc>, HomError> {
    if !ext_related(cfg, a, b) {
        return Err(HomError::NotExtRelated(*a, *b));
    }
    Ok(connectors(cfg, a, b))
}

pub(crate) fn connectors(cfg: &GonConfig, a: &Arc, b: &Arc) -> Vec<Arc> {
    let mut out = Vec::new();
    for u in a.endpoints() {
        for v in b.endpoints() {
            if let Some(c) = Arc::unordered(cfg, a.model, u, v) {
                if c != *a && c != *b && !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out.sort();
    out
}

fn middle_term_2m(cfg: &GonConfig, a: &Arc, b: &Arc) -> Vec<Arc> {
    let (a1, a2, b1, b2) = (a.x1, a.x2, b.x1, b.x2);
    let pairs = if a1 < b1 && b1 < a2 && a2 < b2 { [(a1, b2), (b1, a2)] } else { [(b1, a1), (b2, a2)] };
    let mut out: Vec<Arc> = pairs.into_iter().filter_map(|(u, v)| Arc::new(cfg, a.model, u, v).ok()).collect();
    out.sort();
    out
}

/// Whether the non-zero morphism `s → t` of `C_{2m}` factors through an
/// object of `D` (an arc inside one primed segment).
pub fn factors_through_d(cfg: &GonConfig, s: &Arc, t: &Arc) -> bool {
    if s == t {
        return false;
    }
    use HammockKind::{Hminus, Hplus};
    let coords = s.endpoints().into_iter().chain(t.endpoints()).filter_map(|p| p.pos()).chain([0]);
    let lo = coords.clone().min().unwrap_or(0) - 10;
    let hi = coords.max().unwrap_or(0) + 10;
    let s2 = shift_arc(s, 2);
    let t_in_hp_s = in_hammock(cfg, Hplus, s, t);
    let t_in_hm_s2 = in_hammock(cfg, Hminus, &s2, t);
    for slot in (0..cfg.slots()).filter(|&x| is_primed_slot(x)) {
        for d1 in lo..=hi {
            for d2 in d1 + 2..=hi {
                let d = Arc { x1: Point::Reg { slot, pos: d1 }, x2: Point::Reg { slot, pos: d2 }, model: Model::TwoM };
                let d_in_hp_s = in_hammock(cfg, Hplus, s, &d);
                let d_in_hm_s2 = in_hammock(cfg, Hminus, &s2, &d);
                if !(d_in_hp_s || d_in_hm_s2) {
                    continue;
                }
                let t_in_hp_d = in_hammock(cfg, Hplus, &d, t);
                let case1 = d_in_hp_s && t_in_hp_s && t_in_hp_d;
                let case2 = d_in_hp_s && t_in_hm_s2 && in_hammock(cfg, Hminus, &shift_arc(&d, 2), t);
                let case3 = d_in_hm_s2 && t_in_hm_s2 && t_in_hp_d;
                if case1 || case2 || case3 {
                    return true;
                }
            }
        }
    }
    false
}

/// Lifts of `b` to `C_{2m}`: regular endpoints are kept, blob endpoints run
/// over their primed segment, smallest positions first.
fn lift_candidates(b: &Arc, lo: i64, hi: i64) -> Vec<Arc> {
    let range = |p: Point| -> Vec<Point> {
        match p {
            Point::Blob { slot } => (lo..=hi).map(|pos| Point::Reg { slot, pos }).collect(),
            r => vec![r],
        }
    };
    let mut out = Vec::new();
    for u in range(b.x1) {
        for v in range(b.x2) {
            if is_valid_arc_2m(u, v) {
                out.push(Arc { x1: u, x2: v, model: Model::TwoM });
            }
        }
    }
    let weight = |a: &Arc| {
        let i = if b.x1.is_blob() { a.x1.pos().unwrap_or(0) } else { 0 };
        let j = if b.x2.is_blob() { a.x2.pos().unwrap_or(0) } else { 0 };
        (i.abs() + j.abs(), i, j)
    };
    out.sort_by_key(weight);
    out
}

fn is_valid_arc_2m(u: Point, v: Point) -> bool {
    match (u, v) {
        (Point::Reg { slot: s, pos: a }, Point::Reg { slot: t, pos: c }) if s == t => c >= a + 2,
        _ => u < v,
    }
}

/// Indecomposable summands of `e` in the triangle `a → e → b → Σa` whose
/// connecting morphism `b → Σa` is the non-zero one.
///
/// In the completed model the triangle is computed upstairs: `a` is lifted
/// with blobs at the base point, `b` is lifted so that the connecting
/// morphism does not factor through `D`, and the middle term of `C_{2m}` is
/// projected back down.
pub fn middle_term(cfg: &GonConfig, a: &Arc, b: &Arc) -> Result<Vec<Arc>, HomError> {
    let sa = shift_arc(a, 1);
    if hom_dim(cfg, b, &sa) != 1 {
        return Err(HomError::NoConnectingMorphism { a: *a, b: *b });
    }
    match a.model {
        Model::TwoM => Ok(middle_term_2m(cfg, a, b)),
        Model::Bar => {
            let a_up = lift_arc(a);
            let sa_up = shift_arc(&a_up, 1);
            let coords = a_up.endpoints().into_iter().chain(b.endpoints()).filter_map(|p| p.pos()).chain([0]);
            let lo = coords.clone().min().unwrap_or(0) - 8;
            let hi = coords.max().unwrap_or(0) + 8;
            let b_up = lift_candidates(b, lo, hi)
                .into_iter()
                .find(|c| hom_dim(cfg, c, &sa_up) == 1 && !factors_through_d(cfg, c, &sa_up))
                .ok_or(HomError::NoAdmissibleLift(*b))?;
            let mut out: Vec<Arc> =
                middle_term_2m(cfg, &a_up, &b_up).iter().filter_map(|e| project_arc(cfg, e)).collect();
            out.sort();
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gon::{enumerate_window, AccLabel};

    fn cfg(m: usize) -> GonConfig {
        GonConfig::new(m).unwrap()
    }

    fn r(p: u32, n: i64) -> Point {
        Point::reg(AccLabel::unprimed(p), n)
    }

    fn b(p: u32) -> Point {
        Point::blob(AccLabel::primed(p))
    }

    fn arc(c: &GonConfig, model: Model, u: Point, v: Point) -> Arc {
        Arc::new(c, model, u, v).unwrap()
    }

    #[test]
    fn shift_examples() {
        let c = cfg(1);
        let a = arc(&c, Model::Bar, r(1, 0), r(1, 3));
        assert_eq!(shift_arc(&a, 1), arc(&c, Model::Bar, r(1, -1), r(1, 2)));
        let x = arc(&c, Model::Bar, b(1), r(1, 4));
        assert_eq!(shift_arc(&x, 1), arc(&c, Model::Bar, b(1), r(1, 3)));
        assert_eq!(shift_arc(&x, 0), x);
    }

    #[test]
    fn hammock_examples() {
        let c = cfg(1);
        let a = arc(&c, Model::Bar, b(1), r(1, 0));
        let h = hammock(&c, Model::Bar, HammockKind::Hplus, &a).unwrap();
        assert_eq!(h.i, PointSet::range(Cut::START, Cut::at(1, -1)));
        assert_eq!(h.j, PointSet::range(Cut::at(1, 0), Cut::end(&c)));
        let a3 = shift_arc(&arc(&c, Model::Bar, b(1), r(1, 3)), 2);
        assert!(hammock(&c, Model::Bar, HammockKind::Hminus, &a3).unwrap().i.is_empty());
        let u = arc(&c, Model::TwoM, r(1, 0), r(1, 3));
        let h = hammock(&c, Model::TwoM, HammockKind::Hplus, &u).unwrap();
        assert_eq!(h.i, PointSet::range(Cut::at(1, 0), Cut::at(1, 2)));
        assert_eq!(h.j, PointSet::range(Cut::at(1, 3), Cut::end(&c)));
    }

    #[test]
    fn hom_examples() {
        let c = cfg(1);
        let u = arc(&c, Model::TwoM, r(1, 0), r(1, 3));
        let v = arc(&c, Model::TwoM, r(1, 1), r(1, 4));
        assert_eq!(hom_dim(&c, &u, &v), 1);
        let x = arc(&c, Model::Bar, b(1), r(1, 0));
        let y = arc(&c, Model::Bar, b(1), r(1, 5));
        assert_eq!(hom_dim(&c, &x, &y), 1);
        assert_eq!(hom_dim(&c, &y, &x), 0);
        let c2 = cfg(2);
        let z = arc(&c2, Model::Bar, b(1), b(2));
        assert_eq!(hom_dim(&c2, &z, &shift_arc(&z, 1)), 1);
    }

    #[test]
    fn hammock_rect_matches_predicate() {
        for m in 1..=2 {
            let c = cfg(m);
            let arcs = enumerate_window(&c, 3, Model::Bar);
            for a in &arcs {
                for kind in [HammockKind::Hplus, HammockKind::Hminus, HammockKind::Iplus, HammockKind::Iminus] {
                    let rect = hammock(&c, Model::Bar, kind, a).unwrap();
                    for x in &arcs {
                        assert_eq!(rect.contains(x), in_hammock(&c, kind, a, x), "{kind:?} {a} {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn irreducible_examples() {
        let c = cfg(1);
        assert_eq!(
            irreducible_targets(&c, &arc(&c, Model::Bar, b(1), r(1, 0))),
            vec![arc(&c, Model::Bar, b(1), r(1, 1))]
        );
        assert_eq!(
            irreducible_targets(&c, &arc(&c, Model::Bar, r(1, 0), r(1, 5))),
            vec![arc(&c, Model::Bar, r(1, 0), r(1, 6)), arc(&c, Model::Bar, r(1, 1), r(1, 5))]
        );
        let c2 = cfg(2);
        assert!(irreducible_targets(&c2, &arc(&c2, Model::Bar, b(1), b(2))).is_empty());
    }

    #[test]
    fn ptolemy_examples() {
        let c = cfg(1);
        let m = Model::TwoM;
        let got = ptolemy_arcs(&c, &arc(&c, m, r(1, 0), r(1, 3)), &arc(&c, m, r(1, 2), r(1, 5))).unwrap();
        let want: Vec<Arc> = [(0, 2), (0, 5), (2, 3), (3, 5)]
            .iter()
            .filter_map(|&(u, v)| Arc::new(&c, m, r(1, u), r(1, v)).ok())
            .collect();
        assert_eq!(got, want);
        let got = ptolemy_arcs(&c, &arc(&c, m, r(1, 0), r(1, 2)), &arc(&c, m, r(1, 1), r(1, 3))).unwrap();
        assert_eq!(got, vec![arc(&c, m, r(1, 0), r(1, 3))]);
        let got = ptolemy_arcs(&c, &arc(&c, Model::Bar, b(1), r(1, 0)), &arc(&c, Model::Bar, b(1), r(1, 5))).unwrap();
        assert_eq!(got, vec![arc(&c, Model::Bar, r(1, 0), r(1, 5))]);
        let far = ptolemy_arcs(&c, &arc(&c, m, r(1, 0), r(1, 2)), &arc(&c, m, r(1, 5), r(1, 7)));
        assert!(far.is_err());
    }

    #[test]
    fn middle_term_examples() {
        let c = cfg(1);
        let m = Model::TwoM;
        let e = middle_term(&c, &arc(&c, m, r(1, 0), r(1, 3)), &arc(&c, m, r(1, 1), r(1, 4))).unwrap();
        assert_eq!(e, vec![arc(&c, m, r(1, 0), r(1, 4)), arc(&c, m, r(1, 1), r(1, 3))]);
        let e = middle_term(&c, &arc(&c, m, r(1, 0), r(1, 2)), &arc(&c, m, r(1, 1), r(1, 3))).unwrap();
        assert_eq!(e, vec![arc(&c, m, r(1, 0), r(1, 3))]);
        let c2 = cfg(2);
        let z = arc(&c2, Model::Bar, b(1), b(2));
        assert_eq!(middle_term(&c2, &z, &z).unwrap(), vec![]);
        let e = middle_term(&c, &arc(&c, Model::Bar, b(1), r(1, 5)), &arc(&c, Model::Bar, b(1), r(1, 0))).unwrap();
        assert_eq!(e, vec![arc(&c, Model::Bar, r(1, 0), r(1, 5))]);
    }
}
