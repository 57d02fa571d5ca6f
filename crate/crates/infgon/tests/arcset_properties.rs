//! Symbolic arc sets against explicit windows: the set operations mean what
//! they say on every window arc, and equal sets have identical normal forms
//! however they were built.

use infgon::arcsets::SymArcSet;
use infgon::gon::{enumerate_window, Cut, GonConfig, Model, PointSet};
use infgon::hom::{shift_arc, Rect};
use proptest::prelude::*;

const W: i64 = 9;

fn cut(cfg: &GonConfig, model: Model) -> impl Strategy<Value = Cut> {
    let slots = cfg.slots();
    let cfg = *cfg;
    (0..=slots, prop::option::of(-4i64..=4)).prop_map(move |(s, pos)| match pos {
        Some(n) if s < slots && cfg.is_z_slot(model, s) => Cut::at(s, n),
        _ => Cut::bottom(s),
    })
}

fn point_set(cfg: &GonConfig, model: Model) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((cut(cfg, model), cut(cfg, model)), 1..3).prop_map(|pairs| {
        PointSet::from_pieces(pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect())
    })
}

fn rects(cfg: &GonConfig, model: Model) -> impl Strategy<Value = Vec<Rect>> {
    prop::collection::vec((point_set(cfg, model), point_set(cfg, model)).prop_map(|(i, j)| Rect::new(i, j)), 0..4)
}

fn case() -> impl Strategy<Value = (GonConfig, Model, Vec<Rect>, Vec<Rect>)> {
    (1usize..=2, prop_oneof![Just(Model::Bar), Just(Model::TwoM)]).prop_flat_map(|(m, model)| {
        let cfg = GonConfig::new(m).unwrap();
        (Just(cfg), Just(model), rects(&cfg, model), rects(&cfg, model))
    })
}

fn build(cfg: &GonConfig, model: Model, r: &[Rect]) -> SymArcSet {
    SymArcSet::from_rects(cfg, model, r).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn operations_match_windows((cfg, model, ra, rb) in case()) {
        let (a, b) = (build(&cfg, model, &ra), build(&cfg, model, &rb));
        let (u, i, d, c) = (a.union(&b).unwrap(), a.intersect(&b).unwrap(), a.difference(&b).unwrap(), a.complement());
        for t in enumerate_window(&cfg, W, model) {
            let in_rects = ra.iter().any(|r| r.contains(&t));
            prop_assert_eq!(a.member(&t), in_rects, "{}", t);
            let (x, y) = (a.member(&t), b.member(&t));
            prop_assert_eq!(u.member(&t), x || y);
            prop_assert_eq!(i.member(&t), x && y);
            prop_assert_eq!(d.member(&t), x && !y);
            prop_assert_eq!(c.member(&t), !x);
            prop_assert_eq!(a.shift_set(1).member(&t), a.member(&shift_arc(&t, -1)));
        }
        prop_assert_eq!(a.is_subset(&b).unwrap(), d.is_empty());
    }

    #[test]
    fn normal_forms_are_confluent((cfg, model, ra, rb) in case()) {
        let (a, b) = (build(&cfg, model, &ra), build(&cfg, model, &rb));
        let mut reversed = ra.clone();
        reversed.reverse();
        prop_assert_eq!(&build(&cfg, model, &reversed), &a);
        let one_by_one = ra.iter().fold(SymArcSet::empty(&cfg, model), |acc, r| {
            acc.union(&build(&cfg, model, std::slice::from_ref(r))).unwrap()
        });
        prop_assert_eq!(&one_by_one, &a);
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        let split = a.difference(&b).unwrap().union(&a.intersect(&b).unwrap()).unwrap();
        prop_assert_eq!(&split, &a);
        prop_assert_eq!(&a.complement().complement(), &a);
        prop_assert_eq!(&build(&cfg, model, &a.rects()), &a);
        prop_assert_eq!(&SymArcSet::from_json(&a.to_json()).unwrap(), &a);

        let same_window = enumerate_window(&cfg, W, model).iter().all(|t| a.member(t) == b.member(t));
        prop_assert_eq!(a.set_equals(&b).unwrap(), same_window);
        prop_assert_eq!(a == b, same_window);
    }
}
