use infgon::arcsets::{is_t_aisle, perp, Side, SymArcSet};
use infgon::gon::{GonConfig, Model};
use infgon::ncp::{alt_join, alt_meet, enumerate_alt, enumerate_hd, AltNcp, Decoration, HalfDecNcp, NcPartition};
use infgon::oracle::{brute_perp, verify_torsion};
use infgon::torsion::{
    cot_adjacent, cot_aisle, cot_bounded, cot_coaisle, t_aisle, thick_classify, tt_meet, ttf_triple, Bounded,
    TorsionDescriptor, TorsionError,
};

fn cfg(m: usize) -> GonConfig {
    GonConfig::new(m).unwrap()
}

/// `X` is the co-aisle of some t-structure exactly when `(⊥X, X)` is one.
fn is_t_coaisle(c: &GonConfig, x: &SymArcSet) -> bool {
    let left = perp(c, x, Side::Left);
    is_t_aisle(c, &left).unwrap() && perp(c, &left, Side::Right) == *x
}

#[test]
fn adjacency_matches_perpendiculars() {
    for m in [1, 2] {
        let c = cfg(m);
        for d in enumerate_alt(&c, -1, 1) {
            let (x, y) = (cot_aisle(&c, &d).unwrap(), cot_coaisle(&c, &d).unwrap());
            let label = d.to_json(&c);
            assert_eq!(cot_adjacent(&d, Bounded::Right), is_t_aisle(&c, &y).unwrap(), "right, {label}");
            assert_eq!(cot_adjacent(&d, Bounded::Left), is_t_coaisle(&c, &x), "left, {label}");
        }
    }
}

#[test]
fn shift_closure() {
    for m in [1, 2] {
        let c = cfg(m);
        for d in enumerate_hd(&c, -1, 1) {
            let x = t_aisle(&c, &d).unwrap();
            assert!(x.shift_set(1).is_subset(&x).unwrap());
        }
        for d in enumerate_alt(&c, -1, 1) {
            let x = cot_aisle(&c, &d).unwrap();
            assert!(x.shift_set(-1).is_subset(&x).unwrap());
            let thick = thick_classify(&d);
            assert_eq!(thick.precovering_thick, x.shift_set(1).is_subset(&x).unwrap(), "{}", d.to_json(&c));
            if d.x.iter().any(|x| matches!(x, Decoration::Reg(_))) {
                assert!(!thick.precovering_thick);
            }
        }
    }
}

#[test]
fn ttf_triple_nontrivial() {
    let c = cfg(2);
    let one_block = NcPartition::coarsest(2);
    let d = AltNcp::new(&c, one_block, vec![Decoration::Marker, Decoration::AccEnd]).unwrap();
    let (x, y, z) = ttf_triple(&c, &d).unwrap();
    assert_eq!(y, cot_aisle(&c, &d).unwrap());
    for s in [&x, &y, &z] {
        assert!(!s.is_empty() && *s != SymArcSet::all(&c, Model::Bar));
    }
    for (a, b) in [(&x, &y), (&y, &z)] {
        let r = verify_torsion(&c, a, b, 5);
        assert!(r.passed(), "{}", r.to_table());
    }

    let split = AltNcp::new(&c, NcPartition::finest(2), vec![Decoration::Marker, Decoration::AccEnd]).unwrap();
    assert_eq!(ttf_triple(&c, &split), Err(TorsionError::NotFunctoriallyFinite));
}

#[test]
fn adjacent_structures_form_sublattices() {
    let c = cfg(2);
    let all = enumerate_alt(&c, 0, 1);
    for side in [Bounded::Left, Bounded::Right] {
        let chosen: Vec<&AltNcp> = all.iter().filter(|d| cot_adjacent(d, side)).collect();
        for a in &chosen {
            for b in &chosen {
                assert!(cot_adjacent(&alt_meet(a, b).unwrap(), side));
                assert!(cot_adjacent(&alt_join(a, b).unwrap(), side));
            }
        }
    }
}

#[test]
fn meet_with_minimum() {
    let c = cfg(2);
    let bottom = HalfDecNcp::new(&c, NcPartition::finest(4), vec![Decoration::Marker; 2]).unwrap();
    for d in enumerate_hd(&c, -1, 1) {
        let meet = tt_meet(&c, &bottom, &d).unwrap();
        assert!(meet.aisle.is_empty());
    }
}

#[test]
fn no_bounded_co_t_structures_for_two_segments() {
    let c = cfg(2);
    let bounded = enumerate_alt(&c, -2, 2)
        .into_iter()
        .filter(|d| cot_bounded(d, Bounded::Left) && cot_bounded(d, Bounded::Right))
        .count();
    assert_eq!(bounded, 0);
}

#[test]
fn descriptor_json_round_trip() {
    let c = cfg(2);
    for d in enumerate_hd(&c, 0, 1).iter().step_by(7) {
        let desc = TorsionDescriptor::t(&c, d).unwrap();
        let v = desc.to_json();
        assert_eq!(v["kind"], "t");
        assert_eq!(TorsionDescriptor::from_json(&c, &v).unwrap(), desc);
        assert_eq!(SymArcSet::from_json(&v["aisle"]).unwrap(), desc.aisle);
    }
    for d in enumerate_alt(&c, 0, 1).iter().step_by(5) {
        let desc = TorsionDescriptor::cot(&c, d).unwrap();
        let v = desc.to_json();
        assert_eq!(v["kind"], "cot");
        assert_eq!(TorsionDescriptor::from_json(&c, &v).unwrap(), desc);
    }
}

#[test]
fn perpendiculars_match_brute_force() {
    let c = cfg(1);
    let d = HalfDecNcp::new(&c, NcPartition::coarsest(2), vec![Decoration::Reg(0)]).unwrap();
    let x = t_aisle(&c, &d).unwrap();
    for side in [Side::Right, Side::Left] {
        assert_eq!(perp(&c, &x, side).truncate(6), brute_perp(&c, &x.truncate(12), 6, side));
    }
    for m in [1, 2] {
        let c = cfg(m);
        for d in enumerate_alt(&c, 0, 1) {
            let x = cot_aisle(&c, &d).unwrap();
            let y = perp(&c, &x, Side::Right);
            assert_eq!(y.truncate(5), brute_perp(&c, &x.truncate(10), 5, Side::Right), "{}", d.to_json(&c));
        }
    }
}
