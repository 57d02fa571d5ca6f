//! Windowed cross-checks of the Hom formulas.

use infgon::gon::{crosses, enumerate_window, GonConfig, Model};
use infgon::hom::{hom_dim, hom_dim_reverse, shift_arc};

#[test]
fn two_m_hom_is_crossing_with_desuspension() {
    for m in 1..=2 {
        let cfg = GonConfig::new(m).unwrap();
        let arcs = enumerate_window(&cfg, 4, Model::TwoM);
        for a in &arcs {
            for b in &arcs {
                let want = u8::from(crosses(a, &shift_arc(b, -1)));
                assert_eq!(hom_dim(&cfg, a, b), want, "m={m} {a} {b}");
            }
        }
    }
}

#[test]
fn forward_and_reverse_hammocks_agree() {
    for m in 1..=3 {
        let cfg = GonConfig::new(m).unwrap();
        let arcs = enumerate_window(&cfg, 3, Model::Bar);
        for a in &arcs {
            for b in &arcs {
                assert_eq!(hom_dim(&cfg, a, b), hom_dim_reverse(&cfg, a, b), "m={m} {a} {b}");
            }
        }
    }
}

#[test]
fn hom_is_shift_equivariant() {
    for model in [Model::TwoM, Model::Bar] {
        for m in 1..=2 {
            let cfg = GonConfig::new(m).unwrap();
            let arcs = enumerate_window(&cfg, 3, model);
            for a in &arcs {
                for b in &arcs {
                    let h = hom_dim(&cfg, a, b);
                    assert_eq!(h, hom_dim(&cfg, &shift_arc(a, 1), &shift_arc(b, 1)), "{a} {b}");
                    assert_eq!(h, hom_dim(&cfg, &shift_arc(a, -3), &shift_arc(b, -3)), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn no_self_extensions_for_arcs_with_a_regular_endpoint() {
    for m in 1..=3 {
        let cfg = GonConfig::new(m).unwrap();
        for a in enumerate_window(&cfg, 4, Model::Bar) {
            let expected = u8::from(a.x1.is_blob() && a.x2.is_blob());
            assert_eq!(hom_dim(&cfg, &a, &shift_arc(&a, 1)), expected, "{a}");
        }
    }
}
