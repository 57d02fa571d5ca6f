//! Circle diagrams: accumulation tokens equally spaced, each segment's
//! positions squashed into the open arc after its marker, member arcs of the
//! aisle drawn as chords.

use std::f64::consts::PI;
use std::fmt::Write;

use infgon::gon::{enumerate_window, is_primed_slot, AccLabel, Model, Point};
use infgon::ncp::Decoration;
use infgon::torsion::{Datum, TorsionDescriptor};

const SIZE: f64 = 440.0;
const R: f64 = 170.0;

fn at(angle: f64, radius: f64) -> (f64, f64) {
    (SIZE / 2.0 + radius * angle.cos(), SIZE / 2.0 - radius * angle.sin())
}

/// Angle of a point: token `s` sits at `s/2m` of a turn, position `n` of a
/// segment at `(s + f(n))/2m` with `f` an increasing map of `Z` onto `(0, 1)`.
fn angle(slots: u32, p: Point) -> f64 {
    let frac = match p {
        Point::Blob { slot } => f64::from(slot),
        Point::Reg { slot, pos } => f64::from(slot) + 0.5 + (pos as f64 / 3.0).atan() / PI,
    };
    2.0 * PI * frac / f64::from(slots)
}

pub fn svg(d: &TorsionDescriptor, w: i64) -> String {
    let cfg = d.cfg;
    let slots = cfg.slots();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<circle cx="{c}" cy="{c}" r="{R}" fill="none" stroke="black"/>"#, c = SIZE / 2.0);

    let _ = writeln!(s, r#"<g stroke="steelblue" stroke-opacity="0.35">"#);
    for a in enumerate_window(&cfg, w, Model::Bar).iter().filter(|a| d.aisle.member(a)) {
        let (x1, y1) = at(angle(slots, a.x1), R);
        let (x2, y2) = at(angle(slots, a.x2), R);
        let _ = writeln!(s, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
    }
    let _ = writeln!(s, "</g>");

    for slot in 0..slots {
        let label = AccLabel::from_slot(slot);
        let theta = angle(slots, Point::Blob { slot });
        if is_primed_slot(slot) {
            let (x, y) = at(theta, R);
            let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="black"/>"#);
        } else {
            let ((x1, y1), (x2, y2)) = (at(theta, R - 8.0), at(theta, R + 8.0));
            let _ = writeln!(
                s,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="2"/>"#
            );
            for pos in -w..=w {
                let (x, y) = at(angle(slots, Point::Reg { slot, pos }), R);
                let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="1.5" fill="gray"/>"#);
            }
        }
        let (x, y) = at(theta, R + 22.0);
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{y:.2}" font-size="13" text-anchor="middle" dominant-baseline="middle">{label}</text>"#
        );
    }

    let decorations = match &d.datum {
        Datum::Hd(h) => &h.x,
        Datum::Alt(a) => &a.x,
    };
    for (i, x) in decorations.iter().enumerate() {
        if let Decoration::Reg(pos) = *x {
            let (cx, cy) = at(angle(slots, Point::Reg { slot: 2 * i as u32 + 1, pos }), R);
            let _ = writeln!(
                s,
                r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="4" fill="none" stroke="firebrick" stroke-width="2"/>"#
            );
        }
    }
    s.push_str("</svg>\n");
    s
}
