//! Points, orders, intervals and arcs on the ∞-gons.
//!
//! Both models share one coordinate scheme. The `2m` accumulation labels
//! `1′ < 1 < 2′ < 2 < … < m′ < m` are numbered by *slots* `0..2m`
//! (`p′ ↦ 2p−2`, `p ↦ 2p−1`), and slot `s` is the open arc between label `s`
//! and its successor. In [`Model::TwoM`] every slot is a copy of `Z`; in
//! [`Model::Bar`] the primed slots collapse to a single accumulation point
//! (a *blob*) while the unprimed slots stay copies of `Z`.
//!
//! Reading the circle linearly from label `1′` gives a total order. Boundaries
//! between points are [`Cut`]s, and subsets of the circle are finite unions of
//! half-open cut ranges ([`PointSet`]).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

/// Errors raised by the geometric layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GonError {
    #[error("m must be at least 1")]
    ZeroM,
    #[error("label {label} is out of range for m = {m}")]
    LabelOutOfRange { label: String, m: usize },
    #[error("malformed accumulation label {0:?}")]
    BadLabel(String),
    #[error("{token} does not belong to the {model} model")]
    WrongModel { token: String, model: Model },
    #[error("tokens {0} and {1} live in different models")]
    MixedModels(String, String),
    #[error("({0}, {1}) is not an arc")]
    InvalidArc(String, String),
    #[error("malformed point: {0}")]
    BadPoint(String),
}

/// Which category the arcs index: `C_{2m}` or the completion `C̄_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "2m")]
    TwoM,
    #[serde(rename = "bar")]
    Bar,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::TwoM => f.write_str("2m"),
            Model::Bar => f.write_str("bar"),
        }
    }
}

/// Global parameter: the number of unprimed accumulation points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GonConfig {
    m: usize,
}

impl GonConfig {
    pub fn new(m: usize) -> Result<Self, GonError> {
        if m == 0 {
            return Err(GonError::ZeroM);
        }
        Ok(GonConfig { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of slots, `2m`.
    pub fn slots(&self) -> u32 {
        2 * self.m as u32
    }

    pub fn succ_slot(&self, s: u32) -> u32 {
        (s + 1) % self.slots()
    }

    pub fn pred_slot(&self, s: u32) -> u32 {
        (s + self.slots() - 1) % self.slots()
    }

    /// Whether slot `s` is a copy of `Z` in the given model.
    pub fn is_z_slot(&self, model: Model, s: u32) -> bool {
        model == Model::TwoM || !is_primed_slot(s)
    }

    pub fn check_label(&self, l: AccLabel) -> Result<(), GonError> {
        if l.index == 0 || l.index as usize > self.m {
            return Err(GonError::LabelOutOfRange { label: l.to_string(), m: self.m });
        }
        Ok(())
    }

    pub fn labels(&self) -> impl Iterator<Item = AccLabel> {
        (0..self.slots()).map(AccLabel::from_slot)
    }
}

pub fn is_primed_slot(s: u32) -> bool {
    s % 2 == 0
}

/// An accumulation label `p` or `p′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AccLabel {
    pub index: u32,
    pub primed: bool,
}

impl AccLabel {
    pub fn unprimed(index: u32) -> Self {
        AccLabel { index, primed: false }
    }

    pub fn primed(index: u32) -> Self {
        AccLabel { index, primed: true }
    }

    pub fn slot(&self) -> u32 {
        2 * (self.index - 1) + u32::from(!self.primed)
    }

    pub fn from_slot(s: u32) -> Self {
        AccLabel { index: s / 2 + 1, primed: is_primed_slot(s) }
    }

    pub fn succ(&self, cfg: &GonConfig) -> Self {
        AccLabel::from_slot(cfg.succ_slot(self.slot()))
    }

    pub fn pred(&self, cfg: &GonConfig) -> Self {
        AccLabel::from_slot(cfg.pred_slot(self.slot()))
    }
}

impl fmt::Display for AccLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for AccLabel {
    type Err = GonError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (digits, primed) = match t.strip_suffix('\'').or_else(|| t.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (t, false),
        };
        let index: u32 = digits.parse().map_err(|_| GonError::BadLabel(s.to_string()))?;
        if index == 0 {
            return Err(GonError::BadLabel(s.to_string()));
        }
        Ok(AccLabel { index, primed })
    }
}

impl Serialize for AccLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.primed {
            s.serialize_str(&self.to_string())
        } else {
            s.serialize_u32(self.index)
        }
    }
}

impl<'de> Deserialize<'de> for AccLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        label_from_value(&v).map_err(D::Error::custom)
    }
}

pub(crate) fn label_from_value(v: &Value) -> Result<AccLabel, GonError> {
    match v {
        Value::Number(n) => {
            let i = n.as_u64().filter(|&i| i > 0).ok_or_else(|| GonError::BadLabel(n.to_string()))?;
            Ok(AccLabel::unprimed(i as u32))
        }
        Value::String(s) => s.parse(),
        other => Err(GonError::BadLabel(other.to_string())),
    }
}

/// A point of `Z_{2m}` or of `Z̄_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Reg { slot: u32, pos: i64 },
    Blob { slot: u32 },
}

impl Point {
    pub fn reg(label: AccLabel, pos: i64) -> Self {
        Point::Reg { slot: label.slot(), pos }
    }

    pub fn blob(label: AccLabel) -> Self {
        Point::Blob { slot: label.slot() }
    }

    pub fn slot(&self) -> u32 {
        match *self {
            Point::Reg { slot, .. } | Point::Blob { slot } => slot,
        }
    }

    pub fn label(&self) -> AccLabel {
        AccLabel::from_slot(self.slot())
    }

    pub fn pos(&self) -> Option<i64> {
        match *self {
            Point::Reg { pos, .. } => Some(pos),
            Point::Blob { .. } => None,
        }
    }

    pub fn is_blob(&self) -> bool {
        matches!(self, Point::Blob { .. })
    }

    /// `self + n`; blobs are fixed points of successor and predecessor.
    pub fn shifted(self, n: i64) -> Self {
        match self {
            Point::Reg { slot, pos } => Point::Reg { slot, pos: pos + n },
            b => b,
        }
    }

    pub fn in_model(&self, cfg: &GonConfig, model: Model) -> bool {
        self.slot() < cfg.slots()
            && match self {
                Point::Reg { slot, .. } => cfg.is_z_slot(model, *slot),
                Point::Blob { slot } => model == Model::Bar && is_primed_slot(*slot),
            }
    }

    fn key(&self) -> (u32, i64) {
        match *self {
            Point::Reg { slot, pos } => (slot, pos),
            Point::Blob { slot } => (slot, 0),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Point::Reg { pos, .. } => json!({ "seg": self.label(), "pos": pos }),
            Point::Blob { .. } => json!({ "blob": self.label().to_string() }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, GonError> {
        match ExtPoint::from_json(v)? {
            ExtPoint::Pt(p) => Ok(p),
            ExtPoint::Marker(_) => Err(GonError::BadPoint(format!("marker {v} is not an arc endpoint"))),
        }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Reg { pos, .. } => write!(f, "{}:{}", self.label(), pos),
            Point::Blob { .. } => write!(f, "{}", self.label()),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Point::from_json(&v).map_err(D::Error::custom)
    }
}

/// A point, or a bare accumulation marker used as an interval endpoint.
///
/// `Marker(s)` sits just below every point of slot `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtPoint {
    Pt(Point),
    Marker(u32),
}

impl ExtPoint {
    fn model_hint(&self) -> Option<Model> {
        match self {
            ExtPoint::Pt(Point::Blob { .. }) => Some(Model::Bar),
            ExtPoint::Pt(Point::Reg { slot, .. }) | ExtPoint::Marker(slot) if is_primed_slot(*slot) => {
                Some(Model::TwoM)
            }
            _ => None,
        }
    }

    fn slot(&self) -> u32 {
        match self {
            ExtPoint::Pt(p) => p.slot(),
            ExtPoint::Marker(s) => *s,
        }
    }

    fn key(&self) -> (u32, u8, i64) {
        match *self {
            ExtPoint::Marker(s) => (s, 0, 0),
            ExtPoint::Pt(Point::Blob { slot }) => (slot, 1, 0),
            ExtPoint::Pt(Point::Reg { slot, pos }) => (slot, 1, pos),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExtPoint::Pt(p) => p.to_json(),
            ExtPoint::Marker(s) => json!({ "marker": AccLabel::from_slot(*s) }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, GonError> {
        let obj = v.as_object().ok_or_else(|| GonError::BadPoint(v.to_string()))?;
        if let Some(l) = obj.get("blob") {
            let label = label_from_value(l)?;
            if !label.primed {
                return Err(GonError::BadPoint(format!("blob label {label} must be primed")));
            }
            return Ok(ExtPoint::Pt(Point::blob(label)));
        }
        if let Some(l) = obj.get("marker") {
            return Ok(ExtPoint::Marker(label_from_value(l)?.slot()));
        }
        if let (Some(l), Some(p)) = (obj.get("seg"), obj.get("pos")) {
            let label = label_from_value(l)?;
            let pos = p.as_i64().ok_or_else(|| GonError::BadPoint(format!("position {p} is not an integer")))?;
            return Ok(ExtPoint::Pt(Point::reg(label, pos)));
        }
        Err(GonError::BadPoint(v.to_string()))
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoint::Pt(p) => p.fmt(f),
            ExtPoint::Marker(s) => write!(f, "|{}", AccLabel::from_slot(*s)),
        }
    }
}

/// Total order on tokens. Fails if the two tokens cannot live in one model.
pub fn compare(cfg: &GonConfig, a: &ExtPoint, b: &ExtPoint) -> Result<Ordering, GonError> {
    for t in [a, b] {
        if t.slot() >= cfg.slots() {
            return Err(GonError::LabelOutOfRange { label: AccLabel::from_slot(t.slot()).to_string(), m: cfg.m() });
        }
    }
    if let (Some(x), Some(y)) = (a.model_hint(), b.model_hint()) {
        if x != y {
            return Err(GonError::MixedModels(a.to_string(), b.to_string()));
        }
    }
    Ok(a.key().cmp(&b.key()))
}

/// A boundary between consecutive points.
///
/// `Cut { slot, pos: None }` is the bottom of slot `slot` (equivalently the
/// top of slot `slot − 1`); `Cut { slot, pos: Some(n) }` sits just below
/// `Reg(slot, n)`. `Cut { slot: 2m, pos: None }` is the end of the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    pub slot: u32,
    pub pos: Option<i64>,
}

impl Cut {
    pub const START: Cut = Cut { slot: 0, pos: None };

    pub fn end(cfg: &GonConfig) -> Cut {
        Cut { slot: cfg.slots(), pos: None }
    }

    pub fn bottom(slot: u32) -> Cut {
        Cut { slot, pos: None }
    }

    pub fn at(slot: u32, pos: i64) -> Cut {
        Cut { slot, pos: Some(pos) }
    }

    pub fn before(p: Point) -> Cut {
        match p {
            Point::Reg { slot, pos } => Cut::at(slot, pos),
            Point::Blob { slot } => Cut::bottom(slot),
        }
    }

    pub fn after(p: Point) -> Cut {
        match p {
            Point::Reg { slot, pos } => Cut::at(slot, pos + 1),
            Point::Blob { slot } => Cut::bottom(slot + 1),
        }
    }

    pub fn lower(e: ExtPoint, closed: bool) -> Cut {
        match e {
            ExtPoint::Marker(s) => Cut::bottom(s),
            ExtPoint::Pt(p) if closed => Cut::before(p),
            ExtPoint::Pt(p) => Cut::after(p),
        }
    }

    pub fn upper(e: ExtPoint, closed: bool) -> Cut {
        match e {
            ExtPoint::Marker(s) => Cut::bottom(s),
            ExtPoint::Pt(p) if closed => Cut::after(p),
            ExtPoint::Pt(p) => Cut::before(p),
        }
    }

    /// Σⁿ applied to the cut: positions drop by `n` in copies of `Z`.
    pub fn shifted(self, n: i64) -> Cut {
        Cut { slot: self.slot, pos: self.pos.map(|p| p - n) }
    }

    pub fn to_json(&self, cfg: &GonConfig, model: Model) -> Value {
        if self.slot >= cfg.slots() {
            return Value::String("end".into());
        }
        let label = AccLabel::from_slot(self.slot);
        match self.pos {
            Some(n) => json!({ "seg": label, "pos": n }),
            None if !cfg.is_z_slot(model, self.slot) => json!({ "blob": label.to_string() }),
            None => json!({ "marker": label }),
        }
    }

    pub fn from_json(cfg: &GonConfig, v: &Value) -> Result<Cut, GonError> {
        if v.as_str() == Some("end") {
            return Ok(Cut::end(cfg));
        }
        Ok(match ExtPoint::from_json(v)? {
            ExtPoint::Marker(s) => Cut::bottom(s),
            ExtPoint::Pt(p) => Cut::before(p),
        })
    }
}

/// A finite union of half-open cut ranges `[lo, hi)`, kept sorted, disjoint
/// and non-adjacent so that equal sets have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PointSet {
    pieces: Vec<(Cut, Cut)>,
}

impl PointSet {
    pub fn empty() -> Self {
        PointSet::default()
    }

    pub fn full(cfg: &GonConfig) -> Self {
        PointSet::range(Cut::START, Cut::end(cfg))
    }

    pub fn range(lo: Cut, hi: Cut) -> Self {
        if lo < hi {
            PointSet { pieces: vec![(lo, hi)] }
        } else {
            PointSet::empty()
        }
    }

    /// The whole of slot `s`: a copy of `Z`, or a blob.
    pub fn slot(s: u32) -> Self {
        PointSet::range(Cut::bottom(s), Cut::bottom(s + 1))
    }

    pub fn single(p: Point) -> Self {
        PointSet::range(Cut::before(p), Cut::after(p))
    }

    /// The interval from `lo` to `hi`; when `lo` lies above `hi` the interval
    /// wraps through the end of the circle, `{z : z ≥ lo or z < hi}` in the
    /// half-open case.
    pub fn interval(cfg: &GonConfig, lo: ExtPoint, lo_closed: bool, hi: ExtPoint, hi_closed: bool) -> Self {
        let a = Cut::lower(lo, lo_closed);
        let b = Cut::upper(hi, hi_closed);
        if a <= b {
            PointSet::range(a, b)
        } else {
            PointSet::from_pieces(vec![(Cut::START, b), (a, Cut::end(cfg))])
        }
    }

    pub fn from_pieces(mut raw: Vec<(Cut, Cut)>) -> Self {
        raw.retain(|(a, b)| a < b);
        raw.sort();
        let mut pieces: Vec<(Cut, Cut)> = Vec::with_capacity(raw.len());
        for (a, b) in raw {
            match pieces.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => pieces.push((a, b)),
            }
        }
        PointSet { pieces }
    }

    pub fn pieces(&self) -> &[(Cut, Cut)] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        let c = Cut::before(p);
        self.pieces.iter().any(|&(a, b)| a <= c && c < b)
    }

    /// Whether the cut range `[lo, hi)` lies inside the set.
    pub fn covers(&self, lo: Cut, hi: Cut) -> bool {
        self.pieces.iter().any(|&(a, b)| a <= lo && hi <= b)
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet::from_pieces(self.pieces.iter().chain(&other.pieces).copied().collect())
    }

    pub fn intersect(&self, other: &PointSet) -> PointSet {
        let mut out = Vec::new();
        for &(a, b) in &self.pieces {
            for &(c, d) in &other.pieces {
                let lo = a.max(c);
                let hi = b.min(d);
                if lo < hi {
                    out.push((lo, hi));
                }
            }
        }
        PointSet::from_pieces(out)
    }

    pub fn complement(&self, cfg: &GonConfig) -> PointSet {
        let mut out = Vec::new();
        let mut cur = Cut::START;
        for &(a, b) in &self.pieces {
            out.push((cur, a));
            cur = b;
        }
        out.push((cur, Cut::end(cfg)));
        PointSet::from_pieces(out)
    }

    pub fn shifted(&self, n: i64) -> PointSet {
        PointSet::from_pieces(self.pieces.iter().map(|&(a, b)| (a.shifted(n), b.shifted(n))).collect())
    }

    pub fn cuts(&self) -> impl Iterator<Item = Cut> + '_ {
        self.pieces.iter().flat_map(|&(a, b)| [a, b])
    }

    pub fn to_json(&self, cfg: &GonConfig, model: Model) -> Value {
        Value::Array(
            self.pieces
                .iter()
                .map(|(a, b)| json!({ "from": a.to_json(cfg, model), "to": b.to_json(cfg, model) }))
                .collect(),
        )
    }

    pub fn from_json(cfg: &GonConfig, v: &Value) -> Result<PointSet, GonError> {
        let arr = v.as_array().ok_or_else(|| GonError::BadPoint(format!("expected a list of pieces, got {v}")))?;
        let mut raw = Vec::new();
        for piece in arr {
            let (Some(a), Some(b)) = (piece.get("from"), piece.get("to")) else {
                return Err(GonError::BadPoint(format!("piece {piece} needs \"from\" and \"to\"")));
            };
            raw.push((Cut::from_json(cfg, a)?, Cut::from_json(cfg, b)?));
        }
        Ok(PointSet::from_pieces(raw))
    }
}

/// An arc `(x1, x2)` with `x1 < x2`, tagged with its model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub x1: Point,
    pub x2: Point,
    pub model: Model,
}

impl Arc {
    pub fn new(cfg: &GonConfig, model: Model, x1: Point, x2: Point) -> Result<Arc, GonError> {
        for p in [x1, x2] {
            if !p.in_model(cfg, model) {
                return Err(GonError::WrongModel { token: p.to_string(), model });
            }
        }
        if is_valid_arc(cfg, x1, x2, model) {
            Ok(Arc { x1, x2, model })
        } else {
            Err(GonError::InvalidArc(x1.to_string(), x2.to_string()))
        }
    }

    /// The arc `|u, v|` with endpoints in either order, if valid.
    pub fn unordered(cfg: &GonConfig, model: Model, u: Point, v: Point) -> Option<Arc> {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        Arc::new(cfg, model, a, b).ok()
    }

    pub fn endpoints(&self) -> [Point; 2] {
        [self.x1, self.x2]
    }

    pub fn to_json(&self) -> Value {
        json!([self.x1.to_json(), self.x2.to_json()])
    }

    pub fn from_json(cfg: &GonConfig, model: Model, v: &Value) -> Result<Arc, GonError> {
        match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Arc::new(cfg, model, Point::from_json(a)?, Point::from_json(b)?),
            _ => Err(GonError::BadPoint(format!("an arc is a two-element list, got {v}"))),
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

pub fn is_valid_arc(cfg: &GonConfig, x1: Point, x2: Point, model: Model) -> bool {
    if !x1.in_model(cfg, model) || !x2.in_model(cfg, model) || x1 >= x2 {
        return false;
    }
    match (x1, x2) {
        (Point::Reg { slot: s, pos: a }, Point::Reg { slot: t, pos: b }) if s == t => b >= a + 2,
        _ => true,
    }
}

/// Strict interleaving of endpoints; arcs sharing an endpoint never cross.
pub fn crosses(a: &Arc, b: &Arc) -> bool {
    (a.x1 < b.x1 && b.x1 < a.x2 && a.x2 < b.x2) || (b.x1 < a.x1 && a.x1 < b.x2 && b.x2 < a.x2)
}

/// The projection π: primed segments collapse to their blobs; arcs inside a
/// single primed segment become zero.
pub fn project_arc(cfg: &GonConfig, a: &Arc) -> Option<Arc> {
    debug_assert_eq!(a.model, Model::TwoM);
    let proj = |p: Point| if is_primed_slot(p.slot()) { Point::Blob { slot: p.slot() } } else { p };
    let (u, v) = (proj(a.x1), proj(a.x2));
    if u == v {
        return None;
    }
    Arc::new(cfg, Model::Bar, u, v).ok()
}

/// Position used for a blob when lifting to `Z_{2m}`.
pub const BASE_POINT: i64 = 0;

pub fn lift_point(p: Point) -> Point {
    match p {
        Point::Blob { slot } => Point::Reg { slot, pos: BASE_POINT },
        r => r,
    }
}

pub fn lift_arc(a: &Arc) -> Arc {
    debug_assert_eq!(a.model, Model::Bar);
    Arc { x1: lift_point(a.x1), x2: lift_point(a.x2), model: Model::TwoM }
}

/// All points whose positions lie in `[lo, hi]`, in increasing order.
pub fn window_points(cfg: &GonConfig, model: Model, lo: i64, hi: i64) -> Vec<Point> {
    let mut pts = Vec::new();
    for s in 0..cfg.slots() {
        if cfg.is_z_slot(model, s) {
            pts.extend((lo..=hi).map(|pos| Point::Reg { slot: s, pos }));
        } else {
            pts.push(Point::Blob { slot: s });
        }
    }
    pts
}

/// Valid arcs among a sorted list of points, in lexicographic order.
pub fn arcs_on(cfg: &GonConfig, model: Model, pts: &[Point]) -> Vec<Arc> {
    let mut out = Vec::new();
    for (i, &u) in pts.iter().enumerate() {
        for &v in &pts[i + 1..] {
            if is_valid_arc(cfg, u, v, model) {
                out.push(Arc { x1: u, x2: v, model });
            }
        }
    }
    out
}

/// All valid arcs with positions in `[-w, w]` (blobs always included).
pub fn enumerate_window(cfg: &GonConfig, w: i64, model: Model) -> Vec<Arc> {
    arcs_on(cfg, model, &window_points(cfg, model, -w, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: usize) -> GonConfig {
        GonConfig::new(m).unwrap()
    }

    fn r(p: u32, n: i64) -> Point {
        Point::reg(AccLabel::unprimed(p), n)
    }

    fn rp(p: u32, n: i64) -> Point {
        Point::reg(AccLabel::primed(p), n)
    }

    fn b(p: u32) -> Point {
        Point::blob(AccLabel::primed(p))
    }

    #[test]
    fn compare_examples() {
        let c1 = cfg(1);
        let c2 = cfg(2);
        assert_eq!(compare(&c1, &ExtPoint::Pt(b(1)), &ExtPoint::Pt(r(1, -100))), Ok(Ordering::Less));
        assert_eq!(compare(&c2, &ExtPoint::Pt(r(1, 7)), &ExtPoint::Pt(b(2))), Ok(Ordering::Less));
        assert_eq!(compare(&c2, &ExtPoint::Marker(1), &ExtPoint::Pt(r(1, 0))), Ok(Ordering::Less));
        assert!(compare(&c2, &ExtPoint::Pt(b(1)), &ExtPoint::Pt(rp(2, 0))).is_err());
    }

    #[test]
    fn validity_examples() {
        let c = cfg(2);
        assert!(!is_valid_arc(&c, r(1, 0), r(1, 1), Model::Bar));
        assert!(is_valid_arc(&c, r(1, 0), r(1, 2), Model::Bar));
        assert!(is_valid_arc(&c, b(1), b(2), Model::Bar));
        assert!(!is_valid_arc(&c, b(1), b(1), Model::Bar));
        assert!(!is_valid_arc(&c, b(1), r(1, 0), Model::TwoM));
    }

    #[test]
    fn crossing_examples() {
        let c = cfg(1);
        let a = |u, v| Arc::new(&c, Model::Bar, u, v).unwrap();
        assert!(crosses(&a(r(1, 0), r(1, 3)), &a(r(1, 2), r(1, 5))));
        assert!(!crosses(&a(r(1, 0), r(1, 2)), &a(r(1, 5), r(1, 7))));
        assert!(!crosses(&a(b(1), r(1, 0)), &a(b(1), r(1, 5))));
    }

    #[test]
    fn projection_and_lift() {
        let c = cfg(1);
        let t = Arc::new(&c, Model::TwoM, rp(1, 3), r(1, 5)).unwrap();
        assert_eq!(project_arc(&c, &t), Some(Arc::new(&c, Model::Bar, b(1), r(1, 5)).unwrap()));
        let d = Arc::new(&c, Model::TwoM, rp(1, 0), rp(1, 7)).unwrap();
        assert_eq!(project_arc(&c, &d), None);
        let x = Arc::new(&c, Model::Bar, b(1), r(1, 5)).unwrap();
        assert_eq!(lift_arc(&x), Arc::new(&c, Model::TwoM, rp(1, 0), r(1, 5)).unwrap());
        let c2 = cfg(2);
        let y = Arc::new(&c2, Model::Bar, b(1), b(2)).unwrap();
        assert_eq!(lift_arc(&y), Arc::new(&c2, Model::TwoM, rp(1, 0), rp(2, 0)).unwrap());
        let z = Arc::new(&c2, Model::TwoM, r(1, 0), r(2, 4)).unwrap();
        assert_eq!(project_arc(&c2, &z).map(|a| a.endpoints()), Some(z.endpoints()));
    }

    #[test]
    fn window_counts_match_exhaustive_pairs() {
        let c = cfg(1);
        // Two copies of {-1,0,1}: one gap-2 arc inside each, nine across.
        assert_eq!(enumerate_window(&c, 1, Model::TwoM).len(), 11);
        assert_eq!(enumerate_window(&c, 1, Model::Bar).len(), 4);
        assert!(enumerate_window(&c, 0, Model::TwoM).iter().all(|a| a.x1.slot() != a.x2.slot()));
    }

    #[test]
    fn wrapped_interval_reads_as_tail_plus_head() {
        let c = cfg(2);
        let s = PointSet::interval(&c, ExtPoint::Pt(r(2, 0)), true, ExtPoint::Pt(r(1, 0)), false);
        assert!(s.contains(r(2, 0)));
        assert!(s.contains(r(2, 50)));
        assert!(s.contains(b(1)));
        assert!(s.contains(r(1, -1)));
        assert!(!s.contains(r(1, 0)));
        assert!(!s.contains(b(2)));
        assert_eq!(s.pieces().len(), 2);
    }

    #[test]
    fn layout_places_segments_between_markers() {
        let c = cfg(3);
        for p in 1..=3 {
            let x = ExtPoint::Pt(r(p, -7));
            let lo = ExtPoint::Marker(AccLabel::unprimed(p).slot());
            assert_eq!(compare(&c, &lo, &x), Ok(Ordering::Less));
            let next = AccLabel::unprimed(p).succ(&c);
            if next.slot() != 0 {
                assert_eq!(compare(&c, &x, &ExtPoint::Pt(Point::blob(next))), Ok(Ordering::Less));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for p in [r(2, -3), b(2), rp(1, 4)] {
            assert_eq!(Point::from_json(&p.to_json()), Ok(p));
        }
        assert_eq!(r(1, -3).to_json(), json!({"seg": 1, "pos": -3}));
        assert_eq!(b(2).to_json(), json!({"blob": "2'"}));
        assert_eq!(ExtPoint::from_json(&json!({"marker": 2})), Ok(ExtPoint::Marker(3)));
    }
}
