//! Non-crossing partitions, the Kreweras complement, the refinement lattice,
//! and the decorated partitions that classify (co-)t-structures.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::gon::{label_from_value, AccLabel, GonConfig, GonError, Point};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcpError {
    #[error("blocks do not partition {{1..{0}}}")]
    NotAPartition(usize),
    #[error("partition {0} is crossing")]
    Crossing(String),
    #[error("partitions live on different ground sets ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("decoration for {label} is {value}, outside its allowed range")]
    BadDecoration { label: AccLabel, value: String },
    #[error("expected {expected} decorations, got {got}")]
    DecorationCount { expected: usize, got: usize },
    #[error("{0} is not an element of the block")]
    NotInBlock(usize),
    #[error("malformed partition: {0}")]
    Malformed(String),
    #[error(transparent)]
    Gon(#[from] GonError),
}

/// A set partition of `{1..k}`, blocks sorted internally and by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcPartition {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl NcPartition {
    /// Builds a set partition; crossing is allowed here and tested by
    /// [`NcPartition::is_noncrossing`].
    pub fn from_blocks(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self, NcpError> {
        let mut seen = vec![false; k + 1];
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(NcpError::NotAPartition(k));
            }
            b.sort_unstable();
            for &e in &b {
                if e == 0 || e > k || seen[e] {
                    return Err(NcpError::NotAPartition(k));
                }
                seen[e] = true;
            }
            out.push(b);
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(NcpError::NotAPartition(k));
        }
        out.sort();
        Ok(NcPartition { k, blocks: out })
    }

    /// A non-crossing partition, or an error naming the crossing input.
    pub fn new(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self, NcpError> {
        let p = NcPartition::from_blocks(k, blocks)?;
        if !p.is_noncrossing() {
            return Err(NcpError::Crossing(p.to_string()));
        }
        Ok(p)
    }

    pub fn finest(k: usize) -> Self {
        NcPartition { k, blocks: (1..=k).map(|i| vec![i]).collect() }
    }

    pub fn coarsest(k: usize) -> Self {
        NcPartition { k, blocks: vec![(1..=k).collect()] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, e: usize) -> &[usize] {
        self.blocks.iter().find(|b| b.contains(&e)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of(a).contains(&b)
    }

    pub fn is_singleton(&self, e: usize) -> bool {
        self.block_of(e) == [e]
    }

    /// Block index of every element, indexed from 1.
    fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.k + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                ids[e] = i;
            }
        }
        ids
    }

    pub fn is_noncrossing(&self) -> bool {
        let ids = self.block_ids();
        blocks_noncrossing(&ids[1..])
    }

    pub fn to_json(&self) -> Value {
        json!({ "k": self.k, "blocks": self.blocks })
    }

    pub fn from_json(v: &Value) -> Result<Self, NcpError> {
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| NcpError::Malformed("missing \"k\"".into()))?;
        let blocks = v
            .get("blocks")
            .and_then(Value::as_array)
            .ok_or_else(|| NcpError::Malformed("missing \"blocks\"".into()))?
            .iter()
            .map(|b| {
                b.as_array()
                    .ok_or_else(|| NcpError::Malformed(format!("block {b} is not a list")))?
                    .iter()
                    .map(|e| e.as_u64().map(|e| e as usize).ok_or_else(|| NcpError::Malformed(format!("element {e}"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        NcPartition::new(k as usize, blocks)
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `ids[i]` is the block of the `i`-th point of a cyclically ordered set.
fn blocks_noncrossing(ids: &[usize]) -> bool {
    let n = ids.len();
    for a in 0..n {
        for b in a + 1..n {
            if ids[b] == ids[a] {
                continue;
            }
            for c in b + 1..n {
                if ids[c] != ids[a] {
                    continue;
                }
                for d in c + 1..n {
                    if ids[d] == ids[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_noncrossing(p: &NcPartition) -> bool {
    p.is_noncrossing()
}

/// All non-crossing partitions of `{1..k}`, built recursively from the block
/// of the first element.
pub fn enumerate_ncp(k: usize) -> Vec<NcPartition> {
    let elems: Vec<usize> = (1..=k).collect();
    let mut out: Vec<NcPartition> =
        ncp_of(&elems).into_iter().map(|blocks| NcPartition::from_blocks(k, blocks).expect("partition")).collect();
    out.sort();
    out
}

fn ncp_of(elems: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = elems.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    // Choose the other members of `first`'s block as an increasing subset of
    // `rest`; the runs between chosen members are partitioned independently.
    for mask in 0u64..(1u64 << rest.len()) {
        let mut block = vec![first];
        let mut runs: Vec<Vec<usize>> = vec![Vec::new()];
        for (i, &e) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(e);
                runs.push(Vec::new());
            } else {
                runs.last_mut().expect("run").push(e);
            }
        }
        let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for run in &runs {
            let subs = ncp_of(run);
            acc = acc
                .iter()
                .flat_map(|base| {
                    subs.iter().map(move |s| {
                        let mut v = base.clone();
                        v.extend(s.iter().cloned());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

/// Interleaves `fixed` (a partition of `{1..k}`) into `[2k]` on one parity
/// and returns the unique maximal non-crossing completion on the other
/// parity, relabelled back to `{1..k}`.
fn dense_completion(fixed: &NcPartition, fixed_on_odd: bool) -> NcPartition {
    let k = fixed.k;
    let fixed_pos = |e: usize| if fixed_on_odd { 2 * e - 1 } else { 2 * e };
    let free_pos = |e: usize| if fixed_on_odd { 2 * e } else { 2 * e - 1 };
    let mut ids = vec![0usize; 2 * k];
    for (i, b) in fixed.blocks.iter().enumerate() {
        for &e in b {
            ids[fixed_pos(e) - 1] = i;
        }
    }
    let offset = fixed.blocks.len();
    let mut free: Vec<usize> = (1..=k).map(|e| offset + e).collect();
    for e in 1..=k {
        ids[free_pos(e) - 1] = free[e - 1];
    }
    // Merge free blocks while the doubled partition stays non-crossing.
    loop {
        let mut merged = false;
        'search: for a in 1..=k {
            for b in a + 1..=k {
                let (ba, bb) = (free[a - 1], free[b - 1]);
                if ba == bb {
                    continue;
                }
                let trial: Vec<usize> = ids.iter().map(|&x| if x == bb { ba } else { x }).collect();
                if blocks_noncrossing(&trial) {
                    ids = trial;
                    for f in free.iter_mut() {
                        if *f == bb {
                            *f = ba;
                        }
                    }
                    merged = true;
                    break 'search;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 1..=k {
        groups.entry(free[e - 1]).or_default().push(e);
    }
    NcPartition::from_blocks(k, groups.into_values().collect()).expect("completion is a partition")
}

/// Kreweras complement; label `i` of the result is the gap following `i`.
pub fn kreweras(p: &NcPartition) -> NcPartition {
    dense_completion(p, true)
}

pub fn kreweras_inverse(q: &NcPartition) -> NcPartition {
    dense_completion(q, false)
}

/// Refinement order: every block of `p` lies inside a block of `q`.
pub fn nc_leq(p: &NcPartition, q: &NcPartition) -> bool {
    p.k == q.k && p.blocks.iter().all(|b| q.blocks.iter().any(|c| b.iter().all(|e| c.contains(e))))
}

pub fn nc_meet(p: &NcPartition, q: &NcPartition) -> Result<NcPartition, NcpError> {
    if p.k != q.k {
        return Err(NcpError::SizeMismatch(p.k, q.k));
    }
    let mut blocks = Vec::new();
    for b in &p.blocks {
        for c in &q.blocks {
            let inter: Vec<usize> = b.iter().copied().filter(|e| c.contains(e)).collect();
            if !inter.is_empty() {
                blocks.push(inter);
            }
        }
    }
    NcPartition::from_blocks(p.k, blocks)
}

pub fn nc_join(p: &NcPartition, q: &NcPartition) -> Result<NcPartition, NcpError> {
    Ok(kreweras_inverse(&nc_meet(&kreweras(p), &kreweras(q))?))
}

/// A decoration value in the chain `Marker(p) < Reg(p, n) < AccEnd(p⁺)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    Marker,
    Reg(i64),
    AccEnd,
}

impl Decoration {
    /// `x − 1`, with both ends of the chain fixed.
    pub fn decrement(self) -> Self {
        match self {
            Decoration::Reg(n) => Decoration::Reg(n - 1),
            other => other,
        }
    }

    /// JSON form for the decoration attached to the unprimed label `p`.
    pub fn to_json(&self, cfg: &GonConfig, p: u32) -> Value {
        let label = AccLabel::unprimed(p);
        match self {
            Decoration::Marker => json!({ "marker": label }),
            Decoration::Reg(n) => Point::reg(label, *n).to_json(),
            Decoration::AccEnd => json!({ "accend": label.succ(cfg).to_string() }),
        }
    }

    pub fn from_json(cfg: &GonConfig, p: u32, v: &Value) -> Result<Self, NcpError> {
        let label = AccLabel::unprimed(p);
        let bad = || NcpError::BadDecoration { label, value: v.to_string() };
        let obj = v.as_object().ok_or_else(bad)?;
        if let Some(l) = obj.get("marker") {
            return if label_from_value(l)? == label { Ok(Decoration::Marker) } else { Err(bad()) };
        }
        if let Some(l) = obj.get("accend") {
            return if label_from_value(l)? == label.succ(cfg) { Ok(Decoration::AccEnd) } else { Err(bad()) };
        }
        match Point::from_json(v)? {
            Point::Reg { slot, pos } if slot == label.slot() => Ok(Decoration::Reg(pos)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decoration::Marker => f.write_str("marker"),
            Decoration::Reg(n) => write!(f, "{n}"),
            Decoration::AccEnd => f.write_str("accend"),
        }
    }
}

/// Element of `{1..2m}` standing for a label of `[m′] ∪ [m]`.
pub fn label_element(l: AccLabel) -> usize {
    l.slot() as usize + 1
}

pub fn element_label(e: usize) -> AccLabel {
    AccLabel::from_slot(e as u32 - 1)
}

/// A half-decorated non-crossing partition of `[m′] ∪ [m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfDecNcp {
    pub p: NcPartition,
    pub x: Vec<Decoration>,
}

/// An alternating non-crossing partition: `P` on `[m′]` (element `i` is
/// `i′`), decorations indexed by `[m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltNcp {
    pub p: NcPartition,
    pub x: Vec<Decoration>,
}

pub fn validate_hd(cfg: &GonConfig, p: &NcPartition, x: &[Decoration]) -> Result<(), NcpError> {
    let m = cfg.m();
    if p.k() != 2 * m {
        return Err(NcpError::SizeMismatch(p.k(), 2 * m));
    }
    if !p.is_noncrossing() {
        return Err(NcpError::Crossing(p.to_string()));
    }
    if x.len() != m {
        return Err(NcpError::DecorationCount { expected: m, got: x.len() });
    }
    for (i, &d) in x.iter().enumerate() {
        let label = AccLabel::unprimed(i as u32 + 1);
        let e = label_element(label);
        let ok = match d {
            Decoration::Reg(_) => true,
            Decoration::Marker => p.is_singleton(e),
            Decoration::AccEnd => !p.is_singleton(e) && p.same_block(e, label_element(label.succ(cfg))),
        };
        if !ok {
            return Err(NcpError::BadDecoration { label, value: d.to_string() });
        }
    }
    Ok(())
}

pub fn validate_alt(cfg: &GonConfig, p: &NcPartition, x: &[Decoration]) -> Result<(), NcpError> {
    if p.k() != cfg.m() {
        return Err(NcpError::SizeMismatch(p.k(), cfg.m()));
    }
    if !p.is_noncrossing() {
        return Err(NcpError::Crossing(p.to_string()));
    }
    if x.len() != cfg.m() {
        return Err(NcpError::DecorationCount { expected: cfg.m(), got: x.len() });
    }
    Ok(())
}

impl HalfDecNcp {
    pub fn new(cfg: &GonConfig, p: NcPartition, x: Vec<Decoration>) -> Result<Self, NcpError> {
        validate_hd(cfg, &p, &x)?;
        Ok(HalfDecNcp { p, x })
    }

    pub fn to_json(&self, cfg: &GonConfig) -> Value {
        decorated_json(cfg, "hd", &self.p, &self.x, element_label)
    }

    pub fn from_json(cfg: &GonConfig, v: &Value) -> Result<Self, NcpError> {
        let (p, x) = parse_decorated(cfg, v, 2 * cfg.m(), |l| Ok(label_element(l)))?;
        HalfDecNcp::new(cfg, p, x)
    }
}

impl AltNcp {
    pub fn new(cfg: &GonConfig, p: NcPartition, x: Vec<Decoration>) -> Result<Self, NcpError> {
        validate_alt(cfg, &p, &x)?;
        Ok(AltNcp { p, x })
    }

    pub fn to_json(&self, cfg: &GonConfig) -> Value {
        decorated_json(cfg, "alt", &self.p, &self.x, |e| AccLabel::primed(e as u32))
    }

    pub fn from_json(cfg: &GonConfig, v: &Value) -> Result<Self, NcpError> {
        let (p, x) = parse_decorated(cfg, v, cfg.m(), |l| {
            if l.primed {
                Ok(l.index as usize)
            } else {
                Err(NcpError::Malformed(format!("alternating blocks hold primed labels, got {l}")))
            }
        })?;
        AltNcp::new(cfg, p, x)
    }
}

fn decorated_json(
    cfg: &GonConfig,
    kind: &str,
    p: &NcPartition,
    x: &[Decoration],
    label: impl Fn(usize) -> AccLabel,
) -> Value {
    let blocks: Vec<Vec<AccLabel>> = p.blocks().iter().map(|b| b.iter().map(|&e| label(e)).collect()).collect();
    let mut decor = Map::new();
    for (i, d) in x.iter().enumerate() {
        let q = i as u32 + 1;
        decor.insert(q.to_string(), d.to_json(cfg, q));
    }
    json!({ "kind": kind, "m": cfg.m(), "k": p.k(), "blocks": blocks, "decor": decor })
}

fn parse_decorated(
    cfg: &GonConfig,
    v: &Value,
    k: usize,
    element: impl Fn(AccLabel) -> Result<usize, NcpError>,
) -> Result<(NcPartition, Vec<Decoration>), NcpError> {
    let blocks = v
        .get("blocks")
        .and_then(Value::as_array)
        .ok_or_else(|| NcpError::Malformed("missing \"blocks\"".into()))?
        .iter()
        .map(|b| {
            b.as_array()
                .ok_or_else(|| NcpError::Malformed(format!("block {b} is not a list")))?
                .iter()
                .map(|l| {
                    let label = label_from_value(l)?;
                    cfg.check_label(label)?;
                    element(label)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = NcPartition::new(k, blocks)?;
    let decor =
        v.get("decor").and_then(Value::as_object).ok_or_else(|| NcpError::Malformed("missing \"decor\"".into()))?;
    let mut x = Vec::with_capacity(cfg.m());
    for q in 1..=cfg.m() as u32 {
        let d = decor.get(&q.to_string()).ok_or_else(|| NcpError::Malformed(format!("no decoration for {q}")))?;
        x.push(Decoration::from_json(cfg, q, d)?);
    }
    if decor.len() != cfg.m() {
        return Err(NcpError::DecorationCount { expected: cfg.m(), got: decor.len() });
    }
    Ok((p, x))
}

pub fn complement_hd(hd: &HalfDecNcp) -> HalfDecNcp {
    HalfDecNcp { p: kreweras(&hd.p), x: hd.x.iter().map(|d| d.decrement()).collect() }
}

pub fn complement_alt(alt: &AltNcp) -> AltNcp {
    AltNcp { p: kreweras(&alt.p), x: alt.x.iter().map(|d| d.decrement()).collect() }
}

fn pointwise(x: &[Decoration], y: &[Decoration], f: fn(Decoration, Decoration) -> Decoration) -> Vec<Decoration> {
    x.iter().zip(y).map(|(&a, &b)| f(a, b)).collect()
}

pub fn hd_leq(a: &HalfDecNcp, b: &HalfDecNcp) -> bool {
    nc_leq(&a.p, &b.p) && a.x.iter().zip(&b.x).all(|(x, y)| x <= y)
}

pub fn hd_meet(a: &HalfDecNcp, b: &HalfDecNcp) -> Result<HalfDecNcp, NcpError> {
    Ok(HalfDecNcp { p: nc_meet(&a.p, &b.p)?, x: pointwise(&a.x, &b.x, std::cmp::min) })
}

pub fn hd_join(a: &HalfDecNcp, b: &HalfDecNcp) -> Result<HalfDecNcp, NcpError> {
    Ok(HalfDecNcp { p: nc_join(&a.p, &b.p)?, x: pointwise(&a.x, &b.x, std::cmp::max) })
}

/// Order on alternating partitions: coarser blocks, smaller decorations.
pub fn alt_leq(a: &AltNcp, b: &AltNcp) -> bool {
    nc_leq(&a.p, &b.p) && a.x.iter().zip(&b.x).all(|(x, y)| y <= x)
}

pub fn alt_meet(a: &AltNcp, b: &AltNcp) -> Result<AltNcp, NcpError> {
    Ok(AltNcp { p: nc_meet(&a.p, &b.p)?, x: pointwise(&a.x, &b.x, std::cmp::max) })
}

pub fn alt_join(a: &AltNcp, b: &AltNcp) -> Result<AltNcp, NcpError> {
    Ok(AltNcp { p: nc_join(&a.p, &b.p)?, x: pointwise(&a.x, &b.x, std::cmp::min) })
}

/// The element of `block` following `e` in cyclic order (`e` itself for a
/// singleton).
pub fn next_in_block(block: &[usize], e: usize) -> Result<usize, NcpError> {
    if !block.contains(&e) {
        return Err(NcpError::NotInBlock(e));
    }
    Ok(block.iter().copied().filter(|&x| x > e).min().unwrap_or_else(|| *block.iter().min().expect("nonempty")))
}

fn decoration_choices(lo: i64, hi: i64) -> Vec<Decoration> {
    let mut v = vec![Decoration::Marker];
    v.extend((lo..=hi).map(Decoration::Reg));
    v.push(Decoration::AccEnd);
    v
}

fn decoration_tuples(m: usize, lo: i64, hi: i64) -> Vec<Vec<Decoration>> {
    let choices = decoration_choices(lo, hi);
    let mut out: Vec<Vec<Decoration>> = vec![vec![]];
    for _ in 0..m {
        out = out
            .iter()
            .flat_map(|t| {
                choices.iter().map(move |&d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

/// All valid half-decorated partitions with regular decorations in `[lo, hi]`.
pub fn enumerate_hd(cfg: &GonConfig, lo: i64, hi: i64) -> Vec<HalfDecNcp> {
    let tuples = decoration_tuples(cfg.m(), lo, hi);
    enumerate_ncp(2 * cfg.m())
        .into_iter()
        .flat_map(|p| {
            tuples
                .iter()
                .filter(|x| validate_hd(cfg, &p, x).is_ok())
                .map(|x| HalfDecNcp { p: p.clone(), x: x.clone() })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// All alternating partitions with regular decorations in `[lo, hi]`.
pub fn enumerate_alt(cfg: &GonConfig, lo: i64, hi: i64) -> Vec<AltNcp> {
    let tuples = decoration_tuples(cfg.m(), lo, hi);
    enumerate_ncp(cfg.m())
        .into_iter()
        .flat_map(|p| tuples.iter().map(|x| AltNcp { p: p.clone(), x: x.clone() }).collect::<Vec<_>>())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ncp(k: usize, blocks: &[&[usize]]) -> NcPartition {
        NcPartition::from_blocks(k, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn noncrossing_examples() {
        assert!(!ncp(4, &[&[1, 3], &[2, 4]]).is_noncrossing());
        assert!(ncp(8, &[&[1, 3, 4], &[2], &[5, 7, 8], &[6]]).is_noncrossing());
        assert_eq!(enumerate_ncp(4).len(), 14);
    }

    #[test]
    fn kreweras_examples() {
        let p = ncp(8, &[&[1, 3, 4], &[2], &[5, 7, 8], &[6]]);
        assert_eq!(kreweras(&p), ncp(8, &[&[1, 2], &[3], &[4, 8], &[5, 6], &[7]]));
        assert_eq!(kreweras(&NcPartition::finest(5)), NcPartition::coarsest(5));
        assert_eq!(kreweras_inverse(&kreweras(&p)), p);
    }

    #[test]
    fn join_example() {
        let a = ncp(3, &[&[1, 2], &[3]]);
        let b = ncp(3, &[&[2, 3], &[1]]);
        assert_eq!(nc_join(&a, &b).unwrap(), NcPartition::coarsest(3));
        assert_eq!(nc_meet(&a, &NcPartition::finest(3)).unwrap(), NcPartition::finest(3));
        assert_eq!(nc_join(&a, &NcPartition::coarsest(3)).unwrap(), NcPartition::coarsest(3));
    }

    #[test]
    fn validation_examples() {
        let c = GonConfig::new(1).unwrap();
        assert!(validate_hd(&c, &ncp(2, &[&[1, 2]]), &[Decoration::Reg(0)]).is_ok());
        assert!(validate_hd(&c, &ncp(2, &[&[1], &[2]]), &[Decoration::AccEnd]).is_err());
        for d in [Decoration::Marker, Decoration::Reg(4), Decoration::AccEnd] {
            assert!(validate_alt(&c, &NcPartition::finest(1), &[d]).is_ok());
        }
    }

    #[test]
    fn complement_examples() {
        let c = GonConfig::new(1).unwrap();
        let hd = HalfDecNcp::new(&c, ncp(2, &[&[1, 2]]), vec![Decoration::Reg(0)]).unwrap();
        assert_eq!(complement_hd(&hd), HalfDecNcp { p: NcPartition::finest(2), x: vec![Decoration::Reg(-1)] });
        let alt = AltNcp::new(&c, NcPartition::finest(1), vec![Decoration::Reg(0)]).unwrap();
        assert_eq!(complement_alt(&alt).x, vec![Decoration::Reg(-1)]);
        assert_eq!(Decoration::Marker.decrement(), Decoration::Marker);
        assert_eq!(Decoration::AccEnd.decrement(), Decoration::AccEnd);
    }

    #[test]
    fn next_in_block_examples() {
        assert_eq!(next_in_block(&[1], 1), Ok(1));
        assert_eq!(next_in_block(&[1, 3], 1), Ok(3));
        assert_eq!(next_in_block(&[1, 3], 3), Ok(1));
        assert_eq!(next_in_block(&[1, 2, 3], 2), Ok(3));
        assert!(next_in_block(&[1, 3], 2).is_err());
    }

    #[test]
    fn decorated_json_round_trip() {
        let c = GonConfig::new(2).unwrap();
        for hd in enumerate_hd(&c, -1, 1) {
            assert_eq!(HalfDecNcp::from_json(&c, &hd.to_json(&c)).unwrap(), hd);
        }
        for alt in enumerate_alt(&c, -1, 1) {
            assert_eq!(AltNcp::from_json(&c, &alt.to_json(&c)).unwrap(), alt);
        }
    }
}
