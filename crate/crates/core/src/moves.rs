//! Local planar isotopy moves on knot mosaics and a greedy simplifier.
//!
//! Each rule is written for one orientation and applied in all eight by
//! conjugating with the board symmetries. Rules never touch crossing tiles,
//! keep the board size, keep the mosaic suitably connected and never raise
//! the tile number.
//!
//! - [`MoveKind::LineRowCollapse`]: a row made only of vertical segments
//!   and blanks is deleted; the rows below move up.
//! - [`MoveKind::SegmentCollapse`]: a block of rows on one side of a column
//!   that is attached to the rest only through horizontal segments in that
//!   column slides over the segments.
//! - [`MoveKind::CornerPush`]: an arc turning a corner of the curve, with
//!   nothing beyond the corner, is pushed into the diagonally adjacent
//!   cell.
//! - [`MoveKind::CapReduce`]: arc, segment, arc along a row becomes a cap.
//! - [`MoveKind::SegmentPairElim`]: arc, two segments, arc along a row
//!   becomes a cap carried by two arcs in the row below.

use alloc::vec::Vec;
use core::fmt;

use crate::tiles::{EdgeSet, EdgeSide, KnotMosaic, Mosaic, Symmetry, TileKind};

use EdgeSide::{Bottom as B, Left as L, Right as R, Top as T};

/// Rule kinds in the order the simplifier tries them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    LineRowCollapse,
    SegmentCollapse,
    CornerPush,
    CapReduce,
    SegmentPairElim,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] = [
        MoveKind::LineRowCollapse,
        MoveKind::SegmentCollapse,
        MoveKind::CornerPush,
        MoveKind::CapReduce,
        MoveKind::SegmentPairElim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::LineRowCollapse => "line-row-collapse",
            MoveKind::SegmentCollapse => "segment-collapse",
            MoveKind::CornerPush => "corner-push",
            MoveKind::CapReduce => "cap-reduce",
            MoveKind::SegmentPairElim => "segment-pair-elim",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule matched at a position.
///
/// `variant` is the symmetry that brings the board into the rule's
/// reference orientation, `anchor` the matched cell in original board
/// coordinates, and `span` the number of rows a segment collapse moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MoveInstance {
    pub kind: MoveKind,
    pub anchor: (usize, usize),
    pub variant: Symmetry,
    span: usize,
    // anchor in the reference orientation
    local: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("{0} does not apply at this position")]
    Inapplicable(MoveKind),
}

/// Every match of every rule, ordered by rule, anchor row, anchor column
/// and symmetry.
pub fn applicable_moves(m: &KnotMosaic) -> Vec<MoveInstance> {
    let n = m.size();
    let mut out = Vec::new();
    for (vi, &s) in Symmetry::ALL.iter().enumerate() {
        let t = m.mosaic().transform(s);
        for kind in MoveKind::ALL {
            for (local, span) in matches(kind, &t) {
                let anchor = s.inverse().map_cell(n, local.0, local.1);
                out.push((vi, MoveInstance { kind, anchor, variant: s, span, local }));
            }
        }
    }
    out.sort_by_key(|(vi, mv)| (mv.kind, mv.anchor, *vi, mv.span));
    out.into_iter().map(|(_, mv)| mv).collect()
}

/// Applies a move found by [`applicable_moves`] on the same mosaic.
pub fn apply_move(m: &KnotMosaic, mv: &MoveInstance) -> Result<KnotMosaic, MoveError> {
    let t = m.mosaic().transform(mv.variant);
    if !matches(mv.kind, &t).contains(&(mv.local, mv.span)) {
        return Err(MoveError::Inapplicable(mv.kind));
    }
    let out = rewrite(mv.kind, &t, mv.local, mv.span).transform(mv.variant.inverse());
    debug_assert!(out.is_suitably_connected());
    Ok(KnotMosaic::new_unchecked(out))
}

fn segment_count(m: &Mosaic) -> usize {
    m.cells().iter().filter(|k| k.is_segment()).count()
}

/// Order the simplifier descends in.
fn potential(m: &Mosaic) -> (usize, usize, &[TileKind]) {
    (m.tile_number(), segment_count(m), m.cells())
}

/// Greedy normalization: repeatedly applies the first move (in
/// [`applicable_moves`] order, tile-number-lowering moves first) whose
/// result is smaller in (tile number, segment tiles, serialization), until
/// none is.
pub fn simplify(m: &KnotMosaic) -> KnotMosaic {
    simplify_traced(m).0
}

/// Like [`simplify`], also returning the moves applied.
pub fn simplify_traced(m: &KnotMosaic) -> (KnotMosaic, Vec<MoveInstance>) {
    let n = m.size();
    let bound = MoveKind::ALL.len() * n.pow(4) + 1;
    let mut current = m.clone();
    let mut history = Vec::new();
    for _ in 0..bound {
        let moves = applicable_moves(&current);
        let mut candidates: Vec<(MoveInstance, KnotMosaic)> =
            moves.into_iter().map(|mv| (mv, apply_move(&current, &mv).expect("move was just matched"))).collect();
        // lowering moves first, stable within each group
        candidates.sort_by_key(|(_, next)| next.tile_number() >= current.tile_number());
        let step = candidates.into_iter().find(|(_, next)| potential(next) < potential(&current));
        match step {
            Some((mv, next)) => {
                history.push(mv);
                current = next;
            }
            None => return (current, history),
        }
    }
    panic!("simplification exceeded its step bound");
}

fn conn(k: TileKind) -> EdgeSet {
    k.connection_points()
}

/// Tile with this connection set and at most one strand.
fn simple_tile(e: EdgeSet) -> Option<TileKind> {
    TileKind::ALL.into_iter().find(|k| k.connection_points() == e && k.strands().len() <= 1)
}

/// Replaces edge `from` by `to` in a one-strand tile.
fn reroute(k: TileKind, from: EdgeSide, to: EdgeSide) -> Option<TileKind> {
    let e = conn(k);
    if k.strands().len() != 1 || !e.contains(from) || e.contains(to) {
        return None;
    }
    let mut bits = e.bits() & !from.bit();
    bits |= to.bit();
    simple_tile(EdgeSet::from_bits(bits))
}

/// Matches of one rule in the reference orientation: `(anchor, span)`.
fn matches(kind: MoveKind, m: &Mosaic) -> Vec<((usize, usize), usize)> {
    let n = m.size();
    let mut out = Vec::new();
    match kind {
        MoveKind::LineRowCollapse => {
            for r in 0..n {
                let row: Vec<TileKind> = (0..n).map(|c| m.get(r, c)).collect();
                if row.iter().all(|k| matches!(k, TileKind::Blank | TileKind::SegV)) && row.contains(&TileKind::SegV) {
                    out.push(((r, 0), 0));
                }
            }
        }
        MoveKind::SegmentCollapse => {
            // block: rows r0..=r1, columns right of c; anchor (r0, c), span r1 - r0
            for c in 0..n.saturating_sub(1) {
                for r0 in 0..n {
                    for r1 in r0..n {
                        if segment_block_ok(m, c, r0, r1) {
                            out.push(((r0, c), r1 - r0));
                        }
                    }
                }
            }
        }
        MoveKind::CornerPush => {
            for r in 0..n.saturating_sub(1) {
                for c in 0..n.saturating_sub(1) {
                    if corner_push(m, r, c).is_some() {
                        out.push(((r, c), 0));
                    }
                }
            }
        }
        MoveKind::CapReduce => {
            for r in 0..n.saturating_sub(1) {
                for c in 0..n.saturating_sub(2) {
                    let row = [m.get(r, c), m.get(r, c + 1), m.get(r, c + 2)];
                    if row == [TileKind::ArcBR, TileKind::SegH, TileKind::ArcBL] && corner_push(m, r, c).is_some() {
                        out.push(((r, c), 0));
                    }
                }
            }
        }
        MoveKind::SegmentPairElim => {
            for r in 0..n.saturating_sub(1) {
                for c in 0..n.saturating_sub(3) {
                    if segment_pair(m, r, c).is_some() {
                        out.push(((r, c), 0));
                    }
                }
            }
        }
    }
    out
}

fn rewrite(kind: MoveKind, m: &Mosaic, (r, c): (usize, usize), span: usize) -> Mosaic {
    let n = m.size();
    match kind {
        MoveKind::LineRowCollapse => {
            let mut out = Mosaic::blank(n);
            for rr in 0..n - 1 {
                let src = if rr < r { rr } else { rr + 1 };
                for cc in 0..n {
                    out.set(rr, cc, m.get(src, cc));
                }
            }
            out
        }
        MoveKind::SegmentCollapse => {
            let mut out = m.clone();
            for rr in r..=r + span {
                for cc in c..n {
                    let src = if cc + 1 < n { m.get(rr, cc + 1) } else { TileKind::Blank };
                    out.set(rr, cc, src);
                }
            }
            out
        }
        MoveKind::CornerPush | MoveKind::CapReduce => corner_push(m, r, c).expect("matched"),
        MoveKind::SegmentPairElim => segment_pair(m, r, c).expect("matched"),
    }
}

/// Rows `r0..=r1` right of column `c` hang off the rest of the board only
/// through horizontal segments in column `c`.
fn segment_block_ok(m: &Mosaic, c: usize, r0: usize, r1: usize) -> bool {
    let n = m.size();
    let mut any = false;
    for r in r0..=r1 {
        match m.get(r, c) {
            TileKind::SegH => any = true,
            TileKind::Blank => {}
            _ => return false,
        }
    }
    if !any {
        return false;
    }
    (c + 1..n).all(|cc| !conn(m.get(r0, cc)).contains(T) && !conn(m.get(r1, cc)).contains(B))
}

/// Pushes the arc `ArcBR` at `(r, c)` towards `(r + 1, c + 1)`.
///
/// With `a = (r, c)`, `b = (r, c + 1)`, `d = (r + 1, c)` and
/// `e = (r + 1, c + 1)`, the curve runs `d -> a -> b`. If it continues
/// `b -> e` (or arrives `e -> d`), the detour through `a` is cut out;
/// otherwise it is rerouted `d -> e -> b` with `e` gaining a top-left arc.
fn corner_push(m: &Mosaic, r: usize, c: usize) -> Option<Mosaic> {
    let n = m.size();
    if r + 1 >= n || c + 1 >= n || m.get(r, c) != TileKind::ArcBR {
        return None;
    }
    let (b, d, e) = (m.get(r, c + 1), m.get(r + 1, c), m.get(r + 1, c + 1));
    if b.strands().len() != 1 || d.strands().len() != 1 {
        return None;
    }
    let mut out = m.clone();
    out.set(r, c, TileKind::Blank);
    if b == TileKind::ArcBL {
        // d -> a -> b -> e becomes d -> e
        out.set(r, c + 1, TileKind::Blank);
        out.set(r + 1, c, reroute(d, T, R)?);
        out.set(r + 1, c + 1, reroute(e, T, L)?);
    } else if d == TileKind::ArcTR {
        // e -> d -> a -> b becomes e -> b
        out.set(r + 1, c, TileKind::Blank);
        out.set(r, c + 1, reroute(b, L, B)?);
        out.set(r + 1, c + 1, reroute(e, L, T)?);
    } else {
        out.set(r, c + 1, reroute(b, L, B)?);
        out.set(r + 1, c, reroute(d, T, R)?);
        let e2 = match e {
            TileKind::Blank => TileKind::ArcTL,
            TileKind::ArcBR => TileKind::DoubleArcA,
            _ => return None,
        };
        out.set(r + 1, c + 1, e2);
    }
    Some(out)
}

/// `ArcBR SegH SegH ArcBL` at `(r, c..c+4)` over blanks at `c+1, c+2`
/// becomes a cap at `c+1, c+2` carried by `ArcTL ArcTR` below it.
fn segment_pair(m: &Mosaic, r: usize, c: usize) -> Option<Mosaic> {
    let n = m.size();
    if r + 1 >= n || c + 3 >= n {
        return None;
    }
    let row = [m.get(r, c), m.get(r, c + 1), m.get(r, c + 2), m.get(r, c + 3)];
    if row != [TileKind::ArcBR, TileKind::SegH, TileKind::SegH, TileKind::ArcBL] {
        return None;
    }
    if !m.get(r + 1, c + 1).is_blank() || !m.get(r + 1, c + 2).is_blank() {
        return None;
    }
    let mut out = m.clone();
    out.set(r, c, TileKind::Blank);
    out.set(r, c + 1, TileKind::ArcBR);
    out.set(r, c + 2, TileKind::ArcBL);
    out.set(r, c + 3, TileKind::Blank);
    out.set(r + 1, c, reroute(m.get(r + 1, c), T, R)?);
    out.set(r + 1, c + 1, TileKind::ArcTL);
    out.set(r + 1, c + 2, TileKind::ArcTR);
    out.set(r + 1, c + 3, reroute(m.get(r + 1, c + 3), T, L)?);
    Some(out)
}
