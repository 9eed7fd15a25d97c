//! Boards of nondeterministic tiles: each cell restricts the allowed kinds
//! and the connection points the tile must carry.
//!
//! Text form: one line per row, `n` whitespace-separated cells, each cell
//! `kinds:edges` with tile characters (`0`-`9`, `A`, or `*` for all
//! eleven) and edge letters from `TRBL`. `#` starts a comment line; a
//! comment of the form `# tag: ...` names the layout.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::tiles::{EdgeSet, EdgeSide, Mosaic, Symmetry, TileKind, MAX_SEARCH_SIZE};

/// A set of tile kinds as an 11-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KindSet(u16);

impl KindSet {
    pub const EMPTY: KindSet = KindSet(0);
    pub const ALL: KindSet = KindSet(0x7ff);
    pub const FOUR_POINT: KindSet = KindSet(0b111_1000_0000);

    pub fn from_kinds(kinds: &[TileKind]) -> Self {
        kinds.iter().fold(KindSet::EMPTY, |s, &k| s.with(k))
    }

    pub const fn single(kind: TileKind) -> Self {
        KindSet(1 << kind as u8)
    }

    pub const fn with(self, kind: TileKind) -> Self {
        KindSet(self.0 | 1 << kind as u8)
    }

    pub const fn contains(self, kind: TileKind) -> bool {
        self.0 >> kind as u8 & 1 == 1
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = TileKind> {
        TileKind::ALL.into_iter().filter(move |&k| self.contains(k))
    }

    pub fn map(self, f: impl Fn(TileKind) -> TileKind) -> Self {
        self.iter().fold(KindSet::EMPTY, |s, k| s.with(f(k)))
    }

    pub fn intersect(self, other: KindSet) -> Self {
        KindSet(self.0 & other.0)
    }
}

impl fmt::Display for KindSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == KindSet::ALL {
            return f.write_char('*');
        }
        self.iter().try_for_each(|k| f.write_char(k.to_char()))
    }
}

/// Allowed tiles for one cell plus the connection points every choice must
/// have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LayoutSlot {
    allowed: KindSet,
    required: EdgeSet,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LayoutError {
    #[error("slot allows no tile")]
    EmptySlot,
    #[error("tile {kind} lacks required connection points {required}")]
    MissingEdges { kind: char, required: EdgeSet },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("layout is {found} rows for {expected} columns")]
    NotSquare { expected: usize, found: usize },
    #[error("layout size {0} is outside 1..={max}", max = MAX_SEARCH_SIZE)]
    Size(usize),
}

impl LayoutSlot {
    pub fn new(allowed: KindSet, required: EdgeSet) -> Result<Self, LayoutError> {
        if allowed.is_empty() {
            return Err(LayoutError::EmptySlot);
        }
        if let Some(k) = allowed.iter().find(|k| !k.connection_points().is_superset(required)) {
            return Err(LayoutError::MissingEdges { kind: k.to_char(), required });
        }
        Ok(LayoutSlot { allowed, required })
    }

    pub fn any() -> Self {
        LayoutSlot { allowed: KindSet::ALL, required: EdgeSet::EMPTY }
    }

    pub fn fixed(kind: TileKind) -> Self {
        LayoutSlot { allowed: KindSet::single(kind), required: kind.connection_points() }
    }

    /// Any tile with four connection points.
    pub fn four_point() -> Self {
        LayoutSlot { allowed: KindSet::FOUR_POINT, required: EdgeSet::FULL }
    }

    pub fn allowed(&self) -> KindSet {
        self.allowed
    }

    pub fn required(&self) -> EdgeSet {
        self.required
    }

    pub fn admits(&self, kind: TileKind) -> bool {
        self.allowed.contains(kind)
    }

    fn transform(&self, s: Symmetry) -> Self {
        LayoutSlot { allowed: self.allowed.map(|k| k.transform(s)), required: self.required.map(|e| s.map_side(e)) }
    }
}

impl fmt::Display for LayoutSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.allowed, self.required)
    }
}

/// A square grid of slots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    size: usize,
    slots: Vec<LayoutSlot>,
    tag: String,
}

impl Layout {
    pub fn new(size: usize, slots: Vec<LayoutSlot>, tag: impl Into<String>) -> Result<Self, LayoutError> {
        if size == 0 || size > MAX_SEARCH_SIZE {
            return Err(LayoutError::Size(size));
        }
        if slots.len() != size * size {
            return Err(LayoutError::NotSquare { expected: size, found: slots.len() / size });
        }
        Ok(Layout { size, slots, tag: tag.into() })
    }

    /// Every cell unconstrained: filling it enumerates all knot mosaics.
    pub fn free(size: usize) -> Result<Self, LayoutError> {
        Layout::new(size, alloc::vec![LayoutSlot::any(); size * size], "")
    }

    /// The layout of a mosaic's shape: each non-blank cell with two
    /// connection points is fixed, each four-point cell may hold any
    /// four-point tile, and blank cells stay blank.
    pub fn of_shape(m: &Mosaic) -> Self {
        let slots = m
            .cells()
            .iter()
            .map(|&k| match k.connection_points().len() {
                4 => LayoutSlot::four_point(),
                _ => LayoutSlot::fixed(k),
            })
            .collect();
        Layout { size: m.size(), slots, tag: String::new() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn slots(&self) -> &[LayoutSlot] {
        &self.slots
    }

    pub fn slot(&self, row: usize, col: usize) -> LayoutSlot {
        self.slots[row * self.size + col]
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    /// Cells that cannot be blank.
    pub fn tile_number(&self) -> usize {
        self.slots.iter().filter(|s| !s.admits(TileKind::Blank)).count()
    }

    /// Number of cells with more than one allowed tile.
    pub fn free_slots(&self) -> usize {
        self.slots.iter().filter(|s| s.allowed.len() > 1).count()
    }

    /// True when `m` fits every slot.
    pub fn admits(&self, m: &Mosaic) -> bool {
        m.size() == self.size && self.slots.iter().zip(m.cells()).all(|(s, &k)| s.admits(k))
    }

    pub fn transform(&self, s: Symmetry) -> Self {
        let n = self.size;
        let mut slots = self.slots.clone();
        for r in 0..n {
            for c in 0..n {
                let (r2, c2) = s.map_cell(n, r, c);
                slots[r2 * n + c2] = self.slots[r * n + c].transform(s);
            }
        }
        Layout { size: n, slots, tag: self.tag.clone() }
    }

    pub fn parse(text: &str) -> Result<Self, LayoutError> {
        let mut tag = String::new();
        let mut rows: Vec<Vec<LayoutSlot>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(t) = comment.trim().strip_prefix("tag:") {
                    tag = t.trim().to_string();
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|cell| parse_slot(cell).map_err(|message| LayoutError::Syntax { line: i + 1, message }))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(LayoutError::NotSquare { expected: bad.len(), found: n });
        }
        Layout::new(n, rows.concat(), tag)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.tag.is_empty() {
            let _ = writeln!(out, "# tag: {}", self.tag);
        }
        let width = self.slots.iter().map(|s| s.to_string().len()).max().unwrap_or(0);
        for row in self.slots.chunks(self.size) {
            let cells: Vec<String> = row.iter().map(|s| alloc::format!("{:<width$}", s.to_string())).collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn parse_slot(cell: &str) -> Result<LayoutSlot, String> {
    let (kinds, edges) = cell.split_once(':').ok_or_else(|| alloc::format!("cell {cell:?} lacks ':'"))?;
    let allowed = if kinds == "*" {
        KindSet::ALL
    } else {
        kinds.chars().try_fold(KindSet::EMPTY, |s, ch| {
            TileKind::from_char(ch).map(|k| s.with(k)).ok_or_else(|| alloc::format!("bad tile {ch:?}"))
        })?
    };
    let required = edges.chars().try_fold(EdgeSet::EMPTY, |s, ch| {
        EdgeSide::from_letter(ch).map(|e| s.with(e)).ok_or_else(|| alloc::format!("bad edge {ch:?}"))
    })?;
    LayoutSlot::new(allowed, required).map_err(|e| e.to_string())
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_validation() {
        assert_eq!(LayoutSlot::new(KindSet::EMPTY, EdgeSet::EMPTY), Err(LayoutError::EmptySlot));
        let err = LayoutSlot::new(KindSet::from_kinds(&[TileKind::ArcBL]), EdgeSet::from_sides(&[EdgeSide::Top]));
        assert!(matches!(err, Err(LayoutError::MissingEdges { kind: '1', .. })));
        assert!(LayoutSlot::four_point().admits(TileKind::CrossB));
    }

    #[test]
    fn text_round_trip() {
        let text = "# tag: unknot\n2:BR 1:BL\n3:TR 4:TL\n";
        let l = Layout::parse(text).unwrap();
        assert_eq!(l.size(), 2);
        assert_eq!(l.tag(), "unknot");
        assert_eq!(l.tile_number(), 4);
        assert_eq!(Layout::parse(&l.to_text()).unwrap(), l);
        let any = Layout::parse("* *\n*: 0:\n");
        assert!(any.is_err());
        let any = Layout::parse("*: *:\n*: 0:\n").unwrap();
        assert_eq!(any.free_slots(), 3);
        assert!(matches!(Layout::parse("0: 0:\n"), Err(LayoutError::NotSquare { .. })));
        assert!(matches!(Layout::parse("2:T\n"), Err(LayoutError::Syntax { line: 1, .. })));
    }

    #[test]
    fn shape_layout() {
        let m = Mosaic::parse("0210\n2791\n3A94\n0340\n").unwrap();
        let l = Layout::of_shape(&m);
        assert_eq!(l.tile_number(), 12);
        assert_eq!(l.free_slots(), 4);
        assert!(l.admits(&m));
        for s in Symmetry::ALL {
            assert!(l.transform(s).admits(&m.transform(s)));
        }
    }
}
