//! The mosaic tile alphabet and square boards built from it.
//!
//! Tiles carry the conventional indices `T0`..`T10`:
//!
//! | index | kind         | strands                         |
//! |-------|--------------|---------------------------------|
//! | 0     | `Blank`      | none                            |
//! | 1     | `ArcBL`      | bottom–left                     |
//! | 2     | `ArcBR`      | bottom–right                    |
//! | 3     | `ArcTR`      | top–right                       |
//! | 4     | `ArcTL`      | top–left                        |
//! | 5     | `SegH`       | left–right                      |
//! | 6     | `SegV`       | top–bottom                      |
//! | 7     | `DoubleArcA` | bottom–right and top–left       |
//! | 8     | `DoubleArcB` | bottom–left and top–right       |
//! | 9     | `CrossA`     | top–bottom over left–right      |
//! | 10    | `CrossB`     | left–right over top–bottom      |
//!
//! A quarter turn counterclockwise sends `T1 -> T2 -> T3 -> T4 -> T1`,
//! swaps `T5`/`T6`, `T7`/`T8` and `T9`/`T10`. Cells are addressed
//! `(row, column)` from the top-left corner, zero-based.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Largest board the search code packs into machine words.
pub const MAX_SEARCH_SIZE: usize = 8;

/// Midpoint of one of the four tile edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeSide {
    Top,
    Right,
    Bottom,
    Left,
}

impl EdgeSide {
    pub const ALL: [EdgeSide; 4] = [EdgeSide::Top, EdgeSide::Right, EdgeSide::Bottom, EdgeSide::Left];

    pub const fn bit(self) -> u8 {
        match self {
            EdgeSide::Top => 1,
            EdgeSide::Right => 2,
            EdgeSide::Bottom => 4,
            EdgeSide::Left => 8,
        }
    }

    pub const fn opposite(self) -> Self {
        match self {
            EdgeSide::Top => EdgeSide::Bottom,
            EdgeSide::Right => EdgeSide::Left,
            EdgeSide::Bottom => EdgeSide::Top,
            EdgeSide::Left => EdgeSide::Right,
        }
    }

    /// Image under a quarter turn counterclockwise.
    pub const fn rotate_ccw(self) -> Self {
        match self {
            EdgeSide::Top => EdgeSide::Left,
            EdgeSide::Left => EdgeSide::Bottom,
            EdgeSide::Bottom => EdgeSide::Right,
            EdgeSide::Right => EdgeSide::Top,
        }
    }

    /// Image under the left-right mirror.
    pub const fn mirror(self) -> Self {
        match self {
            EdgeSide::Left => EdgeSide::Right,
            EdgeSide::Right => EdgeSide::Left,
            other => other,
        }
    }

    /// Next side counterclockwise as seen on the page (bottom, right, top, left).
    pub const fn next_ccw(self) -> Self {
        match self {
            EdgeSide::Bottom => EdgeSide::Right,
            EdgeSide::Right => EdgeSide::Top,
            EdgeSide::Top => EdgeSide::Left,
            EdgeSide::Left => EdgeSide::Bottom,
        }
    }

    /// Row and column step towards the neighbour across this edge.
    pub const fn step(self) -> (isize, isize) {
        match self {
            EdgeSide::Top => (-1, 0),
            EdgeSide::Right => (0, 1),
            EdgeSide::Bottom => (1, 0),
            EdgeSide::Left => (0, -1),
        }
    }

    /// Outward direction in page coordinates (x right, y up).
    pub const fn outward(self) -> (i32, i32) {
        match self {
            EdgeSide::Top => (0, 1),
            EdgeSide::Right => (1, 0),
            EdgeSide::Bottom => (0, -1),
            EdgeSide::Left => (-1, 0),
        }
    }

    pub const fn letter(self) -> char {
        match self {
            EdgeSide::Top => 'T',
            EdgeSide::Right => 'R',
            EdgeSide::Bottom => 'B',
            EdgeSide::Left => 'L',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'T' => Some(EdgeSide::Top),
            'R' => Some(EdgeSide::Right),
            'B' => Some(EdgeSide::Bottom),
            'L' => Some(EdgeSide::Left),
            _ => None,
        }
    }
}

/// A set of tile edges, packed as a 4-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(u8);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);
    pub const FULL: EdgeSet = EdgeSet(0b1111);

    pub const fn from_bits(bits: u8) -> Self {
        EdgeSet(bits & 0b1111)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn from_sides(sides: &[EdgeSide]) -> Self {
        EdgeSet(sides.iter().fold(0, |acc, s| acc | s.bit()))
    }

    pub const fn contains(self, side: EdgeSide) -> bool {
        self.0 & side.bit() != 0
    }

    pub const fn is_superset(self, other: EdgeSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn with(self, side: EdgeSide) -> Self {
        EdgeSet(self.0 | side.bit())
    }

    pub fn iter(self) -> impl Iterator<Item = EdgeSide> {
        EdgeSide::ALL.into_iter().filter(move |s| self.contains(*s))
    }

    pub fn map(self, f: impl Fn(EdgeSide) -> EdgeSide) -> Self {
        self.iter().fold(EdgeSet::EMPTY, |acc, s| acc.with(f(s)))
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for side in self.iter() {
            write!(f, "{}", side.letter())?;
        }
        Ok(())
    }
}

/// One of the eleven mosaic tiles. The discriminant is the tile index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(u8)]
pub enum TileKind {
    #[default]
    Blank = 0,
    ArcBL = 1,
    ArcBR = 2,
    ArcTR = 3,
    ArcTL = 4,
    SegH = 5,
    SegV = 6,
    DoubleArcA = 7,
    DoubleArcB = 8,
    CrossA = 9,
    CrossB = 10,
}

use EdgeSide::{Bottom as B, Left as L, Right as R, Top as T};

impl TileKind {
    pub const ALL: [TileKind; 11] = [
        TileKind::Blank,
        TileKind::ArcBL,
        TileKind::ArcBR,
        TileKind::ArcTR,
        TileKind::ArcTL,
        TileKind::SegH,
        TileKind::SegV,
        TileKind::DoubleArcA,
        TileKind::DoubleArcB,
        TileKind::CrossA,
        TileKind::CrossB,
    ];

    /// Tiles with four connection points.
    pub const FOUR_POINT: [TileKind; 4] =
        [TileKind::DoubleArcA, TileKind::DoubleArcB, TileKind::CrossA, TileKind::CrossB];

    pub const fn index(self) -> u8 {
        self as u8
    }

    pub const fn from_index(index: u8) -> Option<Self> {
        if index <= 10 {
            Some(Self::ALL[index as usize])
        } else {
            None
        }
    }

    /// Character used by the text format: `'0'..='9'` then `'A'` for `T10`.
    pub const fn to_char(self) -> char {
        match self {
            TileKind::CrossB => 'A',
            other => (b'0' + other as u8) as char,
        }
    }

    pub const fn from_char(c: char) -> Option<Self> {
        match c {
            '0'..='9' => Self::from_index(c as u8 - b'0'),
            'A' => Some(TileKind::CrossB),
            _ => None,
        }
    }

    /// The curves drawn on the tile as pairs of edges. For crossings the
    /// over-strand comes first.
    pub const fn strands(self) -> &'static [(EdgeSide, EdgeSide)] {
        match self {
            TileKind::Blank => &[],
            TileKind::ArcBL => &[(B, L)],
            TileKind::ArcBR => &[(B, R)],
            TileKind::ArcTR => &[(T, R)],
            TileKind::ArcTL => &[(T, L)],
            TileKind::SegH => &[(L, R)],
            TileKind::SegV => &[(T, B)],
            TileKind::DoubleArcA => &[(B, R), (T, L)],
            TileKind::DoubleArcB => &[(B, L), (T, R)],
            TileKind::CrossA => &[(T, B), (L, R)],
            TileKind::CrossB => &[(L, R), (T, B)],
        }
    }

    pub const fn connection_points(self) -> EdgeSet {
        EdgeSet(CONNECTIONS[self as usize])
    }

    pub const fn is_blank(self) -> bool {
        matches!(self, TileKind::Blank)
    }

    pub const fn is_crossing(self) -> bool {
        matches!(self, TileKind::CrossA | TileKind::CrossB)
    }

    pub const fn is_single_arc(self) -> bool {
        matches!(self, TileKind::ArcBL | TileKind::ArcBR | TileKind::ArcTR | TileKind::ArcTL)
    }

    pub const fn is_segment(self) -> bool {
        matches!(self, TileKind::SegH | TileKind::SegV)
    }

    pub const fn is_double_arc(self) -> bool {
        matches!(self, TileKind::DoubleArcA | TileKind::DoubleArcB)
    }

    /// Where a curve entering at `entry` leaves the tile.
    pub fn exit(self, entry: EdgeSide) -> Option<EdgeSide> {
        self.strands().iter().find_map(|&(a, b)| {
            if a == entry {
                Some(b)
            } else if b == entry {
                Some(a)
            } else {
                None
            }
        })
    }

    /// The two-connection-point tile joining exactly these two edges.
    pub fn joining(a: EdgeSide, b: EdgeSide) -> Option<Self> {
        let want = EdgeSet::from_sides(&[a, b]);
        if want.len() != 2 {
            return None;
        }
        TileKind::ALL[1..7].iter().copied().find(|t| t.connection_points() == want)
    }

    /// Image of the tile under a board symmetry, following the strand
    /// geometry (which strand lies on top is preserved).
    pub fn transform(self, s: Symmetry) -> Self {
        if self.is_crossing() {
            let (over_a, _) = self.strands()[0];
            let vertical = matches!(s.map_side(over_a), T | B);
            return if vertical { TileKind::CrossA } else { TileKind::CrossB };
        }
        let image = self.connection_points().map(|e| s.map_side(e));
        match self {
            TileKind::DoubleArcA | TileKind::DoubleArcB => {
                let (a, b) = self.strands()[0];
                let arc = EdgeSet::from_sides(&[s.map_side(a), s.map_side(b)]);
                if arc == TileKind::ArcBR.connection_points() || arc == TileKind::ArcTL.connection_points() {
                    TileKind::DoubleArcA
                } else {
                    TileKind::DoubleArcB
                }
            }
            _ => TileKind::ALL[..7]
                .iter()
                .copied()
                .find(|t| t.connection_points() == image)
                .expect("two-point tiles are closed under symmetry"),
        }
    }
}

const CONNECTIONS: [u8; 11] = [
    0,
    B.bit() | L.bit(),
    B.bit() | R.bit(),
    T.bit() | R.bit(),
    T.bit() | L.bit(),
    L.bit() | R.bit(),
    T.bit() | B.bit(),
    0b1111,
    0b1111,
    0b1111,
    0b1111,
];

/// Edges of `tile` carrying a curve endpoint.
pub fn connection_points(tile: TileKind) -> EdgeSet {
    tile.connection_points()
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.index())
    }
}

/// One of the eight symmetries of the square board: an optional left-right
/// mirror followed by `quarter_turns` counterclockwise quarter turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    pub reflect: bool,
    pub quarter_turns: u8,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { reflect: false, quarter_turns: 0 };
    pub const QUARTER_TURN: Symmetry = Symmetry { reflect: false, quarter_turns: 1 };
    pub const MIRROR: Symmetry = Symmetry { reflect: true, quarter_turns: 0 };

    pub const ALL: [Symmetry; 8] = [
        Symmetry { reflect: false, quarter_turns: 0 },
        Symmetry { reflect: false, quarter_turns: 1 },
        Symmetry { reflect: false, quarter_turns: 2 },
        Symmetry { reflect: false, quarter_turns: 3 },
        Symmetry { reflect: true, quarter_turns: 0 },
        Symmetry { reflect: true, quarter_turns: 1 },
        Symmetry { reflect: true, quarter_turns: 2 },
        Symmetry { reflect: true, quarter_turns: 3 },
    ];

    /// The four rotations.
    pub const ROTATIONS: [Symmetry; 4] = [
        Symmetry { reflect: false, quarter_turns: 0 },
        Symmetry { reflect: false, quarter_turns: 1 },
        Symmetry { reflect: false, quarter_turns: 2 },
        Symmetry { reflect: false, quarter_turns: 3 },
    ];

    pub fn map_side(self, side: EdgeSide) -> EdgeSide {
        let mut s = if self.reflect { side.mirror() } else { side };
        for _ in 0..self.quarter_turns % 4 {
            s = s.rotate_ccw();
        }
        s
    }

    /// Where the cell `(row, col)` of an `n`-board lands.
    pub fn map_cell(self, n: usize, row: usize, col: usize) -> (usize, usize) {
        let (mut r, mut c) = (row, if self.reflect { n - 1 - col } else { col });
        for _ in 0..self.quarter_turns % 4 {
            (r, c) = (n - 1 - c, r);
        }
        (r, c)
    }

    /// `self` followed by `then`.
    pub fn then(self, then: Symmetry) -> Symmetry {
        let sides = EdgeSide::ALL.map(|e| then.map_side(self.map_side(e)));
        Symmetry::from_side_map(sides)
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|s| self.then(*s) == Symmetry::IDENTITY)
            .expect("dihedral group is closed")
    }

    /// True for the four orientation-reversing symmetries.
    pub const fn is_reflection(self) -> bool {
        self.reflect
    }

    fn from_side_map(images: [EdgeSide; 4]) -> Symmetry {
        Symmetry::ALL
            .into_iter()
            .find(|s| EdgeSide::ALL.map(|e| s.map_side(e)) == images)
            .expect("side permutation comes from a board symmetry")
    }
}

/// Errors from building, parsing or querying boards.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MosaicError {
    #[error("mosaic has no rows")]
    Empty,
    #[error("row {row} has {found} tiles, expected {expected}")]
    NotSquare { row: usize, expected: usize, found: usize },
    #[error("invalid tile character {ch:?} in row {row}")]
    BadTile { row: usize, ch: char },
    #[error("mosaic is not suitably connected")]
    NotSuitablyConnected,
    #[error("boundary {index} is not interior to a board of size {size}")]
    BoundaryOutOfRange { index: usize, size: usize },
}

/// A row boundary `Row(k)` lies between rows `k - 1` and `k`; likewise for
/// columns. Interior boundaries have `1 <= k < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    Row(usize),
    Column(usize),
}

/// Square board of tiles, not necessarily suitably connected.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mosaic {
    size: usize,
    cells: Vec<TileKind>,
}

impl Mosaic {
    /// An all-blank board.
    pub fn blank(size: usize) -> Self {
        assert!(size >= 1, "mosaic size must be positive");
        Mosaic { size, cells: alloc::vec![TileKind::Blank; size * size] }
    }

    pub fn from_rows<R: AsRef<[TileKind]>>(rows: &[R]) -> Result<Self, MosaicError> {
        let size = rows.len();
        if size == 0 {
            return Err(MosaicError::Empty);
        }
        let mut cells = Vec::with_capacity(size * size);
        for (row, tiles) in rows.iter().enumerate() {
            let tiles = tiles.as_ref();
            if tiles.len() != size {
                return Err(MosaicError::NotSquare { row, expected: size, found: tiles.len() });
            }
            cells.extend_from_slice(tiles);
        }
        Ok(Mosaic { size, cells })
    }

    /// Builds from row-major cells; `cells.len()` must be a positive square.
    pub fn from_cells(size: usize, cells: Vec<TileKind>) -> Result<Self, MosaicError> {
        if size == 0 {
            return Err(MosaicError::Empty);
        }
        if cells.len() != size * size {
            return Err(MosaicError::NotSquare { row: cells.len() / size, expected: size, found: cells.len() % size });
        }
        Ok(Mosaic { size, cells })
    }

    /// Builds from tile indices, one slice per row.
    pub fn from_indices<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, MosaicError> {
        let rows: Vec<Vec<TileKind>> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.as_ref()
                    .iter()
                    .map(|&i| {
                        TileKind::from_index(i)
                            .ok_or(MosaicError::BadTile { row: r, ch: char::from_digit(i as u32 % 36, 36).unwrap_or('?') })
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Mosaic::from_rows(&rows)
    }

    /// Parses the `.mosaic` text format: `#` comment lines, then `n` lines of
    /// `n` tile characters.
    pub fn parse(text: &str) -> Result<Self, MosaicError> {
        let rows: Vec<&str> = text
            .lines()
            .map(|l| l.trim_end_matches('\r'))
            .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
            .collect();
        Self::parse_rows(&rows)
    }

    /// Parses the single-line form with rows joined by `/`.
    pub fn parse_line(line: &str) -> Result<Self, MosaicError> {
        let rows: Vec<&str> = line.trim().split('/').collect();
        Self::parse_rows(&rows)
    }

    fn parse_rows(rows: &[&str]) -> Result<Self, MosaicError> {
        if rows.is_empty() {
            return Err(MosaicError::Empty);
        }
        let size = rows.len();
        let mut cells = Vec::with_capacity(size * size);
        for (r, line) in rows.iter().enumerate() {
            let mut count = 0;
            for ch in line.chars() {
                cells.push(TileKind::from_char(ch).ok_or(MosaicError::BadTile { row: r, ch })?);
                count += 1;
            }
            if count != size {
                return Err(MosaicError::NotSquare { row: r, expected: size, found: count });
            }
        }
        Ok(Mosaic { size, cells })
    }

    /// Text form: `n` lines of tile characters, each ending in a newline.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.size * (self.size + 1));
        for row in self.rows() {
            out.extend(row.iter().map(|t| t.to_char()));
            out.push('\n');
        }
        out
    }

    /// Single-line form, rows joined by `/`.
    pub fn to_line(&self) -> String {
        let mut out = String::with_capacity(self.size * (self.size + 1));
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                out.push('/');
            }
            out.extend(row.iter().map(|t| t.to_char()));
        }
        out
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[TileKind] {
        &self.cells
    }

    pub(crate) fn cells_mut(&mut self) -> &mut [TileKind] {
        &mut self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> TileKind {
        self.cells[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, tile: TileKind) {
        self.cells[row * self.size + col] = tile;
    }

    /// The tile across `side` of `(row, col)`, if that cell is on the board.
    pub fn neighbour(&self, row: usize, col: usize, side: EdgeSide) -> Option<(usize, usize)> {
        let (dr, dc) = side.step();
        let r = row.checked_add_signed(dr)?;
        let c = col.checked_add_signed(dc)?;
        (r < self.size && c < self.size).then_some((r, c))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[TileKind]> {
        self.cells.chunks(self.size)
    }

    /// Number of non-blank tiles.
    pub fn tile_number(&self) -> usize {
        self.cells.iter().filter(|t| !t.is_blank()).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.cells.iter().filter(|t| t.is_crossing()).count()
    }

    /// Every connection point meets a connection point of the adjacent tile
    /// and none lies on the outer boundary.
    pub fn is_suitably_connected(&self) -> bool {
        let n = self.size;
        for r in 0..n {
            for c in 0..n {
                let here = self.get(r, c).connection_points();
                let right = if c + 1 < n { self.get(r, c + 1).connection_points().contains(L) } else { false };
                let below = if r + 1 < n { self.get(r + 1, c).connection_points().contains(T) } else { false };
                if here.contains(R) != right || here.contains(B) != below {
                    return false;
                }
                if (r == 0 && here.contains(T)) || (c == 0 && here.contains(L)) {
                    return false;
                }
            }
        }
        true
    }

    /// Matched connection points crossing an interior boundary.
    pub fn entry_points_between(&self, boundary: Boundary) -> Result<usize, MosaicError> {
        let n = self.size;
        let k = match boundary {
            Boundary::Row(k) | Boundary::Column(k) => k,
        };
        if k == 0 || k >= n {
            return Err(MosaicError::BoundaryOutOfRange { index: k, size: n });
        }
        let count = (0..n)
            .filter(|&i| match boundary {
                Boundary::Row(_) => {
                    self.get(k - 1, i).connection_points().contains(B) && self.get(k, i).connection_points().contains(T)
                }
                Boundary::Column(_) => {
                    self.get(i, k - 1).connection_points().contains(R) && self.get(i, k).connection_points().contains(L)
                }
            })
            .count();
        Ok(count)
    }

    /// Non-blank tile count of each row.
    pub fn row_counts(&self) -> Vec<usize> {
        self.rows().map(|row| row.iter().filter(|t| !t.is_blank()).count()).collect()
    }

    /// Non-blank tile count of each column.
    pub fn column_counts(&self) -> Vec<usize> {
        (0..self.size).map(|c| (0..self.size).filter(|&r| !self.get(r, c).is_blank()).count()).collect()
    }

    /// Occupied rows and columns, ascending.
    pub fn occupied_spans(&self) -> (Vec<usize>, Vec<usize>) {
        let pick = |counts: Vec<usize>| counts.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect();
        (pick(self.row_counts()), pick(self.column_counts()))
    }

    /// The board seen through symmetry `s`.
    pub fn transform(&self, s: Symmetry) -> Mosaic {
        let n = self.size;
        let mut out = Mosaic::blank(n);
        for r in 0..n {
            for c in 0..n {
                let (r2, c2) = s.map_cell(n, r, c);
                out.set(r2, c2, self.get(r, c).transform(s));
            }
        }
        out
    }

    /// Least serialization among the eight symmetric images.
    pub fn canonical_form(&self) -> Mosaic {
        Symmetry::ALL[1..]
            .iter()
            .map(|&s| self.transform(s))
            .fold(self.clone(), |best, m| if m.cells < best.cells { m } else { best })
    }

    /// True when no symmetric image serializes lower.
    pub fn is_canonical(&self) -> bool {
        Symmetry::ALL[1..].iter().all(|&s| self.transform(s).cells >= self.cells)
    }

    /// Caps in row-major order of their first tile; top and bottom caps are
    /// horizontal pairs, left and right caps vertical pairs.
    pub fn find_caps(&self) -> Vec<Cap> {
        let n = self.size;
        let mut caps = Vec::new();
        for r in 0..n {
            for c in 0..n {
                let here = self.get(r, c);
                if c + 1 < n {
                    match (here, self.get(r, c + 1)) {
                        (TileKind::ArcBR, TileKind::ArcBL) => caps.push(Cap { kind: CapKind::Top, row: r, col: c }),
                        (TileKind::ArcTR, TileKind::ArcTL) => caps.push(Cap { kind: CapKind::Bottom, row: r, col: c }),
                        _ => {}
                    }
                }
                if r + 1 < n {
                    match (here, self.get(r + 1, c)) {
                        (TileKind::ArcBL, TileKind::ArcTL) => caps.push(Cap { kind: CapKind::Right, row: r, col: c }),
                        (TileKind::ArcBR, TileKind::ArcTR) => caps.push(Cap { kind: CapKind::Left, row: r, col: c }),
                        _ => {}
                    }
                }
            }
        }
        caps
    }

    /// Copy of the board placed at `(row, col)` inside a larger blank board.
    pub fn embed(&self, size: usize, row: usize, col: usize) -> Option<Mosaic> {
        if row + self.size > size || col + self.size > size {
            return None;
        }
        let mut out = Mosaic::blank(size);
        for r in 0..self.size {
            for c in 0..self.size {
                out.set(row + r, col + c, self.get(r, c));
            }
        }
        Some(out)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mosaic({})", self.to_line())
    }
}

impl core::str::FromStr for Mosaic {
    type Err = MosaicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mosaic::parse(s)
    }
}

/// Square-board check: the unit square adjacency of every edge is matched.
pub fn is_suitably_connected(m: &Mosaic) -> bool {
    m.is_suitably_connected()
}

/// A suitably connected board.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotMosaic(Mosaic);

impl KnotMosaic {
    pub fn new(m: Mosaic) -> Result<Self, MosaicError> {
        if m.is_suitably_connected() {
            Ok(KnotMosaic(m))
        } else {
            Err(MosaicError::NotSuitablyConnected)
        }
    }

    /// Wraps a board the caller has already checked.
    pub(crate) fn new_unchecked(m: Mosaic) -> Self {
        debug_assert!(m.is_suitably_connected());
        KnotMosaic(m)
    }

    pub fn mosaic(&self) -> &Mosaic {
        &self.0
    }

    pub fn into_mosaic(self) -> Mosaic {
        self.0
    }

    pub fn transform(&self, s: Symmetry) -> KnotMosaic {
        KnotMosaic(self.0.transform(s))
    }

    pub fn canonical_form(&self) -> KnotMosaic {
        KnotMosaic(self.0.canonical_form())
    }
}

impl core::ops::Deref for KnotMosaic {
    type Target = Mosaic;

    fn deref(&self) -> &Mosaic {
        &self.0
    }
}

impl TryFrom<Mosaic> for KnotMosaic {
    type Error = MosaicError;

    fn try_from(m: Mosaic) -> Result<Self, Self::Error> {
        KnotMosaic::new(m)
    }
}

impl fmt::Debug for KnotMosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KnotMosaic({})", self.0.to_line())
    }
}

impl fmt::Display for KnotMosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CapKind {
    Top,
    Right,
    Bottom,
    Left,
}

/// Two adjacent single arcs sharing a connection point whose free ends
/// enter the same neighbouring row or column. `(row, col)` is the upper
/// or left tile of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cap {
    pub kind: CapKind,
    pub row: usize,
    pub col: usize,
}

impl Cap {
    /// The two cells of the cap.
    pub fn cells(&self) -> [(usize, usize); 2] {
        match self.kind {
            CapKind::Top | CapKind::Bottom => [(self.row, self.col), (self.row, self.col + 1)],
            CapKind::Left | CapKind::Right => [(self.row, self.col), (self.row + 1, self.col)],
        }
    }

    /// Side through which both free ends leave the cap.
    pub fn opening(&self) -> EdgeSide {
        match self.kind {
            CapKind::Top => B,
            CapKind::Bottom => T,
            CapKind::Left => R,
            CapKind::Right => L,
        }
    }
}
