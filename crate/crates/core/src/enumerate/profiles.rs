//! Shapes of space-efficient prime-knot mosaics.
//!
//! A [`Shadow`] keeps only the connection points of each cell, so all four
//! four-point tiles look alike. [`layout_profiles`] enumerates the shadows
//! on an `n x n` board in which every row is occupied and which satisfy the
//! structural rules obeyed (after simplification) by space-efficient
//! mosaics of prime knots:
//!
//! - the shadow is connected;
//! - the end cells of the first and last occupied rows and columns are
//!   blank;
//! - the first occupied row holds only top caps, between one and
//!   `(n - 2) / 2` of them, and likewise for the other three sides;
//! - every occupied row and column has exactly two tiles forming a cap, or
//!   at least four tiles;
//! - the two cells fed by the free ends of any cap, including caps whose
//!   arcs are joined by straight segments, have four connection points;
//! - consecutive occupied rows (columns) share at least four entry points,
//!   except the first two and the last two;
//! - with at least five occupied rows (columns), all but the first two and
//!   last two have at least five tiles;
//! - no row is made only of vertical segments, no column only of
//!   horizontal ones;
//! - the second and next-to-last occupied rows contain no horizontal
//!   segment, and the second and next-to-last columns no vertical one;
//! - on even boards, the four tile edges meeting at the centre point carry
//!   connection points.
//!
//! Boards with every column occupied are the quarter-turn images of these.
//! Shadows are identified up to symmetry and translation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Layout, LayoutSlot};
use crate::tiles::{EdgeSet, EdgeSide, Mosaic, Symmetry, TileKind, MAX_SEARCH_SIZE};
use crate::unionfind::UnionFind;

const T: u8 = EdgeSide::Top.bit();
const R: u8 = EdgeSide::Right.bit();
const B: u8 = EdgeSide::Bottom.bit();
const L: u8 = EdgeSide::Left.bit();
const FULL: u8 = T | R | B | L;

/// Connection points of every cell of a board.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shadow {
    size: usize,
    cells: Vec<EdgeSet>,
}

impl Shadow {
    pub fn of(m: &Mosaic) -> Self {
        Shadow { size: m.size(), cells: m.cells().iter().map(|k| k.connection_points()).collect() }
    }

    fn from_bits(size: usize, bits: &[u8]) -> Self {
        Shadow { size, cells: bits.iter().map(|&b| EdgeSet::from_bits(b)).collect() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[EdgeSet] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> EdgeSet {
        self.cells[row * self.size + col]
    }

    pub fn tile_number(&self) -> usize {
        self.cells.iter().filter(|e| !e.is_empty()).count()
    }

    /// Cells with four connection points.
    pub fn four_point_count(&self) -> usize {
        self.cells.iter().filter(|e| e.len() == 4).count()
    }

    pub fn row_counts(&self) -> Vec<usize> {
        self.cells.chunks(self.size).map(|r| r.iter().filter(|e| !e.is_empty()).count()).collect()
    }

    pub fn column_counts(&self) -> Vec<usize> {
        let n = self.size;
        (0..n).map(|c| (0..n).filter(|&r| !self.get(r, c).is_empty()).count()).collect()
    }

    pub fn transform(&self, s: Symmetry) -> Self {
        let n = self.size;
        let mut cells = self.cells.clone();
        for r in 0..n {
            for c in 0..n {
                let (r2, c2) = s.map_cell(n, r, c);
                cells[r2 * n + c2] = self.get(r, c).map(|e| s.map_side(e));
            }
        }
        Shadow { size: n, cells }
    }

    /// Least image under the eight symmetries, each shifted so that its
    /// first occupied row and column are row and column zero.
    pub fn canonical_form(&self) -> Self {
        Symmetry::ALL.iter().map(|&s| self.transform(s).shifted_to_corner()).min().expect("eight symmetries")
    }

    fn shifted_to_corner(&self) -> Self {
        let n = self.size;
        let rows = self.row_counts();
        let cols = self.column_counts();
        let dr = rows.iter().position(|&k| k > 0).unwrap_or(0);
        let dc = cols.iter().position(|&k| k > 0).unwrap_or(0);
        let mut cells = alloc::vec![EdgeSet::EMPTY; n * n];
        for r in dr..n {
            for c in dc..n {
                cells[(r - dr) * n + c - dc] = self.get(r, c);
            }
        }
        Shadow { size: n, cells }
    }

    /// Slots: blank cells blank, two-point cells fixed, four-point cells
    /// any of the four four-point tiles.
    pub fn to_layout(&self, tag: impl Into<String>) -> Layout {
        let slots = self
            .cells
            .iter()
            .map(|e| match e.len() {
                4 => LayoutSlot::four_point(),
                _ => LayoutSlot::fixed(tile_with(*e)),
            })
            .collect();
        Layout::new(self.size, slots, tag).expect("shadow sizes are in range")
    }
}

fn tile_with(edges: EdgeSet) -> TileKind {
    TileKind::ALL.into_iter().find(|k| k.connection_points() == edges).expect("two-point edge sets name a tile")
}

impl fmt::Display for Shadow {
    /// Tile characters, with `X` for any four-point tile.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.size) {
            for e in row {
                let ch = if e.len() == 4 { 'X' } else { tile_with(*e).to_char() };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Shadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = alloc::format!("{self}");
        write!(f, "Shadow({})", text.trim_end().replace('\n', "/"))
    }
}

/// Result of [`layout_profiles`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileReport {
    pub size: usize,
    /// Achievable tile numbers.
    pub tile_numbers: BTreeSet<usize>,
    /// Row and column counts of each shadow, by tile number.
    pub profiles: BTreeMap<usize, BTreeSet<(Vec<usize>, Vec<usize>)>>,
    /// One canonical shadow per symmetry class, sorted by tile number.
    pub shadows: Vec<Shadow>,
}

/// Tile numbers conjectured to be exactly those of space-efficient
/// 7-boards of prime knots. Unproven; used only for comparison.
pub const CONJECTURED_SEVEN: [usize; 10] = [27, 29, 31, 32, 34, 36, 37, 39, 40, 41];

impl ProfileReport {
    /// Tile numbers found but not in `expected`, then those expected but
    /// not found.
    pub fn discrepancies(&self, expected: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let expected: BTreeSet<usize> = expected.iter().copied().collect();
        (
            self.tile_numbers.difference(&expected).copied().collect(),
            expected.difference(&self.tile_numbers).copied().collect(),
        )
    }
}

/// Tile numbers allowed by the structural rules on an `n x n` board, for
/// `4 <= n <= 8`.
///
/// # Panics
/// If `n` is outside that range.
pub fn layout_profiles(n: usize) -> ProfileReport {
    assert!((4..=MAX_SEARCH_SIZE).contains(&n), "profile search needs 4 <= n <= {MAX_SEARCH_SIZE}");
    let mut classes: BTreeSet<Shadow> = BTreeSet::new();
    ShadowSearch::new(n).run(&mut |bits| {
        classes.insert(Shadow::from_bits(n, bits).canonical_form());
    });
    let mut shadows: Vec<Shadow> = classes.into_iter().collect();
    shadows.sort_by_key(|s| s.tile_number());
    let mut tile_numbers = BTreeSet::new();
    let mut profiles: BTreeMap<usize, BTreeSet<(Vec<usize>, Vec<usize>)>> = BTreeMap::new();
    for s in &shadows {
        tile_numbers.insert(s.tile_number());
        profiles.entry(s.tile_number()).or_default().insert((s.row_counts(), s.column_counts()));
    }
    ProfileReport { size: n, tile_numbers, profiles, shadows }
}

/// Canonical shadows with the given tile number.
pub fn shadow_layouts(n: usize, tile_number: usize) -> Vec<Shadow> {
    layout_profiles(n).shadows.into_iter().filter(|s| s.tile_number() == tile_number).collect()
}

/// Row-by-row depth-first search over shadows with every row occupied.
struct ShadowSearch {
    n: usize,
    // rows grouped by their top mask
    rows_by_top: Vec<Vec<Row>>,
    grid: Vec<u8>,
}

#[derive(Clone, Debug)]
struct Row {
    cells: Vec<u8>,
    bottom: u16,
    count: usize,
}

impl ShadowSearch {
    fn new(n: usize) -> Self {
        let mut rows_by_top = alloc::vec![Vec::new(); 1 << n];
        let mut cells = alloc::vec![0u8; n];
        build_rows(n, 0, false, &mut cells, &mut rows_by_top);
        ShadowSearch { n, rows_by_top, grid: alloc::vec![0; n * n] }
    }

    fn run(mut self, visit: &mut dyn FnMut(&[u8])) {
        self.extend(0, 0, visit);
    }

    fn extend(&mut self, r: usize, top: u16, visit: &mut dyn FnMut(&[u8])) {
        let n = self.n;
        if r == n {
            if top == 0 && self.center_ok() && self.columns_ok() && self.connected() {
                visit(&self.grid);
            }
            return;
        }
        for i in 0..self.rows_by_top[top as usize].len() {
            let row = &self.rows_by_top[top as usize][i];
            if r + 1 == n && row.bottom != 0 {
                continue;
            }
            let cells = row.cells.clone();
            let (bottom, count) = (row.bottom, row.count);
            if !self.row_ok(r, &cells, count, top, bottom) {
                continue;
            }
            self.grid[r * n..(r + 1) * n].copy_from_slice(&cells);
            if r > 0 && !cap_feet_ok_between(&self.grid[(r - 1) * n..r * n], &cells) {
                continue;
            }
            self.extend(r + 1, bottom, visit);
        }
        self.grid[r * n..(r + 1) * n].fill(0);
    }

    /// Rules that depend on one row and its boundary masks.
    fn row_ok(&self, r: usize, cells: &[u8], count: usize, top: u16, bottom: u16) -> bool {
        let n = self.n;
        if !line_ok(cells, count, r, n, L | R, T | B) {
            return false;
        }
        // consecutive rows share four entry points, except at the ends
        let _ = bottom;
        !(r >= 2 && r + 2 <= n && top.count_ones() < 4)
    }

    fn columns_ok(&self) -> bool {
        let n = self.n;
        let occupied: Vec<usize> = (0..n).filter(|&c| (0..n).any(|r| self.grid[r * n + c] != 0)).collect();
        let Some((&first, &last)) = occupied.first().zip(occupied.last()) else { return false };
        if occupied.len() != last - first + 1 {
            return false;
        }
        let m = occupied.len();
        for (i, &c) in occupied.iter().enumerate() {
            // read the column top to bottom as a line whose "along" edges are T/B
            let col: Vec<u8> = (0..n).map(|r| rotate_to_row(self.grid[r * n + c])).collect();
            let count = col.iter().filter(|&&e| e != 0).count();
            if !line_ok(&col, count, i, m, L | R, T | B) {
                return false;
            }
            if i + 1 < m {
                let shared = (0..n).filter(|&r| self.grid[r * n + c] & R != 0).count();
                if i >= 1 && i + 3 <= m && shared < 4 {
                    return false;
                }
                let next: Vec<u8> = (0..n).map(|r| rotate_to_row(self.grid[r * n + c + 1])).collect();
                if !cap_feet_ok_between(&col, &next) {
                    return false;
                }
            }
        }
        true
    }

    /// On even boards, the four edges meeting at the centre point carry
    /// connection points.
    fn center_ok(&self) -> bool {
        let n = self.n;
        if n % 2 == 1 {
            return true;
        }
        let (a, b) = (n / 2 - 1, n / 2);
        let at = |r: usize, c: usize| self.grid[r * n + c];
        at(a, a) & (R | B) == R | B && at(b, b) & (T | L) == T | L
    }

    fn connected(&self) -> bool {
        let n = self.n;
        let mut uf = UnionFind::new(n * n);
        let mut occupied = 0;
        for r in 0..n {
            for c in 0..n {
                let e = self.grid[r * n + c];
                if e == 0 {
                    continue;
                }
                occupied += 1;
                if e & R != 0 {
                    uf.union(r * n + c, r * n + c + 1);
                }
                if e & B != 0 {
                    uf.union(r * n + c, (r + 1) * n + c);
                }
            }
        }
        uf.sets() - (n * n - occupied) == 1
    }
}

/// Maps a cell of a column onto a cell of a row: the column's downward
/// direction becomes the row's rightward one, and its left side the row's
/// bottom. Caps, segments and counts keep their meaning.
fn rotate_to_row(e: u8) -> u8 {
    let mut out = 0;
    if e & B != 0 {
        out |= R;
    }
    if e & T != 0 {
        out |= L;
    }
    if e & L != 0 {
        out |= T;
    }
    if e & R != 0 {
        out |= B;
    }
    out
}

/// Rules for one line of cells read left to right, as row `index` of
/// `lines` occupied lines. `along` are the edges joining cells of the line.
fn line_ok(cells: &[u8], count: usize, index: usize, lines: usize, along: u8, across: u8) -> bool {
    let n = cells.len();
    let first = index == 0;
    let last = index + 1 == lines;
    if count == 0 || count == 1 || count == 3 {
        return false;
    }
    if first || last {
        // only caps opening inwards, with blank end cells
        if cells[0] != 0 || cells[n - 1] != 0 {
            return false;
        }
        let (start, end) = if first { (B | R, B | L) } else { (T | R, T | L) };
        let mut c = 0;
        let mut caps = 0;
        while c < n {
            match cells[c] {
                0 => c += 1,
                e if e == start && c + 1 < n && cells[c + 1] == end => {
                    caps += 1;
                    c += 2;
                }
                _ => return false,
            }
        }
        if caps == 0 || caps > (n - 2) / 2 {
            return false;
        }
    }
    if count == 2 && !is_single_cap(cells) {
        return false;
    }
    // never only segments running across the line
    if cells.iter().all(|&e| e == 0 || e == across) {
        return false;
    }
    // the second lines from either end carry no segment along the line
    if (index == 1 || index + 2 == lines) && cells.contains(&along) {
        return false;
    }
    // lines away from the ends have at least five tiles
    if lines >= 5 && index >= 2 && index + 2 < lines && count < 5 {
        return false;
    }
    true
}

fn is_single_cap(cells: &[u8]) -> bool {
    let tiles: Vec<(usize, u8)> = cells.iter().copied().enumerate().filter(|&(_, e)| e != 0).collect();
    matches!(tiles.as_slice(), [(a, x), (b, y)] if *b == a + 1 && ((*x, *y) == (B | R, B | L) || (*x, *y) == (T | R, T | L)))
}

/// For caps in either line, including arcs joined by segments along the
/// line, the cells in the other line at the cap's free ends have four
/// connection points.
fn cap_feet_ok_between(upper: &[u8], lower: &[u8]) -> bool {
    caps_in(upper, B).all(|c| lower[c] == FULL) && caps_in(lower, T).all(|c| upper[c] == FULL)
}

/// Columns of the free ends of the caps in `cells` whose ends point towards
/// `side` (`B` or `T`).
fn caps_in(cells: &[u8], side: u8) -> impl Iterator<Item = usize> + '_ {
    let n = cells.len();
    (0..n).filter(move |&c| cells[c] == side | R).flat_map(move |c| {
        let mut d = c + 1;
        while d < n && cells[d] == L | R {
            d += 1;
        }
        let closes = d < n && cells[d] == side | L;
        closes.then_some([c, d]).into_iter().flatten()
    })
}

/// All rows of `n` cells that match left to right, grouped by top mask.
fn build_rows(n: usize, c: usize, from_left: bool, cells: &mut Vec<u8>, out: &mut [Vec<Row>]) {
    if c == n {
        if !from_left {
            let top = cells.iter().enumerate().fold(0u16, |m, (i, &e)| m | ((e & T != 0) as u16) << i);
            let bottom = cells.iter().enumerate().fold(0u16, |m, (i, &e)| m | ((e & B != 0) as u16) << i);
            let count = cells.iter().filter(|&&e| e != 0).count();
            out[top as usize].push(Row { cells: cells.clone(), bottom, count });
        }
        return;
    }
    for e in [0, B | L, B | R, T | R, T | L, L | R, T | B, FULL] {
        if (e & L != 0) != from_left || (c + 1 == n && e & R != 0) {
            continue;
        }
        cells[c] = e;
        build_rows(n, c + 1, e & R != 0, cells, out);
    }
    cells[c] = 0;
}
