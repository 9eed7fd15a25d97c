//! Exhaustive generation of knot mosaics, counting, layout filling and
//! tile-number searches.
//!
//! Generation assigns tiles in row-major order. A tile must carry a top
//! connection point exactly when the tile above has a bottom one, and a
//! left point exactly when its left neighbour has a right one; the last row
//! and column may not point off the board. Every completed assignment is
//! therefore suitably connected. A tile budget prunes branches using the
//! cells that are already forced to be non-blank.

mod bounds;
mod census;
mod layout;
mod profiles;
mod search;

use alloc::vec::Vec;

pub use bounds::{tile_bounds, verify_bounds, BoundsReport, BoundsRow};
pub use census::{census, CensusOverflow};
pub use layout::{KindSet, Layout, LayoutError, LayoutSlot};
pub use profiles::{layout_profiles, shadow_layouts, ProfileReport, Shadow, CONJECTURED_SEVEN};
pub use search::{min_tile_number, min_tile_number_in_layouts, minimal_mosaics, KnotTarget, MinimalSet, SearchError, EXHAUSTIVE_MAX_SIZE};

use crate::tiles::{EdgeSide, KnotMosaic, Mosaic, TileKind, MAX_SEARCH_SIZE};
use crate::trace::{is_reduced, split_trivial_components, trace_mosaic};

/// Filters applied by [`generate`] and [`fill_layout`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchConstraints {
    pub size: usize,
    /// Upper bound on the tile number; prunes the search.
    pub max_tiles: Option<usize>,
    /// Fewest crossing tiles.
    pub min_crossings: usize,
    pub single_component: bool,
    /// Reject mosaics with a component that meets no crossing.
    pub forbid_split_trivial: bool,
    /// Reject diagrams with a nugatory crossing.
    pub require_reduced: bool,
    /// Yield only the least member of each symmetry class.
    pub canonical_dedup: bool,
}

impl SearchConstraints {
    /// No filters at all on an `size x size` board.
    pub fn new(size: usize) -> Self {
        SearchConstraints {
            size,
            max_tiles: None,
            min_crossings: 0,
            single_component: false,
            forbid_split_trivial: false,
            require_reduced: false,
            canonical_dedup: false,
        }
    }

    /// Single-component, reduced, no split trivial components.
    pub fn knots(size: usize) -> Self {
        SearchConstraints { single_component: true, forbid_split_trivial: true, require_reduced: true, ..Self::new(size) }
    }

    pub fn max_tiles(self, t: usize) -> Self {
        SearchConstraints { max_tiles: Some(t), ..self }
    }

    pub fn min_crossings(self, c: usize) -> Self {
        SearchConstraints { min_crossings: c, ..self }
    }

    pub fn canonical(self) -> Self {
        SearchConstraints { canonical_dedup: true, ..self }
    }

    pub fn validate(&self) -> Result<(), LayoutError> {
        if self.size == 0 || self.size > MAX_SEARCH_SIZE {
            return Err(LayoutError::Size(self.size));
        }
        Ok(())
    }

    fn needs_trace(&self) -> bool {
        self.forbid_split_trivial || self.require_reduced
    }

    /// The leaf filters, in order of cost.
    pub fn accepts(&self, m: &Mosaic) -> bool {
        if self.max_tiles.is_some_and(|t| m.tile_number() > t) || m.crossing_count() < self.min_crossings {
            return false;
        }
        if self.single_component && crate::trace::component_count(m) != 1 {
            return false;
        }
        if self.needs_trace() {
            let t = trace_mosaic(m);
            if self.forbid_split_trivial && !split_trivial_components(&t).is_empty() {
                return false;
            }
            if self.require_reduced && !is_reduced(&t.diagram) {
                return false;
            }
        }
        !self.canonical_dedup || m.is_canonical()
    }
}

/// All knot mosaics meeting `c`, in row-major assignment order.
pub fn generate(c: SearchConstraints) -> Fill {
    let layout = Layout::free(c.size.clamp(1, MAX_SEARCH_SIZE)).expect("size in range");
    Fill::new(&layout, c)
}

/// All fillings of `layout` meeting `c`. The board size of `c` is ignored.
pub fn fill_layout(layout: &Layout, c: SearchConstraints) -> Fill {
    Fill::new(layout, SearchConstraints { size: layout.size(), ..c })
}

const T_BIT: u8 = EdgeSide::Top.bit();
const R_BIT: u8 = EdgeSide::Right.bit();
const B_BIT: u8 = EdgeSide::Bottom.bit();
const L_BIT: u8 = EdgeSide::Left.bit();

/// Depth-first filler over a layout. Iterating yields knot mosaics;
/// [`Fill::count`] and [`Fill::for_each_mosaic`] avoid the per-item
/// allocation.
#[derive(Clone, Debug)]
pub struct Fill {
    n: usize,
    constraints: SearchConstraints,
    // candidates[cell * 4 + (top as usize) * 2 + left as usize]
    candidates: Vec<Vec<TileKind>>,
    cells: Vec<TileKind>,
    choice: Vec<u8>,
    pos: usize,
    floor: usize,
    tiles: usize,
    budget: usize,
    started: bool,
    done: bool,
    scratch: Mosaic,
}

impl Fill {
    fn new(layout: &Layout, constraints: SearchConstraints) -> Self {
        let n = layout.size();
        let mut candidates = Vec::with_capacity(n * n * 4);
        for cell in 0..n * n {
            let (r, c) = (cell / n, cell % n);
            let slot = layout.slots()[cell];
            for ctx in 0..4u8 {
                let (top, left) = (ctx & 2 != 0, ctx & 1 != 0);
                let list: Vec<TileKind> = slot
                    .allowed()
                    .iter()
                    .filter(|k| {
                        let e = k.connection_points().bits();
                        (e & T_BIT != 0) == top
                            && (e & L_BIT != 0) == left
                            && (c + 1 < n || e & R_BIT == 0)
                            && (r + 1 < n || e & B_BIT == 0)
                    })
                    .collect();
                candidates.push(list);
            }
        }
        Fill {
            n,
            constraints,
            candidates,
            cells: alloc::vec![TileKind::Blank; n * n],
            choice: alloc::vec![0; n * n],
            pos: 0,
            floor: 0,
            tiles: 0,
            budget: constraints.max_tiles.unwrap_or(usize::MAX),
            started: false,
            done: false,
            scratch: Mosaic::blank(n),
        }
    }

    /// Restricts the search to completions of `prefix` (the first cells in
    /// row-major order). Returns `None` if the prefix itself is inconsistent.
    pub fn with_prefix(mut self, prefix: &[TileKind]) -> Option<Self> {
        assert!(prefix.len() <= self.n * self.n, "prefix longer than the board");
        for (p, &k) in prefix.iter().enumerate() {
            let list = &self.candidates[self.context(p)];
            let idx = list.iter().position(|&x| x == k)?;
            if !self.fits(p, k) {
                return None;
            }
            self.place(p, k);
            self.choice[p] = idx as u8;
        }
        self.pos = prefix.len();
        self.floor = prefix.len();
        Some(self)
    }

    /// All consistent prefixes of length `depth`, in search order. Filling
    /// each with [`Fill::with_prefix`] partitions the full search.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<TileKind>> {
        let depth = depth.min(self.n * self.n);
        let mut out = Vec::new();
        let mut probe = self.clone();
        probe.collect_prefixes(0, depth, &mut out);
        out
    }

    fn collect_prefixes(&mut self, p: usize, depth: usize, out: &mut Vec<Vec<TileKind>>) {
        if p == depth {
            out.push(self.cells[..depth].to_vec());
            return;
        }
        let ctx = self.context(p);
        for i in 0..self.candidates[ctx].len() {
            let k = self.candidates[ctx][i];
            if self.fits(p, k) {
                self.place(p, k);
                self.collect_prefixes(p + 1, depth, out);
                self.unplace(p);
            }
        }
    }

    #[inline]
    fn context(&self, p: usize) -> usize {
        let n = self.n;
        let top = p >= n && self.cells[p - n].connection_points().bits() & B_BIT != 0;
        let left = p % n != 0 && self.cells[p - 1].connection_points().bits() & R_BIT != 0;
        p * 4 + (top as usize) * 2 + left as usize
    }

    /// Budget check for placing `k` at `p`: placed tiles plus the cells of
    /// the next frontier that are already forced non-blank.
    #[inline]
    fn fits(&self, p: usize, k: TileKind) -> bool {
        if self.budget == usize::MAX {
            return true;
        }
        let n = self.n;
        let used = self.tiles + !k.is_blank() as usize;
        if used > self.budget {
            return false;
        }
        // frontier after placing p: cells p+1 ..= p+n, forced by the cell above
        // (p+1-n ..= p) or, for p+1, by k's right edge
        let mut forced = 0;
        for q in p + 1..(p + 1 + n).min(n * n) {
            let from_above = q >= n && {
                let above = if q - n == p { k } else { self.cells[q - n] };
                above.connection_points().bits() & B_BIT != 0
            };
            let from_left = q == p + 1 && q % n != 0 && k.connection_points().bits() & R_BIT != 0;
            forced += (from_above || from_left) as usize;
        }
        used + forced <= self.budget
    }

    #[inline]
    fn place(&mut self, p: usize, k: TileKind) {
        self.cells[p] = k;
        self.tiles += !k.is_blank() as usize;
    }

    #[inline]
    fn unplace(&mut self, p: usize) {
        self.tiles -= !self.cells[p].is_blank() as usize;
        self.cells[p] = TileKind::Blank;
    }

    /// Advances to the next complete assignment (before filtering).
    fn next_leaf(&mut self) -> bool {
        let total = self.n * self.n;
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.pos < total {
                self.choice[self.pos] = 0;
            }
        } else if !self.backtrack() {
            return false;
        }
        loop {
            if self.pos == total {
                return true;
            }
            let p = self.pos;
            let ctx = self.context(p);
            let list = &self.candidates[ctx];
            let mut i = self.choice[p] as usize;
            while i < list.len() && !self.fits(p, list[i]) {
                i += 1;
            }
            if i < list.len() {
                let k = list[i];
                self.choice[p] = i as u8;
                self.place(p, k);
                self.pos += 1;
                if self.pos < total {
                    self.choice[self.pos] = 0;
                }
            } else if !self.backtrack() {
                return false;
            }
        }
    }

    /// Undoes the last placement and moves to its next choice.
    fn backtrack(&mut self) -> bool {
        if self.pos == self.floor {
            self.done = true;
            return false;
        }
        self.pos -= 1;
        self.unplace(self.pos);
        self.choice[self.pos] += 1;
        true
    }

    /// Calls `f` on every accepted mosaic without allocating per item.
    pub fn for_each_mosaic(mut self, mut f: impl FnMut(&Mosaic)) {
        while self.next_leaf() {
            self.scratch.cells_mut().copy_from_slice(&self.cells);
            if self.constraints.accepts(&self.scratch) {
                f(&self.scratch);
            }
        }
    }

    /// Number of accepted mosaics.
    pub fn count(self) -> u64 {
        let mut k = 0u64;
        self.for_each_mosaic(|_| k += 1);
        k
    }
}

impl Iterator for Fill {
    type Item = KnotMosaic;

    fn next(&mut self) -> Option<KnotMosaic> {
        while self.next_leaf() {
            self.scratch.cells_mut().copy_from_slice(&self.cells);
            if self.constraints.accepts(&self.scratch) {
                return Some(KnotMosaic::new_unchecked(self.scratch.clone()));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn tiny_boards() {
        assert_eq!(generate(SearchConstraints::new(1)).count(), 1);
        let two: Vec<KnotMosaic> = generate(SearchConstraints::new(2)).collect();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].tile_number(), 0);
        assert_eq!(two[1].to_line(), "21/34");
    }

    #[test]
    fn blank_only_layout_has_one_fill() {
        let l = Layout::new(3, alloc::vec![LayoutSlot::fixed(TileKind::Blank); 9], "").unwrap();
        let fills: Vec<_> = fill_layout(&l, SearchConstraints::new(3)).collect();
        assert_eq!(fills.len(), 1);
        assert_eq!(fills[0].tile_number(), 0);
    }

    #[test]
    fn prefixes_partition_the_search() {
        let c = SearchConstraints::new(4).max_tiles(10);
        let whole: Vec<Mosaic> = generate(c).map(KnotMosaic::into_mosaic).collect();
        let root = generate(c);
        let mut parts = Vec::new();
        for p in root.prefixes(5) {
            parts.extend(generate(c).with_prefix(&p).unwrap().map(KnotMosaic::into_mosaic));
        }
        assert_eq!(parts, whole);
    }

    #[test]
    fn budget_prune_is_exact() {
        for n in 3..=4 {
            let unpruned: BTreeSet<Mosaic> = generate(SearchConstraints::new(n))
                .map(KnotMosaic::into_mosaic)
                .filter(|m| m.tile_number() <= 9)
                .collect();
            let pruned: BTreeSet<Mosaic> =
                generate(SearchConstraints::new(n).max_tiles(9)).map(KnotMosaic::into_mosaic).collect();
            assert_eq!(pruned, unpruned);
        }
    }

    #[test]
    fn dedup_covers_every_orbit() {
        let all: BTreeSet<Mosaic> = generate(SearchConstraints::new(4)).map(KnotMosaic::into_mosaic).collect();
        let reps: Vec<Mosaic> = generate(SearchConstraints::new(4).canonical()).map(KnotMosaic::into_mosaic).collect();
        let mut orbits = BTreeSet::new();
        for r in &reps {
            for s in crate::tiles::Symmetry::ALL {
                orbits.insert(r.transform(s));
            }
        }
        assert_eq!(orbits, all);
        let classes: BTreeSet<Mosaic> = reps.iter().map(Mosaic::canonical_form).collect();
        assert_eq!(classes.len(), reps.len());
    }
}
