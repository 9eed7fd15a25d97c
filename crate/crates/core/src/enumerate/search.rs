//! Fewest non-blank tiles needed to draw a given knot or link on a board of
//! fixed size.

use alloc::string::String;
use alloc::vec::Vec;

use super::{fill_layout, generate, Layout, SearchConstraints};
use crate::invariants::{bracket, jones, KnotTable};
use crate::poly::LaurentPoly;
use crate::tiles::{Mosaic, MAX_SEARCH_SIZE};
use crate::trace::{component_count, trace_mosaic};

/// Largest board searched exhaustively.
pub const EXHAUSTIVE_MAX_SIZE: usize = 5;

/// What a search looks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotTarget {
    Unknot,
    /// `k` unlinked, unknotted components.
    Unlink(usize),
    /// A knot table entry or one of the built-in links, either handedness.
    Named(String),
    /// A knot with this writhe-normalized bracket, either handedness.
    Jones(LaurentPoly),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("no knot or link named {0} in the table")]
    UnknownKnot(String),
    #[error("board size {0} is too large for exhaustive search")]
    TooLarge(usize),
}

/// Tests whether a traced mosaic depicts the target.
#[derive(Clone, Debug)]
pub(crate) enum Matcher {
    Knot { jones: LaurentPoly, mirror: LaurentPoly, min_crossings: usize },
    Link { components: usize, bracket: LaurentPoly, mirror: LaurentPoly, min_crossings: usize },
}

impl Matcher {
    pub(crate) fn new(target: &KnotTarget, table: &KnotTable) -> Result<Self, SearchError> {
        let knot = |j: &LaurentPoly, c: usize| Matcher::Knot { jones: j.clone(), mirror: j.mirror(), min_crossings: c };
        Ok(match target {
            KnotTarget::Unknot => knot(&LaurentPoly::one(), 0),
            KnotTarget::Jones(j) => knot(j, 0),
            KnotTarget::Unlink(k) => {
                let b = LaurentPoly::delta().pow(k.saturating_sub(1) as u32).normalize_unit();
                Matcher::Link { components: *k, mirror: b.clone(), bracket: b, min_crossings: 0 }
            }
            KnotTarget::Named(name) => {
                if let Some(r) = table.get(name) {
                    knot(&r.jones, r.crossing_number)
                } else if let Some(l) = table.link(name) {
                    Matcher::Link {
                        components: l.components,
                        bracket: l.bracket.clone(),
                        mirror: l.bracket.mirror().normalize_unit(),
                        min_crossings: l.crossing_number,
                    }
                } else {
                    return Err(SearchError::UnknownKnot(name.clone()));
                }
            }
        })
    }

    pub(crate) fn matches(&self, m: &Mosaic) -> bool {
        match self {
            Matcher::Knot { jones: j, mirror, min_crossings } => {
                if m.crossing_count() < *min_crossings || component_count(m) != 1 {
                    return false;
                }
                let found = jones(&trace_mosaic(m).diagram).expect("board crossings stay under the cap");
                found == *j || found == *mirror
            }
            Matcher::Link { components, bracket: b, mirror, min_crossings } => {
                if m.crossing_count() < *min_crossings || component_count(m) != *components {
                    return false;
                }
                let found = bracket(&trace_mosaic(m).diagram).expect("board crossings stay under the cap").normalize_unit();
                found == *b || found == *mirror
            }
        }
    }
}

/// Least tile number of the target on an `n x n` board and every mosaic
/// reaching it, as sorted canonical forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSet {
    pub tile_number: Option<usize>,
    pub mosaics: Vec<Mosaic>,
}

impl MinimalSet {
    /// The canonical-least minimal mosaic.
    pub fn witness(&self) -> Option<&Mosaic> {
        self.mosaics.first()
    }
}

/// Least tile number of `target` over all `n x n` mosaics, or `None` when
/// it does not fit. Exhaustive, so limited to small boards.
pub fn min_tile_number(target: &KnotTarget, n: usize, table: &KnotTable) -> Result<Option<usize>, SearchError> {
    Ok(minimal_mosaics(target, n, table, false)?.tile_number)
}

/// Like [`min_tile_number`], also collecting the minimal mosaics when
/// `collect` is set.
pub fn minimal_mosaics(target: &KnotTarget, n: usize, table: &KnotTable, collect: bool) -> Result<MinimalSet, SearchError> {
    if n > EXHAUSTIVE_MAX_SIZE {
        return Err(SearchError::TooLarge(n));
    }
    let matcher = Matcher::new(target, table)?;
    for t in 0..=n * n {
        let mut found = Vec::new();
        let mut any = false;
        let c = SearchConstraints::new(n).max_tiles(t);
        generate(c).for_each_mosaic(|m| {
            if m.tile_number() == t && (collect || !any) && matcher.matches(m) {
                any = true;
                if collect {
                    found.push(m.canonical_form());
                }
            }
        });
        if any {
            found.sort();
            found.dedup();
            return Ok(MinimalSet { tile_number: Some(t), mosaics: found });
        }
    }
    Ok(MinimalSet { tile_number: None, mosaics: Vec::new() })
}

/// Least tile number of `target` among fillings of the given layouts.
/// Layouts are tried in order of their forced tile count, and one whose
/// forced count already exceeds the best found is skipped.
pub fn min_tile_number_in_layouts(
    target: &KnotTarget,
    layouts: &[Layout],
    table: &KnotTable,
) -> Result<MinimalSet, SearchError> {
    let matcher = Matcher::new(target, table)?;
    let mut best: Option<usize> = None;
    let mut found: Vec<Mosaic> = Vec::new();
    let mut order: Vec<&Layout> = layouts.iter().collect();
    order.sort_by_key(|l| l.tile_number());
    for l in order {
        if l.size() > MAX_SEARCH_SIZE {
            return Err(SearchError::TooLarge(l.size()));
        }
        if best.is_some_and(|b| l.tile_number() > b) {
            continue;
        }
        let mut c = SearchConstraints::new(l.size());
        c.max_tiles = best;
        fill_layout(l, c).for_each_mosaic(|m| {
            let t = m.tile_number();
            if best.is_some_and(|b| t > b) || !matcher.matches(m) {
                return;
            }
            if best != Some(t) {
                best = Some(t);
                found.clear();
            }
            found.push(m.canonical_form());
        });
    }
    found.sort();
    found.dedup();
    Ok(MinimalSet { tile_number: best, mosaics: found })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_and_unlink() {
        let table = KnotTable::parse("").unwrap();
        assert_eq!(min_tile_number(&KnotTarget::Unknot, 1, &table), Ok(None));
        assert_eq!(min_tile_number(&KnotTarget::Unknot, 2, &table), Ok(Some(4)));
        assert_eq!(min_tile_number(&KnotTarget::Unknot, 3, &table), Ok(Some(4)));
        assert_eq!(min_tile_number(&KnotTarget::Unlink(2), 2, &table), Ok(None));
        let set = minimal_mosaics(&KnotTarget::Unlink(2), 3, &table, true).unwrap();
        assert_eq!(set.tile_number, Some(7));
        assert!(set.mosaics.iter().all(|m| m.is_canonical()));
    }

    #[test]
    fn unknown_name() {
        let table = KnotTable::parse("").unwrap();
        assert_eq!(
            min_tile_number(&KnotTarget::Named("3_1".into()), 4, &table),
            Err(SearchError::UnknownKnot("3_1".into()))
        );
        assert_eq!(min_tile_number(&KnotTarget::Unknot, 6, &table), Err(SearchError::TooLarge(6)));
    }
}
