//! Counting knot mosaics with a transfer matrix over row boundaries.
//!
//! The state between two rows is the set of columns whose boundary carries
//! a connection point. A row is a sequence of tiles whose top edges match
//! the incoming state and whose left/right edges match each other; its
//! bottom edges give the outgoing state.

use alloc::vec::Vec;

use crate::tiles::{EdgeSide, TileKind, MAX_SEARCH_SIZE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("mosaic count for size {size} does not fit in 128 bits")]
pub struct CensusOverflow {
    pub size: usize,
}

/// Number of suitably connected `n x n` mosaics.
///
/// # Panics
/// If `n` is zero or larger than [`MAX_SEARCH_SIZE`].
pub fn census(n: usize) -> Result<u128, CensusOverflow> {
    assert!((1..=MAX_SEARCH_SIZE).contains(&n), "census size must be in 1..={MAX_SEARCH_SIZE}");
    let states = 1usize << n;
    let matrix = row_transitions(n);
    let mut v: Vec<u128> = alloc::vec![0; states];
    v[0] = 1;
    for _ in 0..n {
        let mut next: Vec<u128> = alloc::vec![0; states];
        for (s_in, &count) in v.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for (s_out, &ways) in matrix[s_in].iter().enumerate() {
                if ways == 0 {
                    continue;
                }
                let add = count.checked_mul(ways as u128).ok_or(CensusOverflow { size: n })?;
                next[s_out] = next[s_out].checked_add(add).ok_or(CensusOverflow { size: n })?;
            }
        }
        v = next;
    }
    Ok(v[0])
}

/// `m[in][out]`: number of rows joining boundary state `in` above to `out`
/// below.
fn row_transitions(n: usize) -> Vec<Vec<u64>> {
    let states = 1usize << n;
    let mut m = alloc::vec![alloc::vec![0u64; states]; states];
    for (s_in, row) in m.iter_mut().enumerate() {
        extend_row(n, s_in, 0, false, 0, row);
    }
    m
}

fn extend_row(n: usize, s_in: usize, col: usize, from_left: bool, s_out: usize, row: &mut [u64]) {
    if col == n {
        if !from_left {
            row[s_out] += 1;
        }
        return;
    }
    let top = s_in >> col & 1 == 1;
    for k in TileKind::ALL {
        let e = k.connection_points();
        if e.contains(EdgeSide::Top) != top || e.contains(EdgeSide::Left) != from_left {
            continue;
        }
        let down = e.contains(EdgeSide::Bottom) as usize;
        extend_row(n, s_in, col + 1, e.contains(EdgeSide::Right), s_out | down << col, row);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(census(1), Ok(1));
        assert_eq!(census(2), Ok(2));
    }

    #[test]
    fn large_boards_fit() {
        let c8 = census(8).unwrap();
        assert!(c8 > census(7).unwrap());
    }
}
