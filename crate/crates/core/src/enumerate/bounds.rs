//! Checking tile numbers against the bounds `5m - 8 <= t <= m^2 - 4`
//! (`m^2 - 8` for odd `m`) in terms of the mosaic number `m`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsRow {
    pub name: String,
    pub mosaic_number: usize,
    pub tile_number: usize,
    pub lower: usize,
    pub upper: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundsReport {
    pub rows: Vec<BoundsRow>,
}

impl BoundsReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("knot,mosaic_number,tile_number,lower,upper,pass\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{},{}", r.name, r.mosaic_number, r.tile_number, r.lower, r.upper, r.pass);
        }
        out
    }
}

/// Lower bound `5m - 8` and upper bound `m^2 - 4` (even) or `m^2 - 8` (odd).
/// The bounds are stated for `m >= 4`.
pub fn tile_bounds(m: usize) -> Option<(usize, usize)> {
    (m >= 4).then(|| (5 * m - 8, if m % 2 == 0 { m * m - 4 } else { m * m - 8 }))
}

/// One row per `(name, mosaic number, tile number)`; rows with a mosaic
/// number below 4 are outside the bounds and reported as failing with both
/// bounds zero.
pub fn verify_bounds<S: AsRef<str>>(results: &[(S, usize, usize)]) -> BoundsReport {
    let rows = results
        .iter()
        .map(|(name, m, t)| {
            let (lower, upper, pass) = match tile_bounds(*m) {
                Some((lo, hi)) => (lo, hi, lo <= *t && *t <= hi),
                None => (0, 0, false),
            };
            BoundsRow { name: name.as_ref().to_string(), mosaic_number: *m, tile_number: *t, lower, upper, pass }
        })
        .collect();
    BoundsReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_cases() {
        assert_eq!(tile_bounds(4), Some((12, 12)));
        assert_eq!(tile_bounds(5), Some((17, 17)));
        assert_eq!(tile_bounds(6), Some((22, 32)));
        assert_eq!(tile_bounds(7), Some((27, 41)));
        assert_eq!(tile_bounds(3), None);
        let r = verify_bounds(&[("3_1", 4, 12), ("4_1", 5, 17), ("6_3", 6, 22), ("x", 5, 16), ("y", 2, 4)]);
        assert_eq!(r.rows.iter().map(|r| r.pass).collect::<Vec<_>>(), [true, true, true, false, false]);
        assert!(!r.all_pass());
        assert!(r.to_csv().starts_with("knot,mosaic_number"));
        assert_eq!(r.to_csv().lines().count(), 6);
    }
}
