//! Following the curves of a knot mosaic and recording the link diagram.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::tiles::{EdgeSide, KnotMosaic, Mosaic, TileKind};
use crate::unionfind::UnionFind;

/// A link diagram in planar-diagram form.
///
/// Each crossing lists four edge labels counterclockwise starting from the
/// incoming under-strand. Every label occurs exactly twice. Components list
/// their labels in the direction of travel; a crossing-free component has
/// no labels. `signs` holds the oriented sign of each crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    signs: Vec<i8>,
    components: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PdError {
    #[error("malformed planar diagram text near {0:?}")]
    Syntax(String),
    #[error("edge label {0} must be positive")]
    ZeroLabel(u32),
    #[error("edge label {label} appears {count} times, expected 2")]
    LabelCount { label: u32, count: usize },
    #[error("edge label {0} is used inconsistently as incoming and outgoing")]
    Orientation(u32),
}

impl PlanarDiagram {
    /// The diagram with no curves at all.
    pub fn empty() -> Self {
        PlanarDiagram { crossings: Vec::new(), signs: Vec::new(), components: Vec::new() }
    }

    /// `k` disjoint round circles.
    pub fn circles(k: usize) -> Self {
        PlanarDiagram { crossings: Vec::new(), signs: Vec::new(), components: alloc::vec![Vec::new(); k] }
    }

    /// Builds a diagram from crossing records, recovering components and
    /// orientation. Under-passes fix the direction of travel; a component
    /// that only passes over is oriented so that labels increase where
    /// possible.
    pub fn from_pd(crossings: Vec<[u32; 4]>) -> Result<Self, PdError> {
        // label -> its two (crossing, position) endpoints
        let mut ends: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (x, rec) in crossings.iter().enumerate() {
            for (p, &label) in rec.iter().enumerate() {
                if label == 0 {
                    return Err(PdError::ZeroLabel(label));
                }
                ends.entry(label).or_default().push((x, p));
            }
        }
        if let Some((&label, e)) = ends.iter().find(|(_, e)| e.len() != 2) {
            return Err(PdError::LabelCount { label, count: e.len() });
        }

        let mut used: BTreeMap<u32, bool> = ends.keys().map(|&l| (l, false)).collect();
        let mut components = Vec::new();
        // incoming[x][p] = true when the strand arrives at crossing x through position p
        let mut incoming = alloc::vec![[false; 4]; crossings.len()];
        let labels: Vec<u32> = ends.keys().copied().collect();
        for &start in &labels {
            if used[&start] {
                continue;
            }
            let walk = |arrive_at: (usize, usize)| -> (Vec<u32>, Vec<(usize, usize)>, bool) {
                let mut seq = Vec::new();
                let mut arrivals = Vec::new();
                let mut ok = true;
                let (mut label, mut at) = (start, arrive_at);
                loop {
                    seq.push(label);
                    arrivals.push(at);
                    let (x, p) = at;
                    if p == 2 {
                        ok = false;
                    }
                    let out_pos = (p + 2) % 4;
                    if out_pos == 0 {
                        ok = false;
                    }
                    let next = crossings[x][out_pos];
                    let e = &ends[&next];
                    let next_at = if e[0] == (x, out_pos) { e[1] } else { e[0] };
                    if next == start && next_at == arrive_at {
                        break;
                    }
                    if seq.len() > labels.len() {
                        ok = false;
                        break;
                    }
                    label = next;
                    at = next_at;
                }
                (seq, arrivals, ok)
            };
            let e = &ends[&start];
            let forward = walk(e[0]);
            let backward = walk(e[1]);
            let has_under = forward.1.iter().any(|&(_, p)| p % 2 == 0);
            let (seq, arrivals) = match (forward.2, backward.2) {
                (true, false) => (forward.0, forward.1),
                (false, true) => (backward.0, backward.1),
                (true, true) if !has_under => {
                    let rises = |s: &[u32]| s.len() > 1 && s[1] == s[0] + 1;
                    if rises(&backward.0) && !rises(&forward.0) {
                        (backward.0, backward.1)
                    } else {
                        (forward.0, forward.1)
                    }
                }
                _ => return Err(PdError::Orientation(start)),
            };
            for (&l, &(x, p)) in seq.iter().zip(&arrivals) {
                *used.get_mut(&l).unwrap() = true;
                incoming[x][p] = true;
            }
            components.push(seq);
        }
        // sort components by their least label, each rotated to start there
        for c in &mut components {
            let (i, _) = c.iter().enumerate().min_by_key(|(_, &l)| l).unwrap();
            c.rotate_left(i);
        }
        components.sort();
        let signs = incoming.iter().map(|inc| if inc[3] { 1 } else { -1 }).collect();
        Ok(PlanarDiagram { crossings, signs, components })
    }

    /// Parses `X(a,b,c,d),X(...)` text.
    pub fn parse(text: &str) -> Result<Self, PdError> {
        let mut crossings = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix("X(")
                .or_else(|| rest.strip_prefix("X["))
                .ok_or_else(|| PdError::Syntax(rest.chars().take(12).collect()))?;
            let close = body.find([')', ']']).ok_or_else(|| PdError::Syntax(rest.chars().take(12).collect()))?;
            let nums: Vec<u32> = body[..close]
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| PdError::Syntax(body[..close].into()))?;
            let rec: [u32; 4] = nums.try_into().map_err(|_| PdError::Syntax(body[..close].into()))?;
            crossings.push(rec);
            rest = body[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        PlanarDiagram::from_pd(crossings)
    }

    /// Adds `k` crossing-free components.
    pub fn with_circles(mut self, k: usize) -> Self {
        self.components.extend((0..k).map(|_| Vec::new()));
        self
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Components meeting no crossing.
    pub fn free_loops(&self) -> usize {
        self.components.iter().filter(|c| c.is_empty()).count()
    }

    /// Oriented sign of each crossing.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Sorted distinct labels.
    pub fn labels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        l.sort_unstable();
        l.dedup();
        l
    }

    /// Mirror image: every crossing changes which strand is on top.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        let signs = self.signs.iter().map(|s| -s).collect();
        PlanarDiagram { crossings, signs, components: self.components.clone() }
    }

    /// PD text, `X(a,b,c,d)` terms joined by commas.
    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "X({a},{b},{c},{d})");
        }
        out
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Diagram of a traced mosaic plus the cells each component passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceResult {
    pub diagram: PlanarDiagram,
    pub component_count: usize,
    pub crossing_count: usize,
    pub component_cells: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Copy)]
struct Pass {
    cell: usize,
    entry: EdgeSide,
    over: bool,
}

/// Traces every closed curve of a knot mosaic.
///
/// Components are started at the first unvisited strand in row-major
/// order and travelled from the strand's first listed edge; labels are
/// numbered consecutively along that direction.
pub fn trace(m: &KnotMosaic) -> TraceResult {
    trace_mosaic(m.mosaic())
}

pub(crate) fn trace_mosaic(m: &Mosaic) -> TraceResult {
    let n = m.size();
    let cells = m.cells();
    // visited[cell] bit i = strand i of the tile done
    let mut visited = alloc::vec![0u8; n * n];
    let mut components: Vec<Vec<Pass>> = Vec::new();
    let mut component_cells = Vec::new();

    for start in 0..n * n {
        let tile = cells[start];
        for (si, &(from, _)) in tile.strands().iter().enumerate() {
            if visited[start] & (1 << si) != 0 {
                continue;
            }
            let mut passes = Vec::new();
            let mut visits = Vec::new();
            let (mut cell, mut entry) = (start, from);
            loop {
                let tile = cells[cell];
                let idx = tile.strands().iter().position(|&(a, b)| a == entry || b == entry).expect("suitably connected");
                if visited[cell] & (1 << idx) != 0 {
                    break;
                }
                visited[cell] |= 1 << idx;
                visits.push((cell / n, cell % n));
                let exit = tile.exit(entry).unwrap();
                if tile.is_crossing() {
                    passes.push(Pass { cell, entry, over: idx == 0 });
                }
                let (dr, dc) = exit.step();
                let r = (cell / n) as isize + dr;
                let c = (cell % n) as isize + dc;
                debug_assert!(r >= 0 && c >= 0 && (r as usize) < n && (c as usize) < n);
                cell = r as usize * n + c as usize;
                entry = exit.opposite();
            }
            components.push(passes);
            component_cells.push(visits);
        }
    }

    // cell -> crossing record index
    let mut crossing_index = alloc::vec![usize::MAX; n * n];
    let mut records: Vec<[u32; 4]> = Vec::new();
    let mut incoming_over: Vec<EdgeSide> = Vec::new();
    let mut label_components = Vec::with_capacity(components.len());
    let mut next_label = 1u32;
    // (in label, out label, entry side, over?) per pass
    let mut side_labels: Vec<[(u32, EdgeSide); 4]> = Vec::new();
    let mut filled: Vec<u8> = Vec::new();

    for passes in &components {
        let base = next_label;
        let k = passes.len() as u32;
        next_label += k;
        label_components.push((base..base + k).collect::<Vec<u32>>());
        for (j, pass) in passes.iter().enumerate() {
            let j = j as u32;
            let in_label = base + j;
            let out_label = base + (j + 1) % k;
            let x = if crossing_index[pass.cell] == usize::MAX {
                crossing_index[pass.cell] = records.len();
                records.push([0; 4]);
                incoming_over.push(EdgeSide::Top);
                side_labels.push([(0, EdgeSide::Top); 4]);
                filled.push(0);
                records.len() - 1
            } else {
                crossing_index[pass.cell]
            };
            let exit = pass.entry.opposite();
            let slot = if pass.over { 2 } else { 0 };
            side_labels[x][slot] = (in_label, pass.entry);
            side_labels[x][slot + 1] = (out_label, exit);
            if pass.over {
                incoming_over[x] = pass.entry;
            }
            filled[x] += 1;
        }
    }

    let mut signs = Vec::with_capacity(records.len());
    for x in 0..records.len() {
        debug_assert_eq!(filled[x], 2);
        let under_in = side_labels[x][0].1;
        let mut side = under_in;
        for p in 0..4 {
            let label = side_labels[x].iter().find(|(_, s)| *s == side).unwrap().0;
            records[x][p] = label;
            side = side.next_ccw();
        }
        // over strand leaving at position 1 is a positive crossing
        let over_out = incoming_over[x].opposite();
        signs.push(if over_out == under_in.next_ccw() { 1 } else { -1 });
    }

    let crossing_count = records.len();
    let component_count = label_components.len();
    TraceResult {
        diagram: PlanarDiagram { crossings: records, signs, components: label_components },
        component_count,
        crossing_count,
        component_cells,
    }
}

/// Components meeting no crossing, as indices into the trace's components.
pub fn split_trivial_components(t: &TraceResult) -> Vec<usize> {
    t.diagram.components.iter().enumerate().filter(|(_, c)| c.is_empty()).map(|(i, _)| i).collect()
}

/// No crossing is nugatory. A crossing is nugatory exactly when it is a cut
/// vertex of the projection graph (edges subdivided so kinks count).
pub fn is_reduced(d: &PlanarDiagram) -> bool {
    nugatory_crossings(d).is_empty()
}

/// Indices of the nugatory crossings.
pub fn nugatory_crossings(d: &PlanarDiagram) -> Vec<usize> {
    let c = d.crossings.len();
    if c == 0 {
        return Vec::new();
    }
    let labels = d.labels();
    let label_vertex = |l: u32| c + labels.binary_search(&l).unwrap();
    let vertices = c + labels.len();
    let mut edges = Vec::with_capacity(4 * c);
    for (x, rec) in d.crossings.iter().enumerate() {
        for &l in rec {
            edges.push((x, label_vertex(l)));
        }
    }
    let components_without = |skip: Option<usize>| {
        let mut uf = UnionFind::new(vertices);
        for &(a, b) in &edges {
            if Some(a) != skip {
                uf.union(a, b);
            }
        }
        uf.sets() - usize::from(skip.is_some())
    };
    let base = components_without(None);
    (0..c).filter(|&x| components_without(Some(x)) > base).collect()
}

/// Sum of crossing signs.
pub fn writhe(d: &PlanarDiagram) -> i32 {
    d.signs.iter().map(|&s| s as i32).sum()
}

/// Number of closed curves on a knot mosaic, without building a diagram.
pub fn component_count(m: &Mosaic) -> usize {
    let n = m.size();
    let cells = m.cells();
    let mut visited = alloc::vec![0u8; n * n];
    let mut count = 0;
    for start in 0..n * n {
        for (si, &(from, _)) in cells[start].strands().iter().enumerate() {
            if visited[start] & (1 << si) != 0 {
                continue;
            }
            count += 1;
            let (mut cell, mut entry) = (start, from);
            loop {
                let tile: TileKind = cells[cell];
                let idx = if tile.strands().len() == 1 {
                    0
                } else {
                    tile.strands().iter().position(|&(a, b)| a == entry || b == entry).unwrap()
                };
                if visited[cell] & (1 << idx) != 0 {
                    break;
                }
                visited[cell] |= 1 << idx;
                let exit = tile.exit(entry).unwrap();
                cell = match exit {
                    EdgeSide::Top => cell - n,
                    EdgeSide::Bottom => cell + n,
                    EdgeSide::Left => cell - 1,
                    EdgeSide::Right => cell + 1,
                };
                entry = exit.opposite();
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::{Mosaic, Symmetry};

    fn knot(text: &str) -> KnotMosaic {
        KnotMosaic::new(Mosaic::parse(text).unwrap()).unwrap()
    }

    pub(crate) fn trefoil_pd() -> PlanarDiagram {
        PlanarDiagram::parse("X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)").unwrap()
    }

    // geometric sign: place the incoming under-strand at the bottom, so the
    // positions sit at angles 270, 0, 90 and 180 degrees
    fn sign_oracle(d: &PlanarDiagram) -> Vec<i8> {
        let mut next = BTreeMap::new();
        for comp in d.components() {
            for i in 0..comp.len() {
                next.insert(comp[i], comp[(i + 1) % comp.len()]);
            }
        }
        let at = [(0i32, -1i32), (1, 0), (0, 1), (-1, 0)];
        d.crossings()
            .iter()
            .map(|&[_, b, _, d]| {
                let under = (0, 1);
                let (from, to) = if next[&d] == b { (3, 1) } else { (1, 3) };
                let over = (at[to].0 - at[from].0, at[to].1 - at[from].1);
                let cross = over.0 * under.1 - over.1 * under.0;
                cross.signum() as i8
            })
            .collect()
    }

    #[test]
    fn unknot_trace() {
        let t = trace(&knot("21\n34\n"));
        assert_eq!(t.component_count, 1);
        assert_eq!(t.crossing_count, 0);
        assert_eq!(split_trivial_components(&t), [0]);
        assert!(is_reduced(&t.diagram));
        assert_eq!(writhe(&t.diagram), 0);
        assert_eq!(t.component_cells[0].len(), 4);
    }

    #[test]
    fn blank_board_has_no_components() {
        let t = trace(&knot("000\n000\n000\n"));
        assert_eq!(t.component_count, 0);
        assert_eq!(t.diagram, PlanarDiagram::empty());
    }

    #[test]
    fn two_circle_unlink() {
        // two circles sharing a double-arc tile in the centre
        let m = knot("210\n371\n034\n");
        let t = trace(&m);
        assert_eq!(t.component_count, 2);
        assert_eq!(split_trivial_components(&t), [0, 1]);
        assert_eq!(component_count(&m), 2);
    }

    #[test]
    fn trefoil_pd_round_trip() {
        let d = trefoil_pd();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.signs(), [1, 1, 1]);
        assert_eq!(writhe(&d), 3);
        assert_eq!(writhe(&d.mirror()), -3);
        assert!(is_reduced(&d));
        assert_eq!(PlanarDiagram::parse(&d.to_pd_string()).unwrap(), d);
        assert_eq!(d.signs(), sign_oracle(&d).as_slice());
    }

    #[test]
    fn pd_errors() {
        assert!(matches!(PlanarDiagram::parse("X(1,2,3,4)"), Err(PdError::LabelCount { .. })));
        assert!(matches!(PlanarDiagram::parse("X(1,2,1"), Err(PdError::Syntax(_))));
        assert!(matches!(PlanarDiagram::parse("X(0,0,1,1)"), Err(PdError::ZeroLabel(0))));
        assert_eq!(PlanarDiagram::parse("").unwrap(), PlanarDiagram::empty());
    }

    #[test]
    fn kink_is_nugatory() {
        // one-crossing unknot: X(1,1,2,2) style kink
        let d = PlanarDiagram::parse("X(2,1,1,2)").unwrap();
        assert!(!is_reduced(&d));
        assert_eq!(nugatory_crossings(&d), [0]);
    }

    #[test]
    fn crossing_block_traces_to_two_components() {
        let m = knot("0210\n2A91\n3A94\n0340\n");
        let t = trace(&m);
        assert_eq!(t.component_count, 2);
        assert_eq!(t.crossing_count, 4);
        assert_eq!(component_count(m.mosaic()), 2);
        for s in Symmetry::ALL {
            let image = trace(&m.transform(s));
            assert_eq!(image.component_count, 2);
            assert_eq!(is_reduced(&image.diagram), is_reduced(&t.diagram));
        }
    }

    #[test]
    fn trace_labels_appear_twice() {
        let m = knot("0210\n2A91\n3A94\n0340\n");
        let d = trace(&m).diagram;
        let rebuilt = PlanarDiagram::from_pd(d.crossings().to_vec()).unwrap();
        assert_eq!(rebuilt.component_count(), d.component_count());
        assert_eq!(writhe(&rebuilt), writhe(&d));
        assert_eq!(d.signs(), sign_oracle(&d).as_slice());
    }
}
