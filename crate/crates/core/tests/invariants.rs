use std::collections::BTreeMap;

use knotile_core::invariants::{bracket, jones};
use knotile_core::trace::PlanarDiagram;
use knotile_core::{KnotTable, LaurentPoly};
use proptest::prelude::*;

/// Jones polynomials in `t` as listed by KnotInfo for the bundled diagrams.
fn knotinfo_jones() -> BTreeMap<String, LaurentPoly> {
    include_str!("data/knotinfo_jones.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (name, terms) = l.split_once(';').unwrap();
            let terms = terms.split(',').map(|t| {
                let (e, c) = t.split_once(':').unwrap();
                (e.parse::<i32>().unwrap(), c.parse::<i64>().unwrap())
            });
            (name.to_string(), LaurentPoly::from_terms(terms))
        })
        .collect()
}

#[test]
fn bundled_table_matches_knotinfo_jones() {
    let table = KnotTable::bundled();
    let oracle = knotinfo_jones();
    assert_eq!(oracle.len(), table.len());
    for r in table.records() {
        let expected = &oracle[&r.name];
        assert_eq!(r.jones.to_t().as_ref(), Some(expected), "{}", r.name);
        assert_eq!(jones(&r.diagram).unwrap(), r.jones, "{}", r.name);
    }
}

fn braid_closure(word: &[(usize, bool)], strands: usize) -> PlanarDiagram {
    let first: Vec<u32> = (1..=strands as u32).collect();
    let mut current = first.clone();
    let mut next_label = strands as u32 + 1;
    let mut recs = Vec::new();
    for &(i, under_left) in word {
        let (l, r) = (current[i], current[i + 1]);
        let (nl, nr) = (next_label, next_label + 1);
        next_label += 2;
        recs.push(if under_left { [l, r, nr, nl] } else { [r, nr, nl, l] });
        current[i] = nl;
        current[i + 1] = nr;
    }
    let untouched = current.iter().zip(&first).filter(|(a, b)| a == b).count();
    let close: BTreeMap<u32, u32> = current.iter().copied().zip(first.iter().copied()).collect();
    let recs: Vec<[u32; 4]> = recs.into_iter().map(|r| r.map(|l| *close.get(&l).unwrap_or(&l))).collect();
    PlanarDiagram::from_pd(recs).unwrap().with_circles(untouched)
}

fn find(parent: &mut BTreeMap<u32, u32>, l: u32) -> u32 {
    let p = *parent.get(&l).unwrap_or(&l);
    if p == l {
        return l;
    }
    let root = find(parent, p);
    parent.insert(l, root);
    root
}

/// Removes crossing `x`, joining its label ends in pairs (positions 0-1 and
/// 2-3 when `a_type`, else 0-3 and 1-2), and reorients what is left.
fn smooth(d: &PlanarDiagram, x: usize, a_type: bool) -> PlanarDiagram {
    let [a, b, c, e] = d.crossings()[x];
    let mut parent = BTreeMap::new();
    let pairs = if a_type { [(a, b), (c, e)] } else { [(a, e), (b, c)] };
    for (p, q) in pairs {
        let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
        parent.insert(rp, rq);
    }
    let mut recs: Vec<[u32; 4]> = Vec::new();
    for (i, rec) in d.crossings().iter().enumerate() {
        if i != x {
            recs.push(rec.map(|l| find(&mut parent, l)));
        }
    }
    let mut roots: Vec<u32> = [a, b, c, e].iter().map(|&l| find(&mut parent, l)).collect();
    roots.sort_unstable();
    roots.dedup();
    let new_loops = roots.iter().filter(|&&r| !recs.iter().flatten().any(|&l| l == r)).count();
    PlanarDiagram::from_pd(orient(recs)).unwrap().with_circles(d.free_loops() + new_loops)
}

/// Rotates records by half a turn where needed so that every under-strand
/// enters through the first position, for some orientation of each strand.
fn orient(mut recs: Vec<[u32; 4]>) -> Vec<[u32; 4]> {
    let mut ends: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (x, rec) in recs.iter().enumerate() {
        for (p, &l) in rec.iter().enumerate() {
            ends.entry(l).or_default().push((x, p));
        }
    }
    let mut visited = vec![[false; 4]; recs.len()];
    let mut flip = vec![false; recs.len()];
    for x0 in 0..recs.len() {
        for p0 in 0..4 {
            if visited[x0][p0] {
                continue;
            }
            let (mut x, mut p) = (x0, p0);
            while !visited[x][p] {
                let out = (p + 2) % 4;
                visited[x][p] = true;
                visited[x][out] = true;
                if p == 2 {
                    flip[x] = true;
                }
                let l = recs[x][out];
                let e = &ends[&l];
                (x, p) = if e[0] == (x, out) { e[1] } else { e[0] };
            }
        }
    }
    for (rec, f) in recs.iter_mut().zip(flip) {
        if f {
            rec.rotate_left(2);
        }
    }
    recs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bracket_obeys_the_skein_relation(
        word in proptest::collection::vec((0usize..3, any::<bool>()), 1..9),
        pick in any::<usize>(),
    ) {
        let d = braid_closure(&word, 4);
        let x = pick % d.crossing_count();
        let lhs = bracket(&d).unwrap();
        let a = bracket(&smooth(&d, x, true)).unwrap().scale(1, 1);
        let b = bracket(&smooth(&d, x, false)).unwrap().scale(1, -1);
        prop_assert_eq!(lhs, &a + &b);
    }
}
