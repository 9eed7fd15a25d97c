//! Kauffman bracket, Jones normalization and identification against a
//! table of prime knots.
//!
//! Everything is in the bracket variable `A`; the usual Jones variable is
//! `t = A^-4`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{LaurentPoly, StateHistogram};
use crate::trace::{writhe, PdError, PlanarDiagram};
use crate::unionfind::UnionFind;

/// Crossing count above which the state sum refuses to run.
pub const DEFAULT_CROSSING_CAP: usize = 20;

/// The knot table shipped with the crate: prime knots `3_1` through `9_49`.
pub const BUNDLED_TABLE: &str = include_str!("../data/knots.tbl");

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("diagram has {crossings} crossings, more than the cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
}

/// Kauffman bracket with the default crossing cap.
pub fn bracket(d: &PlanarDiagram) -> Result<LaurentPoly, InvariantError> {
    bracket_with_cap(d, DEFAULT_CROSSING_CAP)
}

/// State sum over all `2^c` smoothings. A state with `a` A-smoothings, `b`
/// B-smoothings and `L` loops contributes `A^(a-b) * delta^(L-1)`.
///
/// At `X(i,j,k,l)` the A-smoothing joins `i`-`j` and `k`-`l`; the
/// B-smoothing joins `i`-`l` and `j`-`k`.
pub fn bracket_with_cap(d: &PlanarDiagram, cap: usize) -> Result<LaurentPoly, InvariantError> {
    let c = d.crossing_count();
    if c > cap {
        return Err(InvariantError::TooManyCrossings { crossings: c, cap });
    }
    let free = d.free_loops();
    if c == 0 {
        return Ok(match free {
            0 => LaurentPoly::one(),
            k => LaurentPoly::delta().pow(k as u32 - 1),
        });
    }
    let labels = d.labels();
    let idx = |l: u32| labels.binary_search(&l).unwrap() as u16;
    let recs: Vec<[u16; 4]> = d.crossings().iter().map(|r| r.map(idx)).collect();
    let mut hist = StateHistogram::new(c, labels.len() + free);
    let mut uf = UnionFind::new(labels.len());
    for state in 0u64..(1u64 << c) {
        uf.reset(labels.len());
        for (i, &[a, b, cc, dd]) in recs.iter().enumerate() {
            if state >> i & 1 == 0 {
                uf.union(a as usize, b as usize);
                uf.union(cc as usize, dd as usize);
            } else {
                uf.union(a as usize, dd as usize);
                uf.union(b as usize, cc as usize);
            }
        }
        hist.record(state.count_ones() as usize, uf.sets() + free);
    }
    Ok(hist.to_poly())
}

/// `(-A^3)^(-w) * <D>`, the writhe-normalized bracket.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPoly, InvariantError> {
    Ok(normalize_by_writhe(&bracket(d)?, writhe(d)))
}

pub(crate) fn normalize_by_writhe(bracket: &LaurentPoly, w: i32) -> LaurentPoly {
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket.scale(sign, -3 * w)
}

/// Bracket up to units `±A^k` and mirror image: the least of the two
/// normalized representatives. Component count is not included.
pub fn link_signature(d: &PlanarDiagram) -> Result<LaurentPoly, InvariantError> {
    Ok(signature_of_bracket(&bracket(d)?))
}

pub(crate) fn signature_of_bracket(b: &LaurentPoly) -> LaurentPoly {
    let direct = b.normalize_unit();
    let mirrored = b.mirror().normalize_unit();
    if mirrored < direct {
        mirrored
    } else {
        direct
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub crossing_number: usize,
    pub diagram: PlanarDiagram,
    pub jones: LaurentPoly,
    /// The Jones polynomial is symmetric under `A -> A^-1`.
    pub amphichiral: bool,
    /// Other records whose Jones polynomial agrees up to mirror image.
    pub ambiguous_with: Vec<String>,
}

impl KnotRecord {
    pub fn is_ambiguous(&self) -> bool {
        !self.ambiguous_with.is_empty()
    }
}

/// Two-component links recognised outside the knot table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkRecord {
    pub name: String,
    pub components: usize,
    pub crossing_number: usize,
    pub diagram: PlanarDiagram,
    /// Unit-normalized bracket of `diagram`.
    pub bracket: LaurentPoly,
}

pub const HOPF_LINK: &str = "2^2_1";
pub const SOLOMON_LINK: &str = "4^2_1";

fn builtin_links() -> Vec<LinkRecord> {
    [
        (HOPF_LINK, "X(4,1,3,2),X(2,3,1,4)"),
        (SOLOMON_LINK, "X(6,1,7,2),X(8,3,5,4),X(2,5,3,6),X(4,7,1,8)"),
    ]
    .into_iter()
    .map(|(name, pd)| {
        let diagram = PlanarDiagram::parse(pd).expect("built-in link diagram");
        let b = bracket(&diagram).expect("small diagram");
        LinkRecord {
            name: name.to_string(),
            components: diagram.component_count(),
            crossing_number: diagram.crossing_count(),
            bracket: b.normalize_unit(),
            diagram,
        }
    })
    .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("record {name}: {source}")]
    Diagram { name: String, source: PdError },
    #[error("record {name}: diagram has {found} crossings but crossing number {declared}")]
    CrossingCount { name: String, declared: usize, found: usize },
    #[error("record {name}: diagram has {components} components, expected a knot")]
    NotAKnot { name: String, components: usize },
    #[error("record {name}: {source}")]
    Invariant { name: String, source: InvariantError },
    #[error("duplicate record name {0}")]
    Duplicate(String),
}

/// Validated prime-knot records plus the built-in two-component links.
#[derive(Clone, Debug)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
    links: Vec<LinkRecord>,
}

impl KnotTable {
    /// Parses and validates table text (`name;crossing_number;X(...),...`).
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut records: Vec<KnotRecord> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.splitn(3, ';');
            let (Some(name), Some(cn), Some(pd)) = (fields.next(), fields.next(), fields.next()) else {
                return Err(TableError::Syntax { line: i + 1, message: "expected name;crossing_number;pd".into() });
            };
            let name = name.trim().to_string();
            let crossing_number: usize = cn
                .trim()
                .parse()
                .map_err(|_| TableError::Syntax { line: i + 1, message: alloc::format!("bad crossing number {cn:?}") })?;
            let diagram =
                PlanarDiagram::parse(pd).map_err(|source| TableError::Diagram { name: name.clone(), source })?;
            if diagram.crossing_count() != crossing_number {
                return Err(TableError::CrossingCount {
                    name,
                    declared: crossing_number,
                    found: diagram.crossing_count(),
                });
            }
            if diagram.component_count() != 1 {
                return Err(TableError::NotAKnot { name, components: diagram.component_count() });
            }
            if records.iter().any(|r| r.name == name) {
                return Err(TableError::Duplicate(name));
            }
            let jones = jones(&diagram).map_err(|source| TableError::Invariant { name: name.clone(), source })?;
            let amphichiral = jones == jones.mirror();
            records.push(KnotRecord { name, crossing_number, diagram, jones, amphichiral, ambiguous_with: Vec::new() });
        }
        // distinctness audit
        for i in 0..records.len() {
            for j in i + 1..records.len() {
                let (a, b) = (&records[i].jones, &records[j].jones);
                if a == b || *a == b.mirror() {
                    let (ni, nj) = (records[i].name.clone(), records[j].name.clone());
                    records[i].ambiguous_with.push(nj);
                    records[j].ambiguous_with.push(ni);
                }
            }
        }
        Ok(KnotTable { records, links: builtin_links() })
    }

    /// The table bundled with the crate.
    pub fn bundled() -> Self {
        KnotTable::parse(BUNDLED_TABLE).expect("bundled knot table is valid")
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn links(&self) -> &[LinkRecord] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn link(&self, name: &str) -> Option<&LinkRecord> {
        self.links.iter().find(|r| r.name == name)
    }

    /// Matches a writhe-normalized bracket of a one-component diagram.
    pub fn identify_knot_jones(&self, j: &LaurentPoly) -> Identification {
        if *j == LaurentPoly::one() {
            return Identification::Unknot;
        }
        let mirror = j.mirror();
        let mut found = Vec::new();
        for r in &self.records {
            if r.jones == *j {
                found.push(Match { name: r.name.clone(), mirror: false });
            } else if r.jones == mirror {
                found.push(Match { name: r.name.clone(), mirror: true });
            }
        }
        if found.is_empty() {
            Identification::Unknown
        } else {
            Identification::Matches(found)
        }
    }

    /// Matches the bracket of a diagram with `components >= 2` components.
    pub fn identify_link_bracket(&self, components: usize, b: &LaurentPoly) -> Identification {
        let unlink = LaurentPoly::delta().pow(components as u32 - 1);
        let direct = b.normalize_unit();
        let mirror = b.mirror().normalize_unit();
        if direct == unlink.normalize_unit() {
            return Identification::Unlink(components);
        }
        let mut found = Vec::new();
        for r in self.links.iter().filter(|r| r.components == components) {
            if r.bracket == direct {
                found.push(Match { name: r.name.clone(), mirror: false });
            } else if r.bracket == mirror {
                found.push(Match { name: r.name.clone(), mirror: true });
            }
        }
        if found.is_empty() {
            Identification::Unknown
        } else {
            Identification::Matches(found)
        }
    }
}

/// One table entry matching a diagram, possibly as its mirror image.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Match {
    pub name: String,
    pub mirror: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Identification {
    /// No curves at all.
    Empty,
    Unknot,
    /// `k` components with the bracket of `k` split circles.
    Unlink(usize),
    Matches(Vec<Match>),
    Unknown,
}

impl Identification {
    /// True when some match carries this name.
    pub fn names(&self, name: &str) -> bool {
        matches!(self, Identification::Matches(ms) if ms.iter().any(|m| m.name == name))
    }

    /// Name of the single match, if exactly one.
    pub fn unique_name(&self) -> Option<&str> {
        match self {
            Identification::Matches(ms) if ms.len() == 1 => Some(&ms[0].name),
            _ => None,
        }
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identification::Empty => f.write_str("empty"),
            Identification::Unknot => f.write_str("unknot"),
            Identification::Unlink(k) => write!(f, "unlink{k}"),
            Identification::Unknown => f.write_str("unknown"),
            Identification::Matches(ms) => {
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        f.write_str("|")?;
                    }
                    f.write_str(&m.name)?;
                    if m.mirror {
                        f.write_str("(mirror)")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Identifies a diagram: by Jones polynomial for knots, by bracket up to
/// units for links.
pub fn identify(d: &PlanarDiagram, table: &KnotTable) -> Result<Identification, InvariantError> {
    match d.component_count() {
        0 => Ok(Identification::Empty),
        1 => Ok(table.identify_knot_jones(&jones(d)?)),
        k => Ok(table.identify_link_bracket(k, &bracket(d)?)),
    }
}

/// Parses and validates a knot table.
pub fn load_knot_table(text: &str) -> Result<KnotTable, TableError> {
    KnotTable::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use proptest::prelude::*;

    fn trefoil() -> PlanarDiagram {
        PlanarDiagram::parse("X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)").unwrap()
    }

    /// Independent state sum: for each state, follow the smoothed curves
    /// by hand through a successor map instead of union-find.
    fn bracket_oracle(d: &PlanarDiagram) -> LaurentPoly {
        let c = d.crossing_count();
        let mut total = LaurentPoly::zero();
        for state in 0u32..(1 << c) {
            // each label end (label, which occurrence) joined to another end
            let mut partner: BTreeMap<(u32, u8), (u32, u8)> = BTreeMap::new();
            let mut seen: BTreeMap<u32, u8> = BTreeMap::new();
            let mut end = |l: u32| {
                let k = seen.entry(l).or_insert(0);
                *k += 1;
                (l, *k - 1)
            };
            for (i, rec) in d.crossings().iter().enumerate() {
                let e = rec.map(&mut end);
                let pairs = if state >> i & 1 == 0 { [(e[0], e[1]), (e[2], e[3])] } else { [(e[0], e[3]), (e[1], e[2])] };
                for (x, y) in pairs {
                    partner.insert(x, y);
                    partner.insert(y, x);
                }
            }
            let mut done: BTreeMap<u32, bool> = BTreeMap::new();
            let mut loops = d.free_loops();
            for &l in seen.keys() {
                if done.contains_key(&l) {
                    continue;
                }
                loops += 1;
                let mut at = (l, 0u8);
                loop {
                    done.insert(at.0, true);
                    let other_end = (at.0, 1 - at.1);
                    let next = partner[&other_end];
                    if next.0 == l {
                        break;
                    }
                    at = next;
                }
            }
            let b = state.count_ones() as i32;
            let a = c as i32 - b;
            total += &LaurentPoly::delta().pow(loops as u32 - 1).scale(1, a - b);
        }
        total
    }

    #[test]
    fn trivial_brackets() {
        assert_eq!(bracket(&PlanarDiagram::circles(1)).unwrap(), LaurentPoly::one());
        assert_eq!(bracket(&PlanarDiagram::circles(2)).unwrap(), LaurentPoly::delta());
        assert_eq!(jones(&PlanarDiagram::circles(1)).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn trefoil_bracket_matches_oracle() {
        let d = trefoil();
        let b = bracket(&d).unwrap();
        assert_eq!(b, bracket_oracle(&d));
        assert_eq!(b.term_count(), 3);
        // right-handed trefoil: V(t) = t + t^3 - t^4
        let v = jones(&d).unwrap().to_t().unwrap();
        assert_eq!(v, LaurentPoly::from_terms([(1, 1), (3, 1), (4, -1)]));
        assert_eq!(jones(&d.mirror()).unwrap(), jones(&d).unwrap().mirror());
    }

    #[test]
    fn crossing_cap() {
        assert_eq!(
            bracket_with_cap(&trefoil(), 2),
            Err(InvariantError::TooManyCrossings { crossings: 3, cap: 2 })
        );
    }

    #[test]
    fn bundled_table_loads() {
        let table = KnotTable::bundled();
        assert_eq!(table.len(), 84);
        assert_eq!(table.records()[0].name, "3_1");
        assert_eq!(table.records().last().unwrap().name, "9_49");
        assert!(table.records().iter().all(|r| !r.is_ambiguous()));
        assert!(table.get("4_1").unwrap().amphichiral);
        assert!(!table.get("3_1").unwrap().amphichiral);
    }

    #[test]
    fn empty_table() {
        let table = KnotTable::parse("# nothing\n").unwrap();
        assert!(table.is_empty());
        assert_eq!(identify(&trefoil(), &table).unwrap(), Identification::Unknown);
        assert_eq!(identify(&PlanarDiagram::circles(1), &table).unwrap(), Identification::Unknot);
    }

    #[test]
    fn table_validation_names_record() {
        let err = KnotTable::parse("bad;1;X(1,2,2,3)\n").unwrap_err();
        assert!(matches!(&err, TableError::Diagram { name, .. } if name == "bad"), "{err}");
        let err = KnotTable::parse("3_1;4;X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\n").unwrap_err();
        assert!(matches!(err, TableError::CrossingCount { declared: 4, found: 3, .. }));
        let dup = "a;3;X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\na;3;X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\n";
        assert_eq!(KnotTable::parse(dup).unwrap_err(), TableError::Duplicate("a".into()));
        assert!(matches!(KnotTable::parse("x;3\n"), Err(TableError::Syntax { line: 1, .. })));
    }

    #[test]
    fn ambiguity_is_flagged_not_fatal() {
        let text = "a;3;X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\nb;3;X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)\n";
        let table = KnotTable::parse(text).unwrap();
        assert_eq!(table.records()[0].ambiguous_with, ["b"]);
        match identify(&trefoil(), &table).unwrap() {
            Identification::Matches(ms) => assert_eq!(ms.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identify_examples() {
        let table = KnotTable::bundled();
        let id = identify(&trefoil(), &table).unwrap();
        assert_eq!(id.unique_name(), Some("3_1"));
        let id = identify(&trefoil().mirror(), &table).unwrap();
        assert_eq!(id, Identification::Matches(alloc::vec![Match { name: "3_1".into(), mirror: true }]));
        assert_eq!(identify(&PlanarDiagram::circles(2), &table).unwrap(), Identification::Unlink(2));
        let hopf = &table.link(HOPF_LINK).unwrap().diagram;
        assert!(identify(hopf, &table).unwrap().names(HOPF_LINK));
        assert!(identify(&hopf.mirror(), &table).unwrap().names(HOPF_LINK));
        let solomon = &table.link(SOLOMON_LINK).unwrap().diagram;
        assert_eq!(identify(solomon, &table).unwrap().unique_name(), Some(SOLOMON_LINK));
        assert_eq!(identify(&PlanarDiagram::empty(), &table).unwrap(), Identification::Empty);
    }

    #[test]
    fn split_circle_multiplies_by_delta() {
        for r in KnotTable::bundled().records().iter().take(12) {
            let plus = r.diagram.clone().with_circles(1);
            assert_eq!(bracket(&plus).unwrap(), &bracket(&r.diagram).unwrap() * &LaurentPoly::delta());
        }
    }

    /// Closure of a braid word; `(i, true)` crosses strands `i` and `i+1`
    /// with the left strand passing under.
    fn braid_closure(word: &[(usize, bool)], strands: usize) -> PlanarDiagram {
        let first: Vec<u32> = (1..=strands as u32).collect();
        let mut current = first.clone();
        let mut next_label = strands as u32 + 1;
        let mut recs = Vec::new();
        for &(i, under_left) in word {
            let (l, r) = (current[i], current[i + 1]);
            let (nl, nr) = (next_label, next_label + 1);
            next_label += 2;
            // strands run upward and swap positions
            recs.push(if under_left { [l, r, nr, nl] } else { [r, nr, nl, l] });
            current[i] = nl;
            current[i + 1] = nr;
        }
        let untouched = current.iter().zip(&first).filter(|(a, b)| a == b).count();
        let close: BTreeMap<u32, u32> = current.iter().copied().zip(first.iter().copied()).collect();
        let recs: Vec<[u32; 4]> = recs.into_iter().map(|r| r.map(|l| *close.get(&l).unwrap_or(&l))).collect();
        PlanarDiagram::from_pd(recs).unwrap().with_circles(untouched)
    }

    fn braid_word() -> impl Strategy<Value = Vec<(usize, bool)>> {
        proptest::collection::vec((0usize..2, any::<bool>()), 1..7)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bracket_agrees_with_oracle(word in braid_word()) {
            let d = braid_closure(&word, 3);
            prop_assert_eq!(bracket(&d).unwrap(), bracket_oracle(&d));
        }

        #[test]
        fn bracket_survives_second_move(word in braid_word(), at in 0usize..8, i in 0usize..2, s in any::<bool>()) {
            let mut longer = word.clone();
            let at = at.min(word.len());
            longer.splice(at..at, [(i, s), (i, !s)]);
            prop_assert_eq!(bracket(&braid_closure(&word, 3)).unwrap(), bracket(&braid_closure(&longer, 3)).unwrap());
        }

        #[test]
        fn bracket_survives_third_move(word in braid_word(), at in 0usize..8, s in any::<bool>()) {
            let at = at.min(word.len());
            let mut a = word.clone();
            let mut b = word.clone();
            a.splice(at..at, [(0, s), (1, s), (0, s)]);
            b.splice(at..at, [(1, s), (0, s), (1, s)]);
            prop_assert_eq!(bracket(&braid_closure(&a, 3)).unwrap(), bracket(&braid_closure(&b, 3)).unwrap());
        }

        #[test]
        fn jones_survives_stabilization(word in braid_word(), s in any::<bool>()) {
            let mut longer = word.clone();
            longer.push((2, s));
            prop_assert_eq!(jones(&braid_closure(&word, 3)).unwrap(), jones(&braid_closure(&longer, 4)).unwrap());
        }

        #[test]
        fn jones_mirror(word in braid_word()) {
            let d = braid_closure(&word, 3);
            prop_assert_eq!(jones(&d.mirror()).unwrap(), jones(&d).unwrap().mirror());
        }
    }
}
