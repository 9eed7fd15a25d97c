use std::path::PathBuf;
use std::process::Command;

use knotile::cli::main_with;
use knotile::record::Record;
use knotile_core::invariants::{bracket, identify, jones};
use knotile_core::trace::{is_reduced, trace};
use knotile_core::{KnotMosaic, KnotTable, Mosaic};

fn asset(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "assets", "mosaics", &format!("{name}.mosaic")].iter().collect();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["knotile"];
    full.extend_from_slice(args);
    let code = main_with(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_knotile"));
    c.env_remove("KNOTILE_TABLE");
    c
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", &asset("unknot-2")]).0, 0);
    let dir = tempfile::tempdir().unwrap();
    let open = dir.path().join("open.mosaic");
    std::fs::write(&open, "21\n30\n").unwrap();
    let (code, out, _) = run(&["validate", open.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("suitably_connected=false"));
    let junk = dir.path().join("junk.mosaic");
    std::fs::write(&junk, "2x\n34\n").unwrap();
    assert_eq!(run(&["validate", junk.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["validate", "/no/such/file"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["search", "--size", "4"]).0, 2);
    assert_eq!(run(&["search", "--knot", "99_1", "--size", "4"]).0, 2);
    assert_eq!(run(&["info", open.to_str().unwrap()]).0, 1);
}

#[test]
fn info_parses_back_to_library_values() {
    let table = KnotTable::bundled();
    for name in ["trefoil-12", "four-2^2_1", "unlink-3", "five-7_4"] {
        let (code, out, _) = run(&["info", &asset(name)]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(out.lines().count(), 1);
        let r = Record::parse(out.trim_end()).unwrap();
        let text = std::fs::read_to_string(asset(name)).unwrap();
        let m = KnotMosaic::new(Mosaic::parse(&text).unwrap()).unwrap();
        let t = trace(&m);
        assert_eq!(r.get("mosaic"), Some(m.to_line().as_str()));
        assert_eq!(r.get("size").unwrap().parse::<usize>().unwrap(), m.size());
        assert_eq!(r.get("tile_number").unwrap().parse::<usize>().unwrap(), m.tile_number());
        assert_eq!(r.get("components").unwrap().parse::<usize>().unwrap(), t.component_count);
        assert_eq!(r.get("crossings").unwrap().parse::<usize>().unwrap(), t.crossing_count);
        assert_eq!(r.get("reduced").unwrap().parse::<bool>().unwrap(), is_reduced(&t.diagram));
        assert_eq!(r.get("bracket").unwrap(), bracket(&t.diagram).unwrap().to_string());
        let j = jones(&t.diagram).unwrap();
        let jt = j.to_t().map(|p| p.display_in("t").to_string()).unwrap_or_else(|| j.to_string());
        assert_eq!(r.get("jones").unwrap(), jt);
        assert_eq!(r.get("identification").unwrap(), identify(&t.diagram, &table).unwrap().to_string());
    }
}

#[test]
fn last_trefoil_info() {
    let (_, out, _) = run(&["info", &asset("trefoil-12")]);
    let r = Record::parse(out.trim_end()).unwrap();
    assert_eq!(r.get("tile_number"), Some("12"));
    assert_eq!(r.get("crossings"), Some("3"));
    assert!(r.get("identification").unwrap().starts_with("3_1"));
}

#[test]
fn svg_has_one_path_per_strand() {
    for name in ["trefoil-13", "four-4^2_1", "six-8_13", "unknot-2"] {
        let (code, out, _) = run(&["render", &asset(name), "--format", "svg"]);
        assert_eq!(code, 0);
        let doc = roxmltree::Document::parse(&out).expect("well-formed svg");
        let paths = doc.descendants().filter(|n| n.has_tag_name("path")).count();
        let m = Mosaic::parse(&std::fs::read_to_string(asset(name)).unwrap()).unwrap();
        let strands: usize = m.cells().iter().map(|k| k.strands().len()).sum();
        assert_eq!(paths, strands, "{name}");
    }
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("t.svg");
    assert_eq!(run(&["render", &asset("trefoil-12"), "--format", "svg", "-o", target.to_str().unwrap()]).0, 0);
    assert!(std::fs::read_to_string(target).unwrap().starts_with("<svg"));
    let (_, ascii, _) = run(&["render", &asset("trefoil-12")]);
    assert_eq!(ascii.lines().count(), 12);
}

#[test]
fn search_examples() {
    let (code, out, _) = run(&["search", "--knot", "7_4", "--size", "5"]);
    assert_eq!(code, 0);
    assert_eq!(Record::parse(out.trim_end()).unwrap().get("tile_number"), Some("17"));
    let (code, out, _) = run(&["search", "--knot", "unlink2", "--size", "3", "--all"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("knot=unlink2 size=3 method=exhaustive tile_number=7"));
    let (code, out, _) = run(&["search", "--knot", "3_1", "--size", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("tile_number=none"));
}

#[test]
fn enumeration_is_deterministic_across_threads() {
    let (_, one, _) = run(&["enumerate", "--size", "4", "--knots-only"]);
    let (_, three, _) = run(&["enumerate", "--size", "4", "--knots-only", "--threads", "3"]);
    assert_eq!(one, three);
    assert!(one.lines().all(|l| Record::parse(l).unwrap().get("components") == Some("1")));
    let (_, count, _) = run(&["enumerate", "--size", "4", "--count", "--threads", "2"]);
    assert_eq!(count.trim(), "count=2594 identified=2594 unidentified=0");
    let (_, limited, _) = run(&["enumerate", "--size", "3", "--limit", "5"]);
    assert_eq!(limited.lines().count(), 5);
    let (_, canon, _) = run(&["enumerate", "--size", "3", "--canonical", "--count"]);
    assert!(canon.starts_with("count=") && !canon.starts_with("count=22 "));
}

#[test]
fn census_and_layouts() {
    let (_, csv, _) = run(&["census", "--max", "5"]);
    assert_eq!(csv, "size,count\n1,1\n2,2\n3,22\n4,2594\n5,4183954\n");
    let (_, six, _) = run(&["layouts", "--size", "6"]);
    let summary = Record::parse(six.lines().last().unwrap()).unwrap();
    assert_eq!(summary.get("tile_numbers"), Some("22,24,27,32"));
    assert_eq!(summary.get("layouts"), Some("5"));
    let (_, text, _) = run(&["layouts", "--size", "5", "--text"]);
    assert_eq!(knotile_core::enumerate::Layout::parse(&text).unwrap().tile_number(), 17);
    assert_eq!(run(&["layouts", "--size", "3"]).0, 2);
}

#[test]
fn fill_layout_by_name() {
    let (code, out, _) = run(&["fill-layout", "--layout", "four-12", "--knots-only", "--knot", "3_1", "--canonical"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    assert!(out.lines().all(|l| Record::parse(l).unwrap().get("identification").unwrap().starts_with("3_1")));
    assert_eq!(run(&["fill-layout", "--layout", "nowhere"]).0, 2);
}

#[test]
fn bounds_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("b.csv");
    std::fs::write(&p, "knot,mosaic_number,tile_number\n3_1,4,12\n6_3,6,22\n").unwrap();
    let (code, out, _) = run(&["verify-bounds", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    std::fs::write(&p, "x,5,16\n").unwrap();
    assert_eq!(run(&["verify-bounds", p.to_str().unwrap()]).0, 1);
    std::fs::write(&p, "x,5\n3_1,4,12\ny,five,1\n").unwrap();
    assert_eq!(run(&["verify-bounds", p.to_str().unwrap()]).0, 2);
}

#[test]
fn table_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("only41.tbl");
    std::fs::write(&p, "4_1;4;X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)\n").unwrap();
    let bundled = binary().args(["info", &asset("trefoil-12")]).output().unwrap();
    assert!(String::from_utf8_lossy(&bundled.stdout).contains("identification=3_1"));
    let custom = binary().env("KNOTILE_TABLE", &p).args(["info", &asset("trefoil-12")]).output().unwrap();
    assert_eq!(custom.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&custom.stdout).contains("identification=unknown"));
    let broken = binary().env("KNOTILE_TABLE", "/no/such/table").args(["info", &asset("trefoil-12")]).output().unwrap();
    assert_eq!(broken.status.code(), Some(2));
    let help = binary().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
