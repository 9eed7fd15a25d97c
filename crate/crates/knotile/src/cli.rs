//! The `knotile` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but fails
//! the check asked for (a board that is not suitably connected, a bound
//! that does not hold, a knot that does not fit), and 2 on usage or parse
//! errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotile_core::enumerate::{
    census, fill_layout, generate, layout_profiles, min_tile_number_in_layouts, minimal_mosaics, verify_bounds, Fill,
    KnotTarget, Layout, MinimalSet, SearchConstraints, SearchError, CONJECTURED_SEVEN, EXHAUSTIVE_MAX_SIZE,
};
use knotile_core::invariants::{bracket, identify, jones};
use knotile_core::trace::{is_reduced, trace, writhe};
use knotile_core::{KnotMosaic, KnotTable, Mosaic};

use crate::record::Record;
use crate::{assets, io, render, shard};

#[derive(Debug, Parser)]
#[command(name = "knotile", version, about = "Knot mosaics: validation, invariants, drawing and tile-number searches")]
pub struct Cli {
    /// Knot table file; defaults to $KNOTILE_TABLE, then the bundled table.
    #[arg(long, global = true, value_name = "FILE")]
    pub table: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a mosaic file is suitably connected.
    Validate { file: PathBuf },
    /// Print size, tile number, components, crossings, invariants and identification.
    Info { file: PathBuf },
    /// Draw a mosaic.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List every knot mosaic of a board size meeting the filters.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        filters: Filters,
        #[command(flatten)]
        run: RunOptions,
    },
    /// Count knot mosaics by transfer matrix, as CSV.
    Census {
        /// A single board size; otherwise sizes 1 to --max.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Least tile number of a knot or link on a board size.
    Search {
        /// Table name, `unknot` or `unlinkK`.
        #[arg(long)]
        knot: String,
        #[arg(long)]
        size: usize,
        /// Restrict to fillings of these layouts (file or bundled name).
        /// Boards larger than 5 use the bundled layouts of that size by default.
        #[arg(long)]
        layout: Vec<String>,
        /// Also print every minimal mosaic.
        #[arg(long)]
        all: bool,
    },
    /// List fillings of a layout.
    FillLayout {
        /// Layout file or bundled name.
        #[arg(long)]
        layout: String,
        #[command(flatten)]
        filters: Filters,
        /// Keep only fillings identified as this knot.
        #[arg(long)]
        knot: Option<String>,
        #[command(flatten)]
        run: RunOptions,
    },
    /// Tile numbers allowed by the space-efficiency rules on a board size.
    Layouts {
        #[arg(long)]
        size: usize,
        /// Print the layouts in layout file format instead of records.
        #[arg(long)]
        text: bool,
    },
    /// Check tile numbers against the bounds in terms of mosaic number.
    /// Input is CSV rows `knot,mosaic_number,tile_number`.
    VerifyBounds { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Args)]
pub struct Filters {
    #[arg(long)]
    pub max_tiles: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub min_crossings: usize,
    /// Single component, reduced, no crossing-free component.
    #[arg(long)]
    pub knots_only: bool,
    /// One mosaic per symmetry class.
    #[arg(long)]
    pub canonical: bool,
}

impl Filters {
    fn constraints(&self, size: usize) -> SearchConstraints {
        let mut c = if self.knots_only { SearchConstraints::knots(size) } else { SearchConstraints::new(size) };
        c.max_tiles = self.max_tiles;
        c.min_crossings = self.min_crossings;
        c.canonical_dedup = self.canonical;
        c
    }
}

#[derive(Debug, Args)]
pub struct RunOptions {
    /// Print totals instead of one record per mosaic.
    #[arg(long)]
    pub count: bool,
    /// Stop after this many records.
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// Outcome of a command that ran to completion.
#[derive(Debug)]
pub enum Failure {
    /// Exit status 1.
    Domain(String),
    /// Exit status 2.
    Usage(String),
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "knotile: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "knotile: {m}");
            2
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let table = || io::load_table(cli.table.as_deref());
    match &cli.command {
        Command::Validate { file } => validate(file, out),
        Command::Info { file } => {
            let m = knot_mosaic(file)?;
            writeln!(out, "{}", info_record(&m, &table()?)?)?;
            Ok(())
        }
        Command::Render { file, format, output } => {
            let m = io::read_mosaic(file)?;
            let text = match format {
                Format::Ascii => render::ascii(&m),
                Format::Svg => render::svg(&m),
            };
            match output {
                Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
                None => Ok(out.write_all(text.as_bytes())?),
            }
        }
        Command::Enumerate { size, filters, run } => {
            let c = filters.constraints(*size);
            c.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            stream(generate(c), None, &table()?, run, out)
        }
        Command::Census { size, max } => {
            let sizes = match size {
                Some(n) => *n..=*n,
                None => 1..=*max,
            };
            writeln!(out, "size,count")?;
            for n in sizes {
                let count = census(n).map_err(|e| Failure::Domain(e.to_string()))?;
                writeln!(out, "{n},{count}")?;
            }
            Ok(())
        }
        Command::Search { knot, size, layout, all } => search(knot, *size, layout, *all, &table()?, out),
        Command::FillLayout { layout, filters, knot, run } => {
            let l = io::load_layout(layout)?;
            let table = table()?;
            if let Some(k) = knot {
                target(k, &table)?;
            }
            let fill = fill_layout(&l, filters.constraints(l.size()));
            stream(fill, knot.as_deref(), &table, run, out)
        }
        Command::Layouts { size, text } => layouts(*size, *text, out),
        Command::VerifyBounds { file } => verify(file, out),
    }
}

fn knot_mosaic(file: &Path) -> Result<KnotMosaic, Failure> {
    let m = io::read_mosaic(file)?;
    KnotMosaic::new(m).map_err(|e| Failure::Domain(format!("{}: {e}", file.display())))
}

fn validate(file: &Path, out: &mut dyn Write) -> Outcome {
    let m = io::read_mosaic(file)?;
    let ok = m.is_suitably_connected();
    writeln!(out, "{}", Record::new().with("mosaic", m.to_line()).with("suitably_connected", ok))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Domain(format!("{} is not suitably connected", file.display())))
    }
}

/// The `info` record for a mosaic.
pub fn info_record(m: &KnotMosaic, table: &KnotTable) -> Result<Record, Failure> {
    let t = trace(m);
    let d = &t.diagram;
    let fail = |e: knotile_core::invariants::InvariantError| Failure::Domain(e.to_string());
    let b = bracket(d).map_err(fail)?;
    let j = jones(d).map_err(fail)?;
    let jones_text = match j.to_t() {
        Some(jt) => jt.display_in("t").to_string(),
        None => j.to_string(),
    };
    Ok(Record::new()
        .with("mosaic", m.to_line())
        .with("size", m.size())
        .with("tile_number", m.tile_number())
        .with("components", t.component_count)
        .with("crossings", t.crossing_count)
        .with("reduced", is_reduced(d))
        .with("writhe", writhe(d))
        .with("bracket", b)
        .with("jones", jones_text)
        .with("identification", identify(d, table).map_err(fail)?))
}

/// The short record printed per enumerated mosaic.
fn mosaic_record(m: &Mosaic, table: &KnotTable) -> (Record, bool, String) {
    let km = KnotMosaic::new(m.clone()).expect("searches yield suitably connected boards");
    let t = trace(&km);
    let id = identify(&t.diagram, table).map(|i| i.to_string()).unwrap_or_else(|_| "unknown".into());
    let known = id != "unknown";
    let r = Record::new()
        .with("mosaic", m.to_line())
        .with("tile_number", m.tile_number())
        .with("components", t.component_count)
        .with("crossings", t.crossing_count)
        .with("identification", &id);
    (r, known, id)
}

fn names_knot(id: &str, name: &str) -> bool {
    id.split('|').any(|part| part.trim_end_matches("(mirror)") == name)
}

#[derive(Default)]
struct Tally {
    lines: Vec<String>,
    total: u64,
    identified: u64,
}

fn stream(fill: Fill, knot: Option<&str>, table: &KnotTable, run: &RunOptions, out: &mut dyn Write) -> Outcome {
    let limit = run.limit.unwrap_or(usize::MAX);
    let keep_lines = !run.count;
    let work = |f: Fill| {
        let mut t = Tally::default();
        f.for_each_mosaic(|m| {
            if keep_lines && t.lines.len() >= limit {
                return;
            }
            let (r, known, id) = mosaic_record(m, table);
            if knot.is_some_and(|k| !names_knot(&id, k)) {
                return;
            }
            t.total += 1;
            t.identified += u64::from(known);
            if keep_lines {
                t.lines.push(r.to_string());
            }
        });
        t
    };
    let parts = if run.threads > 1 { shard::run_sharded(&fill, run.threads, work) } else { vec![work(fill)] };
    if run.count {
        let total: u64 = parts.iter().map(|t| t.total).sum();
        let identified: u64 = parts.iter().map(|t| t.identified).sum();
        let r = Record::new().with("count", total).with("identified", identified).with("unidentified", total - identified);
        writeln!(out, "{r}")?;
    } else {
        for line in parts.iter().flat_map(|t| &t.lines).take(limit) {
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

/// Reads `unknot`, `unlinkK` or a table name.
pub fn target(name: &str, table: &KnotTable) -> Result<KnotTarget, Failure> {
    if name == "unknot" {
        return Ok(KnotTarget::Unknot);
    }
    if let Some(k) = name.strip_prefix("unlink").and_then(|k| k.parse::<usize>().ok()) {
        return Ok(KnotTarget::Unlink(k));
    }
    if table.get(name).is_none() && table.link(name).is_none() {
        return Err(Failure::Usage(format!("no knot or link named {name} in the table")));
    }
    Ok(KnotTarget::Named(name.to_string()))
}

fn search(name: &str, size: usize, layouts: &[String], all: bool, table: &KnotTable, out: &mut dyn Write) -> Outcome {
    let t = target(name, table)?;
    let search_err = |e: SearchError| match e {
        SearchError::UnknownKnot(_) => Failure::Usage(e.to_string()),
        SearchError::TooLarge(_) => Failure::Domain(e.to_string()),
    };
    let (method, set): (&str, MinimalSet) = if layouts.is_empty() && size <= EXHAUSTIVE_MAX_SIZE {
        ("exhaustive", minimal_mosaics(&t, size, table, true).map_err(search_err)?)
    } else {
        let ls: Vec<Layout> = if layouts.is_empty() {
            assets::layouts_of_size(size)
        } else {
            layouts.iter().map(|l| io::load_layout(l)).collect::<Result<_, _>>()?
        };
        if ls.is_empty() {
            return Err(Failure::Usage(format!("no bundled layouts for size {size}; pass --layout")));
        }
        if let Some(l) = ls.iter().find(|l| l.size() != size) {
            return Err(Failure::Usage(format!("layout {} has size {}, not {size}", l.tag(), l.size())));
        }
        ("layouts", min_tile_number_in_layouts(&t, &ls, table).map_err(search_err)?)
    };
    let mut r = Record::new().with("knot", name).with("size", size).with("method", method);
    match (set.tile_number, set.witness()) {
        (Some(n), Some(w)) => {
            r.push("tile_number", n);
            r.push("minimal_mosaics", set.mosaics.len());
            r.push("witness", w.to_line());
            writeln!(out, "{r}")?;
            if all {
                for m in &set.mosaics {
                    writeln!(out, "{}", mosaic_record(m, table).0)?;
                }
            }
            Ok(())
        }
        _ => {
            r.push("tile_number", "none");
            writeln!(out, "{r}")?;
            Err(Failure::Domain(format!("{name} does not fit the search space")))
        }
    }
}

fn join(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn layouts(size: usize, text: bool, out: &mut dyn Write) -> Outcome {
    if !(4..=knotile_core::tiles::MAX_SEARCH_SIZE).contains(&size) {
        return Err(Failure::Usage(format!("layout profiles need a size from 4 to {}", knotile_core::tiles::MAX_SEARCH_SIZE)));
    }
    let report = layout_profiles(size);
    for (i, s) in report.shadows.iter().enumerate() {
        if text {
            let tag = format!("size{size}-{}-{i}", s.tile_number());
            writeln!(out, "{}", s.to_layout(tag).to_text())?;
        } else {
            let r = Record::new()
                .with("size", size)
                .with("tile_number", s.tile_number())
                .with("four_point", s.four_point_count())
                .with("rows", join(s.row_counts()))
                .with("columns", join(s.column_counts()))
                .with("shadow", s.to_string().trim_end().replace('\n', "/"));
            writeln!(out, "{r}")?;
        }
    }
    let mut summary = Record::new()
        .with("size", size)
        .with("tile_numbers", join(report.tile_numbers.iter().copied()))
        .with("layouts", report.shadows.len());
    if size == 7 {
        let (extra, missing) = report.discrepancies(&CONJECTURED_SEVEN);
        let status = if extra.is_empty() && missing.is_empty() { "conjecture-consistent" } else { "discrepancies" };
        summary.push("conjectured", join(CONJECTURED_SEVEN));
        summary.push("status", status);
        summary.push("extra", join(extra));
        summary.push("missing", join(missing));
    }
    if !text {
        writeln!(out, "{summary}")?;
    }
    Ok(())
}

fn verify(file: &Path, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed = match parts.as_slice() {
            [name, m, t] => m.parse::<usize>().ok().zip(t.parse::<usize>().ok()).map(|(m, t)| (name.to_string(), m, t)),
            _ => None,
        };
        match parsed {
            Some(row) => rows.push(row),
            None if i == 0 => continue,
            None => return Err(Failure::Usage(format!("{}:{}: expected knot,mosaic_number,tile_number", file.display(), i + 1))),
        }
    }
    let report = verify_bounds(&rows);
    out.write_all(report.to_csv().as_bytes())?;
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Domain("some tile numbers lie outside the bounds".into()))
    }
}
