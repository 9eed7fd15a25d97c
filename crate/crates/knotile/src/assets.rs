//! Layouts and example mosaics shipped with the tool.

use knotile_core::enumerate::Layout;
use knotile_core::Mosaic;

macro_rules! bundle {
    ($dir:literal, $ext:literal; $($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../assets/", $dir, "/", $name, ".", $ext)))),*]
    };
}

/// Space-efficient layouts by name: every shadow of a space-efficient
/// board of sizes 4 to 6, up to symmetry and translation.
pub const LAYOUTS: &[(&str, &str)] =
    bundle!("layouts", "layout"; "four-12", "five-17", "six-22-a", "six-22-b", "six-24", "six-27", "six-32");

/// Example mosaics by name. Each file carries a `# label:` comment with
/// the identification it should receive.
pub const MOSAICS: &[(&str, &str)] = bundle!("mosaics", "mosaic";
    "trefoil-13", "trefoil-12", "unknot-2", "unlink-3",
    "four-3_1", "four-2^2_1", "four-4^2_1",
    "five-4_1", "five-5_1", "five-5_2", "five-6_1", "five-6_2", "five-7_4",
    "six-6_3", "six-7_1", "six-7_2", "six-7_3", "six-7_5", "six-7_6", "six-7_7",
    "six-8_1", "six-8_2", "six-8_3", "six-8_4", "six-8_7", "six-8_8", "six-8_9", "six-8_13",
    "six-9_5", "six-9_20",
);

/// A bundled layout by name.
pub fn layout(name: &str) -> Option<Layout> {
    LAYOUTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| Layout::parse(text).expect("bundled layouts parse"))
}

/// All bundled layouts for one board size, in bundle order.
pub fn layouts_of_size(size: usize) -> Vec<Layout> {
    LAYOUTS
        .iter()
        .map(|(_, text)| Layout::parse(text).expect("bundled layouts parse"))
        .filter(|l| l.size() == size)
        .collect()
}

/// A bundled example mosaic with its expected identification.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub label: String,
    pub mosaic: Mosaic,
}

/// The `# label:` value of a mosaic file, if present.
pub fn label_of(text: &str) -> Option<&str> {
    text.lines().find_map(|l| l.strip_prefix('#')?.trim().strip_prefix("label:").map(str::trim))
}

pub fn fixtures() -> Vec<Fixture> {
    MOSAICS
        .iter()
        .map(|(name, text)| Fixture {
            name,
            label: label_of(text).expect("bundled mosaics are labelled").to_string(),
            mosaic: Mosaic::parse(text).expect("bundled mosaics parse"),
        })
        .collect()
}
