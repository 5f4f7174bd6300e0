//! Bundled diagram corpus: PD codes for the prime knots with up to eight
//! crossings and the prime links with up to seven crossings, keyed by
//! their standard table names. The codes live in `fixtures/*.pd` (one
//! `name PD[...]` entry per line) and are embedded at compile time so
//! every computation runs offline.

use std::collections::BTreeMap;

use crate::diagram::{DiagramError, LinkDiagram};

pub const KNOTS_PD: &str = include_str!("../fixtures/knots.pd");
pub const LINKS_PD: &str = include_str!("../fixtures/links.pd");

/// Parse a corpus file: one `name PD[...]` per line, `#` comments allowed.
pub fn parse_corpus(text: &str) -> Result<Vec<(String, LinkDiagram)>, DiagramError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, pd) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| DiagramError::Parse(format!("corpus line without PD code: `{line}`")))?;
        out.push((name.to_string(), LinkDiagram::parse_pd(pd.trim())?));
    }
    Ok(out)
}

/// All bundled knots (3_1 .. 8_21), in file order.
pub fn knots() -> Vec<(String, LinkDiagram)> {
    parse_corpus(KNOTS_PD).expect("bundled knot corpus is valid")
}

/// All bundled links (L2a1 .. L7n2), in file order.
pub fn links() -> Vec<(String, LinkDiagram)> {
    parse_corpus(LINKS_PD).expect("bundled link corpus is valid")
}

/// Crossing number encoded in a table name like `8_15` or `L7a7`. A
/// bundled diagram may have more crossings than the knot it presents
/// (8_15 is stored as a 9-crossing closed braid), so filtering goes by
/// name, not by diagram size.
fn name_crossings(name: &str) -> usize {
    let digits: String = name
        .trim_start_matches('L')
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    digits.parse().expect("table name starts with a crossing number")
}

/// Knots with at most `max` crossings.
pub fn knots_up_to(max: usize) -> Vec<(String, LinkDiagram)> {
    knots().into_iter().filter(|(n, _)| name_crossings(n) <= max).collect()
}

/// Links with at most `max` crossings.
pub fn links_up_to(max: usize) -> Vec<(String, LinkDiagram)> {
    links().into_iter().filter(|(n, _)| name_crossings(n) <= max).collect()
}

/// Look up a bundled diagram by its table name.
pub fn by_name(name: &str) -> Option<LinkDiagram> {
    let map: BTreeMap<String, LinkDiagram> = knots().into_iter().chain(links()).collect();
    map.get(name).cloned()
}
