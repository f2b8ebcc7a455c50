//! Small text parsers shared by the command line and the claim recipes.

use crate::error::{Error, Result};

/// Parses a comma-separated list of non-negative integers, e.g. `"1,1,1,3"`.
///
/// Whitespace around entries is ignored; an empty string is the empty list.
pub fn parse_int_list(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<u64>().map_err(|e| Error::Parse(format!("bad list entry {item:?}: {e}")))
        })
        .collect()
}
