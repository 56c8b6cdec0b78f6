//! Dataset loaders and query parsing.
//!
//! Two input formats are supported:
//!
//! * `chars`: one sequence per line of single-character items; lines
//!   starting with `>` are headers and skipped (FASTA-like).
//! * `spmf`: the integer sequence-database format: whitespace-separated
//!   non-negative integers, `-1` terminating an itemset, `-2` terminating a
//!   sequence. The data model here is one item per position, so itemsets of
//!   two or more items are rejected unless `flatten` is requested.
//!
//! Ids are assigned in sorted symbol order (character order for `chars`,
//! numeric order for `spmf`), which makes id order equal dictionary order.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{Pattern, SequenceDatabase, SequenceRecord, SymbolTable};

/// Which loader and rendering conventions a dataset uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    Chars,
    Spmf,
}

/// Load a character-per-item file.
pub fn load_chars(path: &Path) -> Result<SequenceDatabase> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::Load(format!("{}: {e}", path.display())))?;
    parse_chars(&content)
}

/// Parse `chars` content; see [`load_chars`].
pub fn parse_chars(content: &str) -> Result<SequenceDatabase> {
    let mut rows: Vec<Vec<char>> = Vec::new();
    for line in content.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('>') {
            continue;
        }
        rows.push(line.chars().filter(|c| !c.is_whitespace()).collect());
    }
    if rows.is_empty() {
        return Err(Error::Load("no sequences in input".into()));
    }
    let alphabet: BTreeSet<char> = rows.iter().flatten().copied().collect();
    let symbols = SymbolTable::from_sorted(alphabet.iter().map(|c| c.to_string()).collect())?;
    let records = rows
        .into_iter()
        .enumerate()
        .map(|(sid, chars)| {
            let items = chars
                .into_iter()
                .map(|c| symbols.get(&c.to_string()).unwrap())
                .collect();
            SequenceRecord::new(sid as u32, items)
        })
        .collect();
    Ok(SequenceDatabase { records, symbols })
}

/// Load an SPMF-style integer sequence file.
pub fn load_spmf(path: &Path, flatten: bool) -> Result<SequenceDatabase> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::Load(format!("{}: {e}", path.display())))?;
    parse_spmf(&content, flatten)
}

/// Parse `spmf` content; see module docs for the itemset rules.
pub fn parse_spmf(content: &str, flatten: bool) -> Result<SequenceDatabase> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    let mut itemset_len = 0usize;
    let mut itemset_index = 1usize;
    for (lineno, line) in content.lines().enumerate() {
        let line_no = lineno + 1;
        for tok in line.split_whitespace() {
            match tok {
                "-1" => {
                    if itemset_len > 1 && !flatten {
                        return Err(Error::Format {
                            line: line_no,
                            message: format!(
                                "itemset {itemset_index} holds {itemset_len} items; \
                                 the model is one item per position (use flatten to split them)"
                            ),
                        });
                    }
                    itemset_len = 0;
                    itemset_index += 1;
                }
                "-2" => {
                    if itemset_len > 1 && !flatten {
                        return Err(Error::Format {
                            line: line_no,
                            message: format!(
                                "itemset {itemset_index} holds {itemset_len} items; \
                                 the model is one item per position (use flatten to split them)"
                            ),
                        });
                    }
                    rows.push(std::mem::take(&mut current));
                    itemset_len = 0;
                    itemset_index = 1;
                }
                other => {
                    let value: u64 = other.parse().map_err(|_| Error::Format {
                        line: line_no,
                        message: format!("malformed token {other:?}"),
                    })?;
                    current.push(value);
                    itemset_len += 1;
                }
            }
        }
    }
    if !current.is_empty() {
        rows.push(current);
    }
    if rows.is_empty() {
        return Err(Error::Load("no sequences in input".into()));
    }
    let alphabet: BTreeSet<u64> = rows.iter().flatten().copied().collect();
    let symbols = SymbolTable::from_sorted(alphabet.iter().map(|v| v.to_string()).collect())?;
    let records = rows
        .into_iter()
        .enumerate()
        .map(|(sid, values)| {
            let items = values
                .into_iter()
                .map(|v| symbols.get(&v.to_string()).unwrap())
                .collect();
            SequenceRecord::new(sid as u32, items)
        })
        .collect();
    Ok(SequenceDatabase { records, symbols })
}

/// Parse a query string against a loaded database. `chars` queries are one
/// item per character ("TC"); `spmf` queries are comma-separated integers
/// ("3,5"). Symbols absent from the data are interned with no occurrences,
/// so such a query simply matches nothing and mining comes back empty.
pub fn parse_query(db: &mut SequenceDatabase, format: DataFormat, text: &str) -> Result<Pattern> {
    let syms: Vec<String> = match format {
        DataFormat::Chars => text
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_string())
            .collect(),
        DataFormat::Spmf => text
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map(|v| v.to_string())
                    .map_err(|_| Error::InvalidParams(format!("bad query item {t:?}")))
            })
            .collect::<Result<_>>()?,
    };
    if syms.is_empty() {
        return Err(Error::InvalidParams(
            "query sequence must be non-empty".into(),
        ));
    }
    let items = syms.iter().map(|s| db.symbols.intern(s)).collect();
    Ok(Pattern::new(items))
}

/// Render one pattern in the dataset's external symbols: concatenated
/// characters for `chars`, hyphen-separated integers for `spmf`.
pub fn render_pattern(db: &SequenceDatabase, format: DataFormat, pattern: &Pattern) -> String {
    let parts: Vec<&str> = pattern
        .items()
        .iter()
        .map(|&id| db.symbols.symbol(id))
        .collect();
    match format {
        DataFormat::Chars => parts.concat(),
        DataFormat::Spmf => parts.join("-"),
    }
}
