use std::collections::HashSet;
use std::path::Path;

use super::word::{BraidWord, FramedBraidWord};
use crate::error::{Error, Result};

/// One entry of a link catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkRecord {
    pub name: String,
    pub word: BraidWord,
    pub framing: Option<Vec<i64>>,
    /// Expected invariants, `(key, polynomial text)`.
    pub fixtures: Vec<(String, String)>,
}

impl LinkRecord {
    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn components(&self) -> usize {
        self.word.closure_components().0
    }

    pub fn fixture(&self, key: &str) -> Option<&str> {
        self.fixtures
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// The record as a framed braid modulo `d` (zero framing if none given).
    pub fn framed(&self, d: u32) -> Result<FramedBraidWord> {
        let framing = self
            .framing
            .clone()
            .unwrap_or_else(|| vec![0; self.strands()]);
        FramedBraidWord::new(self.word.clone(), framing, d)
    }
}

/// Parses catalog text: one record per line,
/// `name|n|letters|framings|key=poly|key=poly...`, with `#` comments.
pub fn parse_catalog(text: &str) -> Result<Vec<LinkRecord>> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Catalog {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() < 3 {
            return Err(err("expected at least name|n|letters".into()));
        }
        let name = fields[0].to_string();
        if name.is_empty() {
            return Err(err("empty name".into()));
        }
        let n: usize = fields[1]
            .parse()
            .map_err(|_| err(format!("bad strand count {:?}", fields[1])))?;
        let letters = fields[2]
            .split_whitespace()
            .map(|t| t.parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err(format!("bad letters {:?}", fields[2])))?;
        let word = BraidWord::new(n, letters).map_err(|e| err(e.to_string()))?;
        let framing = match fields.get(3) {
            Some(f) if !f.is_empty() => {
                let v = f
                    .split(',')
                    .map(|t| t.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err(format!("bad framings {f:?}")))?;
                if v.len() != n {
                    return Err(err(format!("{} framings for {n} strands", v.len())));
                }
                Some(v)
            }
            _ => None,
        };
        let mut fixtures = Vec::new();
        for f in fields.iter().skip(4).filter(|f| !f.is_empty()) {
            let (k, v) = f
                .split_once('=')
                .ok_or_else(|| err(format!("fixture without '=': {f:?}")))?;
            fixtures.push((k.trim().to_string(), v.trim().to_string()));
        }
        if !names.insert(name.clone()) {
            return Err(Error::DuplicateName(name));
        }
        out.push(LinkRecord {
            name,
            word,
            framing,
            fixtures,
        });
    }
    Ok(out)
}

/// The catalog shipped with the library.
pub const BUILTIN_CATALOG: &str = include_str!("../../data/links.catalog");

/// Parses [`BUILTIN_CATALOG`].
pub fn builtin_catalog() -> Vec<LinkRecord> {
    parse_catalog(BUILTIN_CATALOG).expect("bundled catalog parses")
}

/// Reads and parses a catalog file.
pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<LinkRecord>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_catalog(&text)
}
