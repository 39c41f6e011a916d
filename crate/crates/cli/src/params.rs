//! Recipe parameter files: labelled blocks of `indices : polynomial` lines,
//! in the same style as spec files.
//!
//! ```text
//! LIE
//! 1 2 3 : 1
//! ANCHOR
//! 1 1 : x2
//! ```

use std::collections::BTreeMap;

use almost_lie::{Error, Polynomial};
use anyhow::{bail, Context, Result};

const BLOCKS: [&str; 8] = ["LIE", "ANCHOR", "TWIST", "KERNEL_FRAME", "KERNEL_PROJECTION", "PI", "H", "B"];

#[derive(Clone, Debug)]
pub struct RawEntry {
    pub line: usize,
    /// Zero based.
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, Default)]
pub struct Params {
    blocks: BTreeMap<String, Vec<RawEntry>>,
}

impl Params {
    pub fn parse(text: &str) -> Result<Params> {
        let mut params = Params::default();
        let mut current: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() || content == "END" {
                continue;
            }
            if BLOCKS.contains(&content) {
                if params.blocks.contains_key(content) {
                    bail!("line {line}: block {content} appears twice");
                }
                params.blocks.insert(content.to_string(), Vec::new());
                current = Some(content.to_string());
                continue;
            }
            let block = current.as_ref().with_context(|| format!("line {line}: entry outside of a block"))?;
            let (idx, value) =
                content.split_once(':').with_context(|| format!("line {line}: expected `<indices> : <value>`"))?;
            let indices = idx
                .split_whitespace()
                .map(|w| w.parse::<usize>().ok().filter(|&v| v > 0).map(|v| v - 1))
                .collect::<Option<Vec<_>>>()
                .with_context(|| format!("line {line}: bad index list `{}`", idx.trim()))?;
            params.blocks.get_mut(block).expect("block exists").push(RawEntry {
                line,
                indices,
                value: value.trim().to_string(),
            });
        }
        Ok(params)
    }

    pub fn has(&self, block: &str) -> bool {
        self.blocks.contains_key(block)
    }

    /// Entries of `block` with `arity` indices each, values parsed as
    /// polynomials in `nvars` variables, indices checked against `bounds`.
    pub fn entries(&self, block: &str, bounds: &[usize], nvars: usize) -> Result<Vec<(Vec<usize>, Polynomial)>> {
        let Some(entries) = self.blocks.get(block) else {
            return Ok(Vec::new());
        };
        entries
            .iter()
            .map(|e| {
                if e.indices.len() != bounds.len() {
                    bail!("line {}: {block} entries take {} indices", e.line, bounds.len());
                }
                if let Some((i, b)) = e.indices.iter().zip(bounds).find(|(i, b)| *i >= *b) {
                    bail!("line {}: index {} outside 1..={b}", e.line, i + 1);
                }
                let value = Polynomial::parse(&e.value, nvars).map_err(|err| match err {
                    Error::Parse { msg, .. } => anyhow::anyhow!("line {}: {msg}", e.line),
                    other => anyhow::anyhow!("line {}: {other}", e.line),
                })?;
                Ok((e.indices.clone(), value))
            })
            .collect()
    }

    /// One more than the largest index in position `pos` of the listed blocks.
    pub fn extent(&self, blocks: &[&str], pos: usize) -> usize {
        blocks
            .iter()
            .filter_map(|b| self.blocks.get(*b))
            .flatten()
            .filter_map(|e| e.indices.get(pos).map(|i| i + 1))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_blocks() {
        let p = Params::parse("# comment\nLIE\n1 2 3 : 1\nANCHOR\n1 1 : x1 + 2\nEND\n").unwrap();
        let lie = p.entries("LIE", &[3, 3, 3], 0).unwrap();
        assert_eq!(lie[0].0, vec![0, 1, 2]);
        let anchor = p.entries("ANCHOR", &[3, 1], 1).unwrap();
        assert_eq!(anchor[0].1.to_string(), "x1 + 2");
        assert_eq!(p.extent(&["LIE"], 2), 3);
        assert!(!p.has("PI"));
    }

    #[test]
    fn errors_name_lines() {
        let err = Params::parse("LIE\n1 2 : 1\n").unwrap().entries("LIE", &[3, 3, 3], 0).unwrap_err();
        assert!(err.to_string().starts_with("line 2:"), "{err}");
        let err = Params::parse("ANCHOR\n1 1 : x3\n").unwrap().entries("ANCHOR", &[2, 2], 2).unwrap_err();
        assert!(err.to_string().starts_with("line 2:"), "{err}");
        assert!(Params::parse("1 1 : 1\n").is_err());
        assert!(Params::parse("LIE\nLIE\n").is_err());
    }
}
