//! Plain-text spec files.
//!
//! ```text
//! almost-lie-spec v1
//! base_dim 1
//! rank 2
//! kernel_rank 1
//! ANCHOR
//! 1 1 : 1
//! STRUCTURE
//! 1 2 2 : x1
//! KERNEL_FRAME
//! 2 1 : 1
//! KERNEL_PROJECTION
//! 1 2 : 1
//! END
//! ```
//!
//! Indices are 1-based. `ANCHOR` lines `a i : p` set `rho^i_a`, `STRUCTURE`
//! lines `a b c : p` set `C^c_ab` (and `C^c_ba = -p`), `KERNEL_FRAME` lines
//! `a B : p` set `t^a_B`, `KERNEL_PROJECTION` lines `B a : p` set `s^B_a`.
//! Entries not listed are zero, `#` starts a comment. The printer lists
//! nonzero entries in index order with `a < b` in `STRUCTURE`, so printing a
//! parsed file reproduces the printer's output byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::algebroid::AlgebroidSpec;
use crate::error::{Error, Result};
use crate::scalars::Polynomial;

const HEADER: &str = "almost-lie-spec v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Block {
    Anchor,
    Structure,
    KernelFrame,
    KernelProjection,
}

impl Block {
    fn from_name(s: &str) -> Option<Block> {
        match s {
            "ANCHOR" => Some(Block::Anchor),
            "STRUCTURE" => Some(Block::Structure),
            "KERNEL_FRAME" => Some(Block::KernelFrame),
            "KERNEL_PROJECTION" => Some(Block::KernelProjection),
            _ => None,
        }
    }

    fn arity(self) -> usize {
        if self == Block::Structure {
            3
        } else {
            2
        }
    }
}

impl AlgebroidSpec {
    /// Serializes the skew part of the bracket (entries with `a < b`) together
    /// with anchor and kernel data.
    pub fn to_spec_text(&self) -> String {
        let mut out = String::new();
        let (m, n, r) = (self.base_dim(), self.rank(), self.kernel_rank());
        let _ = writeln!(out, "{HEADER}\nbase_dim {m}\nrank {n}\nkernel_rank {r}");
        out.push_str("ANCHOR\n");
        for a in 0..n {
            for i in 0..m {
                entry(&mut out, &[a, i], self.anchor_entry(a, i));
            }
        }
        out.push_str("STRUCTURE\n");
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    entry(&mut out, &[a, b, c], self.structure_entry(a, b, c));
                }
            }
        }
        out.push_str("KERNEL_FRAME\n");
        for a in 0..n {
            for b in 0..r {
                entry(&mut out, &[a, b], self.kernel_frame_entry(a, b));
            }
        }
        out.push_str("KERNEL_PROJECTION\n");
        for b in 0..r {
            for a in 0..n {
                entry(&mut out, &[b, a], self.kernel_projection_entry(b, a));
            }
        }
        out.push_str("END\n");
        out
    }

    pub fn parse_spec(text: &str) -> Result<AlgebroidSpec> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut next = |what: &str| lines.next().ok_or_else(|| Error::parse(0, format!("unexpected end of file, expected {what}")));

        let (line, header) = next("header")?;
        if header != HEADER {
            return Err(Error::parse(line, format!("expected `{HEADER}`")));
        }
        let mut dims = [0usize; 3];
        for (slot, key) in dims.iter_mut().zip(["base_dim", "rank", "kernel_rank"]) {
            let (line, content) = next(key)?;
            let value = content
                .strip_prefix(key)
                .filter(|rest| rest.starts_with(char::is_whitespace))
                .and_then(|rest| rest.trim().parse().ok())
                .ok_or_else(|| Error::parse(line, format!("expected `{key} <number>`")))?;
            *slot = value;
        }
        let [m, n, r] = dims;
        let mut builder = AlgebroidSpec::builder(m, n, r);
        let mut block: Option<Block> = None;
        let mut seen_blocks = BTreeSet::new();
        let mut seen_entries = BTreeSet::new();
        loop {
            let (line, content) = next("END")?;
            if content == "END" {
                break;
            }
            if let Some(b) = Block::from_name(content) {
                if !seen_blocks.insert(b) {
                    return Err(Error::parse(line, format!("block {content} appears twice")));
                }
                block = Some(b);
                continue;
            }
            let b = block.ok_or_else(|| Error::parse(line, "entry outside of a block"))?;
            let (idx, poly) = content
                .split_once(':')
                .ok_or_else(|| Error::parse(line, "expected `<indices> : <polynomial>`"))?;
            let indices: Vec<usize> = idx
                .split_whitespace()
                .map(|w| w.parse::<usize>().ok().filter(|&v| v > 0).map(|v| v - 1))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::parse(line, format!("bad index list `{}`", idx.trim())))?;
            if indices.len() != b.arity() {
                return Err(Error::parse(line, format!("expected {} indices", b.arity())));
            }
            let bounds: &[usize] = match b {
                Block::Anchor => &[n, m],
                Block::Structure => &[n, n, n],
                Block::KernelFrame => &[n, r],
                Block::KernelProjection => &[r, n],
            };
            if let Some((i, bound)) = indices.iter().zip(bounds).find(|(i, b)| *i >= *b) {
                return Err(Error::parse(line, format!("index {} outside 1..={bound}", i + 1)));
            }
            let mut value = Polynomial::parse_at(poly.trim(), m, line)?;
            let mut key = indices.clone();
            if b == Block::Structure {
                if key[0] == key[1] {
                    return Err(Error::parse(line, "structure entries need a != b"));
                }
                if key[0] > key[1] {
                    key.swap(0, 1);
                    value = -&value;
                }
            }
            if !seen_entries.insert((b, key.clone())) {
                return Err(Error::parse(line, "entry given twice"));
            }
            builder = match b {
                Block::Anchor => builder.anchor(key[0], key[1], value),
                Block::Structure => builder.structure(key[0], key[1], key[2], value),
                Block::KernelFrame => builder.kernel_frame(key[0], key[1], value),
                Block::KernelProjection => builder.kernel_projection(key[0], key[1], value),
            };
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::parse(line, "content after END"));
        }
        builder.build()
    }
}

fn entry(out: &mut String, indices: &[usize], value: &Polynomial) {
    if value.is_zero() {
        return;
    }
    let idx: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    let _ = writeln!(out, "{} : {value}", idx.join(" "));
}
