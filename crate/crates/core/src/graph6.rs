//! graph6 encoding (short form up to 62 vertices, 4-byte long form above).
//!
//! The upper triangle is read column by column: for `j` in `1..n`, for
//! `i` in `0..j`, one bit for the pair `(i, j)`. Bits are packed six to a
//! byte, most significant first, zero padded, and offset by 63.

use crate::bitset::{VertexSet, CAPACITY};
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sixbits(bytes: &[u8], i: usize) -> Result<u8> {
    match bytes.get(i) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(parse_err(
            i,
            format!("byte 0x{b:02x} outside the graph6 range"),
        )),
        None => Err(parse_err(i, "unexpected end of input")),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let body = text.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if bytes.len() <= start {
        return Err(parse_err(start, "empty input"));
    }
    let (n, mut pos) = if bytes[start] == b'~' {
        if bytes.get(start + 1) == Some(&b'~') {
            let mut n = 0usize;
            for k in 0..6 {
                n = (n << 6) | sixbits(bytes, start + 2 + k)? as usize;
            }
            (n, start + 8)
        } else {
            let mut n = 0usize;
            for k in 0..3 {
                n = (n << 6) | sixbits(bytes, start + 1 + k)? as usize;
            }
            if n <= 62 {
                return Err(parse_err(
                    start,
                    "long-form order used for a short-form size",
                ));
            }
            (n, start + 4)
        }
    } else {
        (sixbits(bytes, start)? as usize, start + 1)
    };
    if n > CAPACITY {
        return Err(Error::Capacity(format!(
            "graph6 order {n} exceeds {CAPACITY} vertices"
        )));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if bytes.len() - pos != expected {
        return Err(parse_err(
            pos,
            format!(
                "expected {expected} data bytes for order {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut rows = vec![VertexSet::new(); n];
    let mut bit = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                cur = sixbits(bytes, pos)?;
                pos += 1;
            }
            if (cur >> (5 - bit % 6)) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            bit += 1;
        }
    }
    if expected > 0 {
        // validate the last byte even when every bit in it is padding
        sixbits(bytes, bytes.len() - 1)?;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| from_graph6(l.trim()))
        .collect()
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        from_graph6(&s).map_err(serde::de::Error::custom)
    }
}
