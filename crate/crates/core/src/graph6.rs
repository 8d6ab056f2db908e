//! graph6 codec: the standard printable-ASCII encoding of undirected simple
//! graphs, used to ingest underlying-graph catalogs.
//!
//! Decoded graphs come back as all-positive [`SignedGraph`]s.

use crate::graph::{SignedGraph, MAX_VERTICES};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line.
pub fn decode(line: &str) -> Result<SignedGraph> {
    decode_at_line(line, 0)
}

fn decode_at_line(line: &str, line_no: usize) -> Result<SignedGraph> {
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let s = line.strip_prefix(HEADER).unwrap_or(line).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty graph6 line".into()));
    }
    let (n, mut pos): (usize, usize) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(err("graph6 order beyond supported range".into()));
        }
        if bytes.len() < 4 {
            return Err(err("truncated graph6 order field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(err(format!("invalid graph6 byte {b}")));
            }
            n = (n << 6) | (b as usize - 63);
        }
        (n, 4)
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(err(format!("invalid graph6 byte {}", bytes[0])));
        }
        (bytes[0] as usize - 63, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "graph6 order",
            value: n,
            bound: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(err(format!(
            "expected {} data bytes for order {}, found {}",
            nbytes,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(err(format!("invalid graph6 byte {byte}")));
            }
            let group = byte - 63;
            if (group >> (5 - bit_index % 6)) & 1 == 1 {
                edges.push((i, j, 1i64));
            }
            bit_index += 1;
            if bit_index >= nbits {
                break 'outer;
            }
        }
    }
    pos += nbytes;
    if bytes.len() > pos {
        return Err(err("trailing bytes after graph6 data".into()));
    }
    SignedGraph::build(n, &edges)
}

/// Encodes the underlying graph of `g` (signs are dropped).
pub fn encode(g: &SignedGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        out.push((((n >> 12) & 0x3f) as u8 + 63) as char);
        out.push((((n >> 6) & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    out
}

/// Result of parsing a multi-line graph6 stream.
pub struct Graph6File {
    pub graphs: Vec<SignedGraph>,
    pub errors: Vec<(usize, Error)>,
}

/// Parses a whole graph6 text. In strict mode the first bad line aborts; in
/// lenient mode bad lines are collected with their 1-based line numbers and
/// the good ones are returned.
pub fn parse_str(text: &str, lenient: bool) -> Result<Graph6File> {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        match decode_at_line(line, line_no) {
            Ok(g) => graphs.push(g),
            Err(e) if lenient => errors.push((line_no, e)),
            Err(e) => return Err(e),
        }
    }
    Ok(Graph6File { graphs, errors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k4() {
        // 'C~' is K4 in standard graph6
        let g = decode("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn decodes_with_header() {
        let g = decode(">>graph6<<C~").unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn empty_file_gives_empty_list() {
        let f = parse_str("", true).unwrap();
        assert!(f.graphs.is_empty());
        assert!(f.errors.is_empty());
    }

    #[test]
    fn corrupt_line_is_reported_with_line_number() {
        let text = "C~\n\u{7f}bad\nC~\n";
        let f = parse_str(text, true).unwrap();
        assert_eq!(f.graphs.len(), 2);
        assert_eq!(f.errors.len(), 1);
        assert_eq!(f.errors[0].0, 2);
        assert!(parse_str(text, false).is_err());
    }

    #[test]
    fn round_trip() {
        let g = SignedGraph::build(5, &[(0, 2, 1), (0, 4, 1), (1, 3, 1), (3, 4, 1)]).unwrap();
        let s = encode(&g);
        assert_eq!(s, "DQc");
        assert_eq!(decode(&s).unwrap(), g);
    }
}
