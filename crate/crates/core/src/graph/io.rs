//! Edge-list and graph6 readers/writers.
//!
//! Edge-list text: a header line `n m` followed by `m` lines `u v` with
//! 0-based ids. Blank lines and lines starting with `#` are ignored.

use super::{Graph, DEFAULT_VERTEX_LIMIT};
use crate::error::GraphError;

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    parse_edge_list_with_limit(text, DEFAULT_VERTEX_LIMIT)
}

pub fn parse_edge_list_with_limit(text: &str, limit: usize) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    if n > limit {
        return Err(GraphError::TooLarge { n, limit });
    }
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        g.try_add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, s: &str) -> Result<[usize; 2], GraphError> {
    let mut it = s.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            msg: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok([a, b])
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    parse_graph6_with_limit(s, DEFAULT_VERTEX_LIMIT)
}

/// Decodes a graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6_with_limit(s: &str, limit: usize) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6(format!("byte {b} outside 63..=126")));
        }
    }
    let (n, rest) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(GraphError::Graph6("truncated size field".into()));
        }
        (group(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(GraphError::Graph6("truncated size field".into()));
        }
        (group(&bytes[2..8]), &bytes[8..])
    };
    if n > limit {
        return Err(GraphError::TooLarge { n, limit });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} adjacency bytes for n={n}, got {}",
            rest.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = rest[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = rest[need - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

fn group(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            cur = (cur << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if k % 6 != 0 {
        cur <<= 6 - k % 6;
        out.push(cur + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses either format: a single-token first line is read as graph6,
/// anything else as an edge list.
pub fn parse_any(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if !first.is_empty() && first.split_whitespace().count() == 1 {
        parse_graph6(first)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;
    use proptest::prelude::*;

    #[test]
    fn known_graph6_strings() {
        // standard encodings from the format description
        assert_eq!(to_graph6(&patterns::cycle(5)), "Dhc");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), patterns::cycle(5));
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn graph6_large_header() {
        let g = patterns::cycle(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        // n = 2 has one adjacency bit; remaining five must be zero
        assert!(parse_graph6("A_").is_ok());
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = patterns::petersen();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(GraphError::SelfLoop(1)));
        assert_eq!(parse_edge_list("3 2\n0 1\n1 0\n"), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 7\n").is_err());
        assert!(matches!(
            parse_edge_list_with_limit("10 0\n", 5),
            Err(GraphError::TooLarge { n: 10, limit: 5 })
        ));
    }

    #[test]
    fn parse_any_detects_format() {
        assert_eq!(parse_any("C~\n").unwrap(), Graph::complete(4));
        assert_eq!(parse_any("2 1\n0 1\n").unwrap(), Graph::complete(2));
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(n in 0usize..80, seed in any::<u64>()) {
            let g = crate::oracle::instances::gnp(n, 0.3, seed);
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
