//! graph6 text encoding, as written by nauty's `geng` and `showg`.
//!
//! A record is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x01 x02 x12 x03 x13 x23 ...`), packed
//! big-endian into 6-bit groups, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;
const HEADER: &str = ">>graph6<<";

pub fn encode(graph: &Graph) -> String {
    let n = graph.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else {
        // Orders beyond the 18-bit form are outside what this crate handles.
        assert!(n <= LONG_MAX, "graph6 encoding supports n <= {LONG_MAX}");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let err = |offset: usize, reason: String| Error::Graph6 { offset: base + offset, reason };

    for (i, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(err(i, format!("byte {byte} outside [63, 126]")));
        }
    }
    let Some(&first) = body.first() else {
        return Err(err(0, "empty record".into()));
    };

    let (n, mut pos) = if first < 126 {
        ((first - OFFSET) as usize, 1)
    } else {
        if body.get(1) == Some(&126) {
            return Err(err(1, format!("orders above {LONG_MAX} are not supported")));
        }
        if body.len() < 4 {
            return Err(err(body.len(), "truncated long-form order".into()));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        if n <= SHORT_MAX {
            return Err(err(0, format!("long-form header used for n = {n}")));
        }
        (n, 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let groups = bits.div_ceil(6);
    if body.len() - pos < groups {
        return Err(err(body.len(), format!("truncated: expected {groups} bit groups")));
    }
    if body.len() - pos > groups {
        return Err(err(pos + groups, "trailing bytes after adjacency data".into()));
    }
    let padding = groups * 6 - bits;
    if padding > 0 && (body[body.len() - 1] - OFFSET) & ((1 << padding) - 1) != 0 {
        return Err(err(body.len() - 1, "nonzero padding bits".into()));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += groups;
    debug_assert_eq!(pos, body.len());
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_records() {
        assert_eq!(decode("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(decode("B?").unwrap(), Graph::empty(3).unwrap());
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
        // example from the nauty format description
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn tolerates_newline_and_header() {
        assert_eq!(decode("Bw\n").unwrap().edge_count(), 3);
        assert_eq!(decode(">>graph6<<Bw\r\n").unwrap().edge_count(), 3);
    }

    #[test]
    fn errors_name_the_offset() {
        match decode("B w") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(decode("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode("Bww"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(decode("A`"), Err(Error::Graph6 { .. })));
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(decode("~?"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn long_form_round_trip() {
        let g = Graph::cycle(100).unwrap();
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99][..]);
        assert_eq!(decode(&s).unwrap(), g);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(62)) {
            let s = encode(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
