//! The graph6 text format for undirected graphs.
//!
//! Order bytes are `n + 63` (or `~` followed by three bytes for larger
//! graphs), then the upper triangle in column order, six bits per byte.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} outside the printable graph6 range")]
    BadByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("graph with {0} vertices is too large for graph6")]
    TooLarge(usize),
    #[error("padding bits are not zero")]
    DirtyPadding,
}

const BIG: usize = 258_047;

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= BIG {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ascii"))
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    let vals: Vec<u8> = bytes
        .iter()
        .map(|&b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Graph6Error::BadByte(b))
            }
        })
        .collect::<Result<_, _>>()?;
    let (n, data) = if first != 126 {
        (vals[0] as usize, &vals[1..])
    } else {
        if vals.len() < 4 || vals[1] == 63 {
            // 8-byte headers describe graphs far beyond anything useful here.
            return Err(Graph6Error::BadLength {
                expected: 4,
                found: vals.len(),
            });
        }
        let n = (vals[1] as usize) << 12 | (vals[2] as usize) << 6 | vals[3] as usize;
        (n, &vals[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: data.len(),
        });
    }
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::DirtyPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are simple"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4).unwrap(), "C~");
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3).unwrap(), "Bg");
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(decode("C~").unwrap(), k4);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("C"), Err(Graph6Error::BadLength { expected: 1, found: 0 }));
        assert_eq!(decode("C\u{7}"), Err(Graph6Error::BadByte(7)));
        // "Bh" sets a padding bit after the three edge bits of a 3-vertex graph
        assert_eq!(decode("Bh"), Err(Graph6Error::DirtyPadding));
    }

    #[test]
    fn large_header() {
        let g = Graph::new(70, (0..69).map(|i| (i, i + 1))).unwrap();
        let s = encode(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }
}
