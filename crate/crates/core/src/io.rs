//! Graph parsing and emission: a plain edge-list format for humans and
//! graph6 (short form) for bulk catalogues.
//!
//! Both parsers are total over arbitrary byte input: every failure is a
//! structured error carrying a position, never a panic.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the edge-list parser accepts. Keeps hostile headers
/// from forcing large allocations.
pub const MAX_EDGELIST_N: usize = 4096;

/// Parses the edge-list format: first non-comment line `n m`, then `m` lines
/// `u v`. Lines starting with `#` and blank lines are ignored. Tokens are
/// whitespace-separated decimal integers.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected header 'n m', found {} token(s)", tokens.len()),
                    });
                }
                let n = parse_usize(tokens[0], line_no)?;
                let m = parse_usize(tokens[1], line_no)?;
                if n > MAX_EDGELIST_N {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("n = {n} exceeds the supported maximum {MAX_EDGELIST_N}"),
                    });
                }
                if m > n * n.saturating_sub(1) / 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("m = {m} exceeds n(n-1)/2 for n = {n}"),
                    });
                }
                header = Some((n, m));
            }
            Some((n, m)) => {
                if pairs.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unexpected content after {m} edge(s)"),
                    });
                }
                if tokens.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected edge 'u v', found {} token(s)", tokens.len()),
                    });
                }
                let u = parse_usize(tokens[0], line_no)?;
                let v = parse_usize(tokens[1], line_no)?;
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("endpoint out of range for n = {n}"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("loop at vertex {u}"),
                    });
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("duplicate edge ({}, {})", key.0, key.1),
                    });
                }
                pairs.push(key);
            }
        }
    }

    match header {
        None => Err(Error::Parse {
            line: last_line.max(1),
            msg: "missing 'n m' header".into(),
        }),
        Some((n, m)) => {
            if pairs.len() != m {
                return Err(Error::Parse {
                    line: last_line + 1,
                    msg: format!("expected {m} edge(s), found {}", pairs.len()),
                });
            }
            Ok(Graph::new(n, &pairs).expect("edge list was validated"))
        }
    }
}

/// Writes the edge-list format; `parse_edgelist` reproduces the graph
/// exactly, and the emitted edge lines are in lexicographic order.
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one short-form graph6 value: byte `n + 63`, then
/// ceil(n(n-1)/2 / 6) bytes of 6 data bits each (offset by 63, first bit of
/// a group in the high position), in upper-triangle order x(0,1), x(0,2),
/// x(1,2), x(0,3), ... Long form (`~` prefix, n >= 63) is rejected.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty graph6 value".into(),
        });
    }
    if bytes[0] == b'~' {
        return Err(Error::Parse {
            line: 1,
            msg: "long-form graph6 (n >= 63) is not supported".into(),
        });
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Error::Parse {
            line: 1,
            msg: format!("invalid graph6 byte 0x{:02x} at position 0", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let total = n * n.saturating_sub(1) / 2;
    let need = total.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < need {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "truncated graph6 value: expected {need} data byte(s), found {}",
                data.len()
            ),
        });
    }
    if data.len() > need {
        return Err(Error::Parse {
            line: 1,
            msg: format!("trailing bytes after {need} data byte(s)"),
        });
    }

    let mut pairs = Vec::new();
    let (mut u, mut v) = (0usize, 1usize);
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("invalid graph6 byte 0x{b:02x} at position {}", i + 1),
            });
        }
        let group = b - 63;
        for j in 0..6 {
            let bit = group >> (5 - j) & 1;
            let slot = i * 6 + j;
            if slot >= total {
                if bit == 1 {
                    return Err(Error::Parse {
                        line: 1,
                        msg: "nonzero padding bits".into(),
                    });
                }
                continue;
            }
            if bit == 1 {
                pairs.push((u, v));
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(Graph::new(n, &pairs).expect("graph6 bits decode to a simple graph"))
}

/// Canonical short-form graph6 encoding; `parse_graph6` is its exact
/// inverse. Requires n < 63.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n >= 63 {
        return Err(Error::Graph6Range { n });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let (mut u, mut v) = (0usize, 1usize);
    for slot in 0..total {
        if g.edge_index(u, v).is_some() {
            group |= 1 << (5 - slot % 6);
        }
        if slot % 6 == 5 {
            out.push(group + 63);
            group = 0;
        }
        u += 1;
        if u == v {
            u = 0;
            v += 1;
        }
    }
    if total % 6 != 0 {
        out.push(group + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("invalid integer '{token}'"),
    })
}
