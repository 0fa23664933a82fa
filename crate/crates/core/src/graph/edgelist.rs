use std::fmt::Write as _;

use super::{Graph, GraphError};

/// Parses the edge-list text format: an optional `# name` comment, a header
/// line `n m`, then `m` lines `u v` with `u < v`.
pub fn read_edge_list(text: &str) -> Result<Graph, GraphError> {
    let parse_err = |line: usize, message: String| GraphError::Parse { line, message };
    let mut name = None;
    let mut header = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if name.is_none() && !comment.is_empty() {
                name = Some(comment.to_string());
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(line_no, format!("expected two integers, got {line:?}")));
        };
        let a: usize = a
            .parse()
            .map_err(|_| parse_err(line_no, format!("not an integer: {a:?}")))?;
        let b: usize = b
            .parse()
            .map_err(|_| parse_err(line_no, format!("not an integer: {b:?}")))?;
        if header.is_none() {
            header = Some((a, b));
        } else {
            if a >= b {
                return Err(parse_err(line_no, format!("edge {a} {b} must satisfy u < v")));
            }
            edges.push((line_no, a, b));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header".into()))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let mut g = Graph::empty(n);
    for (line_no, u, v) in edges {
        g.add_edge(u, v)
            .map_err(|e| parse_err(line_no, e.to_string()))?;
    }
    Ok(match name {
        Some(name) => g.with_name(name),
        None => g,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        writeln!(out, "# {name}").unwrap();
    }
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::kneser;
    use proptest::prelude::*;

    #[test]
    fn reads_named_graph() {
        let g = read_edge_list("# triangle\n3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g.name(), Some("triangle"));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "3 2\n0 1\n0 1\n",
            "3 1\n1 1\n",
            "3 1\n2 1\n",
            "3 2\n0 1\n",
            "3 1\n0 5\n",
            "3 1\n0 x\n",
            "",
            "3 1\n0 1 2\n",
        ] {
            assert!(read_edge_list(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn petersen_round_trip() {
        let p = kneser(5, 2).unwrap();
        assert_eq!(read_edge_list(&write_edge_list(&p)).unwrap(), p);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
