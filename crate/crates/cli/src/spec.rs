use std::fs;

use domgame_core::graph::{named_graph, read_edge_list, Graph};

use crate::Failure;

/// Resolves `family:name:p1:p2...` (the `family:` prefix is optional when
/// no file of that name exists) or an edge-list file path.
pub fn load_graph(spec: &str) -> Result<Graph, Failure> {
    if let Some(rest) = spec.strip_prefix("family:") {
        return parse_family(rest);
    }
    match fs::read_to_string(spec) {
        Ok(text) => {
            let g = read_edge_list(&text).map_err(|e| Failure::usage(format!("{spec}: {e}")))?;
            Ok(if g.name().is_some() { g } else { g.with_name(spec) })
        }
        Err(_) if spec.contains(':') || !spec.contains('.') => parse_family(spec),
        Err(e) => Err(Failure::usage(format!("cannot read {spec}: {e}"))),
    }
}

pub fn parse_family(spec: &str) -> Result<Graph, Failure> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params = parts
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad parameter '{p}' in '{spec}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let g = named_graph(name, &params).map_err(|e| Failure::usage(format!("{spec}: {e}")))?;
    if g.name().is_none() {
        return Ok(g.with_name(spec));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        assert_eq!(load_graph("family:path:5").unwrap().n(), 5);
        assert_eq!(load_graph("cycle:6").unwrap().n(), 6);
        assert_eq!(load_graph("family:kneser:5:2").unwrap().edge_count(), 15);
        assert_eq!(load_graph("family:petersen").unwrap().n(), 10);
        assert!(load_graph("family:path:x").is_err());
        assert!(load_graph("family:nothing:3").is_err());
        assert!(load_graph("missing-file.txt").is_err());
    }
}
