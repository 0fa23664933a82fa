use super::{
    bridge, cartesian_product, cayley_abelian, complete, cycle, dangle, even_caterpillar, grid,
    hypercube, kneser, path, power, star, sunlet, Graph, GraphError, GroupSpec,
};

/// Names accepted by [`named_graph`], with their parameter lists.
pub const NAMED_FAMILIES: &[(&str, &str)] = &[
    ("path", "n"),
    ("cycle", "n"),
    ("complete", "n"),
    ("star", "m"),
    ("hypercube", "d"),
    ("grid", "k:m"),
    ("kneser", "m:t"),
    ("petersen", ""),
    ("sunlet", "k"),
    ("caterpillar", "r:spine"),
    ("cycle_power", "n:k"),
    ("torus", "n1:n2[:...]"),
    ("dangled_stars", "n:m"),
    ("bridged_stars", "m:copies"),
    ("cycle_path", "n:m"),
    ("abelian", "n1[:n2...]"),
];

fn arity(name: &str, params: &[usize], want: usize) -> Result<(), GraphError> {
    if params.len() == want {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(format!(
            "{name} takes {want} parameter(s), got {}",
            params.len()
        )))
    }
}

/// `C_n` with a copy of `K_{1,m}` joined at its center to every vertex.
pub fn dangled_stars(n: usize, m: usize) -> Result<Graph, GraphError> {
    let c = cycle(n)?;
    let xs: Vec<usize> = (0..n).collect();
    let hs = vec![(star(m)?, 0); n];
    Ok(dangle(&c, &xs, &hs)?.graph.with_name(format!("C{n}*K1,{m}")))
}

/// `K_{1,m}` with `copies` further copies bridged center to center. The
/// base block comes first, then each copy in order.
pub fn bridged_stars(m: usize, copies: usize) -> Result<Graph, GraphError> {
    let s = star(m)?;
    let hs = vec![(s.clone(), 0); copies];
    Ok(bridge(&s, 0, &hs)?.graph.with_name(format!("K1,{m}-(K1,{m})^{copies}")))
}

/// `C_{n_1} □ ... □ C_{n_d}`.
pub fn torus(ns: &[usize]) -> Result<Graph, GraphError> {
    let (first, rest) = ns
        .split_first()
        .ok_or_else(|| GraphError::InvalidParameter("torus needs at least one cycle".into()))?;
    let mut g = cycle(*first)?;
    for &n in rest {
        g = cartesian_product(&g, &cycle(n)?)?;
    }
    let label: Vec<String> = ns.iter().map(|n| format!("C{n}")).collect();
    Ok(g.with_name(label.join("x")))
}

/// Builds a graph from a family name and integer parameters, as used by
/// the `family:name:params` syntax of the command line.
pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let p = params;
    let g = match name {
        "path" => {
            arity(name, p, 1)?;
            path(p[0])?.with_name(format!("P{}", p[0]))
        }
        "cycle" => {
            arity(name, p, 1)?;
            cycle(p[0])?.with_name(format!("C{}", p[0]))
        }
        "complete" => {
            arity(name, p, 1)?;
            complete(p[0]).with_name(format!("K{}", p[0]))
        }
        "star" => {
            arity(name, p, 1)?;
            star(p[0])?
        }
        "hypercube" => {
            arity(name, p, 1)?;
            hypercube(p[0])?
        }
        "grid" => {
            arity(name, p, 2)?;
            grid(p[0], p[1])?
        }
        "kneser" => {
            arity(name, p, 2)?;
            kneser(p[0], p[1])?
        }
        "petersen" => {
            arity(name, p, 0)?;
            kneser(5, 2)?.with_name("Petersen")
        }
        "sunlet" => {
            arity(name, p, 1)?;
            sunlet(p[0])?
        }
        "caterpillar" => {
            arity(name, p, 2)?;
            even_caterpillar(p[0], p[1])?
        }
        "cycle_power" => {
            arity(name, p, 2)?;
            power(&cycle(p[0])?, p[1])?.with_name(format!("C{}^({})", p[0], p[1]))
        }
        "torus" => torus(p)?,
        "dangled_stars" => {
            arity(name, p, 2)?;
            dangled_stars(p[0], p[1])?
        }
        "bridged_stars" => {
            arity(name, p, 2)?;
            bridged_stars(p[0], p[1])?
        }
        "cycle_path" => {
            arity(name, p, 2)?;
            cartesian_product(&cycle(p[0])?, &path(p[1])?)?
                .with_name(format!("C{}xP{}", p[0], p[1]))
        }
        "abelian" => {
            let label: Vec<String> = p.iter().map(|n| format!("Z{n}")).collect();
            cayley_abelian(&GroupSpec::canonical(p)?).with_name(label.join("x"))
        }
        _ => {
            let known: Vec<&str> = NAMED_FAMILIES.iter().map(|(n, _)| *n).collect();
            return Err(GraphError::InvalidParameter(format!(
                "unknown family '{name}' (known: {})",
                known.join(", ")
            )));
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let size = |name: &str, p: &[usize]| {
            let g = named_graph(name, p).unwrap();
            (g.n(), g.edge_count())
        };
        assert_eq!(size("petersen", &[]), (10, 15));
        assert_eq!(size("torus", &[6, 3]), (18, 36));
        assert_eq!(size("dangled_stars", &[3, 3]), (12, 12));
        assert_eq!(size("bridged_stars", &[2, 3]), (12, 11));
        assert_eq!(size("cycle_path", &[4, 2]), (8, 12));
        assert_eq!(size("abelian", &[2, 4]), (8, 12));
        assert_eq!(size("cycle_power", &[6, 2]), (6, 12));
    }

    #[test]
    fn catalog_errors() {
        assert!(named_graph("path", &[]).is_err());
        assert!(named_graph("petersen", &[1]).is_err());
        assert!(named_graph("moebius", &[4]).is_err());
        assert!(named_graph("torus", &[]).is_err());
        assert!(named_graph("cycle", &[2]).is_err());
    }

    #[test]
    fn bridged_star_with_one_copy_is_the_small_caterpillar() {
        let b = bridged_stars(2, 1).unwrap();
        let c = even_caterpillar(3, 4).unwrap();
        assert_eq!((b.n(), b.edge_count()), (c.n(), c.edge_count()));
        let degrees = |g: &Graph| {
            let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(degrees(&b), degrees(&c));
    }
}
