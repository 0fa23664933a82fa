use super::{cartesian_product, cycle, path, Graph, GraphError};

/// Result of [`join`]: the glued graph, the index of the identified vertex
/// and, for every vertex of the second graph, its index in the result.
#[derive(Debug, Clone)]
pub struct Joined {
    pub graph: Graph,
    pub identified: usize,
    pub map: Vec<usize>,
}

/// Result of [`dangle`] and [`bridge`]. Vertices of the host keep their
/// indices; `maps[i][v]` is the new index of vertex `v` of the i-th attached
/// graph.
#[derive(Debug, Clone)]
pub struct Attached {
    pub graph: Graph,
    pub maps: Vec<Vec<usize>>,
}

/// Glues `h` onto `g` by identifying `y` with `x`. The vertices of `h` other
/// than `y` are appended after those of `g`, in order.
pub fn join(g: &Graph, x: usize, h: &Graph, y: usize) -> Result<Joined, GraphError> {
    let out = dangle(g, &[x], &[(h.clone(), y)])?;
    Ok(Joined {
        graph: out.graph,
        identified: x,
        map: out.maps.into_iter().next().unwrap(),
    })
}

/// Parallel joins: `hs[i].0` is glued to `g` by identifying `hs[i].1` with
/// `xs[i]`.
pub fn dangle(g: &Graph, xs: &[usize], hs: &[(Graph, usize)]) -> Result<Attached, GraphError> {
    if xs.len() != hs.len() {
        return Err(GraphError::InvalidParameter(format!(
            "dangling needs one graph per vertex ({} vertices, {} graphs)",
            xs.len(),
            hs.len()
        )));
    }
    let mut used = vec![false; g.n()];
    for &x in xs {
        g.check_vertex(x)?;
        if std::mem::replace(&mut used[x], true) {
            return Err(GraphError::InvalidParameter(format!(
                "vertex {x} appears twice in dangling"
            )));
        }
    }
    let mut total = g.n();
    let mut maps = Vec::with_capacity(hs.len());
    for (&x, (h, y)) in xs.iter().zip(hs) {
        h.check_vertex(*y)?;
        let mut map = vec![0; h.n()];
        for (v, slot) in map.iter_mut().enumerate() {
            if v == *y {
                *slot = x;
            } else {
                *slot = total;
                total += 1;
            }
        }
        maps.push(map);
    }
    let mut out = Graph::empty(total);
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for ((h, _), map) in hs.iter().zip(&maps) {
        for (u, v) in h.edges() {
            out.add_edge(map[u], map[v])?;
        }
    }
    Ok(Attached { graph: out, maps })
}

/// Appends a disjoint copy of each `hs[i].0` and links `hs[i].1` to `x` by a
/// new edge.
pub fn bridge(g: &Graph, x: usize, hs: &[(Graph, usize)]) -> Result<Attached, GraphError> {
    g.check_vertex(x)?;
    let mut out = g.clone();
    out.name = None;
    let mut maps = Vec::with_capacity(hs.len());
    for (h, y) in hs {
        h.check_vertex(*y)?;
        let offset = out.n();
        out = out.disjoint_union(h);
        out.add_edge(x, offset + y)?;
        maps.push((offset..offset + h.n()).collect());
    }
    Ok(Attached { graph: out, maps })
}

/// `K_{1,m}` with the center at vertex 0.
pub fn star(m: usize) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(GraphError::InvalidParameter("star needs m >= 1 leaves".into()));
    }
    let mut g = Graph::empty(m + 1);
    for leaf in 1..=m {
        g.add_edge(0, leaf)?;
    }
    Ok(g.with_name(format!("K1,{m}")))
}

/// Cycle `0..k` with a pendant vertex `k + i` attached to cycle vertex `i`.
pub fn sunlet(k: usize) -> Result<Graph, GraphError> {
    let c = cycle(k)?;
    let k2 = path(2)?;
    let xs: Vec<usize> = (0..k).collect();
    let hs = vec![(k2, 0); k];
    Ok(dangle(&c, &xs, &hs)?.graph.with_name(format!("S{k}")))
}

/// Internally `r`-regular caterpillar on an even spine of `spine` vertices.
/// Spine vertices come first (`0..spine`); the `r - 2` leaves of each
/// internal spine vertex follow in spine order.
pub fn even_caterpillar(r: usize, spine: usize) -> Result<Graph, GraphError> {
    if r < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "caterpillar internal degree must be >= 3, got {r}"
        )));
    }
    if spine < 4 || spine % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "even caterpillar needs an even spine of at least 4 vertices, got {spine}"
        )));
    }
    let leaves = (spine - 2) * (r - 2);
    let mut g = Graph::empty(spine + leaves);
    for i in 1..spine {
        g.add_edge(i - 1, i)?;
    }
    let mut next = spine;
    for s in 1..spine - 1 {
        for _ in 0..r - 2 {
            g.add_edge(s, next)?;
            next += 1;
        }
    }
    Ok(g.with_name(format!("Cat({r},{spine})")))
}

pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d == 0 {
        return Err(GraphError::InvalidParameter("hypercube needs d >= 1".into()));
    }
    let p2 = path(2)?;
    let mut g = p2.clone();
    for _ in 1..d {
        g = cartesian_product(&g, &p2)?;
    }
    Ok(g.with_name(format!("Q{d}")))
}

/// `P_k □ P_m`, vertex `(row, col)` at `row * m + col`.
pub fn grid(k: usize, m: usize) -> Result<Graph, GraphError> {
    Ok(cartesian_product(&path(k)?, &path(m)?)?.with_name(format!("P{k}xP{m}")))
}

fn subsets(m: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            cur.push(v);
            rec(v + 1, m, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, t, &mut Vec::with_capacity(t), &mut out);
    out
}

/// Kneser graph `K(m, t)`: vertices are the `t`-subsets of `{0..m}` in
/// lexicographic order, adjacent when disjoint.
pub fn kneser(m: usize, t: usize) -> Result<Graph, GraphError> {
    if t == 0 || m < 2 * t + 1 {
        return Err(GraphError::InvalidParameter(format!(
            "kneser graph K({m},{t}) needs t >= 1 and m >= 2t+1"
        )));
    }
    let sets = subsets(m, t);
    let mut g = Graph::empty(sets.len());
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate().skip(i + 1) {
            if a.iter().all(|x| !b.contains(x)) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g.with_name(format!("K({m},{t})")))
}

/// Index of a `t`-subset of `{0..m}` among the vertices of [`kneser`].
pub fn kneser_index(m: usize, subset: &[usize]) -> Option<usize> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    subsets(m, sorted.len()).iter().position(|s| *s == sorted)
}
