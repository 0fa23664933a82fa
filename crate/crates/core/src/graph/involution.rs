use std::fmt;

use thiserror::Error;

use super::Graph;

pub const DEFAULT_INVOLUTION_VERTEX_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("graph has {n} vertices, above the involution search cap of {cap}")]
    BudgetExceeded { n: usize, cap: usize },
    #[error("distance bound must be >= 1")]
    ZeroDistance,
    #[error("not a certified {d}-involution: {reason}")]
    Invalid { d: usize, reason: String },
}

/// An order-two automorphism moving every vertex at least `d` hops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    perm: Vec<usize>,
    d: usize,
}

impl Involution {
    /// Checks every defining property against `g` before accepting `perm`.
    pub fn certify(g: &Graph, perm: Vec<usize>, d: usize) -> Result<Self, InvolutionError> {
        let fail = |reason: String| Err(InvolutionError::Invalid { d, reason });
        if d == 0 {
            return Err(InvolutionError::ZeroDistance);
        }
        if !g.is_automorphism(&perm) {
            return fail("not an automorphism".into());
        }
        if perm.iter().enumerate().all(|(v, &p)| v == p) {
            return fail("identity map".into());
        }
        if let Some(v) = (0..perm.len()).find(|&v| perm[perm[v]] != v) {
            return fail(format!("not of order two at vertex {v}"));
        }
        for (v, &p) in perm.iter().enumerate() {
            // different components count as infinitely far apart
            if let Some(dist) = g.bfs(v)[p].filter(|&x| x < d) {
                return fail(format!("vertex {v} moved to {p} at distance {dist}"));
            }
        }
        Ok(Involution { perm, d })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// Disjoint transpositions `(v perm(v))` with `v < perm(v)`.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        self.perm
            .iter()
            .enumerate()
            .filter(|&(v, &p)| v < p)
            .map(|(v, &p)| (v, p))
            .collect()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.cycles() {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

/// [`find_involution_with_cap`] with the default vertex cap.
pub fn find_involution(g: &Graph, d: usize) -> Result<Option<Involution>, InvolutionError> {
    find_involution_with_cap(g, d, DEFAULT_INVOLUTION_VERTEX_CAP)
}

/// Exhaustive search for a `d`-involution. Vertices are paired in index
/// order; a candidate partner must share the degree, sit at distance at
/// least `d` and agree on adjacency with every vertex already paired.
/// Returns `Ok(None)` when no such involution exists.
pub fn find_involution_with_cap(
    g: &Graph,
    d: usize,
    cap: usize,
) -> Result<Option<Involution>, InvolutionError> {
    if d == 0 {
        return Err(InvolutionError::ZeroDistance);
    }
    if g.n() > cap {
        return Err(InvolutionError::BudgetExceeded { n: g.n(), cap });
    }
    if g.n() == 0 {
        return Ok(None);
    }
    let dist = g.distance_matrix();
    let mut search = Search {
        g,
        d,
        dist: &dist,
        perm: vec![None; g.n()],
        assigned: Vec::with_capacity(g.n()),
    };
    if search.extend() {
        let perm = search.perm.into_iter().map(Option::unwrap).collect();
        Involution::certify(g, perm, d).map(Some)
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    g: &'a Graph,
    d: usize,
    dist: &'a [Vec<Option<usize>>],
    perm: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        self.assigned.iter().all(|&a| {
            let pa = self.perm[a].unwrap();
            self.g.has_edge(v, a) == self.g.has_edge(w, pa)
                && self.g.has_edge(w, a) == self.g.has_edge(v, pa)
        })
    }

    fn extend(&mut self) -> bool {
        let Some(v) = (0..self.g.n()).find(|&v| self.perm[v].is_none()) else {
            return true;
        };
        for w in v + 1..self.g.n() {
            if self.perm[w].is_some()
                || self.g.degree(w) != self.g.degree(v)
                || !self.dist[v][w].map_or(true, |x| x >= self.d)
                || !self.consistent(v, w)
            {
                continue;
            }
            self.perm[v] = Some(w);
            self.perm[w] = Some(v);
            self.assigned.push(v);
            self.assigned.push(w);
            if self.extend() {
                return true;
            }
            self.assigned.truncate(self.assigned.len() - 2);
            self.perm[v] = None;
            self.perm[w] = None;
        }
        false
    }
}
