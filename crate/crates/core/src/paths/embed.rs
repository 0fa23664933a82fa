use super::{PathError, PathMove, PathPosition};
use crate::game::{GameError, Position, MAX_VERTICES};
use crate::graph::Graph;

/// A path sum realised as an ordinary game position: each component's
/// vertices in order, followed by one chosen pendant per shaded endpoint.
#[derive(Debug, Clone)]
pub struct EmbeddedPathSum {
    pub graph: Graph,
    pub black: Vec<usize>,
    /// First graph vertex of each component.
    pub offsets: Vec<usize>,
}

impl EmbeddedPathSum {
    pub fn position(&self) -> Result<Position<'_>, GameError> {
        Position::from_black(&self.graph, &self.black)
    }

    pub fn vertex(&self, mv: PathMove) -> usize {
        self.offsets[mv.component] + mv.vertex
    }
}

pub fn embed(q: &PathPosition) -> Result<EmbeddedPathSum, PathError> {
    let n = q.vertex_count() + q.shaded();
    if n > MAX_VERTICES {
        return Err(PathError::Precondition(format!(
            "embedding needs {n} vertices, at most {MAX_VERTICES} supported"
        )));
    }
    let mut edges = Vec::new();
    let mut offsets = Vec::new();
    let mut start = 0;
    for c in q.components() {
        offsets.push(start);
        edges.extend((start + 1..start + c.k()).map(|v| (v - 1, v)));
        start += c.k();
    }
    let mut black = Vec::new();
    let mut next = start;
    for (c, &off) in q.components().iter().zip(&offsets) {
        let mut ends = vec![off];
        if c.shaded() == 2 {
            ends.push(off + c.k() - 1);
        }
        for &end in &ends[..c.shaded()] {
            edges.push((end, next));
            black.push(next);
            next += 1;
        }
    }
    let graph = Graph::from_edges(n, &edges).expect("embedding edges are valid");
    Ok(EmbeddedPathSum {
        graph,
        black,
        offsets,
    })
}
