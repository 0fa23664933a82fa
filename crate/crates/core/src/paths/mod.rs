//! Sums of path positions.
//!
//! Once a vertex of a path is chosen it can be deleted, leaving shorter
//! paths whose endpoints next to the deleted vertex are dominated. A
//! position on a disjoint union of paths is therefore a multiset of
//! components `P_k^i`: a path on `k` unchosen vertices with `i` shaded
//! endpoints and every other vertex white.
//!
//! A position is *standard* when every endpoint is shaded (`P_k^2` for
//! `k > 1`, `P_1^1`). Standard positions have a closed-form classification
//! ([`classify_standard`]); arbitrary sums are handled by the exact
//! [`solve_path_sum`].

mod embed;
mod notation;
mod solver;

pub use embed::{embed, EmbeddedPathSum};
pub use notation::{parse_position, ParseError};
pub use solver::{solve_path_sum, PathSolver};

use std::fmt;

use thiserror::Error;

use crate::game::Outcome;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("invalid component P{k}^{shaded}")]
    InvalidComponent { k: usize, shaded: usize },
    #[error("position is not standard")]
    NonStandard,
    #[error("position is trivial")]
    Trivial,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no vertex {vertex} in component {component}")]
    NoSuchMove { component: usize, vertex: usize },
    #[error("node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// `P_k^i`: a path on `k` vertices with `i` shaded endpoints. With one
/// shaded endpoint, vertex 0 is the shaded one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathComponent {
    k: usize,
    shaded: usize,
}

impl PathComponent {
    pub fn new(k: usize, shaded: usize) -> Result<Self, PathError> {
        let max = if k == 1 { 1 } else { 2 };
        if k == 0 || shaded > max {
            return Err(PathError::InvalidComponent { k, shaded });
        }
        Ok(PathComponent { k, shaded })
    }

    /// The standard component on `k` vertices.
    pub fn standard(k: usize) -> Self {
        assert!(k >= 1);
        PathComponent {
            k,
            shaded: if k == 1 { 1 } else { 2 },
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shaded(&self) -> usize {
        self.shaded
    }

    pub fn white(&self) -> usize {
        self.k - self.shaded
    }

    pub fn is_standard(&self) -> bool {
        *self == PathComponent::standard(self.k)
    }

    fn first_shaded(&self) -> bool {
        self.shaded >= 1
    }

    fn last_shaded(&self) -> bool {
        if self.k == 1 {
            self.shaded == 1
        } else {
            self.shaded == 2
        }
    }

    /// Invariant under reversal, so only the first half of the moves is
    /// needed up to isomorphism.
    fn is_symmetric(&self) -> bool {
        self.shaded != 1 || self.k == 1
    }

    /// Fragments left after choosing vertex `j`: the vertices before and
    /// after it, each gaining a shaded endpoint next to `j`.
    pub fn play(&self, j: usize) -> Result<Vec<PathComponent>, PathError> {
        if j >= self.k {
            return Err(PathError::NoSuchMove {
                component: 0,
                vertex: j,
            });
        }
        let mut out = Vec::with_capacity(2);
        let left = j;
        if left == 1 {
            out.push(PathComponent { k: 1, shaded: 1 });
        } else if left > 1 {
            out.push(PathComponent {
                k: left,
                shaded: 1 + self.first_shaded() as usize,
            });
        }
        let right = self.k - 1 - j;
        if right == 1 {
            out.push(PathComponent { k: 1, shaded: 1 });
        } else if right > 1 {
            out.push(PathComponent {
                k: right,
                shaded: 1 + self.last_shaded() as usize,
            });
        }
        Ok(out)
    }
}

impl fmt::Display for PathComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}^{}", self.k, self.shaded)
    }
}

/// Position left after choosing vertex `j` of `c`.
pub fn component_moves(c: PathComponent, j: usize) -> Result<PathPosition, PathError> {
    Ok(PathPosition::new(c.play(j)?))
}

/// Move in a path sum: vertex `vertex` of the component at index
/// `component` (in the canonical sorted order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathMove {
    pub component: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathVerdict {
    pub outcome: Outcome,
    pub winning_move: Option<PathMove>,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counters {
    pub one: usize,
    pub four: usize,
    pub odd: usize,
}

/// A multiset of path components, kept sorted by `(k, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PathPosition {
    components: Vec<PathComponent>,
}

impl PathPosition {
    pub fn new(mut components: Vec<PathComponent>) -> Self {
        components.sort_unstable();
        PathPosition { components }
    }

    /// Standard position with one component per entry of `sizes`.
    pub fn standard(sizes: &[usize]) -> Self {
        Self::new(sizes.iter().map(|&k| PathComponent::standard(k)).collect())
    }

    pub fn components(&self) -> &[PathComponent] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(PathComponent::k).sum()
    }

    pub fn white(&self) -> usize {
        self.components.iter().map(PathComponent::white).sum()
    }

    pub fn shaded(&self) -> usize {
        self.components.iter().map(PathComponent::shaded).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.white() == 0
    }

    pub fn is_standard(&self) -> bool {
        self.components.iter().all(PathComponent::is_standard)
    }

    /// `|S| + |W|` is even.
    pub fn is_even(&self) -> bool {
        self.vertex_count() % 2 == 0
    }

    /// Sum with another position.
    pub fn plus(&self, other: &PathPosition) -> PathPosition {
        let mut all = self.components.clone();
        all.extend_from_slice(&other.components);
        PathPosition::new(all)
    }

    pub fn play(&self, mv: PathMove) -> Result<PathPosition, PathError> {
        let c = self
            .components
            .get(mv.component)
            .ok_or(PathError::NoSuchMove {
                component: mv.component,
                vertex: mv.vertex,
            })?;
        let fragments = c.play(mv.vertex).map_err(|_| PathError::NoSuchMove {
            component: mv.component,
            vertex: mv.vertex,
        })?;
        let mut rest = self.components.clone();
        rest.remove(mv.component);
        rest.extend(fragments);
        Ok(PathPosition::new(rest))
    }

    /// Every move, in component then vertex order. Empty once trivial.
    pub fn moves(&self) -> Vec<PathMove> {
        if self.is_trivial() {
            return Vec::new();
        }
        self.components
            .iter()
            .enumerate()
            .flat_map(|(component, c)| {
                (0..c.k).map(move |vertex| PathMove { component, vertex })
            })
            .collect()
    }

    /// One representative per isomorphism class of resulting position.
    pub(crate) fn distinct_moves(&self) -> Vec<PathMove> {
        if self.is_trivial() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (component, c) in self.components.iter().enumerate() {
            if component > 0 && self.components[component - 1] == *c {
                continue;
            }
            let upto = if c.is_symmetric() { c.k.div_ceil(2) } else { c.k };
            out.extend((0..upto).map(|vertex| PathMove { component, vertex }));
        }
        out
    }

    fn require_standard(&self) -> Result<(), PathError> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(PathError::NonStandard)
        }
    }

    pub fn counters(&self) -> Result<Counters, PathError> {
        self.require_standard()?;
        let count = |f: fn(usize) -> bool| self.components.iter().filter(|c| f(c.k)).count();
        Ok(Counters {
            one: count(|k| k == 1),
            four: count(|k| k == 4),
            odd: count(|k| k % 2 == 1),
        })
    }

    /// `|W|`, `|S|` and the number of `P_4` components are all even.
    pub fn is_totally_even(&self) -> Result<bool, PathError> {
        let c = self.counters()?;
        // |S| is even exactly when the number of P_1 components is
        Ok(self.white() % 2 == 0 && c.one % 2 == 0 && c.four % 2 == 0)
    }
}

impl fmt::Display for PathPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A move from an odd standard position to a totally even one: the
/// interior or an endpoint of a `P_4`, the vertex of a `P_1`, or the center
/// of an odd path, depending on the parities of the `P_1` and `P_4` counts.
pub fn totally_even_move(q: &PathPosition) -> Result<PathMove, PathError> {
    let c = q.counters()?;
    if q.is_trivial() {
        return Err(PathError::Trivial);
    }
    if q.is_even() {
        return Err(PathError::Precondition(
            "|S| + |W| must be odd".into(),
        ));
    }
    let find = |pred: &dyn Fn(usize) -> bool| {
        q.components()
            .iter()
            .position(|c| pred(c.k))
            .expect("component guaranteed by the counter parities")
    };
    let mv = match (c.one % 2 == 1, c.four % 2 == 1) {
        (true, true) => PathMove {
            component: find(&|k| k == 4),
            vertex: 1,
        },
        (false, true) => PathMove {
            component: find(&|k| k == 4),
            vertex: 0,
        },
        (true, false) => PathMove {
            component: find(&|k| k == 1),
            vertex: 0,
        },
        (false, false) => {
            let component = find(&|k| k >= 3 && k % 2 == 1);
            PathMove {
                component,
                vertex: (q.components()[component].k - 1) / 2,
            }
        }
    };
    Ok(mv)
}

/// Matches `P_1^m + P_2^h + tail` for the exceptional P families.
fn is_exceptional(q: &PathPosition) -> bool {
    let ones = q.components.iter().filter(|c| c.k == 1).count();
    let mut tail: Vec<usize> = q
        .components
        .iter()
        .map(PathComponent::k)
        .filter(|&k| k > 2)
        .collect();
    tail.sort_unstable();
    match tail[..] {
        [3, 3] => ones % 2 == 0,
        [3, 4] | [3, 3, 3] => ones % 2 == 1,
        _ => false,
    }
}

/// Closed-form verdict for a nontrivial standard position: P exactly when
/// the position is even with at least four white vertices, or is one of
/// `P_1^m + P_2^h + P_3 + P_3` (m even), `P_1^m + P_2^h + P_4 + P_3`
/// (m odd) or `P_1^m + P_2^h + P_3 + P_3 + P_3` (m odd).
///
/// The last family is P because every move from it leaves an odd
/// nontrivial position: the spare `P_1` is a tempo the opponent can
/// always answer.
pub fn classify_standard(q: &PathPosition) -> Result<PathVerdict, PathError> {
    q.require_standard()?;
    if q.is_trivial() {
        return Err(PathError::Trivial);
    }
    let is_p = (q.is_even() && q.white() >= 4) || is_exceptional(q);
    let winning_move = if is_p {
        None
    } else if !q.is_even() {
        Some(totally_even_move(q)?)
    } else {
        Some(even_finisher(q))
    };
    Ok(PathVerdict {
        outcome: if is_p { Outcome::P } else { Outcome::N },
        winning_move,
        nodes_expanded: 0,
    })
}

/// Winning move in an even N position with fewer than four white vertices:
/// its white vertices lie in one `P_3`, `P_4` or `P_5`, so a single move
/// dominates them all.
fn even_finisher(q: &PathPosition) -> PathMove {
    q.moves()
        .into_iter()
        .find(|&mv| q.play(mv).is_ok_and(|r| r.is_trivial()))
        .expect("remaining white vertices are consecutive")
}
