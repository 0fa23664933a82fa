//! Positions of the snooker-domination game, the exact N/P solver and
//! executable strategies.
//!
//! A position is the partition `{B, S, W}` of the vertices into chosen,
//! dominated-but-unchosen and undominated vertices. All three sets are
//! stored as `u64` bit masks, so the solver handles graphs on at most
//! [`MAX_VERTICES`] vertices.

mod play;
mod solver;
mod strategy;

pub use play::{exhaustive_adversary, play, AdversaryReport, Player, Transcript, TranscriptMove};
pub use solver::{solve, solve_parallel, winning_moves, Solver, DEFAULT_BUDGET};
pub use strategy::{
    bridged_copy_pairing, involution_strategy, mirror_strategy, FirstLegal, Optimal,
    PairingStrategy, Strategy, StrategyKind, UniformRandom,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("graph has {0} vertices; positions support at most 64")]
    TooLarge(usize),
    #[error("illegal move {vertex}: {reason}")]
    IllegalMove { vertex: usize, reason: &'static str },
    #[error("invalid position: {0}")]
    InvalidPosition(String),
    #[error("node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("strategy cannot answer: {0}")]
    StrategyInapplicable(String),
    #[error("adversary won the playout {0:?}")]
    AdversaryWins(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The player to move wins.
    N,
    /// The player who just moved wins.
    P,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::N => "N",
            Outcome::P => "P",
        })
    }
}

/// Solver answer. `winning_move` is present exactly for N positions and is
/// the lowest-indexed move leading to a P position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub winning_move: Option<usize>,
    pub nodes_expanded: u64,
}

/// JSON form of a solved instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph: String,
    pub outcome: Outcome,
    pub winning_move: Option<usize>,
    pub nodes: u64,
    pub millis: u64,
}

impl VerdictRecord {
    pub fn new(graph: impl Into<String>, verdict: &Verdict, millis: u64) -> Self {
        VerdictRecord {
            graph: graph.into(),
            outcome: verdict.outcome,
            winning_move: verdict.winning_move,
            nodes: verdict.nodes_expanded,
            millis,
        }
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

pub fn mask_to_vec(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

pub(crate) fn open_mask(g: &Graph, v: usize) -> u64 {
    g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A game position on a host graph.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Position<'g> {
    graph: &'g Graph,
    black: u64,
    shaded: u64,
    white: u64,
}

impl fmt::Debug for Position<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Position")
            .field("B", &mask_to_vec(self.black))
            .field("S", &mask_to_vec(self.shaded))
            .field("W", &mask_to_vec(self.white))
            .finish()
    }
}

impl<'g> Position<'g> {
    /// Nothing chosen, every vertex white.
    pub fn initial(graph: &'g Graph) -> Result<Self, GameError> {
        Self::from_black(graph, &[])
    }

    /// The position reached once the vertices in `black` have been chosen.
    /// Shaded and white sets follow from `black`.
    pub fn from_black(graph: &'g Graph, black: &[usize]) -> Result<Self, GameError> {
        if graph.n() > MAX_VERTICES {
            return Err(GameError::TooLarge(graph.n()));
        }
        let mut mask = 0u64;
        for &b in black {
            if b >= graph.n() {
                return Err(GameError::InvalidPosition(format!(
                    "vertex {b} out of range"
                )));
            }
            mask |= 1 << b;
        }
        Ok(Self::from_black_mask(graph, mask))
    }

    pub(crate) fn from_black_mask(graph: &'g Graph, black: u64) -> Self {
        let dominated = bits(black).fold(0, |m, b| m | open_mask(graph, b));
        let shaded = dominated & !black;
        let white = full_mask(graph.n()) & !black & !dominated;
        Position {
            graph,
            black,
            shaded,
            white,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn black(&self) -> u64 {
        self.black
    }

    pub fn shaded(&self) -> u64 {
        self.shaded
    }

    pub fn white(&self) -> u64 {
        self.white
    }

    pub fn is_trivial(&self) -> bool {
        self.white == 0
    }

    /// `S ∪ W` while some vertex is still white; empty once the game is over.
    pub fn legal_moves(&self) -> u64 {
        if self.is_trivial() {
            0
        } else {
            self.shaded | self.white
        }
    }

    pub fn is_legal(&self, u: usize) -> bool {
        u < self.graph.n() && self.legal_moves() >> u & 1 == 1
    }

    pub fn apply_move(&self, u: usize) -> Result<Self, GameError> {
        let reason = if u >= self.graph.n() {
            Some("vertex out of range")
        } else if self.is_trivial() {
            Some("the game is already over")
        } else if self.black >> u & 1 == 1 {
            Some("vertex already chosen")
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(GameError::IllegalMove { vertex: u, reason });
        }
        let bit = 1u64 << u;
        let nbrs = open_mask(self.graph, u);
        Ok(Position {
            graph: self.graph,
            black: self.black | bit,
            shaded: (self.shaded & !bit) | (nbrs & self.white),
            white: self.white & !(bit | nbrs),
        })
    }

    /// Checks the partition and domination invariants.
    pub fn check_invariants(&self) -> Result<(), String> {
        let full = full_mask(self.graph.n());
        if self.black | self.shaded | self.white != full {
            return Err("sets do not cover the vertex set".into());
        }
        if self.black & self.shaded != 0 || self.black & self.white != 0 || self.shaded & self.white != 0 {
            return Err("sets overlap".into());
        }
        let dominated = bits(self.black).fold(0, |m, b| m | open_mask(self.graph, b));
        if dominated & self.white != 0 {
            return Err("white vertex adjacent to a black vertex".into());
        }
        if dominated & !self.black != self.shaded {
            return Err("shaded set differs from N(B) - B".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn initial_positions() {
        let p1 = path(1).unwrap();
        let q = Position::initial(&p1).unwrap();
        assert_eq!(q.white(), 1);
        let c5 = cycle(5).unwrap();
        assert_eq!(mask_to_vec(Position::initial(&c5).unwrap().white()), vec![0, 1, 2, 3, 4]);
        let empty = Graph::empty(0);
        assert!(Position::initial(&empty).unwrap().is_trivial());
    }

    #[test]
    fn moves_on_c4() {
        let c4 = cycle(4).unwrap();
        let q = Position::initial(&c4).unwrap();
        assert_eq!(mask_to_vec(q.legal_moves()), vec![0, 1, 2, 3]);
        let q = q.apply_move(0).unwrap();
        assert_eq!(mask_to_vec(q.black()), vec![0]);
        assert_eq!(mask_to_vec(q.shaded()), vec![1, 3]);
        assert_eq!(mask_to_vec(q.white()), vec![2]);
        assert_eq!(mask_to_vec(q.legal_moves()), vec![1, 2, 3]);
        let q = q.apply_move(2).unwrap();
        assert!(q.is_trivial());
        assert_eq!(q.legal_moves(), 0);
        assert!(matches!(q.apply_move(1), Err(GameError::IllegalMove { vertex: 1, .. })));
    }

    #[test]
    fn moves_on_p4() {
        let p4 = path(4).unwrap();
        let q = Position::initial(&p4).unwrap().apply_move(1).unwrap();
        assert_eq!(mask_to_vec(q.shaded()), vec![0, 2]);
        assert_eq!(mask_to_vec(q.white()), vec![3]);
        assert!(q.apply_move(1).is_err());
        assert!(q.apply_move(7).is_err());
        assert_eq!(q, Position::from_black(&p4, &[1]).unwrap());
    }

    #[test]
    fn rejects_oversized_graphs() {
        let big = path(65).unwrap();
        assert_eq!(Position::initial(&big), Err(GameError::TooLarge(65)));
        let max = path(64).unwrap();
        assert_eq!(Position::initial(&max).unwrap().white(), u64::MAX);
    }
}
