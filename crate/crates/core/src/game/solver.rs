use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;

use super::{bits, full_mask, open_mask, GameError, Outcome, Position, Verdict};
use crate::graph::Graph;

/// Default limit on expanded nodes per solve.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Memo of "player to move wins", keyed by the chosen set. For a fixed
/// graph the shaded and white sets are functions of the chosen set, so the
/// key is complete.
trait Memo {
    fn get(&self, black: u64) -> Option<bool>;
    fn insert(&mut self, black: u64, next_wins: bool);
}

impl Memo for HashMap<u64, bool> {
    fn get(&self, black: u64) -> Option<bool> {
        HashMap::get(self, &black).copied()
    }

    fn insert(&mut self, black: u64, next_wins: bool) {
        HashMap::insert(self, black, next_wins);
    }
}

impl Memo for &DashMap<u64, bool> {
    fn get(&self, black: u64) -> Option<bool> {
        DashMap::get(self, &black).map(|r| *r)
    }

    fn insert(&mut self, black: u64, next_wins: bool) {
        // insert-once: concurrent writers always agree on the value
        self.entry(black).or_insert(next_wins);
    }
}

enum Counter<'a> {
    Local(u64),
    Shared(&'a AtomicU64),
}

struct Search<'a, M: Memo> {
    closed: &'a [u64],
    full: u64,
    memo: M,
    counter: Counter<'a>,
    budget: u64,
}

impl<M: Memo> Search<'_, M> {
    fn tick(&mut self) -> Result<(), GameError> {
        let used = match &mut self.counter {
            Counter::Local(n) => {
                *n += 1;
                *n
            }
            Counter::Shared(n) => n.fetch_add(1, Ordering::Relaxed) + 1,
        };
        if used > self.budget {
            Err(GameError::BudgetExhausted {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Whether the player to move wins from the position with chosen set
    /// `black` and undominated set `white`.
    fn next_wins(&mut self, black: u64, white: u64) -> Result<bool, GameError> {
        if white == 0 {
            return Ok(false);
        }
        let available = self.full & !black;
        if bits(available).any(|u| white & !self.closed[u] == 0) {
            return Ok(true);
        }
        if let Some(v) = self.memo.get(black) {
            return Ok(v);
        }
        self.tick()?;
        // white moves first: they shrink W and end games sooner
        let order = bits(white).chain(bits(available & !white));
        let mut result = false;
        for u in order {
            if !self.next_wins(black | 1 << u, white & !self.closed[u])? {
                result = true;
                break;
            }
        }
        self.memo.insert(black, result);
        Ok(result)
    }

    fn nodes(&self) -> u64 {
        match &self.counter {
            Counter::Local(n) => *n,
            Counter::Shared(n) => n.load(Ordering::Relaxed),
        }
    }
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| open_mask(g, v) | 1 << v).collect()
}

/// Exact solver bound to one graph. The transposition table persists
/// across calls, so repeated queries on positions of the same game reuse
/// earlier work. The node budget applies to each search separately.
pub struct Solver<'g> {
    graph: &'g Graph,
    closed: Vec<u64>,
    memo: HashMap<u64, bool>,
    budget: u64,
    nodes: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, budget: u64) -> Self {
        Solver {
            graph,
            closed: closed_masks(graph),
            memo: HashMap::new(),
            budget,
            nodes: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Total nodes expanded since construction.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn check_graph(&self, q: &Position) -> Result<(), GameError> {
        if !std::ptr::eq(q.graph(), self.graph) && q.graph() != self.graph {
            return Err(GameError::InvalidPosition(
                "position belongs to a different graph".into(),
            ));
        }
        Ok(())
    }

    fn next_wins(&mut self, black: u64, white: u64) -> Result<bool, GameError> {
        let mut search = Search {
            closed: &self.closed,
            full: full_mask(self.graph.n()),
            memo: std::mem::take(&mut self.memo),
            counter: Counter::Local(0),
            budget: self.budget,
        };
        let result = search.next_wins(black, white);
        self.nodes += search.nodes();
        self.memo = search.memo;
        result
    }

    pub fn outcome(&mut self, q: &Position) -> Result<Outcome, GameError> {
        self.check_graph(q)?;
        Ok(if self.next_wins(q.black(), q.white())? {
            Outcome::N
        } else {
            Outcome::P
        })
    }

    pub fn solve(&mut self, q: &Position) -> Result<Verdict, GameError> {
        self.check_graph(q)?;
        let start = self.nodes;
        let outcome = self.outcome(q)?;
        let winning_move = match outcome {
            Outcome::P => None,
            Outcome::N => {
                let mut found = None;
                for u in bits(q.legal_moves()) {
                    if !self.next_wins(q.black() | 1 << u, q.white() & !self.closed[u])? {
                        found = Some(u);
                        break;
                    }
                }
                Some(found.expect("an N position has a move to a P position"))
            }
        };
        Ok(Verdict {
            outcome,
            winning_move,
            nodes_expanded: self.nodes - start,
        })
    }

    /// Every legal move whose resulting position is a P position.
    pub fn winning_moves(&mut self, q: &Position) -> Result<Vec<usize>, GameError> {
        self.check_graph(q)?;
        let mut out = Vec::new();
        for u in bits(q.legal_moves()) {
            if !self.next_wins(q.black() | 1 << u, q.white() & !self.closed[u])? {
                out.push(u);
            }
        }
        Ok(out)
    }
}

/// Solves `q` with a fresh transposition table.
pub fn solve(q: &Position, budget: u64) -> Result<Verdict, GameError> {
    Solver::new(q.graph(), budget).solve(q)
}

pub fn winning_moves(q: &Position, budget: u64) -> Result<Vec<usize>, GameError> {
    Solver::new(q.graph(), budget).winning_moves(q)
}

/// Evaluates the root's children concurrently over a shared insert-once
/// table. The outcome and winning move are identical to [`solve`]; only the
/// node count may differ.
pub fn solve_parallel(q: &Position, budget: u64, threads: usize) -> Result<Verdict, GameError> {
    let closed = closed_masks(q.graph());
    let full = full_mask(q.graph().n());
    let table = DashMap::new();
    let nodes = AtomicU64::new(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| GameError::InvalidPosition(format!("thread pool: {e}")))?;
    let moves: Vec<usize> = bits(q.legal_moves()).collect();
    let child_results: Vec<Result<bool, GameError>> = pool.install(|| {
        moves
            .par_iter()
            .map(|&u| {
                let mut search = Search {
                    closed: &closed,
                    full,
                    memo: &table,
                    counter: Counter::Shared(&nodes),
                    budget,
                };
                search.next_wins(q.black() | 1 << u, q.white() & !closed[u])
            })
            .collect()
    });
    let mut winning_move = None;
    for (&u, r) in moves.iter().zip(child_results) {
        if !r? && winning_move.is_none() {
            winning_move = Some(u);
        }
    }
    Ok(Verdict {
        outcome: if winning_move.is_some() {
            Outcome::N
        } else {
            Outcome::P
        },
        winning_move,
        nodes_expanded: nodes.load(Ordering::Relaxed),
    })
}
