use std::collections::HashMap;

use super::{PathComponent, PathError, PathPosition, PathVerdict};
use crate::game::Outcome;

/// Canonical form used as memo key. A component without white vertices
/// (`P_1^1`, `P_2^2`) only offers moves that change nothing but the turn,
/// and two such moves cancel: whenever the opponent spends one, the reply
/// spends another. So trivial components reduce to the parity of their
/// vertex count, kept as at most one `P_1^1`.
fn reduce(q: &PathPosition) -> PathPosition {
    let passes: usize = q
        .components()
        .iter()
        .filter(|c| c.white() == 0)
        .map(PathComponent::k)
        .sum();
    let mut live: Vec<PathComponent> = q
        .components()
        .iter()
        .copied()
        .filter(|c| c.white() > 0)
        .collect();
    if passes % 2 == 1 {
        live.push(PathComponent::standard(1));
    }
    PathPosition::new(live)
}

/// Exact memoized solver over canonical path sums.
pub struct PathSolver {
    memo: HashMap<PathPosition, bool>,
    budget: u64,
    nodes: u64,
}

impl PathSolver {
    pub fn new(budget: u64) -> Self {
        PathSolver {
            memo: HashMap::new(),
            budget,
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn next_wins(&mut self, q: &PathPosition) -> Result<bool, PathError> {
        let q = reduce(q);
        if q.is_trivial() {
            return Ok(false);
        }
        if let Some(&v) = self.memo.get(&q) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(PathError::BudgetExhausted {
                budget: self.budget,
            });
        }
        let mut result = false;
        for mv in q.distinct_moves() {
            if !self.next_wins(&q.play(mv)?)? {
                result = true;
                break;
            }
        }
        self.memo.insert(q, result);
        Ok(result)
    }

    pub fn outcome(&mut self, q: &PathPosition) -> Result<Outcome, PathError> {
        Ok(if self.next_wins(q)? {
            Outcome::N
        } else {
            Outcome::P
        })
    }

    /// Exact verdict; the winning move is the first in [`PathPosition::moves`]
    /// order that leads to a P position.
    pub fn solve(&mut self, q: &PathPosition) -> Result<PathVerdict, PathError> {
        let start = self.nodes;
        let outcome = self.outcome(q)?;
        let mut winning_move = None;
        if outcome == Outcome::N {
            for mv in q.moves() {
                if !self.next_wins(&q.play(mv)?)? {
                    winning_move = Some(mv);
                    break;
                }
            }
        }
        Ok(PathVerdict {
            outcome,
            winning_move,
            nodes_expanded: self.nodes - start,
        })
    }
}

pub fn solve_path_sum(q: &PathPosition, budget: u64) -> Result<PathVerdict, PathError> {
    PathSolver::new(budget).solve(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::DEFAULT_BUDGET;
    use crate::paths::PathMove;

    fn comp(k: usize, i: usize) -> PathComponent {
        PathComponent::new(k, i).unwrap()
    }

    fn outcome(q: &PathPosition) -> Outcome {
        solve_path_sum(q, DEFAULT_BUDGET).unwrap().outcome
    }

    #[test]
    fn single_paths_match_known_outcomes() {
        for n in 2..=13 {
            let expect = if n % 2 == 1 || [2, 6, 8, 10, 12].contains(&n) {
                Outcome::N
            } else {
                Outcome::P
            };
            assert_eq!(outcome(&PathPosition::new(vec![comp(n, 0)])), expect, "P{n}");
        }
    }

    #[test]
    fn p5_one_shaded_end_is_p() {
        assert_eq!(outcome(&PathPosition::new(vec![comp(5, 1)])), Outcome::P);
    }

    #[test]
    fn trivial_sums() {
        let v = solve_path_sum(&PathPosition::default(), 10).unwrap();
        assert_eq!((v.outcome, v.winning_move), (Outcome::P, None));
        assert_eq!(outcome(&PathPosition::standard(&[1, 2, 2])), Outcome::P);
    }

    #[test]
    fn spare_pass_breaks_pair_cancellation() {
        // P_1^1 alone is over, but a spare pass beside P_3 + P_3 wins
        assert_eq!(outcome(&PathPosition::standard(&[1])), Outcome::P);
        assert_eq!(outcome(&PathPosition::standard(&[1, 3, 3])), Outcome::N);
    }

    #[test]
    fn winning_move_is_first_in_order() {
        let q = PathPosition::new(vec![comp(3, 0)]);
        let v = solve_path_sum(&q, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.winning_move, Some(PathMove { component: 0, vertex: 1 }));
    }

    #[test]
    fn budget() {
        let q = PathPosition::new(vec![comp(13, 0)]);
        assert_eq!(
            solve_path_sum(&q, 3),
            Err(PathError::BudgetExhausted { budget: 3 })
        );
    }
}
