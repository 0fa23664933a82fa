use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{bits, GameError, Position, Solver};
use crate::graph::{Graph, Involution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    InvolutionPairing,
    Mirror,
    Optimal,
    FirstLegal,
    UniformRandom,
}

/// A move policy. `last` is the opponent's previous move, if any; pairing
/// strategies answer it, the others ignore it.
pub trait Strategy {
    fn kind(&self) -> StrategyKind;
    fn choose(&mut self, q: &Position, last: Option<usize>) -> Result<usize, GameError>;
}

/// Answers every move `u` with `pairing[u]`.
#[derive(Debug, Clone)]
pub struct PairingStrategy {
    pairing: Vec<usize>,
    kind: StrategyKind,
}

impl PairingStrategy {
    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }
}

impl Strategy for PairingStrategy {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn choose(&mut self, q: &Position, last: Option<usize>) -> Result<usize, GameError> {
        let u = last.ok_or_else(|| {
            GameError::StrategyInapplicable("a pairing strategy only answers moves".into())
        })?;
        let v = *self.pairing.get(u).ok_or_else(|| {
            GameError::StrategyInapplicable(format!("move {u} outside the pairing"))
        })?;
        if q.is_legal(v) {
            Ok(v)
        } else {
            Err(GameError::StrategyInapplicable(format!(
                "partner {v} of move {u} is not available"
            )))
        }
    }
}

/// Second-player strategy answering `u` with `φ(u)`.
pub fn involution_strategy(inv: &Involution) -> PairingStrategy {
    PairingStrategy {
        pairing: inv.perm().to_vec(),
        kind: StrategyKind::InvolutionPairing,
    }
}

/// Mirroring strategy from an explicit pairing of the vertices of `g`. The
/// pairing must be a fixed-point-free map of order two; it need not be an
/// automorphism of `g`.
pub fn mirror_strategy(g: &Graph, pairing: Vec<usize>) -> Result<PairingStrategy, GameError> {
    let bad = |msg: String| Err(GameError::StrategyInapplicable(msg));
    if pairing.len() != g.n() {
        return bad(format!("pairing covers {} of {} vertices", pairing.len(), g.n()));
    }
    for (v, &p) in pairing.iter().enumerate() {
        if p >= g.n() || p == v || pairing[p] != v {
            return bad(format!("pairing is not a fixed-point-free involution at {v}"));
        }
    }
    Ok(PairingStrategy {
        pairing,
        kind: StrategyKind::Mirror,
    })
}

/// Pairing for a bridging of `copies` equal-sized blocks onto a base block
/// (blocks laid out consecutively, base first): block `2j` is swapped with
/// block `2j + 1`, vertex by vertex. Needs an odd number of copies.
pub fn bridged_copy_pairing(block: usize, copies: usize) -> Result<Vec<usize>, GameError> {
    if copies % 2 == 0 || block == 0 {
        return Err(GameError::StrategyInapplicable(format!(
            "copy pairing needs an odd number of copies, got {copies}"
        )));
    }
    Ok((0..block * (copies + 1))
        .map(|v| {
            let (b, local) = (v / block, v % block);
            let partner = if b % 2 == 0 { b + 1 } else { b - 1 };
            partner * block + local
        })
        .collect())
}

/// Plays the lowest-indexed winning move, or the lowest legal move from a
/// lost position.
pub struct Optimal<'g> {
    solver: Solver<'g>,
}

impl<'g> Optimal<'g> {
    pub fn new(graph: &'g Graph, budget: u64) -> Self {
        Optimal {
            solver: Solver::new(graph, budget),
        }
    }
}

impl Strategy for Optimal<'_> {
    fn kind(&self) -> StrategyKind {
        StrategyKind::Optimal
    }

    fn choose(&mut self, q: &Position, _last: Option<usize>) -> Result<usize, GameError> {
        let verdict = self.solver.solve(q)?;
        verdict
            .winning_move
            .or_else(|| bits(q.legal_moves()).next())
            .ok_or_else(|| GameError::StrategyInapplicable("no legal move".into()))
    }
}

pub struct FirstLegal;

impl Strategy for FirstLegal {
    fn kind(&self) -> StrategyKind {
        StrategyKind::FirstLegal
    }

    fn choose(&mut self, q: &Position, _last: Option<usize>) -> Result<usize, GameError> {
        bits(q.legal_moves())
            .next()
            .ok_or_else(|| GameError::StrategyInapplicable("no legal move".into()))
    }
}

/// Uniformly random legal move from a seeded generator.
pub struct UniformRandom {
    rng: ChaCha8Rng,
}

impl UniformRandom {
    pub fn new(seed: u64) -> Self {
        UniformRandom {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Strategy for UniformRandom {
    fn kind(&self) -> StrategyKind {
        StrategyKind::UniformRandom
    }

    fn choose(&mut self, q: &Position, _last: Option<usize>) -> Result<usize, GameError> {
        bits(q.legal_moves())
            .choose(&mut self.rng)
            .ok_or_else(|| GameError::StrategyInapplicable("no legal move".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, find_involution, hypercube, power};

    fn answer(g: &Graph, d: usize, first: usize) -> usize {
        let inv = find_involution(g, d).unwrap().unwrap();
        let q = Position::initial(g).unwrap().apply_move(first).unwrap();
        involution_strategy(&inv).choose(&q, Some(first)).unwrap()
    }

    #[test]
    fn involution_answers() {
        assert_eq!(answer(&cycle(6).unwrap(), 3, 0), 3);
        assert_eq!(answer(&hypercube(3).unwrap(), 3, 0b000), 0b111);
        assert_eq!(answer(&power(&cycle(8).unwrap(), 1).unwrap(), 3, 2), 6);
    }

    #[test]
    fn pairing_cannot_open_or_answer_taken_partner() {
        let c6 = cycle(6).unwrap();
        let inv = find_involution(&c6, 3).unwrap().unwrap();
        let mut s = involution_strategy(&inv);
        let q = Position::initial(&c6).unwrap();
        assert!(s.choose(&q, None).is_err());
        let q = Position::from_black(&c6, &[0, 3]).unwrap();
        assert!(s.choose(&q, Some(0)).is_err());
    }

    #[test]
    fn copy_pairing_layout() {
        // base + 3 copies of a 3-vertex block
        let p = bridged_copy_pairing(3, 3).unwrap();
        assert_eq!(p, vec![3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8]);
        assert!(bridged_copy_pairing(3, 2).is_err());
    }

    #[test]
    fn mirror_validation() {
        let c4 = cycle(4).unwrap();
        assert!(mirror_strategy(&c4, vec![1, 0, 3, 2]).is_ok());
        assert!(mirror_strategy(&c4, vec![0, 1, 3, 2]).is_err());
        assert!(mirror_strategy(&c4, vec![1, 2, 3, 0]).is_err());
        assert!(mirror_strategy(&c4, vec![1, 0]).is_err());
    }

    #[test]
    fn simple_policies() {
        let c6 = cycle(6).unwrap();
        let q = Position::from_black(&c6, &[0]).unwrap();
        assert_eq!(FirstLegal.choose(&q, None).unwrap(), 1);
        let mut a = UniformRandom::new(7);
        let mut b = UniformRandom::new(7);
        for _ in 0..20 {
            let x = a.choose(&q, None).unwrap();
            assert_eq!(x, b.choose(&q, None).unwrap());
            assert!(q.is_legal(x));
        }
    }
}
