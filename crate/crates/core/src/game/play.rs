use serde::{Deserialize, Serialize};

use super::{bits, GameError, Position, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Player {
    First,
    Second,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::First => Player::Second,
            Player::Second => Player::First,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptMove {
    pub player: Player,
    pub vertex: usize,
    /// White vertices left after this move.
    pub white_remaining: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub moves: Vec<TranscriptMove>,
    pub winner: Player,
}

/// Alternates `first` and `second` from `q` until no white vertex remains.
/// The last player to move wins; from an already finished position the
/// second player is declared the winner.
pub fn play(
    q: &Position,
    first: &mut dyn Strategy,
    second: &mut dyn Strategy,
) -> Result<Transcript, GameError> {
    let mut q = *q;
    let mut moves = Vec::new();
    let mut last = None;
    let mut mover = Player::First;
    while !q.is_trivial() {
        let strategy: &mut dyn Strategy = match mover {
            Player::First => &mut *first,
            Player::Second => &mut *second,
        };
        let u = strategy.choose(&q, last)?;
        q = q.apply_move(u)?;
        moves.push(TranscriptMove {
            player: mover,
            vertex: u,
            white_remaining: q.white().count_ones() as usize,
        });
        last = Some(u);
        mover = mover.other();
    }
    let winner = moves.last().map_or(Player::Second, |m| m.player);
    Ok(Transcript { moves, winner })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdversaryReport {
    /// Complete games explored.
    pub playouts: u64,
    pub longest: usize,
}

/// Tries every move sequence of a first player against `responder` playing
/// second. Fails with [`GameError::AdversaryWins`] as soon as the first
/// player makes the last move of some playout, or with the responder's own
/// error if it cannot answer.
pub fn exhaustive_adversary(
    q: &Position,
    responder: &mut dyn Strategy,
) -> Result<AdversaryReport, GameError> {
    let mut report = AdversaryReport {
        playouts: 0,
        longest: 0,
    };
    let mut line = Vec::new();
    explore(q, responder, &mut line, &mut report)?;
    Ok(report)
}

fn explore(
    q: &Position,
    responder: &mut dyn Strategy,
    line: &mut Vec<usize>,
    report: &mut AdversaryReport,
) -> Result<(), GameError> {
    if q.is_trivial() {
        report.playouts += 1;
        report.longest = report.longest.max(line.len());
        return Ok(());
    }
    for u in bits(q.legal_moves()) {
        line.push(u);
        let after = q.apply_move(u)?;
        if after.is_trivial() {
            return Err(GameError::AdversaryWins(line.clone()));
        }
        let v = responder.choose(&after, Some(u))?;
        let reply = after.apply_move(v)?;
        line.push(v);
        explore(&reply, responder, line, report)?;
        line.truncate(line.len() - 2);
    }
    Ok(())
}
