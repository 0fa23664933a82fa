use std::io::{BufRead, Write};

use domgame_core::game::{mask_to_vec, GameError, Optimal, Position, Strategy};
use domgame_core::graph::Graph;

fn show(out: &mut impl Write, q: &Position) -> std::io::Result<()> {
    writeln!(
        out,
        "  B = {:?}  S = {:?}  W = {:?}",
        mask_to_vec(q.black()),
        mask_to_vec(q.shaded()),
        mask_to_vec(q.white())
    )
}

/// Human against the optimal solver. Bad input is reported and the prompt
/// repeated; end of input abandons the game. Returns whether the human won,
/// or `None` if the game was abandoned.
pub fn play_interactive(
    g: &Graph,
    human_first: bool,
    budget: u64,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<Option<bool>, GameError> {
    let io = |e: std::io::Error| GameError::InvalidPosition(format!("i/o: {e}"));
    let mut solver = Optimal::new(g, budget);
    let mut q = Position::initial(g)?;
    let mut human_turn = human_first;
    let mut last = None;
    let mut human_moved_last = false;
    writeln!(
        out,
        "{} vertices; {} moves first. Enter a vertex number, or 'quit'.",
        g.n(),
        if human_first { "you" } else { "the solver" }
    )
    .map_err(io)?;
    while !q.is_trivial() {
        show(out, &q).map_err(io)?;
        let u = if human_turn {
            loop {
                write!(out, "your move> ").map_err(io)?;
                out.flush().map_err(io)?;
                let mut line = String::new();
                if input.read_line(&mut line).map_err(io)? == 0 {
                    writeln!(out, "\ninput closed, game abandoned").map_err(io)?;
                    return Ok(None);
                }
                let line = line.trim();
                if line.eq_ignore_ascii_case("quit") || line.eq_ignore_ascii_case("q") {
                    writeln!(out, "game abandoned").map_err(io)?;
                    return Ok(None);
                }
                match line.parse::<usize>() {
                    Ok(v) if q.is_legal(v) => break v,
                    Ok(v) => writeln!(out, "vertex {v} is not a legal move").map_err(io)?,
                    Err(_) => writeln!(out, "expected a vertex number").map_err(io)?,
                }
            }
        } else {
            let v = solver.choose(&q, last)?;
            writeln!(out, "solver plays {v}").map_err(io)?;
            v
        };
        q = q.apply_move(u)?;
        last = Some(u);
        human_moved_last = human_turn;
        human_turn = !human_turn;
    }
    show(out, &q).map_err(io)?;
    writeln!(
        out,
        "{}",
        if human_moved_last { "you win" } else { "solver wins" }
    )
    .map_err(io)?;
    Ok(Some(human_moved_last))
}
