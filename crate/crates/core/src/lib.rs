//! Exact analysis of the snooker-domination game: two players alternately
//! choose vertices of a graph until the chosen set dominates it, and the
//! last player to choose wins.

pub mod game;
pub mod graph;
pub mod paths;
pub mod verify;
