use domgame_core::game::{
    mask_to_vec, solve, solve_parallel, winning_moves, Outcome, Position, Solver, DEFAULT_BUDGET,
};
use domgame_core::graph::{cycle, distance, find_involution, hypercube, path, Graph};
use domgame_core::paths::{classify_standard, PathPosition};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i % bits.len()] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, proptest::collection::vec(any::<bool>(), 45))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

fn partitions(max: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, largest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for k in (1..=largest.min(rest)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn playouts_keep_the_partition(g in small_graph(), picks in proptest::collection::vec(any::<usize>(), 10)) {
        let mut q = Position::initial(&g).unwrap();
        for p in picks {
            if q.is_trivial() {
                break;
            }
            let moves = mask_to_vec(q.legal_moves());
            let next = q.apply_move(moves[p % moves.len()]).unwrap();
            prop_assert!(next.check_invariants().is_ok());
            prop_assert_eq!(
                (next.shaded() | next.white()).count_ones() + 1,
                (q.shaded() | q.white()).count_ones()
            );
            prop_assert_eq!(next.black().count_ones(), q.black().count_ones() + 1);
            q = next;
        }
    }

    #[test]
    fn winning_moves_agree_with_the_verdict(g in small_graph()) {
        let q = Position::initial(&g).unwrap();
        let v = solve(&q, DEFAULT_BUDGET).unwrap();
        let wins = winning_moves(&q, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(v.outcome == Outcome::N, !wins.is_empty());
        prop_assert_eq!(v.winning_move, wins.first().copied());
        for u in wins {
            let child = q.apply_move(u).unwrap();
            prop_assert_eq!(solve(&child, DEFAULT_BUDGET).unwrap().outcome, Outcome::P);
        }
    }

    #[test]
    fn solving_is_repeatable(g in small_graph()) {
        let q = Position::initial(&g).unwrap();
        let a = solve(&q, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(a, solve(&q, DEFAULT_BUDGET).unwrap());
        let mut warm = Solver::new(&g, DEFAULT_BUDGET);
        warm.solve(&q).unwrap();
        let again = warm.solve(&q).unwrap();
        prop_assert_eq!((again.outcome, again.winning_move), (a.outcome, a.winning_move));
        let par = solve_parallel(&q, DEFAULT_BUDGET, 3).unwrap();
        prop_assert_eq!((par.outcome, par.winning_move), (a.outcome, a.winning_move));
    }

    #[test]
    fn found_involutions_are_certified(g in small_graph(), d in 1usize..4) {
        if let Some(inv) = find_involution(&g, d).unwrap() {
            prop_assert!(g.is_automorphism(inv.perm()));
            for v in 0..g.n() {
                prop_assert_eq!(inv.apply(inv.apply(v)), v);
                if let Some(k) = distance(&g, v, inv.apply(v)).unwrap() {
                    prop_assert!(k >= d);
                }
            }
        }
    }
}

#[test]
fn involutions_on_standard_families() {
    for n in 1..=12 {
        assert!(find_involution(&path(n).unwrap(), 3).unwrap().is_none(), "P{n}");
    }
    for m in 3..=10 {
        assert!(find_involution(&cycle(2 * m).unwrap(), 3).unwrap().is_some(), "C{}", 2 * m);
    }
    for d in 3..=5 {
        assert!(find_involution(&hypercube(d).unwrap(), 3).unwrap().is_some(), "Q{d}");
    }
}

#[test]
fn totally_even_positions_survive_one_move() {
    let mut checked = 0;
    for sizes in partitions(14) {
        let q = PathPosition::standard(&sizes);
        if q.is_trivial() || !q.is_totally_even().unwrap() {
            continue;
        }
        for mv in q.moves() {
            assert!(!q.play(mv).unwrap().is_trivial(), "{q} via {mv:?}");
        }
        checked += 1;
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn second_player_reply_is_free_with_ten_white() {
    let mut checked = 0;
    for sizes in partitions(18) {
        let q = PathPosition::standard(&sizes);
        if !q.is_even() || q.white() < 10 {
            continue;
        }
        for u in q.moves() {
            let after = q.play(u).unwrap();
            for v in after.moves() {
                let r = after.play(v).unwrap();
                assert_eq!(classify_standard(&r).unwrap().outcome, Outcome::P, "{q}: {r}");
            }
        }
        checked += 1;
    }
    assert!(checked > 100, "{checked}");
}
