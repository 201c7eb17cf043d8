mod common;

use std::collections::BTreeSet;

use homotopy_core::graph::{based_cycle_word, cycle_word, graph_based_homotopic, graph_homotopic};
use homotopy_core::poincare::{cyclic_poincare_word, realize_word, RaySystem};
use homotopy_core::{BasedCycle, Graph, OrientedCycle, Point, Polyline, PunctureSet, Traversal};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A connected multigraph: a random tree plus extra edges, loops allowed.
fn random_graph<R: Rng>(rng: &mut R) -> Graph {
    let v = rng.gen_range(1..=6);
    let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (rng.gen_range(0..i), i)).collect();
    for _ in 0..rng.gen_range(1..=4) {
        edges.push((rng.gen_range(0..v), rng.gen_range(0..v)));
    }
    // shuffle so that the spanning tree is not always the first edges
    for i in (1..edges.len()).rev() {
        edges.swap(i, rng.gen_range(0..=i));
    }
    Graph::new(v, edges, rng.gen_range(0..v), None).unwrap()
}

/// A random closed walk from the basepoint.
fn random_walk<R: Rng>(rng: &mut R, g: &Graph, max_len: usize) -> Vec<Traversal> {
    let len = rng.gen_range(0..=max_len);
    let mut steps = Vec::new();
    let mut at = g.basepoint();
    for _ in 0..len {
        let out: Vec<Traversal> = (0..g.edges().len())
            .flat_map(|e| [Traversal::fwd(e), Traversal::back(e)])
            .filter(|&t| g.tail(t) == at)
            .collect();
        let t = out[rng.gen_range(0..out.len())];
        steps.push(t);
        at = g.head(t);
    }
    // walk home along any path found by search over all edges
    steps.extend(path_between(g, at, g.basepoint()));
    steps
}

fn path_between(g: &Graph, from: usize, to: usize) -> Vec<Traversal> {
    let mut prev: Vec<Option<Traversal>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for e in 0..g.edges().len() {
            for t in [Traversal::fwd(e), Traversal::back(e)] {
                if g.tail(t) == x && !seen[g.head(t)] {
                    seen[g.head(t)] = true;
                    prev[g.head(t)] = Some(t);
                    queue.push_back(g.head(t));
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some(t) = prev[cur] {
        path.push(t);
        cur = g.tail(t);
    }
    path.reverse();
    path
}

/// Inserts `t t⁻¹` for a tree edge `t` at a random point of the walk.
fn add_tree_detour<R: Rng>(rng: &mut R, g: &Graph, steps: &mut Vec<Traversal>) -> bool {
    let k = rng.gen_range(0..=steps.len());
    let at = if k == 0 {
        g.basepoint()
    } else {
        g.head(steps[k - 1])
    };
    let options: Vec<Traversal> = g
        .tree_edges()
        .into_iter()
        .flat_map(|e| [Traversal::fwd(e), Traversal::back(e)])
        .filter(|&t| g.tail(t) == at)
        .collect();
    if options.is_empty() {
        return false;
    }
    let t = options[rng.gen_range(0..options.len())];
    steps.splice(k..k, [t, t.reversed()]);
    true
}

proptest! {
    #[test]
    fn tree_detours_keep_the_word(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut r);
        let steps = random_walk(&mut r, &g, 8);
        let word = based_cycle_word(&BasedCycle::new(&g, steps.clone()).unwrap(), &g).unwrap().reduce();
        let mut detoured = steps.clone();
        for _ in 0..4 {
            add_tree_detour(&mut r, &g, &mut detoured);
        }
        let c = BasedCycle::new(&g, detoured).unwrap();
        prop_assert_eq!(based_cycle_word(&c, &g).unwrap().reduce(), word);
        prop_assert!(graph_based_homotopic(&c, &BasedCycle::new(&g, steps).unwrap(), &g).unwrap());
    }

    #[test]
    fn concatenation_multiplies(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut r);
        let c1 = BasedCycle::new(&g, random_walk(&mut r, &g, 6)).unwrap();
        let c2 = BasedCycle::new(&g, random_walk(&mut r, &g, 6)).unwrap();
        let (w1, w2) = (based_cycle_word(&c1, &g).unwrap(), based_cycle_word(&c2, &g).unwrap());
        prop_assert_eq!(
            based_cycle_word(&c1.concat(&c2), &g).unwrap().reduce(),
            homotopy_core::words::multiply(&w1, &w2).unwrap()
        );
        // swapping the factors only conjugates
        prop_assert!(graph_homotopic(&c1.concat(&c2).to_cycle(), &c2.concat(&c1).to_cycle(), &g).unwrap());
    }

    #[test]
    fn rotation_and_reversal(seed in any::<u64>(), k in 0usize..16) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut r);
        let steps = random_walk(&mut r, &g, 8);
        let c = OrientedCycle::new(&g, steps.clone()).unwrap();
        let mut rotated = steps.clone();
        if !rotated.is_empty() {
            let n = rotated.len();
            rotated.rotate_left(k % n);
        }
        let rc = OrientedCycle::new(&g, rotated).unwrap();
        prop_assert!(graph_homotopic(&c, &rc, &g).unwrap());
        prop_assert_eq!(
            cycle_word(&c.reversed(), &g).unwrap().cyclic_reduce(),
            cycle_word(&c, &g).unwrap().inverse().cyclic_reduce()
        );
    }
}

#[test]
fn thousand_detours() {
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let g = Graph::new(
        5,
        vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 1), (3, 3)],
        0,
        None,
    )
    .unwrap();
    let steps = random_walk(&mut r, &g, 10);
    let word = based_cycle_word(&BasedCycle::new(&g, steps.clone()).unwrap(), &g)
        .unwrap()
        .reduce();
    let mut added = 0;
    for _ in 0..1000 {
        let mut s = steps.clone();
        if add_tree_detour(&mut r, &g, &mut s) {
            added += 1;
            let c = BasedCycle::new(&g, s).unwrap();
            assert_eq!(based_cycle_word(&c, &g).unwrap().reduce(), word);
        }
    }
    assert_eq!(added, 1000);
}

#[test]
fn wedge_matches_plane() {
    for n in 1..=3 {
        let g = Graph::wedge_of_cycles(n).unwrap();
        let ps =
            PunctureSet::from_ints(&(0..n as i64).map(|i| (3 * i, 0)).collect::<Vec<_>>()).unwrap();
        let x = Point::int(-2, 2);
        let mut graph_classes = BTreeSet::new();
        let mut plane_classes = BTreeSet::new();
        for w in common::all_reduced_words(n, 4) {
            let cycle = g.based_cycle_for_word(&w).unwrap();
            assert_eq!(based_cycle_word(&cycle, &g).unwrap().reduce(), w);
            let from_graph = cycle_word(&cycle.to_cycle(), &g).unwrap().cyclic_reduce();
            let line = realize_word(&w, &ps, &x).unwrap().to_closed();
            let rays = RaySystem::build(&ps, &[&line as &dyn Polyline]);
            let from_plane = cyclic_poincare_word(&line, &rays).unwrap().cyclic_reduce();
            assert_eq!(from_graph, from_plane, "{w}");
            graph_classes.insert(from_graph.to_string());
            plane_classes.insert(from_plane.to_string());
        }
        // every economical cyclic word of length at most 4 shows up on both sides
        let all: BTreeSet<String> = common::all_reduced_words(n, 4)
            .iter()
            .map(|w| w.to_cyclic().cyclic_reduce())
            .filter(|c| c.len() <= 4)
            .map(|c| c.to_string())
            .collect();
        assert!(all.is_subset(&graph_classes));
        assert_eq!(graph_classes, plane_classes);
    }
}

#[test]
fn bad_walks_are_rejected() {
    let g = Graph::wedge_of_cycles(2).unwrap();
    assert!(OrientedCycle::new(&g, vec![Traversal::fwd(0)]).is_err());
    assert!(BasedCycle::new(&g, vec![Traversal::fwd(1), Traversal::fwd(0)]).is_err());
    assert!(OrientedCycle::new(&g, vec![Traversal::fwd(9)]).is_err());
    assert!(Graph::new(3, vec![(0, 1), (1, 2), (2, 0)], 0, Some(vec![0, 1, 2])).is_err());
    assert!(Graph::new(3, vec![(0, 1)], 0, None).is_err());
}
