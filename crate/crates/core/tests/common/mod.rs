//! Random scene generators and brute-force oracles shared by the
//! integration tests and the acceptance runner.

#![allow(dead_code)]

use homotopy_core::geometry::{orient, ratio, Orientation};
use homotopy_core::poincare::realize_word;
use homotopy_core::polyline::validate_scene;
use homotopy_core::search::{apply, cancellable, insertable, Move};
use homotopy_core::{BasedPolyline, ClosedPolyline, Letter, Point, Polyline, PunctureSet, Word};
use rand::Rng;

/// Distinct punctures on the half-integer lattice in `[-4, 4]^2`.
pub fn random_punctures<R: Rng>(rng: &mut R, n: usize) -> PunctureSet {
    let mut pts: Vec<Point> = Vec::new();
    while pts.len() < n {
        let p = Point::new(
            ratio(rng.gen_range(-8..=8), 2),
            ratio(rng.gen_range(-8..=8), 2),
        );
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PunctureSet::new(pts).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter {
            generator: rng.gen_range(0..rank),
            inverse: rng.gen_bool(0.5),
        })
        .collect();
    Word::new(letters, rank).unwrap()
}

pub fn random_reduced_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    random_word(rng, rank, max_len).reduce()
}

/// Every reduced word of length at most `max_len` on `rank` generators.
pub fn all_reduced_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::<Letter>::new()];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..rank {
                for inverse in [false, true] {
                    let l = Letter {
                        generator: g,
                        inverse,
                    };
                    if w.last().is_some_and(|last| last.cancels(l)) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter()
        .map(|l| Word::new(l, rank).unwrap())
        .collect()
}

/// A point of the quarter-integer lattice in `[-6, 6]^2` avoiding punctures.
pub fn random_point<R: Rng>(rng: &mut R, punctures: &PunctureSet) -> Point {
    loop {
        let p = Point::new(
            ratio(rng.gen_range(-24..=24), 4),
            ratio(rng.gen_range(-24..=24), 4),
        );
        if !punctures.points().contains(&p) {
            return p;
        }
    }
}

/// A random polygon with `1..=max_vertices` vertices that avoids punctures.
pub fn random_polygon<R: Rng>(
    rng: &mut R,
    punctures: &PunctureSet,
    max_vertices: usize,
) -> ClosedPolyline {
    loop {
        let k = rng.gen_range(1..=max_vertices);
        let v: Vec<Point> = (0..k).map(|_| random_point(rng, punctures)).collect();
        let line = ClosedPolyline::new(v).unwrap();
        if validate_scene(punctures, &[&line as &dyn Polyline]).is_ok() {
            return line;
        }
    }
}

/// A random based polygon from `basepoint` that avoids punctures.
pub fn random_based_polygon<R: Rng>(
    rng: &mut R,
    punctures: &PunctureSet,
    basepoint: &Point,
    max_vertices: usize,
) -> BasedPolyline {
    loop {
        let k = rng.gen_range(0..max_vertices);
        let mut v = vec![basepoint.clone()];
        v.extend((0..k).map(|_| random_point(rng, punctures)));
        let line = BasedPolyline::new(v).unwrap();
        if validate_scene(punctures, &[&line as &dyn Polyline]).is_ok() {
            return line;
        }
    }
}

/// Either a random polygon or the realization of a random word.
pub fn random_line<R: Rng>(rng: &mut R, punctures: &PunctureSet) -> ClosedPolyline {
    if rng.gen_bool(0.5) {
        random_polygon(rng, punctures, 8)
    } else {
        let w = random_word(rng, punctures.len(), 6);
        let x = random_point(rng, punctures);
        realize_word(&w, punctures, &x).unwrap().to_closed()
    }
}

/// One random legal cancellation or insertion, or `None` if none was found
/// in a few tries.
pub fn random_move<R: Rng>(
    rng: &mut R,
    line: &ClosedPolyline,
    punctures: &PunctureSet,
) -> Option<ClosedPolyline> {
    for _ in 0..32 {
        let n = line.len();
        let m = if n > 1 && rng.gen_bool(0.5) {
            let position = rng.gen_range(0..n);
            if !cancellable(line, position, punctures).unwrap() {
                continue;
            }
            Move::Cancel { position }
        } else {
            if n > 24 {
                continue;
            }
            let position = rng.gen_range(0..=n);
            let point = random_point(rng, punctures);
            if !insertable(line, position, &point, punctures).unwrap() {
                continue;
            }
            Move::Insert { position, point }
        };
        return Some(apply(line, &m, punctures).unwrap());
    }
    None
}

/// Convex hull (counterclockwise, no collinear points) by monotone chain.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.cmp(&b.x).then(a.y.cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
                != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
                != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Reduces by cancelling a uniformly random adjacent inverse pair until none
/// is left; `cyclic` also allows the last and first letters to cancel.
pub fn reduce_in_random_order<R: Rng>(
    rng: &mut R,
    letters: &[Letter],
    cyclic: bool,
) -> Vec<Letter> {
    let mut w = letters.to_vec();
    loop {
        let n = w.len();
        let mut spots: Vec<usize> = (0..n.saturating_sub(1))
            .filter(|&i| w[i].cancels(w[i + 1]))
            .collect();
        if cyclic && n >= 2 && w[n - 1].cancels(w[0]) {
            spots.push(n - 1);
        }
        if spots.is_empty() {
            return w;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        if i == n - 1 {
            w.pop();
            w.remove(0);
        } else {
            w.drain(i..i + 2);
        }
    }
}

/// Mod-2 cyclic version: equal neighbours (cyclically) cancel.
pub fn reduce_mod2_in_random_order<R: Rng>(rng: &mut R, letters: &[usize]) -> Vec<usize> {
    let mut w = letters.to_vec();
    loop {
        let n = w.len();
        let mut spots: Vec<usize> = (0..n.saturating_sub(1))
            .filter(|&i| w[i] == w[i + 1])
            .collect();
        if n >= 2 && w[n - 1] == w[0] {
            spots.push(n - 1);
        }
        if spots.is_empty() {
            return w;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        if i == n - 1 {
            w.pop();
            w.remove(0);
        } else {
            w.drain(i..i + 2);
        }
    }
}

/// All perfect matchings of `items` (an even-length list).
pub fn matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for k in 1..items.len() {
        let rest: Vec<usize> = items[1..]
            .iter()
            .enumerate()
            .filter(|(j, _)| j + 1 != k)
            .map(|(_, &x)| x)
            .collect();
        for mut m in matchings(&rest) {
            m.push((first, items[k]));
            out.push(m);
        }
    }
    out
}

/// Chords cross iff exactly one endpoint of one lies strictly between the
/// endpoints of the other; checked here by brute-force side counting.
pub fn chords_cross_oracle(c: (usize, usize), d: (usize, usize)) -> bool {
    let (lo, hi) = (c.0.min(c.1), c.0.max(c.1));
    let inside = |x: usize| lo < x && x < hi;
    inside(d.0) != inside(d.1)
}
