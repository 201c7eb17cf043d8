//! Elementary cancellations and insertions as executable moves, and a
//! bounded breadth-first search over them.
//!
//! The search is an oracle, independent of the word machinery: a `Found`
//! answer carries a certified move sequence, while exhausting the bounds
//! proves nothing.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{hull3_contains, ratio, Point};
use crate::polyline::{validate_scene, ClosedPolyline, Polyline, PunctureSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Remove the vertex at `position`.
    Cancel { position: usize },
    /// Insert `point` so that it becomes the vertex at `position`, between
    /// the old vertices `position - 1` and `position` (cyclically).
    Insert { position: usize, point: Point },
}

fn hull_avoids(a: &Point, b: &Point, c: &Point, punctures: &PunctureSet) -> bool {
    !punctures
        .points()
        .iter()
        .any(|p| hull3_contains(a, b, c, p))
}

/// True iff vertex `index` can be removed: the triangle it spans with its
/// cyclic neighbours avoids every puncture. One-point lines admit no
/// cancellation.
pub fn cancellable(line: &ClosedPolyline, index: usize, punctures: &PunctureSet) -> Result<bool> {
    let v = line.vertices();
    let n = v.len();
    if index >= n {
        return Err(Error::IndexOutOfRange { index, len: n });
    }
    if n < 2 {
        return Ok(false);
    }
    let a = &v[(index + n - 1) % n];
    let c = &v[(index + 1) % n];
    Ok(hull_avoids(a, &v[index], c, punctures))
}

/// True iff inserting `point` at `position` is the inverse of a legal
/// cancellation.
pub fn insertable(
    line: &ClosedPolyline,
    position: usize,
    point: &Point,
    punctures: &PunctureSet,
) -> Result<bool> {
    let v = line.vertices();
    let n = v.len();
    if position > n {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: n + 1,
        });
    }
    let a = &v[(position + n - 1) % n];
    let c = &v[position % n];
    Ok(hull_avoids(a, point, c, punctures))
}

/// Applies a move after checking it is legal.
pub fn apply(line: &ClosedPolyline, m: &Move, punctures: &PunctureSet) -> Result<ClosedPolyline> {
    let mut v = line.vertices().to_vec();
    match m {
        Move::Cancel { position } => {
            if !cancellable(line, *position, punctures)? {
                return Err(Error::IllegalMove(format!(
                    "cannot cancel vertex {position}: its triangle meets a puncture or the line has one vertex"
                )));
            }
            v.remove(*position);
        }
        Move::Insert { position, point } => {
            if !insertable(line, *position, point, punctures)? {
                return Err(Error::IllegalMove(format!(
                    "cannot insert {point} at {position}: its triangle meets a puncture"
                )));
            }
            v.insert(*position, point.clone());
        }
    }
    ClosedPolyline::new(v)
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub universe: Vec<Point>,
    pub max_vertices: usize,
    pub max_depth: usize,
    /// Cap on visited states; reaching it ends the search inconclusively.
    pub max_states: usize,
}

impl SearchConfig {
    pub const DEFAULT_DEPTH: usize = 12;
    pub const DEFAULT_MAX_STATES: usize = 1_000_000;

    /// Explicit universe; punctures are dropped from it.
    pub fn new(
        universe: Vec<Point>,
        punctures: &PunctureSet,
        max_vertices: usize,
        max_depth: usize,
    ) -> Self {
        let mut kept: Vec<Point> = Vec::with_capacity(universe.len());
        for p in universe {
            if !punctures.points().contains(&p) && !kept.contains(&p) {
                kept.push(p);
            }
        }
        let universe = kept;
        SearchConfig {
            universe,
            max_vertices,
            max_depth,
            max_states: Self::DEFAULT_MAX_STATES,
        }
    }

    /// Integer grid `[x0, x1] x [y0, y1]` in row-major order, minus punctures.
    pub fn grid(
        x: (i64, i64),
        y: (i64, i64),
        punctures: &PunctureSet,
        max_vertices: usize,
        max_depth: usize,
    ) -> Self {
        let mut pts = Vec::new();
        for yy in y.0..=y.1 {
            for xx in x.0..=x.1 {
                pts.push(Point::int(xx, yy));
            }
        }
        let mut cfg = Self::new(Vec::new(), punctures, max_vertices, max_depth);
        cfg.universe = pts
            .into_iter()
            .filter(|p| !punctures.points().contains(p))
            .collect();
        cfg
    }

    /// Defaults for comparing `l1` and `l2`: the integer grid around both
    /// lines and the punctures widened by `margin`, plus the lines' own
    /// vertices; `|l1| + |l2| + 4` vertices and depth 12.
    pub fn around(
        l1: &ClosedPolyline,
        l2: &ClosedPolyline,
        punctures: &PunctureSet,
        margin: i64,
    ) -> Self {
        use num_traits::ToPrimitive;
        let all: Vec<&Point> = l1
            .vertices()
            .iter()
            .chain(l2.vertices())
            .chain(punctures.points())
            .collect();
        let floor = |r: &crate::geometry::Rational| r.floor().to_integer().to_i64().unwrap_or(0);
        let ceil = |r: &crate::geometry::Rational| r.ceil().to_integer().to_i64().unwrap_or(0);
        let x0 = all.iter().map(|p| floor(&p.x)).min().unwrap_or(0) - margin;
        let x1 = all.iter().map(|p| ceil(&p.x)).max().unwrap_or(0) + margin;
        let y0 = all.iter().map(|p| floor(&p.y)).min().unwrap_or(0) - margin;
        let y1 = all.iter().map(|p| ceil(&p.y)).max().unwrap_or(0) + margin;
        let mut cfg = Self::grid(
            (x0, x1),
            (y0, y1),
            punctures,
            l1.len() + l2.len() + 4,
            Self::DEFAULT_DEPTH,
        );
        for p in l1.vertices().iter().chain(l2.vertices()) {
            if !cfg.universe.contains(p) {
                cfg.universe.push(p.clone());
            }
        }
        cfg
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Moves taking `l1` to (a rotation of) `l2`.
    Found(Vec<Move>),
    /// Nothing found within the bounds; not a proof of non-homotopy.
    NoWithinBounds,
}

type State = Vec<u16>;

fn canonical(s: &[u16]) -> State {
    let n = s.len();
    let mut best = 0;
    for cand in 1..n {
        for k in 0..n {
            let a = s[(cand + k) % n];
            let b = s[(best + k) % n];
            if a != b {
                if a < b {
                    best = cand;
                }
                break;
            }
        }
    }
    s[best..].iter().chain(&s[..best]).copied().collect()
}

/// Universe of admissible vertices with a memoized legality table:
/// `free(a, b, c)` holds iff the hull of the three points avoids every
/// puncture.
pub struct MoveSpace<'a> {
    points: Vec<Point>,
    index: HashMap<Point, u16>,
    punctures: &'a PunctureSet,
    table: Table,
}

/// Tri-state memo (0 unknown, 1 free, 2 blocked); dense for small universes.
enum Table {
    Dense(Vec<u8>),
    Sparse(HashMap<(u16, u16, u16), bool>),
}

const DENSE_LIMIT: usize = 1 << 24;

impl<'a> MoveSpace<'a> {
    pub fn new(universe: &[Point], punctures: &'a PunctureSet) -> Result<Self> {
        if universe.len() >= u16::MAX as usize {
            return Err(Error::InvalidArgument("search universe too large".into()));
        }
        let mut points = Vec::new();
        let mut index = HashMap::new();
        for p in universe {
            if punctures.points().contains(p) {
                return Err(Error::OutsideUniverse(format!("{p} is a puncture")));
            }
            if !index.contains_key(p) {
                index.insert(p.clone(), points.len() as u16);
                points.push(p.clone());
            }
        }
        let u = points.len();
        Ok(MoveSpace {
            points,
            index,
            punctures,
            table: if u * u * u <= DENSE_LIMIT {
                Table::Dense(vec![0; u * u * u])
            } else {
                Table::Sparse(HashMap::new())
            },
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: u16) -> &Point {
        &self.points[i as usize]
    }

    fn free(&mut self, a: u16, b: u16, c: u16) -> bool {
        let u = self.points.len();
        let (points, punctures) = (&self.points, self.punctures);
        let compute = || {
            hull_avoids(
                &points[a as usize],
                &points[b as usize],
                &points[c as usize],
                punctures,
            )
        };
        match &mut self.table {
            Table::Dense(t) => {
                let key = (a as usize * u + b as usize) * u + c as usize;
                if t[key] == 0 {
                    t[key] = if compute() { 1 } else { 2 };
                }
                t[key] == 1
            }
            Table::Sparse(m) => *m.entry((a, b, c)).or_insert_with(compute),
        }
    }

    fn encode(&self, line: &ClosedPolyline) -> Result<State> {
        line.vertices()
            .iter()
            .map(|p| {
                self.index
                    .get(p)
                    .copied()
                    .ok_or_else(|| Error::OutsideUniverse(p.to_string()))
            })
            .collect()
    }

    fn decode(&self, s: &[u16]) -> ClosedPolyline {
        ClosedPolyline::new(s.iter().map(|&i| self.points[i as usize].clone()).collect())
            .expect("nonempty state")
    }

    /// True iff no puncture lies on the closed line `s`.
    fn valid(&mut self, s: &[u16]) -> bool {
        let n = s.len();
        (0..n).all(|i| self.free(s[i], s[(i + 1) % n], s[(i + 1) % n]))
    }

    fn cancel_ok(&mut self, s: &[u16], i: usize) -> bool {
        let n = s.len();
        n >= 2 && self.free(s[(i + n - 1) % n], s[i], s[(i + 1) % n])
    }

    /// All states one legal move away, in a fixed order: cancellations by
    /// position, then insertions by position and universe order.
    fn neighbours(&mut self, s: &[u16], max_vertices: usize, order: &[u16], out: &mut Vec<State>) {
        out.clear();
        let n = s.len();
        for i in 0..n {
            if self.cancel_ok(s, i) {
                let mut t = s.to_vec();
                t.remove(i);
                out.push(t);
            }
        }
        if n < max_vertices {
            for i in 0..n {
                let a = s[(i + n - 1) % n];
                let c = s[i];
                for &p in order {
                    if self.free(a, p, c) {
                        let mut t = s.to_vec();
                        t.insert(i, p);
                        out.push(t);
                    }
                }
            }
        }
    }

    /// Finds a single legal move turning `from` into some rotation of `to`.
    fn move_between(&mut self, from: &[u16], to: &State) -> Option<Move> {
        let n = from.len();
        for i in 0..n {
            if self.cancel_ok(from, i) {
                let mut t = from.to_vec();
                t.remove(i);
                if canonical(&t) == *to {
                    return Some(Move::Cancel { position: i });
                }
            }
        }
        for i in 0..n {
            let a = from[(i + n - 1) % n];
            let c = from[i];
            for &p in to {
                if self.free(a, p, c) {
                    let mut t = from.to_vec();
                    t.insert(i, p);
                    if canonical(&t) == *to {
                        return Some(Move::Insert {
                            position: i,
                            point: self.points[p as usize].clone(),
                        });
                    }
                }
            }
        }
        None
    }

    /// Connected components of every valid line with at most
    /// `max_vertices` vertices from the universe, under legal moves.
    ///
    /// Only cancellations need to be followed: every insertion is the
    /// reverse of a cancellation from a state that is also enumerated.
    pub fn components(&mut self, max_vertices: usize) -> Components {
        let u = self.points.len();
        let mut states: Vec<State> = Vec::new();
        let mut ids: HashMap<State, usize> = HashMap::new();
        for k in 1..=max_vertices {
            let mut digits = vec![0u16; k];
            if u == 0 {
                break;
            }
            loop {
                if canonical(&digits) == digits && self.valid(&digits) {
                    ids.insert(digits.clone(), states.len());
                    states.push(digits.clone());
                }
                // odometer increment
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if (digits[pos] as usize) < u {
                        break;
                    }
                    digits[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
        let mut parent: Vec<usize> = (0..states.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (id, s) in states.iter().enumerate() {
            for i in 0..s.len() {
                if self.cancel_ok(s, i) {
                    let mut t = s.clone();
                    t.remove(i);
                    let other = ids[&canonical(&t)];
                    let (ra, rb) = (find(&mut parent, id), find(&mut parent, other));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let component = (0..states.len()).map(|i| find(&mut parent, i)).collect();
        Components {
            lines: states.iter().map(|s| self.decode(s)).collect(),
            component,
        }
    }
}

/// Result of [`MoveSpace::components`]: `component[i]` is the index of the
/// representative line of the component holding `lines[i]`.
#[derive(Debug, Clone)]
pub struct Components {
    pub lines: Vec<ClosedPolyline>,
    pub component: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.component
            .iter()
            .enumerate()
            .filter(|(i, c)| *i == **c)
            .count()
    }
}

/// Bidirectional breadth-first search for a chain of legal moves from `l1`
/// to `l2` inside the configured bounds.
pub fn bfs_homotopic(
    l1: &ClosedPolyline,
    l2: &ClosedPolyline,
    punctures: &PunctureSet,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    bfs_with_order(l1, l2, punctures, cfg, None)
}

/// As [`bfs_homotopic`], with insertion candidates shuffled by `seed`. The
/// reachable set is unchanged; only the certificate may differ.
pub fn bfs_homotopic_seeded(
    l1: &ClosedPolyline,
    l2: &ClosedPolyline,
    punctures: &PunctureSet,
    cfg: &SearchConfig,
    seed: u64,
) -> Result<SearchOutcome> {
    bfs_with_order(l1, l2, punctures, cfg, Some(seed))
}

fn bfs_with_order(
    l1: &ClosedPolyline,
    l2: &ClosedPolyline,
    punctures: &PunctureSet,
    cfg: &SearchConfig,
    seed: Option<u64>,
) -> Result<SearchOutcome> {
    validate_scene(punctures, &[l1 as &dyn Polyline, l2])?;
    if cfg.max_vertices < l1.len().max(l2.len()) {
        return Err(Error::InvalidArgument(format!(
            "max_vertices {} is below the input line lengths",
            cfg.max_vertices
        )));
    }
    let mut space = MoveSpace::new(&cfg.universe, punctures)?;
    let start = space.encode(l1)?;
    let goal = space.encode(l2)?;
    let mut order: Vec<u16> = (0..space.len() as u16).collect();
    if let Some(seed) = seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }

    let start_key = canonical(&start);
    let goal_key = canonical(&goal);
    if start_key == goal_key {
        return Ok(SearchOutcome::Found(Vec::new()));
    }

    // parent maps per side: state -> predecessor (None at the root)
    let mut seen: [HashMap<State, Option<State>>; 2] = [HashMap::new(), HashMap::new()];
    seen[0].insert(start_key.clone(), None);
    seen[1].insert(goal_key.clone(), None);
    let mut frontier: [VecDeque<State>; 2] =
        [VecDeque::from([start_key]), VecDeque::from([goal_key])];
    let mut depth = [0usize; 2];
    let mut buf = Vec::new();

    let meet = 'search: loop {
        if depth[0] + depth[1] >= cfg.max_depth {
            break None;
        }
        // grow the smaller nonempty frontier
        let side = if !frontier[0].is_empty()
            && (frontier[1].is_empty() || frontier[0].len() <= frontier[1].len())
        {
            0
        } else {
            1
        };
        if frontier[side].is_empty() {
            break None;
        }
        let layer: Vec<State> = frontier[side].drain(..).collect();
        depth[side] += 1;
        for s in layer {
            space.neighbours(&s, cfg.max_vertices, &order, &mut buf);
            for t in buf.drain(..) {
                let key = canonical(&t);
                if seen[side].contains_key(&key) {
                    continue;
                }
                seen[side].insert(key.clone(), Some(s.clone()));
                if seen[1 - side].contains_key(&key) {
                    break 'search Some(key);
                }
                if seen[0].len() + seen[1].len() >= cfg.max_states {
                    break 'search None;
                }
                frontier[side].push_back(key);
            }
        }
    };

    let Some(meet) = meet else {
        return Ok(SearchOutcome::NoWithinBounds);
    };

    // canonical chain start .. meet .. goal
    let mut chain = Vec::new();
    let mut cur = Some(meet.clone());
    while let Some(s) = cur {
        cur = seen[0][&s].clone();
        chain.push(s);
    }
    chain.reverse();
    let mut cur = seen[1][&meet].clone();
    while let Some(s) = cur {
        cur = seen[1][&s].clone();
        chain.push(s);
    }

    let mut moves = Vec::new();
    let mut actual = start;
    for next in &chain[1..] {
        let m = space
            .move_between(&actual, next)
            .expect("consecutive search states differ by one legal move");
        match &m {
            Move::Cancel { position } => {
                actual.remove(*position);
            }
            Move::Insert { position, point } => {
                actual.insert(*position, space.index[point]);
            }
        }
        moves.push(m);
    }
    Ok(SearchOutcome::Found(moves))
}

/// Replays a move sequence, checking legality at every step.
pub fn replay(
    line: &ClosedPolyline,
    moves: &[Move],
    punctures: &PunctureSet,
) -> Result<ClosedPolyline> {
    moves
        .iter()
        .try_fold(line.clone(), |l, m| apply(&l, m, punctures))
}

/// `steps` random legal moves, reproducible from `seed`. Inserted points are
/// drawn from a half-integer lattice around the line; steps without a legal
/// candidate are skipped.
pub fn random_walk(
    line: &ClosedPolyline,
    punctures: &PunctureSet,
    steps: usize,
    seed: u64,
) -> Result<ClosedPolyline> {
    validate_scene(punctures, &[line as &dyn Polyline])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = line.clone();
    let base = line.len();
    let (lo, hi) = lattice_box(line, punctures);
    for _ in 0..steps {
        let n = cur.len();
        let prefer_cancel = n > 2 * base + 8;
        let want_cancel = n >= 2 && (prefer_cancel || rng.gen_bool(0.5));
        let mut done = false;
        if want_cancel {
            for _ in 0..8 {
                let i = rng.gen_range(0..n);
                if cancellable(&cur, i, punctures)? {
                    cur = apply(&cur, &Move::Cancel { position: i }, punctures)?;
                    done = true;
                    break;
                }
            }
        }
        if !done {
            for _ in 0..8 {
                let position = rng.gen_range(0..=n);
                let point = Point::new(
                    ratio(rng.gen_range(2 * lo..=2 * hi), 2),
                    ratio(rng.gen_range(2 * lo..=2 * hi), 2),
                );
                if insertable(&cur, position, &point, punctures)? {
                    cur = apply(&cur, &Move::Insert { position, point }, punctures)?;
                    break;
                }
            }
        }
    }
    Ok(cur)
}

fn lattice_box(line: &ClosedPolyline, punctures: &PunctureSet) -> (i64, i64) {
    use num_traits::ToPrimitive;
    let coords = line
        .vertices()
        .iter()
        .chain(punctures.points())
        .flat_map(|p| [p.x.clone(), p.y.clone()]);
    let mut lo = 0i64;
    let mut hi = 0i64;
    for c in coords {
        lo = lo.min(c.floor().to_integer().to_i64().unwrap_or(0));
        hi = hi.max(c.ceil().to_integer().to_i64().unwrap_or(0));
    }
    (lo - 2, hi + 2)
}
