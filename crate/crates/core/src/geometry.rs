//! Exact planar primitives.
//!
//! Every predicate here is evaluated over arbitrary-precision rationals, so
//! answers never depend on rounding. The only floating-point routine is
//! [`oriented_angle`], which exists as an independent cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Unreduced fraction with machine-word parts. Predicates try this first and
/// fall back to [`Rational`] when any step would overflow, so results stay
/// exact either way.
#[derive(Clone, Copy)]
struct Small {
    num: i128,
    den: i128,
}

impl Small {
    fn of(r: &Rational) -> Option<Small> {
        Some(Small {
            num: r.numer().to_i64()? as i128,
            den: r.denom().to_i64()? as i128,
        })
    }

    fn int(n: i64) -> Small {
        Small {
            num: n as i128,
            den: 1,
        }
    }

    fn sub(self, o: Small) -> Option<Small> {
        if self.den == o.den {
            return Some(Small {
                num: self.num.checked_sub(o.num)?,
                den: self.den,
            });
        }
        Some(Small {
            num: self
                .num
                .checked_mul(o.den)?
                .checked_sub(o.num.checked_mul(self.den)?)?,
            den: self.den.checked_mul(o.den)?,
        })
    }

    fn add(self, o: Small) -> Option<Small> {
        self.sub(Small {
            num: o.num.checked_neg()?,
            den: o.den,
        })
    }

    fn mul(self, o: Small) -> Option<Small> {
        Some(Small {
            num: self.num.checked_mul(o.num)?,
            den: self.den.checked_mul(o.den)?,
        })
    }

    /// Denominators stay positive, so the sign is the numerator's.
    fn signum(self) -> i8 {
        self.num.signum() as i8
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn cross_small(a: &Point, b: &Point, c: &Point) -> Option<i8> {
    let (ax, ay) = (Small::of(&a.x)?, Small::of(&a.y)?);
    let u = Small::of(&b.x)?.sub(ax)?.mul(Small::of(&c.y)?.sub(ay)?)?;
    let v = Small::of(&b.y)?.sub(ay)?.mul(Small::of(&c.x)?.sub(ax)?)?;
    Some(u.sub(v)?.signum())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Self {
        Segment { start, end }
    }

    pub fn is_degenerate(&self) -> bool {
        self.start == self.end
    }
}

/// Half-line from `origin` along an integer direction whose components are
/// coprime. Only the scale of the direction is normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray {
    origin: Point,
    dx: i64,
    dy: i64,
}

impl Ray {
    pub fn new(origin: Point, dx: i64, dy: i64) -> Result<Self> {
        if dx == 0 && dy == 0 {
            return Err(Error::InvalidArgument(
                "ray direction must be nonzero".into(),
            ));
        }
        let g = dx.gcd(&dy);
        Ok(Ray {
            origin,
            dx: dx / g,
            dy: dy / g,
        })
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn direction(&self) -> (i64, i64) {
        (self.dx, self.dy)
    }

    fn dir(&self) -> (Rational, Rational) {
        (rat(self.dx), rat(self.dy))
    }

    /// Cross product of the direction with `p - origin`: which side of the
    /// supporting line `p` lies on.
    pub fn side(&self, p: &Point) -> Rational {
        let (dx, dy) = self.dir();
        dx * (&p.y - &self.origin.y) - dy * (&p.x - &self.origin.x)
    }

    /// Dot product of the direction with `p - origin`.
    pub fn along(&self, p: &Point) -> Rational {
        let (dx, dy) = self.dir();
        dx * (&p.x - &self.origin.x) + dy * (&p.y - &self.origin.y)
    }

    fn offsets_small(&self, p: &Point) -> Option<(Small, Small)> {
        let x = Small::of(&p.x)?.sub(Small::of(&self.origin.x)?)?;
        let y = Small::of(&p.y)?.sub(Small::of(&self.origin.y)?)?;
        Some((x, y))
    }

    fn side_small(&self, p: &Point) -> Option<Small> {
        let (x, y) = self.offsets_small(p)?;
        Small::int(self.dx).mul(y)?.sub(Small::int(self.dy).mul(x)?)
    }

    fn along_small(&self, p: &Point) -> Option<Small> {
        let (x, y) = self.offsets_small(p)?;
        Small::int(self.dx).mul(x)?.add(Small::int(self.dy).mul(y)?)
    }

    /// Sign of [`Ray::side`].
    pub fn side_sign(&self, p: &Point) -> i8 {
        self.side_small(p)
            .map_or_else(|| sign_of(&self.side(p)), Small::signum)
    }

    /// Sign of [`Ray::along`].
    pub fn along_sign(&self, p: &Point) -> i8 {
        self.along_small(p)
            .map_or_else(|| sign_of(&self.along(p)), Small::signum)
    }

    /// True iff `p` lies on the ray, origin included.
    pub fn contains(&self, p: &Point) -> bool {
        self.side_sign(p) == 0 && self.along_sign(p) >= 0
    }

    pub fn on_supporting_line(&self, p: &Point) -> bool {
        self.side_sign(p) == 0
    }

    /// A second point on the ray, one direction step from the origin.
    pub fn step(&self) -> Point {
        let (dx, dy) = self.dir();
        Point::new(&self.origin.x + dx, &self.origin.y + dy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

pub fn cross(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

fn dot(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.x - &a.x) + (&b.y - &a.y) * (&c.y - &a.y)
}

pub fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    match cross_small(a, b, c).unwrap_or_else(|| sign_of(&cross(a, b, c))) {
        1 => Orientation::CounterClockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

fn between(lo: &Rational, hi: &Rational, v: &Rational) -> bool {
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    lo <= v && v <= hi
}

pub fn point_on_segment(p: &Point, s: &Segment) -> bool {
    if s.is_degenerate() {
        return *p == s.start;
    }
    orient(&s.start, &s.end, p) == Orientation::Collinear
        && between(&s.start.x, &s.end.x, &p.x)
        && between(&s.start.y, &s.end.y, &p.y)
}

/// Closed convex hull membership for three points, exact for collinear and
/// coincident inputs.
pub fn hull3_contains(a: &Point, b: &Point, c: &Point, p: &Point) -> bool {
    match orient(a, b, c) {
        Orientation::Collinear => {
            // The hull is the segment between the two extreme points, which is
            // the union of the three pairwise segments.
            point_on_segment(p, &Segment::new(a.clone(), b.clone()))
                || point_on_segment(p, &Segment::new(b.clone(), c.clone()))
                || point_on_segment(p, &Segment::new(a.clone(), c.clone()))
        }
        turn => {
            let opposite = turn.reversed();
            orient(a, b, p) != opposite
                && orient(b, c, p) != opposite
                && orient(c, a, p) != opposite
        }
    }
}

/// A transversal crossing of a segment with a ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    /// Position along the segment, strictly between 0 and 1.
    pub t: Rational,
    /// +1 when the segment passes from the right of the ray to its left.
    pub sign: i8,
}

/// Intersects a segment with a ray. Configurations that are not transversal
/// (an endpoint on the ray, the ray origin on the segment, or overlap with
/// the supporting line) are reported as [`Error::Degenerate`].
pub fn segment_ray_crossing(s: &Segment, r: &Ray) -> Result<Option<Crossing>> {
    if r.contains(&s.start) || r.contains(&s.end) {
        return Err(Error::Degenerate(format!(
            "segment endpoint on ray from {}",
            r.origin()
        )));
    }
    let (start_sign, end_sign) = (r.side_sign(&s.start), r.side_sign(&s.end));
    if start_sign == 0 && end_sign == 0 {
        if s.is_degenerate() {
            return Ok(None);
        }
        return Err(Error::Degenerate(format!(
            "segment collinear with ray from {}",
            r.origin()
        )));
    }
    if point_on_segment(r.origin(), s) {
        return Err(Error::Degenerate(format!(
            "ray origin {} lies on segment",
            r.origin()
        )));
    }
    // Strictly opposite sides are required; touching the supporting line at
    // an endpoint behind the origin is not a crossing.
    if start_sign == 0 || end_sign == 0 || start_sign == end_sign {
        return Ok(None);
    }
    // With side values s0, s1 and along values a0, a1 at the endpoints, the
    // hit point's along value is (s0 a1 - s1 a0) / (s0 - s1).
    let fast = || {
        let (s0, s1) = (r.side_small(&s.start)?, r.side_small(&s.end)?);
        let (a0, a1) = (r.along_small(&s.start)?, r.along_small(&s.end)?);
        Some(s0.mul(a1)?.sub(s1.mul(a0)?)?.signum() * s0.sub(s1)?.signum())
    };
    let ahead = fast().unwrap_or_else(|| {
        let (s0, s1) = (r.side(&s.start), r.side(&s.end));
        let (a0, a1) = (r.along(&s.start), r.along(&s.end));
        sign_of(&((&s0 * &a1 - &s1 * &a0) / (&s0 - &s1)))
    });
    if ahead <= 0 {
        return Ok(None);
    }
    // start + t (end - start) lies on the supporting line.
    let (s0, s1) = (r.side(&s.start), r.side(&s.end));
    let t = &s0 / (&s0 - &s1);
    Ok(Some(Crossing { t, sign: end_sign }))
}

/// True iff two rays share a point.
pub fn rays_intersect(r: &Ray, q: &Ray) -> bool {
    if r.contains(q.origin()) || q.contains(r.origin()) {
        return true;
    }
    let (rdx, rdy) = r.direction();
    let (qdx, qdy) = q.direction();
    let denom = rat(rdx * qdy - rdy * qdx);
    if denom.is_zero() {
        // Parallel, and neither origin on the other ray: disjoint.
        return false;
    }
    // origin_r + u dr = origin_q + v dq
    let wx = &q.origin().x - &r.origin().x;
    let wy = &q.origin().y - &r.origin().y;
    let u = (&wx * rat(qdy) - &wy * rat(qdx)) / &denom;
    let v = (&wx * rat(rdy) - &wy * rat(rdx)) / &denom;
    !u.is_negative() && !v.is_negative()
}

/// Oriented angle from `a - o` to `b - o`, in `(-pi, pi]`.
pub fn oriented_angle(a: &Point, o: &Point, b: &Point) -> Result<f64> {
    if a == o || b == o {
        return Err(Error::Degenerate(
            "angle vertex coincides with an endpoint".into(),
        ));
    }
    let c = cross(o, a, b);
    let d = dot(o, a, b);
    if c.is_zero() {
        return Ok(if d.is_negative() {
            std::f64::consts::PI
        } else {
            0.0
        });
    }
    let cf = c.to_f64().unwrap_or(f64::NAN);
    let df = d.to_f64().unwrap_or(f64::NAN);
    Ok(cf.atan2(df))
}
