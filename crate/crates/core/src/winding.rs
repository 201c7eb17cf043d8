//! Winding numbers and the classification in the plane minus one point.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{oriented_angle, point_on_segment, segment_ray_crossing, Point, Ray};
use crate::poincare::RaySystem;
use crate::polyline::{ClosedPolyline, Polyline, PunctureSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

fn ensure_off_line(line: &dyn Polyline, o: &Point) -> Result<()> {
    match line.segments().iter().position(|s| point_on_segment(o, s)) {
        Some(segment) => Err(Error::PointOnPolyline { segment }),
        None => Ok(()),
    }
}

/// Exact winding number of `line` around `o`, as the signed count of
/// crossings with a general-position ray from `o`.
pub fn winding_number(line: &dyn Polyline, o: &Point) -> Result<i64> {
    ensure_off_line(line, o)?;
    let single = PunctureSet::new(vec![o.clone()])?;
    let rays = RaySystem::build(&single, &[line]);
    winding_number_with_ray(line, &rays.rays()[0])
}

/// Winding number using a caller-supplied ray from `o`; fails unless the ray
/// is in general position with respect to the line.
pub fn winding_number_with_ray(line: &dyn Polyline, ray: &Ray) -> Result<i64> {
    ensure_off_line(line, ray.origin())?;
    let mut total = 0i64;
    for seg in line.segments() {
        if let Some(c) = segment_ray_crossing(&seg, ray)? {
            total += i64::from(c.sign);
        }
    }
    Ok(total)
}

/// Sum of oriented angles over the edges divided by `2 pi`, in floating point.
pub fn winding_number_angle_oracle(line: &dyn Polyline, o: &Point) -> Result<f64> {
    ensure_off_line(line, o)?;
    let v = line.vertices();
    let mut sum = 0.0;
    for i in 0..v.len() {
        sum += oriented_angle(&v[i], o, &v[(i + 1) % v.len()])?;
    }
    Ok(sum / (2.0 * PI))
}

/// Parity of the number of segments crossing `ray`.
pub fn crossing_parity(line: &dyn Polyline, ray: &Ray) -> Result<Parity> {
    ensure_off_line(line, ray.origin())?;
    let mut count = 0i64;
    for seg in line.segments() {
        if segment_ray_crossing(&seg, ray)?.is_some() {
            count += 1;
        }
    }
    Ok(Parity::of(count))
}

/// Homotopy class in the plane minus `o`: two lines are homotopic there iff
/// these integers agree, and a line is null-homotopic iff it is zero.
pub fn classify_one_puncture(line: &ClosedPolyline, o: &Point) -> Result<i64> {
    winding_number(line, o)
}

/// `k`-fold traversal of a triangle around `o`, counterclockwise for
/// positive `k` and clockwise for negative `k`. `k = 0` gives a point.
pub fn multiple_outline(o: &Point, k: i64) -> ClosedPolyline {
    use crate::geometry::rat;
    let corners = [(3, -1), (0, 2), (-3, -1)];
    let tri: Vec<Point> = corners
        .iter()
        .map(|&(dx, dy)| Point::new(&o.x + rat(dx), &o.y + rat(dy)))
        .collect();
    if k == 0 {
        return ClosedPolyline::new(vec![Point::new(&o.x + rat(5), o.y.clone())])
            .expect("nonempty");
    }
    let mut v = Vec::new();
    for _ in 0..k.unsigned_abs() {
        v.extend(tri.iter().cloned());
    }
    let line = ClosedPolyline::new(v).expect("nonempty");
    if k < 0 {
        line.reversed()
    } else {
        line
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ccw_square() -> ClosedPolyline {
        ClosedPolyline::from_ints(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]).unwrap()
    }

    #[test]
    fn convex_outline_scores() {
        let sq = ccw_square();
        assert_eq!(winding_number(&sq, &Point::int(0, 0)).unwrap(), 1);
        assert_eq!(winding_number(&sq, &Point::int(5, 5)).unwrap(), 0);
        assert_eq!(
            winding_number(&sq.reversed(), &Point::int(0, 0)).unwrap(),
            -1
        );
    }

    #[test]
    fn one_point_line_scores_zero() {
        let l = ClosedPolyline::from_ints(&[(5, 5)]).unwrap();
        assert_eq!(winding_number(&l, &Point::int(0, 0)).unwrap(), 0);
        assert_eq!(
            winding_number_angle_oracle(&l, &Point::int(0, 0)).unwrap(),
            0.0
        );
    }

    #[test]
    fn doubled_triangle() {
        let l = ClosedPolyline::from_ints(&[(3, -1), (0, 2), (-3, -1), (3, -1), (0, 2), (-3, -1)])
            .unwrap();
        let o = Point::int(0, 0);
        assert_eq!(winding_number(&l, &o).unwrap(), 2);
        assert_eq!(winding_number_angle_oracle(&l, &o).unwrap().round(), 2.0);
    }

    #[test]
    fn angle_oracle_square() {
        let o = Point::int(0, 0);
        assert!((winding_number_angle_oracle(&ccw_square(), &o).unwrap() - 1.0).abs() < 1e-9);
        assert!(
            (winding_number_angle_oracle(&ccw_square().reversed(), &o).unwrap() + 1.0).abs() < 1e-9
        );
    }

    #[test]
    fn point_on_line_rejected() {
        let sq = ccw_square();
        assert!(matches!(
            winding_number(&sq, &Point::int(1, 0)),
            Err(Error::PointOnPolyline { .. })
        ));
        assert!(winding_number(&sq, &Point::int(1, 1)).is_err());
    }

    #[test]
    fn parity_examples() {
        let sq = ccw_square();
        let down = Ray::new(Point::int(0, 0), 0, -1).unwrap();
        assert_eq!(crossing_parity(&sq, &down).unwrap(), Parity::Odd);
        let far = Ray::new(Point::int(5, 5), 0, -1).unwrap();
        assert_eq!(crossing_parity(&sq, &far).unwrap(), Parity::Even);
        // Figure eight around the origin: one lobe each way.
        let eight =
            ClosedPolyline::from_ints(&[(0, 2), (2, 1), (0, 1), (-2, -1), (0, -2), (0, -1)])
                .unwrap();
        let o = Point::int(1, 0);
        let ray = Ray::new(o.clone(), 1, -3).unwrap();
        assert_eq!(
            crossing_parity(&eight, &ray).unwrap(),
            Parity::of(winding_number(&eight, &o).unwrap())
        );
        let through_vertex = Ray::new(Point::int(0, 0), 1, 1).unwrap();
        assert!(crossing_parity(&sq, &through_vertex).is_err());
    }

    #[test]
    fn classification_examples() {
        let o = Point::int(0, 0);
        let p1 = ClosedPolyline::from_ints(&[(3, 3)]).unwrap();
        let p2 = ClosedPolyline::from_ints(&[(-7, 2)]).unwrap();
        assert_eq!(classify_one_puncture(&p1, &o).unwrap(), 0);
        assert_eq!(classify_one_puncture(&p2, &o).unwrap(), 0);
        let tri = ClosedPolyline::from_ints(&[(3, -1), (0, 2), (-3, -1)]).unwrap();
        assert_eq!(
            classify_one_puncture(&tri, &o).unwrap(),
            classify_one_puncture(&ccw_square(), &o).unwrap()
        );
        assert_eq!(
            classify_one_puncture(&ccw_square().reversed(), &o).unwrap(),
            -1
        );
    }

    #[test]
    fn every_integer_attained() {
        let o = Point::int(2, -1);
        for k in -5..=5 {
            assert_eq!(winding_number(&multiple_outline(&o, k), &o).unwrap(), k);
        }
    }
}
