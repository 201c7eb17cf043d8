//! One ray per puncture, in general position with respect to a set of lines.

use crate::error::{Error, Result};
use crate::geometry::{rays_intersect, Point, Ray};
use crate::polyline::{Polyline, PunctureSet};

/// Rays `rays[i]` start at puncture `i`. Construction guarantees the rays are
/// pairwise disjoint, avoid the other punctures, and are in general position
/// with respect to every line they were validated against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaySystem {
    rays: Vec<Ray>,
}

/// The fixed search order for a shared ray direction: straight down, then
/// `(1, -k)` and `(-1, -k)` for `k = 1, 2, ...`.
pub fn candidate_directions() -> impl Iterator<Item = (i64, i64)> {
    std::iter::once((0, -1)).chain((1..).flat_map(|k| [(1, -k), (-1, -k)]))
}

fn parallel_rays(punctures: &PunctureSet, (dx, dy): (i64, i64)) -> Vec<Ray> {
    punctures
        .points()
        .iter()
        .map(|p| Ray::new(p.clone(), dx, dy).expect("candidate directions are nonzero"))
        .collect()
}

fn line_conflict(ray: &Ray, line: &dyn Polyline) -> Option<String> {
    let vertices = line.vertices();
    if let Some(v) = vertices.iter().find(|v| ray.contains(v)) {
        return Some(format!("vertex {v} lies on the ray from {}", ray.origin()));
    }
    for seg in line.segments() {
        if !seg.is_degenerate()
            && ray.on_supporting_line(&seg.start)
            && ray.on_supporting_line(&seg.end)
        {
            return Some(format!(
                "segment {}-{} is collinear with the ray from {}",
                seg.start,
                seg.end,
                ray.origin()
            ));
        }
    }
    None
}

fn puncture_conflict(rays: &[Ray], punctures: &[Point]) -> Option<String> {
    for (i, r) in rays.iter().enumerate() {
        for (j, p) in punctures.iter().enumerate() {
            if i != j && r.contains(p) {
                return Some(format!("ray {i} passes through puncture {j}"));
            }
        }
        for (j, q) in rays.iter().enumerate().skip(i + 1) {
            if rays_intersect(r, q) {
                return Some(format!("rays {i} and {j} intersect"));
            }
        }
    }
    None
}

impl RaySystem {
    /// Validates explicit rays against the punctures and lines.
    pub fn new(punctures: &PunctureSet, rays: Vec<Ray>, lines: &[&dyn Polyline]) -> Result<Self> {
        if rays.len() != punctures.len() {
            return Err(Error::InvalidArgument(format!(
                "{} rays for {} punctures",
                rays.len(),
                punctures.len()
            )));
        }
        for (i, (r, p)) in rays.iter().zip(punctures.points()).enumerate() {
            if r.origin() != p {
                return Err(Error::InvalidArgument(format!(
                    "ray {i} does not start at its puncture"
                )));
            }
        }
        if let Some(msg) = puncture_conflict(&rays, punctures.points()) {
            return Err(Error::Degenerate(msg));
        }
        for r in &rays {
            for line in lines {
                if let Some(msg) = line_conflict(r, *line) {
                    return Err(Error::Degenerate(msg));
                }
            }
        }
        Ok(RaySystem { rays })
    }

    /// Deterministic parallel ray system: the first candidate direction
    /// along which no two punctures align and every ray misses every vertex
    /// and is collinear with no edge. Each constraint rules out finitely many
    /// directions, so the search terminates.
    ///
    /// Lines are assumed to avoid the punctures.
    pub fn build(punctures: &PunctureSet, lines: &[&dyn Polyline]) -> RaySystem {
        for d in candidate_directions() {
            if let Some(rays) = Self::try_direction(punctures, lines, d) {
                return RaySystem { rays };
            }
        }
        unreachable!("candidate directions are infinite")
    }

    /// The parallel rays along `d`, if they satisfy every constraint.
    pub fn try_direction(
        punctures: &PunctureSet,
        lines: &[&dyn Polyline],
        d: (i64, i64),
    ) -> Option<Vec<Ray>> {
        let rays = parallel_rays(punctures, d);
        let pts = punctures.points();
        // Aligned punctures would make parallel rays overlap.
        for (i, r) in rays.iter().enumerate() {
            if pts[..i].iter().any(|p| r.on_supporting_line(p)) {
                return None;
            }
        }
        for r in &rays {
            for line in lines {
                if line_conflict(r, *line).is_some() {
                    return None;
                }
            }
        }
        Some(rays)
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Shared direction, when all rays are parallel.
    pub fn direction(&self) -> Option<(i64, i64)> {
        let d = self.rays.first()?.direction();
        self.rays.iter().all(|r| r.direction() == d).then_some(d)
    }

    /// Re-checks general position against further lines.
    pub fn check_lines(&self, lines: &[&dyn Polyline]) -> Result<()> {
        for r in &self.rays {
            for line in lines {
                if let Some(msg) = line_conflict(r, *line) {
                    return Err(Error::Degenerate(msg));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyline::ClosedPolyline;

    #[test]
    fn direction_order() {
        let first: Vec<_> = candidate_directions().take(5).collect();
        assert_eq!(first, vec![(0, -1), (1, -1), (-1, -1), (1, -2), (-1, -2)]);
    }

    #[test]
    fn straight_down_accepted() {
        let ps = PunctureSet::from_ints(&[(0, 0), (10, 0)]).unwrap();
        let sq = ClosedPolyline::from_ints(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]).unwrap();
        let rs = RaySystem::build(&ps, &[&sq]);
        assert_eq!(rs.direction(), Some((0, -1)));
    }

    #[test]
    fn aligned_punctures_skip_vertical() {
        let ps = PunctureSet::from_ints(&[(0, 0), (0, 10)]).unwrap();
        let rs = RaySystem::build(&ps, &[]);
        assert_eq!(rs.direction(), Some((1, -1)));
    }

    #[test]
    fn vertex_below_puncture_skips_vertical() {
        let ps = PunctureSet::from_ints(&[(0, 0)]).unwrap();
        let l = ClosedPolyline::from_ints(&[(0, -3), (2, 2), (-2, 2)]).unwrap();
        let rs = RaySystem::build(&ps, &[&l]);
        assert_eq!(rs.direction(), Some((1, -1)));
        // A vertex above the puncture does not block the downward ray.
        let l = ClosedPolyline::from_ints(&[(0, 3), (2, -2), (-2, -2)]).unwrap();
        assert_eq!(RaySystem::build(&ps, &[&l]).direction(), Some((0, -1)));
    }

    #[test]
    fn explicit_rays_validated() {
        let ps = PunctureSet::from_ints(&[(0, 0), (4, 0)]).unwrap();
        let ok = vec![
            Ray::new(Point::int(0, 0), 0, -1).unwrap(),
            Ray::new(Point::int(4, 0), 0, 1).unwrap(),
        ];
        assert!(RaySystem::new(&ps, ok, &[]).is_ok());
        let crossing = vec![
            Ray::new(Point::int(0, 0), 1, 1).unwrap(),
            Ray::new(Point::int(4, 0), 0, 1).unwrap(),
        ];
        assert!(RaySystem::new(&ps, crossing, &[]).is_err());
        let through = vec![
            Ray::new(Point::int(0, 0), 1, 0).unwrap(),
            Ray::new(Point::int(4, 0), 0, 1).unwrap(),
        ];
        assert!(RaySystem::new(&ps, through, &[]).is_err());
    }
}
