//! Closed and based polygonal lines, and the puncture set they live around.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{point_on_segment, Point, Segment};

/// Anything that can be traversed as a cyclic vertex sequence.
pub trait Polyline {
    fn vertices(&self) -> &[Point];

    /// Segments in traversal order, closing edge last.
    fn segments(&self) -> Vec<Segment> {
        let v = self.vertices();
        (0..v.len())
            .map(|i| Segment::new(v[i].clone(), v[(i + 1) % v.len()].clone()))
            .collect()
    }
}

/// Cyclic vertex sequence; equality is up to rotation.
#[derive(Debug, Clone, Eq)]
pub struct ClosedPolyline {
    vertices: Vec<Point>,
}

impl ClosedPolyline {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument(
                "a polyline needs at least one vertex".into(),
            ));
        }
        Ok(ClosedPolyline { vertices })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        ClosedPolyline { vertices: v }
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }
}

impl PartialEq for ClosedPolyline {
    fn eq(&self, other: &Self) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() {
            return false;
        }
        (0..n).any(|shift| (0..n).all(|i| self.vertices[(i + shift) % n] == other.vertices[i]))
    }
}

impl Polyline for ClosedPolyline {
    fn vertices(&self) -> &[Point] {
        &self.vertices
    }
}

/// Ordered vertex sequence whose first vertex is the basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedPolyline {
    vertices: Vec<Point>,
}

impl BasedPolyline {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument(
                "a polyline needs at least one vertex".into(),
            ));
        }
        Ok(BasedPolyline { vertices })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    pub fn basepoint(&self) -> &Point {
        &self.vertices[0]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Forget the basepoint.
    pub fn to_closed(&self) -> ClosedPolyline {
        ClosedPolyline {
            vertices: self.vertices.clone(),
        }
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }
}

impl Polyline for BasedPolyline {
    fn vertices(&self) -> &[Point] {
        &self.vertices
    }
}

/// Ordered distinct punctures; puncture `i` carries generator `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PunctureSet {
    points: Vec<Point>,
}

impl PunctureSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument(
                "at least one puncture is required".into(),
            ));
        }
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::InvalidArgument(format!(
                        "punctures {j} and {i} coincide at {}",
                        points[i]
                    )));
                }
            }
        }
        Ok(PunctureSet { points })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> Option<&Point> {
        self.points.get(i)
    }

    /// The puncture set with puncture `i` filled in; later generators shift
    /// down by one. Removing the last puncture is an error.
    pub fn without(&self, i: usize) -> Result<PunctureSet> {
        if i >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.points.len(),
            });
        }
        let mut points = self.points.clone();
        points.remove(i);
        PunctureSet::new(points)
    }
}

impl fmt::Display for PunctureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Checks that no puncture lies on any segment of any line.
pub fn validate_scene(punctures: &PunctureSet, lines: &[&dyn Polyline]) -> Result<()> {
    for (li, line) in lines.iter().enumerate() {
        for (si, seg) in line.segments().iter().enumerate() {
            for (pi, p) in punctures.points().iter().enumerate() {
                if point_on_segment(p, seg) {
                    return Err(Error::PolylineThroughPuncture {
                        line: li,
                        segment: si,
                        puncture: pi,
                    });
                }
            }
        }
    }
    Ok(())
}
