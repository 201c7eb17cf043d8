//! Synthesis of a based polyline whose Poincaré word is a given word.

use num_traits::One;

use super::rays::RaySystem;
use crate::error::{Error, Result};
use crate::geometry::{rat, Point, Rational};
use crate::polyline::{BasedPolyline, Polyline, PunctureSet};
use crate::words::Word;

/// Linear frame in which the ray direction `d` points straight down.
///
/// `s` is constant along lines parallel to `d` and `h` decreases along `d`.
/// The map has positive determinant, so orientations are preserved.
struct RayFrame {
    dx: Rational,
    dy: Rational,
}

impl RayFrame {
    fn new((dx, dy): (i64, i64)) -> Self {
        RayFrame {
            dx: rat(dx),
            dy: rat(dy),
        }
    }

    fn to_frame(&self, p: &Point) -> (Rational, Rational) {
        let s = &self.dx * &p.y - &self.dy * &p.x;
        let h = -(&self.dx * &p.x) - &self.dy * &p.y;
        (s, h)
    }

    fn to_plane(&self, s: &Rational, h: &Rational) -> Point {
        let det = &self.dx * &self.dx + &self.dy * &self.dy;
        let x = (-(&self.dy * s) - &self.dx * h) / &det;
        let y = (&self.dx * s - &self.dy * h) / &det;
        Point::new(x, y)
    }
}

/// Builds a based polyline from `basepoint` that reads `word` letter by
/// letter under the ray system [`RaySystem::build`] picks for it.
///
/// The shared ray direction is fixed first from the punctures and basepoint
/// alone. Each letter becomes a loop: up from the basepoint to a corridor
/// above every puncture, across, down one side of the puncture, under it
/// (crossing its ray once, left to right for a generator and right to left
/// for an inverse), up the other side, and back along the same corridor.
/// Corridor offsets are a quarter of the smallest gap between the ray lines.
pub fn realize_word(
    word: &Word,
    punctures: &PunctureSet,
    basepoint: &Point,
) -> Result<BasedPolyline> {
    if word.rank() != punctures.len() {
        return Err(Error::AlphabetMismatch(word.rank(), punctures.len()));
    }
    if punctures.points().contains(basepoint) {
        return Err(Error::InvalidArgument(
            "basepoint coincides with a puncture".into(),
        ));
    }
    let base_line = BasedPolyline::new(vec![basepoint.clone()])?;
    let rays = RaySystem::build(punctures, &[&base_line as &dyn Polyline]);
    let direction = rays.direction().expect("built ray systems are parallel");
    let frame = RayFrame::new(direction);

    let framed: Vec<(Rational, Rational)> = punctures
        .points()
        .iter()
        .map(|p| frame.to_frame(p))
        .collect();
    let (base_s, base_h) = frame.to_frame(basepoint);

    let mut levels: Vec<Rational> = framed.iter().map(|(s, _)| s.clone()).collect();
    levels.push(base_s.clone());
    levels.sort();
    levels.dedup();
    let gap = levels
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .unwrap_or_else(Rational::one);
    let offset = gap / rat(4);

    let top = framed
        .iter()
        .map(|(_, h)| h.clone())
        .chain(std::iter::once(base_h.clone()))
        .max()
        .expect("nonempty")
        + Rational::one();

    let corridor = frame.to_plane(&(&base_s + &offset), &top);
    let mut vertices = vec![basepoint.clone()];
    for (k, letter) in word.letters().iter().enumerate() {
        let (ps, ph) = &framed[letter.generator];
        let below = ph - Rational::one();
        let left = ps - &offset;
        let right = ps + &offset;
        let (first, second) = if letter.inverse {
            (&right, &left)
        } else {
            (&left, &right)
        };
        if k > 0 {
            vertices.push(basepoint.clone());
        }
        vertices.push(corridor.clone());
        vertices.push(frame.to_plane(first, &top));
        vertices.push(frame.to_plane(first, &below));
        vertices.push(frame.to_plane(second, &below));
        vertices.push(frame.to_plane(second, &top));
        vertices.push(corridor.clone());
    }
    BasedPolyline::new(vertices)
}
