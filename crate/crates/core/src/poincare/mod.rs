//! Poincaré words of polylines in the plane minus `n` points.
//!
//! Every puncture carries a ray. Reading the signed crossings of a line with
//! those rays along its traversal spells a word in the free group on `n`
//! generators. The economical form of the cyclic word classifies free
//! homotopy; the reduced linear word from the basepoint classifies based
//! homotopy.

mod rays;
mod realize;

pub use rays::{candidate_directions, RaySystem};
pub use realize::realize_word;

use crate::error::{Error, Result};
use crate::geometry::{segment_ray_crossing, Point, Rational};
use crate::polyline::{validate_scene, BasedPolyline, ClosedPolyline, Polyline, PunctureSet};
use crate::words::{CyclicWord, Letter, Mod2CyclicWord, Word};

/// Signed crossings along the traversal, starting at vertex 0, as
/// (segment index, position on the segment, letter).
fn crossings(line: &dyn Polyline, rays: &RaySystem) -> Result<Vec<(usize, Rational, Letter)>> {
    let mut out = Vec::new();
    let mut on_edge = Vec::new();
    for (si, seg) in line.segments().iter().enumerate() {
        on_edge.clear();
        for (generator, ray) in rays.rays().iter().enumerate() {
            if let Some(c) = segment_ray_crossing(seg, ray)? {
                on_edge.push((c.t, Letter::new(generator, c.sign)));
            }
        }
        // Parallel or disjoint rays meet an edge at distinct parameters.
        on_edge.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(on_edge.drain(..).map(|(t, l)| (si, t, l)));
    }
    Ok(out)
}

fn crossing_letters(line: &dyn Polyline, rays: &RaySystem) -> Result<Vec<Letter>> {
    Ok(crossings(line, rays)?
        .into_iter()
        .map(|(_, _, l)| l)
        .collect())
}

/// Crossing points in reading order, each with its letter.
pub fn crossing_points(line: &dyn Polyline, rays: &RaySystem) -> Result<Vec<(Point, Letter)>> {
    let segs = line.segments();
    Ok(crossings(line, rays)?
        .into_iter()
        .map(|(si, t, l)| {
            let s = &segs[si];
            let x = &s.start.x + &t * (&s.end.x - &s.start.x);
            let y = &s.start.y + &t * (&s.end.y - &s.start.y);
            (Point::new(x, y), l)
        })
        .collect())
}

/// The raw cyclic Poincaré word of a closed line.
pub fn cyclic_poincare_word(line: &ClosedPolyline, rays: &RaySystem) -> Result<CyclicWord> {
    CyclicWord::new(crossing_letters(line, rays)?, rays.len())
}

/// The raw Poincaré word of a based line, read from its basepoint.
pub fn based_poincare_word(line: &BasedPolyline, rays: &RaySystem) -> Result<Word> {
    Word::new(crossing_letters(line, rays)?, rays.len())
}

/// Economical form of the cyclic Poincaré word: the free homotopy invariant.
pub fn economical_form(line: &ClosedPolyline, rays: &RaySystem) -> Result<CyclicWord> {
    Ok(cyclic_poincare_word(line, rays)?.cyclic_reduce())
}

/// Economical form of the Poincaré word modulo 2; defined for two punctures.
pub fn economical_form_mod2(line: &ClosedPolyline, rays: &RaySystem) -> Result<Mod2CyclicWord> {
    if rays.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "the mod-2 invariant needs exactly two punctures, got {}",
            rays.len()
        )));
    }
    Ok(cyclic_poincare_word(line, rays)?.to_mod2().reduce())
}

/// Signed exponent sum of `generator`; equals the winding number around the
/// corresponding puncture when `word` is a Poincaré word.
pub fn winding_from_word(word: &CyclicWord, generator: usize) -> Result<i64> {
    word.exponent_sum(generator)
}

/// Free homotopy in the plane minus `punctures`. Both words are read against
/// one shared ray system, so no ray-independence is needed.
pub fn homotopic(
    l1: &ClosedPolyline,
    l2: &ClosedPolyline,
    punctures: &PunctureSet,
) -> Result<bool> {
    let lines: [&dyn Polyline; 2] = [l1, l2];
    validate_scene(punctures, &lines)?;
    let rays = RaySystem::build(punctures, &lines);
    Ok(economical_form(l1, &rays)? == economical_form(l2, &rays)?)
}

/// Based homotopy of two lines with a common basepoint.
pub fn based_homotopic(
    l1: &BasedPolyline,
    l2: &BasedPolyline,
    punctures: &PunctureSet,
) -> Result<bool> {
    if l1.basepoint() != l2.basepoint() {
        return Err(Error::BasepointMismatch);
    }
    let lines: [&dyn Polyline; 2] = [l1, l2];
    validate_scene(punctures, &lines)?;
    let rays = RaySystem::build(punctures, &lines);
    Ok(based_poincare_word(l1, &rays)?.reduce() == based_poincare_word(l2, &rays)?.reduce())
}

/// `X M1..Mm` times `X N1..Nn` is `X M1..Mm X N1..Nn`.
pub fn product(l1: &BasedPolyline, l2: &BasedPolyline) -> Result<BasedPolyline> {
    if l1.basepoint() != l2.basepoint() {
        return Err(Error::BasepointMismatch);
    }
    let mut v = l1.vertices().to_vec();
    v.extend_from_slice(l2.vertices());
    BasedPolyline::new(v)
}

/// `A1 A2..Am` becomes `A1 Am..A2`.
pub fn inverse_line(l: &BasedPolyline) -> BasedPolyline {
    let v = l.vertices();
    let mut out = vec![v[0].clone()];
    out.extend(v[1..].iter().rev().cloned());
    BasedPolyline::new(out).expect("nonempty")
}
