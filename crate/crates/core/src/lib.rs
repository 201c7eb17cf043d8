//! Homotopy classification of closed polygonal lines in the plane with
//! finitely many points removed.
//!
//! Lines are classified by their Poincaré words: signed crossings with one
//! ray per puncture, reduced in the free group. A bounded search over
//! elementary cancellations and insertions serves as an independent check.

pub mod classify;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod poincare;
pub mod polyline;
pub mod render;
pub mod scene;
pub mod search;
pub mod winding;
pub mod words;

pub use classify::{Classifier, Registry, Verdict};
pub use error::{Error, Result};
pub use geometry::{Point, Rational, Ray, Segment};
pub use graph::{BasedCycle, Graph, OrientedCycle, Traversal};
pub use polyline::{BasedPolyline, ClosedPolyline, Polyline, PunctureSet};
pub use scene::{Scene, SceneLine};
pub use words::{CyclicWord, Letter, Mod2CyclicWord, Word};
