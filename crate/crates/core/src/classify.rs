//! Interchangeable decision procedures for free homotopy, looked up by name.

use std::fmt;

use crate::error::{Error, Result};
use crate::poincare::{economical_form_mod2, homotopic, RaySystem};
use crate::polyline::{validate_scene, ClosedPolyline, Polyline, PunctureSet};
use crate::search::{bfs_homotopic, SearchConfig, SearchOutcome};
use crate::winding::winding_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Homotopic,
    NotHomotopic,
    /// The method cannot decide this pair.
    Inconclusive,
}

impl Verdict {
    /// Process exit code: 0 yes, 1 no, 2 undecided.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Homotopic => 0,
            Verdict::NotHomotopic => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Homotopic => "yes",
            Verdict::NotHomotopic => "no",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

pub trait Classifier {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn decide(
        &self,
        l1: &ClosedPolyline,
        l2: &ClosedPolyline,
        punctures: &PunctureSet,
    ) -> Result<Verdict>;
}

fn yes_no(b: bool) -> Verdict {
    if b {
        Verdict::Homotopic
    } else {
        Verdict::NotHomotopic
    }
}

/// Compares economical forms of the Poincaré words. Complete.
pub struct PoincareClassifier;

impl Classifier for PoincareClassifier {
    fn name(&self) -> &'static str {
        "poincare"
    }

    fn description(&self) -> &'static str {
        "economical Poincaré words (complete)"
    }

    fn decide(
        &self,
        l1: &ClosedPolyline,
        l2: &ClosedPolyline,
        punctures: &PunctureSet,
    ) -> Result<Verdict> {
        homotopic(l1, l2, punctures).map(yes_no)
    }
}

/// Compares winding numbers at every puncture. Complete for one puncture,
/// otherwise it can only separate.
pub struct WindingClassifier;

impl Classifier for WindingClassifier {
    fn name(&self) -> &'static str {
        "winding"
    }

    fn description(&self) -> &'static str {
        "winding numbers (complete for one puncture)"
    }

    fn decide(
        &self,
        l1: &ClosedPolyline,
        l2: &ClosedPolyline,
        punctures: &PunctureSet,
    ) -> Result<Verdict> {
        validate_scene(punctures, &[l1 as &dyn Polyline, l2])?;
        for p in punctures.points() {
            if winding_number(l1, p)? != winding_number(l2, p)? {
                return Ok(Verdict::NotHomotopic);
            }
        }
        Ok(if punctures.len() == 1 {
            Verdict::Homotopic
        } else {
            Verdict::Inconclusive
        })
    }
}

/// Compares economical forms modulo 2; two punctures only, separates only.
pub struct Mod2Classifier;

impl Classifier for Mod2Classifier {
    fn name(&self) -> &'static str {
        "mod2"
    }

    fn description(&self) -> &'static str {
        "Poincaré words modulo 2 (two punctures, separates only)"
    }

    fn decide(
        &self,
        l1: &ClosedPolyline,
        l2: &ClosedPolyline,
        punctures: &PunctureSet,
    ) -> Result<Verdict> {
        let lines: [&dyn Polyline; 2] = [l1, l2];
        validate_scene(punctures, &lines)?;
        let rays = RaySystem::build(punctures, &lines);
        if economical_form_mod2(l1, &rays)? != economical_form_mod2(l2, &rays)? {
            Ok(Verdict::NotHomotopic)
        } else {
            Ok(Verdict::Inconclusive)
        }
    }
}

/// Bounded search for a chain of elementary moves; certifies homotopy only.
pub struct SearchClassifier {
    pub margin: i64,
    pub depth: usize,
}

impl Default for SearchClassifier {
    fn default() -> Self {
        SearchClassifier {
            margin: 1,
            depth: SearchConfig::DEFAULT_DEPTH,
        }
    }
}

impl Classifier for SearchClassifier {
    fn name(&self) -> &'static str {
        "search"
    }

    fn description(&self) -> &'static str {
        "bounded elementary-move search (certifies homotopy only)"
    }

    fn decide(
        &self,
        l1: &ClosedPolyline,
        l2: &ClosedPolyline,
        punctures: &PunctureSet,
    ) -> Result<Verdict> {
        let mut cfg = SearchConfig::around(l1, l2, punctures, self.margin);
        cfg.max_depth = self.depth;
        Ok(match bfs_homotopic(l1, l2, punctures, &cfg)? {
            SearchOutcome::Found(_) => Verdict::Homotopic,
            SearchOutcome::NoWithinBounds => Verdict::Inconclusive,
        })
    }
}

pub struct Registry {
    entries: Vec<Box<dyn Classifier>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            entries: Vec::new(),
        }
    }

    pub fn with_defaults() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(PoincareClassifier));
        r.register(Box::new(WindingClassifier));
        r.register(Box::new(Mod2Classifier));
        r.register(Box::new(SearchClassifier::default()));
        r
    }

    /// Adds `c`, replacing any classifier with the same name.
    pub fn register(&mut self, c: Box<dyn Classifier>) {
        self.entries.retain(|e| e.name() != c.name());
        self.entries.push(c);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Classifier> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownName(format!("classifier {name:?}")))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Classifier> {
        self.entries.iter().map(|b| b.as_ref())
    }
}
