//! `homotopy`: classify closed polygonal lines in a punctured plane.
//!
//! Exit status is 0 for yes or success, 1 for no, 2 for errors and
//! inconclusive answers.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};

use homotopy_core::classify::{Registry, Verdict};
use homotopy_core::graph::{based_cycle_word, cycle_word, graph_based_homotopic, graph_homotopic};
use homotopy_core::poincare::{
    based_homotopic, based_poincare_word, cyclic_poincare_word, economical_form,
    economical_form_mod2, realize_word, RaySystem,
};
use homotopy_core::render::render_scene;
use homotopy_core::scene::{parse_rational, parse_scene, Scene, SceneLine};
use homotopy_core::search::{
    bfs_homotopic, bfs_homotopic_seeded, Move, SearchConfig, SearchOutcome,
};
use homotopy_core::winding::winding_number;
use homotopy_core::words::picture_hanging_word;
use homotopy_core::{Error, Point, Polyline, PunctureSet, Word};

#[derive(Parser)]
#[command(
    name = "homotopy",
    version,
    about = "Homotopy classification of polygonal lines around punctures"
)]
struct Cli {
    /// Scene file with punctures, lines and graphs.
    #[arg(long, global = true)]
    scene: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Winding number of a line around one puncture.
    Winding { line: String, puncture: usize },
    /// Raw and reduced Poincaré word of a line.
    Word { line: String },
    /// Economical form of the cyclic Poincaré word (free homotopy class).
    Classify { line: String },
    /// Are two lines freely homotopic?
    Homotopic {
        line1: String,
        line2: String,
        /// Decision method: poincare, winding, mod2 or search.
        #[arg(long, default_value = "poincare")]
        method: String,
    },
    /// Are two based lines homotopic relative to their common basepoint?
    BasedHomotopic { line1: String, line2: String },
    /// Mod-2 economical form and linking (two punctures only).
    Mod2 { line: String },
    /// Build a based line with the given Poincaré word; prints the extended scene.
    Realize {
        word: String,
        #[arg(long)]
        out: String,
        /// Basepoint as `x,y`; defaults to up and left of every puncture.
        #[arg(long, allow_hyphen_values = true)]
        basepoint: Option<String>,
    },
    /// Search for a chain of elementary moves between two lines.
    Oracle {
        line1: String,
        line2: String,
        /// Integer grid margin around the lines and punctures.
        #[arg(long, default_value_t = 1)]
        grid: i64,
        #[arg(long, default_value_t = SearchConfig::DEFAULT_DEPTH)]
        depth: usize,
        /// Vertex bound for intermediate lines (default |l1| + |l2| + 4).
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Shuffle candidate insertions; only the certificate may change.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Picture-hanging word on `n` nails.
    Hang {
        n: usize,
        /// Realize it as a based line instead; prints the scene with a line `hang`.
        #[arg(long)]
        realize: bool,
    },
    /// Are two walks of a graph homotopic (based if both walks are based)?
    GraphHomotopic {
        graph: String,
        walk1: String,
        walk2: String,
    },
    /// Draw the scene as SVG.
    Render {
        #[arg(long)]
        svg: PathBuf,
    },
}

fn load(path: &Option<PathBuf>) -> anyhow::Result<Scene> {
    let path = path
        .as_ref()
        .ok_or_else(|| anyhow!("this command needs --scene <file>"))?;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_scene(&text).with_context(|| format!("in {}", path.display()))
}

fn scene_rays(scene: &Scene) -> anyhow::Result<RaySystem> {
    let lines: Vec<&dyn Polyline> = scene.lines.iter().map(|l| l.line.as_polyline()).collect();
    Ok(RaySystem::build(scene.punctures()?, &lines))
}

fn answer(yes: bool) -> i32 {
    println!("{}", if yes { "yes" } else { "no" });
    if yes {
        0
    } else {
        1
    }
}

fn based<'a>(scene: &'a Scene, name: &str) -> anyhow::Result<&'a homotopy_core::BasedPolyline> {
    match scene.line(name)? {
        SceneLine::Based(l) => Ok(l),
        SceneLine::Free(_) => bail!("line {name:?} is not based"),
    }
}

fn parse_point(text: &str) -> anyhow::Result<Point> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("expected `x,y`, got {text:?}"))?;
    let coord = |s: &str| parse_rational(s.trim()).map_err(|m| anyhow!(m));
    Ok(Point::new(coord(x)?, coord(y)?))
}

fn default_basepoint(ps: &PunctureSet) -> Point {
    let min_x = ps.points().iter().map(|p| &p.x).min().expect("nonempty");
    let max_y = ps.points().iter().map(|p| &p.y).max().expect("nonempty");
    let one = homotopy_core::geometry::rat(1);
    Point::new(min_x - &one, max_y + &one)
}

fn describe(m: &Move) -> String {
    match m {
        Move::Cancel { position } => format!("cancel vertex {position}"),
        Move::Insert { position, point } => format!("insert {} {} at {position}", point.x, point.y),
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Winding { line, puncture } => {
            let scene = load(&cli.scene)?;
            let ps = scene.punctures()?;
            let o = ps.get(puncture).ok_or(Error::IndexOutOfRange {
                index: puncture,
                len: ps.len(),
            })?;
            println!("{}", winding_number(scene.line(&line)?.as_polyline(), o)?);
            Ok(0)
        }
        Command::Word { line } => {
            let scene = load(&cli.scene)?;
            let rays = scene_rays(&scene)?;
            match scene.line(&line)? {
                SceneLine::Based(l) => {
                    let w = based_poincare_word(l, &rays)?;
                    println!("raw: {w}");
                    println!("reduced: {}", w.reduce());
                }
                SceneLine::Free(l) => {
                    let cw = cyclic_poincare_word(l, &rays)?;
                    println!("raw: {}", Word::new(cw.letters().to_vec(), cw.rank())?);
                    println!("reduced: {}", cw.cyclic_reduce());
                }
            }
            Ok(0)
        }
        Command::Classify { line } => {
            let scene = load(&cli.scene)?;
            let rays = scene_rays(&scene)?;
            println!(
                "{}",
                economical_form(&scene.line(&line)?.to_closed(), &rays)?
            );
            Ok(0)
        }
        Command::Homotopic {
            line1,
            line2,
            method,
        } => {
            let scene = load(&cli.scene)?;
            let registry = Registry::with_defaults();
            let classifier = registry.get(&method)?;
            let v = classifier.decide(
                &scene.line(&line1)?.to_closed(),
                &scene.line(&line2)?.to_closed(),
                scene.punctures()?,
            )?;
            println!("{v}");
            Ok(v.exit_code())
        }
        Command::BasedHomotopic { line1, line2 } => {
            let scene = load(&cli.scene)?;
            let yes = based_homotopic(
                based(&scene, &line1)?,
                based(&scene, &line2)?,
                scene.punctures()?,
            )?;
            Ok(answer(yes))
        }
        Command::Mod2 { line } => {
            let scene = load(&cli.scene)?;
            let rays = scene_rays(&scene)?;
            let e2 = economical_form_mod2(&scene.line(&line)?.to_closed(), &rays)?;
            println!("e2: {e2}");
            match e2.linked() {
                Ok(b) => println!("linked: {}", if b { "yes" } else { "no" }),
                Err(Error::NotInteresting) => println!("linked: undefined (odd letter count)"),
                Err(e) => return Err(e.into()),
            }
            Ok(0)
        }
        Command::Realize {
            word,
            out,
            basepoint,
        } => {
            let mut scene = load(&cli.scene)?;
            let ps = scene.punctures()?.clone();
            let w = Word::parse(&word, ps.len())?;
            let x = match basepoint {
                Some(b) => parse_point(&b)?,
                None => default_basepoint(&ps),
            };
            let line = realize_word(&w, &ps, &x)?;
            scene.add_line(&out, SceneLine::Based(line))?;
            print!("{scene}");
            Ok(0)
        }
        Command::Oracle {
            line1,
            line2,
            grid,
            depth,
            max_vertices,
            seed,
        } => {
            let scene = load(&cli.scene)?;
            let ps = scene.punctures()?;
            let (l1, l2) = (
                scene.line(&line1)?.to_closed(),
                scene.line(&line2)?.to_closed(),
            );
            let mut cfg = SearchConfig::around(&l1, &l2, ps, grid);
            cfg.max_depth = depth;
            if let Some(m) = max_vertices {
                cfg.max_vertices = m;
            }
            let outcome = match seed {
                Some(s) => bfs_homotopic_seeded(&l1, &l2, ps, &cfg, s)?,
                None => bfs_homotopic(&l1, &l2, ps, &cfg)?,
            };
            match outcome {
                SearchOutcome::Found(moves) => {
                    println!("homotopic: {} move(s)", moves.len());
                    for m in &moves {
                        println!("  {}", describe(m));
                    }
                    Ok(0)
                }
                SearchOutcome::NoWithinBounds => {
                    println!("no certificate within bounds (inconclusive)");
                    Ok(Verdict::Inconclusive.exit_code())
                }
            }
        }
        Command::Hang { n, realize } => {
            let w = picture_hanging_word(n)?;
            if !realize {
                println!("{w}");
            } else {
                let mut scene = match &cli.scene {
                    Some(_) => load(&cli.scene)?,
                    None => Scene {
                        punctures: Some(PunctureSet::from_ints(
                            &(0..n as i64).map(|i| (3 * i, 0)).collect::<Vec<_>>(),
                        )?),
                        ..Scene::default()
                    },
                };
                let ps = scene.punctures()?.clone();
                if ps.len() != n {
                    bail!("scene has {} punctures, expected {n}", ps.len());
                }
                let line = realize_word(&w, &ps, &default_basepoint(&ps))?;
                scene.add_line("hang", SceneLine::Based(line))?;
                println!("# picture-hanging word {w}");
                print!("{scene}");
            }
            Ok(0)
        }
        Command::GraphHomotopic {
            graph,
            walk1,
            walk2,
        } => {
            let scene = load(&cli.scene)?;
            let g = scene.graph(&graph)?;
            let both_based = g.walk(&walk1)?.based && g.walk(&walk2)?.based;
            let yes = if both_based {
                let (c1, c2) = (g.based_cycle(&walk1)?, g.based_cycle(&walk2)?);
                println!(
                    "words: {} {}",
                    based_cycle_word(&c1, &g.graph)?.reduce(),
                    based_cycle_word(&c2, &g.graph)?.reduce()
                );
                graph_based_homotopic(&c1, &c2, &g.graph)?
            } else {
                let (c1, c2) = (g.cycle(&walk1)?, g.cycle(&walk2)?);
                println!(
                    "words: {} {}",
                    cycle_word(&c1, &g.graph)?.cyclic_reduce(),
                    cycle_word(&c2, &g.graph)?.cyclic_reduce()
                );
                graph_homotopic(&c1, &c2, &g.graph)?
            };
            Ok(answer(yes))
        }
        Command::Render { svg } => {
            let scene = load(&cli.scene)?;
            let text = render_scene(&scene)?;
            fs::write(&svg, text).with_context(|| format!("writing {}", svg.display()))?;
            println!("wrote {}", svg.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
