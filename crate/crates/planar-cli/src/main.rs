//! Command line front end: planarize nonseparable graphs, embed the result,
//! reinsert deleted edges, lay out coordinates and render SVG.
//!
//! Exit codes: 0 on success, 1 when validation or a pipeline stage fails,
//! 2 on parse errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use planar::cycles::enumerate_isometric_cycles;
use planar::graph::Graph;
use planar::io::{self, Document, SvgOptions};
use planar::layout::{self, Contour};
use planar::planarize::{evolutionary_search, random_restart_pipeline, PlanarResult};
use planar::reinsert;
use planar::rotation::verify_embedding;
use planar::CycleSystem;

#[derive(Parser)]
#[command(
    name = "planar",
    version,
    about = "Planar parts of nonseparable graphs"
)]
struct Cli {
    /// Worker threads (0 = automatic). Reserved: the pipeline is currently
    /// single-threaded and results never depend on this setting.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PipelineArgs {
    /// Random restarts of the planarization pipeline.
    #[arg(long, default_value_t = 100)]
    restarts: usize,
    /// Seed controlling all randomness.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Use the permutation-evolution search instead of plain restarts.
    #[arg(long)]
    evolve: bool,
    /// Population size for --evolve.
    #[arg(long, default_value_t = 8)]
    pop: usize,
    /// Generations for --evolve.
    #[arg(long, default_value_t = 20)]
    gens: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReinsertMode {
    Crossings,
    Thickness,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContourArg {
    Circle,
    Rect,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the admissible input class: connected, min degree 3, no
    /// bridges or cut vertices.
    Check { input: PathBuf },
    /// Enumerate the isometric cycles and write them in .ezi form.
    Cycles {
        input: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract a maximal planar spanning subgraph.
    Planarize {
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
    /// Planarize and report the rotation system and faces.
    Embed {
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
    /// Put the deleted edges back: minimum crossings or planar layers.
    Reinsert {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ReinsertMode::Crossings)]
        mode: ReinsertMode,
        /// Insertion-order budget for the crossing search.
        #[arg(long, default_value_t = 720)]
        budget: usize,
        /// Seeded layer orders to try in thickness mode.
        #[arg(long, default_value_t = 50)]
        attempts: usize,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
    /// Solve coordinates with a pinned boundary.
    Layout {
        input: PathBuf,
        /// Boundary file (.gm1). Without it the rim is placed on a circle.
        #[arg(long)]
        boundary: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ContourArg::Circle)]
        contour: ContourArg,
        /// Level-refinement rounds (0 = single direct solve).
        #[arg(long, default_value_t = 0)]
        refine: usize,
        /// Write the coordinate report here as well.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
    /// Render the laid-out graph to SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        boundary: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReinsertMode::Crossings)]
        mode: ReinsertMode,
        #[arg(long, default_value_t = 720)]
        budget: usize,
        #[arg(long, default_value_t = 50)]
        attempts: usize,
        #[command(flatten)]
        pipeline: PipelineArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse_grf(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn planarized(g: &Graph, args: &PipelineArgs) -> Result<(CycleSystem, PlanarResult), String> {
    let sys = enumerate_isometric_cycles(g).map_err(|e| e.to_string())?;
    let result = if args.evolve {
        evolutionary_search(g, &sys, args.pop, args.gens, args.seed)
            .map(|o| o.best)
            .map_err(|e| e.to_string())?
    } else {
        random_restart_pipeline(g, &sys, args.restarts, args.seed).map_err(|e| e.to_string())?
    };
    Ok((sys, result))
}

fn edge_lists(sys: &CycleSystem) -> Vec<Vec<usize>> {
    sys.cycles().iter().map(|c| c.edge_ids()).collect()
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Check { input } => {
            let text =
                fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let g = match io::parse_grf(&text) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("parse error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let report = g.validate_nonseparable();
            if report.is_ok() {
                println!(
                    "ok: {} vertices, {} edges, cyclomatic number {}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.cyclomatic_number()
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for v in &report.violations {
                    println!("violation: {v}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Cycles { input, out } => {
            let g = match read_graph(&input) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("parse error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let sys = enumerate_isometric_cycles(&g).map_err(|e| e.to_string())?;
            write_out(out.as_ref(), &io::write_ezi(&sys))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Planarize { input, pipeline } => {
            let g = read_graph(&input)?;
            let (sys, result) = planarized(&g, &pipeline)?;
            let doc = Document::default()
                .with_graph(&g)
                .with_planar_result(&edge_lists(&sys), &result);
            print!("{}", doc.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed { input, pipeline } => {
            let g = read_graph(&input)?;
            let (sys, result) = planarized(&g, &pipeline)?;
            let emb =
                reinsert::embed_planar_result(&g, &sys, &result).map_err(|e| e.to_string())?;
            let report = verify_embedding(&emb);
            if !report.is_ok() {
                return Err(format!(
                    "embedding verification failed: {:?}",
                    report.problems
                ));
            }
            let doc = Document::default()
                .with_graph(&g)
                .with_planar_result(&edge_lists(&sys), &result)
                .with_embedding(&emb);
            print!("{}", doc.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Reinsert {
            input,
            mode,
            budget,
            attempts,
            pipeline,
        } => {
            let g = read_graph(&input)?;
            let (sys, result) = planarized(&g, &pipeline)?;
            let emb =
                reinsert::embed_planar_result(&g, &sys, &result).map_err(|e| e.to_string())?;
            match mode {
                ReinsertMode::Crossings => {
                    let deleted: Vec<(usize, usize)> = result
                        .deleted_edges
                        .iter()
                        .map(|&e| g.endpoints(e))
                        .collect();
                    let (full, crossings) =
                        reinsert::minimize_crossings(&emb, &deleted, budget, pipeline.seed)
                            .map_err(|e| e.to_string())?;
                    let doc = Document::default()
                        .with_graph(&g)
                        .with_planar_result(&edge_lists(&sys), &result)
                        .with_embedding(&full)
                        .with_crossings(crossings);
                    print!("{}", doc.to_json());
                }
                ReinsertMode::Thickness => {
                    let layers =
                        reinsert::thickness_decompose(&g, &sys, &result, attempts, pipeline.seed)
                            .map_err(|e| e.to_string())?;
                    let doc = Document::default()
                        .with_graph(&g)
                        .with_planar_result(&edge_lists(&sys), &result)
                        .with_layers(&layers);
                    print!("{}", doc.to_json());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Layout {
            input,
            boundary,
            contour,
            refine,
            report,
            pipeline,
        } => {
            let g = read_graph(&input)?;
            let (sys, result) = planarized(&g, &pipeline)?;
            let emb =
                reinsert::embed_planar_result(&g, &sys, &result).map_err(|e| e.to_string())?;
            let ls = layout::level_structure(&emb).map_err(|e| e.to_string())?;
            let (spec, fixed) = boundary_map(&g, boundary.as_ref(), contour, &ls)?;
            let drawing = if refine == 0 {
                let system =
                    layout::assemble_spring_system(&g, &fixed, 1.0).map_err(|e| e.to_string())?;
                layout::solve_spring(&system).map_err(|e| e.to_string())?
            } else {
                layout::iterative_refine(&g, &ls, &fixed, refine, 2.0).map_err(|e| e.to_string())?
            };
            if let Some(path) = report {
                fs::write(&path, io::write_gm2(&drawing, &spec))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let doc = Document::default()
                .with_graph(&g)
                .with_planar_result(&edge_lists(&sys), &result)
                .with_drawing(&drawing);
            print!("{}", doc.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            input,
            out,
            boundary,
            mode,
            budget,
            attempts,
            pipeline,
        } => {
            let g = read_graph(&input)?;
            let (sys, result) = planarized(&g, &pipeline)?;
            let emb =
                reinsert::embed_planar_result(&g, &sys, &result).map_err(|e| e.to_string())?;
            let ls = layout::level_structure(&emb).map_err(|e| e.to_string())?;
            let (_, fixed) = boundary_map(&g, boundary.as_ref(), ContourArg::Circle, &ls)?;

            match mode {
                ReinsertMode::Crossings => {
                    let deleted: Vec<(usize, usize)> = result
                        .deleted_edges
                        .iter()
                        .map(|&e| g.endpoints(e))
                        .collect();
                    let (full, _) =
                        reinsert::minimize_crossings(&emb, &deleted, budget, pipeline.seed)
                            .map_err(|e| e.to_string())?;
                    // the dummies need coordinates too, so solve over the
                    // embedded graph including them
                    let edges = full.rotation.edges();
                    let lists = adjacency_of(&full.rotation);
                    let gx =
                        Graph::from_adjacency(lists.len(), &lists).map_err(|e| e.to_string())?;
                    let system = layout::assemble_spring_system(&gx, &fixed, 1.0)
                        .map_err(|e| e.to_string())?;
                    let drawing = layout::solve_spring(&system).map_err(|e| e.to_string())?;
                    let dummies: Vec<usize> = full.dummies.keys().copied().collect();
                    let svg = io::emit_svg(&drawing, &[edges], &dummies, &SvgOptions::default())
                        .map_err(|e| e.to_string())?;
                    fs::write(&out, svg).map_err(|e| format!("{}: {e}", out.display()))?;
                }
                ReinsertMode::Thickness => {
                    let layers =
                        reinsert::thickness_decompose(&g, &sys, &result, attempts, pipeline.seed)
                            .map_err(|e| e.to_string())?;
                    let system = layout::assemble_spring_system(&g, &fixed, 1.0)
                        .map_err(|e| e.to_string())?;
                    let drawing = layout::solve_spring(&system).map_err(|e| e.to_string())?;
                    let groups: Vec<Vec<(usize, usize)>> = layers
                        .iter()
                        .map(|l| l.edges.iter().map(|&e| g.endpoints(e)).collect())
                        .collect();
                    let svg = io::emit_svg(&drawing, &groups, &[], &SvgOptions::default())
                        .map_err(|e| e.to_string())?;
                    fs::write(&out, svg).map_err(|e| format!("{}: {e}", out.display()))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn adjacency_of(rot: &planar::rotation::RotationSystem) -> Vec<Vec<usize>> {
    (1..=rot.max_vertex())
        .map(|v| rot.order(v).to_vec())
        .collect()
}

type Boundary = (io::BoundarySpec, BTreeMap<usize, (f64, f64)>);

/// Boundary from a .gm1 file, or the rim spread on a contour when absent.
fn boundary_map(
    g: &Graph,
    boundary: Option<&PathBuf>,
    contour: ContourArg,
    ls: &layout::LevelStructure,
) -> Result<Boundary, String> {
    match boundary {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let spec = io::parse_gm1(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            for &v in &spec.vertices {
                if v == 0 || v > g.vertex_count() {
                    return Err(format!("boundary vertex {v} out of range"));
                }
            }
            let map = spec.as_map();
            Ok((spec, map))
        }
        None => {
            let rim = ls.sequence(1).to_vec();
            let n = rim.len();
            let contour = match contour {
                ContourArg::Circle => Contour::Circle,
                ContourArg::Rect => Contour::Rectangle,
            };
            let mut vertices = Vec::new();
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for (i, &v) in rim.iter().enumerate() {
                let t = i as f64 / n as f64;
                let (x, y) = match contour {
                    Contour::Circle => {
                        let a = t * std::f64::consts::TAU;
                        (100.0 * a.cos(), 100.0 * a.sin())
                    }
                    Contour::Rectangle => {
                        let s = (t * 4.0).fract();
                        match (t * 4.0).floor() as usize % 4 {
                            0 => (100.0, -100.0 + 200.0 * s),
                            1 => (100.0 - 200.0 * s, 100.0),
                            2 => (-100.0, 100.0 - 200.0 * s),
                            _ => (-100.0 + 200.0 * s, -100.0),
                        }
                    }
                };
                vertices.push(v);
                xs.push(x);
                ys.push(y);
            }
            let spec = io::BoundarySpec { vertices, xs, ys };
            let map = spec.as_map();
            Ok((spec, map))
        }
    }
}
