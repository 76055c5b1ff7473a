//! The `origami-mv` command line. [`run_in`] does all the work and returns
//! the captured output, so the binary and the tests share one code path.

use std::cell::RefCell;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::{count_colorings_brute, count_colorings_transfer, lieb_constant, lieb_table};
use crate::cpt::{edge_block, parse_cpt, serialize_cpt};
use crate::enumerate::{count_mv, Pruning, Search};
use crate::error::Error;
use crate::generators::{gen_miura, gen_single_vertex, gen_square_twist, DEFAULT_MIURA_ANGLE};
use crate::line_graph::{build_line_graph, LineGraphError, LineNode, OrigamiLineGraph};
use crate::local::{blb_pairs, classify_degree4, degree4_forced_same, vertex_valid_assignments, CreasePair, Degree4Class};
use crate::miura::{coloring_to_mv, mv_to_coloring, recognize_miura, GridColoring};
use crate::model::{validate, vertex_star, CreasePattern, MvAssignment};
use crate::svg::render_svg;

#[derive(Parser, Debug)]
#[command(name = "origami-mv", version, about = "Count mountain-valley assignments of flat-foldable crease patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the result to this file instead of standard output.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Grid {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a crease pattern as CPT.
    #[command(subcommand)]
    Gen(Family),
    /// Check the local angle conditions at every interior vertex.
    Validate { input: PathBuf },
    /// Build the origami line graph.
    Linegraph {
        input: PathBuf,
        /// Emit DOT text instead of a summary.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Count locally flat-foldable MV-assignments.
    Count {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CountMethod::Linegraph)]
        method: CountMethod,
    },
    /// List locally flat-foldable MV-assignments in lexicographic order.
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Classify a single degree-4 vertex given its angles, e.g. 45,90,135,90.
    Vertex {
        #[arg(allow_hyphen_values = true)]
        angles: String,
    },
    /// Convert between Miura-ori assignments and grid colorings.
    #[command(subcommand)]
    Miura(MiuraCommand),
    /// Count proper 3-colorings of a grid with the corner pre-colored.
    Colorings {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value_t = ColoringMethod::Transfer)]
        method: ColoringMethod,
    },
    /// Per-vertex coloring growth of n×n grids against (4/3)^(3/2).
    Lieb {
        #[arg(long)]
        max_n: usize,
    },
    /// Draw a pattern and its assignment as SVG.
    Render {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// m×n Miura-ori, top row pointing left.
    Miura {
        #[command(flatten)]
        grid: Grid,
        /// Acute face angle in degrees.
        #[arg(long, default_value_t = DEFAULT_MIURA_ANGLE)]
        alpha: f64,
        /// Also write key=value metadata (grid edge to crease id) to this file.
        #[arg(long)]
        metadata: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// m×n square-twist tessellation.
    SquareTwist {
        #[command(flatten)]
        grid: Grid,
        /// Also write key=value metadata (unit creases) to this file.
        #[arg(long)]
        metadata: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum MiuraCommand {
    /// Read a fully assigned Miura-ori CPT file and print its coloring.
    ToColoring {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Read a digit-grid coloring and write the Miura-ori CPT file.
    FromColoring {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountMethod {
    Linegraph,
    Enumerate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColoringMethod {
    Brute,
    Transfer,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs with paths relative to the current directory.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_in(Path::new("."), args)
}

/// Runs with relative paths resolved against `dir`. `args` includes the
/// program name.
pub fn run_in<I, T>(dir: &Path, args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let ctx = Ctx { dir, partial: RefCell::new(String::new()) };
    match ctx.dispatch(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(error) => Outcome { code: error.exit_code(), stdout: ctx.partial.take(), stderr: format!("error: {error}\n") },
    }
}

struct Ctx<'a> {
    dir: &'a Path,
    /// Output to show even though the command then fails.
    partial: RefCell<String>,
}

impl Ctx<'_> {
    fn path(&self, p: &Path) -> PathBuf {
        self.dir.join(p)
    }

    fn read(&self, p: &Path) -> Result<String, Error> {
        std::fs::read_to_string(self.path(p)).map_err(|source| Error::Io { path: p.to_path_buf(), source })
    }

    fn write(&self, p: &Path, text: &str) -> Result<(), Error> {
        std::fs::write(self.path(p), text).map_err(|source| Error::Io { path: p.to_path_buf(), source })
    }

    fn load(&self, p: &Path) -> Result<(CreasePattern, MvAssignment), Error> {
        let text = self.read(p)?;
        parse_cpt(&text).map_err(|source| Error::Cpt { path: p.to_path_buf(), source })
    }

    /// Sends `text` to the `-o` file if given, otherwise returns it for
    /// standard output.
    fn emit(&self, output: &Output, text: String) -> Result<String, Error> {
        match &output.out {
            Some(p) => {
                self.write(p, &text)?;
                Ok(String::new())
            }
            None => Ok(text),
        }
    }

    fn dispatch(&self, command: Command) -> Result<String, Error> {
        Ok(match command {
            Command::Gen(family) => self.generate(family)?,
            Command::Validate { input } => {
                let (pattern, _) = self.load(&input)?;
                validation_report(&pattern)
            }
            Command::Linegraph { input, dot, output } => {
                let (pattern, _) = self.load(&input)?;
                let lg = build_line_graph(&pattern)?;
                if dot {
                    self.emit(&output, lg.to_dot())?
                } else {
                    let text = line_graph_summary(&lg);
                    if !lg.two_colorable() {
                        *self.partial.borrow_mut() = text;
                        return Err(LineGraphError::NotFlatFoldable.into());
                    }
                    self.emit(&output, text)?
                }
            }
            Command::Count { input, method } => {
                let (pattern, _) = self.load(&input)?;
                let count = match method {
                    CountMethod::Linegraph => build_line_graph(&pattern)?.count_mv_by_components()?,
                    CountMethod::Enumerate => count_mv(&pattern)?,
                };
                format!("{count}\n")
            }
            Command::Enumerate { input, limit, output } => {
                let (pattern, _) = self.load(&input)?;
                let search = Search::new(&pattern, Pruning::Partial)?;
                let blocks: Vec<String> =
                    search.iter().take(limit.unwrap_or(usize::MAX)).map(|mv| edge_block(&pattern, &mv)).collect();
                self.emit(&output, blocks.join("\n"))?
            }
            Command::Vertex { angles } => vertex_report(&angles)?,
            Command::Miura(MiuraCommand::ToColoring { input, output }) => {
                let (pattern, mv) = self.load(&input)?;
                let mp = recognize_miura(&pattern)?;
                let coloring = mv_to_coloring(&mp, &mv)?;
                self.emit(&output, coloring.to_string())?
            }
            Command::Miura(MiuraCommand::FromColoring { input, output }) => {
                let text = self.read(&input)?;
                let coloring = GridColoring::parse(&text)?;
                let mv = coloring_to_mv(coloring.rows, coloring.cols, &coloring)?;
                let mp = gen_miura(coloring.rows, coloring.cols, DEFAULT_MIURA_ANGLE)?;
                let cpt = serialize_cpt(&mp.base, Some(&mv)).expect("assignment matches the generated pattern");
                self.emit(&output, cpt)?
            }
            Command::Colorings { grid, method } => {
                let count = match method {
                    ColoringMethod::Brute => count_colorings_brute(grid.rows, grid.cols),
                    ColoringMethod::Transfer => count_colorings_transfer(grid.rows, grid.cols),
                }
                ?;
                format!("{count}\n")
            }
            Command::Lieb { max_n } => {
                let w = lieb_constant();
                let mut out = String::from("n\tcount\tf\tW\n");
                for row in lieb_table(max_n)? {
                    writeln!(out, "{}\t{}\t{:.6}\t{:.6}", row.n, row.count, row.f, w).unwrap();
                }
                out
            }
            Command::Render { input, output } => {
                let (pattern, mv) = self.load(&input)?;
                self.emit(&output, render_svg(&pattern, Some(&mv)))?
            }
        })
    }

    fn generate(&self, family: Family) -> Result<String, Error> {
        let (cpt, metadata, meta_path, output) = match family {
            Family::Miura { grid, alpha, metadata, output } => {
                let mp = gen_miura(grid.rows, grid.cols, alpha)?;
                (serialize_cpt(&mp.base, None).expect("no assignment"), mp.metadata(), metadata, output)
            }
            Family::SquareTwist { grid, metadata, output } => {
                let sp = gen_square_twist(grid.rows, grid.cols)?;
                (serialize_cpt(&sp.base, None).expect("no assignment"), sp.metadata(), metadata, output)
            }
        };
        if let Some(p) = meta_path {
            self.write(&p, &metadata)?;
        }
        self.emit(&output, cpt)
    }
}

fn validation_report(pattern: &CreasePattern) -> String {
    let report = validate(pattern);
    let mut out = String::new();
    writeln!(out, "interior vertices: {}", report.vertices.len()).unwrap();
    let warnings = report.warnings();
    for w in &warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    match warnings.len() {
        0 => writeln!(out, "result: ok").unwrap(),
        1 => writeln!(out, "result: 1 warning").unwrap(),
        k => writeln!(out, "result: {k} warnings").unwrap(),
    }
    out
}

fn line_graph_summary(lg: &OrigamiLineGraph) -> String {
    let gadgets = lg.nodes().len() - lg.nodes().iter().filter(|n| matches!(n, LineNode::Crease(_))).count();
    let mut out = String::new();
    writeln!(out, "creases: {}", lg.nodes().len() - gadgets).unwrap();
    writeln!(out, "gadgets: {gadgets}").unwrap();
    writeln!(out, "edges: {}", lg.edge_count()).unwrap();
    writeln!(out, "components: {}", lg.component_count()).unwrap();
    writeln!(out, "two-colorable: {}", if lg.two_colorable() { "yes" } else { "no" }).unwrap();
    if let Ok(count) = lg.count_mv_by_components() {
        writeln!(out, "count: {count}").unwrap();
    }
    for c in lg.constraints() {
        let source = c.vertex.map_or(String::new(), |v| format!(" at vertex {v}"));
        let skipped = if c.applied { "" } else { " (skipped: even path)" };
        writeln!(out, "{} {} {}{source}{skipped}", c.relation, c.pair.first(), c.pair.second()).unwrap();
    }
    out
}

fn pair_list(pairs: impl IntoIterator<Item = CreasePair>) -> String {
    let items: Vec<String> = pairs.into_iter().map(|p| format!("{}-{}", p.first(), p.second())).collect();
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

fn vertex_report(list: &str) -> Result<String, Error> {
    let angles: Vec<f64> = list
        .split(',')
        .map(|a| a.trim().parse::<f64>().map_err(|_| Error::Usage(format!("invalid angle `{}`", a.trim()))))
        .collect::<Result<_, _>>()?;
    let pattern = gen_single_vertex(&angles)?;
    let star = vertex_star(&pattern, crate::model::VertexId(0))?;
    let mut out = String::new();
    let shown: Vec<String> = star.angles.iter().map(|a| format!("{}", (a * 1e6).round() / 1e6 + 0.0)).collect();
    writeln!(out, "angles: {}", shown.join(" ")).unwrap();
    let class = classify_degree4(&star)?;
    let class = match class {
        Degree4Class::UniqueMin { angle } => format!("unique minimum at angle {angle}"),
        Degree4Class::DoubleMin { e4 } => format!("two equal minima; crease {e4} cannot be the odd one out"),
        Degree4Class::AllEqual => "all angles equal".into(),
    };
    writeln!(out, "class: {class}").unwrap();
    writeln!(out, "different: {}", pair_list(blb_pairs(&star))).unwrap();
    writeln!(out, "same: {}", pair_list(degree4_forced_same(&star)?)).unwrap();
    let valid = vertex_valid_assignments(&star)?;
    writeln!(out, "valid assignments: {}", valid.len()).unwrap();
    for t in valid {
        let letters: Vec<String> = t.iter().map(|m| m.letter().to_string()).collect();
        writeln!(out, "{}", letters.join(" ")).unwrap();
    }
    Ok(out)
}
