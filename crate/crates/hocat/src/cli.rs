//! Command-line interface. [`run`] does all the work and returns the exit
//! status with the captured output, so it can be tested without a process.

use std::ffi::OsString;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hocat_core::adjoints::{
    finite_set, underlying_reflexive_quiver, verify_adjunction, AdjunctionReport, DiscreteObj, FreeUnderlying, ObjIndiscrete,
    Pi0Discrete,
};
use hocat_core::elements::{elements, SetValuedFunctor, Variance};
use hocat_core::localize::{localize_rel, zigzag_of, MarkedCat};
use hocat_core::nerve::nerve;
use hocat_core::realize::{coeq_cat_direct, colim_cat, hcat, lim_cat, CatDiagram};
use hocat_core::samples;
use hocat_core::sset::{check_iep, simplex_category, IepCheck};
use hocat_core::words::{describe_table, materialize, Materialization};
use hocat_core::{Budget, Edge, Error, FinCat, PresCat, Quiver, WordBudget, MAX_DIM};

use crate::doc::{parse, print, DocError, Document, Kind, Location, SSetFormat};
use crate::dot::{dot_fincat, dot_quiver, dot_sset};
use crate::load::{load_diagram, load_fincat, load_marked, load_quiver, load_sset, store_fincat, store_marked, store_sset};

#[derive(Parser, Debug)]
#[command(name = "hocat", version, about = "Finite categories, nerves and homotopy categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Truncation dimension for nerves.
    #[arg(long, global = true, default_value_t = hocat_core::DEFAULT_DIM)]
    pub dim: usize,
    /// Length bound for word enumeration (default: generators + longest relation + 2).
    #[arg(long, global = true)]
    pub max_len: Option<usize>,
    /// Ceiling on enumerated items and word classes.
    #[arg(long, global = true, env = "HOCAT_BUDGET")]
    pub budget: Option<usize>,
    /// Seed for extra random probes in `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Doc)]
    pub format: Format,
    /// Print the partial word table instead of failing when finiteness
    /// cannot be certified.
    #[arg(long, global = true)]
    pub allow_partial: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Doc,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Nerve of a category, truncated at --dim.
    Nerve {
        file: PathBuf,
        /// List every simplex instead of the nondegenerate ones.
        #[arg(long)]
        raw: bool,
    },
    /// Homotopy category of a simplicial set.
    Hcat { file: PathBuf },
    /// Colimit of a diagram of categories.
    Colim { file: PathBuf },
    /// Limit of a diagram of categories.
    Lim { file: PathBuf },
    /// Coequalizer of a parallel pair of functors, computed directly.
    Coeq { file: PathBuf },
    /// Localization of a category at its marked morphisms.
    Localize {
        file: PathBuf,
        /// Morphisms to invert, in addition to those marked in the file.
        #[arg(long, value_delimiter = ',')]
        mark: Vec<String>,
    },
    /// Category of elements of a simplicial set, or of a representable.
    Elements {
        file: PathBuf,
        /// For a category: use the presheaf represented by this object.
        #[arg(long)]
        rep: Option<String>,
    },
    /// Spine extension property of a simplicial set.
    CheckIep {
        file: PathBuf,
        /// Check only this dimension.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check the Set/Cat adjunctions and free/underlying on small probes.
    Verify {
        /// Extra category files to use as probes.
        files: Vec<PathBuf>,
    },
    /// Graphviz rendering of any document.
    ExportDot { file: PathBuf },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad invocation, unreadable or malformed input: exit 2.
    Usage(String),
    /// The input is fine but the computation says no: exit 1.
    Domain(String),
}

type Res<T> = std::result::Result<T, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn doc_failure(path: &FsPath, e: DocError) -> Failure {
    let msg = format!("{}:{e}", path.display());
    if e.is_semantic() {
        Failure::Domain(msg)
    } else {
        Failure::Usage(msg)
    }
}

fn read_doc(path: &FsPath) -> Res<Document> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| doc_failure(path, e))
}

struct Ctx {
    opts: Opts,
    stdout: String,
}

impl Ctx {
    fn budget(&self) -> Budget {
        self.opts.budget.map_or_else(Budget::default, Budget::items)
    }

    fn words(&self) -> WordBudget {
        WordBudget {
            max_len: self.opts.max_len,
            max_classes: self.opts.budget.unwrap_or(WordBudget::default().max_classes),
        }
    }

    fn category(&self, path: &FsPath, doc: &Document) -> Res<FinCat> {
        load_fincat(doc, self.words()).map_err(|e| doc_failure(path, e))
    }

    fn diagram(&self, path: &FsPath) -> Res<CatDiagram> {
        let doc = read_doc(path)?;
        let base = path.parent().map(FsPath::to_path_buf).unwrap_or_default();
        let mut resolve = |p: &str| -> Result<Document, DocError> {
            let full = base.join(p);
            let text = fs::read_to_string(&full).map_err(|e| DocError::Io {
                loc: Location::default(),
                path: full.display().to_string(),
                message: e.to_string(),
            })?;
            parse(&text)
        };
        load_diagram(&doc, &mut resolve, self.words()).map_err(|e| doc_failure(path, e))
    }

    fn emit_category(&mut self, c: &FinCat, name: &str, marked: Option<&MarkedCat>) {
        let text = match self.opts.format {
            Format::Doc => match marked {
                Some(m) => print(&store_marked(m, name)),
                None => print(&store_fincat(c, name)),
            },
            Format::Dot => dot_fincat(c, name, &marked.map(MarkedCat::marking).unwrap_or_default()),
            Format::Text => {
                let mut s = format!("{name}: {} objects, {} morphisms\n", c.num_objects(), c.num_morphisms());
                for m in c.morphisms() {
                    s.push_str(&format!("  {} : {} -> {}\n", m.name, c.object_name(m.src), c.object_name(m.tgt)));
                }
                s
            }
        };
        self.stdout.push_str(&text);
    }

    /// Materializes and prints, or prints the partial table when allowed.
    fn emit_presented(&mut self, p: &PresCat, name: &str) -> Res<()> {
        match materialize(p, self.words())? {
            Materialization::Finite(q) => {
                self.emit_category(&q.cat, name, None);
                Ok(())
            }
            Materialization::PossiblyInfinite(t) if self.opts.allow_partial => {
                self.stdout.push_str(&format!(
                    "# {name}: no finiteness certificate at length bound {}; {} classes so far\n",
                    t.bound(),
                    t.num_classes()
                ));
                self.stdout.push_str(&describe_table(&t));
                Ok(())
            }
            Materialization::PossiblyInfinite(t) => Err(Error::PossiblyInfinite { bound: t.bound() }.into()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let mut ctx = Ctx {
        opts: cli.opts.clone(),
        stdout: String::new(),
    };
    let result = execute(&mut ctx, &cli.command);
    let mut outcome = Outcome {
        code: 0,
        stdout: std::mem::take(&mut ctx.stdout),
        stderr: String::new(),
    };
    match result {
        Ok(()) => {}
        Err(Failure::Usage(msg)) => {
            outcome.code = 2;
            outcome.stderr = format!("error: {msg}\n");
        }
        Err(Failure::Domain(msg)) => {
            outcome.code = 1;
            outcome.stderr = format!("error: {msg}\n");
        }
    }
    if let Some(out) = &cli.opts.out {
        if outcome.code != 2 && !outcome.stdout.is_empty() {
            if let Err(e) = fs::write(out, &outcome.stdout) {
                outcome.code = 2;
                outcome.stderr.push_str(&format!("error: cannot write {}: {e}\n", out.display()));
            }
            outcome.stdout.clear();
        }
    }
    outcome
}

fn execute(ctx: &mut Ctx, cmd: &Command) -> Res<()> {
    match cmd {
        Command::Nerve { file, raw } => {
            if ctx.opts.dim > MAX_DIM {
                return Err(Failure::Usage(format!("--dim must be at most {MAX_DIM}")));
            }
            let doc = read_doc(file)?;
            let c = ctx.category(file, &doc)?;
            let x = nerve(&c, ctx.opts.dim).sset;
            let name = format!("N({})", doc.name.text);
            let text = match ctx.opts.format {
                Format::Dot => dot_sset(&x, &name),
                Format::Text => format!("{name}: level sizes {:?}\n", x.level_sizes()),
                Format::Doc => print(&store_sset(&x, &name, if *raw { SSetFormat::Raw } else { SSetFormat::Nondeg })),
            };
            ctx.stdout.push_str(&text);
            Ok(())
        }
        Command::Hcat { file } => {
            let doc = read_doc(file)?;
            let x = load_sset(&doc).map_err(|e| doc_failure(file, e))?;
            let h = hcat(&x)?;
            ctx.emit_presented(&h.pres, &format!("h({})", doc.name.text))
        }
        Command::Colim { file } => {
            let d = ctx.diagram(file)?;
            let c = colim_cat(&d)?;
            ctx.emit_presented(&c.hcat.pres, &format!("colim({})", stem(file)))
        }
        Command::Lim { file } => {
            let d = ctx.diagram(file)?;
            let l = lim_cat(&d, ctx.budget())?;
            ctx.emit_category(&l.cat, &format!("lim({})", stem(file)), None);
            Ok(())
        }
        Command::Coeq { file } => {
            let d = ctx.diagram(file)?;
            let (s, t, u, v) = parallel_shape(&d.index)
                .ok_or_else(|| Failure::Usage(format!("{}: the index category is not a parallel pair", file.display())))?;
            let direct = coeq_cat_direct(&d.values[s], &d.values[t], &d.maps[u], &d.maps[v])?;
            ctx.emit_presented(&direct.pres, &format!("coeq({})", stem(file)))
        }
        Command::Localize { file, mark } => localize(ctx, file, mark),
        Command::Elements { file, rep } => {
            let doc = read_doc(file)?;
            let (base, w) = match doc.kind {
                Kind::SSet => {
                    let x = load_sset(&doc).map_err(|e| doc_failure(file, e))?;
                    let delta = simplex_category(x.dim());
                    let w = SetValuedFunctor::of_sset(&x, &delta)?;
                    (delta.cat, w)
                }
                _ => {
                    let c = ctx.category(file, &doc)?;
                    let w = match rep {
                        Some(r) => {
                            let x = c.object_index(r).ok_or_else(|| Failure::Usage(format!("no object {r} in {}", file.display())))?;
                            SetValuedFunctor::hom_into(&c, x)
                        }
                        None => SetValuedFunctor::singleton(&c, Variance::Covariant),
                    };
                    (c, w)
                }
            };
            let el = elements(&base, &w)?;
            ctx.emit_category(&el.cat, &format!("El({})", doc.name.text), None);
            Ok(())
        }
        Command::CheckIep { file, n } => {
            let doc = read_doc(file)?;
            let x = load_sset(&doc).map_err(|e| doc_failure(file, e))?;
            let dims: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (2..=x.dim()).collect(),
            };
            for n in dims {
                match check_iep(&x, n)? {
                    IepCheck::Holds => ctx.stdout.push_str(&format!("n={n}: holds\n")),
                    IepCheck::Fails(w) => {
                        let chain = w.chain_names(&x);
                        ctx.stdout.push_str(&format!(
                            "n={n}: fails at chain [{}] with {} fillers\n",
                            chain.join(", "),
                            w.fillers.len()
                        ));
                        return Err(Error::NotIep { n, chain }.into());
                    }
                }
            }
            Ok(())
        }
        Command::Verify { files } => verify(ctx, files),
        Command::ExportDot { file } => {
            let doc = read_doc(file)?;
            let name = doc.name.text.clone();
            let text = match doc.kind {
                Kind::Category => dot_fincat(&ctx.category(file, &doc)?, &name, &[]),
                Kind::Marked => {
                    let m = load_marked(&doc, ctx.words()).map_err(|e| doc_failure(file, e))?;
                    dot_fincat(&m.cat, &name, &m.marking())
                }
                Kind::SSet => dot_sset(&load_sset(&doc).map_err(|e| doc_failure(file, e))?, &name),
                Kind::Quiver => dot_quiver(&load_quiver(&doc).map_err(|e| doc_failure(file, e))?, &name),
                Kind::Diagram => dot_fincat(&ctx.diagram(file)?.index, &name, &[]),
            };
            ctx.stdout.push_str(&text);
            Ok(())
        }
    }
}

fn stem(path: &FsPath) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

/// `(s, t, u, v)` when the index is exactly two arrows `u, v : s -> t`.
fn parallel_shape(index: &FinCat) -> Option<(usize, usize, usize, usize)> {
    let arrows: Vec<usize> = index.non_identities().collect();
    let [u, v] = arrows[..] else { return None };
    let (s, t) = (index.src(u), index.tgt(u));
    (index.num_objects() == 2 && s != t && (index.src(v), index.tgt(v)) == (s, t)).then_some((s, t, u, v))
}

fn localize(ctx: &mut Ctx, file: &FsPath, extra: &[String]) -> Res<()> {
    let doc = read_doc(file)?;
    let m = load_marked(&doc, ctx.words()).map_err(|e| doc_failure(file, e))?;
    let mut marking = m.marking();
    for name in extra {
        let f = m
            .cat
            .morphism_index(name)
            .ok_or_else(|| Failure::Usage(format!("no morphism {name} in {}", file.display())))?;
        marking.push(f);
    }
    marking.sort_unstable();
    marking.dedup();
    let m = MarkedCat::new(m.cat, &marking)?;
    let loc = localize_rel(&m)?;
    let name = format!("{}[W^-1]", doc.name.text);
    if ctx.opts.format != Format::Text {
        return ctx.emit_presented(&loc.pres, &name);
    }
    let q = match materialize(&loc.pres, ctx.words())? {
        Materialization::Finite(q) => q,
        Materialization::PossiblyInfinite(_) => return ctx.emit_presented(&loc.pres, &name),
    };
    ctx.emit_category(&q.cat, &name, None);
    ctx.stdout.push_str("zigzags:\n");
    for (k, class) in q.table.classes().iter().enumerate() {
        let z = zigzag_of(&loc, &class.rep)?;
        ctx.stdout.push_str(&format!("  {} = {}\n", q.cat.morphism_name(k), z.display(&m.cat)));
    }
    Ok(())
}

/// No cycles through non-identity morphisms, so the free category on the
/// underlying quiver is finite.
fn is_direct(c: &FinCat) -> bool {
    let n = c.num_objects();
    let mut reach = vec![vec![false; n]; n];
    for f in c.non_identities() {
        reach[c.src(f)][c.tgt(f)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).all(|i| !reach[i][i])
}

fn verify(ctx: &mut Ctx, files: &[PathBuf]) -> Res<()> {
    let budget = ctx.budget();
    let sets: Vec<Vec<String>> = (0..=3).map(finite_set).collect();
    let mut cats = vec![
        samples::terminal(),
        samples::arrow(),
        samples::ordinal(2),
        samples::discrete(&["a", "b"]),
        samples::walking_iso(),
        samples::parallel_pair(),
        samples::idempotent(),
    ];
    for f in files {
        let doc = read_doc(f)?;
        cats.push(ctx.category(f, &doc)?);
    }
    if let Some(seed) = ctx.opts.seed {
        let mut rng = samples::rng(seed);
        cats.extend((0..2).map(|_| samples::random_category(&mut rng, 3, 6)));
    }
    let direct: Vec<FinCat> = cats.iter().filter(|c| is_direct(c)).cloned().collect();
    let vertices = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
    let mut quivers: Vec<Quiver> = [vec![], vec![(0, 1)], vec![(0, 1), (0, 1)], vec![(0, 1), (1, 2)]]
        .iter()
        .map(|es: &Vec<(usize, usize)>| {
            let n = es.iter().map(|&(s, t)| s.max(t) + 1).max().unwrap_or(1);
            let edges = es.iter().enumerate().map(|(k, &(s, t))| Edge::new(format!("e{k}"), s, t)).collect();
            Quiver::new(vertices(n), edges).expect("endpoints in range").adjoin_degeneracies()
        })
        .collect();
    quivers.extend(direct.iter().filter(|c| c.num_objects() <= 3).map(underlying_reflexive_quiver));
    let words = ctx.words();
    let reports: Vec<(&str, AdjunctionReport)> = vec![
        ("pi0 -| disc", verify_adjunction(&Pi0Discrete, &cats, &sets, budget)?),
        ("disc -| obj", verify_adjunction(&DiscreteObj, &sets, &cats, budget)?),
        ("obj -| indisc", verify_adjunction(&ObjIndiscrete, &cats, &sets, budget)?),
        (
            "free -| underlying",
            verify_adjunction(&FreeUnderlying { budget: words }, &quivers, &direct, budget)?,
        ),
    ];
    let mut failed = Vec::new();
    for (name, r) in &reports {
        let verdict = if r.holds() { "ok" } else { "FAILED" };
        ctx.stdout.push_str(&format!(
            "{name}: {verdict} ({} hom pairs, bijective={}, triangles={}/{}, unit natural={})\n",
            r.hom_counts.len(),
            r.bijective,
            r.left_triangle,
            r.right_triangle,
            r.unit_natural
        ));
        if !r.holds() {
            failed.push(*name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!("adjunction checks failed: {}", failed.join(", "))))
    }
}
