//! The `coopcolor` command line: parse a JSON system file, dispatch to a
//! solver, and emit prose or machine-readable JSON.
//!
//! Exit codes are stable: `0` for success/feasible, `1` for a proved
//! infeasibility (the certificate or losing strategy is printed), `2` for
//! malformed input, guard violations, or unknown flags. With `--json` every
//! command emits a single self-contained envelope `{command, seed, system,
//! result}` that `verify --replay` re-parses and re-checks through fresh
//! oracles; identical inputs and seeds give byte-identical output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coloring::{
    chromatic_number, chromatic_number_formula_bf, coop_list_color, cooperative_color,
    forest_permutation_decomposition, is_k_colorable, Coloring, KColorability, ListAssignment,
    CHROMATIC_FORMULA_MAX,
};
use crate::error::Error;
use crate::exhaustive;
use crate::games::{
    conjecture_search_parallel, replay, solve, ConjectureCatalog, GameOutcome, IndicatedGame,
    IndicatedMove, MarkingGame, MarkingMove, PaintingGame, PaintingMove, PaintingRules, Player,
};
use crate::matroid::{Matroid, MatroidSpec};
use crate::partition::{partition_ground_set, union_rank, union_rank_formula_bf, PartitionOutcome};
use crate::set::{GroundSet, Permutation, Subset};
use crate::union_find::is_forest;

/// Random playouts used when re-verifying a solved game.
const REPLAY_PLAYOUTS: usize = 20;

/// A system of matroids plus optional coloring/game parameters, as stored on
/// disk. All matroid specs must agree on the ground size `ground`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemFile {
    pub ground: usize,
    pub matroids: Vec<MatroidSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    /// Color lists keyed by element id; values are 1-based colors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lists: Option<BTreeMap<usize, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rules: Option<PaintingRules>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first: Option<Player>,
    /// Edge-id permutations for `arbor-perm`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
}

impl SystemFile {
    pub fn load(path: &Path) -> Result<SystemFile, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let file: SystemFile = serde_json::from_str(&text)
            .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.ground > crate::set::MAX_GROUND {
            return Err(Error::GroundTooLarge { n: self.ground, max: crate::set::MAX_GROUND });
        }
        for (i, spec) in self.matroids.iter().enumerate() {
            if spec.ground_size() != self.ground {
                return Err(Error::MalformedSpec(format!(
                    "matroid {i} lives on {} elements but the file declares {}",
                    spec.ground_size(),
                    self.ground
                )));
            }
        }
        if let Some(names) = &self.names {
            if names.len() != self.matroids.len() {
                return Err(Error::MalformedSpec(format!(
                    "{} names for {} matroids",
                    names.len(),
                    self.matroids.len()
                )));
            }
        }
        if let Some(lists) = &self.lists {
            let t = self.matroids.len();
            for (&e, colors) in lists {
                if e >= self.ground {
                    return Err(Error::MalformedLists(format!(
                        "list for element {e} outside 0..{}",
                        self.ground
                    )));
                }
                if colors.iter().any(|&c| c == 0 || c > t) {
                    return Err(Error::MalformedLists(format!(
                        "element {e} names a color outside 1..={t}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn build_matroids(&self) -> Result<Vec<Matroid>, Error> {
        self.matroids.iter().map(MatroidSpec::build).collect()
    }

    pub fn ground_set(&self) -> GroundSet {
        GroundSet::new(self.ground)
    }

    pub fn list_assignment(&self) -> Result<ListAssignment, Error> {
        let lists = self
            .lists
            .as_ref()
            .ok_or_else(|| Error::MalformedLists("the system file has no lists".into()))?;
        let mut dense = Vec::with_capacity(self.ground);
        for e in 0..self.ground {
            let colors = lists.get(&e).ok_or_else(|| {
                Error::MalformedLists(format!("element {e} has no color list"))
            })?;
            dense.push(colors.clone());
        }
        ListAssignment::new(self.ground_set(), self.matroids.len(), dense)
    }

    pub fn name_of(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("matroid-{i}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "coopcolor",
    version,
    about = "Matroid partitioning, cooperative coloring, and coloring games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a machine-readable JSON envelope instead of prose.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized flow (default 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of a subset in one matroid of the system.
    Rank {
        file: PathBuf,
        /// Index of the matroid inside the file.
        #[arg(long, default_value_t = 0)]
        matroid: usize,
        /// Comma-separated element ids; defaults to all usable elements.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
    },
    /// Chromatic number, computed by partitioning and cross-checked against
    /// the exhaustive max-ratio formula when small enough.
    Chromatic {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        matroid: usize,
    },
    /// Partition all usable elements across the system, or print a
    /// deficiency certificate.
    Partition { file: PathBuf },
    /// Decide k-colorability of one matroid; exits 1 with a certificate when
    /// the answer is no.
    CheckK {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        matroid: usize,
    },
    /// Cooperative coloring: class i independent in matroid i.
    CoopColor { file: PathBuf },
    /// List coloring from the per-element lists in the file.
    ListColor { file: PathBuf },
    /// Split a graph's edges into a forest plus permuted forests.
    ArborPerm {
        file: PathBuf,
        /// Generate this many random permutations (seeded) instead of taking
        /// them from the file.
        #[arg(long)]
        perms: Option<usize>,
    },
    /// Solve a coloring game exactly.
    #[command(subcommand)]
    Game(GameCommand),
    /// Enumerate painting-game systems and hunt for a Ben win.
    ConjectureSearch {
        file: PathBuf,
        /// Matroids per system (also the palette and pick budget); defaults
        /// to the `k` field of the file.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        rules: Option<PaintingRules>,
        /// Worker threads; results are ordered by instance index regardless.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Run the axiom and oracle-equivalence suite on a system file, or
    /// re-verify an emitted JSON result with --replay.
    Verify {
        file: Option<PathBuf>,
        /// A JSON envelope previously produced with --json.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GameCommand {
    /// Ann points, Ben must color the pointed element.
    Indicated { file: PathBuf },
    /// Players alternate choosing an element and a legal color.
    Marking {
        file: PathBuf,
        /// Who moves first (default ann).
        #[arg(long, value_parser = parse_player)]
        first: Option<Player>,
    },
    /// Ben offers subsets, Ann paints an independent part of each offer.
    Painting {
        file: PathBuf,
        /// Pick budget per element; defaults to the file's `k`, then to the
        /// number of matroids.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        rules: Option<PaintingRules>,
    },
}

fn parse_player(s: &str) -> Result<Player, String> {
    match s {
        "ann" => Ok(Player::Ann),
        "ben" => Ok(Player::Ben),
        other => Err(format!("expected 'ann' or 'ben', got '{other}'")),
    }
}

impl clap::ValueEnum for PaintingRules {
    fn value_variants<'a>() -> &'a [Self] {
        &[PaintingRules::NoDeadElement, PaintingRules::StrictAllColored]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(match self {
            PaintingRules::NoDeadElement => clap::builder::PossibleValue::new("no-dead-element"),
            PaintingRules::StrictAllColored => {
                clap::builder::PossibleValue::new("strict-all-colored")
            }
        })
    }
}

/// Runs the CLI against explicit arguments, writing to `out`. Returns the
/// process exit code.
pub fn run_cli<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            eprintln!("{e}");
            return 2;
        }
    };
    let seed = cli.seed;
    let ctx = Ctx { json: cli.json, seed };
    match dispatch(&cli.command, &ctx, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Infeasible(_) | Error::ArboricityTooHigh(_) => 1,
                _ => 2,
            }
        }
    }
}

struct Ctx {
    json: bool,
    seed: Option<u64>,
}

impl Ctx {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0))
    }
}

fn dispatch<W: Write>(cmd: &Command, ctx: &Ctx, out: &mut W) -> Result<i32, Error> {
    match cmd {
        Command::Rank { file, matroid, subset } => {
            cmd_rank(&SystemFile::load(file)?, *matroid, subset.as_deref(), ctx, out)
        }
        Command::Chromatic { file, matroid } => {
            cmd_chromatic(&SystemFile::load(file)?, *matroid, ctx, out)
        }
        Command::Partition { file } => cmd_partition(&SystemFile::load(file)?, ctx, out),
        Command::CheckK { file, k, matroid } => {
            cmd_check_k(&SystemFile::load(file)?, *k, *matroid, ctx, out)
        }
        Command::CoopColor { file } => cmd_coop_color(&SystemFile::load(file)?, false, ctx, out),
        Command::ListColor { file } => cmd_coop_color(&SystemFile::load(file)?, true, ctx, out),
        Command::ArborPerm { file, perms } => {
            cmd_arbor_perm(&SystemFile::load(file)?, *perms, ctx, out)
        }
        Command::Game(game) => cmd_game(game, ctx, out),
        Command::ConjectureSearch { file, k, rules, parallel } => {
            cmd_conjecture(&SystemFile::load(file)?, *k, *rules, *parallel, ctx, out)
        }
        Command::Verify { file, replay } => match (file, replay) {
            (_, Some(result)) => cmd_verify_replay(result, ctx, out),
            (Some(file), None) => cmd_verify(&SystemFile::load(file)?, ctx, out),
            (None, None) => Err(Error::Precondition(
                "verify needs a system file or --replay <result.json>".into(),
            )),
        },
    }
}

fn pick_matroid(ms: &[Matroid], index: usize) -> Result<&Matroid, Error> {
    ms.get(index).ok_or_else(|| {
        Error::Precondition(format!("matroid index {index} out of range 0..{}", ms.len()))
    })
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    system: &'a SystemFile,
    result: T,
}

fn emit<W: Write, T: Serialize>(
    out: &mut W,
    ctx: &Ctx,
    command: &str,
    system: &SystemFile,
    result: T,
    prose: &[String],
) -> Result<(), Error> {
    if ctx.json {
        let envelope = Envelope { command, seed: ctx.seed, system, result };
        let text =
            serde_json::to_string_pretty(&envelope).map_err(|e| Error::Json(e.to_string()))?;
        writeln!(out, "{text}").map_err(|e| Error::Io(e.to_string()))?;
    } else {
        for line in prose {
            writeln!(out, "{line}").map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct CertificateDto {
    witness: Vec<usize>,
    slot_ranks: Vec<usize>,
    deficiency: usize,
}

impl CertificateDto {
    fn from(cert: &crate::partition::DeficiencyCertificate) -> CertificateDto {
        CertificateDto {
            witness: cert.witness.elements(),
            slot_ranks: cert.slot_ranks.clone(),
            deficiency: cert.deficiency,
        }
    }

    fn prose(&self) -> String {
        format!(
            "certificate: X = {:?} with slot ranks {:?}; sum {} < |X| = {}",
            self.witness,
            self.slot_ranks,
            self.slot_ranks.iter().sum::<usize>(),
            self.witness.len()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RankResult {
    matroid: usize,
    subset: Vec<usize>,
    rank: usize,
}

fn cmd_rank<W: Write>(
    file: &SystemFile,
    index: usize,
    subset: Option<&[usize]>,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    let m = pick_matroid(&ms, index)?;
    let s = match subset {
        Some(ids) => file.ground_set().try_subset_of(ids)?,
        None => m.admissible(),
    };
    let rank = m.rank(s)?;
    let result = RankResult { matroid: index, subset: s.elements(), rank };
    emit(out, ctx, "rank", file, &result, &[format!("rank of {s}: {rank}")])?;
    Ok(0)
}

#[derive(Serialize, Deserialize)]
struct ChromaticResult {
    matroid: usize,
    chromatic_number: usize,
    /// Lexicographically least subset maximizing `⌈|A| / r(A)⌉`, present
    /// whenever the exhaustive formula ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

fn cmd_chromatic<W: Write>(
    file: &SystemFile,
    index: usize,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    let m = pick_matroid(&ms, index)?;
    let chi = chromatic_number(m)?;
    let witness = if m.admissible().len() <= CHROMATIC_FORMULA_MAX {
        let (formula, witness) = chromatic_number_formula_bf(m)?;
        if formula != chi {
            return Err(Error::Precondition(format!(
                "internal inconsistency: partition route gives {chi}, formula gives {formula}"
            )));
        }
        Some(witness.elements())
    } else {
        None
    };
    let mut prose = vec![format!("chromatic number: {chi}")];
    if let Some(w) = &witness {
        prose.push(format!("argmax subset: {:?}", w));
    }
    let result = ChromaticResult { matroid: index, chromatic_number: chi, witness };
    emit(out, ctx, "chromatic", file, &result, &prose)?;
    Ok(0)
}

#[derive(Serialize, Deserialize)]
struct PartitionResult {
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateDto>,
}

fn cmd_partition<W: Write>(file: &SystemFile, ctx: &Ctx, out: &mut W) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    if ms.is_empty() {
        return Err(Error::Precondition("the system file has no matroids".into()));
    }
    let target = partition_target(&ms);
    match partition_ground_set(&ms, target)? {
        PartitionOutcome::Partitioned(parts) => {
            let mut prose = vec![format!("partition of {target} found:")];
            for (i, p) in parts.iter().enumerate() {
                prose.push(format!("  part {} ({}): {p}", i + 1, file.name_of(i)));
            }
            let result = PartitionResult {
                feasible: true,
                parts: Some(parts.iter().map(|p| p.elements()).collect()),
                certificate: None,
            };
            emit(out, ctx, "partition", file, &result, &prose)?;
            Ok(0)
        }
        PartitionOutcome::Deficient(cert) => {
            let dto = CertificateDto::from(&cert);
            let prose = vec!["no partition exists".to_string(), dto.prose()];
            let result =
                PartitionResult { feasible: false, parts: None, certificate: Some(dto) };
            emit(out, ctx, "partition", file, &result, &prose)?;
            Ok(1)
        }
    }
}

/// Elements coverable by at least one slot: the union of admissible sets.
fn partition_target(ms: &[Matroid]) -> Subset {
    let mut target = ms[0].ground().empty();
    for m in ms {
        target = target.union(m.admissible());
    }
    target
}

#[derive(Serialize, Deserialize)]
struct CheckKResult {
    matroid: usize,
    k: usize,
    colorable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<BTreeMap<usize, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateDto>,
}

fn cmd_check_k<W: Write>(
    file: &SystemFile,
    k: usize,
    index: usize,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    let m = pick_matroid(&ms, index)?;
    match is_k_colorable(m, k)? {
        KColorability::Colorable(coloring) => {
            let result = CheckKResult {
                matroid: index,
                k,
                colorable: true,
                coloring: Some(coloring.to_map()),
                certificate: None,
            };
            emit(out, ctx, "check-k", file, &result, &[format!("{k}-colorable: yes")])?;
            Ok(0)
        }
        KColorability::NotColorable(cert) => {
            let dto = CertificateDto::from(&cert);
            let prose = vec![format!("{k}-colorable: no"), dto.prose()];
            let result = CheckKResult {
                matroid: index,
                k,
                colorable: false,
                coloring: None,
                certificate: Some(dto),
            };
            emit(out, ctx, "check-k", file, &result, &prose)?;
            Ok(1)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringResult {
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<BTreeMap<usize, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<usize>>>,
    /// Per-class independence verdicts from fresh oracle calls.
    #[serde(skip_serializing_if = "Option::is_none")]
    class_independent: Option<Vec<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateDto>,
}

impl ColoringResult {
    fn feasible(coloring: &Coloring, ms: &[Matroid]) -> ColoringResult {
        let classes: Vec<Subset> = (1..=ms.len()).map(|i| coloring.class(i)).collect();
        let verdicts = ms
            .iter()
            .zip(&classes)
            .map(|(m, c)| {
                c.is_subset_of(m.admissible()) && m.is_independent(*c).unwrap_or(false)
            })
            .collect();
        ColoringResult {
            feasible: true,
            coloring: Some(coloring.to_map()),
            classes: Some(classes.iter().map(|c| c.elements()).collect()),
            class_independent: Some(verdicts),
            certificate: None,
        }
    }
}

fn cmd_coop_color<W: Write>(
    file: &SystemFile,
    with_lists: bool,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    let command = if with_lists { "list-color" } else { "coop-color" };
    let attempt = if with_lists {
        let lists = file.list_assignment()?;
        coop_list_color(&ms, &lists)
    } else {
        cooperative_color(&ms)
    };
    match attempt {
        Ok(coloring) => {
            let result = ColoringResult::feasible(&coloring, &ms);
            let mut prose = vec![format!(
                "coloring: {}",
                coloring
                    .to_map()
                    .iter()
                    .map(|(e, c)| format!("{e}→{c}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            )];
            for (i, class) in result.classes.as_ref().expect("feasible").iter().enumerate() {
                prose.push(format!("  class {} ({}): {:?}", i + 1, file.name_of(i), class));
            }
            emit(out, ctx, command, file, &result, &prose)?;
            Ok(0)
        }
        Err(Error::Infeasible(cert)) => {
            let dto = CertificateDto::from(&cert);
            let prose = vec!["no cooperative coloring exists".to_string(), dto.prose()];
            let result = ColoringResult {
                feasible: false,
                coloring: None,
                classes: None,
                class_independent: None,
                certificate: Some(dto),
            };
            emit(out, ctx, command, file, &result, &prose)?;
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

#[derive(Serialize, Deserialize)]
struct ArborPermResult {
    permutations: Vec<Vec<usize>>,
    forests: Vec<Vec<usize>>,
    /// `forest_checks[0]` is for `F_1`; entry `i ≥ 1` checks the image
    /// `π_i(F_{i+1})`.
    forest_checks: Vec<bool>,
}

fn graphic_parts(file: &SystemFile) -> Result<(usize, Vec<(usize, usize)>), Error> {
    match file.matroids.first() {
        Some(MatroidSpec::Graphic { vertices, edges }) => Ok((*vertices, edges.clone())),
        _ => Err(Error::Precondition(
            "arbor-perm needs a graphic matroid as the first entry of the file".into(),
        )),
    }
}

fn cmd_arbor_perm<W: Write>(
    file: &SystemFile,
    random_count: Option<usize>,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let (vertices, edges) = graphic_parts(file)?;
    let perms: Vec<Permutation> = match (random_count, &file.permutations) {
        (Some(count), _) => {
            let mut rng = ctx.rng();
            (0..count).map(|_| Permutation::random(edges.len(), &mut rng)).collect()
        }
        (None, Some(maps)) => maps
            .iter()
            .map(|m| Permutation::new(m.clone()))
            .collect::<Result<Vec<_>, _>>()?,
        (None, None) => {
            return Err(Error::Precondition(
                "arbor-perm needs permutations in the file or --perms N".into(),
            ))
        }
    };
    match forest_permutation_decomposition(vertices, &edges, &perms) {
        Ok(classes) => {
            let checks = forest_checks(vertices, &edges, &perms, &classes);
            let mut prose = Vec::new();
            for (i, class) in classes.iter().enumerate() {
                let label = if i == 0 {
                    "forest F_1".to_string()
                } else {
                    format!("class F_{} (π_{} image is a forest)", i + 1, i)
                };
                prose.push(format!("{label}: {class}"));
            }
            let result = ArborPermResult {
                permutations: perms.iter().map(|p| p.as_slice().to_vec()).collect(),
                forests: classes.iter().map(|c| c.elements()).collect(),
                forest_checks: checks,
            };
            emit(out, ctx, "arbor-perm", file, &result, &prose)?;
            Ok(0)
        }
        Err(Error::ArboricityTooHigh(cert)) => {
            let dto = CertificateDto::from(&cert);
            let prose =
                vec!["arboricity exceeds the number of classes".to_string(), dto.prose()];
            emit(out, ctx, "arbor-perm", file, json!({ "feasible": false, "certificate": dto }), &prose)?;
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

fn forest_checks(
    vertices: usize,
    edges: &[(usize, usize)],
    perms: &[Permutation],
    classes: &[Subset],
) -> Vec<bool> {
    classes
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let image = if i == 0 { *class } else { perms[i - 1].image(*class) };
            is_forest(vertices, edges, image.iter())
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct GameResult {
    game: String,
    winner: Player,
    explored: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first: Option<Player>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rules: Option<PaintingRules>,
    /// `(state, move)` transcript of the solved strategy, sorted by state.
    strategy: Vec<serde_json::Value>,
}

fn cmd_game<W: Write>(cmd: &GameCommand, ctx: &Ctx, out: &mut W) -> Result<i32, Error> {
    match cmd {
        GameCommand::Indicated { file } => {
            let file = SystemFile::load(file)?;
            let ms = file.build_matroids()?;
            let game = IndicatedGame::new(&ms)?;
            let outcome = solve(&game);
            let result = GameResult {
                game: "indicated".into(),
                winner: outcome.winner,
                explored: outcome.explored,
                first: None,
                k: None,
                rules: None,
                strategy: indicated_strategy_json(&outcome, file.ground),
            };
            finish_game(&file, "game-indicated", result, ctx, out)
        }
        GameCommand::Marking { file, first } => {
            let file = SystemFile::load(file)?;
            let ms = file.build_matroids()?;
            let first = first.or(file.first).unwrap_or(Player::Ann);
            let game = MarkingGame::new(&ms, first)?;
            let outcome = solve(&game);
            let result = GameResult {
                game: "marking".into(),
                winner: outcome.winner,
                explored: outcome.explored,
                first: Some(first),
                k: None,
                rules: None,
                strategy: marking_strategy_json(&outcome, file.ground),
            };
            finish_game(&file, "game-marking", result, ctx, out)
        }
        GameCommand::Painting { file, k, rules } => {
            let file = SystemFile::load(file)?;
            let ms = file.build_matroids()?;
            let k = k.or(file.k).unwrap_or(ms.len());
            let rules = rules.or(file.rules).unwrap_or_default();
            let game = PaintingGame::new(&ms, k, rules)?;
            let outcome = solve(&game);
            let result = GameResult {
                game: "painting".into(),
                winner: outcome.winner,
                explored: outcome.explored,
                first: None,
                k: Some(k),
                rules: Some(rules),
                strategy: painting_strategy_json(&outcome, file.ground),
            };
            finish_game(&file, "game-painting", result, ctx, out)
        }
    }
}

fn finish_game<W: Write>(
    file: &SystemFile,
    command: &str,
    result: GameResult,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let prose = vec![format!(
        "winner: {} (explored {} states)",
        result.winner, result.explored
    )];
    let code = if result.winner == Player::Ann { 0 } else { 1 };
    emit(out, ctx, command, file, &result, &prose)?;
    Ok(code)
}

fn indicated_strategy_json(
    outcome: &GameOutcome<crate::games::IndicatedState, IndicatedMove>,
    n: usize,
) -> Vec<serde_json::Value> {
    outcome
        .strategy
        .iter()
        .map(|(state, mv)| {
            let mv = match mv {
                IndicatedMove::Point(e) => json!({ "point": e }),
                IndicatedMove::Assign(c) => json!({ "assign": c }),
            };
            json!({
                "colors": state.colors.to_vec(n),
                "pointed": state.pointed,
                "move": mv,
            })
        })
        .collect()
}

fn marking_strategy_json(
    outcome: &GameOutcome<crate::games::MarkingState, MarkingMove>,
    n: usize,
) -> Vec<serde_json::Value> {
    outcome
        .strategy
        .iter()
        .map(|(state, mv)| {
            json!({
                "colors": state.colors.to_vec(n),
                "to_move": state.to_move,
                "move": { "element": mv.element, "color": mv.color },
            })
        })
        .collect()
}

fn painting_strategy_json(
    outcome: &GameOutcome<crate::games::PaintingState, PaintingMove>,
    n: usize,
) -> Vec<serde_json::Value> {
    let bits_to_ids =
        |bits: u64| -> Vec<usize> { (0..n).filter(|e| bits >> e & 1 == 1).collect() };
    outcome
        .strategy
        .iter()
        .map(|(state, mv)| {
            let mv = match mv {
                PaintingMove::Offer(b) => json!({ "offer": bits_to_ids(*b) }),
                PaintingMove::Paint(a) => json!({ "paint": bits_to_ids(*a) }),
            };
            json!({
                "colored": bits_to_ids(state.colored),
                "marks": (0..n).map(|e| state.mark_of(e)).collect::<Vec<_>>(),
                "round": state.round,
                "offer": state.offer.map(bits_to_ids),
                "move": mv,
            })
        })
        .collect()
}

fn cmd_conjecture<W: Write>(
    file: &SystemFile,
    k: Option<usize>,
    rules: Option<PaintingRules>,
    parallel: usize,
    ctx: &Ctx,
    out: &mut W,
) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    let k = k.or(file.k).ok_or_else(|| {
        Error::Precondition("conjecture-search needs --k or a k field in the file".into())
    })?;
    let rules = rules.or(file.rules).unwrap_or_default();
    let pool = ms
        .into_iter()
        .enumerate()
        .map(|(i, m)| (file.name_of(i), m))
        .collect();
    let catalog = ConjectureCatalog { pool, system_size: k, rules };
    let report = conjecture_search_parallel(&catalog, parallel.max(1))?;
    if ctx.json {
        for inst in &report.instances {
            let names: Vec<String> = inst.members.iter().map(|&p| file.name_of(p)).collect();
            let mut value =
                serde_json::to_value(inst).map_err(|e| Error::Json(e.to_string()))?;
            value["members"] = json!(names);
            let line = serde_json::to_string(&value).map_err(|e| Error::Json(e.to_string()))?;
            writeln!(out, "{line}").map_err(|e| Error::Io(e.to_string()))?;
        }
        let summary = json!({
            "summary": {
                "instances": report.instances.len(),
                "solved": report.solved,
                "ann_wins": report.ann_wins,
                "ben_wins": report.ben_wins,
                "base_case_ben_wins": report.base_case_ben_wins,
                "filtered": report.filtered,
                "skipped": report.skipped,
            }
        });
        let line = serde_json::to_string(&summary).map_err(|e| Error::Json(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Error::Io(e.to_string()))?;
    } else {
        writeln!(
            out,
            "instances: {} (solved {}, ann {}, ben {}, filtered {}, skipped {})",
            report.instances.len(),
            report.solved,
            report.ann_wins,
            report.ben_wins.len(),
            report.filtered,
            report.skipped
        )
        .map_err(|e| Error::Io(e.to_string()))?;
        for &ix in &report.ben_wins {
            let inst = &report.instances[ix];
            let names: Vec<String> = inst.members.iter().map(|&p| file.name_of(p)).collect();
            writeln!(out, "ben wins instance {ix}: {names:?}")
                .map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(if report.ben_wins.is_empty() { 0 } else { 1 })
}

#[derive(Serialize, Deserialize)]
struct CheckDto {
    name: String,
    ok: bool,
    detail: String,
}

#[derive(Serialize, Deserialize)]
struct VerifyResult {
    ok: bool,
    checks: Vec<CheckDto>,
}

fn push_check(checks: &mut Vec<CheckDto>, name: String, ok: bool, detail: impl Into<String>) {
    checks.push(CheckDto { name, ok, detail: detail.into() });
}

/// Ground-size ceilings for the `verify` suite; the library guards sit
/// higher, but an interactive check should answer in seconds.
const VERIFY_AXIOMS_MAX: usize = 10;
const VERIFY_FORMULA_MAX: usize = 14;
const VERIFY_EXHAUSTIVE_MAX: usize = 12;

/// The axiom and oracle-equivalence suite over one system file.
fn cmd_verify<W: Write>(file: &SystemFile, ctx: &Ctx, out: &mut W) -> Result<i32, Error> {
    let ms = file.build_matroids()?;
    let mut checks = Vec::new();
    let skipped = "skipped: ground exceeds the suite bound";

    for (i, m) in ms.iter().enumerate() {
        let name = format!("axioms[{}]", file.name_of(i));
        if m.ground().len() <= VERIFY_AXIOMS_MAX {
            match m.verify_axioms()? {
                None => push_check(&mut checks, name, true, "all axioms hold"),
                Some(v) => push_check(&mut checks, name, false, v.to_string()),
            }
        } else {
            push_check(&mut checks, name, true, skipped);
        }
    }

    for (i, m) in ms.iter().enumerate() {
        let name = format!("chromatic-equivalence[{}]", file.name_of(i));
        if m.admissible().len() <= VERIFY_FORMULA_MAX {
            let chi = chromatic_number(m)?;
            let (formula, _) = chromatic_number_formula_bf(m)?;
            push_check(
                &mut checks,
                name,
                chi == formula,
                format!("partitioning gives {chi}, formula gives {formula}"),
            );
        } else {
            push_check(&mut checks, name, true, skipped);
        }
    }

    for (i, m) in ms.iter().enumerate() {
        let name = format!("rank-vs-exhaustive[{}]", file.name_of(i));
        if m.admissible().len() <= VERIFY_EXHAUSTIVE_MAX {
            let greedy = m.full_rank()?;
            let brute = exhaustive::max_independent_subset_size(m, m.admissible())?;
            push_check(&mut checks, name, greedy == brute, format!("greedy {greedy}, exhaustive {brute}"));
        } else {
            push_check(&mut checks, name, true, skipped);
        }
    }

    for (i, m) in ms.iter().enumerate() {
        if m.admissible().len() > VERIFY_EXHAUSTIVE_MAX {
            push_check(&mut checks, format!("k-colorability[{}]", file.name_of(i)), true, skipped);
            continue;
        }
        for k in 1..=3usize {
            let name = format!("k-colorability[{}][k={k}]", file.name_of(i));
            let verdict = matches!(is_k_colorable(m, k)?, KColorability::Colorable(_));
            let mut criterion = true;
            for x in m.admissible().subsets() {
                if m.rank(x)? * k < x.len() {
                    criterion = false;
                    break;
                }
            }
            push_check(
                &mut checks,
                name,
                verdict == criterion,
                format!("partition says {verdict}, subset criterion says {criterion}"),
            );
        }
    }

    if !ms.is_empty() {
        if file.ground <= VERIFY_EXHAUSTIVE_MAX {
            use rand::Rng;
            let mut rng = ctx.rng();
            let ground = file.ground_set();
            let mut subsets = vec![partition_target(&ms)];
            for _ in 0..20 {
                subsets.push(Subset::from_bits(ground, rng.random::<u64>() & ground.full().bits()));
            }
            let mut ok = true;
            let mut detail = String::from("all sampled subsets agree");
            for a in subsets {
                let a = a.intersect(partition_target(&ms));
                let fast = union_rank(&ms, a)?;
                let (slow, _) = union_rank_formula_bf(&ms, a)?;
                if fast != slow {
                    ok = false;
                    detail =
                        format!("augmenting gives {fast} but the formula gives {slow} on {a}");
                    break;
                }
            }
            push_check(&mut checks, "union-rank-equivalence".into(), ok, detail);
        } else {
            push_check(&mut checks, "union-rank-equivalence".into(), true, skipped);
        }
    }

    let ok = checks.iter().all(|c| c.ok);
    let prose: Vec<String> = checks
        .iter()
        .map(|c| format!("{} {} — {}", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail))
        .chain([format!("verify: {}", if ok { "all checks passed" } else { "FAILURES" })])
        .collect();
    emit(out, ctx, "verify", file, VerifyResult { ok, checks }, &prose)?;
    Ok(if ok { 0 } else { 1 })
}

/// Re-parses an emitted JSON envelope and re-verifies its claims through
/// fresh oracle calls.
fn cmd_verify_replay<W: Write>(path: &Path, _ctx: &Ctx, out: &mut W) -> Result<i32, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    let command = value
        .get("command")
        .and_then(|c| c.as_str())
        .ok_or_else(|| Error::Json("result envelope has no command field".into()))?
        .to_string();
    let system: SystemFile = serde_json::from_value(
        value.get("system").cloned().ok_or_else(|| Error::Json("no system field".into()))?,
    )
    .map_err(|e| Error::Json(e.to_string()))?;
    system.validate()?;
    let seed = value.get("seed").and_then(|s| s.as_u64());
    let result = value.get("result").cloned().ok_or_else(|| Error::Json("no result field".into()))?;

    let ms = system.build_matroids()?;
    let mut checks = Vec::new();
    match command.as_str() {
        "rank" => {
            let dto: RankResult = from_value(result)?;
            let m = pick_matroid(&ms, dto.matroid)?;
            let s = system.ground_set().try_subset_of(&dto.subset)?;
            let fresh = m.rank(s)?;
            push_check(
                &mut checks,
                "rank-recomputed".into(),
                fresh == dto.rank,
                format!("claimed {}, fresh {fresh}", dto.rank),
            );
        }
        "chromatic" => {
            let dto: ChromaticResult = from_value(result)?;
            let m = pick_matroid(&ms, dto.matroid)?;
            let fresh = chromatic_number(m)?;
            push_check(
                &mut checks,
                "chromatic-recomputed".into(),
                fresh == dto.chromatic_number,
                format!("claimed {}, fresh {fresh}", dto.chromatic_number),
            );
            if let Some(w) = &dto.witness {
                let w = system.ground_set().try_subset_of(w)?;
                let r = m.rank(w)?;
                let ok = !w.is_empty() && w.len().div_ceil(r.max(1)) == dto.chromatic_number;
                push_check(
                    &mut checks,
                    "chromatic-witness-ratio".into(),
                    ok,
                    format!("⌈{}/{r}⌉ against χ = {}", w.len(), dto.chromatic_number),
                );
            }
        }
        "partition" => {
            let dto: PartitionResult = from_value(result)?;
            verify_partition_claim(&system, &ms, &dto, &mut checks)?;
        }
        "check-k" => {
            let dto: CheckKResult = from_value(result)?;
            let m = pick_matroid(&ms, dto.matroid)?;
            if dto.colorable {
                let coloring =
                    coloring_from_map(&system, dto.k, dto.coloring.as_ref(), &mut checks);
                if let Some(c) = coloring {
                    let copies = vec![m.clone(); dto.k];
                    check_classes(&c, &copies, m.admissible(), &mut checks);
                }
            } else if let Some(cert) = &dto.certificate {
                let x = system.ground_set().try_subset_of(&cert.witness)?;
                let r = m.rank(x.intersect(m.admissible()))?;
                push_check(
                    &mut checks,
                    "certificate-inequality".into(),
                    r * dto.k < x.len(),
                    format!("r(X)·k = {} against |X| = {}", r * dto.k, x.len()),
                );
            } else {
                push_check(&mut checks, "certificate-present".into(), false, "missing certificate");
            }
        }
        "coop-color" | "list-color" => {
            let dto: ColoringResult = from_value(result)?;
            if dto.feasible {
                let coloring =
                    coloring_from_map(&system, ms.len(), dto.coloring.as_ref(), &mut checks);
                if let Some(c) = coloring {
                    check_classes(&c, &ms, crate::coloring::common_usable(&ms), &mut checks);
                    if command == "list-color" {
                        let lists = system.list_assignment()?;
                        push_check(
                            &mut checks,
                            "lists-respected".into(),
                            c.respects_lists(&lists),
                            "every color comes from its list",
                        );
                    }
                }
            } else if let Some(cert) = &dto.certificate {
                verify_certificate_against_lists(&system, &ms, cert, &command, &mut checks)?;
            } else {
                push_check(&mut checks, "certificate-present".into(), false, "missing certificate");
            }
        }
        "arbor-perm" => {
            let dto: ArborPermResult = from_value(result)?;
            let (vertices, edges) = graphic_parts(&system)?;
            let perms: Vec<Permutation> = dto
                .permutations
                .iter()
                .map(|m| Permutation::new(m.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let classes: Vec<Subset> = dto
                .forests
                .iter()
                .map(|ids| system.ground_set().try_subset_of(ids))
                .collect::<Result<Vec<_>, _>>()?;
            let mut union = system.ground_set().empty();
            let mut disjoint = true;
            for c in &classes {
                disjoint &= union.intersect(*c).is_empty();
                union = union.union(*c);
            }
            push_check(
                &mut checks,
                "classes-partition-edges".into(),
                disjoint && union == system.ground_set().full(),
                "classes are disjoint and cover every edge",
            );
            let fresh = forest_checks(vertices, &edges, &perms, &classes);
            push_check(
                &mut checks,
                "forest-images".into(),
                fresh.iter().all(|&b| b),
                format!("fresh union-find verdicts {fresh:?}"),
            );
        }
        "game-indicated" | "game-marking" | "game-painting" => {
            let dto: GameResult = from_value(result)?;
            verify_game_claim(&system, &ms, &command, &dto, seed, &mut checks)?;
        }
        other => {
            return Err(Error::Precondition(format!(
                "replay does not support '{other}' results"
            )))
        }
    }

    let ok = checks.iter().all(|c| c.ok);
    for c in &checks {
        writeln!(out, "{} {} — {}", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail)
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    writeln!(out, "replay: {}", if ok { "verified" } else { "FAILURES" })
        .map_err(|e| Error::Io(e.to_string()))?;
    Ok(if ok { 0 } else { 1 })
}

fn from_value<T: for<'de> Deserialize<'de>>(value: serde_json::Value) -> Result<T, Error> {
    serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))
}

fn coloring_from_map(
    system: &SystemFile,
    palette: usize,
    map: Option<&BTreeMap<usize, usize>>,
    checks: &mut Vec<CheckDto>,
) -> Option<Coloring> {
    match map {
        Some(map) => {
            let mut c = Coloring::new(system.ground_set(), palette);
            for (&e, &color) in map {
                if e >= system.ground || color == 0 || color > palette {
                    push_check(
                        checks,
                        "coloring-well-formed".into(),
                        false,
                        format!("entry {e}→{color} is out of range"),
                    );
                    return None;
                }
                c.set(e, color);
            }
            Some(c)
        }
        None => {
            push_check(checks, "coloring-present".into(), false, "missing coloring");
            None
        }
    }
}

fn check_classes(
    coloring: &Coloring,
    ms: &[Matroid],
    expected_domain: Subset,
    checks: &mut Vec<CheckDto>,
) {
    push_check(
        checks,
        "coloring-total".into(),
        coloring.domain() == expected_domain,
        format!("colored {} of {}", coloring.domain(), expected_domain),
    );
    push_check(
        checks,
        "classes-independent".into(),
        coloring.classes_independent(ms),
        "every class independent under fresh oracle calls",
    );
}

fn verify_partition_claim(
    system: &SystemFile,
    ms: &[Matroid],
    dto: &PartitionResult,
    checks: &mut Vec<CheckDto>,
) -> Result<(), Error> {
    if dto.feasible {
        let Some(parts) = &dto.parts else {
            push_check(checks, "parts-present".into(), false, "missing parts");
            return Ok(());
        };
        let parts: Vec<Subset> = parts
            .iter()
            .map(|ids| system.ground_set().try_subset_of(ids))
            .collect::<Result<Vec<_>, _>>()?;
        let mut union = system.ground_set().empty();
        let mut disjoint = true;
        let mut independent = true;
        for (m, p) in ms.iter().zip(&parts) {
            disjoint &= union.intersect(*p).is_empty();
            union = union.union(*p);
            independent &=
                p.is_subset_of(m.admissible()) && m.is_independent(*p).unwrap_or(false);
        }
        push_check(
            checks,
            "parts-partition-target".into(),
            disjoint && union == partition_target(ms),
            "parts are disjoint and cover the target",
        );
        push_check(checks, "parts-independent".into(), independent, "fresh oracle calls");
    } else if let Some(cert) = &dto.certificate {
        let x = system.ground_set().try_subset_of(&cert.witness)?;
        let mut total = 0usize;
        for m in ms {
            total += m.rank(x.intersect(m.admissible()))?;
        }
        push_check(
            checks,
            "certificate-inequality".into(),
            total < x.len(),
            format!("Σ ranks = {total} against |X| = {}", x.len()),
        );
    } else {
        push_check(checks, "certificate-present".into(), false, "missing certificate");
    }
    Ok(())
}

fn verify_certificate_against_lists(
    system: &SystemFile,
    ms: &[Matroid],
    cert: &CertificateDto,
    command: &str,
    checks: &mut Vec<CheckDto>,
) -> Result<(), Error> {
    // rebuild the per-color slots the solver used and re-check the inequality
    let lists = if command == "list-color" {
        system.list_assignment()?
    } else {
        ListAssignment::full(system.ground_set(), ms.len())
    };
    let slots: Vec<Matroid> = ms
        .iter()
        .enumerate()
        .map(|(i, n)| n.restrict(lists.elements_allowing(i + 1)))
        .collect();
    let x = system.ground_set().try_subset_of(&cert.witness)?;
    let mut total = 0usize;
    for m in &slots {
        total += m.rank(x.intersect(m.admissible()))?;
    }
    push_check(
        checks,
        "certificate-inequality".into(),
        total < x.len(),
        format!("Σ ranks = {total} against |X| = {}", x.len()),
    );
    Ok(())
}

fn verify_game_claim(
    system: &SystemFile,
    ms: &[Matroid],
    command: &str,
    dto: &GameResult,
    seed: Option<u64>,
    checks: &mut Vec<CheckDto>,
) -> Result<(), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
    let (winner, explored, playouts_ok) = match command {
        "game-indicated" => {
            let game = IndicatedGame::new(ms)?;
            let outcome = solve(&game);
            let ok = (0..REPLAY_PLAYOUTS).all(|_| replay(&game, &outcome, &mut rng) == outcome.winner);
            (outcome.winner, outcome.explored, ok)
        }
        "game-marking" => {
            let first = dto.first.unwrap_or(Player::Ann);
            let game = MarkingGame::new(ms, first)?;
            let outcome = solve(&game);
            let ok = (0..REPLAY_PLAYOUTS).all(|_| replay(&game, &outcome, &mut rng) == outcome.winner);
            (outcome.winner, outcome.explored, ok)
        }
        "game-painting" => {
            let k = dto.k.unwrap_or(ms.len());
            let rules = dto.rules.unwrap_or_default();
            let game = PaintingGame::new(ms, k, rules)?;
            let outcome = solve(&game);
            let ok = (0..REPLAY_PLAYOUTS).all(|_| replay(&game, &outcome, &mut rng) == outcome.winner);
            (outcome.winner, outcome.explored, ok)
        }
        _ => unreachable!("caller matched the game commands"),
    };
    push_check(
        checks,
        "winner-re-solved".into(),
        winner == dto.winner,
        format!("claimed {}, fresh solve gives {winner}", dto.winner),
    );
    push_check(
        checks,
        "explored-count".into(),
        explored == dto.explored,
        format!("claimed {}, fresh solve explored {explored}", dto.explored),
    );
    push_check(
        checks,
        "strategy-playouts".into(),
        playouts_ok,
        format!("{REPLAY_PLAYOUTS} seeded playouts reach the declared winner"),
    );
    let _ = system;
    Ok(())
}
