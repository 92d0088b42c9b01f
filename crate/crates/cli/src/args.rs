//! Command grammar, shared by the command line and JSON job documents.
//!
//! A job document holds the same fields as the flags, with the subcommand
//! under `"command"` (and `"action"` for `slice`, `fan` and `fixtures`):
//!
//! ```json
//! {"command": "parabolic", "type": "A", "rank": 4, "levi": [1, 4], "format": "json"}
//! ```

use std::path::PathBuf;

use chamberwalk_core::rootsys::DEFAULT_ORDER_CAP;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

fn default_cap() -> usize {
    DEFAULT_ORDER_CAP
}

fn default_tag() -> String {
    "default".to_owned()
}

#[derive(Debug, Parser)]
#[command(
    name = "chamberwalk",
    version,
    about = "Exact chambers, movable cones and parabolic diagrams"
)]
pub struct Cli {
    /// Read the whole job from a JSON document instead of the command line.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

/// A complete job, as read from a config document.
#[derive(Debug, Clone, Deserialize)]
pub struct JobConfig {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub format: Option<Format>,
    #[serde(default)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Dot,
    Svg,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Svg => "svg",
        }
    }
}

#[derive(Debug, Clone, Subcommand, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Positive roots, Gram matrix and Cartan matrix.
    Roots(TypeArgs),
    /// Weyl group order and generators.
    Weyl(WeylArgs),
    /// Chambers and walls of an arrangement.
    Chambers(ChambersArgs),
    /// Movable cone, its chambers and the tiling by group translates.
    Mov(MovArgs),
    /// Flops between the chambers of the movable cone.
    Flops(MovArgs),
    /// Parabolic diagrams with a fixed Levi part.
    Parabolic(ParabolicArgs),
    /// The A_{n-1} surface family.
    #[command(subcommand)]
    Slice(SliceCommand),
    /// Fans given by cones.
    #[command(subcommand)]
    Fan(FanCommand),
    /// Built-in input documents.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Roots(_) => "roots",
            Command::Weyl(_) => "weyl",
            Command::Chambers(_) => "chambers",
            Command::Mov(_) => "mov",
            Command::Flops(_) => "flops",
            Command::Parabolic(_) => "parabolic",
            Command::Slice(s) => match s {
                SliceCommand::Disc(_) => "slice disc",
                SliceCommand::Types(_) => "slice types",
                SliceCommand::Rays(_) => "slice rays",
                SliceCommand::Alpha(_) => "slice alpha",
                SliceCommand::H2(_) => "slice h2",
            },
            Command::Fan(_) => "fan check",
            Command::Fixtures(FixturesCommand::List) => "fixtures list",
            Command::Fixtures(FixturesCommand::Emit(_)) => "fixtures emit",
        }
    }

    /// Formats this command can produce.
    pub fn formats(&self) -> &'static [Format] {
        match self {
            Command::Chambers(_) | Command::Mov(_) | Command::Flops(_) | Command::Parabolic(_) => {
                &[Format::Json, Format::Dot, Format::Svg]
            }
            Command::Fan(_) => &[Format::Json, Format::Svg],
            _ => &[Format::Json],
        }
    }
}

/// A Cartan type given as letter and rank.
#[derive(Debug, Clone, Args, Deserialize)]
pub struct TypeArgs {
    /// Cartan type letter, A to G.
    #[arg(long = "type")]
    #[serde(rename = "type")]
    pub letter: String,
    /// Rank of the root system.
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct WeylArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ty: TypeArgs,
    /// Refuse to enumerate groups larger than this.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    #[serde(default = "default_cap")]
    pub cap: usize,
    /// List every element, not only the generators.
    #[arg(long)]
    #[serde(default)]
    pub elements: bool,
}

/// Exactly one of: a Cartan type (its reflection arrangement), a fixture
/// name, or an arrangement document.
#[derive(Debug, Clone, Default, Args, Deserialize)]
pub struct SourceArgs {
    /// Root-system arrangement of this Cartan type letter (with `--rank`).
    #[arg(long = "type")]
    #[serde(default, rename = "type")]
    pub letter: Option<String>,
    /// Rank of the root system given by `--type`.
    #[arg(long)]
    #[serde(default)]
    pub rank: Option<usize>,
    /// Built-in arrangement document (see `fixtures list`).
    #[arg(long)]
    #[serde(default)]
    pub fixture: Option<String>,
    /// Arrangement document to read.
    #[arg(long)]
    #[serde(default)]
    pub file: Option<PathBuf>,
    /// Refuse to enumerate groups larger than this.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    #[serde(default = "default_cap")]
    pub cap: usize,
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct ChambersArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    /// Also report where this point lies, e.g. `1,-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub locate: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderArg {
    #[default]
    Ascending,
    Descending,
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct MovArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    /// Order in which walls are tried while growing the movable cone.
    #[arg(long, value_enum, default_value = "ascending")]
    #[serde(default)]
    pub order: OrderArg,
    /// Ample class overriding the source's, e.g. `1,1`.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(default)]
    pub ample: Option<String>,
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct ParabolicArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ty: TypeArgs,
    /// White (Levi) vertices, one-based Bourbaki labels, e.g. `1,4`.
    #[arg(long, value_delimiter = ',')]
    #[serde(default)]
    pub levi: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    #[serde(default = "default_cap")]
    pub cap: usize,
}

#[derive(Debug, Clone, Subcommand, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum SliceCommand {
    /// Discriminant and singular points of one fiber.
    Disc(PointArgs),
    /// Types of the singular points of one fiber.
    Types(PointArgs),
    /// Rays of the ample chamber.
    Rays(SizeArgs),
    /// The map α and its Gram matrix.
    Alpha(SizeArgs),
    /// Cartan type carrying the chamber structure of a Slodowy slice.
    H2(H2Args),
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct PointArgs {
    /// Coordinates summing to zero, e.g. `1,1,-2`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct SizeArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct H2Args {
    #[command(flatten)]
    #[serde(flatten)]
    pub ty: TypeArgs,
    /// default, subregular, c-pair-equal, c-pair-split-<i> or g2-8dim.
    #[arg(long, default_value = "default")]
    #[serde(default = "default_tag")]
    pub tag: String,
}

#[derive(Debug, Clone, Subcommand, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum FanCommand {
    /// Decide whether a fan is cut out by the hyperplanes of its walls.
    Check(FanSource),
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct FanSource {
    #[arg(long)]
    #[serde(default)]
    pub fixture: Option<String>,
    #[arg(long)]
    #[serde(default)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum FixturesCommand {
    /// Names and descriptions of the built-in documents.
    List,
    /// Print one built-in document.
    Emit(EmitArgs),
}

#[derive(Debug, Clone, Args, Deserialize)]
pub struct EmitArgs {
    pub name: String,
}
