use clap::{Parser, Subcommand, ValueEnum};
use pbnf::{Family, OperatorId, Style};

#[derive(Debug, Parser)]
#[command(name = "pbnf", version, about = "Propositional formulas as polynomials over GF(2)")]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Glyphs used for formulas.
    #[arg(long, global = true, env = "PBNF_STYLE", default_value = "unicode", value_parser = parse_style)]
    pub style: Style,

    /// normal, complement, pullback or pullback-complement.
    #[arg(long, global = true, value_parser = parse_family)]
    pub family: Option<Family>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a formula to its canonical polynomial.
    Transform {
        #[arg(allow_hyphen_values = true)]
        formula: String,
        /// Show each substitution step.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether a formula is a tautology.
    Prove {
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Decide whether two formulas are equivalent.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Find the assignments under which two formulas agree.
    Solve {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Name the connective behind a polynomial.
    Fiber { polynomial: String },
    /// Print one of the reference tables.
    Table {
        #[arg(value_enum, default_value_t = TableKind::Families)]
        kind: TableKind,
    },
    /// Close a set of connectives and report what it generates.
    Basis {
        #[command(flatten)]
        basis: BasisArgs,
        /// A formula over p and q to synthesize from the basis.
        #[arg(long)]
        target: Option<String>,
    },
    /// Rewrite a formula over p and q using only the given connectives.
    Synth {
        #[arg(allow_hyphen_values = true)]
        formula: String,
        #[command(flatten)]
        basis: BasisArgs,
    },
    /// The singular (unary) operators.
    #[command(subcommand)]
    Singular(SingularCommand),
    /// Truth vectors as 2x2 matrices.
    #[command(subcommand)]
    Matrix(MatrixCommand),
}

#[derive(Debug, Clone, clap::Args)]
pub struct BasisArgs {
    /// Comma-separated connectives, by name or glyph: `nand`, `imp,neg`, `&,!`.
    #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_op)]
    pub ops: Vec<OperatorId>,
    /// Seed the closure with 0 and 1 as well as p and q.
    #[arg(long)]
    pub constants: bool,
    /// Largest formula depth tried when synthesizing.
    #[arg(long, default_value_t = 6)]
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// The sixteen connectives and negation in each family.
    Families,
    /// Composition of the singular operators.
    Klein,
    /// Coordinatewise sums of operator values.
    Values,
}

#[derive(Debug, Subcommand)]
pub enum SingularCommand {
    /// Apply `=`, `-`, `!` or `+` to a formula.
    Apply {
        #[arg(value_parser = parse_singular)]
        operator: pbnf::UnaryOp,
        #[arg(allow_hyphen_values = true)]
        formula: String,
    },
    /// Compare the additive rule with the printed singular-on-binary table.
    Tables,
    /// Search for square roots of negation.
    Demi,
}

#[derive(Debug, Subcommand)]
pub enum MatrixCommand {
    /// The matrix of a binary connective and of its transpose.
    Op {
        #[arg(value_parser = parse_op)]
        operator: OperatorId,
    },
    /// Multiply two polynomial matrices given as `a,b,c,d`, rows first.
    Mul { left: String, right: String },
}

fn parse_style(s: &str) -> Result<Style, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: pbnf::families::UnknownFamily| e.to_string())
}

fn parse_op(s: &str) -> Result<OperatorId, String> {
    OperatorId::lookup(s).ok_or_else(|| format!("unknown connective {s:?}"))
}

fn parse_singular(s: &str) -> Result<pbnf::UnaryOp, String> {
    match OperatorId::lookup(s) {
        Some(OperatorId::Unary(u)) => Ok(u),
        _ => Err(format!("{s:?} is not a singular operator (expected =, -, ! or +)")),
    }
}
