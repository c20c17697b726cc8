use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cutseq", version, about = "Signed continued fractions and coded geodesics on the modular surfaces")]
pub struct Cli {
    /// Output format; `render` defaults to svg, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub output: Option<Output>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    GammaOdd,
    Theta,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a surd in one of the five continued-fraction systems.
    Expand {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value_t = cutseq_cf::DEFAULT_MAX_DEPTH)]
        depth: usize,
    },
    /// Exact value of a digit stream.
    Evaluate(StreamArgs),
    /// Rewrite a regular expansion as odd, even or grotesque.
    Convert {
        #[arg(long, default_value = "rcf")]
        from: String,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        stream: StreamArgs,
        /// Expand this surd first instead of reading a stream.
        #[arg(long, allow_hyphen_values = true)]
        value: Option<String>,
    },
    /// Cutting sequence of a geodesic, split into returns to the section.
    Code {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long, allow_hyphen_values = true)]
        forward: String,
        #[arg(long, allow_hyphen_values = true)]
        backward: String,
        #[arg(long, default_value_t = 4)]
        segments: usize,
    },
    /// Read digits back from a cutting sequence.
    Parse {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value = "forward")]
        direction: DirectionArg,
        /// Sign of the forward endpoint at the base point.
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<i8>,
    },
    /// Move a geodesic into the section by an element of the group.
    Lift {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long, allow_hyphen_values = true)]
        forward: String,
        #[arg(long, allow_hyphen_values = true)]
        backward: String,
        #[arg(long, default_value_t = cutseq_geodesic::DEFAULT_LIFT_DEPTH)]
        depth: usize,
    },
    /// Length of the closed geodesic with a given period.
    Length {
        #[arg(long)]
        kind: String,
        /// Digits as `[[a,eps],...]`.
        #[arg(long)]
        period: String,
    },
    /// Decide equivalence of two surds under the odd group or Theta.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_enum, default_value = "gamma-odd")]
        group: GroupArg,
        /// Tail depth searched; defaults to preperiod + 2 periods + 1.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Purely-periodic test by the conjugate window and by expansion.
    Periodic {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// Measure of a region, and its invariance under a map.
    MeasureCheck {
        #[arg(long)]
        measure: Option<String>,
        #[arg(long)]
        map: Option<String>,
        /// `[a,b]` or `[a,b]x[c,d]`.
        #[arg(long, allow_hyphen_values = true)]
        region: String,
        #[arg(long)]
        normalized: bool,
        #[arg(long, default_value_t = cutseq_dynamics::DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Time average of an interval indicator along an orbit.
    Birkhoff {
        #[arg(long, default_value = "t_o")]
        map: String,
        #[arg(long, default_value = "[0,1/2]", allow_hyphen_values = true)]
        interval: String,
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
        /// Seeds a 100-digit starting point.
        #[arg(long)]
        seed: u64,
    },
    /// Static SVG of the checkered Farey tessellation and a geodesic.
    Render {
        #[arg(long, value_enum, default_value = "odd")]
        case: CaseArg,
        #[arg(long, allow_hyphen_values = true, requires = "backward")]
        forward: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "forward")]
        backward: Option<String>,
        /// `xmin,xmax,ymax`.
        #[arg(long, default_value = "-1.5,1.5,1.6", allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Letters labelled along the geodesic.
        #[arg(long, default_value_t = 12)]
        letters: usize,
    },
    /// Membership of a matrix in the odd group and Theta, or the cusp class of a point.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Read JSON requests from standard input, one per line.
    Batch,
}

/// A digit stream, either as JSON or by parts.
#[derive(Args, Debug, Clone, Default)]
pub struct StreamArgs {
    /// `{"kind": ..., "leading": ..., "preperiod": [...], "period": [...]}`.
    #[arg(long)]
    pub stream: Option<String>,
    #[arg(long)]
    pub kind: Option<String>,
    /// `[a,eps]`.
    #[arg(long, allow_hyphen_values = true)]
    pub leading: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub preperiod: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub period: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<i8>,
}
