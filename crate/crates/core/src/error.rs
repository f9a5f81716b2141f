use thiserror::Error;

/// Error raised by any core operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("at most 24 atoms are supported, got {0}")]
    TooManyAtoms(usize),
    #[error("a world space needs at least one atom")]
    EmptyAtomList,
    #[error("`{0}` is not a valid atom name")]
    InvalidAtomName(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown atom `{name}` at byte {position}")]
    UnknownAtom { name: String, position: usize },
    #[error("propositions belong to different world spaces")]
    SpaceMismatch,
    #[error("conditioning on an inconceivable proposition")]
    Inconceivable,
    #[error("world index {0} is outside the space")]
    UnknownWorld(u32),
    #[error("split weight outside [0, 1]")]
    WeightOutOfRange,
    #[error("indeterminate form (infinity minus infinity)")]
    IndeterminateForm,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("the propositions are not positively correlated")]
    NotPositivelyCorrelated,
    #[error("the propositions are not negatively correlated")]
    NotNegativelyCorrelated,
    #[error("the probabilities sum to more than one")]
    ProbabilitySumExceedsOne,
    #[error("construction infeasible: required mass exceeds the {cell} cell")]
    Infeasible { cell: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{given} bits is below the required bound of {bound} bits")]
    InsufficientInformation { given: f64, bound: f64 },
    #[error("the antecedent does not have probability zero")]
    NotCounterfactual,
    #[error("ledger contributions must be finite")]
    NonFiniteContribution,
    #[error("invalid scenario config: {0}")]
    ConfigInvalid(String),
    #[error("corrupt rational `{0}`")]
    CorruptRationals(String),
    #[error("invalid circumstance document: {0}")]
    InvalidDocument(String),
}

impl Error {
    /// Stable short name of the error kind, used by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateAtom(_) => "DuplicateAtom",
            Error::TooManyAtoms(_) => "TooManyAtoms",
            Error::EmptyAtomList => "EmptyAtomList",
            Error::InvalidAtomName(_) => "InvalidAtomName",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownAtom { .. } => "UnknownAtom",
            Error::SpaceMismatch => "SpaceMismatch",
            Error::Inconceivable => "Inconceivable",
            Error::UnknownWorld(_) => "UnknownWorld",
            Error::WeightOutOfRange => "WeightOutOfRange",
            Error::IndeterminateForm => "IndeterminateForm",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::NotPositivelyCorrelated => "NotPositivelyCorrelated",
            Error::NotNegativelyCorrelated => "NotNegativelyCorrelated",
            Error::ProbabilitySumExceedsOne => "ProbabilitySumExceedsOne",
            Error::Infeasible { .. } => "Infeasible",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::InsufficientInformation { .. } => "InsufficientInformation",
            Error::NotCounterfactual => "NotCounterfactual",
            Error::NonFiniteContribution => "NonFiniteContribution",
            Error::ConfigInvalid(_) => "ConfigInvalid",
            Error::CorruptRationals(_) => "CorruptRationals",
            Error::InvalidDocument(_) => "InvalidDocument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
