//! Error type shared by every module of the crate.

use thiserror::Error;

/// Axiom families checked by [`crate::hypergroup::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Involution,
    Unit,
    UnitCoefficient,
    AntiAutomorphism,
    Associativity,
}

impl std::fmt::Display for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Law::Involution => "involution",
            Law::Unit => "unit",
            Law::UnitCoefficient => "unit coefficient",
            Law::AntiAutomorphism => "involution anti-automorphism",
            Law::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

/// Coarse classification used by the command line to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Axiom,
    Numeric,
    Usage,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{law} law violated at {indices:?}")]
    AxiomViolation { law: Law, indices: Vec<usize> },
    #[error("invalid rescale: {0}")]
    InvalidRescale(String),
    #[error("character does not normalize: vanishes on basis element {index}")]
    NotNormalizable { index: usize },
    #[error("data is not abelian: N[{i}][{j}] != N[{j}][{i}]")]
    NotAbelian { i: usize, j: usize },
    #[error("eigenvalues collided in all {attempts} attempts")]
    DegenerateSpectrum { attempts: usize },
    #[error("character {character} fails the homomorphism check (residual {residual:e})")]
    HomomorphismCheckFailed { character: usize, residual: f64 },
    #[error("no strictly positive character column")]
    NoPositiveColumn,
    #[error("more than one strictly positive character column")]
    MultiplePositiveColumns,
    #[error("orthogonality residual {residual:e} exceeds tolerance")]
    OrthogonalityResidualExceeded { residual: f64 },
    #[error("operation needs an exact tensor")]
    InexactTensor,
    #[error("dual tensor fails the hypergroup axioms: {0}")]
    DualAxiomViolation(Box<Error>),
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("no basis permutation identifies the double dual")]
    NoIsomorphismFound,
    #[error("exact and numeric vanishing tests disagree on basis element {index}")]
    ExactNumericDisagreement { index: usize },
    #[error("sign computations disagree on index {index}")]
    SignMismatch { index: usize },
    #[error("identity {name}: residual {residual:e} contradicts the verdict")]
    VerdictResidualMismatch { name: String, residual: f64 },
    #[error("closure violated: {0}")]
    ClosureViolation(String),
    #[error("support mismatch: {0}")]
    SupportMismatch(String),
    #[error("idempotent residual {residual:e} exceeds tolerance")]
    IdempotentResidual { residual: f64 },
    #[error("grading cross-check failed: {0}")]
    GradingCrossCheckFailed(String),
    #[error("biperp does not return the sub-hypergroup")]
    BiperpMismatch,
    #[error("quotient structure constant is inconsistent within class {class}")]
    ClassInconsistency { class: usize },
    #[error("commutator sandwich violated")]
    SandwichViolation,
    #[error("upper and lower central series disagree at step {step}")]
    SeriesDisagreement { step: usize },
    #[error("element is not in the positive cone")]
    NotPositive,
    #[error("no Galois partition passes the certificates")]
    NoValidPartition,
    #[error("codegree conjugation violated on orbit {orbit}")]
    ConjugationViolation { orbit: usize },
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("ring is not weakly integral")]
    NotWeaklyIntegral,
    #[error("ring is not of near-group shape")]
    NotNearGroup,
    #[error("test not applicable: {0}")]
    NotApplicable(String),
    #[error("group closure exceeds {bound} elements")]
    OrderBoundExceeded { bound: usize },
    #[error("entry {value} does not snap to an integer")]
    SnapFailure { value: f64 },
    #[error("invalid group orders: {0}")]
    InvalidOrders(String),
    #[error("parse error at line {line}, column {col}: {reason}")]
    Parse { line: usize, col: usize, reason: String },
    #[error("search budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
}

impl Error {
    pub fn category(&self) -> Category {
        use Error::*;
        match self {
            DimensionMismatch { .. } | AxiomViolation { .. } | DualAxiomViolation(_) | NotAbelian { .. } => {
                Category::Axiom
            }
            InvalidRescale(_) | InexactTensor | NotApplicable(_) | OrderBoundExceeded { .. } | InvalidOrders(_)
            | Parse { .. } | BudgetExceeded { .. } | NotNearGroup | NotWeaklyIntegral | NotPositive
            | NotNormalizable { .. } => Category::Usage,
            _ => Category::Numeric,
        }
    }

    /// Name of the module that raises this error, used when rendering diagnostics.
    pub fn module(&self) -> &'static str {
        use Error::*;
        match self {
            DimensionMismatch { .. } | AxiomViolation { .. } | InvalidRescale(_) | NotNormalizable { .. } => "core",
            NotAbelian { .. } | DegenerateSpectrum { .. } | HomomorphismCheckFailed { .. } | NoPositiveColumn
            | MultiplePositiveColumns | OrthogonalityResidualExceeded { .. } | InexactTensor => "spectra",
            DualAxiomViolation(_) | CrossCheckFailed(_) | NoIsomorphismFound => "dual",
            ExactNumericDisagreement { .. } | SignMismatch { .. } | VerdictResidualMismatch { .. } => "burnside",
            ClosureViolation(_) | SupportMismatch(_) | IdempotentResidual { .. } | GradingCrossCheckFailed(_)
            | BiperpMismatch | ClassInconsistency { .. } | SandwichViolation | SeriesDisagreement { .. }
            | NotPositive => "structure",
            NoValidPartition | ConjugationViolation { .. } | TheoremViolation(_) => "galois",
            NotWeaklyIntegral | NotNearGroup | NotApplicable(_) => "criteria",
            OrderBoundExceeded { .. } | SnapFailure { .. } | InvalidOrders(_) | Parse { .. } | BudgetExceeded { .. } => {
                "builders"
            }
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
