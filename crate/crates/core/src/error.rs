use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("composition is not associative: ({h} . {g}) . {f} != {h} . ({g} . {f})")]
    AssociativityViolation { h: String, g: String, f: String },

    #[error("identity law fails for morphism {morphism}")]
    UnitViolation { morphism: String },

    #[error("source/target mismatch: {detail}")]
    SrcTgtMismatch { detail: String },

    #[error("composition table has no entry for {g} . {f}")]
    MissingComposite { g: String, f: String },

    #[error("enumeration budget exceeded ({what}, limit {limit})")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("not a functor: {detail}")]
    NotAFunctor { detail: String },

    #[error("invariant violated: {detail}")]
    InvariantViolation { detail: String },

    #[error("not a simplicial map: {detail}")]
    NotASimplicialMap { detail: String },

    #[error("malformed presentation: {detail}")]
    MalformedPresentation { detail: String },

    #[error("spine extension property fails in dimension {n} at chain [{}]", chain.join(", "))]
    NotIep { n: usize, chain: Vec<String> },

    #[error("not natural: square at {morphism} fails on element {element}")]
    NotNatural { morphism: String, element: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("presented category may be infinite (no finiteness certificate at length bound {bound})")]
    PossiblyInfinite { bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
