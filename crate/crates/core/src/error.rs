use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wedge of grades {0} and {1} exceeds the top degree 4")]
    GradeOverflow(usize, usize),
    #[error("operation needs a form of grade {expected}, got {found}")]
    WrongGrade { expected: &'static str, found: usize },
    #[error("coefficients are not homogeneous of a common degree: {0}")]
    NotHomogeneous(String),
    #[error("Euler relation fails: sum A_i x_i = {0}")]
    EulerViolation(String),
    #[error("coefficients share the nonconstant factor {0}")]
    DivisorialSingularity(String),
    #[error("singular locus has projective dimension {0}, expected at most 1")]
    WrongCodimension(i64),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("vector field is a multiple of the radial field")]
    RadialField,
    #[error("saturation did not stabilise after {0} colon steps")]
    NonTermination(usize),
    #[error("no section of T_F(k-1) found for k <= d+1 = {0}")]
    BoundViolated(i64),
    #[error("inconsistent singular invariants: {0}")]
    InconsistentInvariants(String),
    #[error("split test passed with d = {d} < 2 t_F = {}", 2 * .t_f)]
    NumericContradiction { d: i64, t_f: i64 },
    #[error("formula outside its domain: {0}")]
    DomainError(String),
    #[error("degree-1 field matches no known case: degC = {deg_c}, c2 = {c2}, c3 = {c3}")]
    UnclassifiedDegree1 { deg_c: i64, c2: i64, c3: i64 },
    #[error("weights violate sum lambda_i d_i = 0")]
    WeightRelationViolated,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("prime {0} is unusable for modular recomputation")]
    UnluckyPrime(u64),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid input document: {0}")]
    Input(String),
}

impl Error {
    /// Errors that signal an engine bug or a violated identity rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InconsistentInvariants(_)
                | Error::BoundViolated(_)
                | Error::NonTermination(_)
                | Error::NumericContradiction { .. }
                | Error::UnclassifiedDegree1 { .. }
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::GradeOverflow(..) => "GradeOverflow",
            Error::WrongGrade { .. } => "WrongGrade",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::EulerViolation(_) => "EulerViolation",
            Error::DivisorialSingularity(_) => "DivisorialSingularity",
            Error::WrongCodimension(_) => "WrongCodimension",
            Error::InvalidForm(_) => "InvalidForm",
            Error::RadialField => "RadialField",
            Error::NonTermination(_) => "NonTermination",
            Error::BoundViolated(_) => "BoundViolated",
            Error::InconsistentInvariants(_) => "InconsistentInvariants",
            Error::NumericContradiction { .. } => "NumericContradiction",
            Error::DomainError(_) => "DomainError",
            Error::UnclassifiedDegree1 { .. } => "UnclassifiedDegree1",
            Error::WeightRelationViolated => "WeightRelationViolated",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::UnluckyPrime(_) => "UnluckyPrime",
            Error::Parse(_) => "ParseError",
            Error::Input(_) => "InputError",
        }
    }
}
