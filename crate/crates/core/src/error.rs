use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series is not a unit: |c0| = {0:e} is below the unit tolerance")]
    NotAUnit(f64),
    #[error("division by the zero Laurent series")]
    DivisionByZeroSeries,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("invalid interval [{a}, {b}]: need a < b and a <= 0 <= b")]
    InvalidInterval { a: f64, b: f64 },
    #[error("point {x} lies outside [{a}, {b}]")]
    OutOfDomain { x: f64, a: f64, b: f64 },
    #[error("operands live on different intervals")]
    IntervalMismatch,
    #[error("adaptive interpolation reached degree {0} without convergence")]
    NoConvergence(usize),
    #[error("Laurent series has negative valuation {0}; not a power series")]
    NegativeValuation(i64),
    #[error("operator polynomial is constant; the homogeneous solution space is {{0}}")]
    DegreeZero,
    #[error("initial value system is singular")]
    SingularSystem,
    #[error("generalized function is not a continuous function at this tolerance")]
    NotMaterializable,
    #[error("leading coefficient of the operator is zero")]
    ZeroLeadingCoefficient,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("expression error: {0}")]
    Expression(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag, used in the CLI's JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotAUnit(_) => "NotAUnit",
            Error::DivisionByZeroSeries => "DivisionByZeroSeries",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::InvalidInterval { .. } => "InvalidInterval",
            Error::OutOfDomain { .. } => "OutOfDomain",
            Error::IntervalMismatch => "IntervalMismatch",
            Error::NoConvergence(_) => "NoConvergence",
            Error::NegativeValuation(_) => "NegativeValuation",
            Error::DegreeZero => "DegreeZero",
            Error::SingularSystem => "SingularSystem",
            Error::NotMaterializable => "NotMaterializable",
            Error::ZeroLeadingCoefficient => "ZeroLeadingCoefficient",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Schema { .. } => "SchemaError",
            Error::Expression(_) => "ExpressionError",
            Error::Io(_) => "IoError",
        }
    }

    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
