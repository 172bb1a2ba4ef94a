use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter b = {re}{im:+}i is a pole of the series denominators")]
    PoleParameter { re: f64, im: f64 },

    #[error("argument {re}{im:+}i is a pole of the Gamma function")]
    PoleArgument { re: f64, im: f64 },

    #[error("series did not converge within {max_terms} terms")]
    NoConvergence { max_terms: usize },

    #[error("invalid series controls: {0}")]
    InvalidControls(&'static str),

    #[error("oscillator degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: u32, max: u32 },

    #[error("singular point at x = {x}")]
    SingularPoint { x: f64 },

    #[error("family index {0} is not one of 1, 2, 3")]
    BadFamily(u8),

    #[error("function is not normalizable on the grid: {0}")]
    NotNormalizable(&'static str),

    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),

    #[error("invalid transform parameters: {0}")]
    InvalidParams(&'static str),

    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("every grid point was excluded as singular")]
    AllPointsExcluded,

    #[error("finite-difference stencil around x = {x} hit a singular point")]
    EvaluationFailed { x: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
