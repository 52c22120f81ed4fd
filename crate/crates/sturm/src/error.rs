use thiserror::Error;

pub type Result<T> = std::result::Result<T, SturmError>;

#[derive(Error, Debug)]
pub enum SturmError {
    #[error("automaton engine: {0}")]
    Engine(#[from] buchi::BuchiError),

    #[error("exact arithmetic: {0}")]
    Exact(#[from] exact::ExactError),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("adder asset line {line}: {msg}")]
    Asset { line: usize, msg: String },

    #[error("adder verification failed: {0}")]
    AdderGate(String),

    #[error("formula error: {0}")]
    Formula(String),
}

impl SturmError {
    pub fn invalid(msg: impl Into<String>) -> SturmError {
        SturmError::Invalid(msg.into())
    }

    pub fn formula(msg: impl Into<String>) -> SturmError {
        SturmError::Formula(msg.into())
    }
}
