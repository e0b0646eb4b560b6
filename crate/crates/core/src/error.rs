use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator `{name}` out of range (valid indices 1..={max})")]
    IndexOutOfRange { name: String, max: usize },

    #[error("generator `{name}` belongs to a family that is empty here ({reason})")]
    EmptyFamily { name: String, reason: String },

    #[error("unsupported parameters (k={k}, n={n}, g={g}): {hypothesis}")]
    Regime {
        k: usize,
        n: usize,
        g: usize,
        hypothesis: String,
    },

    #[error("letter `{letter}` is not allowed in {context}")]
    Alphabet { letter: String, context: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("generator `{0}` is not in the presentation")]
    UnknownGenerator(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
