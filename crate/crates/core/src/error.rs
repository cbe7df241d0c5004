use thiserror::Error;

/// Domain errors raised by the engine. Usage errors are handled by the CLI layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("signature error: {0}")]
    Signature(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown colour `{0}`")]
    UnknownColour(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("colour `{0}` carries no Frobenius structure")]
    NoFrobenius(String),
    #[error("colour clash while merging nodes {0} and {1}")]
    ColourClash(usize, usize),
    #[error("malformed graph: {0}")]
    Graph(String),
    #[error("fibre of node {node} has {size} elements (limit {limit})")]
    FibreTooLarge { node: usize, size: usize, limit: usize },
    #[error("graph is cyclic")]
    Cyclic,
    #[error("interface contains a node of colour `{0}`")]
    InterfaceColour(String),
    #[error("rule `{0}` is not in the image of the polychromatic interpretation")]
    NotChromeImage(String),
    #[error("model error: {0}")]
    Model(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Short machine-readable tag used in structured diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Signature(_) => "signature",
            Error::Syntax { .. } => "syntax",
            Error::UnknownGenerator(_) => "unknown-generator",
            Error::UnknownColour(_) => "unknown-colour",
            Error::TypeMismatch(_) => "type-mismatch",
            Error::NoFrobenius(_) => "no-frobenius",
            Error::ColourClash(..) => "colour-clash",
            Error::Graph(_) => "graph",
            Error::FibreTooLarge { .. } => "fibre-too-large",
            Error::Cyclic => "cyclic",
            Error::InterfaceColour(_) => "interface-colour",
            Error::NotChromeImage(_) => "not-chrome-image",
            Error::Model(_) => "model",
            Error::TooLarge(_) => "too-large",
            Error::Io(_) => "io",
            Error::Format(_) => "format",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
