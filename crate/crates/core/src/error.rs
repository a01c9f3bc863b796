use thiserror::Error;

/// Errors raised while building or querying algebraic objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication is not associative on generators ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unity is not a two-sided identity on generator {0}")]
    BadUnity(usize),
    #[error("orders are inconsistent: {0}")]
    OrderMismatch(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown catalog `{0}`")]
    UnknownCatalog(String),
    #[error("size guard exceeded: {what} has size {size}, limit {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        size: u64,
        limit: u64,
    },
    #[error("not a submodule of the given module")]
    NotASubmodule,
    #[error("modules are defined over different rings")]
    RingMismatch,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("ADS methods disagree: {0}")]
    Disagreement(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size limits for the enumerative procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest module on which element-level operations run.
    pub elements: usize,
    /// Largest module whose full submodule lattice is enumerated.
    pub lattice: usize,
    /// Largest finite group (hom sets, extension cosets) enumerated element by element.
    pub enumeration: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            elements: 4096,
            lattice: 64,
            enumeration: 1 << 20,
        }
    }
}

impl Guards {
    pub fn check_elements(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.elements {
            return Err(Error::SizeGuardExceeded {
                what,
                size: size as u64,
                limit: self.elements as u64,
            });
        }
        Ok(())
    }

    pub fn check_lattice(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.lattice {
            return Err(Error::SizeGuardExceeded {
                what,
                size: size as u64,
                limit: self.lattice as u64,
            });
        }
        Ok(())
    }

    pub fn check_enumeration(&self, what: &'static str, size: u64) -> Result<()> {
        if size > self.enumeration {
            return Err(Error::SizeGuardExceeded {
                what,
                size,
                limit: self.enumeration,
            });
        }
        Ok(())
    }
}
