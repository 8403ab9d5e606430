use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix does not induce a homomorphism: {0}")]
    IllDefinedHom(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("size guard exceeded: {what} has size {size}, limit {limit}")]
    SizeExceeded { what: String, size: u64, limit: u64 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("cochain is not normalized: {0}")]
    NotNormalized(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("twisting datum is not biadditive: {0}")]
    InvalidTwisting(String),
    #[error("invalid crossed-module morphism: {0}")]
    InvalidMorphism(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("extensions live over different data: {0}")]
    BaseMismatch(String),
    #[error("unknown property suite: {0}")]
    UnknownSuite(String),
    #[error("boundary map is not injective")]
    NotMono,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn size_guard(what: &str, size: u64, limit: u64) -> Result<()> {
    if size > limit {
        Err(Error::SizeExceeded {
            what: what.to_string(),
            size,
            limit,
        })
    } else {
        Ok(())
    }
}
