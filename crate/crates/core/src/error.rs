/// Placeholder
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch")]
    DimensionMismatch,
}
