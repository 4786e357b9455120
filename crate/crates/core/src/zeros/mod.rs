//! Zero tables: ingestion, validation, remote caching, synthetic multisets
//! and truncation bounds.

mod catalog;
mod fetch;
mod synthetic;
mod tail;
mod validate;

pub use catalog::{
    load_catalog, rho_of, ZeroCatalog, ZeroOrdinate, BUNDLED_SOURCE_DIGITS, BUNDLED_ZEROS_100,
    MIN_SOURCE_DIGITS,
};
pub use fetch::{cache_paths, fetch_remote, url_digest, CacheMetadata, FetchOutcome};
pub use synthetic::{close_under_symmetry, SyntheticZeroSet};
pub use tail::{tail_bound, MIN_TAIL_T};
pub use validate::{
    default_checkpoints, expected_count, validate, Checkpoint, ValidationReport,
    MAX_COUNT_DEVIATION,
};

/// What a zero sum runs over.
#[derive(Debug, Clone, Copy)]
pub enum ZeroSource<'a> {
    /// Critical-line ordinates; sums run over conjugate pairs.
    Catalog(&'a ZeroCatalog),
    /// An explicit multiset; sums run over its elements.
    Synthetic(&'a SyntheticZeroSet),
}

impl<'a> From<&'a ZeroCatalog> for ZeroSource<'a> {
    fn from(c: &'a ZeroCatalog) -> Self {
        ZeroSource::Catalog(c)
    }
}

impl<'a> From<&'a SyntheticZeroSet> for ZeroSource<'a> {
    fn from(s: &'a SyntheticZeroSet) -> Self {
        ZeroSource::Synthetic(s)
    }
}
