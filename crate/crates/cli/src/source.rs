use licoef::numerics::{Complex, PrecisionContext};
use licoef::zeros::{
    close_under_symmetry, fetch_remote, load_catalog, SyntheticZeroSet, ZeroCatalog, ZeroSource,
};

use crate::config::{RunConfig, ZerosSel};
use crate::error::{CliError, CliResult};

pub enum Loaded {
    Catalog(ZeroCatalog),
    Synthetic(SyntheticZeroSet),
}

impl Loaded {
    pub fn source(&self) -> ZeroSource<'_> {
        match self {
            Loaded::Catalog(c) => ZeroSource::Catalog(c),
            Loaded::Synthetic(s) => ZeroSource::Synthetic(s),
        }
    }

    /// Largest ordinate as written in the table.
    pub fn max_gamma_literal(&self) -> Option<String> {
        match self {
            Loaded::Catalog(c) => c.ordinates().last().map(|g| g.literal().to_string()),
            Loaded::Synthetic(_) => None,
        }
    }
}

/// The zero source selected by `cfg`.
pub fn load(cfg: &RunConfig, ctx: &PrecisionContext) -> CliResult<Loaded> {
    match &cfg.synthetic {
        Some(list) => Ok(Loaded::Synthetic(parse_synthetic(list, ctx)?)),
        None => Ok(Loaded::Catalog(load_table(&cfg.zeros, cfg)?)),
    }
}

pub fn load_table(sel: &ZerosSel, cfg: &RunConfig) -> CliResult<ZeroCatalog> {
    match sel {
        ZerosSel::Bundled => Ok(ZeroCatalog::bundled()),
        ZerosSel::Path(path) => {
            let bytes = std::fs::read(path).map_err(|e| {
                CliError::Data(format!("cannot read zero table {}: {e}", path.display()))
            })?;
            Ok(load_catalog(&bytes, cfg.source_digits)?.with_source(&path.display().to_string()))
        }
        ZerosSel::Url(url) => {
            let fetched = fetch_remote(url, &cfg.cache_dir)?;
            Ok(load_catalog(&fetched.bytes, cfg.source_digits)?.with_source(url))
        }
    }
}

/// Parses `"2, 0.5+3i"` and closes it under `rho -> 1 - rho` and
/// conjugation, so every method applies and every coefficient is real.
pub fn parse_synthetic(list: &str, ctx: &PrecisionContext) -> CliResult<SyntheticZeroSet> {
    let rhos = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            Complex::parse(s, ctx).map_err(|_| {
                CliError::Usage(format!("invalid complex literal {s:?} in --synthetic"))
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    if rhos.is_empty() {
        return Err(CliError::Usage(
            "--synthetic needs at least one element".to_string(),
        ));
    }
    Ok(close_under_symmetry(&rhos, true)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_is_closed() {
        let ctx = PrecisionContext::default();
        let set = parse_synthetic("2", &ctx).unwrap();
        assert_eq!(set.len(), 2);
        let set = parse_synthetic(" 2+1i , 0.5+3i", &ctx).unwrap();
        assert_eq!(set.len(), 6);
        assert!(set.is_symmetric() && set.is_conjugate_closed());
    }

    #[test]
    fn synthetic_errors_are_usage() {
        let ctx = PrecisionContext::default();
        assert!(matches!(
            parse_synthetic("2,x", &ctx),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            parse_synthetic(" , ", &ctx),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            parse_synthetic("1", &ctx),
            Err(CliError::Usage(_))
        ));
    }
}
