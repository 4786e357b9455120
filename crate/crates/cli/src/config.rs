use std::path::{Path, PathBuf};

use serde::Deserialize;

use licoef::li::Method;
use licoef::numerics::{PrecisionContext, DEFAULT_DIGITS};
use licoef::zeros::MIN_SOURCE_DIGITS;

use crate::args::{Format, GlobalOpts};
use crate::error::{CliError, CliResult};

pub const DEFAULT_N_MAX: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodSel {
    All,
    One(Method),
}

impl MethodSel {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodSel::All => Method::ALL.to_vec(),
            MethodSel::One(m) => vec![m],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZerosSel {
    Bundled,
    Path(PathBuf),
    Url(String),
}

impl ZerosSel {
    pub fn parse(s: &str) -> Self {
        if s == "bundled" {
            ZerosSel::Bundled
        } else if s.starts_with("http://") || s.starts_with("https://") {
            ZerosSel::Url(s.to_string())
        } else {
            ZerosSel::Path(PathBuf::from(s))
        }
    }
}

/// Fully resolved options for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub digits: u32,
    pub n_max: u32,
    pub method: MethodSel,
    pub zeros: ZerosSel,
    pub synthetic: Option<String>,
    pub source_digits: u32,
    pub cache_dir: PathBuf,
    pub format: Format,
    pub threads: Option<usize>,
    pub tail_correction: bool,
}

impl RunConfig {
    /// Working precision for the numeric commands.
    pub fn ctx(&self) -> CliResult<PrecisionContext> {
        Ok(PrecisionContext::new(self.digits)?)
    }
}

/// Mirror of [`RunConfig`] as read from a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    digits: Option<u32>,
    n_max: Option<u32>,
    method: Option<String>,
    #[serde(alias = "zeros")]
    zeros_path: Option<String>,
    synthetic: Option<String>,
    source_digits: Option<u32>,
    cache_dir: Option<PathBuf>,
    format: Option<Format>,
    threads: Option<usize>,
    tail_correction: Option<bool>,
}

fn read_file_config(path: &Path) -> CliResult<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))
}

fn parse_method(s: &str) -> CliResult<MethodSel> {
    if s == "all" {
        return Ok(MethodSel::All);
    }
    s.parse::<Method>()
        .map(MethodSel::One)
        .map_err(|e| CliError::Usage(format!("{e}, or all")))
}

fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(dir).join("licoef");
    }
    if let Some(home) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(home).join(".cache").join("licoef");
    }
    PathBuf::from(".licoef-cache")
}

/// Merges flags over the config file over defaults and checks ranges.
pub fn resolve(opts: &GlobalOpts) -> CliResult<RunConfig> {
    let file = match &opts.config {
        Some(p) => read_file_config(p)?,
        None => FileConfig::default(),
    };
    let method = match opts.method.as_ref().or(file.method.as_ref()) {
        Some(s) => parse_method(s)?,
        None => MethodSel::All,
    };
    // a flag for either zero source overrides both entries of the file
    let (zeros, synthetic) = if opts.zeros.is_some() || opts.synthetic.is_some() {
        (opts.zeros.clone(), opts.synthetic.clone())
    } else {
        (file.zeros_path, file.synthetic)
    };
    if zeros.is_some() && synthetic.is_some() {
        return Err(CliError::Usage(
            "zeros and synthetic cannot both be given".to_string(),
        ));
    }
    let cfg = RunConfig {
        digits: opts.digits.or(file.digits).unwrap_or(DEFAULT_DIGITS),
        n_max: opts.n_max.or(file.n_max).unwrap_or(DEFAULT_N_MAX),
        method,
        zeros: zeros.as_deref().map_or(ZerosSel::Bundled, ZerosSel::parse),
        synthetic,
        source_digits: opts
            .source_digits
            .or(file.source_digits)
            .unwrap_or(MIN_SOURCE_DIGITS),
        cache_dir: opts
            .cache_dir
            .clone()
            .or(file.cache_dir)
            .unwrap_or_else(default_cache_dir),
        format: opts.format.or(file.format).unwrap_or(Format::Table),
        threads: opts.threads.or(file.threads),
        tail_correction: opts.tail_correction || file.tail_correction.unwrap_or(false),
    };
    if cfg.n_max < 1 {
        return Err(CliError::Usage("n-max must be at least 1".to_string()));
    }
    if cfg.threads == Some(0) {
        return Err(CliError::Usage("threads must be at least 1".to_string()));
    }
    if cfg.source_digits < MIN_SOURCE_DIGITS {
        return Err(CliError::Usage(format!(
            "source-digits must be at least {MIN_SOURCE_DIGITS}"
        )));
    }
    if cfg.tail_correction {
        return Err(CliError::Usage(
            "tail correction is reserved and not implemented".to_string(),
        ));
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_config(body: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(body.as_bytes()).unwrap();
        f
    }

    #[test]
    fn defaults() {
        let cfg = resolve(&GlobalOpts::default()).unwrap();
        assert_eq!(cfg.digits, 50);
        assert_eq!(cfg.n_max, 100);
        assert_eq!(cfg.method, MethodSel::All);
        assert_eq!(cfg.zeros, ZerosSel::Bundled);
        assert_eq!(cfg.format, Format::Table);
        assert!(!cfg.tail_correction);
    }

    #[test]
    fn flags_win_over_file() {
        let f =
            write_config(r#"{"digits": 30, "n_max": 7, "method": "chebyshev", "format": "csv"}"#);
        let opts = GlobalOpts {
            config: Some(f.path().to_path_buf()),
            digits: Some(20),
            ..GlobalOpts::default()
        };
        let cfg = resolve(&opts).unwrap();
        assert_eq!(cfg.digits, 20);
        assert_eq!(cfg.n_max, 7);
        assert_eq!(cfg.method, MethodSel::One(Method::Chebyshev));
        assert_eq!(cfg.format, Format::Csv);
    }

    #[test]
    fn zero_source_selection() {
        assert_eq!(ZerosSel::parse("bundled"), ZerosSel::Bundled);
        assert_eq!(
            ZerosSel::parse("https://example.org/z.txt"),
            ZerosSel::Url("https://example.org/z.txt".into())
        );
        assert_eq!(ZerosSel::parse("z.txt"), ZerosSel::Path("z.txt".into()));
        let f = write_config(r#"{"zeros_path": "file.txt"}"#);
        let opts = GlobalOpts {
            config: Some(f.path().to_path_buf()),
            synthetic: Some("2".into()),
            ..GlobalOpts::default()
        };
        let cfg = resolve(&opts).unwrap();
        assert_eq!(cfg.zeros, ZerosSel::Bundled);
        assert_eq!(cfg.synthetic.as_deref(), Some("2"));
    }

    #[test]
    fn rejects_bad_settings() {
        let bad = |opts: GlobalOpts| matches!(resolve(&opts), Err(CliError::Usage(_)));
        assert!(bad(GlobalOpts {
            n_max: Some(0),
            ..GlobalOpts::default()
        }));
        assert!(bad(GlobalOpts {
            method: Some("fast".into()),
            ..GlobalOpts::default()
        }));
        assert!(bad(GlobalOpts {
            tail_correction: true,
            ..GlobalOpts::default()
        }));
        assert!(bad(GlobalOpts {
            threads: Some(0),
            ..GlobalOpts::default()
        }));
        let f = write_config(r#"{"digit": 30}"#);
        assert!(bad(GlobalOpts {
            config: Some(f.path().to_path_buf()),
            ..GlobalOpts::default()
        }));
        let f = write_config(r#"{"zeros": "a.txt", "synthetic": "2"}"#);
        assert!(bad(GlobalOpts {
            config: Some(f.path().to_path_buf()),
            ..GlobalOpts::default()
        }));
    }
}
