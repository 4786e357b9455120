//! Download-once cache for remote zero tables.
//!
//! Layout under the cache directory:
//!
//! ```text
//! <sha256(url)>.txt    response body, byte for byte
//! <sha256(url)>.json   {"url": ..., "fetched_at": <unix seconds>, "byte_length": ...}
//! .lock                held exclusively while an entry is written
//! ```
//!
//! An entry counts as present only when the sidecar exists and its
//! `byte_length` matches the body file, so a reader never observes a
//! half-written entry.

use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

const BODY_LIMIT: u64 = 256 << 20;
const TIMEOUT: Duration = Duration::from_secs(120);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheMetadata {
    pub url: String,
    pub fetched_at: u64,
    pub byte_length: u64,
}

#[derive(Debug, Clone)]
pub struct FetchOutcome {
    pub bytes: Vec<u8>,
    pub from_cache: bool,
    pub body_path: PathBuf,
    pub metadata: CacheMetadata,
}

/// Cache key for `url`.
pub fn url_digest(url: &str) -> String {
    hex::encode(Sha256::digest(url.as_bytes()))
}

pub fn cache_paths(url: &str, cache_dir: &Path) -> (PathBuf, PathBuf) {
    let key = url_digest(url);
    (
        cache_dir.join(format!("{key}.txt")),
        cache_dir.join(format!("{key}.json")),
    )
}

/// Returns the cached body when present, fetching and caching it otherwise.
pub fn fetch_remote(url: &str, cache_dir: &Path) -> Result<FetchOutcome> {
    let (body_path, meta_path) = cache_paths(url, cache_dir);
    if let Some(hit) = read_cached(&body_path, &meta_path)? {
        return Ok(hit);
    }

    let bytes = download(url)?;

    fs::create_dir_all(cache_dir).map_err(|source| Error::CacheWrite {
        path: cache_dir.to_path_buf(),
        source,
    })?;
    let lock_path = cache_dir.join(".lock");
    let lock = OpenOptions::new()
        .create(true)
        .truncate(false)
        .write(true)
        .open(&lock_path)
        .map_err(|source| Error::CacheWrite {
            path: lock_path.clone(),
            source,
        })?;
    lock.lock().map_err(|source| Error::CacheWrite {
        path: lock_path.clone(),
        source,
    })?;

    // another writer may have finished while we were downloading
    if let Some(hit) = read_cached(&body_path, &meta_path)? {
        return Ok(hit);
    }

    let metadata = CacheMetadata {
        url: url.to_string(),
        fetched_at: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        byte_length: bytes.len() as u64,
    };
    write_atomic(&body_path, &bytes)?;
    let meta_json = serde_json::to_vec_pretty(&metadata).expect("metadata serializes");
    write_atomic(&meta_path, &meta_json)?;
    drop(lock);

    Ok(FetchOutcome {
        bytes,
        from_cache: false,
        body_path,
        metadata,
    })
}

fn read_cached(body_path: &Path, meta_path: &Path) -> Result<Option<FetchOutcome>> {
    let meta_bytes = match fs::read(meta_path) {
        Ok(b) => b,
        Err(e) if is_missing(&e) => return Ok(None),
        Err(source) => {
            return Err(Error::CacheRead {
                path: meta_path.to_path_buf(),
                source,
            })
        }
    };
    let Ok(metadata) = serde_json::from_slice::<CacheMetadata>(&meta_bytes) else {
        return Ok(None);
    };
    let bytes = match fs::read(body_path) {
        Ok(b) => b,
        Err(e) if is_missing(&e) => return Ok(None),
        Err(source) => {
            return Err(Error::CacheRead {
                path: body_path.to_path_buf(),
                source,
            })
        }
    };
    if bytes.len() as u64 != metadata.byte_length {
        return Ok(None);
    }
    Ok(Some(FetchOutcome {
        bytes,
        from_cache: true,
        body_path: body_path.to_path_buf(),
        metadata,
    }))
}

fn is_missing(e: &std::io::Error) -> bool {
    matches!(
        e.kind(),
        std::io::ErrorKind::NotFound | std::io::ErrorKind::NotADirectory
    )
}

fn download(url: &str) -> Result<Vec<u8>> {
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(TIMEOUT))
        .build()
        .into();
    let mut response = agent.get(url).call().map_err(|e| match e {
        ureq::Error::StatusCode(status) => Error::HttpStatus {
            url: url.to_string(),
            status,
        },
        other => Error::Network {
            url: url.to_string(),
            message: other.to_string(),
        },
    })?;
    response
        .body_mut()
        .with_config()
        .limit(BODY_LIMIT)
        .read_to_vec()
        .map_err(|e| Error::Network {
            url: url.to_string(),
            message: e.to_string(),
        })
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let wrap = |source| Error::CacheWrite {
        path: path.to_path_buf(),
        source,
    };
    let mut f = File::create(&tmp).map_err(wrap)?;
    f.write_all(bytes).map_err(wrap)?;
    f.sync_all().map_err(wrap)?;
    fs::rename(&tmp, path).map_err(wrap)
}
