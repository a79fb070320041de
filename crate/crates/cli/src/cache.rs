//! On-disk catalog cache keyed by order, method and library version.

use std::fs;
use std::path::{Path, PathBuf};

use bracekit::enumeration::{enumerate_braces, BraceCatalog, Method};

pub const CACHE_ENV: &str = "BRACEKIT_CACHE";

/// `$BRACEKIT_CACHE`, else the platform cache directory.
pub fn cache_root() -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::cache_dir().map(|d| d.join("bracekit")),
    }
}

pub fn entry_path(root: &Path, n: usize, method: Method) -> PathBuf {
    root.join(format!("v{}", env!("CARGO_PKG_VERSION")))
        .join(format!("order-{n}-{method}.json"))
}

fn load(path: &Path, n: usize, method: Method) -> Option<BraceCatalog> {
    let text = fs::read_to_string(path).ok()?;
    let catalog: BraceCatalog = serde_json::from_str(&text).ok()?;
    (catalog.order == n && catalog.method == method).then_some(catalog)
}

/// Loads the catalog from the cache or enumerates and stores it. Unreadable
/// cache entries are recomputed; failures to write are ignored.
pub fn catalog(n: usize, method: Method, use_cache: bool) -> bracekit::Result<BraceCatalog> {
    let path = if use_cache {
        cache_root().map(|r| entry_path(&r, n, method))
    } else {
        None
    };
    if let Some(c) = path.as_deref().and_then(|p| load(p, n, method)) {
        return Ok(c);
    }
    let catalog = enumerate_braces(n, method)?;
    if let Some(p) = path {
        // a cache that cannot be written only costs a recomputation
        let _ = p.parent().map_or(Ok(()), fs::create_dir_all).and_then(|_| {
            fs::write(
                &p,
                serde_json::to_vec(&catalog).expect("catalog serializes"),
            )
        });
    }
    Ok(catalog)
}
