//! On-disk Haar cache.
//!
//! The file is a JSON object with a header (`N`, `degree`, `convention`) and a
//! `values` map from monomial keys such as `"u[1,2]*u[2,1]"` (`"1"` for the
//! unit) to scalars. Files written under a different relation convention are
//! refused, since their values would be silently wrong.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use qhaar_core::{Gen, HaarCache, Monomial};
use serde::{Deserialize, Serialize};

use crate::json::{scalar_from_json, scalar_to_json, ScalarJson};
use crate::FormatError;

/// Identifies the relation and coefficient conventions the values assume.
pub const CONVENTION: &str = "frt-q-standard-v1";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    #[serde(rename = "N")]
    n: usize,
    degree: usize,
    convention: String,
    values: BTreeMap<String, ScalarJson>,
}

pub fn monomial_key(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    let letters: Vec<String> =
        m.letters().iter().map(|g| format!("u[{},{}]", g.row(), g.col())).collect();
    letters.join("*")
}

pub fn monomial_from_key(n: usize, key: &str) -> Result<Monomial, FormatError> {
    if key == "1" {
        return Ok(Monomial::one());
    }
    let bad = || FormatError::Invalid(format!("malformed monomial key {key:?}"));
    let mut letters = Vec::new();
    for part in key.split('*') {
        let inner = part.strip_prefix("u[").and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        letters.push(Gen::new(i, j, n)?);
    }
    Ok(Monomial::normal(letters)?)
}

pub fn cache_to_json(cache: &HaarCache) -> String {
    let file = CacheFile {
        n: cache.n(),
        degree: cache.solved_degree(),
        convention: CONVENTION.into(),
        values: cache.values().iter().map(|(m, v)| (monomial_key(m), scalar_to_json(v))).collect(),
    };
    serde_json::to_string_pretty(&file).expect("cache serializes")
}

/// Parses a cache file for matrix size `n`.
pub fn cache_from_json(text: &str, n: usize) -> Result<HaarCache, FormatError> {
    // Check the convention before anything else so a foreign file gets the
    // specific error even if the rest of its layout differs.
    let raw: serde_json::Value = serde_json::from_str(text)?;
    match raw.get("convention").and_then(|c| c.as_str()) {
        Some(CONVENTION) => {}
        other => {
            return Err(FormatError::Convention(other.unwrap_or("<missing>").to_string()));
        }
    }
    let file: CacheFile = serde_json::from_value(raw)?;
    if file.n != n {
        return Err(FormatError::Invalid(format!("cache is for N = {}, not N = {n}", file.n)));
    }
    let mut values = BTreeMap::new();
    for (k, v) in &file.values {
        values.insert(monomial_from_key(n, k)?, scalar_from_json(v)?);
    }
    Ok(HaarCache::from_parts(n, values, file.degree)?)
}

/// Loads the cache at `path`, or starts an empty one if the file is absent.
pub fn load_cache(path: &Path, n: usize) -> Result<HaarCache, FormatError> {
    match fs::read_to_string(path) {
        Ok(text) => cache_from_json(&text, n),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(HaarCache::new(n)),
        Err(e) => Err(e.into()),
    }
}

/// Writes the cache through a temporary file so readers never see a partial
/// file.
pub fn save_cache(path: &Path, cache: &HaarCache) -> Result<(), FormatError> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(cache_to_json(cache).as_bytes())?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}
