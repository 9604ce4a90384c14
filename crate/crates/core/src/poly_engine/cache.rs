//! Process-wide memo of reduced Gröbner bases, optionally persisted as JSON.
//!
//! Keys are SHA-256 digests of a canonical rendering of the ring size, the
//! monomial order and the sorted primitive generators. The persisted file
//! lives at `$QMLD_CACHE_DIR/groebner_cache.json`.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use num_bigint::BigInt;
use parking_lot::Mutex;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::monomial::{Mono, MonomialOrder};
use super::poly::Poly;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "QMLD_CACHE_DIR";
const CACHE_FILE: &str = "groebner_cache.json";
const CACHE_VERSION: u32 = 1;

type StoredPoly = Vec<(Vec<u32>, String)>;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, Vec<StoredPoly>>,
}

struct CacheState {
    enabled: bool,
    dir: Option<PathBuf>,
    loaded: bool,
    dirty: bool,
    entries: HashMap<String, Vec<StoredPoly>>,
}

fn state() -> &'static Mutex<CacheState> {
    static STATE: OnceLock<Mutex<CacheState>> = OnceLock::new();
    STATE.get_or_init(|| {
        Mutex::new(CacheState {
            enabled: true,
            dir: std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from),
            loaded: false,
            dirty: false,
            entries: HashMap::new(),
        })
    })
}

/// Turns the cache on or off and optionally redirects persistence.
pub fn configure(enabled: bool, dir: Option<PathBuf>) {
    let mut s = state().lock();
    s.enabled = enabled;
    if dir.is_some() {
        s.dir = dir;
        s.loaded = false;
    }
}

pub fn is_enabled() -> bool {
    state().lock().enabled
}

/// Canonical key for a Gröbner basis request.
pub fn key(nvars: usize, order: &MonomialOrder, generators: &[Poly]) -> String {
    let mut rendered: Vec<String> = generators.iter().map(|g| render(g, nvars)).collect();
    rendered.sort();
    rendered.dedup();
    let mut h = Sha256::new();
    h.update(format!("v{CACHE_VERSION}|{nvars}|{order:?}|").as_bytes());
    for r in rendered {
        h.update(r.as_bytes());
        h.update(b";");
    }
    hex::encode(h.finalize())
}

fn render(p: &Poly, nvars: usize) -> String {
    let mut terms: Vec<String> = p
        .terms()
        .iter()
        .map(|(m, c)| format!("{}:{:?}", c, m.exponents(nvars)))
        .collect();
    terms.sort();
    terms.join(",")
}

fn load(s: &mut CacheState) {
    if s.loaded {
        return;
    }
    s.loaded = true;
    let Some(dir) = s.dir.clone() else { return };
    let Ok(text) = std::fs::read_to_string(dir.join(CACHE_FILE)) else { return };
    match serde_json::from_str::<CacheFile>(&text) {
        Ok(file) if file.version == CACHE_VERSION => {
            for (k, v) in file.entries {
                s.entries.entry(k).or_insert(v);
            }
        }
        Ok(_) => log::warn!("ignoring Gröbner cache with an unknown version"),
        Err(e) => log::warn!("ignoring unreadable Gröbner cache: {e}"),
    }
}

pub fn lookup(key: &str, order: &MonomialOrder) -> Option<Vec<Poly>> {
    let mut s = state().lock();
    if !s.enabled {
        return None;
    }
    load(&mut s);
    let stored = s.entries.get(key)?;
    Some(
        stored
            .iter()
            .map(|terms| {
                let parsed = terms
                    .iter()
                    .map(|(e, c)| (Mono::from_exponents(e), c.parse::<BigInt>().expect("cached coefficient")))
                    .collect();
                Poly::from_terms(parsed, order)
            })
            .collect(),
    )
}

pub fn store(key: String, basis: &[Poly], nvars: usize) {
    let mut s = state().lock();
    if !s.enabled {
        return;
    }
    let stored = basis
        .iter()
        .map(|p| p.terms().iter().map(|(m, c)| (m.exponents(nvars), c.to_string())).collect())
        .collect();
    s.entries.insert(key, stored);
    s.dirty = true;
}

/// Writes the cache to its directory, if persistence is configured.
pub fn flush() -> std::io::Result<()> {
    let mut s = state().lock();
    if !s.enabled || !s.dirty {
        return Ok(());
    }
    let Some(dir) = s.dir.clone() else { return Ok(()) };
    load(&mut s);
    write_file(&dir, &s.entries)?;
    s.dirty = false;
    Ok(())
}

fn write_file(dir: &Path, entries: &HashMap<String, Vec<StoredPoly>>) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let file = CacheFile { version: CACHE_VERSION, entries: entries.clone().into_iter().collect() };
    let tmp = dir.join(format!("{CACHE_FILE}.{}.tmp", std::process::id()));
    std::fs::write(&tmp, serde_json::to_vec(&file)?)?;
    std::fs::rename(tmp, dir.join(CACHE_FILE))
}
