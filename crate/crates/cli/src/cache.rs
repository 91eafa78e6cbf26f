//! On-disk cache of expensive results, one JSON file per entry.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use grp_core::PermGroup;

pub const CACHE_ENV: &str = "GRP_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".grp-cache";
pub const VERSION_TAG: &str = concat!("grp-", env!("CARGO_PKG_VERSION"), "/1");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PayloadKind {
    SubgroupClasses,
    SylowCertificate,
    Series,
}

impl PayloadKind {
    fn tag(self) -> &'static str {
        match self {
            PayloadKind::SubgroupClasses => "classes",
            PayloadKind::SylowCertificate => "sylow",
            PayloadKind::Series => "series",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    kind: PayloadKind,
    key: String,
    params: String,
    payload: serde_json::Value,
}

/// SHA-256 over the degree (little-endian `u64`) followed by the image
/// sequences (little-endian `u32`) of the generators in sorted order.
pub fn group_key(g: &PermGroup) -> String {
    let mut gens: Vec<&[u32]> = g.generators().iter().map(|x| x.images()).collect();
    gens.sort_unstable();
    let mut h = Sha256::new();
    h.update((g.degree() as u64).to_le_bytes());
    for images in gens {
        for &x in images {
            h.update(x.to_le_bytes());
        }
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The directory named by `GRP_CACHE_DIR`, else `.grp-cache`.
    pub fn from_env() -> Self {
        Cache::new(std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR), PathBuf::from))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str, kind: PayloadKind, params: &str) -> PathBuf {
        let safe: String = params
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        self.dir.join(format!("{key}-{}-{safe}.json", kind.tag()))
    }

    /// Entries that fail to parse or carry another version tag are ignored.
    pub fn get<T: DeserializeOwned>(&self, g: &PermGroup, kind: PayloadKind, params: &str) -> Option<T> {
        let key = group_key(g);
        let text = std::fs::read_to_string(self.path(&key, kind, params)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.version != VERSION_TAG || entry.kind != kind || entry.key != key || entry.params != params {
            return None;
        }
        serde_json::from_value(entry.payload).ok()
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place.
    pub fn put<T: Serialize>(&self, g: &PermGroup, kind: PayloadKind, params: &str, payload: &T) -> anyhow::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let key = group_key(g);
        let entry = Entry {
            version: VERSION_TAG.to_string(),
            kind,
            key: key.clone(),
            params: params.to_string(),
            payload: serde_json::to_value(payload)?,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&entry)?.as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(&key, kind, params))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grp_core::constructors::{make, GroupFamilySpec};

    #[test]
    fn key_ignores_generator_order() {
        let g = make(&GroupFamilySpec::Sym(4)).unwrap();
        let mut gens = g.generators().to_vec();
        gens.reverse();
        let h = PermGroup::new(4, gens).unwrap();
        assert_eq!(group_key(&g), group_key(&h));
        assert_ne!(group_key(&g), group_key(&make(&GroupFamilySpec::Alt(4)).unwrap()));
    }

    #[test]
    fn round_trip_and_version_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let g = make(&GroupFamilySpec::Sym(3)).unwrap();
        cache.put(&g, PayloadKind::Series, "rc", &vec![1u64, 3, 6]).unwrap();
        assert_eq!(cache.get::<Vec<u64>>(&g, PayloadKind::Series, "rc"), Some(vec![1, 3, 6]));
        assert_eq!(cache.get::<Vec<u64>>(&g, PayloadKind::Series, "chief"), None);
        let path = cache.path(&group_key(&g), PayloadKind::Series, "rc");
        let text = std::fs::read_to_string(&path).unwrap().replace(VERSION_TAG, "grp-0.0.0/0");
        std::fs::write(&path, text).unwrap();
        assert_eq!(cache.get::<Vec<u64>>(&g, PayloadKind::Series, "rc"), None);
    }
}
