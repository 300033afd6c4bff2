//! On-disk character table cache, one `{type}{n}.json` file per group.
//!
//! A file is trusted only if its format version matches and the SHA-256 of
//! its table payload equals the stored checksum; anything else is
//! recomputed and rewritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use springergreen::weylchar::{character_table, CharTable, ClassData, Group, IrrLabel, WeylType};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

/// A character table with decimal string entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredTable {
    #[serde(rename = "type")]
    pub ty: WeylType,
    pub n: usize,
    pub classes: Vec<ClassData>,
    pub irreps: Vec<IrrLabel>,
    pub values: Vec<Vec<String>>,
}

impl StoredTable {
    pub fn from_table(t: &CharTable) -> StoredTable {
        StoredTable {
            ty: t.group.ty,
            n: t.group.n,
            classes: t.group.classes().to_vec(),
            irreps: t.irreps.clone(),
            values: t.values.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }

    pub fn to_table(&self) -> Result<CharTable, CliError> {
        let group = Group::new(self.ty, self.n).map_err(|e| CliError::Input(e.to_string()))?;
        let values = self
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.parse::<BigInt>().map_err(|_| CliError::Input(format!("bad table entry {v:?}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Ok(CharTable { group, irreps: self.irreps.clone(), values })
    }

    pub fn checksum(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("tables serialize");
        format!("{:x}", Sha256::digest(bytes))
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    checksum: String,
    table: StoredTable,
}

pub fn cache_path(dir: &Path, g: Group) -> PathBuf {
    dir.join(format!("{}{}.json", g.ty, g.n))
}

/// The cached table for `g`, or `None` if missing, stale or corrupt.
pub fn load(path: &Path, g: Group) -> Option<StoredTable> {
    let text = fs::read(path).ok()?;
    let file: CacheFile = serde_json::from_slice(&text).ok()?;
    let ok = file.format_version == FORMAT_VERSION
        && file.table.ty == g.ty
        && file.table.n == g.n
        && file.table.checksum() == file.checksum;
    ok.then_some(file.table)
}

/// Writes through a temporary file and a rename so that concurrent readers
/// never see a partial file.
pub fn store(path: &Path, table: &StoredTable) -> std::io::Result<()> {
    let file = CacheFile { format_version: FORMAT_VERSION, checksum: table.checksum(), table: table.clone() };
    let bytes = serde_json::to_vec_pretty(&file).map_err(std::io::Error::other)?;
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path)
}

/// The table of `g`, from the cache when valid. Cache write failures are
/// ignored.
pub fn table(dir: Option<&Path>, g: Group) -> StoredTable {
    let path = dir.map(|d| cache_path(d, g));
    if let Some(t) = path.as_deref().and_then(|p| load(p, g)) {
        return t;
    }
    let t = StoredTable::from_table(&character_table(g));
    if let Some(p) = path {
        let _ = store(&p, &t);
    }
    t
}
