//! On-disk cache of computed character tables, keyed by a hash of the
//! group data (identifier, order, class sizes, element orders, inverses).

use super::CharacterTable;
use crate::error::{Error, Result};
use crate::group::Classes;
use crate::scalars::CyclotomicNumber;
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SPINWEYL_TABLE_CACHE";

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

#[derive(Serialize, Deserialize)]
struct StoredTable {
    group_id: String,
    order: usize,
    sizes: Vec<usize>,
    orders: Vec<usize>,
    inverse: Vec<usize>,
    irreps: Vec<Vec<String>>,
}

fn cache_key(group_id: &str, order: usize, classes: &Classes) -> String {
    let mut h = DefaultHasher::new();
    (group_id, order, &classes.sizes, &classes.orders, &classes.inverse).hash(&mut h);
    let safe: String = group_id.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("{safe}-{:016x}.json", h.finish())
}

fn load(path: &Path, group_id: &str, order: usize, classes: &Classes) -> Result<CharacterTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Data(e.to_string()))?;
    let s: StoredTable = serde_json::from_str(&text).map_err(|e| Error::Data(e.to_string()))?;
    if s.group_id != group_id || s.order != order || s.sizes != classes.sizes || s.orders != classes.orders || s.inverse != classes.inverse {
        return Err(Error::Data(format!("{} does not describe this group", path.display())));
    }
    let irreps = s.irreps.iter().map(|row| row.iter().map(|x| CyclotomicNumber::parse(x)).collect()).collect::<Result<Vec<_>>>()?;
    let table = CharacterTable { group_id: s.group_id, order, sizes: s.sizes, orders: s.orders, inverse: s.inverse, irreps };
    table.check()?;
    Ok(table)
}

fn store(path: &Path, table: &CharacterTable) -> Result<()> {
    let s = StoredTable {
        group_id: table.group_id.clone(),
        order: table.order,
        sizes: table.sizes.clone(),
        orders: table.orders.clone(),
        inverse: table.inverse.clone(),
        irreps: table.irreps.iter().map(|row| row.iter().map(|x| x.serialize()).collect()).collect(),
    };
    let text = serde_json::to_string(&s).map_err(|e| Error::Data(e.to_string()))?;
    std::fs::create_dir_all(path.parent().unwrap_or(Path::new("."))).map_err(|e| Error::Data(e.to_string()))?;
    std::fs::write(path, text).map_err(|e| Error::Data(e.to_string()))
}

/// Reads the table from `dir` when a valid entry exists, otherwise computes
/// and stores it. Unreadable or inconsistent entries are recomputed.
pub fn cached_table(dir: Option<&Path>, group_id: &str, order: usize, classes: &Classes, compute: impl FnOnce() -> Result<CharacterTable>) -> Result<CharacterTable> {
    let Some(dir) = dir else { return compute() };
    let path = dir.join(cache_key(group_id, order, classes));
    if let Ok(t) = load(&path, group_id, order, classes) {
        return Ok(t);
    }
    let t = compute()?;
    store(&path, &t)?;
    Ok(t)
}
