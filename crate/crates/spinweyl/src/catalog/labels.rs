use crate::chartab::CoverTables;
use crate::error::{Error, Result};
use crate::rootsystem::CartanType;
use std::collections::HashMap;

const LABELS: [(&str, &str); 3] = [
    ("G2", include_str!("../../data/labels/G2.tsv")),
    ("F4", include_str!("../../data/labels/F4.tsv")),
    ("E6", include_str!("../../data/labels/E6.tsv")),
];

/// Printed labels of W- and W~-representations mapped to computed ones.
/// W labels missing from the map are taken verbatim.
#[derive(Clone, Debug, Default)]
pub struct LabelMap {
    pub weyl: HashMap<String, String>,
    pub cover: HashMap<String, String>,
}

impl LabelMap {
    pub fn load(ct: CartanType) -> Result<Self> {
        let name = ct.to_string();
        let text = LABELS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t).ok_or_else(|| Error::Data(format!("no label map for {name}")))?;
        let mut out = Self::default();
        for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(Error::Data(format!("expected 3 columns in {line:?}")));
            }
            let map = match cols[0] {
                "W" => &mut out.weyl,
                "Wt" => &mut out.cover,
                k => return Err(Error::Data(format!("unknown label kind {k:?}"))),
            };
            map.insert(cols[1].trim().to_string(), cols[2].trim().to_string());
        }
        Ok(out)
    }

    pub fn weyl_label(&self, printed: &str) -> String {
        self.weyl.get(printed).cloned().unwrap_or_else(|| printed.to_string())
    }

    pub fn cover_label(&self, printed: &str) -> Result<String> {
        self.cover.get(printed).cloned().ok_or_else(|| Error::Data(format!("W~ label {printed:?} is not in the label map")))
    }
}

/// Canonical names of the genuine irreducibles of the cover: `d.i` for the
/// i-th genuine row of degree d in table order. Other rows get an empty
/// name.
pub fn cover_labels(tables: &CoverTables) -> Vec<String> {
    let mut seen: HashMap<i64, usize> = HashMap::new();
    (0..tables.table.len())
        .map(|i| {
            if !tables.is_genuine(i) {
                return String::new();
            }
            let d = tables.table.degree(i);
            let c = seen.entry(d).or_insert(0);
            *c += 1;
            format!("{d}.{c}")
        })
        .collect()
}
