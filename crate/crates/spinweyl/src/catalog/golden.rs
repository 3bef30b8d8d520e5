use crate::combinat::Linear;
use crate::error::{Error, Result};
use crate::rootsystem::CartanType;
use crate::scalars::Rational;

const TABLES: [(&str, &str); 5] = [
    ("G2", include_str!("../../data/tables/G2.tsv")),
    ("F4", include_str!("../../data/tables/F4.tsv")),
    ("E6", include_str!("../../data/tables/E6.tsv")),
    ("E7", include_str!("../../data/tables/E7.tsv")),
    ("E8", include_str!("../../data/tables/E8.tsv")),
];

/// The chi column: a central character in the basis of fundamental
/// weights, the marker "no", or absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiColumn {
    Absent,
    No,
    Weights(Vec<Linear>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub cartan_type: CartanType,
    /// W-representations sharing the row, as printed.
    pub sigma_labels: Vec<String>,
    pub constituents: Vec<(String, u64)>,
    pub orbit: String,
    pub chi: ChiColumn,
}

impl GoldenRow {
    pub fn chi_unequal_is_no(&self) -> bool {
        self.chi == ChiColumn::No
    }

    /// Sum of mult * dimension over the constituents.
    pub fn constituent_dimension(&self) -> Result<u64> {
        self.constituents.iter().map(|(l, m)| Ok(m * label_dimension(l)?)).sum()
    }
}

/// Dimension encoded in a label: `(d,b)...` or `d_s...`.
pub fn label_dimension(label: &str) -> Result<u64> {
    let bad = || Error::Data(format!("cannot read a dimension from {label:?}"));
    let t = label.trim();
    let digits: String = if let Some(rest) = t.strip_prefix('(') {
        rest.chars().take_while(|c| c.is_ascii_digit()).collect()
    } else {
        t.chars().take_while(|c| c.is_ascii_digit()).collect()
    };
    digits.parse().map_err(|_| bad())
}

/// Dimension of the spin modules of a type (each of them when there are two).
pub fn spin_dimension(ct: CartanType) -> u64 {
    1 << (ct.rank() / 2)
}

fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out
}

fn parse_linear(s: &str) -> Result<Linear> {
    let bad = || Error::Data(format!("bad parameter expression {s:?}"));
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let mut out = Linear::default();
    let mut rest = t;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let (coef, var) = term.split_at(term.len().checked_sub(2).ok_or_else(bad)?);
        let c: i64 = if coef.is_empty() { 1 } else { coef.trim_end_matches('*').parse().map_err(|_| bad())? };
        let c = Rational::from_integer((sign * c).into());
        match var {
            "ks" => out.ks += c,
            "kl" => out.kl += c,
            _ => return Err(bad()),
        }
    }
    Ok(out)
}

/// Parse `kl*w1+(-kl+ks)*w2` into coefficients of w1..w_rank.
pub fn parse_chi(s: &str, rank: usize) -> Result<ChiColumn> {
    match s.trim() {
        "-" | "" => return Ok(ChiColumn::Absent),
        "no" => return Ok(ChiColumn::No),
        _ => {}
    }
    let mut out = vec![Linear::default(); rank];
    for term in split_top(s, '+') {
        let (coef, w) = term.rsplit_once("*w").ok_or_else(|| Error::Data(format!("bad chi term {term:?}")))?;
        let i: usize = w.parse().map_err(|_| Error::Data(format!("bad weight index in {term:?}")))?;
        if i == 0 || i > rank {
            return Err(Error::Data(format!("weight index {i} out of range")));
        }
        let l = parse_linear(coef)?;
        out[i - 1].ks += l.ks;
        out[i - 1].kl += l.kl;
    }
    Ok(ChiColumn::Weights(out))
}

fn parse_constituents(s: &str) -> Result<Vec<(String, u64)>> {
    s.split('+')
        .map(|t| {
            let t = t.trim();
            match t.split_once('*') {
                Some((m, l)) => Ok((l.to_string(), m.parse().map_err(|_| Error::Data(format!("bad multiplicity in {t:?}")))?)),
                None => Ok((t.to_string(), 1)),
            }
        })
        .collect()
}

fn parse_row(line: &str) -> Result<GoldenRow> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 5 {
        return Err(Error::Data(format!("expected 5 columns in {line:?}")));
    }
    let ct = CartanType::parse(cols[0])?;
    let row = GoldenRow {
        cartan_type: ct,
        sigma_labels: split_top(cols[1], ',').into_iter().map(|x| x.trim().to_string()).collect(),
        constituents: parse_constituents(cols[2])?,
        orbit: cols[3].to_string(),
        chi: parse_chi(cols[4], ct.rank())?,
    };
    let target = spin_dimension(ct);
    for l in &row.sigma_labels {
        if label_dimension(l)? * target != row.constituent_dimension()? {
            return Err(Error::Data(format!("dimension identity fails for {l} in {line:?}")));
        }
    }
    Ok(row)
}

/// Every row of the golden tables, checked for the dimension identity.
pub fn load_tables() -> Result<Vec<GoldenRow>> {
    let mut out = Vec::new();
    for (_, text) in TABLES {
        for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
            out.push(parse_row(line)?);
        }
    }
    Ok(out)
}

pub fn rows_for(ct: CartanType) -> Result<Vec<GoldenRow>> {
    Ok(load_tables()?.into_iter().filter(|r| r.cartan_type == ct).collect())
}
