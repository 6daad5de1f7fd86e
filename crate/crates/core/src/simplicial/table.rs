use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::derived::Window;
use crate::{Error, Result};

/// Dimensions `dim H_i^t` over a window, keyed by level and internal
/// degree. Zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    functor: String,
    s: u32,
    window: Window,
    entries: BTreeMap<(usize, u32), usize>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    level: usize,
    degree: u32,
    total: i64,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    functor: String,
    s: u32,
    window: Window,
    entries: Vec<Entry>,
}

impl DimTable {
    pub fn new(functor: impl Into<String>, s: u32, window: Window) -> Self {
        DimTable {
            functor: functor.into(),
            s,
            window,
            entries: BTreeMap::new(),
        }
    }

    pub fn functor(&self) -> &str {
        &self.functor
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn insert(&mut self, level: usize, t: u32, dim: usize) {
        if dim == 0 {
            self.entries.remove(&(level, t));
        } else {
            self.entries.insert((level, t), dim);
        }
    }

    pub fn get(&self, level: usize, t: u32) -> usize {
        self.entries.get(&(level, t)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((level, t), dim)` in key order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the dimensions on one level.
    pub fn level_total(&self, level: usize) -> usize {
        self.entries
            .range((level, 0)..=(level, u32::MAX))
            .map(|(_, &d)| d)
            .sum()
    }

    /// Whether every class of total degree at most `n` is present.
    pub fn complete_through(&self, n: u32) -> bool {
        self.window.check_top && self.window.max_total.is_some_and(|m| m >= n)
    }

    /// Sum of two tables on the same window.
    pub fn merge(&self, other: &DimTable) -> Result<DimTable> {
        if self.window != other.window || self.s != other.s {
            return Err(Error::Invalid("tables have different windows".into()));
        }
        let mut out = self.clone();
        out.functor = format!("{}+{}", self.functor, other.functor);
        for ((i, t), d) in other.entries() {
            out.insert(i, t, out.get(i, t) + d);
        }
        Ok(out)
    }

    /// Tab separated, one row per nonzero entry, with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("functor\ts\tlevel\tdegree\ttotal\tdim\n");
        for ((i, t), d) in self.entries() {
            let total = i64::from(t) - i as i64;
            let _ = writeln!(out, "{}\t{}\t{i}\t{t}\t{total}\t{d}", self.functor, self.s);
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        let json = TableJson {
            functor: self.functor.clone(),
            s: self.s,
            window: self.window,
            entries: self
                .entries()
                .map(|((level, degree), dim)| Entry {
                    level,
                    degree,
                    total: i64::from(degree) - level as i64,
                    dim,
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&json)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: TableJson = serde_json::from_str(text)?;
        let mut table = DimTable::new(json.functor, json.s, json.window);
        for e in json.entries {
            if e.total != i64::from(e.degree) - e.level as i64 {
                return Err(Error::Parse(format!(
                    "entry ({}, {}) has inconsistent total degree",
                    e.level, e.degree
                )));
            }
            table.insert(e.level, e.degree, e.dim);
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialization_round_trip() {
        let mut t = DimTable::new("b", 2, Window::new(2, 8));
        t.insert(0, 1, 1);
        t.insert(1, 3, 2);
        t.insert(1, 4, 0);
        assert_eq!(t.to_tsv(), "functor\ts\tlevel\tdegree\ttotal\tdim\nb\t2\t0\t1\t1\t1\nb\t2\t1\t3\t2\t2\n");
        let back = DimTable::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.level_total(1), 2);
        assert!(!t.complete_through(0));
    }
}
