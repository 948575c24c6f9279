use super::hilbert::HilbertNumerator;
use crate::error::{Error, Result};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Graded Betti numbers `β_{i,j}`: homological degree `i`, internal degree `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table from `(i, j, β_ij)` triples; zero entries are dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, i32, u64)>) -> Self {
        let mut t = BettiTable::new();
        for (i, j, b) in entries {
            t.add(i, j, b);
        }
        t
    }

    /// Table from rows labelled `j - i` as printed: `rows[r]` lists
    /// `β_{i, i + start + r}` for `i = 0, 1, ...`.
    pub fn from_rows(start: i32, rows: &[&[u64]]) -> Self {
        let mut t = BettiTable::new();
        for (r, row) in rows.iter().enumerate() {
            for (i, &b) in row.iter().enumerate() {
                t.add(i, i as i32 + start + r as i32, b);
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: i32, b: u64) {
        if b == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), b);
        }
    }

    pub fn add(&mut self, i: usize, j: i32, b: u64) {
        let v = self.get(i, j) + b;
        self.set(i, j, v);
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries `((i, j), β_ij)` in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, i32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological degree with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(k, _)| k.0 == i)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        if self.is_empty() {
            return Vec::new();
        }
        (0..=self.length()).map(|i| self.total(i)).collect()
    }

    /// Range of row labels `j - i` carrying nonzero entries.
    pub fn row_range(&self) -> Option<(i32, i32)> {
        let rows = self.entries.keys().map(|&(i, j)| j - i as i32);
        let lo = rows.clone().min()?;
        Some((lo, rows.max()?))
    }

    /// Entries `β_{i, i + r}` of row `r` for `i = 0..=length`.
    pub fn row(&self, r: i32) -> Vec<u64> {
        (0..=self.length())
            .map(|i| self.get(i, i as i32 + r))
            .collect()
    }

    /// `Σ (-1)^i β_ij t^j`.
    pub fn hilbert_numerator(&self) -> Result<HilbertNumerator> {
        HilbertNumerator::from_betti(self.iter().map(|((i, j), b)| (i, j, b)))
    }

    /// JSON object keyed by `"i,j"`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for ((i, j), b) in self.iter() {
            m.insert(format!("{i},{j}"), Value::from(b));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: msg.to_string(),
        };
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let mut t = BettiTable::new();
        for (k, v) in obj {
            let (a, b) = k.split_once(',').ok_or_else(|| bad("key must be \"i,j\""))?;
            let i: usize = a.trim().parse().map_err(|_| bad("bad homological degree"))?;
            let j: i32 = b.trim().parse().map_err(|_| bad("bad internal degree"))?;
            let n = v.as_u64().ok_or_else(|| bad("entry must be a nonnegative integer"))?;
            t.add(i, j, n);
        }
        Ok(t)
    }

    /// Text layout with a header of homological degrees, a `total:` row and
    /// one row per `j - i` between the extreme nonzero rows.
    pub fn render(&self) -> String {
        let Some((lo, hi)) = self.row_range() else {
            return "total:\n".to_string();
        };
        let ncols = self.length() + 1;
        let mut lines: Vec<(String, Vec<String>)> = Vec::new();
        lines.push((String::new(), (0..ncols).map(|i| i.to_string()).collect()));
        lines.push((
            "total:".into(),
            self.totals().iter().map(|b| b.to_string()).collect(),
        ));
        for r in lo..=hi {
            let cells = self
                .row(r)
                .iter()
                .map(|&b| if b == 0 { ".".into() } else { b.to_string() })
                .collect();
            lines.push((format!("{r}:"), cells));
        }
        let lw = lines.iter().map(|l| l.0.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..ncols)
            .map(|c| lines.iter().map(|l| l.1[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in lines {
            let mut s = format!("{label:>lw$}");
            for (c, cell) in cells.iter().enumerate() {
                s.push(' ');
                s.push_str(&format!("{cell:>w$}", w = widths[c]));
            }
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }

    /// Parses the text layout produced by [`BettiTable::render`]; the header
    /// and `total:` lines are optional and totals are checked when present.
    pub fn parse(text: &str) -> Result<Self> {
        let mut t = BettiTable::new();
        let mut totals: Option<Vec<u64>> = None;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: ln + 1, msg };
            let Some((label, rest)) = line.split_once(':') else {
                // header of column indices
                if line.split_whitespace().all(|w| w.parse::<usize>().is_ok()) {
                    continue;
                }
                return Err(err(format!("unrecognized line {line:?}")));
            };
            let cells: Vec<u64> = rest
                .split_whitespace()
                .map(|w| {
                    if w == "." {
                        Ok(0)
                    } else {
                        w.parse::<u64>().map_err(|_| err(format!("bad entry {w:?}")))
                    }
                })
                .collect::<Result<_>>()?;
            if label.trim() == "total" {
                totals = Some(cells);
                continue;
            }
            let r: i32 = label
                .trim()
                .parse()
                .map_err(|_| err(format!("bad row label {label:?}")))?;
            for (i, b) in cells.into_iter().enumerate() {
                t.add(i, i as i32 + r, b);
            }
        }
        if let Some(tot) = totals {
            let got = t.totals();
            let want: Vec<u64> = tot.into_iter().collect();
            if got != want {
                return Err(Error::Parse {
                    line: 2,
                    msg: format!("totals {want:?} do not match rows {got:?}"),
                });
            }
        }
        Ok(t)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Compares two renderings ignoring whitespace differences.
pub fn same_layout(a: &str, b: &str) -> bool {
    let norm = |s: &str| -> Vec<Vec<String>> {
        s.lines()
            .map(|l| l.split_whitespace().map(str::to_string).collect::<Vec<_>>())
            .filter(|l| !l.is_empty())
            .collect()
    };
    norm(a) == norm(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const O8: &str = "
              0 1 2
       total: 1 4 3
           0: 1 . .
           1: . . .
           2: . . .
           3: . . .
           4: . 3 .
           5: . 1 3";

    #[test]
    fn render_matches_printed_layout() {
        let t = BettiTable::from_entries([(0, 0, 1), (1, 5, 3), (1, 6, 1), (2, 7, 3)]);
        assert!(same_layout(&t.render(), O8));
        assert_eq!(BettiTable::parse(O8).unwrap(), t);
        assert_eq!(t.totals(), vec![1, 4, 3]);
    }

    #[test]
    fn parse_rejects_wrong_totals() {
        let bad = "total: 1 2\n0: 1 .\n1: . 3";
        assert!(BettiTable::parse(bad).is_err());
    }

    #[test]
    fn numerator_of_koszul() {
        let t = BettiTable::from_entries([(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]);
        assert_eq!(t.hilbert_numerator().unwrap().coefficients, vec![1, -3, 3, -1]);
    }

    proptest! {
        #[test]
        fn text_and_json_round_trip(
            cells in proptest::collection::vec((0usize..5, -2i32..4, 0u64..30), 0..12),
        ) {
            let t = BettiTable::from_entries(cells.into_iter().map(|(i, r, b)| (i, i as i32 + r, b)));
            prop_assert_eq!(BettiTable::parse(&t.render()).unwrap(), t.clone());
            prop_assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
        }
    }
}
