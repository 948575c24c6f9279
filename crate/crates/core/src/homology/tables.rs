use super::betti::BettiTable;
use super::hilbert::HilbertNumerator;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// The unique table with the given numerator in which every internal degree
/// occurs in at most one homological degree. Coefficients are read in
/// increasing degree; each change of sign moves to the next homological
/// degree, starting at 0 for a positive leading coefficient and at 1 for a
/// negative one. Fails when more than `max_length + 1` columns are needed.
pub fn expected_natural_betti(num: &HilbertNumerator, max_length: Option<usize>) -> Result<BettiTable> {
    let mut t = BettiTable::new();
    let mut hom: Option<usize> = None;
    let mut last_sign = 0i64;
    for (j, &c) in num.coefficients.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let s = c.signum();
        let i = match hom {
            None => {
                if s > 0 {
                    0
                } else {
                    1
                }
            }
            Some(i) if s == last_sign => i,
            Some(i) => i + 1,
        };
        if i % 2 == 0 && s < 0 || i % 2 == 1 && s > 0 {
            return Err(Error::NotNatural(format!("sign of t^{j} does not fit column {i}")));
        }
        if let Some(m) = max_length {
            if i > m {
                return Err(Error::NotNatural(format!(
                    "needs homological degree {i} > {m}"
                )));
            }
        }
        t.add(i, j as i32, c.unsigned_abs());
        hom = Some(i);
        last_sign = s;
    }
    Ok(t)
}

/// True when the table has a unique entry in every internal degree.
pub fn is_natural(t: &BettiTable) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    t.iter().all(|((_, j), _)| seen.insert(j))
}

/// Property `N_p`: `β_{ij} = 0` for all `j >= i + 2` and `i <= p`.
pub fn satisfies_np(t: &BettiTable, p: usize) -> bool {
    t.iter()
        .all(|((i, j), b)| b == 0 || i > p || j < i as i32 + 2)
}

/// Betti number `a + b·x` with a symbolic unknown `x >= 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymEntry {
    pub a: i64,
    pub b: i64,
}

impl SymEntry {
    pub fn num(a: i64) -> Self {
        SymEntry { a, b: 0 }
    }

    pub fn x() -> Self {
        SymEntry { a: 0, b: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Value with `x` specialized.
    pub fn eval(&self, x: i64) -> i64 {
        self.a + self.b * x
    }
}

impl std::ops::Add for SymEntry {
    type Output = SymEntry;

    fn add(self, o: SymEntry) -> SymEntry {
        SymEntry {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl fmt::Display for SymEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = match self.b {
            0 => String::new(),
            1 => "x".into(),
            b => format!("{b}x"),
        };
        match (self.a, self.b) {
            (0, 0) => write!(f, "."),
            (a, 0) => write!(f, "{a}"),
            (0, _) => write!(f, "{xs}"),
            (a, _) => write!(f, "{a}+{xs}"),
        }
    }
}

impl std::str::FromStr for SymEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            msg: format!("bad table entry {s:?}"),
        };
        if s == "." {
            return Ok(SymEntry::default());
        }
        let mut e = SymEntry::default();
        for part in s.split('+') {
            if let Some(c) = part.strip_suffix('x') {
                e.b += if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
            } else {
                e.a += part.parse::<i64>().map_err(|_| bad())?;
            }
        }
        Ok(e)
    }
}

/// Betti table whose entries may involve one unknown `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicBetti {
    entries: BTreeMap<(usize, i32), SymEntry>,
}

impl SymbolicBetti {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: i32) -> SymEntry {
        self.entries.get(&(i, j)).copied().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: i32, e: SymEntry) {
        if e.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), e);
        }
    }

    pub fn add(&mut self, i: usize, j: i32, e: SymEntry) {
        let v = self.get(i, j) + e;
        self.set(i, j, v);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, i32), SymEntry)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Specializes `x`; fails on negative entries.
    pub fn eval(&self, x: i64) -> Result<BettiTable> {
        let mut t = BettiTable::new();
        for ((i, j), e) in self.iter() {
            let v = e.eval(x);
            if v < 0 {
                return Err(Error::InvalidArgument(format!("negative entry at ({i},{j})")));
            }
            t.add(i, j, v as u64);
        }
        Ok(t)
    }

    /// Rows labelled `j - i`, as in [`BettiTable::render`] but without totals.
    pub fn render(&self) -> String {
        let rows: Vec<i32> = self.entries.keys().map(|&(i, j)| j - i as i32).collect();
        let (Some(&lo), Some(&hi)) = (rows.iter().min(), rows.iter().max()) else {
            return String::new();
        };
        let n = self.length() + 1;
        let mut lines: Vec<(String, Vec<String>)> =
            vec![(String::new(), (0..n).map(|i| i.to_string()).collect())];
        for r in lo..=hi {
            let cells = (0..n)
                .map(|i| self.get(i, i as i32 + r).to_string())
                .collect();
            lines.push((format!("{r}:"), cells));
        }
        let lw = lines.iter().map(|l| l.0.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..n)
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

    /// Parses rows `r: e0 e1 ...` (entries `.`, `n`, `x`, `n+x`); header and
    /// `total:` lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut t = SymbolicBetti::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            let Some((label, rest)) = line.split_once(':') else {
                continue;
            };
            if label.trim() == "total" {
                continue;
            }
            let r: i32 = label.trim().parse().map_err(|_| Error::Parse {
                line: ln + 1,
                msg: format!("bad row label {label:?}"),
            })?;
            for (i, w) in rest.split_whitespace().enumerate() {
                let e: SymEntry = w.parse().map_err(|_| Error::Parse {
                    line: ln + 1,
                    msg: format!("bad entry {w:?}"),
                })?;
                t.add(i, i as i32 + r, e);
            }
        }
        Ok(t)
    }
}

impl From<&BettiTable> for SymbolicBetti {
    fn from(t: &BettiTable) -> Self {
        let mut s = SymbolicBetti::new();
        for ((i, j), b) in t.iter() {
            s.add(i, j, SymEntry::num(b as i64));
        }
        s
    }
}

/// Betti table of the Koszul complex on forms of the given degrees.
pub fn koszul_betti(degrees: &[i32]) -> BettiTable {
    let mut t = BettiTable::new();
    let n = degrees.len();
    for mask in 0u32..(1 << n) {
        let i = mask.count_ones() as usize;
        let j: i32 = (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| degrees[k]).sum();
        t.add(i, j, 1);
    }
    t
}

/// Predicted Betti table of the curve linked to `C'` by a complete
/// intersection of the given degrees. The mapping cone `F'_i ⊕ K_{i-1}` of
/// the Koszul complex `K` into the resolution `F'` of `C'` is dualized with
/// twist `Σ deg`, and the summands `K_{i-1}` and `F'_{i-1}` in equal
/// internal degree are cancelled as far as the numbers allow.
pub fn liaison_betti_predict(
    cprime: &SymbolicBetti,
    ci_degrees: &[i32],
    ambient_dim: usize,
) -> Result<SymbolicBetti> {
    let c = ci_degrees.len();
    if c == 0 || c > ambient_dim {
        return Err(Error::LiaisonDegrees(format!(
            "{c} forms in P^{ambient_dim}"
        )));
    }
    // the complete intersection must consist of minimal generators of C'
    let mut need: BTreeMap<i32, i64> = BTreeMap::new();
    for &d in ci_degrees {
        *need.entry(d).or_default() += 1;
    }
    for (&d, &k) in &need {
        if cprime.get(1, d).a < k {
            return Err(Error::LiaisonDegrees(format!(
                "{k} generators of degree {d} required, table has {}",
                cprime.get(1, d)
            )));
        }
    }
    let koszul = koszul_betti(ci_degrees);
    let s: i32 = ci_degrees.iter().sum();
    let len = cprime.length().max(c) + 1;
    // cone[i] = (F'_i part, K_{i-1} part), each keyed by internal degree
    let mut fpart: Vec<BTreeMap<i32, SymEntry>> = vec![BTreeMap::new(); len + 1];
    let mut kpart: Vec<BTreeMap<i32, i64>> = vec![BTreeMap::new(); len + 1];
    for ((i, j), e) in cprime.iter() {
        if i <= len {
            *fpart[i].entry(j).or_default() = fpart[i].get(&j).copied().unwrap_or_default() + e;
        }
    }
    for ((i, j), b) in koszul.iter() {
        *kpart[i + 1].entry(j).or_default() += b as i64;
    }
    for i in 1..=len {
        let degs: Vec<i32> = kpart[i].keys().copied().collect();
        for j in degs {
            let k = kpart[i][&j];
            let f = fpart[i - 1].get(&j).copied().unwrap_or_default();
            let m = if f.b == 0 { k.min(f.a) } else { k };
            if m == 0 {
                continue;
            }
            if f.a < m {
                return Err(Error::LiaisonDegrees(format!(
                    "cannot cancel {m} against {f} in degree {j}"
                )));
            }
            *kpart[i].get_mut(&j).expect("present") -= m;
            fpart[i - 1].insert(j, SymEntry { a: f.a - m, b: f.b });
        }
    }
    let mut out = SymbolicBetti::new();
    for i in 0..=len {
        let pos = len - i;
        for (&j, &e) in &fpart[i] {
            out.add(pos, s - j, e);
        }
        for (&j, &k) in &kpart[i] {
            out.add(pos, s - j, SymEntry::num(k));
        }
    }
    // drop empty leading columns so that the result starts at position 0
    let shift = out.entries.keys().map(|k| k.0).min().unwrap_or(0);
    let mut shifted = SymbolicBetti::new();
    for ((i, j), e) in out.iter() {
        shifted.add(i - shift, j, e);
    }
    Ok(shifted)
}
