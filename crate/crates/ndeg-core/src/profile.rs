//! Neighborhood-degree profiles: the compact multiset `(d_l^{n_l} ... d_1^{n_1})`
//! of per-vertex demands, with degrees strictly decreasing and all counts positive.
//!
//! Zero-degree demands are legal input; normalization strips them into the
//! `isolated` counter and they are realized as isolated vertices appended after
//! construction. Open-neighborhood operations reject profiles with `isolated > 0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A normalized profile. `blocks` is ordered by strictly decreasing degree,
/// every degree is >= 1 and every count >= 1; degree-0 demands live in
/// `isolated`. The empty profile (no blocks, no isolated vertices) is a valid
/// value used by the split machinery, but it cannot be produced by parsing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile {
    blocks: Vec<(usize, usize)>,
    isolated: usize,
}

impl Profile {
    /// Builds a profile from `(degree, count)` blocks in strictly decreasing
    /// degree order.
    pub fn new(blocks: Vec<(usize, usize)>, isolated: usize) -> Result<Self> {
        for window in blocks.windows(2) {
            if window[0].0 <= window[1].0 {
                return Err(Error::InvalidParams(format!(
                    "block degrees must strictly decrease, got {} then {}",
                    window[0].0, window[1].0
                )));
            }
        }
        for &(d, c) in &blocks {
            if d == 0 {
                return Err(Error::InvalidParams(
                    "degree-0 demands belong in `isolated`, not in a block".into(),
                ));
            }
            if c == 0 {
                return Err(Error::InvalidParams(format!("block {d}^0 has count zero")));
            }
        }
        Ok(Profile { blocks, isolated })
    }

    pub fn empty() -> Self {
        Profile {
            blocks: Vec::new(),
            isolated: 0,
        }
    }

    /// Normalizes an arbitrary multiset of demanded values.
    pub fn from_values(values: &[usize]) -> Self {
        let mut sorted: Vec<usize> = values.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut isolated = 0;
        for v in sorted {
            if v == 0 {
                isolated += 1;
            } else if let Some(last) = blocks.last_mut().filter(|b| b.0 == v) {
                last.1 += 1;
            } else {
                blocks.push((v, 1));
            }
        }
        Profile { blocks, isolated }
    }

    /// Blocks in strictly decreasing degree order: `blocks()[0]` is `(d_l, n_l)`.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Blocks in increasing degree order: index 0 holds `(d_1, n_1)`.
    pub fn blocks_ascending(&self) -> Vec<(usize, usize)> {
        let mut v = self.blocks.clone();
        v.reverse();
        v
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    /// Number of distinct nonzero degrees (the `l` of the compact notation).
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Total demand count `n`, isolated vertices included.
    pub fn total_len(&self) -> usize {
        self.isolated + self.blocks.iter().map(|b| b.1).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty() && self.isolated == 0
    }

    /// Largest demanded degree `d_l`, if any block exists.
    pub fn max_degree(&self) -> Option<usize> {
        self.blocks.first().map(|b| b.0)
    }

    /// `(d_l, n_l)` — the top block.
    pub fn top_block(&self) -> Option<(usize, usize)> {
        self.blocks.first().copied()
    }

    /// `(d_1, n_1)` — the bottom (smallest-degree) block.
    pub fn bottom_block(&self) -> Option<(usize, usize)> {
        self.blocks.last().copied()
    }

    /// Count attached to an exact degree, 0 when the degree is absent.
    pub fn count_of(&self, degree: usize) -> usize {
        if degree == 0 {
            return self.isolated;
        }
        self.blocks
            .iter()
            .find(|b| b.0 == degree)
            .map(|b| b.1)
            .unwrap_or(0)
    }

    /// A copy with the isolated counter cleared.
    pub fn without_isolated(&self) -> Profile {
        Profile {
            blocks: self.blocks.clone(),
            isolated: 0,
        }
    }

    /// Expands the profile back into a non-increasing list of demands.
    pub fn to_values(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total_len());
        for &(d, c) in &self.blocks {
            out.extend(std::iter::repeat_n(d, c));
        }
        out.extend(std::iter::repeat_n(0, self.isolated));
        out
    }

    /// True when the profile is exactly `(d^{d+1}, 2^1)` for some `d >= 3`,
    /// the one excluded family in the connected open characterization.
    pub fn is_d_plus1_2_1(&self) -> bool {
        self.isolated == 0
            && self.blocks.len() == 2
            && self.blocks[1] == (2, 1)
            && self.blocks[0].0 >= 3
            && self.blocks[0].1 == self.blocks[0].0 + 1
    }

    /// True when the profile is exactly `(d^d, 1^1)` for some `d >= 2`
    /// (the star profile of the connected open characterization).
    pub fn is_star_open(&self) -> bool {
        self.isolated == 0
            && self.blocks.len() == 2
            && self.blocks[1] == (1, 1)
            && self.blocks[0].0 >= 2
            && self.blocks[0].1 == self.blocks[0].0
    }

    /// Every blockwise split `sigma = sigma1 + sigma2` where `sigma2` is of the
    /// form `(1^{2a})` or `(d^d, 1^{2a+1})` with `d >= 2`, `a >= 0`. The empty
    /// `sigma2` (a = 0 of the first form) is yielded first, then `(1^{2a})`
    /// with `a` ascending, then `(d^d, 1^{2a+1})` with `d` descending and `a`
    /// ascending. Each split appears exactly once.
    pub fn split_candidates(&self) -> Vec<(Profile, Profile)> {
        let mut out = Vec::new();
        out.push((self.clone(), Profile::empty()));

        let ones = self.count_of(1);
        for alpha in 1..=(ones / 2) {
            let sigma2 = Profile::from_values(&vec![1; 2 * alpha]);
            out.push((self.subtract(&sigma2), sigma2));
        }
        for &(d, c) in &self.blocks {
            if d < 2 || c < d {
                continue;
            }
            let mut alpha = 0;
            while 2 * alpha < ones {
                let mut vals = vec![d; d];
                vals.extend(std::iter::repeat_n(1, 2 * alpha + 1));
                let sigma2 = Profile::from_values(&vals);
                out.push((self.subtract(&sigma2), sigma2));
                alpha += 1;
            }
        }
        out
    }

    /// Blockwise difference; panics if `other` is not dominated by `self`.
    /// Only used internally on splits constructed to be dominated.
    fn subtract(&self, other: &Profile) -> Profile {
        assert!(other.isolated <= self.isolated);
        let mut blocks = Vec::new();
        for &(d, c) in &self.blocks {
            let rem = c - other.count_of(d);
            if rem > 0 {
                blocks.push((d, rem));
            }
        }
        Profile {
            blocks,
            isolated: self.isolated - other.isolated,
        }
    }
}

impl fmt::Display for Profile {
    /// Canonical compact rendering: descending degrees, single spaces,
    /// isolated demands as a trailing `0^k` term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(d, c) in &self.blocks {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{d}^{c}")?;
            first = false;
        }
        if self.isolated > 0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "0^{}", self.isolated)?;
            first = false;
        }
        if first {
            write!(f, "(empty)")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Profile {
    type Err = Error;

    /// Accepts the compact form (`"3^4 2^1"`) or a raw non-increasing list
    /// (`"3,3,3,3,2"`). Compact terms may repeat a degree; duplicates merge.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty profile".into()));
        }
        let values = if text.contains(',') {
            parse_raw(text)?
        } else if text.contains('^') {
            parse_compact(text)?
        } else {
            // a single bare integer is read as a raw list of length one
            parse_raw(text)?
        };
        if values.is_empty() {
            return Err(Error::Parse("empty profile".into()));
        }
        Ok(Profile::from_values(&values))
    }
}

fn parse_int(token: &str) -> Result<usize> {
    let t = token.trim();
    if t.starts_with('-') {
        return Err(Error::Parse(format!("negative entry `{t}`")));
    }
    t.parse::<usize>()
        .map_err(|_| Error::Parse(format!("malformed integer `{t}`")))
}

fn parse_compact(text: &str) -> Result<Vec<usize>> {
    let mut values = Vec::new();
    for term in text.split_whitespace() {
        let Some((d, c)) = term.split_once('^') else {
            return Err(Error::Parse(format!(
                "malformed term `{term}`, expected D^N"
            )));
        };
        let d = parse_int(d)?;
        let c = parse_int(c)?;
        if c == 0 {
            return Err(Error::Parse(format!("term `{term}` has zero count")));
        }
        values.extend(std::iter::repeat_n(d, c));
    }
    Ok(values)
}

fn parse_raw(text: &str) -> Result<Vec<usize>> {
    let mut values = Vec::new();
    for token in text.split(',') {
        values.push(parse_int(token)?);
    }
    for window in values.windows(2) {
        if window[0] < window[1] {
            return Err(Error::Parse(format!(
                "raw list must be non-increasing, got {} before {}",
                window[0], window[1]
            )));
        }
    }
    Ok(values)
}
