//! Counting, enumeration, ranking/unranking and exactly-uniform sampling of
//! realizable maximum-neighborhood-degree profiles.
//!
//! Counts use exact big-integer arithmetic throughout. The five counted
//! families:
//!
//! * `CCon`  — closed model, connected realizations: `2^{n-3}` for `n >= 3`.
//! * `OCon`  — open model, connected: `2^{n-2} - 1` for `n >= 5` plus small cases.
//! * `CGen`  — closed model, any realization: `(2^{n-1} + (-1)^n) / 3`.
//! * `OGenL` — lower bound on the open general count.
//! * `OGenU` — upper bound on the open general count.
//!
//! The open general family has no known closed form; [`ogen_exact`] computes
//! the exact value for small `n` by filtering every non-increasing sequence
//! through the split characterization. That number is artifact-computed, not
//! a published formula.

use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::maxndeg_open::check_general_open;
use crate::profile::Profile;

/// Hard cap for [`enumerate`]; counts explode exponentially past this.
pub const ENUMERATE_CAP: usize = 22;
/// Cap for [`ogen_exact`]: the full sequence space at `n = 12` is already
/// 646646 profiles.
pub const OGEN_EXACT_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    CCon,
    OCon,
    CGen,
    OGenL,
    OGenU,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ccon" => Ok(Family::CCon),
            "ocon" => Ok(Family::OCon),
            "cgen" => Ok(Family::CGen),
            "ogenl" => Ok(Family::OGenL),
            "ogenu" => Ok(Family::OGenU),
            other => Err(Error::Parse(format!(
                "unknown family `{other}` (expected ccon, ocon, cgen, ogenl or ogenu)"
            ))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::CCon => "ccon",
            Family::OCon => "ocon",
            Family::CGen => "cgen",
            Family::OGenL => "ogenl",
            Family::OGenU => "ogenu",
        })
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        num /= BigUint::from(i + 1);
    }
    num
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Number of non-increasing sequences of length `k` on the integers
/// `i..=j`, which is `C(k + j - i, k)`.
pub fn f(i: usize, j: usize, k: usize) -> Result<BigUint> {
    if j < i {
        return Err(Error::InvalidParams(format!(
            "f needs j >= i, got i={i}, j={j}"
        )));
    }
    Ok(binomial(k + j - i, k))
}

/// Number of non-increasing length-`n` sequences on `1..=n-1`.
pub fn s_n(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParams("S_n is defined for n >= 2".into()));
    }
    f(1, n - 1, n)
}

/// Exact count of family members at length `n` (`n >= 2`), straight from the
/// closed forms.
pub fn count(n: usize, family: Family) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "counts are defined for n >= 2, got {n}"
        )));
    }
    Ok(match family {
        Family::CCon => {
            if n == 2 {
                BigUint::one()
            } else {
                pow2(n - 3)
            }
        }
        Family::OCon => match n {
            2 => BigUint::one(),
            3 => BigUint::from(2u32),
            4 => BigUint::from(4u32),
            _ => pow2(n - 2) - BigUint::one(),
        },
        Family::CGen => {
            // (2^{n-1} + (-1)^n) / 3, always an integer
            if n.is_multiple_of(2) {
                (pow2(n - 1) + BigUint::one()) / BigUint::from(3u32)
            } else {
                (pow2(n - 1) - BigUint::one()) / BigUint::from(3u32)
            }
        }
        Family::OGenL => {
            if n == 2 {
                BigUint::one()
            } else {
                // ceil((2^n - 2) / 3) - ceil((n - 4) / 2); the first term
                // simplifies to floor(2^n / 3)
                let main = pow2(n) / BigUint::from(3u32);
                let sub =
                    (n as i64 - 4).div_euclid(2) + i64::from((n as i64 - 4).rem_euclid(2) != 0);
                main - BigUint::from(sub.max(0) as u64)
            }
        }
        Family::OGenU => pow2(n - 1) - BigUint::one(),
    })
}

/// Memoized per-`n` counts, built by the summation/recursion route rather
/// than the closed forms, so the two can be cross-checked.
#[derive(Debug, Clone)]
pub struct CensusTable {
    pub max_n: usize,
    pub ccon: Vec<BigUint>,
    pub ocon: Vec<BigUint>,
    pub cgen: Vec<BigUint>,
    pub ogenl: Vec<BigUint>,
    pub ogenu: Vec<BigUint>,
}

impl CensusTable {
    pub fn build(max_n: usize) -> Self {
        let z = BigUint::zero();
        let mut ccon = vec![z.clone(); max_n + 1];
        let mut ocon = vec![z.clone(); max_n + 1];
        let mut cgen = vec![z.clone(); max_n + 1];
        let mut ogenl = vec![z.clone(); max_n + 1];
        let mut ogenu = vec![z; max_n + 1];
        for n in 2..=max_n {
            ccon[n] = if n == 2 {
                BigUint::one()
            } else {
                (2..n).map(|d| binomial(n - 3, d - 2)).sum()
            };
            ocon[n] = match n {
                2 => BigUint::one(),
                3 => BigUint::from(2u32),
                4 => BigUint::from(4u32),
                _ => (2..n).map(|d| binomial(n - 2, d - 2)).sum(),
            };
            cgen[n] = if n == 2 {
                BigUint::one()
            } else if n == 3 {
                ccon[3].clone()
            } else {
                // a realization either has no 1-demands or sheds one edge
                cgen[n - 2].clone() + ccon[n].clone()
            };
            ogenl[n] = match n {
                2 => BigUint::one(),
                3 => BigUint::from(2u32),
                4 => BigUint::from(5u32),
                _ => ogenl[n - 2].clone() + ocon[n].clone(),
            };
            ogenu[n] = (1..n).map(|d| binomial(n - 1, d - 1)).sum();
        }
        CensusTable {
            max_n,
            ccon,
            ocon,
            cgen,
            ogenl,
            ogenu,
        }
    }

    pub fn count(&self, n: usize, family: Family) -> &BigUint {
        match family {
            Family::CCon => &self.ccon[n],
            Family::OCon => &self.ocon[n],
            Family::CGen => &self.cgen[n],
            Family::OGenL => &self.ogenl[n],
            Family::OGenU => &self.ogenu[n],
        }
    }
}

/// Iterator over all non-increasing sequences of a fixed length on
/// `lo..=hi`, in descending lexicographic order.
struct SequenceIter {
    lo: usize,
    cur: Option<Vec<usize>>,
}

impl SequenceIter {
    fn new(lo: usize, hi: usize, len: usize) -> Self {
        if lo > hi {
            return SequenceIter { lo, cur: None };
        }
        SequenceIter {
            lo,
            cur: Some(vec![hi; len]),
        }
    }
}

impl Iterator for SequenceIter {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        // successor: decrement the rightmost decrementable digit, then raise
        // everything to its right as high as the order allows
        let next = {
            let mut s = out.clone();
            match (0..s.len()).rev().find(|&p| s[p] > self.lo) {
                Some(p) => {
                    s[p] -= 1;
                    let v = s[p];
                    s[p + 1..].fill(v);
                    Some(s)
                }
                None => None,
            }
        };
        self.cur = next;
        Some(out)
    }
}

/// Lazy enumeration of every realizable profile of length `n` in a family,
/// top degree descending, suffixes in descending lexicographic order.
/// Supported families: `CCon`, `OCon`, `CGen` (capped at `n <= 22`).
pub fn enumerate(n: usize, family: Family) -> Result<ProfileEnumeration> {
    match family {
        Family::CCon | Family::OCon | Family::CGen => {}
        other => {
            return Err(Error::InvalidParams(format!(
                "family {other} has no exact enumeration; use `ogen-exact` counting instead"
            )))
        }
    }
    if n < 2 {
        return Err(Error::InvalidParams(
            "enumeration is defined for n >= 2".into(),
        ));
    }
    if n > ENUMERATE_CAP {
        return Err(Error::LimitExceeded(format!(
            "enumeration is capped at n <= {ENUMERATE_CAP}"
        )));
    }
    Ok(ProfileEnumeration::new(n, family))
}

pub struct ProfileEnumeration {
    n: usize,
    family: Family,
    d: usize,
    seq: Option<SequenceIter>,
    star_pending: bool,
    done: bool,
}

impl ProfileEnumeration {
    fn new(n: usize, family: Family) -> Self {
        ProfileEnumeration {
            n,
            family,
            d: n - 1,
            seq: None,
            star_pending: false,
            done: n < 2,
        }
    }

    fn params(&self) -> (usize, usize) {
        // (lo, suffix length) for the current top degree
        match self.family {
            Family::CCon => (2, self.n - self.d - 1),
            Family::OCon => (2, self.n - self.d),
            Family::CGen => (1, self.n - self.d - 1),
            _ => unreachable!(),
        }
    }

    fn prefix_len(&self) -> usize {
        match self.family {
            Family::OCon => self.d,
            _ => self.d + 1,
        }
    }

    fn d_min(&self) -> usize {
        match self.family {
            Family::CGen => 1,
            _ => 2,
        }
    }
}

impl Iterator for ProfileEnumeration {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        if self.n == 2 {
            self.done = true;
            return Some(Profile::new(vec![(1, 2)], 0).unwrap());
        }
        loop {
            if self.seq.is_none() {
                let (lo, len) = self.params();
                self.seq = Some(SequenceIter::new(lo, self.d, len));
                if self.family == Family::OCon && self.d == self.n - 1 {
                    self.star_pending = true; // queued for after this group
                }
            }
            match self.seq.as_mut().unwrap().next() {
                Some(suffix) => {
                    if self.family == Family::OCon
                        && self.d >= 3
                        && suffix.len() == 2
                        && suffix == [self.d, 2]
                    {
                        continue; // the excluded (d^{d+1}, 2^1)
                    }
                    if self.family == Family::CGen {
                        let ones = suffix.iter().filter(|&&v| v == 1).count()
                            + if self.d == 1 { self.prefix_len() } else { 0 };
                        if ones % 2 == 1 {
                            continue;
                        }
                    }
                    let mut values = vec![self.d; self.prefix_len()];
                    values.extend(suffix);
                    return Some(Profile::from_values(&values));
                }
                None => {
                    if self.star_pending {
                        self.star_pending = false;
                        let d = self.n - 1;
                        return Some(Profile::new(vec![(d, d), (1, 1)], 0).unwrap());
                    }
                    if self.d == self.d_min() {
                        self.done = true;
                        return None;
                    }
                    self.d -= 1;
                    self.seq = None;
                }
            }
        }
    }
}

/// Unranks the `rank`-th (0-based) non-increasing sequence of length `len`
/// on `lo..=hi` in descending lexicographic order.
fn unrank_sequence(lo: usize, hi: usize, len: usize, mut rank: BigUint) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    let mut hi = hi;
    for remaining in (0..len).rev() {
        let mut v = hi;
        loop {
            let below = f(lo, v, remaining).expect("lo <= v");
            if rank < below {
                out.push(v);
                hi = v;
                break;
            }
            rank -= below;
            v -= 1;
        }
    }
    out
}

fn profile_with_extra_ones(p: &Profile, extra: usize) -> Profile {
    let mut values = p.to_values();
    values.extend(std::iter::repeat_n(1, extra));
    Profile::from_values(&values)
}

fn unrank_ccon(n: usize, mut rank: BigUint) -> Profile {
    debug_assert!(n >= 3);
    for d in (2..n).rev() {
        let group = binomial(n - 3, d - 2);
        if rank < group {
            let mut values = vec![d; d + 1];
            values.extend(unrank_sequence(2, d, n - d - 1, rank));
            return Profile::from_values(&values);
        }
        rank -= group;
    }
    unreachable!("rank below 2^(n-3)")
}

fn unrank_ocon(n: usize, mut rank: BigUint) -> Profile {
    debug_assert!(n >= 5);
    for d in (2..n).rev() {
        let group = binomial(n - 2, d - 2);
        if rank < group {
            let mut values = vec![d; d];
            values.extend(unrank_sequence(2, d, n - d, rank));
            let p = Profile::from_values(&values);
            if p.is_d_plus1_2_1() {
                // swap the one excluded profile for the one star profile
                let d = n - 1;
                return Profile::new(vec![(d, d), (1, 1)], 0).unwrap();
            }
            return p;
        }
        rank -= group;
    }
    unreachable!("rank below 2^(n-2) - 1")
}

fn unrank_cgen(n: usize, rank: BigUint) -> Profile {
    if n == 2 {
        return Profile::new(vec![(1, 2)], 0).unwrap();
    }
    let no_ones = if n == 3 { BigUint::one() } else { pow2(n - 3) };
    if rank < no_ones {
        unrank_ccon(n, rank)
    } else {
        profile_with_extra_ones(&unrank_cgen(n - 2, rank - no_ones), 2)
    }
}

/// Draws exactly uniformly from a family at length `n`; reuse one sampler
/// for repeated draws. The stream is fully determined by the seed.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn from_seed(seed: u64) -> Self {
        use rand::SeedableRng;
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self, n: usize, family: Family) -> Result<Profile> {
        match family {
            Family::CCon | Family::OCon | Family::CGen => {}
            other => {
                return Err(Error::InvalidParams(format!(
                    "family {other} is a bound, not a sampleable set"
                )))
            }
        }
        if n < 2 {
            return Err(Error::InvalidParams(
                "sampling is defined for n >= 2".into(),
            ));
        }
        if n == 2 {
            return Profile::new(vec![(1, 2)], 0);
        }
        Ok(match family {
            Family::CCon => {
                let rank = self.below(&count(n, Family::CCon)?);
                unrank_ccon(n, rank)
            }
            Family::OCon => match n {
                3 | 4 => {
                    let all: Vec<Profile> = enumerate(n, Family::OCon)?.collect();
                    let rank = self.below(&BigUint::from(all.len()));
                    all[rank.to_usize().unwrap()].clone()
                }
                _ => {
                    let rank = self.below(&count(n, Family::OCon)?);
                    unrank_ocon(n, rank)
                }
            },
            Family::CGen => {
                let rank = self.below(&count(n, Family::CGen)?);
                unrank_cgen(n, rank)
            }
            _ => unreachable!(),
        })
    }

    /// Uniform big integer in `[0, bound)` by rejection on the top bit-window.
    fn below(&mut self, bound: &BigUint) -> BigUint {
        assert!(!bound.is_zero());
        let bits = bound.bits();
        loop {
            let mut bytes = vec![0u8; bits.div_ceil(8) as usize];
            self.rng.fill_bytes(&mut bytes);
            let mut candidate = BigUint::from_bytes_le(&bytes);
            let excess = 8 * bytes.len() as u64 - bits;
            candidate >>= excess;
            if candidate < *bound {
                return candidate;
            }
        }
    }
}

/// One-shot convenience wrapper: same seed, same profile.
pub fn sample(n: usize, family: Family, seed: u64) -> Result<Profile> {
    Sampler::from_seed(seed).sample(n, family)
}

/// All non-increasing sequences of length `n` over `1..=n-1` as profiles,
/// descending lexicographic order. This is the whole search space the
/// censuses carve up; empty for `n < 2`.
pub fn all_profiles(n: usize) -> Vec<Profile> {
    if n < 2 {
        return Vec::new();
    }
    SequenceIter::new(1, n - 1, n)
        .map(|values| Profile::from_values(&values))
        .collect()
}

/// Exact open-model general count at small `n`, computed by filtering the
/// whole sequence space through the split characterization.
pub fn ogen_exact(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParams("counts are defined for n >= 2".into()));
    }
    if n > OGEN_EXACT_CAP {
        return Err(Error::LimitExceeded(format!(
            "exact open-general counting is capped at n <= {OGEN_EXACT_CAP}"
        )));
    }
    let mut count = 0u64;
    for values in SequenceIter::new(1, n - 1, n) {
        if check_general_open(&Profile::from_values(&values)) {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}
