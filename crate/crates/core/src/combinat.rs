//! k-subsets of `{0, …, n−1}` and the bookkeeping around them.
//!
//! A [`MultiIndex`] is stored as a bit mask, so `n` is limited to 64. Every
//! enumeration is in lexicographic order of the sorted entries, which is the
//! coordinate order of Plücker vectors throughout the crate.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_AMBIENT: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    n: usize,
    mask: u64,
}

impl MultiIndex {
    /// Builds from strictly increasing entries below `n`.
    pub fn new(n: usize, entries: &[usize]) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::InvalidParams(format!("ambient {n} exceeds {MAX_AMBIENT}")));
        }
        let mut mask = 0u64;
        let mut prev: Option<usize> = None;
        for &e in entries {
            if e >= n {
                return Err(Error::IndexOutOfRange { index: e, bound: n });
            }
            if prev.is_some_and(|p| p >= e) {
                return Err(Error::InvalidParams(format!(
                    "entries {entries:?} are not strictly increasing"
                )));
            }
            prev = Some(e);
            mask |= 1 << e;
        }
        Ok(MultiIndex { n, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_AMBIENT || (n < 64 && mask >> n != 0) {
            return Err(Error::InvalidParams(format!(
                "mask {mask:#x} does not fit ambient {n}"
            )));
        }
        Ok(MultiIndex { n, mask })
    }

    /// `{0, …, k−1}`.
    pub fn initial(n: usize, k: usize) -> Result<Self> {
        let entries: Vec<usize> = (0..k).collect();
        MultiIndex::new(n, &entries)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask >> v & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.n).filter(move |&i| mask >> i & 1 == 1)
    }

    pub fn entries(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of entries smaller than `v`: the 0-based slot `v` occupies
    /// (or would occupy) in the sorted list.
    pub fn position(&self, v: usize) -> usize {
        (self.mask & ((1u64 << v) - 1)).count_ones() as usize
    }

    pub fn complement(&self) -> MultiIndex {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        MultiIndex {
            n: self.n,
            mask: full & !self.mask,
        }
    }

    pub fn with(&self, v: usize) -> MultiIndex {
        debug_assert!(v < self.n);
        MultiIndex {
            n: self.n,
            mask: self.mask | 1 << v,
        }
    }

    pub fn without(&self, v: usize) -> MultiIndex {
        MultiIndex {
            n: self.n,
            mask: self.mask & !(1u64 << v),
        }
    }

    /// Every entry shifted up by `offset`, in ambient `n`.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<MultiIndex> {
        let entries: Vec<usize> = self.iter().map(|e| e + offset).collect();
        MultiIndex::new(n, &entries)
    }

    pub fn is_subset_of(&self, other: &MultiIndex) -> bool {
        self.mask & !other.mask == 0
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All k-subsets of `{0, …, n−1}` in lexicographic order.
pub fn subsets_lex(n: usize, k: usize) -> Result<Vec<MultiIndex>> {
    if k > n {
        return Err(Error::InvalidParams(format!("k = {k} exceeds n = {n}")));
    }
    if n > MAX_AMBIENT {
        return Err(Error::InvalidParams(format!("ambient {n} exceeds {MAX_AMBIENT}")));
    }
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        let mask = current.iter().fold(0u64, |m, &e| m | 1 << e);
        out.push(MultiIndex { n, mask });
        // rightmost entry that can still advance
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Position of `index` in `subsets_lex(n, index.len())`.
pub fn rank_lex(index: &MultiIndex) -> usize {
    let n = index.ambient();
    let k = index.len();
    let mut rank = 0u64;
    let mut next_free = 0;
    for (i, c) in index.iter().enumerate() {
        for j in next_free..c {
            rank += binomial(n - 1 - j, k - 1 - i);
        }
        next_free = c + 1;
    }
    rank as usize
}

pub fn unrank_lex(n: usize, k: usize, mut rank: usize) -> Result<MultiIndex> {
    let total = binomial(n, k) as usize;
    if k > n || rank >= total {
        return Err(Error::IndexOutOfRange { index: rank, bound: total });
    }
    let mut entries = Vec::with_capacity(k);
    let mut start = 0;
    for i in 0..k {
        let mut c = start;
        loop {
            let block = binomial(n - 1 - c, k - 1 - i) as usize;
            if rank < block {
                break;
            }
            rank -= block;
            c += 1;
        }
        entries.push(c);
        start = c + 1;
    }
    MultiIndex::new(n, &entries)
}

/// Sign of the permutation of `[n]` that lists `I` followed by its sorted
/// complement.
pub fn complement_sign(index: &MultiIndex) -> i8 {
    // inversions: each entry c at slot i jumps over c − i complement entries
    let inversions: usize = index.iter().enumerate().map(|(i, c)| c - i).sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Size of the symmetric difference.
pub fn hamming_distance(a: &MultiIndex, b: &MultiIndex) -> Result<usize> {
    if a.ambient() != b.ambient() {
        return Err(Error::AmbientMismatch(a.ambient(), b.ambient()));
    }
    Ok((a.mask() ^ b.mask()).count_ones() as usize)
}

/// Same-size subsets reachable from `center` by at most `radius_swaps`
/// element exchanges (symmetric difference at most `2·radius_swaps`). The
/// radius-1 ball indexes the monomials of the tangent space to the
/// Grassmannian at a coordinate plane.
pub fn hamming_ball(center: &MultiIndex, radius_swaps: usize) -> Vec<MultiIndex> {
    subsets_lex(center.ambient(), center.len())
        .expect("center is a valid subset")
        .into_iter()
        .filter(|j| (center.mask() ^ j.mask()).count_ones() as usize <= 2 * radius_swaps)
        .collect()
}
