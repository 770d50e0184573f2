use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a complex may carry.
pub const CAPACITY: usize = 64;

/// A finite vertex set stored as a 64-bit mask. Labels are 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Simplex(u64);

impl Simplex {
    pub const EMPTY: Simplex = Simplex(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v >= CAPACITY {
                return Err(Error::Capacity(v));
            }
            if bits & (1 << v) != 0 {
                return Err(Error::DuplicateVertex(v));
            }
            bits |= 1 << v;
        }
        Ok(Simplex(bits))
    }

    /// Builds from 1-based labels.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        let mut vs = Vec::new();
        for l in labels {
            if l == 0 {
                return Err(Error::PreconditionViolated("labels are 1-based".into()));
            }
            vs.push(l - 1);
        }
        Self::from_vertices(vs)
    }

    pub const fn from_bits(bits: u64) -> Self {
        Simplex(bits)
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn range(n: usize) -> Self {
        assert!(n <= CAPACITY);
        if n == CAPACITY {
            Simplex(u64::MAX)
        } else {
            Simplex((1u64 << n) - 1)
        }
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension; the empty simplex has dimension -1.
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub const fn contains(self, v: usize) -> bool {
        v < CAPACITY && self.0 & (1 << v) != 0
    }

    pub const fn is_subset_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Simplex) -> Simplex {
        Simplex(self.0 | other.0)
    }

    pub const fn intersection(self, other: Simplex) -> Simplex {
        Simplex(self.0 & other.0)
    }

    pub const fn difference(self, other: Simplex) -> Simplex {
        Simplex(self.0 & !other.0)
    }

    pub const fn with(self, v: usize) -> Simplex {
        Simplex(self.0 | (1 << v))
    }

    pub const fn without(self, v: usize) -> Simplex {
        Simplex(self.0 & !(1 << v))
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Applies a vertex map; `None` if the image collides or leaves capacity.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Option<Simplex> {
        let mut bits = 0u64;
        for v in self.vertices() {
            let w = f(v);
            if w >= CAPACITY || bits & (1 << w) != 0 {
                return None;
            }
            bits |= 1 << w;
        }
        Some(Simplex(bits))
    }

    /// All subsets of size `k`, in colexicographic order.
    pub fn subsets(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }

    /// Space-separated 1-based labels, e.g. `2 4 8`.
    pub fn one_based(self) -> String {
        let mut s = String::new();
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&(v + 1).to_string());
        }
        s
    }
}

impl Ord for Simplex {
    /// Lexicographic order on the sorted vertex lists (shorter prefix first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.one_based())
    }
}

/// Ascending iterator over the vertices of a [`Simplex`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// k-subsets of a vertex set, via Gosper's hack on the compressed index space.
pub struct KSubsets {
    support: Vec<usize>,
    state: Option<u64>,
    limit: u64,
}

impl KSubsets {
    fn new(set: Simplex, k: usize) -> Self {
        let support = set.to_vec();
        let m = support.len();
        let state = if k > m {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
        };
        let limit = if m == 64 { u64::MAX } else { 1u64 << m };
        KSubsets { support, state, limit }
    }

    fn expand(&self, compact: u64) -> Simplex {
        let mut bits = 0u64;
        let mut c = compact;
        while c != 0 {
            let i = c.trailing_zeros() as usize;
            bits |= 1 << self.support[i];
            c &= c - 1;
        }
        Simplex(bits)
    }
}

impl Iterator for KSubsets {
    type Item = Simplex;

    fn next(&mut self) -> Option<Simplex> {
        let cur = self.state?;
        let out = self.expand(cur);
        self.state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 || (self.limit != u64::MAX && r >= self.limit) {
                None
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                if self.limit != u64::MAX && next >= self.limit {
                    None
                } else {
                    Some(next)
                }
            }
        };
        Some(out)
    }
}

/// Binomial coefficient in u128; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
