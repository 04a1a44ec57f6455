use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (trailing zeros trimmed).
///
/// The empty partition indexes the unit class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, trimming trailing zeros.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// One row of length `a`, i.e. the index of the special class `σ_a`.
    pub fn row(a: u32) -> Self {
        if a == 0 {
            Self::empty()
        } else {
            Partition(vec![a])
        }
    }

    /// One column of height `h`, the index of `σ_{1^h}`.
    pub fn column(h: usize) -> Self {
        Partition(vec![1; h])
    }

    /// `k` rows of length `w`.
    pub fn rectangle(k: usize, w: u32) -> Self {
        if w == 0 {
            Self::empty()
        } else {
            Partition(vec![w; k])
        }
    }

    pub(crate) fn from_raw(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`, the codimension of `σ_λ`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Whether the diagram fits inside `rows × cols`.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.0.len() <= rows && self.part(0) <= cols
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `weight` fitting in a `rows × cols` box, in
/// lexicographically decreasing order.
pub fn partitions_in_box(weight: usize, rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rem: usize, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        let hi = max.min(rem as u32);
        for p in (1..=hi).rev() {
            if (p as usize) * rows < rem {
                break;
            }
            cur.push(p);
            go(rem - p as usize, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, rows, cols, &mut Vec::new(), &mut out);
    out
}
