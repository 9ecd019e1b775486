//! Partitions, skew shapes and the small amount of diagram geometry the
//! rest of the crate needs.
//!
//! Cells are addressed as 1-indexed `(row, column)` pairs with row 1 at the
//! top (English notation).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored without trailing zeros.
///
/// The total order is graded: smaller sizes first, and within one size the
/// lexicographically larger sequence first, so `(2)` precedes `(1,1)`.
/// Every map keyed by partitions in this crate iterates in this order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(k)`.
    pub fn row(k: usize) -> Self {
        Self::from_unsorted(vec![k])
    }

    /// The single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// True iff `inner_i <= self_i` for every `i`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `(n, n-1, ..., 1)`; the empty partition for `n = 0`.
    pub fn staircase(n: usize) -> Partition {
        Partition {
            parts: (1..=n).rev().collect(),
        }
    }

    /// Whether this is a staircase `(n, n-1, ..., 1)` for some `n >= 0`.
    pub fn is_staircase(&self) -> bool {
        *self == Partition::staircase(self.len())
    }

    /// All partitions of `n`, in the crate's canonical order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`, in canonical order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All subpartitions of `self`, each once, in canonical (graded) order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_between(
            &Partition::empty(),
            self,
            0,
            usize::MAX,
            &mut current,
            &mut out,
        );
        out.sort();
        out
    }

    /// All `kappa` with `inner ⊆ kappa ⊆ self`, in canonical order.
    pub fn interval_from(&self, inner: &Partition) -> Vec<Partition> {
        if !self.contains(inner) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_between(inner, self, 0, usize::MAX, &mut current, &mut out);
        out.sort();
        out
    }

    /// Removes the first part; `(nu_2, nu_3, ...)`.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Multiplicity of part value `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

fn collect_between(
    inner: &Partition,
    outer: &Partition,
    row: usize,
    cap: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == outer.len() {
        out.push(Partition::from_unsorted(current.clone()));
        return;
    }
    let lo = inner.part(row);
    let hi = outer.part(row).min(cap);
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        current.push(v);
        collect_between(inner, outer, row + 1, v, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `4,3,2,1`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `lambda/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Whether `(row, col)` (1-indexed) is a cell of the shape.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.part(row - 1) && col <= self.outer.part(row - 1)
    }

    /// Cells in row-major order, 1-indexed.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for r in 0..self.outer.len() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                cells.push((r + 1, c));
            }
        }
        cells
    }

    /// The transposed shape `outer^T / inner^T`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    pub fn classify_strip(&self) -> StripKind {
        let mut rows = std::collections::HashSet::new();
        let mut cols = std::collections::HashSet::new();
        let mut horizontal = true;
        let mut vertical = true;
        for (r, c) in self.cells() {
            vertical &= rows.insert(r);
            horizontal &= cols.insert(c);
        }
        StripKind {
            horizontal,
            vertical,
            rook: horizontal && vertical,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// Parses `outer/inner` (or just `outer`).
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Strip classification of a skew shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripKind {
    /// No column holds two cells.
    pub horizontal: bool,
    /// No row holds two cells.
    pub vertical: bool,
    /// Both of the above.
    pub rook: bool,
}

/// The corner-joined shape with `nu` in the upper right and `mu` in the
/// lower left, the top right corner of `mu` touching the bottom left corner
/// of `nu`.
pub fn star_join(nu: &Partition, mu: &Partition) -> SkewShape {
    let shift = mu.first();
    let mut outer: Vec<usize> = nu.parts().iter().map(|&p| p + shift).collect();
    outer.extend_from_slice(mu.parts());
    let inner = vec![shift; nu.len()];
    // Both sequences are weakly decreasing by construction.
    SkewShape {
        outer: Partition::from_unsorted(outer),
        inner: Partition::from_unsorted(inner),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[4, 3, 2, 1]).conjugate(), p(&[4, 3, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn staircases() {
        assert_eq!(Partition::staircase(3), p(&[3, 2, 1]));
        assert_eq!(Partition::staircase(0), Partition::empty());
        assert_eq!(Partition::staircase(1), p(&[1]));
        assert!(p(&[2, 1]).is_staircase());
        assert!(Partition::empty().is_staircase());
        assert!(!p(&[2, 2]).is_staircase());
    }

    #[test]
    fn containment() {
        assert!(p(&[3, 2, 1]).contains(&p(&[2, 1])));
        assert!(!p(&[3, 2, 1]).contains(&p(&[1, 1, 1, 1])));
        assert!(p(&[2, 2]).contains(&p(&[2, 1])));
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn subpartition_lists() {
        assert_eq!(Partition::empty().subpartitions(), vec![Partition::empty()]);
        assert_eq!(
            p(&[1, 1]).subpartitions(),
            vec![Partition::empty(), p(&[1]), p(&[1, 1])]
        );
        assert_eq!(
            p(&[2, 1]).subpartitions(),
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]
        );
        let counts: Vec<usize> = (1..=4)
            .map(|n| Partition::staircase(n).subpartitions().len())
            .collect();
        assert_eq!(counts, vec![2, 5, 14, 42]);
    }

    #[test]
    fn canonical_order_is_graded_then_lex_descending() {
        let all = Partition::all_up_to(3);
        let text: Vec<String> = all.iter().map(|q| q.to_string()).collect();
        assert_eq!(text, vec!["", "1", "2", "1,1", "3", "2,1", "1,1,1"]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn star_join_examples() {
        let s = star_join(&p(&[2, 1]), &p(&[4]));
        assert_eq!(s, SkewShape::new(p(&[6, 5, 4]), p(&[4, 4])).unwrap());
        let s = star_join(&p(&[3, 1]), &Partition::empty());
        assert_eq!(s, SkewShape::straight(p(&[3, 1])));
        let s = star_join(&p(&[1]), &p(&[1]));
        assert_eq!(s, SkewShape::new(p(&[2, 1]), p(&[1])).unwrap());
    }

    #[test]
    fn strips() {
        let single = SkewShape::new(p(&[2, 2]), p(&[2, 1])).unwrap();
        assert_eq!(
            single.classify_strip(),
            StripKind {
                horizontal: true,
                vertical: true,
                rook: true
            }
        );
        let column = SkewShape::new(p(&[2, 2]), p(&[1, 1])).unwrap();
        assert_eq!(
            column.classify_strip(),
            StripKind {
                horizontal: false,
                vertical: true,
                rook: false
            }
        );
        for k in 1..=5 {
            for sigma in Partition::row(k).subpartitions() {
                let shape = SkewShape::new(Partition::row(k), sigma.clone()).unwrap();
                let expect = sigma.first() + 1 >= k;
                assert_eq!(shape.classify_strip().rook, expect, "k={k} sigma={sigma}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let s: SkewShape = "3,2,1/1".parse().unwrap();
        assert_eq!(s.to_string(), "3,2,1/1");
        let e: Partition = "".parse().unwrap();
        assert!(e.is_empty());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1/2".parse::<SkewShape>().is_err());
    }

    #[test]
    fn cells_are_one_indexed_row_major() {
        let s: SkewShape = "3,2/1".parse().unwrap();
        assert_eq!(s.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert!(s.has_cell(1, 2));
        assert!(!s.has_cell(1, 1));
    }
}
