//! Fillings of skew shapes: semistandard tableaux, reverse plane partitions
//! and set-valued tableaux, together with their enumeration, reading words
//! and lattice-word bookkeeping.
//!
//! All three kinds share one representation, [`SetFilling`]: every cell holds
//! a nonempty set of positive integers. SSYT and RPP are the fillings whose
//! sets are singletons and which satisfy the corresponding order conditions.

mod count;
mod enumerate;
mod lattice;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::SkewShape;

pub use count::count_by_content;
pub use enumerate::{enumerate, Fillings};
pub use lattice::{count_lattice_fillings, for_each_lattice_filling};

/// Largest entry representable in an [`EntrySet`].
pub const MAX_ENTRY: u32 = 63;

/// Which family of fillings is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FillingKind {
    /// Semistandard Young tableaux.
    Ssyt,
    /// Reverse plane partitions.
    Rpp,
    /// Set-valued tableaux.
    Svt,
}

impl FillingKind {
    pub fn name(self) -> &'static str {
        match self {
            FillingKind::Ssyt => "SSYT",
            FillingKind::Rpp => "RPP",
            FillingKind::Svt => "SVT",
        }
    }
}

/// A nonempty set of entries in `1..=MAX_ENTRY`, stored as a bit mask
/// (bit `v - 1` for entry `v`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntrySet(u64);

impl EntrySet {
    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=MAX_ENTRY).contains(&v));
        EntrySet(1 << (v - 1))
    }

    pub fn from_values(values: &[u32]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in values {
            if v == 0 {
                return Err(Error::BadFilling("entries must be positive".into()));
            }
            if v > MAX_ENTRY {
                return Err(Error::EntryTooLarge {
                    got: v,
                    max: MAX_ENTRY,
                });
            }
            mask |= 1 << (v - 1);
        }
        if mask == 0 {
            return Err(Error::BadFilling("empty cell".into()));
        }
        Ok(EntrySet(mask))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        debug_assert!(mask != 0);
        EntrySet(mask)
    }

    pub(crate) fn mask(self) -> u64 {
        self.0
    }

    pub fn min(self) -> u32 {
        self.0.trailing_zeros() + 1
    }

    pub fn max(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    // an entry set is never empty, so `is_empty` would be constant
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_ENTRY).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    /// Entries in ascending order.
    pub fn values(self) -> impl DoubleEndedIterator<Item = u32> {
        (1..=MAX_ENTRY).filter(move |&v| self.0 & (1 << (v - 1)) != 0)
    }
}

impl fmt::Debug for EntrySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vals.join(","))
    }
}

/// A filling of a skew shape by nonempty sets, cells in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFilling {
    shape: SkewShape,
    entries: Vec<EntrySet>,
}

impl SetFilling {
    /// Entries listed in row-major cell order.
    pub fn new(shape: SkewShape, entries: Vec<EntrySet>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::BadFilling(format!(
                "{} sets for {} cells",
                entries.len(),
                shape.size()
            )));
        }
        Ok(SetFilling { shape, entries })
    }

    /// Builds a filling from rows of sets, top row first, each row listing
    /// only the cells of the shape in that row.
    pub fn from_rows(shape: SkewShape, rows: &[Vec<Vec<u32>>]) -> Result<Self> {
        let mut entries = Vec::new();
        let outer = shape.outer().clone();
        if rows.len() != outer.len() {
            return Err(Error::BadFilling(format!(
                "{} rows for a shape with {} rows",
                rows.len(),
                outer.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            let width = outer.part(r) - shape.inner().part(r);
            if row.len() != width {
                return Err(Error::BadFilling(format!(
                    "row {} has {} cells, expected {width}",
                    r + 1,
                    row.len()
                )));
            }
            for set in row {
                entries.push(EntrySet::from_values(set)?);
            }
        }
        SetFilling::new(shape, entries)
    }

    /// Singleton rows, as for an SSYT or RPP display.
    pub fn from_value_rows(shape: SkewShape, rows: &[Vec<u32>]) -> Result<Self> {
        let rows: Vec<Vec<Vec<u32>>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| vec![v]).collect())
            .collect();
        SetFilling::from_rows(shape, &rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Sets in row-major cell order.
    pub fn entries(&self) -> &[EntrySet] {
        &self.entries
    }

    /// The set in cell `(row, col)` (1-indexed), if that is a cell.
    pub fn get(&self, row: usize, col: usize) -> Option<EntrySet> {
        cell_index(&self.shape, row, col).map(|i| self.entries[i])
    }

    /// `|T|`, the total number of entries over all cells.
    pub fn total_size(&self) -> usize {
        self.entries.iter().map(|s| s.len()).sum()
    }

    fn check_pairs(
        &self,
        row_ok: impl Fn(EntrySet, EntrySet) -> bool,
        col_ok: impl Fn(EntrySet, EntrySet) -> bool,
    ) -> bool {
        for (r, c) in self.shape.cells() {
            let here = self.get(r, c).expect("cell of shape");
            if let Some(right) = self.get(r, c + 1) {
                if !row_ok(here, right) {
                    return false;
                }
            }
            if let Some(below) = self.get(r + 1, c) {
                if !col_ok(here, below) {
                    return false;
                }
            }
        }
        true
    }

    fn all_singletons(&self) -> bool {
        self.entries.iter().all(|s| s.is_singleton())
    }

    pub fn is_ssyt(&self) -> bool {
        self.all_singletons()
            && self.check_pairs(|a, b| a.max() <= b.min(), |a, b| a.max() < b.min())
    }

    pub fn is_rpp(&self) -> bool {
        self.all_singletons()
            && self.check_pairs(|a, b| a.max() <= b.min(), |a, b| a.max() <= b.min())
    }

    pub fn is_svt(&self) -> bool {
        self.check_pairs(|a, b| a.max() <= b.min(), |a, b| a.max() < b.min())
    }

    pub fn is_valid(&self, kind: FillingKind) -> bool {
        match kind {
            FillingKind::Ssyt => self.is_ssyt(),
            FillingKind::Rpp => self.is_rpp(),
            FillingKind::Svt => self.is_svt(),
        }
    }

    /// Content vector appropriate to `kind`, trailing zeros trimmed: entry
    /// counts for SSYT, the number of columns containing each value for RPP,
    /// and total multiplicities for SVT.
    pub fn content(&self, kind: FillingKind) -> Result<Vec<usize>> {
        if !self.is_valid(kind) {
            return Err(Error::KindMismatch(kind.name()));
        }
        let mut counts: Vec<usize> = Vec::new();
        let mut bump = |v: u32| {
            let i = v as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        };
        match kind {
            FillingKind::Ssyt | FillingKind::Svt => {
                for set in &self.entries {
                    set.values().for_each(&mut bump);
                }
            }
            FillingKind::Rpp => {
                // Columns weakly increase, so a value starts a new run in its
                // column exactly when the cell above holds something else.
                for (r, c) in self.shape.cells() {
                    let v = self.get(r, c).unwrap().min();
                    let above = if r > 1 { self.get(r - 1, c) } else { None };
                    if above.map(|a| a.min()) != Some(v) {
                        bump(v);
                    }
                }
            }
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(counts)
    }

    /// Columns right to left, each top to bottom, each cell largest entry
    /// first.
    pub fn reverse_reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.total_size());
        for (r, c) in reading_order(&self.shape) {
            let set = self.get(r, c).unwrap();
            letters.extend(set.values().rev());
        }
        Word(letters)
    }
}

impl fmt::Debug for SetFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:", self.shape)?;
        let mut i = 0;
        for r in 0..self.shape.outer().len() {
            let width = self.shape.outer().part(r) - self.shape.inner().part(r);
            write!(f, " [")?;
            for j in 0..width {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.entries[i])?;
                i += 1;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Row-major index of cell `(row, col)` within `shape`.
pub(crate) fn cell_index(shape: &SkewShape, row: usize, col: usize) -> Option<usize> {
    if !shape.has_cell(row, col) {
        return None;
    }
    let (outer, inner) = (shape.outer(), shape.inner());
    let before: usize = (0..row - 1).map(|r| outer.part(r) - inner.part(r)).sum();
    Some(before + col - inner.part(row - 1) - 1)
}

/// Cells in reverse reading order: rightmost column first, top to bottom.
pub(crate) fn reading_order(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(shape.size());
    for c in (1..=shape.outer().first()).rev() {
        for r in 1..=shape.outer().len() {
            if shape.has_cell(r, c) {
                cells.push((r, c));
            }
        }
    }
    cells
}

/// A word over the positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    /// Every prefix holds at least as many `a`s as `(a+1)`s, for all `a`.
    pub fn is_lattice(&self) -> bool {
        let mut counts: Vec<usize> = Vec::new();
        for &a in &self.0 {
            let i = a as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
            if i > 0 && counts[i] > counts[i - 1] {
                return false;
            }
        }
        true
    }

    /// `(w_1, w_2, ...)`, trailing zeros trimmed.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.0.iter().copied().max().unwrap_or(0) as usize];
        for &a in &self.0 {
            counts[a as usize - 1] += 1;
        }
        counts
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&a| a > 9) {
            " "
        } else {
            ""
        };
        let text: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&text.join(sep))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    /// Digits run together (`1121322`) or separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = if s.contains([' ', ',']) {
            s.split([' ', ',']).filter(|t| !t.is_empty()).collect()
        } else {
            s.split("").filter(|t| !t.is_empty()).collect()
        };
        let letters = tokens
            .iter()
            .map(|t| match t.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::Parse(format!("bad letter {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn ssyt_display() -> SetFilling {
        SetFilling::from_value_rows(
            shape("5,4,3,2,1/3,1"),
            &[
                vec![2, 4],
                vec![1, 1, 4],
                vec![1, 2, 2],
                vec![3, 4],
                vec![6],
            ],
        )
        .unwrap()
    }

    fn rpp_display() -> SetFilling {
        SetFilling::from_value_rows(
            shape("5,4,3/1,1"),
            &[vec![1, 2, 2, 4], vec![1, 2, 5], vec![1, 2, 2]],
        )
        .unwrap()
    }

    fn svt_display() -> SetFilling {
        SetFilling::from_rows(
            shape("5,4,3/2,1"),
            &[
                vec![vec![1, 2], vec![2, 3, 4], vec![7]],
                vec![vec![3], vec![3, 5], vec![5]],
                vec![vec![2], vec![4, 5, 6], vec![6]],
            ],
        )
        .unwrap()
    }

    #[test]
    fn displayed_ssyt() {
        let t = ssyt_display();
        assert!(t.is_ssyt());
        assert_eq!(
            t.content(FillingKind::Ssyt).unwrap(),
            vec![3, 3, 1, 3, 0, 1]
        );
    }

    #[test]
    fn displayed_rpp() {
        let t = rpp_display();
        assert!(t.is_rpp());
        assert!(!t.is_ssyt());
        assert_eq!(t.content(FillingKind::Rpp).unwrap(), vec![2, 3, 0, 1, 1]);
    }

    #[test]
    fn displayed_svt() {
        let t = svt_display();
        assert!(t.is_svt());
        assert_eq!(t.total_size(), 15);
        let w = t.reverse_reading_word();
        assert_eq!(w.to_string(), "743252153636542");
    }

    #[test]
    fn small_predicates() {
        let one = SetFilling::from_value_rows(shape("1"), &[vec![1]]).unwrap();
        assert!(one.is_ssyt() && one.is_rpp() && one.is_svt());

        let col_same = SetFilling::from_value_rows(shape("1,1"), &[vec![1], vec![1]]).unwrap();
        assert!(!col_same.is_ssyt());
        assert!(col_same.is_rpp());
        assert!(!col_same.is_svt());
        assert_eq!(col_same.content(FillingKind::Rpp).unwrap(), vec![1]);

        let row_down = SetFilling::from_value_rows(shape("2"), &[vec![2, 1]]).unwrap();
        assert!(!row_down.is_rpp());

        let row_same = SetFilling::from_value_rows(shape("2"), &[vec![1, 1]]).unwrap();
        assert!(row_same.is_svt());

        let touching = SetFilling::from_rows(shape("2"), &[vec![vec![1, 2], vec![2]]]).unwrap();
        assert!(touching.is_svt());
        assert!(!touching.is_ssyt());
        assert!(touching.content(FillingKind::Ssyt).is_err());
        assert_eq!(touching.content(FillingKind::Svt).unwrap(), vec![1, 2]);
    }

    #[test]
    fn reading_words() {
        let cell = SetFilling::from_rows(shape("1"), &[vec![vec![1, 3]]]).unwrap();
        assert_eq!(cell.reverse_reading_word().letters(), &[3, 1]);
        let col = SetFilling::from_value_rows(shape("1,1"), &[vec![1], vec![2]]).unwrap();
        assert_eq!(col.reverse_reading_word().letters(), &[1, 2]);
    }

    #[test]
    fn lattice_words() {
        assert!("1121322".parse::<Word>().unwrap().is_lattice());
        assert!(!"121221".parse::<Word>().unwrap().is_lattice());
        assert!(Word::default().is_lattice());
        assert!(!"2".parse::<Word>().unwrap().is_lattice());
    }

    /// Instance-order formulation: the i-th `a+1` comes after the i-th `a`.
    fn lattice_by_instances(w: &[u32]) -> bool {
        let max = w.iter().copied().max().unwrap_or(0);
        for a in 1..max {
            let pos_a: Vec<usize> = (0..w.len()).filter(|&i| w[i] == a).collect();
            let pos_b: Vec<usize> = (0..w.len()).filter(|&i| w[i] == a + 1).collect();
            for (i, &pb) in pos_b.iter().enumerate() {
                match pos_a.get(i) {
                    Some(&pa) if pa < pb => {}
                    _ => return false,
                }
            }
        }
        true
    }

    #[test]
    fn lattice_agrees_with_instance_definition() {
        let mut words: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..10 {
            let mut next = Vec::new();
            for w in &words {
                for a in 1..=3 {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
            for w in &next {
                assert_eq!(
                    Word(w.clone()).is_lattice(),
                    lattice_by_instances(w),
                    "{w:?}"
                );
            }
            words = next;
        }
    }

    #[test]
    fn entry_sets() {
        let s = EntrySet::from_values(&[4, 2, 7]).unwrap();
        assert_eq!((s.min(), s.max(), s.len()), (2, 7, 3));
        assert_eq!(s.values().collect::<Vec<_>>(), vec![2, 4, 7]);
        assert!(EntrySet::from_values(&[]).is_err());
        assert!(EntrySet::from_values(&[0]).is_err());
        assert!(EntrySet::from_values(&[64]).is_err());
    }

    #[test]
    fn filling_shape_checks() {
        let s = shape("2,1");
        assert!(SetFilling::from_value_rows(s.clone(), &[vec![1], vec![2]]).is_err());
        assert!(SetFilling::new(s, vec![]).is_err());
    }
}
