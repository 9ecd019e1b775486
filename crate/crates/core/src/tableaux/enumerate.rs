use crate::error::{Error, Result};
use crate::shapes::SkewShape;

use super::{cell_index, EntrySet, FillingKind, SetFilling, MAX_ENTRY};

/// Lazily enumerates every filling of `shape` of the given kind with entries
/// in `1..=max_entry` (and `|T| <= max_total_size` when given).
///
/// Cells are assigned in row-major order and each cell's candidates are
/// tried in ascending order (singletons by value, sets by bit mask), so the
/// stream order is deterministic.
pub fn enumerate(
    shape: &SkewShape,
    kind: FillingKind,
    max_entry: u32,
    max_total_size: Option<usize>,
) -> Result<Fillings> {
    if max_entry == 0 {
        return Err(Error::ZeroMaxEntry);
    }
    if max_entry > MAX_ENTRY {
        return Err(Error::EntryTooLarge {
            got: max_entry,
            max: MAX_ENTRY,
        });
    }
    let cells = shape.cells();
    let left = cells
        .iter()
        .map(|&(r, c)| {
            if c > 1 {
                cell_index(shape, r, c - 1)
            } else {
                None
            }
        })
        .collect();
    let up = cells
        .iter()
        .map(|&(r, c)| {
            if r > 1 {
                cell_index(shape, r - 1, c)
            } else {
                None
            }
        })
        .collect();
    Ok(Fillings {
        shape: shape.clone(),
        kind,
        max_entry,
        cap: max_total_size,
        left,
        up,
        stack: Vec::with_capacity(cells.len()),
        total: 0,
        started: false,
        done: false,
    })
}

/// Stream returned by [`enumerate`].
#[derive(Debug, Clone)]
pub struct Fillings {
    shape: SkewShape,
    kind: FillingKind,
    max_entry: u32,
    cap: Option<usize>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    stack: Vec<EntrySet>,
    total: usize,
    started: bool,
    done: bool,
}

impl Fillings {
    fn cells(&self) -> usize {
        self.left.len()
    }

    /// Smallest admissible candidate for position `pos` strictly after
    /// `after` in candidate order.
    fn candidate(&self, pos: usize, after: Option<EntrySet>) -> Option<EntrySet> {
        let left = self.left[pos].map(|i| self.stack[i]);
        let up = self.up[pos].map(|i| self.stack[i]);
        let strict_up = matches!(self.kind, FillingKind::Ssyt | FillingKind::Svt);
        let mut lo = 1;
        if let Some(l) = left {
            lo = lo.max(l.max());
        }
        if let Some(u) = up {
            lo = lo.max(if strict_up { u.max() + 1 } else { u.max() });
        }
        if lo > self.max_entry {
            return None;
        }
        // room left for this cell under the size cap
        let remaining_after = self.cells() - pos - 1;
        let budget = match self.cap {
            Some(cap) => cap.checked_sub(self.total + remaining_after)?,
            None => usize::MAX,
        };
        if budget == 0 {
            return None;
        }
        match self.kind {
            FillingKind::Ssyt | FillingKind::Rpp => {
                let start = match after {
                    Some(prev) => prev.max() + 1,
                    None => lo,
                };
                (start.max(lo) <= self.max_entry).then(|| EntrySet::singleton(start.max(lo)))
            }
            FillingKind::Svt => {
                let width = self.max_entry - lo + 1;
                let limit: u64 = if width >= 64 {
                    u64::MAX
                } else {
                    (1u64 << width) - 1
                };
                let mut sub = match after {
                    Some(prev) => (prev.mask() >> (lo - 1)) + 1,
                    None => 1,
                };
                while sub <= limit && sub != 0 {
                    if sub.count_ones() as usize <= budget {
                        return Some(EntrySet::from_mask(sub << (lo - 1)));
                    }
                    sub += 1;
                }
                None
            }
        }
    }

    fn push(&mut self, set: EntrySet) {
        self.total += set.len();
        self.stack.push(set);
    }

    fn search(&mut self, mut resume: bool) -> bool {
        loop {
            if resume {
                let Some(prev) = self.stack.pop() else {
                    return false;
                };
                self.total -= prev.len();
                if let Some(next) = self.candidate(self.stack.len(), Some(prev)) {
                    self.push(next);
                    resume = false;
                }
            } else if self.stack.len() == self.cells() {
                return true;
            } else if let Some(first) = self.candidate(self.stack.len(), None) {
                self.push(first);
            } else {
                resume = true;
            }
        }
    }
}

impl Iterator for Fillings {
    type Item = SetFilling;

    fn next(&mut self) -> Option<SetFilling> {
        if self.done {
            return None;
        }
        let resume = self.started;
        self.started = true;
        if self.search(resume) {
            Some(SetFilling {
                shape: self.shape.clone(),
                entries: self.stack.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    /// Generate-and-filter over all assignments, no pruning.
    fn naive(
        shape: &SkewShape,
        kind: FillingKind,
        max_entry: u32,
        cap: Option<usize>,
    ) -> Vec<SetFilling> {
        let n = shape.size();
        let choices: Vec<EntrySet> = match kind {
            FillingKind::Svt => (1..(1u64 << max_entry)).map(EntrySet::from_mask).collect(),
            _ => (1..=max_entry).map(EntrySet::singleton).collect(),
        };
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let entries: Vec<EntrySet> = idx.iter().map(|&i| choices[i]).collect();
            let t = SetFilling::new(shape.clone(), entries).unwrap();
            if t.is_valid(kind) && cap.is_none_or(|c| t.total_size() <= c) {
                out.push(t);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                idx[i] += 1;
                if idx[i] < choices.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn spec_counts() {
        assert_eq!(
            enumerate(&shape("2,1"), FillingKind::Ssyt, 2, None)
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            enumerate(&shape("2,2/1"), FillingKind::Rpp, 2, None)
                .unwrap()
                .count(),
            5
        );
        let svt: Vec<_> = enumerate(&shape("1"), FillingKind::Svt, 2, None)
            .unwrap()
            .collect();
        let sets: Vec<Vec<u32>> = svt
            .iter()
            .map(|t| t.entries()[0].values().collect())
            .collect();
        assert_eq!(sets, vec![vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn rejects_zero_alphabet() {
        assert_eq!(
            enumerate(&shape("1"), FillingKind::Ssyt, 0, None).unwrap_err(),
            Error::ZeroMaxEntry
        );
    }

    #[test]
    fn empty_shape_has_one_filling() {
        for kind in [FillingKind::Ssyt, FillingKind::Rpp, FillingKind::Svt] {
            assert_eq!(
                enumerate(&shape("2,1/2,1"), kind, 3, None).unwrap().count(),
                1
            );
        }
    }

    #[test]
    fn pruning_is_invisible() {
        let shapes = ["2,1", "2,2/1", "3,1/1", "2,2", "3,2,1/1", "1,1,1", "3"];
        for s in shapes {
            let sh = shape(s);
            for kind in [FillingKind::Ssyt, FillingKind::Rpp] {
                for m in 1..=3 {
                    let fast: Vec<_> = enumerate(&sh, kind, m, None).unwrap().collect();
                    let slow = naive(&sh, kind, m, None);
                    assert_eq!(fast.len(), slow.len(), "{s} {kind:?} {m}");
                    let a: HashSet<_> = fast.into_iter().collect();
                    let b: HashSet<_> = slow.into_iter().collect();
                    assert_eq!(a, b);
                }
            }
        }
        for s in ["2,1", "2,2/1", "1,1", "2"] {
            let sh = shape(s);
            for m in 1..=3 {
                for cap in [None, Some(sh.size() + 1), Some(sh.size())] {
                    let fast: Vec<_> = enumerate(&sh, FillingKind::Svt, m, cap).unwrap().collect();
                    let slow = naive(&sh, FillingKind::Svt, m, cap);
                    assert_eq!(fast.len(), slow.len(), "{s} {m} {cap:?}");
                    let a: HashSet<_> = fast.into_iter().collect();
                    let b: HashSet<_> = slow.into_iter().collect();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn stream_order_is_deterministic_and_early_stop_is_fine() {
        let sh = shape("3,2/1");
        let a: Vec<_> = enumerate(&sh, FillingKind::Rpp, 3, None)
            .unwrap()
            .take(7)
            .collect();
        let b: Vec<_> = enumerate(&sh, FillingKind::Rpp, 3, None)
            .unwrap()
            .take(7)
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 7);
    }

    #[test]
    fn inclusions_between_kinds() {
        for s in ["2,1", "3,2,1/1", "2,2", "3,3/1"] {
            let sh = shape(s);
            for m in 1..=3 {
                let ssyt: HashSet<_> = enumerate(&sh, FillingKind::Ssyt, m, None)
                    .unwrap()
                    .collect();
                let rpp: HashSet<_> = enumerate(&sh, FillingKind::Rpp, m, None).unwrap().collect();
                let svt_min: HashSet<_> = enumerate(&sh, FillingKind::Svt, m, Some(sh.size()))
                    .unwrap()
                    .collect();
                assert!(ssyt.is_subset(&rpp));
                assert_eq!(ssyt, svt_min);
                for t in &ssyt {
                    assert_eq!(
                        t.content(FillingKind::Ssyt).unwrap().iter().sum::<usize>(),
                        sh.size()
                    );
                }
            }
        }
    }
}
