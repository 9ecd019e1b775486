use crate::shapes::{Partition, SkewShape};

use super::{cell_index, reading_order, EntrySet, SetFilling};

/// Calls `visit` on every set-valued tableau of `shape` whose reverse
/// reading word is a lattice word of content exactly `content`.
///
/// Cells are filled in reading order (rightmost column first, top to
/// bottom), so the row and column conditions against already-placed
/// neighbours and the running lattice counts can be checked on the fly.
/// Entries never exceed `ℓ(content)`.
pub fn for_each_lattice_filling(
    shape: &SkewShape,
    content: &Partition,
    mut visit: impl FnMut(&SetFilling),
) {
    let row_major: Vec<usize> = reading_order(shape)
        .into_iter()
        .map(|(r, c)| cell_index(shape, r, c).unwrap())
        .collect();
    Search::new(shape, content).run(0, &mut |masks: &[u64]| {
        let mut entries = vec![EntrySet::from_mask(1); masks.len()];
        for (pos, &mask) in masks.iter().enumerate() {
            entries[row_major[pos]] = EntrySet::from_mask(mask);
        }
        let t = SetFilling::new(shape.clone(), entries).expect("sized to shape");
        visit(&t);
    });
}

/// Number of lattice fillings of `shape` with content `content`.
pub fn count_lattice_fillings(shape: &SkewShape, content: &Partition) -> u128 {
    let mut n = 0u128;
    Search::new(shape, content).run(0, &mut |_| n += 1);
    n
}

struct Search {
    /// Reading-order position of the right and upper neighbours.
    right: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    target: Vec<usize>,
    counts: Vec<usize>,
    placed: usize,
    total: usize,
    masks: Vec<u64>,
}

impl Search {
    fn new(shape: &SkewShape, content: &Partition) -> Self {
        let order = reading_order(shape);
        let pos_of = |r: usize, c: usize| order.iter().position(|&rc| rc == (r, c));
        let right = order
            .iter()
            .map(|&(r, c)| {
                if shape.has_cell(r, c + 1) {
                    pos_of(r, c + 1)
                } else {
                    None
                }
            })
            .collect();
        let up = order
            .iter()
            .map(|&(r, c)| {
                if r > 1 && shape.has_cell(r - 1, c) {
                    pos_of(r - 1, c)
                } else {
                    None
                }
            })
            .collect();
        Search {
            right,
            up,
            target: content.parts().to_vec(),
            counts: vec![0; content.len()],
            placed: 0,
            total: content.size(),
            masks: Vec::with_capacity(order.len()),
        }
    }

    /// Adds the letters of `mask`, largest first; on failure leaves the
    /// counts untouched.
    fn apply(&mut self, mask: u64) -> bool {
        let mut added: Vec<usize> = Vec::new();
        let mut ok = true;
        for bit in (0..self.target.len()).rev() {
            if mask & (1 << bit) == 0 {
                continue;
            }
            let over = self.counts[bit] == self.target[bit];
            let unbalanced = bit > 0 && self.counts[bit] + 1 > self.counts[bit - 1];
            if over || unbalanced {
                ok = false;
                break;
            }
            self.counts[bit] += 1;
            added.push(bit);
        }
        if !ok {
            for bit in added {
                self.counts[bit] -= 1;
            }
            return false;
        }
        self.placed += mask.count_ones() as usize;
        true
    }

    fn undo(&mut self, mask: u64) {
        for bit in 0..self.target.len() {
            if mask & (1 << bit) != 0 {
                self.counts[bit] -= 1;
            }
        }
        self.placed -= mask.count_ones() as usize;
    }

    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[u64])) {
        let cells = self.right.len();
        if pos == cells {
            if self.placed == self.total {
                visit(&self.masks);
            }
            return;
        }
        // every later cell needs at least one letter
        if self.total - self.placed < cells - pos {
            return;
        }
        let letters = self.target.len();
        if letters == 0 {
            return;
        }
        // entries allowed: lo..=hi (1-indexed values)
        let lo = self.up[pos].map_or(1, |u| highest(self.masks[u]) + 1);
        let hi = self.right[pos].map_or(letters, |r| lowest(self.masks[r]).min(letters));
        if lo > hi {
            return;
        }
        let range: u64 = ((1u64 << (hi - lo + 1)) - 1) << (lo - 1);
        // ascending nonempty submasks of `range`
        let mut sub = range & range.wrapping_neg();
        loop {
            if self.apply(sub) {
                self.masks.push(sub);
                self.run(pos + 1, visit);
                self.masks.pop();
                self.undo(sub);
            }
            if sub == range {
                break;
            }
            sub = next_submask(sub, range);
        }
    }
}

/// Value (1-indexed) of the highest set bit.
fn highest(mask: u64) -> usize {
    64 - mask.leading_zeros() as usize
}

fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize + 1
}

fn next_submask(current: u64, range: u64) -> u64 {
    // Incrementing within the bits of `range` walks its submasks in
    // ascending numeric order.
    (current | !range).wrapping_add(1) & range
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::star_join;
    use crate::tableaux::{enumerate, FillingKind};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn brute(shape: &SkewShape, content: &Partition) -> u128 {
        let m = content.len().max(1) as u32;
        enumerate(shape, FillingKind::Svt, m, Some(content.size()))
            .unwrap()
            .filter(|t| {
                let w = t.reverse_reading_word();
                let mut c = w.content();
                c.resize(content.len(), 0);
                w.is_lattice() && c == content.parts()
            })
            .count() as u128
    }

    #[test]
    fn small_examples() {
        let two = star_join(&p("1"), &p("1"));
        assert_eq!(count_lattice_fillings(&two, &p("2")), 1);
        assert_eq!(count_lattice_fillings(&two, &p("2,1")), 1);
        assert_eq!(
            count_lattice_fillings(&SkewShape::straight(p("1")), &p("1")),
            1
        );
        let mut seen = Vec::new();
        for_each_lattice_filling(&two, &p("2,1"), |t| seen.push(format!("{t:?}")));
        assert_eq!(seen.len(), 1);
    }

    #[test]
    fn agrees_with_filtered_enumeration() {
        let shapes = [
            "2,1/1",
            "2,1",
            "3,2,1/1",
            "3,2,1/2",
            "3,2,1/1,1",
            "2,2/1",
            "3,1",
        ];
        for s in shapes {
            let sh: SkewShape = s.parse().unwrap();
            for size in sh.size()..=sh.size() + 2 {
                for content in Partition::all_of_size(size) {
                    if content.len() > 4 {
                        continue;
                    }
                    assert_eq!(
                        count_lattice_fillings(&sh, &content),
                        brute(&sh, &content),
                        "{s} {content}"
                    );
                }
            }
        }
    }

    #[test]
    fn visited_fillings_are_valid() {
        let sh = star_join(&p("2,1"), &p("2"));
        for_each_lattice_filling(&sh, &p("3,2,1"), |t| {
            assert!(t.is_svt());
            assert!(t.reverse_reading_word().is_lattice());
        });
    }

    #[test]
    fn submask_walk() {
        let range = 0b1011u64;
        let mut seen = vec![];
        let mut s = range & range.wrapping_neg();
        loop {
            seen.push(s);
            if s == range {
                break;
            }
            s = next_submask(s, range);
        }
        assert_eq!(
            seen,
            vec![0b0001, 0b0010, 0b0011, 0b1000, 0b1001, 0b1010, 0b1011]
        );
    }
}
