//! Counting fillings of a fixed content without listing them.
//!
//! Each kind decomposes along entry values into a chain of partitions
//! between the inner and outer shape:
//!
//! * SSYT: the cells holding entries `<= v` form a partition, and consecutive
//!   partitions differ by a horizontal strip of size `content[v]`.
//! * RPP: the same regions are partitions, consecutive ones differ by an
//!   arbitrary skew shape, and `content[v]` is the number of columns it meets.
//! * SVT: peel the largest value `v`. The cells equal to `{v}` form a
//!   horizontal strip at the bottom of their columns; `v` may also be added
//!   to any row-end cell of the remaining shape that has no cell of the
//!   current shape below it. Choosing `j` strip cells and `content[v] - j`
//!   of the `e` eligible cells gives `C(e, content[v] - j)` options.

use std::collections::HashMap;

use crate::shapes::{Partition, SkewShape};

use super::FillingKind;

/// Number of fillings of `shape` of the given kind whose content (in the
/// kind's sense) is exactly `content`, a weak composition indexed from 1.
pub fn count_by_content(shape: &SkewShape, kind: FillingKind, content: &[usize]) -> u128 {
    let total: usize = content.iter().sum();
    match kind {
        FillingKind::Ssyt if total != shape.size() => return 0,
        FillingKind::Rpp if total > shape.size() => return 0,
        FillingKind::Svt if total < shape.size() => return 0,
        _ => {}
    }
    match kind {
        FillingKind::Ssyt => forward(shape, content, |from, want| {
            horizontal_strips_up(from, shape.outer(), want)
        }),
        FillingKind::Rpp => forward(shape, content, |from, want| {
            shape
                .outer()
                .interval_from(from)
                .into_iter()
                .filter(|k| columns_between(from, k) == want)
                .collect()
        }),
        FillingKind::Svt => svt_backward(shape, content),
    }
}

/// Runs the value-by-value chain from the inner to the outer shape; `step`
/// lists the shapes reachable from `from` when the next value has the given
/// content.
fn forward(
    shape: &SkewShape,
    content: &[usize],
    step: impl Fn(&Partition, usize) -> Vec<Partition>,
) -> u128 {
    let mut layer: HashMap<Partition, u128> = HashMap::new();
    layer.insert(shape.inner().clone(), 1);
    for &want in content {
        let mut next: HashMap<Partition, u128> = HashMap::new();
        for (kappa, ways) in &layer {
            for to in step(kappa, want) {
                *next.entry(to).or_insert(0) += ways;
            }
        }
        layer = next;
        if layer.is_empty() {
            return 0;
        }
    }
    layer.get(shape.outer()).copied().unwrap_or(0)
}

/// Partitions `k` with `from ⊆ k ⊆ outer` and `k/from` a horizontal strip
/// of exactly `size` cells.
fn horizontal_strips_up(from: &Partition, outer: &Partition, size: usize) -> Vec<Partition> {
    let rows = outer.len();
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    fn rec(
        r: usize,
        rows: usize,
        from: &Partition,
        outer: &Partition,
        left: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r == rows {
            if left == 0 {
                out.push(Partition::from_unsorted(parts.clone()));
            }
            return;
        }
        let lo = from.part(r);
        let mut hi = outer.part(r);
        if r > 0 {
            hi = hi.min(from.part(r - 1));
        }
        if hi < lo {
            return;
        }
        for v in lo..=hi.min(lo + left) {
            parts.push(v);
            rec(r + 1, rows, from, outer, left - (v - lo), parts, out);
            parts.pop();
        }
    }
    rec(0, rows, from, outer, size, &mut parts, &mut out);
    out
}

/// Number of columns meeting `to/from`.
fn columns_between(from: &Partition, to: &Partition) -> usize {
    let a = from.conjugate();
    let b = to.conjugate();
    (0..b.len()).filter(|&c| b.part(c) > a.part(c)).count()
}

fn binomial(n: usize, k: usize) -> u128 {
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

fn svt_backward(shape: &SkewShape, content: &[usize]) -> u128 {
    let inner = shape.inner();
    let mut memo: HashMap<(Partition, usize), u128> = HashMap::new();

    fn go(
        kappa: &Partition,
        v: usize,
        inner: &Partition,
        content: &[usize],
        memo: &mut HashMap<(Partition, usize), u128>,
    ) -> u128 {
        if v == 0 {
            return u128::from(kappa == inner);
        }
        if let Some(&hit) = memo.get(&(kappa.clone(), v)) {
            return hit;
        }
        let want = content[v - 1];
        let mut total = 0u128;
        for smaller in horizontal_strips_down(kappa, inner) {
            let strip = kappa.size() - smaller.size();
            if strip > want {
                continue;
            }
            let eligible = (0..smaller.len())
                .filter(|&r| smaller.part(r) > inner.part(r) && kappa.part(r + 1) < smaller.part(r))
                .count();
            let choose = binomial(eligible, want - strip);
            if choose == 0 {
                continue;
            }
            total += choose * go(&smaller, v - 1, inner, content, memo);
        }
        memo.insert((kappa.clone(), v), total);
        total
    }

    go(shape.outer(), content.len(), inner, content, &mut memo)
}

/// Partitions `k` with `inner ⊆ k ⊆ from` and `from/k` a horizontal strip.
fn horizontal_strips_down(from: &Partition, inner: &Partition) -> Vec<Partition> {
    let rows = from.len();
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    fn rec(
        r: usize,
        rows: usize,
        from: &Partition,
        inner: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r == rows {
            out.push(Partition::from_unsorted(parts.clone()));
            return;
        }
        let lo = from.part(r + 1).max(inner.part(r));
        let hi = from.part(r);
        for v in lo..=hi {
            parts.push(v);
            rec(r + 1, rows, from, inner, parts, out);
            parts.pop();
        }
    }
    rec(0, rows, from, inner, &mut parts, &mut out);
    out
}
