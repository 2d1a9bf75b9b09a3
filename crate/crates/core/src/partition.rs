//! Set partitions of `{0, .., n-1}`.
//!
//! Partitions are enumerated as restricted growth strings: `labels[0] = 0` and
//! `labels[i] <= 1 + max(labels[..i])`. Block `k` of the canonical form is the
//! set of positions carrying label `k`, so blocks come out ordered by their
//! smallest element.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition of `{0, .., n-1}` in canonical form: every block sorted, blocks
/// ordered by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from arbitrary blocks. Returns `None` unless the
    /// blocks are nonempty, disjoint and cover `{0, .., n-1}` exactly.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return None;
            }
            block.sort_unstable();
            for &i in &block {
                if i >= n || seen[i] {
                    return None;
                }
                seen[i] = true;
            }
            out.push(block);
        }
        if seen.iter().any(|s| !s) {
            return None;
        }
        out.sort();
        Some(SetPartition { blocks: out })
    }

    /// Builds the partition whose block `k` holds the positions labelled `k`.
    /// Labels need not be a restricted growth string.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, Vec<usize>)> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match map.iter_mut().find(|(label, _)| *label == l) {
                Some((_, b)) => b.push(i),
                None => map.push((l, vec![i])),
            }
        }
        let mut blocks: Vec<Vec<usize>> = map.into_iter().map(|(_, b)| b).collect();
        blocks.sort();
        SetPartition { blocks }
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn single_block(n: usize) -> Self {
        if n == 0 {
            return SetPartition { blocks: vec![] };
        }
        SetPartition {
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `labels[i]` is the index of the block containing `i`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.len()];
        for (k, block) in self.blocks.iter().enumerate() {
            for &i in block {
                labels[i] = k;
            }
        }
        labels
    }

    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&i))
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        let labels = coarser.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| labels[i] == labels[b[0]]))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|i| i.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Iterator over every partition of `{0, .., n-1}` as a restricted growth
/// string. For `n = 0` it yields the empty partition once.
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    labels: Vec<usize>,
    // prefix_max[i] = max(labels[..=i])
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.labels.len();
        if n <= 1 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 {
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[j - 1];
                }
                return true;
            }
            i -= 1;
        }
        false
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.labels.clone());
        }
        if self.advance() {
            Some(self.labels.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// All partitions of `{0, .., n-1}` in restricted-growth order.
pub fn set_partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    RestrictedGrowth::new(n).map(|labels| SetPartition::from_labels(&labels))
}

/// Bell numbers by the Bell triangle. Overflows past `n = 25`.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Calls `visit(labels, block_masks)` for every partition of the items whose
/// vertex masks are `masks`; `block_masks[k]` is the union of the masks in
/// block `k`. This is the hot loop behind the coarsening scans.
pub(crate) fn scan_partition_masks<F>(masks: &[u64], mut visit: F)
where
    F: FnMut(&[usize], &[u64]),
{
    let n = masks.len();
    let mut labels = vec![0usize; n];
    let mut blocks: Vec<u64> = Vec::with_capacity(n);
    fn rec<F: FnMut(&[usize], &[u64])>(
        i: usize,
        masks: &[u64],
        labels: &mut Vec<usize>,
        blocks: &mut Vec<u64>,
        visit: &mut F,
    ) {
        if i == masks.len() {
            visit(labels, blocks);
            return;
        }
        for k in 0..blocks.len() {
            let saved = blocks[k];
            blocks[k] |= masks[i];
            labels[i] = k;
            rec(i + 1, masks, labels, blocks, visit);
            blocks[k] = saved;
        }
        labels[i] = blocks.len();
        blocks.push(masks[i]);
        rec(i + 1, masks, labels, blocks, visit);
        blocks.pop();
    }
    if n == 0 {
        visit(&labels, &blocks);
        return;
    }
    rec(0, masks, &mut labels, &mut blocks, &mut visit);
}
