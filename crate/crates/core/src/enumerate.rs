//! Exhaustive generators for labeled posets and set partitions.
//!
//! Labeled posets on `e1..en` are grown one element at a time: a poset on
//! `n` elements restricts to a unique poset on the first `n - 1`, and the new
//! element is fixed by its strict down-set `D` and strict up-set `U`, where
//! `D` is a down-set, `U` an up-set, and every member of `D` lies below every
//! member of `U`. Each labeled poset is therefore produced exactly once.

use std::collections::HashSet;

use crate::congruence::Partition;
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest size accepted by [`all_posets`].
pub const POSET_LIMIT: usize = 6;
/// Largest size accepted by [`all_partitions`].
pub const PARTITION_LIMIT: usize = 10;

fn check_range(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::SizeExceeded { what, size: n, max });
    }
    Ok(())
}

/// Labels `e1 .. en`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

type Relation = Vec<ElementSet>;

fn is_down_closed(rel: &Relation, s: ElementSet) -> bool {
    // rel holds up-sets, so s is down-closed iff nothing outside s lies below a member.
    (0..rel.len()).all(|i| s.contains(i) || rel[i].is_disjoint(s))
}

fn is_up_closed(rel: &Relation, s: ElementSet) -> bool {
    s.iter().all(|i| rel[i].is_subset(s))
}

/// Every one-element extension of `rel`, in (down-set, up-set) mask order.
fn extensions(rel: &Relation) -> impl Iterator<Item = Relation> + '_ {
    let k = rel.len();
    let masks = 0..(1u64 << k);
    masks
        .clone()
        .map(ElementSet::from_bits)
        .filter(move |&d| is_down_closed(rel, d))
        .flat_map(move |d| {
            let allowed = d
                .iter()
                .fold(ElementSet::full(k), |acc, i| acc.intersection(rel[i]))
                .difference(d);
            masks
                .clone()
                .map(ElementSet::from_bits)
                .filter(move |&u| u.is_subset(allowed) && is_up_closed(rel, u))
                .map(move |u| {
                    let mut next: Relation = rel
                        .iter()
                        .enumerate()
                        .map(|(i, &row)| if d.contains(i) { row.with(k) } else { row })
                        .collect();
                    next.push(u.with(k));
                    next
                })
        })
}

fn relations(n: usize) -> Vec<Relation> {
    let mut level: Vec<Relation> = vec![vec![ElementSet::singleton(0)]];
    for _ in 1..n {
        level = level.iter().flat_map(extensions).collect();
    }
    level
}

/// Every labeled poset on `e1..en`, each exactly once, `1 <= n <= 6`.
pub fn all_posets(n: usize) -> Result<impl Iterator<Item = Poset>> {
    check_range("poset enumeration", n, POSET_LIMIT)?;
    let labels = default_labels(n);
    let parents = if n == 1 { Vec::new() } else { relations(n - 1) };
    let singles = (n == 1).then(|| vec![ElementSet::singleton(0)]);
    let stream = singles.into_iter().chain(
        parents
            .into_iter()
            .flat_map(|r| extensions(&r).collect::<Vec<_>>()),
    );
    Ok(stream.map(move |up| Poset::from_parts_unchecked(labels.clone(), up)))
}

/// All labeled posets on `e1..en`, produced a second, independent way: grow
/// the naturally labeled posets (every relation `ei < ej` has `i < j`), then
/// relabel each by every permutation and drop repeats. Returned in first-seen
/// order.
pub fn all_posets_by_relabeling(n: usize) -> Result<Vec<Poset>> {
    check_range("poset enumeration", n, POSET_LIMIT)?;
    // Natural labelings: the new element sits above a down-set and below nothing.
    let mut natural: Vec<Relation> = vec![vec![ElementSet::singleton(0)]];
    for k in 1..n {
        natural = natural
            .iter()
            .flat_map(|rel| {
                (0..(1u64 << k))
                    .map(ElementSet::from_bits)
                    .filter(|&d| is_down_closed(rel, d))
                    .map(move |d| {
                        let mut next: Relation = rel
                            .iter()
                            .enumerate()
                            .map(|(i, &row)| if d.contains(i) { row.with(k) } else { row })
                            .collect();
                        next.push(ElementSet::singleton(k));
                        next
                    })
            })
            .collect();
    }

    let perms = permutations(n);
    let mut seen: HashSet<Relation> = HashSet::new();
    let mut out = Vec::new();
    let labels = default_labels(n);
    for rel in &natural {
        for perm in &perms {
            let mut relabeled = vec![ElementSet::EMPTY; n];
            for (i, row) in rel.iter().enumerate() {
                relabeled[perm[i]] = row.iter().map(|j| perm[j]).collect();
            }
            if seen.insert(relabeled.clone()) {
                out.push(Poset::from_parts_unchecked(labels.clone(), relabeled));
            }
        }
    }
    Ok(out)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .unwrap_or(i);
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// Iterator over set partitions of `0..n` as restricted-growth strings in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_assignment(&self.rgs);
        let n = self.rgs.len();
        // Increment the rightmost position that may still grow.
        let mut advanced = false;
        for i in (1..n).rev() {
            let max_prefix = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= max_prefix {
                self.rgs[i] += 1;
                for x in &mut self.rgs[i + 1..] {
                    *x = 0;
                }
                advanced = true;
                break;
            }
        }
        self.done = !advanced;
        Some(out)
    }
}

/// Every set partition of `0..n`, `1 <= n <= 10`.
pub fn all_partitions(n: usize) -> Result<Partitions> {
    check_range("partition enumeration", n, PARTITION_LIMIT)?;
    Ok(Partitions {
        rgs: vec![0; n],
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_poset_counts() {
        assert_eq!(all_posets(1).unwrap().count(), 1);
        assert_eq!(all_posets(2).unwrap().count(), 3);
        assert_eq!(all_posets(3).unwrap().count(), 19);
        assert!(matches!(all_posets(0), Err(Error::SizeExceeded { .. })));
        assert!(matches!(
            all_posets(7),
            Err(Error::SizeExceeded {
                size: 7,
                max: 6,
                ..
            })
        ));
    }

    #[test]
    fn two_element_posets() {
        let mut covers: Vec<Vec<(String, String)>> =
            all_posets(2).unwrap().map(|p| p.cover_labels()).collect();
        covers.sort();
        let pair = |a: &str, b: &str| vec![(a.to_string(), b.to_string())];
        assert_eq!(covers, vec![vec![], pair("e1", "e2"), pair("e2", "e1")]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(all_partitions(1).unwrap().count(), 1);
        assert_eq!(all_partitions(3).unwrap().count(), 5);
        assert_eq!(all_partitions(5).unwrap().count(), 52);
        assert!(all_partitions(11).is_err());
        assert!(all_partitions(0).is_err());
    }

    #[test]
    fn partitions_of_three_in_order() {
        let got: Vec<Partition> = all_partitions(3).unwrap().collect();
        let expected: Vec<Partition> = [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]]
            .iter()
            .map(|a| Partition::from_assignment(a))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn permutation_listing() {
        assert_eq!(permutations(1), vec![vec![0]]);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
