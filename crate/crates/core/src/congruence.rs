//! Partitions, congruences of quasi-lattices, quotients and q-lattice
//! homomorphisms.
//!
//! A partition θ is a congruence when it is compatible with the set-valued
//! join and meet (related arguments give set-equivalent results, i.e. results
//! touching the same classes) and every minimal-upper-bound and
//! maximal-lower-bound set lies inside a single class.

use std::collections::HashMap;
use std::fmt;

use crate::element_set::ElementSet;
use crate::enumerate::{all_partitions, PARTITION_LIMIT};
use crate::error::{Error, Result};
use crate::ops::{classify, mlb, mub, require_quasi_lattice, Kind};
use crate::poset::Poset;
use crate::verdict::{Reason, Verdict, Witness};

/// An equivalence relation on `{0, .., n-1}`, stored as disjoint blocks
/// ordered by least member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<ElementSet>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds the canonical partition whose classes are the fibres of
    /// `assignment` (any block ids).
    pub fn from_assignment<T: Eq + std::hash::Hash + Copy>(assignment: &[T]) -> Partition {
        let mut ids: HashMap<T, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(assignment.len());
        let mut blocks: Vec<ElementSet> = Vec::new();
        for (i, key) in assignment.iter().enumerate() {
            let next = ids.len();
            let b = *ids.entry(*key).or_insert(next);
            if b == blocks.len() {
                blocks.push(ElementSet::EMPTY);
            }
            blocks[b].insert(i);
            block_of.push(b);
        }
        Partition { blocks, block_of }
    }

    /// Validates that `blocks` are nonempty, disjoint and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: &[ElementSet]) -> Result<Partition> {
        let full = ElementSet::full(n);
        let mut seen = ElementSet::EMPTY;
        let mut assignment = vec![usize::MAX; n];
        for (b, &block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !block.is_subset(full) {
                return Err(Error::InvalidPartition(
                    "block outside the ground set".into(),
                ));
            }
            if !block.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!(
                    "element {} appears in two blocks",
                    block.intersection(seen).first().unwrap_or_default()
                )));
            }
            seen = seen.union(block);
            for i in block {
                assignment[i] = b;
            }
        }
        if seen != full {
            return Err(Error::InvalidPartition(format!(
                "element {} is in no block",
                full.difference(seen).first().unwrap_or_default()
            )));
        }
        Ok(Partition::from_assignment(&assignment))
    }

    /// Parses the literal syntax `a,b|c`: blocks separated by `|`, labels
    /// within a block by `,`. Every element must be listed exactly once.
    pub fn parse(p: &Poset, literal: &str) -> Result<Partition> {
        let mut seen = ElementSet::EMPTY;
        let mut assignment = vec![usize::MAX; p.len()];
        for (b, part) in literal.split('|').enumerate() {
            for label in part.split(',') {
                let label = label.trim();
                if label.is_empty() {
                    return Err(Error::InvalidPartition(format!(
                        "empty label in `{literal}`"
                    )));
                }
                let i = p.index_of(label)?;
                if seen.contains(i) {
                    return Err(Error::InvalidPartition(format!("`{label}` listed twice")));
                }
                seen.insert(i);
                assignment[i] = b;
            }
        }
        if let Some(missing) = p.all().difference(seen).first() {
            return Err(Error::InvalidPartition(format!(
                "`{}` is in no block",
                p.label(missing)
            )));
        }
        Ok(Partition::from_assignment(&assignment))
    }

    /// Every element in its own class.
    pub fn identity(n: usize) -> Partition {
        Partition::from_assignment(&(0..n).collect::<Vec<_>>())
    }

    /// A single class.
    pub fn one_block(n: usize) -> Partition {
        Partition::from_assignment(&vec![0u8; n])
    }

    pub fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// The class `[i]`.
    pub fn class_of(&self, i: usize) -> ElementSet {
        self.blocks[self.block_of[i]]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// Indices of the blocks that meet `s`, as a mask over block ids.
    pub fn touched(&self, s: ElementSet) -> u64 {
        s.iter().fold(0u64, |acc, i| acc | 1u64 << self.block_of[i])
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = (0..self.ground_size())
            .map(|i| (self.block_of[i], other.block_of[i]))
            .collect();
        Partition::from_assignment(&pairs)
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.ground_size();
        let mut class: Vec<ElementSet> = (0..n).map(|i| self.class_of(i)).collect();
        loop {
            let mut changed = false;
            for i in 0..n {
                let grown = class[i].iter().fold(class[i], |acc, j| {
                    acc.union(other.class_of(j)).union(class[j])
                });
                if grown != class[i] {
                    class[i] = grown;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let reps: Vec<usize> = class
            .iter()
            .map(|c| c.first().unwrap_or_default())
            .collect();
        Partition::from_assignment(&reps)
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.first().is_some_and(|i| b.is_subset(other.class_of(i))))
    }

    /// The literal form accepted by [`Partition::parse`].
    pub fn to_literal(&self, p: &Poset) -> String {
        self.blocks
            .iter()
            .map(|&b| p.labels_of(b).join(","))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.blocks.iter()).finish()
    }
}

/// A total function between the ground sets of two posets.
#[derive(Clone, PartialEq, Eq)]
pub struct PosetMap<'a> {
    source: &'a Poset,
    target: &'a Poset,
    image: Vec<usize>,
}

impl<'a> PosetMap<'a> {
    pub fn new(source: &'a Poset, target: &'a Poset, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.len() {
            return Err(Error::InvalidMap(format!(
                "{} images for {} source elements",
                image.len(),
                source.len()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&j| j >= target.len()) {
            return Err(Error::InvalidMap(format!(
                "target index {bad} out of range"
            )));
        }
        Ok(PosetMap {
            source,
            target,
            image,
        })
    }

    /// Images given as target labels, in source index order.
    pub fn from_labels<S: AsRef<str>>(
        source: &'a Poset,
        target: &'a Poset,
        images: &[S],
    ) -> Result<Self> {
        let image = images
            .iter()
            .map(|l| target.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        PosetMap::new(source, target, image)
    }

    pub fn source(&self) -> &'a Poset {
        self.source
    }

    pub fn target(&self) -> &'a Poset {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn apply_set(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|i| self.image[i]).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.apply_set(self.source.all()) == self.target.all()
    }
}

impl fmt::Debug for PosetMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.image
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (self.source.label(i), self.target.label(j))),
            )
            .finish()
    }
}

fn labels(p: &Poset, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&i| p.label(i).to_string()).collect()
}

fn check_size(p: &Poset, theta: &Partition) -> Result<()> {
    if theta.ground_size() != p.len() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} elements for a poset of {}",
            theta.ground_size(),
            p.len()
        )));
    }
    Ok(())
}

/// Set equivalence modulo θ: each member of `a` is related to some member of
/// `b` and vice versa.
pub fn classes_equivalent(theta: &Partition, a: ElementSet, b: ElementSet) -> bool {
    theta.touched(a) == theta.touched(b)
}

pub fn is_congruence(p: &Poset, theta: &Partition) -> Result<Verdict> {
    require_quasi_lattice(p)?;
    check_size(p, theta)?;
    let n = p.len();
    let joins: Vec<ElementSet> = (0..n * n).map(|k| mub(p, k / n, k % n)).collect();
    let meets: Vec<ElementSet> = (0..n * n).map(|k| mlb(p, k / n, k % n)).collect();

    // Every bound set lies in one class.
    for x in 0..n {
        for y in x..n {
            for (set, reason) in [
                (joins[x * n + y], Reason::CongruenceJoinClass),
                (meets[x * n + y], Reason::CongruenceMeetClass),
            ] {
                if theta.touched(set).count_ones() > 1 {
                    return Ok(Verdict::Fails(
                        Witness::new(reason, labels(p, &[x, y]))
                            .with_sides(p.labels_of(set), Vec::new()),
                    ));
                }
            }
        }
    }

    // Compatibility with related arguments.
    for x1 in 0..n {
        for y1 in 0..n {
            for x2 in theta.class_of(x1) {
                for y2 in theta.class_of(y1) {
                    for (table, reason) in [
                        (&joins, Reason::CongruenceJoinCompatible),
                        (&meets, Reason::CongruenceMeetCompatible),
                    ] {
                        let (l, r) = (table[x1 * n + y1], table[x2 * n + y2]);
                        if !classes_equivalent(theta, l, r) {
                            return Ok(Verdict::Fails(
                                Witness::new(reason, labels(p, &[x1, y1, x2, y2]))
                                    .with_sides(p.labels_of(l), p.labels_of(r)),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Which half of condition (*) to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarClause {
    /// Common upper bound `z`; look for a join witness below it.
    Join,
    /// Common lower bound `z`; look for a meet witness above it.
    Meet,
}

/// Searches for `a in [x]`, `b in [y]` and `d` in the minimal upper bounds of
/// `{a, b}` with `d <= z` (or the dual for [`StarClause::Meet`]). `a = x`,
/// `b = y` is tried first.
pub fn star_witness(
    p: &Poset,
    theta: &Partition,
    x: usize,
    y: usize,
    z: usize,
    clause: StarClause,
) -> Option<(usize, usize, usize)> {
    let probe = |a: usize, b: usize| {
        let (bounds, region) = match clause {
            StarClause::Join => (mub(p, a, b), p.down_set(z)),
            StarClause::Meet => (mlb(p, a, b), p.up_set(z)),
        };
        bounds.intersection(region).first().map(|d| (a, b, d))
    };
    probe(x, y).or_else(|| {
        theta
            .class_of(x)
            .iter()
            .flat_map(|a| theta.class_of(y).iter().map(move |b| (a, b)))
            .find_map(|(a, b)| probe(a, b))
    })
}

/// Condition (*): any two elements from distinct classes with a common upper
/// bound `z` have representatives with a minimal upper bound below `z`, and
/// dually for lower bounds.
pub fn satisfies_star(p: &Poset, theta: &Partition) -> Result<Verdict> {
    require_quasi_lattice(p)?;
    check_size(p, theta)?;
    for (clause, reason) in [
        (StarClause::Join, Reason::StarJoin),
        (StarClause::Meet, Reason::StarMeet),
    ] {
        for z in 0..p.len() {
            let region = match clause {
                StarClause::Join => p.down_set(z),
                StarClause::Meet => p.up_set(z),
            };
            for x in region {
                for y in region {
                    if y <= x || theta.related(x, y) {
                        continue;
                    }
                    if star_witness(p, theta, x, y, z, clause).is_none() {
                        return Ok(Verdict::Fails(Witness::new(reason, labels(p, &[x, y, z]))));
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

fn require_congruence(p: &Poset, theta: &Partition) -> Result<()> {
    match is_congruence(p, theta)? {
        Verdict::Holds => Ok(()),
        Verdict::Fails(w) => Err(Error::NotACongruence(w.to_string())),
    }
}

/// For `u ≡ v`, `a` a maximal lower bound and `b` a minimal upper bound of
/// `{u, v}`, every `x` with `a <= x <= b` is related to `u`. The witness is
/// `(u, v, a, b, x)`.
pub fn check_interval_lemma(p: &Poset, theta: &Partition) -> Result<Verdict> {
    require_congruence(p, theta)?;
    for u in 0..p.len() {
        let class = theta.class_of(u);
        for v in class {
            for a in mlb(p, u, v) {
                for b in mub(p, u, v) {
                    let interval = p.up_set(a).intersection(p.down_set(b));
                    if let Some(x) = interval.difference(class).first() {
                        return Ok(Verdict::Fails(Witness::new(
                            Reason::IntervalLemma,
                            labels(p, &[u, v, a, b, x]),
                        )));
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Image sets of minimal upper and maximal lower bounds agree with the
/// target's bound sets of the images.
pub fn is_q_homomorphism(t: &PosetMap<'_>) -> Verdict {
    let (src, dst) = (t.source(), t.target());
    for x in 0..src.len() {
        for y in x..src.len() {
            let (tx, ty) = (t.apply(x), t.apply(y));
            for (mapped, expected, reason) in [
                (
                    t.apply_set(mub(src, x, y)),
                    mub(dst, tx, ty),
                    Reason::HomomorphismJoin,
                ),
                (
                    t.apply_set(mlb(src, x, y)),
                    mlb(dst, tx, ty),
                    Reason::HomomorphismMeet,
                ),
            ] {
                if mapped != expected {
                    return Verdict::Fails(
                        Witness::new(reason, labels(src, &[x, y]))
                            .with_sides(dst.labels_of(mapped), dst.labels_of(expected)),
                    );
                }
            }
        }
    }
    Verdict::Holds
}

/// Fibres of a surjection onto a lattice.
pub fn kernel_partition(t: &PosetMap<'_>) -> Result<Partition> {
    let target = t.target();
    if let Some(missing) = target
        .all()
        .difference(t.apply_set(t.source().all()))
        .first()
    {
        return Err(Error::NotSurjective(target.label(missing).to_string()));
    }
    let c = classify(target);
    if c.kind != Kind::Lattice {
        let (a, b) = c.witness_labels(target).unwrap_or_default();
        return Err(Error::TargetNotLattice(format!("{} at ({a}, {b})", c.kind)));
    }
    Ok(Partition::from_assignment(t.image()))
}

/// The poset of classes `P/θ` together with the projection `x -> [x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub poset: Poset,
    /// `projection[x]` is the index in `poset` of the class of `x`.
    pub projection: Vec<usize>,
}

impl Quotient {
    pub fn projection_map<'a>(&'a self, source: &'a Poset) -> Result<PosetMap<'a>> {
        PosetMap::new(source, &self.poset, self.projection.clone())
    }
}

/// Builds `P/θ` with `[x] <= [y]` iff some member of `[x]` is below some
/// member of `[y]`, and re-verifies the homomorphism theorem's conclusions:
/// the order is a partial order, the quotient is a lattice, the projection is
/// a q-lattice homomorphism, and `[x] ^ [y] = [m]` for every maximal lower
/// bound `m` of `{x, y}` (dually for joins).
pub fn quotient(p: &Poset, theta: &Partition) -> Result<Quotient> {
    require_congruence(p, theta)?;
    if let Verdict::Fails(w) = satisfies_star(p, theta)? {
        return Err(Error::StarViolated(w.to_string()));
    }

    let blocks = theta.blocks();
    let up: Vec<ElementSet> = blocks
        .iter()
        .map(|&b| {
            let reach = p.up_closure(b);
            (0..blocks.len())
                .filter(|&j| !reach.is_disjoint(blocks[j]))
                .collect()
        })
        .collect();
    let block_labels: Vec<String> = blocks
        .iter()
        .map(|&b| {
            b.iter()
                .map(|i| p.label(i))
                .min()
                .unwrap_or_default()
                .to_string()
        })
        .collect();
    let poset = Poset::from_up_sets(block_labels, up).map_err(|e| match e {
        Error::NotAntisymmetric(..) | Error::NotTransitive(..) | Error::NotReflexive(_) => {
            Error::QuotientNotPoset(e.to_string())
        }
        other => other,
    })?;

    let c = classify(&poset);
    if c.kind != Kind::Lattice {
        let (a, b) = c.witness_labels(&poset).unwrap_or_default();
        return Err(Error::QuotientNotLattice(format!(
            "{} at ({a}, {b})",
            c.kind
        )));
    }

    let projection: Vec<usize> = (0..p.len()).map(|i| theta.block_of(i)).collect();
    let q = Quotient { poset, projection };
    let pi = q.projection_map(p)?;
    if let Verdict::Fails(w) = is_q_homomorphism(&pi) {
        return Err(Error::QuotientInconsistent(format!("projection: {w}")));
    }
    for x in 0..p.len() {
        for y in x..p.len() {
            let (bx, by) = (q.projection[x], q.projection[y]);
            let class_meet = mlb(&q.poset, bx, by);
            let class_join = mub(&q.poset, bx, by);
            for m in mlb(p, x, y) {
                if class_meet != ElementSet::singleton(q.projection[m]) {
                    return Err(Error::QuotientInconsistent(format!(
                        "[{}] ^ [{}] != [{}]",
                        p.label(x),
                        p.label(y),
                        p.label(m)
                    )));
                }
            }
            for j in mub(p, x, y) {
                if class_join != ElementSet::singleton(q.projection[j]) {
                    return Err(Error::QuotientInconsistent(format!(
                        "[{}] v [{}] != [{}]",
                        p.label(x),
                        p.label(y),
                        p.label(j)
                    )));
                }
            }
        }
    }
    Ok(q)
}

/// Every congruence of `p`, in restricted-growth order.
pub fn all_congruences(p: &Poset) -> Result<Vec<Partition>> {
    if p.len() > PARTITION_LIMIT {
        return Err(Error::SizeExceeded {
            what: "congruence enumeration",
            size: p.len(),
            max: PARTITION_LIMIT,
        });
    }
    require_quasi_lattice(p)?;
    let mut out = Vec::new();
    for theta in all_partitions(p.len())? {
        if is_congruence(p, &theta)?.holds() {
            out.push(theta);
        }
    }
    Ok(out)
}
