//! Finite labeled posets.
//!
//! Elements are addressed externally by label and internally by dense index
//! (declaration order). The order relation is stored twice, as the up-set and
//! the down-set of each element, so that bound computations are word
//! operations on [`ElementSet`]s.

use std::collections::HashMap;

use crate::element_set::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Which end of the order [`Poset::extremal`] selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Min,
    Max,
}

/// A finite partially ordered set with labeled elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

/// Checks the label charset: nonempty, no whitespace, none of `|`, `,`, `#`.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '|' | ',' | '#'))
}

fn check_labels<S: AsRef<str>>(labels: &[S]) -> Result<(Vec<String>, HashMap<String, usize>)> {
    if labels.is_empty() {
        return Err(Error::EmptyGroundSet);
    }
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::SizeExceeded {
            what: "poset",
            size: labels.len(),
            max: MAX_ELEMENTS,
        });
    }
    let mut index = HashMap::with_capacity(labels.len());
    let mut owned = Vec::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        let l = l.as_ref();
        if !is_valid_label(l) {
            return Err(Error::InvalidLabel(l.to_string()));
        }
        if index.insert(l.to_string(), i).is_some() {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
        owned.push(l.to_string());
    }
    Ok((owned, index))
}

fn lookup(index: &HashMap<String, usize>, label: &str) -> Result<usize> {
    index
        .get(label)
        .copied()
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

fn down_from_up(up: &[ElementSet]) -> Vec<ElementSet> {
    let mut down = vec![ElementSet::EMPTY; up.len()];
    for (i, u) in up.iter().enumerate() {
        for j in u.iter() {
            down[j].insert(i);
        }
    }
    down
}

impl Poset {
    /// Builds a poset from Hasse-diagram data: the reflexive-transitive
    /// closure of the given `(low, high)` pairs.
    pub fn from_covers<L, A, B>(labels: &[L], covers: &[(A, B)]) -> Result<Poset>
    where
        L: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let (labels, index) = check_labels(labels)?;
        let n = labels.len();
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for (lo, hi) in covers {
            let (lo, hi) = (lookup(&index, lo.as_ref())?, lookup(&index, hi.as_ref())?);
            if lo == hi {
                return Err(Error::CycleDetected(labels[lo].clone(), labels[hi].clone()));
            }
            up[lo].insert(hi);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            let via = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(via);
                }
            }
        }
        for i in 0..n {
            for j in up[i].without(i) {
                if up[j].contains(i) {
                    return Err(Error::CycleDetected(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        let down = down_from_up(&up);
        Ok(Poset { labels, up, down })
    }

    /// Builds a poset from a full order relation given as `(low, high)`
    /// pairs. The relation is validated as given; no closure is applied.
    pub fn from_relation<L, A, B>(labels: &[L], pairs: &[(A, B)]) -> Result<Poset>
    where
        L: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let (labels, index) = check_labels(labels)?;
        let mut up = vec![ElementSet::EMPTY; labels.len()];
        for (lo, hi) in pairs {
            let (lo, hi) = (lookup(&index, lo.as_ref())?, lookup(&index, hi.as_ref())?);
            up[lo].insert(hi);
        }
        Self::from_up_sets(labels, up)
    }

    /// Builds a poset from explicit up-sets (`up[i]` = elements `>= i`),
    /// validating the three order axioms.
    pub fn from_up_sets(labels: Vec<String>, up: Vec<ElementSet>) -> Result<Poset> {
        let (labels, _) = check_labels(&labels)?;
        let n = labels.len();
        if up.len() != n {
            return Err(Error::InvalidMap(format!(
                "{} up-sets for {} labels",
                up.len(),
                n
            )));
        }
        let full = ElementSet::full(n);
        for (i, u) in up.iter().enumerate() {
            if !u.is_subset(full) {
                return Err(Error::InvalidMap(format!(
                    "up-set of `{}` references an index outside the ground set",
                    labels[i]
                )));
            }
        }
        if let Some(i) = (0..n).find(|&i| !up[i].contains(i)) {
            return Err(Error::NotReflexive(labels[i].clone()));
        }
        for i in 0..n {
            for j in up[i].without(i) {
                if up[j].contains(i) {
                    return Err(Error::NotAntisymmetric(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in up[i] {
                if let Some(k) = up[j].difference(up[i]).first() {
                    return Err(Error::NotTransitive(
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[k].clone(),
                    ));
                }
            }
        }
        let down = down_from_up(&up);
        Ok(Poset { labels, up, down })
    }

    /// Trusted constructor for generators that already maintain the axioms.
    pub(crate) fn from_parts_unchecked(labels: Vec<String>, up: Vec<ElementSet>) -> Poset {
        let down = down_from_up(&up);
        debug_assert!(Self::from_up_sets(labels.clone(), up.clone()).is_ok());
        Poset { labels, up, down }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels to an element set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    }

    /// Labels of the members of `s`, in index order.
    pub fn labels_of(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// The whole ground set.
    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn leq_labels(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq(self.index_of(a)?, self.index_of(b)?))
    }

    /// Elements `>= i`.
    pub fn up_set(&self, i: usize) -> ElementSet {
        self.up[i]
    }

    /// Elements `<= i`.
    pub fn down_set(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    /// Up-set rows in index order; two posets on the same labels are equal
    /// exactly when these agree.
    pub fn up_sets(&self) -> &[ElementSet] {
        &self.up
    }

    /// Down-closure of a set.
    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    /// Up-closure of a set.
    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    /// Common upper bounds of every member of `s` (all elements when `s` is empty).
    pub fn upper_bounds(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(self.all(), |acc, i| acc.intersection(self.up[i]))
    }

    pub fn lower_bounds(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(self.all(), |acc, i| acc.intersection(self.down[i]))
    }

    /// Minimal (or maximal) members of `s`.
    pub fn extremal(&self, s: ElementSet, side: Side) -> ElementSet {
        s.iter()
            .filter(|&i| {
                let toward = match side {
                    Side::Min => self.down[i],
                    Side::Max => self.up[i],
                };
                toward.intersection(s) == ElementSet::singleton(i)
            })
            .collect()
    }

    /// The cover pairs `(a, b)` with `a < b` and nothing strictly between,
    /// sorted lexicographically by index.
    pub fn covers_of(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| {
                self.extremal(self.up[a].without(a), Side::Min)
                    .iter()
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn cover_labels(&self) -> Vec<(String, String)> {
        self.covers_of()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    /// Same labels, reversed order.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Number of pairs `a < b`.
    pub fn strict_pair_count(&self) -> usize {
        self.up.iter().map(|u| u.len() - 1).sum()
    }

    /// Exhaustive search for an order isomorphism `self -> other`. Returns the
    /// bijection as `image[i]` for each element index of `self`.
    pub fn isomorphism_to(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.strict_pair_count() != other.strict_pair_count() {
            return None;
        }
        let profile = |p: &Poset, i: usize| (p.up[i].len(), p.down[i].len());
        let mut src_profiles: Vec<_> = (0..n).map(|i| profile(self, i)).collect();
        let mut dst_profiles: Vec<_> = (0..n).map(|i| profile(other, i)).collect();
        src_profiles.sort_unstable();
        dst_profiles.sort_unstable();
        if src_profiles != dst_profiles {
            return None;
        }

        fn extend(
            src: &Poset,
            dst: &Poset,
            i: usize,
            image: &mut Vec<usize>,
            used: &mut ElementSet,
        ) -> bool {
            if i == src.len() {
                return true;
            }
            for j in dst.all().difference(*used) {
                if src.up[i].len() != dst.up[j].len() || src.down[i].len() != dst.down[j].len() {
                    continue;
                }
                let consistent = (0..i).all(|k| {
                    src.leq(k, i) == dst.leq(image[k], j) && src.leq(i, k) == dst.leq(j, image[k])
                });
                if !consistent {
                    continue;
                }
                image.push(j);
                used.insert(j);
                if extend(src, dst, i + 1, image, used) {
                    return true;
                }
                image.pop();
                used.remove(j);
            }
            false
        }

        let mut image = Vec::with_capacity(n);
        let mut used = ElementSet::EMPTY;
        extend(self, other, 0, &mut image, &mut used).then_some(image)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &self.cover_labels())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chain3() -> Poset {
        Poset::from_covers(&["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap()
    }

    #[test]
    fn fig1_has_bottom_and_top() {
        let p = fixtures::fig1();
        assert_eq!(p.len(), 8);
        let bottom = p.index_of("0").unwrap();
        let top = p.index_of("xy_z").unwrap();
        assert_eq!(p.up_set(bottom), p.all());
        assert_eq!(p.down_set(top), p.all());
        assert_eq!(
            p.extremal(p.all(), Side::Min),
            ElementSet::singleton(bottom)
        );
    }

    #[test]
    fn leq_queries_on_fig1() {
        let p = fixtures::fig1();
        assert!(p.leq_labels("z", "x_yz").unwrap());
        assert!(!p.leq_labels("xy", "x_yz").unwrap());
        assert!(!p.leq_labels("x_yz", "xy").unwrap());
        assert!(p.leq_labels("y", "y").unwrap());
        assert_eq!(p.leq_labels("q", "y"), Err(Error::UnknownLabel("q".into())));
    }

    #[test]
    fn singleton_poset() {
        let p = Poset::from_covers::<_, &str, &str>(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.covers_of().is_empty());
    }

    #[test]
    fn constructor_errors() {
        assert!(matches!(
            Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::CycleDetected(..))
        ));
        assert!(matches!(
            Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]),
            Err(Error::CycleDetected(..))
        ));
        assert_eq!(
            Poset::from_covers(&["a"], &[("a", "a")]).unwrap_err(),
            Error::CycleDetected("a".into(), "a".into())
        );
        assert_eq!(
            Poset::from_covers(&["a", "b"], &[("a", "c")]).unwrap_err(),
            Error::UnknownLabel("c".into())
        );
        assert_eq!(
            Poset::from_covers::<_, &str, &str>(&["a", "a"], &[]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        for bad in ["", "a b", "a|b", "a,b", "a#"] {
            assert_eq!(
                Poset::from_covers::<_, &str, &str>(&[bad], &[]).unwrap_err(),
                Error::InvalidLabel(bad.into())
            );
        }
        let many: Vec<String> = (0..65).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            Poset::from_covers::<_, &str, &str>(&many, &[]),
            Err(Error::SizeExceeded { size: 65, .. })
        ));
        assert_eq!(
            Poset::from_covers::<&str, &str, &str>(&[], &[]).unwrap_err(),
            Error::EmptyGroundSet
        );
    }

    #[test]
    fn from_relation_validates_verbatim() {
        let anti = Poset::from_relation(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        assert!(anti.covers_of().is_empty());

        let pairs = [
            ("0", "0"),
            ("m", "m"),
            ("1", "1"),
            ("0", "m"),
            ("m", "1"),
            ("0", "1"),
        ];
        assert_eq!(
            Poset::from_relation(&["0", "m", "1"], &pairs).unwrap(),
            chain3()
        );

        assert_eq!(
            Poset::from_relation(&["0", "1"], &[("0", "1")]).unwrap_err(),
            Error::NotReflexive("0".into())
        );
        assert_eq!(
            Poset::from_relation(
                &["a", "b"],
                &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]
            )
            .unwrap_err(),
            Error::NotAntisymmetric("a".into(), "b".into())
        );
        assert_eq!(
            Poset::from_relation(
                &["0", "m", "1"],
                &[("0", "0"), ("m", "m"), ("1", "1"), ("0", "m"), ("m", "1")]
            )
            .unwrap_err(),
            Error::NotTransitive("0".into(), "m".into(), "1".into())
        );
    }

    #[test]
    fn covers_drop_composite_pairs() {
        let c = chain3();
        assert_eq!(c.covers_of(), vec![(0, 1), (1, 2)]);
        let anti = Poset::from_relation(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        assert!(anti.covers_of().is_empty());
        let fig1 = fixtures::fig1();
        assert_eq!(fig1.covers_of().len(), 11);
    }

    #[test]
    fn dual_reverses_order() {
        let c2 = fixtures::chain2();
        let d = c2.dual();
        assert!(d.leq_labels("1", "0").unwrap());
        assert!(!d.leq_labels("0", "1").unwrap());
        for p in fixtures::all() {
            assert_eq!(p.1.dual().dual(), p.1);
        }
    }

    #[test]
    fn extremal_elements() {
        let hex = fixtures::hex6();
        let s = hex.set_of(&["⊥", "a", "b"]).unwrap();
        assert_eq!(hex.extremal(s, Side::Max), hex.set_of(&["a", "b"]).unwrap());
        assert_eq!(
            hex.extremal(ElementSet::EMPTY, Side::Max),
            ElementSet::EMPTY
        );
    }

    #[test]
    fn isomorphism_search() {
        for (_, p) in fixtures::all() {
            assert!(p.is_isomorphic(&p));
        }
        let anti = Poset::from_relation(&["0", "1"], &[("0", "0"), ("1", "1")]).unwrap();
        assert!(!fixtures::chain2().is_isomorphic(&anti));
        assert!(!fixtures::m3().is_isomorphic(&fixtures::n5()));
        let relabeled = Poset::from_covers(&["p", "q", "r"], &[("r", "p"), ("p", "q")]).unwrap();
        let iso = chain3().isomorphism_to(&relabeled).unwrap();
        assert_eq!(iso, vec![2, 0, 1]);
        assert!(relabeled.is_isomorphic(&chain3()));
    }
}
