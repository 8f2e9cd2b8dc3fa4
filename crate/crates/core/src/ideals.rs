//! Ideals and filters of a quasi-lattice, their closures, convex sets,
//! sub-quasi-lattices, and the lattices of all ideals and all filters.
//!
//! An ideal is a down-closed set that contains every minimal upper bound of
//! each pair of its members; a filter is the order dual. The empty set counts
//! as both, so the ideals of any poset are closed under intersection.

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::ops::{classify, mlb, mub, Kind};
use crate::poset::Poset;
use crate::verdict::{Reason, Verdict, Witness};

/// Default ground-set bound for [`all_structures`].
pub const STRUCTURE_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Ideal,
    Filter,
}

impl StructureKind {
    fn bounds(self, p: &Poset, a: usize, b: usize) -> ElementSet {
        match self {
            StructureKind::Ideal => mub(p, a, b),
            StructureKind::Filter => mlb(p, a, b),
        }
    }

    /// Elements that must accompany `a`: below it for ideals, above for filters.
    fn shadow(self, p: &Poset, a: usize) -> ElementSet {
        match self {
            StructureKind::Ideal => p.down_set(a),
            StructureKind::Filter => p.up_set(a),
        }
    }

    fn reasons(self) -> (Reason, Reason) {
        match self {
            StructureKind::Ideal => (Reason::IdealJoinClosed, Reason::IdealDownClosed),
            StructureKind::Filter => (Reason::FilterMeetClosed, Reason::FilterUpClosed),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Ideal => "ideal",
            StructureKind::Filter => "filter",
        }
    }
}

fn witness(p: &Poset, reason: Reason, elements: &[usize]) -> Witness {
    Witness::new(
        reason,
        elements.iter().map(|&i| p.label(i).to_string()).collect(),
    )
}

/// Checks clause (i) (closure under the set-valued join, or meet for filters)
/// and clause (ii) (down-, resp. up-closure).
pub fn is_closed_structure(p: &Poset, s: ElementSet, kind: StructureKind) -> Verdict {
    let (closed_reason, shadow_reason) = kind.reasons();
    for a in s {
        for b in s {
            if b < a {
                continue;
            }
            if !kind.bounds(p, a, b).is_subset(s) {
                return Verdict::Fails(witness(p, closed_reason, &[a, b]));
            }
        }
    }
    for a in s {
        if let Some(b) = kind.shadow(p, a).difference(s).first() {
            return Verdict::Fails(witness(p, shadow_reason, &[a, b]));
        }
    }
    Verdict::Holds
}

/// Smallest ideal (or filter) containing `a`.
pub fn closure(p: &Poset, a: ElementSet, kind: StructureKind) -> ElementSet {
    let mut current = a;
    loop {
        let mut next = current;
        for x in current {
            next = next.union(kind.shadow(p, x));
            for y in current {
                if y >= x {
                    next = next.union(kind.bounds(p, x, y));
                }
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// `x, y in S` and `x <= a <= y` imply `a in S`. The witness is `(x, a, y)`.
pub fn is_convex(p: &Poset, s: ElementSet) -> Verdict {
    for x in s {
        for y in p.up_set(x).intersection(s) {
            let between = p.up_set(x).intersection(p.down_set(y));
            if let Some(a) = between.difference(s).first() {
                return Verdict::Fails(witness(p, Reason::Convexity, &[x, a, y]));
            }
        }
    }
    Verdict::Holds
}

/// Closure of `s` under the ambient set-valued join and meet.
pub fn is_sub_quasi_lattice(p: &Poset, s: ElementSet) -> Verdict {
    for x in s {
        for y in s {
            if y < x {
                continue;
            }
            if !mub(p, x, y).is_subset(s) {
                return Verdict::Fails(witness(p, Reason::SubJoinClosed, &[x, y]));
            }
            if !mlb(p, x, y).is_subset(s) {
                return Verdict::Fails(witness(p, Reason::SubMeetClosed, &[x, y]));
            }
        }
    }
    Verdict::Holds
}

/// All down-sets (or up-sets), in ascending mask order.
pub fn closed_shadow_sets(p: &Poset, kind: StructureKind) -> Vec<ElementSet> {
    // Visit elements so that everything in an element's shadow comes first.
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (kind.shadow(p, i).len(), i));

    fn walk(
        p: &Poset,
        kind: StructureKind,
        order: &[usize],
        current: ElementSet,
        out: &mut Vec<ElementSet>,
    ) {
        let Some((&e, rest)) = order.split_first() else {
            out.push(current);
            return;
        };
        walk(p, kind, rest, current, out);
        if kind.shadow(p, e).without(e).is_subset(current) {
            walk(p, kind, rest, current.with(e), out);
        }
    }

    let mut out = Vec::new();
    walk(p, kind, &order, ElementSet::EMPTY, &mut out);
    out.sort_unstable();
    out
}

/// Every ideal (or filter) of `p`, including the empty set and the whole
/// ground set, in ascending mask order.
pub fn all_structures(p: &Poset, kind: StructureKind) -> Result<Vec<ElementSet>> {
    all_structures_bounded(p, kind, STRUCTURE_ENUMERATION_LIMIT)
}

pub fn all_structures_bounded(
    p: &Poset,
    kind: StructureKind,
    limit: usize,
) -> Result<Vec<ElementSet>> {
    if p.len() > limit {
        return Err(Error::SizeExceeded {
            what: "structure enumeration",
            size: p.len(),
            max: limit,
        });
    }
    Ok(closed_shadow_sets(p, kind)
        .into_iter()
        .filter(|&s| is_closed_structure(p, s, kind).holds())
        .collect())
}

/// Label used for a structure inside [`structure_lattice`]: member labels in
/// index order, separated by `;`, in braces.
pub fn structure_label(p: &Poset, s: ElementSet) -> String {
    format!("{{{}}}", p.labels_of(s).join(";"))
}

/// The poset of all ideals ordered by inclusion (filters: reverse inclusion).
///
/// Construction verifies that the result is a lattice whose binary bounds are
/// intersection and closure of union: for ideals the meet is the
/// intersection and the join the closure of the union; for filters, under
/// reverse inclusion, the two swap.
pub fn structure_lattice(p: &Poset, kind: StructureKind) -> Result<Poset> {
    let structures = all_structures(p, kind)?;
    let m = structures.len();
    if m > crate::element_set::MAX_ELEMENTS {
        return Err(Error::SizeExceeded {
            what: "structure lattice",
            size: m,
            max: crate::element_set::MAX_ELEMENTS,
        });
    }
    let below = |i: usize, j: usize| match kind {
        StructureKind::Ideal => structures[i].is_subset(structures[j]),
        StructureKind::Filter => structures[j].is_subset(structures[i]),
    };
    let up: Vec<ElementSet> = (0..m)
        .map(|i| (0..m).filter(|&j| below(i, j)).collect())
        .collect();
    let labels: Vec<String> = structures.iter().map(|&s| structure_label(p, s)).collect();
    let lattice = Poset::from_up_sets(labels, up)?;

    let c = classify(&lattice);
    if c.kind != Kind::Lattice {
        let (a, b) = c.witness_labels(&lattice).unwrap_or_default();
        return Err(Error::StructureLatticeViolation(format!(
            "{} poset is a {} (pair {a}, {b})",
            kind.name(),
            c.kind
        )));
    }

    let position = |s: ElementSet| structures.binary_search(&s).ok();
    for i in 0..m {
        for j in i + 1..m {
            let (si, sj) = (structures[i], structures[j]);
            let describe = |what: &str| {
                Error::StructureLatticeViolation(format!(
                    "{what} of {} and {}",
                    lattice.label(i),
                    lattice.label(j)
                ))
            };
            let inter = position(si.intersection(sj))
                .ok_or_else(|| describe("intersection is not closed"))?;
            let joined = position(closure(p, si.union(sj), kind))
                .ok_or_else(|| describe("closure of union is missing"))?;
            let (meet, join) = match kind {
                StructureKind::Ideal => (inter, joined),
                StructureKind::Filter => (joined, inter),
            };
            if mlb(&lattice, i, j) != ElementSet::singleton(meet) {
                return Err(describe("meet differs"));
            }
            if mub(&lattice, i, j) != ElementSet::singleton(join) {
                return Err(describe("join differs"));
            }
        }
    }
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(p: &Poset, labels: &[&str]) -> ElementSet {
        p.set_of(labels).unwrap()
    }

    #[test]
    fn closed_structure_examples() {
        let p = fixtures::fig1();
        assert!(is_closed_structure(&p, set(&p, &["0", "x"]), StructureKind::Ideal).holds());
        let v = is_closed_structure(&p, set(&p, &["0", "x", "y"]), StructureKind::Ideal);
        let w = v.witness().unwrap();
        assert_eq!(w.reason, Reason::IdealJoinClosed);
        assert_eq!(w.elements, vec!["x".to_string(), "y".to_string()]);
        for kind in [StructureKind::Ideal, StructureKind::Filter] {
            assert!(is_closed_structure(&p, p.all(), kind).holds());
            assert!(is_closed_structure(&p, ElementSet::EMPTY, kind).holds());
        }
        let v = is_closed_structure(&p, set(&p, &["x"]), StructureKind::Ideal);
        assert_eq!(v.witness().unwrap().reason, Reason::IdealDownClosed);
        let v = is_closed_structure(&p, set(&p, &["x"]), StructureKind::Filter);
        assert_eq!(v.witness().unwrap().reason, Reason::FilterUpClosed);
    }

    #[test]
    fn closure_examples() {
        let p = fixtures::fig1();
        assert_eq!(
            closure(&p, set(&p, &["x", "y"]), StructureKind::Ideal),
            p.all()
        );
        assert_eq!(
            closure(&p, set(&p, &["0"]), StructureKind::Ideal),
            set(&p, &["0"])
        );
        assert_eq!(
            closure(&p, ElementSet::EMPTY, StructureKind::Ideal),
            ElementSet::EMPTY
        );
        // mlb(xy, x_yz) = {x, y} pulls x into the filter generated by y,
        // and then mlb(x, y) = {0}.
        assert_eq!(closure(&p, set(&p, &["y"]), StructureKind::Filter), p.all());
        assert_eq!(
            closure(&p, set(&p, &["xy_z"]), StructureKind::Filter),
            set(&p, &["xy_z"])
        );
        let hex = fixtures::hex6();
        assert_eq!(
            closure(&hex, set(&hex, &["c"]), StructureKind::Filter),
            set(&hex, &["c", "⊤"])
        );
    }

    #[test]
    fn convexity_examples() {
        let p = fixtures::fig1();
        assert!(is_convex(&p, set(&p, &["y", "xy"])).holds());
        let v = is_convex(&p, set(&p, &["0", "xy"]));
        assert_eq!(
            v.witness().unwrap().elements,
            vec!["0".to_string(), "x".to_string(), "xy".to_string()]
        );
        assert!(is_convex(&p, p.all()).holds());
    }

    #[test]
    fn sub_quasi_lattice_examples() {
        let p = fixtures::fig1();
        let (y, xy) = (p.index_of("y").unwrap(), p.index_of("xy").unwrap());
        let both = p.up_set(y).intersection(p.down_set(xy));
        assert_eq!(both, set(&p, &["y", "xy"]));
        assert!(is_sub_quasi_lattice(&p, both).holds());
        assert!(is_sub_quasi_lattice(&p, set(&p, &["z"])).holds());
        let v = is_sub_quasi_lattice(&p, set(&p, &["x", "y"]));
        assert_eq!(v.witness().unwrap().reason, Reason::SubJoinClosed);
    }

    #[test]
    fn enumeration_examples() {
        let c2 = fixtures::chain2();
        assert_eq!(
            all_structures(&c2, StructureKind::Ideal).unwrap(),
            vec![ElementSet::EMPTY, set(&c2, &["0"]), c2.all()]
        );
        let m3 = fixtures::m3();
        let expected: Vec<ElementSet> = [
            &[][..],
            &["0"][..],
            &["0", "a"][..],
            &["0", "b"][..],
            &["0", "c"][..],
            &["0", "a", "b", "c", "1"][..],
        ]
        .iter()
        .map(|l| set(&m3, l))
        .collect();
        assert_eq!(all_structures(&m3, StructureKind::Ideal).unwrap(), expected);

        let anti3 =
            Poset::from_relation(&["a", "b", "c"], &[("a", "a"), ("b", "b"), ("c", "c")]).unwrap();
        assert_eq!(
            all_structures(&anti3, StructureKind::Ideal).unwrap().len(),
            8
        );
    }

    #[test]
    fn enumeration_bound() {
        let labels: Vec<String> = (0..21).map(|i| format!("e{i}")).collect();
        let pairs: Vec<(String, String)> = labels.iter().map(|l| (l.clone(), l.clone())).collect();
        let big = Poset::from_relation(&labels, &pairs).unwrap();
        assert!(matches!(
            all_structures(&big, StructureKind::Ideal),
            Err(Error::SizeExceeded {
                size: 21,
                max: 20,
                ..
            })
        ));
    }

    #[test]
    fn structure_lattice_examples() {
        let c2 = structure_lattice(&fixtures::chain2(), StructureKind::Ideal).unwrap();
        assert!(c2.is_isomorphic(&fixtures::chain3()));
        assert_eq!(c2.labels(), &["{}", "{0}", "{0;1}"]);

        let m3 = structure_lattice(&fixtures::m3(), StructureKind::Ideal).unwrap();
        assert_eq!(m3.len(), 6);
        assert_eq!(classify(&m3).kind, Kind::Lattice);
        assert!(m3.leq_labels("{}", "{0;a}").unwrap());
        assert!(m3.leq_labels("{0;a}", "{0;a;b;c;1}").unwrap());

        let one = Poset::from_covers::<_, &str, &str>(&["a"], &[]).unwrap();
        let l = structure_lattice(&one, StructureKind::Filter).unwrap();
        assert!(l.is_isomorphic(&fixtures::chain2()));

        for (name, p) in fixtures::all() {
            for kind in [StructureKind::Ideal, StructureKind::Filter] {
                assert!(structure_lattice(&p, kind).is_ok(), "{name} {kind:?}");
            }
        }
    }

    #[test]
    fn filters_are_dual_ideals() {
        for (_, p) in fixtures::all() {
            assert_eq!(
                all_structures(&p, StructureKind::Filter).unwrap(),
                all_structures(&p.dual(), StructureKind::Ideal).unwrap()
            );
        }
    }
}
