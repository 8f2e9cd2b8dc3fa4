//! Set-valued join and meet, quasi-lattice classification, and the
//! associativity, modularity and absorption checks.
//!
//! In a quasi-lattice a pair may have several minimal upper bounds, so `a v b`
//! is a set. The operations lift to sets elementwise: `A v B` is the union of
//! `mub(a, b)` over `a in A`, `b in B`.

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::poset::{Poset, Side};
use crate::verdict::{Reason, Verdict, Witness};

/// Minimal upper bounds of `{a, b}`.
pub fn mub(p: &Poset, a: usize, b: usize) -> ElementSet {
    p.extremal(p.up_set(a).intersection(p.up_set(b)), Side::Min)
}

/// Maximal lower bounds of `{a, b}`.
pub fn mlb(p: &Poset, a: usize, b: usize) -> ElementSet {
    p.extremal(p.down_set(a).intersection(p.down_set(b)), Side::Max)
}

pub fn mub_labels(p: &Poset, a: &str, b: &str) -> Result<ElementSet> {
    Ok(mub(p, p.index_of(a)?, p.index_of(b)?))
}

pub fn mlb_labels(p: &Poset, a: &str, b: &str) -> Result<ElementSet> {
    Ok(mlb(p, p.index_of(a)?, p.index_of(b)?))
}

/// `A v B`: every minimal upper bound of every pair from `A x B`.
pub fn set_join(p: &Poset, a: ElementSet, b: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for x in a {
        for y in b {
            out = out.union(mub(p, x, y));
        }
    }
    out
}

/// `A ^ B`, dual of [`set_join`].
pub fn set_meet(p: &Poset, a: ElementSet, b: ElementSet) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for x in a {
        for y in b {
            out = out.union(mlb(p, x, y));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    NotQuasiLattice,
    QuasiLattice,
    Lattice,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::NotQuasiLattice => "not-quasi-lattice",
            Kind::QuasiLattice => "quasi-lattice",
            Kind::Lattice => "lattice",
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of [`classify`]. The witness pair is present for every kind except
/// `Lattice`: a pair with an empty bound set for `NotQuasiLattice`, a pair
/// with two or more minimal upper (or maximal lower) bounds for
/// `QuasiLattice`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: Kind,
    pub witness: Option<(usize, usize)>,
}

impl Classification {
    pub fn is_quasi_lattice(&self) -> bool {
        self.kind != Kind::NotQuasiLattice
    }

    pub fn witness_labels(&self, p: &Poset) -> Option<(String, String)> {
        self.witness
            .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}

pub fn classify(p: &Poset) -> Classification {
    let n = p.len();
    if let Some(w) = pairs(n).find(|&(a, b)| mub(p, a, b).is_empty() || mlb(p, a, b).is_empty()) {
        return Classification {
            kind: Kind::NotQuasiLattice,
            witness: Some(w),
        };
    }
    match pairs(n).find(|&(a, b)| mub(p, a, b).len() > 1 || mlb(p, a, b).len() > 1) {
        Some(w) => Classification {
            kind: Kind::QuasiLattice,
            witness: Some(w),
        },
        None => Classification {
            kind: Kind::Lattice,
            witness: None,
        },
    }
}

/// Errors with `NotAQuasiLattice` unless every pair has a minimal upper bound
/// and a maximal lower bound.
pub fn require_quasi_lattice(p: &Poset) -> Result<()> {
    let c = classify(p);
    match (c.kind, c.witness) {
        (Kind::NotQuasiLattice, Some((a, b))) => Err(Error::NotAQuasiLattice(
            p.label(a).to_string(),
            p.label(b).to_string(),
        )),
        _ => Ok(()),
    }
}

fn unequal(
    p: &Poset,
    reason: Reason,
    elements: &[usize],
    left: ElementSet,
    right: ElementSet,
) -> Option<Witness> {
    (left != right).then(|| {
        Witness::new(
            reason,
            elements.iter().map(|&i| p.label(i).to_string()).collect(),
        )
        .with_sides(p.labels_of(left), p.labels_of(right))
    })
}

/// Absorption-style identities A1 to A6 in set-lifted form.
pub fn check_identities(p: &Poset) -> Result<Verdict> {
    require_quasi_lattice(p)?;
    let n = p.len();
    let one = ElementSet::singleton;

    for a in 0..n {
        if let Some(w) = unequal(p, Reason::A1, &[a], mub(p, a, a), one(a)) {
            return Ok(Verdict::Fails(w));
        }
    }
    for a in 0..n {
        if let Some(w) = unequal(p, Reason::A2, &[a], mlb(p, a, a), one(a)) {
            return Ok(Verdict::Fails(w));
        }
    }

    type Side = fn(&Poset, usize, usize) -> (ElementSet, ElementSet);
    let binary: [(Reason, Side); 6] = [
        (Reason::A3, |p, a, b| (mub(p, a, b), mub(p, b, a))),
        (Reason::A4, |p, a, b| (mlb(p, a, b), mlb(p, b, a))),
        (Reason::A5Left, |p, a, b| {
            (
                set_join(p, ElementSet::singleton(a), mlb(p, a, b)),
                ElementSet::singleton(a),
            )
        }),
        (Reason::A5Right, |p, a, b| {
            (
                set_join(p, mlb(p, a, b), ElementSet::singleton(a)),
                ElementSet::singleton(a),
            )
        }),
        (Reason::A6Left, |p, a, b| {
            (
                set_meet(p, ElementSet::singleton(a), mub(p, a, b)),
                ElementSet::singleton(a),
            )
        }),
        (Reason::A6Right, |p, a, b| {
            (
                set_meet(p, mub(p, a, b), ElementSet::singleton(a)),
                ElementSet::singleton(a),
            )
        }),
    ];
    for (reason, sides) in binary {
        for a in 0..n {
            for b in 0..n {
                let (l, r) = sides(p, a, b);
                if let Some(w) = unequal(p, reason, &[a, b], l, r) {
                    return Ok(Verdict::Fails(w));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `{a} v ({b} v {c}) = ({a} v {b}) v {c}` and the meet dual, for all triples.
pub fn is_associative(p: &Poset) -> Result<Verdict> {
    require_quasi_lattice(p)?;
    let n = p.len();
    let one = ElementSet::singleton;
    for a in 0..n {
        for b in 0..n {
            let ab_join = mub(p, a, b);
            let ab_meet = mlb(p, a, b);
            for c in 0..n {
                let left = set_join(p, one(a), mub(p, b, c));
                let right = set_join(p, ab_join, one(c));
                if let Some(w) = unequal(p, Reason::JoinAssociativity, &[a, b, c], left, right) {
                    return Ok(Verdict::Fails(w));
                }
                let left = set_meet(p, one(a), mlb(p, b, c));
                let right = set_meet(p, ab_meet, one(c));
                if let Some(w) = unequal(p, Reason::MeetAssociativity, &[a, b, c], left, right) {
                    return Ok(Verdict::Fails(w));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `{x} v ({y} ^ {z}) = ({x} v {y}) ^ {z}` for all triples with `x <= z`.
pub fn is_modular(p: &Poset) -> Result<Verdict> {
    require_quasi_lattice(p)?;
    let n = p.len();
    let one = ElementSet::singleton;
    for x in 0..n {
        for y in 0..n {
            let xy = mub(p, x, y);
            for z in p.up_set(x) {
                let left = set_join(p, one(x), mlb(p, y, z));
                let right = set_meet(p, xy, one(z));
                if let Some(w) = unequal(p, Reason::Modularity, &[x, y, z], left, right) {
                    return Ok(Verdict::Fails(w));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(p: &Poset, labels: &[&str]) -> ElementSet {
        p.set_of(labels).unwrap()
    }

    fn idx(p: &Poset, l: &str) -> usize {
        p.index_of(l).unwrap()
    }

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn mub_examples() {
        let fig1 = fixtures::fig1();
        assert_eq!(
            mub_labels(&fig1, "x", "y").unwrap(),
            set(&fig1, &["xy", "x_yz"])
        );
        assert_eq!(mub_labels(&fig1, "x", "x").unwrap(), set(&fig1, &["x"]));
        let hex = fixtures::hex6();
        assert_eq!(mub_labels(&hex, "a", "b").unwrap(), set(&hex, &["c", "d"]));
        let anti = Poset::from_relation(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        assert!(mub_labels(&anti, "a", "b").unwrap().is_empty());
        assert!(mub_labels(&anti, "a", "q").is_err());
    }

    #[test]
    fn mlb_examples() {
        let hex = fixtures::hex6();
        assert_eq!(mlb_labels(&hex, "c", "d").unwrap(), set(&hex, &["a", "b"]));
        assert_eq!(
            mub_labels(&hex.dual(), "c", "d").unwrap(),
            set(&hex, &["a", "b"])
        );
        let fig1 = fixtures::fig1();
        assert_eq!(mlb_labels(&fig1, "xy", "yz").unwrap(), set(&fig1, &["y"]));
        assert_eq!(mlb_labels(&fig1, "z", "z").unwrap(), set(&fig1, &["z"]));
    }

    #[test]
    fn set_join_examples() {
        let p = fixtures::fig1();
        let (x, y, z) = (idx(&p, "x"), idx(&p, "y"), idx(&p, "z"));
        let one = ElementSet::singleton;
        let yz = set_join(&p, one(y), one(z));
        assert_eq!(yz, set(&p, &["yz"]));
        assert_eq!(set_join(&p, one(x), yz), set(&p, &["x_yz"]));
        let xy = set_join(&p, one(x), one(y));
        assert_eq!(set_join(&p, xy, one(z)), set(&p, &["xy_z", "x_yz"]));
        assert!(set_join(&p, xy, ElementSet::EMPTY).is_empty());
        assert!(set_meet(&p, ElementSet::EMPTY, xy).is_empty());
    }

    #[test]
    fn classification_examples() {
        let fig1 = fixtures::fig1();
        let c = classify(&fig1);
        assert_eq!(c.kind, Kind::QuasiLattice);
        assert_eq!(c.witness_labels(&fig1), Some(("x".into(), "y".into())));
        assert_eq!(classify(&fixtures::m3()).kind, Kind::Lattice);
        assert_eq!(classify(&fixtures::hex6()).kind, Kind::QuasiLattice);
        let anti = Poset::from_relation(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        let c = classify(&anti);
        assert_eq!(c.kind, Kind::NotQuasiLattice);
        assert_eq!(c.witness_labels(&anti), Some(("a".into(), "b".into())));
    }

    #[test]
    fn checks_reject_non_quasi_lattices() {
        let anti = Poset::from_relation(&["a", "b"], &[("a", "a"), ("b", "b")]).unwrap();
        let expected = Error::NotAQuasiLattice("a".into(), "b".into());
        assert_eq!(check_identities(&anti).unwrap_err(), expected);
        assert_eq!(is_associative(&anti).unwrap_err(), expected);
        assert_eq!(is_modular(&anti).unwrap_err(), expected);
    }

    #[test]
    fn identities_on_fixtures() {
        for (name, p) in fixtures::all() {
            assert!(check_identities(&p).unwrap().holds(), "{name}");
        }
        let hex = fixtures::hex6();
        let (c, d) = (idx(&hex, "c"), idx(&hex, "d"));
        let meet = set_meet(&hex, ElementSet::singleton(c), ElementSet::singleton(d));
        assert_eq!(meet, set(&hex, &["a", "b"]));
        assert_eq!(
            set_join(&hex, meet, ElementSet::singleton(c)),
            set(&hex, &["c"])
        );
    }

    #[test]
    fn associativity_fails_on_fig1() {
        let v = is_associative(&fixtures::fig1()).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.reason, Reason::JoinAssociativity);
        assert_eq!(w.elements, strings(&["x", "y", "z"]));
        assert_eq!(
            w.sides,
            Some((strings(&["x_yz"]), strings(&["x_yz", "xy_z"])))
        );
        assert!(is_associative(&fixtures::m3()).unwrap().holds());
        assert!(is_associative(&fixtures::chain3()).unwrap().holds());
        assert!(!is_associative(&fixtures::hex6()).unwrap().holds());
    }

    #[test]
    fn modularity_examples() {
        let n5 = is_modular(&fixtures::n5()).unwrap();
        let w = n5.witness().unwrap();
        assert_eq!(w.elements, strings(&["a", "b", "c"]));
        assert_eq!(w.sides, Some((strings(&["a"]), strings(&["c"]))));

        assert!(is_modular(&fixtures::m3()).unwrap().holds());

        let hex = is_modular(&fixtures::hex6()).unwrap();
        let w = hex.witness().unwrap();
        assert_eq!(w.elements, strings(&["a", "b", "c"]));
        assert_eq!(
            w.sides,
            Some((strings(&["c", "d"]), strings(&["a", "b", "c"])))
        );
    }
}
