//! Bundled example posets, parsed from the files under `fixtures/`.

use crate::format::parse_poset_file;
use crate::poset::Poset;

pub const FIG1_TEXT: &str = include_str!("../fixtures/fig1.qlat");
pub const CHAIN2_TEXT: &str = include_str!("../fixtures/chain2.qlat");
pub const CHAIN3_TEXT: &str = include_str!("../fixtures/chain3.qlat");
pub const HEX6_TEXT: &str = include_str!("../fixtures/hex6.qlat");
pub const M3_TEXT: &str = include_str!("../fixtures/m3.qlat");
pub const N5_TEXT: &str = include_str!("../fixtures/n5.qlat");

fn load(text: &str) -> Poset {
    parse_poset_file(text).expect("bundled fixture parses")
}

/// Eight-element quasi-lattice in which `{x, y}` has two minimal upper bounds.
pub fn fig1() -> Poset {
    load(FIG1_TEXT)
}

pub fn chain2() -> Poset {
    load(CHAIN2_TEXT)
}

pub fn chain3() -> Poset {
    load(CHAIN3_TEXT)
}

/// `⊥ < a, b < c, d < ⊤`: every pair is bounded but `{a, b}` has two joins.
pub fn hex6() -> Poset {
    load(HEX6_TEXT)
}

pub fn m3() -> Poset {
    load(M3_TEXT)
}

pub fn n5() -> Poset {
    load(N5_TEXT)
}

/// All bundled fixtures with their names.
pub fn all() -> Vec<(&'static str, Poset)> {
    vec![
        ("FIG1", fig1()),
        ("CHAIN2", chain2()),
        ("CHAIN3", chain3()),
        ("HEX6", hex6()),
        ("M3", m3()),
        ("N5", n5()),
    ]
}

/// Looks up a fixture by case-insensitive name.
pub fn by_name(name: &str) -> Option<Poset> {
    all()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, p)| p)
}
