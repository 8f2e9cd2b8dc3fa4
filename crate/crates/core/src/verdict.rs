//! Pass/fail results with replayable counterexamples.

use std::fmt;

/// The clause a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `{a} v {a} = {a}`
    A1,
    /// `{a} ^ {a} = {a}`
    A2,
    /// `{a} v {b} = {b} v {a}`
    A3,
    /// `{a} ^ {b} = {b} ^ {a}`
    A4,
    /// `{a} v ({a} ^ {b}) = {a}`
    A5Left,
    /// `({a} ^ {b}) v {a} = {a}`
    A5Right,
    /// `{a} ^ ({a} v {b}) = {a}`
    A6Left,
    /// `({a} v {b}) ^ {a} = {a}`
    A6Right,
    JoinAssociativity,
    MeetAssociativity,
    Modularity,
    IdealJoinClosed,
    IdealDownClosed,
    FilterMeetClosed,
    FilterUpClosed,
    Convexity,
    SubJoinClosed,
    SubMeetClosed,
    CongruenceJoinCompatible,
    CongruenceMeetCompatible,
    CongruenceJoinClass,
    CongruenceMeetClass,
    StarJoin,
    StarMeet,
    IntervalLemma,
    HomomorphismJoin,
    HomomorphismMeet,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::A1 => "A1",
            Reason::A2 => "A2",
            Reason::A3 => "A3",
            Reason::A4 => "A4",
            Reason::A5Left => "A5-left",
            Reason::A5Right => "A5-right",
            Reason::A6Left => "A6-left",
            Reason::A6Right => "A6-right",
            Reason::JoinAssociativity => "join-assoc",
            Reason::MeetAssociativity => "meet-assoc",
            Reason::Modularity => "modular",
            Reason::IdealJoinClosed => "ideal-i",
            Reason::IdealDownClosed => "ideal-ii",
            Reason::FilterMeetClosed => "filter-i",
            Reason::FilterUpClosed => "filter-ii",
            Reason::Convexity => "convex",
            Reason::SubJoinClosed => "sub-join",
            Reason::SubMeetClosed => "sub-meet",
            Reason::CongruenceJoinCompatible => "cong-join",
            Reason::CongruenceMeetCompatible => "cong-meet",
            Reason::CongruenceJoinClass => "cong-join-class",
            Reason::CongruenceMeetClass => "cong-meet-class",
            Reason::StarJoin => "star-i",
            Reason::StarMeet => "star-ii",
            Reason::IntervalLemma => "interval",
            Reason::HomomorphismJoin => "hom-join",
            Reason::HomomorphismMeet => "hom-meet",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A failing instance: the violated clause, the element tuple it was found
/// at, and (where the clause is an equation) the two sides that differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub reason: Reason,
    pub elements: Vec<String>,
    pub sides: Option<(Vec<String>, Vec<String>)>,
}

impl Witness {
    pub fn new(reason: Reason, elements: Vec<String>) -> Self {
        Witness {
            reason,
            elements,
            sides: None,
        }
    }

    pub fn with_sides(mut self, left: Vec<String>, right: Vec<String>) -> Self {
        self.sides = Some((left, right));
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.reason, self.elements.join(", "))?;
        if let Some((left, right)) = &self.sides {
            write!(f, ": {{{}}} != {{{}}}", left.join(", "), right.join(", "))?;
        }
        Ok(())
    }
}

/// Outcome of a checked predicate. A failure always carries its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(w) => write!(f, "fails: {w}"),
        }
    }
}
