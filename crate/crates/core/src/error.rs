use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set is empty")]
    EmptyGroundSet,
    #[error("{what} has {size} elements; the limit is {max}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        max: usize,
    },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error(
        "invalid label `{0}`: labels must be nonempty and contain no whitespace, `|`, `,` or `#`"
    )]
    InvalidLabel(String),
    #[error("cover relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("relation is not reflexive: missing ({0}, {0})")]
    NotReflexive(String),
    #[error("relation is not antisymmetric: ({0}, {1}) and ({1}, {0}) with {0} != {1}")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive: ({0}, {1}) and ({1}, {2}) but not ({0}, {2})")]
    NotTransitive(String, String, String),
    #[error("poset is not a quasi-lattice: pair ({0}, {1}) has no minimal upper bound or no maximal lower bound")]
    NotAQuasiLattice(String, String),
    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),
    #[error("partition violates condition (*): {0}")]
    StarViolated(String),
    #[error("induced order on classes is not a partial order: {0}")]
    QuotientNotPoset(String),
    #[error("quotient is not a lattice: {0}")]
    QuotientNotLattice(String),
    #[error("quotient projection is inconsistent: {0}")]
    QuotientInconsistent(String),
    #[error("structure lattice check failed: {0}")]
    StructureLatticeViolation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map is not surjective: `{0}` has no preimage")]
    NotSurjective(String),
    #[error("target is not a lattice: {0}")]
    TargetNotLattice(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
