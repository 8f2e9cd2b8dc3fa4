//! Exhaustive verification of the structural facts about quasi-lattices over
//! every labeled poset up to a size bound.
//!
//! Each [`Claim`] is a named statement with a per-poset check. A sweep walks
//! all labeled posets of each size, splits them into contiguous chunks for
//! `jobs` worker threads, and merges the partial results in chunk order, so
//! the report does not depend on the number of workers.

use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::congruence::{
    check_interval_lemma, is_congruence, is_q_homomorphism, kernel_partition, quotient,
    satisfies_star, Partition, PosetMap,
};
use crate::enumerate::{all_partitions, all_posets};
use crate::error::{Error, Result};
use crate::format::format_poset;
use crate::ideals::{
    all_structures, is_closed_structure, is_convex, is_sub_quasi_lattice, structure_lattice,
    StructureKind,
};
use crate::ops::{check_identities, classify, is_associative, is_modular, mlb, mub, Kind};
use crate::poset::Poset;
use crate::verdict::Verdict;

/// Largest target lattice for the homomorphism-kernel claim.
pub const HOM_TARGET_LIMIT: usize = 4;

/// A checked statement. See [`Claim::statement`] for each one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Prop22,
    Thm23,
    Thm32,
    Prop36,
    Sec3Intersections,
    Lem42,
    Thm45Forward,
    Thm45Backward,
    PartitionLattice,
    StarUniversal,
    IdentityCongruence,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Prop22,
        Claim::Thm23,
        Claim::Thm32,
        Claim::Prop36,
        Claim::Sec3Intersections,
        Claim::Lem42,
        Claim::Thm45Forward,
        Claim::Thm45Backward,
        Claim::PartitionLattice,
        Claim::StarUniversal,
        Claim::IdentityCongruence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Prop22 => "prop22",
            Claim::Thm23 => "thm23",
            Claim::Thm32 => "thm32",
            Claim::Prop36 => "prop36",
            Claim::Sec3Intersections => "sec3_intersections",
            Claim::Lem42 => "lem42",
            Claim::Thm45Forward => "thm45_forward",
            Claim::Thm45Backward => "thm45_backward",
            Claim::PartitionLattice => "partition_lattice",
            Claim::StarUniversal => "star_universal",
            Claim::IdentityCongruence => "identity_congruence",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::Prop22 => "identities A1-A6 hold in every quasi-lattice",
            Claim::Thm23 => "a quasi-lattice is associative iff it is a lattice",
            Claim::Thm32 => "a modular quasi-lattice is a lattice",
            Claim::Prop36 => {
                "ideals and filters form lattices with meet = intersection, join = closure of union"
            }
            Claim::Sec3Intersections => {
                "intersections of ideals (filters) are ideals (filters); filter ∩ ideal is a convex sub-quasi-lattice"
            }
            Claim::Lem42 => "congruence classes contain the intervals between bounds of related pairs",
            Claim::Thm45Forward => {
                "the quotient by a congruence is a lattice and the projection a q-lattice homomorphism"
            }
            Claim::Thm45Backward => {
                "the kernel of a surjective q-lattice homomorphism onto a lattice is a congruence satisfying (*)"
            }
            Claim::PartitionLattice => "meets and joins of congruences in the partition lattice are congruences",
            Claim::StarUniversal => "every partition of a finite quasi-lattice satisfies (*)",
            Claim::IdentityCongruence => "the identity partition is a congruence iff the quasi-lattice is a lattice",
        }
    }

    /// Size swept when no bound is given.
    pub fn default_n(self) -> usize {
        match self {
            Claim::Prop22
            | Claim::Thm23
            | Claim::Thm32
            | Claim::Prop36
            | Claim::StarUniversal
            | Claim::IdentityCongruence => 5,
            _ => 4,
        }
    }

    /// Largest accepted size.
    pub fn max_n(self) -> usize {
        match self {
            Claim::Lem42 | Claim::Thm45Forward | Claim::Thm45Backward | Claim::PartitionLattice => {
                4
            }
            Claim::Sec3Intersections => 5,
            _ => 6,
        }
    }

    fn needs_partitions(self) -> bool {
        matches!(
            self,
            Claim::Lem42 | Claim::Thm45Forward | Claim::PartitionLattice | Claim::StarUniversal
        )
    }

    /// Parses a comma-separated list of ids; `all` selects every claim.
    pub fn parse_list(s: &str) -> Result<Vec<Claim>> {
        let mut out = Vec::new();
        for id in s.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if id == "all" {
                out.extend(Claim::ALL);
            } else {
                out.push(id.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Instance counts for one claim at one ground-set size.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SizeStats {
    pub n: usize,
    pub posets: u64,
    pub not_quasi_lattices: u64,
    pub quasi_lattices: u64,
    pub lattices: u64,
    /// Individual instances checked (posets, poset-partition pairs, maps, ...).
    pub checks: u64,
}

impl SizeStats {
    fn add(&mut self, other: &SizeStats) {
        self.posets += other.posets;
        self.not_quasi_lattices += other.not_quasi_lattices;
        self.quasi_lattices += other.quasi_lattices;
        self.lattices += other.lattices;
        self.checks += other.checks;
    }
}

/// A failing instance, replayable from its poset and context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub claim: Claim,
    pub poset: Poset,
    /// Partition literal or map, when the claim ranges over those.
    pub context: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: Claim,
    pub n_max: usize,
    pub sizes: Vec<SizeStats>,
    pub counterexamples: Vec<Counterexample>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn total_checks(&self) -> u64 {
        self.sizes.iter().map(|s| s.checks).sum()
    }

    pub fn size(&self, n: usize) -> Option<&SizeStats> {
        self.sizes.iter().find(|s| s.n == n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub claims: Vec<ClaimReport>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimReport::passed)
    }

    pub fn claim(&self, c: Claim) -> Option<&ClaimReport> {
        self.claims.iter().find(|r| r.claim == c)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.claims.iter().flat_map(|c| c.counterexamples.iter())
    }

    /// Line-oriented text rendering; identical for identical sweeps.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = writeln!(
                out,
                "claim {} n<={} {} ({} checks, {} counterexamples)",
                c.claim,
                c.n_max,
                if c.passed() { "PASS" } else { "FAIL" },
                c.total_checks(),
                c.counterexamples.len()
            );
            for s in &c.sizes {
                let _ = writeln!(
                    out,
                    "  n={} posets={} not-quasi={} quasi={} lattice={} checks={}",
                    s.n, s.posets, s.not_quasi_lattices, s.quasi_lattices, s.lattices, s.checks
                );
            }
            for ce in &c.counterexamples {
                let covers: Vec<String> = ce
                    .poset
                    .cover_labels()
                    .iter()
                    .map(|(a, b)| format!("{a}<{b}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "  counterexample [{}] covers {{{}}}{}: {}",
                    ce.poset.labels().join(" "),
                    covers.join(" "),
                    ce.context
                        .as_deref()
                        .map(|c| format!(" with {c}"))
                        .unwrap_or_default(),
                    ce.detail
                );
            }
        }
        let _ = writeln!(
            out,
            "result {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }

    /// Writes each counterexample as a poset file (context and detail as
    /// comments) and returns the paths written.
    pub fn write_counterexamples(&self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        let mut written = Vec::new();
        if self.counterexamples().next().is_none() {
            return Ok(written);
        }
        std::fs::create_dir_all(dir)?;
        for c in &self.claims {
            for (k, ce) in c.counterexamples.iter().enumerate() {
                let name = format!("{}-{}", c.claim, k + 1);
                let mut text = String::new();
                let _ = writeln!(text, "# claim {}: {}", c.claim, c.claim.statement());
                if let Some(ctx) = &ce.context {
                    let _ = writeln!(text, "# with {ctx}");
                }
                let _ = writeln!(text, "# {}", ce.detail);
                text.push_str(&format_poset(&ce.poset, Some(&name)));
                let path = dir.join(format!("{name}.qlat"));
                std::fs::write(&path, text)?;
                written.push(path);
            }
        }
        Ok(written)
    }
}

/// Shared per-size inputs.
struct SizeContext {
    partitions: Vec<Partition>,
    /// Labeled lattices of every size `<= min(n, 4)`.
    lattices: Vec<Poset>,
}

#[derive(Default)]
struct Partial {
    stats: SizeStats,
    counterexamples: Vec<Counterexample>,
}

impl Partial {
    fn fail(
        &mut self,
        claim: Claim,
        p: &Poset,
        context: Option<String>,
        detail: impl Into<String>,
    ) {
        self.counterexamples.push(Counterexample {
            claim,
            poset: p.clone(),
            context,
            detail: detail.into(),
        });
    }
}

fn describe(v: &Verdict) -> String {
    v.to_string()
}

fn check_poset(claim: Claim, p: &Poset, kind: Kind, ctx: &SizeContext, out: &mut Partial) {
    let ql = kind != Kind::NotQuasiLattice;
    let lattice = kind == Kind::Lattice;
    match claim {
        Claim::Prop22 if ql => {
            out.stats.checks += 1;
            match check_identities(p) {
                Ok(Verdict::Holds) => {}
                Ok(v) => out.fail(claim, p, None, describe(&v)),
                Err(e) => out.fail(claim, p, None, e.to_string()),
            }
        }
        Claim::Thm23 if ql => {
            out.stats.checks += 1;
            match is_associative(p) {
                Ok(v) if v.holds() != lattice => out.fail(
                    claim,
                    p,
                    None,
                    format!("associativity {} but classified {kind}", describe(&v)),
                ),
                Ok(_) => {}
                Err(e) => out.fail(claim, p, None, e.to_string()),
            }
        }
        Claim::Thm32 if ql => {
            out.stats.checks += 1;
            match is_modular(p) {
                Ok(v) if v.holds() && !lattice => {
                    out.fail(claim, p, None, format!("modular but classified {kind}"))
                }
                Ok(_) => {}
                Err(e) => out.fail(claim, p, None, e.to_string()),
            }
        }
        Claim::Prop36 => {
            for k in [StructureKind::Ideal, StructureKind::Filter] {
                out.stats.checks += 1;
                if let Err(e) = structure_lattice(p, k) {
                    out.fail(claim, p, Some(k.name().to_string()), e.to_string());
                }
            }
        }
        Claim::Sec3Intersections => check_intersections(p, out),
        Claim::Lem42 if ql => {
            for theta in &ctx.partitions {
                if !matches!(is_congruence(p, theta), Ok(Verdict::Holds)) {
                    continue;
                }
                out.stats.checks += 1;
                let context = Some(theta.to_literal(p));
                match check_interval_lemma(p, theta) {
                    Ok(Verdict::Holds) => {}
                    Ok(v) => out.fail(claim, p, context.clone(), describe(&v)),
                    Err(e) => out.fail(claim, p, context.clone(), e.to_string()),
                }
                for &b in theta.blocks() {
                    if let Verdict::Fails(w) = is_convex(p, b) {
                        out.fail(claim, p, context.clone(), format!("block not convex: {w}"));
                    }
                }
            }
        }
        Claim::Thm45Forward if ql => {
            for theta in &ctx.partitions {
                if !matches!(is_congruence(p, theta), Ok(Verdict::Holds)) {
                    continue;
                }
                out.stats.checks += 1;
                let context = Some(theta.to_literal(p));
                match quotient(p, theta) {
                    Err(e) => out.fail(claim, p, context, e.to_string()),
                    Ok(q) => {
                        if classify(&q.poset).kind != Kind::Lattice {
                            out.fail(claim, p, context.clone(), "quotient is not a lattice");
                        }
                        let hom = q.projection_map(p).map(|pi| is_q_homomorphism(&pi));
                        if !matches!(hom, Ok(Verdict::Holds)) {
                            out.fail(
                                claim,
                                p,
                                context.clone(),
                                "projection is not a homomorphism",
                            );
                        }
                        if let Some(detail) = class_bounds_mismatch(p, &q.poset, &q.projection) {
                            out.fail(claim, p, context, detail);
                        }
                    }
                }
            }
        }
        Claim::Thm45Backward if ql => check_backward(p, ctx, out),
        Claim::PartitionLattice if ql => {
            let congruences: Vec<&Partition> = ctx
                .partitions
                .iter()
                .filter(|t| matches!(is_congruence(p, t), Ok(Verdict::Holds)))
                .collect();
            for (i, a) in congruences.iter().enumerate() {
                for b in &congruences[i..] {
                    out.stats.checks += 1;
                    for (op, combined) in [("meet", a.meet(b)), ("join", a.join(b))] {
                        if !matches!(is_congruence(p, &combined), Ok(Verdict::Holds)) {
                            out.fail(
                                claim,
                                p,
                                Some(format!("{} and {}", a.to_literal(p), b.to_literal(p))),
                                format!(
                                    "partition {op} {} is not a congruence",
                                    combined.to_literal(p)
                                ),
                            );
                        }
                    }
                }
            }
        }
        Claim::StarUniversal if ql => {
            for theta in &ctx.partitions {
                out.stats.checks += 1;
                match satisfies_star(p, theta) {
                    Ok(Verdict::Holds) => {}
                    Ok(v) => out.fail(claim, p, Some(theta.to_literal(p)), describe(&v)),
                    Err(e) => out.fail(claim, p, Some(theta.to_literal(p)), e.to_string()),
                }
            }
        }
        Claim::IdentityCongruence if ql => {
            out.stats.checks += 1;
            match is_congruence(p, &Partition::identity(p.len())) {
                Ok(v) if v.holds() != lattice => out.fail(
                    claim,
                    p,
                    None,
                    format!(
                        "identity partition congruence: {} but classified {kind}",
                        describe(&v)
                    ),
                ),
                Ok(_) => {}
                Err(e) => out.fail(claim, p, None, e.to_string()),
            }
        }
        _ => {}
    }
}

/// `[x] ^ [y] = [m]` for every `m` in mlb(x, y), and dually.
fn class_bounds_mismatch(p: &Poset, q: &Poset, projection: &[usize]) -> Option<String> {
    for x in 0..p.len() {
        for y in 0..p.len() {
            let (bx, by) = (projection[x], projection[y]);
            for m in mlb(p, x, y) {
                if mlb(q, bx, by) != crate::ElementSet::singleton(projection[m]) {
                    return Some(format!(
                        "[{}] ^ [{}] != [{}]",
                        p.label(x),
                        p.label(y),
                        p.label(m)
                    ));
                }
            }
            for j in mub(p, x, y) {
                if mub(q, bx, by) != crate::ElementSet::singleton(projection[j]) {
                    return Some(format!(
                        "[{}] v [{}] != [{}]",
                        p.label(x),
                        p.label(y),
                        p.label(j)
                    ));
                }
            }
        }
    }
    None
}

fn check_intersections(p: &Poset, out: &mut Partial) {
    let (Ok(ideals), Ok(filters)) = (
        all_structures(p, StructureKind::Ideal),
        all_structures(p, StructureKind::Filter),
    ) else {
        out.fail(
            Claim::Sec3Intersections,
            p,
            None,
            "structure enumeration failed",
        );
        return;
    };
    for (kind, family) in [
        (StructureKind::Ideal, &ideals),
        (StructureKind::Filter, &filters),
    ] {
        for (i, &a) in family.iter().enumerate() {
            for (j, &b) in family.iter().enumerate().skip(i) {
                out.stats.checks += 1;
                let ab = a.intersection(b);
                if let Verdict::Fails(w) = is_closed_structure(p, ab, kind) {
                    out.fail(
                        Claim::Sec3Intersections,
                        p,
                        Some(format!(
                            "{} {:?} ∩ {:?}",
                            kind.name(),
                            p.labels_of(a),
                            p.labels_of(b)
                        )),
                        w.to_string(),
                    );
                }
                for &c in &family[j..] {
                    out.stats.checks += 1;
                    if let Verdict::Fails(w) = is_closed_structure(p, ab.intersection(c), kind) {
                        out.fail(
                            Claim::Sec3Intersections,
                            p,
                            Some(format!(
                                "{} {:?} ∩ {:?} ∩ {:?}",
                                kind.name(),
                                p.labels_of(a),
                                p.labels_of(b),
                                p.labels_of(c)
                            )),
                            w.to_string(),
                        );
                    }
                }
            }
        }
    }
    for &f in &filters {
        for &i in &ideals {
            out.stats.checks += 1;
            let s = f.intersection(i);
            for v in [is_sub_quasi_lattice(p, s), is_convex(p, s)] {
                if let Verdict::Fails(w) = v {
                    out.fail(
                        Claim::Sec3Intersections,
                        p,
                        Some(format!(
                            "filter {:?} ∩ ideal {:?}",
                            p.labels_of(f),
                            p.labels_of(i)
                        )),
                        w.to_string(),
                    );
                }
            }
        }
    }
}

fn check_backward(p: &Poset, ctx: &SizeContext, out: &mut Partial) {
    let n = p.len();
    for target in &ctx.lattices {
        let m = target.len();
        if m > n {
            continue;
        }
        let mut image = vec![0usize; n];
        loop {
            let covered: usize = image.iter().fold(0usize, |acc, &j| acc | 1 << j);
            if covered == (1 << m) - 1 {
                let map = PosetMap::new(p, target, image.clone()).expect("in-range map");
                if is_q_homomorphism(&map).holds() {
                    out.stats.checks += 1;
                    let context = Some(format!(
                        "map to [{}] = {}",
                        target.labels().join(" "),
                        image
                            .iter()
                            .map(|&j| target.label(j))
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                    match kernel_partition(&map) {
                        Err(e) => out.fail(Claim::Thm45Backward, p, context, e.to_string()),
                        Ok(theta) => {
                            for (what, v) in [
                                ("congruence", is_congruence(p, &theta)),
                                ("condition (*)", satisfies_star(p, &theta)),
                            ] {
                                match v {
                                    Ok(Verdict::Holds) => {}
                                    Ok(v) => out.fail(
                                        Claim::Thm45Backward,
                                        p,
                                        context.clone(),
                                        format!("kernel {} fails {what}: {v}", theta.to_literal(p)),
                                    ),
                                    Err(e) => out.fail(
                                        Claim::Thm45Backward,
                                        p,
                                        context.clone(),
                                        e.to_string(),
                                    ),
                                }
                            }
                        }
                    }
                }
            }
            // Odometer over target^source.
            let Some(pos) = (0..n).rev().find(|&i| image[i] + 1 < m) else {
                break;
            };
            image[pos] += 1;
            for x in &mut image[pos + 1..] {
                *x = 0;
            }
        }
    }
}

fn size_context(n: usize, claims: &[Claim]) -> Result<SizeContext> {
    let partitions = if claims.iter().any(|c| c.needs_partitions()) {
        all_partitions(n)?.collect()
    } else {
        Vec::new()
    };
    let lattices = if claims.contains(&Claim::Thm45Backward) {
        let mut v = Vec::new();
        for m in 1..=n.min(HOM_TARGET_LIMIT) {
            v.extend(all_posets(m)?.filter(|l| classify(l).kind == Kind::Lattice));
        }
        v
    } else {
        Vec::new()
    };
    Ok(SizeContext {
        partitions,
        lattices,
    })
}

fn run_chunk(posets: &[Poset], n: usize, claims: &[Claim], ctx: &SizeContext) -> Vec<Partial> {
    let mut parts: Vec<Partial> = claims
        .iter()
        .map(|_| Partial {
            stats: SizeStats {
                n,
                ..SizeStats::default()
            },
            counterexamples: Vec::new(),
        })
        .collect();
    for p in posets {
        let kind = classify(p).kind;
        for (claim, part) in claims.iter().zip(parts.iter_mut()) {
            part.stats.posets += 1;
            match kind {
                Kind::NotQuasiLattice => part.stats.not_quasi_lattices += 1,
                Kind::QuasiLattice => part.stats.quasi_lattices += 1,
                Kind::Lattice => part.stats.lattices += 1,
            }
            check_poset(*claim, p, kind, ctx, part);
        }
    }
    parts
}

/// Sweeps each `(claim, n_max)` in `plan` over all labeled posets of sizes
/// `1..=n_max`, using `jobs` worker threads.
pub fn run_plan(plan: &[(Claim, usize)], jobs: usize) -> Result<SweepReport> {
    let jobs = jobs.max(1);
    let mut plan: Vec<(Claim, usize)> = plan.to_vec();
    plan.sort();
    plan.dedup_by_key(|(c, _)| *c);
    for &(claim, n) in &plan {
        if n == 0 || n > claim.max_n() {
            return Err(Error::SizeExceeded {
                what: claim.id(),
                size: n,
                max: claim.max_n(),
            });
        }
    }

    let mut reports: Vec<ClaimReport> = plan
        .iter()
        .map(|&(claim, n_max)| ClaimReport {
            claim,
            n_max,
            sizes: Vec::new(),
            counterexamples: Vec::new(),
        })
        .collect();
    let top = plan.iter().map(|&(_, n)| n).max().unwrap_or(0);

    for n in 1..=top {
        let active: Vec<Claim> = plan
            .iter()
            .filter(|&&(_, m)| n <= m)
            .map(|&(c, _)| c)
            .collect();
        let ctx = size_context(n, &active)?;
        let posets: Vec<Poset> = all_posets(n)?.collect();
        let chunk = posets.len().div_ceil(jobs).max(1);
        let results: Vec<Vec<Partial>> = if jobs == 1 {
            vec![run_chunk(&posets, n, &active, &ctx)]
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = posets
                    .chunks(chunk)
                    .map(|c| {
                        let (active, ctx) = (&active, &ctx);
                        s.spawn(move || run_chunk(c, n, active, ctx))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("sweep worker panicked"))
                    .collect()
            })
        };

        for (k, claim) in active.iter().enumerate() {
            let report = reports
                .iter_mut()
                .find(|r| r.claim == *claim)
                .expect("claim has a report");
            let mut stats = SizeStats {
                n,
                ..SizeStats::default()
            };
            for chunk in &results {
                stats.add(&chunk[k].stats);
                report
                    .counterexamples
                    .extend(chunk[k].counterexamples.iter().cloned());
            }
            report.sizes.push(stats);
        }
    }
    Ok(SweepReport { claims: reports })
}

/// Sweeps every claim in `claims` over all sizes `1..=n_max`. Errors with
/// `SizeExceeded` when `n_max` is beyond a claim's bound.
pub fn verify_theorems(n_max: usize, claims: &[Claim], jobs: usize) -> Result<SweepReport> {
    let plan: Vec<(Claim, usize)> = claims.iter().map(|&c| (c, n_max)).collect();
    run_plan(&plan, jobs)
}

/// Sweeps each claim up to its own default size.
pub fn verify_defaults(claims: &[Claim], jobs: usize) -> Result<SweepReport> {
    let plan: Vec<(Claim, usize)> = claims.iter().map(|&c| (c, c.default_n())).collect();
    run_plan(&plan, jobs)
}
