//! Exhaustive generators for relations and matroids on small universes,
//! and the catalog of claims checked over them.
//!
//! Every catalog entry is swept over all universes `{1..n}` for
//! `n = 0..=max_n`. Positive entries are expected to pass. Negative controls
//! are deliberately false variants (a hypothesis dropped) and are expected
//! to fail, which shows the sweep can find counterexamples. Exploratory
//! entries record an answer without expecting either outcome.

use std::fmt;
use std::time::{Duration, Instant};

use crate::constructions::{
    compose_matroid_relation_matroid, compose_relation_matroid_relation,
    equivalence_upper_decomposition, matroid_from_relation, minimal_neighborhood_family,
    relation_from_matroid,
};
use crate::error::{Error, Result};
use crate::matroid::{check_circuit_axioms, Matroid};
use crate::relation::{BinaryRelation, RelationProperties};
use crate::sets::{ElemSet, SetFamily, Universe};

/// Largest universe the generators accept.
pub const MAX_ENUMERATION: usize = 4;

/// Conjunction of required relation properties. `false` means "don't care".
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PropertyFilter {
    pub serial: bool,
    pub transitive: bool,
    pub reflexive: bool,
    pub symmetric: bool,
    pub equivalence: bool,
}

impl PropertyFilter {
    pub const NONE: PropertyFilter = PropertyFilter {
        serial: false,
        transitive: false,
        reflexive: false,
        symmetric: false,
        equivalence: false,
    };
    pub const SERIAL_TRANSITIVE: PropertyFilter = PropertyFilter {
        serial: true,
        transitive: true,
        ..Self::NONE
    };
    pub const REFLEXIVE_TRANSITIVE: PropertyFilter = PropertyFilter {
        reflexive: true,
        transitive: true,
        ..Self::NONE
    };
    pub const TRANSITIVE: PropertyFilter = PropertyFilter {
        transitive: true,
        ..Self::NONE
    };
    pub const EQUIVALENCE: PropertyFilter = PropertyFilter {
        equivalence: true,
        ..Self::NONE
    };

    pub fn accepts(&self, p: &RelationProperties) -> bool {
        (!self.serial || p.serial)
            && (!self.transitive || p.transitive)
            && (!self.reflexive || p.reflexive)
            && (!self.symmetric || p.symmetric)
            && (!self.equivalence || p.equivalence)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION {
        Err(Error::SearchSpaceTooLarge(n))
    } else {
        Ok(())
    }
}

/// Every relation on `{1..n}` satisfying `filter`, by ascending bit-matrix
/// value (see [`BinaryRelation::matrix_code`]).
pub fn enumerate_relations(
    n: usize,
    filter: PropertyFilter,
) -> Result<impl Iterator<Item = BinaryRelation>> {
    check_size(n)?;
    let u = Universe::numbered(n)?;
    Ok((0..1u64 << (n * n))
        .map(move |code| BinaryRelation::from_matrix_code(&u, code))
        .filter(move |r| filter.accepts(&r.properties())))
}

/// Every matroid on `{1..n}`, one per circuit family, ordered by the
/// family's sorted member masks.
pub fn enumerate_matroids(n: usize) -> Result<impl Iterator<Item = Matroid>> {
    check_size(n)?;
    let u = Universe::numbered(n)?;
    let candidates: Vec<u16> = (1..1u32 << n).map(|m| m as u16).collect();
    let mut antichains = Vec::new();
    grow_antichains(&candidates, &mut Vec::new(), &mut antichains);
    antichains.sort();
    Ok(antichains.into_iter().filter_map(move |masks| {
        let family = SetFamily::from_masks_unchecked(&u, masks);
        check_circuit_axioms(&family)
            .ok()
            .map(|()| Matroid::from_circuits_unchecked(family))
    }))
}

fn grow_antichains(rest: &[u16], current: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
    let Some((&next, tail)) = rest.split_first() else {
        out.push(current.clone());
        return;
    };
    grow_antichains(tail, current, out);
    let comparable = current.iter().any(|&c| c & !next == 0 || next & !c == 0);
    if !comparable {
        current.push(next);
        grow_antichains(tail, current, out);
        current.pop();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Positive,
    NegativeControl,
    Exploratory,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::Positive => "positive",
            EntryKind::NegativeControl => "negative-control",
            EntryKind::Exploratory => "exploratory",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        })
    }
}

/// The structure a counterexample was found in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Relation(BinaryRelation),
    Circuits(SetFamily),
    /// An existence claim failed over the whole sweep.
    Sweep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub universe_size: usize,
    pub subject: Subject,
    pub set: Option<ElemSet>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} ", self.universe_size)?;
        match &self.subject {
            Subject::Relation(r) => write!(f, "R={}", r.pair_notation())?,
            Subject::Circuits(c) => write!(f, "C(M)={c:?}")?,
            Subject::Sweep => f.write_str("sweep")?,
        }
        if let Some(x) = &self.set {
            write!(f, " X={x}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub kind: EntryKind,
    pub statement: String,
    pub universe_sizes: Vec<usize>,
    /// Structures enumerated, before any hypothesis filter.
    pub space_size: u64,
    /// Structures satisfying the entry's hypothesis.
    pub hypothesis_count: u64,
    pub outcome: Outcome,
    pub witnesses: Vec<Witness>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// Positive entries pass, negative controls fail, exploratory entries
    /// are always as expected.
    pub fn as_expected(&self) -> bool {
        match self.kind {
            EntryKind::Positive => self.passed(),
            EntryKind::NegativeControl => !self.passed(),
            EntryKind::Exploratory => true,
        }
    }

    /// One line without timing, stable across runs.
    pub fn summary_line(&self) -> String {
        let sizes = match (self.universe_sizes.first(), self.universe_sizes.last()) {
            (Some(a), Some(b)) => format!("{a}..{b}"),
            _ => "-".to_string(),
        };
        let verdict = match (self.kind, self.as_expected()) {
            (EntryKind::Positive, _) | (EntryKind::Exploratory, _) => "",
            (EntryKind::NegativeControl, true) => " (expected)",
            (EntryKind::NegativeControl, false) => " (UNEXPECTED)",
        };
        format!(
            "{} {}{} [{}] n={} space={} hypothesis={} witnesses={}",
            self.theorem_id,
            self.outcome,
            verdict,
            self.kind,
            sizes,
            self.space_size,
            self.hypothesis_count,
            self.witnesses.len()
        )
    }
}

#[derive(Default)]
struct Tally {
    space: u64,
    hypothesis: u64,
    witnesses: Vec<Witness>,
}

impl Tally {
    fn relation(&mut self, r: &BinaryRelation, set: Option<ElemSet>, detail: impl Into<String>) {
        self.witnesses.push(Witness {
            universe_size: r.universe().len(),
            subject: Subject::Relation(r.clone()),
            set,
            detail: detail.into(),
        });
    }

    fn matroid(&mut self, m: &Matroid, set: Option<ElemSet>, detail: impl Into<String>) {
        self.witnesses.push(Witness {
            universe_size: m.universe().len(),
            subject: Subject::Circuits(m.circuits().clone()),
            set,
            detail: detail.into(),
        });
    }
}

type Check = fn(usize, &mut Tally) -> Result<()>;

/// A registered claim.
pub struct CatalogEntry {
    pub id: &'static str,
    pub kind: EntryKind,
    pub statement: &'static str,
    check: Check,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        id: "P1",
        kind: EntryKind::Positive,
        statement: "R serial and transitive => C(R) satisfies the circuit axioms",
        check: p1_circuit_axioms,
    },
    CatalogEntry {
        id: "P2",
        kind: EntryKind::Positive,
        statement: "C(R) satisfies the circuit axioms => R serial; some such R is not transitive",
        check: p2_axioms_imply_serial,
    },
    CatalogEntry {
        id: "P3",
        kind: EntryKind::Positive,
        statement: "R serial and transitive => I(R) = {I : no RN(x) inside I} = {I : L(I) = {}} = {I : H(I^c) = U}",
        check: p3_independent_sets,
    },
    CatalogEntry {
        id: "P4",
        kind: EntryKind::Positive,
        statement: "R serial and transitive => M(R) = M(r(R))",
        check: p4_reflexive_closure,
    },
    CatalogEntry {
        id: "P5",
        kind: EntryKind::Positive,
        statement: "R equivalence, classes <= 2 => H(X) in cl(X) and cl(X) = H(X) + {u not in X : RN(u) = {u}}",
        check: p5_small_classes,
    },
    CatalogEntry {
        id: "P6",
        kind: EntryKind::Positive,
        statement: "R equivalence, classes >= 2 => cl(X) in H(X)",
        check: p6_large_classes,
    },
    CatalogEntry {
        id: "P7",
        kind: EntryKind::Positive,
        statement: "R equivalence => (H = cl on every X iff M(R) is a 2-circuit matroid)",
        check: p7_equivalence_two_circuit,
    },
    CatalogEntry {
        id: "P8",
        kind: EntryKind::Positive,
        statement: "R(M) is an equivalence relation",
        check: p8_induced_equivalence,
    },
    CatalogEntry {
        id: "P9",
        kind: EntryKind::Positive,
        statement: "cl_M({}) = {} => cl_M(X) in H_R(M)(X)",
        check: p9_loopless,
    },
    CatalogEntry {
        id: "P10",
        kind: EntryKind::Positive,
        statement: "all circuits of size <= 2 => H_R(M)(X) in cl_M(X)",
        check: p10_small_circuits,
    },
    CatalogEntry {
        id: "P11",
        kind: EntryKind::Positive,
        statement: "H_R(M) = cl_M on every X iff C(M) empty or M is a 2-circuit matroid",
        check: p11_matroid_two_circuit,
    },
    CatalogEntry {
        id: "P12",
        kind: EntryKind::Positive,
        statement: "C(M) finer than C(M(R(M))); M(R(M)) = M iff C(M) is a partition",
        check: p12_round_trip_matroid,
    },
    CatalogEntry {
        id: "P13",
        kind: EntryKind::Positive,
        statement: "R transitive => distinct minimal neighborhoods are disjoint",
        check: p13_disjoint_minimal,
    },
    CatalogEntry {
        id: "P14",
        kind: EntryKind::Positive,
        statement: "R reflexive and transitive => R(M(R)) in R; R serial and transitive => (R(M(R)) = R iff R equivalence)",
        check: p14_round_trip_relation,
    },
    CatalogEntry {
        id: "P2-converse-transitive",
        kind: EntryKind::NegativeControl,
        statement: "C(R) satisfies the circuit axioms => R transitive",
        check: n_axioms_imply_transitive,
    },
    CatalogEntry {
        id: "P7-without-2circuit",
        kind: EntryKind::NegativeControl,
        statement: "R equivalence => H = cl_M(R) on every X",
        check: n_equivalence_always_closure,
    },
    CatalogEntry {
        id: "P14-without-reflexive",
        kind: EntryKind::NegativeControl,
        statement: "R serial and transitive => R(M(R)) in R",
        check: n_round_trip_without_reflexive,
    },
    CatalogEntry {
        id: "P7-serial-transitive",
        kind: EntryKind::Exploratory,
        statement: "R serial and transitive => (H = cl on every X iff M(R) is a 2-circuit matroid)",
        check: e_serial_transitive_two_circuit,
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn run_theorem(theorem_id: &str, max_n: usize) -> Result<VerificationReport> {
    let entry = CATALOG
        .iter()
        .find(|e| e.id == theorem_id)
        .ok_or_else(|| Error::UnknownTheorem(theorem_id.to_string()))?;
    run_entry(entry, max_n)
}

/// Every catalog entry, in catalog order.
pub fn run_all(max_n: usize) -> Result<Vec<VerificationReport>> {
    CATALOG.iter().map(|e| run_entry(e, max_n)).collect()
}

fn run_entry(entry: &CatalogEntry, max_n: usize) -> Result<VerificationReport> {
    check_size(max_n)?;
    let start = Instant::now();
    let mut tally = Tally::default();
    (entry.check)(max_n, &mut tally)?;
    let outcome = if tally.witnesses.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    Ok(VerificationReport {
        theorem_id: entry.id.to_string(),
        kind: entry.kind,
        statement: entry.statement.to_string(),
        universe_sizes: (0..=max_n).collect(),
        space_size: tally.space,
        hypothesis_count: tally.hypothesis,
        outcome,
        witnesses: tally.witnesses,
        elapsed: start.elapsed(),
    })
}

/// All relations on `{1..n}` for `n = 0..=max_n`, counted into the tally,
/// paired with their properties.
fn each_relation(
    max_n: usize,
    tally: &mut Tally,
    mut f: impl FnMut(&BinaryRelation, RelationProperties, &mut Tally) -> Result<()>,
) -> Result<()> {
    for n in 0..=max_n {
        for r in enumerate_relations(n, PropertyFilter::NONE)? {
            tally.space += 1;
            f(&r, r.properties(), tally)?;
        }
    }
    Ok(())
}

/// Like [`each_relation`] restricted to a hypothesis.
fn each_relation_where(
    max_n: usize,
    tally: &mut Tally,
    filter: PropertyFilter,
    mut f: impl FnMut(&BinaryRelation, &mut Tally) -> Result<()>,
) -> Result<()> {
    each_relation(max_n, tally, |r, p, t| {
        if filter.accepts(&p) {
            t.hypothesis += 1;
            f(r, t)
        } else {
            Ok(())
        }
    })
}

fn each_matroid(
    max_n: usize,
    tally: &mut Tally,
    mut f: impl FnMut(&Matroid, &mut Tally) -> Result<()>,
) -> Result<()> {
    for n in 0..=max_n {
        for m in enumerate_matroids(n)? {
            tally.space += 1;
            f(&m, tally)?;
        }
    }
    Ok(())
}

/// First `X` where `H_R(X) != cl_M(X)`.
fn first_mismatch(r: &BinaryRelation, m: &Matroid) -> Result<Option<ElemSet>> {
    for x in r.universe().powerset() {
        if r.upper_approx(&x)? != m.closure(&x)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Sizes of the equivalence classes of `r`, which must be an equivalence.
fn class_sizes(r: &BinaryRelation) -> impl Iterator<Item = usize> + '_ {
    (0..r.universe().len()).map(|x| r.row(x).count_ones() as usize)
}

fn p1_circuit_axioms(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::SERIAL_TRANSITIVE, |r, t| {
        if let Err(v) = check_circuit_axioms(&minimal_neighborhood_family(r)) {
            t.relation(r, None, v.to_string());
        }
        Ok(())
    })
}

fn p2_axioms_imply_serial(max_n: usize, tally: &mut Tally) -> Result<()> {
    let mut non_transitive_found = false;
    each_relation(max_n, tally, |r, p, t| {
        if check_circuit_axioms(&minimal_neighborhood_family(r)).is_ok() {
            t.hypothesis += 1;
            if !p.serial {
                t.relation(
                    r,
                    None,
                    "C(R) satisfies the circuit axioms but R is not serial",
                );
            }
            non_transitive_found |= !p.transitive;
        }
        Ok(())
    })?;
    if !non_transitive_found {
        tally.witnesses.push(Witness {
            universe_size: max_n,
            subject: Subject::Sweep,
            set: None,
            detail: "no non-transitive R with C(R) satisfying the circuit axioms".into(),
        });
    }
    Ok(())
}

fn p3_independent_sets(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::SERIAL_TRANSITIVE, |r, t| {
        let m = matroid_from_relation(r)?;
        let u = r.universe();
        let full = u.full_set();
        for i in u.powerset() {
            let independent = m.independents().contains(&i);
            let no_neighborhood_inside = (0..u.len()).all(|x| r.row(x) & !i.mask() != 0);
            let lower_empty = r.lower_approx(&i)?.is_empty();
            let upper_full = r.upper_approx(&i.complement())? == full;
            let agree = [no_neighborhood_inside, lower_empty, upper_full]
                .iter()
                .all(|&b| b == independent);
            if !agree {
                t.relation(
                    r,
                    Some(i),
                    format!(
                        "independent={independent} no-RN-inside={no_neighborhood_inside} \
                         L(I)=empty:{lower_empty} H(I^c)=U:{upper_full}"
                    ),
                );
                break;
            }
        }
        Ok(())
    })
}

fn p4_reflexive_closure(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::SERIAL_TRANSITIVE, |r, t| {
        let m = matroid_from_relation(r)?;
        let mr = matroid_from_relation(&r.reflexive_closure())?;
        if m != mr {
            t.relation(
                r,
                None,
                format!("C(R)={:?} but C(r(R))={:?}", m.circuits(), mr.circuits()),
            );
        }
        Ok(())
    })
}

fn p5_small_classes(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation(max_n, tally, |r, p, t| {
        if !p.equivalence || class_sizes(r).any(|s| s > 2) {
            return Ok(());
        }
        t.hypothesis += 1;
        let m = matroid_from_relation(r)?;
        for x in r.universe().powerset() {
            let upper = r.upper_approx(&x)?;
            let cl = m.closure(&x)?;
            let decomposed = equivalence_upper_decomposition(r, &x)?;
            if !upper.is_subset(&cl) || cl != decomposed {
                t.relation(
                    r,
                    Some(x),
                    format!("H={upper} cl={cl} H+fixed={decomposed}"),
                );
                break;
            }
        }
        Ok(())
    })
}

fn p6_large_classes(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation(max_n, tally, |r, p, t| {
        if !p.equivalence || class_sizes(r).any(|s| s < 2) {
            return Ok(());
        }
        t.hypothesis += 1;
        let m = matroid_from_relation(r)?;
        for x in r.universe().powerset() {
            let upper = r.upper_approx(&x)?;
            let cl = m.closure(&x)?;
            if !cl.is_subset(&upper) {
                t.relation(r, Some(x), format!("cl={cl} not inside H={upper}"));
                break;
            }
        }
        Ok(())
    })
}

/// `(∀X: H = cl) ⇔ M(R) is 2-circuit`, for relations passing `filter`.
fn two_circuit_equivalence(max_n: usize, tally: &mut Tally, filter: PropertyFilter) -> Result<()> {
    each_relation_where(max_n, tally, filter, |r, t| {
        let m = matroid_from_relation(r)?;
        let mismatch = first_mismatch(r, &m)?;
        let two_circuit = m.is_2circuit();
        if mismatch.is_none() != two_circuit {
            let detail = match &mismatch {
                Some(x) => format!(
                    "M(R) is 2-circuit but H={} cl={}",
                    r.upper_approx(x)?,
                    m.closure(x)?
                ),
                None => format!("H = cl everywhere but C(R)={:?}", m.circuits()),
            };
            t.relation(r, mismatch, detail);
        }
        Ok(())
    })
}

fn p7_equivalence_two_circuit(max_n: usize, tally: &mut Tally) -> Result<()> {
    two_circuit_equivalence(max_n, tally, PropertyFilter::EQUIVALENCE)
}

fn p8_induced_equivalence(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_matroid(max_n, tally, |m, t| {
        t.hypothesis += 1;
        let r = relation_from_matroid(m);
        let p = r.properties();
        if !(p.equivalence && r.is_transitive_pairwise()) {
            t.matroid(m, None, format!("R(M)={} has {p:?}", r.pair_notation()));
        }
        Ok(())
    })
}

fn p9_loopless(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_matroid(max_n, tally, |m, t| {
        let u = m.universe();
        if !m.closure(&u.empty_set())?.is_empty() {
            return Ok(());
        }
        t.hypothesis += 1;
        let r = relation_from_matroid(m);
        for x in u.powerset() {
            let cl = m.closure(&x)?;
            let upper = r.upper_approx(&x)?;
            if !cl.is_subset(&upper) {
                t.matroid(m, Some(x), format!("cl={cl} not inside H={upper}"));
                break;
            }
        }
        Ok(())
    })
}

fn p10_small_circuits(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_matroid(max_n, tally, |m, t| {
        if m.circuits().iter().any(|c| c.len() > 2) {
            return Ok(());
        }
        t.hypothesis += 1;
        let r = relation_from_matroid(m);
        for x in m.universe().powerset() {
            let cl = m.closure(&x)?;
            let upper = r.upper_approx(&x)?;
            if !upper.is_subset(&cl) {
                t.matroid(m, Some(x), format!("H={upper} not inside cl={cl}"));
                break;
            }
        }
        Ok(())
    })
}

fn p11_matroid_two_circuit(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_matroid(max_n, tally, |m, t| {
        t.hypothesis += 1;
        let r = relation_from_matroid(m);
        let mismatch = first_mismatch(&r, m)?;
        let condition = m.is_free() || m.is_2circuit();
        if mismatch.is_none() != condition {
            let detail = match &mismatch {
                Some(x) => format!(
                    "condition holds but H={} cl={}",
                    r.upper_approx(x)?,
                    m.closure(x)?
                ),
                None => "H = cl everywhere but C(M) is neither empty nor 2-circuit".into(),
            };
            t.matroid(m, mismatch, detail);
        }
        Ok(())
    })
}

fn p12_round_trip_matroid(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_matroid(max_n, tally, |m, t| {
        t.hypothesis += 1;
        let back = compose_matroid_relation_matroid(m);
        if !m.circuits().finer(back.circuits())? {
            t.matroid(
                m,
                None,
                format!("C(M) not finer than C(M(R(M)))={:?}", back.circuits()),
            );
        } else if (back == *m) != m.circuits().is_partition() {
            t.matroid(
                m,
                None,
                format!(
                    "M(R(M)) = M is {} but partition is {}",
                    back == *m,
                    m.circuits().is_partition()
                ),
            );
        }
        Ok(())
    })
}

fn p13_disjoint_minimal(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::TRANSITIVE, |r, t| {
        let c = minimal_neighborhood_family(r);
        let sets: Vec<ElemSet> = c.iter().collect();
        'outer: for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if !a.is_disjoint(b) {
                    t.relation(
                        r,
                        None,
                        format!("minimal neighborhoods {a} and {b} overlap"),
                    );
                    break 'outer;
                }
            }
        }
        Ok(())
    })
}

fn p14_round_trip_relation(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::SERIAL_TRANSITIVE, |r, t| {
        let back = compose_relation_matroid_relation(r)?;
        if r.is_reflexive() && !back.is_subset(r) {
            t.relation(
                r,
                None,
                format!("R(M(R))={} not inside R", back.pair_notation()),
            );
        } else if (back == *r) != r.is_equivalence() {
            t.relation(
                r,
                None,
                format!(
                    "R(M(R)) = R is {} but equivalence is {}",
                    back == *r,
                    r.is_equivalence()
                ),
            );
        }
        Ok(())
    })
}

fn n_axioms_imply_transitive(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation(max_n, tally, |r, p, t| {
        if check_circuit_axioms(&minimal_neighborhood_family(r)).is_ok() {
            t.hypothesis += 1;
            if !p.transitive {
                let (x, y) = r.transitive_witness().expect("not transitive");
                let u = r.universe();
                t.relation(
                    r,
                    None,
                    format!(
                        "C(R)={:?} satisfies the circuit axioms but {} in RN({}) and RN({}) not inside RN({})",
                        minimal_neighborhood_family(r),
                        u.label(y),
                        u.label(x),
                        u.label(y),
                        u.label(x)
                    ),
                );
            }
        }
        Ok(())
    })
}

fn n_equivalence_always_closure(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::EQUIVALENCE, |r, t| {
        let m = matroid_from_relation(r)?;
        if let Some(x) = first_mismatch(r, &m)? {
            let detail = format!("H={} cl={}", r.upper_approx(&x)?, m.closure(&x)?);
            t.relation(r, Some(x), detail);
        }
        Ok(())
    })
}

fn n_round_trip_without_reflexive(max_n: usize, tally: &mut Tally) -> Result<()> {
    each_relation_where(max_n, tally, PropertyFilter::SERIAL_TRANSITIVE, |r, t| {
        let back = compose_relation_matroid_relation(r)?;
        if !back.is_subset(r) {
            t.relation(
                r,
                None,
                format!("R(M(R))={} not inside R", back.pair_notation()),
            );
        }
        Ok(())
    })
}

fn e_serial_transitive_two_circuit(max_n: usize, tally: &mut Tally) -> Result<()> {
    two_circuit_equivalence(max_n, tally, PropertyFilter::SERIAL_TRANSITIVE)
}
