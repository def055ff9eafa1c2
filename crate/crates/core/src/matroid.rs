//! Matroids represented by their circuit families.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::sets::{submasks, ElemSet, SetFamily, Universe};

/// First circuit axiom that a family fails, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitViolation {
    /// (C1) the empty set is a member.
    EmptyCircuit,
    /// (C2) one member is a proper subset of another.
    Nested { smaller: ElemSet, larger: ElemSet },
    /// (C3) no member fits inside `(first ∪ second) - {element}`.
    Elimination {
        first: ElemSet,
        second: ElemSet,
        element: String,
    },
}

impl CircuitViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            CircuitViolation::EmptyCircuit => "C1",
            CircuitViolation::Nested { .. } => "C2",
            CircuitViolation::Elimination { .. } => "C3",
        }
    }
}

impl fmt::Display for CircuitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitViolation::EmptyCircuit => write!(f, "C1 violation (empty circuit {{}})"),
            CircuitViolation::Nested { smaller, larger } => {
                write!(f, "C2 violation ({smaller} ⊂ {larger})")
            }
            CircuitViolation::Elimination {
                first,
                second,
                element,
            } => write!(
                f,
                "C3 violation (no circuit inside {first} ∪ {second} - {{{element}}})"
            ),
        }
    }
}

impl std::error::Error for CircuitViolation {}

/// First independence axiom that a family fails, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndependenceViolation {
    /// (I1) the empty set is missing.
    MissingEmpty,
    /// (I2) `subset ⊆ set` but only `set` is a member.
    NotHereditary { set: ElemSet, subset: ElemSet },
    /// (I3) `|smaller| < |larger|` and no element of `larger - smaller` extends `smaller`.
    Augmentation { smaller: ElemSet, larger: ElemSet },
}

impl IndependenceViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            IndependenceViolation::MissingEmpty => "I1",
            IndependenceViolation::NotHereditary { .. } => "I2",
            IndependenceViolation::Augmentation { .. } => "I3",
        }
    }
}

impl fmt::Display for IndependenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndependenceViolation::MissingEmpty => write!(f, "I1 violation ({{}} missing)"),
            IndependenceViolation::NotHereditary { set, subset } => {
                write!(f, "I2 violation ({subset} ⊆ {set} missing)")
            }
            IndependenceViolation::Augmentation { smaller, larger } => {
                write!(
                    f,
                    "I3 violation ({smaller} cannot be augmented from {larger})"
                )
            }
        }
    }
}

impl std::error::Error for IndependenceViolation {}

/// Checks (C1), (C2) and (C3) in that order.
pub fn check_circuit_axioms(family: &SetFamily) -> Result<(), CircuitViolation> {
    let masks = family.masks();
    let set = |m: u16| {
        family
            .universe()
            .set_from_mask(m)
            .expect("member of family")
    };
    if masks.first() == Some(&0) {
        return Err(CircuitViolation::EmptyCircuit);
    }
    for &a in masks {
        for &b in masks {
            if a != b && a & !b == 0 {
                return Err(CircuitViolation::Nested {
                    smaller: set(a),
                    larger: set(b),
                });
            }
        }
    }
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            let common = a & b;
            for c in (0..16).filter(|c| common & (1 << c) != 0) {
                let target = (a | b) & !(1 << c);
                if !masks.iter().any(|&m| m & !target == 0) {
                    return Err(CircuitViolation::Elimination {
                        first: set(a),
                        second: set(b),
                        element: family.universe().label(c).to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Checks (I1), (I2) and (I3) in that order.
pub fn check_independence_axioms(family: &SetFamily) -> Result<(), IndependenceViolation> {
    let set = |m: u16| {
        family
            .universe()
            .set_from_mask(m)
            .expect("member of family")
    };
    if !family.contains_mask(0) {
        return Err(IndependenceViolation::MissingEmpty);
    }
    for &m in family.masks() {
        if let Some(sub) = submasks(m).find(|&s| !family.contains_mask(s)) {
            return Err(IndependenceViolation::NotHereditary {
                set: set(m),
                subset: set(sub),
            });
        }
    }
    // Under (I2) it suffices to augment from sets one element larger.
    for &small in family.masks() {
        for &large in family.masks() {
            if large.count_ones() != small.count_ones() + 1 {
                continue;
            }
            let extendable = (0..16)
                .filter(|u| large & !small & (1 << u) != 0)
                .any(|u| family.contains_mask(small | (1 << u)));
            if !extendable {
                return Err(IndependenceViolation::Augmentation {
                    smaller: set(small),
                    larger: set(large),
                });
            }
        }
    }
    Ok(())
}

/// Minimal dependent sets of a valid independent-set family: `FMIN(Opp(I))`.
pub fn circuits_from_independents(family: &SetFamily) -> Result<SetFamily> {
    check_independence_axioms(family).map_err(Error::IndependenceAxioms)?;
    Ok(family.opp().fmin())
}

/// A matroid on a finite universe, identified by its circuit family.
///
/// The independent sets are derived from the circuits the first time they
/// are requested and cached afterwards.
#[derive(Clone)]
pub struct Matroid {
    circuits: SetFamily,
    independents: OnceLock<SetFamily>,
}

impl Matroid {
    pub fn from_circuits(circuits: SetFamily) -> Result<Self> {
        check_circuit_axioms(&circuits).map_err(|violation| Error::CircuitAxioms {
            violation,
            lines: Vec::new(),
        })?;
        Ok(Self::from_circuits_unchecked(circuits))
    }

    pub fn from_independents(independents: SetFamily) -> Result<Self> {
        let circuits = circuits_from_independents(&independents)?;
        let m = Self::from_circuits_unchecked(circuits);
        let _ = m.independents.set(independents);
        Ok(m)
    }

    pub(crate) fn from_circuits_unchecked(circuits: SetFamily) -> Self {
        Self {
            circuits,
            independents: OnceLock::new(),
        }
    }

    /// The matroid with no circuits.
    pub fn free(universe: &Universe) -> Self {
        Self::from_circuits_unchecked(SetFamily::empty(universe))
    }

    pub fn universe(&self) -> &Universe {
        self.circuits.universe()
    }

    pub fn circuits(&self) -> &SetFamily {
        &self.circuits
    }

    /// `Opp(Upp(circuits))`.
    pub fn independents(&self) -> &SetFamily {
        self.independents.get_or_init(|| self.circuits.upp().opp())
    }

    pub fn is_independent(&self, x: &ElemSet) -> Result<bool> {
        self.universe().ensure_same(x.universe())?;
        Ok(self.independents().contains(x))
    }

    /// `X ∪ {u ∉ X : some circuit C has u ∈ C ⊆ X ∪ {u}}`.
    pub fn closure(&self, x: &ElemSet) -> Result<ElemSet> {
        self.universe().ensure_same(x.universe())?;
        let inside = x.mask();
        let mut bits = inside;
        for u in (0..self.universe().len()).filter(|u| inside & (1 << u) == 0) {
            let with_u = inside | (1 << u);
            let completes = self
                .circuits
                .masks()
                .iter()
                .any(|&c| c & (1 << u) != 0 && c & !with_u == 0);
            if completes {
                bits |= 1 << u;
            }
        }
        Ok(x.with_bits(bits))
    }

    /// Size of a largest independent subset of `x`, by exhaustive search.
    pub fn rank(&self, x: &ElemSet) -> Result<usize> {
        self.universe().ensure_same(x.universe())?;
        let independents = self.independents();
        Ok(submasks(x.mask())
            .filter(|&s| independents.contains_mask(s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Every circuit has exactly two elements. Vacuously true without circuits.
    pub fn is_2circuit(&self) -> bool {
        self.circuits.iter().all(|c| c.len() == 2)
    }

    pub fn is_free(&self) -> bool {
        self.circuits.is_empty()
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("universe", self.universe())
            .field("circuits", &self.circuits)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: usize) -> Universe {
        Universe::numbered(n).unwrap()
    }

    fn fam(u: &Universe, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(
            u,
            sets.iter()
                .map(|s| u.set_from_indices(s.iter().map(|i| i - 1)).unwrap()),
        )
        .unwrap()
    }

    fn set(u: &Universe, items: &[usize]) -> ElemSet {
        u.set_from_indices(items.iter().map(|i| i - 1)).unwrap()
    }

    fn matroid(n: usize, sets: &[&[usize]]) -> Matroid {
        Matroid::from_circuits(fam(&u(n), sets)).unwrap()
    }

    #[test]
    fn circuit_axiom_examples() {
        let u3 = u(3);
        assert_eq!(check_circuit_axioms(&fam(&u3, &[&[1], &[2, 3]])), Ok(()));
        assert_eq!(
            check_circuit_axioms(&fam(&u3, &[&[]])),
            Err(CircuitViolation::EmptyCircuit)
        );
        assert_eq!(
            check_circuit_axioms(&fam(&u3, &[&[1], &[1, 2]])),
            Err(CircuitViolation::Nested {
                smaller: set(&u3, &[1]),
                larger: set(&u3, &[1, 2]),
            })
        );
        let v = check_circuit_axioms(&fam(&u3, &[&[1, 2], &[2, 3]])).unwrap_err();
        assert_eq!(
            v,
            CircuitViolation::Elimination {
                first: set(&u3, &[1, 2]),
                second: set(&u3, &[2, 3]),
                element: "2".into(),
            }
        );
        assert_eq!(v.axiom(), "C3");
    }

    #[test]
    fn independence_axiom_examples() {
        let u3 = u(3);
        assert_eq!(
            check_independence_axioms(&fam(&u3, &[&[], &[1], &[2], &[1, 2]])),
            Ok(())
        );
        assert_eq!(
            check_independence_axioms(&fam(&u3, &[&[1]])),
            Err(IndependenceViolation::MissingEmpty)
        );
        assert_eq!(
            check_independence_axioms(&fam(&u3, &[&[], &[1], &[2, 3]])),
            Err(IndependenceViolation::NotHereditary {
                set: set(&u3, &[2, 3]),
                subset: set(&u3, &[2]),
            })
        );
        // hereditary but {3} cannot be augmented from {1,2}
        let v =
            check_independence_axioms(&fam(&u3, &[&[], &[1], &[2], &[3], &[1, 2]])).unwrap_err();
        assert_eq!(v.axiom(), "I3");
    }

    #[test]
    fn from_circuits_examples() {
        let m = matroid(3, &[&[3]]);
        assert_eq!(*m.independents(), fam(&u(3), &[&[], &[1], &[2], &[1, 2]]));
        let free = matroid(3, &[]);
        assert_eq!(*free.independents(), SetFamily::powerset(&u(3)));
        let m = matroid(3, &[&[2], &[3]]);
        assert_eq!(*m.independents(), fam(&u(3), &[&[], &[1]]));
        let err = Matroid::from_circuits(fam(&u(3), &[&[1], &[1, 2]])).unwrap_err();
        assert!(matches!(err, Error::CircuitAxioms { .. }));
    }

    #[test]
    fn empty_universe_has_one_matroid() {
        let m = Matroid::free(&u(0));
        assert_eq!(m.independents().masks(), &[0]);
        assert!(m.circuits().is_empty());
    }

    #[test]
    fn circuits_from_independents_examples() {
        let u3 = u(3);
        assert_eq!(
            circuits_from_independents(&fam(&u3, &[&[], &[1]])).unwrap(),
            fam(&u3, &[&[2], &[3]])
        );
        assert!(circuits_from_independents(&SetFamily::powerset(&u3))
            .unwrap()
            .is_empty());
        assert_eq!(
            circuits_from_independents(&fam(&u3, &[&[], &[1], &[2], &[3]])).unwrap(),
            fam(&u3, &[&[1, 2], &[1, 3], &[2, 3]])
        );
        assert!(matches!(
            circuits_from_independents(&fam(&u3, &[&[1]])),
            Err(Error::IndependenceAxioms(
                IndependenceViolation::MissingEmpty
            ))
        ));
    }

    #[test]
    fn closure_examples() {
        let m = matroid(4, &[&[1, 2, 3], &[4]]);
        let u4 = m.universe().clone();
        assert_eq!(m.closure(&u4.empty_set()).unwrap(), set(&u4, &[4]));
        assert_eq!(m.closure(&set(&u4, &[1])).unwrap(), set(&u4, &[1, 4]));
        let m = matroid(3, &[&[1, 2, 3]]);
        let u3 = m.universe().clone();
        assert_eq!(m.closure(&set(&u3, &[1, 2])).unwrap(), u3.full_set());
        let free = Matroid::free(&u3);
        for x in u3.powerset() {
            assert_eq!(free.closure(&x).unwrap(), x);
        }
    }

    #[test]
    fn rank_examples() {
        let u3 = u(3);
        let free = Matroid::free(&u3);
        assert_eq!(free.rank(&u3.empty_set()).unwrap(), 0);
        assert_eq!(free.rank(&u3.full_set()).unwrap(), 3);
        let m = matroid(3, &[&[3]]);
        assert_eq!(m.rank(&u3.full_set()).unwrap(), 2);
        assert_eq!(m.rank(&set(&u3, &[3])).unwrap(), 0);
        let other = Universe::new(["a"]).unwrap();
        assert_eq!(
            m.rank(&other.full_set()).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn two_circuit_examples() {
        assert!(matroid(3, &[&[1, 2]]).is_2circuit());
        assert!(!matroid(3, &[&[1, 2], &[3]]).is_2circuit());
        assert!(matroid(3, &[]).is_2circuit());
    }

    #[test]
    fn independents_cache_is_shared_across_threads() {
        let m = matroid(4, &[&[1, 2], &[3, 4]]);
        let expected = m.circuits().upp().opp();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(*m.independents(), expected));
            }
        });
    }
}
