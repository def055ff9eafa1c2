//! Universes, element sets and set families.
//!
//! Every element set is a 16-bit mask over the indices of its universe, so
//! the whole powerset of any supported universe can be enumerated directly.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported universe.
pub const MAX_UNIVERSE: usize = 16;

/// A finite, ordered universe of labelled elements.
///
/// Cloning is cheap; clones share the label storage.
#[derive(Clone)]
pub struct Universe {
    labels: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// The universe `{1, ..., n}`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
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

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                index,
                size: self.len(),
            })
        }
    }

    pub(crate) fn full_mask(&self) -> u16 {
        mask_of_len(self.len())
    }

    /// Number of subsets of the universe.
    pub fn powerset_len(&self) -> usize {
        1usize << self.len()
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::from_mask_unchecked(self.clone(), 0)
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::from_mask_unchecked(self.clone(), self.full_mask())
    }

    pub fn singleton(&self, index: usize) -> Result<ElemSet> {
        self.check_index(index)?;
        Ok(ElemSet::from_mask_unchecked(self.clone(), 1 << index))
    }

    pub fn set_from_indices<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<ElemSet> {
        let mut bits = 0u16;
        for i in indices {
            self.check_index(i)?;
            bits |= 1 << i;
        }
        Ok(ElemSet::from_mask_unchecked(self.clone(), bits))
    }

    pub fn set_from_labels<I, S>(&self, labels: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u16;
        for l in labels {
            let l = l.as_ref();
            let i = self.index_of(l).ok_or_else(|| Error::UnknownElement {
                token: l.to_string(),
                line: None,
            })?;
            bits |= 1 << i;
        }
        Ok(ElemSet::from_mask_unchecked(self.clone(), bits))
    }

    pub fn set_from_mask(&self, bits: u16) -> Result<ElemSet> {
        if bits & !self.full_mask() != 0 {
            return Err(Error::InvalidElement {
                index: 15 - bits.leading_zeros() as usize,
                size: self.len(),
            });
        }
        Ok(ElemSet::from_mask_unchecked(self.clone(), bits))
    }

    /// All subsets in ascending mask order.
    pub fn powerset(&self) -> impl Iterator<Item = ElemSet> + '_ {
        (0..self.powerset_len() as u32)
            .map(move |b| ElemSet::from_mask_unchecked(self.clone(), b as u16))
    }

    pub(crate) fn same(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    pub(crate) fn ensure_same(&self, other: &Universe) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

fn mask_of_len(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

/// Iterates every submask of `mask` in ascending numeric order.
pub(crate) fn submasks(mask: u16) -> impl Iterator<Item = u16> {
    // Enumerate all values of popcount(mask) bits and scatter them into mask.
    let positions: Vec<u32> = (0..16).filter(|i| mask & (1 << i) != 0).collect();
    (0..1u32 << positions.len()).map(move |k| {
        positions
            .iter()
            .enumerate()
            .filter(|(j, _)| k & (1 << j) != 0)
            .fold(0u16, |acc, (_, &p)| acc | (1 << p))
    })
}

/// A subset of a [`Universe`].
#[derive(Clone, PartialEq, Eq)]
pub struct ElemSet {
    universe: Universe,
    bits: u16,
}

impl ElemSet {
    pub(crate) fn from_mask_unchecked(universe: Universe, bits: u16) -> Self {
        debug_assert_eq!(bits & !universe.full_mask(), 0);
        Self { universe, bits }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Bit `i` is set iff element `i` is a member.
    pub fn mask(&self) -> u16 {
        self.bits
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 16 && self.bits & (1 << index) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(&self, other: &ElemSet) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn complement(&self) -> ElemSet {
        self.with_bits(!self.bits & self.universe.full_mask())
    }

    pub fn with(&self, index: usize) -> Result<ElemSet> {
        self.universe.check_index(index)?;
        Ok(self.with_bits(self.bits | (1 << index)))
    }

    pub fn without(&self, index: usize) -> ElemSet {
        if index >= 16 {
            return self.clone();
        }
        self.with_bits(self.bits & !(1 << index))
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.len()).filter(move |&i| self.contains(i))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.iter().map(|i| self.universe.label(i)).collect()
    }

    /// All subsets of this set, ascending by mask.
    pub fn subsets(&self) -> impl Iterator<Item = ElemSet> + '_ {
        submasks(self.bits).map(move |b| self.with_bits(b))
    }

    pub(crate) fn with_bits(&self, bits: u16) -> ElemSet {
        ElemSet::from_mask_unchecked(self.universe.clone(), bits)
    }

    fn combine(&self, other: &ElemSet, op: impl Fn(u16, u16) -> u16) -> ElemSet {
        assert!(
            self.universe.same(&other.universe),
            "set operation across different universes"
        );
        self.with_bits(op(self.bits, other.bits))
    }
}

impl BitOr for &ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: &ElemSet) -> ElemSet {
        self.combine(rhs, |a, b| a | b)
    }
}

impl BitAnd for &ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: &ElemSet) -> ElemSet {
        self.combine(rhs, |a, b| a & b)
    }
}

impl Sub for &ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: &ElemSet) -> ElemSet {
        self.combine(rhs, |a, b| a & !b)
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending mask value; only meaningful within one universe.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl std::hash::Hash for ElemSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

/// Prints `{a, b}` in universe order, `{}` when empty.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite family of distinct subsets of one universe.
///
/// Members are kept sorted by ascending mask value, which makes equality
/// structural and output deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    masks: Vec<u16>,
}

impl SetFamily {
    pub fn empty(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            masks: Vec::new(),
        }
    }

    /// Every subset of the universe.
    pub fn powerset(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            masks: (0..universe.powerset_len() as u32)
                .map(|b| b as u16)
                .collect(),
        }
    }

    pub fn new<I>(universe: &Universe, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ElemSet>,
    {
        let mut masks = Vec::new();
        for s in sets {
            universe.ensure_same(s.universe())?;
            masks.push(s.mask());
        }
        Ok(Self::from_masks_unchecked(universe, masks))
    }

    pub fn from_masks<I: IntoIterator<Item = u16>>(universe: &Universe, masks: I) -> Result<Self> {
        let masks: Vec<u16> = masks.into_iter().collect();
        for &m in &masks {
            universe.set_from_mask(m)?;
        }
        Ok(Self::from_masks_unchecked(universe, masks))
    }

    pub(crate) fn from_masks_unchecked(universe: &Universe, mut masks: Vec<u16>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        Self {
            universe: universe.clone(),
            masks,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn masks(&self) -> &[u16] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemSet> + '_ {
        self.masks
            .iter()
            .map(move |&b| ElemSet::from_mask_unchecked(self.universe.clone(), b))
    }

    pub fn contains(&self, set: &ElemSet) -> bool {
        self.universe.same(set.universe()) && self.contains_mask(set.mask())
    }

    pub(crate) fn contains_mask(&self, mask: u16) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    pub fn is_subfamily(&self, other: &SetFamily) -> bool {
        self.masks.iter().all(|&m| other.contains_mask(m))
    }

    /// Members that contain no other member as a proper subset.
    pub fn fmin(&self) -> SetFamily {
        let masks = self
            .masks
            .iter()
            .copied()
            .filter(|&x| !self.masks.iter().any(|&y| y != x && y & !x == 0))
            .collect();
        Self::from_masks_unchecked(&self.universe, masks)
    }

    /// Every subset of the universe that contains some member.
    pub fn upp(&self) -> SetFamily {
        let masks = (0..self.universe.powerset_len() as u32)
            .map(|b| b as u16)
            .filter(|&x| self.masks.iter().any(|&a| a & !x == 0))
            .collect();
        Self::from_masks_unchecked(&self.universe, masks)
    }

    /// Every subset of the universe that is not a member.
    pub fn opp(&self) -> SetFamily {
        let masks = (0..self.universe.powerset_len() as u32)
            .map(|b| b as u16)
            .filter(|&x| !self.contains_mask(x))
            .collect();
        Self::from_masks_unchecked(&self.universe, masks)
    }

    /// No member contains another member.
    pub fn is_antichain(&self) -> bool {
        self.masks
            .iter()
            .all(|&x| self.masks.iter().all(|&y| x == y || x & !y != 0))
    }

    /// Nonempty, pairwise disjoint members whose union is the universe.
    pub fn is_partition(&self) -> bool {
        let mut union = 0u16;
        for &m in &self.masks {
            if m == 0 || union & m != 0 {
                return false;
            }
            union |= m;
        }
        union == self.universe.full_mask()
    }

    /// Whether every member of `self` is a subset of some member of `coarser`.
    pub fn finer(&self, coarser: &SetFamily) -> Result<bool> {
        self.universe.ensure_same(&coarser.universe)?;
        Ok(self
            .masks
            .iter()
            .all(|&a| coarser.masks.iter().any(|&b| a & !b == 0)))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("(empty)");
        }
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::numbered(3).unwrap()
    }

    fn fam(u: &Universe, sets: &[&[&str]]) -> SetFamily {
        SetFamily::new(u, sets.iter().map(|s| u.set_from_labels(s.iter()).unwrap())).unwrap()
    }

    /// All families over an n-universe, as bitmasks over the powerset.
    fn all_families(n: usize) -> impl Iterator<Item = SetFamily> {
        let u = Universe::numbered(n).unwrap();
        let p = 1usize << n;
        (0..1u64 << p).map(move |code| {
            let masks = (0..p).filter(|i| code & (1 << i) != 0).map(|i| i as u16);
            SetFamily::from_masks_unchecked(&u, masks.collect())
        })
    }

    #[test]
    fn universe_rejects_duplicates_and_oversize() {
        assert_eq!(
            Universe::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert!(Universe::numbered(16).is_ok());
        assert_eq!(
            Universe::numbered(17).unwrap_err(),
            Error::UniverseTooLarge(17)
        );
        assert_eq!(Universe::numbered(16).unwrap().full_set().len(), 16);
    }

    #[test]
    fn submasks_ascending() {
        assert_eq!(submasks(0b101).collect::<Vec<_>>(), vec![0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn fmin_examples() {
        let u = u3();
        assert_eq!(fam(&u, &[&["1", "3"], &["3"]]).fmin(), fam(&u, &[&["3"]]));
        assert!(SetFamily::empty(&u).fmin().is_empty());
        let f = fam(&u, &[&["1"], &["2", "3"]]);
        assert_eq!(f.fmin(), f);
    }

    #[test]
    fn upp_examples() {
        let u = u3();
        let up = fam(&u, &[&["3"]]).upp();
        // brute force: supersets of {3} among all subsets
        let expected: Vec<u16> = (0u16..8).filter(|x| x & 0b100 != 0).collect();
        assert_eq!(up.masks(), expected.as_slice());
        assert_eq!(
            up,
            fam(&u, &[&["3"], &["1", "3"], &["2", "3"], &["1", "2", "3"]])
        );
        assert!(SetFamily::empty(&u).upp().is_empty());
        assert_eq!(fam(&u, &[&[]]).upp(), SetFamily::powerset(&u));
    }

    #[test]
    fn opp_examples() {
        let u = u3();
        assert_eq!(
            fam(&u, &[&["3"]]).upp().opp(),
            fam(&u, &[&[], &["1"], &["2"], &["1", "2"]])
        );
        assert!(SetFamily::powerset(&u).opp().is_empty());
        assert_eq!(SetFamily::empty(&u).opp(), SetFamily::powerset(&u));
    }

    #[test]
    fn partition_examples() {
        let u = u3();
        assert!(fam(&u, &[&["1", "2"], &["3"]]).is_partition());
        assert!(!fam(&u, &[&["1", "2"], &["2", "3"]]).is_partition());
        assert!(!fam(&u, &[&["2"], &["3"]]).is_partition());
        assert!(!fam(&u, &[&[], &["1", "2", "3"]]).is_partition());
        assert!(!SetFamily::empty(&u).is_partition());
        let e = Universe::numbered(0).unwrap();
        assert!(SetFamily::empty(&e).is_partition());
    }

    #[test]
    fn finer_examples() {
        let u = u3();
        let pairs = fam(&u, &[&["1", "2"], &["1", "3"], &["2", "3"]]);
        let whole = fam(&u, &[&["1", "2", "3"]]);
        assert!(pairs.finer(&whole).unwrap());
        assert!(SetFamily::empty(&u).finer(&whole).unwrap());
        assert!(SetFamily::empty(&u).finer(&SetFamily::empty(&u)).unwrap());
        assert!(!whole.finer(&fam(&u, &[&["1", "2"]])).unwrap());
        let other = Universe::new(["a", "b", "c"]).unwrap();
        assert_eq!(
            whole.finer(&SetFamily::empty(&other)).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn fmin_is_antichain_subfamily_exhaustive() {
        for n in 0..=4 {
            for f in all_families(n) {
                let m = f.fmin();
                assert!(m.is_subfamily(&f), "{f:?}");
                assert!(m.is_antichain(), "{f:?}");
                // every member of f sits above some minimal member
                assert!(f.iter().all(|x| m.iter().any(|y| y.is_subset(&x))));
            }
        }
    }

    #[test]
    fn opp_is_involution_exhaustive() {
        for n in 0..=3 {
            for f in all_families(n) {
                assert_eq!(f.opp().opp(), f);
            }
        }
    }

    #[test]
    fn upp_is_upward_closed_exhaustive() {
        for n in 0..=4 {
            let u = Universe::numbered(n).unwrap();
            for f in all_families(n) {
                let up = f.upp();
                for x in up.iter() {
                    for y in u.powerset() {
                        if x.is_subset(&y) {
                            assert!(up.contains(&y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn finer_is_reflexive_and_transitive_exhaustive() {
        let fams: Vec<SetFamily> = all_families(3).collect();
        for a in &fams {
            assert!(a.finer(a).unwrap());
        }
        // transitivity over all 256^3 triples is slow in debug; restrict the
        // middle family to the ones a is finer than
        for a in &fams {
            let above: Vec<&SetFamily> = fams.iter().filter(|b| a.finer(b).unwrap()).collect();
            for b in &above {
                for c in &fams {
                    if b.finer(c).unwrap() {
                        assert!(a.finer(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn display_formats() {
        let u = u3();
        assert_eq!(fam(&u, &[&["3"], &["1", "2"]]).to_string(), "{1, 2}\n{3}");
        assert_eq!(SetFamily::empty(&u).to_string(), "(empty)");
        assert_eq!(fam(&u, &[&[]]).to_string(), "{}");
    }
}
