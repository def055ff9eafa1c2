//! Binary relations and the rough lower/upper approximation operators.

use std::fmt;

use crate::error::{Error, Result};
use crate::sets::{ElemSet, Universe};

/// A binary relation on a universe, stored as one successor-neighborhood
/// mask per element.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    universe: Universe,
    rows: Vec<u16>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelationProperties {
    pub serial: bool,
    pub transitive: bool,
    pub reflexive: bool,
    pub symmetric: bool,
    pub equivalence: bool,
}

impl BinaryRelation {
    pub fn empty(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            rows: vec![0; universe.len()],
        }
    }

    pub fn identity(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            rows: (0..universe.len()).map(|i| 1 << i).collect(),
        }
    }

    /// `U × U`.
    pub fn full(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            rows: vec![universe.full_mask(); universe.len()],
        }
    }

    pub fn from_pairs<I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            universe.check_index(x)?;
            universe.check_index(y)?;
            r.rows[x] |= 1 << y;
        }
        Ok(r)
    }

    pub fn from_label_pairs<I, S>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let lookup = |l: &str| {
            universe.index_of(l).ok_or_else(|| Error::UnknownElement {
                token: l.to_string(),
                line: None,
            })
        };
        let mut idx = Vec::new();
        for (x, y) in pairs {
            idx.push((lookup(x.as_ref())?, lookup(y.as_ref())?));
        }
        Self::from_pairs(universe, idx)
    }

    /// Decodes an `n × n` bit matrix where bit `x * n + y` encodes `(x, y)`.
    pub fn from_matrix_code(universe: &Universe, code: u64) -> Self {
        let n = universe.len();
        debug_assert!(n * n <= 64);
        let row_mask = (1u64 << n) - 1;
        let rows = (0..n)
            .map(|x| ((code >> (x * n)) & row_mask) as u16)
            .collect();
        Self {
            universe: universe.clone(),
            rows,
        }
    }

    /// Inverse of [`BinaryRelation::from_matrix_code`].
    pub fn matrix_code(&self) -> u64 {
        let n = self.universe.len();
        self.rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (x, &row)| acc | (u64::from(row) << (x * n)))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.rows.len() && y < 16 && self.rows[x] & (1 << y) != 0
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.universe.len();
        (0..n).flat_map(move |x| {
            (0..n)
                .filter(move |&y| self.contains(x, y))
                .map(move |y| (x, y))
        })
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_subset(&self, other: &BinaryRelation) -> bool {
        self.universe == other.universe
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Successor neighborhood `{y : x R y}`.
    pub fn neighborhood(&self, x: usize) -> Result<ElemSet> {
        self.universe.check_index(x)?;
        Ok(self.neighborhood_unchecked(x))
    }

    pub(crate) fn neighborhood_unchecked(&self, x: usize) -> ElemSet {
        self.universe
            .set_from_mask(self.rows[x])
            .expect("row within universe")
    }

    pub(crate) fn row(&self, x: usize) -> u16 {
        self.rows[x]
    }

    /// First element with an empty neighborhood.
    pub fn serial_witness(&self) -> Option<usize> {
        self.rows.iter().position(|&r| r == 0)
    }

    /// First `(x, y)` with `y ∈ RN(x)` and `RN(y) ⊄ RN(x)`.
    pub fn transitive_witness(&self) -> Option<(usize, usize)> {
        (0..self.rows.len()).find_map(|x| {
            (0..self.rows.len())
                .find(|&y| self.contains(x, y) && self.rows[y] & !self.rows[x] != 0)
                .map(|y| (x, y))
        })
    }

    pub fn is_serial(&self) -> bool {
        self.serial_witness().is_none()
    }

    /// Transitivity via neighborhoods: `y ∈ RN(x) ⇒ RN(y) ⊆ RN(x)`.
    pub fn is_transitive(&self) -> bool {
        self.transitive_witness().is_none()
    }

    /// Transitivity via pairs: `xRy ∧ yRz ⇒ xRz`.
    pub fn is_transitive_pairwise(&self) -> bool {
        let n = self.universe.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.contains(x, y) && self.contains(y, z) && !self.contains(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.rows.len()).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    pub fn properties(&self) -> RelationProperties {
        let reflexive = self.is_reflexive();
        let symmetric = self.is_symmetric();
        let transitive = self.is_transitive();
        RelationProperties {
            serial: self.is_serial(),
            transitive,
            reflexive,
            symmetric,
            equivalence: reflexive && symmetric && transitive,
        }
    }

    /// `R ∪ {(x, x)}`.
    pub fn reflexive_closure(&self) -> BinaryRelation {
        Self {
            universe: self.universe.clone(),
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(x, &r)| r | (1 << x))
                .collect(),
        }
    }

    /// `{u : RN(u) ⊆ X}`.
    pub fn lower_approx(&self, x: &ElemSet) -> Result<ElemSet> {
        self.universe.ensure_same(x.universe())?;
        let bits = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r & !x.mask() == 0)
            .fold(0u16, |acc, (u, _)| acc | (1 << u));
        Ok(x.with_bits(bits))
    }

    /// `{u : RN(u) ∩ X ≠ ∅}`.
    pub fn upper_approx(&self, x: &ElemSet) -> Result<ElemSet> {
        self.universe.ensure_same(x.universe())?;
        let bits = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r & x.mask() != 0)
            .fold(0u16, |acc, (u, _)| acc | (1 << u));
        Ok(x.with_bits(bits))
    }
}

/// One pair per line, `x y`, in row-major order.
impl fmt::Display for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{} {}", self.universe.label(x), self.universe.label(y))?;
        }
        Ok(())
    }
}

impl BinaryRelation {
    /// `{(1,1),(1,3)}` style notation on one line.
    pub fn pair_notation(&self) -> String {
        let u = &self.universe;
        let pairs: Vec<String> = self
            .pairs()
            .map(|(x, y)| format!("({},{})", u.label(x), u.label(y)))
            .collect();
        format!("{{{}}}", pairs.join(","))
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pair_notation())
    }
}
