//! The two constructions between relations and matroids: the matroid
//! `M(R)` whose circuits are the minimal neighborhoods of a serial and
//! transitive relation, and the equivalence relation `R(M)` of elements
//! sharing a circuit.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::relation::BinaryRelation;
use crate::sets::{ElemSet, SetFamily};

/// `FMIN{RN(x) : x ∈ U}` with duplicate neighborhoods collapsed.
///
/// Defined for every relation; whether the result is a circuit family is
/// up to the caller to check.
pub fn minimal_neighborhood_family(r: &BinaryRelation) -> SetFamily {
    let u = r.universe();
    let rows = (0..u.len()).map(|x| r.row(x)).collect();
    SetFamily::from_masks_unchecked(u, rows).fmin()
}

/// The matroid induced by a serial and transitive relation.
pub fn matroid_from_relation(r: &BinaryRelation) -> Result<Matroid> {
    let u = r.universe();
    if let Some(x) = r.serial_witness() {
        return Err(Error::NotSerial {
            element: u.label(x).to_string(),
        });
    }
    if let Some((x, y)) = r.transitive_witness() {
        return Err(Error::NotTransitive {
            x: u.label(x).to_string(),
            y: u.label(y).to_string(),
        });
    }
    Matroid::from_circuits(minimal_neighborhood_family(r))
}

/// `(x, y) ∈ R(M)` iff `x = y` or some circuit contains both.
pub fn relation_from_matroid(m: &Matroid) -> BinaryRelation {
    let u = m.universe();
    let mut pairs = Vec::new();
    for x in 0..u.len() {
        pairs.push((x, x));
    }
    for c in m.circuits().iter() {
        for x in c.iter() {
            for y in c.iter() {
                pairs.push((x, y));
            }
        }
    }
    BinaryRelation::from_pairs(u, pairs).expect("circuit members lie in the universe")
}

/// `H_R(X) ∪ {u ∉ X : RN(u) = {u}}` for an equivalence relation whose
/// classes have at most two elements. This equals the closure of `X` in
/// `M(R)`.
pub fn equivalence_upper_decomposition(r: &BinaryRelation, x: &ElemSet) -> Result<ElemSet> {
    if !r.is_equivalence() {
        return Err(Error::NotEquivalence);
    }
    let u = r.universe();
    if let Some(big) = (0..u.len()).find(|&e| r.row(e).count_ones() > 2) {
        return Err(Error::ClassTooLarge {
            element: u.label(big).to_string(),
            size: r.row(big).count_ones() as usize,
        });
    }
    let upper = r.upper_approx(x)?;
    let fixed = x
        .complement()
        .iter()
        .filter(|&e| r.row(e) == 1 << e)
        .fold(0u16, |acc, e| acc | (1 << e));
    Ok(x.with_bits(upper.mask() | fixed))
}

/// `M(R(M))`. Its circuits are the classes of `R(M)`.
pub fn compose_matroid_relation_matroid(m: &Matroid) -> Matroid {
    matroid_from_relation(&relation_from_matroid(m))
        .expect("relation induced by a matroid is an equivalence relation")
}

/// `R(M(R))` for a serial and transitive relation.
pub fn compose_relation_matroid_relation(r: &BinaryRelation) -> Result<BinaryRelation> {
    Ok(relation_from_matroid(&matroid_from_relation(r)?))
}
