use std::collections::BTreeSet;

use proptest::prelude::*;
use rough_matroid::cli::{format_relation_document, parse_relation};
use rough_matroid::{
    check_independence_axioms, enumerate_matroids, enumerate_relations, matroid_from_relation,
    relation_from_matroid, run_theorem, BinaryRelation, ElemSet, Matroid, PropertyFilter,
    SetFamily, Universe,
};

fn is_sub(a: u16, b: u16) -> bool {
    a & !b == 0
}

/// Independence axioms checked literally over every pair of members.
fn independent_family_oracle(n: usize, family: &[u16]) -> bool {
    let members: BTreeSet<u16> = family.iter().copied().collect();
    if !members.contains(&0) {
        return false;
    }
    for &i in &members {
        for j in 0..1u16 << n {
            if is_sub(j, i) && !members.contains(&j) {
                return false;
            }
        }
    }
    for &a in &members {
        for &b in &members {
            if a.count_ones() < b.count_ones() {
                let augmentable = (0..n).any(|e| {
                    let bit = 1u16 << e;
                    b & bit != 0 && a & bit == 0 && members.contains(&(a | bit))
                });
                if !augmentable {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimal sets outside the family.
fn minimal_dependent(n: usize, family: &[u16]) -> Vec<u16> {
    let dependent: Vec<u16> = (0..1u16 << n).filter(|s| !family.contains(s)).collect();
    let mut minimal: Vec<u16> = dependent
        .iter()
        .copied()
        .filter(|&d| !dependent.iter().any(|&e| e != d && is_sub(e, d)))
        .collect();
    minimal.sort();
    minimal
}

/// Every independent family on `n` elements, as its circuit masks.
fn brute_force_matroids(n: usize) -> BTreeSet<Vec<u16>> {
    let size = 1usize << n;
    let mut out = BTreeSet::new();
    for choice in 0u64..1 << size {
        if choice & 1 == 0 {
            continue;
        }
        let family: Vec<u16> = (0..size as u16).filter(|s| choice >> s & 1 == 1).collect();
        if independent_family_oracle(n, &family) {
            out.insert(minimal_dependent(n, &family));
        }
    }
    out
}

#[test]
fn matroid_enumeration_matches_brute_force() {
    for (n, expected) in [1usize, 2, 5, 16, 68].into_iter().enumerate() {
        let listed: Vec<Vec<u16>> = enumerate_matroids(n)
            .unwrap()
            .map(|m| m.circuits().masks().to_vec())
            .collect();
        let unique: BTreeSet<Vec<u16>> = listed.iter().cloned().collect();
        assert_eq!(unique.len(), listed.len(), "duplicates at n={n}");
        assert_eq!(listed.len(), expected, "n={n}");
        assert_eq!(unique, brute_force_matroids(n), "n={n}");
    }
}

#[test]
fn independents_satisfy_axioms_and_round_trip() {
    for n in 0..=4 {
        for m in enumerate_matroids(n).unwrap() {
            let ind = m.independents();
            assert!(check_independence_axioms(ind).is_ok(), "{m:?}");
            assert!(independent_family_oracle(n, ind.masks()));
            assert_eq!(Matroid::from_independents(ind.clone()).unwrap(), m);
            assert_eq!(
                m.circuits().masks(),
                minimal_dependent(n, ind.masks()).as_slice()
            );
        }
    }
}

#[test]
fn relation_matroid_relation_is_stable() {
    for n in 0..=4 {
        for m in enumerate_matroids(n).unwrap() {
            let r = relation_from_matroid(&m);
            assert!(r.is_equivalence());
            let back = matroid_from_relation(&r).unwrap();
            assert_eq!(relation_from_matroid(&back), r);
            assert!(back.circuits().is_partition());
        }
    }
}

#[test]
fn closure_is_a_closure_operator() {
    for n in 0..=4 {
        let u = Universe::numbered(n).unwrap();
        let sets: Vec<ElemSet> = u.powerset().collect();
        for m in enumerate_matroids(n).unwrap() {
            let cl: Vec<ElemSet> = sets.iter().map(|x| m.closure(x).unwrap()).collect();
            for (i, x) in sets.iter().enumerate() {
                assert!(x.is_subset(&cl[i]));
                assert_eq!(m.closure(&cl[i]).unwrap(), cl[i]);
                for (j, y) in sets.iter().enumerate() {
                    if x.is_subset(y) {
                        assert!(cl[i].is_subset(&cl[j]));
                    }
                }
            }
        }
    }
}

type Pairs = BTreeSet<(usize, usize)>;

fn pairs_of(r: &BinaryRelation) -> Pairs {
    r.pairs().collect()
}

#[test]
fn relation_filters_match_pairwise_predicates() {
    for n in 0..=3 {
        let all: Vec<BinaryRelation> = enumerate_relations(n, PropertyFilter::NONE)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1 << (n * n));
        let check = |filter: PropertyFilter, pred: &dyn Fn(&Pairs) -> bool| {
            let got: Vec<u64> = enumerate_relations(n, filter)
                .unwrap()
                .map(|r| r.matrix_code())
                .collect();
            let want: Vec<u64> = all
                .iter()
                .filter(|r| pred(&pairs_of(r)))
                .map(|r| r.matrix_code())
                .collect();
            assert_eq!(got, want, "n={n} {filter:?}");
        };
        let serial = |p: &Pairs| (0..n).all(|x| p.iter().any(|&(a, _)| a == x));
        let transitive = |p: &Pairs| {
            p.iter().all(|&(x, y)| {
                p.iter()
                    .filter(|&&(a, _)| a == y)
                    .all(|&(_, z)| p.contains(&(x, z)))
            })
        };
        let reflexive = |p: &Pairs| (0..n).all(|x| p.contains(&(x, x)));
        let symmetric = |p: &Pairs| p.iter().all(|&(x, y)| p.contains(&(y, x)));
        check(PropertyFilter::TRANSITIVE, &transitive);
        check(PropertyFilter::SERIAL_TRANSITIVE, &|p| {
            serial(p) && transitive(p)
        });
        check(PropertyFilter::REFLEXIVE_TRANSITIVE, &|p| {
            reflexive(p) && transitive(p)
        });
        check(PropertyFilter::EQUIVALENCE, &|p| {
            reflexive(p) && symmetric(p) && transitive(p)
        });
    }
}

#[test]
fn transitive_relation_count_on_four() {
    let count = enumerate_relations(4, PropertyFilter::TRANSITIVE)
        .unwrap()
        .count();
    assert_eq!(count, 3994);
}

#[test]
fn verification_is_deterministic() {
    for id in ["P1", "P7", "P2-converse-transitive"] {
        let a = run_theorem(id, 3).unwrap();
        let b = run_theorem(id, 3).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.space_size, b.space_size);
        assert_eq!(a.hypothesis_count, b.hypothesis_count);
        let wa: Vec<String> = a.witnesses.iter().map(|w| w.to_string()).collect();
        let wb: Vec<String> = b.witnesses.iter().map(|w| w.to_string()).collect();
        assert_eq!(wa, wb);
    }
}

fn relation_strategy() -> impl Strategy<Value = (BinaryRelation, u16, u16)> {
    (0usize..=6).prop_flat_map(|n| {
        let cells = n * n;
        (
            Just(n),
            0u64..=(if cells == 0 {
                0
            } else {
                u64::MAX >> (64 - cells)
            }),
            0u16..=((1u32 << n) - 1) as u16,
            0u16..=((1u32 << n) - 1) as u16,
        )
            .prop_map(|(n, code, x, y)| {
                let u = Universe::numbered(n).unwrap();
                (BinaryRelation::from_matrix_code(&u, code), x, y)
            })
    })
}

fn upper_oracle(r: &BinaryRelation, x: u16) -> u16 {
    let n = r.universe().len();
    (0..n)
        .filter(|&a| (0..n).any(|b| r.contains(a, b) && x >> b & 1 == 1))
        .fold(0, |acc, a| acc | 1 << a)
}

fn lower_oracle(r: &BinaryRelation, x: u16) -> u16 {
    let n = r.universe().len();
    (0..n)
        .filter(|&a| (0..n).all(|b| !r.contains(a, b) || x >> b & 1 == 1))
        .fold(0, |acc, a| acc | 1 << a)
}

proptest! {
    #[test]
    fn approximation_laws((r, x, y) in relation_strategy()) {
        let u = r.universe().clone();
        let sx = u.set_from_mask(x).unwrap();
        let sy = u.set_from_mask(y).unwrap();
        let lower = |s: &ElemSet| r.lower_approx(s).unwrap();
        let upper = |s: &ElemSet| r.upper_approx(s).unwrap();
        prop_assert_eq!(upper(&sx).mask(), upper_oracle(&r, x));
        prop_assert_eq!(lower(&sx).mask(), lower_oracle(&r, x));
        prop_assert_eq!(lower(&sx), upper(&sx.complement()).complement());
        prop_assert_eq!(upper(&(&sx | &sy)), &upper(&sx) | &upper(&sy));
        prop_assert_eq!(lower(&(&sx & &sy)), &lower(&sx) & &lower(&sy));
        prop_assert_eq!(r.is_transitive(), r.is_transitive_pairwise());
    }

    #[test]
    fn relation_document_round_trip(
        labels in proptest::collection::btree_set("[a-z][a-z0-9_]{0,4}", 0..=6),
        code in any::<u64>(),
    ) {
        let u = Universe::new(labels.iter().cloned()).unwrap();
        let cells = u.len() * u.len();
        let mask = if cells == 0 { 0 } else { u64::MAX >> (64 - cells) };
        let r = BinaryRelation::from_matrix_code(&u, code & mask);
        let text = format_relation_document(&r);
        prop_assert_eq!(parse_relation(&text).unwrap(), r);
    }
}

#[test]
fn free_matroid_has_every_set_independent() {
    for n in 0..=4 {
        let u = Universe::numbered(n).unwrap();
        let free = Matroid::free(&u);
        assert_eq!(*free.independents(), SetFamily::powerset(&u));
        assert!(free.is_free());
    }
}
