//! Bijectivity predicates on automorphisms.
//!
//! An automorphism `α` is `k`-complete when `g ↦ g^k·α(g)` is a bijection.

use num_integer::gcd;
use num_rational::Ratio;
use serde::Serialize;

use crate::aut::Automorphism;
use crate::group::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `image[g] = g^k·α(g)`, all distinct.
    Bijective { image: Vec<usize> },
    /// `g ≠ h` with `g^k·α(g) = h^k·α(h) = value`.
    Collision { g: usize, h: usize, value: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletenessVerdict {
    pub group: String,
    pub automorphism: String,
    pub k: i64,
    pub certificate: Certificate,
}

impl CompletenessVerdict {
    pub fn verdict(&self) -> bool {
        matches!(self.certificate, Certificate::Bijective { .. })
    }
}

/// Precomputed `g ↦ g^k` plus a reusable occupancy buffer.
///
/// One checker serves any number of automorphisms of the same group.
pub struct CompletenessChecker<'a> {
    group: &'a GroupTable,
    k: i64,
    powers: Vec<u32>,
    seen: Vec<u32>,
    /// `seen[v] == stamp` marks `v` as taken in the current pass.
    stamp: u32,
}

impl<'a> CompletenessChecker<'a> {
    pub fn new(group: &'a GroupTable, k: i64) -> Self {
        let n = group.order();
        CompletenessChecker {
            group,
            k,
            powers: power_table(group, k),
            seen: vec![0; n],
            stamp: 0,
        }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.fill(0);
            self.stamp = 1;
        }
        self.stamp
    }

    #[inline]
    fn value(&self, alpha: &Automorphism, g: usize) -> usize {
        self.group.mul(self.powers[g] as usize, alpha.apply(g))
    }

    /// The first collision `(g, h)` with `g > h`, or `None` if bijective.
    pub fn collision(&mut self, alpha: &Automorphism) -> Option<(usize, usize)> {
        let stamp = self.next_stamp();
        let n = self.group.order();
        for g in 0..n {
            let v = self.value(alpha, g);
            if self.seen[v] == stamp {
                let h = (0..g)
                    .find(|&h| self.value(alpha, h) == v)
                    .expect("earlier preimage");
                return Some((g, h));
            }
            self.seen[v] = stamp;
        }
        None
    }

    pub fn is_complete(&mut self, alpha: &Automorphism) -> bool {
        self.collision(alpha).is_none()
    }

    pub fn verdict(&mut self, alpha: &Automorphism) -> CompletenessVerdict {
        let certificate = match self.collision(alpha) {
            Some((g, h)) => Certificate::Collision {
                g,
                h,
                value: self.value(alpha, g),
            },
            None => Certificate::Bijective {
                image: (0..self.group.order())
                    .map(|g| self.value(alpha, g))
                    .collect(),
            },
        };
        let verdict = CompletenessVerdict {
            group: self.group.name().to_string(),
            automorphism: alpha.provenance().to_string(),
            k: self.k,
            certificate,
        };
        debug_assert!(recheck(self.group, alpha, &verdict));
        verdict
    }
}

/// `g ↦ g^k` for every element; negative `k` goes through inverses.
pub fn power_table(group: &GroupTable, k: i64) -> Vec<u32> {
    (0..group.order()).map(|g| group.pow(g, k) as u32).collect()
}

/// Re-verifies a certificate from scratch.
pub fn recheck(group: &GroupTable, alpha: &Automorphism, v: &CompletenessVerdict) -> bool {
    let f = |g: usize| group.mul(group.pow(g, v.k), alpha.apply(g));
    match &v.certificate {
        Certificate::Collision { g, h, value } => g != h && f(*g) == *value && f(*h) == *value,
        Certificate::Bijective { image } => {
            let mut seen = vec![false; group.order()];
            image.len() == group.order()
                && image.iter().enumerate().all(|(g, &x)| {
                    let fresh = x < seen.len() && !seen[x] && f(g) == x;
                    if fresh {
                        seen[x] = true;
                    }
                    fresh
                })
        }
    }
}

pub fn is_k_complete(alpha: &Automorphism, k: i64) -> CompletenessVerdict {
    CompletenessChecker::new(alpha.parent(), k).verdict(alpha)
}

/// `{g : β(g) = g⁻¹}`.
pub fn inverted_set(beta: &Automorphism) -> Vec<usize> {
    let g = beta.parent();
    (0..g.order())
        .filter(|&x| beta.apply(x) == g.inv(x))
        .collect()
}

/// Some `(ι, x)` with `x ≠ 1` and `(α∘ι)(x) = x⁻¹`, scanning `inner` in order.
pub fn inversion_witness<'a, I>(alpha: &Automorphism, inner: I) -> Option<(&'a Automorphism, usize)>
where
    I: IntoIterator<Item = &'a Automorphism>,
{
    let g = alpha.parent();
    inner.into_iter().find_map(|iota| {
        (1..g.order())
            .find(|&x| alpha.apply(iota.apply(x)) == g.inv(x))
            .map(|x| (iota, x))
    })
}

/// Whether no member of the coset `α·Inn(G)` inverts a nontrivial element.
/// Equivalent to 1-completeness of `α`.
pub fn inversion_criterion<'a, I>(alpha: &Automorphism, inner: I) -> bool
where
    I: IntoIterator<Item = &'a Automorphism>,
{
    inversion_witness(alpha, inner).is_none()
}

/// `(fixed-point-free, (−1)-complete)`, computed independently.
pub fn is_fixed_point_free_equiv(alpha: &Automorphism) -> (bool, bool) {
    let fpf = alpha.fixed_points().len() == 1;
    let minus_one = CompletenessChecker::new(alpha.parent(), -1).is_complete(alpha);
    (fpf, minus_one)
}

/// `g ↦ g·α(g)·α²(g)⋯α^k(g)`.
pub fn iterate_map(alpha: &Automorphism, k: u32) -> Vec<usize> {
    let g = alpha.parent();
    (0..g.order())
        .map(|x| {
            let mut acc = x;
            let mut cur = x;
            for _ in 0..k {
                cur = alpha.apply(cur);
                acc = g.mul(acc, cur);
            }
            acc
        })
        .collect()
}

fn is_injective(values: &[usize]) -> bool {
    let mut seen = vec![false; values.len()];
    values
        .iter()
        .all(|&v| !std::mem::replace(&mut seen[v], true))
}

pub fn iterate_map_bijective(alpha: &Automorphism, k: u32) -> bool {
    is_injective(&iterate_map(alpha, k))
}

/// Whether `g·α(g)⋯α^(m−1)(g) = 1` for all `g`, where `m = ord(α)`.
pub fn is_splitting(alpha: &Automorphism) -> bool {
    let k = (alpha.order() - 1) as u32;
    iterate_map(alpha, k).iter().all(|&x| x == 0)
}

/// Whether `{1}` is the only conjugacy class mapped onto itself by `α`.
pub fn is_antisymmetric(alpha: &Automorphism, classes: &[Vec<usize>]) -> bool {
    classes
        .iter()
        .filter(|c| c.len() > 1 || c[0] != 0)
        .all(|class| {
            // classes are sorted, so membership is a binary search
            class.binary_search(&alpha.apply(class[0])).is_err()
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioMode {
    /// `|{s·α(s)}| / |G|`.
    Product,
    /// `|{s⁻¹·α(s)}| / |G|`.
    Commutator,
}

pub fn image_ratio(alpha: &Automorphism, mode: RatioMode) -> Ratio<u64> {
    let g = alpha.parent();
    let n = g.order();
    let mut seen = vec![false; n];
    for s in 0..n {
        let left = match mode {
            RatioMode::Product => s,
            RatioMode::Commutator => g.inv(s),
        };
        seen[g.mul(left, alpha.apply(s))] = true;
    }
    Ratio::new(seen.iter().filter(|&&b| b).count() as u64, n as u64)
}

/// Whether `g ↦ g^m` is a bijection.
///
/// # Panics
/// If the answer disagrees with `gcd(m, |G|) = 1`.
pub fn power_map_bijective(group: &GroupTable, m: i64) -> bool {
    let n = group.order();
    let table: Vec<usize> = power_table(group, m)
        .into_iter()
        .map(|x| x as usize)
        .collect();
    let bijective = is_injective(&table);
    let coprime = gcd(m.unsigned_abs(), n as u64) == 1;
    assert_eq!(
        bijective,
        coprime,
        "power map x^{m} on {} contradicts gcd",
        group.name()
    );
    bijective
}

/// `|²B₂(q)| = q²(q²+1)(q−1)`.
pub fn suzuki_order(q: u64) -> u64 {
    q * q * (q * q + 1) * (q - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{compute_aut, inner_automorphism, Provenance, Strategy};
    use crate::group::{build_atomic, Atom, Permutation, DEFAULT_ORDER_CAP};
    use std::sync::Arc;

    fn build(atom: Atom) -> Arc<GroupTable> {
        build_atomic(atom, DEFAULT_ORDER_CAP).unwrap()
    }

    fn power_aut(g: &Arc<GroupTable>, e: i64) -> Automorphism {
        let images = (0..g.order()).map(|x| g.pow(x, e)).collect();
        Automorphism::new(g.clone(), images, Provenance::Raw).unwrap()
    }

    #[test]
    fn identity_completeness() {
        let c3 = build(Atom::Cyclic(3));
        assert!(is_k_complete(&Automorphism::identity(&c3), 1).verdict());
        let c2 = build(Atom::Cyclic(2));
        let v = is_k_complete(&Automorphism::identity(&c2), 1);
        assert_eq!(
            v.certificate,
            Certificate::Collision {
                g: 1,
                h: 0,
                value: 0
            }
        );
        assert!(recheck(&c2, &Automorphism::identity(&c2), &v));
    }

    #[test]
    fn a5_has_no_complete_automorphism() {
        let a5 = build(Atom::Alternating(5));
        let aut = compute_aut(&a5, Strategy::Brute).unwrap();
        let mut checker = CompletenessChecker::new(&a5, 1);
        for alpha in aut.all() {
            assert!(!checker.is_complete(alpha));
            assert!(!inversion_criterion(alpha, aut.inner()));
            assert!(!is_antisymmetric(alpha, a5.conjugacy_classes()));
        }
    }

    #[test]
    fn inverted_sets() {
        let c2 = build(Atom::Cyclic(2));
        assert_eq!(inverted_set(&Automorphism::identity(&c2)), vec![0, 1]);
        let c5 = build(Atom::Cyclic(5));
        assert_eq!(inverted_set(&Automorphism::identity(&c5)), vec![0]);
        assert_eq!(inverted_set(&power_aut(&c5, -1)).len(), 5);
        let id3 = Automorphism::identity(&build(Atom::Cyclic(3)));
        assert!(inversion_criterion(&id3, [&id3]));
        let id2 = Automorphism::identity(&c2);
        assert!(!inversion_criterion(&id2, [&id2]));
    }

    #[test]
    fn fixed_point_free() {
        let c5 = build(Atom::Cyclic(5));
        assert_eq!(
            is_fixed_point_free_equiv(&Automorphism::identity(&c5)),
            (false, false)
        );
        assert_eq!(is_fixed_point_free_equiv(&power_aut(&c5, 2)), (true, true));
        let s3 = build(Atom::Symmetric(3));
        let t = s3
            .index_of_perm(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap())
            .unwrap();
        assert_eq!(
            is_fixed_point_free_equiv(&inner_automorphism(&s3, t)),
            (false, false)
        );
    }

    #[test]
    fn iterates_and_splitting() {
        let c5 = build(Atom::Cyclic(5));
        assert!(iterate_map_bijective(&Automorphism::identity(&c5), 2));
        let c3 = build(Atom::Cyclic(3));
        assert!(!iterate_map_bijective(&Automorphism::identity(&c3), 2));
        assert!(is_splitting(&power_aut(&c3, -1)));
        assert!(!is_splitting(&Automorphism::identity(&build(
            Atom::Cyclic(2)
        ))));
        let c7 = build(Atom::Cyclic(7));
        let sq = power_aut(&c7, 2);
        assert_eq!(sq.order(), 3);
        assert!(is_splitting(&sq));
        assert!(is_antisymmetric(&sq, c7.conjugacy_classes()));
        let s3 = build(Atom::Symmetric(3));
        assert!(!is_antisymmetric(
            &Automorphism::identity(&s3),
            s3.conjugacy_classes()
        ));
    }

    #[test]
    fn ratios() {
        let c3 = build(Atom::Cyclic(3));
        assert_eq!(
            image_ratio(&Automorphism::identity(&c3), RatioMode::Product),
            Ratio::new(1, 1)
        );
        let s4 = build(Atom::Symmetric(4));
        assert_eq!(
            image_ratio(&Automorphism::identity(&s4), RatioMode::Commutator),
            Ratio::new(1, 24)
        );
        let a5 = build(Atom::Alternating(5));
        let squares: std::collections::BTreeSet<usize> = (0..60).map(|x| a5.mul(x, x)).collect();
        assert_eq!(
            image_ratio(&Automorphism::identity(&a5), RatioMode::Product),
            Ratio::new(squares.len() as u64, 60)
        );
    }

    #[test]
    fn power_maps() {
        assert!(!power_map_bijective(&build(Atom::Cyclic(3)), 3));
        assert!(power_map_bijective(&build(Atom::Alternating(5)), -1));
        assert!(power_map_bijective(&build(Atom::Alternating(5)), 7));
        assert_eq!(suzuki_order(8), 29120);
        assert_eq!(gcd(3, suzuki_order(8)), 1);
    }
}
