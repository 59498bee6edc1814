//! Inverted-element witnesses.
//!
//! For `Sⁿ` with `S` nonabelian simple, every automorphism is
//! `(α₁,…,α_n)σ`, acting by `v ↦ (α₁(v_{σ⁻¹(1)}), …, α_n(v_{σ⁻¹(n)}))`.
//! [`find_inverted_witness`] twists one coordinate by an inner automorphism
//! if needed and returns a nontrivial tuple the result sends to its
//! componentwise inverse. [`psl2_witness`] produces, for `PSL₂(q)`, a coset
//! representative of `Inn` together with a nontrivial element it inverts.

use std::sync::Arc;

use num_integer::gcd;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::aut::{
    frobenius_field_aut, inner_automorphism, semilinear_automorphism, AutError, AutGroup,
    Automorphism,
};
use crate::field::FieldElement;
use crate::group::{
    build_atomic, Atom, GroupError, GroupTable, Mat2, Permutation, ProjectiveMatrix,
};

/// Above this many elements of `Sⁿ`, automorphism checks are sampled.
pub const WREATH_EXHAUSTIVE_LIMIT: u64 = 4096;
/// Random pairs checked when `Sⁿ` is too large to enumerate.
pub const WREATH_SAMPLES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("tuple has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0} automorphisms supplied for a permutation of degree {1}")]
    ShapeMismatch(usize, usize),
    #[error("automorphism {0} belongs to a different group")]
    ForeignAutomorphism(usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("variant {variant:?} does not apply to q = {q}")]
    VariantMismatch { q: u32, variant: Psl2Variant },
    #[error("field power {i} out of range 0..{f}")]
    FieldPowerOutOfRange { i: u32, f: u32 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

/// `(α₁,…,α_n)σ` on `Sⁿ`.
#[derive(Debug, Clone)]
pub struct WreathAut {
    base: Arc<GroupTable>,
    alphas: Vec<Automorphism>,
    sigma: Permutation,
    sigma_inv: Permutation,
}

impl WreathAut {
    pub fn new(
        base: &Arc<GroupTable>,
        alphas: Vec<Automorphism>,
        sigma: Permutation,
    ) -> Result<WreathAut, WitnessError> {
        if alphas.len() != sigma.degree() {
            return Err(WitnessError::ShapeMismatch(alphas.len(), sigma.degree()));
        }
        if let Some(i) = alphas.iter().position(|a| !Arc::ptr_eq(a.parent(), base)) {
            return Err(WitnessError::ForeignAutomorphism(i));
        }
        let sigma_inv = sigma.inverse();
        Ok(WreathAut {
            base: base.clone(),
            alphas,
            sigma,
            sigma_inv,
        })
    }

    pub fn base(&self) -> &Arc<GroupTable> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[Automorphism] {
        &self.alphas
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// Component `i` of the result is `α_i(v[σ⁻¹(i)])`.
    pub fn apply(&self, v: &[usize]) -> Result<Vec<usize>, WitnessError> {
        if v.len() != self.n() {
            return Err(WitnessError::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        Ok(self.apply_unchecked(v))
    }

    fn apply_unchecked(&self, v: &[usize]) -> Vec<usize> {
        (0..self.n())
            .map(|i| self.alphas[i].apply(v[self.sigma_inv.apply(i)]))
            .collect()
    }

    fn tuple_mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.mul(x, y))
            .collect()
    }

    /// Checks bijectivity and `w(ab) = w(a)w(b)` on `Sⁿ`: exhaustively when
    /// `|S|ⁿ ≤ limit`, otherwise on [`WREATH_SAMPLES`] seeded random pairs.
    pub fn verify_automorphism(&self, limit: u64, seed: u64) -> bool {
        let s = self.base.order();
        let n = self.n();
        let size = (s as u64).checked_pow(n as u32);
        let homomorphic = |a: &[usize], b: &[usize]| {
            self.apply_unchecked(&self.tuple_mul(a, b))
                == self.tuple_mul(&self.apply_unchecked(a), &self.apply_unchecked(b))
        };
        match size {
            Some(size) if size <= limit => {
                let tuples: Vec<Vec<usize>> = (0..size as usize)
                    .map(|mut code| {
                        (0..n)
                            .map(|_| {
                                let x = code % s;
                                code /= s;
                                x
                            })
                            .collect()
                    })
                    .collect();
                let mut seen = std::collections::HashSet::new();
                tuples.iter().all(|t| seen.insert(self.apply_unchecked(t)))
                    && tuples
                        .par_iter()
                        .all(|a| tuples.iter().all(|b| homomorphic(a, b)))
            }
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let random = |rng: &mut ChaCha8Rng| -> Vec<usize> {
                    (0..n).map(|_| rng.gen_range(0..s)).collect()
                };
                (0..WREATH_SAMPLES).all(|_| {
                    let a = random(&mut rng);
                    let b = random(&mut rng);
                    homomorphic(&a, &b)
                })
            }
        }
    }

    /// The same automorphism with `α_i` replaced by `ι_g ∘ α_i`.
    pub fn twisted(&self, i: usize, g: usize) -> WreathAut {
        let mut out = self.clone();
        out.alphas[i] = inner_automorphism(&self.base, g).compose(&self.alphas[i]);
        out
    }
}

/// An inner twist `β_c = ι_g ∘ α_c` applied before building a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Twist {
    pub coordinate: usize,
    pub conjugator: usize,
}

#[derive(Debug, Clone)]
pub struct InvertedWitness {
    /// The tuple `(s₁,…,s_n)`.
    pub vector: Vec<usize>,
    /// The σ-cycle used, starting at its least index.
    pub cycle_used: Vec<usize>,
    pub twist: Option<Twist>,
    /// The automorphism the witness is for (the input, twisted if needed).
    pub automorphism: WreathAut,
    pub verified: bool,
}

impl InvertedWitness {
    /// Re-checks that the tuple is nontrivial and sent to its inverse.
    pub fn check(&self) -> bool {
        let w = &self.automorphism;
        let image = w.apply_unchecked(&self.vector);
        self.vector.iter().any(|&x| x != 0)
            && image
                .iter()
                .zip(&self.vector)
                .all(|(&y, &x)| y == w.base.inv(x))
    }
}

/// The σ-cycle through the least moved index (index 0 when σ is the identity).
fn chosen_cycle(sigma: &Permutation) -> Vec<usize> {
    let start = (0..sigma.degree())
        .find(|&i| sigma.apply(i) != i)
        .unwrap_or(0);
    let mut cycle = vec![start];
    let mut x = sigma.apply(start);
    while x != start {
        cycle.push(x);
        x = sigma.apply(x);
    }
    cycle
}

/// Builds a nontrivial `s` with `w'(s) = s⁻¹` for `w' ∈ w·Inn(Sⁿ)`.
///
/// Along a cycle `c₁ → c₂ → … → c_k` of σ write `β_j = α_{c_j}` and
/// `γ = β_k⋯β₁`. The equations force `s_{c_i} = (β_i⋯β₁)(x)^{(−1)^i}` with
/// `x = s_{c_k}`, and close up iff `γ(x) = x` (even `k`) or `γ(x) = x⁻¹`
/// (odd `k`). In the odd case the coset `γ·Inn(S)` is scanned for a member
/// `ι_g∘γ` that inverts something, and `β_k` becomes `ι_g∘β_k`. All other
/// coordinates are 1.
pub fn find_inverted_witness(w: &WreathAut) -> Result<InvertedWitness, WitnessError> {
    let s = &w.base;
    let cycle = chosen_cycle(&w.sigma);
    let k = cycle.len();
    let gamma = cycle.iter().fold(Automorphism::identity(s), |acc, &c| {
        w.alphas[c].compose(&acc)
    });
    let (x, twist) = if k.is_multiple_of(2) {
        let x = (1..s.order())
            .find(|&x| gamma.apply(x) == x)
            .ok_or_else(|| {
                WitnessError::TheoremViolation(format!(
                    "automorphism of {} without nontrivial fixed point",
                    s.name()
                ))
            })?;
        (x, None)
    } else {
        let found = (0..s.order()).find_map(|g| {
            (1..s.order())
                .find(|&x| s.conjugate(g, gamma.apply(x)) == s.inv(x))
                .map(|x| (g, x))
        });
        let (g, x) = found.ok_or_else(|| {
            WitnessError::TheoremViolation(format!(
                "coset in Aut({}) without inverting member",
                s.name()
            ))
        })?;
        let twist = (g != 0).then_some(Twist {
            coordinate: cycle[k - 1],
            conjugator: g,
        });
        (x, twist)
    };
    let automorphism = match twist {
        Some(t) => w.twisted(t.coordinate, t.conjugator),
        None => w.clone(),
    };
    let mut vector = vec![0; w.n()];
    let mut partial = x;
    for (i, &c) in cycle.iter().enumerate() {
        partial = automorphism.alphas[c].apply(partial);
        // 1-based position i+1; odd positions take the inverse
        vector[c] = if i % 2 == 0 { s.inv(partial) } else { partial };
    }
    vector[cycle[k - 1]] = x;
    let mut witness = InvertedWitness {
        vector,
        cycle_used: cycle,
        twist,
        automorphism,
        verified: false,
    };
    witness.verified = witness.check();
    if !witness.verified {
        return Err(WitnessError::TheoremViolation(
            "constructed tuple fails verification".into(),
        ));
    }
    Ok(witness)
}

/// Partitions of `n` with parts in non-increasing order, largest parts first.
pub fn cycle_types(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A uniformly random permutation among those with the given cycle type.
pub fn random_permutation_with_type(cycle_type: &[usize], rng: &mut impl Rng) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let mut images: Vec<usize> = (0..n).collect();
    let mut rest = points.as_slice();
    for &len in cycle_type {
        let (cycle, tail) = rest.split_at(len);
        for j in 0..len {
            images[cycle[j]] = cycle[(j + 1) % len];
        }
        rest = tail;
    }
    Permutation::from_images(images).expect("cycles partition the points")
}

/// `(α₁,…,α_n)σ` with uniform `αᵢ ∈ Aut(S)` and σ of the given cycle type.
pub fn random_wreath(
    base: &Arc<GroupTable>,
    aut: &AutGroup,
    cycle_type: &[usize],
    rng: &mut impl Rng,
) -> Result<WreathAut, WitnessError> {
    let n = cycle_type.iter().sum();
    let alphas = (0..n)
        .map(|_| aut.get(rng.gen_range(0..aut.len())).clone())
        .collect();
    let sigma = random_permutation_with_type(cycle_type, rng);
    WreathAut::new(base, alphas, sigma)
}

/// One randomized run of [`find_inverted_witness`].
#[derive(Debug, Clone)]
pub struct WreathTrial {
    pub trial: usize,
    pub base: String,
    pub cycle_type: Vec<usize>,
    pub seed: u64,
    pub automorphism_verified: bool,
    pub witness: Result<InvertedWitness, WitnessError>,
}

/// Runs `count` trials cycling through every base and every cycle type of
/// degree `1..=max_n`; trial `t` uses seed `root_seed + t`.
pub fn wreath_trials(
    bases: &[(Arc<GroupTable>, AutGroup)],
    max_n: usize,
    count: usize,
    root_seed: u64,
) -> Vec<WreathTrial> {
    let schedule: Vec<(usize, Vec<usize>)> = (0..bases.len())
        .flat_map(|b| (1..=max_n).flat_map(cycle_types).map(move |t| (b, t)))
        .collect();
    (0..count)
        .into_par_iter()
        .map(|t| {
            let (b, cycle_type) = &schedule[t % schedule.len()];
            let (base, aut) = &bases[*b];
            let seed = root_seed.wrapping_add(t as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let w = random_wreath(base, aut, cycle_type, &mut rng).expect("well-formed");
            let automorphism_verified = w.verify_automorphism(WREATH_EXHAUSTIVE_LIMIT, seed);
            WreathTrial {
                trial: t,
                base: base.name().to_string(),
                cycle_type: cycle_type.clone(),
                seed,
                automorphism_verified,
                witness: find_inverted_witness(&w),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Psl2Variant {
    Char2,
    Q1Mod4,
    Q3Mod4,
}

impl Psl2Variant {
    pub fn for_q(q: u32) -> Psl2Variant {
        match (q % 2, q % 4) {
            (0, _) => Psl2Variant::Char2,
            (_, 1) => Psl2Variant::Q1Mod4,
            _ => Psl2Variant::Q3Mod4,
        }
    }
}

/// A nontrivial element of `PSL₂(q)` inverted by a chosen representative of a coset of `Inn`.
#[derive(Debug, Clone)]
pub struct Psl2Witness {
    pub q: u32,
    pub i: u32,
    pub variant: Psl2Variant,
    pub group: Arc<GroupTable>,
    pub element: usize,
    /// `M ↦ N·φ^i(M)·N⁻¹`.
    pub conjugator: Mat2,
    pub coset_rep: Automorphism,
    /// The power of the coset representative equal to conjugation by the element (q ≡ 1 mod 4).
    pub exponent: Option<u64>,
    pub verified: bool,
}

pub fn psl2_witness(q: u32, i: u32, variant: Psl2Variant) -> Result<Psl2Witness, WitnessError> {
    if Psl2Variant::for_q(q) != variant {
        return Err(WitnessError::VariantMismatch { q, variant });
    }
    let group = build_atomic(Atom::Psl2(q), u64::MAX)?;
    let k = group.field().expect("linear group").clone();
    let f = k.degree();
    if i >= f {
        return Err(WitnessError::FieldPowerOutOfRange { i, f });
    }
    let one = FieldElement::ONE;
    let zero = FieldElement::ZERO;
    let outside_psl = |m: &Mat2| -> Result<(), WitnessError> {
        match ProjectiveMatrix::new(*m, &k) {
            Some(p) if !p.in_psl(&k) => Ok(()),
            _ => Err(WitnessError::TheoremViolation(format!(
                "{} should lie in PGL2({q}) outside PSL2({q})",
                m.display(&k)
            ))),
        }
    };
    let index = |m: &Mat2| {
        group.index_of_matrix(m).ok_or_else(|| {
            WitnessError::TheoremViolation(format!("{} is not in PSL2({q})", m.display(&k)))
        })
    };
    let (conjugator, element, exponent) = match variant {
        Psl2Variant::Char2 => (
            Mat2::IDENTITY,
            index(&Mat2::new(one, one, zero, one))?,
            None,
        ),
        Psl2Variant::Q3Mod4 => {
            let a = Mat2::new(zero, one, one, zero);
            outside_psl(&a)?;
            (a, index(&Mat2::new(zero, one, k.neg(one), zero))?, None)
        }
        Psl2Variant::Q1Mod4 => {
            let xi = k.generator();
            let d = Mat2::new(xi, zero, zero, one);
            outside_psl(&d)?;
            let p = k.characteristic() as u64;
            let g = gcd(f, i) as u32;
            let e = (f / g) as u64 * (p.pow(g) - 1) / 2;
            // (N, j) stands for M ↦ N·φ^j(M)·N⁻¹; (N₁, j₁)(N₂, j₂) = (N₁·φ^{j₁}(N₂), j₁ + j₂)
            let (mut n, mut j) = (Mat2::IDENTITY, 0u32);
            for _ in 0..e {
                n = d.mul(&n.frobenius(i, &k), &k);
                j = (j + i) % f;
            }
            if j != 0 {
                return Err(WitnessError::TheoremViolation(format!(
                    "power {e} of the coset representative is not inner"
                )));
            }
            let minus_one = k.pow(xi, ((q - 1) / 2) as i64).expect("nonzero base");
            if minus_one != k.neg(one) {
                return Err(WitnessError::TheoremViolation("ξ^((q-1)/2) ≠ -1".into()));
            }
            let expected = Mat2::new(minus_one, zero, zero, one);
            let (got, want) = (
                ProjectiveMatrix::new(n, &k),
                ProjectiveMatrix::new(expected, &k),
            );
            if got.is_none() || got != want {
                return Err(WitnessError::TheoremViolation(format!(
                    "power is {}, expected the class of diag(-1, 1)",
                    n.display(&k)
                )));
            }
            (d, index(&n)?, Some(e))
        }
    };
    let coset_rep = match variant {
        Psl2Variant::Char2 => frobenius_field_aut(&group, i)?,
        _ => semilinear_automorphism(&group, &conjugator, i)?,
    };
    if let Some(e) = exponent {
        // the same power, taken in Aut(G) by iterating the index map
        if coset_rep.power(e).images() != inner_automorphism(&group, element).images() {
            return Err(WitnessError::TheoremViolation(
                "iterated coset representative disagrees with the matrix power".into(),
            ));
        }
    }
    let verified = element != 0
        && group.element_order(element) == 2
        && coset_rep.apply(element) == group.inv(element);
    Ok(Psl2Witness {
        q,
        i,
        variant,
        group,
        element,
        conjugator,
        coset_rep,
        exponent,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{compute_aut, Strategy};
    use crate::group::DEFAULT_ORDER_CAP;

    fn a5() -> Arc<GroupTable> {
        build_atomic(Atom::Alternating(5), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn apply_pattern() {
        let s = a5();
        let id = Automorphism::identity(&s);
        let w = WreathAut::new(&s, vec![id.clone(), id.clone()], Permutation::identity(2)).unwrap();
        assert_eq!(w.apply(&[3, 7]).unwrap(), vec![3, 7]);
        let swap = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let w = WreathAut::new(&s, vec![id.clone(), id.clone()], swap).unwrap();
        assert_eq!(w.apply(&[5, 0]).unwrap(), vec![0, 5]);
        assert_eq!(
            w.apply(&[1]).unwrap_err(),
            WitnessError::LengthMismatch {
                expected: 2,
                got: 1
            }
        );
        assert!(w.verify_automorphism(WREATH_EXHAUSTIVE_LIMIT, 0));
    }

    #[test]
    fn even_cycle_example() {
        let s = a5();
        let id = Automorphism::identity(&s);
        let swap = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let w = WreathAut::new(&s, vec![id.clone(), id], swap).unwrap();
        let wit = find_inverted_witness(&w).unwrap();
        assert_eq!(wit.vector, vec![s.inv(1), 1]);
        assert_eq!(wit.cycle_used, vec![0, 1]);
        assert!(wit.twist.is_none() && wit.verified);
    }

    #[test]
    fn odd_cycle_example() {
        let s = a5();
        let w = WreathAut::new(
            &s,
            vec![Automorphism::identity(&s)],
            Permutation::identity(1),
        )
        .unwrap();
        let wit = find_inverted_witness(&w).unwrap();
        let t = wit.vector[0];
        assert_eq!(s.element_order(t), 2);
        assert!((1..t).all(|x| s.element_order(x) != 2));
        assert!(wit.twist.is_none());
    }

    #[test]
    fn three_cycle_random_alphas() {
        let s = a5();
        let aut = compute_aut(&s, Strategy::Brute).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let w = random_wreath(&s, &aut, &[3], &mut rng).unwrap();
            let wit = find_inverted_witness(&w).unwrap();
            assert!(wit.check());
        }
    }

    #[test]
    fn cycle_type_enumeration() {
        assert_eq!(
            cycle_types(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in cycle_types(5) {
            assert_eq!(random_permutation_with_type(&t, &mut rng).cycle_type(), t);
        }
    }

    #[test]
    fn psl2_examples() {
        let w = psl2_witness(5, 0, Psl2Variant::Q1Mod4).unwrap();
        assert_eq!(w.exponent, Some(2));
        assert!(w.verified);
        let w = psl2_witness(7, 0, Psl2Variant::Q3Mod4).unwrap();
        assert!(w.verified);
        let w = psl2_witness(4, 1, Psl2Variant::Char2).unwrap();
        assert!(w.verified);
        assert_eq!(
            psl2_witness(7, 0, Psl2Variant::Q1Mod4).unwrap_err(),
            WitnessError::VariantMismatch {
                q: 7,
                variant: Psl2Variant::Q1Mod4
            }
        );
        assert_eq!(
            psl2_witness(9, 2, Psl2Variant::Q1Mod4).unwrap_err(),
            WitnessError::FieldPowerOutOfRange { i: 2, f: 2 }
        );
    }
}
