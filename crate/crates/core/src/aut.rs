//! Automorphisms as index bijections, `Inn(G)`, `Aut(G)` and its `Inn(G)`-cosets.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_integer::{gcd, lcm};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group::{Atom, Construction, GroupTable, Mat2, ProjectiveMatrix};

/// Largest order for which [`Strategy::Brute`] is accepted.
pub const BRUTE_FORCE_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("strategy precondition violated: {0}")]
    Strategy(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("field power {i} out of range 0..{f}")]
    FieldPowerOutOfRange { i: u32, f: u32 },
    #[error("{0} is not a linear group")]
    NotLinear(String),
}

/// Where an automorphism came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Provenance {
    /// Conjugation `x ↦ g x g⁻¹` by the element with this index.
    Inner(usize),
    /// Entrywise Frobenius `x ↦ x^(p^i)`.
    Field(u32),
    /// Conjugation by a matrix outside the group itself.
    Diagonal,
    Composed,
    Raw,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Inner(g) => write!(f, "inner({g})"),
            Provenance::Field(i) => write!(f, "field({i})"),
            Provenance::Diagonal => write!(f, "diagonal"),
            Provenance::Composed => write!(f, "composed"),
            Provenance::Raw => write!(f, "raw"),
        }
    }
}

/// A multiplicative bijection of a group's element indices.
#[derive(Clone)]
pub struct Automorphism {
    images: Vec<u32>,
    parent: Arc<GroupTable>,
    provenance: Provenance,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Automorphism")
            .field("group", &self.parent.name())
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.images == other.images
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    /// Validates bijectivity and multiplicativity.
    ///
    /// Multiplicativity is checked on the edges `x → x·s` of the Cayley graph
    /// for a generating set `s`, which for a bijection fixing 1 is equivalent
    /// to the full check.
    pub fn new(
        parent: Arc<GroupTable>,
        images: Vec<usize>,
        provenance: Provenance,
    ) -> Result<Automorphism, AutError> {
        let n = parent.order();
        if images.len() != n {
            return Err(AutError::NotAutomorphism(format!(
                "{} images for {n} elements",
                images.len()
            )));
        }
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n || seen[y] {
                return Err(AutError::NotAutomorphism("not a bijection".into()));
            }
            seen[y] = true;
        }
        if images[0] != 0 {
            return Err(AutError::NotAutomorphism("identity not fixed".into()));
        }
        let gens = parent.generating_set();
        for x in 0..n {
            for &s in gens {
                if images[parent.mul(x, s)] != parent.mul(images[x], images[s]) {
                    return Err(AutError::NotAutomorphism(format!(
                        "fails at ({}, {})",
                        parent.label(x),
                        parent.label(s)
                    )));
                }
            }
        }
        Ok(Self::from_images_unchecked(parent, images, provenance))
    }

    pub(crate) fn from_images_unchecked(
        parent: Arc<GroupTable>,
        images: Vec<usize>,
        provenance: Provenance,
    ) -> Automorphism {
        Automorphism {
            images: images.into_iter().map(|x| x as u32).collect(),
            parent,
            provenance,
        }
    }

    pub fn identity(parent: &Arc<GroupTable>) -> Automorphism {
        Self::from_images_unchecked(
            parent.clone(),
            (0..parent.order()).collect(),
            Provenance::Inner(0),
        )
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        debug_assert!(Arc::ptr_eq(&self.parent, &other.parent));
        Automorphism {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
            parent: self.parent.clone(),
            provenance: Provenance::Composed,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Automorphism {
            images,
            parent: self.parent.clone(),
            provenance: Provenance::Composed,
        }
    }

    /// `self^e` for `e ≥ 0`.
    pub fn power(&self, e: u64) -> Automorphism {
        let mut acc = Automorphism::identity(&self.parent);
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc.provenance = Provenance::Composed;
        acc
    }

    /// Order in `Aut(G)`: the lcm of the cycle lengths of the bijection.
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// `{x : α(x) = x}`; always a subgroup containing 1.
    pub fn fixed_points(&self) -> Vec<usize> {
        let fixed: Vec<usize> = (0..self.images.len())
            .filter(|&x| self.apply(x) == x)
            .collect();
        debug_assert!(fixed.iter().all(|&a| fixed
            .iter()
            .all(|&b| self.apply(self.parent.mul(a, b)) == self.parent.mul(a, b))));
        fixed
    }

    /// Checks `α(xy) = α(x)α(y)` on all pairs.
    pub fn is_multiplicative_exhaustive(&self) -> bool {
        let g = &self.parent;
        let n = g.order();
        (0..n)
            .all(|x| (0..n).all(|y| self.apply(g.mul(x, y)) == g.mul(self.apply(x), self.apply(y))))
    }
}

/// Conjugation `x ↦ g x g⁻¹`.
pub fn inner_automorphism(group: &Arc<GroupTable>, g: usize) -> Automorphism {
    let images = (0..group.order()).map(|x| group.conjugate(g, x)).collect();
    Automorphism::from_images_unchecked(group.clone(), images, Provenance::Inner(g))
}

fn linear_field(group: &GroupTable) -> Result<Arc<crate::field::Field>, AutError> {
    group
        .field()
        .cloned()
        .ok_or_else(|| AutError::NotLinear(group.name().to_string()))
}

/// `M ↦ N·φ^i(M)·N⁻¹` on a linear group, where `φ` is the entrywise Frobenius.
///
/// `N` may lie outside the group (e.g. in `PGL₂(q)` for `PSL₂(q)`); the map
/// is validated as an automorphism of `group`.
pub fn semilinear_automorphism(
    group: &Arc<GroupTable>,
    conjugator: &Mat2,
    i: u32,
) -> Result<Automorphism, AutError> {
    let k = linear_field(group)?;
    if i >= k.degree() {
        return Err(AutError::FieldPowerOutOfRange { i, f: k.degree() });
    }
    let inv = conjugator
        .inverse(&k)
        .ok_or_else(|| AutError::NotAutomorphism("singular conjugator".into()))?;
    let images = (0..group.order())
        .map(|x| {
            let m = group.matrix_of(x).expect("linear group element");
            let y = conjugator.mul(&m.frobenius(i, &k), &k).mul(&inv, &k);
            group
                .index_of_matrix(&y)
                .ok_or_else(|| AutError::NotAutomorphism("image leaves the group".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let provenance = match (i, group.index_of_matrix(conjugator)) {
        (0, Some(g)) => Provenance::Inner(g),
        (0, None) => Provenance::Diagonal,
        (i, Some(0)) => Provenance::Field(i),
        _ => Provenance::Composed,
    };
    Automorphism::new(group.clone(), images, provenance)
}

/// The field automorphism `M ↦ φ^i(M)` of a linear group.
pub fn frobenius_field_aut(group: &Arc<GroupTable>, i: u32) -> Result<Automorphism, AutError> {
    semilinear_automorphism(group, &Mat2::IDENTITY, i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Backtracking over generator images; `|G| ≤ 512`.
    Brute,
    /// `PΓL₂(q)` acting on `PSL₂(q)`.
    Psl2Structured,
    /// Componentwise, for a direct product of coprime-order factors.
    Product,
    /// Picks one of the above from the group's construction.
    Auto,
}

/// `Aut(G)` with its inner part and a transversal of `Inn(G)`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    all: Vec<Automorphism>,
    inner: Vec<usize>,
    coset_reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl AutGroup {
    /// Sorts, deduplicates and decomposes a complete list of automorphisms.
    fn assemble(group: &Arc<GroupTable>, mut all: Vec<Automorphism>) -> AutGroup {
        all.sort_by(|a, b| a.images.cmp(&b.images));
        all.dedup_by(|a, b| a.images == b.images);
        let index: HashMap<&[u32], usize> = all
            .iter()
            .enumerate()
            .map(|(i, a)| (a.images.as_slice(), i))
            .collect();
        let mut inner = Vec::new();
        let mut inner_seen = HashSet::new();
        let mut inner_provenance = Vec::new();
        for g in 0..group.order() {
            let iota = inner_automorphism(group, g);
            let idx = *index
                .get(iota.images.as_slice())
                .expect("inner automorphism missing from Aut(G)");
            if inner_seen.insert(idx) {
                inner.push(idx);
                inner_provenance.push((idx, g));
            }
        }
        inner.sort_unstable();
        let inner_auts: Vec<Automorphism> = inner.iter().map(|&i| all[i].clone()).collect();
        let mut coset_of = vec![usize::MAX; all.len()];
        let mut coset_reps = Vec::new();
        for i in 0..all.len() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = coset_reps.len();
            coset_reps.push(i);
            for iota in &inner_auts {
                let member = all[i].compose(iota);
                let j = index[member.images.as_slice()];
                debug_assert_eq!(coset_of[j], usize::MAX);
                coset_of[j] = c;
            }
        }
        drop(index);
        for (idx, g) in inner_provenance {
            all[idx].provenance = Provenance::Inner(g);
        }
        AutGroup {
            all,
            inner,
            coset_reps,
            coset_of,
        }
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    /// All automorphisms, sorted by image sequence.
    pub fn all(&self) -> &[Automorphism] {
        &self.all
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.all[i]
    }

    /// Indices (into [`AutGroup::all`]) of the inner automorphisms.
    pub fn inner_indices(&self) -> &[usize] {
        &self.inner
    }

    pub fn inner(&self) -> impl Iterator<Item = &Automorphism> + Clone {
        self.inner.iter().map(move |&i| &self.all[i])
    }

    pub fn inner_count(&self) -> usize {
        self.inner.len()
    }

    /// Indices of the lexicographically least member of each coset.
    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    /// Coset number of each automorphism.
    pub fn coset_of(&self, i: usize) -> usize {
        self.coset_of[i]
    }

    /// Indices of every member of coset `c`.
    pub fn coset(&self, c: usize) -> Vec<usize> {
        (0..self.all.len())
            .filter(|&i| self.coset_of[i] == c)
            .collect()
    }

    pub fn index_of(&self, alpha: &Automorphism) -> Option<usize> {
        self.all
            .binary_search_by(|a| a.images.as_slice().cmp(alpha.images.as_slice()))
            .ok()
    }
}

/// Computes `Aut(G)` with the requested strategy.
pub fn compute_aut(group: &Arc<GroupTable>, strategy: Strategy) -> Result<AutGroup, AutError> {
    let all = match strategy {
        Strategy::Brute => brute_force(group)?,
        Strategy::Psl2Structured => psl2_structured(group)?,
        Strategy::Product => product(group)?,
        Strategy::Auto => return compute_aut(group, auto_strategy(group)?),
    };
    Ok(AutGroup::assemble(group, all))
}

fn coprime_factors(group: &GroupTable) -> Option<(&Arc<GroupTable>, &Arc<GroupTable>)> {
    match group.construction() {
        Construction::Product(l, r) if gcd(l.order(), r.order()) == 1 => Some((l, r)),
        _ => None,
    }
}

/// The strategy [`Strategy::Auto`] resolves to.
pub fn auto_strategy(group: &GroupTable) -> Result<Strategy, AutError> {
    if matches!(group.construction(), Construction::Atom(Atom::Psl2(_))) {
        Ok(Strategy::Psl2Structured)
    } else if coprime_factors(group).is_some() {
        Ok(Strategy::Product)
    } else if group.order() <= BRUTE_FORCE_LIMIT {
        Ok(Strategy::Brute)
    } else {
        Err(AutError::Strategy(format!(
            "no automorphism strategy for {} (order {})",
            group.name(),
            group.order()
        )))
    }
}

fn psl2_structured(group: &Arc<GroupTable>) -> Result<Vec<Automorphism>, AutError> {
    let Construction::Atom(Atom::Psl2(q)) = group.construction() else {
        return Err(AutError::Strategy(format!(
            "{} is not PSL2(q)",
            group.name()
        )));
    };
    let k = linear_field(group)?;
    let els: Vec<_> = k.elements().collect();
    let mut pgl = Vec::new();
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    let m = Mat2::new(a, b, c, d);
                    if ProjectiveMatrix::new(m, &k).map(|p| *p.matrix()) == Some(m) {
                        pgl.push(m);
                    }
                }
            }
        }
    }
    let q = *q as u64;
    debug_assert_eq!(pgl.len() as u64, q * (q * q - 1));
    let pairs: Vec<(Mat2, u32)> = pgl
        .iter()
        .flat_map(|m| (0..k.degree()).map(move |i| (*m, i)))
        .collect();
    let auts = pairs
        .par_iter()
        .map(|(m, i)| semilinear_automorphism(group, m, *i))
        .collect::<Result<Vec<_>, _>>()?;
    let distinct: HashSet<&[u32]> = auts.iter().map(|a| a.images.as_slice()).collect();
    if distinct.len() != auts.len() {
        return Err(AutError::Strategy("PΓL2 does not act faithfully".into()));
    }
    Ok(auts)
}

fn product(group: &Arc<GroupTable>) -> Result<Vec<Automorphism>, AutError> {
    let (l, r) = coprime_factors(group).ok_or_else(|| {
        AutError::Strategy(format!(
            "{} is not a product of coprime-order factors",
            group.name()
        ))
    })?;
    let al = compute_aut(l, Strategy::Auto)?;
    let ar = compute_aut(r, Strategy::Auto)?;
    let m = r.order();
    let mut out = Vec::with_capacity(al.len() * ar.len());
    for a in al.all() {
        for b in ar.all() {
            let images = (0..group.order())
                .map(|x| a.apply(x / m) * m + b.apply(x % m))
                .collect();
            out.push(Automorphism::from_images_unchecked(
                group.clone(),
                images,
                Provenance::Composed,
            ));
        }
    }
    Ok(out)
}

/// Backtracking over images of a greedy generating set.
///
/// Candidate images of a generator share its element order and class size.
/// After each assignment the partial map is extended over the subgroup the
/// assigned generators span, by walking Cayley-graph edges; any conflict or
/// repeated image prunes the branch. The first level is split across threads.
fn brute_force(group: &Arc<GroupTable>) -> Result<Vec<Automorphism>, AutError> {
    let n = group.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(AutError::Strategy(format!(
            "brute force needs order <= {BRUTE_FORCE_LIMIT}, got {n}"
        )));
    }
    let gens = group.generating_set().to_vec();
    if gens.is_empty() {
        return Ok(vec![Automorphism::identity(group)]);
    }
    let orders = group.element_orders();
    let sizes = group.class_sizes();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..n)
                .filter(|&x| orders[x] == orders[g] && sizes[x] == sizes[g])
                .collect()
        })
        .collect();
    let results: Vec<Vec<Vec<u32>>> = candidates[0]
        .par_iter()
        .map(|&first| {
            let mut state = Extension::new(group, &gens);
            let mut found = Vec::new();
            if state.push(0, first) {
                state.descend(1, &candidates, &mut found);
            }
            found
        })
        .collect();
    Ok(results
        .into_iter()
        .flatten()
        .map(|images| Automorphism {
            images,
            parent: group.clone(),
            provenance: Provenance::Raw,
        })
        .collect())
}

/// A partial homomorphism defined on the subgroup spanned by the generators assigned so far.
struct Extension<'a> {
    group: &'a GroupTable,
    gens: &'a [usize],
    images: Vec<usize>,
    map: Vec<u32>,
    used: Vec<bool>,
    /// Elements of the current subgroup, in discovery order.
    members: Vec<usize>,
    /// `members.len()` before each level was pushed.
    marks: Vec<usize>,
}

const UNSET: u32 = u32::MAX;

impl<'a> Extension<'a> {
    fn new(group: &'a GroupTable, gens: &'a [usize]) -> Self {
        let n = group.order();
        let mut map = vec![UNSET; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        Extension {
            group,
            gens,
            images: Vec::with_capacity(gens.len()),
            map,
            used,
            members: vec![0],
            marks: Vec::new(),
        }
    }

    /// Assigns `gens[level] ↦ image`, extends the map, and reports consistency.
    /// On failure the state is already rolled back.
    fn push(&mut self, level: usize, image: usize) -> bool {
        debug_assert_eq!(self.images.len(), level);
        self.images.push(image);
        let old = self.members.len();
        self.marks.push(old);
        let g = self.group;
        let mut i = 0;
        while i < self.members.len() {
            let x = self.members[i];
            // old members only need the new generator's edges
            let first = if i < old { level } else { 0 };
            for j in first..=level {
                let y = g.mul(x, self.gens[j]);
                let fy = g.mul(self.map[x] as usize, self.images[j]);
                match self.map[y] {
                    UNSET => {
                        if self.used[fy] {
                            self.pop();
                            return false;
                        }
                        self.map[y] = fy as u32;
                        self.used[fy] = true;
                        self.members.push(y);
                    }
                    v if v as usize != fy => {
                        self.pop();
                        return false;
                    }
                    _ => {}
                }
            }
            i += 1;
        }
        true
    }

    fn pop(&mut self) {
        let old = self.marks.pop().expect("pop without push");
        for &x in &self.members[old..] {
            self.used[self.map[x] as usize] = false;
            self.map[x] = UNSET;
        }
        self.members.truncate(old);
        self.images.pop();
    }

    fn descend(&mut self, level: usize, candidates: &[Vec<usize>], found: &mut Vec<Vec<u32>>) {
        if level == self.gens.len() {
            debug_assert_eq!(self.members.len(), self.group.order());
            found.push(self.map.clone());
            return;
        }
        for &c in &candidates[level] {
            if self.push(level, c) {
                self.descend(level + 1, candidates, found);
                self.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_atomic, direct_product, Atom, DEFAULT_ORDER_CAP};

    fn build(atom: Atom) -> Arc<GroupTable> {
        build_atomic(atom, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn cyclic_and_small() {
        assert_eq!(
            compute_aut(&build(Atom::Cyclic(5)), Strategy::Brute)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            compute_aut(&build(Atom::Cyclic(1)), Strategy::Brute)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            compute_aut(&build(Atom::Symmetric(3)), Strategy::Brute)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            compute_aut(&build(Atom::Quaternion8), Strategy::Brute)
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            compute_aut(&build(Atom::Dihedral(4)), Strategy::Brute)
                .unwrap()
                .len(),
            8
        );
        let v4 = direct_product(&build(Atom::Cyclic(2)), &build(Atom::Cyclic(2)), 100).unwrap();
        assert_eq!(compute_aut(&v4, Strategy::Brute).unwrap().len(), 6);
    }

    #[test]
    fn a5_aut_is_s5() {
        let aut = compute_aut(&build(Atom::Alternating(5)), Strategy::Brute).unwrap();
        assert_eq!(aut.len(), 120);
        assert_eq!(aut.inner_count(), 60);
        assert_eq!(aut.coset_reps().len(), 2);
        for a in aut.all() {
            assert!(a.is_multiplicative_exhaustive());
        }
    }

    #[test]
    fn psl2_8_structured() {
        let g = build(Atom::Psl2(8));
        let aut = compute_aut(&g, Strategy::Psl2Structured).unwrap();
        assert_eq!(aut.len(), 1512);
        assert_eq!(aut.inner_count(), 504);
        assert_eq!(aut.coset_reps().len(), 3);
    }

    #[test]
    fn inner_automorphisms() {
        let s3 = build(Atom::Symmetric(3));
        assert!(inner_automorphism(&s3, 0).is_identity());
        let t = s3
            .index_of_perm(&crate::group::Permutation::from_cycles(3, &[&[0, 1]]).unwrap())
            .unwrap();
        let c = s3
            .index_of_perm(&crate::group::Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap())
            .unwrap();
        let img = inner_automorphism(&s3, t).apply(c);
        assert_eq!(s3.label(img), "(1 3 2)");
        let c6 = build(Atom::Cyclic(6));
        for g in 0..6 {
            assert!(inner_automorphism(&c6, g).is_identity());
        }
    }

    #[test]
    fn frobenius_fixed_points() {
        for q in [4, 8, 16] {
            let g = build(Atom::Psl2(q));
            let phi = frobenius_field_aut(&g, 1).unwrap();
            assert_eq!(phi.fixed_points().len(), 6, "q = {q}");
        }
        let g = build(Atom::Psl2(4));
        assert!(frobenius_field_aut(&g, 0).unwrap().is_identity());
        assert_eq!(frobenius_field_aut(&g, 1).unwrap().order(), 2);
        assert_eq!(
            frobenius_field_aut(&g, 2).unwrap_err(),
            AutError::FieldPowerOutOfRange { i: 2, f: 2 }
        );
        assert!(frobenius_field_aut(&build(Atom::Cyclic(3)), 0).is_err());
    }

    #[test]
    fn coset_decomposition() {
        let aut = compute_aut(&build(Atom::Symmetric(4)), Strategy::Brute).unwrap();
        assert_eq!(aut.len(), 24);
        let inner: Vec<_> = aut.inner().cloned().collect();
        for (c, &rep) in aut.coset_reps().iter().enumerate() {
            let members: HashSet<Vec<u32>> = inner
                .iter()
                .map(|i| aut.get(rep).compose(i).images().to_vec())
                .collect();
            assert_eq!(members.len(), inner.len());
            let coset = aut.coset(c);
            assert_eq!(coset[0], rep);
            assert_eq!(coset.len(), inner.len());
        }
    }

    #[test]
    fn product_strategy_requires_coprime() {
        let a5 = build(Atom::Alternating(5));
        let c7 = build(Atom::Cyclic(7));
        let g = direct_product(&a5, &c7, DEFAULT_ORDER_CAP).unwrap();
        let aut = compute_aut(&g, Strategy::Product).unwrap();
        assert_eq!(aut.len(), 120 * 6);
        let c2 = build(Atom::Cyclic(2));
        let h = direct_product(&a5, &c2, DEFAULT_ORDER_CAP).unwrap();
        assert!(matches!(
            compute_aut(&h, Strategy::Product),
            Err(AutError::Strategy(_))
        ));
        assert!(matches!(
            compute_aut(&a5, Strategy::Psl2Structured),
            Err(AutError::Strategy(_))
        ));
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let c5 = build(Atom::Cyclic(5));
        assert!(Automorphism::new(c5.clone(), vec![0, 2, 4, 1, 3], Provenance::Raw).is_ok());
        assert!(Automorphism::new(c5.clone(), vec![0, 2, 1, 3, 4], Provenance::Raw).is_err());
        assert!(Automorphism::new(c5, vec![1, 0, 2, 3, 4], Provenance::Raw).is_err());
    }
}
