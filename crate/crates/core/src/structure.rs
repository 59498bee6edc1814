//! Normal structure: derived series, the lattice of normal subgroups,
//! solvable radical, socle, quotients, and moving automorphisms onto
//! invariant subgroups and quotients.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::aut::{AutError, AutGroup, Automorphism, Provenance};
use crate::group::{Atom, Construction, ElementRep, GroupTable};

/// Largest group whose normal-subgroup lattice is computed.
pub const LATTICE_LIMIT: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("normal subgroup lattice of a group of order {order} exceeds the cap {cap}")]
    LatticeTooLarge { order: usize, cap: usize },
    #[error("subgroup of order {0} is not normal")]
    NotNormal(usize),
    #[error("subgroup of order {0} is not invariant under the automorphism")]
    NotInvariant(usize),
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("automorphism belongs to a different group")]
    ForeignAutomorphism,
    #[error(transparent)]
    Aut(#[from] AutError),
}

/// A subgroup of a parent group, as a sorted list of member indices.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<GroupTable>,
    members: Vec<usize>,
    normal: bool,
    characteristic: Option<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Validates closure and computes the normal flag.
    pub fn new(
        parent: &Arc<GroupTable>,
        mut members: Vec<usize>,
    ) -> Result<Subgroup, StructureError> {
        members.sort_unstable();
        members.dedup();
        let n = parent.order();
        if members.first() != Some(&0) || members.iter().any(|&x| x >= n) {
            return Err(StructureError::NotSubgroup(
                "identity missing or index out of range".into(),
            ));
        }
        let mask = mask_of(n, &members);
        for &a in &members {
            if !mask[parent.inv(a)] {
                return Err(StructureError::NotSubgroup(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(StructureError::NotSubgroup(format!(
                        "not closed at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self::trusted(parent, members))
    }

    /// `members` must be a sorted subgroup.
    fn trusted(parent: &Arc<GroupTable>, members: Vec<usize>) -> Subgroup {
        let normal = is_normal(parent, &members);
        Subgroup {
            parent: parent.clone(),
            members,
            normal,
            characteristic: None,
        }
    }

    pub fn whole(parent: &Arc<GroupTable>) -> Subgroup {
        Self::trusted(parent, (0..parent.order()).collect())
    }

    pub fn trivial(parent: &Arc<GroupTable>) -> Subgroup {
        Self::trusted(parent, vec![0])
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Set by [`Subgroup::mark_characteristic`].
    pub fn characteristic(&self) -> Option<bool> {
        self.characteristic
    }

    pub fn is_invariant_under(&self, alpha: &Automorphism) -> bool {
        self.members.iter().all(|&x| self.contains(alpha.apply(x)))
    }

    /// Checks invariance under every member of `aut`.
    pub fn mark_characteristic(&mut self, aut: &AutGroup) -> bool {
        let c = aut.all().iter().all(|a| self.is_invariant_under(a));
        self.characteristic = Some(c);
        c
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// The subgroup as a group of its own, elements in the same order as
    /// [`Subgroup::members`].
    pub fn to_group(&self) -> Arc<GroupTable> {
        let g = &self.parent;
        let m = self.members.len();
        let pos = positions(g.order(), &self.members);
        let mut table = Vec::with_capacity(m * m);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[g.mul(a, b)] as u16);
            }
        }
        let reps = self
            .members
            .iter()
            .map(|&x| ElementRep::Member(x))
            .collect();
        let labels = self
            .members
            .iter()
            .map(|&x| g.label(x).to_string())
            .collect();
        Arc::new(GroupTable::from_table(
            format!("{}[{}]", g.name(), m),
            table,
            reps,
            labels,
            Construction::Subgroup {
                parent: g.clone(),
                members: self.members.clone(),
            },
        ))
    }
}

fn mask_of(n: usize, members: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &x in members {
        mask[x] = true;
    }
    mask
}

fn positions(n: usize, members: &[usize]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in members.iter().enumerate() {
        pos[x] = i;
    }
    pos
}

fn is_normal(g: &GroupTable, members: &[usize]) -> bool {
    let mask = mask_of(g.order(), members);
    g.generating_set()
        .iter()
        .all(|&s| members.iter().all(|&x| mask[g.conjugate(s, x)]))
}

/// Drops elements that do not enlarge the subgroup generated so far.
fn reduce_generators(g: &GroupTable, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    for &x in elements {
        if !mask[x] {
            gens.push(x);
            for y in g.generated_subgroup(&gens) {
                mask[y] = true;
            }
        }
    }
    gens
}

/// The smallest subgroup containing `seeds` and normalized by `conj_by`.
fn normal_closure(g: &GroupTable, seeds: &[usize], conj_by: &[usize]) -> Vec<usize> {
    let mut gens = reduce_generators(g, seeds);
    loop {
        let members = g.generated_subgroup(&gens);
        let mask = mask_of(g.order(), &members);
        let missing: Vec<usize> = gens
            .iter()
            .flat_map(|&x| conj_by.iter().map(move |&c| (c, x)))
            .map(|(c, x)| g.conjugate(c, x))
            .filter(|&y| !mask[y])
            .collect();
        if missing.is_empty() {
            return members;
        }
        gens.extend(missing);
        gens = reduce_generators(g, &gens);
    }
}

/// `[H, H]` for a subgroup `H` given by its members.
fn commutator_subgroup(g: &GroupTable, members: &[usize]) -> Vec<usize> {
    let gens = reduce_generators(g, members);
    let seeds: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    normal_closure(g, &seeds, &gens)
}

fn derived_chain(g: &GroupTable, members: Vec<usize>) -> Vec<Vec<usize>> {
    let mut chain = vec![members];
    loop {
        let last = chain.last().unwrap();
        let next = commutator_subgroup(g, last);
        let stable = next.len() == last.len();
        if !stable || next.len() > 1 {
            chain.push(next);
        }
        if stable || chain.last().unwrap().len() == 1 {
            return chain;
        }
    }
}

/// `G ⊵ G′ ⊵ G″ ⊵ …`, ending at `1` or repeating the first perfect term once.
pub fn derived_series(g: &Arc<GroupTable>) -> Vec<Subgroup> {
    derived_chain(g, (0..g.order()).collect())
        .into_iter()
        .map(|m| Subgroup::trusted(g, m))
        .collect()
}

pub fn is_solvable(g: &Arc<GroupTable>) -> bool {
    subgroup_is_solvable(g, &(0..g.order()).collect::<Vec<_>>())
}

fn subgroup_is_solvable(g: &GroupTable, members: &[usize]) -> bool {
    derived_chain(g, members.to_vec()).last().unwrap().len() == 1
}

impl Subgroup {
    pub fn is_solvable(&self) -> bool {
        subgroup_is_solvable(&self.parent, &self.members)
    }
}

/// Every normal subgroup, sorted by order and then by members.
///
/// Each normal subgroup is a join of normal closures of conjugacy classes,
/// so the join-closure of the class closures is the whole lattice.
pub fn normal_subgroups(g: &Arc<GroupTable>) -> Result<Vec<Subgroup>, StructureError> {
    let n = g.order();
    if n > LATTICE_LIMIT {
        return Err(StructureError::LatticeTooLarge {
            order: n,
            cap: LATTICE_LIMIT,
        });
    }
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(vec![0], 0);
    let mut add =
        |members: Vec<usize>, gens: Vec<usize>, found: &mut Vec<(Vec<usize>, Vec<usize>)>| {
            if !index.contains_key(&members) {
                index.insert(members.clone(), found.len());
                found.push((members, gens));
            }
        };
    for class in g.conjugacy_classes().iter().skip(1) {
        let gens = reduce_generators(g, class);
        let members = g.generated_subgroup(&gens);
        add(members, gens, &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let mut gens = found[i].1.clone();
            gens.extend_from_slice(&found[j].1);
            let gens = reduce_generators(g, &gens);
            let members = g.generated_subgroup(&gens);
            add(members, gens, &mut found);
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|(members, _)| {
            let s = Subgroup::trusted(g, members);
            debug_assert!(s.normal);
            s
        })
        .collect();
    out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    Ok(out)
}

fn join_all(g: &Arc<GroupTable>, subs: &[&Subgroup]) -> Subgroup {
    let elements: Vec<usize> = subs
        .iter()
        .flat_map(|s| s.members.iter().copied())
        .collect();
    let gens = reduce_generators(g, &elements);
    Subgroup::trusted(g, g.generated_subgroup(&gens))
}

/// The largest solvable normal subgroup.
pub fn solvable_radical(g: &Arc<GroupTable>) -> Result<Subgroup, StructureError> {
    let lattice = normal_subgroups(g)?;
    Ok(radical_from_lattice(g, &lattice))
}

fn radical_from_lattice(g: &Arc<GroupTable>, lattice: &[Subgroup]) -> Subgroup {
    let solvable: Vec<&Subgroup> = lattice.iter().filter(|s| s.is_solvable()).collect();
    let radical = join_all(g, &solvable);
    assert!(
        radical.is_solvable(),
        "join of solvable normal subgroups is solvable"
    );
    assert!(solvable.iter().all(|s| s.is_subset_of(&radical)));
    radical
}

/// Minimal nontrivial normal subgroups.
pub fn minimal_normal_subgroups(g: &Arc<GroupTable>) -> Result<Vec<Subgroup>, StructureError> {
    let lattice = normal_subgroups(g)?;
    let nontrivial: Vec<&Subgroup> = lattice.iter().filter(|s| !s.is_trivial()).collect();
    Ok(nontrivial
        .iter()
        .filter(|s| {
            !nontrivial
                .iter()
                .any(|t| t.order() < s.order() && t.is_subset_of(s))
        })
        .map(|s| (*s).clone())
        .collect())
}

/// The join of all minimal nontrivial normal subgroups.
pub fn socle(g: &Arc<GroupTable>) -> Result<Subgroup, StructureError> {
    let minimal = minimal_normal_subgroups(g)?;
    let refs: Vec<&Subgroup> = minimal.iter().collect();
    Ok(join_all(g, &refs))
}

/// `G/N` with the projection `G → G/N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Arc<GroupTable>,
    /// Coset index of every element of the parent.
    pub projection: Vec<usize>,
    /// Least member of every coset.
    pub lifts: Vec<usize>,
}

/// Cosets are numbered in order of their least members.
pub fn quotient(g: &Arc<GroupTable>, normal: &Subgroup) -> Result<Quotient, StructureError> {
    if !normal.is_normal() {
        return Err(StructureError::NotNormal(normal.order()));
    }
    let n = g.order();
    let mut projection = vec![usize::MAX; n];
    let mut lifts = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        for &h in normal.members() {
            projection[g.mul(x, h)] = lifts.len();
        }
        lifts.push(x);
    }
    let m = lifts.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &lifts {
        for &b in &lifts {
            table.push(projection[g.mul(a, b)] as u16);
        }
    }
    let reps = lifts.iter().map(|&x| ElementRep::Coset(x)).collect();
    let labels = lifts.iter().map(|&x| format!("{}N", g.label(x))).collect();
    let name = if g.name().contains(' ') {
        format!("({}) / [{}]", g.name(), normal.order())
    } else {
        format!("{} / [{}]", g.name(), normal.order())
    };
    let group = Arc::new(GroupTable::from_table(
        name,
        table,
        reps,
        labels,
        Construction::Quotient {
            parent: g.clone(),
            normal: normal.members().to_vec(),
        },
    ));
    Ok(Quotient {
        group,
        projection,
        lifts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransportMode {
    /// The automorphism induced on `G/N`.
    Induce,
    /// The restriction to `N`.
    Restrict,
}

/// Moves automorphisms of `G` onto `G/N` or onto `N`.
///
/// Built once per `(G, N, mode)`; [`Transport::apply`] is then cheap.
#[derive(Debug, Clone)]
pub struct Transport {
    mode: TransportMode,
    subgroup: Subgroup,
    target: Arc<GroupTable>,
    /// Parent index → target index.
    forward: Vec<usize>,
    /// Target index → a parent preimage.
    lifts: Vec<usize>,
}

impl Transport {
    pub fn new(subgroup: &Subgroup, mode: TransportMode) -> Result<Transport, StructureError> {
        let g = subgroup.parent();
        let (target, forward, lifts) = match mode {
            TransportMode::Induce => {
                let q = quotient(g, subgroup)?;
                (q.group, q.projection, q.lifts)
            }
            TransportMode::Restrict => (
                subgroup.to_group(),
                positions(g.order(), subgroup.members()),
                subgroup.members().to_vec(),
            ),
        };
        Ok(Transport {
            mode,
            subgroup: subgroup.clone(),
            target,
            forward,
            lifts,
        })
    }

    pub fn mode(&self) -> TransportMode {
        self.mode
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    /// The image of `x` in the target (`None` for restriction to a subgroup not containing `x`).
    pub fn map_element(&self, x: usize) -> Option<usize> {
        Some(self.forward[x]).filter(|&y| y != usize::MAX)
    }

    pub fn apply(&self, alpha: &Automorphism) -> Result<Automorphism, StructureError> {
        if !Arc::ptr_eq(alpha.parent(), self.subgroup.parent()) {
            return Err(StructureError::ForeignAutomorphism);
        }
        if !self.subgroup.is_invariant_under(alpha) {
            return Err(StructureError::NotInvariant(self.subgroup.order()));
        }
        let images = self
            .lifts
            .iter()
            .map(|&x| self.forward[alpha.apply(x)])
            .collect();
        let provenance = match alpha.provenance() {
            Provenance::Inner(g) => match self.map_element(g) {
                Some(h) => Provenance::Inner(h),
                None => Provenance::Raw,
            },
            _ => Provenance::Raw,
        };
        Ok(Automorphism::new(self.target.clone(), images, provenance)?)
    }
}

pub fn transport_aut(
    alpha: &Automorphism,
    subgroup: &Subgroup,
    mode: TransportMode,
) -> Result<Automorphism, StructureError> {
    Transport::new(subgroup, mode)?.apply(alpha)
}

/// How a nonsolvable group reduces onto the socle of `G/Rad(G)`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub radical: Subgroup,
    pub to_radical: Transport,
    pub to_quotient: Transport,
    /// Socle of `G/Rad(G)`, as a subgroup of the quotient.
    pub socle: Subgroup,
    pub to_socle: Transport,
    pub simple_power: Option<SimplePower>,
}

/// A socle recognized as `Sⁿ` for a nonabelian simple `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplePower {
    /// Name of `S` when it can be read off the construction.
    pub factor: Option<String>,
    pub factor_order: usize,
    pub exponent: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionSummary {
    pub group: String,
    pub order: usize,
    pub solvable: bool,
    pub radical_order: usize,
    pub quotient_order: usize,
    pub socle_order: usize,
    pub simple_power: Option<SimplePower>,
}

/// The `k`-completeness of an automorphism at each stage of a reduction.
#[derive(Debug, Clone, Serialize)]
pub struct ReducedCompleteness {
    pub on_group: bool,
    pub on_radical: bool,
    pub on_quotient: bool,
    pub on_socle: bool,
}

pub fn reduce(g: &Arc<GroupTable>) -> Result<Reduction, StructureError> {
    let lattice = normal_subgroups(g)?;
    let radical = radical_from_lattice(g, &lattice);
    let to_radical = Transport::new(&radical, TransportMode::Restrict)?;
    let to_quotient = Transport::new(&radical, TransportMode::Induce)?;
    let q = to_quotient.target().clone();
    let socle = socle(&q)?;
    let to_socle = Transport::new(&socle, TransportMode::Restrict)?;
    let simple_power = recognize_simple_power(g, &to_socle);
    Ok(Reduction {
        radical,
        to_radical,
        to_quotient,
        socle,
        to_socle,
        simple_power,
    })
}

impl Reduction {
    pub fn summary(&self) -> ReductionSummary {
        let g = self.radical.parent();
        ReductionSummary {
            group: g.name().to_string(),
            order: g.order(),
            solvable: self.radical.is_whole(),
            radical_order: self.radical.order(),
            quotient_order: self.to_quotient.target().order(),
            socle_order: self.socle.order(),
            simple_power: self.simple_power.clone(),
        }
    }

    /// Moves `α` to `Rad(G)`, `G/Rad(G)` and its socle and tests `k`-completeness at each stage.
    pub fn completeness(
        &self,
        alpha: &Automorphism,
        k: i64,
    ) -> Result<ReducedCompleteness, StructureError> {
        use crate::completeness::is_k_complete;
        let on_quotient = self.to_quotient.apply(alpha)?;
        let on_socle = self.to_socle.apply(&on_quotient)?;
        Ok(ReducedCompleteness {
            on_group: is_k_complete(alpha, k).verdict(),
            on_radical: is_k_complete(&self.to_radical.apply(alpha)?, k).verdict(),
            on_quotient: is_k_complete(&on_quotient, k).verdict(),
            on_socle: is_k_complete(&on_socle, k).verdict(),
        })
    }
}

fn is_simple_atom(atom: &Atom) -> bool {
    match atom {
        Atom::Alternating(m) => *m >= 5,
        Atom::Psl2(q) => *q >= 4,
        Atom::Cyclic(_) | Atom::Dihedral(_) | Atom::Quaternion8 => false,
        Atom::Symmetric(_) | Atom::Sl2(_) | Atom::Pgl2(_) => false,
    }
}

fn atomic_factors<'a>(g: &'a GroupTable, out: &mut Vec<&'a GroupTable>) {
    match g.construction() {
        Construction::Product(l, r) => {
            atomic_factors(l, out);
            atomic_factors(r, out);
        }
        _ => out.push(g),
    }
}

/// Recognizes the socle of `G/Rad(G)` as `Sⁿ`.
///
/// A socle without proper nontrivial normal subgroups is simple (`n = 1`).
/// Otherwise recognition succeeds only when `G` is literally a direct product
/// whose nonabelian simple atomic factors are all equal and account for the
/// socle's order.
fn recognize_simple_power(g: &GroupTable, to_socle: &Transport) -> Option<SimplePower> {
    let socle = to_socle.target();
    if socle.order() == 1 || socle.is_abelian() {
        return None;
    }
    let mut factors = Vec::new();
    atomic_factors(g, &mut factors);
    let simple: Vec<&GroupTable> = factors
        .into_iter()
        .filter(|f| matches!(f.construction(), Construction::Atom(a) if is_simple_atom(a)))
        .collect();
    let literal = simple
        .first()
        .filter(|first| simple.iter().all(|f| f.name() == first.name()))
        .filter(|first| {
            (first.order() as u64).checked_pow(simple.len() as u32) == Some(socle.order() as u64)
        });
    if socle.order() <= LATTICE_LIMIT {
        if let Ok(lattice) = normal_subgroups(socle) {
            if lattice.len() == 2 {
                return Some(SimplePower {
                    factor: literal.map(|f| f.name().to_string()),
                    factor_order: socle.order(),
                    exponent: 1,
                });
            }
        }
    }
    literal.map(|f| SimplePower {
        factor: Some(f.name().to_string()),
        factor_order: f.order(),
        exponent: simple.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{compute_aut, Strategy};
    use crate::completeness::is_k_complete;
    use crate::group::{build_atomic, direct_product, Atom, DEFAULT_ORDER_CAP};

    fn build(atom: Atom) -> Arc<GroupTable> {
        build_atomic(atom, DEFAULT_ORDER_CAP).unwrap()
    }

    fn orders(subs: &[Subgroup]) -> Vec<usize> {
        subs.iter().map(Subgroup::order).collect()
    }

    #[test]
    fn derived_series_examples() {
        assert_eq!(
            orders(&derived_series(&build(Atom::Symmetric(4)))),
            vec![24, 12, 4, 1]
        );
        assert_eq!(
            orders(&derived_series(&build(Atom::Alternating(5)))),
            vec![60, 60]
        );
        assert_eq!(orders(&derived_series(&build(Atom::Cyclic(6)))), vec![6, 1]);
        assert_eq!(orders(&derived_series(&build(Atom::Cyclic(1)))), vec![1]);
        assert!(is_solvable(&build(Atom::Symmetric(4))));
        assert!(!is_solvable(&build(Atom::Alternating(5))));
        let g =
            direct_product(&build(Atom::Alternating(5)), &build(Atom::Cyclic(2)), 1000).unwrap();
        assert!(!is_solvable(&g));
        assert!(!is_solvable(&build(Atom::Sl2(5))));
    }

    #[test]
    fn lattices() {
        assert_eq!(
            orders(&normal_subgroups(&build(Atom::Alternating(5))).unwrap()),
            vec![1, 60]
        );
        assert_eq!(
            orders(&normal_subgroups(&build(Atom::Symmetric(3))).unwrap()),
            vec![1, 3, 6]
        );
        assert_eq!(
            orders(&normal_subgroups(&build(Atom::Cyclic(6))).unwrap()),
            vec![1, 2, 3, 6]
        );
        assert_eq!(
            orders(&normal_subgroups(&build(Atom::Symmetric(4))).unwrap()),
            vec![1, 4, 12, 24]
        );
        assert_eq!(
            normal_subgroups(&build(Atom::Quaternion8)).unwrap().len(),
            6
        );
        assert!(matches!(
            normal_subgroups(&build(Atom::Psl2(11)).clone()).map(|v| v.len()),
            Ok(2)
        ));
        let big = build(Atom::Psl2(13));
        assert_eq!(
            normal_subgroups(&big).unwrap_err(),
            StructureError::LatticeTooLarge {
                order: 1092,
                cap: LATTICE_LIMIT
            }
        );
    }

    #[test]
    fn radicals_and_socles() {
        let a5 = build(Atom::Alternating(5));
        let g = direct_product(&a5, &build(Atom::Cyclic(6)), DEFAULT_ORDER_CAP).unwrap();
        let rad = solvable_radical(&g).unwrap();
        assert_eq!(rad.order(), 6);
        assert!(rad.members().iter().all(|&x| x < 6));
        assert!(solvable_radical(&build(Atom::Symmetric(4)))
            .unwrap()
            .is_whole());
        assert!(solvable_radical(&a5).unwrap().is_trivial());
        assert!(socle(&a5).unwrap().is_whole());
        assert!(socle(&build(Atom::Cyclic(6))).unwrap().is_whole());
        let h = direct_product(&a5, &build(Atom::Cyclic(2)), DEFAULT_ORDER_CAP).unwrap();
        assert!(socle(&h).unwrap().is_whole());
        assert_eq!(socle(&build(Atom::Symmetric(4))).unwrap().order(), 4);
    }

    #[test]
    fn quotients() {
        let s3 = build(Atom::Symmetric(3));
        let a3 = normal_subgroups(&s3).unwrap()[1].clone();
        let q = quotient(&s3, &a3).unwrap();
        assert_eq!(q.group.order(), 2);
        let triv = quotient(&s3, &Subgroup::trivial(&s3)).unwrap();
        assert_eq!(triv.projection, (0..6).collect::<Vec<_>>());
        let a5 = build(Atom::Alternating(5));
        let g = direct_product(&a5, &build(Atom::Cyclic(2)), DEFAULT_ORDER_CAP).unwrap();
        let c2 = Subgroup::new(&g, vec![0, 1]).unwrap();
        let q = quotient(&g, &c2).unwrap();
        assert_eq!(q.group.order(), 60);
        assert!(q.group.verify_axioms(0).is_ok());
        for x in 0..120 {
            for y in 0..120 {
                assert_eq!(
                    q.projection[g.mul(x, y)],
                    q.group.mul(q.projection[x], q.projection[y])
                );
            }
        }
        assert_eq!(normal_subgroups(&q.group).unwrap().len(), 2);
        let t = s3
            .index_of_perm(&crate::group::Permutation::from_cycles(3, &[&[0, 1]]).unwrap())
            .unwrap();
        let not_normal = Subgroup::new(&s3, vec![0, t]).unwrap();
        assert_eq!(
            quotient(&s3, &not_normal).unwrap_err(),
            StructureError::NotNormal(2)
        );
    }

    #[test]
    fn transport_examples() {
        let c6 = build(Atom::Cyclic(6));
        let c3 = Subgroup::new(&c6, vec![0, 2, 4]).unwrap();
        let id = Automorphism::identity(&c6);
        assert!(transport_aut(&id, &c3, TransportMode::Restrict)
            .unwrap()
            .is_identity());
        let whole = transport_aut(&id, &Subgroup::whole(&c6), TransportMode::Induce).unwrap();
        assert_eq!(whole.parent().order(), 1);
        let inv = Automorphism::new(
            c6.clone(),
            (0..6).map(|x| c6.inv(x)).collect(),
            Provenance::Raw,
        )
        .unwrap();
        let r = transport_aut(&inv, &c3, TransportMode::Restrict).unwrap();
        let rg = r.parent();
        assert!((0..3).all(|x| r.apply(x) == rg.inv(x)));
        assert!(!is_k_complete(&inv, 1).verdict());
        assert!(!is_k_complete(&inv, -1).verdict());
        assert!(is_k_complete(&r, -1).verdict());
    }

    #[test]
    fn non_invariant_is_rejected() {
        let v4 = direct_product(&build(Atom::Cyclic(2)), &build(Atom::Cyclic(2)), 100).unwrap();
        let aut = compute_aut(&v4, Strategy::Brute).unwrap();
        let n = Subgroup::new(&v4, vec![0, 1]).unwrap();
        let moved = aut.all().iter().find(|a| !n.is_invariant_under(a)).unwrap();
        assert_eq!(
            transport_aut(moved, &n, TransportMode::Induce).unwrap_err(),
            StructureError::NotInvariant(2)
        );
        let mut n = n;
        assert!(!n.mark_characteristic(&aut));
        assert_eq!(n.characteristic(), Some(false));
    }

    #[test]
    fn reductions() {
        let g = direct_product(
            &build(Atom::Alternating(5)),
            &build(Atom::Cyclic(2)),
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        let r = reduce(&g).unwrap();
        let s = r.summary();
        assert_eq!(
            (s.radical_order, s.quotient_order, s.socle_order),
            (2, 60, 60)
        );
        assert_eq!(
            s.simple_power,
            Some(SimplePower {
                factor: Some("A5".into()),
                factor_order: 60,
                exponent: 1
            })
        );
        let sl = build(Atom::Sl2(5));
        let s = reduce(&sl).unwrap().summary();
        assert_eq!((s.radical_order, s.socle_order), (2, 60));
        assert_eq!(s.simple_power.unwrap().factor, None);
        let aut = compute_aut(&g, Strategy::Brute).unwrap();
        for a in aut.all() {
            let c = r.completeness(a, 1).unwrap();
            assert!(!c.on_group && !c.on_socle);
        }
    }
}
