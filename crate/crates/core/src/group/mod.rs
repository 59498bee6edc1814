//! Fully materialized finite groups.
//!
//! Every group is a [`GroupTable`]: elements are dense indices `0..n` with the
//! identity at index 0, the remaining elements ordered by their canonical
//! representation. Tables up to [`MATERIALIZE_LIMIT`] elements store the full
//! multiplication table; larger groups multiply representations on demand.

pub mod matrix;
pub mod perm;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::field::{prime_power, Field, FieldError};
pub use matrix::{Mat2, ProjectiveMatrix};
pub use perm::Permutation;

/// Orders up to this size get a full `n × n` table.
pub const MATERIALIZE_LIMIT: usize = 4096;
/// Default cap on the order of any constructed group.
pub const DEFAULT_ORDER_CAP: u64 = 10_000;
/// Largest degree accepted for symmetric and alternating groups.
pub const MAX_PERM_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds the cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// The atomic group families the library can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    Cyclic(u32),
    /// Dihedral group of order `2n`.
    Dihedral(u32),
    Quaternion8,
    Symmetric(u32),
    Alternating(u32),
    Sl2(u32),
    Psl2(u32),
    Pgl2(u32),
}

fn factorial(m: u32) -> u64 {
    (1..=m as u64).product()
}

impl Atom {
    /// Order predicted from the parameters alone; validates them on the way.
    pub fn predicted_order(&self) -> Result<u64, GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidParameter(msg));
        match *self {
            Atom::Cyclic(n) if n >= 1 => Ok(n as u64),
            Atom::Dihedral(n) if n >= 1 => Ok(2 * n as u64),
            Atom::Quaternion8 => Ok(8),
            Atom::Symmetric(m) | Atom::Alternating(m) if m < 1 => bad(format!("degree {m} < 1")),
            Atom::Symmetric(m) | Atom::Alternating(m) if m > MAX_PERM_DEGREE => {
                bad(format!("degree {m} exceeds {MAX_PERM_DEGREE}"))
            }
            Atom::Symmetric(m) => Ok(factorial(m)),
            Atom::Alternating(m) => Ok(if m < 2 { 1 } else { factorial(m) / 2 }),
            Atom::Sl2(q) | Atom::Psl2(q) | Atom::Pgl2(q) => {
                let Some((p, _)) = prime_power(q) else {
                    return bad(format!("{q} is not a prime power"));
                };
                if q > crate::field::MAX_FIELD_ORDER {
                    return bad(format!("q = {q} exceeds {}", crate::field::MAX_FIELD_ORDER));
                }
                if !matches!(self, Atom::Sl2(_)) && q < 4 {
                    return bad(format!("q = {q} < 4"));
                }
                let q = q as u64;
                let full = q * (q * q - 1);
                Ok(match self {
                    Atom::Psl2(_) if p != 2 => full / 2,
                    _ => full,
                })
            }
            Atom::Cyclic(n) | Atom::Dihedral(n) => bad(format!("parameter {n} < 1")),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Quaternion8 => write!(f, "Q8"),
            Atom::Symmetric(m) => write!(f, "S{m}"),
            Atom::Alternating(m) => write!(f, "A{m}"),
            Atom::Sl2(q) => write!(f, "SL2({q})"),
            Atom::Psl2(q) => write!(f, "PSL2({q})"),
            Atom::Pgl2(q) => write!(f, "PGL2({q})"),
        }
    }
}

/// Canonical underlying representation of one element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElementRep {
    Residue(u32),
    /// `r^rotation s^reflection`.
    Dihedral {
        rotation: u32,
        reflection: bool,
    },
    /// Index into `1, -1, i, -i, j, -j, k, -k`.
    Quaternion(u8),
    Perm(Permutation),
    Matrix(Mat2),
    Projective(ProjectiveMatrix),
    /// Indices into the left and right factors of a direct product.
    Pair(usize, usize),
    /// Coset of a quotient, named by its least member in the parent.
    Coset(usize),
    /// Subgroup element, named by its parent index.
    Member(usize),
}

/// How a table was obtained.
#[derive(Debug, Clone)]
pub enum Construction {
    Atom(Atom),
    Product(Arc<GroupTable>, Arc<GroupTable>),
    Quotient {
        parent: Arc<GroupTable>,
        normal: Vec<usize>,
    },
    Subgroup {
        parent: Arc<GroupTable>,
        members: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
enum Lookup {
    None,
    Perm(HashMap<Permutation, u32>),
    /// Dense map from matrix codes to element indices (`u32::MAX` = absent).
    Matrix(Vec<u32>),
}

#[derive(Debug, Clone)]
enum Law {
    Table(Vec<u16>),
    OnDemand,
}

/// A finite group with indexed elements.
pub struct GroupTable {
    name: String,
    law: Law,
    lookup: Lookup,
    field: Option<Arc<Field>>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    reps: Vec<ElementRep>,
    labels: Vec<String>,
    construction: Construction,
    classes: OnceLock<Vec<Vec<usize>>>,
    generators: OnceLock<Vec<usize>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order())
            .finish()
    }
}

const QUAT_LABELS: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];

/// Unit quaternion product on `{1, i, j, k}` as `(sign flip, unit)`.
fn quat_unit_mul(x: u8, y: u8) -> (bool, u8) {
    match (x, y) {
        (0, y) => (false, y),
        (x, 0) => (false, x),
        (x, y) if x == y => (true, 0),
        (1, 2) => (false, 3),
        (2, 3) => (false, 1),
        (3, 1) => (false, 2),
        (2, 1) => (true, 3),
        (3, 2) => (true, 1),
        (1, 3) => (true, 2),
        _ => unreachable!(),
    }
}

impl GroupTable {
    fn assemble(
        name: String,
        reps: Vec<ElementRep>,
        labels: Vec<String>,
        construction: Construction,
        lookup: Lookup,
        field: Option<Arc<Field>>,
    ) -> GroupTable {
        let n = reps.len();
        let mut g = GroupTable {
            name,
            law: Law::OnDemand,
            lookup,
            field,
            inv: Vec::new(),
            orders: Vec::new(),
            reps,
            labels,
            construction,
            classes: OnceLock::new(),
            generators: OnceLock::new(),
        };
        if n <= MATERIALIZE_LIMIT {
            let mut table = vec![0u16; n * n];
            table
                .par_chunks_mut(n.max(1))
                .enumerate()
                .for_each(|(a, row)| {
                    for (b, slot) in row.iter_mut().enumerate() {
                        *slot = g.mul_on_demand(a, b) as u16;
                    }
                });
            g.law = Law::Table(table);
        }
        g.fill_orders_and_inverses();
        g
    }

    /// Wraps an explicit table (row-major, `table[a * n + b] = a·b`).
    pub(crate) fn from_table(
        name: String,
        table: Vec<u16>,
        reps: Vec<ElementRep>,
        labels: Vec<String>,
        construction: Construction,
    ) -> GroupTable {
        assert_eq!(table.len(), reps.len() * reps.len());
        let mut g = GroupTable {
            name,
            law: Law::Table(table),
            lookup: Lookup::None,
            field: None,
            inv: Vec::new(),
            orders: Vec::new(),
            reps,
            labels,
            construction,
            classes: OnceLock::new(),
            generators: OnceLock::new(),
        };
        g.fill_orders_and_inverses();
        g
    }

    fn fill_orders_and_inverses(&mut self) {
        let n = self.order();
        let (orders, inv): (Vec<u32>, Vec<u32>) = (0..n)
            .into_par_iter()
            .map(|x| {
                let mut prev = 0;
                let mut cur = x;
                let mut k = 1u32;
                while cur != 0 {
                    prev = cur;
                    cur = self.mul(cur, x);
                    k += 1;
                    assert!(k as usize <= n + 1, "element {x} has no finite order");
                }
                // cur = x^k = 1, prev = x^(k-1)
                if x == 0 {
                    (1, 0)
                } else {
                    (k, prev as u32)
                }
            })
            .unzip();
        self.orders = orders;
        self.inv = inv;
    }

    fn mul_on_demand(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Product(l, r) => {
                let m = r.order();
                l.mul(a / m, b / m) * m + r.mul(a % m, b % m)
            }
            Construction::Atom(Atom::Cyclic(n)) => (a + b) % *n as usize,
            Construction::Atom(Atom::Dihedral(n)) => {
                let n = *n as usize;
                let (ja, ia) = (a / n, a % n);
                let (jb, ib) = (b / n, b % n);
                let rot = if ja == 0 { ia + ib } else { ia + n - ib } % n;
                ((ja + jb) % 2) * n + rot
            }
            Construction::Atom(Atom::Quaternion8) => {
                let (sa, ua) = (a % 2 == 1, (a / 2) as u8);
                let (sb, ub) = (b % 2 == 1, (b / 2) as u8);
                let (flip, u) = quat_unit_mul(ua, ub);
                2 * u as usize + (sa ^ sb ^ flip) as usize
            }
            _ => match (&self.lookup, &self.reps[a], &self.reps[b]) {
                (Lookup::Perm(map), ElementRep::Perm(x), ElementRep::Perm(y)) => {
                    map[&x.compose(y)] as usize
                }
                (Lookup::Matrix(dense), ElementRep::Matrix(x), ElementRep::Matrix(y)) => {
                    let k = self.field.as_deref().unwrap();
                    dense[x.mul(y, k).code(k.order() as usize)] as usize
                }
                (Lookup::Matrix(dense), ElementRep::Projective(x), ElementRep::Projective(y)) => {
                    let k = self.field.as_deref().unwrap();
                    dense[x.mul(y, k).matrix().code(k.order() as usize)] as usize
                }
                _ => unreachable!("no on-demand law for {}", self.name),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self.law, Law::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table(t) => t[a * self.reps.len() + b] as usize,
            Law::OnDemand => self.mul_on_demand(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let e = k.unsigned_abs() % self.orders[x] as u64;
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, x: usize) -> u32 {
        let o = self.orders[x];
        debug_assert_eq!(self.order() % o as usize, 0);
        o
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rep(&self, x: usize) -> &ElementRep {
        &self.reps[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// The field of a linear group.
    pub fn field(&self) -> Option<&Arc<Field>> {
        self.field.as_ref()
    }

    /// Index of a matrix (canonicalized first for projective groups).
    pub fn index_of_matrix(&self, m: &Mat2) -> Option<usize> {
        let (Lookup::Matrix(dense), Some(k)) = (&self.lookup, &self.field) else {
            return None;
        };
        let key = match self.construction {
            Construction::Atom(Atom::Sl2(_)) => *m,
            _ => *ProjectiveMatrix::new(*m, k)?.matrix(),
        };
        match dense[key.code(k.order() as usize)] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    pub fn index_of_perm(&self, p: &Permutation) -> Option<usize> {
        match &self.lookup {
            Lookup::Perm(map) => map.get(p).map(|&i| i as usize),
            _ => None,
        }
    }

    /// The matrix behind an element of a linear group.
    pub fn matrix_of(&self, x: usize) -> Option<Mat2> {
        match &self.reps[x] {
            ElementRep::Matrix(m) => Some(*m),
            ElementRep::Projective(m) => Some(*m.matrix()),
            _ => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        let gens = self.generating_set();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
            || n == 1
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.generating_set();
        (0..self.order())
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Conjugacy classes, each sorted, ordered by least member; `{1}` comes first.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gens = self.generating_set().to_vec();
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut class = vec![x];
                class_of[x] = id;
                let mut i = 0;
                // orbit under conjugation by generators
                while i < class.len() {
                    let y = class[i];
                    for &g in &gens {
                        let z = self.conjugate(g, y);
                        if class_of[z] == usize::MAX {
                            class_of[z] = id;
                            class.push(z);
                        }
                    }
                    i += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            classes
        })
    }

    /// Class size of every element.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.order()];
        for class in self.conjugacy_classes() {
            for &x in class {
                sizes[x] = class.len();
            }
        }
        sizes
    }

    /// Largest power of 2 dividing `|G|`, and whether a Sylow 2-subgroup is cyclic.
    pub fn sylow2_profile(&self) -> (u64, bool) {
        let n = self.order() as u64;
        let two_part = 1u64 << n.trailing_zeros();
        let cyclic = two_part == 1 || self.orders.iter().any(|&o| o as u64 == two_part);
        (two_part, cyclic)
    }

    /// Sorted members of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut members = vec![0];
        seen[0] = true;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// A small generating set, chosen greedily: each step adds the element
    /// that enlarges the generated subgroup most, preferring elements whose
    /// (order, class size) signature is rare.
    pub fn generating_set(&self) -> &[usize] {
        self.generators.get_or_init(|| self.greedy_generators())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        // Class sizes need generators, so rank candidates by order only here.
        let mut by_order: HashMap<u32, usize> = HashMap::new();
        for &o in &self.orders {
            *by_order.entry(o).or_default() += 1;
        }
        let mut candidates: Vec<usize> = (1..n).collect();
        candidates.sort_by_key(|&x| (by_order[&self.orders[x]], x));
        let mut gens: Vec<usize> = Vec::new();
        let mut current = vec![0usize];
        while current.len() < n {
            let mut in_current = vec![false; n];
            for &x in &current {
                in_current[x] = true;
            }
            let mut best: Option<(usize, Vec<usize>)> = None;
            for &x in &candidates {
                if in_current[x] {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x);
                let sub = self.generated_subgroup(&trial);
                let better = best.as_ref().is_none_or(|(_, b)| sub.len() > b.len());
                if better {
                    let full = sub.len() == n;
                    best = Some((x, sub));
                    if full {
                        break;
                    }
                }
            }
            let (x, sub) = best.expect("some element lies outside a proper subgroup");
            gens.push(x);
            current = sub;
        }
        gens
    }

    /// Checks the group axioms and the Latin-square property of the table.
    ///
    /// Associativity is exhaustive up to 256 elements and sampled on `10^5`
    /// seeded random triples above that.
    pub fn verify_axioms(&self, seed: u64) -> Result<(), String> {
        let n = self.order();
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(format!("index 0 is not an identity at {x}"));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(format!("bad inverse at {x}"));
            }
        }
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(format!("associativity fails at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..100_000 {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(format!("associativity fails at ({a}, {b}, {c})"));
                }
            }
        }
        if self.is_materialized() {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for a in 0..n {
                row.fill(false);
                col.fill(false);
                for b in 0..n {
                    let r = self.mul(a, b);
                    let c = self.mul(b, a);
                    if row[r] || col[c] {
                        return Err(format!("row or column {a} repeats an entry"));
                    }
                    row[r] = true;
                    col[c] = true;
                }
            }
        }
        Ok(())
    }
}

fn check_cap(order: u64, cap: u64) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::CapExceeded { order, cap })
    } else {
        Ok(())
    }
}

/// Builds one atomic group, rejecting it if its order exceeds `cap`.
pub fn build_atomic(atom: Atom, cap: u64) -> Result<Arc<GroupTable>, GroupError> {
    let order = atom.predicted_order()?;
    check_cap(order, cap)?;
    let name = atom.to_string();
    let construction = Construction::Atom(atom);
    let g = match atom {
        Atom::Cyclic(n) => {
            let reps = (0..n).map(ElementRep::Residue).collect();
            let labels = (0..n)
                .map(|i| match i {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    i => format!("a^{i}"),
                })
                .collect();
            GroupTable::assemble(name, reps, labels, construction, Lookup::None, None)
        }
        Atom::Dihedral(n) => {
            let mut reps = Vec::new();
            let mut labels = Vec::new();
            for reflection in [false, true] {
                for rotation in 0..n {
                    reps.push(ElementRep::Dihedral {
                        rotation,
                        reflection,
                    });
                    let r = match rotation {
                        0 => String::new(),
                        1 => "r".to_string(),
                        i => format!("r^{i}"),
                    };
                    labels.push(match (r.is_empty(), reflection) {
                        (true, false) => "1".to_string(),
                        (true, true) => "s".to_string(),
                        (false, false) => r,
                        (false, true) => format!("{r}s"),
                    });
                }
            }
            GroupTable::assemble(name, reps, labels, construction, Lookup::None, None)
        }
        Atom::Quaternion8 => {
            let reps = (0..8).map(ElementRep::Quaternion).collect();
            let labels = QUAT_LABELS.iter().map(|s| s.to_string()).collect();
            GroupTable::assemble(name, reps, labels, construction, Lookup::None, None)
        }
        Atom::Symmetric(m) | Atom::Alternating(m) => {
            let even_only = matches!(atom, Atom::Alternating(_));
            let perms: Vec<Permutation> = Permutation::all(m as usize)
                .into_iter()
                .filter(|p| !even_only || p.is_even())
                .collect();
            let map = perms
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i as u32))
                .collect();
            let labels = perms.iter().map(|p| p.to_string()).collect();
            let reps = perms.into_iter().map(ElementRep::Perm).collect();
            GroupTable::assemble(name, reps, labels, construction, Lookup::Perm(map), None)
        }
        Atom::Sl2(q) | Atom::Psl2(q) | Atom::Pgl2(q) => {
            let k = Arc::new(Field::new(q)?);
            let qs = q as usize;
            let els: Vec<_> = k.elements().collect();
            let mut mats = Vec::new();
            for &a in &els {
                for &b in &els {
                    for &c in &els {
                        for &d in &els {
                            let m = Mat2::new(a, b, c, d);
                            let det = m.det(&k);
                            let keep = match atom {
                                Atom::Sl2(_) => det == crate::field::FieldElement::ONE,
                                _ => {
                                    !det.is_zero()
                                        && ProjectiveMatrix::new(m, &k).map(|pm| *pm.matrix())
                                            == Some(m)
                                        && (matches!(atom, Atom::Pgl2(_)) || k.is_square_any(det))
                                }
                            };
                            if keep {
                                mats.push(m);
                            }
                        }
                    }
                }
            }
            // identity first, then sorted
            mats.sort_unstable_by_key(|m| (*m != Mat2::IDENTITY, *m));
            let mut dense = vec![u32::MAX; qs.pow(4)];
            for (i, m) in mats.iter().enumerate() {
                dense[m.code(qs)] = i as u32;
            }
            let labels = mats.iter().map(|m| m.display(&k)).collect();
            let reps = mats
                .into_iter()
                .map(|m| match atom {
                    Atom::Sl2(_) => ElementRep::Matrix(m),
                    _ => ElementRep::Projective(ProjectiveMatrix::new(m, &k).unwrap()),
                })
                .collect();
            GroupTable::assemble(
                name,
                reps,
                labels,
                construction,
                Lookup::Matrix(dense),
                Some(k),
            )
        }
    };
    debug_assert_eq!(g.order() as u64, order);
    Ok(Arc::new(g))
}

/// `G × H` with componentwise multiplication; element `(g, h)` has index `g·|H| + h`.
pub fn direct_product(
    g: &Arc<GroupTable>,
    h: &Arc<GroupTable>,
    cap: u64,
) -> Result<Arc<GroupTable>, GroupError> {
    let order = g.order() as u64 * h.order() as u64;
    check_cap(order, cap)?;
    let name = format!("{} x {}", g.name(), product_operand(h.name()));
    let mut reps = Vec::with_capacity(order as usize);
    let mut labels = Vec::with_capacity(order as usize);
    for a in 0..g.order() {
        for b in 0..h.order() {
            reps.push(ElementRep::Pair(a, b));
            labels.push(format!("({}, {})", g.label(a), h.label(b)));
        }
    }
    let construction = Construction::Product(g.clone(), h.clone());
    Ok(Arc::new(GroupTable::assemble(
        name,
        reps,
        labels,
        construction,
        Lookup::None,
        None,
    )))
}

fn product_operand(name: &str) -> String {
    if name.contains(" x ") {
        format!("({name})")
    } else {
        name.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(atom: Atom) -> Arc<GroupTable> {
        build_atomic(atom, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn orders_of_atoms() {
        assert_eq!(build(Atom::Alternating(5)).order(), 60);
        assert_eq!(build(Atom::Psl2(7)).order(), 168);
        assert_eq!(build(Atom::Psl2(4)).order(), 60);
        assert_eq!(build(Atom::Sl2(5)).order(), 120);
        assert_eq!(build(Atom::Pgl2(5)).order(), 120);
        assert_eq!(build(Atom::Dihedral(4)).order(), 8);
        assert_eq!(build(Atom::Symmetric(1)).order(), 1);
    }

    #[test]
    fn psl2_order_formula() {
        for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19] {
            let g = build(Atom::Psl2(q as u32));
            let expect = q * (q * q - 1) / num_integer::gcd(2, q - 1);
            assert_eq!(g.order() as u64, expect, "q = {q}");
        }
    }

    #[test]
    fn psl2_32_is_on_demand() {
        let g = build_atomic(Atom::Psl2(32), 40_000).unwrap();
        assert_eq!(g.order(), 32 * 1023);
        assert!(!g.is_materialized());
        assert!(g.verify_axioms(7).is_ok());
    }

    #[test]
    fn axioms_hold() {
        for atom in [
            Atom::Cyclic(1),
            Atom::Cyclic(12),
            Atom::Dihedral(1),
            Atom::Dihedral(7),
            Atom::Quaternion8,
            Atom::Symmetric(4),
            Atom::Alternating(5),
            Atom::Sl2(3),
            Atom::Sl2(5),
            Atom::Psl2(5),
            Atom::Pgl2(4),
            Atom::Psl2(9),
        ] {
            let g = build(atom);
            assert_eq!(g.verify_axioms(1), Ok(()), "{atom}");
        }
    }

    #[test]
    fn element_orders() {
        let s4 = build(Atom::Symmetric(4));
        assert_eq!(s4.element_order(0), 1);
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(s4.element_order(s4.index_of_perm(&c).unwrap()), 4);
        let pgl = build(Atom::Pgl2(5));
        let k = pgl.field().unwrap().clone();
        let x = pgl
            .index_of_matrix(&Mat2::from_ints(&k, -1, 0, 0, 1))
            .unwrap();
        assert_eq!(pgl.element_order(x), 2);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let sizes = |g: &GroupTable| {
            let mut s: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes(&build(Atom::Cyclic(5))), vec![1; 5]);
        assert_eq!(sizes(&build(Atom::Symmetric(3))), vec![1, 2, 3]);
        assert_eq!(sizes(&build(Atom::Alternating(5))), vec![1, 12, 12, 15, 20]);
        assert_eq!(build(Atom::Alternating(5)).conjugacy_classes()[0], vec![0]);
    }

    #[test]
    fn sylow2() {
        assert_eq!(build(Atom::Symmetric(3)).sylow2_profile(), (2, true));
        assert_eq!(build(Atom::Dihedral(4)).sylow2_profile(), (8, false));
        assert_eq!(build(Atom::Cyclic(3)).sylow2_profile(), (1, true));
        assert_eq!(build(Atom::Quaternion8).sylow2_profile(), (8, false));
        assert_eq!(build(Atom::Cyclic(8)).sylow2_profile(), (8, true));
    }

    #[test]
    fn products() {
        let a5 = build(Atom::Alternating(5));
        let c2 = build(Atom::Cyclic(2));
        let g = direct_product(&a5, &c2, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.name(), "A5 x C2");
        assert_eq!(g.verify_axioms(3), Ok(()));
        let aa = direct_product(&a5, &a5, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(aa.order(), 3600);
        for x in 0..a5.order() {
            assert_eq!(aa.element_order(x * 60), a5.element_order(x));
        }
        let t = build(Atom::Cyclic(1));
        let gt = direct_product(&a5, &t, DEFAULT_ORDER_CAP).unwrap();
        for a in 0..60 {
            for b in 0..60 {
                assert_eq!(gt.mul(a, b), a5.mul(a, b));
            }
        }
        assert!(matches!(
            direct_product(&aa, &a5, DEFAULT_ORDER_CAP),
            Err(GroupError::CapExceeded { order: 216_000, .. })
        ));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            build_atomic(Atom::Psl2(6), DEFAULT_ORDER_CAP),
            Err(GroupError::InvalidParameter(_))
        ));
        assert!(matches!(
            build_atomic(Atom::Symmetric(8), DEFAULT_ORDER_CAP),
            Err(GroupError::CapExceeded { order: 40320, .. })
        ));
        assert!(build_atomic(Atom::Cyclic(0), DEFAULT_ORDER_CAP).is_err());
        assert!(build_atomic(Atom::Symmetric(9), u64::MAX).is_err());
    }

    #[test]
    fn identity_first_and_sorted() {
        let g = build(Atom::Psl2(5));
        assert_eq!(g.matrix_of(0), Some(Mat2::IDENTITY));
        let mats: Vec<_> = (1..g.order()).map(|x| g.matrix_of(x).unwrap()).collect();
        assert!(mats.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn generating_sets_generate() {
        for atom in [
            Atom::Alternating(5),
            Atom::Psl2(8),
            Atom::Sl2(7),
            Atom::Quaternion8,
        ] {
            let g = build(atom);
            let gens = g.generating_set();
            assert!(gens.len() <= 2, "{atom}: {gens:?}");
            assert_eq!(g.generated_subgroup(gens).len(), g.order());
        }
    }
}
