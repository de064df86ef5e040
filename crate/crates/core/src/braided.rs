//! 2-cocycles on racks and the braided vector spaces they induce.
//!
//! All scalars are roots of unity held as exact exponents; products never
//! leave the cyclic group generated by the values, so no floating point
//! appears anywhere. A cocycle `q` on a rack `X` induces the braiding
//! `c_q(e_k ⊗ e_l) = q_{k,l} e_{k▷l} ⊗ e_k` on the free vector space `CX`,
//! and the braid equation holds on basis triples exactly when the cocycle
//! identity and self-distributivity do.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{all_compatible, GroupElement};
use crate::rack::{RackTable, RackViolation};

/// `e^{2πi·exponent/order}`, stored in lowest terms so that equal values
/// compare equal regardless of the order they were created with.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, exponent: u64) -> Self {
        assert!(order > 0, "order must be positive");
        let e = exponent % order;
        if e == 0 {
            return RootOfUnity {
                order: 1,
                exponent: 0,
            };
        }
        let g = e.gcd(&order);
        RootOfUnity {
            order: order / g,
            exponent: e / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn minus_one() -> Self {
        RootOfUnity {
            order: 2,
            exponent: 1,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent with respect to `order` (must be a multiple of the reduced
    /// order).
    pub fn exponent_for_order(&self, order: u64) -> Option<u64> {
        if order % self.order != 0 {
            return None;
        }
        Some(self.exponent * (order / self.order))
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn is_minus_one(&self) -> bool {
        self.order == 2 && self.exponent == 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = self.order.lcm(&other.order);
        let e = (self.exponent * (l / self.order) + other.exponent * (l / other.order)) % l;
        RootOfUnity::new(l, e)
    }

    pub fn inverse(&self) -> Self {
        if self.exponent == 0 {
            *self
        } else {
            RootOfUnity {
                order: self.order,
                exponent: self.order - self.exponent,
            }
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (k.rem_euclid(self.order as i64) as u64) * self.exponent;
        RootOfUnity::new(self.order, e)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else if self.is_minus_one() {
            write!(f, "-1")
        } else {
            write!(f, "zeta{}^{}", self.order, self.exponent)
        }
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CocycleError {
    #[error("exponent matrix is {0}x{1}, rack has size {2}")]
    ShapeMismatch(usize, usize, usize),
    #[error("index ({0},{1}) out of range for rack of size {2}")]
    IndexOutOfRange(usize, usize, usize),
    #[error("cocycle identity fails at ({i},{j},{k}): q_(i,j▷k)·q_(j,k) = {left}, q_(i▷j,i▷k)·q_(i,k) = {right}")]
    Identity {
        i: usize,
        j: usize,
        k: usize,
        left: RootOfUnity,
        right: RootOfUnity,
    },
    #[error("braid equation fails on basis triple ({a},{b},{c})")]
    Braid { a: usize, b: usize, c: usize },
    #[error("underlying rack violates an axiom: {0}")]
    Rack(RackViolation),
}

/// A root-of-unity-valued 2-cocycle on a rack, stored as exponents sharing
/// one order `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocycle {
    rack: RackTable,
    #[serde(rename = "L")]
    order: u64,
    exponents: Vec<Vec<u64>>,
}

impl Cocycle {
    pub fn new(rack: RackTable, order: u64, exponents: Vec<Vec<u64>>) -> Result<Self, CocycleError> {
        let n = rack.size();
        if exponents.len() != n || exponents.iter().any(|r| r.len() != n) {
            return Err(CocycleError::ShapeMismatch(
                exponents.len(),
                exponents.first().map_or(0, |r| r.len()),
                n,
            ));
        }
        assert!(order > 0, "order must be positive");
        let exponents = exponents
            .into_iter()
            .map(|row| row.into_iter().map(|e| e % order).collect())
            .collect();
        Ok(Cocycle {
            rack,
            order,
            exponents,
        })
    }

    /// The constant cocycle `q ≡ value`.
    pub fn constant(rack: RackTable, value: RootOfUnity) -> Self {
        let n = rack.size();
        let order = value.order();
        let e = value.exponent_for_order(order).expect("own order");
        Cocycle {
            rack,
            order,
            exponents: vec![vec![e; n]; n],
        }
    }

    pub fn rack(&self) -> &RackTable {
        &self.rack
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn value(&self, i: usize, j: usize) -> RootOfUnity {
        RootOfUnity::new(self.order, self.exponents[i][j])
    }

    /// The cocycle identity `q_{i,j▷k} q_{j,k} = q_{i▷j,i▷k} q_{i,k}` on
    /// all triples.
    pub fn check_cocycle(&self) -> Result<(), CocycleError> {
        let n = self.rack.size();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self
                        .value(i, self.rack.apply(j, k))
                        .mul(&self.value(j, k));
                    let right = self
                        .value(self.rack.apply(i, j), self.rack.apply(i, k))
                        .mul(&self.value(i, k));
                    if left != right {
                        return Err(CocycleError::Identity {
                            i,
                            j,
                            k,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `c_q(e_k ⊗ e_l) = q_{k,l} e_{k▷l} ⊗ e_k`: returns the image basis
    /// pair and the scalar.
    pub fn braiding_apply(
        &self,
        pair: (usize, usize),
    ) -> Result<((usize, usize), RootOfUnity), CocycleError> {
        let (k, l) = pair;
        let n = self.rack.size();
        if k >= n || l >= n {
            return Err(CocycleError::IndexOutOfRange(k, l, n));
        }
        Ok(((self.rack.apply(k, l), k), self.value(k, l)))
    }

    /// Evaluates both sides of the braid equation
    /// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on every basis triple,
    /// comparing the resulting basis triple and the accumulated scalar.
    pub fn check_braid_equation(&self) -> Result<(), CocycleError> {
        let n = self.rack.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    // left: (c⊗id)(id⊗c)(c⊗id)
                    let ab = self.rack.apply(a, b);
                    let ac = self.rack.apply(a, c);
                    let left_idx = (self.rack.apply(ab, ac), ab, a);
                    let left_scalar = self
                        .value(a, b)
                        .mul(&self.value(a, c))
                        .mul(&self.value(ab, ac));
                    // right: (id⊗c)(c⊗id)(id⊗c)
                    let bc = self.rack.apply(b, c);
                    let right_idx = (self.rack.apply(a, bc), self.rack.apply(a, b), a);
                    let right_scalar = self
                        .value(b, c)
                        .mul(&self.value(a, bc))
                        .mul(&self.value(a, b));
                    if left_idx != right_idx || left_scalar != right_scalar {
                        return Err(CocycleError::Braid { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Restriction to a `▷`-closed subset: the subset with the restricted
    /// cocycle is itself a braided vector space (the subspace logic used by
    /// the criteria engine).
    pub fn restrict(&self, subset: &[usize]) -> Result<Cocycle, CocycleError> {
        let n = self.rack.size();
        let pos: HashMap<usize, usize> =
            subset.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut table = vec![vec![0; subset.len()]; subset.len()];
        let mut exps = vec![vec![0; subset.len()]; subset.len()];
        for (pi, &i) in subset.iter().enumerate() {
            for (pj, &j) in subset.iter().enumerate() {
                if i >= n || j >= n {
                    return Err(CocycleError::IndexOutOfRange(i, j, n));
                }
                let h = self.rack.apply(i, j);
                match pos.get(&h) {
                    Some(&ph) => table[pi][pj] = ph,
                    None => return Err(CocycleError::IndexOutOfRange(i, j, n)),
                }
                exps[pi][pj] = self.exponents[i][j];
            }
        }
        let labels = subset
            .iter()
            .map(|&i| self.rack.label(i).to_string())
            .collect();
        let rack = RackTable::new(labels, table).expect("restriction of a valid table");
        Cocycle::new(rack, self.order, exps)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("element not expressible as a word of length <= {0} in the supplied generators")]
    NotExpressible(usize),
    #[error("character values are inconsistent: two words for the same element disagree")]
    Inconsistent,
    #[error("generators are incompatible with the base element")]
    Incompatible,
}

/// A degree-1 character of a centralizer, specified on generators; values
/// on other elements are found by bounded breadth-first word search.
#[derive(Clone, Debug)]
pub struct Character<G: GroupElement> {
    assignments: Vec<(G, RootOfUnity)>,
    q_ss: RootOfUnity,
}

pub const DEFAULT_WORD_DEPTH: usize = 12;

impl<G: GroupElement> Character<G> {
    /// `base` is the class base point `s`; its value `q_ss` is computed at
    /// construction (so `s` must be generator-expressible).
    pub fn new(
        assignments: Vec<(G, RootOfUnity)>,
        base: &G,
        depth: usize,
    ) -> Result<Self, CharacterError> {
        let gens: Vec<&G> = assignments.iter().map(|(g, _)| g).collect();
        if !gens.iter().all(|g| g.compatible(base)) {
            return Err(CharacterError::Incompatible);
        }
        let mut chi = Character {
            assignments,
            q_ss: RootOfUnity::one(),
        };
        chi.q_ss = chi.eval(base, depth)?;
        Ok(chi)
    }

    pub fn q_ss(&self) -> RootOfUnity {
        self.q_ss
    }

    /// Evaluates the character on `target` by BFS over words in the
    /// generators and their inverses. Conflicting values for one element
    /// are reported as inconsistency.
    pub fn eval(&self, target: &G, depth: usize) -> Result<RootOfUnity, CharacterError> {
        let id = target.identity_like();
        let mut values: HashMap<G, RootOfUnity> = HashMap::new();
        values.insert(id.clone(), RootOfUnity::one());
        let mut frontier = vec![id];
        let steps: Vec<(G, RootOfUnity)> = self
            .assignments
            .iter()
            .flat_map(|(g, v)| [(g.clone(), *v), (g.inverse(), v.inverse())])
            .collect();
        for _ in 0..depth {
            if let Some(v) = values.get(target) {
                return Ok(*v);
            }
            let mut next = Vec::new();
            for w in &frontier {
                let wv = values[w];
                for (g, gv) in &steps {
                    let nw = w.op(g);
                    let nv = wv.mul(gv);
                    match values.get(&nw) {
                        Some(&old) if old != nv => return Err(CharacterError::Inconsistent),
                        Some(_) => {}
                        None => {
                            values.insert(nw.clone(), nv);
                            next.push(nw);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        values
            .get(target)
            .copied()
            .ok_or(CharacterError::NotExpressible(depth))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SectionError {
    #[error("section arrays have mismatched lengths")]
    LengthMismatch,
    #[error("section length {0} is not divisible into {1} copies")]
    BadBlockCount(usize, usize),
    #[error("transporter {0} does not carry the base point to element {0}")]
    TransporterMismatch(usize),
    #[error("first element of the first copy must be the base point")]
    BaseNotFirst,
    #[error("elements within copy {0} are not distinct")]
    DuplicateInBlock(usize),
    #[error("copy {0} is not closed under conjugation by the section elements")]
    BlockNotClosed(usize),
    #[error("incompatible group elements")]
    Incompatible,
}

/// A numeration `t_1..t_M` of a conjugacy class (possibly several copies of
/// it) together with transporters `g_i ▷ s = t_i`. With `copies = 2` the
/// indices form the square of the class rack: products land in the copy of
/// the right operand.
#[derive(Clone, Debug)]
pub struct CosetSection<G: GroupElement> {
    base: G,
    elements: Vec<G>,
    transporters: Vec<G>,
    copies: usize,
}

impl<G: GroupElement> CosetSection<G> {
    pub fn new(
        base: G,
        elements: Vec<G>,
        transporters: Vec<G>,
        copies: usize,
    ) -> Result<Self, SectionError> {
        if elements.len() != transporters.len() || elements.is_empty() || copies == 0 {
            return Err(SectionError::LengthMismatch);
        }
        if elements.len() % copies != 0 {
            return Err(SectionError::BadBlockCount(elements.len(), copies));
        }
        let mut all: Vec<G> = elements.clone();
        all.extend(transporters.iter().cloned());
        all.push(base.clone());
        if !all_compatible(&all) {
            return Err(SectionError::Incompatible);
        }
        for (i, (t, g)) in elements.iter().zip(transporters.iter()).enumerate() {
            if g.conj(&base) != *t {
                return Err(SectionError::TransporterMismatch(i));
            }
        }
        if elements[0] != base {
            return Err(SectionError::BaseNotFirst);
        }
        let block = elements.len() / copies;
        for b in 0..copies {
            let slice = &elements[b * block..(b + 1) * block];
            let distinct: std::collections::HashSet<&G> = slice.iter().collect();
            if distinct.len() != slice.len() {
                return Err(SectionError::DuplicateInBlock(b));
            }
        }
        let section = CosetSection {
            base,
            elements,
            transporters,
            copies,
        };
        // every product must resolve inside the right operand's copy
        let m = section.elements.len();
        for i in 0..m {
            for j in 0..m {
                if section.product_index(i, j).is_none() {
                    return Err(SectionError::BlockNotClosed(j / block));
                }
            }
        }
        Ok(section)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn element(&self, i: usize) -> &G {
        &self.elements[i]
    }

    pub fn transporter(&self, i: usize) -> &G {
        &self.transporters[i]
    }

    /// Index `h` with `t_h = t_i ▷ t_j`, resolved in the copy of `j`.
    fn product_index(&self, i: usize, j: usize) -> Option<usize> {
        let block = self.elements.len() / self.copies;
        let b = j / block;
        let z = self.elements[i].conj(&self.elements[j]);
        (b * block..(b + 1) * block).find(|&h| self.elements[h] == z)
    }

    /// The conjugation rack on the section indices.
    pub fn rack(&self) -> RackTable {
        let m = self.elements.len();
        let block = m / self.copies;
        let labels = (0..m)
            .map(|i| match (self.copies, i / block) {
                (1, _) => format!("t{}", i + 1),
                (_, 0) => format!("x{}", i % block + 1),
                (_, 1) => format!("y{}", i % block + 1),
                (_, b) => format!("z{}:{}", b, i % block + 1),
            })
            .collect();
        let mut table = vec![vec![0; m]; m];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.product_index(i, j).expect("validated at construction");
            }
        }
        RackTable::new(labels, table).expect("well formed by construction")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YdError {
    #[error("twist at ({0},{1}) does not centralize the base point")]
    NotCentralizing(usize, usize),
    #[error("character evaluation failed at ({0},{1}): {2}")]
    Character(usize, usize, CharacterError),
    #[error("resulting table fails the cocycle identity: {0}")]
    NotACocycle(CocycleError),
}

/// The braiding cocycle of `M(O, χ)` for a degree-1 character `χ`:
/// `q_{ij} = χ(g_h^{-1} t_i g_j)` where `t_i ▷ t_j = t_h`.
pub fn yd_cocycle<G: GroupElement>(
    section: &CosetSection<G>,
    chi: &Character<G>,
    depth: usize,
) -> Result<Cocycle, YdError> {
    let m = section.len();
    let rack = section.rack();
    let mut values = vec![vec![RootOfUnity::one(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let h = rack.apply(i, j);
            let twist = section
                .transporter(h)
                .inverse()
                .op(section.element(i))
                .op(section.transporter(j));
            if twist.conj(section.base()) != *section.base() {
                return Err(YdError::NotCentralizing(i, j));
            }
            values[i][j] = chi
                .eval(&twist, depth)
                .map_err(|e| YdError::Character(i, j, e))?;
        }
    }
    let order = values
        .iter()
        .flatten()
        .fold(1u64, |acc, v| acc.lcm(&v.order()));
    let exponents = values
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.exponent_for_order(order).expect("order is the lcm"))
                .collect()
        })
        .collect();
    let q = Cocycle::new(rack, order, exponents).expect("shape matches by construction");
    q.check_cocycle().map_err(YdError::NotACocycle)?;
    Ok(q)
}

/// True when `map` carries `q1` to `q2`: it must be a rack isomorphism and
/// match the cocycle values pointwise.
pub fn check_bvs_isomorphism(
    q1: &Cocycle,
    q2: &Cocycle,
    map: &crate::rack::RackMorphism,
) -> Result<bool, crate::rack::RackError> {
    if map.map.len() != q1.rack().size() {
        return Err(crate::rack::RackError::MorphismLength(
            map.map.len(),
            q1.rack().size(),
        ));
    }
    if !map.is_isomorphism(q1.rack(), q2.rack()) {
        return Ok(false);
    }
    let n = q1.rack().size();
    for i in 0..n {
        for j in 0..n {
            if q1.value(i, j) != q2.value(map.map[i], map.map[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::{dihedral_square_rack, octahedral_rack, square_rack};
    use proptest::prelude::*;

    #[test]
    fn root_of_unity_normalizes() {
        assert_eq!(RootOfUnity::new(4, 2), RootOfUnity::minus_one());
        assert_eq!(RootOfUnity::new(6, 0), RootOfUnity::one());
        assert_eq!(
            RootOfUnity::minus_one().mul(&RootOfUnity::minus_one()),
            RootOfUnity::one()
        );
        let z3 = RootOfUnity::new(3, 1);
        assert_eq!(z3.mul(&z3).mul(&z3), RootOfUnity::one());
        assert_eq!(z3.pow(-1), z3.inverse());
        assert_eq!(RootOfUnity::new(12, 6), RootOfUnity::minus_one());
    }

    #[test]
    fn constant_cocycles_pass() {
        for r in [octahedral_rack(), dihedral_square_rack(3).unwrap()] {
            let minus = Cocycle::constant(r.clone(), RootOfUnity::minus_one());
            assert_eq!(minus.check_cocycle(), Ok(()));
            let plus = Cocycle::constant(r, RootOfUnity::one());
            assert_eq!(plus.check_cocycle(), Ok(()));
        }
    }

    #[test]
    fn corrupted_entry_fails_with_triple() {
        let x3 = dihedral_square_rack(3).unwrap();
        let n = x3.size();
        let mut exps = vec![vec![1u64; n]; n];
        exps[2][4] = 0;
        let q = Cocycle::new(x3, 2, exps).unwrap();
        assert!(matches!(q.check_cocycle(), Err(CocycleError::Identity { .. })));
    }

    #[test]
    fn braiding_apply_examples() {
        let x3 = dihedral_square_rack(3).unwrap();
        let q = Cocycle::constant(x3, RootOfUnity::minus_one());
        // x_1 ▷ y_2 = y_3 in 1-based labels: s_0 ▷ t_1 = t_2
        let ((img, back), scalar) = q.braiding_apply((0, 4)).unwrap();
        assert_eq!((img, back), (5, 0));
        assert!(scalar.is_minus_one());

        // diagonal pairs stay put
        let ((img, back), _) = q.braiding_apply((2, 2)).unwrap();
        assert_eq!((img, back), (2, 2));

        let octa = Cocycle::constant(octahedral_rack(), RootOfUnity::minus_one());
        let ((img, back), scalar) = octa.braiding_apply((1, 0)).unwrap();
        assert_eq!((img, back), (2, 1));
        assert!(scalar.is_minus_one());

        assert!(octa.braiding_apply((6, 0)).is_err());
    }

    #[test]
    fn braid_equation_on_standard_racks() {
        let x3 = Cocycle::constant(
            dihedral_square_rack(3).unwrap(),
            RootOfUnity::minus_one(),
        );
        assert_eq!(x3.check_braid_equation(), Ok(()));
        let octa = Cocycle::constant(octahedral_rack(), RootOfUnity::minus_one());
        assert_eq!(octa.check_braid_equation(), Ok(()));
        let sq = Cocycle::constant(
            square_rack(&octahedral_rack()),
            RootOfUnity::minus_one(),
        );
        assert_eq!(sq.check_braid_equation(), Ok(()));
    }

    #[test]
    fn braid_equation_detects_non_rack() {
        // swap two entries of a row: rows stay bijective, self-distributivity breaks
        let octa = octahedral_rack();
        let mut table: Vec<Vec<usize>> = (0..6)
            .map(|i| (0..6).map(|j| octa.apply(i, j)).collect())
            .collect();
        table[1].swap(2, 3);
        let broken = RackTable::new(
            (1..=6).map(|i| i.to_string()).collect(),
            table,
        )
        .unwrap();
        assert!(broken.check().is_err());
        let q = Cocycle::constant(broken, RootOfUnity::minus_one());
        assert!(matches!(
            q.check_braid_equation(),
            Err(CocycleError::Braid { .. })
        ));
    }

    #[test]
    fn abelian_subrack_gives_diagonal_braiding() {
        let x3 = dihedral_square_rack(3).unwrap();
        let q = Cocycle::constant(x3, RootOfUnity::minus_one());
        // {s_0, t_0} is abelian; the restricted braiding is diagonal
        let sub = q.restrict(&[0, 3]).unwrap();
        for k in 0..2 {
            for l in 0..2 {
                let ((img, back), _) = sub.braiding_apply((k, l)).unwrap();
                assert_eq!((img, back), (l, k));
            }
        }
    }

    proptest! {
        #[test]
        fn root_multiplication_is_exact(
            (o1, e1) in (1u64..40, 0u64..40),
            (o2, e2) in (1u64..40, 0u64..40),
        ) {
            let a = RootOfUnity::new(o1, e1 % o1);
            let b = RootOfUnity::new(o2, e2 % o2);
            let prod = a.mul(&b);
            // the product stays in the cyclic group of order lcm
            let l = o1.lcm(&o2);
            prop_assert_eq!(l % prod.order(), 0);
            prop_assert_eq!(prod.mul(&b.inverse()), a);
        }
    }
}
