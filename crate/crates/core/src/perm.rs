//! Exact permutation arithmetic for symmetric groups.
//!
//! Permutations are stored as image arrays (`x` maps to `images[x]`,
//! 0-based internally, 1-based on every external surface). Composition is
//! "right factor first": `(a * b)(x) = a(b(x))`, which matches the
//! relabeling identity `a (l_1 l_2 ... l_k) a^{-1} = (a(l_1) ... a(l_k))`
//! used throughout the family constructions.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("images are not a bijection of 1..={0}")]
    NotBijective(usize),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("point {0} appears twice in cycle notation")]
    RepeatedPoint(usize),
    #[error("invalid cycle type `{0}`: {1}")]
    BadCycleType(String, String),
}

/// An element of the symmetric group `S_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds from a 1-based image array, e.g. `[2, 1, 3]` is `(1 2)` in `S_3`.
    pub fn from_images(images_one_based: &[usize]) -> Result<Self, PermError> {
        let m = images_one_based.len();
        let mut images = Vec::with_capacity(m);
        let mut seen = vec![false; m];
        for &y in images_one_based {
            if y == 0 || y > m {
                return Err(PermError::NotBijective(m));
            }
            if seen[y - 1] {
                return Err(PermError::NotBijective(m));
            }
            seen[y - 1] = true;
            images.push(y - 1);
        }
        Ok(Permutation { images })
    }

    /// Builds from 1-based disjoint cycles; points outside the cycles are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (pos, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(PermError::PointOutOfRange(pt, degree));
                }
                if used[pt - 1] {
                    return Err(PermError::RepeatedPoint(pt));
                }
                used[pt - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(PermError::PointOutOfRange(next, degree));
                }
                images[pt - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`: the right factor acts first.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `self ▷ other = self · other · self^{-1}`, computed by relabeling.
    pub fn conjugate(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        let mut images = vec![0; self.degree()];
        for (x, &y) in other.images.iter().enumerate() {
            images[self.images[x]] = self.images[y];
        }
        Ok(Permutation { images })
    }

    /// `self^k` for any integer `k`, reduced modulo the element order.
    pub fn power(&self, k: i64) -> Self {
        let ord = self.order() as i64;
        let mut e = k.rem_euclid(ord) as u64;
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same degree");
            }
            base = base.compose(&base).expect("same degree");
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Disjoint cycles (0-based), each starting at its minimal point,
    /// listed by increasing minimal point. Fixed points are included as
    /// singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut multiplicities = BTreeMap::new();
        for c in self.cycles() {
            *multiplicities.entry(c.len()).or_insert(0) += 1;
        }
        CycleType {
            degree: self.degree(),
            multiplicities,
        }
    }

    /// 0-based points moved by the permutation.
    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.images[x] != x).collect()
    }

    /// The 1-based image array, the external representation.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    /// A permutation carrying the cycle word of `self` onto the cycle word
    /// of `other` (so that `g ▷ self = other`). Requires equal cycle type;
    /// deterministic: cycles are matched in canonical order within each
    /// length.
    pub fn relabeling_onto(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        if self.cycle_type() != other.cycle_type() {
            return Err(PermError::BadCycleType(
                other.cycle_type().to_string(),
                "cycle type differs, no relabeling exists".into(),
            ));
        }
        let mut by_len_self: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for c in self.cycles() {
            by_len_self.entry(c.len()).or_default().push(c);
        }
        let mut by_len_other: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
        for c in other.cycles() {
            by_len_other.entry(c.len()).or_default().push(c);
        }
        let mut images = vec![0; self.degree()];
        for (len, cs) in &by_len_self {
            let ds = &by_len_other[len];
            for (c, d) in cs.iter().zip(ds.iter()) {
                for (a, b) in c.iter().zip(d.iter()) {
                    images[*a] = *b;
                }
            }
        }
        Ok(Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            write!(f, "(")?;
            for (i, pt) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.images_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(&images).map_err(D::Error::custom)
    }
}

/// The multiset of cycle lengths of a permutation in `S_m`; parameterizes
/// the conjugacy class. Text form is caret-multiplicity, comma-separated,
/// with exponent 1 omitted: `1^3,2` or `8`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CycleType {
    degree: usize,
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn new(degree: usize, parts: &[(usize, usize)]) -> Result<Self, PermError> {
        let mut multiplicities = BTreeMap::new();
        for &(j, n) in parts {
            if n == 0 {
                continue;
            }
            if j == 0 || j > degree {
                return Err(PermError::BadCycleType(
                    format!("{j}^{n}"),
                    format!("part length {j} out of range for degree {degree}"),
                ));
            }
            *multiplicities.entry(j).or_insert(0) += n;
        }
        let total: usize = multiplicities.iter().map(|(j, n)| j * n).sum();
        if total != degree {
            return Err(PermError::BadCycleType(
                format!("{multiplicities:?}"),
                format!("parts sum to {total}, expected {degree}"),
            ));
        }
        Ok(CycleType {
            degree,
            multiplicities,
        })
    }

    pub fn parse(degree: usize, text: &str) -> Result<Self, PermError> {
        let mut parts = Vec::new();
        for piece in text.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(PermError::BadCycleType(text.into(), "empty part".into()));
            }
            let (j, n) = match piece.split_once('^') {
                Some((a, b)) => {
                    let j = a.trim().parse::<usize>().map_err(|e| {
                        PermError::BadCycleType(text.into(), e.to_string())
                    })?;
                    let n = b.trim().parse::<usize>().map_err(|e| {
                        PermError::BadCycleType(text.into(), e.to_string())
                    })?;
                    (j, n)
                }
                None => {
                    let j = piece.parse::<usize>().map_err(|e| {
                        PermError::BadCycleType(text.into(), e.to_string())
                    })?;
                    (j, 1)
                }
            };
            parts.push((j, n));
        }
        CycleType::new(degree, &parts)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Multiplicity `n_j` of cycles of length `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.multiplicities.get(&j).copied().unwrap_or(0)
    }

    /// `(j, n_j)` pairs with `n_j >= 1`, ascending in `j`.
    pub fn parts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&j, &n)| (j, n))
    }

    pub fn element_order(&self) -> u64 {
        self.multiplicities
            .keys()
            .fold(1u64, |acc, &j| acc.lcm(&(j as u64)))
    }

    /// Order of the centralizer of any element of this type: `∏ j^{n_j} n_j!`.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities.iter().fold(1u64, |acc, (&j, &n)| {
            let mut v = acc;
            for _ in 0..n {
                v *= j as u64;
            }
            for i in 1..=n as u64 {
                v *= i;
            }
            v
        })
    }

    pub fn class_size(&self) -> u64 {
        factorial(self.degree as u64) / self.centralizer_order()
    }

    /// Canonical class representative: cycles filled with consecutive
    /// integers in weakly increasing cycle length.
    pub fn canonical_representative(&self) -> Permutation {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut next = 1;
        for (&j, &n) in &self.multiplicities {
            for _ in 0..n {
                cycles.push((next..next + j).collect());
                next += j;
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(self.degree, &refs).expect("consecutive fill is valid")
    }

    /// All cycle types of `S_m` (the partitions of `m`), in ascending
    /// lexicographic order of their canonical text form.
    pub fn all_for_degree(m: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 0 {
                out.push(current.clone());
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                current.push(part);
                rec(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut partitions = Vec::new();
        rec(m, m, &mut current, &mut partitions);
        for p in partitions {
            let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
            for part in p {
                *mult.entry(part).or_insert(0) += 1;
            }
            let parts: Vec<(usize, usize)> = mult.into_iter().collect();
            out.push(CycleType::new(m, &parts).expect("partition is valid"));
        }
        out.sort();
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&j, &n) in &self.multiplicities {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if n == 1 {
                write!(f, "{j}")?;
            } else {
                write!(f, "{j}^{n}")?;
            }
        }
        Ok(())
    }
}

/// Metadata of a symmetric-group conjugacy class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassData {
    pub degree: usize,
    pub cycle_type: CycleType,
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
    /// Every symmetric-group class is real: the inverse has the same type.
    pub is_real: bool,
}

pub fn class_data(degree: usize, t: &CycleType) -> Result<ClassData, PermError> {
    if t.degree() != degree {
        return Err(PermError::BadCycleType(
            t.to_string(),
            format!("type has degree {}, expected {degree}", t.degree()),
        ));
    }
    Ok(ClassData {
        degree,
        cycle_type: t.clone(),
        representative: t.canonical_representative(),
        size: t.class_size(),
        element_order: t.element_order(),
        is_real: true,
    })
}

/// Visits the elements of a conjugacy class of `S_m` in a canonical
/// deterministic order, stopping early when the visitor returns `false` or
/// after `budget` elements. Returns the number of elements visited.
///
/// Enumeration anchors each cycle at the smallest point not yet placed, so
/// every class element is produced exactly once.
pub fn for_each_class_element<F: FnMut(&Permutation) -> bool>(
    t: &CycleType,
    budget: usize,
    mut visit: F,
) -> usize {
    let m = t.degree();
    let mut remaining: BTreeMap<usize, usize> = t.parts().collect();
    let mut used = vec![false; m];
    let mut images: Vec<usize> = (0..m).collect();
    let mut count = 0usize;

    // Chooses the cycle containing the smallest unused point: pick its
    // length, then pick the rest of the cycle as an ordered arrangement of
    // unused points.
    fn rec(
        m: usize,
        remaining: &mut BTreeMap<usize, usize>,
        used: &mut Vec<bool>,
        images: &mut Vec<usize>,
        count: &mut usize,
        budget: usize,
        visit: &mut dyn FnMut(&Permutation) -> bool,
    ) -> bool {
        if *count >= budget {
            return false;
        }
        let anchor = match (0..m).find(|&x| !used[x]) {
            Some(a) => a,
            None => {
                *count += 1;
                return visit(&Permutation {
                    images: images.clone(),
                });
            }
        };
        let lengths: Vec<usize> = remaining
            .iter()
            .filter(|&(_, &n)| n > 0)
            .map(|(&j, _)| j)
            .collect();
        for len in lengths {
            *remaining.get_mut(&len).unwrap() -= 1;
            used[anchor] = true;
            let mut cycle = vec![anchor];
            if !extend_cycle(
                m, remaining, used, images, count, budget, visit, &mut cycle, len,
            ) {
                used[anchor] = false;
                *remaining.get_mut(&len).unwrap() += 1;
                return false;
            }
            used[anchor] = false;
            *remaining.get_mut(&len).unwrap() += 1;
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycle(
        m: usize,
        remaining: &mut BTreeMap<usize, usize>,
        used: &mut Vec<bool>,
        images: &mut Vec<usize>,
        count: &mut usize,
        budget: usize,
        visit: &mut dyn FnMut(&Permutation) -> bool,
        cycle: &mut Vec<usize>,
        len: usize,
    ) -> bool {
        if cycle.len() == len {
            for (pos, &pt) in cycle.iter().enumerate() {
                images[pt] = cycle[(pos + 1) % len];
            }
            let go = rec(m, remaining, used, images, count, budget, visit);
            for &pt in cycle.iter() {
                images[pt] = pt;
            }
            return go;
        }
        for x in cycle[0] + 1..m {
            if used[x] {
                continue;
            }
            used[x] = true;
            cycle.push(x);
            let go = extend_cycle(
                m, remaining, used, images, count, budget, visit, cycle, len,
            );
            cycle.pop();
            used[x] = false;
            if !go {
                return false;
            }
        }
        true
    }

    rec(
        m,
        &mut remaining,
        &mut used,
        &mut images,
        &mut count,
        budget,
        &mut visit,
    );
    count
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pc(m: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    #[test]
    fn compose_involution_is_identity() {
        let t = pc(2, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_inverse_pair() {
        let a = pc(4, &[&[1, 2, 3, 4]]);
        let b = pc(4, &[&[1, 4, 3, 2]]);
        assert!(a.compose(&b).unwrap().is_identity());
    }

    #[test]
    fn compose_hand_chase() {
        // (1 2 4 3)∘(1 3 4 2) in S_4, image chase: both orders give id.
        let a = pc(4, &[&[1, 2, 4, 3]]);
        let b = pc(4, &[&[1, 3, 4, 2]]);
        assert!(a.compose(&b).unwrap().is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.compose(&b).unwrap_err(),
            PermError::DegreeMismatch(3, 4)
        );
    }

    #[test]
    fn conjugate_three_cycle_on_transposition() {
        let a = pc(3, &[&[1, 2, 3]]);
        let b = pc(3, &[&[1, 2]]);
        assert_eq!(a.conjugate(&b).unwrap(), pc(3, &[&[2, 3]]));
    }

    #[test]
    fn conjugate_by_identity() {
        let s = pc(5, &[&[1, 4, 2]]);
        assert_eq!(Permutation::identity(5).conjugate(&s).unwrap(), s);
    }

    #[test]
    fn conjugate_relabels_cycle() {
        let a = pc(6, &[&[2, 4, 6]]);
        let b = pc(6, &[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(
            a.conjugate(&b).unwrap(),
            pc(6, &[&[1, 4, 3, 6, 5, 2]])
        );
    }

    #[test]
    fn cycle_type_reads_off_cycles() {
        assert_eq!(
            Permutation::identity(5).cycle_type(),
            CycleType::new(5, &[(1, 5)]).unwrap()
        );
        let s = pc(6, &[&[1, 2], &[3, 4, 5]]);
        assert_eq!(
            s.cycle_type(),
            CycleType::new(6, &[(1, 1), (2, 1), (3, 1)]).unwrap()
        );
        let e = pc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        assert_eq!(e.cycle_type(), CycleType::new(8, &[(8, 1)]).unwrap());
    }

    #[test]
    fn power_examples() {
        let c4 = pc(4, &[&[1, 2, 3, 4]]);
        assert_eq!(c4.power(2), pc(4, &[&[1, 3], &[2, 4]]));
        let s = pc(6, &[&[1, 2], &[3, 4, 5]]);
        assert!(s.power(s.order() as i64).is_identity());
        let c8 = pc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        assert_eq!(c8.power(3), pc(8, &[&[1, 4, 7, 2, 5, 8, 3, 6]]));
        assert_eq!(c8.power(-1), c8.inverse());
    }

    #[test]
    fn class_data_against_enumeration() {
        // Brute-force class sizes in S_6 and S_3 and S_4.
        let t = CycleType::new(6, &[(1, 1), (2, 1), (3, 1)]).unwrap();
        let d = class_data(6, &t).unwrap();
        assert_eq!(d.size, 120);
        assert_eq!(d.element_order, 6);
        assert!(d.is_real);
        let mut n = 0;
        for_each_class_element(&t, usize::MAX, |p| {
            assert_eq!(p.cycle_type(), t);
            n += 1;
            true
        });
        assert_eq!(n, 120);

        let t3 = CycleType::new(3, &[(3, 1)]).unwrap();
        assert_eq!(class_data(3, &t3).unwrap().size, 2);
        assert_eq!(class_data(3, &t3).unwrap().element_order, 3);

        let t4 = CycleType::new(4, &[(4, 1)]).unwrap();
        let d4 = class_data(4, &t4).unwrap();
        assert_eq!(d4.representative, pc(4, &[&[1, 2, 3, 4]]));
        assert_eq!(d4.size, 6);
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for m in 1..=8 {
            let total: u64 = CycleType::all_for_degree(m)
                .iter()
                .map(|t| t.class_size())
                .sum();
            assert_eq!(total, factorial(m as u64), "degree {m}");
        }
    }

    #[test]
    fn representative_has_its_type() {
        for m in 1..=8 {
            for t in CycleType::all_for_degree(m) {
                assert_eq!(t.canonical_representative().cycle_type(), t);
            }
        }
    }

    #[test]
    fn cycle_type_text_round_trip() {
        let t = CycleType::parse(6, "1,2,3").unwrap();
        assert_eq!(t.to_string(), "1,2,3");
        let t = CycleType::parse(6, "1^2,2^2").unwrap();
        assert_eq!(t.to_string(), "1^2,2^2");
        let t = CycleType::parse(8, "8").unwrap();
        assert_eq!(t.multiplicity(8), 1);
        assert!(CycleType::parse(6, "1,2").is_err());
        assert!(CycleType::parse(6, "7").is_err());
    }

    #[test]
    fn relabeling_conjugates_onto_target() {
        let a = pc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
        let b = a.power(3);
        let g = a.relabeling_onto(&b).unwrap();
        assert_eq!(g.conjugate(&a).unwrap(), b);
    }

    #[test]
    fn permutation_json_is_one_based() {
        let s = pc(3, &[&[1, 2]]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,1,3]");
        let back: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Permutation>("[2,2,3]").is_err());
    }

    fn arb_perm(m: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut v: Vec<usize> = (1..=m).collect();
            for i in (1..m).rev() {
                let j = (rng.next_u64() as usize) % (i + 1);
                v.swap(i, j);
            }
            Permutation::from_images(&v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)
        ) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn conjugation_composes(
            a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)
        ) {
            let lhs = a.conjugate(&b.conjugate(&c).unwrap()).unwrap();
            let rhs = a.compose(&b).unwrap().conjugate(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn conjugation_preserves_cycle_type(a in arb_perm(7), b in arb_perm(7)) {
            prop_assert_eq!(a.conjugate(&b).unwrap().cycle_type(), b.cycle_type());
        }

        #[test]
        fn inverse_round_trip(a in arb_perm(7)) {
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        }
    }
}
