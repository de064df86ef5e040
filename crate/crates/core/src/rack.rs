//! Finite racks as dense multiplication tables.
//!
//! A rack is a set with a product `▷` whose left translations
//! `φ_i = i ▷ -` are bijections and which is left self-distributive:
//! `i▷(j▷k) = (i▷j)▷(i▷k)`. Conjugation `x ▷ y = x y x^{-1}` makes any
//! group a rack; the named constructions here are the dihedral squares
//! `X_n`, the octahedral rack, and the square `X^(2)` of an arbitrary
//! rack.
//!
//! Tables are 0-indexed internally; display labels carry the customary
//! names (`s_i`/`t_j`, `1..6`, `x_i`/`y_i`).

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::GroupElement;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RackError {
    #[error("table is not square: row {0} has length {1}, expected {2}")]
    NotSquare(usize, usize, usize),
    #[error("table entry {0}▷{1} = {2} out of range")]
    EntryOutOfRange(usize, usize, usize),
    #[error("{0} labels for a table of size {1}")]
    LabelMismatch(usize, usize),
    #[error("dihedral square rack needs odd n > 1, got {0}")]
    BadDihedralOrder(usize),
    #[error("closure exceeded bound {0}")]
    ClosureBoundExceeded(usize),
    #[error("elements are not closed under conjugation: index {0} ▷ index {1} is outside the set")]
    NotClosed(usize, usize),
    #[error("isomorphism search limited to size {0}, got {1}")]
    SizeGuard(usize, usize),
    #[error("morphism has wrong length {0}, expected {1}")]
    MorphismLength(usize, usize),
}

/// First rack-axiom failure found by [`RackTable::check`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RackViolation {
    #[error("row {row} is not a bijection: value {value} repeated")]
    RowNotBijective { row: usize, value: usize },
    #[error("self-distributivity fails at ({i},{j},{k}): {i}▷({j}▷{k}) = {left}, ({i}▷{j})▷({i}▷{k}) = {right}")]
    SelfDistributivity {
        i: usize,
        j: usize,
        k: usize,
        left: usize,
        right: usize,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RackTable {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl RackTable {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, RackError> {
        let n = table.len();
        if labels.len() != n {
            return Err(RackError::LabelMismatch(labels.len(), n));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(RackError::NotSquare(i, row.len(), n));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(RackError::EntryOutOfRange(i, j, v));
                }
            }
        }
        Ok(RackTable { labels, table })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `i ▷ j`.
    pub fn apply(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Both rack axioms on the full table; reports the first failure.
    pub fn check(&self) -> Result<(), RackViolation> {
        let n = self.size();
        for (i, row) in self.table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in row {
                if seen[v] {
                    return Err(RackViolation::RowNotBijective { row: i, value: v });
                }
                seen[v] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.apply(i, self.apply(j, k));
                    let right = self.apply(self.apply(i, j), self.apply(i, k));
                    if left != right {
                        return Err(RackViolation::SelfDistributivity {
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

    /// The trivial rack on `n` elements: `i ▷ j = j`.
    pub fn trivial(n: usize) -> Self {
        RackTable {
            labels: (1..=n).map(|i| format!("e{i}")).collect(),
            table: (0..n).map(|_| (0..n).collect()).collect(),
        }
    }

    /// Per-element invariants used to prune isomorphism search: the sorted
    /// cycle structure of `φ_i`, whether `i▷i = i`, and how many `j` fix `i`.
    fn profile(&self, i: usize) -> (Vec<usize>, bool, usize) {
        let n = self.size();
        let row = &self.table[i];
        let mut seen = vec![false; n];
        let mut cycle_lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = row[x];
            }
            cycle_lengths.push(len);
        }
        cycle_lengths.sort_unstable();
        let fixed_by = (0..n).filter(|&j| self.apply(j, i) == i).count();
        (cycle_lengths, self.apply(i, i) == i, fixed_by)
    }
}

/// The rack `X_n` on `2n` elements `s_0..s_{n-1}, t_0..t_{n-1}` with
/// `s_i ▷ s_j = s_{2i-j}`, `s_i ▷ t_j = t_{2i-j}`, `t_i ▷ s_j = s_{2i-j}`,
/// `t_i ▷ t_j = t_{2i-j}` (indices mod `n`). Requires `n` odd, `n > 1`.
pub fn dihedral_square_rack(n: usize) -> Result<RackTable, RackError> {
    if n <= 1 || n % 2 == 0 {
        return Err(RackError::BadDihedralOrder(n));
    }
    let mut labels = Vec::with_capacity(2 * n);
    for i in 0..n {
        labels.push(format!("s{i}"));
    }
    for i in 0..n {
        labels.push(format!("t{i}"));
    }
    let idx = |copy: usize, v: usize| copy * n + v;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for ci in 0..2 {
        for i in 0..n {
            for cj in 0..2 {
                for j in 0..n {
                    let v = (2 * i + n - j % n) % n; // 2i - j mod n
                    table[idx(ci, i)][idx(cj, j)] = idx(cj, v);
                }
            }
        }
    }
    RackTable::new(labels, table)
}

/// The 6-element octahedral rack, entered verbatim as a table. Row `i`,
/// column `j` holds `i ▷ j` (1-based labels `1..6`).
pub fn octahedral_rack() -> RackTable {
    static TABLE: OnceLock<RackTable> = OnceLock::new();
    TABLE
        .get_or_init(|| {
            let rows_one_based = [
                [1, 5, 2, 3, 4, 6],
                [3, 2, 6, 4, 1, 5],
                [4, 1, 3, 6, 5, 2],
                [5, 2, 1, 4, 6, 3],
                [2, 6, 3, 1, 5, 4],
                [1, 3, 4, 5, 2, 6],
            ];
            let table = rows_one_based
                .iter()
                .map(|row| row.iter().map(|&v| v - 1).collect())
                .collect();
            let labels = (1..=6).map(|i| i.to_string()).collect();
            RackTable::new(labels, table).expect("table is well formed")
        })
        .clone()
}

/// The square `X^(2)`: two disjoint copies of `X` with
/// `φ_i(x) ▷ φ_j(y) = φ_j(x ▷ y)` — the result stays in the copy of the
/// right operand.
pub fn square_rack(x: &RackTable) -> RackTable {
    let n = x.size();
    let mut labels = Vec::with_capacity(2 * n);
    for i in 0..n {
        labels.push(format!("x:{}", x.label(i)));
    }
    for i in 0..n {
        labels.push(format!("y:{}", x.label(i)));
    }
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for ci in 0..2 {
        for i in 0..n {
            for cj in 0..2 {
                for j in 0..n {
                    table[ci * n + i][cj * n + j] = cj * n + x.apply(i, j);
                }
            }
        }
    }
    RackTable::new(labels, table).expect("square of a valid table is well formed")
}

/// Least superset of `seeds` closed under conjugation `a ▷ b`, or an error
/// if it would exceed `bound` elements. Output order is deterministic:
/// seeds first, then new elements in discovery order.
pub fn conjugation_closure<G: GroupElement>(
    seeds: &[G],
    bound: usize,
) -> Result<Vec<G>, RackError> {
    let mut elems: Vec<G> = Vec::new();
    let mut index: HashMap<G, usize> = HashMap::new();
    for s in seeds {
        if !index.contains_key(s) {
            index.insert(s.clone(), elems.len());
            elems.push(s.clone());
        }
    }
    if elems.len() > bound {
        return Err(RackError::ClosureBoundExceeded(bound));
    }
    let mut frontier = 0usize;
    while frontier < elems.len() {
        let a = elems[frontier].clone();
        let mut i = 0;
        while i < elems.len() {
            let e = elems[i].clone();
            for z in [a.conj(&e), e.conj(&a)] {
                if !index.contains_key(&z) {
                    if elems.len() == bound {
                        return Err(RackError::ClosureBoundExceeded(bound));
                    }
                    index.insert(z.clone(), elems.len());
                    elems.push(z);
                }
            }
            i += 1;
        }
        frontier += 1;
    }
    Ok(elems)
}

/// The conjugation rack on an explicit, `▷`-closed list of group elements.
/// Labels are the elements' display forms.
pub fn rack_from_elements<G: GroupElement + std::fmt::Display>(
    elems: &[G],
) -> Result<RackTable, RackError> {
    let index: HashMap<&G, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elems.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let z = elems[i].conj(&elems[j]);
            match index.get(&z) {
                Some(&h) => table[i][j] = h,
                None => return Err(RackError::NotClosed(i, j)),
            }
        }
    }
    let labels = elems.iter().map(|e| e.to_string()).collect();
    RackTable::new(labels, table)
}

/// A map of rack indices; bijective when produced by the isomorphism
/// search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackMorphism {
    pub map: Vec<usize>,
}

impl RackMorphism {
    pub fn is_morphism(&self, source: &RackTable, target: &RackTable) -> bool {
        if self.map.len() != source.size() || self.map.iter().any(|&v| v >= target.size()) {
            return false;
        }
        for i in 0..source.size() {
            for j in 0..source.size() {
                if self.map[source.apply(i, j)] != target.apply(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_isomorphism(&self, source: &RackTable, target: &RackTable) -> bool {
        if source.size() != target.size() {
            return false;
        }
        let distinct: HashSet<usize> = self.map.iter().copied().collect();
        distinct.len() == self.map.len() && self.is_morphism(source, target)
    }
}

const ISO_SIZE_GUARD: usize = 24;

/// Backtracking isomorphism search with per-element profile pruning.
/// Returns `Ok(None)` when the racks are provably non-isomorphic.
pub fn find_isomorphism(
    x: &RackTable,
    y: &RackTable,
) -> Result<Option<RackMorphism>, RackError> {
    if x.size() > ISO_SIZE_GUARD || y.size() > ISO_SIZE_GUARD {
        return Err(RackError::SizeGuard(ISO_SIZE_GUARD, x.size().max(y.size())));
    }
    if x.size() != y.size() {
        return Ok(None);
    }
    let n = x.size();
    let px: Vec<_> = (0..n).map(|i| x.profile(i)).collect();
    let py: Vec<_> = (0..n).map(|i| y.profile(i)).collect();
    {
        let mut sx = px.clone();
        let mut sy = py.clone();
        sx.sort();
        sy.sort();
        if sx != sy {
            return Ok(None);
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(x: &RackTable, y: &RackTable, map: &[usize], new: usize) -> bool {
        for a in 0..x.size() {
            if map[a] == usize::MAX {
                continue;
            }
            for (i, j) in [(a, new), (new, a), (new, new)] {
                let prod = x.apply(i, j);
                if map[prod] != usize::MAX && y.apply(map[i], map[j]) != map[prod] {
                    return false;
                }
            }
        }
        true
    }

    fn backtrack(
        x: &RackTable,
        y: &RackTable,
        px: &[(Vec<usize>, bool, usize)],
        py: &[(Vec<usize>, bool, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        if depth == x.size() {
            return true;
        }
        for cand in 0..y.size() {
            if used[cand] || px[depth] != py[cand] {
                continue;
            }
            map[depth] = cand;
            used[cand] = true;
            if consistent(x, y, map, depth)
                && backtrack(x, y, px, py, map, used, depth + 1)
            {
                return true;
            }
            map[depth] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    if backtrack(x, y, &px, &py, &mut map, &mut used, 0) {
        let m = RackMorphism { map };
        debug_assert!(m.is_isomorphism(x, y));
        Ok(Some(m))
    } else {
        Ok(None)
    }
}

/// True when `k ▷ l = l` for all pairs in `subset` (such a subset is
/// automatically closed under `▷`).
pub fn is_abelian_subrack(t: &RackTable, subset: &[usize]) -> bool {
    subset
        .iter()
        .all(|&k| subset.iter().all(|&l| t.apply(k, l) == l))
}
