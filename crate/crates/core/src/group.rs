//! A minimal group-element abstraction shared by the family verifiers.
//!
//! Families of type `D_p`, `D_p^(2)`, `O` and `O^(2)` make sense in any
//! finite group; the verifiers only need multiplication, inversion and
//! conjugation. Implementors: [`crate::perm::Permutation`] and
//! [`crate::matgrp::PrimeFieldMatrix`].

use std::fmt::Debug;
use std::hash::Hash;

pub trait GroupElement: Clone + Eq + Hash + Debug {
    /// True when `self` and `other` live in the same group (equal degree,
    /// equal field and dimension, ...). Operations panic on incompatible
    /// arguments; verifiers check compatibility up front and report it as
    /// an ordinary error.
    fn compatible(&self, other: &Self) -> bool;

    /// The identity of the group containing `self`.
    fn identity_like(&self) -> Self;

    /// Group multiplication. Panics if the arguments are incompatible.
    fn op(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    fn order(&self) -> u64;

    /// Conjugation `self ▷ y = self · y · self^{-1}`.
    fn conj(&self, y: &Self) -> Self {
        self.op(y).op(&self.inverse())
    }

    /// `self^k` for any integer `k`, reduced modulo the element order.
    fn int_pow(&self, k: i64) -> Self {
        let ord = self.order() as i64;
        let mut e = k.rem_euclid(ord) as u64;
        let mut base = self.clone();
        let mut acc = self.identity_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&base);
            }
            base = base.op(&base);
            e >>= 1;
        }
        acc
    }
}

impl GroupElement for crate::perm::Permutation {
    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.degree())
    }

    fn op(&self, other: &Self) -> Self {
        self.compose(other).expect("incompatible degrees")
    }

    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }

    fn order(&self) -> u64 {
        Permutation::order(self)
    }

    fn conj(&self, y: &Self) -> Self {
        self.conjugate(y).expect("incompatible degrees")
    }
}

use crate::perm::Permutation;

/// All elements pairwise compatible (and nonempty slices share a group).
pub fn all_compatible<G: GroupElement>(elems: &[G]) -> bool {
    match elems.split_first() {
        Some((first, rest)) => rest.iter().all(|e| first.compatible(e)),
        None => true,
    }
}
