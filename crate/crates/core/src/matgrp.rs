//! Invertible matrices over prime fields `GF(p)` and the determinant
//! characters of `GL(N, F_p)`.
//!
//! Only prime moduli are supported: every construction realized here is
//! already realizable at a prime `p ≡ 1 (mod 3)`, so extension fields add
//! no coverage. Characters are held as an exponent twist `h` against an
//! explicit generator of `GF(p)^×` with a precomputed discrete-log table,
//! keeping every value an exact root of unity.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dtype::{self, Dp2Family, DpFamily, FamilyError};
use crate::group::GroupElement;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("entry {0} not reduced mod {1}")]
    EntryOutOfRange(u64, u64),
    #[error("matrix is singular")]
    Singular,
    #[error("{0} is not a primitive cube root of unity mod {1}")]
    NotPrimitiveCubeRoot(u64, u64),
    #[error("modulus {0} exceeds the discrete-log table guard {1}")]
    ModulusTooLarge(u64, u64),
    #[error("{0} does not generate GF({1})^x")]
    NotAGenerator(u64, u64),
    #[error("p = 2 admits no character value -1 distinct from 1")]
    NoMinusOne,
    #[error("characteristic polynomial needs p > n, got p = {0}, n = {1}")]
    FieldTooSmall(u64, usize),
    #[error("family hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    mod_pow(a, p - 2, p)
}

/// An element of `GL(n, F_p)`, entries reduced mod `p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    p: u64,
    n: usize,
    entries: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn new(p: u64, rows: &[Vec<u64>]) -> Result<Self, MatError> {
        if !is_prime(p) {
            return Err(MatError::NotPrime(p));
        }
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatError::DimensionMismatch(row.len(), n));
            }
            for &e in row {
                if e >= p {
                    return Err(MatError::EntryOutOfRange(e, p));
                }
                entries.push(e);
            }
        }
        Ok(PrimeFieldMatrix { p, n, entries })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self, MatError> {
        if !is_prime(p) {
            return Err(MatError::NotPrime(p));
        }
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Ok(PrimeFieldMatrix { p, n, entries })
    }

    pub fn diagonal(p: u64, diag: &[u64]) -> Result<Self, MatError> {
        let n = diag.len();
        let mut m = Self::identity(p, n)?;
        for (i, &d) in diag.iter().enumerate() {
            if d >= p {
                return Err(MatError::EntryOutOfRange(d, p));
            }
            m.entries[i * n + i] = d;
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatError> {
        if self.p != other.p {
            return Err(MatError::ModulusMismatch(self.p, other.p));
        }
        if self.n != other.n {
            return Err(MatError::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let p = self.p;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] =
                        (entries[i * n + j] + a * other.entries[k * n + j]) % p;
                }
            }
        }
        Ok(PrimeFieldMatrix { p, n, entries })
    }

    pub fn det(&self) -> u64 {
        let n = self.n;
        let p = self.p;
        let mut a = self.entries.clone();
        let mut det = 1u64;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0);
            let pivot = match pivot {
                Some(r) => r,
                None => return 0,
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = mod_inv(pv, p);
            for r in col + 1..n {
                let factor = a[r * n + col] * inv % p;
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = factor * a[col * n + j] % p;
                    a[r * n + j] = (a[r * n + j] + p - sub) % p;
                }
            }
        }
        det
    }

    pub fn mat_inv(&self) -> Result<Self, MatError> {
        let n = self.n;
        let p = self.p;
        let mut a = self.entries.clone();
        let mut b = Self::identity(p, n)?.entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r * n + col] != 0)
                .ok_or(MatError::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    b.swap(pivot * n + j, col * n + j);
                }
            }
            let inv = mod_inv(a[col * n + col], p);
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * inv % p;
                b[col * n + j] = b[col * n + j] * inv % p;
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    let s1 = factor * a[col * n + j] % p;
                    let s2 = factor * b[col * n + j] % p;
                    a[r * n + j] = (a[r * n + j] + p - s1) % p;
                    b[r * n + j] = (b[r * n + j] + p - s2) % p;
                }
            }
        }
        Ok(PrimeFieldMatrix { p, n, entries: b })
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(idx, &e)| e == u64::from(idx / self.n == idx % self.n))
    }

    pub fn scalar_mul(&self, c: u64) -> Self {
        PrimeFieldMatrix {
            p: self.p,
            n: self.n,
            entries: self.entries.iter().map(|&e| e * (c % self.p) % self.p).collect(),
        }
    }

    /// Coefficients of `det(tI - A)` from constant term up to `t^n`
    /// (leading coefficient 1), computed by evaluation and Lagrange
    /// interpolation; requires `p > n`.
    pub fn char_poly(&self) -> Result<Vec<u64>, MatError> {
        let n = self.n;
        let p = self.p;
        if p <= n as u64 {
            return Err(MatError::FieldTooSmall(p, n));
        }
        let points: Vec<u64> = (0..=n as u64).collect();
        let values: Vec<u64> = points
            .iter()
            .map(|&t| {
                let mut m = self.clone();
                for e in m.entries.iter_mut() {
                    *e = (p - *e) % p; // -A
                }
                for i in 0..n {
                    m.entries[i * n + i] = (m.entries[i * n + i] + t) % p; // tI - A
                }
                m.det()
            })
            .collect();
        // Lagrange interpolation of the degree-n polynomial through the points.
        let mut coeffs = vec![0u64; n + 1];
        for (i, (&xi, &yi)) in points.iter().zip(values.iter()).enumerate() {
            let mut basis = vec![0u64; n + 1];
            basis[0] = 1;
            let mut deg = 0;
            let mut denom = 1u64;
            for (j, &xj) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                // multiply basis by (t - xj)
                deg += 1;
                for k in (1..=deg).rev() {
                    basis[k] = (basis[k] * (p - xj % p) + basis[k - 1]) % p;
                }
                basis[0] = basis[0] * (p - xj % p) % p;
                denom = denom * ((xi + p - xj) % p) % p;
            }
            let scale = yi * mod_inv(denom, p) % p;
            for k in 0..=n {
                coeffs[k] = (coeffs[k] + basis[k] * scale) % p;
            }
        }
        Ok(coeffs)
    }
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod {}", self.p)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl Serialize for PrimeFieldMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            p: self.p,
            n: self.n,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PrimeFieldMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.rows.len() != raw.n {
            return Err(D::Error::custom(format!(
                "expected {} rows, got {}",
                raw.n,
                raw.rows.len()
            )));
        }
        PrimeFieldMatrix::new(raw.p, &raw.rows).map_err(D::Error::custom)
    }
}

const ORDER_CAP: u64 = 1 << 24;

impl GroupElement for PrimeFieldMatrix {
    fn compatible(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.p, self.n).expect("modulus validated at construction")
    }

    fn op(&self, other: &Self) -> Self {
        self.mat_mul(other).expect("incompatible matrices")
    }

    fn inverse(&self) -> Self {
        self.mat_inv().expect("group element is invertible")
    }

    fn order(&self) -> u64 {
        let mut acc = self.clone();
        for k in 1..ORDER_CAP {
            if acc.is_identity() {
                return k;
            }
            acc = acc.op(self);
        }
        panic!("element order exceeds cap {ORDER_CAP}");
    }

    fn int_pow(&self, k: i64) -> Self {
        // avoid the order computation of the default implementation
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut b = base;
        let mut acc = self.identity_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&b);
            }
            b = b.op(&b);
            e >>= 1;
        }
        acc
    }
}

/// Smallest generator of `GF(p)^×`.
pub fn smallest_primitive_root(p: u64) -> Result<u64, MatError> {
    if !is_prime(p) {
        return Err(MatError::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    for g in 2..p {
        if factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1) {
            return Ok(g);
        }
    }
    Err(MatError::NotAGenerator(0, p))
}

/// Smallest primitive cube root of unity mod `p`; requires `3 | p-1`.
pub fn primitive_cube_root(p: u64) -> Result<u64, MatError> {
    if !is_prime(p) {
        return Err(MatError::NotPrime(p));
    }
    if (p - 1) % 3 != 0 {
        return Err(MatError::Hypothesis(format!("3 does not divide {p}-1")));
    }
    (2..p)
        .find(|&w| mod_pow(w, 3, p) == 1 && w != 1)
        .ok_or(MatError::NotPrimitiveCubeRoot(0, p))
}

const DLOG_GUARD: u64 = 10_000;

/// The character `A ↦ φ(det A)^h` of `GL(N, F_p)`, where `φ` identifies
/// `GF(p)^×` with the `(p-1)`-th roots of unity via a chosen generator.
/// The generator choice is part of the data and is recorded in
/// certificates; there is no canonical choice.
#[derive(Clone, Debug)]
pub struct DetCharacter {
    p: u64,
    generator: u64,
    h: i64,
    logs: Vec<u64>, // logs[x-1] = dlog_generator(x) for x in 1..p
}

impl DetCharacter {
    pub fn new(p: u64, generator: u64, h: i64) -> Result<Self, MatError> {
        if !is_prime(p) {
            return Err(MatError::NotPrime(p));
        }
        if p == 2 {
            return Err(MatError::NoMinusOne);
        }
        if p > DLOG_GUARD {
            return Err(MatError::ModulusTooLarge(p, DLOG_GUARD));
        }
        let mut logs = vec![u64::MAX; (p - 1) as usize];
        let mut x = 1u64;
        for e in 0..p - 1 {
            if logs[(x - 1) as usize] != u64::MAX {
                return Err(MatError::NotAGenerator(generator, p));
            }
            logs[(x - 1) as usize] = e;
            x = x * generator % p;
        }
        Ok(DetCharacter {
            p,
            generator,
            h,
            logs,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn twist(&self) -> i64 {
        self.h
    }

    /// Exponent of the character value in `Z/(p-1)`; the value is `-1`
    /// exactly when the exponent is `(p-1)/2`.
    pub fn value_exponent(&self, a: &PrimeFieldMatrix) -> Result<u64, MatError> {
        if a.modulus() != self.p {
            return Err(MatError::ModulusMismatch(a.modulus(), self.p));
        }
        let d = a.det();
        if d == 0 {
            return Err(MatError::Singular);
        }
        let m = (self.p - 1) as i64;
        let log = self.logs[(d - 1) as usize] as i64;
        Ok((self.h.rem_euclid(m) * log).rem_euclid(m) as u64)
    }

    pub fn value(&self, a: &PrimeFieldMatrix) -> Result<crate::braided::RootOfUnity, MatError> {
        Ok(crate::braided::RootOfUnity::new(
            self.p - 1,
            self.value_exponent(a)?,
        ))
    }
}

/// The three matrices `μ_i` with rows `(0, ω^i)` and `(ω^{2i}·c, 0)`: a
/// family of type `D_3` in `GL(2, F_p)`, inside `SL(2, F_p)` when `c = -1`.
pub fn gl2_d3_family(
    p: u64,
    omega: u64,
    c: u64,
) -> Result<DpFamily<PrimeFieldMatrix>, MatError> {
    if !is_prime(p) {
        return Err(MatError::NotPrime(p));
    }
    let omega = omega % p;
    if mod_pow(omega, 3, p) != 1 || omega == 1 {
        return Err(MatError::NotPrimitiveCubeRoot(omega, p));
    }
    let c = c % p;
    if c == 0 {
        return Err(MatError::Hypothesis("c must be nonzero".into()));
    }
    let members: Vec<PrimeFieldMatrix> = (0..3)
        .map(|i| {
            let wi = mod_pow(omega, i, p);
            let w2i = mod_pow(omega, 2 * i, p);
            PrimeFieldMatrix::new(p, &[vec![0, wi], vec![w2i * c % p, 0]])
        })
        .collect::<Result<_, _>>()?;
    Ok(dtype::verify_dp(members, 3)?)
}

/// The block families `σ_i`, `τ_i` of type `D_3^(2)` in `GL(N, F_p)` built
/// from a diagonal `λ` with `λ_1 = -λ_2` and `λ_3 ≠ λ_4`, together with
/// the involutive transporter swapping coordinates 3 and 4.
pub fn gln_d3sq_family(
    p: u64,
    omega: u64,
    lambda: &[u64],
) -> Result<Dp2Family<PrimeFieldMatrix>, MatError> {
    if !is_prime(p) {
        return Err(MatError::NotPrime(p));
    }
    let n = lambda.len();
    if n <= 3 {
        return Err(MatError::Hypothesis(format!(
            "need N > 3 diagonal entries, got {n}"
        )));
    }
    for &l in lambda {
        if l == 0 {
            return Err(MatError::Hypothesis("lambda must be invertible".into()));
        }
        if l >= p {
            return Err(MatError::EntryOutOfRange(l, p));
        }
    }
    if (lambda[0] + lambda[1]) % p != 0 {
        return Err(MatError::Hypothesis("need lambda_1 = -lambda_2".into()));
    }
    if lambda[2] == lambda[3] {
        return Err(MatError::Hypothesis(
            "need lambda_3 != lambda_4 (positions normalized)".into(),
        ));
    }
    let omega = omega % p;
    if mod_pow(omega, 3, p) != 1 || omega == 1 {
        return Err(MatError::NotPrimitiveCubeRoot(omega, p));
    }
    let c = lambda[0] * lambda[0] % p;

    let block_family = |tail: &[u64]| -> Result<Vec<PrimeFieldMatrix>, MatError> {
        (0..3)
            .map(|i| {
                let wi = mod_pow(omega, i, p);
                let w2i = mod_pow(omega, 2 * i, p);
                let mut rows = vec![vec![0u64; n]; n];
                rows[0][1] = wi;
                rows[1][0] = w2i * c % p;
                for (k, &t) in tail.iter().enumerate() {
                    rows[k + 2][k + 2] = t;
                }
                PrimeFieldMatrix::new(p, &rows)
            })
            .collect()
    };

    let tail_sigma: Vec<u64> = lambda[2..].to_vec();
    let mut tail_tau = tail_sigma.clone();
    tail_tau.swap(0, 1);
    let sigma = block_family(&tail_sigma)?;
    let tau = block_family(&tail_tau)?;

    let mut g_rows = vec![vec![0u64; n]; n];
    g_rows[0][0] = 1;
    g_rows[1][1] = 1;
    g_rows[2][3] = 1;
    g_rows[3][2] = 1;
    for i in 4..n {
        g_rows[i][i] = 1;
    }
    let g = PrimeFieldMatrix::new(p, &g_rows)?;

    let mu = dtype::verify_dp(sigma, 3)?;
    let nu = dtype::verify_dp(tau, 3)?;
    Ok(dtype::verify_dp2(mu, nu, Some(g))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, rows: &[Vec<u64>]) -> PrimeFieldMatrix {
        PrimeFieldMatrix::new(p, rows).unwrap()
    }

    #[test]
    fn mul_and_inverse() {
        let a = m(7, &[vec![0, 1], vec![6, 0]]);
        let sq = a.mat_mul(&a).unwrap();
        assert_eq!(sq, m(7, &[vec![6, 0], vec![0, 6]]));
        let id = PrimeFieldMatrix::identity(7, 2).unwrap();
        assert_eq!(id.mat_mul(&a).unwrap(), a);
        assert_eq!(a.mat_mul(&a.mat_inv().unwrap()).unwrap(), id);
    }

    #[test]
    fn det_and_char_poly() {
        let a = m(7, &[vec![0, 1], vec![6, 0]]);
        assert_eq!(a.det(), 1); // -6 = 1 mod 7
        // char poly of mu_0 with c = -1: T^2 + 1 = T^2 - c
        assert_eq!(a.char_poly().unwrap(), vec![1, 0, 1]);
        let d = PrimeFieldMatrix::diagonal(7, &[1, 6, 2, 3]).unwrap();
        assert_eq!(d.det(), 36 % 7);
    }

    #[test]
    fn singular_inverse_fails() {
        let a = m(5, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(a.det(), 0);
        assert_eq!(a.mat_inv().unwrap_err(), MatError::Singular);
    }

    #[test]
    fn det_character_table() {
        let chi = DetCharacter::new(7, 3, 3).unwrap();
        // dlog_3: 3^0=1, 3^1=3, 3^2=2, 3^3=6, 3^4=4, 3^5=5
        let a = PrimeFieldMatrix::diagonal(7, &[1, 6, 2, 3]).unwrap();
        // det = 36 = 1 mod 7, dlog(1) = 0 -> exponent 0: criterion not met
        assert_eq!(chi.value_exponent(&a).unwrap(), 0);
        assert!(chi.value(&a).unwrap().is_one());

        let trivial = DetCharacter::new(7, 3, 0).unwrap();
        for d in [[1, 2], [3, 4], [5, 6]] {
            let a = PrimeFieldMatrix::diagonal(7, &d.map(u64::from)).unwrap();
            assert_eq!(trivial.value_exponent(&a).unwrap(), 0);
        }

        // 2 is not a generator mod 7 (order 3)
        assert!(DetCharacter::new(7, 2, 1).is_err());
    }

    #[test]
    fn det_character_multiplicative() {
        let chi = DetCharacter::new(7, 3, 2).unwrap();
        let a = m(7, &[vec![1, 2], vec![3, 4]]);
        let b = m(7, &[vec![0, 1], vec![6, 0]]);
        let ab = a.mat_mul(&b).unwrap();
        let ea = chi.value_exponent(&a).unwrap();
        let eb = chi.value_exponent(&b).unwrap();
        assert_eq!(chi.value_exponent(&ab).unwrap(), (ea + eb) % 6);
    }

    #[test]
    fn gl2_family_examples() {
        // p=7, omega=2, c=-1: lands in SL(2,F_7)
        let fam = gl2_d3_family(7, 2, 6).unwrap();
        for mu in fam.members() {
            assert_eq!(mu.det(), 1);
        }
        // c=1 keeps minimal polynomial T^2-1
        let fam = gl2_d3_family(7, 2, 1).unwrap();
        for mu in fam.members() {
            assert_eq!(mu.char_poly().unwrap(), vec![6, 0, 1]); // T^2 - 1
        }
        // p=13, omega=3 (3^3=27=1 mod 13), c=2
        let fam = gl2_d3_family(13, 3, 2).unwrap();
        assert_eq!(fam.members().len(), 3);

        assert!(gl2_d3_family(7, 3, 1).is_err()); // 3^3 = 6 mod 7
        assert!(gl2_d3_family(7, 2, 0).is_err());
    }

    #[test]
    fn gln_family_examples() {
        let fam = gln_d3sq_family(7, 2, &[1, 6, 2, 3]).unwrap();
        let g = fam.transporter().unwrap();
        assert!(g.op(g).is_identity());
        // same-orbit necessary condition: equal characteristic polynomials
        let cp = fam.mu().members()[0].char_poly().unwrap();
        for mem in fam.mu().members().iter().chain(fam.nu().members()) {
            assert_eq!(mem.char_poly().unwrap(), cp);
        }

        assert!(gln_d3sq_family(7, 2, &[1, 6, 2, 2]).is_err());
        let fam = gln_d3sq_family(7, 2, &[2, 5, 1, 3]).unwrap();
        // c = lambda_1^2 = 4 sits in the corner product
        assert_eq!(fam.mu().members()[0].get(1, 0), 4);
    }
}
