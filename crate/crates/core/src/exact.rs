//! Exact scalar arithmetic over the rationals and prime fields GF(p), with
//! exact Gaussian elimination providing rank and kernel primitives.
//!
//! No floating point is used anywhere. Rational entries are arbitrary
//! precision; prime-field entries are residues in `[0, p)`. Rank computations
//! on integer matrices take a fraction-free `i128` path and fall back to
//! big-integer arithmetic on overflow, so results are exact in every case.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The scalar domain every matrix is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    /// Arbitrary-precision rational numbers.
    Rationals,
    /// The prime field GF(p).
    PrimeField(u64),
}

impl ScalarDomain {
    /// Builds the prime-field domain, checking primality by trial division.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Argument(format!("{p} is not prime")));
        }
        if p > (1 << 31) {
            return Err(Error::Resource(format!("prime {p} too large")));
        }
        Ok(ScalarDomain::PrimeField(p))
    }

    /// Domain for a characteristic: 0 selects the rationals, a prime selects GF(p).
    pub fn of_characteristic(ch: u64) -> Result<Self> {
        if ch == 0 {
            Ok(ScalarDomain::Rationals)
        } else {
            ScalarDomain::prime_field(ch)
        }
    }

    /// 0 for the rationals, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            ScalarDomain::Rationals => 0,
            ScalarDomain::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    /// Canonical image of an integer in the domain.
    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            ScalarDomain::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            ScalarDomain::PrimeField(p) => {
                let p = *p as i128;
                Scalar::Residue(((n as i128).rem_euclid(p)) as u64)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ScalarDomain::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (ScalarDomain::PrimeField(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + y) % p)
            }
            _ => panic!("scalar does not belong to domain"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ScalarDomain::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (ScalarDomain::PrimeField(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((((*x as u128) * (*y as u128)) % (*p as u128)) as u64)
            }
            _ => panic!("scalar does not belong to domain"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (ScalarDomain::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (ScalarDomain::PrimeField(p), Scalar::Residue(x)) => {
                Scalar::Residue(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar does not belong to domain"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (ScalarDomain::Rationals, Scalar::Rational(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rational(x.recip())
            }
            (ScalarDomain::PrimeField(p), Scalar::Residue(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Residue(mod_inverse(*x, *p))
            }
            _ => panic!("scalar does not belong to domain"),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(x) => *x == 0,
        }
    }
}

impl std::fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarDomain::Rationals => write!(f, "Q"),
            ScalarDomain::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact scalar: a reduced rational or a residue in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl Scalar {
    /// Integer value when the scalar is an integer that fits in `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(x) => {
                if x.denom().is_one() {
                    x.numer().try_into().ok()
                } else {
                    None
                }
            }
            Scalar::Residue(x) => i64::try_from(*x).ok(),
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Residue(x) => write!(f, "{x}"),
        }
    }
}

/// Dense matrix over an exact scalar domain, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    domain: ScalarDomain,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major scalar entries.
    pub fn new(domain: ScalarDomain, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Argument(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            let ok = match (&domain, e) {
                (ScalarDomain::Rationals, Scalar::Rational(_)) => true,
                (ScalarDomain::PrimeField(p), Scalar::Residue(x)) => x < p,
                _ => false,
            };
            if !ok {
                return Err(Error::Argument("entry not a valid element of the domain".into()));
            }
        }
        Ok(ExactMatrix { domain, rows, cols, entries })
    }

    /// Builds a matrix from row-major integer entries, mapped into the domain.
    pub fn from_integers(domain: ScalarDomain, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Argument(format!(
                "expected {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        let entries = data.iter().map(|&n| domain.from_integer(n)).collect();
        Ok(ExactMatrix { domain, rows, cols, entries })
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    /// The matrix column as a scalar vector.
    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    /// Returns a copy with column `c` negated.
    pub fn with_negated_column(&self, c: usize) -> ExactMatrix {
        let mut out = self.clone();
        for r in 0..self.rows {
            out.entries[r * self.cols + c] = self.domain.neg(self.entry(r, c));
        }
        out
    }

    /// Rank of the submatrix formed by the chosen columns; `rank(∅) = 0`.
    pub fn rank_of_columns(&self, columns: &[usize]) -> Result<usize> {
        for &c in columns {
            if c >= self.cols {
                return Err(Error::Argument(format!(
                    "column index {c} out of bounds (matrix has {} columns)",
                    self.cols
                )));
            }
        }
        if columns.is_empty() || self.rows == 0 {
            return Ok(0);
        }
        match self.domain {
            ScalarDomain::PrimeField(p) => Ok(self.rank_mod_p(columns, p)),
            ScalarDomain::Rationals => Ok(self.rank_rational(columns)),
        }
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.cols).collect();
        self.rank_of_columns(&all).expect("full column set is in bounds")
    }

    fn rank_mod_p(&self, columns: &[usize], p: u64) -> usize {
        let rows = self.rows;
        let mut m: Vec<Vec<u64>> = (0..rows)
            .map(|r| {
                columns
                    .iter()
                    .map(|&c| match self.entry(r, c) {
                        Scalar::Residue(x) => *x,
                        _ => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        let cols = columns.len();
        let mut rank = 0;
        for c in 0..cols {
            // first nonzero entry in column order
            let pivot = (rank..rows).find(|&r| m[r][c] != 0);
            let Some(pr) = pivot else { continue };
            m.swap(rank, pr);
            let inv = mod_inverse(m[rank][c], p);
            for j in c..cols {
                m[rank][j] = mulmod(m[rank][j], inv, p);
            }
            for r in 0..rows {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c];
                    for j in c..cols {
                        let t = mulmod(f, m[rank][j], p);
                        m[r][j] = (m[r][j] + p - t) % p;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    fn rank_rational(&self, columns: &[usize]) -> usize {
        // Clear denominators per column (column scaling preserves rank), then
        // run fraction-free elimination over i128, escalating to BigInt on
        // overflow. Entries that do not fit i64 go straight to BigInt.
        let mut int_cols: Option<Vec<Vec<i128>>> = Some(Vec::with_capacity(columns.len()));
        let mut big_cols: Vec<Vec<BigInt>> = Vec::with_capacity(columns.len());
        for &c in columns {
            let mut lcm = BigInt::one();
            for r in 0..self.rows {
                if let Scalar::Rational(x) = self.entry(r, c) {
                    lcm = num_integer::lcm(lcm, x.denom().clone());
                }
            }
            let mut big = Vec::with_capacity(self.rows);
            for r in 0..self.rows {
                if let Scalar::Rational(x) = self.entry(r, c) {
                    big.push(x.numer() * (&lcm / x.denom()));
                } else {
                    unreachable!()
                }
            }
            if let Some(ic) = int_cols.as_mut() {
                let small: Option<Vec<i128>> =
                    big.iter().map(|b| i128::try_from(b.clone()).ok()).collect();
                match small {
                    Some(v) => ic.push(v),
                    None => int_cols = None,
                }
            }
            big_cols.push(big);
        }
        if let Some(ic) = int_cols {
            let mut m: Vec<Vec<i128>> = (0..self.rows)
                .map(|r| ic.iter().map(|col| col[r]).collect())
                .collect();
            if let Some(rank) = bareiss_rank_i128(&mut m) {
                return rank;
            }
        }
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| big_cols.iter().map(|col| col[r].clone()).collect())
            .collect();
        bareiss_rank_bigint(&mut m)
    }

    /// Basis of the right null space, one vector per free column.
    ///
    /// Deterministic: pivots are the first nonzero entry in column order, so
    /// the same matrix always yields the same basis.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let d = self.domain;
        let rows = self.rows;
        let cols = self.cols;
        let mut m: Vec<Vec<Scalar>> = (0..rows)
            .map(|r| (0..cols).map(|c| self.entry(r, c).clone()).collect())
            .collect();
        // reduced row echelon form
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut rank = 0;
        for c in 0..cols {
            let pivot = (rank..rows).find(|&r| !d.is_zero(&m[r][c]));
            let Some(pr) = pivot else { continue };
            m.swap(rank, pr);
            let inv = d.inv(&m[rank][c]);
            for j in c..cols {
                m[rank][j] = d.mul(&m[rank][j], &inv);
            }
            for r in 0..rows {
                if r != rank && !d.is_zero(&m[r][c]) {
                    let f = m[r][c].clone();
                    for j in c..cols {
                        let t = d.mul(&f, &m[rank][j]);
                        m[r][j] = d.sub(&m[r][j], &t);
                    }
                }
            }
            pivot_of_col[c] = Some(rank);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![d.zero(); cols];
            v[free] = d.one();
            for c in 0..cols {
                if let Some(pr) = pivot_of_col[c] {
                    v[c] = d.neg(&m[pr][free]);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Fraction-free Bareiss elimination; returns `None` on i128 overflow or
/// inexact division so the caller can escalate to big integers.
fn bareiss_rank_i128(m: &mut [Vec<i128>]) -> Option<usize> {
    let rows = m.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = m[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&r| m[r][c] != 0);
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let a = m[rank][c].checked_mul(m[r][j])?;
                let b = m[r][c].checked_mul(m[rank][j])?;
                let num = a.checked_sub(b)?;
                if num % prev != 0 {
                    return None;
                }
                m[r][j] = num / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_rank_bigint(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&r| !m[r][c].is_zero());
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let num = &m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j];
                debug_assert!((&num % &prev).is_zero());
                m[r][j] = num / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible");
    (t.rem_euclid(p as i128)) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
