//! Exact integer polynomials in `q`, truncated power series and rational
//! generating functions whose denominators are products of `(1 - q^e)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`; trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^exp`.
    pub fn monomial(c: i64, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `1 - q^e`.
    pub fn one_minus_q_pow(e: usize) -> Self {
        &Self::one() - &Self::monomial(1, e)
    }

    /// `q^lo + q^(lo+1) + ... + q^hi`; zero when `lo > hi`.
    pub fn geometric_run(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); hi + 1];
        for c in &mut coeffs[lo..] {
            *c = BigInt::one();
        }
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn shift(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Quotient of an exact division; fails unless the remainder is zero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor.coeffs.last().ok_or(Error::InexactDivision)?;
        let dd = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Gaussian binomial `[n choose k]_q` via the q-Pascal recurrence
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> Result<IntPolynomial> {
    if k > n {
        return Err(Error::BadArguments(alloc::format!(
            "gaussian binomial needs 0 <= k <= n (got n = {n}, k = {k})"
        )));
    }
    // row[j] holds [i choose j]_q
    let mut row: Vec<IntPolynomial> = vec![IntPolynomial::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let poly = if j == 0 || j == i {
                IntPolynomial::one()
            } else {
                &row[j - 1] + &row[j].shift(j)
            };
            next.push(poly);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binom(a + b, a) / (a + b)`; the division is checked to be exact.
pub fn rational_catalan(a: u64, b: u64) -> Result<BigUint> {
    if a == 0 || b == 0 {
        return Err(Error::BadArguments(
            "rational catalan needs positive a, b".into(),
        ));
    }
    let (q, r) = binomial(a + b, a).div_rem(&BigUint::from(a + b));
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

/// Power series coefficients up to and including `q^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesTruncation {
    coeffs: Vec<BigInt>,
}

impl SeriesTruncation {
    /// Panics on an empty coefficient list: a truncation has at least order 0.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "series truncation needs order >= 0");
        SeriesTruncation { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    /// Smallest index from which every coefficient equals the last one.
    pub fn tail_onset(&self) -> usize {
        let last = self.coeffs.last().expect("non-empty");
        let mut k = self.coeffs.len() - 1;
        while k > 0 && &self.coeffs[k - 1] == last {
            k -= 1;
        }
        k
    }

    /// Recovers `f` with `series = f / (1 - q)`.
    ///
    /// The tail must be constant over at least `window` trailing terms;
    /// `f` is `(1 - q) * series` cut at the tail onset.
    pub fn extract_numerator(&self, window: usize) -> Result<Numerator> {
        let onset = self.tail_onset();
        if self.coeffs.len() - onset < window.max(1) {
            return Err(Error::NotStabilized { window });
        }
        let f: Vec<BigInt> = (0..=onset)
            .map(|i| {
                if i == 0 {
                    self.coeffs[0].clone()
                } else {
                    &self.coeffs[i] - &self.coeffs[i - 1]
                }
            })
            .collect();
        let f = IntPolynomial::new(f);
        let series_degree = f.degree().map(|d| d as i64 - 1);
        Ok(Numerator {
            f,
            onset,
            series_degree,
        })
    }
}

/// Result of [`SeriesTruncation::extract_numerator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numerator {
    pub f: IntPolynomial,
    /// First index of the constant tail.
    pub onset: usize,
    /// `deg f - 1`; `None` when `f` is zero.
    pub series_degree: Option<i64>,
}

/// `numerator / prod (1 - q^e)` over the listed exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfRational {
    pub numerator: IntPolynomial,
    pub denominator_factors: Vec<usize>,
}

impl GfRational {
    pub fn new(numerator: IntPolynomial, denominator_factors: Vec<usize>) -> Result<Self> {
        if denominator_factors.contains(&0) {
            return Err(Error::BadArguments(
                "denominator factor 1 - q^0 vanishes".into(),
            ));
        }
        Ok(GfRational {
            numerator,
            denominator_factors,
        })
    }

    pub fn polynomial(numerator: IntPolynomial) -> Self {
        GfRational {
            numerator,
            denominator_factors: Vec::new(),
        }
    }

    /// Series coefficients through `q^order`; each `1/(1 - q^e)` is a
    /// running sum with stride `e`.
    pub fn expand(&self, order: usize) -> SeriesTruncation {
        let mut c: Vec<BigInt> = (0..=order).map(|i| self.numerator.coeff(i)).collect();
        for &e in &self.denominator_factors {
            for i in e..=order {
                let prev = c[i - e].clone();
                c[i] += prev;
            }
        }
        SeriesTruncation::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn ring_ops() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&IntPolynomial::zero() + &p(&[3, 0, 2]), p(&[3, 0, 2]));
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPolynomial::zero());
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[0, 4]).degree(), Some(1));
    }

    #[test]
    fn exact_division() {
        let q = IntPolynomial::one_minus_q_pow(6)
            .exact_div(&IntPolynomial::one_minus_q_pow(2))
            .unwrap();
        assert_eq!(q, p(&[1, 0, 1, 0, 1]));
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            p(&[2, 2]).exact_div(&p(&[0, 2])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            p(&[1]).exact_div(&IntPolynomial::zero()),
            Err(Error::InexactDivision)
        );
        assert_eq!(p(&[0, 3, 3]).exact_div(&p(&[0, 3])), Ok(p(&[1, 1])));
    }

    #[test]
    fn gaussian_small() {
        assert_eq!(gaussian_binomial(4, 1).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(gaussian_binomial(7, 0).unwrap(), p(&[1]));
        assert_eq!(
            gaussian_binomial(6, 2).unwrap(),
            p(&[1, 1, 2, 2, 3, 2, 2, 1, 1])
        );
        assert!(gaussian_binomial(2, 3).is_err());
    }

    #[test]
    fn gaussian_symmetry_and_specialization() {
        for n in 0..=14usize {
            for k in 0..=n {
                let g = gaussian_binomial(n, k).unwrap();
                assert_eq!(g, gaussian_binomial(n, n - k).unwrap());
                assert_eq!(g.eval_at_one(), BigInt::from(binomial(n as u64, k as u64)));
                let c = g.coeffs();
                assert!(c.iter().all(|x| !x.is_negative()));
                assert!(c.iter().eq(c.iter().rev()), "palindromic");
                assert_eq!(g.degree(), Some(k * (n - k)));
            }
        }
    }

    #[test]
    fn gaussian_matches_product_formula() {
        // prod_{i<=n} (1-q^i) / (prod_{i<=k} (1-q^i) prod_{i<=n-k} (1-q^i))
        let qfact = |n: usize| {
            (1..=n).fold(IntPolynomial::one(), |acc, i| {
                &acc * &IntPolynomial::one_minus_q_pow(i)
            })
        };
        for n in 0..=10 {
            for k in 0..=n {
                let quotient = qfact(n).exact_div(&(&qfact(k) * &qfact(n - k))).unwrap();
                assert_eq!(quotient, gaussian_binomial(n, k).unwrap());
            }
        }
    }

    #[test]
    fn expansion() {
        let inv = GfRational::new(IntPolynomial::one(), vec![1]).unwrap();
        assert_eq!(inv.expand(4), SeriesTruncation::from_i64s(&[1, 1, 1, 1, 1]));
        let g = GfRational::new(p(&[1, 0, 1]), vec![1]).unwrap();
        assert_eq!(
            g.expand(5),
            SeriesTruncation::from_i64s(&[1, 1, 2, 2, 2, 2])
        );
        let h = GfRational::new(gaussian_binomial(4, 1).unwrap(), vec![2]).unwrap();
        assert_eq!(h.expand(4), SeriesTruncation::from_i64s(&[1, 1, 2, 2, 2]));
        assert!(GfRational::new(p(&[1]), vec![0]).is_err());
    }

    #[test]
    fn numerator_extraction() {
        let s = SeriesTruncation::from_i64s(&[1, 1, 2, 2, 2, 2]);
        let n = s.extract_numerator(3).unwrap();
        assert_eq!(n.f, p(&[1, 0, 1]));
        assert_eq!(n.series_degree, Some(1));
        assert_eq!(n.onset, 2);

        let nat = SeriesTruncation::from_i64s(&[1, 1, 1, 1]);
        let n = nat.extract_numerator(1).unwrap();
        assert_eq!(n.f, p(&[1]));
        assert_eq!(n.series_degree, Some(-1));

        assert_eq!(
            s.extract_numerator(5),
            Err(Error::NotStabilized { window: 5 })
        );
        let zero = SeriesTruncation::from_i64s(&[0, 0]);
        assert_eq!(zero.extract_numerator(1).unwrap().series_degree, None);
    }

    #[test]
    fn catalan() {
        assert_eq!(rational_catalan(2, 3).unwrap(), BigUint::from(2u32));
        assert_eq!(rational_catalan(3, 4).unwrap(), BigUint::from(5u32));
        assert_eq!(rational_catalan(1, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(rational_catalan(2, 4), Err(Error::InexactDivision));
    }

    #[test]
    fn display() {
        extern crate std;
        use std::string::ToString;
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "1 - q + 2q^3");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = IntPolynomial> {
            proptest::collection::vec(-20i64..20, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
        }

        proptest! {
            #[test]
            fn prefix_consistency(num in small_poly(), dens in proptest::collection::vec(1usize..6, 0..4),
                                  n in 0usize..30, cut in 0usize..30) {
                let g = GfRational::new(num, dens).unwrap();
                let cut = cut.min(n);
                prop_assert_eq!(g.expand(n).truncate(cut), g.expand(cut));
            }

            #[test]
            fn numerator_roundtrip(mut c in proptest::collection::vec(-9i64..9, 1..8), window in 1usize..6) {
                if *c.last().unwrap() == 0 { *c.last_mut().unwrap() = 1; }
                let f = IntPolynomial::from_i64s(&c);
                let deg = f.degree().unwrap();
                let g = GfRational::new(f.clone(), vec![1]).unwrap();
                let n = g.expand(deg + window).extract_numerator(window).unwrap();
                prop_assert_eq!(n.f, f);
                prop_assert_eq!(n.series_degree, Some(deg as i64 - 1));
            }

            #[test]
            fn division_inverts_multiplication(a in small_poly(), b in small_poly(), top in 0usize..4) {
                let b = &b + &IntPolynomial::monomial(1, b.coeffs().len() + top);
                prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            }
        }
    }
}
