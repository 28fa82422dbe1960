//! Semigroups `<a, b, c>` with `a < b < c` pairwise coprime and `a | b + c`.
//!
//! Let `k1` be the least `k >= 1` with `b*k` in `<a, c>`. Every element has
//! exactly one representation `a*x + b*y` with `0 <= y < k1` or `a*x + c*z`
//! with `1 <= z <= a - k1`, which lays the semigroup out on an `a`-row grid
//! (rows numbered from 1, columns from 1):
//!
//! ```text
//! rows 1 ..= a-k1         start at c*(a+1-k1-i)
//! row  a-k1+1             starts at 0
//! rows a-k1+2 ..= a       start at b*(i+k1-a-1)
//! ```
//!
//! and each row continues in steps of `a`. Translating an ideal by `a` moves
//! every row one column right, so ideals are stratified by how many leading
//! columns they skip, and the whole generating function is the stratum with
//! no skipped column divided by `1 - q^a`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::census::{enumerate_ideals, is_ideal, shift_ideal, IdealGapSet, Shifted};
use crate::error::{Error, Result};
use crate::qpoly::{GfRational, IntPolynomial};
use crate::semigroup::NumericalSemigroup;

fn check_eligible(a: u64, b: u64, c: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::IneligibleTriple(format!(
            "a = {a} must be at least 2"
        )));
    }
    if !(a < b && b < c) {
        return Err(Error::IneligibleTriple(format!(
            "need a < b < c, got ({a}, {b}, {c})"
        )));
    }
    for (x, y) in [(a, b), (a, c), (b, c)] {
        if x.gcd(&y) != 1 {
            return Err(Error::IneligibleTriple(format!(
                "{x} and {y} are not coprime"
            )));
        }
    }
    if !(b + c).is_multiple_of(a) {
        return Err(Error::IneligibleTriple(format!(
            "{a} does not divide {b} + {c}"
        )));
    }
    Ok(())
}

/// Least `k >= 1` with `b*k` in `<a, c>`.
pub fn compute_k1(a: u64, b: u64, c: u64) -> Result<u64> {
    check_eligible(a, b, c)?;
    let ac = NumericalSemigroup::new(&[a, c])?;
    // b*a is always in <a, c>, so the scan terminates
    Ok((1..=a)
        .find(|&k| ac.contains((b * k) as i64))
        .expect("b*a lies in <a, c>"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabularGrid {
    a: u64,
    b: u64,
    c: u64,
    k1: u64,
    row_start: Vec<u64>,
    semigroup: NumericalSemigroup,
}

impl TabularGrid {
    /// Builds the grid and checks the exact-cover property up to `2abc`.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        let k1 = compute_k1(a, b, c)?;
        let row_start = (1..=a)
            .map(|i| {
                if i <= a - k1 {
                    c * (a + 1 - k1 - i)
                } else if i == a - k1 + 1 {
                    0
                } else {
                    b * (i + k1 - a - 1)
                }
            })
            .collect();
        let grid = TabularGrid {
            a,
            b,
            c,
            k1,
            row_start,
            semigroup: NumericalSemigroup::new(&[a, b, c])?,
        };
        grid.check_cover(2 * a * b * c)?;
        Ok(grid)
    }

    /// Every element up to `bound` occupies exactly one cell and every cell
    /// label up to `bound` is an element.
    pub fn check_cover(&self, bound: u64) -> Result<()> {
        let mut hits = vec![0u8; bound as usize + 1];
        for &start in &self.row_start {
            for v in (start..=bound).step_by(self.a as usize) {
                hits[v as usize] = hits[v as usize].saturating_add(1);
            }
        }
        for (n, &h) in hits.iter().enumerate() {
            let expected = u8::from(self.semigroup.has(n as u64));
            if h != expected {
                return Err(Error::CoverViolation(n as u64));
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn rows(&self) -> usize {
        self.a as usize
    }

    pub fn k1(&self) -> u64 {
        self.k1
    }

    /// Index (1-based) of the row that starts at 0.
    pub fn zero_row(&self) -> usize {
        (self.a - self.k1 + 1) as usize
    }

    pub fn row_starts(&self) -> &[u64] {
        &self.row_start
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// Label of row `i`, column `j` (both 1-based).
    pub fn d(&self, i: usize, j: usize) -> u64 {
        assert!((1..=self.rows()).contains(&i) && j >= 1);
        self.row_start[i - 1] + self.a * (j as u64 - 1)
    }

    /// Cell (1-based row, column) holding `n`.
    pub fn locate(&self, n: u64) -> Option<(usize, usize)> {
        self.row_start
            .iter()
            .position(|&s| n >= s && (n - s).is_multiple_of(self.a))
            .map(|i| (i + 1, ((n - self.row_start[i]) / self.a) as usize + 1))
    }

    /// Labels of the first `columns` columns, row 1 first.
    pub fn table(&self, columns: usize) -> Vec<Vec<u64>> {
        (1..=self.rows())
            .map(|i| (1..=columns).map(|j| self.d(i, j)).collect())
            .collect()
    }

    /// Per row, the number of its cells missing from the ideal.
    pub fn row_deficiencies(&self, gaps: &IdealGapSet) -> Result<RowDeficiency> {
        if !is_ideal(&self.semigroup, gaps.elements()) {
            return Err(Error::NotAnIdeal);
        }
        let mut d = vec![0usize; self.rows()];
        for &x in gaps.elements() {
            let (i, _) = self.locate(x).ok_or(Error::NotAnIdeal)?;
            d[i - 1] += 1;
        }
        Ok(RowDeficiency(d))
    }

    /// The stratum `k` of an ideal (so `min(d_1, d_a) = k - 1`) and the gap
    /// set of its translate by `-a*(k-1)`, which has no skipped column.
    pub fn stratum(&self, gaps: &IdealGapSet) -> Result<(usize, IdealGapSet)> {
        let rd = self.row_deficiencies(gaps)?;
        let k = rd.outer_min() + 1;
        let back = -((self.a * (k as u64 - 1)) as i64);
        match shift_ideal(&self.semigroup, gaps, back)? {
            Shifted::Ideal(base) => Ok((k, base)),
            Shifted::NotAnIdeal => Err(Error::NotAnIdeal),
        }
    }

    /// Ideals with `min(d_1, d_a) = 0`, with their codimension polynomial.
    pub fn enumerate_r1(&self) -> Result<R1Stratum> {
        // such an ideal contains d(1,1) + S or d(a,1) + S, and |S \ (x + S)| = x
        let bound = self.d(1, 1).max(self.d(self.rows(), 1)) as usize;
        let mut ideals = Vec::new();
        let mut counts = vec![0u64; bound + 1];
        for gaps in enumerate_ideals(&self.semigroup, bound)? {
            if self.row_deficiencies(&gaps)?.outer_min() == 0 {
                counts[gaps.codim()] += 1;
                ideals.push(gaps);
            }
        }
        let series = IntPolynomial::new(counts.into_iter().map(num_bigint::BigInt::from).collect());
        Ok(R1Stratum { ideals, series })
    }
}

/// Missing cells per row, row 1 first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowDeficiency(pub Vec<usize>);

impl RowDeficiency {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `min(d_1, d_a)`.
    pub fn outer_min(&self) -> usize {
        self.0[0].min(*self.0.last().expect("at least one row"))
    }
}

/// `d_1 <= ... <= d_{a-k1+1}` and `d_a <= ... <= d_{a-k1+1}`.
pub fn check_chains(rd: &RowDeficiency, k1: u64) -> bool {
    let d = &rd.0;
    let a = d.len();
    let Some(mid) = a.checked_sub(k1 as usize) else {
        return false;
    };
    d[..=mid].windows(2).all(|w| w[0] <= w[1]) && d[mid..].windows(2).all(|w| w[0] >= w[1])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R1Stratum {
    pub ideals: Vec<IdealGapSet>,
    /// `sum q^codim` over `ideals`.
    pub series: IntPolynomial,
}

/// `S1(q) / (1 - q^a)`.
pub fn thm_tri_gf(a: u64, b: u64, c: u64) -> Result<GfRational> {
    let grid = TabularGrid::new(a, b, c)?;
    GfRational::new(grid.enumerate_r1()?.series, vec![a as usize])
}

/// Generating function of `<3, n+2, 2n+1>` in two independent forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyThree {
    pub n: u64,
    /// `q + ... + q^(n+1)`.
    pub p1: IntPolynomial,
    /// `q^2 + ... + q^(n+2)`.
    pub p2: IntPolynomial,
    /// `sum_{i=1..n} q^i (q + ... + q^i) + q^(n+1) (q + ... + q^n)`.
    pub p3: IntPolynomial,
    /// `(1 + p1 + p2 + p3) / (1 - q^3)`.
    pub constructive: GfRational,
    /// The closed rational expression, reduced to a polynomial over `1 - q^3`.
    pub closed: GfRational,
}

pub fn family_gf_3(n: u64) -> Result<FamilyThree> {
    if n < 2 || n % 3 == 1 {
        return Err(Error::BadFamilyParameter(n));
    }
    let nu = n as usize;
    let run = IntPolynomial::geometric_run;
    let mono = |e: usize| IntPolynomial::monomial(1, e);

    let p1 = run(1, nu + 1);
    let p2 = run(2, nu + 2);
    let p3 = (1..=nu).fold(&mono(nu + 1) * &run(1, nu), |acc, i| {
        &acc + &(&mono(i) * &run(1, i))
    });
    let numerator = &(&(&IntPolynomial::one() + &p1) + &p2) + &p3;
    let constructive = GfRational::new(numerator, vec![3])?;

    // 1 + X/((1-q)^2 (1+q)) - q^(2n+2), with X the displayed numerator
    let one = IntPolynomial::one();
    let x = &(&(&mono(1) * &(&mono(nu + 1) - &one))
        * &(&IntPolynomial::from_i64s(&[-1, -2, 1]) + &IntPolynomial::monomial(2, nu + 3)))
        - &(&mono(4) * &(&(&(&mono(2 * nu + 1) - &mono(nu + 1)) - &mono(nu)) + &one));
    let denom = &(&IntPolynomial::one_minus_q_pow(1) * &IntPolynomial::one_minus_q_pow(1))
        * &IntPolynomial::from_i64s(&[1, 1]);
    let over_denom = &(&denom * &(&one - &mono(2 * nu + 2))) + &x;
    let closed = GfRational::new(over_denom.exact_div(&denom)?, vec![3])?;

    Ok(FamilyThree {
        n,
        p1,
        p2,
        p3,
        constructive,
        closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn k1_values() {
        assert_eq!(compute_k1(3, 4, 5), Ok(2));
        assert_eq!(compute_k1(3, 5, 7), Ok(2));
        // 5 and 10 are not in <4, 7>; 15 = 4 + 4 + 7 is
        assert_eq!(compute_k1(4, 5, 7), Ok(3));
        assert!(matches!(
            compute_k1(3, 4, 6),
            Err(Error::IneligibleTriple(_))
        ));
        assert!(matches!(
            compute_k1(3, 5, 8),
            Err(Error::IneligibleTriple(_))
        ));
        assert!(matches!(
            compute_k1(4, 3, 5),
            Err(Error::IneligibleTriple(_))
        ));
    }

    #[test]
    fn grid_rows() {
        let g = TabularGrid::new(3, 4, 5).unwrap();
        assert_eq!(g.row_starts(), &[5, 0, 4]);
        assert_eq!(g.locate(9), Some((2, 4)));
        assert_eq!(
            g.table(4),
            vec![vec![5, 8, 11, 14], vec![0, 3, 6, 9], vec![4, 7, 10, 13]]
        );
        assert_eq!(TabularGrid::new(3, 5, 7).unwrap().row_starts(), &[7, 0, 5]);
        assert_eq!(TabularGrid::new(2, 3, 5).unwrap().row_starts(), &[0, 3]);
        assert_eq!(
            TabularGrid::new(4, 5, 7).unwrap().row_starts(),
            &[7, 0, 5, 10]
        );
        assert_eq!(
            TabularGrid::new(5, 7, 8).unwrap().row_starts(),
            &[16, 8, 0, 7, 14]
        );
    }

    #[test]
    fn exact_cover_to_500() {
        for (a, b, c) in [(3, 4, 5), (3, 5, 7), (4, 5, 7), (5, 7, 8)] {
            let g = TabularGrid::new(a, b, c).unwrap();
            g.check_cover(500).unwrap();
        }
    }

    #[test]
    fn deficiencies() {
        let g = TabularGrid::new(3, 4, 5).unwrap();
        let s = g.semigroup().clone();
        let rd = |v: Vec<u64>| {
            g.row_deficiencies(&IdealGapSet::new(&s, v).unwrap())
                .unwrap()
                .0
        };
        assert_eq!(rd(vec![]), vec![0, 0, 0]);
        assert_eq!(rd(vec![0, 3]), vec![0, 2, 0]);
        assert_eq!(rd(vec![0, 4, 5]), vec![1, 1, 1]);
        assert_eq!(
            g.row_deficiencies(&IdealGapSet::from_sorted(vec![3])),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn chains() {
        assert!(check_chains(&RowDeficiency(vec![0, 2, 0]), 2));
        assert!(check_chains(&RowDeficiency(vec![0, 0, 0]), 2));
        assert!(!check_chains(&RowDeficiency(vec![2, 0, 1]), 2));
        for (a, b, c) in [(3, 4, 5), (3, 5, 7), (4, 5, 7), (5, 7, 8)] {
            let g = TabularGrid::new(a, b, c).unwrap();
            for d in enumerate_ideals(g.semigroup(), 8).unwrap() {
                let rd = g.row_deficiencies(&d).unwrap();
                assert_eq!(rd.total(), d.codim());
                assert!(check_chains(&rd, g.k1()), "{:?} {:?}", (a, b, c), rd);
            }
        }
    }

    #[test]
    fn r1_polynomials() {
        let r = TabularGrid::new(3, 4, 5).unwrap().enumerate_r1().unwrap();
        assert_eq!(r.ideals.len(), 12);
        assert_eq!(r.series, p(&[1, 1, 3, 3, 3, 1]));
        let r = TabularGrid::new(3, 5, 7).unwrap().enumerate_r1().unwrap();
        assert_eq!(r.series, p(&[1, 1, 3, 3, 4, 3, 2, 1]));
        assert_eq!(r.ideals.len(), 18);
        assert_eq!(r.series.coeff(0), BigInt::from(1));
    }

    #[test]
    fn triple_gf_matches_census() {
        let e = thm_tri_gf(3, 4, 5).unwrap().expand(8);
        assert_eq!(e.coeffs(), [1, 1, 3, 4, 4, 4, 4, 4, 4].map(BigInt::from));
        let g = thm_tri_gf(3, 5, 7).unwrap();
        let e = g.expand(12);
        assert_eq!(
            e.coeffs(),
            [1, 1, 3, 4, 5, 6, 6, 6, 6, 6, 6, 6, 6].map(BigInt::from)
        );
        assert_eq!(e.extract_numerator(7).unwrap().series_degree, Some(4));
        for (a, b, c) in [(3, 4, 5), (3, 5, 7), (4, 5, 7), (5, 7, 8), (2, 3, 5)] {
            let s = NumericalSemigroup::new(&[a, b, c]).unwrap();
            assert_eq!(
                thm_tri_gf(a, b, c).unwrap().expand(20),
                census(&s, 20).unwrap().series(),
                "{:?}",
                (a, b, c)
            );
        }
    }

    #[test]
    fn strata_translate_into_r1() {
        for (a, b, c) in [(3, 4, 5), (3, 5, 7), (4, 5, 7), (5, 7, 8)] {
            let g = TabularGrid::new(a, b, c).unwrap();
            let r1 = g.enumerate_r1().unwrap();
            for d in enumerate_ideals(g.semigroup(), 8).unwrap() {
                let (k, base) = g.stratum(&d).unwrap();
                assert!(k >= 1);
                assert_eq!(base.codim() + a as usize * (k - 1), d.codim());
                assert!(r1.ideals.contains(&base));
            }
        }
    }

    #[test]
    fn family_parts() {
        let f = family_gf_3(2).unwrap();
        assert_eq!(f.p1, p(&[0, 1, 1, 1]));
        assert_eq!(f.p2, p(&[0, 0, 1, 1, 1]));
        assert_eq!(f.p3, p(&[0, 0, 1, 1, 2, 1]));
        assert_eq!(f.constructive.numerator, p(&[1, 1, 3, 3, 3, 1]));
        assert_eq!(
            f.constructive.numerator,
            TabularGrid::new(3, 4, 5)
                .unwrap()
                .enumerate_r1()
                .unwrap()
                .series
        );
        assert!(matches!(family_gf_3(4), Err(Error::BadFamilyParameter(4))));
        assert!(matches!(family_gf_3(1), Err(Error::BadFamilyParameter(1))));
    }

    #[test]
    fn family_forms_agree() {
        for n in [2u64, 3, 5, 6, 8, 9, 11] {
            let f = family_gf_3(n).unwrap();
            let order = 3 * n as usize + 6;
            let closed = f.closed.expand(order);
            assert_eq!(closed, f.constructive.expand(order), "n = {n}");
            let deg = closed.extract_numerator(3).unwrap().series_degree;
            assert_eq!(deg, Some(2 * n as i64 - 2));
        }
    }
}
