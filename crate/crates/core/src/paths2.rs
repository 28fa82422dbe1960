//! Ideals of `<a, b>` as lattice paths.
//!
//! The grid has `a` rows; the cell in column `x`, row `y` carries the label
//! `a*x + b*y`, and every element of `<a, b>` is exactly one label. A path
//! starts at height `a`, uses right steps `R` and down steps `D`, ends with
//! `D`, and has at most `b` right steps between its first and last `D`.
//! The cells below the path are the gap set of an ideal and the number of
//! such cells is the inversion count of the word.
//!
//! Words omit the infinite horizontal run after the last `D`. The `k`-th `D`
//! (counting from the top) descends through row `a - k`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::census::IdealGapSet;
use crate::error::{Error, Result, WordDefect};
use crate::qpoly::{gaussian_binomial, GfRational, IntPolynomial};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// Down step `(0, -1)`.
    D,
    /// Right step `(1, 0)`.
    R,
}

/// A word over `{D, R}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PathWord {
    steps: Vec<Step>,
}

impl PathWord {
    pub fn new(steps: Vec<Step>) -> Self {
        PathWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of `R` before each `D`, top row first.
    pub fn descent_columns(&self) -> Vec<usize> {
        let mut rights = 0;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::R => rights += 1,
                Step::D => out.push(rights),
            }
        }
        out
    }

    /// Word with `columns[k]` right steps before the `k`-th descent.
    ///
    /// `columns` must be non-decreasing.
    pub fn from_descent_columns(columns: &[usize]) -> Self {
        let mut steps = Vec::new();
        let mut at = 0;
        for &c in columns {
            debug_assert!(c >= at);
            steps.extend(core::iter::repeat_n(Step::R, c - at));
            steps.push(Step::D);
            at = c;
        }
        PathWord { steps }
    }

    pub fn validate(&self, a: usize, b: usize) -> core::result::Result<(), WordDefect> {
        let cols = self.descent_columns();
        if cols.len() != a {
            return Err(WordDefect::DescentCount {
                expected: a,
                found: cols.len(),
            });
        }
        if self.steps.last() != Some(&Step::D) {
            return Err(WordDefect::LastNotDescent);
        }
        let inner = cols[a - 1] - cols[0];
        if inner > b {
            return Err(WordDefect::InnerRunTooLong {
                found: inner,
                max: b,
            });
        }
        Ok(())
    }

    pub fn is_valid(&self, a: usize, b: usize) -> bool {
        self.validate(a, b).is_ok()
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::D => "D",
                Step::R => "R",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadLetter(pub char);

impl fmt::Display for BadLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "letter {:?} is neither D nor R", self.0)
    }
}

impl FromStr for PathWord {
    type Err = BadLetter;

    fn from_str(s: &str) -> core::result::Result<Self, BadLetter> {
        s.chars()
            .map(|c| match c {
                'D' | 'd' => Ok(Step::D),
                'R' | 'r' => Ok(Step::R),
                other => Err(BadLetter(other)),
            })
            .collect::<core::result::Result<Vec<_>, _>>()
            .map(PathWord::new)
    }
}

/// Pairs `i < j` with an `R` at `i` and a `D` at `j`.
pub fn inversions(w: &PathWord) -> usize {
    let mut rights = 0;
    let mut inv = 0;
    for s in w.steps() {
        match s {
            Step::R => rights += 1,
            Step::D => inv += rights,
        }
    }
    inv
}

/// Label of the cell in column `x`, row `y`.
pub fn label(a: u64, b: u64, x: u64, y: u64) -> u64 {
    a * x + b * y
}

/// Column and row of an element of `<a, b>`, or `None` for a non-element.
pub fn locate(a: u64, b: u64, n: u64) -> Option<(u64, u64)> {
    (0..a)
        .map(|y| (y, b * y))
        .find(|&(_, base)| base <= n && (n - base).is_multiple_of(a))
        .map(|(y, base)| ((n - base) / a, y))
}

fn check_pair(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::BadArguments("generators must be positive".into()));
    }
    let gcd = a.gcd(&b);
    if gcd != 1 {
        return Err(Error::NonCoprimeGenerators { gcd });
    }
    Ok(())
}

/// Gap set of the ideal below a valid path.
pub fn word_to_gapset(w: &PathWord, a: u64, b: u64) -> Result<IdealGapSet> {
    check_pair(a, b)?;
    w.validate(a as usize, b as usize)
        .map_err(Error::InvalidWord)?;
    let mut gaps: Vec<u64> = w
        .descent_columns()
        .iter()
        .enumerate()
        .flat_map(|(k, &r)| {
            let y = a - 1 - k as u64;
            (0..r as u64).map(move |x| label(a, b, x, y))
        })
        .collect();
    gaps.sort_unstable();
    Ok(IdealGapSet::from_sorted(gaps))
}

/// Least label of each row that belongs to the ideal, bottom row first.
pub fn row_minima(w: &PathWord, a: u64, b: u64) -> Result<Vec<u64>> {
    check_pair(a, b)?;
    w.validate(a as usize, b as usize)
        .map_err(Error::InvalidWord)?;
    let cols = w.descent_columns();
    Ok((0..a)
        .map(|y| label(a, b, cols[(a - 1 - y) as usize] as u64, y))
        .collect())
}

/// The path of an ideal of `<a, b>`; inverse of [`word_to_gapset`].
pub fn gapset_to_word(a: u64, b: u64, gaps: &IdealGapSet) -> Result<PathWord> {
    check_pair(a, b)?;
    let s = NumericalSemigroup::new(&[a, b])?;
    if !crate::census::is_ideal(&s, gaps.elements()) {
        return Err(Error::NotAnIdeal);
    }
    let mut per_row = alloc::vec![0usize; a as usize];
    for &d in gaps.elements() {
        let (_, y) = locate(a, b, d).ok_or(Error::NotAnIdeal)?;
        per_row[y as usize] += 1;
    }
    // the gap cells of a row form a prefix, so its count is the column of the row minimum
    let cols: Vec<usize> = (0..a as usize).rev().map(|y| per_row[y]).collect();
    let w = PathWord::from_descent_columns(&cols);
    debug_assert!(w.is_valid(a as usize, b as usize));
    Ok(w)
}

/// Valid words for `<a, b>` whose ideal has codimension `codim`.
pub fn words_of_codim(a: u64, b: u64, codim: usize) -> Result<Vec<PathWord>> {
    let s = NumericalSemigroup::new(&[a, b])?;
    crate::census::enumerate_ideals(&s, codim)?
        .into_iter()
        .filter(|d| d.codim() == codim)
        .map(|d| gapset_to_word(a, b, &d))
        .collect()
}

/// Longest word length accepted by [`word_sum_qbinomial`].
pub const MAX_WORD_SUM_LENGTH: usize = 14;

/// `sum q^inv(w)` over the words of length `n` with `k` letters `R`.
pub fn word_sum_qbinomial(n: usize, k: usize) -> Result<IntPolynomial> {
    if k > n || n > MAX_WORD_SUM_LENGTH {
        return Err(Error::BadArguments(alloc::format!(
            "word sums need 0 <= k <= n <= {MAX_WORD_SUM_LENGTH} (got n = {n}, k = {k})"
        )));
    }
    let mut coeffs = alloc::vec![0u64; k * (n - k) + 1];
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let w = PathWord::new(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { Step::R } else { Step::D })
                .collect(),
        );
        coeffs[inversions(&w)] += 1;
    }
    Ok(IntPolynomial::new(
        coeffs.into_iter().map(BigInt::from).collect(),
    ))
}

/// `[a+b-1 choose a-1]_q / (1 - q^a)`.
pub fn closed_form_two_gen(a: u64, b: u64) -> Result<GfRational> {
    if a < 2 || b < 2 {
        return Err(Error::BadArguments("generators must be at least 2".into()));
    }
    check_pair(a, b)?;
    let numerator = gaussian_binomial((a + b - 1) as usize, (a - 1) as usize)?;
    GfRational::new(numerator, alloc::vec![a as usize])
}

/// Labels of the first `columns` cells of every row, top row first.
pub fn grid_labels(a: u64, b: u64, columns: u64) -> Vec<Vec<u64>> {
    (0..a)
        .rev()
        .map(|y| (0..columns).map(|x| label(a, b, x, y)).collect())
        .collect()
}
