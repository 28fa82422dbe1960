//! Exhaustive census of ideals by codimension.
//!
//! An ideal `I` of `S` is stored through its finite complement `D = S \ I`.
//! `D` is a down-set for the order `y <= x iff x - y in S`, and `codim(I) = |D|`.
//! Down-sets are generated by a depth-first search that adds elements in
//! increasing order: a set is extended by `x > max(D)` only when every
//! `x - g` (for generators `g` with `x - g` in `S`) already lies in `D`.
//! Every down-set has exactly one such ascending construction, so each ideal
//! is produced once.
//!
//! The search can be split at a fixed depth ([`split_frontier`]) and the
//! subtrees counted independently ([`count_subtree`]); per-codimension
//! counts add up, so any schedule of the subtrees gives the same table.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qpoly::SeriesTruncation;
use crate::semigroup::NumericalSemigroup;

/// Default cap on visited search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Finite complement `S \ I` of an ideal `I`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IdealGapSet {
    elements: Vec<u64>,
}

impl IdealGapSet {
    /// Validates that `elements` is the gap set of an ideal of `s`.
    pub fn new(s: &NumericalSemigroup, mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !is_ideal(s, &elements) {
            return Err(Error::NotAnIdeal);
        }
        Ok(IdealGapSet { elements })
    }

    /// The gap set of `I = S`.
    pub fn whole() -> Self {
        IdealGapSet::default()
    }

    pub(crate) fn from_sorted(elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IdealGapSet { elements }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn codim(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Whether `x` belongs to the ideal this set is the complement of.
    pub fn ideal_contains(&self, s: &NumericalSemigroup, x: i64) -> bool {
        s.contains(x) && !self.contains(x as u64)
    }

    /// `s(I)`: elements of the ideal not exceeding the Frobenius number.
    pub fn small_part(&self, s: &NumericalSemigroup) -> Vec<u64> {
        s.small_elements()
            .into_iter()
            .filter(|&x| !self.contains(x))
            .collect()
    }

    fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }
}

/// Checks the ideal condition through generator steps only: `D ⊆ S` and for
/// `d` in `D`, generator `g` with `d - g` in `S`, also `d - g` in `D`.
pub fn is_ideal(s: &NumericalSemigroup, gaps: &[u64]) -> bool {
    let mut sorted = gaps.to_vec();
    sorted.sort_unstable();
    let member = |x: u64| sorted.binary_search(&x).is_ok();
    sorted.iter().all(|&d| {
        s.has(d)
            && s.generators()
                .iter()
                .all(|&g| d < g || !s.has(d - g) || member(d - g))
    })
}

/// Reference check against the full definition: `D ⊆ S` and every
/// S-divisor of an element of `D` is in `D`.
pub fn is_ideal_by_divisors(s: &NumericalSemigroup, gaps: &[u64]) -> bool {
    let member = |x: u64| gaps.contains(&x);
    gaps.iter().all(|&d| {
        s.has(d)
            && s.divisors_in(d as i64)
                .expect("d is an element")
                .iter()
                .all(|&y| member(y))
    })
}

/// Elements with at most `max_codim` S-divisors; no gap set of size
/// `<= max_codim` can reach outside this set.
pub fn search_universe(s: &NumericalSemigroup, max_codim: usize) -> Vec<u64> {
    (0..=universe_bound(s, max_codim))
        .filter(|&x| s.has(x) && s.divisors_in(x as i64).is_ok_and(|d| d.len() <= max_codim))
        .collect()
}

/// Every `y` in `S` with `y <= x - c` (`c` the conductor) divides `x`, and at
/// least `x - 2c + 1` such `y` exist; past this bound that exceeds `max_codim`.
fn universe_bound(s: &NumericalSemigroup, max_codim: usize) -> u64 {
    max_codim as u64 + 2 * s.conductor() + 1
}

/// Visited-node accounting for the search.
pub trait NodeBudget {
    /// Records one visited node; `false` once the budget is exhausted.
    fn charge(&mut self) -> bool;
    fn limit(&self) -> u64;
}

/// Plain counter budget.
#[derive(Debug, Clone)]
pub struct LocalBudget {
    limit: u64,
    used: u64,
}

impl LocalBudget {
    pub fn new(limit: u64) -> Self {
        LocalBudget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl NodeBudget for LocalBudget {
    fn charge(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    fn limit(&self) -> u64 {
        self.limit
    }
}

/// Preorder walk over the down-sets extending a fixed prefix.
struct Walker<'a> {
    s: &'a NumericalSemigroup,
    max_codim: usize,
    base: usize,
    chosen: Vec<u64>,
    cursors: Vec<u64>,
    in_set: Vec<bool>,
    started: bool,
}

impl<'a> Walker<'a> {
    fn new(s: &'a NumericalSemigroup, max_codim: usize, prefix: &[u64]) -> Result<Self> {
        let bound = universe_bound(s, max_codim) as usize + 1;
        let mut in_set = vec![false; bound.max(prefix.last().map_or(0, |&x| x as usize + 1))];
        if !prefix.windows(2).all(|w| w[0] < w[1]) || !is_ideal(s, prefix) {
            return Err(Error::NotAnIdeal);
        }
        for &x in prefix {
            in_set[x as usize] = true;
        }
        let start = prefix.last().map_or(0, |&x| x + 1);
        Ok(Walker {
            s,
            max_codim,
            base: prefix.len(),
            chosen: prefix.to_vec(),
            cursors: vec![start],
            in_set,
            started: false,
        })
    }

    fn extends(&self, x: u64) -> bool {
        self.s.has(x)
            && self
                .s
                .generators()
                .iter()
                .all(|&g| x < g || !self.s.has(x - g) || self.in_set[(x - g) as usize])
    }

    fn next_candidate(&self) -> Option<u64> {
        let from = *self.cursors.last().expect("cursor");
        let hi = match self.chosen.last() {
            None => 0,
            Some(&mx) => mx + self.s.max_generator(),
        };
        (from..=hi).find(|&x| self.extends(x))
    }

    /// Next down-set in preorder, or `None` when the subtree is exhausted.
    fn advance(&mut self, budget: &mut dyn NodeBudget) -> Option<Result<&[u64]>> {
        if !self.started {
            self.started = true;
            if !budget.charge() {
                return Some(Err(Error::BudgetExceeded {
                    budget: budget.limit(),
                }));
            }
            return Some(Ok(&self.chosen));
        }
        loop {
            let found = if self.chosen.len() < self.max_codim {
                self.next_candidate()
            } else {
                None
            };
            match found {
                Some(x) => {
                    *self.cursors.last_mut().expect("cursor") = x + 1;
                    if x as usize >= self.in_set.len() {
                        self.in_set.resize(x as usize + 1, false);
                    }
                    self.chosen.push(x);
                    self.in_set[x as usize] = true;
                    self.cursors.push(x + 1);
                    if !budget.charge() {
                        return Some(Err(Error::BudgetExceeded {
                            budget: budget.limit(),
                        }));
                    }
                    return Some(Ok(&self.chosen));
                }
                None => {
                    if self.chosen.len() == self.base {
                        return None;
                    }
                    let x = self.chosen.pop().expect("non-empty");
                    self.in_set[x as usize] = false;
                    self.cursors.pop();
                }
            }
        }
    }
}

/// Stream of the gap sets of all ideals with codimension `<= max_codim`.
pub struct IdealStream<'a, B: NodeBudget> {
    walker: Walker<'a>,
    budget: B,
    failed: bool,
}

impl<B: NodeBudget> Iterator for IdealStream<'_, B> {
    type Item = Result<IdealGapSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.walker.advance(&mut self.budget)? {
            Ok(set) => Some(Ok(IdealGapSet::from_sorted(set.to_vec()))),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

pub fn ideal_stream<B: NodeBudget>(
    s: &NumericalSemigroup,
    max_codim: usize,
    budget: B,
) -> IdealStream<'_, B> {
    IdealStream {
        walker: Walker::new(s, max_codim, &[]).expect("empty prefix is valid"),
        budget,
        failed: false,
    }
}

/// Every ideal of codimension `<= max_codim`, in search order.
pub fn enumerate_ideals(s: &NumericalSemigroup, max_codim: usize) -> Result<Vec<IdealGapSet>> {
    ideal_stream(s, max_codim, LocalBudget::new(DEFAULT_NODE_BUDGET)).collect()
}

/// Per-codimension counts of the prefix node and all its descendants.
pub fn count_subtree(
    s: &NumericalSemigroup,
    max_codim: usize,
    prefix: &[u64],
    budget: &mut dyn NodeBudget,
) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; max_codim + 1];
    let mut walker = Walker::new(s, max_codim, prefix)?;
    while let Some(node) = walker.advance(budget) {
        counts[node?.len()] += 1;
    }
    Ok(counts)
}

/// Search split at a fixed depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    /// Counts of the nodes above the split depth.
    pub shallow_counts: Vec<u64>,
    /// Down-sets at exactly the split depth, in search order.
    pub prefixes: Vec<Vec<u64>>,
}

pub fn split_frontier(
    s: &NumericalSemigroup,
    max_codim: usize,
    depth: usize,
    budget: &mut dyn NodeBudget,
) -> Result<Frontier> {
    let mut shallow_counts = vec![0u64; max_codim + 1];
    let mut prefixes = Vec::new();
    let mut walker = Walker::new(s, max_codim.min(depth), &[])?;
    while let Some(node) = walker.advance(budget) {
        let node = node?;
        if node.len() == depth {
            prefixes.push(node.to_vec());
        } else {
            shallow_counts[node.len()] += 1;
        }
    }
    Ok(Frontier {
        shallow_counts,
        prefixes,
    })
}

/// `m(S, k)` for `k = 0..=max_codim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub counts: Vec<BigInt>,
    /// Start of the constant tail, when that tail has at least
    /// `multiplicity` entries.
    pub onset: Option<usize>,
    pub stable_value: BigInt,
}

impl CensusTable {
    pub fn from_counts(counts: &[u64], multiplicity: u64) -> Self {
        let series = SeriesTruncation::new(counts.iter().map(|&c| BigInt::from(c)).collect());
        let tail_start = series.tail_onset();
        let onset = (counts.len() - tail_start >= multiplicity as usize).then_some(tail_start);
        CensusTable {
            stable_value: series.coeffs().last().cloned().expect("non-empty"),
            counts: series.coeffs().to_vec(),
            onset,
        }
    }

    pub fn max_codim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn series(&self) -> SeriesTruncation {
        SeriesTruncation::new(self.counts.clone())
    }
}

pub fn census(s: &NumericalSemigroup, max_codim: usize) -> Result<CensusTable> {
    census_with_budget(s, max_codim, DEFAULT_NODE_BUDGET)
}

pub fn census_with_budget(
    s: &NumericalSemigroup,
    max_codim: usize,
    budget: u64,
) -> Result<CensusTable> {
    let counts = count_subtree(s, max_codim, &[], &mut LocalBudget::new(budget))?;
    Ok(CensusTable::from_counts(&counts, s.multiplicity()))
}

/// Truncated ideal generating function `sum q^codim(I)` through `q^order`.
pub fn ideal_gf(s: &NumericalSemigroup, order: usize) -> Result<SeriesTruncation> {
    Ok(census(s, order)?.series())
}

/// Outcome of translating an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shifted {
    Ideal(IdealGapSet),
    NotAnIdeal,
}

/// Gap set of `I + t = {i + t : i in I}`, when that is again an ideal of `S`.
///
/// Negative `t` translates downwards. Since `(I + t) + S = (I + S) + t`, the
/// translate is an ideal exactly when it stays inside `S`.
pub fn shift_ideal(s: &NumericalSemigroup, gaps: &IdealGapSet, t: i64) -> Result<Shifted> {
    if !is_ideal(s, gaps.elements()) {
        return Err(Error::NotAnIdeal);
    }
    let top = s.frobenius().max(gaps.max().map_or(-1, |x| x as i64));
    // members i of I with i + t <= G are the only ones that can leave S
    let inside = (0..=s.frobenius() - t)
        .filter(|&i| gaps.ideal_contains(s, i))
        .all(|i| s.contains(i + t));
    if !inside {
        return Ok(Shifted::NotAnIdeal);
    }
    // y in S is a gap of I + t iff y - t is not in I; past `top + t` it always is
    let elements = (0..=top + t.max(0))
        .filter(|&y| s.contains(y) && !gaps.ideal_contains(s, y - t))
        .map(|y| y as u64)
        .collect();
    Ok(Shifted::Ideal(IdealGapSet::from_sorted(elements)))
}
