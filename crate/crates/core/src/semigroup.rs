//! Numerical semigroups given by generators.
//!
//! A [`NumericalSemigroup`] stores its minimal generating system and its
//! Apéry set with respect to the multiplicity `m`. Membership, Frobenius
//! number and genus are all read off the Apéry set: `n` is an element iff
//! `n >= apery[n mod m]`.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest accepted generator.
pub const MAX_GENERATOR: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
    genus: u64,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the minimal
    /// generating system.
    pub fn new(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        if let Some(&value) = raw.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::GeneratorTooLarge {
                value,
                cap: MAX_GENERATOR,
            });
        }
        let gcd = raw.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprimeGenerators { gcd });
        }

        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        let apery = apery_set(m, &sorted);

        let mut semigroup = NumericalSemigroup {
            generators: Vec::new(),
            frobenius: apery.iter().max().map_or(-1, |&w| w as i64 - m as i64),
            genus: apery
                .iter()
                .enumerate()
                .map(|(r, &w)| (w - r as u64) / m)
                .sum(),
            apery,
        };
        // g is redundant iff g - h is a nonzero element for some smaller generator h
        let generators = sorted
            .iter()
            .copied()
            .filter(|&g| {
                !sorted
                    .iter()
                    .take_while(|&&h| h < g)
                    .any(|&h| semigroup.contains((g - h) as i64))
            })
            .collect();
        semigroup.generators = generators;
        Ok(semigroup)
    }

    /// The whole of ℕ, generated by 1.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: alloc::vec![1],
            apery: alloc::vec![0],
            frobenius: -1,
            genus: 0,
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> u64 {
        self.apery.len() as u64
    }

    pub fn max_generator(&self) -> u64 {
        *self.generators.last().expect("at least one generator")
    }

    /// `apery()[r]` is the least element congruent to `r` modulo the multiplicity.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Largest integer outside the semigroup; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Conductor `G + 1`: every integer from here on is an element.
    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        self.has(n as u64)
    }

    /// Unsigned shorthand for [`contains`](Self::contains).
    #[inline]
    pub fn has(&self, n: u64) -> bool {
        n >= self.apery[(n % self.apery.len() as u64) as usize]
    }

    /// Positive integers outside the semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor()).filter(|&n| !self.has(n)).collect()
    }

    /// Elements not exceeding the Frobenius number, ascending.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.conductor()).filter(|&n| self.has(n)).collect()
    }

    /// All `y` in the semigroup with `x - y` also in the semigroup.
    pub fn divisors_in(&self, x: i64) -> Result<Vec<u64>> {
        if !self.contains(x) {
            return Err(Error::NotAnElement(x));
        }
        let x = x as u64;
        Ok((0..=x)
            .filter(|&y| self.has(y) && self.has(x - y))
            .collect())
    }
}

/// Shortest paths over residues mod `m`, one edge per generator.
fn apery_set(m: u64, generators: &[u64]) -> Vec<u64> {
    let m_us = m as usize;
    let mut dist = alloc::vec![u64::MAX; m_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators.iter().filter(|&&g| g % m != 0) {
            let next = ((r as u64 + g) % m) as usize;
            let cand = d + g;
            if cand < dist[next] {
                dist[next] = cand;
                heap.push(Reverse((cand, next)));
            }
        }
    }
    dist
}

/// `ab - a - b`, the Frobenius number of `<a, b>`.
pub fn sylvester_frobenius(a: u64, b: u64) -> Result<i64> {
    if a < 2 || b < 2 {
        return Err(Error::BadArguments(
            "both generators must be at least 2".into(),
        ));
    }
    let gcd = a.gcd(&b);
    if gcd != 1 {
        return Err(Error::NonCoprimeGenerators { gcd });
    }
    let ab = a.checked_mul(b).ok_or(Error::Overflow)?;
    Ok(ab as i64 - a as i64 - b as i64)
}
