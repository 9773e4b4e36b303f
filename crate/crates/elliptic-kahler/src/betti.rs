//! Betti vectors: per-degree dimensions of a graded vector space, indexed by
//! (co)homological degree starting at 0.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    entries: Vec<u64>,
}

impl BettiVector {
    pub fn new(entries: Vec<u64>) -> Self {
        BettiVector { entries }
    }

    /// Betti number in a degree; zero beyond the stored range.
    pub fn b(&self, degree: usize) -> u64 {
        self.entries.get(degree).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Largest degree with a nonzero entry.
    pub fn top_degree(&self) -> Option<usize> {
        self.entries.iter().rposition(|&b| b != 0)
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn odd_entries_vanish(&self) -> bool {
        self.entries.iter().skip(1).step_by(2).all(|&b| b == 0)
    }

    /// Entries in even degrees only: `b_0, b_2, b_4, ...`.
    pub fn even_entries(&self) -> Vec<u64> {
        self.entries.iter().step_by(2).copied().collect()
    }

    /// Poincaré-duality symmetry `b_i = b_{m-i}` about the top degree.
    pub fn is_palindromic(&self) -> bool {
        let Some(top) = self.top_degree() else {
            return true;
        };
        (0..=top).all(|i| self.b(i) == self.b(top - i))
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
