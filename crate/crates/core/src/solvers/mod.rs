//! Exact welfare maximisation and maximum-weight matching.

mod blossom;
mod exact;
mod factorization;
mod matching;
mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use exact::{coalition_value, optimal_partition, optimal_value, SubsetTable, DP_CAP};
pub use factorization::clique_one_factorization;
pub use matching::{brute_force_matching, max_weight_matching, Matching, MATCHING_ORACLE_CAP};
pub use oracle::{all_optimal_partitions, select_among_optima};

/// How to pick one partition when several maximise social welfare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TiePolicy {
    /// Smallest canonical encoding.
    #[serde(rename = "lexmin")]
    LexMin,
    /// If the grand coalition ties with some `{N \ {j}, {j}}`, take the split
    /// with the smallest `j`; otherwise `LexMin`.
    #[serde(rename = "split")]
    PreferSplitOfGrand,
    /// Maximise the size of the largest coalition, then `LexMin`.
    #[serde(rename = "largest")]
    PreferLargestBlock,
    /// In the grand-versus-split tie, take the grand coalition; otherwise `LexMin`.
    #[serde(rename = "advgrand")]
    AdversarialGrand,
}

impl TiePolicy {
    pub const ALL: [TiePolicy; 4] = [
        TiePolicy::LexMin,
        TiePolicy::PreferSplitOfGrand,
        TiePolicy::PreferLargestBlock,
        TiePolicy::AdversarialGrand,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TiePolicy::LexMin => "lexmin",
            TiePolicy::PreferSplitOfGrand => "split",
            TiePolicy::PreferLargestBlock => "largest",
            TiePolicy::AdversarialGrand => "advgrand",
        }
    }
}

impl fmt::Display for TiePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TiePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TiePolicy::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tie policy {s:?} (expected lexmin, split, largest or advgrand)")))
    }
}
