//! Resource guardrails shared by the pipeline, the matrix realizations and
//! the brute-force oracles.

use crate::error::{Error, Result};

/// Environment variable overriding [`Guardrails::max_dk`].
pub const ENV_MAX_DK: &str = "PATMOM_MAX_DK";
/// Environment variable overriding [`Guardrails::max_matrix_entries`].
pub const ENV_MAX_MATRIX: &str = "PATMOM_MAX_MATRIX";
/// Environment variable overriding [`Guardrails::oracle_max_n`].
pub const ENV_ORACLE_MAX_N: &str = "PATMOM_ORACLE_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guardrails {
    /// Largest `d * k` the moment pipeline accepts. The diagram loop visits
    /// every `(dk, dk)` set partition and, for each, every permutation of its
    /// parts, so the cost grows like the ordered Bell number of `2 dk`.
    pub max_dk: usize,
    /// Largest number of entries `(n^k)^2` of an explicit matrix on
    /// `V^{\otimes k}`.
    pub max_matrix_entries: u64,
    /// Largest `n` for which the oracles enumerate all of `S_n`.
    pub oracle_max_n: usize,
}

impl Default for Guardrails {
    fn default() -> Self {
        Guardrails {
            max_dk: 4,
            max_matrix_entries: 10_000_000,
            oracle_max_n: 9,
        }
    }
}

impl Guardrails {
    /// Defaults, overridden by `PATMOM_MAX_DK`, `PATMOM_MAX_MATRIX` and
    /// `PATMOM_ORACLE_MAX_N` when set.
    pub fn from_env() -> Result<Self> {
        let mut g = Guardrails::default();
        if let Some(v) = read_env(ENV_MAX_DK)? {
            g.max_dk = v as usize;
        }
        if let Some(v) = read_env(ENV_MAX_MATRIX)? {
            g.max_matrix_entries = v;
        }
        if let Some(v) = read_env(ENV_ORACLE_MAX_N)? {
            g.oracle_max_n = v as usize;
        }
        Ok(g)
    }

    pub fn check_dk(&self, dk: usize) -> Result<()> {
        if dk > self.max_dk {
            return Err(Error::Guardrail {
                what: "moment pipeline with d*k",
                requested: dk as u64,
                limit: self.max_dk as u64,
            });
        }
        Ok(())
    }

    /// Checks that an `n^k x n^k` matrix stays within the guardrail and
    /// returns its dimension `n^k`.
    pub fn check_matrix(&self, n: usize, k: usize) -> Result<usize> {
        let entries = (n as u64).checked_pow(2 * k as u32).unwrap_or(u64::MAX);
        if entries > self.max_matrix_entries {
            return Err(Error::Guardrail {
                what: "explicit n^k x n^k matrix with entry count",
                requested: entries,
                limit: self.max_matrix_entries,
            });
        }
        Ok((n as u64).pow(k as u32) as usize)
    }

    pub fn check_oracle_n(&self, n: usize) -> Result<()> {
        if n > self.oracle_max_n {
            return Err(Error::Guardrail {
                what: "brute-force enumeration of S_n with n",
                requested: n as u64,
                limit: self.oracle_max_n as u64,
            });
        }
        Ok(())
    }
}

fn read_env(name: &str) -> Result<Option<u64>> {
    match std::env::var(name) {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{name}={s:?} is not a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}
