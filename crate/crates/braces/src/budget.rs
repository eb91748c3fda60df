//! Budgets for the exponential subroutines. Exceeding a budget is always a
//! loud error, never a silent truncation, so corpus scans can report an
//! inconclusive verdict instead of a wrong one.

/// Caps for enumeration and search. `Default` gives the documented limits;
/// `from_env` lets each be overridden by an environment variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of perfect matchings to enumerate (`BRACES_MATCHING_BUDGET`).
    pub matchings: u64,
    /// Maximum number of 2-factors to enumerate (`BRACES_TWO_FACTOR_BUDGET`).
    pub two_factors: u64,
    /// Maximum number of simple cycles examined while listing nice cycles
    /// (`BRACES_CYCLE_BUDGET`).
    pub cycles: u64,
    /// Largest |X| tried in the subset search for tight cuts
    /// (`BRACES_SUBSET_BUDGET`).
    pub subset_size: usize,
    /// Orientation search runs through 2^(m−n+c) switching classes; this is
    /// the largest exponent accepted (`BRACES_ORIENTATION_EXPONENT`).
    pub orientation_exponent: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            matchings: 10_000_000,
            two_factors: 10_000_000,
            cycles: 10_000_000,
            subset_size: 12,
            orientation_exponent: 24,
        }
    }
}

impl Budgets {
    /// Defaults with per-field overrides from the environment.
    pub fn from_env() -> Budgets {
        fn get<T: std::str::FromStr>(name: &str, fallback: T) -> T {
            std::env::var(name).ok().and_then(|s| s.parse().ok()).unwrap_or(fallback)
        }
        let d = Budgets::default();
        Budgets {
            matchings: get("BRACES_MATCHING_BUDGET", d.matchings),
            two_factors: get("BRACES_TWO_FACTOR_BUDGET", d.two_factors),
            cycles: get("BRACES_CYCLE_BUDGET", d.cycles),
            subset_size: get("BRACES_SUBSET_BUDGET", d.subset_size),
            orientation_exponent: get("BRACES_ORIENTATION_EXPONENT", d.orientation_exponent),
        }
    }
}
