//! Size bounds. Exceeding a bound is a hard error ([`crate::Error::SizeLimitExceeded`]),
//! never a silent truncation; the law suite converts it into a "size-skip"
//! verdict so a skipped law is always visible in the report.

/// Configured bounds for validated inputs and derived constructions.
///
/// `max_objects` / `max_arrows` / `max_fiber` bound *input* categories and
/// actions. Derived categories (products, categories of elements,
/// comprehensions) are allowed to be larger, bounded by the `derived_*`
/// fields. `search_nodes` caps backtracking searches (natural-transformation
/// enumeration, functor enumeration); hitting it aborts the search with a
/// size error rather than returning a partial answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_objects: usize,
    pub max_arrows: usize,
    pub max_fiber: usize,
    pub derived_objects: usize,
    pub derived_arrows: usize,
    pub derived_fiber: usize,
    pub search_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 8,
            max_arrows: 40,
            max_fiber: 6,
            derived_objects: 6_000,
            derived_arrows: 120_000,
            derived_fiber: 1_024,
            search_nodes: 4_000_000,
        }
    }
}

impl Limits {
    /// Scale every bound by `factor` (used by the CLI size override).
    pub fn scaled(self, factor: usize) -> Self {
        let f = factor.max(1);
        Limits {
            max_objects: self.max_objects * f,
            max_arrows: self.max_arrows * f,
            max_fiber: self.max_fiber * f,
            derived_objects: self.derived_objects * f,
            derived_arrows: self.derived_arrows * f,
            derived_fiber: self.derived_fiber * f,
            search_nodes: self.search_nodes.saturating_mul(f),
        }
    }
}
