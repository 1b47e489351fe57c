/// Hard resource bounds. Every algorithm in this crate is exponential in
/// some parameter, so each one checks its input size against these before
/// doing any work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    pub max_group_order: usize,
    pub max_spins: usize,
    /// Bound on `|Q|^|V|` for state enumeration.
    pub max_states: u128,
    /// Bound on `2^|E|` for inclusion-exclusion.
    pub max_subsets: u128,
    /// Edge count bound for enumerating holonomy-closed sets.
    pub max_lattice_edges: usize,
    pub max_delcon_calls: u64,
    pub max_parts: usize,
    /// Bound on `|E(expansion)|` for group expansions.
    pub max_expansion_edges: usize,
    /// Vertex bound for interpolated univariate polynomials.
    pub max_poly_vertices: usize,
    /// Largest `k` for set colorings (`S_k` on `2^k` subsets).
    pub max_set_colors: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 5040,
            max_spins: 4096,
            max_states: 100_000_000,
            max_subsets: 1 << 22,
            max_lattice_edges: 18,
            max_delcon_calls: 50_000_000,
            max_parts: 8,
            max_expansion_edges: 4096,
            max_poly_vertices: 12,
            max_set_colors: 4,
        }
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == 0 || acc == u128::MAX {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturating_pow_edges() {
        assert_eq!(saturating_pow(0, 0), 1);
        assert_eq!(saturating_pow(0, 3), 0);
        assert_eq!(saturating_pow(3, 4), 81);
        assert_eq!(saturating_pow(1 << 64, 3), u128::MAX);
    }
}
