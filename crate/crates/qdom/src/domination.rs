//! Exact minimum dominating sets over closed-neighborhood bitmasks.
//!
//! The solver branches on the lowest-index undominated vertex, trying each
//! member of its closed neighborhood, pruned by a greedy upper bound and
//! the packing lower bound `ceil(undominated / (max degree + 1))`. No
//! memoization: the n <= 16 workloads finish in microseconds and ordering
//! does the rest. Orders up to 64 are accepted but only small instances
//! are expected to terminate quickly.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("order {order} exceeds bound {bound} for this operation")]
    TooLarge { order: usize, bound: usize },
    #[error("graph has no pendant vertices")]
    NoPendantVertices,
    #[error("a pendant vertex is its own pendant neighbor (two-vertex component)")]
    DegeneratePendants,
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// Largest order the exact solver accepts.
pub const SOLVER_BOUND: usize = 64;
/// Largest order for the all-minimum-sets and independent-domination
/// enumerations, which can blow up combinatorially.
pub const ENUMERATION_BOUND: usize = 32;

/// A dominating set over vertices `0..n`, `n <= 64`, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DominatingSet {
    mask: u64,
    minimal_certified: bool,
}

impl DominatingSet {
    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> DominatingSet {
        let mut mask = 0;
        for v in vertices {
            debug_assert!(v < 64);
            mask |= 1 << v;
        }
        DominatingSet {
            mask,
            minimal_certified: false,
        }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn size(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask >> v & 1 == 1
    }

    /// True once the solver has certified that no smaller set dominates.
    pub fn minimal_certified(&self) -> bool {
        self.minimal_certified
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..64).filter(|&v| self.contains(v)).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        (0..64).filter(|&v| self.contains(v)).collect()
    }
}

/// True iff the closed neighborhoods of `s` cover every vertex.
pub fn dominates(g: &Graph, s: &BTreeSet<usize>) -> bool {
    if g.order() <= 64 {
        let solver = Masks::new(g);
        let mut covered = 0u64;
        for &v in s {
            covered |= solver.closed[v];
        }
        return covered == solver.full;
    }
    let mut covered = vec![false; g.order()];
    for &v in s {
        covered[v] = true;
        for w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

struct Masks {
    n: usize,
    closed: Vec<u64>,
    full: u64,
    cover_cap: usize, // max degree + 1
}

impl Masks {
    fn new(g: &Graph) -> Masks {
        let n = g.order();
        assert!(n <= 64);
        let closed: Vec<u64> = (0..n).map(|v| g.closed_neighborhood_mask(v)).collect();
        let full = if n == 64 { u64::MAX } else { (1 << n) - 1 };
        Masks {
            n,
            closed,
            full,
            cover_cap: g.max_degree() + 1,
        }
    }

    fn greedy_upper(&self) -> usize {
        let mut covered = 0u64;
        let mut count = 0;
        while covered != self.full {
            let pick = (0..self.n)
                .max_by_key(|&v| ((self.closed[v] & !covered).count_ones(), usize::MAX - v))
                .unwrap();
            covered |= self.closed[pick];
            count += 1;
        }
        count
    }

    fn lower_bound(&self, dominated: u64) -> usize {
        let open = (self.full & !dominated).count_ones() as usize;
        open.div_ceil(self.cover_cap)
    }

    fn optimum(&self) -> usize {
        let mut best = self.greedy_upper();
        self.optimum_rec(0, 0, &mut best);
        best
    }

    fn optimum_rec(&self, dominated: u64, chosen: usize, best: &mut usize) {
        if dominated == self.full {
            *best = (*best).min(chosen);
            return;
        }
        if chosen + self.lower_bound(dominated) >= *best {
            return;
        }
        let u = (!dominated & self.full).trailing_zeros() as usize;
        let mut candidates = self.closed[u];
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.optimum_rec(dominated | self.closed[c], chosen + 1, best);
        }
    }

    /// Is there a dominating set containing `forced`, avoiding `banned`,
    /// of size at most `budget`?
    fn feasible(&self, forced: u64, banned: u64, budget: usize) -> bool {
        let mut dominated = 0u64;
        let mut count = 0;
        let mut f = forced;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            dominated |= self.closed[v];
            count += 1;
        }
        if count > budget {
            return false;
        }
        self.feasible_rec(dominated, count, banned, budget)
    }

    fn feasible_rec(&self, dominated: u64, count: usize, banned: u64, budget: usize) -> bool {
        if dominated == self.full {
            return true;
        }
        if count + self.lower_bound(dominated) > budget {
            return false;
        }
        let u = (!dominated & self.full).trailing_zeros() as usize;
        let mut candidates = self.closed[u] & !banned;
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if self.feasible_rec(dominated | self.closed[c], count + 1, banned, budget) {
                return true;
            }
        }
        false
    }

    /// The minimum dominating set whose bitmask is numerically least:
    /// decide vertices from the top bit down, banning each one whenever a
    /// feasible completion still exists.
    fn lex_min_witness(&self, gamma: usize) -> u64 {
        let mut banned = 0u64;
        let mut forced = 0u64;
        for v in (0..self.n).rev() {
            let bit = 1u64 << v;
            if self.feasible(forced, banned | bit, gamma) {
                banned |= bit;
            } else {
                forced |= bit;
            }
        }
        debug_assert_eq!(forced.count_ones() as usize, gamma);
        forced
    }

    fn all_minimum(&self, gamma: usize) -> Vec<u64> {
        let mut found = std::collections::HashSet::new();
        self.all_rec(0, 0, gamma, &mut found);
        let mut out: Vec<u64> = found.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn all_rec(
        &self,
        dominated: u64,
        chosen: u64,
        gamma: usize,
        found: &mut std::collections::HashSet<u64>,
    ) {
        if dominated == self.full {
            debug_assert_eq!(chosen.count_ones() as usize, gamma);
            found.insert(chosen);
            return;
        }
        let count = chosen.count_ones() as usize;
        if count + self.lower_bound(dominated).max(1) > gamma {
            return;
        }
        let u = (!dominated & self.full).trailing_zeros() as usize;
        let mut candidates = self.closed[u];
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.all_rec(dominated | self.closed[c], chosen | 1 << c, gamma, found);
        }
    }
}

/// Exact domination number with a certified witness, the minimum set with
/// the numerically least bitmask.
pub fn domination_number(g: &Graph) -> Result<DominatingSet, DominationError> {
    if g.order() > SOLVER_BOUND {
        return Err(DominationError::TooLarge {
            order: g.order(),
            bound: SOLVER_BOUND,
        });
    }
    let masks = Masks::new(g);
    let gamma = masks.optimum();
    let witness = masks.lex_min_witness(gamma);
    Ok(DominatingSet {
        mask: witness,
        minimal_certified: true,
    })
}

/// Convenience: just the number.
pub fn gamma(g: &Graph) -> Result<usize, DominationError> {
    Ok(domination_number(g)?.size())
}

/// Every dominating set of minimum size, in ascending bitmask order.
pub fn all_minimum_dominating_sets(g: &Graph) -> Result<Vec<DominatingSet>, DominationError> {
    if g.order() > ENUMERATION_BOUND {
        return Err(DominationError::TooLarge {
            order: g.order(),
            bound: ENUMERATION_BOUND,
        });
    }
    let masks = Masks::new(g);
    let gamma = masks.optimum();
    Ok(masks
        .all_minimum(gamma)
        .into_iter()
        .map(|mask| DominatingSet {
            mask,
            minimal_certified: true,
        })
        .collect())
}

/// A minimum dominating set containing every pendant neighbor and no
/// pendant vertex, built by exchanging each pendant for its neighbor in
/// the solver's witness until that holds, then re-verified.
pub fn pendant_respecting_min_dominating_set(
    g: &Graph,
) -> Result<DominatingSet, DominationError> {
    let pendants = g.pendant_vertices();
    if pendants.is_empty() {
        return Err(DominationError::NoPendantVertices);
    }
    // A pendant whose own neighbor is a pendant (a two-vertex component)
    // cannot satisfy "all pendant neighbors in, all pendants out".
    for &p in &pendants {
        let nb = g.neighbors(p).next().unwrap();
        if g.degree(nb) == 1 {
            return Err(DominationError::DegeneratePendants);
        }
    }
    let start = domination_number(g)?;
    let target_size = start.size();
    let mut members = start.vertex_set();
    loop {
        let missing = g
            .pendant_neighbors()
            .into_iter()
            .find(|v| !members.contains(v));
        let Some(v) = missing else { break };
        let its_pendants: Vec<usize> = g
            .neighbors(v)
            .filter(|&p| g.degree(p) == 1)
            .collect();
        // Every pendant of v must be in the set when v is not, else the
        // pendant is undominated.
        for &p in &its_pendants {
            if !members.contains(&p) {
                return Err(DominationError::TheoremViolation(format!(
                    "pendant {p} of absent neighbor {v} missing from a dominating set"
                )));
            }
        }
        if its_pendants.len() >= 2 {
            // Swapping k >= 2 pendants for one vertex would shrink a
            // minimum dominating set.
            return Err(DominationError::TheoremViolation(format!(
                "exchange at {v} would shrink a certified minimum set"
            )));
        }
        for p in its_pendants {
            members.remove(&p);
        }
        members.insert(v);
    }
    if members.len() != target_size || !dominates(g, &members) {
        return Err(DominationError::TheoremViolation(
            "pendant exchange failed to preserve a minimum dominating set".into(),
        ));
    }
    for &p in &pendants {
        if members.contains(&p) {
            return Err(DominationError::TheoremViolation(format!(
                "pendant {p} remains in the exchanged set"
            )));
        }
    }
    Ok(DominatingSet {
        mask: DominatingSet::from_vertices(members).mask,
        minimal_certified: true,
    })
}

/// Exact minimum cardinality over independent dominating sets.
pub fn independent_domination_number(g: &Graph) -> Result<usize, DominationError> {
    let n = g.order();
    if n > ENUMERATION_BOUND {
        return Err(DominationError::TooLarge {
            order: n,
            bound: ENUMERATION_BOUND,
        });
    }
    let masks = Masks::new(g);
    let open: Vec<u64> = (0..n)
        .map(|v| masks.closed[v] & !(1u64 << v))
        .collect();

    // Greedy maximal independent set: independent and dominating.
    let mut best = {
        let mut blocked = 0u64;
        let mut count = 0;
        for v in 0..n {
            if blocked >> v & 1 == 0 {
                blocked |= masks.closed[v];
                count += 1;
            }
        }
        count
    };

    fn rec(
        masks: &Masks,
        open: &[u64],
        dominated: u64,
        chosen: u64,
        count: usize,
        best: &mut usize,
    ) {
        if dominated == masks.full {
            *best = (*best).min(count);
            return;
        }
        if count + masks.lower_bound(dominated) >= *best {
            return;
        }
        let u = (!dominated & masks.full).trailing_zeros() as usize;
        let mut candidates = masks.closed[u];
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if open[c] & chosen != 0 {
                continue; // would break independence
            }
            rec(masks, open, dominated | masks.closed[c], chosen | 1 << c, count + 1, best);
        }
    }
    rec(&masks, &open, 0, 0, 0, &mut best);
    Ok(best)
}

/// True iff no vertex has three pairwise-nonadjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    for v in g.vertices() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Reference implementations kept deliberately naive for cross-validation
/// of the branch-and-bound path. Exponential; small orders only.
pub mod crosscheck {
    use super::*;

    /// Domination number by enumerating all `2^n` vertex subsets.
    pub fn gamma_subset_bruteforce(g: &Graph) -> Result<usize, DominationError> {
        let n = g.order();
        if n > 24 {
            return Err(DominationError::TooLarge { order: n, bound: 24 });
        }
        let closed: Vec<u64> = (0..n).map(|v| g.closed_neighborhood_mask(v)).collect();
        let full = (1u64 << n) - 1;
        let mut best = n;
        for mask in 1u64..=full {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            let mut covered = 0u64;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                covered |= closed[v];
            }
            if covered == full {
                best = size;
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{construct_c_star, CStarParams};

    fn fig_3_4_g() -> Graph {
        Graph::build(
            9,
            &[
                (0, 1),
                (0, 4),
                (0, 7),
                (0, 8),
                (1, 2),
                (1, 5),
                (2, 3),
                (3, 4),
                (3, 6),
                (4, 5),
                (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn dominates_examples() {
        assert!(dominates(&Graph::complete(3), &BTreeSet::from([0])));
        assert!(!dominates(&Graph::path(4), &BTreeSet::from([0])));
        // The paper's set {v1, v4, v6} is {0, 3, 5} here.
        assert!(dominates(&fig_3_4_g(), &BTreeSet::from([0, 3, 5])));
    }

    #[test]
    fn path_formula() {
        for n in 1..=30 {
            assert_eq!(
                gamma(&Graph::path(n)).unwrap(),
                n.div_ceil(3),
                "gamma(P_{n})"
            );
        }
    }

    #[test]
    fn fig_3_4_gamma_is_three() {
        let d = domination_number(&fig_3_4_g()).unwrap();
        assert_eq!(d.size(), 3);
        assert!(d.minimal_certified());
        assert!(dominates(&fig_3_4_g(), &d.vertex_set()));
    }

    #[test]
    fn ore_bound_on_connected_graphs() {
        use crate::random::random_connected;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let g = random_connected(2..=14, &mut rng);
            assert!(2 * gamma(&g).unwrap() <= g.order() + 1); // gamma <= n/2, integer form
        }
    }

    #[test]
    fn all_minimum_sets_of_small_paths() {
        let sets = all_minimum_dominating_sets(&Graph::complete(3)).unwrap();
        let masks: Vec<u64> = sets.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b001, 0b010, 0b100]);

        let sets = all_minimum_dominating_sets(&Graph::path(3)).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].vertices(), vec![1]);

        // Frozen by subset brute force over all 16 subsets of P4:
        // size-2 dominating sets are {0,2}, {1,2}, {0,3}, {1,3}.
        let sets = all_minimum_dominating_sets(&Graph::path(4)).unwrap();
        let masks: Vec<u64> = sets.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b0101, 0b0110, 0b1001, 0b1010]);
    }

    #[test]
    fn witness_is_lex_least_bitmask() {
        // For fig 3.4 the smallest 3-vertex dominating bitmask is {0,1,3}.
        let d = domination_number(&fig_3_4_g()).unwrap();
        assert_eq!(d.mask(), 0b1011);
        let all = all_minimum_dominating_sets(&fig_3_4_g()).unwrap();
        assert_eq!(all[0].mask(), d.mask());
    }

    #[test]
    fn pendant_respecting_examples() {
        let d = pendant_respecting_min_dominating_set(&Graph::star(4)).unwrap();
        assert_eq!(d.vertices(), vec![0]);

        let d = pendant_respecting_min_dominating_set(&Graph::path(4)).unwrap();
        assert_eq!(d.vertices(), vec![1, 2]);

        // C*_{3,2} on 7 vertices with two pendants at the carrier.
        let g = construct_c_star(&CStarParams::new(7, 3, 2).unwrap());
        let d = pendant_respecting_min_dominating_set(&g).unwrap();
        assert_eq!(d.size(), gamma(&g).unwrap());
        assert!(d.contains(4)); // the pendant carrier
        for p in g.pendant_vertices() {
            assert!(!d.contains(p));
        }
        // Cross-check against the full minimum-set enumeration.
        let all = all_minimum_dominating_sets(&g).unwrap();
        assert!(all.iter().any(|s| s.mask() == d.mask()));

        assert_eq!(
            pendant_respecting_min_dominating_set(&Graph::cycle(4)),
            Err(DominationError::NoPendantVertices)
        );
        assert_eq!(
            pendant_respecting_min_dominating_set(&Graph::path(2)),
            Err(DominationError::DegeneratePendants)
        );
    }

    #[test]
    fn independent_domination_examples() {
        for n in 1..=15 {
            assert_eq!(
                independent_domination_number(&Graph::path(n)).unwrap(),
                n.div_ceil(3)
            );
        }
        assert_eq!(independent_domination_number(&Graph::complete(3)).unwrap(), 1);
        // K_{1,3}: i = 1 (the center) even though it is the claw itself.
        assert_eq!(independent_domination_number(&Graph::star(3)).unwrap(), 1);
    }

    #[test]
    fn claw_free_examples() {
        assert!(is_claw_free(&Graph::path(6)));
        assert!(is_claw_free(&Graph::cycle(6)));
        assert!(!is_claw_free(&Graph::star(3)));
        assert!(!is_claw_free(&fig_3_4_g()));
    }

    #[test]
    fn claw_free_graphs_have_equal_i_and_gamma() {
        use crate::random::random_connected;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut seen = 0;
        for _ in 0..400 {
            let g = random_connected(2..=12, &mut rng);
            if is_claw_free(&g) {
                seen += 1;
                assert_eq!(
                    independent_domination_number(&g).unwrap(),
                    gamma(&g).unwrap()
                );
            }
        }
        assert!(seen > 10, "too few claw-free samples ({seen})");
    }

    #[test]
    fn solver_matches_subset_bruteforce() {
        use crate::random::random_connected;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..150 {
            let g = random_connected(1..=12, &mut rng);
            assert_eq!(
                gamma(&g).unwrap(),
                crosscheck::gamma_subset_bruteforce(&g).unwrap(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn corollary_3_3_ii_on_multi_pendant_neighbors() {
        // Any vertex with >= 2 pendants lies in every minimum dominating
        // set, and none of its pendants does.
        let g = construct_c_star(&CStarParams::new(7, 3, 2).unwrap());
        let multi: Vec<usize> = g
            .pendant_neighbors()
            .into_iter()
            .filter(|&v| g.neighbors(v).filter(|&p| g.degree(p) == 1).count() >= 2)
            .collect();
        assert_eq!(multi, vec![4]);
        for d in all_minimum_dominating_sets(&g).unwrap() {
            assert!(d.contains(4));
            for p in g.neighbors(4).filter(|&p| g.degree(p) == 1) {
                assert!(!d.contains(p));
            }
        }
    }
}
