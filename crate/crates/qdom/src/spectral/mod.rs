//! The signless Laplacian Q(G) = D(G) + A(G), its least eigenpair, and the
//! eigenvector structure facts used by the perturbation arguments.
//!
//! Q is positive semi-definite; its least eigenvalue is zero exactly for
//! bipartite connected graphs, which makes it a nonbipartiteness measure.
//! Everything here is a pure function of immutable inputs.

pub mod eigen;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::report::{VerificationReport, Witness};
use crate::tol;

pub use eigen::{sym_eigen, EigenError, SymEigen};

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vector length {got} does not match order {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("order {order} exceeds the dense-path bound {bound}")]
    TooLarge { order: usize, bound: usize },
    #[error("spectral gap {gap:.3e} below {limit:.0e}: least eigenvector not unique")]
    GapTooSmall { gap: f64, limit: f64 },
    #[error("vertex {from} has no pendant vertices to shift")]
    NoPendants { from: usize },
    #[error("target {to} is a pendant of {from}")]
    TargetIsPendant { from: usize, to: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

/// Largest order served by the dense eigensolver path.
pub const DENSE_BOUND: usize = 64;

/// Dense symmetric matrix, stored row-major with both triangles filled.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> SymMatrix {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.n + c]
    }

    /// Sets entry (r, c) and its mirror.
    pub fn set_sym(&mut self, r: usize, c: usize, value: f64) {
        self.data[r * self.n + c] = value;
        self.data[c * self.n + r] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Row-sum norm.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn multiply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * x[c]).sum())
            .collect()
    }

    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.multiply(x)
            .iter()
            .zip(x)
            .map(|(mx, xi)| mx * xi)
            .sum()
    }
}

/// Least Q-eigenvalue with its unit eigenvector and the distance to the
/// second-smallest eigenvalue.
///
/// Sign is fixed by making the first coordinate exceeding 1e-9 in
/// magnitude positive, so fixtures are deterministic.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub gap: f64,
}

impl EigenPair {
    pub fn coordinate(&self, v: usize) -> f64 {
        self.vector[v]
    }
}

/// Q(G) = D(G) + A(G).
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut q = SymMatrix::zeros(n);
    for v in g.vertices() {
        q.set_sym(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        q.set_sym(u, v, 1.0);
    }
    q
}

/// All Q-eigenvalues, descending (`q_1 >= ... >= q_n`).
pub fn full_q_spectrum(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let n = g.order();
    if n > DENSE_BOUND {
        return Err(SpectralError::TooLarge {
            order: n,
            bound: DENSE_BOUND,
        });
    }
    let q = signless_laplacian(g);
    let mut values = sym_eigen(n, q.as_slice())?.values;
    values.reverse();
    Ok(values)
}

/// Least Q-eigenpair of a connected graph.
pub fn least_q_eigenpair(g: &Graph) -> Result<EigenPair, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    let n = g.order();
    if n > DENSE_BOUND {
        return Err(SpectralError::TooLarge {
            order: n,
            bound: DENSE_BOUND,
        });
    }
    let q = signless_laplacian(g);
    let eig = sym_eigen(n, q.as_slice())?;
    let value = eig.values[0];
    let gap = if n >= 2 {
        eig.values[1] - value
    } else {
        f64::INFINITY
    };
    let mut vector = eig.vectors[0].clone();
    normalize_sign(&mut vector);
    Ok(EigenPair { value, vector, gap })
}

/// Least Q-eigenvalue of a connected graph (the paper's kappa).
pub fn kappa(g: &Graph) -> Result<f64, SpectralError> {
    Ok(least_q_eigenpair(g)?.value)
}

fn normalize_sign(x: &mut [f64]) {
    if let Some(&lead) = x.iter().find(|c| c.abs() > tol::SIGN_EPS) {
        if lead < 0.0 {
            for c in x {
                *c = -*c;
            }
        }
    }
}

/// The identity `x^T Q x = sum over edges uv of (x_u + x_v)^2`, evaluated
/// on the right-hand side.
pub fn rayleigh(g: &Graph, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != g.order() {
        return Err(SpectralError::LengthMismatch {
            got: x.len(),
            want: g.order(),
        });
    }
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| (x[u] + x[v]).powi(2))
        .sum())
}

/// Edge-interlacing check: the spectra of `g` and `g - e` must satisfy
/// `0 <= s_n <= q_n <= ... <= s_1 <= q_1` within the configured slack.
pub fn interlacing_check(g: &Graph, e: (usize, usize)) -> Result<VerificationReport, SpectralError> {
    let reduced = g.delete_edges(&[e])?;
    let q = full_q_spectrum(g)?;
    let s = full_q_spectrum(&reduced)?;
    let n = g.order();
    let slack = tol::INTERLACING_SLACK;
    let mut worst = f64::INFINITY;
    let mut broken = None;
    // Spectra are descending: q[0] = q_1.
    let mut check = |label: String, lo: f64, hi: f64| {
        let margin = hi - lo;
        if margin < worst {
            worst = margin;
        }
        if margin < -slack && broken.is_none() {
            broken = Some((label, margin));
        }
    };
    check("0 <= s_n".into(), 0.0, s[n - 1]);
    for i in 0..n {
        check(format!("s_{} <= q_{}", i + 1, i + 1), s[i], q[i]);
        if i + 1 < n {
            check(format!("q_{} <= s_{}", i + 2, i + 1), q[i + 1], s[i]);
        }
    }
    let report = VerificationReport::pass("interlacing")
        .with_scope("edge", format!("{}-{}", e.0, e.1))
        .with_margin("worst_slack", worst);
    Ok(match broken {
        None => report,
        Some((label, margin)) => VerificationReport::fail(
            "interlacing",
            Witness::new(format!("chain broken at {label}"))
                .with_graph(g)
                .with_value("margin", margin),
        )
        .with_scope("edge", format!("{}-{}", e.0, e.1)),
    })
}

/// One branch of `g` at a cut root, with the eigenvector's verdict on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchClassification {
    pub root: usize,
    pub vertices: BTreeSet<usize>,
    pub kind: BranchKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchKind {
    Zero,
    Nonzero,
}

/// Vertex sets of the branches hanging off `root`: the connected
/// components of `g - root`. Each branch is that component together with
/// the root.
pub fn branches_at(g: &Graph, root: usize) -> Vec<BTreeSet<usize>> {
    let rest: BTreeSet<usize> = g.vertices().filter(|&v| v != root).collect();
    g.components_within(&rest)
}

/// Classifies every bipartite branch at `root` as zero or nonzero with
/// respect to the least eigenvector, verifying the branch structure facts:
/// a zero root zeroes the whole branch; a nonzero root forces every branch
/// coordinate nonzero with signs alternating across the bipartition, so
/// adjacent branch vertices have products below zero.
///
/// Violations surface as errors since they would contradict a proved
/// lemma; a spectral gap under 1e-7 is reported as inconclusive instead.
pub fn classify_branches(
    g: &Graph,
    pair: &EigenPair,
    root: usize,
) -> Result<Vec<BranchClassification>, BranchCheckError> {
    if pair.gap < tol::GAP_INCONCLUSIVE {
        return Err(BranchCheckError::Inconclusive {
            gap: pair.gap,
        });
    }
    let mut out = Vec::new();
    for comp in branches_at(g, root) {
        let mut with_root = comp.clone();
        with_root.insert(root);
        let Some(side) = bipartition_within(g, &with_root) else {
            continue; // only bipartite branches carry the lemma's structure
        };
        let x_root = pair.coordinate(root);
        if x_root.abs() <= tol::ZERO_COORDINATE {
            for &v in &comp {
                if pair.coordinate(v).abs() > tol::ZERO_COORDINATE {
                    return Err(BranchCheckError::Violation {
                        detail: format!(
                            "x({root}) = 0 but branch vertex {v} has x = {}",
                            pair.coordinate(v)
                        ),
                    });
                }
            }
            out.push(BranchClassification {
                root,
                vertices: comp,
                kind: BranchKind::Zero,
            });
        } else {
            for &v in &comp {
                let xv = pair.coordinate(v);
                if xv.abs() <= tol::ZERO_COORDINATE {
                    return Err(BranchCheckError::Violation {
                        detail: format!("x({root}) != 0 but branch vertex {v} has x ~ 0"),
                    });
                }
                let same_side = side[&v] == side[&root];
                if (xv * x_root > 0.0) != same_side {
                    return Err(BranchCheckError::Violation {
                        detail: format!(
                            "sign of x({v}) disagrees with its bipartition side"
                        ),
                    });
                }
            }
            for &u in &comp {
                for w in g.neighbors(u) {
                    if comp.contains(&w) && pair.coordinate(u) * pair.coordinate(w) >= 0.0 {
                        return Err(BranchCheckError::Violation {
                            detail: format!("edge {u}-{w} inside a nonzero branch has x(u)x(w) >= 0"),
                        });
                    }
                }
            }
            out.push(BranchClassification {
                root,
                vertices: comp,
                kind: BranchKind::Nonzero,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Error, PartialEq)]
pub enum BranchCheckError {
    #[error("spectral gap {gap:.3e} too small; eigenvector not unique")]
    Inconclusive { gap: f64 },
    #[error("branch structure violated: {detail}")]
    Violation { detail: String },
}

/// Two-coloring of the subgraph induced on `within`, or `None` if that
/// subgraph is nonbipartite.
fn bipartition_within(
    g: &Graph,
    within: &BTreeSet<usize>,
) -> Option<std::collections::BTreeMap<usize, u8>> {
    let mut color = std::collections::BTreeMap::new();
    for &start in within {
        if color.contains_key(&start) {
            continue;
        }
        color.insert(start, 0u8);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[&u];
            for v in g.neighbors(u) {
                if !within.contains(&v) {
                    continue;
                }
                match color.get(&v) {
                    None => {
                        color.insert(v, 1 - cu);
                        queue.push_back(v);
                    }
                    Some(&cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color)
}

/// Checks that |x| strictly increases away from the root along every
/// nonzero tree branch at `root` (the path-monotonicity fact behind the
/// relocation lemma).
pub fn tree_monotonicity_check(g: &Graph, pair: &EigenPair, root: usize) -> VerificationReport {
    let claim = "tree-monotonicity";
    if pair.gap < tol::GAP_INCONCLUSIVE {
        return VerificationReport::inconclusive(claim)
            .with_scope("root", root)
            .with_margin("gap", pair.gap);
    }
    let mut worst = f64::INFINITY;
    let mut checked = 0usize;
    for comp in branches_at(g, root) {
        if !is_tree_branch(g, root, &comp) {
            continue;
        }
        let nonzero = comp
            .iter()
            .any(|&v| pair.coordinate(v).abs() > tol::ZERO_COORDINATE)
            || pair.coordinate(root).abs() > tol::ZERO_COORDINATE;
        if !nonzero {
            continue;
        }
        // Walk the branch tree away from the root; strict growth on every
        // parent-child pair gives it on every root-to-p path.
        let mut stack = vec![root];
        let mut seen = BTreeSet::from([root]);
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if comp.contains(&v) && seen.insert(v) {
                    let diff = pair.coordinate(v).abs() - pair.coordinate(u).abs();
                    worst = worst.min(diff);
                    checked += 1;
                    stack.push(v);
                }
            }
        }
    }
    if checked == 0 {
        return VerificationReport::inconclusive(claim)
            .with_scope("root", root)
            .with_scope("note", "no nonzero tree branch at root");
    }
    let report = |outcome: VerificationReport| {
        outcome
            .with_scope("root", root)
            .with_margin("worst_increase", worst)
    };
    if worst > tol::STRICT_MARGIN {
        report(VerificationReport::pass(claim))
    } else if worst < -tol::STRICT_MARGIN {
        report(VerificationReport::fail(
            claim,
            Witness::new("monotonicity violated").with_graph(g),
        ))
    } else {
        report(VerificationReport::inconclusive(claim))
    }
}

/// Checks that the least eigenvector does not vanish on all tree
/// attachment roots of an odd-cycle-with-trees graph.
pub fn root_nonzero_check(g: &Graph, pair: &EigenPair, roots: &BTreeSet<usize>) -> VerificationReport {
    let claim = "attachment-root-nonzero";
    let max = roots
        .iter()
        .map(|&v| pair.coordinate(v).abs())
        .fold(0.0f64, f64::max);
    let report = VerificationReport::pass(claim).with_margin("max_abs_root", max);
    if max > tol::ZERO_COORDINATE {
        report
    } else {
        VerificationReport::fail(
            claim,
            Witness::new("eigenvector vanishes on every attachment root")
                .with_graph(g)
                .with_value("max_abs_root", max),
        )
    }
}

/// Re-attaches every pendant vertex of `from` to `to`, preserving order.
///
/// This is the perturbation whose effect on kappa the relocation lemma
/// describes: when |x(to)| > |x(from)| on the least eigenvector, kappa
/// strictly decreases.
pub fn pendant_shift(g: &Graph, from: usize, to: usize) -> Result<Graph, SpectralError> {
    let pendants: Vec<usize> = g
        .neighbors(from)
        .filter(|&p| g.degree(p) == 1)
        .collect();
    if pendants.is_empty() {
        return Err(SpectralError::NoPendants { from });
    }
    if pendants.contains(&to) {
        return Err(SpectralError::TargetIsPendant { from, to });
    }
    let removed: Vec<_> = pendants.iter().map(|&p| (from, p)).collect();
    let added: Vec<_> = pendants.iter().map(|&p| (to, p)).collect();
    Ok(g.delete_edges(&removed)?.add_edges(&added)?)
}

// A branch (component plus root) is a tree iff its edge count, root
// edges included, is exactly the component size.
fn is_tree_branch(g: &Graph, root: usize, comp: &BTreeSet<usize>) -> bool {
    let mut inner = 0;
    for &u in comp {
        for v in g.neighbors(u) {
            if comp.contains(&v) {
                inner += 1;
            }
        }
    }
    let root_edges = g.neighbors(root).filter(|v| comp.contains(v)).count();
    inner / 2 + root_edges == comp.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{construct_c_star, CStarParams};
    use approx::assert_abs_diff_eq;

    #[test]
    fn q_matrix_examples() {
        let q = signless_laplacian(&Graph::complete(3));
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 } else { 1.0 };
                assert_eq!(q.get(i, j), want);
            }
        }
        let q = signless_laplacian(&Graph::path(2));
        assert_eq!(q.as_slice(), &[1.0, 1.0, 1.0, 1.0]);
        let q = signless_laplacian(&Graph::build(1, &[]).unwrap());
        assert_eq!(q.as_slice(), &[0.0]);
    }

    #[test]
    fn spectra_of_small_fixtures() {
        // Q(K3) = I + J: eigenvalues 4, 1, 1.
        let s = full_q_spectrum(&Graph::complete(3)).unwrap();
        assert_abs_diff_eq!(s[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[2], 1.0, epsilon = 1e-12);

        let s = full_q_spectrum(&Graph::path(2)).unwrap();
        assert_abs_diff_eq!(s[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[1], 0.0, epsilon = 1e-12);

        // P3: det(Q - t I) = -t (t-1) (t-3).
        let s = full_q_spectrum(&Graph::path(3)).unwrap();
        assert_abs_diff_eq!(s[0], 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[2], 0.0, epsilon = 1e-12);

        let s = full_q_spectrum(&Graph::build(3, &[]).unwrap()).unwrap();
        assert!(s.iter().all(|v| v.abs() < 1e-15));

        // Q(C5) = 2I + A(C5): eigenvalues 2 + 2 cos(2 pi k / 5).
        let s = full_q_spectrum(&Graph::cycle(5)).unwrap();
        let expect = [
            4.0,
            2.0 + 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos(),
            2.0 + 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos(),
            2.0 + 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos(),
            2.0 + 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos(),
        ];
        for (got, want) in s.iter().zip(expect) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-10);
        }
    }

    #[test]
    fn least_pair_examples() {
        let pair = least_q_eigenpair(&Graph::complete(3)).unwrap();
        assert_abs_diff_eq!(pair.value, 1.0, epsilon = 1e-10);
        assert!(pair.value >= -1e-10);

        // Connected bipartite graphs sit exactly at zero.
        for g in [Graph::path(4), Graph::star(3), Graph::cycle(6)] {
            let pair = least_q_eigenpair(&g).unwrap();
            assert!(pair.value.abs() <= 1e-9, "value {}", pair.value);
        }

        assert!(matches!(
            least_q_eigenpair(&Graph::build(2, &[]).unwrap()),
            Err(SpectralError::Disconnected)
        ));
    }

    /// Independent oracle for the 4-vertex triangle-plus-pendant: scan the
    /// characteristic polynomial (computed by LU determinants, no
    /// eigensolver involved) for its smallest root.
    #[test]
    fn c_star_30_least_root_matches_char_poly() {
        let g = construct_c_star(&CStarParams::new(4, 3, 0).unwrap());
        let q = signless_laplacian(&g);
        #[allow(clippy::needless_range_loop)]
        let det = |t: f64| -> f64 {
            // det(Q - t I) by Gaussian elimination with partial pivoting.
            let n = 4;
            let mut m = [[0.0f64; 4]; 4];
            for r in 0..n {
                for c in 0..n {
                    m[r][c] = q.get(r, c) - if r == c { t } else { 0.0 };
                }
            }
            let mut det = 1.0;
            for col in 0..n {
                let piv = (col..n)
                    .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                    .unwrap();
                if m[piv][col] == 0.0 {
                    return 0.0;
                }
                if piv != col {
                    m.swap(piv, col);
                    det = -det;
                }
                det *= m[col][col];
                for row in col + 1..n {
                    let f = m[row][col] / m[col][col];
                    for c in col..n {
                        m[row][c] -= f * m[col][c];
                    }
                }
            }
            det
        };
        // det(Q - tI) = prod (lambda_i - t) > 0 below the least root; find
        // the first sign change and bisect.
        let mut lo = -0.5;
        let mut hi = lo;
        let mut step = 1e-3;
        while det(hi) > 0.0 {
            lo = hi;
            hi += step;
            step *= 1.05;
        }
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if det(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let pair = least_q_eigenpair(&g).unwrap();
        assert_abs_diff_eq!(pair.value, oracle, epsilon = 1e-9);
        // Cross-match with the frozen value from an external eigensolver.
        assert_abs_diff_eq!(pair.value, 0.4384471871911696, epsilon = 1e-9);
    }

    #[test]
    fn rayleigh_identity_examples() {
        let k3 = Graph::complete(3);
        let x = [1.0 / 3f64.sqrt(); 3];
        assert_abs_diff_eq!(rayleigh(&k3, &x).unwrap(), 4.0, epsilon = 1e-12);

        // A signed 2-coloring vector zeroes every edge term.
        let c6 = Graph::cycle(6);
        let x: Vec<f64> = (0..6)
            .map(|v| if v % 2 == 0 { 1.0 } else { -1.0 } / 6f64.sqrt())
            .collect();
        assert_abs_diff_eq!(rayleigh(&c6, &x).unwrap(), 0.0, epsilon = 1e-12);

        assert_abs_diff_eq!(rayleigh(&k3, &[0.0; 3]).unwrap(), 0.0, epsilon = 1e-15);
        assert!(matches!(
            rayleigh(&k3, &[1.0, 2.0]),
            Err(SpectralError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlacing_check(&Graph::complete(3), (0, 1))
            .unwrap()
            .passed());
        assert!(interlacing_check(&Graph::path(3), (0, 1)).unwrap().passed());
        assert!(matches!(
            interlacing_check(&Graph::path(3), (0, 2)),
            Err(SpectralError::Graph(GraphError::MissingEdge(0, 2)))
        ));
    }

    #[test]
    fn branch_classification_on_c_star() {
        // C*_{3,2} on 7 vertices: at the cycle attachment only the
        // path-plus-pendants branch is bipartite (the cycle remainder
        // closes a triangle with the root) and it is never a zero branch.
        let g = construct_c_star(&CStarParams::new(7, 3, 2).unwrap());
        let pair = least_q_eigenpair(&g).unwrap();
        let classes = classify_branches(&g, &pair, 0).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].kind, BranchKind::Nonzero);
        assert_eq!(classes[0].vertices, BTreeSet::from([3, 4, 5, 6]));

        // At the pendant carrier the two pendant branches are bipartite;
        // the branch back toward the triangle is not.
        let classes = classify_branches(&g, &pair, 4).unwrap();
        assert_eq!(classes.len(), 2);
        for c in &classes {
            assert_eq!(c.kind, BranchKind::Nonzero);
        }
    }

    #[test]
    fn monotonicity_along_c_star_path() {
        let g = construct_c_star(&CStarParams::new(7, 3, 3).unwrap());
        let pair = least_q_eigenpair(&g).unwrap();
        let r = tree_monotonicity_check(&g, &pair, 0);
        assert!(r.passed(), "{r:?}");
        // |x| grows strictly along v1 -> v4 -> v5 -> v6 and to the pendant.
        let path = [0usize, 3, 4, 5, 6];
        for w in path.windows(2) {
            assert!(pair.coordinate(w[1]).abs() > pair.coordinate(w[0]).abs());
        }
    }

    #[test]
    fn monotonicity_inconclusive_on_degenerate_gap() {
        // C5's least Q-eigenvalue has multiplicity two.
        let g = Graph::cycle(5);
        let pair = least_q_eigenpair(&g).unwrap();
        assert!(pair.gap < tol::GAP_INCONCLUSIVE);
        let r = tree_monotonicity_check(&g, &pair, 0);
        assert_eq!(r.outcome, crate::report::Outcome::Inconclusive);
        assert!(matches!(
            classify_branches(&g, &pair, 0),
            Err(BranchCheckError::Inconclusive { .. })
        ));
    }

    #[test]
    fn root_nonzero_on_small_family() {
        for (n, s, l) in [(5, 3, 1), (7, 3, 2), (9, 5, 2)] {
            let g = construct_c_star(&CStarParams::new(n, s, l).unwrap());
            let pair = least_q_eigenpair(&g).unwrap();
            let roots = BTreeSet::from([0usize]);
            assert!(root_nonzero_check(&g, &pair, &roots).passed());
        }
    }

    #[test]
    fn pendant_shift_examples() {
        // Triangle with pendants at vertices 0 and 1; shifting 1's pendant
        // to 0 yields the triangle with both pendants at 0.
        let g = Graph::build(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        let shifted = pendant_shift(&g, 1, 0).unwrap();
        assert_eq!(shifted.degree(0), 4);
        assert_eq!(shifted.degree(1), 2);
        assert_eq!(shifted.pendant_neighbors(), BTreeSet::from([0usize]));

        assert!(matches!(
            pendant_shift(&Graph::cycle(4), 0, 1),
            Err(SpectralError::NoPendants { from: 0 })
        ));
        assert!(matches!(
            pendant_shift(&g, 1, 4),
            Err(SpectralError::TargetIsPendant { from: 1, to: 4 })
        ));
    }

    #[test]
    fn pendant_shift_decreases_kappa_under_lemma_hypothesis() {
        // Triangle 0-1-2, path 0-3-4 carrying pendants 5 and 6, plus a
        // pendant 7 on cycle vertex 1. Eigenvector mass sits at the far
        // end, so moving 7 toward the carrier satisfies the relocation
        // hypothesis |x(to)| > |x(from)| and must lower kappa strictly.
        let g = Graph::build(
            8,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (1, 7)],
        )
        .unwrap();
        let pair = least_q_eigenpair(&g).unwrap();
        let from = 1;
        let before = pair.value;
        let mut tested = 0;
        for to in g.vertices() {
            if to == from || (g.has_edge(from, to) && g.degree(to) == 1) {
                continue;
            }
            if pair.coordinate(to).abs() > pair.coordinate(from).abs() + 1e-9 {
                let after = kappa(&pendant_shift(&g, from, to).unwrap()).unwrap();
                assert!(
                    before - after > tol::STRICT_MARGIN,
                    "to={to}: {before} -> {after}"
                );
                tested += 1;
            }
        }
        assert!(tested > 0, "hypothesis never satisfied; test is vacuous");
    }
}
