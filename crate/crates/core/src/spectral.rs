//! Adjacency spectra, exact expansion constants, and the inequalities
//! relating them to the λ-chromatic number.

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::inputs;
use crate::report::{BoundReport, Relation};

/// Relative residual tolerance for eigenpairs.
pub const DEFAULT_EIGEN_TOLERANCE: f64 = 1e-9;

/// Largest vertex count for subset enumeration.
pub const EXPANSION_LIMIT: usize = 24;

/// Adjacency matrix of the 2-section: 1 for every co-edge pair.
pub fn adjacency_matrix(h: &Hypergraph) -> DMatrix<f64> {
    let n = h.vertex_count();
    let mut a = DMatrix::zeros(n, n);
    for (v, nbrs) in h.two_section_adjacency().iter().enumerate() {
        for &u in nbrs {
            a[(v, u)] = 1.0;
        }
    }
    a
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
    /// Largest `‖Av - μv‖ / ‖A‖` over the computed eigenpairs.
    pub max_residual: f64,
}

impl Spectrum {
    pub fn mu(&self, i: usize) -> f64 {
        self.eigenvalues[i]
    }

    /// `μ0 - μ1`.
    pub fn gap(&self) -> f64 {
        self.eigenvalues[0] - self.eigenvalues[1]
    }
}

pub fn spectrum(h: &Hypergraph, tolerance: f64) -> Result<Spectrum> {
    let a = adjacency_matrix(h);
    let norm = a.norm().max(1.0);
    let eig = SymmetricEigen::new(a.clone());
    let mut max_residual: f64 = 0.0;
    for (i, &mu) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvectors.column(i);
        let residual = (&a * v - v * mu).norm() / norm;
        max_residual = max_residual.max(residual);
    }
    if max_residual > tolerance {
        return Err(Error::Convergence { residual: max_residual, tolerance });
    }
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { eigenvalues, tolerance, max_residual })
}

pub fn spectral_gap(h: &Hypergraph) -> Result<f64> {
    if h.vertex_count() < 2 {
        return Err(Error::Parameter("spectral gap needs at least two vertices".into()));
    }
    Ok(spectrum(h, DEFAULT_EIGEN_TOLERANCE)?.gap())
}

/// `h(G) = min |∂F| / |F|` over non-empty `F` with `|F| <= n/2`, by full
/// enumeration. The subset range is split across worker threads.
pub fn expansion_constant_exact(g: &Hypergraph) -> Result<Ratio<u64>> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n > EXPANSION_LIMIT {
        return Err(Error::TooLarge { vertices: n, limit: EXPANSION_LIMIT });
    }
    let adj: Vec<u32> =
        g.two_section_adjacency().iter().map(|nb| nb.iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let half = (n / 2) as u32;
    let best = (1u32..(1u32 << n))
        .into_par_iter()
        .with_min_len(1 << 12)
        .filter(|f| f.count_ones() <= half)
        .map(|f| {
            let mut boundary = 0u32;
            let mut rest = f;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                boundary += (adj[v] & !f).count_ones();
            }
            Ratio::new(boundary as u64, f.count_ones() as u64)
        })
        .min();
    best.ok_or_else(|| Error::Parameter("expansion constant needs at least two vertices".into()))
}

pub fn ratio_to_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Degree of a connected regular graph.
fn regular_graph_degree(g: &Hypergraph) -> Result<usize> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    g.regular_degree().ok_or(Error::NotRegular)
}

/// `(k - μ1)/2 <= h(G)` and `h(G) <= √(2k(k - μ1))`.
pub fn check_cheeger(g: &Hypergraph) -> Result<[BoundReport; 2]> {
    let degree = regular_graph_degree(g)?;
    let k = degree as f64;
    let spec = spectrum(g, DEFAULT_EIGEN_TOLERANCE)?;
    let mu1 = spec.mu(1);
    let hg = expansion_constant_exact(g)?;
    let h = ratio_to_f64(hg);
    let params = || inputs! {"k" => degree, "mu1" => mu1, "expansion" => hg.to_string(), "n" => g.vertex_count()};
    Ok([
        BoundReport::evaluate("cheeger_lower", (k - mu1) / 2.0, h, Relation::Le, params()),
        BoundReport::evaluate("cheeger_upper", h, (2.0 * k * (k - mu1)).max(0.0).sqrt(), Relation::Le, params()),
    ])
}

fn half_ratio_root(n: usize) -> f64 {
    (n as f64 / (n / 2) as f64).sqrt()
}

/// `h(G) < kλ√(n / ⌊n/2⌋)`.
pub fn check_lambda_expansion(g: &Hypergraph, lambda: u32) -> Result<BoundReport> {
    let k = regular_graph_degree(g)?;
    let n = g.vertex_count();
    let hg = expansion_constant_exact(g)?;
    let rhs = k as f64 * lambda as f64 * half_ratio_root(n);
    Ok(BoundReport::evaluate(
        "lambda_expansion",
        ratio_to_f64(hg),
        rhs,
        Relation::Lt,
        inputs! {"k" => k, "lambda" => lambda, "n" => n, "expansion" => hg.to_string()},
    ))
}

/// `k - μ1 < 2kλ√(n / ⌊n/2⌋)`.
pub fn check_gap_corollary(g: &Hypergraph, lambda: u32) -> Result<BoundReport> {
    let k = regular_graph_degree(g)?;
    let n = g.vertex_count();
    let mu1 = spectrum(g, DEFAULT_EIGEN_TOLERANCE)?.mu(1);
    let rhs = 2.0 * k as f64 * lambda as f64 * half_ratio_root(n);
    Ok(BoundReport::evaluate(
        "gap_corollary",
        k as f64 - mu1,
        rhs,
        Relation::Lt,
        inputs! {"k" => k, "lambda" => lambda, "n" => n, "mu1" => mu1},
    ))
}

/// `k - μ1 < 2k(r-1)λ√(n / ⌊n/2⌋)` for a connected `k`-regular
/// `r`-uniform hypergraph, `μ1` taken from its 2-section.
pub fn check_gap_corollary_hypergraph(h: &Hypergraph, lambda: u32) -> Result<BoundReport> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if !h.is_uniform() {
        return Err(Error::Structure("hypergraph must be uniform".into()));
    }
    let k = h.regular_degree().ok_or(Error::NotRegular)?;
    let r = h.rank();
    let n = h.vertex_count();
    let mu1 = spectrum(h, DEFAULT_EIGEN_TOLERANCE)?.mu(1);
    let rhs = 2.0 * k as f64 * (r - 1) as f64 * lambda as f64 * half_ratio_root(n);
    Ok(BoundReport::evaluate(
        "gap_corollary_hypergraph",
        k as f64 - mu1,
        rhs,
        Relation::Lt,
        inputs! {"k" => k, "r" => r, "lambda" => lambda, "n" => n, "mu1" => mu1},
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use approx::assert_abs_diff_eq;

    fn eig(h: &Hypergraph) -> Vec<f64> {
        spectrum(h, DEFAULT_EIGEN_TOLERANCE).unwrap().eigenvalues
    }

    #[test]
    fn adjacency_examples() {
        let tri = complete_uniform(3, 3).unwrap();
        assert_eq!(adjacency_matrix(&tri), DMatrix::from_element(3, 3, 1.0) - DMatrix::identity(3, 3));
        let p = adjacency_matrix(&hyperpath(3, 2).unwrap());
        assert_eq!(p.sum(), 12.0);
        assert_eq!(p.row(2).sum(), 4.0);
        let k4 = complete_graph(4).unwrap();
        assert_eq!(adjacency_matrix(&k4), DMatrix::from_element(4, 4, 1.0) - DMatrix::identity(4, 4));
    }

    #[test]
    fn spectra() {
        let k4 = eig(&complete_graph(4).unwrap());
        for (got, want) in k4.iter().zip([3.0, -1.0, -1.0, -1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
        }
        let c4 = eig(&cycle_graph(4).unwrap());
        for (got, want) in c4.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
        }
        let pet = eig(&petersen_graph().unwrap());
        let rounded: Vec<i64> = pet.iter().map(|x| x.round() as i64).collect();
        assert_eq!(rounded, vec![3, 1, 1, 1, 1, 1, -2, -2, -2, -2]);
        assert!(pet.iter().all(|x| (x - x.round()).abs() < 1e-9));
    }

    #[test]
    fn gaps() {
        for n in 3..=7 {
            assert_abs_diff_eq!(spectral_gap(&complete_graph(n).unwrap()).unwrap(), n as f64, epsilon = 1e-9);
        }
        assert_abs_diff_eq!(spectral_gap(&cycle_graph(6).unwrap()).unwrap(), 1.0, epsilon = 1e-9);
        let two_triangles = Hypergraph::from_json(
            r#"{"vertices":["a","b","c","d","e","f"],"edges":[["a","b"],["b","c"],["a","c"],["d","e"],["e","f"],["d","f"]]}"#,
        )
        .unwrap();
        assert_abs_diff_eq!(spectral_gap(&two_triangles).unwrap(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn expansion_values() {
        assert_eq!(expansion_constant_exact(&complete_graph(4).unwrap()).unwrap(), Ratio::new(2, 1));
        assert_eq!(expansion_constant_exact(&cycle_graph(6).unwrap()).unwrap(), Ratio::new(2, 3));
        assert_eq!(expansion_constant_exact(&cycle_graph(4).unwrap()).unwrap(), Ratio::new(1, 1));
        assert_eq!(expansion_constant_exact(&petersen_graph().unwrap()).unwrap(), Ratio::new(1, 1));
        assert!(matches!(expansion_constant_exact(&complete_uniform(4, 3).unwrap()), Err(Error::NotAGraph)));
        assert!(matches!(
            expansion_constant_exact(&hypercube_graph(5).unwrap()),
            Err(Error::TooLarge { vertices: 32, .. })
        ));
    }

    #[test]
    fn cheeger_examples() {
        for g in [complete_graph(4).unwrap(), cycle_graph(6).unwrap(), petersen_graph().unwrap()] {
            let [lo, hi] = check_cheeger(&g).unwrap();
            assert!(lo.holds && hi.holds);
        }
        let [lo, _] = check_cheeger(&complete_graph(4).unwrap()).unwrap();
        assert_abs_diff_eq!(lo.lhs, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(lo.rhs, 2.0, epsilon = 1e-12);
        assert!(matches!(check_cheeger(&path_graph(4).unwrap()), Err(Error::NotRegular)));
    }

    #[test]
    fn lambda_bounds() {
        let k4 = complete_graph(4).unwrap();
        let r = check_lambda_expansion(&k4, 6).unwrap();
        assert!(r.holds);
        assert_abs_diff_eq!(r.rhs, 18.0 * 2f64.sqrt(), epsilon = 1e-9);
        assert!(check_lambda_expansion(&cycle_graph(6).unwrap(), 4).unwrap().holds);
        assert!(check_lambda_expansion(&petersen_graph().unwrap(), 9).unwrap().holds);
        let gc = check_gap_corollary(&k4, 6).unwrap();
        assert!(gc.holds);
        assert_abs_diff_eq!(gc.lhs, 4.0, epsilon = 1e-9);
        let c5 = check_gap_corollary(&cycle_graph(5).unwrap(), 4).unwrap();
        let want = 2.0 - 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert_abs_diff_eq!(c5.lhs, want, epsilon = 1e-9);
        assert_abs_diff_eq!(c5.rhs, 16.0 * 2.5f64.sqrt(), epsilon = 1e-9);
        let h43 = check_gap_corollary_hypergraph(&complete_uniform(4, 3).unwrap(), 6).unwrap();
        assert!(h43.holds);
        assert_abs_diff_eq!(h43.lhs, 4.0, epsilon = 1e-9);
        assert_abs_diff_eq!(h43.rhs, 72.0 * 2f64.sqrt(), epsilon = 1e-9);
    }
}
