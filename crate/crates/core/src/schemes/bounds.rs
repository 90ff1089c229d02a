//! Upper bounds on the L(h,k)-chromatic number and two lower-bound
//! certificates.

use serde::Serialize;

use crate::constraints::{check, Colouring};
use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, Distance, Hypergraph};
use crate::inputs;
use crate::report::{BoundReport, Relation};
use crate::solver::chromatic::colour_exact;
use crate::solver::{strong_chromatic_exact, strong_independence_exact};

fn line_chromatic_number(hg: &Hypergraph) -> Result<usize> {
    let m = hg.edge_count();
    let mut adj = vec![Vec::new(); m];
    for a in 0..m {
        for b in (a + 1)..m {
            if intersection_size(&hg.edges()[a], &hg.edges()[b]) > 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    Ok(colour_exact(&adj)?.into_iter().max().map_or(0, |c| c + 1))
}

/// Evaluates every upper bound that applies to `hg` at levels `(h, k)`
/// against a known `lambda`:
///
/// - `strong_partition`: `k(n-k') + (k'-1)h` with `k'` the strong chromatic number;
/// - `stable_set`: `nh + ᾱ(k-h) - k` with `ᾱ` the strong independence number;
/// - `greedy` (h=2, k=1): `(r-1)(Δ+1)Δ`;
/// - `goncalves` (k=1, h>=2, 2-section degree >= 3): `(r-1)Δ(Δr + h - Δ - 1) - 2`;
/// - `griggs_yeh` (h=2, k=1, diameter exactly 2): `((r-1)Δ)²`;
/// - `line_colouring` (h=2, k=1, linear and uniform): `2χr - 2` with `χ` the
///   chromatic number of the line graph.
///
/// Here `r` is the rank and `Δ` the maximum degree.
pub fn bound_suite(hg: &Hypergraph, h: u32, k: u32, lambda: u32) -> Result<Vec<BoundReport>> {
    crate::constraints::check_levels(h, k)?;
    let n = hg.vertex_count() as i64;
    let r = hg.rank() as i64;
    let delta = hg.max_degree() as i64;
    let (hi, ki) = (h as i64, k as i64);
    let lam = lambda as f64;
    let mut out = Vec::new();
    let le = |name: &str, rhs: i64, inputs| BoundReport::evaluate(name, lam, rhs as f64, Relation::Le, inputs);

    let kp = strong_chromatic_exact(hg)? as i64;
    out.push(le(
        "strong_partition",
        ki * (n - kp) + (kp - 1) * hi,
        inputs! {"n" => n, "h" => h, "k" => k, "strong_chromatic" => kp},
    ));
    let alpha = strong_independence_exact(hg)? as i64;
    out.push(le(
        "stable_set",
        n * hi + alpha * (ki - hi) - ki,
        inputs! {"n" => n, "h" => h, "k" => k, "strong_independence" => alpha},
    ));
    let two_one = (h, k) == (2, 1);
    if two_one {
        out.push(le("greedy", (r - 1) * (delta + 1) * delta, inputs! {"r" => r, "max_degree" => delta}));
    }
    let section_degree = hg.two_section_adjacency().iter().map(Vec::len).max().unwrap_or(0);
    if k == 1 && h >= 2 && section_degree >= 3 {
        out.push(le(
            "goncalves",
            (r - 1) * delta * (delta * r + hi - delta - 1) - 2,
            inputs! {"r" => r, "max_degree" => delta, "h" => h, "section_degree" => section_degree},
        ));
    }
    if two_one && hg.diameter() == Distance::Finite(2) {
        out.push(le("griggs_yeh", ((r - 1) * delta).pow(2), inputs! {"r" => r, "max_degree" => delta}));
    }
    if two_one && hg.is_linear() && hg.is_uniform() && !hg.has_isolated_vertex() {
        let chi = line_chromatic_number(hg)? as i64;
        out.push(le("line_colouring", 2 * chi * r - 2, inputs! {"r" => r, "line_chromatic" => chi}));
    }
    Ok(out)
}

/// Diameter at most two makes every pair constrained, so a valid colouring
/// is injective and the span is at least `|V| - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityCertificate {
    pub diameter: Distance,
    pub diameter_at_most_two: bool,
    pub valid: bool,
    pub injective: bool,
    pub lower_bound: u32,
    pub span: u32,
    /// Valid, diameter at most two, and span equal to the lower bound.
    pub optimal: bool,
}

pub fn diameter_two_certificate(hg: &Hypergraph, h: u32, k: u32, f: &Colouring) -> Result<InjectivityCertificate> {
    if k == 0 {
        return Err(Error::Parameter("injectivity needs k >= 1".into()));
    }
    let report = check(hg, h, k, f)?;
    let diameter = hg.diameter();
    let diameter_at_most_two = matches!(diameter, Distance::Finite(d) if d <= 2);
    let colours = f.to_vec(hg)?;
    let mut sorted = colours.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = sorted.len() == colours.len();
    let lower_bound = hg.vertex_count() as u32 - 1;
    Ok(InjectivityCertificate {
        diameter,
        diameter_at_most_two,
        valid: report.valid,
        injective,
        lower_bound,
        span: report.span,
        optimal: report.valid && diameter_at_most_two && report.span == lower_bound,
    })
}

/// A vertex whose star is `K^r_{1,d}`, giving `λ(H) >= λ(K^r_{1,d})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCertificate {
    pub vertex: String,
    pub degree: usize,
    pub r: usize,
    pub lower_bound: u32,
}

/// Best star lower bound over all vertices: `d(r-1) + 1` for a star with
/// `d >= 2` edges, `2(r-1)` for a single edge. `None` if no star is uniform
/// and meets only at its centre.
pub fn star_lower_bound_certificate(hg: &Hypergraph) -> Option<StarCertificate> {
    let mut best: Option<StarCertificate> = None;
    for v in 0..hg.vertex_count() {
        let edges: Vec<&Vec<usize>> = hg.incident(v).iter().map(|&e| &hg.edges()[e]).collect();
        let Some(first) = edges.first() else { continue };
        let r = first.len();
        if edges.iter().any(|e| e.len() != r) {
            continue;
        }
        let disjoint = edges
            .iter()
            .enumerate()
            .all(|(i, a)| edges[i + 1..].iter().all(|b| intersection_size(a, b) == 1));
        if !disjoint {
            continue;
        }
        let d = edges.len();
        let lower_bound = if d >= 2 { (d * (r - 1) + 1) as u32 } else { 2 * (r as u32 - 1) };
        if best.as_ref().is_none_or(|b| lower_bound > b.lower_bound) {
            best = Some(StarCertificate { vertex: hg.vertex(v).to_string(), degree: d, r, lower_bound });
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::schemes::scheme_product_complete;

    #[test]
    fn star_bounds() {
        let st = star_hypergraph(3, 1, 2).unwrap();
        let rows = bound_suite(&st, 2, 1, 5).unwrap();
        let gy = rows.iter().find(|r| r.name == "griggs_yeh").unwrap();
        assert_eq!((gy.rhs, gy.holds), (16.0, true));
        assert!(rows.iter().all(|r| r.holds));
        assert_eq!(rows.iter().find(|r| r.name == "greedy").unwrap().rhs, 12.0);
        assert_eq!(rows.iter().find(|r| r.name == "line_colouring").unwrap().rhs, 10.0);
    }

    #[test]
    fn path_goncalves() {
        let p5 = path_graph(5).unwrap();
        assert!(bound_suite(&p5, 3, 1, 5).unwrap().iter().all(|r| r.name != "goncalves"));
        let petersen = petersen_graph().unwrap();
        let rows = bound_suite(&petersen, 2, 1, 9).unwrap();
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["strong_partition", "stable_set", "greedy", "goncalves", "griggs_yeh", "line_colouring"]);
        assert!(rows.iter().all(|r| r.holds));
        assert!(bound_suite(&complete_graph(2).unwrap(), 2, 1, 2).unwrap().iter().all(|r| r.name != "griggs_yeh"));
    }

    #[test]
    fn injectivity() {
        let out = scheme_product_complete(4, 3).unwrap();
        let hg = cartesian_product(&complete_graph(3).unwrap(), &complete_graph(4).unwrap()).unwrap();
        let cert = diameter_two_certificate(&hg, 2, 1, &out.colouring).unwrap();
        assert!(cert.diameter_at_most_two && cert.injective && cert.optimal);
        assert_eq!(cert.lower_bound, 11);
        let c6 = cycle_graph(6).unwrap();
        let f = Colouring::from_vec(&c6, &[0, 2, 4, 0, 2, 4]);
        let cert = diameter_two_certificate(&c6, 2, 1, &f).unwrap();
        assert!(!cert.diameter_at_most_two && !cert.optimal);
    }

    #[test]
    fn star_certificates() {
        let c = star_lower_bound_certificate(&hyperpath(4, 3).unwrap()).unwrap();
        assert_eq!((c.degree, c.lower_bound), (2, 7));
        let single = star_lower_bound_certificate(&complete_uniform(4, 4).unwrap()).unwrap();
        assert_eq!(single.lower_bound, 6);
        assert!(star_lower_bound_certificate(&complete_uniform(4, 3).unwrap()).is_none());
    }
}
