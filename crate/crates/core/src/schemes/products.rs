//! Cartesian products with a complete factor: `K_m □ K_n` and
//! `K^r_{c,m} □ K_n`.
//!
//! Both constructions split the vertices into classes whose members are
//! pairwise unconstrained, then order the classes along a Hamiltonian path
//! of the complement of the class conflict graph, so consecutive classes
//! never hold adjacent vertices.

use super::hamilton::hamiltonian_path_avoiding;
use super::shapes::recognise_star;
use super::{finish, SchemeOutcome};
use crate::constraints::{check_levels, Requirements};
use crate::constructions::{cartesian_product, complete_graph, star_hypergraph};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::solver::{colouring_within, lambda_exact, SolveBudget, MAX_SPAN};

const PATH_NODE_LIMIT: u64 = 5_000_000;

/// Closed form claimed for `λ_{h,k}(K^r_{c,m} □ K_n)`.
pub fn product_star_complete_formula(r: usize, n: usize, h: u32, k: u32) -> u32 {
    let (r, n) = (r as u32, n as u32);
    if k * r >= h {
        k * n * r - k
    } else {
        k * (r - 1) + h * (n - 1)
    }
}

/// Orders `classes` and gives each class one colour. Every class starts
/// `k` above the previous one and at least `h` above any earlier class it
/// has an adjacent pair with. `None` if no class path exists.
fn class_path_colours(req: &Requirements, classes: &[Vec<usize>], h: u32, k: u32) -> Option<Vec<u32>> {
    let q = classes.len();
    let mut worst = vec![vec![0u32; q]; q];
    for a in 0..q {
        for b in 0..q {
            if a != b {
                worst[a][b] = classes[a]
                    .iter()
                    .flat_map(|&x| classes[b].iter().map(move |&y| (x, y)))
                    .map(|(x, y)| req.gap(x, y))
                    .max()
                    .unwrap_or(0);
            }
        }
    }
    let conflict: Vec<Vec<bool>> = worst.iter().map(|row| row.iter().map(|&g| g > k).collect()).collect();
    let order = hamiltonian_path_avoiding(&conflict, PATH_NODE_LIMIT)?;
    let mut class_colour = vec![0u32; q];
    for (t, &cl) in order.iter().enumerate() {
        let mut c = if t == 0 { 0 } else { class_colour[order[t - 1]] + k };
        for &prev in &order[..t] {
            if worst[prev][cl] > k {
                c = c.max(class_colour[prev] + h);
            }
        }
        class_colour[cl] = c;
    }
    let mut colours = vec![0u32; req.len()];
    for (cl, members) in classes.iter().enumerate() {
        for &v in members {
            colours[v] = class_colour[cl];
        }
    }
    Some(colours)
}

fn exact_fallback(hg: &Hypergraph, h: u32, k: u32) -> Result<SchemeOutcome> {
    let res = lambda_exact(hg, h, k, &SolveBudget::default())?;
    res.value()?;
    finish(hg, h, k, &res.witness.to_vec(hg)?, true)
}

/// `K_n □ K_m` with `n <= m`; vertex `(x_i, y_j)` sits at `(i-1)m + (j-1)`.
fn product_complete_graph(m: usize, n: usize) -> Result<Hypergraph> {
    cartesian_product(&complete_graph(n)?, &complete_graph(m)?)
}

/// The piecewise colouring of `(x_i, y_j)`, offsets `j - i` read modulo
/// `m`, first matching case wins. `None` if some cell matches no case.
fn piecewise_product_colours(m: usize, n: usize) -> Option<Vec<u32>> {
    let (mi, ni) = (m as i64, n as i64);
    let mut colours = Vec::with_capacity(m * n);
    for i in 1..=ni {
        for j in 1..=mi {
            let d = (j - i).rem_euclid(mi);
            let kk = mi - d;
            let kd = d - (mi - ni);
            let value = if d == 0 {
                i - 1
            } else if (1..=mi - ni + 1).contains(&d) {
                d * ni + i - 1
            } else if d == mi - 1 {
                mi * ni + 2 * ni - ni * ni + i - 2
            } else if (2..=ni - 1).contains(&kk) {
                ni * (mi + 2 * kk) - ni * ni - kk * kk - 1 + i
            } else if (1..=ni - 1).contains(&kd) {
                ni * (mi + 1) + kd * (2 * ni - kd - 1) - ni * ni - 3 + i
            } else {
                return None;
            };
            colours.push(u32::try_from(value).ok()?);
        }
    }
    Some(colours)
}

/// L(2,1) colouring of `K_m □ K_n` (`2 <= n <= m`) of span `mn - 1`:
/// the piecewise formula when it checks out, else a Hamiltonian path in
/// the complement of the rook graph. Only `m = n = 2` (the 4-cycle) has
/// neither, and then the exact optimum is returned.
pub fn scheme_product_complete(m: usize, n: usize) -> Result<SchemeOutcome> {
    if !(2 <= n && n <= m) {
        return Err(Error::Parameter(format!("product scheme needs 2 <= n <= m (m={m}, n={n})")));
    }
    let hg = product_complete_graph(m, n)?;
    if let Some(colours) = piecewise_product_colours(m, n) {
        let mut sorted = colours.clone();
        sorted.sort_unstable();
        let bijective = sorted.iter().enumerate().all(|(i, &c)| c == i as u32);
        if bijective {
            if let Ok(out) = finish(&hg, 2, 1, &colours, false) {
                return Ok(out);
            }
        }
    }
    let req = Requirements::for_hypergraph(&hg, 2, 1);
    let singletons: Vec<Vec<usize>> = (0..m * n).map(|v| vec![v]).collect();
    match class_path_colours(&req, &singletons, 2, 1) {
        Some(colours) => finish(&hg, 2, 1, &colours, true),
        None => exact_fallback(&hg, 2, 1),
    }
}

/// Splits a top-level `(x|y)` product label.
fn split_label(label: &str) -> Option<(&str, &str)> {
    let inner = label.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '|' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

/// A Cartesian product recovered from `(x|y)` labels.
struct Factored {
    left: Hypergraph,
    right: Hypergraph,
    /// Factor coordinates of each input vertex.
    coord: Vec<(usize, usize)>,
}

fn factor_product(hg: &Hypergraph) -> Result<Factored> {
    let bad = |why: &str| Error::SchemeMismatch(format!("input is not a labelled Cartesian product: {why}"));
    let mut left: Vec<String> = Vec::new();
    let mut right: Vec<String> = Vec::new();
    let mut coord = Vec::with_capacity(hg.vertex_count());
    for v in hg.vertices() {
        let (a, b) = split_label(v.as_str()).ok_or_else(|| bad("label without (x|y) form"))?;
        let pos = |list: &mut Vec<String>, s: &str| {
            list.iter().position(|x| x == s).unwrap_or_else(|| {
                list.push(s.to_string());
                list.len() - 1
            })
        };
        coord.push((pos(&mut left, a), pos(&mut right, b)));
    }
    if left.len() * right.len() != hg.vertex_count() {
        return Err(bad("vertex set is not a full grid"));
    }
    let mut left_edges = std::collections::BTreeSet::new();
    let mut right_edges = std::collections::BTreeSet::new();
    for e in hg.edges() {
        let rows: std::collections::BTreeSet<usize> = e.iter().map(|&v| coord[v].0).collect();
        let cols: std::collections::BTreeSet<usize> = e.iter().map(|&v| coord[v].1).collect();
        match (rows.len(), cols.len()) {
            (1, _) => {
                right_edges.insert(cols.into_iter().collect::<Vec<_>>());
            }
            (_, 1) => {
                left_edges.insert(rows.into_iter().collect::<Vec<_>>());
            }
            _ => return Err(bad("an edge spans several rows and columns")),
        }
    }
    let left_h = Hypergraph::from_indexed(left, left_edges.into_iter().collect())?;
    let right_h = Hypergraph::from_indexed(right, right_edges.into_iter().collect())?;
    let rebuilt = cartesian_product(&left_h, &right_h)?;
    if rebuilt.edge_count() != hg.edge_count() {
        return Err(bad("edges are not the product edges"));
    }
    Ok(Factored { left: left_h, right: right_h, coord })
}

fn is_complete(h: &Hypergraph) -> bool {
    let n = h.vertex_count();
    h.two_section_adjacency().iter().all(|a| a.len() == n - 1)
}

/// Product-complete scheme on a labelled `K_a □ K_b` input.
pub fn scheme_product_complete_on(hg: &Hypergraph) -> Result<SchemeOutcome> {
    let f = factor_product(hg)?;
    if !is_complete(&f.left) || !is_complete(&f.right) {
        return Err(Error::SchemeMismatch("both product factors must be complete".into()));
    }
    let (a, b) = (f.left.vertex_count(), f.right.vertex_count());
    let (m, n) = (a.max(b), a.min(b));
    let canon = scheme_product_complete(m, n)?;
    let canon_h = product_complete_graph(m, n)?;
    let canon_colours = canon.colouring.to_vec(&canon_h)?;
    // Canonical rows are the smaller factor.
    let colours: Vec<u32> = f
        .coord
        .iter()
        .map(|&(x, y)| {
            let (row, col) = if a <= b { (x, y) } else { (y, x) };
            canon_colours[row * m + col]
        })
        .collect();
    finish(hg, 2, 1, &colours, canon.fallback_used)
}

fn star_complete_classes(r: usize, c: usize, m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(c * n + (r - c) * n);
    for s in 0..c {
        for col in 0..n {
            classes.push(vec![s * n + col]);
        }
    }
    // One petal position, spread over the m edges on distinct columns.
    for p in 0..(r - c) {
        for shift in 0..n {
            classes.push((0..m).map(|l| (c + l * (r - c) + p) * n + (l + shift) % n).collect());
        }
    }
    classes
}

/// L(h,k) colouring of `K^r_{c,m} □ K_n` for `m < n`. Built from `nr`
/// classes (each centre vertex in each column, and `n` column-shifted
/// transversals per petal position). When the construction exceeds the
/// closed form, a search at the closed-form span replaces it if one exists.
pub fn scheme_product_star_complete_hk(r: usize, c: usize, m: usize, n: usize, h: u32, k: u32) -> Result<SchemeOutcome> {
    check_levels(h, k)?;
    if k == 0 {
        return Err(Error::Parameter("product scheme needs k >= 1".into()));
    }
    if m >= n {
        return Err(Error::Parameter(format!("star-complete product needs m < n (m={m}, n={n})")));
    }
    if m < 2 {
        return Err(Error::Parameter(format!("star factor needs at least two edges (m={m})")));
    }
    let hg = cartesian_product(&star_hypergraph(r, c, m)?, &complete_graph(n)?)?;
    let req = Requirements::for_hypergraph(&hg, h, k);
    let target = product_star_complete_formula(r, n, h, k);
    let built = class_path_colours(&req, &star_complete_classes(r, c, m, n), h, k);
    let built = match built {
        Some(colours) => Some(finish(&hg, h, k, &colours, false)?),
        None => None,
    };
    if built.as_ref().is_some_and(|o| o.claimed_span <= target) {
        return Ok(built.unwrap());
    }
    if target <= MAX_SPAN {
        let budget = SolveBudget::default().with_node_limit(50_000_000);
        match colouring_within(&hg, h, k, target, &budget) {
            Ok(Some(f)) => return finish(&hg, h, k, &f.to_vec(&hg)?, true),
            Ok(None) | Err(Error::BudgetExhausted) => {}
            Err(e) => return Err(e),
        }
    }
    match built {
        Some(out) => Ok(out),
        None => exact_fallback(&hg, h, k),
    }
}

pub fn scheme_product_star_complete(r: usize, c: usize, m: usize, n: usize) -> Result<SchemeOutcome> {
    scheme_product_star_complete_hk(r, c, m, n, 2, 1)
}

/// Star-complete scheme on a labelled `K^r_{c,m} □ K_n` input (either
/// factor order).
pub fn scheme_product_star_complete_on(hg: &Hypergraph, h: u32, k: u32) -> Result<SchemeOutcome> {
    let f = factor_product(hg)?;
    let (star_first, star, other) = match recognise_star(&f.left) {
        Ok(s) if is_complete(&f.right) => (true, s, &f.right),
        _ => match recognise_star(&f.right) {
            Ok(s) if is_complete(&f.left) => (false, s, &f.left),
            _ => return Err(Error::SchemeMismatch("factors are not a star-hypergraph and a complete one".into())),
        },
    };
    let (r, c, m, n) = (star.r, star.c(), star.m(), other.vertex_count());
    let canon = scheme_product_star_complete_hk(r, c, m, n, h, k)?;
    let canon_h = cartesian_product(&star_hypergraph(r, c, m)?, &complete_graph(n)?)?;
    let canon_colours = canon.colouring.to_vec(&canon_h)?;
    let star_factor = if star_first { &f.left } else { &f.right };
    let mut canon_row = vec![0usize; star_factor.vertex_count()];
    for (s, &u) in star.centre.iter().enumerate() {
        canon_row[u] = s;
    }
    for (l, petal) in star.petals.iter().enumerate() {
        for (p, &v) in petal.iter().enumerate() {
            canon_row[v] = c + l * (r - c) + p;
        }
    }
    let colours: Vec<u32> = f
        .coord
        .iter()
        .map(|&(x, y)| {
            let (s, col) = if star_first { (x, y) } else { (y, x) };
            canon_colours[canon_row[s] * n + col]
        })
        .collect();
    finish(hg, h, k, &colours, canon.fallback_used)
}
