//! Hamiltonian paths in the complement of a conflict graph. Colouring
//! classes along such a path with consecutive colours gives an L(2,1)
//! colouring whenever every pair inside a class is unconstrained.

/// Depth-first search with Warnsdorff ordering (fewest onward options
/// first). `conflict[a][b]` forbids `a` and `b` being consecutive. Returns
/// `None` when no path exists or `node_limit` is reached.
pub(crate) fn hamiltonian_path_avoiding(conflict: &[Vec<bool>], node_limit: u64) -> Option<Vec<usize>> {
    let n = conflict.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut nodes = 0u64;
    for start in 0..n {
        path.push(start);
        used[start] = true;
        match extend(conflict, &mut path, &mut used, &mut nodes, node_limit) {
            Some(true) => return Some(path),
            Some(false) => {}
            None => return None,
        }
        path.pop();
        used[start] = false;
    }
    None
}

/// `Some(true)` on success, `Some(false)` on a dead end, `None` on budget.
fn extend(conflict: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool], nodes: &mut u64, limit: u64) -> Option<bool> {
    let n = conflict.len();
    if path.len() == n {
        return Some(true);
    }
    *nodes += 1;
    if *nodes > limit {
        return None;
    }
    let last = *path.last().unwrap();
    let onward = |v: usize, used: &[bool]| (0..n).filter(|&u| !used[u] && u != v && !conflict[v][u]).count();
    let mut next: Vec<(usize, usize)> = (0..n)
        .filter(|&v| !used[v] && !conflict[last][v])
        .map(|v| (onward(v, used), v))
        .collect();
    // A vertex with no remaining options must come last.
    let stranded = next.iter().filter(|&&(d, _)| d == 0).count();
    if stranded > 1 || (stranded == 1 && path.len() + 1 < n) {
        return Some(false);
    }
    next.sort_unstable();
    for (_, v) in next {
        path.push(v);
        used[v] = true;
        match extend(conflict, path, used, nodes, limit) {
            Some(false) => {}
            other => return other,
        }
        path.pop();
        used[v] = false;
    }
    Some(false)
}
