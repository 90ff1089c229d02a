//! Independent oracles: constraint pairs recomputed from raw edges, a
//! brute-force minimum span, and exhaustive small hypergraph enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperlambda::{Hypergraph, RawHypergraph};
use itertools::Itertools;

/// Every constrained pair with its required gap, from the edge lists alone.
pub fn pair_gaps(hg: &Hypergraph, h: u32, k: u32) -> Vec<(usize, usize, u32)> {
    let n = hg.vertex_count();
    let mut co = vec![vec![false; n]; n];
    for e in hg.edges() {
        for (&a, &b) in e.iter().tuple_combinations() {
            co[a][b] = true;
            co[b][a] = true;
        }
    }
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if co[u][v] {
                out.push((u, v, h));
            } else if (0..n).any(|w| co[u][w] && co[w][v]) && k > 0 {
                out.push((u, v, k));
            }
        }
    }
    out
}

pub fn is_valid(colours: &[u32], gaps: &[(usize, usize, u32)]) -> bool {
    gaps.iter().all(|&(u, v, g)| colours[u].abs_diff(colours[v]) >= g)
}

/// Smallest span admitting a valid assignment, by trying every assignment
/// in `0..=s` for increasing `s`.
pub fn naive_lambda(hg: &Hypergraph, h: u32, k: u32) -> u32 {
    let n = hg.vertex_count();
    let gaps = pair_gaps(hg, h, k);
    for s in 0.. {
        let mut colours = vec![0u32; n];
        loop {
            if is_valid(&colours, &gaps) {
                return s;
            }
            let mut i = 0;
            while i < n && colours[i] == s {
                colours[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colours[i] += 1;
        }
    }
    unreachable!()
}

pub fn from_masks(n: usize, edges: &[u32]) -> Hypergraph {
    let vertices: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let edges = edges
        .iter()
        .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| vertices[i].clone()).collect())
        .collect();
    Hypergraph::from_raw(&RawHypergraph { vertices, edges }).expect("antichain is simple")
}

fn canonical(n: usize, edges: &[u32]) -> Vec<u32> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut mapped: Vec<u32> = edges
                .iter()
                .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << p[i]))
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .min()
        .unwrap()
}

/// Every simple hypergraph with at least one edge on exactly `n` vertices,
/// one per isomorphism class.
pub fn all_simple_hypergraphs(n: usize) -> Vec<Hypergraph> {
    let subsets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() >= 2).collect();
    let mut seen = BTreeSet::new();
    let mut chosen = Vec::new();
    fn grow(i: usize, subsets: &[u32], chosen: &mut Vec<u32>, n: usize, seen: &mut BTreeSet<Vec<u32>>) {
        if i == subsets.len() {
            if !chosen.is_empty() {
                seen.insert(canonical(n, chosen));
            }
            return;
        }
        grow(i + 1, subsets, chosen, n, seen);
        let s = subsets[i];
        if chosen.iter().all(|&c| c & s != c && c & s != s) {
            chosen.push(s);
            grow(i + 1, subsets, chosen, n, seen);
            chosen.pop();
        }
    }
    grow(0, &subsets, &mut chosen, n, &mut seen);
    seen.into_iter().map(|edges| from_masks(n, &edges)).collect()
}
