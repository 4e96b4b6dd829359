#![allow(dead_code)]

pub mod kernels;

use dgas_core::alpha::AlphaParam;
use dgas_core::graph::Graph;
use proptest::prelude::*;

pub const ALPHAS: [&str; 6] = ["0", "1/2", "1/3", "2/3", "3/4", "5/6"];

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn graph_of_order(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
}

pub fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(graph_of_order)
}

pub fn alpha() -> impl Strategy<Value = AlphaParam> {
    prop::sample::select(ALPHAS.to_vec()).prop_map(|s| s.parse().unwrap())
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
