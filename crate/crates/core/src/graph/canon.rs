//! Brute-force canonical labeling for small graphs.
//!
//! Vertices are first split into an ordered partition by iterated degree
//! refinement (a labeling-invariant colouring). The canonical labeling is the
//! one, among all labelings that list the colour classes in order, whose
//! graph6 bit string is lexicographically smallest. Branches whose prefix
//! already exceeds the best complete labeling are cut.

use super::{Graph, GraphError};

pub const CANON_MAX_ORDER: usize = 10;

fn refine(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut colors: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let mut count = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&u| rows[v] >> u & 1 == 1)
                    .map(|u| colors[u])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colors = sigs
            .iter()
            .map(|s| uniq.binary_search(s).expect("signature present"))
            .collect();
        let next = uniq.len();
        if next == count {
            return colors;
        }
        count = next;
    }
}

fn distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

struct Search<'a> {
    rows: &'a [u64],
    slot_color: Vec<usize>,
    colors: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    cur: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        let n = self.rows.len();
        if depth == n {
            let better = match &self.best {
                None => true,
                Some(b) => self.cur < *b,
            };
            if better {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        let want = self.slot_color[depth];
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            let mut col = 0u64;
            for (i, &u) in self.perm.iter().enumerate() {
                if self.rows[v] >> u & 1 == 1 {
                    col |= 1 << (depth - 1 - i);
                }
            }
            self.cur[depth] = col;
            if let Some(b) = &self.best {
                if self.cur[..=depth] > b[..=depth] {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(depth + 1);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// The canonical relabeling of `g`: isomorphic inputs give identical graphs.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            n,
            max: CANON_MAX_ORDER,
        });
    }
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |acc, u| acc | 1 << u))
        .collect();
    let colors = refine(&rows);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        rows: &rows,
        slot_color,
        colors,
        perm: Vec::with_capacity(n),
        used: 0,
        cur: vec![0; n],
        best: None,
    };
    search.run(0);
    let cols = search.best.expect("at least one labeling exists");

    let mut h = Graph::empty(n);
    for (j, &col) in cols.iter().enumerate() {
        for i in 0..j {
            if col >> (j - 1 - i) & 1 == 1 {
                h.set_edge(i, j, true);
            }
        }
    }
    Ok(h)
}

/// Canonical form as bytes (the graph6 string of the canonical relabeling).
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    canonical_graph(g).map(|h| super::encode_graph6(&h).into_bytes())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.order() > CANON_MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                n: x.order(),
                max: CANON_MAX_ORDER,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = super::degree_vector(g);
    let mut dh = super::degree_vector(h);
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}
