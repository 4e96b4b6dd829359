//! Independent reference implementations for the exact kernels.

pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

pub fn rank_by_elimination(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                // Cross-multiplication keeps everything integral without inverses.
                let (f, g) = (a[r][c], a[rank][c]);
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = (*x * g - y * f).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn exhaustive_solvable(m: &[Vec<i64>], p: i64) -> bool {
    let n = m.len();
    let q = p * p;
    let total = (q as usize).pow(n as u32);
    (0..total).any(|mut code| {
        let x: Vec<i64> = (0..n)
            .map(|_| {
                let d = (code % q as usize) as i64;
                code /= q as usize;
                d
            })
            .collect();
        x.iter().any(|v| v % p != 0)
            && m.iter().all(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() % q == 0)
    })
}
