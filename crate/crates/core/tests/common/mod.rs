//! Reference implementations used to check the library. They work from the
//! picture of the grid (cells, rays, matrices) rather than from the library's
//! own bookkeeping.
#![allow(dead_code)]

use gridknot::GridDiagram;
use proptest::prelude::*;

pub fn cells(g: &GridDiagram) -> (Vec<Vec<Option<char>>>, usize) {
    let n = g.grid_number();
    let mut m = vec![vec![None; n]; n];
    for r in 0..n {
        m[r][g.xs()[r]] = Some('X');
        m[r][g.os()[r]] = Some('O');
    }
    (m, n)
}

/// Components by walking from marking to marking: along the row from an O to
/// the X, then along the column from that X to the O.
pub fn components(g: &GridDiagram) -> usize {
    let (m, n) = cells(g);
    let mut seen = vec![vec![false; n]; n];
    let mut count = 0;
    for r0 in 0..n {
        let c0 = (0..n).find(|&c| m[r0][c] == Some('O')).unwrap();
        if seen[r0][c0] {
            continue;
        }
        count += 1;
        let (mut r, mut c) = (r0, c0);
        while !seen[r][c] {
            seen[r][c] = true;
            c = (0..n).find(|&cc| m[r][cc] == Some('X')).unwrap();
            r = (0..n).find(|&rr| m[rr][c] == Some('O')).unwrap();
        }
    }
    count
}

/// Every cell where a horizontal and a vertical segment both pass through,
/// with the sign of the cross product of the over and under directions.
pub fn crossings(g: &GridDiagram) -> Vec<(usize, usize, i32)> {
    let (m, n) = cells(g);
    let in_row = |r: usize, want: char| (0..n).find(|&c| m[r][c] == Some(want)).unwrap();
    let in_col = |c: usize, want: char| (0..n).find(|&r| m[r][c] == Some(want)).unwrap();
    let mut out = Vec::new();
    for r in 0..n {
        let (ox, xx) = (in_row(r, 'O'), in_row(r, 'X'));
        for c in ox.min(xx) + 1..ox.max(xx) {
            let (xr, or) = (in_col(c, 'X'), in_col(c, 'O'));
            if xr.min(or) < r && r < xr.max(or) {
                let under: (i32, i32) = (if xx > ox { 1 } else { -1 }, 0);
                let over: (i32, i32) = (0, if or > xr { 1 } else { -1 });
                let z = over.0 * under.1 - over.1 * under.0;
                out.push((r, c, z.signum()));
            }
        }
    }
    out
}

pub fn writhe(g: &GridDiagram) -> i64 {
    crossings(g).iter().map(|c| c.2 as i64).sum()
}

/// Winding number of the link around the lattice point at the lower left
/// corner of cell (row, col), by casting a ray to the right.
pub fn winding(g: &GridDiagram, row: usize, col: usize) -> i64 {
    let n = g.grid_number();
    let mut w = 0;
    for c in col..n {
        let xr = (0..n).find(|&r| g.xs()[r] == c).unwrap();
        let or = (0..n).find(|&r| g.os()[r] == c).unwrap();
        if xr.min(or) < row && row <= xr.max(or) {
            w += if or > xr { 1 } else { -1 };
        }
    }
    w
}

/// Exact determinant by fraction-free elimination.
pub fn bareiss(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Knot determinant |Alexander(-1)| from the matrix of (-1)^winding, whose
/// determinant is the Alexander polynomial times 2^(n-1) at t = -1.
pub fn determinant(g: &GridDiagram) -> i128 {
    let n = g.grid_number();
    let m: Vec<Vec<i128>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if winding(g, r, c) % 2 == 0 { 1 } else { -1 })
                .collect()
        })
        .collect();
    bareiss(m).abs() >> (n - 1)
}

/// All grids of size `n`.
pub fn all_grids(n: usize) -> Vec<GridDiagram> {
    let perms = permutations(n);
    let mut out = Vec::new();
    for xs in &perms {
        for os in &perms {
            if xs.iter().zip(os).all(|(a, b)| a != b) {
                out.push(GridDiagram::new(xs.clone(), os.clone()).unwrap());
            }
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Uniform-ish valid grids of size 2..=max_n for property tests.
pub fn arb_grid(max_n: usize) -> impl Strategy<Value = GridDiagram> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let ids: Vec<usize> = (0..n).collect();
            (Just(ids.clone()).prop_shuffle(), Just(ids).prop_shuffle())
        })
        .prop_filter("markings collide", |(xs, os)| {
            xs.iter().zip(os).all(|(a, b)| a != b)
        })
        .prop_map(|(xs, os)| GridDiagram::new(xs, os).unwrap())
}
