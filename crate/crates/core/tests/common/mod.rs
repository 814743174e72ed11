//! Naive oracles shared by the integration tests. Nothing here calls the
//! solver, the enumerator or the power routines of the library.

#![allow(dead_code)]

use legrack_core::presentation::{Presentation, RelationKind};

/// Multiplication table as plain rows.
pub type Table = Vec<Vec<usize>>;

pub fn cyclic(k: usize) -> Table {
    (0..k).map(|i| vec![(i + 1) % k; k]).collect()
}

pub fn dihedral(k: usize) -> Table {
    (0..k).map(|i| (0..k).map(|j| (2 * j + k * k - i) % k).collect()).collect()
}

pub fn left_div(t: &Table, x: usize, y: usize) -> usize {
    (0..t.len()).find(|&z| t[z][y] == x).expect("column is a permutation")
}

/// `x^e` straight from the recursive definition.
pub fn power(t: &Table, e: i64, x: usize) -> usize {
    match e {
        1 => x,
        e if e > 1 => t[power(t, e - 1, x)][x],
        -2 => left_div(t, x, x),
        e if e < -2 => left_div(t, power(t, e + 1, x), x),
        _ => panic!("exponent {e} outside the domain"),
    }
}

pub fn is_rack(t: &Table) -> bool {
    let m = t.len();
    let perms = (0..m).all(|y| {
        let mut seen = vec![false; m];
        (0..m).all(|x| !std::mem::replace(&mut seen[t[x][y]], true))
    });
    perms
        && (0..m).all(|x| {
            (0..m).all(|y| (0..m).all(|z| t[t[x][y]][z] == t[t[x][z]][t[y][z]]))
        })
}

pub fn is_quandle(t: &Table) -> bool {
    (0..t.len()).all(|x| t[x][x] == x)
}

pub fn is_legendrian(t: &Table, n: u32) -> bool {
    (0..t.len()).all(|x| power(t, 2 * n as i64 + 2, x) == x)
}

/// `(count, surjective)` over every assignment in `m^g`.
pub fn naive_colorings(p: &Presentation, n: u32, t: &Table) -> (u64, u64) {
    let g = p.generators.len();
    let m = t.len();
    let holds = |c: &[usize]| {
        p.relations.iter().all(|r| {
            let want = match r.kind {
                RelationKind::Cusp => power(t, n as i64 + 1, c[r.src]),
                RelationKind::Pos => t[c[r.src]][c[r.over.unwrap()]],
                RelationKind::Neg => left_div(t, c[r.src], c[r.over.unwrap()]),
            };
            c[r.dst] == want
        })
    };
    let mut colors = vec![0usize; g];
    let (mut count, mut surj) = (0, 0);
    loop {
        if holds(&colors) {
            count += 1;
            let mut hit = vec![false; m];
            colors.iter().for_each(|&c| hit[c] = true);
            if hit.iter().all(|&h| h) {
                surj += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == g {
                return (count, surj);
            }
            colors[i] += 1;
            if colors[i] < m {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

pub fn all_perms(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(m - 1) {
        for pos in 0..m {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabeled table over every permutation of the elements.
pub fn naive_canonical(t: &Table) -> Table {
    let m = t.len();
    all_perms(m)
        .into_iter()
        .map(|p| {
            let mut inv = vec![0; m];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            (0..m).map(|i| (0..m).map(|j| p[t[inv[i]][inv[j]]]).collect()).collect::<Table>()
        })
        .min()
        .unwrap()
}
