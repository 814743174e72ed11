//! Canonical forms of finite racks under relabeling.
//!
//! Elements are first split into classes by an isomorphism-invariant key;
//! the canonical table is the lexicographically least row-major table over
//! all relabelings that list the classes in key order.

use crate::rack::FiniteRack;

type Key = (bool, Vec<usize>, usize, usize);

fn cycle_type(perm: impl Fn(usize) -> usize, m: usize) -> Vec<usize> {
    let mut seen = vec![false; m];
    let mut lengths = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm(x);
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

fn element_key(rack: &FiniteRack, x: usize) -> Key {
    let m = rack.order();
    let idempotent = rack.op(x, x) == x;
    let right = cycle_type(|y| rack.op(y, x), m);
    // Elements fixed by x, and elements that fix x.
    let fixed_by = (0..m).filter(|&y| rack.op(y, x) == y).count();
    let fixing = (0..m).filter(|&y| rack.op(x, y) == x).count();
    (idempotent, right, fixing, fixed_by)
}

/// The canonical row-major table of `rack`.
pub fn canonical_table(rack: &FiniteRack) -> Vec<u8> {
    let m = rack.order();
    let keys: Vec<Key> = (0..m).map(|x| element_key(rack, x)).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));

    // slots[label] = indices of old elements allowed to take `label`.
    let mut slots: Vec<Vec<usize>> = Vec::with_capacity(m);
    for &x in &order {
        let allowed: Vec<usize> = (0..m).filter(|&y| keys[y] == keys[x]).collect();
        slots.push(allowed);
    }

    let mut best: Option<Vec<u8>> = None;
    let mut old_of_new = vec![usize::MAX; m];
    let mut new_of_old = vec![usize::MAX; m];
    let mut scratch = vec![0u8; m * m];
    fill(rack, 0, &slots, &mut old_of_new, &mut new_of_old, &mut scratch, &mut best);
    best.expect("at least one relabeling")
}

fn fill(
    rack: &FiniteRack,
    label: usize,
    slots: &[Vec<usize>],
    old_of_new: &mut [usize],
    new_of_old: &mut [usize],
    scratch: &mut [u8],
    best: &mut Option<Vec<u8>>,
) {
    let m = rack.order();
    if label == m {
        consider(rack, old_of_new, new_of_old, scratch, best);
        return;
    }
    for &x in &slots[label] {
        if new_of_old[x] != usize::MAX {
            continue;
        }
        old_of_new[label] = x;
        new_of_old[x] = label;
        fill(rack, label + 1, slots, old_of_new, new_of_old, scratch, best);
        new_of_old[x] = usize::MAX;
    }
}

fn consider(
    rack: &FiniteRack,
    old_of_new: &[usize],
    new_of_old: &[usize],
    scratch: &mut [u8],
    best: &mut Option<Vec<u8>>,
) {
    let m = rack.order();
    match best {
        None => {
            for i in 0..m {
                for j in 0..m {
                    scratch[i * m + j] = new_of_old[rack.op(old_of_new[i], old_of_new[j])] as u8;
                }
            }
            *best = Some(scratch.to_vec());
        }
        Some(current) => {
            // Entry-by-entry comparison, abandoning as soon as we are larger.
            let mut smaller = false;
            for i in 0..m {
                for j in 0..m {
                    let v = new_of_old[rack.op(old_of_new[i], old_of_new[j])] as u8;
                    let idx = i * m + j;
                    if !smaller {
                        if v > current[idx] {
                            return;
                        }
                        if v < current[idx] {
                            smaller = true;
                        }
                    }
                    scratch[idx] = v;
                }
            }
            if smaller {
                current.copy_from_slice(scratch);
            }
        }
    }
}

/// The rack rebuilt from its canonical table.
pub fn canonical_form(rack: &FiniteRack) -> FiniteRack {
    FiniteRack::from_flat_unchecked(rack.order(), canonical_table(rack))
}

pub fn is_isomorphic(a: &FiniteRack, b: &FiniteRack) -> bool {
    a.order() == b.order() && canonical_table(a) == canonical_table(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(m - 1) {
            for pos in 0..m {
                let mut q = p.clone();
                q.insert(pos, m - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn canonical_is_relabeling_invariant() {
        let racks = [
            FiniteRack::cyclic(4).unwrap(),
            FiniteRack::dihedral(5).unwrap(),
            FiniteRack::permutation(&[1, 0, 3, 4, 2]).unwrap(),
        ];
        for rack in &racks {
            let c = canonical_table(rack);
            for perm in permutations(rack.order()) {
                assert_eq!(canonical_table(&rack.relabeled(&perm)), c);
            }
        }
    }

    #[test]
    fn canonical_is_minimum_over_all_relabelings() {
        // Against the unrestricted minimum over every relabeling.
        let rack = FiniteRack::permutation(&[1, 2, 0, 4, 3]).unwrap();
        let brute = permutations(5)
            .into_iter()
            .map(|p| rack.relabeled(&p).star_flat().to_vec())
            .min()
            .unwrap();
        let c = canonical_form(&rack);
        assert!(is_isomorphic(&c, &rack));
        // The class-restricted minimum is at least the global minimum.
        assert!(c.star_flat() >= brute.as_slice());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let a = FiniteRack::cyclic(3).unwrap();
        let b = FiniteRack::dihedral(3).unwrap();
        let c = FiniteRack::trivial(3).unwrap();
        assert!(!is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&b, &c));
        assert!(!is_isomorphic(&a, &FiniteRack::cyclic(4).unwrap()));
    }
}
