//! Independent string-level oracles used by the acceptance suite. These
//! deliberately avoid the library's `Word`/`CompiledSystem` machinery so a
//! bug there cannot hide in both the engine and the check.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

/// Breadth-first minimum step count from `u` to `v` over plain strings,
/// applying every rule in both directions at every position, never visiting
/// words longer than `max_len`. Returns `None` if `v` is unreachable.
pub fn bfs_dl(u: &str, v: &str, rules: &[(&str, &str)], max_len: usize) -> Option<u64> {
    let mut sym: Vec<(String, String)> = Vec::new();
    for (l, r) in rules {
        sym.push((l.to_string(), r.to_string()));
        sym.push((r.to_string(), l.to_string()));
    }
    let mut seen: HashSet<String> = HashSet::new();
    let mut queue: VecDeque<(String, u64)> = VecDeque::new();
    seen.insert(u.to_string());
    queue.push_back((u.to_string(), 0));
    while let Some((w, d)) = queue.pop_front() {
        if w == v {
            return Some(d);
        }
        for (lhs, rhs) in &sym {
            if w.len() + rhs.len() > max_len + lhs.len() {
                continue;
            }
            for pos in 0..=w.len().saturating_sub(lhs.len()) {
                if &w[pos..pos + lhs.len()] == lhs.as_str() {
                    let next = format!("{}{}{}", &w[..pos], rhs, &w[pos + lhs.len()..]);
                    if next.len() <= max_len && seen.insert(next.clone()) {
                        queue.push_back((next, d + 1));
                    }
                }
            }
        }
    }
    None
}

/// Exact commutator area of a word over `a, A, b, B` read as a lattice path
/// (`a` = east, `A` = west, `b` = north, `B` = south): the sum over unit
/// cells of the absolute winding number of the closed path. Returns `None`
/// when the path is not closed, i.e. the word has a nonzero exponent sum.
pub fn winding_area(w: &str) -> Option<u64> {
    let mut x: i64 = 0;
    let mut y: i64 = 0;
    // vertical unit segments as (x, lower y, direction)
    let mut vert: Vec<(i64, i64, i64)> = Vec::new();
    for ch in w.chars() {
        match ch {
            'a' => x += 1,
            'A' => x -= 1,
            'b' => {
                vert.push((x, y, 1));
                y += 1;
            }
            'B' => {
                y -= 1;
                vert.push((x, y, -1));
            }
            _ => return None,
        }
    }
    if x != 0 || y != 0 {
        return None;
    }
    if vert.is_empty() {
        return Some(0);
    }
    let xs: Vec<i64> = vert.iter().map(|s| s.0).collect();
    let ys: Vec<i64> = vert.iter().map(|s| s.1).collect();
    let (xmin, xmax) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (ymin, ymax) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
    let mut area: u64 = 0;
    for i in (xmin - 1)..xmax {
        for j in ymin..=ymax {
            // winding of the cell centered at (i + 1/2, j + 1/2) via an
            // eastward ray: each upward crossing counts +1, downward -1
            let w: i64 = vert.iter().filter(|s| s.0 > i && s.1 == j).map(|s| s.2).sum();
            area += w.unsigned_abs();
        }
    }
    Some(area)
}

/// Exact area over `< a | a^3 >`: a word over `a, A` equals the identity
/// exactly when its exponent sum is a multiple of 3, and each relator face
/// absorbs exponent 3, so the area is `|sum| / 3`. `None` if not trivial.
pub fn cyclic3_area(w: &str) -> Option<u64> {
    let mut s: i64 = 0;
    for ch in w.chars() {
        match ch {
            'a' => s += 1,
            'A' => s -= 1,
            _ => return None,
        }
    }
    if s % 3 != 0 {
        None
    } else {
        Some((s.unsigned_abs() / 3) as u64)
    }
}

fn inverse_char(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

/// Free reduction by stack: cancels adjacent `xX` / `Xx` pairs.
pub fn free_group_key(w: &str) -> String {
    let mut stack: Vec<char> = Vec::new();
    for c in w.chars() {
        if stack.last() == Some(&inverse_char(c)) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    stack.into_iter().collect()
}

/// Letters in sorted order: the normal form of a free commutative monoid.
pub fn sorted_key(w: &str) -> String {
    let mut cs: Vec<char> = w.chars().collect();
    cs.sort_unstable();
    cs.into_iter().collect()
}

/// Signed exponent vector over `a, b`: the normal form of the free abelian
/// group of rank 2.
pub fn abelian_key(w: &str) -> (i64, i64) {
    let mut ea = 0i64;
    let mut eb = 0i64;
    for c in w.chars() {
        match c {
            'a' => ea += 1,
            'A' => ea -= 1,
            'b' => eb += 1,
            'B' => eb -= 1,
            _ => {}
        }
    }
    (ea, eb)
}

/// True when `w` is not a proper power `u^k`, `k >= 2`.
pub fn is_primitive(w: &str) -> bool {
    let n = w.len();
    for d in 1..n {
        if n % d == 0 && w[..n - d] == w[d..] {
            return false;
        }
    }
    true
}

pub fn string_inverse(w: &str) -> String {
    w.chars().rev().map(inverse_char).collect()
}

/// All words of length exactly `n` over the given letters, lexicographic.
pub fn strings_of_len(letters: &[char], n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * letters.len());
        for w in &out {
            for &c in letters {
                let mut s = w.clone();
                s.push(c);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// Minimum length of a string `t` over `a, A, b, B` with
/// `t a1 t^-1 = a2` in the free group, scanning all strings up to
/// `max_len`. Independent of the engine's conjugacy search.
pub fn naive_min_conjugator(a1: &str, a2: &str, max_len: usize) -> Option<u64> {
    let target = free_group_key(a2);
    for len in 0..=max_len {
        for t in strings_of_len(&['a', 'A', 'b', 'B'], len) {
            let conj = format!("{}{}{}", t, a1, string_inverse(&t));
            if free_group_key(&conj) == target {
                return Some(len as u64);
            }
        }
    }
    None
}

#[cfg(test)]
mod sanity {
    use super::*;

    #[test]
    fn winding_matches_known_areas() {
        assert_eq!(winding_area("abAB"), Some(1));
        assert_eq!(winding_area("aabbAABB"), Some(4));
        assert_eq!(winding_area("ab"), None);
        assert_eq!(winding_area("aA"), Some(0));
    }

    #[test]
    fn keys_behave() {
        assert_eq!(free_group_key("abBA"), "");
        assert_eq!(free_group_key("abA"), "abA");
        assert_eq!(sorted_key("baba"), "aabb");
        assert_eq!(abelian_key("abAB"), (0, 0));
        assert_eq!(string_inverse("ab"), "BA");
    }

    #[test]
    fn bfs_counts_swaps() {
        let rules = [("ab", "ba")];
        assert_eq!(bfs_dl("bbaa", "aabb", &rules, 4), Some(4));
        assert_eq!(bfs_dl("ab", "ab", &rules, 2), Some(0));
        assert_eq!(bfs_dl("ab", "aa", &rules, 2), None);
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive("aab"));
        assert!(!is_primitive("abab"));
        assert!(!is_primitive("aaa"));
        assert!(is_primitive("a"));
    }

    #[test]
    fn conjugator_scan_finds_minimum() {
        assert_eq!(naive_min_conjugator("ab", "ba", 3), Some(1));
        assert_eq!(naive_min_conjugator("a", "b", 3), None);
    }
}
