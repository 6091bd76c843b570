#![allow(dead_code)]

use std::collections::BTreeSet;

use braidnil::{BraidWord, NilElement, Pair};
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_word(n: usize, max_len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let pairs: Vec<(usize, i64)> = (0..len)
        .map(|_| (rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::from_pairs(n, &pairs).unwrap()
}

pub fn random_element(n: usize, max_len: usize, rng: &mut ChaCha8Rng) -> NilElement {
    NilElement::collect(&random_word(n, max_len, rng)).unwrap()
}

/// Pure exponents from signed crossing counts of individual strands.
///
/// For the normal form `s(π)·x`, two strands starting at `a` and `b` cross
/// once in `s(π)` iff `π` inverts them, and `A_{i,j}^e` in `x` adds `2e`
/// crossings between the strands then at positions `i` and `j`.
pub fn crossing_oracle(word: &BraidWord) -> Vec<(Pair, i64)> {
    let n = word.n();
    let mut at: Vec<usize> = (0..n).collect(); // at[position] = strand label
    let mut link = vec![vec![0i64; n]; n];
    for l in word.letters() {
        let (p, q) = (l.k - 1, l.k);
        let (a, b) = (at[p], at[q]);
        link[a][b] += l.sign.to_i64();
        link[b][a] += l.sign.to_i64();
        at.swap(p, q);
    }
    // end position of each strand
    let mut end = vec![0; n];
    for (pos, &s) in at.iter().enumerate() {
        end[s] = pos;
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // strands ending at positions i and j
            let (a, b) = (at[i], at[j]);
            let inverted = (a < b) != (end[a] < end[b]);
            let v = link[a][b] - inverted as i64;
            assert!(v % 2 == 0, "odd crossing count for strands {a}, {b}");
            out.push((Pair(i + 1, j + 1), v / 2));
        }
    }
    out
}

/// Orders of elements of `S_n` prime to 6, by brute force over all
/// partitions of every `m ≤ n`.
pub fn spectrum_oracle(n: usize) -> BTreeSet<u64> {
    fn parts(room: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for p in (1..=max.min(room)).rev() {
            cur.push(p);
            parts(room - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    parts(n, n, &mut Vec::new(), &mut all);
    all.into_iter()
        .map(|ps| ps.iter().fold(1u64, |l, &p| l.lcm(&(p as u64))))
        .filter(|&l| l > 1 && l.gcd(&6) == 1)
        .collect()
}

/// A partition of some `m ≤ n` with the given lcm, parts prime to 6.
pub fn realizing_parts(n: usize, tau: u64) -> Option<Vec<usize>> {
    fn go(room: usize, max: usize, tau: u64, cur: &mut Vec<usize>) -> Option<Vec<usize>> {
        let l = cur.iter().fold(1u64, |l, &p| l.lcm(&(p as u64)));
        if l == tau {
            return Some(cur.clone());
        }
        for p in (5..=max.min(room)).rev() {
            if p.gcd(&6) == 1 && tau.is_multiple_of(p as u64) {
                cur.push(p);
                if let Some(r) = go(room - p, p, tau, cur) {
                    return Some(r);
                }
                cur.pop();
            }
        }
        None
    }
    go(n, n, tau, &mut Vec::new())
}
