//! Ranks of the lower central series of `P_n`, δ_n-orbits of the triple
//! basis and holonomy matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::element::NilElement;
use crate::error::{NilError, Result};
use crate::lattice::{pair_count, triple_count, Pair, SignedTriple, Triple};
use crate::signed::{bareiss_det, pair_action, SignedPermutation};
use crate::word::BraidWord;

fn prime_factors(mut q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            out.push(p);
            while q.is_multiple_of(p) {
                q /= p;
            }
        }
        p += 1;
    }
    if q > 1 {
        out.push(q);
    }
    out
}

/// `S_r(n) = Σ_{j=1}^{n-1} j^r`, continued to all integers `n` through
/// `S_r(n) = S_r(n+1) − n^r`.
pub fn power_sum(r: u32, n: i64) -> BigInt {
    let mut s = BigInt::zero();
    if n >= 1 {
        for j in 1..n {
            s += BigInt::from(j).pow(r);
        }
    } else {
        // S_r(1) = 0, walk down
        for j in (n..=0).rev() {
            s -= BigInt::from(j).pow(r);
        }
    }
    s
}

/// `Σ_{d | rad(q)} μ(d) S_{q/d}(n)`, before dividing by `q`.
fn mobius_sum(n: i64, q: u32) -> BigInt {
    let primes = prime_factors(q as u64);
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << primes.len()) {
        let d: u64 = primes
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &p)| p)
            .product();
        let term = power_sum((q as u64 / d) as u32, n);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `rank_L` as a value of the rank polynomial at any integer `n`; fails if
/// the division by `q` is not exact.
pub fn rank_polynomial_value(n: i64, q: u32) -> Result<BigInt> {
    if q == 0 {
        return Err(NilError::constraint("q must be at least 1"));
    }
    let s = mobius_sum(n, q);
    let (quot, rem) = s.div_rem(&BigInt::from(q));
    if !rem.is_zero() {
        return Err(NilError::constraint(format!(
            "sum for n = {n}, q = {q} is not divisible by q"
        )));
    }
    Ok(quot)
}

/// Rank of `Γ_q(P_n)/Γ_{q+1}(P_n)`.
pub fn rank_l(n: usize, q: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(NilError::constraint("rank needs n ≥ 2"));
    }
    rank_polynomial_value(n as i64, q)
}

/// Hirsch length of `P_n/Γ_k(P_n)`, the dimension of `B_n/Γ_k(P_n)`.
pub fn hirsch(n: usize, k: u32) -> Result<BigInt> {
    if k < 2 {
        return Err(NilError::constraint("hirsch needs k ≥ 2"));
    }
    (1..k).try_fold(BigInt::zero(), |acc, q| Ok(acc + rank_l(n, q)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankRow {
    pub dim: String,
    pub k: u32,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    pub rows: Vec<RankRow>,
}

impl RankTable {
    pub fn get(&self, n: usize, k: u32) -> Option<&str> {
        self.rows
            .iter()
            .find(|r| r.n == n && r.k == k)
            .map(|r| r.dim.as_str())
    }

    /// `{"rows":[{"dim":3,"k":2,"n":3},…]}`, with `dim` as an exact JSON
    /// integer of any size.
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!(r#"{{"dim":{},"k":{},"n":{}}}"#, r.dim, r.k, r.n))
            .collect();
        format!(r#"{{"rows":[{}]}}"#, rows.join(","))
    }

    /// Aligned text, one line per `k`, one column per `n`.
    pub fn render(&self) -> String {
        let mut ns: Vec<usize> = self.rows.iter().map(|r| r.n).collect();
        ns.sort_unstable();
        ns.dedup();
        let mut ks: Vec<u32> = self.rows.iter().map(|r| r.k).collect();
        ks.sort_unstable();
        ks.dedup();
        let width = self
            .rows
            .iter()
            .map(|r| r.dim.len())
            .chain(ns.iter().map(|n| n.to_string().len() + 2))
            .max()
            .unwrap_or(1);
        let mut out = format!("{:>4}", "k\\n");
        for n in &ns {
            out.push_str(&format!(" {:>width$}", format!("n={n}")));
        }
        out.push('\n');
        for k in &ks {
            out.push_str(&format!("{:>4}", k));
            for n in &ns {
                out.push_str(&format!(" {:>width$}", self.get(*n, *k).unwrap_or("-")));
            }
            out.push('\n');
        }
        out
    }
}

/// `hirsch(n, k)` for `3 ≤ n ≤ n_max`, `2 ≤ k ≤ k_max`.
pub fn dimension_table(n_max: usize, k_max: u32) -> Result<RankTable> {
    if n_max < 3 || k_max < 2 {
        return Err(NilError::constraint(
            "table bounds must be n_max ≥ 3 and k_max ≥ 2",
        ));
    }
    let mut rows = Vec::new();
    for k in 2..=k_max {
        for n in 3..=n_max {
            rows.push(RankRow {
                dim: hirsch(n, k)?.to_string(),
                k,
                n,
            });
        }
    }
    Ok(RankTable { rows })
}

/// Degree of a polynomial sequence sampled at consecutive integers, by
/// finite differences; `None` if the differences never vanish.
pub fn finite_difference_degree(values: &[BigInt]) -> Option<usize> {
    let mut row: Vec<BigInt> = values.to_vec();
    let mut degree = 0usize;
    while !row.is_empty() {
        if row.iter().all(Zero::is_zero) {
            return degree.checked_sub(1);
        }
        if row.len() == 1 {
            return None;
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        degree += 1;
    }
    None
}

/// Extends a sequence assumed polynomial of degree `deg` by `extra` terms,
/// using only its first `deg + 1` values.
pub fn extrapolate(values: &[BigInt], deg: usize, extra: usize) -> Vec<BigInt> {
    let base = &values[..deg + 1];
    // leading entries of the difference table
    let mut table: Vec<Vec<BigInt>> = vec![base.to_vec()];
    for _ in 0..deg {
        let last = table.last().unwrap();
        table.push(last.windows(2).map(|w| &w[1] - &w[0]).collect());
    }
    let mut tails: Vec<BigInt> = table.iter().map(|r| r.last().unwrap().clone()).collect();
    let mut out = Vec::with_capacity(extra);
    for _ in 0..extra {
        for lvl in (0..deg).rev() {
            let next = &tails[lvl] + &tails[lvl + 1];
            tails[lvl] = next;
        }
        out.push(tails[0].clone());
    }
    out
}

/// True when the rank polynomial for `q` vanishes at `n = −1, 0, 1, 2`,
/// i.e. is a multiple of `C(n+1, 4)`.
pub fn rank_divisible_by_binomial(q: u32) -> Result<bool> {
    for n in -1..=2 {
        if !rank_polynomial_value(n, q)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orbits of the triple basis under conjugation by a fixed element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBasis {
    pub n: usize,
    /// Each orbit starts at its representative `b_{i,1}`; entry `j` is
    /// `b_{i,j+1}`, with the sign relative to the basis element.
    pub orbits: Vec<Vec<SignedTriple>>,
    /// False when the closed-form orbit counts are not claimed for this `n`.
    pub in_stated_range: bool,
}

impl OrbitBasis {
    pub fn lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// `(orbit, position)` of a basis triple.
    pub fn locate(&self, t: Triple) -> Option<(usize, usize, i8)> {
        for (i, orb) in self.orbits.iter().enumerate() {
            for (j, st) in orb.iter().enumerate() {
                if st.triple == t {
                    return Some((i, j, st.sign));
                }
            }
        }
        None
    }
}

/// `δ_n` as an element: the δ word for odd `n`, and for even `n` the same
/// shape with `⌊(n−1)/2⌋` inverted letters. Both have permutation `i ↦ i+1`.
pub fn delta_n(n: usize) -> Result<NilElement> {
    NilElement::collect(&BraidWord::delta_word(0, n, n)?)
}

/// Conjugation by `g` on the triple basis, computed in the engine.
pub fn triple_action_of(g: &NilElement) -> Result<SignedPermutation> {
    let n = g.n();
    let ginv = g.inv()?;
    let mut image = Vec::new();
    let mut sign = Vec::new();
    for t in Triple::all(n) {
        let a = NilElement::alpha_gen(n, t.0, t.1, t.2, 1)?;
        let c = g.mul(&a)?.mul(&ginv)?;
        let entries: Vec<(Triple, i64)> = c.comm().entries().collect();
        if !c.perm().is_identity() || !c.pure().is_zero() || entries.len() != 1 {
            return Err(NilError::constraint(format!(
                "conjugate of {t} is not a basis element"
            )));
        }
        let (u, s) = entries[0];
        if s.abs() != 1 {
            return Err(NilError::constraint(format!(
                "conjugate of {t} is not a basis element"
            )));
        }
        image.push(u.index(n));
        sign.push(s as i8);
    }
    SignedPermutation::new(image, sign)
}

/// Conjugation by `g` on the `A_{i,j}` modulo `Γ₂`, computed in the engine.
pub fn pair_action_of(g: &NilElement) -> Result<SignedPermutation> {
    let n = g.n();
    let ginv = g.inv()?;
    let mut image = Vec::new();
    for p in Pair::all(n) {
        let a = NilElement::a_gen(n, p.0, p.1, 1)?;
        let c = g.mul(&a)?.mul(&ginv)?;
        let entries: Vec<(Pair, i64)> = c.pure().entries().collect();
        if entries.len() != 1 || entries[0].1 != 1 {
            return Err(NilError::constraint(format!(
                "conjugate of {p} is not a generator"
            )));
        }
        image.push(entries[0].0.index(n));
    }
    let len = image.len();
    SignedPermutation::new(image, vec![1; len])
}

/// Orbits of a signed permutation on triples, representatives taken first
/// seen in lexicographic order.
pub fn signed_orbits(n: usize, action: &SignedPermutation) -> Vec<Vec<SignedTriple>> {
    action
        .signed_cycles()
        .into_iter()
        .map(|cyc| {
            cyc.entries
                .into_iter()
                .map(|(idx, s)| SignedTriple {
                    triple: Triple::from_index(idx, n),
                    sign: s,
                })
                .collect()
        })
        .collect()
}

/// Orbits of the triple basis under conjugation by `δ_n`. When `3 | n` the
/// short orbit is listed last.
pub fn orbit_partition(n: usize) -> Result<OrbitBasis> {
    if n < 3 {
        return Err(NilError::constraint("orbit partition needs n ≥ 3"));
    }
    let action = triple_action_of(&delta_n(n)?)?;
    let mut orbits = signed_orbits(n, &action);
    if let Some(pos) = orbits.iter().position(|o| o.len() < n) {
        let short = orbits.remove(pos);
        orbits.push(short);
    }
    Ok(OrbitBasis {
        n,
        orbits,
        in_stated_range: n >= 5,
    })
}

/// Closed-form orbit lengths: `(n−1)(n−2)/6` orbits of length `n` when
/// `3 ∤ n`, otherwise `n(n−3)/6` of length `n` and one of length `n/3`.
pub fn expected_orbit_lengths(n: usize) -> Vec<usize> {
    if !n.is_multiple_of(3) {
        vec![n; (n - 1) * (n - 2) / 6]
    } else {
        let mut v = vec![n; n * (n - 3) / 6];
        v.push(n / 3);
        v
    }
}

/// Transversal `α_{1,j,k}` with `2 ≤ j ≤ J`, `2j−1 ≤ k ≤ n−j+1`, plus
/// `α_{1,n/3+1,2n/3+1}` when `3 | n`; `J = q+1` or `q` for `n = 3q + r`
/// with `r ≠ 0` or `r = 0`.
pub fn transversal(n: usize) -> Vec<Triple> {
    let (q, r) = (n / 3, n % 3);
    let jmax = if r != 0 { q + 1 } else { q };
    let mut out = Vec::new();
    for j in 2..=jmax {
        let lo = 2 * j - 1;
        let hi = n + 1 - j;
        for k in lo..=hi {
            if j < k {
                out.push(Triple(1, j, k));
            }
        }
    }
    if r == 0 {
        out.push(Triple(1, n / 3 + 1, 2 * n / 3 + 1));
    }
    out
}

/// Action of an element on the graded pieces `P_n/Γ₂` and `Γ₂/Γ₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyMatrix {
    pub n: usize,
    pub pair_basis: Vec<Pair>,
    pub triple_basis: Vec<Triple>,
    pub block1: Vec<Vec<i64>>,
    pub block2: Vec<Vec<i64>>,
    pub det: i64,
}

impl HolonomyMatrix {
    /// Block-diagonal matrix over the concatenated basis.
    pub fn combined(&self) -> Vec<Vec<i64>> {
        let (a, b) = (self.block1.len(), self.block2.len());
        let mut out = vec![vec![0; a + b]; a + b];
        for (row, src) in out.iter_mut().zip(&self.block1) {
            row[..a].copy_from_slice(src);
        }
        for (row, src) in out[a..].iter_mut().zip(&self.block2) {
            row[a..].copy_from_slice(src);
        }
        out
    }
}

fn reorder(m: &[Vec<i64>], order: &[usize]) -> Vec<Vec<i64>> {
    order
        .iter()
        .map(|&r| order.iter().map(|&c| m[r][c]).collect())
        .collect()
}

/// Holonomy in lexicographic bases. Block 1 comes from the permutation,
/// block 2 from conjugating each `α` in the engine.
pub fn holonomy_matrix(g: &NilElement) -> Result<HolonomyMatrix> {
    holonomy_matrix_in(g, None, None)
}

/// Holonomy with caller-chosen orderings of the pair and triple bases.
pub fn holonomy_matrix_in(
    g: &NilElement,
    pairs: Option<&[Pair]>,
    triples: Option<&[Triple]>,
) -> Result<HolonomyMatrix> {
    let n = g.n();
    let pair_basis: Vec<Pair> = match pairs {
        Some(p) => p.to_vec(),
        None => Pair::all(n).collect(),
    };
    let triple_basis: Vec<Triple> = match triples {
        Some(t) => t.to_vec(),
        None => Triple::all(n).collect(),
    };
    let po: Vec<usize> = pair_basis.iter().map(|p| p.index(n)).collect();
    let to: Vec<usize> = triple_basis.iter().map(|t| t.index(n)).collect();
    let is_ordering = |v: &[usize], len: usize| {
        let mut s = v.to_vec();
        s.sort_unstable();
        s == (0..len).collect::<Vec<_>>()
    };
    if !is_ordering(&po, pair_count(n)) || !is_ordering(&to, triple_count(n)) {
        return Err(NilError::constraint(
            "basis orderings must list every basis element once",
        ));
    }
    let p1 = pair_action(g.perm());
    let p2 = triple_action_of(g)?;
    let block1 = reorder(&p1.matrix(), &po);
    let block2 = reorder(&p2.matrix(), &to);
    let det = p1.det() * p2.det();
    Ok(HolonomyMatrix {
        n,
        pair_basis,
        triple_basis,
        block1,
        block2,
        det,
    })
}

/// The basis `(A_{1,3}, A_{2,3}, A_{1,2}, α_{1,2,3})` used for `n = 3`.
pub fn b3_basis() -> (Vec<Pair>, Vec<Triple>) {
    (
        vec![Pair(1, 3), Pair(2, 3), Pair(1, 2)],
        vec![Triple(1, 2, 3)],
    )
}

/// Determinant recomputed from the combined matrix by elimination.
pub fn holonomy_det_by_elimination(h: &HolonomyMatrix) -> Result<i64> {
    bareiss_det(&h.combined())
}

/// True iff every generator acts with determinant `+1`.
pub fn orientability_check(n: usize, generators: &[NilElement]) -> Result<bool> {
    for g in generators {
        if g.n() != n {
            return Err(NilError::StrandMismatch {
                left: n,
                right: g.n(),
            });
        }
        if holonomy_matrix(g)?.det != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Converts a rank to `u64` when it fits.
pub fn to_u64(v: &BigInt) -> Option<u64> {
    if v.is_negative() {
        None
    } else {
        v.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::triple_action;
    use crate::word::Sign;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn power_sum_extension() {
        assert_eq!(power_sum(2, 4), big(14));
        assert_eq!(power_sum(3, 1), big(0));
        assert_eq!(power_sum(3, 0), big(0));
        assert_eq!(power_sum(3, -1), big(1));
        assert_eq!(power_sum(2, -1), big(-1));
        // closed form S_1(n) = n(n-1)/2 everywhere
        for n in -5..8 {
            assert_eq!(power_sum(1, n), big(n * (n - 1) / 2));
        }
    }

    #[test]
    fn small_ranks() {
        for n in 3..=8 {
            assert_eq!(rank_l(n, 1).unwrap(), big((n * (n - 1) / 2) as i64));
            assert_eq!(
                rank_l(n, 2).unwrap(),
                big((n * (n - 1) * (n - 2) / 6) as i64)
            );
        }
        assert_eq!(rank_l(5, 3).unwrap(), big(30));
        assert_eq!(rank_l(3, 3).unwrap(), big(2));
        assert_eq!(hirsch(3, 3).unwrap(), big(4));
        assert_eq!(hirsch(4, 3).unwrap(), big(10));
        assert_eq!(hirsch(6, 5).unwrap(), big(336));
    }

    #[test]
    fn difference_degree() {
        let v: Vec<BigInt> = (0..8).map(|x| big(x * x * x + 2)).collect();
        assert_eq!(finite_difference_degree(&v), Some(3));
        assert_eq!(extrapolate(&v, 3, 2), vec![big(66), big(127)]);
    }

    #[test]
    fn transversal_sizes() {
        for n in 5..=9 {
            assert_eq!(
                transversal(n).len(),
                expected_orbit_lengths(n).len(),
                "n = {n}"
            );
        }
        assert_eq!(transversal(5), vec![Triple(1, 2, 3), Triple(1, 2, 4)]);
    }

    #[test]
    fn engine_action_matches_permutation_rule() {
        for n in 3..=5 {
            for k in 1..n {
                let g = NilElement::sigma(n, k, Sign::Pos).unwrap();
                assert_eq!(triple_action_of(&g).unwrap(), triple_action(g.perm()));
                assert_eq!(pair_action_of(&g).unwrap(), pair_action(g.perm()));
            }
        }
    }

    #[test]
    fn b3_matrices() {
        let (pb, tb) = b3_basis();
        let s1 = NilElement::sigma(3, 1, Sign::Pos).unwrap();
        let h = holonomy_matrix_in(&s1, Some(&pb), Some(&tb)).unwrap();
        assert_eq!(
            h.combined(),
            vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, -1]
            ]
        );
        assert_eq!(h.det, 1);
        assert_eq!(holonomy_det_by_elimination(&h).unwrap(), 1);
    }
}
