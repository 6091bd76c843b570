//! Coordinates of `P_n/Γ₃(P_n)`.
//!
//! A pure element is stored in the ordered normal form
//! `∏_{(i,j) lex} A_{i,j}^{e(i,j)} · ∏_{(i,j,k) lex} α_{i,j,k}^{c(i,j,k)}`.
//! The `α` are central in `P_n/Γ₃(P_n)`, so the only thing the group law has
//! to track is the commutator produced by reordering `A` factors.

use std::fmt;

use crate::error::{self, NilError, Result};

/// Number of pairs `1 ≤ i < j ≤ n`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of triples `1 ≤ i < j < k ≤ n`.
pub fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Pair `(i, j)` with `1 ≤ i < j ≤ n`; `A_{j,i}` is normalized to `A_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair(pub usize, pub usize);

impl Pair {
    /// Sorts the indices; `A_{j,i} = A_{i,j}`.
    pub fn new(a: usize, b: usize, n: usize) -> Result<Pair> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i == 0 || i == j || j > n {
            return Err(NilError::IndexOutOfRange {
                what: "pair",
                index: if i == 0 || i == j { i } else { j },
                n,
            });
        }
        Ok(Pair(i, j))
    }

    /// Lexicographic index among all pairs for `n`.
    pub fn index(self, n: usize) -> usize {
        let (i, j) = (self.0 - 1, self.1 - 1);
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    pub fn from_index(idx: usize, n: usize) -> Pair {
        let mut rest = idx;
        for i in 0..n {
            let row = n - i - 1;
            if rest < row {
                return Pair(i + 1, i + 2 + rest);
            }
            rest -= row;
        }
        panic!("pair index {idx} out of range for n = {n}");
    }

    pub fn all(n: usize) -> impl Iterator<Item = Pair> {
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| Pair(i, j)))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{},{}]", self.0, self.1)
    }
}

/// Strictly increasing triple `(i, j, k)`, naming the basis element `α_{i,j,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple(pub usize, pub usize, pub usize);

impl Triple {
    pub fn new(i: usize, j: usize, k: usize, n: usize) -> Result<Triple> {
        if i == 0 || !(i < j && j < k) || k > n {
            return Err(NilError::IndexOutOfRange {
                what: "triple",
                index: if k > n { k } else { i },
                n,
            });
        }
        Ok(Triple(i, j, k))
    }

    /// Sorts three distinct indices and reports the parity of the sort.
    ///
    /// `α` attached to an unsorted triple is understood with one sign flip per
    /// transposition, matching `[A_{i,k},A_{j,k}] = α_{i,j,k}^{-1}`.
    pub fn sorted(a: usize, b: usize, c: usize, n: usize) -> Result<SignedTriple> {
        let mut v = [a, b, c];
        let mut sign = 1i8;
        for x in 0..3 {
            for y in 0..2 - x {
                if v[y] > v[y + 1] {
                    v.swap(y, y + 1);
                    sign = -sign;
                }
            }
        }
        Ok(SignedTriple {
            triple: Triple::new(v[0], v[1], v[2], n)?,
            sign,
        })
    }

    /// Lexicographic index among all triples for `n`.
    pub fn index(self, n: usize) -> usize {
        let (i, j, k) = (self.0 - 1, self.1 - 1, self.2 - 1);
        // triples with first element < i
        let mut idx = 0;
        for a in 0..i {
            let m = n - a - 1;
            idx += m * (m.saturating_sub(1)) / 2;
        }
        // triples (i, b, *) with b < j
        for b in i + 1..j {
            idx += n - b - 1;
        }
        idx + (k - j - 1)
    }

    pub fn from_index(idx: usize, n: usize) -> Triple {
        Triple::all(n)
            .nth(idx)
            .unwrap_or_else(|| panic!("triple index {idx} out of range for n = {n}"))
    }

    pub fn all(n: usize) -> impl Iterator<Item = Triple> {
        (1..=n).flat_map(move |i| {
            (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| Triple(i, j, k)))
        })
    }

    pub fn shifted(self, d: usize) -> Triple {
        Triple(self.0 + d, self.1 + d, self.2 + d)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{},{}]", self.0, self.1, self.2)
    }
}

/// A basis element `α_T` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedTriple {
    pub triple: Triple,
    pub sign: i8,
}

/// Exponents on the `A_{i,j}`: coordinates of `P_n/Γ₂(P_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PurePart {
    n: usize,
    e: Vec<i64>,
}

/// Exponents on the `α_{i,j,k}`: coordinates of `Γ₂(P_n)/Γ₃(P_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CommPart {
    n: usize,
    c: Vec<i64>,
}

impl PurePart {
    pub fn zero(n: usize) -> Self {
        PurePart {
            n,
            e: vec![0; pair_count(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: Pair) -> i64 {
        self.e[p.index(self.n)]
    }

    pub fn set(&mut self, p: Pair, v: i64) {
        let idx = p.index(self.n);
        self.e[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&v| v == 0)
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Pair, i64)> + '_ {
        self.e
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(idx, &v)| (Pair::from_index(idx, self.n), v))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.e
    }

    pub(crate) fn from_vec(n: usize, e: Vec<i64>) -> Self {
        debug_assert_eq!(e.len(), pair_count(n));
        PurePart { n, e }
    }
}

impl CommPart {
    pub fn zero(n: usize) -> Self {
        CommPart {
            n,
            c: vec![0; triple_count(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: Triple) -> i64 {
        self.c[t.index(self.n)]
    }

    pub fn set(&mut self, t: Triple, v: i64) {
        let idx = t.index(self.n);
        self.c[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Triple, i64)> + '_ {
        let all: Vec<Triple> = Triple::all(self.n).collect();
        self.c
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(idx, &v)| (all[idx], v))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.c
    }

    pub(crate) fn from_vec(n: usize, c: Vec<i64>) -> Self {
        debug_assert_eq!(c.len(), triple_count(n));
        CommPart { n, c }
    }

    pub fn checked_add(&self, other: &CommPart) -> Result<CommPart> {
        check_n(self.n, other.n)?;
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(&a, &b)| error::add(a, b))
            .collect::<Result<_>>()?;
        Ok(CommPart { n: self.n, c })
    }

    pub fn checked_neg(&self) -> Result<CommPart> {
        let c = self
            .c
            .iter()
            .map(|&a| error::neg(a))
            .collect::<Result<_>>()?;
        Ok(CommPart { n: self.n, c })
    }

    pub(crate) fn add_signed(&mut self, st: SignedTriple, coeff: i64) -> Result<()> {
        let idx = st.triple.index(self.n);
        let delta = error::mul(coeff, st.sign as i64)?;
        self.c[idx] = error::add(self.c[idx], delta)?;
        Ok(())
    }
}

pub(crate) fn check_n(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(NilError::StrandMismatch { left: a, right: b })
    }
}

/// Coordinates in `Γ₂/Γ₃` of the commutator `[A_p, A_q]`.
///
/// Zero when the index sets share none or both indices. Otherwise, for the
/// sorted triple `a < b < c` the three pairs `ab → bc → ac → ab` are in cyclic
/// order and the commutator of a pair with its successor is `+α_{a,b,c}`.
pub fn comm_structure(p: Pair, q: Pair) -> Option<SignedTriple> {
    let shared = [p.0 == q.0, p.0 == q.1, p.1 == q.0, p.1 == q.1]
        .iter()
        .filter(|&&b| b)
        .count();
    if shared != 1 {
        return None;
    }
    let mut idx = [p.0, p.1, q.0, q.1];
    idx.sort_unstable();
    let mut u = [0usize; 3];
    let mut len = 0;
    for &v in &idx {
        if len == 0 || u[len - 1] != v {
            u[len] = v;
            len += 1;
        }
    }
    let (a, b, c) = (u[0], u[1], u[2]);
    let rank = |x: Pair| -> usize {
        if x == Pair(a, b) {
            0
        } else if x == Pair(b, c) {
            1
        } else {
            2
        }
    };
    let (rp, rq) = (rank(p), rank(q));
    let sign = if (rp + 1) % 3 == rq { 1 } else { -1 };
    Some(SignedTriple {
        triple: Triple(a, b, c),
        sign,
    })
}

/// Checked `comm_structure` with index validation, as a `CommPart`.
pub fn comm_structure_part(p: Pair, q: Pair, n: usize) -> Result<CommPart> {
    let p = Pair::new(p.0, p.1, n)?;
    let q = Pair::new(q.0, q.1, n)?;
    let mut out = CommPart::zero(n);
    if let Some(st) = comm_structure(p, q) {
        out.add_signed(st, 1)?;
    }
    Ok(out)
}

/// An element of `P_n/Γ₃(P_n)` in normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PureElement {
    pub pure: PurePart,
    pub comm: CommPart,
}

impl PureElement {
    pub fn identity(n: usize) -> Self {
        PureElement {
            pure: PurePart::zero(n),
            comm: CommPart::zero(n),
        }
    }

    pub fn n(&self) -> usize {
        self.pure.n
    }

    pub fn is_identity(&self) -> bool {
        self.pure.is_zero() && self.comm.is_zero()
    }

    pub fn generator(p: Pair, n: usize, exp: i64) -> Self {
        let mut x = Self::identity(n);
        x.pure.set(p, exp);
        x
    }

    pub fn central(comm: CommPart) -> Self {
        PureElement {
            pure: PurePart::zero(comm.n),
            comm,
        }
    }

    /// `self · A_q^b`, moving `A_q^b` left past every `A_p^{e_p}` with `p > q`.
    pub(crate) fn mul_generator(&mut self, q: Pair, b: i64) -> Result<()> {
        if b == 0 {
            return Ok(());
        }
        let n = self.n();
        let qi = q.index(n);
        for pi in qi + 1..self.pure.e.len() {
            let ep = self.pure.e[pi];
            if ep == 0 {
                continue;
            }
            if let Some(st) = comm_structure(Pair::from_index(pi, n), q) {
                self.comm.add_signed(st, error::mul(ep, b)?)?;
            }
        }
        self.pure.e[qi] = error::add(self.pure.e[qi], b)?;
        Ok(())
    }

    /// `A_q^b · self`, moving `A_q^b` right past every `A_p^{e_p}` with `p < q`.
    pub(crate) fn left_mul_generator(&mut self, q: Pair, b: i64) -> Result<()> {
        if b == 0 {
            return Ok(());
        }
        let n = self.n();
        let qi = q.index(n);
        for pi in 0..qi {
            let ep = self.pure.e[pi];
            if ep == 0 {
                continue;
            }
            // A_q^b A_p^e = A_p^e A_q^b [A_q, A_p]^{b e}
            if let Some(st) = comm_structure(q, Pair::from_index(pi, n)) {
                self.comm.add_signed(st, error::mul(ep, b)?)?;
            }
        }
        self.pure.e[qi] = error::add(self.pure.e[qi], b)?;
        Ok(())
    }

    /// Class-2 product `(e,c)(e',c') = (e+e', c+c'+Σ_{p>q} e_p e'_q [A_p,A_q])`.
    pub fn mul(&self, other: &PureElement) -> Result<PureElement> {
        check_n(self.n(), other.n())?;
        let mut out = self.clone();
        out.comm = out.comm.checked_add(&other.comm)?;
        for (q, b) in other.pure.entries() {
            out.mul_generator(q, b)?;
        }
        Ok(out)
    }

    pub fn inv(&self) -> Result<PureElement> {
        // (e,c)^{-1} = (-e, -c + B(e,e))
        let n = self.n();
        let mut comm = self.comm.checked_neg()?;
        let entries: Vec<(Pair, i64)> = self.pure.entries().collect();
        for &(p, ep) in &entries {
            for &(q, eq) in &entries {
                if p > q {
                    if let Some(st) = comm_structure(p, q) {
                        comm.add_signed(st, error::mul(ep, eq)?)?;
                    }
                }
            }
        }
        let e = self
            .pure
            .e
            .iter()
            .map(|&v| error::neg(v))
            .collect::<Result<_>>()?;
        Ok(PureElement {
            pure: PurePart::from_vec(n, e),
            comm,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_roundtrip() {
        for n in 2..9 {
            for (idx, p) in Pair::all(n).enumerate() {
                assert_eq!(p.index(n), idx);
                assert_eq!(Pair::from_index(idx, n), p);
            }
            assert_eq!(Pair::all(n).count(), pair_count(n));
        }
    }

    #[test]
    fn triple_index_roundtrip() {
        for n in 3..10 {
            for (idx, t) in Triple::all(n).enumerate() {
                assert_eq!(t.index(n), idx);
            }
            assert_eq!(Triple::all(n).count(), triple_count(n));
        }
        assert_eq!(triple_count(2), 0);
    }

    #[test]
    fn comm_structure_examples() {
        let plus = |t| Some(SignedTriple { triple: t, sign: 1 });
        let minus = |t| {
            Some(SignedTriple {
                triple: t,
                sign: -1,
            })
        };
        assert_eq!(
            comm_structure(Pair(1, 2), Pair(2, 3)),
            plus(Triple(1, 2, 3))
        );
        assert_eq!(
            comm_structure(Pair(1, 3), Pair(2, 3)),
            minus(Triple(1, 2, 3))
        );
        assert_eq!(
            comm_structure(Pair(1, 2), Pair(1, 3)),
            minus(Triple(1, 2, 3))
        );
        assert_eq!(
            comm_structure(Pair(2, 3), Pair(1, 2)),
            minus(Triple(1, 2, 3))
        );
        assert_eq!(comm_structure(Pair(1, 2), Pair(3, 4)), None);
        assert_eq!(comm_structure(Pair(1, 3), Pair(1, 3)), None);
    }

    #[test]
    fn comm_structure_antisymmetric() {
        let n = 6;
        for p in Pair::all(n) {
            for q in Pair::all(n) {
                let a = comm_structure(p, q);
                let b = comm_structure(q, p);
                match (a, b) {
                    (None, None) => {}
                    (Some(x), Some(y)) => {
                        assert_eq!(x.triple, y.triple);
                        assert_eq!(x.sign, -y.sign);
                    }
                    _ => panic!("asymmetric support at {p} {q}"),
                }
            }
        }
    }

    #[test]
    fn comm_structure_rejects_bad_pairs() {
        assert!(comm_structure_part(Pair(1, 5), Pair(1, 2), 4).is_err());
        assert!(comm_structure_part(Pair(2, 2), Pair(1, 2), 4).is_err());
    }

    #[test]
    fn single_generator_inverse() {
        let n = 4;
        let mut x = PureElement::generator(Pair(1, 3), n, 3);
        x.comm.set(Triple(1, 2, 4), 2);
        let inv = x.inv().unwrap();
        assert_eq!(inv.pure.get(Pair(1, 3)), -3);
        assert_eq!(inv.comm.get(Triple(1, 2, 4)), -2);
        assert!(x.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn reordering_produces_commutator() {
        // A_{2,3} · A_{1,2} = A_{1,2} A_{2,3} [A_{2,3}, A_{1,2}]... in normal form
        let n = 3;
        let b = PureElement::generator(Pair(2, 3), n, 1);
        let c = PureElement::generator(Pair(1, 2), n, 1);
        let bc = b.mul(&c).unwrap();
        assert_eq!(bc.pure.get(Pair(1, 2)), 1);
        assert_eq!(bc.pure.get(Pair(2, 3)), 1);
        assert_eq!(bc.comm.get(Triple(1, 2, 3)), -1);
        let mut left = b.clone();
        left.left_mul_generator(Pair(1, 2), 1).unwrap();
        assert_eq!(left, c.mul(&b).unwrap());
    }

    #[test]
    fn sorted_triple_sign() {
        let st = Triple::sorted(3, 1, 2, 4).unwrap();
        assert_eq!((st.triple, st.sign), (Triple(1, 2, 3), 1));
        let st = Triple::sorted(1, 3, 2, 4).unwrap();
        assert_eq!((st.triple, st.sign), (Triple(1, 2, 3), -1));
        assert!(Triple::sorted(1, 1, 2, 4).is_err());
    }
}
