//! Normal forms in `B_n/Γ₃(P_n)` and the group law.
//!
//! An element is `s(π) · x` where `s` lifts `π` to the positive braid of its
//! lexicographically smallest reduced word and `x` is pure. Right
//! multiplication by `σ_k^ε` moves `x` across the letter and then absorbs the
//! letter into the lift, which either changes only `π` or also leaves
//! `A_{k,k+1}^{±1} = σ_k^{±2}` behind.

use std::fmt;

use crate::action::conj_pure;
use crate::error::{NilError, Result};
use crate::lattice::{check_n, CommPart, Pair, PureElement, PurePart, Triple};
use crate::perm::Permutation;
use crate::word::{check_generator, BraidWord, Letter, Sign};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NilElement {
    perm: Permutation,
    x: PureElement,
}

/// Result of [`NilElement::order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(q) => write!(f, "{q}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// The positive lift of `perm` along its lexicographically smallest reduced word.
pub fn tits_lift(perm: &Permutation) -> BraidWord {
    let letters = perm.reduced_word().into_iter().map(Letter::pos).collect();
    BraidWord::new(perm.n(), letters).expect("reduced word letters are in range")
}

impl NilElement {
    pub fn identity(n: usize) -> Self {
        NilElement {
            perm: Permutation::identity(n),
            x: PureElement::identity(n),
        }
    }

    pub fn from_parts(perm: Permutation, pure: PurePart, comm: CommPart) -> Result<Self> {
        check_n(perm.n(), pure.n())?;
        check_n(perm.n(), comm.n())?;
        Ok(NilElement {
            perm,
            x: PureElement { pure, comm },
        })
    }

    pub fn from_pure(x: PureElement) -> Self {
        NilElement {
            perm: Permutation::identity(x.n()),
            x,
        }
    }

    /// `σ_k^ε`.
    pub fn sigma(n: usize, k: usize, sign: Sign) -> Result<Self> {
        Self::identity(n).right_mul_gen(k, sign)
    }

    /// `A_{i,j}^e`.
    pub fn a_gen(n: usize, i: usize, j: usize, e: i64) -> Result<Self> {
        let p = Pair::new(i, j, n)?;
        Ok(Self::from_pure(PureElement::generator(p, n, e)))
    }

    /// `α_{i,j,k}^c`, with unsorted indices contributing a sign.
    pub fn alpha_gen(n: usize, i: usize, j: usize, k: usize, c: i64) -> Result<Self> {
        let st = Triple::sorted(i, j, k, n)?;
        let mut comm = CommPart::zero(n);
        comm.add_signed(st, c)?;
        Ok(Self::from_pure(PureElement::central(comm)))
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn pure(&self) -> &PurePart {
        &self.x.pure
    }

    pub fn comm(&self) -> &CommPart {
        &self.x.comm
    }

    pub fn pure_element(&self) -> &PureElement {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.x.is_identity()
    }

    /// Normal form of `self · σ_k^ε`.
    pub fn right_mul_gen(&self, k: usize, sign: Sign) -> Result<Self> {
        check_generator(k, self.n())?;
        // s(π) x σ_k^ε = s(π) σ_k^ε (σ_k^{-ε} x σ_k^ε)
        let moved = conj_pure(&self.x, k, sign.flip())?;
        let ascent = self.perm.right_ascent(k);
        let mut perm = self.perm.clone();
        perm.swap_values(k);
        let mut x = moved;
        match (sign, ascent) {
            (Sign::Pos, true) | (Sign::Neg, false) => {}
            (Sign::Pos, false) => x.left_mul_generator(Pair(k, k + 1), 1)?,
            (Sign::Neg, true) => x.left_mul_generator(Pair(k, k + 1), -1)?,
        }
        Ok(NilElement { perm, x })
    }

    pub fn mul_letter(&self, l: Letter) -> Result<Self> {
        self.right_mul_gen(l.k, l.sign)
    }

    /// Left-to-right fold of the word from the identity.
    pub fn collect(word: &BraidWord) -> Result<Self> {
        word.letters()
            .iter()
            .try_fold(Self::identity(word.n()), |acc, &l| acc.mul_letter(l))
    }

    pub fn mul(&self, other: &NilElement) -> Result<Self> {
        check_n(self.n(), other.n())?;
        let mut acc = self.clone();
        for &l in tits_lift(&other.perm).letters() {
            acc = acc.mul_letter(l)?;
        }
        acc.x = acc.x.mul(&other.x)?;
        Ok(acc)
    }

    pub fn inv(&self) -> Result<Self> {
        // (s(π) x)⁻¹ = x⁻¹ s(π)⁻¹
        let mut acc = NilElement::from_pure(self.x.inv()?);
        for &l in tits_lift(&self.perm).inverse().letters() {
            acc = acc.mul_letter(l)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, m: i64) -> Result<Self> {
        let mut base = if m < 0 { self.inv()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Self::identity(self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `g · x · g⁻¹`.
    pub fn conj(g: &NilElement, x: &NilElement) -> Result<Self> {
        g.mul(x)?.mul(&g.inv()?)
    }

    /// Commutator `[g,h] = g h g⁻¹ h⁻¹`.
    pub fn commutator(g: &NilElement, h: &NilElement) -> Result<Self> {
        g.mul(h)?.mul(&g.inv()?)?.mul(&h.inv()?)
    }

    /// The kernel `P_n/Γ₃(P_n)` is torsion free, so a finite order must be
    /// the order `q` of the permutation, and it is iff `self^q = 1`.
    pub fn order(&self) -> Result<Order> {
        let q = self.perm.order()?;
        let qi = i64::try_from(q).map_err(|_| NilError::Overflow)?;
        if self.pow(qi)?.is_identity() {
            Ok(Order::Finite(q))
        } else {
            Ok(Order::Infinite)
        }
    }

    /// A word that collects to `self`: the lift followed by the pure factors
    /// expanded as braid words.
    pub fn to_word(&self) -> Result<BraidWord> {
        let n = self.n();
        let mut w = tits_lift(&self.perm);
        for (p, e) in self.x.pure.entries() {
            w = w.concat(&BraidWord::pure_generator(p, n)?.pow(e))?;
        }
        for (t, c) in self.x.comm.entries() {
            w = w.concat(&BraidWord::alpha(t, n)?.pow(c))?;
        }
        Ok(w)
    }

    /// Image under the strand translation `i ↦ i + d` into `n` strands.
    pub fn shift_embed(&self, d: usize, n: usize) -> Result<Self> {
        let n0 = self.n();
        let perm = self.perm.shifted(d, n)?;
        let mut pure = PurePart::zero(n);
        for (p, e) in self.x.pure.entries() {
            pure.set(Pair(p.0 + d, p.1 + d), e);
        }
        let mut comm = CommPart::zero(n);
        for (t, c) in self.x.comm.entries() {
            comm.set(t.shifted(d), c);
        }
        debug_assert!(n0 + d <= n);
        Self::from_parts(perm, pure, comm)
    }
}

impl fmt::Debug for NilElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NilElement {{ perm: {:?}, pure: [", self.perm.images())?;
        for (idx, (p, e)) in self.x.pure.entries().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}^{e}")?;
        }
        f.write_str("], comm: [")?;
        for (idx, (t, c)) in self.x.comm.entries().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}^{c}")?;
        }
        f.write_str("] }")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, pairs: &[(usize, i64)]) -> NilElement {
        NilElement::collect(&BraidWord::from_pairs(n, pairs).unwrap()).unwrap()
    }

    #[test]
    fn sigma_squared_is_a12() {
        let s1 = NilElement::sigma(3, 1, Sign::Pos).unwrap();
        assert_eq!(s1.perm().images(), vec![2, 1, 3]);
        assert!(s1.pure().is_zero());
        let a = s1.mul(&s1).unwrap();
        assert!(a.perm().is_identity());
        assert_eq!(a, NilElement::a_gen(3, 1, 2, 1).unwrap());
        assert_eq!(s1.pow(2).unwrap(), a);
    }

    #[test]
    fn delta3_cubed() {
        let d = collect(3, &[(2, 1), (1, -1)]).pow(3).unwrap();
        assert_eq!(d, NilElement::alpha_gen(3, 1, 2, 3, -1).unwrap());
    }

    #[test]
    fn delta5_fifth_power() {
        let w = BraidWord::delta_word(0, 5, 5).unwrap().pow(5);
        let e = NilElement::collect(&w).unwrap();
        assert!(e.perm().is_identity());
        assert!(e.pure().is_zero());
        let b = [(1, 2, 4), (1, 3, 5), (2, 4, 5), (1, 3, 4), (2, 3, 5)];
        for t in Triple::all(5) {
            let expect = if b.contains(&(t.0, t.1, t.2)) { -1 } else { 0 };
            assert_eq!(e.comm().get(t), expect, "{t}");
        }
    }

    #[test]
    fn full_twist() {
        for n in 2..=6 {
            let e = NilElement::collect(&BraidWord::cyclic_word(n).pow(n as i64)).unwrap();
            assert!(e.perm().is_identity());
            assert!(Pair::all(n).all(|p| e.pure().get(p) == 1));
            assert!(e.comm().is_zero(), "n = {n}: {e:?}");
        }
    }

    #[test]
    fn alpha_word_matches_basis() {
        for n in 3..=5 {
            for t in Triple::all(n) {
                let e = NilElement::collect(&BraidWord::alpha(t, n).unwrap()).unwrap();
                assert_eq!(e, NilElement::alpha_gen(n, t.0, t.1, t.2, 1).unwrap());
            }
        }
    }

    #[test]
    fn pure_generator_word_matches() {
        for n in 2..=5 {
            for p in Pair::all(n) {
                let e = NilElement::collect(&BraidWord::pure_generator(p, n).unwrap()).unwrap();
                assert_eq!(e, NilElement::a_gen(n, p.0, p.1, 1).unwrap());
            }
        }
    }

    #[test]
    fn inverse_and_order() {
        let x = collect(4, &[(1, 1), (3, -1), (2, 1), (2, 1), (1, -1)]);
        assert!(x.mul(&x.inv().unwrap()).unwrap().is_identity());
        assert!(x.inv().unwrap().mul(&x).unwrap().is_identity());
        assert_eq!(x.pow(-1).unwrap(), x.inv().unwrap());
        assert_eq!(NilElement::identity(4).order().unwrap(), Order::Finite(1));
        let s1 = NilElement::sigma(4, 1, Sign::Pos).unwrap();
        assert_eq!(s1.order().unwrap(), Order::Infinite);
    }

    #[test]
    fn order_five_element() {
        let b1 = NilElement::alpha_gen(5, 1, 2, 4, 1).unwrap();
        let d5 = collect(5, &[(4, 1), (3, 1), (2, -1), (1, -1)]);
        assert_eq!(b1.mul(&d5).unwrap().order().unwrap(), Order::Finite(5));
        assert_eq!(d5.order().unwrap(), Order::Infinite);
    }

    #[test]
    fn to_word_round_trip() {
        let x = collect(4, &[(1, 1), (3, -1), (2, 1), (2, 1), (1, -1), (3, -1)]);
        assert_eq!(NilElement::collect(&x.to_word().unwrap()).unwrap(), x);
    }

    #[test]
    fn overflow_is_an_error() {
        let big = NilElement::a_gen(3, 1, 2, i64::MAX).unwrap();
        assert!(matches!(big.pow(2), Err(NilError::Overflow)));
    }

    #[test]
    fn mismatched_strands() {
        let a = NilElement::identity(3);
        let b = NilElement::identity(4);
        assert!(a.mul(&b).is_err());
    }
}
