//! Words in the Artin generators.

use std::fmt;

use crate::error::{NilError, Result};
use crate::lattice::{Pair, Triple};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_i64(e: i64) -> Option<Sign> {
        match e {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// `σ_k^ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub k: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(k: usize) -> Letter {
        Letter { k, sign: Sign::Pos }
    }

    pub fn neg(k: usize) -> Letter {
        Letter { k, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            k: self.k,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.k),
            Sign::Neg => write!(f, "S{}", self.k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn empty(n: usize) -> Self {
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            check_generator(l.k, n)?;
        }
        Ok(BraidWord { n, letters })
    }

    /// From `(k, ±1)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, i64)]) -> Result<Self> {
        let letters = pairs
            .iter()
            .map(|&(k, e)| {
                Sign::from_i64(e)
                    .map(|sign| Letter { k, sign })
                    .ok_or_else(|| NilError::constraint(format!("letter exponent {e} is not ±1")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) -> Result<()> {
        check_generator(l.k, self.n)?;
        self.letters.push(l);
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(NilError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Formal inverse: reversed, signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, m: i64) -> BraidWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let reps = m.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Permutation of the word, `s_{i1}·…·s_{il}`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for l in &self.letters {
            p.swap_values(l.k);
        }
        p
    }

    /// Translates every generator index by `d` into `n` strands.
    pub fn shifted(&self, d: usize, n: usize) -> Result<BraidWord> {
        if self.n + d > n {
            return Err(NilError::constraint(format!(
                "word on {} strands shifted by {d} exceeds n = {n}",
                self.n
            )));
        }
        let letters = self
            .letters
            .iter()
            .map(|l| Letter {
                k: l.k + d,
                sign: l.sign,
            })
            .collect();
        Ok(BraidWord { n, letters })
    }

    /// `A_{i,j} = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j-1}⁻¹`.
    pub fn pure_generator(p: Pair, n: usize) -> Result<BraidWord> {
        let p = Pair::new(p.0, p.1, n)?;
        let (i, j) = (p.0, p.1);
        let mut letters = Vec::with_capacity(2 * (j - i));
        for k in (i + 1..j).rev() {
            letters.push(Letter::pos(k));
        }
        letters.push(Letter::pos(i));
        letters.push(Letter::pos(i));
        for k in i + 1..j {
            letters.push(Letter::neg(k));
        }
        Ok(BraidWord { n, letters })
    }

    /// `[g,h] = g h g⁻¹ h⁻¹` on words.
    pub fn commutator(g: &BraidWord, h: &BraidWord) -> Result<BraidWord> {
        g.concat(h)?.concat(&g.inverse())?.concat(&h.inverse())
    }

    /// `α_{i,j,k} = [A_{i,j}, A_{j,k}]` as a braid word.
    pub fn alpha(t: Triple, n: usize) -> Result<BraidWord> {
        let t = Triple::new(t.0, t.1, t.2, n)?;
        Self::commutator(
            &Self::pure_generator(Pair(t.0, t.1), n)?,
            &Self::pure_generator(Pair(t.1, t.2), n)?,
        )
    }

    /// `σ_{r+k-1}⋯σ_{r+h+1} σ_{r+h}⁻¹⋯σ_{r+1}⁻¹` with `h = ⌊(k-1)/2⌋`.
    ///
    /// For odd `k` this is `δ_{r,k}`. Its permutation sends `r+i` to `r+i+1`
    /// cyclically on `{r+1..r+k}` for every `k ≥ 2`.
    pub fn delta_word(r: usize, k: usize, n: usize) -> Result<BraidWord> {
        if k < 2 || r + k > n {
            return Err(NilError::constraint(format!(
                "delta block of size {k} at offset {r} does not fit in n = {n}"
            )));
        }
        let h = (k - 1) / 2;
        let mut letters = Vec::with_capacity(k - 1);
        for t in (h + 1..k).rev() {
            letters.push(Letter::pos(r + t));
        }
        for t in (1..=h).rev() {
            letters.push(Letter::neg(r + t));
        }
        Ok(BraidWord { n, letters })
    }

    /// `σ_1 σ_2 ⋯ σ_{n-1}`.
    pub fn cyclic_word(n: usize) -> BraidWord {
        BraidWord {
            n,
            letters: (1..n).map(Letter::pos).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_generator(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        Err(NilError::IndexOutOfRange {
            what: "generator",
            index: k,
            n,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_generator_words() {
        let w = BraidWord::pure_generator(Pair(1, 3), 4).unwrap();
        assert_eq!(w.to_string(), "s2 s1 s1 S2");
        assert!(w.permutation().is_identity());
        let w = BraidWord::pure_generator(Pair(3, 2), 4).unwrap();
        assert_eq!(w.to_string(), "s2 s2");
    }

    #[test]
    fn delta_words() {
        let d3 = BraidWord::delta_word(0, 3, 3).unwrap();
        assert_eq!(d3.to_string(), "s2 S1");
        let d5 = BraidWord::delta_word(0, 5, 5).unwrap();
        assert_eq!(d5.to_string(), "s4 s3 S2 S1");
        assert_eq!(d5.permutation().images(), vec![2, 3, 4, 5, 1]);
        let d = BraidWord::delta_word(2, 5, 8).unwrap();
        assert_eq!(d.to_string(), "s6 s5 S4 S3");
        for n in 2..9 {
            let p = BraidWord::delta_word(0, n, n).unwrap().permutation();
            let expect: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
            assert_eq!(p.images(), expect);
        }
    }

    #[test]
    fn inverse_and_pow() {
        let w = BraidWord::from_pairs(4, &[(1, 1), (3, -1)]).unwrap();
        assert_eq!(w.inverse().to_string(), "s3 S1");
        assert_eq!(w.pow(-2).to_string(), "s3 S1 s3 S1");
        assert!(w.pow(0).is_empty());
        assert!(BraidWord::from_pairs(4, &[(4, 1)]).is_err());
        assert!(BraidWord::from_pairs(4, &[(1, 2)]).is_err());
    }
}
