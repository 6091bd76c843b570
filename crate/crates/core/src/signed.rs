//! Signed permutations of a finite basis and the cyclic difference systems
//! they define.

use crate::error::{self, NilError, Result};
use crate::lattice::{Pair, Triple};
use crate::perm::Permutation;

/// `e_j ↦ sign[j] · e_{image[j]}` on a basis indexed `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    image: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(len: usize) -> Self {
        SignedPermutation {
            image: (0..len).collect(),
            sign: vec![1; len],
        }
    }

    pub fn new(image: Vec<usize>, sign: Vec<i8>) -> Result<Self> {
        let len = image.len();
        if sign.len() != len || sign.iter().any(|&s| s != 1 && s != -1) {
            return Err(NilError::constraint(
                "signs must be ±1, one per basis element",
            ));
        }
        let mut seen = vec![false; len];
        for &v in &image {
            if v >= len || seen[v] {
                return Err(NilError::InvalidPermutation(len));
            }
            seen[v] = true;
        }
        Ok(SignedPermutation { image, sign })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self, j: usize) -> (usize, i8) {
        (self.image[j], self.sign[j])
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &v)| j == v) && self.sign.iter().all(|&s| s == 1)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &SignedPermutation) -> SignedPermutation {
        let (image, sign) = (0..self.len())
            .map(|j| {
                let (a, s) = self.image(j);
                let (b, t) = other.image(a);
                (b, s * t)
            })
            .unzip();
        SignedPermutation { image, sign }
    }

    /// Row-major matrix whose column `j` is the image of `e_j`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let m = self.len();
        let mut out = vec![vec![0i64; m]; m];
        for j in 0..m {
            out[self.image[j]][j] = self.sign[j] as i64;
        }
        out
    }

    /// Parity of the underlying permutation times the product of signs.
    pub fn det(&self) -> i64 {
        let mut seen = vec![false; self.len()];
        let mut parity = 1i64;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut j = start;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.image[j];
                len += 1;
            }
            if len % 2 == 0 {
                parity = -parity;
            }
        }
        parity * self.sign.iter().map(|&s| s as i64).product::<i64>()
    }

    /// Cycles of the underlying permutation, each starting at its smallest
    /// index, with the sign accumulated from the start to each entry.
    pub fn signed_cycles(&self) -> Vec<SignedCycle> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut entries = Vec::new();
            let (mut j, mut s) = (start, 1i8);
            while !seen[j] {
                seen[j] = true;
                entries.push((j, s));
                let (nj, t) = self.image(j);
                s *= t;
                j = nj;
            }
            out.push(SignedCycle {
                entries,
                holonomy: s,
            });
        }
        out
    }

    /// Solves `χ(x) − x = target` for `χ = self`.
    ///
    /// On each cycle the solution is unique up to adding a fixed vector when
    /// the cycle sign is `+1`; that freedom is fixed by `x = 0` at the
    /// cycle's smallest index. Returns `None` when the system is inconsistent.
    pub fn solve_difference(&self, target: &[i64]) -> Result<Option<Vec<i64>>> {
        if target.len() != self.len() {
            return Err(NilError::constraint(
                "target length does not match the basis",
            ));
        }
        let mut x = vec![0i64; self.len()];
        for cyc in self.signed_cycles() {
            // x_{π(j)} = s_j x_j − t_{π(j)}, walking from the start with x = 0
            let walk = |x0: i64, x: &mut Vec<i64>| -> Result<i64> {
                let mut j = cyc.entries[0].0;
                x[j] = x0;
                for _ in 0..cyc.entries.len() {
                    let (nj, s) = self.image(j);
                    let v = error::add(error::mul(s as i64, x[j])?, error::neg(target[nj])?)?;
                    if nj == cyc.entries[0].0 {
                        return Ok(v);
                    }
                    x[nj] = v;
                    j = nj;
                }
                unreachable!("cycle walk returns to its start")
            };
            let back = walk(0, &mut x)?;
            if cyc.holonomy == 1 {
                if back != 0 {
                    return Ok(None);
                }
            } else {
                // back = -x0 + c with x0 = 0 gives c; need x0 = -x0 + c
                if back % 2 != 0 {
                    return Ok(None);
                }
                let x0 = back / 2;
                let closed = walk(x0, &mut x)?;
                debug_assert_eq!(closed, x0);
            }
        }
        Ok(Some(x))
    }
}

/// One cycle of a signed permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCycle {
    /// `(basis index, sign)` with `χ^t(e_start) = sign · e_index`.
    pub entries: Vec<(usize, i8)>,
    /// Sign picked up after a full turn.
    pub holonomy: i8,
}

/// Conjugation by any element with permutation `perm`, on `A_{i,j}` modulo
/// `Γ₂`: `A_{i,j} ↦ A_{π⁻¹(i),π⁻¹(j)}`.
pub fn pair_action(perm: &Permutation) -> SignedPermutation {
    let n = perm.n();
    let inv = perm.inverse();
    let image = Pair::all(n)
        .map(|p| {
            let (a, b) = (inv.apply(p.0), inv.apply(p.1));
            Pair(a.min(b), a.max(b)).index(n)
        })
        .collect::<Vec<_>>();
    let len = image.len();
    SignedPermutation {
        image,
        sign: vec![1; len],
    }
}

/// Conjugation by any element with permutation `perm`, on the basis
/// `α_{i,j,k}` of `Γ₂/Γ₃`: the indices move by `π⁻¹` and the sign is the
/// parity of sorting the image.
pub fn triple_action(perm: &Permutation) -> SignedPermutation {
    let n = perm.n();
    let inv = perm.inverse();
    let (image, sign) = Triple::all(n)
        .map(|t| {
            let st = Triple::sorted(inv.apply(t.0), inv.apply(t.1), inv.apply(t.2), n)
                .expect("images of a triple are distinct");
            (st.triple.index(n), st.sign)
        })
        .unzip();
    SignedPermutation { image, sign }
}

/// Exact determinant by fraction-free elimination.
pub fn bareiss_det(m: &[Vec<i64>]) -> Result<i64> {
    let size = m.len();
    if size == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..size - 1 {
        if a[k][k] == 0 {
            match (k + 1..size).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(NilError::Overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[size - 1][size - 1]).map_err(|_| NilError::Overflow)
}
