//! Conjugation of the pure coordinates by a single Artin generator.

use crate::error::Result;
use crate::lattice::{CommPart, Pair, PureElement, SignedTriple, Triple};
use crate::word::{check_generator, Sign};

fn transpose(k: usize, i: usize) -> usize {
    if i == k {
        k + 1
    } else if i == k + 1 {
        k
    } else {
        i
    }
}

/// `σ_k A_{i,j} σ_k⁻¹ = A_{pair'} · α_T^{sign}` with at most one correction.
fn forward_a(p: Pair, k: usize) -> (Pair, Option<SignedTriple>) {
    let (i, j) = (p.0, p.1);
    if j == k + 1 && i < k {
        let corr = SignedTriple {
            triple: Triple(i, k, k + 1),
            sign: -1,
        };
        (Pair(i, k), Some(corr))
    } else if i == k + 1 {
        let corr = SignedTriple {
            triple: Triple(k, k + 1, j),
            sign: -1,
        };
        (Pair(k, j), Some(corr))
    } else {
        let (a, b) = (transpose(k, i), transpose(k, j));
        (Pair(a.min(b), a.max(b)), None)
    }
}

fn alpha_image(t: Triple, k: usize) -> SignedTriple {
    let (a, b, c) = (transpose(k, t.0), transpose(k, t.1), transpose(k, t.2));
    // an adjacent transposition creates at most one inversion
    let mut v = [a, b, c];
    let mut sign = 1;
    for x in 0..2 {
        if v[x] > v[x + 1] {
            v.swap(x, x + 1);
            sign = -1;
        }
    }
    SignedTriple {
        triple: Triple(v[0], v[1], v[2]),
        sign,
    }
}

/// The inverse direction, obtained by inverting the forward rule: if
/// `σ_k A_{q'} σ_k⁻¹ = A_q·C` then `σ_k⁻¹ A_q σ_k = A_{q'}·(σ_k⁻¹ C σ_k)⁻¹`.
fn backward_a(q: Pair, k: usize) -> (Pair, Option<SignedTriple>) {
    let (a, b) = (transpose(k, q.0), transpose(k, q.1));
    let pre = Pair(a.min(b), a.max(b));
    let (img, corr) = forward_a(pre, k);
    debug_assert_eq!(img, q);
    let corr = corr.map(|c| {
        let moved = alpha_image(c.triple, k);
        SignedTriple {
            triple: moved.triple,
            sign: -(c.sign * moved.sign),
        }
    });
    (pre, corr)
}

pub(crate) fn conj_a_raw(p: Pair, k: usize, sign: Sign) -> (Pair, Option<SignedTriple>) {
    match sign {
        Sign::Pos => forward_a(p, k),
        Sign::Neg => backward_a(p, k),
    }
}

/// `σ_k^ε A_{i,j} σ_k^{-ε} = A_{pair'} · ∏ α^{correction}`.
pub fn conj_a_by_sigma(p: Pair, k: usize, sign: Sign, n: usize) -> Result<(Pair, CommPart)> {
    let p = Pair::new(p.0, p.1, n)?;
    check_generator(k, n)?;
    let (img, corr) = conj_a_raw(p, k, sign);
    let mut c = CommPart::zero(n);
    if let Some(st) = corr {
        c.add_signed(st, 1)?;
    }
    Ok((img, c))
}

/// `σ_k^ε α_T σ_k^{-ε}`; the rule does not depend on `ε`.
pub fn conj_alpha_by_sigma(t: Triple, k: usize, _sign: Sign, n: usize) -> Result<SignedTriple> {
    let t = Triple::new(t.0, t.1, t.2, n)?;
    check_generator(k, n)?;
    Ok(alpha_image(t, k))
}

/// `σ_k^ε x σ_k^{-ε}` for a pure element `x`.
pub(crate) fn conj_pure(x: &PureElement, k: usize, sign: Sign) -> Result<PureElement> {
    let n = x.n();
    let mut comm = CommPart::zero(n);
    for (t, c) in x.comm.entries() {
        comm.add_signed(alpha_image(t, k), c)?;
    }
    let mut out = PureElement::central(comm);
    for (p, e) in x.pure.entries() {
        let (img, corr) = conj_a_raw(p, k, sign);
        if let Some(st) = corr {
            out.comm.add_signed(st, e)?;
        }
        out.mul_generator(img, e)?;
    }
    Ok(out)
}
