//! Finite-order elements of `B_n/Γ₃(P_n)` and their conjugacy.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::element::{tits_lift, NilElement, Order};
use crate::error::{self, NilError, Result};
use crate::invariants::{orbit_partition, OrbitBasis};
use crate::lattice::{CommPart, PureElement, PurePart};
use crate::perm::{padded_cycle_type, Permutation};
use crate::signed::{pair_action, triple_action};
use crate::word::BraidWord;

/// `δ_{r,k} = σ_{r+k−1}⋯σ_{r+(k+1)/2} σ_{r+(k−1)/2}⁻¹⋯σ_{r+1}⁻¹` for odd `k ≥ 3`.
pub fn delta(r: usize, k: usize, n: usize) -> Result<NilElement> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(NilError::constraint(format!(
            "delta needs odd k ≥ 3, got {k}"
        )));
    }
    NilElement::collect(&BraidWord::delta_word(r, k, n)?)
}

/// `δ_n^n` together with the constant exponent `m_i` on each δ_n-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPower {
    pub comm: CommPart,
    pub m: Vec<i64>,
    pub orbits: OrbitBasis,
}

pub fn delta_n_pow_n(n: usize) -> Result<DeltaPower> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(NilError::constraint(format!(
            "δ_n^n never enters Γ₂/Γ₃ for even n (n = {n})"
        )));
    }
    let p = delta(0, n, n)?.pow(n as i64)?;
    if !p.perm().is_identity() || !p.pure().is_zero() {
        return Err(NilError::constraint("δ_n^n is not central"));
    }
    let orbits = orbit_partition(n)?;
    let mut m = Vec::with_capacity(orbits.orbits.len());
    for orb in &orbits.orbits {
        let vals: Vec<i64> = orb
            .iter()
            .map(|st| p.comm().get(st.triple) * i64::from(st.sign))
            .collect();
        if vals.iter().any(|&v| v != vals[0]) {
            return Err(NilError::constraint(format!(
                "exponents of δ_n^n are not constant on the orbit of {}",
                orb[0].triple
            )));
        }
        m.push(vals[0]);
    }
    Ok(DeltaPower {
        comm: p.comm().clone(),
        m,
        orbits,
    })
}

/// Exponents `r_{i,j}` of `θ = ∏ b_{i,j}^{r_{i,j}}`, rows by orbit, columns
/// by position along the orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residues {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
}

impl Residues {
    pub fn zero(orbits: &OrbitBasis) -> Self {
        Residues {
            n: orbits.n,
            rows: orbits.orbits.iter().map(|o| vec![0; o.len()]).collect(),
        }
    }

    fn check_shape(&self, orbits: &OrbitBasis) -> Result<()> {
        let ok = self.n == orbits.n
            && self.rows.len() == orbits.orbits.len()
            && self
                .rows
                .iter()
                .zip(&orbits.orbits)
                .all(|(r, o)| r.len() == o.len());
        if ok {
            Ok(())
        } else {
            Err(NilError::constraint(format!(
                "residues must have orbit lengths {:?} for n = {}",
                orbits.lengths(),
                orbits.n
            )))
        }
    }

    /// `θ` as coordinates in the triple basis.
    pub fn theta(&self, orbits: &OrbitBasis) -> Result<CommPart> {
        self.check_shape(orbits)?;
        let mut c = CommPart::zero(self.n);
        for (row, orb) in self.rows.iter().zip(&orbits.orbits) {
            for (&r, st) in row.iter().zip(orb) {
                c.add_signed(*st, r)?;
            }
        }
        Ok(c)
    }

    pub fn row_sums(&self) -> Result<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().try_fold(0i64, |a, &b| error::add(a, b)))
            .collect()
    }
}

fn check_coprime_to_six(n: usize) -> Result<()> {
    if n < 5 || n.gcd(&6) != 1 {
        return Err(NilError::constraint(format!(
            "order-n construction needs n ≥ 5 with gcd(n, 6) = 1, got {n}"
        )));
    }
    Ok(())
}

/// The canonical solution of the compatibility rows: `r_{i,1} = −m_i`.
pub fn default_residues(n: usize) -> Result<Residues> {
    check_coprime_to_six(n)?;
    let dp = delta_n_pow_n(n)?;
    let mut res = Residues::zero(&dp.orbits);
    for (row, &m) in res.rows.iter_mut().zip(&dp.m) {
        row[0] = error::neg(m)?;
    }
    Ok(res)
}

/// Whether every row sum equals `−m_i`.
pub fn compatibility_holds(residues: &Residues) -> Result<bool> {
    check_coprime_to_six(residues.n)?;
    let dp = delta_n_pow_n(residues.n)?;
    residues.check_shape(&dp.orbits)?;
    Ok(residues
        .row_sums()?
        .iter()
        .zip(&dp.m)
        .all(|(&s, &m)| Some(s) == m.checked_neg()))
}

/// `θ δ_n` with `θ = ∏ b_{i,j}^{r_{i,j}}`.
pub fn build_order_n(residues: &Residues) -> Result<NilElement> {
    let n = residues.n;
    check_coprime_to_six(n)?;
    let orbits = orbit_partition(n)?;
    let theta = NilElement::from_pure(PureElement::central(residues.theta(&orbits)?));
    theta.mul(&delta(0, n, n)?)
}

/// Product of order-`n_i` blocks on consecutive strand intervals.
pub fn build_cycle_type(n: usize, parts: &[usize]) -> Result<NilElement> {
    let mut acc = NilElement::identity(n);
    let mut offset = 0;
    for &p in parts {
        if p == 1 {
            continue;
        }
        check_coprime_to_six(p)?;
        if offset + p > n {
            return Err(NilError::constraint(format!(
                "parts {parts:?} do not fit in n = {n}"
            )));
        }
        let block = build_order_n(&default_residues(p)?)?;
        acc = acc.mul(&block.shift_embed(offset, n)?)?;
        offset += p;
    }
    Ok(acc)
}

/// All `τ > 1` such that `B_n/Γ₃(P_n)` has an element of order `τ`.
pub fn torsion_spectrum(n: usize) -> BTreeSet<u64> {
    let parts: Vec<usize> = (5..=n).filter(|p| p.gcd(&6) == 1).collect();
    let mut out = BTreeSet::new();
    fn walk(parts: &[usize], from: usize, room: usize, l: u64, out: &mut BTreeSet<u64>) {
        if l > 1 {
            out.insert(l);
        }
        for idx in from..parts.len() {
            let p = parts[idx];
            if p <= room {
                walk(parts, idx, room - p, l.lcm(&(p as u64)), out);
            }
        }
    }
    walk(&parts, 0, n, 1, &mut out);
    out
}

/// Outcome of [`conjugacy_decide`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decision {
    pub conjugate: bool,
    /// False for `n < 5`, where the cycle-type criterion is not proven.
    pub in_proven_range: bool,
}

fn require_finite(x: &NilElement) -> Result<()> {
    match x.order()? {
        Order::Finite(_) => Ok(()),
        Order::Infinite => Err(NilError::InfiniteOrder),
    }
}

/// Finite-order elements are conjugate iff their permutations have the
/// same cycle type.
pub fn conjugacy_decide(a: &NilElement, b: &NilElement) -> Result<Decision> {
    if a.n() != b.n() {
        return Err(NilError::StrandMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    require_finite(a)?;
    require_finite(b)?;
    let n = a.n();
    let ta = padded_cycle_type(&a.perm().cycle_type(), n);
    let tb = padded_cycle_type(&b.perm().cycle_type(), n);
    Ok(Decision {
        conjugate: ta == tb,
        in_proven_range: n >= 5,
    })
}

/// `ρ` with `ρ·π_a·ρ⁻¹ = π_b`: the `t`-th `b`-cycle of each length goes to
/// the `t`-th `a`-cycle of that length, both walked from their minima.
pub fn aligning_permutation(pa: &Permutation, pb: &Permutation) -> Option<Permutation> {
    let n = pa.n();
    let mut ca = pa.cycles();
    let mut cb = pb.cycles();
    ca.sort_by_key(|c| (c.len(), c[0]));
    cb.sort_by_key(|c| (c.len(), c[0]));
    if ca.len() != cb.len() {
        return None;
    }
    let mut img = vec![0usize; n];
    for (x, y) in cb.iter().zip(&ca) {
        if x.len() != y.len() {
            return None;
        }
        for (&u, &v) in x.iter().zip(y) {
            img[u - 1] = v;
        }
    }
    Permutation::from_images(&img).ok()
}

/// A `g` with `g a g⁻¹ = b`, checked before it is returned.
pub fn conjugacy_witness(a: &NilElement, b: &NilElement) -> Result<Option<NilElement>> {
    if !conjugacy_decide(a, b)?.conjugate {
        return Err(NilError::constraint(
            "cycle types differ, no conjugator exists",
        ));
    }
    let n = a.n();
    let rho = match aligning_permutation(a.perm(), b.perm()) {
        Some(r) => r,
        None => return Ok(None),
    };
    let lift = NilElement::collect(&tits_lift(&rho))?;
    let a1 = NilElement::conj(&lift, a)?;
    if a1.perm() != b.perm() {
        return Ok(None);
    }

    // conjugation by b⁻¹ (equivalently by s(π_b)⁻¹) on each graded piece
    let binv = b.perm().inverse();
    let chi1 = pair_action(&binv);
    let chi2 = triple_action(&binv);

    // level 1: χ(h) − h = e_b − e_a
    let target: Vec<i64> = b
        .pure()
        .as_slice()
        .iter()
        .zip(a1.pure().as_slice())
        .map(|(&y, &x)| error::add(y, error::neg(x)?))
        .collect::<Result<_>>()?;
    let h = match chi1.solve_difference(&target)? {
        Some(v) => NilElement::from_pure(PureElement {
            pure: PurePart::from_vec(n, v),
            comm: CommPart::zero(n),
        }),
        None => return Ok(None),
    };
    let a2 = NilElement::conj(&h, &a1)?;
    if a2.pure() != b.pure() {
        return Ok(None);
    }

    // level 2: χ(Ω) − Ω = c_b − c_a
    let target: Vec<i64> = b
        .comm()
        .as_slice()
        .iter()
        .zip(a2.comm().as_slice())
        .map(|(&y, &x)| error::add(y, error::neg(x)?))
        .collect::<Result<_>>()?;
    let omega = match chi2.solve_difference(&target)? {
        Some(v) => NilElement::from_pure(PureElement::central(CommPart::from_vec(n, v))),
        None => return Ok(None),
    };

    let g = omega.mul(&h)?.mul(&lift)?;
    if NilElement::conj(&g, a)? == *b {
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Triple;

    #[test]
    fn delta_small() {
        let d = delta(0, 3, 3).unwrap();
        let w = BraidWord::from_pairs(3, &[(2, 1), (1, -1)]).unwrap();
        assert_eq!(d, NilElement::collect(&w).unwrap());
        assert!(delta(0, 4, 5).is_err());
        assert!(delta(2, 5, 6).is_err());
    }

    #[test]
    fn delta_powers() {
        let d3 = delta_n_pow_n(3).unwrap();
        assert_eq!(d3.m, vec![-1]);
        assert_eq!(d3.comm.get(Triple(1, 2, 3)), -1);
        let d5 = delta_n_pow_n(5).unwrap();
        assert_eq!(d5.m, vec![0, -1]);
        assert!(delta_n_pow_n(6).is_err());
    }

    #[test]
    fn b1_delta5_residues() {
        let orbits = orbit_partition(5).unwrap();
        let mut r = Residues::zero(&orbits);
        r.rows[1][0] = 1;
        assert_eq!(r, default_residues(5).unwrap());
        let e = build_order_n(&r).unwrap();
        assert_eq!(e.order().unwrap(), Order::Finite(5));
        assert!(compatibility_holds(&r).unwrap());
        let zero = Residues::zero(&orbits);
        assert!(!compatibility_holds(&zero).unwrap());
        assert_eq!(
            build_order_n(&zero).unwrap().order().unwrap(),
            Order::Infinite
        );
    }

    #[test]
    fn spectrum() {
        assert!(torsion_spectrum(4).is_empty());
        assert_eq!(torsion_spectrum(5).into_iter().collect::<Vec<_>>(), vec![5]);
        assert_eq!(
            torsion_spectrum(12).into_iter().collect::<Vec<_>>(),
            vec![5, 7, 11, 35]
        );
    }

    #[test]
    fn alignment() {
        let pa = Permutation::from_images(&[2, 3, 4, 5, 1, 6]).unwrap();
        let pb = Permutation::from_images(&[1, 3, 4, 5, 6, 2]).unwrap();
        let rho = aligning_permutation(&pa, &pb).unwrap();
        let lhs = rho.then(&pa).unwrap().then(&rho.inverse()).unwrap();
        assert_eq!(lhs, pb);
    }

    #[test]
    fn witness_for_identity_pair() {
        let a = build_order_n(&default_residues(5).unwrap()).unwrap();
        let g = conjugacy_witness(&a, &a).unwrap().unwrap();
        assert!(g.is_identity());
    }
}
