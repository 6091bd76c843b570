//! Relation suites checked by collecting both sides as braid words.
//!
//! Every generator is expanded into Artin letters before collection, so a
//! passing relation is a statement about the engine's normal forms and not
//! about the tables used to build them. The case tables below are written
//! out independently of the conjugation code in [`crate::action`].

use serde_json::{json, Value};

use crate::element::NilElement;
use crate::error::{NilError, Result};
use crate::lattice::{CommPart, Pair, PurePart, Triple};
use crate::perm::Permutation;
use crate::word::{BraidWord, Letter};

#[derive(Clone, Debug)]
pub struct Relation {
    pub id: String,
    pub left: BraidWord,
    pub right: BraidWord,
}

/// Canonical forms of both sides of one relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationOutcome {
    pub id: String,
    pub left: NilElement,
    pub right: NilElement,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub suite: String,
    pub total: usize,
    pub relations: Vec<RelationOutcome>,
    pub failures: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let parse = |e: &NilElement| -> Value {
            serde_json::from_str(&e.to_json()).expect("element JSON is valid")
        };
        json!({
            "failures": self.failures.iter().map(|f| f.id.clone()).collect::<Vec<_>>(),
            "passed": self.passed(),
            "relations": self.relations.iter().map(|f| json!({
                "holds": f.holds,
                "id": f.id,
                "left": parse(&f.left),
                "right": parse(&f.right),
            })).collect::<Vec<_>>(),
            "suite": self.suite,
            "total": self.total,
        })
    }
}

pub fn check(suite: &str, relations: &[Relation]) -> Result<RelationReport> {
    let mut outcomes = Vec::with_capacity(relations.len());
    for r in relations {
        let left = NilElement::collect(&r.left)?;
        let right = NilElement::collect(&r.right)?;
        outcomes.push(RelationOutcome {
            id: r.id.clone(),
            holds: left == right,
            left,
            right,
        });
    }
    Ok(RelationReport {
        suite: suite.to_string(),
        total: relations.len(),
        failures: outcomes.iter().filter(|o| !o.holds).cloned().collect(),
        relations: outcomes,
    })
}

fn w_a(p: Pair, n: usize) -> Result<BraidWord> {
    BraidWord::pure_generator(p, n)
}

fn w_alpha(t: Triple, n: usize) -> Result<BraidWord> {
    BraidWord::alpha(t, n)
}

fn w_sigma(k: usize, n: usize) -> Result<BraidWord> {
    BraidWord::new(n, vec![Letter::pos(k)])
}

fn concat(parts: &[&BraidWord]) -> Result<BraidWord> {
    let mut out = BraidWord::empty(parts[0].n());
    for p in parts {
        out = out.concat(p)?;
    }
    Ok(out)
}

fn conj_word(g: &BraidWord, x: &BraidWord) -> Result<BraidWord> {
    concat(&[g, x, &g.inverse()])
}

fn check_range(n: usize) -> Result<()> {
    if !(3..=6).contains(&n) {
        return Err(NilError::constraint(format!(
            "suites run for 3 ≤ n ≤ 6, got {n}"
        )));
    }
    Ok(())
}

/// Value of `[A_{i,j}, A_{l,m}]` for lexicographically ordered pairs, read
/// from the case table of the presentation.
fn pure_commutator_value(p: Pair, q: Pair, n: usize) -> Result<BraidWord> {
    let (i, j, l, m) = (p.0, p.1, q.0, q.1);
    let mut idx = vec![i, j, l, m];
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != 3 {
        return Ok(BraidWord::empty(n));
    }
    if j == l {
        w_alpha(Triple(i, j, m), n)
    } else if i == l {
        Ok(w_alpha(Triple(i, j, m), n)?.inverse())
    } else if j == m {
        Ok(w_alpha(Triple(i, l, m), n)?.inverse())
    } else {
        Err(NilError::constraint(format!(
            "pairs {p}, {q} are not in lexicographic order"
        )))
    }
}

/// Relations of `P_n/Γ₃(P_n)`: the `α` are central and the commutators of
/// the `A_{i,j}` follow the case table. The first group of instances ties
/// the generator words to the coordinates of the normal form.
pub fn pn_gamma3_relations(n: usize) -> Result<Vec<Relation>> {
    let pairs: Vec<Pair> = Pair::all(n).collect();
    let triples: Vec<Triple> = Triple::all(n).collect();
    let mut out = Vec::new();
    for &p in &pairs {
        let e = NilElement::a_gen(n, p.0, p.1, 1)?;
        out.push(Relation {
            id: format!("coord {p}"),
            left: w_a(p, n)?,
            right: e.to_word()?,
        });
    }
    for &t in &triples {
        let e = NilElement::alpha_gen(n, t.0, t.1, t.2, 1)?;
        out.push(Relation {
            id: format!("coord {t}"),
            left: w_alpha(t, n)?,
            right: e.to_word()?,
        });
    }
    for (x, &t) in triples.iter().enumerate() {
        for &u in &triples[x + 1..] {
            out.push(Relation {
                id: format!("[{t},{u}] = 1"),
                left: BraidWord::commutator(&w_alpha(t, n)?, &w_alpha(u, n)?)?,
                right: BraidWord::empty(n),
            });
        }
        for &p in &pairs {
            out.push(Relation {
                id: format!("[{t},{p}] = 1"),
                left: BraidWord::commutator(&w_alpha(t, n)?, &w_a(p, n)?)?,
                right: BraidWord::empty(n),
            });
        }
    }
    for (x, &p) in pairs.iter().enumerate() {
        for &q in &pairs[x + 1..] {
            out.push(Relation {
                id: format!("[{p},{q}]"),
                left: BraidWord::commutator(&w_a(p, n)?, &w_a(q, n)?)?,
                right: pure_commutator_value(p, q, n)?,
            });
        }
    }
    Ok(out)
}

fn transposition(k: usize, i: usize) -> usize {
    if i == k {
        k + 1
    } else if i == k + 1 {
        k
    } else {
        i
    }
}

/// `σ_k α_{r,s,t} σ_k⁻¹` from the action table on the triple basis.
fn alpha_action_value(t: Triple, k: usize, n: usize) -> Result<BraidWord> {
    let (r, s, u) = (
        transposition(k, t.0),
        transposition(k, t.1),
        transposition(k, t.2),
    );
    if r < s && s < u {
        w_alpha(Triple(r, s, u), n)
    } else if r > s {
        Ok(w_alpha(Triple(s, r, u), n)?.inverse())
    } else {
        Ok(w_alpha(Triple(r, u, s), n)?.inverse())
    }
}

/// `σ_k A_{i,j} σ_k⁻¹` from the action table on the pure generators.
fn a_action_value(p: Pair, k: usize, n: usize) -> Result<BraidWord> {
    let (i, j) = (p.0, p.1);
    if j == k + 1 && i < k {
        w_a(Pair(i, j - 1), n)?.concat(&w_alpha(Triple(i, j - 1, j), n)?.inverse())
    } else if i == k + 1 {
        w_a(Pair(i - 1, j), n)?.concat(&w_alpha(Triple(i - 1, i, j), n)?.inverse())
    } else {
        let (a, b) = (transposition(k, i), transposition(k, j));
        w_a(Pair(a.min(b), a.max(b)), n)
    }
}

/// Braid relations and both action tables, on top of the pure relations.
pub fn bn_gamma3_relations(n: usize) -> Result<Vec<Relation>> {
    let mut out = pn_gamma3_relations(n)?;
    for i in 1..n {
        for j in i + 2..n {
            out.push(Relation {
                id: format!("s{i} s{j} = s{j} s{i}"),
                left: concat(&[&w_sigma(i, n)?, &w_sigma(j, n)?])?,
                right: concat(&[&w_sigma(j, n)?, &w_sigma(i, n)?])?,
            });
        }
    }
    for i in 1..n - 1 {
        let (a, b) = (w_sigma(i, n)?, w_sigma(i + 1, n)?);
        out.push(Relation {
            id: format!("s{} s{i} s{} = s{i} s{} s{i}", i + 1, i + 1, i + 1),
            left: concat(&[&b, &a, &b])?,
            right: concat(&[&a, &b, &a])?,
        });
    }
    for k in 1..n {
        let s = w_sigma(k, n)?;
        for t in Triple::all(n) {
            out.push(Relation {
                id: format!("s{k} {t} S{k}"),
                left: conj_word(&s, &w_alpha(t, n)?)?,
                right: alpha_action_value(t, k, n)?,
            });
        }
        for p in Pair::all(n) {
            out.push(Relation {
                id: format!("s{k} {p} S{k}"),
                left: conj_word(&s, &w_a(p, n)?)?,
                right: a_action_value(p, k, n)?,
            });
        }
    }
    Ok(out)
}

pub fn verify_pn_gamma3(n: usize) -> Result<RelationReport> {
    check_range(n)?;
    check("pn3", &pn_gamma3_relations(n)?)
}

pub fn verify_bn_gamma3(n: usize) -> Result<RelationReport> {
    check_range(n)?;
    check("bn3", &bn_gamma3_relations(n)?)
}

/// Subgroups of `B_3/Γ₃(P_3)` lying over the subgroups of `S_3`, up to
/// conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B3Subgroup {
    Trivial,
    Order2,
    Order3,
    S3,
}

impl B3Subgroup {
    pub const ALL: [B3Subgroup; 4] = [
        B3Subgroup::Trivial,
        B3Subgroup::Order2,
        B3Subgroup::Order3,
        B3Subgroup::S3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            B3Subgroup::Trivial => "trivial",
            B3Subgroup::Order2 => "order2",
            B3Subgroup::Order3 => "order3",
            B3Subgroup::S3 => "S3",
        }
    }

    pub fn parse(s: &str) -> Option<B3Subgroup> {
        B3Subgroup::ALL
            .into_iter()
            .find(|h| h.name().eq_ignore_ascii_case(s))
    }

    /// The extra generators lying over `H`, as words.
    pub fn generators(self) -> Result<Vec<BraidWord>> {
        let pairs: &[&[(usize, i64)]] = match self {
            B3Subgroup::Trivial => &[],
            B3Subgroup::Order2 => &[&[(1, 1)]],
            B3Subgroup::Order3 => &[&[(2, 1), (1, -1)]],
            B3Subgroup::S3 => &[&[(2, 1), (1, 1)], &[(1, 1)]],
        };
        pairs.iter().map(|p| BraidWord::from_pairs(3, p)).collect()
    }
}

/// Relations of the subgroup over `H` with `a = A_{1,3}`, `b = A_{2,3}`,
/// `c = A_{1,2}` and `d = [c, b]`.
pub fn b3_relations(h: B3Subgroup) -> Result<Vec<Relation>> {
    let n = 3;
    let a = w_a(Pair(1, 3), n)?;
    let b = w_a(Pair(2, 3), n)?;
    let c = w_a(Pair(1, 2), n)?;
    let d = BraidWord::commutator(&c, &b)?;
    let e = BraidWord::empty(n);
    let rel = |id: &str, left: BraidWord, right: BraidWord| Relation {
        id: id.to_string(),
        left,
        right,
    };
    let comm = BraidWord::commutator;
    let mut out = vec![
        rel("d = a[1,2,3]", d.clone(), w_alpha(Triple(1, 2, 3), n)?),
        rel("[b,a] = d", comm(&b, &a)?, d.clone()),
        rel("[c,a] = d^-1", comm(&c, &a)?, d.inverse()),
        rel("[c,b] = d", comm(&c, &b)?, d.clone()),
        rel("[d,a] = 1", comm(&d, &a)?, e.clone()),
        rel("[d,b] = 1", comm(&d, &b)?, e.clone()),
        rel("[d,c] = 1", comm(&d, &c)?, e.clone()),
    ];
    let gens = h.generators()?;
    let conj = conj_word;
    match h {
        B3Subgroup::Trivial => {}
        B3Subgroup::Order2 => {
            let al = &gens[0];
            out.push(rel("alpha^2 = c", al.pow(2), c.clone()));
            out.push(rel("alpha d alpha^-1 = d^-1", conj(al, &d)?, d.inverse()));
            out.push(rel("alpha a alpha^-1 = b", conj(al, &a)?, b.clone()));
            out.push(rel(
                "alpha b alpha^-1 = a d^-1",
                conj(al, &b)?,
                concat(&[&a, &d.inverse()])?,
            ));
            out.push(rel("alpha c alpha^-1 = c", conj(al, &c)?, c.clone()));
        }
        B3Subgroup::Order3 => {
            let al = &gens[0];
            out.push(rel("alpha^3 = d^-1", al.pow(3), d.inverse()));
            out.push(rel("alpha d alpha^-1 = d", conj(al, &d)?, d.clone()));
            out.push(rel(
                "alpha a alpha^-1 = b d",
                conj(al, &a)?,
                concat(&[&b, &d])?,
            ));
            out.push(rel(
                "alpha b alpha^-1 = c d^-1",
                conj(al, &b)?,
                concat(&[&c, &d.inverse()])?,
            ));
            out.push(rel("alpha c alpha^-1 = a", conj(al, &c)?, a.clone()));
        }
        B3Subgroup::S3 => {
            let (al, be) = (&gens[0], &gens[1]);
            out.push(rel("alpha^3 = a b c", al.pow(3), concat(&[&a, &b, &c])?));
            out.push(rel("beta^2 = c", be.pow(2), c.clone()));
            out.push(rel("alpha d alpha^-1 = d", conj(al, &d)?, d.clone()));
            out.push(rel("beta d beta^-1 = d^-1", conj(be, &d)?, d.inverse()));
            out.push(rel("alpha a alpha^-1 = b", conj(al, &a)?, b.clone()));
            out.push(rel("alpha b alpha^-1 = c", conj(al, &b)?, c.clone()));
            out.push(rel("alpha c alpha^-1 = a", conj(al, &c)?, a.clone()));
            out.push(rel("beta a beta^-1 = b", conj(be, &a)?, b.clone()));
            out.push(rel(
                "beta b beta^-1 = a d^-1",
                conj(be, &b)?,
                concat(&[&a, &d.inverse()])?,
            ));
            out.push(rel("beta c beta^-1 = c", conj(be, &c)?, c.clone()));
            out.push(rel(
                "beta alpha beta^-1 = b^-1 alpha^2",
                conj(be, al)?,
                concat(&[&b.inverse(), &al.pow(2)])?,
            ));
        }
    }
    Ok(out)
}

pub fn verify_b3_subgroup(h: B3Subgroup) -> Result<RelationReport> {
    check(&format!("b3-{}", h.name()), &b3_relations(h)?)
}

/// `(σ_1⋯σ_{n−1})^n` equals the lexicographic product of all `A_{i,j}`,
/// whose normal form has every pure exponent 1 and no commutator part.
pub fn fulltwist_relations(n: usize) -> Result<Vec<Relation>> {
    let twist = BraidWord::cyclic_word(n).pow(n as i64);
    let mut product = BraidWord::empty(n);
    let mut pure = PurePart::zero(n);
    for p in Pair::all(n) {
        product = product.concat(&w_a(p, n)?)?;
        pure.set(p, 1);
    }
    let normal = NilElement::from_parts(Permutation::identity(n), pure, CommPart::zero(n))?;
    Ok(vec![
        Relation {
            id: "full twist = product of A[i,j]".into(),
            left: twist.clone(),
            right: product,
        },
        Relation {
            id: "full twist normal form".into(),
            left: twist,
            right: normal.to_word()?,
        },
    ])
}

pub fn verify_fulltwist(n: usize) -> Result<RelationReport> {
    if n < 2 {
        return Err(NilError::constraint("full twist needs n ≥ 2"));
    }
    check("fulltwist", &fulltwist_relations(n)?)
}

/// Number of instances in the pure suite: `N + M` coordinate checks,
/// `C(M,2) + M·N` centrality checks and `C(N,2)` commutators.
pub fn pn_gamma3_count(n: usize) -> usize {
    let pn = crate::lattice::pair_count(n);
    let m = crate::lattice::triple_count(n);
    pn + m + m * m.saturating_sub(1) / 2 + m * pn + pn * pn.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_suite_n3() {
        let r = verify_pn_gamma3(3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.total, pn_gamma3_count(3));
    }

    #[test]
    fn b3_suites() {
        for h in B3Subgroup::ALL {
            let r = verify_b3_subgroup(h).unwrap();
            assert!(r.passed(), "{}: {:?}", h.name(), r.failures);
        }
    }

    #[test]
    fn table_cases() {
        let n = 5;
        let w = pure_commutator_value(Pair(1, 2), Pair(2, 5), n).unwrap();
        assert_eq!(w, w_alpha(Triple(1, 2, 5), n).unwrap());
        assert!(pure_commutator_value(Pair(1, 3), Pair(2, 4), n)
            .unwrap()
            .is_empty());
        let x = NilElement::collect(&a_action_value(Pair(1, 3), 2, n).unwrap()).unwrap();
        assert_eq!(x.pure().get(Pair(1, 2)), 1);
        assert_eq!(x.comm().get(Triple(1, 2, 3)), -1);
    }

    #[test]
    fn detects_a_wrong_relation() {
        let n = 3;
        let rel = Relation {
            id: "wrong".into(),
            left: BraidWord::commutator(&w_a(Pair(1, 2), n).unwrap(), &w_a(Pair(2, 3), n).unwrap())
                .unwrap(),
            right: w_alpha(Triple(1, 2, 3), n).unwrap().inverse(),
        };
        let r = check("t", &[rel]).unwrap();
        assert_eq!(r.failures.len(), 1);
    }
}
