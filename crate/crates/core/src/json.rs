//! JSON forms of elements, words and residue matrices.
//!
//! Objects are written with their keys in sorted order and sparse entries in
//! lexicographic order, so equal values always serialize to equal bytes.

use serde::{Deserialize, Serialize};

use crate::element::NilElement;
use crate::error::{NilError, Result};
use crate::lattice::{CommPart, Pair, PurePart, Triple};
use crate::perm::Permutation;
use crate::torsion::Residues;
use crate::word::BraidWord;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    #[serde(default)]
    comm: Vec<[i64; 4]>,
    n: usize,
    #[serde(default)]
    perm: Option<Vec<usize>>,
    #[serde(default)]
    pure: Vec<[i64; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WordJson {
    n: usize,
    word: Vec<(usize, i64)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResiduesJson {
    n: usize,
    residues: Vec<Vec<i64>>,
}

fn json_err(e: serde_json::Error) -> NilError {
    NilError::Json(e.to_string())
}

fn index(v: i64, what: &'static str, n: usize) -> Result<usize> {
    usize::try_from(v).map_err(|_| NilError::IndexOutOfRange { what, index: 0, n })
}

impl NilElement {
    pub fn to_json(&self) -> String {
        let dto = ElementJson {
            comm: self
                .comm()
                .entries()
                .map(|(t, c)| [t.0 as i64, t.1 as i64, t.2 as i64, c])
                .collect(),
            n: self.n(),
            perm: Some(self.perm().images()),
            pure: self
                .pure()
                .entries()
                .map(|(p, e)| [p.0 as i64, p.1 as i64, e])
                .collect(),
        };
        serde_json::to_string(&dto).expect("element serializes")
    }

    /// Parses an element; `perm` defaults to the identity, pairs may be
    /// given in either order, and an unsorted triple contributes the sign of
    /// its sorting permutation. Repeated keys are rejected.
    pub fn from_json(text: &str) -> Result<NilElement> {
        let dto: ElementJson = serde_json::from_str(text).map_err(json_err)?;
        let n = dto.n;
        if n == 0 {
            return Err(NilError::constraint("n must be at least 1"));
        }
        let perm = match dto.perm {
            Some(p) if p.len() == n => Permutation::from_images(&p)?,
            Some(_) => return Err(NilError::InvalidPermutation(n)),
            None => Permutation::identity(n),
        };
        let mut pure = PurePart::zero(n);
        let mut seen = std::collections::BTreeSet::new();
        for [i, j, e] in dto.pure {
            let p = Pair::new(index(i, "pair", n)?, index(j, "pair", n)?, n)?;
            if !seen.insert(p) {
                return Err(NilError::constraint(format!("{p} listed twice")));
            }
            pure.set(p, e);
        }
        let mut comm = CommPart::zero(n);
        let mut seen = std::collections::BTreeSet::new();
        for [i, j, k, c] in dto.comm {
            let st = Triple::sorted(
                index(i, "triple", n)?,
                index(j, "triple", n)?,
                index(k, "triple", n)?,
                n,
            )?;
            if !seen.insert(st.triple) {
                return Err(NilError::constraint(format!("{} listed twice", st.triple)));
            }
            comm.add_signed(st, c)?;
        }
        NilElement::from_parts(perm, pure, comm)
    }
}

impl BraidWord {
    pub fn to_json(&self) -> String {
        let dto = WordJson {
            n: self.n(),
            word: self
                .letters()
                .iter()
                .map(|l| (l.k, l.sign.to_i64()))
                .collect(),
        };
        serde_json::to_string(&dto).expect("word serializes")
    }

    pub fn from_json(text: &str) -> Result<BraidWord> {
        let dto: WordJson = serde_json::from_str(text).map_err(json_err)?;
        BraidWord::from_pairs(dto.n, &dto.word)
    }
}

impl Residues {
    pub fn to_json(&self) -> String {
        let dto = ResiduesJson {
            n: self.n,
            residues: self.rows.clone(),
        };
        serde_json::to_string(&dto).expect("residues serialize")
    }

    pub fn from_json(text: &str) -> Result<Residues> {
        let dto: ResiduesJson = serde_json::from_str(text).map_err(json_err)?;
        Ok(Residues {
            n: dto.n,
            rows: dto.residues,
        })
    }
}
