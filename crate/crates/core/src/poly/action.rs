use std::collections::BTreeMap;

use super::{Monomial, Poly};
use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::{q, BigRational};

/// Which one-dimensional character of the symmetric group weights the action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Character {
    Trivial,
    Sign,
}

impl Character {
    /// Even degrees carry the plain action, odd degrees the signed one.
    pub fn for_degree(d: u32) -> Self {
        if d.is_multiple_of(2) {
            Character::Trivial
        } else {
            Character::Sign
        }
    }
}

/// A permutation of variable indices with a ±1 weight.
///
/// Acting on `f` replaces each variable `v_i` by `v_{perm[i]}` and multiplies
/// by `character`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermAction {
    perm: Vec<usize>,
    character: i8,
}

impl SignedPermAction {
    pub fn new(perm: Vec<usize>, character: i8) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::OutOfRange {
                    index: p,
                    max: perm.len().saturating_sub(1),
                });
            }
        }
        if character != 1 && character != -1 {
            return Err(Error::OutOfRange {
                index: character.unsigned_abs() as usize,
                max: 1,
            });
        }
        Ok(SignedPermAction { perm, character })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermAction {
            perm: (0..n).collect(),
            character: 1,
        }
    }

    /// Swap of positions `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize, character: i8) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        Self::new(perm, character)
    }

    /// The cycle `cycle[0] → cycle[1] → … → cycle[0]` (0-based).
    pub fn cycle(n: usize, cycle: &[usize], character: i8) -> Result<Self> {
        let mut perm: Vec<usize> = (0..n).collect();
        for w in 0..cycle.len() {
            perm[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        Self::new(perm, character)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn character(&self) -> i8 {
        self.character
    }
}

/// Sign of a permutation given as an image vector.
pub fn sign_of(perm: &[usize]) -> i8 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All 24 elements of S4 in lexicographic order of their image vectors.
pub fn s4_group(character: Character) -> Vec<SignedPermAction> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let perm = vec![a, b, c, d];
                    let mut seen = [false; 4];
                    if !perm.iter().all(|&p| !std::mem::replace(&mut seen[p], true)) {
                        continue;
                    }
                    let ch = match character {
                        Character::Trivial => 1,
                        Character::Sign => sign_of(&perm),
                    };
                    out.push(SignedPermAction {
                        perm,
                        character: ch,
                    });
                }
            }
        }
    }
    out
}

/// Applies a signed permutation to `p`.
pub fn act(a: &SignedPermAction, p: &Poly) -> Result<Poly> {
    touch(Op::Act);
    if a.perm.len() != p.vars().len() {
        return Err(Error::Arity {
            expected: p.vars().len(),
            got: a.perm.len(),
        });
    }
    let ch = q(a.character as i64);
    let terms: BTreeMap<Monomial, BigRational> = p
        .terms()
        .map(|(m, c)| {
            let mut e = vec![0; m.exps().len()];
            for (i, &x) in m.exps().iter().enumerate() {
                e[a.perm[i]] += x;
            }
            (Monomial::new(e), c * &ch)
        })
        .collect();
    Ok(Poly {
        vars: p.vars().clone(),
        terms,
    })
}

/// Averaging projector `(1/|G|) Σ_g act(g, p)` over the supplied group.
///
/// `p` must be homogeneous: the character is chosen per degree by callers.
pub fn symmetrize(p: &Poly, group: &[SignedPermAction]) -> Result<Poly> {
    touch(Op::Symmetrize);
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut acc = Poly::zero(p.vars());
    for g in group {
        for (m, c) in act(g, p)?.terms {
            acc.add_term(m, c);
        }
    }
    Ok(acc.scale(&BigRational::new(1.into(), (group.len() as i64).into())))
}
