use std::collections::HashMap;

use num_traits::Zero;

use super::{Monomial, Poly, VarSet};
use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::BigRational;

/// A ring homomorphism sending each source variable to a polynomial over a
/// common target variable set. Powers of the images are cached, so applying
/// one substitution to many polynomials is cheap.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: VarSet,
    target: VarSet,
    images: Vec<Option<Poly>>,
    powers: Vec<Vec<Poly>>,
}

impl Substitution {
    pub fn new(source: &VarSet, target: &VarSet, images: Vec<Option<Poly>>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::Arity {
                expected: source.len(),
                got: images.len(),
            });
        }
        if images.iter().flatten().any(|p| p.vars() != target) {
            return Err(Error::MixedTargets);
        }
        Ok(Substitution {
            source: source.clone(),
            target: target.clone(),
            powers: images
                .iter()
                .map(|img| match img {
                    Some(_) => vec![Poly::one(target)],
                    None => Vec::new(),
                })
                .collect(),
            images,
        })
    }

    /// Builds from `(variable name, image)` pairs; the target set is taken from the images.
    pub fn from_named(source: &VarSet, map: &[(&str, Poly)]) -> Result<Self> {
        let target = map.first().ok_or(Error::MixedTargets)?.1.vars().clone();
        let mut images = vec![None; source.len()];
        for (name, img) in map {
            let i = source
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            images[i] = Some(img.clone());
        }
        Self::new(source, &target, images)
    }

    pub fn target(&self) -> &VarSet {
        &self.target
    }

    fn power(&mut self, i: usize, e: u32) -> &Poly {
        let e = e as usize;
        while self.powers[i].len() <= e {
            let next = {
                let img = self.images[i].as_ref().unwrap();
                self.powers[i].last().unwrap().mul_unchecked(img)
            };
            self.powers[i].push(next);
        }
        &self.powers[i][e]
    }

    pub fn apply(&mut self, p: &Poly) -> Result<Poly> {
        touch(Op::Substitute);
        if p.vars() != &self.source {
            return Err(Error::VarSetMismatch {
                left: format!("{:?}", p.vars()),
                right: format!("{:?}", self.source),
            });
        }
        for (m, _) in p.terms() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 && self.images[i].is_none() {
                    return Err(Error::UnmappedVariable(self.source.names()[i].clone()));
                }
            }
        }
        // Monomial images go last so that each step multiplies by a single term.
        let order: Vec<usize> = {
            let mut idx: Vec<usize> = (0..self.source.len()).collect();
            idx.sort_by_key(|&i| {
                self.images[i]
                    .as_ref()
                    .map_or(0, |img| usize::MAX - img.len())
            });
            idx
        };
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in p.terms() {
            let mut t = Poly::constant(&self.target, c.clone());
            for &i in &order {
                let e = m.exps()[i];
                if e > 0 {
                    let pw = self.power(i, e).clone();
                    t = t.mul_unchecked(&pw);
                }
            }
            for (tm, tc) in t.terms {
                acc.entry(tm).and_modify(|x| *x += &tc).or_insert(tc);
            }
        }
        Ok(Poly {
            vars: self.target.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }
}

/// Substitutes each named variable of `p` by its image.
pub fn substitute(p: &Poly, map: &[(&str, Poly)]) -> Result<Poly> {
    Substitution::from_named(p.vars(), map)?.apply(p)
}
