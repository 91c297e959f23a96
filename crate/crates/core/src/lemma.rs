//! The polynomials Q^{n,m,k} with `n + 2k + 3m = d` inside the odd slice of
//! degree `2d + 9`.

use crate::diagrams::{reduced_y, SliceSpace};
use crate::error::{Error, Result};
use crate::exact::{rank, BigRational, QMatrix};
use crate::poly::{
    lemma_summand_in, q_in, q_poly, s4_group, symmetrize, Character, Poly, Substitution, VarSet,
};

/// Degree in legs of the Q-family with parameter `d`.
pub fn lemma_legs(d: u32) -> u32 {
    2 * d + 9
}

/// All `(n, m, k)` with `n + 2k + 3m = d`, sorted.
pub fn lemma_triples(d: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 0..=d / 3 {
        for k in 0..=(d - 3 * m) / 2 {
            out.push((d - 3 * m - 2 * k, m, k));
        }
    }
    out.sort_unstable();
    out
}

/// Q^{n,m,k} in ℚ[y1,y2,y3], built directly on `(y1, y2, y3, −y1−y2−y3)`.
pub fn q_reduced(n: u32, m: u32, k: u32) -> Poly {
    q_in(&reduced_y(), n, m, k)
}

/// Variables `(r, u, v, s)` with `y1 = u+s, y2 = v+s, y3 = s, y4 = r+s`.
fn ruvs() -> VarSet {
    VarSet::new(&["r", "u", "v", "s"])
}

fn ruvs_images() -> [Poly; 4] {
    let v = Poly::vars_of(&ruvs());
    let (r, u, w, s) = (&v[0], &v[1], &v[2], &v[3]);
    [u + s, w + s, s.clone(), r + s]
}

/// Whether `g`, written in `(r, u, v, s)`, lies in ℚ[u, v, (u−r)(v−r)].
///
/// `w = (u−r)(v−r)` is monic of degree 2 in `r`, so `g` has a unique
/// expansion `Σ a_j w^j` with each `a_j` of degree ≤ 1 in `r`; membership
/// means no `a_j` involves `r`. The `a_j` are the successive remainders of
/// division by `w`, whose leading monomial is `r²`.
fn in_uvw(g: &Poly) -> Result<bool> {
    if g.terms().any(|(m, _)| m.exps()[3] > 0) {
        return Ok(false);
    }
    let v = Poly::vars_of(g.vars());
    let w = &(&v[1] - &v[0]) * &(&v[2] - &v[0]);
    let mut g = g.clone();
    while !g.is_zero() {
        let (quot, rem) = g.div_rem(&w)?;
        if rem.terms().any(|(m, _)| m.exps()[0] > 0) {
            return Ok(false);
        }
        g = quot;
    }
    Ok(true)
}

/// Whether a polynomial in y1..y4 lies in ℚ[y1−y3, y2−y3, (y1−y4)(y2−y4)].
pub fn in_lemma_subring(p: &Poly) -> Result<bool> {
    let images = ruvs_images().into_iter().map(Some).collect();
    let g = Substitution::new(&VarSet::y(), &ruvs(), images)?.apply(p)?;
    in_uvw(&g)
}

/// `12 P₂ⁿ P₃^{2m+3} P₄ᵏ` lies in ℚ[y1−y3, y2−y3, (y1−y4)(y2−y4)].
pub fn summand_in_lemma_subring(n: u32, m: u32, k: u32) -> Result<bool> {
    in_uvw(&lemma_summand_in(&ruvs_images(), n, m, k))
}

/// The skew symmetrization of `12 P₂ⁿ P₃^{2m+3} P₄ᵏ` is Q^{n,m,k}.
pub fn symmetrizer_matches(n: u32, m: u32, k: u32) -> Result<bool> {
    let y = Poly::vars_of(&VarSet::y());
    let summand = lemma_summand_in(
        &[y[0].clone(), y[1].clone(), y[2].clone(), y[3].clone()],
        n,
        m,
        k,
    );
    Ok(symmetrize(&summand, &s4_group(Character::Sign))? == q_poly(n, m, k))
}

/// Linear algebra of the Q-family at one value of `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaRank {
    pub d: u32,
    pub triples: Vec<(u32, u32, u32)>,
    /// How many Q^{n,m,k} lie in the ambient slice.
    pub in_slice: usize,
    pub rank: usize,
    pub ambient_dim: usize,
}

/// Coordinates of every Q^{n,m,k} in the ambient odd slice of degree `2d+9`, and their rank.
pub fn lemma_rank(d: u32, ambient: &SliceSpace) -> Result<LemmaRank> {
    if ambient.legs != lemma_legs(d) {
        return Err(Error::Parity(format!(
            "slice of degree {} given for d = {d}",
            ambient.legs
        )));
    }
    let triples = lemma_triples(d);
    let coords: Vec<Vec<BigRational>> = triples
        .iter()
        .filter_map(|&(n, m, k)| ambient.coordinates_of(&q_reduced(n, m, k)))
        .collect();
    let in_slice = coords.len();
    let rank = if coords.is_empty() {
        0
    } else {
        rank(&QMatrix::from_rows(ambient.dim, coords)?)
    };
    Ok(LemmaRank {
        d,
        triples,
        in_slice,
        rank,
        ambient_dim: ambient.dim,
    })
}
