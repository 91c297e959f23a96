//! The concrete polynomials used by the presentations: elementary symmetric
//! polynomials, the discriminant, and the families P₂, P₃, P₄, Q^{n,m,k}.

use super::{degree_slice_monomials, Poly, Ring, VarSet};
use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::q;

/// The `i`-th elementary symmetric polynomial in all variables of `vars`.
pub fn elementary_symmetric(i: usize, vars: &VarSet) -> Result<Poly> {
    touch(Op::ElementarySymmetric);
    if i == 0 || i > vars.len() {
        return Err(Error::OutOfRange {
            index: i,
            max: vars.len(),
        });
    }
    let terms = degree_slice_monomials(vars, i as u32)
        .into_iter()
        .filter(|m| m.exps().iter().all(|&e| e <= 1))
        .map(|m| (m, q(1)));
    Ok(Poly::from_terms(vars, terms))
}

/// `Π_{i<j} (v_i − v_j)` over the four variables of `vars`.
pub fn discriminant(vars: &VarSet) -> Result<Poly> {
    touch(Op::Discriminant);
    if vars.len() != 4 {
        return Err(Error::Arity {
            expected: 4,
            got: vars.len(),
        });
    }
    let v = Poly::vars_of(vars);
    let mut out = Poly::one(vars);
    for i in 0..4 {
        for j in i + 1..4 {
            out = &out * &(&v[i] - &v[j]);
        }
    }
    Ok(out)
}

/// `(a−b)² + (b−c)² + (c−a)²`
pub fn p2_in<R: Ring>(a: &R, b: &R, c: &R) -> R {
    let ab = a.sub(b);
    let bc = b.sub(c);
    let ca = c.sub(a);
    ab.mul(&ab).add(&bc.mul(&bc)).add(&ca.mul(&ca))
}

/// `(a−b)(b−c)(c−a)`
pub fn p3_in<R: Ring>(a: &R, b: &R, c: &R) -> R {
    a.sub(b).mul(&b.sub(c)).mul(&c.sub(a))
}

/// `(a−c)(b−c)(a−d)(b−d)`
pub fn p4_in<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> R {
    a.sub(c).mul(&b.sub(c)).mul(&a.sub(d)).mul(&b.sub(d))
}

fn arity(args: &[Poly], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: args.len(),
        });
    }
    for w in args.windows(2) {
        if w[0].vars() != w[1].vars() {
            return Err(Error::VarSetMismatch {
                left: format!("{:?}", w[0].vars()),
                right: format!("{:?}", w[1].vars()),
            });
        }
    }
    Ok(())
}

/// P₂ of three ordered arguments.
pub fn p2(args: &[Poly]) -> Result<Poly> {
    touch(Op::P2);
    arity(args, 3)?;
    Ok(p2_in(&args[0], &args[1], &args[2]))
}

/// P₃ of three ordered arguments.
pub fn p3(args: &[Poly]) -> Result<Poly> {
    touch(Op::P3);
    arity(args, 3)?;
    Ok(p3_in(&args[0], &args[1], &args[2]))
}

/// P₄ of four ordered arguments.
pub fn p4(args: &[Poly]) -> Result<Poly> {
    touch(Op::P4);
    arity(args, 4)?;
    Ok(p4_in(&args[0], &args[1], &args[2], &args[3]))
}

/// Q^{n,m,k} evaluated on `y = (y1, y2, y3, y4)` in any ring:
///
/// ```text
/// ( P₂(y1,y2,y3)ⁿ P₃(y1,y2,y3)^{2m+3} + P₂(y4,y3,y2)ⁿ P₃(y4,y3,y2)^{2m+3}
///   + P₂(y3,y4,y1)ⁿ P₃(y3,y4,y1)^{2m+3} + P₂(y2,y1,y4)ⁿ P₃(y2,y1,y4)^{2m+3} )
/// × ( P₄(y1,y2,y3,y4)ᵏ + P₄(y1,y3,y2,y4)ᵏ + P₄(y1,y4,y2,y3)ᵏ )
/// ```
pub fn q_in<R: Ring>(y: &[R; 4], n: u32, m: u32, k: u32) -> R {
    let [y1, y2, y3, y4] = y;
    let odd = 2 * m + 3;
    let block = |a: &R, b: &R, c: &R| p2_in(a, b, c).pow(n).mul(&p3_in(a, b, c).pow(odd));
    let first = block(y1, y2, y3)
        .add(&block(y4, y3, y2))
        .add(&block(y3, y4, y1))
        .add(&block(y2, y1, y4));
    let second = p4_in(y1, y2, y3, y4)
        .pow(k)
        .add(&p4_in(y1, y3, y2, y4).pow(k))
        .add(&p4_in(y1, y4, y2, y3).pow(k));
    first.mul(&second)
}

/// `12 · P₂(y1,y2,y3)ⁿ · P₃(y1,y2,y3)^{2m+3} · P₄(y1,y2,y3,y4)ᵏ` in any ring.
pub fn lemma_summand_in<R: Ring>(y: &[R; 4], n: u32, m: u32, k: u32) -> R {
    let [y1, y2, y3, y4] = y;
    p2_in(y1, y2, y3)
        .pow(n)
        .mul(&p3_in(y1, y2, y3).pow(2 * m + 3))
        .mul(&p4_in(y1, y2, y3, y4).pow(k))
        .scale(&q(12))
}

/// Q^{n,m,k} as a polynomial in y1..y4; homogeneous of degree 2n+6m+4k+9.
pub fn q_poly(n: u32, m: u32, k: u32) -> Poly {
    touch(Op::QPoly);
    let y = Poly::vars_of(&VarSet::y());
    q_in(
        &[y[0].clone(), y[1].clone(), y[2].clone(), y[3].clone()],
        n,
        m,
        k,
    )
}
