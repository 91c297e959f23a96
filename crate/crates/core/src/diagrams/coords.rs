//! Changes of variables between the tetrahedron edge variables x1..x6 and the
//! face variables y1..y4.
//!
//! The x variables satisfy `x1−x2−x6 = x1−x3+x5 = x4+x5+x6 = 0`, and the y
//! variables are taken modulo `y1+y2+y3+y4`.

use std::sync::OnceLock;

use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::{frac, q};
use crate::poly::{Poly, Substitution, VarSet};

/// The y variables as linear forms in x1..x6.
pub fn y_images() -> [Poly; 4] {
    let xs = VarSet::x();
    let row = |c: [i64; 6]| Poly::linear(&xs, &c.map(q));
    [
        row([1, 0, 0, 0, -1, 1]),
        row([0, 1, 0, 1, 0, -1]),
        row([0, 0, 1, -1, 1, 0]),
        row([-1, -1, -1, 0, 0, 0]),
    ]
}

fn x_images() -> &'static [Poly; 6] {
    static IMAGES: OnceLock<[Poly; 6]> = OnceLock::new();
    IMAGES.get_or_init(|| {
        let ys = VarSet::y();
        let diff = |i: usize, j: usize| {
            let mut c = vec![q(0); 4];
            c[i] += frac(1, 4);
            c[j] -= frac(1, 4);
            Poly::linear(&ys, &c)
        };
        let x1 = diff(0, 3);
        let x2 = diff(1, 3);
        let x4 = diff(1, 2);
        let x5 = diff(2, 0);
        let x3 = &x1 + &x5;
        let x6 = &x1 - &x2;
        [x1, x2, x3, x4, x5, x6]
    })
}

/// Image of the edge variable `var` (one of `x1`..`x6`) in y1..y4.
pub fn x_from_y(var: &str) -> Result<Poly> {
    touch(Op::XFromY);
    let i = VarSet::x()
        .index_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    Ok(x_images()[i].clone())
}

/// All six images in order.
pub fn x_from_y_all() -> [Poly; 6] {
    touch(Op::XFromY);
    x_images().clone()
}

/// Rewrites a polynomial in x1..x6 in the y variables.
///
/// The result is meaningful modulo `y1+y2+y3+y4`; compare results with
/// [`congruent_mod_sum`] or after [`eliminate_y4`].
pub fn y_from_x(p: &Poly) -> Result<Poly> {
    touch(Op::YFromX);
    let images = x_images().iter().cloned().map(Some).collect();
    Substitution::new(&VarSet::x(), &VarSet::y(), images)?.apply(p)
}

fn eliminator() -> Substitution {
    static SUB: OnceLock<Substitution> = OnceLock::new();
    SUB.get_or_init(|| {
        let r = VarSet::y_reduced();
        let mut images: Vec<Option<Poly>> = Poly::vars_of(&r).into_iter().map(Some).collect();
        images.push(Some(Poly::linear(&r, &[q(-1), q(-1), q(-1)])));
        Substitution::new(&VarSet::y(), &r, images).unwrap()
    })
    .clone()
}

/// Substitutes `y4 = −(y1+y2+y3)`, landing in ℚ[y1,y2,y3].
pub fn eliminate_y4(p: &Poly) -> Result<Poly> {
    eliminator().apply(p)
}

/// Equality in ℚ[y1..y4]/(y1+y2+y3+y4).
pub fn congruent_mod_sum(a: &Poly, b: &Poly) -> Result<bool> {
    Ok(eliminate_y4(&a.checked_sub(b)?)?.is_zero())
}

/// `(y1, y2, y3, −(y1+y2+y3))` in ℚ[y1,y2,y3].
pub fn reduced_y() -> [Poly; 4] {
    let r = VarSet::y_reduced();
    let v = Poly::vars_of(&r);
    let y4 = -(&(&v[0] + &v[1]) + &v[2]);
    [v[0].clone(), v[1].clone(), v[2].clone(), y4]
}

/// The edge variables at a point of ℚ⁴, scaled by 4 so that integer points
/// give integer values.
pub fn scaled_x_at(y: &[i64; 4]) -> [i64; 6] {
    let [y1, y2, y3, y4] = *y;
    let x1 = y1 - y4;
    let x2 = y2 - y4;
    let x4 = y2 - y3;
    let x5 = y3 - y1;
    [x1, x2, x1 + x5, x4, x5, x1 - x2]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BigRational;

    fn x() -> Vec<Poly> {
        Poly::vars_of(&VarSet::x())
    }

    fn y() -> Vec<Poly> {
        Poly::vars_of(&VarSet::y())
    }

    #[test]
    fn relations_vanish_identically() {
        let x = x();
        for rel in [
            &(&x[0] - &x[1]) - &x[5],
            &(&x[0] - &x[2]) + &x[4],
            &(&x[3] + &x[4]) + &x[5],
        ] {
            assert!(y_from_x(&rel).unwrap().is_zero());
        }
    }

    #[test]
    fn printed_examples() {
        let x = x();
        let y = y();
        let one = Poly::one(&VarSet::x());
        assert_eq!(y_from_x(&one).unwrap(), Poly::one(&VarSet::y()));
        let s = -(&(&x[0] + &x[1]) + &x[2]);
        assert!(congruent_mod_sum(&y_from_x(&s).unwrap(), &y[3]).unwrap());
        let x1_plus_x5 = y_from_x(&(&x[0] + &x[4])).unwrap();
        assert_eq!(x1_plus_x5, x_from_y("x3").unwrap());
        assert_eq!(x1_plus_x5, y_from_x(&(&x[1] - &x[3])).unwrap());
        assert_eq!(x_from_y("x6").unwrap(), (&y[0] - &y[1]).scale(&frac(1, 4)));
        assert!(x_from_y("x7").is_err());
    }

    #[test]
    fn round_trip_through_y_images() {
        let y = y();
        for (img, yi) in y_images().iter().zip(&y) {
            assert!(congruent_mod_sum(&y_from_x(img).unwrap(), yi).unwrap());
        }
    }

    #[test]
    fn scaled_values_match_images() {
        let pt = [3i64, -7, 11, -7];
        let rat: Vec<BigRational> = pt.iter().map(|&v| q(v)).collect();
        for (img, s) in x_from_y_all().iter().zip(scaled_x_at(&pt)) {
            assert_eq!(img.eval(&rat) * q(4), q(s));
        }
    }
}
