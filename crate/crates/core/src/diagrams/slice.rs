//! Graded slices of the tetrahedron space `ℚ[y1..y4]^{S4}/(y1+y2+y3+y4)` and
//! of the spans of the diagram families inside it.
//!
//! All slices live in ℚ[y1,y2,y3] with `y4 = −(y1+y2+y3)` substituted; a
//! slice of degree `L` has the `(L+1)(L+2)/2` monomials of degree `L` in
//! descending lexicographic order as its column basis.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::coords::{eliminate_y4, scaled_x_at, y_from_x};
use super::Parity;
use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::{q, rank, row_space_equal, BigRational, EchelonBasis, QMatrix};
use crate::poly::{
    act, degree_slice_monomials, discriminant, elementary_symmetric, s4_group, symmetrize,
    Character, Monomial, Poly, SignedPermAction, VarSet,
};

/// A graded piece of degree `legs`, given by a spanning set in monomial coordinates.
#[derive(Debug, Clone)]
pub struct SliceSpace {
    pub legs: u32,
    pub parity: Parity,
    pub basis: Vec<Monomial>,
    pub span_matrix: QMatrix,
    pub dim: usize,
    echelon: QMatrix,
    pivots: Vec<usize>,
}

impl SliceSpace {
    fn from_rows(legs: u32, vars: &VarSet, rows: Vec<Vec<BigRational>>) -> Self {
        let basis = degree_slice_monomials(vars, legs);
        let span_matrix = QMatrix::from_rows(basis.len(), rows).expect("rows sized to basis");
        let (echelon, pivots) = span_matrix.row_basis();
        SliceSpace {
            legs,
            parity: Parity::of(legs),
            basis,
            dim: pivots.len(),
            span_matrix,
            echelon,
            pivots,
        }
    }

    /// Reduced row echelon basis of the span.
    pub fn echelon(&self) -> &QMatrix {
        &self.echelon
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vars(&self) -> VarSet {
        VarSet::y_reduced()
    }

    /// The echelon basis rows as polynomials in y1, y2, y3.
    pub fn basis_polys(&self) -> Vec<Poly> {
        (0..self.echelon.rows())
            .map(|i| Poly::from_coordinates(&self.vars(), &self.basis, self.echelon.row(i)))
            .collect()
    }

    /// Coordinates of `p` in the echelon basis, or `None` if `p` is outside the span.
    pub fn coordinates_of(&self, p: &Poly) -> Option<Vec<BigRational>> {
        let v = p.coordinates(&self.basis)?;
        let c: Vec<BigRational> = self.pivots.iter().map(|&j| v[j].clone()).collect();
        let mut residual = v;
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (r, e) in residual.iter_mut().zip(self.echelon.row(i)) {
                if !e.is_zero() {
                    *r -= ci * e;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.coordinates_of(p).is_some()
    }

    /// Whether the two slices span the same subspace.
    pub fn span_equal(&self, other: &SliceSpace) -> Result<bool> {
        row_space_equal(&self.span_matrix, &other.span_matrix)
    }
}

/// Exponent triples `a ≥ b ≥ c ≥ 0` with `a + b + c = legs`.
fn orbit_representatives(legs: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=legs).rev() {
        for b in (0..=a.min(legs - a)).rev() {
            let c = legs - a - b;
            if c <= b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn symmetrized_row(
    exps: [u32; 3],
    legs: u32,
    group: &[SignedPermAction],
    basis: &[Monomial],
) -> Result<Vec<BigRational>> {
    let ys = VarSet::y();
    let m = Poly::monomial(&ys, Monomial::new(vec![exps[0], exps[1], exps[2], 0]), q(1));
    let reduced = eliminate_y4(&symmetrize(&m, group)?)?;
    Ok(reduced
        .coordinates(basis)
        .unwrap_or_else(|| panic!("symmetrized degree-{legs} monomial left the slice")))
}

/// Degree-`legs` part of the tetrahedron space, with S4 acting plainly in
/// even degrees and through the sign character in odd degrees.
///
/// Each row is the symmetrization of one monomial `y1^a y2^b y3^c`. Up to
/// sign the result depends only on the multiset `{a, b, c, 0}`, so one
/// monomial per multiset is enough.
pub fn tet_slice(legs: u32, parity: Parity) -> Result<SliceSpace> {
    touch(Op::TetSlice);
    parity.check(legs)?;
    let group = s4_group(Character::for_degree(legs));
    let basis = degree_slice_monomials(&VarSet::y_reduced(), legs);
    let rows = orbit_representatives(legs)
        .into_iter()
        .map(|e| symmetrized_row(e, legs, &group, &basis))
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceSpace::from_rows(legs, &VarSet::y_reduced(), rows))
}

/// Same space as [`tet_slice`], with one row for every monomial of the slice.
pub fn tet_slice_all_monomials(legs: u32, parity: Parity) -> Result<SliceSpace> {
    parity.check(legs)?;
    let group = s4_group(Character::for_degree(legs));
    let basis = degree_slice_monomials(&VarSet::y_reduced(), legs);
    let rows = basis
        .iter()
        .map(|m| {
            let e = m.exps();
            symmetrized_row([e[0], e[1], e[2]], legs, &group, &basis)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceSpace::from_rows(legs, &VarSet::y_reduced(), rows))
}

/// Families of odd-degree polynomials in the edge variables whose skew
/// symmetrizations are compared with the whole odd slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(x1^m1 x5^m2 + x1^m2 x5^m1) · x4^m3 · (−x2)^m4`
    Psi4,
    /// `(x1 x2)^n · x4^a · x5^b`
    Eq8,
    /// `(x1 + x5)^m · (x1 x5)^n · x4^m3 · (−x2)^m4`
    Alt,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Psi4 => "psi4",
            Family::Eq8 => "eq8",
            Family::Alt => "alt",
        }
    }

    /// Exponent tuples of the degree-`legs` members, in lexicographic order.
    /// For `Psi4` only `m1 ≤ m2` is listed, since the generator is symmetric in them.
    pub fn generators(self, legs: u32) -> Vec<Generator> {
        let l = legs;
        let mut out = Vec::new();
        match self {
            Family::Psi4 => {
                for m1 in 0..=l {
                    for m2 in m1..=l - m1 {
                        for m3 in 0..=l - m1 - m2 {
                            out.push(Generator::new(self, [m1, m2, m3, l - m1 - m2 - m3]));
                        }
                    }
                }
            }
            Family::Eq8 => {
                for n in 0..=l / 2 {
                    for a in 0..=l - 2 * n {
                        out.push(Generator::new(self, [n, a, l - 2 * n - a, 0]));
                    }
                }
            }
            Family::Alt => {
                for n in 0..=l / 2 {
                    for m in 0..=l - 2 * n {
                        for m3 in 0..=l - 2 * n - m {
                            out.push(Generator::new(self, [m, n, m3, l - 2 * n - m - m3]));
                        }
                    }
                }
            }
        }
        out
    }
}

/// One member of a [`Family`], identified by its exponent tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub family: Family,
    pub exps: [u32; 4],
}

// Indices into x1..x6.
const X1: usize = 0;
const X2: usize = 1;
const X3: usize = 2;
const X4: usize = 3;
const X5: usize = 4;

impl Generator {
    pub fn new(family: Family, exps: [u32; 4]) -> Self {
        Generator { family, exps }
    }

    pub fn degree(&self) -> u32 {
        let [a, b, c, d] = self.exps;
        match self.family {
            Family::Psi4 => a + b + c + d,
            Family::Eq8 => 2 * a + b + c,
            Family::Alt => a + 2 * b + c + d,
        }
    }

    /// The generator as a polynomial in x1..x6.
    pub fn poly(&self) -> Poly {
        let x = Poly::vars_of(&VarSet::x());
        let neg_x2 = -&x[X2];
        let [a, b, c, d] = self.exps;
        match self.family {
            Family::Psi4 => {
                let sym = &(&x[X1].pow(a) * &x[X5].pow(b)) + &(&x[X1].pow(b) * &x[X5].pow(a));
                &(&sym * &x[X4].pow(c)) * &neg_x2.pow(d)
            }
            Family::Eq8 => &(&(&x[X1] * &x[X2]).pow(a) * &x[X4].pow(b)) * &x[X5].pow(c),
            Family::Alt => {
                let s = (&x[X1] + &x[X5]).pow(a);
                let p = (&x[X1] * &x[X5]).pow(b);
                &(&(&s * &p) * &x[X4].pow(c)) * &neg_x2.pow(d)
            }
        }
    }

    /// Value at a point, given the powers `pw[v][e] = x_v^e`.
    fn eval_powers(&self, pw: &[Vec<BigInt>; 6]) -> BigInt {
        let [a, b, c, d] = self.exps.map(|e| e as usize);
        let sign = |e: usize| {
            if e % 2 == 1 {
                -BigInt::one()
            } else {
                BigInt::one()
            }
        };
        match self.family {
            Family::Psi4 => {
                let sym = &pw[X1][a] * &pw[X5][b] + &pw[X1][b] * &pw[X5][a];
                sym * &pw[X4][c] * &pw[X2][d] * sign(d)
            }
            Family::Eq8 => &pw[X1][a] * &pw[X2][a] * &pw[X4][b] * &pw[X5][c],
            // x1 + x5 = x3 on the nose.
            Family::Alt => &pw[X3][a] * &pw[X1][b] * &pw[X5][b] * &pw[X4][c] * &pw[X2][d] * sign(d),
        }
    }
}

/// Finitely many points of the hyperplane `y1+y2+y3+y4 = 0` on which the
/// ambient odd slice restricts injectively.
///
/// With `B_1..B_r` the ambient echelon basis and `p_1..p_r` the points, the
/// matrix `E[j][i] = B_j(p_i)` is invertible. Any element `f = Σ c_j B_j` of
/// the slice is then recovered from its values: `c = (f(p_1)..f(p_r)) · E⁻¹`.
struct Frame {
    legs: u32,
    inverse: QMatrix,
    /// For each point and each group element, powers of the scaled edge values.
    powers: Vec<Vec<[Vec<BigInt>; 6]>>,
    signs: Vec<i8>,
    scale: BigRational,
}

impl Frame {
    fn build(ambient: &SliceSpace) -> Result<Frame> {
        let legs = ambient.legs;
        let r = ambient.dim;
        let basis = ambient.basis_polys();
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a64_3300 + legs as u64);
        let mut independent = EchelonBasis::new(r);
        let mut points: Vec<[i64; 4]> = Vec::with_capacity(r);
        let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(r);
        let mut attempts = 0;
        while points.len() < r {
            attempts += 1;
            if attempts > 50 + 20 * r {
                return Err(Error::Frame(legs as usize));
            }
            let p: [i64; 3] = std::array::from_fn(|_| rng.random_range(-97..=97));
            let at = [q(p[0]), q(p[1]), q(p[2])];
            let col: Vec<BigRational> = basis.iter().map(|b| b.eval(&at)).collect();
            if independent.insert(col.clone())? {
                points.push([p[0], p[1], p[2], -(p[0] + p[1] + p[2])]);
                columns.push(col);
            }
        }
        // E has one row per basis element and one column per point.
        let e = QMatrix::from_rows(r, columns)?.transpose();
        let inverse = e.inverse().ok_or(Error::Frame(legs as usize))?;

        let group = s4_group(Character::for_degree(legs));
        let signs = group.iter().map(SignedPermAction::character).collect();
        let powers = points
            .iter()
            .map(|p| {
                group
                    .iter()
                    .map(|g| {
                        let permuted: [i64; 4] = std::array::from_fn(|i| p[g.perm()[i]]);
                        let xs = scaled_x_at(&permuted);
                        xs.map(|v| {
                            let v = BigInt::from(v);
                            (0..=legs).map(|e| Pow::pow(&v, e)).collect()
                        })
                    })
                    .collect()
            })
            .collect();
        // Edge values are scaled by 4 and the 1/|G| of the symmetrizer is deferred.
        let scale = BigRational::new(
            BigInt::one(),
            BigInt::from(24) * Pow::pow(BigInt::from(4), legs),
        );
        Ok(Frame {
            legs,
            inverse,
            powers,
            signs,
            scale,
        })
    }

    /// Values of the symmetrization of `g` at the frame points, up to the
    /// common factor `scale`.
    fn scaled_values(&self, g: &Generator) -> Vec<BigRational> {
        debug_assert_eq!(g.degree(), self.legs);
        self.powers
            .iter()
            .map(|per_point| {
                let mut acc = BigInt::zero();
                for (pw, &s) in per_point.iter().zip(&self.signs) {
                    let v = g.eval_powers(pw);
                    if s > 0 {
                        acc += v;
                    } else {
                        acc -= v;
                    }
                }
                BigRational::from_integer(acc)
            })
            .collect()
    }

    /// Coordinates in the ambient echelon basis from [`Frame::scaled_values`].
    fn solve(&self, values: &[BigRational]) -> Vec<BigRational> {
        (0..values.len())
            .map(|j| {
                let mut c = BigRational::zero();
                for (i, v) in values.iter().enumerate() {
                    let e = &self.inverse[(i, j)];
                    if !v.is_zero() && !e.is_zero() {
                        c += v * e;
                    }
                }
                c * &self.scale
            })
            .collect()
    }
}

fn rows_from_coordinates(
    ambient: &SliceSpace,
    coords: &[Vec<BigRational>],
) -> Vec<Vec<BigRational>> {
    let e = ambient.echelon();
    coords
        .iter()
        .map(|c| {
            let mut row = vec![BigRational::zero(); e.cols()];
            for (j, cj) in c.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (x, b) in row.iter_mut().zip(e.row(j)) {
                    if !b.is_zero() {
                        *x += cj * b;
                    }
                }
            }
            row
        })
        .collect()
}

/// Span of the skew symmetrizations of a family in degree `legs`, inside `ambient`.
///
/// Generators are processed in order and only independent ones are kept;
/// the scan stops once the whole ambient slice is reached.
pub fn family_slice_in(family: Family, ambient: &SliceSpace) -> Result<SliceSpace> {
    let legs = ambient.legs;
    Parity::Odd.check(legs)?;
    let vars = VarSet::y_reduced();
    if ambient.dim == 0 {
        return Ok(SliceSpace::from_rows(legs, &vars, Vec::new()));
    }
    let frame = Frame::build(ambient)?;
    let mut span = EchelonBasis::new(ambient.dim);
    let mut kept = Vec::new();
    // E is invertible, so values and coordinates have the same linear relations.
    for g in family.generators(legs) {
        let v = frame.scaled_values(&g);
        if span.insert(v.clone())? {
            kept.push(frame.solve(&v));
            if span.rank() == ambient.dim {
                break;
            }
        }
    }
    Ok(SliceSpace::from_rows(
        legs,
        &vars,
        rows_from_coordinates(ambient, &kept),
    ))
}

/// Same span as [`family_slice_in`], computed by expanding every generator
/// in y1..y4, symmetrizing, and eliminating y4.
pub fn family_slice_expanded(family: Family, legs: u32) -> Result<SliceSpace> {
    Parity::Odd.check(legs)?;
    let group = s4_group(Character::Sign);
    let vars = VarSet::y_reduced();
    let basis = degree_slice_monomials(&vars, legs);
    let rows = family
        .generators(legs)
        .iter()
        .map(|g| {
            let s = symmetrize(&y_from_x(&g.poly())?, &group)?;
            Ok(eliminate_y4(&s)?
                .coordinates(&basis)
                .expect("degree preserved"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SliceSpace::from_rows(legs, &vars, rows))
}

/// Image of ψ₄ in the odd slice of degree `legs`.
pub fn psi4_image_slice(legs: u32) -> Result<SliceSpace> {
    psi4_image_in(&tet_slice(legs, Parity::Odd)?)
}

/// [`psi4_image_slice`] for an already computed ambient slice.
pub fn psi4_image_in(ambient: &SliceSpace) -> Result<SliceSpace> {
    touch(Op::Psi4ImageSlice);
    family_slice_in(Family::Psi4, ambient)
}

/// Span of the skew-symmetrized `(x1x2)^n x4^a x5^b` in degree `legs`.
pub fn eq8_span_slice(legs: u32) -> Result<SliceSpace> {
    eq8_span_in(&tet_slice(legs, Parity::Odd)?)
}

/// [`eq8_span_slice`] for an already computed ambient slice.
pub fn eq8_span_in(ambient: &SliceSpace) -> Result<SliceSpace> {
    touch(Op::Eq8SpanSlice);
    family_slice_in(Family::Eq8, ambient)
}

/// Dimension of the odd part of the theta-square space in degree `legs`.
///
/// The reflection of the internal graph fixes every z variable and acts by
/// −1 in odd degree; the result is the rank of the averaging projector
/// `(1 + reflection)/2` on the slice of ℚ[z1,z2,z3].
pub fn tsq_odd_dim(legs: u32) -> Result<usize> {
    touch(Op::TsqOddDim);
    Parity::Odd.check(legs)?;
    let vars = VarSet::z_reduced();
    let reflection = SignedPermAction::new((0..vars.len()).collect(), -1)?;
    let basis = degree_slice_monomials(&vars, legs);
    let half = BigRational::new(1.into(), 2.into());
    let rows = basis
        .iter()
        .map(|m| {
            let p = Poly::monomial(&vars, m.clone(), q(1));
            let avg = p.checked_add(&act(&reflection, &p)?)?.scale(&half);
            Ok(avg.coordinates(&basis).expect("action preserves degree"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rank(&QMatrix::from_rows(basis.len(), rows)?))
}

/// Writes an element of the odd slice as `Δ·σ₃·h`, returning `h`.
pub fn delta_sigma3_cofactor(p: &Poly) -> Result<Poly> {
    let ys = VarSet::y();
    let delta = eliminate_y4(&discriminant(&ys)?)?;
    let sigma3 = eliminate_y4(&elementary_symmetric(3, &ys)?)?;
    p.divide_exact(&delta)?.divide_exact(&sigma3)
}
