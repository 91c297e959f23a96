//! Multivariate polynomials over ℚ with named variables.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with respect to the variable order of the owning
//! [`VarSet`]. Zero coefficients are never stored.

mod action;
mod families;
mod ring;
mod substitute;

pub use action::{act, s4_group, sign_of, symmetrize, Character, SignedPermAction};
pub use families::{
    discriminant, elementary_symmetric, lemma_summand_in, p2, p2_in, p3, p3_in, p4, p4_in, q_in,
    q_poly,
};
pub use ring::Ring;
pub use substitute::{substitute, Substitution};

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::BigRational;

/// An ordered list of distinct variable names.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    /// Panics on duplicate names; variable sets are fixed at construction sites.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!names[..i].contains(n), "duplicate variable `{n}`");
        }
        VarSet(names.into())
    }

    /// Tetrahedron edge variables x1..x6.
    pub fn x() -> Self {
        cached(&X, &["x1", "x2", "x3", "x4", "x5", "x6"])
    }

    /// Face variables y1..y4.
    pub fn y() -> Self {
        cached(&Y, &["y1", "y2", "y3", "y4"])
    }

    /// y1..y3, the coordinates left after eliminating y4 = −(y1+y2+y3).
    pub fn y_reduced() -> Self {
        cached(&Y3, &["y1", "y2", "y3"])
    }

    /// Variables z1..z4 of the theta-square presentation.
    pub fn z() -> Self {
        cached(&Z, &["z1", "z2", "z3", "z4"])
    }

    /// z1..z3, after eliminating z4 = −(z1+z2+z3).
    pub fn z_reduced() -> Self {
        cached(&Z3, &["z1", "z2", "z3"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

static X: OnceLock<VarSet> = OnceLock::new();
static Y: OnceLock<VarSet> = OnceLock::new();
static Y3: OnceLock<VarSet> = OnceLock::new();
static Z: OnceLock<VarSet> = OnceLock::new();
static Z3: OnceLock<VarSet> = OnceLock::new();

fn cached(cell: &OnceLock<VarSet>, names: &[&str]) -> VarSet {
    cell.get_or_init(|| VarSet::new(names)).clone()
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(","))
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial::new)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All monomials of total degree `d`, in descending lexicographic order.
pub fn degree_slice_monomials(vars: &VarSet, d: u32) -> Vec<Monomial> {
    touch(Op::DegreeSliceMonomials);
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars.is_empty() {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(vars.len(), d, &mut Vec::with_capacity(vars.len()), &mut out);
    out
}

/// A polynomial in the variables of a [`VarSet`] with rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: BigRational) -> Self {
        assert_eq!(
            m.0.len(),
            vars.len(),
            "monomial length must match the variable set"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The variable at position `i`.
    pub fn var_at(vars: &VarSet, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial::new(e), BigRational::one())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(vars, i))
    }

    /// All variables of `vars` as degree-one polynomials.
    pub fn vars_of(vars: &VarSet) -> Vec<Poly> {
        (0..vars.len()).map(|i| Self::var_at(vars, i)).collect()
    }

    /// Linear form `Σ coeffs[i]·v_i`.
    pub fn linear(vars: &VarSet, coeffs: &[BigRational]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            p.add_term(Monomial::new(e), c.clone());
        }
        p
    }

    pub fn from_terms(
        vars: &VarSet,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len());
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree, `None` for the zero polynomial (degree −∞).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Greatest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch {
                left: format!("{:?}", self.vars),
                right: format!("{:?}", other.vars),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        touch(Op::Add);
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        touch(Op::Add);
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        touch(Op::Mul);
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let (sm, sc) = single.terms.iter().next().unwrap();
            let terms = many
                .terms
                .iter()
                .map(|(m, c)| (m.mul(sm), c * sc))
                .collect();
            return Poly {
                vars: self.vars.clone(),
                terms,
            };
        }
        let mut acc: HashMap<Monomial, BigRational> = HashMap::with_capacity(self.len() * 2);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                acc.entry(m1.mul(m2)).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        touch(Op::Scale);
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Evaluates at a point given in variable order.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len());
        let max_deg = self.total_degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<BigRational>> = point
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(max_deg + 1);
                v.push(BigRational::one());
                for i in 0..max_deg {
                    let next = &v[i] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[i][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Same polynomial over a different variable set of equal size.
    pub fn relabel(&self, vars: &VarSet) -> Poly {
        assert_eq!(vars.len(), self.vars.len());
        Poly {
            vars: vars.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Division with remainder by a single divisor in graded-lex order.
    ///
    /// Returns `(q, r)` with `self = q·d + r` and no term of `r` divisible by
    /// the leading monomial of `d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.divide(d, false)
    }

    fn divide(&self, d: &Poly, exact: bool) -> Result<(Poly, Poly)> {
        self.check_vars(d)?;
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rest = self.terms.clone();
        let mut quot = Poly::zero(&self.vars);
        let mut rem = Poly::zero(&self.vars);
        while let Some((m, c)) = rest.pop_last() {
            match m.div(&lm) {
                Some(shift) => {
                    let f = &c / &lc;
                    for (dm, dc) in d.terms.iter().rev().skip(1) {
                        let key = dm.mul(&shift);
                        let delta = &f * dc;
                        use std::collections::btree_map::Entry;
                        match rest.entry(key) {
                            Entry::Vacant(e) => {
                                e.insert(-delta);
                            }
                            Entry::Occupied(mut e) => {
                                *e.get_mut() -= delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                    quot.add_term(shift, f);
                }
                None if exact => return Err(Error::NotDivisible),
                None => rem.add_term(m, c),
            }
        }
        Ok((quot, rem))
    }

    /// `q` with `self = q·d`, or [`Error::NotDivisible`].
    pub fn divide_exact(&self, d: &Poly) -> Result<Poly> {
        touch(Op::DivideExact);
        self.divide(d, true).map(|(q, _)| q)
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates with respect to a list of monomials; `None` if a term falls outside it.
    pub fn coordinates(&self, basis: &[Monomial]) -> Option<Vec<BigRational>> {
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut v = vec![BigRational::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn from_coordinates(vars: &VarSet, basis: &[Monomial], coords: &[BigRational]) -> Poly {
        Poly::from_terms(vars, basis.iter().cloned().zip(coords.iter().cloned()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            self.vars.0[i].clone()
                        } else {
                            format!("{}^{}", self.vars.0[i], e)
                        }
                    })
                    .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}({})", self.vars, self)
    }
}

// Operator forms panic on variable-set mismatch; use the `checked_*` methods
// where mixing sets is possible.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("variable set mismatch")
            }
        }
        impl std::ops::$trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$checked(&rhs).expect("variable set mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
