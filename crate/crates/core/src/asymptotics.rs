//! Leading-term analysis of Q^{n,m,k} under the two `t → ∞` substitutions.
//!
//! A [`PuiseuxPoly`] is a finite sum of terms `q · t^(αa + βb + γc)`. Terms are
//! stored symbolically by their integer exponent vector `(α, β, γ)`. A
//! [`Regime`] fixes exact rational `(a, b, c)`; under it, terms whose
//! exponents evaluate to the same number are merged (see
//! [`PuiseuxPoly::merged_terms`]), which is what `t → ∞` sees.
//!
//! Expansions are exact and finite, so there is no `o(·)` bookkeeping: a
//! statement like `f = C t^e (1 + o(1))` becomes "the merged term of maximal
//! exponent value is `C t^e`".

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coverage::{touch, Op};
use crate::error::{Error, Result};
use crate::exact::{frac, q, BigRational};
use crate::poly::{q_in, Poly, Ring, Substitution, VarSet};

/// Integer coefficients of the exponent `α·a + β·b + γ·c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVector {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
}

impl ExpVector {
    pub const ZERO: ExpVector = ExpVector::new(0, 0, 0);

    pub const fn new(alpha: i64, beta: i64, gamma: i64) -> Self {
        ExpVector { alpha, beta, gamma }
    }

    /// Exact value of the exponent at the regime's `(a, b, c)`.
    pub fn value(&self, r: &Regime) -> BigRational {
        &r.a * q(self.alpha) + &r.b * q(self.beta) + &r.c * q(self.gamma)
    }

    fn add(self, o: ExpVector) -> ExpVector {
        ExpVector::new(
            self.alpha + o.alpha,
            self.beta + o.beta,
            self.gamma + o.gamma,
        )
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, sym) in [(self.alpha, 'a'), (self.beta, 'b'), (self.gamma, 'c')] {
            if k == 0 {
                continue;
            }
            if k < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k.abs() != 1 {
                out.push_str(&k.abs().to_string());
            }
            out.push(sym);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeId {
    One,
    Two,
}

impl RegimeId {
    pub fn label(self) -> &'static str {
        match self {
            RegimeId::One => "regime1",
            RegimeId::Two => "regime2",
        }
    }
}

/// A substitution regime with exact exponents `a > b > c > 0`.
///
/// * `One` requires `a−b < b−c < 2(a−b)`,
/// * `Two` requires `b−c < a−b < 2(b−c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regime {
    pub id: RegimeId,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl Regime {
    pub fn new(id: RegimeId, a: BigRational, b: BigRational, c: BigRational) -> Result<Self> {
        let zero = BigRational::zero();
        if !(a > b && b > c && c > zero) {
            return Err(Error::InvalidRegime(format!(
                "need a > b > c > 0, got ({a}, {b}, {c})"
            )));
        }
        let ab = &a - &b;
        let bc = &b - &c;
        let ok = match id {
            RegimeId::One => ab < bc && bc < &ab * q(2),
            RegimeId::Two => bc < ab && ab < &bc * q(2),
        };
        if !ok {
            let rule = match id {
                RegimeId::One => "a-b < b-c < 2(a-b)",
                RegimeId::Two => "b-c < a-b < 2(b-c)",
            };
            return Err(Error::InvalidRegime(format!(
                "{} needs {rule}, got ({a}, {b}, {c})",
                id.label()
            )));
        }
        Ok(Regime { id, a, b, c })
    }

    /// `(a, b, c) = (2, 8/5, 1)`.
    pub fn one() -> Self {
        Self::new(RegimeId::One, q(2), frac(8, 5), q(1)).unwrap()
    }

    /// `(a, b, c) = (2, 7/5, 1)`.
    pub fn two() -> Self {
        Self::new(RegimeId::Two, q(2), frac(7, 5), q(1)).unwrap()
    }

    pub fn default_for(id: RegimeId) -> Self {
        match id {
            RegimeId::One => Self::one(),
            RegimeId::Two => Self::two(),
        }
    }

    /// Images of y1..y4 as coefficient rows over `(t^a, t^b, t^c)`.
    fn image_rows(&self) -> [[BigRational; 3]; 4] {
        match self.id {
            RegimeId::One => [
                [frac(3, 4), frac(-1, 4), frac(-1, 4)],
                [frac(-1, 4), frac(3, 4), frac(-1, 4)],
                [frac(-1, 4), frac(-1, 4), frac(3, 4)],
                [frac(-1, 4), frac(-1, 4), frac(-1, 4)],
            ],
            RegimeId::Two => [
                [frac(1, 2), frac(1, 2), frac(-1, 4)],
                [frac(1, 2), frac(-1, 2), frac(-1, 4)],
                [frac(-1, 2), q(0), frac(3, 4)],
                [frac(-1, 2), q(0), frac(-1, 4)],
            ],
        }
    }

    /// Images of y1..y4 as generalized polynomials.
    pub fn images(&self) -> [PuiseuxPoly; 4] {
        self.image_rows().map(|row| {
            let mut p = PuiseuxPoly::zero();
            for (c, e) in row.into_iter().zip(BASIS) {
                p.add_term(e, c);
            }
            p
        })
    }
}

const BASIS: [ExpVector; 3] = [
    ExpVector::new(1, 0, 0),
    ExpVector::new(0, 1, 0),
    ExpVector::new(0, 0, 1),
];

/// Finite sum `Σ q_e · t^(α_e a + β_e b + γ_e c)` with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<ExpVector, BigRational>,
}

/// One term of the regime-merged view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedTerm {
    pub value: BigRational,
    pub coefficient: BigRational,
    /// Symbolic exponents that evaluate to `value`, ascending.
    pub exponents: Vec<ExpVector>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(ExpVector::ZERO, c);
        p
    }

    pub fn term(e: ExpVector, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: ExpVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms grouped by exponent value under `r`, in descending value order.
    /// Groups whose coefficients cancel are dropped.
    pub fn merged_terms(&self, r: &Regime) -> Vec<MergedTerm> {
        let mut groups: BTreeMap<BigRational, (BigRational, Vec<ExpVector>)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let g = groups
                .entry(e.value(r))
                .or_insert_with(|| (BigRational::zero(), Vec::new()));
            g.0 += c;
            g.1.push(*e);
        }
        groups
            .into_iter()
            .rev()
            .filter(|(_, (c, _))| !c.is_zero())
            .map(|(value, (coefficient, exponents))| MergedTerm {
                value,
                coefficient,
                exponents,
            })
            .collect()
    }

    /// Equality as functions of `t` under `r`.
    pub fn eq_under(&self, other: &PuiseuxPoly, r: &Regime) -> bool {
        let strip = |p: &PuiseuxPoly| -> Vec<(BigRational, BigRational)> {
            p.merged_terms(r)
                .into_iter()
                .map(|t| (t.value, t.coefficient))
                .collect()
        };
        strip(self) == strip(other)
    }
}

impl Ring for PuiseuxPoly {
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(*e2), c1 * c2);
            }
        }
        out
    }

    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    fn unit(&self) -> Self {
        PuiseuxPoly::constant(BigRational::one())
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| render_term(c, e))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn render_term(c: &BigRational, e: &ExpVector) -> String {
    if *e == ExpVector::ZERO {
        c.to_string()
    } else {
        format!("{c}*t^({e})")
    }
}

fn t_vars() -> VarSet {
    VarSet::new(&["t^a", "t^b", "t^c"])
}

/// Substitutes the regime's images for y1..y4 and expands exactly.
pub fn substitute_regime(p: &Poly, r: &Regime) -> Result<PuiseuxPoly> {
    touch(Op::SubstituteRegime);
    let ys = VarSet::y();
    if p.vars() != &ys {
        return Err(Error::VarSetMismatch {
            left: format!("{:?}", p.vars()),
            right: format!("{ys:?}"),
        });
    }
    let tv = t_vars();
    let images = r
        .image_rows()
        .iter()
        .map(|row| Some(Poly::linear(&tv, row)))
        .collect();
    let expanded = Substitution::new(&ys, &tv, images)?.apply(p)?;
    let mut out = PuiseuxPoly::zero();
    for (m, c) in expanded.terms() {
        let e = m.exps();
        out.add_term(
            ExpVector::new(e[0] as i64, e[1] as i64, e[2] as i64),
            c.clone(),
        );
    }
    Ok(out)
}

/// The dominant term of `p` as `t → ∞` under `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTerm {
    pub coefficient: BigRational,
    pub exponent: ExpVector,
    pub value: BigRational,
    /// More than one symbolic exponent evaluates to `value` under the regime.
    pub ambiguous: bool,
}

impl fmt::Display for LeadingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_term(&self.coefficient, &self.exponent))?;
        if self.ambiguous {
            f.write_str(" (merged)")?;
        }
        Ok(())
    }
}

pub fn leading_term(p: &PuiseuxPoly, r: &Regime) -> Result<LeadingTerm> {
    touch(Op::LeadingTerm);
    let top = p
        .merged_terms(r)
        .into_iter()
        .next()
        .ok_or(Error::ZeroPolynomial)?;
    Ok(LeadingTerm {
        coefficient: top.coefficient,
        exponent: *top.exponents.last().unwrap(),
        value: top.value,
        ambiguous: top.exponents.len() > 1,
    })
}

/// Closed-form leading term of Q^{n,m,k}, with ε = 3 when k = 0 and 1 otherwise:
///
/// * regime one: `ε·2ⁿ(2m+3) · t^(2(n+2m+k+3)a + 2(m+k+1)b + c)`
/// * regime two: `ε·2ⁿ⁺¹(n+2m+3) · t^((2(n+2m+2k)+5)a + (2m+3)b + c)`
pub fn expected_q_leading(n: u32, m: u32, k: u32, id: RegimeId) -> (BigRational, ExpVector) {
    let (n, m, k) = (n as i64, m as i64, k as i64);
    let eps = if k == 0 { 3 } else { 1 };
    match id {
        RegimeId::One => (
            BigRational::from_integer(BigInt::from(eps) * (BigInt::from(1) << n) * (2 * m + 3)),
            ExpVector::new(2 * (n + 2 * m + k + 3), 2 * (m + k + 1), 1),
        ),
        RegimeId::Two => (
            BigRational::from_integer(
                BigInt::from(eps) * (BigInt::from(1) << (n + 1)) * (n + 2 * m + 3),
            ),
            ExpVector::new(2 * (n + 2 * m + 2 * k) + 5, 2 * m + 3, 1),
        ),
    }
}

/// Q^{n,m,k} pushed through the regime substitution.
///
/// Built factor by factor on the images of y1..y4, which is the same as
/// expanding `q_poly(n, m, k)` and substituting because the substitution is
/// a ring homomorphism.
pub fn q_under_regime(n: u32, m: u32, k: u32, r: &Regime) -> PuiseuxPoly {
    q_in(&r.images(), n, m, k)
}

/// Outcome of comparing the computed leading term of Q^{n,m,k} with its closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticCheck {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub regime: RegimeId,
    pub expected_coefficient: BigRational,
    pub expected_exponent: ExpVector,
    pub actual: Option<LeadingTerm>,
    pub pass: bool,
}

impl AsymptoticCheck {
    pub fn expected_string(&self) -> String {
        render_term(&self.expected_coefficient, &self.expected_exponent)
    }

    pub fn actual_string(&self) -> String {
        match &self.actual {
            Some(lt) => lt.to_string(),
            None => "0".to_string(),
        }
    }
}

pub fn verify_q_asymptotics(n: u32, m: u32, k: u32, r: &Regime) -> AsymptoticCheck {
    touch(Op::VerifyQAsymptotics);
    let (coefficient, exponent) = expected_q_leading(n, m, k, r.id);
    let actual = leading_term(&q_under_regime(n, m, k, r), r).ok();
    let pass = actual.as_ref().is_some_and(|lt| {
        !lt.ambiguous
            && lt.coefficient == coefficient
            && lt.exponent == exponent
            && lt.coefficient.is_positive()
    });
    AsymptoticCheck {
        n,
        m,
        k,
        regime: r.id,
        expected_coefficient: coefficient,
        expected_exponent: exponent,
        actual,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_poly;

    fn y() -> Vec<Poly> {
        Poly::vars_of(&VarSet::y())
    }

    const A: ExpVector = ExpVector::new(1, 0, 0);
    const B: ExpVector = ExpVector::new(0, 1, 0);

    #[test]
    fn default_regimes_satisfy_their_inequalities() {
        assert_eq!(Regime::one().b, frac(8, 5));
        assert_eq!(Regime::two().b, frac(7, 5));
        assert!(Regime::new(RegimeId::One, q(2), frac(7, 5), q(1)).is_err());
        assert!(Regime::new(RegimeId::Two, q(2), frac(8, 5), q(1)).is_err());
        assert!(Regime::new(RegimeId::One, q(1), q(2), q(3)).is_err());
    }

    #[test]
    fn printed_differences_are_exact() {
        let y = y();
        let one = Regime::one();
        let two = Regime::two();
        assert_eq!(
            substitute_regime(&(&y[0] - &y[3]), &one).unwrap(),
            PuiseuxPoly::term(A, q(1))
        );
        assert_eq!(
            substitute_regime(&(&y[1] - &y[3]), &one).unwrap(),
            PuiseuxPoly::term(B, q(1))
        );
        assert_eq!(
            substitute_regime(&(&y[0] - &y[1]), &two).unwrap(),
            PuiseuxPoly::term(B, q(1))
        );
        let sum = &(&(&y[0] + &y[1]) + &y[2]) + &y[3];
        assert!(substitute_regime(&sum, &one).unwrap().is_zero());
        assert!(substitute_regime(&sum, &two).unwrap().is_zero());
    }

    #[test]
    fn simple_leading_terms() {
        let r = Regime::one();
        let p = PuiseuxPoly::term(A, q(1)).sub(&PuiseuxPoly::term(B, q(1)));
        let lt = leading_term(&p, &r).unwrap();
        assert_eq!((lt.coefficient, lt.exponent), (q(1), A));
        assert_eq!(
            leading_term(&PuiseuxPoly::zero(), &r),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn colliding_exponents_merge() {
        // 4a and 5b both evaluate to 8 at (2, 8/5, 1).
        let r = Regime::one();
        let p = PuiseuxPoly::term(ExpVector::new(4, 0, 0), q(2))
            .add(&PuiseuxPoly::term(ExpVector::new(0, 5, 0), q(-2)))
            .add(&PuiseuxPoly::term(ExpVector::new(0, 0, 1), q(7)));
        let lt = leading_term(&p, &r).unwrap();
        assert_eq!(lt.exponent, ExpVector::new(0, 0, 1));
        let p = p.add(&PuiseuxPoly::term(ExpVector::new(0, 5, 0), q(1)));
        let lt = leading_term(&p, &r).unwrap();
        assert!(lt.ambiguous);
        assert_eq!(lt.coefficient, q(1));
    }

    #[test]
    fn q_leading_terms_match_closed_forms() {
        let one = Regime::one();
        let two = Regime::two();
        let lt = leading_term(&substitute_regime(&q_poly(0, 0, 0), &one).unwrap(), &one).unwrap();
        assert_eq!(
            (lt.coefficient.clone(), lt.exponent),
            (q(9), ExpVector::new(6, 2, 1))
        );
        let lt = leading_term(&substitute_regime(&q_poly(1, 0, 0), &one).unwrap(), &one).unwrap();
        assert_eq!(
            (lt.coefficient.clone(), lt.exponent),
            (q(18), ExpVector::new(8, 2, 1))
        );

        let c = verify_q_asymptotics(0, 0, 0, &one);
        assert!(c.pass);
        assert_eq!(c.expected_coefficient, q(9));
        let c = verify_q_asymptotics(0, 0, 1, &two);
        assert!(c.pass, "{c:?}");
        assert_eq!(
            (c.expected_coefficient.clone(), c.expected_exponent),
            (q(6), ExpVector::new(9, 3, 1))
        );
        let c = verify_q_asymptotics(0, 0, 0, &two);
        assert!(c.pass);
        assert_eq!(
            (c.expected_coefficient.clone(), c.expected_exponent),
            (q(18), ExpVector::new(5, 3, 1))
        );
    }

    #[test]
    fn homomorphism_route_matches_direct_substitution() {
        for r in [Regime::one(), Regime::two()] {
            for (n, m, k) in [(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 0, 0)] {
                let direct = substitute_regime(&q_poly(n, m, k), &r).unwrap();
                assert_eq!(direct, q_under_regime(n, m, k, &r));
            }
        }
    }

    #[test]
    fn p2_power_second_order_in_regime_one() {
        let r = Regime::one();
        let y = y();
        let p2 = crate::poly::p2(&y[..3]).unwrap();
        for n in 1..=5u32 {
            let e = substitute_regime(&p2.pow(n), &r).unwrap();
            let merged = e.merged_terms(&r);
            let pow2 = q(1i64 << n);
            assert_eq!(merged[0].coefficient, pow2);
            assert_eq!(
                merged[0].exponents,
                vec![ExpVector::new(2 * n as i64, 0, 0)]
            );
            assert_eq!(merged[1].coefficient, -(q(n as i64) * &pow2));
            assert_eq!(
                merged[1].exponents,
                vec![ExpVector::new(2 * n as i64 - 1, 1, 0)]
            );
        }
    }

    #[test]
    fn exponent_rendering() {
        assert_eq!(ExpVector::new(6, 2, 1).to_string(), "6a+2b+c");
        assert_eq!(ExpVector::new(0, -1, 0).to_string(), "-b");
        assert_eq!(ExpVector::ZERO.to_string(), "0");
    }
}
