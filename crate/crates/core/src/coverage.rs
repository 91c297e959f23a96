//! Lightweight record of which library operations have run in this process.
//!
//! Every public operation of the polynomial, asymptotic and diagram-space
//! layers marks itself on entry. The verifier's coverage self-test resets the
//! table, runs all suites, and asserts nothing was left untouched.

use std::sync::atomic::{AtomicBool, Ordering};

macro_rules! ops {
    ($($name:ident => $label:literal),* $(,)?) => {
        /// A traced library operation.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Op { $($name),* }

        impl Op {
            pub const ALL: &'static [Op] = &[$(Op::$name),*];

            pub fn label(self) -> &'static str {
                match self { $(Op::$name => $label),* }
            }
        }
    };
}

ops! {
    Add => "multipoly::add",
    Mul => "multipoly::mul",
    Scale => "multipoly::scale",
    Substitute => "multipoly::substitute",
    Act => "multipoly::act",
    Symmetrize => "multipoly::symmetrize",
    ElementarySymmetric => "multipoly::elementary_symmetric",
    Discriminant => "multipoly::discriminant",
    P2 => "multipoly::p2",
    P3 => "multipoly::p3",
    P4 => "multipoly::p4",
    QPoly => "multipoly::q_poly",
    DivideExact => "multipoly::divide_exact",
    DegreeSliceMonomials => "multipoly::degree_slice_monomials",
    SubstituteRegime => "asymptotics::substitute_regime",
    LeadingTerm => "asymptotics::leading_term",
    VerifyQAsymptotics => "asymptotics::verify_q_asymptotics",
    YFromX => "diagrams::y_from_x",
    XFromY => "diagrams::x_from_y",
    TetSlice => "diagrams::tet_slice",
    OddTargetDim => "diagrams::odd_target_dim",
    Psi4ImageSlice => "diagrams::psi4_image_slice",
    Eq8SpanSlice => "diagrams::eq8_span_slice",
    TsqOddDim => "diagrams::tsq_odd_dim",
    EvenClosedForm => "diagrams::even_closed_form",
    HilbertCoefficients => "diagrams::hilbert_coefficients",
}

const N_OPS: usize = Op::ALL.len();

#[allow(clippy::declare_interior_mutable_const)]
const UNTOUCHED: AtomicBool = AtomicBool::new(false);
static TOUCHED: [AtomicBool; N_OPS] = [UNTOUCHED; N_OPS];

#[inline]
pub fn touch(op: Op) {
    TOUCHED[op as usize].store(true, Ordering::Relaxed);
}

pub fn reset() {
    for flag in &TOUCHED {
        flag.store(false, Ordering::Relaxed);
    }
}

pub fn touched(op: Op) -> bool {
    TOUCHED[op as usize].load(Ordering::Relaxed)
}

/// Operations that have not run since the last [`reset`].
pub fn untouched() -> Vec<Op> {
    Op::ALL.iter().copied().filter(|&op| !touched(op)).collect()
}
