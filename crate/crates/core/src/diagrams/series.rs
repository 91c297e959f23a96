//! Target dimensions of the graded slices.

use crate::coverage::{touch, Op};
use crate::diagrams::Parity;
use crate::error::Result;

/// `#{(n, m, k) ≥ 0 : 2n + 6m + 4k = L − 9}`, the dimension of
/// `(Δσ₃·ℚ[σ₂, σ₃², σ₄])` in degree `L`.
pub fn odd_target_dim(legs: u32) -> Result<u64> {
    touch(Op::OddTargetDim);
    Parity::Odd.check(legs)?;
    if legs < 9 {
        return Ok(0);
    }
    let rest = (legs - 9) / 2;
    let mut count = 0;
    for m in 0..=rest / 3 {
        count += (rest - 3 * m) as u64 / 2 + 1;
    }
    Ok(count)
}

/// `⌊(n² + 12n)/48⌋ + 1` for even `n`.
pub fn even_closed_form(n: u32) -> Result<u64> {
    touch(Op::EvenClosedForm);
    Parity::Even.check(n)?;
    let n = n as u64;
    Ok((n * n + 12 * n) / 48 + 1)
}

/// Coefficients of `x^shift / ((1−x²)(1−x⁴)(1−x⁶))` up to `x^max_n`.
pub fn hilbert_coefficients(max_n: u32, shift: u32) -> Vec<u64> {
    touch(Op::HilbertCoefficients);
    let len = max_n as usize + 1;
    let mut c = vec![0u64; len];
    if (shift as usize) < len {
        c[shift as usize] = 1;
    }
    // Multiplying by 1/(1 − x^d) is a running sum with stride d.
    for d in [2usize, 4, 6] {
        for i in d..len {
            c[i] += c[i - d];
        }
    }
    c
}
