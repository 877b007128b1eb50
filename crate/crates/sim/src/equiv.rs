use crate::kernels::C64;
use crate::matrix::UnitaryMatrix;
use crate::{Result, SimError};

/// Result of a global-phase-insensitive matrix comparison.
#[derive(Debug, Clone, Copy)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    /// Unit scalar `phase` with `a ~= phase * b` (1 when no pivot was found).
    pub phase: C64,
    pub max_deviation: f64,
}

/// Tests `a == phase * b` for a single global phase.
///
/// The phase is read off at the first entry (row-major) where
/// `|b[r][c]| > 0.5 / dim`; the report is equivalent iff the residual
/// `max |a - phase * b|` is within `tol` and the recovered phase has unit
/// modulus.
pub fn equiv_up_to_phase(
    a: &UnitaryMatrix,
    b: &UnitaryMatrix,
    tol: f64,
) -> Result<EquivalenceReport> {
    if a.dim() != b.dim() {
        return Err(SimError::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let threshold = 0.5 / a.dim() as f64;
    let pivot = b.entries().find(|&(_, _, v)| v.norm() > threshold);
    let Some((r, c, bv)) = pivot else {
        return Ok(EquivalenceReport {
            equivalent: false,
            phase: C64::new(1.0, 0.0),
            max_deviation: f64::INFINITY,
        });
    };
    let phase = a.get(r, c) / bv;
    let max_deviation = a.max_abs_diff(&b.scaled(phase));
    let equivalent = max_deviation <= tol && (phase.norm() - 1.0).abs() <= 1e-12 + tol;
    Ok(EquivalenceReport {
        equivalent,
        phase,
        max_deviation,
    })
}
