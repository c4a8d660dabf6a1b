//! Resource vectors and the compound-resource scalarization.
//!
//! The allocator accounts two resource dimensions per allocation epoch:
//! the fraction of antenna elements a task occupies and the fraction of the
//! epoch timeline it consumes. Componentwise addition is the only aggregation
//! the allocator performs; the compound scalar exists purely to rank
//! configurations on a single axis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute slack used when testing whether a demand fits a bound, so that
/// budgets landing exactly on frontier breakpoints are accepted despite
/// floating-point accumulation.
pub const FIT_EPSILON: f64 = 1e-9;

/// Per-epoch resource demand of a task configuration.
///
/// `elements` is the fraction of antenna elements occupied (0..1) and `time`
/// the task duration divided by the allocation-epoch duration (0..1).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ResourceVector {
    pub elements: f64,
    pub time: f64,
}

impl ResourceVector {
    pub const ZERO: Self = Self { elements: 0.0, time: 0.0 };

    pub fn new(elements: f64, time: f64) -> Self {
        Self { elements, time }
    }

    pub fn is_zero(&self) -> bool {
        self.elements == 0.0 && self.time == 0.0
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { elements: self.elements + other.elements, time: self.time + other.time }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { elements: self.elements - other.elements, time: self.time - other.time }
    }

    /// Componentwise maximum.
    pub fn max(&self, other: &Self) -> Self {
        Self { elements: self.elements.max(other.elements), time: self.time.max(other.time) }
    }

    /// Componentwise `self <= bounds`, with [`FIT_EPSILON`] slack.
    pub fn fits_within(&self, bounds: &Self) -> bool {
        self.elements <= bounds.elements + FIT_EPSILON && self.time <= bounds.time + FIT_EPSILON
    }

    pub fn validate(&self) -> Result<()> {
        if self.elements < 0.0 || self.time < 0.0 || !self.elements.is_finite() || !self.time.is_finite()
        {
            return Err(Error::Domain(format!(
                "resource vector components must be finite and nonnegative, got ({}, {})",
                self.elements, self.time
            )));
        }
        Ok(())
    }
}

/// Convex-combination weights collapsing a resource vector to a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompoundWeights {
    pub elements: f64,
    pub time: f64,
}

impl Default for CompoundWeights {
    fn default() -> Self {
        Self { elements: 0.5, time: 0.5 }
    }
}

impl CompoundWeights {
    pub fn new(elements: f64, time: f64) -> Result<Self> {
        let w = Self { elements, time };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        if self.elements < 0.0 || self.time < 0.0 {
            return Err(Error::Domain("compound weights must be nonnegative".into()));
        }
        if ((self.elements + self.time) - 1.0).abs() > 1e-9 {
            return Err(Error::Domain(format!(
                "compound weights must sum to 1, got {}",
                self.elements + self.time
            )));
        }
        Ok(())
    }

    /// Scalar measure of a resource demand: `w_e * elements + w_t * time`.
    ///
    /// Monotone nondecreasing in every component. A negative component is a
    /// domain error.
    pub fn compound(&self, r: &ResourceVector) -> Result<f64> {
        r.validate()?;
        Ok(self.elements * r.elements + self.time * r.time)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compound_linear_combination() {
        let w = CompoundWeights::new(0.5, 0.5).unwrap();
        let c = w.compound(&ResourceVector::new(0.2, 0.4)).unwrap();
        assert!((c - 0.3).abs() < 1e-15);
    }

    #[test]
    fn compound_zero_vector() {
        let w = CompoundWeights::new(0.3, 0.7).unwrap();
        assert_eq!(w.compound(&ResourceVector::ZERO).unwrap(), 0.0);
    }

    #[test]
    fn compound_basis_vector() {
        let w = CompoundWeights::new(0.3, 0.7).unwrap();
        let c = w.compound(&ResourceVector::new(1.0, 0.0)).unwrap();
        assert!((c - 0.3).abs() < 1e-15);
    }

    #[test]
    fn compound_rejects_negative_component() {
        let w = CompoundWeights::default();
        assert!(w.compound(&ResourceVector::new(-0.1, 0.2)).is_err());
    }

    #[test]
    fn weights_must_sum_to_one() {
        assert!(CompoundWeights::new(0.6, 0.6).is_err());
        assert!(CompoundWeights::new(-0.1, 1.1).is_err());
    }

    #[test]
    fn fits_within_allows_exact_breakpoints() {
        let used = ResourceVector::new(0.1 + 0.2, 0.3);
        let bounds = ResourceVector::new(0.30000000000000004, 0.3);
        assert!(used.fits_within(&bounds));
        assert!(ResourceVector::new(0.31, 0.3).fits_within(&bounds) == false);
    }
}
