use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    /// [GeV]
    pub q: f64,
    pub alpha: f64,
}

/// A running coupling sampled at strictly increasing Q.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CouplingCurve {
    pub model_id: String,
    pub samples: Vec<CurveSample>,
}

impl CouplingCurve {
    pub fn new(model_id: impl Into<String>, samples: Vec<CurveSample>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Validation("coupling curve has no samples".into()));
        }
        if let Some(w) = samples.windows(2).find(|w| !(w[1].q > w[0].q)) {
            return Err(Error::Validation(format!(
                "curve abscissae must increase strictly ({} then {})",
                w[0].q, w[1].q
            )));
        }
        Ok(Self {
            model_id: model_id.into(),
            samples,
        })
    }

    pub fn first(&self) -> CurveSample {
        self.samples[0]
    }

    pub fn last(&self) -> CurveSample {
        *self.samples.last().expect("curve is non-empty")
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Linear interpolation in ln Q; `None` outside the sampled range.
    pub fn interpolate(&self, q: f64) -> Option<f64> {
        let first = self.first();
        let last = self.last();
        if !(q >= first.q && q <= last.q) {
            return None;
        }
        let idx = self.samples.partition_point(|s| s.q < q);
        if idx == 0 {
            return Some(first.alpha);
        }
        let (lo, hi) = (self.samples[idx - 1], self.samples[idx]);
        let t = (q.ln() - lo.q.ln()) / (hi.q.ln() - lo.q.ln());
        Some(lo.alpha + t * (hi.alpha - lo.alpha))
    }

    /// Sample with the largest coupling.
    pub fn maximum(&self) -> CurveSample {
        *self
            .samples
            .iter()
            .max_by(|a, b| a.alpha.total_cmp(&b.alpha))
            .expect("curve is non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(q: f64, alpha: f64) -> CurveSample {
        CurveSample { q, alpha }
    }

    #[test]
    fn rejects_unordered_samples() {
        assert!(CouplingCurve::new("x", vec![s(1.0, 0.1), s(1.0, 0.2)]).is_err());
        assert!(CouplingCurve::new("x", vec![]).is_err());
    }

    #[test]
    fn interpolates_in_log_q() {
        let c = CouplingCurve::new("x", vec![s(1.0, 1.0), s(100.0, 3.0)]).unwrap();
        assert!((c.interpolate(10.0).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(c.interpolate(1.0), Some(1.0));
        assert_eq!(c.interpolate(100.0), Some(3.0));
        assert_eq!(c.interpolate(0.5), None);
        assert_eq!(c.maximum().q, 100.0);
    }
}
