use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsdUnits {
    /// m⁴/Hz, for `S_x²`.
    MetersFourthPerHz,
    /// W²/Hz, for the detected optical power.
    WattsSquaredPerHz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sidedness {
    TwoSided,
    /// Positive frequencies only, with `ω > 0` values doubled.
    OneSided,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSeries {
    /// Strictly increasing [rad/s].
    pub omega_axis: Vec<f64>,
    pub values: Vec<f64>,
    pub units: PsdUnits,
    pub sidedness: Sidedness,
}

impl SpectrumSeries {
    pub(crate) fn new(omega_axis: Vec<f64>, values: Vec<f64>, units: PsdUnits) -> Self {
        debug_assert_eq!(omega_axis.len(), values.len());
        Self {
            omega_axis,
            values,
            units,
            sidedness: Sidedness::TwoSided,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Folds a two-sided spectrum onto `ω >= 0` by doubling the
    /// positive-frequency values; `ω = 0` is kept as is.
    pub fn to_one_sided(&self) -> SpectrumSeries {
        if self.sidedness == Sidedness::OneSided {
            return self.clone();
        }
        let (omega_axis, values) = self
            .omega_axis
            .iter()
            .zip(&self.values)
            .filter(|(w, _)| **w >= 0.0)
            .map(|(w, v)| (*w, if *w > 0.0 { 2.0 * v } else { *v }))
            .unzip();
        SpectrumSeries {
            omega_axis,
            values,
            units: self.units,
            sidedness: Sidedness::OneSided,
        }
    }

    /// Trapezoidal `∫ S dω / 2π` over the axis.
    pub fn integrate(&self) -> f64 {
        let terms: Vec<f64> = self
            .omega_axis
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(w, v)| 0.5 * (v[0] + v[1]) * (w[1] - w[0]))
            .collect();
        crate::sum::pairwise_sum(&terms) / std::f64::consts::TAU
    }

    /// Linear interpolation at `omega`; `None` outside the axis.
    pub fn value_at(&self, omega: f64) -> Option<f64> {
        let axis = &self.omega_axis;
        if axis.is_empty() || omega < axis[0] || omega > *axis.last()? {
            return None;
        }
        let i = axis.partition_point(|w| *w < omega);
        if axis[i] == omega {
            return Some(self.values[i]);
        }
        let t = (omega - axis[i - 1]) / (axis[i] - axis[i - 1]);
        Some(self.values[i - 1] + t * (self.values[i] - self.values[i - 1]))
    }
}

pub(crate) fn check_axis(axis: &[f64]) -> Result<()> {
    if axis.is_empty() {
        return Err(Error::invalid("frequency axis", "axis is empty"));
    }
    if axis.iter().any(|w| !w.is_finite()) || axis.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::invalid("frequency axis", "axis must be finite and strictly increasing"));
    }
    Ok(())
}

/// `n` evenly spaced points on `[min, max]`.
pub fn linear_axis(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 || !(max > min) {
        return Err(Error::invalid(
            "frequency axis",
            format!("need n >= 2 and max > min (got {min}:{max}:{n})"),
        ));
    }
    let step = (max - min) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| if i + 1 == n { max } else { min + step * i as f64 })
        .collect())
}

/// 2048 points on `[0, 6 ω_m]`, resolving the mechanical linewidth for
/// `Q_m` up to about 1e5.
pub fn default_axis(omega_m: f64) -> Vec<f64> {
    linear_axis(0.0, 6.0 * omega_m, 2048).expect("omega_m > 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_sided_doubles_positive_values() {
        let s = SpectrumSeries::new(
            vec![-1.0, 0.0, 1.0, 2.0],
            vec![3.0, 4.0, 5.0, 6.0],
            PsdUnits::MetersFourthPerHz,
        );
        let o = s.to_one_sided();
        assert_eq!(o.omega_axis, vec![0.0, 1.0, 2.0]);
        assert_eq!(o.values, vec![4.0, 10.0, 12.0]);
        assert_eq!(o.sidedness, Sidedness::OneSided);
    }

    #[test]
    fn axis_validation() {
        assert!(check_axis(&[0.0, 1.0, 1.0]).is_err());
        assert!(check_axis(&[]).is_err());
        assert!(linear_axis(1.0, 0.0, 10).is_err());
        let a = linear_axis(0.0, 1.0, 11).unwrap();
        assert_eq!(a.len(), 11);
        assert_eq!(a[10], 1.0);
        check_axis(&a).unwrap();
    }

    #[test]
    fn interpolation() {
        let s = SpectrumSeries::new(vec![0.0, 2.0], vec![1.0, 3.0], PsdUnits::WattsSquaredPerHz);
        assert_eq!(s.value_at(1.0), Some(2.0));
        assert_eq!(s.value_at(2.0), Some(3.0));
        assert_eq!(s.value_at(3.0), None);
    }
}
