use crate::error::{Error, Result};

/// Physicists' Hermite polynomial Hₙ(y) by the recurrence
/// Hₙ₊₁ = 2y·Hₙ − 2n·Hₙ₋₁.
pub fn hermite(n: usize, y: f64) -> Result<f64> {
    let mut prev = 1.0_f64;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * y;
    for k in 1..n {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    if cur.is_finite() {
        Ok(cur)
    } else {
        Err(Error::Overflow { what: "hermite", x: y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(hermite(0, 1.7).unwrap(), 1.0);
        assert_eq!(hermite(1, 2.5).unwrap(), 5.0);
        assert_eq!(hermite(3, 1.0).unwrap(), -4.0);
    }

    #[test]
    fn explicit_polynomials() {
        for i in 0..40 {
            let y = -3.0 + 0.15 * i as f64;
            let y2 = y * y;
            let h4 = 16.0 * y2 * y2 - 48.0 * y2 + 12.0;
            let h5 = 32.0 * y2 * y2 * y - 160.0 * y2 * y + 120.0 * y;
            assert!((hermite(4, y).unwrap() - h4).abs() < 1e-11 * h4.abs().max(1.0));
            assert!((hermite(5, y).unwrap() - h5).abs() < 1e-11 * h5.abs().max(1.0));
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(hermite(400, 1e3).is_err());
    }
}
