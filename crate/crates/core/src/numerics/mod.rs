//! Deterministic dense-tensor arithmetic, log-domain reductions, the seeded
//! RNG, and the finite-difference gradient oracle every layer is checked
//! against.

mod rng;
mod tensor;

pub use rng::Rng;
pub use tensor::{matmul, matvec, matvec_t, outer_acc, Tensor};

use crate::error::{Error, Result};

/// log(exp(a) + exp(b)) with -inf as the additive identity.
pub fn logadd(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// log sum exp over a slice, max-subtracted for stability.
/// Returns -inf iff every input is -inf.
pub fn logsumexp(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::Domain("logsumexp of empty input".into()));
    }
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    let sum: f64 = values.iter().map(|v| (v - m).exp()).sum();
    Ok(m + sum.ln())
}

/// Central-difference gradient of a scalar function of a parameter tensor:
/// g_i = (f(p + eps e_i) - f(p - eps e_i)) / (2 eps).
pub fn finite_diff_grad<F>(mut f: F, params: &Tensor, eps: f64) -> Result<Tensor>
where
    F: FnMut(&Tensor) -> Result<f64>,
{
    assert!(eps > 0.0, "finite_diff_grad: eps must be positive");
    let mut grad = Tensor::zeros(params.shape());
    let mut probe = params.clone();
    for i in 0..params.numel() {
        let orig = probe.data()[i];
        probe.data_mut()[i] = orig + eps;
        let fp = f(&probe)?;
        probe.data_mut()[i] = orig - eps;
        let fm = f(&probe)?;
        probe.data_mut()[i] = orig;
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::Domain(format!(
                "finite_diff_grad: non-finite objective at element {i} ({fp}, {fm})"
            )));
        }
        grad.data_mut()[i] = (fp - fm) / (2.0 * eps);
    }
    Ok(grad)
}

/// Relative L2 error between two same-shaped gradients, the metric used by
/// every gradient check in the crate.
pub fn rel_err(a: &Tensor, b: &Tensor) -> f64 {
    assert_eq!(a.shape(), b.shape());
    let mut diff = 0.0;
    for (x, y) in a.data().iter().zip(b.data()) {
        diff += (x - y) * (x - y);
    }
    let denom = a.l2_norm().max(b.l2_norm()).max(1e-12);
    diff.sqrt() / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn logsumexp_pair_of_zeros_is_ln2() {
        let v = logsumexp(&[0.0, 0.0]).unwrap();
        assert!((v - 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn logsumexp_neg_inf_is_absorbing() {
        let v = logsumexp(&[f64::NEG_INFINITY, 3.5]).unwrap();
        assert!((v - 3.5).abs() < 1e-12);
        assert_eq!(
            logsumexp(&[f64::NEG_INFINITY, f64::NEG_INFINITY]).unwrap(),
            f64::NEG_INFINITY
        );
    }

    #[test]
    fn logsumexp_does_not_overflow() {
        let v = logsumexp(&[1000.0, 1000.0]).unwrap();
        assert!((v - (1000.0 + 2.0f64.ln())).abs() < 1e-9);
    }

    #[test]
    fn logsumexp_empty_is_domain_error() {
        assert!(logsumexp(&[]).is_err());
    }

    #[test]
    fn logadd_matches_logsumexp() {
        let a = logadd(-1.25, 0.5);
        let b = logsumexp(&[-1.25, 0.5]).unwrap();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn finite_diff_on_square() {
        let p = Tensor::from_vec(&[1], vec![3.0]).unwrap();
        let g = finite_diff_grad(|t| Ok(t.data()[0] * t.data()[0]), &p, 1e-5).unwrap();
        assert!((g.data()[0] - 6.0).abs() < 1e-6);
    }

    #[test]
    fn finite_diff_on_constant_is_zero() {
        let p = Tensor::from_vec(&[4], vec![1.0, -2.0, 0.5, 9.0]).unwrap();
        let g = finite_diff_grad(|_| Ok(42.0), &p, 1e-5).unwrap();
        assert!(g.data().iter().all(|&v| v == 0.0));
    }

    proptest! {
        // logsumexp(v + c) == logsumexp(v) + c
        #[test]
        fn logsumexp_shift_invariance(
            v in proptest::collection::vec(-50.0f64..50.0, 1..12),
            c in -100.0f64..100.0,
        ) {
            let base = logsumexp(&v).unwrap();
            let shifted: Vec<f64> = v.iter().map(|x| x + c).collect();
            let got = logsumexp(&shifted).unwrap();
            prop_assert!((got - (base + c)).abs() < 1e-12);
        }

        #[test]
        fn matmul_identity_property(n in 1usize..6, vals in proptest::collection::vec(-10.0f64..10.0, 36)) {
            let a = Tensor::from_vec(&[n, n], vals[..n*n].to_vec()).unwrap();
            let prod = matmul(&a, &Tensor::identity(n)).unwrap();
            prop_assert_eq!(prod, a);
        }
    }
}
