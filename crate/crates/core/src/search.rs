//! Scalar golden-section search used by the numeric oracle and the
//! closed-form bound minimizers.

const INV_PHI: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2

/// Minimum of `f` on `[lo, hi]` to a bracket width of `xtol`.
///
/// Returns `(x_min, f_min)`. Assumes `f` is unimodal on the bracket; on a
/// multimodal bracket it converges to one local minimum.
pub fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > xtol {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Maximum of `f` on `[lo, hi]`; see [`golden_min`].
pub fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, xtol: f64) -> (f64, f64) {
    let (x, neg) = golden_min(|x| -f(x), lo, hi, xtol);
    (x, -neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // x-precision bottoms out at sqrt(eps * f / f''), not at the bracket
    // width; the f-values themselves are machine-exact

    #[test]
    fn finds_parabola_minimum() {
        let (x, fx) = golden_min(|x| (x - 1.25) * (x - 1.25) + 3.0, -10.0, 10.0, 1e-12);
        assert_relative_eq!(x, 1.25, epsilon = 1e-7);
        assert_relative_eq!(fx, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn finds_cosine_maximum() {
        let (x, fx) = golden_max(|x| x.cos(), 1.0, 8.0, 1e-12);
        assert_relative_eq!(x, std::f64::consts::TAU, epsilon = 1e-7);
        assert_relative_eq!(fx, 1.0, epsilon = 1e-12);
    }
}
