//! Circle geometry for best positions on a 2π-periodic landscape.
//!
//! Best positions live in a window `[r, r + 2π)` fixed per run. Particle
//! positions are never wrapped.

use std::f64::consts::{PI, TAU};

/// The unique `y ∈ [r, r + 2π)` with `y ≡ x (mod 2π)`.
pub fn wrap_into_window(x: f64, r: f64) -> f64 {
    let y = r + (x - r).rem_euclid(TAU);
    if y >= r + TAU {
        r
    } else {
        y
    }
}

/// Length of the shorter arc between `a` and `b`.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let rem = (a - b).abs() % TAU;
    rem.min(TAU - rem)
}

/// Weighted average `(c1·p + c2·g) / (c1 + c2)`.
pub fn attractor_linear(p: f64, g: f64, c1: f64, c2: f64) -> f64 {
    (c1 * p + c2 * g) / (c1 + c2)
}

/// Weighted average of `p` and `g` taken along the shorter arc, returned in
/// the window `[r, r + 2π)`.
///
/// When the points are more than π apart the smaller one is lifted by 2π
/// before averaging. At `c1 = c2` this is the midpoint of the minor arc.
/// A separation of exactly π is treated as the near case. Inputs are
/// wrapped into the window first, so shifting either by a multiple of 2π
/// does not move the result.
pub fn attractor_periodic(p: f64, g: f64, c1: f64, c2: f64, r: f64) -> f64 {
    let (p, g) = (wrap_into_window(p, r), wrap_into_window(g, r));
    if (p - g).abs() <= PI {
        return attractor_linear(p, g, c1, c2);
    }
    let (p, g) = if p < g { (p + TAU, g) } else { (p, g + TAU) };
    wrap_into_window(attractor_linear(p, g, c1, c2), r)
}

/// Amplitude floor `m · |p − g| / 2`.
pub fn threshold_amplitude_linear(p: f64, g: f64, m: f64) -> f64 {
    (p - g).abs() / 2.0 * m
}

/// Amplitude floor `m · d / 2` where `d` is the wrapped distance between
/// `p` and `g`. Lies in `[0, π·m/2]`.
pub fn threshold_amplitude(p: f64, g: f64, m: f64) -> f64 {
    circular_distance(p, g) / 2.0 * m
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    #[test]
    fn wrap_examples() {
        assert!((wrap_into_window(7.0, 0.0) - (7.0 - TAU)).abs() < EPS);
        assert!((wrap_into_window(7.0, 0.0) - 0.716_814_692_820_413_5).abs() < EPS);
        assert_eq!(wrap_into_window(1.0, 0.0), 1.0);
        let y = wrap_into_window(-0.5, 0.2);
        assert!((y - 5.783_185_307_179_586).abs() < EPS);
        assert!((0.2..0.2 + TAU).contains(&y));
    }

    #[test]
    fn wrap_upper_edge_stays_in_window() {
        let r = 0.3;
        for x in [r + TAU, r - TAU, r + 3.0 * TAU, r + TAU - 1e-17] {
            let y = wrap_into_window(x, r);
            assert!(y >= r && y < r + TAU, "{x} -> {y}");
        }
    }

    #[test]
    fn attractor_examples() {
        assert_eq!(attractor_periodic(1.0, 1.0, 1.0, 1.0, 0.0), 1.0);
        assert_eq!(attractor_periodic(1.0, 2.0, 1.0, 1.0, 0.0), 1.5);
        let far = attractor_periodic(0.1, 6.2, 1.0, 1.0, 0.0);
        assert!((far - 0.008_407_346_410_207_24).abs() < EPS, "{far}");
    }

    #[test]
    fn far_case_matches_published_form_at_equal_weights() {
        // ((p + g)/2 + 2π/2 − r) mod 2π + r
        for &(p, g, r) in &[(0.1, 6.2, 0.0), (0.5, 5.0, 0.2), (4.0, 0.3, 0.25)] {
            let published = (((p + g) / 2.0 + PI - r).rem_euclid(TAU)) + r;
            assert!((attractor_periodic(p, g, 1.0, 1.0, r) - published).abs() < EPS);
        }
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(threshold_amplitude(0.7, 0.7, 2.05), 0.0);
        assert!((threshold_amplitude(0.0, PI / 2.0, 2.05) - 1.610_066_234_964_768_7).abs() < EPS);
        assert!((threshold_amplitude(0.1, 6.2, 2.05) - 0.187_764_939_859_076_25).abs() < EPS);
        assert!((threshold_amplitude_linear(0.1, 6.2, 2.0) - 6.1).abs() < EPS);
    }
}
