//! Closed-form Grover rotation.
//!
//! From the uniform start the state stays in the plane spanned by the target
//! and the uniform mix of the non-targets. Each iterate rotates by `2θ` with
//! `sin θ = 1/√N`, so after `k` iterates the target probability is
//! `sin²((2k+1)θ)`.

/// `arcsin(1/√N)`.
pub fn grover_angle(dim: usize) -> f64 {
    assert!(dim >= 1, "dimension must be positive");
    (1.0 / (dim as f64).sqrt()).asin()
}

/// Target probability after `iterations` Grover iterates on `dim` states.
pub fn closed_form_probability(dim: usize, iterations: usize) -> f64 {
    if dim == 1 {
        return 1.0;
    }
    let theta = grover_angle(dim);
    ((2 * iterations + 1) as f64 * theta).sin().powi(2)
}

/// Target amplitude (real, signed) after `iterations` iterates.
pub fn closed_form_amplitude(dim: usize, iterations: usize) -> f64 {
    if dim == 1 {
        return 1.0;
    }
    ((2 * iterations + 1) as f64 * grover_angle(dim)).sin()
}

/// Iteration count maximizing the closed-form probability over
/// `k ≤ ceil(π / 4θ)`. Near-ties (within 1e-12) go to the smaller `k`, so
/// N = 2, where every `k` gives 1/2, yields 0.
pub fn optimal_iterations(dim: usize) -> usize {
    if dim == 1 {
        return 0;
    }
    let limit = (std::f64::consts::FRAC_PI_4 / grover_angle(dim)).ceil() as usize;
    let mut best = 0;
    let mut best_p = closed_form_probability(dim, 0);
    for k in 1..=limit {
        let p = closed_form_probability(dim, k);
        if p > best_p + 1e-12 {
            best = k;
            best_p = p;
        }
    }
    best
}
