use std::sync::OnceLock;

/// Default tolerance for numeric geometric residuals.
pub const DEFAULT_EPS: f64 = 1e-9;

static EPS: OnceLock<f64> = OnceLock::new();

/// Geometric tolerance ε. Read once from `TRITILE_EPS`, falling back to [`DEFAULT_EPS`].
///
/// Only coordinate comparisons use ε; angle classes, symbolic lengths and ζ never do.
pub fn eps() -> f64 {
    *EPS.get_or_init(|| {
        std::env::var("TRITILE_EPS")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|e| e.is_finite() && *e > 0.0)
            .unwrap_or(DEFAULT_EPS)
    })
}

/// Snapping radius used to merge coincident vertices (the hash-grid cell size).
pub fn snap_radius() -> f64 {
    10.0 * eps()
}
