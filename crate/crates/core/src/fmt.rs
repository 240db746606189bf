//! Locale-independent number formatting for reports and export files.

/// Formats `x` with at most 17 significant digits such that parsing the text
/// back yields the same `f64` bit pattern. Negative zero prints as `0`.
///
/// Plain decimal is used for magnitudes in `[1e-5, 1e16)`, scientific
/// notation otherwise.
pub fn real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    let a = x.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}
