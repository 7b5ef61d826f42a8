//! Flat JSON parameter documents.

use std::path::Path;

use serde::Deserialize;

use crate::{MaterialError, MaterialScales};

/// Raw document layout. Unknown keys are rejected so that typos in
/// parameter names cannot silently fall back to defaults.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    mu_e: f64,
    lambda_e: f64,
    mu_micro: f64,
    lambda_micro: f64,
    #[serde(default)]
    mu_c: f64,
    mu: f64,
    #[serde(rename = "Lc")]
    lc: f64,
    #[serde(default)]
    a1: f64,
    #[serde(default)]
    a2: f64,
    #[serde(default)]
    a3: f64,
    #[serde(default = "default_h")]
    h: f64,
}

fn default_h() -> f64 {
    1.0
}

/// A validated parameter document: the material scales plus the plate
/// thickness carried alongside them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    /// Material scales described by the document.
    pub scales: MaterialScales,
    /// Plate thickness.
    pub h: f64,
}

/// Parses and validates a flat JSON parameter document.
///
/// Required keys: `mu_e`, `lambda_e`, `mu_micro`, `lambda_micro`, `mu`,
/// `Lc`. Optional keys with defaults: `mu_c` (0), `a1`, `a2`, `a3` (0) and
/// `h` (1). Any other key is an error.
///
/// # Errors
///
/// Returns [`MaterialError::Parse`] for malformed documents or unknown
/// keys, and the validation errors of [`MaterialScales::validate`] for
/// inadmissible values.
pub fn load_params_str(text: &str) -> Result<ParamSet, MaterialError> {
    let raw: RawParams =
        serde_json::from_str(text).map_err(|e| MaterialError::Parse(e.to_string()))?;
    let scales = MaterialScales {
        mu_e: raw.mu_e,
        lambda_e: raw.lambda_e,
        mu_micro: raw.mu_micro,
        lambda_micro: raw.lambda_micro,
        mu_c: raw.mu_c,
        mu: raw.mu,
        lc: raw.lc,
        a1: raw.a1,
        a2: raw.a2,
        a3: raw.a3,
    };
    scales.validate()?;
    if raw.h <= 0.0 || !raw.h.is_finite() {
        return Err(MaterialError::InvalidArgument(format!(
            "thickness h must be positive, got {}",
            raw.h
        )));
    }
    Ok(ParamSet { scales, h: raw.h })
}

/// Reads a parameter document from a file path, see [`load_params_str`].
///
/// # Errors
///
/// Adds an I/O failure case to the errors of [`load_params_str`].
pub fn load_params_file(path: &Path) -> Result<ParamSet, MaterialError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| MaterialError::Parse(format!("{}: {e}", path.display())))?;
    load_params_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn parses_complete_document() {
        let doc = r#"{
            "mu_e": 1.0, "lambda_e": 0.5, "mu_micro": 2.0, "lambda_micro": 1.0,
            "mu_c": 0.1, "mu": 1.0, "Lc": 0.25, "a1": 2.0, "a2": 1.0, "a3": 0.5, "h": 1.0
        }"#;
        let p = load_params_str(doc).unwrap();
        assert_relative_eq!(p.scales.lc, 0.25, max_relative = 1e-15);
        assert_relative_eq!(p.h, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn optional_keys_default() {
        let doc = r#"{"mu_e": 1, "lambda_e": 0, "mu_micro": 1, "lambda_micro": 0, "mu": 1, "Lc": 1}"#;
        let p = load_params_str(doc).unwrap();
        assert_relative_eq!(p.scales.mu_c, 0.0);
        assert_relative_eq!(p.scales.a1, 0.0);
        assert_relative_eq!(p.h, 1.0);
    }

    #[test]
    fn rejects_unknown_key() {
        let doc = r#"{"mu_e": 1, "lambda_e": 0, "mu_micro": 1, "lambda_micro": 0, "mu": 1, "Lc": 1, "nu": 0.3}"#;
        assert!(matches!(load_params_str(doc), Err(MaterialError::Parse(_))));
    }

    #[test]
    fn rejects_inadmissible_modulus() {
        let doc = r#"{"mu_e": -1, "lambda_e": 0, "mu_micro": 1, "lambda_micro": 0, "mu": 1, "Lc": 1}"#;
        assert!(matches!(
            load_params_str(doc),
            Err(MaterialError::DegenerateMaterial(_))
        ));
    }
}
